"""Shared fixtures.

Reference trees
---------------
star3 / star4 / star5
    Stars with all arm lengths 10; leaf j sits at the end of arm j.

eight_leaf_tree
    The 8-leaf tree used for arm-number tests:

        leaf1 - t - u - leaf2            t = vertex 1, u = vertex 2
                |    \\- leaf3           w = vertex 5 (degree 4)
                w - leaf4                x = vertex 7, y = vertex 10
                | \\- x - leaf5, leaf6
                \\-- y - leaf7, leaf8

    Leaves are numbered 1..8 in the drawing's clockwise order:
    vertex ids [0, 3, 4, 6, 8, 9, 11, 12].
"""

import random

import pytest

from treeplan.tree import Tree


@pytest.fixture(scope="session")
def star3():
    return Tree.star([10.0, 10.0, 10.0])


@pytest.fixture(scope="session")
def star4():
    return Tree.star([10.0, 10.0, 10.0, 10.0])


@pytest.fixture(scope="session")
def star5():
    return Tree.star([10.0, 10.0, 10.0, 10.0, 10.0])


EIGHT_LEAF_EDGES = [
    (0, 1, 2.0),    # leaf1 - t
    (1, 2, 2.0),    # t - u
    (2, 3, 2.0),    # u - leaf2
    (2, 4, 2.0),    # u - leaf3
    (1, 5, 3.0),    # t - w   (w has degree 4)
    (5, 6, 1.5),    # w - leaf4
    (5, 7, 2.0),    # w - x
    (7, 8, 1.5),    # x - leaf5
    (7, 9, 1.5),    # x - leaf6
    (5, 10, 1.0),   # w - y
    (10, 11, 1.5),  # y - leaf7
    (10, 12, 1.5),  # y - leaf8
]


@pytest.fixture(scope="session")
def eight_leaf_tree():
    return Tree(EIGHT_LEAF_EDGES, leaf_order=[0, 3, 4, 6, 8, 9, 11, 12])


@pytest.fixture
def rng():
    return random.Random(20260810)

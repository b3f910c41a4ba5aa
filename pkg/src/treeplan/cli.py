"""Command line surface: plan, classify, cutlocus, oracle, audits, render.

All commands read the tree from ``--tree FILE`` (JSON) and instances
either inline (``--a / --b`` as JSON configurations) or from
``--instance FILE`` holding ``{"a": ..., "b": ...}``.  Outputs are JSON on
stdout (or ``--out``); ``render`` writes SVG.  Exit codes: 0 success, 2
validation error, 3 infeasible input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .tree import Tree, ArgumentError, TreeStructureError, ShapeError
from .config import Metric, OrderedConfig, UnorderedConfig, path_length
from .star import plan as plan_star, classify, InfeasibleConfigError
from .unordered import plan_any, hull_classify, assign_eset
from .oracle import oracle_shortest
from .audits import (
    audit_partition_ordered, audit_partition_unordered, run_all_continuity,
)
from .render import render_tree, render_chart


def _parser():
    p = argparse.ArgumentParser(prog="treeplan",
                                description="geodesic planning for two "
                                            "robots on a metric tree")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_instance=True):
        sp.add_argument("--tree", required=True, help="tree JSON file")
        sp.add_argument("--metric", choices=["l1", "l2"], default="l2")
        sp.add_argument("--eps", type=float, default=1.0)
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--ordered", action="store_true", default=True)
        g.add_argument("--unordered", dest="ordered", action="store_false")
        sp.add_argument("--out", help="write JSON/SVG here instead of stdout")
        if needs_instance:
            sp.add_argument("--a", help="start configuration JSON")
            sp.add_argument("--b", help="goal configuration JSON")
            sp.add_argument("--instance", help="file with {'a':..., 'b':...}")

    for name in ("plan", "classify", "cutlocus"):
        common(sub.add_parser(name))
    sp = sub.add_parser("oracle")
    common(sp)
    sp.add_argument("--h", type=float, required=True, help="grid pitch")
    sp.add_argument("--margin", type=float, default=0.0,
                    help="extra separation demanded of oracle grid nodes")
    sp = sub.add_parser("audit-partition")
    common(sp, needs_instance=False)
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("audit-continuity")
    sp.add_argument("--eps", type=float, default=1.0)
    sp.add_argument("--out")
    sp = sub.add_parser("render")
    common(sp)
    return p


def _load_tree(path) -> Tree:
    with open(path) as fh:
        return Tree.from_json(json.load(fh))


def _load_instance(tree, args, ordered):
    if args.instance:
        with open(args.instance) as fh:
            blob = json.load(fh)
        a_obj, b_obj = blob["a"], blob["b"]
    else:
        if not args.a or not args.b:
            raise ValueError("provide --a and --b or --instance")
        a_obj, b_obj = json.loads(args.a), json.loads(args.b)

    def cfg(obj):
        p1 = tree.point_from_json(obj["p1"])
        p2 = tree.point_from_json(obj["p2"])
        return OrderedConfig(p1, p2) if ordered else UnorderedConfig.of(p1, p2)

    return cfg(a_obj), cfg(b_obj)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text + ("\n" if not text.endswith("\n") else ""))


def _dump(args, obj):
    _emit(args, json.dumps(obj, indent=2, sort_keys=True))


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except InfeasibleConfigError as exc:
        print(f"infeasible input: {exc}", file=sys.stderr)
        return 3
    except (ArgumentError, TreeStructureError, ShapeError, ValueError,
            KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _run(args) -> int:
    cmd = args.command
    if cmd == "audit-continuity":
        reports = run_all_continuity(eps=args.eps)
        _dump(args, [r.to_json() for r in reports])
        return 0

    tree = _load_tree(args.tree)
    metric = Metric.parse(getattr(args, "metric", "l2"))
    ordered = getattr(args, "ordered", True)
    if not ordered and metric is Metric.L2 and cmd in ("plan", "cutlocus",
                                                       "audit-partition"):
        print("error: unordered planning supports l1 only (the unordered "
              "space is not geodesically complete in l2)", file=sys.stderr)
        return 2

    if cmd == "audit-partition":
        if ordered:
            rep = audit_partition_ordered(tree, args.eps, metric, args.n,
                                          args.seed)
        else:
            rep = audit_partition_unordered(tree, args.n, args.seed)
        _dump(args, rep.to_json())
        return 0

    a, b = _load_instance(tree, args, ordered)

    if cmd == "plan":
        if ordered:
            res = plan_star(tree, args.eps, a, b, metric)
            out = res.to_json()
            out["validated"] = _validate_plan(tree, res.chosen.path,
                                              res.chosen.length(metric), metric,
                                              (a.p1, a.p2), (b.p1, b.p2),
                                              args.eps)
        else:
            res = plan_any(tree, a, b)
            out = res.to_json()
            out["validated"] = _validate_plan(tree, res.path, res.l1_length,
                                              Metric.L1, None, None, 0.0)
        _dump(args, out)
        return 0

    if cmd == "classify":
        if ordered:
            cls = classify(tree, args.eps, a, b)
            _dump(args, {"class": cls.name, "arms_occupied": list(cls.arms_occupied),
                         "orientation": cls.orientation,
                         "forced_particle": cls.forced_particle})
        else:
            d = hull_classify(tree, a, b)
            out = d.to_json()
            out["eset"] = assign_eset(d) if not tree.is_interval() else "interval"
            _dump(args, out)
        return 0

    if cmd == "cutlocus":
        res = plan_star(tree, args.eps, a, b, metric)
        _dump(args, {"in_cut_locus": res.in_cut_locus,
                     "class": res.class_name,
                     "candidate_lengths": sorted(
                         c.length(metric) for c in res.all_candidates)})
        return 0

    if cmd == "oracle":
        orc = oracle_shortest(tree, args.eps if ordered else 0.0, a, b,
                              metric, ordered, args.h, margin=args.margin)
        if ordered:
            planner_len = plan_star(tree, args.eps, a, b, metric).chosen.length(metric)
        else:
            planner_len = plan_any(tree, a, b).l1_length
        _dump(args, {"length": orc.length, "planner_length": planner_len,
                     "gap": orc.length - planner_len,
                     "config_nodes": orc.nodes, "snap_error": orc.snap_error,
                     "runtime_s": orc.runtime, "h": args.h})
        return 0

    if cmd == "render":
        if ordered:
            res = plan_star(tree, args.eps, a, b, metric)
            dots = [(a.p1, "B"), (a.p2, "B"), (b.p1, "W"), (b.p2, "W")]
            svg = render_tree(tree, dots=dots, path=res.chosen.path)
        else:
            res = plan_any(tree, a, b)
            dots = [(d.point, d.color) for d in res.diagram.dots]
            svg = render_tree(tree, dots=dots, path=res.path)
        _emit(args, svg)
        return 0

    raise ValueError(f"unknown command {cmd}")


def _validate_plan(tree, path, claimed_len, metric, start, end, eps):
    """Re-validate an emitted plan: endpoints, feasibility, length."""
    from .config import min_separation
    ok_len = abs(path_length(path, metric) - claimed_len) <= 1e-12 * max(
        1.0, claimed_len)
    ok_sep = min_separation(path) >= eps - 1e-9 if eps > 0 else \
        min_separation(path) > 0
    ok_ends = True
    if start is not None:
        ok_ends = path.start == start and path.end == end
    return bool(ok_len and ok_sep and ok_ends)


if __name__ == "__main__":
    sys.exit(main())

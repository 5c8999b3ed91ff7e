"""Command line front end.

Every command prints one JSON document (sorted keys) on standard output.
Exit codes: 0 computed / true, 1 computed / false (predicate commands),
2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import equivalences as eq
from .errors import InputError, InvariantViolation
from .flow import apply_positive_move, weight_group
from .gsft import (augmentation_matrix, extension_action, graph_action_from_json, graph_action_is_inert,
                   graph_action_to_json, is_inert, quotient_presentation, zeta_equal, extension_matrix)
from .jsonio import (dumps, group_ring_document, load_json, read_group, read_group_ring_matrix, read_int_matrix,
                     require)
from .matrices import GroupRingMatrix, IntMatrix, _thaw_label, reciprocal_charpoly
from .periodic import DEFAULT_BUDGET, brute_force_census, census, kim_roush_condition
from .selftest import run_selftest

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(json.dumps({"error": message, "kind": "usage"}, sort_keys=True))
        raise SystemExit(EXIT_INPUT)


def _label(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _emit(obj, code=EXIT_TRUE):
    print(dumps(obj))
    return code


def cmd_augment(args):
    b = read_group_ring_matrix(load_json(args.input))
    return _emit({"augmentation": augmentation_matrix(b).to_json()})


def cmd_extend(args):
    b = read_group_ring_matrix(load_json(args.input))
    action = extension_action(b)
    doc = graph_action_to_json(action)
    return _emit({"extension": doc["adjacency"], "group": doc["group"], "vertex_action": doc["vertex_action"]})


def cmd_inert(args):
    data = load_json(args.input)
    if isinstance(data, dict) and "vertex_action" in data:
        cert = graph_action_is_inert(graph_action_from_json(data))
    else:
        cert = is_inert(read_group_ring_matrix(data))
    return _emit(cert.to_json(), EXIT_TRUE if cert.inert else EXIT_FALSE)


def cmd_zeta_equal(args):
    b = read_group_ring_matrix(load_json(args.input))
    same = zeta_equal(b)
    return _emit({"zeta_equal": same,
                  "augmentation_det_I_minus_tA": list(reciprocal_charpoly(augmentation_matrix(b)).coeffs),
                  "extension_det_I_minus_tA": list(reciprocal_charpoly(extension_matrix(b)).coeffs)},
                 EXIT_TRUE if same else EXIT_FALSE)


def cmd_quotient(args):
    action = graph_action_from_json(load_json(args.input))
    b, relabel = quotient_presentation(action)
    doc = group_ring_document(b)
    doc["relabeling"] = [[_thaw_label(v), [_thaw_label(rep), g]] for v, (rep, g) in relabel.items()]
    doc["augmentation"] = augmentation_matrix(b).to_json()
    return _emit(doc)


def cmd_census(args):
    a = read_int_matrix(load_json(args.input))
    result = brute_force_census(a, args.max, args.budget) if args.brute_force else census(a, args.max)
    if args.format == "csv":
        sys.stdout.write(result.to_csv())
        return EXIT_TRUE
    return _emit(result.to_json())


def cmd_kimroush(args):
    a = read_int_matrix(load_json(args.input))
    verdict = kim_roush_condition(a, args.p, args.max, args.mode)
    return _emit(verdict.to_json(), EXIT_TRUE if verdict.passed else EXIT_FALSE)


def _read_pair(data, first, second):
    require(data, first, second, "witness")
    group = read_group(data) if "group" in data else None
    if group is None:
        x, y = IntMatrix.from_json(data[first]), IntMatrix.from_json(data[second])
    else:
        x = GroupRingMatrix.from_json(group, data[first])
        y = GroupRingMatrix.from_json(group, data[second])
    return group, x, y


def cmd_verify_se(args):
    data = load_json(args.input)
    group, a, b = _read_pair(data, "A", "B")
    w = eq.SEWitness.from_json(data["witness"], group)
    report = eq.verify_se(a, b, w)
    return _emit(report.to_json(), EXIT_TRUE if report.valid else EXIT_FALSE)


def cmd_se_aug_ext(args):
    b = read_group_ring_matrix(load_json(args.input))
    w = eq.se_between_augmentation_and_extension(b)
    return _emit({"A": augmentation_matrix(b).to_json(), "B": extension_matrix(b).to_json(),
                  "witness": w.to_json()})


def cmd_lift_se(args):
    data = load_json(args.input)
    group = read_group(data)
    b = read_group_ring_matrix(data, "B", group)
    c = read_group_ring_matrix(data, "C", group)
    require(data, "witness")
    w = eq.SEWitness.from_json(data["witness"])
    lifted = eq.se_from_inert_pair(b, c, w)
    return _emit({"group": group.to_spec(), "A": b.to_json(), "B": c.to_json(), "witness": lifted.to_json()})


def cmd_descend_se(args):
    data = load_json(args.input)
    require(data, "subgroup")
    group, a, b = _read_pair(data, "A", "B")
    if group is None:
        raise InputError("descend-se needs a 'group'")
    w = eq.SEWitness.from_json(data["witness"], group)
    result = eq.descend_se_to_subgroup(a, b, data["subgroup"], w)
    return _emit({"g": result.element.index, "conjugated_B": result.conjugated.to_json(),
                  "witness": result.witness.to_json()})


def cmd_weight(args):
    b = read_group_ring_matrix(load_json(args.input))
    w = weight_group(b, None if args.vertex is None else _label(args.vertex))
    return _emit({"subgroup": list(w.subgroup), "base": _thaw_label(w.base)})


def cmd_posmove(args):
    b = read_group_ring_matrix(load_json(args.input))
    moved = apply_positive_move(b, args.side, _label(args.i), _label(args.j), args.g)
    return _emit(group_ring_document(moved))


def cmd_selftest(args):
    results = run_selftest(quick=args.quick, golden_dir=args.golden_dir)
    ok = all(r.ok for r in results)
    return _emit({"ok": ok, "checks": [r.to_json() for r in results]}, EXIT_TRUE if ok else EXIT_FALSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gsft", description="Exact computations with free G-SFTs over Z+[G].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, with_input=True):
        p = sub.add_parser(name, help=help_text)
        if with_input:
            p.add_argument("input", help="JSON file, '-' for stdin, or inline JSON")
        p.set_defaults(func=fn)
        return p

    add("augment", cmd_augment, "augmentation matrix of B")
    add("extend", cmd_extend, "extension matrix of B with its group action")
    add("inert", cmd_inert, "inertness certificate for B or for a graph action")
    add("zeta-equal", cmd_zeta_equal, "compare zeta functions of extension and augmentation")
    add("quotient", cmd_quotient, "group ring presentation of a free graph action")
    p = add("census", cmd_census, "periodic point counts of an edge shift")
    p.add_argument("--max", type=int, default=24, help="horizon N (default 24)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--brute-force", action="store_true", help="enumerate closed walks instead of traces")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="step cap for --brute-force")
    p = add("kimroush", cmd_kimroush, "Kim-Roush periodic point condition for Z/pZ")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max", type=int, default=24, help="horizon N (default 24)")
    p.add_argument("--mode", choices=["orbits", "points"], default="orbits")
    add("verify-se", cmd_verify_se, "verify a shift equivalence witness")
    add("se-aug-ext", cmd_se_aug_ext, "witness between augmentation and extension of an inert B")
    add("lift-se", cmd_lift_se, "lift a Z+ witness between augmentations to Z+[G]")
    add("descend-se", cmd_descend_se, "move a Z+[G] witness down to a normal subgroup")
    p = add("weight", cmd_weight, "weight group of an irreducible matrix")
    p.add_argument("--vertex", default=None, help="base vertex label (default: first)")
    p = add("posmove", cmd_posmove, "apply an elementary positive equivalence move")
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--i", required=True, help="row label")
    p.add_argument("--j", required=True, help="column label")
    p.add_argument("--g", type=int, required=True, help="group element index")
    p = add("selftest", cmd_selftest, "run the golden-file suite", with_input=False)
    p.add_argument("--quick", action="store_true", help="reduced random battery")
    p.add_argument("--golden-dir", default=None, help="read golden files from this directory")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}, sort_keys=True))
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(json.dumps({"error": str(exc), "kind": "InvariantViolation"}, sort_keys=True))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: poset-info, hypotheses, classify, equivalent, verify.
Exit codes: 0 ok/equivalent, 1 not equivalent, 2 input error,
3 hypothesis failure, 4 unsupported characteristic.
"""

import argparse
import json
import sys
from pathlib import Path

from .derivations import find_non_inner_additive
from .errors import (
    Char2Unsupported, HypothesisFailed, IncalgError, NotAnInvolution,
    NotConnected, ParseError, SizeLimit,
)
from .fia import IncidenceAlgebra
from .fields import parse_field
from .involutions import (
    check_hypotheses, classify, equivalent, equivalent_inner,
    involution_from_json,
)
from .morphisms import find_non_inner_cocycle
from .posets import Poset, PosetMap

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_CHAR2 = 4


def load_poset(path):
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return Poset.from_json(text)
    return Poset.from_lines(text)


def load_lambda(poset, spec):
    """Inline JSON object, inline a:b,c:d pairs, or a file holding either."""
    text = spec
    if Path(spec).is_file():
        text = Path(spec).read_text()
    text = text.strip()
    if text.startswith("{"):
        try:
            mapping = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad map: {exc}") from exc
    else:
        mapping = {}
        for part in text.split(","):
            src, _, dst = part.partition(":")
            if not dst:
                raise ParseError(f"bad map entry {part!r}")
            mapping[src.strip()] = dst.strip()
    try:
        lam = PosetMap(poset, poset, mapping, anti=True)
    except ParseError:
        raise
    if not lam.is_involution():
        raise ParseError("map is not an order-reversing involution")
    return lam


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def cmd_poset_info(args):
    poset = load_poset(args.poset)
    involutions = poset.involutions()
    payload = {
        "elements": ", ".join(str(x) for x in poset.elements),
        "covers": ", ".join(f"{x}<{y}" for x, y in poset.covers),
        "connected": "yes" if poset.is_connected() else "no",
        "all-comparable": ", ".join(
            sorted(str(x) for x in poset.all_comparable_elements())) or "none",
        "automorphisms": len(poset.automorphisms()),
        "anti-automorphisms": len(poset.anti_automorphisms()),
        "involutions": "; ".join(
            json.dumps(m.to_json(), sort_keys=True) for m in involutions) or "none",
    }
    if not poset.anti_automorphisms():
        payload["note"] = ("no anti-automorphisms: the idealization ring "
                           "admits no involution over any field")
    if args.json:
        payload["automorphism_maps"] = [m.to_json() for m in poset.automorphisms()]
        payload["involution_maps"] = [m.to_json() for m in involutions]
    _emit(payload, args.json)
    return EXIT_OK


def cmd_hypotheses(args):
    poset = load_poset(args.poset)
    field = parse_field(args.field)
    report = check_hypotheses(poset, field)
    alg = IncidenceAlgebra(poset, field)
    payload = {"field": args.field}
    payload["mult_subset_inn"] = report["mult_subset_inn"]
    if not report["mult_subset_inn"]:
        sigma = find_non_inner_cocycle(alg)
        if sigma is not None:
            payload["non_inner_cocycle"] = {
                f"{x},{y}": field.format(v) for (x, y), v in sorted(sigma.items())}
    payload["der_equals_ider"] = report["der_equals_ider"]
    if not report["der_equals_ider"]:
        tau = find_non_inner_additive(alg)
        if tau is not None:
            payload["non_inner_additive_cocycle"] = {
                f"{x},{y}": field.format(v) for (x, y), v in sorted(tau.items())}
    _emit(payload, args.json)
    return EXIT_OK if all(report.values()) else EXIT_HYPOTHESIS


def cmd_classify(args):
    poset = load_poset(args.poset)
    field = parse_field(args.field)
    lam = load_lambda(poset, args.lam)
    result = classify(poset, lam, field, general=args.general)
    payload = result.to_json()
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"mode: {payload['mode']}")
        print(f"fixed points: {', '.join(payload['fixed_points']) or 'none'}")
        print(f"count: {payload['count']}")
        if result.representatives is not None:
            for spec, inv in zip(result.representatives, result.invariants()):
                print(f"  representative: {json.dumps(spec.to_json(), sort_keys=True)}")
                print(f"    invariant: {json.dumps(inv.to_json(), sort_keys=True)}")
        if result.family is not None:
            print(f"family: {json.dumps(result.family, sort_keys=True)}")
    return EXIT_OK


def _load_involution(alg, path):
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad involution file {path}: {exc}") from exc
    try:
        return involution_from_json(alg, obj)
    except IncalgError:
        raise
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad involution object in {path}: {exc}") from exc


def cmd_equivalent(args):
    poset = load_poset(args.poset)
    field = parse_field(args.field)
    alg = IncidenceAlgebra(poset, field)
    s1 = _load_involution(alg, args.inv1)
    s2 = _load_involution(alg, args.inv2)
    verdict = equivalent(s1, s2) if args.general else equivalent_inner(s1, s2)
    if verdict.equivalent and args.check:
        from .idealization import inner_auto, lift_morphism
        from .morphisms import FiaMorphism
        psi = inner_auto(verdict.conjugator)
        target = s2.to_linear()
        if verdict.alpha is not None:
            relabel = lift_morphism(FiaMorphism.induced(alg, verdict.alpha))
            relabel_inv = lift_morphism(
                FiaMorphism.induced(alg, verdict.alpha.inverse()))
            target = relabel.compose(target).compose(relabel_inv)
        assert psi.compose(s1.to_linear()) == target.compose(psi), \
            "witness failed re-verification"
    print(json.dumps(verdict.to_json(), indent=2, sort_keys=True))
    return EXIT_OK if verdict.equivalent else EXIT_NOT_EQUIVALENT


def cmd_verify(args):
    import random

    from .idealization import random_d_unit, random_delem
    poset = load_poset(args.poset)
    field = parse_field(args.field)
    alg = IncidenceAlgebra(poset, field)
    rng = random.Random(20240)
    failures = []

    def check(name, ok):
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok:
            failures.append(name)

    for _ in range(50):
        f, g, h = (alg.random(rng) for _ in range(3))
        if (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h:
            check("algebra ring axioms", False)
            break
    else:
        check("algebra ring axioms", True)
    for _ in range(50):
        a, b, c = (random_delem(alg, rng) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            check("idealization ring axioms", False)
            break
    else:
        check("idealization ring axioms", True)
    ok = True
    for _ in range(20):
        u = random_d_unit(alg, rng)
        from .idealization import d_one
        if u * u.inverse() != d_one(alg) or u.inverse() * u != d_one(alg):
            ok = False
    check("unit inverses", ok)
    from .morphisms import decompose
    from .idealization import inner_auto
    ok = True
    try:
        for _ in range(10):
            u = alg.random_unit(rng)
            from .morphisms import FiaMorphism
            raw = FiaMorphism.inner(alg, u).to_linear()
            decompose(raw)
    except IncalgError:
        ok = False
    check("inner decomposition round-trip", ok)
    report = check_hypotheses(poset, field)
    print(f"info mult_subset_inn: {report['mult_subset_inn']}")
    print(f"info der_equals_ider: {report['der_equals_ider']}")
    if field.char != 2 and poset.is_connected() and all(report.values()):
        for lam in poset.involutions():
            res = classify(poset, lam, field)
            if res.representatives is None:
                print(f"info classification over {args.field}: infinite family")
                continue
            ok = all(s.to_linear().is_involution() for s in res.representatives)
            pairwise = all(
                not equivalent_inner(a, b).equivalent
                for i, a in enumerate(res.representatives)
                for b in res.representatives[i + 1:])
            check(f"classification for {json.dumps(lam.to_json(), sort_keys=True)}",
                  ok and pairwise)
        if field.order is not None:
            from .oracle import (
                count_units, enumerate_involutions_D, orbit_partition,
                unit_group_generators,
            )
            if count_units(alg, "D") <= args.oracle_limit:
                invs = enumerate_involutions_D(alg, limit=args.oracle_limit)
                partition = orbit_partition(invs, unit_group_generators(alg))
                want = sum(classify(poset, lam, field).count
                           for lam in poset.involutions())
                check("oracle orbit count matches classification",
                      len(partition) == want)
    else:
        print("info classification checks skipped (hypotheses or field)")
    return EXIT_OK if not failures else EXIT_INPUT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="incalg",
        description="Exact incidence algebras, idealization rings, and "
                    "involution classification over finite posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset-info", help="connectivity and symmetry report")
    p.add_argument("--poset", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_poset_info)

    p = sub.add_parser("hypotheses", help="check the classification hypotheses")
    p.add_argument("--poset", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_hypotheses)

    p = sub.add_parser("classify", help="involution classes for one poset involution")
    p.add_argument("--poset", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="inline map (a:b,b:a or JSON) or a file")
    p.add_argument("--general", action="store_true",
                   help="fold classes under all ring automorphisms")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("equivalent", help="decide equivalence of two involutions")
    p.add_argument("--poset", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("inv1")
    p.add_argument("inv2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--inner", action="store_true", default=True)
    mode.add_argument("--general", action="store_true")
    p.add_argument("--check", action="store_true",
                   help="re-verify the witness before printing")
    p.set_defaults(fn=cmd_equivalent)

    p = sub.add_parser("verify", help="run the property checks on one instance")
    p.add_argument("--poset", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--oracle-limit", type=int, default=1000)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, NotAnInvolution, FileNotFoundError, SizeLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisFailed as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (Char2Unsupported,) as exc:
        print(f"unsupported characteristic: {exc}", file=sys.stderr)
        return EXIT_CHAR2
    except (NotConnected, IncalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

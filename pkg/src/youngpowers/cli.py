"""Command-line front end.

Every subcommand prints a short human-readable report, or with ``--json`` a
single JSON object that :func:`decode` turns back into library values.
Exit status is 0 on success, 1 when ``verify`` finds a failing check, 2 on a
domain error and 3 when a size limit is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import oracle, verification
from .brauer import dim_brauer_ext_power, dim_brauer_perm, dim_brauer_sym_power, m_values
from .complexity import complexity_ext_square, complexity_perm, complexity_sym_power, complexity_young
from .config import LIMITS, limits
from .errors import DomainError, ResourceCapError
from .partitions import Partition, check_prime, format_parts, parse_partition
from .power_structure import (
    ModuleLabel,
    classify_ext_power,
    is_indecomposable_sym_power,
    is_projective_ext_power,
    is_projective_sym_power,
)
from .scott_squares import ScottClass, hom_dims, scott_decomposition, vertex_description
from .tabloids import GeneratedPSubgroup, Permutation, dim_permutation_module, standard_subgroups
from .young_modules import (
    list_young_summands,
    thm_b_ext_partitions,
    thm_b_quantities,
    thm_b_sym_partition,
    thm_c_partitions,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3

Result = tuple[dict[str, Any], list[str]]


def sorted_partitions(partitions) -> list[Partition]:
    return sorted(partitions, reverse=True)


def _parts(l) -> list[int]:
    return list(l)


def _subgroup(text: str | None, n: int, p: int) -> GeneratedPSubgroup:
    """``None`` is the trivial group; ``E2``, ``K1``, ``H0``, ``F1`` name standard subgroups;
    anything else is a ``;``-separated list of generators in cycle notation."""
    if not text:
        return GeneratedPSubgroup([], p, n)
    kind, index = text[0], text[1:]
    if kind in "EKHF" and index.isdigit():
        return standard_subgroups(n, p, kind, int(index))
    return GeneratedPSubgroup([Permutation.parse(g, n) for g in text.split(";") if g.strip()], p, n)


def cmd_dim(args) -> Result:
    l, p = args.lambda_, args.p
    if args.kind == "m-values":
        values = m_values(l, p)
        lines = [f"F_{i}: m = {m}, moved = {moved}" for i, (m, moved) in enumerate(values, 1)]
        return {"m_values": [list(v) for v in values]}, lines
    P = _subgroup(args.subgroup, l.n, p)
    if args.kind == "perm":
        value = dim_brauer_perm(l, P)
        what = f"M^{format_parts(l)}"
    else:
        a = _require_a(args)
        value = (dim_brauer_sym_power if args.kind == "sym" else dim_brauer_ext_power)(l, a, P)
        what = f"{'S' if args.kind == 'sym' else 'Lambda'}^{a} M^{format_parts(l)}"
    where = f" at {P!r}" if P.generators else ""
    return {"dimension": value}, [f"dim {what}(P) = {value}{where}"]


def _require_a(args) -> int:
    if args.a is None:
        raise DomainError("this subcommand needs --a")
    return args.a


def cmd_complexity(args) -> Result:
    l, p = args.lambda_, args.p
    check_prime(p)
    note = ""
    if args.kind == "perm":
        value = complexity_perm(l, p)
    elif args.kind == "young":
        value = complexity_young(l, p)
    elif args.kind == "sym-power":
        value = complexity_sym_power(l, _require_a(args), p)
    elif args.kind == "ext-square":
        value = complexity_ext_square(l, p)
    else:
        a = _require_a(args)
        if a == 2:
            value = complexity_ext_square(l, p)
        else:
            d = dim_permutation_module(l)
            if not 2 <= a <= d:
                raise DomainError(f"exterior power needs 2 <= a <= dim M^lambda = {d}, got a = {a}")
            value = oracle.elementary_abelians_max_rank(l.n, p, lambda E: dim_brauer_ext_power(l, a, E) > 0)
            note = " (brute-force search)"
    return {"complexity": value}, [f"complexity: {value}{note}"]


def cmd_projective(args) -> Result:
    a = _require_a(args)
    test = is_projective_sym_power if args.kind == "sym" else is_projective_ext_power
    value = test(args.lambda_, a, args.p)
    return {"projective": value}, [f"projective: {str(value).lower()}"]


def cmd_indecomposable(args) -> Result:
    a = _require_a(args)
    if args.kind == "sym":
        value = is_indecomposable_sym_power(args.lambda_, a)
        return {"indecomposable": value}, [f"indecomposable: {str(value).lower()}"]
    label = classify_ext_power(args.lambda_, a, args.p)
    return (
        {"indecomposable": label.indecomposable, "label": label.to_json()},
        [f"indecomposable: {str(label.indecomposable).lower()}", f"type: {label}"],
    )


def cmd_young_summands(args) -> Result:
    found = sorted_partitions(list_young_summands(args.lambda_, args.p))
    return {"summands": [_parts(x) for x in found]}, [" ".join(format_parts(x) for x in found)]


def cmd_thm_b(args) -> Result:
    l, p = args.lambda_, args.p
    check_prime(p)
    if args.kind == "sym":
        a = _require_a(args)
        quantities = thm_b_quantities(l, a, p)
        mu = thm_b_sym_partition(l, a, p)
        data = {
            "partition": _parts(mu),
            "d": quantities.d_la,
            "e": quantities.e_la,
            "lambda_a": _parts(quantities.lambda_a),
            "r": _parts(quantities.r_la_a),
        }
        lines = [
            format_parts(mu),
            f"d = {quantities.d_la}, e = {quantities.e_la}, "
            f"lambda^a = {format_parts(quantities.lambda_a, exponential=False)}, "
            f"r = {format_parts(quantities.r_la_a, exponential=False)}",
        ]
        return data, lines
    found = sorted_partitions(thm_b_ext_partitions(l, p))
    return {"partitions": [_parts(x) for x in found]}, [" ".join(format_parts(x) for x in found)]


def cmd_thm_c(args) -> Result:
    mu, summands = thm_c_partitions(args.lambda_, args.p)
    found = sorted_partitions(summands)
    return (
        {"mu": _parts(mu), "summands": [_parts(x) for x in found]},
        [f"mu = {format_parts(mu)}", "summands: " + " ".join(format_parts(x) for x in found)],
    )


def cmd_scott(args) -> Result:
    p = args.p
    classes = scott_decomposition(args.lambda_, args.kind, p)
    rows = []
    lines = ["mult  key  vertex  members"]
    for c in classes:
        row = c.to_json()
        row["vertex"] = vertex_description(c.key, p)
        rows.append(row)
        members = " ".join(str(M) for M in c.members)
        lines.append(f"{c.multiplicity}  {c.key}  {row['vertex']}  {members}")
    if not classes:
        lines = ["no Scott summands"]
    return {"classes": rows}, lines


def cmd_hom_dim(args) -> Result:
    sym, ext = hom_dims(args.lambda_, args.p)
    ext_text = "undefined" if ext is None else str(ext)
    return {"sym": sym, "ext": ext}, [f"sym: {sym}", f"ext: {ext_text}"]


def cmd_verify(args) -> Result:
    names = args.checks or list(verification.CHECKS)
    unknown = [name for name in names if name not in verification.CHECKS]
    if unknown:
        raise DomainError(f"unknown checks {unknown}; choose from {sorted(verification.CHECKS)}")
    results = []
    for name in names:
        check = verification.CHECKS[name]
        results.append(check(max_n=args.cap) if args.cap is not None else check())
    return (
        {"passed": all(r.passed for r in results), "checks": [r.to_json() for r in results]},
        [r.line() for r in results],
    )


def _decode_partitions(values) -> frozenset[Partition]:
    return frozenset(Partition(v) for v in values)


DECODERS: dict[str, Callable[[Any], Any]] = {
    "lambda": Partition,
    "partition": Partition,
    "mu": Partition,
    "lambda_a": tuple,
    "r": tuple,
    "summands": _decode_partitions,
    "partitions": _decode_partitions,
    "label": ModuleLabel.from_json,
    "classes": lambda rows: tuple(ScottClass.from_json(r) for r in rows),
    "m_values": lambda rows: [tuple(r) for r in rows],
}


def decode(payload: dict) -> dict[str, Any]:
    """Turn a ``--json`` payload back into library values."""
    return {key: DECODERS.get(key, lambda x: x)(value) for key, value in payload.items()}


def _add_common(parser: argparse.ArgumentParser, needs_lambda: bool = True) -> None:
    parser.add_argument("--p", type=int, default=2, help="the characteristic (a prime)")
    if needs_lambda:
        parser.add_argument("--lambda", dest="lambda_", type=parse_partition, required=True, help="e.g. 5,4,2 or (4,2^2)")
    parser.add_argument("--a", type=int, help="the power")
    parser.add_argument("--json", action="store_true", help="print one JSON object")
    parser.add_argument("--cap", type=int, help="largest n for brute-force work")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="youngpowers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_kind(name: str, kinds: Sequence[str], handler, help_text: str) -> None:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("kind", choices=kinds)
        _add_common(p)
        p.set_defaults(handler=handler)

    dim = sub.add_parser("dim", help="Brauer quotient dimensions and m-values")
    dim.add_argument("kind", choices=["perm", "sym", "ext", "m-values"])
    _add_common(dim)
    dim.add_argument("--subgroup", help="E<i>, K<i>, H<i>, F<i> or generators like '(1,2)(3,4);(1,3)(2,4)'")
    dim.set_defaults(handler=cmd_dim)

    with_kind(
        "complexity",
        ["perm", "young", "sym-power", "ext-square", "ext-power"],
        cmd_complexity,
        "complexities (ext-power with a > 2 runs the brute-force search)",
    )
    with_kind("projective", ["sym", "ext"], cmd_projective, "projectivity of a power")
    with_kind("indecomposable", ["sym", "ext"], cmd_indecomposable, "indecomposability of a power")
    with_kind("thm-b", ["sym", "ext"], cmd_thm_b, "Young summands of maximal complexity")
    with_kind("scott", ["sym", "ext"], cmd_scott, "Scott summands of the square")

    for name, handler, help_text in (
        ("young-summands", cmd_young_summands, "Young modules occurring in M^lambda"),
        ("thm-c", cmd_thm_c, "the Young summands of S^p M^lambda for residues (p-1, 1)"),
        ("hom-dim", cmd_hom_dim, "trivial-module Hom dimensions of the squares"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.set_defaults(handler=handler)

    verify = sub.add_parser("verify", help="run the brute-force cross-check battery")
    _add_common(verify, needs_lambda=False)
    verify.add_argument("checks", nargs="*", help=f"subset of: {', '.join(verification.CHECKS)}")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _cap_overrides(cap: int | None) -> dict[str, Any]:
    if cap is None:
        return {}
    return {
        "oracle_degree": cap,
        "elementary_abelian_degree": {q: cap for q in LIMITS.elementary_abelian_degree},
    }


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with limits(**_cap_overrides(args.cap)):
            data, lines = args.handler(args)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceCapError as err:
        print(f"limit exceeded: {err}", file=sys.stderr)
        return EXIT_CAP
    if args.json:
        payload = {"command": args.command}
        if hasattr(args, "kind"):
            payload["kind"] = args.kind
        if getattr(args, "lambda_", None) is not None:
            payload["lambda"] = _parts(args.lambda_)
        payload.update({"p": args.p, "a": args.a}, **data)
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))
    if args.command == "verify" and not data["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Exit codes: 0 success; 1 operational/input error (parse errors name file,
line, and token); 2 a verification-style command ran fine but the property
failed (not isomorphic, not switching equivalent, a cospectral mate exists).
All output is deterministic for fixed inputs and flags, independent of
parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import enumeration, families
from .counting import count_digraphs, count_self_converse, fraction_table
from .digraph import (
    digraph_to_json,
    format_digraph,
    hermitian,
    is_isomorphic,
    read_digraph,
    write_digraph,
)
from .errors import HermiaError, SearchTimeout
from .spectra import char_poly, eigenvalues, inertia_from_charpoly, trace_power, triangle_balance
from .switching import switching_equivalent
from .twins import ExpansionVector, twin_expand, twin_reduction

OK, OPERATIONAL_ERROR, VERIFICATION_FAILED = 0, 1, 2


@dataclass
class Config:
    """Run-wide knobs shared by the subcommands."""

    output_format: str = "human"
    parallelism: int = 1
    budget: int = 2_000_000
    checkpoint: str | None = None
    seed: int = 0
    bound: int = 104

    def __post_init__(self):
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.budget < 1 or self.bound < 1:
            raise ValueError("bounds and budgets must be positive")


def _default_parallelism() -> int:
    return int(os.environ.get("HERMIA_PARALLELISM", "1"))


def _emit(cfg: Config, human: str, payload) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif cfg.output_format == "tsv" and isinstance(payload, list):
        for row in payload:
            print("\t".join(str(c) for c in row))
    else:
        print(human)


def _fmt_float(x: float) -> str:
    if abs(x - round(x)) < 1e-9:
        return str(int(round(x)))
    return f"{x:.6g}"


# -- subcommand bodies -----------------------------------------------------------


def _cmd_spectrum(cfg: Config, args) -> int:
    d = read_digraph(args.digraph)
    values = sorted(eigenvalues(hermitian(d)).values)
    _emit(cfg, " ".join(_fmt_float(v) for v in values), {"eigenvalues": values})
    return OK


def _cmd_charpoly(cfg: Config, args) -> int:
    p = char_poly(hermitian(read_digraph(args.digraph)))
    _emit(cfg, str(p), {"coeffs": [str(c) for c in p.coeffs]})
    return OK


def _cmd_inertia(cfg: Config, args) -> int:
    i = inertia_from_charpoly(char_poly(hermitian(read_digraph(args.digraph))))
    _emit(
        cfg,
        f"{i.n_pos} {i.n_neg} {i.n_zero}",
        {"n_pos": i.n_pos, "n_neg": i.n_neg, "n_zero": i.n_zero},
    )
    return OK


def _cmd_triangles(cfg: Config, args) -> int:
    d = read_digraph(args.digraph)
    b = triangle_balance(d)
    t3 = trace_power(hermitian(d), 3)
    _emit(
        cfg,
        f"{b.x1} {b.x2} {b.x3} {b.x4} (Tr H^3 = {t3})",
        {"x1": b.x1, "x2": b.x2, "x3": b.x3, "x4": b.x4, "trace_h3": t3},
    )
    return OK


def _write_or_print(cfg: Config, d, out: str | None) -> None:
    if out:
        write_digraph(d, out)
    else:
        _emit(cfg, format_digraph(d).rstrip("\n"), digraph_to_json(d))


def _cmd_reduce(cfg: Config, args) -> int:
    _write_or_print(cfg, twin_reduction(read_digraph(args.digraph)), args.output)
    return OK


def _cmd_expand(cfg: Config, args) -> int:
    t = ExpansionVector.parse(args.t)
    _write_or_print(cfg, twin_expand(read_digraph(args.digraph), t), args.output)
    return OK


def _cmd_iso(cfg: Config, args) -> int:
    perm = is_isomorphic(read_digraph(args.first), read_digraph(args.second))
    found = perm is not None
    _emit(
        cfg,
        "isomorphic: " + " ".join(map(str, perm)) if found else "not isomorphic",
        {"isomorphic": found, "permutation": list(perm) if found else None},
    )
    return OK if found else VERIFICATION_FAILED


def _cmd_switch_equiv(cfg: Config, args) -> int:
    d1, d2 = read_digraph(args.first), read_digraph(args.second)
    try:
        w = switching_equivalent(
            d1,
            d2,
            budget=cfg.budget,
            allow_relabel=not args.strict_labels,
        )
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return OPERATIONAL_ERROR
    if w is None:
        _emit(cfg, "not switching equivalent", {"equivalent": False, "witness": None})
        return VERIFICATION_FAILED
    _emit(
        cfg,
        "switching equivalent: perm=["
        + " ".join(map(str, w.permutation))
        + "] phases=["
        + " ".join(w.phases.as_strings())
        + f"] conversed={w.conversed}",
        {"equivalent": True, "witness": w.to_json()},
    )
    return OK


def _cmd_family(cfg: Config, args) -> int:
    if args.action == "make":
        _write_or_print(cfg, families.named_digraph(args.name), args.output)
        return OK
    t = ExpansionVector.parse(args.t)
    if args.action == "charpoly":
        p = families.charpoly_te(args.base, t)
        _emit(cfg, str(p), {"coeffs": [str(c) for c in p.coeffs]})
        return OK
    if args.action == "spectrum":
        spec = families.explicit_spectrum_cases(t)
        values = sorted(spec.values)
        _emit(cfg, " ".join(_fmt_float(v) for v in values), {"eigenvalues": values})
        return OK
    if args.action == "counts":
        n, m, k = families.te_kminus_counts(t)
        _emit(cfg, f"order {n}, edges {m}, negative triangles {k}", {"order": n, "edges": m, "negative_triangles": k})
        return OK
    raise ValueError(f"unknown family action {args.action!r}")


def _cmd_classify(cfg: Config, args) -> int:
    n = args.order
    if n <= 5:
        corpus = enumeration.build_corpus(n, cfg.parallelism)
        found = enumeration.classify_one_negative(corpus)
        rows = [(e.canon.hex(), str(e.charpoly)) for e in found]
        _emit(
            cfg,
            "\n".join(f"{c}  {p}" for c, p in rows) + f"\ntotal {len(rows)}"
            if rows
            else "total 0",
            {"order": n, "count": len(rows), "classes": [c for c, _ in rows]},
        )
    elif n == 6:
        offenders = enumeration.scan_order6_one_negative(cfg.parallelism)
        _emit(cfg, f"total {len(offenders)}", {"order": 6, "count": len(offenders)})
    else:
        print("classification sweep supports order <= 6", file=sys.stderr)
        return OPERATIONAL_ERROR
    return OK


def _cmd_shds_check(cfg: Config, args) -> int:
    d = read_digraph(args.digraph)
    report = enumeration.shds_check(d, parallelism=cfg.parallelism)
    payload = {
        "order": report.order,
        "cospectral_classes": report.cospectral_classes,
        "isomorphic_classes": report.isomorphic_classes,
        "non_isomorphic_mates": len(report.mates),
        "is_shds": report.is_shds,
    }
    _emit(
        cfg,
        f"cospectral classes {report.cospectral_classes}, "
        f"isomorphic {report.isomorphic_classes}, "
        f"non-isomorphic mates {len(report.mates)}: "
        + ("SHDS within universe" if report.is_shds else "NOT strongly determined"),
        payload,
    )
    return OK if report.is_shds else VERIFICATION_FAILED


def _cmd_collide(cfg: Config, args) -> int:
    if args.base == "kminus":
        reports = enumeration.expansion_collision_search(
            cfg.bound, cfg.parallelism, cfg.checkpoint
        )
    else:
        reports = enumeration.tminus_collision_search(cfg.bound)
    lines = []
    for r in reports:
        members = "; ".join(",".join(map(str, m)) for m in r.members)
        lines.append(f"key={r.key} order={r.family_order} members: {members}")
    lines.append(f"total {len(reports)}")
    _emit(cfg, "\n".join(lines), [r.to_json() for r in reports])
    return OK


def _cmd_count(cfg: Config, args) -> int:
    if args.table:
        rows = fraction_table(args.max_n)
        human = "\n".join(f"{n}  {s}" for n, s in rows)
        if cfg.output_format == "tsv":
            _emit(cfg, human, [list(r) for r in rows])
        else:
            _emit(cfg, human, [{"n": n, "fraction": s} for n, s in rows])
    else:
        rows = [
            (n, count_digraphs(n), count_self_converse(n))
            for n in range(1, args.max_n + 1)
        ]
        human = "\n".join(f"{n}  {d}  {sc}" for n, d, sc in rows)
        if cfg.output_format == "tsv":
            _emit(cfg, human, [list(r) for r in rows])
        else:
            _emit(
                cfg,
                human,
                [{"n": n, "digraphs": str(d), "self_converse": str(sc)} for n, d, sc in rows],
            )
    return OK


# -- argument wiring --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hermia",
        description="Exact spectral analysis of digraphs via the Hermitian adjacency matrix.",
    )
    top.add_argument("--format", choices=["human", "json", "tsv"], default="human")
    top.add_argument(
        "--parallelism",
        type=int,
        default=_default_parallelism(),
        help="worker processes for enumeration and searches (env HERMIA_PARALLELISM)",
    )
    top.add_argument("--budget", type=int, default=2_000_000, help="node budget for witness searches")
    top.add_argument("--checkpoint", default=None, help="resumable progress file for collide")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized operations")
    top.add_argument("--bound", type=int, default=104, help="entry bound for collide")
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        return p

    p = cmd("spectrum", _cmd_spectrum, help="floating eigenvalues of a digraph file")
    p.add_argument("digraph")
    p = cmd("charpoly", _cmd_charpoly, help="exact characteristic polynomial")
    p.add_argument("digraph")
    p = cmd("inertia", _cmd_inertia, help="exact (n+, n-, n0)")
    p.add_argument("digraph")
    p = cmd("triangles", _cmd_triangles, help="counts of the four contributing triangles")
    p.add_argument("digraph")
    p = cmd("reduce", _cmd_reduce, help="twin reduction")
    p.add_argument("digraph")
    p.add_argument("-o", "--output")
    p = cmd("expand", _cmd_expand, help="twin expansion by t0:t1,...,tk")
    p.add_argument("digraph")
    p.add_argument("--t", required=True)
    p.add_argument("-o", "--output")
    p = cmd("iso", _cmd_iso, help="isomorphism test with witness")
    p.add_argument("first")
    p.add_argument("second")
    p = cmd("switch-equiv", _cmd_switch_equiv, help="switching equivalence with witness")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--strict-labels", action="store_true", help="do not search relabelings")
    p.add_argument("--budget", type=int, dest="sub_budget", default=None)
    p = cmd("family", _cmd_family, help="named digraphs and closed-form spectra")
    p.add_argument("action", choices=["make", "charpoly", "spectrum", "counts"])
    p.add_argument("--name", default="kminus")
    p.add_argument("--base", default="kminus")
    p.add_argument("--t", default="0:1,1,1,1")
    p.add_argument("--case", default="auto", help="closed-form pattern selection (auto)")
    p.add_argument("-o", "--output")
    p = cmd("classify", _cmd_classify, help="reduced rank>2 digraphs with one negative eigenvalue")
    p.add_argument("--order", type=int, required=True)
    p = cmd("shds-check", _cmd_shds_check, help="exhaustive cospectral-mate search")
    p.add_argument("digraph")
    p = cmd("collide", _cmd_collide, help="expansion-vector cospectrality collisions")
    p.add_argument("--base", choices=["kminus", "tminus"], default="kminus")
    p.add_argument("--bound", type=int, dest="sub_bound", default=None)
    p.add_argument("--parallelism", type=int, dest="sub_parallelism", default=None)
    p.add_argument("--checkpoint", dest="sub_checkpoint", default=None)
    p = cmd("count", _cmd_count, help="digraph and self-converse counts")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--table", action="store_true", help="self-converse fraction table")
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    def pick(sub_name, top_value):
        sub = getattr(args, sub_name, None)
        return top_value if sub is None else sub

    try:
        cfg = Config(
            output_format=args.format,
            parallelism=pick("sub_parallelism", args.parallelism),
            budget=pick("sub_budget", args.budget),
            checkpoint=pick("sub_checkpoint", args.checkpoint),
            seed=args.seed,
            bound=pick("sub_bound", args.bound),
        )
        return args.fn(cfg, args)
    except HermiaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OPERATIONAL_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OPERATIONAL_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""``lcskit`` command line: flat ``key = value`` reports with ``[section]`` headers.

Exit codes: 0 ok, 1 check failed or hypothesis refused, 2 input error,
3 resource bound exceeded.  Output is deterministic; ``LCSKIT_SEED`` is
reserved and ignored.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import arrangement as arr_mod
from .errors import (
    ArrangementError,
    HypothesisError,
    PresentationError,
    PresentationSyntaxError,
    RealizationError,
    ResourceLimitError,
)
from .holonomy import oracle_report
from .presentation import Presentation, incidence_of, is_conjugation_free, read_presentation, validate
from .ranks import MAX_DEGREE, b2, lcs_series_check, phi2_combinatorial, phi_formula
from .relgraph import betti, build_graph, components, is_conjugation_free_graph, is_cycle_separated

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    pass


class Report:
    def __init__(self):
        self.lines: list[str] = []

    def section(self, name: str) -> None:
        self.lines.append(f"[{name}]")

    def put(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = str(value).lower()
        self.lines.append(f"{key} = {value}")

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _load(path: str, strict: bool) -> Presentation:
    return read_presentation(path, strict=True if strict else None)


def _load_valid(path: str, strict: bool) -> Presentation:
    p = _load(path, strict)
    report = validate(p)
    if not report.ok:
        raise InputError("presentation is not cyclic-related: " + "; ".join(v.message for v in report.violations))
    return p


def _check_k(k: int) -> int:
    if k < 1:
        raise InputError("--max-k must be >= 1")
    if k > MAX_DEGREE:
        raise ResourceLimitError(f"--max-k {k} exceeds the bound {MAX_DEGREE}")
    return k


def _graph_flags(g) -> tuple[bool, bool]:
    cs = is_cycle_separated(g)
    cf = all(is_conjugation_free_graph(c) for c in components(g))
    return cs, cf


def cmd_validate(args, out: Report) -> int:
    p = _load(args.file, args.strict)
    report = validate(p)
    out.put("generators", p.n)
    out.put("relations", len(p.relations))
    out.put("cyclic_related", report.ok)
    out.put("conjugation_free", is_conjugation_free(p))
    for i, v in enumerate(report.violations, start=1):
        out.put(f"violation[{i}]", f"requirement {v.requirement}: {v.message}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_graph(args, out: Report) -> int:
    p = _load_valid(args.file, args.strict)
    g = build_graph(p)
    out.section("graph")
    for v in g.vertices:
        out.put(f"vertex {v.id}", f"mult={v.multiplicity} support={','.join(map(str, sorted(v.support)))}")
    for e in g.edges:
        out.put(f"edge {e.id}", f"gen={e.generator} {e.u}-{e.v}")
    cs, cf = _graph_flags(g)
    out.section("invariants")
    out.put("vertices", len(g.vertices))
    out.put("edges", len(g.edges))
    out.put("beta", betti(g))
    out.put("cycle_separated", cs)
    out.put("cf_graph", cf)
    return EXIT_OK


def _put_ranks(out: Report, table, inc, K: int) -> bool:
    check = lcs_series_check(inc, K, table.phi)
    out.put("phi", ",".join(map(str, table.as_list())))
    for k, v in sorted(table.phi.items()):
        out.put(f"phi[{k}]", v)
    out.put("b2", b2(inc))
    out.put("lcs_identity", "pass" if check.ok else f"fail@coeff{check.first_difference}")
    return check.ok


def cmd_ranks(args, out: Report) -> int:
    K = _check_k(args.max_k)
    p = _load_valid(args.file, args.strict)
    inc = incidence_of(p)
    table = phi_formula(inc, K, assume_decomposable=args.assume_decomposable)
    if table.conjectural:
        out.put("status", "conjectural")
        for reason in table.notes:
            out.put("hypothesis_failure", reason)
    else:
        out.put("status", "theorem")
    ok = _put_ranks(out, table, inc, K)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args, out: Report) -> int:
    p = _load_valid(args.file, args.strict)
    inc = incidence_of(p)
    rep = oracle_report(inc)
    g = build_graph(p)
    for line in rep.format().splitlines():
        key, _, value = line.partition(" = ")
        out.put(key, value)
    realizable = is_conjugation_free(p) and is_cycle_separated(g)
    out.put("realizable", realizable)
    out.put("certified", "arrangement" if realizable else "holonomy-only")
    return EXIT_OK


def cmd_realize(args, out: Report) -> int:
    p = _load_valid(args.file, args.strict)
    if not is_conjugation_free(p):
        raise HypothesisError("realization needs a conjugation-free presentation")
    arrangement = arr_mod.realize(build_graph(p), p.n)
    text = arr_mod.format_arrangement(arrangement)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.put("written", args.output)
        out.put("lines", len(arrangement))
    else:
        out.lines.extend(text.rstrip("\n").splitlines())
    return EXIT_OK


def cmd_lattice(args, out: Report) -> int:
    with open(args.file, encoding="utf-8") as fh:
        arrangement = arr_mod.parse_arrangement(fh.read())
    lat = arr_mod.lattice(arrangement, allow_parallel=args.allow_parallel)
    out.section("lattice")
    for pt in lat.points:
        x, y = arr_mod.format_rational(pt.x), arr_mod.format_rational(pt.y)
        out.put(f"point ({x},{y})", f"mult={pt.multiplicity} lines={','.join(map(str, pt.lines))}")
    out.section("census")
    out.put("lines", lat.n)
    for m, c in lat.counts().items():
        out.put(f"n_{m}", c)
    out.put("parallel_pairs", len(lat.parallel_pairs))
    fan = arr_mod.fan_graph(lat)
    cs, cf = _graph_flags(fan)
    out.section("fan_graph")
    for v in fan.vertices:
        out.put(f"vertex {v.id}", f"mult={v.multiplicity} support={','.join(map(str, sorted(v.support)))}")
    for e in fan.edges:
        out.put(f"edge {e.id}", f"gen={e.generator} {e.u}-{e.v}")
    out.put("beta", betti(fan))
    out.put("cycle_separated", cs)
    out.put("cf_graph", cf)
    return EXIT_OK


def cmd_verify(args, out: Report) -> int:
    K = _check_k(args.max_k)
    p = _load_valid(args.file, args.strict)
    inc = incidence_of(p)
    g = build_graph(p)
    cf = is_conjugation_free(p)
    cs = is_cycle_separated(g)
    hypothesis = cf and cs
    failures: list[str] = []

    out.section("input")
    out.put("generators", p.n)
    out.put("cyclic_related", True)
    out.put("conjugation_free", cf)
    out.put("beta", betti(g))
    out.put("cycle_separated", cs)
    out.put("hypothesis", "theorem" if hypothesis else "conjectural")

    table = phi_formula(inc, max(K, 3), assume_decomposable=True)
    out.section("ranks")
    if not _put_ranks(out, table, inc, max(K, 3)):
        failures.append("lcs_identity")

    rep = oracle_report(inc)
    tag = "" if hypothesis else "(conjectural)"
    out.section("oracle")
    phi2_comb = phi2_combinatorial(inc)
    out.put("phi2_combinatorial", phi2_comb)
    out.put(f"phi2_formula{tag}", table[2])
    out.put("phi2_oracle", rep.phi2)
    if not phi2_comb == table[2] == rep.phi2:
        failures.append("phi2")
    out.put(f"phi3_formula{tag}", table[3])
    out.put("phi3_oracle", rep.phi3)
    out.put("dimL3", rep.dim_l3)
    out.put("ideal_rank_deg3", rep.ideal_rank_deg3)
    if rep.phi3 == table[3]:
        out.put("phi3_status", "match")
    elif hypothesis:
        out.put("phi3_status", "MISMATCH")
        failures.append("phi3")
    else:
        out.put("phi3_status", "GAP")
        out.put("phi3_gap", rep.phi3 - table[3])
    falk = rep.phi3 >= table[3]
    out.put("falk_bound", "holds" if falk else "violated")
    if hypothesis and not falk:
        failures.append("falk_bound")

    out.section("round_trip")
    if hypothesis:
        rt = arr_mod.round_trip_check(p)
        out.put("graph_isomorphic", rt.graph_isomorphic)
        out.put("multiplicities_equal", rt.multiplicities_equal)
        out.put("pair_coverage_equal", rt.pair_coverage_equal)
        out.put("incidence_equal", rt.incidence_equal)
        if rt.witness is not None:
            out.put("witness", " ".join(f"{a}->{b}" for a, b in sorted(rt.witness.items())) or "empty")
        if not rt.ok:
            failures.append("round_trip")
    else:
        out.put("status", "skipped")

    out.section("result")
    out.put("verify", "fail" if failures else "pass")
    if failures:
        out.put("failed", ",".join(failures))
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcskit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file_help="presentation file"):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help=file_help)
        sp.set_defaults(func=func)
        return sp

    def strict(sp):
        sp.add_argument("--strict", action="store_true", help="no implicit commutators")

    def max_k(sp):
        sp.add_argument("--max-k", type=int, default=6, help=f"truncation degree (default 6, max {MAX_DEGREE})")

    strict(add("validate", cmd_validate, "check the cyclic-related requirements"))
    strict(add("graph", cmd_graph, "relation graph and its invariants"))
    sp = add("ranks", cmd_ranks, "closed-form LCS ranks")
    strict(sp)
    max_k(sp)
    sp.add_argument(
        "--assume-decomposable", action="store_true", help="evaluate outside the theorem's hypothesis (conjectural)"
    )
    strict(add("oracle", cmd_oracle, "holonomy Lie algebra ranks in degrees 2 and 3"))
    sp = add("realize", cmd_realize, "rational line arrangement for the presentation")
    strict(sp)
    sp.add_argument("-o", "--output", help="write the arrangement file here instead of stdout")
    sp = add("lattice", cmd_lattice, "intersection lattice of an arrangement file", "arrangement file")
    sp.add_argument("--allow-parallel", action="store_true", help="let parallel pairs contribute no point")
    sp = add("verify", cmd_verify, "formula vs oracle, LCS identity and round trip")
    strict(sp)
    max_k(sp)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Report()
    try:
        code = args.func(args, out)
    except (PresentationSyntaxError, PresentationError, ArrangementError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (HypothesisError, RealizationError) as exc:
        refusal = Report()
        refusal.put("status", "refused")
        refusal.put("reason", exc)
        sys.stdout.write(refusal.render())
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())

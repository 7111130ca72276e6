"""Command-line front end, case-study pipelines and the fixture manifest."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .braid import BraidError, Presentation, zvk_presentation
from .census import CensusError, full_census, predicted
from .chebyshev import TAGS, ChebyshevError, cheb, verify_identity
from .curve import (
    CurveError,
    CurveSpec,
    ImplicitCurve,
    axis_swap,
    hypocycloid,
    plot_svg,
    quotient_swap,
    quotient_x,
    quotient_y,
)
from .groups import (
    ArtinGraph,
    FiniteQuotientMap,
    GroupError,
    SubgroupPresentation,
    TietzeResult,
    abelianization,
    add_relations,
    artin_presentation,
    first_difference,
    kernel_presentation,
    low_index_subgroups,
    match_artin_graph,
    target_from_json,
    tietze_simplify,
)
from .monodromy import (
    MonodromyError,
    MonodromyRecord,
    braid_monodromy,
    strand_components,
    totally_real_monodromy,
)
from .poly import BiPoly, PolyError, parse_bipoly

DOMAIN_ERRORS = (
    BraidError,
    CensusError,
    ChebyshevError,
    CurveError,
    GroupError,
    MonodromyError,
    PolyError,
)

NAME_POOL = "abcdefghijklmnoqrstuv"


def load_manifest() -> dict:
    text = resources.files("hypocycloids").joinpath("fixtures.json").read_text()
    return json.loads(text)


def case_name(k: int, l: int) -> str:
    for name, case in load_manifest()["cases"].items():
        if (case["k"], case["l"]) == (k, l):
            return name
    raise CurveError(f"no case study for ({k}, {l}); known: deltoid, astroid, hipo53, hipo85")


# ---------------------------------------------------------------------------
# pipeline


@dataclass(frozen=True)
class PipelineConfig:
    basepoint: Fraction | None = None
    method: str = "real-picture"
    tietze_budget: int = 10_000

    @classmethod
    def from_case(cls, case: dict, **overrides) -> "PipelineConfig":
        bp = case.get("basepoint")
        cfg = cls(Fraction(bp) if bp is not None else None, case.get("method", "real-picture"))
        return cls(**{**cfg.__dict__, **{k: v for k, v in overrides.items() if v is not None}})


@dataclass
class PipelineResult:
    name: str
    curve: ImplicitCurve
    quotient: ImplicitCurve
    components: list[BiPoly]
    f: BiPoly
    record: MonodromyRecord
    strand_names: list[str]
    zvk: Presentation
    group: Presentation
    quotient_map: FiniteQuotientMap
    kernel: SubgroupPresentation
    simplified: TietzeResult
    graph: ArtinGraph | None
    timings: dict[str, float] = field(default_factory=dict)

    def summary(self) -> str:
        g = self.graph.shape() if self.graph else "no match"
        return f"Artin graph: {g}"

    def to_json(self) -> dict:
        return {
            "case": self.name,
            "curve": self.f.to_json(),
            "monodromy": self.record.to_json(),
            "strands": self.strand_names,
            "zvk": self.zvk.to_json(),
            "kernel": self.kernel.presentation.to_json(),
            "simplified": self.simplified.presentation.to_json(),
            "graph": self.graph.to_json() if self.graph else None,
            "shape": self.graph.shape() if self.graph else None,
        }


def case_quotient(case: dict) -> tuple[ImplicitCurve, ImplicitCurve]:
    curve = hypocycloid(case["k"], case["l"], case["variant"])
    q = curve
    for step in case["quotients"]:
        q = {"y": quotient_y, "x": quotient_x, "swap": quotient_swap}[step](q)
    return curve, q


def case_components(case: dict, quotient: ImplicitCurve) -> list[BiPoly]:
    comps = []
    for label, expr in case["components"]:
        comps.append(quotient.f if expr is None else parse_bipoly(expr, quotient.f.vars))
    if case.get("change"):
        a, b, c, d = (Fraction(v) for v in case["change"])
        comps = [g.linear_change(a, b, c, d) for g in comps]
    return comps


def _strand_names(case: dict, labels: Sequence[int]) -> list[str]:
    fixed = case.get("names", {})
    comp_labels = [lab for lab, _ in case["components"]]
    pool = [ch for ch in NAME_POOL if ch not in fixed.values()]
    out = []
    for idx in labels:
        lab = comp_labels[idx]
        out.append(fixed[lab] if lab in fixed else pool.pop(0))
    if len(set(out)) != len(out):
        raise GroupError(f"component {comp_labels} needs one name per strand, got {out}")
    return out


def run_pipeline(name: str, config: PipelineConfig | None = None) -> PipelineResult:
    case = load_manifest()["cases"][name]
    config = config or PipelineConfig.from_case(case)
    clock = {}
    t0 = time.perf_counter()
    curve, quotient = case_quotient(case)
    comps = case_components(case, quotient)
    f = comps[0]
    for g in comps[1:]:
        f = f * g
    clock["curve"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    if config.method == "real-picture":
        record = totally_real_monodromy(f, config.basepoint)
    elif config.method == "numeric":
        record = braid_monodromy(f, config.basepoint)
    else:
        raise MonodromyError(f"unknown monodromy method {config.method!r}")
    clock["monodromy"] = time.perf_counter() - t0
    labels = strand_components(comps, record.basepoint)
    names = _strand_names(case, labels)
    zvk = zvk_presentation(record.braids, record.d, names)
    comp_labels = [lab for lab, _ in case["components"]]
    by_label: dict[str, list[str]] = {}
    for nm, idx in zip(names, labels):
        by_label.setdefault(comp_labels[idx], []).append(nm)
    squares = [f"{g} {g}" for lab in case["squares"] for g in by_label.get(lab, [])]
    group = add_relations(zvk, squares)
    target = target_from_json(case["target"])
    images = {g: tuple(img) for lab, img in case["images"].items() for g in by_label.get(lab, [])}
    rho = FiniteQuotientMap.by_name(group, target, images)
    t0 = time.perf_counter()
    kernel = kernel_presentation(rho)
    simplified = tietze_simplify(kernel.presentation, config.tietze_budget)
    graph = match_artin_graph(simplified.presentation)
    clock["groups"] = time.perf_counter() - t0
    return PipelineResult(name, curve, quotient, comps, f, record, names, zvk, group, rho,
                          kernel, simplified, graph, clock)


# ---------------------------------------------------------------------------
# fixture verification


def golden_checks(name: str, case: dict) -> list[tuple[str, bool, str]]:
    """(label, ok, detail) per golden equation of a case."""
    out = []
    stages = {"C": [], "D": case["quotients"][:1], "E": case["quotients"][:2]}
    for key, text in case["golden"].items():
        golden = parse_bipoly(text).canonical()
        found = None
        for variant in ("plain", "tilde"):
            c = hypocycloid(case["k"], case["l"], variant)
            for step in stages[key]:
                c = {"y": quotient_y, "x": quotient_x}[step](c)
            if c.f == golden:
                found = variant
                break
            if key == "C" and axis_swap(c).f == golden:
                found = variant + "+swap"
                break
        expect = case["golden_match"][key]
        out.append((f"{name}.{key} golden", found is not None and found == expect, f"matches {found}"))
    return out


def verify_fixtures(include_pipelines: bool = True) -> list[tuple[str, bool, str]]:
    man = load_manifest()
    lines = []
    for name, case in man["cases"].items():
        lines.extend(golden_checks(name, case))
        spec = CurveSpec(case["k"], case["l"], case["variant"])
        try:
            census = full_census(spec)
            lines.append((f"{name} census", census == predicted(spec), json.dumps(census.to_json())))
        except CensusError as e:
            lines.append((f"{name} census", False, str(e)))
        if include_pipelines:
            try:
                res = run_pipeline(name)
                shape = res.graph.shape() if res.graph else "no match"
                lines.append((f"{name} pipeline", shape == case["graph"], shape))
                before = abelianization(res.kernel.presentation)
                after = abelianization(res.simplified.presentation)
                lines.append((f"{name} abelianization", before == after and str(after) == "Z", str(after)))
            except DOMAIN_ERRORS as e:
                lines.append((f"{name} pipeline", False, str(e)))
    li = man["low_index"]
    n = li["max_index"]
    pent = low_index_subgroups(artin_presentation(ArtinGraph.cycle(5)), n)
    b5 = low_index_subgroups(artin_presentation(ArtinGraph.path(5)), n)
    diff = first_difference(pent, b5)
    ok = pent == li["pentagon"] and b5 == li["B5"] and diff == li["first_difference"]
    lines.append(("pentagon vs B5 low-index", ok, f"pentagon {pent}, B5 {b5}, first difference at {diff}"))
    return lines


# ---------------------------------------------------------------------------
# argument handling


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(args, obj, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _spec(args) -> CurveSpec:
    return CurveSpec(args.k, args.l, args.variant)


def cmd_cheb(args) -> int:
    if args.what == "identity":
        if args.tag not in TAGS:
            raise ChebyshevError(f"unknown identity tag {args.tag!r}; choose from {', '.join(TAGS)}")
        ok = verify_identity(args.tag, args.k, args.l)
        _emit(args, {"tag": args.tag, "k": args.k, "l": args.l, "holds": ok},
              f"{args.tag} ({args.k},{args.l}): {'holds' if ok else 'fails'}")
        return 0 if ok else 1
    p = cheb(args.kind, args.n)
    _emit(args, p.to_json(), f"{args.kind}_{args.n} = {p}")
    return 0


def cmd_curve(args) -> int:
    c = hypocycloid(args.k, args.l, args.variant)
    _emit(args, c.to_json(), str(c.f))
    return 0


def cmd_census(args) -> int:
    c = full_census(_spec(args))
    cj = c.to_json()
    text = (
        f"degree {cj['degree']}, cusps {cj['cusps']}, real nodes {cj['nodesReal']}, "
        f"non-real nodes {cj['nodesNonreal']}, infinity type {tuple(cj['infinity'])}, alpha {cj['alpha']}"
    )
    _emit(args, cj, text)
    return 0


def cmd_plot(args) -> int:
    svg = plot_svg(_spec(args), args.samples)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _curve_arg(args) -> tuple[BiPoly, Fraction | None, str]:
    if args.case:
        case = load_manifest()["cases"][args.case]
        _, q = case_quotient(case)
        comps = case_components(case, q)
        f = comps[0]
        for g in comps[1:]:
            f = f * g
        bp = case.get("basepoint")
        return f, Fraction(bp) if bp is not None else None, case.get("method", "real-picture")
    if not args.poly:
        raise CurveError("give --poly or --case")
    return parse_bipoly(args.poly), None, "numeric"


def cmd_monodromy(args) -> int:
    f, bp, method = _curve_arg(args)
    if args.basepoint is not None:
        bp = Fraction(args.basepoint)
    method = args.method or method
    rec = totally_real_monodromy(f, bp) if method == "real-picture" else braid_monodromy(f, bp)
    lines = [f"basepoint {rec.basepoint}, {rec.d} strands"]
    for z, b in zip(rec.nt, rec.braids):
        lines.append(f"  {complex(z):.6g}: {b}")
    _emit(args, rec.to_json(), "\n".join(lines))
    return 0


def cmd_zvk(args) -> int:
    rec = MonodromyRecord.from_json(_read_json(args.input))
    names = args.names.split(",") if args.names else None
    p = zvk_presentation(rec.braids, rec.d, names)
    _emit(args, p.to_json(), str(p))
    return 0


def _parse_images(items: Sequence[str]) -> dict:
    out = {}
    for it in items or ():
        if "=" not in it:
            raise GroupError(f"image {it!r} should look like name=1,0")
        k, v = it.split("=", 1)
        out[k] = tuple(int(a) for a in v.split(","))
    return out


def cmd_group(args) -> int:
    p = Presentation.from_json(_read_json(args.input))
    if args.op == "rs":
        if args.perm:
            target = target_from_json({"permutations": args.perm})
        else:
            target = target_from_json({"abelian": [int(a) for a in args.target.split(",")]})
        rho = FiniteQuotientMap.by_name(p, target, _parse_images(args.image))
        k = kernel_presentation(rho)
        _emit(args, k.presentation.to_json(), str(k.presentation))
    elif args.op == "simplify":
        t = tietze_simplify(p, args.budget)
        _emit(args, t.presentation.to_json(), str(t.presentation) + ("" if t.complete else "  (incomplete)"))
    elif args.op == "abel":
        a = abelianization(p)
        _emit(args, a.to_json(), str(a))
    elif args.op == "lowindex":
        counts = low_index_subgroups(p, args.n)
        _emit(args, counts, " ".join(str(c) for c in counts))
    elif args.op == "match":
        g = match_artin_graph(p)
        _emit(args, g.to_json() if g else None, g.shape() if g else "no match")
        return 0 if g else 1
    return 0


def cmd_pipeline(args) -> int:
    name = case_name(args.k, args.l)
    bp = Fraction(args.basepoint) if args.basepoint is not None else None
    case = load_manifest()["cases"][name]
    cfg = PipelineConfig.from_case(case, basepoint=bp, method=args.method)
    res = run_pipeline(name, cfg)
    if args.json:
        print(json.dumps(res.to_json(), indent=2, sort_keys=True))
    else:
        print(f"monodromy: {res.record.d} strands at basepoint {res.record.basepoint} ({res.record.method})")
        print(f"zvk: {res.zvk}")
        print(f"kernel: {res.kernel.presentation.rank} generators, {len(res.kernel.raw_relators)} relators")
        print(f"simplified: {res.simplified.presentation}")
        print(res.summary())
    return 0 if res.graph else 1


def cmd_fixtures(args) -> int:
    lines = verify_fixtures(not args.quick)
    if args.json:
        print(json.dumps([{"check": a, "ok": b, "detail": c} for a, b, c in lines], indent=2))
    else:
        for label, ok, detail in lines:
            print(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
    return 0 if all(ok for _, ok, _ in lines) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypocycloids", description="hypocycloid curves, braid monodromy and Artin groups")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, json_flag=True):
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    def kl(p):
        p.add_argument("k", type=int)
        p.add_argument("l", type=int)
        p.add_argument("--variant", choices=("plain", "tilde"), default="plain")

    p = sub.add_parser("cheb", help="Chebyshev polynomials and identities")
    csub = p.add_subparsers(dest="what", required=True)
    q = common(csub.add_parser("poly"))
    q.add_argument("kind", choices=("T", "U", "W"))
    q.add_argument("n", type=int)
    q = common(csub.add_parser("identity"))
    q.add_argument("tag")
    q.add_argument("k", type=int)
    q.add_argument("l", type=int)
    p.set_defaults(func=cmd_cheb)

    p = common(sub.add_parser("curve", help="implicit equation of C_{k,l}"))
    kl(p)
    p.set_defaults(func=cmd_curve)

    p = common(sub.add_parser("census", help="singularity census"))
    kl(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("plot", help="SVG of the real curve")
    kl(p)
    p.add_argument("-o", "--output")
    p.add_argument("--samples", type=int, default=1024)
    p.set_defaults(func=cmd_plot)

    p = common(sub.add_parser("monodromy", help="braid monodromy of a plane curve"))
    p.add_argument("--poly", help="polynomial in x, y (projection to x)")
    p.add_argument("--case", choices=("deltoid", "astroid", "hipo53", "hipo85"))
    p.add_argument("--basepoint")
    p.add_argument("--method", choices=("real-picture", "numeric"))
    p.set_defaults(func=cmd_monodromy)

    p = common(sub.add_parser("zvk", help="Zariski-van Kampen presentation from a monodromy record"))
    p.add_argument("input", help="monodromy JSON file, or - for stdin")
    p.add_argument("--names", help="comma-separated generator names")
    p.set_defaults(func=cmd_zvk)

    p = common(sub.add_parser("group", help="presentation computations"))
    p.add_argument("op", choices=("rs", "simplify", "abel", "lowindex", "match"))
    p.add_argument("input", help="presentation JSON file, or - for stdin")
    p.add_argument("--target", default="2", help="cyclic orders for rs, e.g. 2,2")
    p.add_argument("--perm", type=int, help="permutation target degree for rs")
    p.add_argument("--image", action="append", help="generator image for rs, e.g. x=1,0")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("-n", type=int, default=4)
    p.set_defaults(func=cmd_group)

    p = common(sub.add_parser("pipeline", help="curve to Artin graph for a case study"))
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--basepoint")
    p.add_argument("--method", choices=("real-picture", "numeric"))
    p.set_defaults(func=cmd_pipeline)

    p = common(sub.add_parser("fixtures", help="fixture manifest"))
    p.add_argument("action", choices=("verify",))
    p.add_argument("--quick", action="store_true", help="skip the pipelines")
    p.set_defaults(func=cmd_fixtures)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Batch command line interface.

Reads one declaration document (ring, grading, ideals, points) from stdin or
a file, runs a single subcommand against it, and prints one report.  Reports
are deterministic: the same document and command produce byte-identical
output, with all numbers printed as exact rationals.  Timing goes to stderr
so it never perturbs the report.

Exit codes: 0 success, 1 mathematical rejection or resource cap, 2 parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cones import (
    homogeneous_ideal,
    minimal_embedding,
    singular_locus,
    smooth_at_origin,
)
from .errors import (
    GradedConesError,
    NonPositiveGradingError,
    NoRationalPointError,
    NotHomogeneousError,
    ParseFailure,
    Rejection,
)
from .grading import GradingMap, PositivityWitness
from .ideals import IdealPresentation, krull_dimension
from .orders import TermOrder
from .orbits import (
    RationalPoint,
    cross_section,
    find_one_dim_orbit,
    low_orbit_stratum,
    orbit_closure_ideal,
    orbit_dimension,
    rational_curve_through,
)
from .session import SessionInput, format_monomial, format_polynomial, parse_session
from .strata import MonomialIdealSpec, reduced_stratum as compute_reduced_stratum


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        session = parse_session(_read_input(args))
        report = {
            "command": args.command,
            "status": "ok",
            "result": _COMMANDS[args.command](session, args),
        }
        code = 0
    except ParseFailure as err:
        report = {
            "command": args.command,
            "status": "parse-error",
            "diagnostics": {
                "error": type(err).__name__,
                "message": str(err),
                "line": err.line,
                "column": err.column,
            },
        }
        code = 2
    except GradedConesError as err:
        report = {
            "command": args.command,
            "status": "rejected",
            "diagnostics": _diagnostics(err),
        }
        code = 1
    _emit(report, args.json)
    print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


def _read_input(args) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as handle:
            return handle.read()
    return sys.stdin.read()


def _diagnostics(err: GradedConesError) -> dict:
    out = {"error": type(err).__name__, "message": str(err)}
    if isinstance(err, NotHomogeneousError):
        out["component_degrees"] = [list(d) for d in err.degrees]
    if isinstance(err, NonPositiveGradingError) and err.certificate is not None:
        out["certificate"] = list(err.certificate)
    if isinstance(err, NoRationalPointError):
        out["supports"] = [list(s) for s in err.supports]
    return out


# -- report rendering -------------------------------------------------------------


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_lines(report, 0)))


def _inline(value) -> str | None:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, list) and all(
        v is None or isinstance(v, (bool, int, str)) for v in value
    ):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    return None


def _lines(value, indent: int) -> list[str]:
    pad = "  " * indent
    out: list[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            short = _inline(v)
            if short is not None:
                out.append(f"{pad}{k}: {short}")
            else:
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
        return out
    if isinstance(value, list):
        for item in value:
            short = _inline(item)
            if short is not None:
                out.append(f"{pad}- {short}")
            else:
                body = _lines(item, indent + 1)
                out.append(pad + "- " + body[0][len(pad) + 2 :])
                out.extend(body[1:])
        return out
    return [pad + str(_inline(value))]


# -- session plumbing -------------------------------------------------------------


def _need_ring(session: SessionInput):
    if session.ring is None:
        raise Rejection("no ring declared in the input document")
    return session.ring


def _need_grading(session: SessionInput) -> GradingMap:
    if session.grading is None:
        raise Rejection("no grading declared in the input document")
    return session.grading


def _pick_ideal(session: SessionInput, args):
    name = getattr(args, "ideal", None) or session.sole_ideal_name()
    if name is None:
        raise Rejection("no ideal selected: declare exactly one or pass --ideal")
    if name not in session.ideals:
        raise Rejection(f"ideal {name!r} is not declared")
    return name, session.ideals[name]


def _pick_point(session: SessionInput, args) -> tuple[str, RationalPoint]:
    name = getattr(args, "point", None) or session.sole_point_name()
    if name is None:
        raise Rejection("no point selected: declare exactly one or pass --point")
    if name not in session.points:
        raise Rejection(f"point {name!r} is not declared")
    return name, RationalPoint(_need_ring(session), session.points[name])


def _pick_order(session: SessionInput, args) -> TermOrder:
    name = getattr(args, "order", "degrevlex")
    if name == "lex":
        return TermOrder.lex()
    if name == "degrevlex":
        return TermOrder.degrevlex()
    return _need_grading(session).induced_order()


def _cone(session: SessionInput, args):
    name, gens = _pick_ideal(session, args)
    return name, homogeneous_ideal(gens, _need_grading(session))


def _variable_indices(session: SessionInput, spec: str):
    ring = _need_ring(session)
    out = []
    for piece in spec.split(","):
        name = piece.strip()
        if name not in ring.index:
            raise Rejection(f"unknown variable {name!r}")
        out.append(ring.index[name])
    return tuple(out)


def _names(ring, indices) -> list[str]:
    return [ring.names[i] for i in indices]


def _positivity_report(grading: GradingMap) -> dict:
    w = grading.positivity()
    if isinstance(w, PositivityWitness):
        return {"positive": True, "omega": list(w.omega), "dots": list(w.dots)}
    return {"positive": False, "certificate": list(w.alpha)}


# -- subcommands -------------------------------------------------------------------


def _cmd_check(session, args) -> dict:
    _need_ring(session)
    grading = _need_grading(session)
    report = {"grading": _positivity_report(grading)}
    if not report["grading"]["positive"]:
        raise NonPositiveGradingError(
            "the grading admits no positive weight vector",
            grading.positivity().alpha,
        )
    ideals = []
    for name in session.ideals:
        cone = homogeneous_ideal(session.ideals[name], grading)
        ideals.append(
            {
                "name": name,
                "homogeneous": True,
                "generators": [
                    {"text": format_polynomial(g), "degree": list(d)}
                    for g, d in zip(cone.base.generators, cone.degrees)
                ],
            }
        )
    report["ideals"] = ideals
    return report


def _cmd_decompose(session, args) -> dict:
    grading = _need_grading(session)
    name, gens = _pick_ideal(session, args)
    out = []
    for g in gens:
        parts = grading.homogeneous_components(g)
        out.append(
            {
                "text": format_polynomial(g),
                "components": [
                    {"degree": list(d), "text": format_polynomial(parts[d])}
                    for d in sorted(parts)
                ],
            }
        )
    return {"ideal": name, "generators": out}


def _cmd_embed(session, args) -> dict:
    name, cone = _cone(session, args)
    kept = None
    if getattr(args, "keep", None):
        kept = _variable_indices(session, args.keep)
    emb = minimal_embedding(cone, kept=kept)
    ring = cone.ring
    return {
        "ideal": name,
        "kept": _names(ring, emb.kept),
        "eliminated": _names(ring, emb.eliminated),
        "substitution": [
            {"variable": ring.names[i], "value": format_polynomial(emb.substitution[i])}
            for i in sorted(emb.substitution)
        ],
        "embedded_ring": list(emb.embedded.ring.names),
        "embedded_generators": [format_polynomial(g) for g in emb.embedded.base.generators],
        "embedded_grading": [list(c) for c in emb.embedded.grading.columns],
        "tangent_dimension": emb.tangent_dim,
    }


def _cmd_smooth(session, args) -> dict:
    name, cone = _cone(session, args)
    rep = smooth_at_origin(cone)
    return {
        "ideal": name,
        "ambient_dimension": rep.ambient,
        "cone_dimension": rep.cone_dim,
        "linear_part_dimension": rep.linear_dim,
        "tangent_dimension": rep.tangent_dim,
        "smooth": rep.smooth,
    }


def _cmd_singular(session, args) -> dict:
    name, cone = _cone(session, args)
    loc = singular_locus(cone)
    return {
        "ideal": name,
        "codimension": loc.codimension,
        "exact": loc.exact,
        "empty": loc.empty,
        "generators": [format_polynomial(g) for g in loc.presentation.generators],
    }


def _cmd_gb(session, args) -> dict:
    ring = _need_ring(session)
    name, gens = _pick_ideal(session, args)
    order = _pick_order(session, args)
    basis = IdealPresentation(ring, gens).groebner(order)
    return {
        "ideal": name,
        "order": getattr(args, "order", "degrevlex"),
        "basis": [format_polynomial(g, order) for g in basis.elements],
    }


def _cmd_dim(session, args) -> dict:
    ring = _need_ring(session)
    name, gens = _pick_ideal(session, args)
    order = _pick_order(session, args)
    return {
        "ideal": name,
        "dimension": krull_dimension(IdealPresentation(ring, gens), order),
    }


def _cmd_orbit_dim(session, args) -> dict:
    grading = _need_grading(session)
    name, p = _pick_point(session, args)
    info = orbit_dimension(p, grading)
    return {
        "point": name,
        "coordinates": repr(p),
        "support": _names(p.ring, info.support),
        "dimension": info.dimension,
    }


def _cmd_orbit_closure(session, args) -> dict:
    grading = _need_grading(session)
    name, p = _pick_point(session, args)
    closure = orbit_closure_ideal(p, grading)
    return {
        "point": name,
        "coordinates": repr(p),
        "dimension": orbit_dimension(p, grading).dimension,
        "generators": [format_polynomial(g) for g in closure.base.generators],
    }


def _cmd_stratum_mu(session, args) -> dict:
    ring = _need_ring(session)
    grading = _need_grading(session)
    union = low_orbit_stratum(grading, args.mu)
    return {
        "bound": union.bound,
        "components": [_names(ring, c) for c in union.components],
    }


def _cmd_cross_section(session, args) -> dict:
    name, cone = _cone(session, args)
    chosen = _variable_indices(session, args.vars)
    chart = cross_section(cone, chosen)
    return {
        "ideal": name,
        "chosen": _names(cone.ring, chart.chosen),
        "index": chart.index_r,
        "unique": chart.unique,
        "slice_generators": [format_polynomial(g) for g in chart.slice_ideal.generators],
    }


def _cmd_curve(session, args) -> dict:
    grading = _need_grading(session)
    name, p = _pick_point(session, args)
    curve = rational_curve_through(p, grading)
    out = {
        "point": name,
        "coordinates": repr(p),
        "omega": list(grading.witness().omega),
        "exponents": list(curve.exponents),
        "at_zero": repr(curve.at(0)),
        "ideal": None,
        "stays_on_cone": None,
    }
    ideal_name = getattr(args, "ideal", None) or session.sole_ideal_name()
    if ideal_name is not None:
        if ideal_name not in session.ideals:
            raise Rejection(f"ideal {ideal_name!r} is not declared")
        cone = homogeneous_ideal(session.ideals[ideal_name], grading)
        out["ideal"] = ideal_name
        out["stays_on_cone"] = curve.stays_on(cone)
    return out


def _cmd_one_dim_orbit(session, args) -> dict:
    name, cone = _cone(session, args)
    p = find_one_dim_orbit(cone)
    return {
        "ideal": name,
        "point": repr(p),
        "support": _names(cone.ring, p.support()),
        "dimension": 1,
    }


def _cmd_stratum(session, args) -> dict:
    ring = _need_ring(session)
    name, gens = _pick_ideal(session, args)
    exponents = []
    for g in gens:
        if len(g.terms) != 1:
            raise Rejection(f"stratum needs a monomial ideal; {format_polynomial(g)} is not a monomial")
        exponents.append(next(iter(g.terms)))
    order = _pick_order(session, args)
    try:
        spec = MonomialIdealSpec(ring, tuple(exponents), order)
    except ValueError as err:
        raise Rejection(str(err)) from err
    result = compute_reduced_stratum(spec, args.mode)
    scheme = result.scheme
    out = {
        "ideal": name,
        "order": getattr(args, "order", "degrevlex"),
        "mode": args.mode,
        "heads": [format_monomial(ring, h) for h in scheme.heads],
        "coefficients": [
            {"name": cname, "head": head, "tail": tail, "degree": list(col)}
            for (cname, head, tail), col in zip(
                scheme.legend(), scheme.coefficient_grading.columns
            )
        ],
        "generators": [format_polynomial(g) for g in result.stratum_ideal.generators],
        "positivity": _positivity_report(result.grading),
    }
    if result.reduced is None:
        out["reduced"] = None
    else:
        emb = result.reduced
        cring = scheme.coefficient_ring
        out["reduced"] = {
            "eliminated": _names(cring, emb.eliminated),
            "kept": _names(cring, emb.kept),
            "substitution": [
                {"variable": cring.names[i], "value": format_polynomial(emb.substitution[i])}
                for i in sorted(emb.substitution)
            ],
            "embedded_ring": list(emb.embedded.ring.names),
            "embedded_generators": [
                format_polynomial(g) for g in emb.embedded.base.generators
            ],
        }
    return out


_COMMANDS = {
    "check": _cmd_check,
    "decompose": _cmd_decompose,
    "embed": _cmd_embed,
    "smooth": _cmd_smooth,
    "singular": _cmd_singular,
    "gb": _cmd_gb,
    "dim": _cmd_dim,
    "orbit-dim": _cmd_orbit_dim,
    "orbit-closure": _cmd_orbit_closure,
    "stratum-mu": _cmd_stratum_mu,
    "cross-section": _cmd_cross_section,
    "curve": _cmd_curve,
    "one-dim-orbit": _cmd_one_dim_orbit,
    "stratum": _cmd_stratum,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", help="input document (defaults to stdin)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="gradedcones",
        description="Exact computations with multigraded ideals, cones, "
        "torus orbits, and Groebner strata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help_text: str):
        return sub.add_parser(name, parents=[common], help=help_text)

    cmd("check", "validate grading positivity and ideal homogeneity")
    sp = cmd("decompose", "split generators into homogeneous components")
    sp.add_argument("--ideal")
    sp = cmd("embed", "minimal embedding into the tangent space at the origin")
    sp.add_argument("--ideal")
    sp.add_argument("--keep", help="comma-separated variables to keep instead")
    sp = cmd("smooth", "smoothness at the origin")
    sp.add_argument("--ideal")
    sp = cmd("singular", "singular locus ideal (exact or upper bound)")
    sp.add_argument("--ideal")
    sp = cmd("gb", "reduced Groebner basis")
    sp.add_argument("--ideal")
    sp.add_argument("--order", choices=("lex", "degrevlex", "weighted"), default="degrevlex")
    sp = cmd("dim", "Krull dimension")
    sp.add_argument("--ideal")
    sp.add_argument("--order", choices=("lex", "degrevlex", "weighted"), default="degrevlex")
    sp = cmd("orbit-dim", "dimension of the torus orbit through a point")
    sp.add_argument("--point")
    sp = cmd("orbit-closure", "defining ideal of an orbit closure")
    sp.add_argument("--point")
    sp = cmd("stratum-mu", "locus of orbits of dimension at most a bound")
    sp.add_argument("--mu", type=int, required=True)
    sp = cmd("cross-section", "slice meeting maximal orbits in r points")
    sp.add_argument("--ideal")
    sp.add_argument("--vars", required=True, help="comma-separated chosen variables")
    sp = cmd("curve", "rational curve from the origin through a point")
    sp.add_argument("--point")
    sp.add_argument("--ideal")
    sp = cmd("one-dim-orbit", "rational point with a one-dimensional orbit")
    sp.add_argument("--ideal")
    sp = cmd("stratum", "Groebner stratum of a monomial ideal")
    sp.add_argument("--ideal")
    sp.add_argument("--order", choices=("lex", "degrevlex", "weighted"), default="degrevlex")
    sp.add_argument("--mode", choices=("homogeneous", "full"), default="homogeneous")
    return parser


if __name__ == "__main__":
    sys.exit(main())

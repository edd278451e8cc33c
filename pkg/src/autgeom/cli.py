"""Command-line entry point.

One subcommand per verification suite or geometry pipeline, each
emitting a JSON report on stdout (``--pretty`` renders a table
instead).  Exit codes: 0 every check passed, 1 at least one
verification failed, 2 usage, parse, or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import automorphisms as aut
from . import flats, glrep, latgeom
from .reports import Check, Report, fraction_str, parse_fraction
from .words import WordParseError, format_word, parse_word

USAGE_ERROR = 2


class PreconditionError(ValueError):
    """Bad input that violates an operation's contract (exit code 2)."""


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_fraction(part) for part in text.split(","))
    except ValueError as exc:
        raise PreconditionError(f"bad vector {text!r}: {exc}") from None


def _parse_vec3(text: str) -> latgeom.Vec3:
    coords = _parse_vector(text)
    if len(coords) != 3:
        raise PreconditionError(f"expected 3 coordinates, got {len(coords)}")
    return latgeom.Vec3(*coords)


def _vec3_strs(v: latgeom.Vec3) -> list[str]:
    return [fraction_str(c) for c in v.coords()]


def _octo_payload(rep: latgeom.OctoReport) -> dict:
    return {
        "norms_sq": [fraction_str(n) for n in rep.norms_sq],
        "common_norm_sq": None
        if rep.common_norm_sq is None
        else fraction_str(rep.common_norm_sq),
        "lattice_rank": rep.lattice_rank,
    }


def _octo_checks(rep: latgeom.OctoReport) -> list[Check]:
    witness = _octo_payload(rep)
    return [
        Check(
            "equal-nonzero-norms",
            "all four vectors share one nonzero squared norm",
            rep.equal_nonzero_norms,
            witness,
        ),
        Check("sum-condition", "u1 + u2 = v1 + v2", rep.sums_agree, witness),
        Check(
            "pair-orthogonality",
            "u1 . u2 = 0 and v1 . v2 = 0",
            rep.pairs_orthogonal,
            witness,
        ),
        Check(
            "difference-orthogonality",
            "(u1 - u2) . (v1 - v2) = 0",
            rep.differences_orthogonal,
            witness,
        ),
    ]


def _classification_payload(cls: latgeom.Classification) -> dict:
    return {
        "f_vector": list(cls.f_vector),
        "is_rhombic_dodecahedron": cls.is_rhombic_dodecahedron,
        "is_cube": cls.is_cube,
        "diag_ratios_sq": [
            None if s.diag_ratio_sq is None else fraction_str(s.diag_ratio_sq)
            for s in cls.faces
        ],
        "rhombic_faces": sum(1 for s in cls.faces if s.is_rhombus),
    }


# ---------------------------------------------------------------------------
# Subcommand implementations; each returns a Report.
# ---------------------------------------------------------------------------


def cmd_verify_relations(args: argparse.Namespace) -> Report:
    checks = aut.identity_suite(mode=args.mode)
    if args.inject_fault:
        # Negative-control hook for the test suite: an intentionally
        # false identity that must drag the overall verdict down.
        checks = checks + [
            aut._relation_check(
                "injected-fault",
                "L21 = R21 (intentionally false)",
                aut.nielsen_left(2, 1),
                aut.nielsen_right(2, 1),
            )
        ]
    return Report(
        "verify-relations",
        {"mode": args.mode, "inject_fault": args.inject_fault},
        tuple(checks),
    )


def cmd_gpq(args: argparse.Namespace) -> Report:
    if args.n < 3:
        raise PreconditionError(f"need n >= 3, got {args.n}")
    try:
        w = parse_word(args.w, args.n - 2)
    except WordParseError as exc:
        raise PreconditionError(f"bad word {args.w!r}: {exc}") from None
    if args.p == 0 or args.q == 0:
        raise PreconditionError("p and q must be nonzero")
    checks = aut.gpq_check(args.n, args.p, args.q, w)
    return Report(
        "gpq",
        {"n": args.n, "p": args.p, "q": args.q, "w": args.w},
        tuple(checks),
    )


def cmd_inner_gpq(args: argparse.Namespace) -> Report:
    if args.p == 0 or args.q == 0:
        raise PreconditionError("p and q must be nonzero")
    checks = aut.inner_gpq_check(args.p, args.q)
    return Report("inner-gpq", {"p": args.p, "q": args.q}, tuple(checks))


def cmd_gl_rep(args: argparse.Namespace) -> Report:
    try:
        expr = aut.parse_autexpr(args.expr, rank=3) ** args.power
    except aut.AutExprParseError as exc:
        raise PreconditionError(f"bad expression {args.expr!r}: {exc}") from None
    endo = aut.endo_of(expr)
    if not glrep.stabilizes(endo):
        raise PreconditionError(
            f"{expr.token_text()} does not stabilize the even-a3 subgroup"
        )
    m5 = glrep.ab5(endo)
    m2 = glrep.mu(endo)
    payload = {
        "expr": args.expr,
        "power": args.power,
        "stabilizes": True,
        "ab5": m5,
        "mu": m2,
    }
    checks = [
        Check(
            "stabilizes",
            "the automorphism preserves the even-a3 subgroup",
            True,
            {"images": {f"a{i+1}": format_word(im) for i, im in enumerate(endo.images)}},
        ),
        Check(
            "mu-unimodular",
            "det mu = +-1",
            glrep.mat2_det(m2) in (1, -1),
            {"det": glrep.mat2_det(m2)},
        ),
    ]
    return Report(
        "gl-rep", {"expr": args.expr, "power": args.power}, tuple(checks), payload
    )


def cmd_lk_basis(args: argparse.Namespace) -> Report:
    if args.k < 2:
        raise PreconditionError(f"need k >= 2, got {args.k}")
    words = glrep.lk_basis(args.k)
    total_a = sum(sum(l.sign for l in w.letters if l.index == 1) for w in words)
    checks = [
        Check("count", "the basis has exactly k words", len(words) == args.k, None),
        Check(
            "a-exponent-total",
            "total exponent of the first generator is k-1",
            total_a == args.k - 1,
            {"total": total_a},
        ),
    ]
    return Report(
        "lk-basis",
        {"k": args.k},
        tuple(checks),
        {"words": [format_word(w) for w in words]},
    )


def cmd_sanov(args: argparse.Namespace) -> Report:
    if args.power == 0:
        raise PreconditionError("power must be nonzero")
    m1 = glrep.mu(aut.endo_of(aut.nielsen_left(1, 2) ** args.power))
    m2 = glrep.mu(aut.endo_of(aut.nielsen_left(2, 1) ** args.power))
    free = glrep.no_short_relation(m1, m2, args.max_len)
    checks = [
        Check(
            "no-short-relation",
            f"no reduced word of length <= {args.max_len} in the two matrices "
            "evaluates to the identity",
            free,
            {"m1": m1, "m2": m2},
        )
    ]
    return Report(
        "sanov",
        {"power": args.power, "max_len": args.max_len},
        tuple(checks),
        {"mu_L12_power": m1, "mu_L21_power": m2},
    )


def _cell_report(command: str, cmd_args: dict, lattice: latgeom.Lattice,
                 out: str | None, precision: int,
                 extra_checks: list[Check] | None = None,
                 extra_payload: dict | None = None) -> Report:
    cell = latgeom.voronoi_cell(lattice)
    cls = latgeom.classify(cell)
    volume = latgeom.polytope_volume(cell)
    payload = {
        "rank": lattice.rank,
        "basis": [_vec3_strs(b) for b in lattice.basis],
        "covolume": fraction_str(latgeom.covolume(lattice)),
        "volume": fraction_str(volume),
        "classification": _classification_payload(cls),
        "off_path": None,
        "sidecar_path": None,
    }
    if extra_payload:
        payload.update(extra_payload)
    checks = [
        Check(
            "cell-tiles",
            "cell volume equals |det basis|",
            volume == latgeom.covolume(lattice),
            {"volume": fraction_str(volume)},
        ),
        Check(
            "euler",
            "V - E + F = 2",
            sum(cls.f_vector[::2]) - cls.f_vector[1] == 2,
            {"f_vector": list(cls.f_vector)},
        ),
    ]
    if extra_checks:
        checks.extend(extra_checks)
    if out is not None:
        off_path, sidecar = latgeom.export_off(cell, out, precision)
        payload["off_path"] = off_path
        payload["sidecar_path"] = sidecar
    return Report(command, cmd_args, tuple(checks), payload)


def cmd_voronoi(args: argparse.Namespace) -> Report:
    gens = [_parse_vec3(part) for part in args.gens.split(";")]
    if not 1 <= len(gens) <= 4:
        raise PreconditionError(f"need 1..4 generators, got {len(gens)}")
    lattice = latgeom.lattice_from(gens)
    if lattice.rank != 3:
        raise PreconditionError(
            f"generators span rank {lattice.rank}; the Voronoi cell needs rank 3"
        )
    return _cell_report(
        "voronoi", {"gens": args.gens}, lattice, args.out, args.precision
    )


def cmd_check_octo(args: argparse.Namespace) -> Report:
    vectors = [_parse_vec3(t) for t in (args.u1, args.u2, args.v1, args.v2)]
    rep = latgeom.octo_check(*vectors)
    return Report(
        "check-octo",
        {"u1": args.u1, "u2": args.u2, "v1": args.v1, "v2": args.v2},
        tuple(_octo_checks(rep)),
        _octo_payload(rep),
    )


def cmd_nielsen_flat(args: argparse.Namespace) -> Report:
    if args.scale < 1:
        raise PreconditionError(f"scale must be >= 1, got {args.scale}")
    model = flats.nielsen_flat(args.scale)
    extra_checks = [
        Check(
            "kernel-maps-to-zero",
            "the exponent vector (-1, 1, -1, 1) acts as the zero translation",
            model.kernel_is_zero,
            {"exponents": list(model.kernel_exponents)},
        ),
        Check(
            "equal-lengths",
            "all four generators translate equally far",
            len(set(model.lengths_sq)) == 1,
            {"lengths_sq": [fraction_str(x) for x in model.lengths_sq]},
        ),
        Check(
            "is-rhombic-dodecahedron",
            "the Dirichlet domain is a rhombic dodecahedron",
            model.classification.is_rhombic_dodecahedron,
            {"f_vector": list(model.classification.f_vector)},
        ),
    ]
    extra_checks.extend(_octo_checks(model.octo))
    extra_payload = {
        "vectors": {
            name: [fraction_str(c) for c in vec]
            for name, vec in zip(
                flats.NIELSEN_FLAT_GENERATORS, model.action.vectors
            )
        },
        "octo_quadruple": list(model.octo_quadruple),
    }
    return _cell_report(
        "nielsen-flat",
        {"scale": args.scale},
        model.lattice,
        args.out,
        args.precision,
        extra_checks,
        extra_payload,
    )


def cmd_lemma_pq(args: argparse.Namespace) -> Report:
    tau = _parse_vector(args.tau)
    try:
        cert = flats.equidistant_forces_zero(tau, args.p, args.q)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    sample = tuple(Fraction(1) for _ in tau)
    combo_ok = cert.combination(sample) == cert.eliminant_coefficient * len(tau)
    zero_ok = flats.equidistant_check(tau, args.p, args.q, [0] * len(tau))
    checks = [
        Check(
            "eliminant-nonzero",
            "p q (p - q) is nonzero, so the constraints force a = 0",
            cert.eliminant_coefficient != 0,
            {"eliminant": cert.eliminant_coefficient},
        ),
        Check(
            "elimination-identity",
            "q*(p-constraint) - p*(q-constraint) = p q (p - q) |a|^2",
            combo_ok,
            {"sample": [fraction_str(c) for c in sample]},
        ),
        Check("zero-passes", "a = 0 satisfies both constraints", zero_ok, None),
    ]
    payload = {
        "tau": [fraction_str(c) for c in cert.tau],
        "p": cert.p,
        "q": cert.q,
        "eliminant_coefficient": cert.eliminant_coefficient,
        "conclusion": cert.conclusion,
    }
    return Report(
        "lemma-pq", {"tau": args.tau, "p": args.p, "q": args.q},
        tuple(checks), payload,
    )


def cmd_induce(args: argparse.Namespace) -> Report:
    if args.d < 1:
        raise PreconditionError(f"need d >= 1, got {args.d}")
    try:
        ell = parse_fraction(args.ell)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    iso = flats.cyclic_induced(args.d, ell)
    result = flats.trans_length_sq(iso)
    expected = ell * ell / args.d
    power = iso.power(args.d)
    diag = flats.trans_length_sq(power)
    checks = [
        Check(
            "induced-length",
            "the induced generator has squared translation length ell^2 / d",
            result.length_sq == expected,
            {
                "length_sq": fraction_str(result.length_sq),
                "expected": fraction_str(expected),
            },
        ),
        Check(
            "power-is-diagonal",
            "the d-th power translates diagonally with squared length d * ell^2",
            diag.length_sq == args.d * ell * ell
            and power.orthogonal_matrix()
            == flats.AffineIsometry.identity(1, args.d).orthogonal_matrix(),
            {"power_length_sq": fraction_str(diag.length_sq)},
        ),
    ]
    payload = {
        "d": args.d,
        "ell": fraction_str(ell),
        "length_sq": fraction_str(result.length_sq),
        "min_point": [fraction_str(c) for c in result.min_point],
    }
    return Report(
        "induce", {"d": args.d, "ell": args.ell}, tuple(checks), payload
    )


# ---------------------------------------------------------------------------
# Dispatch.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autgeom",
        description="Exact verification of free-group automorphism identities "
        "and the lattice geometry of their commuting families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--pretty",
        action="store_true",
        help="render a human-readable table instead of JSON",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_parser(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("verify-relations", help="run the full identity suite")
    p.add_argument("--mode", choices=["aut", "out"], default="aut")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_relations)

    p = add_parser("gpq", help="check the three two-parameter relations "
                       "under the right-multiplier assignment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--w", required=True, help="word in a1..a(n-2), e.g. 'a1 a2^-1'")
    p.set_defaults(func=cmd_gpq)

    p = add_parser("inner-gpq", help="check the same relations under the "
                       "rank-3 inner assignment")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_inner_gpq)

    p = add_parser("gl-rep", help="abelianized cover action and 2x2 "
                       "representation of an automorphism expression")
    p.add_argument("expr", help="e.g. 'L12' or 'L21^2 R12'")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_gl_rep)

    p = add_parser("lk-basis", help="free basis of the index-(k-1) "
                       "subgroup generated by conjugates of powers")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_lk_basis)

    p = add_parser("sanov", help="search for short relations between the "
                       "two 2x2 representation matrices")
    p.add_argument("--power", type=int, default=2)
    p.add_argument("--max-len", type=int, default=8)
    p.set_defaults(func=cmd_sanov)

    p = add_parser("voronoi", help="exact Voronoi cell of a rank-3 lattice")
    p.add_argument(
        "--gens",
        required=True,
        help="semicolon-separated rational vectors, e.g. '1,1,0;1,-1,0;1,0,1;1,0,-1'",
    )
    p.add_argument("--out", help="write the cell as an OFF file plus JSON sidecar")
    p.add_argument("--precision", type=int, default=6)
    p.set_defaults(func=cmd_voronoi)

    p = add_parser("check-octo", help="check the four-vector conditions")
    p.add_argument("--u1", required=True)
    p.add_argument("--u2", required=True)
    p.add_argument("--v1", required=True)
    p.add_argument("--v2", required=True)
    p.set_defaults(func=cmd_check_octo)

    p = add_parser("nielsen-flat", help="canonical flat model for the "
                       "commuting Nielsen family, with Dirichlet report")
    p.add_argument("--scale", type=int, required=True)
    p.add_argument("--out", help="write the Dirichlet domain as an OFF file")
    p.add_argument("--precision", type=int, default=6)
    p.set_defaults(func=cmd_nielsen_flat)

    p = add_parser("lemma-pq", help="certificate that equidistant "
                       "collinear translates force the zero vector")
    p.add_argument("--tau", required=True, help="rational vector, e.g. '1,0'")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_lemma_pq)

    p = add_parser("induce", help="cyclic induced action of the integers "
                       "through an index-d subgroup translating by ell")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ell", required=True, help="rational translation length")
    p.set_defaults(func=cmd_induce)

    return parser


def _render_pretty(report: Report) -> str:
    lines = [f"command: {report.command}"]
    for key, value in report.args.items():
        lines.append(f"  {key} = {value}")
    width = max((len(c.name) for c in report.checks), default=0)
    for c in report.checks:
        verdict = "PASS" if c.passed else "FAIL"
        lines.append(f"  [{verdict}] {c.name.ljust(width)}  {c.claim}")
    for key, value in report.payload.items():
        lines.append(f"  {key}: {value}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> tuple[int, Report]:
    """Parse arguments and execute; returns (exit code, report).

    On a precondition or parse error the report carries the message in
    ``payload["error"]`` and the code is 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except PreconditionError as exc:
        return USAGE_ERROR, Report(args.subcommand, {}, (), {"error": str(exc)})
    return (0 if report.passed else 1), report


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except PreconditionError as exc:
        error = Report(args.subcommand, {}, (), {"error": str(exc)})
        print(json.dumps(error.to_dict()), file=sys.stderr)
        return USAGE_ERROR
    if args.pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report.to_dict(), indent=1))
    return 0 if report.passed else 1

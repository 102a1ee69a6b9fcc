"""Command-line front end.

One subcommand per run: closed-form tables, pointwise evaluation, spectrum
ladders, verification suites, and CSV emitters for the two standard plots.
All configuration is via long-form flags; defaults are mu = omega = hbar = 1.

Exit statuses: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .field import (
    FieldSpec,
    ShiftedState,
    energy_shifted,
    expectation_x_shifted,
    field_hamiltonian_residual,
    gamma_of,
    integer_branch_spectrum,
    potential_minimum,
)
from .ljmodel import (
    LJSpec,
    R_MIN_FACTOR,
    bound_levels,
    estimate_gamma_sq,
    fit_oscillator,
    harmonic_curve,
    lj_minimum,
    lj_potential,
)
from .numerics import Grid1D, gauss_hermite_rule, golden_section_minimize, overlap
from .oscillator import (
    Eigenstate,
    OscillatorSpec,
    energy,
    eval_psi,
    expectation_x,
    hamiltonian_residual,
)
from .pcf import eval_D, ode_residual, pcf_poly, pcf_rodrigues_poly
from .polys import DEGREE_CAP, PolyZ, hermite_recurrence, hermite_rodrigues

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

#: Closed forms of the first six polynomial factors, in monic form.
TABLE_POLYS = {
    0: (1,),
    1: (0, 1),
    2: (-1, 0, 1),
    3: (0, -3, 0, 1),
    4: (3, 0, -6, 0, 1),
    5: (0, 15, 0, -10, 0, 1),
}


def _fmt(v) -> str:
    """12 significant digits, '.' separator; integers render compactly."""
    return format(float(v), ".12g")


def _grid_count(lo: float, hi: float, step: float) -> int:
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo:
        raise ValueError("range needs hi >= lo")
    ratio = (hi - lo) / step
    nearest = round(ratio)
    if abs(ratio - nearest) <= 1e-6 * max(1.0, abs(ratio)):
        return int(nearest) + 1
    return int(math.floor(ratio)) + 1


def _srange(lo: float, hi: float, step: float) -> list[float]:
    return [lo + i * step for i in range(_grid_count(lo, hi, step))]


def _poly_str(p: PolyZ, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def _spec_from_args(args) -> OscillatorSpec:
    return OscillatorSpec(mu=args.mu, omega=args.omega, hbar=args.hbar)


def _write_csv(path: str, header: str, rows) -> None:
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_table(args) -> int:
    if args.n < 0 or args.n > DEGREE_CAP:
        raise ValueError(f"--n must be in 0..{DEGREE_CAP}")
    for n in range(args.n + 1):
        s = _poly_str(pcf_poly(n).poly)
        if s == "1":
            print(f"D_{n}(z) = exp(-z^2/4)")
        elif " " in s:
            print(f"D_{n}(z) = ({s}) exp(-z^2/4)")
        else:
            print(f"D_{n}(z) = {s} exp(-z^2/4)")
    return EXIT_OK


def _cmd_eval(args) -> int:
    spec = _spec_from_args(args)
    if args.n < 0 or args.n > DEGREE_CAP:
        raise ValueError(f"--n must be in 0..{DEGREE_CAP}")
    print(
        f"# n={args.n} mu={_fmt(spec.mu)} omega={_fmt(spec.omega)} "
        f"hbar={_fmt(spec.hbar)} E_n={_fmt(energy(args.n, spec))}"
    )
    print("x,z,D_n,psi_n")
    for x in _srange(args.lo, args.hi, args.step):
        z = spec.z_scale * x
        print(f"{_fmt(x)},{_fmt(z)},{_fmt(eval_D(args.n, z))},{_fmt(eval_psi(args.n, spec, x))}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    spec = _spec_from_args(args)
    if args.n < 0:
        raise ValueError("--n must be non-negative")
    print("n,E_n")
    for n in range(args.n + 1):
        print(f"{n},{_fmt(energy(n, spec))}")
    return EXIT_OK


def _cmd_field(args) -> int:
    spec = _spec_from_args(args)
    if args.gamma_sq is not None:
        if args.gamma_sq < 1:
            raise ValueError("--gamma-sq must be a positive integer")
        gamma = math.sqrt(args.gamma_sq)
        qe = gamma * math.sqrt(2.0 * spec.mu * spec.hbar * spec.omega**3)
        fld = FieldSpec(q=qe, efield=1.0)
    else:
        fld = FieldSpec(q=args.q, efield=args.efield)
        gamma = gamma_of(fld, spec)
    x_min, e_min = potential_minimum(fld, spec)
    print(f"gamma = {_fmt(gamma)}")
    print(f"gamma^2 = {_fmt(gamma * gamma)}")
    print(f"x_min = {_fmt(x_min)}")
    print(f"e_min = {_fmt(e_min)}")
    if args.gamma_sq is not None:
        m_max = args.n if args.n is not None else args.gamma_sq
        print("m,E_m,pcf_index")
        for m, e, idx in integer_branch_spectrum(args.gamma_sq, m_max, spec):
            print(f"{m},{_fmt(e)},{idx}")
    else:
        n_max = args.n if args.n is not None else 5
        if n_max < 0:
            raise ValueError("--n must be non-negative")
        print("n,E_n")
        for n in range(n_max + 1):
            print(f"{n},{_fmt(energy_shifted(n, gamma, spec))}")
    return EXIT_OK


def _cmd_lj(args) -> int:
    spec = LJSpec(epsilon=args.epsilon, sigma=args.sigma, gamma_sq=args.gamma_sq)
    osc = fit_oscillator(spec, mu=args.mu, hbar=args.hbar)
    r_min, u_min = lj_minimum(spec)
    print(f"r_min = {_fmt(r_min)}")
    print(f"u_min = {_fmt(u_min)}")
    print(f"omega = {_fmt(osc.omega)}")
    print(f"level_spacing = {_fmt(spec.epsilon / spec.gamma_sq)}")
    print("m,E_m")
    for m, e in bound_levels(spec):
        print(f"{m},{_fmt(e)}")
    if args.delta_e is not None:
        g, residual = estimate_gamma_sq(args.epsilon, args.delta_e)
        print(f"estimated_gamma_sq = {g}")
        print(f"estimate_residual = {_fmt(residual)}")
    return EXIT_OK


def _cmd_figure1(args) -> int:
    if not args.lo < args.hi:
        raise ValueError("needs --lo < --hi")
    rows = []
    for z in _srange(args.lo, args.hi, args.step):
        rows.append((z, eval_D(0, z), eval_D(1, z), eval_D(2, z), eval_D(3, z)))
    _write_csv(args.out, "z,D0,D1,D2,D3", rows)
    print(f"wrote {args.out} ({len(rows)} rows)")
    return EXIT_OK


def _levels_path(out: str) -> str:
    p = Path(out)
    return str(p.with_name(p.stem + "_levels" + (p.suffix or ".csv")))


def _cmd_figure2(args) -> int:
    spec = LJSpec(epsilon=args.epsilon, sigma=args.sigma, gamma_sq=args.gamma_sq)
    if args.fit_k:
        osc = fit_oscillator(spec, mu=args.mu, hbar=args.hbar)
        k = osc.mu * osc.omega**2
    else:
        k = args.k
    if not k > 0:
        raise ValueError("--k must be positive")
    r_grid = _srange(0.95 * spec.sigma, 2.0 * spec.sigma, 0.005 * spec.sigma)
    r_min = R_MIN_FACTOR * spec.sigma
    if min(abs(r - r_min) for r in r_grid) > 1e-12 * spec.sigma:
        r_grid.append(r_min)
        r_grid.sort()
    rows = [(r, lj_potential(r, spec), harmonic_curve(r, spec, k)) for r in r_grid]
    _write_csv(args.out, "r,U_lj,V_harm", rows)
    levels_out = args.levels_out or _levels_path(args.out)
    _write_csv(levels_out, "m,E_m", bound_levels(spec))
    print(f"wrote {args.out} ({len(rows)} rows) and {levels_out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str


def _free_suite() -> list[CheckResult]:
    spec = OscillatorSpec()
    checks = []

    ok = all(pcf_poly(n).poly.coeffs == TABLE_POLYS[n] for n in range(6))
    checks.append(CheckResult("free", "table-fixture", ok, "P_0..P_5 match the closed forms exactly"))

    ok = all(
        hermite_recurrence(n) == hermite_rodrigues(n)
        and pcf_poly(n).poly == pcf_rodrigues_poly(n).poly
        for n in range(51)
    )
    checks.append(CheckResult("free", "route-equivalence", ok, "both construction routes identical for n <= 50"))

    worst = max(abs(ode_residual(n, z)) for n in range(11) for z in _srange(-6.0, 6.0, 0.05))
    checks.append(
        CheckResult("free", "ode-residual", worst < 1e-8, f"max residual {worst:.3e} (tol 1e-08)")
    )

    rule = gauss_hermite_rule(64)
    states = [Eigenstate(n, spec) for n in range(11)]
    worst = 0.0
    for i in range(11):
        for j in range(i, 11):
            val = overlap(states[i], states[j], spec.gaussian_scale, rule)
            worst = max(worst, abs(val - (1.0 if i == j else 0.0)))
    checks.append(
        CheckResult("free", "orthonormality", worst < 1e-10, f"max |<i|j> - delta_ij| {worst:.3e} (tol 1e-10)")
    )

    grid = Grid1D(-6.0, 6.0, 1e-3)
    worst = max(hamiltonian_residual(n, spec, grid) for n in range(7))
    checks.append(
        CheckResult("free", "eigen-residual", worst < 1e-5, f"max residual at h=1e-3 {worst:.3e} (tol 1e-05)")
    )

    worst = max(abs(expectation_x(n, spec)) for n in range(11))
    checks.append(
        CheckResult("free", "position-expectation", worst < 1e-10, f"max |<x>| {worst:.3e} (tol 1e-10)")
    )
    return checks


def _field_suite(gamma_sq_values: list[int]) -> list[CheckResult]:
    spec = OscillatorSpec()
    checks = []

    worst = 0.0
    for g in gamma_sq_values:
        gamma = math.sqrt(g)
        for _, e, idx in integer_branch_spectrum(g, g + 2, spec):
            worst = max(worst, abs(e - energy_shifted(idx, gamma, spec)))
    checks.append(
        CheckResult("field", "branch-consistency", worst <= 1e-12, f"max ladder mismatch {worst:.3e} (tol 1e-12)")
    )

    worst = 0.0
    for g in gamma_sq_values:
        for m, e, _ in integer_branch_spectrum(g, -g + 2, spec):
            state = ShiftedState.integer_branch(m, g, spec)
            grid = Grid1D(state.x_center - 6.5, state.x_center + 6.5, 1e-3)
            worst = max(worst, field_hamiltonian_residual(state, e, grid))
    checks.append(
        CheckResult("field", "field-eigen-residual", worst < 1e-5, f"max residual at h=1e-3 {worst:.3e} (tol 1e-05)")
    )

    fld = FieldSpec(q=1.0, efield=1.0)
    gamma = gamma_of(fld, spec)
    target = -fld.q * fld.efield / (spec.mu * spec.omega**2)
    worst = max(
        abs(expectation_x_shifted(ShiftedState.continuous(n, gamma, spec)) - target) for n in range(6)
    )
    checks.append(
        CheckResult("field", "displacement-identity", worst < 1e-9, f"max |<x> + qE/(mu omega^2)| {worst:.3e} (tol 1e-09)")
    )

    x_min, e_min = potential_minimum(fld, spec)
    qe = fld.q * fld.efield
    xg, eg = golden_section_minimize(
        lambda x: 0.5 * spec.mu * spec.omega**2 * x * x + qe * x, x_min - 2.0, x_min + 2.0
    )
    identity = abs(e_min + spec.hbar * spec.omega * gamma * gamma)
    ok = abs(xg - x_min) < 1e-8 and abs(eg - e_min) < 1e-8 and identity <= 1e-14 * abs(e_min)
    checks.append(
        CheckResult(
            "field",
            "minimum-correction",
            ok,
            f"search offset {abs(xg - x_min):.3e}/{abs(eg - e_min):.3e}, "
            f"|e_min + hbar omega gamma^2| {identity:.3e}",
        )
    )
    return checks


def _lj_suite(epsilon: float, sigma: float, gamma_sq: int) -> list[CheckResult]:
    spec = LJSpec(epsilon=epsilon, sigma=sigma, gamma_sq=gamma_sq)
    checks = []

    levels = bound_levels(spec)
    spacing = epsilon / gamma_sq
    ok = len(levels) == gamma_sq and all(-epsilon < e < 0 for _, e in levels)
    if gamma_sq > 1:
        gaps = [b - a for (_, a), (_, b) in zip(levels, levels[1:])]
        ok = ok and max(abs(g - spacing) for g in gaps) <= 4e-16 * epsilon
    checks.append(
        CheckResult("lj", "ladder-shape", ok, f"{len(levels)} negative levels, spacing {_fmt(spacing)}")
    )

    osc = fit_oscillator(spec)
    branch = integer_branch_spectrum(gamma_sq, -1, osc)
    worst = max(abs(e_lj - e_br) for (_, e_lj), (_, e_br, _) in zip(levels, branch))
    checks.append(
        CheckResult("lj", "ladder-branch-equivalence", worst <= 1e-12, f"max mismatch {worst:.3e} (tol 1e-12)")
    )

    identity = abs(osc.hbar * osc.omega * gamma_sq - epsilon)
    checks.append(
        CheckResult("lj", "fit-identity", identity <= 1e-14 * epsilon, f"|hbar omega gamma^2 - epsilon| {identity:.3e}")
    )

    r_min, u_min = lj_minimum(spec)
    rg, ug = golden_section_minimize(lambda r: lj_potential(r, spec), 0.8 * sigma, 2.0 * sigma)
    ok = abs(rg - r_min) < 1e-8 and abs(ug - u_min) < 1e-10
    checks.append(
        CheckResult("lj", "minimum-search", ok, f"offsets {abs(rg - r_min):.3e} / {abs(ug - u_min):.3e}")
    )

    ok = all(estimate_gamma_sq(epsilon, epsilon / g)[0] == g for g in range(1, 1001))
    checks.append(CheckResult("lj", "spacing-inversion", ok, "round trip exact for gamma_sq = 1..1000"))
    return checks


def _cmd_verify(args) -> int:
    suites: list[CheckResult] = []
    if args.suite in ("free", "all"):
        suites.extend(_free_suite())
    if args.suite in ("field", "all"):
        gamma_sq_values = [args.gamma_sq] if args.gamma_sq is not None else [1, 2, 3, 4]
        if any(g < 1 for g in gamma_sq_values):
            raise ValueError("--gamma-sq must be a positive integer")
        suites.extend(_field_suite(gamma_sq_values))
    if args.suite in ("lj", "all"):
        suites.extend(_lj_suite(args.epsilon, args.sigma, args.gamma_sq if args.gamma_sq is not None else 2))
    for check in suites:
        status = "PASS" if check.ok else "FAIL"
        print(f"{status}  [{check.suite}] {check.name}: {check.detail}")
    failed = [c for c in suites if not c.ok]
    print(f"verify: {len(suites) - len(failed)}/{len(suites)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# parser


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", type=float, default=1.0, help="reduced mass (default 1)")
    p.add_argument("--omega", type=float, default=1.0, help="angular frequency (default 1)")
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paracyl",
        description="Harmonic-oscillator eigensystems in parabolic-cylinder form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the polynomial factors of D_0..D_n")
    p.add_argument("--n", type=int, default=5, help="highest index to print (default 5)")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("eval", help="evaluate D_n and psi_n on a grid of x values")
    p.add_argument("--n", type=int, default=0, help="quantum number (default 0)")
    _add_spec_flags(p)
    p.add_argument("--lo", type=float, default=0.0, help="first x (default 0)")
    p.add_argument("--hi", type=float, default=0.0, help="last x (default 0)")
    p.add_argument("--step", type=float, default=1.0, help="x step (default 1)")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("spectrum", help="print the free-oscillator energy ladder")
    p.add_argument("--n", type=int, default=8, help="highest level (default 8)")
    _add_spec_flags(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("field", help="uniform-field coupling, minimum, and ladder")
    p.add_argument("--q", type=float, default=1.0, help="charge (default 1)")
    p.add_argument("--efield", type=float, default=1.0, help="field magnitude (default 1)")
    p.add_argument("--gamma-sq", type=int, default=None, help="use the integer branch with this gamma^2")
    p.add_argument("--n", type=int, default=None, help="highest label to print")
    _add_spec_flags(p)
    p.set_defaults(handler=_cmd_field)

    p = sub.add_parser("lj", help="Lennard-Jones well and its harmonic ladder")
    p.add_argument("--epsilon", type=float, default=1.0, help="well depth (default 1)")
    p.add_argument("--sigma", type=float, default=1.0, help="length parameter (default 1)")
    p.add_argument("--gamma-sq", type=int, default=4, help="bound-state count (default 4)")
    p.add_argument("--delta-e", type=float, default=None, help="observed level spacing to invert")
    p.add_argument("--mu", type=float, default=1.0, help="reduced mass (default 1)")
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")
    p.set_defaults(handler=_cmd_lj)

    p = sub.add_parser("figure1", help="CSV of D_0..D_3 over a z grid")
    p.add_argument("--lo", type=float, default=-6.0, help="first z (default -6)")
    p.add_argument("--hi", type=float, default=6.0, help="last z (default 6)")
    p.add_argument("--step", type=float, default=0.05, help="z step (default 0.05)")
    p.add_argument("--out", type=str, default="figure1.csv", help="output CSV path")
    p.set_defaults(handler=_cmd_figure1)

    p = sub.add_parser("figure2", help="CSV of the L-J well, harmonic curve, and levels")
    p.add_argument("--epsilon", type=float, default=1.0, help="well depth (default 1)")
    p.add_argument("--sigma", type=float, default=1.0, help="length parameter (default 1)")
    p.add_argument("--k", type=float, default=70.0, help="harmonic force constant (default 70)")
    p.add_argument("--gamma-sq", type=int, default=4, help="bound-state count (default 4)")
    p.add_argument("--fit-k", action="store_true", help="derive k = mu omega^2 from the fitted oscillator")
    p.add_argument("--mu", type=float, default=1.0, help="reduced mass for --fit-k (default 1)")
    p.add_argument("--hbar", type=float, default=1.0, help="hbar for --fit-k (default 1)")
    p.add_argument("--out", type=str, default="figure2.csv", help="output CSV path")
    p.add_argument("--levels-out", type=str, default=None, help="levels CSV path (default <out>_levels.csv)")
    p.set_defaults(handler=_cmd_figure2)

    p = sub.add_parser("verify", help="run the numerical verification suites")
    p.add_argument("--suite", choices=["free", "field", "lj", "all"], default="all")
    p.add_argument("--gamma-sq", type=int, default=None, help="restrict field suite to one gamma^2")
    p.add_argument("--epsilon", type=float, default=1.0, help="L-J well depth (default 1)")
    p.add_argument("--sigma", type=float, default=1.0, help="L-J length parameter (default 1)")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

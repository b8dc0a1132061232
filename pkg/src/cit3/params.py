"""Scheme parameters and derived sequences.

All scalar knobs of the construction live in :class:`SchemeParams`; every
derived sequence (frequencies, amplitude budgets, mollification scales,
window lengths, spectral cutoffs, noise-cutoff thresholds) lives in
:class:`Schedule`.  Integer sequences are kept as exact Python integers,
so there is no rounding in ``lam[q] = a**(b**q)`` at any level.

Two validation regimes exist.  Strict mode enforces the full set of
admissibility constraints, which are unreachable on any desk-scale grid
(they force astronomically large ``a``).  Desk mode keeps the structural
constraints as errors and downgrades the asymptotic ones to warnings, so
the exact algebraic identities of the construction can still be exercised
on small grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "SchemeParams",
    "Schedule",
    "ValidationReport",
    "validate_params",
    "derive_schedule",
    "ScheduleOverflowError",
]

# Denominators of the two rational direction families used by the wave
# construction (see beltrami module).  validate_params checks divisibility
# of the perturbation frequencies jointly against these.
DIRECTION_DENOMINATORS = (5, 25)

# Prefactor 1/(7*4*2*2) of the sup-norm noise cutoff thresholds.
CUTOFF_PREFACTOR = 1.0 / 112.0


class ScheduleOverflowError(OverflowError):
    """A derived float sequence left the representable range at some level."""

    def __init__(self, level: int, what: str):
        self.level = level
        super().__init__(f"schedule overflow at level {level} ({what})")


@dataclass(frozen=True)
class SchemeParams:
    """Scalar parameters of the iteration.

    a, b        frequency base and exponent base, lam[q] = a**(b**q)
    beta        Hoelder budget exponent
    eps         cutoff exponent
    alpha       dissipation exponent in [0, 1/2); ignored when nu = 0
    nu          viscosity >= 0 (nu = 0 selects the Euler variant)
    r           moment order > 1
    L_noise     noise regularity constant >= 1 (enters delta_1 = 3 r L^2)
    q_max       number of iteration levels to build
    desk_mode   downgrade asymptotic constraints to warnings
    require_pow2_cube  additionally demand a in {8, 64, 512, ...} (strict
                form of the base restriction; off by default, the cube
                condition alone is what the construction uses)
    """

    a: int
    b: int = 2
    beta: float = 0.02
    eps: float = 0.02
    alpha: float = 0.25
    nu: float = 1.0
    r: float = 1.5
    L_noise: float = 1.0
    q_max: int = 1
    desk_mode: bool = False
    require_pow2_cube: bool = False


@dataclass
class ValidationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def rows(self) -> list[tuple[str, str]]:
        out = [(msg, "fail") for msg in self.failures]
        out += [(msg, "warn") for msg in self.warnings]
        if not out:
            out = [("all constraints satisfied", "pass")]
        return out


def _icbrt(n: int) -> int:
    """Exact integer cube root floor for n >= 0."""
    if n < 0:
        raise ValueError("negative argument")
    c = round(n ** (1.0 / 3.0))
    while c**3 > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c


def _is_cube(n: int) -> bool:
    return _icbrt(n) ** 3 == n


def _is_pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def validate_params(p: SchemeParams) -> ValidationReport:
    """Check every admissibility constraint and list each violation.

    Structural constraints fail in every mode.  Asymptotic constraints
    (224 < a^eps, the cutoff slope conditions, the beta/eps smallness
    windows) fail in strict mode and warn in desk mode.  The cube
    condition on ``a`` is structural in strict mode; in desk mode it is
    downgraded to a warning provided the perturbation frequencies remain
    integral against the direction-family denominators, which is the only
    property downstream code actually needs.
    """
    failures: list[str] = []
    warnings: list[str] = []

    def asym(msg: str) -> None:
        (warnings if p.desk_mode else failures).append(msg)

    if p.a < 2:
        failures.append(f"a >= 2 required (got {p.a})")
    if p.b < 2:
        failures.append(f"b >= 2 required (got {p.b})")
    if not p.beta > 0:
        failures.append("beta > 0 required")
    if not p.eps > 0:
        failures.append("eps > 0 required")
    if not (0 <= p.alpha < 0.5):
        failures.append(f"alpha in [0, 1/2) required (got {p.alpha})")
    if p.nu < 0:
        failures.append("nu >= 0 required")
    if not p.r > 1:
        failures.append(f"r > 1 required (got {p.r})")
    if p.L_noise < 1:
        failures.append(f"L >= 1 required (got {p.L_noise})")
    if p.q_max < 0:
        failures.append("q_max >= 0 required")

    cube = p.a >= 1 and _is_cube(p.a)
    if not cube:
        msg = f"a^(1/3) not an integer (a={p.a})"
        if p.desk_mode:
            warnings.append(msg)
        else:
            failures.append(msg)
    if p.require_pow2_cube and not (_is_pow2(p.a) and cube):
        failures.append(f"a in 2^(3N) required by strict flag (a={p.a})")

    # Joint integrality rule: every perturbation frequency lam[q], q >= 1,
    # must be a common multiple of the direction denominators so that
    # lam*zeta is an integer vector.
    if p.a >= 2 and p.b >= 2 and p.q_max >= 1:
        lcm = math.lcm(*DIRECTION_DENOMINATORS)
        lam1 = p.a**p.b
        if lam1 % lcm != 0:
            failures.append(
                f"lambda_1 = {lam1} not divisible by direction denominators "
                f"(lcm {lcm}); wave phases would not be torus-periodic"
            )

    if p.nu > 0 or not p.desk_mode:
        cap = min((1.0 - 2.0 * p.alpha) / 3.0, 1.0 / 24.0)
        if not p.beta < cap:
            asym(f"beta < min((1-2a)/3, 1/24) = {cap:.6g} violated (beta={p.beta})")
    if not p.eps < 1.0 / 24.0 - p.beta:
        asym(f"eps < 1/24 - beta = {1.0 / 24.0 - p.beta:.6g} violated (eps={p.eps})")
    if p.a >= 2 and not 224.0 < float(p.a) ** p.eps:
        asym(f"224 < a^eps violated (a^eps = {float(p.a) ** p.eps:.6g})")

    # Slope conditions for the noise cutoffs: the transition widths must
    # admit |chi'| <= 1.
    if p.a >= 2 and p.b >= 2 and p.eps > 0:
        for q in range(0, max(p.q_max, 0) + 2):
            try:
                lam = float(p.a ** (p.b**q))
            except OverflowError:
                break
            if not math.isfinite(lam):
                break
            w0 = CUTOFF_PREFACTOR * (lam ** (1.0 / 3.0) - lam ** (1.0 / 3.0 - p.eps))
            w1 = lam ** (2.0 / 3.0) - lam ** (2.0 / 3.0 - p.eps)
            if w0 < 1.0 or w1 < 1.0:
                asym(f"cutoff slope condition unsatisfiable at level {q}")
                break

    return ValidationReport(ok=not failures, failures=failures, warnings=warnings)


@dataclass(frozen=True)
class Schedule:
    """Derived sequences, indexed q = 0 .. q_max+1.

    lam        exact integers a**(b**q)
    delta      delta[0] = delta[1] = 3 r L^2, delta[q] = lam2^(2b) lam_q^(-2b) / 2
    ell        lam_q^(-8/5), the mollification scale
    m_gap      window length (lam_{q+1} lam_q)^(-3/4) (delta_{q+1} delta_q)^(-1/4);
               defined for q = 0 .. q_max
    f_cut      lam_q^(1/3); exact integers when a is a perfect cube
    cutoff_c0  (plateau, zero) thresholds of the sup-norm cutoff
    cutoff_c1  (plateau, zero) thresholds of the gradient cutoff
    """

    params: SchemeParams
    lam: tuple[int, ...]
    delta: tuple[float, ...]
    ell: tuple[float, ...]
    m_gap: tuple[float, ...]
    f_cut: tuple[float, ...]
    f_cut_exact: bool
    cutoff_c0: tuple[tuple[float, float], ...]
    cutoff_c1: tuple[tuple[float, float], ...]

    def level_count(self) -> int:
        return len(self.lam)


def derive_schedule(p: SchemeParams, *, validate: bool = True) -> Schedule:
    """Build all sequences for q = 0 .. q_max+1.

    The iteration needs m_gap[q] down to q = 0, which involves delta[0];
    the closed form only covers q >= 1, and the natural extension of the
    bounded non-increasing sequence is delta[0] = delta[1].
    """
    if validate:
        rep = validate_params(p)
        if not rep.ok:
            raise ValueError("invalid parameters: " + "; ".join(rep.failures))

    n_levels = p.q_max + 2
    lam = tuple(p.a ** (p.b**q) for q in range(n_levels))
    for q, l in enumerate(lam):
        if l > 2**1000:
            # Exact integers are fine at any size, but every float-valued
            # sequence below would overflow; refuse loudly.
            raise ScheduleOverflowError(q, f"lambda_{q} exceeds float range")
        try:
            float(l)
        except OverflowError:
            raise ScheduleOverflowError(q, f"lambda_{q} exceeds float range") from None

    delta1 = 3.0 * p.r * p.L_noise**2
    lam2 = float(p.a ** (p.b**2))
    delta = []
    for q in range(n_levels):
        if q <= 1:
            delta.append(delta1)
        else:
            d = 0.5 * lam2 ** (2.0 * p.beta) * float(lam[q]) ** (-2.0 * p.beta)
            if d == 0.0 or not math.isfinite(d):
                raise ScheduleOverflowError(q, "delta underflow")
            delta.append(d)

    ell = tuple(float(l) ** (-8.0 / 5.0) for l in lam)
    for q, e in enumerate(ell):
        if e == 0.0:
            raise ScheduleOverflowError(q, "ell underflow")

    cube_root = _icbrt(p.a)
    exact = cube_root**3 == p.a
    if exact:
        f_cut = tuple(float(cube_root ** (p.b**q)) for q in range(n_levels))
    else:
        f_cut = tuple(float(l) ** (1.0 / 3.0) for l in lam)

    m_gap = tuple(
        (float(lam[q + 1]) * float(lam[q])) ** (-0.75)
        * (delta[q + 1] * delta[q]) ** (-0.25)
        for q in range(n_levels - 1)
    )

    c0 = tuple(
        (
            CUTOFF_PREFACTOR * float(l) ** (1.0 / 3.0 - p.eps),
            CUTOFF_PREFACTOR * float(l) ** (1.0 / 3.0),
        )
        for l in lam
    )
    c1 = tuple(
        (float(l) ** (2.0 / 3.0 - p.eps), float(l) ** (2.0 / 3.0)) for l in lam
    )

    return Schedule(
        params=p,
        lam=lam,
        delta=tuple(delta),
        ell=ell,
        m_gap=m_gap,
        f_cut=f_cut,
        f_cut_exact=exact,
        cutoff_c0=c0,
        cutoff_c1=c1,
    )

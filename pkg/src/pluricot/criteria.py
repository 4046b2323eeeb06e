"""Generic-finiteness criteria for pluri-cotangent maps, in exact arithmetic.

A surface of general type whose cotangent bundle is strongly semi-ample maps
``P(Omega_X)`` into ``P(H^0(X, S^n Omega_X))``; the map is generically finite
onto its image precisely when that image is 3-dimensional.  The workable
sufficient conditions are counting conditions:

* ``h^0(X, S^n Omega_X) > (n+1)(n+2)/2`` forces generic finiteness for any
  n >= 2 with S^nOmega globally generated (the right-hand side is the
  largest ambient dimension count of a surface 2-covered by degree-n curves,
  attained only by Veronese surfaces), and bounds the degree of the map by
  ``n^3 (c1^2 - c2) / (h^0 - 3)``.
* For n >= 3 the vanishing of ``H^2(X, S^n Omega_X)`` makes
  ``chi(X, S^n Omega_X)`` a lower bound for h^0, so a pure Chern-number
  inequality suffices.  Rewritten in n it becomes the quadratic

      Q(n) = 2(c1^2-c2) n^2 - 2(c1^2+2c2+3) n + (c1^2+c2-12) > 0,

  an upward parabola whenever the second Segre number c1^2 - c2 is positive.
  With alpha = 2(c1^2-c2), beta = c1^2+2c2+3, gamma = c1^2+c2-12, every n
  beyond the larger root (beta + sqrt(beta^2 - alpha*gamma)) / alpha works.

The root is irrational in general, so this module never touches floating
point: positions relative to the root are decided by the exact equivalence
``x > (beta + sqrt(d))/alpha  <=>  alpha*x - beta > 0 and
(alpha*x - beta)^2 > d``, and printable brackets come from rational bisection
certified by those comparisons.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Optional, Union

from .chern import Rational, SurfaceInvariants, chi_sym_cotangent
from .errors import (
    HypothesisNotMetError,
    InconsistentInputError,
    PreconditionError,
    SegreNotPositiveError,
)

#: Guaranteed width of the rational bracket around the threshold root.
ROOT_BRACKET_WIDTH = Fraction(1, 10**6)


class Verdict(enum.Enum):
    """Outcome of classifying one symmetric power of the cotangent bundle."""

    GENERICALLY_FINITE = "GenericallyFinite"
    INCONCLUSIVE = "Inconclusive"
    VERONESE_OBSTRUCTED = "VeroneseObstructed"


@dataclass(frozen=True)
class ThresholdResult:
    """Quadratic-threshold data for a surface with positive second Segre number.

    ``[root_lower, root_upper]`` brackets the larger root of Q with width at
    most :data:`ROOT_BRACKET_WIDTH`; both endpoints are exact rationals and
    the bracket is certified by sign evaluations of Q, never by a floating
    square root.  When ``delta < 0`` the parabola has no real root (Q > 0
    everywhere) and the bracket fields are ``None``.  ``min_n`` is the
    smallest multiple of ``m`` that clears the root and the n >= 3 validity
    floor of the chi lower bound.
    """

    surface: SurfaceInvariants
    m: int
    alpha: int
    beta: int
    gamma: int
    delta: int
    root_lower: Optional[Fraction]
    root_upper: Optional[Fraction]
    min_n: Optional[int]


@dataclass(frozen=True)
class CriterionReport:
    """Per-n verdict bundle for one surface."""

    n: int
    chi: Rational
    h0_lower: Optional[int]
    veronese_dim: int
    theorem_b_holds: bool
    q_of_n: int
    deg_psi_upper: Optional[int]
    verdict: Verdict


class DiscriminantAnalysis(NamedTuple):
    """Reduced discriminant of Q computed two independent ways, plus its own discriminant data."""

    delta: int
    u: Fraction
    delta_bar_sign: int
    delta_bar: Fraction


def _require_min(n: int, minimum: int, what: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise ValueError(f"{what} must be an integer >= {minimum}, got {n!r}")


def quadratic_coefficients(surface: SurfaceInvariants) -> tuple[int, int, int]:
    """(alpha, beta, gamma) of the finiteness quadratic Q for this surface."""
    alpha = 2 * (surface.c1_sq - surface.c2)
    beta = surface.c1_sq + 2 * surface.c2 + 3
    gamma = surface.c1_sq + surface.c2 - 12
    return alpha, beta, gamma


def quadratic_Q(n: Union[int, Fraction], surface: SurfaceInvariants) -> Rational:
    """Q(n) = 2(c1^2-c2) n^2 - 2(c1^2+2c2+3) n + (c1^2+c2-12), exact."""
    alpha, beta, gamma = quadratic_coefficients(surface)
    return alpha * n * n - 2 * beta * n + gamma


def compare_to_upper_root(x: Union[int, Fraction], alpha: int, beta: int, delta: int) -> int:
    """Sign of ``x - (beta + sqrt(delta))/alpha`` for alpha > 0, delta >= 0.

    Exact: x exceeds the root iff alpha*x - beta is positive and its square
    exceeds delta.  Note alpha*(Q at x) = (alpha*x - beta)^2 - delta, so this
    is a Q-sign evaluation combined with the vertex side of x.
    """
    if alpha <= 0 or delta < 0:
        raise ValueError("comparison requires alpha > 0 and delta >= 0")
    t = Fraction(alpha) * x - beta
    if t < 0:
        return -1
    gap = t * t - delta
    if gap > 0:
        return 1
    if gap < 0:
        return -1
    return 0


def bracket_upper_root(
    alpha: int, beta: int, delta: int, width: Fraction = ROOT_BRACKET_WIDTH
) -> tuple[Fraction, Fraction]:
    """Rational bracket (lo, hi] of width <= ``width`` around (beta+sqrt(delta))/alpha.

    Starts from the integer bracket located with ``math.isqrt`` and bisects;
    every halving is certified by :func:`compare_to_upper_root`, so the root
    satisfies lo <= root < hi exactly.
    """
    if alpha <= 0 or delta < 0:
        raise ValueError("bracketing requires alpha > 0 and delta >= 0")
    if width <= 0:
        raise ValueError("width must be positive")
    hi_int = (beta + isqrt(delta)) // alpha + 1
    while compare_to_upper_root(hi_int, alpha, beta, delta) <= 0:
        hi_int += 1
    lo = Fraction(hi_int - 1)
    hi = Fraction(hi_int)
    if compare_to_upper_root(lo, alpha, beta, delta) == 0:
        # The root is this integer; a symmetric bracket is strict and exact.
        half = width / 2
        return lo - half, lo + half
    while hi - lo > width:
        mid = (lo + hi) / 2
        side = compare_to_upper_root(mid, alpha, beta, delta)
        if side > 0:
            hi = mid
        elif side < 0:
            lo = mid
        else:
            # mid hits a rational root exactly; shrink strictly around it.
            lo = (lo + mid) / 2
            hi = (mid + hi) / 2
    return lo, hi


def veronese_bound(n: int) -> int:
    """Largest ambient dimension count (n+1)(n+2)/2 of a surface 2-covered by degree-n curves.

    A section count strictly above this rules the Veronese case out; exact
    equality is the signature of the Veronese obstruction.
    """
    _require_min(n, 1)
    return (n + 1) * (n + 2) // 2


def h0_lower_bound(n: int, surface: SurfaceInvariants) -> Rational:
    """Certified lower bound for h^0(X, S^n Omega_X), valid for n >= 3.

    Equals chi(X, S^n Omega_X): for n >= 3 the H^2 term vanishes on a
    surface of general type with ample canonical class, so chi <= h^0.  The
    bound can be negative, in which case it is vacuous.  Whether the surface
    really is of general type with ample K is the caller's responsibility.
    """
    _require_min(n, 3)
    return chi_sym_cotangent(n, surface)


def theorem_b_holds(n: int, surface: SurfaceInvariants) -> bool:
    """Chern-number inequality forcing generic finiteness for n >= 3.

    Evaluates ``c1^2 > (1 + (6n-2)/(2n^2-2n+1)) c2 + (6n+12)/(2n^2-2n+1)``
    exactly, and independently the equivalent form
    ``chi(S^n Omega) > (n+1)(n+2)/2``; the two must agree, which is asserted
    on every call.  (Requires S^nOmega globally generated to conclude
    anything geometric; this function only decides the inequality.)
    """
    _require_min(n, 3)
    denom = 2 * n * n - 2 * n + 1
    rhs = (1 + Fraction(6 * n - 2, denom)) * surface.c2 + Fraction(6 * n + 12, denom)
    by_inequality = surface.c1_sq > rhs
    by_chi = chi_sym_cotangent(n, surface) > veronese_bound(n)
    if by_inequality != by_chi:
        raise AssertionError(
            f"inequality forms disagree at n={n}, surface={surface}: "
            f"{by_inequality} vs {by_chi}"
        )
    return by_inequality


def corollary_c_threshold(surface: SurfaceInvariants, m: int) -> ThresholdResult:
    """Threshold data: from which multiple of m onward is the quadratic criterion met.

    Requires alpha = 2(c1^2 - c2) > 0.  Returns the quadratic coefficients,
    the reduced discriminant delta = beta^2 - alpha*gamma, a certified
    rational bracket around the larger root when delta >= 0 (see
    :class:`ThresholdResult`), and ``min_n``: the smallest multiple of ``m``
    strictly beyond the root, forced >= 3 since the chi lower bound needs
    n >= 3.  The result is cross-checked by direct evaluation of
    :func:`theorem_b_holds` at ``min_n`` and, when still >= 3, at
    ``min_n - m``.
    """
    _require_min(m, 1, "m")
    alpha, beta, gamma = quadratic_coefficients(surface)
    if alpha <= 0:
        raise SegreNotPositiveError(
            f"second Segre number not positive: c1^2 - c2 = {surface.segre}"
        )
    delta = beta * beta - alpha * gamma

    if delta < 0:
        # Q has no real root and is positive everywhere; only the n >= 3
        # validity floor constrains min_n.
        root_lower: Optional[Fraction] = None
        root_upper: Optional[Fraction] = None
        min_n = m * -(-3 // m)
    else:
        root_lower, root_upper = bracket_upper_root(alpha, beta, delta)
        # Smallest multiple of m beyond the root; start just below the root
        # so the climb is O(1) instead of O(root).
        k = max((beta + isqrt(delta)) // (alpha * m), 0)
        min_n = max(k * m, m)
        while min_n < 3 or compare_to_upper_root(min_n, alpha, beta, delta) <= 0:
            min_n += m

    if not theorem_b_holds(min_n, surface):
        raise AssertionError(f"threshold {min_n} fails direct evaluation on {surface}")
    if min_n - m >= 3 and theorem_b_holds(min_n - m, surface):
        raise AssertionError(f"threshold {min_n} is not minimal on {surface}")

    return ThresholdResult(
        surface=surface,
        m=m,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        delta=delta,
        root_lower=root_lower,
        root_upper=root_upper,
        min_n=min_n,
    )


def discriminant_analysis(surface: SurfaceInvariants) -> DiscriminantAnalysis:
    """Reduced discriminant of Q computed two ways, with its positivity certificate.

    Requires c2 > 0 and u = c1^2/c2 > 1.  Computes delta = beta^2 -
    alpha*gamma and, independently, the quadratic-in-c2 expression
    ``(-u^2+4u+6) c2^2 + (30u-12) c2 + 9``; the two must agree exactly.
    Also returns delta_bar = 18(u-1)(13u+1), the reduced discriminant of
    that quadratic seen as a function of c2.  For u in (1, 3] (the range
    allowed by the Bogomolov-Miyaoka-Yau inequality) delta_bar > 0 and all
    coefficients are positive, so delta > 0; this is asserted.
    """
    if surface.c2 <= 0:
        raise PreconditionError(f"c2 must be positive, got {surface.c2}")
    u = Fraction(surface.c1_sq, surface.c2)
    if u <= 1:
        raise SegreNotPositiveError(f"u = c1^2/c2 = {u} must exceed 1")
    alpha, beta, gamma = quadratic_coefficients(surface)
    delta = beta * beta - alpha * gamma
    c2 = surface.c2
    delta_via_u = (-u * u + 4 * u + 6) * c2 * c2 + (30 * u - 12) * c2 + 9
    if delta_via_u != delta:
        raise AssertionError(
            f"discriminant expressions disagree on {surface}: {delta} vs {delta_via_u}"
        )
    delta_bar = 18 * (u - 1) * (13 * u + 1)
    if u <= 3 and delta <= 0:
        raise AssertionError(f"delta must be positive for u in (1, 3], got {delta} on {surface}")
    sign = (delta_bar > 0) - (delta_bar < 0)
    return DiscriminantAnalysis(delta=delta, u=u, delta_bar_sign=sign, delta_bar=delta_bar)


def deg_psi_upper_bound(n: int, surface: SurfaceInvariants, h0: int) -> int:
    """Upper bound floor(n^3 (c1^2-c2) / (h0 - 3)) for the degree of the n-th map.

    Valid when h0 = h^0(X, S^n Omega_X) strictly exceeds the Veronese count
    (n+1)(n+2)/2, so the image is a threefold of degree >= h0 - 3.
    """
    _require_min(n, 1)
    if not isinstance(h0, int) or h0 <= 3:
        raise ValueError(f"h0 must be an integer > 3, got {h0!r}")
    if h0 <= veronese_bound(n):
        raise HypothesisNotMetError(
            f"h0 = {h0} does not exceed the Veronese count {veronese_bound(n)}"
        )
    if surface.segre <= 0:
        raise SegreNotPositiveError(
            f"second Segre number not positive: c1^2 - c2 = {surface.segre}"
        )
    return n**3 * surface.segre // (h0 - 3)


def degree_relation(n: int, surface: SurfaceInvariants, deg_psi: int) -> Rational:
    """Degree of the image threefold: deg X_n = n^3 (c1^2-c2) / deg psi_n.

    The product deg X_n * deg psi_n equals the top self-intersection
    n^3 (c1^2 - c2), so deg psi_n must divide it; non-divisibility means the
    supplied degree is inconsistent and raises.
    """
    _require_min(n, 1)
    _require_min(deg_psi, 1, "deg_psi")
    if surface.segre <= 0:
        raise SegreNotPositiveError(
            f"second Segre number not positive: c1^2 - c2 = {surface.segre}"
        )
    total = n**3 * surface.segre
    if total % deg_psi != 0:
        raise InconsistentInputError(
            f"deg_psi = {deg_psi} does not divide n^3 (c1^2-c2) = {total}"
        )
    return total // deg_psi


def gauss_divisibility_check(deg_psi: int, deg_gauss: int) -> bool:
    """Whether deg_gauss divides deg_psi.

    The pluri-cotangent map factors through the projectivized universal
    bundle over the image of the Gauss map, so the Gauss degree divides the
    pluri-cotangent degree whenever the latter is finite.
    """
    _require_min(deg_psi, 1, "deg_psi")
    _require_min(deg_gauss, 1, "deg_gauss")
    return deg_psi % deg_gauss == 0


def _as_int_if_integral(x: Fraction) -> Rational:
    return int(x) if x.denominator == 1 else x


def classify(
    n: int,
    surface: SurfaceInvariants,
    global_generation_asserted: bool,
    h0_exact: Optional[int] = None,
) -> CriterionReport:
    """Assemble the full per-n report and verdict for one surface.

    Verdict logic:

    * ``VERONESE_OBSTRUCTED`` when ``h0_exact`` equals the Veronese count
      (n+1)(n+2)/2 exactly: the image can only be the n-th Veronese surface.
    * ``GENERICALLY_FINITE`` requires ``global_generation_asserted`` (global
      generation is never inferred here; it is a property of the surface the
      caller must certify) and either a supplied ``h0_exact`` strictly above
      the Veronese count with n >= 2, or n >= 3 with the Chern-number
      inequality of :func:`theorem_b_holds`.
    * otherwise ``INCONCLUSIVE``; in particular a supplied section count
      strictly below the Veronese bound is treated as inconclusive, and it
      suppresses the inequality path (an exact count below the bound
      contradicts the inequality's conclusion, so the count wins).

    A supplied ``h0_exact`` below n + 1 together with asserted global
    generation is impossible (a globally generated bundle of rank n + 1 has
    at least n + 1 independent sections) and raises.
    """
    _require_min(n, 1)
    if h0_exact is not None:
        if not isinstance(h0_exact, int) or h0_exact < 0:
            raise ValueError(f"h0_exact must be a nonnegative integer, got {h0_exact!r}")
        if global_generation_asserted and h0_exact < n + 1:
            raise InconsistentInputError(
                f"h0_exact = {h0_exact} is below the rank n+1 = {n + 1} of a globally "
                "generated bundle"
            )

    chi = chi_sym_cotangent(n, surface)
    ver = veronese_bound(n)
    q_n = quadratic_Q(n, surface)
    tb = q_n > 0
    if tb != (chi > ver):
        raise AssertionError(f"Q-sign and chi forms disagree at n={n} on {surface}")
    h0_lower = _as_int_if_integral(chi) if n >= 3 else None

    if h0_exact is not None and h0_exact == ver:
        verdict = Verdict.VERONESE_OBSTRUCTED
    elif not global_generation_asserted:
        verdict = Verdict.INCONCLUSIVE
    elif h0_exact is not None:
        verdict = (
            Verdict.GENERICALLY_FINITE if n >= 2 and h0_exact > ver else Verdict.INCONCLUSIVE
        )
    elif n >= 3 and tb:
        verdict = Verdict.GENERICALLY_FINITE
    else:
        verdict = Verdict.INCONCLUSIVE

    deg_upper: Optional[int] = None
    if verdict is Verdict.GENERICALLY_FINITE and surface.segre > 0:
        # h0 is an integer >= chi, so ceil(chi) is still a valid lower bound.
        h0_for_bound = h0_exact if h0_exact is not None else math.ceil(chi)
        if h0_for_bound > max(ver, 3):
            deg_upper = deg_psi_upper_bound(n, surface, h0_for_bound)

    return CriterionReport(
        n=n,
        chi=_as_int_if_integral(chi),
        h0_lower=h0_lower,
        veronese_dim=ver,
        theorem_b_holds=tb,
        q_of_n=int(q_n),
        deg_psi_upper=deg_upper,
        verdict=verdict,
    )

"""Constructors for three families of surfaces with strongly semi-ample cotangent bundle.

Each constructor returns a :class:`FamilySurface`: exact Chern and Hodge
numbers, the smallest period m for which S^mOmega is known to be globally
generated, and the family's section-count rules.

* ``abelian3fold_divisor(d1, d2, d3)``: a smooth ample divisor of
  polarization type (d1, d2, d3) in an abelian threefold.  Here Omega itself
  is globally generated, c1^2 = c2 = 6 d1d2d3, and
  h^0(S^nOmega) = (n+1)(n+2)/2 exactly for every n: the pluri-cotangent
  image is the n-th Veronese surface, so no symmetric power ever gives a
  generically finite map.  These are the boundary cases c1^2 - c2 = 0.
* ``abelian4fold_ci(d1, d2, d3, d4)``: the free involution quotient of a
  smooth symmetric complete intersection of two members of a polarization of
  type (d1, ..., d4) in an abelian fourfold.  With M^4 = 24 d1d2d3d4 the
  quotient has c1^2 = 2 M^4, c2 = (3/2) M^4, so the second Segre number is
  M^4/2 > 0; S^nOmega is globally generated for all even n, with
  h^0 >= (n+1)(n+2)(n+3)/6 for even n.
* ``product_quotient(k)``: a free diagonal Z/2-quotient of C x F where C is
  hyperelliptic of genus 3 and F has odd genus 2k + 1 >= 5.  Invariants
  pg = 3k + 1, q = k + 2, K^2 = 16k, c2 = 8k; S^2Omega is globally generated
  (hence all even powers) with h^0(S^2Omega) >= 7.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .chern import SurfaceInvariants
from .criteria import bracket_upper_root
from .errors import InvalidPolarizationError

#: Bracket width for the family threshold function h(k).
PQ_THRESHOLD_WIDTH = Fraction(1, 10**3)


class Family(enum.Enum):
    ABELIAN_3FOLD_DIVISOR = "Abelian3foldDivisor"
    ABELIAN_4FOLD_CI = "Abelian4foldCI"
    PRODUCT_QUOTIENT = "ProductQuotient"


@dataclass(frozen=True)
class FamilySurface:
    """A catalog member: invariants plus the family's certification rules."""

    family: Family
    invariants: SurfaceInvariants
    gg_period: int
    parameters: Tuple[int, ...]
    notes: Tuple[str, ...] = ()

    def gg_asserted(self, n: int) -> bool:
        """Whether S^nOmega is known globally generated for this family."""
        return n >= 1 and n % self.gg_period == 0

    def h0_exact(self, n: int) -> Optional[int]:
        """Exact section count of S^nOmega, where the family determines one."""
        if self.family is Family.ABELIAN_3FOLD_DIVISOR and n >= 1:
            return (n + 1) * (n + 2) // 2
        return None

    def h0_lower(self, n: int) -> Optional[int]:
        """Certified lower bound for h^0(S^nOmega), where the family provides one."""
        if self.family is Family.ABELIAN_3FOLD_DIVISOR:
            return self.h0_exact(n)
        if self.family is Family.ABELIAN_4FOLD_CI and n >= 2 and n % 2 == 0:
            return (n + 1) * (n + 2) * (n + 3) // 6
        if self.family is Family.PRODUCT_QUOTIENT and n == 2:
            return 7
        return None


def _check_chain(ds: Sequence[int]) -> Tuple[int, ...]:
    for d in ds:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InvalidPolarizationError(f"polarization entries must be positive integers, got {ds!r}")
    for a, b in zip(ds, ds[1:]):
        if b % a != 0:
            raise InvalidPolarizationError(f"divisibility chain violated: {a} does not divide {b}")
    return tuple(ds)


def abelian3fold_divisor(d1: int, d2: int, d3: int) -> FamilySurface:
    """Smooth ample divisor of type (d1, d2, d3) in an abelian threefold.

    With P = d1 d2 d3: K^2 = 6P, chi(O) = P, pg = P + 2, q = 3, hence
    c2 = 12P - 6P = 6P and the second Segre number vanishes.  Omega is
    globally generated (gg_period 1).
    """
    ds = _check_chain((d1, d2, d3))
    p = d1 * d2 * d3
    inv = SurfaceInvariants(c1_sq=6 * p, c2=6 * p, pg=p + 2, q=3)
    return FamilySurface(
        family=Family.ABELIAN_3FOLD_DIVISOR,
        invariants=inv,
        gg_period=1,
        parameters=ds,
    )


def abelian4fold_ci(d1: int, d2: int, d3: int, d4: int) -> FamilySurface:
    """Involution quotient of a symmetric complete intersection in an abelian fourfold.

    With M^4 = 24 d1d2d3d4: c1^2 = 2 M^4 and c2 = (3/2) M^4 (integral since
    M^4 is divisible by 24), so chi(O) = 7 d1d2d3d4.  The quotient kills all
    1-forms, so q = 0 and pg = chi(O) - 1.  Even symmetric powers of Omega
    are globally generated (gg_period 2).
    """
    ds = _check_chain((d1, d2, d3, d4))
    p = d1 * d2 * d3 * d4
    m4 = 24 * p
    inv = SurfaceInvariants(c1_sq=2 * m4, c2=3 * m4 // 2, pg=7 * p - 1, q=0)
    return FamilySurface(
        family=Family.ABELIAN_4FOLD_CI,
        invariants=inv,
        gg_period=2,
        parameters=ds,
    )


def product_quotient(k: int) -> FamilySurface:
    """Free Z/2-quotient of C x F, C hyperelliptic of genus 3, F of genus 2k + 1.

    Requires k >= 2.  Invariants: K^2 = 16k, pg = 3k + 1, q = k + 2, so
    chi(O) = 2k and c2 = 8k; the second Segre number is 8k > 0.  S^2Omega is
    globally generated (gg_period 2) with h^0(S^2Omega) >= 7.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    inv = SurfaceInvariants(c1_sq=16 * k, c2=8 * k, pg=3 * k + 1, q=k + 2)
    return FamilySurface(
        family=Family.PRODUCT_QUOTIENT,
        invariants=inv,
        gg_period=2,
        parameters=(k,),
        notes=(
            "existence of the genus-(2k+1) curve F needs the double-cover base to be "
            "non-hyperelliptic, or hyperelliptic with the torsion class not a difference "
            "of Weierstrass points; the invariants are unconditional",
        ),
    )


def pq_threshold_h(k: int) -> Tuple[Fraction, Fraction]:
    """Bracket of width <= 10^-3 around the product-quotient threshold h(k).

    h(k) = (32k + 3 + sqrt(640 k^2 + 384 k + 9)) / (16k) is the root of the
    finiteness quadratic for the k-th product-quotient surface; the bracket
    is computed by exact-sign bisection on that radical expression, with the
    radicand written down independently of :func:`.criteria.corollary_c_threshold`
    (agreement between the two is a library self-check).  h is strictly
    decreasing on k >= 2, from h(2) ~ 3.899 toward (32 + sqrt(640))/16 ~ 3.581.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    return bracket_upper_root(
        alpha=16 * k,
        beta=32 * k + 3,
        delta=640 * k * k + 384 * k + 9,
        width=PQ_THRESHOLD_WIDTH,
    )

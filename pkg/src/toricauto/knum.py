"""Numerical K-theory of a toric surface.

A class is stored as ``(rank, c_1, chi)`` where ``chi = chi(O_X, E)``.  These
coordinates keep everything integral.  Hirzebruch-Riemann-Roch gives the
Euler pairing

    chi(x, y) = r_x chi_y + r_y chi_x - r_x r_y - c_x.c_y + r_y (c_x.K)

and the equivalences of the derived category act on classes as integer
matrices preserving it: shifts by ``-1``, line-bundle twists, automorphisms
of the fan, and spherical twists ``x -> x - chi(s, x) s``.

All the ``is_*_numerical`` predicates test necessary conditions only.  The
K-group sees alternating sums, not the individual ``Ext`` dimensions; where
those can be computed (line bundles) :func:`is_special_pair_line_bundles`
does the real check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .divisors import (
    DivisorClass,
    TorusDivisor,
    canonical_class,
    chi as rr_chi,
    hom_complex_dims,
    intersect,
    is_ample,
    picard,
    ray_divisor,
)
from .errors import InvalidIndex, InvariantViolation, NotASymmetry, PolarizationNotFound
from .fan import Fan, FanSymmetry, fan_symmetries
from .lattice import IntMatrix, nonnegative_solution, solve_rational

__all__ = [
    "KClass",
    "KAutomorphism",
    "ExceptionalPresentation",
    "euler",
    "line_bundle_class",
    "curve_sheaf_class",
    "point_class",
    "class_of",
    "tensor_line_bundle",
    "tensor_canonical",
    "tensor_matrix",
    "twist",
    "twist_matrix",
    "shift",
    "shift_matrix",
    "pullback",
    "pullback_matrix",
    "is_spherical_numerical",
    "is_exceptional_numerical",
    "is_special_pair_numerical",
    "is_special_pair_line_bundles",
    "find_polarization",
    "exceptional_presentation",
    "braid_relation_check",
    "twists_commute",
    "braid_identity_holds",
]


@dataclass(frozen=True)
class KClass:
    rank: int
    det: DivisorClass
    chi: int

    def __add__(self, other: KClass) -> KClass:
        return KClass(self.rank + other.rank, self.det + other.det, self.chi + other.chi)

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def __neg__(self) -> KClass:
        return KClass(-self.rank, self.det.negate(), -self.chi)

    def __mul__(self, k: int) -> KClass:
        return KClass(k * self.rank, self.det * k, k * self.chi)

    __rmul__ = __mul__

    def to_vector(self) -> tuple[int, ...]:
        return (self.rank, *self.det.coords, self.chi)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> KClass:
        v = tuple(int(x) for x in v)
        return cls(v[0], DivisorClass(v[1:-1]), v[-1])

    @classmethod
    def zero(cls, picard_rank: int) -> KClass:
        return cls(0, DivisorClass.zero(picard_rank), 0)


@dataclass(frozen=True)
class KAutomorphism:
    """Integer matrix acting on ``(rank, c_1 coords..., chi)`` column vectors."""

    matrix: IntMatrix

    def __call__(self, x: KClass) -> KClass:
        return KClass.from_vector(self.matrix.apply(x.to_vector()))

    def __matmul__(self, other: KAutomorphism) -> KAutomorphism:
        return KAutomorphism(self.matrix @ other.matrix)

    def is_invertible(self) -> bool:
        return self.matrix.is_unimodular()

    @classmethod
    def identity(cls, picard_rank: int) -> KAutomorphism:
        return cls(IntMatrix.identity(picard_rank + 2))


def _matrix_of(fn, picard_rank: int) -> KAutomorphism:
    n = picard_rank + 2
    cols = [fn(KClass.from_vector([int(i == j) for i in range(n)])).to_vector() for j in range(n)]
    return KAutomorphism(IntMatrix.from_columns(cols, n))


def _K(f: Fan) -> DivisorClass:
    return picard(f).project(canonical_class(f))


def euler(f: Fan, x: KClass, y: KClass) -> int:
    """``sum (-1)^i dim Ext^i(x, y)`` on the level of classes."""
    return (
        x.rank * y.chi
        + y.rank * x.chi
        - x.rank * y.rank
        - intersect(f, x.det, y.det)
        + y.rank * intersect(f, x.det, _K(f))
    )


def line_bundle_class(f: Fan, D: TorusDivisor | DivisorClass) -> KClass:
    pic = picard(f)
    c = D if isinstance(D, DivisorClass) else pic.project(D)
    return KClass(1, c, rr_chi(f, c))


def curve_sheaf_class(f: Fan, C: int, a: int = 0) -> KClass:
    """Class of ``O_C(a)`` for the invariant curve ``C = D_label``."""
    if C not in f.labels:
        raise InvalidIndex(f"no ray {C}")
    return KClass(0, picard(f).ray_class(C), a + 1)


def point_class(f: Fan) -> KClass:
    return KClass(0, DivisorClass.zero(picard(f).rank), 1)


def class_of(f: Fan, kind: str, *args) -> KClass:
    """``kind`` is ``"line_bundle"`` (divisor), ``"curve_sheaf"`` (ray, degree) or ``"point"``."""
    if kind == "line_bundle":
        return line_bundle_class(f, *args)
    if kind == "curve_sheaf":
        return curve_sheaf_class(f, *args)
    if kind == "point":
        return point_class(f)
    raise ValueError(f"unknown object kind {kind!r}")


def tensor_line_bundle(f: Fan, x: KClass, L: DivisorClass | TorusDivisor) -> KClass:
    pic = picard(f)
    L = L if isinstance(L, DivisorClass) else pic.project(L)
    K = _K(f)
    num = intersect(f, L, L) - intersect(f, L, K)
    if num % 2:
        raise InvariantViolation("L.(L - K) is odd", f.rays)
    return KClass(
        x.rank,
        x.det + L * x.rank,
        x.chi + intersect(f, x.det, L) + x.rank * (num // 2),
    )


def tensor_canonical(f: Fan, x: KClass) -> KClass:
    return tensor_line_bundle(f, x, _K(f))


def tensor_matrix(f: Fan, L: DivisorClass | TorusDivisor) -> KAutomorphism:
    return _matrix_of(lambda x: tensor_line_bundle(f, x, L), picard(f).rank)


def twist(f: Fan, s: KClass, x: KClass) -> KClass:
    """Action of the twist functor along ``s`` on the class ``x``."""
    return x - s * euler(f, s, x)


def twist_matrix(f: Fan, s: KClass) -> KAutomorphism:
    return _matrix_of(lambda x: twist(f, s, x), picard(f).rank)


def shift(x: KClass) -> KClass:
    return -x


def shift_matrix(f: Fan) -> KAutomorphism:
    return _matrix_of(shift, picard(f).rank)


def _symmetry(f: Fan, g) -> FanSymmetry:
    group = fan_symmetries(f)
    m = g.matrix if isinstance(g, FanSymmetry) else g
    found = group.find(m)
    if found is None:
        raise NotASymmetry(f"{m} does not permute the rays")
    return found


def pullback(f: Fan, g, x: KClass) -> KClass:
    """Pull back along the automorphism induced by the fan symmetry ``g``."""
    sym = _symmetry(f, g)
    pic = picard(f)
    a = pic.lift(x.det).coeffs
    pulled = TorusDivisor(tuple(a[j - 1] for j in sym.permutation))
    return KClass(x.rank, pic.project(pulled), x.chi)


def pullback_matrix(f: Fan, g) -> KAutomorphism:
    sym = _symmetry(f, g)
    return _matrix_of(lambda x: pullback(f, sym, x), picard(f).rank)


def is_spherical_numerical(f: Fan, x: KClass) -> bool:
    return euler(f, x, x) == 2 and tensor_canonical(f, x) == x


def is_exceptional_numerical(f: Fan, x: KClass) -> bool:
    return euler(f, x, x) == 1


def is_special_pair_numerical(f: Fan, e1: KClass, e2: KClass) -> bool:
    return (
        is_exceptional_numerical(f, e1)
        and is_exceptional_numerical(f, e2)
        and euler(f, e2, e1) == 0
        and euler(f, e1, e2) == 0
    )


def is_special_pair_line_bundles(f: Fan, A, B) -> bool:
    """Genuine check via cohomology that ``(O(A), O(B))`` is a special exceptional pair."""
    return (
        hom_complex_dims(f, A, A) == (1, 0, 0)
        and hom_complex_dims(f, B, B) == (1, 0, 0)
        and hom_complex_dims(f, B, A) == (0, 0, 0)
        and hom_complex_dims(f, A, B) == (1, 1, 0)
    )


def _class_with_intersections(f: Fan, ell: Sequence[int]) -> DivisorClass:
    pic = picard(f)
    rhs = [ell[lab - 1] for lab in pic.basis_rays]
    sol = solve_rational(pic.intersection_matrix.tolist(), rhs)
    if sol is None or any(x.denominator != 1 for x in sol):
        raise InvariantViolation("intersection form is not unimodular", f.rays)
    c = DivisorClass(tuple(int(x) for x in sol))
    if any(intersect(f, c, ray_divisor(f, lab)) != ell[lab - 1] for lab in f.labels):
        raise InvariantViolation("intersection numbers do not determine a class", f.rays)
    return c


def find_polarization(f: Fan, C: int) -> DivisorClass:
    """An ample class ``H`` with ``H.C = 1`` for the ``-2``-curve ``C``.

    Ample classes are exactly those whose intersection numbers ``l_i = H.D_i``
    are all positive; any integer vector with ``sum l_i v_i = 0`` occurs.  An
    ample ``A`` comes from a rational vertex of ``l >= 1``; making ``A.C`` odd
    and adding ``(A.C - 1)/2`` copies of ``C`` brings ``H.C`` down to 1 while
    only increasing the other intersection numbers.
    """
    d = len(f)
    rays = f.rays
    A_eq = [[v[0] for v in rays], [v[1] for v in rays]]
    target = [-sum(v[0] for v in rays), -sum(v[1] for v in rays)]
    mu = nonnegative_solution(A_eq, target)
    if mu is None:
        raise PolarizationNotFound(f"no ample class on fan {rays}")
    q = math.lcm(*(x.denominator for x in mu))
    ell = [int((1 + x) * q) for x in mu]
    ample = _class_with_intersections(f, ell)
    if ell[C - 1] % 2 == 0:
        nb = C % d + 1
        N = max(1, f.alphas[nb - 1] + 1)
        ample = ample * N + picard(f).ray_class(nb)
    AC = intersect(f, ample, ray_divisor(f, C))
    k = (AC - 1) // 2
    H = ample + picard(f).ray_class(C) * k
    if intersect(f, H, ray_divisor(f, C)) != 1 or not is_ample(f, H):
        raise PolarizationNotFound(f"construction failed for curve {C}")
    return H


@dataclass(frozen=True)
class ExceptionalPresentation:
    """A triangle ``O(E') -> O(E) -> S`` with ``S = O_C(a)``."""

    curve: int
    degree: int
    E_prime: DivisorClass
    E: DivisorClass
    S: KClass
    H: DivisorClass
    triangle_holds: bool
    hom_prime_to_E: tuple[int, int, int]
    hom_E_to_prime: tuple[int, int, int]

    @property
    def special_pair(self) -> bool:
        return self.hom_prime_to_E == (1, 1, 0) and self.hom_E_to_prime == (0, 0, 0)


def exceptional_presentation(f: Fan, C: int, a: int) -> ExceptionalPresentation:
    """Present ``O_C(a)`` as the cone of ``O(-C + aH) -> O(aH)``."""
    if f.profile[C - 1] != -2:
        raise InvalidIndex(f"D_{C} is not a -2-curve")
    H = find_polarization(f, C)
    Cc = picard(f).ray_class(C)
    E = H * a
    E_prime = E - Cc
    S = curve_sheaf_class(f, C, a)
    triangle = line_bundle_class(f, E) - line_bundle_class(f, E_prime) == S
    return ExceptionalPresentation(
        curve=C,
        degree=a,
        E_prime=E_prime,
        E=E,
        S=S,
        H=H,
        triangle_holds=triangle,
        hom_prime_to_E=hom_complex_dims(f, E_prime, E),
        hom_E_to_prime=hom_complex_dims(f, E, E_prime),
    )


def twists_commute(f: Fan, C1: int, C2: int, a: int = -1) -> bool:
    t1 = twist_matrix(f, curve_sheaf_class(f, C1, a))
    t2 = twist_matrix(f, curve_sheaf_class(f, C2, a))
    return t1 @ t2 == t2 @ t1


def braid_identity_holds(f: Fan, C1: int, C2: int, a: int = -1) -> bool:
    t1 = twist_matrix(f, curve_sheaf_class(f, C1, a))
    t2 = twist_matrix(f, curve_sheaf_class(f, C2, a))
    return t1 @ t2 @ t1 == t2 @ t1 @ t2


def braid_relation_check(f: Fan, chain: Sequence[int]) -> bool:
    """Braid relations among the twists by ``O_{C_i}(-1)`` along an A-chain."""
    chain = list(chain)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if j - i >= 2 and not twists_commute(f, chain[i], chain[j]):
                return False
            if j - i == 1 and not braid_identity_holds(f, chain[i], chain[j]):
                return False
    return True

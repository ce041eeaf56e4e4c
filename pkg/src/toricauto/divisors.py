"""Divisors, the Picard group and line-bundle cohomology on a toric surface.

The Picard group is the cokernel of ``M -> Z^rays, m -> (<m, v_i>)_i``.  Because
``v_1, v_2`` form a lattice basis, the two principal relations can be solved
for ``D_1`` and ``D_2``, and the classes of ``D_3, ..., D_d`` form a basis.
Divisor classes are integer vectors in that basis.

Cohomology of ``O(D)`` for ``D = sum a_i D_i`` is computed from lattice points:
``h^0`` counts ``m`` with ``<m, v_i> >= -a_i`` for all ``i``, ``h^2`` is ``h^0`` of
``K - D`` by Serre duality, and ``h^1`` is what Riemann-Roch leaves over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import InvariantViolation
from .fan import Fan, det2
from .lattice import IntMatrix, cone_membership

__all__ = [
    "TorusDivisor",
    "DivisorClass",
    "PicardPresentation",
    "picard",
    "ray_divisor",
    "intersect",
    "canonical_class",
    "is_ample",
    "is_nef",
    "is_big",
    "chi",
    "h0",
    "cohomology",
    "hom_complex_dims",
]


class _IntVector:
    """Shared arithmetic for the two divisor types."""

    __slots__ = ()

    def _values(self) -> tuple[int, ...]:
        raise NotImplementedError

    def _make(self, values):
        return type(self)(tuple(values))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if len(self._values()) != len(other._values()):
            raise ValueError("length mismatch")
        return self._make(a + b for a, b in zip(self._values(), other._values()))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + other.negate()

    def __mul__(self, k: int):
        return self._make(k * a for a in self._values())

    __rmul__ = __mul__

    def negate(self):
        return self._make(-a for a in self._values())

    __neg__ = negate

    def __len__(self):
        return len(self._values())


@dataclass(frozen=True)
class TorusDivisor(_IntVector):
    """``sum coeffs[i - 1] * D_i``."""

    coeffs: tuple[int, ...]

    def _values(self):
        return self.coeffs

    @classmethod
    def zero(cls, d: int) -> TorusDivisor:
        return cls((0,) * d)


@dataclass(frozen=True)
class DivisorClass(_IntVector):
    """Coordinates of a class in the basis of :class:`PicardPresentation`."""

    coords: tuple[int, ...]

    def _values(self):
        return self.coords

    @classmethod
    def zero(cls, rank: int) -> DivisorClass:
        return cls((0,) * rank)


Divisor = Union[TorusDivisor, DivisorClass]


@dataclass(frozen=True)
class PicardPresentation:
    fan: Fan
    basis_rays: tuple[int, ...]
    ray_classes: tuple[tuple[int, ...], ...]
    intersection_matrix: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.basis_rays)

    def project(self, D: TorusDivisor) -> DivisorClass:
        if len(D.coeffs) != len(self.fan):
            raise ValueError(f"divisor has {len(D.coeffs)} coefficients, fan has {len(self.fan)} rays")
        out = [0] * self.rank
        for a, cls in zip(D.coeffs, self.ray_classes):
            if a:
                for k, c in enumerate(cls):
                    out[k] += a * c
        return DivisorClass(tuple(out))

    def lift(self, c: DivisorClass) -> TorusDivisor:
        if len(c.coords) != self.rank:
            raise ValueError("class has the wrong length")
        coeffs = [0] * len(self.fan)
        for lab, x in zip(self.basis_rays, c.coords):
            coeffs[lab - 1] = x
        return TorusDivisor(tuple(coeffs))

    def ray_class(self, label: int) -> DivisorClass:
        return DivisorClass(self.ray_classes[label - 1])

    def principal_divisors(self) -> tuple[TorusDivisor, TorusDivisor]:
        """``div(chi^m)`` for the standard basis ``m = e_1^*, e_2^*`` of ``M``."""
        return (
            TorusDivisor(tuple(v[0] for v in self.fan.rays)),
            TorusDivisor(tuple(v[1] for v in self.fan.rays)),
        )

    def format_class(self, c: DivisorClass) -> str:
        """Ray notation such as ``D_3 + 2 D_4 - D_8``."""
        terms = []
        for lab, x in zip(self.basis_rays, c.coords):
            if x == 0:
                continue
            sign = "-" if x < 0 else "+"
            mag = "" if abs(x) == 1 else f"{abs(x)} "
            terms.append(f"{sign} {mag}D_{lab}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@lru_cache(maxsize=4096)
def picard(f: Fan) -> PicardPresentation:
    """Picard group with basis ``D_3, ..., D_d``."""
    d = len(f)
    v1, v2 = f.ray(1), f.ray(2)
    # v_i = a_i v_1 + b_i v_2
    a = [det2(v, v2) for v in f.rays]
    b = [det2(v1, v) for v in f.rays]
    rank = d - 2
    classes = []
    for lab in f.labels:
        if lab == 1:
            classes.append(tuple(-a[i] for i in range(2, d)))
        elif lab == 2:
            classes.append(tuple(-b[i] for i in range(2, d)))
        else:
            classes.append(tuple(int(k == lab - 3) for k in range(rank)))
    gram = [
        [_torus_pair(f, _unit(d, i), _unit(d, j)) for j in range(3, d + 1)]
        for i in range(3, d + 1)
    ]
    return PicardPresentation(f, tuple(range(3, d + 1)), tuple(classes), IntMatrix(gram, rank))


def _unit(d: int, label: int) -> tuple[int, ...]:
    return tuple(int(k == label - 1) for k in range(d))


def _torus_pair(f: Fan, x: Sequence[int], y: Sequence[int]) -> int:
    d = len(f)
    alphas = f.alphas
    total = 0
    for i in range(d):
        if x[i]:
            total += x[i] * (y[i - 1] + y[(i + 1) % d] - alphas[i] * y[i])
    return total


def _as_torus(f: Fan, D: Divisor) -> TorusDivisor:
    if isinstance(D, TorusDivisor):
        if len(D.coeffs) != len(f):
            raise ValueError(f"divisor has {len(D.coeffs)} coefficients, fan has {len(f)} rays")
        return D
    if isinstance(D, DivisorClass):
        return picard(f).lift(D)
    raise TypeError(f"expected a divisor, got {type(D).__name__}")


def ray_divisor(f: Fan, label: int) -> TorusDivisor:
    return TorusDivisor(_unit(len(f), label))


def intersect(f: Fan, A: Divisor, B: Divisor) -> int:
    """Intersection number; ``D_i.D_j`` is 1 for adjacent rays, 0 for distant ones
    and ``-alpha_i`` on the diagonal."""
    return _torus_pair(f, _as_torus(f, A).coeffs, _as_torus(f, B).coeffs)


def canonical_class(f: Fan) -> TorusDivisor:
    """``K = -sum D_i``."""
    return TorusDivisor((-1,) * len(f))


def is_ample(f: Fan, D: Divisor) -> bool:
    return all(intersect(f, D, ray_divisor(f, i)) > 0 for i in f.labels)


def is_nef(f: Fan, D: Divisor) -> bool:
    return all(intersect(f, D, ray_divisor(f, i)) >= 0 for i in f.labels)


def is_big(f: Fan, D: Divisor) -> bool:
    """Whether the class of ``D`` is interior to the effective cone."""
    pic = picard(f)
    c = D if isinstance(D, DivisorClass) else pic.project(_as_torus(f, D))
    return cone_membership(pic.ray_classes, c.coords, strict=True)


def chi(f: Fan, D: Divisor) -> int:
    """Riemann-Roch: ``chi(O(D)) = 1 + (D.D - D.K) / 2``."""
    D = _as_torus(f, D)
    num = intersect(f, D, D) - intersect(f, D, canonical_class(f))
    if num % 2:
        raise InvariantViolation("D.(D - K) is odd; the intersection form is broken", f.rays)
    return 1 + num // 2


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def h0(f: Fan, D: Divisor) -> int:
    """Number of lattice points of ``P_D = {m : <m, v_i> >= -a_i}``."""
    a = _as_torus(f, D).coeffs
    rays = f.rays
    rhs = [-x for x in a]  # <m, v_i> >= rhs_i
    xs = []
    n = len(rays)
    for i in range(n):
        for j in range(i + 1, n):
            vi, vj = rays[i], rays[j]
            dt = det2(vi, vj)
            if dt == 0:
                continue
            x = Fraction(rhs[i] * vj[1] - vi[1] * rhs[j], dt)
            y = Fraction(vi[0] * rhs[j] - rhs[i] * vj[0], dt)
            if all(x * v[0] + y * v[1] >= r for v, r in zip(rays, rhs)):
                xs.append(x)
    if not xs:
        return 0
    count = 0
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        lo, hi = None, None
        ok = True
        for v, r in zip(rays, rhs):
            # x v0 + y v1 >= r
            rest = r - x * v[0]
            if v[1] > 0:
                bound = _ceil_div(rest, v[1])
                lo = bound if lo is None else max(lo, bound)
            elif v[1] < 0:
                bound = (-rest) // (-v[1])
                hi = bound if hi is None else min(hi, bound)
            elif rest > 0:
                ok = False
                break
        if not ok:
            continue
        if lo is None or hi is None:
            raise InvariantViolation("unbounded section polytope on a complete fan", rays)
        count += max(0, hi - lo + 1)
    return count


def cohomology(f: Fan, D: Divisor) -> tuple[int, int, int]:
    """``(h^0, h^1, h^2)`` of ``O(D)``."""
    D = _as_torus(f, D)
    top = h0(f, D)
    bottom = h0(f, canonical_class(f) - D)
    mid = top + bottom - chi(f, D)
    if mid < 0:
        raise InvariantViolation(f"negative h^1 for {D.coeffs}", f.rays)
    return top, mid, bottom


def hom_complex_dims(f: Fan, A: Divisor, B: Divisor) -> tuple[int, int, int]:
    """Dimensions of ``Ext^i(O(A), O(B))`` for ``i = 0, 1, 2``."""
    return cohomology(f, _as_torus(f, B) - _as_torus(f, A))

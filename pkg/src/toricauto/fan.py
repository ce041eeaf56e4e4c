"""Complete smooth fans in a rank-2 lattice.

A fan is stored as its cyclically ordered, counterclockwise list of primitive
ray generators.  Ray labels are 1-based throughout the public API so that
label ``i`` always refers to the invariant divisor ``D_i``.

For a smooth complete fan every ray satisfies ``alpha_i v_i = v_{i-1} + v_{i+1}``
for an integer ``alpha_i``, and ``D_i^2 = -alpha_i``.  Almost everything else in
the package is computed from these numbers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    FanError,
    InvalidIndex,
    InvariantViolation,
    NonPrimitiveRay,
    NotComplete,
    NotCounterclockwise,
    NotMinusOneCurve,
    NotSmooth,
    TooFewRays,
)
from .lattice import IntMatrix

Vec = tuple[int, int]

__all__ = [
    "Fan",
    "BlowUpTrace",
    "CanonicalForm",
    "FanSymmetry",
    "FanSymmetryGroup",
    "validate",
    "self_intersections",
    "basis_change",
    "holonomy",
    "blow_up",
    "blow_down",
    "minimal_model",
    "projective_plane",
    "hirzebruch",
    "construct_standard",
    "construct_chain_surface",
    "paper_example",
    "fan_symmetries",
    "canonical_form",
    "census",
    "random_blowup_fan",
]


def det2(u: Sequence[int], w: Sequence[int]) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _half(v: Vec) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_less(a: Vec, b: Vec) -> bool:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    return det2(a, b) > 0


def _primitive(v: Sequence[int]) -> Vec:
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class Fan:
    """A validated complete smooth fan; construct via :func:`validate`."""

    rays: tuple[Vec, ...]

    def __post_init__(self):
        _check(self.rays)

    def __len__(self) -> int:
        return len(self.rays)

    def ray(self, label: int) -> Vec:
        """Generator of ray ``label`` (1-based, cyclic)."""
        return self.rays[(label - 1) % len(self.rays)]

    @property
    def labels(self) -> range:
        return range(1, len(self.rays) + 1)

    @cached_property
    def alphas(self) -> tuple[int, ...]:
        d = len(self.rays)
        out = []
        for i, v in enumerate(self.rays):
            s = (self.rays[i - 1][0] + self.rays[(i + 1) % d][0],
                 self.rays[i - 1][1] + self.rays[(i + 1) % d][1])
            # v is primitive, so one coordinate is non-zero
            a = s[0] // v[0] if v[0] else s[1] // v[1]
            if (a * v[0], a * v[1]) != s:
                raise InvariantViolation(f"neighbours of ray {i + 1} do not sum to a multiple of it", self.rays)
            out.append(a)
        return tuple(out)

    @property
    def profile(self) -> tuple[int, ...]:
        return tuple(-a for a in self.alphas)

    def adjacent(self, i: int, j: int) -> bool:
        d = len(self.rays)
        return i != j and (i - j) % d in (1, d - 1)

    def canonical_form(self) -> CanonicalForm:
        return canonical_form(self)


def _check(rays: Sequence[Vec]) -> None:
    d = len(rays)
    if d < 3:
        raise TooFewRays(f"a complete fan needs at least 3 rays, got {d}")
    for i, v in enumerate(rays, 1):
        if math.gcd(v[0], v[1]) != 1:
            raise NonPrimitiveRay(f"ray {i} = {tuple(v)} is not primitive", i)
    seen = {}
    for i, v in enumerate(rays, 1):
        if v in seen:
            raise NotCounterclockwise(f"ray {i} repeats ray {seen[v]}", i)
        seen[v] = i
    descents = [i for i in range(1, d + 1) if not _angle_less(rays[i - 1], rays[i % d])]
    if len(descents) != 1:
        raise NotCounterclockwise(
            f"rays are not in strictly increasing counterclockwise order (problem after ray {descents[-1]})",
            descents[-1],
        )
    for i in range(1, d + 1):
        if det2(rays[i - 1], rays[i % d]) <= 0:
            raise NotComplete(f"cone between rays {i} and {i % d + 1} is not strictly convex", i)
    for i in range(1, d + 1):
        if det2(rays[i - 1], rays[i % d]) != 1:
            raise NotSmooth(f"rays {i} and {i % d + 1} do not form a lattice basis", i)


def validate(rays: Iterable[Sequence[int]]) -> Fan:
    """Build a :class:`Fan`, raising a :class:`~toricauto.errors.FanError` subclass.

    The ray order of the input is kept as given; see :func:`canonical_form`
    for a normalised representative.
    """
    return Fan(tuple((int(x), int(y)) for x, y in rays))


def self_intersections(f: Fan) -> tuple[int, ...]:
    """``(D_1^2, ..., D_d^2)``."""
    return f.profile


def basis_change(alpha: int) -> IntMatrix:
    """The matrix taking the basis ``(v_{i-1}, v_i)`` to ``(v_i, v_{i+1})``."""
    return IntMatrix([[0, -1], [1, alpha]])


def holonomy(f: Fan) -> IntMatrix:
    """Cyclic product of the basis-change matrices; the identity on every valid fan."""
    out = IntMatrix.identity(2)
    for a in f.alphas:
        out = out @ basis_change(a)
    return out


def blow_up(f: Fan, i: int) -> Fan:
    """Subdivide the cone between rays ``i`` and ``i + 1`` (cyclic, 1-based)."""
    d = len(f)
    if not 1 <= i <= d:
        raise InvalidIndex(f"cone index {i} outside 1..{d}")
    u, w = f.ray(i), f.ray(i + 1)
    rays = list(f.rays)
    rays.insert(i, (u[0] + w[0], u[1] + w[1]))
    return Fan(tuple(rays))


def blow_down(f: Fan, i: int) -> Fan:
    """Contract the -1-curve ``D_i``."""
    d = len(f)
    if not 1 <= i <= d:
        raise InvalidIndex(f"ray index {i} outside 1..{d}")
    if f.alphas[i - 1] != 1:
        raise NotMinusOneCurve(f"D_{i}^2 = {f.profile[i - 1]}, not -1")
    return Fan(f.rays[: i - 1] + f.rays[i:])


@dataclass(frozen=True)
class BlowUpTrace:
    """Blow-ups turning ``base`` into a given fan.

    Each step ``(position, vector)`` inserts ``vector`` so that it becomes ray
    number ``position``; the vector must be the sum of its two new neighbours.
    """

    base: Fan
    steps: tuple[tuple[int, Vec], ...] = ()

    def replay(self) -> Fan:
        rays = list(self.base.rays)
        for pos, v in self.steps:
            rays.insert(pos - 1, v)
            d = len(rays)
            prev, nxt = rays[(pos - 2) % d], rays[pos % d]
            if (prev[0] + nxt[0], prev[1] + nxt[1]) != tuple(v):
                raise ValueError(f"step {(pos, v)} is not a blow-up")
        return Fan(tuple(rays))


def minimal_model(f: Fan) -> tuple[Fan, BlowUpTrace]:
    """Blow down the first -1-ray until none is left.

    The result is ``P^2`` or a Hirzebruch surface ``F_n`` with ``n != 1``.
    """
    removed = []
    cur = f
    while True:
        try:
            i = cur.alphas.index(1) + 1
        except ValueError:
            break
        if len(cur) == 3:
            break
        removed.append((i, cur.ray(i)))
        cur = blow_down(cur, i)
    if len(cur) > 4:
        raise InvariantViolation("fan with more than 4 rays and no -1-curve", cur.rays)
    return cur, BlowUpTrace(cur, tuple(reversed(removed)))


def projective_plane() -> Fan:
    return Fan(((1, 0), (0, 1), (-1, -1)))


def hirzebruch(n: int) -> Fan:
    if n < 0:
        raise ValueError("Hirzebruch index must be non-negative")
    return Fan(((1, 0), (0, 1), (-1, n), (0, -1)))


def construct_standard(kind: str, n: int = 0) -> Fan:
    """``kind`` is ``"projective_plane"`` or ``"hirzebruch"``."""
    if kind == "projective_plane":
        return projective_plane()
    if kind == "hirzebruch":
        return hirzebruch(n)
    raise ValueError(f"unknown standard surface {kind!r}")


def paper_example() -> Fan:
    """The 8-ray surface whose ``-2``-classes generate a non-saturated subgroup."""
    return Fan(((1, 0), (0, 1), (-1, 0), (-2, -1), (-1, -1), (0, -1), (1, -1), (2, -1)))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


def _smooth_gap(u: Vec, w: Vec) -> list[Vec]:
    """Rays to insert strictly between ``u`` and ``w`` (counterclockwise) so that
    every new cone is unimodular."""
    D = det2(u, w)
    if D == 1:
        return []
    if D == 0:
        p = (-u[1], u[0])
    elif D < 0:
        p = _primitive((-(u[0] + w[0]), -(u[1] + w[1])))
    else:
        # complete u to a basis (u, u2) with det 1, then w = c u + D u2
        _, s, t = _egcd(u[0], u[1])
        u2 = (-t, s)
        c = det2(w, u2)
        k = (-c) % D
        p = ((w[0] + k * u[0]) // D, (w[1] + k * u[1]) // D)
    return _smooth_gap(u, p) + [p] + _smooth_gap(p, w)


def _minus_two_runs(f: Fan) -> list[list[int]]:
    from .neg2 import chain_decomposition

    return [list(c) for c in chain_decomposition(f).chains]


def construct_chain_surface(lengths: Sequence[int]) -> Fan:
    """A fan whose ``-2``-curves form chains of exactly the requested lengths.

    One long chain ``v_{s+1} = 2 v_s - v_{s-1}`` is built from ``(1, 0), (0, 1)``,
    the fan is closed by smoothing the remaining gap, and the chain is cut into
    pieces by blowing up the cone between the two rays sacrificed at each cut.
    """
    lengths = list(lengths)
    if not lengths or any(n < 1 for n in lengths):
        raise ValueError("chain lengths must be a non-empty list of positive integers")
    total = sum(lengths) + 2 * (len(lengths) - 1)
    chain = [(1, 0), (0, 1)]
    for _ in range(total):
        a, b = chain[-2], chain[-1]
        chain.append((2 * b[0] - a[0], 2 * b[1] - a[1]))
    # chain[1..total] must stay -2; chain[0] and chain[-1] are the flanks
    rays = list(chain)
    rays += _smooth_gap(rays[-1], rays[0])
    f = Fan(tuple(rays))

    # rays are labelled 1..; chain ray s (1-based in the chain) has label s + 1
    cut_labels = []
    pos = 1
    for n in lengths[:-1]:
        pos += n
        cut_labels.append(pos + 1)  # cone between chain rays pos and pos + 1
        pos += 2
    for offset, lab in enumerate(cut_labels):
        # each earlier cut inserted one ray before this one
        f = blow_up(f, lab + offset)

    wanted = sorted(lengths)
    protected = set()
    for _ in range(4 * len(f) + 8):
        runs = _minus_two_runs(f)
        chain_start = f.rays.index((0, 1)) + 1
        # keep runs that lie inside the constructed chain region; fix strays
        region_end = f.rays.index(chain[-1]) + 1
        protected = set(range(chain_start - 1, region_end + 1))
        strays = [r for r in runs if not set(r) <= protected]
        if not strays:
            break
        s = strays[0][0]
        nbrs = [lab for lab in ((s - 2) % len(f) + 1, s % len(f) + 1) if lab not in protected]
        nbrs.sort(key=lambda lab: (f.alphas[lab - 1] == 1, lab))
        if not nbrs:
            break
        n = nbrs[0]
        cone = s if n == s % len(f) + 1 else n
        f = blow_up(f, cone)

    got = sorted(len(c) for c in _minus_two_runs(f))
    if got != wanted:
        raise InvariantViolation(f"chain construction produced lengths {got}, wanted {wanted}", f.rays)
    return f


@dataclass(frozen=True)
class FanSymmetry:
    """A lattice automorphism mapping the ray set to itself.

    ``permutation[i - 1] = j`` means ``matrix @ v_i = v_j``.
    """

    matrix: IntMatrix
    permutation: tuple[int, ...]

    def is_identity(self) -> bool:
        return self.matrix == IntMatrix.identity(2)


@dataclass(frozen=True)
class FanSymmetryGroup:
    elements: tuple[FanSymmetry, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        m = g.matrix if isinstance(g, FanSymmetry) else g
        return any(e.matrix == m for e in self.elements)

    def find(self, matrix: IntMatrix) -> FanSymmetry | None:
        return next((e for e in self.elements if e.matrix == matrix), None)


def _inv2(m: IntMatrix) -> IntMatrix:
    (a, b), (c, d) = m.row(0), m.row(1)
    dt = a * d - b * c
    if dt not in (1, -1):
        raise ValueError("not unimodular")
    return IntMatrix([[dt * d, -dt * b], [-dt * c, dt * a]])


def fan_symmetries(f: Fan) -> FanSymmetryGroup:
    """All ``GL_2(Z)`` elements permuting the rays."""
    d = len(f)
    src_inv = _inv2(IntMatrix.from_columns([f.ray(1), f.ray(2)], 2))
    index = {v: i for i, v in enumerate(f.rays, 1)}
    found = []
    for j in f.labels:
        for nxt in (f.ray(j + 1), f.ray(j - 1)):
            g = IntMatrix.from_columns([f.ray(j), nxt], 2) @ src_inv
            perm = []
            for v in f.rays:
                image = g.apply(v)
                if image not in index:
                    break
                perm.append(index[image])
            if len(perm) == d and g not in [e.matrix for e in found]:
                found.append(FanSymmetry(g, tuple(perm)))
    found.sort(key=lambda e: (not e.is_identity(), e.matrix.tolist()))
    return FanSymmetryGroup(tuple(found))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Invariant of a fan up to ``GL_2(Z)`` and cyclic relabelling."""

    profile: tuple[int, ...]
    rays: tuple[Vec, ...]

    def fan(self) -> Fan:
        return Fan(self.rays)


def canonical_form(f: Fan) -> CanonicalForm:
    """Lexicographically least profile over rotations and the reflection,
    normalised so that the first two rays are ``(1, 0), (0, 1)``."""
    d = len(f)
    prof = f.profile
    best_prof = None
    starts = []
    for j in range(d):
        for step in (1, -1):
            p = tuple(prof[(j + step * k) % d] for k in range(d))
            if best_prof is None or p < best_prof:
                best_prof, starts = p, [(j, step)]
            elif p == best_prof:
                starts.append((j, step))
    candidates = []
    for j, step in starts:
        seq = [f.rays[(j + step * k) % d] for k in range(d)]
        g = _inv2(IntMatrix.from_columns(seq[:2], 2))
        candidates.append(tuple(g.apply(v) for v in seq))
    return CanonicalForm(best_prof, min(candidates))


def census(max_rays: int, coord_bound: int, filter: str = "all") -> list[CanonicalForm]:
    """All fans with at most ``max_rays`` rays whose canonical form has
    coordinates bounded by ``coord_bound`` in absolute value, one per class.

    ``filter="fano"`` keeps only fans with ample anticanonical class.
    """
    if max_rays < 3 or coord_bound < 1:
        raise ValueError("need max_rays >= 3 and coord_bound >= 1")
    if filter not in ("all", "fano"):
        raise ValueError(f"unknown filter {filter!r}")
    from .divisors import canonical_class, is_ample

    b = coord_bound
    found: set[CanonicalForm] = set()

    def close(rays):
        try:
            f = Fan(tuple(rays))
        except FanError:
            return
        cf = canonical_form(f)
        if max(abs(c) for v in cf.rays for c in v) > b:
            return
        if filter == "fano":
            K = canonical_class(f)
            if not is_ample(f, K.negate()):
                return
        found.add(cf)

    def extend(rays):
        if len(rays) >= 3 and det2(rays[-1], rays[0]) == 1:
            close(rays)
        if len(rays) == max_rays:
            return
        u, w = rays[-2], rays[-1]
        for a in range(-2 * b - 1, 2 * b + 2):
            nxt = (a * w[0] - u[0], a * w[1] - u[1])
            if max(abs(nxt[0]), abs(nxt[1])) > b or not _angle_less(w, nxt):
                continue
            extend(rays + [nxt])

    extend([(1, 0), (0, 1)])
    return sorted(found, key=lambda cf: (len(cf.rays), cf))


def random_blowup_fan(rng: random.Random, max_rays: int = 20, max_n: int = 5) -> Fan:
    """A random fan obtained by blowing up ``P^2`` or some ``F_n`` (``n <= max_n``)."""
    bases = [projective_plane()] + [hirzebruch(n) for n in range(max_n + 1)]
    f = rng.choice(bases)
    target = rng.randint(len(f), max_rays)
    while len(f) < target:
        f = blow_up(f, rng.randint(1, len(f)))
    return f

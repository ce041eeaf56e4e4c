"""The ``-2``-curves of a toric surface and the five structural conditions.

On a smooth complete toric surface every ``-2``-curve is an invariant divisor
``D_i``, so ``Delta(X)`` is read off the self-intersection profile.  The
conditions checked here are

1. ``Delta`` is a disjoint union of type-A chains,
2. ``-K`` is big,
3. every curve ``C`` with ``K.C = 0`` is a ``-2``-curve,
4. any two chains are separated by a curve meeting one but not the other,
5. ``Pic_Delta`` is a direct summand of ``Pic``.

(1)-(4) hold for every toric surface; a failure raises
:class:`~toricauto.errors.InvariantViolation`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .divisors import (
    canonical_class,
    intersect,
    is_big,
    picard,
    ray_divisor,
)
from .errors import InvariantViolation
from .fan import Fan, basis_change
from .lattice import IntMatrix, cokernel, smith_normal_form

log = logging.getLogger(__name__)

__all__ = [
    "ChainDecomposition",
    "SplittingReport",
    "ConditionsReport",
    "minus_two_set",
    "chain_decomposition",
    "splitting_check",
    "check_conditions",
    "separation_identity_search",
]

C3_SCOPE = "verified on invariant curves, lemma-backed in general"


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.chains)

    @property
    def types(self) -> tuple[str, ...]:
        return tuple(f"A_{n}" for n in self.lengths)

    def chain_of(self, label: int) -> int | None:
        return next((k for k, c in enumerate(self.chains) if label in c), None)


@dataclass(frozen=True)
class SplittingReport:
    splits: bool
    torsion: tuple[int, ...]
    complement_basis: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class ConditionsReport:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: SplittingReport
    chains: tuple[tuple[int, ...], ...] = ()
    # labels of all invariant curves with K.C = 0
    c3_curves: tuple[int, ...] = ()
    c3_scope: str = C3_SCOPE
    # (first chain, second chain, ray label): the ray meets the first chain only
    c4_witnesses: tuple[tuple[int, int, int], ...] = ()

    @property
    def conditions_1_to_4(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4


def minus_two_set(f: Fan) -> list[int]:
    return [lab for lab, s in zip(f.labels, f.profile) if s == -2]


def chain_decomposition(f: Fan) -> ChainDecomposition:
    """Maximal cyclic runs of ``-2``-rays."""
    prof = f.profile
    d = len(prof)
    if all(s == -2 for s in prof):
        log.error("closed chain of -2-curves on fan %s", f.rays)
        raise InvariantViolation("every ray is a -2-curve (closed chain)", f.rays)
    # start scanning just after a ray that is not -2
    start = next(i for i in range(d) if prof[i] != -2)
    chains, run = [], []
    for k in range(1, d + 1):
        i = (start + k) % d
        if prof[i] == -2:
            run.append(i + 1)
        elif run:
            chains.append(tuple(run))
            run = []
    chains.sort(key=min)
    return ChainDecomposition(tuple(tuple(c) for c in chains))


def _complement(columns: list[tuple[int, ...]], rank: int) -> tuple[tuple[int, ...], ...]:
    """Complete a saturated family of vectors to a basis of ``Z^rank``.

    Standard basis vectors are tried first (in order); the SNF transform is the
    fallback.
    """
    chosen: list[tuple[int, ...]] = []
    target = rank - len(columns)
    for j in range(rank):
        if len(chosen) == target:
            break
        e = tuple(int(k == j) for k in range(rank))
        trial = columns + chosen + [e]
        grp = cokernel(IntMatrix.from_columns(trial, rank))
        if grp.is_free and grp.free_rank == rank - len(trial):
            chosen.append(e)
    if len(chosen) == target:
        return tuple(chosen)
    U, D, _ = smith_normal_form(IntMatrix.from_columns(columns, rank))
    # columns span U^{-1} e_1..e_r, so U^{-1} e_{r+1}.. span a complement
    Uinv = _unimodular_inverse(U)
    return tuple(Uinv.column(j) for j in range(len(columns), rank))


def _unimodular_inverse(U: IntMatrix) -> IntMatrix:
    n = U.rows
    M = [[Fraction(x) for x in U.row(i)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    out = [[int(x) for x in row[n:]] for row in M]
    if any(x.denominator != 1 for row in M for x in row[n:]):
        raise ValueError("matrix is not unimodular")
    return IntMatrix(out, n)


def splitting_check(f: Fan) -> SplittingReport:
    """Whether ``Pic_Delta`` is a direct summand, via the torsion of ``Pic/Pic_Delta``."""
    pic = picard(f)
    delta = minus_two_set(f)
    if not delta:
        basis = tuple(tuple(int(k == j) for k in range(pic.rank)) for j in range(pic.rank))
        return SplittingReport(True, (), basis)
    cols = [pic.ray_classes[lab - 1] for lab in delta]
    grp = cokernel(IntMatrix.from_columns(cols, pic.rank))
    if grp.torsion:
        return SplittingReport(False, grp.torsion, None)
    return SplittingReport(True, (), _complement(cols, pic.rank))


def check_conditions(f: Fan) -> ConditionsReport:
    decomp = chain_decomposition(f)
    chains = decomp.chains
    prof = f.profile

    # (1): runs are maximal, hence pairwise non-adjacent; no closed chain
    c1 = all(
        not f.adjacent(a, b)
        for i, ci in enumerate(chains)
        for cj in chains[i + 1:]
        for a in ci
        for b in cj
    )

    K = canonical_class(f)
    c2 = is_big(f, K.negate())

    kzero = tuple(lab for lab in f.labels if intersect(f, K, ray_divisor(f, lab)) == 0)
    c3 = all(prof[lab - 1] == -2 for lab in kzero) and set(kzero) == set(minus_two_set(f))

    delta = set(minus_two_set(f))
    witnesses = []
    c4 = True
    for i, ci in enumerate(chains):
        for j, cj in enumerate(chains):
            if i == j:
                continue
            hit = None
            for lab in f.labels:
                if lab in delta:
                    continue
                B = ray_divisor(f, lab)
                meets_i = any(intersect(f, B, ray_divisor(f, c)) >= 1 for c in ci)
                misses_j = all(intersect(f, B, ray_divisor(f, c)) == 0 for c in cj)
                if meets_i and misses_j:
                    hit = lab
                    break
            if hit is None:
                c4 = False
            else:
                witnesses.append((i + 1, j + 1, hit))

    report = ConditionsReport(
        c1=c1,
        c2=c2,
        c3=c3,
        c4=c4,
        c5=splitting_check(f),
        chains=chains,
        c3_curves=kzero,
        c4_witnesses=tuple(witnesses),
    )
    if not report.conditions_1_to_4:
        failed = [n for n, ok in (("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4)) if not ok]
        log.error("conditions %s failed on fan %s", failed, f.rays)
        raise InvariantViolation(f"toric surface violates conditions {failed}", f.rays)
    return report


def separation_identity_search(alpha_bound: int, length_bound: int) -> list[tuple[int, int, int, int]]:
    """All ``(a1, a2, l1, l2)`` with ``M(a1) M(2)^l1 M(a2) M(2)^l2 = 1``.

    ``a1, a2`` range over ``[-alpha_bound, alpha_bound]`` minus ``2`` and
    ``l1, l2`` over ``[1, length_bound]``.
    """
    if alpha_bound < 1 or length_bound < 1:
        raise ValueError("bounds must be >= 1")
    one = IntMatrix.identity(2)
    alphas = [a for a in range(-alpha_bound, alpha_bound + 1) if a != 2]
    M = {a: basis_change(a) for a in alphas}
    chain_pow = {l: basis_change(2) ** l for l in range(1, length_bound + 1)}
    out = []
    for a1 in alphas:
        for l1 in range(1, length_bound + 1):
            left = M[a1] @ chain_pow[l1]
            for a2 in alphas:
                mid = left @ M[a2]
                for l2 in range(1, length_bound + 1):
                    if mid @ chain_pow[l2] == one:
                        out.append((a1, a2, l1, l2))
    return out

"""Structure report for the derived autoequivalence group of a toric surface.

The group itself is infinite and never built.  A report records which of the
structural conditions hold, the chain decomposition of the spherical-twist
subgroup ``B(X)``, the visible part of ``Aut(X)``, and which of three
conclusions applies:

* ``STANDARD_ONLY``: no ``-2``-curves, so ``Aut(D(X)) = A(X)``;
* ``GENERATED``: generated by ``Pic(X)``, ``Aut(X)``, ``Z[1]`` and ``B(X)``;
* ``SEMIDIRECT``: ``Pic_Delta`` splits off with complement ``P`` and the group
  is ``B(X) ⋊ (P ⋊ Aut(X)) × Z[1]``.

Two output formats exist.  ``text`` is for people; ``structured`` is YAML
under the schema header ``toric-report/1`` and round-trips through
:func:`parse`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import yaml

from .divisors import DivisorClass, picard
from .fan import Fan, canonical_form, fan_symmetries
from .neg2 import ConditionsReport, SplittingReport, check_conditions

__all__ = [
    "SCHEMA",
    "AUT_CAVEAT",
    "Conclusion",
    "ChainDescriptor",
    "AutXSummary",
    "AutStructureReport",
    "analyze",
    "render",
    "parse",
]

SCHEMA = "toric-report/1"
AUT_CAVEAT = "fan symmetries + 2-torus"
CHAIN_GENERATORS = "T_{O_C(i)}, C in chain, i ∈ Z"
CHAIN_NOTE = "direct sum over chains"
AUT_INTERSECTION = "Aut(X) ∩ B(X) = 1"
PIC_INTERSECTION = "Pic(X) ∩ B(X) = Pic_Δ(X)"
DECOMPOSITION = "B(X) ⋊ (P ⋊ Aut(X)) × Z[1]"


class Conclusion(enum.Enum):
    STANDARD_ONLY = "STANDARD_ONLY"
    GENERATED = "GENERATED"
    SEMIDIRECT = "SEMIDIRECT"


@dataclass(frozen=True)
class ChainDescriptor:
    rays: tuple[int, ...]
    generators: str = CHAIN_GENERATORS
    braid_subgroup: str = ""

    @property
    def length(self) -> int:
        return len(self.rays)

    @property
    def type(self) -> str:
        return f"A_{self.length}"


@dataclass(frozen=True)
class AutXSummary:
    symmetry_order: int
    torus_rank: int = 2
    caveat: str = AUT_CAVEAT
    complete: bool = False


@dataclass(frozen=True)
class AutStructureReport:
    rays: tuple[tuple[int, int], ...]
    profile: tuple[int, ...]
    chains: tuple[ChainDescriptor, ...]
    conditions: ConditionsReport
    aut_x: AutXSummary
    conclusion: Conclusion
    # basis of P in Picard coordinates (D_3, ..., D_d); empty unless SEMIDIRECT
    complement: tuple[tuple[int, ...], ...] = ()
    complement_text: tuple[str, ...] = ()
    decomposition_note: str = CHAIN_NOTE
    intersections: tuple[str, ...] = (AUT_INTERSECTION, PIC_INTERSECTION)

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.conditions.c5.torsion


def _braid_name(n: int) -> str:
    return f"braid group on {n} strand" + ("" if n == 1 else "s")


def analyze(f: Fan, canonical: bool = False) -> AutStructureReport:
    """Run the ``-2``-curve analysis and assemble the report.

    With ``canonical=True`` the fan is first replaced by its canonical
    representative, so equivalent fans give byte-identical reports.
    """
    if canonical:
        f = canonical_form(f).fan()
    cond = check_conditions(f)
    chains = tuple(ChainDescriptor(c, braid_subgroup=_braid_name(len(c))) for c in cond.chains)
    aut = AutXSummary(fan_symmetries(f).order)
    comp: tuple[tuple[int, ...], ...] = ()
    comp_text: tuple[str, ...] = ()
    if not chains:
        concl = Conclusion.STANDARD_ONLY
    elif cond.c5.splits:
        concl = Conclusion.SEMIDIRECT
        comp = cond.c5.complement_basis
        pic = picard(f)
        comp_text = tuple(pic.format_class(DivisorClass(v)) for v in comp)
    else:
        concl = Conclusion.GENERATED
    return AutStructureReport(
        rays=f.rays,
        profile=f.profile,
        chains=chains,
        conditions=cond,
        aut_x=aut,
        conclusion=concl,
        complement=comp,
        complement_text=comp_text,
    )


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _torsion_text(t: tuple[int, ...]) -> str:
    return " ⊕ ".join(f"Z/{n}" for n in t)


def _text(r: AutStructureReport) -> str:
    c = r.conditions
    lines = [
        f"rays ({r.n_rays}): " + " ".join(f"({x},{y})" for x, y in r.rays),
        "self-intersections: " + " ".join(str(s) for s in r.profile),
    ]
    if r.chains:
        chain_txt = "; ".join(" ".join(f"D_{i}" for i in ch.rays) for ch in r.chains)
        lines.append(f"-2-curves: {chain_txt}")
        lines.append("chain types: " + ", ".join(ch.type for ch in r.chains))
    else:
        lines.append("-2-curves: none")
    c5 = c.c5
    c5_txt = _yes(c5.splits) if c5.splits else f"no, torsion {_torsion_text(c5.torsion)} {list(c5.torsion)}"
    lines += [
        "conditions:",
        f"  (1) disjoint chains of type A: {_yes(c.c1)}",
        f"  (2) -K big: {_yes(c.c2)}",
        f"  (3) K.C = 0 only for -2-curves: {_yes(c.c3)} ({c.c3_scope})",
        f"  (4) chains separated: {_yes(c.c4)}",
        f"  (5) Pic_Δ(X) direct summand: {c5_txt}",
    ]
    if r.chains:
        lines.append(f"B(X): {r.decomposition_note}")
        for k, ch in enumerate(r.chains, 1):
            lines.append(f"  chain {k} ({ch.type}): generators {ch.generators}; contains the {ch.braid_subgroup}")
    else:
        lines.append("B(X): trivial")
    lines.append(
        f"Aut(X): {r.aut_x.caveat}; symmetry group of order {r.aut_x.symmetry_order}, "
        f"torus rank {r.aut_x.torus_rank}; not claimed complete"
    )
    lines += list(r.intersections)
    lines.append(f"conclusion: {r.conclusion.value}")
    if r.conclusion is Conclusion.STANDARD_ONLY:
        lines.append("  Aut(D(X)) = A(X)")
    elif r.conclusion is Conclusion.GENERATED:
        lines.append("  Aut(D(X)) generated by Pic(X), Aut(X), Z[1], B(X)")
    else:
        lines.append(f"  Aut(D(X)) = {DECOMPOSITION}")
        lines.append("  P = <" + ", ".join(r.complement_text) + ">")
    return "\n".join(lines) + "\n"


def _as_dict(r: AutStructureReport) -> dict:
    c = r.conditions
    return {
        "schema": SCHEMA,
        "fan": {
            "rays": [list(v) for v in r.rays],
            "profile": list(r.profile),
        },
        "chains": [
            {
                "rays": list(ch.rays),
                "type": ch.type,
                "generators": ch.generators,
                "braid_subgroup": ch.braid_subgroup,
            }
            for ch in r.chains
        ],
        "decomposition_note": r.decomposition_note,
        "conditions": {
            "c1": c.c1,
            "c2": c.c2,
            "c3": c.c3,
            "c3_scope": c.c3_scope,
            "c3_curves": list(c.c3_curves),
            "c4": c.c4,
            "c4_witnesses": [list(w) for w in c.c4_witnesses],
            "c5": {
                "splits": c.c5.splits,
                "torsion": list(c.c5.torsion),
                "complement_basis": None
                if c.c5.complement_basis is None
                else [list(v) for v in c.c5.complement_basis],
            },
        },
        "aut_x": {
            "caveat": r.aut_x.caveat,
            "symmetry_order": r.aut_x.symmetry_order,
            "torus_rank": r.aut_x.torus_rank,
            "complete": r.aut_x.complete,
        },
        "intersections": list(r.intersections),
        "conclusion": {
            "kind": r.conclusion.value,
            "P": [list(v) for v in r.complement],
            "P_text": list(r.complement_text),
        },
    }


def render(r: AutStructureReport, format: str = "text") -> str:
    if format == "text":
        return _text(r)
    if format == "structured":
        return yaml.safe_dump(_as_dict(r), sort_keys=False, allow_unicode=True, default_flow_style=None)
    raise ValueError(f"unknown report format {format!r}")


def _tuples(xs) -> tuple:
    return tuple(tuple(x) for x in xs)


def parse(text: str) -> AutStructureReport:
    """Inverse of ``render(r, "structured")``."""
    data = yaml.safe_load(text)
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise ValueError(f"not a {SCHEMA} document")
    c = data["conditions"]
    c5 = c["c5"]
    basis = c5["complement_basis"]
    cond = ConditionsReport(
        c1=c["c1"],
        c2=c["c2"],
        c3=c["c3"],
        c4=c["c4"],
        c5=SplittingReport(c5["splits"], tuple(c5["torsion"]), None if basis is None else _tuples(basis)),
        chains=tuple(tuple(ch["rays"]) for ch in data["chains"]),
        c3_curves=tuple(c["c3_curves"]),
        c3_scope=c["c3_scope"],
        c4_witnesses=_tuples(c["c4_witnesses"]),
    )
    a = data["aut_x"]
    concl = data["conclusion"]
    return AutStructureReport(
        rays=_tuples(data["fan"]["rays"]),
        profile=tuple(data["fan"]["profile"]),
        chains=tuple(
            ChainDescriptor(tuple(ch["rays"]), ch["generators"], ch["braid_subgroup"]) for ch in data["chains"]
        ),
        conditions=cond,
        aut_x=AutXSummary(a["symmetry_order"], a["torus_rank"], a["caveat"], a["complete"]),
        conclusion=Conclusion(concl["kind"]),
        complement=_tuples(concl["P"]),
        complement_text=tuple(concl["P_text"]),
        decomposition_note=data["decomposition_note"],
        intersections=tuple(data["intersections"]),
    )

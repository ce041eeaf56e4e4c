"""Command-line front end: ``toricauto VERB [args]``.

Exit status is 0 on success, 1 for user errors (bad fan file, bad flags) and
2 when a proven invariant fails on validated input.  In the last case the fan
is written to stderr so that the counterexample is not lost.

Values that start with ``-`` must be attached with ``=``, e.g.
``--divisor=-1,0,0,0``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import fanio
from .divisors import DivisorClass, TorusDivisor, chi, cohomology, hom_complex_dims, picard
from .errors import FanError, InvariantViolation, ToricError
from .fan import Fan, census, construct_chain_surface, construct_standard, minimal_model
from .knum import (
    KClass,
    braid_relation_check,
    curve_sheaf_class,
    euler,
    exceptional_presentation,
    twist,
    twist_matrix,
)
from .lattice import IntMatrix, cokernel
from .neg2 import minus_two_set, separation_identity_search
from .report import analyze, render

__all__ = ["main", "run", "parse_divisor", "parse_kclass"]

VERBS = (
    "validate",
    "analyze",
    "pic",
    "cohomology",
    "ktheory",
    "census",
    "construct",
    "minimal-model",
    "separation-search",
)


class UsageError(ToricError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x, 10) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def parse_divisor(f: Fan, text: str) -> TorusDivisor | DivisorClass:
    """``a_1,...,a_d`` in ray order, or ``pic:c_3,...,c_d`` in the Picard basis."""
    pic = picard(f)
    if text.startswith("pic:"):
        c = _ints(text[4:], "--divisor")
        if len(c) != pic.rank:
            raise UsageError(f"--divisor: Picard class needs {pic.rank} coordinates, got {len(c)}")
        return DivisorClass(tuple(c))
    a = _ints(text, "--divisor")
    if len(a) != len(f):
        raise UsageError(f"--divisor: fan has {len(f)} rays, got {len(a)} coefficients")
    return TorusDivisor(tuple(a))


def parse_kclass(f: Fan, text: str, flag: str = "--class") -> KClass:
    """``r,c_3,...,c_d,chi``."""
    v = _ints(text, flag)
    n = picard(f).rank + 2
    if len(v) != n:
        raise UsageError(f"{flag}: expected {n} integers (rank, {n - 2} det coordinates, chi), got {len(v)}")
    return KClass.from_vector(v)


def _fmt_matrix(m: IntMatrix) -> list[str]:
    return [" ".join(str(x) for x in row) for row in m.tolist()]


def _cmd_validate(a, out):
    f = fanio.load_fan(a.fan)
    print(f"valid: {len(f)} rays", file=out)
    print("self-intersections: " + " ".join(str(s) for s in f.profile), file=out)


def _cmd_analyze(a, out):
    f = fanio.load_fan(a.fan)
    out.write(render(analyze(f, canonical=a.canonical), a.format))


def _cmd_pic(a, out):
    f = fanio.load_fan(a.fan)
    pic = picard(f)
    print(f"rank {pic.rank}, basis " + " ".join(f"D_{i}" for i in pic.basis_rays), file=out)
    for lab in f.labels:
        print(f"D_{lab} = {pic.format_class(pic.ray_class(lab))}", file=out)
    print("intersection matrix:", file=out)
    for line in _fmt_matrix(pic.intersection_matrix):
        print("  " + line, file=out)
    delta = minus_two_set(f)
    cols = [pic.ray_classes[i - 1] for i in delta]
    grp = cokernel(IntMatrix.from_columns(cols, pic.rank)) if cols else None
    tors = list(grp.torsion) if grp else []
    print(f"Pic/Pic_Delta torsion: {tors}", file=out)


def _cmd_cohomology(a, out):
    f = fanio.load_fan(a.fan)
    D = parse_divisor(f, a.divisor)
    if a.ext_from is not None:
        A = parse_divisor(f, a.ext_from)
        h = hom_complex_dims(f, A, D)
        print("ext: " + " ".join(str(x) for x in h), file=out)
        return
    h = cohomology(f, D)
    print("h: " + " ".join(str(x) for x in h), file=out)
    print(f"chi: {chi(f, D)}", file=out)


def _cmd_ktheory(a, out):
    f = fanio.load_fan(a.fan)
    did = False
    if a.euler is not None:
        left, sep, right = a.euler.partition("/")
        if not sep:
            raise UsageError("--euler: expected X/Y")
        x, y = parse_kclass(f, left, "--euler"), parse_kclass(f, right, "--euler")
        print(f"euler: {euler(f, x, y)}", file=out)
        did = True
    if a.curve is not None:
        if a.curve not in f.labels:
            raise UsageError(f"--curve: no ray {a.curve}")
        S = curve_sheaf_class(f, a.curve, a.degree)
        print("S: " + ",".join(str(x) for x in S.to_vector()), file=out)
        print(f"euler(S,S): {euler(f, S, S)}", file=out)
        print("twist matrix:", file=out)
        for line in _fmt_matrix(twist_matrix(f, S).matrix):
            print("  " + line, file=out)
        if a.cls is not None:
            x = parse_kclass(f, a.cls)
            print("T_S(x): " + ",".join(str(v) for v in twist(f, S, x).to_vector()), file=out)
        if a.presentation:
            pic = picard(f)
            p = exceptional_presentation(f, a.curve, a.degree)
            print(f"H = {pic.format_class(p.H)}", file=out)
            print(f"E = {pic.format_class(p.E)}", file=out)
            print(f"E' = {pic.format_class(p.E_prime)}", file=out)
            print(f"[S] = [E] - [E']: {'yes' if p.triangle_holds else 'no'}", file=out)
            print("ext(E',E): " + " ".join(map(str, p.hom_prime_to_E)), file=out)
            print("ext(E,E'): " + " ".join(map(str, p.hom_E_to_prime)), file=out)
            print(f"special pair: {'yes' if p.special_pair else 'no'}", file=out)
        did = True
    if a.relations:
        report = analyze(f)
        for ch in report.chains:
            ok = braid_relation_check(f, ch.rays)
            print(f"chain {' '.join(f'D_{i}' for i in ch.rays)}: relations {'hold' if ok else 'FAIL'}", file=out)
        did = True
    if not did:
        raise UsageError("ktheory: give --curve, --euler or --relations")


def _cmd_census(a, out):
    classes = census(a.max_rays, a.bound, "fano" if a.fano else "all")
    print(f"{len(classes)} classes", file=out)
    for cf in classes:
        rays = " ".join(f"({x},{y})" for x, y in cf.rays)
        print(f"[{' '.join(map(str, cf.profile))}] {rays}", file=out)


def _cmd_construct(a, out):
    if (a.surface is None) == (a.chains is None):
        raise UsageError("construct: give exactly one of --surface or --chains")
    if a.chains is not None:
        f = construct_chain_surface(_ints(a.chains, "--chains"))
    else:
        kind = {"p2": "projective_plane", "hirzebruch": "hirzebruch"}[a.surface]
        f = construct_standard(kind, a.n)
    if a.output:
        fanio.dump_fan(f, a.output)
    else:
        out.write(fanio.dumps(f))


def _cmd_minimal_model(a, out):
    f = fanio.load_fan(a.fan)
    base, trace = minimal_model(f)
    print("base: " + " ".join(f"({x},{y})" for x, y in base.rays), file=out)
    print(f"blow-ups: {len(trace.steps)}", file=out)
    for pos, v in trace.steps:
        print(f"  insert ({v[0]},{v[1]}) as ray {pos}", file=out)
    if trace.replay() != f:
        raise InvariantViolation("blow-up trace does not replay to the input", f.rays)


def _cmd_separation(a, out):
    sols = separation_identity_search(a.alpha_bound, a.length_bound)
    print(f"{len(sols)} solutions", file=out)
    for s in sols:
        print("  a1={} a2={} l1={} l2={}".format(*s), file=out)


def _build_parser() -> _Parser:
    p = _Parser(prog="toricauto", description="Autoequivalence structure of smooth toric surfaces.")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def fan_verb(name, fn, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("fan", help="fan file")
        s.set_defaults(fn=fn)
        return s

    fan_verb("validate", _cmd_validate, "check a fan file")
    s = fan_verb("analyze", _cmd_analyze, "structure report")
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.add_argument("--canonical", action="store_true", help="analyze the canonical representative")
    fan_verb("pic", _cmd_pic, "Picard group and ray classes")
    s = fan_verb("cohomology", _cmd_cohomology, "line bundle cohomology")
    s.add_argument("--divisor", required=True, help="a_1,...,a_d or pic:c_3,...,c_d")
    s.add_argument("--ext-from", help="print Ext^*(O(A), O(D)) for this A instead")
    s = fan_verb("ktheory", _cmd_ktheory, "numerical K-theory: twists, Euler form, presentations")
    s.add_argument("--curve", type=int, help="ray label of a curve C; uses S = O_C(degree)")
    s.add_argument("--degree", type=int, default=-1)
    s.add_argument("--class", dest="cls", help="K-class r,c_3,...,c_d,chi to twist")
    s.add_argument("--presentation", action="store_true", help="exceptional presentation of S")
    s.add_argument("--euler", help="X/Y: print the Euler pairing of two K-classes")
    s.add_argument("--relations", action="store_true", help="check braid and commutation relations")

    s = sub.add_parser("census", help="enumerate fans up to equivalence")
    s.add_argument("--max-rays", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--fano", action="store_true")
    s.set_defaults(fn=_cmd_census)

    s = sub.add_parser("construct", help="write a standard or chain surface")
    s.add_argument("--surface", choices=("p2", "hirzebruch"))
    s.add_argument("--n", type=int, default=0, help="Hirzebruch index")
    s.add_argument("--chains", help="comma-separated chain lengths")
    s.add_argument("--output")
    s.set_defaults(fn=_cmd_construct)

    fan_verb("minimal-model", _cmd_minimal_model, "blow down to P^2 or F_n")

    s = sub.add_parser("separation-search", help="search for two-chain holonomy identities")
    s.add_argument("--alpha-bound", type=int, default=10)
    s.add_argument("--length-bound", type=int, default=10)
    s.set_defaults(fn=_cmd_separation)
    return p


def _dump_rays(rays, err: TextIO) -> None:
    if rays:
        print("fan:", file=err)
        for x, y in rays:
            print(f"{x} {y}", file=err)


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        args.fn(args, out)
    except InvariantViolation as e:
        print(f"invariant violation: {e}", file=err)
        _dump_rays(e.rays, err)
        return 2
    except FanError as e:
        where = f" (ray {e.index})" if e.index is not None else ""
        print(f"error: {type(e).__name__}: {e}{where}", file=err)
        return 1
    except (ToricError, ValueError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

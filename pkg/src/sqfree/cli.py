"""Command-line front end.

Inputs are simplicial complexes (text facet files), modules, or
complexes (JSON); outputs are tables in pretty, json, or csv form.
Exit codes: 0 ok, 2 parse error, 3 invalid input, 4 internal invariant
failure.
"""

from __future__ import annotations

import json
import random
import sys

import click

from . import corpus, dualities, invariants, sqmod
from .boolcomb import SimplicialComplex, from_vertices, members, popcount, subset_label, subsets
from .errors import InternalCheckError, InvalidInputError, ParseError, SqfreeError
from .field import Field
from .sqcomplex import (
    SqComplex,
    betti_table,
    linear_strand,
    minimal_projective_resolution,
)
from .sqmod import SqModule


def _exit_code(e: SqfreeError) -> int:
    if isinstance(e, ParseError):
        return 2
    if isinstance(e, InternalCheckError):
        return 4
    return 3


class _Cli(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SqfreeError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(_exit_code(e))


@click.group(cls=_Cli)
def main():
    """Exact homological invariants of squarefree modules."""


_field_opt = click.option(
    "--field", "field_name", default="q", show_default=True, help="q or fp:<p>"
)
_format_opt = click.option(
    "--format", "fmt", default="pretty", show_default=True,
    type=click.Choice(["json", "csv", "pretty"]),
)
_facets_opt = click.option("--facets", "facets_path", type=click.Path(), default=None)
_module_opt = click.option("--module", "module_path", type=click.Path(), default=None)
_complex_opt = click.option("--complex", "complex_path", type=click.Path(), default=None)
_n_opt = click.option("--n", "n_override", type=int, default=None, help="ambient size")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def _load_dc(facets_path, n_override) -> SimplicialComplex:
    if facets_path is None:
        raise ParseError("a --facets file is required")
    text = _read(facets_path)
    if facets_path.endswith(".json"):
        return SimplicialComplex.from_json(text)
    return SimplicialComplex.parse_facets_text(text, n_override)


def _load_module_or_complex(facets_path, module_path, complex_path, n_override, fld):
    """Facet files become the Stanley-Reisner ideal; JSON is taken as is."""
    given = [p for p in (facets_path, module_path, complex_path) if p is not None]
    if len(given) != 1:
        raise ParseError("give exactly one of --facets, --module, --complex")
    if facets_path is not None:
        dc = _load_dc(facets_path, n_override)
        return SqComplex.from_module(sqmod.stanley_reisner_ideal(dc, fld)), True
    if module_path is not None:
        M = SqModule.from_json(_read(module_path))
        if M.field != fld:
            raise InvalidInputError(
                f"module is over {M.field.name()}, requested {fld.name()}"
            )
        return SqComplex.from_module(M), True
    C = SqComplex.from_json(_read(complex_path))
    if C.field != fld:
        raise InvalidInputError(f"complex is over {C.field.name()}, requested {fld.name()}")
    return C, False


def _emit(rows, headers, fmt):
    """rows: list of dicts keyed by headers; subsets already rendered."""
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        click.echo(",".join(headers))
        for r in rows:
            click.echo(",".join(str(r[h]) for h in headers))
    else:
        widths = {h: max([len(h)] + [len(str(r[h])) for r in rows]) for h in headers}
        click.echo("  ".join(h.ljust(widths[h]) for h in headers))
        for r in rows:
            click.echo("  ".join(str(r[h]).ljust(widths[h]) for h in headers))


def _subset_out(F: int, fmt: str):
    if fmt == "json":
        return members(F)
    if fmt == "csv":
        return F
    return subset_label(F)


@main.command()
@_facets_opt
@_module_opt
@_complex_opt
@_n_opt
@_field_opt
@_format_opt
def betti(facets_path, module_path, complex_path, n_override, field_name, fmt):
    """Betti table of a module or complex (facet input: the ideal)."""
    fld = Field.from_name(field_name)
    C, is_module = _load_module_or_complex(
        facets_path, module_path, complex_path, n_override, fld
    )
    if is_module:
        table = betti_table(C.term(0))
    else:
        table = {}
        et = invariants.ext_table(dualities.alexander_cx(C))
        full = (1 << C.n) - 1
        for (e, G), v in et.entries.items():
            F = full & ~G
            table[(popcount(F) - e, F)] = v
    rows = [
        {"i": i, "subset": _subset_out(F, fmt), "beta": v}
        for (i, F), v in sorted(table.items())
    ]
    _emit(rows, ["i", "subset", "beta"], fmt)


@main.command()
@_facets_opt
@_module_opt
@_complex_opt
@_n_opt
@_field_opt
@_format_opt
def ext(facets_path, module_path, complex_path, n_override, field_name, fmt):
    """Table of Ext^i(-, omega) graded dimensions."""
    fld = Field.from_name(field_name)
    C, _ = _load_module_or_complex(
        facets_path, module_path, complex_path, n_override, fld
    )
    et = invariants.ext_table(C)
    rows = [
        {"i": i, "subset": _subset_out(F, fmt), "dim": v} for (i, F), v in et.rows()
    ]
    _emit(rows, ["i", "subset", "dim"], fmt)


@main.command()
@_facets_opt
@_n_opt
@_format_opt
def dual(facets_path, n_override, fmt):
    """Facets of the Alexander dual complex."""
    dc = _load_dc(facets_path, n_override)
    dd = dc.alexander_dual()
    rows = [{"facet": _subset_out(F, fmt)} for F in dd.facets()]
    _emit(rows, ["facet"], fmt)


@main.command()
@_facets_opt
@_n_opt
@click.option("--subset", "subset_str", required=True, help="vertices, e.g. '1 3'")
@_format_opt
def link(facets_path, n_override, subset_str, fmt):
    """Facets of the link of a face."""
    dc = _load_dc(facets_path, n_override)
    F = from_vertices(subset_str.split(), dc.n)
    lk = dc.link(F)
    if lk.is_void:
        click.echo("void (not a face)")
        return
    rows = [{"facet": _subset_out(G, fmt)} for G in lk.facets()]
    _emit(rows, ["facet"], fmt)


@main.command()
@_facets_opt
@_module_opt
@_n_opt
@_field_opt
@_format_opt
def resolve(facets_path, module_path, n_override, field_name, fmt):
    """Minimal free resolution: summands per homological step."""
    fld = Field.from_name(field_name)
    C, _ = _load_module_or_complex(facets_path, module_path, None, n_override, fld)
    res, _aug = minimal_projective_resolution(C.term(0))
    rows = []
    for t in sorted(res.blocks, reverse=True):
        for b in res.blocks[t]:
            rows.append(
                {"step": -t, "subset": _subset_out(b.subset, fmt), "rank": b.vdim}
            )
    _emit(rows, ["step", "subset", "rank"], fmt)


@main.command()
@_facets_opt
@_module_opt
@_n_opt
@click.option("--i", "strand_i", type=int, required=True)
@_field_opt
@_format_opt
def strand(facets_path, module_path, n_override, strand_i, field_name, fmt):
    """The i-linear strand of the minimal free resolution."""
    fld = Field.from_name(field_name)
    C, _ = _load_module_or_complex(facets_path, module_path, None, n_override, fld)
    res, _aug = minimal_projective_resolution(C.term(0))
    st = linear_strand(res, strand_i)
    rows = []
    for t in sorted(st.blocks, reverse=True):
        for b in st.blocks[t]:
            rows.append(
                {"degree": t, "subset": _subset_out(b.subset, fmt), "rank": b.vdim}
            )
    _emit(rows, ["degree", "subset", "rank"], fmt)


@main.command()
@_facets_opt
@_n_opt
@click.option("--i", "coh_i", type=int, required=True)
@click.option("--subset", "subset_str", default="", help="vertices, e.g. '1 3'")
@_field_opt
@_format_opt
def hochster(facets_path, n_override, coh_i, subset_str, field_name, fmt):
    """Graded local cohomology dimension dim H^i_m(S/I)_{-F}."""
    fld = Field.from_name(field_name)
    dc = _load_dc(facets_path, n_override)
    F = from_vertices(subset_str.split(), dc.n)
    val = invariants.hochster(dc, coh_i, F, fld)
    _emit(
        [{"i": coh_i, "subset": _subset_out(F, fmt), "dim": val}],
        ["i", "subset", "dim"],
        fmt,
    )


@main.command(name="lc-hilbert")
@_facets_opt
@_n_opt
@click.option("--i", "coh_i", type=int, required=True)
@click.option("--a", "a_str", required=True, help="degree vector, e.g. '-3,-5'")
@_field_opt
@_format_opt
def lc_hilbert(facets_path, n_override, coh_i, a_str, field_name, fmt):
    """Hilbert function of local cohomology H^i_{I}(S) at a degree vector."""
    fld = Field.from_name(field_name)
    dc = _load_dc(facets_path, n_override)
    try:
        a = [int(x) for x in a_str.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad degree vector {a_str!r}") from None
    val = invariants.local_cohomology_hilbert(dc, coh_i, a, fld)
    _emit([{"i": coh_i, "a": a_str, "dim": val}], ["i", "a", "dim"], fmt)


@main.command()
@_facets_opt
@_n_opt
@click.option("--i", "coh_i", type=int, required=True)
@_field_opt
@_format_opt
def charcycle(facets_path, n_override, coh_i, field_name, fmt):
    """Characteristic-cycle multiplicities of H^i_I(S)."""
    fld = Field.from_name(field_name)
    dc = _load_dc(facets_path, n_override)
    cc = invariants.char_cycle(dc, coh_i, fld)
    rows = [
        {"subset": _subset_out(F, fmt), "multiplicity": m} for F, m in cc.rows()
    ]
    _emit(rows, ["subset", "multiplicity"], fmt)


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-n", "max_n", type=int, default=4, show_default=True)
@_field_opt
@click.option(
    "--counterexample-file",
    default="sqfree-counterexample.json",
    show_default=True,
)
def check(seed, max_n, field_name, counterexample_file):
    """Run the randomized invariant suite; exit 4 on any failure."""
    fld = Field.from_name(field_name)
    failures = []

    def report(name, ok, witness=None):
        click.echo(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append((name, witness))

    mods = corpus.module_corpus(max_n, fld, seed, count=8)
    cxs = corpus.complex_corpus(min(max_n, 3), fld, seed + 1, count=4)

    ok = True
    wit = None
    for M in mods:
        if dualities.alexander(dualities.alexander(M)) != M:
            ok, wit = False, M.to_json()
            break
    report("alexander involution (modules)", ok, wit)

    ok, wit = True, None
    for C in cxs:
        AA = dualities.alexander_cx(dualities.alexander_cx(C))
        if AA.cohomology_dims() != C.cohomology_dims():
            ok, wit = False, C.to_json()
            break
    report("alexander involution (complexes)", ok, wit)

    ok, wit = True, None
    for C in cxs:
        DD = dualities.dualizeD(dualities.dualizeD(C).to_sqcomplex()).to_sqcomplex()
        if DD.cohomology_dims() != C.cohomology_dims():
            ok, wit = False, C.to_json()
            break
    report("double dualizing functor", ok, wit)

    ok, wit = True, None
    for C in cxs:
        try:
            dualities.dadada_map(C)
        except InternalCheckError:
            ok, wit = False, C.to_json()
            break
    report("DADADA sign isomorphism", ok, wit)

    ok, wit = True, None
    for M in mods:
        from .sqcomplex import bass_table

        bt = bass_table(M)
        btA = betti_table(dualities.alexander(M))
        full = (1 << M.n) - 1
        if bt != {(i, full & ~F): v for (i, F), v in btA.items()}:
            ok, wit = False, M.to_json()
            break
    report("bass/betti duality", ok, wit)

    ok, wit = True, None
    for C in cxs:
        L = dualities.bgg_L(dualities.to_exterior_cx(C))
        if not L.structurally_equal(dualities.functorF(C), check_keys=True):
            ok, wit = False, C.to_json()
            break
    report("exterior L equals F", ok, wit)

    ok, wit = True, None
    for C in cxs:
        try:
            dualities.koszul_DF(C)
        except InternalCheckError:
            ok, wit = False, C.to_json()
            break
    report("Koszul DF comparison sign", ok, wit)

    ok, wit = True, None
    for M in mods:
        if M.n > 3 or M.is_zero:
            continue
        for i in invariants.strand_indices(M):
            if not invariants.strand_theorem_check(M, i):
                ok, wit = False, M.to_json()
                break
        if not ok:
            break
    report("linear strand theorem", ok, wit)

    rng = random.Random(seed + 2)
    ok, wit = True, None
    for _ in range(4):
        n = rng.randint(2, max_n)
        dc = corpus.random_simplicial_complex(n, rng)
        for i in range(0, n + 1):
            for F in sorted(dc.faces):
                got = invariants.hochster(dc, i, F, fld)
                hom = dc.link(F).reduced_homology(fld)
                want = hom.get(i - popcount(F) - 1, 0)
                if got != want:
                    ok, wit = False, {"complex": dc.to_json(), "i": i, "F": members(F)}
                    break
            if not ok:
                break
        if not ok:
            break
    report("Hochster cross-check", ok, wit)

    if failures:
        name, wit = failures[0]
        with open(counterexample_file, "w") as fh:
            json.dump({"property": name, "witness": wit}, fh, indent=2)
        click.echo(f"first counterexample written to {counterexample_file}", err=True)
        sys.exit(4)
    click.echo("all checks passed")


if __name__ == "__main__":
    main()

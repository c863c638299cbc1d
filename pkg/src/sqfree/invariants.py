"""Derived invariants: Ext against the canonical module, dimensions,
Cohen-Macaulay and linearity tests, Hochster-type graded dimensions,
local-cohomology Hilbert functions, and characteristic cycles.

Everything funnels through the dualizing complex: Ext^i(C, omega) is the
(i-n)-th cohomology of D(C), so no resolutions of complexes are ever
built.  The simplicial reduced-homology route exists separately (in
boolcomb) and is used by the test suite as an independent oracle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from . import dualities, sqcomplex
from .boolcomb import SimplicialComplex, popcount, subset_label, subsets
from .errors import InvalidInputError
from .field import Field
from .sqcomplex import SqComplex, linear_strand, minimal_projective_resolution
from .sqmod import SqModule, stanley_reisner_ring


def _as_complex(C) -> SqComplex:
    if isinstance(C, SqModule):
        return SqComplex.from_module(C)
    return C


def ext(C, i: int) -> SqModule:
    """Ext^i(C, omega_S) as a squarefree module: H^{i-n} of the dualizing
    complex."""
    C = _as_complex(C)
    return dualities.dualizeD(C).to_sqcomplex().cohomology(i - C.n)


@dataclass(frozen=True)
class ExtTable:
    n: int
    entries: dict  # (i, F) -> nat

    def dim(self, i: int, F: int) -> int:
        return self.entries.get((i, F), 0)

    def degrees(self) -> list[int]:
        return sorted({i for i, _ in self.entries})

    def rows(self):
        return sorted(self.entries.items())


def ext_table(C) -> ExtTable:
    C = _as_complex(C)
    n = C.n
    D = dualities.dualizeD(C).to_sqcomplex()
    entries = {}
    degs = D.degrees()
    if degs:
        for t in range(degs[0], degs[-1] + 1):
            h = D.cohomology(t)
            for F in subsets(n):
                if h.dims[F]:
                    entries[(t + n, F)] = h.dims[F]
    return ExtTable(n, entries)


def krull_dim(M: SqModule):
    """max |F| over the support; None for the zero module."""
    if M.is_zero:
        return None
    return max(popcount(F) for F in subsets(M.n) if M.dims[F])


def proj_dim(M: SqModule):
    """max i with Ext^i(M, omega) nonzero; None for the zero module."""
    if M.is_zero:
        return None
    degs = ext_table(M).degrees()
    return max(degs)


def is_cohen_macaulay(M: SqModule) -> bool:
    """At most one nonzero Ext degree, sitting at n - dim (true for 0)."""
    if M.is_zero:
        return True
    degs = ext_table(M).degrees()
    return degs == [M.n - krull_dim(M)]


def is_sequentially_cm(M: SqModule) -> bool:
    """Every nonzero Ext^i(M, omega) is Cohen-Macaulay of dimension n-i."""
    if M.is_zero:
        return True
    table = ext_table(M)
    for i in table.degrees():
        E = ext(M, i)
        if E.is_zero:
            continue
        if krull_dim(E) != M.n - i or not is_cohen_macaulay(E):
            return False
    return True


def strand_indices(M: SqModule) -> list[int]:
    """Values of i for which the i-linear strand of the resolution is nonzero."""
    res, _ = minimal_projective_resolution(M)
    vals = set()
    for t, bs in res.blocks.items():
        for b in bs:
            vals.add(popcount(b.subset) + t)
    return sorted(vals)


def is_componentwise_linear(M: SqModule) -> bool:
    """All linear strands of the minimal resolution have cohomology
    concentrated in degree 0."""
    if M.is_zero:
        return True
    res, _ = minimal_projective_resolution(M)
    vals = set()
    for t, bs in res.blocks.items():
        for b in bs:
            vals.add(popcount(b.subset) + t)
    for i in sorted(vals):
        strand = linear_strand(res, i)
        hs = strand.to_sqcomplex().cohomology_dims()
        if any(t != 0 for t in hs):
            return False
    return True


def strand_theorem_check(M: SqModule, i: int) -> bool:
    """Compare the i-linear strand of the minimal resolution with
    F(Ext^i(A(M), omega))[n-i]: equal term dims and cohomology dims per
    degree and subset."""
    n = M.n
    res, _ = minimal_projective_resolution(M)
    strand = linear_strand(res, i).to_sqcomplex()
    E = ext(dualities.alexander(M), i)
    other = dualities.functorF(SqComplex.from_module(E)).translate(n - i).to_sqcomplex()
    degs = sorted(set(strand.degrees()) | set(other.degrees()))
    for t in degs:
        if strand.term(t).dims != other.term(t).dims:
            return False
    h1 = strand.cohomology_dims()
    h2 = other.cohomology_dims()
    return h1 == h2


# -- simplicial-complex invariants -----------------------------------------------


def hochster(dc: SimplicialComplex, i: int, F: int, fld: Field) -> int:
    """dim of the -F graded piece of H^i_m(S/I_Delta), through Ext."""
    R = stanley_reisner_ring(dc, fld)
    return ext(R, dc.n - i).dims[F]


def local_cohomology_hilbert(dc: SimplicialComplex, i: int, a, fld: Field) -> int:
    """dim H^i_{I_Delta}(S)_a via the straight-module reading of Ext^i
    shifted by the all-ones vector."""
    if len(a) != dc.n:
        raise InvalidInputError(f"degree vector has length {len(a)}, want {dc.n}")
    F = 0
    for idx, x in enumerate(a, start=1):
        if x >= 0:
            F |= 1 << (idx - 1)
    R = stanley_reisner_ring(dc, fld)
    return ext(R, i).dims[F]


@dataclass(frozen=True)
class CharCycle:
    n: int
    i: int
    mult: dict  # subset -> nat

    def rows(self):
        return sorted(self.mult.items(), key=lambda kv: (popcount(kv[0]), kv[0]))

    def pretty(self) -> str:
        return ", ".join(f"{subset_label(F)}: {m}" for F, m in self.rows())


def char_cycle(dc: SimplicialComplex, i: int, fld: Field) -> CharCycle:
    """Multiplicities of H^i_{I_Delta}(S) along the involutive primes,
    read as the graded dimensions of Ext^i(S/I_Delta, omega)."""
    if fld.p:
        warnings.warn(
            "characteristic-cycle semantics assume characteristic zero; "
            f"dimensions over GF({fld.p}) are reported as computed",
            stacklevel=2,
        )
    R = stanley_reisner_ring(dc, fld)
    E = ext(R, i)
    mult = {F: E.dims[F] for F in subsets(dc.n) if E.dims[F]}
    return CharCycle(dc.n, i, mult)

"""Complexes, cones, resolutions, Betti/Bass numbers, linear strands."""

import random

import pytest

from sqfree import corpus, sqmod
from sqfree.boolcomb import SimplicialComplex, popcount, subsets
from sqfree.field import QQ
from sqfree.sqcomplex import (
    ChainMap,
    SqComplex,
    bass_table,
    betti_table,
    cone,
    is_quasi_iso,
    linear_strand,
    minimal_injective_resolution,
    minimal_projective_resolution,
)
from sqfree.sqmod import free_module, simple_module, stanley_reisner_ideal


def test_from_module_cohomology(fld):
    M = sqmod.quotient_prime(2, 0b01, fld)
    C = SqComplex.from_module(M, deg=3)
    assert C.cohomology_dims() == {3: M.dims}
    assert C.translate(3).cohomology_dims() == {0: M.dims}


def test_json_roundtrip(fld):
    rng = random.Random(3)
    C = corpus.random_sqcomplex(2, fld, rng)
    assert SqComplex.from_json(C.to_json()).cohomology_dims() == C.cohomology_dims()


def test_cone_of_identity_is_exact(fld):
    M = sqmod.stanley_reisner_ring(
        SimplicialComplex.from_facets(3, [0b011, 0b110]), fld
    )
    C = SqComplex.from_module(M)
    f = ChainMap(C, C, {0: sqmod.identity_hom(M)})
    assert cone(f).is_exact()
    assert is_quasi_iso(f)


def test_resolution_is_quasi_iso(fld):
    rng = random.Random(9)
    for _ in range(4):
        M = corpus.random_sqmodule(3, fld, rng)
        res, aug = minimal_projective_resolution(M)
        res.validate()
        assert is_quasi_iso(aug)
        assert all(t <= 0 for t in res.degrees())


def test_resolution_is_minimal(fld):
    """No unit entries between summands in the same squarefree degree:
    a differential block S(-F) -> S(-F) would contradict minimality."""
    rng = random.Random(23)
    for _ in range(4):
        M = corpus.random_sqmodule(3, fld, rng)
        res, _ = minimal_projective_resolution(M)
        for t in res.degrees():
            bs_src = res.blocks.get(t, ())
            bs_tgt = res.blocks.get(t + 1, ())
            for (ti, si), m in res.dmats.get(t, {}).items():
                if bs_src[si].subset == bs_tgt[ti].subset:
                    assert m.is_zero


def test_koszul_betti_table(fld):
    """S/m at n=2 resolves by the Koszul complex."""
    M = simple_module(2, 0, fld)
    assert betti_table(M) == {(0, 0): 1, (1, 0b01): 1, (1, 0b10): 1, (2, 0b11): 1}


def test_edge_ideal_betti(fld):
    """I = (x1x2, x2x3) at n=3."""
    dc = SimplicialComplex.from_facets(3, [0b101, 0b010])  # <{1,3},{2}>
    I = stanley_reisner_ideal(dc, fld)
    assert betti_table(I) == {(0, 0b011): 1, (0, 0b110): 1, (1, 0b111): 1}


def test_injective_resolution_of_s(fld):
    """S equals S/P_[n], already injective: a length-0 resolution."""
    M = free_module(2, 0, fld)
    res = minimal_injective_resolution(M)
    res.validate()
    assert bass_table(M) == {(0, 0b11): 1}


def test_bass_of_dual_of_residue_field(fld):
    """The simple at [n] is Alexander dual to k, so its Bass table
    mirrors the Koszul Betti table: mu^i(F) = 1 at |F| = n - i."""
    E = simple_module(2, 0b11, fld)
    assert bass_table(E) == {(0, 0b11): 1, (1, 0b01): 1, (1, 0b10): 1, (2, 0): 1}


def test_linear_strand_koszul(fld):
    """The Koszul resolution of S/m is entirely its own 0-linear strand."""
    M = simple_module(3, 0, fld)
    res, _ = minimal_projective_resolution(M)
    st0 = linear_strand(res, 0)
    assert st0.structurally_equal(res)
    for i in (1, 2, 3):
        assert linear_strand(res, i).is_zero


def test_linear_strand_splits_blocks(fld):
    dc = SimplicialComplex.from_facets(3, [0b001, 0b100])
    I = stanley_reisner_ideal(dc, fld)
    res, _ = minimal_projective_resolution(I)
    # strands partition the blocks by |F| + degree
    total = sum(b.vdim for bs in res.blocks.values() for b in bs)
    by_strand = 0
    for i in range(0, 4 + 1):
        st = linear_strand(res, i)
        by_strand += sum(b.vdim for bs in st.blocks.values() for b in bs)
        for t, bs in st.blocks.items():
            assert all(popcount(b.subset) + t == i for b in bs)
    assert by_strand == total


def test_resolution_length_bound(fld):
    rng = random.Random(31)
    for _ in range(5):
        M = corpus.random_sqmodule(3, fld, rng)
        res, _ = minimal_projective_resolution(M)
        degs = res.degrees()
        if degs:
            assert -degs[0] <= M.n

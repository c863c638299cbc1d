"""Alexander duality, the dualizing functor, and the exterior side."""

import random

import pytest

from sqfree import corpus, dualities, sqmod
from sqfree.boolcomb import SimplicialComplex, complement, popcount, subsets
from sqfree.dualities import (
    alexander,
    alexander_cx,
    alexander_hom,
    bgg_L,
    dadada_map,
    dualizeD,
    functorF,
    hom_to_omega,
    koszul_DF,
    to_exterior,
    to_exterior_cx,
    to_symmetric,
)
from sqfree.sqcomplex import SqComplex, minimal_projective_resolution
from sqfree.sqmod import free_module, quotient_prime, simple_module


from hypothesis import given, settings
from hypothesis import strategies as st


@given(seed=st.integers(0, 10**6), n=st.integers(1, 4), p=st.sampled_from([0, 101]))
@settings(max_examples=25, deadline=None)
def test_alexander_involution_property(seed, n, p):
    from sqfree.field import QQ, Field

    fld = Field(p) if p else QQ
    M = corpus.random_sqmodule(n, fld, random.Random(seed))
    assert alexander(alexander(M)) == M


@given(seed=st.integers(0, 10**6), n=st.integers(1, 3), p=st.sampled_from([0, 101]))
@settings(max_examples=15, deadline=None)
def test_double_dual_property(seed, n, p):
    from sqfree.field import QQ, Field

    fld = Field(p) if p else QQ
    C = corpus.random_sqcomplex(n, fld, random.Random(seed))
    DD = dualizeD(dualizeD(C).to_sqcomplex()).to_sqcomplex()
    assert DD.cohomology_dims() == C.cohomology_dims()


def test_alexander_involution_literal(fld):
    rng = random.Random(2)
    for _ in range(5):
        M = corpus.random_sqmodule(4, fld, rng)
        assert alexander(alexander(M)) == M


def test_alexander_of_standard_modules(fld):
    n = 3
    for F in subsets(n):
        Fc = complement(F, n)
        assert alexander(free_module(n, F, fld)) == quotient_prime(n, Fc, fld)
        assert alexander(simple_module(n, F, fld)) == simple_module(n, Fc, fld)


def test_alexander_hom_contravariant(fld):
    rng = random.Random(4)
    M = corpus.random_sqmodule(3, fld, rng)
    N = corpus.random_sqmodule(3, fld, rng)
    f = corpus.random_sqhom(M, N, rng)
    af = alexander_hom(f)
    af.validate()
    assert af.source == alexander(N) and af.target == alexander(M)


def test_eagon_reiner(fld):
    """A(S/I_D) = I_{D*} literally, for every complex on 3 vertices."""
    for dc in corpus.all_complexes_on_3():
        R = sqmod.stanley_reisner_ring(dc, fld)
        dd = dc.alexander_dual(allow_void=True)
        if dd.is_void:
            # dual of the full simplex: A(S) corresponds to the zero ideal
            assert alexander(R) == R  # A(S) = S
            continue
        assert alexander(R) == sqmod.stanley_reisner_ideal(dd, fld)


def test_dualizeD_squares_to_identity_on_cohomology(fld):
    rng = random.Random(8)
    C = corpus.random_sqcomplex(3, fld, rng)
    DD = dualizeD(dualizeD(C).to_sqcomplex()).to_sqcomplex()
    assert DD.cohomology_dims() == C.cohomology_dims()


def test_D_of_prime_quotient(fld):
    """D(S/P_F) has cohomology k(-F) concentrated in degree -|F|."""
    n = 3
    for F in subsets(n):
        D = dualizeD(SqComplex.from_module(quotient_prime(n, F, fld)))
        D.validate()
        k = simple_module(n, F, fld)
        assert D.to_sqcomplex().cohomology_dims() == {-popcount(F): k.dims}


def test_F_equals_A_after_D_literally(fld):
    rng = random.Random(12)
    for _ in range(3):
        C = corpus.random_sqcomplex(3, fld, rng)
        lhs = functorF(C)
        rhs = dualizeD(C).alexander()
        assert lhs.structurally_equal(rhs, check_keys=True)
        for t in lhs.degrees():
            for key, m in lhs.dmats.get(t, {}).items():
                assert rhs.dmats[t][key] == m


def test_F_of_prime_quotient(fld):
    """F = A after D, so F(S/P_F) has cohomology k(-F^c) in degree |F|."""
    n = 3
    for F in subsets(n):
        Fc = complement(F, n)
        Fcx = functorF(SqComplex.from_module(quotient_prime(n, F, fld)))
        Fcx.validate()
        want = simple_module(n, Fc, fld)
        assert Fcx.to_sqcomplex().cohomology_dims() == {popcount(F): want.dims}


def test_hom_to_omega_matches_D(fld):
    rng = random.Random(21)
    for _ in range(3):
        M = corpus.random_sqmodule(3, fld, rng)
        res, _ = minimal_projective_resolution(M)
        H = hom_to_omega(res)
        H.validate()
        got = H.to_sqcomplex().cohomology_dims()
        want = dualizeD(SqComplex.from_module(M)).to_sqcomplex().cohomology_dims()
        assert got == want


def test_dadada_commutes(fld):
    rng = random.Random(30)
    for _ in range(3):
        C = corpus.random_sqcomplex(3, fld, rng)
        phi = dadada_map(C)  # raises InternalCheckError if signs fail
        phi.validate()


def test_ad_cubed_is_translation(fld):
    rng = random.Random(33)
    C = corpus.random_sqcomplex(2, fld, rng)
    X = C
    for _ in range(3):
        X = dualizeD(X).alexander().to_sqcomplex()
    assert X.cohomology_dims() == C.translate(-2 * C.n).cohomology_dims()
    Y = C
    for _ in range(3):
        Y = dualizeD(alexander_cx(Y)).to_sqcomplex()
    assert Y.cohomology_dims() == C.translate(2 * C.n).cohomology_dims()


def test_exterior_roundtrip(fld):
    rng = random.Random(41)
    M = corpus.random_sqmodule(3, fld, rng)
    E = to_exterior(M)
    E.validate()  # anticommutativity of the e-action
    assert to_symmetric(E) == M


def test_bgg_L_equals_F(fld):
    rng = random.Random(44)
    for _ in range(3):
        C = corpus.random_sqcomplex(3, fld, rng)
        L = bgg_L(to_exterior_cx(C))
        R = functorF(C)
        assert L.structurally_equal(R, check_keys=True)
        for t in L.degrees():
            assert L.dmats.get(t, {}) == R.dmats.get(t, {})


def test_koszul_DF_comparison(fld):
    rng = random.Random(47)
    for _ in range(3):
        C = corpus.random_sqcomplex(3, fld, rng)
        K, cmp_map = koszul_DF(C)  # comparison raises on sign failure
        K.validate()
        assert K.to_sqcomplex().cohomology_dims() == (
            functorF(C).to_sqcomplex().cohomology_dims()
        )


def test_example_chain(fld):
    """Alternate A and D starting from S(-F): the six-stage chain ends at
    S(-F) shifted by -2n, hitting the expected classes on the way."""
    n = 3
    for F in subsets(n):
        Fc = complement(F, n)
        C = SqComplex.from_module(free_module(n, F, fld))
        # stage 1: A(S(-F)) = S/P_{F^c}, literal module equality
        s1 = alexander_cx(C)
        assert s1.term(0) == quotient_prime(n, Fc, fld)
        # stage 2: D gives k(-F^c) in degree |F| - n
        s2 = dualizeD(s1).to_sqcomplex()
        assert s2.cohomology_dims() == {
            popcount(F) - n: simple_module(n, Fc, fld).dims
        }
        # stage 3: A moves it to k(-F) in degree n - |F|
        s3 = alexander_cx(s2)
        assert s3.cohomology_dims() == {
            n - popcount(F): simple_module(n, F, fld).dims
        }
        # stage 4: D lands on S/P_F in degree -n
        s4 = dualizeD(s3).to_sqcomplex()
        assert s4.cohomology_dims() == {-n: quotient_prime(n, F, fld).dims}
        # stage 5: A gives S(-F^c) in degree n
        s5 = alexander_cx(s4)
        assert s5.cohomology_dims() == {n: free_module(n, Fc, fld).dims}
        # stage 6: the closing D lands back on S(-F), shifted to -2n
        s6 = dualizeD(s5).to_sqcomplex()
        assert s6.cohomology_dims() == {-2 * n: free_module(n, F, fld).dims}

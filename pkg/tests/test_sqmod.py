"""Squarefree modules and homomorphisms."""

import json
import random

import pytest

from sqfree import corpus, sqmod
from sqfree.boolcomb import SimplicialComplex, popcount, subsets
from sqfree.errors import InvalidInputError
from sqfree.sqmod import (
    SqModule,
    cokernel,
    direct_sum,
    free_module,
    graded_dim,
    identity_hom,
    image,
    kernel,
    quotient_prime,
    simple_module,
    stanley_reisner_ideal,
    stanley_reisner_ring,
    zero_module,
)


def test_free_module_dims(fld):
    M = free_module(3, 0b011, fld)  # S(-{1,2})
    for F in subsets(3):
        assert M.dims[F] == (1 if F & 0b011 == 0b011 else 0)
    M.validate()


def test_quotient_and_simple(fld):
    Q = quotient_prime(3, 0b101, fld)  # S/P_{{1,3}^c} supported below {1,3}
    for F in subsets(3):
        assert Q.dims[F] == (1 if F | 0b101 == 0b101 else 0)
    S = simple_module(3, 0b010, fld)
    assert sum(S.dims) == 1 and S.dims[0b010] == 1
    Q.validate()
    S.validate()


def test_stanley_reisner(fld):
    path = SimplicialComplex.from_facets(3, [0b011, 0b110])
    R = stanley_reisner_ring(path, fld)
    I = stanley_reisner_ideal(path, fld)
    for F in subsets(3):
        assert R.dims[F] == (1 if F in path.faces else 0)
        assert R.dims[F] + I.dims[F] == 1  # R + I = S in each degree
    R.validate()
    I.validate()


def test_validate_rejects_noncommuting(fld):
    M = free_module(2, 0, fld)
    bad = dict(M.maps)
    bad[(0, 1)] = M.map(0, 1).scale(fld.coerce(2))
    with pytest.raises(InvalidInputError):
        SqModule(2, fld, M.dims, bad).validate()


def test_json_roundtrip(fld):
    rng = random.Random(5)
    M = corpus.random_sqmodule(3, fld, rng)
    assert SqModule.from_json(json.dumps(M.to_json())) == M
    # vertex-list subset keys are accepted too
    data = M.to_json()
    data["dims"] = {str(k): v for k, v in enumerate(M.dims) if v}
    assert SqModule.from_json(data) == M


def test_graded_dim(fld):
    M = free_module(2, 0b01, fld)  # S(-{1})
    assert graded_dim(M, (3, 0)) == 1
    assert graded_dim(M, (0, 5)) == 0  # needs positive degree in x1
    with pytest.raises(InvalidInputError):
        graded_dim(M, (1, -1))  # negative degrees need the straight reading
    assert graded_dim(M, (1, -1), straight=True) == 1


def test_direct_sum(fld):
    A = free_module(2, 0b01, fld)
    B = simple_module(2, 0b10, fld)
    S = direct_sum([A, B])
    for F in subsets(2):
        assert S.dims[F] == A.dims[F] + B.dims[F]
    S.validate()


def test_kernel_image_cokernel_exactness(fld):
    rng = random.Random(17)
    for _ in range(6):
        M = corpus.random_sqmodule(3, fld, rng)
        N = corpus.random_sqmodule(3, fld, rng)
        f = corpus.random_sqhom(M, N, rng)
        f.validate()
        K, incl = kernel(f)
        I, iincl = image(f)
        C, proj = cokernel(f)
        incl.validate(), iincl.validate(), proj.validate()
        assert (f @ incl).is_zero
        assert (proj @ f).is_zero
        for F in subsets(3):
            assert K.dims[F] + I.dims[F] == M.dims[F]
            assert I.dims[F] + C.dims[F] == N.dims[F]


def test_hom_algebra(fld):
    M = quotient_prime(2, 0b11, fld)
    idm = identity_hom(M)
    assert (idm @ idm) == idm
    z = idm + (-idm)
    assert z.is_zero


def test_zero_module(fld):
    Z = zero_module(3, fld)
    assert Z.is_zero
    Z.validate()

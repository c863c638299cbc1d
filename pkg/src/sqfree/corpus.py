"""Seeded random corpora: simplicial complexes, squarefree modules,
homomorphisms between them, and short complexes.

Modules are sampled constructively: dimensions first, then structure
maps along ascending bitmasks, where each new level is drawn from the
exact solution space of the commutation constraints.  This makes the
generator rejection-free and byte-for-byte reproducible from the seed.
"""

from __future__ import annotations

import random

from . import exactla, sqmod
from .boolcomb import SimplicialComplex, members, popcount, subsets
from .exactla import Matrix
from .field import Field
from .sqcomplex import SqComplex
from .sqmod import SqHom, SqModule


def _rand_scalar(fld: Field, rng: random.Random):
    if fld.p:
        return rng.randrange(fld.p)
    return fld.coerce(rng.randint(-3, 3))


def _rand_matrix(fld: Field, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(
        fld, rows, cols, tuple(_rand_scalar(fld, rng) for _ in range(rows * cols))
    )


def random_simplicial_complex(n: int, rng: random.Random) -> SimplicialComplex:
    """Downward closure of a random facet sample (never void)."""
    count = rng.randint(1, max(2, n))
    facets = [rng.randrange(1 << n) for _ in range(count)]
    return SimplicialComplex.from_facets(n, facets)


def random_sqmodule(
    n: int, fld: Field, rng: random.Random, max_dim: int = 2
) -> SqModule:
    """Random dims, then maps solved level-by-level to commute."""
    dims = tuple(rng.randint(0, max_dim) for _ in subsets(n))
    maps = {}
    mod_so_far = {}  # (F, i) -> Matrix, filled along ascending popcount

    def get(F, i):
        m = mod_so_far.get((F, i))
        if m is None:
            bit = 1 << (i - 1)
            return Matrix.zeros(fld, dims[F | bit], dims[F])
        return m

    order = sorted(subsets(n), key=lambda F: (popcount(F), F))
    for G in order:
        if popcount(G) == 0 or not dims[G]:
            continue
        # every vertex of G heads an unknown map, including zero-width ones:
        # a zero intermediate level still forces the other path to vanish
        ins = list(members(G))
        # unknowns: entries of the maps M_{G\l} -> M_G, stacked per l
        widths = [dims[G & ~(1 << (l - 1))] for l in ins]
        sizes = [dims[G] * w for w in widths]
        total = sum(sizes)
        rows = []
        for a in range(len(ins)):
            for b in range(a + 1, len(ins)):
                l, m_ = ins[a], ins[b]
                Fl = G & ~(1 << (l - 1))
                Fm = G & ~(1 << (m_ - 1))
                Fboth = Fl & Fm
                if not dims[Fboth]:
                    continue
                A = get(Fboth, m_)  # M_{G\{l,m}} -> M_{G\l}
                B = get(Fboth, l)  # M_{G\{l,m}} -> M_{G\m}
                # constraint: X_l @ A - X_m @ B = 0
                for r in range(dims[G]):
                    for c in range(dims[Fboth]):
                        row = [fld.zero()] * total
                        off = sum(sizes[:a])
                        for k in range(widths[a]):
                            row[off + r * widths[a] + k] = A[k, c]
                        off = sum(sizes[:b])
                        for k in range(widths[b]):
                            row[off + r * widths[b] + k] = fld.neg(B[k, c])
                        rows.append(row)
        if rows:
            sys = Matrix.from_rows(fld, rows)
            basis = exactla.kernel_basis(sys)
        else:
            basis = Matrix.identity(fld, total)
        sol = [fld.zero()] * total
        for j in range(basis.cols):
            c = _rand_scalar(fld, rng)
            if not c:
                continue
            col = basis.col(j)
            for k in range(total):
                sol[k] = fld.add(sol[k], fld.mul(c, col[k]))
        for a, l in enumerate(ins):
            off = sum(sizes[:a])
            w = widths[a]
            m = Matrix(fld, dims[G], w, tuple(sol[off : off + dims[G] * w]))
            Fl = G & ~(1 << (l - 1))
            mod_so_far[(Fl, l)] = m
            if not m.is_zero:
                maps[(Fl, l)] = m
    return SqModule(n, fld, dims, maps)


def random_sqhom(M: SqModule, N: SqModule, rng: random.Random) -> SqHom:
    """A random point of the exact solution space of Hom(M, N)."""
    fld = M.field
    n = M.n
    sizes = [N.dims[F] * M.dims[F] for F in subsets(n)]
    offs = [0] * len(sizes)
    for F in range(1, len(sizes)):
        offs[F] = offs[F - 1] + sizes[F - 1]
    total = offs[-1] + sizes[-1] if sizes else 0
    rows = []
    for F in subsets(n):
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if F & bit:
                continue
            G = F | bit
            # f_G @ m(F,v) - n(F,v) @ f_F = 0
            a = M.map(F, v)
            b = N.map(F, v)
            for r in range(N.dims[G]):
                for c in range(M.dims[F]):
                    row = [fld.zero()] * total
                    for k in range(M.dims[G]):
                        row[offs[G] + r * M.dims[G] + k] = a[k, c]
                    for k in range(N.dims[F]):
                        row[offs[F] + k * M.dims[F] + c] = fld.sub(
                            row[offs[F] + k * M.dims[F] + c], b[r, k]
                        )
                    if any(row):
                        rows.append(row)
    if rows:
        basis = exactla.kernel_basis(Matrix.from_rows(fld, rows))
    else:
        basis = Matrix.identity(fld, total)
    sol = [fld.zero()] * total
    for j in range(basis.cols):
        c = _rand_scalar(fld, rng)
        if not c:
            continue
        col = basis.col(j)
        for k in range(total):
            sol[k] = fld.add(sol[k], fld.mul(c, col[k]))
    comps = tuple(
        Matrix(fld, N.dims[F], M.dims[F], tuple(sol[offs[F] : offs[F] + sizes[F]]))
        for F in subsets(n)
    )
    return SqHom(M, N, comps)


def random_sqcomplex(n: int, fld: Field, rng: random.Random, max_dim: int = 2) -> SqComplex:
    """Three terms M -> N -> coker(f): a genuine complex with nonzero maps."""
    M = random_sqmodule(n, fld, rng, max_dim)
    N = random_sqmodule(n, fld, rng, max_dim)
    f = random_sqhom(M, N, rng)
    Q, proj = sqmod.cokernel(f)
    lo = rng.randint(-2, 1)
    return SqComplex(
        n, fld, {lo: M, lo + 1: N, lo + 2: Q}, {lo: f, lo + 1: proj}
    )


def module_corpus(n_max: int, fld: Field, seed: int, count: int = 20) -> list:
    """Deterministic mixed bag: standard modules, Stanley-Reisner rings
    and ideals, and seeded random modules, at sizes up to n_max."""
    rng = random.Random(seed)
    out = []
    for n in range(1, min(3, n_max) + 1):
        for F in subsets(n):
            out.append(sqmod.free_module(n, F, fld))
            out.append(sqmod.quotient_prime(n, F, fld))
            out.append(sqmod.simple_module(n, F, fld))
    for _ in range(count):
        n = rng.randint(1, n_max)
        out.append(random_sqmodule(n, fld, rng))
    for _ in range(max(3, count // 4)):
        n = rng.randint(2, n_max)
        dc = random_simplicial_complex(n, rng)
        out.append(sqmod.stanley_reisner_ring(dc, fld))
        out.append(sqmod.stanley_reisner_ideal(dc, fld))
    return out


def complex_corpus(n_max: int, fld: Field, seed: int, count: int = 10) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        out.append(random_sqcomplex(n, fld, rng))
    return out


def all_complexes_on_3() -> list:
    """Every simplicial complex on [3] that contains the empty face."""
    out = []
    for mask in range(1 << 7):  # membership of the 7 nonempty subsets
        faces = {0}
        for F in range(1, 8):
            if mask & (1 << (F - 1)):
                faces.add(F)
        try:
            out.append(SimplicialComplex(3, frozenset(faces)))
        except Exception:
            continue
    return out

"""Duality functors on squarefree modules and complexes.

* A — Alexander duality (exact, contravariant, an involution).
* D — the dualizing functor, built as an explicit complex of prime
  quotients; H^i(D(C)) computes Ext^{n+i}(C, omega).
* F = A o D — an explicit complex of frees.
* Hom(-, omega[n]) on complexes of frees, and the sign isomorphism
  showing (D o A)^3 is the 2n-fold translation.
* The exterior-algebra side: sign twists E/S, the BGG-style functor L,
  and the Koszul-duality construction DF with its comparison sign.

Convention notes.  A on complexes uses A(C)^i = A(C^{-i}) with plain
transposed differentials and no signs, which makes A o A the literal
identity.  The cross part of D's differential carries (-1)^{t+1} (t the
source degree); with the unsigned A this makes functorF(C) and
alexander of dualizeD(C) literally equal, coefficient matrices
included, and only the internal sign conventions — never a cohomology
group — depend on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import FREE, QUOT, Block, BlockComplex, _offsets
from .boolcomb import alpha, alpha_pair, beta_sign, complement, members, popcount, subsets
from .errors import InternalCheckError, InvalidInputError
from .exactla import Matrix
from .field import Field
from .sqcomplex import ChainMap, SqComplex
from .sqmod import SqHom, SqModule


# -- Alexander duality ---------------------------------------------------------


def alexander(M: SqModule) -> SqModule:
    """A(M): degree F holds the dual of M at the complement of F."""
    n = M.n
    dims = tuple(M.dims[complement(F, n)] for F in subsets(n))
    maps = {}
    for F in subsets(n):
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if F & bit:
                continue
            G = F | bit
            if not dims[F] or not dims[G]:
                continue
            src = complement(G, n)  # = F^c minus v
            m = M.map(src, v).transpose()
            if not m.is_zero:
                maps[(F, v)] = m
    return SqModule(n, M.field, dims, maps)


def alexander_hom(f: SqHom) -> SqHom:
    """A is contravariant: a map M -> N dualizes to A(N) -> A(M)."""
    n = f.source.n
    comps = tuple(f.comp(complement(F, n)).transpose() for F in subsets(n))
    return SqHom(alexander(f.target), alexander(f.source), comps)


def alexander_cx(C: SqComplex) -> SqComplex:
    terms = {-t: alexander(m) for t, m in C.terms.items()}
    diffs = {}
    degs = C.degrees()
    if degs:
        for t in range(degs[0] - 1, degs[-1] + 1):
            d = C.diffs.get(t)
            if d is not None and not d.is_zero:
                diffs[-t - 1] = alexander_hom(d)
    # fill endpoints so differentials connect the stored terms
    out_diffs = {}
    for t, d in diffs.items():
        out_diffs[t] = d
    return SqComplex(C.n, C.field, terms, out_diffs)


# -- the dualizing functor D ------------------------------------------------------


def _block_index(blocks):
    return {b.key: i for i, b in enumerate(blocks)}


def dualizeD(C: SqComplex) -> BlockComplex:
    """The explicit complex of prime quotients computing RHom(C, omega[n]).

    Degree t collects a block (C^j_F)^* (x) S/P_F for every (j, F) with
    -|F| - j = t.  Internal components carry (-1)^{alpha(l,F)} (v_l)^*;
    the cross component (C^j_F)^* -> (C^{j-1}_F)^* carries (-1)^{t+1}
    (see the module docstring on the sign).
    """
    n, fld = C.n, C.field
    degs = C.degrees()
    blocks: dict = {}
    if not degs:
        return BlockComplex(n, fld, {})
    for j in range(degs[0], degs[-1] + 1):
        m = C.term(j)
        for F in subsets(n):
            if m.dims[F]:
                t = -popcount(F) - j
                blocks.setdefault(t, []).append(Block(QUOT, F, m.dims[F], key=(j, F)))
    for t in blocks:
        blocks[t].sort(key=lambda b: b.key)
    blocks = {t: tuple(bs) for t, bs in blocks.items()}
    index = {t: _block_index(bs) for t, bs in blocks.items()}
    dmats: dict = {}
    for t, bs in blocks.items():
        tgt = index.get(t + 1, {})
        ents = {}
        for si, b in enumerate(bs):
            j, F = b.key
            # internal: drop a vertex of F
            for l in members(F):
                G = F & ~(1 << (l - 1))
                ti = tgt.get((j, G))
                if ti is None:
                    continue
                m = C.term(j).map(G, l).transpose()
                if alpha(l, F) % 2:
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
            # cross: toward the previous term of C
            ti = tgt.get((j - 1, F))
            if ti is not None:
                m = C.diff(j - 1).comp(F).transpose()
                if t % 2 == 0:  # sign (-1)^{t+1}
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
        if ents:
            dmats[t] = ents
    return BlockComplex(n, fld, blocks, dmats)


# -- the functor F = A o D ----------------------------------------------------------


def functorF(C: SqComplex) -> BlockComplex:
    """The explicit complex of frees: degree t collects (C^j_F)° (x) S(-F^c)
    over |F| + j = t; internal sign (-1)^{alpha(l,F)}, cross sign (-1)^t."""
    n, fld = C.n, C.field
    degs = C.degrees()
    if not degs:
        return BlockComplex(n, fld, {})
    blocks: dict = {}
    for j in range(degs[0], degs[-1] + 1):
        m = C.term(j)
        for F in subsets(n):
            if m.dims[F]:
                t = popcount(F) + j
                blocks.setdefault(t, []).append(
                    Block(FREE, complement(F, n), m.dims[F], key=(j, F))
                )
    for t in blocks:
        blocks[t].sort(key=lambda b: b.key)
    blocks = {t: tuple(bs) for t, bs in blocks.items()}
    index = {t: _block_index(bs) for t, bs in blocks.items()}
    dmats: dict = {}
    for t, bs in blocks.items():
        tgt = index.get(t + 1, {})
        ents = {}
        for si, b in enumerate(bs):
            j, F = b.key
            # internal: add a vertex to F
            for l in range(1, n + 1):
                bit = 1 << (l - 1)
                if F & bit:
                    continue
                ti = tgt.get((j, F | bit))
                if ti is None:
                    continue
                m = C.term(j).map(F, l)
                if alpha(l, F) % 2:
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
            # cross: along the differential of C
            ti = tgt.get((j + 1, F))
            if ti is not None:
                m = C.diff(j).comp(F)
                if t % 2:
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
        if ents:
            dmats[t] = ents
    return BlockComplex(n, fld, blocks, dmats)


# -- Hom(-, omega[n]) on free complexes -----------------------------------------------


def hom_to_omega(P: BlockComplex) -> BlockComplex:
    """Hom(P, omega[n]) for a complex of frees: degree i repackages the
    blocks of P at degree -i-n with complemented subsets; differentials
    are transposed with the Hom-complex sign (-1)^i."""
    n, fld = P.n, P.field
    for bs in P.blocks.values():
        for b in bs:
            if b.kind != FREE:
                raise InvalidInputError("hom_to_omega needs a complex of frees")
    blocks = {}
    for t, bs in P.blocks.items():
        blocks[-t - n] = tuple(
            Block(FREE, complement(b.subset, n), b.vdim, b.key) for b in bs
        )
    dmats: dict = {}
    for t, ents in P.dmats.items():
        # P differential t -> t+1 gives result differential at i = -t-1-n
        i = -t - 1 - n
        out = {(si, ti): m.transpose() for (ti, si), m in ents.items()}
        if i % 2:
            out = {k: -m for k, m in out.items()}
        if out:
            dmats[i] = out
    return BlockComplex(n, fld, blocks, dmats)


# -- the DADADA sign isomorphism ---------------------------------------------------


def _dadada_sides(C: SqComplex):
    side1 = hom_to_omega(functorF(C))
    side2 = functorF(alexander_cx(C)).translate(2 * C.n)
    return side1, side2


def _dadada_sign(key, n: int) -> int:
    """(-1)-exponent of the comparison scalar on the block keyed (j, F)."""
    j, F = key
    full = (1 << n) - 1
    e = alpha_pair(F, full) + beta_sign(popcount(F) + j) + popcount(F) * n + j
    return -1 if e % 2 else 1


def dadada_map(C: SqComplex) -> ChainMap:
    """The explicit isomorphism Hom(F(C), omega[n]) -> T^{2n} F(A(C)).

    Blockwise multiplication by (-1)^{alpha(F,[n]) + beta(|F|+j) + |F|n + j}
    on the summand keyed (j, F); commutation with the differentials is
    asserted exactly and a failure is a hard (sign-convention) error.
    """
    n = C.n
    side1, side2 = _dadada_sides(C)
    # key on side2 corresponding to (j, F) on side1 is (-j, F^c)
    def mate(key):
        j, F = key
        return (-j, complement(F, n))

    degs = sorted(set(side1.degrees()) | set(side2.degrees()))
    for t in degs:
        b1 = {b.key: b for b in side1.blocks_at(t)}
        b2 = {b.key: b for b in side2.blocks_at(t)}
        if {mate(k) for k in b1} != set(b2):
            raise InternalCheckError("DADADA sides have mismatched summands")
        for k, b in b1.items():
            o = b2[mate(k)]
            if (b.subset, b.vdim) != (o.subset, o.vdim):
                raise InternalCheckError("DADADA summand shapes disagree")
    # exact commutation, checked block-by-block
    for t in degs:
        i1 = _block_index(side1.blocks_at(t))
        i1n = _block_index(side1.blocks_at(t + 1))
        bs2 = side2.blocks_at(t)
        bs2n = side2.blocks_at(t + 1)
        i2 = _block_index(bs2)
        i2n = _block_index(bs2n)
        e1 = side1.dmats.get(t, {})
        e2 = side2.dmats.get(t, {})
        pairs = set()
        for (ti, si) in e1:
            pairs.add((side1.blocks_at(t + 1)[ti].key, side1.blocks_at(t)[si].key))
        for (ti, si) in e2:
            pairs.add((bs2n[ti].key, bs2[si].key))
        for tk2, sk2 in list(pairs):
            # normalize pair to side1 keys
            tk = tk2 if tk2 in i1n else mate(tk2)
            sk = sk2 if sk2 in i1 else mate(sk2)
            m1 = e1.get((i1n[tk], i1[sk]))
            m2 = e2.get((i2n[mate(tk)], i2[mate(sk)]))
            zero = Matrix.zeros(
                C.field, side1.blocks_at(t + 1)[i1n[tk]].vdim, side1.blocks_at(t)[i1[sk]].vdim
            )
            m1 = m1 if m1 is not None else zero
            m2 = m2 if m2 is not None else zero
            lhs = m1.scale(C.field.coerce(_dadada_sign(tk, n)))
            rhs = m2.scale(C.field.coerce(_dadada_sign(sk, n)))
            if lhs != rhs:
                raise InternalCheckError(
                    f"DADADA sign map fails to commute at degree {t}, "
                    f"blocks {sk} -> {tk}"
                )
    return _block_sign_chainmap(side1, side2, mate, lambda k: _dadada_sign(k, n))


def _block_sign_chainmap(side1: BlockComplex, side2: BlockComplex, mate, sign) -> ChainMap:
    """Expand a keyed block bijection with per-block scalars into a ChainMap."""
    n, fld = side1.n, side1.field
    s1 = side1.to_sqcomplex()
    s2 = side2.to_sqcomplex()
    comps = {}
    for t in sorted(set(side1.blocks) | set(side2.blocks)):
        b1 = side1.blocks_at(t)
        b2 = side2.blocks_at(t)
        pos2 = _block_index(b2)
        src = s1.term(t)
        tgt = s2.term(t)
        mats = []
        for H in subsets(n):
            rows, cols = tgt.dims[H], src.dims[H]
            z = fld.zero()
            flat = [z] * (rows * cols)
            offs1 = _offsets(b1, H)
            offs2 = _offsets(b2, H)
            for i, b in enumerate(b1):
                if offs1[i] is None:
                    continue
                jdx = pos2[mate(b.key)]
                if offs2[jdx] is None:
                    continue
                c = fld.coerce(sign(b.key))
                for r in range(b.vdim):
                    flat[(offs2[jdx] + r) * cols + offs1[i] + r] = c
            mats.append(Matrix(fld, rows, cols, tuple(flat)))
        comps[t] = SqHom(src, tgt, tuple(mats))
    cm = ChainMap(s1, s2, comps)
    cm.validate()
    return cm


# -- exterior side: sign twists, L, and DF ----------------------------------------------


@dataclass(frozen=True)
class SqEModule:
    """Module over the exterior face algebra: component at degree -F per
    subset, with anticommuting actions e_i: N_{-F} -> N_{-(F u i)}."""

    n: int
    field: Field
    dims: tuple
    emaps: dict  # (F, i) -> Matrix

    def emap(self, F: int, i: int) -> Matrix:
        G = F | (1 << (i - 1))
        m = self.emaps.get((F, i))
        if m is None:
            return Matrix.zeros(self.field, self.dims[G], self.dims[F])
        return m

    def validate(self) -> None:
        for F in subsets(self.n):
            if not self.dims[F]:
                continue
            out = [v for v in range(1, self.n + 1) if not F & (1 << (v - 1))]
            for ai, i in enumerate(out):
                for j in out[ai + 1 :]:
                    lhs = self.emap(F | (1 << (i - 1)), j) @ self.emap(F, i)
                    rhs = self.emap(F | (1 << (j - 1)), i) @ self.emap(F, j)
                    if not (lhs + rhs).is_zero:
                        raise InvalidInputError(
                            f"e-actions fail to anticommute at {F} with e_{i}, e_{j}"
                        )


@dataclass(frozen=True)
class EComplex:
    n: int
    field: Field
    terms: dict  # degree -> SqEModule
    diffs: dict  # degree -> tuple of Matrix per subset (N^j_{-F} -> N^{j+1}_{-F})

    def term(self, j: int) -> SqEModule:
        m = self.terms.get(j)
        if m is not None:
            return m
        z = (0,) * (1 << self.n)
        return SqEModule(self.n, self.field, z, {})

    def diff_comp(self, j: int, F: int) -> Matrix:
        d = self.diffs.get(j)
        if d is None:
            return Matrix.zeros(self.field, self.term(j + 1).dims[F], self.term(j).dims[F])
        return d[F]

    def degrees(self) -> list[int]:
        return sorted(j for j, m in self.terms.items() if any(m.dims))


def to_exterior(M: SqModule) -> SqEModule:
    """Sign twist S -> E: e-action at (F, i) is (-1)^{alpha(i,F)} x_i."""
    emaps = {}
    for (F, i), m in M.maps.items():
        emaps[(F, i)] = -m if alpha(i, F) % 2 else m
    return SqEModule(M.n, M.field, M.dims, emaps)


def to_symmetric(N: SqEModule) -> SqModule:
    maps = {}
    for (F, i), m in N.emaps.items():
        maps[(F, i)] = -m if alpha(i, F) % 2 else m
    return SqModule(N.n, N.field, N.dims, maps)


def to_exterior_cx(C: SqComplex) -> EComplex:
    terms = {j: to_exterior(m) for j, m in C.terms.items()}
    diffs = {
        j: tuple(d.comp(F) for F in subsets(C.n)) for j, d in C.diffs.items()
    }
    return EComplex(C.n, C.field, terms, diffs)


def bgg_L(N: EComplex) -> BlockComplex:
    """The functor L on squarefree exterior complexes, rendered blockwise:
    (j, F) contributes S(-F^c)^{dim N^j_{-F}} in degree j + |F|; the
    internal component is the e-action, the cross component (-1)^t delta."""
    n, fld = N.n, N.field
    degs = N.degrees()
    if not degs:
        return BlockComplex(n, fld, {})
    blocks: dict = {}
    for j in range(degs[0], degs[-1] + 1):
        m = N.term(j)
        for F in subsets(n):
            if m.dims[F]:
                t = popcount(F) + j
                blocks.setdefault(t, []).append(
                    Block(FREE, complement(F, n), m.dims[F], key=(j, F))
                )
    for t in blocks:
        blocks[t].sort(key=lambda b: b.key)
    blocks = {t: tuple(bs) for t, bs in blocks.items()}
    index = {t: _block_index(bs) for t, bs in blocks.items()}
    dmats: dict = {}
    for t, bs in blocks.items():
        tgt = index.get(t + 1, {})
        ents = {}
        for si, b in enumerate(bs):
            j, F = b.key
            for l in range(1, n + 1):
                bit = 1 << (l - 1)
                if F & bit:
                    continue
                ti = tgt.get((j, F | bit))
                if ti is None:
                    continue
                m = N.term(j).emap(F, l)
                if not m.is_zero:
                    ents[(ti, si)] = m
            ti = tgt.get((j + 1, F))
            if ti is not None:
                m = N.diff_comp(j, F)
                if t % 2:
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
        if ents:
            dmats[t] = ents
    return BlockComplex(n, fld, blocks, dmats)


def koszul_DF(C: SqComplex):
    """The Koszul-dual composite DF rendered on the symmetric side, plus
    the per-degree comparison (-1)^{beta(t-1)} onto functorF(C).

    Block (j, F) sits in degree t = j + |F| as S(-F^c)^{dim C^j_F};
    the internal component carries (-1)^{t + alpha(l,F)} x_l and the
    cross component is the plain differential of C.
    """
    n, fld = C.n, C.field
    degs = C.degrees()
    if not degs:
        empty = BlockComplex(n, fld, {})
        return empty, _block_sign_chainmap(empty, functorF(C), lambda k: k, lambda k: 1)
    blocks: dict = {}
    for j in range(degs[0], degs[-1] + 1):
        m = C.term(j)
        for F in subsets(n):
            if m.dims[F]:
                t = popcount(F) + j
                blocks.setdefault(t, []).append(
                    Block(FREE, complement(F, n), m.dims[F], key=(j, F))
                )
    for t in blocks:
        blocks[t].sort(key=lambda b: b.key)
    blocks = {t: tuple(bs) for t, bs in blocks.items()}
    index = {t: _block_index(bs) for t, bs in blocks.items()}
    dmats: dict = {}
    for t, bs in blocks.items():
        tgt = index.get(t + 1, {})
        ents = {}
        for si, b in enumerate(bs):
            j, F = b.key
            for l in range(1, n + 1):
                bit = 1 << (l - 1)
                if F & bit:
                    continue
                ti = tgt.get((j, F | bit))
                if ti is None:
                    continue
                m = C.term(j).map(F, l)
                if (t + alpha(l, F)) % 2:
                    m = -m
                if not m.is_zero:
                    ents[(ti, si)] = m
            ti = tgt.get((j + 1, F))
            if ti is not None:
                m = C.diff(j).comp(F)
                if not m.is_zero:
                    ents[(ti, si)] = m
        if ents:
            dmats[t] = ents
    df = BlockComplex(n, fld, blocks, dmats)
    ff = functorF(C)

    # exact commutation of the comparison sign, block by block
    for t in sorted(set(df.blocks) | set(ff.blocks)):
        if [
            (b.kind, b.subset, b.vdim, b.key) for b in df.blocks_at(t)
        ] != [(b.kind, b.subset, b.vdim, b.key) for b in ff.blocks_at(t)]:
            raise InternalCheckError("DF and F summands disagree")
        e1 = df.dmats.get(t, {})
        e2 = ff.dmats.get(t, {})
        s_src = -1 if beta_sign(t - 1) else 1
        s_tgt = -1 if beta_sign(t) else 1
        for k in set(e1) | set(e2):
            b_t = df.blocks_at(t + 1)[k[0]]
            b_s = df.blocks_at(t)[k[1]]
            zero = Matrix.zeros(fld, b_t.vdim, b_s.vdim)
            m1 = e1.get(k, zero)
            m2 = e2.get(k, zero)
            if m1.scale(fld.coerce(s_tgt)) != m2.scale(fld.coerce(s_src)):
                raise InternalCheckError(
                    f"DF comparison sign fails to commute at degree {t}"
                )
    cm = _block_sign_chainmap(
        df, ff, lambda k: k, lambda k: -1 if beta_sign(popcount(k[1]) + k[0] - 1) else 1
    )
    return df, cm

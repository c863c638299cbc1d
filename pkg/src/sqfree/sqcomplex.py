"""Bounded cochain complexes of squarefree modules.

Cohomology is computed subset-wise as kernel/image subquotients with
induced structure maps; minimal projective resolutions come out as
labeled block complexes of frees so that Betti numbers and linear
strands can be read off the labels instead of re-recognizing summands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import exactla, sqmod
from .blocks import FREE, Block, BlockComplex
from .boolcomb import popcount, subsets
from .errors import InternalCheckError, InvalidInputError, ParseError
from .exactla import Matrix
from .field import Field
from .sqmod import SqHom, SqModule


@dataclass(frozen=True)
class SqComplex:
    n: int
    field: Field
    terms: dict  # degree -> SqModule
    diffs: dict  # degree -> SqHom (term t -> term t+1)

    # -- access -----------------------------------------------------------
    def term(self, t: int) -> SqModule:
        m = self.terms.get(t)
        return m if m is not None else sqmod.zero_module(self.n, self.field)

    def diff(self, t: int) -> SqHom:
        d = self.diffs.get(t)
        return d if d is not None else sqmod.zero_hom(self.term(t), self.term(t + 1))

    def degrees(self) -> list[int]:
        return sorted(t for t, m in self.terms.items() if not m.is_zero)

    @property
    def is_zero(self) -> bool:
        return not self.degrees()

    def validate(self) -> None:
        for t, d in self.diffs.items():
            if d.source.dims != self.term(t).dims or d.target.dims != self.term(t + 1).dims:
                raise InvalidInputError(f"differential at degree {t} has wrong endpoints")
            d.validate()
            nxt = self.diffs.get(t + 1)
            if nxt is not None and not (nxt @ d).is_zero:
                raise InvalidInputError(f"differential does not square to zero at {t}")

    # -- constructions -----------------------------------------------------
    @staticmethod
    def from_module(M: SqModule, deg: int = 0) -> "SqComplex":
        return SqComplex(M.n, M.field, {deg: M}, {})

    def translate(self, p: int) -> "SqComplex":
        """C[p]^t = C^{t+p} with differential scaled by (-1)^p."""
        terms = {t - p: m for t, m in self.terms.items()}
        if p % 2 == 0:
            diffs = {t - p: d for t, d in self.diffs.items()}
        else:
            diffs = {t - p: -d for t, d in self.diffs.items()}
        return SqComplex(self.n, self.field, terms, diffs)

    # -- cohomology ----------------------------------------------------------
    def cohomology(self, t: int) -> SqModule:
        cur = self.term(t)
        dout = self.diff(t)
        din = self.diff(t - 1)
        kers = [exactla.kernel_basis(dout.comp(F)) for F in subsets(self.n)]
        imgs = [exactla.image_basis(din.comp(F)) for F in subsets(self.n)]
        dims = tuple(
            len(exactla.complement_pivots(imgs[F], kers[F])) for F in subsets(self.n)
        )
        maps = {}
        for F in subsets(self.n):
            if not dims[F]:
                continue
            for v in range(1, self.n + 1):
                bit = 1 << (v - 1)
                if F & bit:
                    continue
                G = F | bit
                if not dims[G]:
                    continue
                m = exactla.induced_map(kers[F], imgs[F], cur.map(F, v), kers[G], imgs[G])
                if not m.is_zero:
                    maps[(F, v)] = m
        return SqModule(self.n, self.field, dims, maps)

    def cohomology_dims(self) -> dict:
        """{degree: dims tuple} over degrees where cohomology is nonzero."""
        degs = self.degrees()
        out = {}
        if not degs:
            return out
        for t in range(degs[0], degs[-1] + 1):
            h = self.cohomology(t)
            if not h.is_zero:
                out[t] = h.dims
        return out

    def is_exact(self) -> bool:
        return not self.cohomology_dims()

    # -- JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.name(),
            "terms": {str(t): m.to_json() for t, m in sorted(self.terms.items())},
            "diffs": {
                str(t): {
                    str(F): [[self.field.format(x) for x in c.row(r)] for r in range(c.rows)]
                    for F in subsets(self.n)
                    if not (c := d.comp(F)).is_zero
                }
                for t, d in sorted(self.diffs.items())
            },
        }

    @staticmethod
    def from_json(data) -> "SqComplex":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"bad complex JSON: {e}") from None
        try:
            n = int(data["n"])
            fld = Field.from_name(data.get("field", "q"))
            terms = {int(t): SqModule.from_json(m) for t, m in data["terms"].items()}
            diffs = {}
            for t, comps in data.get("diffs", {}).items():
                t = int(t)
                src = terms[t]
                tgt = terms.get(t + 1, sqmod.zero_module(n, fld))
                cc = {}
                for key, rows in comps.items():
                    F = int(key)
                    cc[F] = Matrix.from_rows(
                        fld, [[fld.parse(str(x)) for x in r] for r in rows]
                    )
                diffs[t] = sqmod.hom_from_components(src, tgt, cc)
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad complex JSON: {e}") from None
        cx = SqComplex(n, fld, terms, diffs)
        cx.validate()
        return cx


@dataclass(frozen=True)
class ChainMap:
    source: SqComplex
    target: SqComplex
    comps: dict  # degree -> SqHom

    def comp(self, t: int) -> SqHom:
        h = self.comps.get(t)
        if h is not None:
            return h
        return sqmod.zero_hom(self.source.term(t), self.target.term(t))

    def validate(self) -> None:
        degs = set(self.source.degrees()) | set(self.target.degrees()) | set(self.comps)
        for t in list(degs):
            lhs = self.target.diff(t) @ self.comp(t)
            rhs = self.comp(t + 1) @ self.source.diff(t)
            if not (lhs + (-rhs)).is_zero:
                raise InvalidInputError(f"chain map does not commute at degree {t}")


def cone(f: ChainMap) -> SqComplex:
    """Mapping cone: term t = source^{t+1} + target^t, standard differential."""
    S, T = f.source, f.target
    n, fld = S.n, S.field
    degs = sorted(set(d - 1 for d in S.degrees()) | set(T.degrees()))
    if not degs:
        return SqComplex(n, fld, {}, {})
    terms = {}
    for t in range(degs[0], degs[-1] + 1):
        terms[t] = sqmod.direct_sum([S.term(t + 1), T.term(t)])
    diffs = {}
    for t in range(degs[0], degs[-1]):
        src, tgt = terms[t], terms[t + 1]
        a = -S.diff(t + 1)  # S^{t+1} -> S^{t+2}
        b = f.comp(t + 1)  # S^{t+1} -> T^{t+1}
        c = T.diff(t)  # T^t -> T^{t+1}
        comps = []
        for F in subsets(n):
            top = a.comp(F).hstack(Matrix.zeros(fld, a.comp(F).rows, T.term(t).dims[F]))
            bot = b.comp(F).hstack(c.comp(F))
            rows = []
            rows.extend(top.to_lists())
            rows.extend(bot.to_lists())
            comps.append(
                Matrix(
                    fld,
                    top.rows + bot.rows,
                    top.cols,
                    tuple(x for r in rows for x in r),
                )
            )
        diffs[t] = SqHom(src, tgt, tuple(comps))
    return SqComplex(n, fld, terms, diffs)


def is_quasi_iso(f: ChainMap) -> bool:
    return cone(f).is_exact()


# -- resolutions ---------------------------------------------------------------


def _minimal_generators(M: SqModule):
    """Per subset, the indices of a standard-vector complement of the span of
    everything reachable from lower degrees."""
    out = {}
    for F in subsets(M.n):
        if not M.dims[F]:
            continue
        images = []
        for v in range(1, M.n + 1):
            bit = 1 << (v - 1)
            if F & bit and M.dims[F & ~bit]:
                images.append(M.map(F & ~bit, v))
        big = exactla.hstack_all(M.field, M.dims[F], images)
        sel = exactla.complement_pivots(big, Matrix.identity(M.field, M.dims[F]))
        if sel:
            out[F] = sel
    return out


def _free_cover(M: SqModule):
    """Blocks S(-F)^{#gens at F} (F ascending) and the surjection onto M."""
    gens = _minimal_generators(M)
    bs = tuple(Block(FREE, F, len(sel)) for F, sel in sorted(gens.items()))
    cover = BlockComplex(M.n, M.field, {0: bs})
    P = cover.term_module(0)
    comps = []
    for H in subsets(M.n):
        cols = []
        for F, sel in sorted(gens.items()):
            if H & F == F:
                cols.append(M.mult_path(F, H).select_columns(sel))
        comps.append(exactla.hstack_all(M.field, M.dims[H], cols))
    return bs, P, SqHom(P, M, tuple(comps))


def minimal_projective_resolution(M: SqModule):
    """Minimal free resolution as a block complex in degrees -len..0,
    plus the augmentation chain map onto M."""
    blocks = {}
    dmats = {}
    bs, P0, pi0 = _free_cover(M)
    blocks[0] = bs
    prev_blocks, prev_mod, incl_pi = bs, P0, None
    K, incl = sqmod.kernel(pi0)
    step = 0
    while not K.is_zero:
        step += 1
        if step > M.n + 1:
            raise InternalCheckError("resolution exceeded the length bound")
        bs, P, pi = _free_cover(K)
        blocks[-step] = bs
        d = incl @ pi  # P -> previous free module
        dmats[-step] = _extract_block_coeffs(bs, prev_blocks, d)
        prev_blocks, prev_mod = bs, P
        K, incl = sqmod.kernel(pi)
    res = BlockComplex(M.n, M.field, blocks, dmats)
    aug = ChainMap(
        res.to_sqcomplex(), SqComplex.from_module(M), {0: pi0}
    )
    return res, aug


def _extract_block_coeffs(src_blocks, tgt_blocks, d: SqHom):
    """Coefficients of a degree-0 map between sums of frees, read off at each
    source generator degree (where the free bases are the natural ones)."""
    from .blocks import _offsets

    out = {}
    for si, sb in enumerate(src_blocks):
        H = sb.subset
        comp = d.comp(H)
        soff = _offsets(src_blocks, H)[si]
        toffs = _offsets(tgt_blocks, H)
        for ti, tb in enumerate(tgt_blocks):
            if toffs[ti] is None:
                continue
            rows = []
            for r in range(tb.vdim):
                row = comp.row(toffs[ti] + r)
                rows.append(row[soff : soff + sb.vdim])
            m = Matrix(
                d.source.field, tb.vdim, sb.vdim, tuple(x for r in rows for x in r)
            )
            if not m.is_zero:
                out[(ti, si)] = m
    return out


def minimal_injective_resolution(M: SqModule):
    """Alexander dual of the minimal free resolution of the Alexander dual:
    a block complex of prime quotients in degrees 0..len."""
    from .dualities import alexander

    res, _ = minimal_projective_resolution(alexander(M))
    return res.alexander()


# -- Betti / Bass numbers ---------------------------------------------------------


def betti(C: SqComplex, i: int, F: int) -> int:
    """beta_i(F, C) through Ext of the Alexander dual (no resolution needed)."""
    from .dualities import alexander_cx
    from .invariants import ext

    n = C.n
    return ext(alexander_cx(C), popcount(F) - i).dims[(1 << n) - 1 & ~F]


def bass(C: SqComplex, i: int, F: int) -> int:
    """mubar^i(F, C) = dim Ext^{n-|F|-i}(C, omega)_F."""
    from .invariants import ext

    return ext(C, C.n - popcount(F) - i).dims[F]


def bass_maximal(C: SqComplex, i: int, F: int) -> int:
    """Bass number at the maximal ideal: beta_i(F, D(C))."""
    from .dualities import dualizeD

    return betti(dualizeD(C).to_sqcomplex(), i, F)


def betti_table(M: SqModule) -> dict:
    """{(i, F): multiplicity} read off the minimal free resolution."""
    res, _ = minimal_projective_resolution(M)
    out = {}
    for t, bs in res.blocks.items():
        for b in bs:
            out[(-t, b.subset)] = out.get((-t, b.subset), 0) + b.vdim
    return out


def bass_table(M: SqModule) -> dict:
    """{(i, F): multiplicity} read off the minimal injective resolution."""
    inj = minimal_injective_resolution(M)
    out = {}
    for t, bs in inj.blocks.items():
        for b in bs:
            out[(t, b.subset)] = out.get((t, b.subset), 0) + b.vdim
    return out


# -- linear strands ------------------------------------------------------------------


def linear_strand(P: BlockComplex, i: int) -> BlockComplex:
    """Summands S(-F) with |F| = i - (cohomological degree), with the linear
    part of the differential; input must be a minimal complex of frees."""
    for t, ents in P.dmats.items():
        sb, tb = P.blocks_at(t), P.blocks_at(t + 1)
        for (ti, si), m in ents.items():
            if not m.is_zero and sb[si].subset == tb[ti].subset:
                raise InvalidInputError("linear strand needs a minimal complex")
    for bs in P.blocks.values():
        for b in bs:
            if b.kind != FREE:
                raise InvalidInputError("linear strand needs a complex of frees")
    blocks = {}
    keep = {}
    for t, bs in P.blocks.items():
        sel = [j for j, b in enumerate(bs) if popcount(b.subset) == i - t]
        if sel:
            blocks[t] = tuple(bs[j] for j in sel)
            keep[t] = {j: pos for pos, j in enumerate(sel)}
    dmats = {}
    for t, ents in P.dmats.items():
        if t not in keep or (t + 1) not in keep:
            continue
        sub = {}
        for (ti, si), m in ents.items():
            if si in keep[t] and ti in keep[t + 1]:
                sub[(keep[t + 1][ti], keep[t][si])] = m
        if sub:
            dmats[t] = sub
    return BlockComplex(P.n, P.field, blocks, dmats)

"""Complexes built from labeled standard summands.

A term is a direct sum of blocks, each a power of a free module S(-F)
or of a prime quotient S/P_F, tagged with an arbitrary key so that
sign maps and strand extraction can address summands.  Differentials
are stored as coefficient matrices between blocks: every nonzero map
S(-F) -> S(-G) (needs F containing G) or S/P_F -> S/P_G (same
condition) is a scalar multiple of the natural one, so a v x w block
of scalars captures the whole map between block powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .boolcomb import subset_label, subsets
from .errors import InternalCheckError
from .exactla import Matrix
from .field import Field
from .sqmod import SqHom, SqModule

FREE = "free"
QUOT = "quot"


@dataclass(frozen=True)
class Block:
    kind: str  # FREE or QUOT
    subset: int
    vdim: int
    key: object = None

    def active(self, H: int) -> bool:
        """Whether the underlying module is nonzero in squarefree degree H."""
        if self.kind == FREE:
            return H & self.subset == self.subset
        return H & ~self.subset == 0

    def maps_to(self, other: "Block") -> bool:
        """Whether a nonzero degree-0 map to ``other`` exists (both kinds
        require the source subset to contain the target subset)."""
        return self.kind == other.kind and self.subset & other.subset == other.subset


@dataclass(frozen=True)
class BlockComplex:
    n: int
    field: Field
    blocks: dict  # degree -> tuple of Block
    dmats: dict = dc_field(default_factory=dict)  # degree -> {(tgt_idx, src_idx): Matrix}

    # -- bookkeeping ------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted(t for t, bs in self.blocks.items() if bs)

    def blocks_at(self, t: int):
        return self.blocks.get(t, ())

    def dmat(self, t: int, ti: int, si: int) -> Matrix | None:
        return self.dmats.get(t, {}).get((ti, si))

    def multiplicity(self, t: int, kind: str, subset: int) -> int:
        return sum(b.vdim for b in self.blocks_at(t) if b.kind == kind and b.subset == subset)

    @property
    def is_zero(self) -> bool:
        return not any(self.blocks.values())

    # -- expansion to honest modules ---------------------------------------
    def term_module(self, t: int) -> SqModule:
        bs = self.blocks_at(t)
        dims = []
        for H in subsets(self.n):
            dims.append(sum(b.vdim for b in bs if b.active(H)))
        maps = {}
        for H in subsets(self.n):
            if not dims[H]:
                continue
            for v in range(1, self.n + 1):
                bit = 1 << (v - 1)
                if H & bit:
                    continue
                G = H | bit
                if not dims[G]:
                    continue
                m = self._structure_matrix(bs, H, G)
                if not m.is_zero:
                    maps[(H, v)] = m
        return SqModule(self.n, self.field, tuple(dims), maps)

    def _structure_matrix(self, bs, H: int, G: int) -> Matrix:
        # identity on every block alive at both H and G, zero elsewhere
        rows = sum(b.vdim for b in bs if b.active(G))
        cols = sum(b.vdim for b in bs if b.active(H))
        z, o = self.field.zero(), self.field.one()
        flat = [z] * (rows * cols)
        r0 = c0 = 0
        for b in bs:
            ag, ah = b.active(G), b.active(H)
            if ag and ah:
                for i in range(b.vdim):
                    flat[(r0 + i) * cols + c0 + i] = o
            if ag:
                r0 += b.vdim
            if ah:
                c0 += b.vdim
        return Matrix(self.field, rows, cols, tuple(flat))

    def diff_hom(self, t: int) -> SqHom:
        src = self.term_module(t)
        tgt = self.term_module(t + 1)
        sb, tb = self.blocks_at(t), self.blocks_at(t + 1)
        ents = self.dmats.get(t, {})
        comps = []
        for H in subsets(self.n):
            rows, cols = tgt.dims[H], src.dims[H]
            z = self.field.zero()
            flat = [z] * (rows * cols)
            roffs = _offsets(tb, H)
            coffs = _offsets(sb, H)
            for (ti, si), m in ents.items():
                ro, co = roffs[ti], coffs[si]
                if ro is None or co is None:
                    continue
                for r in range(m.rows):
                    base = (ro + r) * cols + co
                    mrow = m.row(r)
                    for c in range(m.cols):
                        flat[base + c] = mrow[c]
            comps.append(Matrix(self.field, rows, cols, tuple(flat)))
        return SqHom(src, tgt, tuple(comps))

    def to_sqcomplex(self):
        from .sqcomplex import SqComplex
        from . import sqmod

        degs = self.degrees()
        if not degs:
            return SqComplex(self.n, self.field, {}, {})
        terms = {t: self.term_module(t) for t in range(degs[0], degs[-1] + 1)}
        diffs = {}
        for t in range(degs[0], degs[-1]):
            diffs[t] = self.diff_hom(t) if self.dmats.get(t) else None
        out_diffs = {}
        for t, h in diffs.items():
            if h is None:
                h = sqmod.zero_hom(terms[t], terms[t + 1])
            out_diffs[t] = h
        return SqComplex(self.n, self.field, terms, out_diffs)

    # -- validation --------------------------------------------------------
    def validate(self) -> None:
        for t, ents in self.dmats.items():
            sb, tb = self.blocks_at(t), self.blocks_at(t + 1)
            for (ti, si), m in ents.items():
                src, tgt = sb[si], tb[ti]
                if (m.rows, m.cols) != (tgt.vdim, src.vdim):
                    raise InternalCheckError(
                        f"coefficient block at degree {t} has wrong shape"
                    )
                if not m.is_zero and not src.maps_to(tgt):
                    raise InternalCheckError(
                        f"illegal block map {src.kind} {subset_label(src.subset)} -> "
                        f"{tgt.kind} {subset_label(tgt.subset)} at degree {t}"
                    )
        for t in list(self.dmats):
            first = self.dmats.get(t, {})
            second = self.dmats.get(t + 1, {})
            if not first or not second:
                continue
            acc: dict = {}
            for (mi, si), m1 in first.items():
                for (ti, mj), m2 in second.items():
                    if mj != mi:
                        continue
                    prod = m2 @ m1
                    prev = acc.get((ti, si))
                    acc[(ti, si)] = prod if prev is None else prev + prod
            for (ti, si), m in acc.items():
                if not m.is_zero:
                    raise InternalCheckError(
                        f"block differential does not square to zero at degree {t}"
                    )

    # -- operations ----------------------------------------------------------
    def translate(self, p: int) -> "BlockComplex":
        """Shift: result degree t holds the old degree t+p, sign (-1)^p."""
        blocks = {t - p: bs for t, bs in self.blocks.items()}
        sign = 1 if p % 2 == 0 else -1
        dmats = {}
        for t, ents in self.dmats.items():
            dmats[t - p] = {
                k: (m if sign == 1 else -m) for k, m in ents.items()
            }
        return BlockComplex(self.n, self.field, blocks, dmats)

    def alexander(self) -> "BlockComplex":
        """Alexander duality: degree negated, subsets complemented, kinds
        swapped, coefficients transposed, no extra signs."""
        full = (1 << self.n) - 1
        blocks = {}
        for t, bs in self.blocks.items():
            blocks[-t] = tuple(
                Block(QUOT if b.kind == FREE else FREE, full & ~b.subset, b.vdim, b.key)
                for b in bs
            )
        dmats = {}
        for t, ents in self.dmats.items():
            # old d: t -> t+1 dualizes to new degree -t-1 -> -t
            dmats[-t - 1] = {(si, ti): m.transpose() for (ti, si), m in ents.items()}
        return BlockComplex(self.n, self.field, blocks, dmats)

    def structurally_equal(self, other: "BlockComplex", check_keys: bool = False) -> bool:
        """Literal equality of terms and coefficient matrices."""
        if (self.n, self.field) != (other.n, other.field):
            return False
        degs = set(self.degrees()) | set(other.degrees())
        for t in degs:
            a, b = self.blocks_at(t), other.blocks_at(t)
            if len(a) != len(b):
                return False
            for x, y in zip(a, b):
                if (x.kind, x.subset, x.vdim) != (y.kind, y.subset, y.vdim):
                    return False
                if check_keys and x.key != y.key:
                    return False
            ea = {k: m for k, m in self.dmats.get(t, {}).items() if not m.is_zero}
            eb = {k: m for k, m in other.dmats.get(t, {}).items() if not m.is_zero}
            if ea != eb:
                return False
        return True

    def cohomology_dims(self):
        return self.to_sqcomplex().cohomology_dims()


def _offsets(bs, H: int):
    """Offset of each block inside the degree-H component; None if inactive."""
    out = []
    off = 0
    for b in bs:
        if b.active(H):
            out.append(off)
            off += b.vdim
        else:
            out.append(None)
    return out

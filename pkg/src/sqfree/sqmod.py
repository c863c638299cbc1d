"""Squarefree modules as commuting-cube representations of the subset lattice.

An object assigns a finite-dimensional space to every subset F of [n]
plus a matrix for each multiplication x_i : M_F -> M_{F u {i}}, i not in
F, with all squares commuting.  Zero-dimensional components never store
matrices; accessors hand back canonical empty ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from . import exactla
from .boolcomb import members, subset_label, subsets
from .errors import InvalidInputError, ParseError
from .exactla import Matrix
from .field import Field


def _bit(i: int) -> int:
    return 1 << (i - 1)


@dataclass(frozen=True)
class SqModule:
    n: int
    field: Field
    dims: tuple  # length 2**n
    maps: dict = dc_field(default_factory=dict)  # (F, i) -> Matrix, i not in F

    def __post_init__(self):
        assert len(self.dims) == 1 << self.n

    # -- access ---------------------------------------------------------
    def dim(self, F: int) -> int:
        return self.dims[F]

    def map(self, F: int, i: int) -> Matrix:
        """Multiplication by x_i as a matrix M_F -> M_{F u {i}}."""
        assert not F & _bit(i)
        G = F | _bit(i)
        m = self.maps.get((F, i))
        if m is None:
            return Matrix.zeros(self.field, self.dims[G], self.dims[F])
        return m

    def mult_path(self, F: int, H: int) -> Matrix:
        """Multiplication by the squarefree monomial with support H \\ F.

        Composes single steps adding vertices in ascending order; any
        order gives the same map by commutativity.
        """
        assert F & H == F
        m = Matrix.identity(self.field, self.dims[F])
        cur = F
        for v in members(H & ~F):
            m = self.map(cur, v) @ m
            cur |= _bit(v)
        return m

    @property
    def is_zero(self) -> bool:
        return not any(self.dims)

    def total_dim(self) -> int:
        return sum(self.dims)

    def dims_dict(self) -> dict:
        return {F: d for F, d in enumerate(self.dims) if d}

    # -- validation -------------------------------------------------------
    def validate(self) -> None:
        full = 1 << self.n
        for (F, i), m in self.maps.items():
            if not 0 <= F < full or F & _bit(i):
                raise InvalidInputError(f"bad map key ({F}, {i})")
            G = F | _bit(i)
            if (m.rows, m.cols) != (self.dims[G], self.dims[F]):
                raise InvalidInputError(
                    f"map ({subset_label(F)}, {i}) has shape {m.rows}x{m.cols}, "
                    f"want {self.dims[G]}x{self.dims[F]}"
                )
        for F in subsets(self.n):
            if not self.dims[F]:
                continue
            out = [v for v in range(1, self.n + 1) if not F & _bit(v)]
            for ai, i in enumerate(out):
                for j in out[ai + 1 :]:
                    lhs = self.map(F | _bit(i), j) @ self.map(F, i)
                    rhs = self.map(F | _bit(j), i) @ self.map(F, j)
                    if lhs != rhs:
                        raise InvalidInputError(
                            f"structure maps do not commute at {subset_label(F)} "
                            f"with x_{i}, x_{j}"
                        )

    # -- JSON -------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.name(),
            "dims": {str(F): d for F, d in enumerate(self.dims) if d},
            "maps": {
                f"{F},{i}": [[self.field.format(x) for x in m.row(r)] for r in range(m.rows)]
                for (F, i), m in sorted(self.maps.items())
                if not m.is_zero
            },
        }

    @staticmethod
    def from_json(data) -> "SqModule":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"bad module JSON: {e}") from None
        try:
            n = int(data["n"])
            fld = Field.from_name(data.get("field", "q"))
            dims = [0] * (1 << n)
            for key, d in data["dims"].items():
                dims[_parse_subset_key(key, n)] = int(d)
            maps = {}
            for key, rows in data.get("maps", {}).items():
                fpart, ipart = key.rsplit(",", 1)
                F = _parse_subset_key(fpart, n)
                i = int(ipart)
                maps[(F, i)] = Matrix.from_rows(fld, [[fld.parse(str(x)) for x in r] for r in rows])
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad module JSON: {e}") from None
        mod = SqModule(n, fld, tuple(dims), maps)
        mod.validate()
        return mod


def _parse_subset_key(key, n: int) -> int:
    """Accept a bitmask int or a sorted vertex list like "[1, 3]"."""
    if isinstance(key, int):
        F = key
    else:
        key = key.strip()
        if key.startswith("["):
            verts = json.loads(key)
            F = 0
            for v in verts:
                F |= _bit(int(v))
        else:
            F = int(key)
    if not 0 <= F < 1 << n:
        raise ParseError(f"subset {key!r} out of range for n={n}")
    return F


# -- constructors ----------------------------------------------------------


def zero_module(n: int, fld: Field) -> SqModule:
    return SqModule(n, fld, (0,) * (1 << n))


def free_module(n: int, F: int, fld: Field) -> SqModule:
    """S(-F): one-dimensional at every G containing F, identities between."""
    dims = tuple(1 if G & F == F else 0 for G in subsets(n))
    one = Matrix.identity(fld, 1)
    maps = {}
    for G in subsets(n):
        if G & F != F:
            continue
        for v in range(1, n + 1):
            if not G & _bit(v):
                maps[(G, v)] = one
    return SqModule(n, fld, dims, maps)


def quotient_prime(n: int, F: int, fld: Field) -> SqModule:
    """S/P_F: one-dimensional at every G inside F."""
    dims = tuple(1 if G & ~F == 0 else 0 for G in subsets(n))
    one = Matrix.identity(fld, 1)
    maps = {}
    for G in subsets(n):
        if G & ~F:
            continue
        for v in range(1, n + 1):
            if not G & _bit(v) and not (G | _bit(v)) & ~F:
                maps[(G, v)] = one
    return SqModule(n, fld, dims, maps)


def simple_module(n: int, F: int, fld: Field) -> SqModule:
    dims = tuple(1 if G == F else 0 for G in subsets(n))
    return SqModule(n, fld, dims)


def stanley_reisner_ring(dc, fld: Field) -> SqModule:
    """S/I_D for a simplicial complex D: one-dimensional exactly on the faces."""
    return _indicator_module(dc.n, dc.faces, member=True, fld=fld)


def stanley_reisner_ideal(dc, fld: Field) -> SqModule:
    """I_D for a simplicial complex D: one-dimensional exactly on the non-faces."""
    return _indicator_module(dc.n, dc.faces, member=False, fld=fld)


def _indicator_module(n: int, faces, member: bool, fld: Field) -> SqModule:
    one = Matrix.identity(fld, 1)
    dims = []
    for G in subsets(n):
        inside = G in faces
        dims.append(1 if inside == member else 0)
    maps = {}
    for G in subsets(n):
        if not dims[G]:
            continue
        for v in range(1, n + 1):
            if not G & _bit(v) and dims[G | _bit(v)]:
                maps[(G, v)] = one
    return SqModule(n, fld, tuple(dims), maps)


def direct_sum(mods) -> SqModule:
    mods = list(mods)
    if not mods:
        raise InvalidInputError("direct sum of nothing (pass zero_module explicitly)")
    n, fld = mods[0].n, mods[0].field
    for m in mods:
        if m.n != n or m.field != fld:
            raise InvalidInputError("direct sum needs matching n and field")
    dims = tuple(sum(m.dims[F] for m in mods) for F in subsets(n))
    maps = {}
    for F in subsets(n):
        for v in range(1, n + 1):
            if F & _bit(v):
                continue
            G = F | _bit(v)
            if not dims[F] or not dims[G]:
                continue
            block = _block_diag(fld, [m.map(F, v) for m in mods])
            if not block.is_zero:
                maps[(F, v)] = block
    return SqModule(n, fld, dims, maps)


def _block_diag(fld: Field, mats) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    z = fld.zero()
    flat = [z] * (rows * cols)
    r0 = c0 = 0
    for m in mats:
        for r in range(m.rows):
            for c in range(m.cols):
                flat[(r0 + r) * cols + c0 + c] = m[r, c]
        r0 += m.rows
        c0 += m.cols
    return Matrix(fld, rows, cols, tuple(flat))


def graded_dim(M: SqModule, a, straight: bool = False) -> int:
    """Dimension of the graded piece at an integer vector.

    Squarefree reading needs a nonnegative vector and looks at the
    support; the straight reading (M as its straight extension) accepts
    any vector and looks at the positive support.
    """
    if len(a) != M.n:
        raise InvalidInputError(f"degree vector has length {len(a)}, want {M.n}")
    if not straight and any(x < 0 for x in a):
        raise InvalidInputError("negative degree needs straight=True")
    F = 0
    for i, x in enumerate(a, start=1):
        if x > 0:
            F |= _bit(i)
    return M.dims[F]


# -- morphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class SqHom:
    source: SqModule
    target: SqModule
    components: tuple  # Matrix per subset

    def __post_init__(self):
        assert len(self.components) == 1 << self.source.n

    def comp(self, F: int) -> Matrix:
        return self.components[F]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def validate(self) -> None:
        S, T = self.source, self.target
        if S.n != T.n or S.field != T.field:
            raise InvalidInputError("hom endpoints live in different categories")
        for F in subsets(S.n):
            c = self.components[F]
            if (c.rows, c.cols) != (T.dims[F], S.dims[F]):
                raise InvalidInputError(f"component at {subset_label(F)} has wrong shape")
        for F in subsets(S.n):
            for v in range(1, S.n + 1):
                if F & _bit(v):
                    continue
                G = F | _bit(v)
                lhs = self.components[G] @ S.map(F, v)
                rhs = T.map(F, v) @ self.components[F]
                if lhs != rhs:
                    raise InvalidInputError(
                        f"hom does not commute with x_{v} at {subset_label(F)}"
                    )

    def __matmul__(self, other: "SqHom") -> "SqHom":
        assert other.target is self.source or other.target == self.source
        return SqHom(
            other.source,
            self.target,
            tuple(a @ b for a, b in zip(self.components, other.components)),
        )

    def __add__(self, other: "SqHom") -> "SqHom":
        return SqHom(
            self.source,
            self.target,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __neg__(self) -> "SqHom":
        return SqHom(self.source, self.target, tuple(-a for a in self.components))

    def scale(self, c) -> "SqHom":
        return SqHom(self.source, self.target, tuple(m.scale(c) for m in self.components))


def zero_hom(S: SqModule, T: SqModule) -> SqHom:
    return SqHom(
        S, T, tuple(Matrix.zeros(S.field, T.dims[F], S.dims[F]) for F in subsets(S.n))
    )


def identity_hom(M: SqModule) -> SqHom:
    return SqHom(M, M, tuple(Matrix.identity(M.field, d) for d in M.dims))


def hom_from_components(S: SqModule, T: SqModule, comps: dict) -> SqHom:
    full = []
    for F in subsets(S.n):
        c = comps.get(F)
        if c is None:
            c = Matrix.zeros(S.field, T.dims[F], S.dims[F])
        full.append(c)
    return SqHom(S, T, tuple(full))


# -- kernels, images, cokernels ----------------------------------------------


def kernel(f: SqHom) -> tuple[SqModule, SqHom]:
    """Subset-wise null spaces with induced structure maps, plus the inclusion."""
    S = f.source
    fld = S.field
    bases = [exactla.kernel_basis(f.comp(F)) for F in subsets(S.n)]
    dims = tuple(b.cols for b in bases)
    maps = {}
    for F in subsets(S.n):
        if not dims[F]:
            continue
        for v in range(1, S.n + 1):
            if F & _bit(v):
                continue
            G = F | _bit(v)
            if not dims[G]:
                continue
            sol = exactla.solve(bases[G], S.map(F, v) @ bases[F])
            assert sol is not None, "kernel is not a submodule (broken hom)"
            if not sol.is_zero:
                maps[(F, v)] = sol
    K = SqModule(S.n, fld, dims, maps)
    incl = SqHom(K, S, tuple(bases))
    return K, incl


def image(f: SqHom) -> tuple[SqModule, SqHom]:
    """Subset-wise column spaces inside the target, plus the inclusion."""
    T = f.target
    fld = T.field
    bases = [exactla.image_basis(f.comp(F)) for F in subsets(T.n)]
    dims = tuple(b.cols for b in bases)
    maps = {}
    for F in subsets(T.n):
        if not dims[F]:
            continue
        for v in range(1, T.n + 1):
            if F & _bit(v):
                continue
            G = F | _bit(v)
            if not dims[G]:
                continue
            sol = exactla.solve(bases[G], T.map(F, v) @ bases[F])
            assert sol is not None, "image is not a submodule (broken hom)"
            if not sol.is_zero:
                maps[(F, v)] = sol
    I = SqModule(T.n, fld, dims, maps)
    incl = SqHom(I, T, tuple(bases))
    return I, incl


def cokernel(f: SqHom) -> tuple[SqModule, SqHom]:
    """Quotient of the target by the image, with the projection."""
    T = f.target
    fld = T.field
    projs = []
    sections = []
    dims = []
    for F in subsets(T.n):
        img = exactla.image_basis(f.comp(F))
        ident = Matrix.identity(fld, T.dims[F])
        sel = exactla.complement_pivots(img, ident)
        sec = ident.select_columns(sel)
        sol = exactla.solve(sec.hstack(img), ident)
        assert sol is not None
        proj = Matrix(
            fld,
            len(sel),
            T.dims[F],
            tuple(x for r in range(len(sel)) for x in sol.row(r)),
        )
        projs.append(proj)
        sections.append(sec)
        dims.append(len(sel))
    maps = {}
    for F in subsets(T.n):
        if not dims[F]:
            continue
        for v in range(1, T.n + 1):
            if F & _bit(v):
                continue
            G = F | _bit(v)
            if not dims[G]:
                continue
            m = projs[G] @ T.map(F, v) @ sections[F]
            if not m.is_zero:
                maps[(F, v)] = m
    C = SqModule(T.n, fld, tuple(dims), maps)
    proj_hom = SqHom(T, C, tuple(projs))
    return C, proj_hom

"""Boolean-lattice combinatorics and simplicial complexes.

Subsets of [n] = {1, ..., n} are plain int bitmasks: vertex v occupies
bit v-1.  The ambient n travels alongside.  Simplicial complexes store
their full face set explicitly (n <= 20), which makes membership,
duality and links O(1) per subset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidInputError, ParseError, VoidComplexError
from .exactla import Matrix, rank
from .field import Field

MAX_N = 20


def popcount(F: int) -> int:
    return F.bit_count()


def members(F: int) -> list[int]:
    """1-based vertices of the bitmask, ascending."""
    out = []
    v = 1
    while F:
        if F & 1:
            out.append(v)
        F >>= 1
        v += 1
    return out


def from_vertices(verts, n: int) -> int:
    F = 0
    for v in verts:
        v = int(v)
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}")
        F |= 1 << (v - 1)
    return F


def complement(F: int, n: int) -> int:
    return ((1 << n) - 1) & ~F


def subsets(n: int):
    return range(1 << n)


def alpha(j: int, F: int) -> int:
    """#{i in F | i < j}; j need not lie in F."""
    return (F & ((1 << (j - 1)) - 1)).bit_count()


def alpha_pair(A: int, B: int) -> int:
    """#{(a, b) | a > b, a in A, b in B}."""
    total = 0
    for a in members(A):
        total += alpha(a, B)
    return total


def beta_sign(l: int) -> int:
    """1 iff l is congruent to 1 or 2 mod 4."""
    return 1 if l % 4 in (1, 2) else 0


def subset_label(F: int) -> str:
    return "{" + ",".join(str(v) for v in members(F)) + "}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face family on [n], stored as the full face set.

    The void complex (no faces at all) is representable; operations whose
    definitions require a nonempty complex reject it explicitly.
    """

    n: int
    faces: frozenset

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise InvalidInputError(f"n={self.n} out of range 0..{MAX_N}")
        full = 1 << self.n
        for F in self.faces:
            if not 0 <= F < full:
                raise InvalidInputError(f"face {F} outside 2^[{self.n}]")
            for v in members(F):
                if (F & ~(1 << (v - 1))) not in self.faces:
                    raise InvalidInputError(
                        f"face family not downward closed at {subset_label(F)}"
                    )
        if self.faces and 0 not in self.faces:
            raise InvalidInputError("nonvoid complex must contain the empty face")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def from_facets(n: int, facets) -> "SimplicialComplex":
        """Close the given faces downward; no facets gives {empty face}."""
        faces = {0}
        for G in facets:
            sub = G
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & G
        return SimplicialComplex(n, frozenset(faces))

    @staticmethod
    def void(n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, frozenset())

    @staticmethod
    def full_simplex(n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, frozenset(range(1 << n)))

    # -- basic queries ----------------------------------------------------
    @property
    def is_void(self) -> bool:
        return not self.faces

    def facets(self) -> list[int]:
        """Inclusion-maximal faces, sorted by (size, bitmask)."""
        out = []
        for F in self.faces:
            if not any(G != F and G & F == F for G in self.faces):
                out.append(F)
        out.sort(key=lambda F: (popcount(F), F))
        return out

    def dim(self) -> int:
        if self.is_void:
            raise VoidComplexError("void complex has no dimension")
        return max(popcount(F) for F in self.faces) - 1

    # -- operations -------------------------------------------------------
    def alexander_dual(self, allow_void: bool = False) -> "SimplicialComplex":
        """{F | complement(F) not a face}; involution away from the full face."""
        if self.is_void:
            raise VoidComplexError("void complex has no Alexander dual")
        dual = frozenset(
            F for F in subsets(self.n) if complement(F, self.n) not in self.faces
        )
        if not dual and not allow_void:
            # happens exactly when [n] is a face
            raise VoidComplexError("dual is the void complex")
        return SimplicialComplex(self.n, dual)

    def link(self, F: int) -> "SimplicialComplex":
        """{G | G disjoint from F and F union G a face}; void if F is not a face."""
        faces = frozenset(
            G for G in subsets(self.n) if G & F == 0 and (G | F) in self.faces
        )
        return SimplicialComplex(self.n, faces)

    def restrict(self, W: int) -> "SimplicialComplex":
        """Faces contained in W (induced subcomplex), on the same [n]."""
        return SimplicialComplex(self.n, frozenset(F for F in self.faces if F & ~W == 0))

    def minimal_nonfaces(self) -> list[int]:
        """Minimal generators of the non-face ideal, sorted by (size, bitmask)."""
        non = [F for F in subsets(self.n) if F not in self.faces]
        nonset = set(non)
        out = []
        for F in non:
            if not any((F & ~(1 << (v - 1))) in nonset for v in members(F)):
                out.append(F)
        out.sort(key=lambda F: (popcount(F), F))
        return out

    def reduced_homology(self, field: Field) -> dict[int, int]:
        """Dims of reduced homology over ``field``.

        Convention: the complex {empty face} has homology k in degree -1;
        the void family has none at all.
        """
        if self.is_void:
            return {}
        by_dim: dict[int, list[int]] = {}
        for F in self.faces:
            by_dim.setdefault(popcount(F) - 1, []).append(F)
        for fs in by_dim.values():
            fs.sort()
        index = {d: {F: i for i, F in enumerate(fs)} for d, fs in by_dim.items()}
        top = max(by_dim)
        ranks: dict[int, int] = {}  # rank of boundary C_d -> C_{d-1}
        for d in range(0, top + 1):
            if d not in by_dim or (d - 1) not in by_dim:
                ranks[d] = 0
                continue
            rows, cols = len(by_dim[d - 1]), len(by_dim[d])
            z, o = field.zero(), field.one()
            flat = [z] * (rows * cols)
            for j, F in enumerate(by_dim[d]):
                for pos, v in enumerate(members(F)):
                    G = F & ~(1 << (v - 1))
                    i = index[d - 1][G]
                    flat[i * cols + j] = o if pos % 2 == 0 else field.neg(o)
            ranks[d] = rank(Matrix(field, rows, cols, tuple(flat)))
        out = {}
        for d in range(-1, top + 1):
            nd = len(by_dim.get(d, []))
            h = nd - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if h:
                out[d] = h
        return out

    def euler_characteristic_reduced(self) -> int:
        return sum((-1) ** (popcount(F) - 1) for F in self.faces)

    # -- text / JSON --------------------------------------------------------
    @staticmethod
    def parse_facets_text(text: str, n: int | None = None) -> "SimplicialComplex":
        """One facet per line, space-separated vertices 1..n."""
        facet_verts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#")[0].strip()
            if not line:
                continue
            try:
                verts = [int(tok) for tok in line.split()]
            except ValueError:
                raise ParseError(f"line {lineno}: expected integers, got {line!r}")
            facet_verts.append(verts)
        if n is None:
            n = max((v for verts in facet_verts for v in verts), default=0)
        facets = [from_vertices(verts, n) for verts in facet_verts]
        return SimplicialComplex.from_facets(n, facets)

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [members(F) for F in self.facets()]}

    @staticmethod
    def from_json(data) -> "SimplicialComplex":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ParseError(f"bad complex JSON: {e}") from None
        try:
            n = int(data["n"])
            facets = [from_vertices(verts, n) for verts in data["facets"]]
        except (KeyError, TypeError) as e:
            raise ParseError(f"bad complex JSON: {e}") from None
        return SimplicialComplex.from_facets(n, facets)

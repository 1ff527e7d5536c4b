"""Finite groups with fixed canonical listings.

Every group is a direct product of *atoms*: cyclic groups C_n, dihedral
groups D_2n and elementary abelian 2-groups E2^m. Elements are plain
integers indexing the canonical listing, with 0 always the identity.

Listings:

* C_n: ``1, g, g^2, ..., g^(n-1)``.
* D_2n = <a, b | a^2, b^n, ab = b^-1 a>: ``1, b, ..., b^(n-1), a, ab, ..., ab^(n-1)``,
  so index ``e*n + i`` is ``a^e b^i``.
* E2^m: bit vectors in lexicographic order, generator ``e1`` is the most
  significant bit.
* products: lexicographic over the factor listings, **first factor varying
  slowest**. The RG-matrix of ``product(H, G)`` is therefore an |H| x |H| grid
  of |G| x |G| blocks.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from math import prod

import numpy as np

from grcodes.errors import ParseError

# mul_table is materialized up to this order; above it products are computed on the fly
TABLE_LIMIT = 4096
MAX_ORDER = 1 << 16

_ALIAS_LETTERS = "abcdfjklmnpqrstuvwxyz"


@dataclass(frozen=True)
class GroupSpec:
    """Description of a supported group.

    ``n`` is the cyclic order for ``cyclic``, the half-order for ``dihedral``
    and the rank for ``e2``; ``factors`` is used only by ``product``.
    """

    kind: str
    n: int = 0
    factors: tuple[GroupSpec, ...] = ()

    def __post_init__(self):
        if self.kind == "product":
            if not self.factors:
                raise ValueError("a product needs at least one factor")
        elif self.kind in ("cyclic", "dihedral"):
            if self.n < 1:
                raise ValueError(f"{self.kind} group needs n >= 1, got {self.n}")
        elif self.kind == "e2":
            if self.n < 0:
                raise ValueError(f"elementary abelian 2-group needs rank >= 0, got {self.n}")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls("cyclic", n)

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        """Dihedral group of order ``2n``."""
        return cls("dihedral", n)

    @classmethod
    def elementary_abelian_2(cls, m: int) -> GroupSpec:
        return cls("e2", m)

    @classmethod
    def product(cls, *factors: GroupSpec) -> GroupSpec:
        return cls("product", 0, tuple(factors))

    @property
    def order(self) -> int:
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dihedral":
            return 2 * self.n
        if self.kind == "e2":
            return 1 << self.n
        return prod(f.order for f in self.factors)

    def atoms(self) -> list[GroupSpec]:
        """Non-product factors in listing order."""
        if self.kind != "product":
            return [self]
        out: list[GroupSpec] = []
        for f in self.factors:
            out.extend(f.atoms())
        return out

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.n}"
        if self.kind == "dihedral":
            return f"D{2 * self.n}"
        if self.kind == "e2":
            return f"E2^{self.n}"
        return "x".join(f"({f})" if f.kind == "product" else str(f) for f in self.factors)


_TOKEN = re.compile(r"\s*(?:(C)(\d+)|(D)(\d+)|(E2\^)(\d+)|(x)|(\()|(\)))", re.IGNORECASE)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``C7``, ``D14``, ``E2^3``, ``C4xC2``, ``C5x(C3xC2)`` (case-insensitive)."""
    tokens: list[tuple[str, int | None, int]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None or m.end() == pos:
            raise ParseError("unexpected character in group spec", text, pos)
        if m.group(1):
            tokens.append(("C", int(m.group(2)), m.start(1)))
        elif m.group(3):
            tokens.append(("D", int(m.group(4)), m.start(3)))
        elif m.group(5):
            tokens.append(("E", int(m.group(6)), m.start(5)))
        elif m.group(7):
            tokens.append(("x", None, m.start(7)))
        elif m.group(8):
            tokens.append(("(", None, m.start(8)))
        else:
            tokens.append((")", None, m.start(9)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty group spec", text, 0)

    i = 0

    def expr() -> GroupSpec:
        nonlocal i
        factors = [factor()]
        while i < len(tokens) and tokens[i][0] == "x":
            i += 1
            factors.append(factor())
        return factors[0] if len(factors) == 1 else GroupSpec.product(*factors)

    def factor() -> GroupSpec:
        nonlocal i
        if i >= len(tokens):
            raise ParseError("group spec ends early", text, len(text))
        kind, value, at = tokens[i]
        i += 1
        if kind == "(":
            inner = expr()
            if i >= len(tokens) or tokens[i][0] != ")":
                raise ParseError("missing ')'", text, at)
            i += 1
            return inner
        if kind == "C":
            if value < 1:
                raise ParseError("cyclic order must be >= 1", text, at)
            return GroupSpec.cyclic(value)
        if kind == "D":
            if value < 2 or value % 2:
                raise ParseError("dihedral order must be even and >= 2", text, at)
            return GroupSpec.dihedral(value // 2)
        if kind == "E":
            return GroupSpec.elementary_abelian_2(value)
        raise ParseError(f"unexpected {kind!r}", text, at)

    spec = expr()
    if i != len(tokens):
        raise ParseError("trailing input in group spec", text, tokens[i][2])
    return spec


class Group:
    """A finite group under its canonical listing.

    Immutable after construction. Elements are ints in ``[0, order)``.
    """

    def __init__(self, spec: GroupSpec):
        if spec.order < 1:
            raise ValueError("group order must be >= 1")
        if spec.order > MAX_ORDER:
            raise ValueError(f"group order {spec.order} exceeds supported maximum {MAX_ORDER}")
        self.spec = spec
        self.order = spec.order
        self._atoms = spec.atoms()
        self._radices = [a.order for a in self._atoms]
        idx = np.arange(self.order, dtype=np.int64)
        self.inv_table = self._inv_array(idx)
        self.inv_table.setflags(write=False)
        self._table = None
        if self.order <= TABLE_LIMIT:
            self._table = self.mul_array(idx[:, None], idx[None, :])
            self._table.setflags(write=False)
        self.generators, self._display = self._name_generators()

    # -- arithmetic ---------------------------------------------------------

    def _split(self, x: np.ndarray) -> list[np.ndarray]:
        coords = []
        for r in reversed(self._radices):
            x, c = np.divmod(x, r)
            coords.append(c)
        return coords[::-1]

    def _join(self, coords: list[np.ndarray]) -> np.ndarray:
        out = np.zeros_like(coords[0])
        for c, r in zip(coords, self._radices):
            out = out * r + c
        return out

    def mul_array(self, x, y) -> np.ndarray:
        """Vectorized product ``x * y`` on broadcastable index arrays."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        x, y = np.broadcast_arrays(x, y)
        out = []
        for atom, cx, cy in zip(self._atoms, self._split(x), self._split(y)):
            if atom.kind == "cyclic":
                out.append((cx + cy) % atom.n)
            elif atom.kind == "dihedral":
                n = atom.n
                ex, ix = np.divmod(cx, n)
                ey, iy = np.divmod(cy, n)
                # b^i a = a b^-i
                i = (np.where(ey == 1, -ix, ix) + iy) % n
                out.append((ex ^ ey) * n + i)
            else:
                out.append(cx ^ cy)
        return self._join(out)

    def _inv_array(self, x: np.ndarray) -> np.ndarray:
        out = []
        for atom, c in zip(self._atoms, self._split(x)):
            if atom.kind == "cyclic":
                out.append((-c) % atom.n)
            elif atom.kind == "dihedral":
                e, i = np.divmod(c, atom.n)
                out.append(np.where(e == 1, c, (-i) % atom.n))
            else:
                out.append(c)
        return self._join(out)

    def _check(self, g: int) -> int:
        g = int(g)
        if not 0 <= g < self.order:
            raise IndexError(f"element index {g} out of range for group of order {self.order}")
        return g

    def mul(self, g: int, h: int) -> int:
        g, h = self._check(g), self._check(h)
        if self._table is not None:
            return int(self._table[g, h])
        return int(self.mul_array(g, h))

    def inv(self, g: int) -> int:
        return int(self.inv_table[self._check(g)])

    @property
    def identity(self) -> int:
        return 0

    @property
    def mul_table(self) -> np.ndarray:
        if self._table is None:
            raise MemoryError(f"multiplication table not materialized for order {self.order}")
        return self._table

    def left_mul_row(self, h: int) -> np.ndarray:
        """The permutation ``k -> h * g_k``."""
        if self._table is not None:
            return self._table[h]
        return self.mul_array(h, np.arange(self.order))

    def translation_table(self) -> np.ndarray:
        """``T[i, j]`` = index of ``g_i^-1 g_j``; entry pattern of every RG-matrix."""
        idx = np.arange(self.order, dtype=np.int64)
        if self._table is not None:
            return self._table[self.inv_table]
        return self.mul_array(self.inv_table[:, None], idx[None, :])

    def power(self, g: int, k: int) -> int:
        g = self._check(g)
        k %= self.element_order(g)
        out = 0
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def element_order(self, g: int) -> int:
        g = self._check(g)
        k, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    # -- naming -------------------------------------------------------------

    def _atom_unit(self, pos: int, local: int) -> int:
        coords = [np.zeros(1, dtype=np.int64) for _ in self._atoms]
        coords[pos][0] = local
        return int(self._join(coords)[0])

    def _name_generators(self):
        """Generator symbol table and the per-atom names used for printing."""
        names: dict[str, int] = {}
        single = len(self._atoms) == 1
        display: list[list[str]] = []
        for p, atom in enumerate(self._atoms, start=1):
            suffix = "" if single else str(p)
            if atom.kind == "cyclic":
                sym = ["g" + suffix]
                names[sym[0]] = self._atom_unit(p - 1, 1 % atom.n)
            elif atom.kind == "dihedral":
                sym = ["a" + suffix, "b" + suffix]
                names[sym[0]] = self._atom_unit(p - 1, atom.n)
                names[sym[1]] = self._atom_unit(p - 1, 1 % atom.n)
            else:
                sym = [f"e{k}" if single else f"e{p}_{k}" for k in range(1, atom.n + 1)]
                for k, s in enumerate(sym, start=1):
                    names[s] = self._atom_unit(p - 1, 1 << (atom.n - k))
            display.append(sym)
        if not single and all(a.kind == "cyclic" for a in self._atoms):
            # letter aliases so products can be typed the way they are written by hand:
            # 'h' is the first C2 factor, the remaining factors get a, b, c, ...
            letters = iter(_ALIAS_LETTERS)
            h_pos = next((i for i, a in enumerate(self._atoms) if a.n == 2), None)
            for i in range(len(self._atoms)):
                sym = "h" if i == h_pos else next(letters)
                names[sym] = names[display[i][0]]
                display[i] = [sym]
        return names, display

    def word(self, g: int) -> str:
        """Readable word for element ``g`` using the display generator names."""
        g = self._check(g)
        coords = [int(c[0]) for c in self._split(np.array([g], dtype=np.int64))]
        parts: list[str] = []

        def pw(sym: str, k: int) -> None:
            if k == 1:
                parts.append(sym)
            elif k > 1:
                parts.append(f"{sym}^{k}")

        for atom, c, sym in zip(self._atoms, coords, self._display):
            if atom.kind == "cyclic":
                pw(sym[0], c)
            elif atom.kind == "dihedral":
                e, i = divmod(c, atom.n)
                pw(sym[0], e)
                pw(sym[1], i)
            else:
                for k, s in enumerate(sym, start=1):
                    if (c >> (atom.n - k)) & 1:
                        parts.append(s)
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return isinstance(other, Group) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Group({self.spec})"

    def __str__(self):
        return str(self.spec)


@functools.lru_cache(maxsize=64)
def _make_group_cached(spec: GroupSpec) -> Group:
    return Group(spec)


def make_group(spec: GroupSpec | str) -> Group:
    """Build (or fetch a cached) group from a spec or spec string."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return _make_group_cached(spec)


def cyclic(n: int) -> Group:
    return make_group(GroupSpec.cyclic(n))


def dihedral(n: int) -> Group:
    """D_2n, the dihedral group of order ``2n``."""
    return make_group(GroupSpec.dihedral(n))


def elementary_abelian_2(m: int) -> Group:
    return make_group(GroupSpec.elementary_abelian_2(m))


def product(*factors: Group | GroupSpec) -> Group:
    specs = [f.spec if isinstance(f, Group) else f for f in factors]
    return make_group(GroupSpec.product(*specs))

"""Group ring elements over GF(p) and the integers."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from grcodes.errors import ParseError, UnsupportedRingError
from grcodes.groups import Group


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: ``prime`` (GF(p)) or ``integers`` (Z)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "prime":
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p >= 1 << 31:
                raise ValueError("prime fields are limited to p < 2^31")
        elif self.kind != "integers":
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> RingSpec:
        return cls("prime", p)

    @classmethod
    def integers(cls) -> RingSpec:
        return cls("integers")

    @property
    def is_field(self) -> bool:
        return self.kind == "prime"

    @property
    def dtype(self):
        return np.int64 if self.is_field else object

    def reduce(self, values) -> np.ndarray:
        if self.is_field:
            return np.mod(np.asarray(values, dtype=np.int64), self.p)
        arr = np.empty(len(values), dtype=object)
        arr[:] = [int(v) for v in values]
        return arr

    def inverse(self, a: int) -> int:
        """Multiplicative inverse of a scalar."""
        if self.is_field:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("0 has no inverse")
            return pow(a, -1, self.p)
        if a in (1, -1):
            return a
        raise UnsupportedRingError(f"{a} is not invertible in Z")

    def require_field(self, what: str = "this operation") -> int:
        if not self.is_field:
            raise UnsupportedRingError(f"{what} needs a prime field, not {self}")
        return self.p

    def __str__(self):
        return f"gf{self.p}" if self.is_field else "z"


def parse_ring_spec(text: str) -> RingSpec:
    """``gf2``, ``gf<p>``, ``GF(p)`` or ``z``/``int``."""
    t = text.strip().lower().replace(" ", "")
    if t in ("z", "int", "integers"):
        return RingSpec.integers()
    m = re.fullmatch(r"gf\(?(\d+)\)?", t)
    if not m:
        raise ParseError("unknown ring", text, 0)
    try:
        return RingSpec.gf(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc), text, 2) from None


GF2 = RingSpec.gf(2)
ZZ = RingSpec.integers()


class GroupRingElement:
    """``u = sum_g alpha_g g`` stored as a coefficient vector in listing order.

    Immutable; arithmetic returns new elements.
    """

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: Group, ring: RingSpec, coeffs):
        if len(coeffs) != group.order:
            raise ValueError(f"expected {group.order} coefficients, got {len(coeffs)}")
        c = ring.reduce(coeffs)
        c.setflags(write=False)
        self.group = group
        self.ring = ring
        self.coeffs = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, group: Group, ring: RingSpec) -> GroupRingElement:
        return cls(group, ring, [0] * group.order)

    @classmethod
    def one(cls, group: Group, ring: RingSpec) -> GroupRingElement:
        return cls.basis_element(group, ring, 0)

    @classmethod
    def basis_element(cls, group: Group, ring: RingSpec, g: int, coeff: int = 1) -> GroupRingElement:
        c = [0] * group.order
        c[g] = coeff
        return cls(group, ring, c)

    @classmethod
    def from_support(cls, group: Group, ring: RingSpec, support) -> GroupRingElement:
        """Sum of the listed group elements, each with coefficient 1 (repeats add up)."""
        c = [0] * group.order
        for g in support:
            c[g] += 1
        return cls(group, ring, c)

    @classmethod
    def from_vector(cls, group: Group, ring: RingSpec, vec) -> GroupRingElement:
        """zeta: the element whose i-th coefficient is ``vec[i]``."""
        return cls(group, ring, list(vec))

    # -- arithmetic ---------------------------------------------------------

    def _compatible(self, other: GroupRingElement) -> None:
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if other.group != self.group or other.ring != self.ring:
            raise ValueError(
                f"mismatched group rings: {self.ring}[{self.group}] vs {other.ring}[{other.group}]"
            )

    def _new(self, coeffs) -> GroupRingElement:
        return GroupRingElement(self.group, self.ring, coeffs)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._compatible(other)
        return self._new(self.coeffs + other.coeffs)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._compatible(other)
        return self._new(self.coeffs - other.coeffs)

    def __neg__(self) -> GroupRingElement:
        return self._new(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self._new(self.coeffs * int(other))
        self._compatible(other)
        # (uv)_g = sum_h alpha_h beta_{h^-1 g}: scatter beta through left translation by h
        out = np.zeros(self.group.order, dtype=self.ring.dtype)
        for h in np.flatnonzero(self.coeffs):
            a = self.coeffs[h]
            perm = self.group.left_mul_row(int(h))
            out[perm] += a * other.coeffs
            if self.ring.is_field:
                out %= self.ring.p
        return self._new(out)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> GroupRingElement:
        if k < 0:
            raise ValueError("negative powers need an explicit inverse")
        out = GroupRingElement.one(self.group, self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> GroupRingElement:
        """``u^T = sum alpha_g g^-1``."""
        c = np.empty_like(self.coeffs)
        c[self.group.inv_table] = self.coeffs
        return self._new(c)

    @property
    def T(self) -> GroupRingElement:
        return self.transpose()

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.coeffs)]

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def is_one(self) -> bool:
        return bool(self.coeffs[0] == 1) and self.weight() == 1

    @property
    def vector(self) -> np.ndarray:
        """zeta^-1(u): the coefficient vector."""
        return self.coeffs.copy()

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.group == other.group
            and self.ring == other.ring
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.group, self.ring, tuple(int(c) for c in self.coeffs)))

    def __repr__(self):
        return f"GroupRingElement({self.ring}[{self.group}], {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


# -- text format --------------------------------------------------------------

_ELEM_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _ELEM_TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append((m.group(3), None, m.start(3)))
        pos = m.end()
    return out


def _split_name(name: str, names: dict[str, int]) -> list[str] | None:
    """Split juxtaposed generators such as ``ab`` into known symbols."""
    if name in names:
        return [name]
    for cut in range(len(name) - 1, 0, -1):
        head = name[:cut]
        if head in names:
            rest = _split_name(name[cut:], names)
            if rest is not None:
                return [head] + rest
    return None


class _SparseParser:
    """Recursive descent over sparse ``{group index: coefficient}`` dicts.

    expr = ["+"|"-"] term {("+"|"-") term}; term = factor {["*"] factor};
    factor = int | gen ["^" ["-"] int] | "(" expr ")".
    """

    def __init__(self, text: str, group: Group, names: dict[str, int]):
        self.text = text
        self.group = group
        self.names = names
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return (None, None, len(self.text))

    def fail(self, msg: str):
        raise ParseError(msg, self.text, self.peek()[2])

    def mul(self, x: dict, y: dict) -> dict:
        out: dict[int, int] = {}
        for g, a in x.items():
            for h, b in y.items():
                k = self.group.mul(g, h)
                out[k] = out.get(k, 0) + a * b
        return out

    def parse(self) -> dict:
        if not self.tokens:
            raise ParseError("empty element", self.text, 0)
        val = self.expr()
        if self.i < len(self.tokens):
            self.fail("expected '+' or '-'")
        return val

    def expr(self) -> dict:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.peek()[0] == "-" else 1
            self.i += 1
        out: dict[int, int] = {}
        while True:
            for g, c in self.term().items():
                out[g] = out.get(g, 0) + sign * c
            kind = self.peek()[0]
            if kind not in ("+", "-"):
                return out
            sign = -1 if kind == "-" else 1
            self.i += 1

    def term(self) -> dict:
        val = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.i += 1
            elif kind not in ("num", "name", "("):
                return val
            val = self.mul(val, self.factor())

    def factor(self) -> dict:
        kind, value, at = self.peek()
        if kind == "num":
            self.i += 1
            if self.peek()[0] == "^":
                self.fail("cannot raise an integer to a power")
            return {0: value}
        if kind == "(":
            self.i += 1
            val = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.i += 1
            return val
        if kind == "name":
            self.i += 1
            parts = _split_name(value, self.names)
            if parts is None:
                raise ParseError(f"unknown generator symbol {value!r}", self.text, at)
            exp = 1
            if self.peek()[0] == "^":
                self.i += 1
                esign = 1
                if self.peek()[0] == "-":
                    self.i += 1
                    esign = -1
                k2, v2, _ = self.peek()
                if k2 != "num":
                    self.fail("expected integer exponent")
                self.i += 1
                exp = esign * v2
            g = 0
            for sym in parts[:-1]:
                g = self.group.mul(g, self.names[sym])
            g = self.group.mul(g, self.group.power(self.names[parts[-1]], exp))
            return {g: 1}
        self.fail("expected coefficient, generator or '('")


def parse_element(
    text: str, group: Group, ring: RingSpec, names: dict[str, int] | None = None
) -> GroupRingElement:
    """Parse ``"1 + g^2 + g^5"``, ``"1 + a*b + a*b^2"``, ``"2*g - 3*g^2"``, ``"1 + h(a + a^2)"``.

    Generator symbols come from ``group.generators`` unless ``names`` maps
    custom symbols to element indices. Exponents are reduced modulo the
    generator's order; juxtaposition multiplies.
    """
    names = dict(group.generators if names is None else names)
    sparse = _SparseParser(text, group, names).parse()
    coeffs = [0] * group.order
    for g, c in sparse.items():
        coeffs[g] += c
    return GroupRingElement(group, ring, coeffs)


def format_element(u: GroupRingElement, compact: bool = False) -> str:
    """Inverse of :func:`parse_element`; terms appear in listing order."""
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    pieces: list[str] = []
    for g in np.flatnonzero(u.coeffs):
        c = int(u.coeffs[g])
        word = u.group.word(int(g))
        neg = c < 0
        c = abs(c)
        if word == "1":
            body = str(c)
        elif c == 1:
            body = word
        else:
            body = f"{c}*{word}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((minus if neg else plus) + body)
    return "".join(pieces) if pieces else "0"

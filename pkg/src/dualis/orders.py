"""Monomial orders.

All orders offered here (lex, degree reverse lex, and block products of
the two) are matrix orders whose weight rows have non-negative integer
entries.  That lets a monomial be packed into a single Python ``int``::

    [ row_0 . e | row_1 . e | ... | row_{n-1} . e | e_0 | ... | e_{n-1} ]

with fixed-width fields, most significant first.  Comparing two packed
monomials is then integer comparison, multiplying them is integer
addition, and divisibility is a guard-bit test (see :class:`Packer`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import StructuralError

LEX = "lex"
DEGREVLEX = "degrevlex"
BLOCK = "block"
_INNER_KINDS = (LEX, DEGREVLEX)

# Packed field width.  Row sums must stay below 2**(FIELD_BITS - 1).
FIELD_BITS = 24
MAX_FIELD = (1 << (FIELD_BITS - 1)) - 1


def _lex_rows(n):
    return [[1 if j == i else 0 for j in range(n)] for i in range(n)]


def _degrevlex_rows(n):
    # row k sums the first n-k exponents: degree first, then smaller last
    # exponent wins, and so on.
    return [[1 if j < n - k else 0 for j in range(n)] for k in range(n)]


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """A global, multiplicative monomial order.

    ``blocks`` is only used for ``kind == "block"``: a tuple of
    ``(size, inner_kind)`` pairs partitioning the variables left to right.
    Blocks are compared lexicographically, the first block first.
    """

    kind: str
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in (LEX, DEGREVLEX, BLOCK):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == BLOCK:
            if not self.blocks:
                raise ValueError("block order needs at least one block")
            for size, inner in self.blocks:
                if size < 1 or inner not in _INNER_KINDS:
                    raise ValueError(f"bad block ({size}, {inner!r})")
        elif self.blocks:
            raise ValueError("blocks only make sense for a block order")

    @classmethod
    def lex(cls):
        return cls(LEX)

    @classmethod
    def degrevlex(cls):
        return cls(DEGREVLEX)

    @classmethod
    def block(cls, blocks):
        return cls(BLOCK, tuple((int(s), k) for s, k in blocks))

    @classmethod
    def elimination(cls, k, n, inner=DEGREVLEX):
        """Order eliminating the first ``k`` of ``n`` variables.

        ``inner="lex"`` with one block degenerates to pure lex, which is the
        cross-checking fallback.
        """
        if not 0 <= k <= n:
            raise ValueError(f"cannot eliminate {k} of {n} variables")
        if k == 0 or k == n:
            return cls(LEX) if inner == LEX else cls(DEGREVLEX)
        if inner == LEX:
            return cls(LEX)
        return cls.block([(k, inner), (n - k, inner)])

    @classmethod
    def parse(cls, text):
        """Parse ``lex``, ``degrevlex`` or ``block:K`` (K leading variables)."""
        text = text.strip().lower()
        if text in (LEX, DEGREVLEX):
            return cls(text)
        if text.startswith("block:"):
            k = text.split(":", 1)[1]
            if not k.isdigit():
                raise ValueError(f"block size must be a natural number, got {k!r}")
            return BlockSpec(int(k))
        raise ValueError(f"unknown order {text!r}")

    def __str__(self):
        if self.kind != BLOCK:
            return self.kind
        return "block(" + ",".join(f"{s}:{k}" for s, k in self.blocks) + ")"

    def _check(self, n):
        if self.kind == BLOCK and sum(s for s, _ in self.blocks) != n:
            raise StructuralError(
                f"order {self} partitions {sum(s for s, _ in self.blocks)} "
                f"variables, got exponent vectors of length {n}"
            )

    def rows(self, n):
        """Weight matrix (list of rows) realising this order on n variables."""
        self._check(n)
        if self.kind == LEX:
            return _lex_rows(n)
        if self.kind == DEGREVLEX:
            return _degrevlex_rows(n)
        rows = []
        start = 0
        for size, inner in self.blocks:
            inner_rows = _lex_rows(size) if inner == LEX else _degrevlex_rows(size)
            for r in inner_rows:
                rows.append([0] * start + r + [0] * (n - start - size))
            start += size
        return rows

    def key(self, exps):
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        if self.kind == LEX:
            return tuple(exps)
        if self.kind == DEGREVLEX:
            return _degrevlex_key(exps)
        self._check(len(exps))
        out = []
        start = 0
        for size, inner in self.blocks:
            part = exps[start:start + size]
            out.append(tuple(part) if inner == LEX else _degrevlex_key(part))
            start += size
        return tuple(out)

    def packer(self, n):
        self._check(n)
        return _packer(self, n)


@dataclass(frozen=True)
class BlockSpec:
    """Two-block elimination order whose total size is only known later."""

    k: int

    def resolve(self, n):
        return MonomialOrder.elimination(self.k, n)


def resolve_order(order, n):
    """Concrete order for n variables from an order, a BlockSpec or its text form."""
    if isinstance(order, str):
        order = MonomialOrder.parse(order)
    if isinstance(order, BlockSpec):
        return order.resolve(n)
    return order


def cmp(order, a, b):
    """Three-way comparison of exponent vectors: -1, 0 or 1."""
    if len(a) != len(b):
        raise StructuralError(f"exponent vectors of different length: {len(a)} vs {len(b)}")
    if order.kind == BLOCK:
        order._check(len(a))
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class Packer:
    """Encode exponent vectors as order-compatible integers."""

    def __init__(self, order, n):
        self.order = order
        self.n = n
        self.rows = order.rows(n)
        self.nfields = 2 * n
        w = FIELD_BITS
        self.guard = sum(1 << (w - 1 + w * i) for i in range(self.nfields))
        self._field_mask = (1 << w) - 1
        # weight of exponent i inside the packed int
        unit = []
        for i in range(n):
            v = 0
            for k, row in enumerate(self.rows):
                if row[i]:
                    v += row[i] << (w * (self.nfields - 1 - k))
            v += 1 << (w * (n - 1 - i))
            unit.append(v)
        self.unit = unit

    def encode(self, exps):
        if len(exps) != self.n:
            raise StructuralError(f"expected {self.n} exponents, got {len(exps)}")
        if sum(exps) > MAX_FIELD:
            raise OverflowError("monomial degree exceeds the packed field width")
        v = 0
        for e, u in zip(exps, self.unit):
            if e:
                v += e * u
        return v

    def decode(self, mon):
        w = self.n
        mask = self._field_mask
        out = [0] * w
        for i in range(w - 1, -1, -1):
            out[i] = mon & mask
            mon >>= FIELD_BITS
        return tuple(out)

    def overflowed(self, mon):
        return bool(mon & self.guard)

    def divides(self, a, b):
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def degree(self, mon):
        return sum(self.decode(mon))


@lru_cache(maxsize=256)
def _packer(order, n):
    return Packer(order, n)

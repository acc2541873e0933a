"""Complementary symmetric Rote sequences attached to standard Sturmian ones.

The Rote sequence ``v`` starts with ``0`` and satisfies ``s_map(v) == u``.
Its prefix ``x^(n) = s_inverse(w^(n), "0")`` has exactly three return
words, obtained from the Sturmian return words ``r, s`` of ``w^(n)`` and
the prefix type of ``w^(n)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Literal

from .morphisms import Mod2Matrix, directive_matrix, o_matrix
from .sturmian import SturmianContext, as_context, bispecial_prefix, derived_rs, generate, return_words
from .words import s_inverse

Kind = Literal["SU", "US", "UU"]

_KIND_BY_ROW = {(0, 1): "SU", (1, 0): "US", (1, 1): "UU"}


class FactorizationError(ValueError):
    """A word does not split into the expected blocks."""


@dataclass(frozen=True)
class PrefixType:
    """Stability of ``(r, s)`` plus the block exponent ``k``.

    ``SU`` means ``r`` stable and ``s`` unstable.  Both stable (``SS``)
    never occurs and is not representable.
    """

    kind: Kind
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ("SU", "US", "UU"):
            raise ValueError(f"unknown prefix type {self.kind!r}")
        if self.k < 1:
            raise ValueError("k must be positive")

    def __str__(self) -> str:
        return f"{self.kind}({self.k})"

    @classmethod
    def parse(cls, text: str) -> PrefixType:
        m = re.fullmatch(r"\s*(SU|US|UU)\((\d+)\)\s*", text)
        if not m:
            raise ValueError(f"cannot parse prefix type {text!r}")
        return cls(m.group(1), int(m.group(2)))  # type: ignore[arg-type]

    def blocks(self, r: str = "r", s: str = "s") -> tuple[str, str, str]:
        """Sturmian blocks ``(a, b, c)`` whose images are the return words ``A, B, C``."""
        if self.kind == "SU":
            return r, s + r * (self.k + 1) + s, s + r * self.k + s
        if self.kind == "US":
            return r + r, r + s + r, s
        return r + r, r + s, s + r


@dataclass(frozen=True)
class RoteReturnTriple:
    A: str
    B: str
    C: str

    def as_dict(self) -> dict[str, str]:
        return {"A": self.A, "B": self.B, "C": self.C}

    def as_set(self) -> set[str]:
        return {self.A, self.B, self.C}


def generate_rote(ctx: SturmianContext | str, n: int) -> str:
    """Length-``n`` prefix of the Rote sequence ``v`` with ``v_0 = 0``."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        return ""
    return s_inverse(generate(ctx, n - 1), "0")


def rote_prefix(ctx: SturmianContext | str, n: int) -> str:
    """``x^(n)``: the Rote prefix of length ``|w^(n)| + 1`` lying over ``w^(n)``."""
    return s_inverse(bispecial_prefix(ctx, n), "0")


def prefix_matrix(ctx: SturmianContext | str, n: int) -> Mod2Matrix:
    """Mod-2 Parikh matrix of ``(r^(n), s^(n))`` as a product of elementary matrices."""
    ctx = as_context(ctx)
    return directive_matrix(ctx.directive.prefix(n)) @ o_matrix(ctx.letter(n))


def prefix_type(ctx: SturmianContext | str, n: int) -> PrefixType:
    ctx = as_context(ctx)
    row = prefix_matrix(ctx, n).bottom_row
    try:
        kind = _KIND_BY_ROW[row]
    except KeyError:
        raise AssertionError(f"prefix matrix with bottom row {row}") from None
    return PrefixType(kind, ctx.block_exponent(n))  # type: ignore[arg-type]


def _lift(block: str) -> str:
    v = s_inverse(block, "0")
    if v[-1] != "0":
        raise AssertionError(f"block {block!r} is unstable")
    return v[:-1]


def rote_return_words(ctx: SturmianContext | str, n: int) -> RoteReturnTriple:
    """The three return words to ``x^(n)``, named in the order of the type's blocks."""
    ctx = as_context(ctx)
    pair = return_words(ctx, n)
    a, b, c = prefix_type(ctx, n).blocks(pair.r, pair.s)
    return RoteReturnTriple(_lift(a), _lift(b), _lift(c))


def iter_blocks(text: str, blocks: tuple[str, ...], letters: str = "abc", partial: bool = False) -> Iterator[str]:
    """Decode ``text`` over a prefix code ``blocks``, yielding one letter per block.

    With ``partial`` a trailing incomplete block is silently dropped,
    otherwise it raises ``FactorizationError``.
    """
    for i, x in enumerate(blocks):
        for j, y in enumerate(blocks):
            if i != j and y.startswith(x):
                raise ValueError(f"blocks {blocks} are not a prefix code")
    pos, n = 0, len(text)
    while pos < n:
        for block, letter in zip(blocks, letters):
            if text.startswith(block, pos):
                yield letter
                pos += len(block)
                break
        else:
            rest = text[pos:]
            if partial and any(block.startswith(rest) for block in blocks):
                return
            raise FactorizationError(f"no block of {blocks} at position {pos} of {text[:pos + 20]!r}...")


def block_factorize(text: str, blocks: tuple[str, str, str], letters: str = "abc") -> str:
    """Unique factorisation of ``text`` into ``blocks``, written over ``letters``."""
    return "".join(iter_blocks(text, blocks, letters))


def rote_derived(ctx: SturmianContext | str, n: int, length: int) -> str:
    """Prefix of ``d_v(x^(n))`` over ``{A, B, C}``.

    The Sturmian derivated sequence ``d_u(w^(n))`` over ``{r, s}`` is cut
    into the type's blocks; the block ``a`` gives ``A`` and so on.
    """
    ctx = as_context(ctx)
    if length < 0:
        raise ValueError("length must be non-negative")
    if length == 0:
        return ""
    blocks = prefix_type(ctx, n).blocks()
    need = length * max(map(len, blocks)) + 1
    while True:
        rs = derived_rs(ctx, n, need)
        out = []
        for letter in iter_blocks(rs, blocks, "ABC", partial=True):
            out.append(letter)
            if len(out) == length:
                return "".join(out)
        need *= 2


def type_sequence(ctx: SturmianContext | str, count: int) -> list[PrefixType]:
    ctx = as_context(ctx)
    return [prefix_type(ctx, n) for n in range(count)]


def parikh_matrix_of(r: str, s: str) -> Mod2Matrix:
    """Mod-2 Parikh matrix computed directly from the words ``r`` and ``s``."""
    return Mod2Matrix.from_rows(((r.count("0"), s.count("0")), (r.count("1"), s.count("1"))))


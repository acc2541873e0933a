"""Substitutions, the elementary Sturmian morphisms and their matrices.

Directive letters are written ``b`` and ``B`` (the latter standing for
beta).  A composition ``phi_z`` applies the letters right to left, so
``compose_directive("bB")`` is ``phi_b o phi_beta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping

B, BETA = "b", "B"
DIRECTIVE_LETTERS = B + BETA


class DirectiveParseError(ValueError):
    """The directive text does not follow the ``PRE|PER`` grammar."""


class InvalidDirective(ValueError):
    """The directive is well formed but does not describe a Sturmian sequence."""


@dataclass(frozen=True)
class Morphism:
    """A substitution given by the images of its letters.

    The domain alphabet is the key order of ``images``; the Parikh and
    incidence computations index letters in that order.
    """

    images: tuple[tuple[str, str], ...]
    _table: dict[str, str] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_table", dict(self.images))
        if len(self._table) != len(self.images):
            raise ValueError("duplicate letter in morphism")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> Morphism:
        return cls(tuple(mapping.items()))

    @classmethod
    def identity(cls, alphabet: str) -> Morphism:
        return cls(tuple((a, a) for a in alphabet))

    @classmethod
    def parse(cls, text: str) -> Morphism:
        """Parse ``"0->010,1->01001"``."""
        pairs = []
        for item in text.split(","):
            letter, sep, image = item.strip().partition("->")
            if not sep or len(letter) != 1:
                raise ValueError(f"bad morphism item {item!r}")
            pairs.append((letter, image))
        return cls(tuple(pairs))

    @property
    def alphabet(self) -> str:
        return "".join(a for a, _ in self.images)

    def __getitem__(self, letter: str) -> str:
        return self._table[letter]

    def __call__(self, word: str) -> str:
        return apply(self, word)

    def __mul__(self, other: Morphism) -> Morphism:
        """Composition: ``(self * other)(w) == self(other(w))``."""
        return Morphism(tuple((a, self(img)) for a, img in other.images))

    def __pow__(self, n: int) -> Morphism:
        if n < 0:
            raise ValueError("negative power")
        result = Morphism.identity(self.alphabet)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return ",".join(f"{a}->{img}" for a, img in self.images)

    def rename(self, table: Mapping[str, str]) -> Morphism:
        """Conjugate by a letter bijection ``table``."""
        trans = str.maketrans(dict(table))
        return Morphism(tuple((table[a], img.translate(trans)) for a, img in self.images))

    def incidence(self) -> list[list[int]]:
        """Integer matrix whose column ``j`` is the Parikh vector of the ``j``-th image."""
        letters = self.alphabet
        return [[img.count(row) for _, img in self.images] for row in letters]

    def fixed_point(self, start: str, length: int) -> str:
        """Prefix of the fixed point beginning with ``start``."""
        image = self[start]
        if not image.startswith(start) or (len(image) < 2 and length > 1):
            raise ValueError(f"morphism is not prolongable on {start!r}")
        word = start
        while len(word) < length:
            word = self(word)
        return word[:length]


def apply(m: Morphism, word: str) -> str:
    table = m._table
    try:
        return "".join([table[c] for c in word])
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside morphism domain") from None


PHI_B = Morphism((("0", "0"), ("1", "01")))
PHI_BETA = Morphism((("0", "10"), ("1", "1")))
EXCHANGE = Morphism((("0", "1"), ("1", "0")))
FIBONACCI = Morphism((("0", "01"), ("1", "0")))
IDENTITY2 = Morphism.identity("01")

_ELEMENTARY = {"b": PHI_B, "B": PHI_BETA, "E": EXCHANGE, "F": FIBONACCI}


def elementary(name: str) -> Morphism:
    try:
        return _ELEMENTARY[name]
    except KeyError:
        raise ValueError(f"unknown elementary morphism {name!r}") from None


def check_directive_word(z: str) -> None:
    bad = set(z) - set(DIRECTIVE_LETTERS)
    if bad:
        raise DirectiveParseError(f"directive letters must be 'b' or 'B', got {sorted(bad)}")


def compose_directive(z: str) -> Morphism:
    """``phi_{z_0} o phi_{z_1} o ... o phi_{z_{n-1}}``; the empty word gives the identity."""
    check_directive_word(z)
    return reduce(lambda acc, c: acc * _ELEMENTARY[c], z, IDENTITY2)


def _positive(matrix: list[list[int]]) -> bool:
    return all(x > 0 for row in matrix for x in row)


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def is_primitive(m: Morphism) -> bool:
    """Some power ``k <= d**2`` of the incidence matrix is entrywise positive."""
    base = m.incidence()
    d = len(base)
    power = base
    for _ in range(d * d):
        if _positive(power):
            return True
        power = _matmul(power, base)
    return False


@dataclass(frozen=True, order=True)
class Mod2Matrix:
    """2x2 matrix over GF(2), row major ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for x in (self.a, self.b, self.c, self.d):
            if x not in (0, 1):
                raise ValueError("entries must be bits")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Mod2Matrix:
        (a, b), (c, d) = rows
        return cls(a % 2, b % 2, c % 2, d % 2)

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def bottom_row(self) -> tuple[int, int]:
        return (self.c, self.d)

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % 2

    def __matmul__(self, other: Mod2Matrix) -> Mod2Matrix:
        return Mod2Matrix(
            (self.a * other.a + self.b * other.c) % 2,
            (self.a * other.b + self.b * other.d) % 2,
            (self.c * other.a + self.d * other.c) % 2,
            (self.c * other.b + self.d * other.d) % 2,
        )

    def __pow__(self, n: int) -> Mod2Matrix:
        result = IDENTITY
        for _ in range(n):
            result = result @ self
        return result

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Mod2Matrix(1, 0, 0, 1)
M_B = Mod2Matrix(1, 1, 0, 1)
M_BETA = Mod2Matrix(1, 0, 1, 1)
O_B = IDENTITY
O_BETA = Mod2Matrix(0, 1, 1, 0)

#: All 2x2 matrices over GF(2) with determinant one.
SL2_F2 = (
    IDENTITY,
    M_B,
    M_BETA,
    Mod2Matrix(1, 1, 1, 0),
    Mod2Matrix(0, 1, 1, 1),
    O_BETA,
)

_LETTER_MATRIX = {B: M_B, BETA: M_BETA}
_LETTER_O = {B: O_B, BETA: O_BETA}


def letter_matrix(letter: str) -> Mod2Matrix:
    return _LETTER_MATRIX[letter]


def o_matrix(letter: str) -> Mod2Matrix:
    return _LETTER_O[letter]


def incidence_mod2(m: Morphism) -> Mod2Matrix:
    if m.alphabet != "01":
        raise ValueError("incidence_mod2 needs a morphism over {0,1}")
    return Mod2Matrix.from_rows(m.incidence())


def mod2_multiply(lhs: Mod2Matrix, rhs: Mod2Matrix) -> Mod2Matrix:
    return lhs @ rhs


def directive_matrix(z: str) -> Mod2Matrix:
    """``M_{z_0} M_{z_1} ... M_{z_{n-1}} mod 2``."""
    return reduce(lambda acc, c: acc @ _LETTER_MATRIX[c], z, IDENTITY)


def _primitive_root(word: str) -> str:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


@dataclass(frozen=True)
class DirectiveSpec:
    """An eventually periodic word ``preperiod (period)^inf`` over ``{b, B}``.

    An empty period denotes a finite directive word.  Specs are stored in
    canonical form (primitive period, shortest preperiod), so ``==``
    compares the infinite words.
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        check_directive_word(self.preperiod + self.period)
        if self.period:
            period = _primitive_root(self.period)
            pre = self.preperiod
            while pre and pre[-1] == period[-1]:
                pre = pre[:-1]
                period = period[-1] + period[:-1]
            object.__setattr__(self, "preperiod", pre)
            object.__setattr__(self, "period", period)

    @classmethod
    def parse(cls, text: str) -> DirectiveSpec:
        text = text.strip()
        if text.count("|") > 1:
            raise DirectiveParseError(f"directive {text!r} has more than one '|'")
        pre, bar, per = text.partition("|")
        if bar and not per:
            raise DirectiveParseError(f"directive {text!r} has an empty period after '|'")
        return cls(pre, per)

    @classmethod
    def periodic(cls, z: str) -> DirectiveSpec:
        return cls("", z)

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __str__(self) -> str:
        return f"{self.preperiod}|{self.period}" if self.period else self.preperiod

    def validate(self) -> None:
        """Reject specs that cannot direct a standard Sturmian sequence."""
        if not self.period:
            raise InvalidDirective(f"directive {self} is finite")
        if B not in self.period or BETA not in self.period:
            raise InvalidDirective(
                f"period {self.period!r} must contain both b and B to give a Sturmian sequence"
            )

    def letter(self, i: int) -> str:
        p = len(self.preperiod)
        if i < p:
            return self.preperiod[i]
        if not self.period:
            raise IndexError(i)
        return self.period[(i - p) % len(self.period)]

    def prefix(self, n: int) -> str:
        return "".join(self.letter(i) for i in range(n))

    def shift(self, n: int) -> DirectiveSpec:
        """The directive ``z_n z_{n+1} ...``."""
        p = len(self.preperiod)
        if n <= p:
            return DirectiveSpec(self.preperiod[n:], self.period)
        if not self.period:
            raise IndexError(n)
        r = (n - p) % len(self.period)
        return DirectiveSpec("", self.period[r:] + self.period[:r])

    def run_length(self, n: int) -> int:
        """Length of the maximal block of equal letters starting at index ``n``."""
        self.validate()
        first = self.letter(n)
        k = 1
        while self.letter(n + k) == first:
            k += 1
        return k

    def exchanged(self) -> DirectiveSpec:
        swap = str.maketrans("bB", "Bb")
        return DirectiveSpec(self.preperiod.translate(swap), self.period.translate(swap))

    def normalized(self) -> DirectiveSpec:
        """Exchange letters if needed so the word starts with ``b``.

        Directives equal under this normalisation describe the same
        Sturmian sequence over its return-word alphabet ``{r, s}``.
        """
        return self.exchanged() if self.letter(0) == BETA else self


def letter_action_edges() -> list[tuple[Mod2Matrix, str, Mod2Matrix]]:
    """Edges ``M -letter-> M_letter M`` over the six invertible matrices."""
    return [(m, letter, _LETTER_MATRIX[letter] @ m) for m in SL2_F2 for letter in DIRECTIVE_LETTERS]

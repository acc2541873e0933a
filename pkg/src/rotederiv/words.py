"""Finite binary words, mod-2 Parikh vectors and the difference map.

Words are plain ``str`` values: binary words use ``"0"``/``"1"``,
ternary derivated words ``"A"``/``"B"``/``"C"``, words over the Sturmian
return words ``"r"``/``"s"`` and quaternary words ``"1"``..``"4"``.
"""

from __future__ import annotations

import operator
from itertools import accumulate
from typing import NamedTuple

BINARY = "01"
TERNARY = "ABC"
RETURN_LETTERS = "rs"

_EXCHANGE = str.maketrans("01", "10")


class ParikhMod2(NamedTuple):
    count0: int
    count1: int

    @property
    def stable(self) -> bool:
        """A word is stable when it holds an even number of ones."""
        return self.count1 == 0

    def __xor__(self, other: ParikhMod2) -> ParikhMod2:  # type: ignore[override]
        return ParikhMod2(self.count0 ^ other.count0, self.count1 ^ other.count1)


def check_alphabet(word: str, alphabet: str) -> None:
    bad = set(word) - set(alphabet)
    if bad:
        raise ValueError(f"letters {sorted(bad)} not in alphabet {alphabet!r}")


def parikh_mod2(word: str) -> ParikhMod2:
    ones = word.count("1")
    return ParikhMod2((len(word) - ones) & 1, ones & 1)


def is_stable(word: str) -> bool:
    return word.count("1") % 2 == 0


def exchange(word: str) -> str:
    """Swap the letters 0 and 1."""
    return word.translate(_EXCHANGE)


def s_map(v: str) -> str:
    """First differences mod 2: ``u_i = v_i + v_{i+1}``.

    A single letter maps to the empty word.
    """
    if not v:
        raise ValueError("s_map needs a non-empty word")
    return "".join("0" if a == b else "1" for a, b in zip(v, v[1:]))


def s_inverse(u: str, first: str = "0") -> str:
    """The unique word ``v`` with ``v[0] == first`` and ``s_map(v) == u``."""
    if first not in BINARY:
        raise ValueError(f"first letter must be 0 or 1, got {first!r}")
    bits = accumulate((c == "1" for c in u), operator.xor, initial=first == "1")
    return "".join("1" if b else "0" for b in bits)


def factor_complexity(text: str, n: int) -> int:
    """Number of distinct length-``n`` factors of the finite word ``text``.

    This is only a lower bound for the complexity of an infinite word; the
    caller is responsible for passing a prefix long enough for the count to
    have stabilised.
    """
    if n < 0 or n > len(text):
        raise ValueError(f"need 0 <= n <= len(text), got n={n}, len={len(text)}")
    return len({text[i : i + n] for i in range(len(text) - n + 1)})


def factors(text: str, n: int) -> set[str]:
    return {text[i : i + n] for i in range(len(text) - n + 1)}


def is_palindrome(word: str) -> bool:
    return word == word[::-1]


def first_appearance_form(word: str, alphabet: str = "ABCDEFGHIJ") -> str:
    """Rename letters in order of first appearance.

    Two words agree up to a permutation of letters iff their first
    appearance forms are equal.
    """
    table: dict[str, str] = {}
    out = []
    for c in word:
        if c not in table:
            table[c] = alphabet[len(table)]
        out.append(table[c])
    return "".join(out)


def render(word: str, empty: str = "") -> str:
    return word if word else empty

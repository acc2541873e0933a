"""Standard Sturmian sequences given by a directive ``z`` over ``{b, B}``.

The sequence is ``u = lim phi_{z_0 ... z_{n-1}}(0)``.  Its bispecial
prefixes ``w^(n)`` are indexed by length with ``w^(0)`` the empty word;
the return words to ``w^(n)`` are the images of the two letters under
``phi_{z_0 ... z_{n-1}}``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .morphisms import (
    BETA,
    IDENTITY2,
    DirectiveSpec,
    InvalidDirective,
    Morphism,
    compose_directive,
    elementary,
)
from .quadratic import QuadraticNumber

_SUFFIX = {"b": "0", "B": "1"}


class SturmianContext:
    """A validated directive together with a cache of prefix compositions.

    The cache is lock protected, so one context can be shared between
    threads.
    """

    def __init__(self, directive: DirectiveSpec | str) -> None:
        if isinstance(directive, str):
            directive = DirectiveSpec.parse(directive)
        directive.validate()
        self.directive = directive
        self._lock = threading.Lock()
        self._compositions: list[Morphism] = [IDENTITY2]

    def __repr__(self) -> str:
        return f"SturmianContext({str(self.directive)!r})"

    def letter(self, n: int) -> str:
        return self.directive.letter(n)

    def composition(self, n: int) -> Morphism:
        """``phi_{z_0 z_1 ... z_{n-1}}``."""
        with self._lock:
            comps = self._compositions
            while len(comps) <= n:
                comps.append(comps[-1] * elementary(self.letter(len(comps) - 1)))
            return comps[n]

    def lead_letter(self, n: int) -> str:
        """The more frequent letter of ``u^(n)``, which is also its first letter."""
        return _SUFFIX[self.letter(n)]

    def block_exponent(self, n: int) -> int:
        """``k`` such that ``d_u(w^(n))`` is built from ``r^k s`` and ``r^(k+1) s``."""
        return self.directive.run_length(n)

    def shifted(self, n: int) -> SturmianContext:
        return SturmianContext(self.directive.shift(n))


@dataclass(frozen=True)
class ReturnPair:
    r: str
    s: str


def as_context(ctx: SturmianContext | DirectiveSpec | str) -> SturmianContext:
    return ctx if isinstance(ctx, SturmianContext) else SturmianContext(ctx)


def generate(ctx: SturmianContext | DirectiveSpec | str, n: int) -> str:
    """Length-``n`` prefix of the standard Sturmian sequence."""
    ctx = as_context(ctx)
    if n < 0:
        raise ValueError("length must be non-negative")
    m = 0
    while True:
        word = ctx.composition(m)[ctx.lead_letter(m)]
        if len(word) >= n:
            return word[:n]
        m += 1


def desubstitute(prefix: str) -> tuple[str, str]:
    """Undo one elementary morphism on a standard Sturmian prefix.

    Returns the directive letter and the longest preimage that is certain:
    a final code word that could still be the start of a longer one is
    dropped.
    """
    if len(prefix) < 2:
        raise ValueError("desubstitute needs a prefix of length >= 2")
    if prefix[0] == "0":
        letter, head, tail = "b", "0", "1"  # code {0 -> 0, 01 -> 1}
    else:
        letter, head, tail = "B", "1", "0"  # code {1 -> 1, 10 -> 0}
    out = []
    i, n = 0, len(prefix)
    while i < n:
        if prefix[i] != head:
            raise ValueError(f"{prefix!r} is not a standard Sturmian prefix (position {i})")
        if i + 1 == n:
            break  # ambiguous: could be a short or a long code word
        if prefix[i + 1] == tail:
            out.append(tail)
            i += 2
        else:
            out.append(head)
            i += 1
    return letter, "".join(out)


def bispecial_prefix(ctx: SturmianContext | DirectiveSpec | str, n: int) -> str:
    """``w^(n)`` via ``w = phi_{z_j}(w') + suffix letter`` applied ``n`` times."""
    ctx = as_context(ctx)
    w = ""
    for j in reversed(range(n)):
        z = ctx.letter(j)
        w = elementary(z)(w) + _SUFFIX[z]
    return w


def return_words(ctx: SturmianContext | DirectiveSpec | str, n: int) -> ReturnPair:
    """Return words to ``w^(n)``; ``r`` is the more frequent one."""
    ctx = as_context(ctx)
    phi = ctx.composition(n)
    lead = ctx.lead_letter(n)
    other = "1" if lead == "0" else "0"
    return ReturnPair(phi[lead], phi[other])


def derived_directive(ctx: SturmianContext | DirectiveSpec | str, n: int) -> DirectiveSpec:
    """Directive of ``d_u(w^(n))`` read over ``{0, 1}``: the shift ``z_n z_{n+1} ...``."""
    ctx = as_context(ctx)
    return ctx.directive.shift(n)


def derived_rs(ctx: SturmianContext | DirectiveSpec | str, n: int, length: int) -> str:
    """Prefix of ``d_u(w^(n))`` written over the return-word letters ``r``, ``s``."""
    ctx = as_context(ctx)
    shifted = ctx.shifted(n)
    word = generate(shifted, length)
    if ctx.lead_letter(n) == "0":
        return word.translate(str.maketrans("01", "rs"))
    return word.translate(str.maketrans("01", "sr"))


def _mobius(letter: str, x: QuadraticNumber) -> QuadraticNumber:
    # frequency of 0 in phi_letter(u') from the frequency x of 0 in u'
    if letter == BETA:
        return x / (x + 1)
    return 1 / (2 - x)


def slope(directive: DirectiveSpec | str) -> QuadraticNumber:
    """Exact frequency of ``0`` in the standard Sturmian sequence."""
    if isinstance(directive, str):
        directive = DirectiveSpec.parse(directive)
    directive.validate()
    (a, b), (c, d) = compose_directive(directive.period).incidence()
    disc = (a - d) ** 2 + 4 * b * c
    lam = QuadraticNumber(a + d, 1, disc) / 2  # Perron eigenvalue
    if lam.is_rational:
        raise InvalidDirective("period matrix has a rational Perron eigenvalue")
    alpha = b / (b + lam - a)  # eigenvector (b, lam - a), normalised
    for letter in reversed(directive.preperiod):
        alpha = _mobius(letter, alpha)
    return alpha


def adaptive_text(
    make_text: Callable[[int], str],
    factor: str,
    start_length: int,
    min_occurrences: int = 50,
    max_length: int = 1 << 24,
) -> str:
    """Double the text length until ``factor`` occurs ``min_occurrences`` times.

    Uniform recurrence guarantees termination; ``max_length`` is a guard
    against callers passing a text source that is not uniformly recurrent.
    """
    length = max(start_length, len(factor) + 1)
    while True:
        text = make_text(length)
        count, i = 0, text.find(factor)
        while i >= 0 and count < min_occurrences:
            count += 1
            i = text.find(factor, i + 1)
        if count >= min_occurrences:
            return text
        if length >= max_length:
            raise RuntimeError(f"{factor!r} occurs fewer than {min_occurrences} times in {length} letters")
        length *= 2

"""Periodicity of prefix types, fixing morphisms and derivated-sequence inventories.

For a purely periodic directive ``z^inf`` the pair (prefix type, shifted
directive) is periodic, and each derivated sequence ``d_v(x^(i))`` is
fixed by a primitive morphism over ``{A, B, C}`` read off from the
Sturmian return-word substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .morphisms import (
    B,
    BETA,
    IDENTITY,
    SL2_F2,
    DirectiveSpec,
    InvalidDirective,
    Mod2Matrix,
    Morphism,
    check_directive_word,
    compose_directive,
    directive_matrix,
    is_primitive,
)
from .rote import PrefixType, block_factorize, prefix_type, rote_derived
from .sturmian import SturmianContext

__all__ = [
    "DerivedInventory",
    "FixingMorphismList",
    "InventoryEntry",
    "block_factorize",
    "derived_inventory",
    "return_morphism",
    "fixing_morphisms",
    "four_letter_check",
    "four_letter_fixed_point",
    "minimal_q",
    "verify_fixing",
]

FINGERPRINT_LENGTH = 200


def minimal_q(h: Mod2Matrix) -> int:
    """Smallest ``q`` with ``h**q == I`` over GF(2)."""
    if h not in SL2_F2:
        raise ValueError(f"{h} is not invertible over GF(2)")
    power = h
    for q in (1, 2, 3):
        if power == IDENTITY:
            return q
        power = power @ h
    raise AssertionError("every element of SL2(F2) has order 1, 2 or 3")


def _checked_context(z: str) -> SturmianContext:
    check_directive_word(z)
    if set(z) != {B, BETA}:
        raise InvalidDirective(f"{z!r} must contain both b and B")
    return SturmianContext(DirectiveSpec.periodic(z))


def pair_key(ctx: SturmianContext, n: int) -> tuple[PrefixType, DirectiveSpec]:
    """Equal keys mean equal derivated sequences ``d_v(x^(n))``."""
    return prefix_type(ctx, n), ctx.directive.shift(n).normalized()


def period_length(z: str) -> int:
    """``q * |z|``, the period of the prefix matrices of ``z^inf``."""
    return minimal_q(directive_matrix(z)) * len(z)


@dataclass(frozen=True)
class InventoryEntry:
    n: int
    type: PrefixType
    directive: DirectiveSpec
    fingerprint: str


@dataclass(frozen=True)
class DerivedInventory:
    z: str
    entries: tuple[InventoryEntry, ...]
    classes: tuple[tuple[int, ...], ...]  # indices grouped by equal pair, in order of first index

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def duplicates(self) -> dict[int, int]:
        """Maps each repeated index to the first index of its class."""
        return {n: cls[0] for cls in self.classes for n in cls[1:]}


def derived_inventory(z: str, fingerprint_length: int = FINGERPRINT_LENGTH) -> DerivedInventory:
    """Group ``i < qQ`` by their pair and count the distinct derivated sequences."""
    ctx = _checked_context(z)
    entries = []
    groups: dict[tuple[PrefixType, DirectiveSpec], list[int]] = {}
    for i in range(period_length(z)):
        kind, shifted = pair_key(ctx, i)
        entries.append(InventoryEntry(i, kind, shifted, rote_derived(ctx, i, fingerprint_length)))
        groups.setdefault((kind, shifted), []).append(i)
    return DerivedInventory(z, tuple(entries), tuple(tuple(v) for v in groups.values()))


def _renaming(letter: str) -> dict[str, str]:
    return {"0": "r", "1": "s"} if letter == B else {"0": "s", "1": "r"}


def return_morphism(ctx: SturmianContext, i: int, j: int) -> Morphism:
    """The ternary morphism induced by ``phi_{z_i ... z_{i+j-1}}`` at index ``i``.

    Needs ``pair_key(ctx, i + j) == pair_key(ctx, i)``.  The Sturmian
    images, rewritten over ``r, s``, are cut into the blocks of the type.
    """
    if j < 1:
        raise ValueError("jump must be positive")
    if pair_key(ctx, i) != pair_key(ctx, i + j):
        raise ValueError(f"indices {i} and {i + j} carry different derivated sequences")
    phi = compose_directive(ctx.directive.prefix(i + j)[i:])
    here, there = _renaming(ctx.letter(i)), _renaming(ctx.letter(i + j))
    inv_there = {v: k for k, v in there.items()}
    table = str.maketrans(here)

    def theta(letter: str) -> str:
        return phi[inv_there[letter]].translate(table)

    blocks = prefix_type(ctx, i).blocks()
    images = {}
    for name, block in zip("ABC", blocks):
        image = "".join(theta(x) for x in block)
        images[name] = block_factorize(image, blocks, "ABC")
    return Morphism.from_mapping(images)


def fixing_jump(ctx: SturmianContext, i: int, limit: int) -> int:
    for j in range(1, limit + 1):
        if pair_key(ctx, i + j) == pair_key(ctx, i):
            return j
    raise AssertionError(f"no repetition of the pair at {i} within {limit} steps")


Mode = Literal["minimal", "algorithm"]


@dataclass(frozen=True)
class FixingMorphismList:
    z: str
    q: int
    sigmas: tuple[Morphism, ...]
    jumps: tuple[int, ...]
    duplicates: dict[int, int] = field(default_factory=dict)


def fixing_morphisms(z: str, mode: Mode = "minimal") -> FixingMorphismList:
    """One primitive morphism per index ``i < qQ`` fixing ``d_v(x^(i))``.

    ``mode="algorithm"`` iterates the full period ``qQ``; ``"minimal"`` uses the
    first return of the pair, which gives the shortest morphisms.
    """
    ctx = _checked_context(z)
    total = period_length(z)
    q = total // len(z)
    if mode not in ("minimal", "algorithm"):
        raise ValueError(f"unknown mode {mode!r}")
    sigmas, jumps = [], []
    for i in range(total):
        j = total if mode == "algorithm" else fixing_jump(ctx, i, total)
        sigmas.append(return_morphism(ctx, i, j))
        jumps.append(j)
    first: dict[Morphism, int] = {}
    dups = {}
    for i, sigma in enumerate(sigmas):
        if sigma in first:
            dups[i] = first[sigma]
        else:
            first[sigma] = i
    return FixingMorphismList(z, q, tuple(sigmas), tuple(jumps), dups)


def verify_fixing(sigma: Morphism, derived_prefix: str) -> bool:
    """Whether ``sigma(derived_prefix)`` extends ``derived_prefix``."""
    if len(derived_prefix) < 2:
        raise ValueError("need a prefix of length >= 2")
    if any(x not in sigma.alphabet for x in derived_prefix):
        return False
    return sigma(derived_prefix).startswith(derived_prefix)


def fixing_is_sound(sigma: Morphism, derived_prefix: str) -> bool:
    return is_primitive(sigma) and verify_fixing(sigma, derived_prefix)


def xi(nparam: int) -> Morphism:
    if nparam < 0:
        raise ValueError("nparam must be non-negative")
    return Morphism.from_mapping(
        {"1": "13", "2": "24", "3": "2413" * nparam + "241", "4": "1324" * nparam + "132"}
    )


def sigma_family(nparam: int) -> Morphism:
    if nparam < 0:
        raise ValueError("nparam must be non-negative")
    pad = "A" * nparam
    return Morphism.from_mapping({"A": pad + "AB" + pad + "C", "B": pad + "AC", "C": pad + "AB"})


PI = str.maketrans("1234", "0101")
RHO_PRIME = Morphism.from_mapping({"A": "0011", "B": "011", "C": "001"})


def four_letter_fixed_point(nparam: int, length: int) -> str:
    return xi(nparam).fixed_point("1", length)


def four_letter_sides(nparam: int, length: int) -> tuple[str, str]:
    """``pi`` of the ``xi_n`` fixed point and ``rho'`` of the ``sigma_n`` fixed point."""
    left = four_letter_fixed_point(nparam, length).translate(PI)
    # rho' images have length >= 3, so a third as many letters is enough
    right = RHO_PRIME(sigma_family(nparam).fixed_point("A", length // 3 + 1))[:length]
    return left, right


def four_letter_check(nparam: int, length: int) -> bool:
    if length < 1:
        raise ValueError("length must be positive")
    left, right = four_letter_sides(nparam, length)
    return left == right

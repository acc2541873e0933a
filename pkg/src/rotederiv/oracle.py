"""Definition-level scans of finite prefixes.

Nothing here knows about morphisms or prefix types: occurrences are found
by plain string search and return words are the slices between
consecutive occurrences.  The structural modules are checked against
these scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class ScanResult:
    occurrences: tuple[int, ...]
    return_words: frozenset[str]
    derivated_prefix: str
    complete: bool


def occurrences(factor: str, text: str) -> list[int]:
    if not factor:
        raise ValueError("factor must be non-empty")
    found = []
    i = text.find(factor)
    while i >= 0:
        found.append(i)
        i = text.find(factor, i + 1)
    return found


def _slices(prefix: str, text: str) -> tuple[list[int], list[str]]:
    if not prefix or not text.startswith(prefix):
        raise ValueError("prefix must be a non-empty prefix of text")
    occ = occurrences(prefix, text)
    return occ, [text[i:j] for i, j in zip(occ, occ[1:])]


def return_words_scan(prefix: str, text: str, alphabet: str = "ABCDEFGHIJ") -> ScanResult:
    """Return words and derivated prefix, letters named by first appearance.

    ``complete`` is set once at least three further occurrences follow the
    one that closed the last newly seen return word.
    """
    occ, pieces = _slices(prefix, text)
    names: dict[str, str] = {}
    last_new = -1
    for idx, piece in enumerate(pieces):
        if piece not in names:
            names[piece] = alphabet[len(names)]
            last_new = idx
    derived = "".join(names[p] for p in pieces)
    # piece idx ends at occurrence idx + 1
    complete = bool(pieces) and len(occ) - (last_new + 2) >= 3
    return ScanResult(tuple(occ), frozenset(names), derived, complete)


def derived_scan(prefix: str, text: str, naming: str | Mapping[str, str] = "first-appearance") -> str:
    """Derivated word of ``text`` to ``prefix``.

    ``naming`` is ``"first-appearance"`` or a mapping from return words to
    letters; a return word missing from the mapping raises ``KeyError``.
    """
    if naming == "first-appearance":
        return return_words_scan(prefix, text).derivated_prefix
    if isinstance(naming, str):
        raise ValueError(f"unknown naming mode {naming!r}")
    _, pieces = _slices(prefix, text)
    try:
        return "".join(naming[p] for p in pieces)
    except KeyError as exc:
        raise KeyError(f"return word {exc.args[0]!r} not in the supplied naming") from None

"""Two- and three-interval exchanges with exact codings.

All membership tests are exact comparisons in a quadratic field, so a
coding never drifts because of rounding.  Intervals are half open,
``[left, right)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .morphisms import B
from .quadratic import QuadraticNumber
from .rote import PrefixType, prefix_type
from .sturmian import SturmianContext, as_context, derived_directive, slope

Scalar = Union[int, Fraction, QuadraticNumber]

# image order of the intervals A, B, C under the exchange
PERMUTATIONS = {(3, 2, 1): "CBA", (2, 3, 1): "BCA"}


def _q(x: Scalar) -> QuadraticNumber:
    return x if isinstance(x, QuadraticNumber) else QuadraticNumber(x)


def iet2_code(alpha: Scalar, rho: Scalar, length: int) -> str:
    """Coding of ``rho`` under ``y -> y + 1 - alpha`` on ``[0, alpha)``, ``y -> y - alpha`` on ``[alpha, 1)``."""
    alpha, y = _q(alpha), _q(rho)
    if alpha.is_rational:
        raise ValueError("slope must be irrational")
    if not 0 < alpha < 1 or not 0 <= y < 1:
        raise ValueError("need 0 < alpha < 1 and 0 <= rho < 1")
    up = 1 - alpha
    out = []
    for _ in range(length):
        if y < alpha:
            out.append("0")
            y = y + up
        else:
            out.append("1")
            y = y - alpha
    return "".join(out)


@dataclass(frozen=True)
class IETSpec:
    """Three-interval exchange ``I_A = [0, beta)``, ``I_B = [beta, beta+gamma)``, ``I_C``.

    ``permutation`` is ``(3, 2, 1)`` or ``(2, 3, 1)``.
    """

    beta: QuadraticNumber
    gamma: QuadraticNumber
    permutation: tuple[int, int, int]
    intercept: QuadraticNumber

    def __post_init__(self) -> None:
        for name in ("beta", "gamma", "intercept"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        object.__setattr__(self, "permutation", tuple(self.permutation))
        if self.permutation not in PERMUTATIONS:
            raise ValueError(f"unsupported permutation {self.permutation}")
        if not (self.beta > 0 and self.gamma > 0 and self.beta + self.gamma < 1):
            raise ValueError("interval lengths must be positive and sum to 1")
        if not 0 <= self.intercept < 1:
            raise ValueError("intercept must lie in [0, 1)")

    @property
    def lengths(self) -> dict[str, QuadraticNumber]:
        return {"A": self.beta, "B": self.gamma, "C": 1 - self.beta - self.gamma}

    def _layout(self) -> tuple[dict[str, QuadraticNumber], dict[str, QuadraticNumber]]:
        lengths = self.lengths
        top, bottom = {}, {}
        pos = QuadraticNumber(0)
        for letter in "ABC":
            top[letter] = pos
            pos = pos + lengths[letter]
        pos = QuadraticNumber(0)
        for letter in PERMUTATIONS[self.permutation]:
            bottom[letter] = pos
            pos = pos + lengths[letter]
        return top, bottom

    def translations(self) -> dict[str, QuadraticNumber]:
        """Offset added to points of each interval."""
        top, bottom = self._layout()
        return {x: bottom[x] - top[x] for x in "ABC"}

    def interval_of(self, y: QuadraticNumber) -> str:
        if y < self.beta:
            return "A"
        if y < self.beta + self.gamma:
            return "B"
        return "C"

    def __call__(self, y: Scalar) -> QuadraticNumber:
        y = _q(y)
        return y + self.translations()[self.interval_of(y)]

    def inverse(self, y: Scalar) -> QuadraticNumber:
        y = _q(y)
        top, bottom = self._layout()
        lengths = self.lengths
        for letter in PERMUTATIONS[self.permutation]:
            if y < bottom[letter] + lengths[letter]:
                return y - bottom[letter] + top[letter]
        raise ValueError("point outside [0, 1)")


def iet3_code(spec: IETSpec, length: int) -> str:
    """Letters of the intervals visited by the orbit of the intercept."""
    shift = spec.translations()
    split1, split2 = spec.beta, spec.beta + spec.gamma
    y = spec.intercept
    out = []
    for _ in range(length):
        if y < split1:
            letter = "A"
        elif y < split2:
            letter = "B"
        else:
            letter = "C"
        out.append(letter)
        y = y + shift[letter]
    return "".join(out)


def derived_slope(ctx: SturmianContext | str, n: int) -> QuadraticNumber:
    """Frequency of the more frequent return word ``r`` in ``d_u(w^(n))``; always above 1/2."""
    ctx = as_context(ctx)
    alpha = slope(derived_directive(ctx, n))
    return alpha if ctx.letter(n) == B else 1 - alpha


def iet3_params_for(alpha: QuadraticNumber, kind: PrefixType) -> IETSpec:
    rest = 1 - alpha
    if kind.kind == "SU":
        return IETSpec(alpha, alpha - kind.k * rest, (3, 2, 1), rest)
    if kind.kind == "US":
        return IETSpec(2 * alpha - 1, rest, (3, 2, 1), rest)
    return IETSpec(2 * alpha - 1, rest, (2, 3, 1), rest)


def iet3_params(ctx: SturmianContext | str, n: int) -> IETSpec:
    """The exchange whose coding of ``1 - alpha`` is ``d_v(x^(n))``."""
    ctx = as_context(ctx)
    return iet3_params_for(derived_slope(ctx, n), prefix_type(ctx, n))


def idoc_check(spec: IETSpec, horizon: int) -> bool:
    """No iterate ``T^j(beta)`` with ``0 < |j| <= horizon`` equals ``beta + gamma``."""
    if horizon < 1:
        raise ValueError("horizon must be positive")
    target = spec.beta + spec.gamma
    fwd = bwd = spec.beta
    for _ in range(horizon):
        fwd = spec(fwd)
        bwd = spec.inverse(bwd)
        if fwd == target or bwd == target:
            return False
    return True

"""Term orders on N^d.

A term order is represented by a sort key: ``x`` precedes ``y`` exactly when
``order.key(x) < order.key(y)``. All built-in kinds are linear in the
exponent vector up to the final lexicographic tie-break, which gives
translation compatibility for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, EmptySetError, ParseError

Vector = Tuple[int, ...]

KINDS = ("lex", "grlex", "grevlex", "weighted")


@dataclass(frozen=True)
class TermOrder:
    kind: str = "grlex"
    weights: Optional[Tuple[int, ...]] = None
    tiebreak: str = "lex"
    permutation: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "weighted":
            if not self.weights:
                raise ValueError("weighted order needs a weight vector")
            # strictly positive weights keep 0 the minimum
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be strictly positive")
            if self.tiebreak not in ("lex", "grlex", "grevlex"):
                raise ValueError(f"unknown tie-break kind {self.tiebreak!r}")
        if self.permutation is not None:
            if sorted(self.permutation) != list(range(len(self.permutation))):
                raise ValueError("permutation must be a rearrangement of 0..d-1")

    def _permute(self, v: Sequence[int]) -> Vector:
        if self.permutation is None:
            return tuple(v)
        if len(self.permutation) != len(v):
            raise DimensionMismatchError("permutation length differs from dimension")
        return tuple(v[i] for i in self.permutation)

    def key(self, v: Sequence[int]) -> tuple:
        p = self._permute(v)
        if self.kind == "lex":
            return p
        if self.kind == "grlex":
            return (sum(p), p)
        if self.kind == "grevlex":
            return (sum(p), tuple(-c for c in reversed(p)))
        if len(self.weights) != len(p):
            raise DimensionMismatchError("weight vector length differs from dimension")
        base = TermOrder(self.tiebreak, permutation=self.permutation)
        return (sum(w * c for w, c in zip(self.weights, v)), base.key(v))

    def compare(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Return -1, 0 or 1 as ``x`` is smaller than, equal to or larger than ``y``."""
        if len(x) != len(y):
            raise DimensionMismatchError(f"{x} and {y} have different dimensions")
        kx, ky = self.key(x), self.key(y)
        return (kx > ky) - (kx < ky)

    def lt(self, x, y) -> bool:
        return self.compare(x, y) < 0

    def gt(self, x, y) -> bool:
        return self.compare(x, y) > 0

    def max_of(self, xs: Iterable[Vector]) -> Vector:
        xs = list(xs)
        if not xs:
            raise EmptySetError("max of an empty set")
        return max(xs, key=self.key)

    def min_of(self, xs: Iterable[Vector]) -> Vector:
        xs = list(xs)
        if not xs:
            raise EmptySetError("min of an empty set")
        return min(xs, key=self.key)

    def sorted(self, xs: Iterable[Vector], reverse: bool = False) -> list:
        return sorted(xs, key=self.key, reverse=reverse)

    @property
    def name(self) -> str:
        if self.kind == "weighted":
            return "weighted:" + ",".join(map(str, self.weights)) + ":" + self.tiebreak
        return self.kind

    def __str__(self) -> str:
        return self.name


LEX = TermOrder("lex")
GRLEX = TermOrder("grlex")
GREVLEX = TermOrder("grevlex")


def parse_order(text: str) -> TermOrder:
    """Parse ``lex``, ``grlex``, ``grevlex`` or ``weighted:w1,w2,...:tiebreak``."""
    text = text.strip()
    if text in ("lex", "grlex", "grevlex"):
        return TermOrder(text)
    if text.startswith("weighted:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ParseError(f"bad weighted order {text!r}")
        try:
            weights = tuple(int(w) for w in parts[1].split(","))
            return TermOrder("weighted", weights=weights, tiebreak=parts[2])
        except ValueError as exc:
            raise ParseError(f"bad weighted order {text!r}: {exc}") from exc
    raise ParseError(f"unknown term order {text!r}")

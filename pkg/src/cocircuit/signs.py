"""Sign vectors over a finite ground set ``{0, ..., n-1}``.

A sign vector is stored as a tuple of ints in ``{-1, 0, 1}``.  The text form
is a string over ``+``, ``-`` and ``0``, one character per element.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable


class Sign(IntEnum):
    MINUS = -1
    ZERO = 0
    PLUS = 1


_CHAR = {1: "+", -1: "-", 0: "0"}
_VALUE = {"+": 1, "-": -1, "0": 0}


class SignVector:
    """Immutable sign vector with equality and hashing by content."""

    __slots__ = ("_signs", "_hash")

    def __init__(self, signs: Iterable[int]):
        values = tuple(int(s) for s in signs)
        for s in values:
            if s not in (-1, 0, 1):
                raise ValueError(f"invalid sign {s!r}")
        object.__setattr__(self, "_signs", values)
        object.__setattr__(self, "_hash", hash(values))

    def __setattr__(self, name, value):
        raise AttributeError("SignVector is immutable")

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        try:
            return cls(_VALUE[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"invalid sign character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def zeros(cls, n: int) -> "SignVector":
        return cls((0,) * n)

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    def __len__(self) -> int:
        return len(self._signs)

    def __getitem__(self, e: int) -> int:
        return self._signs[e]

    def __iter__(self):
        return iter(self._signs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignVector):
            return NotImplemented
        return self._signs == other._signs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SignVector") -> bool:
        return str(self) < str(other)

    def __neg__(self) -> "SignVector":
        return negate(self)

    def __str__(self) -> str:
        return "".join(_CHAR[s] for s in self._signs)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"

    @property
    def plus(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self._signs) if s > 0)

    @property
    def minus(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self._signs) if s < 0)

    @property
    def support(self) -> frozenset[int]:
        return support(self)

    @property
    def zero_support(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self._signs) if s == 0)


def support(x: SignVector) -> frozenset[int]:
    """Positions where ``x`` is nonzero."""
    return frozenset(e for e, s in enumerate(x.signs) if s != 0)


def zero_support(x: SignVector) -> frozenset[int]:
    return x.zero_support


def _check_lengths(x: SignVector, y: SignVector) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")


def separator(x: SignVector, y: SignVector) -> frozenset[int]:
    """Positions where ``x`` and ``y`` carry strictly opposite signs."""
    _check_lengths(x, y)
    return frozenset(e for e, (a, b) in enumerate(zip(x.signs, y.signs)) if a * b < 0)


def negate(x: SignVector) -> SignVector:
    return SignVector(-s for s in x.signs)


def restrict(x: SignVector, keep: Iterable[int]) -> SignVector:
    """Restriction of ``x`` to ``keep``, listed in ascending element order."""
    return SignVector(x.signs[e] for e in sorted(set(keep)))


def is_crabbed_member(w: SignVector, x: SignVector, y: SignVector) -> bool:
    """True iff ``w+`` lies in ``x+ | y+`` and ``w-`` lies in ``x- | y-``.

    Only the support of ``w`` is inspected: a nonzero ``w_e`` must agree
    with ``x_e`` or with ``y_e``.
    """
    _check_lengths(w, x)
    _check_lengths(w, y)
    for a, b, c in zip(w.signs, x.signs, y.signs):
        if a != 0 and a != b and a != c:
            return False
    return True

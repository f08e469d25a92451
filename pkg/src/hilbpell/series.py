"""Truncated formal power series in T over a generic coefficient ring.

Coefficients may be plain ints or any immutable ring-like value that
supports ``+``, ``-``, ``*`` (including ``* int``) and exact ``==``;
``LaurentPoly`` and ``MotivicClass`` both qualify.  A series of
truncation order N stores exactly the coefficients of T^0 .. T^N and
never reads or writes beyond index N.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .laurent import LaurentPoly, NonUnitError


class OrderMismatchError(ValueError):
    """Raised when combining series of different truncation orders."""


class NonUnitConstantTermError(ValueError):
    """Raised when inverting a series whose constant term is not a unit."""


def _zero_like(x):
    if isinstance(x, int):
        return 0
    return x * 0


def _one_like(x):
    if isinstance(x, int):
        return 1
    one = getattr(x, "ring_one", None)
    if one is not None:
        return one()
    raise TypeError(f"cannot build multiplicative identity for {type(x)!r}")


def _unit_inverse(x):
    if isinstance(x, int):
        if x in (1, -1):
            return x
        raise NonUnitConstantTermError(f"{x} is not a unit of Z")
    try:
        return x.unit_inverse()
    except NonUnitError as exc:
        raise NonUnitConstantTermError(str(exc)) from exc


class TruncatedSeries:
    """Immutable power series truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least a constant term")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(coeffs) < order + 1:
            pad = _zero_like(coeffs[0])
            coeffs = coeffs + (pad,) * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def one(cls, order: int, like) -> "TruncatedSeries":
        return cls((_one_like(like),), order)

    @classmethod
    def zero(cls, order: int, like) -> "TruncatedSeries":
        return cls((_zero_like(like),), order)

    @classmethod
    def from_constant(cls, value, order: int) -> "TruncatedSeries":
        return cls((value,), order)

    # -- inspection --------------------------------------------------------

    def coefficient(self, i: int):
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient index {i} outside 0..{self.order}")
        return self.coeffs[i]

    def __getitem__(self, i: int):
        return self.coefficient(i)

    def constant_term(self):
        return self.coeffs[0]

    def has_unit_constant_term(self) -> bool:
        c0 = self.coeffs[0]
        if isinstance(c0, int):
            return c0 in (1, -1)
        is_unit = getattr(c0, "is_unit", None)
        return bool(is_unit()) if is_unit is not None else False

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        zero = _zero_like(self.coeffs[0])
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if isinstance(a, int) and a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out), n)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0_inv = _unit_inverse(self.coeffs[0])
        n = self.order
        inv = [c0_inv]
        for k in range(1, n + 1):
            acc = _zero_like(self.coeffs[0])
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * inv[k - j]
            inv.append(-(c0_inv * acc))
        return TruncatedSeries(tuple(inv), n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int):
            raise TypeError("series powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order, self.coeffs[0])
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, scale, power: int) -> "TruncatedSeries":
        """Return a(scale * T^power) truncated at the same order.

        ``scale`` is a coefficient-ring element; ``power`` must be >= 1.
        """
        if power < 1:
            raise ValueError("substitution power must be >= 1")
        n = self.order
        zero = _zero_like(self.coeffs[0])
        out = [zero] * (n + 1)
        scale_pow = _one_like(self.coeffs[0])
        for j in range(n // power + 1):
            out[j * power] = self.coeffs[j] * scale_pow
            scale_pow = scale_pow * scale
        return TruncatedSeries(tuple(out), n)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __str__(self) -> str:
        chunks = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, int):
                if c == 0:
                    continue
                body = str(c)
            else:
                if c.is_zero():
                    continue
                body = str(c)
                if "+" in body or "-" in body[1:]:
                    body = f"({body})"
            if i == 0:
                chunks.append(body)
            elif i == 1:
                chunks.append(f"{body}*T")
            else:
                chunks.append(f"{body}*T^{i}")
        if not chunks:
            return f"0 + O(T^{self.order + 1})"
        return " + ".join(chunks) + f" + O(T^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {self})"

    # -- serialization -------------------------------------------------------

    def to_jsonable(self) -> dict:
        """Canonical JSON form for series over int or LaurentPoly coefficients."""
        coeffs = []
        for c in self.coeffs:
            if isinstance(c, int):
                coeffs.append(str(c))
            else:
                coeffs.append(c.to_jsonable()["terms"])
        first = self.coeffs[0]
        vars_ = [] if isinstance(first, int) else list(first.alphabet)
        return {"var": "T", "order": self.order, "vars": vars_, "coeffs": coeffs}

    @classmethod
    def from_jsonable(cls, data) -> "TruncatedSeries":
        order = int(data["order"])
        vars_ = tuple(data["vars"])
        coeffs: list = []
        for entry in data["coeffs"]:
            if isinstance(entry, str):
                coeffs.append(int(entry))
            else:
                coeffs.append(LaurentPoly.from_jsonable({"vars": vars_, "terms": entry}))
        return cls(tuple(coeffs), order)


def geometric_series(ratio, order: int) -> "TruncatedSeries":
    """1 + r*T + r^2*T^2 + ... = 1/(1 - r*T) up to the given order."""
    one = _one_like(ratio)
    coeffs = [one]
    for _ in range(order):
        coeffs.append(coeffs[-1] * ratio)
    return TruncatedSeries(tuple(coeffs), order)

"""Exact multivariate Laurent polynomials with integer coefficients.

A polynomial lives over a fixed, ordered alphabet of variable names.
Exponents are signed integers (so ``L**-1`` is a legal monomial), and
coefficients are arbitrary-precision Python ints.  Values are immutable;
every operation returns a new polynomial in canonical form (no stored
zero terms).  There is no floating point anywhere in this module.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class AlphabetMismatchError(ValueError):
    """Raised when combining polynomials over different variable alphabets."""


class NonUnitError(ValueError):
    """Raised when inverting a polynomial that is not ±(monomial)."""


class LaurentPoly:
    """Immutable Laurent polynomial over a fixed alphabet.

    ``terms`` maps exponent vectors (tuples of ints, one entry per
    variable) to nonzero integer coefficients.
    """

    __slots__ = ("alphabet", "terms", "_hash")

    def __init__(self, alphabet: Iterable[str], terms: Mapping[tuple[int, ...], int]):
        alphabet = tuple(alphabet)
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(alphabet):
                raise ValueError(
                    f"exponent vector {exps!r} does not match alphabet {alphabet!r}"
                )
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an int")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Iterable[str]) -> "LaurentPoly":
        return cls(alphabet, {})

    @classmethod
    def one(cls, alphabet: Iterable[str]) -> "LaurentPoly":
        return cls.constant(alphabet, 1)

    @classmethod
    def constant(cls, alphabet: Iterable[str], value: int) -> "LaurentPoly":
        alphabet = tuple(alphabet)
        if not value:
            return cls(alphabet, {})
        return cls(alphabet, {(0,) * len(alphabet): value})

    @classmethod
    def monomial(
        cls,
        alphabet: Iterable[str],
        exponents: Iterable[int],
        coeff: int = 1,
    ) -> "LaurentPoly":
        return cls(alphabet, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, alphabet: Iterable[str], name: str, power: int = 1) -> "LaurentPoly":
        alphabet = tuple(alphabet)
        idx = alphabet.index(name)
        exps = [0] * len(alphabet)
        exps[idx] = power
        return cls.monomial(alphabet, exps)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        zero_exp = (0,) * len(self.alphabet)
        return self.terms == {zero_exp: 1}

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.alphabet), 0)

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def iter_terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield (exponent vector, coefficient) pairs in sorted order."""
        yield from sorted(self.terms.items())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True iff the polynomial is ±(single monomial), i.e. invertible."""
        if len(self.terms) != 1:
            return False
        return abs(next(iter(self.terms.values()))) == 1

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NonUnitError(f"{self} is not a unit of the Laurent ring")
        (exps, coeff), = self.terms.items()
        return LaurentPoly(self.alphabet, {tuple(-e for e in exps): coeff})

    def ring_one(self) -> "LaurentPoly":
        """Multiplicative identity of the ring this value lives in."""
        return LaurentPoly.one(self.alphabet)

    def evaluate_all_ones(self) -> int:
        """Value of the polynomial with every variable set to 1."""
        return sum(self.terms.values())

    def min_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum of exponents (0 for the zero polynomial)."""
        if not self.terms:
            return (0,) * len(self.alphabet)
        return tuple(min(col) for col in zip(*self.terms))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatchError(
                    f"alphabets differ: {self.alphabet!r} vs {other.alphabet!r}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.alphabet, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.alphabet, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.alphabet)
            return LaurentPoly(
                self.alphabet, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, 0) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        return LaurentPoly(self.alphabet, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int):
            raise TypeError("polynomial powers must be integers")
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        result = LaurentPoly.one(self.alphabet)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.alphabet, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.alphabet, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering / serialization ----------------------------------------

    def _render_monomial(self, exps: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(self.alphabet, exps):
            if e == 0:
                continue
            if e == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # Highest total degree first, then lexicographic on exponents.
        ordered = sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )
        chunks: list[str] = []
        for exps, coeff in ordered:
            mono = self._render_monomial(exps)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.alphabet!r}, {self})"

    def to_jsonable(self) -> dict:
        """Canonical JSON form: sorted terms, coefficients as decimal strings."""
        return {
            "vars": list(self.alphabet),
            "terms": [
                {
                    "monomials": {
                        name: e for name, e in zip(self.alphabet, exps) if e
                    },
                    "c": str(coeff),
                }
                for exps, coeff in self.iter_terms()
            ],
        }

    @classmethod
    def from_jsonable(cls, data: Mapping) -> "LaurentPoly":
        alphabet = tuple(data["vars"])
        terms: dict[tuple[int, ...], int] = {}
        for term in data["terms"]:
            monomials = term["monomials"]
            exps = tuple(int(monomials.get(name, 0)) for name in alphabet)
            terms[exps] = int(term["c"])
        return cls(alphabet, terms)

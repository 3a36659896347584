"""Sparse bivariate Laurent polynomials in (v, z) with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

Monomial = tuple[int, int]


class LaurentPoly2:
    """Immutable sparse polynomial ``sum c * v^a * z^b`` with ``a, b`` in Z.

    Zero coefficients are never stored, so two polynomials are equal iff
    their term dictionaries are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for (a, b), c in items:
            c = int(c)
            if c:
                key = (int(a), int(b))
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, coef: int = 1) -> "LaurentPoly2":
        return cls({(a, b): coef})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            ((a, b), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly2({(-a * -n, -b * -n): c ** (-n)})
        result = LaurentPoly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_mirror(self) -> "LaurentPoly2":
        """Return ``P(-v^-1, z)``."""
        return LaurentPoly2({(-a, b): c * (-1) ** (a % 2) for (a, b), c in self._terms.items()})

    def max_deg_v(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(a for a, _ in self._terms)

    def min_deg_v(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(a for a, _ in self._terms)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms as ``(a, b, coef)`` sorted by ``(a, b)`` descending."""
        return [(a, b, c) for (a, b), c in sorted(self._terms.items(), reverse=True)]

    def to_json(self) -> list[list[int]]:
        return [[a, b, c] for a, b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly2":
        return cls({(a, b): c for a, b, c in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*v^{a}*z^{b}" for a, b, c in self.sorted_terms()).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_json()!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Parse the text form produced by ``str`` (``c*v^a*z^b`` terms)."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        if text[0] not in "+-":
            text = "+" + text
        terms = re.findall(r"([+-])(\d+)\*v\^(-?\d+)\*z\^(-?\d+)", text)
        if "".join(f"{s}{c}*v^{a}*z^{b}" for s, c, a, b in terms) != text:
            raise ValueError(f"malformed polynomial text: {text!r}")
        return cls({(int(a), int(b)): (-1 if s == "-" else 1) * int(c) for s, c, a, b in terms})


V = LaurentPoly2.monomial(1, 0)
V_INV = LaurentPoly2.monomial(-1, 0)
Z = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.const(1)

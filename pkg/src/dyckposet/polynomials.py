"""Sparse integer-coefficient polynomials in one variable and in (q, t).

Zero coefficients are never stored; term iteration is in a fixed canonical
order so serialized output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class UniPoly:
    """Sparse univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly({0: 1})

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly({1: 1})

    @staticmethod
    def from_list(ascending: Iterable[int]) -> "UniPoly":
        return UniPoly({e: c for e, c in enumerate(ascending)})

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "UniPoly":
        return UniPoly({0: other}) - self

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly({0: other})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        return UniPoly({e + k: c for e, c in self.coeffs.items()})

    def __call__(self, x):
        return sum(c * x ** e for e, c in self.coeffs.items())

    def divide_exact(self, divisor: "UniPoly") -> "UniPoly":
        """Exact division; raises if the remainder is nonzero or a division
        step would leave the integers."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.coeffs)
        quot: dict[int, int] = {}
        dd = divisor.degree
        lead = divisor.coeffs[dd]
        while rem:
            rd = max(rem)
            if rd < dd:
                raise ArithmeticError("nonzero remainder in exact division")
            c, r = divmod(rem[rd], lead)
            if r != 0:
                raise ArithmeticError("non-integer quotient in exact division")
            quot[rd - dd] = c
            for e, dc in divisor.coeffs.items():
                key = rd - dd + e
                rem[key] = rem.get(key, 0) - c * dc
                if rem[key] == 0:
                    del rem[key]
        return UniPoly(quot)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return " + ".join(parts)


class BiPoly:
    """Sparse polynomial in q and t with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c != 0}

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def monomial(qe: int, te: int, coeff: int = 1) -> "BiPoly":
        return BiPoly({(qe, te): coeff})

    @staticmethod
    def from_q(poly: UniPoly) -> "BiPoly":
        return BiPoly({(e, 0): c for e, c in poly.coeffs.items()})

    def terms(self) -> list[tuple[int, int, int]]:
        """(q-exponent, t-exponent, coefficient) in canonical order."""
        return [(qe, te, c) for (qe, te), c in sorted(self.coeffs.items())]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        return self + (-other)

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        out: dict[tuple[int, int], int] = {}
        for (q1, t1), c1 in self.coeffs.items():
            for (q2, t2), c2 in other.coeffs.items():
                key = (q1 + q2, t1 + t2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __call__(self, q0, t0):
        return sum(c * q0 ** qe * t0 ** te
                   for (qe, te), c in self.coeffs.items())

    def evaluate_exact(self, q0: Fraction, t0: Fraction) -> Fraction:
        return Fraction(self(q0, t0))

    def substitute_t_one(self) -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (qe, _te), c in self.coeffs.items():
            key = (qe, 0)
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def substitute_q_one(self) -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (_qe, te), c in self.coeffs.items():
            key = (0, te)
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def swap_variables(self) -> "BiPoly":
        return BiPoly({(te, qe): c for (qe, te), c in self.coeffs.items()})

    def t_to_inverse_q(self, shift: int) -> "BiPoly":
        """q^shift * P(q, 1/q) by exponent arithmetic; raises if a negative
        q-exponent survives."""
        out: dict[tuple[int, int], int] = {}
        for (qe, te), c in self.coeffs.items():
            exp = shift + qe - te
            if exp < 0:
                raise ArithmeticError("negative exponent after specialization")
            key = (exp, 0)
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def q_part(self) -> UniPoly:
        """View as a univariate polynomial in q; raises if t occurs."""
        if any(te != 0 for (_qe, te) in self.coeffs):
            return _raise_not_univariate()
        return UniPoly({qe: c for (qe, _te), c in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for qe, te, c in self.terms():
            body = "".join((
                "" if c == 1 and (qe or te) else str(c),
                f"q^{qe}" if qe > 1 else ("q" if qe == 1 else ""),
                f"t^{te}" if te > 1 else ("t" if te == 1 else ""),
            ))
            parts.append(body or str(c))
        return " + ".join(parts)


def _raise_not_univariate():
    raise ArithmeticError("polynomial involves t; not univariate in q")

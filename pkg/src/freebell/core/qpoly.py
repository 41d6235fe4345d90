"""Exact polynomials in one variable ``q`` with integer coefficients.

Only the handful of operations needed by the q-analogue machinery are
provided: ring arithmetic, exact division, evaluation and the classical
q-integers, q-factorials, q-Pochhammer symbols and Gaussian binomials.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

IntOrPoly = Union[int, "QPoly"]


class QPoly:
    """Immutable sparse polynomial ``sum c_k q^k`` with ``k >= 0``.

    Zero coefficients are never stored, so two equal polynomials always have
    equal ``terms`` mappings.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], int] = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent %d" % e)
            clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def q(cls, k: int = 1) -> "QPoly":
        return cls({k: 1})

    @classmethod
    def coerce(cls, x: IntOrPoly) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError("cannot coerce %r to QPoly" % (x,))

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficients(self) -> list:
        """Dense coefficient list, constant term first."""
        if not self._terms:
            return []
        out = [0] * (self.degree() + 1)
        for e, c in self._terms.items():
            out[e] = c
        return out

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: IntOrPoly) -> "QPoly":
        if not isinstance(other, (int, QPoly)):
            return NotImplemented
        other = QPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: IntOrPoly) -> "QPoly":
        if not isinstance(other, (int, QPoly)):
            return NotImplemented
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: IntOrPoly) -> "QPoly":
        return QPoly.coerce(other) - self

    def __mul__(self, other: IntOrPoly) -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = QPoly(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: IntOrPoly) -> Tuple["QPoly", "QPoly"]:
        """Euclidean division; the leading coefficient of ``divisor`` must
        divide every leading coefficient met along the way."""
        divisor = QPoly.coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        d = divisor.degree()
        lead = divisor[d]
        rem = dict(self._terms)
        quot: Dict[int, int] = {}
        while rem and max(rem) >= d:
            top = max(rem)
            c, r = divmod(rem[top], lead)
            if r:
                raise ArithmeticError("non-integral division by %s" % divisor)
            shift = top - d
            quot[shift] = c
            for e, cc in divisor._terms.items():
                rem[e + shift] = rem.get(e + shift, 0) - c * cc
                if not rem[e + shift]:
                    del rem[e + shift]
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: IntOrPoly) -> "QPoly":
        quot, rem = self.divmod(divisor)
        if rem:
            raise ArithmeticError("%s is not divisible by %s" % (self, divisor))
        return quot

    def __call__(self, x):
        """Evaluate at ``x`` (any ring element supporting + and *)."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * x ** e
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else "q^%d" % e
                mono = var if abs(c) == 1 else "%d*%s" % (abs(c), var)
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(("-" if c < 0 else "+") + mono)
        return "".join(parts)

    def __repr__(self) -> str:
        return "QPoly(%s)" % self

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of :meth:`__str__`; also accepts ``2q^3`` without a star."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls()
        if not re.fullmatch(r"(?:[+-]?[^+-]+)+", s):
            raise ValueError("malformed polynomial %r" % text)
        terms: Dict[int, int] = {}
        for m in re.finditer(r"([+-]?)([^+-]+)", s):
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2)
            tm = re.fullmatch(r"(\d*)\*?(q(?:\^(\d+))?)?", body)
            if tm is None or (not tm.group(1) and not tm.group(2)):
                raise ValueError("malformed polynomial term %r in %r" % (body, text))
            coeff = int(tm.group(1)) if tm.group(1) else 1
            if tm.group(2):
                exp = int(tm.group(3)) if tm.group(3) else 1
            else:
                exp = 0
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls(terms)


def to_qpoly(x: IntOrPoly) -> QPoly:
    return QPoly.coerce(x)


@lru_cache(maxsize=None)
def q_integer(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return QPoly({e: 1 for e in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = QPoly(1)
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> QPoly:
    """``(q)_n = prod_{i=1}^{n} (1 - q^i)``; the empty product is 1."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    out = QPoly(1)
    for i in range(1, n + 1):
        out = out * QPoly({0: 1, i: -1})
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial, built by the q-Pascal rule so no division occurs."""
    if n < 0 or k < 0 or k > n:
        raise ValueError("q_binomial(%d, %d) undefined: need 0 <= k <= n" % (n, k))
    if k == 0 or k == n:
        return QPoly(1)
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    return q_binomial(n - 1, k - 1) + QPoly.q(k) * q_binomial(n - 1, k)

"""Sparse exact linear combinations and their tensor squares.

Every algebra element in the package is a :class:`LinComb`: a basis tag
(``"G"``, ``"F"``, ``"QF"``, ``"QM"``, ``"WM"``, ``"P"``, ``"Y"``, ``"word"``)
plus a mapping from basis keys to nonzero coefficients.  Coefficients live in
one of two domains, Python ``int`` or :class:`~freebell.core.qpoly.QPoly`.
Adding elements with different tags, or with different coefficient domains,
raises ``TypeError``; scaling by a ``QPoly`` promotes an integer element.
"""

from __future__ import annotations

import json
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .core.qpoly import QPoly
from .core.setpartition import SetPartition
from .core.words import format_composition, format_word, parse_composition, parse_word

Coeff = Union[int, QPoly]

BASES = {
    "G": "FQSym G basis (permutations)",
    "F": "FQSym F basis (permutations)",
    "QF": "QSym fundamental basis (compositions)",
    "QM": "QSym monomial basis (compositions)",
    "WM": "WQSym M basis (packed words)",
    "P": "Bell Hopf algebra P basis (set partitions)",
    "Y": "noncommutative Y-monomials (compositions)",
    "word": "free associative algebra on positive integers (words)",
}

COMPOSITION_BASES = ("QF", "QM", "Y")


def _domain(c: Coeff) -> str:
    return "qpoly" if isinstance(c, QPoly) else "int"


class LinComb:
    """Immutable sparse linear combination over a tagged basis."""

    __slots__ = ("basis", "_terms", "_domain")

    def __init__(self, basis: str, terms: Union[Mapping, Iterable[Tuple[Hashable, Coeff]]] = (),
                 domain: Optional[str] = None):
        if basis not in BASES:
            raise ValueError("unknown basis tag %r" % basis)
        self.basis = basis
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict = {}
        dom = domain
        for k, c in items:
            d = _domain(c)
            if dom is None:
                dom = d
            elif d != dom:
                if dom == "qpoly" and d == "int":
                    c = QPoly(c)
                else:
                    raise TypeError("mixed coefficient domains in LinComb")
            if k in acc:
                acc[k] = acc[k] + c
            else:
                acc[k] = c
        self._terms = {k: c for k, c in acc.items() if c}
        self._domain = dom or "int"

    # -- construction helpers
    @classmethod
    def basis_element(cls, basis: str, key: Hashable, coeff: Coeff = 1) -> "LinComb":
        return cls(basis, {key: coeff})

    @classmethod
    def zero(cls, basis: str, domain: str = "int") -> "LinComb":
        return cls(basis, (), domain)

    @classmethod
    def from_keys(cls, basis: str, keys: Iterable[Hashable]) -> "LinComb":
        """Sum of basis elements, with multiplicity."""
        acc: Dict = {}
        for k in keys:
            acc[k] = acc.get(k, 0) + 1
        return cls(basis, acc)

    # -- mapping protocol
    @property
    def domain(self) -> str:
        return self._domain

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def __getitem__(self, key) -> Coeff:
        return self._terms.get(key, QPoly() if self._domain == "qpoly" else 0)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(self.basis, kv[0]))

    # -- module structure
    def _check(self, other: "LinComb") -> None:
        if not isinstance(other, LinComb):
            raise TypeError("expected a LinComb, got %r" % type(other))
        if other.basis != self.basis:
            raise TypeError("basis mismatch: %s vs %s" % (self.basis, other.basis))
        if other._terms and self._terms and other._domain != self._domain:
            raise TypeError("coefficient domain mismatch: %s vs %s" % (self._domain, other._domain))

    def __add__(self, other: "LinComb") -> "LinComb":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        dom = self._domain if self._terms else other._domain
        return LinComb(self.basis, out, dom)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self) -> "LinComb":
        return LinComb(self.basis, {k: -c for k, c in self._terms.items()}, self._domain)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def scale(self, c: Coeff) -> "LinComb":
        if isinstance(c, QPoly):
            return LinComb(self.basis, {k: c * v for k, v in self._terms.items()}, "qpoly")
        if not isinstance(c, int):
            raise TypeError("scalar must be int or QPoly")
        return LinComb(self.basis, {k: c * v for k, v in self._terms.items()}, self._domain)

    def __rmul__(self, c: Coeff) -> "LinComb":
        if isinstance(c, (int, QPoly)):
            return self.scale(c)
        return NotImplemented

    def to_qpoly(self) -> "LinComb":
        return LinComb(self.basis, {k: QPoly.coerce(c) for k, c in self._terms.items()}, "qpoly")

    def map_keys(self, f: Callable, basis: Optional[str] = None) -> "LinComb":
        """Apply ``f`` to every key; colliding keys have their coefficients summed."""
        acc: Dict = {}
        for k, c in self._terms.items():
            nk = f(k)
            acc[nk] = acc[nk] + c if nk in acc else c
        return LinComb(basis or self.basis, acc, self._domain)

    def map_coeffs(self, f: Callable) -> "LinComb":
        return LinComb(self.basis, {k: f(c) for k, c in self._terms.items()})

    def linear_map(self, f: Callable[[Hashable], "LinComb"], basis: str) -> "LinComb":
        """Extend a basis-level map ``key -> LinComb`` linearly."""
        acc: Dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k).items():
                acc[k2] = acc[k2] + c * c2 if k2 in acc else c * c2
        return LinComb(basis, acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        if self.basis != other.basis:
            return False
        if self._domain != other._domain:
            a = self.to_qpoly()._terms
            b = other.to_qpoly()._terms
            return a == b
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    def degree_set(self) -> set:
        return {key_degree(self.basis, k) for k in self._terms}

    def homogeneous_degree(self) -> int:
        degs = self.degree_set()
        if len(degs) != 1:
            raise ValueError("element is not homogeneous (degrees %s)" % sorted(degs))
        return degs.pop()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return "LinComb(%s: %s)" % (self.basis, render(self))

    # -- serialization
    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"key": format_key(self.basis, k), "coeff": str(c)} for k, c in self.sorted_items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LinComb":
        basis = obj["basis"]
        terms = []
        for t in obj["terms"]:
            c = QPoly.parse(t["coeff"])
            coeff: Coeff = c[0] if c.is_constant() else c
            terms.append((parse_key(basis, t["key"]), coeff))
        if any(isinstance(c, QPoly) for _, c in terms):
            terms = [(k, QPoly.coerce(c)) for k, c in terms]
        return cls(basis, terms)

    @classmethod
    def from_json(cls, text: str) -> "LinComb":
        return cls.from_json_obj(json.loads(text))


def bilinear_extend(op: Callable[[Hashable, Hashable], "LinComb"], basis: Optional[str] = None):
    """Lift a basis-level product ``op(k1, k2) -> LinComb`` to LinCombs."""

    def extended(a: LinComb, b: LinComb) -> LinComb:
        out_basis = basis or a.basis
        acc: Dict = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                c = c1 * c2
                for k, c3 in op(k1, k2).items():
                    acc[k] = acc[k] + c * c3 if k in acc else c * c3
        return LinComb(out_basis, acc)

    return extended


class Tensor2:
    """Sparse element of a tensor square: ``(left_key, right_key) -> coeff``.

    ``()`` is the key of the unit on either side for every graded basis used
    here (empty permutation, empty composition, empty set partition).
    """

    __slots__ = ("left", "right", "_terms")

    def __init__(self, left: str, right: str, terms: Union[Mapping, Iterable] = ()):
        self.left, self.right = left, right
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict = {}
        for k, c in items:
            acc[k] = acc[k] + c if k in acc else c
        self._terms = {k: c for k, c in acc.items() if c}

    def items(self):
        return self._terms.items()

    def __getitem__(self, key) -> Coeff:
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if (self.left, self.right) != (other.left, other.right):
            raise TypeError("tensor basis mismatch")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return Tensor2(self.left, self.right, out)

    def scale(self, c: Coeff) -> "Tensor2":
        return Tensor2(self.left, self.right, {k: c * v for k, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return (self.left, self.right, self._terms) == (other.left, other.right, other._terms)

    def __hash__(self):
        return hash((self.left, self.right, frozenset(self._terms.items())))

    @classmethod
    def tensor(cls, a: LinComb, b: LinComb) -> "Tensor2":
        return cls(a.basis, b.basis, {(k1, k2): c1 * c2 for k1, c1 in a.items() for k2, c2 in b.items()})

    def apply(self, f_left: Callable, f_right: Callable) -> "Tensor2":
        """``(f (x) g)``: ``f_left``/``f_right`` map a key to a LinComb."""
        out: Dict = {}
        lb = rb = None
        for (k1, k2), c in self._terms.items():
            x, y = f_left(k1), f_right(k2)
            lb, rb = x.basis, y.basis
            for a, ca in x.items():
                for b, cb in y.items():
                    out[(a, b)] = out.get((a, b), 0) + c * ca * cb
        return Tensor2(lb or self.left, rb or self.right, out)

    def sorted_items(self):
        return sorted(self._terms.items(),
                      key=lambda kv: (sort_key(self.left, kv[0][0]), sort_key(self.right, kv[0][1])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (k1, k2), c in self.sorted_items():
            mono = "%s # %s" % (_mono(self.left, k1), _mono(self.right, k2))
            parts.append(_signed(c, mono, not parts))
        return " ".join(parts).strip()

    __repr__ = __str__

    def to_json_obj(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "terms": [{"left": format_key(self.left, a), "right": format_key(self.right, b), "coeff": str(c)}
                      for (a, b), c in self.sorted_items()],
        }


# -------------------------------------------------------------- key helpers

def key_degree(basis: str, key) -> int:
    if basis in COMPOSITION_BASES:
        return sum(key)
    if basis == "P":
        return key.size
    return len(key)


def sort_key(basis: str, key):
    """Canonical ordering: by degree, then reverse lexicographic for
    compositions (the order used in displays such as ``Y3 + 2 Y21 + Y12``),
    lexicographic for words."""
    if basis in COMPOSITION_BASES:
        return (sum(key), tuple(-x for x in key) + (0,))
    if basis == "P":
        return (key.size, str(key))
    return (len(key), key)


def format_key(basis: str, key) -> str:
    if basis in COMPOSITION_BASES:
        return format_composition(key)
    if basis == "P":
        return str(key)
    return ",".join(str(x) for x in key)


def parse_key(basis: str, text: str):
    if basis in COMPOSITION_BASES:
        return parse_composition(text)
    if basis == "P":
        return SetPartition.parse(text)
    return parse_word(text)


_LETTER = {"G": "G", "F": "F", "QF": "F", "QM": "M", "WM": "M", "P": "P", "Y": "Y", "word": ""}


def _mono(basis: str, key) -> str:
    if basis == "Y":
        body = format_word(key) if key and all(x < 10 for x in key) else format_composition(key)
    elif basis in COMPOSITION_BASES:
        body = format_composition(key)
    elif basis == "P":
        body = "{" + str(key) + "}"
    else:
        body = format_word(key) if key else "()"
        if basis == "word":
            return "[" + body + "]"
    return _LETTER[basis] + body


def _signed(c: Coeff, mono: str, first: bool) -> str:
    if isinstance(c, QPoly) and not c.is_constant():
        body = "(%s) %s" % (c, mono)
        return body if first else "+ " + body
    val = c[0] if isinstance(c, QPoly) else c
    sign = "-" if val < 0 else "+"
    mag = abs(val)
    body = mono if mag == 1 else "%d %s" % (mag, mono)
    if first:
        return ("-" if val < 0 else "") + body
    return "%s %s" % (sign, body)


def render(a: LinComb) -> str:
    """Human-readable form, e.g. ``Y3 + 2 Y21 + Y12 + Y111``."""
    if not a:
        return "0"
    parts = []
    for k, c in a.sorted_items():
        parts.append(_signed(c, _mono(a.basis, k), not parts))
    return " ".join(parts)

"""Sparse Laurent polynomials with integer coefficients in k commuting variables.

Polynomials are immutable.  A polynomial is a map from exponent vectors
(tuples of k ints, possibly negative) to nonzero Python ints, so coefficients
never overflow.  Variables are positional; the display prefix (``a`` or ``t``)
is chosen by the caller when rendering.

Canonical term order compares exponent vectors lexicographically with the
highest-indexed variable most significant, so ``1 + t1 - t2`` and
``1 - a1 + a1*a2`` print in the order one would write them by hand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

__all__ = [
    "LaurentPolynomial",
    "VariableMap",
    "VariableCountError",
    "NonUnit",
    "term_key",
    "poly_sum",
    "poly_product",
    "monomial_inverse",
    "map_variables",
]

Exps = tuple  # tuple[int, ...]


class VariableCountError(ValueError):
    """Two operands live in rings with different numbers of variables."""


class NonUnit(ArithmeticError):
    """Only +-monomials are invertible in a Laurent polynomial ring."""


def term_key(exps: Sequence[int]) -> tuple:
    """Sort key realising the canonical term order."""
    return tuple(reversed(exps))


class LaurentPolynomial:
    """Element of Z[x1^+-1, ..., xk^+-1].

    >>> a1, a2 = LaurentPolynomial.variable(1, 2), LaurentPolynomial.variable(2, 2)
    >>> str((1 - a1) * (1 - a2) + a2)
    '1 - a1 + a1*a2'
    """

    __slots__ = ("_k", "_terms", "_hash")

    def __init__(self, k: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        if k < 0:
            raise ValueError("variable count must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, int] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise VariableCountError(
                    f"exponent vector {exps} has length {len(exps)}, expected {k}")
            acc[exps] = acc.get(exps, 0) + int(c)
        self._k = k
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, k: int, terms: dict) -> "LaurentPolynomial":
        # trusted constructor: terms already canonical (no zeros, right length)
        p = cls.__new__(cls)
        p._k = k
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "LaurentPolynomial":
        return cls._raw(k, {})

    @classmethod
    def constant(cls, c: int, k: int) -> "LaurentPolynomial":
        return cls(k, {(0,) * k: c})

    @classmethod
    def one(cls, k: int) -> "LaurentPolynomial":
        return cls._raw(k, {(0,) * k: 1})

    @classmethod
    def variable(cls, i: int, k: int, power: int = 1) -> "LaurentPolynomial":
        """The monomial x_i^power (1-based index)."""
        if not 1 <= i <= k:
            raise IndexError(f"variable index {i} outside 1..{k}")
        exps = [0] * k
        exps[i - 1] = power
        return cls._raw(k, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def parse(cls, text: str, k: int) -> "LaurentPolynomial":
        """Read the textual form produced by ``str``/``render``.

        Any single-letter variable prefix is accepted (``a3``, ``t1``, ``x2``);
        with ``k == 1`` the index may be dropped (``1 - t``).
        """
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero(k)
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[Exps, int] = {}
        for sign, body in re.findall(r"([+-])((?:[^+\-^]|\^-?\d+)+)", s):
            coeff = 1
            exps = [0] * k
            for factor in body.split("*"):
                m = re.fullmatch(r"([A-Za-z])(\d*)(?:\^(-?\d+))?", factor)
                if m and (m.group(2) or k == 1):
                    i = int(m.group(2) or 1)
                    if not 1 <= i <= k:
                        raise VariableCountError(f"variable {factor!r} outside 1..{k}")
                    exps[i - 1] += int(m.group(3) or 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + (coeff if sign == "+" else -coeff)
        return cls(k, acc)

    # -- basic queries ----------------------------------------------------

    @property
    def k(self) -> int:
        return self._k

    @property
    def terms(self) -> dict:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: term_key(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self._k, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def degree_range(self, i: int) -> Optional[tuple[int, int]]:
        """(lowest, highest) exponent of variable i, or None for the zero polynomial."""
        if not self._terms:
            return None
        col = [e[i - 1] for e in self._terms]
        return min(col), max(col)

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a point with nonzero rational coordinates."""
        if len(point) != self._k:
            raise VariableCountError(f"point has {len(point)} coordinates, expected {self._k}")
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = Fraction(c)
            for x, e in zip(point, exps):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "LaurentPolynomial") -> None:
        if self._k != other._k:
            raise VariableCountError(f"variable counts differ: {self._k} vs {other._k}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self._k)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self._k, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self._k, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(self._k, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, p: int):
        if p < 0:
            return monomial_inverse(self) ** (-p)
        result = LaurentPolynomial.one(self._k)
        base = self
        while p:
            if p & 1:
                result = result * base
            base = base * base
            p >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self._k)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._k == other._k and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._k, frozenset(self._terms.items())))
        return self._hash

    # -- rendering --------------------------------------------------------

    def render(self, prefix: str = "a") -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.items():
            factors = []
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    factors.append(f"{prefix}{i}")
                elif e:
                    factors.append(f"{prefix}{i}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render("a")

    def __repr__(self):
        return f"LaurentPolynomial({self._k}, {self.render('a')!r})"


@dataclass(frozen=True)
class VariableMap:
    """Ring homomorphism sending each source variable to a target variable or to 1.

    ``image[i]`` is the 1-based target index for source variable ``i + 1``, or
    ``None`` when that variable is sent to the constant 1.
    """

    source_k: int
    target_k: int
    image: tuple

    def __post_init__(self):
        if len(self.image) != self.source_k:
            raise VariableCountError(
                f"image has {len(self.image)} entries, expected {self.source_k}")
        for j in self.image:
            if j is not None and not 1 <= j <= self.target_k:
                raise IndexError(f"target index {j} outside 1..{self.target_k}")

    @classmethod
    def identity(cls, k: int) -> "VariableMap":
        return cls(k, k, tuple(range(1, k + 1)))

    @classmethod
    def from_permutation(cls, images: Sequence[int]) -> "VariableMap":
        """x_i -> x_{images[i-1]}."""
        return cls(len(images), len(images), tuple(images))

    @classmethod
    def collapse(cls, k: int) -> "VariableMap":
        """Every variable to the single variable t."""
        return cls(k, 1, (1,) * k)

    @classmethod
    def eval_at_one(cls, k: int) -> "VariableMap":
        return cls(k, 0, (None,) * k)

    def then(self, other: "VariableMap") -> "VariableMap":
        """Composite: apply ``self`` first, then ``other``."""
        if other.source_k != self.target_k:
            raise VariableCountError(
                f"cannot compose: {self.target_k} targets vs {other.source_k} sources")
        return VariableMap(
            self.source_k, other.target_k,
            tuple(None if j is None else other.image[j - 1] for j in self.image))

    def is_identity(self) -> bool:
        return self.source_k == self.target_k and self.image == tuple(range(1, self.source_k + 1))

    def __call__(self, p: LaurentPolynomial) -> LaurentPolynomial:
        return map_variables(self, p)


def poly_sum(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    p._check(q)
    return p + q


def poly_product(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    p._check(q)
    return p * q


def monomial_inverse(p: LaurentPolynomial) -> LaurentPolynomial:
    if not p.is_unit():
        raise NonUnit(f"{p} is not a unit (only +-monomials are invertible)")
    (exps, c), = p._terms.items()
    return LaurentPolynomial._raw(p.k, {tuple(-e for e in exps): c})


def map_variables(m: VariableMap, p: LaurentPolynomial) -> LaurentPolynomial:
    if p.k != m.source_k:
        raise VariableCountError(f"map expects {m.source_k} variables, got {p.k}")
    if m.is_identity():
        return p
    out: dict[Exps, int] = {}
    tk = m.target_k
    for exps, c in p._terms.items():
        new = [0] * tk
        for e, j in zip(exps, m.image):
            if j is not None:
                new[j - 1] += e
        key = tuple(new)
        out[key] = out.get(key, 0) + c
    return LaurentPolynomial._raw(tk, {e: c for e, c in out.items() if c})

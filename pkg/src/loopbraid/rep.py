"""Twisted matrix representations R and Rbar of LB_n over Z[a1^+-1, ..., an^+-1].

Words are folded left to right,

    M <- M^{nu(g)} * G(g)

where ``G(g)`` is the generator matrix and ``nu(g)`` swaps the variables
a_i, a_{i+1} of the generator's transposition.  Inverse sigma matrices are
closed forms obtained from ``G(g)^{nu(g)} * G(g^-1) = I``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .braidword import (
    BraidWord,
    CycleDecomposition,
    Generator,
    IndexOutOfRange,
    Kind,
    Relation,
    cycle_decomposition,
    induced_permutation,
    relations,
)
from .laurent import LaurentPolynomial, VariableCountError, VariableMap, monomial_inverse

__all__ = [
    "RepKind",
    "PolyMatrix",
    "gen_matrix",
    "generator_nu",
    "word_nu",
    "twisted_product",
    "rep_of_word",
    "s_matrix",
    "project_mu",
    "mu_map",
    "burau",
    "verify_relations",
    "RelationCheck",
]


class RepKind(enum.Enum):
    R = "R"
    RBAR = "Rbar"


class PolyMatrix:
    """Square matrix of Laurent polynomials sharing one variable count."""

    __slots__ = ("_rows", "_n", "_k")

    def __init__(self, rows: Sequence[Sequence[LaurentPolynomial]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        ks = {e.k for r in rows for e in r}
        if len(ks) > 1:
            raise VariableCountError(f"entries have mixed variable counts {sorted(ks)}")
        self._rows = rows
        self._n = n
        self._k = ks.pop() if ks else 0

    @classmethod
    def identity(cls, n: int, k: int) -> "PolyMatrix":
        one, zero = LaurentPolynomial.one(k), LaurentPolynomial.zero(k)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, k: int) -> "PolyMatrix":
        zero = LaurentPolynomial.zero(k)
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], k: int) -> "PolyMatrix":
        return cls([[LaurentPolynomial.parse(s, k) for s in r] for r in rows])

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def _check(self, other: "PolyMatrix") -> None:
        if self._n != other._n:
            raise ValueError(f"dimension mismatch: {self._n} vs {other._n}")
        if self._k != other._k:
            raise VariableCountError(f"variable count mismatch: {self._k} vs {other._k}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        zero = LaurentPolynomial.zero(self._k)
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __pow__(self, p: int) -> "PolyMatrix":
        if p < 0:
            raise ValueError("negative matrix powers are not supported")
        result = PolyMatrix.identity(self._n, self._k)
        base = self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base
            p >>= 1
        return result

    def map_entries(self, f: Callable[[LaurentPolynomial], LaurentPolynomial]) -> "PolyMatrix":
        return PolyMatrix([[f(e) for e in r] for r in self._rows])

    def apply(self, m: VariableMap) -> "PolyMatrix":
        """Entrywise image under a variable map (``M^nu``)."""
        if m.source_k != self._k:
            raise VariableCountError(f"map expects {m.source_k} variables, matrix has {self._k}")
        if m.is_identity():
            return self
        return self.map_entries(m)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self._rows)))

    def reverse_basis(self) -> "PolyMatrix":
        """J * M * J with J the order-reversing permutation matrix."""
        return PolyMatrix([list(reversed(r)) for r in reversed(self._rows)])

    def trace(self) -> LaurentPolynomial:
        acc = LaurentPolynomial.zero(self._k)
        for i in range(self._n):
            acc = acc + self._rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(not e for r in self._rows for e in r)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._n == other._n and self._k == other._k and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def render(self, prefix: str = "a") -> str:
        return "\n".join("[" + ", ".join(e.render(prefix) for e in r) + "]" for r in self._rows)

    def to_lists(self, prefix: str = "a") -> list:
        return [[e.render(prefix) for e in r] for r in self._rows]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PolyMatrix({self.to_lists()!r})"


def _embed(block, i: int, n: int, k: int) -> PolyMatrix:
    """I_{i-1} + block + I_{n-i-1}."""
    m = [list(r) for r in PolyMatrix.identity(n, k).rows]
    for r in range(2):
        for c in range(2):
            m[i - 1 + r][i - 1 + c] = block[r][c]
    return PolyMatrix(m)


def _sigma_block(kind: RepKind, i: int, n: int):
    a = lambda j: LaurentPolynomial.variable(j, n)
    one, zero = LaurentPolynomial.one(n), LaurentPolynomial.zero(n)
    if kind is RepKind.R:
        return [[one - a(i + 1), a(i)], [one, zero]]
    return [[zero, a(i)], [one, one - a(i)]]


def _inverse_2x2(block):
    """Inverse of a 2x2 matrix over Lambda whose determinant is a unit."""
    (p, q), (r, s) = block
    det_inv = monomial_inverse(p * s - q * r)
    return [[s * det_inv, -q * det_inv], [-r * det_inv, p * det_inv]]


def _swap_map(i: int, n: int) -> VariableMap:
    im = list(range(1, n + 1))
    im[i - 1], im[i] = i + 1, i
    return VariableMap.from_permutation(im)


def generator_nu(g: Generator, n: int) -> VariableMap:
    """Variable permutation a_i <-> a_{i+1} attached to a generator."""
    return _swap_map(g.index, n)


def word_nu(w: BraidWord) -> VariableMap:
    """nu(w): a_i -> a_{mu(i)} with mu the induced permutation."""
    return VariableMap.from_permutation(induced_permutation(w).images)


def gen_matrix(kind: RepKind, g: Generator, n: int) -> PolyMatrix:
    if not 1 <= g.index <= n - 1:
        raise IndexOutOfRange(f"generator {g} needs index <= {n - 1} in LB_{n}", token=str(g))
    one, zero = LaurentPolynomial.one(n), LaurentPolynomial.zero(n)
    if g.kind is Kind.RHO:
        return _embed([[zero, one], [one, zero]], g.index, n, n)
    block = _sigma_block(kind, g.index, n)
    if g.sign < 0:
        nu = _swap_map(g.index, n)
        block = _inverse_2x2([[nu(e) for e in row] for row in block])
    return _embed(block, g.index, n, n)


def twisted_product(A: PolyMatrix, B: PolyMatrix, nu_b_prime: VariableMap) -> PolyMatrix:
    """A^{nu(b')} * B."""
    return A.apply(nu_b_prime) @ B


def rep_of_word(kind: RepKind, w: BraidWord) -> PolyMatrix:
    n = w.n
    M = PolyMatrix.identity(n, n)
    for g in w.gens:
        M = twisted_product(M, gen_matrix(kind, g, n), generator_nu(g, n))
    return M


def s_matrix(w: BraidWord) -> PolyMatrix:
    return rep_of_word(RepKind.RBAR, w) - rep_of_word(RepKind.R, w)


def mu_map(cd: CycleDecomposition) -> VariableMap:
    """pi_mu: a_i -> t_j where circle i lies in the j-th cycle."""
    return VariableMap(cd.n, cd.m, cd.assignment())


def project_mu(M: PolyMatrix, cd: CycleDecomposition) -> PolyMatrix:
    if M.k != cd.n:
        raise VariableCountError(f"matrix has {M.k} variables but permutation acts on {cd.n}")
    return M.apply(mu_map(cd))


def burau(w: BraidWord) -> PolyMatrix:
    """Unreduced Burau matrix: every a_i -> t."""
    return rep_of_word(RepKind.R, w).apply(VariableMap.collapse(w.n))


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    kind: str
    holds: bool

    def __str__(self):
        return f"[{'pass' if self.holds else 'FAIL'}] {self.kind} {self.relation}"


def verify_relations(n: int, kinds: Iterable[RepKind] = (RepKind.R, RepKind.RBAR)) -> list[RelationCheck]:
    """Check every relation instance of LB_n under each representation kind."""
    if n < 2:
        raise ValueError("relations need n >= 2")
    kinds = sorted(set(kinds), key=lambda k: k.value)
    out = []
    for rel in relations(n):
        for kind in kinds:
            holds = rep_of_word(kind, rel.lhs) == rep_of_word(kind, rel.rhs)
            out.append(RelationCheck(rel, kind.value, holds))
    return out


def projected_rep(kind: RepKind, w: BraidWord, cd: CycleDecomposition | None = None) -> PolyMatrix:
    if cd is None:
        cd = cycle_decomposition(induced_permutation(w))
    return project_mu(rep_of_word(kind, w), cd)

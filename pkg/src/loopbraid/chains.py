"""Group-ring oracle: free words, conjugating automorphisms, Fox calculus, chain matrices.

Free words use Tietze letters: ``+i`` is x_i and ``-i`` is x_i^-1.  Words are
kept freely reduced at all times so equality is syntactic.

Automorphisms compose in word order: the automorphism of ``b b'`` sends
x to ``aut(b')(aut(b)(x))``.  With that convention the Fox chain rule reads

    J(b b') = J(b)^{aut(b')} J(b')

which is the same twisted fold that the rep module uses after abelianisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .braidword import BraidWord, Generator, IndexOutOfRange, Kind, Perm, Relation, relations
from .laurent import LaurentPolynomial
from .rep import PolyMatrix

__all__ = [
    "FreeWord",
    "GroupRingElement",
    "ConjAutomorphism",
    "ChainMatrix",
    "NotConjugating",
    "free_reduce",
    "aut_of_generator",
    "aut_of_word",
    "compose_aut",
    "fox_derivative",
    "fox_jacobian",
    "chain_gen_matrix",
    "chain_matrix_of_word",
    "abelianize",
    "verify_chain_relations",
    "verify_aut_relations",
]


class NotConjugating(ValueError):
    """Generator images do not have the form W x_j W^-1 for a permutation j."""


def free_reduce(letters: Iterable[int]) -> tuple:
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _inv(letters: tuple) -> tuple:
    return tuple(-x for x in reversed(letters))


def _render_letters(letters: tuple) -> str:
    if not letters:
        return "1"
    return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in letters)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced element of F_n."""

    n: int
    letters: tuple = ()

    def __post_init__(self):
        for x in self.letters:
            if not 1 <= abs(x) <= self.n:
                raise ValueError(f"letter {x} outside rank {self.n}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def gen(cls, i: int, n: int, exp: int = 1) -> "FreeWord":
        return cls(n, (i,) * exp if exp > 0 else (-i,) * (-exp))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.n, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.n, _inv(self.letters))

    def exponent_sums(self) -> tuple:
        sums = [0] * self.n
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(sums)

    def cyclic_core(self) -> tuple:
        w = self.letters
        lo, hi = 0, len(w)
        while hi - lo >= 2 and w[lo] == -w[hi - 1]:
            lo += 1
            hi -= 1
        return w[lo:hi]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return _render_letters(self.letters)


class GroupRingElement:
    """Finite Z-linear combination of reduced free words (keys are letter tuples)."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = {}
        for w, c in items:
            if isinstance(w, FreeWord):
                w = w.letters
            w = free_reduce(w)
            acc[w] = acc.get(w, 0) + c
        self.n = n
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "GroupRingElement":
        e = cls.__new__(cls)
        e.n = n
        e._terms = terms
        return e

    @classmethod
    def zero(cls, n: int) -> "GroupRingElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "GroupRingElement":
        return cls._raw(n, {(): 1})

    @classmethod
    def word(cls, letters: Sequence[int], n: int, coeff: int = 1) -> "GroupRingElement":
        return cls(n, {tuple(letters): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            if other.n != self.n:
                raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return GroupRingElement(self.n, {(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return GroupRingElement._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw(self.n, {w: -c for w, c in self._terms.items()})

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
        out: dict[tuple, int] = {}
        for u, c in self._terms.items():
            for v, d in other._terms.items():
                w = free_reduce(u + v)
                out[w] = out.get(w, 0) + c * d
        return GroupRingElement._raw(self.n, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def unit_inverse(self) -> "GroupRingElement":
        """Inverse of +-w; other elements are not handled."""
        if len(self._terms) != 1:
            raise ArithmeticError(f"{self} is not a trivial unit")
        (w, c), = self._terms.items()
        if c not in (1, -1):
            raise ArithmeticError(f"{self} is not a trivial unit")
        return GroupRingElement._raw(self.n, {_inv(w): c})

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement(self.n, {(): other})
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            body = _render_letters(w)
            mag = abs(c)
            if mag != 1:
                body = f"{mag}*{body}" if w else str(mag)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"GroupRingElement({self.n}, {str(self)!r})"


class ConjAutomorphism:
    """Automorphism x_i -> W_i x_{perm(i)} W_i^-1 of F_n, stored by generator images."""

    __slots__ = ("n", "images", "perm", "_inverses")

    def __init__(self, n: int, images: Sequence[Sequence[int]]):
        if len(images) != n:
            raise ValueError(f"need {n} images, got {len(images)}")
        self.n = n
        self.images = tuple(free_reduce(im) for im in images)
        targets = []
        for i, im in enumerate(self.images, start=1):
            core = FreeWord(n, im).cyclic_core()
            if len(core) != 1 or core[0] < 0:
                raise NotConjugating(f"image of x{i} ({_render_letters(im)}) is not a conjugate of a generator")
            targets.append(core[0])
        try:
            self.perm = Perm(tuple(targets))
        except ValueError:
            raise NotConjugating(f"generator targets {targets} do not form a permutation") from None
        self._inverses = tuple(_inv(im) for im in self.images)

    @classmethod
    def identity(cls, n: int) -> "ConjAutomorphism":
        return cls(n, [(i,) for i in range(1, n + 1)])

    def apply_letters(self, letters: Sequence[int]) -> tuple:
        out: list[int] = []
        for x in letters:
            out.extend(self.images[x - 1] if x > 0 else self._inverses[-x - 1])
        return free_reduce(out)

    def __call__(self, u):
        if isinstance(u, FreeWord):
            return FreeWord(self.n, self.apply_letters(u.letters))
        if isinstance(u, GroupRingElement):
            out: dict[tuple, int] = {}
            for w, c in u._terms.items():
                v = self.apply_letters(w)
                out[v] = out.get(v, 0) + c
            return GroupRingElement._raw(self.n, {w: c for w, c in out.items() if c})
        raise TypeError(f"cannot apply automorphism to {type(u).__name__}")

    def __eq__(self, other):
        if not isinstance(other, ConjAutomorphism):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return ", ".join(f"x{i} -> {_render_letters(im)}" for i, im in enumerate(self.images, start=1))

    def __repr__(self):
        return f"ConjAutomorphism({self.n}, {self.images!r})"


def aut_of_generator(g: Generator, n: int) -> ConjAutomorphism:
    i = g.index
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {g} needs index <= {n - 1} in F_{n}", token=str(g))
    images = [(j,) for j in range(1, n + 1)]
    if g.kind is Kind.RHO:
        images[i - 1], images[i] = (i + 1,), (i,)
    elif g.sign > 0:
        images[i - 1], images[i] = (i, i + 1, -i), (i,)
    else:
        images[i - 1], images[i] = (i + 1,), (-(i + 1), i, i + 1)
    return ConjAutomorphism(n, images)


def compose_aut(a: ConjAutomorphism, b: ConjAutomorphism) -> ConjAutomorphism:
    """Automorphism of the product ``a b``: apply a first, then b."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    return ConjAutomorphism(a.n, [b.apply_letters(im) for im in a.images])


def aut_of_word(w: BraidWord) -> ConjAutomorphism:
    a = ConjAutomorphism.identity(w.n)
    for g in w.gens:
        a = compose_aut(a, aut_of_generator(g, w.n))
    return a


def fox_derivative(u, i: int, n: int | None = None) -> GroupRingElement:
    """Left Fox derivative d u / d x_i; ``u`` is a FreeWord or a letter sequence."""
    if isinstance(u, FreeWord):
        n, letters = u.n, u.letters
    else:
        letters = free_reduce(u)
        if n is None:
            raise ValueError("rank n is required for raw letter sequences")
    out: dict[tuple, int] = {}
    for pos, x in enumerate(letters):
        if x == i:
            w, c = letters[:pos], 1
        elif x == -i:
            w, c = letters[:pos + 1], -1
        else:
            continue
        w = free_reduce(w)
        out[w] = out.get(w, 0) + c
    return GroupRingElement._raw(n, {w: c for w, c in out.items() if c})


class ChainMatrix:
    """Square matrix over Z F_n."""

    __slots__ = ("n", "rank", "rows")

    def __init__(self, rows: Sequence[Sequence[GroupRingElement]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")
        ranks = {e.n for r in self.rows for e in r}
        if len(ranks) > 1:
            raise ValueError(f"entries have mixed ranks {sorted(ranks)}")
        self.rank = ranks.pop() if ranks else 0

    @classmethod
    def identity(cls, n: int, rank: int | None = None) -> "ChainMatrix":
        rank = n if rank is None else rank
        one, zero = GroupRingElement.one(rank), GroupRingElement.zero(rank)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "ChainMatrix") -> "ChainMatrix":
        if self.n != other.n or self.rank != other.rank:
            raise ValueError("dimension or rank mismatch")
        zero = GroupRingElement.zero(self.rank)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ChainMatrix(out)

    def twist(self, a: ConjAutomorphism) -> "ChainMatrix":
        """Entrywise image under an automorphism (``M^{aut}``)."""
        return ChainMatrix([[a(e) for e in r] for r in self.rows])

    def trace(self) -> GroupRingElement:
        acc = GroupRingElement.zero(self.rank)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def abelianize(self) -> PolyMatrix:
        return PolyMatrix([[abelianize(e) for e in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, ChainMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)


def fox_jacobian(a: ConjAutomorphism) -> ChainMatrix:
    return ChainMatrix([[fox_derivative(im, j, a.n) for j in range(1, a.n + 1)] for im in a.images])


def _block_inverse(block):
    """Two-sided inverse of [[p, u], [1, 0]] or [[0, u], [1, c]] with u a trivial unit."""
    (p, u), (r, s) = block
    if r != 1:
        raise ArithmeticError("unsupported block shape")
    ui = u.unit_inverse()
    one, zero = GroupRingElement.one(u.n), GroupRingElement.zero(u.n)
    if not s:
        return [[zero, one], [ui, -(ui * p)]]
    if not p:
        return [[-(s * ui), one], [ui, zero]]
    raise ArithmeticError("unsupported block shape")


def chain_gen_matrix(q: int, g: Generator, n: int) -> ChainMatrix:
    if q not in (1, 2):
        raise ValueError(f"chain degree must be 1 or 2, got {q}")
    i = g.index
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {g} needs index <= {n - 1} in LB_{n}", token=str(g))
    one, zero = GroupRingElement.one(n), GroupRingElement.zero(n)
    if g.kind is Kind.RHO:
        block = [[zero, one], [one, zero]]
    else:
        xi = GroupRingElement.word((i,), n)
        if q == 1:
            block = [[one - GroupRingElement.word((i, i + 1, -i), n), xi], [one, zero]]
        else:
            block = [[zero, xi], [one, one - xi]]
        if g.sign < 0:
            inv_aut = aut_of_generator(g, n)
            block = _block_inverse([[inv_aut(e) for e in row] for row in block])
    rows = [list(r) for r in ChainMatrix.identity(n).rows]
    for r in range(2):
        for c in range(2):
            rows[i - 1 + r][i - 1 + c] = block[r][c]
    return ChainMatrix(rows)


def chain_matrix_of_word(q: int, w: BraidWord) -> ChainMatrix:
    n = w.n
    M = ChainMatrix.identity(n)
    for g in w.gens:
        M = M.twist(aut_of_generator(g, n)) @ chain_gen_matrix(q, g, n)
    return M


def abelianize(e: GroupRingElement) -> LaurentPolynomial:
    out: dict[tuple, int] = {}
    for w, c in e._terms.items():
        sums = [0] * e.n
        for x in w:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        key = tuple(sums)
        out[key] = out.get(key, 0) + c
    return LaurentPolynomial(e.n, out)


@dataclass(frozen=True)
class ChainRelationCheck:
    relation: Relation
    kind: str
    holds: bool

    def __str__(self):
        return f"[{'pass' if self.holds else 'FAIL'}] {self.kind} {self.relation}"


def verify_chain_relations(n: int, degrees: Iterable[int] = (1, 2)) -> list[ChainRelationCheck]:
    out = []
    degrees = sorted(set(degrees))
    for rel in relations(n):
        for q in degrees:
            holds = chain_matrix_of_word(q, rel.lhs) == chain_matrix_of_word(q, rel.rhs)
            out.append(ChainRelationCheck(rel, f"A{q}", holds))
    return out


def verify_aut_relations(n: int) -> list[ChainRelationCheck]:
    return [ChainRelationCheck(rel, "Aut", aut_of_word(rel.lhs) == aut_of_word(rel.rhs))
            for rel in relations(n)]

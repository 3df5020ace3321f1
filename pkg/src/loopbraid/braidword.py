"""Loop braid words: parsing, rendering, induced permutations, cycles.

A word is read left to right and the leftmost generator acts first.  The
permutation of a word is therefore ``tau_k o ... o tau_1`` where ``tau_j`` is
the transposition of the j-th generator.  Every other module (matrix fold,
automorphism composition) uses the same convention.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Kind",
    "Generator",
    "BraidWord",
    "Perm",
    "CycleDecomposition",
    "WordSyntaxError",
    "IndexOutOfRange",
    "parse_word",
    "render_word",
    "induced_permutation",
    "cycle_decomposition",
    "mirror_reverse",
    "inverse_word",
    "relations",
    "Relation",
    "all_words",
    "random_word",
    "generator_permutation",
]


class WordSyntaxError(ValueError):
    """Malformed braid word; carries the offending token and its offset."""

    def __init__(self, message: str, token: str = "", position: int = -1):
        super().__init__(message)
        self.token = token
        self.position = position


class IndexOutOfRange(ValueError):
    """Generator index outside 1..n-1."""

    def __init__(self, message: str, token: str = "", position: int = -1):
        super().__init__(message)
        self.token = token
        self.position = position


class Kind(enum.Enum):
    SIGMA = "s"
    RHO = "r"


@dataclass(frozen=True)
class Generator:
    kind: Kind
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise IndexOutOfRange(f"generator index must be positive, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.kind is Kind.RHO and self.sign != 1:
            # rho_i^2 = 1
            object.__setattr__(self, "sign", 1)

    @classmethod
    def sigma(cls, i: int, sign: int = 1) -> "Generator":
        return cls(Kind.SIGMA, i, sign)

    @classmethod
    def rho(cls, i: int) -> "Generator":
        return cls(Kind.RHO, i, 1)

    @property
    def inverse(self) -> "Generator":
        return Generator(self.kind, self.index, -self.sign)

    def __str__(self):
        return f"{self.kind.value}{self.index}" + ("'" if self.sign < 0 else "")


@dataclass(frozen=True)
class BraidWord:
    n: int
    gens: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be at least 1, got {self.n}")
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.index > self.n - 1:
                raise IndexOutOfRange(
                    f"generator {g} needs index <= {self.n - 1} in LB_{self.n}", token=str(g))

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.gens)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError(f"cannot concatenate words in LB_{self.n} and LB_{other.n}")
        return BraidWord(self.n, self.gens + other.gens)

    def __pow__(self, p: int) -> "BraidWord":
        if p < 0:
            return inverse_word(self) ** (-p)
        return BraidWord(self.n, self.gens * p)

    def __str__(self):
        return render_word(self)


@dataclass(frozen=True)
class Perm:
    """Bijection of {1..n}; ``images[i - 1]`` is the image of i."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Perm":
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Perm") -> "Perm":
        """Apply ``self`` first, then ``other``."""
        return Perm(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self):
        cyc = [c for c in cycle_decomposition(self).cycles if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class CycleDecomposition:
    n: int
    cycles: tuple

    @property
    def m(self) -> int:
        return len(self.cycles)

    def cycle_of(self, i: int) -> int:
        """1-based index j of the cycle containing circle i."""
        for j, c in enumerate(self.cycles, start=1):
            if i in c:
                return j
        raise ValueError(f"{i} not in 1..{self.n}")

    def assignment(self) -> tuple:
        """Tuple whose (i-1)-th entry is the cycle index of circle i."""
        out = [0] * self.n
        for j, c in enumerate(self.cycles, start=1):
            for i in c:
                out[i - 1] = j
        return tuple(out)

    def lengths(self) -> tuple:
        return tuple(len(c) for c in self.cycles)


_TOKEN = re.compile(r"(?P<kind>[srσρ])(?P<index>\d+)(?P<suffix>'|\^[+-]?\d+)?")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse a braid word such as ``"s1 s3"``, ``"σ1 ρ2 s1^-2"`` or ``"r2'"``.

    ``^k`` expands to |k| copies; negative k (or ``'``) inverts the generator.
    Tokens may be separated by whitespace or written adjacently.
    """
    if n < 1:
        raise ValueError(f"strand count must be at least 1, got {n}")
    gens: list[Generator] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            end = pos
            while end < len(text) and not text[end].isspace():
                end += 1
            tok = text[pos:end]
            raise WordSyntaxError(f"bad token {tok!r} at position {pos}", tok, pos)
        tok = m.group(0)
        index = int(m.group("index"))
        if index == 0:
            raise WordSyntaxError(f"bad token {tok!r} at position {pos}: index must be nonzero",
                                  tok, pos)
        if index > n - 1:
            raise IndexOutOfRange(
                f"token {tok!r} at position {pos}: index {index} outside 1..{n - 1} for n={n}",
                tok, pos)
        suffix = m.group("suffix")
        if suffix is None:
            power = 1
        elif suffix == "'":
            power = -1
        else:
            power = int(suffix[1:])
        kind = Kind.SIGMA if m.group("kind") in "sσ" else Kind.RHO
        sign = 1 if power > 0 else -1
        gens.extend([Generator(kind, index, sign)] * abs(power))
        pos = m.end()
    return BraidWord(n, tuple(gens))


def render_word(w: BraidWord) -> str:
    return " ".join(str(g) for g in w.gens)


def generator_permutation(g: Generator, n: int) -> Perm:
    return Perm.transposition(g.index, g.index + 1, n)


def induced_permutation(w: BraidWord) -> Perm:
    im = list(range(1, w.n + 1))
    # track where each circle ends up: apply generators in word order
    for g in w.gens:
        i = g.index
        for pos, v in enumerate(im):
            if v == i:
                im[pos] = i + 1
            elif v == i + 1:
                im[pos] = i
    return Perm(tuple(im))


def cycle_decomposition(p: Perm) -> CycleDecomposition:
    seen = set()
    cycles = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = p(start)
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p(j)
        cycles.append(tuple(cyc))
    # starting from increasing minima already yields min-first, sorted cycles
    return CycleDecomposition(p.n, tuple(cycles))


def mirror_reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(Generator(g.kind, w.n - g.index, g.sign) for g in reversed(w.gens)))


def inverse_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(g.inverse for g in reversed(w.gens)))


@dataclass(frozen=True)
class Relation:
    """One instance of a defining relation: ``lhs == rhs`` in LB_n."""

    family: str
    indices: tuple
    lhs: BraidWord
    rhs: BraidWord

    def __str__(self):
        return f"{self.family}{self.indices}: {render_word(self.lhs) or '1'} = {render_word(self.rhs) or '1'}"


def relations(n: int) -> list[Relation]:
    """All instances of the eight relation families of LB_n, ordered by family then indices."""
    s, r = Generator.sigma, Generator.rho

    def w(*gens):
        return BraidWord(n, gens)

    out: list[Relation] = []
    idx = range(1, n)
    far = [(i, j) for i in idx for j in idx if abs(i - j) > 1]
    for i in range(1, n - 1):
        out.append(Relation("I", (i,), w(s(i), s(i + 1), s(i)), w(s(i + 1), s(i), s(i + 1))))
    for i, j in far:
        out.append(Relation("II", (i, j), w(s(i), s(j)), w(s(j), s(i))))
    for i in range(1, n - 1):
        out.append(Relation("III", (i,), w(r(i), r(i + 1), r(i)), w(r(i + 1), r(i), r(i + 1))))
    for i, j in far:
        out.append(Relation("IV", (i, j), w(r(i), r(j)), w(r(j), r(i))))
    for i in idx:
        out.append(Relation("V", (i,), w(r(i), r(i)), w()))
    for i, j in far:
        out.append(Relation("VI", (i, j), w(s(i), r(j)), w(r(j), s(i))))
    for i in range(1, n - 1):
        out.append(Relation("VII", (i,), w(s(i), r(i + 1), r(i)), w(r(i + 1), r(i), s(i + 1))))
    for i in range(1, n - 1):
        out.append(Relation("VIII", (i,), w(r(i), s(i + 1), s(i)), w(s(i + 1), s(i), r(i + 1))))
    return out


def all_words(n: int, max_len: int, signed: bool = True) -> Iterator[BraidWord]:
    """Every word of length <= max_len over the generators of LB_n (shortlex order)."""
    letters = []
    for i in range(1, n):
        letters.append(Generator.sigma(i))
        if signed:
            letters.append(Generator.sigma(i, -1))
        letters.append(Generator.rho(i))
    frontier: list[tuple] = [()]
    yield BraidWord(n, ())
    for _ in range(max_len):
        frontier = [t + (g,) for t in frontier for g in letters]
        for t in frontier:
            yield BraidWord(n, t)


def random_word(rng, n: int, length: int, kinds: Sequence[Kind] = (Kind.SIGMA, Kind.RHO)) -> BraidWord:
    """Uniform random word of the given length; ``rng`` is a ``random.Random``."""
    if n < 2:
        return BraidWord(n, ())
    gens = []
    for _ in range(length):
        kind = rng.choice(list(kinds))
        i = rng.randint(1, n - 1)
        sign = rng.choice((1, -1)) if kind is Kind.SIGMA else 1
        gens.append(Generator(kind, i, sign))
    return BraidWord(n, tuple(gens))

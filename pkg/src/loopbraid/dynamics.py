"""Lefschetz polynomial, Nielsen-class decomposition and periodic-point bounds.

For a loop braid word w with permutation mu split into cycles mu_1..mu_m,

    L(w) = 1 + tr pi_mu(Rbar(w) - R(w))  in  Z[t1^+-1, ..., tm^+-1]

Each term ``c * t1^i1 ... tm^im`` is one Nielsen class: ``c`` is its fixed
point index and ``(i1, ..., im)`` its linking numbers with the sub-links
formed by the circles of each cycle.  Every report is recomputed through the
group-ring chain matrices and the two results must agree exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .braidword import (
    BraidWord,
    CycleDecomposition,
    Generator,
    Perm,
    cycle_decomposition,
    induced_permutation,
    inverse_word,
)
from .chains import abelianize, chain_matrix_of_word
from .laurent import LaurentPolynomial, VariableMap
from .rep import RepKind, mu_map, project_mu, rep_of_word, s_matrix

__all__ = [
    "OracleMismatch",
    "Conformance",
    "NielsenClassEntry",
    "LefschetzReport",
    "PeriodicBound",
    "lefschetz_polynomial",
    "oracle_polynomial",
    "lefschetz_report",
    "trace_power_poly",
    "trace_power_poly_twisted",
    "periodic_bound",
    "bound_from_polynomial",
    "circle_periods",
    "conjugation_covariance",
    "PAPER_EXAMPLE_WORD",
    "PAPER_EXAMPLE_POLYNOMIAL",
]


class OracleMismatch(RuntimeError):
    """Matrix pipeline and group-ring oracle disagree; an implementation fault."""


class Conformance(enum.Enum):
    MATCHES = "matches_paper_example"
    DIFFERS = "differs"
    NOT_APPLICABLE = "not_applicable"


# the published worked example: sigma_1 sigma_3 in LB_4 with value 1 + t1 - t2
PAPER_EXAMPLE_WORD = BraidWord(4, (Generator.sigma(1), Generator.sigma(3)))
PAPER_EXAMPLE_POLYNOMIAL = LaurentPolynomial(2, {(0, 0): 1, (1, 0): 1, (0, 1): -1})


@dataclass(frozen=True)
class NielsenClassEntry:
    linking: tuple
    index: int

    def __post_init__(self):
        if self.index == 0:
            raise ValueError("zero-index classes are not reported")


@dataclass(frozen=True)
class LefschetzReport:
    word: BraidWord
    mu: Perm
    cycles: CycleDecomposition
    polynomial: LaurentPolynomial
    classes: tuple
    nielsen_lower_bound: int
    paper_conformance: Conformance
    paper_value: Optional[LaurentPolynomial] = None

    @property
    def index_sum(self) -> int:
        return self.polynomial.coefficient_sum()

    def sublinks(self) -> list:
        """Circles of each cycle; the j-th sub-link is paired with t_j."""
        return [list(c) for c in self.cycles.cycles]


@dataclass(frozen=True)
class PeriodicBound:
    p: int
    trace_poly: LaurentPolynomial
    M: int
    n_p: int
    raw_bound: int
    clamped_bound: int
    counted: tuple = field(default=())


def _cycles(w: BraidWord) -> CycleDecomposition:
    return cycle_decomposition(induced_permutation(w))


def lefschetz_polynomial(w: BraidWord, cd: CycleDecomposition | None = None) -> LaurentPolynomial:
    """1 + tr S(w)^{pi_mu} through the Laurent-matrix pipeline."""
    cd = cd or _cycles(w)
    return 1 + project_mu(s_matrix(w), cd).trace()


def oracle_polynomial(w: BraidWord, cd: CycleDecomposition | None = None) -> LaurentPolynomial:
    """Same quantity from the group-ring chain matrices: pi_mu Ab(1 - tr A1 + tr A2)."""
    cd = cd or _cycles(w)
    tr1 = chain_matrix_of_word(1, w).trace()
    tr2 = chain_matrix_of_word(2, w).trace()
    return mu_map(cd)(abelianize(1 - tr1 + tr2))


def _conformance(w: BraidWord, poly: LaurentPolynomial):
    # s1 s3 and s3 s1 are the same braid (far commutation)
    same_word = w.n == PAPER_EXAMPLE_WORD.n and len(w.gens) == 2 \
        and set(w.gens) == set(PAPER_EXAMPLE_WORD.gens)
    if not same_word:
        return Conformance.NOT_APPLICABLE, None
    if poly == PAPER_EXAMPLE_POLYNOMIAL:
        return Conformance.MATCHES, PAPER_EXAMPLE_POLYNOMIAL
    return Conformance.DIFFERS, PAPER_EXAMPLE_POLYNOMIAL


def lefschetz_report(w: BraidWord, check_oracle: bool = True) -> LefschetzReport:
    mu = induced_permutation(w)
    cd = cycle_decomposition(mu)
    poly = lefschetz_polynomial(w, cd)
    if check_oracle:
        other = oracle_polynomial(w, cd)
        if other != poly:
            raise OracleMismatch(
                f"pipeline gives {poly.render('t')} but chain oracle gives {other.render('t')} "
                f"for {w} in LB_{w.n}")
    classes = tuple(NielsenClassEntry(exps, c) for exps, c in poly.items())
    conf, paper_value = _conformance(w, poly)
    return LefschetzReport(w, mu, cd, poly, classes, len(classes), conf, paper_value)


def trace_power_poly(w: BraidWord, p: int) -> LaurentPolynomial:
    """1 - tr(R^{pi_mu})^p + tr(Rbar^{pi_mu})^p using ordinary powers of projected matrices."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    cd = _cycles(w)
    r = project_mu(rep_of_word(RepKind.R, w), cd)
    rbar = project_mu(rep_of_word(RepKind.RBAR, w), cd)
    return 1 - (r ** p).trace() + (rbar ** p).trace()


def trace_power_poly_twisted(w: BraidWord, p: int) -> LaurentPolynomial:
    """Same quantity via the twisted fold of the word repeated p times, projected by mu(w)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    cd = _cycles(w)
    wp = w ** p
    r = project_mu(rep_of_word(RepKind.R, wp), cd)
    rbar = project_mu(rep_of_word(RepKind.RBAR, wp), cd)
    return 1 - r.trace() + rbar.trace()


def circle_periods(w: BraidWord) -> list:
    """(circle, minimal period) pairs; the period is the length of the circle's cycle."""
    cd = _cycles(w)
    out = []
    for i in range(1, w.n + 1):
        out.append((i, len(cd.cycles[cd.cycle_of(i) - 1])))
    return out


def bound_from_polynomial(poly: LaurentPolynomial, p: int, periods) -> PeriodicBound:
    """p * (M - n_p) for a given trace polynomial and circle periods."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    counted = []
    for exps, c in poly.items():
        if math.gcd(p, *(abs(e) for e in exps)) == 1:
            counted.append(exps)
    M = len(counted)
    n_p = sum(1 for _, period in periods if p % period == 0)
    raw = p * (M - n_p)
    return PeriodicBound(p, poly, M, n_p, raw, max(0, raw), tuple(counted))


def periodic_bound(w: BraidWord, p: int) -> PeriodicBound:
    return bound_from_polynomial(trace_power_poly(w, p), p, circle_periods(w))


def conjugation_covariance(w: BraidWord, g: BraidWord) -> dict:
    """Exploratory: compare the report of w with that of g w g^-1.

    Conjugation relabels circles by the permutation of g, so the polynomials
    are compared after matching cycles through that relabelling.  The result
    is informational only.
    """
    conj = g * w * inverse_word(g)
    base = lefschetz_report(w, check_oracle=False)
    other = lefschetz_report(conj, check_oracle=False)
    sigma = induced_permutation(g)
    # circle i of w corresponds to circle sigma^-1(i) of g w g^-1
    inv = sigma.inverse()
    relabel = []
    for cyc in base.cycles.cycles:
        relabel.append(other.cycles.cycle_of(inv(cyc[0])))
    m = VariableMap(base.cycles.m, other.cycles.m, tuple(relabel))
    mapped = m(base.polynomial)
    return {
        "word": str(w),
        "conjugator": str(g),
        "polynomial": base.polynomial.render("t"),
        "conjugate_polynomial": other.polynomial.render("t"),
        "relabelled": mapped.render("t"),
        "covariant": mapped == other.polynomial,
        "same_class_count": base.nielsen_lower_bound == other.nielsen_lower_bound,
    }

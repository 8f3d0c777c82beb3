"""LLT polynomials from k-ribbon tableaux.

H_lam^(k) collects ribbon tableaux by weight, graded by cospin: the
coefficient of m_mu is the sum of t^cospin over k-ribbon tableaux of
shape lam and weight mu.  Cospin is maxspin - spin, with maxspin taken
over all tableaux of the shape regardless of weight, so relative powers
between different weights stay meaningful.  The result is symmetric in
the sense that the coefficient polynomial only depends on the sorted
weight.

Generalized Kostka polynomials are the Schur coefficients of H.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffs import T, ZERO, Coeff
from .errors import TableauError
from .partitions import Partition, partitions_of
from .ribbons import core_and_quotient, ribbon_tableaux


@lru_cache(maxsize=None)
def spin_distributions(
    shape: Partition, k: int
) -> tuple[dict[Partition, dict[int, int]], int]:
    """Spin histograms of the k-ribbon tableaux of `shape`, per weight.

    Returns ({weight -> {spin -> count}}, maxspin).  Weights run over
    partitions of |shape|/k.  Empty when the k-core is nonzero.
    """
    if shape.size % k:
        return {}, 0
    core, _ = core_and_quotient(shape, k)
    if core != Partition():
        return {}, 0
    ribbons = shape.size // k
    table: dict[Partition, dict[int, int]] = {}
    maxspin = 0
    for mu in partitions_of(ribbons):
        hist: dict[int, int] = {}
        for tab in ribbon_tableaux(shape, mu.parts, k):
            hist[tab.spin] = hist.get(tab.spin, 0) + 1
            maxspin = max(maxspin, tab.spin)
        if hist:
            table[mu] = hist
    return table, maxspin


def llt_in_m(S, shape: Partition, k: int):
    """The LLT polynomial H_shape^(k) expanded over the monomial basis."""
    if k < 1:
        raise TableauError("ribbon size must be a positive integer")
    table, maxspin = spin_distributions(shape, k)
    terms: dict[Partition, Coeff] = {}
    for mu, hist in table.items():
        poly = ZERO
        for spin, count in sorted(hist.items()):
            poly = poly + count * T ** (maxspin - spin)
        terms[mu] = poly
    return S.element("m", terms)


def generalized_kostka(S, shape: Partition, mu: Partition, k: int) -> Coeff:
    """Coefficient of s_mu in H_shape^(k); zero when sizes cannot match."""
    if k < 1:
        raise TableauError("ribbon size must be a positive integer")
    if shape.size != k * mu.size:
        return ZERO
    h = llt_in_m(S, shape, k)
    if h.is_zero():
        return ZERO
    return S.convert(h, "s").coefficient(mu)

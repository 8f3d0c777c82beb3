"""Hall-Littlewood and Macdonald bases.

* P: monic orthogonal family for the t-deformed scalar product, built by
  Gram-Schmidt over the monomial basis.
* Q: the same family rescaled so that <Q_lam, P_lam> = 1.
* QP: the dual family under the undeformed product, expanded over Schur
  functions by Kostka polynomials: QP_lam = sum_mu K_{mu,lam}(t) s_mu.
* McdP: monic orthogonal family for the (q,t)-deformed product.
"""

from __future__ import annotations

from .coeffs import ONE, Coeff
from .partitions import Partition, partitions_of
from .tableaux import kostka_poly


def register_qt(S) -> None:
    S.register_basis("P", "Hall-Littlewood P (monic, orthogonal for hall_t)")
    S.register_basis("Q", "Hall-Littlewood Q (scaled dual of P for hall_t)")
    S.register_basis("QP", "modified Hall-Littlewood Q' (Kostka transform of Schur)")
    S.register_basis("McdP", "Macdonald P (monic, orthogonal for hall_qt)")

    def p_to_m(lam: Partition):
        return S.gram_schmidt(lam.size, "hall_t")[lam]

    def mcd_to_m(lam: Partition):
        return S.gram_schmidt(lam.size, "hall_qt")[lam]

    def q_to_p(lam: Partition):
        hl = p_to_m(lam)
        norm = S.scalar(hl, hl, "hall_t")
        return S.element("P", {lam: ONE / norm})

    def qp_to_s(lam: Partition):
        terms: dict[Partition, Coeff] = {}
        for mu in partitions_of(lam.size):
            poly = kostka_poly(mu, lam.parts)
            if not poly.is_zero():
                terms[mu] = poly
        return S.element("s", terms)

    S.declare_conversion("P", "m", p_to_m)
    S.declare_conversion("Q", "P", q_to_p)
    S.declare_conversion("QP", "s", qp_to_s)
    S.declare_conversion("McdP", "m", mcd_to_m)

    S.declare_dual_pair("P", "QP")

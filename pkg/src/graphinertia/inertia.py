"""Graph inertia and the two conjectured inequalities it can violate.

inertia() counts adjacency eigenvalue signs through the characteristic
polynomial and Sturm chains; with check=True it recomputes the triple by
symmetric congruence and insists the two independent exact pipelines
agree. Both conjecture checks report exact integer margins, not just a
verdict: margin = rhs - lhs, so "holds" means margin >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, adjacency_matrix, is_reduced
from .linalg import Inertia, charpoly, congruence_inertia
from .polynomials import root_sign_count

MAIN = "main"    # 2*n+ <= n-*(n- + 1)
ORDER = "order"  # 2*n  <= (n - n+)*(n - n+ + 3)


def inertia(g: Graph, *, check: bool = False) -> Inertia:
    """Adjacency inertia (n+, n0, n-) of g, exactly.

    With check=True the result is recomputed by rational congruence and
    the two pipelines must agree; a mismatch means a bug, not noise, so
    it raises.
    """
    if g.n == 0:
        return Inertia(0, 0, 0)
    a = adjacency_matrix(g)
    signs = root_sign_count(charpoly(a))
    if signs.nonreal:
        raise ArithmeticError(
            "nonreal root count for a symmetric matrix; this is a bug"
        )
    result = Inertia(n_plus=signs.positive, n_zero=signs.zero, n_minus=signs.negative)
    if check:
        other = congruence_inertia(a)
        if other != result:
            raise ArithmeticError(
                f"inertia pipelines disagree: sturm={result.as_tuple()} "
                f"congruence={other.as_tuple()}"
            )
    return result


@dataclass(frozen=True)
class ConjectureReport:
    """Verdict and exact margin of one inequality on one graph."""

    conjecture_id: str
    holds: bool
    lhs: int
    rhs: int
    margin: int
    inertia: Inertia
    order: int

    def to_json(self) -> dict:
        return {
            "conjecture_id": self.conjecture_id,
            "holds": self.holds,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "margin": str(self.margin),
            "inertia": self.inertia.to_json(),
            "order": str(self.order),
        }


def _report(conjecture_id: str, lhs: int, rhs: int, inr: Inertia, n: int) -> ConjectureReport:
    return ConjectureReport(
        conjecture_id=conjecture_id,
        holds=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        inertia=inr,
        order=n,
    )


def check_main_conjecture(g: Graph, inr: Inertia | None = None) -> ConjectureReport:
    """Does 2*n+ <= n-*(n- + 1) hold for g?"""
    inr = inertia(g) if inr is None else inr
    return _report(MAIN, 2 * inr.n_plus, inr.n_minus * (inr.n_minus + 1), inr, g.n)


def check_order_conjecture(g: Graph, inr: Inertia | None = None) -> ConjectureReport:
    """Does 2*n <= (n - n+)*(n - n+ + 3) hold for g?"""
    inr = inertia(g) if inr is None else inr
    hollow = g.n - inr.n_plus
    return _report(ORDER, 2 * g.n, hollow * (hollow + 3), inr, g.n)


@dataclass(frozen=True)
class ViolationSummary:
    """Everything the scanner wants to know about one graph."""

    order: int
    size: int
    reduced: bool
    inertia: Inertia
    main: ConjectureReport
    order_conj: ConjectureReport

    @property
    def any_violation(self) -> bool:
        return not (self.main.holds and self.order_conj.holds)

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "size": str(self.size),
            "reduced": self.reduced,
            "inertia": self.inertia.to_json(),
            "main": self.main.to_json(),
            "order_conj": self.order_conj.to_json(),
        }


def violation_summary(g: Graph, *, check: bool = False) -> ViolationSummary:
    inr = inertia(g, check=check)
    return ViolationSummary(
        order=g.n,
        size=g.edge_count,
        reduced=is_reduced(g),
        inertia=inr,
        main=check_main_conjecture(g, inr),
        order_conj=check_order_conjecture(g, inr),
    )

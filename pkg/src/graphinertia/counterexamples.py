"""The W_k family, the 14-vertex graph H = W_5 - a_1, and claim checks.

W_k glues a k-clique {a_1..a_k} to the Kneser graph on the 2-subsets of
{1..k} ({b_S}), with a_i ~ b_S iff i is in S. The vertex order is fixed
(a_1..a_k, then b_S lexicographically), which pins down the block shape
of the adjacency matrix

    [[J - I,  C ],
     [ C^T,   K ]]

where C is the point--2-subset incidence matrix and K the Kneser
adjacency. Everything asserted about these graphs -- structural matrix
identities, invariant subspaces, closed-form characteristic polynomials,
inertia triples, and the exact margins by which the two conjectured
inequalities fail -- is rechecked here in integer arithmetic, and
verify_claims() aggregates the whole battery into pass/fail records.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from .graphs import Graph, adjacency_matrix, delete_vertex, is_reduced, kneser_graph
from .inertia import check_main_conjecture, check_order_conjecture, inertia
from .linalg import Inertia, Matrix, charpoly, kernel_basis, rank
from .polynomials import IntPoly, expand_factors, root_sign_count

X_MINUS_1 = IntPoly([-1, 1])


# ---------------------------------------------------------------------------
# W_k
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WkBundle:
    """W_k plus the matrices its verification leans on.

    incidence        C: k x N, C[i][S] = 1 iff point i+1 lies in S
    kneser_adj       K: N x N adjacency of the Kneser graph on 2-subsets
    type_quotient    2x2 neighbor-count matrix of the {a, b} vertex split
    balanced_action  2x2 action induced on pairs of mean-zero vectors
    """

    k: int
    graph: Graph
    incidence: Matrix
    kneser_adj: Matrix
    type_quotient: Matrix
    balanced_action: Matrix

    @property
    def n_pairs(self) -> int:
        return comb(self.k, 2)


def build_wk(k: int) -> WkBundle:
    """Construct W_k with vertices a_1..a_k then b_S in lexicographic order.

    a_1 is vertex index 0. Construction needs k >= 3; the closed-form and
    subspace verifications additionally require k >= 5.
    """
    if k < 3:
        raise ValueError(f"W_k needs k >= 3, got {k}")
    pairs = list(combinations(range(1, k + 1), 2))
    n_pairs = len(pairs)
    n = k + n_pairs
    rows = [0] * n
    for i in range(k):
        for j in range(k):
            if i != j:
                rows[i] |= 1 << j
    for s, pair in enumerate(pairs):
        for i in pair:
            rows[i - 1] |= 1 << (k + s)
            rows[k + s] |= 1 << (i - 1)
    for s, ps in enumerate(pairs):
        for t in range(s + 1, n_pairs):
            if not set(ps) & set(pairs[t]):
                rows[k + s] |= 1 << (k + t)
                rows[k + t] |= 1 << (k + s)
    labels = tuple(f"a_{i}" for i in range(1, k + 1)) + tuple(
        "b_{%d,%d}" % pair for pair in pairs
    )
    graph = Graph(n, tuple(rows), labels)

    incidence = Matrix(
        [[1 if i in pair else 0 for pair in pairs] for i in range(1, k + 1)]
    )
    kneser_adj = adjacency_matrix(kneser_graph(k, 2))
    c2 = comb(k - 2, 2)
    type_quotient = Matrix([[k - 1, k - 1], [2, c2]])
    balanced_action = Matrix([[-1, k - 2], [1, 3 - k]])
    return WkBundle(
        k=k,
        graph=graph,
        incidence=incidence,
        kneser_adj=kneser_adj,
        type_quotient=type_quotient,
        balanced_action=balanced_action,
    )


def verify_structure_identities(b: WkBundle) -> dict[str, bool]:
    """Exact matrix checks of the structural identities behind W_k."""
    k, n_pairs = b.k, b.n_pairs
    c = b.incidence
    ct = c.transpose()
    gram_expected = Matrix.identity(k).scale(k - 2) + Matrix.all_ones(k, k)
    kneser_expected = (
        Matrix.all_ones(n_pairs, n_pairs) + Matrix.identity(n_pairs) - ct @ c
    )
    clique = Matrix.all_ones(k, k) - Matrix.identity(k)
    blocks = Matrix.block([[clique, c], [ct, b.kneser_adj]])
    return {
        "gram_identity": c @ ct == gram_expected,
        "kneser_complement": b.kneser_adj == kneser_expected,
        "block_decomposition": adjacency_matrix(b.graph) == blocks,
    }


def _difference_basis(dim: int) -> list[tuple[int, ...]]:
    """Integer basis of the mean-zero subspace: e_i - e_{i+1}."""
    basis = []
    for i in range(dim - 1):
        v = [0] * dim
        v[i] = 1
        v[i + 1] = -1
        basis.append(tuple(v))
    return basis


def _scaled(v: Sequence[int], c: int) -> tuple[int, ...]:
    return tuple(c * x for x in v)


def verify_invariant_subspaces(b: WkBundle) -> dict[str, bool]:
    """Exact checks of the three invariant subspaces of A(W_k).

    All on explicit integer bases: difference vectors for the mean-zero
    space, an elimination-computed basis for the kernel of the incidence
    matrix. Requires k >= 5.
    """
    if b.k < 5:
        raise ValueError("subspace verification is defined for k >= 5")
    k, n_pairs = b.k, b.n_pairs
    c, kn = b.incidence, b.kneser_adj
    ct = c.transpose()
    adj = adjacency_matrix(b.graph)

    out: dict[str, bool] = {}
    zs = _difference_basis(k)
    lifted = [ct.matvec(z) for z in zs]
    out["kneser_shrinks_lifted"] = all(
        kn.matvec(w) == _scaled(w, 3 - k) for w in lifted
    )
    out["gram_scales_mean_zero"] = all(
        c.matvec(w) == _scaled(z, k - 2) for z, w in zip(zs, lifted)
    )

    kernel = kernel_basis(c)
    out["kernel_dimension"] = len(kernel) == n_pairs - k
    out["incidence_rank"] = rank(c) == k
    out["kernel_fixed_by_kneser"] = all(kn.matvec(y) == tuple(y) for y in kernel)
    out["kernel_sums_to_zero"] = all(sum(y) == 0 for y in kernel)

    # the two constant-per-type vectors transform by the type quotient
    q = b.type_quotient
    ones_a = (1,) * k + (0,) * n_pairs
    ones_b = (0,) * k + (1,) * n_pairs
    img_a = adj.matvec(ones_a)
    img_b = adj.matvec(ones_b)
    out["type_quotient_action"] = (
        img_a == tuple(q[0, 0] if i < k else q[1, 0] for i in range(k + n_pairs))
        and img_b == tuple(q[0, 1] if i < k else q[1, 1] for i in range(k + n_pairs))
    )

    # mean-zero pairs (x, C^T z) transform by the 2x2 balanced action
    m = b.balanced_action
    ok = True
    for z in zs:
        w = ct.matvec(z)
        for slot in (0, 1):
            vec = z + (0,) * n_pairs if slot == 0 else (0,) * k + w
            x_new = _scaled(z, m[0, slot])
            z_new = _scaled(z, m[1, slot])
            expected = x_new + ct.matvec(z_new)
            if adj.matvec(vec) != expected:
                ok = False
    out["balanced_action"] = ok
    return out


def quotient_factor_wk(k: int) -> IntPoly:
    """Characteristic polynomial of the 2x2 type quotient of W_k."""
    c2 = comb(k - 2, 2)
    return IntPoly([(k - 1) * (c2 - 2), -(k - 1 + c2), 1])


def balanced_factor_wk(k: int) -> IntPoly:
    """Characteristic polynomial of the 2x2 balanced action: x^2+(k-2)x-1."""
    return IntPoly([-1, k - 2, 1])


def closed_form_charpoly_wk(k: int) -> IntPoly:
    """Expanded closed form of the characteristic polynomial of W_k.

    (x-1)^(N-k) * [x^2+(k-2)x-1]^(k-1) * quotient factor, N = C(k,2).
    """
    if k < 5:
        raise ValueError("closed form is stated for k >= 5")
    n_pairs = comb(k, 2)
    return expand_factors(
        [
            (X_MINUS_1, n_pairs - k),
            (balanced_factor_wk(k), k - 1),
            (quotient_factor_wk(k), 1),
        ]
    )


def wk_inertia_formula(k: int) -> Inertia:
    """The predicted inertia of W_k: (C(k,2)+1, 0, k-1)."""
    return Inertia(comb(k, 2) + 1, 0, k - 1)


# ---------------------------------------------------------------------------
# H = W_5 - a_1
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HBundle:
    """W_5 minus vertex a_1, with its verification matrices.

    The 14 vertices split into parts (A, U, V) of sizes 4, 4, 6:
    A = remaining clique vertices a_i, U = b_{1,i} (pairs through the
    deleted point), V = b_S for S a 2-subset of X = {2,3,4,5}.

    point_incidence     D: 4 x 6 incidence of X against its 2-subsets
    non_incidence       E: 4 x 6 with E[i][S] = 1 iff i not in S
    complement_matching R: 6 x 6 permutation sending S to X minus S
    quotient            3x3 neighbor counts of the (A, U, V) partition
    balanced_action     3x3 action induced on triples of mean-zero vectors
    """

    graph: Graph
    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    point_incidence: Matrix
    non_incidence: Matrix
    complement_matching: Matrix
    quotient: Matrix
    balanced_action: Matrix


H_QUOTIENT = Matrix([[3, 1, 3], [1, 0, 3], [2, 2, 1]])
H_BALANCED_ACTION = Matrix([[-1, 1, 2], [1, 0, -2], [1, -1, -1]])
H_QUOTIENT_CHARPOLY = IntPoly([7, -10, -4, 1])  # x^3 - 4x^2 - 10x + 7


def build_h() -> HBundle:
    """Delete a_1 (vertex 0) from W_5; remaining vertices keep their order."""
    w5 = build_wk(5)
    graph = delete_vertex(w5.graph, 0)
    parts = (tuple(range(0, 4)), tuple(range(4, 8)), tuple(range(8, 14)))

    ground = (2, 3, 4, 5)
    subsets = [frozenset(s) for s in combinations(ground, 2)]
    point_incidence = Matrix(
        [[1 if i in s else 0 for s in subsets] for i in ground]
    )
    non_incidence = Matrix.all_ones(4, 6) - point_incidence
    full = frozenset(ground)
    complement_matching = Matrix(
        [[1 if t == full - s else 0 for t in subsets] for s in subsets]
    )
    return HBundle(
        graph=graph,
        parts=parts,
        point_incidence=point_incidence,
        non_incidence=non_incidence,
        complement_matching=complement_matching,
        quotient=H_QUOTIENT,
        balanced_action=H_BALANCED_ACTION,
    )


class NonEquitableError(ValueError):
    """A vertex disagrees with its cell about neighbor counts into some cell."""

    def __init__(self, vertex: int, cell: int, message: str):
        super().__init__(message)
        self.vertex = vertex
        self.cell = cell


def equitable_quotient(g: Graph, cells: Sequence[Sequence[int]]) -> Matrix:
    """Neighbor-count quotient matrix of an equitable partition.

    Entry (i, j) is the number of neighbors every vertex of cell i has in
    cell j; raises NonEquitableError naming a violating (vertex, cell)
    pair when the counts are not constant on a cell.
    """
    cells = [list(cell) for cell in cells]
    seen: set[int] = set()
    for cell in cells:
        if not cell:
            raise ValueError("empty cell in partition")
        seen.update(cell)
    if len(seen) != sum(len(c) for c in cells) or seen != set(range(g.n)):
        raise ValueError("cells do not partition the vertex set")

    masks = [sum(1 << v for v in cell) for cell in cells]
    out = []
    for i, cell in enumerate(cells):
        counts_first = [(g.rows[cell[0]] & masks[j]).bit_count() for j in range(len(cells))]
        for v in cell[1:]:
            for j in range(len(cells)):
                got = (g.rows[v] & masks[j]).bit_count()
                if got != counts_first[j]:
                    raise NonEquitableError(
                        v,
                        j,
                        f"partition not equitable: vertex {v} has {got} "
                        f"neighbors in cell {j}, vertex {cell[0]} has "
                        f"{counts_first[j]}",
                    )
        out.append(counts_first)
    return Matrix(out)


def verify_h_identities(b: HBundle) -> dict[str, bool]:
    """Exact checks of the identities behind the spectrum of H."""
    d, e, r = b.point_incidence, b.non_incidence, b.complement_matching
    dt = d.transpose()
    et = e.transpose()
    out: dict[str, bool] = {}

    xs = _difference_basis(4)
    lifted = [dt.matvec(x) for x in xs]
    out["gram_scales_mean_zero"] = all(
        d.matvec(w) == _scaled(x, 2) for x, w in zip(xs, lifted)
    )
    out["non_incidence_action"] = all(
        e.matvec(w) == _scaled(x, -2) for x, w in zip(xs, lifted)
    )
    out["non_incidence_transpose"] = all(
        et.matvec(x) == _scaled(w, -1) for x, w in zip(xs, lifted)
    )
    out["matching_negates_lifted"] = all(
        r.matvec(w) == _scaled(w, -1) for w in lifted
    )

    kernel = kernel_basis(d)
    out["kernel_dimension"] = len(kernel) == 2
    out["kernel_killed_by_non_incidence"] = all(
        e.matvec(y) == (0,) * 4 for y in kernel
    )
    out["kernel_fixed_by_matching"] = all(r.matvec(y) == tuple(y) for y in kernel)
    # complement pairs carry equal kernel coordinates: y_S = y_{X \ S}
    comp = [next(t for t in range(6) if r[s, t] == 1) for s in range(6)]
    out["kernel_complement_symmetric"] = all(
        y[s] == y[comp[s]] for y in kernel for s in range(6)
    )

    # triples (xi, eta, D^T zeta) of mean-zero vectors transform by the
    # 3x3 balanced action
    adj = adjacency_matrix(b.graph)
    m = b.balanced_action
    ok = True
    for u in xs:
        w = dt.matvec(u)
        for slot in range(3):
            if slot == 0:
                vec = u + (0,) * 4 + (0,) * 6
            elif slot == 1:
                vec = (0,) * 4 + u + (0,) * 6
            else:
                vec = (0,) * 4 + (0,) * 4 + w
            xi = _scaled(u, m[0, slot])
            eta = _scaled(u, m[1, slot])
            zeta = _scaled(u, m[2, slot])
            expected = xi + eta + dt.matvec(zeta)
            if adj.matvec(vec) != expected:
                ok = False
    out["balanced_action"] = ok

    out["quotient_charpoly"] = charpoly(b.quotient) == H_QUOTIENT_CHARPOLY
    out["balanced_action_charpoly_cubed"] = charpoly(
        b.balanced_action
    ) ** 3 == expand_factors([(X_MINUS_1, 3), (IntPoly([-1, 3, 1]), 3)])
    return out


def closed_form_charpoly_h() -> IntPoly:
    """(x-1)^5 (x^2+3x-1)^3 (x^3-4x^2-10x+7), expanded (degree 14)."""
    return expand_factors(
        [(X_MINUS_1, 5), (IntPoly([-1, 3, 1]), 3), (H_QUOTIENT_CHARPOLY, 1)]
    )


# ---------------------------------------------------------------------------
# Claim-by-claim verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    ok: bool
    detail: str

    def to_json(self) -> dict:
        return {"id": self.claim_id, "ok": self.ok, "detail": self.detail}


def _run_claim(
    results: list[ClaimResult], claim_id: str, fn: Callable[[], tuple[bool, str]]
) -> None:
    try:
        ok, detail = fn()
    except Exception as exc:  # failures are report entries, not exceptions
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    results.append(ClaimResult(claim_id=claim_id, ok=ok, detail=detail))


def _corrupted(graph: Graph) -> Graph:
    """Drop the first edge; used by the self-test hook to prove sensitivity."""
    u, v = next(graph.edges())
    rows = list(graph.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(graph.n, tuple(rows), graph.labels)


def _wk_claims(results: list[ClaimResult], k: int, corrupt: bool) -> None:
    bundle = build_wk(k)
    if corrupt:
        bundle = replace(bundle, graph=_corrupted(bundle.graph))
    g = bundle.graph
    n_pairs = bundle.n_pairs
    tag = f"wk{k}"

    _run_claim(
        results,
        f"{tag}:order",
        lambda: (g.n == comb(k + 1, 2), f"|V|={g.n}, expected {comb(k + 1, 2)}"),
    )
    a_deg, b_deg = 2 * (k - 1), 2 + comb(k - 2, 2)
    _run_claim(
        results,
        f"{tag}:degrees",
        lambda: (
            all(g.degree(v) == a_deg for v in range(k))
            and all(g.degree(v) == b_deg for v in range(k, g.n)),
            f"clique degree {a_deg}, pair-vertex degree {b_deg}",
        ),
    )
    for name, ok in verify_structure_identities(bundle).items():
        _run_claim(results, f"{tag}:structure:{name}", lambda ok=ok: (ok, ""))
    for name, ok in verify_invariant_subspaces(bundle).items():
        _run_claim(results, f"{tag}:subspace:{name}", lambda ok=ok: (ok, ""))

    computed = charpoly(adjacency_matrix(g))
    closed = closed_form_charpoly_wk(k)
    _run_claim(
        results,
        f"{tag}:charpoly_closed_form",
        lambda: (
            computed == closed,
            f"degree {computed.degree}; closed form "
            + ("matches" if computed == closed else f"differs: {closed}"),
        ),
    )
    _run_claim(
        results,
        f"{tag}:balanced_factor_roots",
        lambda: (
            root_sign_count(balanced_factor_wk(k)).as_tuple() == (1, 0, 1, 0),
            f"{balanced_factor_wk(k)} has one root of each sign",
        ),
    )

    def quotient_roots() -> tuple[bool, str]:
        q = bundle.type_quotient
        tr, dt = q.trace(), q[0, 0] * q[1, 1] - q[0, 1] * q[1, 0]
        signs = root_sign_count(quotient_factor_wk(k)).as_tuple()
        return (
            tr > 0 and dt > 0 and signs == (0, 0, 2, 0),
            f"trace={tr} det={dt} root signs={signs}",
        )

    _run_claim(results, f"{tag}:quotient_roots_positive", quotient_roots)

    inr = inertia(g, check=True)
    expected = wk_inertia_formula(k)
    _run_claim(
        results,
        f"{tag}:inertia",
        lambda: (
            inr == expected,
            f"inertia={inr.as_tuple()}, expected {expected.as_tuple()}",
        ),
    )
    _run_claim(
        results,
        f"{tag}:reduced",
        lambda: (is_reduced(g), "no twins, no isolated vertices"),
    )
    main = check_main_conjecture(g, inr)
    _run_claim(
        results,
        f"{tag}:main_margin",
        lambda: (
            main.margin == -2,
            f"2n+={main.lhs} vs n-(n-+1)={main.rhs}: margin {main.margin}, expected -2",
        ),
    )
    order = check_order_conjecture(g, inr)
    _run_claim(
        results,
        f"{tag}:order_margin",
        lambda: (
            order.margin == -2 and order.lhs == k * (k + 1) and order.rhs == (k - 1) * (k + 2),
            f"2n={order.lhs} vs {order.rhs}: margin {order.margin}, expected -2",
        ),
    )


def _h_claims(results: list[ClaimResult]) -> None:
    bundle = build_h()
    g = bundle.graph

    _run_claim(results, "h:order", lambda: (g.n == 14, f"|V|={g.n}"))
    degs = sorted(g.degree(v) for v in range(g.n))
    _run_claim(
        results,
        "h:degrees",
        lambda: (
            degs == [4] * 4 + [5] * 6 + [7] * 4,
            f"degree multiset {degs}",
        ),
    )

    def petersen() -> tuple[bool, str]:
        outer = g.induced(bundle.parts[1] + bundle.parts[2])
        pet = kneser_graph(5, 2)
        return (
            outer.same_adjacency(pet),
            f"outer 10 vertices: {outer.edge_count} edges, "
            f"degrees {sorted(set(outer.degree(v) for v in range(outer.n)))}",
        )

    _run_claim(results, "h:petersen_subgraph", petersen)
    _run_claim(results, "h:reduced", lambda: (is_reduced(g), ""))

    def quotient() -> tuple[bool, str]:
        q = equitable_quotient(g, bundle.parts)
        return (q == H_QUOTIENT, f"quotient rows {q.to_json()}")

    _run_claim(results, "h:equitable_quotient", quotient)
    for name, ok in verify_h_identities(bundle).items():
        _run_claim(results, f"h:identity:{name}", lambda ok=ok: (ok, ""))

    computed = charpoly(adjacency_matrix(g))
    closed = closed_form_charpoly_h()
    _run_claim(
        results,
        "h:charpoly_closed_form",
        lambda: (computed == closed, f"degree {computed.degree}"),
    )

    def cubic_roots() -> tuple[bool, str]:
        signs = root_sign_count(H_QUOTIENT_CHARPOLY).as_tuple()
        return signs == (1, 0, 2, 0), f"{H_QUOTIENT_CHARPOLY} root signs {signs}"

    _run_claim(results, "h:quotient_cubic_roots", cubic_roots)

    inr = inertia(g, check=True)
    _run_claim(
        results,
        "h:inertia",
        lambda: (inr.as_tuple() == (10, 0, 4), f"inertia={inr.as_tuple()}"),
    )
    main = check_main_conjecture(g, inr)
    _run_claim(
        results,
        "h:main_margin",
        lambda: (
            main.margin == 0 and main.holds,
            f"2n+={main.lhs} vs n-(n-+1)={main.rhs}: margin {main.margin}, expected 0",
        ),
    )


def verify_claims(
    k_min: int = 5, k_max: int = 8, *, corrupt: bool = False
) -> list[ClaimResult]:
    """Run the whole claim battery for W_k (k_min..k_max) and H.

    Returns one ClaimResult per claim, in a deterministic order; claim
    failures land in the report rather than raising. corrupt=True drops
    an edge from each W_k first, as a self-test that the battery can fail.
    """
    if not 5 <= k_min <= k_max:
        raise ValueError(f"need 5 <= k_min <= k_max, got {k_min}..{k_max}")
    results: list[ClaimResult] = []
    for k in range(k_min, k_max + 1):
        _wk_claims(results, k, corrupt)
    _h_claims(results)
    return results

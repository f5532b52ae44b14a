"""Strong and weak degeneration criteria for a dual graph and a tuple size n.

Strong criterion: ``n <= min_{|S| <= n} (g - |E(S)| - 2 sum_{v in S} g(v))``.
The inner minimum is a cardinality-constrained maximization of
``score(S) = |E(S)| + 2 sum_{v in S} g(v)`` (coverage plus a modular term),
solved exactly by branch-and-bound.

Weak criterion: ``n <= min_{|S| <= n} K(S)`` where
``K(S) = sum_{v not in S} g(v) + b1(G - E(S))`` is the dimension of the
section-space model after forcing vanishing on every component in ``S``
(see ``residue_model``).

Both margins are nonincreasing in ``n``, so every minimum over ``|S| <= n``
is attained by a set of size exactly ``min(n, |V|)``; witnesses have that
size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import DualGraph, GraphError, num_components, stability_check, total_genus

STRONG = "strong"
WEAK = "weak"
CRITERIA = (STRONG, WEAK)

BRUTE_FORCE_BELOW = 12


class CriterionError(GraphError):
    pass


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    n: int
    margin: int
    verdict: bool
    witness: tuple[int, ...]
    evaluations: int

    def as_dict(self, G: DualGraph | None = None) -> dict:
        out = {
            "criterion": self.criterion,
            "n": self.n,
            "margin": self.margin,
            "verdict": self.verdict,
            "witness": list(self.witness),
            "evaluations": self.evaluations,
        }
        if G is not None:
            out["witness_names"] = [G.names[v] for v in self.witness]
        return out


def _vertex_masks(G: DualGraph) -> list[int]:
    masks = [0] * G.num_vertices
    for e, (u, w) in enumerate(G.edges):
        masks[u] |= 1 << e
        masks[w] |= 1 << e
    return masks


def score(G: DualGraph, S) -> int:
    """``|E(S)| + 2 sum_{v in S} g(v)``."""
    masks = _vertex_masks(G)
    covered = 0
    for v in S:
        covered |= masks[v]
    return covered.bit_count() + 2 * sum(G.genera[v] for v in S)


def _rank_order(masks, weights):
    return sorted(range(len(masks)), key=lambda v: (-(masks[v].bit_count() + weights[v]), v))


def _brute_force(masks, weights, m):
    order = _rank_order(masks, weights)
    best, best_set, count = -1, (), 0
    for combo in combinations(order, m):
        count += 1
        covered = 0
        for v in combo:
            covered |= masks[v]
        value = covered.bit_count() + sum(weights[v] for v in combo)
        if value > best:
            best, best_set = value, combo
    return best, best_set, count


def _greedy(masks, weights, m):
    chosen, covered, value = [], 0, 0
    order = _rank_order(masks, weights)
    for _ in range(m):
        pick = max(
            (v for v in order if v not in chosen),
            key=lambda v: (masks[v] & ~covered).bit_count() + weights[v],
        )
        chosen.append(pick)
        value += (masks[pick] & ~covered).bit_count() + weights[pick]
        covered |= masks[pick]
    return value


def _branch_and_bound(masks, weights, m):
    # Include-first DFS over the rank order visits m-subsets lexicographically,
    # so keeping the first set that reaches the running optimum yields the
    # least optimal set in that order.
    order = _rank_order(masks, weights)
    k = len(order)
    incumbent = _greedy(masks, weights, m)
    best = [incumbent, None]
    count = [0]

    def bound(i, covered, need):
        gains = sorted(
            ((masks[v] & ~covered).bit_count() + weights[v] for v in order[i:]),
            reverse=True,
        )
        return sum(gains[:need])

    def dfs(i, chosen, covered, value):
        count[0] += 1
        need = m - len(chosen)
        if need == 0:
            if value > best[0] or (best[1] is None and value >= best[0]):
                best[0], best[1] = value, tuple(chosen)
            return
        if k - i < need:
            return
        if value + bound(i, covered, need) < best[0]:
            return
        v = order[i]
        chosen.append(v)
        dfs(i + 1, chosen, covered | masks[v],
            value + (masks[v] & ~covered).bit_count() + weights[v])
        chosen.pop()
        dfs(i + 1, chosen, covered, value)

    dfs(0, [], 0, 0)
    return best[0], best[1], count[0]


def penalty_maximize(G: DualGraph, n: int, method: str = "auto"):
    """Exact ``max_{|S| <= n} score(S)``.

    Returns ``(witness, value, evaluations)``; the witness is a tuple of
    vertex indices of size ``min(n, |V|)``.  Ties are broken towards the
    lexicographically least set when vertices are ordered by decreasing
    single-vertex score (then by index).  ``method`` is ``"bnb"``,
    ``"brute"`` or ``"auto"`` (brute force below 12 vertices).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    masks = _vertex_masks(G)
    weights = [2 * x for x in G.genera]
    m = min(n, G.num_vertices)
    if m == 0:
        return (), 0, 1
    if method == "auto":
        method = "brute" if G.num_vertices < BRUTE_FORCE_BELOW else "bnb"
    if method == "brute":
        value, witness, count = _brute_force(masks, weights, m)
    elif method == "bnb":
        value, witness, count = _branch_and_bound(masks, weights, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return tuple(sorted(witness)), value, count


def _require_stable(G: DualGraph):
    if not stability_check(G):
        raise CriterionError("criterion defined for stable curves only")


def theorem_margin(G: DualGraph, n: int, method: str = "auto") -> CriterionReport:
    _require_stable(G)
    g = total_genus(G)
    witness, value, count = penalty_maximize(G, n, method)
    margin = g - value
    return CriterionReport(STRONG, n, margin, n <= margin, witness, count)


def kernel_closed_form(G: DualGraph, S) -> int:
    """``sum_{v not in S} g(v) + b1(G - E(S))``."""
    S = frozenset(S)
    kept = [(u, w) for u, w in G.edges if u not in S and w not in S]
    k = G.num_vertices
    holo = sum(x for v, x in enumerate(G.genera) if v not in S)
    return holo + len(kept) - k + num_components(k, kept)


def remark_margin(G: DualGraph, n: int) -> CriterionReport:
    _require_stable(G)
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = min(n, G.num_vertices)
    best, best_set, count = None, (), 0
    for combo in combinations(range(G.num_vertices), m):
        count += 1
        value = kernel_closed_form(G, combo)
        if best is None or value < best:
            best, best_set = value, combo
    return CriterionReport(WEAK, n, best, n <= best, best_set, count)


def evaluate(G: DualGraph, n: int, criterion: str) -> CriterionReport:
    if criterion == STRONG:
        return theorem_margin(G, n)
    if criterion == WEAK:
        return remark_margin(G, n)
    raise ValueError(f"unknown criterion {criterion!r}")


def n_max(G: DualGraph, criterion: str) -> int:
    """Largest ``n`` in ``[1, g]`` passing the criterion, or 0."""
    g = total_genus(G)
    best = 0
    for n in range(1, g + 1):
        if not evaluate(G, n, criterion).verdict:
            break
        best = n
    return best

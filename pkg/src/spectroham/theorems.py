"""Spectral and structural sufficient conditions for Hamiltonian properties.

Each checker evaluates one published sufficient condition on a graph
and reconciles its prediction against the exact oracle.  The shared
shape: an s parameter selects the target property (s = 1 Hamiltonian-
connected, s = 0 Hamiltonian, s = -1 traceable), a bound is compared
against an observed spectral or integer quantity, and known extremal
graphs K_{k,k-s+1} are excluded where the source states an exception.

Bounds sit exactly on extremal graphs, so comparisons are three-valued:
holds / boundary / fails, with |observed - bound| <= eps as boundary.
Non-strict conditions count boundary as satisfied; the strict Laplacian
condition does not.
"""

from dataclasses import dataclass
from functools import cached_property
from math import isnan, sqrt
from typing import NamedTuple, Optional

from .graphs import Graph, complement, cone
from .hamilton import hamiltonian_profile
from .invariants import invariants, is_complete_bipartite, is_connected
from .spectra import adjacency_matrix, spectral_summary, symmetric_eigenvalues
from .tolerance import resolve_eps

THEOREM_IDS = (
    "li_adjacency",
    "main1_adjacency",
    "main2_cone",
    "main3_laplacian",
    "dirac_ore",
    "chvatal_erdos",
    "anderson_morley",
)

VALID_S = {
    "li_adjacency": (0, -1),
    "main1_adjacency": (1,),
    "main2_cone": (None,),
    "main3_laplacian": (1, 0, -1),
    "dirac_ore": (1, 0, -1),
    "chvatal_erdos": (1, 0, -1),
    "anderson_morley": (None,),
}

PROPERTY_BY_S = {
    1: "hamiltonian_connected",
    0: "hamiltonian",
    -1: "traceable",
}


@dataclass(frozen=True)
class TheoremQuery:
    """One condition to evaluate: which theorem, which s, which k."""

    theorem_id: str
    s: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.theorem_id not in VALID_S:
            raise ValueError(f"unknown theorem_id {self.theorem_id!r}")
        valid = VALID_S[self.theorem_id]
        s = self.s
        if self.theorem_id == "main1_adjacency" and s is None:
            s = 1
        if s not in valid:
            raise ValueError(f"s={self.s} invalid for {self.theorem_id} (allowed: {valid})")


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one condition on one graph.

    consistent is False only for the one way a sufficient condition can
    fail: predicted True with oracle_truth False.  anderson_morley is
    an if-and-only-if bound and additionally demands agreement of its
    equality and complement flags.
    """

    theorem_id: str
    s: Optional[int]
    k: Optional[int]
    property_name: Optional[str]
    hypothesis: str
    bound_value: float
    observed_value: float
    excluded_extremal: bool
    applicability: bool
    predicted: Optional[bool]
    oracle_truth: Optional[bool]
    consistent: bool


class GraphAnalysis:
    """Lazy per-graph cache shared by the checkers.

    Spectra, invariants, and the oracle profile are each computed at
    most once however many conditions are evaluated.
    """

    def __init__(self, g, eps=None):
        self.graph = g
        self.eps = resolve_eps(eps)

    @cached_property
    def invariants(self):
        return invariants(self.graph)

    @cached_property
    def summary(self):
        return spectral_summary(self.graph)

    @cached_property
    def profile(self):
        return hamiltonian_profile(self.graph)

    @cached_property
    def cone_lambda1(self):
        return symmetric_eigenvalues(adjacency_matrix(cone(self.graph)))[0]

    @cached_property
    def complete_bipartite_parts(self):
        return is_complete_bipartite(self.graph)

    def oracle(self, property_name):
        return getattr(self.profile, property_name)


def _ctx(g, analysis, eps):
    if analysis is None:
        return GraphAnalysis(g, eps)
    if analysis.graph != g:
        raise ValueError("analysis was built for a different graph")
    return analysis


def _classify(observed, bound, eps):
    """Three-valued comparison of observed <= bound."""
    if isnan(bound) or isnan(observed):
        return "fails"
    if abs(observed - bound) <= eps:
        return "boundary"
    return "holds" if observed < bound else "fails"


def _resolve_k(ctx, k):
    kappa = ctx.invariants.connectivity
    if k is None:
        k = kappa
    return k, (1 <= k <= kappa)


def _verdict(ctx, theorem_id, s, k, property_name, hypothesis, bound,
             observed, excluded, applicable, satisfied):
    """Assemble a verdict; satisfied tells whether the hypothesis counts."""
    if not applicable or not satisfied:
        predicted = None
    else:
        predicted = not excluded
    oracle = ctx.oracle(property_name)
    consistent = not (predicted is True and oracle is False)
    return TheoremVerdict(
        theorem_id=theorem_id,
        s=s,
        k=k,
        property_name=property_name,
        hypothesis=hypothesis,
        bound_value=bound,
        observed_value=observed,
        excluded_extremal=excluded,
        applicability=applicable,
        predicted=predicted,
        oracle_truth=oracle,
        consistent=consistent,
    )


def check_li_adjacency(g, s, analysis=None, eps=None):
    """Adjacency bound for Hamiltonicity (s=0) or traceability (s=-1).

    Hypothesis: lambda_1 <= delta * sqrt((kappa-s+1)/(n-kappa+s-1)),
    non-strict, with K_{kappa,kappa-s+1} the excluded equality graph.
    The s=-1 statement carries an n >= 12 side condition.
    """
    if s not in (0, -1):
        raise ValueError(f"li_adjacency needs s in {{0, -1}}, got {s}")
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    n, kappa, delta = inv.n, inv.connectivity, inv.min_degree
    denom = n - kappa + s - 1
    applicable = inv.is_connected and n >= 3 and kappa >= 1 and denom > 0
    if s == -1 and n < 12:
        applicable = False
    bound = delta * sqrt((kappa - s + 1) / denom) if denom > 0 else float("nan")
    hypothesis = _classify(ctx.summary.lambda1, bound, ctx.eps)
    excluded = ctx.complete_bipartite_parts == (kappa, kappa - s + 1)
    return _verdict(ctx, "li_adjacency", s, kappa, PROPERTY_BY_S[s],
                    hypothesis, bound, ctx.summary.lambda1, excluded,
                    applicable, hypothesis != "fails")


def check_main1_adjacency(g, k=None, analysis=None, eps=None):
    """Adjacency bound for Hamiltonian-connectedness (the s=1 case).

    Hypothesis: lambda_1 <= delta * sqrt(k/(n-k)) for a k-connected
    graph, non-strict; K_{k,k} is the excluded equality graph.
    """
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    n, delta = inv.n, inv.min_degree
    k, k_ok = _resolve_k(ctx, k)
    applicable = inv.is_connected and n >= 3 and k_ok and n - k > 0
    bound = delta * sqrt(k / (n - k)) if n - k > 0 else float("nan")
    hypothesis = _classify(ctx.summary.lambda1, bound, ctx.eps)
    excluded = ctx.complete_bipartite_parts == (k, k)
    return _verdict(ctx, "main1_adjacency", 1, k, PROPERTY_BY_S[1],
                    hypothesis, bound, ctx.summary.lambda1, excluded,
                    applicable, hypothesis != "fails")


def check_main2_cone(g, k=None, analysis=None, eps=None):
    """Cone adjacency bound for homogeneous traceability.

    Hypothesis: lambda_1 of the cone over g is at most
    (delta+1) * sqrt((k+1)/(n-k)); no excluded graph.
    """
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    n, delta = inv.n, inv.min_degree
    k, k_ok = _resolve_k(ctx, k)
    applicable = inv.is_connected and n >= 3 and k_ok
    bound = (delta + 1) * sqrt((k + 1) / (n - k)) if n - k > 0 else float("nan")
    observed = ctx.cone_lambda1
    hypothesis = _classify(observed, bound, ctx.eps)
    return _verdict(ctx, "main2_cone", None, k, "homogeneously_traceable",
                    hypothesis, bound, observed, False, applicable,
                    hypothesis != "fails")


def check_main3_laplacian(g, s, k=None, analysis=None, eps=None):
    """Laplacian bound, strict: mu_1 < n*delta/(n-k+s-1).

    Boundary never predicts; the extremal K_{k,k-s+1} sits exactly on
    the bound and is reported via excluded_extremal for visibility.
    """
    if s not in (1, 0, -1):
        raise ValueError(f"main3_laplacian needs s in {{1, 0, -1}}, got {s}")
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    n, delta = inv.n, inv.min_degree
    k, k_ok = _resolve_k(ctx, k)
    denom = n - k + s - 1
    applicable = inv.is_connected and n >= 3 and k_ok and denom > 0
    bound = n * delta / denom if denom > 0 else float("nan")
    hypothesis = _classify(ctx.summary.mu1, bound, ctx.eps)
    excluded = ctx.complete_bipartite_parts == tuple(sorted((k, k - s + 1)))
    return _verdict(ctx, "main3_laplacian", s, k, PROPERTY_BY_S[s],
                    hypothesis, bound, ctx.summary.mu1, excluded,
                    applicable, hypothesis == "holds")


def check_dirac_ore(g, s, analysis=None, eps=None):
    """Minimum-degree condition: delta >= (n+s)/2, integer arithmetic."""
    if s not in (1, 0, -1):
        raise ValueError(f"dirac_ore needs s in {{1, 0, -1}}, got {s}")
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    n, delta = inv.n, inv.min_degree
    applicable = n >= 3
    satisfied = 2 * delta >= n + s
    if 2 * delta == n + s:
        hypothesis = "boundary"
    else:
        hypothesis = "holds" if satisfied else "fails"
    return _verdict(ctx, "dirac_ore", s, None, PROPERTY_BY_S[s], hypothesis,
                    (n + s) / 2, float(delta), False, applicable, satisfied)


def check_chvatal_erdos(g, s, k=None, analysis=None, eps=None):
    """Independence-number condition: alpha <= k - s, integer arithmetic."""
    if s not in (1, 0, -1):
        raise ValueError(f"chvatal_erdos needs s in {{1, 0, -1}}, got {s}")
    ctx = _ctx(g, analysis, eps)
    inv = ctx.invariants
    alpha = inv.independence_number
    k, k_ok = _resolve_k(ctx, k)
    applicable = inv.is_connected and inv.n >= 3 and k_ok
    satisfied = alpha <= k - s
    if alpha == k - s:
        hypothesis = "boundary"
    else:
        hypothesis = "holds" if satisfied else "fails"
    return _verdict(ctx, "chvatal_erdos", s, k, PROPERTY_BY_S[s], hypothesis,
                    float(k - s), float(alpha), False, applicable, satisfied)


class AndersonMorleyCheck(NamedTuple):
    mu1: float
    n: int
    equality: bool
    complement_disconnected: bool


def check_anderson_morley(g, analysis=None, eps=None):
    """Laplacian radius bound mu_1 <= n, equality iff the complement is disconnected."""
    if g.n < 2:
        raise ValueError("anderson_morley needs at least 2 vertices")
    ctx = _ctx(g, analysis, eps)
    mu1 = ctx.summary.mu1
    equality = abs(mu1 - g.n) <= ctx.eps
    comp = complement_disconnected(g)
    return AndersonMorleyCheck(mu1, g.n, equality, comp)


def complement_disconnected(g):
    return not is_connected(complement(g))


def evaluate_query(g, query, analysis=None, eps=None):
    """Dispatch one TheoremQuery to its checker; always a TheoremVerdict.

    anderson_morley, an if-and-only-if characterization rather than a
    sufficient condition, is adapted: predicted/oracle_truth carry the two
    equality flags and consistency demands the full biconditional plus the
    bound.
    """
    ctx = _ctx(g, analysis, eps)
    tid = query.theorem_id
    if tid == "li_adjacency":
        return check_li_adjacency(g, query.s, ctx)
    if tid == "main1_adjacency":
        return check_main1_adjacency(g, query.k, ctx)
    if tid == "main2_cone":
        return check_main2_cone(g, query.k, ctx)
    if tid == "main3_laplacian":
        return check_main3_laplacian(g, query.s, query.k, ctx)
    if tid == "dirac_ore":
        return check_dirac_ore(g, query.s, ctx)
    if tid == "chvatal_erdos":
        return check_chvatal_erdos(g, query.s, query.k, ctx)
    if tid == "anderson_morley":
        return _anderson_morley_verdict(g, ctx)
    raise ValueError(f"unknown theorem_id {tid!r}")


def _anderson_morley_verdict(g, ctx):
    if g.n < 2:
        return TheoremVerdict(
            theorem_id="anderson_morley", s=None, k=None,
            property_name="complement_disconnected", hypothesis="holds",
            bound_value=float(g.n), observed_value=0.0,
            excluded_extremal=False, applicability=False,
            predicted=None, oracle_truth=None, consistent=True,
        )
    check = check_anderson_morley(g, ctx)
    if abs(check.mu1 - check.n) <= ctx.eps:
        hypothesis = "boundary"
    elif check.mu1 < check.n:
        hypothesis = "holds"
    else:
        hypothesis = "fails"
    consistent = hypothesis != "fails" and check.equality == check.complement_disconnected
    return TheoremVerdict(
        theorem_id="anderson_morley", s=None, k=None,
        property_name="complement_disconnected", hypothesis=hypothesis,
        bound_value=float(check.n), observed_value=check.mu1,
        excluded_extremal=False, applicability=True,
        predicted=check.equality, oracle_truth=check.complement_disconnected,
        consistent=consistent,
    )


def default_queries():
    """The full battery: every theorem at every valid s, k defaulted."""
    out = []
    for tid in THEOREM_IDS:
        for s in VALID_S[tid]:
            out.append(TheoremQuery(tid, s))
    return tuple(out)

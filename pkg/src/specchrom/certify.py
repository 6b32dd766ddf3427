"""Homomorphism search, spectral obstruction certificates, and
randomized verification of the inequalities behind them.

A certificate compares the squared-energy ratio of a source graph with
the extreme-eigenvalue ratio of an edge-transitive target: a positive
margin proves no homomorphism exists. The four lemma verifiers stress
the supporting inequalities on randomly sampled matrices; they raise on
precondition failures and report the worst observed violation together
with its scale, never silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BoundUndefinedError,
    BudgetExceededError,
    NotEdgeTransitiveError,
    SizeLimitError,
)
from .partitions import HPartition, identity_partition, partition_from_sizes
from .spectra import block_frobenius, eigendecompose, psd_split, squared_energies
from .symmetry import automorphism_group, pair_orbit_scheme, reynolds_average

MAX_HOM_N = 15
DEFAULT_NODE_BUDGET = 5_000_000
CERT_TOLERANCE = 1e-9
LEMMA_TOLERANCE = 1e-8
REYNOLDS_TOLERANCE = 1e-9
REJECTION_BUDGET = 500

LEMMA_IDS = ("main", "conformal", "scheme_span", "general_Z")


# -- homomorphisms -------------------------------------------------------


def _search_order(g):
    """BFS order starting from the highest-degree vertex of each
    component, so assigned vertices constrain their successors early."""
    degrees = g.degrees()
    masks = g.neighbor_masks()
    order = []
    seen = [False] * g.n
    by_degree = sorted(range(g.n), key=lambda v: (-degrees[v], v))
    for root in by_degree:
        if seen[root]:
            continue
        queue = [root]
        seen[root] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            nbrs = sorted(
                (w for w in range(g.n) if masks[v] >> w & 1 and not seen[w]),
                key=lambda w: (-degrees[w], w),
            )
            for w in nbrs:
                seen[w] = True
                queue.append(w)
    return order


def find_homomorphism(g, h, node_budget=DEFAULT_NODE_BUDGET):
    """Edge-preserving map V(G) -> V(H) as a list, or None after an
    exhaustive search. Budget exhaustion raises, so None always means
    a completed refutation."""
    if g.n > MAX_HOM_N or h.n > MAX_HOM_N:
        raise SizeLimitError(
            f"homomorphism search supports up to {MAX_HOM_N} vertices"
        )
    gm = g.neighbor_masks()
    hm = h.neighbor_masks()
    order = _search_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [
        [w for w in range(g.n) if gm[v] >> w & 1 and pos[w] > pos[v]]
        for v in range(g.n)
    ]
    full = (1 << h.n) - 1
    domains = [full] * g.n
    assignment = [-1] * g.n
    nodes = [0]

    def solve(i):
        if i == g.n:
            return True
        u = order[i]
        dom = domains[u]
        while dom:
            low = dom & -dom
            dom ^= low
            nodes[0] += 1
            if nodes[0] > node_budget:
                raise BudgetExceededError(
                    f"homomorphism search exceeded {node_budget} nodes"
                )
            a = low.bit_length() - 1
            assignment[u] = a
            pruned = []
            ok = True
            for w in later[u]:
                old = domains[w]
                new = old & hm[a]
                if new != old:
                    domains[w] = new
                    pruned.append((w, old))
                if not new:
                    ok = False
                    break
            if ok and solve(i + 1):
                return True
            for w, old in pruned:
                domains[w] = old
        assignment[u] = -1
        return False

    if not solve(0):
        return None
    mapping = list(assignment)
    for u, v in g.edges():
        if not hm[mapping[u]] >> mapping[v] & 1:
            raise AssertionError("search returned a non-homomorphism")
    return mapping


# -- obstruction certificates --------------------------------------------


@dataclass(frozen=True)
class ObstructionCertificate:
    """Spectral proof that no homomorphism source -> target exists,
    valid when margin > tolerance and the target has a single edge
    orbit (edge_transitivity_witness = 1)."""

    source: str
    target: str
    s_plus: float
    s_minus: float
    ratio_G: float
    lambda_max_H: float
    lambda_min_H: float
    ratio_H: float
    margin: float
    edge_transitivity_witness: int
    tolerance: float = CERT_TOLERANCE

    @property
    def certified(self):
        return (
            self.margin > self.tolerance
            and self.edge_transitivity_witness == 1
        )


def _edge_orbit_count(h):
    group = automorphism_group(h)
    edges = set(h.edges())
    return [o for o in group.pair_orbits() if o[0] in edges]


def obstruction_certificate(g, h, source="source", target="target"):
    if g.m == 0 or h.m == 0:
        raise BoundUndefinedError(
            "certificate undefined: both graphs need at least one edge"
        )
    edge_orbits = _edge_orbit_count(h)
    if len(edge_orbits) != 1:
        raise NotEdgeTransitiveError(
            "target is not edge-transitive, so the ratio comparison "
            "does not apply",
            witness=(edge_orbits[0][0], edge_orbits[1][0]),
        )
    s_plus, s_minus = squared_energies(
        eigendecompose(np.asarray(g.adjacency, dtype=np.float64))
    )
    w = eigendecompose(np.asarray(h.adjacency, dtype=np.float64)).eigenvalues
    lambda_max = float(w[0])
    lambda_min = float(w[-1])
    ratio_g = max(s_plus / s_minus, s_minus / s_plus)
    ratio_h = lambda_max / abs(lambda_min)
    return ObstructionCertificate(
        source=source,
        target=target,
        s_plus=s_plus,
        s_minus=s_minus,
        ratio_G=ratio_g,
        lambda_max_H=lambda_max,
        lambda_min_H=lambda_min,
        ratio_H=ratio_h,
        margin=ratio_g - ratio_h,
        edge_transitivity_witness=1,
    )


def certificate_to_dict(cert):
    return {
        "source": cert.source,
        "target": cert.target,
        "s_plus": cert.s_plus,
        "s_minus": cert.s_minus,
        "ratio_G": cert.ratio_G,
        "lambda_max_H": cert.lambda_max_H,
        "lambda_min_H": cert.lambda_min_H,
        "ratio_H": cert.ratio_H,
        "margin": cert.margin,
        "edge_transitivity_witness": cert.edge_transitivity_witness,
        "tolerance": cert.tolerance,
        "certified": cert.certified,
    }


def verify_certificate_dict(data, resolve):
    """Recompute a certificate from its embedded graph specs and compare
    field by field. resolve maps a spec string to a Graph. Returns
    (ok, messages)."""
    messages = []
    try:
        g = resolve(data["source"])
        h = resolve(data["target"])
    except KeyError as exc:
        return False, [f"missing field {exc}"]
    fresh = obstruction_certificate(
        g, h, source=data["source"], target=data["target"]
    )
    numeric = (
        "s_plus", "s_minus", "ratio_G",
        "lambda_max_H", "lambda_min_H", "ratio_H", "margin",
    )
    ok = True
    for name in numeric:
        claimed = float(data[name])
        actual = getattr(fresh, name)
        if abs(claimed - actual) > 1e-9:
            ok = False
            messages.append(
                f"{name}: claimed {claimed!r}, recomputed {actual!r}"
            )
    if int(data["edge_transitivity_witness"]) != 1:
        ok = False
        messages.append("edge_transitivity_witness is not 1")
    if ok and not fresh.certified:
        ok = False
        messages.append(
            f"margin {fresh.margin!r} is within tolerance; certificate "
            "is inconclusive, not a proof"
        )
    if ok:
        messages.append(
            f"margin {fresh.margin!r} > {fresh.tolerance!r}: no "
            "homomorphism exists"
        )
    return ok, messages


# -- lemma verifiers ------------------------------------------------------


@dataclass(frozen=True)
class LemmaTrialReport:
    """Worst observed violation over a seeded batch of random trials.

    max_violation and scale come from the single worst trial (largest
    violation relative to its own scale), so the pass condition
    max_violation <= tolerance * scale is exactly the per-trial check.
    Per-trial generators derive as default_rng([seed, trial_index]).
    claims holds auxiliary scale-normalized drift maxima.
    """

    lemma_id: str
    trials: int
    max_violation: float
    scale: float
    seed: int
    tolerance: float = LEMMA_TOLERANCE
    claims: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.max_violation <= self.tolerance * self.scale

    def to_dict(self):
        return {
            "lemma_id": self.lemma_id,
            "trials": self.trials,
            "max_violation": self.max_violation,
            "scale": self.scale,
            "seed": self.seed,
            "seed_rule": "default_rng([seed, trial_index])",
            "tolerance": self.tolerance,
            "claims": dict(self.claims),
            "passed": self.passed,
        }


def _trial_rng(seed, trial):
    return np.random.default_rng([seed, trial])


def _check_trials(trials):
    if trials < 1:
        raise ValueError("need at least one trial")


def _require_transitive(h):
    """Vertex- and edge-transitivity gate shared by all verifiers."""
    if h.m == 0:
        raise ValueError("lemma verification needs a target with edges")
    group = automorphism_group(h)
    if len(group.vertex_orbits()) != 1:
        raise ValueError("target graph is not vertex-transitive")
    edges = set(h.edges())
    edge_orbits = [o for o in group.pair_orbits() if o[0] in edges]
    if len(edge_orbits) != 1:
        raise NotEdgeTransitiveError(
            "target graph is not edge-transitive",
            witness=(edge_orbits[0][0], edge_orbits[1][0]),
        )
    return group


def _hoffman_ratio(h):
    w = eigendecompose(np.asarray(h.adjacency, dtype=np.float64)).eigenvalues
    return float(w[0]) / abs(float(w[-1]))


def _offedge_mask(h):
    a = np.asarray(h.adjacency, dtype=np.float64)
    return np.ones_like(a) - a


class _WorstTracker:
    """Keeps the trial with the largest scale-normalized violation.
    Negative violations mean the inequality held with slack."""

    def __init__(self):
        self.violation = None
        self.scale = 1.0

    def update(self, violation, scale):
        if (
            self.violation is None
            or violation / scale > self.violation / self.scale
        ):
            self.violation = violation
            self.scale = scale


def verify_lemma_main(h, partition_sizes, trials, seed):
    """Random Gram matrices X indexed by a disjoint union of vertex
    classes must satisfy
    ||X||^2 <= (1 + ratio) * sum over ordered non-edge pairs (u = v
    included) of the squared block mass."""
    _check_trials(trials)
    _require_transitive(h)
    partition = partition_from_sizes(h, partition_sizes)
    dim = partition.source_size
    factor = 1.0 + _hoffman_ratio(h)
    off = _offedge_mask(h)
    worst = _WorstTracker()
    for t in range(trials):
        rng = _trial_rng(seed, t)
        r = int(rng.integers(1, dim + 1))
        b = rng.uniform(-1.0, 1.0, size=(r, dim))
        x = b.T @ b
        x = (x + x.T) / 2.0
        lhs = float((x * x).sum())
        z = block_frobenius(x, partition)
        rhs = factor * float((off * z).sum())
        worst.update(lhs - rhs, max(1.0, lhs, rhs))
    return LemmaTrialReport(
        "main", trials, worst.violation, worst.scale, seed
    )


def verify_lemma_conformal(h, partition, trials, seed):
    """PSD splits X - Y of random symmetric matrices supported on the
    edge blocks of h must satisfy ||X||^2 <= ratio * ||Y||^2 and the
    mirror inequality."""
    _check_trials(trials)
    _require_transitive(h)
    if not isinstance(partition, HPartition):
        raise TypeError("partition must be an HPartition")
    if partition.target != h:
        raise ValueError("partition target does not match the given graph")
    dim = partition.source_size
    adjacency = np.asarray(h.adjacency, dtype=np.float64)
    support = adjacency[np.ix_(partition.class_of, partition.class_of)]
    ratio = _hoffman_ratio(h)
    worst = _WorstTracker()
    max_xy = 0.0
    for t in range(trials):
        rng = _trial_rng(seed, t)
        raw = rng.uniform(-1.0, 1.0, size=(dim, dim))
        a = ((raw + raw.T) / 2.0) * support
        split = psd_split(a)
        sp, sm = split.s_plus, split.s_minus
        violation = max(sp - ratio * sm, sm - ratio * sp)
        scale = max(1.0, sp, sm)
        worst.update(violation, scale)
        xy = float(np.abs(split.x @ split.y).max())
        max_xy = max(max_xy, xy / scale)
    return LemmaTrialReport(
        "conformal", trials, worst.violation, worst.scale, seed,
        claims={"max_xy_residual": max_xy},
    )


def verify_scheme_span_inequality(h, trials, seed):
    """Nonnegative combinations of the pair-orbit class matrices,
    rejection-sampled to the PSD cone, must satisfy
    sum(Z) <= (1 + ratio) * sum((J - A) * Z)."""
    _check_trials(trials)
    _require_transitive(h)
    scheme = pair_orbit_scheme(h)
    matrices = [np.asarray(m, dtype=np.float64) for m in scheme.matrices]
    adjacency = matrices[scheme.edge_class_index]
    ratio = _hoffman_ratio(h)
    factor = 1.0 + ratio
    off = np.ones_like(adjacency) - adjacency
    worst = _WorstTracker()
    attempts = 0
    for t in range(trials):
        rng = _trial_rng(seed, t)
        z = None
        for _ in range(REJECTION_BUDGET):
            attempts += 1
            coeffs = rng.uniform(0.0, 1.0, size=len(matrices))
            candidate = sum(c * m for c, m in zip(coeffs, matrices))
            if float(np.linalg.eigvalsh(candidate)[0]) >= -1e-10:
                z = candidate
                break
        if z is None:
            rate = (t / attempts) if attempts else 0.0
            raise BudgetExceededError(
                f"PSD rejection budget exhausted at trial {t} "
                f"(acceptance rate {rate:.4f})"
            )
        lhs = float(z.sum())
        rhs = factor * float((off * z).sum())
        worst.update(lhs - rhs, max(1.0, lhs, rhs))
    return LemmaTrialReport(
        "scheme_span", trials, worst.violation, worst.scale, seed,
        claims={"acceptance_rate": trials / attempts if attempts else 1.0},
    )


def verify_general_Z_inequality(h, trials, seed):
    """Random entrywise-nonnegative PSD matrices must satisfy the same
    span inequality; additionally the Reynolds average must preserve the
    total sum and the off-edge sum and land in the span of the class
    matrices."""
    _check_trials(trials)
    group = _require_transitive(h)
    scheme = pair_orbit_scheme(h)
    matrices = [np.asarray(m, dtype=np.float64) for m in scheme.matrices]
    adjacency = matrices[scheme.edge_class_index]
    ratio = _hoffman_ratio(h)
    factor = 1.0 + ratio
    off = np.ones_like(adjacency) - adjacency
    n = h.n
    class_mass = [float((m * m).sum()) for m in matrices]
    worst = _WorstTracker()
    sum_drift = 0.0
    offedge_drift = 0.0
    span_residual = 0.0
    for t in range(trials):
        rng = _trial_rng(seed, t)
        r = int(rng.integers(1, n + 1))
        b = rng.uniform(0.0, 1.0, size=(r, n))
        z = b.T @ b
        z = (z + z.T) / 2.0
        lhs = float(z.sum())
        rhs = factor * float((off * z).sum())
        scale = max(1.0, lhs, rhs)
        worst.update(lhs - rhs, scale)
        zbar = reynolds_average(z, group)
        sum_drift = max(
            sum_drift, abs(float(zbar.sum()) - lhs) / scale
        )
        offedge_drift = max(
            offedge_drift,
            abs(float((off * zbar).sum()) - float((off * z).sum())) / scale,
        )
        coeffs = [
            float((m * zbar).sum()) / mass
            for m, mass in zip(matrices, class_mass)
        ]
        projected = sum(c * m for c, m in zip(coeffs, matrices))
        span_residual = max(
            span_residual, float(np.abs(zbar - projected).max()) / scale
        )
    return LemmaTrialReport(
        "general_Z", trials, worst.violation, worst.scale, seed,
        claims={
            "max_sum_drift": sum_drift,
            "max_offedge_drift": offedge_drift,
            "max_span_residual": span_residual,
        },
    )


def run_all_lemma_verifiers(h, trials, seed):
    """Run the four verifiers with their default shapes on one target:
    the main lemma uses two indices per vertex, the conformal lemma the
    identity partition."""
    sizes = [2] * h.n
    return [
        verify_lemma_main(h, sizes, trials, seed),
        verify_lemma_conformal(h, identity_partition(h), trials, seed),
        verify_scheme_span_inequality(h, trials, seed),
        verify_general_Z_inequality(h, trials, seed),
    ]

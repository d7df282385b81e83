"""Bundled verification scenarios.

Each scenario builds a documented construction, measures the transfer
quantities it is supposed to exhibit, and reports one record per claim.
Claims tagged ``claimed`` restate externally asserted expectations; claims
tagged ``derived`` carry values established independently from the
mathematics.  A claim whose stated expectation conflicts with the measured
(and independently derived) value is reported with status ``discrepancy``
rather than failure, so a verification run stays usable while preserving
the finding.

Reports are plain data and serialize to JSON; :data:`REPORT_SCHEMA` is the
published schema.  Everything is deterministic (seeded sampling, fixed
12-decimal formatting); only ``runtime_seconds`` varies between runs.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .core import (
    SignedGraph,
    balance_verdict,
    build_signed_graph,
    from_net_matrix,
    signed_union,
    switch,
    underlying,
)
from .construct import (
    CubelikeSpec,
    antipodal_pairs,
    cartesian_product,
    circulant,
    cocktail_party,
    complete,
    complete_bipartite,
    cover_index,
    cubelike,
    cycle,
    double_cover,
    hypercube,
    permutation_graph,
    petersen,
    random_regular,
    regular_stats,
    signed_join,
)
from .spectral import (
    DEFAULT_TOL,
    amplitude,
    eig_sym,
    join_pst_condition,
    propagator,
    pst_search,
    signed_join_amplitude,
    unsigned_k2_join_condition,
)
from .quotient import (
    is_equitable,
    normalized_partition_matrix,
    partition_from_cells,
    quotient,
    quotient_transfer_check,
)
from .multiparticle import (
    boson_formula_comparison,
    boson_quotient,
    exterior_power,
    exterior_power_oracle,
    multiset_rank,
    multiset_states,
    subset_rank,
    symmetric_power,
)

FIDELITY_TOL = DEFAULT_TOL          # 1e-9 on fidelities
AMPLITUDE_TOL = 1e-10               # on amplitude comparisons


def fixed(x: float, places: int = 12) -> str:
    """Fixed-point decimal formatting with -0.0 normalized away."""
    v = round(float(x), places)
    if v == 0.0:
        v = 0.0
    return f"{v:.{places}f}"


@dataclass(frozen=True)
class Claim:
    description: str
    expected: str
    measured: str
    tolerance: float
    status: str          # "pass" | "fail" | "discrepancy"
    provenance: str      # "claimed" | "derived"


@dataclass(frozen=True)
class ScenarioReport:
    scenario: str
    claims: tuple
    runtime_seconds: float

    @property
    def status(self) -> str:
        """Worst claim status: fail beats discrepancy beats pass."""
        statuses = {c.status for c in self.claims}
        if "fail" in statuses:
            return "fail"
        if "discrepancy" in statuses:
            return "discrepancy"
        return "pass"


def report_to_dict(report: ScenarioReport) -> dict:
    return {
        "scenario": report.scenario,
        "claims": [
            {
                "description": c.description,
                "expected": c.expected,
                "measured": c.measured,
                "tolerance": c.tolerance,
                "status": c.status,
                "provenance": c.provenance,
            }
            for c in report.claims
        ],
        "runtime_seconds": report.runtime_seconds,
    }


# --- claim helpers ---------------------------------------------------------


def _close(description: str, expected: float, measured: float, tol: float,
           provenance: str) -> Claim:
    ok = abs(measured - expected) <= tol
    return Claim(description, fixed(expected), fixed(measured), tol,
                 "pass" if ok else "fail", provenance)


def _at_most(description: str, bound: float, measured: float, provenance: str,
             tol: float = 0.0) -> Claim:
    ok = measured <= bound + tol
    return Claim(description, "<= " + fixed(bound), fixed(measured), tol,
                 "pass" if ok else "fail", provenance)


def _yes(description: str, ok: bool, provenance: str,
         measured: str = "") -> Claim:
    return Claim(description, "yes", measured or ("yes" if ok else "no"), 0.0,
                 "pass" if ok else "fail", provenance)


def _refuted(description: str, expected: float, measured: float,
             derived: float, tol: float) -> Claim:
    """A claimed expectation checked against measurement.

    Passes when the claim holds; reports ``discrepancy`` when the
    measurement instead matches the independently derived value; fails
    when it matches neither.
    """
    if abs(measured - expected) <= tol:
        status = "pass"
    elif abs(measured - derived) <= tol:
        status = "discrepancy"
    else:
        status = "fail"
    return Claim(description, fixed(expected), fixed(measured), tol, status,
                 "claimed")


def _max_pair_fidelity(g: SignedGraph, t_max: float) -> float:
    """Best transfer fidelity over all unordered vertex pairs on [0, t_max]."""
    best = 0.0
    for a in range(g.n):
        for b in range(a + 1, g.n):
            hits = pst_search(g, a, b, t_max=t_max)
            best = max(best, max(h.fidelity for h in hits))
    return best


# --- scenarios -------------------------------------------------------------


def _fig1_cycles() -> list:
    claims = []
    c4 = cycle(4)
    claims.append(_close("unsigned 4-cycle: antipodal fidelity 0 -> 2 at t = pi/2",
                         1.0, amplitude(c4, 0, 2, math.pi / 2).fidelity,
                         FIDELITY_TOL, "claimed"))

    balanced = build_signed_graph(4, [(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 0, -1)])
    verdict = balance_verdict(balanced)
    claims.append(_yes("two-negative-edge 4-cycle is balanced",
                       verdict.status == "balanced", "claimed",
                       measured=verdict.status))
    claims.append(_close("balanced signed 4-cycle: antipodal fidelity at t = pi/2",
                         1.0, amplitude(balanced, 0, 2, math.pi / 2).fidelity,
                         FIDELITY_TOL, "claimed"))

    allneg = build_signed_graph(4, [(0, 1, -1), (1, 2, -1), (2, 3, -1), (3, 0, -1)])
    vneg = balance_verdict(allneg)
    antibal = vneg.status == "antibalanced" or vneg.also_antibalanced
    claims.append(_yes("all-negative 4-cycle is antibalanced",
                       antibal, "claimed"))
    claims.append(_close("all-negative 4-cycle: antipodal fidelity at t = pi/2",
                         1.0, amplitude(allneg, 0, 2, math.pi / 2).fidelity,
                         FIDELITY_TOL, "claimed"))

    unbal = build_signed_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1)])
    a = unbal.adjacency
    claims.append(_close("one-negative-edge 4-cycle: max |A^2 - 2I| (exact identity)",
                         0.0, float(np.abs(a @ a - 2 * np.eye(4)).max()), 0.0,
                         "derived"))
    claims.append(_close("one-negative-edge 4-cycle: best transfer fidelity over "
                         "any pair on [0, 4pi] (no perfect transfer)",
                         0.5, _max_pair_fidelity(unbal, 4 * math.pi), 1e-6,
                         "derived"))
    return claims


def _join_k2_3reg() -> list:
    cases = [
        ("complete graph on 4 vertices", complete(4), 4),
        ("complete bipartite 3+3", complete_bipartite(3, 3), 6),
        ("3-cube", hypercube(3), 8),
        ("Petersen graph", petersen(), 10),
    ]
    claims = []
    times = []
    for name, g, n in cases:
        t = math.pi / math.sqrt(4 + 2 * n)
        times.append(t)
        joined = signed_join(complete(2), g, -1, +1)
        fid = amplitude(joined, 0, 1, t).fidelity
        claims.append(_close(
            f"negative 2-clique joined to {name}: clique-pair fidelity at "
            f"t = pi/sqrt({4 + 2 * n})", 1.0, fid, FIDELITY_TOL, "claimed"))
    decreasing = all(t1 > t2 for t1, t2 in zip(times, times[1:]))
    claims.append(_yes("transfer times strictly decrease with the partner size",
                       decreasing, "derived"))
    return claims


def _join_formula() -> list:
    rng = np.random.default_rng(20260818)
    g1_pool = [complete(2), cycle(4), complete(4), cycle(5), complete(5)]
    worst = 0.0
    samples = 200
    for i in range(samples):
        g1 = g1_pool[i % len(g1_pool)]
        k2 = 3 if i % 2 == 0 else 4
        n2 = int(rng.choice([4, 6, 8, 10, 12] if k2 == 3 else list(range(5, 13))))
        g2 = random_regular(n2, k2, seed=int(rng.integers(0, 2 ** 31)))
        t = float(rng.uniform(0.0, 2 * math.pi))
        a = int(rng.integers(0, g1.n))
        b = int(rng.integers(0, g1.n))
        closed = signed_join_amplitude(g1, g2, a, b, t)
        direct = amplitude(signed_join(g1, g2, -1, +1), a, b, t)
        worst = max(worst, abs(closed.value - direct.value))
    claims = [
        _at_most(f"closed-form join amplitude vs dense spectral route: max "
                 f"error over {samples} seeded samples (regular partners on "
                 f"up to 12 vertices)", 1e-9, worst, "derived"),
    ]
    return claims


def _join_divisibility() -> list:
    claims = []
    cond = join_pst_condition(1, 7, 2, 24, 2)
    claims.append(_yes("degree/size data (1, 7, 2, 24) with period parameter 2 "
                       "admits clique-pair transfer",
                       cond.holds and abs(cond.Delta - 8.0) < 1e-12, "claimed",
                       measured=f"holds = {str(cond.holds).lower()}, "
                                f"Delta = {fixed(cond.Delta, 6)}"))
    g = circulant(24, (1, 2, 3, 12))
    stats = regular_stats(g)
    claims.append(_yes("circulant partner with connections {1, 2, 3, 12} is "
                       "7-regular on 24 vertices",
                       stats.n == 24 and stats.k == 7, "derived",
                       measured=f"n = {stats.n}, k = {stats.k}"))
    joined = signed_join(complete(2), g, -1, +1)
    claims.append(_close("negative 2-clique joined to that circulant: "
                         "clique-pair fidelity at t = pi/2",
                         1.0, amplitude(joined, 0, 1, math.pi / 2).fidelity,
                         FIDELITY_TOL, "derived"))
    solutions = sum(1 for n in range(4, 201, 2)
                    if unsigned_k2_join_condition(3, n).holds)
    claims.append(_close("all-positive 2-clique join with a cubic partner: "
                         "integrality condition has no solution for even "
                         "sizes up to 200", 0.0, float(solutions), 0.0,
                         "claimed"))
    return claims


def _k6_no_pst() -> list:
    claims = []
    k6max = _max_pair_fidelity(complete(6), 4 * math.pi)
    claims.append(_close("unsigned complete graph on 6 vertices: best "
                         "off-diagonal fidelity on [0, 4pi] (1/9, no perfect "
                         "transfer)", 1.0 / 9.0, k6max, 1e-6, "derived"))
    k8max = _max_pair_fidelity(complete(8), 4 * math.pi)
    claims.append(_at_most("unsigned complete graph on 8 vertices: best "
                           "off-diagonal fidelity on [0, 4pi]",
                           0.9, k8max, "derived"))
    return claims


def _signed_k8() -> SignedGraph:
    return signed_union(cocktail_party(4), permutation_graph(8, antipodal_pairs(8)), -1)


def _k8_signed() -> list:
    claims = []
    g = _signed_k8()
    spec = eig_sym(g)
    target = np.array([5.0] + [1.0] * 4 + [-3.0] * 3)
    claims.append(_close("signed complete graph on 8 vertices (negative "
                         "antipodal matching): spectrum {5, 1^4, -3^3}",
                         0.0, float(np.abs(spec.eigenvalues - target).max()),
                         1e-9, "derived"))
    fid_quarter = min(amplitude(g, u, (u + 4) % 8, math.pi / 4,
                                spectrum=spec).fidelity
                      for u in range(8))
    claims.append(_close("antipodal fidelity at t = pi/4 (every vertex)",
                         1.0, fid_quarter, FIDELITY_TOL, "derived"))
    fid_half = amplitude(g, 0, 4, math.pi / 2, spectrum=spec).fidelity
    claims.append(_close("antipodal fidelity at t = pi/2 vanishes",
                         0.0, fid_half, 1e-9, "derived"))
    claims.append(_refuted("claimed antipodal transfer time t = pi/2 "
                           "(measured transfer happens at pi/4 instead)",
                           1.0, fid_half, 0.0, FIDELITY_TOL))
    return claims


def _cubelike_pst() -> list:
    spec3 = CubelikeSpec(3, (1, 2, 4))
    g = cubelike(spec3)
    claims = [_yes("connection set {001, 010, 100} sums to 111",
                   spec3.delta == 7, "claimed", measured=f"{spec3.delta:03b}")]
    spec = eig_sym(g)
    fids = [amplitude(g, u, u ^ 7, math.pi / 2, spectrum=spec) for u in range(8)]
    claims.append(_close("transfer u -> u xor 111 at t = pi/2 (worst vertex)",
                         1.0, min(a.fidelity for a in fids), FIDELITY_TOL,
                         "claimed"))
    claims.append(_close("common transfer amplitude i at t = pi/2",
                         0.0, max(abs(a.value - 1j) for a in fids), 1e-9,
                         "derived"))
    return claims


def _cubelike_periodic() -> list:
    spec4 = CubelikeSpec(3, (1, 2, 4, 7))
    g = cubelike(spec4)
    claims = [_yes("connection set {001, 010, 100, 111} sums to 000",
                   spec4.delta == 0, "claimed", measured=f"{spec4.delta:03b}")]
    u_half = propagator(g, math.pi / 2)
    diag_fid = float(np.min(np.abs(np.diagonal(u_half)) ** 2))
    claims.append(_close("periodic at t = pi/2: diagonal fidelity at every "
                         "vertex", 1.0, diag_fid, FIDELITY_TOL, "claimed"))
    claims.append(_close("propagator at t = pi/2 is the identity (global "
                         "phase +1 for a 4-element connection set)",
                         0.0, float(np.abs(u_half - np.eye(8)).max()), 1e-9,
                         "derived"))
    return claims


def _cubelike_signed_remark() -> list:
    q3 = hypercube(3)
    p111 = permutation_graph(8, [(u, u ^ 7) for u in range(8) if u < u ^ 7])
    g = signed_union(q3, p111, -1)
    a = g.adjacency
    claims = [_close("3-cube with negative antipodal matching: "
                     "max |A^2 - 4I| (exact identity)",
                     0.0, float(np.abs(a @ a - 4 * np.eye(8)).max()), 0.0,
                     "derived")]
    hits = pst_search(g, 0, 7, t_max=4 * math.pi)
    claims.append(_close("best fidelity 000 -> 111 on [0, 4pi]",
                         0.25, max(h.fidelity for h in hits), 1e-6, "derived"))
    fid_half = amplitude(g, 0, 7, math.pi / 2).fidelity
    claims.append(_refuted("claimed antipodal transfer at t = pi/2 (the "
                           "A^2 = 4I identity caps every fidelity at 1/4)",
                           1.0, fid_half, 0.0, FIDELITY_TOL))
    u_half = propagator(g, math.pi / 2)
    claims.append(_close("walk is instead periodic at t = pi/2 with "
                         "amplitude -1", 0.0,
                         float(np.abs(u_half + np.eye(8)).max()), 1e-9,
                         "derived"))
    return claims


def _double_cover() -> list:
    q3 = hypercube(3)
    g2 = cubelike(CubelikeSpec(3, (1, 2, 4, 7)))
    layered = signed_union(q3, g2, -1, mode="multigraph")
    cov = double_cover(layered)
    claims = []
    cos_diag = np.diagonal(propagator(g2, math.pi / 2).real)
    claims.append(_close("cover precondition: cos(A t) has unit diagonal on "
                         "the negative layer at t = pi/2",
                         1.0, float(cos_diag.min()), 1e-10, "claimed"))
    spec = eig_sym(cov)
    fid1 = min(amplitude(cov, cover_index(u, 1), cover_index(u ^ 7, 1),
                         math.pi / 2, spectrum=spec).fidelity
               for u in range(8))
    claims.append(_close("16-vertex double cover: fidelity (u, 1) -> "
                         "(u xor 111, 1) at t = pi/2 (worst vertex)",
                         1.0, fid1, FIDELITY_TOL, "claimed"))
    fid0 = min(amplitude(cov, cover_index(u, 0), cover_index(u ^ 7, 0),
                         math.pi / 2, spectrum=spec).fidelity
               for u in range(8))
    claims.append(_close("the same transfer holds on the other layer",
                         1.0, fid0, FIDELITY_TOL, "derived"))
    return claims


def _quotient_equiv() -> list:
    g = signed_join(complete(2), complete(4), -1, +1)
    part = partition_from_cells([[0], [1], [2, 3, 4, 5]], 6)
    claims = []
    ok, _profile = is_equitable(g, part)
    claims.append(_yes("partition {a}, {b}, {4-clique} is equitable for both "
                       "sign layers", ok, "claimed"))
    q = quotient(g, part)
    target = np.array([[0.0, -1.0, 2.0], [-1.0, 0.0, 2.0], [2.0, 2.0, 3.0]])
    claims.append(_close("3x3 quotient matrix [[0,-1,2],[-1,0,2],[2,2,3]]",
                         0.0, float(np.abs(q.matrix - target).max()), 1e-12,
                         "derived"))
    qm = normalized_partition_matrix(part)
    claims.append(_close("normalized indicator: Q^T Q = I",
                         0.0, float(np.abs(qm.T @ qm - np.eye(3)).max()),
                         1e-12, "claimed"))
    proj = qm @ qm.T
    a = g.adjacency
    claims.append(_close("averaging projector commutes with the adjacency",
                         0.0, float(np.abs(proj @ a - a @ proj).max()),
                         1e-11, "claimed"))
    times = np.linspace(0.0, 2 * math.pi, 100)
    worst = 0.0
    for t in times:
        tc = quotient_transfer_check(g, part, 0, 1, float(t))
        worst = max(worst, abs(tc.full.value - tc.reduced.value))
    claims.append(_at_most("full walk vs quotient walk between the clique "
                           "pair: max amplitude deviation at 100 times",
                           AMPLITUDE_TOL, worst, "claimed"))
    bad = partition_from_cells([[0], [1, 2], [3, 4, 5]], 6)
    ok_bad, _ = is_equitable(g, bad)
    qb = normalized_partition_matrix(bad)
    pb = qb @ qb.T
    violation = float(np.abs(pb @ a - a @ pb).max())
    claims.append(_yes("a deliberately uneven partition is rejected and "
                       "breaks the commutation bound",
                       (not ok_bad) and violation > 1e-3, "derived",
                       measured=f"equitable = {str(ok_bad).lower()}, "
                                f"commutator max = {fixed(violation)}"))
    return claims


def _exhaustive_sign_rule(max_n: int = 5, spot_every: int = 97):
    """Compare the combinatorial sign rule with the conjugation oracle on
    every labeled graph with at most ``max_n`` vertices, every order.

    The conjugation responds linearly to the adjacency matrix, so the
    oracle value for an arbitrary graph is assembled exactly from the
    conjugated single-edge graphs; a deterministic subsample is also
    conjugated directly to validate the assembly.
    """
    checked = 0
    mismatches = 0
    spots = 0
    for n in range(2, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for k in range(1, n):
            basis = []
            for (u, v) in pairs:
                e = build_signed_graph(n, [(u, v, 1)])
                basis.append(exterior_power_oracle(e, k).weights)
            zero = np.zeros_like(basis[0])
            for mask in range(1 << len(pairs)):
                edges = [(u, v, 1) for i, (u, v) in enumerate(pairs)
                         if mask >> i & 1]
                g = build_signed_graph(n, edges)
                built = exterior_power(g, k).adjacency
                oracle = sum((basis[i] for i in range(len(pairs))
                              if mask >> i & 1), zero)
                if np.abs(built - oracle).max() != 0:
                    mismatches += 1
                if mask % spot_every == 0:
                    direct = exterior_power_oracle(g, k).weights
                    if np.abs(direct - oracle).max() != 0:
                        mismatches += 1
                    spots += 1
                checked += 1
    return checked, mismatches, spots


def _ext_c4() -> list:
    claims = []
    checked, mismatches, spots = _exhaustive_sign_rule()
    claims.append(_yes(f"sign rule matches the conjugation oracle on all "
                       f"{checked} (graph, order) instances with up to 5 "
                       f"vertices ({spots} direct conjugation spot checks)",
                       mismatches == 0, "derived",
                       measured=f"mismatches = {mismatches}"))
    rng = np.random.default_rng(4242)
    random_bad = 0
    for trial in range(50):
        n = 6 if trial % 2 == 0 else 7
        pairs = list(itertools.combinations(range(n), 2))
        edges = [(u, v, 1) for (u, v) in pairs if rng.random() < 0.5]
        g = build_signed_graph(n, edges)
        diff = np.abs(exterior_power(g, 2).adjacency
                      - exterior_power_oracle(g, 2).weights).max()
        if diff != 0:
            random_bad += 1
    claims.append(_yes("sign rule matches the oracle on 50 seeded random "
                       "graphs with 6 or 7 vertices (order 2)",
                       random_bad == 0, "derived",
                       measured=f"mismatches = {random_bad}"))

    # The placement claim fixes the 4-cycle drawn on square corners
    # a=0, b=1, c=2, d=3 with edges ab, ac, bd, cd (antipodes a-d, b-c).
    c4sq = build_signed_graph(4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)])
    ext = exterior_power(c4sq, 2)
    neg_edges = {(u, v) for u in range(6) for v in range(u + 1, 6)
                 if ext.neg[u, v] != 0}
    r_ab, r_bc, r_cd = (subset_rank(p, 4) for p in [(0, 1), (1, 2), (2, 3)])
    expected_neg = {tuple(sorted((r_ab, r_bc))), tuple(sorted((r_bc, r_cd)))}
    claims.append(_yes("second power of the corner-labeled 4-cycle: exactly "
                       "the edges joining a^b and c^d to b^c are negative",
                       neg_edges == expected_neg, "claimed",
                       measured=f"negative edge count = {len(neg_edges)}"))
    degrees = sorted(int(d) for d in ext.support.sum(axis=0))
    claims.append(_yes("its support is the complete bipartite 2+4 graph",
                       degrees == [2, 2, 2, 2, 4, 4], "claimed",
                       measured="degrees " + ",".join(map(str, degrees))))
    fid = amplitude(ext, subset_rank((0, 1), 4), subset_rank((2, 3), 4),
                    math.pi / 2).fidelity
    claims.append(_close("pair transfer a^b -> c^d at t = pi/2",
                         1.0, fid, FIDELITY_TOL, "claimed"))
    return claims


def _ext_q3() -> list:
    q3 = hypercube(3)
    ext = exterior_power(q3, 2)
    spec = eig_sym(ext)
    claims = [_yes("second power of the 3-cube has 28 vertices",
                   ext.n == 28, "derived", measured=str(ext.n))]
    worst = 1.0
    count = 0
    for u in range(8):
        for v in range(u + 1, 8):
            if v == u ^ 7:
                continue
            ra = subset_rank(tuple(sorted((u, v))), 8)
            rb = subset_rank(tuple(sorted((u ^ 7, v ^ 7))), 8)
            worst = min(worst, amplitude(ext, ra, rb, math.pi / 2,
                                         spectrum=spec).fidelity)
            count += 1
    claims.append(_close(f"pair transfer {{u,v}} -> {{u xor 111, v xor 111}} "
                         f"at t = pi/2 for all {count} disjoint antipodal "
                         f"pairs (worst case)", 1.0, worst, FIDELITY_TOL,
                         "derived"))
    fixed_dev = max(abs(amplitude(ext, subset_rank((u, u ^ 7), 8),
                                  subset_rank((u, u ^ 7), 8), math.pi / 2,
                                  spectrum=spec).value - 1.0)
                    for u in range(8) if u < u ^ 7)
    claims.append(_close("the four self-antipodal pairs are fixed with "
                         "amplitude +1", 0.0, float(fixed_dev), 1e-9,
                         "derived"))
    return claims


def _sym_vs_ext() -> list:
    claims = []
    c4 = cycle(4)
    ext = exterior_power(c4, 2)
    sym = symmetric_power(c4, 2)
    claims.append(_yes("signed and unsigned second powers share their "
                       "support on the 4-cycle",
                       bool(np.array_equal(underlying(ext).adjacency,
                                           sym.adjacency)), "claimed"))
    big_side = {subset_rank((0, 2), 4), subset_rank((1, 3), 4)}
    expected = np.array([[1.0 if (i in big_side) != (j in big_side) else 0.0
                          for j in range(6)] for i in range(6)])
    claims.append(_yes("the unsigned second power is the complete bipartite "
                       "2+4 graph", bool(np.array_equal(sym.adjacency, expected)),
                       "claimed"))
    t_sym = math.pi / math.sqrt(8)
    fid_sym = amplitude(sym, subset_rank((0, 2), 4), subset_rank((1, 3), 4),
                        t_sym).fidelity
    claims.append(_close("unsigned power: transfer {0,2} -> {1,3} at "
                         "t = pi/sqrt(8)", 1.0, fid_sym, FIDELITY_TOL,
                         "claimed"))
    r01, r23 = subset_rank((0, 1), 4), subset_rank((2, 3), 4)
    fid_ext_pair = amplitude(ext, r01, r23, math.pi / 2).fidelity
    fid_sym_pair = max(amplitude(sym, r01, r23, math.pi / 2).fidelity,
                       amplitude(sym, r01, r23, t_sym).fidelity)
    claims.append(_yes("the signed power transfers on a different pair than "
                       "the unsigned one",
                       fid_ext_pair >= 1 - FIDELITY_TOL
                       and fid_sym_pair < 0.999999,
                       "claimed",
                       measured=f"signed {fixed(fid_ext_pair)} vs unsigned "
                                f"{fixed(fid_sym_pair)} on {{0,1}} -> {{2,3}}"))
    base = eig_sym(c4).eigenvalues
    pair_sums = np.sort(np.array([base[i] + base[j]
                                  for i in range(4) for j in range(i + 1, 4)]))
    claims.append(_close("signed-power spectrum equals the pairwise sums of "
                         "distinct base eigenvalues", 0.0,
                         float(np.abs(np.sort(eig_sym(ext).eigenvalues)
                                      - pair_sums).max()), 1e-9, "derived"))
    rng = np.random.default_rng(606)
    support_bad = 0
    for _trial in range(10):
        n = 6
        pairs = list(itertools.combinations(range(n), 2))
        edges = [(u, v, 1) for (u, v) in pairs if rng.random() < 0.5]
        g = build_signed_graph(n, edges)
        if not np.array_equal(underlying(exterior_power(g, 2)).adjacency,
                              symmetric_power(g, 2).adjacency):
            support_bad += 1
    claims.append(_yes("support equality holds on 10 seeded random graphs "
                       "with 6 vertices", support_bad == 0, "derived",
                       measured=f"mismatches = {support_bad}"))
    return claims


def _boson_orbit_quotient(g: SignedGraph) -> np.ndarray:
    """Independent route to the 2-boson walk: the equitable quotient of the
    two-walker Cartesian square under the coordinate-swap orbit partition."""
    n = g.n
    square = from_net_matrix(np.kron(g.adjacency, np.eye(n))
                             + np.kron(np.eye(n), g.adjacency))
    cells = [[] for _ in multiset_states(n, 2)]
    for u in range(n):
        for v in range(n):
            state = tuple(sorted((u, v)))
            cells[multiset_rank(state, n)].append(u * n + v)
    return quotient(square, partition_from_cells(cells, n * n)).matrix


def _boson_ladder() -> list:
    claims = []
    k2 = complete(2)
    ladder = boson_quotient(k2, 2)
    w = ladder.weights
    ladder_ok = (w.shape == (3, 3)
                 and abs(w[0, 1] - math.sqrt(2)) < 1e-12
                 and abs(w[1, 2] - math.sqrt(2)) < 1e-12
                 and w[0, 2] == 0 and np.abs(np.diagonal(w)).max() == 0)
    claims.append(_yes("two bosons on one edge walk on a 3-state ladder with "
                       "both hops sqrt(2)", ladder_ok, "derived",
                       measured=f"hops {fixed(w[0, 1])}, {fixed(w[1, 2])}"))
    dev = max(float(np.abs(_boson_orbit_quotient(g) - boson_quotient(g, 2).weights).max())
              for g in (k2, cycle(3), complete(4)))
    claims.append(_close("symmetrizer conjugation agrees with the "
                         "orbit-partition quotient of the two-walker square",
                         0.0, dev, 1e-12, "derived"))
    mismatches = boson_formula_comparison(k2, 2)
    mm = mismatches[0]
    claims.append(Claim(
        "claimed closed-form hop weight sqrt((a_u - 1)(a_v + 1)) reproduces "
        "the conjugation value",
        "0 mismatched hop classes",
        f"{len(mismatches)} mismatched hop classes; e.g. {mm[0]} -> {mm[1]} "
        f"gives {fixed(mm[2])} instead of {fixed(mm[3])}",
        1e-9,
        "discrepancy" if mismatches else "pass",
        "claimed"))
    amp = amplitude(ladder, 0, 2, math.pi / 2)
    claims.append(_close("end-to-end ladder transfer at t = pi/2 with "
                         "amplitude -1", 0.0, abs(amp.value - (-1.0)), 1e-9,
                         "derived"))
    return claims


def _balanced_products() -> list:
    claims = []
    patterns = [(1, 1, 1), (1, 1, -1), (1, -1, -1), (-1, -1, -1)]
    rng = np.random.default_rng(31415)
    factor_ok = True
    worst_fid = 1.0
    worst_switch_dev = 0.0
    product_balanced = True
    for signs in patterns:
        factors = [build_signed_graph(2, [(0, 1, s)]) for s in signs]
        for f in factors:
            v = balance_verdict(f)
            factor_ok &= v.status == "balanced" and v.also_antibalanced
        prod = cartesian_product(factors)
        product_balanced &= balance_verdict(prod).status == "balanced"
        fid = amplitude(prod, 0, 7, math.pi / 2).fidelity
        worst_fid = min(worst_fid, fid)
        for _ in range(20):
            d = rng.choice([-1, 1], size=8)
            fid_s = amplitude(switch(prod, d), 0, 7, math.pi / 2).fidelity
            worst_switch_dev = max(worst_switch_dev, abs(fid_s - fid))
    claims.append(_yes("every single-edge factor signing is both balanced "
                       "and antibalanced", factor_ok, "derived"))
    claims.append(_close("signed cube products (all four sign patterns): "
                         "endpoint-tuple fidelity at t = pi/2 (worst case)",
                         1.0, worst_fid, FIDELITY_TOL, "claimed"))
    claims.append(_yes("each product is switching-equivalent to the "
                       "all-positive cube", product_balanced, "derived"))
    claims.append(_at_most("fidelity deviation across 20 random switchings "
                           "per product", AMPLITUDE_TOL, worst_switch_dev,
                           "claimed"))
    return claims


SCENARIOS = {
    "fig1-cycles": _fig1_cycles,
    "join-k2-3reg": _join_k2_3reg,
    "join-formula": _join_formula,
    "join-divisibility": _join_divisibility,
    "k6-no-pst": _k6_no_pst,
    "k8-signed": _k8_signed,
    "cubelike-pst": _cubelike_pst,
    "cubelike-periodic": _cubelike_periodic,
    "cubelike-signed-remark": _cubelike_signed_remark,
    "double-cover": _double_cover,
    "quotient-equiv": _quotient_equiv,
    "ext-c4": _ext_c4,
    "ext-q3": _ext_q3,
    "sym-vs-ext": _sym_vs_ext,
    "boson-ladder": _boson_ladder,
    "balanced-products": _balanced_products,
}

SCENARIO_IDS = tuple(SCENARIOS)


REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "scenario verification report",
    "type": "object",
    "required": ["scenario", "claims", "runtime_seconds"],
    "additionalProperties": False,
    "properties": {
        "scenario": {"type": "string", "enum": list(SCENARIO_IDS)},
        "runtime_seconds": {"type": "number", "minimum": 0},
        "claims": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["description", "expected", "measured",
                             "tolerance", "status", "provenance"],
                "additionalProperties": False,
                "properties": {
                    "description": {"type": "string"},
                    "expected": {"type": "string"},
                    "measured": {"type": "string"},
                    "tolerance": {"type": "number", "minimum": 0},
                    "status": {"enum": ["pass", "fail", "discrepancy"]},
                    "provenance": {"enum": ["claimed", "derived"]},
                },
            },
        },
    },
}


def run_scenario(scenario_id: str) -> ScenarioReport:
    """Run one named scenario and time it."""
    try:
        fn = SCENARIOS[scenario_id]
    except KeyError:
        known = ", ".join(SCENARIO_IDS)
        raise KeyError(f"unknown scenario {scenario_id!r}; choose one of: {known}")
    start = time.perf_counter()
    claims = fn()
    return ScenarioReport(scenario_id, tuple(claims),
                          time.perf_counter() - start)


def run_all_scenarios() -> list:
    return [run_scenario(sid) for sid in SCENARIO_IDS]

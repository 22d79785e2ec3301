"""Claim-level verification harness.

Every checkable structural statement is a named check that returns a
structured VerificationReport: claim id, parameters, pass/fail/skip
status, the counts that were actually examined, and concrete witnesses
whenever something fails.  Checks are deterministic given their seed;
wall time is the only field allowed to differ between runs.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from .codes import (hamming_distance, hamming_weight, is_projective,
                    iter_codewords, is_simplex_code,
                    simplex_equations_satisfied_literal,
                    weight_distribution, weight_satisfies_simplex_equations)
from .constructions import (ConstructionPair, binary_fixture_lines, bracket,
                            fixture_binary_15_4, fixture_ternary_13_3,
                            gaussian_binomial, lemma14_pair, remark1_pair)
from .errors import ConstructionFailed, NotCovered
from .gf import field_of_order
from .graphs import (bipartition, build_graph, common_neighbor_candidates,
                     common_projective_neighbors, distance_matrix,
                     geodesic_count_matrix, grassmann_geodesic_count,
                     incidence_graph_1_3, isomorphic, meet_dim_matrix,
                     theorem1_geodesic_bound)
from .linalg import Subspace, intersect, intersect_dim, subspace_from_rows, superspaces_in

MAX_VERTICES_DEFAULT = 10**7
MAX_SCAN_DEFAULT = 2 * 10**7
SAMPLE_CAP = 10**5

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-guard"


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: dict
    status: str
    counts: dict
    witnesses: list
    seed: int | None
    version: str = __version__
    wall_time: float = 0.0

    def content(self) -> dict:
        """Everything except wall time; two runs must agree on this."""
        return {"claim": self.claim, "params": self.params,
                "status": self.status, "counts": self.counts,
                "witnesses": self.witnesses, "seed": self.seed,
                "version": self.version}

    def to_dict(self) -> dict:
        d = self.content()
        d["wall_time"] = self.wall_time
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(claim=d["claim"], params=d["params"], status=d["status"],
                   counts=d["counts"], witnesses=d["witnesses"],
                   seed=d["seed"], version=d["version"],
                   wall_time=d.get("wall_time", 0.0))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def _report(claim, params, status, counts, witnesses, seed, t0) -> VerificationReport:
    return VerificationReport(claim=claim, params=params, status=status,
                              counts=counts, witnesses=witnesses, seed=seed,
                              wall_time=round(time.perf_counter() - t0, 6))


def _pair_witness(x: Subspace, y: Subspace, **extra) -> dict:
    w = {"x": x.to_text(), "y": y.to_text()}
    w.update(extra)
    return w


# ----------------------------------------------------------------------
# Graph-metric claims
# ----------------------------------------------------------------------

def _graph_metric_checks(g, k: int, q: int, exact_formula: bool):
    """Distance-vs-meet coincidence and geodesic-count conditions.

    With ``exact_formula`` the count must equal the full-graph product
    formula; otherwise it must meet the single-product lower bound.
    Returns (ok, counts, witnesses).
    """
    counts: dict = {"vertices": g.order, "edges": g.num_edges}
    witnesses: list = []
    if g.order == 0:
        return False, counts, [{"reason": "no vertices at these parameters"}]
    dist = distance_matrix(g)
    if (dist < 0).any():
        i, j = map(int, np.argwhere(dist < 0)[0])
        counts["connected"] = False
        witnesses.append(_pair_witness(g.vertices[i], g.vertices[j],
                                       reason="disconnected pair"))
        return False, counts, witnesses
    counts["connected"] = True
    diam = int(dist.max())
    counts["diameter"] = diam

    meets = meet_dim_matrix(g)
    mismatch = dist != (k - meets)
    counts["pairs"] = g.order * (g.order - 1) // 2
    counts["distance_mismatches"] = int(mismatch.sum() // 2)
    ok = True
    if mismatch.any():
        i, j = map(int, np.argwhere(mismatch)[0])
        witnesses.append(_pair_witness(
            g.vertices[i], g.vertices[j],
            distance=int(dist[i, j]), meet_dim=int(meets[i, j]),
            reason="graph distance differs from k - dim(X∩Y)"))
        ok = False

    geo = geodesic_count_matrix(g, dist)
    counts["geodesic_violations"] = 0
    per_level = {}
    for m in range(2, diam + 1):
        mask = dist == m
        if not mask.any():
            continue
        vals = geo[mask]
        if exact_formula:
            expected = grassmann_geodesic_count(m, q)
            bad = vals != expected
        else:
            expected = theorem1_geodesic_bound(m, q)
            bad = vals < expected
        per_level[str(m)] = {"pairs": int(mask.sum() // 2),
                             "bound": expected,
                             "min_count": int(vals.min()),
                             "max_count": int(vals.max())}
        if bad.any():
            counts["geodesic_violations"] += int(bad.sum() // 2)
            where = np.argwhere(mask)
            flat_bad = np.flatnonzero(bad)[0]
            i, j = map(int, where[flat_bad])
            witnesses.append(_pair_witness(
                g.vertices[i], g.vertices[j], distance=m,
                count=int(geo[i, j]), bound=expected,
                reason="geodesic count condition violated"))
            ok = False
    counts["geodesics_by_distance"] = per_level
    return ok, counts, witnesses


def check_theorem1(n: int, k: int, q: int,
                   max_vertices: int = MAX_VERTICES_DEFAULT,
                   seed: int | None = 0) -> VerificationReport:
    """Connectivity, diameter, distance coincidence and geodesic lower
    bound for the graph of projective [n,k]_q codes."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "q": q}
    total = gaussian_binomial(n, k, q)
    if total > max_vertices:
        return _report("theorem1", params, SKIPPED,
                       {"subspaces": total, "guard": max_vertices}, [], seed, t0)
    hypothesis_met = q >= math.comb(n, 2)
    g = build_graph(n, k, q, "projective")
    ok, counts, witnesses = _graph_metric_checks(g, k, q, exact_formula=False)
    counts["hypothesis_met"] = hypothesis_met
    counts["subspaces_enumerated"] = total
    if ok and counts.get("diameter") != min(k, n - k):
        ok = False
        witnesses.append({"reason": "diameter differs from min(k, n-k)",
                          "diameter": counts.get("diameter"),
                          "expected": min(k, n - k)})
    return _report("theorem1", params, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


def check_grassmann(n: int, k: int, q: int,
                    max_vertices: int = MAX_VERTICES_DEFAULT,
                    seed: int | None = 0) -> VerificationReport:
    """Distance formula and exact geodesic-count product formula on the
    full graph of all k-dim subspaces."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "q": q}
    total = gaussian_binomial(n, k, q)
    if total > max_vertices:
        return _report("grassmann", params, SKIPPED,
                       {"subspaces": total, "guard": max_vertices}, [], seed, t0)
    g = build_graph(n, k, q, "all")
    ok, counts, witnesses = _graph_metric_checks(g, k, q, exact_formula=True)
    expected_diam = k if n >= 2 * k else n - k
    if ok and counts.get("diameter") != expected_diam:
        ok = False
        witnesses.append({"reason": "diameter differs from min(k, n-k)",
                          "diameter": counts.get("diameter"),
                          "expected": expected_diam})
    return _report("grassmann", params, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


# ----------------------------------------------------------------------
# Simplex-vector equation claims
# ----------------------------------------------------------------------

def _decode_vector(idx: int, q: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        idx, d = divmod(idx, q)
        digits.append(d)
    return tuple(digits)


def _ambient_weights(q: int, n: int) -> np.ndarray:
    """Hamming weight of every vector of F_q^n, indexed by encoding."""
    idx = np.arange(q**n, dtype=np.int64)
    w = np.zeros(q**n, dtype=np.int16)
    for _ in range(n):
        idx, d = np.divmod(idx, q)
        w += (d != 0).astype(np.int16)
    return w


def check_theorem2(q: int, k: int, max_scan: int = MAX_SCAN_DEFAULT,
                   seed: int | None = 0,
                   literal_samples: int = 200) -> VerificationReport:
    """Exhaustive scan: a nonzero vector solves the symmetric equation
    system exactly when its weight is q^(k-1).  Also cross-validates the
    literal polynomial evaluation against the weight shortcut on a
    seeded sample, and records the zero-vector boundary case."""
    t0 = time.perf_counter()
    params = {"q": q, "k": k}
    n = bracket(k, q)
    total = q**n
    if total > max_scan:
        return _report("theorem2", params, SKIPPED,
                       {"vectors": total, "guard": max_scan}, [], seed, t0)
    target = q**(k - 1)
    weights = _ambient_weights(q, n)
    eq_by_weight = np.array(
        [weight_satisfies_simplex_equations(w, q, k) for w in range(n + 1)],
        dtype=bool)
    satisfied = eq_by_weight[weights]
    simplex = weights == target
    mismatch = satisfied != simplex
    mismatch[0] = False          # the zero vector is reported separately
    n_mismatch = int(mismatch.sum())

    witnesses: list = []
    if n_mismatch:
        for idx in np.flatnonzero(mismatch)[:5]:
            v = _decode_vector(int(idx), q, n)
            witnesses.append({"vector": list(v),
                              "weight": hamming_weight(v),
                              "satisfies_equations": bool(satisfied[idx]),
                              "reason": "equation/weight mismatch"})

    fld = field_of_order(q)
    rng = random.Random(seed)
    literal_disagreements = 0
    for _ in range(literal_samples):
        idx = rng.randrange(total)
        v = _decode_vector(idx, q, n)
        lit = simplex_equations_satisfied_literal(v, fld, k)
        if lit != bool(satisfied[idx]):
            literal_disagreements += 1
            witnesses.append({"vector": list(v),
                              "reason": "literal evaluation disagrees with shortcut"})

    counts = {
        "vectors_scanned": total,
        "nonzero_vectors": total - 1,
        "weight_target": target,
        "solutions_nonzero": int((satisfied & (weights > 0)).sum()),
        "simplex_vectors": int(simplex.sum()),
        "mismatches": n_mismatch,
        "literal_samples": literal_samples,
        "literal_disagreements": literal_disagreements,
        "zero_vector_satisfies_equations": bool(eq_by_weight[0]),
        "zero_vector_is_simplex": False,
    }
    ok = n_mismatch == 0 and literal_disagreements == 0
    return _report("theorem2", params, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


def check_corollary1(q: int, k: int,
                     max_vertices: int = MAX_VERTICES_DEFAULT,
                     seed: int | None = 0) -> VerificationReport:
    """Simplex codes consist of equation-satisfying vectors and are
    maximal: every single-vector extension brings in a violating one."""
    t0 = time.perf_counter()
    params = {"q": q, "k": k}
    n = bracket(k, q)
    total = gaussian_binomial(n, k, q)
    if total > max_vertices or q**n > MAX_SCAN_DEFAULT:
        return _report("corollary1", params, SKIPPED,
                       {"subspaces": total, "guard": max_vertices}, [], seed, t0)
    fld = field_of_order(q)
    from .linalg import enumerate_subspaces
    codes = enumerate_subspaces(fld, n, k, is_simplex_code)
    target = q**(k - 1)
    eq_ok = [weight_satisfies_simplex_equations(w, q, k) for w in range(n + 1)]

    witnesses: list = []
    interior_ok = True
    for c in codes:
        for word in iter_codewords(c):
            if not eq_ok[hamming_weight(word)]:
                interior_ok = False
                witnesses.append({"code": c.to_text(), "vector": list(word),
                                  "reason": "codeword violates the equations"})
                break

    rejected = 0
    maximal_ok = True
    if q == 2:
        from .linalg import pack_row_bits
        weight_ok = [eq_ok[w] for w in range(n + 1)]
        for c in codes:
            words = [0]
            for r in c.rows:
                w = pack_row_bits(r)
                words += [w ^ x for x in words]
            word_set = set(words)
            for v in range(1, 2**n):
                if v in word_set:
                    continue
                if all(weight_ok[(v ^ x).bit_count()] for x in words):
                    maximal_ok = False
                    witnesses.append({
                        "code": c.to_text(),
                        "vector": list(_decode_vector(v, 2, n)),
                        "reason": "extension vector keeps all equations satisfied"})
                    break
                rejected += 1
    else:
        units = list(fld.nonzero_elements())
        add, mul = fld.add, fld.mul
        for c in codes:
            words = list(iter_codewords(c, include_zero=True))
            word_set = set(words)
            for idx in range(1, q**n):
                v = _decode_vector(idx, q, n)
                if v in word_set:
                    continue
                violating = False
                for mu in units:
                    mv = v if mu == 1 else tuple(mul(mu, x) for x in v)
                    for x in words:
                        coset = tuple(add(a, b) for a, b in zip(mv, x))
                        if not eq_ok[hamming_weight(coset)]:
                            violating = True
                            break
                    if violating:
                        break
                if not violating:
                    maximal_ok = False
                    witnesses.append({
                        "code": c.to_text(), "vector": list(v),
                        "reason": "extension vector keeps all equations satisfied"})
                    break
                rejected += 1

    counts = {
        "simplex_codes": len(codes),
        "extension_candidates_per_code": q**n - q**k,
        "extensions_rejected": rejected,
        "interior_vectors_ok": interior_ok,
        "maximality_ok": maximal_ok,
    }
    ok = interior_ok and maximal_ok and len(codes) > 0
    return _report("corollary1", params, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


def check_corollary2(seed: int | None = 0) -> VerificationReport:
    """The graph of binary dimension-3 simplex codes is isomorphic to
    the point/plane incidence graph of F_2^4."""
    t0 = time.perf_counter()
    g1 = build_graph(7, 3, 2, "simplex")
    g2 = incidence_graph_1_3()
    counts: dict = {
        "simplex_vertices": g1.order,
        "incidence_vertices": g2.order,
        "simplex_regular_degree": sorted(set(g1.degrees())),
        "incidence_regular_degree": sorted(set(g2.degrees())),
        "simplex_bipartite": bipartition(g1) is not None,
        "incidence_bipartite": bipartition(g2) is not None,
    }
    witnesses: list = []
    ok = (g1.order == 30 and g2.order == 30
          and counts["simplex_regular_degree"] == [7]
          and counts["incidence_regular_degree"] == [7]
          and counts["simplex_bipartite"] and counts["incidence_bipartite"])

    dist = distance_matrix(g1)
    meets = meet_dim_matrix(g1)
    counts["pi_connected"] = bool((dist >= 0).all())
    counts["pi_diameter"] = int(dist.max())
    counts["pi_distance_coincides"] = bool((dist == 3 - meets).all())

    mapping = isomorphic(g1, g2)
    counts["isomorphism_found"] = mapping is not None
    if mapping is None:
        ok = False
        witnesses.append({"reason": "no isomorphism found",
                          "degrees_1": sorted(g1.degrees()),
                          "degrees_2": sorted(g2.degrees())})
    else:
        witnesses.append({"isomorphism": list(mapping)})
    ok = ok and counts["pi_connected"] and counts["pi_diameter"] == 3 \
        and counts["pi_distance_coincides"]
    return _report("corollary2", {}, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


# ----------------------------------------------------------------------
# Sampled lemma checks
# ----------------------------------------------------------------------

class _SampleBudget(Exception):
    pass


def _random_subspace(rng: random.Random, fld, n: int, k: int) -> Subspace:
    while True:
        rows = [[rng.randrange(fld.q) for _ in range(n)] for _ in range(k)]
        s = subspace_from_rows(fld, n, rows)
        if s.dim == k:
            return s


def _sample_projective_pair(rng, fld, n, k, meet_target, budget) -> tuple[Subspace, Subspace]:
    for _ in range(budget):
        x = _random_subspace(rng, fld, n, k)
        if not is_projective(x):
            continue
        y = _random_subspace(rng, fld, n, k)
        if not is_projective(y):
            continue
        if intersect_dim(x, y) == meet_target:
            return x, y
    raise _SampleBudget(f"no projective pair with meet {meet_target} "
                        f"within {budget} attempts")


def check_lemma11(n: int, k: int, q: int, trials: int = 100,
                  seed: int | None = 0) -> VerificationReport:
    """Sampled projective pairs meeting in k-2 dims have at least q+1
    projective common neighbors."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "q": q, "trials": trials}
    fld = field_of_order(q)
    rng = random.Random(seed)
    hypothesis_met = q >= math.comb(n, 2)
    witnesses: list = []
    results = []
    try:
        for _ in range(trials):
            x, y = _sample_projective_pair(rng, fld, n, k, k - 2, SAMPLE_CAP)
            cnt = len(common_projective_neighbors(x, y))
            results.append(cnt)
            if cnt < q + 1:
                witnesses.append(_pair_witness(x, y, neighbors=cnt, bound=q + 1,
                                               reason="fewer than q+1 neighbors"))
    except _SampleBudget as exc:
        return _report("lemma11", params, FAIL,
                       {"hypothesis_met": hypothesis_met},
                       [{"reason": str(exc)}], seed, t0)
    counts = {
        "hypothesis_met": hypothesis_met,
        "bound": q + 1,
        "trials": trials,
        "min_neighbors": min(results),
        "mean_neighbors": round(sum(results) / len(results), 3),
        "violations": len(witnesses),
    }
    return _report("lemma11", params, PASS if not witnesses else FAIL,
                   counts, witnesses, seed, t0)


def check_lemma12(n: int, k: int, q: int, u_dim: int = 0, trials: int = 100,
                  seed: int | None = 0) -> VerificationReport:
    """Inside a sampled projective [n,k]_q code, some hyperplane through
    a given small subspace is itself projective."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "q": q, "u_dim": u_dim, "trials": trials}
    if not u_dim < k - 2:
        raise ValueError("the inner subspace must have dimension below k-2")
    fld = field_of_order(q)
    rng = random.Random(seed)
    hypothesis_met = q >= math.comb(n, 2)
    witnesses: list = []
    min_proj = None
    for _ in range(trials):
        x = None
        for _ in range(SAMPLE_CAP):
            cand = _random_subspace(rng, fld, n, k)
            if is_projective(cand):
                x = cand
                break
        if x is None:
            return _report("lemma12", params, FAIL, {},
                           [{"reason": "no projective code sampled"}], seed, t0)
        while True:
            coeffs = [[rng.randrange(q) for _ in range(k)] for _ in range(u_dim)]
            rows = []
            for cvec in coeffs:
                vec = [0] * n
                for ci, brow in zip(cvec, x.rows):
                    if ci:
                        vec = [fld.add(a, fld.mul(ci, b)) for a, b in zip(vec, brow)]
                rows.append(tuple(vec))
            u = subspace_from_rows(fld, n, rows)
            if u.dim == u_dim:
                break
        hyps = superspaces_in(u, x, k - 1)
        n_proj = sum(1 for h in hyps if is_projective(h))
        min_proj = n_proj if min_proj is None else min(min_proj, n_proj)
        if n_proj == 0:
            witnesses.append({"code": x.to_text(), "inner": u.to_text(),
                              "reason": "no projective hyperplane through inner subspace"})
    counts = {
        "hypothesis_met": hypothesis_met,
        "trials": trials,
        "hyperplanes_per_trial": bracket(k - u_dim, q),
        "min_projective_hyperplanes": min_proj,
        "violations": len(witnesses),
    }
    return _report("lemma12", params, PASS if not witnesses else FAIL,
                   counts, witnesses, seed, t0)


def check_lemma13(n: int, k: int, q: int, m: int = 2, trials: int = 25,
                  seed: int | None = 0) -> VerificationReport:
    """Sampled projective pairs at meet k-m admit at least [m]_q
    projective codes adjacent to the first and one step closer to the
    second."""
    t0 = time.perf_counter()
    params = {"n": n, "k": k, "q": q, "m": m, "trials": trials}
    if m < 2 or k - m < 0:
        raise ValueError("need m >= 2 and m <= k")
    fld = field_of_order(q)
    rng = random.Random(seed)
    hypothesis_met = q >= math.comb(n, 2)
    bound = bracket(m, q)
    witnesses: list = []
    results = []
    try:
        for _ in range(trials):
            x, y = _sample_projective_pair(rng, fld, n, k, k - m, SAMPLE_CAP)
            if m == 2:
                good = [z for z in common_projective_neighbors(x, y)
                        if intersect_dim(z, y) == k - 1]
                # at meet k-2 every common projective neighbor qualifies
                cnt = len(good)
            else:
                meet = intersect(x, y)
                xprime = next((h for h in superspaces_in(meet, x, k - 1)
                               if is_projective(h)), None)
                if xprime is None:
                    witnesses.append(_pair_witness(
                        x, y, reason="no projective hyperplane through the meet"))
                    results.append(0)
                    continue
                found = set()
                for w in superspaces_in(meet, y, k - m + 1):
                    z = subspace_from_rows(fld, n, xprime.rows + w.rows)
                    if (z.dim == k and is_projective(z)
                            and intersect_dim(z, x) == k - 1
                            and intersect_dim(z, y) == k - m + 1):
                        found.add(z.rows)
                cnt = len(found)
            results.append(cnt)
            if cnt < bound:
                witnesses.append(_pair_witness(x, y, found=cnt, bound=bound,
                                               reason="fewer than [m]_q codes"))
    except _SampleBudget as exc:
        return _report("lemma13", params, FAIL,
                       {"hypothesis_met": hypothesis_met},
                       [{"reason": str(exc)}], seed, t0)
    counts = {
        "hypothesis_met": hypothesis_met,
        "bound": bound,
        "trials": trials,
        "min_found": min(results),
        "violations": len(witnesses),
    }
    return _report("lemma13", params, PASS if not witnesses else FAIL,
                   counts, witnesses, seed, t0)


# ----------------------------------------------------------------------
# Counterexample fixtures
# ----------------------------------------------------------------------

def check_counterexample(which: str, seed: int | None = 0) -> VerificationReport:
    """The two fixture pairs of simplex codes with no common projective
    neighbor, re-verified from their literal generator matrices."""
    t0 = time.perf_counter()
    params = {"which": which}
    witnesses: list = []
    if which == "binary-15-4":
        pair = fixture_binary_15_4()
        l1, l2, l3 = binary_fixture_lines()
        x, y = pair.x, pair.y
        meet = intersect(x, y)
        candidates = common_neighbor_candidates(x, y)
        projective = [z for z in candidates if is_projective(z)]
        dist_violations = []
        for a in iter_codewords(l1):
            for b in iter_codewords(l3):
                if hamming_distance(a, b) == 8:
                    dist_violations.append({"x": list(a), "y": list(b)})
        counts = {
            "meet_dim": intersect_dim(x, y),
            "meet_is_shared_line_space": meet == l2,
            "x_simplex": is_simplex_code(x),
            "y_simplex": is_simplex_code(y),
            "x_weights": {str(w): c for w, c in sorted(weight_distribution(x).items())},
            "candidates": len(candidates),
            "projective_candidates": len(projective),
            "cross_pairs_checked": 9,
            "distance8_pairs": len(dist_violations),
        }
        ok = (counts["meet_dim"] == 2 and counts["meet_is_shared_line_space"]
              and counts["x_simplex"] and counts["y_simplex"]
              and counts["candidates"] == 9
              and counts["projective_candidates"] == 0
              and counts["distance8_pairs"] == 0)
        if not ok:
            witnesses.append({"reason": "fixture claim failed", "counts": counts})
            witnesses.extend(dist_violations)
            witnesses.extend({"candidate": z.to_text()} for z in projective)
        return _report("cex-binary", params, PASS if ok else FAIL,
                       counts, witnesses, seed, t0)

    if which == "ternary-13-3":
        pair, printed = fixture_ternary_13_3()
        x, y = pair.x, pair.y
        fld = x.field
        meet = intersect(x, y)
        candidates = common_neighbor_candidates(x, y)
        projective = [z for z in candidates if is_projective(z)]
        # independent recomputation: <w> + H + H' over hyperplanes of X
        # and Y through the shared line
        rebuilt = set()
        for h1 in superspaces_in(meet, x, 2):
            for h2 in superspaces_in(meet, y, 2):
                z = subspace_from_rows(fld, 13, h1.rows + h2.rows)
                if z.dim == 3:
                    rebuilt.add(z)
        counts = {
            "meet_dim": intersect_dim(x, y),
            "candidates": len(candidates),
            "projective_candidates": len(projective),
            "printed_matrices": len(printed),
            "matches_printed": set(candidates) == set(printed),
            "matches_rebuilt": set(candidates) == rebuilt,
        }
        ok = (counts["meet_dim"] == 1 and counts["candidates"] == 16
              and counts["projective_candidates"] == 0
              and counts["matches_printed"] and counts["matches_rebuilt"])
        if not ok:
            witnesses.append({"reason": "fixture claim failed", "counts": counts})
            witnesses.extend({"candidate": z.to_text()} for z in projective)
        return _report("cex-ternary", params, PASS if ok else FAIL,
                       counts, witnesses, seed, t0)

    raise ValueError(f"unknown fixture {which!r}; use binary-15-4 or ternary-13-3")


# ----------------------------------------------------------------------
# Construction sweep
# ----------------------------------------------------------------------

def _verify_construction(pair: ConstructionPair) -> str | None:
    n, k, q = pair.params
    if intersect_dim(pair.x, pair.y) != pair.expected_meet:
        return "intersection dimension off"
    if not (is_projective(pair.x) and is_projective(pair.y)):
        return "member not projective"
    if pair.expected_meet != max(0, 2 * k - n):
        return "expected meet is not max(0, 2k-n)"
    return None


def check_constructions(max_n: int = 10, qs: tuple[int, ...] = (3, 4, 5, 7, 8, 9),
                        seed: int | None = 0) -> VerificationReport:
    """Sweep every admissible parameter triple of both pair
    constructions and verify meet dimension and projectivity."""
    t0 = time.perf_counter()
    params = {"max_n": max_n, "qs": list(qs)}
    witnesses: list = []
    ran14 = ran1 = 0
    for q in qs:
        for n in range(4, max_n + 1):
            for k in range(2, n - 1):
                if min(bracket(k, q), bracket(n - k, q)) < n:
                    continue
                ran14 += 1
                try:
                    pair = lemma14_pair(n, k, q)
                    issue = _verify_construction(pair)
                except (ConstructionFailed, ValueError) as exc:
                    issue = str(exc)
                if issue:
                    witnesses.append({"family": "lemma14", "n": n, "k": k,
                                      "q": q, "reason": issue})
    for n in range(6, max_n + 1):
        for k in range(3, n - 2):
            if 2 * k <= n:
                if bracket(k, 2) < n:
                    continue
            elif bracket(n - k, 2) < n:
                continue
            ran1 += 1
            try:
                pair = remark1_pair(n, k, 2)
                issue = _verify_construction(pair)
            except (ConstructionFailed, ValueError) as exc:
                issue = str(exc)
            if issue:
                witnesses.append({"family": "remark1", "n": n, "k": k,
                                  "q": 2, "reason": issue})
    gap: dict = {"n": 6, "k": 2, "q": 2}
    try:
        lemma14_pair(6, 2, 2)
        gap["error"] = None
    except NotCovered as exc:
        gap["error"] = str(exc)
    counts = {
        "lemma14_instances": ran14,
        "remark1_instances": ran1,
        "violations": len(witnesses),
        "uncovered_example": gap,
    }
    ok = not witnesses and gap["error"] is not None
    return _report("constructions", params, PASS if ok else FAIL,
                   counts, witnesses, seed, t0)


# ----------------------------------------------------------------------
# Full desk profile
# ----------------------------------------------------------------------

def desk_profile(max_vertices: int = MAX_VERTICES_DEFAULT,
                 max_scan: int = MAX_SCAN_DEFAULT,
                 seed: int = 0) -> list:
    """The default battery: every claim at its desk-scale parameters."""
    return [
        lambda: check_constructions(seed=seed),
        lambda: check_corollary1(2, 2, max_vertices, seed=seed),
        lambda: check_corollary1(2, 3, max_vertices, seed=seed),
        lambda: check_corollary1(3, 3, max_vertices, seed=seed),
        lambda: check_corollary2(seed=seed),
        lambda: check_counterexample("binary-15-4", seed=seed),
        lambda: check_counterexample("ternary-13-3", seed=seed),
        lambda: check_grassmann(4, 2, 2, max_vertices, seed=seed),
        lambda: check_grassmann(5, 2, 2, max_vertices, seed=seed),
        lambda: check_grassmann(4, 2, 3, max_vertices, seed=seed),
        lambda: check_lemma11(5, 2, 11, 100, seed=seed),
        lambda: check_lemma11(4, 2, 7, 100, seed=seed),
        lambda: check_lemma12(5, 3, 11, 0, 100, seed=seed),
        lambda: check_lemma12(6, 4, 31, 1, 25, seed=seed),
        lambda: check_lemma13(5, 2, 11, 2, 50, seed=seed),
        lambda: check_lemma13(6, 3, 31, 3, 25, seed=seed),
        lambda: check_theorem1(4, 2, 7, max_vertices, seed=seed),
        lambda: check_theorem2(2, 3, max_scan, seed=seed),
        lambda: check_theorem2(2, 4, max_scan, seed=seed),
        lambda: check_theorem2(3, 3, max_scan, seed=seed),
        lambda: check_theorem2(4, 2, max_scan, seed=seed),
    ]


def run_all(max_vertices: int = MAX_VERTICES_DEFAULT,
            max_scan: int = MAX_SCAN_DEFAULT,
            seed: int = 0) -> list[VerificationReport]:
    reports = [job() for job in desk_profile(max_vertices, max_scan, seed)]
    reports.sort(key=lambda r: (r.claim, json.dumps(r.params, sort_keys=True)))
    return reports

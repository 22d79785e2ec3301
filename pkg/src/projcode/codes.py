"""Code-theoretic predicates on subspaces of F_q^n.

A linear [n,k]_q code is just a k-dim subspace; everything here reads
the canonical RREF basis as a generator matrix.  Projectivity is
checked two independent ways (monic-column comparison and the
coordinate-pair-hyperplane rank criterion) so each can serve as an
oracle for the other.

The simplex-vector equation system is likewise implemented twice:
a literal elementary-symmetric evaluation in the field, and the weight
shortcut that works because (q-1)-th powers are 0/1 indicators.  The
shortcut is what makes exhaustive million-vector scans cheap; the
literal form exists to cross-validate it.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .errors import GuardExceeded
from .gf import Field, is_prime, prime_power
from .linalg import (Matrix, Subspace, canonicalize, monic_vector,
                     pack_row_bits, rank_of_rows)

WEIGHT_ENUM_GUARD = 2**24
MONOMIAL_N_GUARD = 16
MONOMIAL_Q_GUARD = 4
LITERAL_DEGREE_GUARD = 4


def _unit_count(q: int, k: int) -> int:
    # number of 1-dim subspaces of F_q^k
    return (q**k - 1) // (q - 1)


def hamming_weight(v) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for x in v if x)


def hamming_distance(u, v) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(1 for a, b in zip(u, v) if a != b)


# ----------------------------------------------------------------------
# Non-degeneracy and projectivity
# ----------------------------------------------------------------------

def is_nondegenerate(c: Subspace) -> bool:
    """True when no generator-matrix column is entirely zero."""
    if c.dim < 1:
        raise ValueError("predicate needs a positive-dimensional code")
    return all(any(row[j] for row in c.rows) for j in range(c.ambient_n))


def _monic_columns(c: Subspace) -> list[tuple[int, ...] | None]:
    fld = c.field
    return [monic_vector(fld, tuple(row[j] for row in c.rows))
            for j in range(c.ambient_n)]


def is_projective(c: Subspace) -> bool:
    """Non-degenerate with pairwise non-proportional generator columns."""
    cols = _monic_columns(c)
    if any(col is None for col in cols):
        return False
    return len(set(cols)) == c.ambient_n


def is_projective_via_cij(c: Subspace) -> bool:
    """Projectivity via dim(C ∩ C_ij) == k-2 for every coordinate pair.

    C_ij is the kernel of coordinates i and j together; the meet has
    dimension k - rank of the (i, j) column pair.  Independent of
    :func:`is_projective` and cross-validated against it in tests.
    """
    k = c.dim
    if k < 2:
        raise ValueError("criterion needs dim >= 2")
    fld = c.field
    n = c.ambient_n
    cols = [tuple(row[j] for row in c.rows) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pair_rank = rank_of_rows(fld, [cols[i], cols[j]])
            if k - pair_rank != k - 2:
                return False
    return True


@dataclass(frozen=True)
class ProjectiveSystem:
    """Monic dual points P_i, one per coordinate, in coordinate order."""

    points: tuple[tuple[int, ...], ...]
    distinct_count: int


def projective_system(c: Subspace) -> ProjectiveSystem:
    if not is_nondegenerate(c):
        raise ValueError("projective system requires a non-degenerate code")
    cols = _monic_columns(c)
    return ProjectiveSystem(tuple(cols), len(set(cols)))


# ----------------------------------------------------------------------
# Codeword enumeration
# ----------------------------------------------------------------------

def iter_codewords(c: Subspace, include_zero: bool = False):
    """All codewords as coordinate tuples (q^k of them, guard applies)."""
    fld = c.field
    q, k = fld.q, c.dim
    if q**k > WEIGHT_ENUM_GUARD:
        raise GuardExceeded(f"q^k = {q**k} exceeds {WEIGHT_ENUM_GUARD}")
    if include_zero:
        yield (0,) * c.ambient_n
    if k == 0:
        return
    add, mul = fld.add, fld.mul
    rows = c.rows
    for enc in range(1, q**k):
        coeffs = []
        e = enc
        for _ in range(k):
            e, d = divmod(e, q)
            coeffs.append(d)
        vec = None
        for ci, row in zip(reversed(coeffs), rows):
            if not ci:
                continue
            term = row if ci == 1 else tuple(mul(ci, x) for x in row)
            vec = term if vec is None else tuple(add(a, b) for a, b in zip(vec, term))
        yield vec


def weight_distribution(c: Subspace) -> dict[int, int]:
    """Exact weight counts over the q^k - 1 nonzero codewords."""
    fld = c.field
    if fld.q == 2:
        words = [pack_row_bits(r) for r in c.rows]
        counts: Counter[int] = Counter()
        acc = 0
        # Gray-code walk: one XOR per codeword
        for g in range(1, 2**len(words)):
            acc ^= words[(g & -g).bit_length() - 1]
            counts[acc.bit_count()] += 1
        return dict(counts)
    counts = Counter(hamming_weight(w) for w in iter_codewords(c))
    return dict(counts)


def is_simplex_code(c: Subspace) -> bool:
    """Every nonzero codeword has weight q^(k-1), with n = [k]_q."""
    fld = c.field
    q, k = fld.q, c.dim
    if k < 1 or c.ambient_n != _unit_count(q, k):
        return False
    target = q**(k - 1)
    if fld.q == 2:
        words = [pack_row_bits(r) for r in c.rows]
        acc = 0
        for g in range(1, 2**len(words)):
            acc ^= words[(g & -g).bit_length() - 1]
            if acc.bit_count() != target:
                return False
        return True
    return all(hamming_weight(w) == target for w in iter_codewords(c))


# ----------------------------------------------------------------------
# Simplex vectors and the equation system
# ----------------------------------------------------------------------

def lucas_binom_mod_p(a: int, b: int, p: int) -> int:
    """binomial(a, b) mod p by digit-wise products in base p."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    out = 1
    while b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        out = out * (math.comb(da, db) % p) % p
        if out == 0:
            return 0
    return out


def simplex_equation_degrees(q: int, k: int) -> list[int]:
    """Degrees p^j, j = 0..mk-m-1, of the defining symmetric equations."""
    p, m = prime_power(q)
    return [p**j for j in range(m * k - m)]


def is_simplex_vector(v, q: int, k: int) -> bool:
    """Weight is exactly q^(k-1); ambient length must be [k]_q."""
    if len(v) != _unit_count(q, k):
        raise ValueError(f"vector length {len(v)} != [{k}]_{q}")
    return hamming_weight(v) == q**(k - 1)


def simplex_equations_satisfied(v, q: int, k: int) -> bool:
    """All elementary-symmetric equations of degree p^j vanish on v.

    Since each coordinate enters as its (q-1)-th power, which is a 0/1
    indicator, equation p^j reduces to binomial(weight, p^j) = 0 mod p.
    """
    if len(v) != _unit_count(q, k):
        raise ValueError(f"vector length {len(v)} != [{k}]_{q}")
    p, m = prime_power(q)
    w = hamming_weight(v)
    return all(lucas_binom_mod_p(w, d, p) == 0 for d in simplex_equation_degrees(q, k))


def weight_satisfies_simplex_equations(w: int, q: int, k: int) -> bool:
    """The weight-only form of :func:`simplex_equations_satisfied`."""
    p, _ = prime_power(q)
    return all(lucas_binom_mod_p(w, d, p) == 0 for d in simplex_equation_degrees(q, k))


def elementary_symmetric_values(field: Field, values, max_degree: int) -> list[int]:
    """e_0..e_max of the given field elements, by the product-DP recurrence."""
    e = [0] * (max_degree + 1)
    e[0] = 1
    add, mul = field.add, field.mul
    for y in values:
        if not y:
            continue
        top = max_degree
        for d in range(top, 0, -1):
            e[d] = add(e[d], mul(y, e[d - 1]))
    return e


def simplex_equations_satisfied_literal(v, field: Field, k: int) -> bool:
    """Evaluate the equation system by actual polynomial arithmetic.

    Raises when some required degree exceeds the literal-evaluation
    guard; desk-scale parameter sets all stay within it.
    """
    q = field.q
    if len(v) != _unit_count(q, k):
        raise ValueError(f"vector length {len(v)} != [{k}]_{q}")
    degrees = simplex_equation_degrees(q, k)
    if max(degrees) > LITERAL_DEGREE_GUARD:
        raise GuardExceeded(
            f"literal evaluation capped at degree {LITERAL_DEGREE_GUARD}")
    powered = [field.pow(x, q - 1) for x in v]
    e = elementary_symmetric_values(field, powered, max(degrees))
    return all(e[d] == 0 for d in degrees)


# ----------------------------------------------------------------------
# Profiles
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    q: int
    nondegenerate: bool
    projective: bool
    simplex: bool
    weight_distribution: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "q": self.q,
            "nondegenerate": self.nondegenerate,
            "projective": self.projective,
            "simplex": self.simplex,
            "weight_distribution": {str(w): c for w, c
                                    in sorted(self.weight_distribution.items())},
        }


def code_profile(c: Subspace) -> CodeProfile:
    """Predicates plus the full weight distribution of a code."""
    return CodeProfile(
        n=c.ambient_n,
        k=c.dim,
        q=c.field.q,
        nondegenerate=is_nondegenerate(c),
        projective=is_projective(c),
        simplex=is_simplex_code(c),
        weight_distribution=weight_distribution(c),
    )


# ----------------------------------------------------------------------
# Monomial equivalence
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialWitness:
    """Coordinate i of the first code maps to permutation[i] of the
    second, where the target coordinate value is scalars[i] times the
    source one."""

    permutation: tuple[int, ...]
    scalars: tuple[int, ...]


def apply_monomial(c: Subspace, witness: MonomialWitness) -> Subspace:
    """Image of a code under a coordinate permutation + scaling."""
    fld = c.field
    n = c.ambient_n
    rows = []
    for row in c.rows:
        out = [0] * n
        for i, (j, lam) in enumerate(zip(witness.permutation, witness.scalars)):
            out[j] = fld.mul(lam, row[i])
        rows.append(tuple(out))
    return canonicalize(Matrix(fld, tuple(rows)))


def _independent_point_basis(field: Field, points: list[tuple[int, ...]], k: int):
    """First k points (in list order) that are linearly independent."""
    chosen: list[tuple[int, ...]] = []
    for p in points:
        if rank_of_rows(field, chosen + [p]) == len(chosen) + 1:
            chosen.append(p)
            if len(chosen) == k:
                return chosen
    return None


def _invert_square(field: Field, rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    k = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(k)] for i, r in enumerate(rows)]
    from .linalg import _rref_generic  # local: avoids a public helper for one use
    red, rank, _ = _rref_generic(field, aug)
    if rank != k:
        raise ValueError("matrix is singular")
    return [tuple(r[k:]) for r in red]


def _mat_vec(field: Field, rows, v):
    add, mul = field.add, field.mul
    out = []
    for r in rows:
        acc = 0
        for a, b in zip(r, v):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def _mat_mul(field: Field, a, b):
    bt = list(zip(*b))
    return [_mat_vec(field, bt, row) for row in a]


def monomial_equivalent(c1: Subspace, c2: Subspace) -> MonomialWitness | None:
    """Search for a coordinate permutation + scaling carrying c1 to c2.

    Matches the projective systems: a basis of distinct column points
    of c1 is mapped onto candidate independent point tuples of c2 with
    compatible multiplicities, each inducing a basis change that either
    aligns the full point multisets or is discarded.  Any witness found
    is replay-verified before being returned.
    """
    if (c1.ambient_n, c1.dim, c1.field) != (c2.ambient_n, c2.dim, c2.field):
        raise ValueError("codes must share (n, k, q)")
    fld = c1.field
    n, k, q = c1.ambient_n, c1.dim, fld.q
    if n > MONOMIAL_N_GUARD or q > MONOMIAL_Q_GUARD:
        raise GuardExceeded(f"monomial search capped at n<={MONOMIAL_N_GUARD}, "
                            f"q<={MONOMIAL_Q_GUARD}")
    if not (is_nondegenerate(c1) and is_nondegenerate(c2)):
        raise ValueError("monomial search needs non-degenerate codes")

    cols1 = _monic_columns(c1)
    cols2 = _monic_columns(c2)
    mult1, mult2 = Counter(cols1), Counter(cols2)
    if sorted(mult1.values()) != sorted(mult2.values()):
        return None
    if weight_distribution(c1) != weight_distribution(c2):
        return None

    base = _independent_point_basis(fld, cols1, k)
    if base is None:
        return None
    base_inv = _invert_square(fld, base)
    base_mult = [mult1[p] for p in base]
    distinct2 = sorted(set(cols2))
    units = list(fld.nonzero_elements())

    def candidate_targets():
        pool = [[p for p in distinct2 if mult2[p] == bm] for bm in base_mult]
        for combo in itertools.product(*pool):
            if len(set(combo)) < k:
                continue
            if rank_of_rows(fld, list(combo)) < k:
                continue
            for mus in itertools.product(units, repeat=k - 1):
                yield combo, (1,) + mus

    raw_cols1 = [tuple(row[j] for row in c1.rows) for j in range(n)]
    raw_cols2 = [tuple(row[j] for row in c2.rows) for j in range(n)]

    for targets, mus in candidate_targets():
        scaled = [tuple(fld.mul(mu, x) for x in t) for mu, t in zip(mus, targets)]
        # want S with S b_i = t_i on column vectors; transposing gives
        # Brows S^T = Trows, so S = (Brows^-1 Trows)^T
        transform = [tuple(r) for r in
                     zip(*_mat_mul(fld, base_inv, scaled))]
        images = [monic_vector(fld, _mat_vec(fld, transform, p)) for p in cols1]
        if Counter(images) != mult2:
            continue
        # pair each source coordinate with an unused target coordinate
        # carrying the same point; per-coordinate scalars absorb the rest
        slots: dict[tuple[int, ...], list[int]] = {}
        for j, p in enumerate(cols2):
            slots.setdefault(p, []).append(j)
        perm = [0] * n
        lam = [0] * n
        ok = True
        for i in range(n):
            bucket = slots.get(images[i])
            if not bucket:
                ok = False
                break
            j = bucket.pop()
            tv = _mat_vec(fld, transform, raw_cols1[i])
            lead = next((idx for idx, x in enumerate(tv) if x), None)
            if lead is None:
                ok = False
                break
            target = raw_cols2[j]
            lam_i = fld.div(target[lead], tv[lead])
            if tuple(fld.mul(lam_i, x) for x in tv) != target:
                ok = False
                break
            perm[i] = j
            lam[i] = lam_i
        if not ok:
            continue
        witness = MonomialWitness(tuple(perm), tuple(lam))
        if apply_monomial(c1, witness) == c2:
            return witness
    return None

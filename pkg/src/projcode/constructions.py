"""Explicit generator-matrix constructions and q-analog counting.

Includes the block-matrix pair constructions that realize the minimal
possible intersection dimension max(0, 2k-n) for projective [n,k]_q
codes (one family for q > 2, a shift-based variant that also covers
q = 2), canonical simplex generators, and two literal fixture pairs of
simplex codes with no common projective neighbor.  Fixture matrices
are data, not computed, and are protected by checksum tests.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from math import prod

from .codes import is_projective, is_simplex_code
from .errors import ConstructionFailed, GuardExceeded, NotCovered
from .gf import Field, field_new, field_of_order
from .linalg import (Matrix, Subspace, canonicalize, intersect_dim,
                     monic_vector, rank_of_rows, subspace_from_rows,
                     subspace_sum)


def bracket(m: int, q: int) -> int:
    """[m]_q = (q^m - 1)/(q - 1): 1-dim subspace count of F_q^m."""
    if m < 0:
        raise ValueError("negative dimension")
    return (q**m - 1) // (q - 1)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dim subspaces of F_q^n (exact, arbitrary precision)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = prod(q**n - q**i for i in range(k))
    den = prod(q**k - q**i for i in range(k))
    if num % den:
        raise AssertionError("Gaussian binomial division not exact")
    return num // den


# ----------------------------------------------------------------------
# Simplex generators
# ----------------------------------------------------------------------

def _decode_column(t: int, q: int, k: int) -> tuple[int, ...]:
    # big-endian digits: row 0 is the most significant
    digits = []
    for _ in range(k):
        t, d = divmod(t, q)
        digits.append(d)
    return tuple(reversed(digits))


def simplex_generator_matrix(q: int, k: int) -> Matrix:
    """k x [k]_q matrix whose columns are the monic representatives of
    all 1-dim subspaces of F_q^k, in increasing encoding order."""
    if q**k > 2**24:
        raise GuardExceeded(f"q^k = {q**k} exceeds 2^24")
    fld = field_of_order(q)
    cols = []
    for t in range(1, q**k):
        col = _decode_column(t, q, k)
        if monic_vector(fld, col) == col:
            cols.append(col)
    rows = tuple(tuple(col[i] for col in cols) for i in range(k))
    return Matrix(fld, rows)


def simplex_code(q: int, k: int) -> Subspace:
    """Canonical simplex [n,k]_q code, n = [k]_q."""
    return canonicalize(simplex_generator_matrix(q, k))


# ----------------------------------------------------------------------
# Pair constructions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionPair:
    x: Subspace
    y: Subspace
    params: tuple[int, int, int]          # (n, k, q)
    expected_meet: int
    provenance: str                       # lemma14 | remark1 | fixture_*
    generators: tuple[Matrix, Matrix]     # the pre-canonical matrices


def _identity(fld: Field, k: int) -> list[list[int]]:
    return [[1 if j == i else 0 for j in range(k)] for i in range(k)]


def _greedy_extra_columns(fld: Field, used_points: set, k: int,
                          count: int) -> list[tuple[int, ...]]:
    """Deterministic fill: first monic columns whose point is unused."""
    q = fld.q
    out: list[tuple[int, ...]] = []
    for t in range(1, q**k):
        if len(out) == count:
            break
        col = _decode_column(t, q, k)
        if monic_vector(fld, col) != col or col in used_points:
            continue
        used_points.add(col)
        out.append(col)
    if len(out) != count:
        raise ConstructionFailed("not enough projective points for the fill block")
    return out


def _concat_blocks(fld: Field, blocks: list[list[list[int]]]) -> Matrix:
    k = len(blocks[0])
    rows = []
    for i in range(k):
        row: list[int] = []
        for b in blocks:
            row.extend(b[i])
        rows.append(tuple(row))
    return Matrix(fld, tuple(rows))


def _columns_as_block(cols: list[tuple[int, ...]], k: int) -> list[list[int]]:
    return [[c[i] for c in cols] for i in range(k)]


def _point_set(fld: Field, block: list[list[int]]) -> set:
    k = len(block)
    pts = set()
    for j in range(len(block[0])):
        pts.add(monic_vector(fld, tuple(block[i][j] for i in range(k))))
    return pts


def first_nonsquare(fld: Field) -> int | None:
    """Smallest non-square by encoding; None when every element squares."""
    squares = {fld.mul(x, x) for x in fld.elements()}
    for x in fld.elements():
        if x not in squares:
            return x
    return None


def _verify_pair(x: Subspace, y: Subspace, n: int, k: int,
                 expected: int) -> None:
    if x.dim != k or y.dim != k:
        raise ConstructionFailed("built codes have the wrong dimension")
    if not (is_projective(x) and is_projective(y)):
        raise ConstructionFailed("built codes are not projective")
    if intersect_dim(x, y) != expected:
        raise ConstructionFailed("built codes miss the target intersection")


def _lemma14_direct(n: int, k: int, q: int) -> ConstructionPair:
    fld = field_of_order(q)
    a = first_nonsquare(fld)
    if a is None:           # even q: any element other than 0 and 1 works
        a = 2
    ident = _identity(fld, k)
    band = [[0] * k for _ in range(k)]
    for i in range(k):
        band[i][i] = 1
        if i + 1 < k:
            band[i + 1][i] = 1
    band[k - 2][k - 1] = a
    used = _point_set(fld, ident) | _point_set(fld, band)
    extra = _greedy_extra_columns(fld, used, k, n - 2 * k)
    b_block = _columns_as_block(extra, k)
    m_mat = _concat_blocks(fld, [ident, band, b_block] if extra else [ident, band])

    for lam in fld.nonzero_elements():
        scaled = [[fld.mul(lam, e) for e in row] for row in band]
        n_mat = _concat_blocks(fld, [scaled, ident, b_block] if extra else [scaled, ident])
        if rank_of_rows(fld, m_mat.rows + n_mat.rows) == 2 * k:
            x = canonicalize(m_mat)
            y = canonicalize(n_mat)
            _verify_pair(x, y, n, k, 0)
            return ConstructionPair(x, y, (n, k, q), 0, "lemma14", (m_mat, n_mat))
    raise ConstructionFailed("no scale factor makes the stacked matrix full rank")


def _remark1_direct(n: int, k: int, q: int) -> ConstructionPair:
    fld = field_of_order(q)
    ident = _identity(fld, k)
    shift = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        shift[i][i + 1] = 1
    ones_minus_shift = [[fld.sub(1, shift[i][j]) for j in range(k)] for i in range(k)]
    neg_ident = [[fld.neg(ident[i][j]) for j in range(k)] for i in range(k)]
    ident_minus_ones = [[fld.sub(ident[i][j], 1) for j in range(k)] for i in range(k)]

    used_m = _point_set(fld, ident) | _point_set(fld, ones_minus_shift)
    extra_m = _greedy_extra_columns(fld, used_m, k, n - 2 * k)
    used_n = _point_set(fld, neg_ident) | _point_set(fld, ident_minus_ones)
    extra_n = _greedy_extra_columns(fld, used_n, k, n - 2 * k)

    m_blocks = [ident, ones_minus_shift]
    n_blocks = [neg_ident, ident_minus_ones]
    if extra_m:
        m_blocks.append(_columns_as_block(extra_m, k))
        n_blocks.append(_columns_as_block(extra_n, k))
    m_mat = _concat_blocks(fld, m_blocks)
    n_mat = _concat_blocks(fld, n_blocks)
    if rank_of_rows(fld, m_mat.rows + n_mat.rows) != 2 * k:
        raise ConstructionFailed("stacked matrix is rank deficient")
    x = canonicalize(m_mat)
    y = canonicalize(n_mat)
    _verify_pair(x, y, n, k, 0)
    return ConstructionPair(x, y, (n, k, q), 0, "remark1", (m_mat, n_mat))


def _extend_by_common_complement(direct: ConstructionPair, n: int, k: int,
                                 q: int, provenance: str) -> ConstructionPair:
    """Lift a disjoint [n, n-k] pair to an [n, k] pair meeting in 2k-n dims."""
    fld = direct.x.field
    span = subspace_sum(direct.x, direct.y)
    extra_rows: list[tuple[int, ...]] = []
    current = span
    for j in range(n):
        e = tuple(1 if t == j else 0 for t in range(n))
        if not current.contains_vector(e):
            extra_rows.append(e)
            current = subspace_from_rows(fld, n, current.rows + (e,))
        if current.dim == n:
            break
    x = subspace_from_rows(fld, n, direct.x.rows + tuple(extra_rows))
    y = subspace_from_rows(fld, n, direct.y.rows + tuple(extra_rows))
    expected = 2 * k - n
    _verify_pair(x, y, n, k, expected)
    gen_x = Matrix(fld, direct.x.rows + tuple(extra_rows))
    gen_y = Matrix(fld, direct.y.rows + tuple(extra_rows))
    return ConstructionPair(x, y, (n, k, q), expected, provenance, (gen_x, gen_y))


def lemma14_pair(n: int, k: int, q: int) -> ConstructionPair:
    """Projective [n,k]_q pair with dim(X ∩ Y) = max(0, 2k-n), q > 2.

    Built from block matrices [I, A, B] and [lam*A, I, B] with A banded
    and the corner entry a non-square (odd q) or any element outside
    {0, 1} (even q); lam is found by direct rank testing over the
    nonzero elements instead of the eigenvalue analysis that proves one
    exists.  For n < 2k the complementary-dimension pair is built first
    and both codes are extended by a shared complement.
    """
    if q <= 2:
        raise NotCovered("this construction needs q > 2; for q = 2 use "
                         "remark1_pair (which needs 3 <= k <= n-3)")
    if not 1 < k < n - 1:
        raise ValueError(f"need 1 < k < n-1, got k={k}, n={n}")
    if min(bracket(k, q), bracket(n - k, q)) < n:
        raise ValueError(f"need min([k]_q, [n-k]_q) >= n at (n={n}, k={k}, q={q})")
    if 2 * k <= n:
        return _lemma14_direct(n, k, q)
    direct = _lemma14_direct(n, n - k, q)
    return _extend_by_common_complement(direct, n, k, q, "lemma14")


def remark1_pair(n: int, k: int, q: int = 2) -> ConstructionPair:
    """Projective [n,k]_q pair meeting in max(0, 2k-n) dims, valid at q = 2.

    Uses [I, U-A, B] and [-I, I-U, B'] with U all-ones and A the
    superdiagonal shift; the stacked matrix is full-rank because its
    Schur block I-A is unitriangular.  Needs 3 <= k <= n-3.
    """
    if not 3 <= k <= n - 3:
        raise NotCovered(f"this construction needs 3 <= k <= n-3, got k={k}, n={n}")
    if 2 * k <= n:
        if bracket(k, q) < n:
            raise ValueError(f"need [k]_q >= n at (n={n}, k={k}, q={q})")
        return _remark1_direct(n, k, q)
    if bracket(n - k, q) < n:
        raise ValueError(f"need [n-k]_q >= n at (n={n}, k={k}, q={q})")
    direct = _remark1_direct(n, n - k, q)
    return _extend_by_common_complement(direct, n, k, q, "remark1")


# ----------------------------------------------------------------------
# Fixtures: literal data
# ----------------------------------------------------------------------

_BIN = {
    "u1": "000000011111111",
    "u2": "000111100001111",
    "v1": "011001101010101",
    "v2": "101010100110110",
    "w1": "011000010111011",
    "w2": "101101100001011",
}

_TER = {
    "w":  "0000111111111",
    "v1": "0111000121122",
    "v2": "1012012001212",
    "u1": "1011002011122",
    "u2": "2101010201212",
}

# The sixteen 3x13 candidate generator triples: row w, a v-combination,
# a u-combination, in the fixed print order below.
_TER_CANDIDATES = (
    ("0000111111111", "0111000121122", "1011002011122"),
    ("0000111111111", "0111000121122", "2101010201212"),
    ("0000111111111", "0111000121122", "0112012212001"),
    ("0000111111111", "0111000121122", "2210022110210"),
    ("0000111111111", "1012012001212", "1011002011122"),
    ("0000111111111", "1012012001212", "2101010201212"),
    ("0000111111111", "1012012001212", "0112012212001"),
    ("0000111111111", "1012012001212", "2210022110210"),
    ("0000111111111", "1120012122001", "1011002011122"),
    ("0000111111111", "1120012122001", "2101010201212"),
    ("0000111111111", "1120012122001", "0112012212001"),
    ("0000111111111", "1120012122001", "2210022110210"),
    ("0000111111111", "2102021120210", "1011002011122"),
    ("0000111111111", "2102021120210", "2101010201212"),
    ("0000111111111", "2102021120210", "0112012212001"),
    ("0000111111111", "2102021120210", "2210022110210"),
)


def _digits(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)


def fixture_checksum() -> str:
    """SHA-256 over all literal fixture rows, for tamper tests."""
    blob = "|".join(
        [_BIN[k] for k in sorted(_BIN)]
        + [_TER[k] for k in sorted(_TER)]
        + ["/".join(rows) for rows in _TER_CANDIDATES]
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def binary_fixture_lines() -> tuple[Subspace, Subspace, Subspace]:
    """The three 2-dim spaces of weight-8 vectors behind the binary pair."""
    fld = field_new(2, 1)
    mk = lambda *names: subspace_from_rows(fld, 15, [_digits(_BIN[n]) for n in names])
    return mk("u1", "u2"), mk("v1", "v2"), mk("w1", "w2")


def fixture_binary_15_4() -> ConstructionPair:
    """Two binary [15,4] simplex codes meeting in dimension 2 that have
    no common projective neighbor."""
    fld = field_new(2, 1)
    gen_x = Matrix(fld, tuple(_digits(_BIN[n]) for n in ("u1", "u2", "v1", "v2")))
    gen_y = Matrix(fld, tuple(_digits(_BIN[n]) for n in ("v1", "v2", "w1", "w2")))
    x, y = canonicalize(gen_x), canonicalize(gen_y)
    if not (is_simplex_code(x) and is_simplex_code(y)):
        raise ConstructionFailed("binary fixture data corrupted")
    if intersect_dim(x, y) != 2:
        raise ConstructionFailed("binary fixture intersection is off")
    return ConstructionPair(x, y, (15, 4, 2), 2, "fixture_binary", (gen_x, gen_y))


def fixture_ternary_13_3() -> tuple[ConstructionPair, tuple[Subspace, ...]]:
    """Two ternary [13,3] simplex codes meeting in a line, plus the 16
    candidate subspaces adjacent to both (none of them projective)."""
    fld = field_new(3, 1)
    gen_x = Matrix(fld, tuple(_digits(_TER[n]) for n in ("w", "v1", "v2")))
    gen_y = Matrix(fld, tuple(_digits(_TER[n]) for n in ("w", "u1", "u2")))
    x, y = canonicalize(gen_x), canonicalize(gen_y)
    if not (is_simplex_code(x) and is_simplex_code(y)):
        raise ConstructionFailed("ternary fixture data corrupted")
    if intersect_dim(x, y) != 1:
        raise ConstructionFailed("ternary fixture intersection is off")
    candidates = tuple(
        canonicalize(Matrix(fld, tuple(_digits(r) for r in rows)))
        for rows in _TER_CANDIDATES
    )
    pair = ConstructionPair(x, y, (13, 3, 3), 1, "fixture_ternary", (gen_x, gen_y))
    return pair, candidates


def ternary_fixture_rows() -> dict[str, tuple[int, ...]]:
    """Raw literal rows of the ternary fixture, keyed by their names."""
    return {name: _digits(s) for name, s in _TER.items()}

"""Exact matrix algebra over GF(q).

Matrices are immutable grids of int-encoded field elements.  A
``Subspace`` is the unique reduced row echelon basis of its row space,
which makes equality, hashing and deduplication trivial.

Two elimination paths exist: a generic table-driven one for any q, and
a bit-packed one for GF(2) where a row is a single int and a row
operation is one XOR.  Both must produce identical canonical forms on
GF(2) inputs; `rref` picks automatically and accepts an explicit
``method`` for cross-validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import GuardExceeded
from .gf import Field, field_new


# ----------------------------------------------------------------------
# Matrix
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Immutable row-major matrix over a fixed field."""

    field: Field
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        q = self.field.q
        for r in self.rows:
            for x in r:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} out of range for {self.field!r}")

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        return cls(field, tuple(tuple(r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]


def format_matrix(m: Matrix, ncols: int | None = None) -> str:
    """Text form: header "n k q p m", then k rows of n encodings."""
    n = m.ncols if ncols is None else ncols
    f = m.field
    lines = [f"{n} {m.nrows} {f.q} {f.p} {f.m}"]
    lines += [" ".join(str(x) for x in row) for row in m.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    """Inverse of :func:`format_matrix`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        n, k, q, p, m = (int(t) for t in lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad matrix header {lines[0]!r}") from exc
    if p**m != q:
        raise ValueError(f"header inconsistent: q={q} but p^m={p**m}")
    fld = field_new(p, m)
    if len(lines) - 1 != k:
        raise ValueError(f"expected {k} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = tuple(int(t) for t in ln.split())
        if len(row) != n:
            raise ValueError(f"expected {n} entries per row, got {len(row)}")
        rows.append(row)
    return Matrix(fld, tuple(rows))


# ----------------------------------------------------------------------
# Elimination
# ----------------------------------------------------------------------

def _rref_generic(field: Field, rows: list[list[int]]) -> tuple[list[list[int]], int, list[int]]:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    mul, sub, inv = field.mul, field.sub, field.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            li = inv(lead)
            rows[r] = [mul(li, x) for x in rows[r]]
        top = rows[r]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], top)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, r, pivots


def pack_row_bits(row) -> int:
    """GF(2) row as an int, bit j = column j."""
    word = 0
    for j, x in enumerate(row):
        if x:
            word |= 1 << j
    return word


def unpack_row_bits(word: int, ncols: int) -> tuple[int, ...]:
    return tuple((word >> j) & 1 for j in range(ncols))


def _rref_bits(words: list[int], ncols: int) -> tuple[list[int], int, list[int]]:
    nrows = len(words)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        mask = 1 << c
        pr = next((i for i in range(r, nrows) if words[i] & mask), None)
        if pr is None:
            continue
        words[r], words[pr] = words[pr], words[r]
        top = words[r]
        for i in range(nrows):
            if i != r and words[i] & mask:
                words[i] ^= top
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return words, r, pivots


def rref(m: Matrix, method: str = "auto") -> tuple[Matrix, int, tuple[int, ...]]:
    """Unique reduced row echelon form, with rank and pivot columns.

    ``method`` is "auto" (bit-packed for GF(2), generic otherwise),
    "generic", or "bitpacked" (GF(2) only).
    """
    if method not in ("auto", "generic", "bitpacked"):
        raise ValueError(f"unknown method {method!r}")
    if method == "bitpacked" and m.field.q != 2:
        raise ValueError("bitpacked elimination requires GF(2)")
    use_bits = m.field.q == 2 and method != "generic"
    if use_bits:
        words, rank, piv = _rref_bits([pack_row_bits(r) for r in m.rows], m.ncols)
        rows = tuple(unpack_row_bits(w, m.ncols) for w in words)
    else:
        work = [list(r) for r in m.rows]
        out, rank, piv = _rref_generic(m.field, work)
        rows = tuple(tuple(r) for r in out)
    return Matrix(m.field, rows), rank, tuple(piv)


def matrix_rank(m: Matrix) -> int:
    return rref(m)[1]


def rank_of_rows(field: Field, rows) -> int:
    """Rank of a row collection without building a Matrix."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    if field.q == 2:
        return _rref_bits([pack_row_bits(r) for r in rows], len(rows[0]))[1]
    return _rref_generic(field, rows)[1]


def kernel_basis(m: Matrix) -> list[tuple[int, ...]]:
    """Deterministic basis of the right nullspace {v : M v = 0}."""
    red, rank, piv = rref(m)
    n = m.ncols
    fld = m.field
    piv_set = set(piv)
    free = [j for j in range(n) if j not in piv_set]
    basis = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for i, pc in enumerate(piv):
            v[pc] = fld.neg(red.rows[i][j])
        basis.append(tuple(v))
    return basis


def monic_vector(field: Field, v) -> tuple[int, ...] | None:
    """Scale so the first nonzero entry is 1; None for the zero vector."""
    v = tuple(v)
    lead = next((x for x in v if x), None)
    if lead is None:
        return None
    if lead == 1:
        return v
    li = field.inv(lead)
    return tuple(field.mul(li, x) for x in v)


# ----------------------------------------------------------------------
# Subspace
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n held as its unique RREF basis.

    ``rows`` has no zero rows; the zero subspace is the empty tuple.
    Value equality and hashing go through the canonical rows, so two
    Subspace objects are equal exactly when they are the same subspace
    of the same ambient space.
    """

    field: Field
    ambient_n: int
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != self.ambient_n:
                raise ValueError("basis row length differs from ambient dimension")
            p = self.pivots[i]
            if row[p] != 1 or any(row[j] for j in range(p)):
                raise ValueError("basis is not in reduced row echelon form")
        if list(self.pivots) != sorted(set(self.pivots)) or len(self.pivots) != len(self.rows):
            raise ValueError("pivot list inconsistent with basis")
        for i, p in enumerate(self.pivots):
            if any(self.rows[j][p] for j in range(len(self.rows)) if j != i):
                raise ValueError("pivot column is not elementary")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.rows)

    def contains_vector(self, v) -> bool:
        w = list(v)
        if len(w) != self.ambient_n:
            raise ValueError("vector length differs from ambient dimension")
        sub, mul = self.field.sub, self.field.mul
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                w = [sub(x, mul(c, y)) for x, y in zip(w, row)]
        return not any(w)

    def contains(self, other: "Subspace") -> bool:
        _check_same_space(self, other)
        return all(self.contains_vector(r) for r in other.rows)

    def to_text(self) -> str:
        return format_matrix(Matrix(self.field, self.rows), ncols=self.ambient_n)

    @classmethod
    def from_text(cls, text: str) -> "Subspace":
        header = next(ln for ln in text.splitlines() if ln.strip())
        n, k, q, p, m = (int(t) for t in header.split())
        if k == 0:
            return zero_subspace(field_new(p, m), n)
        return canonicalize(parse_matrix(text))

    def __repr__(self) -> str:
        return f"Subspace({self.field!r}, n={self.ambient_n}, dim={self.dim})"


def zero_subspace(field: Field, n: int) -> Subspace:
    return Subspace(field, n, (), ())


def full_space(field: Field, n: int) -> Subspace:
    rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return Subspace(field, n, rows, tuple(range(n)))


def canonicalize(m: Matrix, method: str = "auto") -> Subspace:
    """Subspace spanned by the rows of ``m`` (zero rows dropped)."""
    if m.nrows == 0 or m.ncols == 0:
        raise ValueError("cannot canonicalize an empty matrix")
    red, rank, piv = rref(m, method=method)
    return Subspace(m.field, m.ncols, red.rows[:rank], piv)


def subspace_from_rows(field: Field, n: int, rows) -> Subspace:
    rows = [tuple(r) for r in rows]
    if not rows:
        return zero_subspace(field, n)
    return canonicalize(Matrix(field, tuple(rows)))


def _check_same_space(x: Subspace, y: Subspace) -> None:
    if x.field != y.field or x.ambient_n != y.ambient_n:
        raise ValueError("subspaces live in different ambient spaces")


def intersect_dim(x: Subspace, y: Subspace) -> int:
    """dim(X ∩ Y) via dim X + dim Y - rank of the stacked bases."""
    _check_same_space(x, y)
    stacked = rank_of_rows(x.field, x.rows + y.rows)
    return x.dim + y.dim - stacked


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    _check_same_space(x, y)
    return subspace_from_rows(x.field, x.ambient_n, x.rows + y.rows)


def intersect(x: Subspace, y: Subspace) -> Subspace:
    """The intersection subspace itself (not just its dimension).

    Combinations c,d with c·X_basis = d·Y_basis form the left kernel of
    the stacked basis; reading off the c part gives the intersection.
    """
    _check_same_space(x, y)
    if x.dim == 0 or y.dim == 0:
        return zero_subspace(x.field, x.ambient_n)
    stacked = x.rows + y.rows
    transposed = Matrix(x.field, tuple(
        tuple(r[j] for r in stacked) for j in range(x.ambient_n)))
    fld = x.field
    vectors = []
    for coeffs in kernel_basis(transposed):
        c = coeffs[:x.dim]
        vec = [0] * x.ambient_n
        for ci, row in zip(c, x.rows):
            if ci:
                vec = [fld.add(a, fld.mul(ci, b)) for a, b in zip(vec, row)]
        vectors.append(tuple(vec))
    vectors = [v for v in vectors if any(v)]
    return subspace_from_rows(fld, x.ambient_n, vectors)


# ----------------------------------------------------------------------
# Enumeration
# ----------------------------------------------------------------------

def iter_rref_rows(field: Field, n: int, k: int):
    """Yield the canonical basis rows of every k-dim subspace of F_q^n.

    Generates RREF matrices directly from pivot patterns, so the output
    count is exactly the Gaussian binomial and no dedup pass is needed.
    """
    if k == 0:
        yield ()
        return
    if k > n:
        return
    elems = list(field.elements())
    for piv in itertools.combinations(range(n), k):
        piv_set = set(piv)
        free = [(i, j) for i in range(k) for j in range(n)
                if j > piv[i] and j not in piv_set]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(piv):
            base[i][p] = 1
        if not free:
            yield tuple(tuple(r) for r in base)
            continue
        for values in itertools.product(elems, repeat=len(free)):
            rows = [r[:] for r in base]
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(field: Field, n: int, k: int,
                        predicate=None) -> list[Subspace]:
    """All k-dim subspaces of F_q^n, sorted by canonical basis rows."""
    out = []
    for rows in iter_rref_rows(field, n, k):
        piv = tuple(next(j for j, x in enumerate(r) if x) for r in rows)
        s = Subspace(field, n, rows, piv)
        if predicate is None or predicate(s):
            out.append(s)
    out.sort(key=lambda s: s.rows)
    return out


def _monic_coeff_tuples(field: Field, k: int):
    """Coefficient tuples with first nonzero entry 1, in a fixed order."""
    elems = list(field.elements())
    for lead in range(k):
        tail = k - lead - 1
        for rest in itertools.product(elems, repeat=tail):
            yield (0,) * lead + (1,) + rest


def subspace_points(x: Subspace) -> list[tuple[int, ...]]:
    """Monic representatives of every 1-dim subspace of x.

    Combining RREF rows with a monic coefficient tuple already yields a
    monic ambient vector, so no renormalization happens here.
    """
    fld = x.field
    add, mul = fld.add, fld.mul
    pts = []
    for coeffs in _monic_coeff_tuples(fld, x.dim):
        vec = None
        for c, row in zip(coeffs, x.rows):
            if not c:
                continue
            term = row if c == 1 else tuple(mul(c, e) for e in row)
            vec = term if vec is None else tuple(add(a, b) for a, b in zip(vec, term))
        pts.append(vec)
    return pts


def hyperplanes_of(x: Subspace) -> list[Subspace]:
    """All (dim-1)-dim subspaces of x; exactly [dim]_q of them.

    Enumerates kernels of monic functionals on x, so each hyperplane is
    produced once and no dedup pass is needed.
    """
    k = x.dim
    if k < 1:
        raise ValueError("the zero subspace has no hyperplanes")
    fld = x.field
    out = []
    for phi in _monic_coeff_tuples(fld, k):
        t0 = next(i for i, c in enumerate(phi) if c)
        rows = []
        for i in range(k):
            if i == t0:
                continue
            if phi[i]:
                coef = fld.neg(phi[i])
                rows.append(tuple(fld.add(a, fld.mul(coef, b))
                                  for a, b in zip(x.rows[i], x.rows[t0])))
            else:
                rows.append(x.rows[i])
        out.append(subspace_from_rows(fld, x.ambient_n, rows))
    out.sort(key=lambda s: s.rows)
    return out


def coordinates_in(y: Subspace, v) -> tuple[int, ...] | None:
    """Coefficients of v over y's RREF basis, or None if v is outside y.

    With an RREF basis the coefficient of row i is just v at pivot i.
    """
    coeffs = tuple(v[p] for p in y.pivots)
    fld = y.field
    recon = [0] * y.ambient_n
    for c, row in zip(coeffs, y.rows):
        if c:
            recon = [fld.add(a, fld.mul(c, b)) for a, b in zip(recon, row)]
    if tuple(recon) != tuple(v):
        return None
    return coeffs


def superspaces_in(u: Subspace, y: Subspace, d: int) -> list[Subspace]:
    """All d-dim subspaces W with U ⊆ W ⊆ Y.

    Works inside y's coordinate space: picks the coordinate complement
    of U there and enumerates its (d - dim U)-dim subspaces, each of
    which extends U to a distinct W.
    """
    _check_same_space(u, y)
    if not (u.dim <= d <= y.dim):
        raise ValueError(f"dimension {d} outside [{u.dim}, {y.dim}]")
    fld = u.field
    t = y.dim
    u_coords = []
    for row in u.rows:
        c = coordinates_in(y, row)
        if c is None:
            raise ValueError("first argument is not contained in the second")
        u_coords.append(c)
    u_in_y = subspace_from_rows(fld, t, u_coords)
    comp_cols = [j for j in range(t) if j not in u_in_y.pivots]
    extra = d - u.dim
    out = []
    for small_rows in iter_rref_rows(fld, len(comp_cols), extra):
        rows = list(u.rows)
        for small in small_rows:
            coord = [0] * t
            for val, j in zip(small, comp_cols):
                coord[j] = val
            vec = [0] * y.ambient_n
            for c, yrow in zip(coord, y.rows):
                if c:
                    vec = [fld.add(a, fld.mul(c, b)) for a, b in zip(vec, yrow)]
            rows.append(tuple(vec))
        out.append(subspace_from_rows(fld, u.ambient_n, rows))
    out.sort(key=lambda s: s.rows)
    return out

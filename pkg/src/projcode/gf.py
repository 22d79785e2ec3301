"""Exact arithmetic in small Galois fields GF(p^m).

An element is a plain int in ``[0, q)``.  Its base-``p`` digits,
little-endian, are the coefficients of the residue polynomial: the
encoding ``sum(a_j * p**j)`` stands for ``sum(a_j * alpha**j)`` where
``alpha`` is a root of the field modulus.  For ``m == 1`` encodings
therefore coincide with integers mod ``p``.

The modulus for each supported ``(p, m)`` is fixed: a small table pins
the classic choices

    GF(4):  x^2 + x + 1
    GF(8):  x^3 + x + 1
    GF(9):  x^2 + 1
    GF(16): x^4 + x + 1

and every other extension degree uses the monic irreducible polynomial
of smallest integer encoding, found by a deterministic scan.  Either
way the same ``(p, m)`` always yields the same element encodings, so
serialized matrices and reports are bit-exact across runs and
platforms.

Fields of order up to 256 carry full add/sub/mul tables plus an
inverse table; bigger fields (up to the 2^16 guard) compute on demand.
"""

from __future__ import annotations

import functools

from .errors import GuardExceeded

MAX_EXTENSION_DEGREE = 8
MAX_ORDER = 1 << 16
_TABLE_LIMIT = 256

# Pinned moduli, keyed by (p, m), as little-endian base-p encodings.
_FIXED_MODULI = {
    (2, 2): 0b111,      # x^2 + x + 1
    (2, 3): 0b1011,     # x^3 + x + 1
    (3, 2): 10,         # x^2 + 1
    (2, 4): 0b10011,    # x^4 + x + 1
}


def is_prime(n: int) -> bool:
    """Trial-division primality test (inputs stay below 2^16 here)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power into (p, m); reject anything else."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    m = 0
    r = q
    while r > 1:
        if r % p:
            raise ValueError(f"{q} is not a prime power")
        r //= p
        m += 1
    return p, m


# ----------------------------------------------------------------------
# Polynomials over GF(p), as little-endian coefficient lists.
# ----------------------------------------------------------------------

def _poly_from_encoding(enc: int, p: int) -> list[int]:
    digits = []
    while enc:
        enc, d = divmod(enc, p)
        digits.append(d)
    return digits


def _poly_encoding(coeffs: list[int], p: int) -> int:
    enc = 0
    for c in reversed(coeffs):
        enc = enc * p + c
    return enc


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den with monic den, coefficients mod p."""
    rem = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], p - 2, p)
    while len(rem) - 1 >= dd and _poly_trim(rem):
        shift = len(rem) - 1 - dd
        factor = rem[-1] * lead_inv % p
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        _poly_trim(rem)
    return rem


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(enc: int, p: int, m: int) -> bool:
    """Check a monic degree-m polynomial for factors up to degree m//2."""
    poly = _poly_from_encoding(enc, p)
    if len(poly) - 1 != m:
        return False
    for d in range(1, m // 2 + 1):
        for div_enc in range(p**d, 2 * p**d):
            div = _poly_from_encoding(div_enc, p)
            if div[-1] != 1:
                continue
            if not _poly_mod(poly, div, p):
                return False
    return True


def _find_modulus(p: int, m: int) -> int:
    fixed = _FIXED_MODULI.get((p, m))
    if fixed is not None:
        return fixed
    for enc in range(p**m, 2 * p**m):
        if _is_irreducible(enc, p, m):
            return enc
    raise RuntimeError(f"no irreducible polynomial found for GF({p}^{m})")


# ----------------------------------------------------------------------
# The field itself.
# ----------------------------------------------------------------------

class Field:
    """Arithmetic in GF(p^m) on int-encoded elements.

    Construct via :func:`field_new`; direct instantiation skips the
    guard checks and the factory cache.
    """

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = p if m == 1 else _find_modulus(p, m)
        self._mod_poly = _poly_from_encoding(self.modulus, p)
        if m > 1 and not _is_irreducible(self.modulus, p, m):
            raise RuntimeError(f"modulus {self.modulus} for GF({p}^{m}) is reducible")
        self._add_t: list[list[int]] | None = None
        self._sub_t: list[list[int]] | None = None
        self._mul_t: list[list[int]] | None = None
        self._inv_t: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        q = self.q
        rng = range(q)
        self._add_t = [[self._raw_add(a, b) for b in rng] for a in rng]
        self._sub_t = [[self._raw_sub(a, b) for b in rng] for a in rng]
        self._mul_t = [[self._raw_mul(a, b) for b in rng] for a in rng]
        inv = [0] * q
        for a in range(1, q):
            row = self._mul_t[a]
            inv[a] = row.index(1)
        self._inv_t = inv

    # -- raw digit/polynomial arithmetic (used to seed the tables and
    #    directly for the rare q > 256 fields) ------------------------

    def _raw_add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += (da + db) % p * mult
            mult *= p
        return out

    def _raw_sub(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a - b) % p
        out = 0
        mult = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += (da - db) % p * mult
            mult *= p
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return a * b % p
        prod = _poly_mul(_poly_from_encoding(a, p), _poly_from_encoding(b, p), p)
        return _poly_encoding(_poly_mod(prod, self._mod_poly, p), p)

    # -- public operations --------------------------------------------

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"encoding {a} out of range for {self!r}")

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        self._check(a)
        self._check(b)
        return self._raw_add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self._sub_t is not None:
            return self._sub_t[a][b]
        self._check(a)
        self._check(b)
        return self._raw_sub(a, b)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        self._check(a)
        self._check(b)
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; zero has none."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Repeated multiplication; 0**0 is defined as 1."""
        if e < 0:
            raise ValueError("negative exponent")
        self._check(a)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def arith(self, op: str, a: int, b: int) -> int:
        """Dispatch one of add/sub/mul/div by name."""
        try:
            return {"add": self.add, "sub": self.sub,
                    "mul": self.mul, "div": self.div}[op](a, b)
        except KeyError:
            raise ValueError(f"unknown operation {op!r}") from None

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int = 1) -> Field:
    """Canonical field object for (p, m); same inputs, same object."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if not 1 <= m <= MAX_EXTENSION_DEGREE:
        raise GuardExceeded(f"extension degree m={m} outside 1..{MAX_EXTENSION_DEGREE}")
    if p**m > MAX_ORDER:
        raise GuardExceeded(f"field order {p**m} exceeds {MAX_ORDER}")
    return Field(p, m)


def field_of_order(q: int) -> Field:
    """Field with q elements (q must be a prime power)."""
    p, m = prime_power(q)
    return field_new(p, m)

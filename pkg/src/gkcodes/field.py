"""Exact arithmetic in the field tower F_p < F_l < F_{l^2} < F_{l^6}.

Elements of F_{p^d} are stored as plain ints in [0, p^d): the element with
polynomial-basis coefficients (c_0, c_1, ..., c_{d-1}), constant term first,
is encoded as sum(c_i * p**i).  All arithmetic goes through tables built once
at construction time, which keeps scalar operations cheap and lets numpy
fancy-indexing vectorize bulk work (point enumeration, linear algebra,
pair censuses) without any per-element Python overhead.

The canonical total order on elements is lexicographic on coefficient tuples,
constant term first.  That is *not* the numeric order of the encoding, so the
order is exposed explicitly via ``lex_rank`` / ``ordered_elements``.

Only moduli verified irreducible by exhaustive trial division are accepted.
Root finding is exhaustive scan; at the supported orders (<= 4096) that is
both exact and instant.
"""

from __future__ import annotations

import numpy as np

from .errors import GKError

# Largest field order the table-based representation will build.  The
# enumeration work this package does is only meaningful at desk scale; the
# cap keeps table memory bounded (3 tables of q*q uint16).
MAX_ORDER = 4096

# Moduli known irreducible, re-verified at construction time anyway.
# Keyed by (p, ext_degree); coefficients constant term first, monic.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def parse_ell(ell: int) -> tuple[int, int]:
    """Split a prime power l = p**h into (p, h).

    Raises:
        GKError(UNSUPPORTED_SIZE): if ell is not a prime power >= 2.
    """
    if ell < 2:
        raise GKError("UNSUPPORTED_SIZE", f"ell must be >= 2, got {ell}")
    p = 2
    while ell % p != 0:
        p += 1
        if p * p > ell:
            p = ell
            break
    h = 0
    n = ell
    while n % p == 0:
        n //= p
        h += 1
    if n != 1 or not _is_prime(p):
        raise GKError("UNSUPPORTED_SIZE", f"ell must be a prime power, got {ell}")
    return p, h


# ---------------------------------------------------------------------------
# Small polynomial helpers over F_p.  Polynomials are lists of ints in [0, p),
# constant term first, no trailing-zero invariants enforced.

def _poly_trim(a: list[int]) -> list[int]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and _poly_trim(r):
        shift = len(r) - len(b)
        factor = (r[-1] * inv_lead) % p
        if factor:
            q[shift] = factor
            for i, c in enumerate(b):
                r[shift + i] = (r[shift + i] - factor * c) % p
        r = _poly_trim(r)
        if not r:
            break
    return q, r


def _poly_mulmod(a: list[int], b: list[int], p: int, mod: list[int]) -> list[int]:
    d = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    # reduce by the monic modulus
    for k in range(len(out) - 1, d - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(d):
                out[k - d + i] = (out[k - d + i] - c * mod[i]) % p
    out = out[:d]
    out += [0] * (d - len(out))
    return out


def _irreducible(mod: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= d/2."""
    d = len(mod) - 1
    for deg in range(1, d // 2 + 1):
        for idx in range(p**deg):
            g = []
            v = idx
            for _ in range(deg):
                g.append(v % p)
                v //= p
            g.append(1)
            _, r = _poly_divmod(mod, g, p)
            if not _poly_trim(r):
                return False
    return True


# ---------------------------------------------------------------------------

class Field:
    """F_{p^ext_degree} with full operation tables.

    Do not construct directly; use :func:`make_field`, which validates the
    modulus and caches instances.
    """

    def __init__(self, p: int, ext_degree: int, modulus: tuple[int, ...]):
        self.p = p
        self.ext_degree = ext_degree
        self.modulus = modulus
        q = p**ext_degree
        self.order = q
        self.zero = 0
        self.one = 1

        d = ext_degree
        mod = list(modulus)

        # digit matrix: digits[v, i] = coefficient of t^i in element v
        digits = np.zeros((q, d), dtype=np.uint8)
        v = np.arange(q)
        for i in range(d):
            digits[:, i] = v % p
            v = v // p
        self._digits = digits

        # addition is digit-wise mod p
        pow_p = (p ** np.arange(d)).astype(np.int64)
        sums = (digits[:, None, :].astype(np.int16) + digits[None, :, :]) % p
        self.ADD = (sums.astype(np.int64) @ pow_p).astype(np.uint16)
        negd = (-digits.astype(np.int16)) % p
        self.NEG = (negd.astype(np.int64) @ pow_p).astype(np.uint16)
        self.SUB = self.ADD[:, self.NEG]

        # multiplicative structure via a generator of the cyclic group
        gen = self._find_generator(mod)
        exp = np.zeros(q - 1, dtype=np.uint16)
        log = np.zeros(q, dtype=np.int64)
        cur = [1] + [0] * (d - 1)
        gdig = [int(x) for x in digits[gen]]
        for i in range(q - 1):
            code = 0
            for k in range(d - 1, -1, -1):
                code = code * p + cur[k]
            exp[i] = code
            log[code] = i
            cur = _poly_mulmod(cur, gdig, p, mod)
        if exp[0] != 1:
            raise AssertionError("generator power chain must start at 1")
        self.EXP = exp
        self.LOG = log  # LOG[0] is meaningless; guarded at use sites

        nz = np.arange(1, q)
        mul = np.zeros((q, q), dtype=np.uint16)
        lsum = (log[nz][:, None] + log[nz][None, :]) % (q - 1)
        mul[1:, 1:] = exp[lsum]
        self.MUL = mul

        inv = np.zeros(q, dtype=np.uint16)
        inv[nz] = exp[(-log[nz]) % (q - 1)]
        self.INV = inv

        frob = np.zeros(q, dtype=np.uint16)
        frob[nz] = exp[(log[nz] * p) % (q - 1)]
        self.FROB = frob

        # canonical order: lexicographic on coefficient tuples
        rev_pow = (p ** np.arange(d - 1, -1, -1)).astype(np.int64)
        self.lex_rank = (digits.astype(np.int64) @ rev_pow).astype(np.int64)
        self.lex_order = np.argsort(self.lex_rank).astype(np.int64)

        self._scalar_tables = None

    def _find_generator(self, mod: list[int]) -> int:
        p, d, q = self.p, self.ext_degree, self.order
        n = q - 1
        primes = []
        m = n
        f = 2
        while f * f <= m:
            if m % f == 0:
                primes.append(f)
                while m % f == 0:
                    m //= f
            f += 1
        if m > 1:
            primes.append(m)

        def poly_pow(base: list[int], e: int) -> list[int]:
            result = [1] + [0] * (d - 1)
            b = list(base)
            while e:
                if e & 1:
                    result = _poly_mulmod(result, b, p, mod)
                e >>= 1
                if e:
                    b = _poly_mulmod(b, b, p, mod)
            return result

        one = [1] + [0] * (d - 1)
        for cand in range(2, q):
            cd = [int(x) for x in self._digits[cand]]
            if all(poly_pow(cd, n // r) != one for r in primes):
                return cand
        raise AssertionError("no generator found; modulus cannot be irreducible")

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.ADD[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.SUB[a, b])

    def neg(self, a: int) -> int:
        return int(self.NEG[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.MUL[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise GKError("DIVISION_BY_ZERO", "0 has no multiplicative inverse")
        return int(self.INV[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e for integer e >= 0, with pow(a, 0) = 1 including a = 0.

        The 0**0 = 1 convention makes monomial evaluation x^0 y^0 z^0 = 1
        uniform at every point, which the evaluation-code builder relies on.
        """
        if e < 0:
            raise GKError("CONFIG_INVALID", "negative exponents are not supported")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.EXP[(int(self.LOG[a]) * e) % (self.order - 1)])

    def frobenius(self, a: int, k: int = 1) -> int:
        """k-fold application of x -> x**p."""
        b = a
        for _ in range(k % self.ext_degree if k >= self.ext_degree else k):
            b = int(self.FROB[b])
        return b

    # -- structure ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient tuple of a, constant term first."""
        return tuple(int(x) for x in self._digits[a])

    def element(self, coeffs) -> int:
        cs = list(coeffs)
        if len(cs) > self.ext_degree:
            raise GKError("CONFIG_INVALID", "coefficient list longer than extension degree")
        cs += [0] * (self.ext_degree - len(cs))
        code = 0
        for c in reversed(cs):
            if not 0 <= c < self.p:
                raise GKError("CONFIG_INVALID", f"coefficient {c} not in [0, {self.p})")
            code = code * self.p + c
        return code

    def rank(self, a: int) -> int:
        """Position of a in the canonical (coefficient-lexicographic) order."""
        return int(self.lex_rank[a])

    def ordered_elements(self) -> list[int]:
        return [int(x) for x in self.lex_order]

    def in_subfield(self, a: int, k: int) -> bool:
        """True iff a lies in F_{p^k}.  k must divide ext_degree."""
        if k <= 0 or self.ext_degree % k != 0:
            raise GKError(
                "INVALID_SUBFIELD",
                f"F_{self.p}^{k} is not a subfield of F_{self.p}^{self.ext_degree}",
            )
        return self.frobenius(a, k) == a

    def subfield_elements(self, k: int) -> list[int]:
        """Elements of F_{p^k}, in canonical order."""
        return [a for a in self.ordered_elements() if self.in_subfield(a, k)]

    def roots(self, coeffs) -> list[int]:
        """All roots in the field of the polynomial with the given coefficients.

        Coefficients are encoded field elements, constant term first.
        Exhaustive scan; returns roots in canonical order.

        Raises:
            GKError(ZERO_POLYNOMIAL): if every coefficient is zero.
        """
        cs = [int(c) for c in coeffs]
        if not any(cs):
            raise GKError("ZERO_POLYNOMIAL", "the zero polynomial has every element as a root")
        x = np.arange(self.order)
        acc = np.full(self.order, cs[-1], dtype=np.uint16)
        for c in reversed(cs[:-1]):
            acc = self.ADD[self.MUL[acc, x], c]
        hits = np.nonzero(acc == 0)[0]
        return sorted((int(r) for r in hits), key=self.rank)

    def scalar_tables(self):
        """Nested-list views of the tables for pure-Python hot loops."""
        if self._scalar_tables is None:
            self._scalar_tables = (
                self.ADD.tolist(),
                self.SUB.tolist(),
                self.MUL.tolist(),
                self.INV.tolist(),
                self.NEG.tolist(),
            )
        return self._scalar_tables

    def __repr__(self):
        return f"Field(p={self.p}, ext_degree={self.ext_degree}, order={self.order})"


_CACHE: dict[tuple, Field] = {}


def make_field(p: int, ext_degree: int, modulus=None) -> Field:
    """Construct (or fetch from cache) F_{p^ext_degree}.

    Args:
        p: prime characteristic.
        ext_degree: absolute extension degree over F_p.
        modulus: optional coefficient list of the defining polynomial,
            constant term first, length ext_degree + 1, monic.  When omitted,
            a built-in default must exist for (p, ext_degree).

    Raises:
        GKError(UNSUPPORTED_SIZE): non-prime p, order above the supported cap,
            or no default modulus for this (p, ext_degree).
        GKError(REDUCIBLE_MODULUS): the supplied modulus factors over F_p.
        GKError(CONFIG_INVALID): malformed modulus.
    """
    if not _is_prime(p):
        raise GKError("UNSUPPORTED_SIZE", f"p must be prime, got {p}")
    if ext_degree < 1:
        raise GKError("UNSUPPORTED_SIZE", f"ext_degree must be >= 1, got {ext_degree}")
    if p**ext_degree > MAX_ORDER:
        raise GKError(
            "UNSUPPORTED_SIZE",
            f"order {p**ext_degree} exceeds the table-based cap of {MAX_ORDER}",
        )

    if modulus is None:
        if (p, ext_degree) not in DEFAULT_MODULI:
            raise GKError(
                "UNSUPPORTED_SIZE",
                f"no default modulus for (p={p}, ext_degree={ext_degree}); supply one",
            )
        modulus = DEFAULT_MODULI[(p, ext_degree)]

    mod = [int(c) % p for c in modulus]
    if len(mod) != ext_degree + 1:
        raise GKError(
            "CONFIG_INVALID",
            f"modulus must have {ext_degree + 1} coefficients, got {len(mod)}",
        )
    if mod[-1] == 0:
        raise GKError("CONFIG_INVALID", "modulus must have nonzero leading coefficient")
    if mod[-1] != 1:
        scale = pow(mod[-1], p - 2, p)
        mod = [(c * scale) % p for c in mod]

    key = (p, ext_degree, tuple(mod))
    if key in _CACHE:
        return _CACHE[key]

    if ext_degree > 1 and not _irreducible(mod, p):
        raise GKError("REDUCIBLE_MODULUS", f"{mod} factors over F_{p}")

    fld = Field(p, ext_degree, tuple(mod))
    _CACHE[key] = fld
    return fld

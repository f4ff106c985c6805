"""Arithmetic in GF(q^2) = GF(p^(2r)) together with its subfield GF(q).

Field elements are plain ints: the polynomial c0 + c1*x + ... + c_{2r-1}*x^(2r-1)
over GF(p) is encoded as sum(c_i * p**i), a bijection onto range(p**(2r)).
The constants 0 and 1 encode as 0 and 1, and the class of the indeterminate
(the primitive element alpha) encodes as p.

A FieldCtx holds the modulus and log/antilog tables for alpha, so mul, inv,
pow, conjugation (the q-power map) and norm (the (q+1)-power map) are table
lookups; addition works digit-wise in base p.  The modulus is the monic
primitive polynomial of degree 2r with the smallest coefficient encoding,
which makes construction bit-reproducible across runs.

A FieldCtx is immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from .errors import (
    BadNormTarget,
    DimensionMismatch,
    DivisionByZero,
    EvenCharacteristic,
    InternalError,
    NotPrime,
    TooLarge,
)

# Fields larger than this are refused at construction (table build is O(p^2r)).
MAX_FIELD_SIZE = 1 << 24


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldCtx:
    """Fully materialized GF(p^(2r)) with subfield GF(q), q = p^r.

    Not constructed directly; use :func:`make_field`.
    """

    def __init__(self, p, r, modulus, exp_table, log_table):
        self.p = p
        self.r = r
        self.q = p**r
        self.order = p ** (2 * r)
        self.modulus = tuple(modulus)
        self.alpha = exp_table[1] if self.order > 2 else 1
        self._exp = exp_table
        self._log = log_table
        self._caches = {}

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{2 * self.r}))"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    # -- element views -------------------------------------------------

    def elements(self):
        return range(self.order)

    def nonzero_elements(self):
        return range(1, self.order)

    def coeffs(self, a):
        """Polynomial-basis coordinates of a, lowest degree first."""
        p = self.p
        out = []
        for _ in range(2 * self.r):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, cs):
        if len(cs) > 2 * self.r:
            raise ValueError(f"at most {2 * self.r} coefficients expected")
        acc = 0
        for c in reversed(list(cs)):
            acc = acc * self.p + (c % self.p)
        return acc

    def from_int(self, m):
        """Embed an ordinary integer as the constant m mod p."""
        return m % self.p

    def alpha_pow(self, k):
        """alpha**k for any integer k (alpha is never zero)."""
        return self._exp[k % (self.order - 1)]

    def dlog(self, a):
        """Discrete log base alpha; a must be nonzero."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        p = self.p
        acc = 0
        mult = 1
        while a or b:
            acc += ((a % p) + (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return acc

    def neg(self, a):
        p = self.p
        acc = 0
        mult = 1
        while a:
            d = a % p
            if d:
                acc += (p - d) * mult
            a //= p
            mult *= p
        return acc

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[-self._log[a] % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def conj(self, a):
        """The q-power map, an involutory automorphism fixing exactly GF(q)."""
        return self.pow(a, self.q)

    def norm(self, a):
        """The (q+1)-power map into GF(q); multiplicative on nonzero elements."""
        return self.pow(a, self.q + 1)

    def is_in_base(self, a):
        """True iff a lies in the subfield GF(q), i.e. a^q = a."""
        return self.conj(a) == a

    def in_prime_field(self, a):
        """True iff a lies in GF(p), i.e. a^p = a."""
        return self.pow(a, self.p) == a

    def norm_preimages(self, beta):
        """All q+1 elements whose norm is beta, ascending by encoding.

        beta must be a nonzero element of the subfield GF(q); the solutions
        are alpha**(t0 + (q-1)*j) for j = 0..q where (q+1)*t0 = log(beta).
        """
        if beta == 0 or not self.is_in_base(beta):
            raise BadNormTarget(f"{beta} is not a nonzero element of GF({self.q})")
        q = self.q
        t0 = self._log[beta] // (q + 1)
        sols = sorted(self._exp[(t0 + (q - 1) * j) % (self.order - 1)] for j in range(q + 1))
        return sols

    # -- display -------------------------------------------------------

    def pow_str(self, a):
        """Power-of-alpha form: '0', '1', 'a', or 'a^k'."""
        if a == 0:
            return "0"
        k = self._log[a]
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"

    def poly_str(self, a):
        """Polynomial form like '2+x+2*x^3'."""
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms)


def _mul_by_x(coeffs, modulus, p):
    # coeffs has length deg(modulus); modulus is monic, so
    # x^deg = -(modulus minus leading term).
    d = len(coeffs)
    carry = coeffs[-1]
    out = [0] * d
    for i in range(d - 1, 0, -1):
        out[i] = (coeffs[i - 1] - carry * modulus[i]) % p
    out[0] = (-carry * modulus[0]) % p
    return out


def _encode(coeffs, p):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * p + c
    return acc


def _try_modulus(lower_coeffs, p, order):
    """Build exp table if x is primitive mod the monic polynomial; else None.

    x having multiplicative order exactly order-1 forces every nonzero
    residue to be a power of x, hence a unit, so the quotient ring is a
    field and the polynomial is both irreducible and primitive.
    """
    d = len(lower_coeffs)
    modulus = list(lower_coeffs) + [1]
    exp = [0] * (order - 1)
    cur = [0] * d
    cur[0] = 1
    for i in range(order - 1):
        enc = _encode(cur, p)
        if enc == 0:
            return None
        if enc == 1 and i > 0:
            return None
        exp[i] = enc
        cur = _mul_by_x(cur, modulus, p)
    if _encode(cur, p) != 1:
        return None
    return exp


def make_field(p: int, r: int, *, allow_even: bool = False) -> FieldCtx:
    """Construct GF(p^(2r)) for an odd prime p and exponent r >= 1.

    Characteristic 2 is refused unless allow_even is set (only the
    experimental search path ever sets it).
    """
    if not _is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if p == 2 and not allow_even:
        raise EvenCharacteristic("p must be an odd prime")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    order = p ** (2 * r)
    if order > MAX_FIELD_SIZE:
        raise TooLarge(f"p^(2r) = {order} exceeds the supported limit {MAX_FIELD_SIZE}")

    d = 2 * r
    exp = None
    modulus = None
    for m in range(p**d):
        lower = [(m // p**i) % p for i in range(d)]
        exp = _try_modulus(lower, p, order)
        if exp is not None:
            modulus = tuple(lower) + (1,)
            break
    if exp is None:
        raise InternalError("no primitive polynomial found")  # pragma: no cover

    log = [0] * order
    for i, e in enumerate(exp):
        log[e] = i
    return FieldCtx(p, r, modulus, exp, log)


def hermitian_ip(ctx: FieldCtx, xs, ys) -> int:
    """Hermitian inner product sum(x_i * y_i^q); conjugate-symmetric."""
    if len(xs) != len(ys):
        raise DimensionMismatch(f"vector lengths differ: {len(xs)} vs {len(ys)}")
    acc = 0
    for x, y in zip(xs, ys):
        acc = ctx.add(acc, ctx.mul(x, ctx.conj(y)))
    return acc

"""Exact fields for the root-counting stage.

Two coefficient fields drive the pipeline: a prime field with a ~62-bit
random modulus (production) and the rationals (cross-check).  Both expose
the same small operation set, and dense univariate polynomials over either
are plain ascending coefficient lists.

Roots of a squarefree eliminant are never computed as irreducible factors.
Instead a root is manipulated inside the quotient ring K[x]/(g): whenever a
value must be inverted or tested for zero and turns out to be a zero
divisor, ``SplitRequired`` carries the two complementary factors of g and
the caller redoes the computation on each half.  Within each surviving
factor every root behaves identically, so a passing factor of degree k
stands for k solutions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


class PrimeField:
    """Arithmetic mod a prime; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, c: int):
        return c % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rationals via Fraction."""

    __slots__ = ()

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, c: int):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return "RationalField()"


# deterministic Miller-Rabin witnesses, valid for all n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, bits: int = 62) -> int:
    """A random prime with the given bit length."""
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(candidate):
            return candidate


# ---------------------------------------------------------------------------
# univariate polynomials over a field (ascending coefficient lists)
# ---------------------------------------------------------------------------


def f_trim(c: list, F) -> list:
    while c and F.is_zero(c[-1]):
        c.pop()
    return c


def f_deg(c: list) -> int:
    return len(c) - 1


def f_from_ints(coeffs: Sequence[int], F) -> list:
    return f_trim([F.from_int(c) for c in coeffs], F)


def f_add(a: list, b: list, F) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero()
        y = b[i] if i < len(b) else F.zero()
        out.append(F.add(x, y))
    return f_trim(out, F)


def f_sub(a: list, b: list, F) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero()
        y = b[i] if i < len(b) else F.zero()
        out.append(F.sub(x, y))
    return f_trim(out, F)


def f_mul(a: list, b: list, F) -> list:
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return f_trim(out, F)


def f_scale(a: list, s, F) -> list:
    return f_trim([F.mul(x, s) for x in a], F)


def f_monic(a: list, F) -> list:
    if not a:
        return a
    return f_scale(a, F.inv(a[-1]), F)


def f_divmod(a: list, b: list, F) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    if len(a) < len(b):
        return [], f_trim(rem, F)
    quot = [F.zero()] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        top = rem[k + db]
        if F.is_zero(top):
            continue
        q = F.mul(top, lead_inv)
        quot[k] = q
        for j in range(db + 1):
            rem[k + j] = F.sub(rem[k + j], F.mul(q, b[j]))
    return f_trim(quot, F), f_trim(rem[:db], F)


def f_gcd(a: list, b: list, F) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = f_divmod(a, b, F)
        a, b = b, r
    return f_monic(a, F)


def f_xgcd(a: list, b: list, F) -> tuple[list, list, list]:
    """Monic g plus s, t with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one()], []
    t0, t1 = [], [F.one()]
    while r1:
        q, r = f_divmod(r0, r1, F)
        r0, r1 = r1, r
        s0, s1 = s1, f_sub(s0, f_mul(q, s1, F), F)
        t0, t1 = t1, f_sub(t0, f_mul(q, t1, F), F)
    if not r0:
        return [], s0, t0
    lead_inv = F.inv(r0[-1])
    return f_scale(r0, lead_inv, F), f_scale(s0, lead_inv, F), f_scale(t0, lead_inv, F)


def f_derivative(a: list, F) -> list:
    out = [F.mul(a[i], F.from_int(i)) for i in range(1, len(a))]
    return f_trim(out, F)


def f_squarefree_part(a: list, F) -> list:
    """a / gcd(a, a'); valid here because deg(a) is far below any modulus."""
    if f_deg(a) <= 1:
        return f_monic(a, F)
    g = f_gcd(a, f_derivative(a, F), F)
    if f_deg(g) == 0:
        return f_monic(a, F)
    q, r = f_divmod(a, g, F)
    assert not r
    return f_monic(q, F)


# ---------------------------------------------------------------------------
# quotient ring K[x]/(g) with dynamic splitting
# ---------------------------------------------------------------------------


class SplitRequired(Exception):
    """A zero divisor was met; retry on both complementary factors."""

    def __init__(self, left: list, right: list) -> None:
        super().__init__("modulus splits")
        self.left = left
        self.right = right


class QuotientRing:
    """K[x]/(g) for monic squarefree g; elements are fixed-length tuples."""

    __slots__ = ("field", "modulus", "deg")

    def __init__(self, field, modulus: list) -> None:
        if f_deg(modulus) < 1:
            raise ValueError("modulus must have degree >= 1")
        self.field = field
        self.modulus = modulus
        self.deg = f_deg(modulus)

    def _pad(self, coeffs: list) -> tuple:
        return tuple(coeffs[i] if i < len(coeffs) else self.field.zero() for i in range(self.deg))

    def zero(self) -> tuple:
        return self._pad([])

    def one(self) -> tuple:
        return self._pad([self.field.one()])

    def gen(self) -> tuple:
        """The class of x, i.e. the adjoined root itself."""
        if self.deg == 1:
            # x = -g0 for monic linear modulus
            return (self.field.neg(self.modulus[0]),)
        return self._pad([self.field.zero(), self.field.one()])

    def from_int(self, c: int) -> tuple:
        return self._pad([self.field.from_int(c)])

    def from_field(self, a) -> tuple:
        return self._pad([a])

    def lift(self, a: tuple) -> list:
        return f_trim(list(a), self.field)

    def add(self, a: tuple, b: tuple) -> tuple:
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(self.field.neg(x) for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        prod = f_mul(self.lift(a), self.lift(b), self.field)
        _, rem = f_divmod(prod, self.modulus, self.field)
        return self._pad(rem)

    def is_zero(self, a: tuple) -> bool:
        """True iff a vanishes at every root of the modulus.

        Raises SplitRequired when a vanishes at some roots but not others.
        """
        lifted = self.lift(a)
        if not lifted:
            return True
        d = f_gcd(lifted, self.modulus, self.field)
        if f_deg(d) == 0:
            return False
        q, r = f_divmod(self.modulus, d, self.field)
        assert not r
        raise SplitRequired(d, f_monic(q, self.field))

    def inv(self, a: tuple) -> tuple:
        """Inverse of a unit; call is_zero first to rule out zero divisors."""
        g, s, _ = f_xgcd(self.lift(a), self.modulus, self.field)
        if f_deg(g) != 0:
            raise ArithmeticError("inverting a zero divisor")
        _, rem = f_divmod(f_scale(s, self.field.inv(g[0]), self.field), self.modulus, self.field)
        return self._pad(rem)


# ---------------------------------------------------------------------------
# polynomials with quotient-ring coefficients (for partner-root recovery)
# ---------------------------------------------------------------------------


def rpoly_trim(q: list, ring: QuotientRing) -> list:
    """Drop leading coefficients that vanish everywhere; may split."""
    out = list(q)
    while out and ring.is_zero(out[-1]):
        out.pop()
    return out


def rpoly_rem(a: list, b: list, ring: QuotientRing) -> list:
    """Remainder of a by b; b must be trimmed with unit leading coefficient."""
    lead_inv = ring.inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    while len(rem) - 1 >= db:
        top = rem[-1]
        q = ring.mul(top, lead_inv)
        shift = len(rem) - 1 - db
        for j in range(db + 1):
            rem[shift + j] = ring.sub(rem[shift + j], ring.mul(q, b[j]))
        rem.pop()
    return rem


def rpoly_gcd(polys: list[list], ring: QuotientRing) -> Optional[list]:
    """Monic gcd of polynomials with quotient-ring coefficients.

    Zero polynomials are skipped; returns None when every input vanishes.
    Splits propagate to the caller via SplitRequired.
    """
    cur: Optional[list] = None
    for q in polys:
        qt = rpoly_trim(q, ring)
        if not qt:
            continue
        if cur is None:
            cur = qt
            continue
        a, b = cur, qt
        while b:
            r = rpoly_trim(rpoly_rem(a, b, ring), ring)
            a, b = b, r
        cur = a
    if cur is None:
        return None
    return [ring.mul(c, ring.inv(cur[-1])) for c in cur]

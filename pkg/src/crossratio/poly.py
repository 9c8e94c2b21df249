"""Sparse multivariate polynomials over the integers or a prime field.

Coefficients are Python ints, reduced to [0, p) when a modulus p is set and
exact otherwise (the rational pipeline keeps equations as primitive integer
polynomials: solutions only depend on zero sets, so content is stripped
freely).  Exponent vectors are fixed-length tuples, one slot per unknown.

``substitute`` performs the denominator-cleared linear replacement
x -> num/den, multiplying through by den**deg_x.  The univariate helpers
(`u_*`) work on ascending coefficient lists and back the fraction-free
Bareiss determinant used for Sylvester resultants.
"""

from __future__ import annotations

from math import gcd
from typing import Optional, Sequence


class MPoly:
    """Multivariate polynomial with int coefficients, optionally mod p."""

    __slots__ = ("nvars", "terms", "modulus")

    def __init__(
        self,
        nvars: int,
        terms: dict[tuple[int, ...], int],
        modulus: Optional[int] = None,
        _normalized: bool = False,
    ) -> None:
        self.nvars = nvars
        self.modulus = modulus
        if _normalized:
            self.terms = terms
        else:
            clean: dict[tuple[int, ...], int] = {}
            for exps, c in terms.items():
                if modulus is not None:
                    c %= modulus
                if c:
                    clean[exps] = c
            self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: int, nvars: int, modulus: Optional[int] = None) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value}, modulus)

    @classmethod
    def variable(cls, index: int, nvars: int, modulus: Optional[int] = None) -> "MPoly":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: 1}, modulus)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def variables(self) -> set[int]:
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return used

    def degree_in(self, var: int) -> int:
        return max((exps[var] for exps in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------

    def _like(self, terms: dict[tuple[int, ...], int]) -> "MPoly":
        return MPoly(self.nvars, terms, self.modulus)

    def __add__(self, other: "MPoly") -> "MPoly":
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return self._like(terms)

    def __sub__(self, other: "MPoly") -> "MPoly":
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) - c
        return self._like(terms)

    def __neg__(self) -> "MPoly":
        return self._like({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MPoly") -> "MPoly":
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return self._like(terms)

    def scale(self, value: int) -> "MPoly":
        return self._like({e: c * value for e, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.modulus == other.modulus
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.modulus, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------

    def coeffs_by_power(self, var: int) -> list["MPoly"]:
        """Coefficient polynomials of var**0, var**1, ..., with var zeroed."""
        deg = self.degree_in(var)
        buckets: list[dict[tuple[int, ...], int]] = [{} for _ in range(deg + 1)]
        for exps, c in self.terms.items():
            k = exps[var]
            rest = tuple(0 if i == var else e for i, e in enumerate(exps))
            buckets[k][rest] = buckets[k].get(rest, 0) + c
        return [self._like(b) for b in buckets]

    def substitute(self, var: int, num: "MPoly", den: "MPoly") -> "MPoly":
        """Denominator-cleared substitution var -> num/den.

        Returns den**d * self(var -> num/den) where d = deg_var(self);
        content-stripped over the integers.
        """
        coeffs = self.coeffs_by_power(var)
        d = len(coeffs) - 1
        num_pow = _powers(num, d)
        den_pow = _powers(den, d)
        acc = MPoly(self.nvars, {}, self.modulus)
        for k, c in enumerate(coeffs):
            acc = acc + c * num_pow[k] * den_pow[d - k]
        return acc.content_stripped()

    def content_stripped(self) -> "MPoly":
        """Divide out the integer content (no-op mod p); sign-normalised."""
        if self.modulus is not None or not self.terms:
            return self
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        lead = self.terms[max(self.terms)]
        if lead < 0:
            g = -g
        if g == 1:
            return self
        return MPoly(self.nvars, {e: c // g for e, c in self.terms.items()}, None, _normalized=True)

    def to_univariate(self, var: int) -> list[int]:
        """Ascending coefficient list; requires all other exponents zero."""
        coeffs = [0] * (self.degree_in(var) + 1)
        for exps, c in self.terms.items():
            if any(e and i != var for i, e in enumerate(exps)):
                raise ValueError("polynomial involves another variable")
            coeffs[exps[var]] = c
        return u_trim(coeffs, self.modulus)

    def evaluate(self, context, values: Sequence) -> object:
        """Evaluate in any ring context providing zero/from_int/add/mul."""
        acc = context.zero()
        pow_cache: dict[tuple[int, int], object] = {}
        for exps, c in sorted(self.terms.items()):
            term = context.from_int(c)
            for i, e in enumerate(exps):
                if not e:
                    continue
                key = (i, e)
                if key not in pow_cache:
                    v = values[i]
                    acc_pow = v
                    for _ in range(e - 1):
                        acc_pow = context.mul(acc_pow, v)
                    pow_cache[key] = acc_pow
                term = context.mul(term, pow_cache[key])
            acc = context.add(acc, term)
        return acc

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            factors = [str(c)] if (c != 1 or not any(exps)) else []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self.format([f'x{i}' for i in range(self.nvars)])})"


def _powers(base: MPoly, up_to: int) -> list[MPoly]:
    out = [MPoly.constant(1, base.nvars, base.modulus)]
    for _ in range(up_to):
        out.append(out[-1] * base)
    return out


# ---------------------------------------------------------------------------
# dense univariate polynomials over Z or Z/p (ascending coefficient lists)
# ---------------------------------------------------------------------------


def u_trim(c: list[int], p: Optional[int]) -> list[int]:
    if p is not None:
        c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def u_add(a: list[int], b: list[int], p: Optional[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return u_trim(out, p)


def u_sub(a: list[int], b: list[int], p: Optional[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return u_trim(out, p)


def u_mul(a: list[int], b: list[int], p: Optional[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return u_trim(out, p)


def u_neg(a: list[int], p: Optional[int]) -> list[int]:
    return u_trim([-x for x in a], p)


def u_divexact(a: list[int], b: list[int], p: Optional[int]) -> list[int]:
    """Exact division a / b; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if p is not None:
        lead_inv = pow(lead, -1, p)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        if p is None:
            if top % lead:
                raise ArithmeticError("inexact polynomial division")
            q = top // lead
        else:
            q = top * lead_inv % p
        quot[k] = q
        for j in range(db + 1):
            rem[k + j] -= q * b[j]
            if p is not None:
                rem[k + j] %= p
    if any(x % p if p is not None else x for x in rem):
        raise ArithmeticError("inexact polynomial division")
    return u_trim(quot, p)


def u_content_stripped(a: list[int]) -> list[int]:
    if not a:
        return a
    g = 0
    for c in a:
        g = gcd(g, c)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return [c // g for c in a]


# ---------------------------------------------------------------------------
# determinants and resultants
# ---------------------------------------------------------------------------


def bareiss_det(mat: list[list[list[int]]], p: Optional[int]) -> list[int]:
    """Fraction-free determinant of a matrix of univariate polynomials."""
    n = len(mat)
    m = [[u_trim(list(entry), p) for entry in row] for row in mat]
    sign = 1
    prev: list[int] = [1]
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return []
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = u_sub(u_mul(m[i][j], m[k][k], p), u_mul(m[i][k], m[k][j], p), p)
                m[i][j] = u_divexact(num, prev, p)
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return u_neg(det, p) if sign < 0 else det


def sylvester_resultant(
    f_coeffs: list[list[int]], g_coeffs: list[list[int]], p: Optional[int]
) -> list[int]:
    """Resultant of two polynomials in y whose coefficients are univariate
    polynomials in another variable (ascending lists in both layers)."""
    fc = [list(c) for c in f_coeffs]
    gc = [list(c) for c in g_coeffs]
    while fc and not fc[-1]:
        fc.pop()
    while gc and not gc[-1]:
        gc.pop()
    if not fc or not gc:
        return []
    df, dg = len(fc) - 1, len(gc) - 1
    if df == 0:
        out = [1]
        for _ in range(dg):
            out = u_mul(out, fc[0], p)
        return out
    if dg == 0:
        out = [1]
        for _ in range(df):
            out = u_mul(out, gc[0], p)
        return out
    size = df + dg
    zero: list[int] = []
    mat: list[list[list[int]]] = []
    for i in range(dg):
        row = [zero] * size
        for j in range(df + 1):
            row[i + j] = fc[df - j]
        mat.append(row)
    for i in range(df):
        row = [zero] * size
        for j in range(dg + 1):
            row[i + j] = gc[dg - j]
        mat.append(row)
    det = bareiss_det(mat, p)
    return det if p is not None else u_content_stripped(det)


def resultant_bivariate(f: MPoly, g: MPoly, elim: int, keep: int) -> list[int]:
    """Eliminate variable ``elim`` from f and g; result univariate in ``keep``."""
    fc = [c.to_univariate(keep) for c in f.coeffs_by_power(elim)]
    gc = [c.to_univariate(keep) for c in g.coeffs_by_power(elim)]
    return sylvester_resultant(fc, gc, f.modulus)

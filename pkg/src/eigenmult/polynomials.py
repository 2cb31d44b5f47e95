"""Exact integer polynomial arithmetic.

Polynomials are dense lists of arbitrary-precision integer coefficients,
constant term first, so ``IntPoly([-1, 0, 1])`` is x^2 - 1.  Everything in
this module is exact: characteristic polynomials are computed by a
division-free Berkowitz-style recursion, cyclotomic polynomials by the
classical divide-out recursion, and the minimal polynomial of 2cos(p*pi/q)
by an exact change of basis from the matching cyclotomic polynomial.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Optional, Sequence


class IntPoly:
    """Dense integer polynomial, low degree first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def eval_int(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly('0')"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if mag == 1 else f"{mag}{xs}"
            parts.append(f"{sign}{term}" if not parts else f" {sign} {term}")
        return f"IntPoly('{''.join(parts)}')"


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    return f + g


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    return f * g


def eval_at_integer(f: IntPoly, x: int) -> int:
    return f.eval_int(x)


def derivative(f: IntPoly) -> IntPoly:
    return f.derivative()


def divexact(f: IntPoly, g: IntPoly) -> Optional[IntPoly]:
    """Exact quotient f / g over the integers, or None when g does not divide f.

    Raises ZeroDivisionError when g is the zero polynomial.  When g is monic
    the division, if it succeeds, is automatically integral.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    if f.degree < g.degree:
        return None
    rem = list(f.coeffs)
    gc = g.coeffs
    glead = gc[-1]
    qdeg = len(rem) - len(gc)
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        top = rem[k + len(gc) - 1]
        if top % glead != 0:
            return None
        q = top // glead
        quot[k] = q
        if q:
            for i, c in enumerate(gc):
                rem[k + i] -= q * c
    if any(rem):
        return None
    return IntPoly(quot)


def factor_multiplicity(f: IntPoly, mu: IntPoly) -> int:
    """Largest k with mu^k dividing f, by repeated exact division.

    mu must be monic of degree >= 1; irreducibility is the caller's
    responsibility (AlgebraicNumber enforces it where it can).
    """
    if mu.degree < 1:
        raise ValueError("factor must have degree >= 1")
    if not mu.is_monic():
        raise ValueError("factor must be monic")
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial is undefined")
    k = 0
    cur = f
    while True:
        nxt = divexact(cur, mu)
        if nxt is None:
            return k
        k += 1
        cur = nxt


def charpoly(graph) -> IntPoly:
    """Characteristic polynomial det(xI - A) of a graph's adjacency matrix.

    Division-free Berkowitz recursion over the trailing principal
    submatrices; every intermediate value is an integer, so the result is
    exact for any graph this package can hold.
    """
    n = graph.n
    nbrs = graph.adj
    poly = [1]  # coefficient vector, leading first, for the empty submatrix
    for k in range(n - 1, -1, -1):
        size = n - k
        base = k + 1
        # Indicator of N(k) within vertices k+1 .. n-1.
        c = [0] * (size - 1)
        for u in nbrs[k]:
            if u > k:
                c[u - base] = 1
        col = [1, 0]  # diagonal entries are zero for simple graphs
        v = c
        for step in range(size - 1):
            d = 0
            for u in nbrs[k]:
                if u > k:
                    d += v[u - base]
            col.append(-d)
            if step < size - 2:
                w = [0] * (size - 1)
                for i, vi in enumerate(v):
                    if vi:
                        for u in nbrs[base + i]:
                            if u > k:
                                w[u - base] += vi
                v = w
        new = [0] * (size + 1)
        for i in range(size + 1):
            s = 0
            jlo = max(0, i - (len(col) - 1))
            for j in range(jlo, min(i, size - 1) + 1):
                cij = col[i - j]
                if cij:
                    s += cij * poly[j]
            new[i] = s
        poly = new
    return IntPoly(reversed(poly))


@functools.lru_cache(maxsize=None)
def path_charpoly(m: int) -> IntPoly:
    """Characteristic polynomial of the path on m vertices.

    Three-term recurrence f_m = x*f_{m-1} - f_{m-2} with f_0 = 1, f_1 = x;
    the roots are 2cos(i*pi/(m+1)).
    """
    if m < 0:
        raise ValueError("path order must be >= 0")
    if m == 0:
        return ONE
    if m == 1:
        return X
    return X * path_charpoly(m - 1) - path_charpoly(m - 2)


def cycle_charpoly(m: int) -> IntPoly:
    """Characteristic polynomial of the cycle on m >= 3 vertices.

    f_{C_m} = f_{P_m} - f_{P_{m-2}} - 2; the roots are 2cos(2i*pi/m).
    """
    if m < 3:
        raise ValueError("cycle order must be >= 3")
    return path_charpoly(m) - path_charpoly(m - 2) - IntPoly([2])


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by proper divisors."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            q = divexact(poly, cyclotomic(d))
            assert q is not None
            poly = q
    return poly


@functools.lru_cache(maxsize=None)
def _two_cos_minimal_poly_of_order(order: int) -> IntPoly:
    """Minimal polynomial of zeta + 1/zeta for zeta a primitive root of unity.

    For order N >= 3 it is recovered from the cyclotomic polynomial via
    Phi_N(x) = x^(phi(N)/2) * Psi_N(x + 1/x), solved exactly by
    back-substitution from the top coefficient in the basis
    x^(phi/2 - j) * (x^2 + 1)^j.
    """
    if order == 1:
        return IntPoly([-2, 1])  # x - 2
    if order == 2:
        return IntPoly([2, 1])  # x + 2
    phi = cyclotomic(order)
    half = phi.degree // 2
    rem = list(phi.coeffs) + [0] * (2 * half + 1 - len(phi.coeffs))
    x2p1 = IntPoly([1, 0, 1])
    psi = [0] * (half + 1)
    for j in range(half, -1, -1):
        c = rem[half + j]
        psi[j] = c
        if c:
            basis = (x2p1 ** j).shifted(half - j)
            for i, b in enumerate(basis.coeffs):
                rem[i] -= c * b
    assert not any(rem), "cyclotomic substitution identity failed"
    return IntPoly(psi)


def cos_pi_minimal_poly(p: int, q: int) -> IntPoly:
    """Monic irreducible minimal polynomial of 2cos(p*pi/q), gcd(p, q) = 1.

    exp(i*pi*p/q) is a primitive root of unity of order 2q for odd p and
    order q for even p; the minimal polynomial of its sum with its inverse
    depends only on that order.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if p < 0 or p > q:
        raise ValueError("p must satisfy 0 <= p <= q")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p/q must be in lowest terms, got {p}/{q}")
    order = 2 * q if p % 2 == 1 else q
    return _two_cos_minimal_poly_of_order(order)


def in_path_spectrum(lam, s: int) -> bool:
    """Whether lam is an eigenvalue of the path on s vertices.

    Decided by minimal-polynomial divisibility.  For a cosine-tagged value
    2cos(p*pi/q) with 0 < p < q this agrees with the congruence
    s = q - 1 (mod q); the divisibility route is the one used.
    """
    if s < 0:
        raise ValueError("path order must be >= 0")
    minpoly = getattr(lam, "minpoly", lam)
    if s == 0:
        return False
    return divexact(path_charpoly(s), minpoly) is not None


def _integer_roots(f: IntPoly) -> list:
    """All integer roots of a monic integer polynomial."""
    if f.coeffs[0] == 0:
        return [0] + [r for r in _integer_roots(IntPoly(f.coeffs[1:])) if r != 0]
    roots = []
    c0 = abs(f.coeffs[0])
    for d in range(1, c0 + 1):
        if c0 % d == 0:
            for r in (d, -d):
                if f.eval_int(r) == 0:
                    roots.append(r)
    return roots


def is_irreducible(f: IntPoly) -> Optional[bool]:
    """Exact irreducibility over Q for monic polynomials of degree <= 4.

    Returns True/False up to degree 4 and None above, where the caller must
    supply its own guarantee (the documented trust boundary for
    user-provided minimal polynomials).
    """
    if not f.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if f.coeffs[0] == 0:
        return False  # divisible by x
    if _integer_roots(f):
        return False
    if d <= 3:
        return True  # reducible quadratics/cubics have a rational root
    if d == 4:
        # Remaining possibility: product of two monic integer quadratics
        # (x^2 + px + r)(x^2 + sx + t).
        a3, a2, a1, a0 = f.coeffs[3], f.coeffs[2], f.coeffs[1], f.coeffs[0]
        divs = set()
        for d1 in range(1, abs(a0) + 1):
            if a0 % d1 == 0:
                divs.update((d1, -d1))
        for r in divs:
            if a0 % r != 0:
                continue
            t = a0 // r
            # p + s = a3, p*s = a2 - r - t, p*t + s*r = a1
            ps = a2 - r - t
            disc = a3 * a3 - 4 * ps
            if disc < 0:
                continue
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for pnum in ((a3 + root), (a3 - root)):
                if pnum % 2 != 0:
                    continue
                pp = pnum // 2
                ss = a3 - pp
                if pp * t + ss * r == a1:
                    return False
        return True
    return None


def poly_from_roots(roots: Sequence[int]) -> IntPoly:
    """Monic polynomial with the given integer roots (with multiplicity)."""
    out = ONE
    for r in roots:
        out = out * IntPoly([-r, 1])
    return out

"""Exact arithmetic in Q(lambda) and the two eigenvalue-multiplicity oracles.

An eigenvalue is an AlgebraicNumber: a monic irreducible integer minimal
polynomial, optionally tagged with the angle (p, q) meaning
lambda = 2cos(p*pi/q).  Multiplicities are computed two independent ways:

* multiplicity      -- power of the minimal polynomial in the exact
                       characteristic polynomial;
* rank_multiplicity -- n - rank(A - lambda*I) by Gaussian elimination over
                       Q(lambda), with field inverses by the extended
                       Euclidean algorithm modulo the minimal polynomial.

The two must always agree; sweeps treat a mismatch as a soundness alarm.

Field elements are rational coordinate vectors in the power basis of
Q[x]/(mu).  Internally a vector is stored as integer numerators over one
positive denominator in lowest terms, which keeps the elimination inner
loop in plain integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .graphs import Graph, induced_delete
from .polynomials import (
    IntPoly,
    charpoly,
    cos_pi_minimal_poly,
    factor_multiplicity,
    is_irreducible,
)


class ReducibleMinimalPolynomialError(ArithmeticError):
    """A nonzero element of Q[x]/(mu) had no inverse: mu was not irreducible."""


class NotAnEigenvalueError(ValueError):
    """Raised when an operation requires lambda to be an eigenvalue."""


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number given by its monic irreducible minimal polynomial."""

    minpoly: IntPoly
    angle: Optional[Tuple[int, int]] = None
    name: str = ""

    @staticmethod
    def from_angle(p: int, q: int) -> "AlgebraicNumber":
        """The number 2cos(p*pi/q) with gcd(p, q) = 1."""
        mu = cos_pi_minimal_poly(p, q)
        if p == 0:
            name = "2"
        elif p == q:
            name = "-2"
        else:
            name = f"2cos({p}pi/{q})"
        return AlgebraicNumber(mu, (p, q), name)

    @staticmethod
    def from_minpoly(
        coeffs: Iterable[int], name: Optional[str] = None
    ) -> "AlgebraicNumber":
        """Wrap an explicit monic minimal polynomial (constant term first).

        Irreducibility is verified exactly up to degree 4; above that the
        caller's assertion is trusted (documented trust boundary).
        """
        mu = coeffs if isinstance(coeffs, IntPoly) else IntPoly(coeffs)
        if mu.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if not mu.is_monic():
            raise ValueError("minimal polynomial must be monic")
        verdict = is_irreducible(mu)
        if verdict is False:
            raise ValueError(f"{mu!r} is reducible over Q")
        return AlgebraicNumber(mu, None, name or f"root of {mu!r}")

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def approx(self) -> float:
        """A floating-point root of the minimal polynomial (display only)."""
        if self.angle is not None:
            p, q = self.angle
            return 2.0 * math.cos(math.pi * p / q)
        # crude bisection on the largest real root
        mu = self.minpoly
        lo, hi = -2.0, 2.0
        bound = 1.0 + max(abs(c) for c in mu.coeffs)
        lo, hi = -bound, bound
        for _ in range(200):
            mid = (lo + hi) / 2
            if mu.eval_float(mid) * mu.eval_float(hi) <= 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    def __str__(self) -> str:
        return self.name


def default_lambda_set(max_q: int = 9) -> List[AlgebraicNumber]:
    """The sweep default: +-2 plus all 2cos(p*pi/q), gcd(p,q)=1, p < q <= max_q."""
    out = [AlgebraicNumber.from_angle(0, 1), AlgebraicNumber.from_angle(1, 1)]
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                out.append(AlgebraicNumber.from_angle(p, q))
    return out


# ---------------------------------------------------------------------------
# The field Q[x]/(mu)
# ---------------------------------------------------------------------------

Vec = Tuple[int, ...]
Elem = Tuple[Vec, int]  # numerators, positive denominator, in lowest terms


class Field:
    """Arithmetic context for Q[x]/(mu) with mu monic irreducible."""

    __slots__ = ("minpoly", "deg", "reductions", "zero", "one", "gen")

    def __init__(self, minpoly: IntPoly):
        if not minpoly.is_monic() or minpoly.degree < 1:
            raise ValueError("field modulus must be monic of degree >= 1")
        d = minpoly.degree
        self.minpoly = minpoly
        self.deg = d
        # reductions[i] = coordinates of x^(d+i), 0 <= i <= d-2
        reds: List[Vec] = []
        cur = [-c for c in minpoly.coeffs[:d]]
        reds.append(tuple(cur))
        for _ in range(1, d - 1):
            nxt = [0] + cur
            top = nxt.pop()
            if top:
                nxt = [a + top * b for a, b in zip(nxt, reds[0])]
            cur = nxt
            reds.append(tuple(cur))
        self.reductions = tuple(reds)
        self.zero: Elem = ((0,) * d, 1)
        self.one: Elem = ((1,) + (0,) * (d - 1), 1)
        if d == 1:
            self.gen = (self.reductions[0], 1)
        else:
            self.gen = ((0, 1) + (0,) * (d - 2), 1)

    # -- element helpers ----------------------------------------------------

    def norm(self, nums: Sequence[int], den: int) -> Elem:
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = den
        for x in nums:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        return tuple(nums), den

    def from_int(self, k: int) -> Elem:
        return (k,) + (0,) * (self.deg - 1), 1

    def from_fractions(self, coords: Sequence[Fraction]) -> Elem:
        den = 1
        for c in coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coords]
        return self.norm(nums, den)

    def to_fractions(self, a: Elem) -> Tuple[Fraction, ...]:
        nums, den = a
        return tuple(Fraction(x, den) for x in nums)

    def is_zero(self, a: Elem) -> bool:
        return not any(a[0])

    def add(self, a: Elem, b: Elem) -> Elem:
        an, ad = a
        bn, bd = b
        if ad == bd:
            return self.norm([x + y for x, y in zip(an, bn)], ad)
        return self.norm([x * bd + y * ad for x, y in zip(an, bn)], ad * bd)

    def sub(self, a: Elem, b: Elem) -> Elem:
        an, ad = a
        bn, bd = b
        if ad == bd:
            return self.norm([x - y for x, y in zip(an, bn)], ad)
        return self.norm([x * bd - y * ad for x, y in zip(an, bn)], ad * bd)

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a[0]), a[1]

    def mul(self, a: Elem, b: Elem) -> Elem:
        d = self.deg
        an, ad = a
        bn, bd = b
        if d == 1:
            return self.norm((an[0] * bn[0],), ad * bd)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for i in range(d - 2, -1, -1):
            top = conv[d + i]
            if top:
                red = self.reductions[i]
                for k in range(d):
                    out[k] += top * red[k]
        return self.norm(out, ad * bd)

    def inverse(self, a: Elem) -> Elem:
        """Inverse by the extended Euclidean algorithm in Q[x] modulo mu.

        A nonzero element without an inverse proves the modulus reducible,
        which is reported loudly rather than silently mis-ranked.
        """
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in Q(lambda)")
        if self.deg == 1:
            an, ad = a
            return self.norm((ad,), an[0])
        r0 = [Fraction(c) for c in self.minpoly.coeffs]
        r1 = [Fraction(x, a[1]) for x in a[0]]
        s0: List[Fraction] = [Fraction(0)]
        s1: List[Fraction] = [Fraction(1)]

        def trim(p: List[Fraction]) -> List[Fraction]:
            while p and not p[-1]:
                p.pop()
            return p

        r0, r1 = trim(r0), trim(r1)
        while True:
            # divide r0 by r1
            quot = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
            rem = list(r0)
            while len(rem) >= len(r1) and trim(rem):
                if len(rem) < len(r1):
                    break
                q = rem[-1] / r1[-1]
                k = len(rem) - len(r1)
                quot[k] = q
                for i, c in enumerate(r1):
                    rem[k + i] -= q * c
                trim(rem)
            rem = trim(rem)
            # s_new = s0 - quot * s1
            prod = [Fraction(0)] * (len(quot) + len(s1))
            for i, qq in enumerate(quot):
                if qq:
                    for j, ss in enumerate(s1):
                        prod[i + j] += qq * ss
            s_new = [
                (s0[i] if i < len(s0) else Fraction(0))
                - (prod[i] if i < len(prod) else Fraction(0))
                for i in range(max(len(s0), len(prod)))
            ]
            r0, s0, r1, s1 = r1, s1, rem, trim(s_new)
            if not r1:
                break
        if len(r0) != 1:
            raise ReducibleMinimalPolynomialError(
                f"gcd of element with modulus {self.minpoly!r} has degree "
                f"{len(r0) - 1}; the supplied minimal polynomial is reducible"
            )
        c = r0[0]
        coords = [s / c for s in s0]
        coords += [Fraction(0)] * (self.deg - len(coords))
        return self.from_fractions(coords[: self.deg])


_FIELD_CACHE: Dict[IntPoly, Field] = {}


def field_of(minpoly: IntPoly) -> Field:
    f = _FIELD_CACHE.get(minpoly)
    if f is None:
        f = Field(minpoly)
        _FIELD_CACHE[minpoly] = f
    return f


class FieldElement:
    """Public wrapper: an element of Q(lambda) as rational coordinates."""

    __slots__ = ("field", "_raw")

    def __init__(self, field: Field, raw: Elem):
        self.field = field
        self._raw = raw

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return self.field.to_fractions(self._raw)

    def is_zero(self) -> bool:
        return self.field.is_zero(self._raw)

    def _wrap(self, raw: Elem) -> "FieldElement":
        return FieldElement(self.field, raw)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.field.add(self._raw, other._raw))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.field.sub(self._raw, other._raw))

    def __neg__(self) -> "FieldElement":
        return self._wrap(self.field.neg(self._raw))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.field.mul(self._raw, other._raw))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inverse(self._raw))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self._raw == other._raw
        )

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coords)!r} mod {self.field.minpoly!r})"


class FieldMatrix:
    """A matrix over one shared Q(lambda); rank by Gaussian elimination."""

    def __init__(self, field: Field, rows: Sequence[Sequence[Elem]]):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.ncols = len(self.rows[0]) if self.rows else 0

    @staticmethod
    def lambda_shifted_adjacency(g: Graph, lam: AlgebraicNumber) -> "FieldMatrix":
        """The matrix A(G) - lambda*I over Q(lambda)."""
        fld = field_of(lam.minpoly)
        neg_gen = fld.neg(fld.gen)
        one = fld.one
        zero = fld.zero
        rows = []
        for u in range(g.n):
            row = [zero] * g.n
            for v in g.adj[u]:
                row[v] = one
            row[u] = neg_gen
            rows.append(row)
        return FieldMatrix(fld, rows)

    def stack_indicator_rows(self, vertices: Iterable[int]) -> "FieldMatrix":
        fld = self.field
        rows = [list(r) for r in self.rows]
        for x in vertices:
            row = [fld.zero] * self.ncols
            row[x] = fld.one
            rows.append(row)
        return FieldMatrix(fld, rows)

    def rank(self) -> int:
        fld = self.field
        is_zero = fld.is_zero
        mul = fld.mul
        sub = fld.sub
        rows = self.rows
        nrows = len(rows)
        r = 0
        for col in range(self.ncols):
            piv = None
            for i in range(r, nrows):
                if not is_zero(rows[i][col]):
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = fld.inverse(rows[r][col])
            prow = rows[r]
            for k in range(col, self.ncols):
                if not is_zero(prow[k]):
                    prow[k] = mul(prow[k], inv)
            for i in range(r + 1, nrows):
                f = rows[i][col]
                if is_zero(f):
                    continue
                row = rows[i]
                row[col] = fld.zero
                for k in range(col + 1, self.ncols):
                    pk = prow[k]
                    if not is_zero(pk):
                        row[k] = sub(row[k], mul(f, pk))
            r += 1
            if r == nrows:
                break
        return r

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def nullspace_fractions(self) -> List[List[Fraction]]:
        """Nullspace basis as rational coordinate rows (diagnostic only).

        Coordinates are flattened over the power basis of Q(lambda): entry
        j of each kernel vector is returned as deg(mu) stacked rationals.
        This is internal plumbing for debugging eigenvectors.
        """
        fld = self.field
        # full RREF over the field
        rows = [list(r) for r in self.rows]
        pivots: List[int] = []
        r = 0
        for col in range(self.ncols):
            piv = next(
                (i for i in range(r, len(rows)) if not fld.is_zero(rows[i][col])),
                None,
            )
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = fld.inverse(rows[r][col])
            rows[r] = [fld.mul(e, inv) for e in rows[r]]
            for i in range(len(rows)):
                if i != r and not fld.is_zero(rows[i][col]):
                    f = rows[i][col]
                    rows[i] = [
                        fld.sub(a, fld.mul(f, b)) for a, b in zip(rows[i], rows[r])
                    ]
            pivots.append(col)
            r += 1
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [fld.zero] * self.ncols
            vec[fc] = fld.one
            for ri, pc in enumerate(pivots):
                vec[pc] = fld.neg(rows[ri][fc])
            basis.append(
                [x for e in vec for x in fld.to_fractions(e)]
            )
        return basis


# ---------------------------------------------------------------------------
# Multiplicity oracles
# ---------------------------------------------------------------------------


def multiplicity(g: Graph, lam: AlgebraicNumber) -> int:
    """Eigenvalue multiplicity: power of the minimal polynomial in charpoly."""
    return factor_multiplicity(charpoly(g), lam.minpoly)


def rank_multiplicity(g: Graph, lam: AlgebraicNumber) -> int:
    """Independent oracle: n - rank(A - lambda*I) over Q(lambda)."""
    if g.n == 0:
        return 0
    return g.n - FieldMatrix.lambda_shifted_adjacency(g, lam).rank()


def constrained_eigenspace_dim(
    g: Graph, lam: AlgebraicNumber, vanish_at: Iterable[int]
) -> int:
    """dim of the lambda-eigenspace cut by coordinate-vanishing constraints.

    Nullity over Q(lambda) of (A - lambda*I) stacked with one indicator row
    per constrained vertex; always >= multiplicity(g, lam) - |X|.
    """
    xs = sorted(set(vanish_at))
    for x in xs:
        g.check_vertex(x)
    if g.n == 0:
        return 0
    mat = FieldMatrix.lambda_shifted_adjacency(g, lam).stack_indicator_rows(xs)
    return mat.nullity()


def is_downer(g: Graph, u: int, lam: AlgebraicNumber) -> bool:
    """Whether deleting u lowers the multiplicity of lam by exactly one."""
    g.check_vertex(u)
    m = multiplicity(g, lam)
    if m < 1:
        raise NotAnEigenvalueError(
            f"{lam} is not an eigenvalue of the graph (multiplicity 0)"
        )
    sub, _ = induced_delete(g, [u])
    return multiplicity(sub, lam) == m - 1

"""Double Schur polynomials and the bases around them.

Double monomials (x|t)^k = (x + t1)...(x + tk) generate a basis of the
polynomial ring in one variable over Z[t1, t2, ...]; alternants (the
skew-symmetric determinants det((x_i|t)^{nu_j})) give a basis of the
skew-symmetric polynomials indexed by strictly decreasing sequences nu,
and the double Schur polynomial of a partition is the exact ratio of the
alternant at lam + staircase by the staircase alternant (the Vandermonde
determinant).  This module also provides the change-of-basis expansions
and the Pieri rule for multiplication by x1 + ... + xn.

Sign convention: double monomials use (x + t_i), not (x - t_i).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .poly import Poly

__all__ = [
    "partition",
    "strict_sequence",
    "staircase",
    "add_staircase",
    "remove_staircase",
    "x_sum",
    "double_monomial",
    "alternant",
    "double_schur",
    "expand_in_alternants",
    "expand_in_double_schur",
    "pieri_multiply",
    "SchurExpansion",
    "expansion_to_poly",
]


def partition(parts):
    """Normalize to a weakly decreasing tuple of positive integers."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def strict_sequence(parts, n=None):
    """Validate a strictly decreasing tuple of nonnegative integers."""
    parts = tuple(int(p) for p in parts)
    if n is not None and len(parts) != n:
        raise ValueError(f"expected length {n}, got {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative entry in {parts}")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"entries not strictly decreasing: {parts}")
    return parts


def staircase(n):
    """(n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def add_staircase(lam, n):
    """Pad lam with zeros to length n and add the staircase."""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    padded = lam + (0,) * (n - len(lam))
    return tuple(padded[i] + n - 1 - i for i in range(n))


def remove_staircase(nu):
    """Inverse of add_staircase: subtract the staircase, trim zeros."""
    n = len(nu)
    nu = strict_sequence(nu, n)
    return partition(tuple(nu[i] - (n - 1 - i) for i in range(n)))


def x_sum(n):
    """x1 + ... + xn."""
    acc = Poly.zero(n)
    for i in range(1, n + 1):
        acc = acc + Poly.x(i, n)
    return acc


@lru_cache(maxsize=None)
def double_monomial(k, var=1, nvars=1):
    """The double monomial (x_var|t)^k = (x_var + t1)...(x_var + tk),
    expanded; (x|t)^0 = 1.  Monic of degree k in x_var."""
    if k < 0:
        raise ValueError("double monomial exponent must be nonnegative")
    acc = Poly.one(nvars)
    xi = Poly.x(var, nvars)
    for j in range(1, k + 1):
        acc = acc * (xi + Poly.t(j, nvars))
    return acc


@lru_cache(maxsize=None)
def alternant(nu, n):
    """The skew-symmetric basis element indexed by a strictly decreasing
    sequence: the n x n determinant det( (x_i|t)^{nu_j} ).

    Computed by cofactor expansion over row subsets, consuming columns
    left to right; no division is performed.
    """
    if n < 1:
        raise ValueError("arity must be at least 1")
    nu = strict_sequence(nu, n)
    minors = {(): Poly.one(n)}
    for col in range(n):
        exp = nu[col]
        entries = [double_monomial(exp, i, n) for i in range(1, n + 1)]
        new = {}
        for rows in combinations(range(1, n + 1), col + 1):
            # cofactors along the last column of the sub-block
            new[rows] = Poly.sum_of_products(
                (-1 if (pos + col) % 2 else 1,
                 entries[r - 1],
                 minors[tuple(rr for rr in rows if rr != r)])
                for pos, r in enumerate(rows))
        minors = new
    return minors[tuple(range(1, n + 1))]


@lru_cache(maxsize=None)
def double_schur(lam, n):
    """The double Schur polynomial of lam in x1..xn: the exact ratio of the
    alternant at lam + staircase by the staircase alternant."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    lam = partition(lam)
    s = alternant(add_staircase(lam, n), n).exact_div(alternant(staircase(n), n))
    assert s.is_symmetric(), f"double Schur polynomial of {lam} came out asymmetric"
    return s


def _check_arity(p, n):
    if p.nx != n:
        raise ValueError(f"expected a polynomial in x1..x{n}, got arity {p.nx}")


def expand_in_alternants(p, n):
    """Expand a skew-symmetric polynomial in the alternant basis.

    Returns {nu: t-only coefficient}.  Under lexicographic order on the
    x-exponents the leading x-monomial of the alternant at nu is
    x1^{nu_1}...xn^{nu_n} with coefficient 1 (double monomials are monic),
    so the leading term of p determines one summand at a time: subtract it
    and recurse.  The leading x-monomial strictly decreases and the total
    x-degree never grows, so this terminates.
    """
    _check_arity(p, n)
    if n >= 2 and p.swap_x(1, 2) != -p:
        raise ValueError("polynomial is not skew-symmetric")
    out = {}
    rem = p
    while rem:
        xv = rem.leading_x()
        if any(xv[i] <= xv[i + 1] for i in range(n - 1)):
            raise RuntimeError(
                f"leading exponents {xv} not strictly decreasing; "
                "non-skew input slipped through")
        c = rem.coefficient_of_x(xv)
        out[xv] = c
        rem = rem - c.as_arity(n) * alternant(xv, n)
    return out


def expand_in_double_schur(p, n):
    """Expand a symmetric polynomial in the double Schur basis: multiply by
    the staircase alternant, expand in alternants, shift the index back."""
    _check_arity(p, n)
    if not p.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    raw = expand_in_alternants(p * alternant(staircase(n), n), n)
    return SchurExpansion(n, {remove_staircase(nu): c for nu, c in raw.items()})


def pieri_multiply(lam, n):
    """Expansion of (x1 + ... + xn) times the double Schur polynomial of lam:
    coefficient -(t_{lam_1+n} + t_{lam_2+n-1} + ... + t_{lam_n+1}) on lam
    itself and coefficient 1 on every partition obtained by adding one box
    (keeping at most n rows)."""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    padded = lam + (0,) * (n - len(lam))
    diag = Poly.zero(0)
    for i, part in enumerate(padded, 1):
        diag = diag - Poly.t(part + n - i + 1)
    coeffs = {lam: diag}
    for r in range(n):
        grown = list(padded)
        grown[r] += 1
        if r == 0 or grown[r] <= grown[r - 1]:
            coeffs[partition(grown)] = Poly.one()
    return SchurExpansion(n, coeffs)


class SchurExpansion:
    """A finite map from partitions to t-only coefficients: the coordinates
    of a symmetric polynomial in the double Schur basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        if n < 1:
            raise ValueError("arity must be at least 1")
        self.n = n
        clean = {}
        for lam, c in coeffs.items():
            lam = partition(lam)
            if len(lam) > n:
                raise ValueError(f"partition {lam} has more than {n} parts")
            if isinstance(c, int):
                c = Poly.const(c)
            if c.nx != 0:
                c = c.t_only()
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def unit(cls, lam, n):
        return cls(n, {partition(lam): Poly.one()})

    def get(self, lam):
        return self.coeffs.get(partition(lam), Poly.zero(0))

    def items(self):
        """(partition, coefficient) pairs in lexicographic partition order."""
        return [(lam, self.coeffs[lam]) for lam in sorted(self.coeffs)]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"SchurExpansion(n={self.n}, {{{body}}})"

    def to_obj(self):
        from .poly import poly_to_obj
        return {
            "n": self.n,
            "terms": [{"lambda": list(lam), "coeff": poly_to_obj(c)}
                      for lam, c in self.items()],
        }

    @classmethod
    def from_obj(cls, obj):
        from .poly import poly_from_obj
        return cls(obj["n"], {tuple(item["lambda"]): poly_from_obj(item["coeff"], nx=0)
                              for item in obj["terms"]})


def expansion_to_poly(e):
    """Evaluate a SchurExpansion back to the symmetric polynomial it names."""
    acc = Poly.zero(e.n)
    for lam, c in e.coeffs.items():
        acc = acc + c.as_arity(e.n) * double_schur(lam, e.n)
    return acc

"""Sparse exact multivariate polynomial arithmetic.

Polynomials live in Z[t1, t2, ...][x1, ..., xn]: a fixed block of n
x-variables (the arity, fixed per polynomial) together with unboundedly
many t-parameters.  Coefficients are arbitrary-precision integers and
every operation is exact.

Monomials are packed into single integers, 16 bits per exponent field,
most significant field first::

    [total degree][x1] ... [xn][t1] ... [tw]

where w is the t-width the polynomial is currently stored at (at least
the largest t-index present; trailing padding is harmless and resolved
on comparison).  The packing makes the hot paths cheap: multiplying two
monomials is a single integer addition, and the natural integer order on
keys is exactly graded lexicographic order with

    x1 > x2 > ... > xn > t1 > t2 > ...

which is the canonical term order used everywhere for leading-term
extraction, display and serialization.

The total degree of any operand must stay below 2**15 so that no field
can overflow during a product; multiplication checks this and raises
DegreeOverflow.  Arity 0 (no x-variables) is the coefficient ring
Z[t1, t2, ...] itself and is used for t-only coefficients.
"""

from __future__ import annotations

import heapq
from functools import lru_cache

F = 16                   # bits per exponent field
FIELD = (1 << F) - 1
DEG_LIMIT = 1 << 15      # per-operand total-degree bound; keeps field sums < 2**16

__all__ = [
    "Poly",
    "ArityMismatch",
    "NotDivisible",
    "NotShiftInvariant",
    "DegreeOverflow",
    "to_difference_basis",
    "from_difference_basis",
    "poly_to_obj",
    "poly_from_obj",
]


class ArityMismatch(ValueError):
    """Combined two polynomials with different numbers of x-variables."""


class NotDivisible(ArithmeticError):
    """exact_div was asked for a quotient that does not exist in the ring."""


class NotShiftInvariant(ValueError):
    """The polynomial is not invariant under t_i -> t_i + c, so it has no
    expression in the difference variables."""

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class DegreeOverflow(OverflowError):
    """Total degree exceeded the packed-field safety bound."""


@lru_cache(maxsize=None)
def _high_bits(nfields):
    h = 0
    for i in range(nfields):
        h |= 1 << (F * i + F - 1)
    return h


class Poly:
    """Immutable sparse polynomial.  Do not mutate `terms` from outside."""

    __slots__ = ("nx", "tw", "terms")

    def __init__(self, nx, tw=0, terms=None):
        self.nx = nx
        self.tw = tw
        self.terms = {} if terms is None else terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nx=0):
        return cls(nx)

    @classmethod
    def const(cls, c, nx=0):
        if c == 0:
            return cls(nx)
        return cls(nx, 0, {0: c})

    @classmethod
    def one(cls, nx=0):
        return cls.const(1, nx)

    @classmethod
    def x(cls, i, nx):
        """The variable x_i (1-based, 1 <= i <= nx)."""
        if not 1 <= i <= nx:
            raise ArityMismatch(f"x{i} does not exist at arity {nx}")
        key = (1 << (F * nx)) | (1 << (F * (nx - i)))
        return cls(nx, 0, {key: 1})

    @classmethod
    def t(cls, j, nx=0):
        """The parameter t_j (1-based, any positive index)."""
        if j < 1:
            raise ValueError(f"t-index must be positive, got {j}")
        key = (1 << (F * (nx + j))) | 1
        return cls(nx, j, {key: 1})

    # -- representation helpers ---------------------------------------

    def _aligned(self, other):
        """Common t-width: returns (tw, terms_self, terms_other)."""
        if self.nx != other.nx:
            raise ArityMismatch(f"x-arity mismatch: {self.nx} vs {other.nx}")
        tw, ow = self.tw, other.tw
        if tw == ow:
            return tw, self.terms, other.terms
        if tw < ow:
            sh = F * (ow - tw)
            return ow, {k << sh: c for k, c in self.terms.items()}, other.terms
        sh = F * (tw - ow)
        return tw, self.terms, {k << sh: c for k, c in other.terms.items()}

    def _unpack(self, key):
        """Split a packed key into (x-exponent tuple, sparse t-exponent map)."""
        te = {}
        for j in range(self.tw, 0, -1):
            e = key & FIELD
            if e:
                te[j] = e
            key >>= F
        xe = [0] * self.nx
        for i in range(self.nx, 0, -1):
            xe[i - 1] = key & FIELD
            key >>= F
        return tuple(xe), te

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def num_terms(self):
        return len(self.terms)

    def total_degree(self):
        """Largest total degree among terms; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(self.terms) >> (F * (self.nx + self.tw))

    def max_t_index(self):
        """Largest t-index actually present (0 if none)."""
        if not self.terms:
            return 0
        g = 0
        for k in self.terms:
            g |= k
        w = self.tw
        while w and g & FIELD == 0:
            g >>= F
            w -= 1
        return w

    def iter_terms(self):
        """Yield (x_exponents, t_exponents, coefficient) in canonical order:
        graded lexicographic, largest first."""
        for k in sorted(self.terms, reverse=True):
            xe, te = self._unpack(k)
            yield xe, te, self.terms[k]

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.nx)
        elif not isinstance(other, Poly):
            return NotImplemented
        if self.nx != other.nx:
            return False
        _, a, b = self._aligned(other)
        return a == b

    __hash__ = None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.nx)
        elif not isinstance(other, Poly):
            return NotImplemented
        tw, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        get = out.get
        for k, c in b.items():
            v = get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Poly(self.nx, tw, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nx, self.tw, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly(self.nx)
            if other == 1:
                return self
            return Poly(self.nx, self.tw, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        tw, a, b = self._aligned(other)
        if not a or not b:
            return Poly(self.nx)
        shift = F * (self.nx + tw)
        if (max(a) >> shift) + (max(b) >> shift) >= DEG_LIMIT:
            raise DegreeOverflow("product degree exceeds the packed monomial bound")
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                v = get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly(self.nx, tw, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.nx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    @classmethod
    def sum_of_products(cls, pairs):
        """Sum of scaled products c * p * q, accumulated in a single pass
        without materializing the intermediate products; the workhorse of
        determinant expansion.  `pairs` is an iterable of (c, p, q) with
        integer c."""
        pairs = list(pairs)
        if not pairs:
            raise ValueError("empty sum")
        nx = pairs[0][1].nx
        tw = 0
        for _, p, q in pairs:
            if p.nx != nx or q.nx != nx:
                raise ArityMismatch("mixed arities in sum_of_products")
            tw = max(tw, p.tw, q.tw)
        shift = F * (nx + tw)
        out = {}
        get = out.get
        for c, p, q in pairs:
            if not p.terms or not q.terms or c == 0:
                continue
            a = p.terms if p.tw == tw else {k << (F * (tw - p.tw)): v
                                            for k, v in p.terms.items()}
            b = q.terms if q.tw == tw else {k << (F * (tw - q.tw)): v
                                            for k, v in q.terms.items()}
            if (max(a) >> shift) + (max(b) >> shift) >= DEG_LIMIT:
                raise DegreeOverflow("product degree exceeds the packed monomial bound")
            if len(a) < len(b):
                a, b = b, a
            for k2, c2 in b.items():
                cc = c * c2
                for k1, c1 in a.items():
                    k = k1 + k2
                    v = get(k, 0) + c1 * cc
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return cls(nx, tw, out)

    def exact_div(self, d):
        """Exact quotient self / d in the polynomial ring.

        Runs ordinary leading-term division under the canonical graded
        lexicographic order; the loop draining the remainder to zero is
        itself the verification that d divides exactly.  Raises
        NotDivisible otherwise and ZeroDivisionError for d = 0.
        """
        if isinstance(d, int):
            d = Poly.const(d, self.nx)
        if d.is_zero():
            raise ZeroDivisionError("exact_div by the zero polynomial")
        tw, r, dterms = self._aligned(d)
        r = dict(r)
        high = _high_bits(1 + self.nx + tw)
        ltd = max(dterms)
        cd = dterms[ltd]
        tail = [(k, c) for k, c in dterms.items() if k != ltd]
        quotient = {}
        heap = [-k for k in r]
        heapq.heapify(heap)
        push, pop = heapq.heappush, heapq.heappop
        while heap:
            k = -pop(heap)
            c = r.get(k)
            if c is None:
                continue
            qk = k - ltd
            if qk < 0 or qk & high:
                raise NotDivisible("leading term not divisible")
            qc, rem = divmod(c, cd)
            if rem:
                raise NotDivisible("leading coefficient not divisible")
            quotient[qk] = qc
            del r[k]
            for dk, dc in tail:
                nk = qk + dk
                v = r.get(nk)
                if v is None:
                    r[nk] = -qc * dc
                    push(heap, -nk)
                else:
                    v -= qc * dc
                    if v:
                        r[nk] = v
                    else:
                        del r[nk]
        if r:
            raise NotDivisible("nonzero remainder")
        return Poly(self.nx, tw, quotient)

    # -- structural operations -------------------------------------------

    def kill_t_above(self, m):
        """Drop every term containing t_i with i > m (m >= 0; m = 0 kills
        all t-content)."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        if self.tw <= m:
            return self
        cut = F * (self.tw - m)
        mask = (1 << cut) - 1
        out = {k >> cut: c for k, c in self.terms.items() if k & mask == 0}
        return Poly(self.nx, m, out)

    def coefficient_of_x(self, xe):
        """The t-only (arity 0) coefficient of the x-monomial with exponent
        tuple xe."""
        if len(xe) != self.nx:
            raise ArityMismatch(f"expected {self.nx} x-exponents, got {len(xe)}")
        target = 0
        for e in xe:
            target = (target << F) | e
        dsub = sum(xe)
        tw = self.tw
        xshift = F * tw
        xmask = (1 << (F * self.nx)) - 1
        tmask = (1 << (F * tw)) - 1
        out = {}
        for k, c in self.terms.items():
            if (k >> xshift) & xmask == target:
                deg = (k >> (F * (self.nx + tw))) - dsub
                out[(deg << (F * tw)) | (k & tmask)] = c
        return Poly(0, tw, out)

    def leading_x(self):
        """Lexicographically largest x-exponent tuple present, or None."""
        if not self.terms:
            return None
        sh = F * self.tw
        xmask = (1 << (F * self.nx)) - 1
        best = max((k >> sh) & xmask for k in self.terms)
        xe = [0] * self.nx
        for i in range(self.nx - 1, -1, -1):
            xe[i] = best & FIELD
            best >>= F
        return tuple(xe)

    def swap_x(self, i, j):
        """Exchange the variables x_i and x_j (1-based)."""
        nx, tw = self.nx, self.tw
        if not (1 <= i <= nx and 1 <= j <= nx):
            raise ArityMismatch(f"cannot swap x{i}, x{j} at arity {nx}")
        if i == j:
            return self
        pi = F * (tw + nx - i)
        pj = F * (tw + nx - j)
        out = {}
        for k, c in self.terms.items():
            vi = (k >> pi) & FIELD
            vj = (k >> pj) & FIELD
            if vi != vj:
                k += (vj - vi) << pi
                k += (vi - vj) << pj
            out[k] = c
        return Poly(nx, tw, out)

    def is_symmetric(self):
        """Invariance under all adjacent transpositions of the x-variables
        (these generate the full symmetric group)."""
        for i in range(1, self.nx):
            if self.swap_x(i, i + 1) != self:
                return False
        return True

    def as_arity(self, nx):
        """Reinterpret a t-only polynomial at a larger x-arity."""
        if nx == self.nx:
            return self
        if self.nx != 0:
            raise ArityMismatch("only arity-0 polynomials can be lifted")
        tw = self.tw
        tmask = (1 << (F * tw)) - 1
        # keep degree and t fields, insert nx zero x-fields between them
        out = {((k >> (F * tw)) << (F * (nx + tw))) | (k & tmask): c
               for k, c in self.terms.items()}
        return Poly(nx, tw, out)

    def t_only(self):
        """Drop to arity 0; the polynomial must not involve any x-variable."""
        if self.nx == 0:
            return self
        sh = F * self.tw
        xmask = (1 << (F * self.nx)) - 1
        tmask = (1 << (F * self.tw)) - 1
        out = {}
        for k, c in self.terms.items():
            if (k >> sh) & xmask:
                raise ArityMismatch("polynomial involves x-variables")
            out[((k >> (F * (self.nx + self.tw))) << sh) | (k & tmask)] = c
        return Poly(0, self.tw, out)

    def evaluate(self, x_values=(), t_values=()):
        """Exact integer evaluation; t_values[j-1] is substituted for t_j."""
        if len(x_values) != self.nx:
            raise ArityMismatch(f"expected {self.nx} x-values")
        total = 0
        for xe, te, c in self.iter_terms():
            v = c
            for i, e in enumerate(xe):
                if e:
                    v *= x_values[i] ** e
            for j, e in te.items():
                if j > len(t_values):
                    raise ValueError(f"no value supplied for t{j}")
                v *= t_values[j - 1] ** e
            total += v
        return total

    # -- display ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for xe, te, c in self.iter_terms():
            factors = []
            for i, e in enumerate(xe, 1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e:
                    factors.append(f"x{i}^{e}")
            for j in sorted(te):
                e = te[j]
                factors.append(f"t{j}" if e == 1 else f"t{j}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if body and mag == 1:
                text = body
            elif body:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            if not chunks:
                chunks.append(text if c > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Poly[{self.nx}]({self})"


def _pack(nx, tw, xe, te):
    key = sum(xe) + sum(te.values())
    for e in xe:
        key = (key << F) | e
    for j in range(1, tw + 1):
        key = (key << F) | te.get(j, 0)
    return key


def to_difference_basis(p, m):
    """Rewrite a t-only polynomial in the differences u_i = t_i - t_{i+1}.

    Substitutes t_i -> u_i + u_{i+1} + ... + u_{m-1} + t_m and expands;
    this succeeds exactly when no t_m survives, i.e. when p is invariant
    under the simultaneous shift t_i -> t_i + c of all m parameters.  The
    result is returned as an arity-0 polynomial whose t-slots are read as
    u_1, ..., u_{m-1}.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    p = p.t_only()
    if p.max_t_index() > m:
        raise ValueError(f"polynomial involves t-indices beyond t{m}")
    # slot j < m carries u_j, slot m carries the residual t_m
    images = {}
    for i in range(1, m + 1):
        img = Poly.t(m)
        for j in range(i, m):
            img = img + Poly.t(j)
        images[i] = img
    powers = {}
    result = Poly.zero(0)
    for _, te, c in p.iter_terms():
        term = Poly.const(c)
        for j, e in te.items():
            key = (j, e)
            pw = powers.get(key)
            if pw is None:
                pw = images[j] ** e
                powers[key] = pw
            term = term * pw
        result = result + term
    if result.tw >= m:
        pos = F * (result.tw - m)
        bad = {k: c for k, c in result.terms.items() if (k >> pos) & FIELD}
        if bad:
            offender = Poly(0, result.tw, {max(bad): bad[max(bad)]})
            raise NotShiftInvariant(
                "polynomial is not invariant under a simultaneous t-shift",
                offender=_difference_str(offender, m),
            )
    return result.kill_t_above(m - 1)


def from_difference_basis(q, m):
    """Substitute u_i = t_i - t_{i+1} back into a difference-basis
    polynomial; inverse of to_difference_basis on its image."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    q = q.t_only()
    if q.max_t_index() > m - 1:
        raise ValueError(f"difference-basis polynomial may only use u1..u{m - 1}")
    result = Poly.zero(0)
    powers = {}
    for _, te, c in q.iter_terms():
        term = Poly.const(c)
        for j, e in te.items():
            key = (j, e)
            pw = powers.get(key)
            if pw is None:
                pw = (Poly.t(j) - Poly.t(j + 1)) ** e
                powers[key] = pw
            term = term * pw
        result = result + term
    return result


def _difference_str(p, m):
    """Render an arity-0 polynomial whose slots j < m mean u_j and slot m
    means t_m."""
    if not p.terms:
        return "0"
    chunks = []
    for _, te, c in p.iter_terms():
        factors = []
        for j in sorted(te):
            e = te[j]
            name = f"t{m}" if j == m else f"u{j}"
            factors.append(name if e == 1 else f"{name}^{e}")
        body = "*".join(factors)
        mag = abs(c)
        text = body if body and mag == 1 else (f"{mag}*{body}" if body else str(mag))
        if not chunks:
            chunks.append(text if c > 0 else f"-{text}")
        else:
            chunks.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(chunks)


def poly_to_obj(p):
    """Canonical JSON form: a list of term objects in canonical order, the
    coefficient as a decimal string."""
    out = []
    for xe, te, c in p.iter_terms():
        out.append({
            "x": list(xe),
            "t": {str(j): te[j] for j in sorted(te)},
            "c": str(c),
        })
    return out


def poly_from_obj(obj, nx=None):
    """Inverse of poly_to_obj.  The arity is read off the term data and may
    be pinned (required for the zero polynomial)."""
    terms = {}
    tw = 0
    parsed = []
    for item in obj:
        xe = tuple(int(e) for e in item["x"])
        if nx is None:
            nx = len(xe)
        elif len(xe) != nx:
            raise ArityMismatch("inconsistent x-arity in serialized terms")
        te = {int(j): int(e) for j, e in item["t"].items()}
        if any(j < 1 for j in te) or any(e <= 0 for e in te.values()) or any(e < 0 for e in xe):
            raise ValueError("invalid exponent in serialized term")
        c = int(item["c"])
        parsed.append((xe, te, c))
        if te:
            tw = max(tw, max(te))
    if nx is None:
        raise ValueError("cannot infer arity from an empty term list")
    for xe, te, c in parsed:
        if c == 0:
            continue
        key = _pack(nx, tw, xe, te)
        v = terms.get(key, 0) + c
        if v:
            terms[key] = v
        elif key in terms:
            del terms[key]
    return Poly(nx, tw, terms)

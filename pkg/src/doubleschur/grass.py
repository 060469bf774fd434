"""The truncated ring of symmetric polynomials attached to a Grassmannian.

Fixing 1 <= n <= m, the symmetric polynomials in x1..xn over Z[t1, t2, ...]
are truncated by the ideal spanned (as a module) by the parameters beyond
t_m together with the double Schur basis elements whose partitions stick
out of the n x (m-n) box.  The classes of the in-box double Schur
polynomials form a basis of the quotient, multiply with the equivariant
Schubert structure constants, and every structure constant is certified
Graham-positive: a nonnegative integer combination of monomials in the
differences t_i - t_{i+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .poly import Poly, NotShiftInvariant, to_difference_basis, poly_to_obj
from .schur import (
    SchurExpansion,
    double_schur,
    expand_in_double_schur,
    partition,
    pieri_multiply,
)

__all__ = [
    "GrassContext",
    "SizeGuardExceeded",
    "truncate",
    "schubert_product",
    "PositivityReport",
    "check_graham_positivity",
    "certificate_to_obj",
    "sigma1_power_expansion",
    "StructureTable",
    "full_structure_table",
    "TABLE_GUARD",
]

TABLE_GUARD = 256


class SizeGuardExceeded(RuntimeError):
    """A batch computation was refused because it exceeds the desk-scale
    resource guard."""


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian of n-dimensional subspaces of m-dimensional space."""

    n: int
    m: int

    def __post_init__(self):
        if not 1 <= self.n <= self.m:
            raise ValueError(f"need 1 <= n <= m, got n={self.n}, m={self.m}")

    @property
    def cols(self):
        return self.m - self.n

    def in_box(self, lam):
        lam = partition(lam)
        return len(lam) <= self.n and (not lam or lam[0] <= self.cols)

    def box_partitions(self):
        """All partitions in the n x (m-n) box, lexicographically sorted."""
        out = []

        def grow(prefix, cap, rows):
            out.append(tuple(prefix))
            if rows == 0:
                return
            for part in range(1, cap + 1):
                prefix.append(part)
                grow(prefix, part, rows - 1)
                prefix.pop()

        grow([], self.cols, self.n)
        seen = sorted(set(out))
        return seen


def truncate(expansion, ctx):
    """Image of a SchurExpansion in the truncated ring: drop partitions that
    leave the box, kill t-parameters beyond t_m.  Idempotent."""
    if expansion.n != ctx.n:
        raise ValueError(f"expansion arity {expansion.n} does not match n={ctx.n}")
    out = {}
    for lam, c in expansion.coeffs.items():
        if lam and lam[0] > ctx.cols:
            continue
        ck = c.kill_t_above(ctx.m)
        if ck:
            out[lam] = ck
    return SchurExpansion(ctx.n, out)


def schubert_product(lam, mu, ctx):
    """Structure constants of the product of two Schubert classes: multiply
    the double Schur polynomials, expand in the double Schur basis and
    truncate.  The coefficients are the equivariant structure constants."""
    lam, mu = partition(lam), partition(mu)
    for p in (lam, mu):
        if not ctx.in_box(p):
            raise ValueError(f"partition {p} does not fit the {ctx.n} x {ctx.cols} box")
    prod = double_schur(lam, ctx.n) * double_schur(mu, ctx.n)
    return truncate(expand_in_double_schur(prod, ctx.n), ctx)


@dataclass
class PositivityReport:
    """Outcome of a Graham-positivity check.  When positive, `certificate`
    holds the expansion in the difference variables u_i = t_i - t_{i+1}
    (all coefficients nonnegative integers) and `differences_used` lists
    which u_i actually occur."""

    positive: bool
    certificate: Poly | None = None
    differences_used: tuple = ()
    reason: str | None = None
    offender: str | None = None

    def to_obj(self):
        obj = {"positive": self.positive}
        if self.positive:
            obj["certificate"] = certificate_to_obj(self.certificate)
            obj["differences_used"] = list(self.differences_used)
        else:
            obj["certificate"] = None
            obj["reason"] = self.reason
            obj["offender"] = self.offender
        return obj

    def annotate(self, product_obj):
        """Attach this report to a serialized product entry: `certificate`
        holds the u-expansion itself, remaining fields ride alongside."""
        if self.positive:
            product_obj["certificate"] = certificate_to_obj(self.certificate)
            product_obj["positive"] = True
            product_obj["differences_used"] = list(self.differences_used)
        else:
            product_obj["certificate"] = None
            product_obj["positive"] = False
            product_obj["violation"] = {"reason": self.reason,
                                        "offender": self.offender}
        return product_obj


def certificate_to_obj(cert):
    """Canonical JSON form of a difference-basis expansion: term list with
    sparse u-exponent maps."""
    out = []
    for _, te, c in cert.iter_terms():
        out.append({"u": {str(j): te[j] for j in sorted(te)}, "c": str(c)})
    return out


def u_str(cert):
    """Human-readable difference-basis polynomial, slots rendered as u_j."""
    text = str(cert)
    return text.replace("t", "u")


def check_graham_positivity(c, ctx):
    """Certify that a structure constant lies in the nonnegative span of
    monomials in t_1-t_2, ..., t_{m-1}-t_m, or report the violation."""
    c = c.t_only()
    if c.max_t_index() > ctx.m:
        raise ValueError(f"coefficient involves t-indices beyond t{ctx.m}")
    try:
        cert = to_difference_basis(c, ctx.m)
    except NotShiftInvariant as exc:
        return PositivityReport(False, reason="not shift-invariant",
                                offender=exc.offender)
    used = set()
    for _, te, coeff in cert.iter_terms():
        if coeff < 0:
            mono = {str(j): te[j] for j in sorted(te)}
            return PositivityReport(
                False, reason="negative coefficient",
                offender=f"{coeff} on u-monomial {mono}")
        used.update(te)
    return PositivityReport(True, cert, tuple(sorted(used)))


def sigma1_power_expansion(k, ctx):
    """Expansion of (x1 + ... + xn)^k in the truncated ring, computed by
    iterating the Pieri rule and truncating.  The coefficients in top
    degree |lam| = k are plain integers (standard tableau counts)."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    acc = SchurExpansion(ctx.n, {(): Poly.one()})
    for _ in range(k):
        nxt = {}
        for lam, c in acc.coeffs.items():
            for mu, d in pieri_multiply(lam, ctx.n).coeffs.items():
                prev = nxt.get(mu)
                nxt[mu] = c * d if prev is None else prev + c * d
        acc = truncate(SchurExpansion(ctx.n, nxt), ctx)
    return acc


@dataclass
class StructureTable:
    """All pairwise Schubert products of a context, with certificates."""

    context: GrassContext
    entries: dict = field(default_factory=dict)
    # entries: (lam, mu) -> {nu: (coefficient, PositivityReport)}

    @property
    def all_positive(self):
        return all(report.positive
                   for products in self.entries.values()
                   for _, report in products.values())

    def to_obj(self):
        items = []
        for (lam, mu) in sorted(self.entries):
            products = self.entries[(lam, mu)]
            items.append({
                "lambda": list(lam),
                "mu": list(mu),
                "products": [
                    products[nu][1].annotate(
                        {"nu": list(nu), "coeff": poly_to_obj(products[nu][0])})
                    for nu in sorted(products)
                ],
            })
        return {"n": self.context.n, "m": self.context.m, "entries": items}


def full_structure_table(ctx):
    """Every product of box partitions, each coefficient carrying its
    positivity certificate.  Refused above the desk-scale guard."""
    rank = math.comb(ctx.m, ctx.n)
    if rank > TABLE_GUARD:
        raise SizeGuardExceeded(
            f"basis rank C({ctx.m},{ctx.n}) = {rank} exceeds the table guard "
            f"of {TABLE_GUARD}")
    box = ctx.box_partitions()
    entries = {}
    for lam in box:
        for mu in box:
            prod = schubert_product(lam, mu, ctx)
            entries[(lam, mu)] = {
                nu: (c, check_graham_positivity(c, ctx))
                for nu, c in prod.items()
            }
    return StructureTable(ctx, entries)

"""Property suites runnable from the CLI and reused by the test suite.

Each suite returns a machine-readable report dict with an `ok` flag and a
list of failures (first counterexample data included); suites never raise
on a mathematical failure, only on usage errors.
"""

from __future__ import annotations

from .grass import (
    GrassContext,
    full_structure_table,
    schubert_product,
    sigma1_power_expansion,
)
from .oracles import lr_coefficient, syt_count
from .schur import (
    double_schur,
    expand_in_double_schur,
    pieri_multiply,
    x_sum,
)

__all__ = ["SUITES", "run_suite", "verify_pieri", "verify_positivity",
           "verify_specialize", "verify_intertwine", "verify_syt"]


def _report(suite, n, m, cases, failures, **extra):
    rep = {"suite": suite, "n": n, "m": m, "cases": cases,
           "failures": failures, "ok": not failures}
    rep.update(extra)
    return rep


def verify_pieri(n, m):
    """Pieri rule against the independent expand-and-compare route, for
    every partition in the n x (m-n) box."""
    ctx = GrassContext(n, m)
    failures = []
    cases = 0
    sx = x_sum(n)
    for lam in ctx.box_partitions():
        cases += 1
        expected = pieri_multiply(lam, n)
        got = expand_in_double_schur(sx * double_schur(lam, n), n)
        if got != expected:
            failures.append({
                "lambda": list(lam),
                "pieri": expected.to_obj(),
                "expansion": got.to_obj(),
            })
    return _report("pieri", n, m, cases, failures)


def verify_positivity(n, m):
    """Graham positivity of every structure constant of the context, with
    the certificates included in the report."""
    ctx = GrassContext(n, m)
    table = full_structure_table(ctx)
    failures = []
    certificates = []
    cases = 0
    for (lam, mu) in sorted(table.entries):
        for nu in sorted(table.entries[(lam, mu)]):
            coeff, report = table.entries[(lam, mu)][nu]
            cases += 1
            record = {"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                      "certificate": report.to_obj()}
            certificates.append(record)
            if not report.positive:
                failures.append(record)
    return _report("positivity", n, m, cases, failures,
                   certificates=certificates)


def verify_specialize(n, m):
    """Setting every t to zero turns the structure constants into classical
    Littlewood-Richardson coefficients."""
    ctx = GrassContext(n, m)
    box = ctx.box_partitions()
    failures = []
    cases = 0
    for lam in box:
        for mu in box:
            cases += 1
            prod = schubert_product(lam, mu, ctx)
            got = {}
            for nu, c in prod.items():
                c0 = c.kill_t_above(0)
                if c0:
                    got[nu] = c0.evaluate((), ())
            expected = {}
            for nu in box:
                if sum(nu) != sum(lam) + sum(mu):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    expected[nu] = c
            if got != expected:
                failures.append({
                    "lambda": list(lam), "mu": list(mu),
                    "got": {str(k): v for k, v in sorted(got.items())},
                    "expected": {str(k): v for k, v in sorted(expected.items())},
                })
    return _report("specialize", n, m, cases, failures)


def verify_intertwine(n, m):
    """Wedge-side action of each double-monomial multiplication operator
    against polynomial-side multiplication, on every basis class."""
    from .schur import SchurExpansion
    from .wedge import PathDisagreement, StandardVector, centralizer_action

    ctx = GrassContext(n, m)
    failures = []
    cases = 0
    for k in range(m):
        f = StandardVector.basis(k, m)
        for lam in ctx.box_partitions():
            cases += 1
            try:
                centralizer_action(f, SchurExpansion.unit(lam, n), ctx)
            except PathDisagreement as exc:
                failures.append({"k": k, "lambda": list(lam), "error": str(exc)})
    return _report("intertwine", n, m, cases, failures)


def verify_syt(n, m, kmax=6):
    """Top-degree coefficients of the k-th power of x1+...+xn are the
    standard tableau counts, for k up to kmax."""
    ctx = GrassContext(n, m)
    failures = []
    cases = 0
    for k in range(kmax + 1):
        expansion = sigma1_power_expansion(k, ctx)
        got = {}
        bad_coeff = None
        for lam, c in expansion.items():
            if sum(lam) == k:
                if c.max_t_index() != 0:
                    bad_coeff = {"lambda": list(lam), "coeff": str(c)}
                    break
                got[lam] = c.evaluate((), ())
        expected = {lam: syt_count(lam) for lam in ctx.box_partitions()
                    if sum(lam) == k}
        cases += 1
        if bad_coeff is not None:
            failures.append({"k": k, "non-integer top coefficient": bad_coeff})
        elif got != expected:
            failures.append({
                "k": k,
                "got": {str(k_): v for k_, v in sorted(got.items())},
                "expected": {str(k_): v for k_, v in sorted(expected.items())},
            })
    return _report("syt", n, m, cases, failures, kmax=kmax)


SUITES = {
    "pieri": verify_pieri,
    "positivity": verify_positivity,
    "specialize": verify_specialize,
    "intertwine": verify_intertwine,
    "syt": verify_syt,
}


def run_suite(name, n, m):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](n, m)

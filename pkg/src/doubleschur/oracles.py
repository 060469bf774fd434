"""Brute-force combinatorial oracles.

Deliberately naive and fully independent of the polynomial machinery:
classical Schur polynomials as sums over semistandard tableaux,
Littlewood-Richardson coefficients by skew-tableau enumeration, and
standard-tableau counts by the hook length formula cross-checked against
exhaustive enumeration.  Used by tests to pin down expected values.
"""

from __future__ import annotations

import math

from .poly import Poly
from .schur import partition

__all__ = [
    "classical_schur_ssyt",
    "lr_coefficient",
    "syt_count",
    "syt_count_hook",
    "enumerate_syt",
    "LR_ENUMERATION_LIMIT",
    "SYT_ENUMERATION_LIMIT",
]

LR_ENUMERATION_LIMIT = 10
SYT_ENUMERATION_LIMIT = 12


def _ssyt_fillings(shape, n):
    """Yield semistandard fillings (rows weakly increase, columns strictly
    increase, entries 1..n) as row tuples."""
    def rows(r, above):
        if r == len(shape):
            yield ()
            return
        width = shape[r]

        def cells(c, prev_row):
            if c == width:
                yield ()
                return
            low = prev_row[-1] if prev_row else 1
            if above is not None and c < len(above):
                low = max(low, above[c] + 1)
            for v in range(low, n + 1):
                for rest in cells(c + 1, prev_row + (v,)):
                    yield (v,) + rest

        for row in cells(0, ()):
            for rest in rows(r + 1, row):
                yield (row,) + rest

    yield from rows(0, None)


def classical_schur_ssyt(lam, n):
    """The classical Schur polynomial in x1..xn as the generating function
    of semistandard tableaux of shape lam with entries at most n."""
    lam = partition(lam)
    if n < 1:
        raise ValueError("need at least one variable")
    if len(lam) > n:
        return Poly.zero(n)
    counts = {}
    for filling in _ssyt_fillings(lam, n):
        content = [0] * n
        for row in filling:
            for v in row:
                content[v - 1] += 1
        key = tuple(content)
        counts[key] = counts.get(key, 0) + 1
    acc = Poly.zero(n)
    for content, mult in counts.items():
        mono = Poly.const(mult, n)
        for i, e in enumerate(content, 1):
            if e:
                mono = mono * Poly.x(i, n) ** e
        acc = acc + mono
    return acc


def lr_coefficient(lam, mu, nu):
    """Number of Littlewood-Richardson skew tableaux of shape nu/lam and
    content mu: semistandard fillings of the skew diagram whose reverse
    reading word is a ballot sequence.  Returns 0 when the size or
    containment preconditions fail."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(nu) > LR_ENUMERATION_LIMIT:
        raise ValueError(
            f"|nu| = {sum(nu)} exceeds the enumeration guard of "
            f"{LR_ENUMERATION_LIMIT}")
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    inner = lam + (0,) * (len(nu) - len(lam))
    # cells in reverse reading order: rows top to bottom, right to left,
    # so the ballot condition can be enforced as values are placed
    cells = [(r, c) for r in range(len(nu))
             for c in range(nu[r] - 1, inner[r] - 1, -1)]
    k = len(mu)
    grid = {}
    counts = [0] * (k + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, k + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # ballot: every prefix has #v <= #(v-1)
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue  # row weakly increasing left to right
            if r > 0 and c >= inner[r - 1]:
                up = grid.get((r - 1, c))
                if up is not None and v <= up:
                    continue  # column strictly increasing downward
            grid[(r, c)] = v
            counts[v] += 1
            total += place(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]
        return total

    return place(0)


def _hooks(lam):
    conj = [0] * (lam[0] if lam else 0)
    for part in lam:
        for c in range(part):
            conj[c] += 1
    for r, part in enumerate(lam):
        for c in range(part):
            yield (part - c) + (conj[c] - r) - 1


def syt_count_hook(lam):
    """Standard tableau count by the hook length formula."""
    lam = partition(lam)
    size = sum(lam)
    denom = 1
    for h in _hooks(lam):
        denom *= h
    count, rem = divmod(math.factorial(size), denom)
    assert rem == 0
    return count


def enumerate_syt(lam):
    """Yield every standard tableau of shape lam as a tuple of row tuples,
    built by placing 1..|lam| at addable corners."""
    lam = partition(lam)
    size = sum(lam)
    rows = [[] for _ in lam]

    def extend(value):
        if value > size:
            yield tuple(tuple(row) for row in rows)
            return
        for r, part in enumerate(lam):
            filled = len(rows[r])
            if filled >= part:
                continue
            if r > 0 and len(rows[r - 1]) <= filled:
                continue
            rows[r].append(value)
            yield from extend(value + 1)
            rows[r].pop()

    yield from extend(1)


def syt_count(lam):
    """Number of standard tableaux of shape lam, computed by the hook
    length formula; exhaustively cross-checked for small shapes."""
    lam = partition(lam)
    count = syt_count_hook(lam)
    if sum(lam) <= SYT_ENUMERATION_LIMIT:
        assert count == sum(1 for _ in enumerate_syt(lam)), \
            f"hook formula disagrees with enumeration for {lam}"
    return count

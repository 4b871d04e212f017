"""Smith normal form of integer matrices with exact arithmetic.

The public entry points accept either a dense list-of-rows matrix or a
sparse mapping and return the full invariant-factor chain together with
the rank.  All arithmetic is exact; no floating point is involved.

The computation runs in three stages, each with a totally ordered pivot
rule so results are deterministic:

1. Sparse elimination over entries of absolute value 1, chosen by least
   Markowitz fill cost.  A unit pivot always contributes invariant
   factor 1 and the row/column clearing is exact, so this stage causes
   no coefficient growth at all.
2. Fraction-free (Bareiss) elimination of the small dense residual.
   Every intermediate value is a true minor of the residual, which
   bounds coefficient size and yields the rank r plus the determinant D
   of a nonsingular r x r minor.
3. Modulo-D elimination of the residual.  Because every invariant
   factor divides D, rows D*e_j may be adjoined for each residual
   column without changing the torsion, which licenses reducing every
   entry into the balanced range (-D/2, D/2].  Extracted pivots v give
   factors gcd(v, D); columns exhausted mod D give factor D, and the
   copies of D introduced by the adjoined rows (exactly cols - r of
   them) are removed at the end.

Stage 1 handles the bulk of the large, very sparse relator matrices
produced by subgroup rewriting; stages 2 and 3 keep the dense core
exact without the exponential entry blow-up of plain Euclidean
elimination.
"""

from __future__ import annotations

import heapq
from math import gcd

SparseRows = dict[int, dict[int, int]]


def smith_normal_form(matrix: list[list[int]]) -> tuple[list[int], int]:
    """Invariant factors (divisibility chain, including 1s) and rank.

    >>> smith_normal_form([[2, 0], [0, 3]])
    ([1, 6], 2)
    >>> smith_normal_form([[0, 0], [0, 0]])
    ([], 0)
    """
    rows: SparseRows = {}
    for i, row in enumerate(matrix):
        entries = {j: v for j, v in enumerate(row) if v}
        if entries:
            rows[i] = entries
    return smith_normal_form_sparse(rows)


def smith_normal_form_sparse(rows: SparseRows) -> tuple[list[int], int]:
    """Smith normal form of a sparse integer matrix.

    ``rows`` maps row index to {column index: nonzero value}.  Rows and
    columns absent from the mapping are zero.  Returns the invariant
    factors as a divisibility chain (1s included) and the rank.
    """
    work = {i: dict(r) for i, r in rows.items() if r}
    units = _unit_stage(work)
    dense, ncols = _densify(work)
    rank_rest, det = _bareiss_rank_det([row[:] for row in dense])
    factors = [1] * units
    if rank_rest:
        factors.extend(_mod_det_factors(dense, ncols, rank_rest, det))
    return _divisibility_chain(factors), units + rank_rest


def _unit_stage(rows: SparseRows) -> int:
    """Eliminate at +-1 entries in place; return the pivot count.

    Pivot choice: least Markowitz cost (len(row)-1)*(len(col)-1), ties
    by (row, column) index.  Candidates live in a lazily validated
    heap; stale entries are discarded on pop.
    """
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    heap: list[tuple[int, int, int]] = []

    def push(i: int, j: int) -> None:
        cost = (len(rows[i]) - 1) * (len(cols[j]) - 1)
        heapq.heappush(heap, (cost, i, j))

    for i, r in rows.items():
        for j, v in r.items():
            if abs(v) == 1:
                push(i, j)

    pivots = 0
    while heap:
        cost, pr, pc = heapq.heappop(heap)
        row = rows.get(pr)
        if row is None or abs(row.get(pc, 0)) != 1:
            continue
        if cost != (len(row) - 1) * (len(cols[pc]) - 1):
            push(pr, pc)
            continue
        v = row[pc]
        # Clear the column: exact since the pivot is a unit.
        for i in list(cols[pc]):
            if i == pr:
                continue
            q = rows[i][pc] * v  # q*v == rows[i][pc] because v*v == 1
            trow = rows[i]
            for j, s in row.items():
                new = trow.get(j, 0) - q * s
                if new:
                    if j not in trow:
                        cols[j].add(i)
                    trow[j] = new
                    if abs(new) == 1:
                        push(i, j)
                else:
                    if j in trow:
                        del trow[j]
                        cols[j].discard(i)
            if not trow:
                del rows[i]
        for j in row:
            cols[j].discard(pr)
        del rows[pr]
        del cols[pc]
        pivots += 1
    return pivots


def _densify(rows: SparseRows) -> tuple[list[list[int]], int]:
    """Pack the residual into a dense matrix over its live columns."""
    live = sorted({j for r in rows.values() for j in r})
    colmap = {j: k for k, j in enumerate(live)}
    dense = []
    for i in sorted(rows):
        row = [0] * len(live)
        for j, v in rows[i].items():
            row[colmap[j]] = v
        dense.append(row)
    return dense, len(live)


def _bareiss_rank_det(m: list[list[int]]) -> tuple[int, int]:
    """Rank and determinant of a leading nonsingular minor, in place.

    Fraction-free elimination: every intermediate entry is a minor of
    the input, so sizes stay polynomially bounded.  Pivots are chosen
    by least absolute value (ties row-major) to keep the minor small.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    rank = 0
    for k in range(min(nrows, ncols)):
        best = None
        for i in range(k, nrows):
            mi = m[i]
            for j in range(k, ncols):
                v = mi[j]
                if v:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, bi, bj = best
        if bi != k:
            m[k], m[bi] = m[bi], m[k]
        if bj != k:
            for row in m:
                row[k], row[bj] = row[bj], row[k]
        piv = m[k][k]
        mk = m[k]
        # The division by the previous pivot is exact by Sylvester's
        # identity, but only if every row is updated, zeros included.
        for i in range(k + 1, nrows):
            mi = m[i]
            f = mi[k]
            for j in range(k + 1, ncols):
                mi[j] = (piv * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = piv
        rank += 1
    return rank, abs(prev) if rank else 0


def _mod_det_factors(
    dense: list[list[int]], ncols: int, rank: int, det: int
) -> list[int]:
    """Invariant factors of the dense residual via modulo-D reduction.

    ``det`` is the determinant of a nonsingular rank x rank minor; all
    invariant factors divide it, so arithmetic is sound modulo det with
    entries kept in the balanced range.  Exactly ``ncols - rank``
    spurious factors equal to det are discarded.
    """
    d = det
    half = d // 2

    def bal(v: int) -> int:
        v %= d
        if v > half:
            v -= d
        return v

    rows: SparseRows = {}
    for i, row in enumerate(dense):
        entries = {j: bal(v) for j, v in enumerate(row)}
        entries = {j: v for j, v in entries.items() if v}
        if entries:
            rows[i] = entries
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    def row_sub(t: int, s: int, q: int) -> None:
        trow = rows[t]
        for j, v in rows[s].items():
            new = bal(trow.get(j, 0) - q * v)
            if new:
                if j not in trow:
                    cols[j].add(t)
                trow[j] = new
            elif j in trow:
                del trow[j]
                cols[j].discard(t)
        if not trow:
            del rows[t]

    factors = []
    pivot_cols = 0
    while rows:
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                key = (abs(v), i, j)
                if best is None or key < best:
                    best = key
        _, pr, pc = best
        while True:
            v = rows[pr][pc]
            moved = False
            for i in sorted(cols[pc]):
                if i == pr:
                    continue
                e = rows[i][pc]
                q = e // v
                if q:
                    row_sub(i, pr, q)
                if rows.get(i, {}).get(pc):
                    pr = i
                    moved = True
                    break
            if moved:
                continue
            prow = rows[pr]
            v = prow[pc]
            for j in sorted(prow):
                if j == pc:
                    continue
                e = prow[j]
                q = e // v
                if q:
                    new = bal(e - q * v)
                    if new:
                        prow[j] = new
                    else:
                        del prow[j]
                        cols[j].discard(pr)
                if prow.get(j):
                    pc = j
                    moved = True
                    break
            if moved:
                continue
            break
        factors.append(gcd(rows[pr][pc], d))
        for j in list(rows[pr]):
            cols[j].discard(pr)
        del rows[pr]
        pivot_cols += 1
    # Columns exhausted modulo det carry factor det from the adjoined
    # rows; cols - rank of those copies are artifacts and are dropped.
    factors.extend([d] * (ncols - pivot_cols))
    spurious = ncols - rank
    for _ in range(spurious):
        factors.remove(d)
    return factors


def _divisibility_chain(factors: list[int]) -> list[int]:
    """Normalize positive factors into a divisibility chain."""
    chain = sorted(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            if b % a:
                g = gcd(a, b)
                chain[i], chain[i + 1] = g, a * b // g
                changed = True
        chain.sort()
    return chain

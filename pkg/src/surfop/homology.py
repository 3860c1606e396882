"""Exact rational linear algebra for chain complexes: sparse rank by
fraction-free elimination, an independent dense oracle, and Betti
profiles with built-in consistency checks.

Entries are ints or Fractions.  Rows are cleared to integers before
elimination, which changes no rank, and all arithmetic stays integral
(Bareiss), so there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class SparseRationalMatrix:
    """Immutable sparse matrix: shape plus {(row, col): entry}.

    Zeros are never stored; duplicate positions in a triplet list are
    rejected rather than summed.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        self.rows = rows
        self.cols = cols
        items = entries.items() if isinstance(entries, dict) else \
            [((i, j), v) for i, j, v in entries]
        clean = {}
        for (i, j), v in items:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError("entry (%d, %d) outside %dx%d"
                                 % (i, j, rows, cols))
            if (i, j) in clean:
                raise ValueError("duplicate entry at (%d, %d)" % (i, j))
            if v:
                clean[(i, j)] = v
        self.entries = clean

    def __eq__(self, other):
        return (isinstance(other, SparseRationalMatrix)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols,
                     frozenset(self.entries.items())))

    def __repr__(self):
        return "SparseRationalMatrix(%d, %d, %d entries)" % (
            self.rows, self.cols, len(self.entries))

    def triplets(self):
        """Entries as a sorted list of (row, col, value)."""
        return [(i, j, self.entries[(i, j)])
                for i, j in sorted(self.entries)]

    def transpose(self):
        return SparseRationalMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self.entries.items()})

    def mul(self, other):
        """Matrix product self * other."""
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d times %dx%d" % (
                self.rows, self.cols, other.rows, other.cols))
        by_row = {}
        for (i, j), v in other.entries.items():
            by_row.setdefault(i, []).append((j, v))
        out = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + u * v
        return SparseRationalMatrix(
            self.rows, other.cols,
            {pos: v for pos, v in out.items() if v})

    def is_zero(self):
        return not self.entries


def _integer_rows(m):
    """Active rows as {col: int}, each row scaled by the lcm of its
    entry denominators.  Row scaling preserves rank."""
    rows = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
    out = []
    for row in rows.values():
        denom = lcm(*(Fraction(v).denominator for v in row.values()))
        out.append({j: int(v * denom) for j, v in row.items()})
    return out


def rank(m):
    """Exact rank by sparse fraction-free elimination.

    One-step Bareiss: after each elimination every entry is divided by
    the previous pivot, which is exact by Sylvester's identity, so the
    working entries stay integral and modest.  Pivots are chosen by the
    Markowitz fill score (nnz(row)-1)(nnz(col)-1), ties broken toward
    small magnitude.
    """
    rows = [r for r in _integer_rows(m) if r]
    prev = 1
    count = 0
    while rows:
        col_nnz = {}
        for r in rows:
            for j in r:
                col_nnz[j] = col_nnz.get(j, 0) + 1
        best = None
        for ri, r in enumerate(rows):
            rscore = len(r) - 1
            for j, v in r.items():
                score = (rscore * (col_nnz[j] - 1), abs(v))
                if best is None or score < best[0]:
                    best = (score, ri, j)
        _, ri, c = best
        pivot_row = rows.pop(ri)
        p = pivot_row[c]
        count += 1
        nxt = []
        for r in rows:
            f = r.pop(c, 0)
            if f:
                support = set(r)
                support.update(pivot_row)
                support.discard(c)
                for j in support:
                    num = r.get(j, 0) * p - f * pivot_row.get(j, 0)
                    q, rem = divmod(num, prev)
                    assert rem == 0, "fraction-free step left a remainder"
                    if q:
                        r[j] = q
                    else:
                        r.pop(j, None)
            else:
                # untouched rows still pick up the Bareiss rescale p/prev
                for j in list(r):
                    q, rem = divmod(r[j] * p, prev)
                    assert rem == 0, "fraction-free step left a remainder"
                    r[j] = q
            if r:
                nxt.append(r)
        rows = nxt
        prev = p
    return count


def dense_oracle(m):
    """Independent dense rank: fraction-free elimination with full
    pivoting over an explicit array.  Only for small matrices."""
    if m.rows * m.cols > 200 * 200:
        raise ValueError("dense oracle capped at 200x200 worth of cells")
    a = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for (i, j), v in m.entries.items():
        a[i][j] = Fraction(v)
    for i in range(m.rows):
        denom = lcm(*(v.denominator for v in a[i] if v), 1)
        a[i] = [int(v * denom) for v in a[i]]
    r = 0
    prev = 1
    rows, cols = list(range(m.rows)), list(range(m.cols))
    while r < len(rows) and r < len(cols):
        pick = None
        for ii in range(r, len(rows)):
            for jj in range(r, len(cols)):
                v = a[rows[ii]][cols[jj]]
                if v and (pick is None or abs(v) < pick[0]):
                    pick = (abs(v), ii, jj)
        if pick is None:
            break
        _, ii, jj = pick
        rows[r], rows[ii] = rows[ii], rows[r]
        cols[r], cols[jj] = cols[jj], cols[r]
        p = a[rows[r]][cols[r]]
        for si in range(r + 1, len(rows)):
            s, t = rows[si], rows[r]
            f = a[s][cols[r]]
            for sj in range(r + 1, len(cols)):
                jq = cols[sj]
                num = a[s][jq] * p - f * a[t][jq]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free step left a remainder"
                a[s][jq] = q
            a[s][cols[r]] = 0
        prev = p
        r += 1
    return r


class HomologyProfile:
    """Per-degree chain dimensions, boundary ranks, and Betti numbers
    of a finite complex, with the Euler identity asserted."""

    __slots__ = ("dims", "ranks", "betti")

    def __init__(self, dims, ranks):
        dims = tuple(dims)
        ranks = tuple(ranks)
        assert len(ranks) == len(dims)
        get = lambda k: ranks[k] if 0 <= k < len(ranks) else 0
        betti = tuple(dims[k] - get(k) - get(k + 1)
                      for k in range(len(dims)))
        if any(b < 0 for b in betti):
            raise AssertionError("negative Betti number: %r" % (betti,))
        chi_dims = sum((-1) ** k * d for k, d in enumerate(dims))
        chi_betti = sum((-1) ** k * b for k, b in enumerate(betti))
        if chi_dims != chi_betti:
            raise AssertionError("Euler mismatch: %d vs %d"
                                 % (chi_dims, chi_betti))
        self.dims = dims
        self.ranks = ranks
        self.betti = betti

    def __repr__(self):
        return "HomologyProfile(dims=%r, ranks=%r, betti=%r)" % (
            self.dims, self.ranks, self.betti)


def betti(matrices, dims=None, rank_fn=rank):
    """HomologyProfile of a complex given as boundary matrices,
    matrices[k-1] mapping degree k to degree k-1 for k = 1..K.

    dims gives the chain dimensions (degree 0..K); when omitted they
    are read off the matrix shapes, which needs at least one matrix.
    Consecutive products are checked to vanish first.
    """
    matrices = list(matrices)
    if dims is None:
        if not matrices:
            raise ValueError("cannot infer dimensions of an empty complex")
        dims = [matrices[0].rows] + [m.cols for m in matrices]
    dims = list(dims)
    if len(dims) != len(matrices) + 1:
        raise ValueError("need one more dimension than matrices")
    for k, m in enumerate(matrices):
        if (m.rows, m.cols) != (dims[k], dims[k + 1]):
            raise ValueError("matrix %d is %dx%d, expected %dx%d" % (
                k + 1, m.rows, m.cols, dims[k], dims[k + 1]))
    for k in range(len(matrices) - 1):
        if not matrices[k].mul(matrices[k + 1]).is_zero():
            raise ValueError(
                "boundary of boundary is nonzero between degrees "
                "%d and %d" % (k + 2, k))
    ranks = [0] + [rank_fn(m) for m in matrices]
    return HomologyProfile(dims, ranks)

"""Hive counting and enumeration: LR coefficients as lattice points.

A hive of rank n is a triangular array h[i][j] (0 <= j <= i <= n) whose border
is fixed by the partial sums of three partitions and whose entries satisfy the
three families of rhombus inequalities (sum across the short diagonal of every
unit rhombus >= sum across the long one).  Border convention:

    h[0][0] = 0
    h[i][0] = alpha_1 + ... + alpha_i          (left edge)
    h[n][j] = |alpha| + beta_1 + ... + beta_j  (bottom edge, continuing)
    h[i][i] = gamma_1 + ... + gamma_i          (right edge, ends at |gamma|)

The number of integral fillings of the (n-1)(n-2)/2 interior entries equals
the Littlewood-Richardson coefficient of the triple.  The convention is not
trusted: lr_oracle gives an independent count through the classical LR rule
on skew tableaux, and the two are compared on exhaustive sweeps.

Counting is exhaustive backtracking over interior entries in row-major order;
at each entry the rhombus inequalities whose other corners are already fixed
yield an integer interval, and an empty interval prunes the branch.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .core import Triple, Weight, ell, extend_to_un, weyl_dim
from .errors import Incompatible, NegativeShift, ResourceLimit

DEFAULT_NODE_LIMIT = 10**9

_BIG = 1 << 62

try:  # optional JIT fast path; the pure-Python counter is the reference
    import numba as _numba
    import numpy as _np
except ImportError:  # pragma: no cover
    _numba = None

_use_numba = _numba is not None and os.environ.get("HIVELAB_NO_NUMBA", "") == ""


def node_limit_default() -> int:
    env = os.environ.get("HIVELAB_NODE_LIMIT")
    return int(env) if env else DEFAULT_NODE_LIMIT


# ---------------------------------------------------------------------------
# triangle layout and the per-rank interval program


def _pos(i: int, j: int) -> int:
    return i * (i + 1) // 2 + j


@lru_cache(maxsize=None)
def _program(n: int):
    """Precompute, for rank n, the assignment order of interior entries and,
    for every rhombus inequality, the bound it induces on the entry of the
    inequality that is assigned last.

    Returns (interior, lower, upper, border_checks):
      interior[k] = flat position of the k-th interior entry (row-major);
      lower[k] = tuples (c, d, b): h[interior[k]] >= h[c] + h[d] - h[b];
      upper[k] = tuples (a, b, d): h[interior[k]] <= h[a] + h[b] - h[d];
      border_checks = (p1, p2, m1, m2) with all corners on the border.
    """
    interior = [(i, j) for i in range(2, n) for j in range(1, i)]
    rank = {_pos(i, j): k for k, (i, j) in enumerate(interior)}
    m = len(interior)

    ineqs = []  # h[p1] + h[p2] >= h[m1] + h[m2]
    for a in range(1, n):
        for b in range(a):
            ineqs.append((_pos(a, b), _pos(a + 1, b + 1), _pos(a + 1, b), _pos(a, b + 1)))
    for a in range(1, n):
        for b in range(1, a + 1):
            ineqs.append((_pos(a, b), _pos(a + 1, b), _pos(a, b - 1), _pos(a + 1, b + 1)))
    for a in range(n - 1):
        for b in range(a + 1):
            ineqs.append((_pos(a + 1, b), _pos(a + 1, b + 1), _pos(a, b), _pos(a + 2, b + 1)))

    lower = [[] for _ in range(m)]
    upper = [[] for _ in range(m)]
    border_checks = []
    for p1, p2, m1, m2 in ineqs:
        last = max((p1, p2, m1, m2), key=lambda p: rank.get(p, -1))
        if rank.get(last, -1) == -1:
            border_checks.append((p1, p2, m1, m2))
        elif last == p1:
            lower[rank[last]].append((m1, m2, p2))
        elif last == p2:
            lower[rank[last]].append((m1, m2, p1))
        elif last == m1:
            upper[rank[last]].append((p1, p2, m2))
        else:
            upper[rank[last]].append((p1, p2, m1))

    interior_flat = tuple(_pos(i, j) for i, j in interior)
    return (
        interior_flat,
        tuple(tuple(t) for t in lower),
        tuple(tuple(t) for t in upper),
        tuple(border_checks),
    )


@lru_cache(maxsize=None)
def _program_arrays(n: int):
    """CSR-packed version of _program(n) for the JIT kernel."""
    interior, lower, upper, _ = _program(n)
    m = len(interior)
    lo_ptr = _np.zeros(m + 1, dtype=_np.int64)
    up_ptr = _np.zeros(m + 1, dtype=_np.int64)
    for k in range(m):
        lo_ptr[k + 1] = lo_ptr[k] + len(lower[k])
        up_ptr[k + 1] = up_ptr[k] + len(upper[k])
    lo = _np.array([t for k in range(m) for t in lower[k]], dtype=_np.int64).reshape(-1, 3)
    up = _np.array([t for k in range(m) for t in upper[k]], dtype=_np.int64).reshape(-1, 3)
    pod = _np.array(interior, dtype=_np.int64)
    return pod, lo_ptr, lo, up_ptr, up


def _border_values(n, alpha, beta, gamma):
    """Flat triangle with border entries filled and interiors set to 0."""
    size = (n + 1) * (n + 2) // 2
    h = [0] * size
    acc = 0
    for i in range(1, n + 1):
        acc += alpha[i - 1]
        h[_pos(i, 0)] = acc
    total_alpha = acc
    acc = total_alpha
    for j in range(1, n + 1):
        acc += beta[j - 1]
        h[_pos(n, j)] = acc
    acc = 0
    for i in range(1, n + 1):
        acc += gamma[i - 1]
        h[_pos(i, i)] = acc
    return h


def _check_partitions(alpha, beta, gamma):
    n = len(alpha)
    if not (len(beta) == len(gamma) == n):
        raise ValueError("alpha, beta, gamma must have equal length")
    for p in (alpha, beta, gamma):
        if any(p[i] < p[i + 1] for i in range(n - 1)):
            raise ValueError(f"not weakly decreasing: {p}")
        if any(int(x) != x for x in p):
            raise ValueError(f"hive borders must be integral: {p}")
    if sum(gamma) != sum(alpha) + sum(beta):
        raise ValueError("sum(gamma) != sum(alpha) + sum(beta)")


# ---------------------------------------------------------------------------
# counting kernels


def _count_py(h, interior, lower, upper, tighten, node_limit):
    """Reference backtracking counter.  Returns (count, nodes)."""
    m = len(interior)
    count = 0
    nodes = 0
    cur = [0] * m
    hiv = [0] * m
    depth = 0
    descend = True
    last = m - 1
    while True:
        if descend:
            lo = -_BIG
            for c, d, b in lower[depth]:
                v = h[c] + h[d] - h[b]
                if v > lo:
                    lo = v
            hi = _BIG
            for a, b, d in upper[depth]:
                v = h[a] + h[b] - h[d]
                if v < hi:
                    hi = v
            lo += tighten
            hi -= tighten
            if depth == last:
                if hi >= lo:
                    width = hi - lo + 1
                    count += width
                    nodes += width
                    if nodes > node_limit:
                        raise ResourceLimit(f"node limit {node_limit} exceeded")
                descend = False
                depth -= 1
                if depth < 0:
                    return count, nodes
            elif hi >= lo:
                cur[depth] = lo
                hiv[depth] = hi
                h[interior[depth]] = lo
                nodes += 1
                if nodes > node_limit:
                    raise ResourceLimit(f"node limit {node_limit} exceeded")
                depth += 1
            else:
                descend = False
                depth -= 1
                if depth < 0:
                    return count, nodes
        else:
            if cur[depth] < hiv[depth]:
                cur[depth] += 1
                h[interior[depth]] = cur[depth]
                nodes += 1
                if nodes > node_limit:
                    raise ResourceLimit(f"node limit {node_limit} exceeded")
                depth += 1
                descend = True
            else:
                depth -= 1
                if depth < 0:
                    return count, nodes


if _use_numba:

    @_numba.njit(cache=True)
    def _count_jit(h, pod, lo_ptr, lo, up_ptr, up, tighten, node_limit):  # pragma: no cover
        m = pod.shape[0]
        count = 0
        nodes = 0
        cur = _np.empty(m, _np.int64)
        hiv = _np.empty(m, _np.int64)
        depth = 0
        descend = True
        last = m - 1
        big = _BIG
        while True:
            if descend:
                lo_b = -big
                for idx in range(lo_ptr[depth], lo_ptr[depth + 1]):
                    v = h[lo[idx, 0]] + h[lo[idx, 1]] - h[lo[idx, 2]]
                    if v > lo_b:
                        lo_b = v
                hi_b = big
                for idx in range(up_ptr[depth], up_ptr[depth + 1]):
                    v = h[up[idx, 0]] + h[up[idx, 1]] - h[up[idx, 2]]
                    if v < hi_b:
                        hi_b = v
                lo_b += tighten
                hi_b -= tighten
                if depth == last:
                    if hi_b >= lo_b:
                        width = hi_b - lo_b + 1
                        count += width
                        nodes += width
                        if nodes > node_limit:
                            return count, nodes, 1
                    descend = False
                    depth -= 1
                    if depth < 0:
                        return count, nodes, 0
                elif hi_b >= lo_b:
                    cur[depth] = lo_b
                    hiv[depth] = hi_b
                    h[pod[depth]] = lo_b
                    nodes += 1
                    if nodes > node_limit:
                        return count, nodes, 1
                    depth += 1
                else:
                    descend = False
                    depth -= 1
                    if depth < 0:
                        return count, nodes, 0
            else:
                if cur[depth] < hiv[depth]:
                    cur[depth] += 1
                    h[pod[depth]] = cur[depth]
                    nodes += 1
                    if nodes > node_limit:
                        return count, nodes, 1
                    depth += 1
                    descend = True
                else:
                    depth -= 1
                    if depth < 0:
                        return count, nodes, 0


def count_hives_partitions(alpha, beta, gamma, *, node_limit=None, strict=False) -> int:
    """Number of integral hives with the given U(n) border partitions.

    strict=True counts interior lattice points instead: every rhombus
    inequality that involves at least one interior entry must hold strictly.
    """
    _check_partitions(alpha, beta, gamma)
    n = len(alpha)
    limit = node_limit if node_limit is not None else node_limit_default()
    alpha = tuple(int(x) for x in alpha)
    beta = tuple(int(x) for x in beta)
    gamma = tuple(int(x) for x in gamma)
    interior, lower, upper, border_checks = _program(n)
    h = _border_values(n, alpha, beta, gamma)
    for p1, p2, m1, m2 in border_checks:
        if h[p1] + h[p2] < h[m1] + h[m2]:
            return 0
    if not interior:
        return 1
    tighten = 1 if strict else 0
    if _use_numba:
        pod, lo_ptr, lo, up_ptr, up = _program_arrays(n)
        harr = _np.array(h, dtype=_np.int64)
        count, _nodes, hit = _count_jit(harr, pod, lo_ptr, lo, up_ptr, up, tighten, limit)
        if hit:
            raise ResourceLimit(f"node limit {limit} exceeded")
        return int(count)
    count, _nodes = _count_py(h, interior, lower, upper, tighten, limit)
    return count


def iter_hives_partitions(alpha, beta, gamma, *, node_limit=None, strict=False):
    """Yield every hive (flat entry list) in lexicographic interior order."""
    _check_partitions(alpha, beta, gamma)
    n = len(alpha)
    limit = node_limit if node_limit is not None else node_limit_default()
    alpha = tuple(int(x) for x in alpha)
    beta = tuple(int(x) for x in beta)
    gamma = tuple(int(x) for x in gamma)
    interior, lower, upper, border_checks = _program(n)
    h = _border_values(n, alpha, beta, gamma)
    for p1, p2, m1, m2 in border_checks:
        if h[p1] + h[p2] < h[m1] + h[m2]:
            return
    tighten = 1 if strict else 0
    m = len(interior)
    if m == 0:
        yield list(h)
        return
    nodes = 0

    def rec(depth):
        nonlocal nodes
        lo = -_BIG
        for c, d, b in lower[depth]:
            v = h[c] + h[d] - h[b]
            if v > lo:
                lo = v
        hi = _BIG
        for a, b, d in upper[depth]:
            v = h[a] + h[b] - h[d]
            if v < hi:
                hi = v
        lo += tighten
        hi -= tighten
        p = interior[depth]
        for val in range(lo, hi + 1):
            h[p] = val
            nodes += 1
            if nodes > limit:
                raise ResourceLimit(f"node limit {limit} exceeded")
            if depth == m - 1:
                yield list(h)
            else:
                yield from rec(depth + 1)
        h[p] = 0

    yield from rec(0)


# ---------------------------------------------------------------------------
# Hive values and serialization


@dataclass(frozen=True)
class Hive:
    """One integral point of a hive polytope, stored as triangle rows."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Hive":
        return cls(int(data["n"]), tuple(tuple(int(x) for x in row) for row in data["entries"]))

    def flat(self) -> list[int]:
        return [x for row in self.entries for x in row]

    def is_valid(self) -> bool:
        """Rhombus inequalities plus the corner normalization h[0][0] = 0."""
        h = self.flat()
        if len(self.entries) != self.n + 1 or h[0] != 0:
            return False
        if any(len(row) != i + 1 for i, row in enumerate(self.entries)):
            return False
        interior, lower, upper, border_checks = _program(self.n)
        for p1, p2, m1, m2 in border_checks:
            if h[p1] + h[p2] < h[m1] + h[m2]:
                return False
        for k, p in enumerate(interior):
            for c, d, b in lower[k]:
                if h[p] < h[c] + h[d] - h[b]:
                    return False
            for a, b, d in upper[k]:
                if h[p] > h[a] + h[b] - h[d]:
                    return False
        return True


def _rows_from_flat(n, h):
    return tuple(tuple(h[_pos(i, j)] for j in range(i + 1)) for i in range(n + 1))


# ---------------------------------------------------------------------------
# Triple-level interface


def _extended_or_none(t: Triple):
    try:
        return extend_to_un(t)
    except (Incompatible, NegativeShift):
        return None


def count_hives(t: Triple, *, node_limit=None) -> int:
    """The LR coefficient N_{lambda mu}^nu; 0 for incompatible/negative-shift triples."""
    ext = _extended_or_none(t)
    if ext is None:
        return 0
    return count_hives_partitions(*ext, node_limit=node_limit)


def count_interior_hives(t: Triple, *, node_limit=None) -> int:
    """Lattice points satisfying every interior-touching rhombus inequality strictly."""
    ext = _extended_or_none(t)
    if ext is None:
        return 0
    return count_hives_partitions(*ext, node_limit=node_limit, strict=True)


def enumerate_hives(t: Triple, *, node_limit=None) -> list[Hive]:
    """All hives of the triple, ordered lexicographically on interior entries."""
    ext = _extended_or_none(t)
    if ext is None:
        return []
    return [
        Hive(t.n, _rows_from_flat(t.n, h))
        for h in iter_hives_partitions(*ext, node_limit=node_limit)
    ]


# ---------------------------------------------------------------------------
# independent oracle: the classical LR rule on skew tableaux


def lr_tableau_count(alpha, beta, gamma) -> int:
    """Number of LR skew tableaux of shape gamma/alpha with content beta.

    Semistandard filling (rows weakly increase, columns strictly increase)
    whose reverse reading word is a lattice word.  Entirely independent of the
    hive model; used to validate the hive border convention.
    """
    n = len(alpha)
    if sum(gamma) != sum(alpha) + sum(beta):
        return 0
    if any(g < a for g, a in zip(gamma, alpha)):
        return 0
    if any(int(x) != x for p in (alpha, beta, gamma) for x in p):
        raise ValueError("tableau counting needs integral partitions")

    # cells in reverse reading order: rows top to bottom, right to left
    cells = []
    for i in range(n):
        for j in range(gamma[i] - 1, alpha[i] - 1, -1):
            cells.append((i, j))
    total = len(cells)
    if total == 0:
        return 1

    remaining = list(beta)
    counts = [0] * (n + 1)
    # value placed at column j of the previous row, for column-strictness
    col_val = {}
    row_right = {}  # value just placed to the right in the current row

    def rec(idx):
        if idx == total:
            return 1
        i, j = cells[idx]
        out = 0
        # upper bounds: value of right neighbour (row weakly increasing),
        # and at most i+1 (top row can only hold 1s, etc.)
        vmax = i + 1
        right = row_right.get((i, j + 1))
        if right is not None:
            vmax = min(vmax, right)
        above = col_val.get((i - 1, j))
        vmin = 1 if above is None else above + 1
        for v in range(vmin, vmax + 1):
            if remaining[v - 1] <= 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # lattice-word violation
            counts[v] += 1
            remaining[v - 1] -= 1
            row_right[(i, j)] = v
            col_val[(i, j)] = v
            out += rec(idx + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            del row_right[(i, j)]
            del col_val[(i, j)]
        return out

    return rec(0)


def lr_oracle(t: Triple) -> int:
    """LR coefficient via the tableau rule; must agree with count_hives everywhere."""
    ext = _extended_or_none(t)
    if ext is None:
        return 0
    return lr_tableau_count(*ext)


# ---------------------------------------------------------------------------
# tensor product decomposition by bounding-box scan


def iter_bounded_partitions(total, n_parts, cap):
    """Weakly decreasing n_parts-tuples of non-negative integers with the
    given total and first part <= cap."""

    def rec(prefix, remaining, left, hi):
        if left == 1:
            if 0 <= remaining <= hi:
                yield prefix + (remaining,)
            return
        # smallest admissible value for this part so the rest can still fit
        lo = -(-remaining // left)  # ceil
        for v in range(min(hi, remaining), lo - 1, -1):
            yield from rec(prefix + (v,), remaining - v, left - 1, v)

    if total < 0 or cap * n_parts < total:
        return
    yield from rec((), total, n_parts, cap)


def _weyl_prefilter(alpha, beta, gamma) -> bool:
    """Cheap necessary conditions gamma_{i+j-1} <= alpha_i + beta_j."""
    n = len(alpha)
    for i in range(n):
        for j in range(n - i):
            if gamma[i + j] > alpha[i] + beta[j]:
                return False
    return True


@dataclass(frozen=True)
class DecompositionEntry:
    nu: Weight
    multiplicity: int


def tensor_decompose(lam: Weight, mu: Weight, *, node_limit=None) -> list[DecompositionEntry]:
    """Complete decomposition of lambda (x) mu into (nu, multiplicity) entries.

    Candidate nu are generated by scanning the partitions gamma of
    |alpha| + |beta| with gamma_1 <= alpha_1 + beta_1 (every such gamma is a
    compatible candidate with sigma = gamma_n), then filtered by hive count.
    Sorted lexicographically on the Dynkin labels of nu.
    """
    if lam.n != mu.n:
        raise ValueError("weights must share rank")
    n = lam.n
    alpha, beta = ell(lam), ell(mu)
    total = sum(alpha) + sum(beta)
    out = []
    for gamma in iter_bounded_partitions(total, n, alpha[0] + beta[0]):
        if not _weyl_prefilter(alpha, beta, gamma):
            continue
        mult = count_hives_partitions(alpha, beta, gamma, node_limit=node_limit)
        if mult > 0:
            nu = Weight(n, tuple(gamma[i] - gamma[i + 1] for i in range(n - 1)))
            out.append(DecompositionEntry(nu, mult))
    out.sort(key=lambda e: e.nu.labels)
    return out


@dataclass(frozen=True)
class TensorReport:
    distinct: int
    total_multiplicity: int
    max_multiplicity: int
    entries: tuple[DecompositionEntry, ...]


def tensor_polytope_report(lam: Weight, mu: Weight, *, node_limit=None) -> TensorReport:
    entries = tensor_decompose(lam, mu, node_limit=node_limit)
    mults = [e.multiplicity for e in entries]
    return TensorReport(
        distinct=len(entries),
        total_multiplicity=sum(mults),
        max_multiplicity=max(mults) if mults else 0,
        entries=tuple(entries),
    )


def dimension_sum_check(lam: Weight, mu: Weight, *, node_limit=None) -> bool:
    """sum_nu N * dim(nu) == dim(lam) * dim(mu)."""
    entries = tensor_decompose(lam, mu, node_limit=node_limit)
    total = sum(e.multiplicity * weyl_dim(e.nu) for e in entries)
    return total == weyl_dim(lam) * weyl_dim(mu)


# ---------------------------------------------------------------------------
# matriochka nesting of multiplicity level sets (rank 3)


def _hull_2d(points):
    """Monotone-chain convex hull with exact integer arithmetic."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lo, hi = [], []
    for p in pts:
        while len(lo) >= 2 and cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    for p in reversed(pts):
        while len(hi) >= 2 and cross(hi[-2], hi[-1], p) <= 0:
            hi.pop()
        hi.append(p)
    return lo[:-1] + hi[:-1]


def _inside_hull(hull, p) -> bool:
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        (x1, y1), (x2, y2) = hull
        cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
        if cross != 0:
            return False
        dot = (p[0] - x1) * (x2 - x1) + (p[1] - y1) * (y2 - y1)
        return 0 <= dot <= (x2 - x1) ** 2 + (y2 - y1) ** 2
    for k in range(len(hull)):
        o, a = hull[k], hull[(k + 1) % len(hull)]
        if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) < 0:
            return False
    return True


@dataclass(frozen=True)
class MatriochkaReport:
    max_multiplicity: int
    nested: bool


def matriochka_report(lam: Weight, mu: Weight) -> MatriochkaReport:
    """Check that SU(3) multiplicity level sets {nu : N >= m} have nested hulls."""
    if lam.n != 3:
        raise ValueError("matriochka nesting is a rank-3 statement")
    entries = tensor_decompose(lam, mu)
    if not entries:
        return MatriochkaReport(0, True)
    mmax = max(e.multiplicity for e in entries)
    nested = True
    for m in range(1, mmax):
        outer = _hull_2d([e.nu.labels for e in entries if e.multiplicity >= m])
        inner = [e.nu.labels for e in entries if e.multiplicity >= m + 1]
        if not all(_inside_hull(outer, p) for p in inner):
            nested = False
            break
    return MatriochkaReport(mmax, nested)

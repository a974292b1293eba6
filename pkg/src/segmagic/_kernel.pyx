# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking kernel for product-square enumeration.

Same contract as the pure-Python twin in ``_kernel_py.py``.
"""


cdef int MAX_CELLS = 64  # order up to 8


cdef bint _leaf_ok(int n, int target, int level, int* vals, int* grid):
    cdef int i, k, s
    if level == 1:
        return True
    s = 0
    for i in range(n):
        s += vals[grid[i * n + i]]
    if s != target:
        return False
    s = 0
    for i in range(n):
        s += vals[grid[i * n + n - 1 - i]]
    if s != target:
        return False
    if level == 3 and n >= 3:
        for k in range(1, n):
            s = 0
            for i in range(n):
                s += vals[grid[i * n + (i + k) % n]]
            if s != target:
                return False
        for k in range(n - 1):
            s = 0
            for i in range(n):
                s += vals[grid[i * n + (k - i + n) % n]]
            if s != target:
                return False
    return True


cdef void _extend(int pos, int m, int n, int target, int level,
                  int* vals, unsigned char* used, int* grid,
                  int* row_sum, int* col_sum,
                  int plen, int* prefix, list out):
    cdef int i = pos // n
    cdef int j = pos - i * n
    cdef int c, v, rs, cs, k, t, cnt, bound
    cdef int first = 0
    cdef int stop = m
    cdef bint forced = pos < plen
    if pos == m:
        if _leaf_ok(n, target, level, vals, grid):
            out.append(tuple([grid[t] for t in range(m)]))
        return
    if forced:
        first = prefix[pos]
        stop = first + 1
    for c in range(first, stop):
        if used[c]:
            continue
        v = vals[c]
        rs = row_sum[i] + v
        if rs > target:
            if forced:
                return
            break  # values ascend, no later candidate fits either
        if j == n - 1 and rs != target:
            continue
        cs = col_sum[j] + v
        if cs > target or (i == n - 1 and cs != target):
            continue
        used[c] = 1
        k = n - 1 - i  # cells this column still needs after placing
        if k:
            bound = cs
            cnt = 0
            for t in range(m):
                if not used[t]:
                    bound += vals[t]
                    cnt += 1
                    if cnt == k:
                        break
            if bound > target:
                used[c] = 0
                continue
            bound = cs
            cnt = 0
            for t in range(m - 1, -1, -1):
                if not used[t]:
                    bound += vals[t]
                    cnt += 1
                    if cnt == k:
                        break
            if bound < target:
                used[c] = 0
                continue
        grid[pos] = c
        row_sum[i] = rs
        col_sum[j] = cs
        _extend(pos + 1, m, n, target, level, vals, used, grid,
                row_sum, col_sum, plen, prefix, out)
        row_sum[i] -= v
        col_sum[j] -= v
        used[c] = 0


def product_square_indices(values, int order, int target, int level, prefix=()):
    """Enumerate row-major grids using each of the ``order**2`` values once.

    values  ascending distinct integers, one per available cell
    target  required row/column sum
    level   1 rows+columns, 2 adds the main diagonals, 3 adds every
            wrap-around diagonal (for order < 3 same as level 2)
    prefix  value indices forced into the leading cells

    Returns the list of solutions in lexicographic order, each a row-major
    tuple of indices into ``values``.
    """
    cdef int n = order
    cdef int m = n * n
    cdef int i
    cdef int[64] vals
    cdef int[64] grid
    cdef int[64] pref
    cdef int[8] row_sum
    cdef int[8] col_sum
    cdef unsigned char[64] used

    if m > MAX_CELLS:
        raise ValueError(f"order {order} too large for this kernel")
    seq = list(values)
    if len(seq) != m:
        raise ValueError(f"need {m} values, got {len(seq)}")
    for i in range(m):
        vals[i] = seq[i]
        used[i] = 0
        grid[i] = 0
    for i in range(m - 1):
        if vals[i] >= vals[i + 1]:
            raise ValueError("values must be ascending and distinct")
    if level not in (1, 2, 3):
        raise ValueError(f"bad level {level}")
    pseq = list(prefix)
    if len(pseq) > m or len(set(pseq)) != len(pseq):
        raise ValueError("bad prefix")
    for i in range(len(pseq)):
        if not 0 <= pseq[i] < m:
            raise ValueError("bad prefix")
        pref[i] = pseq[i]
    for i in range(n):
        row_sum[i] = 0
        col_sum[i] = 0

    out: list = []
    _extend(0, m, n, target, level, vals, used, grid,
            row_sum, col_sum, len(pseq), pref, out)
    return out

"""Smith normal form over the integers, with unimodular transforms.

Matrices are plain lists of lists of Python ints.  Entry growth during
elimination is real even on small matrices, so nothing here ever touches
fixed-width or floating-point arithmetic.
"""

from __future__ import annotations


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise ValueError("dimension mismatch")
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(rows)]


def int_det(m) -> int:
    """Determinant by fraction-free (Bareiss) elimination; exact."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def smith_normal_form(m) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (d, u, v) with u*m*v = d, where u and v are unimodular and d is
    diagonal (same shape as m) with non-negative entries, each dividing the
    next.  Total on all integer matrices, including empty ones.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_combine(r1, r2, x, y, z, w):
        # rows r1, r2 <- (x*r1 + y*r2, z*r1 + w*r2); x*w - y*z = +-1
        for mat in (a, u):
            for j in range(len(mat[r1])):
                p, q = mat[r1][j], mat[r2][j]
                mat[r1][j] = x * p + y * q
                mat[r2][j] = z * p + w * q

    def col_combine(c1, c2, x, y, z, w):
        for mat in (a, v):
            for row in mat:
                p, q = row[c1], row[c2]
                row[c1] = x * p + y * q
                row[c2] = z * p + w * q

    def row_add(dst, src, k):
        for mat in (a, u):
            for j in range(len(mat[dst])):
                mat[dst][j] += k * mat[src][j]

    def col_add(dst, src, k):
        for mat in (a, v):
            for row in mat:
                row[dst] += k * row[src]

    def find_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                e = a[i][j]
                if e != 0 and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        return None if best is None else best[1:]

    for t in range(min(rows, cols)):
        while True:
            pos = find_pivot(t)
            if pos is None:
                break
            i, j = pos
            if i != t:
                row_combine(t, i, 0, 1, 1, 0)
            if j != t:
                col_combine(t, j, 0, 1, 1, 0)
            # clear column t below the pivot, then row t to its right;
            # clearing one can disturb the other, so loop until both stick.
            # when the pivot divides the entry, subtract a multiple of the
            # pivot row/column so the pivot row/column itself stays fixed;
            # otherwise a gcd combine strictly shrinks the pivot.
            while True:
                dirty = False
                for i in range(t + 1, rows):
                    if a[i][t] != 0:
                        if a[i][t] % a[t][t] == 0:
                            row_add(i, t, -(a[i][t] // a[t][t]))
                        else:
                            g, x, y = _xgcd(a[t][t], a[i][t])
                            row_combine(t, i, x, y,
                                        -(a[i][t] // g), a[t][t] // g)
                            dirty = True
                for j in range(t + 1, cols):
                    if a[t][j] != 0:
                        if a[t][j] % a[t][t] == 0:
                            col_add(j, t, -(a[t][j] // a[t][t]))
                        else:
                            g, x, y = _xgcd(a[t][t], a[t][j])
                            col_combine(t, j, x, y,
                                        -(a[t][j] // g), a[t][t] // g)
                            dirty = True
                if not dirty:
                    break
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)

    for t in range(min(rows, cols)):
        if a[t][t] < 0:
            for j in range(cols):
                a[t][j] = -a[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]

    return a, u, v


def diagonal_of(d) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def cokernel_invariants(m) -> tuple[int, tuple[int, ...]]:
    """Invariants (free rank, torsion chain) of Z^rows / column-span of m.

    The torsion chain lists the diagonal entries >= 2 of the Smith form, in
    divisibility order.
    """
    rows = len(m)
    if rows == 0:
        return 0, ()
    if not m[0]:
        return rows, ()
    d, _, _ = smith_normal_form(m)
    diag = diagonal_of(d)
    nonzero = [e for e in diag if e != 0]
    torsion = tuple(e for e in nonzero if e >= 2)
    return rows - len(nonzero), torsion


def integer_rank(m) -> int:
    """Rank over Q of an integer matrix (count of nonzero Smith entries)."""
    if not m or not m[0]:
        return 0
    d, _, _ = smith_normal_form(m)
    return sum(1 for e in diagonal_of(d) if e != 0)

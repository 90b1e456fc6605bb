"""Exact linear algebra over commutative rings and fields.

Determinants use subset dynamic programming so they never divide, which
keeps them valid over any commutative ring (polynomial rings, series
rings).  Solving and inversion assume field elements with exact division.
"""

from .errors import SingularSystem


def ring_det(rows):
    """Determinant over any commutative ring, division-free.

    Subset DP over column sets: O(n * 2^n) ring multiplications, far below
    expansion by minors and safe where Gaussian elimination cannot divide.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no determinant here; supply the ring one explicitly")
    for row in rows:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    zero = rows[0][0] - rows[0][0]
    # dp maps a column bitmask with k bits to the det of rows 0..k-1 on it
    dp = {0: None}
    for k in range(n):
        nxt = {}
        row = rows[k]
        for mask, sub in dp.items():
            seen = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    seen += 1
                    continue
                entry = row[j]
                if not entry:
                    continue
                term = entry if sub is None else sub * entry
                if (k + seen) % 2:
                    term = zero - term
                new = mask | bit
                if new in nxt:
                    nxt[new] = nxt[new] + term
                else:
                    nxt[new] = term
        dp = nxt
        if not dp:
            return zero
    return dp.get((1 << n) - 1, zero)


def _eliminate(aug, n_cols):
    """Row-reduce in place; return pivot column list."""
    pivots = []
    row_at = 0
    for col in range(n_cols):
        piv = None
        for r in range(row_at, len(aug)):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            continue
        aug[row_at], aug[piv] = aug[piv], aug[row_at]
        inv = aug[row_at][col]
        aug[row_at] = [x / inv for x in aug[row_at]]
        for r in range(len(aug)):
            if r != row_at and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row_at])]
        pivots.append(col)
        row_at += 1
    return pivots


def solve_linear(matrix, rhs):
    """Solve an exactly determined or overdetermined linear system.

    Entries must be field elements.  Raises SingularSystem when the
    coefficient matrix has deficient column rank or the system is
    inconsistent, so callers can distinguish a failed reconstruction from
    a wrong one.
    """
    m = len(matrix)
    if m != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if m == 0:
        raise SingularSystem("empty system")
    n = len(matrix[0])
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivots = _eliminate(aug, n)
    if len(pivots) < n:
        raise SingularSystem(f"column rank {len(pivots)} below unknown count {n}")
    for r in range(len(pivots), m):
        if aug[r][n]:
            raise SingularSystem("inconsistent system")
    solution = [None] * n
    for r, col in enumerate(pivots):
        solution[col] = aug[r][n]
    return solution


def invert_matrix(rows, one):
    """Inverse of a square matrix of field elements.

    The multiplicative identity of the field is passed explicitly since it
    cannot be derived from an arbitrary element.
    """
    n = len(rows)
    zero = one - one
    aug = [
        list(row) + [one if i == j else zero for j in range(n)]
        for i, row in enumerate(rows)
    ]
    pivots = _eliminate(aug, n)
    if len(pivots) < n:
        raise SingularSystem("matrix not invertible")
    return [row[n:] for row in aug]

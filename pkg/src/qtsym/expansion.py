"""Analytic expansions into one-row products and their independent oracles.

Four expansions are implemented from their closed forms: a padded partition
into products of a one-row dual element times a dual element with a shift
vector added (and its dual version in elementaries, driven by part
multiplicities), and the fully iterated forms writing the same element as a
sum over strictly upper-triangular shift matrices of products of one-row
elements g_k or e_k.

Each closed form is checked against linear algebra that knows nothing about
it: Pieri-product inversion for the shift-vector form, and the unique
expansion in the multiplicative one-row basis for the matrix forms.
Shift vectors whose target fails to be a partition are evaluated and
reported separately; the reconstruction identities must hold without them.
"""

from itertools import permutations

from .coefficients import C_coefficient, USpec
from .errors import InternalInvariant
from .linalg import solve_linear
from .partitions import (
    add_row_vector,
    check_partition,
    conjugate,
    is_partition,
    partitions_of,
    trim,
    vectors_with_sum_at_most,
)
from .rational import QTRational
from .symfunc import (
    SymFunc,
    complete,
    e_product,
    elementary,
    expand_in_Q_basis,
    g_product,
    macdonald_P,
    macdonald_Q,
    modified_complete,
    specialize_t_to_q,
)


class ExpansionTerm:
    """One summand: coefficient times a one-row element of the given row
    size times the element indexed by the target."""

    __slots__ = ("theta", "coefficient", "row", "target")

    def __init__(self, theta, coefficient, row, target):
        self.theta = tuple(theta)
        self.coefficient = coefficient
        self.row = int(row)
        self.target = tuple(target)

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "coefficient": self.coefficient.to_json(),
            "row": self.row,
            "target": list(self.target),
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpansionTerm):
            return NotImplemented
        return (
            self.theta == other.theta
            and self.coefficient == other.coefficient
            and self.row == other.row
            and self.target == other.target
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"ExpansionTerm(theta={self.theta}, coefficient={self.coefficient},"
            f" row={self.row}, target={self.target})"
        )


class ThetaMatrix:
    """Strictly upper-triangular square matrix of nonnegative integers."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        size = len(rows)
        for i, row in enumerate(rows):
            if len(row) != size:
                raise ValueError("matrix must be square")
            if any(x < 0 for x in row):
                raise ValueError("entries must be nonnegative")
            if any(row[j] != 0 for j in range(i + 1)):
                raise ValueError("diagonal and below must be zero")
        self.entries = rows

    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(j))

    def row_sum_from(self, i: int, start: int) -> int:
        return sum(self.entries[i][start:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThetaMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"ThetaMatrix({[list(r) for r in self.entries]!r})"


def raising_action(base, matrix: ThetaMatrix) -> tuple:
    """Index vector after the raising matrix acts: position k gains the
    k-th row sum and loses the k-th column sum."""
    base = tuple(int(x) for x in base)
    size = matrix.size()
    if len(base) != size:
        raise ValueError("base length must match matrix size")
    return tuple(
        base[k] + matrix.row_sum_from(k, k + 1) - sum(matrix.column(k))
        for k in range(size)
    )


def _padded_partition(parts) -> tuple:
    lam = tuple(int(x) for x in parts)
    if not lam:
        raise ValueError("needs at least one part (pad with zeros)")
    if lam[-1] < 0 or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("parts must be weakly decreasing and nonnegative")
    return lam


def _multiplicity_vector(ms) -> tuple:
    ms = tuple(int(x) for x in ms)
    if not ms:
        raise ValueError("needs at least one multiplicity")
    if any(m < 0 for m in ms):
        raise ValueError("multiplicities must be nonnegative")
    return ms


def part_multiplicities(parts, max_part: int | None = None) -> tuple:
    """Multiplicity vector (count of parts 1, 2, ...) of a partition,
    padded with zeros up to max_part."""
    lam = check_partition(parts)
    top = lam[0] if lam else 0
    if max_part is None:
        max_part = max(top, 1)
    if top > max_part:
        raise ValueError(f"parts up to {top} exceed max_part {max_part}")
    out = [0] * max_part
    for p in lam:
        out[p - 1] += 1
    return tuple(out)


def _theta_order(term: ExpansionTerm):
    return (sum(term.theta), term.theta)


def _theorem1_split(lam):
    n = len(lam) - 1
    u = USpec.from_partition(lam)
    kept = []
    dropped = []
    for theta in vectors_with_sum_at_most(n, lam[n]):
        value = C_coefficient(theta, u).value
        if value.is_zero():
            continue
        target = add_row_vector(lam[:n], theta)
        row = lam[n] - sum(theta)
        if is_partition(target):
            kept.append(ExpansionTerm(theta, value, row, trim(target)))
        else:
            dropped.append(ExpansionTerm(theta, value, row, target))
    kept.sort(key=_theta_order)
    dropped.sort(key=_theta_order)
    return kept, dropped


def theorem1_expand(parts) -> list:
    """Expansion of the dual element of a padded partition into one-row
    dual elements times shifted dual elements.

    The trailing part of the input sets the shift budget, so padding with
    zeros changes the terms but not the reconstructed function.  Terms
    whose shifted target is not a partition are excluded here; see
    theorem1_excluded_terms.
    """
    return _theorem1_split(_padded_partition(parts))[0]


def theorem1_excluded_terms(parts) -> list:
    """Nonzero-coefficient terms whose shifted target fails to be a
    partition, evaluated and reported for inspection only."""
    return _theorem1_split(_padded_partition(parts))[1]


def inverse_pieri_oracle(parts) -> dict:
    """Coefficients of the same expansion obtained with no closed form:
    every candidate product is expanded in the dual basis through the
    pairing, and the exact linear system is solved.

    The normalization (shift zero has coefficient one) must come out of
    the solve; it is not imposed.
    """
    lam = _padded_partition(parts)
    n = len(lam) - 1
    candidates = [
        theta
        for theta in vectors_with_sum_at_most(n, lam[n])
        if is_partition(add_row_vector(lam[:n], theta))
    ]
    total = sum(lam)
    kappas = list(partitions_of(total))
    columns = []
    for theta in candidates:
        product = modified_complete(lam[n] - sum(theta)) * macdonald_Q(
            trim(add_row_vector(lam[:n], theta))
        )
        expansion = expand_in_Q_basis(product)
        columns.append([expansion.get(kappa, QTRational.zero()) for kappa in kappas])
    matrix = [[col[r] for col in columns] for r in range(len(kappas))]
    rhs = [
        QTRational.one() if kappa == trim(lam) else QTRational.zero()
        for kappa in kappas
    ]
    solution = solve_linear(matrix, rhs)
    return dict(zip(candidates, solution))


def _theorem2_split(ms):
    n = len(ms) - 1
    u = USpec((n - 1 - i, sum(ms[i:n])) for i in range(n))
    kept = []
    dropped = []
    for theta in vectors_with_sum_at_most(n, ms[n]):
        value = C_coefficient(theta, u, params="tq").value
        if value.is_zero():
            continue
        mults = [ms[j] + theta[j] - theta[j + 1] for j in range(n - 1)]
        if n >= 1:
            mults.append(ms[n - 1] + ms[n] + theta[n - 1])
        row = ms[n] - sum(theta)
        if all(m >= 0 for m in mults):
            target = []
            for j in range(n - 1, -1, -1):
                target.extend([j + 1] * mults[j])
            kept.append(ExpansionTerm(theta, value, row, target))
        else:
            # dropped targets are reported as raw multiplicity vectors
            dropped.append(ExpansionTerm(theta, value, row, mults))
    kept.sort(key=_theta_order)
    dropped.sort(key=_theta_order)
    return kept, dropped


def theorem2_expand(ms) -> list:
    """Expansion of the orthogonal element with given part multiplicities
    (count of parts 1, 2, ...) into elementaries times elements with
    shifted multiplicities.

    Terms driving some multiplicity negative are excluded here; see
    theorem2_excluded_terms, where such targets are reported as raw
    multiplicity vectors.
    """
    return _theorem2_split(_multiplicity_vector(ms))[0]


def theorem2_excluded_terms(ms) -> list:
    return _theorem2_split(_multiplicity_vector(ms))[1]


def _shift_matrices(caps):
    """Strictly upper-triangular matrices where each column sum is bounded
    by its cap plus the later entries of the same row, so every raised
    index stays nonnegative."""
    size = len(caps)
    cols = [None] * size

    def fill(c):
        if c == 0:
            rows = [
                tuple(
                    cols[j][i] if j > i else 0 for j in range(size)
                )
                for i in range(size)
            ]
            yield ThetaMatrix(rows)
            return
        bound = caps[c] + sum(cols[j][c] for j in range(c + 1, size))
        for entries in vectors_with_sum_at_most(c, bound):
            cols[c] = entries
            yield from fill(c - 1)
        cols[c] = None

    yield from fill(size - 1)


def _aggregate(out: dict, key_vector, value: QTRational) -> None:
    if any(k < 0 for k in key_vector):
        raise InternalInvariant("raised index went negative")
    key = tuple(sorted((k for k in key_vector if k > 0), reverse=True))
    total = out.get(key, QTRational.zero()) + value
    if total.is_zero():
        out.pop(key, None)
    else:
        out[key] = total


def theorem3_expand(parts) -> dict:
    """Full expansion in products of one-row dual elements, as a map from
    the sorted index multiset to its aggregated coefficient.

    The sum runs over shift matrices; the factor for step k is the
    shift-vector coefficient evaluated at arguments displaced by the later
    columns of the matrix.
    """
    lam = _padded_partition(parts)
    n = len(lam) - 1
    out: dict = {}
    for matrix in _shift_matrices(lam):
        coeff = QTRational.one()
        for k in range(1, n + 1):
            theta = matrix.column(k)
            pairs = []
            for i in range(k):
                shift = sum(
                    matrix.entry(i, j) - matrix.entry(k, j)
                    for j in range(k + 1, n + 1)
                )
                pairs.append((lam[i] - lam[k] + shift, k - 1 - i))
            coeff = coeff * C_coefficient(theta, USpec(pairs)).value
            if coeff.is_zero():
                break
        if coeff.is_zero():
            continue
        _aggregate(out, raising_action(lam, matrix), coeff)
    return out


def theorem4_expand(ms) -> dict:
    """Full expansion in products of elementaries for the orthogonal
    element with given part multiplicities, keyed by sorted index multiset.

    Mirror of theorem3_expand with parameters exchanged in every factor
    and indices driven by the tail sums of the multiplicity vector.
    """
    ms = _multiplicity_vector(ms)
    n = len(ms) - 1
    tails = [sum(ms[k:]) for k in range(n + 1)]
    out: dict = {}
    for matrix in _shift_matrices(tails):
        coeff = QTRational.one()
        for k in range(1, n + 1):
            theta = matrix.column(k)
            pairs = []
            for i in range(k):
                shift = sum(
                    matrix.entry(i, j) - matrix.entry(k, j)
                    for j in range(k + 1, n + 1)
                )
                pairs.append((k - 1 - i, sum(ms[i:k]) + shift))
            coeff = coeff * C_coefficient(theta, USpec(pairs), params="tq").value
            if coeff.is_zero():
                break
        if coeff.is_zero():
            continue
        _aggregate(out, raising_action(tails, matrix), coeff)
    return out


def reconstruct_theorem1(terms) -> SymFunc:
    out = SymFunc.zero()
    for term in terms:
        product = modified_complete(term.row) * macdonald_Q(term.target)
        out = out + product.scale(term.coefficient)
    return out


def reconstruct_theorem2(terms) -> SymFunc:
    out = SymFunc.zero()
    for term in terms:
        product = elementary(term.row) * macdonald_P(term.target)
        out = out + product.scale(term.coefficient)
    return out


def reconstruct_g_expansion(expansion: dict) -> SymFunc:
    out = SymFunc.zero()
    for mu, coeff in expansion.items():
        out = out + g_product(mu).scale(coeff)
    return out


def reconstruct_e_expansion(expansion: dict) -> SymFunc:
    out = SymFunc.zero()
    for mu, coeff in expansion.items():
        out = out + e_product(mu).scale(coeff)
    return out


def jacobi_trudi(parts) -> SymFunc:
    """Determinant of complete functions indexed by the partition, as the
    signed sum over permutations; rows with a negative index vanish."""
    lam = check_partition(parts)
    size = len(lam)
    if size == 0:
        return SymFunc.one()
    out = SymFunc.zero()
    for sigma in permutations(range(size)):
        indices = [lam[i] - i + sigma[i] for i in range(size)]
        if any(k < 0 for k in indices):
            continue
        inversions = sum(
            1 for a in range(size) for b in range(a + 1, size)
            if sigma[a] > sigma[b]
        )
        term = SymFunc.one()
        for k in indices:
            term = term * complete(k)
        if inversions % 2:
            term = -term
        out = out + term
    return out


def schur_check(parts) -> bool:
    """At equal parameters the expansion must fully multiply out to the
    determinant expansion in complete functions, which must equal the
    orthogonal element itself at equal parameters."""
    lam = check_partition(parts)
    if not lam:
        lam = (0,)
    recon = specialize_t_to_q(reconstruct_theorem1(theorem1_expand(lam)))
    determinant = jacobi_trudi(lam)
    direct = specialize_t_to_q(macdonald_P(lam))
    return recon == determinant and determinant == direct

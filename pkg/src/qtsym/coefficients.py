"""Closed-form expansion coefficients and their functional-equation checks.

The central object is the coefficient attached to a shift vector theta and
a family of monomial arguments u_k = q^(a_k) t^(b_k): a Pochhammer-ratio
prefactor times a determinant-over-Vandermonde factor.  At the row
specializations coming from a partition, and at the q-shifted families the
recurrence checks visit, individual pieces can vanish or blow up while the
whole stays finite; whenever any denominator factor vanishes as a monomial
the entire expression (prefactor and cleared determinant together) is
expanded along a generic perturbation direction and evaluated as one exact
limit.

Also here: the one-variable restriction coefficients c_k, the Pieri
coefficients obtained by linear algebra, and exact checks of the two
recurrence relations the closed form must satisfy.
"""

from functools import lru_cache

from .errors import DegenerateConfig, InternalInvariant
from .linalg import ring_det
from .partitions import check_partition
from .rational import (
    EpsPolynomial,
    LaurentMonomial,
    Q,
    QTRational,
    eps_limit,
    one_minus,
)
from .symfunc import (
    PolyInVars,
    expand_in_Q_basis,
    expand_in_variables,
    macdonald_Q,
    modified_complete,
)

_T_MONO = QTRational.from_monomial(1, 0, 1)


class USpec:
    """Monomial argument family u_k = q^(a_k) t^(b_k), as exponent pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = tuple((int(a), int(b)) for a, b in pairs)

    @classmethod
    def from_partition(cls, parts) -> "USpec":
        """Row arguments for a partition padded to its full length:
        q-exponents are the gaps against the last part, t-exponents fall
        off by one per row, and the last row itself is left implicit.
        """
        lam = tuple(int(x) for x in parts)
        if not lam:
            raise ValueError("needs at least one part (pad with zeros)")
        n = len(lam) - 1
        return cls((lam[k] - lam[n], n - 1 - k) for k in range(n))

    def swapped(self) -> "USpec":
        """Exponent pairs with the roles of q and t exchanged."""
        return USpec((b, a) for a, b in self.pairs)

    def shift_q(self, index: int, delta: int) -> "USpec":
        out = list(self.pairs)
        a, b = out[index]
        out[index] = (a + delta, b)
        return USpec(out)

    def shift_all_q(self, delta: int) -> "USpec":
        return USpec((a + delta, b) for a, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, USpec):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"USpec({list(self.pairs)!r})"


class CValue:
    """Coefficient value plus whether the perturbation limit was needed."""

    __slots__ = ("value", "regularized")

    def __init__(self, value: QTRational, regularized: bool):
        self.value = value
        self.regularized = regularized

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "regularized": self.regularized}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CValue):
            return NotImplemented
        return self.value == other.value and self.regularized == other.regularized

    __hash__ = None

    def __repr__(self) -> str:
        return f"CValue({self.value}, regularized={self.regularized})"


def _nonzero(r: QTRational, what: str) -> QTRational:
    if r.is_zero():
        raise DegenerateConfig(f"{what} vanishes")
    return r


def _om(a: int, b: int) -> QTRational:
    return one_minus(LaurentMonomial(1, a, b))


def _omd(a: int, b: int) -> QTRational:
    return _nonzero(_om(a, b), "recurrence coefficient denominator")


# A ratio spec encodes (q^an t^bn x; q)_m / (q^ad t^bd x; q)_m where x is
# the ratio of the perturbation units of arguments ii and jj (None: no
# unit).  Both Pochhammers share the same unit ratio, so the clearing
# factors cancel between numerator and denominator.

def _second_ratio_specs(theta, full, vpairs, n):
    specs = []
    for i in range(n):
        m = theta[i]
        if m == 0:
            continue
        ai, bi = full[i]
        for j in range(i + 1, n + 1):
            aj, bj = full[j]
            specs.append((ai - aj + 1, bi - bj - 1, ai - aj + 1, bi - bj, i, j, m))
        for j in range(i, n):
            va, vb = vpairs[j]
            specs.append((ai - va, bi - vb + 1, ai - va, bi - vb, i, j, m))
    return specs


def _first_ratio_specs(theta, pairs, vpairs, n):
    specs = []
    for k in range(n):
        m = theta[k]
        if m == 0:
            continue
        a, b = pairs[k]
        specs.append((1, -1, 1, 0, None, None, m))
        specs.append((a + 1, b, a + 1, b + 1, k, None, m))
    for i in range(n):
        m = theta[i]
        if m == 0:
            continue
        ai, bi = pairs[i]
        for j in range(i + 1, n):
            aj, bj = pairs[j]
            specs.append((ai - aj + 1, bi - bj - 1, ai - aj + 1, bi - bj, i, j, m))
            va, vb = vpairs[j]
            specs.append((ai - va, bi - vb + 1, ai - va, bi - vb, i, j, m))
    return specs


def _specs_hit_zero_denominator(specs) -> bool:
    for _, _, ad, bd, _, _, m in specs:
        if bd == 0 and -ad in range(m):
            return True
    return False


def _specs_exact(specs) -> QTRational:
    out = QTRational.one()
    for an, bn, ad, bd, _, _, m in specs:
        for l in range(m):
            out = out * _om(an + l, bn)
            out = out / _nonzero(_om(ad + l, bd), "prefactor denominator")
    return out


def _eps_one_minus(a: int, b: int, wi: int, wj: int) -> EpsPolynomial:
    """(1 + wj e) - q^a t^b (1 + wi e), the cleared form of 1 - x where x
    carries the unit ratio (1 + wi e)/(1 + wj e)."""
    mono = QTRational.from_monomial(1, a, b)
    return EpsPolynomial(
        [QTRational.one() - mono, QTRational(Q(wj)) - mono * QTRational(Q(wi))]
    )


def _specs_eps(specs, weights):
    num = EpsPolynomial([QTRational.one()])
    den = EpsPolynomial([QTRational.one()])
    for an, bn, ad, bd, ii, jj, m in specs:
        wi = 0 if ii is None else weights[ii]
        wj = 0 if jj is None else weights[jj]
        for l in range(m):
            num = num * _eps_one_minus(an + l, bn, wi, wj)
            den = den * _eps_one_minus(ad + l, bd, wi, wj)
    return num, den


def _eps_family(pairs, weights):
    """Arguments as perturbation series: monomial * (1 + w*eps) per entry,
    or plain constants when no weights are given."""
    out = []
    for k, (a, b) in enumerate(pairs):
        mono = QTRational.from_monomial(1, a, b)
        if weights is None:
            out.append(EpsPolynomial([mono]))
        else:
            out.append(EpsPolynomial([mono, mono * QTRational(Q(weights[k]))]))
    return out


def _det_ratio_parts(vs, rows_den, rows_num, tshift: int, n: int):
    """Cleared determinant and its denominator:
    det[v_i^(n-j) (R_i - t^(j+tshift) N_i)] and Delta(v) prod_i R_i."""
    one = EpsPolynomial([QTRational.one()])
    rows = []
    for i in range(n):
        powers = [one]
        for _ in range(n - 1):
            powers.append(powers[-1] * vs[i])
        row = []
        for j in range(1, n + 1):
            row.append(
                powers[n - j]
                * (rows_den[i] - rows_num[i].scale(_T_MONO ** (j + tshift)))
            )
        rows.append(row)
    det = ring_det(rows)
    den = one
    for i in range(n):
        for j in range(i + 1, n):
            den = den * (vs[i] - vs[j])
    for r in rows_den:
        den = den * r
    return det, den


def _resolve_direction(direction, count: int):
    if direction is None:
        return tuple(range(1, count + 1))
    w = tuple(int(x) for x in direction)
    if len(w) != count or len(set(w)) != count:
        raise ValueError("direction needs one distinct weight per argument")
    return w


@lru_cache(maxsize=None)
def _second_form(theta, pairs, direction):
    n = len(theta)
    full = pairs + ((0, -1),)
    vpairs = tuple((a + theta[i], b) for i, (a, b) in enumerate(pairs))
    if len(set(vpairs)) != n:
        raise DegenerateConfig("shifted arguments collide")
    specs = _second_ratio_specs(theta, full, vpairs, n)
    det_degenerate = any(
        (a, b + 1) == vpairs[i] for (a, b) in full for i in range(n)
    )
    need = det_degenerate or _specs_hit_zero_denominator(specs)
    resolved = _resolve_direction(direction, n + 1)
    weights = resolved if need else None
    us = _eps_family(full, weights)
    vs = [
        _eps_family([vpairs[i]], None if weights is None else (weights[i],))[0]
        for i in range(n)
    ]
    rows_den = []
    rows_num = []
    for i in range(n):
        rden = EpsPolynomial([QTRational.one()])
        rnum = EpsPolynomial([QTRational.one()])
        for k in range(n + 1):
            rden = rden * (us[k].scale(_T_MONO) - vs[i])
            rnum = rnum * (us[k] - vs[i])
        rows_den.append(rden)
        rows_num.append(rnum)
    det, det_den = _det_ratio_parts(vs, rows_den, rows_num, 0, n)
    if not need:
        return _specs_exact(specs) * eps_limit(det, det_den), False
    pre_num, pre_den = _specs_eps(specs, weights)
    return eps_limit(pre_num * det, pre_den * det_den), True


def C_coefficient(theta, u: USpec, params: str = "qt", direction=None) -> CValue:
    """Closed-form expansion coefficient at a monomial argument family.

    A negative entry anywhere in theta gives zero by convention.  With
    params "tq" the two parameters exchange roles throughout.  direction,
    when given, supplies the perturbation weights used if regularization
    is needed; results must not depend on it.
    """
    theta = tuple(int(x) for x in theta)
    if len(theta) != len(u):
        raise ValueError("theta length must match the argument family")
    if any(x < 0 for x in theta):
        return CValue(QTRational.zero(), False)
    if params == "tq":
        inner = C_coefficient(theta, u.swapped(), "qt", direction)
        return CValue(inner.value.swap_qt(), inner.regularized)
    if params != "qt":
        raise ValueError("params must be 'qt' or 'tq'")
    if len(u) == 0:
        return CValue(QTRational.one(), False)
    direction = None if direction is None else tuple(int(x) for x in direction)
    value, regularized = _second_form(theta, u.pairs, direction)
    return CValue(value, regularized)


def C_first_form(theta, u: USpec, direction=None) -> CValue:
    """The alternative closed form, kept as an independent cross-check.

    Differs from C_coefficient in its prefactor and in folding the extra
    argument into the determinant entries instead of appending it to the
    family; the two must agree wherever both are defined.
    """
    theta = tuple(int(x) for x in theta)
    n = len(u)
    if len(theta) != n:
        raise ValueError("theta length must match the argument family")
    if any(x < 0 for x in theta):
        return CValue(QTRational.zero(), False)
    if n == 0:
        return CValue(QTRational.one(), False)
    pairs = u.pairs
    vpairs = tuple((a + theta[i], b) for i, (a, b) in enumerate(pairs))
    if len(set(vpairs)) != n:
        raise DegenerateConfig("shifted arguments collide")
    specs = _first_ratio_specs(theta, pairs, vpairs, n)
    det_degenerate = any(
        (a, b + 1) == vpairs[i] for (a, b) in pairs for i in range(n)
    ) or any(vp == (0, 0) for vp in vpairs)
    need = det_degenerate or _specs_hit_zero_denominator(specs)
    resolved = _resolve_direction(direction, n)
    weights = resolved if need else None
    us = _eps_family(pairs, weights)
    vs = [
        _eps_family([vpairs[i]], None if weights is None else (weights[i],))[0]
        for i in range(n)
    ]
    one = EpsPolynomial([QTRational.one()])
    rows_den = []
    rows_num = []
    for i in range(n):
        rden = one - vs[i]
        rnum = one - vs[i].scale(_T_MONO)
        for k in range(n):
            rden = rden * (us[k].scale(_T_MONO) - vs[i])
            rnum = rnum * (us[k] - vs[i])
        rows_den.append(rden)
        rows_num.append(rnum)
    det, det_den = _det_ratio_parts(vs, rows_den, rows_num, -1, n)
    scale = QTRational.from_monomial(1, 0, sum(theta))
    if not need:
        value = scale * _specs_exact(specs) * eps_limit(det, det_den)
        return CValue(value, False)
    pre_num, pre_den = _specs_eps(specs, weights)
    value = scale * eps_limit(pre_num * det, pre_den * det_den)
    return CValue(value, True)


def c_k(parts, k: int) -> QTRational:
    """One-variable restriction coefficient for decrementing part k.

    For a partition input the value is zero whenever the decrement breaks
    weak decrease; for other integer sequences the product formula is
    evaluated as written.
    """
    lam = tuple(int(x) for x in parts)
    if not 1 <= k <= len(lam):
        raise IndexError("part index out of range")
    is_partition = all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    ) and (not lam or lam[-1] >= 0)
    if is_partition:
        lower = lam[k] if k < len(lam) else 0
        if lam[k - 1] - 1 < lower:
            return QTRational.zero()
    out = QTRational.one()
    for i in range(1, k):
        gap = lam[i - 1] - lam[k - 1]
        out = out * one_minus(LaurentMonomial(1, gap + 1, k - i - 1))
        out = out / _nonzero(
            one_minus(LaurentMonomial(1, gap + 1, k - i)), "restriction denominator"
        )
        out = out * one_minus(LaurentMonomial(1, gap, k - i + 1))
        out = out / _nonzero(
            one_minus(LaurentMonomial(1, gap, k - i)), "restriction denominator"
        )
    return out


def check_lemma2(parts, nvars: int = 3) -> bool:
    """Exact check that the coefficient of the last variable, to the first
    power, in the dual basis element over nvars+1 variables equals the
    weighted sum of decremented elements over nvars variables."""
    lam = check_partition(parts)
    lhs = expand_in_variables(macdonald_Q(lam), nvars + 1).coeff_of_last_var(1)
    ratio = one_minus(LaurentMonomial(1, 0, 1)) / one_minus(
        LaurentMonomial(1, 1, 0)
    )
    rhs = PolyInVars.zero(nvars)
    for k in range(1, len(lam) + 1):
        ck = c_k(lam, k)
        if ck.is_zero():
            continue
        mu = list(lam)
        mu[k - 1] -= 1
        while mu and mu[-1] == 0:
            mu.pop()
        rhs = rhs + expand_in_variables(macdonald_Q(tuple(mu)), nvars).scale(
            ratio * ck
        )
    return lhs == rhs


def pieri_psi(r: int, mu) -> dict:
    """Product coefficients of a one-row element against a fixed element,
    reindexed by the added-cells vector over the fixed element's rows.

    Computed by expanding the product in the dual basis, not from a
    closed form.
    """
    if r < 0:
        raise ValueError("row size must be nonnegative")
    mu = check_partition(mu)
    n = len(mu)
    product = modified_complete(r) * macdonald_Q(mu)
    out = {}
    for kappa, coeff in expand_in_Q_basis(product).items():
        if len(kappa) > n + 1:
            raise InternalInvariant("product support too long")
        padded = kappa + (0,) * (n + 1 - len(kappa))
        theta = tuple(padded[i] - mu[i] for i in range(n))
        if any(x < 0 for x in theta):
            raise InternalInvariant("product support below the base element")
        out[theta] = coeff
    return out


def check_recurrence_5(theta, u: USpec) -> bool:
    """Exact check of the first recurrence the coefficients satisfy,
    relating shifts of theta against q-shifts of the arguments."""
    theta = tuple(int(x) for x in theta)
    n = len(u)
    if len(theta) != n:
        raise ValueError("theta length must match the argument family")
    pairs = u.pairs
    vpairs = tuple((a + theta[i], b) for i, (a, b) in enumerate(pairs))

    def bumped(i):
        return theta[:i] + (theta[i] + 1,) + theta[i + 1 :]

    lhs = QTRational.zero()
    for i in range(n):
        coeff = QTRational.one()
        for k in range(i):
            da = pairs[k][0] - pairs[i][0]
            db = pairs[k][1] - pairs[i][1]
            coeff = coeff * _om(da + 1, db - 1) / _omd(da + 1, db)
            coeff = coeff * _om(da, db + 1) / _omd(da, db)
        lhs = lhs + coeff * C_coefficient(bumped(i), u.shift_q(i, -1)).value
    coeff = QTRational.one()
    for a, b in pairs:
        coeff = coeff * _om(a + 1, b) / _omd(a + 1, b + 1)
        coeff = coeff * _om(a, b + 2) / _omd(a, b + 1)
    lhs = lhs + coeff * C_coefficient(theta, u.shift_all_q(1)).value

    rhs = C_coefficient(theta, u).value
    for i in range(n):
        coeff = QTRational.one()
        for k in range(i):
            da = vpairs[k][0] - vpairs[i][0]
            db = vpairs[k][1] - vpairs[i][1]
            coeff = coeff * _om(da, db - 1) / _omd(da, db)
            coeff = coeff * _om(da - 1, db + 1) / _omd(da - 1, db)
        rhs = rhs + coeff * C_coefficient(bumped(i), u).value
    return lhs == rhs


def check_remark_recurrence(theta, u: USpec) -> bool:
    """Exact check of the second recurrence, relating decrements of theta
    against q-shifts; terms with a negative entry drop out."""
    theta = tuple(int(x) for x in theta)
    n = len(u)
    if len(theta) != n:
        raise ValueError("theta length must match the argument family")
    pairs = u.pairs
    vpairs = tuple((a + theta[i], b) for i, (a, b) in enumerate(pairs))

    def dropped(k):
        return theta[:k] + (theta[k] - 1,) + theta[k + 1 :]

    lhs = C_coefficient(theta, u).value
    for k in range(n):
        if theta[k] == 0:
            continue
        coeff = QTRational.one()
        for i in range(k + 1, n):
            da = vpairs[k][0] - vpairs[i][0]
            db = vpairs[k][1] - vpairs[i][1]
            coeff = coeff * _om(da, db - 1) / _omd(da, db)
            coeff = coeff * _om(da - 1, db + 1) / _omd(da - 1, db)
        lhs = lhs + coeff * C_coefficient(dropped(k), u).value

    rhs = C_coefficient(theta, u.shift_all_q(-1)).value
    for k in range(n):
        if theta[k] == 0:
            continue
        a, b = pairs[k]
        coeff = _om(a + 1, b) / _omd(a + 1, b + 1)
        coeff = coeff * _om(a, b + 2) / _omd(a, b + 1)
        for i in range(k + 1, n):
            da = a - pairs[i][0]
            db = b - pairs[i][1]
            coeff = coeff * _om(da + 1, db - 1) / _omd(da + 1, db)
            coeff = coeff * _om(da, db + 1) / _omd(da, db)
        rhs = rhs + coeff * C_coefficient(dropped(k), u.shift_q(k, 1)).value
    return lhs == rhs


def clear_coefficient_cache() -> None:
    _second_form.cache_clear()

"""Difference operators in finitely many variables and the determinant kernel.

The row operator acts by q-shifting one variable at a time with
rational-function multipliers; its determinant refinement tracks an
auxiliary indeterminate through subset expansion.  The kernel function
is the determinant-over-Vandermonde object whose functional equations
drive the coefficient checks, evaluated here at exact points.
"""

import random
from itertools import combinations

from .errors import (
    DegenerateConfig,
    IdentityViolated,
    InternalInvariant,
    NotDivisible,
    NotSymmetric,
)
from .linalg import ring_det
from .rational import Q, QTRational
from .symfunc import PolyInVars, vandermonde

_TV = QTRational.from_monomial(1, 0, 1)


class APolynomial:
    """Dense polynomial in one auxiliary indeterminate.

    Coefficients may live in any exact ring with +, -, *, is_zero;
    index equals the power of the indeterminate.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cl = list(coeffs)
        while cl and cl[-1].is_zero():
            cl.pop()
        self.coeffs = cl

    @classmethod
    def zero(cls) -> "APolynomial":
        return cls([])

    @classmethod
    def one(cls) -> "APolynomial":
        return cls([QTRational.one()])

    @classmethod
    def constant(cls, value) -> "APolynomial":
        return cls([value])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QTRational.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, APolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "APolynomial") -> "APolynomial":
        long, short = self.coeffs, other.coeffs
        if len(long) < len(short):
            long, short = short, long
        out = list(long)
        for k, c in enumerate(short):
            out[k] = out[k] + c
        return APolynomial(out)

    def __neg__(self) -> "APolynomial":
        return APolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "APolynomial") -> "APolynomial":
        return self + (-other)

    def __mul__(self, other: "APolynomial") -> "APolynomial":
        if not self.coeffs or not other.coeffs:
            return APolynomial([])
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                prod = ci * cj
                if out[i + j] is None:
                    out[i + j] = prod
                else:
                    out[i + j] = out[i + j] + prod
        return APolynomial(out)

    def scale(self, factor) -> "APolynomial":
        return APolynomial([c * factor for c in self.coeffs])

    def evaluate(self, point):
        """Value at a given scalar, by Horner evaluation."""
        if not self.coeffs:
            return QTRational.zero()
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * point + c
        return acc

    def div_one_plus_a(self) -> "APolynomial":
        """Exact quotient by (1 + a); requires vanishing at -1."""
        rem = QTRational.zero() if not self.coeffs else None
        out = []
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else c - acc
            out.append(acc)
        if out:
            rem = out.pop()
        if rem is not None and not rem.is_zero():
            raise NotDivisible("nonzero value at -1")
        out.reverse()
        return APolynomial(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, c in enumerate(self.coeffs):
            name = "" if k == 0 else ("*a" if k == 1 else f"*a^{k}")
            bits.append(f"({c}){name}")
        return " + ".join(bits)


def apply_E(f: PolyInVars) -> PolyInVars:
    """Row eigenoperator: q-shift each variable with its multiplier.

    The multiplier denominators are cleared against the Vandermonde
    determinant, so the division at the end is exact precisely on
    symmetric inputs.
    """
    n = f.nvars
    if n == 0:
        raise ValueError("needs at least one variable")
    total = PolyInVars.zero(n)
    for i in range(n):
        term = f.q_shift_var(i)
        for k in range(n):
            if k == i:
                continue
            term = term * (
                PolyInVars.variable(n, i).scale(_TV)
                - PolyInVars.variable(n, k)
            )
        rest = [k for k in range(n) if k != i]
        for a in range(len(rest)):
            for b in range(a + 1, len(rest)):
                term = term * (
                    PolyInVars.variable(n, rest[a])
                    - PolyInVars.variable(n, rest[b])
                )
        if i % 2:
            total = total - term
        else:
            total = total + term
    try:
        return total.exact_div(vandermonde(n))
    except NotDivisible:
        raise NotSymmetric("operator image not divisible: input asymmetric")


def apply_D(f: PolyInVars) -> list:
    """Determinant eigenoperator, expanded by q-shifted variable subsets.

    Returns the coefficient list in the auxiliary indeterminate: entry d
    sums the shifted images over all d-element subsets, weighted by the
    Vandermonde determinant with those variables scaled by t, divided
    exactly by the plain Vandermonde determinant.
    """
    n = f.nvars
    if n == 0:
        raise ValueError("needs at least one variable")
    delta = vandermonde(n)
    out = []
    for d in range(n + 1):
        acc = PolyInVars.zero(n)
        for subset in combinations(range(n), d):
            chosen = set(subset)
            shifted = f
            for i in subset:
                shifted = shifted.q_shift_var(i)
            ys = [
                PolyInVars.variable(n, i).scale(_TV)
                if i in chosen
                else PolyInVars.variable(n, i)
                for i in range(n)
            ]
            weight = PolyInVars.one(n)
            for a in range(n):
                for b in range(a + 1, n):
                    weight = weight * (ys[a] - ys[b])
            acc = acc + weight * shifted
        try:
            out.append(acc.exact_div(delta))
        except NotDivisible:
            raise NotSymmetric(
                "operator image not divisible: input asymmetric"
            )
    return out


def e_eigenvalue(parts, n: int) -> QTRational:
    """Sum of q^part * t^(n-i) over the first n rows, zero-padded."""
    padded = tuple(parts) + (0,) * (n - len(parts))
    total = QTRational.zero()
    for i in range(n):
        total = total + QTRational.from_monomial(1, padded[i], n - 1 - i)
    return total


def d_eigenvalue(parts, n: int) -> APolynomial:
    """Product of (1 + a q^part t^(n-i)) over the first n rows."""
    padded = tuple(parts) + (0,) * (n - len(parts))
    out = APolynomial.one()
    for i in range(n):
        out = out * APolynomial(
            [QTRational.one(), QTRational.from_monomial(1, padded[i], n - 1 - i)]
        )
    return out


def kernel_det(u, v, tval: QTRational) -> APolynomial:
    """Determinant kernel: det over the Vandermonde of the second family.

    Entry (i,j) is v_i^(m-j) (1 + a t^j prod_k (u_k-v_i)/(tu_k-v_i));
    the row denominators are cleared before the determinant and divided
    back out afterwards, so the result is exact.
    """
    m = len(u)
    if len(v) != m or m == 0:
        raise ValueError("argument families must share a positive length")
    dens = []
    nums = []
    for vi in v:
        den = QTRational.one()
        num = QTRational.one()
        for uk in u:
            den = den * (tval * uk - vi)
            num = num * (uk - vi)
        if den.is_zero():
            raise DegenerateConfig("cleared row denominator vanishes")
        dens.append(den)
        nums.append(num)
    delta = QTRational.one()
    for i in range(m):
        for j in range(i + 1, m):
            delta = delta * (v[i] - v[j])
    if delta.is_zero():
        raise DegenerateConfig("second family not pairwise distinct")
    rows = []
    for i in range(m):
        row = []
        for j in range(1, m + 1):
            power = v[i] ** (m - j)
            row.append(
                APolynomial(
                    [power * dens[i], power * tval**j * nums[i]]
                )
            )
        rows.append(row)
    det = ring_det(rows)
    scale = delta
    for den in dens:
        scale = scale * den
    return det.scale(scale.inverse())


def sample_kernel_config(rng: random.Random, n: int):
    """Random admissible monomial arguments shaped like the row
    specialization: u_i = q^(a_i) t^(n-i) with the reciprocal-of-t entry
    appended, v_i = q^(a_i + theta_i) u_i / q^(a_i) with zero appended.
    """
    while True:
        steps = [rng.randint(0, 2) for _ in range(n)]
        exps = []
        acc = 0
        for s in reversed(steps):
            acc += s
            exps.append(acc)
        exps.reverse()
        thetas = [rng.randint(0, 3) for _ in range(n)]
        us = [
            QTRational.from_monomial(1, exps[i], n - 1 - i) for i in range(n)
        ]
        us.append(QTRational.from_monomial(1, 0, -1))
        vs = [
            QTRational.from_monomial(1, exps[i] + thetas[i], n - 1 - i)
            for i in range(n)
        ]
        vs.append(QTRational.zero())
        admissible = True
        for vi in vs:
            for uk in us:
                if (_TV * uk - vi).is_zero():
                    admissible = False
        if admissible:
            return tuple(us), tuple(vs)


_POOL_LIMIT = 9


def _draw_scalar(rng: random.Random) -> QTRational:
    num = rng.randint(1, _POOL_LIMIT) * rng.choice((1, -1))
    den = rng.randint(1, _POOL_LIMIT)
    return QTRational(Q(num, den))


def _distinct(values) -> bool:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if (values[i] - values[j]).is_zero():
                return False
    return True


def _kernel_admissible(u, v, tval) -> bool:
    if not _distinct(v):
        return False
    for vi in v:
        for uk in u:
            if (tval * uk - vi).is_zero():
                return False
    return True


def _replace(seq, index, value):
    out = list(seq)
    out[index] = value
    return tuple(out)


def _lemma_point(rng: random.Random, m: int):
    """Draw one exact evaluation point, or None when inadmissible."""
    q0 = _draw_scalar(rng)
    t0 = _draw_scalar(rng)
    for banned in (0, 1):
        if (q0 - QTRational(banned)).is_zero():
            return None
        if (t0 - QTRational(banned)).is_zero():
            return None
    u = tuple(_draw_scalar(rng) for _ in range(m))
    v = tuple(_draw_scalar(rng) for _ in range(m))
    if not (_distinct(u) and _distinct(v)):
        return None
    configs = [(u, v)]
    for i in range(m):
        configs.append((u, _replace(v, i, v[i] / q0)))
        configs.append((_replace(u, i, q0 * u[i]), v))
        configs.append((u, _replace(v, i, q0 * v[i])))
        configs.append((_replace(u, i, u[i] / q0), v))
    for cu, cv in configs:
        if not _kernel_admissible(cu, cv, t0):
            return None
    for vi in v:
        for uk in u:
            if (uk - q0 * vi).is_zero():
                return None
    return q0, t0, u, v


def _first_equation_sides(q0, t0, u, v):
    m = len(u)
    lhs = APolynomial.zero()
    rhs = APolynomial.zero()
    for i in range(m):
        coeff = QTRational.one()
        for k in range(m):
            if k != i:
                coeff = coeff * (v[i] / t0 - v[k]) / (v[i] - v[k])
            coeff = coeff * (
                (QTRational.one() - v[i] / u[k])
                / (QTRational.one() - v[i] / (t0 * u[k]))
            )
        lhs = lhs + kernel_det(u, _replace(v, i, v[i] / q0), t0).scale(coeff)
        coeff = QTRational.one()
        for k in range(m):
            if k != i:
                coeff = coeff * (u[k] / t0 - u[i]) / (u[k] - u[i])
            coeff = coeff * (
                (QTRational.one() - v[k] / u[i])
                / (QTRational.one() - v[k] / (t0 * u[i]))
            )
        rhs = rhs + kernel_det(_replace(u, i, q0 * u[i]), v, t0).scale(coeff)
    return lhs, rhs


def _second_equation_sides(q0, t0, u, v):
    m = len(u)
    lhs = APolynomial.zero()
    rhs = APolynomial.zero()
    for i in range(m):
        coeff = QTRational.one()
        for k in range(m):
            if k != i:
                coeff = coeff * (t0 * v[i] - v[k]) / (v[i] - v[k])
            coeff = coeff * (
                (QTRational.one() - q0 * v[i] / (t0 * u[k]))
                / (QTRational.one() - q0 * v[i] / u[k])
            )
        lhs = lhs + kernel_det(u, _replace(v, i, q0 * v[i]), t0).scale(coeff)
        coeff = QTRational.one()
        for k in range(m):
            if k != i:
                coeff = coeff * (t0 * u[k] - u[i]) / (u[k] - u[i])
            coeff = coeff * (
                (QTRational.one() - q0 * v[k] / (t0 * u[i]))
                / (QTRational.one() - q0 * v[k] / u[i])
            )
        rhs = rhs + kernel_det(_replace(u, i, u[i] / q0), v, t0).scale(coeff)
    return lhs, rhs


def check_lemma1(n: int, samples: int, seed: int) -> list:
    """Exact random-point verification of both functional equations.

    Returns the two per-equation reports; any mismatch raises with the
    witness point.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    rng = random.Random(seed)
    m = n + 1
    done = 0
    attempts = 0
    while done < samples:
        attempts += 1
        if attempts > 400 * samples + 400:
            raise InternalInvariant("rejection sampling exhausted")
        point = _lemma_point(rng, m)
        if point is None:
            continue
        q0, t0, u, v = point
        witness = {
            "q": str(q0),
            "t": str(t0),
            "u": [str(x) for x in u],
            "v": [str(x) for x in v],
        }
        lhs, rhs = _first_equation_sides(q0, t0, u, v)
        if lhs != rhs:
            raise IdentityViolated(f"first equation fails at {witness}")
        lhs, rhs = _second_equation_sides(q0, t0, u, v)
        if lhs != rhs:
            raise IdentityViolated(f"second equation fails at {witness}")
        done += 1
    return [
        {"lemma": "1i", "n": n, "samples": samples, "failures": []},
        {"lemma": "1ii", "n": n, "samples": samples, "failures": []},
    ]

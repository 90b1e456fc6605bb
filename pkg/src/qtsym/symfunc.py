"""Symmetric functions over the field of rational functions in q and t.

Everything is stored in the power-sum basis, where the two-parameter
scalar product is diagonal.  The orthogonal basis elements are built by
variable peeling over horizontal strips, unitriangularly over monomial
symmetric functions; finite-variable expansion provides the bridge to
the difference-operator checks.
"""

import threading

from .errors import DegreeCapExceeded, NotDivisible
from .linalg import invert_matrix, solve_linear
from .partitions import (
    check_partition,
    conjugate,
    dominance_leq,
    partitions_of,
    trim,
    z_factor,
)
from .rational import Q, QTPolynomial, QTRational

_DEGREE_CAP = 24


def set_degree_cap(cap: int) -> int:
    """Set the weight ceiling for products and basis construction."""
    global _DEGREE_CAP
    if cap < 1:
        raise ValueError("degree cap must be at least 1")
    old = _DEGREE_CAP
    _DEGREE_CAP = cap
    return old


def get_degree_cap() -> int:
    return _DEGREE_CAP


def _const(c) -> QTRational:
    return QTRational.from_monomial(c, 0, 0)


class SymFunc:
    """Element of the symmetric-function algebra in power-sum coordinates.

    Immutable; terms map trimmed partitions to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        clean = {}
        for parts, coeff in terms.items():
            key = check_partition(parts)
            if not coeff.is_zero():
                if key in clean:
                    raise ValueError(f"duplicate key {parts}")
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "SymFunc":
        out = object.__new__(cls)
        out.terms = terms
        return out

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({(): QTRational.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def coeff(self, parts) -> QTRational:
        return self.terms.get(trim(parts), QTRational.zero())

    def weights(self) -> set:
        return {sum(parts) for parts in self.terms}

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            if key in out:
                total = out[key] + coeff
                if total.is_zero():
                    del out[key]
                else:
                    out[key] = total
            else:
                out[key] = coeff
        return SymFunc._raw(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, factor: QTRational) -> "SymFunc":
        if factor.is_zero():
            return SymFunc.zero()
        return SymFunc._raw(
            {key: coeff * factor for key, coeff in self.terms.items()}
        )

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        # power sums are algebraically independent: p_lam * p_mu merges parts
        cap = _DEGREE_CAP
        out = {}
        for ka, ca in self.terms.items():
            wa = sum(ka)
            for kb, cb in other.terms.items():
                if wa + sum(kb) > cap:
                    continue
                key = tuple(sorted(ka + kb, reverse=True))
                prod = ca * cb
                if key in out:
                    total = out[key] + prod
                    if total.is_zero():
                        del out[key]
                    else:
                        out[key] = total
                else:
                    out[key] = prod
        return SymFunc._raw(out)

    def map_coeffs(self, fn) -> "SymFunc":
        out = {}
        for key, coeff in self.terms.items():
            image = fn(coeff)
            if not image.is_zero():
                out[key] = image
        return SymFunc._raw(out)

    def graded_piece(self, weight: int) -> "SymFunc":
        return SymFunc._raw(
            {k: c for k, c in self.terms.items() if sum(k) == weight}
        )

    def to_json(self) -> dict:
        return {
            "basis": "p",
            "terms": [
                {"partition": list(key), "coeff": coeff.to_json()}
                for key, coeff in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        if data.get("basis") != "p":
            raise ValueError(f"unsupported basis {data.get('basis')!r}")
        return cls(
            {
                tuple(item["partition"]): QTRational.from_json(item["coeff"])
                for item in data["terms"]
            }
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key, coeff in sorted(self.terms.items()):
            name = "p" + "".join(f"[{part}]" for part in key) if key else "1"
            bits.append(f"({coeff})*{name}")
        return " + ".join(bits)


def _check_cap(weight: int) -> None:
    if weight > _DEGREE_CAP:
        raise DegreeCapExceeded(f"weight {weight} above cap {_DEGREE_CAP}")


def power_sum(parts) -> SymFunc:
    key = check_partition(parts)
    _check_cap(sum(key))
    return SymFunc({key: QTRational.one()})


_PAIR_NORM_CACHE: dict = {}
_PAIR_WEIGHT_CACHE: dict = {}


def pair_norm(parts) -> QTRational:
    """Diagonal scalar-product factor: product of (1-q^part)/(1-t^part)."""
    key = trim(parts)
    cached = _PAIR_NORM_CACHE.get(key)
    if cached is None:
        cached = QTRational.one()
        for part in key:
            cached = cached * QTRational(
                _one_minus_power(part, True), _one_minus_power(part, False)
            )
        _PAIR_NORM_CACHE[key] = cached
    return cached


def _pair_weight(key) -> QTRational:
    """Full diagonal weight: centralizer order times the parameter factor."""
    cached = _PAIR_WEIGHT_CACHE.get(key)
    if cached is None:
        cached = pair_norm(key) * z_factor(key)
        _PAIR_WEIGHT_CACHE[key] = cached
    return cached


def _one_minus_power(k: int, use_q: bool):
    exp = (k, 0) if use_q else (0, k)
    return QTPolynomial({(0, 0): Q(1), exp: Q(-1)})


def scalar_product(f: SymFunc, g: SymFunc) -> QTRational:
    """Bilinear pairing, diagonal on power sums with weight z * pair_norm."""
    total = QTRational.zero()
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for key, ca in small.terms.items():
        cb = large.terms.get(key)
        if cb is None:
            continue
        total = total + ca * cb * _pair_weight(key)
    return total


def elementary(k: int) -> SymFunc:
    """Elementary symmetric function as a power-sum combination."""
    if k < 0:
        return SymFunc.zero()
    _check_cap(k)
    terms = {}
    for lam in partitions_of(k):
        sign = -1 if (k - len(lam)) % 2 else 1
        terms[lam] = _const(Q(sign, z_factor(lam)))
    return SymFunc(terms)


def complete(k: int) -> SymFunc:
    """Complete homogeneous symmetric function."""
    if k < 0:
        return SymFunc.zero()
    _check_cap(k)
    return SymFunc(
        {lam: _const(Q(1, z_factor(lam))) for lam in partitions_of(k)}
    )


def modified_complete(k: int) -> SymFunc:
    """One-row member of the dual orthogonal basis.

    Power-sum coefficients carry the factor product (1-t^part)/(1-q^part),
    the reciprocal of the pairing weight.
    """
    if k < 0:
        return SymFunc.zero()
    _check_cap(k)
    terms = {}
    for lam in partitions_of(k):
        terms[lam] = pair_norm(lam).inverse() / z_factor(lam)
    return SymFunc(terms)


def g_product(parts) -> SymFunc:
    """Product of one-row dual basis elements over the given parts."""
    out = SymFunc.one()
    for part in trim(parts):
        out = out * modified_complete(part)
    return out


def e_product(parts) -> SymFunc:
    out = SymFunc.one()
    for part in trim(parts):
        out = out * elementary(part)
    return out


_DOMAIN_LOCK = threading.RLock()
_MONO_CACHE: dict = {}
_P_CACHE: dict = {}
_Q_CACHE: dict = {}
_NORM_CACHE: dict = {}
_PSUM_VARS_CACHE: dict = {}
_BRANCH_CACHE: dict = {}


def clear_caches() -> None:
    with _DOMAIN_LOCK:
        _MONO_CACHE.clear()
        _P_CACHE.clear()
        _Q_CACHE.clear()
        _NORM_CACHE.clear()
        _PSUM_VARS_CACHE.clear()
        _PAIR_NORM_CACHE.clear()
        _PAIR_WEIGHT_CACHE.clear()
        _BRANCH_CACHE.clear()


def _power_sum_in_vars(parts, n: int) -> dict:
    """Expand a power-sum product into integer monomial coefficients."""
    out = {(0,) * n: 1}
    for part in parts:
        nxt = {}
        for expo, coeff in out.items():
            for i in range(n):
                key = expo[:i] + (expo[i] + part,) + expo[i + 1 :]
                nxt[key] = nxt.get(key, 0) + coeff
        out = nxt
    return out


def monomial_sym(parts) -> SymFunc:
    """Monomial symmetric function via exact inversion of the counting
    matrix from power-sum expansions."""
    parts = check_partition(parts)
    weight = sum(parts)
    if weight == 0:
        return SymFunc.one()
    _check_cap(weight)
    with _DOMAIN_LOCK:
        cached = _MONO_CACHE.get(weight)
        if cached is None:
            plist = list(partitions_of(weight))
            rows = []
            for mu in plist:
                expansion = _power_sum_in_vars(mu, weight)
                row = []
                for lam in plist:
                    padded = lam + (0,) * (weight - len(lam))
                    row.append(Q(expansion.get(padded, 0)))
                rows.append(row)
            inv = invert_matrix(rows, Q(1))
            cached = {}
            for i, lam in enumerate(plist):
                cached[lam] = SymFunc(
                    {
                        mu: _const(inv[i][j])
                        for j, mu in enumerate(plist)
                        if inv[i][j]
                    }
                )
            _MONO_CACHE[weight] = cached
    return cached[parts]


def _one_minus_qt(a: int, b: int) -> QTPolynomial:
    return QTPolynomial._raw({(0, 0): Q(1), (a, b): Q(-1)})


def _strip_weight(outer, inner) -> QTRational:
    """Transition weight for peeling one variable across a horizontal strip.

    Product over the squares of the inner shape lying in a row the strip
    meets but in no column it meets, of the arm/leg hook ratio of the inner
    shape divided by the same ratio taken in the outer shape.
    """
    outer_conj = conjugate(outer)
    inner_conj = conjugate(inner)
    rows = [i for i in range(len(outer)) if outer[i] > (inner[i] if i < len(inner) else 0)]
    cols = set()
    for i in rows:
        low = inner[i] if i < len(inner) else 0
        cols.update(range(low + 1, outer[i] + 1))
    out = QTRational.one()
    for i in rows:
        row_len = inner[i] if i < len(inner) else 0
        for j in range(1, row_len + 1):
            if j in cols:
                continue
            arm_in, leg_in = row_len - j, inner_conj[j - 1] - (i + 1)
            arm_out, leg_out = outer[i] - j, outer_conj[j - 1] - (i + 1)
            num = _one_minus_qt(arm_in, leg_in + 1) * _one_minus_qt(arm_out + 1, leg_out)
            den = _one_minus_qt(arm_in + 1, leg_in) * _one_minus_qt(arm_out, leg_out + 1)
            out = out * QTRational(num, den)
    return out


def _horizontal_strips(outer, size: int) -> list:
    """Inner shapes whose difference from outer is a horizontal strip of the size."""
    n = len(outer)
    found = []

    def descend(i: int, remaining: int, prefix: list) -> None:
        if i == n:
            if remaining == 0:
                found.append(trim(tuple(prefix)))
            return
        floor = outer[i + 1] if i + 1 < n else 0
        for v in range(outer[i], floor - 1, -1):
            left = remaining - (outer[i] - v)
            if left < 0:
                break
            prefix.append(v)
            descend(i + 1, left, prefix)
            prefix.pop()

    descend(0, size, [])
    return found


def _branch_coeff(shape, target) -> QTRational:
    """Monomial coefficient of the orthogonal element, by variable peeling.

    Peels the last entry of target as a horizontal strip off shape; summing
    the strip weights over all peeling chains gives the coefficient of the
    target monomial.  Diagonal chains are forced with weight one, so the
    result is unitriangular over dominance.
    """
    if not target:
        return QTRational.one()
    key = (shape, target)
    cached = _BRANCH_CACHE.get(key)
    if cached is not None:
        return cached
    rest = target[:-1]
    total = QTRational.zero()
    for inner in _horizontal_strips(shape, target[-1]):
        if len(inner) > len(rest):
            continue
        if rest and not dominance_leq(rest, inner):
            continue
        coeff = _branch_coeff(inner, rest)
        if not coeff.is_zero():
            total = total + _strip_weight(shape, inner) * coeff
    _BRANCH_CACHE[key] = total
    return total


def _build_orthogonal_weight(weight: int) -> None:
    """Construct all orthogonal elements of one weight via variable peeling.

    Each element is unitriangular over monomials with strictly dominated
    corrections; together with orthogonality under the pairing this pins the
    family down uniquely, and the norm equals the pairing against the leading
    monomial because the earlier monomials span the earlier elements.
    """
    order = list(partitions_of(weight))
    order.reverse()
    for lam in order:
        if lam in _P_CACHE:
            continue
        vec = monomial_sym(lam)
        for mu in order:
            if mu == lam or not dominance_leq(mu, lam):
                continue
            coeff = _branch_coeff(lam, mu)
            if not coeff.is_zero():
                vec = vec + monomial_sym(mu).scale(coeff)
        norm = scalar_product(vec, monomial_sym(lam))
        if norm.is_zero():
            raise ArithmeticError(f"degenerate pairing at {lam}")
        _P_CACHE[lam] = vec
        _NORM_CACHE[lam] = norm


def macdonald_P(parts) -> SymFunc:
    """Orthogonal basis element, unitriangular over monomials."""
    parts = check_partition(parts)
    weight = sum(parts)
    if weight > _DEGREE_CAP:
        raise DegreeCapExceeded(f"weight {weight} above cap {_DEGREE_CAP}")
    if weight == 0:
        return SymFunc.one()
    with _DOMAIN_LOCK:
        if parts not in _P_CACHE:
            _build_orthogonal_weight(weight)
        return _P_CACHE[parts]


def macdonald_norm(parts) -> QTRational:
    """Self-pairing of the orthogonal basis element."""
    parts = check_partition(parts)
    if sum(parts) == 0:
        return QTRational.one()
    macdonald_P(parts)
    with _DOMAIN_LOCK:
        return _NORM_CACHE[parts]


def macdonald_Q(parts) -> SymFunc:
    """Dual normalization: the orthogonal element divided by its norm."""
    parts = check_partition(parts)
    with _DOMAIN_LOCK:
        cached = _Q_CACHE.get(parts)
        if cached is None:
            cached = macdonald_P(parts).scale(macdonald_norm(parts).inverse())
            _Q_CACHE[parts] = cached
    return cached


def install_cache_entry(basis: str, parts, func: SymFunc) -> None:
    """Preload a persisted basis element (used by the cache file loader)."""
    parts = check_partition(parts)
    with _DOMAIN_LOCK:
        if basis == "P":
            _P_CACHE[parts] = func
            if parts not in _NORM_CACHE:
                _NORM_CACHE[parts] = scalar_product(func, func)
        elif basis == "Q":
            _Q_CACHE[parts] = func
        else:
            raise ValueError(f"unknown basis {basis!r}")


def cached_entries() -> list:
    """Snapshot of (basis, partition, SymFunc) for persistence."""
    with _DOMAIN_LOCK:
        out = [("P", k, v) for k, v in sorted(_P_CACHE.items())]
        out += [("Q", k, v) for k, v in sorted(_Q_CACHE.items())]
    return out


def expand_in_Q_basis(f: SymFunc) -> dict:
    """Coefficients against the dual basis, read off through the pairing.

    The coefficient on a given index equals the pairing with the orthogonal
    (undualized) element of the same index.
    """
    out = {}
    for weight in sorted(f.weights()):
        piece = f.graded_piece(weight)
        for kappa in partitions_of(weight):
            c = scalar_product(piece, macdonald_P(kappa))
            if not c.is_zero():
                out[kappa] = c
    return out


def expand_in_g_basis(f: SymFunc) -> dict:
    """Unique expansion in products of one-row dual elements, by exact solve."""
    out = {}
    for weight in sorted(f.weights()):
        piece = f.graded_piece(weight)
        if weight == 0:
            coeff = piece.coeff(())
            if not coeff.is_zero():
                out[()] = coeff
            continue
        mus = list(partitions_of(weight))
        plist = mus
        columns = [g_product(mu) for mu in mus]
        matrix = [
            [col.coeff(rho) for col in columns] for rho in plist
        ]
        rhs = [piece.coeff(rho) for rho in plist]
        solution = solve_linear(matrix, rhs)
        for mu, c in zip(mus, solution):
            if not c.is_zero():
                out[mu] = c
    return out


def omega(f: SymFunc) -> SymFunc:
    """Automorphism exchanging the dual one-row elements with elementaries.

    Acts on a degree-r power sum by (-1)^(r-1) (1-q^r)/(1-t^r).
    """
    out = {}
    for key, coeff in f.terms.items():
        factor = pair_norm(key)
        sign = -1 if (sum(key) - len(key)) % 2 else 1
        image = coeff * factor
        if sign < 0:
            image = -image
        if not image.is_zero():
            out[key] = image
    return SymFunc._raw(out)


def swap_params(f: SymFunc) -> SymFunc:
    return f.map_coeffs(lambda c: c.swap_qt())


def specialize_t_to_q(f: SymFunc) -> SymFunc:
    return f.map_coeffs(lambda c: c.specialize_t_to_q())


class PolyInVars:
    """Polynomial in finitely many variables with rational-function
    coefficients, exponent-dict representation."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict):
        self.nvars = nvars
        clean = {}
        for expo, coeff in terms.items():
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent tuple {expo}")
            if not coeff.is_zero():
                clean[expo] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "PolyInVars":
        out = object.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    @classmethod
    def zero(cls, nvars: int) -> "PolyInVars":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "PolyInVars":
        return cls._raw(nvars, {(0,) * nvars: QTRational.one()})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "PolyInVars":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        expo = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {expo: QTRational.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyInVars):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def _check(self, other: "PolyInVars") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "PolyInVars") -> "PolyInVars":
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            if expo in out:
                total = out[expo] + coeff
                if total.is_zero():
                    del out[expo]
                else:
                    out[expo] = total
            else:
                out[expo] = coeff
        return PolyInVars._raw(self.nvars, out)

    def __neg__(self) -> "PolyInVars":
        return PolyInVars._raw(
            self.nvars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: "PolyInVars") -> "PolyInVars":
        return self + (-other)

    def __mul__(self, other: "PolyInVars") -> "PolyInVars":
        self._check(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if key in out:
                    total = out[key] + prod
                    if total.is_zero():
                        del out[key]
                    else:
                        out[key] = total
                else:
                    out[key] = prod
        return PolyInVars._raw(self.nvars, out)

    def scale(self, factor: QTRational) -> "PolyInVars":
        if factor.is_zero():
            return PolyInVars.zero(self.nvars)
        return PolyInVars._raw(
            self.nvars, {e: c * factor for e, c in self.terms.items()}
        )

    def q_shift_var(self, index: int) -> "PolyInVars":
        """Substitute q times the variable for the variable at the index."""
        out = {}
        for expo, coeff in self.terms.items():
            power = expo[index]
            if power:
                coeff = coeff * QTRational.from_monomial(1, power, 0)
            out[expo] = coeff
        return PolyInVars._raw(self.nvars, out)

    def exact_div(self, divisor: "PolyInVars") -> "PolyInVars":
        """Exact polynomial division under lex order; NotDivisible otherwise."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return PolyInVars.zero(self.nvars)
        lead_d = max(divisor.terms)
        lead_c = divisor.terms[lead_d]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lead_r = max(rem)
            expo = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(e < 0 for e in expo):
                raise NotDivisible("leading monomial not divisible")
            factor = rem[lead_r] / lead_c
            quot[expo] = factor
            for ed, cd in divisor.terms.items():
                key = tuple(a + b for a, b in zip(expo, ed))
                cur = rem.get(key)
                delta = factor * cd
                if cur is None:
                    rem[key] = -delta
                else:
                    total = cur - delta
                    if total.is_zero():
                        del rem[key]
                    else:
                        rem[key] = total
            if lead_r in rem:
                raise NotDivisible("cancellation failed at leading term")
        return PolyInVars._raw(self.nvars, quot)

    def coeff_of_last_var(self, power: int) -> "PolyInVars":
        """Coefficient of the last variable raised to the given power."""
        if self.nvars < 1:
            raise ValueError("no variables")
        out = {}
        for expo, coeff in self.terms.items():
            if expo[-1] == power:
                out[expo[:-1]] = coeff
        return PolyInVars._raw(self.nvars - 1, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for expo in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(expo)
                if e
            )
            bits.append(f"({self.terms[expo]})*{mono or '1'}")
        return " + ".join(bits)


def expand_in_variables(f: SymFunc, n: int) -> PolyInVars:
    """Image of a symmetric function in n variables."""
    out = PolyInVars.zero(n)
    for key, coeff in f.terms.items():
        with _DOMAIN_LOCK:
            expansion = _PSUM_VARS_CACHE.get((key, n))
            if expansion is None:
                ints = _power_sum_in_vars(key, n)
                expansion = PolyInVars._raw(
                    n, {e: _const(c) for e, c in ints.items()}
                )
                _PSUM_VARS_CACHE[(key, n)] = expansion
        out = out + expansion.scale(coeff)
    return out


def vandermonde(n: int) -> PolyInVars:
    """Product of the differences of the variables, earlier minus later."""
    out = PolyInVars.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (
                PolyInVars.variable(n, i) - PolyInVars.variable(n, j)
            )
    return out

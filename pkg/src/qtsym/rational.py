"""Exact arithmetic in the field Q(q,t) of rational functions in two parameters.

Polynomials are sparse dicts mapping (q_exponent, t_exponent) to exact
rational coefficients.  Rational functions keep a polynomial numerator and
denominator; the denominator is normalized to a primitive integer polynomial
with positive leading coefficient under graded-lex order (q before t), and
the fraction is fully reduced by default.  Equality is well defined for
unreduced representatives too, via cross-multiplication.

Also provides Laurent monomials q^a t^b (a, b possibly negative), the
q-Pochhammer product of a Laurent monomial, dense polynomials in a formal
perturbation variable, and the limit of a ratio of such perturbation series.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DivisionByZero, GenuinePole, NotDivisible, PoleAtPoint

try:
    from gmpy2 import gcd as _int_gcd
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is an install dependency
    from fractions import Fraction as Q
    from math import gcd as _int_gcd

_QZERO = Q(0)
_QONE = Q(1)

# When False, arithmetic skips gcd reduction (monomial and content
# normalization still run); equality falls back to cross-multiplication.
_REDUCE = True


def set_reduction(enabled: bool) -> bool:
    """Toggle full gcd reduction of rational functions; returns the old value."""
    global _REDUCE
    old = _REDUCE
    _REDUCE = bool(enabled)
    return old


def _grlex(key: tuple[int, int]) -> tuple[int, int]:
    # graded lex, q before t
    return (key[0] + key[1], key[0])


class QTPolynomial:
    """Sparse polynomial in q and t with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], object] | None = None):
        out: dict[tuple[int, int], object] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent in polynomial term")
                c = c if type(c) is type(_QONE) else Q(c)
                if c:
                    out[(i, j)] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms: dict) -> "QTPolynomial":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "QTPolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QTPolynomial":
        return cls._raw({(0, 0): _QONE})

    @classmethod
    def monomial(cls, coeff, i: int = 0, j: int = 0) -> "QTPolynomial":
        return cls({(i, j): coeff})

    @classmethod
    def var_q(cls) -> "QTPolynomial":
        return cls._raw({(1, 0): _QONE})

    @classmethod
    def var_t(cls) -> "QTPolynomial":
        return cls._raw({(0, 1): _QONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self):
        return self.terms.get((0, 0), _QZERO)

    def lead(self) -> tuple[tuple[int, int], object]:
        key = max(self.terms, key=_grlex)
        return key, self.terms[key]

    def degrees(self) -> tuple[int, int]:
        """Componentwise maximum of q- and t-exponents (0, 0) for the zero polynomial."""
        dq = dt = 0
        for i, j in self.terms:
            if i > dq:
                dq = i
            if j > dt:
                dt = j
        return dq, dt

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]))))

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return QTPolynomial._raw(out)

    def __neg__(self) -> "QTPolynomial":
        return QTPolynomial._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QTPolynomial") -> "QTPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = -c
            else:
                v = v - c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return QTPolynomial._raw(out)

    def __mul__(self, other: "QTPolynomial") -> "QTPolynomial":
        a, b = self.terms, other.terms
        if not a or not b:
            return QTPolynomial._raw({})
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, int], object] = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                v = out.get(k)
                if v is None:
                    out[k] = c1 * c2
                else:
                    out[k] = v + c1 * c2
        return QTPolynomial._raw({k: c for k, c in out.items() if c})

    def scale(self, c) -> "QTPolynomial":
        c = c if type(c) is type(_QONE) else Q(c)
        if not c:
            return QTPolynomial._raw({})
        return QTPolynomial._raw({k: v * c for k, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> "QTPolynomial":
        """Multiply by the monomial q^di t^dj (di, dj >= 0 or divisibility assumed)."""
        return QTPolynomial._raw({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def __pow__(self, n: int) -> "QTPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QTPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def min_exponents(self) -> tuple[int, int]:
        mi = min(i for i, _ in self.terms)
        mj = min(j for _, j in self.terms)
        return mi, mj

    def div_exact(self, other: "QTPolynomial") -> "QTPolynomial":
        """Exact division; raises NotDivisible if the quotient is not polynomial."""
        if not other.terms:
            raise DivisionByZero("division by the zero polynomial")
        if not self.terms:
            return QTPolynomial._raw({})
        (bi, bj), bc = other.lead()
        rem = dict(self.terms)
        quot: dict[tuple[int, int], object] = {}
        bterms = other.terms
        while rem:
            (ai, aj) = max(rem, key=_grlex)
            qi, qj = ai - bi, aj - bj
            if qi < 0 or qj < 0:
                raise NotDivisible("leading term not divisible")
            c = rem[(ai, aj)] / bc
            quot[(qi, qj)] = c
            for (i, j), bcoef in bterms.items():
                k = (i + qi, j + qj)
                v = rem.get(k, _QZERO) - c * bcoef
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return QTPolynomial._raw(quot)

    def eval(self, q0, t0):
        """Evaluate at exact rational (q0, t0)."""
        q0 = q0 if type(q0) is type(_QONE) else Q(q0)
        t0 = t0 if type(t0) is type(_QONE) else Q(t0)
        total = _QZERO
        for (i, j), c in self.terms.items():
            total += c * q0**i * t0**j
        return total

    def swap_qt(self) -> "QTPolynomial":
        return QTPolynomial._raw({(j, i): c for (i, j), c in self.terms.items()})

    def collapse_t_to_q(self) -> "QTPolynomial":
        """Substitute t = q, producing a polynomial in q alone."""
        out: dict[tuple[int, int], object] = {}
        for (i, j), c in self.terms.items():
            k = (i + j, 0)
            v = out.get(k)
            out[k] = c if v is None else v + c
        return QTPolynomial._raw({k: c for k, c in out.items() if c})

    def to_triples(self) -> list:
        items = sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)
        return [[i, j, str(c)] for (i, j), c in items]

    @classmethod
    def from_triples(cls, triples: Iterable) -> "QTPolynomial":
        out: dict[tuple[int, int], object] = {}
        for i, j, c in triples:
            key = (int(i), int(j))
            val = Q(c)
            out[key] = out.get(key, _QZERO) + val
        return cls(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True):
            mono = "*".join(
                ([f"q^{i}" if i > 1 else "q"] if i else []) + ([f"t^{j}" if j > 1 else "t"] if j else [])
            )
            if not mono:
                frag = str(c)
            elif c == 1:
                frag = mono
            elif c == -1:
                frag = "-" + mono
            else:
                frag = f"{c}*{mono}"
            parts.append(frag)
        out = parts[0]
        for frag in parts[1:]:
            out += " - " + frag[1:] if frag.startswith("-") else " + " + frag
        return out

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True):
            mono = ""
            if i:
                mono += "q" if i == 1 else f"q^{{{i}}}"
            if j:
                mono += "t" if j == 1 else f"t^{{{j}}}"
            if not mono:
                frag = str(c)
            elif c == 1:
                frag = mono
            elif c == -1:
                frag = "-" + mono
            else:
                frag = f"{c}{mono}"
            parts.append(frag)
        out = parts[0]
        for frag in parts[1:]:
            out += " - " + frag[1:] if frag.startswith("-") else " + " + frag
        return out

    def __repr__(self) -> str:
        return f"QTPolynomial({self})"


def poly_arith(a: QTPolynomial, b: QTPolynomial, op: str) -> QTPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_exact_div(a: QTPolynomial, b: QTPolynomial) -> QTPolynomial:
    return a.div_exact(b)


# ---------------------------------------------------------------------------
# gcd machinery on integer-coefficient term dicts
# ---------------------------------------------------------------------------


def _int_clear(terms: dict) -> tuple[object, dict[tuple[int, int], int]]:
    """Write a rational-coefficient dict as scalar * primitive integer dict."""
    if not terms:
        return _QONE, {}
    denlcm = 1
    for c in terms.values():
        d = c.denominator
        denlcm = denlcm * d // _int_gcd(denlcm, d)
    numgcd = 0
    ints: dict[tuple[int, int], int] = {}
    for k, c in terms.items():
        v = c.numerator * (denlcm // c.denominator)
        ints[k] = v
        numgcd = _int_gcd(numgcd, v)
    if numgcd > 1:
        ints = {k: v // numgcd for k, v in ints.items()}
    return Q(numgcd, denlcm), ints


# univariate helpers on {degree: int} dicts, zero entries never stored


def _u_content(a: dict[int, int]) -> int:
    g = 0
    for v in a.values():
        g = _int_gcd(g, v)
        if g == 1:
            return 1
    return g


def _u_scale_div(a: dict[int, int], s: int) -> dict[int, int]:
    return a if s == 1 else {k: v // s for k, v in a.items()}


def _u_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, c in a.items():
        for j, d in b.items():
            k = i + j
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}

def _u_mul_int(a: dict[int, int], s: int) -> dict[int, int]:
    if s == 0:
        return {}
    return {k: v * s for k, v in a.items()}


def _u_sub(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) - v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _u_gcd(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """gcd of univariate integer polynomials (contents included), positive lead."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    else:
        ca, cb = _u_content(a), _u_content(b)
        a = _u_scale_div(a, ca)
        b = _u_scale_div(b, cb)
        while b:
            da, db = max(a), max(b)
            if da < db:
                a, b = b, a
                continue
            # pseudo-remainder of a by b, then primitive part
            lb = b[db]
            r = a
            while r and max(r) >= db:
                dr = max(r)
                lr = r[dr]
                r = _u_sub(_u_mul_int(r, lb), {k + dr - db: v * lr for k, v in b.items()})
            a, b = b, r
            if b:
                b = _u_scale_div(b, _u_content(b))
        cg = _int_gcd(ca, cb)
        g = a if cg == 1 else {k: v * cg for k, v in a.items()}
    if not g:
        return {}
    if g[max(g)] < 0:
        g = {k: -v for k, v in g.items()}
    return g


def _split_main_q(terms: dict[tuple[int, int], int]) -> dict[int, dict[int, int]]:
    out: dict[int, dict[int, int]] = {}
    for (i, j), c in terms.items():
        out.setdefault(i, {})[j] = c
    return out


def _join_main_q(sd: dict[int, dict[int, int]]) -> dict[tuple[int, int], int]:
    return {(i, j): c for i, coeffs in sd.items() for j, c in coeffs.items()}


def _b_content(sd: dict[int, dict[int, int]]) -> dict[int, int]:
    g: dict[int, int] = {}
    for coeff in sd.values():
        g = _u_gcd(g, coeff)
        if g == {0: 1}:
            return g
    return g


def _b_divide_content(sd, cont):
    if cont == {0: 1}:
        return sd
    out = {}
    for i, coeff in sd.items():
        out[i] = _u_div_exact(coeff, cont)
    return out


def _u_div_exact(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    # exact division of univariate integer polynomials
    if not a:
        return {}
    quot: dict[int, int] = {}
    r = dict(a)
    db = max(b)
    lb = b[db]
    while r:
        dr = max(r)
        if dr < db or r[dr] % lb:
            raise NotDivisible("univariate exact division failed")
        c = r[dr] // lb
        quot[dr - db] = c
        for k, v in b.items():
            key = k + dr - db
            w = r.get(key, 0) - c * v
            if w:
                r[key] = w
            elif key in r:
                del r[key]
    return quot


try:
    from sympy import ZZ as _GCD_DOMAIN
    from sympy.polys.polyerrors import HeuristicGCDFailed as _HEUGCD_FAILED
    from sympy.polys.rings import ring as _gcd_ring

    _GCD_RING = _gcd_ring("q,t", _GCD_DOMAIN)[0]
except ImportError:
    _GCD_RING = None
    _HEUGCD_FAILED = ()


_PROBE_PRIME = 2147483647


def _axis_coprime(A: dict, B: dict, axis: int) -> bool:
    """True certifies that gcd(A, B) has degree zero in one variable.

    Works modulo a fixed prime on a univariate image along the axis; the
    degree of the image gcd can only overshoot, never undershoot, once the
    evaluation point keeps the full degree of one input, so a constant image
    gcd is a proof.  False only means the cheap certificate failed.
    """
    da = max(k[axis] for k in A)
    db = max(k[axis] for k in B)
    if da == 0 or db == 0:
        return True
    if db < da:
        A, da, B, db = B, db, A, da
    p = _PROBE_PRIME
    other = 1 - axis
    lead = [(k[other], c) for k, c in A.items() if k[axis] == da]
    for c0 in (2, 3, 5, 7, 11, 13):
        lv = 0
        for e, c in lead:
            lv = (lv + c * pow(c0, e, p)) % p
        if lv:
            break
    else:
        return False
    maxo = max(max(k[other] for k in A), max(k[other] for k in B))
    pows = [1] * (maxo + 1)
    for e in range(1, maxo + 1):
        pows[e] = pows[e - 1] * c0 % p
    fa = [0] * (da + 1)
    for k, c in A.items():
        e = k[axis]
        fa[e] = (fa[e] + c * pows[k[other]]) % p
    fb = [0] * (db + 1)
    for k, c in B.items():
        e = k[axis]
        fb[e] = (fb[e] + c * pows[k[other]]) % p
    while fb and not fb[-1]:
        fb.pop()
    while fb:
        dfb = len(fb) - 1
        inv = pow(fb[-1], p - 2, p)
        while len(fa) > dfb:
            if fa[-1]:
                shift = len(fa) - 1 - dfb
                factor = fa[-1] * inv % p
                for i in range(dfb):
                    fa[shift + i] = (fa[shift + i] - factor * fb[i]) % p
            fa.pop()
        while fa and not fa[-1]:
            fa.pop()
        fa, fb = fb, fa
    return len(fa) == 1


def _int_poly_gcd(A: dict[tuple[int, int], int], B: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """gcd of primitive integer bivariate term dicts, positive grlex lead."""
    if not A:
        return B
    if not B:
        return A
    if _axis_coprime(A, B, 0) and _axis_coprime(A, B, 1):
        return _ONE_IDICT
    if _GCD_RING is not None:
        try:
            g = _GCD_RING.dtype(A).gcd(_GCD_RING.dtype(B))
        except _HEUGCD_FAILED:
            return _int_poly_gcd_prs(A, B)
        out = dict(g)
        lead = max(out, key=_grlex)
        if out[lead] < 0:
            out = {k: -v for k, v in out.items()}
        return out
    return _int_poly_gcd_prs(A, B)


def _int_poly_gcd_prs(A: dict[tuple[int, int], int], B: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Fallback gcd: primitive remainder sequence in q over Z[t]."""
    sa = _split_main_q(A)
    sb = _split_main_q(B)
    ca = _b_content(sa)
    cb = _b_content(sb)
    a = _b_divide_content(sa, ca)
    b = _b_divide_content(sb, cb)
    cg = _u_gcd(ca, cb)
    while b:
        da, db = max(a), max(b)
        if da < db:
            a, b = b, a
            continue
        lb = b[db]
        r = a
        while r and max(r) >= db:
            dr = max(r)
            lr = r[dr]
            r1: dict[int, dict[int, int]] = {}
            for i, coeff in r.items():
                r1[i] = _u_mul(coeff, lb)
            for i, coeff in b.items():
                key = i + dr - db
                prod = _u_mul(coeff, lr)
                r1[key] = _u_sub(r1.get(key, {}), prod)
            r = {i: c for i, c in r1.items() if c}
        a, b = b, r
        if b:
            cb2 = _b_content(b)
            if cb2 != {0: 1}:
                b = _b_divide_content(b, cb2)
    # a is the primitive gcd in main variable; restore content gcd
    out: dict[tuple[int, int], int] = {}
    for i, coeff in a.items():
        prod = _u_mul(coeff, cg)
        for j, c in prod.items():
            out[(i, j)] = c
    # sign normalize: positive leading coefficient in grlex
    lead = max(out, key=_grlex)
    if out[lead] < 0:
        out = {k: -v for k, v in out.items()}
    return out


def _int_div_exact(A: dict[tuple[int, int], int], G: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Exact division of integer term dicts; quotient coefficients stay integral."""
    if not A:
        return {}
    (bi, bj) = max(G, key=_grlex)
    bc = G[(bi, bj)]
    rem = dict(A)
    quot: dict[tuple[int, int], int] = {}
    while rem:
        ai, aj = max(rem, key=_grlex)
        qi, qj = ai - bi, aj - bj
        if qi < 0 or qj < 0 or rem[(ai, aj)] % bc:
            raise NotDivisible("integer exact division failed")
        c = rem[(ai, aj)] // bc
        quot[(qi, qj)] = c
        for (i, j), g in G.items():
            k = (i + qi, j + qj)
            v = rem.get(k, 0) - c * g
            if v:
                rem[k] = v
            elif k in rem:
                del rem[k]
    return quot


_ONE_IDICT: dict[tuple[int, int], int] = {(0, 0): 1}


def _idict_mul(a: dict, b: dict) -> dict:
    """Product of integer term dicts; shared dicts are never mutated."""
    if len(a) == 1:
        (ai, aj), ac = next(iter(a.items()))
        if ac == 1:
            if ai == 0 and aj == 0:
                return b
            return {(i + ai, j + aj): c for (i, j), c in b.items()}
        return {(i + ai, j + aj): c * ac for (i, j), c in b.items()}
    if len(b) == 1:
        return _idict_mul(b, a)
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for (ai, aj), ac in a.items():
        for (bi, bj), bc in b.items():
            k = (ai + bi, aj + bj)
            v = out.get(k)
            if v is None:
                out[k] = ac * bc
            else:
                v += ac * bc
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def _idict_pow(a: dict, n: int) -> dict:
    result = None
    base = a
    while True:
        if n & 1:
            result = base if result is None else _idict_mul(result, base)
        n >>= 1
        if not n:
            return result
        base = _idict_mul(base, base)


def _idict_primitive(d: dict) -> tuple[int, dict]:
    """Signed content and primitive positive-lead quotient of an int dict."""
    vals = iter(d.values())
    g = abs(next(vals))
    if g != 1:
        for v in vals:
            g = _int_gcd(g, v)
            if g == 1:
                break
    if d[max(d, key=_grlex)] < 0:
        g = -g
    if g == 1:
        return 1, d
    return g, {k: v // g for k, v in d.items()}


def _strip_common_monomial(n: dict, d: dict) -> tuple[dict, dict]:
    si = min(min(i for i, _ in n), min(i for i, _ in d))
    sj = min(min(j for _, j in n), min(j for _, j in d))
    if si or sj:
        n = {(i - si, j - sj): c for (i, j), c in n.items()}
        d = {(i - si, j - sj): c for (i, j), c in d.items()}
    return n, d


def _idict_gcd(a: dict, b: dict) -> dict:
    """gcd of primitive positive-lead int dicts, same normalization."""
    if len(a) == 1 or len(b) == 1:
        gi = min(min(i for i, _ in a), min(i for i, _ in b))
        gj = min(min(j for _, j in a), min(j for _, j in b))
        return {(gi, gj): 1} if (gi or gj) else _ONE_IDICT
    return _int_poly_gcd(a, b)


def _idict_quo(a: dict, b: dict) -> dict:
    """Exact quotient of int dicts; b must divide a."""
    if len(b) == 1:
        (bi, bj), bc = next(iter(b.items()))
        if bc == 1:
            if bi == 0 and bj == 0:
                return a
            return {(i - bi, j - bj): c for (i, j), c in a.items()}
        return {(i - bi, j - bj): c // bc for (i, j), c in a.items()}
    if _GCD_RING is not None:
        quot, rem = _GCD_RING.dtype(a).div(_GCD_RING.dtype(b))
        if rem:
            raise NotDivisible("inexact polynomial division")
        return dict(quot)
    return _int_div_exact(a, b)


def _combine_scaled(sa, a: dict, sb, b: dict) -> tuple:
    """sa*a + sb*b with rational scalars and int dicts, as (scale, int dict)."""
    pa, qa = int(sa.numerator), int(sa.denominator)
    pb, qb = int(sb.numerator), int(sb.denominator)
    lcm = qa * qb // _int_gcd(qa, qb)
    ka = pa * (lcm // qa)
    kb = pb * (lcm // qb)
    out = {k: ka * v for k, v in a.items()}
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = kb * v
        else:
            w += kb * v
            if w:
                out[k] = w
            else:
                del out[k]
    return Q(1, lcm), out


def _canonical_triple(s, n: dict, d: dict, hint: dict = None) -> tuple:
    """Canonicalize s*(n/d) to (scale, primitive num, primitive den).

    hint, when given, must be a primitive polynomial dividing d that every
    common factor of n and d divides; it bounds the gcd computation.
    """
    if not d:
        raise DivisionByZero("zero denominator")
    if not n or not s:
        return _QZERO, _ONE_IDICT, _ONE_IDICT
    n, d = _strip_common_monomial(n, d)
    cn, n = _idict_primitive(n)
    cd, d = _idict_primitive(d)
    s = s * cn / cd
    if _REDUCE and len(n) > 1 and len(d) > 1:
        g = _idict_gcd(n, d) if hint is None else _idict_gcd(n, hint)
        if g != _ONE_IDICT:
            n = _idict_quo(n, g)
            d = _idict_quo(d, g)
    return s, n, d


class QTRational:
    """Rational function in q and t, kept reduced and canonically normalized.

    Internally a rational scale times a quotient of primitive integer
    polynomials with positive leading coefficients (graded-lex, q before t);
    the common monomial factor of numerator and denominator is cancelled, and
    with reduction enabled (the default) they share no polynomial factor.
    """

    __slots__ = ("_s", "_n", "_d", "_nump", "_denp")

    def __init__(self, num, den=None):
        if isinstance(num, QTRational):
            if den is not None:
                raise ValueError("cannot give a denominator with a rational numerator")
            self._s, self._n, self._d = num._s, num._n, num._d
            self._nump = self._denp = None
            return
        if not isinstance(num, QTPolynomial):
            num = QTPolynomial.monomial(num)
        if den is None:
            den = QTPolynomial.one()
        elif not isinstance(den, QTPolynomial):
            den = QTPolynomial.monomial(den)
        if not den.terms:
            raise DivisionByZero("zero denominator")
        sn, in_ = _int_clear(num.terms) if num.terms else (_QONE, {})
        sd, id_ = _int_clear(den.terms)
        self._s, self._n, self._d = _canonical_triple(sn / sd, in_, id_)
        self._nump = self._denp = None

    @classmethod
    def _build(cls, s, n: dict, d: dict) -> "QTRational":
        r = cls.__new__(cls)
        r._s, r._n, r._d = s, n, d
        r._nump = r._denp = None
        return r

    @classmethod
    def zero(cls) -> "QTRational":
        return cls._build(_QZERO, _ONE_IDICT, _ONE_IDICT)

    @classmethod
    def one(cls) -> "QTRational":
        return cls._build(_QONE, _ONE_IDICT, _ONE_IDICT)

    @classmethod
    def from_monomial(cls, coeff, qe: int, te: int) -> "QTRational":
        """coeff * q^qe * t^te with exponents of either sign."""
        s = Q(coeff)
        if not s:
            return cls.zero()
        n = {(max(qe, 0), max(te, 0)): 1}
        d = {(max(-qe, 0), max(-te, 0)): 1}
        return cls._build(s, n, d)

    @property
    def num(self) -> QTPolynomial:
        p = self._nump
        if p is None:
            s = self._s
            p = QTPolynomial._raw({k: s * v for k, v in self._n.items()}) if s else QTPolynomial.zero()
            self._nump = p
        return p

    @property
    def den(self) -> QTPolynomial:
        p = self._denp
        if p is None:
            p = QTPolynomial._raw({k: Q(v) for k, v in self._d.items()})
            self._denp = p
        return p

    def is_zero(self) -> bool:
        return not self._s

    def __bool__(self) -> bool:
        return bool(self._s)

    def is_one(self) -> bool:
        return self._s == _QONE and self._n == _ONE_IDICT and self._d == _ONE_IDICT

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, type(_QONE))):
            other = QTRational(other)
        if not isinstance(other, QTRational):
            return NotImplemented
        if self._s == other._s and self._n == other._n and self._d == other._d:
            return True
        if _REDUCE:
            return False
        return self.cross_eq(other)

    __hash__ = None  # type: ignore[assignment]

    def cross_eq(self, other: "QTRational") -> bool:
        """Representation-independent equality by cross-multiplication."""
        if not self._s or not other._s:
            return (not self._s) == (not other._s)
        left = _idict_mul(self._n, other._d)
        right = _idict_mul(other._n, self._d)
        if self._s == other._s:
            return left == right
        if len(left) != len(right):
            return False
        sa, sb = self._s, other._s
        for k, v in left.items():
            w = right.get(k)
            if w is None or sa * v != sb * w:
                return False
        return True

    def __add__(self, other) -> "QTRational":
        if not isinstance(other, QTRational):
            other = QTRational(other)
        if not other._s:
            return self
        if not self._s:
            return other
        sa, na, da = self._s, self._n, self._d
        sb, nb, db = other._s, other._n, other._d
        if da == db:
            s, n = _combine_scaled(sa, na, sb, nb)
            return QTRational._build(*_canonical_triple(s, n, da, hint=da))
        if not _REDUCE:
            s, n = _combine_scaled(sa, _idict_mul(na, db), sb, _idict_mul(nb, da))
            return QTRational._build(*_canonical_triple(s, n, _idict_mul(da, db)))
        g = _idict_gcd(da, db)
        if g == _ONE_IDICT:
            # coprime denominators: the sum needs no polynomial cancellation
            s, n = _combine_scaled(sa, _idict_mul(na, db), sb, _idict_mul(nb, da))
            if not n:
                return QTRational.zero()
            cn, n = _idict_primitive(n)
            return QTRational._build(s * cn, n, _idict_mul(da, db))
        dap = _idict_quo(da, g)
        dbp = _idict_quo(db, g)
        s, n = _combine_scaled(sa, _idict_mul(na, dbp), sb, _idict_mul(nb, dap))
        # any common factor of n and the denominator divides g
        return QTRational._build(*_canonical_triple(s, n, _idict_mul(dap, db), hint=g))

    def __radd__(self, other) -> "QTRational":
        return self.__add__(other)

    def __neg__(self) -> "QTRational":
        return QTRational._build(-self._s, self._n, self._d)

    def __sub__(self, other) -> "QTRational":
        if not isinstance(other, QTRational):
            other = QTRational(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other) -> "QTRational":
        return QTRational(other).__sub__(self)

    def __mul__(self, other) -> "QTRational":
        if not isinstance(other, QTRational):
            if isinstance(other, (int, type(_QONE))):
                if not (other and self._s):
                    return QTRational.zero()
                return QTRational._build(self._s * other, self._n, self._d)
            other = QTRational(other)
        if not self._s or not other._s:
            return QTRational.zero()
        na, da = self._n, self._d
        nb, db = other._n, other._d
        s = self._s * other._s
        if not _REDUCE:
            return QTRational._build(*_canonical_triple(s, _idict_mul(na, nb), _idict_mul(da, db)))
        # cancel across the cross pairs; the result is then already canonical
        g1 = _idict_gcd(na, db)
        if g1 != _ONE_IDICT:
            na = _idict_quo(na, g1)
            db = _idict_quo(db, g1)
        g2 = _idict_gcd(nb, da)
        if g2 != _ONE_IDICT:
            nb = _idict_quo(nb, g2)
            da = _idict_quo(da, g2)
        return QTRational._build(s, _idict_mul(na, nb), _idict_mul(da, db))

    def __rmul__(self, other) -> "QTRational":
        return self.__mul__(other)

    def inverse(self) -> "QTRational":
        if not self._s:
            raise DivisionByZero("inverse of zero")
        return QTRational._build(1 / self._s, self._d, self._n)

    def __truediv__(self, other) -> "QTRational":
        if not isinstance(other, QTRational):
            if isinstance(other, (int, type(_QONE))):
                if not other:
                    raise DivisionByZero("division by zero scalar")
                if not self._s:
                    return QTRational.zero()
                return QTRational._build(self._s / other, self._n, self._d)
            other = QTRational(other)
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other) -> "QTRational":
        return QTRational(other).__mul__(self.inverse())

    def __pow__(self, n: int) -> "QTRational":
        if n == 0:
            return QTRational.one()
        if n < 0:
            return self.inverse() ** (-n)
        if not self._s:
            return QTRational.zero()
        return QTRational._build(self._s**n, _idict_pow(self._n, n), _idict_pow(self._d, n))

    def eval_numeric(self, q0, t0):
        """Exact value at rational (q0, t0); raises PoleAtPoint on a vanishing denominator."""
        dv = sum(c * q0**i * t0**j for (i, j), c in self._d.items())
        if not dv:
            raise PoleAtPoint(f"denominator vanishes at (q={q0}, t={t0})")
        nv = sum(c * q0**i * t0**j for (i, j), c in self._n.items())
        return self._s * nv / dv

    def swap_qt(self) -> "QTRational":
        if not self._s:
            return QTRational.zero()
        n = {(j, i): c for (i, j), c in self._n.items()}
        d = {(j, i): c for (i, j), c in self._d.items()}
        s = self._s
        if n[max(n, key=_grlex)] < 0:
            n = {k: -c for k, c in n.items()}
            s = -s
        if d[max(d, key=_grlex)] < 0:
            d = {k: -c for k, c in d.items()}
            s = -s
        return QTRational._build(s, n, d)

    def specialize_t_to_q(self) -> "QTRational":
        """Substitute t = q, cancelling shared factors of (q - t) first."""
        num, den = self.num, self.den
        qmt = QTPolynomial._raw({(1, 0): _QONE, (0, 1): -_QONE})
        while True:
            n1 = num.collapse_t_to_q()
            d1 = den.collapse_t_to_q()
            if n1.is_zero() and d1.is_zero() and num.terms and den.terms:
                num = num.div_exact(qmt)
                den = den.div_exact(qmt)
                continue
            if d1.is_zero():
                raise PoleAtPoint("pole along t = q")
            return QTRational(n1, d1)

    def q_series(self, order: int) -> list:
        """Coefficients of the q-power-series expansion through q^order.

        Returns a list of order + 1 rationals in t alone, with the value
        congruent to sum_k q^k series[k] modulo q^(order + 1).  Requires the
        q-constant part of the denominator to be nonzero.
        """
        if order < 0:
            raise ValueError("series order must be nonnegative")

        def q_slices(p: QTPolynomial) -> list:
            out = [dict() for _ in range(order + 1)]
            for (i, j), c in p.terms.items():
                if i <= order:
                    out[i][(0, j)] = c
            return [QTPolynomial._raw(d) for d in out]

        num_k = q_slices(self.num)
        full_den0 = QTPolynomial._raw(
            {(0, j): c for (i, j), c in self.den.terms.items() if i == 0}
        )
        if full_den0.is_zero():
            raise PoleAtPoint("denominator vanishes at q = 0")
        den_k = q_slices(self.den)
        d0 = QTRational(QTPolynomial.one(), full_den0)
        series = []
        for k in range(order + 1):
            acc = QTRational(num_k[k], QTPolynomial.one())
            for j in range(1, k + 1):
                if den_k[j].is_zero():
                    continue
                acc = acc - QTRational(den_k[j], QTPolynomial.one()) * series[k - j]
            series.append(acc * d0)
        return series

    def to_json(self) -> dict:
        return {"num": self.num.to_triples(), "den": self.den.to_triples()}

    @classmethod
    def from_json(cls, data: dict) -> "QTRational":
        return cls(QTPolynomial.from_triples(data["num"]), QTPolynomial.from_triples(data["den"]))

    def __str__(self) -> str:
        if self.den.is_constant():
            d = self.den.constant_value()
            if d == 1:
                return str(self.num)
            return f"({self.num})/{d}"
        return f"({self.num})/({self.den})"

    def latex(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            body = self.num.latex()
            return body
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __repr__(self) -> str:
        return f"QTRational({self})"




def rat_arith(a: QTRational, b: QTRational, op: str) -> QTRational:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def eval_numeric(f: QTRational, q0, t0):
    return f.eval_numeric(q0, t0)


class LaurentMonomial:
    """c * q^a * t^b with integer exponents of either sign."""

    __slots__ = ("coeff", "qe", "te")

    def __init__(self, coeff=1, qe: int = 0, te: int = 0):
        self.coeff = coeff if type(coeff) is type(_QONE) else Q(coeff)
        self.qe = qe
        self.te = te

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(self.coeff * other.coeff, self.qe + other.qe, self.te + other.te)

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        if not other.coeff:
            raise DivisionByZero("division by a zero monomial")
        return LaurentMonomial(self.coeff / other.coeff, self.qe - other.qe, self.te - other.te)

    def __pow__(self, n: int) -> "LaurentMonomial":
        return LaurentMonomial(self.coeff**n, self.qe * n, self.te * n)

    def q_shift(self, d: int) -> "LaurentMonomial":
        return LaurentMonomial(self.coeff, self.qe + d, self.te)

    def is_unit_one(self) -> bool:
        return self.coeff == 1 and self.qe == 0 and self.te == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMonomial):
            return NotImplemented
        return (self.coeff, self.qe, self.te) == (other.coeff, other.qe, other.te)

    def __hash__(self) -> int:
        return hash((self.coeff, self.qe, self.te))

    def as_rational(self) -> QTRational:
        return QTRational.from_monomial(self.coeff, self.qe, self.te)

    def swap_qt(self) -> "LaurentMonomial":
        return LaurentMonomial(self.coeff, self.te, self.qe)

    def __repr__(self) -> str:
        return f"LaurentMonomial({self.coeff}, q^{self.qe}, t^{self.te})"


def one_minus(mono: LaurentMonomial) -> QTRational:
    """1 - c q^a t^b as a rational function."""
    return QTRational(1) - mono.as_rational()


def pochhammer(x: LaurentMonomial, k: int) -> QTRational:
    """(x; q)_k = prod_{l=0}^{k-1} (1 - x q^l); empty product for k = 0."""
    if k < 0:
        raise ValueError("negative Pochhammer length")
    out = QTRational.one()
    for l in range(k):
        out = out * one_minus(x.q_shift(l))
    return out


class EpsPolynomial:
    """Dense polynomial in one formal variable with QTRational-like coefficients.

    Used both for perturbation series in a regularization parameter and for
    polynomials in the deformation parameter of the determinant kernel.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def constant(cls, c) -> "EpsPolynomial":
        return cls([c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def order(self) -> int | None:
        """Index of the lowest nonzero coefficient, None for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpsPolynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other: "EpsPolynomial") -> "EpsPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return EpsPolynomial(out)

    def __neg__(self) -> "EpsPolynomial":
        return EpsPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "EpsPolynomial") -> "EpsPolynomial":
        return self + (-other)

    def __mul__(self, other: "EpsPolynomial") -> "EpsPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return EpsPolynomial([])
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                p = ca * cb
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        zero = a[0] * 0
        return EpsPolynomial([zero if c is None else c for c in out])

    def scale(self, c) -> "EpsPolynomial":
        return EpsPolynomial([c * v for v in self.coeffs])

    def __pow__(self, n: int) -> "EpsPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            raise ValueError("EpsPolynomial**0 has no coefficient ring context")
        return result

    def eval_at(self, x):
        """Horner evaluation; x must live in the coefficient ring."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"EpsPolynomial({self.coeffs!r})"


def eps_limit(num: EpsPolynomial, den: EpsPolynomial):
    """Limit of num/den as the perturbation variable goes to zero.

    Zero numerator gives zero; a numerator order below the denominator order
    is a genuine pole; a higher order gives zero; equal orders give the ratio
    of the lowest coefficients.
    """
    if den.is_zero():
        raise DivisionByZero("zero denominator series")
    m2 = den.order()
    if num.is_zero():
        return den.coeffs[m2] * 0
    m1 = num.order()
    if m1 < m2:
        raise GenuinePole(f"numerator order {m1} below denominator order {m2}")
    if m1 > m2:
        return den.coeffs[m2] * 0
    return num.coeffs[m1] / den.coeffs[m2]

"""Deterministic text, LaTeX, and JSON rendering of expansions.

The JSON schema is the stable machine interface:

    {"lambda": [...], "theorem": 1|2|3|4, "parameters": "q,t"|"t,q",
     "terms": [{"theta": [...]|null, "coefficient": {...},
                "row": int|null, "target": [...]}]}

Aggregated multiplicative expansions (theorems 3 and 4) sum over shift
matrices, so a collected term no longer belongs to a single theta; those
terms carry null theta and row and put the index multiset in target.
Text and LaTeX output fold unit coefficients into signs and drop unit
factors, so the q = t degenerations print as the classical determinant
developments.
"""

import json

from .rational import QTRational

_ONE = QTRational.one()

_PARAMETERS = {1: "q,t", 2: "t,q", 3: "q,t", 4: "t,q"}

# lhs symbol, one-row factor symbol, target symbol, per naming mode
_NAMES = {
    (1, False): ("Q", "g", "Q"),
    (1, True): ("s", "h", "s"),
    (2, False): ("P", "e", "P"),
    (2, True): ("s", "e", "s"),
    (3, False): ("Q", "g", "Q"),
    (3, True): ("s", "h", "s"),
    (4, False): ("P", "e", "P"),
    (4, True): ("s", "e", "s"),
}


def _indexed_records(indexed: dict) -> list:
    return [
        {
            "theta": None,
            "coefficient": coeff.to_json(),
            "row": None,
            "target": list(key),
        }
        for key, coeff in sorted(indexed.items())
    ]


def expansion_payload(lam, theorem: int, terms=None, indexed=None) -> dict:
    """Schema dict for one expansion; exactly one of terms/indexed."""
    if (terms is None) == (indexed is None):
        raise ValueError("pass exactly one of terms or indexed")
    if terms is not None:
        records = [term.to_json() for term in terms]
    else:
        records = _indexed_records(indexed)
    return {
        "lambda": list(lam),
        "theorem": theorem,
        "parameters": _PARAMETERS[theorem],
        "terms": records,
    }


def _part_name(symbol: str, parts, latex: bool) -> str:
    body = ",".join(str(p) for p in parts)
    if latex:
        return f"{symbol}_{{({body})}}"
    return f"{symbol}({body})"


def _row_name(symbol: str, k: int, latex: bool) -> str:
    if latex:
        return f"{symbol}_{{{k}}}"
    return f"{symbol}{k}"


def _term_factors(theorem: int, row, target, names, latex: bool) -> list:
    """Factor strings for one term; [] means the term is the unit."""
    _, row_sym, target_sym = names
    factors = []
    if row:
        factors.append(_row_name(row_sym, row, latex))
    if theorem in (1, 2) and target:
        if theorem == 1 and len(target) == 1:
            factors.append(_row_name(row_sym, target[0], latex))
        elif theorem == 2 and set(target) == {1}:
            factors.append(_row_name("e", len(target), latex))
        else:
            factors.append(_part_name(target_sym, target, latex))
    elif theorem in (3, 4):
        factors.extend(_row_name(row_sym, k, latex) for k in target)
    return factors


def _joined_terms(pieces: list) -> str:
    """Assemble (coefficient, body) pairs with signs folded for units."""
    out = []
    for coeff, body in pieces:
        if coeff == _ONE:
            signed = ("+", body)
        elif coeff == -_ONE:
            signed = ("-", body)
        else:
            signed = ("+", f"({coeff})*{body}" if body != "1" else f"({coeff})")
        out.append(signed)
    if not out:
        return "0"
    first_sign, first = out[0]
    text = first if first_sign == "+" else f"-{first}"
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _joined_terms_latex(pieces: list) -> str:
    out = []
    for coeff, body in pieces:
        if coeff == _ONE:
            out.append(("+", body))
        elif coeff == -_ONE:
            out.append(("-", body))
        else:
            wrapped = rf"\left({coeff.latex()}\right)"
            out.append(("+", wrapped if body == "1" else f"{wrapped} {body}"))
    if not out:
        return "0"
    first_sign, first = out[0]
    text = first if first_sign == "+" else f"-{first}"
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _term_pieces(theorem: int, terms, indexed, names, latex: bool) -> list:
    sep = " " if latex else "*"
    pieces = []
    if terms is not None:
        source = [(t.coefficient, t.row, t.target) for t in terms]
    else:
        source = [(coeff, None, key) for key, coeff in sorted(indexed.items())]
    for coeff, row, target in source:
        factors = _term_factors(theorem, row, target, names, latex)
        pieces.append((coeff, sep.join(factors) if factors else "1"))
    return pieces


def render_expansion(
    lam,
    theorem: int,
    fmt: str,
    terms=None,
    indexed=None,
    q_equals_t: bool = False,
) -> str:
    """One expansion in the requested format; deterministic bytes."""
    if fmt == "json":
        payload = expansion_payload(lam, theorem, terms=terms, indexed=indexed)
        return json.dumps(payload, indent=2, sort_keys=True)
    names = _NAMES[(theorem, q_equals_t)]
    latex = fmt == "latex"
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    lhs = _part_name(names[0], lam, latex)
    pieces = _term_pieces(theorem, terms, indexed, names, latex)
    if latex:
        return f"{lhs} = {_joined_terms_latex(pieces)}"
    return f"{lhs} = {_joined_terms(pieces)}"


def render_coefficient(cvalue, fmt: str) -> str:
    """One evaluated coefficient, flagging regularized limits."""
    if fmt == "json":
        return json.dumps(cvalue.to_json(), indent=2, sort_keys=True)
    if fmt == "latex":
        text = cvalue.value.latex()
        if cvalue.regularized:
            text += r" \quad \text{(regularized)}"
        return text
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    text = str(cvalue.value)
    if cvalue.regularized:
        text += " (regularized)"
    return text

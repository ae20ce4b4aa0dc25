"""Text, JSON and CSV serialisation plus field/extension spec parsing."""

from __future__ import annotations

import csv
import io
import json
import re
from typing import Any, Sequence

from .errors import DomainError
from .galois import BaseField, ExtElement, ExtField, LBasis, normal_basis
from .polyring import DiffOp, HomogPoly

# -- field specs -------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"bad integer list {text!r}") from exc


def parse_field(spec: str) -> BaseField:
    """``"p"`` or ``"p^m:c0,...,cm"``."""
    spec = spec.strip()
    try:
        if "^" not in spec:
            return BaseField(int(spec))
        head, _, tail = spec.partition(":")
        p, m = (int(x) for x in head.split("^"))
    except ValueError as exc:
        raise DomainError(f"bad field spec {spec!r}") from exc
    return BaseField(p, m, _int_list(tail) if tail else None)


def parse_ext(spec: str, base: BaseField) -> ExtField:
    """``"n"`` (auto modulus), ``"n:c0,...,cn"`` or ``"n:c0,...,cn:s"``."""
    parts = spec.strip().split(":")
    try:
        n = int(parts[0])
        s = int(parts[2]) if len(parts) > 2 else 1
    except ValueError as exc:
        raise DomainError(f"bad extension spec {spec!r}") from exc
    modulus = _int_list(parts[1]) if len(parts) > 1 and parts[1] else None
    return ExtField(base, n, modulus, s)


def parse_alpha(spec: str | None, ext: ExtField) -> LBasis:
    """``power`` (default), ``normal``, or ``c00,c01,..;c10,...`` coordinate rows."""
    if spec is None or spec == "power":
        return ext.power_basis()
    if spec == "normal":
        return normal_basis(ext)
    rows = [_int_list(chunk) for chunk in spec.split(";")]
    return LBasis(ext, [ext.element(r) for r in rows])


# -- scalars -----------------------------------------------------------------


def scalar_to_json(c: Any) -> Any:
    if isinstance(c, ExtElement):
        return list(c.coords)
    return c


def scalar_from_json(v: Any, field) -> Any:
    if isinstance(field, ExtField):
        if isinstance(v, list):
            return field.element(v)
        return field.from_int(int(v))
    if isinstance(v, list):
        raise DomainError("extension coefficient given for a base-field polynomial")
    return field.from_int(int(v)) if field.is_prime_field else int(v)


def _scalar_text(c: Any) -> str:
    if isinstance(c, ExtElement):
        return "[" + ",".join(str(x) for x in c.coords) + "]"
    return str(c)


# -- polynomials ---------------------------------------------------------------


def poly_to_text(f: HomogPoly) -> str:
    var = getattr(f, "_var", "x")
    if f.is_zero():
        return "0"
    out = []
    for t, c in f.terms():
        factors = [_scalar_text(c)]
        for i, a in enumerate(t):
            if a == 1:
                factors.append(f"{var}{i + 1}")
            elif a > 1:
                factors.append(f"{var}{i + 1}^{a}")
        if len(factors) == 1:
            factors.append("1")
        out.append("*".join(factors))
    return " + ".join(out)


_TERM_SPLIT = re.compile(r"([+-])")


def poly_from_text(text: str, n: int, d: int, field, cls=HomogPoly) -> HomogPoly:
    """Parse ``c*x1^a*x2^b + ...``; ``-`` is accepted between terms."""
    text = text.strip().replace(" ", "")
    if text in ("", "0"):
        return cls.zero(n, d, field)
    # protect signs inside [..] extension coefficients
    chunks: list[tuple[int, str]] = []
    sign, buf, depth = 1, "", 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and ch in "+-" and buf and not buf.endswith("^"):
            chunks.append((sign, buf))
            sign, buf = (1 if ch == "+" else -1), ""
        elif depth == 0 and ch in "+-" and not buf:
            sign = sign * (1 if ch == "+" else -1)
        else:
            buf += ch
    if buf:
        chunks.append((sign, buf))
    result = cls.zero(n, d, field)
    for sgn, term in chunks:
        coeff = field.one
        exp = [0] * n
        for factor in term.split("*"):
            m = re.fullmatch(r"[xd](\d+)(?:\^(\d+))?", factor)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < n:
                    raise DomainError(f"variable index out of range in {term!r}")
                exp[i] += int(m.group(2) or 1)
            elif factor.startswith("["):
                if not isinstance(field, ExtField):
                    raise DomainError("extension coefficient in a base-field polynomial")
                coeff = field.mul(coeff, field.element(_int_list(factor.strip("[]"))))
            else:
                try:
                    coeff = field.mul(coeff, field.from_int(int(factor)))
                except ValueError as exc:
                    raise DomainError(f"cannot parse factor {factor!r}") from exc
        if sum(exp) != d:
            raise DomainError(f"term {term!r} does not have degree {d}")
        if sgn < 0:
            coeff = field.neg(coeff)
        result = result + cls(n, d, field, {tuple(exp): coeff})
    return result


def poly_to_json(f: HomogPoly) -> dict:
    return {
        "n": f.n,
        "d": f.d,
        "terms": [{"exp": list(t), "coeff": scalar_to_json(c)} for t, c in f.terms()],
    }


def poly_from_json(obj: dict, field) -> HomogPoly:
    n, d = int(obj["n"]), int(obj["d"])
    f = HomogPoly.zero(n, d, field)
    for term in obj.get("terms", []):
        f = f + HomogPoly(n, d, field, {tuple(term["exp"]): scalar_from_json(term["coeff"], field)})
    return f


def load_poly(text: str, field, n: int | None = None, d: int | None = None) -> HomogPoly:
    """Accept either the JSON or the text polynomial format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return poly_from_json(json.loads(stripped), field)
    if n is None or d is None:
        raise DomainError("text polynomials need n and d")
    return poly_from_text(stripped, n, d, field)


# -- matrices ------------------------------------------------------------------


def matrix_to_json(M: Sequence[Sequence[Any]]) -> list:
    return [[scalar_to_json(x) for x in row] for row in M]


def matrix_to_csv(M: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in M:
        writer.writerow([_scalar_text(x) for x in row])
    return buf.getvalue()


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


__all__ = [
    "DiffOp",
    "dumps",
    "load_poly",
    "matrix_to_csv",
    "matrix_to_json",
    "parse_alpha",
    "parse_ext",
    "parse_field",
    "poly_from_json",
    "poly_from_text",
    "poly_to_json",
    "poly_to_text",
    "scalar_from_json",
    "scalar_to_json",
]

"""Plain-text and LaTeX rendering of exact polynomials."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .exact import format_rational


def _approx(c: Fraction, digits: int = 12) -> str:
    return f"{float(c):.{digits}g}"


def _join_plain(terms: List[Tuple[Fraction, str]], approx: bool) -> str:
    """terms: (coefficient, monomial) pairs with nonzero coefficients."""
    if not terms:
        return "0"
    parts = []
    for k, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        num = _approx(mag) if approx else format_rational(mag)
        if mono:
            body = mono if mag == 1 else f"{num} {mono}"
        else:
            body = num
        if k == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _power(var: str, e: int, latex: bool = False) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if latex and e >= 10:
        return f"{var}^{{{e}}}"
    return f"{var}^{e}"


def uni_plain(p, var: str = "T", approx: bool = False) -> str:
    terms = [(c, _power(var, i)) for i, c in enumerate(p.coeffs) if c]
    return _join_plain(terms, approx)


def bivariate_plain(f, approx: bool = False) -> str:
    n = f.degree
    terms = []
    for i, c in enumerate(f.coeffs):
        if c:
            mono = " ".join(m for m in (_power("x0", n - i), _power("x1", i)) if m)
            terms.append((c, mono))
    return _join_plain(terms, approx)


def _latex_term(c: Fraction, mono: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if mag.denominator == 1:
        if not mono:
            body = str(mag.numerator)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag.numerator} {mono}"
    else:
        top = mono if mag.numerator == 1 and mono else (
            f"{mag.numerator} {mono}" if mono else str(mag.numerator)
        )
        body = f"\\frac{{{top}}}{{{mag.denominator}}}"
    return sign + body


def uni_latex(p, var: str = "T") -> str:
    """Coefficients folded into fractions: 1/5 + 2T/5 renders as \\frac{1}{5}+\\frac{2 T}{5}."""
    out = []
    for i, c in enumerate(p.coeffs):
        if c:
            out.append(_latex_term(c, _power(var, i, latex=True), not out))
    return "".join(out) or "0"


def bivariate_latex(f) -> str:
    n = f.degree
    out = []
    for i, c in enumerate(f.coeffs):
        if c:
            mono = " ".join(
                m for m in (_power("x_0", n - i, True), _power("x_1", i, True)) if m
            )
            out.append(_latex_term(c, mono, not out))
    return "".join(out) or "0"


# -- tables ------------------------------------------------------------------

EISENSTEIN_HEADER = r"$\widetilde{\varphi_{\ell}^{H_1}}(x_0,x_1)$"
ZETA_HEADER = r"$P_{\widetilde{\varphi_{\ell}^{H_1}}}(T)$"
TYPO_NOTE = "The l=8 row ends in x1^8; a printed x2^8 in that row is a misprint."


def latex_table(header: str, rows: List[Tuple[int, str]], footnote: str | None = None) -> str:
    lines = [
        r"\begin{tabular}{c|c}",
        r"\noalign{\hrule height0.8pt}",
        rf"$\ell$ & {header}\\\hline",
    ]
    for k, (ell, body) in enumerate(rows):
        end = r"\\\hline" if k < len(rows) - 1 else r"\\"
        lines.append(f"${ell}$ & ${body}${end}")
    lines += [r"\noalign{\hrule height0.8pt}", r"\end{tabular}"]
    if footnote:
        lines.append(r"\par\noindent{\footnotesize " + footnote.replace("x1^8", "$x_1^8$").replace("x2^8", "$x_2^8$").replace("l=8", r"$\ell=8$") + "}")
    return "\n".join(lines) + "\n"


def plain_table(header: str, rows: List[Tuple[int, str]], footnote: str | None = None) -> str:
    width = max(len(str(ell)) for ell, _ in rows)
    lines = [f"{'l'.rjust(width)} | {header}"]
    lines += [f"{str(ell).rjust(width)} | {body}" for ell, body in rows]
    if footnote:
        lines.append(f"* {footnote}")
    return "\n".join(lines) + "\n"

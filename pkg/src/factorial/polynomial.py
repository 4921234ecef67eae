import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

from sympy import Poly, symbols

from arithmetic import ArithmeticDomainError, radical, try_factorize
from config.settings import load_settings


logger = logging.getLogger(__name__)

X, Y = symbols('x y')

OK = "ok"
SKIPPED = "skipped"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RadicalRow:
    """
    One evaluation point. exponent = log rad|f| / log size, None when the
    row is skipped (|f| <= 1), undetermined, or size < 2.
    """

    point: tuple
    value: int
    rad: Optional[int]
    exponent: Optional[float]
    status: str


def parse_coefficients(text: str) -> List[int]:
    """'1,0,1' -> [1, 0, 1], highest degree first"""
    try:
        return [int(c) for c in text.split(',')]
    except ValueError:
        raise ArithmeticDomainError(f"bad coefficient list {text!r}") from None


def _univariate(coeffs: Sequence[int]) -> Poly:
    f = Poly(list(coeffs), X)
    if f.degree() < 1:
        raise ArithmeticDomainError(f"polynomial {f.as_expr()} is constant")
    if f.gcd(f.diff(X)).degree() > 0:
        raise ArithmeticDomainError(f"polynomial {f.as_expr()} has a repeated root")
    return f


def _form(coeffs: Sequence[int]) -> Poly:
    """sum c_i x^(d-i) y^i; rejected when it has a repeated factor"""
    d = len(coeffs) - 1
    expr = sum(c * X ** (d - i) * Y ** i for i, c in enumerate(coeffs))
    if d < 1 or expr == 0:
        raise ArithmeticDomainError(f"form {list(coeffs)} has degree < 1")
    f = Poly(expr, X, Y)
    # any repeated factor divides both partials; by Euler's relation the converse holds
    if f.diff(X).gcd(f.diff(Y)).total_degree() > 0:
        raise ArithmeticDomainError(f"form {f.as_expr()} has a repeated linear factor")
    return f


def _evaluate(coeffs: Sequence[int], x: int, y: int = 1) -> int:
    d = len(coeffs) - 1
    return sum(c * x ** (d - i) * y ** i for i, c in enumerate(coeffs))


def _row(point: tuple, value: int, size: int, **effort) -> RadicalRow:
    if abs(value) <= 1:
        return RadicalRow(point=point, value=value, rad=None, exponent=None, status=SKIPPED)
    partial = try_factorize(abs(value), **effort)
    if not partial.complete:
        return RadicalRow(point=point, value=value, rad=None, exponent=None, status=UNDETERMINED)
    rad = radical(partial.known)
    exponent = math.log(rad) / math.log(size) if size >= 2 else None
    return RadicalRow(point=point, value=value, rad=rad, exponent=exponent, status=OK)


def poly_radical_scan(coeffs: Sequence[int], lo: int, hi: int,
                      budget: Optional[int] = None, **effort) -> List[RadicalRow]:
    """
    rad(f(x)) for lo <= x <= hi, with exponent log rad|f(x)| / log|x| to
    compare against deg f - 1.

    Parameters:
    - coeffs: integer coefficients, highest degree first; f must have no repeated roots
    - budget: largest allowed hi - lo (settings.poly_range_budget by default)
    """
    _univariate(coeffs)
    budget = budget if budget is not None else load_settings().poly_range_budget
    if hi < lo or hi - lo > budget:
        raise ArithmeticDomainError(f"range [{lo}, {hi}] is empty or wider than {budget}")
    rows = [_row((x,), _evaluate(coeffs, x), abs(x), **effort) for x in range(lo, hi + 1)]
    logger.info("poly scan %s on [%d, %d]: %d rows, %d skipped",
                list(coeffs), lo, hi, len(rows), sum(r.status == SKIPPED for r in rows))
    return rows


def homogeneous_radical_scan(coeffs: Sequence[int], max_abs: int = 50, **effort) -> List[RadicalRow]:
    """
    rad(f(m, n)) for coprime 1 <= m, n <= max_abs, with exponent
    log rad|f(m, n)| / log max(m, n) to compare against deg f - 2.

    The n = 1 column is the dehomogenized polynomial f(x, 1), which has the
    same coefficient list and can be scanned further with poly_radical_scan.
    """
    _form(coeffs)
    if not 1 <= max_abs <= 50:
        raise ArithmeticDomainError(f"max_abs must lie in [1, 50], got {max_abs}")
    rows = []
    for m in range(1, max_abs + 1):
        for n in range(1, max_abs + 1):
            if math.gcd(m, n) != 1:
                continue
            rows.append(_row((m, n), _evaluate(coeffs, m, n), max(m, n), **effort))
    return rows


def reference_exponent(coeffs: Sequence[int], homogeneous: bool = False) -> int:
    """deg f - 1 for polynomials, deg f - 2 for forms"""
    degree = len(coeffs) - 1 if homogeneous else Poly(list(coeffs), X).degree()
    return degree - (2 if homogeneous else 1)

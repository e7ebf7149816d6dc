"""Resultants of square homogeneous systems: Sylvester (n = 2) and Koszul paths.

Values are exact and defined up to sign.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .complexes import (
    CohomologyReport,
    MinorSelection,
    cohomology,
    select_minors,
    split_minors,
)
from .errors import DegenerateComplexError, ExactnessError, InputError, ResultantAnomaly
from .graded import build_complex, euler_char, min_exact_R
from .linalg import ExactMatrix, bareiss_det
from .poly import HPoly, PolyMap, scale_one

SYLVESTER = "sylvester"
KOSZUL = "koszul"


def resultant_degree(n: int, r: int) -> int:
    """Degree n r^(n-1) of the resultant in all coefficients together."""
    if n < 1 or r < 1:
        raise InputError("resultant degree needs n >= 1 and r >= 1")
    return n * r ** (n - 1)


@dataclass(frozen=True)
class ResultantResult:
    value: Fraction
    method: str
    degree_expected: int
    R_used: Optional[int] = None
    selection: Optional[MinorSelection] = None
    # set when the value is 0 because minor selection failed on a non-exact complex
    certificate: Optional[CohomologyReport] = None

    def to_json(self) -> dict:
        out = {
            "value": str(self.value),
            "sign_convention": "selection-dependent",
            "method": self.method,
            "R": self.R_used,
            "degree_expected": self.degree_expected,
        }
        if self.selection is not None:
            out["selection"] = self.selection.one_based()
        if self.certificate is not None:
            out["cohomology"] = list(self.certificate.h)
        return out


def sylvester_matrix(f: HPoly, g: HPoly) -> ExactMatrix:
    """2r x 2r Sylvester matrix: r shifted copies of f's row above r of g's.

    Rows start with the x^r coefficient (f_0).
    """
    if f.n != 2 or g.n != 2:
        raise InputError("Sylvester matrices are only defined for two variables")
    if f.degree != g.degree:
        raise InputError("both forms must have the same degree")
    r = f.degree
    size = 2 * r
    rows = []
    for poly in (f, g):
        coeffs = poly.dense()
        for shift in range(r):
            row = [0] * size
            row[shift:shift + r + 1] = coeffs
            rows.append(row)
    return ExactMatrix.from_rows(rows, size)


def resultant_sylvester(f: HPoly, g: HPoly) -> ResultantResult:
    if f.degree == 0:
        raise InputError("Sylvester resultant needs degree >= 1")
    value = bareiss_det(sylvester_matrix(f, g))
    return ResultantResult(value, SYLVESTER, resultant_degree(2, f.degree))


def _clear_denominators(f: PolyMap):
    """Scale each polynomial to integer coefficients; return the map and the multipliers."""
    mults = []
    g = f
    for i, p in enumerate(f.polys):
        d = 1
        for c in p.terms.values():
            d = lcm(d, c.denominator)
        mults.append(d)
        if d != 1:
            g = scale_one(g, i, d)
    return g, mults


def admissible_R(n: int, r: int, R: int) -> bool:
    return R >= 0 and euler_char(n, r, R) == 0


def resultant_koszul(f: PolyMap, R: int = None) -> ResultantResult:
    """|R(f)| as the determinant of the Koszul complex ending in Omega(R, 0).

    Coefficients are cleared to integers per polynomial first; the minor ratio
    of the integer complex must then be an integer, and ExactnessError is raised
    otherwise. Scaling back divides by prod d_i^(r^(n-1)).
    """
    n, r = f.n, f.r
    if R is None:
        R = min_exact_R(n, r)
    if not admissible_R(n, r, R):
        raise InputError(
            f"R={R} gives Euler characteristic {euler_char(n, r, R)} for {n}|{r}; "
            f"need R >= {min_exact_R(n, r)}"
        )
    degree = resultant_degree(n, r)
    g, mults = _clear_denominators(f)
    c = build_complex(g, R)
    try:
        sel = select_minors(c)
    except DegenerateComplexError as exc:
        rep = cohomology(c)
        if rep.exact:
            raise ResultantAnomaly(
                f"minor selection failed at d_{exc.step} but the complex is exact"
            ) from exc
        return ResultantResult(Fraction(0), KOSZUL, degree, R, None, rep)
    num, den = split_minors(c, sel)
    top = 1
    for m in num:
        top *= int(m)
    bottom = 1
    for m in den:
        bottom *= int(m)
    q, rem = divmod(top, bottom)
    if rem:
        raise ExactnessError(f"minor ratio {top}/{bottom} is not an integer")
    scale = 1
    for d in mults:
        scale *= d ** (r ** (n - 1))
    return ResultantResult(Fraction(q, scale), KOSZUL, degree, R, sel)


def resultant(f: PolyMap, method: str = None, R: int = None) -> ResultantResult:
    """Dispatch: Sylvester for n = 2 unless Koszul is forced or R is given."""
    if method is None:
        method = SYLVESTER if f.n == 2 and R is None else KOSZUL
    if method == SYLVESTER:
        if f.n != 2:
            raise InputError(f"Sylvester method needs n = 2, got n = {f.n}")
        if R is not None:
            raise InputError("--R only applies to the Koszul method")
        return resultant_sylvester(f[0], f[1])
    if method == KOSZUL:
        return resultant_koszul(f, R)
    raise InputError(f"unknown method {method!r}")

"""Independent checks: numeric Poisson product (n = 2), planted roots, seeded samplers."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from .errors import InputError
from .graded import euler_char, min_exact_R
from .poly import HPoly, Monomial, PolyMap, monomials, scale_map, to_rat
from .resultant import resultant_degree, resultant_koszul, resultant_sylvester


def random_system(n: int, r: int, bound: int, seed: int) -> PolyMap:
    """Integer coefficients uniform in [-bound, bound], reproducible per seed."""
    if bound < 0:
        raise InputError("bound must be non-negative")
    rng = random.Random(seed)
    size = len(monomials(n, r))
    return PolyMap.from_dense(n, r, [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(n)])


@dataclass(frozen=True)
class PlantSpec:
    n: int
    r: int
    root: Sequence[Fraction]
    seed: int = 0
    bound: int = 5

    def __post_init__(self):
        root = tuple(to_rat(x) for x in self.root)
        if len(root) != self.n:
            raise InputError(f"root has {len(root)} coordinates, expected {self.n}")
        if not any(root):
            raise InputError("planted root must be nonzero")
        object.__setattr__(self, "root", root)


def plant_common_root(spec: PlantSpec) -> PolyMap:
    """Random system shifted so every polynomial vanishes at ``spec.root``.

    The coefficient of x_k^r is adjusted, where x_k is the first nonzero root
    coordinate, so its monomial value is nonzero.
    """
    f = random_system(spec.n, spec.r, spec.bound, spec.seed)
    k = next(i for i, x in enumerate(spec.root) if x)
    pivot = Monomial.var(spec.n, k, spec.r)
    pivot_value = pivot.value(spec.root)
    polys = []
    for p in f.polys:
        shift = p.eval(spec.root) / pivot_value
        terms = dict(p.terms)
        terms[pivot] = terms.get(pivot, Fraction(0)) - shift
        q = HPoly(p.n, p.degree, terms)
        assert q.eval(spec.root) == 0
        polys.append(q)
    return PolyMap(tuple(polys))


@dataclass(frozen=True)
class PoissonResult:
    value: Optional[complex]
    status: str  # match | mismatch | unsupported | inconclusive | unchecked
    exact: Optional[Fraction] = None
    rel_error: Optional[float] = None


def poisson_product_2(f: HPoly, g: HPoly, tol: float = 1e-9, exact=None) -> PoissonResult:
    """(-1)^(r^2) g_0^r prod f(beta_i, 1) over the roots beta_i of g(x, 1).

    Roots come from numpy's companion-matrix eigenvalues. The estimate is
    compared with ``exact`` (the Sylvester value when omitted) using
    |approx - exact| <= tol * max(1, |exact|).
    """
    if f.n != 2 or g.n != 2 or f.degree != g.degree:
        raise InputError("the Poisson oracle needs two binary forms of equal degree")
    r = g.degree
    gc = [float(c) for c in g.dense()]
    if gc[0] == 0:
        return PoissonResult(None, "unsupported")
    fc = [float(c) for c in f.dense()]
    try:
        betas = np.roots(gc) if r > 0 else np.array([])
    except np.linalg.LinAlgError:
        return PoissonResult(None, "inconclusive")
    if len(betas) != r or not np.all(np.isfinite(betas)):
        return PoissonResult(None, "inconclusive")
    value = complex((-1) ** (r * r) * gc[0] ** r)
    for b in betas:
        value *= complex(np.polyval(fc, b))
    if exact is None:
        exact = resultant_sylvester(f, g).value
    exact = Fraction(exact)
    ex = float(exact)
    scale = max(1.0, abs(ex))
    if abs(value.imag) > tol * (1 + abs(value)) and abs(value.imag) > tol * scale:
        return PoissonResult(value, "inconclusive", exact)
    err = abs(value - ex) / scale
    return PoissonResult(value, "match" if err <= tol else "mismatch", exact, err)


def admissible_Rs(n: int, r: int, count: int = 2) -> List[int]:
    start = min_exact_R(n, r)
    out = []
    R = start
    while len(out) < count:
        if euler_char(n, r, R) == 0:
            out.append(R)
        R += 1
    return out


@dataclass
class CrossCheckReport:
    n: int
    r: int
    records: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(rec["agree"] for rec in self.records)

    def values(self) -> dict:
        return {rec["method"]: rec["value"] for rec in self.records if rec.get("kind") == "method"}


def cross_check(f: PolyMap, tol: float = 1e-9, seed: int = 0, koszul_count: int = 2) -> CrossCheckReport:
    """Run every applicable method and compare absolute values pairwise.

    Records: one per method evaluation, one per pair, and a seeded degree-law
    check |R(lam f)| = |lam|^(n r^(n-1)) |R(f)|.
    """
    n, r = f.n, f.r
    rep = CrossCheckReport(n, r)
    exact = {}
    errors = {}
    if n == 2:
        try:
            exact["sylvester"] = resultant_sylvester(f[0], f[1]).value
        except Exception as exc:  # report content, not a crash
            errors["sylvester"] = str(exc)
    for R in admissible_Rs(n, r, koszul_count):
        name = f"koszul[R={R}]"
        try:
            exact[name] = resultant_koszul(f, R).value
        except Exception as exc:
            errors[name] = f"{type(exc).__name__}: {exc}"
    for name, val in exact.items():
        rep.records.append({"kind": "method", "method": name, "value": str(val), "agree": True})
    for name, msg in errors.items():
        rep.records.append({"kind": "method", "method": name, "error": msg, "agree": False})
    names = list(exact)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = names[i], names[j]
            rep.records.append({
                "kind": "pair", "pair": [a, b],
                "agree": abs(exact[a]) == abs(exact[b]),
            })
    if n == 2 and names:
        pois = poisson_product_2(f[0], f[1], tol, exact=exact.get("sylvester"))
        rec = {"kind": "pair", "pair": ["poisson", "sylvester"], "status": pois.status,
               "agree": pois.status in ("match", "unsupported")}
        if pois.value is not None:
            rec["approx"] = [pois.value.real, pois.value.imag]
            rec["rel_error"] = pois.rel_error
        rep.records.append(rec)
    if names:
        rng = random.Random(seed)
        lam = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        scaled = resultant_koszul(scale_map(f, lam)).value
        base = abs(exact[names[-1]])
        rep.records.append({
            "kind": "degree-law", "lambda": str(lam),
            "agree": abs(scaled) == abs(lam) ** resultant_degree(n, r) * base,
        })
    return rep

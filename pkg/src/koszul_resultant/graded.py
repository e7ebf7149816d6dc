"""Graded spaces Omega(p, q) and Koszul complexes of a polynomial map.

Omega(p, q) is spanned by (monomial of degree p) * (theta word of length q),
with anticommuting theta_1..theta_n. Basis order: monomials graded-lex outer,
theta words inner, ordered by their complementary index set ascending
(for n = 3 that is theta_2 theta_3, theta_1 theta_3, theta_1 theta_2 and
theta_3, theta_2, theta_1). Theta indices are 0-based internally.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Tuple

from .complexes import ChainComplex, verify_nilpotent
from .errors import InputError, NilpotencyError
from .linalg import ExactMatrix
from .poly import Monomial, PolyMap, monomials

ThetaWord = Tuple[int, ...]


def omega_dim(n: int, p: int, q: int) -> int:
    """C(p+n-1, p) * C(n, q); zero for q > n or negative grades."""
    if p < 0 or q < 0 or q > n:
        return 0
    return comb(p + n - 1, p) * comb(n, q)


@lru_cache(maxsize=None)
def theta_words(n: int, q: int) -> Tuple[ThetaWord, ...]:
    if q < 0 or q > n:
        return ()
    out = []
    for missing in combinations(range(n), n - q):
        gone = set(missing)
        out.append(tuple(i for i in range(n) if i not in gone))
    return tuple(out)


def format_word(word: ThetaWord) -> str:
    return "".join(f"θ{i + 1}" for i in word)


@dataclass(frozen=True)
class OmegaBasis:
    n: int
    p: int
    q: int
    elements: Tuple[Tuple[Monomial, ThetaWord], ...]

    def __len__(self):
        return len(self.elements)

    def index(self) -> Dict[Tuple[Monomial, ThetaWord], int]:
        return _basis_index(self.n, self.p, self.q)

    def labels(self, names=None) -> List[str]:
        out = []
        for mono, word in self.elements:
            parts = []
            if mono.degree:
                parts.append(mono.format(names))
            if word:
                parts.append(format_word(word))
            out.append("*".join(parts) if parts else "1")
        return out


@lru_cache(maxsize=None)
def omega_basis(n: int, p: int, q: int) -> OmegaBasis:
    if q > n or q < 0 or p < 0:
        return OmegaBasis(n, p, q, ())
    words = theta_words(n, q)
    elems = tuple((m, w) for m in monomials(n, p) for w in words)
    return OmegaBasis(n, p, q, elems)


@lru_cache(maxsize=None)
def _basis_index(n, p, q):
    return {e: i for i, e in enumerate(omega_basis(n, p, q).elements)}


@dataclass(frozen=True)
class KoszulSpec:
    n: int
    r: int
    R: int
    terms: Tuple[Tuple[int, int], ...]

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(omega_dim(self.n, p, q) for p, q in self.terms)

    @property
    def chi(self) -> int:
        return euler_char(self.n, self.r, self.R)

    def format_spaces(self) -> str:
        return " → ".join(f"Ω({p},{q})" for p, q in self.terms)

    def format_dims(self) -> str:
        return " → ".join(str(d) for d in self.dims)


def _check_nr(n, r):
    if n < 1:
        raise InputError("need at least one variable")
    if r < 1:
        raise InputError("degree must be at least 1")


def koszul_spec(n: int, r: int, R: int) -> KoszulSpec:
    """Terms Omega(R - i r, i) for i = q_max, ..., 0 with q_max = min(R // r, n)."""
    _check_nr(n, r)
    if R < 0:
        raise InputError("R must be non-negative")
    qmax = min(R // r, n)
    return KoszulSpec(n, r, R, tuple((R - i * r, i) for i in range(qmax, -1, -1)))


def euler_char(n: int, r: int, R: int) -> int:
    """Alternating dimension sum of the R-th complex, rightmost term positive."""
    _check_nr(n, r)
    return sum((-1) ** i * omega_dim(n, R - i * r, i) for i in range(0, min(R // r, n) + 1))


def euler_genfunc(n: int, r: int, R_max: int) -> List[int]:
    """Coefficients of (1 + t + ... + t^(r-1))^n up to t^R_max."""
    _check_nr(n, r)
    poly = [1]
    for _ in range(n):
        nxt = [0] * (len(poly) + r - 1)
        for i, a in enumerate(poly):
            for j in range(r):
                nxt[i + j] += a
        poly = nxt
    return [poly[R] if R < len(poly) else 0 for R in range(R_max + 1)]


def min_exact_R(n: int, r: int) -> int:
    """Smallest R whose complex has vanishing Euler characteristic, n(r-1) + 1."""
    return n * (r - 1) + 1


def build_differential(f: PolyMap, source: Tuple[int, int]) -> ExactMatrix:
    """Matrix of d = sum_j f_j d/dtheta_j from Omega(p, q) to Omega(p + r, q - 1).

    Rows follow omega_basis(n, p, q), columns omega_basis(n, p + r, q - 1).
    d/dtheta_j on theta_{w_1}...theta_{w_q} (increasing indices) gives
    (-1)^(k-1) times the word with w_k = j removed.
    """
    p, q = source
    n, r = f.n, f.r
    if q < 1:
        raise InputError("the Koszul differential needs theta degree q >= 1")
    if q > n:
        raise InputError(f"theta degree {q} exceeds n = {n}")
    src = omega_basis(n, p, q)
    dst_index = _basis_index(n, p + r, q - 1)
    cols = omega_dim(n, p + r, q - 1)
    entries = [Fraction(0)] * (len(src) * cols)
    polys = [sorted(g.terms.items()) for g in f.polys]
    for row, (mono, word) in enumerate(src.elements):
        base = row * cols
        for k, j in enumerate(word):
            sign = -1 if k % 2 else 1
            rest = word[:k] + word[k + 1:]
            for m, c in polys[j]:
                prod = Monomial(a + b for a, b in zip(mono, m))
                entries[base + dst_index[(prod, rest)]] += sign * c
    return ExactMatrix(len(src), cols, tuple(entries))


def build_complex(f: PolyMap, R: int = None) -> ChainComplex:
    """Koszul complex of f whose rightmost space is Omega(R, 0)."""
    if R is None:
        R = min_exact_R(f.n, f.r)
    spec = koszul_spec(f.n, f.r, R)
    diffs = tuple(build_differential(f, t) for t in spec.terms[:-1])
    c = ChainComplex(spec.dims, diffs, verify=False)
    rep = verify_nilpotent(c)
    if not rep.ok:
        raise NilpotencyError(f"Koszul complex is not nilpotent at {rep.failure}", rep.failure)
    return c


def tower(n: int, r: int, R_max: int) -> List[KoszulSpec]:
    return [koszul_spec(n, r, R) for R in range(R_max + 1)]

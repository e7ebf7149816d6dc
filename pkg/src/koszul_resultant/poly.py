"""Monomials, homogeneous polynomials and square polynomial maps over Q.

Coefficients are :class:`fractions.Fraction` values. Polynomials are stored
sparsely, keyed by exponent vector; the symmetric coefficient tensor of a
degree-r form is never materialised.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import InputError

Rat = Fraction


def to_rat(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    raise InputError(f"cannot use {type(value).__name__} as an exact rational")


class Monomial(tuple):
    """Exponent vector x_1^e_1 ... x_n^e_n.

    A tuple subclass so monomials hash and sort cheaply; the total degree is
    computed once on construction.
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise InputError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def times(self, other: "Monomial") -> "Monomial":
        if len(other) != len(self):
            raise InputError("monomials over different variable counts")
        return Monomial(a + b for a, b in zip(self, other))

    @staticmethod
    def one(n: int) -> "Monomial":
        return Monomial((0,) * n)

    @staticmethod
    def var(n: int, k: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[k] = power
        return Monomial(exps)

    def value(self, point: Sequence[Fraction]) -> Fraction:
        out = Fraction(1)
        for x, e in zip(point, self):
            if e:
                out *= x ** e
        return out

    def format(self, names: Sequence[str] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(len(self))]
        parts = []
        for name, e in zip(names, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def monomials(n: int, degree: int) -> Tuple[Monomial, ...]:
    """All monomials of the given degree, graded-lex with x_1 > x_2 > ... > x_n."""
    if n == 0:
        return (Monomial(()),) if degree == 0 else ()
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(Monomial(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    rec([], degree, n)
    return tuple(out)


def grlex_key(m: Monomial):
    # ascending sort with this key gives graded-lex descending order
    return (-sum(m), tuple(-e for e in m))


@dataclass(frozen=True)
class HPoly:
    """Homogeneous polynomial of fixed degree in n variables.

    ``terms`` never holds zero coefficients; the zero polynomial is the empty
    mapping and still carries its degree tag.
    """

    n: int
    degree: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.degree < 0:
            raise InputError("variable count and degree must be non-negative")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            mono = mono if isinstance(mono, Monomial) else Monomial(mono)
            if len(mono) != self.n:
                raise InputError(f"monomial {tuple(mono)} has wrong length for n={self.n}")
            if mono.degree != self.degree:
                raise InputError(
                    f"monomial {tuple(mono)} has degree {mono.degree}, expected {self.degree}"
                )
            coeff = to_rat(coeff)
            if coeff:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, n: int, degree: int) -> "HPoly":
        return cls(n, degree, {})

    @classmethod
    def from_dense(cls, n: int, degree: int, coeffs: Sequence) -> "HPoly":
        """Build from a coefficient list aligned with ``monomials(n, degree)``.

        For n = 2 this is the binary-form convention f_0 x^r + f_1 x^(r-1) y + ... + f_r y^r.
        """
        basis = monomials(n, degree)
        if len(coeffs) != len(basis):
            raise InputError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
        return cls(n, degree, dict(zip(basis, coeffs)))

    def dense(self):
        return [self.coeff(m) for m in monomials(self.n, self.degree)]

    def coeff(self, mono) -> Fraction:
        return self.terms.get(Monomial(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != self.n:
            raise InputError(f"point has {len(point)} coordinates, polynomial has {self.n} variables")
        pt = [to_rat(x) for x in point]
        return sum((c * m.value(pt) for m, c in self.terms.items()), Fraction(0))

    def scale(self, lam) -> "HPoly":
        lam = to_rat(lam)
        return HPoly(self.n, self.degree, {m: c * lam for m, c in self.terms.items()})

    def mul_monomial(self, mono) -> "HPoly":
        mono = Monomial(mono)
        if len(mono) != self.n:
            raise InputError("monomial and polynomial have different variable counts")
        return HPoly(
            self.n, self.degree + mono.degree, {m.times(mono): c for m, c in self.terms.items()}
        )

    def _check_compatible(self, other: "HPoly"):
        if (self.n, self.degree) != (other.n, other.degree):
            raise InputError(
                f"incompatible polynomials: (n={self.n}, deg={self.degree}) vs "
                f"(n={other.n}, deg={other.degree})"
            )

    def __add__(self, other: "HPoly") -> "HPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return HPoly(self.n, self.degree, terms)

    def __neg__(self) -> "HPoly":
        return self.scale(-1)

    def __sub__(self, other: "HPoly") -> "HPoly":
        return self + (-other)

    def format(self, names: Sequence[str] = None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono.format(names)
            if mono.degree == 0:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f"{sign} {text}")
        return " ".join(pieces)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class PolyMap:
    """Square system f_1, ..., f_n of degree-r forms in n variables."""

    polys: Tuple[HPoly, ...]

    def __post_init__(self):
        polys = tuple(self.polys)
        if not polys:
            raise InputError("a polynomial map needs at least one polynomial")
        n, r = polys[0].n, polys[0].degree
        for p in polys:
            if (p.n, p.degree) != (n, r):
                raise InputError("all polynomials of a map must share n and degree")
        if len(polys) != n:
            raise InputError(f"square system required: {len(polys)} polynomials in {n} variables")
        object.__setattr__(self, "polys", polys)

    @property
    def n(self) -> int:
        return self.polys[0].n

    @property
    def r(self) -> int:
        return self.polys[0].degree

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i) -> HPoly:
        return self.polys[i]

    def __len__(self):
        return len(self.polys)

    def eval(self, point) -> Tuple[Fraction, ...]:
        return tuple(p.eval(point) for p in self.polys)

    @classmethod
    def from_dense(cls, n: int, r: int, rows: Sequence[Sequence]) -> "PolyMap":
        return cls(tuple(HPoly.from_dense(n, r, row) for row in rows))


def scale_map(f: PolyMap, lam) -> PolyMap:
    """Multiply every coefficient of every polynomial by ``lam``."""
    return PolyMap(tuple(p.scale(lam) for p in f.polys))


def scale_one(f: PolyMap, index: int, lam) -> PolyMap:
    """Multiply only polynomial ``index`` by ``lam``."""
    polys = list(f.polys)
    polys[index] = polys[index].scale(lam)
    return PolyMap(tuple(polys))


def eval_poly(p: HPoly, point) -> Fraction:
    return p.eval(point)


def mul_monomial(p: HPoly, mono) -> HPoly:
    return p.mul_monomial(mono)

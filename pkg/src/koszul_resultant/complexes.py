"""Finite chain complexes over Q and Cayley's determinant of a complex.

A complex L_1 -> L_2 -> ... -> L_p is stored as dims (l_1, ..., l_p) and
matrices d_1, ..., d_{p-1} with d_i of shape l_i x l_{i+1}; vectors are rows,
so composition is the plain product d_i @ d_{i+1}.

Index subsets (the sigma_i picking rows and columns of minors) are 0-based
tuples in this module; the CLI prints them 1-based.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import DegenerateComplexError, InputError, NilpotencyError, SelectionError
from .linalg import ExactMatrix, bareiss_det, integer_rows, pivot_columns_int, rank


@dataclass(frozen=True)
class NilpotencyReport:
    ok: bool
    # 1-based (differential index i, row, col) of the first nonzero entry of d_i @ d_{i+1}
    failure: Optional[Tuple[int, int, int]] = None
    value: Optional[Fraction] = None


def _first_nonzero_product(diffs) -> NilpotencyReport:
    for i in range(len(diffs) - 1):
        prod = diffs[i] @ diffs[i + 1]
        for idx, e in enumerate(prod.entries):
            if e:
                row, col = divmod(idx, prod.cols)
                return NilpotencyReport(False, (i + 1, row + 1, col + 1), e)
    return NilpotencyReport(True)


@dataclass(frozen=True)
class ChainComplex:
    """Shape-checked sequence of matrices; nilpotency is enforced unless ``verify=False``."""

    dims: Tuple[int, ...]
    diffs: Tuple[ExactMatrix, ...]
    verify: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        diffs = tuple(self.diffs)
        if not dims:
            raise InputError("a complex needs at least one term")
        if any(d < 0 for d in dims):
            raise InputError("negative dimension in complex")
        if len(diffs) != len(dims) - 1:
            raise InputError(f"{len(dims)} terms need {len(dims) - 1} differentials, got {len(diffs)}")
        for i, d in enumerate(diffs):
            if d.shape != (dims[i], dims[i + 1]):
                raise InputError(
                    f"d_{i + 1} has shape {d.rows}x{d.cols}, expected {dims[i]}x{dims[i + 1]}"
                )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "diffs", diffs)
        if self.verify:
            rep = _first_nonzero_product(diffs)
            if not rep.ok:
                i, row, col = rep.failure
                raise NilpotencyError(
                    f"d_{i} * d_{i + 1} has nonzero entry {rep.value} at ({row}, {col})", rep.failure
                )

    @property
    def p(self) -> int:
        return len(self.dims)

    @classmethod
    def from_lists(cls, diffs: Sequence[Sequence[Sequence]], dims=None, verify=True) -> "ChainComplex":
        mats = []
        for k, d in enumerate(diffs):
            cols = None
            if dims is not None:
                cols = dims[k + 1]
            mats.append(ExactMatrix.from_rows(d, cols))
        if dims is None:
            if not mats:
                raise InputError("dims are required for a complex without differentials")
            dims = [m.rows for m in mats] + [mats[-1].cols]
        return cls(tuple(dims), tuple(mats), verify=verify)

    def scale(self, lam) -> "ChainComplex":
        return ChainComplex(self.dims, tuple(d.scale(lam) for d in self.diffs), verify=False)


def verify_nilpotent(c: ChainComplex) -> NilpotencyReport:
    return _first_nonzero_product(c.diffs)


def euler_characteristic(dims: Sequence[int]) -> int:
    """Alternating sum with the rightmost term counted positive."""
    p = len(dims)
    return sum((-1) ** (p - 1 - k) * l for k, l in enumerate(dims))


@dataclass(frozen=True)
class CohomologyReport:
    ranks: Tuple[int, ...]
    h: Tuple[int, ...]
    chi: int
    exact: bool

    def summary(self) -> str:
        hs = ",".join(str(x) for x in self.h)
        return f"χ={self.chi}, h=({hs}), {'exact' if self.exact else 'not exact'}"


def cohomology(c: ChainComplex) -> CohomologyReport:
    """Ranks of the differentials and cohomology dimensions at every term."""
    ranks = tuple(rank(d) for d in c.diffs)
    h = []
    for i, l in enumerate(c.dims):
        r_out = ranks[i] if i < len(ranks) else 0
        r_in = ranks[i - 1] if i > 0 else 0
        h.append(l - r_out - r_in)
    h = tuple(h)
    return CohomologyReport(ranks, h, euler_characteristic(c.dims), all(x == 0 for x in h))


def _ks(dims: Sequence[int]) -> List[int]:
    """k_1, ..., k_p from l_m = k_{m-1} + k_m with k_0 = 0."""
    ks = []
    prev = 0
    for l in dims:
        prev = l - prev
        ks.append(prev)
    return ks


def sigma_sizes(dims: Sequence[int]) -> List[int]:
    """Sizes |sigma_2|, ..., |sigma_{p-1}| for a complex with these dims.

    Raises InputError when the Euler characteristic is nonzero or some
    alternating partial sum is negative (no determinant exists).
    """
    ks = _ks(dims)
    if any(k < 0 for k in ks):
        raise InputError(f"dims {tuple(dims)} have a negative alternating partial sum")
    if ks[-1] != 0:
        raise InputError(f"dims {tuple(dims)} have nonzero Euler characteristic")
    # |sigma_{i+1}| = k_i; sigma_p is all of L_p and is left implicit
    return ks[:-2] if len(ks) >= 2 else []


def det_degree(dims: Sequence[int]) -> int:
    """Total degree of DET in the matrix entries: sum_i i (-1)^(i-1) l_{p-i}."""
    sigma_sizes(dims)
    p = len(dims)
    return sum(i * (-1) ** (i - 1) * dims[p - i - 1] for i in range(1, p))


@dataclass(frozen=True)
class MinorSelection:
    """sigma_2, ..., sigma_{p-1} as sorted 0-based index tuples."""

    sigmas: Tuple[Tuple[int, ...], ...]

    def one_based(self):
        return [[i + 1 for i in s] for s in self.sigmas]


def _complement(k: int, sigma: Sequence[int]) -> List[int]:
    s = set(sigma)
    return [i for i in range(k) if i not in s]


def _minor_blocks(c: ChainComplex, sel: MinorSelection):
    """(rows, cols) of M_1, ..., M_{p-1}, validated against the dims."""
    sizes = sigma_sizes(c.dims)
    if len(sel.sigmas) != len(sizes):
        raise InputError(f"selection has {len(sel.sigmas)} subsets, complex needs {len(sizes)}")
    for k, (s, size) in enumerate(zip(sel.sigmas, sizes)):
        l = c.dims[k + 1]
        if len(s) != size or len(set(s)) != size or any(not 0 <= i < l for i in s):
            raise InputError(f"sigma_{k + 2} must be {size} distinct indices below {l}")
    # sigma_1 is empty and sigma_p is everything
    full = [()] + [tuple(sorted(s)) for s in sel.sigmas] + [tuple(range(c.dims[-1]))]
    blocks = []
    for i in range(c.p - 1):
        rows = _complement(c.dims[i], full[i])
        cols = list(full[i + 1])
        blocks.append((rows, cols))
    return blocks


def is_numerator(p: int, i: int) -> bool:
    """Whether M_i (1-based i) carries exponent +1 in the product for a p-term complex."""
    return (p + i + 1) % 2 == 0


def complex_minors(c: ChainComplex, sel: MinorSelection) -> List[Fraction]:
    """M_1, ..., M_{p-1}: M_i occupies rows complement(sigma_i) and columns sigma_{i+1} of d_i."""
    return [bareiss_det(d.submatrix(rows, cols)) for d, (rows, cols) in zip(c.diffs, _minor_blocks(c, sel))]


def split_minors(c: ChainComplex, sel: MinorSelection):
    """Numerator and denominator minor lists of the determinant formula."""
    minors = complex_minors(c, sel)
    num = [m for i, m in enumerate(minors, 1) if is_numerator(c.p, i)]
    den = [m for i, m in enumerate(minors, 1) if not is_numerator(c.p, i)]
    return num, den


def det_complex(c: ChainComplex, sel: MinorSelection) -> Fraction:
    """Cayley determinant M_{p-1} M_{p-3} ... / (M_{p-2} M_{p-4} ...).

    The value depends on the selection only through its sign.
    """
    num, den = split_minors(c, sel)
    top = Fraction(1)
    for m in num:
        top *= m
    bottom = Fraction(1)
    for m in den:
        bottom *= m
    if bottom == 0:
        raise SelectionError("a denominator minor vanishes for this selection")
    return top / bottom


def select_minors(c: ChainComplex) -> MinorSelection:
    """Deterministic selection with every denominator minor nonzero.

    Sweeps left to right: sigma_{i+1} is the set of pivot columns of d_i
    restricted to the rows complementary to sigma_i. For an exact complex every
    restricted block has full rank, so this never fails. A rank-deficient block
    is tolerated only where its minor sits in the numerator (DET is then 0);
    a deficient denominator raises DegenerateComplexError.
    """
    sizes = sigma_sizes(c.dims)
    p = c.p
    sigmas = []
    prev: Tuple[int, ...] = ()
    for i in range(p - 2):
        d = c.diffs[i]
        rows = _complement(c.dims[i], prev)
        need = sizes[i]
        block, _ = integer_rows(d.submatrix(rows, range(d.cols)))
        piv = pivot_columns_int(block, d.cols)
        if len(piv) < need:
            if not is_numerator(p, i + 1):
                raise DegenerateComplexError(
                    f"rows of d_{i + 1} outside the previous selection have rank {len(piv)} < {need}",
                    step=i + 1, rank=len(piv), needed=need,
                )
            taken = set(piv)
            piv = piv + [j for j in range(d.cols) if j not in taken][: need - len(piv)]
        prev = tuple(sorted(piv[:need]))
        sigmas.append(prev)
    return MinorSelection(tuple(sigmas))


def all_selections(dims: Sequence[int]):
    """Every tuple (sigma_2, ..., sigma_{p-1}) of the right sizes (exhaustive; small dims only)."""
    sizes = sigma_sizes(dims)
    pools = [list(combinations(range(dims[k + 1]), size)) for k, size in enumerate(sizes)]

    def rec(k, acc):
        if k == len(pools):
            yield MinorSelection(tuple(acc))
            return
        for s in pools[k]:
            yield from rec(k + 1, acc + [s])

    yield from rec(0, [])


def determinant(c: ChainComplex) -> Fraction:
    """DET of the complex with an automatic selection; 0 when the complex is not exact."""
    try:
        sel = select_minors(c)
    except DegenerateComplexError:
        rep = cohomology(c)
        if rep.exact:
            raise
        return Fraction(0)
    return det_complex(c, sel)

import random
from fractions import Fraction

import pytest

from koszul_resultant.errors import InputError
from koszul_resultant.oracle import PlantSpec, plant_common_root, random_system
from koszul_resultant.poly import HPoly, PolyMap, scale_map, scale_one
from koszul_resultant.resultant import (
    KOSZUL,
    SYLVESTER,
    resultant,
    resultant_degree,
    resultant_koszul,
    resultant_sylvester,
    sylvester_matrix,
)


def binary(*coeffs):
    return HPoly.from_dense(2, len(coeffs) - 1, coeffs)


def r22_closed(f, g):
    f0, f1, f2 = f
    g0, g1, g2 = g
    return (g0 ** 2 * f2 ** 2 - g0 * g1 * f1 * f2 + g0 * g2 * (f1 ** 2 - 2 * f0 * f2)
            + g1 ** 2 * f0 * f2 - g1 * g2 * f0 * f1 + f0 ** 2 * g2 ** 2)


def test_sylvester_matrix_layouts():
    assert sylvester_matrix(binary(2, 3), binary(5, 7)).to_rows() == [[2, 3], [5, 7]]
    assert sylvester_matrix(binary(1, 2, 3), binary(4, 5, 6)).to_rows() == [
        [1, 2, 3, 0], [0, 1, 2, 3], [4, 5, 6, 0], [0, 4, 5, 6]
    ]
    m = sylvester_matrix(binary(1, 2, 3, 4), binary(5, 6, 7, 8)).to_rows()
    assert m == [
        [1, 2, 3, 4, 0, 0], [0, 1, 2, 3, 4, 0], [0, 0, 1, 2, 3, 4],
        [5, 6, 7, 8, 0, 0], [0, 5, 6, 7, 8, 0], [0, 0, 5, 6, 7, 8],
    ]


def test_sylvester_needs_two_variables():
    p = HPoly.from_dense(3, 1, [1, 2, 3])
    with pytest.raises(InputError):
        sylvester_matrix(p, p)


def test_sylvester_values():
    assert resultant_sylvester(binary(2, 3), binary(5, 7)).value == 2 * 7 - 3 * 5
    assert resultant_sylvester(binary(1, -3, 2), binary(1, -7, 12)).value == 12
    g = binary(4, -1, 0, 2)
    assert resultant_sylvester(g, g).value == 0


def test_closed_form_22():
    rng = random.Random(31)
    for _ in range(30):
        f = [rng.randint(-9, 9) for _ in range(3)]
        g = [rng.randint(-9, 9) for _ in range(3)]
        assert resultant_sylvester(binary(*f), binary(*g)).value == r22_closed(f, g)


def test_koszul_fixture_22():
    f = PolyMap.from_dense(2, 2, [[1, -3, 2], [1, -7, 12]])
    for R in (3, 4, 5):
        assert abs(resultant_koszul(f, R).value) == 12


def test_koszul_rejects_nonzero_chi():
    f = PolyMap.from_dense(2, 2, [[1, -3, 2], [1, -7, 12]])
    with pytest.raises(InputError):
        resultant_koszul(f, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_method_agreement_n2(r):
    for seed in range(15):
        f = random_system(2, r, 6, seed=1000 * r + seed)
        assert abs(resultant_koszul(f).value) == abs(resultant_sylvester(f[0], f[1]).value)


@pytest.mark.parametrize("r, Rs, count", [(2, (4, 5, 6), 6), (3, (7, 8), 2)])
def test_R_independence(r, Rs, count):
    for seed in range(count):
        f = random_system(3, r, 3, seed=seed + 50)
        values = {abs(resultant_koszul(f, R).value) for R in Rs}
        assert len(values) == 1 and 0 not in values


def test_monomial_system_is_unit():
    f = PolyMap.from_dense(3, 2, [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]])
    assert abs(resultant_koszul(f, 4).value) == 1
    assert abs(resultant_koszul(f, 5).value) == 1


def test_frozen_fixture_3x2():
    f = random_system(3, 2, 3, seed=7)
    assert abs(resultant(f).value) == 103167


def test_rational_coefficients():
    f = random_system(3, 2, 3, seed=7)
    half = scale_one(f, 0, Fraction(1, 2))
    assert abs(resultant(half).value) == Fraction(103167, 2 ** 4)


def test_degree_laws():
    rng = random.Random(12)
    for n, r in [(2, 2), (2, 3), (3, 2)]:
        f = random_system(n, r, 4, seed=n * 10 + r)
        base = abs(resultant(f, KOSZUL).value)
        assert base != 0
        lam = Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice([-1, 1])
        assert abs(resultant(scale_map(f, lam), KOSZUL).value) == abs(lam) ** resultant_degree(n, r) * base
        assert abs(resultant(scale_one(f, 0, lam), KOSZUL).value) == abs(lam) ** (r ** (n - 1)) * base


@pytest.mark.parametrize("n, r, root", [(2, 2, (1, 1)), (2, 3, (2, -1)), (3, 2, (1, 0, 0)), (3, 2, (1, 2, -1))])
def test_planted_root_vanishes(n, r, root):
    f = plant_common_root(PlantSpec(n, r, root, seed=4))
    if n == 2:
        assert resultant_sylvester(f[0], f[1]).value == 0
    for R in (n * (r - 1) + 1, n * (r - 1) + 2):
        res = resultant_koszul(f, R)
        assert res.value == 0
        if res.certificate is not None:
            assert not res.certificate.exact


def test_dispatcher():
    res = resultant(random_system(2, 3, 4, seed=2))
    assert res.method == SYLVESTER and res.degree_expected == 6
    res = resultant(random_system(3, 2, 4, seed=2))
    assert res.method == KOSZUL and res.R_used == 4 and res.degree_expected == 12
    f = random_system(2, 2, 4, seed=8)
    assert abs(resultant(f, KOSZUL).value) == abs(resultant(f).value)
    assert resultant(f, R=4).method == KOSZUL
    with pytest.raises(InputError):
        resultant(random_system(3, 2, 4, seed=2), SYLVESTER)


def test_to_json():
    out = resultant(PolyMap.from_dense(2, 2, [[1, -3, 2], [1, -7, 12]])).to_json()
    assert out["value"] == "12" and out["sign_convention"] == "selection-dependent"
    assert out["method"] == "sylvester" and out["degree_expected"] == 4


@pytest.mark.parametrize("n, r, deg", [(2, 2, 4), (3, 2, 12), (5, 1, 5), (3, 3, 27)])
def test_resultant_degree(n, r, deg):
    assert resultant_degree(n, r) == deg


@pytest.mark.parametrize("n, r, seed, root", [
    (2, 2, 7508, (1, 0)),
    (3, 2, 5009, (0, -1, 1)),
    (3, 3, 7504, (0, -1, 1)),
])
def test_small_coefficient_systems_can_be_singular(n, r, seed, root):
    # narrow coefficient ranges produce genuinely singular systems; zero is correct
    f = random_system(n, r, 5, seed=seed)
    assert all(p.eval(root) == 0 for p in f.polys)
    assert resultant_koszul(f).value == 0

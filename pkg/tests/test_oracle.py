import random
from fractions import Fraction

import pytest

from koszul_resultant.errors import InputError
from koszul_resultant.oracle import (
    PlantSpec,
    cross_check,
    plant_common_root,
    poisson_product_2,
    random_system,
)
from koszul_resultant.poly import HPoly, PolyMap
from koszul_resultant.resultant import resultant_sylvester


def binary(*coeffs):
    return HPoly.from_dense(2, len(coeffs) - 1, coeffs)


def test_random_system_deterministic():
    assert random_system(2, 2, 5, seed=1) == random_system(2, 2, 5, seed=1)
    assert random_system(2, 2, 5, seed=1) != random_system(2, 2, 5, seed=2)
    f = random_system(3, 2, 3, seed=7)
    assert all(abs(c) <= 3 for p in f.polys for c in p.dense())


def test_random_system_zero_bound():
    f = random_system(2, 2, 0, seed=3)
    assert all(p.is_zero() for p in f.polys)


@pytest.mark.parametrize("n, r, root", [(2, 2, (1, 1)), (3, 2, (1, 0, 0)), (3, 3, (0, Fraction(1, 2), 2)),
                                        (4, 2, (0, 0, 0, -3))])
def test_plant_vanishes(n, r, root):
    for seed in range(5):
        f = plant_common_root(PlantSpec(n, r, root, seed=seed))
        assert all(p.eval(root) == 0 for p in f.polys)
        assert f == plant_common_root(PlantSpec(n, r, root, seed=seed))


def test_plant_rejects_zero_root():
    with pytest.raises(InputError):
        PlantSpec(2, 2, (0, 0))


def test_poisson_fixture():
    res = poisson_product_2(binary(1, -3, 2), binary(1, -7, 12), tol=1e-9)
    assert res.status == "match" and abs(res.value - 12) < 1e-9


def test_poisson_shared_roots():
    g = binary(2, -1, -3)
    res = poisson_product_2(g, g)
    assert abs(res.value) < 1e-9 and res.status == "match"


def test_poisson_unsupported():
    assert poisson_product_2(binary(1, 2, 3), binary(0, 1, 1)).status == "unsupported"


def test_poisson_random_23():
    f = random_system(2, 3, 9, seed=77)
    assert poisson_product_2(f[0], f[1], tol=1e-9).status == "match"


def test_poisson_samples():
    matched = 0
    seed = 0
    while matched < 100:
        rng = random.Random(seed)
        r = rng.randint(1, 4)
        bound = rng.randint(1, 10)
        f = random_system(2, r, bound, seed)
        seed += 1
        if f[1].dense()[0] == 0:
            continue
        res = poisson_product_2(f[0], f[1], tol=1e-6)
        assert res.status == "match", (seed - 1, res)
        matched += 1


def test_cross_check_generic():
    rep = cross_check(random_system(2, 2, 5, seed=1), seed=3)
    assert rep.ok
    kinds = {rec["kind"] for rec in rep.records}
    assert kinds == {"method", "pair", "degree-law"}
    assert set(rep.values()) == {"sylvester", "koszul[R=3]", "koszul[R=4]"}


def test_cross_check_planted():
    f = plant_common_root(PlantSpec(3, 2, (1, 0, 0), seed=2))
    rep = cross_check(f)
    assert rep.ok and all(v == "0" for v in rep.values().values())


def test_cross_check_zero_system():
    rep = cross_check(PolyMap.from_dense(2, 2, [[0, 0, 0], [0, 0, 0]]))
    assert all(v == "0" for v in rep.values().values())


def test_cross_check_deterministic():
    f = random_system(3, 2, 3, seed=7)
    assert cross_check(f, seed=5).records == cross_check(f, seed=5).records

from __future__ import annotations

import numpy as np
import pytest

from grcodes import constructions as cons
from grcodes import linalg
from grcodes.errors import AlgebraError
from grcodes.groupring import GF2, ZZ, GroupRingElement, RingSpec, parse_element
from grcodes.groups import cyclic, make_group
from grcodes.rgmatrix import classify, rg_rank, sigma

GF3 = RingSpec.gf(3)


def test_cyclic_code_small():
    pair, code = cons.cyclic_code(parse_element("1 + g", cyclic(4), GF2))
    assert pair.generator_poly == (1, 1)
    assert pair.check_poly == (1, 1, 1, 1)
    assert (code.n, code.k, code.min_distance()) == (4, 3, 2)


def test_cyclic_code_of_unit_is_everything():
    pair, code = cons.cyclic_code(parse_element("1 + g + g^2", cyclic(4), GF2))
    assert pair.degree == 0 and code.k == 4 and code.min_distance() == 1


def test_cyclic_code_zero():
    with pytest.raises(AlgebraError):
        cons.cyclic_code(GroupRingElement.zero(cyclic(5), GF2))


def test_cyclic_hamming_and_published_element():
    _, code = cons.cyclic_code(parse_element("1 + g^2 + g^3", cyclic(7), GF2))
    assert (code.n, code.k, code.min_distance()) == (7, 4, 3)
    # 1 + g^2 + g^5 is coprime to x^7 - 1: the whole space
    _, code = cons.cyclic_code(parse_element("1 + g^2 + g^5", cyclic(7), GF2))
    assert (code.n, code.k, code.min_distance()) == (7, 7, 1)


def test_cyclic_code_gf3():
    pair, code = cons.cyclic_code(parse_element("1 + g", cyclic(6), GF3))
    assert code.k == 5
    assert np.array_equal(pair.generator.coeffs[:2], [1, 1])
    code.verify()


def test_cyclic_rejects_noncyclic():
    with pytest.raises(ValueError):
        cons.cyclic_code(GroupRingElement.one(make_group("D6"), GF2))


@pytest.mark.parametrize("ring,name,count", [(GF3, "D10", 500), (ZZ, "D6", 300)], ids=["gf3-D10", "Z-D6"])
def test_dihedral_blocks_vs_rank(ring, name, count):
    G = make_group(name)
    rng = np.random.default_rng(9)
    units = 0
    for _ in range(count):
        lo, hi = (0, 3) if ring.is_field else (-1, 2)
        u = GroupRingElement(G, ring, rng.integers(lo, hi, G.order).tolist())
        blk = cons.dihedral_blocks(u)
        assert blk.is_unit == classify(u).is_unit
        units += blk.is_unit
    assert units > 0


def test_dihedral_blocks_gf2_uses_rank():
    u = parse_element("1 + a", make_group("D6"), GF2)
    blk = cons.dihedral_blocks(u)
    assert not blk.is_unit and blk.method == "rank sigma(u)"


def test_one_plus_reflection_odd_characteristic():
    for ring in (GF3, RingSpec.gf(5), ZZ):
        u = parse_element("1 + a", make_group("D8"), ring)
        assert not cons.dihedral_blocks(u).is_unit
        assert not classify(u).is_unit


def test_dihedral_double_hamming():
    dd = cons.dihedral_double(parse_element("1 + g^2 + g^3", cyclic(7), GF2))
    assert (dd.element * dd.annihilator).is_zero()
    assert dd.code.min_distance() == 4 and dd.code.params() == "(14,7,4)"


def test_dihedral_double_of_unit_published():
    dd = cons.dihedral_double(parse_element("1 + g^2 + g^5", cyclic(7), GF2))
    assert (dd.code.n, dd.code.k, dd.code.min_distance()) == (14, 7, 2)


def test_dihedral_double_rejects_bad_annihilator():
    u = parse_element("1 + g^2 + g^3", cyclic(7), GF2)
    with pytest.raises(AlgebraError):
        cons.dihedral_double(u, v=GroupRingElement.one(cyclic(7), GF2))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_rate_half(n):
    u, v, code = cons.rate_half_dihedral(n)
    assert (u * v).is_zero()
    assert code.k == n and code.n == 2 * n
    assert np.array_equal(code.generator[:, :n], np.eye(n))
    code.verify()


def test_rate_half_rejects_odd():
    with pytest.raises(ValueError):
        cons.rate_half_dihedral(5)


def test_orthogonal_unit():
    assert cons.orthogonal_unit(5, []).is_one()
    u14 = parse_element("1+g^2+g^5+g^9+g^12", cyclic(14), GF2)
    assert cons.orthogonal_unit(7, [2]) == u14
    rng = np.random.default_rng(0)
    n = 10
    for _ in range(20):
        pool = [i for i in range(1, n // 2)]
        I = rng.choice(pool, size=int(rng.integers(0, len(pool) + 1)), replace=False)
        a = cons.orthogonal_unit(n, I)
        S = sigma(a)
        assert np.array_equal(linalg.matmul(S, S.T, 2), np.eye(2 * n))


@pytest.mark.parametrize("n,I", [(6, [3]), (7, [2, 5]), (7, [7]), (7, [1, 1])])
def test_orthogonal_unit_rejections(n, I):
    with pytest.raises(ValueError):
        cons.orthogonal_unit(n, I)


def test_selfdual_family():
    u, code = cons.selfdual_family()
    assert (code.n, code.k, code.min_distance()) == (8, 4, 4)
    assert not np.any(linalg.matmul(code.generator, code.generator.T, 2))


def test_qc_ldpc_c3xc2():
    plan = cons.LdpcPlan(cyclic(5), make_group("C3xC2"), (0, 1, 3, 2, 4, 1), (0, 3))
    res = cons.qc_ldpc(plan)
    H = res.check_full
    assert H.shape == (10, 30)
    assert set(H.sum(axis=1).tolist()) == {6} and set(H.sum(axis=0).tolist()) == {2}
    assert res.exact_rate >= res.target_rate
    res.code.verify()


def test_qc_ldpc_cyclic_labels():
    plan = cons.random_plan(7, 3, 2, seed=4)
    res = cons.qc_ldpc(plan)
    assert res.check_full.shape == (14, 21)
    assert res.code.k == 21 - linalg.rank(res.check_full, 2)
    assert res.code.k >= 7


def test_ldpc_plan_validation():
    with pytest.raises(ValueError):
        cons.LdpcPlan(cyclic(5), cyclic(3), (0, 1), (0,))
    with pytest.raises(ValueError):
        cons.LdpcPlan(cyclic(5), cyclic(3), (0, 1, 2), (0, 1, 2))
    with pytest.raises(ValueError):
        cons.LdpcPlan(cyclic(5), cyclic(3), (0, 1, 7), (0,))


def test_random_plan_deterministic():
    assert cons.random_plan(11, 4, 2, seed=3) == cons.random_plan(11, 4, 2, seed=3)


def test_ldpc_unit_example_small():
    v, u, code = cons.ldpc_unit_example(100)
    assert (u * v).is_one()
    assert u.weight() == 47 and code.k == 50
    assert set(code.check.sum(axis=1).tolist()) == {5}
    code.verify()
    assert rg_rank(u) == 100

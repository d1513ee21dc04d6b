"""End-to-end checks of the python surface against known exact values."""

from fractions import Fraction

import pytest

import cftnvm as c


def test_field_arithmetic():
    f = c.Field(3, 2)
    assert (f.p, f.m, f.q) == (3, 2, 9)
    assert f.modulus == [1, 0, 1]
    g = f.generator()
    powers = {f.pow(g, t).index for t in range(f.q - 1)}
    assert len(powers) == f.q - 1  # generator hits every nonzero element
    x = f.from_coeffs([1, 2])
    assert f.mul(x, f.inv(x)) == f.one()
    assert sorted({f.trace(a) for a in f.elements()}) == [0, 1, 2]


def test_cyclotomic_exact():
    z = c.CycNum.root_of_unity(3, 1)
    assert z + z.conjugated() == c.CycNum(-1)
    half = c.CycNum(1) / c.CycNum(2)
    assert half.rational_value() == Fraction(1, 2)
    total = sum((c.CycNum.root_of_unity(7, k) for k in range(1, 7)), c.CycNum(0))
    assert total == c.CycNum(-1)


def test_gauss_sum_modulus():
    f = c.make_field_for_q(13)
    eps = c.canonical_character(f)
    for k in range(1, 12):
        G = c.gauss_sum(c.MultCharacter(f, k), eps)
        assert (G * G.conjugated()).rational_value() == 13


def test_fourier_roundtrip():
    f = c.make_field_for_q(9)
    g = c.GroupAlgebraElement(f)
    elems = f.elements()
    g[elems[0]] = c.CycNum(2)
    g[elems[3]] = c.CycNum.root_of_unity(4, 1)
    g[elems[7]] = c.CycNum(1) / c.CycNum(3)
    assert c.inverse_fourier(c.fourier_transform(g)) == g


def test_nvm_agreement_and_witness():
    f = c.make_field_for_q(16)
    chi = c.SubgroupChar(c.Subgroup(f, 3), 0)
    rep = c.nvm_instance(chi, c.NvmMethod.both)
    assert rep.holds is False
    assert rep.agreement is True
    M = c.cft_matrix(chi)
    w = c.violation_witness(M, rep.witness, chi)
    assert c.is_chi_symmetric(w, chi)
    hat = c.fourier_transform(w)
    assert all(hat.at_param(M.S[i]).is_zero() for i in rep.witness.rows)
    assert not c.uncertainty_bound_report(w, chi).holds


def test_known_criterion():
    f7 = c.make_field_for_q(7)
    assert c.known_criterion(c.SubgroupChar(c.Subgroup(f7, 3), 1)) is True
    assert c.known_criterion(c.SubgroupChar(c.Subgroup(f7, 3), 0)) is True
    f4 = c.make_field_for_q(4)
    assert c.known_criterion(c.SubgroupChar(c.Subgroup(f4, 3), 0)) is False
    f13 = c.make_field_for_q(13)
    assert c.known_criterion(c.SubgroupChar(c.Subgroup(f13, 4), 1)) is None


def test_scan_deterministic():
    one = [r.json() for r in c.scan_range(13, 3, c.CharSelector.all, 1)]
    two = [r.json() for r in c.scan_range(13, 3, c.CharSelector.all, 2)]
    assert one == two
    assert len(one) == 7  # q in {4, 7, 13}: 1 + 2 + 4 characters


def test_chebotarev():
    rep = c.chebotarev_check(5)
    assert rep.holds
    assert rep.minors_checked == 252


def test_errors():
    with pytest.raises(ValueError):
        c.Field(6, 1)
    with pytest.raises(ValueError):
        c.make_field_for_q(12)
    with pytest.raises(c.OrderLimitError):
        c.CycNum.root_of_unity(10**6, 1)
    f = c.make_field_for_q(7)
    with pytest.raises(ValueError):
        c.Subgroup(f, 4)  # 4 does not divide 6

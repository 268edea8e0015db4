import numpy as np
import pytest

from cellred.sl3lab import (
    NotPrime,
    PrimeField,
    TooLarge,
    build_incidence,
    equivariance_spot_check,
    kernel_analysis,
    kernel_basis_mod,
    principal_series_check,
    rank_mod,
    tau_maps,
)


def test_prime_checks():
    PrimeField(7)
    with pytest.raises(NotPrime):
        PrimeField(6)
    with pytest.raises(NotPrime):
        build_incidence(9)
    with pytest.raises(TooLarge):
        build_incidence(101)


def test_fano_plane():
    sp = build_incidence(2)
    assert sp.n_points == 7
    assert sp.incidence.sum(axis=1).tolist() == [3] * 7  # 3 lines per plane
    assert sp.incidence.sum(axis=0).tolist() == [3] * 7


@pytest.mark.parametrize("p,n", [(2, 7), (3, 13), (5, 31), (7, 57), (11, 133)])
def test_point_counts(p, n):
    sp = build_incidence(p)
    assert sp.n_points == n
    assert (sp.incidence.sum(axis=0) == p + 1).all()
    assert (sp.incidence.sum(axis=1) == p + 1).all()


def test_linear_algebra_mod_p():
    M = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank_mod(M, 5) == 2
    K = kernel_basis_mod(M, 5)
    assert K.shape[0] == 1
    assert ((M @ K.T) % 5 == 0).all()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_tau_preserves_sum_zero_functions(p):
    maps = tau_maps(build_incidence(p))
    # each basis image must itself be a sum-zero function
    assert (maps.tau.sum(axis=0) % p == 0).all()
    assert (maps.tau_prime.sum(axis=0) % p == 0).all()


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_kernel_dimensions_and_subspace_identities(p):
    maps = tau_maps(build_incidence(p))
    rep = kernel_analysis(maps)
    assert rep.dim_f1 == p * p + p
    want = p * (p + 1) // 2
    assert rep.dim_ker_tau == want
    assert rep.dim_ker_tau_prime == want
    assert rep.dim_ker_tau + rep.dim_ker_tau_prime == p * p + p
    assert rep.ker_tau_eq_im_tau_prime
    assert rep.ker_tau_prime_eq_im_tau


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_equivariance_sample(p):
    assert equivariance_spot_check(build_incidence(p), samples=20)


def test_principal_series_p5_spot_orbit():
    rep = principal_series_check(5)
    assert rep.all_ok
    orbit = next(o for o in rep.orbits if (1, 2) in o.members)
    assert sorted(orbit.dims) == [8, 15, 15, 42, 42, 64]
    assert orbit.total == 186 == 6 * 31


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_principal_series_sums(p):
    rep = principal_series_check(p)
    assert rep.orbits, "expected at least one free orbit"
    expected = (p + 1) * (p * p + p + 1)
    for o in rep.orbits:
        assert len(o.members) == 6
        assert o.total == expected
        # free orbits have all coordinates nonzero, and lifts sit in 1..p-2
        for z, lift in zip(o.members, o.lifts):
            assert z[0] != 0 and z[1] != 0
            assert all(1 <= c <= p - 2 for c in lift)


def test_weight_fixed_by_a_non_simple_reflection_is_not_free():
    # (1, p-2) has nonzero coordinates but n1 + n2 = 0 mod p-1; the honest
    # stabiliser computation must exclude its orbit
    for p in (5, 7):
        rep = principal_series_check(p)
        for o in rep.orbits:
            assert (1, p - 2) not in o.members


def test_orbit_count_p7():
    # 36 residue classes; free orbits have size 6
    rep = principal_series_check(7)
    assert all(o.total == 8 * 57 for o in rep.orbits)
    covered = sum(len(o.members) for o in rep.orbits)
    assert covered <= 36 and covered % 6 == 0


def test_principal_series_requires_p_at_least_5():
    with pytest.raises(ValueError):
        principal_series_check(3)

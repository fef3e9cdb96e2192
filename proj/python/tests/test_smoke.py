import math

import mpmath
import pytest

import automorph

mpmath.mp.dps = 30


@pytest.mark.parametrize("s", [0.5, 3.25, complex(0.5, 14.0), complex(-2.5, 1.0), complex(20.0, -30.0)])
def test_log_gamma_matches_mpmath(s):
    ref = complex(mpmath.loggamma(s))
    assert abs(automorph.log_gamma(s) - ref) <= 1e-12 * max(1.0, abs(ref))


@pytest.mark.parametrize("s", [2.0, 0.3, complex(0.5, 14.134725), complex(0.25, 40.0), complex(3.0, -7.0)])
def test_zeta_matches_mpmath(s):
    ref = complex(mpmath.zeta(s))
    assert abs(automorph.zeta(s) - ref) <= 1e-11 * max(1.0, abs(ref))


@pytest.mark.parametrize("t,x", [(0.0, 1.0), (3.0, 0.5), (10.0, 8.0), (25.0, 20.0)])
def test_bessel_k_matches_mpmath(t, x):
    ref = float(mpmath.besselk(1j * t, x).real)
    got = automorph.bessel_k_imag_order(t, x)
    assert abs(got.value - ref) <= 1e-10 * max(abs(ref), 1e-300) + got.abs_err


def test_zeta_pole():
    with pytest.raises(automorph.PoleError):
        automorph.zeta(1.0)


def test_eisenstein_reference_value():
    e = automorph.eisenstein(0.0, 2.0, 1.5)
    assert e.value.real == pytest.approx(4.76372083772947, rel=1e-12)


def test_eisenstein_is_invariant_under_inversion():
    z = complex(0.1, 0.9)
    w = -1 / z
    a = automorph.eisenstein(z.real, z.imag, complex(1.3, 2.0)).value
    b = automorph.eisenstein(w.real, w.imag, complex(1.3, 2.0)).value
    assert abs(a - b) < 1e-9 * abs(a)


def test_fixture_maass_form():
    rec = automorph.load_fixture()[0]
    assert rec.coefficients[0] == 1.0
    z = complex(0.1, 1.3)
    w = -1 / z
    a = automorph.maass(rec, z.real, z.imag).value
    b = automorph.maass(rec, w.real, w.imag).value
    assert abs(a - b) < 1e-6


def test_mellin_barnes_exact_case():
    assert automorph.mellin_barnes_bessel(2.0, 0.0, 0.0) == pytest.approx(0.5, rel=1e-14)


def test_hecke_expansion_catalan():
    assert [automorph.hecke_power_expand(2 * k)[0] for k in range(6)] == [1, 1, 2, 5, 14, 42]


def test_density_functions():
    x = 1e12
    ll = math.log(math.log(x))
    assert automorph.m_func(0, 2j * 50, x) == pytest.approx(ll)
    assert automorph.v_func(0, 2j * 50, x) == pytest.approx(6 * ll)


def test_exponent_regime_error():
    with pytest.raises(automorph.RegimeError):
        automorph.q_exponent(10, 5, 3, 3)


def test_verify_exponents_suite():
    n, failed = automorph.verify("exponents")
    assert n > 0 and failed == []


def test_zeta_left_half_plane_is_out_of_range():
    with pytest.raises(automorph.RangeError):
        automorph.zeta(-1.5)

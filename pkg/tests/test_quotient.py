import cmath
import math

import numpy as np
import pytest

from heckejones.quotient import (EVEN_EXCLUDED, ODD_EXCLUDED, bridge_matrix, burau, burau_hecke_bridge,
                                 burau_quadratic_residual, certificate_at, element_a, free_subgroup_witness,
                                 hecke_burau, infinite_order_certificate, scheme_q, specialize, sweep)
from heckejones.laurent import LaurentPoly
from heckejones.matrices import HeckeMatrix


def test_scheme_even():
    assert scheme_q(2, "even")[0] == 1
    assert abs(scheme_q(6, "even")[0] - cmath.exp(1j * math.pi / 3)) < 1e-15
    q, text = scheme_q(8, "even")
    assert abs(q - cmath.exp(4j * math.pi * 1 / 8)) < 1e-15 and "4 pi i 1/8" in text
    with pytest.raises(ValueError):
        scheme_q(7, "even")
    with pytest.raises(ValueError):
        scheme_q(8, "even", k=5)


def test_scheme_odd():
    q, _ = scheme_q(7, "odd")          # k = 2, even
    assert abs(q ** 2 - cmath.exp(5j * math.pi / 7)) < 1e-12
    q, _ = scheme_q(5, "odd")          # k = 1, odd
    assert abs(q ** 2 - cmath.exp(3j * math.pi / 5)) < 1e-12
    qv, _ = scheme_q(7, "odd", variant="verbatim")
    assert abs(qv ** 2 + cmath.exp(5j * math.pi / 7)) < 1e-12
    with pytest.raises(ValueError):
        scheme_q(6, "odd")
    with pytest.raises(ValueError):
        scheme_q(5, "cubic")


def test_element_a_is_exact_and_invertible():
    a = element_a(2)
    assert a.var == "q" and a.size == 5
    # det f_i = q for g = 2, so det A = (det f_1 det f_2)^12
    assert a.determinant() == LaurentPoly.monomial(24)


def test_certificate_m6_even():
    cert = infinite_order_certificate(2, 6, "even")
    assert cert.verdict == "infinite-order"
    assert abs(cert.modulus - 9.8989795) < 1e-5
    assert cert.to_json()["dominant_modulus"] == "9.8989795"
    assert cert.growth[-1] > cert.growth[0]


def test_specialization_m6_is_valid():
    spec = specialize(2, 6, "even")
    assert spec.valid
    for x in spec.matrices:
        assert np.allclose(np.linalg.matrix_power(x, 6), np.eye(5), atol=1e-9)


def test_modulus_one_is_inconclusive():
    cert = certificate_at(2, 1 + 0j)
    assert cert.verdict == "inconclusive"
    assert abs(cert.modulus - 1) < 1e-6


def test_verbatim_odd_variant_is_invalid():
    spec = specialize(2, 7, "odd", variant="verbatim")
    assert not spec.valid


def test_specialize_rejects_genus():
    with pytest.raises(ValueError):
        specialize(4, 6, "even")


def test_sweep_rows():
    rows = sweep(2, [5, 7], "odd")
    assert [r["m"] for r in rows] == [5, 7]
    assert set(rows[0]) >= {"m", "q_formula", "dressing", "valid", "modulus", "verdict"}


def test_burau_matrices_n4():
    t = LaurentPoly.gen("t")
    one, zero = t.one(), t.zero()
    b1, b2, b3 = burau(4)
    assert b1 == HeckeMatrix([[-t, one, zero], [zero, one, zero], [zero, zero, one]], "t")
    assert b2 == HeckeMatrix([[one, zero, zero], [t, -t, one], [zero, zero, one]], "t")
    assert b3 == HeckeMatrix([[one, zero, zero], [zero, one, zero], [zero, t, -t]], "t")


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_burau_quadratic_and_braid(n):
    assert all(r.is_zero() for r in burau_quadratic_residual(n))
    b = burau(n)
    assert all(x @ y @ x == y @ x @ y for x, y in zip(b, b[1:]))


def test_hecke_burau_bridge():
    report = burau_hecke_bridge()
    assert report["ok"]
    q = LaurentPoly.gen()
    assert bridge_matrix().determinant() == q ** 3 + q + q ** -1
    assert len(hecke_burau(3)) == 2


def test_burau_needs_three_strands():
    with pytest.raises(ValueError):
        burau(2)


def test_free_subgroup_m7_odd():
    cert = free_subgroup_witness(7, "odd")
    p = cert.parameters
    assert p["commutator_distance"] > 1e-6
    assert max(p["power_residuals"]) < 1e-9
    assert cert.verdict == "free-subgroup-witness"


def test_free_subgroup_generic_q():
    cert = free_subgroup_witness(7, "odd", q=1.5 + 0j)
    assert cert.verdict == "free-subgroup-witness"


@pytest.mark.parametrize("scheme,excluded", [("even", EVEN_EXCLUDED), ("odd", ODD_EXCLUDED)])
def test_excluded_powers(scheme, excluded):
    for m in excluded:
        with pytest.raises(ValueError, match="excluded"):
            free_subgroup_witness(m, scheme)


def test_invalid_specialization_is_not_a_witness():
    cert = free_subgroup_witness(15, "odd")
    assert cert.verdict == "inconclusive"
    assert cert.parameters["specialization_valid"] is False


def test_galois_conjugate_embedding():
    # the first embedding for m = 16 is elliptic; a conjugate root of unity gives the witness
    cert = free_subgroup_witness(16, "even")
    assert cert.verdict == "free-subgroup-witness"
    assert cert.parameters["embedding"] != 1
    assert cert.parameters["specialization_valid"]


def test_excluded_burau_order_stays_inconclusive():
    # q^2 has order 4 for m = 20 under q = t^5, so every embedding is elliptic
    cert = free_subgroup_witness(20, "even")
    assert cert.verdict == "inconclusive"
    assert cert.parameters["reason"] == "every word tried is elliptic"


@pytest.mark.parametrize("angle", [math.pi / 3, 0.9])
def test_block_consistency_of_certificate(angle):
    q = cmath.exp(1j * angle)
    assert abs(certificate_at(3, q).modulus - certificate_at(2, q).modulus) < 1e-8

"""Tests for the exact coefficient layer: Q(sqrt 2), Laurent ring, fractions."""
from __future__ import annotations

import json
import math
import random
from fractions import Fraction

import numpy as np

from ospq.scalars import Q2
from ospq.qcoeff import (
    C_WEYL,
    DMINUS,
    DPLUS,
    INV_QMQI,
    QCoeff,
    QFrac,
    Q_MINUS_QINV,
    eval_root,
    fock_norm_factor,
    q_factorial,
    q_int,
)


# ---------------------------------------------------------------- Q(sqrt 2)

def test_q2_basic_identities():
    a = Q2(1, 1)   # 1 + sqrt2
    b = Q2(-1, 1)  # -1 + sqrt2
    assert a * b == Q2(1)          # (sqrt2)^2 - 1 = 1
    assert Q2(0, 1) * Q2(0, 1) == Q2(2)
    assert Q2(3, 2).inverse() == Q2(3, -2)  # 1/(3+2*sqrt2) = 3-2*sqrt2
    assert Q2(3, 2) * Q2(3, -2) == Q2(1)
    assert (a ** 2) == Q2(3, 2)
    assert abs(float(a) - (1 + math.sqrt(2))) < 1e-15


def test_q2_field_random():
    rng = random.Random(7)
    for _ in range(200):
        a = Q2(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
               Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        b = Q2(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
               Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        c = Q2(rng.randint(-5, 5), rng.randint(-5, 5))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if b:
            assert (a / b) * b == a
        # Galois conjugation is a ring automorphism
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


# ------------------------------------------------------------- q-integers

def test_q_int_small_values():
    assert q_int(0).is_zero()
    assert q_int(1) == QCoeff.one()
    assert q_int(2) == QCoeff({2: Q2(1), -2: Q2(1)})          # q + q^-1
    assert q_int(3) == QCoeff({4: Q2(1), 0: Q2(1), -4: Q2(1)})
    assert q_int(-3) == -q_int(3)


def test_q_int_defining_identity():
    # [m] * (q - q^-1) == q^m - q^-m, exactly
    for m in range(13):
        lhs = q_int(m) * Q_MINUS_QINV
        rhs = QCoeff({2 * m: Q2(1)}) - QCoeff({-2 * m: Q2(1)})
        assert lhs == rhs


def test_q_int_classical_limit_exact():
    for m in range(10):
        assert q_int(m).eval_one() == Q2(m)


def test_q_int_at_roots_matches_sines():
    # [m] at q = e^{i pi/k} equals sin(m pi/k)/sin(pi/k)
    for k in (2, 3, 5, 7):
        for m in range(2 * k + 1):
            got = eval_root(q_int(m), k)
            want = math.sin(m * math.pi / k) / math.sin(math.pi / k)
            assert abs(got - want) < 1e-12


def test_golden_ratio_values():
    phi = (1 + math.sqrt(5)) / 2
    assert abs(eval_root(q_int(2), 5) - phi) < 1e-12
    assert abs(eval_root(q_int(3), 5) - phi) < 1e-12
    assert abs(eval_root(q_int(2), 3) - 1.0) < 1e-12


# ------------------------------------------------------------ Laurent ring

def _random_qcoeff(rng: random.Random, size: int = 4) -> QCoeff:
    t = {}
    for _ in range(rng.randint(0, size)):
        e = rng.randint(-6, 6)
        t[e] = Q2(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                  Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return QCoeff(t)


def test_qcoeff_ring_axioms_random():
    rng = random.Random(20240)
    for _ in range(150):
        a = _random_qcoeff(rng)
        b = _random_qcoeff(rng)
        c = _random_qcoeff(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == QCoeff.zero()
        assert a * QCoeff.one() == a
        # conjugation is an involutive ring automorphism
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_qcoeff_eval_is_ring_hom():
    rng = random.Random(9)
    for _ in range(60):
        a = _random_qcoeff(rng)
        b = _random_qcoeff(rng)
        for k in (2, 5):
            assert abs(eval_root(a * b, k) - eval_root(a, k) * eval_root(b, k)) < 1e-10
            assert abs(eval_root(a + b, k) - (eval_root(a, k) + eval_root(b, k))) < 1e-10


def test_qcoeff_json_round_trip():
    rng = random.Random(31)
    for _ in range(40):
        a = _random_qcoeff(rng)
        blob = json.dumps(a.to_json())
        assert QCoeff.from_json(json.loads(blob)) == a


# ------------------------------------------------------------- fractions

def test_qfrac_reduction_cancels_denominators():
    x = _random_qcoeff(random.Random(5), 3) + QCoeff.one()
    f = QFrac(x * DPLUS * DMINUS, 1, 1)
    assert f == QFrac(x)
    assert f.dp == 0 and f.dm == 0
    g = QFrac(x * DPLUS ** 2, 3, 1)
    assert g.dp == 1 and g.dm == 1
    assert g.num == x or g.num == x  # reduced numerator no longer divisible
    # q - q^-1 factors across both binomials
    h = QFrac(Q_MINUS_QINV, 1, 1)
    assert h == QFrac.one()


def test_qfrac_field_like_identities():
    rng = random.Random(77)
    for _ in range(80):
        a = QFrac(_random_qcoeff(rng), rng.randint(0, 2), rng.randint(0, 2))
        b = QFrac(_random_qcoeff(rng), rng.randint(0, 2), rng.randint(0, 2))
        c = QFrac(_random_qcoeff(rng), rng.randint(0, 2), rng.randint(0, 2))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a - a == QFrac.zero()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert a.conjugate().conjugate() == a
        for k in (3, 5):
            assert abs((a * b).eval_root(k) - a.eval_root(k) * b.eval_root(k)) < 1e-9


def test_qfrac_conjugation_signs():
    assert C_WEYL.conjugate() == C_WEYL
    assert INV_QMQI.conjugate() == -INV_QMQI
    assert QFrac(DMINUS).conjugate() == -QFrac(DMINUS)
    assert QFrac(DPLUS).conjugate() == QFrac(DPLUS)


def test_qfrac_json_round_trip():
    rng = random.Random(13)
    for _ in range(40):
        a = QFrac(_random_qcoeff(rng), rng.randint(0, 3), rng.randint(0, 3))
        blob = json.dumps(a.to_json())
        assert QFrac.from_json(json.loads(blob)) == a


def test_qfrac_eval_one():
    assert QFrac(QCoeff.from_scalar(2), 1, 0).eval_one() == Q2(1)  # c -> 1 at s=1
    assert QFrac.zero().eval_one() == Q2(0)
    try:
        INV_QMQI.eval_one()
    except ValueError:
        pass
    else:  # pragma: no cover
        raise AssertionError("expected a pole at s=1")


# ----------------------------------------------------------- norm factors

def test_fock_norm_factor_small():
    assert fock_norm_factor(0) == QFrac.one()
    assert fock_norm_factor(1) == C_WEYL
    f2 = fock_norm_factor(2)
    assert f2.dp == 2 and f2.dm == 0
    assert f2.num == QCoeff({2: Q2(4), -2: Q2(4)})
    assert fock_norm_factor(3) == C_WEYL ** 3 * QFrac(q_factorial(3))


def test_fock_norm_factor_at_roots():
    # beta(m) = prod_{t=1}^m sin(t pi/k) / (cos(pi/2k) sin(pi/k)), real
    for k in (2, 3, 5, 7):
        for m in range(k + 1):
            got = eval_root(fock_norm_factor(m), k)
            want = 1.0
            for t in range(1, m + 1):
                want *= math.sin(t * math.pi / k) / (
                    math.cos(math.pi / (2 * k)) * math.sin(math.pi / k))
            assert abs(got.imag) < 1e-12
            assert abs(got.real - want) < 1e-12
        # positive strictly below the truncation level, zero exactly at it
        vals = [eval_root(fock_norm_factor(m), k).real for m in range(k + 1)]
        assert all(v > 1e-12 for v in vals[:k])
        assert abs(vals[k]) < 1e-12


def test_norm_factor_generic_phase_goes_negative():
    # at q = e^{1.1 i} the first non-positive squared norm is at m = 3
    s = np.exp(1j * 0.55)
    vals = [fock_norm_factor(m).eval_scalar(s).real for m in range(6)]
    assert vals[1] > 0 and vals[2] > 0
    assert vals[3] <= 0


def test_norm_factor_real_q_all_positive():
    s = math.sqrt(1.1)
    for m in range(20):
        v = fock_norm_factor(m).eval_scalar(s)
        assert abs(complex(v).imag) < 1e-12
        assert complex(v).real > 0

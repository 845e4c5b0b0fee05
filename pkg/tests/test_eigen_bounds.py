from fractions import Fraction as F

import numpy as np
import pytest

from su3poly.eigen_bounds import (
    DoubleEigMatrixSpec,
    check_spectrum,
    gamma_of_lambda,
    realize,
    sum_bounds_three,
    sum_bounds_two,
)
from su3poly.polytope import build_polytope_n2, hausdorff
from su3poly.su3 import Spectrum, spectrum


def haar_unitary(rng):
    z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_double_eig_matrix(lam, rng):
    u = haar_unitary(rng)
    return u @ np.diag([lam, lam, -2 * lam]) @ u.conj().T


class TestGammaBridge:
    @pytest.mark.parametrize("lam,gamma", [(1, -3), (0, 0), (F(-1, 3), 1)])
    def test_values(self, lam, gamma):
        assert gamma_of_lambda(DoubleEigMatrixSpec(lam)) == gamma

    def test_realized_matrix_has_double_spectrum(self, rng_seeded):
        # measured via the matrix route: the closed-form cubic loses half the
        # digits exactly at a double root, LAPACK does not
        spec = DoubleEigMatrixSpec(0.7)
        z = rng_seeded.standard_normal(3) + 1j * rng_seeded.standard_normal(3)
        m = spec.realize(z)
        assert np.allclose(np.linalg.eigvalsh(m.as_numpy())[::-1], (0.7, 0.7, -1.4), atol=1e-12)
        assert np.allclose(spectrum(m).as_floats(), (0.7, 0.7, -1.4), atol=1e-7)


class TestSumBoundsTwo:
    @pytest.mark.parametrize(
        "la,lb,lam1,interval",
        [(1, 1, 2, (-1, 2)), (1, -1, 0, (0, 3)), (1, 0, 1, (1, 1))],
    )
    def test_examples(self, la, lb, lam1, interval):
        got1, got_int = sum_bounds_two(la, lb)
        assert got1 == lam1 and got_int == interval

    def test_equality_and_interval_over_rotations(self, rng_seeded):
        for _ in range(1000):
            la = rng_seeded.uniform(0.2, 2.0)
            lb = rng_seeded.uniform(0.2, 2.0) * rng_seeded.choice([1.0, -1.0])
            x = random_double_eig_matrix(la, rng_seeded) + random_double_eig_matrix(lb, rng_seeded)
            eig = np.linalg.eigvalsh(x)
            lam1, (lo, hi) = sum_bounds_two(la, lb)
            k = int(np.argmin(np.abs(eig - lam1)))
            assert abs(eig[k] - lam1) < 1e-9
            rest = sorted(np.delete(eig, k))
            assert lo - 1e-9 <= rest[1] <= hi + 1e-9 or lo - 1e-9 <= rest[0] <= hi + 1e-9

    def test_endpoints_attained_by_diagonal_configurations(self):
        for la, lb in [(1.0, 0.7), (1.0, -0.7), (0.4, 1.3)]:
            a_aligned = np.diag([-2 * la, la, la])
            b_aligned = np.diag([-2 * lb, lb, lb])
            b_orth = np.diag([lb, -2 * lb, lb])
            lam1, (lo, hi) = sum_bounds_two(la, lb)
            attained = set()
            for x in (a_aligned + b_aligned, a_aligned + b_orth):
                eig = np.linalg.eigvalsh(x)
                k = int(np.argmin(np.abs(eig - lam1)))
                rest = np.delete(eig, k)
                attained.update(round(float(v), 9) for v in rest)
            assert any(abs(v - lo) < 1e-9 for v in attained)
            assert any(abs(v - hi) < 1e-9 for v in attained)


class TestSumBoundsThree:
    def test_symmetric_bound(self):
        poly = sum_bounds_three(1, 1, 1)
        assert poly.starred
        assert max(v.l1 for v in poly.vertices) == 3

    def test_zero_class_delegates_to_segment(self):
        poly = sum_bounds_three(1, 1, 0)
        segment = build_polytope_n2((-3, -3))
        assert poly.kind == "Segment"
        assert hausdorff(poly, segment) < 1e-12

    def test_mixed_signs_classified(self):
        poly = sum_bounds_three(1, 1, -1)
        assert poly.label is not None
        assert poly.kind == "Polygon"

    def test_random_sums_stay_inside(self, rng_seeded):
        for _ in range(1000):
            lams = [rng_seeded.uniform(0.2, 1.5) * rng_seeded.choice([1.0, -1.0]) for _ in range(3)]
            poly = sum_bounds_three(*lams)
            x = sum(random_double_eig_matrix(l, rng_seeded) for l in lams)
            eig = np.linalg.eigvalsh(x)[::-1]
            assert poly.contains(tuple(eig), 1e-9)


class TestCheckSpectrum:
    def test_examples(self):
        assert check_spectrum(1, 1, 1, (3, 0, -3))
        assert not check_spectrum(1, 1, 1, (4, 0, -4))
        assert check_spectrum(1, 1, 0, (2, 2, -4))


class TestRealize:
    def test_vertex_targets(self):
        res = realize(1, 1, 1, (3, 3, -6), budget=10, seed=0)
        assert res.found and res.distance < 1e-9
        res = realize(1, 1, 1, (0, 0, 0), budget=10, seed=0)
        assert res.found and res.distance < 1e-9

    def test_interior_target(self):
        res = realize(1, 1, 1, (1.25, 0.25, -1.5), budget=100, seed=1)
        assert res.found and res.distance < 1e-6
        total = sum((m.as_numpy() for m in res.matrices), np.zeros((3, 3), dtype=complex))
        eig = np.linalg.eigvalsh(total)[::-1]
        assert np.allclose(eig, (1.25, 0.25, -1.5), atol=1e-5)
        for m in res.matrices:
            s = np.linalg.eigvalsh(m.as_numpy())[::-1]
            assert abs(s[2] - s[1]) < 1e-10 and abs(s[0] + 2 * s[2]) < 1e-10 or (
                abs(s[0] - s[1]) < 1e-10 and abs(s[2] + 2 * s[0]) < 1e-10
            )

    def test_outside_target_reports_immediately(self):
        res = realize(1, 1, 1, (4, 0, -4), budget=10, seed=0)
        assert not res.found and res.restarts_used == 0
        assert "outside" in res.reason

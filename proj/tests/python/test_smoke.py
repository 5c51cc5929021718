import numpy as np
import pytest

import cosseratshell as cs


def test_axl_anti_roundtrip():
    v = np.array([1.0, 2.0, 3.0])
    a = cs.anti(v)
    assert np.allclose(a, -a.T)
    assert np.allclose(cs.axl(a), v)


def test_nye_roundtrip():
    rng = np.random.default_rng(0)
    gamma = rng.uniform(-1, 1, (3, 3))
    alpha = cs.nye_gamma_to_alpha(gamma)
    assert np.allclose(cs.nye_alpha_to_gamma(alpha), gamma, atol=1e-14)


def test_plate_worked_value():
    p = cs.MaterialParams(mu=1.0, lam=1.0, mu_c=1.0, L_c=1.0, b1=1.0, b2=1.0, b3=1.0)
    breakdown = cs.curvature_energy_hom_plate(cs.lift_flat(np.eye(2)), p)
    assert breakdown.total == pytest.approx(4.0, abs=1e-12)


def test_membrane_degenerate_director():
    p = cs.MaterialParams(mu=2.0, lam=1.0, mu_c=2.0, L_c=1.0)
    frame = cs.Surface("cylinder", radius=2.0).frame_at(0.3, 0.5)
    d = cs.optimal_director(np.zeros((3, 3)), frame, p)
    assert np.allclose(d, frame.n0)


def test_homogenized_vs_oracle():
    p = cs.MaterialParams(b1=2.0, b2=0.5, b3=1.5)
    frame = cs.Surface("sphere", radius=2.0).frame_at(0.3, 0.5)
    rng = np.random.default_rng(1)
    g1, g2 = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    dtheta_inv = np.linalg.inv(frame.dtheta0)
    k = cs.bending_strain(g1, g2, dtheta_inv)

    def objective(c):
        gamma = np.column_stack([g1, g2, c]) @ dtheta_inv
        return cs.w_curv_gamma(gamma, p).total

    argmin, value = cs.minimize_quadratic(objective)
    closed = cs.curvature_energy_hom(k, frame, p)
    assert closed.total == pytest.approx(value, rel=1e-10, abs=1e-10)
    completion = cs.optimal_curvature_completion(k, frame, p)
    assert np.allclose(completion, argmin, atol=1e-9)


def test_convergence_study_names():
    assert set(cs.documented_ansatz_names()) == {
        "flat_shear",
        "cylinder_identity",
        "sphere_rotation",
    }

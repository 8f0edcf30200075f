"""Seeded invariant suite behind the ``verify`` subcommand.

Each check draws its own deterministic generator from (seed, check index),
so the report is reproducible and independent of check ordering.  Checks
return a human-readable detail string; the runner collects pass/fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cli
from .cpmap import State, SuperOperator, compatibility, is_completely_positive
from .embed import (
    Status,
    build_embedded,
    classify_region,
    exact_norm_p2,
    hjx_upper_bound,
)
from .matcore import PositiveMatrix, dual_element, frac_power, schatten_norm
from .normest import EstimatorConfig, dual_ascent, estimate_norm, schatten_gradient
from .qubitfamily import (
    alpha,
    alpha1,
    delta,
    family_value,
    m_closed,
    optimal_ab,
    qubit_map,
    qubit_state,
    theta_thresholds,
)
from .tensor import kron_state, kron_superop, tensor_norm_lower_bound


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _ginibre(rng, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _random_unitary(rng, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _random_state(rng, n: int) -> State:
    g = _ginibre(rng, n)
    rho = g @ g.conj().T + 0.1 * np.eye(n)
    return State.from_matrix(rho / np.trace(rho).real)


def _random_cp_map(rng, n: int, n_kraus: int = 3) -> SuperOperator:
    return SuperOperator.from_kraus([_ginibre(rng, n) for _ in range(n_kraus)])


def _random_unital_cp_map(rng, n: int, n_kraus: int = 3) -> SuperOperator:
    ops = [_ginibre(rng, n) for _ in range(n_kraus)]
    m = sum(a @ a.conj().T for a in ops)
    msqrt_inv = frac_power(m, -0.5).matrix
    return SuperOperator.from_kraus([msqrt_inv @ a for a in ops])


def _worst(errs) -> float:
    return float(max(errs)) if errs else 0.0


# ---------------------------------------------------------------------------
# matcore


def check_unitary_invariance(seed: int) -> CheckResult:
    rng = _rng(seed, 1)
    errs = []
    for n in (2, 3, 4):
        for p in (1.0, 1.5, 2.0, 3.0, math.inf):
            x = _ginibre(rng, n)
            u, v = _random_unitary(rng, n), _random_unitary(rng, n)
            ref = schatten_norm(x, p)
            errs.append(abs(schatten_norm(u @ x @ v, p) - ref) / ref)
    err = _worst(errs)
    return CheckResult("matcore.unitary_invariance", err <= 1e-10, f"max rel err {err:.2e}")


def check_holder(seed: int) -> CheckResult:
    rng = _rng(seed, 2)
    combos = [(2.0, 2.0, 1.0), (3.0, 1.5, 1.0), (4.0, 4.0, 2.0), (math.inf, 1.0, 1.0), (3.0, 6.0, 2.0)]
    viol = []
    for n in (2, 3):
        for p, q, r in combos:
            x, y = _ginibre(rng, n), _ginibre(rng, n)
            viol.append(
                schatten_norm(x @ y, r) - schatten_norm(x, p) * schatten_norm(y, q)
            )
    worst = _worst(viol)
    return CheckResult("matcore.holder", worst <= 1e-10, f"max violation {worst:.2e}")


def check_p_monotonicity(seed: int) -> CheckResult:
    rng = _rng(seed, 3)
    viol = []
    ps = [1.0, 1.3, 2.0, 2.7, 4.0, math.inf]
    for n in (2, 4):
        x = _ginibre(rng, n)
        norms = [schatten_norm(x, p) for p in ps]
        viol.extend(norms[k + 1] - norms[k] for k in range(len(norms) - 1))
    worst = _worst(viol)
    return CheckResult("matcore.p_monotonicity", worst <= 1e-12, f"max violation {worst:.2e}")


def check_frac_power_homomorphism(seed: int) -> CheckResult:
    rng = _rng(seed, 4)
    errs = []
    for n in (2, 3):
        g = _ginibre(rng, n)
        pm = PositiveMatrix.from_matrix(g @ g.conj().T + 0.2 * np.eye(n))
        for s, t in ((0.5, 0.5), (-1.0, -1.0), (2.0, -0.5), (1.5, 0.8), (-2.0, 0.3)):
            lhs = frac_power(frac_power(pm, s), t).matrix
            rhs = frac_power(pm, s * t).matrix
            errs.append(np.abs(lhs - rhs).max() / np.abs(rhs).max())
    err = _worst(errs)
    return CheckResult("matcore.frac_power_homomorphism", err <= 1e-10, f"max rel err {err:.2e}")


def check_dual_certificate(seed: int) -> CheckResult:
    rng = _rng(seed, 5)
    errs = []
    for n in (2, 3):
        for p in (1.2, 1.5, 2.0, 3.0, 5.0):
            x = _ginibre(rng, n)
            z = dual_element(x, p)
            q = p / (p - 1.0)
            ref = schatten_norm(x, p)
            errs.append(abs(np.trace(z.conj().T @ x).real - ref) / ref)
            errs.append(abs(schatten_norm(z, q) - 1.0))
    err = _worst(errs)
    return CheckResult("matcore.dual_certificate", err <= 1e-10, f"max err {err:.2e}")


def check_gradient_fd(seed: int) -> CheckResult:
    rng = _rng(seed, 6)
    step = 1e-5
    errs = []
    for p in (1.5, 2.0, 3.0):
        y = _ginibre(rng, 3)
        g = schatten_gradient(y, p)
        for i in range(3):
            for j in range(3):
                for part, direction in ((g[i, j].real, 1.0), (g[i, j].imag, 1j)):
                    d = np.zeros((3, 3), dtype=complex)
                    d[i, j] = direction * step
                    fd = (schatten_norm(y + d, p) - schatten_norm(y - d, p)) / (2 * step)
                    errs.append(abs(fd - part))
    err = _worst(errs)
    return CheckResult("normest.gradient_fd", err <= 1e-6, f"max abs err {err:.2e}")


# ---------------------------------------------------------------------------
# cpmap


def check_choi_adjoint_duality(seed: int) -> CheckResult:
    rng = _rng(seed, 7)
    errs = []
    for n in (2, 3):
        t = SuperOperator(_ginibre(rng, n * n))
        for _ in range(3):
            x, y = _ginibre(rng, n), _ginibre(rng, n)
            lhs = np.trace(y.conj().T @ t(x))
            rhs = np.trace(t.adjoint()(y).conj().T @ x)
            errs.append(abs(lhs - rhs) / max(1.0, abs(lhs)))
    err = _worst(errs)
    return CheckResult("cpmap.choi_adjoint_duality", err <= 1e-10, f"max rel err {err:.2e}")


def check_kadison_schwarz(seed: int) -> CheckResult:
    rng = _rng(seed, 8)
    worst = -math.inf
    for n in (2, 3):
        for _ in range(5):
            t = _random_unital_cp_map(rng, n)
            x = _ginibre(rng, n)
            gap = t(x).conj().T @ t(x) - t(x.conj().T @ x)
            worst = max(worst, float(np.linalg.eigvalsh((gap + gap.conj().T) / 2)[-1]))
    return CheckResult("cpmap.kadison_schwarz", worst <= 1e-10, f"max lambda_max {worst:.2e}")


def check_c1_certificate(seed: int) -> CheckResult:
    rng = _rng(seed, 9)
    ok = True
    details = []
    for n in (2, 3):
        t = _random_cp_map(rng, n)
        state = _random_state(rng, n)
        c1 = compatibility(t, state).c1
        gamma = state.gamma.matrix
        tgam = t.adjoint()(gamma)

        def lam_min(cc):
            m = cc * gamma - tgam
            return float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])

        above = lam_min(c1 + 1e-10)
        below = lam_min(c1 - 1e-6)
        ok = ok and above >= -1e-10 and below < 0
        details.append(f"n={n}: above {above:.1e}, below {below:.1e}")
    return CheckResult("cpmap.c1_certificate", ok, "; ".join(details))


def check_unital_cp_cinf(seed: int) -> CheckResult:
    rng = _rng(seed, 10)
    errs = []
    for n in (2, 3):
        t = _random_unital_cp_map(rng, n)
        rep = compatibility(t, _random_state(rng, n))
        if not (rep.unital and rep.completely_positive):
            return CheckResult("cpmap.unital_cp_cinf", False, "construction not unital CP")
        errs.append(abs(rep.c_inf - 1.0))
    err = _worst(errs)
    return CheckResult("cpmap.unital_cp_cinf", err <= 1e-10, f"max |c_inf - 1| {err:.2e}")


# ---------------------------------------------------------------------------
# embed / normest


def check_theta_symmetry_qubit(seed: int) -> CheckResult:
    rng = _rng(seed, 11)
    cfg = EstimatorConfig(restarts=8, seed=seed)
    errs = []
    for _ in range(3):
        c = float(rng.uniform(0.15, 0.85))
        p = float(rng.uniform(1.0, 2.0))
        theta = float(rng.uniform(0.0, 1.0))
        t, s = qubit_map(c), qubit_state(c)
        v1 = estimate_norm(build_embedded(t, s, p, theta).u_action, p, cfg).value
        v2 = estimate_norm(build_embedded(t, s, p, 1.0 - theta).u_action, p, cfg).value
        errs.append(abs(v1 - v2))
    err = _worst(errs)
    return CheckResult("embed.theta_symmetry_qubit", err <= 1e-6, f"max |diff| {err:.2e}")


def check_half_theta_contraction(seed: int) -> CheckResult:
    rng = _rng(seed, 12)
    cfg = EstimatorConfig(restarts=8, seed=seed)
    worst = -math.inf
    for n in (2, 3):
        for p in (1.0, 1.4, 2.5):
            t = _random_cp_map(rng, n)
            state = _random_state(rng, n)
            rep = compatibility(t, state)
            t = t * (1.0 / max(rep.c1, rep.c_inf))  # force C1 <= 1, C_inf <= 1
            emap = build_embedded(t, state, p, 0.5)
            worst = max(worst, estimate_norm(emap.u_action, p, cfg).value - 1.0)
    return CheckResult("embed.half_theta_contraction", worst <= 1e-8, f"max excess {worst:.2e}")


def check_classify_symmetry(seed: int) -> CheckResult:
    rng = _rng(seed, 13)
    ok = True
    for _ in range(50):
        p = float(rng.uniform(1.0, 3.0))
        theta = float(rng.uniform(0.0, 1.0))
        a = classify_region(p, theta)
        b = classify_region(p, 1.0 - theta)
        ok = ok and a.status is b.status and a.source is b.source
    return CheckResult("embed.classify_symmetry", ok, "theta <-> 1-theta over 50 draws")


def check_p2_exact_vs_estimate(seed: int) -> CheckResult:
    rng = _rng(seed, 14)
    cfg = EstimatorConfig(restarts=8, seed=seed)
    errs = []
    for n in (2, 3):
        for _ in range(3):
            t = SuperOperator(_ginibre(rng, n * n) / n)
            state = _random_state(rng, n)
            emap = build_embedded(t, state, 2.0, float(rng.uniform(0, 1)))
            exact = exact_norm_p2(emap)
            est = estimate_norm(emap.u_action, 2.0, cfg).value
            errs.append(abs(est - exact) / exact)
    err = _worst(errs)
    return CheckResult("embed.p2_exact_vs_estimate", err <= 1e-6, f"max rel err {err:.2e}")


def check_monotone_ascent(seed: int) -> CheckResult:
    rng = _rng(seed, 15)
    worst = -math.inf
    for p in (1.0, 1.5, 3.0):
        t = SuperOperator(_ginibre(rng, 9) / 3)
        y0 = _ginibre(rng, 3)
        y0 = y0 / schatten_norm(y0, p)
        res = dual_ascent(t, p, y0)
        drops = [
            res.objectives[k] - res.objectives[k + 1]
            for k in range(len(res.objectives) - 1)
        ]
        worst = max(worst, _worst(drops))
    return CheckResult("normest.monotone_ascent", worst <= 1e-12, f"max drop {worst:.2e}")


def check_soundness_vs_upper_bound(seed: int) -> CheckResult:
    rng = _rng(seed, 16)
    cfg = EstimatorConfig(restarts=4, max_iters=200, seed=seed)
    worst = -math.inf
    for n in (2, 3):
        for _ in range(2):
            t = _random_cp_map(rng, n)
            state = _random_state(rng, n)
            for p, theta in ((2.0, 0.0), (2.0, 0.7), (3.0, 1.0), (1.3, 0.5), (1.7, 0.5)):
                bound = hjx_upper_bound(t, state, p)
                emap = build_embedded(t, state, p, theta)
                est = estimate_norm(emap.u_action, p, cfg).value
                worst = max(worst, est - bound)
    return CheckResult("normest.soundness_vs_upper_bound", worst <= 1e-8, f"max excess {worst:.2e}")


def check_determinism_threads(seed: int) -> CheckResult:
    rng = _rng(seed, 17)
    t = _random_cp_map(rng, 2)
    state = _random_state(rng, 2)
    emap = build_embedded(t, state, 1.5, 0.2)
    cfg = EstimatorConfig(restarts=8, seed=seed)
    vals = {estimate_norm(emap.u_action, 1.5, cfg, threads=k).value for k in (1, 2, 4)}
    ok = len(vals) == 1
    return CheckResult("normest.determinism_threads", ok, f"values {sorted(vals)}")


def check_homogeneity(seed: int) -> CheckResult:
    rng = _rng(seed, 18)
    cfg = EstimatorConfig(restarts=4, seed=seed)
    t = SuperOperator(_ginibre(rng, 4))
    errs = []
    for p in (1.0, 1.7, 2.0):
        base = estimate_norm(t, p, cfg).value
        for scale in (3.0, 0.25):
            scaled = estimate_norm(scale * t, p, cfg).value
            errs.append(abs(scaled - scale * base) / (scale * base))
    err = _worst(errs)
    return CheckResult("normest.homogeneity", err <= 1e-10, f"max rel err {err:.2e}")


# ---------------------------------------------------------------------------
# qubitfamily


def check_family_consistency(seed: int) -> CheckResult:
    rng = _rng(seed, 19)
    cfg = EstimatorConfig(restarts=8, seed=seed)
    ok = True
    details = []
    for _ in range(3):
        c = float(rng.uniform(0.2, 0.8))
        p = float(rng.uniform(1.0, 2.0))
        theta = float(rng.uniform(0.0, 1.0))
        d = delta(c, p, theta)
        a, b = optimal_ab(d, p) if p > 1.0 else (1.0, 0.0)
        fam = family_value(c, p, theta, a, b)
        emap = build_embedded(qubit_map(c), qubit_state(c), p, theta)
        free = estimate_norm(emap.u_action, p, cfg).value
        witness = np.array([[0, a], [b, 0]], dtype=complex)
        seeded = estimate_norm(emap.u_action, p, cfg, starts=[witness]).value
        ok = ok and fam <= free + 1e-8 and seeded >= fam - 1e-10
        details.append(f"fam {fam:.6f} est {free:.6f}")
    return CheckResult("qubitfamily.consistency_with_estimator", ok, "; ".join(details))


def check_family_symmetry(seed: int) -> CheckResult:
    rng = _rng(seed, 20)
    errs = []
    for _ in range(10):
        c = float(rng.uniform(0.05, 0.95))
        p = float(rng.uniform(1.0 + 1e-6, 2.0))
        theta = float(rng.uniform(0.0, 1.0))
        m = m_closed(c, p, theta)
        errs.append(abs(m_closed(1.0 - c, p, theta) - m))
        errs.append(abs(m_closed(c, p, 1.0 - theta) - m))
        # p = 1 keeps the composed symmetry only (fixed endpoint witness).
        m1 = m_closed(c, 1.0, theta)
        errs.append(abs(m_closed(1.0 - c, 1.0, 1.0 - theta) - m1))
    err = _worst(errs)
    return CheckResult("qubitfamily.symmetry", err <= 1e-12, f"max |diff| {err:.2e}")


def check_family_baseline(seed: int) -> CheckResult:
    rng = _rng(seed, 21)
    errs = [
        abs(m_closed(0.5, float(rng.uniform(1.0, 2.0)), float(rng.uniform(0, 1))) - 1.0)
        for _ in range(20)
    ]
    errs.append(abs(m_closed(0.5, 1.0, 0.3) - 1.0))
    err = _worst(errs)
    return CheckResult("qubitfamily.baseline", err <= 1e-14, f"max |m(1/2) - 1| {err:.2e}")


def check_taylor_alpha(seed: int) -> CheckResult:
    rng = _rng(seed, 22)
    step = 1e-4
    errs = []
    draws = 0
    while draws < 10:
        p = float(rng.uniform(1.05, 1.95))
        theta = float(rng.uniform(0.0, 1.0))
        a = alpha(p, theta)
        if abs(a) < 0.05:  # relative comparison is ill-posed near the zero set
            continue
        draws += 1
        q = p / (p - 1.0)
        th = theta_thresholds(p)
        factored = 8.0 * q * (theta - th.theta0) * (theta - th.theta1)
        if abs(factored - a) > 1e-12:
            return CheckResult(
                "qubitfamily.taylor_alpha", False, f"alpha forms differ by {abs(factored - a):.2e}"
            )

        def pow_p(t):
            return m_closed(0.5 + t, p, theta) ** p

        second = (pow_p(step) - 2.0 + pow_p(-step)) / (2.0 * step * step)
        errs.append(abs(second - a) / abs(a))
    err = _worst(errs)
    return CheckResult("qubitfamily.taylor_alpha", err <= 1e-3, f"max rel err {err:.2e}")


def check_taylor_p1(seed: int) -> CheckResult:
    rng = _rng(seed, 23)
    step = 1e-4
    errs = []
    for _ in range(10):
        theta = float(rng.uniform(0.0, 1.0))
        fd = (m_closed(0.5 + step, 1.0, theta) - m_closed(0.5 - step, 1.0, theta)) / (2 * step)
        errs.append(abs(fd - alpha1(theta)))
    err = _worst(errs)
    return CheckResult("qubitfamily.taylor_p1", err <= 1e-5, f"max abs err {err:.2e}")


def check_sign_law(seed: int) -> CheckResult:
    rng = _rng(seed, 24)
    ok = True
    for _ in range(100):
        p = float(rng.uniform(1.0 + 1e-9, 2.0))
        theta = float(rng.uniform(0.0, 1.0))
        th = theta_thresholds(p)
        outside = theta < th.theta0 or theta > th.theta1
        ok = ok and (alpha(p, theta) > 0) == outside
        if outside:
            ok = ok and classify_region(p, theta).status is Status.UNBOUNDED
    return CheckResult("qubitfamily.sign_law", ok, "alpha > 0 iff theta outside [theta0, theta1]")


def check_embedded_action_match(seed: int) -> CheckResult:
    rng = _rng(seed, 25)
    errs = []
    for _ in range(5):
        c = float(rng.uniform(0.1, 0.9))
        p = float(rng.uniform(1.0, 2.0))
        theta = float(rng.uniform(0.0, 1.0))
        emap = build_embedded(qubit_map(c), qubit_state(c), p, theta)
        d = delta(c, p, theta)
        s = math.sqrt(c * (1 - c))
        e12 = np.array([[0, 1], [0, 0]], dtype=complex)
        e21 = e12.T.copy()
        errs.append(np.abs(emap.u_action(e12) - s * (e12 + d * e21)).max())
        errs.append(np.abs(emap.u_action(e21) - s * (e12 / d + e21)).max())
    err = _worst(errs)
    return CheckResult("qubitfamily.embedded_action_match", err <= 1e-10, f"max abs err {err:.2e}")


# ---------------------------------------------------------------------------
# tensor


def check_kron_lower_bound(seed: int) -> CheckResult:
    rng = _rng(seed, 26)
    cfg = EstimatorConfig(restarts=4, max_iters=200, seed=seed)
    ok = True
    details = []
    for p in (1.0, 1.5):
        c1v, c2v = float(rng.uniform(0.2, 0.8)), float(rng.uniform(0.2, 0.8))
        theta = float(rng.uniform(0.0, 1.0))
        e1 = build_embedded(qubit_map(c1v), qubit_state(c1v), p, theta)
        e2 = build_embedded(qubit_map(c2v), qubit_state(c2v), p, theta)
        r1 = estimate_norm(e1.u_action, p, cfg)
        r2 = estimate_norm(e2.u_action, p, cfg)
        product = tensor_norm_lower_bound([r1.value, r2.value])
        big = build_embedded(
            kron_superop(e1.base, e2.base),
            kron_state(e1.state, e2.state),
            p,
            theta,
        )
        seeded = estimate_norm(
            big.u_action, p, cfg, starts=[np.kron(r1.witness, r2.witness)]
        ).value
        ok = ok and seeded >= product - 1e-6
        details.append(f"p={p}: kron {seeded:.8f} >= prod {product:.8f}")
    return CheckResult("tensor.kron_lower_bound", ok, "; ".join(details))


def check_p2_multiplicativity(seed: int) -> CheckResult:
    rng = _rng(seed, 27)
    errs = []
    for _ in range(3):
        c2v = float(rng.uniform(0.2, 0.8))
        theta = float(rng.uniform(0.0, 1.0))
        t1 = SuperOperator(_ginibre(rng, 4) / 2)
        t2 = qubit_map(c2v)
        s1, s2 = _random_state(rng, 2), qubit_state(c2v)
        e1 = build_embedded(t1, s1, 2.0, theta)
        e2 = build_embedded(t2, s2, 2.0, theta)
        big = build_embedded(kron_superop(t1, t2), kron_state(s1, s2), 2.0, theta)
        product = exact_norm_p2(e1) * exact_norm_p2(e2)
        errs.append(abs(exact_norm_p2(big) - product) / product)
    err = _worst(errs)
    return CheckResult("tensor.p2_multiplicativity", err <= 1e-10, f"max rel err {err:.2e}")


# ---------------------------------------------------------------------------
# cli


def check_csv_reproducibility(seed: int) -> CheckResult:
    a = cli.render_phase_diagram_csv(1.0, 2.0, 0.25, 0.25, with_family=True)
    b = cli.render_phase_diagram_csv(1.0, 2.0, 0.25, 0.25, with_family=True)
    ok = a == b
    return CheckResult("cli.csv_reproducibility", ok, f"{len(a)} bytes, identical={ok}")


def check_witness_certification(seed: int) -> CheckResult:
    rng = _rng(seed, 29)
    cfg = EstimatorConfig(restarts=4, seed=seed)
    errs = []
    for p in (1.0, 1.5, 2.0):
        t = _random_cp_map(rng, 2)
        state = _random_state(rng, 2)
        emap = build_embedded(t, state, p, float(rng.uniform(0, 1)))
        est = estimate_norm(emap.u_action, p, cfg)
        errs.append(abs(schatten_norm(emap.u_action(est.witness), p) - est.value) / est.value)
        errs.append(abs(schatten_norm(est.witness, p) - 1.0))
    err = _worst(errs)
    return CheckResult("cli.witness_certification", err <= 1e-10, f"max err {err:.2e}")


def check_cp_flags(seed: int) -> CheckResult:
    ok = True
    for c in (0.1, 0.5, 0.9):
        ok = ok and is_completely_positive(qubit_map(c))
    transpose = SuperOperator.from_map(lambda e: e.T.copy(), 2)
    ok = ok and not is_completely_positive(transpose)
    ok = ok and is_completely_positive(SuperOperator.identity(3))
    return CheckResult("cpmap.cp_flags", ok, "family CP, transpose not CP")


ALL_CHECKS = (
    check_unitary_invariance,
    check_holder,
    check_p_monotonicity,
    check_frac_power_homomorphism,
    check_dual_certificate,
    check_gradient_fd,
    check_choi_adjoint_duality,
    check_kadison_schwarz,
    check_c1_certificate,
    check_unital_cp_cinf,
    check_cp_flags,
    check_theta_symmetry_qubit,
    check_half_theta_contraction,
    check_classify_symmetry,
    check_p2_exact_vs_estimate,
    check_monotone_ascent,
    check_soundness_vs_upper_bound,
    check_determinism_threads,
    check_homogeneity,
    check_family_consistency,
    check_family_symmetry,
    check_family_baseline,
    check_taylor_alpha,
    check_taylor_p1,
    check_sign_law,
    check_embedded_action_match,
    check_kron_lower_bound,
    check_p2_multiplicativity,
    check_csv_reproducibility,
    check_witness_certification,
)


def run_all(seed: int) -> list[CheckResult]:
    return [check(seed) for check in ALL_CHECKS]

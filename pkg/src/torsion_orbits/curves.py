"""Finite-difference and exact-identity checks along conjugation curves.

The curves here are c(t) = exp(tX) g exp(-tX).  Three facts get checked
numerically: the derivative at t = 0 is (X - Ad(g)X) g, so the orbit's
tangent space at g is the right-translate of Im(I - Ad(g)); the initial
velocity alpha'(0) = (I - Ad(g))X of alpha(t) = c(t) g^-1 is killed by
I + Ad(g) + ... + Ad(g)^(n-1) when g^n = e; and the telescoping product
alpha(t) (g alpha(t) g^-1) ... (g^(n-1) alpha(t) g^-(n-1)) collapses to the
identity.  connect_within_component makes the "orbits are connected" fact
constructive by producing an explicit path between two elements with the
same canonical invariant.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .groups import (GroupSpec, adjoint_matrix, algebra_matrix,
                     cartan_decompose, group_inverse, require_member)
from .reports import VerificationReport, single_trial_report
from .subspaces import _adjoint_power_sum, _finite_order_inputs
from .torsion import canonical_align, matrix_invariant, torus_matrix

#: Errors below this floor count as exact; the O(h) ratio test is vacuous
#: when the difference quotient already matches the derivative to roundoff.
RATIO_FLOOR = 1e-10

DEFAULT_STEPS = (1e-2, 1e-3, 1e-4)


class DifferentComponentsError(ValueError):
    """The two elements lie in different conjugation orbits."""


@dataclass
class CurveSample:
    """Sampled points of a curve through ``base``.

    ``times`` is strictly decreasing toward 0 and ``points[i]`` is the curve
    evaluated at ``times[i]``; ``base`` is the point at parameter 0.
    """

    spec: GroupSpec
    base: np.ndarray
    times: tuple
    points: tuple

    def __post_init__(self):
        self.times = tuple(float(t) for t in self.times)
        self.points = tuple(self.points)
        if any(t <= 0 for t in self.times):
            raise ValueError("sample times must be positive")
        if any(a <= b for a, b in zip(self.times, self.times[1:])):
            raise ValueError("sample times must decrease strictly toward 0")
        if len(self.times) != len(self.points):
            raise ValueError("times and points disagree in length")


def conjugation_curve(spec: GroupSpec, g: np.ndarray, X,
                      steps=DEFAULT_STEPS) -> CurveSample:
    """Sample c(t) = exp(tX) g exp(-tX) at the given decreasing steps."""
    g = require_member(spec, g)
    Xm = algebra_matrix(spec, X)
    pts = [expm(t * Xm) @ g @ expm(-t * Xm) for t in steps]
    return CurveSample(spec, g, tuple(steps), pts)


def tangent_space_check(spec: GroupSpec, g: np.ndarray, X,
                        steps=DEFAULT_STEPS, ratio_slack: float = 3.0,
                        floor: float = RATIO_FLOOR) -> VerificationReport:
    """First-order check that c'(0) = (X - Ad(g)X) g.

    Compares the difference quotient (c(h) - g)/h against the predicted
    derivative D for each step.  The defect is O(h), so consecutive error
    ratios must track the step ratios within ``ratio_slack``; errors under
    ``floor`` count as exact (that happens exactly when Ad(g)X = X, where
    the curve is constant).
    """
    t0 = time.perf_counter()
    if len(steps) < 2:
        raise ValueError("need at least two steps for the ratio test")
    sample = conjugation_curve(spec, g, X, steps)
    Xm = algebra_matrix(spec, X)
    D = Xm @ sample.base - sample.base @ Xm  # (X - Ad(g)X) g
    errors = [float(np.linalg.norm((c - sample.base) / h - D))
              for h, c in zip(sample.times, sample.points)]
    passed = True
    ratios = []
    for (h1, e1), (h2, e2) in zip(zip(sample.times, errors),
                                  zip(sample.times[1:], errors[1:])):
        if e1 <= floor and e2 <= floor:
            ratios.append(None)
            continue
        step_ratio = h1 / h2
        err_ratio = e1 / max(e2, 1e-300)
        ratios.append(err_ratio)
        if not (step_ratio / ratio_slack <= err_ratio <= step_ratio * ratio_slack):
            passed = False
    residuals = {f"error_h{i}": e for i, e in enumerate(errors)}
    details = {"steps": list(sample.times),
               "error_ratios": [r if r is None else float(r) for r in ratios],
               "derivative_norm": float(np.linalg.norm(D))}
    return single_trial_report(
        "tangent-space", {"group": spec.label()}, residuals, passed,
        config={"steps": list(steps), "ratio_slack": ratio_slack,
                "floor": floor},
        details=details, wall_time_s=time.perf_counter() - t0,
        worst_residual=max(errors))


def curve_kernel_check(spec: GroupSpec, g: np.ndarray, n: int, X,
                       tol: float = 1e-9,
                       tol_membership: float = 1e-9) -> VerificationReport:
    """Exact-identity check: (I + Ad(g) + ... + Ad(g)^(n-1)) alpha'(0) = 0
    for alpha'(0) = (I - Ad(g))X, whenever g^n = e.

    The sum times (I - Ad(g)) telescopes to I - Ad(g)^n = 0, so any residual
    beyond roundoff is a bug."""
    t0 = time.perf_counter()
    inputs = {"group": spec.label(), "n": n}
    g, ok = _finite_order_inputs(spec, g, n, tol_membership)
    if not ok:
        return single_trial_report(
            "curve-kernel", inputs, {}, passed=False, status="rejected",
            note=f"precondition g^{n} = e fails",
            config={"tol": tol}, wall_time_s=time.perf_counter() - t0)
    X = np.asarray(X, dtype=float)
    A = adjoint_matrix(spec, g)
    S = _adjoint_power_sum(A, n)
    alpha0 = (np.eye(spec.dim) - A) @ X
    residual = float(np.linalg.norm(S @ alpha0))
    return single_trial_report(
        "curve-kernel", inputs, {"kernel_residual": residual},
        passed=residual <= tol, config={"tol": tol},
        details={"alpha0_norm": float(np.linalg.norm(alpha0))},
        wall_time_s=time.perf_counter() - t0, worst_residual=residual)


def product_identity_check(spec: GroupSpec, g: np.ndarray, n: int, X,
                           t: float,
                           tol_membership: float = 1e-9) -> VerificationReport:
    """Telescoping product check at a finite parameter t.

    With gamma(t) = exp(tX) g exp(-tX) and alpha(t) = gamma(t) g^-1, the
    product alpha(t) (g alpha(t) g^-1) ... (g^(n-1) alpha(t) g^-(n-1))
    equals gamma(t)^n g^-n = e.  Passes when ||product - I|| <= n * tol."""
    t0 = time.perf_counter()
    inputs = {"group": spec.label(), "n": n, "t": float(t)}
    g, ok = _finite_order_inputs(spec, g, n, tol_membership)
    if not ok:
        return single_trial_report(
            "product-identity", inputs, {}, passed=False, status="rejected",
            note=f"precondition g^{n} = e fails",
            config={"tol_membership": tol_membership},
            wall_time_s=time.perf_counter() - t0)
    Xm = algebra_matrix(spec, X)
    gamma = expm(t * Xm) @ g @ expm(-t * Xm)
    ginv = group_inverse(spec, g)
    alpha = gamma @ ginv
    prod = np.eye(spec.size, dtype=alpha.dtype)
    left = np.eye(spec.size, dtype=alpha.dtype)
    right = np.eye(spec.size, dtype=alpha.dtype)
    for _ in range(n):
        prod = prod @ (left @ alpha @ right)
        left = left @ g
        right = ginv @ right
    residual = float(np.linalg.norm(prod - np.eye(spec.size)))
    return single_trial_report(
        "product-identity", inputs, {"product_residual": residual},
        passed=residual <= n * tol_membership,
        config={"tol_membership": tol_membership},
        wall_time_s=time.perf_counter() - t0, worst_residual=residual)


def _conjugator_path(spec: GroupSpec, h: np.ndarray):
    """Return a function s -> H(s) with H(0) = I, H(1) = h, H(s) in G.

    Compact families: h is unitary/orthogonal, so h = exp(L) for a skew L
    read off its eigenstructure (orthogonal matrices pair their -1
    eigenvalues, so the log always exists in the algebra).  SL(2,R): split
    h = k exp(p) and move both factors linearly.
    """
    if spec.family in ("U", "SU"):
        from .torsion import _unitary_eigenstructure
        Z, phases = _unitary_eigenstructure(h)
        theta = 2 * np.pi * phases
        theta = np.where(theta > np.pi, theta - 2 * np.pi, theta)
        if spec.family == "SU":
            # keep the generator traceless: the angles sum to a multiple of
            # 2 pi, absorbed by shifting one of them a full turn
            total = theta.sum()
            shift = int(np.rint(total / (2 * np.pi)))
            if shift != 0:
                j = int(np.argmax(theta)) if shift > 0 else int(np.argmin(theta))
                theta[j] -= 2 * np.pi * shift
        L = (Z * (1j * theta)) @ Z.conj().T
        return lambda s: expm(s * L)
    if spec.family == "SO":
        from .torsion import _so_torus_align
        Q, phases = _so_torus_align(h)
        J = np.zeros((spec.size, spec.size))
        for b, p in enumerate(phases):
            th = 2 * np.pi * p
            if th > np.pi:
                th -= 2 * np.pi
            J[2 * b, 2 * b + 1] = -th
            J[2 * b + 1, 2 * b] = th
        L = Q @ J @ Q.T
        return lambda s: np.real(expm(s * L))
    k, p = cartan_decompose(h)
    phi = float(np.arctan2(k[1, 0], k[0, 0]))
    return lambda s: torus_matrix(spec, [s * phi / (2 * np.pi)]) @ expm(s * p)


def connect_within_component(spec: GroupSpec, g1: np.ndarray,
                             g2: np.ndarray, n: int,
                             waypoints: int = 20,
                             tol_membership: float = 1e-9) -> CurveSample:
    """Explicit path from g1 to g2 inside their common conjugation orbit.

    Both endpoints must have order dividing n and equal canonical
    invariants; otherwise DifferentComponentsError is raised.  The path is
    g(s) = H(s) g1 H(s)^-1 for a conjugator path H, so every waypoint stays
    in the orbit.  Returned as a CurveSample based at g1 with times
    descending from 1.
    """
    if waypoints < 2:
        raise ValueError("need at least two waypoints")
    g1 = require_member(spec, g1, tol_membership)
    g2 = require_member(spec, g2, tol_membership)
    inv1 = matrix_invariant(spec, g1, n)
    inv2 = matrix_invariant(spec, g2, n)
    if inv1 != inv2:
        raise DifferentComponentsError(
            f"elements lie in different components: canonical invariants "
            f"{inv1.label()} vs {inv2.label()}")
    Q1, _ = canonical_align(spec, g1, n)
    Q2, _ = canonical_align(spec, g2, n)
    h = Q2 @ group_inverse(spec, Q1)
    path = _conjugator_path(spec, h)
    svals = np.linspace(0.0, 1.0, waypoints)[1:][::-1]  # 1 down to 1/(w-1)
    pts = []
    for s in svals:
        H = path(float(s))
        pts.append(H @ g1 @ group_inverse(spec, H))
    return CurveSample(spec, g1, tuple(float(s) for s in svals), pts)


def path_order_residuals(sample: CurveSample, n: int) -> list[float]:
    """||g(s)^n - I|| for every waypoint plus the base."""
    eye = np.eye(sample.spec.size)
    out = []
    for g in (*sample.points, sample.base):
        out.append(float(np.linalg.norm(np.linalg.matrix_power(g, n) - eye)))
    return out


def export_path_csv(sample: CurveSample, fileobj) -> None:
    """Waypoints as CSV, one row per parameter value in ascending order;
    complex entries are split into re/im columns."""
    import csv
    m = sample.spec.size
    is_c = sample.spec.is_complex
    header = ["s"]
    for i in range(m):
        for j in range(m):
            if is_c:
                header += [f"e{i}{j}_re", f"e{i}{j}_im"]
            else:
                header.append(f"e{i}{j}")
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(header)
    rows = [(0.0, sample.base)] + list(zip(sample.times, sample.points))[::-1]
    for s, g in rows:
        row = [repr(float(s))]
        for x in np.asarray(g).ravel():
            if is_c:
                row += [repr(float(x.real)), repr(float(x.imag))]
            else:
                row.append(repr(float(np.real(x))))
        writer.writerow(row)

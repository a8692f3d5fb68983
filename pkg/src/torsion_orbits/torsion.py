"""Torsion points of maximal tori and their conjugation-orbit catalogs.

Every g with g^n = e in one of the supported groups is conjugate to a point
of the standard maximal torus whose block phases are exact fractions k/n.
Conjugation permutes and (family permitting) reflects those phases, so an
orbit is labeled by a canonical invariant: the Weyl-reduced phase multiset.
This module enumerates the torsion points exactly, canonicalizes them,
realizes one representative per orbit, and measures each orbit's dimension
from the adjoint action.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.linalg import schur

from .groups import (GroupSpec, UnsupportedGroupError, adjoint_matrix,
                     algebra_basis, group_inverse, membership_residual,
                     random_element, require_member)
from .reports import TrialRecord, VerificationReport, single_trial_report
from .subspaces import image_basis

#: Phases farther than this from every k/n grid point fail to snap.
SNAP_TOL = 1e-6

ZERO = Fraction(0)
HALF = Fraction(1, 2)


def _rot2(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def phase_slots(spec: GroupSpec) -> int:
    """Length of a torus phase vector: one phase per eigenvalue for U/SU
    (the SU integer-sum constraint cuts the dimension down to the rank),
    one per rotation block for SO and SL(2,R)."""
    return spec.size if spec.family in ("U", "SU") else spec.rank


@dataclass(frozen=True)
class TorusTorsionPoint:
    """Point of the standard maximal torus with exact rational phases."""

    spec: GroupSpec
    phases: tuple

    def __post_init__(self):
        phases = tuple(Fraction(p) for p in self.phases)
        object.__setattr__(self, "phases", phases)
        if len(phases) != phase_slots(self.spec):
            raise ValueError(
                f"expected {phase_slots(self.spec)} phases, got {len(phases)}")
        if any(p < 0 or p >= 1 for p in phases):
            raise ValueError("phases must lie in [0, 1)")
        if self.spec.family == "SU" and sum(phases) % 1 != 0:
            raise ValueError("SU phases must sum to an integer")

    def matrix(self) -> np.ndarray:
        return torus_matrix(self.spec, self.phases)


def torus_matrix(spec: GroupSpec, phases) -> np.ndarray:
    """Standard torus element with the given block phases (cycles, not
    radians): diagonal for U/SU, rotation blocks for SO (odd sizes keep a
    trailing fixed axis), a rotation for SL(2,R)."""
    vals = [float(p) for p in phases]
    m = spec.size
    if spec.family in ("U", "SU"):
        if len(vals) != m:
            raise ValueError(f"expected {m} phases")
        return np.diag(np.exp(2j * np.pi * np.array(vals)))
    if len(vals) != spec.rank:
        raise ValueError(f"expected {spec.rank} phases")
    out = np.zeros((m, m))
    for j, p in enumerate(vals):
        out[2 * j:2 * j + 2, 2 * j:2 * j + 2] = _rot2(2 * np.pi * p)
    if spec.family == "SO" and m % 2 == 1:
        out[m - 1, m - 1] = 1.0
    return out


@lru_cache(maxsize=None)
def enumerate_torsion(spec: GroupSpec, n: int) -> tuple:
    """All torus points killed by n: the complete, duplicate-free tuple of
    phase vectors with entries in {0, 1/n, ..., (n-1)/n} (SU: summing to an
    integer)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = phase_slots(spec)
    points = []
    for ks in itertools.product(range(n), repeat=r):
        if spec.family == "SU" and sum(ks) % n != 0:
            continue
        points.append(TorusTorsionPoint(spec, tuple(Fraction(k, n) for k in ks)))
    return tuple(points)


@dataclass(frozen=True)
class CanonicalInvariant:
    """Weyl-reduced label of a conjugation orbit.

    ``phases`` is the canonical phase tuple; ``parity`` is the reflection
    parity bit kept only for SO(2r), r >= 2, when no phase sits at 0 or 1/2
    (otherwise None)."""

    phases: tuple
    parity: int | None = None

    def label(self) -> str:
        parts = [f"{p.numerator}/{p.denominator}" for p in self.phases]
        if self.parity is not None:
            parts.append(f"p{self.parity}")
        return ",".join(parts)

    def sort_key(self):
        return (self.phases, -1 if self.parity is None else self.parity)


def canonicalize(spec: GroupSpec, phases) -> CanonicalInvariant:
    """Canonical invariant of a torus point; equal outputs exactly when two
    points are conjugate in the group.

    U/SU: sorted phase multiset (coordinate permutations).  SO(2r+1): sorted
    multiset of min(p, 1-p) (signed permutations).  SO(2r), r >= 2: the same
    fold, plus the flip parity when no phase is self-paired.  SO(2) and
    SL(2,R): the phase itself (trivial Weyl group).
    """
    if isinstance(phases, TorusTorsionPoint):
        phases = phases.phases
    phases = tuple(Fraction(p) % 1 for p in phases)
    if spec.family in ("U", "SU"):
        return CanonicalInvariant(tuple(sorted(phases)))
    if spec.family == "SL2R" or (spec.family == "SO" and spec.size == 2):
        return CanonicalInvariant(phases)
    folded = sorted(min(p, 1 - p) for p in phases)
    if spec.family == "SO" and spec.size % 2 == 0:
        if not any(p in (ZERO, HALF) for p in folded):
            flips = sum(1 for p in phases if p > HALF)
            return CanonicalInvariant(tuple(folded), flips % 2)
    return CanonicalInvariant(tuple(folded))


def canonical_realization(spec: GroupSpec, canonical: CanonicalInvariant) -> tuple:
    """Phase tuple of the catalog representative realizing ``canonical``:
    the canonical phases, with the last block reflected when the SO(2r)
    parity bit is set."""
    phases = list(canonical.phases)
    if canonical.parity == 1:
        phases[-1] = (1 - phases[-1]) % 1
    return tuple(phases)


def _snap_phase(phi: float, n: int, snap_tol: float) -> Fraction:
    k = int(np.rint(phi * n))
    if abs(phi - k / n) > snap_tol:
        raise ValueError(
            f"phase {phi!r} is not within {snap_tol:g} of a multiple of 1/{n}; "
            "the element does not have order dividing n")
    return Fraction(k % n, n)


def _unitary_eigenstructure(g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Complex Schur of a (normal) unitary matrix: unitary Z, diagonal T.
    T, Z = schur(np.asarray(g, dtype=complex), output="complex")
    off = T - np.diag(np.diag(T))
    if np.linalg.norm(off) > 1e-7:
        raise ValueError("matrix is not normal enough to diagonalize unitarily")
    phases = np.mod(np.angle(np.diag(T)) / (2 * np.pi), 1.0)
    return Z, phases


def _so_block_structure(g: np.ndarray):
    """Column indices of Z grouped into rotation planes for an SO matrix.

    Returns (Z, pairs, angles, axis) with g = Z T Z^T block diagonal; pairs
    is a list of column index pairs, angles the matching rotation angles in
    [0, 2pi), axis the leftover fixed column for odd sizes (else None).
    """
    m = g.shape[0]
    T, Z = schur(np.asarray(g, dtype=float), output="real")
    pairs, angles, plus, minus = [], [], [], []
    i = 0
    while i < m:
        if i + 1 < m and abs(T[i + 1, i]) > 1e-10:
            theta = float(np.arctan2(T[i + 1, i], T[i, i])) % (2 * np.pi)
            pairs.append([i, i + 1])
            angles.append(theta)
            i += 2
        else:
            (plus if T[i, i] > 0 else minus).append(i)
            i += 1
    if len(minus) % 2:
        raise ValueError("odd count of -1 eigenvalues; matrix is not in SO")
    while minus:
        pairs.append([minus.pop(0), minus.pop(0)])
        angles.append(np.pi)
    keep = len(plus) % 2  # odd size keeps one fixed axis
    while len(plus) > keep:
        pairs.append([plus.pop(0), plus.pop(0)])
        angles.append(0.0)
    axis = plus[0] if plus else None
    return Z, pairs, angles, axis


def _so_torus_align(g: np.ndarray):
    """(Q, phases) with Q in SO(m) and g = Q t Q^T, t the standard block
    torus with the returned phases (cycles).  All phases land in [0, 1/2]
    except possibly the last, which absorbs the determinant constraint."""
    Z, pairs, angles, axis = _so_block_structure(g)
    cols, phases = [], []
    for (i, j), theta in zip(pairs, angles):
        if theta > np.pi:  # fold into [0, pi] by swapping the plane basis
            i, j = j, i
            theta = 2 * np.pi - theta
        cols.extend([i, j])
        phases.append(theta / (2 * np.pi))
    if axis is not None:
        cols.append(axis)
    Q = Z[:, cols].copy()
    if np.linalg.det(Q) < 0:
        fixed = False
        for b, p in enumerate(phases):
            if min(p, 1 - p) < 1e-9 or abs(p - 0.5) < 1e-9:
                Q[:, [2 * b, 2 * b + 1]] = Q[:, [2 * b + 1, 2 * b]]
                fixed = True  # block is I or -I; swap only flips det
                break
        if not fixed and axis is not None:
            Q[:, -1] = -Q[:, -1]
            fixed = True
        if not fixed:
            b = len(phases) - 1
            Q[:, [2 * b, 2 * b + 1]] = Q[:, [2 * b + 1, 2 * b]]
            phases[b] = 1.0 - phases[b]
    return Q, phases


def _sl2_align(g: np.ndarray):
    """(h, phase) with h in SL(2,R) and g = h R(2 pi phase) h^-1.

    Defined for elements of finite order: +-I and the elliptic ones
    (|trace| < 2).  The phase sits in (0, 1/2) exactly when the orientation
    sign is -1."""
    g = np.asarray(g, dtype=float)
    eye = np.eye(2)
    if np.linalg.norm(g - eye) <= 1e-8:
        return eye.copy(), 0.0
    if np.linalg.norm(g + eye) <= 1e-8:
        return eye.copy(), 0.5
    tr = float(np.trace(g))
    if abs(tr) >= 2:
        raise ValueError("element is not elliptic or central; it has no "
                         "finite order in SL(2,R)")
    theta = float(np.arctan2(np.sqrt(max(0.0, 1 - tr * tr / 4)), tr / 2))
    mu = tr / 2 + 1j * np.sin(theta)
    _, _, Vt = np.linalg.svd(g.astype(complex) - mu * np.eye(2))
    v = Vt[-1].conj()
    x, y = v.real, v.imag
    delta = x[0] * y[1] - x[1] * y[0]
    if abs(delta) < 1e-12:
        raise ValueError("degenerate eigenvector; cannot align")
    if delta < 0:
        h = np.column_stack([y, x]) / np.sqrt(-delta)
        phase = theta / (2 * np.pi)
    else:
        h = np.column_stack([x, y]) / np.sqrt(delta)
        phase = 1.0 - theta / (2 * np.pi)
    return h, phase


def canonical_align(spec: GroupSpec, g: np.ndarray, n: int,
                    snap_tol: float = SNAP_TOL):
    """Conjugator onto the catalog representative.

    Returns (Q, realized) with Q in the group, realized the exact phase
    tuple of the representative, and g = Q t Q^-1 for t =
    torus_matrix(spec, realized).  Raises ValueError when g does not have
    order dividing n within the snap tolerance.
    """
    g = require_member(spec, g)
    if spec.family in ("U", "SU"):
        Z, raw = _unitary_eigenstructure(g)
        fracs = [_snap_phase(p, n, snap_tol) for p in raw]
        order = sorted(range(len(fracs)), key=lambda j: fracs[j])
        Z = Z[:, order]
        fracs = [fracs[j] for j in order]
        if spec.family == "SU":
            Z = Z * np.exp(-1j * np.angle(np.linalg.det(Z)) / spec.size)
        return Z, tuple(fracs)
    if spec.family == "SL2R":
        h, phase = _sl2_align(g)
        return h, (_snap_phase(phase, n, snap_tol),)
    Q, raw = _so_torus_align(g)
    fracs = [_snap_phase(p, n, snap_tol) for p in raw]
    r = len(fracs)

    def swap_pair(b):
        Q[:, [2 * b, 2 * b + 1]] = Q[:, [2 * b + 1, 2 * b]]
        fracs[b] = (1 - fracs[b]) % 1

    unfolded = [b for b in range(r) if fracs[b] > HALF]
    if unfolded:
        absorb = [b for b in range(r) if fracs[b] in (ZERO, HALF)]
        if absorb:  # absorb the reflection in a self-paired block
            swap_pair(unfolded[0])
            swap_pair(absorb[0])
            unfolded = []
    order = sorted(range(r), key=lambda b: min(fracs[b], 1 - fracs[b]))
    cols = []
    for b in order:
        cols.extend([2 * b, 2 * b + 1])
    if spec.size % 2 == 1:
        cols.append(spec.size - 1)
    Q = Q[:, cols]
    fracs = [fracs[b] for b in order]
    unfolded = [b for b in range(r) if fracs[b] > HALF]
    if unfolded and unfolded[0] != r - 1:
        # move the reflection onto the last block (two swaps keep det = 1)
        swap_pair(unfolded[0])
        swap_pair(r - 1)
    return Q, tuple(fracs)


def matrix_invariant(spec: GroupSpec, g: np.ndarray, n: int,
                     snap_tol: float = SNAP_TOL) -> CanonicalInvariant:
    """Canonical invariant computed from a matrix of order dividing n."""
    _, realized = canonical_align(spec, g, n, snap_tol)
    return canonicalize(spec, realized)


def component_dimension(spec: GroupSpec, g: np.ndarray,
                        tol_rank: float = 1e-9) -> int:
    """Dimension of the conjugation orbit of g: rank of I - Ad(g)."""
    A = adjoint_matrix(spec, g)
    return image_basis(np.eye(spec.dim) - A, tol_rank).dim


@dataclass
class ComponentDescriptor:
    """One conjugation orbit inside {g : g^n = e}."""

    spec: GroupSpec
    n: int
    canonical: CanonicalInvariant
    representative: np.ndarray
    dimension: int
    exact_order: int
    orbit_size: int  # torus points mapping to this invariant


def catalog_components(spec: GroupSpec, n: int,
                       tol_rank: float = 1e-9) -> list[ComponentDescriptor]:
    """Complete catalog of orbits of {g : g^n = e}, sorted by canonical
    invariant.  One entry per Weyl orbit of torsion points."""
    counts: dict[CanonicalInvariant, int] = {}
    for point in enumerate_torsion(spec, n):
        inv = canonicalize(spec, point.phases)
        counts[inv] = counts.get(inv, 0) + 1
    out = []
    for inv in sorted(counts, key=CanonicalInvariant.sort_key):
        realized = canonical_realization(spec, inv)
        rep = torus_matrix(spec, realized)
        dim = component_dimension(spec, rep, tol_rank)
        order = math.lcm(*(p.denominator for p in realized)) if realized else 1
        out.append(ComponentDescriptor(spec, n, inv, rep, dim, order,
                                       counts[inv]))
    return out


def count_components(spec: GroupSpec, n: int) -> int:
    """Number of conjugation orbits of {g : g^n = e}."""
    invs = {canonicalize(spec, p.phases) for p in enumerate_torsion(spec, n)}
    return len(invs)


def invariant_set(spec: GroupSpec, n: int) -> frozenset:
    return frozenset(canonicalize(spec, p.phases)
                     for p in enumerate_torsion(spec, n))


def gcd_intersection_check(spec: GroupSpec, n: int, m: int) -> VerificationReport:
    """Check that the invariant sets satisfy set(n) & set(m) == set(gcd(n,m)).

    Canonical invariants use reduced fractions, so the same orbit gets the
    same label no matter which n produced it; the check is exact.
    """
    t0 = time.perf_counter()
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    g = math.gcd(n, m)
    s_n, s_m, s_g = invariant_set(spec, n), invariant_set(spec, m), invariant_set(spec, g)
    inter = s_n & s_m
    mismatch = inter ^ s_g
    labels = sorted(inv.label() for inv in mismatch)[:10]
    inputs = {"group": spec.label(), "n": n, "m": m, "gcd": g}
    details = {"count_n": len(s_n), "count_m": len(s_m),
               "count_gcd": len(s_g), "count_intersection": len(inter),
               "mismatched_invariants": labels}
    return single_trial_report(
        "gcd-intersection", inputs, {"mismatch_count": float(len(mismatch))},
        passed=(not mismatch), config={"check": "gcd-intersection"},
        details=details, wall_time_s=time.perf_counter() - t0,
        worst_residual=float(len(mismatch)))


def approximation_bound(spec: GroupSpec, N: int, corrections: int = 0) -> float:
    """Worst-case Frobenius distance of nearest_torsion_approximant: each
    eigenphase moves by at most pi/N (3pi/N for the phases adjusted to
    restore det = 1 in SU)."""
    p = spec.eigenphase_count
    c = min(corrections, p)
    return (2 * np.pi / N) * float(np.sqrt((p - c) * 0.25 + c * 2.25))


def _nearest_torsion(spec: GroupSpec, g: np.ndarray, N: int):
    if spec.family == "SL2R":
        raise UnsupportedGroupError(
            "nearest torsion approximation is defined for the compact families")
    if N < 1:
        raise ValueError("N must be >= 1")
    g = require_member(spec, g)
    corrections = 0
    if spec.family in ("U", "SU"):
        Z, phases = _unitary_eigenstructure(g)
        ks = np.rint(phases * N).astype(int)
        if spec.family == "SU":
            # det g = 1 means the raw phases sum to an integer; push the
            # rounded sum back onto the grid with minimal extra movement.
            target = int(np.rint(phases.sum()))
            s = int(ks.sum()) - target * N
            while s != 0:
                step = -1 if s > 0 else 1
                # step toward the grid on the phase that overshot most
                j = int(np.argmax(step * (phases * N - ks)))
                ks[j] += step
                s += step
                corrections += 1
            ks = ks % N
            t = np.diag(np.exp(2j * np.pi * ks / N))
        else:
            t = np.diag(np.exp(2j * np.pi * (ks % N) / N))
        approx = Z @ t @ Z.conj().T
    else:
        Q, phases = _so_torus_align(g)
        ks = [int(np.rint(p * N)) % N for p in phases]
        approx = Q @ torus_matrix(spec, [Fraction(k, N) for k in ks]) @ Q.T
    distance = float(np.linalg.norm(g - approx))
    return approx, distance, approximation_bound(spec, N, corrections)


def nearest_torsion_approximant(spec: GroupSpec, g: np.ndarray, N: int):
    """Element of order dividing N near g, found by rounding eigenphases to
    the 1/N grid (SU determinants restored on-grid).

    Returns (approx, distance); the distance obeys approximation_bound.
    """
    approx, distance, _ = _nearest_torsion(spec, g, N)
    return approx, distance


def orientation_sign(g: np.ndarray) -> int:
    """Conjugation-invariant orientation of an elliptic SL(2,R) element.

    Sign of det [Re v, Im v] with v an eigenvector for the eigenvalue with
    positive imaginary part; 0 for elements with a real spectrum (+-I in the
    finite-order case).  Invariant because det h = 1 for conjugators and
    unchanged under complex rescaling of v.
    """
    g = np.asarray(g, dtype=float)
    w, V = np.linalg.eig(g.astype(complex))
    i = int(np.argmax(w.imag))
    if w[i].imag <= 1e-8:
        return 0
    v = V[:, i]
    d = v.real[0] * v.imag[1] - v.real[1] * v.imag[0]
    if abs(d) <= 1e-12:
        return 0
    return 1 if d > 0 else -1


def _expected_sigma(k: int, n: int) -> int:
    if k == 0 or 2 * k == n:
        return 0
    return -1 if 2 * k < n else 1


def sl2_component_census(n: int, samples: int, seed: int,
                         trace_digits: int = 6) -> VerificationReport:
    """Monte-Carlo census of {g : g^n = e} in SL(2,R).

    Samples random conjugates of the n rotations R(2 pi k/n) and clusters
    them by the invariant pair (trace, orientation sign).  Passes when
    exactly n classes appear and the orientation sign never flips within a
    sampled orbit: the k-th and (n-k)-th rotations share a trace but stay in
    different components.
    """
    t0 = time.perf_counter()
    if n < 1:
        raise ValueError("n must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    spec = GroupSpec("SL2R", 2)
    trials, classes = [], set()
    flip_count = 0
    worst = 0.0
    for i in range(samples):
        rng = np.random.default_rng(seed + i)
        k = int(rng.integers(n))
        h = random_element(spec, rng)
        rot = torus_matrix(spec, [Fraction(k, n)])
        g = h @ rot @ group_inverse(spec, h)
        sigma = orientation_sign(g)
        key = (round(float(np.trace(g)), trace_digits), sigma)
        classes.add(key)
        flipped = sigma != _expected_sigma(k, n)
        flip_count += flipped
        residual = membership_residual(spec, g)
        worst = max(worst, residual)
        trials.append(TrialRecord(
            index=i, seed=seed + i, inputs={"k": k, "n": n},
            residuals={"membership": residual, "sigma_flip": float(flipped)},
            passed=not flipped))
    passed = (len(classes) == n) and flip_count == 0
    details = {"class_count": len(classes), "expected_classes": n,
               "sigma_flips": flip_count,
               "classes": sorted(map(list, classes))}
    return VerificationReport(
        check="sl2-census", passed=passed, worst_residual=worst,
        trials=trials, config={"n": n, "samples": samples, "seed": seed,
                               "trace_digits": trace_digits},
        details=details, wall_time_s=time.perf_counter() - t0)


def cluster_census(spec: GroupSpec, n: int, samples: int,
                   seed: int) -> VerificationReport:
    """Monte-Carlo census for any supported group: random conjugates of
    random torsion points, clustered by the canonical invariant recovered
    from the matrix alone.  Passes when the cluster count matches
    count_components(spec, n) and every recovered invariant agrees with the
    invariant of the torus point that produced the sample."""
    t0 = time.perf_counter()
    if samples < 1:
        raise ValueError("samples must be >= 1")
    points = enumerate_torsion(spec, n)
    expected = count_components(spec, n)
    trials, seen = [], set()
    worst = 0.0
    for i in range(samples):
        rng = np.random.default_rng(seed + i)
        point = points[int(rng.integers(len(points)))]
        h = random_element(spec, rng)
        g = h @ point.matrix() @ group_inverse(spec, h)
        inv = matrix_invariant(spec, g, n)
        seen.add(inv)
        consistent = inv == canonicalize(spec, point.phases)
        residual = membership_residual(spec, g)
        worst = max(worst, residual)
        trials.append(TrialRecord(
            index=i, seed=seed + i,
            inputs={"point": [str(p) for p in point.phases], "n": n},
            residuals={"membership": residual,
                       "invariant_mismatch": 0.0 if consistent else 1.0},
            passed=consistent))
    passed = all(t.passed for t in trials) and len(seen) == expected
    details = {"cluster_count": len(seen), "expected_clusters": expected,
               "clusters": sorted(inv.label() for inv in seen)}
    return VerificationReport(
        check="cluster-census", passed=passed, worst_residual=worst,
        trials=trials,
        config={"group": spec.label(), "n": n, "samples": samples, "seed": seed},
        details=details, wall_time_s=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# catalog serialization

CATALOG_CSV_COLUMNS = ("group", "size", "n", "component_index", "canonical",
                       "dimension", "exact_order")


def catalog_rows(catalog: list[ComponentDescriptor]) -> list[dict]:
    rows = []
    for idx, comp in enumerate(catalog):
        rows.append({
            "group": comp.spec.family, "size": comp.spec.size, "n": comp.n,
            "component_index": idx, "canonical": comp.canonical.label(),
            "dimension": comp.dimension, "exact_order": comp.exact_order,
        })
    return rows


def write_catalog_csv(catalog: list[ComponentDescriptor], fileobj) -> None:
    import csv
    writer = csv.DictWriter(fileobj, fieldnames=CATALOG_CSV_COLUMNS,
                            lineterminator="\n")
    writer.writeheader()
    for row in catalog_rows(catalog):
        writer.writerow(row)


def catalog_json_payload(catalog: list[ComponentDescriptor]) -> list[dict]:
    """JSON form of a catalog; representatives are stored row-major with
    full double precision, split into real and imaginary parts."""
    payload = []
    for idx, comp in enumerate(catalog):
        rep = np.asarray(comp.representative)
        entry = {
            "group": comp.spec.family, "size": comp.spec.size, "n": comp.n,
            "component_index": idx, "canonical": comp.canonical.label(),
            "phases": [[p.numerator, p.denominator] for p in comp.canonical.phases],
            "parity": comp.canonical.parity,
            "dimension": comp.dimension, "exact_order": comp.exact_order,
            "orbit_size": comp.orbit_size,
            "representative": {
                "shape": list(rep.shape),
                "real": [float(x) for x in rep.real.ravel()],
            },
        }
        if np.iscomplexobj(rep):
            entry["representative"]["imag"] = [float(x) for x in rep.imag.ravel()]
        payload.append(entry)
    return payload

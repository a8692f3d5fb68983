"""Torsion catalogs, canonical invariants, censuses, approximants.

The combinatorial oracles below enumerate integer phase tuples modulo the
appropriate symmetry group with plain loops; the dimension oracle solves the
commutation equation X g = g X directly.  Neither route touches the package's
canonicalization or adjoint code, so agreement pins both.
"""

import io
import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from torsion_orbits.groups import (GroupSpec, UnsupportedGroupError,
                                   element_order, random_element)
from torsion_orbits.torsion import (CanonicalInvariant, TorusTorsionPoint,
                                    approximation_bound, canonical_align,
                                    canonical_realization, canonicalize,
                                    catalog_components, catalog_json_payload,
                                    catalog_rows, cluster_census,
                                    count_components, enumerate_torsion,
                                    gcd_intersection_check, invariant_set,
                                    matrix_invariant,
                                    nearest_torsion_approximant,
                                    orientation_sign, phase_slots,
                                    sl2_component_census, torus_matrix,
                                    write_catalog_csv)


# ------------------------------------------------------------------ oracles

def orbit_count_oracle(spec, n):
    """Count phase tuples modulo the family's symmetry, by brute force."""
    fam, m, r = spec.family, spec.size, spec.rank
    if fam == "U":
        return len({tuple(sorted(t))
                    for t in itertools.product(range(n), repeat=m)})
    if fam == "SU":
        return len({tuple(sorted(t))
                    for t in itertools.product(range(n), repeat=m)
                    if sum(t) % n == 0})
    if fam == "SL2R":
        return n
    # SO(m): permutations of the r block phases; sign flips k -> n - k,
    # unrestricted for odd m, in pairs for even m
    seen = set()
    count = 0
    for t in itertools.product(range(n), repeat=r):
        if t in seen:
            continue
        count += 1
        orbit = set()
        for perm in itertools.permutations(t):
            for signs in itertools.product((1, -1), repeat=r):
                if m % 2 == 0 and (np.prod(signs) < 0):
                    continue
                orbit.add(tuple((s * k) % n for s, k in zip(signs, perm)))
        seen |= orbit
    return count


def class_dim_oracle(spec, rep):
    """dim of the conjugation orbit of rep: rank of X -> X rep - rep X on an
    independently built spanning set of the algebra."""
    m = spec.size
    span = []
    if spec.family in ("U", "SU"):
        for j in range(m):
            E = np.zeros((m, m), complex)
            E[j, j] = 1j
            span.append(E)
        for j in range(m):
            for k in range(j + 1, m):
                A = np.zeros((m, m), complex)
                A[j, k], A[k, j] = 1, -1
                span.append(A)
                S = np.zeros((m, m), complex)
                S[j, k], S[k, j] = 1j, 1j
                span.append(S)
        if spec.family == "SU":
            # remove the trace direction
            span = [B - np.trace(B) / m * np.eye(m) for B in span]
    elif spec.family == "SO":
        for j in range(m):
            for k in range(j + 1, m):
                A = np.zeros((m, m))
                A[j, k], A[k, j] = 1, -1
                span.append(A)
    else:
        span = [np.diag([1.0, -1.0]), np.array([[0.0, 1.0], [0.0, 0.0]]),
                np.array([[0.0, 0.0], [1.0, 0.0]])]
    cols = [(B @ rep - rep @ B).ravel() for B in span]
    M = np.array(cols).T
    M = np.vstack([M.real, M.imag])
    return int(np.linalg.matrix_rank(M, tol=1e-9))


# ------------------------------------------------------------- enumeration

def test_torus_point_validation():
    su2 = GroupSpec("SU", 2)
    with pytest.raises(ValueError):
        TorusTorsionPoint(su2, (Fraction(1, 2),))
    with pytest.raises(ValueError):
        TorusTorsionPoint(su2, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        TorusTorsionPoint(GroupSpec("U", 1), (Fraction(3, 2),))
    p = TorusTorsionPoint(su2, (Fraction(1, 2), Fraction(1, 2)))
    assert np.allclose(p.matrix(), -np.eye(2))


def test_phase_slots():
    assert phase_slots(GroupSpec("U", 3)) == 3
    assert phase_slots(GroupSpec("SU", 3)) == 3
    assert phase_slots(GroupSpec("SO", 5)) == 2
    assert phase_slots(GroupSpec("SL2R", 2)) == 1


def test_enumerate_counts_and_membership():
    assert len(enumerate_torsion(GroupSpec("U", 1), 3)) == 3
    assert len(enumerate_torsion(GroupSpec("SU", 2), 2)) == 2
    assert len(enumerate_torsion(GroupSpec("U", 2), 2)) == 4
    assert len(enumerate_torsion(GroupSpec("SO", 4), 2)) == 4
    assert len(enumerate_torsion(GroupSpec("SL2R", 2), 5)) == 5
    for spec in (GroupSpec("SU", 3), GroupSpec("SO", 5)):
        for p in enumerate_torsion(spec, 4):
            g = p.matrix()
            assert np.linalg.norm(np.linalg.matrix_power(g, 4) - np.eye(spec.size)) < 1e-12


def test_torus_matrix_shapes():
    so3 = torus_matrix(GroupSpec("SO", 3), [Fraction(1, 2)])
    assert np.allclose(so3, np.diag([-1.0, -1.0, 1.0]))
    sl2 = torus_matrix(GroupSpec("SL2R", 2), [Fraction(1, 4)])
    assert np.allclose(sl2, np.array([[0.0, -1.0], [1.0, 0.0]]))
    u2 = torus_matrix(GroupSpec("U", 2), [Fraction(0), Fraction(1, 2)])
    assert np.allclose(u2, np.diag([1.0, -1.0]))


# ----------------------------------------------------------- canonical form

def test_canonicalize_u_sorts():
    spec = GroupSpec("U", 2)
    a = canonicalize(spec, (Fraction(1, 2), Fraction(0)))
    b = canonicalize(spec, (Fraction(0), Fraction(1, 2)))
    assert a == b
    assert a.label() == "0/1,1/2"


def test_canonicalize_so3_folds_sign():
    spec = GroupSpec("SO", 3)
    assert canonicalize(spec, (Fraction(1, 3),)) == canonicalize(spec, (Fraction(2, 3),))
    assert canonicalize(spec, (Fraction(1, 3),)) != canonicalize(spec, (Fraction(1, 4),))


def test_canonicalize_su3_full_weyl_orbit():
    spec = GroupSpec("SU", 3)
    base = (Fraction(0), Fraction(1, 3), Fraction(2, 3))
    invs = {canonicalize(spec, perm) for perm in itertools.permutations(base)}
    assert len(invs) == 1


def test_canonicalize_so4_parity():
    spec = GroupSpec("SO", 4)
    p0 = canonicalize(spec, (Fraction(1, 4), Fraction(1, 4)))
    p1 = canonicalize(spec, (Fraction(1, 4), Fraction(3, 4)))
    p0b = canonicalize(spec, (Fraction(3, 4), Fraction(3, 4)))
    assert p0 != p1
    assert p0 == p0b
    assert p0.parity == 0 and p1.parity == 1
    assert p1.label() == "1/4,1/4,p1"
    # a self-paired phase (0 or 1/2) kills the parity distinction
    q0 = canonicalize(spec, (Fraction(0), Fraction(1, 4)))
    q1 = canonicalize(spec, (Fraction(0), Fraction(3, 4)))
    assert q0 == q1 and q0.parity is None


def test_canonicalize_so2_and_sl2_keep_orientation():
    assert canonicalize(GroupSpec("SO", 2), (Fraction(1, 3),)) != \
        canonicalize(GroupSpec("SO", 2), (Fraction(2, 3),))
    assert canonicalize(GroupSpec("SL2R", 2), (Fraction(1, 4),)) != \
        canonicalize(GroupSpec("SL2R", 2), (Fraction(3, 4),))


def test_canonical_realization_round_trips():
    for spec in (GroupSpec("U", 3), GroupSpec("SU", 3), GroupSpec("SO", 4),
                 GroupSpec("SO", 5), GroupSpec("SL2R", 2)):
        for n in (2, 3, 4):
            for inv in invariant_set(spec, n):
                realized = canonical_realization(spec, inv)
                assert canonicalize(spec, realized) == inv
                g = torus_matrix(spec, realized)
                eye = np.eye(spec.size)
                assert np.linalg.norm(np.linalg.matrix_power(g, n) - eye) < 1e-9


# ----------------------------------------------------------------- catalogs

def test_catalog_su2_n2():
    cat = catalog_components(GroupSpec("SU", 2), 2)
    assert [c.canonical.label() for c in cat] == ["0/1,0/1", "1/2,1/2"]
    assert [c.dimension for c in cat] == [0, 0]
    assert [c.exact_order for c in cat] == [1, 2]


def test_catalog_so3_n2():
    cat = catalog_components(GroupSpec("SO", 3), 2)
    assert sorted(c.dimension for c in cat) == [0, 2]
    # hand check: the nontrivial class is the pi-rotations, centralizer
    # dimension 1 inside the 3-dimensional algebra
    flip = [c for c in cat if c.dimension == 2][0]
    assert np.allclose(flip.representative, np.diag([-1.0, -1.0, 1.0]))
    assert class_dim_oracle(GroupSpec("SO", 3), flip.representative) == 2


def test_catalog_u2_n2():
    cat = catalog_components(GroupSpec("U", 2), 2)
    assert sorted(c.dimension for c in cat) == [0, 0, 2]
    for c in cat:
        # multiplicity oracle: dim = m^2 - sum of squared eigenvalue counts
        mults = {}
        for p in c.canonical.phases:
            mults[p] = mults.get(p, 0) + 1
        assert c.dimension == 4 - sum(k * k for k in mults.values())


def test_su2_n4_has_three_classes():
    # the three classes are pinned by their trace, a complete invariant here
    spec = GroupSpec("SU", 2)
    traces = {complex(np.trace(p.matrix())) for p in enumerate_torsion(spec, 4)}
    rounded = {round(t.real, 9) for t in traces}
    assert rounded == {2.0, 0.0, -2.0}
    assert count_components(spec, 4) == 3
    assert all(abs(t.imag) < 1e-12 for t in traces)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_u_count_formula(m):
    spec = GroupSpec("U", m)
    for n in range(1, 7):
        got = count_components(spec, n)
        assert got == math.comb(n + m - 1, m)
        assert got == orbit_count_oracle(spec, n)


@pytest.mark.parametrize("spec", [GroupSpec("SU", 2), GroupSpec("SU", 3),
                                  GroupSpec("SO", 2), GroupSpec("SO", 3),
                                  GroupSpec("SO", 4), GroupSpec("SO", 5),
                                  GroupSpec("SL2R", 2)],
                         ids=lambda s: s.label())
def test_counts_match_brute_force_orbits(spec):
    for n in range(1, 7):
        assert count_components(spec, n) == orbit_count_oracle(spec, n)


def test_catalog_orbit_sizes_cover_all_points():
    for spec in (GroupSpec("U", 3), GroupSpec("SU", 3), GroupSpec("SO", 4)):
        for n in (2, 3, 4):
            cat = catalog_components(spec, n)
            assert sum(c.orbit_size for c in cat) == len(enumerate_torsion(spec, n))


def test_catalog_dimensions_match_commutant_oracle():
    for spec in (GroupSpec("U", 2), GroupSpec("SU", 3), GroupSpec("SO", 4),
                 GroupSpec("SO", 5), GroupSpec("SL2R", 2)):
        for c in catalog_components(spec, 4):
            assert c.dimension == class_dim_oracle(spec, c.representative), \
                (spec.label(), c.canonical.label())


def test_catalog_exact_orders():
    for spec in (GroupSpec("U", 2), GroupSpec("SO", 4)):
        for c in catalog_components(spec, 6):
            assert 6 % c.exact_order == 0
            assert element_order(spec, c.representative, 6) == c.exact_order


def test_dimension_is_class_invariant():
    spec = GroupSpec("SU", 3)
    cat = catalog_components(spec, 3)
    from torsion_orbits.torsion import component_dimension
    for c in cat:
        for seed in range(10):
            h = random_element(spec, seed)
            g = h @ c.representative @ h.conj().T
            assert component_dimension(spec, g) == c.dimension


# ------------------------------------------------------- matrix invariants

def test_matrix_invariant_recovers_torus_label():
    cases = [
        (GroupSpec("U", 3), 4),
        (GroupSpec("SU", 3), 4),
        (GroupSpec("SO", 3), 4),
        (GroupSpec("SO", 4), 4),
        (GroupSpec("SO", 5), 4),
        (GroupSpec("SL2R", 2), 4),
    ]
    for spec, n in cases:
        for i, point in enumerate(enumerate_torsion(spec, n)):
            h = random_element(spec, 100 + i)
            if spec.is_complex:
                g = h @ point.matrix() @ h.conj().T
            elif spec.family == "SO":
                g = h @ point.matrix() @ h.T
            else:
                g = h @ point.matrix() @ np.linalg.inv(h)
            assert matrix_invariant(spec, g, n) == canonicalize(spec, point.phases), \
                (spec.label(), point.phases)


def test_canonical_align_conjugates_to_representative():
    spec = GroupSpec("SO", 4)
    point = enumerate_torsion(spec, 4)[7]
    h = random_element(spec, 3)
    g = h @ point.matrix() @ h.T
    Q, realized = canonical_align(spec, g, 4)
    assert np.linalg.norm(Q.T @ Q - np.eye(4)) < 1e-10
    assert abs(np.linalg.det(Q) - 1.0) < 1e-10
    assert np.linalg.norm(Q.T @ g @ Q - torus_matrix(spec, realized)) < 1e-9


def test_canonical_align_rejects_non_torsion():
    spec = GroupSpec("U", 2)
    g = np.diag([np.exp(0.37j), np.exp(-0.91j)])
    with pytest.raises(ValueError, match="order dividing"):
        canonical_align(spec, g, 4)


def test_matrix_invariant_su_det_branch():
    # an SU(3) element whose eigenphases are written with a shifted branch
    # still canonicalizes onto the integer-sum representative
    spec = GroupSpec("SU", 3)
    g = np.diag(np.exp(2j * np.pi * np.array([2 / 3, 2 / 3, 2 / 3])))
    inv = matrix_invariant(spec, g, 3)
    assert inv.label() == "2/3,2/3,2/3"


# ----------------------------------------------------------------- gcd law

@pytest.mark.parametrize("family,size", [("SU", 2), ("U", 2), ("SO", 3)])
@pytest.mark.parametrize("n,m", [(2, 3), (2, 4), (4, 6), (6, 9)])
def test_gcd_intersection(family, size, n, m):
    rep = gcd_intersection_check(GroupSpec(family, size), n, m)
    assert rep.passed, rep.to_json()
    assert rep.details["count_intersection"] == rep.details["count_gcd"]


def test_gcd_counts_example():
    rep = gcd_intersection_check(GroupSpec("SU", 2), 4, 6)
    # gcd 2: invariant sets of orders dividing 2 in SU(2) are {e} and {-e}
    assert rep.details["count_gcd"] == 2
    assert rep.details["count_intersection"] == 2


# ------------------------------------------------------------- approximants

def test_nearest_torsion_u1_closed_form():
    spec = GroupSpec("U", 1)
    theta = 0.3
    g = np.array([[np.exp(1j * theta)]])
    approx, dist = nearest_torsion_approximant(spec, g, 100)
    k = round(theta / (2 * np.pi) * 100)
    assert np.allclose(approx, [[np.exp(2j * np.pi * k / 100)]])
    assert dist == pytest.approx(abs(np.exp(1j * theta) - np.exp(2j * np.pi * k / 100)))
    assert dist <= approximation_bound(spec, 100)


def test_nearest_torsion_su_restores_determinant():
    spec = GroupSpec("SU", 3)
    # eigenphases whose independent rounding misses the det = 1 grid
    phases = np.array([0.26, 0.26, 0.48])
    g = np.diag(np.exp(2j * np.pi * phases))
    approx, dist = nearest_torsion_approximant(spec, g, 10)
    assert abs(np.linalg.det(approx) - 1.0) < 1e-9
    assert np.linalg.norm(np.linalg.matrix_power(approx, 10) - np.eye(3)) < 1e-8
    assert dist <= approximation_bound(spec, 10, corrections=1) + 1e-12


def test_nearest_torsion_so_block_rounding():
    spec = GroupSpec("SO", 3)
    theta = 1.0
    g = np.array([[np.cos(theta), -np.sin(theta), 0.0],
                  [np.sin(theta), np.cos(theta), 0.0],
                  [0.0, 0.0, 1.0]])
    approx, dist = nearest_torsion_approximant(spec, g, 50)
    k = round(theta / (2 * np.pi) * 50)
    delta = theta - 2 * np.pi * k / 50
    assert dist == pytest.approx(2 * np.sqrt(2.0) * abs(np.sin(delta / 2)), abs=1e-12)
    assert np.linalg.norm(np.linalg.matrix_power(approx, 50) - np.eye(3)) < 1e-10


def test_nearest_torsion_property_sweep():
    rng = np.random.default_rng(0)
    for spec in (GroupSpec("U", 2), GroupSpec("SU", 3), GroupSpec("SO", 4)):
        for N in (1, 7, 40):
            for _ in range(10):
                g = random_element(spec, rng)
                approx, dist = nearest_torsion_approximant(spec, g, N)
                assert dist <= approximation_bound(spec, N, spec.eigenphase_count)
                eye = np.eye(spec.size)
                assert np.linalg.norm(np.linalg.matrix_power(approx, N) - eye) < 1e-7


def test_nearest_torsion_rejects_sl2():
    with pytest.raises(UnsupportedGroupError):
        nearest_torsion_approximant(GroupSpec("SL2R", 2), np.eye(2), 5)


# ---------------------------------------------------------------- censuses

def test_orientation_sign_convention():
    r = lambda th: np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
    assert orientation_sign(r(0.4)) == -1
    assert orientation_sign(r(2 * np.pi - 0.4)) == 1
    assert orientation_sign(np.eye(2)) == 0
    assert orientation_sign(-np.eye(2)) == 0


def test_orientation_sign_is_conjugation_invariant():
    spec = GroupSpec("SL2R", 2)
    rng = np.random.default_rng(12)
    rot = torus_matrix(spec, [Fraction(1, 3)])
    sigma = orientation_sign(rot)
    for _ in range(50):
        h = random_element(spec, rng)
        assert orientation_sign(h @ rot @ np.linalg.inv(h)) == sigma


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sl2_census_small(n):
    rep = sl2_component_census(n, 200, seed=17)
    assert rep.passed, rep.to_json()
    assert rep.details["class_count"] == n
    assert rep.details["sigma_flips"] == 0


def test_cluster_census_with_parity_classes():
    rep = cluster_census(GroupSpec("SO", 4), 4, 150, seed=6)
    assert rep.passed, rep.to_json()
    labels = rep.details["clusters"]
    assert "1/4,1/4,p0" in labels and "1/4,1/4,p1" in labels
    assert rep.details["cluster_count"] == count_components(GroupSpec("SO", 4), 4)


def test_cluster_census_u3():
    rep = cluster_census(GroupSpec("U", 3), 3, 120, seed=1)
    assert rep.passed
    assert rep.details["cluster_count"] == count_components(GroupSpec("U", 3), 3)


# ------------------------------------------------------------ serialization

def test_catalog_csv_schema():
    cat = catalog_components(GroupSpec("SO", 4), 4)
    buf = io.StringIO()
    write_catalog_csv(cat, buf)
    lines = buf.getvalue().strip().split("\n")
    assert lines[0] == "group,size,n,component_index,canonical,dimension,exact_order"
    assert len(lines) == 1 + len(cat)
    assert any(",p1" in line or '"1/4,1/4,p1"' in line for line in lines[1:])


def test_catalog_rows_and_indices():
    cat = catalog_components(GroupSpec("U", 2), 2)
    rows = catalog_rows(cat)
    assert [r["component_index"] for r in rows] == [0, 1, 2]
    assert rows[0]["group"] == "U" and rows[0]["size"] == 2


def test_catalog_json_payload_round_trips_representative():
    cat = catalog_components(GroupSpec("SU", 2), 4)
    payload = catalog_json_payload(cat)
    json.dumps(payload)  # must be serializable as-is
    for entry, comp in zip(payload, cat):
        shape = entry["representative"]["shape"]
        rep = (np.array(entry["representative"]["real"]).reshape(shape)
               + 1j * np.array(entry["representative"]["imag"]).reshape(shape))
        assert np.array_equal(rep, comp.representative)
        assert entry["phases"] == [[p.numerator, p.denominator]
                                   for p in comp.canonical.phases]

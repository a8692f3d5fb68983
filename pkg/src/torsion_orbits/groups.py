"""Matrix realizations of U(m), SU(m), SO(m) (m <= 5) and SL(2,R).

Group elements are plain ndarrays (complex for U/SU, real for SO/SL2R)
accompanied by a :class:`GroupSpec`.  Lie algebra elements are coordinate
vectors with respect to a fixed orthonormal basis of the algebra; the inner
product throughout is <X, Y> = Re tr(X* Y), which is Ad-invariant on the
compact families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import expm, polar

FAMILIES = ("U", "SU", "SO", "SL2R")

#: Frobenius tolerance for membership checks.
TOL_MEMBERSHIP = 1e-9

#: Largest supported matrix size for the compact families.
MAX_SIZE = 5


class UnsupportedGroupError(ValueError):
    """A family/size combination outside the supported range."""


@dataclass(frozen=True)
class GroupSpec:
    """Family tag plus matrix size.  ``SL2R`` forces size 2."""

    family: str
    size: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedGroupError(f"unknown family {self.family!r}")
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"size must be a positive integer, got {self.size!r}")
        if self.family == "SL2R":
            if self.size != 2:
                raise UnsupportedGroupError("SL2R is only realized on 2x2 matrices")
        else:
            lo = 2 if self.family in ("SU", "SO") else 1
            if self.size < lo or self.size > MAX_SIZE:
                raise UnsupportedGroupError(
                    f"{self.family}({self.size}) is out of the supported range "
                    f"{lo}..{MAX_SIZE}")

    @property
    def is_complex(self) -> bool:
        return self.family in ("U", "SU")

    @property
    def dim(self) -> int:
        """Real dimension of the Lie algebra."""
        m = self.size
        if self.family == "U":
            return m * m
        if self.family == "SU":
            return m * m - 1
        if self.family == "SO":
            return m * (m - 1) // 2
        return 3

    @property
    def rank(self) -> int:
        """Dimension of a maximal torus."""
        m = self.size
        if self.family == "U":
            return m
        if self.family == "SU":
            return m - 1
        if self.family == "SO":
            return m // 2
        return 1

    @property
    def eigenphase_count(self) -> int:
        # Number of unit-circle eigenphases moved when perturbing along the
        # torus: every eigenvalue for U/SU, both members of each rotation
        # pair for SO, the single rotation pair for SL2R.
        if self.family == "SO":
            return 2 * self.rank
        if self.family == "SL2R":
            return 2
        return self.size

    def identity(self) -> np.ndarray:
        dtype = complex if self.is_complex else float
        return np.eye(self.size, dtype=dtype)

    def label(self) -> str:
        return "SL(2,R)" if self.family == "SL2R" else f"{self.family}({self.size})"


class AlgebraBasis:
    """Fixed orthonormal basis of the Lie algebra of ``spec``.

    ``matrices`` has shape (d, m, m); ``gram`` is the matrix of pairwise
    inner products (the identity, up to roundoff, by construction).
    """

    def __init__(self, spec: GroupSpec, matrices: np.ndarray):
        self.spec = spec
        self.matrices = matrices
        d = matrices.shape[0]
        flat = matrices.reshape(d, -1)
        self.gram = np.real(flat.conj() @ flat.T)

    def __len__(self):
        return self.matrices.shape[0]


def _su_diagonal_directions(m: int) -> list[np.ndarray]:
    # Orthonormal basis of the traceless real diagonals: the l-th vector has
    # l ones followed by -l, scaled by 1/sqrt(l(l+1)).
    out = []
    for l in range(1, m):
        v = np.zeros(m)
        v[:l] = 1.0
        v[l] = -l
        out.append(v / np.sqrt(l * (l + 1)))
    return out


@lru_cache(maxsize=None)
def algebra_basis(spec: GroupSpec) -> AlgebraBasis:
    """Orthonormal basis (w.r.t. Re tr(X* Y)) of the Lie algebra."""
    m = spec.size
    mats = []
    if spec.family in ("U", "SU"):
        if spec.family == "U":
            for j in range(m):
                B = np.zeros((m, m), dtype=complex)
                B[j, j] = 1j
                mats.append(B)
        else:
            for v in _su_diagonal_directions(m):
                mats.append(np.diag(1j * v))
        for j in range(m):
            for k in range(j + 1, m):
                A = np.zeros((m, m), dtype=complex)
                A[j, k], A[k, j] = 1.0, -1.0
                mats.append(A / np.sqrt(2))
                S = np.zeros((m, m), dtype=complex)
                S[j, k], S[k, j] = 1j, 1j
                mats.append(S / np.sqrt(2))
    elif spec.family == "SO":
        for j in range(m):
            for k in range(j + 1, m):
                A = np.zeros((m, m))
                A[j, k], A[k, j] = 1.0, -1.0
                mats.append(A / np.sqrt(2))
    else:  # sl(2,R): traceless real
        mats.append(np.diag([1.0, -1.0]) / np.sqrt(2))
        mats.append(np.array([[0.0, 1.0], [1.0, 0.0]]) / np.sqrt(2))
        mats.append(np.array([[0.0, 1.0], [-1.0, 0.0]]) / np.sqrt(2))
    stack = np.stack(mats)
    assert stack.shape[0] == spec.dim
    return AlgebraBasis(spec, stack)


def algebra_matrix(spec: GroupSpec, coords) -> np.ndarray:
    """Matrix form sum_i coords[i] * B_i of an algebra element."""
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (spec.dim,):
        raise ValueError(f"expected {spec.dim} coordinates, got shape {coords.shape}")
    basis = algebra_basis(spec)
    return np.tensordot(coords, basis.matrices, axes=(0, 0))


def algebra_coords(spec: GroupSpec, mat: np.ndarray) -> np.ndarray:
    """Coordinates of ``mat`` in the fixed basis (orthonormal projection)."""
    basis = algebra_basis(spec)
    d = spec.dim
    flat = basis.matrices.reshape(d, -1)
    return np.real(flat.conj() @ np.asarray(mat).ravel())


def constraint_residual(spec: GroupSpec, mat: np.ndarray) -> float:
    """How far ``mat`` is from the defining algebra constraints."""
    mat = np.asarray(mat)
    if spec.family == "U":
        return float(np.linalg.norm(mat + mat.conj().T))
    if spec.family == "SU":
        return float(max(np.linalg.norm(mat + mat.conj().T), abs(np.trace(mat))))
    if spec.family == "SO":
        return float(max(np.linalg.norm(mat + mat.T), np.linalg.norm(np.imag(mat))))
    return float(max(abs(np.trace(mat)), np.linalg.norm(np.imag(mat))))


def exp_element(spec: GroupSpec, coords) -> np.ndarray:
    """Group element exp(sum_i coords[i] B_i).

    Scaling-and-squaring Pade exponential; the result lands in the group to
    machine precision because the generator satisfies the algebra constraints
    exactly.
    """
    g = expm(algebra_matrix(spec, coords))
    if not spec.is_complex:
        g = np.real(g)
    return g


def group_inverse(spec: GroupSpec, g: np.ndarray) -> np.ndarray:
    g = np.asarray(g)
    if spec.family in ("U", "SU"):
        return g.conj().T
    if spec.family == "SO":
        return g.T
    # det = 1: adjugate formula, exact up to the det residual
    a, b, c, d = g[0, 0], g[0, 1], g[1, 0], g[1, 1]
    return np.array([[d, -b], [-c, a]])


def membership_residual(spec: GroupSpec, g: np.ndarray) -> float:
    """Frobenius-scale distance from the defining group constraints."""
    g = np.asarray(g)
    m = spec.size
    if g.shape != (m, m):
        return float("inf")
    eye = np.eye(m)
    if spec.family in ("U", "SU"):
        r = np.linalg.norm(g.conj().T @ g - eye)
        if spec.family == "SU":
            r = max(r, abs(np.linalg.det(g) - 1.0))
        return float(r)
    real_part = np.linalg.norm(np.imag(g)) if np.iscomplexobj(g) else 0.0
    gr = np.real(g)
    if spec.family == "SO":
        return float(max(np.linalg.norm(gr.T @ gr - eye),
                         abs(np.linalg.det(gr) - 1.0), real_part))
    return float(max(abs(np.linalg.det(gr) - 1.0), real_part))


def require_member(spec: GroupSpec, g: np.ndarray, tol: float = TOL_MEMBERSHIP,
                   what: str = "g") -> np.ndarray:
    g = np.asarray(g)
    r = membership_residual(spec, g)
    if not r <= tol:
        raise ValueError(f"{what} is not in {spec.label()} within {tol:g} "
                         f"(residual {r:.3e})")
    return g


def adjoint_matrix(spec: GroupSpec, g: np.ndarray) -> np.ndarray:
    """Matrix of Ad(g): X -> g X g^-1 in the fixed algebra basis.

    Returns a real (d, d) array.  For the compact families this matrix is
    orthogonal with respect to the basis gram matrix.
    """
    g = np.asarray(g)
    if abs(np.linalg.det(g)) < 0.5:
        raise ValueError("g is numerically non-invertible")
    require_member(spec, g)
    basis = algebra_basis(spec)
    ginv = group_inverse(spec, g)
    conj = np.einsum("ij,ajk,kl->ail", g, basis.matrices, ginv)
    # A[a, b] = <B_a, g B_b g^-1>; orthonormal basis, so no gram solve needed.
    return np.real(np.einsum("aij,bij->ab", basis.matrices.conj(), conj))


def cartan_decompose(g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split g in SL(2,R) as k * exp(p), k in SO(2), p symmetric traceless.

    Returns ``(k, p)``.  The rotation factor comes from the SVD-based polar
    decomposition; p is the log of the positive factor.
    """
    spec = GroupSpec("SL2R", 2)
    g = require_member(spec, np.asarray(g, dtype=float))
    k, pos = polar(g)
    w, V = np.linalg.eigh(pos)
    if w.min() <= 0:
        raise ValueError("numerically singular input")
    p = (V * np.log(w)) @ V.T
    p = (p + p.T) / 2.0
    p -= np.trace(p) / 2.0 * np.eye(2)  # det g = 1 forces tracelessness
    return k, p


def element_order(spec: GroupSpec, g: np.ndarray, n_max: int,
                  tol: float = TOL_MEMBERSHIP) -> int | None:
    """Smallest d in [1, n_max] with ||g^d - I|| <= tol, else None."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    g = np.asarray(g)
    eye = spec.identity()
    power = g
    for d in range(1, n_max + 1):
        if np.linalg.norm(power - eye) <= tol:
            return d
        power = power @ g
    return None


def _haar_unitary(m: int, rng) -> np.ndarray:
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.where(np.abs(np.diag(r)) < 1e-300, 1.0, np.diag(r))
    return q * (d / np.abs(d))


def random_element(spec: GroupSpec, seed) -> np.ndarray:
    """Seeded random group element.

    Compact families: orthogonalized Gaussian matrix with the usual phase
    correction (Haar for U/SO), determinant corrected per family.  SL(2,R):
    Gaussian matrix rescaled to determinant 1; draws with |det| < 1e-6 before
    scaling are rejected, and 100 consecutive rejections raise.
    """
    rng = np.random.default_rng(seed)
    m = spec.size
    if spec.family == "U":
        return _haar_unitary(m, rng)
    if spec.family == "SU":
        g = _haar_unitary(m, rng)
        return g * np.exp(-1j * np.angle(np.linalg.det(g)) / m)
    if spec.family == "SO":
        z = rng.standard_normal((m, m))
        q, r = np.linalg.qr(z)
        signs = np.sign(np.diag(r))
        signs[signs == 0] = 1.0
        q = q * signs
        if np.linalg.det(q) < 0:
            q[:, [0, 1]] = q[:, [1, 0]]
        return q
    for _ in range(100):
        z = rng.standard_normal((2, 2))
        det = np.linalg.det(z)
        if abs(det) >= 1e-6:
            if det < 0:
                z = z[:, [1, 0]]
                det = -det
            return z / np.sqrt(det)
    raise RuntimeError("rejected 100 consecutive near-singular SL(2,R) draws")


def random_algebra(spec: GroupSpec, seed, scale: float = 1.0) -> np.ndarray:
    """Seeded Gaussian coordinate vector in the algebra."""
    rng = np.random.default_rng(seed)
    return scale * rng.standard_normal(spec.dim)

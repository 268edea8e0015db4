"""Finite-field laboratory: incidence modules for rank-3 projective spaces
and the principal-series orbit dimension check.

For a prime p, lines and planes of F_p^3 are enumerated as normalised
projective vectors (first nonzero coordinate 1); planes are identified with
lines of the dual space, so a line L lies in the plane with normal n exactly
when n . L = 0.  The maps

    tau  : F1 -> F2,  tau(f)(P)  = sum of f over lines inside P,
    tau' : F2 -> F1,  tau'(f)(L) = sum of f over planes through L,

act between the sum-zero function spaces F1, F2 (dimension p^2 + p each).
Rank and kernel computations run over F_p by fraction-free Gaussian
elimination on integer matrices reduced mod p.

The principal-series check enumerates the free orbits of the rank-2 Weyl
group action on weights mod (p-1); each regular residue lifts uniquely into
coordinates 1..p-2, and the lifted dimensions over one orbit must sum to
(p+1)(p^2+p+1), the index of a Borel subgroup.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .coxeter import generate
from .rootdata import CartanType, Weight, build_root_system, weyl_dim


class NotPrime(ValueError):
    """The modulus must be prime."""


class TooLarge(ValueError):
    """Prime exceeds the configured bound."""


DEFAULT_PRIME_BOUND = 97


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        _check_prime(self.p)


@dataclass(eq=False)
class IncidenceSpace:
    """Lines, planes, and the 0/1 incidence matrix (rows planes, cols lines)."""

    p: int
    lines: tuple[tuple[int, int, int], ...]
    planes: tuple[tuple[int, int, int], ...]
    incidence: np.ndarray

    @property
    def n_points(self) -> int:
        return len(self.lines)


def _projective_points(p: int) -> list[tuple[int, int, int]]:
    pts = [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    pts += [(0, 1, z) for z in range(1, p)]
    pts += [(1, 0, z) for z in range(1, p)]
    pts += [(1, y, 0) for y in range(1, p)]
    pts += [(1, y, z) for y in range(1, p) for z in range(1, p)]
    return sorted(pts)


def build_incidence(p: int, bound: int = DEFAULT_PRIME_BOUND) -> IncidenceSpace:
    """Enumerate the incidence geometry of F_p^3 and verify its regularity."""
    _check_prime(p)
    if p > bound:
        raise TooLarge(f"p = {p} exceeds bound {bound}")
    pts = _projective_points(p)
    n = p * p + p + 1
    if len(pts) != n:
        raise AssertionError("projective point count is off")
    lines = tuple(pts)
    planes = tuple(pts)  # dual space, same normal forms
    L = np.array(lines, dtype=np.int64)
    P = np.array(planes, dtype=np.int64)
    inc = ((P @ L.T) % p == 0).astype(np.int64)
    if not (inc.sum(axis=1) == p + 1).all() or not (inc.sum(axis=0) == p + 1).all():
        raise AssertionError("incidence regularity fails")
    return IncidenceSpace(p=p, lines=lines, planes=planes, incidence=inc)


# ---------------------------------------------------------------------------
# Linear algebra mod p
# ---------------------------------------------------------------------------

def _row_echelon_mod(
    M: np.ndarray, p: int, reduce_above: bool = True
) -> tuple[np.ndarray, list[int]]:
    """Row echelon form over F_p; returns (reduced matrix, pivot columns).

    Updates touch only rows with a nonzero entry in the pivot column and only
    columns from the pivot rightwards (entries to the left are already fixed),
    which keeps the p ~ 100 geometries tractable.  ``reduce_above=False``
    skips the upward sweep when only the rank is wanted.
    """
    A = (M % p).astype(np.int64).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        t = r + int(nz[0])
        if t != r:
            A[[r, t]] = A[[t, r]]
        inv = pow(int(A[r, c]), -1, p)
        tail = A[:, c:]  # view
        tail[r] = (tail[r] * inv) % p
        col = A[:, c] if reduce_above else A[r + 1:, c]
        hit = np.nonzero(col)[0] if reduce_above else r + 1 + np.nonzero(col)[0]
        hit = hit[hit != r]
        if hit.size:
            tail[hit] = (tail[hit] - np.outer(A[hit, c], tail[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod(M: np.ndarray, p: int) -> int:
    return len(_row_echelon_mod(M, p, reduce_above=False)[1])


def _kernel_from_rref(A: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(A[r, fc])) % p
    return basis


def kernel_basis_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Rows span the null space of M over F_p."""
    A, pivots = _row_echelon_mod(M, p)
    return _kernel_from_rref(A, pivots, p)


def _same_subspace(A: np.ndarray, B: np.ndarray, p: int) -> bool:
    ra, rb = rank_mod(A, p), rank_mod(B, p)
    if ra != rb:
        return False
    return rank_mod(np.vstack([A, B]), p) == ra


# ---------------------------------------------------------------------------
# The maps tau, tau'
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TauMaps:
    """Matrices of tau and tau' on the sum-zero subspaces.

    The basis of F1 is e_L - e_L0 over lines L != L0 (dually for F2), so the
    matrices have shape (n, n-1) with values in ambient function coordinates.
    """

    space: IncidenceSpace
    tau: np.ndarray
    tau_prime: np.ndarray

    @property
    def dim_f1(self) -> int:
        return self.space.n_points - 1

    @property
    def dim_f2(self) -> int:
        return self.space.n_points - 1


def tau_maps(space: IncidenceSpace) -> TauMaps:
    p = space.p
    inc = space.incidence
    # tau(e_L - e_L0) has plane values inc[:, L] - inc[:, L0]
    tau = (inc[:, 1:] - inc[:, :1]) % p
    tau_prime = (inc.T[:, 1:] - inc.T[:, :1]) % p
    return TauMaps(space=space, tau=tau, tau_prime=tau_prime)


@dataclass(frozen=True)
class KernelReport:
    p: int
    dim_f1: int
    dim_ker_tau: int
    dim_ker_tau_prime: int
    ker_tau_eq_im_tau_prime: bool
    ker_tau_prime_eq_im_tau: bool


def kernel_analysis(maps: TauMaps) -> KernelReport:
    """Kernel dimensions of tau, tau' and the kernel/image subspace identities."""
    p = maps.space.p
    nm1 = maps.dim_f1

    def expand(vecs: np.ndarray) -> np.ndarray:
        # basis coordinates -> ambient function values (value at index 0 is
        # minus the sum, keeping the function sum-zero)
        lead = (-vecs.sum(axis=1, keepdims=True)) % p
        return np.hstack([lead, vecs]) % p

    rref_t, piv_t = _row_echelon_mod(maps.tau, p)
    rref_tp, piv_tp = _row_echelon_mod(maps.tau_prime, p)
    ker_tau = expand(_kernel_from_rref(rref_t, piv_t, p))
    ker_tau_p = expand(_kernel_from_rref(rref_tp, piv_tp, p))
    im_tau = maps.tau.T % p          # spans of columns, rows in ambient F2 coords
    im_tau_p = maps.tau_prime.T % p
    return KernelReport(
        p=p,
        dim_f1=nm1,
        dim_ker_tau=nm1 - len(piv_t),
        dim_ker_tau_prime=nm1 - len(piv_tp),
        ker_tau_eq_im_tau_prime=_same_subspace(ker_tau, im_tau_p, p),
        ker_tau_prime_eq_im_tau=_same_subspace(ker_tau_p, im_tau, p),
    )


def equivariance_spot_check(space: IncidenceSpace, samples: int = 20) -> bool:
    """inc[gP, gL] == inc[P, L] for a deterministic sample of g in GL_3(F_p)."""
    p = space.p
    rng = random.Random(10007 * p)
    line_index = {v: i for i, v in enumerate(space.lines)}

    def normalise(v):
        v = [x % p for x in v]
        for x in v:
            if x:
                inv = pow(x, -1, p)
                return tuple((y * inv) % p for y in v)
        raise AssertionError("zero vector")

    def matvec(m, v):
        return tuple(sum(m[i][j] * v[j] for j in range(3)) % p for i in range(3))

    done = 0
    while done < samples:
        m = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        ) % p
        if det == 0:
            continue
        done += 1
        # inverse transpose via adjugate
        adj = [
            [
                ((m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                  - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]))
                % p
                for j in range(3)
            ]
            for i in range(3)
        ]
        dinv = pow(det, -1, p)
        minvt = [[(adj[j][i] * dinv) % p for j in range(3)] for i in range(3)]
        perm_l = [line_index[normalise(matvec(m, v))] for v in space.lines]
        perm_p = [line_index[normalise(matvec(minvt, v))] for v in space.planes]
        moved = space.incidence[np.ix_(perm_p, perm_l)]
        if not np.array_equal(moved, space.incidence):
            return False
    return True


# ---------------------------------------------------------------------------
# Principal series orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitResult:
    rep: tuple[int, int]
    members: tuple[tuple[int, int], ...]
    lifts: tuple[tuple[int, int], ...]
    dims: tuple[int, ...]
    total: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.total == self.expected


@dataclass(frozen=True)
class PrincipalSeriesReport:
    p: int
    orbits: tuple[OrbitResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(o.ok for o in self.orbits)


def principal_series_check(p: int) -> PrincipalSeriesReport:
    """Free-orbit dimension sums for the rank-2 symmetric Weyl group at p.

    Stabilisers are computed honestly (an orbit is free iff it has |W|
    elements); freeness forces every coordinate nonzero mod p-1, which makes
    the lift into 1..p-2 unique.
    """
    _check_prime(p)
    if p < 5:
        raise ValueError("principal-series check needs p >= 5")
    ct = CartanType.parse("A2")
    g = generate(ct)
    rs = build_root_system(ct)
    q = p - 1
    expected = (p + 1) * (p * p + p + 1)

    def act(w, zeta):
        img = g.act_on_weight(w, Weight(zeta))
        return (img.coords[0] % q, img.coords[1] % q)

    seen: set[tuple[int, int]] = set()
    orbits: list[OrbitResult] = []
    for a in range(q):
        for b in range(q):
            zeta = (a, b)
            if zeta in seen:
                continue
            orbit = sorted({act(w, zeta) for w in g.elements})
            seen.update(orbit)
            if len(orbit) != g.size:
                continue  # nontrivial stabiliser
            lifts = []
            dims = []
            for z in orbit:
                if z[0] == 0 or z[1] == 0:
                    raise AssertionError("free orbit contains a zero coordinate")
                lift = ((z[0] - 1) % q + 1, (z[1] - 1) % q + 1)
                lifts.append(lift)
                dims.append(weyl_dim(rs, Weight(lift)))
            orbits.append(OrbitResult(
                rep=orbit[0],
                members=tuple(orbit),
                lifts=tuple(lifts),
                dims=tuple(dims),
                total=sum(dims),
                expected=expected,
            ))
    return PrincipalSeriesReport(p=p, orbits=tuple(orbits))

"""Canonical-basis combinatorics of the Hecke algebra.

Everything here lives over Z[v, v^-1] with u = v^2.  The normalised standard
basis Tt_w = v^(-l(w)) T_w satisfies

    Tt_s Tt_w = Tt_{sw}                      if l(sw) > l(w),
    Tt_s Tt_w = Tt_{sw} + (v - v^-1) Tt_w    if l(sw) < l(w),

and the canonical basis is c_w = sum_y p_{y,w} Tt_y with
p_{y,w} = v^(l(y)-l(w)) P_{y,w}(v^2).  The c_w are built by induction on
length through

    c_{sw} = c_s c_w - sum_{z < w, sz < z} mu(z, w) c_z      (sw > w),

where mu(z, w) is the coefficient of v^-1 in p_{z,w}.  This yields the
classical P_{y,w} and mu values without a separate recursion.

Structure constants h_{x,y,z} (c_x c_y = sum_z h_{x,y,z} c_z) are computed
for all triples by running the same induction on the c-basis expansion of
c_x c_y, vectorised with numpy over fixed-width integer exponent windows; all
arithmetic is integer-exact, with explicit magnitude guards.  From the h's:

* a(z) = max over x, y of deg_v h_{x,y,z};
* gamma[x,y,z] = coefficient of v^a(z) in h_{x,y,z}, the structure constants
  of the asymptotic ring, with product t_x t_y = sum_z gamma[x,y,z] t_z.

Cells are the strong components of the preorder generated by appearance of
c_z in c_s c_y (left) and its mirror through inversion (right); this uses
the full closure rather than mu-graphs alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .coxeter import WeylElt, WeylGroup
from .poly import LaurentPoly


class GroupTooLarge(ValueError):
    """Group order exceeds the configured bound for the canonical-basis pass."""


class AssociativityFailure(AssertionError):
    """The computed asymptotic-ring constants are not associative.

    This signals a convention bug in the basis or gamma extraction, never bad
    user input.
    """


_GUARD = 2 ** 50  # integer magnitudes must stay far below 2**63 and 2**53


# ---------------------------------------------------------------------------
# KL data
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class KLData:
    """Canonical-basis data for one Weyl group.

    ``P`` maps (y, w) with y <= w to the coefficient tuple of P_{y,w} in q;
    ``mu`` maps (y, w) to the nonzero mu values.  Structure constants are
    reachable through :meth:`h_entry` / :meth:`h_row`; their top terms (all
    triples) back the a-function and gamma extraction.
    """

    group: WeylGroup
    P: dict[tuple[WeylElt, WeylElt], tuple[int, ...]]
    mu: dict[tuple[WeylElt, WeylElt], int]
    _cb: list[dict[int, LaurentPoly]] = field(repr=False)
    _mu_of: list[dict[int, int]] = field(repr=False)
    _top: "_TopData | None" = field(default=None, repr=False)

    # -- structure constants

    def _ensure_top(self) -> "_TopData":
        if self._top is None:
            self._top = _compute_top(self)
        return self._top

    @property
    def a_values(self) -> tuple[int, ...]:
        """a(z) per element index."""
        return self._ensure_top().a

    def a_of(self, w: WeylElt) -> int:
        return self.a_values[self.group.index(w)]

    def gamma_tensor(self) -> np.ndarray:
        """Dense integer gamma[x, y, z] over element indices."""
        return self._ensure_top().gamma

    def h_block(self, y: WeylElt) -> np.ndarray:
        """(x, z, exponent) integer array of h_{x,y,z}; exponent offset in
        ``self.h_offset``."""
        return self._h_block_idx(self.group.index(y))

    @property
    def h_offset(self) -> int:
        return self.group.nu + 2

    def _h_block_idx(self, yi: int) -> np.ndarray:
        if not hasattr(self, "_h_cache"):
            self._h_cache: dict[int, np.ndarray] = {}
        if yi not in self._h_cache:
            if len(self._h_cache) > 8 and self.group.size > 24:
                self._h_cache.clear()
            self._h_cache[yi] = _h_pass(self, yi)
        return self._h_cache[yi]

    def h_entry(self, x: WeylElt, y: WeylElt, z: WeylElt) -> LaurentPoly:
        g = self.group
        row = self._h_block_idx(g.index(y))[g.index(x), g.index(z)]
        off = self.h_offset
        return LaurentPoly({k - off: int(c) for k, c in enumerate(row) if c})

    def h_row(self, x: WeylElt, y: WeylElt) -> dict[WeylElt, LaurentPoly]:
        g = self.group
        blk = self._h_block_idx(g.index(y))[g.index(x)]
        off = self.h_offset
        out = {}
        for zi in range(g.size):
            row = blk[zi]
            if row.any():
                out[g.element(zi)] = LaurentPoly(
                    {k - off: int(c) for k, c in enumerate(row) if c}
                )
        return out


def compute_kl(g: WeylGroup, bound: int = 120) -> KLData:
    """Run the canonical-basis induction for the whole group."""
    if g.size > bound:
        raise GroupTooLarge(f"|W| = {g.size} exceeds bound {bound}")
    n = g.size
    rank = g.rank
    lengths = [g.length_of_index(i) for i in range(n)]
    vinv = LaurentPoly.gen(-1)
    vmvi = LaurentPoly.gen(1) - vinv

    cb: list[dict[int, LaurentPoly]] = [dict() for _ in range(n)]
    mu_of: list[dict[int, int]] = [dict() for _ in range(n)]
    cb[0] = {0: LaurentPoly.one()}

    for x in range(1, n):
        s = g.element(x).word[0]
        xp = g.lmul_index(x, s)
        acc: dict[int, LaurentPoly] = {}
        for y, f in cb[xp].items():
            sy = g.lmul_index(y, s)
            if lengths[sy] > lengths[y]:
                acc[sy] = acc.get(sy, LaurentPoly.zero()) + f
            else:
                acc[sy] = acc.get(sy, LaurentPoly.zero()) + f
                acc[y] = acc.get(y, LaurentPoly.zero()) + vmvi * f
            acc[y] = acc.get(y, LaurentPoly.zero()) + vinv * f
        for z, m in mu_of[xp].items():
            if lengths[g.lmul_index(z, s)] < lengths[z]:
                for y2, f2 in cb[z].items():
                    acc[y2] = acc.get(y2, LaurentPoly.zero()) - m * f2
        cb[x] = {y: f for y, f in acc.items() if not f.is_zero}
        mu_of[x] = {
            y: f.coefficient(-1) for y, f in cb[x].items() if f.coefficient(-1)
        }

    P: dict[tuple[WeylElt, WeylElt], tuple[int, ...]] = {}
    mu: dict[tuple[WeylElt, WeylElt], int] = {}
    for w in range(n):
        ew = g.element(w)
        for y, f in cb[w].items():
            gap = lengths[w] - lengths[y]
            coeffs = [0] * (gap // 2 + 1)
            for k, c in f.coeffs().items():
                e = k + gap
                if e < 0 or e % 2:
                    raise AssertionError("canonical-basis exponent out of range")
                coeffs[e // 2] = c
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if coeffs[0] != 1:
                raise AssertionError("KL polynomial without constant term 1")
            if y != w and 2 * (len(coeffs) - 1) > gap - 1:
                raise AssertionError("KL degree bound violated")
            P[(g.element(y), ew)] = tuple(coeffs)
        for z, m in mu_of[w].items():
            mu[(g.element(z), ew)] = m

    kl = KLData(group=g, P=P, mu=mu, _cb=cb, _mu_of=mu_of)
    kl._ensure_top()  # structure constants for all triples, a and gamma
    return kl


# ---------------------------------------------------------------------------
# Structure constants: vectorised induction over a fixed exponent window
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class _TopData:
    a: tuple[int, ...]
    gamma: np.ndarray           # (n, n, n) int64
    topdeg: np.ndarray          # (n, n, n) int16, sentinel -999 for zero h
    topcoef: np.ndarray         # (n, n, n) int64


@dataclass(eq=False)
class _GenTables:
    desc: np.ndarray            # bool (n,): s w < w
    asc_src: np.ndarray
    asc_dst: np.ndarray
    mu_z: np.ndarray
    mu_w: np.ndarray
    mu_val: np.ndarray


def _gen_tables(kl: KLData) -> list[_GenTables]:
    g = kl.group
    n = g.size
    lengths = [g.length_of_index(i) for i in range(n)]
    out = []
    for s in range(1, g.rank + 1):
        desc = np.zeros(n, dtype=bool)
        lm = np.zeros(n, dtype=np.int64)
        for w in range(n):
            sw = g.lmul_index(w, s)
            lm[w] = sw
            desc[w] = lengths[sw] < lengths[w]
        asc_src = np.nonzero(~desc)[0]
        asc_dst = lm[asc_src]
        mu_z, mu_w, mu_val = [], [], []
        for w in asc_src:
            for z, m in kl._mu_of[int(w)].items():
                if desc[z]:
                    mu_z.append(z)
                    mu_w.append(int(w))
                    mu_val.append(m)
        out.append(_GenTables(
            desc=desc,
            asc_src=asc_src,
            asc_dst=asc_dst,
            mu_z=np.array(mu_z, dtype=np.int64),
            mu_w=np.array(mu_w, dtype=np.int64),
            mu_val=np.array(mu_val, dtype=np.int64),
        ))
    return out


def _cs_apply(tab: _GenTables, A: np.ndarray) -> np.ndarray:
    """Coefficient vector of c_s * (sum_w A[w] c_w) in the c-basis."""
    out = np.zeros_like(A)
    d = tab.desc
    # descent rows pick up (v + v^-1)
    out[d, 1:] += A[d, :-1]
    out[d, :-1] += A[d, 1:]
    # ascent rows move to s*w ...
    out[tab.asc_dst] += A[tab.asc_src]
    # ... and feed mu-indexed descents
    if tab.mu_z.size:
        np.add.at(out, tab.mu_z, tab.mu_val[:, None] * A[tab.mu_w])
    return out


def _h_pass(kl: KLData, yi: int) -> np.ndarray:
    """h_{x, y, .} for fixed y, all x, as an (n, n, D) integer array."""
    g = kl.group
    n = g.size
    off = kl.h_offset
    D = 2 * off + 1
    if not hasattr(kl, "_gen_tabs"):
        kl._gen_tabs = _gen_tables(kl)
    tabs = kl._gen_tabs
    lengths = [g.length_of_index(i) for i in range(n)]

    big = np.zeros((n, n, D), dtype=np.int64)
    big[0, yi, off] = 1
    for x in range(1, n):
        s = g.element(x).word[0]
        xp = g.lmul_index(x, s)
        B = _cs_apply(tabs[s - 1], big[xp])
        for z, m in kl._mu_of[xp].items():
            if lengths[g.lmul_index(z, s)] < lengths[z]:
                B -= m * big[z]
        big[x] = B
    if big[:, :, 0].any() or big[:, :, -1].any():
        raise AssertionError("exponent window exceeded in structure constants")
    if np.abs(big).max() >= _GUARD:
        raise AssertionError("structure-constant magnitude guard tripped")
    return big


def _compute_top(kl: KLData) -> _TopData:
    g = kl.group
    n = g.size
    off = kl.h_offset
    D = 2 * off + 1
    topdeg = np.full((n, n, n), -999, dtype=np.int16)
    topcoef = np.zeros((n, n, n), dtype=np.int64)
    exps = np.arange(D)
    for yi in range(n):
        big = kl._h_block_idx(yi) if g.size <= 24 else _h_pass(kl, yi)
        nz = big != 0
        has = nz.any(axis=2)
        idx = np.where(nz, exps[None, None, :], -1).max(axis=2)
        coef = np.take_along_axis(big, np.maximum(idx, 0)[:, :, None], axis=2)[:, :, 0]
        topdeg[:, yi, :] = np.where(has, idx - off, -999).astype(np.int16)
        topcoef[:, yi, :] = np.where(has, coef, 0)

    a = topdeg.max(axis=(0, 1))
    if a[0] != 0:
        raise AssertionError("a(e) != 0: basis convention broken")
    if a[n - 1] != g.nu:
        raise AssertionError("a(w0) != nu: basis convention broken")
    inv = np.array([g.inv_index(i) for i in range(n)])
    if not np.array_equal(a, a[inv]):
        raise AssertionError("a-function not inversion-invariant")

    gamma = np.where(topdeg == a[None, None, :], topcoef, 0)
    return _TopData(
        a=tuple(int(x) for x in a),
        gamma=gamma,
        topdeg=topdeg,
        topcoef=topcoef,
    )


def a_function(kl: KLData) -> tuple[dict[WeylElt, int], np.ndarray]:
    """The a-function on W and the gamma constants (dense index tensor)."""
    top = kl._ensure_top()
    g = kl.group
    return (
        {g.element(i): top.a[i] for i in range(g.size)},
        top.gamma,
    )


# ---------------------------------------------------------------------------
# Cells
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class CellPartition:
    """Left/right/two-sided cells with the a-value per two-sided cell."""

    group: WeylGroup
    left_cells: tuple[frozenset[WeylElt], ...]
    right_cells: tuple[frozenset[WeylElt], ...]
    two_sided_cells: tuple[frozenset[WeylElt], ...]
    a_value: dict[frozenset[WeylElt], int]

    def left_cell_of(self, w: WeylElt) -> frozenset[WeylElt]:
        for c in self.left_cells:
            if w in c:
                return c
        raise KeyError(w)

    def two_sided_cell_of(self, w: WeylElt) -> frozenset[WeylElt]:
        for c in self.two_sided_cells:
            if w in c:
                return c
        raise KeyError(w)

    def a_of(self, w: WeylElt) -> int:
        return self.a_value[self.two_sided_cell_of(w)]


@dataclass(frozen=True)
class NearInvolutionSet:
    """Elements lying in the same left cell as their inverse."""

    members: frozenset[WeylElt]

    def __contains__(self, w: WeylElt) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return len(self.members)


def _left_edges(kl: KLData) -> list[set[int]]:
    g = kl.group
    n = g.size
    lengths = [g.length_of_index(i) for i in range(n)]
    edges: list[set[int]] = [set() for _ in range(n)]
    for y in range(n):
        for s in range(1, g.rank + 1):
            sy = g.lmul_index(y, s)
            if lengths[sy] > lengths[y]:
                edges[y].add(sy)
                for z, m in kl._mu_of[y].items():
                    if lengths[g.lmul_index(z, s)] < lengths[z]:
                        edges[y].add(z)
    return edges


def _sccs(edges: list[set[int]]) -> list[list[int]]:
    # Kosaraju; graphs have at most 120 nodes.
    n = len(edges)
    order: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        stack = [(start, iter(edges[start]))]
        seen[start] = True
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()
    redges: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in edges[u]:
            redges[v].add(u)
    comp = [-1] * n
    ncomp = 0
    for start in reversed(order):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = ncomp
        while stack:
            u = stack.pop()
            for v in redges[u]:
                if comp[v] == -1:
                    comp[v] = ncomp
                    stack.append(v)
        ncomp += 1
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(comp):
        groups.setdefault(c, []).append(i)
    return [sorted(m) for m in sorted(groups.values(), key=min)]


def compute_cells(kl: KLData) -> CellPartition:
    """Cells from the full preorder closure; validates the a-function is
    constant on each two-sided cell."""
    g = kl.group
    n = g.size
    left = _left_edges(kl)
    right: list[set[int]] = [set() for _ in range(n)]
    for y in range(n):
        yi = g.inv_index(y)
        for z in left[yi]:
            right[y].add(g.inv_index(z))
    both = [left[i] | right[i] for i in range(n)]

    def to_sets(comps: list[list[int]]) -> tuple[frozenset[WeylElt], ...]:
        return tuple(frozenset(g.element(i) for i in comp) for comp in comps)

    left_cells = to_sets(_sccs(left))
    right_cells = to_sets(_sccs(right))
    two_sided = to_sets(_sccs(both))

    inv_left = {frozenset(g.inverse(w) for w in c) for c in left_cells}
    if inv_left != set(right_cells):
        raise AssertionError("right cells are not the inverses of left cells")
    for lc in left_cells:
        if not any(lc <= tc for tc in two_sided):
            raise AssertionError("a left cell crosses two-sided cells")

    a = kl.a_values
    a_value = {}
    for tc in two_sided:
        vals = {a[g.index(w)] for w in tc}
        if len(vals) != 1:
            raise AssertionError("a-function not constant on a two-sided cell")
        a_value[tc] = vals.pop()
    return CellPartition(
        group=g,
        left_cells=left_cells,
        right_cells=right_cells,
        two_sided_cells=two_sided,
        a_value=a_value,
    )


def near_involutions(cells: CellPartition) -> NearInvolutionSet:
    g = cells.group
    members = set()
    for c in cells.left_cells:
        for w in c:
            if g.inverse(w) in c:
                members.add(w)
    return NearInvolutionSet(frozenset(members))


# ---------------------------------------------------------------------------
# The asymptotic ring
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class JRing:
    """Ring on basis {t_w : w in W} with t_x t_y = sum_z gamma[x,y,z] t_z."""

    group: WeylGroup
    gamma: np.ndarray

    def product(self, x: WeylElt, y: WeylElt) -> dict[WeylElt, int]:
        g = self.group
        row = self.gamma[g.index(x), g.index(y)]
        return {g.element(z): int(c) for z, c in enumerate(row) if c}

    def gamma_of(self, x: WeylElt, y: WeylElt, z: WeylElt) -> int:
        g = self.group
        return int(self.gamma[g.index(x), g.index(y), g.index(z)])


def j_ring(kl: KLData, cells: CellPartition | None = None) -> JRing:
    """Build the asymptotic ring; verifies gamma support and associativity.

    Support is checked first (gamma vanishes unless x, y, z share a two-sided
    cell), which makes the exhaustive associativity check decompose into
    blocks, one per two-sided cell.
    """
    g = kl.group
    gamma = kl.gamma_tensor()
    if cells is None:
        cells = compute_cells(kl)

    cell_id = np.zeros(g.size, dtype=np.int64)
    for k, tc in enumerate(cells.two_sided_cells):
        for w in tc:
            cell_id[g.index(w)] = k
    xs, ys, zs = np.nonzero(gamma)
    if not (np.array_equal(cell_id[xs], cell_id[ys])
            and np.array_equal(cell_id[xs], cell_id[zs])):
        raise AssociativityFailure("gamma supported outside two-sided cells")
    a = np.array(kl.a_values)
    if not (np.array_equal(a[xs], a[ys]) and np.array_equal(a[xs], a[zs])):
        raise AssociativityFailure("gamma support mixes a-values")

    gmax = int(np.abs(gamma).max()) if gamma.size else 0
    for tc in cells.two_sided_cells:
        idx = sorted(g.index(w) for w in tc)
        sub = gamma[np.ix_(idx, idx, idx)].astype(np.float64)
        if len(idx) * max(gmax, 1) ** 2 >= _GUARD:
            raise AssertionError("gamma magnitude guard tripped")
        lhs = np.tensordot(sub, sub, axes=(2, 0))
        rhs = np.tensordot(sub, sub, axes=(2, 1)).transpose(2, 0, 1, 3)
        if not np.array_equal(lhs, rhs):
            raise AssociativityFailure(
                f"associativity fails on the cell of {min(tc, key=g.index)}"
            )
    return JRing(group=g, gamma=gamma)


def is_central(j: JRing, z: Mapping[WeylElt, int]) -> bool:
    """Whether sum_w z[w] t_w commutes with every basis element."""
    g = j.group
    za = np.zeros(g.size, dtype=np.float64)
    for w, c in z.items():
        za[g.index(w)] = c
    G = j.gamma.astype(np.float64)
    left = np.einsum("y,yxw->xw", za, G)
    right = np.einsum("y,xyw->xw", za, G)
    return bool(np.array_equal(left, right))

"""Characters of W, Hecke modules E(u), and leading trace coefficients.

For each irreducible W-module E we realise a Hecke module E(u) over
Z[v, v^-1] (u = v^2, quadratic relation (T_s - u)(T_s + 1) = 0):

* type A: the left-cell modules of the canonical basis, one cell per
  two-sided cell; these are irreducible in type A and the action matrices
  come straight from the mu-values (T_s = v * (c_s action) - 1);
* dihedral B2/G2: the four one-dimensional modules and explicit 2x2
  deformations of the rotation representations.

Every module is verified against the braid and quadratic relations and its
v = 1 character is matched against the ordinary character table, which is
itself built from scratch (Murnaghan-Nakayama over cycle types for the
symmetric groups, closed dihedral forms for B2/G2, with row orthogonality
checked).

The leading data extracts, per module, the unique a_E >= 0 such that
v^(-l(w)) tr(T_w, E(u)) has valuation >= -a_E for all w, together with the
integers c_{w,E} reading off the coefficient of v^(-a_E) (sign (-1)^l(w)
stripped), and the virtual characters alpha_w = sum_E c_{w,E} E.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coxeter import WeylElt, WeylGroup
from .klcells import KLData, CellPartition, compute_cells
from .poly import LaurentPoly


class ConstructionIncomplete(AssertionError):
    """A Hecke module could not be matched to an irreducible W-character."""


class LeadingTermMismatch(AssertionError):
    """Trace valuations are inconsistent with a single a_E."""


# ---------------------------------------------------------------------------
# Conjugacy classes and the character table of W
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjClass:
    rep: WeylElt
    members: tuple[WeylElt, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class WCharTable:
    """Integer character table with stable row labels.

    Rows are indexed by ``labels``; ``values[r][c]`` is the character of row
    r at class c.  The first row is always the trivial character.
    """

    group: WeylGroup
    classes: tuple[ConjClass, ...]
    labels: tuple[str, ...]
    values: tuple[tuple[int, ...], ...]
    _class_of: tuple[int, ...]

    def class_index_of(self, w: WeylElt) -> int:
        return self._class_of[self.group.index(w)]

    def row(self, label: str) -> tuple[int, ...]:
        return self.values[self.labels.index(label)]

    def value(self, label: str, w: WeylElt) -> int:
        return self.row(label)[self.class_index_of(w)]

    def dim(self, label: str) -> int:
        return self.row(label)[self.class_index_of(self.group.identity)]

    @property
    def trivial_label(self) -> str:
        return self.labels[0]

    @property
    def sign_label(self) -> str:
        for lab, row in zip(self.labels, self.values):
            if all(
                v == (-1) ** c.rep.length for v, c in zip(row, self.classes)
            ):
                return lab
        raise AssertionError("no sign character found")


def _conjugacy_classes(g: WeylGroup) -> tuple[tuple[ConjClass, ...], tuple[int, ...]]:
    n = g.size
    seen = [False] * n
    classes = []
    class_of = [0] * n
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            ex = g.element(x)
            for i in range(1, g.rank + 1):
                s = g.generator(i)
                y = g.index(g.mult(g.mult(s, ex), s))
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        members = tuple(g.element(i) for i in sorted(orbit))
        classes.append(members)
        for i in orbit:
            seen[i] = True
    classes.sort(key=lambda ms: (ms[0].length, ms[0].word))
    out = []
    for ci, members in enumerate(classes):
        out.append(ConjClass(rep=members[0], members=members))
        for w in members:
            class_of[g.index(w)] = ci
    return tuple(out), tuple(class_of)


# -- symmetric groups: Murnaghan-Nakayama over cycle types

def _perm_of(g: WeylGroup, w: WeylElt) -> tuple[int, ...]:
    n = g.rank + 1
    perm = list(range(n))
    for i in w.word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        c = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))


def _partitions(n: int) -> list[tuple[int, ...]]:
    def rec(rem: int, mx: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, mx), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest
    return sorted(rec(n, n), reverse=True)


@lru_cache(maxsize=None)
def _mn_char(lam: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama via beta-numbers."""
    if not alpha:
        return 1 if not lam else 0
    if sum(lam) != sum(alpha):
        raise ValueError("partition sizes differ")
    k = alpha[0]
    rest = alpha[1:]
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(c - (m - 1 - i) for i, c in enumerate(newbeta))
        while newlam and newlam[-1] == 0:
            newlam = newlam[:-1]
        total += (-1) ** height * _mn_char(newlam, rest)
    return total


def _symmetric_table(g: WeylGroup) -> WCharTable:
    classes, class_of = _conjugacy_classes(g)
    types = [_cycle_type(_perm_of(g, c.rep)) for c in classes]
    labels = tuple("".join(str(p) for p in lam) for lam in _partitions(g.rank + 1))
    values = tuple(
        tuple(_mn_char(lam, alpha) for alpha in types)
        for lam in _partitions(g.rank + 1)
    )
    return WCharTable(g, classes, labels, values, class_of)


# -- dihedral groups B2, G2

_DIHEDRAL_COS = {
    4: {0: 2, 1: 0, 2: -2, 3: 0},
    6: {0: 2, 1: 1, 2: -1, 3: -2, 4: -1, 5: 1},
}


def _dihedral_table(g: WeylGroup) -> WCharTable:
    m = g.nu  # order 2m, rotations (s1 s2)^k
    classes, class_of = _conjugacy_classes(g)
    s1, s2 = g.generator(1), g.generator(2)

    def tag(c: ConjClass):
        # rotation classes tagged by k (length 2k); reflections by generator
        if c.rep.length % 2 == 0:
            return ("rot", c.rep.length // 2)
        return ("refl", 1 if s1 in c.members else 2)

    tags = [tag(c) for c in classes]
    labels = ["triv", "sgn1", "sgn2", "sign"]
    rows = []
    for lab in labels:
        e1 = -1 if lab in ("sgn1", "sign") else 1
        e2 = -1 if lab in ("sgn2", "sign") else 1
        row = []
        for t in tags:
            if t[0] == "rot":
                row.append((e1 * e2) ** t[1])
            else:
                row.append(e1 if t[1] == 1 else e2)
        rows.append(tuple(row))
    ctab = _DIHEDRAL_COS[m]
    for k in range(1, m // 2):
        lab = "refl" if k == 1 else f"refl{k}"
        labels.append(lab)
        rows.append(tuple(
            ctab[(t[1] * k) % m] if t[0] == "rot" else 0 for t in tags
        ))
    return WCharTable(g, classes, tuple(labels), tuple(rows), class_of)


def w_character_table(g: WeylGroup) -> WCharTable:
    """Complete rational character table with stable labels."""
    if g.type.family == "A":
        table = _symmetric_table(g)
    else:
        table = _dihedral_table(g)
    _check_orthogonality(table)
    return table


def _check_orthogonality(table: WCharTable) -> None:
    n = table.group.size
    k = len(table.classes)
    if len(table.labels) != k:
        raise AssertionError("character count differs from class count")
    sizes = [c.size for c in table.classes]
    for i, ri in enumerate(table.values):
        for j, rj in enumerate(table.values):
            dot = sum(s * a * b for s, a, b in zip(sizes, ri, rj))
            if dot != (n if i == j else 0):
                raise AssertionError("character table fails row orthogonality")
    if any(v != 1 for v in table.values[0]):
        raise AssertionError("first character table row is not trivial")
    table.sign_label  # raises if absent


# ---------------------------------------------------------------------------
# Hecke modules
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class HModule:
    """A Hecke module E(u): one matrix over Z[v, v^-1] per generator."""

    label: str
    dim: int
    gen_matrices: tuple[tuple[tuple[LaurentPoly, ...], ...], ...]


def _lp_matmul(A, B):
    d = len(A)
    return tuple(
        tuple(
            sum((A[i][k] * B[k][j] for k in range(d)), LaurentPoly.zero())
            for j in range(d)
        )
        for i in range(d)
    )


def _lp_eye(d):
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def _lp_is_zero(A) -> bool:
    return all(x.is_zero for row in A for x in row)


def _lp_sub(A, B):
    return tuple(
        tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def _lp_scale(A, f: LaurentPoly):
    return tuple(tuple(f * a for a in row) for row in A)


def _coxeter_m(g: WeylGroup, i: int, j: int) -> int:
    cartan = g.type.cartan_matrix()
    prod = cartan[i - 1][j - 1] * cartan[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def _verify_module(g: WeylGroup, mats) -> None:
    u = LaurentPoly.gen(2)
    d = len(mats[0])
    eye = _lp_eye(d)
    for T in mats:
        # (T - u)(T + 1) = T^2 + (1 - u) T - u
        lhs = _lp_matmul(T, T)
        lhs = _lp_sub(lhs, _lp_scale(T, u - LaurentPoly.one()))
        lhs = _lp_sub(lhs, _lp_scale(eye, u))
        if not _lp_is_zero(lhs):
            raise ConstructionIncomplete("quadratic relation fails")
    for i in range(1, g.rank + 1):
        for j in range(i + 1, g.rank + 1):
            m = _coxeter_m(g, i, j)
            left = right = eye
            for k in range(m):
                left = _lp_matmul(left, mats[(i, j)[k % 2] - 1])
                right = _lp_matmul(right, mats[(j, i)[k % 2] - 1])
            if not _lp_is_zero(_lp_sub(left, right)):
                raise ConstructionIncomplete(f"braid relation fails for ({i},{j})")


def _match_label(g: WeylGroup, table: WCharTable, mats, dim: int) -> str:
    """Identify the v=1 character of a module among the table rows."""
    traces = []
    for c in table.classes:
        m = _lp_eye(dim)
        for i in c.rep.word:
            m = _lp_matmul(m, mats[i - 1])
        traces.append(sum(m[k][k].at_one() for k in range(dim)))
    for lab, row in zip(table.labels, table.values):
        if tuple(traces) == row:
            return lab
    raise ConstructionIncomplete(
        f"no irreducible W-character matches v=1 trace {traces}"
    )


def _cell_module_mats(g: WeylGroup, kl: KLData, cell: list[int]):
    """c_s action matrices on a left-cell basis, then T_s = v * A_s - 1."""
    lengths = [g.length_of_index(i) for i in range(g.size)]
    pos = {w: k for k, w in enumerate(cell)}
    d = len(cell)
    v = LaurentPoly.gen(1)
    vpvi = LaurentPoly.gen(1) + LaurentPoly.gen(-1)
    mats = []
    for s in range(1, g.rank + 1):
        A = [[LaurentPoly.zero() for _ in range(d)] for _ in range(d)]
        for w in cell:
            col = pos[w]
            sw = g.lmul_index(w, s)
            if lengths[sw] < lengths[w]:
                A[col][col] = vpvi
            else:
                if sw in pos:
                    A[pos[sw]][col] = LaurentPoly.one()
                for z, m in kl._mu_of[w].items():
                    if z in pos and lengths[g.lmul_index(z, s)] < lengths[z]:
                        A[pos[z]][col] = LaurentPoly.from_int(m)
        T = tuple(
            tuple(
                v * A[i][j] - (LaurentPoly.one() if i == j else LaurentPoly.zero())
                for j in range(d)
            )
            for i in range(d)
        )
        mats.append(T)
    return tuple(mats)


def _dihedral_mats(g: WeylGroup):
    """Explicit modules for B2/G2: label -> generator matrices."""
    m = g.nu
    u = LaurentPoly.gen(2)
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    mone = -one
    out = {
        "triv": (((u,),), ((u,),)),
        "sign": (((mone,),), ((mone,),)),
        "sgn1": (((mone,),), ((u,),)),
        "sgn2": (((u,),), ((mone,),)),
    }
    # 2-dimensional deformations: T1 upper, T2 lower triangular, with
    # T2[1][0] = u * (2 + 2cos(2 pi k / m)), an integer for m = 4, 6.
    for k in range(1, m // 2):
        csq = 2 + _DIHEDRAL_COS[m][k % m]
        lab = "refl" if k == 1 else f"refl{k}"
        T1 = ((mone, one), (zero, u))
        T2 = ((u, zero), (csq * u, mone))
        out[lab] = (T1, T2)
    return out


def build_hecke_modules(
    g: WeylGroup, kl: KLData, cells: CellPartition | None = None
) -> tuple[HModule, ...]:
    """One verified H-module per irreducible W-character."""
    table = w_character_table(g)
    modules: dict[str, HModule] = {}
    if g.type.family == "A":
        if cells is None:
            cells = compute_cells(kl)
        for tc in cells.two_sided_cells:
            idx = sorted(g.index(w) for w in tc)
            left = min(
                (c for c in cells.left_cells if c <= tc),
                key=lambda c: min(g.index(w) for w in c),
            )
            basis = sorted(g.index(w) for w in left)
            mats = _cell_module_mats(g, kl, basis)
            _verify_module(g, mats)
            lab = _match_label(g, table, mats, len(basis))
            if lab in modules:
                raise ConstructionIncomplete(f"two cells matched label {lab}")
            modules[lab] = HModule(lab, len(basis), mats)
    else:
        for lab, mats in _dihedral_mats(g).items():
            _verify_module(g, mats)
            found = _match_label(g, table, mats, len(mats[0]))
            if found != lab:
                raise ConstructionIncomplete(
                    f"dihedral module {lab} matched character {found}"
                )
            modules[lab] = HModule(lab, len(mats[0]), mats)
    if set(modules) != set(table.labels):
        missing = set(table.labels) - set(modules)
        raise ConstructionIncomplete(f"missing modules for {sorted(missing)}")
    if sum(m.dim ** 2 for m in modules.values()) != g.size:
        raise ConstructionIncomplete("sum of squared dimensions != |W|")
    return tuple(modules[lab] for lab in table.labels)


# ---------------------------------------------------------------------------
# Leading trace data
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class LeadingData:
    """a_E, the integers c_{w,E}, and the virtual characters alpha_w."""

    group: WeylGroup
    labels: tuple[str, ...]
    a_E: dict[str, int]
    c: dict[tuple[WeylElt, str], int]
    alpha: dict[WeylElt, dict[str, int]]

    def c_of(self, w: WeylElt, label: str) -> int:
        return self.c.get((w, label), 0)

    def alpha_support(self) -> frozenset[WeylElt]:
        return frozenset(w for w, row in self.alpha.items() if row)


def trace_table(g: WeylGroup, mod: HModule) -> np.ndarray:
    """tr(T_w, E(u)) for all w: an (n, D) integer array over exponents 0..2nu of v."""
    n = g.size
    D = 2 * g.nu + 1
    d = mod.dim
    gens = np.zeros((g.rank, d, d, D), dtype=np.int64)
    for i, T in enumerate(mod.gen_matrices):
        for r in range(d):
            for cidx in range(d):
                for e, cf in T[r][cidx].coeffs().items():
                    if not 0 <= e < D:
                        raise AssertionError("generator matrix exponent out of range")
                    gens[i, r, cidx, e] = cf
    mats = np.zeros((n, d, d, D), dtype=np.int64)
    mats[0, np.arange(d), np.arange(d), 0] = 1
    for x in range(1, n):
        i = g.element(x).word[-1]
        xp = g.rmul_index(x, i)
        A, B = mats[xp], gens[i - 1]
        out = np.zeros((d, d, 2 * D - 1), dtype=np.int64)
        for e in range(D):
            coef = A[:, :, e]
            if coef.any():
                out[:, :, e:e + D] += np.einsum("ik,kjb->ijb", coef, B)
        if out[:, :, D:].any():
            raise AssertionError("trace exponent window exceeded")
        mats[x] = out[:, :, :D]
    if np.abs(mats).max() >= 2 ** 50:
        raise AssertionError("trace magnitude guard tripped")
    return mats.trace(axis1=1, axis2=2)


def leading_data(g: WeylGroup, modules: tuple[HModule, ...]) -> LeadingData:
    labels = tuple(m.label for m in modules)
    a_E: dict[str, int] = {}
    c: dict[tuple[WeylElt, str], int] = {}
    lengths = [g.length_of_index(i) for i in range(g.size)]
    for mod in modules:
        traces = trace_table(g, mod)
        a = None
        for w in range(g.size):
            row = traces[w]
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            val = int(nz[0]) - lengths[w]  # valuation of v^(-l(w)) tr(T_w)
            a = val if a is None else min(a, val)
        if a is None:
            raise LeadingTermMismatch(f"module {mod.label} has zero traces")
        a = -a
        if a < 0:
            raise LeadingTermMismatch(
                f"module {mod.label}: negative a_E = {a}"
            )
        a_E[mod.label] = a
        any_c = False
        for w in range(g.size):
            e = lengths[w] - a
            cwe = int(traces[w][e]) if 0 <= e < traces.shape[1] else 0
            cwe *= (-1) ** lengths[w]
            if cwe:
                c[(g.element(w), mod.label)] = cwe
                any_c = True
        if not any_c:
            raise LeadingTermMismatch(
                f"module {mod.label}: c_{{w,E}} vanishes identically"
            )
    alpha: dict[WeylElt, dict[str, int]] = {}
    for w in range(g.size):
        ew = g.element(w)
        row = {lab: c[(ew, lab)] for lab in labels if (ew, lab) in c}
        alpha[ew] = row
    return LeadingData(group=g, labels=labels, a_E=a_E, c=c, alpha=alpha)

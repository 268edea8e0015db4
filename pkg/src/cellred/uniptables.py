"""Curated data tables: unipotent degrees, R-multiplicities, weight-template
definitions, reduction decompositions and the duality involution.

Each supported type ships as one human-auditable JSON file under
``cellred/data`` (override the directory with ``CELLRED_DATA_DIR``).  Entries
carry their source-section annotations as opaque ``ref`` strings so the files
can be diffed against the text they transcribe.  The loader re-verifies the
internal consistency of every file on each load and aborts with the offending
location on any violation; transcription is the dominant error risk here.

A4 is special: no tables were ever published for it, so its file carries null
slots and the R-multiplicity table is *derived* from computed leading
coefficients (see :func:`derived_r_alpha`), flagged as such.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .coxeter import WeylElt, WeylGroup, generate
from .poly import IntPoly
from .rootdata import CartanType, Weight


class DataIntegrityFailure(ValueError):
    """A shipped table violates one of its declared invariants."""


class UnknownLabel(KeyError):
    """Unipotent character label not present in the tables."""


@dataclass(frozen=True)
class UnipotentChar:
    label: str
    degree: IntPoly
    ref: str


@dataclass(frozen=True)
class WeightTemplate:
    """A dominant weight whose coordinates are affine in p: c0 + c1*p."""

    coords: tuple[tuple[int, int], ...]

    def instantiate(self, p: int) -> Weight:
        return Weight(tuple(c0 + c1 * p for c0, c1 in self.coords))

    def __str__(self):
        def coord(c0, c1):
            if c1 == 0:
                return str(c0)
            base = "p" if c1 == 1 else f"{c1}p"
            if c0 == 0:
                return base
            return f"{base}{'+' if c0 > 0 else '-'}{abs(c0)}"
        return "(" + ",".join(coord(*c) for c in self.coords) + ")"


@dataclass(eq=False)
class TypeTables:
    """All shipped tables for one type; slots are None where no data exists."""

    type: CartanType
    group: WeylGroup
    min_prime: int
    proximity_bound: int
    unipotent: tuple[UnipotentChar, ...] | None
    r_alpha: dict[str, dict[str, int]] | None
    m_w: dict[str, tuple[tuple[int, WeightTemplate], ...]] | None
    delta: dict[str, IntPoly] | None
    decomp: dict[str, dict[str, int]] | None
    duality: dict[str, str] | None
    refs: dict[str, str]
    derived: bool = False

    @property
    def has_m_w_data(self) -> bool:
        return self.m_w is not None

    @property
    def j_words(self) -> tuple[str, ...] | None:
        """The shipped near-involution words (keys of the R table)."""
        if self.r_alpha is None:
            return None
        return tuple(self.r_alpha)

    def element(self, word: str) -> WeylElt:
        return self.group.parse_word(word)

    def j_elements(self) -> frozenset[WeylElt] | None:
        if self.r_alpha is None:
            return None
        return frozenset(self.element(w) for w in self.r_alpha)

    def labels(self) -> tuple[str, ...] | None:
        if self.unipotent is None:
            return None
        return tuple(u.label for u in self.unipotent)

    def degree_of(self, label: str) -> IntPoly:
        for u in self.unipotent or ():
            if u.label == label:
                return u.degree
        raise UnknownLabel(label)


def _data_dir() -> Path:
    env = os.environ.get("CELLRED_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def _fail(ct: CartanType, where: str, msg: str, refs: dict | None = None) -> DataIntegrityFailure:
    tag = f" (ref {refs[where]})" if refs and where in refs else ""
    return DataIntegrityFailure(f"{ct.name} tables, {where}{tag}: {msg}")


@lru_cache(maxsize=None)
def _load(ct: CartanType, data_dir: str) -> TypeTables:
    path = Path(data_dir) / f"{ct.name}.json"
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if raw.get("type") != ct.name:
        raise _fail(ct, "header", f"file declares type {raw.get('type')!r}")
    g = generate(ct)
    refs = dict(raw.get("refs", {}))

    min_prime = int(raw["min_prime"])
    bound = int(raw.get("proximity_bound", 4))

    if raw.get("unipotent") is None:
        return TypeTables(
            type=ct, group=g, min_prime=min_prime, proximity_bound=bound,
            unipotent=None, r_alpha=None, m_w=None, delta=None,
            decomp=None, duality=None, refs=refs,
        )

    unip = tuple(
        UnipotentChar(u["label"], IntPoly.parse(u["degree"]), u.get("ref", ""))
        for u in raw["unipotent"]
    )
    labels = [u.label for u in unip]
    if len(set(labels)) != len(labels):
        raise _fail(ct, "unipotent", "duplicate labels", refs)
    by_label = {u.label: u for u in unip}
    if "1" not in by_label or by_label["1"].degree != IntPoly.one():
        raise _fail(ct, "unipotent", "degree of '1' is not 1", refs)
    if "S" not in by_label or by_label["S"].degree != IntPoly.monomial(g.nu):
        raise _fail(ct, "unipotent", f"degree of 'S' is not t^{g.nu}", refs)
    for u in unip:
        if u.degree.leading_coefficient() <= 0:
            raise _fail(ct, "unipotent", f"{u.label}: non-positive leading coefficient", refs)

    r_alpha = {w: dict(row) for w, row in raw["r_alpha"].items()}
    seen_elements = set()
    for w, row in r_alpha.items():
        elt = g.parse_word(w)
        if elt in seen_elements:
            raise _fail(ct, "r_alpha", f"duplicate element for word {w!r}", refs)
        seen_elements.add(elt)
        if not row:
            raise _fail(ct, "r_alpha", f"empty row for {w!r}", refs)
        for lab, mult in row.items():
            if lab not in by_label:
                raise _fail(ct, "r_alpha", f"unknown label {lab!r} in row {w!r}", refs)
            if not (isinstance(mult, int) and mult > 0):
                raise _fail(ct, "r_alpha", f"bad multiplicity {mult!r} at ({w},{lab})", refs)
    covered = {lab for row in r_alpha.values() for lab in row}
    if covered != set(labels):
        raise _fail(ct, "r_alpha", f"labels never used: {sorted(set(labels) - covered)}", refs)

    m_w = {}
    for w, terms in raw["m_w"].items():
        parsed = []
        for term in terms:
            coef = int(term["coef"])
            if coef not in (1, -1):
                raise _fail(ct, "m_w", f"coefficient {coef} at {w!r} is not +-1", refs)
            tmpl = WeightTemplate(tuple((int(a), int(b)) for a, b in term["template"]))
            if len(tmpl.coords) != ct.rank:
                raise _fail(ct, "m_w", f"template rank mismatch at {w!r}", refs)
            if any(c1 not in (0, 1) for _, c1 in tmpl.coords):
                raise _fail(ct, "m_w", f"template p-coefficient outside {{0,1}} at {w!r}", refs)
            if not tmpl.instantiate(min_prime).is_restricted(min_prime):
                raise _fail(
                    ct, "m_w",
                    f"template {tmpl} not restricted at the minimum prime {min_prime}",
                    refs,
                )
            parsed.append((coef, tmpl))
        m_w[w] = tuple(parsed)

    delta = {w: IntPoly.parse(s) for w, s in raw["delta"].items()}
    if not (set(m_w) == set(r_alpha) == set(delta)):
        raise _fail(ct, "m_w/delta", "row keys differ from the r_alpha keys", refs)

    decomp = {lab: dict(row) for lab, row in raw["decomp"].items()}
    if set(decomp) != set(labels):
        raise _fail(ct, "decomp", "rows do not match the unipotent labels", refs)
    transpose: dict[str, dict[str, int]] = {lab: {} for lab in labels}
    for w, row in r_alpha.items():
        for lab, mult in row.items():
            transpose[lab][w] = mult
    if decomp != transpose:
        raise _fail(ct, "decomp", "table is not the transpose of r_alpha", refs)

    duality = dict(raw["duality"])
    if set(duality) != set(r_alpha):
        raise _fail(ct, "duality", "involution not defined on exactly the R rows", refs)
    for w, wt in duality.items():
        if duality.get(wt) != w:
            raise _fail(ct, "duality", f"not involutive at {w!r}", refs)

    return TypeTables(
        type=ct, group=g, min_prime=min_prime, proximity_bound=bound,
        unipotent=unip, r_alpha=r_alpha, m_w=m_w, delta=delta,
        decomp=decomp, duality=duality, refs=refs,
    )


def load_tables(ct: CartanType) -> TypeTables:
    """Load and verify the shipped tables for a type (A4: partial)."""
    return _load(ct, str(_data_dir()))


def r_alpha_multiplicity(tables: TypeTables, label: str, w: WeylElt | str) -> int:
    """The multiplicity of the labelled character in the row of w (0 if absent)."""
    if tables.r_alpha is None:
        raise DataIntegrityFailure(f"{tables.type.name} has no R table")
    known = {lab for row in tables.r_alpha.values() for lab in row}
    if label not in known:
        raise UnknownLabel(label)
    if isinstance(w, str):
        w = tables.element(w)
    for word, row in tables.r_alpha.items():
        if tables.element(word) == w:
            return row.get(label, 0)
    return 0


def derived_r_alpha(
    g: WeylGroup,
    labels: tuple[str, ...],
    c: dict[tuple[WeylElt, str], int],
    j_members: frozenset[WeylElt],
) -> dict[str, dict[str, int]]:
    """R rows generated from leading coefficients (type A without shipped data).

    Rows are keyed by canonical words; multiplicities must come out
    non-negative, which is checked.
    """
    rows: dict[str, dict[str, int]] = {}
    for w in sorted(j_members, key=g.index):
        row = {}
        for lab in labels:
            mult = c.get((w, lab), 0)
            if mult < 0:
                raise DataIntegrityFailure(
                    f"negative derived multiplicity at ({w},{lab})"
                )
            if mult:
                row[lab] = mult
        if not row:
            raise DataIntegrityFailure(f"empty derived row at {w}")
        rows[str(w)] = row
    return rows

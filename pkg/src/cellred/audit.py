"""The verification engine: every desk-checkable consequence, one report.

Each supported type gets a fixed sequence of checks; a check never raises on
a mathematical discrepancy, it reports it -- the report is the product.  The
``paper_ref`` field carries the opaque section label each check audits, so a
reader can line the report up against the transcribed tables.

Check ids and what they verify:

* ``bookkeeping``  -- the degree of every unipotent character equals the
  R-multiplicity-weighted sum of the template dimension polynomials, as an
  exact polynomial identity (plus a redundant sample at small primes).
* ``duality``      -- the reversal involution search succeeds, matches the
  shipped pairing, satisfies descent complementation, and its signs are
  recorded (a minus sign would be a finding, not a check failure).
* ``a_values``     -- lowest degree of each dimension polynomial equals the
  a-function on the element's two-sided cell, and is constant there.
* ``centrality``   -- for every unipotent character, the R-multiplicity
  combination of asymptotic-ring basis elements is central (A4 included,
  with derived multiplicities).
* ``j_criterion``  -- near involutions from cells, the support of the
  leading virtual characters, and the shipped lists all agree.
* ``proximity``    -- every weight template sits within the per-type bound
  of (p-1) times the descent-set indicator weight.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import heckechar, klcells, uniptables, weylmod
from .coxeter import WeylGroup, generate
from .poly import IntPoly
from .rootdata import ALL_TYPES, CartanType, build_root_system

_CHECK_ORDER = (
    "bookkeeping", "duality", "a_values", "centrality", "j_criterion", "proximity",
)

_REFS = {
    "bookkeeping": "2.3(a)+2.2",
    "duality": "2.3(ii)+2.4",
    "a_values": "2.3(iii)",
    "centrality": "2.6",
    "j_criterion": "1.2+1.3",
    "proximity": "2.3(i)+2.1",
}

_SAMPLE_PRIMES = (5, 7, 11, 13)


@dataclass(frozen=True)
class CheckResult:
    id: str
    paper_ref: str
    status: str  # pass | fail | skipped
    details: str
    artifacts: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "details": self.details,
        }
        if self.artifacts is not None:
            out["artifacts"] = self.artifacts
        return out


_SCOPE_NOTES = (
    "checks run over prime fields only; prime-power base fields are out of scope",
)


@dataclass(frozen=True)
class AuditReport:
    type_name: str
    checks: tuple[CheckResult, ...]
    notes: tuple[str, ...] = _SCOPE_NOTES

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "type": self.type_name,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "AuditReport":
        return cls(
            type_name=raw["type"],
            checks=tuple(
                CheckResult(
                    id=c["id"],
                    paper_ref=c["paper_ref"],
                    status=c["status"],
                    details=c["details"],
                    artifacts=c.get("artifacts"),
                )
                for c in raw["checks"]
            ),
            notes=tuple(raw.get("notes", ())),
        )


@dataclass(eq=False)
class TypeContext:
    """Everything the checks need for one type, built once and shared."""

    ct: CartanType
    group: WeylGroup
    tables: uniptables.TypeTables
    kl: klcells.KLData
    cells: klcells.CellPartition
    jset: klcells.NearInvolutionSet
    jring: klcells.JRing
    chartable: heckechar.WCharTable
    leading: heckechar.LeadingData
    deltas: dict[str, weylmod.DeltaPoly] | None
    unip_rows: dict[str, dict[str, int]]  # label -> {word: multiplicity}
    derived_rows: bool = False


@lru_cache(maxsize=None)
def get_context(ct: CartanType) -> TypeContext:
    g = generate(ct)
    build_root_system(ct)
    tables = uniptables.load_tables(ct)
    kl = klcells.compute_kl(g)
    cells = klcells.compute_cells(kl)
    jset = klcells.near_involutions(cells)
    jring = klcells.j_ring(kl, cells)
    chartable = heckechar.w_character_table(g)
    modules = heckechar.build_hecke_modules(g, kl, cells)
    leading = heckechar.leading_data(g, modules)

    if tables.decomp is not None:
        unip_rows = tables.decomp
        derived = False
        deltas = weylmod.delta_table(ct)
    else:
        r_rows = uniptables.derived_r_alpha(
            g, leading.labels, leading.c, jset.members
        )
        unip_rows = {}
        for word, row in r_rows.items():
            for lab, mult in row.items():
                unip_rows.setdefault(lab, {})[word] = mult
        derived = True
        deltas = None
    return TypeContext(
        ct=ct, group=g, tables=tables, kl=kl, cells=cells, jset=jset,
        jring=jring, chartable=chartable, leading=leading, deltas=deltas,
        unip_rows=unip_rows, derived_rows=derived,
    )


def _skip(check_id: str, reason: str) -> CheckResult:
    return CheckResult(check_id, _REFS[check_id], "skipped", reason)


_NO_DATA = "no transcribed 2.1 tables for this type"


def check_bookkeeping(ctx: TypeContext) -> CheckResult:
    if ctx.deltas is None:
        return _skip("bookkeeping", _NO_DATA)
    failures = []
    total = 0
    for u in ctx.tables.unipotent:
        total += 1
        combo = IntPoly.zero()
        for word, mult in ctx.unip_rows[u.label].items():
            combo = combo + mult * ctx.deltas[word].pi
        if combo != u.degree:
            failures.append(
                f"{u.label}: sum gives {combo.render()}, degree is {u.degree.render()}"
            )
            continue
        for p in _SAMPLE_PRIMES:
            if combo(p) != u.degree(p):
                failures.append(f"{u.label}: sample mismatch at p={p}")
    if failures:
        return CheckResult(
            "bookkeeping", _REFS["bookkeeping"], "fail", "; ".join(failures)
        )
    return CheckResult(
        "bookkeeping", _REFS["bookkeeping"], "pass",
        f"{total}/{total} unipotent characters",
    )


def check_duality(ctx: TypeContext) -> CheckResult:
    if ctx.deltas is None:
        return _skip("duality", _NO_DATA)
    res = weylmod.find_duality(ctx.ct, ctx.deltas)
    problems = list(res.problems)
    g = ctx.group
    full = frozenset(range(1, g.rank + 1))
    computed = {w: partner for w, (partner, _) in res.pairs.items()}
    if computed != ctx.tables.duality:
        problems.append("computed involution differs from the shipped table")
    for w, partner in ctx.tables.duality.items():
        cl_w = g.left_descent_set(ctx.tables.element(w))
        cl_p = g.left_descent_set(ctx.tables.element(partner))
        if cl_p != full - cl_w:
            problems.append(f"descent complementation fails at {w} <-> {partner}")
    signs = {w: ("+" if s > 0 else "-") for w, (_, s) in sorted(res.pairs.items())}
    if problems:
        return CheckResult(
            "duality", _REFS["duality"], "fail", "; ".join(problems),
            artifacts={"signs": signs},
        )
    note = "all signs +" if set(signs.values()) == {"+"} else "negative sign observed"
    return CheckResult(
        "duality", _REFS["duality"], "pass",
        f"{len(res.pairs)} rows paired as shipped; {note}",
        artifacts={"signs": signs},
    )


def check_a_values(ctx: TypeContext) -> CheckResult:
    if ctx.deltas is None:
        return _skip("a_values", _NO_DATA)
    failures = []
    by_cell: dict[frozenset, set[int]] = {}
    for word, dp in ctx.deltas.items():
        a = ctx.kl.a_of(dp.w)
        if dp.c != a:
            failures.append(f"{word}: lowest degree {dp.c} != a-value {a}")
        by_cell.setdefault(ctx.cells.two_sided_cell_of(dp.w), set()).add(dp.c)
    for cell, cs in by_cell.items():
        if len(cs) != 1:
            failures.append(f"c not constant on a two-sided cell: {sorted(cs)}")
    if failures:
        return CheckResult("a_values", _REFS["a_values"], "fail", "; ".join(failures))
    values = sorted(dp.c for dp in ctx.deltas.values())
    return CheckResult(
        "a_values", _REFS["a_values"], "pass",
        f"{len(ctx.deltas)} rows; c-values {values}",
    )


def check_centrality(ctx: TypeContext) -> CheckResult:
    failures = []
    labels = sorted(ctx.unip_rows)
    for lab in labels:
        z = {
            ctx.group.parse_word(word): mult
            for word, mult in ctx.unip_rows[lab].items()
        }
        if not klcells.is_central(ctx.jring, z):
            failures.append(f"z_{lab} is not central")
    if failures:
        return CheckResult("centrality", _REFS["centrality"], "fail", "; ".join(failures))
    origin = "derived multiplicities" if ctx.derived_rows else "shipped multiplicities"
    return CheckResult(
        "centrality", _REFS["centrality"], "pass",
        f"{len(labels)}/{len(labels)} central ({origin})",
    )


def check_j_criterion(ctx: TypeContext) -> CheckResult:
    cells_based = ctx.jset.members
    alpha_based = ctx.leading.alpha_support()
    failures = []
    if cells_based != alpha_based:
        failures.append("cell-based set differs from the alpha-support set")
    shipped = ctx.tables.j_elements()
    if shipped is not None and shipped != cells_based:
        failures.append("computed set differs from the shipped list")
    g = ctx.group
    involutions = frozenset(
        w for w in g.elements if g.mult(w, w) == g.identity
    )
    if failures:
        return CheckResult("j_criterion", _REFS["j_criterion"], "fail", "; ".join(failures))
    inv_note = (
        "equals the involution set" if cells_based == involutions
        else "differs from the involution set"
    )
    src = "two derivations + shipped list" if shipped is not None else "two derivations"
    return CheckResult(
        "j_criterion", _REFS["j_criterion"], "pass",
        f"{len(cells_based)} elements agree ({src}); {inv_note}",
    )


def check_proximity(ctx: TypeContext) -> CheckResult:
    if not ctx.tables.has_m_w_data:
        return _skip("proximity", _NO_DATA)
    bound = ctx.tables.proximity_bound
    g = ctx.group
    failures = []
    worst = 0
    for word, terms in ctx.tables.m_w.items():
        cl = g.left_descent_set(ctx.tables.element(word))
        for _, tmpl in terms:
            for i, (c0, c1) in enumerate(tmpl.coords, start=1):
                want_c1 = 1 if i in cl else 0
                if c1 != want_c1:
                    failures.append(f"{word}: p-pattern differs from descents at slot {i}")
                corr = abs(c0 + (1 if i in cl else 0))
                worst = max(worst, corr)
                if corr > bound:
                    failures.append(f"{word}: correction {corr} exceeds bound {bound}")
    if failures:
        return CheckResult("proximity", _REFS["proximity"], "fail", "; ".join(failures))
    return CheckResult(
        "proximity", _REFS["proximity"], "pass",
        f"all templates within {bound} of the descent-indicator weight "
        f"(largest correction {worst})",
    )


_CHECKS = {
    "bookkeeping": check_bookkeeping,
    "duality": check_duality,
    "a_values": check_a_values,
    "centrality": check_centrality,
    "j_criterion": check_j_criterion,
    "proximity": check_proximity,
}


def run_checks(ct: CartanType) -> AuditReport:
    """Run every check for one type; failures become report rows."""
    ctx = get_context(ct)
    results = []
    for cid in _CHECK_ORDER:
        try:
            results.append(_CHECKS[cid](ctx))
        except Exception as exc:  # a crash is itself a reportable failure
            results.append(CheckResult(
                cid, _REFS[cid], "fail", f"internal error: {exc}"
            ))
    return AuditReport(type_name=ct.name, checks=tuple(results))


def run_all(types: tuple[CartanType, ...] = ALL_TYPES) -> list[AuditReport]:
    return [run_checks(ct) for ct in types]


def reports_to_json(reports: list[AuditReport]) -> str:
    payload = [r.to_dict() for r in reports]
    return json.dumps(payload if len(payload) != 1 else payload[0], indent=2)


def reports_to_markdown(reports: list[AuditReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"## {r.type_name}")
        lines.append("")
        lines.append("| check | ref | status | details |")
        lines.append("|---|---|---|---|")
        for c in r.checks:
            lines.append(f"| {c.id} | {c.paper_ref} | {c.status} | {c.details} |")
        lines.append("")
    return "\n".join(lines)

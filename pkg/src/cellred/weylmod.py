"""Dimension polynomials for weight templates and the duality search.

``dim_template`` expands the Weyl dimension formula symbolically, with the
weight coordinates affine in p, giving an exact polynomial in t (t stands
for p).  Interpolation is never used to build these polynomials; evaluation
against the integer dimension formula at a few primes is kept as a redundant
guard.

``delta_table`` assembles the signed template combinations for every row of
the shipped tables and checks each result against the transcribed closed
form, coefficient by coefficient.  ``find_duality`` searches for the
involution pairing each row polynomial with its degree-reversal, subject to
descent-set complementation; the sign of each match is an output, never an
assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import WeylElt, generate
from .poly import IntPoly, lowest_degree, reverse_at
from .rootdata import CartanType, RootSystem, build_root_system, weyl_dim
from .uniptables import DataIntegrityFailure, WeightTemplate, load_tables


class NonDominantTemplate(ValueError):
    """Template is not dominant for all admissible p."""


class MissingMwData(ValueError):
    """The type ships no weight-template tables (A4)."""


_SPOT_PRIMES = (5, 7, 11, 13)


def dim_template(rs: RootSystem, tmpl: WeightTemplate, min_prime: int = 2) -> IntPoly:
    """dim V(lambda(p)) as an exact polynomial in t.

    Requires the template to be dominant for every p >= min_prime; affine
    coordinates make that equivalent to dominance at min_prime plus a
    non-negative p-coefficient.
    """
    if len(tmpl.coords) != rs.type.rank:
        raise ValueError(f"template rank {len(tmpl.coords)} != {rs.type.rank}")
    for c0, c1 in tmpl.coords:
        if c1 < 0 or c0 + c1 * min_prime < 0:
            raise NonDominantTemplate(
                f"{tmpl} is not dominant for all p >= {min_prime}"
            )
    num = IntPoly.one()
    den = 1
    for row, rho in zip(rs.coroot_pairings, rs.weyl_vector_pairings):
        const = sum(c * (c0 + 1) for c, (c0, _) in zip(row, tmpl.coords))
        slope = sum(c * c1 for c, (_, c1) in zip(row, tmpl.coords))
        num = num * IntPoly((const, slope))
        den *= rho
    pi = num / den
    for p in _SPOT_PRIMES:
        lam = tmpl.instantiate(p)
        if pi(p) != weyl_dim(rs, lam):
            raise AssertionError(
                f"symbolic dimension for {tmpl} disagrees with weyl_dim at p={p}"
            )
    return pi


@dataclass(frozen=True)
class DeltaPoly:
    """One row of the dimension table: the element, its polynomial, and the
    lowest degree c(w)."""

    w: WeylElt
    word: str
    pi: IntPoly
    c: int


@lru_cache(maxsize=None)
def delta_table(ct: CartanType) -> dict[str, DeltaPoly]:
    """Signed template dimensions for every table row, keyed by shipped word.

    Each polynomial is checked exactly against the transcribed closed form
    and for integer values and a positive leading coefficient.
    """
    tables = load_tables(ct)
    if not tables.has_m_w_data:
        raise MissingMwData(f"{ct.name} ships no weight-template data")
    rs = build_root_system(ct)
    out: dict[str, DeltaPoly] = {}
    for word, terms in tables.m_w.items():
        pi = IntPoly.zero()
        for coef, tmpl in terms:
            pi = pi + coef * dim_template(rs, tmpl, tables.min_prime)
        expected = tables.delta[word]
        if pi != expected:
            raise DataIntegrityFailure(
                f"{ct.name} row {word!r}: templates give {pi.render()} "
                f"but the transcribed polynomial is {expected.render()}"
            )
        if pi.leading_coefficient() <= 0:
            raise DataIntegrityFailure(f"{ct.name} row {word!r}: non-positive leading term")
        if not pi.is_integer_valued():
            raise DataIntegrityFailure(f"{ct.name} row {word!r}: not integer valued")
        out[word] = DeltaPoly(
            w=tables.element(word), word=word, pi=pi, c=lowest_degree(pi)
        )
    return out


@dataclass(frozen=True)
class DualityResult:
    """Outcome of the involution search over the table rows.

    ``pairs`` maps each word to its unique partner and the observed sign of
    the reversal identity.  ``problems`` lists rows with no or ambiguous
    matches; the search succeeded iff it is empty and the pairing is an
    involution.
    """

    pairs: dict[str, tuple[str, int]]
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def find_duality(ct: CartanType, deltas: dict[str, DeltaPoly] | None = None) -> DualityResult:
    """Search for w~ with t^nu pi_w(1/t) = +- pi_{w~} and complementary
    left-descent sets."""
    if deltas is None:
        deltas = delta_table(ct)
    g = generate(ct)
    full = frozenset(range(1, g.rank + 1))
    nu = g.nu
    pairs: dict[str, tuple[str, int]] = {}
    problems: list[str] = []
    for word, dp in deltas.items():
        rev = reverse_at(nu, dp.pi)
        want_descents = full - g.left_descent_set(dp.w)
        matches = []
        for word2, dp2 in deltas.items():
            if g.left_descent_set(dp2.w) != want_descents:
                continue
            if rev == dp2.pi:
                matches.append((word2, 1))
            elif rev == -dp2.pi:
                matches.append((word2, -1))
        if not matches:
            problems.append(f"{word}: no reversal partner")
        elif len(matches) > 1:
            problems.append(f"{word}: ambiguous partners {[m[0] for m in matches]}")
        else:
            pairs[word] = matches[0]
    for word, (partner, _) in pairs.items():
        back = pairs.get(partner)
        if back is None or back[0] != word:
            problems.append(f"{word} <-> {partner}: pairing is not an involution")
    return DualityResult(pairs=pairs, problems=tuple(problems))

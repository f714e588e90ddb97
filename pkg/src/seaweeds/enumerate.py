"""Exhaustive catalogs of Frobenius seaweeds, with verification sweeps.

For a rank-n type there are 3^n subset pairs covering the whole diagram
(each vertex is top-only, bottom-only, or shared).  The scan keeps the
Frobenius ones, normalizes each pair under the swap (and, on the self-dual
diagrams F4/G2/B2/C2, under the arrow-reversing relabeling), and sorts by
bitmask for reproducible output.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .rootsys import LieType, build_root_system
from .seaweed import Seaweed, canonical_form, subset_mask
from .meander import components, is_frobenius, orbits, u_turn_report
from .spectrum import (component_spectrum, component_sum_ok, eigenvalue_bounds_ok,
                       full_spectrum, seaweed_dimension, simple_eigenvalues,
                       symmetric_root, verify_symmetric, verify_unbroken,
                       zero_padding)

ENUM_RANK_GUARD = 16


@dataclass(frozen=True)
class Catalog:
    lie_type: LieType
    entries: tuple[Seaweed, ...]

    @property
    def count(self) -> int:
        return len(self.entries)

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.lie_type),
            "count": self.count,
            "entries": [
                {"pi1": sorted(s.pi1, reverse=True),
                 "pi2": sorted(s.pi2, reverse=True)}
                for s in self.entries
            ],
        }


def _assignments(n: int):
    """Yield (pi1, pi2) pairs with full union: 3 states per vertex."""
    for code in range(3 ** n):
        pi1 = []
        pi2 = []
        c = code
        for i in range(1, n + 1):
            state = c % 3
            c //= 3
            if state != 1:
                pi1.append(i)
            if state != 0:
                pi2.append(i)
        yield frozenset(pi1), frozenset(pi2)


def _length_reversal(t: LieType) -> dict[int, int] | None:
    """The relabeling that reverses arrow directions, where the undirected
    diagram admits one: F4, G2, and the rank-2 B/C system.  Subset pairs
    related by it present the same subalgebra up to the identifications the
    reference catalogs use, so catalogs quotient by it (E-types are
    untouched; their diagram automorphisms are kept as distinct entries)."""
    if t.family == "F":
        return {1: 4, 2: 3, 3: 2, 4: 1}
    if t.family == "G" or (t.family in "BC" and t.rank == 2):
        return {1: 2, 2: 1}
    return None


def enumerate_frobenius(t: LieType) -> Catalog:
    """All Frobenius seaweeds of one type, deduplicated under the swap
    (plus the arrow-reversing relabeling for the self-dual diagrams)."""
    n = t.rank
    if n > ENUM_RANK_GUARD:
        raise ValueError(f"rank {n} exceeds the exhaustive-scan guard "
                         f"({ENUM_RANK_GUARD})")
    rs = build_root_system(t)
    threads = int(os.environ.get("SEAWEED_THREADS", "1") or "1")

    def scan(chunk):
        found = []
        for pi1, pi2 in chunk:
            s = Seaweed(rs, pi1, pi2)
            if is_frobenius(s):
                found.append(canonical_form(s))
        return found

    if threads > 1:
        pairs = list(_assignments(n))
        size = max(1, len(pairs) // threads)
        chunks = [pairs[i:i + size] for i in range(0, len(pairs), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = [item for part in pool.map(scan, chunks) for item in part]
    else:
        results = scan(_assignments(n))
    dedup = {(subset_mask(s.pi1), subset_mask(s.pi2)): s for s in results}
    rho = _length_reversal(t)
    if rho is not None:
        merged = {}
        for (m1, m2), s in sorted(dedup.items()):
            ra = frozenset(rho[i] for i in s.pi1)
            rb = frozenset(rho[i] for i in s.pi2)
            key = min((m1, m2), (subset_mask(ra), subset_mask(rb)),
                      (subset_mask(rb), subset_mask(ra)))
            if key not in merged:
                merged[key] = canonical_form(Seaweed(rs, *(
                    (s.pi1, s.pi2) if key == (m1, m2) else (ra, rb))))
        dedup = {(subset_mask(s.pi1), subset_mask(s.pi2)): s
                 for s in merged.values()}
    entries = tuple(dedup[key] for key in sorted(dedup))
    return Catalog(t, entries)


# The 74 Frobenius seaweeds of E6, as unordered subset pairs.
APPENDIX_A_E6: tuple[tuple[frozenset[int], frozenset[int]], ...] = tuple(
    (frozenset(a), frozenset(b)) for a, b in [
        ((6, 5, 4, 3, 2, 1), (6, 5, 4, 3)),
        ((6, 5, 4, 3, 2, 1), (6, 5, 4, 2)),
        ((6, 5, 4, 3, 2, 1), (5, 4, 3, 1)),
        ((6, 5, 4, 3, 2, 1), (4, 3, 2, 1)),
        ((6, 5, 4, 3, 2, 1), (6, 5, 4)),
        ((6, 5, 4, 3, 2, 1), (6, 5, 3)),
        ((6, 5, 4, 3, 2, 1), (6, 5, 1)),
        ((6, 5, 4, 3, 2, 1), (6, 4, 3)),
        ((6, 5, 4, 3, 2, 1), (6, 3, 1)),
        ((6, 5, 4, 3, 2, 1), (5, 4, 1)),
        ((6, 5, 4, 3, 2, 1), (5, 3, 1)),
        ((6, 5, 4, 3, 2, 1), (4, 3, 1)),
        ((6, 5, 4, 3, 2, 1), (6, 3)),
        ((6, 5, 4, 3, 2, 1), (5, 1)),
        ((5, 4, 3, 2, 1), (6, 5, 4)),
        ((6, 4, 3, 2, 1), (6, 5, 3, 2, 1)),
        ((6, 5, 3, 2, 1), (6, 4, 3, 2)),
        ((6, 5, 4, 2, 1), (6, 5, 3, 2, 1)),
        ((6, 5, 4, 2, 1), (6, 4, 3, 2)),
        ((6, 5, 4, 3, 1), (6, 5, 4, 2, 1)),
        ((6, 5, 4, 3, 1), (6, 4, 3, 2, 1)),
        ((6, 5, 4, 3, 1), (6, 5, 2, 1)),
        ((6, 5, 4, 3, 1), (5, 2, 1)),
        ((6, 5, 4, 3, 2), (4, 3, 2, 1)),
        ((6, 5, 4, 3, 2), (4, 3, 1)),
        ((6, 5, 4, 3, 2), (4, 2, 1)),
        ((6, 5, 4, 3, 2), (3, 2, 1)),
        ((6, 5, 4, 3, 2), (2, 1)),
        ((5, 3, 2, 1), (6, 5, 4, 3, 1)),
        ((5, 3, 2, 1), (6, 5, 4, 2, 1)),
        ((5, 3, 2, 1), (6, 4, 3, 2, 1)),
        ((5, 3, 2, 1), (6, 4, 3, 2)),
        ((5, 3, 2, 1), (6, 4, 2, 1)),
        ((5, 3, 2, 1), (6, 4, 1)),
        ((6, 3, 2, 1), (6, 5, 4, 3, 1)),
        ((6, 3, 2, 1), (5, 4, 2, 1)),
        ((5, 4, 2, 1), (6, 5, 3, 2, 1)),
        ((5, 4, 2, 1), (6, 4, 3, 2, 1)),
        ((6, 4, 2, 1), (6, 5, 3, 2, 1)),
        ((6, 5, 2, 1), (6, 4, 3, 2)),
        ((5, 4, 3, 1), (6, 5, 4, 3, 2)),
        ((6, 4, 3, 1), (6, 5, 4, 2, 1)),
        ((6, 4, 3, 1), (6, 5, 3, 2, 1)),
        ((6, 4, 3, 1), (6, 5, 2, 1)),
        ((6, 4, 3, 1), (5, 3, 2, 1)),
        ((6, 4, 3, 1), (5, 2, 1)),
        ((6, 5, 4, 1), (6, 5, 3, 2, 1)),
        ((6, 5, 4, 1), (6, 4, 3, 2, 1)),
        ((6, 5, 4, 1), (6, 3, 2, 1)),
        ((6, 5, 3, 2), (6, 5, 4, 3, 1)),
        ((6, 5, 3, 2), (6, 5, 4, 2, 1)),
        ((6, 5, 3, 2), (6, 4, 3, 2, 1)),
        ((6, 5, 3, 2), (6, 5, 4, 1)),
        ((6, 5, 3, 2), (6, 4, 2, 1)),
        ((6, 5, 3, 2), (5, 4, 2, 1)),
        ((6, 5, 3, 2), (6, 4, 1)),
        ((5, 4, 3, 2), (6, 5, 3, 1)),
        ((5, 4, 3, 2), (6, 5, 1)),
        ((5, 4, 3, 2), (6, 3, 1)),
        ((6, 5, 4, 2), (5, 4, 3, 2, 1)),
        ((6, 5, 4, 3), (5, 4, 3, 2, 1)),
        ((5, 2, 1), (6, 4, 3, 2)),
        ((6, 4, 1), (6, 5, 3, 2, 1)),
        ((5, 3, 2), (6, 5, 4, 2, 1)),
        ((5, 3, 2), (6, 4, 3, 2, 1)),
        ((5, 3, 2), (6, 4, 2, 1)),
        ((5, 3, 2), (6, 4, 1)),
        ((6, 3, 2), (6, 5, 4, 3, 1)),
        ((6, 3, 2), (6, 5, 4, 1)),
        ((6, 3, 2), (5, 4, 2, 1)),
        ((6, 4, 2), (5, 4, 3, 2, 1)),
        ((6, 5, 2), (5, 4, 3, 2, 1)),
        ((6, 1), (5, 4, 3, 2)),
        ((6, 2), (5, 4, 3, 2, 1)),
    ]
)

# The nine value patterns a full E6 component can realize, side-normalized
# and listed by simple-root index.
E6_COMPONENT_CONFIGURATIONS = (
    (-2, -1, -2, 1, 2, 2),
    (-2, -1, 1, 1, -1, 2),
    (-1, -1, 2, 1, -2, 1),
    (1, -1, -2, 1, 2, -1),
    (1, -1, -1, 1, 1, -1),
    (2, -1, -1, 1, 1, -2),
    (-1, -1, -1, 1, 1, 1),
    (-1, -1, 1, 1, -1, 1),
    (1, -1, 1, 1, -1, -1),
)


@dataclass(frozen=True)
class CatalogDiff:
    missing: tuple[tuple[frozenset[int], frozenset[int]], ...]
    extra: tuple[tuple[frozenset[int], frozenset[int]], ...]

    @property
    def empty(self) -> bool:
        return not self.missing and not self.extra


def check_appendix_a(cat: Catalog) -> CatalogDiff:
    """Diff a catalog against the embedded 74-row E6 reference list."""
    def norm(a: frozenset[int], b: frozenset[int]):
        return (min((tuple(sorted(a)), tuple(sorted(b))),
                    (tuple(sorted(b)), tuple(sorted(a)))))

    reference = {norm(a, b): (a, b) for a, b in APPENDIX_A_E6}
    got = {norm(s.pi1, s.pi2): (s.pi1, s.pi2) for s in cat.entries}
    missing = tuple(reference[k] for k in sorted(reference.keys() - got.keys()))
    extra = tuple(got[k] for k in sorted(got.keys() - reference.keys()))
    return CatalogDiff(missing, extra)


@dataclass
class CensusReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures


def verify_entry(s: Seaweed, report: CensusReport) -> None:
    """Run every structural check one Frobenius seaweed must satisfy.

    The per-value range table and the right/left U-turn dichotomy are
    statements about the classical drawings, so inside the exceptional
    algebras they relax to the pinned exceptional ranges and a total of at
    most two U-turns per orbit (chains there can reach value 3 in both
    signs, and a two-turn orbit need not split by direction).
    """
    rs = s.root_system
    classical = rs.lie_type.family in "ABCD"
    label = repr(s)

    def fail(msg: str) -> None:
        report.failures.append(f"{label}: {msg}")

    x = simple_eigenvalues(s)
    sp = full_spectrum(s)
    if not verify_unbroken(sp):
        fail(f"spectrum {sp.mult} is broken")
    if not verify_symmetric(sp):
        fail(f"spectrum {sp.mult} is not symmetric about one half")
    if sp.total() != seaweed_dimension(s):
        fail(f"spectrum size {sp.total()} != dimension {seaweed_dimension(s)}")
    tops, bottoms = components(s)
    pad_total = 0
    for c in tops + bottoms:
        pad_total += zero_padding(c.shape)
        if not eigenvalue_bounds_ok(c, x, classical=classical):
            fail(f"component {c.roots} of shape {c.shape} breaks value bounds")
        if not component_sum_ok(c, x):
            fail(f"chain component {c.roots} does not sum to one")
        cs = component_spectrum(c, x, rs).values
        if not verify_unbroken(cs):
            fail(f"component {c.roots} spectrum {cs.mult} is broken")
        if not verify_symmetric(cs):
            fail(f"component {c.roots} spectrum {cs.mult} is asymmetric")
        if c.shape.kind == "A":
            _check_symmetric_roots(s, c, x, fail)
        if c.shape.kind == "E" and c.shape.rank == 6:
            config = tuple(c.side.sign * x.of(i) for i in c.order)
            flip = (config[5], config[1], config[4], config[3],
                    config[2], config[0])
            if config not in E6_COMPONENT_CONFIGURATIONS \
                    and flip not in E6_COMPONENT_CONFIGURATIONS:
                fail(f"unlisted full-E6 value pattern {config}")
    if pad_total != s.rank:
        fail(f"zero padding totals {pad_total}, expected the rank {s.rank}")
    for row in u_turn_report(orbits(s)).rows:
        if classical and (row.right > 1 or row.left > 1):
            fail(f"orbit {row.orbit} has {row.right} right / {row.left} left "
                 "U-turns")
        if row.right + row.left > 2:
            fail(f"orbit {row.orbit} has more than two U-turns")
    flipped = Seaweed(rs, s.pi2, s.pi1)
    if full_spectrum(flipped).mult != sp.mult:
        fail("spectrum changed under the side swap")
    report.checked += 1


def _check_symmetric_roots(s: Seaweed, c, x, fail) -> None:
    from .rootsys import sub_positive_roots
    sgn = c.side.sign
    for beta in sub_positive_roots(s.root_system, c.roots):
        mirror = symmetric_root(s.root_system, c, beta)
        if mirror is None:
            if sgn * x.evaluate(beta) != 1:
                fail(f"self-paired root {beta} does not evaluate to one")
        elif sgn * (x.evaluate(beta) + x.evaluate(mirror)) != 1:
            fail(f"mirror roots {beta}, {mirror} do not sum to one")


def spectrum_census(cat: Catalog) -> CensusReport:
    """Verify every catalog entry; the expected failure count is zero."""
    report = CensusReport()
    for s in cat.entries:
        verify_entry(s, report)
    return report

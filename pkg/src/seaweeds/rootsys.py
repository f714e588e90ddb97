"""Root-system data for the simple Lie types A, B, C, D, E6, E7, E8, F4, G2.

Indexing convention: for the classical types B, C and D the distinguished
root is alpha_1 (short for B, long for C, a fork prong for D) and the chain
reads alpha_n, ..., alpha_1 from left to right; the exceptional types carry
the standard Bourbaki numbering.  Positive roots are stored as coefficient
tuples over the simple roots and generated from the Cartan matrix alone, by
closure over root strings.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

VALID_RANKS = {"A": (1, 512), "B": (2, 512), "C": (2, 512), "D": (3, 512),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}

PositiveRoot = tuple[int, ...]


@dataclass(frozen=True)
class LieType:
    """A simple Lie type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in VALID_RANKS:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = VALID_RANKS[self.family]
        if not lo <= self.rank <= hi:
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "LieType":
        """Parse strings like 'A5', 'E6', 'g2'."""
        text = text.strip().upper()
        if len(text) < 2 or text[0] not in VALID_RANKS or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r}")
        return LieType(text[0], int(text[1:]))


@dataclass(frozen=True)
class DiagramShape:
    """The type of a connected induced subdiagram."""

    kind: str
    rank: int

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"


def _cartan(t: LieType) -> tuple[tuple[int, ...], ...]:
    fam, r = t.family, t.rank
    A = [[0] * r for _ in range(r)]
    for i in range(r):
        A[i][i] = 2

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if fam in "ABC":
        for i in range(1, r):
            link(i, i + 1)
        if fam == "B":
            link(1, 2, -1, -2)  # alpha_1 short
        elif fam == "C":
            link(1, 2, -2, -1)  # alpha_1 long
    elif fam == "D":
        for i in range(3, r):
            link(i, i + 1)
        link(1, 3)
        link(2, 3)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: r - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(2, 4)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -2, -1)  # alpha_2 long, alpha_3 short
        link(3, 4)
    elif fam == "G":
        link(1, 2, -1, -3)  # alpha_1 short
    return tuple(tuple(row) for row in A)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Cartan data plus the complete positive-root list of one simple type."""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[PositiveRoot, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adjacency[i - 1]

    @property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency_of(self)

    def edge_multiplicity(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]

    def columns(self) -> dict[int, int]:
        """Horizontal drawing positions (doubled to stay integral), matching
        the left-to-right layout alpha_n ... alpha_1 for classical types."""
        return _columns_of(self)


@lru_cache(maxsize=None)
def _adjacency_of(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    n = rs.rank
    return tuple(
        tuple(j for j in range(1, n + 1) if j != i and rs.cartan[i - 1][j - 1] != 0)
        for i in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def _columns_of(rs: RootSystem) -> dict[int, int]:
    fam, n = rs.lie_type.family, rs.rank
    if fam in "ABC":
        return {i: 2 * (n - i) for i in range(1, n + 1)}
    if fam == "D":
        col = {i: 2 * (n - i) for i in range(2, n + 1)}
        col[1] = 2 * (n - 2)  # drawn in the same column as alpha_2
        return col
    if fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        col = {a: 2 * k for k, a in enumerate(reversed(chain))}
        col[2] = col[4] + 1  # branch vertex sits between alpha_4 and alpha_3
        return col
    if fam == "F":
        return {i: 2 * (i - 1) for i in range(1, 5)}
    return {2: 0, 1: 2}  # G2


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """Construct simple roots, Cartan matrix and all positive roots of t.

    Roots are generated level by level: a candidate beta + alpha_i at height
    h+1 is a root exactly when q - <beta, alpha_i^v> > 0, with q the number
    of steps the alpha_i-string descends from beta.  Output is ordered by
    height, then lexicographically.
    """
    n = t.rank
    cartan = _cartan(t)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[PositiveRoot] = set(simple)
    level = list(simple)
    all_roots = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(1, n + 1):
                q = 0
                down = list(beta)
                while True:
                    down[i - 1] -= 1
                    if down[i - 1] < 0 or tuple(down) not in known:
                        break
                    q += 1
                pairing = sum(c * cartan[j][i - 1] for j, c in enumerate(beta) if c)
                if q - pairing > 0:
                    up = list(beta)
                    up[i - 1] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        nxt.sort()
        all_roots.extend(nxt)
        level = nxt
    all_roots.sort(key=lambda b: (sum(b), b))
    return RootSystem(t, cartan, tuple(all_roots))


def root_support(beta: PositiveRoot) -> frozenset[int]:
    """Indices of the simple roots appearing in beta."""
    return frozenset(i + 1 for i, c in enumerate(beta) if c)


def sub_positive_roots(rs: RootSystem, sigma) -> list[PositiveRoot]:
    """All positive roots supported inside the simple-root subset sigma."""
    s = frozenset(sigma)
    return [b for b in rs.positive_roots if root_support(b) <= s]


def _connected(rs: RootSystem, sigma: frozenset[int]) -> bool:
    if not sigma:
        return False
    seen = set()
    stack = [next(iter(sigma))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in rs.neighbors(v) if w in sigma and w not in seen)
    return seen == sigma


def classify_component(rs: RootSystem, sigma) -> tuple[DiagramShape, tuple[int, ...]]:
    """Shape of a connected subset plus its internal vertex order.

    The returned order lists ambient indices playing the roles alpha'_1,
    alpha'_2, ..., alpha'_k of a standalone system of the detected shape
    (distinguished root first for B/C/D, Bourbaki order for E/F/G, and the
    rightmost-drawn end first for chains).
    """
    s = frozenset(sigma)
    if not _connected(rs, s):
        raise ValueError(f"subset {sorted(s)} is not connected in the diagram")
    verts = sorted(s)
    k = len(verts)
    if k == 1:
        return DiagramShape("A", 1), (verts[0],)
    adj = {v: [w for w in rs.neighbors(v) if w in s] for v in verts}

    for v in verts:
        for w in adj[v]:
            if rs.edge_multiplicity(v, w) == 3:
                short = w if rs.cartan[v - 1][w - 1] == -3 else v
                longv = v if short == w else w
                return DiagramShape("G", 2), (short, longv)

    forks = [v for v in verts if len(adj[v]) == 3]
    if forks:
        center = forks[0]
        legs = []
        for first in adj[center]:
            leg = [first]
            prev, cur = center, first
            while True:
                ext = [w for w in adj[cur] if w != prev]
                if not ext:
                    break
                prev, cur = cur, ext[0]
                leg.append(cur)
            legs.append(leg)
        legs.sort(key=lambda leg: (len(leg), leg[0]))
        lens = tuple(len(leg) for leg in legs)
        if lens[0] == 1 and lens[1] == 1:
            prongs = sorted([legs[0][0], legs[1][0]])
            return DiagramShape("D", k), tuple(prongs) + (center,) + tuple(legs[2])
        if lens == (1, 2, 2):
            a, b = legs[1], legs[2]
            return DiagramShape("E", 6), (a[1], legs[0][0], a[0], center, b[0], b[1])
        if lens[:2] == (1, 2) and lens[2] in (3, 4):
            a, b = legs[1], legs[2]
            order = (a[1], legs[0][0], a[0], center) + tuple(b)
            return DiagramShape("E", k), order
        raise AssertionError(f"unexpected fork shape {lens} in {rs.lie_type}")

    ends = [v for v in verts if len(adj[v]) == 1]
    doubles = [(v, w) for v in verts for w in adj[v]
               if v < w and rs.edge_multiplicity(v, w) == 2]
    if doubles:
        v, w = doubles[0]
        short = w if rs.cartan[v - 1][w - 1] == -2 else v
        longv = v if short == w else w
        short_side = _half_chain(adj, short, longv)
        long_side = _half_chain(adj, longv, short)
        if len(short_side) >= 2 and len(long_side) >= 2:
            if k != 4:
                raise AssertionError(f"unexpected doubled chain of size {k}")
            return DiagramShape("F", 4), tuple(reversed(long_side)) + tuple(short_side)
        if k == 2 and rs.lie_type.family == "C":
            # a bare doubled edge reads as the ambient series where possible
            return DiagramShape("C", 2), (longv, short)
        if len(short_side) == 1:
            # the short root is a chain end: B-series, distinguished root first
            return DiagramShape("B", k), tuple(_walk_from(adj, short))
        # the long root is a chain end: C-series
        return DiagramShape("C", k), tuple(_walk_from(adj, longv))

    # plain chain; the rightmost-drawn end plays alpha'_1
    cols = rs.columns()
    start = max(ends, key=lambda v: cols[v])
    return DiagramShape("A", k), tuple(_walk_from(adj, start))


def _walk_from(adj: dict[int, list[int]], start: int) -> list[int]:
    path = [start]
    prev = None
    cur = start
    while True:
        ext = [w for w in adj[cur] if w != prev]
        if not ext:
            return path
        prev, cur = cur, ext[0]
        path.append(cur)


def _half_chain(adj: dict[int, list[int]], a: int, blocked: int) -> list[int]:
    """Vertices reached from a without stepping to `blocked` first."""
    path = [a]
    prev, cur = blocked, a
    while True:
        ext = [w for w in adj[cur] if w != prev]
        if not ext:
            return path
        prev, cur = cur, ext[0]
        path.append(cur)


def induced_shape(rs: RootSystem, sigma) -> DiagramShape:
    """Classify the induced Dynkin subdiagram of a connected subset."""
    return classify_component(rs, sigma)[0]


def positive_root_count(t: LieType) -> int:
    """Closed-form count of positive roots."""
    n = t.rank
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0), "F": 24, "G": 6}[t.family]

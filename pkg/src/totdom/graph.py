"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertex ``v`` of a :class:`Graph` owns the bitmask ``adj[v]``; bit ``u`` is set
iff ``uv`` is an edge.  Graphs are immutable, and every operation returns a new
graph.  Orders are capped at :data:`CAPACITY` so a neighbourhood fits a
machine word.

Family generators use a fixed vertex numbering (hub or centre first, then the
cycle/clique vertices in order, then pendant vertices grouped by the vertex
they hang from).  The numbering for each family is given in its docstring.

Star notation: ``S_k`` is the star on ``k`` vertices, i.e. ``K_{1,k-1}``;
``make_family(FamilySpec("star", {"n": n}))`` builds ``K_{1,n}`` on ``n + 1``
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

CAPACITY = 64

GRAPH6_HEADER = ">>graph6<<"


class CapacityError(ValueError):
    """Raised when a graph would exceed :data:`CAPACITY` vertices."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative order {self.n}")
        if self.n > CAPACITY:
            raise CapacityError(f"order {self.n} exceeds capacity {CAPACITY}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} neighbourhoods, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighbourhood of {v} references a vertex >= {self.n}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def nbhd_of_set(self, s: int) -> int:
        """Open neighbourhood N(S) of the vertex bit set ``s``."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = self.nbhd_of_set(frontier)
            frontier = reach & ~seen
            seen |= reach
        return seen == self.full_mask

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not in graph")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def remove_edges_within(self, s: int) -> Graph:
        """Delete every edge with both endpoints in the vertex set ``s``."""
        adj = tuple(nb & ~s if s >> v & 1 else nb for v, nb in enumerate(self.adj))
        return Graph(self.n, adj)

    def remove_vertices(self, s: int) -> Graph:
        """Induced subgraph on the complement of ``s``; survivors keep their relative order."""
        keep = [v for v in range(self.n) if not s >> v & 1]
        return self.induced(keep)

    def remove_vertex(self, v: int) -> Graph:
        return self.remove_vertices(1 << v)

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            m = 0
            for u in bits(self.adj[v]):
                if u in index:
                    m |= 1 << index[u]
            adj.append(m)
        return Graph(len(vertices), tuple(adj))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(nb << shift for nb in other.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n > CAPACITY:
        raise CapacityError(f"order {n} exceeds capacity {CAPACITY}")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("missing size byte", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", base + i)

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6Error("truncated 6-byte size field", base + len(s))
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    else:
        if len(s) < 4:
            raise Graph6Error("truncated 3-byte size field", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error(f"multi-byte size field encodes small order {n}", base)
        pos = 4
    if n > CAPACITY:
        raise Graph6Error(f"order {n} exceeds capacity {CAPACITY}", base)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nchars:
        raise Graph6Error(f"expected {nchars} data bytes for order {n}, got {len(body)}", base + pos + min(len(body), nchars))

    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            ci, bi = divmod(k, 6)
            if (ord(body[ci]) - 63) >> (5 - bi) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + pos + nchars - 1)
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0)]
    acc = nacc = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (g.adj[u] >> v & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """Yield ``(line_number, graph6, graph)`` for each non-blank line.

    Parse failures are re-raised as :class:`Graph6Error` prefixed with the
    1-based line number.
    """
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.args[0]}", exc.offset) from None
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        yield lineno, line, g


# ---------------------------------------------------------------------------
# edge-list text
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ValueError("edge list is empty")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header must be two integers") from None
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
            _check_pair(n, u, v)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        edges.append((u, v))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


# ---------------------------------------------------------------------------
# graph operations
# ---------------------------------------------------------------------------


def corona(g: Graph, h: Graph) -> Graph:
    """Corona ``g ∘ h``: vertex ``i`` of ``g`` is joined to every vertex of copy ``i`` of ``h``.

    Numbering: ``g`` keeps ``0..g.n-1``; copy ``i`` occupies
    ``g.n + i*h.n .. g.n + (i+1)*h.n - 1`` with ``h``'s internal order.
    """
    if g.n < 1:
        raise ValueError("corona needs a non-empty first factor")
    n = g.n * (1 + h.n)
    edges = list(g.edges())
    for i in range(g.n):
        off = g.n + i * h.n
        edges += [(off + a, off + b) for a, b in h.edges()]
        edges += [(i, off + a) for a in range(h.n)]
    return from_edge_list(n, edges)


def sunlike(g: Graph, ms: Sequence[int]) -> Graph:
    """Attach ``ms[i]`` new pendant leaves to vertex ``i``; leaves are numbered after ``g``, grouped by ``i``."""
    if len(ms) != g.n:
        raise ValueError(f"need {g.n} multiplicities, got {len(ms)}")
    if any(m < 1 for m in ms):
        raise ValueError("every multiplicity must be positive")
    edges = list(g.edges())
    nxt = g.n
    for i, m in enumerate(ms):
        for _ in range(m):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def p3_attach(h: Graph) -> Graph:
    """The graph H(3): hang a two-vertex path ``i - (n+2i) - (n+2i+1)`` off each vertex ``i`` of ``h``."""
    if h.n < 1:
        raise ValueError("p3_attach needs at least one vertex")
    n = h.n
    edges = list(h.edges())
    for i in range(n):
        a = n + 2 * i
        edges += [(i, a), (a, a + 1)]
    return from_edge_list(3 * n, edges)


def support_vertices(g: Graph) -> int:
    """Bit set of vertices adjacent to at least one degree-1 vertex."""
    out = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            out |= g.adj[v]
    return out


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "complete", "path", "cycle", "star", "lollipop", "friendship",
    "generalized_friendship", "firecracker", "generalized_firecracker",
    "book", "wheel", "helm", "generalized_helm",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping[str, int | tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``kind:key=value,...``; a list value continues over bare comma items (``ks=5,9,7``)."""
        kind, _, rest = text.strip().partition(":")
        kind = kind.strip()
        if kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
        params: dict[str, list[int]] = {}
        key = None
        for item in filter(None, (p.strip() for p in rest.split(","))):
            if "=" in item:
                key, _, val = item.partition("=")
                key = key.strip()
                params[key] = [_int(val, key)]
            elif key is None:
                raise ValueError(f"value {item!r} without a key in {text!r}")
            else:
                params[key].append(_int(item, key))
        out: dict[str, int | tuple[int, ...]] = {}
        for k, vals in params.items():
            out[k] = tuple(vals) if k == "ks" else _single(k, vals)
        return cls(kind, out)

    def __str__(self) -> str:
        parts = []
        for k, v in self.params.items():
            parts.append(f"{k}={','.join(map(str, v))}" if isinstance(v, tuple) else f"{k}={v}")
        return f"{self.kind}:{','.join(parts)}"

    def order(self) -> int:
        return make_family(self).n


def _int(text: str, key: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError(f"parameter {key!r}: {text!r} is not an integer") from None


def _single(key: str, vals: list[int]) -> int:
    if len(vals) != 1:
        raise ValueError(f"parameter {key!r} takes a single integer")
    return vals[0]


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """``K_{1,n}``: centre 0, leaves ``1..n``."""
    if n < 1:
        raise ValueError("star needs n >= 1 leaves")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def lollipop_graph(m: int, n: int) -> Graph:
    """``L(m, n)``: clique ``0..m-1``, path ``m..m+n-1``, bridge ``(0, m)``."""
    if m < 3 or n < 1:
        raise ValueError("lollipop needs m >= 3 and n >= 1")
    edges = [(u, v) for v in range(m) for u in range(v)]
    edges.append((0, m))
    edges += [(i, i + 1) for i in range(m, m + n - 1)]
    return from_edge_list(m + n, edges)


def generalized_friendship_graph(n: int, q: int) -> Graph:
    """``F_{n,q}``: centre 0; cycle ``i`` is ``0 - a_1 - ... - a_{q-1} - 0`` on vertices ``1+i(q-1) .. (i+1)(q-1)``."""
    if n < 1 or q < 3:
        raise ValueError("generalized friendship needs n >= 1 and q >= 3")
    edges = []
    for i in range(n):
        ring = [0] + list(range(1 + i * (q - 1), 1 + (i + 1) * (q - 1)))
        edges += [(ring[j], ring[(j + 1) % q]) for j in range(q)]
    return from_edge_list(n * (q - 1) + 1, edges)


def firecracker_graph(ks: Sequence[int]) -> Graph:
    """Stars ``S_{k_i}`` whose linking leaves form a path.

    Numbering: centres ``0..t-1``, linking leaves ``t..2t-1`` (path in that
    order), then the remaining ``k_i - 2`` leaves of each star grouped by star.
    """
    if not ks or any(k < 3 for k in ks):
        raise ValueError("firecracker needs at least one star and every k >= 3")
    t = len(ks)
    edges = [(i, t + i) for i in range(t)]
    edges += [(t + i, t + i + 1) for i in range(t - 1)]
    nxt = 2 * t
    for i, k in enumerate(ks):
        for _ in range(k - 2):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def book_graph(n: int) -> Graph:
    """``B_n``: spine ``(0, 1)``; page ``i`` adds ``0 - (2+2i) - (3+2i) - 1``."""
    if n < 1:
        raise ValueError("book needs n >= 1")
    edges = [(0, 1)]
    for i in range(n):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (a, b), (b, 1)]
    return from_edge_list(2 * n + 2, edges)


def generalized_helm_graph(n: int, m: int) -> Graph:
    """``H_{n,m}``: wheel with hub 0 and rim ``1..n``, then ``m`` pendants per rim vertex, grouped."""
    if n < 3 or m < 0:
        raise ValueError("helm needs n >= 3 and m >= 0")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    nxt = n + 1
    for i in range(1, n + 1):
        for _ in range(m):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


_REQUIRED = {
    "complete": ("n",), "path": ("n",), "cycle": ("n",), "star": ("n",),
    "lollipop": ("m", "n"), "friendship": ("n",), "generalized_friendship": ("n", "q"),
    "generalized_firecracker": ("ks",), "book": ("n",), "wheel": ("n",),
    "helm": ("n", "m"), "generalized_helm": ("n", "m"),
}


def make_family(spec: FamilySpec) -> Graph:
    """Construct the named family member.

    ======================== ====================== ===========================
    kind                      params                 order
    ======================== ====================== ===========================
    complete                  n                      n
    path                      n                      n
    cycle                     n >= 3                 n
    star                      n >= 1 (K_{1,n})       n + 1
    lollipop                  m >= 3, n >= 1         m + n
    friendship                n >= 1                 2n + 1
    generalized_friendship    n >= 1, q >= 3         n(q - 1) + 1
    firecracker               n >= 1, k >= 3 | ks    nk  (sum ks)
    generalized_firecracker   ks, every k >= 3       sum ks
    book                      n >= 1                 2n + 2
    wheel                     n >= 3 rim vertices    n + 1
    helm                      n >= 3 [, m=1]         n(m + 1) + 1
    generalized_helm          n >= 3, m >= 1         n(m + 1) + 1
    ======================== ====================== ===========================
    """
    kind, p = spec.kind, dict(spec.params)
    if kind == "firecracker":
        if "ks" in p:
            kind = "generalized_firecracker"
        else:
            _need(kind, p, ("n", "k"))
            if p["n"] < 1:
                raise ValueError("firecracker needs n >= 1")
            return firecracker_graph([p["k"]] * p["n"])
    if kind == "helm":
        p.setdefault("m", 1)
        if p["m"] < 1:
            raise ValueError("helm needs m >= 1")
    if kind not in _REQUIRED:
        raise ValueError(f"unknown family {kind!r}")
    _need(kind, p, _REQUIRED[kind])

    if kind == "complete":
        if p["n"] < 0:
            raise ValueError("complete needs n >= 0")
        return complete_graph(p["n"])
    if kind == "path":
        if p["n"] < 0:
            raise ValueError("path needs n >= 0")
        return path_graph(p["n"])
    if kind == "cycle":
        return cycle_graph(p["n"])
    if kind == "star":
        return star_graph(p["n"])
    if kind == "lollipop":
        return lollipop_graph(p["m"], p["n"])
    if kind == "friendship":
        return generalized_friendship_graph(p["n"], 3)
    if kind == "generalized_friendship":
        return generalized_friendship_graph(p["n"], p["q"])
    if kind == "generalized_firecracker":
        return firecracker_graph(p["ks"])
    if kind == "book":
        return book_graph(p["n"])
    if kind == "wheel":
        return generalized_helm_graph(p["n"], 0)
    if kind in ("helm", "generalized_helm"):
        if p["m"] < 1:
            raise ValueError(f"{kind} needs m >= 1")
        return generalized_helm_graph(p["n"], p["m"])
    raise AssertionError(kind)


def _need(kind: str, params: Mapping, keys: Sequence[str]) -> None:
    missing = [k for k in keys if k not in params]
    if missing:
        raise ValueError(f"{kind} needs parameter(s) {', '.join(missing)}")
    extra = set(params) - set(keys)
    if extra:
        raise ValueError(f"{kind} does not take parameter(s) {', '.join(sorted(extra))}")

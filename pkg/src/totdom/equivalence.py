"""D_t-equivalence classes over graph catalogs.

Graphs are keyed by their exact coefficient vector.  Catalog identity is the
graph6 string: catalogs are assumed to be isomorphism-free, and no
canonical labelling is attempted.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .engine import brute_force_tdp, resolve_threads
from .graph import Graph, corona, lollipop_graph, parse_graph6, read_graph6_lines, star_graph, sunlike, write_graph6
from .polynomial import Polynomial

log = logging.getLogger(__name__)

Fingerprint = tuple[int, ...]

SCOPES = ("connected", "all")


def fingerprint(g: Graph) -> Fingerprint:
    return brute_force_tdp(g).coeffs


def _fingerprint_g6(s: str) -> Fingerprint:
    return fingerprint(parse_graph6(s))


@dataclass
class EquivalenceClass:
    key: Fingerprint
    members: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def gamma_t(self) -> Optional[int]:
        return Polynomial(self.key).low_degree()

    def to_json(self) -> dict:
        return {
            "key": Polynomial(self.key).to_json(),
            "gamma_t": self.gamma_t,
            "size": self.size,
            "members": list(self.members),
        }


@dataclass
class ClassReport:
    order: Optional[int]
    total_graphs: int
    classes: list[EquivalenceClass]
    scope: str = "connected"

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def singleton_count(self) -> int:
        return sum(1 for c in self.classes if c.size == 1)

    def header(self) -> dict:
        return {
            "v": 1,
            "order": self.order,
            "total": self.total_graphs,
            "classes": self.class_count,
            "singletons": self.singleton_count,
            "scope": self.scope,
        }

    def class_of(self, key: Fingerprint) -> Optional[EquivalenceClass]:
        for c in self.classes:
            if c.key == key:
                return c
        return None

    def write_jsonl(self, out: TextIO) -> None:
        out.write(self.to_jsonl())

    def to_jsonl(self) -> str:
        lines = [json.dumps(self.header(), separators=(",", ":"))]
        lines += [json.dumps(c.to_json(), separators=(",", ":")) for c in self.classes]
        return "\n".join(lines) + "\n"


def _load(source: Iterable[str]) -> list[tuple[str, Graph]]:
    return [(s, g) for _, s, g in read_graph6_lines(source)]


def partition_catalog(source: Iterable[str], scope: str = "connected", threads: int = 1) -> ClassReport:
    """Group the graph6 lines of ``source`` by total domination polynomial.

    Classes are ordered by key (ascending coefficient tuples), members by
    input order.  ``threads`` > 1 fingerprints in worker processes; the report
    is identical either way.
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    entries = _load(source)
    seen: set[str] = set()
    for s, _ in entries:
        if s in seen:
            log.warning("duplicate catalog entry %s kept as a distinct member", s)
        seen.add(s)

    workers = resolve_threads(threads)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            keys = list(pool.map(_fingerprint_g6, [s for s, _ in entries], chunksize=32))
    else:
        keys = [fingerprint(g) for _, g in entries]

    groups: dict[Fingerprint, list[str]] = {}
    for (s, _), k in zip(entries, keys):
        groups.setdefault(k, []).append(s)
    classes = [EquivalenceClass(k, groups[k]) for k in sorted(groups)]
    orders = {g.n for _, g in entries}
    order = orders.pop() if len(orders) == 1 else None
    return ClassReport(order, len(entries), classes, scope)


def read_report(lines: Iterable[str]) -> ClassReport:
    """Inverse of :meth:`ClassReport.write_jsonl`."""
    it = iter(lines)
    head = json.loads(next(it))
    classes = []
    for line in it:
        if line.strip():
            obj = json.loads(line)
            classes.append(EquivalenceClass(tuple(int(a) for a in obj["key"]), list(obj["members"])))
    return ClassReport(head["order"], head["total"], classes, head["scope"])


@dataclass(frozen=True)
class UniquenessResult:
    """Outcome of :func:`is_dt_unique`.

    ``self_match`` is the catalog entry standing for the query graph: its own
    graph6 when present verbatim, the lone sharer when the query was not
    found and exactly one entry shares its key, else ``None``.
    """

    unique: bool
    witnesses: list[str]
    found_in_catalog: bool
    self_match: Optional[str]
    scope: str

    def __iter__(self) -> Iterator:
        return iter((self.unique, self.witnesses))


def is_dt_unique(g: Graph, catalog: Iterable[str], scope: str = "connected") -> UniquenessResult:
    """Is ``g`` the only member of its class within ``catalog``?

    When ``g`` appears verbatim (same graph6), every other sharer is a
    witness.  Otherwise the catalog is taken to be complete and
    isomorphism-free for ``g``'s order, so exactly one sharer is a relabelled
    copy of ``g``; ``g`` is unique iff at most one entry shares its key.  With
    several sharers the copy cannot be singled out without an isomorphism
    test, and all of them are returned as witnesses.
    """
    key = fingerprint(g)
    me = write_graph6(g)
    sharers = []
    found = False
    for _, s, h in read_graph6_lines(catalog):
        if h.n != g.n:
            continue
        if s == me:
            found = True
        elif fingerprint(h) == key:
            sharers.append(s)
    if found:
        return UniquenessResult(not sharers, sharers, True, me, scope)
    log.warning("graph %s not found verbatim in catalog; assuming an isomorphism-free complete catalog", me)
    if len(sharers) == 1:
        return UniquenessResult(True, [], False, sharers[0], scope)
    return UniquenessResult(not sharers, sharers, False, None, scope)


# ---------------------------------------------------------------------------
# explicit witnesses
# ---------------------------------------------------------------------------


def star_class_witnesses(n: int) -> list[Graph]:
    """``K_{1,n}``, ``L(n,1)`` and ``L(n,1)`` minus a clique edge away from the pendant."""
    if n < 3:
        raise ValueError("star_class_witnesses needs n >= 3")
    lol = lollipop_graph(n, 1)
    # vertex 0 carries the pendant; edge (1, 2) avoids it
    return [star_graph(n), lol, lol.remove_edge(1, 2)]


def corona_class_witnesses(g: Graph, m: int, ms: Sequence[int]) -> list[Graph]:
    """``g ∘ K̄_m`` and the sunlike graph ``g(v_1^{m_1}, ..., v_n^{m_n})`` with ``sum ms = m n``."""
    if not g.is_connected() or g.n < 1:
        raise ValueError("corona witnesses need a connected base graph")
    if m < 1 or len(ms) != g.n or any(k < 1 for k in ms):
        raise ValueError("need m >= 1 and one positive multiplicity per vertex")
    if sum(ms) != m * g.n:
        raise ValueError(f"multiplicities sum to {sum(ms)}, expected {m * g.n}")
    return [corona(g, Graph.empty(m)), sunlike(g, ms)]


# ---------------------------------------------------------------------------
# bundled catalogs
# ---------------------------------------------------------------------------

BUNDLED_ORDERS = range(1, 8)


def bundled_catalog(order: int, scope: str = "connected") -> list[str]:
    """graph6 lines of every (connected) graph of ``order`` up to isomorphism, ``1 <= order <= 7``."""
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    if order not in BUNDLED_ORDERS:
        raise ValueError(f"bundled catalogs cover orders 1..7, not {order}")
    text = resources.files("totdom.data").joinpath(f"{scope}{order}.g6").read_text()
    return [line for line in text.splitlines() if line]

"""Closed-form total domination polynomials for named graph families.

Every function here is checked against :func:`totdom.engine.brute_force_tdp`
on the matching :func:`totdom.graph.make_family` member (see ``verify``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Optional, Sequence

from .engine import brute_force_tdp
from .graph import (
    FamilySpec, Graph, complete_graph, corona, cycle_graph, make_family, p3_attach, path_graph, sunlike,
)
from .polynomial import ONE, X, Polynomial


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def star_poly(n: int) -> Polynomial:
    """x(x+1)^n - x, shared by K_{1,n} and L(n,1)."""
    _require(n >= 1, "star_poly needs n >= 1")
    return X * (X + 1) ** n - X


@lru_cache(maxsize=None)
def lollipop_poly(m: int, n: int) -> Polynomial:
    """D_t(L(m,n)).

    Orders ``n <= 4`` use the four base polynomials; larger ``n`` applies
    ``x L(m,n-1) + x^2 (L(m,n-3) + L(m,n-4))``.  The ``n = 4`` base carries
    ``-(m+3) x^3``; with ``-(m+2) x^3`` it overcounts by exactly ``x^3``.
    """
    _require(m >= 3 and n >= 1, "lollipop_poly needs m >= 3 and n >= 1")
    x1 = X + 1
    if n == 1:
        return X * x1 ** m - X
    if n == 2:
        return X**2 * x1 ** (m - 1) * (X + 2) - (m - 1) * X**3 - X**2
    if n == 3:
        return X**2 * x1 ** m * (X + 2) - (m - 1) * X**4 - 2 * m * X**3 - 2 * X**2
    if n == 4:
        return (X**2 * x1 ** m * (X**2 + 3 * X + 1)
                - (m - 1) * X**5 - 2 * m * X**4 - (m + 3) * X**3 - X**2)
    return X * lollipop_poly(m, n - 1) + X**2 * (lollipop_poly(m, n - 3) + lollipop_poly(m, n - 4))


def gen_firecracker_poly(ks: Sequence[int]) -> Polynomial:
    _require(len(ks) >= 1 and all(k >= 3 for k in ks), "every star needs k >= 3")
    out = ONE
    for k in ks:
        out = out * star_poly(k - 1)
    return out


def firecracker_poly(n: int, k: int) -> Polynomial:
    _require(n >= 1 and k >= 3, "firecracker_poly needs n >= 1 and k >= 3")
    return star_poly(k - 1) ** n


def book_poly(n: int) -> Polynomial:
    _require(n >= 1, "book_poly needs n >= 1")
    return (X * (X + 1) ** n + X**n) ** 2


def gen_friendship4_poly(n: int) -> Polynomial:
    """D_t(F_{n,4}) = x^(n+1) (x+2)^n [(x+1)^n + x^(n-1)]."""
    _require(n >= 1, "gen_friendship4_poly needs n >= 1")
    return X ** (n + 1) * (X + 2) ** n * ((X + 1) ** n + X ** (n - 1))


def helm_poly(n: int, m: int = 1) -> Polynomial:
    _require(n >= 3 and m >= 1, "helm_poly needs n >= 3 and m >= 1")
    return X**n * (X + 1) ** (m * n + 1)


def h3_poly(n: int) -> Polynomial:
    """D_t(H(3)) for any H of order n: x^(2n) (x+2)^n."""
    _require(n >= 1, "h3_poly needs n >= 1")
    return X ** (2 * n) * (X + 2) ** n


def corona_kbar_poly(n: int, r: int, m: int) -> Polynomial:
    """D_t(G ∘ K̄_m) for G of order n with r isolated vertices.

    Each isolated vertex of G must pick up at least one of its own m leaves,
    hence the bracket ``(x+1)^m - 1``.
    """
    _require(n >= 1 and 0 <= r <= n and m >= 1, "corona_kbar_poly needs n >= 1, 0 <= r <= n, m >= 1")
    return X**n * (X + 1) ** (m * (n - r)) * ((X + 1) ** m - 1) ** r


def sunlike_poly(n: int, ms: Sequence[int]) -> Polynomial:
    """x^n (x+1)^(sum ms) for a connected base graph of order n >= 2."""
    _require(n >= 2, "sunlike_poly needs a connected base of order >= 2")
    _require(len(ms) == n, f"need {n} multiplicities")
    _require(all(m >= 1 for m in ms), "every multiplicity must be positive")
    return X**n * (X + 1) ** sum(ms)


# ---------------------------------------------------------------------------
# family dispatch
# ---------------------------------------------------------------------------


def family_poly(spec: FamilySpec) -> Optional[Polynomial]:
    """Closed form for ``spec`` if one exists, else ``None``."""
    p = spec.params
    kind = spec.kind
    if kind == "star":
        return star_poly(p["n"])
    if kind == "lollipop":
        return lollipop_poly(p["m"], p["n"])
    if kind == "firecracker":
        return gen_firecracker_poly(p["ks"]) if "ks" in p else firecracker_poly(p["n"], p["k"])
    if kind == "generalized_firecracker":
        return gen_firecracker_poly(p["ks"])
    if kind == "book":
        return book_poly(p["n"])
    if kind == "generalized_friendship" and p.get("q") == 4:
        return gen_friendship4_poly(p["n"])
    if kind in ("helm", "generalized_helm"):
        return helm_poly(p["n"], p.get("m", 1))
    return None


FormulaCase = tuple[str, Graph, Polynomial]


def formula_cases(max_order: int = 11) -> list[FormulaCase]:
    """Every ``(label, graph, closed form)`` pair with graph order ``<= max_order``.

    Used by the exhaustive cross-validation suite and ``verify``.
    """
    cases: list[FormulaCase] = []

    def add(label: str, g: Graph, poly: Callable[[], Polynomial]) -> None:
        if g.n <= max_order:
            cases.append((label, g, poly()))

    for n in range(1, max_order):
        add(f"star:n={n}", make_family(FamilySpec("star", {"n": n})), lambda n=n: star_poly(n))
    for m in range(3, max_order):
        for n in range(1, max_order - m + 1):
            add(f"lollipop:m={m},n={n}", make_family(FamilySpec("lollipop", {"m": m, "n": n})),
                lambda m=m, n=n: lollipop_poly(m, n))
    for k in range(3, max_order + 1):
        for n in range(1, max_order // k + 1):
            add(f"firecracker:n={n},k={k}", make_family(FamilySpec("firecracker", {"n": n, "k": k})),
                lambda n=n, k=k: firecracker_poly(n, k))
    for ks in ((3, 4), (4, 3), (3, 5), (5, 3, 3), (3, 4, 3)):
        spec = FamilySpec("generalized_firecracker", {"ks": ks})
        add(str(spec), make_family(spec), lambda ks=ks: gen_firecracker_poly(ks))
    for n in range(1, (max_order - 2) // 2 + 1):
        add(f"book:n={n}", make_family(FamilySpec("book", {"n": n})), lambda n=n: book_poly(n))
    for n in range(1, (max_order - 1) // 3 + 1):
        add(f"generalized_friendship:n={n},q=4",
            make_family(FamilySpec("generalized_friendship", {"n": n, "q": 4})),
            lambda n=n: gen_friendship4_poly(n))
    for n in range(3, max_order):
        for m in range(1, max_order):
            if n * (m + 1) + 1 <= max_order:
                add(f"generalized_helm:n={n},m={m}",
                    make_family(FamilySpec("generalized_helm", {"n": n, "m": m})),
                    lambda n=n, m=m: helm_poly(n, m))
    bases = {
        "K_1": complete_graph(1), "K_2": complete_graph(2), "2K_1": Graph.empty(2),
        "P_3": path_graph(3), "K_3": complete_graph(3),
    }
    for name, h in bases.items():
        add(f"H(3) H={name}", p3_attach(h), lambda n=h.n: h3_poly(n))
    coronas = {
        "K_1": complete_graph(1), "K_2": complete_graph(2), "P_3": path_graph(3),
        "C_3": cycle_graph(3), "K_1+K_2": complete_graph(1).disjoint_union(complete_graph(2)),
        "3K_1": Graph.empty(3),
    }
    for name, g in coronas.items():
        r = len(g.isolated_vertices())
        for m in range(1, max_order):
            if g.n * (1 + m) <= max_order:
                add(f"corona {name} o K̄_{m}", corona(g, Graph.empty(m)),
                    lambda n=g.n, r=r, m=m: corona_kbar_poly(n, r, m))
    for name, g, ms in (("P_3", path_graph(3), (3, 2, 1)), ("K_2", complete_graph(2), (1, 1)),
                        ("K_2", complete_graph(2), (2, 1)), ("C_3", cycle_graph(3), (4, 1, 1)),
                        ("P_3", path_graph(3), (1, 1, 1))):
        add(f"sunlike {name} {list(ms)}", sunlike(g, ms), lambda n=g.n, ms=ms: sunlike_poly(n, ms))
    return cases


def verify_family(spec: FamilySpec, max_order: int = 11) -> tuple[Graph, Optional[Polynomial], Optional[Polynomial]]:
    """Return ``(graph, closed form, oracle)``; the oracle is ``None`` above ``max_order``."""
    g = make_family(spec)
    formula = family_poly(spec)
    oracle = brute_force_tdp(g) if g.n <= max_order else None
    return g, formula, oracle

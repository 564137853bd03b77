"""Exact integer polynomials and coefficient-sequence analysis.

Coefficients are Python ints (arbitrary precision) stored densely in ascending
degree order with no trailing zeros, so the zero polynomial has ``coeffs == ()``.
Real-root counting runs an exact Sturm chain over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

Number = Union[int, Fraction]

JSON_SAFE_MAX = 2**53 - 1


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"coefficients must be int, got {type(a).__name__}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: int) -> Polynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def low_degree(self) -> Optional[int]:
        """Index of the lowest nonzero coefficient, ``None`` for zero."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return None

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    # ring operations -----------------------------------------------------

    def __add__(self, other: Polynomial | int) -> Polynomial:
        return add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return add(self, -_lift(other))

    def __rsub__(self, other: int) -> Polynomial:
        return add(_lift(other), -self)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        return pow_(self, k)

    def shift(self, k: int) -> Polynomial:
        return scale_shift(self, k)

    def __call__(self, x0: Number) -> Number:
        return evaluate(self, x0)

    def to_json(self) -> list:
        """Dense ascending array; magnitudes above 2**53-1 become decimal strings."""
        return [a if abs(a) <= JSON_SAFE_MAX else str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[int | str]) -> Polynomial:
        return cls(int(a) for a in data)


def _lift(p: Polynomial | int) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return Polynomial.const(p)
    raise TypeError(f"cannot combine Polynomial with {type(p).__name__}")


X = Polynomial([0, 1])
ONE = Polynomial([1])
ZERO = Polynomial()


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial(out)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return Polynomial(out)


def pow_(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("negative exponent")
    result, base = ONE, p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def scale_shift(p: Polynomial, k: int) -> Polynomial:
    """Multiply by ``x**k``."""
    if k < 0:
        raise ValueError("negative shift")
    if not p:
        return p
    return Polynomial([0] * k + list(p.coeffs))


def evaluate(p: Polynomial, x0: Number) -> Number:
    acc: Number = 0
    for a in reversed(p.coeffs):
        acc = acc * x0 + a
    return acc


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * a for i, a in enumerate(p.coeffs) if i)


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Sparse descending form such as ``x^4+3x^3+3x^2``."""
    if not p:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        a = p.coeffs[i]
        if not a:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(s + b for s, b in terms[1:])


# ---------------------------------------------------------------------------
# rational polynomial helpers for squarefree part and Sturm chains
# (ascending lists of Fraction, trimmed)
# ---------------------------------------------------------------------------


def _qtrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lb
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] -= f * bi
        a.pop()
        _qtrim(a)
    return _qtrim(q), a


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _sign_at(c: Sequence[Fraction], x0: Fraction) -> int:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x0 + a
    return (acc > 0) - (acc < 0)


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` scaled to a primitive integer polynomial with positive lead."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    a = [Fraction(c) for c in p.coeffs]
    d = [Fraction(c) for c in derivative(p).coeffs]
    g = _qgcd(a, d) if d else [Fraction(1)]
    q, r = _qdivmod(a, g)
    assert not r
    return _primitive(q)


def _primitive(c: list[Fraction]) -> Polynomial:
    den = 1
    for a in c:
        den = lcm(den, a.denominator)
    ints = [int(a * den) for a in c]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if ints[-1] < 0:
        g = -g
    return Polynomial(a // g for a in ints)


def sturm_chain(p: Polynomial) -> list[list[Fraction]]:
    """Signed remainder sequence ``p, p', -rem(p, p'), ...``."""
    chain = [[Fraction(c) for c in p.coeffs]]
    d = [Fraction(c) for c in derivative(p).coeffs]
    if d:
        chain.append(d)
    while len(chain) > 1 and len(chain[-1]) > 1:
        r = _qdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x0: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x0) for c in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """``1 + max|a_i| / |a_n|``; every complex root lies strictly inside."""
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]) if p.degree > 0 else 0, lead)


def count_distinct_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, by Sturm's theorem on the squarefree part."""
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    b = cauchy_bound(sf)
    # Sturm counts roots in (a, b]; the bound is strict, so neither endpoint is a root.
    assert evaluate(sf, -b) != 0 and evaluate(sf, b) != 0
    chain = sturm_chain(sf)
    return _sign_changes(chain, -b) - _sign_changes(chain, b)


def is_all_real_rooted(p: Polynomial) -> bool:
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    return count_distinct_real_roots(p) == squarefree_part(p).degree


# ---------------------------------------------------------------------------
# coefficient-sequence verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceVerdict:
    """Shape of a coefficient sequence.

    Index-valued fields are absolute degrees.  ``unimodal``, ``log_concave``
    and ``symmetric`` are evaluated on the stripped window (lowest nonzero
    degree through the leading degree); ``unimodal_full`` uses degrees ``0..deg``.
    ``first_violation`` marks the bottom of the first valley when the stripped
    window is not unimodal; ``lc_violation`` is the first ``k`` with
    ``a_k**2 < a_{k-1} a_{k+1}``.
    """

    unimodal: bool
    mode: Optional[int]
    log_concave: bool
    symmetric: bool
    first_violation: Optional[int] = None
    lc_violation: Optional[int] = None
    unimodal_full: bool = True
    window: tuple[int, int] = (0, -1)

    def __post_init__(self) -> None:
        if (self.mode is not None) != self.unimodal:
            raise ValueError("mode must be present exactly when unimodal")


def _unimodal_scan(seq: Sequence[int]) -> tuple[bool, Optional[int], Optional[int]]:
    """Return ``(unimodal, first mode, valley index)`` for ``seq`` (local indices)."""
    if not seq:
        return True, None, None
    i, n = 0, len(seq)
    while i + 1 < n and seq[i + 1] >= seq[i]:
        i += 1
    j = i
    while j + 1 < n and seq[j + 1] <= seq[j]:
        j += 1
    if j + 1 < n:
        return False, None, j
    peak = max(seq)
    return True, seq.index(peak), None


def is_unimodal(seq: Sequence[int]) -> bool:
    return _unimodal_scan(seq)[0]


def is_log_concave(seq: Sequence[int]) -> bool:
    return all(seq[k] * seq[k] >= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


def is_symmetric(seq: Sequence[int]) -> bool:
    return list(seq) == list(reversed(seq))


def analyze_sequence(p: Polynomial) -> SequenceVerdict:
    """Unimodality, mode, log-concavity and symmetry of the coefficients of ``p``.

    By convention the zero polynomial is unimodal (mode 0), log-concave and
    symmetric.
    """
    if not p:
        return SequenceVerdict(True, 0, True, True, window=(0, -1))
    lo = p.low_degree()
    hi = p.degree
    win = p.coeffs[lo:]
    uni, mode, valley = _unimodal_scan(win)
    lc_bad = next((k for k in range(1, len(win) - 1) if win[k] * win[k] < win[k - 1] * win[k + 1]), None)
    return SequenceVerdict(
        unimodal=uni,
        mode=None if mode is None else lo + mode,
        log_concave=lc_bad is None,
        symmetric=is_symmetric(win),
        first_violation=None if valley is None else lo + valley,
        lc_violation=None if lc_bad is None else lo + lc_bad,
        unimodal_full=_unimodal_scan(p.coeffs)[0],
        window=(lo, hi),
    )

"""Products of full subvarieties ``R_{d_1} * ... * R_{d_s}`` and their rewriting.

A product is a tuple of nonzero dimension vectors. Rewriting uses only two
facts: ``R_d * R_e = R_{d+e}`` when ``ext(e, d)`` vanishes, and the canonical
decomposition of ``d`` lists pairwise commuting Schur roots whose product is
``R_d``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .errors import CapExceeded, NotSchur
from .quiver import Quiver
from .schofield import (
    DEFAULT_CAP,
    canonical_decomposition,
    ext_value,
    ext_vanishes,
    is_schur_root,
    order_key,
    vadd,
)
from .words import check_word

DEFAULT_NODE_CAP = 100_000


class Verdict(enum.Enum):
    EQUAL = "Equal"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ProductForm:
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        for f in self.factors:
            if not any(f):
                raise ValueError("product factors must be nonzero")

    def __len__(self):
        return len(self.factors)

    def to_json(self) -> dict:
        return {"factors": [list(f) for f in self.factors]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, Q: Quiver, text: str) -> "ProductForm":
        data = json.loads(text)
        return cls(tuple(Q.dim(f) for f in data["factors"]))


@dataclass
class Trace:
    """Instrumentation of a rewriting run: merge positions and the measure N after each step."""

    positions: list = field(default_factory=list)
    measures: list = field(default_factory=list)


def word_to_product(Q: Quiver, word) -> ProductForm:
    word = check_word(Q, word)
    return ProductForm(tuple(Q.simple(x) for x in word))


def full_space_factorization(Q: Quiver, d) -> ProductForm:
    """``R_d`` as ``R_{s_1}^{d_1} * ... * R_{s_n}^{d_n}``, simples in admissible order."""
    d = Q.dim(d)
    factors = []
    for p in Q.order:
        factors += [Q.simple(Q.vertices[p])] * d[p]
    return ProductForm(tuple(factors))


def measure(Q: Quiver, factors, cap: int = DEFAULT_CAP) -> int:
    """``N = sum_{k<l} ext(d_k, d_l)``."""
    return sum(
        ext_value(Q, factors[k], factors[l], cap)
        for k in range(len(factors))
        for l in range(k + 1, len(factors))
    )


def _check_schur(Q, P, cap):
    for f in P.factors:
        if not is_schur_root(Q, f, cap):
            raise NotSchur(f"factor {Q.display(f)} is not a Schur root")


def _mergeable(Q, a, b, cap):
    return ext_value(Q, a, b, cap) != 0 and ext_vanishes(Q, b, a, cap)


def partial_normal_form(Q: Quiver, P: ProductForm, cap: int = DEFAULT_CAP,
                        trace: Trace | None = None) -> ProductForm:
    """Merge the leftmost pair with ``ext(d_k, d_{k+1}) != 0 = ext(d_{k+1}, d_k)`` until none is left.

    The pair is replaced by the sorted canonical decomposition of ``d_k + d_{k+1}``.
    """
    _check_schur(Q, P, cap)
    factors = list(P.factors)
    if trace is not None:
        trace.measures.append(measure(Q, factors, cap))
    while True:
        k = next((k for k in range(len(factors) - 1) if _mergeable(Q, factors[k], factors[k + 1], cap)), None)
        if k is None:
            return ProductForm(tuple(factors))
        merged = canonical_decomposition(Q, vadd(factors[k], factors[k + 1]), cap)
        factors[k : k + 2] = merged
        if trace is not None:
            trace.positions.append(k)
            trace.measures.append(measure(Q, factors, cap))


def satisfies_pnf(Q: Quiver, P: ProductForm, cap: int = DEFAULT_CAP) -> bool:
    """Every adjacent pair: ``ext(d_{k+1}, d_k) = 0`` implies ``ext(d_k, d_{k+1}) = 0``."""
    f = P.factors
    return all(
        not ext_vanishes(Q, f[k + 1], f[k], cap) or ext_vanishes(Q, f[k], f[k + 1], cap)
        for k in range(len(f) - 1)
    )


def canonicalize_commuting(Q: Quiver, P: ProductForm, cap: int = DEFAULT_CAP) -> ProductForm:
    """Bubble commuting neighbours into the graded order until nothing moves."""
    factors = list(P.factors)
    moved = True
    while moved:
        moved = False
        for k in range(len(factors) - 1):
            a, b = factors[k], factors[k + 1]
            if order_key(Q, b) < order_key(Q, a) and ext_vanishes(Q, a, b, cap) and ext_vanishes(Q, b, a, cap):
                factors[k], factors[k + 1] = b, a
                moved = True
    return ProductForm(tuple(factors))


def normalize(Q: Quiver, P: ProductForm, cap: int = DEFAULT_CAP) -> ProductForm:
    """Alternate rewriting and commuting sorts until the form is stable."""
    cur = P
    while True:
        nxt = canonicalize_commuting(Q, partial_normal_form(Q, cur, cap), cap)
        if nxt == cur:
            return cur
        cur = nxt


def _moves(Q, factors, cap):
    for k in range(len(factors) - 1):
        a, b = factors[k], factors[k + 1]
        if _mergeable(Q, a, b, cap):
            yield factors[:k] + canonical_decomposition(Q, vadd(a, b), cap) + factors[k + 2 :]
        elif a != b and ext_vanishes(Q, a, b, cap) and ext_vanishes(Q, b, a, cap):
            yield factors[:k] + (b, a) + factors[k + 2 :]


def rewrite_closure(Q: Quiver, P: ProductForm, cap: int = DEFAULT_CAP,
                    node_cap: int = DEFAULT_NODE_CAP) -> frozenset:
    """All factor sequences reachable by one-sided merges and commuting swaps.

    Both moves preserve the denoted element, and merges lower ``N`` while swaps
    keep it, so the closure is finite.
    """
    _check_schur(Q, P, cap)
    start = P.factors
    seen = {start}
    stack = [start]
    while stack:
        for nxt in _moves(Q, stack.pop(), cap):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > node_cap:
                    raise CapExceeded(f"rewrite closure exceeded {node_cap} forms")
                stack.append(nxt)
    return frozenset(seen)


def decide_equal(Q: Quiver, P1: ProductForm, P2: ProductForm, cap: int = DEFAULT_CAP,
                 node_cap: int = DEFAULT_NODE_CAP) -> Verdict:
    """``EQUAL`` is a proof of equality; ``UNKNOWN`` proves nothing.

    Equal when the stable forms coincide, or failing that when the two
    rewrite closures share a form.
    """
    if normalize(Q, P1, cap) == normalize(Q, P2, cap):
        return Verdict.EQUAL
    if rewrite_closure(Q, P1, cap, node_cap) & rewrite_closure(Q, P2, cap, node_cap):
        return Verdict.EQUAL
    return Verdict.UNKNOWN

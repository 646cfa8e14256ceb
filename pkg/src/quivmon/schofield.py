"""Generic ext/hom values, Schur roots and canonical decompositions.

Everything is driven by the recursive ext-vanishing criterion: ``ext(e, d)``
vanishes iff ``<e', d> >= 0`` for every dimension vector ``e'`` of a generic
subrepresentation of a generic representation of dimension ``e``, and ``e'``
is such a subdimension iff ``ext(e', e - e')`` vanishes. The recursion is
memoized per quiver.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import CapExceeded, NonTermination, PreconditionViolated, ZeroVector
from .quiver import DimVector, Quiver, euler_form, symmetrized_form

DEFAULT_CAP = 40


def total(d: DimVector) -> int:
    return sum(d)


def vsub(a: DimVector, b: DimVector) -> DimVector:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: DimVector, b: DimVector) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def vscale(m: int, a: DimVector) -> DimVector:
    return tuple(m * x for x in a)


def leq(e: DimVector, d: DimVector) -> bool:
    return all(x <= y for x, y in zip(e, d))


def order_key(Q: Quiver, d: DimVector) -> tuple:
    """Graded order: total first, then larger entries on earlier vertices first.

    Vertices are read in admissible order, so ``sigma_1 < sigma_2 < ...`` and
    the sorted factor list of a vector starts at the sources.
    """
    return (sum(d), tuple(-d[p] for p in Q.order))


def subvectors(d: DimVector):
    """All ``e <= d`` componentwise, including ``0`` and ``d``."""
    return itertools.product(*(range(x + 1) for x in d))


def proper_subvectors(Q: Quiver, d: DimVector, reverse: bool = False) -> list:
    """``0 < e < d`` sorted by :func:`order_key`."""
    out = [e for e in subvectors(d) if any(e) and e != d]
    out.sort(key=lambda e: order_key(Q, e), reverse=reverse)
    return out


def vectors_of_total(Q: Quiver, s: int) -> list:
    """All dimension vectors with entry sum ``s``, in :func:`order_key` order."""
    out = []
    for cut in itertools.combinations(range(s + Q.n - 1), Q.n - 1):
        parts, prev = [], -1
        for c in cut:
            parts.append(c - prev - 1)
            prev = c
        parts.append(s + Q.n - 2 - prev)
        out.append(tuple(parts))
    out.sort(key=lambda e: order_key(Q, e))
    return out


def _check_cap(e, d, cap):
    if sum(e) + sum(d) > cap:
        raise CapExceeded(f"|e|+|d| = {sum(e) + sum(d)} exceeds recursion cap {cap}")


@lru_cache(maxsize=None)
def _vanish_sub(Q: Quiver, e: DimVector, d: DimVector) -> bool:
    # Subrepresentation form of the criterion.
    if not any(e) or not any(d):
        return True
    for ep in subvectors(e):
        if euler_form(Q, ep, d) >= 0:
            continue
        if _vanish_sub(Q, ep, vsub(e, ep)):
            return False
    return True


@lru_cache(maxsize=None)
def _vanish_quot(Q: Quiver, e: DimVector, d: DimVector) -> bool:
    # Quotient form: <e, d'> >= 0 for all generic quotient dimensions d' of d.
    if not any(e) or not any(d):
        return True
    for dp in subvectors(d):
        if euler_form(Q, e, dp) >= 0:
            continue
        if _vanish_quot(Q, vsub(d, dp), dp):
            return False
    return True


def ext_vanishes(Q: Quiver, e, d, cap: int = DEFAULT_CAP, mode: str = "sub") -> bool:
    """True iff ``ext(R_e, R_d) = 0``, i.e. ``R_d * R_e = R_{d+e}``.

    ``mode="quot"`` runs the dual recursion over generic quotients of ``d``;
    it is an independent route to the same answer.
    """
    e, d = Q.dim(e), Q.dim(d)
    _check_cap(e, d, cap)
    if mode == "sub":
        return _vanish_sub(Q, e, d)
    if mode == "quot":
        return _vanish_quot(Q, e, d)
    raise ValueError(f"unknown mode {mode!r}")


@lru_cache(maxsize=None)
def _ext_value(Q: Quiver, e: DimVector, d: DimVector) -> int:
    best = 0
    for ep in subvectors(e):
        v = -euler_form(Q, ep, d)
        if v > best and _vanish_sub(Q, ep, vsub(e, ep)):
            best = v
    return best


def ext_value(Q: Quiver, e, d, cap: int = DEFAULT_CAP) -> int:
    """Generic ``dim Ext(X, Y)`` for ``X`` of dimension ``e`` and ``Y`` of dimension ``d``."""
    e, d = Q.dim(e), Q.dim(d)
    _check_cap(e, d, cap)
    return _ext_value(Q, e, d)


def generic_hom(Q: Quiver, e, d, cap: int = DEFAULT_CAP) -> int:
    """Generic ``dim Hom(X, Y)`` for ``X`` of dimension ``e`` and ``Y`` of dimension ``d``."""
    e, d = Q.dim(e), Q.dim(d)
    return ext_value(Q, e, d, cap) + euler_form(Q, e, d)


def _splits(Q, d, cap, reverse=False):
    for e in proper_subvectors(Q, d, reverse=reverse):
        f = vsub(d, e)
        if ext_vanishes(Q, e, f, cap) and ext_vanishes(Q, f, e, cap):
            yield e, f


def is_schur_root(Q: Quiver, d, cap: int = DEFAULT_CAP) -> bool:
    d = Q.dim(d)
    if not any(d):
        raise ZeroVector("Schur root test needs a nonzero vector")
    return next(_splits(Q, d, cap), None) is None


def canonical_decomposition(Q: Quiver, d, cap: int = DEFAULT_CAP, reverse: bool = False) -> tuple:
    """The canonical decomposition of ``d`` as a sorted tuple of Schur roots.

    ``reverse=True`` searches splits in the opposite order; the result must
    not change.
    """
    d = Q.dim(d)
    if not any(d):
        raise ZeroVector("canonical decomposition needs a nonzero vector")
    return tuple(sorted(_candec(Q, d, cap, reverse), key=lambda v: order_key(Q, v)))


def _candec(Q, d, cap, reverse):
    split = next(_splits(Q, d, cap, reverse), None)
    if split is None:
        return [d]
    e, f = split
    return _candec(Q, e, cap, reverse) + _candec(Q, f, cap, reverse)


def is_isotropic_root(Q: Quiver, d, max_steps: int | None = None) -> bool:
    """Decide whether ``d`` is a positive imaginary root with ``<d, d> = 0``."""
    d = Q.dim(d)
    if not any(d):
        raise ZeroVector("isotropy test needs a nonzero vector")
    if euler_form(Q, d, d) != 0:
        return False
    simples = [tuple(int(p == i) for p in range(Q.n)) for i in range(Q.n)]
    if max_steps is None:
        max_steps = 10 * sum(d) * Q.n
    cur = list(d)
    for _ in range(max_steps + 1):
        pairings = [symmetrized_form(Q, tuple(cur), s) for s in simples]
        hot = next((i for i in range(Q.n) if pairings[i] > 0), None)
        if hot is None:
            support = [i for i in range(Q.n) if cur[i] > 0]
            return bool(support) and _connected(Q, support)
        cur[hot] -= pairings[hot]
        if cur[hot] < 0:
            return False
    raise NonTermination(f"reflection descent from {d} exceeded {max_steps} steps")


def _connected(Q, support):
    support = set(support)
    adj = {i: set() for i in support}
    for t, h in Q.arrow_indices:
        if t in support and h in support:
            adj[t].add(h)
            adj[h].add(t)
    start = next(iter(support))
    seen, stack = {start}, [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == support


def enumerate_obs_relations(Q: Quiver, bound: int, cap: int = DEFAULT_CAP) -> list:
    """All ``(d, e)`` with ``R_d * R_e = R_{d+e}`` and ``0 < |d|, |e|``, ``|d|+|e| <= bound``."""
    if bound > cap:
        raise CapExceeded(f"bound {bound} exceeds recursion cap {cap}")
    by_total = {s: vectors_of_total(Q, s) for s in range(1, bound)}
    out = []
    for s in range(2, bound + 1):
        for sd in range(1, s):
            for d in by_total[sd]:
                for e in by_total[s - sd]:
                    if _vanish_sub(Q, e, d):
                        out.append((d, e))
    out.sort(key=lambda p: (sum(p[0]) + sum(p[1]), order_key(Q, p[0]), order_key(Q, p[1])))
    return out


def drel3_threshold(n: int, k: int, x: int) -> int:
    """Least integer ``>= (n - 1/k) x``."""
    if not (1 <= k <= n) or x < k:
        raise PreconditionViolated(f"need 1 <= k <= n and x >= k, got n={n}, k={k}, x={x}")
    return -((-(n * k - 1) * x) // k)


def clear_caches() -> None:
    _vanish_sub.cache_clear()
    _vanish_quot.cache_clear()
    _ext_value.cache_clear()

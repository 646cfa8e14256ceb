"""Brute-force semantics over small prime fields.

Points of ``R_d(F_q)`` are enumerated exhaustively; families ``E_w`` are
computed by deciding composition-series membership point by point. All
sets are exact, so the oracle falsifies identities rather than proving
them (equality of F_q-points is necessary, not sufficient).
"""

from __future__ import annotations

import hashlib
import math
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AmbiguousTop, CapExceeded, DegreeMismatch, Mismatch, NotDynkin
from .fields import (
    check_prime,
    galois_field,
    gl_generators,
    gl_order,
    rank_mod,
)
from .quiver import DimVector, Quiver, ambient_dims, euler_form
from .words import check_word, word_degree, words_of_degree

DEFAULT_ENUM_CAP = 2**24
DEFAULT_GROUP_CAP = 2**22


def _shapes(Q: Quiver, d: DimVector) -> list:
    return [(d[h], d[t]) for t, h in Q.arrow_indices]


def _header(q, d) -> bytes:
    return f"{q}|{','.join(map(str, d))}|".encode()


@dataclass(frozen=True, eq=False)
class FqRep:
    """A representation over F_q: one ``d_head x d_tail`` matrix per arrow."""

    quiver: Quiver
    q: int
    dim: DimVector
    mats: tuple

    @classmethod
    def from_entries(cls, Q, q, d, entries):
        entries = list(entries)
        mats, pos = [], 0
        for r, c in _shapes(Q, d):
            mats.append(np.array(entries[pos : pos + r * c], dtype=np.int64).reshape(r, c))
            pos += r * c
        return cls(Q, q, tuple(d), tuple(mats))

    @classmethod
    def decode(cls, Q, key: bytes):
        q_txt, d_txt, body = key.split(b"|", 2)
        d = tuple(int(x) for x in d_txt.decode().split(",")) if d_txt else ()
        return cls.from_entries(Q, int(q_txt), d, list(body))

    @classmethod
    def zero(cls, Q, q, d):
        return cls.from_entries(Q, q, d, [0] * ambient_dims(Q, d)[0])

    def entries(self) -> bytes:
        return b"".join(m.astype(np.uint8).tobytes() for m in self.mats)

    def key(self) -> bytes:
        return _header(self.q, self.dim) + self.entries()

    def __eq__(self, other):
        return isinstance(other, FqRep) and self.quiver == other.quiver and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True)
class FamilySet:
    q: int
    dim: DimVector
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, X):
        return (X.key() if isinstance(X, FqRep) else X) in self.members

    def reps(self, Q):
        for key in sorted(self.members):
            yield FqRep.decode(Q, key)

    def digest(self) -> dict:
        h = hashlib.sha256()
        for key in sorted(self.members):
            h.update(key)
            h.update(b"\n")
        return {"q": self.q, "dim": list(self.dim), "count": len(self.members), "sha256": h.hexdigest()}


def _check_enum(Q, d, q, cap):
    check_prime(q)
    dim_r = ambient_dims(Q, d)[0]
    if q**dim_r > cap:
        raise CapExceeded(f"|R_d(F_{q})| = {q}^{dim_r} exceeds enumeration cap {cap}")
    return dim_r


def enumerate_reps(Q: Quiver, d, q: int, cap: int = DEFAULT_ENUM_CAP):
    """Every point of ``R_d(F_q)`` once, arrows in order, entries row-major."""
    d = Q.dim(d)
    dim_r = _check_enum(Q, d, q, cap)
    for entries in itertools.product(range(q), repeat=dim_r):
        yield FqRep.from_entries(Q, q, d, entries)


def all_keys(Q: Quiver, d, q: int, cap: int = DEFAULT_ENUM_CAP) -> frozenset:
    d = Q.dim(d)
    dim_r = _check_enum(Q, d, q, cap)
    head = _header(q, d)
    return frozenset(head + bytes(e) for e in itertools.product(range(q), repeat=dim_r))


# ---------------------------------------------------------------- composition series


def has_comp_series(X: FqRep, word, field_degree: int = 1) -> bool:
    """Does ``X`` have a filtration with successive top factors ``E_{w_1}, E_{w_2}, ...``?

    Subrepresentations are searched over ``F_{q^m}`` with ``m = field_degree``;
    ``m = 1`` asks for a filtration defined over F_q itself.
    """
    Q = X.quiver
    word = check_word(Q, word)
    if word_degree(Q, word) != X.dim:
        raise DegreeMismatch(f"word {word} does not have degree {X.dim}")
    K = galois_field(X.q, field_degree)
    return _hcs(Q, K, X.dim, X.entries(), tuple(Q.index(x) for x in word))


@lru_cache(maxsize=500_000)
def _hcs(Q, K, dim, entries, word):
    if not word:
        return True
    i = word[0]
    n = dim[i]
    if n == 0:
        return False
    mats = FqRep.from_entries(Q, K.order, dim, entries).mats
    arrows = Q.arrow_indices
    incoming = [m for (t, h), m in zip(arrows, mats) if h == i and m.size]
    if incoming:
        functionals = K.nullspace(np.hstack(incoming).T)
    else:
        functionals = np.eye(n, dtype=np.int64)
    sub_dim = dim[:i] + (n - 1,) + dim[i + 1 :]
    rest = word[1:]
    for phi in K.projective_points(functionals):
        p = int(np.flatnonzero(phi)[0])
        phi = K.mul[phi, K.inv[phi[p]]]
        # H = ker phi has basis e_j - phi_j e_p (j != p); coordinates drop entry p
        keep = [j for j in range(n) if j != p]
        incl = np.zeros((n, n - 1), dtype=np.int64)
        for col, j in enumerate(keep):
            incl[j, col] = 1
            incl[p, col] = K.neg[phi[j]]
        new = []
        for (t, h), m in zip(arrows, mats):
            if h == i:
                m = m[keep, :]
            elif t == i:
                m = K.matmul(m, incl)
            new.append(m)
        sub_entries = b"".join(m.astype(np.uint8).tobytes() for m in new)
        if _hcs(Q, K, sub_dim, sub_entries, rest):
            return True
    return False


def splitting_bound(Q: Quiver, d: DimVector) -> int:
    """Largest ``k`` with ``k e <= d`` for some imaginary ``e`` (``<e, e> <= 0``, connected support).

    An F_q-indecomposable of dimension ``<= d`` that splits over the algebraic
    closure does so into ``k`` conjugate pieces of one imaginary dimension ``e``.
    """
    from .schofield import _connected, subvectors

    best = 1
    for e in subvectors(d):
        if not any(e) or euler_form(Q, e, e) > 0:
            continue
        if not _connected(Q, [i for i in range(Q.n) if e[i]]):
            continue
        k = min(x // y for x, y in zip(d, e) if y)
        best = max(best, k)
    return best


def default_field_degree(Q: Quiver, d: DimVector) -> int:
    """``lcm(1..k)`` for the splitting bound ``k``; 1 for Dynkin quivers."""
    return math.lcm(*range(1, splitting_bound(Q, d) + 1))


def variety_points(Q: Quiver, word, q: int, cap: int = DEFAULT_ENUM_CAP,
                   field_degree: int | None = None) -> FamilySet:
    """The F_q-points of ``E_w``: points with a filtration of type ``w`` over ``F_{q^m}``."""
    word = check_word(Q, word)
    if field_degree is None:
        field_degree = default_field_degree(Q, word_degree(Q, word))
    return _variety_points(Q, word, q, cap, field_degree)


@lru_cache(maxsize=4096)
def _variety_points(Q, word, q, cap, field_degree):
    d = word_degree(Q, word)
    K = galois_field(q, field_degree)
    idx = tuple(Q.index(x) for x in word)
    members = []
    for X in enumerate_reps(Q, d, q, cap):
        if _hcs(Q, K, d, X.entries(), idx):
            members.append(X.key())
    return FamilySet(q, d, frozenset(members))


def pattern_points(Q: Quiver, word, q: int, cap: int = DEFAULT_ENUM_CAP) -> FamilySet:
    """Points whose matrices vanish on the forced-zero pattern of ``word``."""
    from .words import zero_pattern

    word = check_word(Q, word)
    d = word_degree(Q, word)
    masks = zero_pattern(Q, word)
    members = []
    for X in enumerate_reps(Q, d, q, cap):
        if all(not m[mask].any() for m, mask in zip(X.mats, masks)):
            members.append(X.key())
    return FamilySet(q, d, frozenset(members))


@dataclass(frozen=True)
class FamilyComparison:
    relation: str  # "equal", "first_in_second", "second_in_first", "incomparable"
    size_first: int
    size_second: int
    size_common: int


def compare_families(S1: FamilySet, S2: FamilySet) -> FamilyComparison:
    if S1.q != S2.q or S1.dim != S2.dim:
        raise Mismatch(f"cannot compare families over (F_{S1.q}, {S1.dim}) and (F_{S2.q}, {S2.dim})")
    a, b = S1.members, S2.members
    if a == b:
        rel = "equal"
    elif a < b:
        rel = "first_in_second"
    elif b < a:
        rel = "second_in_first"
    else:
        rel = "incomparable"
    return FamilyComparison(rel, len(a), len(b), len(a & b))


# ---------------------------------------------------------------- hom / ext / orbits


def hom_dim(X: FqRep, Y: FqRep) -> int:
    """``dim Hom(X, Y)``: solutions of ``f_h X_a = Y_a f_t`` for every arrow ``a: t -> h``."""
    if X.quiver != Y.quiver or X.q != Y.q:
        raise Mismatch("representations over different quivers or fields")
    Q, q = X.quiver, X.q
    offsets, n_unknowns = [], 0
    for dx, dy in zip(X.dim, Y.dim):
        offsets.append(n_unknowns)
        n_unknowns += dx * dy
    if n_unknowns == 0:
        return 0
    blocks = []
    for (t, h), xm, ym in zip(Q.arrow_indices, X.mats, Y.mats):
        rows = Y.dim[h] * X.dim[t]
        if rows == 0:
            continue
        block = np.zeros((rows, n_unknowns), dtype=np.int64)
        # column-major vec: vec(f X) = (X^T kron I) vec(f), vec(Y f) = (I kron Y) vec(f)
        if Y.dim[h] * X.dim[h]:
            block[:, offsets[h] : offsets[h] + Y.dim[h] * X.dim[h]] += np.kron(
                xm.T, np.eye(Y.dim[h], dtype=np.int64)
            )
        if Y.dim[t] * X.dim[t]:
            block[:, offsets[t] : offsets[t] + Y.dim[t] * X.dim[t]] -= np.kron(
                np.eye(X.dim[t], dtype=np.int64), ym
            )
        blocks.append(block)
    if not blocks:
        return n_unknowns
    return n_unknowns - rank_mod(np.vstack(blocks) % q, q)


def end_dim(X: FqRep) -> int:
    return hom_dim(X, X)


def ext_dim(X: FqRep, Y: FqRep) -> int:
    """``dim Ext^1(X, Y)`` from the hereditary identity ``hom - ext = <dim X, dim Y>``."""
    return hom_dim(X, Y) - euler_form(X.quiver, X.dim, Y.dim)


def orbit_dim(X: FqRep) -> int:
    return ambient_dims(X.quiver, X.dim)[1] - end_dim(X)


def _act(Q, q, d, mats, v, g, gi):
    out = []
    for (t, h), m in zip(Q.arrow_indices, mats):
        if h == v:
            m = (g @ m) % q
        if t == v:
            m = (m @ gi) % q
        out.append(m)
    return out


@lru_cache(maxsize=64)
def orbit_labels(Q: Quiver, d: DimVector, q: int, cap: int = DEFAULT_ENUM_CAP,
                 group_cap: int = DEFAULT_GROUP_CAP) -> dict:
    """Map each point key of ``R_d(F_q)`` to the smallest key in its ``G_d(F_q)``-orbit."""
    d = Q.dim(d)
    group = 1
    for x in d:
        group *= gl_order(x, q)
    if group > group_cap:
        raise CapExceeded(f"|G_d(F_{q})| = {group} exceeds group cap {group_cap}")
    gens = [(v, g, gi) for v in range(Q.n) for g, gi in gl_generators(d[v], q)]
    head = _header(q, d)
    labels = {}
    for X in enumerate_reps(Q, d, q, cap):
        start = X.key()
        if start in labels:
            continue
        orbit = {start}
        queue = deque([X.mats])
        while queue:
            mats = queue.popleft()
            for v, g, gi in gens:
                new = _act(Q, q, d, mats, v, g, gi)
                key = head + b"".join(m.astype(np.uint8).tobytes() for m in new)
                if key not in orbit:
                    orbit.add(key)
                    queue.append(new)
        label = min(orbit)
        for key in orbit:
            labels[key] = label
    return labels


def is_g_stable(Q: Quiver, S: FamilySet) -> bool:
    labels = orbit_labels(Q, S.dim, S.q)
    by_label = {}
    for key, lab in labels.items():
        by_label.setdefault(lab, set()).add(key)
    return all(by_label[labels[key]] <= S.members for key in S.members)


def saturate(Q: Quiver, S: FamilySet) -> FamilySet:
    """Smallest G-stable set containing ``S``."""
    labels = orbit_labels(Q, S.dim, S.q)
    hit = {labels[key] for key in S.members}
    return FamilySet(S.q, S.dim, frozenset(k for k, lab in labels.items() if lab in hit))


def variety_dim(Q: Quiver, word, q: int, dynkin: bool = False, cap: int = DEFAULT_ENUM_CAP) -> tuple:
    """``(lower, exact)`` for ``dim E_w``.

    ``lower`` is the largest orbit dimension met by an F_q-point. ``exact`` is
    filled in only for representation-finite quivers, where ``E_w`` is an
    orbit closure whose dense orbit has F_q-points.
    """
    S = variety_points(Q, word, q, cap)
    lower = max(orbit_dim(X) for X in S.reps(Q))
    return lower, (lower if dynkin else None)


def top_class(Q: Quiver, S: FamilySet) -> bytes:
    """Orbit label of the points of maximal orbit dimension in ``S``."""
    reps = list(S.reps(Q))
    dims = [orbit_dim(X) for X in reps]
    top = max(dims)
    labels = orbit_labels(Q, S.dim, S.q)
    classes = {labels[X.key()] for X, od in zip(reps, dims) if od == top}
    if len(classes) != 1:
        raise AmbiguousTop(f"{len(classes)} non-isomorphic classes of maximal orbit dimension {top}")
    return classes.pop()


def dynkin_equal(Q: Quiver, w1, w2, q: int = 2, dynkin: bool = False) -> bool:
    """Equality of ``E_w1`` and ``E_w2`` for a representation-finite quiver."""
    if not dynkin:
        raise NotDynkin("dynkin_equal needs the quiver to be flagged representation-finite")
    w1, w2 = check_word(Q, w1), check_word(Q, w2)
    if word_degree(Q, w1) != word_degree(Q, w2):
        raise DegreeMismatch(f"words {w1} and {w2} have different degrees")
    S1, S2 = variety_points(Q, w1, q), variety_points(Q, w2, q)
    same_top = top_class(Q, S1) == top_class(Q, S2)
    same_set = S1 == S2
    if same_top != same_set:
        raise RuntimeError(
            f"internal inconsistency: top orbits {'agree' if same_top else 'differ'} "
            f"but point sets {'agree' if same_set else 'differ'} for {w1} vs {w2}"
        )
    return same_set


def s_d_points(Q: Quiver, d, q: int, cap: int = DEFAULT_ENUM_CAP) -> FamilySet:
    """F_q-points outside every family ``E_w`` (``w`` of degree ``d``) that is not all of ``R_d``."""
    d = Q.dim(d)
    everything = all_keys(Q, d, q, cap)
    out = set(everything)
    for w in words_of_degree(Q, d):
        S = variety_points(Q, w, q, cap)
        if S.members != everything:
            out -= S.members
    return FamilySet(q, d, frozenset(out))


def _min_over_pairs(pairs, value, floor):
    best = None
    for X, Y in pairs:
        v = value(X, Y)
        if best is None or v < best:
            best = v
            if best <= floor:
                break
    return best


def generic_ext_oracle(Q: Quiver, e, d, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Min of ``dim Ext(B, A)`` over ``A`` in ``R_d(F_q)``, ``B`` in ``R_e(F_q)``."""
    e, d = Q.dim(e), Q.dim(d)
    floor = max(0, -euler_form(Q, e, d))
    A_pts = list(enumerate_reps(Q, d, q, cap))
    B_pts = list(enumerate_reps(Q, e, q, cap))
    return _min_over_pairs(itertools.product(B_pts, A_pts), ext_dim, floor)


def generic_hom_oracle(Q: Quiver, e, d, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    e, d = Q.dim(e), Q.dim(d)
    floor = max(0, euler_form(Q, e, d))
    A_pts = list(enumerate_reps(Q, d, q, cap))
    B_pts = list(enumerate_reps(Q, e, q, cap))
    return _min_over_pairs(itertools.product(B_pts, A_pts), hom_dim, floor)


def top_points(Q: Quiver, S: FamilySet) -> list:
    """Members of maximal orbit dimension."""
    reps = list(S.reps(Q))
    dims = [orbit_dim(X) for X in reps]
    top = max(dims)
    return [X for X, od in zip(reps, dims) if od == top]


def family_hom(Q: Quiver, S1: FamilySet, S2: FamilySet, top_only: bool = False) -> int:
    """Min of ``dim Hom(X, Y)`` over ``X`` in ``S1``, ``Y`` in ``S2``.

    ``top_only`` restricts to points of maximal orbit dimension, which gives
    the generic value when each family is an orbit closure.
    """
    if S1.q != S2.q:
        raise Mismatch("families over different fields")
    A = top_points(Q, S1) if top_only else list(S1.reps(Q))
    B = top_points(Q, S2) if top_only else list(S2.reps(Q))
    floor = max(0, euler_form(Q, S1.dim, S2.dim))
    return _min_over_pairs(itertools.product(A, B), hom_dim, floor)


def clear_caches() -> None:
    _hcs.cache_clear()
    _variety_points.cache_clear()
    orbit_labels.cache_clear()

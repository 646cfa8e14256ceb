"""Quivers, dimension vectors and the Euler form."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .errors import (
    ArithmeticOverflow,
    DuplicateVertex,
    LoopArrow,
    MalformedSpec,
    OrientedCycle,
    PreconditionViolated,
    UnknownVertex,
)

INT64_MAX = 2**63 - 1
ENTRY_CAP = 10**6

DimVector = tuple  # tuple[int, ...] indexed like Quiver.vertices
DimLike = Union[Mapping[str, int], Sequence[int]]


@dataclass(frozen=True)
class Quiver:
    """A finite loop-free quiver without oriented cycles.

    Parallel arrows are repeated ``(tail, head)`` pairs. Dimension vectors
    are plain integer tuples indexed like ``vertices``.
    """

    vertices: tuple
    arrows: tuple
    _index: dict = field(init=False, repr=False, compare=False)
    _arrow_idx: tuple = field(init=False, repr=False, compare=False)
    _order: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        arrows = tuple((str(t), str(h)) for t, h in self.arrows)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        index = {}
        for pos, v in enumerate(verts):
            if v in index:
                raise DuplicateVertex(f"duplicate vertex {v!r}")
            index[v] = pos
        for t, h in arrows:
            for v in (t, h):
                if v not in index:
                    raise UnknownVertex(f"arrow {t}->{h} uses unknown vertex {v!r}")
            if t == h:
                raise LoopArrow(f"loop arrow at vertex {t!r}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_arrow_idx", tuple((index[t], index[h]) for t, h in arrows))
        object.__setattr__(self, "_order", _kahn(len(verts), self._arrow_idx, verts))

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def arrow_indices(self) -> tuple:
        """Arrows as ``(tail_pos, head_pos)`` pairs of vertex positions."""
        return self._arrow_idx

    @property
    def order(self) -> tuple:
        """Vertex positions in admissible order."""
        return self._order

    @property
    def rank(self) -> dict:
        return {self.vertices[p]: r for r, p in enumerate(self._order)}

    def index(self, vertex) -> int:
        try:
            return self._index[str(vertex)]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vertex!r}") from None

    def arrow_count(self, tail, head) -> int:
        t, h = self.index(tail), self.index(head)
        return sum(1 for a in self._arrow_idx if a == (t, h))

    def arrow_matrix(self) -> list:
        """``m[i][j]`` = number of arrows from position i to position j."""
        m = [[0] * self.n for _ in range(self.n)]
        for t, h in self._arrow_idx:
            m[t][h] += 1
        return m

    def dim(self, d: DimLike) -> DimVector:
        """Normalize a mapping or sequence into a validated dimension vector."""
        if isinstance(d, Mapping):
            out = [0] * self.n
            for v, x in d.items():
                out[self.index(v)] = x
        else:
            out = list(d)
            if len(out) != self.n:
                raise PreconditionViolated(
                    f"dimension vector of length {len(out)} for quiver with {self.n} vertices"
                )
        for x in out:
            if not isinstance(x, int) or isinstance(x, bool):
                raise PreconditionViolated(f"non-integer entry {x!r}")
            if x < 0:
                raise PreconditionViolated(f"negative entry {x}")
            if x > ENTRY_CAP:
                raise ArithmeticOverflow(f"entry {x} exceeds cap {ENTRY_CAP}")
        return tuple(out)

    def simple(self, vertex) -> DimVector:
        out = [0] * self.n
        out[self.index(vertex)] = 1
        return tuple(out)

    def zero(self) -> DimVector:
        return (0,) * self.n

    def display(self, d: DimVector) -> dict:
        return {v: x for v, x in zip(self.vertices, d)}


def _kahn(n, arrows, names):
    indeg = [0] * n
    succ = [[] for _ in range(n)]
    for t, h in arrows:
        indeg[h] += 1
        succ[t].append(h)
    ready = [p for p in range(n) if indeg[p] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        p = heapq.heappop(ready)
        order.append(p)
        for h in succ[p]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    if len(order) != n:
        stuck = [names[p] for p in range(n) if indeg[p] > 0]
        raise OrientedCycle(f"oriented cycle through vertices {stuck}")
    return tuple(order)


def parse_quiver(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise MalformedSpec("expected an object with 'vertices' and 'arrows'")
    verts = data["vertices"]
    arrows = data.get("arrows", [])
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise MalformedSpec("'vertices' must be a list of strings")
    if not isinstance(arrows, list):
        raise MalformedSpec("'arrows' must be a list")
    for a in arrows:
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(v, str) for v in a)):
            raise MalformedSpec(f"arrow {a!r} is not a [tail, head] pair of strings")
    return Quiver(tuple(verts), tuple(tuple(a) for a in arrows))


def serialize_quiver(Q: Quiver) -> str:
    return json.dumps({"vertices": list(Q.vertices), "arrows": [list(a) for a in Q.arrows]})


def parse_dim(Q: Quiver, text: str) -> DimVector:
    """Parse a DimVector JSON object (missing vertices are zero)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedSpec("dimension vector must be a JSON object")
    return Q.dim(data)


def _checked(x: int) -> int:
    if abs(x) > INT64_MAX:
        raise ArithmeticOverflow(f"intermediate value {x} exceeds 64-bit range")
    return x


def euler_form(Q: Quiver, d: DimVector, e: DimVector) -> int:
    """``<d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j``."""
    total = 0
    for x, y in zip(d, e):
        total = _checked(total + _checked(x * y))
    for t, h in Q.arrow_indices:
        total = _checked(total - _checked(d[t] * e[h]))
    return total


def symmetrized_form(Q: Quiver, d: DimVector, e: DimVector) -> int:
    return _checked(euler_form(Q, d, e) + euler_form(Q, e, d))


def ambient_dims(Q: Quiver, d: DimVector) -> tuple:
    """Return ``(dim R_d, dim G_d)``."""
    dim_r = 0
    for t, h in Q.arrow_indices:
        dim_r = _checked(dim_r + _checked(d[t] * d[h]))
    dim_g = 0
    for x in d:
        dim_g = _checked(dim_g + _checked(x * x))
    return dim_r, dim_g


def admissible_order(Q: Quiver) -> tuple:
    """Vertex names in topological order, ties broken by input position."""
    return tuple(Q.vertices[p] for p in Q.order)


# Small named quivers used throughout tests and demos.

def kronecker(arrows: int = 2) -> Quiver:
    return Quiver(("1", "2"), (("1", "2"),) * arrows)


def generalized_kronecker(arrows: int) -> Quiver:
    return Quiver(("i", "j"), (("i", "j"),) * arrows)


def a2() -> Quiver:
    return Quiver(("i", "j"), (("i", "j"),))


def a3_linear() -> Quiver:
    return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3")))


def a3_sink() -> Quiver:
    """``i -> j <- k``."""
    return Quiver(("i", "j", "k"), (("i", "j"), ("k", "j")))


def double_kronecker_chain() -> Quiver:
    """``i => j => k`` with two arrows at each step."""
    return Quiver(("i", "j", "k"), (("i", "j"), ("i", "j"), ("j", "k"), ("j", "k")))


def one_vertex(name: str = "a") -> Quiver:
    return Quiver((name,), ())

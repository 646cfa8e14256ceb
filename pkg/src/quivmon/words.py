"""Words over the vertex alphabet as composition types.

A word ``(i_1 ... i_s)`` names the family of representations with a
composition series whose top factor is ``E_{i_1}`` and whose socle factor
is ``E_{i_s}``.
"""

from __future__ import annotations

from collections import Counter, deque

import networkx as nx
import numpy as np

from .errors import CapExceeded, DegreeMismatch, UnknownVertex
from .quiver import DimVector, Quiver

DEFAULT_NODE_CAP = 10**6


def parse_word(Q: Quiver, text: str) -> tuple:
    """Comma/whitespace separated vertex names, or a compact string of one-character names."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or any(c.isspace() for c in text):
        letters = [t for t in text.replace(",", " ").split() if t]
    elif all(len(v) == 1 for v in Q.vertices):
        letters = list(text)
    else:
        letters = [text]
    return check_word(Q, letters)


def check_word(Q: Quiver, word) -> tuple:
    word = tuple(str(x) for x in word)
    for x in word:
        if x not in Q.vertices:
            raise UnknownVertex(f"letter {x!r} is not a vertex")
    return word


def format_word(word) -> str:
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return ",".join(word)


def word_degree(Q: Quiver, word) -> DimVector:
    word = check_word(Q, word)
    counts = Counter(word)
    return tuple(counts[v] for v in Q.vertices)


def v_function(word) -> tuple:
    """``v(k)`` = how many times ``i_k`` occurs at positions ``>= k``."""
    seen = Counter()
    out = []
    for x in reversed(tuple(word)):
        seen[x] += 1
        out.append(seen[x])
    return tuple(reversed(out))


def zero_pattern(Q: Quiver, word) -> list:
    """Forced zeros for each arrow, in arrow order.

    Entry ``[r-1, c-1]`` of the boolean matrix for ``a: s -> t`` is True when
    some ``k < l`` has ``i_k = t``, ``i_l = s``, ``v(k) = r`` and ``v(l) = c``.
    Rows are indexed by v-values at the head, columns by v-values at the tail.
    """
    word = check_word(Q, word)
    deg = dict(zip(Q.vertices, word_degree(Q, word)))
    v = v_function(word)
    patterns = []
    for tail, head in Q.arrows:
        mask = np.zeros((deg[head], deg[tail]), dtype=bool)
        for k, x in enumerate(word):
            if x != head:
                continue
            for l in range(k + 1, len(word)):
                if word[l] == tail:
                    mask[v[k] - 1, v[l] - 1] = True
        patterns.append(mask)
    return patterns


def render_pattern(mask) -> str:
    return "\n".join(" ".join("0" if z else "*" for z in row) for row in mask)


def words_of_degree(Q: Quiver, d: DimVector, cap: int = DEFAULT_NODE_CAP) -> list:
    """All words of degree ``d`` in lexicographic order of admissible ranks."""
    from math import factorial

    count = factorial(sum(d))
    for x in d:
        count //= factorial(x)
    if count > cap:
        raise CapExceeded(f"{count} words of degree {d} exceed cap {cap}")
    letters = [Q.vertices[p] for p in Q.order]
    need = {Q.vertices[p]: d[p] for p in range(Q.n)}
    out = []

    def rec(prefix):
        if len(prefix) == sum(d):
            out.append(tuple(prefix))
            return
        for x in letters:
            if need[x]:
                need[x] -= 1
                prefix.append(x)
                rec(prefix)
                prefix.pop()
                need[x] += 1

    rec([])
    return out


def _swaps(rank, word):
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if rank[a] < rank[b]:
            yield word[:k] + (b, a) + word[k + 2 :]


def word_leq(Q: Quiver, w1, w2, cap: int = DEFAULT_NODE_CAP) -> bool:
    """Is ``w2`` reachable from ``w1`` by turning adjacent ``(i j)``, ``i < j``, into ``(j i)``?"""
    w1, w2 = check_word(Q, w1), check_word(Q, w2)
    if word_degree(Q, w1) != word_degree(Q, w2):
        raise DegreeMismatch(f"words {w1} and {w2} have different degrees")
    rank = Q.rank
    # each swap raises the inversion count by one
    target_inv = _inversions(rank, w2)
    seen = {w1}
    queue = deque([w1])
    while queue:
        w = queue.popleft()
        if w == w2:
            return True
        if _inversions(rank, w) >= target_inv:
            continue
        for nxt in _swaps(rank, w):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"word-order search exceeded {cap} nodes")
                queue.append(nxt)
    return False


def _inversions(rank, word):
    r = [rank[x] for x in word]
    return sum(1 for a in range(len(r)) for b in range(a + 1, len(r)) if r[a] > r[b])


def inclusion_implied(Q: Quiver, w1, w2, cap: int = DEFAULT_NODE_CAP) -> bool:
    """True certifies that the family of ``w1`` contains that of ``w2``; False certifies nothing."""
    return word_leq(Q, w1, w2, cap)


def hasse_diagram(Q: Quiver, d, cap: int = DEFAULT_NODE_CAP) -> nx.DiGraph:
    """Cover relations of the word order on all words of degree ``d``.

    Edges run from the smaller word to the larger one.
    """
    d = Q.dim(d)
    nodes = words_of_degree(Q, d, cap)
    rank = Q.rank
    swaps = nx.DiGraph()
    swaps.add_nodes_from(nodes)
    for w in nodes:
        swaps.add_edges_from((w, nxt) for nxt in _swaps(rank, w))
    reduced = nx.transitive_reduction(swaps)
    out = nx.DiGraph()
    out.add_nodes_from(nodes)
    out.add_edges_from(sorted(reduced.edges(), key=lambda e: (nodes.index(e[0]), nodes.index(e[1]))))
    return out


def codim_lower_bound(Q: Quiver, word) -> int:
    """``-sum_i c_i (c_i - 1) / 2 + sum_{k<l} #arrows(i_l -> i_k)``."""
    word = check_word(Q, word)
    counts = word_degree(Q, word)
    arrows = Q.arrow_matrix()
    pos = [Q.index(x) for x in word]
    bound = -sum(c * (c - 1) // 2 for c in counts)
    for k in range(len(pos)):
        for l in range(k + 1, len(pos)):
            bound += arrows[pos[l]][pos[k]]
    return bound

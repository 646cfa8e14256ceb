"""The free algebra on generators ``E_i`` over Q[q], quantum Serre relations and q = 0.

Words in generators reuse vertex words: ``E_i`` is the one-letter word ``(i,)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import CapExceeded, DegreeMismatch, NonPolynomialDivision, PreconditionViolated
from .quiver import DimVector, Quiver
from .words import check_word, word_degree, words_of_degree

DEFAULT_WORD_CAP = 20_000


class QPoly:
    """Polynomial in ``q`` with exact rational coefficients; ``coeffs[k]`` is the ``q^k`` term."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def q(cls, power: int = 1):
        return cls((0,) * power + (1,))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPoly) else QPoly.const(-other))

    def __rsub__(self, other):
        return QPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly.const(other)
        if not self or not other:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "QPoly"):
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(other.coeffs) - 1
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other: "QPoly") -> "QPoly":
        quot, rem = self.divmod(other)
        if rem:
            raise NonPolynomialDivision(f"{self} is not divisible by {other}")
        return quot

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({str(self)!r})"

    def to_json(self):
        return [str(c) for c in self.coeffs]


def q_factorial(M: int) -> QPoly:
    """``[M]! = (q - 1)(q^2 - 1)...(q^M - 1)``."""
    out = QPoly.const(1)
    for m in range(1, M + 1):
        out = out * (QPoly.q(m) - 1)
    return out


def q_binomial(M: int, N: int) -> QPoly:
    """``[M+N]! / ([M]! [N]!)``, checked to be a polynomial."""
    if M < 0 or N < 0:
        raise PreconditionViolated("q_binomial needs nonnegative arguments")
    return q_factorial(M + N).exact_div(q_factorial(M) * q_factorial(N))


class NCPoly:
    """Noncommutative polynomial: map from generator words to nonzero QPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            if not isinstance(c, QPoly):
                c = QPoly.const(c)
            w = tuple(w)
            c = clean.get(w, QPoly()) + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def monomial(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, QPoly()) + c
        return NCPoly(out)

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, QPoly()) + c1 * c2
            return NCPoly(out)
        return NCPoly({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        return NCPoly({w: other * c for w, c in self.terms.items()})

    def support(self) -> set:
        return set(self.terms)

    def multidegrees(self, Q: Quiver) -> set:
        return {word_degree(Q, w) for w in self.terms}

    def is_homogeneous(self, Q: Quiver) -> bool:
        return len(self.multidegrees(Q)) <= 1

    def __str__(self):
        return render_ncpoly(self)

    def __repr__(self):
        return f"NCPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {",".join(w): c.to_json() for w, c in sorted(self.terms.items())}


def _render_word(w) -> str:
    if not w:
        return "1"
    out = []
    for x, run in itertools.groupby(w):
        k = len(list(run))
        out.append(f"E_{x}" + (f"^{k}" if k > 1 else ""))
    return " ".join(out)


def render_ncpoly(x: NCPoly, order=None) -> str:
    """Plain-text form such as ``E_i^2 E_j - (q + 1) E_i E_j E_i + q^2 E_j E_i^2``."""
    if not x:
        return "0"
    words = list(x.terms) if order is None else [w for w in order if w in x.terms]
    out = ""
    for n, w in enumerate(words):
        c = x.terms[w]
        negative = c.coeffs[-1] < 0
        if negative:
            c = -c
        if c == 1:
            coeff = ""
        elif c.is_monomial():
            coeff = str(c) + " "
        else:
            coeff = f"({c}) "
        term = coeff + _render_word(w)
        if n == 0:
            out = ("-" if negative else "") + term
        else:
            out += (" - " if negative else " + ") + term
    return out


def serre_relations(Q: Quiver, i, j) -> tuple:
    """The two quantum Serre relations for ``(i, j)``, ``n`` = number of arrows ``i -> j``.

    First:  ``sum_{p+p'=n+1} (-1)^{p'} q^{p'(p'-1)} [p+p' over p] E_i^p E_j E_i^{p'}``.
    Second: ``sum_{p+p'=n+1} (-1)^{p} q^{p(p-1)} [p+p' over p] E_j^p E_i E_j^{p'}``.
    """
    i, j = check_word(Q, (i, j))
    if i == j:
        raise PreconditionViolated("Serre relations need two distinct vertices")
    if Q.arrow_count(j, i):
        raise PreconditionViolated(f"there is an arrow {j} -> {i}; orient the pair the other way")
    n = Q.arrow_count(i, j)
    first, second = {}, {}
    for p in range(n + 1, -1, -1):
        pp = n + 1 - p
        coeff = q_binomial(p, pp)
        first[(i,) * p + (j,) + (i,) * pp] = (-1) ** pp * QPoly.q(pp * (pp - 1)) * coeff
    for p in range(n + 2):
        pp = n + 1 - p
        coeff = q_binomial(p, pp)
        second[(j,) * p + (i,) + (j,) * pp] = (-1) ** p * QPoly.q(p * (p - 1)) * coeff
    return NCPoly(first), NCPoly(second)


def specialize_q0(x: NCPoly) -> NCPoly:
    return NCPoly({w: QPoly.const(c.constant_term()) for w, c in x.terms.items()})


def q0_relations(Q: Quiver) -> list:
    """Both q = 0 Serre relations for every pair of vertices with no arrow back."""
    out = []
    for a, b in itertools.permutations(Q.vertices, 2):
        if Q.arrow_count(b, a):
            continue
        if Q.arrow_count(a, b) == 0 and Q.vertices.index(a) > Q.vertices.index(b):
            continue  # unlinked pair: both orientations give the same commutator
        for r in serre_relations(Q, a, b):
            out.append(specialize_q0(r))
    return out


def _degree_diff(d, e):
    return tuple(x - y for x, y in zip(d, e))


def graded_ideal_dim(Q: Quiver, relations, d, cap: int = DEFAULT_WORD_CAP) -> tuple:
    """Dimension and reduced basis of the ideal generated by ``relations`` in degree ``d``.

    The component is spanned by all ``m1 r m2`` with monomials ``m1, m2`` and
    ``deg m1 + deg r + deg m2 = d``.
    """
    d = Q.dim(d)
    words = words_of_degree(Q, d, cap)
    col = {w: k for k, w in enumerate(words)}
    rows = []
    for r in relations:
        degs = r.multidegrees(Q)
        if len(degs) > 1:
            raise PreconditionViolated("relations must be homogeneous")
        if not degs:
            continue
        rest = _degree_diff(d, degs.pop())
        if min(rest) < 0:
            continue
        for split in _splits(rest):
            lefts = words_of_degree(Q, split[0], cap)
            rights = words_of_degree(Q, split[1], cap)
            if len(lefts) * len(rights) + len(rows) > cap * 10:
                raise CapExceeded("too many sandwiched relations")
            for m1 in lefts:
                for m2 in rights:
                    rows.append({col[m1 + w + m2]: c for w, c in r.terms.items()})
    basis = _row_reduce(rows, len(words))
    return len(basis), [NCPoly({words[k]: c for k, c in row.items()}) for row in basis]


def _splits(rest):
    ranges = [range(x + 1) for x in rest]
    for left in itertools.product(*ranges):
        yield left, _degree_diff(rest, left)


def _row_reduce(rows, ncols):
    """Reduced echelon basis of sparse rows with QPoly entries, over the field Q(q)."""
    # Rows after specialization are rational constants; general QPoly entries
    # are handled by keeping rational functions as (num, den) would be heavier,
    # so only constant coefficients are accepted here.
    pivots = {}
    for row in rows:
        vec = {}
        for k, c in row.items():
            if not isinstance(c, QPoly):
                c = QPoly.const(c)
            if len(c.coeffs) > 1:
                raise PreconditionViolated("graded_ideal_dim works with specialized (constant) coefficients")
            if c:
                vec[k] = c.coeffs[0]
        vec = _reduce(vec, pivots)
        if not vec:
            continue
        lead = min(vec)
        scale = vec[lead]
        vec = {k: v / scale for k, v in vec.items()}
        for p, prow in list(pivots.items()):
            if lead in prow:
                c = prow[lead]
                new = dict(prow)
                for k, v in vec.items():
                    new[k] = new.get(k, 0) - c * v
                pivots[p] = {k: v for k, v in new.items() if v}
        pivots[lead] = vec
    return [{k: QPoly.const(v) for k, v in pivots[p].items()} for p in sorted(pivots)]


def _reduce(vec, pivots):
    vec = dict(vec)
    for p in sorted(pivots):
        c = vec.get(p)
        if c:
            for k, v in pivots[p].items():
                vec[k] = vec.get(k, 0) - c * v
            vec = {k: v for k, v in vec.items() if v}
    return vec


def in_graded_ideal(Q: Quiver, x: NCPoly, relations, cap: int = DEFAULT_WORD_CAP) -> bool:
    if not x:
        return True
    degs = x.multidegrees(Q)
    if len(degs) != 1:
        raise PreconditionViolated("membership test needs a homogeneous element")
    d = degs.pop()
    _, basis = graded_ideal_dim(Q, relations, d, cap)
    words = words_of_degree(Q, d, cap)
    col = {w: k for k, w in enumerate(words)}
    pivots = {}
    for b in basis:
        vec = {col[w]: c.coeffs[0] for w, c in b.terms.items()}
        pivots[min(vec)] = vec
    vec = {}
    for w, c in x.terms.items():
        if len(c.coeffs) > 1:
            raise PreconditionViolated("membership test works with constant coefficients")
        vec[col[w]] = c.coeffs[0]
    return not _reduce(vec, pivots)


def u0_monomials_equal(Q: Quiver, w1, w2, cap: int = DEFAULT_WORD_CAP) -> bool:
    """Do the monomials ``E_w1`` and ``E_w2`` agree in the q = 0 algebra?"""
    w1, w2 = check_word(Q, w1), check_word(Q, w2)
    if word_degree(Q, w1) != word_degree(Q, w2):
        raise DegreeMismatch(f"words {w1} and {w2} have different degrees")
    if w1 == w2:
        return True
    diff = NCPoly.monomial(w1) - NCPoly.monomial(w2)
    return in_graded_ideal(Q, diff, q0_relations(Q), cap)


def u0_quotient_dim(Q: Quiver, d: DimVector, cap: int = DEFAULT_WORD_CAP) -> int:
    """``dim`` of the degree-``d`` component of the q = 0 algebra."""
    d = Q.dim(d)
    total = len(words_of_degree(Q, d, cap))
    return total - graded_ideal_dim(Q, q0_relations(Q), d, cap)[0]

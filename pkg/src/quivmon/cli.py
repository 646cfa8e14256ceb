"""Command-line front end. JSON (or DOT with ``--dot``) on stdout, logs on stderr.

Exit codes: 0 success, 1 domain error, 2 cap exceeded, 3 usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import normal_form as nf
from . import oracle, qalgebra, schofield, words
from .errors import CapExceeded, QuivmonError
from .quiver import Quiver, admissible_order, ambient_dims, euler_form, parse_quiver

log = logging.getLogger("quivmon")

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n\n{self.format_help()}")


# ---------------------------------------------------------------- argument helpers


def load_quiver(path: str) -> Quiver:
    try:
        with open(path) as fh:
            return parse_quiver(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read quiver file {path!r}: {exc}") from None


def parse_dim_arg(Q: Quiver, text: str):
    """Comma list in admissible order, e.g. ``1,2,1``."""
    try:
        values = [int(x) for x in text.split(",")] if text.strip() else []
    except ValueError:
        raise UsageError(f"dimension vector {text!r} is not a comma list of integers") from None
    if len(values) != Q.n:
        raise UsageError(f"dimension vector {text!r} needs {Q.n} entries")
    d = [0] * Q.n
    for p, x in zip(Q.order, values):
        d[p] = x
    return Q.dim(d)


def show_dim(Q: Quiver, d) -> list:
    return [d[p] for p in Q.order]


def parse_word_arg(Q: Quiver, text: str):
    return words.parse_word(Q, text)


def render_dot(graph, name: str = "G") -> str:
    """DOT text with nodes and edges in sorted order."""
    def label(node):
        return node if isinstance(node, str) else words.format_word(node)

    lines = [f"digraph {name} {{"]
    for node in sorted(graph.nodes(), key=label):
        lines.append(f'  "{label(node)}";')
    for a, b in sorted(graph.edges(), key=lambda e: (label(e[0]), label(e[1]))):
        lines.append(f'  "{label(a)}" -> "{label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _product_arg(Q, args):
    if args.word is not None:
        return nf.word_to_product(Q, parse_word_arg(Q, args.word))
    if args.factors is not None:
        return nf.ProductForm(tuple(parse_dim_arg(Q, f) for f in args.factors.split(";") if f.strip()))
    raise UsageError("give --word or --factors")


def _form_json(Q, P):
    return [show_dim(Q, f) for f in P.factors]


# ---------------------------------------------------------------- commands


def cmd_euler(Q, a):
    return {"euler": euler_form(Q, parse_dim_arg(Q, a.e), parse_dim_arg(Q, a.d))}


def cmd_dims(Q, a):
    d = parse_dim_arg(Q, a.d)
    dim_r, dim_g = ambient_dims(Q, d)
    return {"dim_R": dim_r, "dim_G": dim_g, "euler": euler_form(Q, d, d)}


def cmd_order(Q, a):
    return {"order": list(admissible_order(Q))}


def cmd_ext(Q, a):
    e, d = parse_dim_arg(Q, a.e), parse_dim_arg(Q, a.d)
    v = schofield.ext_value(Q, e, d, a.cap)
    return {"ext": v, "vanishes": v == 0}


def cmd_hom(Q, a):
    return {"hom": schofield.generic_hom(Q, parse_dim_arg(Q, a.e), parse_dim_arg(Q, a.d), a.cap)}


def cmd_schur(Q, a):
    return {"schur": schofield.is_schur_root(Q, parse_dim_arg(Q, a.d), a.cap)}


def cmd_candec(Q, a):
    parts = schofield.canonical_decomposition(Q, parse_dim_arg(Q, a.d), a.cap)
    return {"decomposition": [show_dim(Q, p) for p in parts]}


def cmd_isotropic(Q, a):
    return {"isotropic": schofield.is_isotropic_root(Q, parse_dim_arg(Q, a.d), a.max_steps)}


def cmd_obsrel(Q, a):
    rels = schofield.enumerate_obs_relations(Q, a.bound, a.cap)
    return {"relations": [[show_dim(Q, d), show_dim(Q, e)] for d, e in rels]}


def cmd_drel3(Q, a):
    return {"threshold": schofield.drel3_threshold(a.n, a.k, a.x)}


def cmd_degree(Q, a):
    return {"degree": show_dim(Q, words.word_degree(Q, parse_word_arg(Q, a.w)))}


def cmd_vfun(Q, a):
    return {"v": list(words.v_function(parse_word_arg(Q, a.w)))}


def cmd_pattern(Q, a):
    w = parse_word_arg(Q, a.w)
    out = []
    for (t, h), mask in zip(Q.arrows, words.zero_pattern(Q, w)):
        out.append({"arrow": [t, h], "rows": [["0" if z else "*" for z in row] for row in mask.tolist()]})
    return {"patterns": out}


def cmd_wleq(Q, a):
    return {"leq": words.word_leq(Q, parse_word_arg(Q, a.w1), parse_word_arg(Q, a.w2), a.node_cap)}


def cmd_hasse(Q, a):
    g = words.hasse_diagram(Q, parse_dim_arg(Q, a.d), a.node_cap)
    if a.dot:
        return render_dot(g, "hasse")
    return {
        "nodes": [words.format_word(w) for w in g.nodes()],
        "edges": [[words.format_word(x), words.format_word(y)] for x, y in g.edges()],
    }


def cmd_codimbound(Q, a):
    return {"bound": words.codim_lower_bound(Q, parse_word_arg(Q, a.w))}


def cmd_nf(Q, a):
    P = _product_arg(Q, a)
    trace = nf.Trace()
    pnf = nf.partial_normal_form(Q, P, a.cap, trace)
    out = nf.normalize(Q, P, a.cap)
    return {
        "input": _form_json(Q, P),
        "partial_normal_form": _form_json(Q, pnf),
        "normal_form": _form_json(Q, out),
        "measures": trace.measures,
    }


def cmd_eq(Q, a):
    P1 = nf.word_to_product(Q, parse_word_arg(Q, a.w1))
    P2 = nf.word_to_product(Q, parse_word_arg(Q, a.w2))
    return {"verdict": str(nf.decide_equal(Q, P1, P2, a.cap, a.node_cap))}


def _rep_json(Q, X):
    return {"dim": show_dim(Q, X.dim), "mats": [m.tolist() for m in X.mats]}


def _family(Q, a, w):
    return oracle.variety_points(Q, parse_word_arg(Q, w), a.q, a.enum_cap, a.field_degree)


def _parse_rep(Q, a):
    d = parse_dim_arg(Q, a.d)
    try:
        entries = [int(x) for x in a.entries.split(",")] if a.entries.strip() else []
    except ValueError:
        raise UsageError("--entries must be a comma list of integers") from None
    if len(entries) != ambient_dims(Q, d)[0] or any(not 0 <= x < a.q for x in entries):
        raise UsageError(f"--entries needs {ambient_dims(Q, d)[0]} values in 0..{a.q - 1}")
    return oracle.FqRep.from_entries(Q, a.q, d, entries)


def cmd_oracle(Q, a):
    sub = a.oracle_cmd
    if sub == "enum":
        reps = list(oracle.enumerate_reps(Q, parse_dim_arg(Q, a.d), a.q, a.enum_cap))
        out = {"count": len(reps)}
        if a.list:
            out["points"] = [_rep_json(Q, X) for X in reps]
        return out
    if sub == "member":
        X = _parse_rep(Q, a)
        fd = a.field_degree or oracle.default_field_degree(Q, X.dim)
        return {"member": oracle.has_comp_series(X, parse_word_arg(Q, a.w), fd)}
    if sub == "set":
        return _family(Q, a, a.w).digest()
    if sub == "cmp":
        c = oracle.compare_families(_family(Q, a, a.w1), _family(Q, a, a.w2))
        return {"relation": c.relation, "size_first": c.size_first,
                "size_second": c.size_second, "size_common": c.size_common}
    if sub == "hom":
        S1, S2 = _family(Q, a, a.w1), _family(Q, a, a.w2)
        return {"hom": oracle.family_hom(Q, S1, S2, top_only=a.top_only)}
    if sub == "dim":
        lower, exact = oracle.variety_dim(Q, parse_word_arg(Q, a.w), a.q, a.dynkin, a.enum_cap)
        return {"lower": lower, "exact": exact}
    if sub == "sd":
        return oracle.s_d_points(Q, parse_dim_arg(Q, a.d), a.q, a.enum_cap).digest()
    if sub == "dynkin-eq":
        return {"equal": oracle.dynkin_equal(Q, parse_word_arg(Q, a.w1), parse_word_arg(Q, a.w2), a.q, a.dynkin)}
    if sub == "genext":
        return {"ext": oracle.generic_ext_oracle(Q, parse_dim_arg(Q, a.e), parse_dim_arg(Q, a.d), a.q, a.enum_cap)}
    raise UsageError(f"unknown oracle command {sub!r}")


def cmd_qserre(Q, a):
    r1, r2 = qalgebra.serre_relations(Q, a.i, a.j)
    if a.q0:
        r1, r2 = qalgebra.specialize_q0(r1), qalgebra.specialize_q0(r2)
    return {"relations": [str(r1), str(r2)], "terms": [r1.to_json(), r2.to_json()]}


def cmd_qbinom(Q, a):
    b = qalgebra.q_binomial(a.M, a.N)
    return {"binomial": str(b), "coeffs": b.to_json()}


def cmd_idealdim(Q, a):
    d = parse_dim_arg(Q, a.d)
    dim, _ = qalgebra.graded_ideal_dim(Q, qalgebra.q0_relations(Q), d, a.word_cap)
    return {"ideal_dim": dim, "words": len(words.words_of_degree(Q, d, a.word_cap))}


def cmd_u0eq(Q, a):
    return {"equal": qalgebra.u0_monomials_equal(Q, parse_word_arg(Q, a.w1), parse_word_arg(Q, a.w2), a.word_cap)}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quivmon", description="Composition monoid calculus for acyclic quivers.")
    p.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, fn, help_text, *, quiver=True):
        s = sub.add_parser(name, help=help_text, description=help_text)
        if quiver:
            s.add_argument("-Q", "--quiver", required=True, help="quiver JSON file")
        s.set_defaults(fn=fn)
        return s

    def cap(s):
        s.add_argument("--cap", type=int, default=schofield.DEFAULT_CAP, help="recursion cap on |e|+|d|")

    s = cmd("euler", cmd_euler, "Euler form <e, d>")
    s.add_argument("-e", required=True)
    s.add_argument("-d", required=True)
    s = cmd("dims", cmd_dims, "dim R_d, dim G_d and <d, d>")
    s.add_argument("-d", required=True)
    cmd("order", cmd_order, "admissible vertex order")
    for name, fn, text in (("ext", cmd_ext, "generic ext(e, d)"), ("hom", cmd_hom, "generic hom(e, d)")):
        s = cmd(name, fn, text)
        s.add_argument("-e", required=True)
        s.add_argument("-d", required=True)
        cap(s)
    for name, fn, text in (("schur", cmd_schur, "Schur root test"), ("candec", cmd_candec, "canonical decomposition")):
        s = cmd(name, fn, text)
        s.add_argument("-d", required=True)
        cap(s)
    s = cmd("isotropic", cmd_isotropic, "isotropic root test")
    s.add_argument("-d", required=True)
    s.add_argument("--max-steps", type=int, default=None)
    s = cmd("obsrel", cmd_obsrel, "pairs (d, e) with R_d * R_e = R_{d+e}")
    s.add_argument("--bound", type=int, required=True)
    cap(s)
    s = cmd("drel3", cmd_drel3, "threshold ceil((n - 1/k) x)", quiver=False)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-x", type=int, required=True)
    for name, fn, text in (("degree", cmd_degree, "degree of a word"), ("vfun", cmd_vfun, "v-function of a word"),
                           ("pattern", cmd_pattern, "forced zero pattern"),
                           ("codimbound", cmd_codimbound, "codimension lower bound")):
        s = cmd(name, fn, text)
        s.add_argument("-w", required=True)
    s = cmd("wleq", cmd_wleq, "word order test w1 <= w2")
    s.add_argument("--w1", required=True)
    s.add_argument("--w2", required=True)
    s.add_argument("--node-cap", type=int, default=words.DEFAULT_NODE_CAP)
    s = cmd("hasse", cmd_hasse, "Hasse diagram of the word order")
    s.add_argument("-d", required=True)
    s.add_argument("--dot", action="store_true")
    s.add_argument("--node-cap", type=int, default=words.DEFAULT_NODE_CAP)
    s = cmd("nf", cmd_nf, "partial normal form of a product")
    s.add_argument("-w", "--word", default=None)
    s.add_argument("--factors", default=None, help="semicolon separated dim vectors")
    cap(s)
    s = cmd("eq", cmd_eq, "sound equality test of two words")
    s.add_argument("--w1", required=True)
    s.add_argument("--w2", required=True)
    s.add_argument("--node-cap", type=int, default=nf.DEFAULT_NODE_CAP)
    cap(s)

    s = cmd("oracle", cmd_oracle, "finite field oracle", quiver=False)
    osub = s.add_subparsers(dest="oracle_cmd", parser_class=_Parser)
    osub.required = True

    def ocmd(name, text):
        o = osub.add_parser(name, help=text, description=text)
        o.add_argument("-Q", "--quiver", required=True, help="quiver JSON file")
        o.add_argument("--q", type=int, default=2)
        o.add_argument("--enum-cap", type=int, default=oracle.DEFAULT_ENUM_CAP)
        o.add_argument("--field-degree", type=int, default=None,
                       help="search filtrations over F_{q^m}; default from the dimension vector")
        return o

    o = ocmd("enum", "enumerate R_d(F_q)")
    o.add_argument("-d", required=True)
    o.add_argument("--list", action="store_true")
    o = ocmd("member", "composition series test for one point")
    o.add_argument("-d", required=True)
    o.add_argument("--entries", required=True, help="matrix entries, arrows in order, row-major")
    o.add_argument("-w", required=True)
    o = ocmd("set", "digest of the F_q-points of E_w")
    o.add_argument("-w", required=True)
    for name, text in (("cmp", "compare two families"), ("hom", "min hom between two families")):
        o = ocmd(name, text)
        o.add_argument("--w1", required=True)
        o.add_argument("--w2", required=True)
        if name == "hom":
            o.add_argument("--top-only", action="store_true")
    o = ocmd("dim", "orbit dimension bounds for E_w")
    o.add_argument("-w", required=True)
    o.add_argument("--dynkin", action="store_true")
    o = ocmd("sd", "F_q-points of S_d")
    o.add_argument("-d", required=True)
    o = ocmd("dynkin-eq", "family equality on a representation-finite quiver")
    o.add_argument("--w1", required=True)
    o.add_argument("--w2", required=True)
    o.add_argument("--dynkin", action="store_true")
    o = ocmd("genext", "minimal ext over R_e(F_q) x R_d(F_q)")
    o.add_argument("-e", required=True)
    o.add_argument("-d", required=True)

    s = cmd("qserre", cmd_qserre, "quantum Serre relations for (i, j)")
    s.add_argument("-i", required=True)
    s.add_argument("-j", required=True)
    s.add_argument("--q0", action="store_true", help="specialize q to 0")
    s = cmd("qbinom", cmd_qbinom, "q-binomial [M+N over M]", quiver=False)
    s.add_argument("-M", type=int, required=True)
    s.add_argument("-N", type=int, required=True)
    s = cmd("idealdim", cmd_idealdim, "dimension of the q=0 ideal in degree d")
    s.add_argument("-d", required=True)
    s.add_argument("--word-cap", type=int, default=qalgebra.DEFAULT_WORD_CAP)
    s = cmd("u0eq", cmd_u0eq, "equality of two monomials at q=0")
    s.add_argument("--w1", required=True)
    s.add_argument("--w2", required=True)
    s.add_argument("--word-cap", type=int, default=qalgebra.DEFAULT_WORD_CAP)
    return p


def execute(argv, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_help())
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        Q = load_quiver(args.quiver) if hasattr(args, "quiver") else None
        result = args.fn(Q, args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (QuivmonError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if isinstance(result, str):
        out.write(result)
    else:
        out.write(json.dumps(result, sort_keys=True) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    return execute(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

"""OWL-RL-style rule reasoning on top of the RDFS closure.

Covers identity under the missing unique-names assumption (owl:sameAs
symmetry, transitivity and substitution; functional properties deriving
sameAs), inverse and transitive properties, class equivalence,
intersection and union operators, someValuesFrom recognition and
allValuesFrom propagation.  Disjointness, complement, differentFrom,
AllDifferent lists and owl:Nothing membership are violation triggers:
inconsistency is reported as data, never raised during saturation.

Deliberate boundary: no rule introduces fresh individuals, so a
someValuesFrom on the superclass side is stored but never instantiated.
That keeps saturation a finite fixpoint.  Equality rules apply only
between non-literal terms.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from . import vocab
from .errors import InconsistentKBError
from .graph import Graph, IdTriple
from .rdfs import (
    RDFS_RULES,
    Closure,
    InconsistencyReport,
    Violation,
    _build_closure,
    _Ctx,
    _fixpoint,
)
from .terms import IRI, BlankNode, Term, Triple, sort_key, triple_sort_key

_SAMEAS = "owl-sameas"


def _is_iri(ctx: _Ctx, tid: int) -> bool:
    return isinstance(ctx.g.term(tid), IRI)


def _list_members(ctx: _Ctx, node: int) -> set[int]:
    """Members of an RDF collection, following first/rest edges from node."""
    first = ctx.vid(vocab.RDF_FIRST)
    rest = ctx.vid(vocab.RDF_REST)
    nil = ctx.vid(vocab.RDF_NIL)
    members: set[int] = set()
    stack = [node]
    seen: set[int] = set()
    while stack:
        n = stack.pop()
        if n in seen or (nil is not None and n == nil):
            continue
        seen.add(n)
        if first is not None:
            members.update(o for _, _, o in ctx.g.match_ids(n, first, None))
        if rest is not None:
            stack.extend(o for _, _, o in ctx.g.match_ids(n, rest, None))
    return members


def _structural(ctx: _Ctx, delta: list[IdTriple], *preds: Term) -> bool:
    ids = {ctx.vid(p) for p in preds} | {ctx.vid(vocab.RDF_FIRST), ctx.vid(vocab.RDF_REST)}
    ids.discard(None)
    return any(p in ids for _, p, _ in delta)


def _r_sameas_symmetry(ctx: _Ctx, delta: list[IdTriple]):
    """(x sameAs y) -> (y sameAs x)"""
    sa = ctx.vid(vocab.OWL_SAMEAS)
    if sa is None:
        return
    for x, p, y in delta:
        if p == sa and not ctx.is_literal(y):
            yield (y, sa, x), "owl-sameas-symmetry", ((x, sa, y),)


def _r_sameas_transitivity(ctx: _Ctx, delta: list[IdTriple]):
    """(x sameAs y), (y sameAs z) -> (x sameAs z)"""
    sa = ctx.vid(vocab.OWL_SAMEAS)
    if sa is None:
        return
    for x, p, y in delta:
        if p != sa or ctx.is_literal(y):
            continue
        for _, _, z in ctx.g.match_ids(y, sa, None):
            if not ctx.is_literal(z):
                yield (x, sa, z), "owl-sameas-transitivity", ((x, sa, y), (y, sa, z))
        for w, _, _ in ctx.g.match_ids(None, sa, x):
            yield (w, sa, y), "owl-sameas-transitivity", ((w, sa, x), (x, sa, y))


def _substitutions(ctx: _Ctx, t: IdTriple, old: int, new: int):
    """Rewrites of one triple under old = new, where the result stays well-formed."""
    s, p, o = t
    if s == old and not ctx.is_literal(new):
        yield (new, p, o)
    if p == old and _is_iri(ctx, new):
        yield (s, new, o)
    if o == old:
        yield (s, p, new)


def _r_sameas_substitution(ctx: _Ctx, delta: list[IdTriple]):
    """(a sameAs b) materializes every triple mentioning a with b in its place."""
    sa = ctx.vid(vocab.OWL_SAMEAS)
    if sa is None:
        return
    for t in delta:
        s, p, o = t
        if p == sa and not ctx.is_literal(o) and s != o:
            a, b = s, o
            mentioning = set()
            mentioning.update(ctx.g.match_ids(a, None, None))
            mentioning.update(ctx.g.match_ids(None, a, None))
            mentioning.update(ctx.g.match_ids(None, None, a))
            for src in mentioning:
                for rewritten in _substitutions(ctx, src, a, b):
                    yield rewritten, "owl-sameas-substitution", ((a, sa, b), src)
        # a newly derived triple is itself subject to all known equalities
        for u in set(t):
            for _, _, v in ctx.g.match_ids(u, sa, None):
                if u == v or ctx.is_literal(v):
                    continue
                for rewritten in _substitutions(ctx, t, u, v):
                    yield rewritten, "owl-sameas-substitution", ((u, sa, v), t)


def _r_functional(ctx: _Ctx, delta: list[IdTriple]):
    """(P a FunctionalProperty), (x P y1), (x P y2) -> (y1 sameAs y2)"""
    typ = ctx.vid(vocab.RDF_TYPE)
    fp = ctx.vid(vocab.OWL_FUNCTIONALPROPERTY)
    if typ is None or fp is None:
        return

    def pairs(prop: int, decl: IdTriple):
        for x, _, y1 in ctx.g.match_ids(None, prop, None):
            for _, _, y2 in ctx.g.match_ids(x, prop, None):
                if y1 != y2 and not ctx.is_literal(y1) and not ctx.is_literal(y2):
                    yield (y1, ctx.iid(vocab.OWL_SAMEAS), y2), "owl-functional-property", (
                        decl,
                        (x, prop, y1),
                        (x, prop, y2),
                    )

    for s, p, o in delta:
        if p == typ and o == fp:
            yield from pairs(s, (s, typ, o))
        else:
            decl = (p, typ, fp)
            if ctx.g.contains_ids(decl) and not ctx.is_literal(o):
                for _, _, y2 in ctx.g.match_ids(s, p, None):
                    if y2 != o and not ctx.is_literal(y2):
                        yield (o, ctx.iid(vocab.OWL_SAMEAS), y2), "owl-functional-property", (
                            decl,
                            (s, p, o),
                            (s, p, y2),
                        )


def _r_inverse(ctx: _Ctx, delta: list[IdTriple]):
    """(P inverseOf Q): (x P y) -> (y Q x) and (x Q y) -> (y P x)"""
    inv = ctx.vid(vocab.OWL_INVERSEOF)
    if inv is None:
        return
    for s, p, o in delta:
        if p == inv:
            prop_p, prop_q = s, o
            decl = (s, p, o)
            if _is_iri(ctx, prop_q):
                for x, _, y in ctx.g.match_ids(None, prop_p, None):
                    if not ctx.is_literal(y):
                        yield (y, prop_q, x), "owl-inverse-property", ((x, prop_p, y), decl)
            if _is_iri(ctx, prop_p):
                for x, _, y in ctx.g.match_ids(None, prop_q, None):
                    if not ctx.is_literal(y):
                        yield (y, prop_p, x), "owl-inverse-property", ((x, prop_q, y), decl)
        if not ctx.is_literal(o):
            for _, _, q in ctx.g.match_ids(p, inv, None):
                if _is_iri(ctx, q):
                    yield (o, q, s), "owl-inverse-property", ((s, p, o), (p, inv, q))
            for r, _, _ in ctx.g.match_ids(None, inv, p):
                if _is_iri(ctx, r):
                    yield (o, r, s), "owl-inverse-property", ((s, p, o), (r, inv, p))


def _r_transitive(ctx: _Ctx, delta: list[IdTriple]):
    """(P a TransitiveProperty), (x P y), (y P z) -> (x P z)"""
    typ = ctx.vid(vocab.RDF_TYPE)
    tp = ctx.vid(vocab.OWL_TRANSITIVEPROPERTY)
    if typ is None or tp is None:
        return
    for s, p, o in delta:
        if p == typ and o == tp:
            decl = (s, typ, tp)
            for x, _, y in ctx.g.match_ids(None, s, None):
                for _, _, z in ctx.g.match_ids(y, s, None):
                    yield (x, s, z), "owl-transitive-property", (decl, (x, s, y), (y, s, z))
        decl = (p, typ, tp)
        if ctx.g.contains_ids(decl):
            if not ctx.is_literal(o):
                for _, _, z in ctx.g.match_ids(o, p, None):
                    yield (s, p, z), "owl-transitive-property", (decl, (s, p, o), (o, p, z))
            for w, _, _ in ctx.g.match_ids(None, p, s):
                yield (w, p, o), "owl-transitive-property", (decl, (w, p, s), (s, p, o))


def _r_equivalent_class(ctx: _Ctx, delta: list[IdTriple]):
    """(C equivalentClass D) <-> (C sco D) and (D sco C)"""
    eqc = ctx.vid(vocab.OWL_EQUIVALENTCLASS)
    sco = ctx.vid(vocab.RDFS_SUBCLASSOF)
    for s, p, o in delta:
        if eqc is not None and p == eqc:
            sco_id = ctx.iid(vocab.RDFS_SUBCLASSOF)
            yield (s, sco_id, o), "owl-equivalence-subclass", ((s, eqc, o),)
            if not ctx.is_literal(o):
                yield (o, sco_id, s), "owl-equivalence-subclass", ((s, eqc, o),)
        if sco is not None and p == sco and not ctx.is_literal(o):
            if ctx.g.contains_ids((o, sco, s)):
                eqc_id = ctx.iid(vocab.OWL_EQUIVALENTCLASS)
                yield (s, eqc_id, o), "owl-subclass-equivalence", ((s, sco, o), (o, sco, s))
                yield (o, eqc_id, s), "owl-subclass-equivalence", ((o, sco, s), (s, sco, o))


def _r_intersection_subclass(ctx: _Ctx, delta: list[IdTriple]):
    """(C intersectionOf L) -> (C sco M) for each member M.

    Needed so realization sees an intersection as strictly more specific
    than its members.
    """
    inter = ctx.vid(vocab.OWL_INTERSECTIONOF)
    if inter is None:
        return
    if not _structural(ctx, delta, vocab.OWL_INTERSECTIONOF):
        return
    for c, _, l in list(ctx.g.match_ids(None, inter, None)):
        for m in sorted(_list_members(ctx, l)):
            yield (c, ctx.iid(vocab.RDFS_SUBCLASSOF), m), "owl-intersection-subclass", ((c, inter, l),)


def _r_intersection(ctx: _Ctx, delta: list[IdTriple]):
    """(C intersectionOf L): membership in C and in all of L imply each other."""
    inter = ctx.vid(vocab.OWL_INTERSECTIONOF)
    typ = ctx.vid(vocab.RDF_TYPE)
    if inter is None or typ is None:
        return

    def member_direction(x: int, c: int, l: int):
        for m in sorted(_list_members(ctx, l)):
            yield (x, typ, m), "owl-intersection-member", ((x, typ, c), (c, inter, l))

    def build_direction(x: int, c: int, l: int):
        mem = sorted(_list_members(ctx, l))
        if mem and all(ctx.g.contains_ids((x, typ, m)) for m in mem):
            premises = ((c, inter, l),) + tuple((x, typ, m) for m in mem)
            yield (x, typ, c), "owl-intersection-build", premises

    if _structural(ctx, delta, vocab.OWL_INTERSECTIONOF):
        for c, _, l in list(ctx.g.match_ids(None, inter, None)):
            for x, _, _ in list(ctx.g.match_ids(None, typ, c)):
                yield from member_direction(x, c, l)
            candidates = {x for m in _list_members(ctx, l) for x, _, _ in ctx.g.match_ids(None, typ, m)}
            for x in sorted(candidates):
                yield from build_direction(x, c, l)
        return
    for x, p, d in delta:
        if p != typ:
            continue
        for _, _, l in ctx.g.match_ids(d, inter, None):
            yield from member_direction(x, d, l)
        for c, _, l in list(ctx.g.match_ids(None, inter, None)):
            if d in _list_members(ctx, l):
                yield from build_direction(x, c, l)


def _r_union(ctx: _Ctx, delta: list[IdTriple]):
    """(C unionOf L), (x type M), M in L -> (x type C)"""
    uni = ctx.vid(vocab.OWL_UNIONOF)
    typ = ctx.vid(vocab.RDF_TYPE)
    if uni is None or typ is None:
        return
    if _structural(ctx, delta, vocab.OWL_UNIONOF):
        for c, _, l in list(ctx.g.match_ids(None, uni, None)):
            for m in sorted(_list_members(ctx, l)):
                for x, _, _ in ctx.g.match_ids(None, typ, m):
                    yield (x, typ, c), "owl-union-member", ((x, typ, m), (c, uni, l))
        return
    for x, p, m in delta:
        if p != typ:
            continue
        for c, _, l in list(ctx.g.match_ids(None, uni, None)):
            if m in _list_members(ctx, l):
                yield (x, typ, c), "owl-union-member", ((x, typ, m), (c, uni, l))


def _r_somevalues(ctx: _Ctx, delta: list[IdTriple]):
    """(R onProperty P), (R someValuesFrom D), (x P y), (y type D) -> (x type R)"""
    svf = ctx.vid(vocab.OWL_SOMEVALUESFROM)
    onp = ctx.vid(vocab.OWL_ONPROPERTY)
    typ = ctx.vid(vocab.RDF_TYPE)
    if svf is None or onp is None or typ is None:
        return

    def fire(r: int, prop: int, d: int, x: int, y: int):
        yield (x, typ, r), "owl-somevalues-recognition", ((r, onp, prop), (r, svf, d), (x, prop, y), (y, typ, d))

    if _structural(ctx, delta, vocab.OWL_SOMEVALUESFROM, vocab.OWL_ONPROPERTY):
        for r, _, d in list(ctx.g.match_ids(None, svf, None)):
            for _, _, prop in list(ctx.g.match_ids(r, onp, None)):
                for x, _, y in list(ctx.g.match_ids(None, prop, None)):
                    if ctx.g.contains_ids((y, typ, d)):
                        yield from fire(r, prop, d, x, y)
        return
    for s, p, o in delta:
        if p == typ:
            y, d = s, o
            for r, _, _ in ctx.g.match_ids(None, svf, d):
                for _, _, prop in ctx.g.match_ids(r, onp, None):
                    for x, _, _ in ctx.g.match_ids(None, prop, y):
                        yield from fire(r, prop, d, x, y)
        for r, _, _ in ctx.g.match_ids(None, onp, p):
            for _, _, d in ctx.g.match_ids(r, svf, None):
                if ctx.g.contains_ids((o, typ, d)):
                    yield from fire(r, p, d, s, o)


def _r_allvalues(ctx: _Ctx, delta: list[IdTriple]):
    """(R onProperty P), (R allValuesFrom D), (x type R), (x P y) -> (y type D)"""
    avf = ctx.vid(vocab.OWL_ALLVALUESFROM)
    onp = ctx.vid(vocab.OWL_ONPROPERTY)
    typ = ctx.vid(vocab.RDF_TYPE)
    if avf is None or onp is None or typ is None:
        return

    def fire(r: int, prop: int, d: int, x: int, y: int):
        if not ctx.is_literal(y):
            yield (y, typ, d), "owl-allvalues-propagation", ((r, onp, prop), (r, avf, d), (x, typ, r), (x, prop, y))

    if _structural(ctx, delta, vocab.OWL_ALLVALUESFROM, vocab.OWL_ONPROPERTY):
        for r, _, d in list(ctx.g.match_ids(None, avf, None)):
            for _, _, prop in list(ctx.g.match_ids(r, onp, None)):
                for x, _, _ in list(ctx.g.match_ids(None, typ, r)):
                    for _, _, y in list(ctx.g.match_ids(x, prop, None)):
                        yield from fire(r, prop, d, x, y)
        return
    for s, p, o in delta:
        if p == typ:
            x, r = s, o
            for _, _, d in ctx.g.match_ids(r, avf, None):
                for _, _, prop in ctx.g.match_ids(r, onp, None):
                    for _, _, y in ctx.g.match_ids(x, prop, None):
                        yield from fire(r, prop, d, x, y)
        for r, _, _ in ctx.g.match_ids(None, onp, p):
            for _, _, d in ctx.g.match_ids(r, avf, None):
                if ctx.g.contains_ids((s, typ, r)):
                    yield from fire(r, p, d, s, o)


OWL_RULES = RDFS_RULES + [
    _r_sameas_symmetry,
    _r_sameas_transitivity,
    _r_sameas_substitution,
    _r_functional,
    _r_inverse,
    _r_transitive,
    _r_equivalent_class,
    _r_intersection_subclass,
    _r_intersection,
    _r_union,
    _r_somevalues,
    _r_allvalues,
]


# ---------------------------------------------------------------------------
# Violation detection
# ---------------------------------------------------------------------------


def _collect_violations(work: Graph) -> InconsistencyReport:
    ctx = _Ctx(work)
    typ = ctx.vid(vocab.RDF_TYPE)
    found: set[tuple[str, tuple[IdTriple, ...]]] = set()

    def record(rule: str, *triples: IdTriple):
        found.add((rule, tuple(sorted(set(triples)))))

    for pred, rule in ((vocab.OWL_DISJOINTWITH, "owl-disjoint-classes"), (vocab.OWL_COMPLEMENTOF, "owl-complement")):
        pid = ctx.vid(pred)
        if pid is None or typ is None:
            continue
        for c, _, d in work.match_ids(None, pid, None):
            for x, _, _ in work.match_ids(None, typ, c):
                if work.contains_ids((x, typ, d)):
                    record(rule, (c, pid, d), (x, typ, c), (x, typ, d))

    sa = ctx.vid(vocab.OWL_SAMEAS)
    diff = ctx.vid(vocab.OWL_DIFFERENTFROM)
    if sa is not None and diff is not None:
        for x, _, y in work.match_ids(None, diff, None):
            if work.contains_ids((x, sa, y)):
                record("owl-sameas-differentfrom", (x, diff, y), (x, sa, y))
            elif work.contains_ids((y, sa, x)):
                record("owl-sameas-differentfrom", (x, diff, y), (y, sa, x))

    alldiff = ctx.vid(vocab.OWL_ALLDIFFERENT)
    if alldiff is not None and typ is not None and sa is not None:
        for d, _, _ in work.match_ids(None, typ, alldiff):
            for prop in (vocab.OWL_DISTINCTMEMBERS, vocab.OWL_MEMBERS):
                pid = ctx.vid(prop)
                if pid is None:
                    continue
                for _, _, lst in work.match_ids(d, pid, None):
                    members = sorted(_list_members(ctx, lst))
                    for i, a in enumerate(members):
                        for b in members[i + 1 :]:
                            if work.contains_ids((a, sa, b)):
                                record("owl-alldifferent", (d, pid, lst), (a, sa, b))
                            elif work.contains_ids((b, sa, a)):
                                record("owl-alldifferent", (d, pid, lst), (b, sa, a))

    nothing = ctx.vid(vocab.OWL_NOTHING)
    if nothing is not None and typ is not None:
        for x, _, _ in work.match_ids(None, typ, nothing):
            record("owl-nothing-member", (x, typ, nothing))

    def to_triple(t: IdTriple) -> Triple:
        return Triple(work.term(t[0]), work.term(t[1]), work.term(t[2]))

    violations = [Violation(rule, tuple(sorted((to_triple(t) for t in ts), key=triple_sort_key))) for rule, ts in found]
    violations.sort(key=lambda v: (v.rule, tuple(triple_sort_key(t) for t in v.triples)))
    return InconsistencyReport(tuple(violations))


# ---------------------------------------------------------------------------
# Identity partition
# ---------------------------------------------------------------------------


class EqualityPartition:
    """Union-find over the owl:sameAs pairs of a graph.

    Only non-literal terms participate.  Each equivalence class is
    represented by its canonically smallest member, which makes
    canonicalization stable under any input permutation.
    """

    def __init__(self, pairs: Iterable[tuple[Term, Term]] = ()):
        self._parent: dict[Term, Term] = {}
        for a, b in pairs:
            self._union(a, b)
        self._reps: dict[Term, Term] = {}
        groups: dict[Term, list[Term]] = {}
        for t in self._parent:
            groups.setdefault(self._find(t), []).append(t)
        for members in groups.values():
            rep = min(members, key=sort_key)
            for t in members:
                self._reps[t] = rep

    @classmethod
    def from_graph(cls, graph: Graph) -> "EqualityPartition":
        pairs = [
            (t.subject, t.object)
            for t in graph.match_terms(None, vocab.OWL_SAMEAS, None)
            if isinstance(t.object, (IRI, BlankNode))
        ]
        return cls(pairs)

    def _find(self, t: Term) -> Term:
        root = t
        while self._parent.get(root, root) != root:
            root = self._parent[root]
        while self._parent.get(t, t) != root:
            self._parent[t], t = root, self._parent[t]
        return root

    def _union(self, a: Term, b: Term) -> None:
        self._parent.setdefault(a, a)
        self._parent.setdefault(b, b)
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[rb] = ra

    def representative(self, term: Term) -> Term:
        return self._reps.get(term, term)

    def classes(self) -> list[frozenset[Term]]:
        groups: dict[Term, set[Term]] = {}
        for t, rep in self._reps.items():
            groups.setdefault(rep, set()).add(t)
        return sorted((frozenset(g) for g in groups.values()), key=lambda g: sort_key(min(g, key=sort_key)))


# ---------------------------------------------------------------------------
# Saturation and the reasoning tasks
# ---------------------------------------------------------------------------


def saturate_owl(graph: Graph) -> tuple[Closure, InconsistencyReport]:
    """OWL closure of the graph plus the violations found in it."""
    work, prov = _fixpoint(graph, OWL_RULES)
    report = _collect_violations(work)
    closure = _build_closure(graph, work, prov, report)
    return closure, report


def is_consistent(graph: Graph) -> tuple[bool, InconsistencyReport]:
    _, report = saturate_owl(graph)
    return (not report.violations, report)


class InstanceCheck(Enum):
    ENTAILED = "entailed"
    NOT_ENTAILED = "not-entailed"
    INCONSISTENT_IF_ASSERTED = "inconsistent-if-asserted"


def check_instance(graph: Graph, individual: Term, cls: Term) -> InstanceCheck:
    """Instance check under the open-world assumption.

    Absence of a derivation is not a negative: the verdict is
    NOT_ENTAILED unless asserting the membership would actually break
    the KB, in which case it is INCONSISTENT_IF_ASSERTED.
    """
    closure, report = saturate_owl(graph)
    if report:
        raise InconsistentKBError(report)
    assertion = Triple(individual, vocab.RDF_TYPE, cls)
    if assertion in closure.graph:
        return InstanceCheck.ENTAILED
    probe = graph.copy()
    probe.insert(assertion)
    _, probe_report = saturate_owl(probe)
    if probe_report:
        return InstanceCheck.INCONSISTENT_IF_ASSERTED
    return InstanceCheck.NOT_ENTAILED


def retrieve_instances(graph: Graph, cls: Term) -> set[Term]:
    """All derived members of a class, canonicalized to sameAs representatives."""
    closure, report = saturate_owl(graph)
    if report:
        raise InconsistentKBError(report)
    partition = EqualityPartition.from_graph(closure.graph)
    return {
        partition.representative(t.subject)
        for t in closure.graph.match_terms(None, vocab.RDF_TYPE, cls)
    }


def realize(graph: Graph, individual: Term) -> set[Term]:
    """Most specific derived named classes of an individual.

    Among the individual's derived IRI classes, keeps those with no
    strictly more specific competitor; equivalent classes tie and are
    all returned.
    """
    closure, report = saturate_owl(graph)
    if report:
        raise InconsistentKBError(report)
    types = {t.object for t in closure.graph.match_terms(individual, vocab.RDF_TYPE, None) if isinstance(t.object, IRI)}

    def subclass(d: Term, c: Term) -> bool:
        return d == c or Triple(d, vocab.RDFS_SUBCLASSOF, c) in closure.graph

    return {c for c in types if not any(subclass(d, c) and not subclass(c, d) for d in types)}


def subsumes(graph: Graph, class_d: Term, class_c: Term) -> bool:
    """True iff membership in class_c implies membership in class_d.

    Reads subsumption off the closure's subClassOf edges, reflexively
    for classes the graph mentions.
    """
    closure, _ = saturate_owl(graph)
    if class_c == class_d:
        return closure.graph.mentions(class_c)
    return Triple(class_c, vocab.RDFS_SUBCLASSOF, class_d) in closure.graph


def is_satisfiable(graph: Graph, cls: Term) -> bool:
    """Probe with a fresh individual: can the class have a member at all?

    Sound and complete only relative to the implemented rule fragment.
    """
    _, report = saturate_owl(graph)
    if report:
        raise InconsistentKBError(report)
    n = 0
    while True:
        probe_node = BlankNode(f"satprobe{n}")
        if graph.lookup(probe_node) is None:
            break
        n += 1
    probe = graph.copy()
    probe.insert(Triple(probe_node, vocab.RDF_TYPE, cls))
    _, probe_report = saturate_owl(probe)
    return not probe_report

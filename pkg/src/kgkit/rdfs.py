"""Forward-chaining RDFS saturation.

Four rule families: subClassOf transitivity and type propagation,
subPropertyOf transitivity and triple propagation, domain typing, and
range typing.  Evaluation is semi-naive: each round joins only the
triples derived in the previous round (the delta) against the rest, so
nothing is re-derived from scratch.  The closure is the least fixpoint;
rules only ever combine existing terms, so it is finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import vocab
from .graph import Graph, IdTriple
from .terms import Literal, Term, Triple, triple_sort_key


@dataclass(frozen=True)
class Violation:
    """One broken constraint: the rule that fired and the triples in conflict."""

    rule: str
    triples: tuple[Triple, ...]


@dataclass(frozen=True)
class InconsistencyReport:
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.violations)


@dataclass(frozen=True)
class Derivation:
    rule: str
    premises: tuple[Triple, ...]


@dataclass
class Closure:
    """A saturated graph plus where each derived triple came from."""

    base: Graph
    graph: Graph
    derived: frozenset[Triple]
    provenance: dict[Triple, Derivation]
    report: InconsistencyReport = field(default_factory=InconsistencyReport)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self.graph

    def derived_sorted(self) -> list[Triple]:
        return sorted(self.derived, key=triple_sort_key)


class _Ctx:
    """Working state handed to rule functions during saturation."""

    def __init__(self, work: Graph):
        self.g = work

    def vid(self, term: Term) -> int | None:
        """Id of a vocabulary term if it occurs, without interning it."""
        return self.g.lookup(term)

    def iid(self, term: Term) -> int:
        return self.g.intern(term)

    def is_literal(self, tid: int) -> bool:
        return isinstance(self.g.term(tid), Literal)


# A rule yields (new id-triple, rule name, premise id-triples) for every
# consequence whose premises involve at least one delta triple.
Rule = Callable[[_Ctx, "list[IdTriple]"], Iterator[tuple[IdTriple, str, tuple[IdTriple, ...]]]]


def _r_subclass_transitivity(ctx: _Ctx, delta: list[IdTriple]):
    """(A sco B), (B sco C) -> (A sco C)"""
    sco = ctx.vid(vocab.RDFS_SUBCLASSOF)
    if sco is None:
        return
    for a, p, b in delta:
        if p != sco:
            continue
        for _, _, c in ctx.g.match_ids(b, sco, None):
            yield (a, sco, c), "rdfs-subclass-transitivity", ((a, sco, b), (b, sco, c))
        for c, _, _ in ctx.g.match_ids(None, sco, a):
            yield (c, sco, b), "rdfs-subclass-transitivity", ((c, sco, a), (a, sco, b))


def _r_type_propagation(ctx: _Ctx, delta: list[IdTriple]):
    """(x type A), (A sco B) -> (x type B)"""
    typ = ctx.vid(vocab.RDF_TYPE)
    sco = ctx.vid(vocab.RDFS_SUBCLASSOF)
    for x, p, a in delta:
        if typ is not None and sco is not None and p == typ:
            for _, _, b in ctx.g.match_ids(a, sco, None):
                yield (x, typ, b), "rdfs-type-propagation", ((x, typ, a), (a, sco, b))
        if sco is not None and typ is not None and p == sco:
            for y, _, _ in ctx.g.match_ids(None, typ, x):
                yield (y, typ, a), "rdfs-type-propagation", ((y, typ, x), (x, sco, a))


def _r_subproperty_transitivity(ctx: _Ctx, delta: list[IdTriple]):
    """(P spo Q), (Q spo R) -> (P spo R)"""
    spo = ctx.vid(vocab.RDFS_SUBPROPERTYOF)
    if spo is None:
        return
    for a, p, b in delta:
        if p != spo:
            continue
        for _, _, c in ctx.g.match_ids(b, spo, None):
            yield (a, spo, c), "rdfs-subproperty-transitivity", ((a, spo, b), (b, spo, c))
        for c, _, _ in ctx.g.match_ids(None, spo, a):
            yield (c, spo, b), "rdfs-subproperty-transitivity", ((c, spo, a), (a, spo, b))


def _r_property_propagation(ctx: _Ctx, delta: list[IdTriple]):
    """(x P y), (P spo Q) -> (x Q y); Q must be an IRI to serve as predicate."""
    spo = ctx.vid(vocab.RDFS_SUBPROPERTYOF)
    if spo is None:
        return

    def q_ok(q: int) -> bool:
        from .terms import IRI

        return isinstance(ctx.g.term(q), IRI)

    for s, p, o in delta:
        if p == spo:
            # s is the subproperty, o the superproperty
            if q_ok(o):
                for x, _, y in ctx.g.match_ids(None, s, None):
                    yield (x, o, y), "rdfs-subproperty-propagation", ((x, s, y), (s, spo, o))
        for _, _, q in ctx.g.match_ids(p, spo, None):
            if q_ok(q):
                yield (s, q, o), "rdfs-subproperty-propagation", ((s, p, o), (p, spo, q))


def _r_domain(ctx: _Ctx, delta: list[IdTriple]):
    """(P domain C), (x P y) -> (x type C)"""
    dom = ctx.vid(vocab.RDFS_DOMAIN)
    if dom is None:
        return
    for s, p, o in delta:
        if p == dom:
            for x, _, y in ctx.g.match_ids(None, s, None):
                yield (x, ctx.iid(vocab.RDF_TYPE), o), "rdfs-domain", ((s, dom, o), (x, s, y))
        for _, _, c in ctx.g.match_ids(p, dom, None):
            yield (s, ctx.iid(vocab.RDF_TYPE), c), "rdfs-domain", ((p, dom, c), (s, p, o))


def _r_range(ctx: _Ctx, delta: list[IdTriple]):
    """(P range C), (x P y) -> (y type C); skipped when y is a literal."""
    rng = ctx.vid(vocab.RDFS_RANGE)
    if rng is None:
        return
    for s, p, o in delta:
        if p == rng:
            for x, _, y in ctx.g.match_ids(None, s, None):
                if not ctx.is_literal(y):
                    yield (y, ctx.iid(vocab.RDF_TYPE), o), "rdfs-range", ((s, rng, o), (x, s, y))
        if not ctx.is_literal(o):
            for _, _, c in ctx.g.match_ids(p, rng, None):
                yield (o, ctx.iid(vocab.RDF_TYPE), c), "rdfs-range", ((p, rng, c), (s, p, o))


RDFS_RULES: list[Rule] = [
    _r_subclass_transitivity,
    _r_type_propagation,
    _r_subproperty_transitivity,
    _r_property_propagation,
    _r_domain,
    _r_range,
]


def _fixpoint(graph: Graph, rules: Iterable[Rule]) -> tuple[Graph, dict[IdTriple, tuple[str, tuple[IdTriple, ...]]]]:
    """Run rules to the least fixpoint; returns the work graph and id-level provenance."""
    work = graph.copy()
    ctx = _Ctx(work)
    provenance: dict[IdTriple, tuple[str, tuple[IdTriple, ...]]] = {}
    delta = sorted(work.triple_ids())
    while delta:
        fresh: dict[IdTriple, tuple[str, tuple[IdTriple, ...]]] = {}
        for rule in rules:
            for t, name, premises in rule(ctx, delta):
                if not work.contains_ids(t) and t not in fresh:
                    fresh[t] = (name, premises)
        for t in fresh:
            work.insert_ids(t)
        provenance.update(fresh)
        delta = sorted(fresh)
    return work, provenance


def _build_closure(
    base: Graph,
    work: Graph,
    provenance_ids: dict[IdTriple, tuple[str, tuple[IdTriple, ...]]],
    report: InconsistencyReport,
) -> Closure:
    def to_triple(t: IdTriple) -> Triple:
        return Triple(work.term(t[0]), work.term(t[1]), work.term(t[2]))

    derived = frozenset(to_triple(t) for t in provenance_ids)
    provenance = {
        to_triple(t): Derivation(name, tuple(to_triple(p) for p in premises))
        for t, (name, premises) in provenance_ids.items()
    }
    return Closure(base=base, graph=work, derived=derived, provenance=provenance, report=report)


def saturate_rdfs(graph: Graph) -> Closure:
    """Least fixpoint of the RDFS rule set over the graph."""
    work, prov = _fixpoint(graph, RDFS_RULES)
    return _build_closure(graph, work, prov, InconsistencyReport())


def entails(graph: Graph, triple: Triple) -> bool:
    """True iff the triple is derivable: it is in the saturated graph.

    Sound and complete with respect to the rule set; rule derivability
    stands in for model-theoretic consequence.
    """
    return triple in saturate_rdfs(graph).graph

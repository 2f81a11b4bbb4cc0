"""Dictionary-encoded triple store with SPO/POS/OSP positional indexes.

Terms are interned into integer ids (a bijective dictionary) and triples
are kept as id tuples in a set, plus three nested-dict indexes so any
single triple pattern is answered by one index probe.  Mutation is
single-writer; readers should work on a `copy()` when the original may
still change.
"""

from __future__ import annotations

from typing import Iterable, Iterator
from urllib.parse import urljoin

from .errors import ValidationError
from .terms import IRI, BlankNode, Literal, Term, Triple, TriplePattern, Var, sort_key, triple_sort_key

Binding = dict[str, Term]

IdTriple = tuple[int, int, int]


class Graph:
    """A deduplicated set of triples over an interned term dictionary."""

    def __init__(self, base: str | None = None):
        self.base = base
        self._term_to_id: dict[Term, int] = {}
        self._id_to_term: list[Term] = []
        self._triples: set[IdTriple] = set()
        self._spo: dict[int, dict[int, set[int]]] = {}
        self._pos: dict[int, dict[int, set[int]]] = {}
        self._osp: dict[int, dict[int, set[int]]] = {}

    # -- dictionary ----------------------------------------------------

    def _resolve(self, iri: IRI) -> IRI:
        if iri.is_absolute():
            return iri
        if self.base is None:
            raise ValidationError(f"relative IRI {iri.value!r} and no base IRI is declared")
        if self.base.endswith("#"):
            return IRI(self.base + iri.value)
        return IRI(urljoin(self.base, iri.value))

    def intern(self, term: Term) -> int:
        """Return the id of `term`, assigning a fresh one on first sight.

        Relative IRIs are resolved against the graph's base IRI; with no
        base they are rejected.
        """
        if isinstance(term, IRI):
            term = self._resolve(term)
        elif not isinstance(term, (BlankNode, Literal)):
            raise ValidationError(f"not an RDF term: {term!r}")
        tid = self._term_to_id.get(term)
        if tid is None:
            tid = len(self._id_to_term)
            self._term_to_id[term] = tid
            self._id_to_term.append(term)
        return tid

    def lookup(self, term: Term) -> int | None:
        """Id of `term` if already interned (relative IRIs resolved), else None."""
        if isinstance(term, IRI) and not term.is_absolute() and self.base is not None:
            term = self._resolve(term)
        return self._term_to_id.get(term)

    def term(self, tid: int) -> Term:
        return self._id_to_term[tid]

    # -- triples -------------------------------------------------------

    def insert(self, triple: Triple) -> bool:
        """Insert a triple; returns False when it was already present."""
        s = self.intern(triple.subject)
        p = self.intern(triple.predicate)
        o = self.intern(triple.object)
        return self.insert_ids((s, p, o))

    def add(self, subject: Term, predicate: Term, object: Term) -> bool:
        """Construct and insert; positional constraints are checked here."""
        if isinstance(subject, IRI):
            subject = self._resolve(subject)
        if isinstance(predicate, IRI):
            predicate = self._resolve(predicate)
        if isinstance(object, IRI):
            object = self._resolve(object)
        return self.insert(Triple(subject, predicate, object))

    def insert_ids(self, t: IdTriple) -> bool:
        if t in self._triples:
            return False
        s, p, o = t
        self._triples.add(t)
        self._spo.setdefault(s, {}).setdefault(p, set()).add(o)
        self._pos.setdefault(p, {}).setdefault(o, set()).add(s)
        self._osp.setdefault(o, {}).setdefault(s, set()).add(p)
        return True

    def contains(self, triple: Triple) -> bool:
        s = self.lookup(triple.subject)
        p = self.lookup(triple.predicate)
        o = self.lookup(triple.object)
        if s is None or p is None or o is None:
            return False
        return (s, p, o) in self._triples

    def contains_ids(self, t: IdTriple) -> bool:
        return t in self._triples

    def mentions(self, term: Term) -> bool:
        """True when the term occurs in at least one triple position."""
        tid = self.lookup(term)
        if tid is None:
            return False
        return tid in self._spo or tid in self._pos or tid in self._osp

    def __contains__(self, triple: Triple) -> bool:
        return self.contains(triple)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples())

    def _to_triple(self, t: IdTriple) -> Triple:
        return Triple(self._id_to_term[t[0]], self._id_to_term[t[1]], self._id_to_term[t[2]])

    def triples(self) -> list[Triple]:
        """All triples in canonical order."""
        out = [self._to_triple(t) for t in self._triples]
        out.sort(key=triple_sort_key)
        return out

    def triple_ids(self) -> set[IdTriple]:
        return set(self._triples)

    def copy(self) -> "Graph":
        g = Graph(base=self.base)
        g._term_to_id = dict(self._term_to_id)
        g._id_to_term = list(self._id_to_term)
        g._triples = set(self._triples)
        g._spo = {s: {p: set(os) for p, os in ps.items()} for s, ps in self._spo.items()}
        g._pos = {p: {o: set(ss) for o, ss in os.items()} for p, os in self._pos.items()}
        g._osp = {o: {s: set(ps) for s, ps in ss.items()} for o, ss in self._osp.items()}
        return g

    # -- matching ------------------------------------------------------

    def match_ids(self, s: int | None = None, p: int | None = None, o: int | None = None) -> Iterator[IdTriple]:
        """Triples matching a pattern of ids, None being a wildcard.

        Each of the eight bound/unbound combinations is served by a probe
        into exactly one of the three indexes.
        """
        if s is not None and p is not None and o is not None:
            if (s, p, o) in self._triples:
                yield (s, p, o)
        elif s is not None and p is not None:
            for oo in self._spo.get(s, {}).get(p, ()):
                yield (s, p, oo)
        elif s is not None and o is not None:
            for pp in self._osp.get(o, {}).get(s, ()):
                yield (s, pp, o)
        elif p is not None and o is not None:
            for ss in self._pos.get(p, {}).get(o, ()):
                yield (ss, p, o)
        elif s is not None:
            for pp, os_ in self._spo.get(s, {}).items():
                for oo in os_:
                    yield (s, pp, oo)
        elif p is not None:
            for oo, ss in self._pos.get(p, {}).items():
                for s_ in ss:
                    yield (s_, p, oo)
        elif o is not None:
            for ss, ps in self._osp.get(o, {}).items():
                for pp in ps:
                    yield (ss, pp, o)
        else:
            yield from self._triples

    def match_terms(
        self, s: Term | None = None, p: Term | None = None, o: Term | None = None
    ) -> Iterator[Triple]:
        """Wildcard matching at the term level; unknown terms match nothing."""
        ids = []
        for t in (s, p, o):
            if t is None:
                ids.append(None)
            else:
                tid = self.lookup(t)
                if tid is None:
                    return
                ids.append(tid)
        for it in self.match_ids(*ids):
            yield self._to_triple(it)

    def match(self, pattern: TriplePattern) -> list[tuple[Triple, Binding]]:
        """All triples unifying with the pattern, with variable bindings.

        Repeated variables must bind consistently.  Output is sorted in
        canonical triple order.
        """
        ids: list[int | None] = []
        for pos in pattern.positions():
            if isinstance(pos, Var):
                ids.append(None)
            else:
                tid = self.lookup(pos)
                if tid is None:
                    return []
                ids.append(tid)
        out = []
        for it in self.match_ids(*ids):
            triple = self._to_triple(it)
            binding: Binding = {}
            ok = True
            for pos, value in zip(pattern.positions(), (triple.subject, triple.predicate, triple.object)):
                if isinstance(pos, Var):
                    seen = binding.get(pos.name)
                    if seen is None:
                        binding[pos.name] = value
                    elif seen != value:
                        ok = False
                        break
            if ok:
                out.append((triple, binding))
        out.sort(key=lambda pair: triple_sort_key(pair[0]))
        return out

    def cardinality(self, s: Term | Var | None = None, p: Term | Var | None = None, o: Term | Var | None = None) -> int:
        """Estimated result size of a pattern, used for join ordering."""
        ids = []
        for t in (s, p, o):
            if t is None or isinstance(t, Var):
                ids.append(None)
            else:
                tid = self.lookup(t)
                if tid is None:
                    return 0
                ids.append(tid)
        return sum(1 for _ in self.match_ids(*ids))

    # -- knowledge-graph views ------------------------------------------

    def entities(self) -> list[Term]:
        """Terms occurring in subject or object position, canonical order."""
        seen = set()
        for s, _, o in self._triples:
            seen.add(s)
            seen.add(o)
        return sorted((self._id_to_term[i] for i in seen), key=sort_key)

    def relations(self) -> list[Term]:
        """Terms occurring in predicate position, canonical order."""
        seen = {p for _, p, _ in self._triples}
        return sorted((self._id_to_term[i] for i in seen), key=sort_key)

    def terms(self) -> list[Term]:
        """Terms occurring in any triple position, canonical order."""
        seen = set()
        for t in self._triples:
            seen.update(t)
        return sorted((self._id_to_term[i] for i in seen), key=sort_key)


def graph_from_triples(triples: Iterable[Triple], base: str | None = None) -> Graph:
    g = Graph(base=base)
    for t in triples:
        g.insert(t)
    return g

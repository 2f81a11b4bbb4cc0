"""Reading and writing triples: N-Triples and a Turtle subset.

The Turtle subset covers what ontology snippets in the wild actually
use: @prefix, qnames, 'a' for rdf:type, ';' and ',' continuation lists,
'[ ... ]' anonymous nodes, '( ... )' collections (expanded into
rdf:first/rdf:rest chains ending at rdf:nil), and plain, typed and
language-tagged literals.  Serialization is canonical N-Triples: one
sorted line per triple, byte-identical across runs for equal graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import vocab
from .errors import ParseError, UnknownPrefixError, ValidationError
from .graph import Graph
from .terms import IRI, BlankNode, Literal, PrefixMap, Term, Triple


@dataclass
class ParseReport:
    """Outcome of a successful Turtle parse."""

    graph: Graph
    prefixes: PrefixMap
    warnings: list[tuple[int, str]] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Tokenizer (shared by the Turtle and N-Triples readers)
# ---------------------------------------------------------------------------

IRIREF = "iriref"
QNAME = "qname"
BLANK = "blank"
STRING = "string"
LANGTAG = "langtag"
HATHAT = "^^"
DOT = "."
SEMICOLON = ";"
COMMA = ","
LBRACKET = "["
RBRACKET = "]"
LPAREN = "("
RPAREN = ")"
KEYWORD_A = "a"
AT_PREFIX = "@prefix"
EOF = "eof"

_PUNCT = {".": DOT, ";": SEMICOLON, ",": COMMA, "[": LBRACKET, "]": RBRACKET, "(": LPAREN, ")": RPAREN}

_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    col: int


def _tokenize(text: str, start_line: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = start_line
    col = 1
    n = len(text)

    def err(msg: str):
        raise ParseError(msg, line, col)

    def advance(k: int = 1):
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    def read_escape() -> str:
        # called with text[i] == '\\'
        nonlocal i
        if i + 1 >= n:
            err("dangling escape")
        c = text[i + 1]
        if c in _ESCAPES:
            advance(2)
            return _ESCAPES[c]
        if c == "u" or c == "U":
            width = 4 if c == "u" else 8
            hexpart = text[i + 2 : i + 2 + width]
            if len(hexpart) < width or any(h not in "0123456789abcdefABCDEF" for h in hexpart):
                err(f"bad \\{c} escape")
            advance(2 + width)
            return chr(int(hexpart, 16))
        err(f"unknown escape \\{c}")

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            advance()
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                advance()
            continue
        tline, tcol = line, col
        if c == "<":
            advance()
            buf = []
            while i < n and text[i] != ">":
                if text[i] == "\\":
                    buf.append(read_escape())
                elif text[i] == "\n":
                    raise ParseError("newline inside IRI", tline, tcol)
                else:
                    buf.append(text[i])
                    advance()
            if i >= n:
                raise ParseError("unterminated IRI", tline, tcol)
            advance()  # '>'
            tokens.append(_Token(IRIREF, "".join(buf), tline, tcol))
        elif c == '"':
            advance()
            buf = []
            while i < n and text[i] != '"':
                if text[i] == "\\":
                    buf.append(read_escape())
                elif text[i] == "\n":
                    raise ParseError("newline inside literal", tline, tcol)
                else:
                    buf.append(text[i])
                    advance()
            if i >= n:
                raise ParseError("unterminated literal", tline, tcol)
            advance()  # closing quote
            tokens.append(_Token(STRING, "".join(buf), tline, tcol))
        elif c == "@":
            advance()
            buf = []
            while i < n and (text[i].isalnum() or text[i] == "-"):
                buf.append(text[i])
                advance()
            word = "".join(buf)
            if word == "prefix":
                tokens.append(_Token(AT_PREFIX, word, tline, tcol))
            elif word:
                tokens.append(_Token(LANGTAG, word, tline, tcol))
            else:
                raise ParseError("dangling '@'", tline, tcol)
        elif c == "^":
            if text[i : i + 2] != "^^":
                err("expected '^^'")
            advance(2)
            tokens.append(_Token(HATHAT, "^^", tline, tcol))
        elif c == "_" and text[i : i + 2] == "_:":
            advance(2)
            buf = []
            while i < n and not text[i].isspace() and text[i] not in ".;,()[]<\"":
                buf.append(text[i])
                advance()
            if not buf:
                raise ParseError("empty blank node label", tline, tcol)
            tokens.append(_Token(BLANK, "".join(buf), tline, tcol))
        elif c in _PUNCT:
            advance()
            tokens.append(_Token(_PUNCT[c], c, tline, tcol))
        else:
            # bare word: either the keyword 'a' or a qname like edu:Warsaw
            buf = []
            while i < n and not text[i].isspace() and text[i] not in ";,()[]<>\"^@":
                # '.' ends a statement unless it is part of the local name
                if text[i] == "." and (i + 1 >= n or text[i + 1].isspace() or text[i + 1] in ";,()[]"):
                    break
                buf.append(text[i])
                advance()
            word = "".join(buf)
            if not word:
                err(f"unexpected character {c!r}")
            if word == "a":
                tokens.append(_Token(KEYWORD_A, word, tline, tcol))
            elif ":" in word:
                tokens.append(_Token(QNAME, word, tline, tcol))
            else:
                raise ParseError(f"unexpected token {word!r}", tline, tcol)
    tokens.append(_Token(EOF, "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# N-Triples
# ---------------------------------------------------------------------------


def _term_from_tokens(tokens: list[_Token], pos: int, allow_qname: bool = False, prefixes: PrefixMap | None = None):
    """Read one term starting at tokens[pos]; returns (term, next_pos)."""
    tok = tokens[pos]
    if tok.kind == IRIREF:
        return IRI(tok.value), pos + 1
    if tok.kind == BLANK:
        return BlankNode(tok.value), pos + 1
    if tok.kind == QNAME and allow_qname:
        assert prefixes is not None
        try:
            return prefixes.expand(tok.value), pos + 1
        except UnknownPrefixError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from exc
    if tok.kind == STRING:
        nxt = tokens[pos + 1]
        if nxt.kind == LANGTAG:
            return Literal(tok.value, language=nxt.value), pos + 2
        if nxt.kind == HATHAT:
            dt_tok = tokens[pos + 2]
            if dt_tok.kind == IRIREF:
                return Literal(tok.value, datatype=dt_tok.value), pos + 3
            if dt_tok.kind == QNAME and allow_qname:
                assert prefixes is not None
                return Literal(tok.value, datatype=prefixes.expand(dt_tok.value).value), pos + 3
            raise ParseError("expected datatype IRI after '^^'", dt_tok.line, dt_tok.col)
        return Literal(tok.value), pos + 1
    raise ParseError(f"expected a term, got {tok.value!r}", tok.line, tok.col)


def parse_ntriples(text: str) -> Graph:
    """Parse N-Triples: one '.'-terminated triple per non-comment line."""
    g = Graph()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if not raw.strip():
            continue
        tokens = _tokenize(raw, start_line=lineno)
        if tokens[0].kind == EOF:  # comment-only line
            continue
        subject, pos = _term_from_tokens(tokens, 0)
        predicate, pos = _term_from_tokens(tokens, pos)
        object_, pos = _term_from_tokens(tokens, pos)
        if tokens[pos].kind != DOT:
            raise ParseError("expected '.' terminating the triple", lineno, tokens[pos].col)
        if tokens[pos + 1].kind != EOF:
            raise ParseError("trailing content after '.'", lineno, tokens[pos + 1].col)
        try:
            g.insert(Triple(subject, predicate, object_))
        except ValidationError as exc:
            raise ParseError(str(exc), lineno) from exc
    return g


def parse_term(text: str) -> Term:
    """Parse a single term in N-Triples syntax (used by model files)."""
    tokens = _tokenize(text)
    term, pos = _term_from_tokens(tokens, 0)
    if tokens[pos].kind != EOF:
        raise ParseError(f"trailing content after term: {text!r}")
    return term


# ---------------------------------------------------------------------------
# Turtle subset
# ---------------------------------------------------------------------------


class _TurtleParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.graph = Graph()
        self.prefixes = PrefixMap.common()
        self.prefixes.bind("", vocab.DEFAULT_NS)
        self.warnings: list[tuple[int, str]] = []
        self._doc_labels = {t.value for t in self.tokens if t.kind == BLANK}
        self._anon = 0

    def _peek(self) -> _Token:
        return self.tokens[self.pos]

    def _next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, got {tok.value!r}", tok.line, tok.col)
        return tok

    def _fresh_blank(self) -> BlankNode:
        while True:
            self._anon += 1
            label = f"anon{self._anon}"
            if label not in self._doc_labels:
                self._doc_labels.add(label)
                return BlankNode(label)

    def _emit(self, s: Term, p: Term, o: Term, tok: _Token) -> None:
        try:
            self.graph.insert(Triple(s, p, o))
        except ValidationError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from exc

    def parse(self) -> ParseReport:
        while self._peek().kind != EOF:
            if self._peek().kind == AT_PREFIX:
                self._prefix_directive()
            else:
                self._triples_statement()
        return ParseReport(self.graph, self.prefixes, self.warnings)

    def _prefix_directive(self) -> None:
        self._expect(AT_PREFIX)
        tok = self._next()
        if tok.kind != QNAME or not tok.value.endswith(":"):
            raise ParseError("expected 'prefix:' after @prefix", tok.line, tok.col)
        prefix = tok.value[:-1]
        ns = self._expect(IRIREF).value
        old = self.prefixes.namespace(prefix)
        if old is not None and old != ns and not (prefix == "" and old == vocab.DEFAULT_NS):
            self.warnings.append((tok.line, f"prefix {prefix!r} redefined from <{old}> to <{ns}>"))
        self.prefixes.bind(prefix, ns)
        self._expect(DOT)

    def _triples_statement(self) -> None:
        subject = self._node(as_subject=True)
        self._predicate_object_list(subject)
        self._expect(DOT)

    def _predicate_object_list(self, subject: Term) -> None:
        while True:
            verb_tok = self._peek()
            predicate = self._verb()
            while True:
                obj = self._node()
                self._emit(subject, predicate, obj, verb_tok)
                if self._peek().kind == COMMA:
                    self._next()
                    continue
                break
            if self._peek().kind == SEMICOLON:
                self._next()
                # tolerate a trailing ';' before '.' or ']'
                if self._peek().kind in (DOT, RBRACKET):
                    return
                continue
            return

    def _verb(self) -> Term:
        tok = self._peek()
        if tok.kind == KEYWORD_A:
            self._next()
            return vocab.RDF_TYPE
        if tok.kind in (IRIREF, QNAME):
            term, self.pos = _term_from_tokens(self.tokens, self.pos, allow_qname=True, prefixes=self.prefixes)
            return term
        raise ParseError(f"expected a predicate, got {tok.value!r}", tok.line, tok.col)

    def _node(self, as_subject: bool = False) -> Term:
        tok = self._peek()
        if tok.kind == LBRACKET:
            self._next()
            node = self._fresh_blank()
            if self._peek().kind != RBRACKET:
                self._predicate_object_list(node)
            self._expect(RBRACKET)
            return node
        if tok.kind == LPAREN:
            self._next()
            return self._collection()
        if tok.kind == STRING:
            if as_subject:
                raise ParseError("literal cannot be a subject", tok.line, tok.col)
            term, self.pos = _term_from_tokens(self.tokens, self.pos, allow_qname=True, prefixes=self.prefixes)
            return term
        if tok.kind in (IRIREF, QNAME, BLANK):
            term, self.pos = _term_from_tokens(self.tokens, self.pos, allow_qname=True, prefixes=self.prefixes)
            return term
        raise ParseError(f"expected a node, got {tok.value!r}", tok.line, tok.col)

    def _collection(self) -> Term:
        items = []
        open_tok = self._peek()
        while self._peek().kind != RPAREN:
            if self._peek().kind == EOF:
                raise ParseError("unterminated collection", open_tok.line, open_tok.col)
            items.append(self._node())
        self._next()  # ')'
        if not items:
            return vocab.RDF_NIL
        nodes = [self._fresh_blank() for _ in items]
        for i, item in enumerate(items):
            self._emit(nodes[i], vocab.RDF_FIRST, item, open_tok)
            rest = nodes[i + 1] if i + 1 < len(nodes) else vocab.RDF_NIL
            self._emit(nodes[i], vocab.RDF_REST, rest, open_tok)
        return nodes[0]


def parse_turtle(text: str) -> ParseReport:
    """Parse the Turtle subset; rdf/rdfs/owl/xsd and the empty prefix are pre-bound."""
    return _TurtleParser(text).parse()


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _escape_string(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def _escape_iri(s: str) -> str:
    out = []
    for ch in s:
        if ch in '<>"{}|^`\\' or ord(ch) <= 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def format_term(term: Term) -> str:
    """N-Triples text for one term."""
    if isinstance(term, IRI):
        return f"<{_escape_iri(term.value)}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if isinstance(term, Literal):
        base = f'"{_escape_string(term.lexical)}"'
        if term.language:
            return f"{base}@{term.language}"
        if term.datatype:
            return f"{base}^^<{_escape_iri(term.datatype)}>"
        return base
    raise TypeError(f"not a term: {term!r}")


def format_triple(t: Triple) -> str:
    return f"{format_term(t.subject)} {format_term(t.predicate)} {format_term(t.object)} ."


def serialize_ntriples(graph: Graph) -> str:
    """Canonical N-Triples: sorted, one line per triple, trailing newline."""
    lines = [format_triple(t) for t in graph.triples()]
    if not lines:
        return ""
    return "\n".join(lines) + "\n"

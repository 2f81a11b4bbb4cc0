"""Translation-based knowledge-graph embeddings with margin-ranking training.

A triple (s, p, o) is scored by how close the subject vector translated
by the relation vector lands to the object vector: score = -||e_s + r_p
- e_o|| under an L1 or L2 norm, zero exactly at a perfect translation.
Training is plain per-sample SGD on the hinge loss max(0, margin +
d(positive) - d(negative)) with uniformly corrupted negatives; entity
vectors are renormalized to unit length after every epoch.  Everything
is deterministic given (graph, config, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SamplingError, UnknownTermError, ValidationError
from .graph import Graph
from .io import format_term, parse_term
from .terms import Literal, Term, Triple, sort_key, triple_sort_key

L1 = "L1"
L2 = "L2"

CORRUPT_HEAD = "head"
CORRUPT_TAIL = "tail"
CORRUPT_BOTH = "both"


@dataclass(frozen=True)
class TrainConfig:
    margin: float = 1.0
    learning_rate: float = 0.01
    epochs: int = 100
    negatives_per_positive: int = 1
    corruption: str = CORRUPT_BOTH
    filtered_sampling: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.margin <= 0:
            raise ValidationError("margin must be positive")
        if self.learning_rate <= 0:
            raise ValidationError("learning rate must be positive")
        if self.epochs < 0:
            raise ValidationError("epoch count must be nonnegative")
        if self.negatives_per_positive < 1:
            raise ValidationError("need at least one negative per positive")
        if self.corruption not in (CORRUPT_HEAD, CORRUPT_TAIL, CORRUPT_BOTH):
            raise ValidationError(f"unknown corruption mode {self.corruption!r}")


@dataclass
class EmbeddingModel:
    dim: int
    norm: str
    entities: tuple[Term, ...]
    relations: tuple[Term, ...]
    entity_vecs: np.ndarray
    relation_vecs: np.ndarray
    entity_index: dict[Term, int] = field(repr=False, default_factory=dict)
    relation_index: dict[Term, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.entity_index:
            self.entity_index = {t: i for i, t in enumerate(self.entities)}
        if not self.relation_index:
            self.relation_index = {t: i for i, t in enumerate(self.relations)}

    def entity_id(self, term: Term) -> int:
        idx = self.entity_index.get(term)
        if idx is None:
            raise UnknownTermError(f"unknown entity {format_term(term)}")
        return idx

    def relation_id(self, term: Term) -> int:
        idx = self.relation_index.get(term)
        if idx is None:
            raise UnknownTermError(f"unknown relation {format_term(term)}")
        return idx


def init_model(graph: Graph, dim: int, seed: int, norm: str = L1) -> EmbeddingModel:
    """Fresh model: uniform vectors in [-6/sqrt(d), 6/sqrt(d)], unit entity rows."""
    if len(graph) == 0:
        raise ValidationError("cannot initialize an embedding model on an empty graph")
    if dim < 1:
        raise ValidationError("dimension must be at least 1")
    if norm not in (L1, L2):
        raise ValidationError(f"norm must be {L1} or {L2}, got {norm!r}")
    entities = tuple(graph.entities())
    relations = tuple(graph.relations())
    rng = np.random.default_rng(seed)
    bound = 6.0 / math.sqrt(dim)
    entity_vecs = rng.uniform(-bound, bound, (len(entities), dim))
    relation_vecs = rng.uniform(-bound, bound, (len(relations), dim))
    model = EmbeddingModel(dim, norm, entities, relations, entity_vecs, relation_vecs)
    _renormalize_entities(model)
    return model


def _renormalize_entities(model: EmbeddingModel) -> None:
    norms = np.linalg.norm(model.entity_vecs, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    model.entity_vecs /= norms


def _distance(vec: np.ndarray, norm: str) -> float:
    if norm == L1:
        return float(np.abs(vec).sum())
    return float(np.sqrt((vec * vec).sum()))


def _distance_grad(vec: np.ndarray, norm: str) -> np.ndarray:
    if norm == L1:
        return np.sign(vec)
    d = np.sqrt((vec * vec).sum())
    if d == 0.0:
        return np.zeros_like(vec)
    return vec / d


def score(model: EmbeddingModel, s: Term, p: Term, o: Term) -> float:
    """Triple plausibility: negated translation distance, at most 0."""
    vec = (
        model.entity_vecs[model.entity_id(s)]
        + model.relation_vecs[model.relation_id(p)]
        - model.entity_vecs[model.entity_id(o)]
    )
    return -_distance(vec, model.norm)


IdxTriple = tuple[int, int, int]


def loss_and_gradients(
    model: EmbeddingModel, positive: IdxTriple, negative: IdxTriple, margin: float
) -> tuple[float, dict[tuple[str, int], np.ndarray]]:
    """Hinge loss of one (positive, negative) pair and its exact gradients.

    Gradients are keyed by ("entity"|"relation", row); contributions of
    a vector that appears on both sides accumulate.  An inactive hinge
    returns zero loss and no gradients.
    """
    sp, pp, op = positive
    sn, pn, on = negative
    v_pos = model.entity_vecs[sp] + model.relation_vecs[pp] - model.entity_vecs[op]
    v_neg = model.entity_vecs[sn] + model.relation_vecs[pn] - model.entity_vecs[on]
    loss = margin + _distance(v_pos, model.norm) - _distance(v_neg, model.norm)
    if loss <= 0.0:
        return 0.0, {}
    grads: dict[tuple[str, int], np.ndarray] = {}

    def accumulate(kind: str, idx: int, grad: np.ndarray):
        key = (kind, idx)
        if key in grads:
            grads[key] = grads[key] + grad
        else:
            grads[key] = grad.copy()

    g_pos = _distance_grad(v_pos, model.norm)
    g_neg = _distance_grad(v_neg, model.norm)
    accumulate("entity", sp, g_pos)
    accumulate("relation", pp, g_pos)
    accumulate("entity", op, -g_pos)
    accumulate("entity", sn, -g_neg)
    accumulate("relation", pn, -g_neg)
    accumulate("entity", on, g_neg)
    return float(loss), grads


def negative_sample(triple: Triple, graph: Graph, config: TrainConfig, rng: np.random.Generator) -> Triple:
    """Corrupt the head or tail with a uniformly drawn entity.

    With filtered sampling the draw is retried while it hits a known
    positive; after the retry budget a deterministic scan finds a clean
    corruption, falling back to any non-identical one.  Raises
    SamplingError when no corruption different from the triple exists.
    """
    entities = graph.entities()
    if config.corruption == CORRUPT_BOTH:
        corrupt_head = bool(rng.integers(0, 2))
    else:
        corrupt_head = config.corruption == CORRUPT_HEAD

    def build(side_head: bool, entity: Term) -> Triple | None:
        if side_head:
            if isinstance(entity, Literal):
                return None
            return Triple(entity, triple.predicate, triple.object)
        return Triple(triple.subject, triple.predicate, entity)

    for _ in range(100):
        candidate = build(corrupt_head, entities[int(rng.integers(0, len(entities)))])
        if candidate is None or candidate == triple:
            continue
        if config.filtered_sampling and candidate in graph:
            continue
        return candidate

    sides = [corrupt_head] if config.corruption != CORRUPT_BOTH else [corrupt_head, not corrupt_head]
    fallback = None
    for side in sides:
        for entity in entities:
            candidate = build(side, entity)
            if candidate is None or candidate == triple:
                continue
            if config.filtered_sampling and candidate in graph:
                if fallback is None:
                    fallback = candidate
                continue
            return candidate
    if fallback is not None:
        return fallback
    raise SamplingError(f"no corruption of {format_term(triple.subject)} triple is possible")


def train_epoch(
    model: EmbeddingModel, graph: Graph, config: TrainConfig, rng: np.random.Generator | None = None
) -> float:
    """One pass of per-sample SGD over shuffled positives; returns mean loss."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    positives = graph.triples()
    order = rng.permutation(len(positives))
    total = 0.0
    count = 0
    for idx in order:
        pos = positives[int(idx)]
        pos_ids = (model.entity_id(pos.subject), model.relation_id(pos.predicate), model.entity_id(pos.object))
        for _ in range(config.negatives_per_positive):
            neg = negative_sample(pos, graph, config, rng)
            neg_ids = (model.entity_id(neg.subject), model.relation_id(neg.predicate), model.entity_id(neg.object))
            loss, grads = loss_and_gradients(model, pos_ids, neg_ids, config.margin)
            total += loss
            count += 1
            for (kind, row), grad in grads.items():
                table = model.entity_vecs if kind == "entity" else model.relation_vecs
                table[row] -= config.learning_rate * grad
    _renormalize_entities(model)
    return total / count if count else 0.0


def train(model: EmbeddingModel, graph: Graph, config: TrainConfig) -> list[float]:
    """Run config.epochs epochs from one seeded generator; returns epoch losses."""
    rng = np.random.default_rng(config.seed)
    return [train_epoch(model, graph, config, rng) for _ in range(config.epochs)]


def _candidate_scores(model: EmbeddingModel, free_head: bool, p: Term, bound: Term) -> np.ndarray:
    r = model.relation_vecs[model.relation_id(p)]
    e = model.entity_vecs[model.entity_id(bound)]
    diff = (model.entity_vecs + r - e) if free_head else (e + r - model.entity_vecs)
    if model.norm == L1:
        return -np.abs(diff).sum(axis=1)
    return -np.sqrt((diff * diff).sum(axis=1))


def predict_links(
    model: EmbeddingModel,
    graph: Graph,
    s: Term | None = None,
    p: Term | None = None,
    o: Term | None = None,
    k: int = 10,
    filtered: bool = False,
) -> list[tuple[Term, float]]:
    """Top-k completions for a triple with one free slot among subject/object.

    The filtered variant drops candidates that already form a training
    triple.  Ties are broken by canonical term order.
    """
    if k <= 0:
        raise ValidationError("k must be positive")
    if p is None:
        raise ValidationError("the relation must be bound")
    if (s is None) == (o is None):
        raise ValidationError("exactly one of subject and object must be free")
    free_head = s is None
    bound = o if free_head else s
    scores = _candidate_scores(model, free_head, p, bound)
    ranked = []
    for i, term in enumerate(model.entities):
        if free_head and isinstance(term, Literal):
            continue
        candidate = Triple(term, p, o) if free_head else Triple(s, p, term)
        if filtered and candidate in graph:
            continue
        ranked.append((term, float(scores[i])))
    ranked.sort(key=lambda pair: (-pair[1], sort_key(pair[0])))
    return ranked[:k]


@dataclass(frozen=True)
class RankMetrics:
    mean_rank: float
    mrr: float
    hits_at_1: float
    hits_at_3: float
    hits_at_10: float


@dataclass(frozen=True)
class EvalReport(RankMetrics):
    per_relation: dict[Term, RankMetrics] = field(default_factory=dict)


def _metrics(ranks: list[int]) -> RankMetrics:
    n = len(ranks)
    return RankMetrics(
        mean_rank=sum(ranks) / n,
        mrr=sum(1.0 / r for r in ranks) / n,
        hits_at_1=sum(r <= 1 for r in ranks) / n,
        hits_at_3=sum(r <= 3 for r in ranks) / n,
        hits_at_10=sum(r <= 10 for r in ranks) / n,
    )


def evaluate(model: EmbeddingModel, train_graph: Graph, test_triples: list[Triple]) -> EvalReport:
    """Filtered link-prediction protocol over head and tail replacement.

    For each test triple the true head (and tail) is ranked against all
    candidate entities, excluding every other completion known from
    train or test; the rank counts strictly better scores plus one.
    """
    offenders = []
    for t in test_triples:
        for term, known in ((t.subject, model.entity_index), (t.predicate, model.relation_index), (t.object, model.entity_index)):
            if term not in known:
                offenders.append(format_term(term))
    if offenders:
        raise UnknownTermError("test triples mention unknown terms: " + ", ".join(sorted(set(offenders))))

    known = {(t.subject, t.predicate, t.object) for t in train_graph.triples()}
    known.update((t.subject, t.predicate, t.object) for t in test_triples)

    ranks: list[int] = []
    by_relation: dict[Term, list[int]] = {}
    for t in sorted(test_triples, key=triple_sort_key):
        for free_head in (True, False):
            true_term = t.subject if free_head else t.object
            bound = t.object if free_head else t.subject
            scores = _candidate_scores(model, free_head, t.predicate, bound)
            true_score = scores[model.entity_id(true_term)]
            rank = 1
            for i, term in enumerate(model.entities):
                if term == true_term:
                    continue
                if free_head and isinstance(term, Literal):
                    continue
                completion = (term, t.predicate, t.object) if free_head else (t.subject, t.predicate, term)
                if completion in known:
                    continue
                if scores[i] > true_score:
                    rank += 1
            ranks.append(rank)
            by_relation.setdefault(t.predicate, []).append(rank)

    overall = _metrics(ranks)
    return EvalReport(
        mean_rank=overall.mean_rank,
        mrr=overall.mrr,
        hits_at_1=overall.hits_at_1,
        hits_at_3=overall.hits_at_3,
        hits_at_10=overall.hits_at_10,
        per_relation={rel: _metrics(rs) for rel, rs in by_relation.items()},
    )


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def dump_model(model: EmbeddingModel) -> str:
    """TSV text: a header line, then one row per entity and relation vector."""
    lines = [f"d={model.dim} norm={model.norm}"]
    for kind, terms, table in (("E", model.entities, model.entity_vecs), ("R", model.relations, model.relation_vecs)):
        for i, term in enumerate(terms):
            values = "\t".join(format(v, ".17g") for v in table[i])
            lines.append(f"{kind}\t{format_term(term)}\t{values}")
    return "\n".join(lines) + "\n"


def load_model_text(text: str) -> EmbeddingModel:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValidationError("empty model file")
    header = lines[0].split()
    if len(header) != 2 or not header[0].startswith("d=") or not header[1].startswith("norm="):
        raise ValidationError(f"bad model header: {lines[0]!r}")
    dim = int(header[0][2:])
    norm = header[1][5:]
    if norm not in (L1, L2):
        raise ValidationError(f"bad norm in model header: {norm!r}")
    entities: list[Term] = []
    relations: list[Term] = []
    entity_rows: list[list[float]] = []
    relation_rows: list[list[float]] = []
    for ln in lines[1:]:
        fields = ln.split("\t")
        if len(fields) != dim + 2 or fields[0] not in ("E", "R"):
            raise ValidationError(f"bad model row: {ln!r}")
        term = parse_term(fields[1])
        values = [float(v) for v in fields[2:]]
        if fields[0] == "E":
            entities.append(term)
            entity_rows.append(values)
        else:
            relations.append(term)
            relation_rows.append(values)
    return EmbeddingModel(
        dim=dim,
        norm=norm,
        entities=tuple(entities),
        relations=tuple(relations),
        entity_vecs=np.array(entity_rows, dtype=np.float64).reshape(len(entities), dim),
        relation_vecs=np.array(relation_rows, dtype=np.float64).reshape(len(relations), dim),
    )


def save_model(model: EmbeddingModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_model(model))


def load_model(path) -> EmbeddingModel:
    with open(path, "r", encoding="utf-8") as fh:
        return load_model_text(fh.read())

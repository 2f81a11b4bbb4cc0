"""Frame-based knowledge: named slots, defined/default facets, inheritance.

General frames form an IS-A hierarchy (acyclic, validated on insertion);
individual frames attach to general ones via INSTANCE-OF.  Slot lookup
walks the frame itself, then its ancestors breadth-first, ties broken by
parent declaration order.  A frame system exports to RDF so the RDFS
engine can rederive the same class memberships.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import ParseError, ValidationError
from .graph import Graph
from .terms import IRI, Literal, Triple
from . import vocab

GENERAL = "general"
INDIVIDUAL = "individual"
DEFINED = "defined"
DEFAULT = "default"


@dataclass(frozen=True)
class Facet:
    """A slot filler: its value, how firmly it holds, and any fill constraint."""

    value: object = None
    strength: str = DEFINED
    allowed_values: frozenset | None = None
    required_type: str | None = None

    def __post_init__(self):
        if self.strength not in (DEFINED, DEFAULT):
            raise ValidationError(f"facet strength must be defined or default, got {self.strength!r}")
        if self.allowed_values is not None and self.required_type is not None:
            raise ValidationError("a facet constraint is either an allowed-values set or a required type, not both")

    def constrained(self) -> bool:
        return self.allowed_values is not None or self.required_type is not None


@dataclass(frozen=True)
class Frame:
    name: str
    kind: str = GENERAL
    parents: tuple[str, ...] = ()
    slots: dict[str, Facet] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in (GENERAL, INDIVIDUAL):
            raise ValidationError(f"frame kind must be general or individual, got {self.kind!r}")


@dataclass(frozen=True)
class SlotValue:
    value: object
    frame: str
    strength: str


@dataclass(frozen=True)
class FillResult:
    accepted: bool
    reason: str | None = None
    source: str | None = None


class FrameSystem:
    def __init__(self, namespace: str = "urn:frame:"):
        self.namespace = namespace
        self.frames: dict[str, Frame] = {}

    def add(self, frame: Frame) -> None:
        """Insert a frame, rejecting IS-A cycles among general frames."""
        if frame.kind == GENERAL:
            self._check_acyclic(frame)
        self.frames[frame.name] = frame

    def general(self, name: str, parents: tuple[str, ...] = (), slots: dict[str, Facet] | None = None) -> Frame:
        f = Frame(name, GENERAL, tuple(parents), dict(slots or {}))
        self.add(f)
        return f

    def individual(self, name: str, parents: tuple[str, ...] = (), slots: dict[str, Facet] | None = None) -> Frame:
        f = Frame(name, INDIVIDUAL, tuple(parents), dict(slots or {}))
        self.add(f)
        return f

    def _check_acyclic(self, frame: Frame) -> None:
        # would inserting this frame close a directed IS-A cycle?
        stack = list(frame.parents)
        seen = set()
        while stack:
            name = stack.pop()
            if name == frame.name:
                raise ValidationError(f"IS-A cycle: {frame.name!r} would become its own ancestor")
            if name in seen:
                continue
            seen.add(name)
            parent = self.frames.get(name)
            if parent is not None and parent.kind == GENERAL:
                stack.extend(parent.parents)

    def _ancestry(self, name: str) -> list[Frame]:
        """The frame followed by its ancestors in BFS order, declaration order within a level."""
        start = self.frames.get(name)
        if start is None:
            return []
        out = [start]
        queue = list(start.parents)
        seen = {name}
        while queue:
            nxt = queue.pop(0)
            if nxt in seen:
                continue
            seen.add(nxt)
            frame = self.frames.get(nxt)
            if frame is None:
                continue
            out.append(frame)
            queue.extend(frame.parents)
        return out

    def get_slot(self, frame_name: str, slot_name: str) -> SlotValue | None:
        """Value of a slot at this frame or the nearest ancestor holding one.

        None means the value is absent everywhere on the chain, which is
        not an error: the system simply does not know.
        """
        for frame in self._ancestry(frame_name):
            facet = frame.slots.get(slot_name)
            if facet is not None and facet.value is not None:
                return SlotValue(facet.value, frame.name, facet.strength)
        return None

    def _nearest_constraint(self, frame_name: str, slot_name: str) -> tuple[Facet, str] | None:
        for frame in self._ancestry(frame_name):
            facet = frame.slots.get(slot_name)
            if facet is not None and facet.constrained():
                return facet, frame.name
        return None

    def fill_slot(self, frame_name: str, slot_name: str, value: object) -> FillResult:
        """Store value as a defined facet iff the nearest inherited constraint admits it."""
        frame = self.frames.get(frame_name)
        if frame is None:
            return FillResult(False, reason=f"unknown frame {frame_name!r}")
        found = self._nearest_constraint(frame_name, slot_name)
        if found is not None:
            facet, source = found
            if facet.allowed_values is not None and value not in facet.allowed_values:
                allowed = ", ".join(sorted(map(str, facet.allowed_values)))
                return FillResult(False, reason=f"value {value!r} not in {{{allowed}}}", source=source)
            if facet.required_type is not None and not self._has_type(value, facet.required_type):
                return FillResult(False, reason=f"value {value!r} is not a {facet.required_type}", source=source)
        local = frame.slots.get(slot_name)
        keep = local if local is not None and local.constrained() else Facet()
        frame.slots[slot_name] = replace(keep, value=value, strength=DEFINED)
        return FillResult(True)

    def _has_type(self, value: object, general_name: str) -> bool:
        if not isinstance(value, str):
            return False
        return any(f.name == general_name for f in self._ancestry(value))

    def to_graph(self) -> Graph:
        """Export to RDF: IS-A becomes subClassOf, INSTANCE-OF becomes rdf:type.

        Only defined facets are exported; defaults are defeasible and
        have no place among monotonic triples.  A slot value naming a
        known frame becomes an IRI, anything else a plain literal.
        """
        g = Graph()
        for name in sorted(self.frames):
            frame = self.frames[name]
            subject = IRI(self.namespace + name)
            link = vocab.RDFS_SUBCLASSOF if frame.kind == GENERAL else vocab.RDF_TYPE
            for parent in frame.parents:
                g.insert(Triple(subject, link, IRI(self.namespace + parent)))
            for slot_name in frame.slots:
                facet = frame.slots[slot_name]
                if facet.strength != DEFINED or facet.value is None:
                    continue
                if isinstance(facet.value, str) and facet.value in self.frames:
                    obj = IRI(self.namespace + facet.value)
                else:
                    obj = Literal(str(facet.value))
                g.insert(Triple(subject, IRI(self.namespace + slot_name), obj))
        return g


def frames_to_graph(system: FrameSystem) -> Graph:
    return system.to_graph()


_ISA = ":IS-A"
_INSTANCEOF = ":INSTANCE-OF"


def parse_frames(text: str, namespace: str = "urn:frame:") -> FrameSystem:
    """Read the s-expression frame format::

        (Carrots
          <:IS-A Vegetables>
          <:colour orange>)

    :IS-A marks a general frame, :INSTANCE-OF an individual; a frame
    with neither is a root general frame.  Multi-token values are kept
    verbatim ("1 860 281").  IS-A / INSTANCE-OF values may list several
    parents separated by whitespace.
    """
    system = FrameSystem(namespace=namespace)
    i = 0
    n = len(text)
    line = 1

    def skip_ws():
        nonlocal i, line
        while i < n and text[i].isspace():
            if text[i] == "\n":
                line += 1
            i += 1

    while True:
        skip_ws()
        if i >= n:
            break
        if text[i] != "(":
            raise ParseError(f"expected '(' to open a frame, got {text[i]!r}", line)
        i += 1
        skip_ws()
        start = i
        while i < n and not text[i].isspace() and text[i] not in "<)":
            i += 1
        name = text[start:i]
        if not name:
            raise ParseError("frame has no name", line)
        parents: list[str] = []
        kind = None
        slots: dict[str, Facet] = {}
        while True:
            skip_ws()
            if i >= n:
                raise ParseError(f"unterminated frame {name!r}", line)
            if text[i] == ")":
                i += 1
                break
            if text[i] != "<":
                raise ParseError(f"expected '<slot value>' in frame {name!r}", line)
            i += 1
            end = text.find(">", i)
            if end < 0:
                raise ParseError(f"unterminated slot in frame {name!r}", line)
            inner = text[i:end].strip()
            line += text.count("\n", i, end)
            i = end + 1
            if not inner:
                raise ParseError(f"empty slot in frame {name!r}", line)
            slot_name, _, raw_value = inner.partition(" ")
            value = " ".join(raw_value.split())
            if slot_name.upper() == _ISA:
                if kind == INDIVIDUAL:
                    raise ParseError(f"frame {name!r} mixes IS-A and INSTANCE-OF", line)
                kind = GENERAL
                parents.extend(value.split())
            elif slot_name.upper() == _INSTANCEOF:
                if kind == GENERAL:
                    raise ParseError(f"frame {name!r} mixes IS-A and INSTANCE-OF", line)
                kind = INDIVIDUAL
                parents.extend(value.split())
            else:
                slots[slot_name.lstrip(":")] = Facet(value=value, strength=DEFINED)
        frame = Frame(name, kind or GENERAL, tuple(parents), slots)
        system.add(frame)
    return system

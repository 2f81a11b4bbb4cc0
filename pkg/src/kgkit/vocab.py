"""Namespace constants for the RDF, RDFS, OWL and XSD vocabularies."""

from .terms import IRI

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"

#: Namespace the parsers assume for the empty prefix when no @prefix
#: declaration binds it.
DEFAULT_NS = "http://example.org/ns#"

RDF_TYPE = IRI(RDF + "type")
RDF_FIRST = IRI(RDF + "first")
RDF_REST = IRI(RDF + "rest")
RDF_NIL = IRI(RDF + "nil")

RDFS_SUBCLASSOF = IRI(RDFS + "subClassOf")
RDFS_SUBPROPERTYOF = IRI(RDFS + "subPropertyOf")
RDFS_DOMAIN = IRI(RDFS + "domain")
RDFS_RANGE = IRI(RDFS + "range")
RDFS_LABEL = IRI(RDFS + "label")

OWL_SAMEAS = IRI(OWL + "sameAs")
OWL_DIFFERENTFROM = IRI(OWL + "differentFrom")
OWL_ALLDIFFERENT = IRI(OWL + "AllDifferent")
OWL_DISTINCTMEMBERS = IRI(OWL + "distinctMembers")
OWL_MEMBERS = IRI(OWL + "members")
OWL_FUNCTIONALPROPERTY = IRI(OWL + "FunctionalProperty")
OWL_TRANSITIVEPROPERTY = IRI(OWL + "TransitiveProperty")
OWL_OBJECTPROPERTY = IRI(OWL + "ObjectProperty")
OWL_INVERSEOF = IRI(OWL + "inverseOf")
OWL_EQUIVALENTCLASS = IRI(OWL + "equivalentClass")
OWL_DISJOINTWITH = IRI(OWL + "disjointWith")
OWL_COMPLEMENTOF = IRI(OWL + "complementOf")
OWL_INTERSECTIONOF = IRI(OWL + "intersectionOf")
OWL_UNIONOF = IRI(OWL + "unionOf")
OWL_SOMEVALUESFROM = IRI(OWL + "someValuesFrom")
OWL_ALLVALUESFROM = IRI(OWL + "allValuesFrom")
OWL_ONPROPERTY = IRI(OWL + "onProperty")
OWL_RESTRICTION = IRI(OWL + "Restriction")
OWL_CLASS = IRI(OWL + "Class")
OWL_THING = IRI(OWL + "Thing")
OWL_NOTHING = IRI(OWL + "Nothing")

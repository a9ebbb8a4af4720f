"""Namespace IRIs and the vocabulary terms shared across modules.

The seven linked datasets each get a namespace here; the mapping from
namespace to dataset label lives in `govgraph.geo`.
"""

from __future__ import annotations

from govgraph.rdf import Iri

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
ORG = "http://www.w3.org/ns/org#"

# The e-government ontology and its application/instance namespaces.
EGE = "http://ege.example/ont/"
TYS = "http://ege.example/tys/"
TER = "http://ege.example/ter/"
INFRA = "http://ege.example/infra/"

# External linked-data namespaces (offline snapshots only; no crawling).
OSM = "https://www.openstreetmap.org/node/"
LGD = "http://linkedgeodata.org/triplify/node"
GN = "http://sws.geonames.org/"
FOAF = "http://xmlns.com/foaf/0.1/"

# Default prefix table; the seven dataset prefixes plus the schema ones.
PREFIXES: dict[str, str] = {
    "ege": EGE,
    "tys": TYS,
    "ter": TER,
    "infra": INFRA,
    "osm": OSM,
    "lgd": LGD,
    "gn": GN,
    "foaf": FOAF,
    "rdf": RDF,
    "rdfs": RDFS,
    "owl": OWL,
    "xsd": XSD,
    "org": ORG,
}

RDF_TYPE = Iri(RDF + "type")

RDFS_SUBCLASS_OF = Iri(RDFS + "subClassOf")
RDFS_DOMAIN = Iri(RDFS + "domain")
RDFS_RANGE = Iri(RDFS + "range")
RDFS_SEE_ALSO = Iri(RDFS + "seeAlso")

OWL_THING = Iri(OWL + "Thing")
OWL_CLASS = Iri(OWL + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL + "DatatypeProperty")
OWL_TRANSITIVE_PROPERTY = Iri(OWL + "TransitiveProperty")
OWL_INVERSE_OF = Iri(OWL + "inverseOf")
OWL_SAMEAS = Iri(OWL + "sameAs")

XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"

# Classes of the government ontology.
EGE_ESTADO = Iri(EGE + "Estado")
EGE_PODER = Iri(EGE + "Poder")
EGE_EJECUTIVO = Iri(EGE + "Ejecutivo")
EGE_LEGISLATIVO = Iri(EGE + "Legislativo")
EGE_JUDICIAL = Iri(EGE + "Judicial")
EGE_NORMA_LEGAL = Iri(EGE + "NormaLegal")
EGE_UNIDAD_ADMINISTRATIVA = Iri(EGE + "UnidadAdministrativa")
EGE_GOBERNACION = Iri(EGE + "Gobernacion")
EGE_VICEGOBERNACION = Iri(EGE + "Vicegobernacion")
EGE_MINISTERIO = Iri(EGE + "Ministerio")
EGE_SUBSECRETARIA = Iri(EGE + "Subsecretaria")
EGE_DIRECCION_GENERAL = Iri(EGE + "DireccionGeneral")
EGE_DIRECCION = Iri(EGE + "Direccion")
EGE_DEPARTAMENTO = Iri(EGE + "Departamento")
EGE_TRAMITE = Iri(EGE + "Tramite")
EGE_SERVICIO = Iri(EGE + "Servicio")
EGE_OFICINA = Iri(EGE + "Oficina")
EGE_LUGAR = Iri(EGE + "Lugar")
EGE_PERSONA = Iri(EGE + "Persona")

# Properties of the government ontology.
EGE_HAS_POWER = Iri(EGE + "hasPower")
EGE_HAS_DIVISION = Iri(EGE + "hasDivision")
EGE_UNIT_OF = Iri(EGE + "unitOf")
EGE_OFFERS_TRAMITE = Iri(EGE + "offersTramite")
EGE_LOCATED_IN = Iri(EGE + "locatedIn")
EGE_LAT = Iri(EGE + "lat")
EGE_LONG = Iri(EGE + "long")
EGE_LINKED_TO = Iri(EGE + "linkedTo")

# W3C Organization Ontology terms the vocabulary aligns with.
ORG_ORGANIZATIONAL_UNIT = Iri(ORG + "OrganizationalUnit")
ORG_UNIT_OF = Iri(ORG + "unitOf")
ORG_HAS_UNIT = Iri(ORG + "hasUnit")

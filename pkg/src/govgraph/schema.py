"""The government ontology: vocabulary, integrity constraints, fixtures.

The vocabulary spans four layers: upper concepts (the State, its powers,
the legal framework), the administrative-unit domain, the application
layer (procedures, services, offices), and alignment annotations toward
the W3C Organization Ontology. Unit classes carry a rank; division edges
must step down exactly one rank, which is how the ministry/subsecretary/
direction/department containment chain is enforced.

Existential requirements from the model are checked closed-world: the
dataset under management is complete, so a missing edge is a violation,
not an unknown.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from govgraph import ns
from govgraph.geo import coordinate_bearer
from govgraph.rdf import Iri, Literal, Term, Triple, TripleStore, render_term
from govgraph.reasoner import RuleSet, materialize

_RANKS = {
    "Gobernacion": 0,
    "Vicegobernacion": 0,
    "Ministerio": 1,
    "Subsecretaria": 2,
    "DireccionGeneral": 3,
    "Direccion": 4,
    "Departamento": 5,
}


class UnitLevel(Enum):
    """Administrative-unit levels; rank 0 units are hierarchy roots."""

    GOBERNACION = "Gobernacion"
    VICEGOBERNACION = "Vicegobernacion"
    MINISTERIO = "Ministerio"
    SUBSECRETARIA = "Subsecretaria"
    DIRECCION_GENERAL = "DireccionGeneral"
    DIRECCION = "Direccion"
    DEPARTAMENTO = "Departamento"

    @property
    def rank(self) -> int:
        return _RANKS[self.value]

    @property
    def class_iri(self) -> Iri:
        return Iri(ns.EGE + self.value)


_RANK_BY_CLASS = {level.class_iri: level.rank for level in UnitLevel}


@dataclass(frozen=True, slots=True)
class Violation:
    constraint: str  # C1..C6
    focus: Term
    message: str


@dataclass(frozen=True)
class FixtureSpec:
    """Counts per level; the defaults reproduce the documented structure."""

    seed: int = 0
    ministerios: int = 10
    subsecretarias: int = 37
    direcciones_generales: int = 68
    direcciones: int = 114
    departamentos: int = 326
    offices: int = 20
    tramites: int = 10

    def __post_init__(self) -> None:
        for name in (
            "ministerios",
            "subsecretarias",
            "direcciones_generales",
            "direcciones",
            "departamentos",
            "offices",
            "tramites",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"negative count: {name}")


_TOP_CLASSES = (
    ns.EGE_ESTADO,
    ns.EGE_PODER,
    ns.EGE_NORMA_LEGAL,
    ns.EGE_UNIDAD_ADMINISTRATIVA,
    ns.EGE_TRAMITE,
    ns.EGE_SERVICIO,
    ns.EGE_OFICINA,
    ns.EGE_LUGAR,
    ns.EGE_PERSONA,
)

_POWER_CLASSES = (ns.EGE_EJECUTIVO, ns.EGE_LEGISLATIVO, ns.EGE_JUDICIAL)


def vocabulary() -> frozenset[Triple]:
    """The fixed schema-level triple set (classes, properties, alignment)."""
    triples: list[Triple] = []

    def klass(iri: Iri, parent: Iri) -> None:
        triples.append(Triple(iri, ns.RDF_TYPE, ns.OWL_CLASS))
        triples.append(Triple(iri, ns.RDFS_SUBCLASS_OF, parent))

    for c in _TOP_CLASSES:
        klass(c, ns.OWL_THING)
    for c in _POWER_CLASSES:
        klass(c, ns.EGE_PODER)
    for level in UnitLevel:
        klass(level.class_iri, ns.EGE_UNIDAD_ADMINISTRATIVA)

    def prop(iri: Iri, kind: Iri, domain: Iri | None = None, range_: Iri | str | None = None) -> None:
        triples.append(Triple(iri, ns.RDF_TYPE, kind))
        if domain is not None:
            triples.append(Triple(iri, ns.RDFS_DOMAIN, domain))
        if range_ is not None:
            target = range_ if isinstance(range_, Iri) else Iri(range_)
            triples.append(Triple(iri, ns.RDFS_RANGE, target))

    prop(ns.EGE_HAS_POWER, ns.OWL_OBJECT_PROPERTY, ns.EGE_ESTADO, ns.EGE_PODER)
    prop(ns.EGE_HAS_DIVISION, ns.OWL_OBJECT_PROPERTY, None, ns.EGE_UNIDAD_ADMINISTRATIVA)
    prop(ns.EGE_UNIT_OF, ns.OWL_OBJECT_PROPERTY, ns.EGE_UNIDAD_ADMINISTRATIVA, None)
    prop(ns.EGE_OFFERS_TRAMITE, ns.OWL_OBJECT_PROPERTY, ns.EGE_OFICINA, ns.EGE_TRAMITE)
    prop(ns.EGE_LOCATED_IN, ns.OWL_OBJECT_PROPERTY, None, ns.EGE_LUGAR)
    prop(ns.EGE_LINKED_TO, ns.OWL_OBJECT_PROPERTY)
    prop(ns.EGE_LAT, ns.OWL_DATATYPE_PROPERTY, None, ns.XSD_DECIMAL)
    prop(ns.EGE_LONG, ns.OWL_DATATYPE_PROPERTY, None, ns.XSD_DECIMAL)
    triples.append(Triple(ns.EGE_HAS_DIVISION, ns.RDF_TYPE, ns.OWL_TRANSITIVE_PROPERTY))
    triples.append(Triple(ns.EGE_HAS_DIVISION, ns.OWL_INVERSE_OF, ns.EGE_UNIT_OF))

    # Alignment with the W3C Organization Ontology recommendation.
    triples.append(Triple(ns.EGE_UNIDAD_ADMINISTRATIVA, ns.RDFS_SEE_ALSO, ns.ORG_ORGANIZATIONAL_UNIT))
    triples.append(Triple(ns.EGE_UNIT_OF, ns.RDFS_SEE_ALSO, ns.ORG_UNIT_OF))
    triples.append(Triple(ns.EGE_HAS_DIVISION, ns.RDFS_SEE_ALSO, ns.ORG_HAS_UNIT))

    return frozenset(triples)


# Rules validation needs: typing through the class tree plus the sameAs
# closure for coordinate resolution. Division edges are checked as
# asserted, so no transitivity here.
_VALIDATION_RULES = RuleSet(
    subclass_transitivity=True,
    type_inheritance=True,
    sameas_closure=True,
)


def _instances(store: TripleStore, class_iri: Iri) -> list[Term]:
    return sorted(
        {t.subject for t in store.match(None, ns.RDF_TYPE, class_iri)},
        key=render_term,
    )


def _types(store: TripleStore, term: Term) -> set[Term]:
    return {t.object for t in store.match(term, ns.RDF_TYPE, None)}


def _unit_rank(store: TripleStore, term: Term) -> int | None:
    ranks = sorted(
        _RANK_BY_CLASS[c] for c in _types(store, term) if c in _RANK_BY_CLASS
    )
    return ranks[0] if ranks else None


def validate(store: TripleStore) -> list[Violation]:
    """Check the six integrity constraints; empty list means all hold.

    Expects the asserted store (what was loaded or generated, with or
    without the vocabulary): typing and sameAs closure are computed
    internally, while the division-edge constraints read the input's
    asserted edges, which inference would otherwise blur.
    """
    work = store.copy()
    work.update(vocabulary())
    work = materialize(work, _VALIDATION_RULES)

    violations: list[Violation] = []

    # C1: the State exercises at least one of the three powers.
    for estado in _instances(work, ns.EGE_ESTADO):
        objects = {t.object for t in work.match(estado, ns.EGE_HAS_POWER, None)}
        if not any(_types(work, o) & set(_POWER_CLASSES) for o in objects):
            violations.append(
                Violation("C1", estado, "no hasPower object typed as a power")
            )

    # C2: the executive divides into the gobernación or ministries.
    for ejecutivo in _instances(work, ns.EGE_EJECUTIVO):
        objects = {t.object for t in work.match(ejecutivo, ns.EGE_HAS_DIVISION, None)}
        wanted = {ns.EGE_GOBERNACION, ns.EGE_MINISTERIO}
        if not any(_types(work, o) & wanted for o in objects):
            violations.append(
                Violation(
                    "C2",
                    ejecutivo,
                    "no hasDivision object typed Gobernacion or Ministerio",
                )
            )

    # C3: asserted division edges step down exactly one rank.
    for t in store.match(None, ns.EGE_HAS_DIVISION, None):
        parent_rank = _unit_rank(work, t.subject)
        child_rank = _unit_rank(work, t.object)
        if parent_rank is None or child_rank is None:
            continue  # powers and other non-unit endpoints are out of scope
        if child_rank != parent_rank + 1:
            violations.append(
                Violation(
                    "C3",
                    t.subject,
                    f"hasDivision edge to {render_term(t.object)} skips rank "
                    f"({parent_rank} -> {child_rank})",
                )
            )

    # C4: every ranked non-root unit has exactly one asserted parent.
    for unit in _instances(work, ns.EGE_UNIDAD_ADMINISTRATIVA):
        rank = _unit_rank(work, unit)
        if rank is None or rank == 0:
            continue
        parents = {t.subject for t in store.match(None, ns.EGE_HAS_DIVISION, unit)}
        if len(parents) != 1:
            violations.append(
                Violation("C4", unit, f"{len(parents)} asserted hasDivision parents")
            )

    # C5: offices are geolocatable, directly or through sameAs links.
    for office in _instances(work, ns.EGE_OFICINA):
        try:
            located = coordinate_bearer(work, office) is not None
        except ValueError as err:
            violations.append(Violation("C5", office, str(err)))
            continue
        if not located:
            violations.append(
                Violation("C5", office, "no coordinates on the office or any sameAs-equivalent node")
            )

    # C6: every procedure is offered somewhere.
    for tramite in _instances(work, ns.EGE_TRAMITE):
        if not work.match(None, ns.EGE_OFFERS_TRAMITE, tramite):
            violations.append(Violation("C6", tramite, "offered by no office"))

    violations.sort(key=lambda v: (v.constraint, render_term(v.focus)))
    return violations


def _padded(label: str, index: int, total: int) -> Iri:
    width = max(2, len(str(total)))
    return Iri(f"{ns.EGE}{label}-{index + 1:0{width}d}")


def generate_fixture(spec: FixtureSpec = FixtureSpec()) -> TripleStore:
    """Deterministic instance data honoring the configured counts.

    Children are distributed round-robin over parents ordered by IRI;
    office coordinates are drawn inside a bounding box around
    (-27.4, -55.9) from the seed, and each office is wired to synthetic
    OSM/LinkedGeoData/GeoNames nodes carrying the same point.
    """
    rng = random.Random(spec.seed)
    store = TripleStore()

    estado = Iri(ns.EGE + "Estado-1")
    ejecutivo = Iri(ns.EGE + "Ejecutivo-1")
    legislativo = Iri(ns.EGE + "Legislativo-1")
    judicial = Iri(ns.EGE + "Judicial-1")
    gobernacion = Iri(ns.EGE + "Gobernacion-1")
    vicegobernacion = Iri(ns.EGE + "Vicegobernacion-1")

    store.insert(Triple(estado, ns.RDF_TYPE, ns.EGE_ESTADO))
    for poder, klass in (
        (ejecutivo, ns.EGE_EJECUTIVO),
        (legislativo, ns.EGE_LEGISLATIVO),
        (judicial, ns.EGE_JUDICIAL),
    ):
        store.insert(Triple(poder, ns.RDF_TYPE, klass))
    # A single asserted power edge keeps every constraint one mutation
    # away from failing, which is what the validation tests exercise.
    store.insert(Triple(estado, ns.EGE_HAS_POWER, ejecutivo))
    store.insert(Triple(gobernacion, ns.RDF_TYPE, ns.EGE_GOBERNACION))
    store.insert(Triple(vicegobernacion, ns.RDF_TYPE, ns.EGE_VICEGOBERNACION))
    store.insert(Triple(ejecutivo, ns.EGE_HAS_DIVISION, gobernacion))

    def level_units(label: str, class_iri: Iri, count: int, parents: list[Iri]) -> list[Iri]:
        units = [_padded(label, i, count) for i in range(count)]
        for i, unit in enumerate(units):
            store.insert(Triple(unit, ns.RDF_TYPE, class_iri))
            if parents:
                store.insert(Triple(parents[i % len(parents)], ns.EGE_HAS_DIVISION, unit))
        return units

    ministerios = level_units("Ministerio", ns.EGE_MINISTERIO, spec.ministerios, [gobernacion])
    subsecretarias = level_units("Subsecretaria", ns.EGE_SUBSECRETARIA, spec.subsecretarias, ministerios)
    direcciones_generales = level_units(
        "DireccionGeneral", ns.EGE_DIRECCION_GENERAL, spec.direcciones_generales, subsecretarias
    )
    direcciones = level_units("Direccion", ns.EGE_DIRECCION, spec.direcciones, direcciones_generales)
    level_units("Departamento", ns.EGE_DEPARTAMENTO, spec.departamentos, direcciones)

    offices = []
    for i in range(spec.offices):
        office = Iri(f"{ns.INFRA}Oficina-{i + 1:0{max(2, len(str(spec.offices)))}d}")
        offices.append(office)
        lat = Literal(f"{rng.uniform(-27.5, -27.3):.7f}")
        lon = Literal(f"{rng.uniform(-56.0, -55.8):.7f}")
        osm_node = Iri(f"{ns.OSM}{9000001 + i}")
        lgd_node = Iri(f"{ns.LGD}{9000001 + i}")
        gn_node = Iri(f"{ns.GN}{9500001 + i}")
        store.insert(Triple(office, ns.RDF_TYPE, ns.EGE_OFICINA))
        for a, b in ((office, lgd_node), (lgd_node, osm_node), (office, gn_node)):
            store.insert(Triple(a, ns.OWL_SAMEAS, b))
            store.insert(Triple(a, ns.EGE_LINKED_TO, b))
        # Geometry lives on the geo datasets; the GeoNames node is an
        # identity link only.
        for node in (osm_node, lgd_node):
            store.insert(Triple(node, ns.EGE_LAT, lat))
            store.insert(Triple(node, ns.EGE_LONG, lon))

    for j in range(spec.tramites):
        tramite = Iri(f"{ns.TYS}Tramite-{j + 1:0{max(2, len(str(spec.tramites)))}d}")
        store.insert(Triple(tramite, ns.RDF_TYPE, ns.EGE_TRAMITE))
        if offices:
            store.insert(Triple(offices[j % len(offices)], ns.EGE_OFFERS_TRAMITE, tramite))

    return store

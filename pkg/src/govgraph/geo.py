"""Geospatial primitives and the cross-dataset link graph.

Distances use a spherical Earth with the IUGG mean radius; at the
city-block scale offices get ranked over, the ellipsoid correction is
noise. Coordinate resolution walks sameAs links, so an office whose
point lives on its OpenStreetMap or LinkedGeoData node still resolves.

The link graph has dataset labels as vertices, the interlinked instance
IRIs, and their links projected onto label pairs. Everything here is
pure or immutable after construction.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from govgraph import ns
from govgraph.rdf import Iri, Literal, Term, Triple, TripleStore, render_term

EARTH_RADIUS_M = 6_371_008.8  # IUGG mean radius


class CoordinateError(ValueError):
    """A coordinate literal that is not a usable WGS84 value."""


class UnlabelableIriError(ValueError):
    """An IRI outside every namespace in the dataset-label table."""


@dataclass(frozen=True, slots=True)
class GeoPoint:
    """WGS84 degrees; latitude in [-90, 90], longitude in (-180, 180]."""

    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise ValueError("non-finite coordinate")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range: {self.lat}")
        if self.lon == -180.0:
            object.__setattr__(self, "lon", 180.0)
        elif not -180.0 < self.lon <= 180.0:
            raise ValueError(f"longitude out of range: {self.lon}")


def haversine(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in meters.

    The half-chord argument is clamped into [0, 1] so antipodal points
    cannot drift outside asin's domain.
    """
    phi1, phi2 = math.radians(a.lat), math.radians(b.lat)
    dphi = phi2 - phi1
    dlam = math.radians(b.lon) - math.radians(a.lon)
    h = (
        math.sin(dphi / 2.0) ** 2
        + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    )
    h = min(1.0, max(0.0, h))
    return 2.0 * EARTH_RADIUS_M * math.asin(math.sqrt(h))


def nearest(
    candidates: Iterable[tuple[Term, GeoPoint]], origin: GeoPoint, k: int
) -> list[tuple[Term, GeoPoint, float]]:
    """The k closest candidates, ascending; IRI order breaks ties."""
    if k < 0:
        raise ValueError("k must be >= 0")
    ranked = heapq.nsmallest(
        k,
        ((term, point, haversine(point, origin)) for term, point in candidates),
        key=lambda row: (row[2], render_term(row[0])),
    )
    return ranked


class DatasetLabel(Enum):
    """The seven linked datasets, keyed by their customary letter."""

    S = "Trámites y Servicios"
    T = "Territorio"
    O = "OSM"  # noqa: E741 - the letter is the identity
    L = "LinkedGeoData"
    I = "Infraestructura"  # noqa: E741
    G = "GeoNames"
    F = "Personas"

    @property
    def display_name(self) -> str:
        return self.value


# Namespace -> label; one namespace per dataset, matched longest-first.
DEFAULT_DATASET_NAMESPACES: dict[str, DatasetLabel] = {
    ns.TYS: DatasetLabel.S,
    ns.TER: DatasetLabel.T,
    ns.OSM: DatasetLabel.O,
    ns.LGD: DatasetLabel.L,
    ns.INFRA: DatasetLabel.I,
    ns.GN: DatasetLabel.G,
    ns.FOAF: DatasetLabel.F,
}

PREFIX_BY_LABEL = {
    DatasetLabel.S: "tys",
    DatasetLabel.T: "ter",
    DatasetLabel.O: "osm",
    DatasetLabel.L: "lgd",
    DatasetLabel.I: "infra",
    DatasetLabel.G: "gn",
    DatasetLabel.F: "foaf",
}


def dataset_label(
    iri: Term, table: Mapping[str, DatasetLabel] | None = None
) -> DatasetLabel:
    """Label of the dataset an IRI belongs to, by longest-prefix match."""
    if not isinstance(iri, Iri):
        raise UnlabelableIriError(f"unlabelable IRI: {render_term(iri)}")
    table = DEFAULT_DATASET_NAMESPACES if table is None else table
    best: tuple[int, DatasetLabel] | None = None
    for namespace, label in table.items():
        if iri.value.startswith(namespace):
            if best is None or len(namespace) > best[0]:
                best = (len(namespace), label)
    if best is None:
        raise UnlabelableIriError(f"unlabelable IRI: {iri.value}")
    return best[1]


# Predicates that count as cross-dataset links.
LINK_PREDICATES = (ns.EGE_LINKED_TO, ns.OWL_SAMEAS)


def _label_pair(a: DatasetLabel, b: DatasetLabel) -> tuple[DatasetLabel, DatasetLabel]:
    return (a, b) if a.name <= b.name else (b, a)


def _iri_pair(a: Iri, b: Iri) -> tuple[Iri, Iri]:
    return (a, b) if a.value <= b.value else (b, a)


@dataclass(frozen=True)
class LinkGraph:
    """Dataset-level view of the instance link graph."""

    vertices: frozenset[DatasetLabel]
    edges: frozenset[tuple[DatasetLabel, DatasetLabel]]
    instances: frozenset[Iri]
    instance_edges: frozenset[tuple[Iri, Iri]]


def build_link_graph(
    store: TripleStore, table: Mapping[str, DatasetLabel] | None = None
) -> LinkGraph:
    """Project the store's link triples into the dataset graph.

    Every link endpoint must be a labeled IRI; an unlabeled one fails
    fast, since fixtures are required to be fully labeled.
    """
    instances: set[Iri] = set()
    instance_edges: set[tuple[Iri, Iri]] = set()
    edges: set[tuple[DatasetLabel, DatasetLabel]] = set()
    for predicate in LINK_PREDICATES:
        for t in store.match(None, predicate, None):
            label_s = dataset_label(t.subject, table)
            label_o = dataset_label(t.object, table)
            instances.add(t.subject)
            instances.add(t.object)
            instance_edges.add(_iri_pair(t.subject, t.object))
            edges.add(_label_pair(label_s, label_o))
    vertices = {dataset_label(i, table) for i in instances}
    return LinkGraph(
        vertices=frozenset(vertices),
        edges=frozenset(edges),
        instances=frozenset(instances),
        instance_edges=frozenset(instance_edges),
    )


def _sameas_reachable(store: TripleStore, start: Term) -> set[Term]:
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        neighbors = {t.object for t in store.match(node, ns.OWL_SAMEAS, None)} | {
            t.subject for t in store.match(None, ns.OWL_SAMEAS, node)
        }
        for other in neighbors:
            if other not in seen and not isinstance(other, Literal):
                seen.add(other)
                frontier.append(other)
    return seen


def _coordinate_value(store: TripleStore, bearer: Term, predicate: Iri) -> float:
    literals = sorted(
        (t.object for t in store.match(bearer, predicate, None)),
        key=render_term,
    )
    value = literals[0]
    if not isinstance(value, Literal):
        raise CoordinateError(
            f"non-literal coordinate on {render_term(bearer)}"
        )
    try:
        return float(value.lexical)
    except ValueError:
        raise CoordinateError(
            f"malformed coordinate literal on {render_term(bearer)}: {value.lexical!r}"
        ) from None


def coordinate_bearer(store: TripleStore, subject: Term) -> tuple[Term, GeoPoint] | None:
    """(bearing term, point) for a subject, or None if nothing bears both.

    Candidates are the subject and its sameAs-equivalents; when several
    carry coordinates, the lexicographically least bearer wins. A bearer
    with an unusable literal raises CoordinateError naming it.
    """
    bearers = [
        term
        for term in _sameas_reachable(store, subject)
        if store.match(term, ns.EGE_LAT, None) and store.match(term, ns.EGE_LONG, None)
    ]
    if not bearers:
        return None
    bearer = min(bearers, key=render_term)
    lat = _coordinate_value(store, bearer, ns.EGE_LAT)
    lon = _coordinate_value(store, bearer, ns.EGE_LONG)
    try:
        point = GeoPoint(lat, lon)
    except ValueError as err:
        raise CoordinateError(f"on {render_term(bearer)}: {err}") from None
    return bearer, point


def resolve_coordinates(store: TripleStore, subject: Term) -> GeoPoint | None:
    """The point a subject resolves to through its identity links."""
    resolved = coordinate_bearer(store, subject)
    return None if resolved is None else resolved[1]

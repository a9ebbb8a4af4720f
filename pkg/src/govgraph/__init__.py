"""Knowledge-graph engine for geolocated government service discovery.

Stores the State's organizational structure as RDF triples, materializes
the inferences the ontology relies on, maintains the cross-dataset link
graph, and answers "where can I do procedure X near place Y" queries
through a CLI and a read-only HTTP JSON API.
"""

from govgraph.rdf import (
    Binding,
    Blank,
    Iri,
    Literal,
    MalformedTripleError,
    Term,
    Triple,
    TriplePattern,
    TripleStore,
    Var,
    render_term,
    render_triple,
    solve_bgp,
)

__version__ = "0.1.0"

__all__ = [
    "Binding",
    "Blank",
    "Iri",
    "Literal",
    "MalformedTripleError",
    "Term",
    "Triple",
    "TriplePattern",
    "TripleStore",
    "Var",
    "render_term",
    "render_triple",
    "solve_bgp",
    "__version__",
]

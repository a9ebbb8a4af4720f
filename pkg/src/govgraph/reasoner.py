"""Forward-chaining materialization of the ontology's inference rules.

Six rule families: subclass transitivity, type inheritance along
subclass links, sameAs closure (symmetric + transitive, no reflexive
triples), property propagation across sameAs pairs, declared transitive
predicates, and declared inverse predicate pairs.

`materialize` computes the least fixpoint: the smallest superset of the
input closed under every enabled rule. It never mutates its input, so
one store snapshot can feed many parallel materializations. Rules only
ever emit well-formed triples; an application whose conclusion would
need a literal subject is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from govgraph import ns
from govgraph.rdf import Blank, Iri, Literal, Term, Triple, TripleStore, render_term


class RuleConfigError(ValueError):
    """An inconsistent rule configuration."""


@dataclass(frozen=True)
class RuleSet:
    """Which rule families to apply during materialization.

    sameAs property propagation presupposes the sameAs closure; enabling
    it alone is rejected.
    """

    subclass_transitivity: bool = False
    type_inheritance: bool = False
    sameas_closure: bool = False
    sameas_propagation: bool = False
    transitive_predicates: frozenset[Iri] = frozenset()
    inverse_pairs: frozenset[tuple[Iri, Iri]] = frozenset()

    def __post_init__(self) -> None:
        if self.sameas_propagation and not self.sameas_closure:
            raise RuleConfigError(
                "sameAs propagation requires the sameAs closure rule"
            )


# Everything on, with the division hierarchy transitive and paired with
# its inverse; what the CLI uses unless configured otherwise.
DEFAULT_RULES = RuleSet(
    subclass_transitivity=True,
    type_inheritance=True,
    sameas_closure=True,
    sameas_propagation=True,
    transitive_predicates=frozenset({ns.EGE_HAS_DIVISION}),
    inverse_pairs=frozenset({(ns.EGE_HAS_DIVISION, ns.EGE_UNIT_OF)}),
)


@dataclass
class Partition:
    """sameAs equivalence classes with canonical representatives.

    The representative of a class is the member whose rendering sorts
    first; terms never mentioned in a sameAs triple are their own
    singleton class.
    """

    _representative: dict[Term, Term] = field(default_factory=dict)

    def representative(self, term: Term) -> Term:
        return self._representative.get(term, term)

    def same(self, a: Term, b: Term) -> bool:
        return self.representative(a) == self.representative(b)

    def members(self, term: Term) -> frozenset[Term]:
        rep = self.representative(term)
        group = {t for t, r in self._representative.items() if r == rep}
        group.add(term)
        return frozenset(group)

    def classes(self) -> list[frozenset[Term]]:
        groups: dict[Term, set[Term]] = {}
        for term, rep in self._representative.items():
            groups.setdefault(rep, set()).add(term)
        return sorted(
            (frozenset(g) for g in groups.values()),
            key=lambda g: min(render_term(t) for t in g),
        )


def materialize(store: TripleStore, rules: RuleSet) -> TripleStore:
    """Least fixpoint of the enabled rules over the store's triples."""
    result = store.copy()
    while True:
        before = len(result)
        if rules.subclass_transitivity:
            _close_transitive(result, ns.RDFS_SUBCLASS_OF, classes_only=True)
        if rules.type_inheritance:
            _apply_type_inheritance(result)
        for predicate in sorted(rules.transitive_predicates, key=render_term):
            _close_transitive(result, predicate)
        for p, q in sorted(rules.inverse_pairs, key=lambda pq: (render_term(pq[0]), render_term(pq[1]))):
            _apply_inverse(result, p, q)
        if rules.sameas_closure:
            _apply_sameas_closure(result)
        if rules.sameas_propagation:
            _apply_sameas_propagation(result)
        if len(result) == before:
            return result


def _close_transitive(store: TripleStore, predicate: Iri, *, classes_only: bool = False) -> None:
    # Class positions must be IRIs; blank or literal "classes" are inert.
    def skip(term: Term) -> bool:
        return classes_only and not isinstance(term, Iri)

    while True:
        additions = []
        for t in store.match(None, predicate, None):
            if skip(t.subject) or skip(t.object) or isinstance(t.object, Literal):
                continue
            for nxt in store.match(t.object, predicate, None):
                if skip(nxt.object):
                    continue
                candidate = Triple(t.subject, predicate, nxt.object)
                if candidate not in store:
                    additions.append(candidate)
        if not store.update(additions):
            return


def _apply_type_inheritance(store: TripleStore) -> None:
    while True:
        additions = []
        for t in store.match(None, ns.RDF_TYPE, None):
            if not isinstance(t.object, Iri):
                continue
            for link in store.match(t.object, ns.RDFS_SUBCLASS_OF, None):
                if not isinstance(link.object, Iri):
                    continue
                candidate = Triple(t.subject, ns.RDF_TYPE, link.object)
                if candidate not in store:
                    additions.append(candidate)
        if not store.update(additions):
            return


def _apply_inverse(store: TripleStore, p: Iri, q: Iri) -> None:
    additions = []
    for forward, backward in ((p, q), (q, p)):
        for t in store.match(None, forward, None):
            if isinstance(t.object, Literal):
                continue
            additions.append(Triple(t.object, backward, t.subject))
    store.update(additions)


def _sameas_groups(store: TripleStore) -> list[list[Term]]:
    """Connected components of the sameAs graph, each sorted by rendering."""
    parent: dict[Term, Term] = {}

    def find(term: Term) -> Term:
        root = term
        while parent[root] != root:
            root = parent[root]
        while parent[term] != root:
            parent[term], term = root, parent[term]
        return root

    def union(a: Term, b: Term) -> None:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for t in store.match(None, ns.OWL_SAMEAS, None):
        if isinstance(t.object, Literal):
            continue
        union(t.subject, t.object)

    groups: dict[Term, list[Term]] = {}
    for term in parent:
        groups.setdefault(find(term), []).append(term)
    return [sorted(g, key=render_term) for g in groups.values()]


def _apply_sameas_closure(store: TripleStore) -> None:
    additions = []
    for group in _sameas_groups(store):
        for a in group:
            for b in group:
                if a is not b:
                    candidate = Triple(a, ns.OWL_SAMEAS, b)
                    if candidate not in store:
                        additions.append(candidate)
    store.update(additions)


def _apply_sameas_propagation(store: TripleStore) -> None:
    while True:
        additions = []
        for group in _sameas_groups(store):
            for x in group:
                for t in store.match(x, None, None):
                    if t.predicate == ns.OWL_SAMEAS:
                        continue
                    for y in group:
                        if y is not x:
                            candidate = Triple(y, t.predicate, t.object)
                            if candidate not in store:
                                additions.append(candidate)
                for t in store.match(None, None, x):
                    if t.predicate == ns.OWL_SAMEAS:
                        continue
                    for y in group:
                        if y is not x:
                            candidate = Triple(t.subject, t.predicate, y)
                            if candidate not in store:
                                additions.append(candidate)
        if not store.update(additions):
            return


def sameas_partition(store: TripleStore) -> Partition:
    """Equivalence classes of the store's sameAs graph."""
    representative: dict[Term, Term] = {}
    for group in _sameas_groups(store):
        rep = group[0]
        for term in group:
            representative[term] = rep
    return Partition(representative)


# Classes whose instances count as administrative units for `ancestors`.
# The executive power also holds division edges (to the gobernación) but
# is not part of any unit's containment chain.
UNIT_CLASSES = frozenset(
    {
        ns.EGE_UNIDAD_ADMINISTRATIVA,
        ns.EGE_GOBERNACION,
        ns.EGE_VICEGOBERNACION,
        ns.EGE_MINISTERIO,
        ns.EGE_SUBSECRETARIA,
        ns.EGE_DIRECCION_GENERAL,
        ns.EGE_DIRECCION,
        ns.EGE_DEPARTAMENTO,
    }
)


def _is_unit(store: TripleStore, term: Term) -> bool:
    return any(
        t.object in UNIT_CLASSES for t in store.match(term, ns.RDF_TYPE, None)
    )


def ancestors(store: TripleStore, unit: Term, predicate: Iri = ns.EGE_HAS_DIVISION) -> list[Term]:
    """Containment chain above a unit, immediate parent first, root last.

    Works on both asserted stores (walks single parent links) and
    materialized ones (where every ancestor points at the unit): at each
    step the immediate parent is the candidate that all other candidates
    reach through the predicate. Only administrative units appear in the
    chain; an unknown term has no ancestors.
    """
    chain: list[Term] = []
    seen = {unit}
    current = unit
    while True:
        candidates = {
            t.subject
            for t in store.match(None, predicate, current)
            if _is_unit(store, t.subject)
        } - seen
        if not candidates:
            return chain
        if len(candidates) == 1:
            immediate = next(iter(candidates))
        else:
            lowest = [
                u
                for u in candidates
                if all(
                    Triple(v, predicate, u) in store
                    for v in candidates
                    if v != u
                )
            ]
            immediate = min(lowest or candidates, key=render_term)
        chain.append(immediate)
        seen.add(immediate)
        current = immediate

"""Seeded random generators shared by the property tests."""

from __future__ import annotations

import random

from govgraph.rdf import Blank, Iri, Literal, Triple, TriplePattern, Var

BASE = "http://test.example/"

IRIS = [Iri(BASE + f"t{i}") for i in range(8)]
PREDICATES = [Iri(BASE + f"p{i}") for i in range(4)]
LITERALS = [
    Literal("uno"),
    Literal("dos", lang="es"),
    Literal("3", datatype="http://www.w3.org/2001/XMLSchema#integer"),
]
BLANKS = [Blank("b0"), Blank("b1")]


def random_term(rng: random.Random, *, allow_literal=True, allow_blank=True):
    pool = list(IRIS)
    if allow_literal:
        pool += LITERALS
    if allow_blank:
        pool += BLANKS
    return rng.choice(pool)


def random_triple(rng: random.Random) -> Triple:
    return Triple(
        random_term(rng, allow_literal=False),
        rng.choice(PREDICATES),
        random_term(rng),
    )


def random_store_triples(rng: random.Random, max_size=50) -> list[Triple]:
    return [random_triple(rng) for _ in range(rng.randint(0, max_size))]


def random_pattern(rng: random.Random, variables=("x", "y", "z")) -> TriplePattern:
    def position(allow_literal, allow_blank):
        if rng.random() < 0.5:
            return Var(rng.choice(variables))
        return random_term(rng, allow_literal=allow_literal, allow_blank=allow_blank)

    return TriplePattern(
        position(False, True),
        Var(rng.choice(variables)) if rng.random() < 0.3 else rng.choice(PREDICATES),
        position(True, True),
    )


def random_literal_text(rng: random.Random) -> str:
    alphabet = (
        'abcXYZ0189 ¡ñÁöß€甲😀"\\\n\r\t\f\b\x01~`^<>{}|'
    )
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))


def random_ground_term(rng: random.Random):
    """IRI or literal with escape-heavy lexical forms (no blanks)."""
    roll = rng.random()
    if roll < 0.45:
        return Iri(BASE + rng.choice("abcdef") + str(rng.randint(0, 9)))
    text = random_literal_text(rng)
    roll = rng.random()
    if roll < 0.4:
        return Literal(text)
    if roll < 0.7:
        return Literal(text, lang=rng.choice(["es", "en", "es-AR", "qu"]))
    return Literal(text, datatype=BASE + "dt" + str(rng.randint(0, 3)))


# A small universe for reasoner stores: nodes double as classes.
RULE_NODES = [Iri(BASE + f"n{i}") for i in range(6)] + [Blank("rb")]
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
SUBCLASS = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")
SAMEAS = Iri("http://www.w3.org/2002/07/owl#sameAs")
TRANS_P = Iri(BASE + "near")
INV_Q = Iri(BASE + "contains")
INV_R = Iri(BASE + "within")
RULE_PREDICATES = [RDF_TYPE, SUBCLASS, SAMEAS, TRANS_P, INV_Q, INV_R, Iri(BASE + "other")]


def random_rule_triples(rng: random.Random, max_size=30) -> list[Triple]:
    out = []
    for _ in range(rng.randint(0, max_size)):
        predicate = rng.choice(RULE_PREDICATES)
        subject = rng.choice(RULE_NODES)
        obj = rng.choice(RULE_NODES + [Literal("v")])
        out.append(Triple(subject, predicate, obj))
    return out


def random_ground_triples(rng: random.Random, max_size=20) -> set[Triple]:
    out = set()
    for _ in range(rng.randint(0, max_size)):
        subject = Iri(BASE + "s" + str(rng.randint(0, 9)))
        predicate = Iri(BASE + "p" + str(rng.randint(0, 5)))
        out.add(Triple(subject, predicate, random_ground_term(rng)))
    return out

"""Triple data model and the indexed in-memory store.

Terms are immutable values compared by exact string equality; the store
keeps set semantics over triples and answers wildcard pattern matches
from whichever of its three orderings (subject-, predicate-, object-first)
fits the bound positions. Basic graph patterns are solved by left-deep
joins over those matches.

Mutation requires exclusive access; `match` and `solve_bgp` only read and
may run concurrently once writers are done.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")


class MalformedTripleError(ValueError):
    """A term combination that cannot form an RDF statement."""


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI."""

    value: str

    def __post_init__(self) -> None:
        if not _SCHEME_RE.match(self.value):
            raise ValueError(f"relative IRI: {self.value!r}")


@dataclass(frozen=True, slots=True)
class Literal:
    """A literal with at most one of language tag / datatype IRI."""

    lexical: str
    lang: str | None = None
    datatype: str | None = None

    def __post_init__(self) -> None:
        if self.lang is not None and self.datatype is not None:
            raise ValueError("literal with both language tag and datatype")


@dataclass(frozen=True, slots=True)
class Blank:
    """A blank node; labels are only meaningful within one store."""

    label: str

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("blank node with empty label")


Term = Union[Iri, Literal, Blank]


@dataclass(frozen=True, slots=True)
class Var:
    """A named query variable; a separate kind from any RDF term."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("variable with empty name")


PatternTerm = Union[Iri, Literal, Blank, Var]


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self) -> None:
        if isinstance(self.subject, Literal):
            raise MalformedTripleError("literal subject")
        if not isinstance(self.predicate, Iri):
            raise MalformedTripleError("non-IRI predicate")


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm


# A solution to a basic graph pattern: variable name -> term.
Binding = Mapping[str, Term]


def render_term(term: Term) -> str:
    """Canonical N-Triples rendering; doubles as the total term order."""
    if isinstance(term, Iri):
        return "<" + _escape_iri(term.value) + ">"
    if isinstance(term, Blank):
        return "_:" + term.label
    out = '"' + _escape_literal(term.lexical) + '"'
    if term.lang is not None:
        return out + "@" + term.lang
    if term.datatype is not None:
        return out + "^^<" + _escape_iri(term.datatype) + ">"
    return out


def render_triple(triple: Triple) -> str:
    return (
        f"{render_term(triple.subject)} {render_term(triple.predicate)} "
        f"{render_term(triple.object)} ."
    )


def _escape_char(ch: str) -> str:
    code = ord(ch)
    if code > 0xFFFF:
        return f"\\U{code:08X}"
    return f"\\u{code:04X}"


def _escape_literal(text: str) -> str:
    out = []
    for ch in text:
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
        elif ch < " ":
            out.append(_escape_char(ch))
        else:
            out.append(ch)
    return "".join(out)


_IRI_BAD = set('<>"{}|^`\\')


def _escape_iri(text: str) -> str:
    if not any(ch in _IRI_BAD or ch <= " " for ch in text):
        return text
    return "".join(
        _escape_char(ch) if (ch in _IRI_BAD or ch <= " ") else ch for ch in text
    )


class TripleStore:
    """Set of triples with three index orderings and a term dictionary.

    All three indexes stay in lockstep: a pattern answered from any of
    them yields the same triples. The term dictionary only ever grows,
    so ids handed out stay valid across removals.
    """

    __slots__ = ("_ids", "_terms", "_triples", "_spo", "_pos", "_osp")

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self._ids: dict[Term, int] = {}
        self._terms: list[Term] = []
        self._triples: set[tuple[int, int, int]] = set()
        self._spo: dict[int, dict[int, set[int]]] = {}
        self._pos: dict[int, dict[int, set[int]]] = {}
        self._osp: dict[int, dict[int, set[int]]] = {}
        for t in triples:
            self.insert(t)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        terms = self._terms
        for s, p, o in self._triples:
            yield Triple(terms[s], terms[p], terms[o])

    def __contains__(self, triple: Triple) -> bool:
        key = self._key(triple)
        return key is not None and key in self._triples

    def copy(self) -> "TripleStore":
        new = TripleStore.__new__(TripleStore)
        new._ids = dict(self._ids)
        new._terms = list(self._terms)
        new._triples = set(self._triples)
        new._spo = {a: {b: set(c) for b, c in inner.items()} for a, inner in self._spo.items()}
        new._pos = {a: {b: set(c) for b, c in inner.items()} for a, inner in self._pos.items()}
        new._osp = {a: {b: set(c) for b, c in inner.items()} for a, inner in self._osp.items()}
        return new

    # -- term dictionary ------------------------------------------------

    def term_id(self, term: Term) -> int:
        """Id of a term seen by this store; KeyError if never inserted."""
        return self._ids[term]

    def term_for_id(self, term_id: int) -> Term:
        return self._terms[term_id]

    def _encode(self, term: Term) -> int:
        tid = self._ids.get(term)
        if tid is None:
            tid = len(self._terms)
            self._ids[term] = tid
            self._terms.append(term)
        return tid

    def _key(self, triple: Triple) -> tuple[int, int, int] | None:
        s = self._ids.get(triple.subject)
        p = self._ids.get(triple.predicate)
        o = self._ids.get(triple.object)
        if s is None or p is None or o is None:
            return None
        return (s, p, o)

    # -- mutation --------------------------------------------------------

    def insert(self, triple: Triple) -> bool:
        """Add a triple; False if it was already present."""
        key = (
            self._encode(triple.subject),
            self._encode(triple.predicate),
            self._encode(triple.object),
        )
        if key in self._triples:
            return False
        self._triples.add(key)
        s, p, o = key
        self._spo.setdefault(s, {}).setdefault(p, set()).add(o)
        self._pos.setdefault(p, {}).setdefault(o, set()).add(s)
        self._osp.setdefault(o, {}).setdefault(s, set()).add(p)
        return True

    def update(self, triples: Iterable[Triple]) -> int:
        """Insert many; returns how many were new."""
        return sum(1 for t in triples if self.insert(t))

    def remove(self, triple: Triple) -> bool:
        """Drop a triple; False if it was not present."""
        key = self._key(triple)
        if key is None or key not in self._triples:
            return False
        self._triples.discard(key)
        s, p, o = key
        self._prune(self._spo, s, p, o)
        self._prune(self._pos, p, o, s)
        self._prune(self._osp, o, s, p)
        return True

    @staticmethod
    def _prune(index: dict[int, dict[int, set[int]]], a: int, b: int, c: int) -> None:
        leaf = index[a][b]
        leaf.discard(c)
        if not leaf:
            del index[a][b]
            if not index[a]:
                del index[a]

    # -- queries ----------------------------------------------------------

    def mentions(self, term: Term) -> bool:
        """True if the term occurs in some current triple."""
        tid = self._ids.get(term)
        if tid is None:
            return False
        return tid in self._spo or tid in self._pos or tid in self._osp

    def match(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        object: Term | None = None,
    ) -> set[Triple]:
        """All triples agreeing with every non-None position."""
        s = self._lookup(subject)
        p = self._lookup(predicate)
        o = self._lookup(object)
        if (subject is not None and s is None) or (
            predicate is not None and p is None
        ) or (object is not None and o is None):
            return set()
        terms = self._terms
        return {
            Triple(terms[ks], terms[kp], terms[ko])
            for ks, kp, ko in self._match_ids(s, p, o)
        }

    def _lookup(self, term: Term | None) -> int | None:
        if term is None:
            return None
        return self._ids.get(term)

    def _match_ids(
        self, s: int | None, p: int | None, o: int | None
    ) -> Iterable[tuple[int, int, int]]:
        if s is not None and p is not None and o is not None:
            return [(s, p, o)] if (s, p, o) in self._triples else []
        if s is not None:
            return self._from_spo(s, p, o)
        if p is not None:
            return self._from_pos(s, p, o)
        if o is not None:
            return self._from_osp(s, p, o)
        return list(self._triples)

    def _from_spo(self, s, p, o):
        by_p = self._spo.get(s, {})
        preds = [p] if p is not None else list(by_p)
        out = []
        for kp in preds:
            for ko in by_p.get(kp, ()):
                if o is None or ko == o:
                    out.append((s, kp, ko))
        return out

    def _from_pos(self, s, p, o):
        by_o = self._pos.get(p, {})
        objs = [o] if o is not None else list(by_o)
        out = []
        for ko in objs:
            for ks in by_o.get(ko, ()):
                if s is None or ks == s:
                    out.append((ks, p, ko))
        return out

    def _from_osp(self, s, p, o):
        by_s = self._osp.get(o, {})
        subjects = [s] if s is not None else list(by_s)
        out = []
        for ks in subjects:
            for kp in by_s.get(ks, ()):
                if p is None or kp == p:
                    out.append((ks, kp, o))
        return out


def _binding_key(binding: Binding) -> tuple[tuple[str, str], ...]:
    return tuple(sorted((name, render_term(t)) for name, t in binding.items()))


def solve_bgp(store: TripleStore, patterns: Sequence[TriplePattern]) -> list[dict[str, Term]]:
    """Solutions of a conjunction of triple patterns.

    Patterns are evaluated most-constrained first (most concrete
    positions; input order breaks ties) with left-deep joins. The result
    is duplicate-free and canonically ordered, so equal stores and
    pattern lists always produce the same list.
    """
    order = sorted(
        range(len(patterns)),
        key=lambda i: -sum(
            1
            for pos in (patterns[i].subject, patterns[i].predicate, patterns[i].object)
            if not isinstance(pos, Var)
        ),
    )
    bindings: list[dict[str, Term]] = [{}]
    for idx in order:
        pattern = patterns[idx]
        extended: list[dict[str, Term]] = []
        for binding in bindings:
            s = _resolve(pattern.subject, binding)
            p = _resolve(pattern.predicate, binding)
            o = _resolve(pattern.object, binding)
            for triple in store.match(s, p, o):
                new = _extend(binding, pattern, triple)
                if new is not None:
                    extended.append(new)
        bindings = extended
        if not bindings:
            break
    unique = {_binding_key(b): b for b in bindings}
    return [unique[k] for k in sorted(unique)]


def _resolve(pos: PatternTerm, binding: Binding) -> Term | None:
    if isinstance(pos, Var):
        return binding.get(pos.name)
    return pos


def _extend(binding: Binding, pattern: TriplePattern, triple: Triple) -> dict[str, Term] | None:
    new = dict(binding)
    pairs = (
        (pattern.subject, triple.subject),
        (pattern.predicate, triple.predicate),
        (pattern.object, triple.object),
    )
    for pos, term in pairs:
        if isinstance(pos, Var):
            bound = new.get(pos.name)
            if bound is None:
                new[pos.name] = term
            elif bound != term:
                return None
    return new

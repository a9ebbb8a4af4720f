import random

import pytest

from govgraph import ns
from govgraph.rdf import Iri, Literal, Triple, TripleStore
from govgraph.reasoner import DEFAULT_RULES, ancestors, materialize
from govgraph.schema import (
    FixtureSpec,
    UnitLevel,
    Violation,
    generate_fixture,
    validate,
    vocabulary,
)
from govgraph.turtle import serialize_ntriples

ESTADO = Iri(ns.EGE + "Estado-1")
EJECUTIVO = Iri(ns.EGE + "Ejecutivo-1")
GOBERNACION = Iri(ns.EGE + "Gobernacion-1")


def clean_store():
    store = generate_fixture()
    store.update(vocabulary())
    return store


def only_violation(store, constraint):
    violations = validate(store)
    assert len(violations) == 1, violations
    assert violations[0].constraint == constraint
    return violations[0]


class TestVocabulary:
    def test_powers_are_subclasses_of_poder(self):
        assert Triple(ns.EGE_EJECUTIVO, ns.RDFS_SUBCLASS_OF, ns.EGE_PODER) in vocabulary()

    def test_units_subclass_unidad_not_each_other(self):
        v = vocabulary()
        assert Triple(ns.EGE_MINISTERIO, ns.RDFS_SUBCLASS_OF, ns.EGE_UNIDAD_ADMINISTRATIVA) in v
        assert Triple(ns.EGE_MINISTERIO, ns.RDFS_SUBCLASS_OF, ns.EGE_SUBSECRETARIA) not in v
        assert Triple(ns.EGE_SUBSECRETARIA, ns.RDFS_SUBCLASS_OF, ns.EGE_MINISTERIO) not in v

    def test_byte_identical_serialization(self):
        assert serialize_ntriples(vocabulary()) == serialize_ntriples(vocabulary())

    def test_every_class_has_exactly_one_parent(self):
        v = TripleStore(vocabulary())
        classes = {t.subject for t in v.match(None, ns.RDF_TYPE, ns.OWL_CLASS)}
        for c in classes:
            parents = v.match(c, ns.RDFS_SUBCLASS_OF, None)
            assert len(parents) == 1, c

    def test_subclass_graph_is_a_tree(self):
        v = TripleStore(vocabulary())
        for start in {t.subject for t in v.match(None, ns.RDFS_SUBCLASS_OF, None)}:
            seen = set()
            node = start
            while True:
                links = v.match(node, ns.RDFS_SUBCLASS_OF, None)
                if not links:
                    break
                assert node not in seen, "cycle in the class tree"
                seen.add(node)
                node = next(iter(links)).object

    def test_alignment_annotations_present(self):
        v = vocabulary()
        assert Triple(ns.EGE_UNIDAD_ADMINISTRATIVA, ns.RDFS_SEE_ALSO, ns.ORG_ORGANIZATIONAL_UNIT) in v
        assert Triple(ns.EGE_UNIT_OF, ns.RDFS_SEE_ALSO, ns.ORG_UNIT_OF) in v


class TestUnitLevel:
    def test_ranks(self):
        assert UnitLevel.GOBERNACION.rank == 0
        assert UnitLevel.VICEGOBERNACION.rank == 0
        assert UnitLevel.MINISTERIO.rank == 1
        assert UnitLevel.DEPARTAMENTO.rank == 5

    def test_rank_total_on_enumeration(self):
        assert {level.rank for level in UnitLevel} == {0, 1, 2, 3, 4, 5}


class TestGenerateFixture:
    def test_default_counts(self):
        fx = generate_fixture()
        expected = {
            ns.EGE_MINISTERIO: 10,
            ns.EGE_SUBSECRETARIA: 37,
            ns.EGE_DIRECCION_GENERAL: 68,
            ns.EGE_DIRECCION: 114,
            ns.EGE_DEPARTAMENTO: 326,
            ns.EGE_OFICINA: 20,
            ns.EGE_TRAMITE: 10,
        }
        for klass, count in expected.items():
            assert len(fx.match(None, ns.RDF_TYPE, klass)) == count

    def test_count_preservation_for_arbitrary_specs(self):
        rng = random.Random(3)
        for _ in range(5):
            spec = FixtureSpec(
                seed=rng.randint(0, 99),
                ministerios=rng.randint(0, 5),
                subsecretarias=rng.randint(0, 9),
                direcciones_generales=rng.randint(0, 9),
                direcciones=rng.randint(0, 9),
                departamentos=rng.randint(0, 9),
                offices=rng.randint(0, 4),
                tramites=rng.randint(0, 4),
            )
            fx = generate_fixture(spec)
            for klass, count in (
                (ns.EGE_MINISTERIO, spec.ministerios),
                (ns.EGE_SUBSECRETARIA, spec.subsecretarias),
                (ns.EGE_DIRECCION_GENERAL, spec.direcciones_generales),
                (ns.EGE_DIRECCION, spec.direcciones),
                (ns.EGE_DEPARTAMENTO, spec.departamentos),
                (ns.EGE_OFICINA, spec.offices),
                (ns.EGE_TRAMITE, spec.tramites),
            ):
                assert len(fx.match(None, ns.RDF_TYPE, klass)) == count

    def test_degenerate_spec(self):
        spec = FixtureSpec(
            ministerios=0,
            subsecretarias=0,
            direcciones_generales=0,
            direcciones=0,
            departamentos=0,
            offices=0,
            tramites=0,
        )
        fx = generate_fixture(spec)
        subjects = {t.subject for t in fx.match(None, ns.RDF_TYPE, None)}
        assert subjects == {
            ESTADO,
            EJECUTIVO,
            Iri(ns.EGE + "Legislativo-1"),
            Iri(ns.EGE + "Judicial-1"),
            GOBERNACION,
            Iri(ns.EGE + "Vicegobernacion-1"),
        }
        assert validate(fx) == []

    def test_round_robin_distribution(self):
        fx = generate_fixture()
        sizes = {}
        for t in fx.match(None, ns.EGE_HAS_DIVISION, None):
            if "Subsecretaria" in t.object.value:
                sizes[t.subject] = sizes.get(t.subject, 0) + 1
        assert sorted(sizes.values(), reverse=True) == [4] * 7 + [3] * 3

    def test_same_seed_is_byte_identical(self):
        a = serialize_ntriples(generate_fixture(FixtureSpec(seed=5)))
        b = serialize_ntriples(generate_fixture(FixtureSpec(seed=5)))
        assert a == b

    def test_different_seed_changes_coordinates(self):
        a = serialize_ntriples(generate_fixture(FixtureSpec(seed=1)))
        b = serialize_ntriples(generate_fixture(FixtureSpec(seed=2)))
        assert a != b

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError, match="negative count"):
            FixtureSpec(offices=-1)

    def test_ancestor_chain_depth(self):
        store = materialize(clean_store(), DEFAULT_RULES)
        departamento = sorted(
            (t.subject for t in store.match(None, ns.RDF_TYPE, ns.EGE_DEPARTAMENTO)),
            key=lambda t: t.value,
        )[0]
        chain = ancestors(store, departamento)
        assert len(chain) == 5
        assert chain[-1] == GOBERNACION
        assert ancestors(clean_store(), departamento) == chain


class TestValidate:
    def test_clean_fixture_has_zero_violations(self):
        assert validate(clean_store()) == []

    def test_c1_missing_power_edge(self):
        store = clean_store()
        store.remove(Triple(ESTADO, ns.EGE_HAS_POWER, EJECUTIVO))
        violation = only_violation(store, "C1")
        assert violation.focus == ESTADO

    def test_c2_missing_executive_division(self):
        store = clean_store()
        store.remove(Triple(EJECUTIVO, ns.EGE_HAS_DIVISION, GOBERNACION))
        violation = only_violation(store, "C2")
        assert violation.focus == EJECUTIVO

    def test_c3_rank_skipping_edge(self):
        store = clean_store()
        dirgen = Iri(ns.EGE + "DireccionGeneral-01")
        direccion = Iri(ns.EGE + "Direccion-001")
        departamento = Iri(ns.EGE + "Departamento-001")
        assert store.remove(Triple(direccion, ns.EGE_HAS_DIVISION, departamento))
        store.insert(Triple(dirgen, ns.EGE_HAS_DIVISION, departamento))
        violation = only_violation(store, "C3")
        assert violation.focus == dirgen

    def test_c4_duplicated_parent(self):
        store = clean_store()
        departamento = Iri(ns.EGE + "Departamento-001")
        second_parent = Iri(ns.EGE + "Direccion-002")
        store.insert(Triple(second_parent, ns.EGE_HAS_DIVISION, departamento))
        violation = only_violation(store, "C4")
        assert violation.focus == departamento

    def test_c5_orphaned_office(self):
        store = clean_store()
        office = Iri(ns.INFRA + "Oficina-01")
        lgd_node = Iri(ns.LGD + "9000001")
        assert store.remove(Triple(office, ns.OWL_SAMEAS, lgd_node))
        violation = only_violation(store, "C5")
        assert violation.focus == office

    def test_c5_malformed_coordinate(self):
        store = clean_store()
        lgd_node = Iri(ns.LGD + "9000001")
        [lat] = store.match(lgd_node, ns.EGE_LAT, None)
        store.remove(lat)
        store.insert(Triple(lgd_node, ns.EGE_LAT, Literal("not-a-number")))
        violations = validate(store)
        assert [v.constraint for v in violations] == ["C5"]
        assert "not-a-number" in violations[0].message

    def test_c6_unoffered_tramite(self):
        store = clean_store()
        tramite = Iri(ns.TYS + "Tramite-01")
        office = Iri(ns.INFRA + "Oficina-01")
        assert store.remove(Triple(office, ns.EGE_OFFERS_TRAMITE, tramite))
        violation = only_violation(store, "C6")
        assert violation.focus == tramite

    def test_violations_sorted_and_focus_present(self):
        store = clean_store()
        store.remove(Triple(ESTADO, ns.EGE_HAS_POWER, EJECUTIVO))
        office = Iri(ns.INFRA + "Oficina-01")
        store.remove(Triple(office, ns.OWL_SAMEAS, Iri(ns.LGD + "9000001")))
        tramite = Iri(ns.TYS + "Tramite-01")
        store.remove(Triple(office, ns.EGE_OFFERS_TRAMITE, tramite))
        violations = validate(store)
        assert [v.constraint for v in violations] == ["C1", "C5", "C6"]
        for violation in violations:
            assert store.mentions(violation.focus)

    def test_validate_without_vocabulary_included(self):
        # The checker supplies the class tree itself.
        assert validate(generate_fixture()) == []

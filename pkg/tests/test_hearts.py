import pytest

from cy2torsion.category import CategorySpec, get_tables
from cy2torsion.hearts import HEART_CATALOG, heart_report
from cy2torsion.torsion import enumerate_torsion_pairs, make_record

SPECS = [CategorySpec("A", 2, 2), CategorySpec("A", 2, 1), CategorySpec("D", 1, 1), CategorySpec("D", 2, 1)]


def test_core_of_x8():
    tables = get_tables(CategorySpec("A", 2, 2))
    rec = make_record(tables, tables.parse_set(["(1,3)", "(1,4)"]))
    rep = heart_report(rec, tables)
    assert rep.num_simples == 2
    assert rep.hom_matrix == [[1, 2], [0, 2]]
    assert rep.algebra_dim == 5
    assert rep.catalog_note.startswith("undetermined")


def test_zero_heart():
    tables = get_tables(CategorySpec("A", 2, 2))
    rep = heart_report(make_record(tables, tables.full), tables)
    assert rep.is_zero and rep.catalog_note == "zero heart (t-structure)"


def test_single_simple_notes():
    tables = get_tables(CategorySpec("A", 2, 2))
    field = heart_report(make_record(tables, tables.parse_set(["(1,3)"])), tables)
    assert field.hom_matrix == [[1]] and field.catalog_note.startswith("field k")
    loop = heart_report(make_record(tables, tables.parse_set(["(1,4)"])), tables)
    assert loop.hom_matrix == [[2]] and "alpha^2" in loop.catalog_note


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_cores_are_rigid(spec):
    tables = get_tables(spec)
    for rec in enumerate_torsion_pairs(tables):
        rep = heart_report(rec, tables)
        assert rep.core & ~rec.x == 0
        assert rep.core & ~tables.shift(rec.y, -1) == 0
        assert tables.is_rigid(rep.core)
        assert rep.is_zero == rec.is_t_structure
        if spec.family == "D":
            assert "hom_matrix" not in rep.to_json()


def test_catalog_is_static():
    assert len(HEART_CATALOG) == 9
    assert any("alpha^3" in e.relations for e in HEART_CATALOG)


@pytest.mark.parametrize("spec", SPECS + [CategorySpec("A", 3, 2)], ids=str)
def test_num_simples_at_most_n(spec):
    tables = get_tables(spec)
    for rec in enumerate_torsion_pairs(tables, with_wings=False):
        assert heart_report(rec, tables).num_simples <= spec.n

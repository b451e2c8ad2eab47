import json
import random

import pytest

from conftest import CYCLIC, FIXTURES, load
from gisemi.gis import Element, multiply
from gisemi.verify import random_elements, verify_suite

NAMES = ["acyclic_matrix_units", "associativity", "component_paths", "cycles_polycyclic",
         "dclass_brandt", "dclass_inverse_subsemigroup", "dclass_products",
         "incomparable_component_products", "inverse_axioms", "j_equals_d", "jclass_embedding",
         "jclass_inverse_subsemigroup", "jclass_partition", "ordered_component_products"]


@pytest.fixture(scope="module")
def reports():
    return {name: verify_suite(load(name), 3, seed=0, samples=2000) for name in FIXTURES + ("g_iso2",)}


def test_check_names_sorted(reports):
    assert [c.name for c in reports["g_a2"].checks] == NAMES


@pytest.mark.parametrize("name", FIXTURES + ("g_iso2",))
def test_all_checks_but_j_equals_d_pass(reports, name):
    rep = reports[name]
    for c in rep.checks:
        if c.name != "j_equals_d":
            assert c.passed, (c.name, c.counterexample)
            assert c.cases > 0 or c.name in ("acyclic_matrix_units", "ordered_component_products",
                                             "incomparable_component_products")


def test_c2_reports_witness(reports):
    c = reports["g_c2"].check("j_equals_d")
    assert c.passed and c.note == "J-not-D witness: @a;@a ~J @b;@b"


@pytest.mark.parametrize("name", ["g_r1", "g_r2"])
def test_roses_have_no_j_not_d_pair(reports, name):
    c = reports[name].check("j_equals_d")
    assert not c.passed
    assert c.counterexample == {"kind": "cyclic graph but no J-not-D pair in the slice"}


def test_isolated_vertices_cross_products_zero(reports):
    c = reports["g_iso2"].check("incomparable_component_products")
    assert c.passed and c.cases > 0


def test_a2_matrix_unit_table(reports):
    c = reports["g_a2"].check("acyclic_matrix_units")
    assert c.passed and c.cases > 25


def test_skips_are_counted_not_passed(reports):
    c = reports["g_c2"].check("jclass_embedding")
    assert c.skipped > 0


def test_report_serialization_is_stable():
    g = load("g_flow")
    one = verify_suite(g, 2, seed=5, samples=500).to_json()
    two = verify_suite(g, 2, seed=5, samples=500).to_json()
    assert one == two
    doc = json.loads(one)
    assert doc["seed"] == 5 and doc["failures"] == 0


def test_text_report(reports):
    text = reports["g_r1"].to_text()
    assert "FAIL j_equals_d" in text and text.endswith("total failures: 1\n")
    assert "\033[" not in text
    assert "\033[31m" in reports["g_r1"].to_text(color=True)


def test_random_elements_are_seeded():
    g = load("g_c2")
    a = random_elements(g, random.Random(9), 50)
    b = random_elements(g, random.Random(9), 50)
    assert a == b and all(isinstance(x, Element) for x in a)


def test_detects_a_broken_multiplication(monkeypatch):
    import gisemi.verify as verify

    def bad(g, x, y):
        z = multiply(g, x, y)
        return Element(g) if not z.is_zero and len(z.u) == 2 else z

    monkeypatch.setattr(verify, "multiply", bad)
    rep = verify.verify_suite(load("g_c2"), 3, samples=300)
    assert not rep.passed
    assert rep.check("dclass_brandt").failures > 0

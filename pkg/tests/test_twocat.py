import pytest

from twopro.errors import (
    AxiomViolation,
    DanglingBoundary,
    DuplicateId,
    MissingCompositeEntry,
    UnknownObject,
)
from twopro.fixtures import (
    chain_iso_host,
    discrete_two_cat,
    fixture_two_categories,
    iso_host,
    poset01_two_cat,
    terminal_two_cat,
)
from twopro.twocat import (
    dualize,
    hom_category,
    two_cat_from_json,
    two_cat_to_json,
    validate_two_category,
)


def test_fixtures_validate():
    cats = fixture_two_categories()
    assert set(cats) == {"terminal", "poset01", "chain012", "iso_host",
                         "chain_iso_host", "suspension_z2"}


def test_terminal_shape():
    C = terminal_two_cat()
    validate_two_category(C)
    assert len(C.objects) == 1
    assert len(C.one_cells) == 1
    assert len(C.two_cells) == 1


def test_poset01_shape():
    C = validate_two_category(poset01_two_cat())
    assert len(C.objects) == 2
    assert len(C.one_cells) == 3
    assert len(C.two_cells) == 3


def test_corrupted_vcomp_is_rejected_with_witness():
    C = iso_host()
    C.vcomp[("si", "s")] = "ig"      # breaks boundaries of the composite
    with pytest.raises(AxiomViolation) as e:
        validate_two_category(C)
    assert e.value.witness


def test_corrupted_interchange_detected():
    C = chain_iso_host()
    validate_two_category(C)
    C.hcomp2[("t", "s")] = "ihf"     # wrong boundary for the composite
    with pytest.raises(AxiomViolation):
        validate_two_category(C)


def test_duplicate_and_dangling():
    raw = two_cat_to_json(terminal_two_cat())
    raw["one_cells"].append({"id": "id", "src": "*", "tgt": "*"})
    with pytest.raises(DuplicateId):
        validate_two_category(two_cat_from_json(raw))
    raw2 = two_cat_to_json(terminal_two_cat())
    raw2["one_cells"][0]["tgt"] = "nope"
    with pytest.raises(DanglingBoundary):
        validate_two_category(two_cat_from_json(raw2))


def test_missing_entry():
    C = poset01_two_cat()
    del C.hcomp1[("i1", "u")]
    with pytest.raises(MissingCompositeEntry):
        validate_two_category(C)


def test_unknown_key_rejected():
    raw = two_cat_to_json(terminal_two_cat())
    raw["extra"] = 1
    with pytest.raises(DanglingBoundary):
        two_cat_from_json(raw)


def test_dualize_involution_and_validity():
    for C in fixture_two_categories().values():
        D = dualize(C)
        validate_two_category(D)
        assert dualize(D).same_tables(C)


def test_dualize_poset_reverses_arrow():
    C = poset01_two_cat()
    D = dualize(C)
    assert D.one_cells["u"] == ("1", "0")


def test_hom_category_cases():
    C = validate_two_category(poset01_two_cat())
    h01 = hom_category(C, "0", "1")
    assert h01.objects == ("u",)
    assert list(h01.morphisms) == ["id2_u"]
    h10 = hom_category(C, "1", "0")
    assert h10.objects == ()
    T = terminal_two_cat()
    hTT = hom_category(T, "*", "*")
    assert len(hTT.objects) == 1 and len(hTT.morphisms) == 1
    with pytest.raises(UnknownObject):
        hom_category(C, "2", "0")


def test_hom_category_duality():
    for C in fixture_two_categories().values():
        D = dualize(C)
        for a in C.objects:
            for b in C.objects:
                assert hom_category(C, a, b).same_tables(hom_category(D, b, a))


def test_whisker_left_identity():
    C = validate_two_category(iso_host())
    # whiskering an identity 2-cell gives the identity of the composite
    assert C.whisker("left", "if", "1B") == "if"
    assert C.whisker("right", "s", "1A") == "s"


def test_whisker_exchange_orders_agree():
    C = validate_two_category(chain_iso_host())
    for bp in C.two_cells:
        for b in C.two_cells:
            if C.two_src_obj(bp) != C.two_tgt_obj(b):
                continue
            f, g = C.two_cells[b]
            fp, gp = C.two_cells[bp]
            one = C.vcompose(C.hcompose(bp, C.id2[g]), C.hcompose(C.id2[fp], b))
            two = C.vcompose(C.hcompose(C.id2[gp], b), C.hcompose(bp, C.id2[f]))
            assert one == two == C.hcompose(bp, b)


def test_json_round_trip():
    for C in fixture_two_categories().values():
        again = two_cat_from_json(two_cat_to_json(C))
        assert again.same_tables(C)
        validate_two_category(again)

from itertools import product

import pytest

from twopro.errors import CoherenceViolation, PreservationViolation
from twopro.fincat import (
    CatFunctor,
    CatNat,
    all_functors,
    all_nats,
    compose_functors,
    identity_functor,
)
from twopro.fixtures import (
    chain012_two_cat,
    iso_host,
    poset01_diagram,
    poset01_two_cat,
    terminal_two_cat,
    z2_cat,
    z2_diagram,
)
from twopro.transforms import (
    CatValuedFunctor,
    Modification,
    PseudoNat,
    constant_cat_functor,
    enumerate_transformations,
    hom_transform_category,
    identity_pseudonat,
    identity_two_functor,
    representable,
    strict_nat,
    validate_functor,
    validate_modification,
    validate_pseudonat,
    yoneda_h,
    yoneda_l,
)
from twopro.twocat import validate_two_category


def test_identity_two_functor_valid():
    for make in (terminal_two_cat, poset01_two_cat, iso_host):
        C = validate_two_category(make())
        validate_functor(identity_two_functor(C))


def test_poset01_diagram_validates():
    validate_functor(poset01_diagram())


def test_constant_cat_functor_valid():
    from twopro.fincat import terminal_cat

    validate_functor(constant_cat_functor(poset01_two_cat(), terminal_cat()))


def test_broken_functor_rejected():
    F = poset01_diagram()
    F.on1["u"] = CatFunctor(F.fiber("0"), F.fiber("0"),
                            {"a": "a", "b": "b"}, {"id_a": "id_a", "id_b": "id_b"})
    with pytest.raises(PreservationViolation):
        validate_functor(F)


def brute_force_strict(F, G):
    """Independent oracle: filter raw component tuples, no shared code
    with enumerate_transformations."""
    I = F.source
    objs = sorted(I.objects)
    pools = [all_functors(F.fiber(o), G.fiber(o)) for o in objs]
    found = []
    for choice in product(*pools):
        comp = dict(zip(objs, choice))
        ok = True
        for f, (s, t) in I.one_cells.items():
            if compose_functors(G.on1[f], comp[s]) != compose_functors(comp[t], F.on1[f]):
                ok = False
                break
        if ok:
            for a, (f, g) in I.two_cells.items():
                s = I.one_src(f)
                left = {x: G.on2[a].at(comp[s].ob[x])
                        for x in F.fiber(s).objects}
                right = {x: comp[I.one_tgt(f)].mor[F.on2[a].at(x)]
                         for x in F.fiber(s).objects}
                if left != right:
                    ok = False
                    break
        if ok:
            found.append(comp)
    return found


def test_transform_counts_against_oracle():
    F = poset01_diagram()
    oracle = brute_force_strict(F, F)
    strict = enumerate_transformations(F, F, "strict")
    assert len(strict) == len(oracle) == 4
    pseudo = enumerate_transformations(F, F, "pseudo")
    assert len(pseudo) == 4      # all coherences are forced here


def test_hom_transform_category_counts():
    F = poset01_diagram()
    T = hom_transform_category(F, F, "strict")
    assert len(T.cat.objects) == 4
    assert len(T.cat.morphisms) == 4
    T.cat.validate()


def test_constant_terminal_transform_category():
    from twopro.fincat import terminal_cat

    I = terminal_two_cat()
    K = constant_cat_functor(I, terminal_cat())
    T = hom_transform_category(K, K, "strict")
    assert len(T.cat.objects) == 1 and len(T.cat.morphisms) == 1


def test_strict_included_in_pseudo():
    F = z2_diagram(poset01_two_cat())
    strict = enumerate_transformations(F, F, "strict")
    pseudo = enumerate_transformations(F, F, "pseudo")
    pseudo_keys = {t.key() for t in pseudo}
    assert len(strict) == 2
    assert len(pseudo) == 4
    for t in strict:
        assert t.key() in pseudo_keys
        assert t.is_strict()


def test_identity_pseudonat_and_strict_reinterpretation():
    F = poset01_diagram()
    ident = identity_pseudonat(F)
    validate_pseudonat(ident)
    assert ident.is_strict()


def test_perturbed_coherence_rejected_pn1():
    F = z2_diagram(chain012_two_cat())
    theta = identity_pseudonat(F)
    # replace the coherence over the composite by the other involution
    bad = CatNat(theta.coh["w"].F, theta.coh["w"].G, {"*": "s"})
    theta.coh["w"] = bad
    with pytest.raises(CoherenceViolation) as e:
        validate_pseudonat(theta)
    assert e.value.axiom == "PN1"


def test_modification_validation_and_inverse():
    F = z2_diagram(poset01_two_cat())
    trans = enumerate_transformations(F, F, "pseudo")
    # all components are invertible here, so inverses are modifications too
    count = 0
    for t1 in trans:
        for t2 in trans:
            for comp in product(["e", "s"], repeat=2):
                cand = Modification(t1, t2, {
                    "0": CatNat(t1.comp["0"], t2.comp["0"], {"*": comp[0]}),
                    "1": CatNat(t1.comp["1"], t2.comp["1"], {"*": comp[1]}),
                })
                try:
                    validate_modification(cand)
                except CoherenceViolation:
                    continue
                count += 1
                assert cand.is_invertible()
                validate_modification(cand.inverse())
    assert count > 0


def test_identity_modification_is_valid():
    F = poset01_diagram()
    for t in enumerate_transformations(F, F, "strict"):
        from twopro.transforms import identity_modification

        validate_modification(identity_modification(t))


def test_representable_validates_on_fixtures():
    for make in (terminal_two_cat, poset01_two_cat, iso_host):
        C = validate_two_category(make())
        for A in C.objects:
            validate_functor(representable(C, A))


def test_representable_poset01_fibers():
    C = validate_two_category(poset01_two_cat())
    R = representable(C, "0")
    assert R.fiber("0").objects == ("i0",)
    assert R.fiber("1").objects == ("u",)


def test_yoneda_strict_bijective_everywhere():
    cases = []
    Cp = validate_two_category(poset01_two_cat())
    cases += [(Cp, poset01_diagram(), A) for A in Cp.objects]
    Ci = validate_two_category(iso_host())
    for A in Ci.objects:
        cases += [(Ci, representable(Ci, B), A) for B in Ci.objects]
    for C, F, A in cases:
        report = yoneda_h(C, F, A, "strict")
        assert report["bijective"], (A, report["witness"])


def test_yoneda_l_round_trip():
    C = validate_two_category(poset01_two_cat())
    F = poset01_diagram()
    for A in C.objects:
        idA = C.id1[A]
        for x in F.fiber(A).objects:
            ell = yoneda_l(C, F, A, x)
            assert ell.comp[A].ob[idA] == x
        report = yoneda_h(C, F, A, "strict")
        T, h = report["hom"], report["h"]
        for oid, theta in T.objects.items():
            x = h.ob[oid]
            back = yoneda_l(C, F, A, x)
            assert T.id_of_transformation(back) is not None


def test_yoneda_pseudo_section_and_retraction():
    C = validate_two_category(iso_host())
    F = representable(C, "A")
    report = yoneda_h(C, F, "A", "pseudo")
    T = report["hom"]
    # four pseudonatural transformations, indiscrete between each other
    assert len(T.cat.objects) == 4
    assert len(T.cat.morphisms) == 16
    assert report["section"]
    assert report["retract_iso_invertible"]
    # for every pseudonatural there is a strict one isomorphic to it
    strict_ids = {oid for oid, t in T.objects.items() if t.is_strict()}
    assert len(strict_ids) == 1
    iso = report["retract_iso"]
    for oid in T.cat.objects:
        assert T.cat.is_iso(iso.at(oid))


def test_yoneda_pseudo_on_strictly_rigid_instance():
    C = validate_two_category(poset01_two_cat())
    F = poset01_diagram()
    report = yoneda_h(C, F, "0", "pseudo")
    assert report["section"]
    assert report["retract_iso_invertible"]


def test_yoneda_natural_in_f():
    # postcomposition with a strict transformation commutes with evaluation
    C = validate_two_category(poset01_two_cat())
    F = poset01_diagram()
    from twopro.transforms import pseudonat_vcomp

    R = representable(C, "0")
    sigmas = enumerate_transformations(F, F, "strict")
    thetas = enumerate_transformations(R, F, "strict")
    for sig in sigmas:
        for th in thetas:
            comp = pseudonat_vcomp(sig, th)
            lhs = comp.comp["0"].ob[C.id1["0"]]
            rhs = sig.comp["0"].ob[th.comp["0"].ob[C.id1["0"]]]
            assert lhs == rhs

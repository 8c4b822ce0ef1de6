import random

import pytest

from twopro.errors import NotTwoFiltered, ValidationFailure
from twopro.fincat import functor_bijective
from twopro.fixtures import discrete_two_cat, iso_host, poset01_two_cat
from twopro.pro import ProContext, embed_c, make_pro, terminal_index
from twopro.transforms import TwoFunctor
from twopro.twocat import dualize, hom_category, validate_two_category


HOST = validate_two_category(iso_host())


def pro_over_poset(host, arrow):
    """X_0 = B <- X_1 = A along the chosen 1-cell."""
    I = poset01_two_cat()
    Id = dualize(I)
    diagram = TwoFunctor(Id, host,
                         {"0": "B", "1": "A"},
                         {"i0": "1B", "i1": "1A", "u": arrow},
                         {"id2_i0": "i1B", "id2_i1": "i1A",
                          "id2_u": host.id2[arrow]})
    return make_pro(I, diagram, host)


@pytest.fixture(scope="module")
def ctx():
    return ProContext(HOST)


@pytest.fixture(scope="module")
def Xf():
    return pro_over_poset(HOST, "f")


@pytest.fixture(scope="module")
def Xg():
    return pro_over_poset(HOST, "g")


def test_make_pro_singleton_is_embed():
    for A in HOST.objects:
        X = embed_c(HOST, A)
        assert X.index.same_tables(terminal_index())
        assert X.at("*") == A


def test_make_pro_rejects_unfiltered_index():
    I = discrete_two_cat(("P", "Q"))
    diagram = TwoFunctor(dualize(I), HOST,
                         {"P": "A", "Q": "B"},
                         {f: HOST.id1["A"] if s == "P" else HOST.id1["B"]
                          for f, (s, t) in I.one_cells.items()},
                         {})
    with pytest.raises(NotTwoFiltered):
        make_pro(I, diagram, HOST)


def test_embedding_fully_faithful(ctx):
    for A in HOST.objects:
        for B in HOST.objects:
            iso = ctx.embedding_iso(A, B)
            ok, witness = functor_bijective(iso)
            assert ok, (A, B, witness)


def test_embedding_respects_composition(ctx):
    # compose of embedded arrows is the embedded composite, naturally
    for g, (gs, gt) in HOST.one_cells.items():
        for f, (fs, ft) in HOST.one_cells.items():
            if gs != ft:
                continue
            lhs = ctx.compose(embed_c(HOST, fs), embed_c(HOST, gs),
                              embed_c(HOST, gt),
                              ctx.embed_arrow(gs, gt, g),
                              ctx.embed_arrow(fs, ft, f))
            rhs = ctx.embed_arrow(fs, gt, HOST.hcomp1[(g, f)])
            assert lhs == rhs


def test_embedding_respects_whiskers(ctx):
    # embedded cells whisker like host cells
    for th, (f, g) in HOST.two_cells.items():
        A, B = HOST.one_cells[f]
        for h, (hs, ht) in HOST.one_cells.items():
            if hs != B:
                continue
            eh = ctx.embed_arrow(B, ht, h)
            eth = ctx.embed_cell(A, B, th)
            lhs = ctx.whisker_left(embed_c(HOST, A), embed_c(HOST, B),
                                   embed_c(HOST, ht), eh, eth)
            rhs = ctx.embed_cell(A, ht, HOST.hcomp2[(HOST.id2[h], th)])
            assert lhs == rhs


def test_embedding_injective_on_objects():
    seen = {embed_c(HOST, A).key() for A in HOST.objects}
    assert len(seen) == len(HOST.objects)


def test_pro_hom_embedded_counts(ctx):
    hom = ctx.hom(embed_c(HOST, "A"), embed_c(HOST, "B"))
    base = hom_category(HOST, "A", "B")
    assert len(hom.cat.objects) == len(base.objects)
    assert len(hom.cat.morphisms) == len(base.morphisms)


def test_pro_hom_poset_counts(ctx, Xf):
    hom = ctx.hom(Xf, Xf)
    # the colimit at slot 0 is indiscrete on three objects, slot 1 is a
    # point, and descent leaves three objects with singleton hom sets
    assert len(hom.cat.objects) == 3
    for a in hom.cat.objects:
        for b in hom.cat.objects:
            assert len(hom.cat.hom(a, b)) == 1


def test_pro_hom_mixed(ctx, Xf, Xg):
    hom = ctx.hom(Xf, Xg)
    assert len(hom.cat.objects) == 3


def test_identity_and_unit_laws(ctx, Xf):
    hom = ctx.hom(Xf, Xf)
    idx = ctx.identity(Xf)
    for f in hom.cat.objects:
        assert ctx.compose(Xf, Xf, Xf, idx, f) == f
        assert ctx.compose(Xf, Xf, Xf, f, idx) == f


def test_unit_laws_mixed(ctx, Xf, Xg):
    hom = ctx.hom(Xf, Xg)
    for f in hom.cat.objects:
        assert ctx.compose(Xf, Xg, Xg, ctx.identity(Xg), f) == f
        assert ctx.compose(Xf, Xf, Xg, f, ctx.identity(Xf)) == f


def test_associativity(ctx, Xf, Xg):
    A = embed_c(HOST, "A")
    hom1 = ctx.hom(A, Xf)
    hom2 = ctx.hom(Xf, Xg)
    hom3 = ctx.hom(Xg, Xg)
    for f in hom1.cat.objects:
        for g in hom2.cat.objects:
            for h in hom3.cat.objects:
                gf = ctx.compose(A, Xf, Xg, g, f)
                hg = ctx.compose(Xf, Xg, Xg, h, g)
                assert ctx.compose(A, Xg, Xg, h, gf) == \
                    ctx.compose(A, Xf, Xg, hg, f)


def test_compose_on_embedded_matches_host(ctx):
    # through the embedding isomorphism, composition is host composition
    for g, (gs, gt) in HOST.one_cells.items():
        for f, (fs, ft) in HOST.one_cells.items():
            if gs != ft:
                continue
            got = ctx.compose(embed_c(HOST, fs), embed_c(HOST, ft),
                              embed_c(HOST, gt),
                              ctx.embed_arrow(ft, gt, g),
                              ctx.embed_arrow(fs, ft, f))
            assert got == ctx.embed_arrow(fs, gt, HOST.hcomp1[(g, f)])


def test_projection_single_index_is_identity(ctx):
    A = embed_c(HOST, "A")
    assert ctx.projection(A, "*") == ctx.identity(A)


def test_projection_coherence_pc0(ctx, Xf):
    # over an identity index arrow the coherence is an identity morphism
    for i in Xf.index.objects:
        u = Xf.index.id1[i]
        coh = ctx.projection_coherence(Xf, u)
        hom = ctx.hom(Xf, embed_c(HOST, Xf.at(i)))
        assert hom.cat.is_identity(coh)


def test_projection_family_pc1_pc2(ctx, Xf):
    I = Xf.index
    for (v, u), vu in I.hcomp1.items():
        i, j = I.one_cells[u]
        j2, k = I.one_cells[v]
        if j != j2:
            continue
        Ci = embed_c(HOST, Xf.at(i))
        hom = ctx.hom(Xf, Ci)
        pi_u = ctx.projection_coherence(Xf, u)
        pi_v = ctx.projection_coherence(Xf, v)
        pi_vu = ctx.projection_coherence(Xf, vu)
        eXu = ctx.embed_arrow(Xf.at(j), Xf.at(i), Xf.arrow(u))
        lifted = ctx.whisker_left(Xf, embed_c(HOST, Xf.at(j)), Ci, eXu, pi_v)
        assert hom.cat.compose(lifted, pi_u) == pi_vu
    for a, (u, v) in I.two_cells.items():
        i, j = I.one_cells[u]
        Ci = embed_c(HOST, Xf.at(i))
        hom = ctx.hom(Xf, Ci)
        eXa = ctx.embed_cell(Xf.at(j), Xf.at(i), Xf.cell(a))
        lifted = ctx.whisker_right(Xf, embed_c(HOST, Xf.at(j)), Ci,
                                   eXa, ctx.projection(Xf, j))
        got = hom.cat.compose(lifted, ctx.projection_coherence(Xf, u))
        assert got == ctx.projection_coherence(Xf, v)


def test_represent_arrow_projection_case(ctx, Xf):
    for i in Xf.index.objects:
        Y = embed_c(HOST, Xf.at(i))
        pi = ctx.projection(Xf, i)
        gi, r, rep = ctx.represent_arrow(Xf, Y, pi, "*")
        assert gi == i
        assert r == HOST.id1[Xf.at(i)]
        ctx.validate_arrow_representation(rep)


def test_represent_arrow_all_objects(ctx, Xf, Xg):
    hom = ctx.hom(Xf, Xg)
    for f in hom.cat.objects:
        for j in Xg.index.objects:
            i, r, rep = ctx.represent_arrow(Xf, Xg, f, j)
            ctx.validate_arrow_representation(rep)


def test_represent_cell_all_morphisms(ctx, Xf, Xg):
    hom = ctx.hom(Xf, Xg)
    for alpha in hom.cat.morphisms:
        for j in Xg.index.objects:
            rep = ctx.represent_cell(Xf, Xg, alpha, j)
            ctx.validate_cell_representation(rep)
            if hom.cat.is_iso(alpha):
                assert HOST.two_inverse(rep.theta) is not None


def test_represent_cell_identity_case(ctx, Xf):
    hom = ctx.hom(Xf, Xf)
    idx = ctx.identity(Xf)
    alpha = hom.cat.identity[idx]
    rep = ctx.represent_cell(Xf, Xf, alpha, "0")
    assert rep.phi == rep.psi


def test_compose_independent_of_bridge_representative(ctx, Xf, Xg):
    # every member of a coherence class yields the same bridged morphism
    hom_xy = ctx.hom(Xf, Xg)
    hom_yz = ctx.hom(Xg, Xg)
    hom_xz = ctx.hom(Xf, Xg)
    from twopro.shapes import Premorphism

    for g in hom_yz.cat.objects:
        gx, gxi = hom_yz.lim.obj_of[g]
        for f in hom_xy.cat.objects:
            f_data = hom_xy.lim.obj_of[f]
            for c in dualize(Xg.index).one_cells:
                k = dualize(Xg.index).one_tgt(c)
                nu = gxi[c]
                Lyz = hom_yz.colimits[k]
                results = set()
                for pm in Lyz.members[nu]:
                    results.add(ctx._bridge(hom_xy, hom_yz, hom_xz,
                                            f_data, k, nu, via=pm))
                assert len(results) == 1


def test_lemma1_concrete_instance(ctx, Xf):
    # a cross-slot morphism between projected composites
    B = embed_c(HOST, "B")
    hom = ctx.hom(Xf, B)
    r_obj = ctx.compose(Xf, embed_c(HOST, "B"), B,
                        ctx.embed_arrow("B", "B", "1B"),
                        ctx.projection(Xf, "0"))
    s_obj = ctx.compose(Xf, embed_c(HOST, "A"), B,
                        ctx.embed_arrow("A", "B", "g"),
                        ctx.projection(Xf, "1"))
    alphas = hom.cat.hom(r_obj, s_obj)
    assert len(alphas) == 1
    k, u, v, theta = ctx.lemma1_search(Xf, "B", "1B", "0", "g", "1", alphas[0])
    assert (k, u, v) == ("1", "u", "i1")
    assert theta == "s"


def test_lemma1_prefers_diagonal(ctx, Xf):
    B = embed_c(HOST, "B")
    hom = ctx.hom(Xf, B)
    r_obj = ctx.compose(Xf, embed_c(HOST, "A"), B,
                        ctx.embed_arrow("A", "B", "f"),
                        ctx.projection(Xf, "1"))
    s_obj = ctx.compose(Xf, embed_c(HOST, "A"), B,
                        ctx.embed_arrow("A", "B", "g"),
                        ctx.projection(Xf, "1"))
    alphas = hom.cat.hom(r_obj, s_obj)
    assert len(alphas) == 1
    k, u, v, theta = ctx.lemma1_search(Xf, "B", "f", "1", "g", "1", alphas[0])
    assert u == v


def test_lemma4_cases(ctx, Xf):
    # equal cells: the identity arrow works
    u = ctx.lemma4_search(Xf, "B", "1", "s", "s")
    assert u == Xf.index.id1["1"]


def test_lemma2_composes_representations(ctx, Xf, Xg):
    hom = ctx.hom(Xf, Xg)
    for alpha, (f, g) in sorted(hom.cat.morphisms.items()):
        for j in Xg.index.objects:
            _, _, rep_f = ctx.represent_arrow(Xf, Xg, f, j)
            _, _, rep_g = ctx.represent_arrow(Xf, Xg, g, j)
            rep = ctx.lemma2_search(Xf, Xg, alpha, rep_f, rep_g)
            ctx.validate_cell_representation(rep)


def test_lemma_searches_seeded_random(ctx, Xf, Xg):
    rng = random.Random(1729)
    hom = ctx.hom(Xf, Xg)
    morphisms = sorted(hom.cat.morphisms)
    for _ in range(50):
        alpha = rng.choice(morphisms)
        j = rng.choice(sorted(Xg.index.objects))
        rep = ctx.represent_cell(Xf, Xg, alpha, j)
        ctx.validate_cell_representation(rep)
        f, g = hom.cat.morphisms[alpha]
        _, _, rep_f = ctx.represent_arrow(Xf, Xg, f, j)
        _, _, rep_g = ctx.represent_arrow(Xf, Xg, g, j)
        rep2 = ctx.lemma2_search(Xf, Xg, alpha, rep_f, rep_g)
        ctx.validate_cell_representation(rep2)
        if rep_f.i == rep_g.i:
            # the diagonal preference applies
            hom_j = ctx.hom(Xf, embed_c(HOST, Xg.at(j)))
            pj_alpha = ctx.whisker_left(Xf, Xg, embed_c(HOST, Xg.at(j)),
                                        ctx.projection(Xg, j), alpha)
            phi_inv = hom_j.cat.inverse(rep_f.phi)
            aprime = hom_j.cat.compose_chain(rep_g.phi, pj_alpha, phi_inv)
            k, u, v, theta = ctx.lemma1_search(
                Xf, Xg.at(j), rep_f.r, rep_f.i, rep_g.r, rep_g.i, aprime)
            assert u == v

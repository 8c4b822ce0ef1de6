import pytest

from twopro.errors import ValidationFailure
from twopro.fincat import FinCat, discrete_cat, isomorphic_fincats
from twopro.fixtures import iso_host, poset01_two_cat
from twopro.kx import (
    ExtendedFunctor,
    ProDiagram,
    embedded_diagram,
    extension_report,
    hat_extension,
    hat_restriction_iso,
    kx_build,
    kx_filtered_verify,
    limit_remark_check,
    pro_limit,
    pro_map,
    single_diagram,
    tilde_pro_object,
)
from twopro.pro import ProContext, embed_c, make_pro
from twopro.transforms import TwoFunctor, representable, yoneda_l
from twopro.twocat import dualize, validate_two_category

HOST = validate_two_category(iso_host())


def pro_over_poset(host, arrow):
    I = poset01_two_cat()
    diagram = TwoFunctor(dualize(I), host,
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


def poset_j_diagram(ctx):
    """Index 0 <= 1 with embedded slices and the f transition."""
    J = poset01_two_cat()
    cA, cB = embed_c(HOST, "A"), embed_c(HOST, "B")
    obs = {"0": cB, "1": cA}
    on1 = {"i0": ctx.identity(cB), "i1": ctx.identity(cA),
           "u": ctx.embed_arrow("A", "B", "f")}
    homBB = ctx.hom(cB, cB)
    homAA = ctx.hom(cA, cA)
    homAB = ctx.hom(cA, cB)
    on2 = {"id2_i0": homBB.cat.identity[on1["i0"]],
           "id2_i1": homAA.cat.identity[on1["i1"]],
           "id2_u": homAB.cat.identity[on1["u"]]}
    return ProDiagram(HOST, J, obs, on1, on2).validate(ctx)


def test_single_diagram_validates(ctx, Xf):
    single_diagram(ctx, Xf).validate(ctx)
    single_diagram(ctx, embed_c(HOST, "A")).validate(ctx)


def test_embedded_diagram_validates(ctx, Xf):
    embedded_diagram(ctx, Xf).validate(ctx)


def test_limit_remark_hom_is_cone_category(ctx, Xf):
    for Z in (embed_c(HOST, "A"), embed_c(HOST, "B"), Xf):
        report = limit_remark_check(ctx, Z, Xf)
        assert report["objects_bijective"], report
        assert report["morphisms_bijective"], report


def test_kx_trivial_build(ctx):
    D = single_diagram(ctx, embed_c(HOST, "A"))
    kx = kx_build(ctx, D)
    assert len(kx.zero_cells) == 1
    assert len(kx.one_cells) == 1
    assert len(kx.two_cells) == 1
    assert kx_filtered_verify(kx).ok


def test_kx_terminal_over_poset_pro(ctx, Xf):
    # hand census: two slots, decorated arrows 1B, f, g, 1A, and the cells
    # carried by the invertible host cell
    D = single_diagram(ctx, Xf)
    kx = kx_build(ctx, D)
    assert len(kx.zero_cells) == 2
    assert len(kx.one_cells) == 4
    assert len(kx.two_cells) == 6
    assert kx_filtered_verify(kx).ok


def test_kx_poset_j_embedded(ctx):
    D = poset_j_diagram(ctx)
    kx = kx_build(ctx, D)
    assert len(kx.zero_cells) == 2
    assert len(kx.one_cells) == 4
    assert len(kx.two_cells) == 6
    assert kx_filtered_verify(kx).ok


def test_kx_corruption_detected(ctx):
    D = poset_j_diagram(ctx)
    kx = kx_build(ctx, D)
    # removing a non-identity 1-cell must break validation or filteredness
    victim = next(oid for oid, (a, r, phi) in sorted(kx.one_cells.items())
                  if a == "u")
    C = kx.category
    broken = type(C)(
        C.objects,
        {k: v for k, v in C.one_cells.items() if k != victim},
        {k: v for k, v in C.two_cells.items()
         if C.two_src(k) != victim and C.two_tgt(k) != victim},
        dict(C.id1),
        {k: v for k, v in C.id2.items() if k != victim},
        {k: v for k, v in C.vcomp.items()},
        {k: v for k, v in C.hcomp1.items()},
        {k: v for k, v in C.hcomp2.items()},
    )
    from twopro.errors import WorkbenchError

    with pytest.raises(WorkbenchError):
        validate_two_category(broken)


def test_tilde_restricts_to_original(ctx, Xf):
    D = single_diagram(ctx, Xf)
    kx = kx_build(ctx, D)
    tilde = tilde_pro_object(ctx, kx)
    # slots carry the original values
    for zid, (i, j) in kx.zero_cells.items():
        assert tilde.at(zid) == Xf.at(i)
    # the canonical inclusion (identity decorations) recovers the arrows
    for oid, (a, r, phi) in kx.one_cells.items():
        src_z, tgt_z = kx.category.one_cells[oid]
        assert tilde.arrow(oid) == r


def test_pro_limit_terminal_j(ctx, Xf):
    D = single_diagram(ctx, Xf)
    vertices = [embed_c(HOST, "A"), embed_c(HOST, "B"), Xf]
    kx, tilde, reports = pro_limit(ctx, D, vertices)
    for rep in reports:
        assert rep["objects_bijective"], rep
        assert rep["morphisms_bijective"], rep


def test_pro_limit_poset_j(ctx, Xf):
    D = poset_j_diagram(ctx)
    vertices = [embed_c(HOST, "A"), embed_c(HOST, "B"), Xf]
    kx, tilde, reports = pro_limit(ctx, D, vertices)
    for rep in reports:
        assert rep["objects_bijective"], rep
        assert rep["morphisms_bijective"], rep


def test_hat_extension_embedded_is_fiber(ctx):
    for A in HOST.objects:
        F = representable(HOST, A)
        for B in HOST.objects:
            hat_restriction_iso(ctx, F, B)


def test_hat_extension_agrees_with_pro_hom(ctx, Xf):
    F = representable(HOST, "A")
    lim, _ = hat_extension(ctx, F, Xf)
    hom = ctx.hom(embed_c(HOST, "A"), Xf)
    assert isomorphic_fincats(lim.cat, hom.cat) is not None


def test_hat_extension_constant(ctx, Xf):
    from twopro.fincat import terminal_cat
    from twopro.transforms import constant_cat_functor

    F = constant_cat_functor(HOST, discrete_cat(("p", "q")))
    lim, _ = hat_extension(ctx, F, Xf)
    assert isomorphic_fincats(lim.cat, discrete_cat(("p", "q"))) is not None


def test_hat_extension_cone_is_universal(ctx, Xf):
    from twopro.fincat import terminal_cat
    from twopro.shapes import universal_check_lim

    F = representable(HOST, "A")
    lim, comp = hat_extension(ctx, F, Xf)
    for A in (terminal_cat(), discrete_cat(("p", "q"))):
        report = universal_check_lim(comp, lim.cat, lim.cone, A)
        assert report["objects_bijective"] and report["morphisms_bijective"]


def test_pro_map_identity_and_embedding(ctx, Xf):
    from twopro.transforms import identity_two_functor

    F = identity_two_functor(HOST)
    Y = pro_map(F, Xf)
    assert Y.key() == Xf.key()
    cA = embed_c(HOST, "A")
    assert pro_map(F, cA).key() == cA.key()


def test_extension_theta_identity(ctx, Xf):
    from twopro.transforms import identity_pseudonat

    F = representable(HOST, "A")
    Fx = ExtendedFunctor.from_extension(ctx, F, Xf)
    theta = identity_pseudonat(F)
    report = extension_report(ctx, Fx, Fx, theta, Xf)
    assert report["exists"] and report["unique"]
    # the unique extension of the identity is the identity
    from twopro.fincat import identity_functor

    assert report["extension"] == identity_functor(Fx.at_X)


def test_extension_nontrivial_theta(ctx, Xf):
    F = representable(HOST, "B")
    G = representable(HOST, "A")
    theta = yoneda_l(HOST, G, "B", "f")     # precompose with f
    Fx = ExtendedFunctor.from_extension(ctx, F, Xf)
    Gx = ExtendedFunctor.from_extension(ctx, G, Xf)
    report = extension_report(ctx, Fx, Gx, theta, Xf)
    assert report["exists"] and report["unique"]


def test_extension_detects_broken_limit_data(ctx, Xf):
    from twopro.transforms import identity_pseudonat

    F = representable(HOST, "A")
    G = F
    theta = identity_pseudonat(F)
    Fx = ExtendedFunctor.from_extension(ctx, F, Xf)
    Gx = ExtendedFunctor.from_extension(ctx, G, Xf)
    # discard the morphisms of the chosen limit value: the cone survives
    # objectwise but the factorization cannot
    skeleton = discrete_cat(tuple(Gx.at_X.objects))
    from twopro.fincat import CatFunctor
    from twopro.shapes import LimCone

    proj = {m: CatFunctor(skeleton, P.target,
                          dict(P.ob),
                          {skeleton.identity[o]: P.target.identity[P.ob[o]]
                           for o in skeleton.objects})
            for m, P in Gx.cone.proj.items()}
    broken = ExtendedFunctor(G, skeleton,
                             LimCone(Gx.cone.diagram, skeleton, proj,
                                     {e: None for e in Gx.cone.coh}))
    coh = {}
    from twopro.fincat import CatNat, compose_functors

    for e, n in Gx.cone.coh.items():
        m = Gx.cone.diagram.source.one_src(e)
        coh[e] = CatNat(compose_functors(Gx.cone.diagram.on1[e], proj[m]),
                        proj[Gx.cone.diagram.source.one_tgt(e)],
                        dict(n.comp))
    broken.cone.coh.update(coh)
    report = extension_report(ctx, Fx, broken, theta, Xf)
    assert not (report["exists"] and report["unique"])

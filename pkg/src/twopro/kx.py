"""The index construction for pseudolimits of pro-object diagrams, its
filteredness certificate, the limit comparison, and the category-valued
extension of a functor along the embedding.

A diagram of pro-objects assigns pro-objects to index objects and hom
objects/morphisms to index 1-/2-cells.  The auxiliary index has pairs as
0-cells, representation-decorated arrows as 1-cells and decorated cells
as 2-cells; the pseudolimit of the diagram is the pro-object reading off
the decorations, and the comparison functor from cones to hom objects is
checked for bijectivity by exhaustive enumeration.
"""

from dataclasses import dataclass, field

from .errors import (
    CoherenceViolation,
    EnumerationBudgetExceeded,
    InvalidDiagram,
    NotTwoFiltered,
    ValidationFailure,
)
from .fincat import CatFunctor, compose_functors, functor_bijective, whisker_pre, whisker_post
from .pro import ProContext, ProObject, embed_c, make_pro
from .shapes import LimCone, check_two_filtered, pseudolim_cat
from .transforms import CatValuedFunctor, TwoFunctor, compose_two_functors
from .twocat import Fin2Cat, dualize, validate_two_category
from .util import Budget, mkid


@dataclass
class ProDiagram:
    """A contravariant diagram of pro-objects: index 1-cells go to hom
    objects, index 2-cells to hom morphisms, strictly functorially."""

    host: Fin2Cat
    index: Fin2Cat                     # 2-filtered
    obs: dict                          # j -> ProObject
    on1: dict                          # a: j -> j'  ->  object of hom(obs[j'], obs[j])
    on2: dict                          # 2-cell of the index -> hom morphism

    def validate(self, ctx):
        res = check_two_filtered(self.index)
        if not res.ok:
            raise NotTwoFiltered(res.axiom, res.counterexample)
        J = self.index
        for a, (j, j2) in sorted(J.one_cells.items()):
            hom = ctx.hom(self.obs[j2], self.obs[j])
            if self.on1[a] not in hom.cat.objects:
                raise InvalidDiagram(f"arrow for {a!r} is not a hom object")
        for j in sorted(J.objects):
            if self.on1[J.id1[j]] != ctx.identity(self.obs[j]):
                raise InvalidDiagram(f"identity arrow at {j!r} is wrong")
        for (b, a), ba in sorted(J.hcomp1.items()):
            j = J.one_src(a)
            jm = J.one_tgt(a)
            j2 = J.one_tgt(b)
            got = ctx.compose(self.obs[j2], self.obs[jm], self.obs[j],
                              self.on1[a], self.on1[b])
            if got != self.on1[ba]:
                raise InvalidDiagram(f"composite for ({b!r}, {a!r}) is wrong")
        for al, (a, b) in sorted(J.two_cells.items()):
            j, j2 = J.one_cells[a]
            hom = ctx.hom(self.obs[j2], self.obs[j])
            if hom.cat.morphisms.get(self.on2[al]) != (self.on1[a], self.on1[b]):
                raise InvalidDiagram(f"cell for {al!r} has wrong boundary")
        for a in sorted(J.one_cells):
            j, j2 = J.one_cells[a]
            hom = ctx.hom(self.obs[j2], self.obs[j])
            if self.on2[J.id2[a]] != hom.cat.identity[self.on1[a]]:
                raise InvalidDiagram(f"identity cell at {a!r} is wrong")
        for (b, a), r in sorted(J.vcomp.items()):
            al = J.two_src(a)
            j, j2 = J.one_cells[al]
            hom = ctx.hom(self.obs[j2], self.obs[j])
            if hom.cat.compose(self.on2[b], self.on2[a]) != self.on2[r]:
                raise InvalidDiagram(f"vertical composite for ({b!r}, {a!r}) is wrong")
        return self


def embedded_diagram(ctx, X):
    """The diagram of embedded slices of one pro-object over its own
    index."""
    I = X.index
    obs = {i: embed_c(ctx.host, X.at(i)) for i in I.objects}
    on1 = {}
    for u, (i, j) in I.one_cells.items():
        on1[u] = ctx.embed_arrow(X.at(j), X.at(i), X.arrow(u))
    on2 = {}
    for a, (u, v) in I.two_cells.items():
        i = I.one_src(u)
        j = I.one_tgt(u)
        on2[a] = ctx.embed_cell(X.at(j), X.at(i), X.cell(a))
    return ProDiagram(ctx.host, I, obs, on1, on2)


def single_diagram(ctx, X):
    """One pro-object as a diagram over the terminal index."""
    from .pro import terminal_index

    I = terminal_index()
    return ProDiagram(ctx.host, I, {"*": X},
                      {"id": ctx.identity(X)},
                      {"ii": ctx.hom(X, X).cat.identity[ctx.identity(X)]})


# ---------------------------------------------------------------------------
# pseudocones over a pro-object diagram


def enumerate_pro_cones(ctx, D, Z, budget=None):
    """All pseudocones of the diagram with vertex Z, as families of hom
    objects with invertible coherence morphisms."""
    budget = budget or Budget()
    J = D.index
    objs = sorted(J.objects)
    ident = {J.id1[j] for j in J.objects}
    non_id = sorted(a for a in J.one_cells if a not in ident)
    pools = {j: sorted(ctx.hom(Z, D.obs[j]).cat.objects) for j in objs}
    cones = []

    def coherence_target(comps, a):
        j, j2 = J.one_cells[a]
        return ctx.compose(Z, D.obs[j2], D.obs[j], D.on1[a], comps[j2])

    def full_cells(comps, cells):
        out = dict(cells)
        for j in objs:
            hom = ctx.hom(Z, D.obs[j])
            out[J.id1[j]] = hom.cat.identity[comps[j]]
        return out

    def cone_ok(comps, cells):
        for (b, a), ba in J.hcomp1.items():
            j = J.one_src(a)
            jm = J.one_tgt(a)
            hom = ctx.hom(Z, D.obs[j])
            lifted = ctx.whisker_left(Z, D.obs[jm], D.obs[j], D.on1[a], cells[b])
            if hom.cat.compose(lifted, cells[a]) != cells[ba]:
                return False
        for al, (a, b) in J.two_cells.items():
            j, jm = J.one_cells[a]
            hom = ctx.hom(Z, D.obs[j])
            lifted = ctx.whisker_right(Z, D.obs[jm], D.obs[j],
                                       D.on2[al], comps[jm])
            if hom.cat.compose(lifted, cells[a]) != cells[b]:
                return False
        return True

    def fill_cells(comps, k, cells):
        if k == len(non_id):
            budget.charge()
            full = full_cells(comps, cells)
            if cone_ok(comps, full):
                cones.append((dict(comps), full))
            return
        a = non_id[k]
        j = J.one_src(a)
        hom = ctx.hom(Z, D.obs[j])
        tgt = coherence_target(comps, a)
        for m in hom.cat.hom(comps[j], tgt):
            if not hom.cat.is_iso(m):
                continue
            cells[a] = m
            fill_cells(comps, k + 1, cells)
            del cells[a]

    def fill_comps(k, comps):
        if k == len(objs):
            fill_cells(comps, 0, {})
            return
        for h in pools[objs[k]]:
            comps[objs[k]] = h
            fill_comps(k + 1, comps)
            del comps[objs[k]]

    fill_comps(0, {})
    return cones


def pro_cone_morphisms(ctx, D, Z, cone1, cone2, budget=None):
    """All families of hom morphisms satisfying the cone-morphism law."""
    budget = budget or Budget()
    J = D.index
    objs = sorted(J.objects)
    comps1, cells1 = cone1
    comps2, cells2 = cone2
    pools = {j: ctx.hom(Z, D.obs[j]).cat.hom(comps1[j], comps2[j]) for j in objs}
    found = []

    def ok(family):
        for a, (j, jm) in J.one_cells.items():
            hom = ctx.hom(Z, D.obs[j])
            lhs = hom.cat.compose(cells2[a], family[j])
            lifted = ctx.whisker_left(Z, D.obs[jm], D.obs[j],
                                      D.on1[a], family[jm])
            rhs = hom.cat.compose(lifted, cells1[a])
            if lhs != rhs:
                return False
        return True

    def extend(k, family):
        if k == len(objs):
            budget.charge()
            if ok(family):
                found.append(dict(family))
            return
        for m in pools[objs[k]]:
            family[objs[k]] = m
            extend(k + 1, family)
            del family[objs[k]]

    extend(0, {})
    return found


def cone_comparison_report(ctx, D, Z, target, p_object, p_morphism, budget=None):
    """Compare the pseudocone category with a computed hom category along
    explicit object/morphism maps; report bijectivity."""
    budget = budget or Budget()
    cones = enumerate_pro_cones(ctx, D, Z, budget)
    report = {"objects_bijective": True, "morphisms_bijective": True,
              "counts": {"cones": len(cones),
                         "hom_objects": len(target.cat.objects)},
              "witness": None}
    image = {}
    for n, cone in enumerate(cones):
        oid = p_object(cone)
        if oid in image.values():
            report["objects_bijective"] = False
            report["witness"] = {"part": "objects", "reason": "not injective"}
            return report
        image[n] = oid
    if sorted(image.values()) != sorted(target.cat.objects):
        report["objects_bijective"] = False
        report["witness"] = {"part": "objects", "reason": "not surjective"}
        return report
    mapped = 0
    for n1, c1 in enumerate(cones):
        for n2, c2 in enumerate(cones):
            fams = pro_cone_morphisms(ctx, D, Z, c1, c2, budget)
            want = target.cat.hom(image[n1], image[n2])
            got = sorted(p_morphism(c1, c2, fam) for fam in fams)
            if got != sorted(want) or len(set(got)) != len(fams):
                report["morphisms_bijective"] = False
                report["witness"] = {"part": "morphisms",
                                     "pair": (image[n1], image[n2]),
                                     "got": got, "want": sorted(want)}
                return report
            mapped += len(fams)
    report["counts"]["cone_morphisms"] = mapped
    report["counts"]["hom_morphisms"] = len(target.cat.morphisms)
    return report


def limit_remark_check(ctx, Z, X, budget=None):
    """hom(Z, X) against pseudocones over the embedded slice diagram."""
    D = embedded_diagram(ctx, X)
    hom = ctx.hom(Z, X)

    def p_object(cone):
        comps, cells = cone
        x, xi = {}, {}
        for i in X.index.objects:
            slot = ctx.hom(Z, D.obs[i])
            x[i] = slot.components(comps[i])[0]["*"]
        for u, (i, j) in X.index.one_cells.items():
            slot = ctx.hom(Z, D.obs[i])
            cls = slot.mor_component(cells[u], "*")
            inv = slot.colimits["*"].cat.inverse(cls)
            if inv is None:
                raise ValidationFailure("cone coherence is not invertible")
            xi[u] = inv
        return hom.object_id(x, xi)

    def p_morphism(c1, c2, fam):
        comps = {}
        for i in X.index.objects:
            slot = ctx.hom(Z, D.obs[i])
            comps[i] = slot.mor_component(fam[i], "*")
        return hom.morphism_id(p_object(c1), p_object(c2), comps)

    return cone_comparison_report(ctx, D, Z, hom, p_object, p_morphism, budget)


# ---------------------------------------------------------------------------
# the decorated index construction


@dataclass
class KxResult:
    category: Fin2Cat
    zero_cells: dict                   # id -> (i, j)
    one_cells: dict                    # id -> (a, r, phi)
    two_cells: dict                    # id -> (alpha, theta)
    diagram: ProDiagram
    tilde: ProObject = None


def kx_build(ctx, D, budget=None, max_cells=20000):
    """Enumerate decorated representation 1- and 2-cells over all slot
    pairs and assemble the auxiliary index 2-category."""
    budget = budget or Budget()
    J = D.index
    zero, zmap = {}, {}
    for j in sorted(J.objects):
        for i in sorted(D.obs[j].index.objects):
            zid = mkid("k0", i, j)
            zero[zid] = (i, j)
            zmap[(i, j)] = zid
    one, omap = {}, {}
    for a, (j, j2) in sorted(J.one_cells.items()):
        Xj, Xj2 = D.obs[j], D.obs[j2]
        for i in sorted(Xj.index.objects):
            pi = ctx.projection(Xj, i)
            Ci = embed_c(ctx.host, Xj.at(i))
            hom = ctx.hom(Xj2, Ci)
            src_obj = ctx.compose(Xj2, Xj, Ci, pi, D.on1[a])
            for i2 in sorted(Xj2.index.objects):
                pi2 = ctx.projection(Xj2, i2)
                for r in ctx.host.hom_1cells(Xj2.at(i2), Xj.at(i)):
                    er = ctx.embed_arrow(Xj2.at(i2), Xj.at(i), r)
                    tgt_obj = ctx.compose(Xj2, embed_c(ctx.host, Xj2.at(i2)),
                                          Ci, er, pi2)
                    for phi in hom.cat.hom(src_obj, tgt_obj):
                        if not hom.cat.is_iso(phi):
                            continue
                        oid = mkid("k1", a, r, phi)
                        one[oid] = {"a": a, "r": r, "phi": phi,
                                    "src": zmap[(i, j)], "tgt": zmap[(i2, j2)]}
                        omap[(a, r, phi)] = oid
                        if len(one) > max_cells:
                            raise EnumerationBudgetExceeded(max_cells)
    two, tmap = {}, {}
    ordered_one = sorted(one)
    for c1 in ordered_one:
        d1 = one[c1]
        for c2 in ordered_one:
            d2 = one[c2]
            if d1["src"] != d2["src"] or d1["tgt"] != d2["tgt"]:
                continue
            a, b = d1["a"], d2["a"]
            i, j = zero[d1["src"]]
            i2, j2 = zero[d1["tgt"]]
            Xj, Xj2 = D.obs[j], D.obs[j2]
            Ci = embed_c(ctx.host, Xj.at(i))
            hom = ctx.hom(Xj2, Ci)
            pi2 = ctx.projection(Xj2, i2)
            for alpha in J.two_cells_between(a, b):
                pj_alpha = ctx.whisker_left(Xj2, Xj, Ci,
                                            ctx.projection(Xj, i), D.on2[alpha])
                rhs = hom.cat.compose(d2["phi"], pj_alpha)
                for theta in ctx.host.two_cells_between(d1["r"], d2["r"]):
                    etheta = ctx.embed_cell(Xj2.at(i2), Xj.at(i), theta)
                    theta_pi = ctx.whisker_right(
                        Xj2, embed_c(ctx.host, Xj2.at(i2)), Ci, etheta, pi2)
                    if hom.cat.compose(theta_pi, d1["phi"]) != rhs:
                        continue
                    tid = mkid("k2", c1, c2, alpha, theta)
                    two[tid] = {"alpha": alpha, "theta": theta,
                                "src": c1, "tgt": c2}
                    tmap[(c1, c2, alpha, theta)] = tid
                    if len(two) > max_cells:
                        raise EnumerationBudgetExceeded(max_cells)
    # identity cells
    id1 = {}
    for zid, (i, j) in zero.items():
        key = (J.id1[j], ctx.host.id1[D.obs[j].at(i)],
               ctx.hom(D.obs[j], embed_c(ctx.host, D.obs[j].at(i)))
               .cat.identity[ctx.projection(D.obs[j], i)])
        if key not in omap:
            raise ValidationFailure(f"identity 1-cell missing at {zid!r}")
        id1[zid] = omap[key]
    id2 = {}
    for oid, d in one.items():
        i, j = zero[d["src"]]
        key = (oid, oid, J.id2[d["a"]], ctx.host.id2[d["r"]])
        if key not in tmap:
            raise ValidationFailure(f"identity 2-cell missing at {oid!r}")
        id2[oid] = tmap[key]
    # composition of decorated arrows
    hcomp1 = {}
    for c2 in ordered_one:
        d2 = one[c2]
        for c1 in ordered_one:
            d1 = one[c1]
            if d2["src"] != d1["tgt"]:
                continue
            hcomp1[(c2, c1)] = _compose_decorated(ctx, D, zero, one, omap, c2, c1)
    # vertical composition of decorated cells
    vcomp = {}
    for t2, e2 in two.items():
        for t1, e1 in two.items():
            if e2["src"] != e1["tgt"]:
                continue
            alpha = J.vcomp[(e2["alpha"], e1["alpha"])]
            theta = ctx.host.vcomp[(e2["theta"], e1["theta"])]
            key = (e1["src"], e2["tgt"], alpha, theta)
            if key not in tmap:
                raise ValidationFailure("vertical composite missing")
            vcomp[(t2, t1)] = tmap[key]
    # horizontal composition of decorated cells
    hcomp2 = {}
    for t2, e2 in two.items():
        for t1, e1 in two.items():
            if one[e2["src"]]["src"] != one[e1["src"]]["tgt"]:
                continue
            alpha = J.hcomp2[(e2["alpha"], e1["alpha"])]
            theta = ctx.host.hcomp2[(e1["theta"], e2["theta"])]
            src = hcomp1[(e2["src"], e1["src"])]
            tgt = hcomp1[(e2["tgt"], e1["tgt"])]
            key = (src, tgt, alpha, theta)
            if key not in tmap:
                raise ValidationFailure("horizontal composite missing")
            hcomp2[(t2, t1)] = tmap[key]
    K = Fin2Cat(tuple(sorted(zero)),
                {oid: (d["src"], d["tgt"]) for oid, d in one.items()},
                {tid: (e["src"], e["tgt"]) for tid, e in two.items()},
                id1, id2, vcomp, hcomp1, hcomp2)
    try:
        validate_two_category(K)
    except Exception as exc:
        raise ValidationFailure(f"assembled index failed validation: {exc}") from exc
    return KxResult(K, zero, {oid: (d["a"], d["r"], d["phi"])
                              for oid, d in one.items()},
                    {tid: (e["alpha"], e["theta"]) for tid, e in two.items()},
                    D)


def _compose_decorated(ctx, D, zero, one, omap, c2, c1):
    """(a', r', phi') after (a, r, phi): compose the labels and paste the
    witnesses, then locate the resulting decorated arrow."""
    d1, d2 = one[c1], one[c2]
    J = D.index
    i, j = zero[d1["src"]]
    i1, j1 = zero[d1["tgt"]]
    i2, j2 = zero[d2["tgt"]]
    Xj, Xj1, Xj2 = D.obs[j], D.obs[j1], D.obs[j2]
    a = J.hcomp1[(d2["a"], d1["a"])]
    r = ctx.host.hcomp1[(d1["r"], d2["r"])]
    Ci = embed_c(ctx.host, Xj.at(i))
    hom = ctx.hom(Xj2, Ci)
    phi_whisk = ctx.whisker_right(Xj2, Xj1, Ci, d1["phi"], D.on1[d2["a"]])
    er1 = ctx.embed_arrow(Xj1.at(i1), Xj.at(i), d1["r"])
    r_phi2 = ctx.whisker_left(Xj2, embed_c(ctx.host, Xj1.at(i1)), Ci,
                              er1, d2["phi"])
    phi = hom.cat.compose(r_phi2, phi_whisk)
    key = (a, r, phi)
    if key not in omap:
        raise ValidationFailure("decorated composite missing from enumeration")
    return omap[key]


def kx_filtered_verify(K):
    """The assembled index must always be 2-filtered."""
    return check_two_filtered(K.category)


def tilde_pro_object(ctx, kx):
    """The pro-object over the assembled index reading off decorations."""
    K = kx.category
    ob = {zid: kx.diagram.obs[j].at(i) for zid, (i, j) in kx.zero_cells.items()}
    on1 = {oid: r for oid, (a, r, phi) in kx.one_cells.items()}
    on2 = {tid: th for tid, (al, th) in kx.two_cells.items()}
    diagram = TwoFunctor(dualize(K), ctx.host, ob, on1, on2)
    kx.tilde = make_pro(K, diagram, ctx.host)
    return kx.tilde


def pro_limit(ctx, D, vertices, budget=None, max_cells=20000):
    """Build the decorated index and its pro-object, then check for each
    test vertex that cones over the diagram correspond bijectively to hom
    objects into it."""
    budget = budget or Budget()
    kx = kx_build(ctx, D, budget, max_cells)
    tilde = tilde_pro_object(ctx, kx)
    reports = []
    for Z in vertices:
        hom = ctx.hom(Z, tilde)

        def p_object(cone):
            comps, cells = cone
            x, xi = {}, {}
            for zid, (i, j) in kx.zero_cells.items():
                Xj = D.obs[j]
                slot = ctx.hom(Z, embed_c(ctx.host, Xj.at(i)))
                composite = ctx.compose(Z, Xj, embed_c(ctx.host, Xj.at(i)),
                                        ctx.projection(Xj, i), comps[j])
                x[zid] = slot.components(composite)[0]["*"]
            for oid, (a, r, phi) in kx.one_cells.items():
                src_z, tgt_z = kx.category.one_cells[oid]
                i, j = kx.zero_cells[src_z]
                i2, j2 = kx.zero_cells[tgt_z]
                Xj, Xj2 = D.obs[j], D.obs[j2]
                Ci = embed_c(ctx.host, Xj.at(i))
                slot = ctx.hom(Z, Ci)
                pi_ha = ctx.whisker_left(Z, Xj, Ci,
                                         ctx.projection(Xj, i), cells[a])
                phi_h = ctx.whisker_right(Z, Xj2, Ci, phi, comps[j2])
                h_cell = slot.cat.compose(phi_h, pi_ha)
                cls = slot.mor_component(h_cell, "*")
                inv = slot.colimits["*"].cat.inverse(cls)
                if inv is None:
                    raise ValidationFailure("comparison cell is not invertible")
                xi[oid] = inv
            return hom.object_id(x, xi)

        def p_morphism(c1, c2, fam):
            comps = {}
            for zid, (i, j) in kx.zero_cells.items():
                Xj = D.obs[j]
                Ci = embed_c(ctx.host, Xj.at(i))
                slot = ctx.hom(Z, Ci)
                lifted = ctx.whisker_left(Z, Xj, Ci,
                                          ctx.projection(Xj, i), fam[j])
                comps[zid] = slot.mor_component(lifted, "*")
            return hom.morphism_id(p_object(c1), p_object(c2), comps)

        reports.append(cone_comparison_report(ctx, D, Z, hom,
                                              p_object, p_morphism, budget))
    return kx, tilde, reports


# ---------------------------------------------------------------------------
# category-valued extension along the embedding


def hat_extension(ctx, F, X, budget=None):
    """The pseudolimit of the composite of a category-valued functor with
    a pro-object's diagram, with its limit cone."""
    budget = budget or Budget()
    Id = dualize(X.index)
    comp = CatValuedFunctor(
        Id,
        {i: F.fiber(X.at(i)) for i in Id.objects},
        {u: F.on1[X.arrow(u)] for u in Id.one_cells},
        {a: F.on2[X.cell(a)] for a in Id.two_cells},
    ).validate()
    return pseudolim_cat(comp, budget), comp


def hat_restriction_iso(ctx, F, A, budget=None):
    """For an embedded object the extension collapses to the fiber: the
    unwrapping functor, checked bijective."""
    lim, _ = hat_extension(ctx, F, embed_c(ctx.host, A), budget)
    FA = F.fiber(A)
    un = CatFunctor(lim.cat, FA,
                    {oid: lim.obj_of[oid][0]["*"] for oid in lim.cat.objects},
                    {mid: lim.mor_of[mid]["*"] for mid in lim.cat.morphisms})
    un.validate()
    ok, witness = functor_bijective(un)
    if not ok:
        raise ValidationFailure(f"extension of an embedded object is not the fiber: {witness}")
    return un


def pro_map(F, X):
    """Transport a pro-object along a strict functor of hosts."""
    return make_pro(X.index, compose_two_functors(F, X.diagram), F.target)


# ---------------------------------------------------------------------------
# the fully-faithfulness mechanism at a limit object


@dataclass
class ExtendedFunctor:
    """A category-valued functor together with chosen limit data at one
    pro-object: the value category and its cone onto the composite."""

    base: CatValuedFunctor
    at_X: object                     # FinCat
    cone: LimCone

    @staticmethod
    def from_extension(ctx, F, X, budget=None):
        lim, comp = hat_extension(ctx, F, X, budget)
        return ExtendedFunctor(F, lim.cat, lim.cone)


def extension_report(ctx, Fx, Gx, theta, X, budget=None):
    """Search for functors between the chosen limit values commuting with
    the projected components of theta (including coherence cells); report
    existence and uniqueness."""
    from .fincat import all_functors

    budget = budget or Budget()
    Id = dualize(X.index)
    want_comp = {}
    for m in Id.objects:
        want_comp[m] = compose_functors(theta.comp[X.at(m)], Fx.cone.proj[m])
    want_coh = {}
    for e, (m, m2) in Id.one_cells.items():
        want_coh[e] = whisker_post(theta.comp[X.at(m2)], Fx.cone.coh[e])
    matches = []
    for h in all_functors(Fx.at_X, Gx.at_X, budget):
        if any(compose_functors(Gx.cone.proj[m], h) != want_comp[m]
               for m in Id.objects):
            continue
        if any(whisker_pre(Gx.cone.coh[e], h).comp != want_coh[e].comp
               for e in Id.one_cells):
            continue
        matches.append(h)
    return {"exists": bool(matches), "unique": len(matches) == 1,
            "count": len(matches),
            "extension": matches[0] if matches else None}

"""2-pro-objects over a tabulated host and their computed hom categories.

A pro-object is a diagram over a 2-filtered index, stored contravariantly
(as a functor out of the dualized index).  Hom categories are computed as
a limit over the target index of filtered colimits of host hom categories,
and every whisker or pasting between pro-cells is evaluated inside those
computed categories through representative premorphisms; nothing is ever
manipulated symbolically.
"""

from dataclasses import dataclass, field

from .errors import (
    InvalidDiagram,
    NotTwoFiltered,
    SearchExhausted,
    ValidationFailure,
)
from .fincat import CatFunctor, CatNat, FinCat
from .shapes import (
    LLColimit,
    check_two_filtered,
    ll_transport_functor,
    pseudocolim_ll,
    pseudolim_cat,
)
from .transforms import CatValuedFunctor, TwoFunctor
from .twocat import Fin2Cat, dualize, hom_category
from .util import Budget, mkid


def terminal_index():
    return Fin2Cat(("*",), {"id": ("*", "*")}, {"ii": ("id", "id")},
                   {"*": "id"}, {"id": "ii"},
                   {("ii", "ii"): "ii"}, {("id", "id"): "id"}, {("ii", "ii"): "ii"})


@dataclass
class ProObject:
    """A contravariant diagram over a validated 2-filtered index."""

    host: Fin2Cat
    index: Fin2Cat
    diagram: TwoFunctor        # dualize(index) -> host
    filter_check: object = None

    def at(self, i):
        return self.diagram.ob[i]

    def arrow(self, u):
        """The host 1-cell X_u : X_j -> X_i for an index 1-cell u: i -> j."""
        return self.diagram.on1[u]

    def cell(self, a):
        return self.diagram.on2[a]

    def key(self):
        return (self.index.key(), self.diagram.key())


def make_pro(index, diagram, host=None):
    """Validate and package a pro-object; the index must be 2-filtered and
    the diagram a strict functor out of its dual."""
    host = host or diagram.target
    res = check_two_filtered(index)
    if not res.ok:
        raise NotTwoFiltered(res.axiom, res.counterexample)
    if not diagram.source.same_tables(dualize(index)):
        raise InvalidDiagram("diagram is not indexed by the dual of the index")
    diagram.validate()
    return ProObject(host, index, diagram, res)


def embed_c(host, A):
    """The pro-object with singleton index at a host object."""
    idx = terminal_index()
    diagram = TwoFunctor(dualize(idx), host,
                         {"*": A},
                         {"id": host.id1[A]},
                         {"ii": host.id2[host.id1[A]]})
    return make_pro(idx, diagram, host)


@dataclass
class ProHomCat:
    """The computed hom category between two pro-objects, with pointers
    from every object and morphism back to representative data."""

    X: ProObject
    Y: ProObject
    cat: FinCat
    lim: object                       # LimResult over dualize(Y.index)
    colimits: dict                    # j -> LLColimit of i |-> C(X_i, Y_j)
    diagram: CatValuedFunctor         # over dualize(Y.index)
    obj_ids: dict = field(default_factory=dict)
    mor_ids: dict = field(default_factory=dict)

    def __post_init__(self):
        for oid, (x, xi) in self.lim.obj_of.items():
            self.obj_ids[self._okey(x, xi)] = oid
        for mid, comps in self.lim.mor_of.items():
            s, t = self.cat.morphisms[mid]
            self.mor_ids[(s, t, tuple(sorted(comps.items())))] = mid

    @staticmethod
    def _okey(x, xi):
        return (tuple(sorted(x.items())), tuple(sorted(xi.items())))

    def components(self, oid):
        return self.lim.obj_of[oid]

    def component_pair(self, oid, j):
        """The (host 1-cell, source index object) pair at target index j."""
        x, _ = self.lim.obj_of[oid]
        return self.colimits[j].obj_of[x[j]]

    def mor_component(self, mid, j):
        return self.lim.mor_of[mid][j]

    def object_id(self, x, xi):
        key = self._okey(x, xi)
        if key not in self.obj_ids:
            raise ValidationFailure("assembled family is not a hom object")
        return self.obj_ids[key]

    def morphism_id(self, src, tgt, comps):
        key = (src, tgt, tuple(sorted(comps.items())))
        if key not in self.mor_ids:
            raise ValidationFailure("assembled family is not a hom morphism")
        return self.mor_ids[key]


class ProContext:
    """Computes and caches hom categories, composition, whiskers,
    projections and representative searches for a family of pro-objects
    over one host."""

    def __init__(self, host, budget=None):
        self.host = host
        self.budget = budget or Budget()
        self._hom_cache = {}
        self._embed_cache = {}

    # -- hom computation ----------------------------------------------------

    def _precompose_diagram(self, X, Yobj):
        """The category-valued diagram i |-> C(X_i, Yobj) over X.index."""
        C = self.host
        I = X.index
        fibers = {i: hom_category(C, X.at(i), Yobj) for i in I.objects}
        on1 = {}
        for u, (i, i2) in I.one_cells.items():
            Xu = X.arrow(u)
            on1[u] = CatFunctor(
                fibers[i], fibers[i2],
                {h: C.hcomp1[(h, Xu)] for h in fibers[i].objects},
                {b: C.hcomp2[(b, C.id2[Xu])] for b in fibers[i].morphisms})
        on2 = {}
        for a, (u, v) in I.two_cells.items():
            i = I.one_src(u)
            Xa = X.cell(a)
            on2[a] = CatNat(on1[u], on1[v],
                            {h: C.hcomp2[(C.id2[h], Xa)] for h in fibers[i].objects})
        return CatValuedFunctor(I, fibers, on1, on2)

    def _post_functor(self, Lsrc, Ltgt, t):
        """Transport along post-composition with a host 1-cell t between
        the colimit categories of two precomposition diagrams."""
        C = self.host
        comps = {}
        for i in Lsrc.diagram.source.objects:
            src = Lsrc.diagram.fiber(i)
            tgt = Ltgt.diagram.fiber(i)
            comps[i] = CatFunctor(src, tgt,
                                  {h: C.hcomp1[(t, h)] for h in src.objects},
                                  {b: C.hcomp2[(C.id2[t], b)] for b in src.morphisms})
        return ll_transport_functor(Lsrc, Ltgt, comps, validate=False)

    def hom(self, X, Y):
        """The hom category: a limit over the target index of filtered
        colimits of host hom categories."""
        key = (X.key(), Y.key())
        if key in self._hom_cache:
            return self._hom_cache[key]
        J = Y.index
        colimits = {j: pseudocolim_ll(self._precompose_diagram(X, Y.at(j)),
                                      self.budget, X.filter_check)
                    for j in sorted(J.objects)}
        Jd = dualize(J)
        on1, on2 = {}, {}
        for a in Jd.one_cells:
            jsrc, jtgt = Jd.one_cells[a]
            on1[a] = self._post_functor(colimits[jsrc], colimits[jtgt], Y.arrow(a))
        for al, (a, b) in Jd.two_cells.items():
            jsrc = Jd.one_src(a)
            jtgt = Jd.one_tgt(a)
            Ya = Y.cell(al)
            comp = {}
            for oid, (s, i) in colimits[jsrc].obj_of.items():
                comp[oid] = colimits[jtgt].fiber_mor_class(
                    i, self.host.hcomp2[(Ya, self.host.id2[s])])
            on2[al] = CatNat(on1[a], on1[b], comp)
        K = CatValuedFunctor(Jd, {j: colimits[j].cat for j in Jd.objects}, on1, on2)
        K.validate()
        lim = pseudolim_cat(K, self.budget)
        out = ProHomCat(X, Y, lim.cat, lim, colimits, K)
        self._hom_cache[key] = out
        return out

    # -- embedding ------------------------------------------------------

    def embed_arrow(self, A, B, r):
        """The hom object of hom(c A, c B) carried by a host 1-cell."""
        X, Y = embed_c(self.host, A), embed_c(self.host, B)
        hom = self.hom(X, Y)
        L = hom.colimits["*"]
        x = {"*": L.obj_id(r, "*")}
        xi = {"id": L.cat.identity[x["*"]]}
        return hom.object_id(x, xi)

    def embed_cell(self, A, B, th):
        """The hom morphism of hom(c A, c B) carried by a host 2-cell."""
        X, Y = embed_c(self.host, A), embed_c(self.host, B)
        hom = self.hom(X, Y)
        L = hom.colimits["*"]
        f, g = self.host.two_cells[th]
        src = hom.object_id({"*": L.obj_id(f, "*")},
                            {"id": L.cat.identity[L.obj_id(f, "*")]})
        tgt = hom.object_id({"*": L.obj_id(g, "*")},
                            {"id": L.cat.identity[L.obj_id(g, "*")]})
        return hom.morphism_id(src, tgt, {"*": L.fiber_mor_class("*", th)})

    def embedding_iso(self, A, B):
        """The isomorphism between the host hom category and the computed
        hom category of the embedded objects."""
        X, Y = embed_c(self.host, A), embed_c(self.host, B)
        hom = self.hom(X, Y)
        H = hom_category(self.host, A, B)
        ob = {r: self.embed_arrow(A, B, r) for r in H.objects}
        mor = {th: self.embed_cell(A, B, th) for th in H.morphisms}
        return CatFunctor(H, hom.cat, ob, mor).validate()

    # -- identities, composition, whiskers -------------------------------

    def identity(self, X):
        hom = self.hom(X, X)
        x, xi = {}, {}
        for j in X.index.objects:
            L = hom.colimits[j]
            x[j] = L.obj_id(self.host.id1[X.at(j)], j)
        for v, (l, j) in dualize(X.index).one_cells.items():
            # the connecting class (X_v, l) -> (id_{X_j}, j)
            L = hom.colimits[j]
            Xv = X.arrow(v)
            from .shapes import Premorphism

            pm = Premorphism((Xv, l), (self.host.id1[X.at(j)], j),
                             X.index.id1[l], self.host.id2[Xv], v)
            xi[v] = L.class_of[pm]
        return hom.object_id(x, xi)

    def compose(self, X, Y, Z, g_id, f_id):
        """Composite of hom objects by representative selection."""
        hom_xy = self.hom(X, Y)
        hom_yz = self.hom(Y, Z)
        hom_xz = self.hom(X, Z)
        fx, fxi = hom_xy.lim.obj_of[f_id]
        gx, gxi = hom_yz.lim.obj_of[g_id]
        x, xi = {}, {}
        for k in Z.index.objects:
            s, j = hom_yz.colimits[k].obj_of[gx[k]]
            r, i = hom_xy.colimits[j].obj_of[fx[j]]
            x[k] = hom_xz.colimits[k].obj_id(self.host.hcomp1[(s, r)], i)
        for c, (ksrc, ktgt) in dualize(Z.index).one_cells.items():
            xi[c] = self._bridge(hom_xy, hom_yz, hom_xz, (fx, fxi),
                                 ktgt, gxi[c])
        return hom_xz.object_id(x, xi)

    def _bridge(self, hom_xy, hom_yz, hom_xz, f_data, k, nu_class, via=None):
        """Turn a morphism class nu of Colim_j C(Y_j, Z_k) whose endpoint
        objects are (t_a, j_a) and (t_b, j_b) into the morphism of
        Colim_i C(X_i, Z_k) between the composites with f, using a
        representative premorphism of nu and the coherences of f."""
        C = self.host
        fx, fxi = f_data
        Lyz = hom_yz.colimits[k]
        Lxz = hom_xz.colimits[k]
        src_id, tgt_id = Lyz.cat.morphisms[nu_class]
        t_a, j_a = Lyz.obj_of[src_id]
        t_b, j_b = Lyz.obj_of[tgt_id]
        pm = via if via is not None else Lyz.representative(nu_class)
        v, beta, vp = pm.u, pm.f, pm.v     # v: j_a -> l, vp: j_b -> l
        l = hom_yz.X.index.one_tgt(v)
        r_l, i_l = hom_xy.colimits[l].obj_of[fx[l]]
        # transport f's coherence at v along post-composition with t_a
        Ta = self._post_functor(hom_xy.colimits[j_a], Lxz, t_a)
        a_mor = Lxz.cat.inverse(Ta.mor[fxi[v]])
        if a_mor is None:
            raise ValidationFailure("coherence transport is not invertible")
        b_mor = Lxz.fiber_mor_class(i_l, C.hcomp2[(beta, C.id2[r_l])])
        Tb = self._post_functor(hom_xy.colimits[j_b], Lxz, t_b)
        c_mor = Tb.mor[fxi[vp]]
        return Lxz.cat.compose_chain(c_mor, b_mor, a_mor)

    def whisker_left(self, X, Y, Z, g_id, alpha_id):
        """g . alpha for a hom object g of (Y, Z) and a hom morphism alpha
        of (X, Y): transport each component along post-composition."""
        hom_xy = self.hom(X, Y)
        hom_yz = self.hom(Y, Z)
        hom_xz = self.hom(X, Z)
        gx, _ = hom_yz.lim.obj_of[g_id]
        src, tgt = hom_xy.cat.morphisms[alpha_id]
        comps = {}
        for k in Z.index.objects:
            s, j = hom_yz.colimits[k].obj_of[gx[k]]
            T = self._post_functor(hom_xy.colimits[j], hom_xz.colimits[k], s)
            comps[k] = T.mor[hom_xy.mor_component(alpha_id, j)]
        csrc = self.compose(X, Y, Z, g_id, src)
        ctgt = self.compose(X, Y, Z, g_id, tgt)
        return hom_xz.morphism_id(csrc, ctgt, comps)

    def whisker_right(self, X, Y, Z, nu_id, f_id):
        """nu . f for a hom morphism nu of (Y, Z) and a hom object f of
        (X, Y): bridge each component class through f's coherences."""
        hom_xy = self.hom(X, Y)
        hom_yz = self.hom(Y, Z)
        hom_xz = self.hom(X, Z)
        src, tgt = hom_yz.cat.morphisms[nu_id]
        f_data = hom_xy.lim.obj_of[f_id]
        comps = {}
        for k in Z.index.objects:
            comps[k] = self._bridge(hom_xy, hom_yz, hom_xz, f_data, k,
                                    hom_yz.mor_component(nu_id, k))
        csrc = self.compose(X, Y, Z, src, f_id)
        ctgt = self.compose(X, Y, Z, tgt, f_id)
        return hom_xz.morphism_id(csrc, ctgt, comps)

    # -- projections ------------------------------------------------------

    def projection(self, X, i):
        """The hom object of hom(X, c X_i) carried by the identity of X_i."""
        Xi = embed_c(self.host, X.at(i))
        hom = self.hom(X, Xi)
        L = hom.colimits["*"]
        oid = L.obj_id(self.host.id1[X.at(i)], i)
        return hom.object_id({"*": oid}, {"id": L.cat.identity[oid]})

    def projection_coherence(self, X, u):
        """The invertible hom morphism from the projection at the source of
        u to the composite of X_u with the projection at its target."""
        from .shapes import Premorphism

        i, j = X.index.one_cells[u]
        Xi = embed_c(self.host, X.at(i))
        hom = self.hom(X, Xi)
        L = hom.colimits["*"]
        Xu = X.arrow(u)
        pm = Premorphism((self.host.id1[X.at(i)], i), (Xu, j),
                         u, self.host.id2[Xu], X.index.id1[j])
        src = self.projection(X, i)
        tgt = self.compose(X, embed_c(self.host, X.at(j)), Xi,
                           self.embed_arrow(X.at(j), X.at(i), Xu),
                           self.projection(X, j))
        return hom.morphism_id(src, tgt, {"*": L.class_of[pm]})

    # -- representations ---------------------------------------------------

    def represent_arrow(self, X, Y, f_id, j):
        """A host arrow representing f at slot j, with identity witness."""
        hom_xy = self.hom(X, Y)
        r, i = hom_xy.component_pair(f_id, j)
        hom = self.hom(X, embed_c(self.host, Y.at(j)))
        pjf = self.compose(X, Y, embed_c(self.host, Y.at(j)),
                           self.projection(Y, j), f_id)
        rpi = self.compose(X, embed_c(self.host, X.at(i)),
                           embed_c(self.host, Y.at(j)),
                           self.embed_arrow(X.at(i), Y.at(j), r),
                           self.projection(X, i))
        if pjf != rpi:
            raise ValidationFailure("projection composite mismatch")
        return i, r, Representation(X, Y, f_id, j, i, r, hom.cat.identity[pjf])

    def represent_cell(self, X, Y, alpha_id, j):
        """A host 2-cell between pushed-forward representatives which
        represents the hom morphism alpha at slot j."""
        hom_xy = self.hom(X, Y)
        f_id, g_id = hom_xy.cat.morphisms[alpha_id]
        m_j = hom_xy.mor_component(alpha_id, j)
        L = hom_xy.colimits[j]
        members = L.members[m_j]
        invertible = hom_xy.cat.is_iso(alpha_id)
        chosen = None
        for pm in members:
            if invertible and self.host.two_inverse(pm.f) is None:
                continue
            chosen = pm
            break
        if chosen is None:
            raise SearchExhausted("no invertible representative for an invertible cell")
        u, theta, v = chosen.u, chosen.f, chosen.v
        r, i_f = L.obj_of[L.obj_id(*chosen.src)]
        s, i_g = L.obj_of[L.obj_id(*chosen.tgt)]
        k = X.index.one_tgt(u)
        Yj = embed_c(self.host, Y.at(j))
        homj = self.hom(X, Yj)
        # phi = r . (coherence at u); psi = s . (coherence at v)
        er = self.embed_arrow(X.at(i_f), Y.at(j), r)
        es = self.embed_arrow(X.at(i_g), Y.at(j), s)
        phi = self.whisker_left(X, embed_c(self.host, X.at(i_f)), Yj,
                                er, self.projection_coherence(X, u))
        psi = self.whisker_left(X, embed_c(self.host, X.at(i_g)), Yj,
                                es, self.projection_coherence(X, v))
        rep = CellRepresentation(X, Y, alpha_id, j, k,
                                 self.host.hcomp1[(r, X.arrow(u))], phi,
                                 self.host.hcomp1[(s, X.arrow(v))], psi, theta)
        self.validate_cell_representation(rep)
        return rep

    def validate_arrow_representation(self, rep):
        """phi must be an invertible morphism from the projected composite
        to the representative composite."""
        X, Y = rep.X, rep.Y
        Yj = embed_c(self.host, Y.at(rep.j))
        hom = self.hom(X, Yj)
        pjf = self.compose(X, Y, Yj, self.projection(Y, rep.j), rep.f_id)
        rpi = self.compose(X, embed_c(self.host, X.at(rep.i)), Yj,
                           self.embed_arrow(X.at(rep.i), Y.at(rep.j), rep.r),
                           self.projection(X, rep.i))
        if hom.cat.morphisms[rep.phi] != (pjf, rpi):
            raise ValidationFailure("representation witness has wrong boundary")
        if hom.cat.inverse(rep.phi) is None:
            raise ValidationFailure("representation witness is not invertible")
        return True

    def validate_cell_representation(self, rep):
        """The defining square: theta-whisker after phi equals psi after
        the projected cell, inside the computed hom category."""
        X, Y = rep.X, rep.Y
        Yj = embed_c(self.host, Y.at(rep.j))
        hom = self.hom(X, Yj)
        Xk = embed_c(self.host, X.at(rep.k))
        etheta = self.embed_cell(X.at(rep.k), Y.at(rep.j), rep.theta)
        theta_pi = self.whisker_right(X, Xk, Yj, etheta, self.projection(X, rep.k))
        pj_alpha = self.whisker_left(X, Y, Yj, self.projection(Y, rep.j),
                                     rep.alpha_id)
        lhs = hom.cat.compose(theta_pi, rep.phi)
        rhs = hom.cat.compose(rep.psi, pj_alpha)
        if lhs != rhs:
            raise ValidationFailure("representation square does not commute")
        return True

    # -- searches -----------------------------------------------------------

    def lemma1_search(self, X, Cobj, r, i, s, j, alpha_id):
        """Find a cocone (k, u, v) and a host 2-cell between the pushed
        representatives whose whisker closes the square with alpha.

        alpha is a hom morphism from the r-composite to the s-composite in
        hom(X, c Cobj); with equal feet, diagonal cocones are preferred;
        the witness 2-cell is invertible whenever alpha is.
        """
        I = X.index
        CY = embed_c(self.host, Cobj)
        hom = self.hom(X, CY)
        invertible = hom.cat.is_iso(alpha_id)
        er = self.embed_arrow(X.at(i), Cobj, r)
        es = self.embed_arrow(X.at(j), Cobj, s)
        candidates = []
        for k in sorted(I.objects):
            for u in I.hom_1cells(i, k):
                for v in I.hom_1cells(j, k):
                    candidates.append((k, u, v))
        if i == j:
            candidates.sort(key=lambda kuv: (kuv[1] != kuv[2], kuv))
        for k, u, v in candidates:
            rXu = self.host.hcomp1[(r, X.arrow(u))]
            sXv = self.host.hcomp1[(s, X.arrow(v))]
            r_pi_u = self.whisker_left(X, embed_c(self.host, X.at(i)), CY,
                                       er, self.projection_coherence(X, u))
            s_pi_v = self.whisker_left(X, embed_c(self.host, X.at(j)), CY,
                                       es, self.projection_coherence(X, v))
            rhs = hom.cat.compose(s_pi_v, alpha_id)
            for theta in self.host.two_cells_between(rXu, sXv):
                if invertible and self.host.two_inverse(theta) is None:
                    continue
                etheta = self.embed_cell(X.at(k), Cobj, theta)
                theta_pi = self.whisker_right(
                    X, embed_c(self.host, X.at(k)), CY, etheta,
                    self.projection(X, k))
                if hom.cat.compose(theta_pi, r_pi_u) == rhs:
                    return k, u, v, theta
        raise SearchExhausted("lemma1: no representing cocone and cell")

    def lemma4_search(self, X, Cobj, i, th1, th2):
        """Find the first index arrow out of slot i equalizing two parallel
        host cells whose projected whiskers agree."""
        CY = embed_c(self.host, Cobj)
        lhs = self.whisker_right(X, embed_c(self.host, X.at(i)), CY,
                                 self.embed_cell(X.at(i), Cobj, th1),
                                 self.projection(X, i))
        rhs = self.whisker_right(X, embed_c(self.host, X.at(i)), CY,
                                 self.embed_cell(X.at(i), Cobj, th2),
                                 self.projection(X, i))
        if lhs != rhs:
            raise SearchExhausted("lemma4: projected whiskers differ")
        for i2 in sorted(X.index.objects):
            for u in X.index.hom_1cells(i, i2):
                Xu = X.arrow(u)
                if self.host.hcomp2[(th1, self.host.id2[Xu])] == \
                        self.host.hcomp2[(th2, self.host.id2[Xu])]:
                    return u
        raise SearchExhausted("lemma4: no equalizing index arrow")

    def lemma2_search(self, X, Y, alpha_id, rep_f, rep_g):
        """Compose two arrow representations into a cell representation of
        alpha, searching through the first lemma."""
        j = rep_f.j
        Yj = embed_c(self.host, Y.at(j))
        hom = self.hom(X, Yj)
        pj_alpha = self.whisker_left(X, Y, Yj, self.projection(Y, j), alpha_id)
        phi_inv = hom.cat.inverse(rep_f.phi)
        alpha_prime = hom.cat.compose_chain(rep_g.phi, pj_alpha, phi_inv)
        k, u, v, theta = self.lemma1_search(
            X, Y.at(j), rep_f.r, rep_f.i, rep_g.r, rep_g.i, alpha_prime)
        er = self.embed_arrow(X.at(rep_f.i), Y.at(j), rep_f.r)
        es = self.embed_arrow(X.at(rep_g.i), Y.at(j), rep_g.r)
        r_pi_u = self.whisker_left(X, embed_c(self.host, X.at(rep_f.i)), Yj,
                                   er, self.projection_coherence(X, u))
        s_pi_v = self.whisker_left(X, embed_c(self.host, X.at(rep_g.i)), Yj,
                                   es, self.projection_coherence(X, v))
        phi2 = hom.cat.compose(r_pi_u, rep_f.phi)
        psi2 = hom.cat.compose(s_pi_v, rep_g.phi)
        rep = CellRepresentation(X, Y, alpha_id, j, k,
                                 self.host.hcomp1[(rep_f.r, X.arrow(u))], phi2,
                                 self.host.hcomp1[(rep_g.r, X.arrow(v))], psi2,
                                 theta)
        self.validate_cell_representation(rep)
        return rep


@dataclass
class Representation:
    """An arrow representation: a host arrow r: X_i -> Y_j with an
    invertible hom 2-cell from the projected composite."""

    X: ProObject
    Y: ProObject
    f_id: str
    j: str
    i: str
    r: str
    phi: str


@dataclass
class CellRepresentation:
    """A cell representation: parallel host arrows out of one slot with a
    host 2-cell between them and the two arrow witnesses."""

    X: ProObject
    Y: ProObject
    alpha_id: str
    j: str
    k: str
    r: str
    phi: str
    s: str
    psi: str
    theta: str

"""Pseudocones, 2-filteredness, filtered pseudocolimits of category-valued
diagrams (objects-and-premorphism-classes presentation), descent-style
pseudolimits, and exhaustive universal-property checks.

A pseudocone with vertex A is a pseudonatural transformation into the
constant diagram at A, so cone categories reuse the transformation
machinery; the descent presentation of the pseudolimit is an independent
construction tested against it.
"""

from dataclasses import dataclass, field

from .errors import (
    CoherenceViolation,
    NotTwoFiltered,
    ValidationFailure,
)
from .fincat import (
    CatFunctor,
    CatNat,
    FinCat,
    all_functors,
    all_nats,
    compose_functors,
    nat_vcomp,
    whisker_post,
    whisker_pre,
)
from .transforms import (
    CatValuedFunctor,
    Modification,
    PseudoNat,
    all_modifications,
    constant_cat_functor,
    enumerate_transformations,
    hom_transform_category,
    identity_modification,
    identity_pseudonat,
    modification_vcomp,
    modification_whisker_left,
    modification_whisker_right,
    pseudonat_vcomp,
    strict_nat,
)
from .util import Budget, mkid


# ---------------------------------------------------------------------------
# 2-filteredness


@dataclass
class FilterWitness:
    """One deterministic witness per axiom instance: cocones on object
    pairs, invertible coequalizing cells for parallel 1-cells, and
    equalizing 1-cells for parallel 2-cells."""

    f0: dict                   # (A, B) -> (E, u: A->E, v: B->E)
    f1: dict                   # (f, g) -> (h, alpha: hf => hg invertible)
    f2: dict                   # (a, b) -> h with h a = h b


@dataclass
class FilterResult:
    ok: bool
    witness: FilterWitness = None
    axiom: str = None
    counterexample: tuple = None


def check_two_filtered(I):
    """Exhaustive search for witnesses of the three filteredness axioms;
    the first witness in lexicographic enumeration is recorded."""
    f0, f1, f2 = {}, {}, {}
    for a in sorted(I.objects):
        for b in sorted(I.objects):
            found = None
            for e in sorted(I.objects):
                for u in I.hom_1cells(a, e):
                    for v in I.hom_1cells(b, e):
                        found = (e, u, v)
                        break
                    if found:
                        break
                if found:
                    break
            if found is None:
                return FilterResult(False, axiom="F0", counterexample=(a, b))
            f0[(a, b)] = found
    ones = sorted(I.one_cells)
    for f in ones:
        for g in ones:
            if I.one_cells[f] != I.one_cells[g]:
                continue
            d = I.one_tgt(f)
            found = None
            for e in sorted(I.objects):
                for h in I.hom_1cells(d, e):
                    hf, hg = I.hcomp1[(h, f)], I.hcomp1[(h, g)]
                    for al in I.two_cells_between(hf, hg):
                        if I.two_invertible(al):
                            found = (h, al)
                            break
                    if found:
                        break
                if found:
                    break
            if found is None:
                return FilterResult(False, axiom="F1", counterexample=(f, g))
            f1[(f, g)] = found
    twos = sorted(I.two_cells)
    for a in twos:
        for b in twos:
            if I.two_cells[a] != I.two_cells[b]:
                continue
            d = I.two_tgt_obj(a)
            found = None
            for e in sorted(I.objects):
                for h in I.hom_1cells(d, e):
                    if I.hcomp2[(I.id2[h], a)] == I.hcomp2[(I.id2[h], b)]:
                        found = h
                        break
                if found:
                    break
            if found is None:
                return FilterResult(False, axiom="F2", counterexample=(a, b))
            f2[(a, b)] = found
    return FilterResult(True, witness=FilterWitness(f0, f1, f2))


# ---------------------------------------------------------------------------
# pseudocones as transformations into (or out of) a constant diagram


def make_pseudocone(diagram, vertex, comp, coh):
    """Package components and coherence cells as a transformation into
    the constant diagram at the vertex."""
    return PseudoNat(diagram, constant_cat_functor(diagram.source, vertex), comp, coh)


def validate_pseudocone(cone):
    """PC0-PC2 are exactly the transformation axioms against a constant
    target; invertibility of every coherence cell is included."""
    for f, F in cone.G.on1.items():
        if F.ob != {o: o for o in F.source.objects}:
            raise CoherenceViolation("constant-vertex", f, "target is not constant")
    return cone.validate()


def validate_pc_morphism(rho):
    return rho.validate()


def pseudocone_category(diagram, vertex, budget=None):
    """All pseudocones with the given vertex and all their morphisms."""
    return hom_transform_category(
        diagram, constant_cat_functor(diagram.source, vertex), "pseudo", budget)


def cone_category(vertex, diagram, budget=None):
    """All cones from a vertex into the diagram (the limit-side shape)."""
    return hom_transform_category(
        constant_cat_functor(diagram.source, vertex), diagram, "pseudo", budget)


# ---------------------------------------------------------------------------
# filtered pseudocolimits of category-valued diagrams


@dataclass(frozen=True)
class Premorphism:
    """A one-step connection between objects of two fibers: a cocone leg
    pair (u, v) and a morphism between the transported objects."""

    src: tuple                 # (C, i)
    tgt: tuple                 # (D, j)
    u: str                     # i -> k
    f: str                     # morphism of fiber(k)
    v: str                     # j -> k

    def triple(self):
        return (self.u, self.f, self.v)


@dataclass
class LLColimit:
    """The filtered pseudocolimit of a category-valued diagram, with the
    premorphism classes retained for representative lookups."""

    diagram: CatValuedFunctor
    witness: FilterWitness
    cat: FinCat = None
    cocone: PseudoNat = None
    class_of: dict = field(default_factory=dict)   # Premorphism.key -> class id
    members: dict = field(default_factory=dict)    # class id -> [Premorphism]
    obj_of: dict = field(default_factory=dict)     # object id -> (C, i)

    def obj_id(self, C, i):
        return mkid(C, i)

    def mor_class(self, pm):
        return self.class_of[pm]

    def fiber_mor_class(self, i, f):
        I = self.diagram.source
        return self.class_of[Premorphism(
            (self.diagram.fiber(i).src(f), i),
            (self.diagram.fiber(i).tgt(f), i),
            I.id1[i], f, I.id1[i])]

    def coherence_class(self, u, C):
        I = self.diagram.source
        i, j = I.one_cells[u]
        D = self.diagram.on1[u].ob[C]
        return self.class_of[Premorphism(
            (C, i), (D, j), u, self.diagram.fiber(j).identity[D], I.id1[j])]

    def representative(self, cid):
        return self.members[cid][0]


def one_step_homotopic(F, p, q):
    """Search for a single homotopy between parallel premorphisms: a
    cocone (w1, w2) with invertible index 2-cells making the transported
    square commute in the receiving fiber."""
    I = F.source
    if p.src != q.src or p.tgt != q.tgt:
        return None
    (C, _), (D, _) = p.src, p.tgt
    k1 = I.one_tgt(p.u)
    k2 = I.one_tgt(q.u)
    for k in sorted(I.objects):
        for w1 in I.hom_1cells(k1, k):
            for w2 in I.hom_1cells(k2, k):
                w1v1 = I.hcomp1[(w1, p.v)]
                w2v2 = I.hcomp1[(w2, q.v)]
                w1u1 = I.hcomp1[(w1, p.u)]
                w2u2 = I.hcomp1[(w2, q.u)]
                for al in I.two_cells_between(w1v1, w2v2):
                    if not I.two_invertible(al):
                        continue
                    for be in I.two_cells_between(w1u1, w2u2):
                        if not I.two_invertible(be):
                            continue
                        fib = F.fiber(k)
                        lhs = fib.compose(F.on1[w2].mor[q.f], F.on2[be].at(C))
                        rhs = fib.compose(F.on2[al].at(D), F.on1[w1].mor[p.f])
                        if lhs == rhs:
                            return (w1, w2, al, be)
    return None


def homotopy_relation_is_equivalence(L):
    """Guard: the one-step relation is already reflexive, symmetric and
    transitive on every parallel premorphism set."""
    F = L.diagram
    by_endpoints = {}
    for cid, pms in L.members.items():
        key = (pms[0].src, pms[0].tgt)
        by_endpoints.setdefault(key, []).extend(pms)
    for pms in by_endpoints.values():
        rel = {}
        for p in pms:
            for q in pms:
                rel[(p, q)] = one_step_homotopic(F, p, q) is not None
        for p in pms:
            if not rel[(p, p)]:
                return False
        for p in pms:
            for q in pms:
                if rel[(p, q)] != rel[(q, p)]:
                    return False
                for r in pms:
                    if rel[(p, q)] and rel[(q, r)] and not rel[(p, r)]:
                        return False
    return True


def _compose_premorphisms(F, witness, q, p):
    """Deterministic composite q after p using the recorded witnesses."""
    I = F.source
    k1 = I.one_tgt(p.u)
    k2 = I.one_tgt(q.u)
    kk, w, wp = witness.f0[(k1, k2)]
    wv = I.hcomp1[(w, p.v)]
    wpu = I.hcomp1[(wp, q.u)]
    h, eps = witness.f1[(wv, wpu)]
    hw = I.hcomp1[(h, w)]
    hwp = I.hcomp1[(h, wp)]
    k3 = I.one_tgt(h)
    fib = F.fiber(k3)
    Dmid = p.tgt[0]
    heps = I.hcomp2[(I.id2[h], eps)]
    f2 = fib.compose_chain(F.on1[hwp].mor[q.f], F.on2[heps].at(Dmid), F.on1[hw].mor[p.f])
    return Premorphism(p.src, q.tgt,
                       I.hcomp1[(hw, p.u)], f2, I.hcomp1[(hwp, q.v)])


def pseudocolim_ll(F, budget=None, check=None):
    """The filtered pseudocolimit of a category-valued diagram F.

    Objects are the pairs (object of a fiber, index); morphisms are
    homotopy classes of premorphisms; composition picks representatives
    through the deterministic witness tables.  The universal cocone is
    validated before returning.
    """
    budget = budget or Budget()
    check = check or check_two_filtered(F.source)
    if not check.ok:
        raise NotTwoFiltered(check.axiom, check.counterexample)
    witness = check.witness
    I = F.source
    L = LLColimit(F, witness)
    objs = []
    for i in sorted(I.objects):
        for C in sorted(F.fiber(i).objects):
            oid = L.obj_id(C, i)
            L.obj_of[oid] = (C, i)
            objs.append(oid)
    # enumerate premorphisms per endpoint pair
    endpoint_pms = {}
    for so in objs:
        for to in objs:
            C, i = L.obj_of[so]
            D, j = L.obj_of[to]
            pms = []
            for k in sorted(I.objects):
                for u in I.hom_1cells(i, k):
                    for v in I.hom_1cells(j, k):
                        src_obj = F.on1[u].ob[C]
                        tgt_obj = F.on1[v].ob[D]
                        for f in F.fiber(k).hom(src_obj, tgt_obj):
                            budget.charge()
                            pms.append(Premorphism((C, i), (D, j), u, f, v))
            endpoint_pms[(so, to)] = pms
    # quotient by the homotopy relation
    morphisms = {}
    for (so, to), pms in sorted(endpoint_pms.items()):
        parent = {p: p for p in pms}

        def find(p):
            while parent[p] is not p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        for a in range(len(pms)):
            for b in range(a + 1, len(pms)):
                budget.charge()
                ra, rb = find(pms[a]), find(pms[b])
                if ra is rb:
                    continue
                if one_step_homotopic(F, pms[a], pms[b]) is not None:
                    parent[ra] = rb
        groups = {}
        for p in pms:
            groups.setdefault(find(p), []).append(p)
        for group in groups.values():
            group.sort(key=lambda p: p.triple())
            rep = group[0]
            cid = mkid("pm", rep.src[0], rep.src[1], rep.tgt[0], rep.tgt[1], *rep.triple())
            L.members[cid] = group
            for p in group:
                L.class_of[p] = cid
            morphisms[cid] = (so, to)
    identity = {}
    for oid, (C, i) in L.obj_of.items():
        identity[oid] = L.fiber_mor_class(i, F.fiber(i).identity[C])
    comp = {}
    for c2, (s2, t2) in sorted(morphisms.items()):
        for c1, (s1, t1) in sorted(morphisms.items()):
            if t1 != s2:
                continue
            budget.charge()
            pm = _compose_premorphisms(F, witness, L.representative(c2), L.representative(c1))
            comp[(c2, c1)] = L.class_of[pm]
    try:
        L.cat = FinCat(tuple(objs), morphisms, identity, comp,
                       obj_data=dict(L.obj_of),
                       mor_data={cid: L.representative(cid).triple()
                                 for cid in morphisms}).validate()
    except Exception as exc:     # composition not well defined: a real bug
        raise ValidationFailure(f"colimit category failed validation: {exc}") from exc
    comp_fs = {}
    for i in sorted(I.objects):
        fib = F.fiber(i)
        comp_fs[i] = CatFunctor(fib, L.cat,
                                {C: L.obj_id(C, i) for C in fib.objects},
                                {f: L.fiber_mor_class(i, f) for f in fib.morphisms})
    coh = {}
    for u, (i, j) in I.one_cells.items():
        lam_i = comp_fs[i]
        tgt = compose_functors(comp_fs[j], F.on1[u])
        coh[u] = CatNat(lam_i, tgt,
                        {C: L.coherence_class(u, C) for C in F.fiber(i).objects})
    L.cocone = make_pseudocone(F, L.cat, comp_fs, coh)
    try:
        validate_pseudocone(L.cocone)
    except CoherenceViolation as exc:
        raise ValidationFailure(f"colimit cocone failed validation: {exc}") from exc
    return L


def ll_transport_functor(Lsrc, Ltgt, components, validate=True):
    """The functor between colimit categories induced by a family of
    fiberwise functors commuting strictly with both diagrams.

    `components[i]` maps fiber_src(i) to fiber_tgt(i); objects (C, i) go
    to (components[i] C, i) and a class goes to the class of its
    transported representative (checked well defined on every member).
    """
    ob, mor = {}, {}
    for oid, (C, i) in Lsrc.obj_of.items():
        ob[oid] = Ltgt.obj_id(components[i].ob[C], i)
    I = Lsrc.diagram.source
    for cid, pms in Lsrc.members.items():
        images = set()
        for p in pms:
            k = I.one_tgt(p.u)
            q = Premorphism((components[p.src[1]].ob[p.src[0]], p.src[1]),
                            (components[p.tgt[1]].ob[p.tgt[0]], p.tgt[1]),
                            p.u, components[k].mor[p.f], p.v)
            images.add(Ltgt.class_of[q])
        if len(images) != 1:
            raise ValidationFailure(f"transport of class {cid!r} is not well defined")
        mor[cid] = images.pop()
    out = CatFunctor(Lsrc.cat, Ltgt.cat, ob, mor)
    if validate:
        out.validate()
    return out


def ll_transport_nat(Lsrc, Ltgt, Fsrc_to, Ftgt_to, family):
    """The natural transformation between two transported functors induced
    by a fiberwise family of naturals: component at (C, i) is the image of
    family[i]_C under the target cocone."""
    comp = {}
    for oid, (C, i) in Lsrc.obj_of.items():
        comp[oid] = Ltgt.fiber_mor_class(i, family[i].at(C))
    return CatNat(Fsrc_to, Ftgt_to, comp).validate()


# ---------------------------------------------------------------------------
# descent-style pseudolimits of category-valued diagrams


@dataclass
class LimCone:
    """A cone out of a vertex: projections plus invertible coherence
    cells F(e) . P_m => P_m'."""

    diagram: CatValuedFunctor
    vertex: FinCat
    proj: dict                 # index object -> CatFunctor vertex -> fiber
    coh: dict                  # index 1-cell -> CatNat

    def validate(self):
        F = self.diagram
        I = F.source
        for m in sorted(I.objects):
            self.proj[m].validate()
        for e, (m, m2) in sorted(I.one_cells.items()):
            n = self.coh[e]
            if n.F != compose_functors(F.on1[e], self.proj[m]) or n.G != self.proj[m2]:
                raise CoherenceViolation("cone boundary", e)
            n.validate()
            if not n.is_invertible():
                raise CoherenceViolation("cone invertibility", e)
        for m in sorted(I.objects):
            e = I.id1[m]
            fib = self.proj[m].target
            want = {o: fib.identity[self.proj[m].ob[o]]
                    for o in self.proj[m].source.objects}
            if self.coh[e].comp != want:
                raise CoherenceViolation("cone PC0", m)
        for (e2, e1), e3 in sorted(I.hcomp1.items()):
            got = nat_vcomp(self.coh[e2], whisker_post(F.on1[e2], self.coh[e1]))
            if got.comp != self.coh[e3].comp:
                raise CoherenceViolation("cone PC1", (e2, e1))
        for a, (e, e2) in sorted(I.two_cells.items()):
            m = I.one_src(e)
            got = nat_vcomp(self.coh[e2], whisker_pre(F.on2[a], self.proj[m]))
            if got.comp != self.coh[e].comp:
                raise CoherenceViolation("cone PC2", a)
        return self


@dataclass
class LimResult:
    cat: FinCat
    cone: LimCone
    obj_of: dict               # object id -> (components dict, coherences dict)
    mor_of: dict               # morphism id -> components dict


def pseudolim_cat(F, budget=None):
    """The pseudolimit of a category-valued diagram in its descent
    presentation: families of fiber objects with invertible transition
    morphisms satisfying the cocycle conditions, and families of fiber
    morphisms commuting with the transitions."""
    budget = budget or Budget()
    I = F.source
    objs = sorted(I.objects)
    ident_cells = {I.id1[o] for o in I.objects}
    non_id = sorted(e for e in I.one_cells if e not in ident_cells)
    families = []

    def full_xi(x, xi):
        out = dict(xi)
        for o in objs:
            out[I.id1[o]] = F.fiber(o).identity[x[o]]
        return out

    def cocycle_ok(x, xi):
        for (e2, e1), e3 in I.hcomp1.items():
            lhs = F.fiber(I.one_tgt(e2)).compose(xi[e2], F.on1[e2].mor[xi[e1]])
            if lhs != xi[e3]:
                return False
        for a, (e, e2) in I.two_cells.items():
            m = I.one_src(e)
            if F.fiber(I.one_tgt(e)).compose(xi[e2], F.on2[a].at(x[m])) != xi[e]:
                return False
        return True

    def fill_xi(x, k, xi):
        if k == len(non_id):
            budget.charge()
            full = full_xi(x, xi)
            if cocycle_ok(x, full):
                families.append((dict(x), full))
            return
        e = non_id[k]
        m, m2 = I.one_cells[e]
        fib = F.fiber(m2)
        for c in fib.hom(F.on1[e].ob[x[m]], x[m2]):
            if not fib.is_iso(c):
                continue
            xi[e] = c
            fill_xi(x, k + 1, xi)
            del xi[e]

    def fill_x(k, x):
        if k == len(objs):
            fill_xi(x, 0, {})
            return
        for C in sorted(F.fiber(objs[k]).objects):
            x[objs[k]] = C
            fill_x(k + 1, x)
            del x[objs[k]]

    fill_x(0, {})
    families.sort(key=lambda fam: (tuple(sorted(fam[0].items())),
                                   tuple(sorted(fam[1].items()))))
    obj_of, obj_ids = {}, {}
    for n, (x, xi) in enumerate(families):
        oid = f"x{n}"
        obj_of[oid] = (x, xi)
        obj_ids[(tuple(sorted(x.items())), tuple(sorted(xi.items())))] = oid
    morphisms, mor_of, mor_ids = {}, {}, {}
    counter = 0
    for so in sorted(obj_of):
        for to in sorted(obj_of):
            (x, xi), (y, ze) = obj_of[so], obj_of[to]
            cands = [{}]
            for m in objs:
                fib = F.fiber(m)
                cands = [dict(c, **{m: h}) for c in cands for h in fib.hom(x[m], y[m])]
                budget.charge(len(cands))
            for h in cands:
                ok = True
                for e in non_id:
                    m, m2 = I.one_cells[e]
                    fib = F.fiber(m2)
                    if fib.compose(ze[e], F.on1[e].mor[h[m]]) != fib.compose(h[m2], xi[e]):
                        ok = False
                        break
                if ok:
                    mid = f"h{counter}"
                    counter += 1
                    morphisms[mid] = (so, to)
                    mor_of[mid] = h
                    mor_ids[(so, to, tuple(sorted(h.items())))] = mid
    identity = {}
    for oid, (x, _) in obj_of.items():
        key = (oid, oid, tuple(sorted((m, F.fiber(m).identity[x[m]]) for m in objs)))
        identity[oid] = mor_ids[key]
    comp = {}
    for m2, (s2, t2) in morphisms.items():
        for m1, (s1, t1) in morphisms.items():
            if t1 != s2:
                continue
            h = {m: F.fiber(m).compose(mor_of[m2][m], mor_of[m1][m]) for m in objs}
            comp[(m2, m1)] = mor_ids[(s1, t2, tuple(sorted(h.items())))]
    cat = FinCat(tuple(sorted(obj_of)), morphisms, identity, comp,
                 obj_data=dict(obj_of), mor_data=dict(mor_of)).validate()
    proj, coh = {}, {}
    for m in objs:
        proj[m] = CatFunctor(cat, F.fiber(m),
                             {oid: obj_of[oid][0][m] for oid in obj_of},
                             {mid: mor_of[mid][m] for mid in morphisms})
    for e, (m, m2) in I.one_cells.items():
        coh[e] = CatNat(compose_functors(F.on1[e], proj[m]), proj[m2],
                        {oid: obj_of[oid][1][e] for oid in obj_of})
    cone = LimCone(F, cat, proj, coh)
    try:
        cone.validate()
    except CoherenceViolation as exc:
        raise ValidationFailure(f"limit cone failed validation: {exc}") from exc
    return LimResult(cat, cone, obj_of, mor_of)


# ---------------------------------------------------------------------------
# universal-property checks


def _cone_key(pn):
    return pn.key()


def universal_check_colim(F, L, lam, A, budget=None):
    """Is pre-composition with the cocone an isomorphism of categories
    from functors-out-of-the-colimit to pseudocones with vertex A?"""
    budget = budget or Budget()
    cones = pseudocone_category(F, A, budget)
    functors = all_functors(L, A, budget)
    report = {"objects_bijective": True, "morphisms_bijective": True,
              "counts": {"functors": len(functors),
                         "cones": len(cones.objects)},
              "witness": None}
    const = constant_cat_functor(F.source, A)
    image_of = {}
    seen = set()
    for h in functors:
        comp = {i: compose_functors(h, lam.comp[i]) for i in F.source.objects}
        coh = {u: whisker_post(h, lam.coh[u]) for u in F.source.one_cells}
        pn = PseudoNat(F, const, comp, coh)
        k = _cone_key(pn)
        if k not in cones.obj_ids:
            report["objects_bijective"] = False
            report["witness"] = {"part": "objects", "functor": h.key(),
                                 "reason": "image is not a valid pseudocone"}
            return report
        if k in seen:
            report["objects_bijective"] = False
            report["witness"] = {"part": "objects", "reason": "not injective"}
            return report
        seen.add(k)
        image_of[h.key()] = cones.obj_ids[k]
    if len(seen) != len(cones.objects):
        report["objects_bijective"] = False
        missing = sorted(set(cones.obj_ids.values())
                         - set(image_of.values()))[:1]
        report["witness"] = {"part": "objects", "reason": "not surjective",
                             "missing": missing}
    total_mapped = 0
    seen_mor = set()
    for h1 in functors:
        for h2 in functors:
            c1, c2 = image_of.get(h1.key()), image_of.get(h2.key())
            if c1 is None or c2 is None:
                continue
            for n in all_nats(h1, h2):
                total_mapped += 1
                comp = {i: whisker_pre(n, lam.comp[i]) for i in F.source.objects}
                rho = Modification(cones.objects[c1], cones.objects[c2], comp)
                mk = (c1, c2, rho.key())
                if mk not in cones.mor_ids:
                    report["morphisms_bijective"] = False
                    report["witness"] = {"part": "morphisms",
                                         "reason": "image not a cone morphism"}
                    return report
                if mk in seen_mor:
                    report["morphisms_bijective"] = False
                    report["witness"] = {"part": "morphisms", "reason": "not injective"}
                    return report
                seen_mor.add(mk)
    if total_mapped != len(cones.morphisms):
        report["morphisms_bijective"] = False
        if report["witness"] is None:
            report["witness"] = {"part": "morphisms", "reason": "not surjective"}
    report["counts"]["functor_nats"] = total_mapped
    report["counts"]["cone_morphisms"] = len(cones.morphisms)
    return report


def universal_check_lim(F, L, cone, A, budget=None):
    """Is post-composition with the projections an isomorphism of
    categories from functors-into-the-limit to cones with vertex A?"""
    budget = budget or Budget()
    cones = cone_category(A, F, budget)
    functors = all_functors(A, L, budget)
    report = {"objects_bijective": True, "morphisms_bijective": True,
              "counts": {"functors": len(functors),
                         "cones": len(cones.objects)},
              "witness": None}
    const = constant_cat_functor(F.source, A)
    image_of = {}
    seen = set()
    for h in functors:
        comp = {m: compose_functors(cone.proj[m], h) for m in F.source.objects}
        coh = {e: whisker_pre(cone.coh[e], h) for e in F.source.one_cells}
        pn = PseudoNat(const, F, comp, coh)
        k = _cone_key(pn)
        if k not in cones.obj_ids:
            report["objects_bijective"] = False
            report["witness"] = {"part": "objects",
                                 "reason": "image is not a valid cone"}
            return report
        if k in seen:
            report["objects_bijective"] = False
            report["witness"] = {"part": "objects", "reason": "not injective"}
            return report
        seen.add(k)
        image_of[h.key()] = cones.obj_ids[k]
    if len(seen) != len(cones.objects):
        report["objects_bijective"] = False
        report["witness"] = {"part": "objects", "reason": "not surjective"}
    total_mapped = 0
    seen_mor = set()
    for h1 in functors:
        for h2 in functors:
            c1, c2 = image_of.get(h1.key()), image_of.get(h2.key())
            if c1 is None or c2 is None:
                continue
            for n in all_nats(h1, h2):
                total_mapped += 1
                comp = {m: whisker_post(cone.proj[m], n) for m in F.source.objects}
                rho = Modification(cones.objects[c1], cones.objects[c2], comp)
                mk = (c1, c2, rho.key())
                if mk not in cones.mor_ids:
                    report["morphisms_bijective"] = False
                    report["witness"] = {"part": "morphisms",
                                         "reason": "image not a cone morphism"}
                    return report
                if mk in seen_mor:
                    report["morphisms_bijective"] = False
                    report["witness"] = {"part": "morphisms", "reason": "not injective"}
                    return report
                seen_mor.add(mk)
    if total_mapped != len(cones.morphisms):
        report["morphisms_bijective"] = False
        if report["witness"] is None:
            report["witness"] = {"part": "morphisms", "reason": "not surjective"}
    report["counts"]["functor_nats"] = total_mapped
    report["counts"]["cone_morphisms"] = len(cones.morphisms)
    return report


# ---------------------------------------------------------------------------
# pointwise colimits in the 2-category of category-valued functors


@dataclass
class FunctorDiagram:
    """A diagram of category-valued functors on a common base: objects of
    the index go to functors, 1-cells to strict transformations, 2-cells
    to modifications."""

    index: object              # Fin2Cat, 2-filtered for colimits
    base: object               # Fin2Cat
    obs: dict                  # index object -> CatValuedFunctor
    on1: dict                  # index 1-cell -> PseudoNat (strict)
    on2: dict                  # index 2-cell -> Modification

    def validate(self):
        I = self.index
        for i in sorted(I.objects):
            self.obs[i].validate()
        for u, (i, j) in sorted(I.one_cells.items()):
            t = self.on1[u]
            if t.F.key() != self.obs[i].key() or t.G.key() != self.obs[j].key():
                raise CoherenceViolation("diagram 1-cell boundary", u)
            t.validate()
            if not t.is_strict():
                raise CoherenceViolation("diagram 1-cell", u, "not strict")
        for i in sorted(I.objects):
            if self.on1[I.id1[i]].key() != identity_pseudonat(self.obs[i]).key():
                raise CoherenceViolation("diagram identity", i)
        for (v, u), vu in sorted(I.hcomp1.items()):
            got = pseudonat_vcomp(self.on1[v], self.on1[u])
            if got.key() != self.on1[vu].key():
                raise CoherenceViolation("diagram composition", (v, u))
        for a, (u, v) in sorted(I.two_cells.items()):
            m = self.on2[a]
            if m.theta.key() != self.on1[u].key() or m.eta.key() != self.on1[v].key():
                raise CoherenceViolation("diagram 2-cell boundary", a)
            m.validate()
        for u in sorted(I.one_cells):
            if self.on2[I.id2[u]].key() != identity_modification(self.on1[u]).key():
                raise CoherenceViolation("diagram identity 2-cell", u)
        for (b, a), r in sorted(I.vcomp.items()):
            got = modification_vcomp(self.on2[b], self.on2[a])
            if got.key() != self.on2[r].key():
                raise CoherenceViolation("diagram vertical composition", (b, a))
        return self

    def evaluate_at(self, C):
        """The category-valued diagram over the index obtained by fixing a
        base object."""
        I = self.index
        return CatValuedFunctor(
            I,
            {i: self.obs[i].fiber(C) for i in I.objects},
            {u: self.on1[u].comp[C] for u in I.one_cells},
            {a: self.on2[a].comp[C] for a in I.two_cells},
        )


def assemble_pointwise_colimit(D, budget=None):
    """Compute the colimit fiberwise, assemble the induced functor on the
    base, and package the cocone legs as strict transformations with
    modification coherence cells."""
    budget = budget or Budget()
    check = check_two_filtered(D.index)
    if not check.ok:
        raise NotTwoFiltered(check.axiom, check.counterexample)
    base, I = D.base, D.index
    colimits = {C: pseudocolim_ll(D.evaluate_at(C), budget, check)
                for C in sorted(base.objects)}
    on1 = {}
    for f, (C, C2) in base.one_cells.items():
        on1[f] = ll_transport_functor(
            colimits[C], colimits[C2],
            {i: D.obs[i].on1[f] for i in I.objects})
    on2 = {}
    for b, (f, g) in base.two_cells.items():
        C = base.one_src(f)
        comp = {}
        for oid, (X, i) in colimits[C].obj_of.items():
            comp[oid] = colimits[base.one_tgt(f)].fiber_mor_class(
                i, D.obs[i].on2[b].at(X))
        on2[b] = CatNat(on1[f], on1[g], comp)
    L = CatValuedFunctor(base, {C: colimits[C].cat for C in base.objects},
                         on1, on2).validate()
    legs, cells = {}, {}
    for i in I.objects:
        legs[i] = strict_nat(D.obs[i], L,
                             {C: colimits[C].cocone.comp[i] for C in base.objects})
        legs[i].validate()
    for u, (i, j) in I.one_cells.items():
        target = pseudonat_vcomp(legs[j], D.on1[u])
        cells[u] = Modification(legs[i], target,
                                {C: colimits[C].cocone.coh[u] for C in base.objects})
        cells[u].validate()
    return {"colimits": colimits, "L": L, "legs": legs, "cells": cells}


def _functor_cone_key(comps, cohs, one_cells):
    return (tuple(sorted((i, t.key()) for i, t in comps.items())),
            tuple(sorted((u, cohs[u].key()) for u in one_cells)))


def _enumerate_functor_cones(D, A, budget):
    """All pseudocones of a functor diagram with a functor vertex:
    strict-transformation components and invertible modification cells."""
    I = D.index
    objs = sorted(I.objects)
    ident = {I.id1[i] for i in I.objects}
    non_id = sorted(u for u in I.one_cells if u not in ident)
    pools = {i: enumerate_transformations(D.obs[i], A, "strict", budget)
             for i in objs}
    cones = []

    def full_cells(comps, cells):
        out = dict(cells)
        for i in objs:
            out[I.id1[i]] = identity_modification(comps[i])
        return out

    def cone_ok(comps, cells):
        for (v, u), vu in I.hcomp1.items():
            got = modification_vcomp(
                modification_whisker_right(cells[v], D.on1[u]), cells[u])
            if got.key() != cells[vu].key():
                return False
        for a, (u, v) in I.two_cells.items():
            j = I.one_tgt(u)
            got = modification_vcomp(
                modification_whisker_left(comps[j], D.on2[a]), cells[u])
            if got.key() != cells[v].key():
                return False
        return True

    def fill_cells(comps, k, cells):
        if k == len(non_id):
            budget.charge()
            full = full_cells(comps, cells)
            if cone_ok(comps, full):
                cones.append((dict(comps), full))
            return
        u = non_id[k]
        i, j = I.one_cells[u]
        target = pseudonat_vcomp(comps[j], D.on1[u])
        for rho in all_modifications(comps[i], target, budget):
            if not rho.is_invertible():
                continue
            cells[u] = rho
            fill_cells(comps, k + 1, cells)
            del cells[u]

    def fill_comps(k, comps):
        if k == len(objs):
            fill_cells(comps, 0, {})
            return
        for t in pools[objs[k]]:
            comps[objs[k]] = t
            fill_comps(k + 1, comps)
            del comps[objs[k]]

    fill_comps(0, {})
    return cones


def pointwise_colim_check(D, vertices, budget=None):
    """Assemble the pointwise colimit and verify its universal property in
    the functor 2-category against each test vertex."""
    budget = budget or Budget()
    assembled = assemble_pointwise_colimit(D, budget)
    L, legs, cells = assembled["L"], assembled["legs"], assembled["cells"]
    I = D.index
    report = {"assembled_valid": True, "vertices": []}
    for A in vertices:
        arrows = enumerate_transformations(L, A, "strict", budget)
        cones = _enumerate_functor_cones(D, A, budget)
        cone_keys = {_functor_cone_key(c, k, I.one_cells): n
                     for n, (c, k) in enumerate(cones)}
        entry = {"arrows": len(arrows), "cones": len(cones),
                 "objects_bijective": True, "morphisms_bijective": True,
                 "witness": None}
        image = {}
        for n, sigma in enumerate(arrows):
            comps = {i: pseudonat_vcomp(sigma, legs[i]) for i in I.objects}
            cohs = {u: modification_whisker_left(sigma, cells[u])
                    for u in I.one_cells}
            key = _functor_cone_key(comps, cohs, I.one_cells)
            if key not in cone_keys:
                entry["objects_bijective"] = False
                entry["witness"] = {"part": "objects", "reason": "image not a cone"}
                break
            if key in image.values():
                entry["objects_bijective"] = False
                entry["witness"] = {"part": "objects", "reason": "not injective"}
                break
            image[n] = key
        if entry["objects_bijective"] and len(image) != len(cones):
            entry["objects_bijective"] = False
            entry["witness"] = {"part": "objects", "reason": "not surjective"}
        # morphisms: modifications between arrows map to cone morphisms by
        # whiskering with the cocone legs; require a bijection per hom-set
        if entry["objects_bijective"]:
            for n1, s1 in enumerate(arrows):
                for n2, s2 in enumerate(arrows):
                    c1, k1 = cones[cone_keys[image[n1]]]
                    c2, k2 = cones[cone_keys[image[n2]]]
                    fams = _functor_cone_morphisms(D, c1, k1, c2, k2, budget)
                    fam_keys = {tuple(sorted((i, r.key()) for i, r in fam.items()))
                                for fam in fams}
                    mods = all_modifications(s1, s2, budget)
                    got = set()
                    for mu in mods:
                        fam = {i: modification_whisker_right(mu, legs[i])
                               for i in I.objects}
                        got.add(tuple(sorted((i, r.key()) for i, r in fam.items())))
                    if got != fam_keys or len(got) != len(mods):
                        entry["morphisms_bijective"] = False
                        entry["witness"] = {"part": "morphisms",
                                            "reason": "hom-set mismatch"}
                        break
                if not entry["morphisms_bijective"]:
                    break
        report["vertices"].append(entry)
    report["ok"] = all(e["objects_bijective"] and e["morphisms_bijective"]
                       for e in report["vertices"])
    return report


def _functor_cone_morphisms(D, c1, k1, c2, k2, budget):
    """All families of modifications between two functor-valued cones
    satisfying the cone-morphism equation."""
    I = D.index
    objs = sorted(I.objects)
    pools = {i: all_modifications(c1[i], c2[i], budget) for i in objs}
    found = []

    def ok(family):
        for u, (i, j) in I.one_cells.items():
            lhs = modification_vcomp(k2[u], family[i])
            rhs = modification_vcomp(
                modification_whisker_right(family[j], D.on1[u]), k1[u])
            if lhs.key() != rhs.key():
                return False
        return True

    def extend(k, family):
        if k == len(objs):
            budget.charge()
            if ok(family):
                found.append(dict(family))
            return
        for rho in pools[objs[k]]:
            family[objs[k]] = rho
            extend(k + 1, family)
            del family[objs[k]]

    extend(0, {})
    return found

"""2-functors, category-valued 2-functors, pseudonatural transformations,
modifications, the hom categories they form, and evaluation at an object
together with its section (the two directions of the hom/evaluation
comparison).

Category-valued functors keep their fibers as FinCat values instead of
embedding everything into one giant 2-category; all coherence equations
are evaluated with the natural-transformation arithmetic from `fincat`.
"""

from dataclasses import dataclass, field

from .errors import AxiomViolation, CoherenceViolation, PreservationViolation
from .fincat import (
    CatFunctor,
    CatNat,
    FinCat,
    all_functors,
    all_nats,
    compose_functors,
    functor_bijective,
    identity_functor,
    identity_nat,
    nat_vcomp,
    whisker_post,
    whisker_pre,
)
from .util import Budget, mkid


@dataclass
class TwoFunctor:
    """A strict map between Fin2Cats given by three total tables."""

    source: object
    target: object
    ob: dict
    on1: dict
    on2: dict

    def key(self):
        return (tuple(sorted(self.ob.items())),
                tuple(sorted(self.on1.items())),
                tuple(sorted(self.on2.items())))

    def validate(self):
        S, T = self.source, self.target
        for o in sorted(S.objects):
            if self.ob.get(o) not in T.objects:
                raise PreservationViolation("object", o, "image missing")
        for f in sorted(S.one_cells):
            im = self.on1.get(f)
            if im not in T.one_cells:
                raise PreservationViolation("1-cell", f, "image missing")
            s, t = S.one_cells[f]
            if T.one_cells[im] != (self.ob[s], self.ob[t]):
                raise PreservationViolation("1-cell boundary", f, f"image {im!r}")
        for c in sorted(S.two_cells):
            im = self.on2.get(c)
            if im not in T.two_cells:
                raise PreservationViolation("2-cell", c, "image missing")
            if T.two_cells[im] != (self.on1[S.two_src(c)], self.on1[S.two_tgt(c)]):
                raise PreservationViolation("2-cell boundary", c, f"image {im!r}")
        for o in sorted(S.objects):
            if self.on1[S.id1[o]] != T.id1[self.ob[o]]:
                raise PreservationViolation("identity 1-cell", o)
        for f in sorted(S.one_cells):
            if self.on2[S.id2[f]] != T.id2[self.on1[f]]:
                raise PreservationViolation("identity 2-cell", f)
        for (g, f), r in sorted(S.hcomp1.items()):
            if T.hcomp1[(self.on1[g], self.on1[f])] != self.on1[r]:
                raise PreservationViolation("1-cell composition", (g, f))
        for (b, a), r in sorted(S.vcomp.items()):
            if T.vcomp[(self.on2[b], self.on2[a])] != self.on2[r]:
                raise PreservationViolation("vertical composition", (b, a))
        for (b, a), r in sorted(S.hcomp2.items()):
            if T.hcomp2[(self.on2[b], self.on2[a])] != self.on2[r]:
                raise PreservationViolation("horizontal composition", (b, a))
        return self


def identity_two_functor(C):
    return TwoFunctor(C, C, {o: o for o in C.objects},
                      {f: f for f in C.one_cells},
                      {c: c for c in C.two_cells})


def compose_two_functors(G, F):
    """G after F."""
    return TwoFunctor(F.source, G.target,
                      {o: G.ob[v] for o, v in F.ob.items()},
                      {f: G.on1[v] for f, v in F.on1.items()},
                      {c: G.on2[v] for c, v in F.on2.items()}).validate()


@dataclass
class CatValuedFunctor:
    """A strict 2-functor from a Fin2Cat into categories, one FinCat per
    object, one functor table per 1-cell, one component table per 2-cell."""

    source: object
    fibers: dict               # object -> FinCat
    on1: dict                  # 1-cell -> CatFunctor
    on2: dict                  # 2-cell -> CatNat

    def fiber(self, o):
        return self.fibers[o]

    def key(self):
        return (tuple(sorted((o, c.key()) for o, c in self.fibers.items())),
                tuple(sorted((f, F.key()) for f, F in self.on1.items())),
                tuple(sorted((a, n.key()) for a, n in self.on2.items())))

    def validate(self):
        S = self.source
        for o in sorted(S.objects):
            if o not in self.fibers:
                raise PreservationViolation("object", o, "fiber missing")
            self.fibers[o].validate()
        for f in sorted(S.one_cells):
            F = self.on1.get(f)
            if F is None:
                raise PreservationViolation("1-cell", f, "functor missing")
            s, t = S.one_cells[f]
            if not (F.source.same_tables(self.fibers[s]) and F.target.same_tables(self.fibers[t])):
                raise PreservationViolation("1-cell boundary", f)
            try:
                F.validate()
            except AxiomViolation as exc:
                raise PreservationViolation("1-cell", f, str(exc)) from exc
        for o in sorted(S.objects):
            if self.on1[S.id1[o]] != identity_functor(self.fibers[o]):
                raise PreservationViolation("identity 1-cell", o)
        for (g, f), r in sorted(S.hcomp1.items()):
            if compose_functors(self.on1[g], self.on1[f]) != self.on1[r]:
                raise PreservationViolation("1-cell composition", (g, f))
        for a in sorted(S.two_cells):
            n = self.on2.get(a)
            if n is None:
                raise PreservationViolation("2-cell", a, "transformation missing")
            if n.F != self.on1[S.two_src(a)] or n.G != self.on1[S.two_tgt(a)]:
                raise PreservationViolation("2-cell boundary", a)
            try:
                n.validate()
            except AxiomViolation as exc:
                raise PreservationViolation("2-cell", a, str(exc)) from exc
        for f in sorted(S.one_cells):
            if self.on2[S.id2[f]] != identity_nat(self.on1[f]):
                raise PreservationViolation("identity 2-cell", f)
        for (b, a), r in sorted(S.vcomp.items()):
            if nat_vcomp(self.on2[b], self.on2[a]) != self.on2[r]:
                raise PreservationViolation("vertical composition", (b, a))
        for (b, a), r in sorted(S.hcomp2.items()):
            got = nat_vcomp(whisker_pre(self.on2[b], self.on2[a].G),
                            whisker_post(self.on2[b].F, self.on2[a]))
            if got != self.on2[r]:
                raise PreservationViolation("horizontal composition", (b, a))
        return self


def validate_functor(raw):
    """Exhaustively check either kind of functor."""
    return raw.validate()


def constant_cat_functor(source, value):
    """The 2-functor constant at one FinCat."""
    idf = identity_functor(value)
    return CatValuedFunctor(
        source,
        {o: value for o in source.objects},
        {f: idf for f in source.one_cells},
        {a: identity_nat(idf) for a in source.two_cells},
    )


@dataclass
class PseudoNat:
    """Components plus invertible coherence cells, one per 1-cell of the
    source, shaped G f . theta_C => theta_D . F f."""

    F: CatValuedFunctor
    G: CatValuedFunctor
    comp: dict                 # object -> CatFunctor
    coh: dict                  # 1-cell -> CatNat

    def key(self):
        return (tuple(sorted((o, f.key()) for o, f in self.comp.items())),
                tuple(sorted((f, n.key()) for f, n in self.coh.items())))

    def __eq__(self, other):
        return isinstance(other, PseudoNat) and self.key() == other.key()

    def is_strict(self):
        return all(self.coh[f] == _strict_coherence(self, f)
                   for f in self.F.source.one_cells)

    def validate(self):
        S = self.F.source
        for o in sorted(S.objects):
            th = self.comp.get(o)
            if th is None:
                raise CoherenceViolation("component", o, "missing")
            if not (th.source.same_tables(self.F.fiber(o)) and th.target.same_tables(self.G.fiber(o))):
                raise CoherenceViolation("component boundary", o)
            try:
                th.validate()
            except AxiomViolation as exc:
                raise CoherenceViolation("component", o, str(exc)) from exc
        for f in sorted(S.one_cells):
            n = self.coh.get(f)
            if n is None:
                raise CoherenceViolation("coherence", f, "missing")
            s, t = S.one_cells[f]
            want_src = compose_functors(self.G.on1[f], self.comp[s])
            want_tgt = compose_functors(self.comp[t], self.F.on1[f])
            if n.F != want_src or n.G != want_tgt:
                raise CoherenceViolation("coherence boundary", f)
            try:
                n.validate()
            except AxiomViolation as exc:
                raise CoherenceViolation("coherence", f, str(exc)) from exc
            if not n.is_invertible():
                raise CoherenceViolation("invertibility", f)
        for o in sorted(S.objects):
            f = S.id1[o]
            if self.coh[f] != identity_nat(self.comp[o]):
                raise CoherenceViolation("PN0", o)
        for (g, f), gf in sorted(S.hcomp1.items()):
            lhs = nat_vcomp(whisker_pre(self.coh[g], self.F.on1[f]),
                            whisker_post(self.G.on1[g], self.coh[f]))
            if lhs != self.coh[gf]:
                raise CoherenceViolation("PN1", (g, f))
        for a in sorted(S.two_cells):
            f, g = S.two_cells[a]
            s, t = S.one_cells[f]
            lhs = nat_vcomp(self.coh[g], whisker_pre(self.G.on2[a], self.comp[s]))
            rhs = nat_vcomp(whisker_post(self.comp[t], self.F.on2[a]), self.coh[f])
            if lhs != rhs:
                raise CoherenceViolation("PN2", a)
        return self


def _strict_coherence(theta, f):
    s, t = theta.F.source.one_cells[f]
    src = compose_functors(theta.G.on1[f], theta.comp[s])
    tgt = compose_functors(theta.comp[t], theta.F.on1[f])
    cat = theta.G.fiber(t)
    return CatNat(src, tgt, {x: cat.identity[src.ob[x]] for x in src.source.objects})


def strict_nat(F, G, comp):
    """Build the transformation with identity coherences; valid exactly
    when the naturality squares commute strictly."""
    theta = PseudoNat(F, G, comp, {})
    for f in F.source.one_cells:
        n = _strict_coherence(theta, f)
        if n.F != n.G:
            raise CoherenceViolation("strictness", f, "naturality square not strict")
        theta.coh[f] = n
    return theta


def validate_pseudonat(theta):
    return theta.validate()


def identity_pseudonat(F):
    return strict_nat(F, F, {o: identity_functor(F.fiber(o)) for o in F.source.objects})


def pseudonat_vcomp(sigma, theta):
    """Vertical composite sigma after theta of transformations."""
    S = theta.F.source
    comp = {o: compose_functors(sigma.comp[o], theta.comp[o]) for o in S.objects}
    coh = {}
    for f in S.one_cells:
        s, t = S.one_cells[f]
        coh[f] = nat_vcomp(whisker_post(sigma.comp[t], theta.coh[f]),
                           whisker_pre(sigma.coh[f], theta.comp[s]))
    return PseudoNat(theta.F, sigma.G, comp, coh)


@dataclass
class Modification:
    theta: PseudoNat
    eta: PseudoNat
    comp: dict                 # object -> CatNat theta_C => eta_C

    def key(self):
        return tuple(sorted((o, n.key()) for o, n in self.comp.items()))

    def __eq__(self, other):
        return (isinstance(other, Modification)
                and self.theta == other.theta and self.eta == other.eta
                and self.key() == other.key())

    def is_invertible(self):
        return all(n.is_invertible() for n in self.comp.values())

    def inverse(self):
        return Modification(self.eta, self.theta,
                            {o: n.inverse() for o, n in self.comp.items()})

    def validate(self):
        S = self.theta.F.source
        F, G = self.theta.F, self.theta.G
        for o in sorted(S.objects):
            n = self.comp.get(o)
            if n is None:
                raise CoherenceViolation("modification component", o, "missing")
            if n.F != self.theta.comp[o] or n.G != self.eta.comp[o]:
                raise CoherenceViolation("modification boundary", o)
            try:
                n.validate()
            except AxiomViolation as exc:
                raise CoherenceViolation("modification component", o, str(exc)) from exc
        for f in sorted(S.one_cells):
            s, t = S.one_cells[f]
            lhs = nat_vcomp(whisker_pre(self.comp[t], F.on1[f]), self.theta.coh[f])
            rhs = nat_vcomp(self.eta.coh[f], whisker_post(G.on1[f], self.comp[s]))
            if lhs != rhs:
                raise CoherenceViolation("modification", f)
        return self


def validate_modification(rho):
    return rho.validate()


def identity_modification(theta):
    return Modification(theta, theta,
                        {o: identity_nat(theta.comp[o]) for o in theta.comp})


def modification_vcomp(sig, rho):
    return Modification(rho.theta, sig.eta,
                        {o: nat_vcomp(sig.comp[o], rho.comp[o]) for o in rho.comp})


def modification_whisker_right(rho, tau):
    """rho . tau : theta tau => eta tau for a transformation tau into the
    common source of theta and eta."""
    return Modification(pseudonat_vcomp(rho.theta, tau),
                        pseudonat_vcomp(rho.eta, tau),
                        {o: whisker_pre(rho.comp[o], tau.comp[o]) for o in rho.comp})


def modification_whisker_left(sigma, rho):
    """sigma . rho : sigma theta => sigma eta."""
    return Modification(pseudonat_vcomp(sigma, rho.theta),
                        pseudonat_vcomp(sigma, rho.eta),
                        {o: whisker_post(sigma.comp[o], rho.comp[o]) for o in rho.comp})


def enumerate_transformations(F, G, mode, budget=None):
    """All 2-natural (strict) or pseudonatural transformations F => G,
    sorted by canonical key."""
    budget = budget or Budget()
    S = F.source
    objs = sorted(S.objects)
    per_obj = {o: all_functors(F.fiber(o), G.fiber(o), budget) for o in objs}
    non_id_ones = sorted(f for f in S.one_cells
                         if f not in {S.id1[o] for o in S.objects})
    found = []

    def fill_coherences(comp, k, coh):
        if k == len(non_id_ones):
            budget.charge()
            cand = PseudoNat(F, G, dict(comp), dict(coh))
            for o in objs:
                cand.coh[S.id1[o]] = identity_nat(comp[o])
            try:
                cand.validate()
            except CoherenceViolation:
                return
            found.append(cand)
            return
        f = non_id_ones[k]
        s, t = S.one_cells[f]
        src = compose_functors(G.on1[f], comp[s])
        tgt = compose_functors(comp[t], F.on1[f])
        for n in all_nats(src, tgt, budget, invertible_only=True):
            coh[f] = n
            fill_coherences(comp, k + 1, coh)
            del coh[f]

    def fill_components(k, comp):
        if k == len(objs):
            if mode == "strict":
                budget.charge()
                try:
                    cand = strict_nat(F, G, dict(comp))
                    cand.validate()
                except CoherenceViolation:
                    return
                found.append(cand)
            else:
                fill_coherences(comp, 0, {})
            return
        o = objs[k]
        for th in per_obj[o]:
            comp[o] = th
            fill_components(k + 1, comp)
            del comp[o]

    fill_components(0, {})
    found.sort(key=lambda t: t.key())
    return found


def all_modifications(theta, eta, budget=None):
    """All modifications theta => eta, sorted by canonical key."""
    budget = budget or Budget()
    S = theta.F.source
    objs = sorted(S.objects)
    found = []

    def extend(k, comp):
        if k == len(objs):
            budget.charge()
            cand = Modification(theta, eta, dict(comp))
            try:
                cand.validate()
            except CoherenceViolation:
                return
            found.append(cand)
            return
        o = objs[k]
        for n in all_nats(theta.comp[o], eta.comp[o], budget):
            comp[o] = n
            extend(k + 1, comp)
            del comp[o]

    extend(0, {})
    found.sort(key=lambda m: m.key())
    return found


@dataclass
class TransformCategory:
    """hom(F, G) as a FinCat plus lookups back to the transformations."""

    cat: FinCat
    objects: dict              # object id -> PseudoNat
    morphisms: dict            # morphism id -> Modification
    obj_ids: dict = field(default_factory=dict)
    mor_ids: dict = field(default_factory=dict)

    def id_of_transformation(self, theta):
        return self.obj_ids[theta.key()]

    def id_of_modification(self, rho):
        return self.mor_ids[(self.obj_ids[rho.theta.key()],
                             self.obj_ids[rho.eta.key()], rho.key())]


def hom_transform_category(F, G, mode="strict", budget=None):
    """The category of transformations F => G and modifications, built by
    exhaustive (budgeted) enumeration."""
    budget = budget or Budget()
    trans = enumerate_transformations(F, G, mode, budget)
    objects, obj_ids = {}, {}
    for n, t in enumerate(trans):
        oid = f"t{n}"
        objects[oid] = t
        obj_ids[t.key()] = oid
    morphisms, mor_ids, bounds = {}, {}, {}
    counter = 0
    for a in sorted(objects):
        for b in sorted(objects):
            for rho in all_modifications(objects[a], objects[b], budget):
                mid = f"m{counter}"
                counter += 1
                morphisms[mid] = rho
                mor_ids[(a, b, rho.key())] = mid
                bounds[mid] = (a, b)
    identity = {}
    for oid, t in objects.items():
        identity[oid] = mor_ids[(oid, oid, identity_modification(t).key())]
    comp = {}
    for m2, (b2, c2) in bounds.items():
        for m1, (a1, b1) in bounds.items():
            if b1 != b2:
                continue
            r = modification_vcomp(morphisms[m2], morphisms[m1])
            comp[(m2, m1)] = mor_ids[(a1, c2, r.key())]
    cat = FinCat(tuple(sorted(objects)), {m: bounds[m] for m in morphisms},
                 identity, comp).validate()
    return TransformCategory(cat, objects, morphisms, obj_ids, mor_ids)


def representable(C, A):
    """The hom 2-functor out of A, acting by post-composition."""
    from .twocat import hom_category

    fibers = {D: hom_category(C, A, D) for D in C.objects}
    on1 = {}
    for f, (s, t) in C.one_cells.items():
        on1[f] = CatFunctor(
            fibers[s], fibers[t],
            {h: C.hcomp1[(f, h)] for h in fibers[s].objects},
            {b: C.hcomp2[(C.id2[f], b)] for b in fibers[s].morphisms},
        )
    on2 = {}
    for a, (f, g) in C.two_cells.items():
        s = C.one_src(f)
        on2[a] = CatNat(on1[f], on1[g],
                        {h: C.hcomp2[(a, C.id2[h])] for h in fibers[s].objects})
    return CatValuedFunctor(C, fibers, on1, on2).validate()


def yoneda_l(C, F, A, x):
    """The strict transformation picked out by an object x of F(A)."""
    comp = {}
    for D in C.objects:
        dom = representable(C, A).fiber(D)
        comp[D] = CatFunctor(dom, F.fiber(D),
                             {f: F.on1[f].ob[x] for f in dom.objects},
                             {a: F.on2[a].at(x) for a in dom.morphisms})
    return strict_nat(representable(C, A), F, comp).validate()


def yoneda_l_mor(C, F, A, theta_x, theta_y, m):
    """The modification picked out by a morphism m of F(A)."""
    comp = {}
    for D in C.objects:
        comp[D] = CatNat(theta_x.comp[D], theta_y.comp[D],
                         {f: F.on1[f].mor[m] for f in theta_x.comp[D].ob})
    return Modification(theta_x, theta_y, comp).validate()


def retraction_modification(C, F, A, theta, ell_theta):
    """The invertible modification from the strict transformation
    determined by evaluating theta back to theta itself, assembled from
    theta's coherence cells."""
    idA = C.id1[A]
    comp = {}
    for D in C.objects:
        comps = {f: theta.coh[f].at(idA) for f in theta.comp[D].ob}
        comp[D] = CatNat(ell_theta.comp[D], theta.comp[D], comps)
    rho = Modification(ell_theta, theta, comp).validate()
    if not rho.is_invertible():
        raise CoherenceViolation("retraction", A, "not invertible")
    return rho


def yoneda_h(C, F, A, mode="strict", budget=None):
    """Evaluation at the identity: hom(representable(A), F) -> F(A).

    Returns a report carrying the transformation category, the evaluation
    functor, and in strict mode a bijectivity verdict; in pseudo mode the
    constructed section and the componentwise invertible modifications
    witnessing that evaluation-then-section is isomorphic to the identity.
    """
    budget = budget or Budget()
    R = representable(C, A)
    T = hom_transform_category(R, F, mode, budget)
    FA = F.fiber(A)
    idA = C.id1[A]
    h = CatFunctor(
        T.cat, FA,
        {oid: t.comp[A].ob[idA] for oid, t in T.objects.items()},
        {mid: rho.comp[A].at(idA) for mid, rho in T.morphisms.items()},
    ).validate()
    report = {"hom": T, "h": h}
    if mode == "strict":
        ok, witness = functor_bijective(h)
        report["bijective"] = ok
        report["witness"] = witness
        return report
    # the section: x |-> the strict transformation it determines
    ell_ob, ell_mor = {}, {}
    strict_of = {x: yoneda_l(C, F, A, x) for x in FA.objects}
    for x in FA.objects:
        ell_ob[x] = T.id_of_transformation(strict_of[x])
    for m, (x, y) in FA.morphisms.items():
        rho = yoneda_l_mor(C, F, A, strict_of[x], strict_of[y], m)
        ell_mor[m] = T.id_of_modification(rho)
    ell = CatFunctor(FA, T.cat, ell_ob, ell_mor).validate()
    report["l"] = ell
    report["section"] = compose_functors(h, ell) == identity_functor(FA)
    # componentwise: section-after-evaluation is isomorphic to the identity
    iso_components = {}
    for oid, theta in T.objects.items():
        x = h.ob[oid]
        rho = retraction_modification(C, F, A, theta, strict_of[x])
        iso_components[oid] = T.id_of_modification(rho)
    nat = CatNat(compose_functors(ell, h), identity_functor(T.cat), iso_components)
    nat.validate()
    report["retract_iso"] = nat
    report["retract_iso_invertible"] = all(
        T.cat.is_iso(c) for c in iso_components.values())
    return report


# ---------------------------------------------------------------------------
# transformations valued in a tabulated 2-category


def constant_two_functor(source, target, obj):
    return TwoFunctor(source, target,
                      {o: obj for o in source.objects},
                      {f: target.id1[obj] for f in source.one_cells},
                      {a: target.id2[target.id1[obj]] for a in source.two_cells})


@dataclass
class HostPseudoNat:
    """A transformation between functors into a tabulated 2-category:
    1-cell components and invertible 2-cell coherences, one per source
    1-cell, shaped G f . theta_C => theta_D . F f."""

    F: TwoFunctor
    G: TwoFunctor
    comp: dict                 # object -> 1-cell of the target
    coh: dict                  # 1-cell -> 2-cell of the target

    def key(self):
        return (tuple(sorted(self.comp.items())), tuple(sorted(self.coh.items())))

    def validate(self):
        S = self.F.source
        D = self.F.target
        for o in sorted(S.objects):
            c = self.comp.get(o)
            if c not in D.one_cells:
                raise CoherenceViolation("component", o, "missing 1-cell")
            if D.one_cells[c] != (self.F.ob[o], self.G.ob[o]):
                raise CoherenceViolation("component boundary", o)
        for f in sorted(S.one_cells):
            n = self.coh.get(f)
            if n not in D.two_cells:
                raise CoherenceViolation("coherence", f, "missing 2-cell")
            s, t = S.one_cells[f]
            want = (D.hcomp1[(self.G.on1[f], self.comp[s])],
                    D.hcomp1[(self.comp[t], self.F.on1[f])])
            if D.two_cells[n] != want:
                raise CoherenceViolation("coherence boundary", f)
            if not D.two_invertible(n):
                raise CoherenceViolation("invertibility", f)
        for o in sorted(S.objects):
            if self.coh[S.id1[o]] != D.id2[self.comp[o]]:
                raise CoherenceViolation("PN0", o)
        for (g, f), gf in sorted(S.hcomp1.items()):
            lhs = D.vcomp[(D.hcomp2[(self.coh[g], D.id2[self.F.on1[f]])],
                           D.hcomp2[(D.id2[self.G.on1[g]], self.coh[f])])]
            if lhs != self.coh[gf]:
                raise CoherenceViolation("PN1", (g, f))
        for a in sorted(S.two_cells):
            f, g = S.two_cells[a]
            s, t = S.one_cells[f]
            lhs = D.vcomp[(self.coh[g],
                           D.hcomp2[(self.G.on2[a], D.id2[self.comp[s]])])]
            rhs = D.vcomp[(D.hcomp2[(D.id2[self.comp[t]], self.F.on2[a])],
                           self.coh[f])]
            if lhs != rhs:
                raise CoherenceViolation("PN2", a)
        return self


@dataclass
class HostModification:
    theta: HostPseudoNat
    eta: HostPseudoNat
    comp: dict                 # object -> 2-cell of the target

    def validate(self):
        S = self.theta.F.source
        D = self.theta.F.target
        F, G = self.theta.F, self.theta.G
        for o in sorted(S.objects):
            c = self.comp.get(o)
            if c not in D.two_cells:
                raise CoherenceViolation("modification component", o, "missing")
            if D.two_cells[c] != (self.theta.comp[o], self.eta.comp[o]):
                raise CoherenceViolation("modification boundary", o)
        for f in sorted(S.one_cells):
            s, t = S.one_cells[f]
            lhs = D.vcomp[(D.hcomp2[(self.comp[t], D.id2[F.on1[f]])],
                           self.theta.coh[f])]
            rhs = D.vcomp[(self.eta.coh[f],
                           D.hcomp2[(D.id2[G.on1[f]], self.comp[s])])]
            if lhs != rhs:
                raise CoherenceViolation("modification", f)
        return self


def enumerate_host_pseudonats(F, G, budget=None):
    """All host-valued transformations F => G, by brute force over
    component and coherence tables."""
    budget = budget or Budget()
    S = F.source
    D = F.target
    objs = sorted(S.objects)
    ident = {S.id1[o] for o in S.objects}
    non_id = sorted(f for f in S.one_cells if f not in ident)
    found = []

    def fill_coh(comp, k, coh):
        if k == len(non_id):
            budget.charge()
            cand = HostPseudoNat(F, G, dict(comp), dict(coh))
            for o in objs:
                cand.coh[S.id1[o]] = D.id2[comp[o]]
            try:
                cand.validate()
            except CoherenceViolation:
                return
            found.append(cand)
            return
        f = non_id[k]
        s, t = S.one_cells[f]
        src = D.hcomp1[(G.on1[f], comp[s])]
        tgt = D.hcomp1[(comp[t], F.on1[f])]
        for n in D.two_cells_between(src, tgt):
            if not D.two_invertible(n):
                continue
            coh[f] = n
            fill_coh(comp, k + 1, coh)
            del coh[f]

    def fill_comp(k, comp):
        if k == len(objs):
            fill_coh(comp, 0, {})
            return
        o = objs[k]
        for c in D.hom_1cells(F.ob[o], G.ob[o]):
            comp[o] = c
            fill_comp(k + 1, comp)
            del comp[o]

    fill_comp(0, {})
    found.sort(key=lambda t: t.key())
    return found


def enumerate_host_modifications(theta, eta, budget=None):
    budget = budget or Budget()
    S = theta.F.source
    D = theta.F.target
    objs = sorted(S.objects)
    found = []

    def extend(k, comp):
        if k == len(objs):
            budget.charge()
            cand = HostModification(theta, eta, dict(comp))
            try:
                cand.validate()
            except CoherenceViolation:
                return
            found.append(cand)
            return
        o = objs[k]
        for c in D.two_cells_between(theta.comp[o], eta.comp[o]):
            comp[o] = c
            extend(k + 1, comp)
            del comp[o]

    extend(0, {})
    return found

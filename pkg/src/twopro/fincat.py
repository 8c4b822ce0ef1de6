"""Finite categories as total tables, plus functors and natural
transformations between them.

Every construction downstream (hom categories, colimits, limits of
category-valued diagrams) lands in this representation, so equality of
objects and morphisms is always equality of string ids within one table.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    AxiomViolation,
    DanglingBoundary,
    DuplicateId,
    MissingCompositeEntry,
    NotComposable,
)


@dataclass
class FinCat:
    """A finite category: objects, morphisms with boundaries, identity
    assignment and a total composition table on composable pairs."""

    objects: tuple
    morphisms: dict            # id -> (src, tgt)
    identity: dict             # object -> identity morphism id
    comp: dict                 # (g, f) -> g after f
    obj_data: dict = field(default_factory=dict, repr=False, compare=False)
    mor_data: dict = field(default_factory=dict, repr=False, compare=False)

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    def id_of(self, obj):
        return self.identity[obj]

    def is_identity(self, m):
        return self.identity.get(self.src(m)) == m and self.src(m) == self.tgt(m)

    def compose(self, g, f):
        if self.tgt(f) != self.src(g):
            raise NotComposable(f"cannot compose {g!r} after {f!r}")
        return self.comp[(g, f)]

    def compose_chain(self, *ms):
        """Compose a chain listed outermost-first: compose_chain(h, g, f)."""
        acc = ms[-1]
        for m in reversed(ms[:-1]):
            acc = self.compose(m, acc)
        return acc

    def hom(self, a, b):
        return sorted(m for m, (s, t) in self.morphisms.items() if s == a and t == b)

    def inverse(self, m):
        """The two-sided inverse of m, or None."""
        s, t = self.morphisms[m]
        for n in self.hom(t, s):
            if self.comp[(n, m)] == self.identity[s] and self.comp[(m, n)] == self.identity[t]:
                return n
        return None

    def is_iso(self, m):
        return self.inverse(m) is not None

    def key(self):
        return (
            tuple(sorted(self.objects)),
            tuple(sorted((m, s, t) for m, (s, t) in self.morphisms.items())),
            tuple(sorted(self.identity.items())),
            tuple(sorted((g, f, r) for (g, f), r in self.comp.items())),
        )

    def same_tables(self, other):
        return self.key() == other.key()

    def validate(self):
        """Exhaustive check of the category axioms; raises on the first
        violation in a fixed scan order."""
        seen = set()
        for o in self.objects:
            if o in seen:
                raise DuplicateId("object", o)
            seen.add(o)
        objset = set(self.objects)
        for m in sorted(self.morphisms):
            s, t = self.morphisms[m]
            if s not in objset:
                raise DanglingBoundary("morphism", m, f"source {s!r} unknown")
            if t not in objset:
                raise DanglingBoundary("morphism", m, f"target {t!r} unknown")
        for o in sorted(objset):
            i = self.identity.get(o)
            if i is None or i not in self.morphisms:
                raise MissingCompositeEntry("identity", o)
            if self.morphisms[i] != (o, o):
                raise DanglingBoundary("identity", i, f"not an endomorphism of {o!r}")
        mors = sorted(self.morphisms)
        for g, f in sorted(self.comp):
            if g not in self.morphisms or f not in self.morphisms:
                raise DanglingBoundary("comp", (g, f), "unknown morphism")
            if self.src(g) != self.tgt(f):
                raise AxiomViolation("composability", (g, f), "entry on non-composable pair")
            r = self.comp[(g, f)]
            if r not in self.morphisms:
                raise DanglingBoundary("comp", (g, f), f"unknown result {r!r}")
            if self.morphisms[r] != (self.src(f), self.tgt(g)):
                raise AxiomViolation("composite-boundary", (g, f), f"result {r!r}")
        for g in mors:
            for f in mors:
                if self.src(g) == self.tgt(f) and (g, f) not in self.comp:
                    raise MissingCompositeEntry("comp", (g, f))
        for m in mors:
            s, t = self.morphisms[m]
            if self.comp[(m, self.identity[s])] != m:
                raise AxiomViolation("right-identity", (m, self.identity[s]))
            if self.comp[(self.identity[t], m)] != m:
                raise AxiomViolation("left-identity", (self.identity[t], m))
        for h in mors:
            for g in mors:
                if self.src(h) != self.tgt(g):
                    continue
                for f in mors:
                    if self.src(g) != self.tgt(f):
                        continue
                    if self.comp[(self.comp[(h, g)], f)] != self.comp[(h, self.comp[(g, f)])]:
                        raise AxiomViolation("associativity", (h, g, f))
        return self


def fincat_from_json(data):
    """Build a FinCat from the serialized table format (strict keys)."""
    allowed = {"objects", "morphisms", "identity", "comp"}
    extra = set(data) - allowed
    if extra:
        raise DanglingBoundary("fincat", sorted(extra)[0], "unknown key")
    morphisms = {}
    for row in data["morphisms"]:
        if row["id"] in morphisms:
            raise DuplicateId("morphism", row["id"])
        morphisms[row["id"]] = (row["src"], row["tgt"])
    comp = {(row["g"], row["f"]): row["result"] for row in data["comp"]}
    cat = FinCat(tuple(data["objects"]), morphisms, dict(data["identity"]), comp)
    return cat.validate()


def fincat_to_json(cat):
    return {
        "objects": sorted(cat.objects),
        "morphisms": [
            {"id": m, "src": s, "tgt": t}
            for m, (s, t) in sorted(cat.morphisms.items())
        ],
        "identity": dict(sorted(cat.identity.items())),
        "comp": [
            {"g": g, "f": f, "result": r} for (g, f), r in sorted(cat.comp.items())
        ],
    }


def terminal_cat():
    return FinCat(("*",), {"id": ("*", "*")}, {"*": "id"}, {("id", "id"): "id"})


def discrete_cat(names):
    objects = tuple(names)
    morphisms = {f"id_{o}": (o, o) for o in objects}
    identity = {o: f"id_{o}" for o in objects}
    comp = {(f"id_{o}", f"id_{o}"): f"id_{o}" for o in objects}
    return FinCat(objects, morphisms, identity, comp)


def empty_cat():
    return FinCat((), {}, {}, {})


@dataclass
class CatFunctor:
    """A functor between FinCats as a pair of total mapping tables."""

    source: FinCat
    target: FinCat
    ob: dict
    mor: dict

    def key(self):
        return (tuple(sorted(self.ob.items())), tuple(sorted(self.mor.items())))

    def __eq__(self, other):
        return isinstance(other, CatFunctor) and self.key() == other.key()

    def apply(self, x):
        return self.ob[x]

    def apply_mor(self, m):
        return self.mor[m]

    def validate(self):
        for x in self.source.objects:
            if self.ob.get(x) not in self.target.objects:
                raise AxiomViolation("functor-object", x, "image missing")
        for m in sorted(self.source.morphisms):
            im = self.mor.get(m)
            if im not in self.target.morphisms:
                raise AxiomViolation("functor-morphism", m, "image missing")
            s, t = self.source.morphisms[m]
            if self.target.morphisms[im] != (self.ob[s], self.ob[t]):
                raise AxiomViolation("functor-boundary", m, f"image {im!r}")
        for o in sorted(self.source.objects):
            if self.mor[self.source.identity[o]] != self.target.identity[self.ob[o]]:
                raise AxiomViolation("functor-identity", o)
        for (g, f), r in sorted(self.source.comp.items()):
            if self.target.comp[(self.mor[g], self.mor[f])] != self.mor[r]:
                raise AxiomViolation("functor-composition", (g, f))
        return self


def identity_functor(cat):
    return CatFunctor(cat, cat, {o: o for o in cat.objects},
                      {m: m for m in cat.morphisms})


def compose_functors(g, f):
    """g after f."""
    assert g.source.same_tables(f.target)
    return CatFunctor(f.source, g.target,
                      {x: g.ob[f.ob[x]] for x in f.source.objects},
                      {m: g.mor[f.mor[m]] for m in f.source.morphisms})


def constant_functor(source, target, obj):
    return CatFunctor(source, target,
                      {x: obj for x in source.objects},
                      {m: target.identity[obj] for m in source.morphisms})


@dataclass
class CatNat:
    """A natural transformation between parallel CatFunctors, stored as
    its component table."""

    F: CatFunctor
    G: CatFunctor
    comp: dict                 # source object -> morphism of target

    def key(self):
        return tuple(sorted(self.comp.items()))

    def __eq__(self, other):
        return (isinstance(other, CatNat) and self.F == other.F
                and self.G == other.G and self.key() == other.key())

    def at(self, x):
        return self.comp[x]

    def validate(self):
        cat = self.F.target
        for x in sorted(self.F.source.objects):
            c = self.comp.get(x)
            if c not in cat.morphisms:
                raise AxiomViolation("nat-component", x, "missing component")
            if cat.morphisms[c] != (self.F.ob[x], self.G.ob[x]):
                raise AxiomViolation("nat-boundary", x, f"component {c!r}")
        for m in sorted(self.F.source.morphisms):
            s, t = self.F.source.morphisms[m]
            left = cat.compose(self.comp[t], self.F.mor[m])
            right = cat.compose(self.G.mor[m], self.comp[s])
            if left != right:
                raise AxiomViolation("naturality", m)
        return self

    def is_invertible(self):
        cat = self.F.target
        return all(cat.is_iso(c) for c in self.comp.values())

    def inverse(self):
        cat = self.F.target
        return CatNat(self.G, self.F,
                      {x: cat.inverse(c) for x, c in self.comp.items()})


def identity_nat(F):
    return CatNat(F, F, {x: F.target.identity[F.ob[x]] for x in F.source.objects})


def nat_vcomp(b, a):
    """Vertical composite b after a (a: F => G, b: G => H)."""
    cat = a.F.target
    return CatNat(a.F, b.G, {x: cat.compose(b.comp[x], a.comp[x])
                             for x in a.F.source.objects})


def nat_hcomp(b, a):
    """Horizontal composite: a: F => G between A -> B, b: H => K between
    B -> C; result H.F => K.G with components K(a_x) . b_{F x}."""
    cat = b.F.target
    return CatNat(
        compose_functors(b.F, a.F),
        compose_functors(b.G, a.G),
        {x: cat.compose(b.G.mor[a.comp[x]], b.comp[a.F.ob[x]])
         for x in a.F.source.objects},
    )


def whisker_post(H, a):
    """H . a : H F => H G for a functor H out of the common target."""
    return CatNat(compose_functors(H, a.F), compose_functors(H, a.G),
                  {x: H.mor[a.comp[x]] for x in a.F.source.objects})


def whisker_pre(a, H):
    """a . H : F H => G H for a functor H into the common source."""
    return CatNat(compose_functors(a.F, H), compose_functors(a.G, H),
                  {x: a.comp[H.ob[x]] for x in H.source.objects})


def all_functors(A, B, budget=None):
    """Every functor A -> B, in lexicographic order of mapping tables.

    Enumerates object maps, then extends morphism-by-morphism with early
    boundary pruning; functor laws are checked on each completion.
    """
    objs = sorted(A.objects)
    mors = sorted(m for m in A.morphisms if not A.is_identity(m))
    results = []
    if not objs:
        return [CatFunctor(A, B, {}, {})]
    for ob_images in product(sorted(B.objects), repeat=len(objs)):
        ob = dict(zip(objs, ob_images))
        mor = {A.identity[o]: B.identity[ob[o]] for o in objs}

        def extend(k):
            if budget is not None:
                budget.charge()
            if k == len(mors):
                cand = CatFunctor(A, B, dict(ob), dict(mor))
                try:
                    cand.validate()
                except AxiomViolation:
                    return
                results.append(cand)
                return
            m = mors[k]
            s, t = A.morphisms[m]
            for im in B.hom(ob[s], ob[t]):
                mor[m] = im
                extend(k + 1)
                del mor[m]

        extend(0)
    results.sort(key=lambda F: F.key())
    return results


def all_nats(F, G, budget=None, invertible_only=False):
    """Every natural transformation F => G, lexicographic by components."""
    cat = F.target
    objs = sorted(F.source.objects)
    results = []

    def extend(k, comp):
        if budget is not None:
            budget.charge()
        if k == len(objs):
            cand = CatNat(F, G, dict(comp))
            try:
                cand.validate()
            except AxiomViolation:
                return
            if invertible_only and not cand.is_invertible():
                return
            results.append(cand)
            return
        x = objs[k]
        for c in cat.hom(F.ob[x], G.ob[x]):
            if invertible_only and not cat.is_iso(c):
                continue
            comp[x] = c
            extend(k + 1, comp)
            del comp[x]

    extend(0, {})
    results.sort(key=lambda n: n.key())
    return results


def functor_bijective(F):
    """Is F an isomorphism of categories (bijective on objects and
    morphisms)?  Returns (ok, witness)."""
    ob_img = sorted(F.ob.values())
    if ob_img != sorted(F.target.objects):
        return False, {"part": "objects", "images": ob_img}
    mor_img = sorted(F.mor.values())
    if mor_img != sorted(F.target.morphisms):
        return False, {"part": "morphisms", "images": mor_img}
    return True, None


def inverse_functor(F):
    ok, witness = functor_bijective(F)
    if not ok:
        raise NotComposable(f"functor is not invertible: {witness}")
    return CatFunctor(F.target, F.source,
                      {v: k for k, v in F.ob.items()},
                      {v: k for k, v in F.mor.items()})


def isomorphic_fincats(A, B):
    """Search for an isomorphism A -> B; returns one or None."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return None
    for F in all_functors(A, B):
        if functor_bijective(F)[0]:
            return F
    return None

"""The standard small 2-categories, categories and diagrams used by the
test-suite and shipped as CLI example inputs."""

from .fincat import CatFunctor, CatNat, FinCat, discrete_cat, terminal_cat
from .transforms import CatValuedFunctor, constant_cat_functor
from .twocat import Fin2Cat, validate_two_category


def locally_discrete(cat):
    """The 2-category with the same objects and 1-cells as a FinCat and
    identity 2-cells only."""
    two_cells = {f"id2_{f}": (f, f) for f in cat.morphisms}
    id2 = {f: f"id2_{f}" for f in cat.morphisms}
    vcomp = {(id2[f], id2[f]): id2[f] for f in cat.morphisms}
    hcomp2 = {(id2[g], id2[f]): id2[r] for (g, f), r in cat.comp.items()}
    return Fin2Cat(
        objects=tuple(cat.objects),
        one_cells=dict(cat.morphisms),
        two_cells=two_cells,
        id1=dict(cat.identity),
        id2=id2,
        vcomp=vcomp,
        hcomp1=dict(cat.comp),
        hcomp2=hcomp2,
    )


def terminal_two_cat():
    return locally_discrete(terminal_cat())


def discrete_two_cat(names):
    return locally_discrete(discrete_cat(names))


def poset01_cat():
    """The poset 0 <= 1 as a FinCat."""
    return FinCat(
        ("0", "1"),
        {"i0": ("0", "0"), "i1": ("1", "1"), "u": ("0", "1")},
        {"0": "i0", "1": "i1"},
        {("i0", "i0"): "i0", ("i1", "i1"): "i1",
         ("u", "i0"): "u", ("i1", "u"): "u"},
    )


def poset01_two_cat():
    return locally_discrete(poset01_cat())


def iso_host():
    """Two objects A, B; parallel 1-cells f, g: A -> B; one invertible
    2-cell s: f => g.  The smallest host with a non-identity 2-cell."""
    one = {"1A": ("A", "A"), "1B": ("B", "B"), "f": ("A", "B"), "g": ("A", "B")}
    two = {"i1A": ("1A", "1A"), "i1B": ("1B", "1B"),
           "if": ("f", "f"), "ig": ("g", "g"),
           "s": ("f", "g"), "si": ("g", "f")}
    vcomp = {
        ("i1A", "i1A"): "i1A", ("i1B", "i1B"): "i1B",
        ("if", "if"): "if", ("ig", "ig"): "ig",
        ("s", "if"): "s", ("ig", "s"): "s",
        ("si", "ig"): "si", ("if", "si"): "si",
        ("si", "s"): "if", ("s", "si"): "ig",
    }
    hcomp1 = {("1A", "1A"): "1A", ("1B", "1B"): "1B",
              ("f", "1A"): "f", ("1B", "f"): "f",
              ("g", "1A"): "g", ("1B", "g"): "g"}
    hcomp2 = {("i1A", "i1A"): "i1A", ("i1B", "i1B"): "i1B"}
    for c in ("if", "ig", "s", "si"):
        hcomp2[(c, "i1A")] = c
        hcomp2[("i1B", c)] = c
    return Fin2Cat(("A", "B"), one, two, {"A": "1A", "B": "1B"},
                   {"1A": "i1A", "1B": "i1B", "f": "if", "g": "ig"},
                   vcomp, hcomp1, hcomp2)


def _walking_iso_hom(x, y, fwd, bwd):
    """FinCat on objects {x, y} with one isomorphism fwd/bwd between them."""
    return FinCat((x, y),
                  {f"i{x}": (x, x), f"i{y}": (y, y), fwd: (x, y), bwd: (y, x)},
                  {x: f"i{x}", y: f"i{y}"},
                  {(f"i{x}", f"i{x}"): f"i{x}", (f"i{y}", f"i{y}"): f"i{y}",
                   (fwd, f"i{x}"): fwd, (f"i{y}", fwd): fwd,
                   (bwd, f"i{y}"): bwd, (f"i{x}", bwd): bwd,
                   (bwd, fwd): f"i{x}", (fwd, bwd): f"i{y}"})


def _indiscrete_cat(names):
    """Exactly one morphism between any ordered pair of objects."""
    names = tuple(names)

    def m(x, y):
        return f"i{x}" if x == y else f"m_{x}_{y}"

    morphisms = {m(x, y): (x, y) for x in names for y in names}
    comp = {(m(y, z), m(x, y)): m(x, z)
            for x in names for y in names for z in names}
    return FinCat(names, morphisms, {x: f"i{x}" for x in names}, comp)


def chain_iso_host():
    """Objects A, B, C with invertible 2-cells s: f => g (A -> B) and
    t: h => k (B -> C); the hom category A -> C is indiscrete on the four
    composites, so it has genuinely non-identity interchange instances."""
    one = {"1A": ("A", "A"), "1B": ("B", "B"), "1C": ("C", "C"),
           "f": ("A", "B"), "g": ("A", "B"),
           "h": ("B", "C"), "k": ("B", "C"),
           "hf": ("A", "C"), "hg": ("A", "C"), "kf": ("A", "C"), "kg": ("A", "C")}
    homs = {
        ("A", "A"): discrete_cat(("1A",)),
        ("B", "B"): discrete_cat(("1B",)),
        ("C", "C"): discrete_cat(("1C",)),
        ("A", "B"): _walking_iso_hom("f", "g", "s", "si"),
        ("B", "C"): _walking_iso_hom("h", "k", "t", "ti"),
        ("A", "C"): _indiscrete_cat(("hf", "hg", "kf", "kg")),
    }
    two, id2, vcomp = {}, {}, {}
    for hom in homs.values():
        two.update(hom.morphisms)
        id2.update(hom.identity)
        vcomp.update(hom.comp)
    hcomp1 = {}
    for f, (fs, ft) in one.items():
        for g, (gs, gt) in one.items():
            if gs != ft:
                continue
            if g.startswith("1"):
                hcomp1[(g, f)] = f
            elif f.startswith("1"):
                hcomp1[(g, f)] = g
            else:
                hcomp1[(g, f)] = g + f
    cell_hom = {}
    for pair, hom in homs.items():
        for c in hom.morphisms:
            cell_hom[c] = pair
    hcomp2 = {}
    for b, (bsrc, btgt) in two.items():
        for a, (asrc, atgt) in two.items():
            if cell_hom[b][0] != cell_hom[a][1]:
                continue
            if cell_hom[a][0] == cell_hom[a][1]:
                hcomp2[(b, a)] = b          # whisker by an identity 1-cell
            elif cell_hom[b][0] == cell_hom[b][1]:
                hcomp2[(b, a)] = a
            else:
                src = hcomp1[(bsrc, asrc)]
                tgt = hcomp1[(btgt, atgt)]
                hcomp2[(b, a)] = id2[src] if src == tgt else f"m_{src}_{tgt}"
    return Fin2Cat(("A", "B", "C"), one, two,
                   {"A": "1A", "B": "1B", "C": "1C"}, id2, vcomp, hcomp1, hcomp2)


def z2_cat():
    """One object with a single non-identity involution; the smallest
    category with two parallel isomorphisms."""
    return FinCat(("*",), {"e": ("*", "*"), "s": ("*", "*")}, {"*": "e"},
                  {("e", "e"): "e", ("e", "s"): "s",
                   ("s", "e"): "s", ("s", "s"): "e"})


def chain012_cat():
    """The poset 0 <= 1 <= 2 as a FinCat."""
    mor = {"i0": ("0", "0"), "i1": ("1", "1"), "i2": ("2", "2"),
           "u": ("0", "1"), "v": ("1", "2"), "w": ("0", "2")}
    comp = {}
    for m, (s, t) in mor.items():
        comp[(m, f"i{s}")] = m
        comp[(f"i{t}", m)] = m
    comp[("v", "u")] = "w"
    return FinCat(("0", "1", "2"), mor, {"0": "i0", "1": "i1", "2": "i2"}, comp)


def chain012_two_cat():
    return locally_discrete(chain012_cat())


def z2_diagram(index_two_cat):
    """The diagram constant at the involution category, with identity
    transition functors; every locally discrete index works."""
    I = index_two_cat
    Z = z2_cat()
    idf = CatFunctor(Z, Z, {"*": "*"}, {"e": "e", "s": "s"})
    on1 = {f: idf for f in I.one_cells}
    on2 = {c: CatNat(idf, idf, {"*": "e"}) for c in I.two_cells}
    return CatValuedFunctor(I, {o: Z for o in I.objects}, on1, on2).validate()


def suspension_z2_host():
    """The strict 2-group on one object with the two-element group in both
    dimensions: 1-cells {1, w} with w w = 1, and on each 1-cell a Z/2 of
    2-cells; horizontal composition adds decorations.  Coherence choices
    of host-valued transformations are genuinely free here."""
    one = {"1": ("O", "O"), "w": ("O", "O")}
    cells = {("1", 0): "i1", ("1", 1): "sh", ("w", 0): "iw", ("w", 1): "sg"}
    two = {name: (f, f) for (f, _), name in cells.items()}
    vcomp = {}
    for f in one:
        for d1 in (0, 1):
            for d2 in (0, 1):
                vcomp[(cells[(f, d2)], cells[(f, d1)])] = cells[(f, (d1 + d2) % 2)]
    hcomp1 = {("1", "1"): "1", ("1", "w"): "w",
              ("w", "1"): "w", ("w", "w"): "1"}
    hcomp2 = {}
    for (fb, db), b in cells.items():
        for (fa, da), a in cells.items():
            hcomp2[(b, a)] = cells[(hcomp1[(fb, fa)], (da + db) % 2)]
    return Fin2Cat(("O",), one, two, {"O": "1"},
                   {"1": "i1", "w": "iw"}, vcomp, hcomp1, hcomp2)


def arrow_cat():
    """The walking arrow as a FinCat."""
    return FinCat(("x", "y"),
                  {"ix": ("x", "x"), "iy": ("y", "y"), "ar": ("x", "y")},
                  {"x": "ix", "y": "iy"},
                  {("ix", "ix"): "ix", ("iy", "iy"): "iy",
                   ("ar", "ix"): "ar", ("iy", "ar"): "ar"})


def iso_cat():
    """The walking isomorphism as a FinCat."""
    return FinCat(("x", "y"),
                  {"ix": ("x", "x"), "iy": ("y", "y"),
                   "e": ("x", "y"), "ei": ("y", "x")},
                  {"x": "ix", "y": "iy"},
                  {("ix", "ix"): "ix", ("iy", "iy"): "iy",
                   ("e", "ix"): "e", ("iy", "e"): "e",
                   ("ei", "iy"): "ei", ("ix", "ei"): "ei",
                   ("ei", "e"): "ix", ("e", "ei"): "iy"})


def poset01_diagram():
    """The category-valued diagram on the 0 <= 1 index with a discrete
    two-object fiber over 0 and the terminal fiber over 1."""
    I = poset01_two_cat()
    F0 = discrete_cat(("a", "b"))
    F1 = terminal_cat()
    Fu = CatFunctor(F0, F1, {"a": "*", "b": "*"}, {"id_a": "id", "id_b": "id"})
    on1 = {"i0": CatFunctor(F0, F0, {"a": "a", "b": "b"},
                            {"id_a": "id_a", "id_b": "id_b"}),
           "i1": CatFunctor(F1, F1, {"*": "*"}, {"id": "id"}),
           "u": Fu}
    on2 = {I.id2[f]: CatNat(on1[f], on1[f],
                            {x: on1[f].target.identity[on1[f].ob[x]]
                             for x in on1[f].source.objects})
           for f in I.one_cells}
    return CatValuedFunctor(I, {"0": F0, "1": F1}, on1, on2).validate()


def constant_diagram(index, value):
    return constant_cat_functor(index, value).validate()


ALL_TWO_CATEGORIES = {
    "terminal": terminal_two_cat,
    "poset01": poset01_two_cat,
    "chain012": chain012_two_cat,
    "iso_host": iso_host,
    "chain_iso_host": chain_iso_host,
    "suspension_z2": suspension_z2_host,
}


def fixture_two_categories():
    return {name: validate_two_category(make()) for name, make in ALL_TWO_CATEGORIES.items()}

"""Fully tabulated finite 2-categories.

A Fin2Cat stores every cell and every composition entry explicitly, so
all axioms (hom-category laws, horizontal unit/associativity laws, the
interchange law and its whiskered forms) are decidable and are checked
exhaustively.  Validation reports the first violation in a fixed scan
order: objects, then 1-cells, then 2-cells, lexicographically by id.
"""

from dataclasses import dataclass

from .errors import (
    AxiomViolation,
    DanglingBoundary,
    DuplicateId,
    MissingCompositeEntry,
    NotComposable,
    UnknownObject,
)
from .fincat import FinCat


@dataclass
class Fin2Cat:
    objects: tuple
    one_cells: dict            # id -> (src object, tgt object)
    two_cells: dict            # id -> (src 1-cell, tgt 1-cell), parallel
    id1: dict                  # object -> identity 1-cell
    id2: dict                  # 1-cell -> identity 2-cell
    vcomp: dict                # (b, a) -> b after a, within one hom
    hcomp1: dict               # (g, f) -> g after f
    hcomp2: dict               # (b, a) -> horizontal composite b a

    def one_src(self, f):
        return self.one_cells[f][0]

    def one_tgt(self, f):
        return self.one_cells[f][1]

    def two_src(self, a):
        return self.two_cells[a][0]

    def two_tgt(self, a):
        return self.two_cells[a][1]

    def two_src_obj(self, a):
        return self.one_src(self.two_src(a))

    def two_tgt_obj(self, a):
        return self.one_tgt(self.two_src(a))

    def compose1(self, g, f):
        if self.one_src(g) != self.one_tgt(f):
            raise NotComposable(f"1-cells {g!r} after {f!r}")
        return self.hcomp1[(g, f)]

    def compose1_chain(self, *fs):
        acc = fs[-1]
        for f in reversed(fs[:-1]):
            acc = self.compose1(f, acc)
        return acc

    def vcompose(self, b, a):
        if self.two_src(b) != self.two_tgt(a):
            raise NotComposable(f"2-cells {b!r} after {a!r} (vertical)")
        return self.vcomp[(b, a)]

    def vcompose_chain(self, *cells):
        acc = cells[-1]
        for c in reversed(cells[:-1]):
            acc = self.vcompose(c, acc)
        return acc

    def hcompose(self, b, a):
        if self.two_src_obj(b) != self.two_tgt_obj(a):
            raise NotComposable(f"2-cells {b!r} and {a!r} (horizontal)")
        return self.hcomp2[(b, a)]

    def whisker(self, side, cell, by):
        """Horizontal composite of `cell` with the identity 2-cell of the
        1-cell `by`; side names where `by` lands in the juxtaposition."""
        if cell not in self.two_cells:
            raise NotComposable(f"unknown 2-cell {cell!r}")
        if by not in self.one_cells:
            raise NotComposable(f"unknown 1-cell {by!r}")
        if side == "left":
            return self.hcompose(self.id2[by], cell)
        if side == "right":
            return self.hcompose(cell, self.id2[by])
        raise NotComposable(f"unknown side {side!r}")

    def hom_1cells(self, a, b):
        return sorted(f for f, (s, t) in self.one_cells.items() if s == a and t == b)

    def two_cells_between(self, f, g):
        return sorted(c for c, (s, t) in self.two_cells.items() if s == f and t == g)

    def two_inverse(self, a):
        """Vertical inverse of a 2-cell, or None."""
        f, g = self.two_cells[a]
        for b in self.two_cells_between(g, f):
            if self.vcomp[(b, a)] == self.id2[f] and self.vcomp[(a, b)] == self.id2[g]:
                return b
        return None

    def two_invertible(self, a):
        return self.two_inverse(a) is not None

    def key(self):
        return (
            tuple(sorted(self.objects)),
            tuple(sorted((f, s, t) for f, (s, t) in self.one_cells.items())),
            tuple(sorted((c, s, t) for c, (s, t) in self.two_cells.items())),
            tuple(sorted(self.id1.items())),
            tuple(sorted(self.id2.items())),
            tuple(sorted((b, a, r) for (b, a), r in self.vcomp.items())),
            tuple(sorted((g, f, r) for (g, f), r in self.hcomp1.items())),
            tuple(sorted((b, a, r) for (b, a), r in self.hcomp2.items())),
        )

    def same_tables(self, other):
        return self.key() == other.key()


def hom_category(C, a, b):
    """The vertical-composition category of 1-cells a -> b."""
    if a not in C.objects:
        raise UnknownObject(a)
    if b not in C.objects:
        raise UnknownObject(b)
    objs = tuple(C.hom_1cells(a, b))
    objset = set(objs)
    mors = {c: (s, t) for c, (s, t) in C.two_cells.items() if s in objset}
    identity = {f: C.id2[f] for f in objs}
    comp = {(y, x): r for (y, x), r in C.vcomp.items() if x in mors}
    return FinCat(objs, mors, identity, comp)


def dualize(C):
    """Reverse 1-cells, keep 2-cells; an involution on the tables."""
    return Fin2Cat(
        objects=C.objects,
        one_cells={f: (t, s) for f, (s, t) in C.one_cells.items()},
        two_cells=dict(C.two_cells),
        id1=dict(C.id1),
        id2=dict(C.id2),
        vcomp=dict(C.vcomp),
        hcomp1={(g, f): r for (f, g), r in C.hcomp1.items()},
        hcomp2={(b, a): r for (a, b), r in C.hcomp2.items()},
    )


def _structural_pass(C):
    seen = set()
    for o in C.objects:
        if o in seen:
            raise DuplicateId("object", o)
        seen.add(o)
    for f in C.one_cells:
        if f in seen:
            raise DuplicateId("1-cell", f)
        seen.add(f)
    for c in C.two_cells:
        if c in seen:
            raise DuplicateId("2-cell", c)
        seen.add(c)
    objset = set(C.objects)
    for f in sorted(C.one_cells):
        s, t = C.one_cells[f]
        if s not in objset:
            raise DanglingBoundary("1-cell", f, f"source {s!r} unknown")
        if t not in objset:
            raise DanglingBoundary("1-cell", f, f"target {t!r} unknown")
    for c in sorted(C.two_cells):
        s, t = C.two_cells[c]
        if s not in C.one_cells:
            raise DanglingBoundary("2-cell", c, f"source {s!r} unknown")
        if t not in C.one_cells:
            raise DanglingBoundary("2-cell", c, f"target {t!r} unknown")
        if C.one_cells[s] != C.one_cells[t]:
            raise DanglingBoundary("2-cell", c, "boundary 1-cells not parallel")
    for o in sorted(objset):
        i = C.id1.get(o)
        if i is None or i not in C.one_cells:
            raise MissingCompositeEntry("id1", o)
        if C.one_cells[i] != (o, o):
            raise DanglingBoundary("id1", i, f"not an endo-1-cell of {o!r}")
    for f in sorted(C.one_cells):
        i = C.id2.get(f)
        if i is None or i not in C.two_cells:
            raise MissingCompositeEntry("id2", f)
        if C.two_cells[i] != (f, f):
            raise DanglingBoundary("id2", i, f"not an endo-2-cell of {f!r}")


def _table_domain_pass(C):
    ones = sorted(C.one_cells)
    twos = sorted(C.two_cells)
    for (b, a) in sorted(C.vcomp):
        if b not in C.two_cells or a not in C.two_cells:
            raise DanglingBoundary("vcomp", (b, a), "unknown 2-cell")
        if C.two_src(b) != C.two_tgt(a):
            raise AxiomViolation("vcomp-composability", (b, a), "entry on non-composable pair")
        r = C.vcomp[(b, a)]
        if r not in C.two_cells:
            raise DanglingBoundary("vcomp", (b, a), f"unknown result {r!r}")
        if C.two_cells[r] != (C.two_src(a), C.two_tgt(b)):
            raise AxiomViolation("vcomp-boundary", (b, a), f"result {r!r}")
    for b in twos:
        for a in twos:
            if C.two_src(b) == C.two_tgt(a) and (b, a) not in C.vcomp:
                raise MissingCompositeEntry("vcomp", (b, a))
    for (g, f) in sorted(C.hcomp1):
        if g not in C.one_cells or f not in C.one_cells:
            raise DanglingBoundary("hcomp1", (g, f), "unknown 1-cell")
        if C.one_src(g) != C.one_tgt(f):
            raise AxiomViolation("hcomp1-composability", (g, f), "entry on non-composable pair")
        r = C.hcomp1[(g, f)]
        if r not in C.one_cells:
            raise DanglingBoundary("hcomp1", (g, f), f"unknown result {r!r}")
        if C.one_cells[r] != (C.one_src(f), C.one_tgt(g)):
            raise AxiomViolation("hcomp1-boundary", (g, f), f"result {r!r}")
    for g in ones:
        for f in ones:
            if C.one_src(g) == C.one_tgt(f) and (g, f) not in C.hcomp1:
                raise MissingCompositeEntry("hcomp1", (g, f))
    for (b, a) in sorted(C.hcomp2):
        if b not in C.two_cells or a not in C.two_cells:
            raise DanglingBoundary("hcomp2", (b, a), "unknown 2-cell")
        if C.two_src_obj(b) != C.two_tgt_obj(a):
            raise AxiomViolation("hcomp2-composability", (b, a), "entry on non-composable pair")
        r = C.hcomp2[(b, a)]
        if r not in C.two_cells:
            raise DanglingBoundary("hcomp2", (b, a), f"unknown result {r!r}")
        want = (C.hcomp1[(C.two_src(b), C.two_src(a))],
                C.hcomp1[(C.two_tgt(b), C.two_tgt(a))])
        if C.two_cells[r] != want:
            raise AxiomViolation("hcomp2-boundary", (b, a), f"result {r!r}")
    for b in twos:
        for a in twos:
            if C.two_src_obj(b) == C.two_tgt_obj(a) and (b, a) not in C.hcomp2:
                raise MissingCompositeEntry("hcomp2", (b, a))


def _axiom_pass(C):
    ones = sorted(C.one_cells)
    twos = sorted(C.two_cells)
    # each hom is a category under vertical composition
    for a in sorted(C.objects):
        for b in sorted(C.objects):
            hom_category(C, a, b).validate()
    # horizontal composition of 1-cells: unital and associative
    for f in ones:
        s, t = C.one_cells[f]
        if C.hcomp1[(f, C.id1[s])] != f:
            raise AxiomViolation("hcomp1-right-unit", (f, C.id1[s]))
        if C.hcomp1[(C.id1[t], f)] != f:
            raise AxiomViolation("hcomp1-left-unit", (C.id1[t], f))
    for h in ones:
        for g in ones:
            if C.one_src(h) != C.one_tgt(g):
                continue
            for f in ones:
                if C.one_src(g) != C.one_tgt(f):
                    continue
                if C.hcomp1[(C.hcomp1[(h, g)], f)] != C.hcomp1[(h, C.hcomp1[(g, f)])]:
                    raise AxiomViolation("hcomp1-associativity", (h, g, f))
    # horizontal composition of 2-cells: units, functoriality on identities
    for a in twos:
        so, to = C.two_src_obj(a), C.two_tgt_obj(a)
        if C.hcomp2[(a, C.id2[C.id1[so]])] != a:
            raise AxiomViolation("hcomp2-right-unit", (a, C.id2[C.id1[so]]))
        if C.hcomp2[(C.id2[C.id1[to]], a)] != a:
            raise AxiomViolation("hcomp2-left-unit", (C.id2[C.id1[to]], a))
    for g in ones:
        for f in ones:
            if C.one_src(g) != C.one_tgt(f):
                continue
            if C.hcomp2[(C.id2[g], C.id2[f])] != C.id2[C.hcomp1[(g, f)]]:
                raise AxiomViolation("hcomp2-identities", (g, f))
    # associativity of horizontal composition of 2-cells
    for c in twos:
        for b in twos:
            if C.two_src_obj(c) != C.two_tgt_obj(b):
                continue
            for a in twos:
                if C.two_src_obj(b) != C.two_tgt_obj(a):
                    continue
                if C.hcomp2[(C.hcomp2[(c, b)], a)] != C.hcomp2[(c, C.hcomp2[(b, a)])]:
                    raise AxiomViolation("hcomp2-associativity", (c, b, a))
    # interchange, and the whiskered exchange identities it specializes to
    for bp in twos:
        for b in twos:
            if C.two_src_obj(bp) != C.two_tgt_obj(b):
                continue
            # whiskered exchange on the horizontally composable pair (bp, b)
            f, g = C.two_cells[b]
            fp, gp = C.two_cells[bp]
            both = C.hcomp2[(bp, b)]
            upper = C.vcomp[(C.hcomp2[(bp, C.id2[g])], C.hcomp2[(C.id2[fp], b)])]
            lower = C.vcomp[(C.hcomp2[(C.id2[gp], b)], C.hcomp2[(bp, C.id2[f])])]
            if upper != both or lower != both:
                raise AxiomViolation("whisker-exchange", (bp, b))
            for ap in twos:
                if C.two_src(ap) != C.two_tgt(bp):
                    continue
                for a in twos:
                    if C.two_src(a) != C.two_tgt(b) or C.two_src_obj(ap) != C.two_tgt_obj(a):
                        continue
                    lhs = C.vcomp[(C.hcomp2[(ap, a)], C.hcomp2[(bp, b)])]
                    rhs = C.hcomp2[(C.vcomp[(ap, bp)], C.vcomp[(a, b)])]
                    if lhs != rhs:
                        raise AxiomViolation("interchange", (ap, a, bp, b))


TWOCAT_KEYS = {"format", "objects", "one_cells", "two_cells",
               "id1", "id2", "vcomp", "hcomp1", "hcomp2"}


def _cells_from_rows(kind, rows):
    out = {}
    for row in rows:
        if row["id"] in out:
            raise DuplicateId(kind, row["id"])
        out[row["id"]] = (row["src"], row["tgt"])
    return out


def _pairs_from_rows(rows):
    return {(row["g"], row["f"]): row["result"] for row in rows}


def two_cat_from_json(data):
    extra = sorted(set(data) - TWOCAT_KEYS)
    if extra:
        raise DanglingBoundary("2-category", extra[0], "unknown key")
    vrows = [{"g": r["g"], "f": r["f"], "result": r["result"]} for r in data.get("vcomp", [])]
    return Fin2Cat(
        objects=tuple(data["objects"]),
        one_cells=_cells_from_rows("1-cell", data["one_cells"]),
        two_cells=_cells_from_rows("2-cell", data["two_cells"]),
        id1=dict(data["id1"]),
        id2=dict(data["id2"]),
        vcomp=_pairs_from_rows(vrows),
        hcomp1=_pairs_from_rows(data["hcomp1"]),
        hcomp2=_pairs_from_rows(data["hcomp2"]),
    )


def two_cat_to_json(C):
    def cells(table):
        return [{"id": i, "src": s, "tgt": t} for i, (s, t) in sorted(table.items())]

    def pairs(table):
        return [{"g": g, "f": f, "result": r} for (g, f), r in sorted(table.items())]

    return {
        "format": 1,
        "objects": sorted(C.objects),
        "one_cells": cells(C.one_cells),
        "two_cells": cells(C.two_cells),
        "id1": dict(sorted(C.id1.items())),
        "id2": dict(sorted(C.id2.items())),
        "vcomp": pairs(C.vcomp),
        "hcomp1": pairs(C.hcomp1),
        "hcomp2": pairs(C.hcomp2),
    }


def validate_two_category(raw):
    """Validate serialized tables (or an in-memory Fin2Cat) exhaustively.

    Returns the validated Fin2Cat or raises the first violation found.
    """
    C = raw if isinstance(raw, Fin2Cat) else two_cat_from_json(raw)
    _structural_pass(C)
    _table_domain_pass(C)
    _axiom_pass(C)
    return C

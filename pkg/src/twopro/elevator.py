"""A small pasting-expression language for 2-cells laid out on a grid.

An expression is a sequence of rows read top to bottom; each row is a
horizontal juxtaposition of columns, where a column is either a named
2-cell or an identity column `id(f)` on a named 1-cell.  Evaluation
horizontally composes each row and vertically composes the rows.
Normalization slides cells upward and leftward past identity columns
(the interchange rewrite) until each row carries exactly one cell with
the earliest placement boundary constraints allow.  Equality is decided
by evaluation; normal forms only explain the verdict.
"""

from dataclasses import dataclass

from .errors import BoundaryMismatch, ElevatorSyntaxError, UnknownCell


@dataclass(frozen=True)
class Column:
    """One grid column: a 2-cell name, or an identity column on a 1-cell."""

    name: str
    is_identity: bool

    def render(self):
        return f"id({self.name})" if self.is_identity else self.name


@dataclass
class ElevatorExpr:
    rows: list                 # list of lists of Column
    host: object = None

    def render(self):
        return " ; ".join(
            "[" + " | ".join(c.render() for c in row) + "]" for row in self.rows)


def _tokenize(text):
    line, col = 1, 0
    i = 0
    tokens = []
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 0
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in "[]|;()":
            tokens.append((ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isalnum() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ElevatorSyntaxError(line, col, f"unexpected character {ch!r}")
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def where(self):
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
            return line, col
        if self.tokens:
            _, line, col = self.tokens[-1]
            return line, col + 1
        return 1, 0

    def expect(self, tok):
        if self.peek() != tok:
            line, col = self.where()
            raise ElevatorSyntaxError(line, col, f"expected {tok!r}, found {self.peek()!r}")
        self.pos += 1

    def ident(self):
        tok = self.peek()
        if tok is None or tok in "[]|;()":
            line, col = self.where()
            raise ElevatorSyntaxError(line, col, "expected a name")
        self.pos += 1
        return tok

    def column(self):
        if self.peek() == "id":
            self.pos += 1
            self.expect("(")
            name = self.ident()
            self.expect(")")
            return Column(name, True)
        return Column(self.ident(), False)

    def row(self):
        self.expect("[")
        cols = [self.column()]
        while self.peek() == "|":
            self.pos += 1
            cols.append(self.column())
        self.expect("]")
        return cols

    def expression(self):
        rows = [self.row()]
        while self.peek() == ";":
            self.pos += 1
            rows.append(self.row())
        if self.peek() is not None:
            line, col = self.where()
            raise ElevatorSyntaxError(line, col, f"trailing input {self.peek()!r}")
        return rows


def _column_boundaries(C, col, where):
    """(top 1-cell, bottom 1-cell) of a column, resolved in the host."""
    row, pos = where
    if col.is_identity:
        if col.name not in C.one_cells:
            raise UnknownCell(col.name, f"row {row}, column {pos}: not a 1-cell")
        return col.name, col.name
    if col.name not in C.two_cells:
        raise UnknownCell(col.name, f"row {row}, column {pos}: not a 2-cell")
    return C.two_cells[col.name]


def _row_boundaries(C, cols, rownum):
    """Compose column boundaries left to right; columns apply like
    function composition, rightmost innermost."""
    tops, bots = [], []
    for pos, col in enumerate(cols):
        t, b = _column_boundaries(C, col, (rownum, pos))
        tops.append(t)
        bots.append(b)
    for pos in range(len(cols) - 1):
        left_src = C.one_src(tops[pos])
        right_tgt = C.one_tgt(tops[pos + 1])
        if left_src != right_tgt:
            raise BoundaryMismatch((rownum, pos),
                                   f"columns {pos} and {pos + 1} do not meet")
    top = tops[-1]
    for t in reversed(tops[:-1]):
        top = C.hcomp1[(t, top)]
    bot = bots[-1]
    for b in reversed(bots[:-1]):
        bot = C.hcomp1[(b, bot)]
    return top, bot


def parse_elevator(text, host):
    """Parse and boundary-check an expression against a host 2-category."""
    rows = _Parser(_tokenize(text)).expression()
    expr = ElevatorExpr(rows, host)
    boundaries = [_row_boundaries(host, row, n) for n, row in enumerate(rows)]
    for n in range(len(rows) - 1):
        if boundaries[n][1] != boundaries[n + 1][0]:
            raise BoundaryMismatch((n + 1, 0),
                                   f"row {n} ends at {boundaries[n][1]!r} but "
                                   f"row {n + 1} starts at {boundaries[n + 1][0]!r}")
    return expr


def expr_boundary(expr):
    C = expr.host
    tops = [_row_boundaries(C, row, n) for n, row in enumerate(expr.rows)]
    return tops[0][0], tops[-1][1]


def _eval_row(C, cols):
    cells = [C.id2[col.name] if col.is_identity else col.name for col in cols]
    acc = cells[-1]
    for c in reversed(cells[:-1]):
        acc = C.hcomp2[(c, acc)]
    return acc


def eval_elevator(expr, host=None):
    """Horizontally compose each row, then vertically compose top down."""
    C = host or expr.host
    rows = [_eval_row(C, row) for row in expr.rows]
    acc = rows[0]
    for r in rows[1:]:
        acc = C.vcomp[(r, acc)]
    return acc


def _split_rows(C, rows):
    """Rewrite every row into single-cell rows, firing cells left first;
    all-identity rows pass through unchanged."""
    out = []
    for row in rows:
        hot = [p for p, col in enumerate(row) if not col.is_identity]
        if len(hot) <= 1:
            out.append(list(row))
            continue
        bounds = [_column_boundaries(C, col, (0, p)) for p, col in enumerate(row)]
        for which, p in enumerate(hot):
            new = []
            for q, col in enumerate(row):
                if q == p:
                    new.append(col)
                elif q in hot[:which + 1]:
                    new.append(Column(bounds[q][1], True))   # already fired
                else:
                    new.append(Column(bounds[q][0], True))   # not yet fired
            out.append(new)
    return out


def _drop_identity_rows(rows):
    keep = [row for row in rows if any(not c.is_identity for c in row)]
    if keep:
        return keep
    return rows[:1]


def _try_swap(C, upper, lower):
    """If the lower row's cell can ride up past the upper row's cell
    (disjoint columns, aligned identities), return the swapped pair."""
    if len(upper) != len(lower):
        return None
    hot_u = [p for p, col in enumerate(upper) if not col.is_identity]
    hot_l = [p for p, col in enumerate(lower) if not col.is_identity]
    if len(hot_u) != 1 or len(hot_l) != 1:
        return None
    pu, pl = hot_u[0], hot_l[0]
    if pl >= pu:
        return None
    cell_u, cell_l = upper[pu], lower[pl]
    top_u = C.two_cells[cell_u.name][0]
    bot_l = C.two_cells[cell_l.name][1]
    # the upper row must be an identity over the lower cell's top, and the
    # lower row an identity over the upper cell's bottom
    if not (lower[pu].is_identity and upper[pl].is_identity):
        return None
    # rows stack by composite boundary; an interchange move additionally
    # needs the column factorizations to agree slot by slot
    for q in range(len(upper)):
        bot_q = (upper[q].name if upper[q].is_identity
                 else C.two_cells[upper[q].name][1])
        top_q = (lower[q].name if lower[q].is_identity
                 else C.two_cells[lower[q].name][0])
        if bot_q != top_q:
            return None
    new_upper = list(upper)
    new_lower = list(lower)
    new_upper[pl] = cell_l
    new_upper[pu] = Column(top_u, True)
    new_lower[pl] = Column(bot_l, True)
    new_lower[pu] = cell_u
    return new_upper, new_lower


def normalize_elevator(expr):
    """The staircase form: one cell per row, cells as high then as far
    left as the interchange rewrite allows."""
    C = expr.host
    rows = _split_rows(C, expr.rows)
    rows = _drop_identity_rows(rows)
    changed = True
    while changed:
        changed = False
        for n in range(len(rows) - 1):
            swapped = _try_swap(C, rows[n], rows[n + 1])
            if swapped is not None:
                rows[n], rows[n + 1] = swapped
                changed = True
    out = ElevatorExpr(rows, C)
    assert eval_elevator(out) == eval_elevator(expr)
    return out


def equal_elevator(e1, e2, host=None):
    """Decide equality by evaluation; the verdict comes with both normal
    forms as the explanation."""
    C = host or e1.host
    b1, b2 = expr_boundary(e1), expr_boundary(e2)
    if b1 != b2:
        raise BoundaryMismatch("expressions", f"{b1!r} versus {b2!r}")
    v1 = eval_elevator(e1, C)
    v2 = eval_elevator(e2, C)
    return {
        "equal": v1 == v2,
        "left_value": v1,
        "right_value": v2,
        "left_normal": normalize_elevator(e1).render(),
        "right_normal": normalize_elevator(e2).render(),
    }


# ---------------------------------------------------------------------------
# rendering coherence equations of host-valued transformations

def _cell(name):
    return Column(name, False)


def _ident(name):
    return Column(name, True)


def render_pn1(theta, g, f):
    """Both sides of the composite-coherence law as expressions: sliding
    the two coherence cells past each other against the single cell over
    the composite."""
    S = theta.F.source
    gf = S.hcomp1[(g, f)]
    lhs = ElevatorExpr([
        [_ident(theta.G.on1[g]), _cell(theta.coh[f])],
        [_cell(theta.coh[g]), _ident(theta.F.on1[f])],
    ], theta.F.target)
    rhs = ElevatorExpr([[_cell(theta.coh[gf])]], theta.F.target)
    return lhs, rhs


def render_pn2(theta, a):
    """Both sides of the 2-cell compatibility law."""
    S = theta.F.source
    f, g = S.two_cells[a]
    s, t = S.one_cells[f]
    lhs = ElevatorExpr([
        [_cell(theta.G.on2[a]), _ident(theta.comp[s])],
        [_cell(theta.coh[g])],
    ], theta.F.target)
    rhs = ElevatorExpr([
        [_cell(theta.coh[f])],
        [_ident(theta.comp[t]), _cell(theta.F.on2[a])],
    ], theta.F.target)
    return lhs, rhs


def render_modification(rho, f):
    """Both sides of the modification law at one source 1-cell."""
    theta, eta = rho.theta, rho.eta
    S = theta.F.source
    s, t = S.one_cells[f]
    lhs = ElevatorExpr([
        [_cell(theta.coh[f])],
        [_cell(rho.comp[t]), _ident(theta.F.on1[f])],
    ], theta.F.target)
    rhs = ElevatorExpr([
        [_ident(theta.G.on1[f]), _cell(rho.comp[s])],
        [_cell(eta.coh[f])],
    ], theta.F.target)
    return lhs, rhs


def confirm_rendered_equations(theta, modifications=()):
    """Render every composite/2-cell coherence instance of a validated
    transformation (and the law of each given modification) and check they
    evaluate equal; returns the number of confirmed instances."""
    S = theta.F.source
    confirmed = 0
    for (g, f) in sorted(S.hcomp1):
        lhs, rhs = render_pn1(theta, g, f)
        if not equal_elevator(lhs, rhs)["equal"]:
            raise AssertionError(f"rendered composite law fails at {(g, f)!r}")
        confirmed += 1
    for a in sorted(S.two_cells):
        lhs, rhs = render_pn2(theta, a)
        if not equal_elevator(lhs, rhs)["equal"]:
            raise AssertionError(f"rendered 2-cell law fails at {a!r}")
        confirmed += 1
    for rho in modifications:
        for f in sorted(S.one_cells):
            lhs, rhs = render_modification(rho, f)
            if not equal_elevator(lhs, rhs)["equal"]:
                raise AssertionError(f"rendered modification law fails at {f!r}")
            confirmed += 1
    return confirmed

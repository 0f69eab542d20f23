"""
Exact linear algebra over Q and simple algebraic extensions of Q.

Scalars are python ints, ``fractions.Fraction`` or ``NumberFieldElement``.
Matrices are sparse and column oriented; vectors are plain dicts
``{index: scalar}`` with no stored zeros.

Rank uses fraction-free elimination: over Q every row is scaled to a
primitive integer row and rows are combined as ``a*row - b*pivot`` with
``a, b`` coprime.  Small problems go through dense Bareiss elimination.

    >>> m = SparseMatrix.from_dense([[1, 2], [2, 4]])
    >>> rank(m)
    1
    >>> [sorted(v.items()) for v in kernel(m).vectors()]
    [[(0, -2), (1, 1)]]
"""

from fractions import Fraction
from math import gcd
from heapq import heappush, heappop
from collections import defaultdict


class Inconsistent(ValueError):
    pass


class NotAField(ArithmeticError):
    pass


def norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def qq(x):
    """Parse an int, Fraction or a string "p/q"."""
    if isinstance(x, str):
        return norm(Fraction(x.strip()))
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    return norm(x)


def is_rational(x):
    return type(x) is int or type(x) is Fraction


def fmt_scalar(x):
    x = norm(x)
    if type(x) is int:
        return str(x)
    if type(x) is Fraction:
        return "%d/%d" % (x.numerator, x.denominator)
    return str(x)


# ---------------------------------------------------------------------------
# Q[t]/(f)

def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = _poly_trim(a)
    b = _poly_trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                       for i in range(n)])


class NumberField:
    """Q[t]/(f) for a monic f given by its coefficient list (low degree first).

    Irreducibility is not checked up front; a non-invertible element
    raises NotAField when division is attempted.
    """

    def __init__(self, modulus, name="t"):
        mod = [Fraction(qq(c)) for c in modulus]
        mod = _poly_trim(mod)
        if len(mod) < 2:
            raise ValueError("modulus must have positive degree")
        lead = mod[-1]
        self.modulus = tuple(c / lead for c in mod)
        self.degree = len(mod) - 1
        self.name = name

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "NumberField(%s)" % (list(map(fmt_scalar, self.modulus)),)

    def elem(self, coeffs):
        return NumberFieldElement(self, coeffs)

    @property
    def gen(self):
        return self.elem([0, 1])

    def reduce(self, p):
        _, r = _poly_divmod(p, list(self.modulus))
        r = r + [Fraction(0)] * (self.degree - len(r))
        return tuple(r)


class NumberFieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs):
        self.field = field
        coeffs = [Fraction(qq(x)) for x in coeffs]
        if len(coeffs) > field.degree:
            self.c = field.reduce(coeffs)
        else:
            self.c = tuple(coeffs + [Fraction(0)] * (field.degree - len(coeffs)))

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise TypeError("mixing elements of different fields")
            return other
        if is_rational(other):
            return NumberFieldElement(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement(self.field, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement(self.field, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            return NumberFieldElement(self.field, [a * other for a in self.c])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement(self.field, self.field.reduce(_poly_mul(list(self.c), list(o.c))))

    __rmul__ = __mul__

    def inverse(self):
        # extended Euclid on (self, modulus)
        a = _poly_trim(list(self.c))
        if not a:
            raise ZeroDivisionError("inverse of zero")
        b = list(self.field.modulus)
        s0, s1 = [Fraction(1)], []
        while b:
            q, r = _poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if len(a) != 1:
            raise NotAField("modulus is reducible: element is a zero divisor")
        return NumberFieldElement(self.field, [x / a[0] for x in s0])

    def __truediv__(self, other):
        if is_rational(other):
            return NumberFieldElement(self.field, [a / other for a in self.c])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = NumberFieldElement(self.field, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if is_rational(other):
            return self.c[0] == other and not any(self.c[1:])
        if isinstance(other, NumberFieldElement):
            return self.field == other.field and self.c == other.c
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(fmt_scalar(a) + ("" if i == 0 else "*%s^%d" % (self.field.name, i)))
        return " + ".join(terms) if terms else "0"

    __str__ = __repr__


# ---------------------------------------------------------------------------
# vectors

def vadd(u, v, c=1):
    """u + c*v as a new dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = norm(y)
        else:
            out.pop(k, None)
    return out


def vadd_into(u, v, c=1):
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y:
            u[k] = y
        else:
            u.pop(k, None)
    return u


def vscale(v, c):
    if not c:
        return {}
    return {k: norm(c * x) for k, x in v.items()}


def vclean(v):
    return {k: norm(x) for k, x in v.items() if x}


# ---------------------------------------------------------------------------
# matrices

class SparseMatrix:
    """Sparse matrix stored by columns: ``cols[j] = {i: a_ij}``."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {}
        if cols:
            for j, col in cols.items():
                col = vclean(col)
                if col:
                    self.cols[j] = col

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        m.cols = {j: {j: 1} for j in range(n)}
        return m

    @classmethod
    def from_dense(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = defaultdict(dict)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                x = qq(x) if not isinstance(x, NumberFieldElement) else x
                if x:
                    cols[j][i] = x
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows, columns):
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            col = vclean(col)
            if col:
                m.cols[j] = col
        return m

    @classmethod
    def from_function(cls, nrows, ncols, f):
        """Column j is the dict ``f(j)``."""
        m = cls(nrows, ncols)
        for j in range(ncols):
            col = vclean(f(j))
            if col:
                m.cols[j] = col
        return m

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.cols.get(j, {}).get(i, 0)

    def column(self, j):
        return self.cols.get(j, {})

    def nnz(self):
        return sum(len(c) for c in self.cols.values())

    def is_zero(self):
        return not self.cols

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in self.cols.items():
            for i, x in col.items():
                out[i][j] = x
        return out

    def rows(self):
        """Row dicts ``{j: a_ij}`` keyed by row index (only nonzero rows)."""
        out = defaultdict(dict)
        for j, col in self.cols.items():
            for i, x in col.items():
                out[i][j] = x
        return dict(out)

    def transpose(self):
        m = SparseMatrix(self.ncols, self.nrows)
        m.cols = self.rows()
        return m

    T = property(transpose)

    def apply(self, v):
        out = {}
        for j, x in v.items():
            col = self.cols.get(j)
            if col:
                vadd_into(out, col, x)
        return vclean(out)

    def __matmul__(self, other):
        if isinstance(other, dict):
            return self.apply(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        m = SparseMatrix(self.nrows, other.ncols)
        for j, col in other.cols.items():
            out = self.apply(col)
            if out:
                m.cols[j] = out
        return m

    def _combine(self, other, c):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))
        m = SparseMatrix(self.nrows, self.ncols)
        m.cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            out = vadd(m.cols.get(j, {}), col, c)
            if out:
                m.cols[j] = out
            else:
                m.cols.pop(j, None)
        return m

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        m = SparseMatrix(self.nrows, self.ncols)
        if c:
            m.cols = {j: vscale(col, c) for j, col in self.cols.items()}
        return m

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __hash__(self):
        return None  # mutable-ish container, not hashable

    def __pow__(self, k):
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        out = SparseMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __repr__(self):
        return "SparseMatrix(%dx%d, nnz=%d)" % (self.nrows, self.ncols, self.nnz())

    def first_difference(self, other):
        """Some (i, j) where the two matrices differ, or None."""
        for j in sorted(set(self.cols) | set(other.cols)):
            a, b = self.cols.get(j, {}), other.cols.get(j, {})
            if a != b:
                for i in sorted(set(a) | set(b)):
                    if a.get(i, 0) != b.get(i, 0):
                        return (i, j)
        return None

    def select_rows(self, idx):
        """Submatrix with rows ``idx`` (in that order)."""
        pos = {i: k for k, i in enumerate(idx)}
        m = SparseMatrix(len(idx), self.ncols)
        for j, col in self.cols.items():
            out = {pos[i]: x for i, x in col.items() if i in pos}
            if out:
                m.cols[j] = out
        return m

    def select_cols(self, idx):
        m = SparseMatrix(self.nrows, len(idx))
        for k, j in enumerate(idx):
            col = self.cols.get(j)
            if col:
                m.cols[k] = dict(col)
        return m


def hstack(mats, nrows=None):
    if nrows is None:
        nrows = mats[0].nrows
    out = SparseMatrix(nrows, sum(m.ncols for m in mats))
    off = 0
    for m in mats:
        if m.nrows != nrows:
            raise ValueError("row mismatch in hstack")
        for j, col in m.cols.items():
            out.cols[off + j] = dict(col)
        off += m.ncols
    return out


def vstack(mats, ncols=None):
    if ncols is None:
        ncols = mats[0].ncols
    out = SparseMatrix(sum(m.nrows for m in mats), ncols)
    off = 0
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("column mismatch in vstack")
        for j, col in m.cols.items():
            tgt = out.cols.setdefault(j, {})
            for i, x in col.items():
                tgt[off + i] = x
        off += m.nrows
    return out


def block_matrix(row_sizes, col_sizes, blocks):
    """Assemble from ``blocks[(r, c)] = SparseMatrix`` (missing blocks are zero)."""
    roff = [0]
    for s in row_sizes:
        roff.append(roff[-1] + s)
    coff = [0]
    for s in col_sizes:
        coff.append(coff[-1] + s)
    out = SparseMatrix(roff[-1], coff[-1])
    for (r, c), m in blocks.items():
        if m.shape != (row_sizes[r], col_sizes[c]):
            raise ValueError("block (%d,%d) has shape %s" % (r, c, m.shape))
        for j, col in m.cols.items():
            tgt = out.cols.setdefault(coff[c] + j, {})
            for i, x in col.items():
                y = tgt.get(roff[r] + i, 0) + x
                if y:
                    tgt[roff[r] + i] = y
                else:
                    tgt.pop(roff[r] + i, None)
    out.cols = {j: col for j, col in out.cols.items() if col}
    return out


# ---------------------------------------------------------------------------
# elimination

def _primitive(row):
    """Scale a rational row to coprime integers (sign kept)."""
    den = 1
    for x in row.values():
        if type(x) is Fraction:
            d = x.denominator
            den = den * d // gcd(den, d)
    if den != 1:
        row = {k: int(x * den) for k, x in row.items()}
    else:
        row = {k: int(x) for k, x in row.items()}
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        row = {k: x // g for k, x in row.items()}
    return row


def _all_rational(rows):
    for row in rows.values():
        for x in row.values():
            if not is_rational(x):
                return False
    return True


def bareiss_rank(dense):
    """Rank of a small dense rational matrix by Bareiss elimination."""
    if not dense or not dense[0]:
        return 0
    den = 1
    for row in dense:
        for x in row:
            if type(x) is Fraction:
                den = den * x.denominator // gcd(den, x.denominator)
    a = [[int(x * den) for x in row] for row in dense]
    n, m = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, n):
            ai = a[i]
            f = ai[c]
            for k in range(c + 1, m):
                ai[k] = (p * ai[k] - f * a[r][k]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == n:
            break
    return r


class _Elimination:
    """Sparse elimination with Markowitz-style pivoting.

    Pivot column: fewest remaining nonzeros; pivot row: shortest row in
    that column, ties broken by smallest row index.  Records the pivot
    rows as they were when chosen (an echelon form up to ordering).
    """

    def __init__(self, rows, exact_int=None):
        self.rows = {r: dict(row) for r, row in rows.items() if row}
        if exact_int is None:
            exact_int = _all_rational(self.rows)
        self.exact_int = exact_int
        if exact_int:
            self.rows = {r: _primitive(row) for r, row in self.rows.items()}
        self.pivots = []  # (col, row_id, row)

    def run(self, forbid=None):
        """Eliminate.  Columns in ``forbid`` are never chosen as pivots
        unless nothing else is left in a row (used for augmented systems)."""
        rows = self.rows
        colrows = defaultdict(set)
        for r, row in rows.items():
            for c in row:
                colrows[c].add(r)
        heap = []
        for c, s in colrows.items():
            heappush(heap, (1 if forbid and c in forbid else 0, len(s), c))
        while heap:
            pri, cnt, c = heappop(heap)
            s = colrows.get(c)
            if not s:
                continue
            if len(s) != cnt:
                heappush(heap, (pri, len(s), c))
                continue
            p = min(s, key=lambda r: (len(rows[r]), r))
            prow = rows.pop(p)
            for cc in prow:
                colrows[cc].discard(p)
            pv = prow[c]
            touched = set()
            for r in list(colrows[c]):
                row = rows[r]
                f = row[c]
                if self.exact_int:
                    g = gcd(pv, f)
                    a, b = pv // g, f // g
                    if a != 1:
                        for cc in row:
                            row[cc] *= a
                else:
                    b = f / pv
                for cc, v in prow.items():
                    nv = row.get(cc, 0) - b * v
                    if nv:
                        if cc not in row:
                            colrows[cc].add(r)
                            touched.add(cc)
                        row[cc] = nv
                    else:
                        del row[cc]
                        colrows[cc].discard(r)
                        touched.add(cc)
                if not row:
                    del rows[r]
                elif self.exact_int:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        for cc in row:
                            row[cc] //= g
            del colrows[c]
            for cc in touched:
                if cc in colrows and colrows[cc]:
                    heappush(heap, (1 if forbid and cc in forbid else 0, len(colrows[cc]), cc))
            self.pivots.append((c, p, prow))
        return self

    def rank(self):
        return len(self.pivots)

    def rref(self):
        """Reduced rows ``{pivot_col: row}`` with row[pivot_col] == 1."""
        red = {}
        # later pivots never contain earlier pivot columns
        for c, _, row in reversed(self.pivots):
            row = {k: Fraction(v) if self.exact_int else v for k, v in row.items()}
            for cc in [k for k in row if k in red and k != c]:
                f = row.get(cc)
                if f:
                    vadd_into(row, red[cc], -f)
            pv = row[c]
            red[c] = {k: norm(v / pv) for k, v in row.items() if v}
        return red


def _block_components(rows):
    """Split row dicts into connected components (rows sharing a column)."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    colfirst = {}
    for r, row in rows.items():
        parent[r] = r
        for c in row:
            if c in colfirst:
                a, b = find(r), find(colfirst[c])
                if a != b:
                    parent[a] = b
            else:
                colfirst[c] = r
    comps = defaultdict(dict)
    for r, row in rows.items():
        comps[find(r)][r] = row
    return list(comps.values())


DENSE_LIMIT = 64


def rank(m):
    """Exact rank of a SparseMatrix."""
    rows = m.rows() if isinstance(m, SparseMatrix) else dict(enumerate(m))
    rows = {r: row for r, row in rows.items() if row}
    if not rows:
        return 0
    exact = _all_rational(rows)
    total = 0
    for comp in _block_components(rows):
        cols = set()
        for row in comp.values():
            cols.update(row)
        if exact and len(comp) <= DENSE_LIMIT and len(cols) <= DENSE_LIMIT:
            cl = sorted(cols)
            pos = {c: k for k, c in enumerate(cl)}
            dense = []
            for row in comp.values():
                d = [0] * len(cl)
                for c, x in row.items():
                    d[pos[c]] = x
                dense.append(d)
            total += bareiss_rank(dense)
        else:
            total += _Elimination(comp, exact).run().rank()
    return total


def rref_rows(rows):
    """RREF of a family of row vectors: ``{pivot: row}``."""
    rows = {r: row for r, row in rows.items() if row}
    if not rows:
        return {}
    return _Elimination(rows).run().rref()


class Subspace:
    """Subspace of Q^n held in reduced row echelon form.

    ``basis[p]`` has a 1 at column ``p`` and otherwise only entries at
    non-pivot columns.  The standard vectors at non-pivot columns give
    a canonical complement, used for quotient coordinates.
    """

    def __init__(self, ambient, basis):
        self.ambient = ambient
        self.basis = basis
        self.pivots = sorted(basis)
        self._pos = {p: k for k, p in enumerate(self.pivots)}
        self._free = None

    @classmethod
    def span(cls, ambient, vectors):
        return cls(ambient, rref_rows(dict(enumerate(vectors))))

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [self.basis[p] for p in self.pivots]

    def reduce(self, v):
        """Remainder of v modulo the subspace (supported on non-pivots)."""
        v = dict(v)
        for p in [k for k in v if k in self.basis]:
            f = v.get(p)
            if f:
                vadd_into(v, self.basis[p], -f)
        return vclean(v)

    def contains(self, v):
        return not self.reduce(v)

    def coordinates(self, v):
        """Coordinates in ``vectors()`` order; raises if v is outside."""
        coords = {self._pos[p]: x for p, x in v.items() if p in self.basis and x}
        check = dict(v)
        for k, x in coords.items():
            vadd_into(check, self.basis[self.pivots[k]], -x)
        if vclean(check):
            raise Inconsistent("vector is not in the subspace")
        return vclean(coords)

    def complement(self):
        """Sorted non-pivot columns."""
        if self._free is None:
            self._free = [j for j in range(self.ambient) if j not in self.basis]
        return self._free

    def inclusion(self):
        """Ambient x dim matrix whose columns are the basis."""
        return SparseMatrix.from_columns(self.ambient, self.vectors())

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.vectors())


def kernel(m):
    """Kernel of m as a Subspace of Q^ncols."""
    red = rref_rows(m.rows())
    basis = {}
    free = [j for j in range(m.ncols) if j not in red]
    inv = defaultdict(dict)
    for p, row in red.items():
        for j, x in row.items():
            if j != p:
                inv[j][p] = x
    for f in free:
        v = {f: 1}
        for p, x in inv.get(f, {}).items():
            v[p] = norm(-x)
        basis[f] = v
    return Subspace(m.ncols, basis)


def image(m):
    return Subspace.span(m.nrows, [col for _, col in sorted(m.cols.items())])


def solve(a, b):
    """One solution x of a x = b, raising Inconsistent if there is none."""
    if isinstance(b, SparseMatrix):
        b = b.column(0)
    aug = a.ncols
    rows = a.rows()
    for i, x in b.items():
        rows.setdefault(i, {})[aug] = x
    el = _Elimination({r: row for r, row in rows.items() if row}).run(forbid={aug})
    red = el.rref()
    if aug in red:
        raise Inconsistent("system has no solution")
    x = {}
    for p, row in red.items():
        val = row.get(aug, 0)
        if val:
            x[p] = val
    return vclean(x)


def quotient_dim(sub, within):
    """dim(within / sub); both are Subspaces and sub must lie in within."""
    if not within.contains_subspace(sub):
        raise Inconsistent("subspace is not contained in the larger space")
    return within.dim - sub.dim


def restrict(op, source, target):
    """Matrix of op: source -> target in the Subspace bases."""
    cols = []
    for v in source.vectors():
        cols.append(target.coordinates(op.apply(v)))
    return SparseMatrix.from_columns(target.dim, cols)


def on_quotient(op, source_rel, target_rel, source_dim=None, check=True):
    """Induced map on quotients by relation subspaces.

    Coordinates on a quotient V/W are the entries at the non-pivot
    columns of W.  With ``check`` the map is verified to send W into W.
    """
    if check:
        for v in source_rel.vectors():
            if target_rel.reduce(op.apply(v)):
                raise Inconsistent("operator does not preserve the relation subspace")
    sfree = source_rel.complement()
    tfree = target_rel.complement()
    tpos = {j: k for k, j in enumerate(tfree)}
    cols = []
    for j in sfree:
        w = target_rel.reduce(op.column(j))
        cols.append({tpos[i]: x for i, x in w.items()})
    return SparseMatrix.from_columns(len(tfree), cols)


def kron(a, b):
    """Kronecker product, index (i, k) -> i * b.nrows + k."""
    m = SparseMatrix(a.nrows * b.nrows, a.ncols * b.ncols)
    for j, ca in a.cols.items():
        for l, cb in b.cols.items():
            col = {}
            for i, x in ca.items():
                for k, y in cb.items():
                    col[i * b.nrows + k] = x * y
            m.cols[j * b.ncols + l] = vclean(col)
    m.cols = {j: c for j, c in m.cols.items() if c}
    return m

"""Dense exact linear algebra: matrices, row-echelon form, subspaces.

Convention, fixed project-wide: vectors are ROW vectors and a matrix M of
shape (r, c) represents the linear map F^r -> F^c, v |-> v * M.  Composition
"f then g" is therefore the matrix product M_f * M_g.

Subspaces are stored as reduced row-echelon bases with no zero rows, so two
subspaces are equal exactly when their stored bases are equal entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .fields import Field


def _rref_in_place(field, rows, ncols, pivot_limit=None):
    """Full reduced row echelon form; returns (rows, pivot_columns).

    Pivots are only searched in columns < pivot_limit, which lets the same
    routine run on augmented systems.
    """
    limit = ncols if pivot_limit is None else pivot_limit
    zero = field.zero
    one = field.one
    sub, mul = field.sub, field.mul
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        head = rows[r][c]
        if head != one:
            inv = field.inv(head)
            rows[r] = [mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor != zero:
                ri = rows[i]
                rows[i] = [sub(x, mul(factor, y)) for x, y in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("negative matrix dimensions")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InputError("matrix entries do not match declared shape")

    @staticmethod
    def from_rows(field, rows):
        ent = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        ncols = len(ent[0]) if ent else 0
        return Matrix(field, len(ent), ncols, ent)

    @staticmethod
    def from_rows_shaped(field, rows, ncols):
        """Like from_rows but keeps the column count of an empty row list."""
        ent = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        return Matrix(field, len(ent), ncols, ent)

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Matrix(field, n, n, tuple(
            tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(field, r, c):
        z = field.zero
        return Matrix(field, r, c, tuple(tuple(z for _ in range(c)) for _ in range(r)))

    def row(self, i):
        return self.entries[i]

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)

    def transpose(self) -> "Matrix":
        ent = tuple(tuple(self.entries[i][j] for i in range(self.rows))
                    for j in range(self.cols))
        return Matrix(self.field, self.cols, self.rows, ent)

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(tuple(f.neg(x) for x in row) for row in self.entries))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise InputError("field mismatch in matrix product")
        if self.cols != other.rows:
            raise InputError(
                f"shape mismatch in matrix product: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        f = self.field
        zero = f.zero
        add, mul = f.add, f.mul
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a == zero:
                    continue
                orow = other.entries[k]
                for j, b in enumerate(orow):
                    if b != zero:
                        acc[j] = add(acc[j], mul(a, b))
            out.append(tuple(acc))
        return Matrix(f, self.rows, other.cols, tuple(out))

    def apply_row(self, v) -> tuple:
        """v * self for a row vector v of length self.rows."""
        if len(v) != self.rows:
            raise InputError("vector length does not match matrix rows")
        f = self.field
        zero = f.zero
        add, mul = f.add, f.mul
        acc = [zero] * self.cols
        for i, a in enumerate(v):
            if a == zero:
                continue
            row = self.entries[i]
            for j, b in enumerate(row):
                if b != zero:
                    acc[j] = add(acc[j], mul(a, b))
        return tuple(acc)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols or self.field != other.field:
            raise InputError("vstack shape/field mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.rows}x{self.cols})"


def vec_zero(field, n):
    return tuple(field.zero for _ in range(n))

def vec_is_zero(field, v):
    z = field.zero
    return all(x == z for x in v)

def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(field, c, v):
    return tuple(field.mul(c, x) for x in v)

def unit_vector(field, n, i):
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


def rref(m: Matrix):
    """Reduced row echelon form of m (same shape) together with its rank."""
    work = [list(r) for r in m.entries]
    rows, pivots = _rref_in_place(m.field, work, m.cols)
    return Matrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows)), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^ambient_dim, canonically a reduced-row-echelon basis."""

    field: Field
    ambient_dim: int
    basis: Matrix  # RREF, no zero rows; basis.cols == ambient_dim

    @property
    def dim(self) -> int:
        return self.basis.rows

    @staticmethod
    def from_vectors(field, ambient_dim, vectors) -> "Subspace":
        work = [[field.coerce(x) for x in v] for v in vectors]
        for v in work:
            if len(v) != ambient_dim:
                raise InputError("vector length does not match ambient dimension")
        rows, pivots = _rref_in_place(field, work, ambient_dim)
        rows = rows[:len(pivots)]
        return Subspace(field, ambient_dim,
                        Matrix(field, len(rows), ambient_dim, tuple(tuple(r) for r in rows)))

    @staticmethod
    def zero(field, ambient_dim) -> "Subspace":
        return Subspace(field, ambient_dim, Matrix(field, 0, ambient_dim, ()))

    @staticmethod
    def full(field, ambient_dim) -> "Subspace":
        return Subspace(field, ambient_dim, Matrix.identity(field, ambient_dim))

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def pivot_columns(self) -> tuple:
        zero = self.field.zero
        piv = []
        for row in self.basis.entries:
            for c, x in enumerate(row):
                if x != zero:
                    piv.append(c)
                    break
        return tuple(piv)

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field:
            raise InputError("field mismatch between subspaces")
        if self.ambient_dim != other.ambient_dim:
            raise InputError("ambient dimension mismatch between subspaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim,
            list(self.basis.entries) + list(other.basis.entries))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Null-space method: kernel of the stacked bases yields coordinates
        of common vectors."""
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = self.basis.vstack(other.basis)
        ker = kernel(stacked)
        # x * U where (x, y) ranges over the kernel of the stacked bases
        vecs = []
        for coeffs in ker.basis.entries:
            vecs.append(self.basis.apply_row(coeffs[:self.dim]))
        return Subspace.from_vectors(self.field, self.ambient_dim, vecs)

    def reduce(self, v) -> tuple:
        """Canonical representative of v modulo this subspace."""
        f = self.field
        out = [f.coerce(x) for x in v]
        if len(out) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        zero = f.zero
        for row, p in zip(self.basis.entries, self.pivot_columns):
            c = out[p]
            if c != zero:
                out = [f.sub(x, f.mul(c, y)) for x, y in zip(out, row)]
        return tuple(out)

    def contains(self, v) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis.entries)

    def coordinates_of(self, v) -> tuple:
        """Coefficients of v in the canonical basis; raises if v is outside."""
        f = self.field
        vv = tuple(f.coerce(x) for x in v)
        coords = tuple(vv[p] for p in self.pivot_columns)
        if not self.contains(vv):
            raise InputError("vector is not in the subspace")
        return coords

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.field.name}^{self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """Kernel of v |-> v*m, a subspace of F^(m.rows)."""
    f = m.field
    n = m.rows
    constraints = [[m.entries[i][j] for i in range(m.rows)] for j in range(m.cols)]
    rows, pivots = _rref_in_place(f, constraints, n)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [f.zero] * n
        v[free] = f.one
        for r_idx, pc in enumerate(pivots):
            v[pc] = f.neg(rows[r_idx][free])
        basis.append(v)
    return Subspace.from_vectors(f, n, basis)


def image(m: Matrix) -> Subspace:
    """Row space of m: the image of v |-> v*m inside F^(m.cols)."""
    return Subspace.from_vectors(m.field, m.cols, m.entries)


def solve_row_system(m: Matrix, targets) -> list:
    """Solve x*m = t for each target row t; raises InputError if unsolvable.

    Deterministic: free coordinates are set to zero, pivots taken in column
    order.  Returns one row vector of length m.rows per target.
    """
    f = m.field
    targets = [tuple(f.coerce(x) for x in t) for t in targets]
    for t in targets:
        if len(t) != m.cols:
            raise InputError("target length does not match matrix columns")
    k = len(targets)
    aug = [[m.entries[i][j] for i in range(m.rows)] + [t[j] for t in targets]
           for j in range(m.cols)]
    rows, pivots = _rref_in_place(f, aug, m.rows + k, pivot_limit=m.rows)
    zero = f.zero
    for r in range(len(pivots), len(rows)):
        if any(x != zero for x in rows[r][m.rows:]):
            raise InputError("row system has no solution")
    out = []
    for t_idx in range(k):
        x = [zero] * m.rows
        for r_idx, pc in enumerate(pivots):
            x[pc] = rows[r_idx][m.rows + t_idx]
        out.append(tuple(x))
    return out


def right_section(m: Matrix) -> Matrix:
    """For a surjective row-map m: F^r -> F^c, a section s with s*m = id."""
    f = m.field
    rows = solve_row_system(m, [unit_vector(f, m.cols, j) for j in range(m.cols)])
    return Matrix.from_rows_shaped(f, rows, m.rows)


def invert(m: Matrix) -> Matrix:
    """Inverse of a square invertible matrix (as a row map)."""
    if m.rows != m.cols:
        raise InputError("only square matrices can be inverted")
    return right_section(m)


def quotient_map(w: Subspace):
    """Projection and section for F^n -> F^n / w.

    Returns (proj, section) where proj is n x q with kernel exactly w,
    section is q x n, and section * proj = identity on the quotient.  The
    quotient coordinates are the non-pivot coordinates of w's basis.
    """
    f = w.field
    n = w.ambient_dim
    pivots = set(w.pivot_columns)
    comp = [c for c in range(n) if c not in pivots]
    q = len(comp)
    proj_rows = []
    for i in range(n):
        reduced = w.reduce(unit_vector(f, n, i))
        proj_rows.append(tuple(reduced[c] for c in comp))
    proj = Matrix.from_rows_shaped(f, proj_rows, q)
    sect = Matrix.from_rows_shaped(f, [unit_vector(f, n, c) for c in comp], n)
    return proj, sect

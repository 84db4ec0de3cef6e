"""Exact dense linear algebra over Q and F_p.

Rank, kernel bases, determinants and coordinate solves all run through one
deterministic reduced-row-echelon routine: pivots are chosen leftmost-column
first, earliest row first, with no randomization, so kernel bases and
quotient-space bases are reproducible across runs.  Over Q the forward pass
is fraction-free (Bareiss single-step division on integer rows) to keep
intermediate entries small; over F_p ordinary field elimination is used.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyring import FieldSpec, Fp, Polynomial, RATIONAL


class MatrixError(ValueError):
    """Invalid matrix shape or operand mix."""


class Matrix:
    """A dense exact matrix, optionally with row/column labels.

    Labels typically carry the monomials of the graded pieces a map is
    written against; they must match the dimensions when present.
    """

    __slots__ = ("rows", "cols", "entries", "field", "row_labels", "col_labels")

    def __init__(self, entries, field: FieldSpec = RATIONAL,
                 row_labels=None, col_labels=None):
        entries = [list(r) for r in entries]
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise MatrixError("ragged rows")
        if row_labels is not None and len(row_labels) != nrows:
            raise MatrixError("row label count mismatch")
        if col_labels is not None and len(col_labels) != ncols:
            raise MatrixError("column label count mismatch")
        object.__setattr__(self, "rows", nrows)
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "row_labels", row_labels)
        object.__setattr__(self, "col_labels", col_labels)

    def __setattr__(self, *args):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, field: FieldSpec = RATIONAL) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)],
                   field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = RATIONAL) -> "Matrix":
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)], field)

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.entries)] if self.entries else [],
                      self.field, self.col_labels, self.row_labels)

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise MatrixError(f"vector length {len(vec)} != {self.cols} columns")
        out = []
        for row in self.entries:
            acc = self.field.zero()
            for a, b in zip(row, vec):
                acc = acc + a * b
            out.append(acc)
        return out

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"


@dataclass
class KernelResult:
    """Rank and a deterministic kernel basis of a matrix."""

    rank: int
    kernel_basis: list
    pivot_columns: list


@dataclass
class Echelon:
    """Reduced row-echelon data of a row set.

    `coeffs[i]` holds the entries of the i-th reduced pivot row at the
    non-pivot columns only (the row is 1 at its own pivot and 0 at every
    other pivot column), which is all that reduction and kernel extraction
    need.
    """

    ncols: int
    field: FieldSpec
    pivots: list
    nonpivots: list
    coeffs: list

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, vec):
        """Coordinates of vec modulo the row space, along the non-pivot columns."""
        if len(vec) != self.ncols:
            raise MatrixError(f"vector length {len(vec)} != {self.ncols}")
        out = [vec[c] for c in self.nonpivots]
        for i, p in enumerate(self.pivots):
            v = vec[p]
            if v:
                row = self.coeffs[i]
                for j in range(len(out)):
                    if row[j]:
                        out[j] = out[j] - v * row[j]
        return out

    def contains(self, vec) -> bool:
        return not any(self.residual(vec))

    def kernel_basis(self):
        """One kernel vector per non-pivot column (full width, deterministic)."""
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for j, free_col in enumerate(self.nonpivots):
            vec = [zero] * self.ncols
            vec[free_col] = one
            for i, p in enumerate(self.pivots):
                if self.coeffs[i][j]:
                    vec[p] = -self.coeffs[i][j]
            basis.append(vec)
        return basis

    def full_rows(self):
        """Reconstruct the reduced rows at full width."""
        zero, one = self.field.zero(), self.field.one()
        rows = []
        for i, p in enumerate(self.pivots):
            row = [zero] * self.ncols
            row[p] = one
            for j, c in enumerate(self.nonpivots):
                row[c] = self.coeffs[i][j]
            rows.append(row)
        return rows


def _strip_content(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _to_int_rows(rows):
    """Clear denominators rowwise; row scaling preserves row space and pivots."""
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        ints = [int(x * lcm) if isinstance(x, Fraction) else int(x) * lcm
                for x in row]
        out.append(_strip_content(ints))
    return out


def _echelon_rational(rows, ncols) -> Echelon:
    work = _to_int_rows(rows)
    nrows = len(work)
    pivots = []
    piv_r = 0
    prev = 1
    for col in range(ncols):
        sel = -1
        for r in range(piv_r, nrows):
            if work[r][col]:
                sel = r
                break
        if sel < 0:
            continue
        if sel != piv_r:
            work[piv_r], work[sel] = work[sel], work[piv_r]
        prow = work[piv_r]
        p = prow[col]
        for r in range(piv_r + 1, nrows):
            row = work[r]
            lead = row[col]
            if lead:
                for c in range(col, ncols):
                    row[c] = (row[c] * p - lead * prow[c]) // prev
            elif prev != 1 or p != 1:
                for c in range(col, ncols):
                    row[c] = (row[c] * p) // prev
        pivots.append(col)
        prev = p
        piv_r += 1
        if piv_r == nrows:
            break
    pivset = set(pivots)
    nonpivots = [c for c in range(ncols) if c not in pivset]
    # normalize pivot rows and back-eliminate; only non-pivot entries are kept
    npos = {c: j for j, c in enumerate(nonpivots)}
    coeffs = []
    for i in range(len(pivots)):
        p = pivots[i]
        denom = work[i][p]
        coeffs.append([Fraction(work[i][c], denom) for c in nonpivots])
    for i in range(len(pivots) - 1, -1, -1):
        row_i = work[i]
        ci = coeffs[i]
        denom = row_i[pivots[i]]
        for j in range(i + 1, len(pivots)):
            f = Fraction(row_i[pivots[j]], denom)
            if f:
                cj = coeffs[j]
                for t in range(len(ci)):
                    if cj[t]:
                        ci[t] -= f * cj[t]
    return Echelon(ncols, RATIONAL, pivots, nonpivots, coeffs)


def _echelon_prime(rows, ncols, field: FieldSpec) -> Echelon:
    p = field.p
    work = []
    for row in rows:
        work.append([x.val if isinstance(x, Fp) else int(x) % p for x in row])
    nrows = len(work)
    pivots = []
    piv_r = 0
    for col in range(ncols):
        sel = -1
        for r in range(piv_r, nrows):
            if work[r][col] % p:
                sel = r
                break
        if sel < 0:
            continue
        if sel != piv_r:
            work[piv_r], work[sel] = work[sel], work[piv_r]
        prow = work[piv_r]
        inv = pow(prow[col], p - 2, p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(piv_r + 1, nrows):
            lead = work[r][col]
            if lead:
                row = work[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - lead * prow[c]) % p
        pivots.append(col)
        piv_r += 1
        if piv_r == nrows:
            break
    for i in range(len(pivots) - 1, -1, -1):
        for j in range(i + 1, len(pivots)):
            lead = work[i][pivots[j]]
            if lead:
                rj = work[j]
                ri = work[i]
                for c in range(pivots[j], ncols):
                    ri[c] = (ri[c] - lead * rj[c]) % p
    pivset = set(pivots)
    nonpivots = [c for c in range(ncols) if c not in pivset]
    coeffs = [[Fp(work[i][c], p) for c in nonpivots] for i in range(len(pivots))]
    return Echelon(ncols, field, pivots, nonpivots, coeffs)


def echelon_rows(rows, ncols: int, field: FieldSpec) -> Echelon:
    """Deterministic reduced row echelon form of a list of vectors."""
    rows = [r for r in rows if any(r)]
    if field.is_rational:
        return _echelon_rational(rows, ncols)
    return _echelon_prime(rows, ncols, field)


def rank_kernel(m: Matrix) -> KernelResult:
    """Rank, pivot columns, and a deterministic kernel basis of m."""
    ech = echelon_rows(m.entries, m.cols, m.field)
    return KernelResult(rank=ech.rank, kernel_basis=ech.kernel_basis(),
                        pivot_columns=list(ech.pivots))


def _det_bareiss_int(rows) -> int:
    n = len(rows)
    work = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n):
        sel = -1
        for r in range(col, n):
            if work[r][col]:
                sel = r
                break
        if sel < 0:
            return 0
        if sel != col:
            work[col], work[sel] = work[sel], work[col]
            sign = -sign
        prow = work[col]
        piv = prow[col]
        for r in range(col + 1, n):
            row = work[r]
            lead = row[col]
            for c in range(col + 1, n):
                row[c] = (row[c] * piv - lead * prow[c]) // prev
        prev = piv
    return sign * work[n - 1][n - 1]


def _det_prime(rows, field: FieldSpec):
    p = field.p
    n = len(rows)
    work = [[x.val if isinstance(x, Fp) else int(x) % p for x in r] for r in rows]
    det = 1
    for col in range(n):
        sel = -1
        for r in range(col, n):
            if work[r][col]:
                sel = r
                break
        if sel < 0:
            return Fp(0, p)
        if sel != col:
            work[col], work[sel] = work[sel], work[col]
            det = -det
        piv = work[col][col]
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        prow = work[col]
        for r in range(col + 1, n):
            lead = work[r][col]
            if lead:
                row = work[r]
                f = lead * inv % p
                for c in range(col, n):
                    row[c] = (row[c] - f * prow[c]) % p
    return Fp(det, p)


MAX_SYMBOLIC_DET = 6


def _det_polynomial(entries) -> Polynomial:
    n = len(entries)
    if n > MAX_SYMBOLIC_DET:
        raise MatrixError(
            f"symbolic determinant limited to {MAX_SYMBOLIC_DET}x{MAX_SYMBOLIC_DET} "
            f"(got {n}x{n})")
    sample = entries[0][0]
    zero = Polynomial.zero(sample.n_vars, sample.field)
    # expand along rows; dp over column subsets keyed by bitmask
    dp = {0: Polynomial.constant(1, sample.n_vars, sample.field)}
    for r in range(n):
        row_parity = r & 1
        nxt: dict[int, Polynomial] = {}
        for mask, minor in dp.items():
            if minor.is_zero:
                continue
            parity = row_parity
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    parity ^= 1
                    continue
                e = entries[r][c]
                if e.is_zero:
                    continue
                piece = minor.scale(-1) * e if parity else minor * e
                key = mask | bit
                nxt[key] = nxt[key] + piece if key in nxt else piece
        dp = nxt
    return dp.get((1 << n) - 1, zero)


def det_ff(m: Matrix):
    """Exact determinant.

    Scalar matrices go through fraction-free elimination (or field
    elimination over F_p).  Matrices with Polynomial entries are expanded
    symbolically, capped at 6x6.
    """
    if not m.is_square():
        raise MatrixError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return m.field.one()
    if isinstance(m.entries[0][0], Polynomial):
        return _det_polynomial(m.entries)
    if not m.field.is_rational:
        return _det_prime(m.entries, m.field)
    # clear denominators rowwise, tracking the scale factor
    scale = Fraction(1)
    int_rows = []
    for row in m.entries:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scale *= lcm
        int_rows.append([int(x * lcm) if isinstance(x, Fraction) else int(x) * lcm
                         for x in row])
    return Fraction(_det_bareiss_int(int_rows)) / scale


def coords_in_span(vec, basis) -> list | None:
    """Coordinates of vec in the span of basis vectors, or None if outside.

    All vectors must share one length; the solve is exact, and free
    coordinates (when the basis is dependent) are set to zero.
    """
    vec = list(vec)
    basis = [list(b) for b in basis]
    if any(len(b) != len(vec) for b in basis):
        raise MatrixError("basis vector length mismatch")
    if not basis:
        return [] if not any(vec) else None
    field = _infer_field(vec, basis)
    k = len(basis)
    augmented = [[basis[j][i] for j in range(k)] + [vec[i]]
                 for i in range(len(vec))]
    ech = echelon_rows(augmented, k + 1, field)
    if k in ech.pivots:
        return None
    aug_pos = ech.nonpivots.index(k)
    coords = [field.zero()] * k
    for i, p in enumerate(ech.pivots):
        coords[p] = ech.coeffs[i][aug_pos]
    return coords


def invert(m: Matrix) -> Matrix:
    """Exact inverse of a square full-rank matrix."""
    if not m.is_square():
        raise MatrixError("inverse of non-square matrix")
    n = m.rows
    one, zero = m.field.one(), m.field.zero()
    augmented = [list(row) + [one if j == i else zero for j in range(n)]
                 for i, row in enumerate(m.entries)]
    ech = echelon_rows(augmented, 2 * n, m.field)
    if ech.pivots != list(range(n)):
        raise MatrixError("matrix is singular")
    inv_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            col = n + j
            row.append(ech.coeffs[i][ech.nonpivots.index(col)])
        inv_rows.append(row)
    return Matrix(inv_rows, m.field)


def _infer_field(vec, basis):
    for x in vec:
        if isinstance(x, Fp):
            return FieldSpec.prime(x.p)
    for b in basis:
        for x in b:
            if isinstance(x, Fp):
                return FieldSpec.prime(x.p)
    return RATIONAL

"""Graded Artinian Gorenstein algebras with exact per-degree reduction.

An algebra is represented degree by degree as a quotient of the full
polynomial ring: each graded piece stores the reduced row echelon form of
the ideal piece, and the quotient basis is the set of non-pivot monomials
(deterministic, so serialized bases are stable across runs).  Two
constructions are provided: the annihilator presentation from a single form
(via catalecticant kernels) and the quotient by a regular sequence, which is
accepted exactly when the computed Hilbert function matches the expected
complete-intersection series.

A graded piece may be re-coordinatized against a pinned basis of class
representatives (`with_degree_basis`); reduction then returns coordinates in
the pinned basis.  This is how fixture conventions for distinguished bases
are honored without touching the underlying reduction data.
"""

from dataclasses import dataclass
from math import comb

from .apolarity import catalecticant, contract, rank_kernel
from .exactla import Echelon, Matrix, echelon_rows, invert
from .polyring import FieldSpec, Monomial, Polynomial, monomial_basis


class AlgebraError(ValueError):
    """Invalid algebra construction or element operation."""


class DegreeOverflowError(AlgebraError):
    """A graded operation landed above the socle degree."""


class NotRegularSequence(AlgebraError):
    """The given forms fail the complete-intersection Hilbert check."""

    def __init__(self, degree: int, expected: int, found: int):
        super().__init__(
            f"not a regular sequence: in degree {degree} the quotient has "
            f"dimension {found}, expected {expected}")
        self.degree = degree
        self.expected = expected
        self.found = found


@dataclass(frozen=True)
class AlgebraElement:
    """A class in one graded piece, held as coordinates in that piece's basis."""

    degree: int
    coords: tuple

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.degree != other.degree:
            raise AlgebraError("cannot add elements of different degrees")
        return AlgebraElement(self.degree,
                              tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.degree != other.degree:
            raise AlgebraError("cannot subtract elements of different degrees")
        return AlgebraElement(self.degree,
                              tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.degree, tuple(scalar * c for c in self.coords))


class _Piece:
    """Reduction data for one graded piece."""

    __slots__ = ("degree", "ambient", "echelon", "basis_monomials",
                 "basis_reps", "basis_inverse")

    def __init__(self, degree: int, ambient: list[Monomial], ech: Echelon,
                 field: FieldSpec):
        self.degree = degree
        self.ambient = ambient
        self.echelon = ech
        self.basis_monomials = [ambient[c] for c in ech.nonpivots]
        self.basis_reps = [Polynomial.from_monomial(m, field)
                           for m in self.basis_monomials]
        self.basis_inverse = None  # set when a custom basis is pinned

    @property
    def dim(self) -> int:
        return len(self.basis_monomials)

    def copy(self) -> "_Piece":
        clone = _Piece.__new__(_Piece)
        clone.degree = self.degree
        clone.ambient = self.ambient
        clone.echelon = self.echelon
        clone.basis_monomials = self.basis_monomials
        clone.basis_reps = self.basis_reps
        clone.basis_inverse = self.basis_inverse
        return clone


class GradedAlgebra:
    """A standard graded Artinian algebra with exact reduction per degree."""

    def __init__(self, n_vars: int, field: FieldSpec, pieces: list[_Piece],
                 presentation: dict):
        self.n_vars = n_vars
        self.field = field
        self._pieces = pieces
        self.presentation = presentation
        self.socle_degree = len(pieces) - 1
        self.hilbert = tuple(p.dim for p in pieces)

    # -- basic structure ----------------------------------------------

    @property
    def codimension(self) -> int:
        return self.hilbert[1] if self.socle_degree >= 1 else 0

    def piece(self, degree: int) -> _Piece:
        if not 0 <= degree <= self.socle_degree:
            raise DegreeOverflowError(
                f"degree {degree} outside 0..{self.socle_degree}")
        return self._pieces[degree]

    def dim(self, degree: int) -> int:
        """Dimension of the graded piece; zero above the socle degree."""
        if degree < 0:
            raise AlgebraError("negative degree")
        return self.hilbert[degree] if degree <= self.socle_degree else 0

    def basis(self, degree: int) -> list[AlgebraElement]:
        h = self.dim(degree)
        zero, one = self.field.zero(), self.field.one()
        return [AlgebraElement(degree,
                               tuple(one if j == i else zero for j in range(h)))
                for i in range(h)]

    # -- elements -------------------------------------------------------

    def element(self, degree: int, coords) -> AlgebraElement:
        coords = tuple(self.field.coerce(c) for c in coords)
        if len(coords) != self.dim(degree):
            raise AlgebraError(
                f"expected {self.dim(degree)} coordinates in degree {degree}, "
                f"got {len(coords)}")
        return AlgebraElement(degree, coords)

    def zero_element(self, degree: int) -> AlgebraElement:
        return AlgebraElement(degree, (self.field.zero(),) * self.dim(degree))

    def unit(self) -> AlgebraElement:
        return self.element(0, [1])

    def random_element(self, degree: int, rng, low: int = -10, high: int = 10,
                       nonzero: bool = True) -> AlgebraElement:
        h = self.dim(degree)
        while True:
            coords = [rng.randint(low, high) for _ in range(h)]
            if not nonzero or any(coords):
                return self.element(degree, coords)

    def reduce(self, p: Polynomial, degree: int | None = None) -> AlgebraElement:
        """Coordinates of the class of p in its graded piece."""
        if p.n_vars != self.n_vars or p.field != self.field:
            raise AlgebraError("polynomial lives over a different ring")
        if p.is_zero:
            if degree is None:
                raise AlgebraError(
                    "pass degree= to reduce the zero polynomial")
            return self.zero_element(degree)
        d = p.homogeneous_degree()
        if d is None:
            raise AlgebraError("reduction requires a homogeneous polynomial")
        if degree is not None and degree != d:
            raise AlgebraError(f"polynomial has degree {d}, expected {degree}")
        if d > self.socle_degree:
            raise DegreeOverflowError(
                f"degree {d} above socle degree {self.socle_degree}")
        piece = self._pieces[d]
        vec = p.coefficient_vector(piece.ambient)
        canonical = piece.echelon.residual(vec)
        if piece.basis_inverse is not None:
            canonical = piece.basis_inverse.mul_vector(canonical)
        return AlgebraElement(d, tuple(canonical))

    def lift(self, e: AlgebraElement) -> Polynomial:
        """A polynomial representative of the class e."""
        piece = self.piece(e.degree)
        out = Polynomial.zero(self.n_vars, self.field)
        for c, rep in zip(e.coords, piece.basis_reps):
            if c:
                out = out + rep.scale(c)
        return out

    # -- multiplication ---------------------------------------------------

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        target = a.degree + b.degree
        if target > self.socle_degree:
            raise DegreeOverflowError(
                f"product degree {target} above socle degree {self.socle_degree}")
        if a.is_zero or b.is_zero:
            return self.zero_element(target)
        return self.reduce(self.lift(a) * self.lift(b), target)

    def power(self, x: AlgebraElement, k: int) -> AlgebraElement:
        """k-th power of a degree-1 element, by repeated reduce-and-multiply."""
        if x.degree != 1:
            raise AlgebraError("power expects a degree-1 element")
        if k < 0:
            raise AlgebraError("negative exponent")
        if k > self.socle_degree:
            raise DegreeOverflowError(
                f"exponent {k} above socle degree {self.socle_degree}")
        result = self.unit()
        if k == 0:
            return result
        xp = self.lift(x)
        for _ in range(k):
            result = self.reduce(self.lift(result) * xp,
                                 result.degree + 1)
        return result

    def mul_map(self, alpha: AlgebraElement, i: int) -> Matrix:
        """Matrix of multiplication by alpha from degree i to degree i+deg(alpha)."""
        target = i + alpha.degree
        if target > self.socle_degree:
            raise DegreeOverflowError(
                f"multiplication map lands in degree {target}, above socle "
                f"degree {self.socle_degree}")
        return self._mul_matrix(alpha, i, target)

    def _mul_matrix(self, alpha: AlgebraElement, i: int, target: int) -> Matrix:
        source = self.piece(i)
        h_target = self.dim(target)
        cols = []
        alpha_poly = self.lift(alpha)
        for rep in source.basis_reps:
            if alpha_poly.is_zero:
                cols.append(self.zero_element(target).coords)
            else:
                cols.append(self.reduce(alpha_poly * rep, target).coords)
        entries = [[cols[c][r] for c in range(len(cols))] for r in range(h_target)]
        tgt_piece = self._pieces[target]
        row_labels = (tgt_piece.basis_monomials
                      if tgt_piece.basis_inverse is None else None)
        col_labels = (source.basis_monomials
                      if source.basis_inverse is None else None)
        return Matrix(entries, self.field, row_labels=row_labels,
                      col_labels=col_labels)

    def _colon_kernel(self, alpha: AlgebraElement, i: int):
        """Kernel of multiplication by alpha on degree i, as coordinate vectors.

        Degrees landing above the socle are killed by the grading, so the
        kernel there is everything.
        """
        target = i + alpha.degree
        if target > self.socle_degree:
            return [e.coords for e in self.basis(i)]
        return rank_kernel(self._mul_matrix(alpha, i, target)).kernel_basis

    # -- duality and structure checks ------------------------------------

    def socle_dim(self) -> int:
        return self.hilbert[self.socle_degree]

    def pairing_check(self, s: int) -> tuple[bool, Matrix]:
        """Multiplication pairing of degrees s and N-s into the socle line.

        Returns (perfect, matrix); perfect means the matrix is square of
        full rank.
        """
        N = self.socle_degree
        if not 0 <= s <= N:
            raise AlgebraError(f"degree {s} outside 0..{N}")
        if self.socle_dim() != 1:
            raise AlgebraError("pairing needs a one-dimensional socle")
        left = self._pieces[s]
        right = self._pieces[N - s]
        entries = []
        for a in left.basis_reps:
            row = []
            for b in right.basis_reps:
                row.append(self.reduce(a * b, N).coords[0])
            entries.append(row)
        matrix = Matrix(entries, self.field)
        square = left.dim == right.dim
        ok = square and rank_kernel(matrix).rank == left.dim
        return ok, matrix

    def hilbert_symmetric(self) -> bool:
        return self.hilbert == tuple(reversed(self.hilbert))

    def is_standard(self) -> bool:
        """Every piece is spanned by products of degree-1 classes."""
        for i in range(self.socle_degree):
            h_next = self.dim(i + 1)
            if h_next == 0:
                continue
            stacked = []
            for b in self.basis(1):
                m = self._mul_matrix(b, i, i + 1)
                for c in range(m.cols):
                    stacked.append([m.entries[r][c] for r in range(m.rows)])
            if echelon_rows(stacked, h_next, self.field).rank < h_next:
                return False
        return True

    # -- derived algebras -------------------------------------------------

    def quotient_by_ann(self, alpha: AlgebraElement) -> "GradedAlgebra":
        """Quotient by the annihilator ideal of alpha.

        The quotient of a Gorenstein algebra by (0:alpha) is Gorenstein with
        socle degree N - deg(alpha).  Degenerate inputs that die earlier are
        reported with the top nonzero degree as socle degree.
        """
        if alpha.is_zero:
            raise AlgebraError("quotient by the annihilator of zero")
        e = alpha.degree
        top = self.socle_degree - e
        pieces = []
        for i in range(top + 1):
            old = self._pieces[i]
            rows = old.echelon.full_rows()
            for kv in self._colon_kernel(alpha, i):
                lifted = Polynomial.zero(self.n_vars, self.field)
                for c, rep in zip(kv, old.basis_reps):
                    if c:
                        lifted = lifted + rep.scale(c)
                if not lifted.is_zero:
                    rows.append(lifted.coefficient_vector(old.ambient))
            ech = echelon_rows(rows, len(old.ambient), self.field)
            pieces.append(_Piece(i, old.ambient, ech, self.field))
        while len(pieces) > 1 and pieces[-1].dim == 0:
            pieces.pop()
        presentation = {"kind": "quotient_by_ann",
                        "parent": self.presentation.get("kind"),
                        "alpha_degree": e}
        return GradedAlgebra(self.n_vars, self.field, pieces, presentation)

    def with_degree_basis(self, degree: int,
                          reps: list[Polynomial]) -> "GradedAlgebra":
        """Re-coordinatize one graded piece against pinned representatives."""
        piece = self.piece(degree)
        if len(reps) != piece.dim:
            raise AlgebraError(
                f"need {piece.dim} representatives, got {len(reps)}")
        columns = []
        for rep in reps:
            if rep.is_zero or rep.homogeneous_degree() != degree:
                raise AlgebraError(
                    "pinned representatives must be nonzero homogeneous of "
                    f"degree {degree}")
            vec = rep.coefficient_vector(piece.ambient)
            columns.append(piece.echelon.residual(vec))
        h = piece.dim
        b = Matrix([[columns[c][r] for c in range(h)] for r in range(h)],
                   self.field)
        new_piece = piece.copy()
        new_piece.basis_reps = list(reps)
        new_piece.basis_monomials = list(piece.basis_monomials)
        new_piece.basis_inverse = invert(b)
        pieces = list(self._pieces)
        pieces[degree] = new_piece
        return GradedAlgebra(self.n_vars, self.field, pieces, self.presentation)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        basis = []
        for piece in self._pieces:
            level = []
            for rep in piece.basis_reps:
                terms = rep.sorted_terms()
                if len(terms) == 1 and terms[0][1] == self.field.one():
                    level.append(list(terms[0][0].exponents))
                else:
                    level.append({"terms": [[str(c), list(m.exponents)]
                                            for m, c in terms]})
            basis.append(level)
        pres = {"kind": self.presentation.get("kind")}
        if "form" in self.presentation:
            pres["form"] = self.presentation["form"].to_string()
        if "generators" in self.presentation:
            pres["generators"] = [g.to_string()
                                  for g in self.presentation["generators"]]
        if "alpha_degree" in self.presentation:
            pres["alpha_degree"] = self.presentation["alpha_degree"]
            pres["parent"] = self.presentation.get("parent")
        return {
            "n_vars": self.n_vars,
            "field": str(self.field),
            "presentation": pres,
            "socle_degree": self.socle_degree,
            "hilbert": list(self.hilbert),
            "basis": basis,
        }


# -- constructors -----------------------------------------------------------


def from_inverse_system(form: Polynomial) -> GradedAlgebra:
    """The algebra of differential operators modulo the annihilator of a form."""
    d = form.homogeneous_degree()
    if form.is_zero:
        raise AlgebraError("zero form has no inverse-system algebra")
    if d is None or d < 1:
        raise AlgebraError("inverse system needs a homogeneous form of degree >= 1")
    n = form.n_vars
    pieces = []
    for i in range(d + 1):
        cat = catalecticant(form, i)
        kernel = rank_kernel(cat.matrix)
        ambient = cat.matrix.col_labels
        ech = echelon_rows(kernel.kernel_basis, len(ambient), form.field)
        piece = _Piece(i, ambient, ech, form.field)
        if piece.dim != kernel.rank:
            raise AlgebraError("internal: annihilator dimension mismatch")
        pieces.append(piece)
    return GradedAlgebra(n, form.field, pieces,
                         {"kind": "inverse_system", "form": form})


def expected_ci_hilbert(degrees, n_vars: int) -> list[int]:
    """Coefficients of prod(1 - t^e) / (1 - t)^n_vars through the socle degree."""
    N = sum(e - 1 for e in degrees)
    numer = [0] * (sum(degrees) + 1)
    numer[0] = 1
    for e in degrees:
        nxt = list(numer)
        for k in range(len(numer) - e):
            nxt[k + e] -= numer[k]
        numer = nxt
    out = []
    for i in range(N + 1):
        total = 0
        for j in range(min(i, len(numer) - 1) + 1):
            if numer[j]:
                total += numer[j] * comb(n_vars - 1 + i - j, i - j)
        out.append(total)
    return out


def from_regular_sequence(forms: list[Polynomial]) -> GradedAlgebra:
    """Quotient by n+1 forms in n+1 variables, validated as a regular sequence.

    Acceptance is by exact equality of the computed Hilbert function with the
    complete-intersection series; a mismatch raises NotRegularSequence at the
    first failing degree.
    """
    if not forms:
        raise AlgebraError("empty generator list")
    n = forms[0].n_vars
    field = forms[0].field
    if len(forms) != n:
        raise AlgebraError(
            f"need exactly {n} forms in {n} variables, got {len(forms)}")
    degrees = []
    for f in forms:
        if f.n_vars != n or f.field != field:
            raise AlgebraError("generators live over different rings")
        e = f.homogeneous_degree()
        if f.is_zero or e is None or e < 1:
            raise AlgebraError(
                "generators must be nonzero homogeneous of degree >= 1")
        degrees.append(e)
    N = sum(e - 1 for e in degrees)
    expected = expected_ci_hilbert(degrees, n)
    pieces = []
    for i in range(N + 1):
        ambient = monomial_basis(n, i)
        index = {m: c for c, m in enumerate(ambient)}
        rows = []
        for f, e in zip(forms, degrees):
            if e > i:
                continue
            for mult in monomial_basis(n, i - e):
                vec = [field.zero()] * len(ambient)
                for mon, coeff in f.terms.items():
                    vec[index[mon * mult]] = coeff
                rows.append(vec)
        ech = echelon_rows(rows, len(ambient), field)
        piece = _Piece(i, ambient, ech, field)
        if piece.dim != expected[i]:
            raise NotRegularSequence(i, expected[i], piece.dim)
        pieces.append(piece)
    return GradedAlgebra(n, field, pieces,
                         {"kind": "regular_sequence", "generators": list(forms),
                          "generator_degrees": tuple(degrees)})


def socle_contraction_value(algebra: GradedAlgebra, e: AlgebraElement):
    """Value of a top-degree class applied to the presenting form.

    Only defined for inverse-system algebras: the class of a degree-N
    operator sends the form to a constant, and that constant depends only on
    the class.
    """
    if algebra.presentation.get("kind") != "inverse_system":
        raise AlgebraError("contraction values need an inverse-system algebra")
    if e.degree != algebra.socle_degree:
        raise AlgebraError("expected a socle-degree class")
    form = algebra.presentation["form"]
    return contract(algebra.lift(e), form).constant_value()

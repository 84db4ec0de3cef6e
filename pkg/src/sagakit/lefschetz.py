"""Lefschetz-property probes, hessians, and the rank/hessian cross-check.

The probes are randomized-witness tests for generic statements: a single
exact witness certifies that the generic multiplication map has maximal
rank, while failure across all trials is (strong) evidence only.  For small
square cases failure is upgraded to proof by expanding the determinant of
the multiplication map symbolically in the coordinates of the probing linear
form and checking that it is the zero polynomial.
"""

from dataclasses import dataclass
from math import factorial

from .algebra import (AlgebraElement, AlgebraError, GradedAlgebra,
                      from_inverse_system, socle_contraction_value)
from .exactla import Matrix, det_ff, rank_kernel
from .polyring import Monomial, PolyError, Polynomial, monomial_basis
from .seeding import DEFAULT_SEED, random_int_coords, rng_for

SLP = "SLP"
WLP = "WLP"

MAX_HESSIAN_VARS = 6
MAX_CERTIFY_DIM = 6
MAX_SOCLE_FACTORIAL = 20


@dataclass
class ProbeReport:
    """Outcome of a randomized maximal-rank probe at one degree."""

    kind: str
    k: int
    target_rank: int
    max_rank_found: int
    witness: AlgebraElement | None
    trials: int
    seed: int
    holds: bool
    certified: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "target_rank": self.target_rank,
            "max_rank": self.max_rank_found,
            "holds": self.holds,
            "certified": self.certified,
            "witness": (None if self.witness is None
                        else [str(c) for c in self.witness.coords]),
            "trials": self.trials,
            "seed": self.seed,
        }


def _probe_rank(algebra: GradedAlgebra, kind: str, k: int,
                L: AlgebraElement) -> int:
    if kind == SLP:
        power = algebra.power(L, algebra.socle_degree - 2 * k)
        if power.is_zero:
            return 0
        return rank_kernel(algebra.mul_map(power, k)).rank
    return rank_kernel(algebra.mul_map(L, k)).rank


def lefschetz_probe(algebra: GradedAlgebra, kind: str, k: int,
                    trials: int = 8, seed: int = DEFAULT_SEED) -> ProbeReport:
    """Sample linear forms and report the maximal rank found.

    SLP at degree k tests whether multiplication by the (N-2k)-th power of a
    linear form gives an isomorphism from degree k to degree N-k; WLP tests
    maximal rank of multiplication by the form itself from degree k to k+1.
    A witness achieving the target rank settles the generic property; when
    no witness is found, small square cases are settled symbolically.
    """
    N = algebra.socle_degree
    if kind not in (SLP, WLP):
        raise AlgebraError(f"unknown probe kind {kind!r}")
    if trials < 1:
        raise AlgebraError("need at least one trial")
    if kind == SLP:
        if not 0 <= 2 * k <= N:
            raise AlgebraError(f"SLP degree {k} out of range for socle {N}")
        target = algebra.dim(k)
        square = algebra.dim(k) == algebra.dim(N - k)
    else:
        if not 0 <= k <= N - 1:
            raise AlgebraError(f"WLP degree {k} out of range for socle {N}")
        target = min(algebra.dim(k), algebra.dim(k + 1))
        square = algebra.dim(k) == algebra.dim(k + 1)
    best = 0
    witness = None
    for t in range(trials):
        rng = rng_for(seed, t)
        L = algebra.element(1, random_int_coords(rng, algebra.dim(1)))
        rank = _probe_rank(algebra, kind, k, L)
        if rank > best:
            best = rank
            witness = L
        if best == target:
            break
    holds = best == target
    certified = holds
    if not holds and square and target <= MAX_CERTIFY_DIM:
        det = symbolic_probe_determinant(algebra, kind, k)
        certified = det.is_zero
    return ProbeReport(kind=kind, k=k, target_rank=target, max_rank_found=best,
                       witness=witness, trials=trials, seed=seed, holds=holds,
                       certified=certified)


def _multinomial(total: int, parts) -> int:
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def symbolic_multiplication_matrix(algebra: GradedAlgebra, k: int,
                                   exponent: int) -> list[list[Polynomial]]:
    """Entries of the multiplication map by L^exponent at degree k, as
    polynomials in the coordinates of L over the degree-1 basis."""
    h1 = algebra.dim(1)
    rows = algebra.dim(k + exponent)
    cols = algebra.dim(k)
    field = algebra.field
    zero = Polynomial.zero(h1, field)
    entries = [[zero for _ in range(cols)] for _ in range(rows)]
    deg1 = algebra.basis(1)
    for mon in monomial_basis(h1, exponent):
        coeff = _multinomial(exponent, mon.exponents)
        prod = algebra.unit()
        for j, e in enumerate(mon.exponents):
            for _ in range(e):
                prod = algebra.multiply(prod, deg1[j])
        if prod.is_zero:
            continue
        m = algebra._mul_matrix(prod, k, k + exponent)
        term = Polynomial.from_monomial(mon, field, coeff)
        for r in range(rows):
            for c in range(cols):
                if m.entries[r][c]:
                    entries[r][c] = entries[r][c] + term.scale(m.entries[r][c])
    return entries


def symbolic_probe_determinant(algebra: GradedAlgebra, kind: str,
                               k: int) -> Polynomial:
    """Determinant of the probed map as a polynomial in the coordinates of L."""
    exponent = algebra.socle_degree - 2 * k if kind == SLP else 1
    entries = symbolic_multiplication_matrix(algebra, k, exponent)
    if not entries or len(entries) != len(entries[0]):
        raise AlgebraError("symbolic certification needs a square map")
    return det_ff(Matrix(entries, algebra.field))


@dataclass
class HessianReport:
    """Second-partial matrix of a form and its symbolic determinant."""

    matrix: Matrix
    det: Polynomial
    vanishes: bool


def second_partials(form: Polynomial) -> list[list[Polynomial]]:
    n = form.n_vars
    field = form.field
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc: dict[Monomial, object] = {}
            for mon, coeff in form.terms.items():
                e = list(mon.exponents)
                scale = e[i]
                if scale == 0:
                    continue
                e[i] -= 1
                scale *= e[j]
                if scale == 0:
                    continue
                e[j] -= 1
                target = Monomial(e)
                val = coeff * field.from_int(scale)
                acc[target] = acc[target] + val if target in acc else val
            row.append(Polynomial(n, field, acc))
        out.append(row)
    return out


def hessian(form: Polynomial) -> HessianReport:
    """Exact hessian matrix and its symbolic determinant (at most 6 variables)."""
    if form.homogeneous_degree() is None:
        raise PolyError("hessian report expects a nonzero homogeneous form")
    if form.n_vars > MAX_HESSIAN_VARS:
        raise PolyError(
            f"symbolic hessian determinant limited to {MAX_HESSIAN_VARS} variables")
    entries = second_partials(form)
    matrix = Matrix(entries, form.field)
    det = det_ff(matrix)
    return HessianReport(matrix=matrix, det=det, vanishes=det.is_zero)


def hessian_slp_crosscheck(form: Polynomial, L_point, trials: int = 0,
                           seed: int = DEFAULT_SEED) -> bool:
    """Exact check that the power-multiplication pairing matrix built through
    the quotient algebra equals (d-2)! times the hessian evaluated at the
    probing point, at L_point and at `trials` further random integer points."""
    d = form.homogeneous_degree()
    if d is None or d < 2:
        raise PolyError("cross-check needs a homogeneous form of degree >= 2")
    if d > MAX_SOCLE_FACTORIAL:
        raise PolyError(f"degree capped at {MAX_SOCLE_FACTORIAL}")
    algebra = from_inverse_system(form)
    partials = second_partials(form)
    points = [list(L_point)]
    for t in range(trials):
        rng = rng_for(seed, t)
        points.append(random_int_coords(rng, form.n_vars))
    return all(_crosscheck_at(algebra, form, partials, pt) for pt in points)


def _crosscheck_at(algebra, form, partials, point) -> bool:
    n = form.n_vars
    field = form.field
    if len(point) != n:
        raise PolyError(f"point length {len(point)} != {n} variables")
    d = algebra.socle_degree
    L_poly = Polynomial(n, field,
                        {Monomial([1 if j == i else 0 for j in range(n)]): c
                         for i, c in enumerate(point) if c})
    L = algebra.reduce(L_poly, 1)
    power = algebra.power(L, d - 2)
    fact = field.from_int(factorial(d - 2))
    variables = [algebra.reduce(Polynomial.variable(i, n, field), 1)
                 for i in range(n)]
    for i in range(n):
        left_i = algebra.multiply(power, variables[i])
        for j in range(n):
            prod = algebra.multiply(left_i, variables[j])
            lhs = socle_contraction_value(algebra, prod)
            rhs = fact * partials[i][j].eval_at(point)
            if lhs != rhs:
                return False
    return True

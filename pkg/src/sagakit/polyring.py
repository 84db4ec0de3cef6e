"""Sparse exact multivariate polynomial arithmetic over Q and prime fields.

Polynomials are stored as maps from monomials (exponent vectors) to nonzero
coefficients.  Coefficients are `fractions.Fraction` in rational mode and
`Fp` wrappers in prime-field mode; all arithmetic is exact.  Monomials are
ordered graded-lexicographically with x0 > x1 > ... > xn, and every basis
enumeration and printed form follows that order (largest first), which keeps
pivot choices and golden outputs reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class PolyError(ValueError):
    """Invalid polynomial operation (shape, homogeneity, field mix)."""


class PolyParseError(PolyError):
    """Syntax or semantic error while parsing polynomial text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FieldMismatchError(PolyError):
    """Operands live over different coefficient fields."""


def _is_prime(p: int) -> bool:
    # deterministic Miller-Rabin, valid for all 64-bit inputs
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Fp:
    """An element of the prime field F_p. Immutable."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        object.__setattr__(self, "val", val % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *args):
        raise AttributeError("Fp is immutable")

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.val
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldMismatchError(
                    f"denominator {other.denominator} not invertible in F_{self.p}")
            return other.numerator * pow(other.denominator, self.p - 2, self.p)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Fp(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Fp(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Fp(v - self.val, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Fp(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        if self.val == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fp(v * pow(self.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __pow__(self, k: int):
        return Fp(pow(self.val, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        if isinstance(other, Fraction) and other.denominator == 1:
            return self.val == other.numerator % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return str(self.val)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals, or F_p for a prime p.

    Rational mode is the default and the only mode used for identity
    verification; prime fields exist for searches that need exhaustive
    root scans over a finite field.
    """

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p is not None:
            raise ValueError("rational field takes no modulus")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse 'rational' or 'fp:<p>'."""
        if text == "rational":
            return cls.rational()
        if text.startswith("fp:"):
            try:
                return cls.prime(int(text[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field spec {text!r}: {exc}") from None
        raise ValueError(f"bad field spec {text!r} (want 'rational' or 'fp:<p>')")

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def zero(self):
        return Fraction(0) if self.is_rational else Fp(0, self.p)

    def one(self):
        return Fraction(1) if self.is_rational else Fp(1, self.p)

    def from_int(self, k: int):
        return Fraction(k) if self.is_rational else Fp(k, self.p)

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if self.is_rational:
            return Fraction(num, den)
        if den % self.p == 0:
            raise FieldMismatchError(
                f"coefficient {num}/{den} not invertible in F_{self.p}")
        return Fp(num * pow(den, self.p - 2, self.p), self.p)

    def coerce(self, x):
        """Bring an int/Fraction/Fp into this field, validating the modulus."""
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            if self.is_rational:
                return x
            return self.from_fraction(x.numerator, x.denominator)
        if isinstance(x, Fp):
            if self.is_rational or x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} scalar in {self} context")
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def __str__(self):
        return "rational" if self.is_rational else f"fp:{self.p}"


RATIONAL = FieldSpec.rational()


@total_ordering
class Monomial:
    """Exponent vector of a monomial; ordered graded-lex with x0 > ... > xn."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise PolyError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, *args):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise PolyError("variable count mismatch")
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def _key(self):
        return (self.degree, self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self.exponents)

    def to_string(self, letter: str = "x") -> str:
        parts = [f"{letter}{i}" + (f"^{e}" if e > 1 else "")
                 for i, e in enumerate(self.exponents) if e > 0]
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return self.to_string()


def monomial_basis(n_vars: int, d: int) -> list[Monomial]:
    """All degree-d monomials in n_vars variables, graded-lex order, largest first."""
    if n_vars < 1:
        raise PolyError("need at least one variable")
    if d < 0:
        raise PolyError("negative degree")

    def gen(k, rem):
        if k == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for rest in gen(k - 1, rem - e):
                yield (e,) + rest

    return [Monomial(t) for t in gen(n_vars, d)]


class Polynomial:
    """A sparse exact polynomial; immutable once built, safe to share."""

    __slots__ = ("n_vars", "field", "terms")

    def __init__(self, n_vars: int, field: FieldSpec, terms=None):
        clean = {}
        for mon, coeff in (terms or {}).items():
            if not isinstance(mon, Monomial):
                mon = Monomial(mon)
            if len(mon) != n_vars:
                raise PolyError(f"monomial {mon!r} has wrong variable count")
            c = field.coerce(coeff)
            if c:
                clean[mon] = c
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int, field: FieldSpec = RATIONAL) -> "Polynomial":
        return cls(n_vars, field)

    @classmethod
    def constant(cls, value, n_vars: int, field: FieldSpec = RATIONAL) -> "Polynomial":
        return cls(n_vars, field, {Monomial([0] * n_vars): value})

    @classmethod
    def variable(cls, index: int, n_vars: int, field: FieldSpec = RATIONAL,
                 power: int = 1) -> "Polynomial":
        if not 0 <= index < n_vars:
            raise PolyError(f"variable index {index} out of range")
        exps = [0] * n_vars
        exps[index] = power
        return cls(n_vars, field, {Monomial(exps): 1})

    @classmethod
    def from_monomial(cls, mon: Monomial, field: FieldSpec = RATIONAL,
                      coeff=1) -> "Polynomial":
        return cls(len(mon), field, {mon: coeff})

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        return max((m.degree for m in self.terms), default=None)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if zero or inhomogeneous."""
        degs = {m.degree for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        """True for zero and for polynomials whose terms share one degree."""
        return len({m.degree for m in self.terms}) <= 1

    def coefficient(self, mon: Monomial):
        return self.terms.get(mon, self.field.zero())

    def constant_value(self):
        """The scalar value of a degree-<=0 polynomial."""
        if self.is_zero:
            return self.field.zero()
        if self.degree() != 0:
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def coefficient_vector(self, basis: list[Monomial]):
        """Coefficients read off along an explicit monomial basis."""
        index = {m: i for i, m in enumerate(basis)}
        vec = [self.field.zero()] * len(basis)
        for mon, coeff in self.terms.items():
            if mon not in index:
                raise PolyError(f"monomial {mon!r} outside the given basis")
            vec[index[mon]] = coeff
        return vec

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.n_vars != other.n_vars:
            raise PolyError("variable count mismatch")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for mon, coeff in other.terms.items():
            s = terms.get(mon, self.field.zero()) + coeff
            if s:
                terms[mon] = s
            else:
                terms.pop(mon, None)
        return Polynomial(self.n_vars, self.field, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n_vars, self.field,
                          {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, scalar) -> "Polynomial":
        c = self.field.coerce(scalar)
        if not c:
            return Polynomial.zero(self.n_vars, self.field)
        return Polynomial(self.n_vars, self.field,
                          {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = m1 * m2
                prod = c1 * c2
                if mon in acc:
                    acc[mon] = acc[mon] + prod
                else:
                    acc[mon] = prod
        return Polynomial(self.n_vars, self.field, acc)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolyError("negative power")
        result = Polynomial.constant(1, self.n_vars, self.field)
        for _ in range(k):
            result = result * self
        return result

    def eval_at(self, point):
        """Exact evaluation at a point (length must match the variable count)."""
        point = list(point)
        if len(point) != self.n_vars:
            raise PolyError(
                f"point has length {len(point)}, expected {self.n_vars}")
        vals = [self.field.coerce(x) for x in point]
        total = self.field.zero()
        for mon, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, mon.exponents):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    # -- text ------------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex order, largest monomial first."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_string(self, letter: str = "x") -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for mon, coeff in self.sorted_terms():
            if isinstance(coeff, Fp):
                sign, mag = "+", str(coeff.val)
                is_one = coeff.val == 1
            else:
                sign = "-" if coeff < 0 else "+"
                mag = str(abs(coeff))
                is_one = abs(coeff) == 1
            if mon.degree == 0:
                body = mag
            elif is_one:
                body = mon.to_string(letter)
            else:
                body = f"{mag}*{mon.to_string(letter)}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()})"

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.n_vars == other.n_vars
                and self.field == other.field and self.terms == other.terms)


# -- parsing ------------------------------------------------------------

def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError("expected variable index after 'x'", i)
            tokens.append(("var", int(text[i + 1:j]), i))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, None, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


def parse_poly(text: str, n_vars: int, field: FieldSpec = RATIONAL) -> "Polynomial":
    """Parse polynomial text over variables x0..x{n_vars-1}.

    Grammar: terms joined by + and -; a term is a product of factors joined
    by '*' (or juxtaposition); a factor is an integer (optionally 'a/b') or a
    variable power 'xi' / 'xi^e'.  Whitespace is ignored.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    acc: dict[Monomial, object] = {}

    def parse_term(sign: int):
        kind, _, at = peek()
        if kind not in ("int", "var"):
            raise PolyParseError("expected a coefficient or variable", at)
        coeff = field.from_int(sign)
        exps = [0] * n_vars
        expect_factor = True
        while True:
            kind, value, at = peek()
            if kind == "int" and expect_factor:
                advance()
                if peek()[0] == "/":
                    advance()
                    dkind, den, dat = advance()
                    if dkind != "int":
                        raise PolyParseError("expected integer denominator", dat)
                    try:
                        coeff = coeff * field.from_fraction(value, den)
                    except (ZeroDivisionError, FieldMismatchError) as exc:
                        raise PolyParseError(str(exc), dat) from None
                else:
                    coeff = coeff * field.from_int(value)
                expect_factor = False
            elif kind == "var":
                advance()
                if value >= n_vars:
                    raise PolyParseError(f"unknown variable x{value}", at)
                exp = 1
                if peek()[0] == "^":
                    advance()
                    ekind, ev, eat = advance()
                    if ekind != "int":
                        raise PolyParseError("expected integer exponent", eat)
                    exp = ev
                exps[value] += exp
                expect_factor = False
            elif kind == "*":
                if expect_factor:
                    raise PolyParseError("misplaced '*'", at)
                advance()
                expect_factor = True
            else:
                if expect_factor:
                    raise PolyParseError("dangling operator", at)
                break
        mon = Monomial(exps)
        if mon in acc:
            acc[mon] = acc[mon] + coeff
        else:
            acc[mon] = coeff

    # leading sign
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if advance()[0] == "-" else 1
    if peek()[0] == "end":
        raise PolyParseError("empty polynomial", peek()[2])
    parse_term(sign)
    while peek()[0] != "end":
        kind, _, at = advance()
        if kind not in ("+", "-"):
            raise PolyParseError(f"expected '+' or '-'", at)
        parse_term(-1 if kind == "-" else 1)
    return Polynomial(n_vars, field, acc)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product of two polynomials over the same ring."""
    return p * q


def eval_at(p: Polynomial, point):
    """Exact evaluation of p at a point."""
    return p.eval_at(point)


def scalar_str(x) -> str:
    """Canonical text form of an exact scalar, for JSON payloads."""
    if isinstance(x, Fp):
        return str(x.val)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)

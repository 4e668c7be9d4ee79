"""Exact integer linear algebra and polynomial arithmetic.

Everything here works over arbitrary-precision integers (plain ``int``)
and exact rationals (``fractions.Fraction``).  No floating point is used
anywhere in the package; every downstream certificate rests on the
exactness of these primitives.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Univariate polynomial with integer coefficients.

    Coefficients are stored ascending, so ``coeffs[k]`` is the
    coefficient of ``t**k``.  Trailing zeros are stripped; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __rmul__(self, other: int) -> "IntPolynomial":
        return self * other

    def eval(self, x: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int and Fraction input."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_sign(self, x: Fraction) -> int:
        """Sign of self at a rational point, via integers only.

        Computes den**deg * p(num/den), whose sign equals sign(p(x))
        because den > 0.  Avoids Fraction arithmetic in hot loops.
        """
        if self.is_zero:
            return 0
        num, den = x.numerator, x.denominator
        acc = self.coeffs[-1]
        dp = 1
        for c in reversed(self.coeffs[:-1]):
            dp *= den
            acc = acc * num + c * dp
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def mirror(self) -> "IntPolynomial":
        """Return p(-t)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def reversed_coeffs(self) -> "IntPolynomial":
        """Return t**deg * p(1/t), the coefficient-reversed polynomial."""
        return IntPolynomial(reversed(self.coeffs))

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def pretty(self, var: str = "t") -> str:
        """Human-readable form, descending powers."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.pretty()!r})"


def poly_eval(p: IntPolynomial, x: Scalar) -> Scalar:
    return p.eval(x)


def _pseudo_rem_positive(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of a by b scaled by a positive constant.

    Integer pseudo-division computes lc(b)**(d+1) * a mod b; when that
    multiplier is negative the result is negated so the output is always
    a positive rational multiple of the true remainder.  Sign-sensitive
    callers (Sturm chains) rely on this.
    """
    d = a.degree - b.degree
    if d < 0:
        return a
    lc = b.lead
    r = list(a.coeffs)
    bc = b.coeffs
    for k in range(a.degree, b.degree - 1, -1):
        coef = r[k]
        for i in range(len(r)):
            r[i] *= lc
        if coef:
            shift = k - b.degree
            for i, c in enumerate(bc):
                r[i + shift] -= coef * c
        del r[k]
    rem = IntPolynomial(r)
    if lc < 0 and (d + 1) % 2 == 1:
        rem = -rem
    return rem


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient.

    Uses a primitive pseudo-remainder sequence, so no rational
    arithmetic occurs and coefficient growth stays tame at the degrees
    this package handles.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem_positive(a, b)
        a, b = b, r.primitive()
    return a


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact quotient a/b in Z[t]; raises if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return IntPolynomial()
    num = [Fraction(c) for c in a.coeffs]
    den = b.coeffs
    dq = a.degree - b.degree
    if dq < 0:
        raise ValueError("inexact polynomial division")
    out = [Fraction(0)] * (dq + 1)
    for k in range(dq, -1, -1):
        c = num[k + b.degree] / den[-1]
        out[k] = c
        if c:
            for i, bc in enumerate(den):
                num[k + i] -= c * bc
    if any(num) or any(c.denominator != 1 for c in out):
        raise ValueError("inexact polynomial division")
    return IntPolynomial(int(c) for c in out)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = unit * prod f_i**i with the f_i squarefree,
    pairwise coprime, primitive, positive leading coefficient.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    f = p.primitive()
    if f.degree == 0:
        return []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    out: list[tuple[IntPolynomial, int]] = []
    b = poly_divexact(f, g)
    d = poly_divexact(f.derivative(), g) - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero else b
        if a.degree > 0:
            out.append((a, i))
        b = poly_divexact(b, a)
        if d.is_zero:
            break
        c = poly_divexact(d, a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """Product of the distinct irreducible factors of p, primitive with
    positive leading coefficient."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    f = p.primitive()
    if f.degree <= 0:
        return IntPolynomial([1])
    g = poly_gcd(f, f.derivative())
    return poly_divexact(f, g).primitive()


class IntMatrix:
    """Immutable square matrix over the integers."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        self.rows = rs
        self.n = n

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(a * k for a in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = tuple(zip(*other.rows))
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination.

        Kept algorithmically independent of charpoly() so the two can
        cross-check each other.
        """
        n = self.n
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for c in range(n - 1):
            if m[c][c] == 0:
                for r in range(c + 1, n):
                    if m[r][c] != 0:
                        m[c], m[r] = m[r], m[c]
                        sign = -sign
                        break
                else:
                    return 0
            pc = m[c][c]
            for r in range(c + 1, n):
                mrc = m[r][c]
                rowr = m[r]
                rowc = m[c]
                for j in range(c + 1, n):
                    rowr[j] = (rowr[j] * pc - mrc * rowc[j]) // prev
                rowr[c] = 0
            prev = pc
        return sign * m[n - 1][n - 1]

    def charpoly(self) -> IntPolynomial:
        """Characteristic polynomial det(tI - A), monic, by the Berkowitz
        vector recurrence.

        Division-free: every intermediate value is an integer, which is
        what makes the downstream Sturm certificates trustworthy.
        """
        n = self.n
        if n == 0:
            return IntPolynomial([1])
        rows = self.rows
        poly = [1]
        for k in range(1, n + 1):
            akk = rows[k - 1][k - 1]
            q = [1, -akk]
            if k > 1:
                r = rows[k - 1][:k - 1]
                v = [rows[i][k - 1] for i in range(k - 1)]
                q.append(-sum(a * b for a, b in zip(r, v)))
                for _ in range(k - 2):
                    v = [sum(rows[i][j] * v[j] for j in range(k - 1))
                         for i in range(k - 1)]
                    q.append(-sum(a * b for a, b in zip(r, v)))
            new = [0] * (k + 1)
            for j, pj in enumerate(poly):
                if pj:
                    top = min(j + len(q), k + 1)
                    for m in range(j, top):
                        new[m] += q[m - j] * pj
            poly = new
        return IntPolynomial(reversed(poly))

    def inverse_unimodular(self) -> "IntMatrix":
        """Inverse of a matrix with determinant +-1; exact, integer output.

        Gauss-Jordan over Fraction with an integrality check at the end;
        raises ValueError when the determinant is not a unit.
        """
        n = self.n
        aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
               for i, row in enumerate(self.rows)]
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            if piv != c:
                aug[c], aug[piv] = aug[piv], aug[c]
                det = -det
            det *= aug[c][c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        if det != 1 and det != -1:
            raise ValueError("matrix is not unimodular")
        out = []
        for i in range(n):
            row = aug[i][n:]
            if any(x.denominator != 1 for x in row):
                raise ValueError("matrix is not unimodular")
            out.append(tuple(int(x) for x in row))
        return IntMatrix(tuple(out))

    def __repr__(self) -> str:
        body = ", ".join(str(list(r)) for r in self.rows)
        return f"IntMatrix([{body}])"


def mat_charpoly(m: IntMatrix) -> IntPolynomial:
    return m.charpoly()


def fraction_to_decimal(x: Fraction, digits: int = 12) -> str:
    """Deterministic fixed-point decimal rendering of an exact rational."""
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    scaled = num * 10 ** digits // den
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def iter_signs(values: Iterable[int]) -> Iterator[int]:
    for v in values:
        yield _sign(v)

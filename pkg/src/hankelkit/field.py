"""Exact arithmetic for Q, Q[q] and the rational function field Q(q).

Everything here is exact: rationals are ``fractions.Fraction``, polynomials
keep Fraction coefficients, and a FieldElem is a reduced ratio of two
polynomials.  No floating point appears anywhere in the package.

A polynomial is stored as a rational *content* times a primitive integer
coefficient vector (ascending degree, trailing coefficient nonzero, positive
leading entry).  Products of primitive vectors stay primitive, so the hot
paths (convolution, exact division, gcd) run on plain Python ints.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, ParseError, PoleAtPoint

Rational = Fraction

# ---------------------------------------------------------------------------
# integer coefficient vectors (ascending, no trailing zeros)
# ---------------------------------------------------------------------------


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _add_int(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg_int(a):
    return tuple(-c for c in a)


def _mul_int(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _primitive(coeffs):
    """Return (primitive vector with positive leading entry, signed content)."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return (), 0
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    if coeffs[-1] < 0:
        g = -g
    if g == 1:
        return coeffs, 1
    return tuple(c // g for c in coeffs), g


def _try_div_exact(f, g):
    """Quotient of f by g when the division is exact over Z, else None."""
    if not f:
        return ()
    if not g:
        raise DivisionByZero("polynomial division by zero")
    if len(f) < len(g):
        return None
    lg = g[-1]
    dg = len(g) - 1
    rem = list(f)
    quot = [0] * (len(f) - dg)
    for pos in range(len(f) - 1, dg - 1, -1):
        top = rem[pos]
        if top:
            c, r = divmod(top, lg)
            if r:
                return None
            off = pos - dg
            quot[off] = c
            for i in range(dg + 1):
                rem[off + i] -= c * g[i]
    if any(rem[:dg]):
        return None
    return tuple(quot)


def _prem(f, g):
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g, over Z."""
    dg = len(g) - 1
    lg = g[-1]
    steps = len(f) - len(g) + 1
    done = 0
    r = list(f)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg or not r:
            break
        lr = r[-1]
        off = len(r) - 1 - dg
        r = [lg * c for c in r]
        for i in range(dg + 1):
            r[off + i] -= lr * g[i]
        done += 1
    if r and done < steps:
        m = lg ** (steps - done)
        r = [c * m for c in r]
    return _trim(r)


def _subresultant_gcd(f, g):
    """Primitive gcd of primitive vectors via the subresultant remainder sequence."""
    if len(f) < len(g):
        f, g = g, f
    a, b = f, g
    gg = 1
    h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            prim, _ = _primitive(b)
            return prim
        if len(r) == 1:
            return (1,)
        divisor = gg * h ** delta
        nxt = []
        for c in r:
            cq, cr = divmod(c, divisor)
            if cr:
                raise AssertionError("inexact division in subresultant sequence")
            nxt.append(cq)
        a, b = b, tuple(nxt)
        gg = a[-1]
        if delta > 0:
            h = gg ** delta // h ** (delta - 1)


# A few large Mersenne primes for the modular gcd fast path.
_GCD_PRIMES = (
    2305843009213693951,
    618970019642690137449562111,
    162259276829213363391578010288127,
    170141183460469231731687303715884105727,
)


def _rem_mod(a, b, p):
    """a mod b over GF(p); a, b residue lists, b nonzero."""
    binv = pow(b[-1], p - 2, p)
    bm = [c * binv % p for c in b]
    db = len(bm) - 1
    r = list(a)
    for pos in range(len(r) - 1, db - 1, -1):
        top = r[pos]
        if top:
            off = pos - db
            for i in range(db):
                r[off + i] = (r[off + i] - top * bm[i]) % p
            r[pos] = 0
    while r and r[-1] == 0:
        r.pop()
    return r


def _gcd_mod(f, g, p):
    """Monic gcd of the images of f, g in GF(p)[q] (residue list)."""
    a = [c % p for c in f]
    b = [c % p for c in g]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    while b:
        a, b = b, _rem_mod(a, b, p)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _rem_rational(f, g):
    """Primitive remainder of f by g over Q (or () when g divides f)."""
    if abs(g[-1]) == 1:
        lg = g[-1]
        dg = len(g) - 1
        r = list(f)
        for pos in range(len(r) - 1, dg - 1, -1):
            top = r[pos]
            if top:
                c = top * lg
                off = pos - dg
                for i in range(dg + 1):
                    r[off + i] -= c * g[i]
        prim, _ = _primitive(r[:dg])
        return prim
    rf = [Fraction(c) for c in f]
    dg = len(g) - 1
    lg = Fraction(g[-1])
    for pos in range(len(rf) - 1, dg - 1, -1):
        top = rf[pos]
        if top:
            c = top / lg
            off = pos - dg
            for i in range(dg + 1):
                rf[off + i] -= c * g[i]
    tail = rf[:dg]
    if not any(tail):
        return ()
    den_lcm = 1
    for c in tail:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    prim, _ = _primitive([int(c * den_lcm) for c in tail])
    return prim


def _modular_gcd(f, g):
    """Primitive gcd via GF(p) images, certified by trial division."""
    gamma = math.gcd(f[-1], g[-1])
    best = None
    combined = None
    modulus = 0
    for p in _GCD_PRIMES:
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        img = _gcd_mod(f, g, p)
        deg = len(img) - 1
        if deg == 0:
            return (1,)
        scaled = [gamma * c % p for c in img]
        if best is None or deg < best:
            best = deg
            combined = scaled
            modulus = p
        elif deg == best:
            inv = pow(modulus % p, p - 2, p)
            combined = [
                a + modulus * ((b - a) % p * inv % p)
                for a, b in zip(combined, scaled)
            ]
            modulus *= p
        else:
            continue
        half = modulus // 2
        lifted = [c - modulus if c > half else c for c in combined]
        cand, _ = _primitive(lifted)
        if cand and _try_div_exact(f, cand) is not None and _try_div_exact(g, cand) is not None:
            return cand
    return _subresultant_gcd(f, g)


def _poly_gcd(f, g):
    """Primitive gcd (positive leading entry) of primitive vectors f, g."""
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    # knock a large degree gap down with one rational remainder step
    while len(f) - len(g) > 32 and len(g) > 1:
        r = _rem_rational(f, g)
        if not r:
            return g
        f, g = g, r
    if len(g) == 1:
        return (1,)
    if len(f) <= 40:
        return _subresultant_gcd(f, g)
    return _modular_gcd(f, g)


# ---------------------------------------------------------------------------
# polynomials over Q
# ---------------------------------------------------------------------------


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    num = math.gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class Polynomial:
    """Univariate polynomial over Q in the indeterminate q."""

    __slots__ = ("content", "coeffs")

    def __init__(self, values=()):
        vals = [Fraction(v) for v in values]
        while vals and vals[-1] == 0:
            vals.pop()
        if not vals:
            self.content = Fraction(0)
            self.coeffs = ()
            return
        den_lcm = 1
        for v in vals:
            den_lcm = den_lcm * v.denominator // math.gcd(den_lcm, v.denominator)
        ints = [int(v * den_lcm) for v in vals]
        prim, cont = _primitive(ints)
        self.content = Fraction(cont, den_lcm)
        self.coeffs = prim

    @classmethod
    def _make(cls, content, coeffs):
        p = object.__new__(cls)
        if not coeffs:
            p.content = Fraction(0)
            p.coeffs = ()
        else:
            p.content = content if isinstance(content, Fraction) else Fraction(content)
            p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, value) -> "Polynomial":
        v = Fraction(value)
        if v == 0:
            return P_ZERO
        return cls._make(v, (1,))

    @classmethod
    def monomial(cls, coeff, degree) -> "Polynomial":
        c = Fraction(coeff)
        if c == 0:
            return P_ZERO
        return cls._make(c, (0,) * degree + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficients(self):
        """Ascending Fraction coefficients (the canonical public view)."""
        return [self.content * c for c in self.coeffs]

    def __call__(self, point) -> Fraction:
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return self.content * acc

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        g = _frac_gcd(self.content, other.content)
        a = int(self.content / g)
        b = int(other.content / g)
        raw = _add_int(tuple(a * c for c in self.coeffs), tuple(b * c for c in other.coeffs))
        prim, cont = _primitive(raw)
        return Polynomial._make(g * cont, prim)

    def __neg__(self):
        if self.is_zero:
            return self
        return Polynomial._make(-self.content, self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return P_ZERO
        return Polynomial._make(
            self.content * other.content, _mul_int(self.coeffs, other.coeffs)
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = P_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __floordiv__(self, other):
        """Exact division; raises ValueError when the remainder is nonzero."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero:
            return P_ZERO
        quot = _try_div_exact(self.coeffs, other.coeffs)
        if quot is None:
            raise ValueError("inexact polynomial division")
        return Polynomial._make(self.content / other.content, quot)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Primitive gcd with positive leading coefficient (content 1)."""
        if self.is_zero:
            return Polynomial._make(Fraction(1), other.coeffs)
        if other.is_zero:
            return Polynomial._make(Fraction(1), self.coeffs)
        return Polynomial._make(Fraction(1), _poly_gcd(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.content == other.content and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.content, self.coeffs))

    def __str__(self):
        return _render_poly(self)

    def __repr__(self):
        return f"Polynomial({self.coefficients!r})"


P_ZERO = Polynomial._make(Fraction(0), ())
P_ONE = Polynomial._make(Fraction(1), (1,))


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial.constant(v)
    raise TypeError(f"cannot interpret {v!r} as a polynomial")


# ---------------------------------------------------------------------------
# the fraction field Q(q)
# ---------------------------------------------------------------------------


class FieldElem:
    """Element of Q(q), kept in canonical form.

    num/den are coprime over Q[q], den has integer coefficients with content 1
    and positive leading coefficient; equality and hashing are componentwise.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = P_ONE if den is None else _as_poly(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator in field element")
        if num.is_zero:
            self.num = P_ZERO
            self.den = P_ONE
            return
        ncoef = num.coeffs
        dcoef = den.coeffs
        g = _poly_gcd(ncoef, dcoef)
        if len(g) > 1:
            ncoef = _try_div_exact(ncoef, g)
            dcoef = _try_div_exact(dcoef, g)
        self.num = Polynomial._make(num.content / den.content, ncoef)
        self.den = Polynomial._make(Fraction(1), dcoef)

    @classmethod
    def _raw(cls, num, den):
        e = object.__new__(cls)
        e.num = num
        e.den = den
        return e

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.den == P_ONE and self.num.degree <= 0

    def as_rational(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a rational constant")
        return self.num.content if self.num.coeffs else Fraction(0)

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return FieldElem(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.degree > 0:
            da = self.den // g
            db = other.den // g
            return FieldElem(self.num * db + other.num * da, da * other.den)
        return FieldElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return F_ZERO
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        g1 = _poly_gcd(n1.coeffs, d2.coeffs)
        g2 = _poly_gcd(n2.coeffs, d1.coeffs)
        n1c, d2c = n1.coeffs, d2.coeffs
        n2c, d1c = n2.coeffs, d1.coeffs
        if len(g1) > 1:
            n1c = _try_div_exact(n1c, g1)
            d2c = _try_div_exact(d2c, g1)
        if len(g2) > 1:
            n2c = _try_div_exact(n2c, g2)
            d1c = _try_div_exact(d1c, g2)
        num = Polynomial._make(n1.content * n2.content, _mul_int(n1c, n2c))
        den = Polynomial._make(Fraction(1), _mul_int(d1c, d2c))
        return FieldElem._raw(num, den)

    __rmul__ = __mul__

    def reciprocal(self) -> "FieldElem":
        if self.is_zero:
            raise DivisionByZero("reciprocal of zero")
        num = Polynomial._make(1 / self.num.content, self.den.coeffs)
        den = Polynomial._make(Fraction(1), self.num.coeffs)
        return FieldElem._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("division by zero field element")
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e == 0:
            return F_ONE
        if e < 0:
            return self.reciprocal() ** (-e)
        num = self.num
        den = self.den
        nc = num.coeffs
        dc = den.coeffs
        rn, rd = nc, dc
        for _ in range(e - 1):
            rn = _mul_int(rn, nc)
            rd = _mul_int(rd, dc)
        return FieldElem._raw(
            Polynomial._make(num.content ** e, rn), Polynomial._make(Fraction(1), rd)
        )

    def specialize(self, point) -> Fraction:
        """Exact value at q = point; raises PoleAtPoint on a denominator root."""
        point = Fraction(point)
        dv = self.den(point)
        if dv == 0:
            raise PoleAtPoint(point)
        return self.num(point) / dv

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.content, self.num.coeffs, self.den.coeffs))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"FieldElem({render(self)!r})"


F_ZERO = FieldElem._raw(P_ZERO, P_ONE)
F_ONE = FieldElem._raw(P_ONE, P_ONE)


def _coerce(v):
    if isinstance(v, FieldElem):
        return v
    if isinstance(v, (int, Fraction)):
        return FieldElem(Polynomial.constant(v))
    if isinstance(v, Polynomial):
        return FieldElem(v)
    return None


def as_field(v) -> FieldElem:
    """Coerce an int, Fraction, Polynomial or FieldElem into Q(q)."""
    e = _coerce(v)
    if e is None:
        raise TypeError(f"cannot interpret {v!r} as a field element")
    return e


#: the indeterminate, as a field element
q = FieldElem._raw(Polynomial._make(Fraction(1), (0, 1)), P_ONE)


def specialize(x: FieldElem, point) -> Fraction:
    """Evaluate the reduced rational function x at q = point."""
    return as_field(x).specialize(point)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render_frac(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def _render_term(coeff: Fraction, deg: int) -> str:
    c = abs(coeff)
    if deg == 0:
        return _render_frac(c)
    qpart = "q" if deg == 1 else f"q^{deg}"
    if c == 1:
        return qpart
    return f"{_render_frac(c)}*{qpart}"


def _render_poly(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for deg in range(p.degree, -1, -1):
        c = p.content * p.coeffs[deg] if deg < len(p.coeffs) else 0
        if c == 0:
            continue
        term = _render_term(c, deg)
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    return " ".join(parts)


def render(x: FieldElem) -> str:
    """Canonical pretty form; re-parses to an equal element."""
    if x.den == P_ONE:
        return _render_poly(x.num)
    return f"({_render_poly(x.num)}) / ({_render_poly(x.den)})"


def coeff_strings(p: Polynomial):
    """Dense ascending coefficient strings ("p" or "p/q"), for JSON output."""
    if p.is_zero:
        return ["0"]
    return [_render_frac(c) for c in p.coefficients]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Parser:
    """Recursive-descent parser for the CLI expression grammar.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' signed-int)?
    atom   := nat ('/' nat)? | 'q' | '(' expr ')' | '-' factor

    Whitespace is insignificant.  The '/' between arbitrary factors extends
    the minimal grammar so that rendered canonical forms re-parse.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def fail(self, message):
        raise ParseError(message, self.pos)

    def parse(self) -> FieldElem:
        value = self.expr()
        self._skip()
        if self.pos != len(self.text):
            self.fail(f"unexpected character {self.text[self.pos]!r}")
        return value

    def expr(self) -> FieldElem:
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> FieldElem:
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch == "/":
                self.pos += 1
                divisor = self.factor()
                if divisor.is_zero:
                    raise DivisionByZero("division by zero in expression")
                value = value / divisor
            else:
                return value

    def factor(self) -> FieldElem:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            e = self.signed_int()
            if value.is_zero and e < 0:
                raise DivisionByZero("zero raised to a negative power")
            value = value ** e
        return value

    def signed_int(self) -> int:
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self._digits()
        if digits is None:
            self.fail("expected an integer exponent")
        return int(self.text[start:self.pos])

    def _digits(self):
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start:self.pos])

    def atom(self) -> FieldElem:
        ch = self.peek()
        if ch == "q":
            self.pos += 1
            return q
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return value
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch.isdigit():
            numer = self._digits()
            save = self.pos
            if self.peek() == "/":
                self.pos += 1
                denom = self._digits()
                if denom is not None:
                    if denom == 0:
                        raise DivisionByZero("zero denominator in literal")
                    return as_field(Fraction(numer, denom))
                self.pos = save
            return as_field(numer)
        self.fail("expected a number, 'q', '(' or '-'")


def parse_field_expr(text: str) -> FieldElem:
    """Parse an exact expression over Q(q); raises ParseError with position."""
    return _Parser(text).parse()

"""Exact scalars: multivariate Laurent rational functions and cyclotomic numbers.

Every coefficient in the package lives here.  The generic coefficient field
is Q(q, u1, u2, ...) where q is variable 0 and u1, u2, ... are formal nonzero
parameter symbols; the root-of-unity field replaces q by a primitive m-th
root eps and keeps the parameter symbols, with coefficients in Q(eps).

Values are immutable; all operations are pure functions.
"""

from fractions import Fraction

from ._kernel import (
    mono_mul,
    mono_pow,
    poly_add,
    poly_content,
    poly_mono_scale,
    poly_mul,
    poly_neg,
    poly_scale,
)
from .errors import (
    DivisionByZero,
    PoleAtRootOfUnity,
    PoleError,
    SymbolicParameterPresent,
)

Q_VAR = 0  # variable id of q; parameter symbols occupy ids >= 1

_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the quotient field Q(eps)


def euler_totient(m):
    result = m
    p = 2
    mm = m
    while p * p <= mm:
        if mm % p == 0:
            while mm % p == 0:
                mm //= p
            result -= result // p
        p += 1
    if mm > 1:
        result -= result // mm
    return result


def _dense_divexact(a, b):
    """Exact division of dense integer polynomial lists (ascending degree)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    assert not any(a), "non-exact polynomial division"
    return out


_CYCLOTOMIC_CACHE = {}


def cyclotomic_polynomial(m):
    """Integer coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    cached = _CYCLOTOMIC_CACHE.get(m)
    if cached is not None:
        return list(cached)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _dense_divexact(poly, cyclotomic_polynomial(d))
    _CYCLOTOMIC_CACHE[m] = tuple(poly)
    return poly


class CyclotomicElement:
    """An element of Q[x]/(Phi_m(x)), i.e. Q(eps) for eps a primitive m-th root.

    coeffs has length euler_totient(m); entry i is the coefficient of eps^i.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        phi = euler_totient(order)
        if len(coeffs) != phi:
            raise ValueError("coefficient vector has wrong length")
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def from_poly(cls, order, coeffs):
        """Reduce an arbitrary polynomial in eps modulo Phi_order."""
        phi = euler_totient(order)
        modulus = cyclotomic_polynomial(order)
        work = [Fraction(c) for c in coeffs]
        if len(work) < phi:
            work += [Fraction(0)] * (phi - len(work))
        for i in range(len(work) - 1, phi - 1, -1):
            c = work[i]
            if c:
                for j in range(phi + 1):
                    work[i - phi + j] -= c * modulus[j]
        return cls(order, work[:phi])

    @classmethod
    def zero(cls, order):
        return cls(order, [0] * euler_totient(order))

    @classmethod
    def one(cls, order):
        return cls.from_poly(order, [1])

    @classmethod
    def root_power(cls, order, k):
        """eps^k as a field element."""
        k %= order
        return cls.from_poly(order, [0] * k + [1])

    def _check(self, other):
        if not isinstance(other, CyclotomicElement):
            if isinstance(other, (int, Fraction)):
                other = CyclotomicElement.from_poly(self.order, [other])
            else:
                return NotImplemented
        if other.order != self.order:
            raise ValueError("mixed cyclotomic orders")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicElement.from_poly(self.order, prod)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero cyclotomic element")
        # extended Euclid in Q[x] against the (irreducible) cyclotomic modulus
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
            while r1 and not r1[-1]:
                r1.pop()
            if not r1:
                raise ArithmeticError("modulus not coprime; should not happen")
        lead = r1[0]
        inv = [c / lead for c in s1]
        return CyclotomicElement.from_poly(self.order, inv)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicElement.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.from_poly(self.order, [other])
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {self.text()})"

    def text(self):
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*e")
            else:
                parts.append(f"{c}*e^{i}")
        return "(" + " + ".join(parts) + ")"

    def to_json(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(data["order"], [Fraction(c) for c in data["coeffs"]])


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) < len(b):
        return [], a
    out = [Fraction(0)] * (len(a) - db)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + db] / b[-1]
        out[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return out, a[:db]


def _poly_mul_frac(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_frac(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# rational functions


def _is_pure_q(p):
    return all(all(v == Q_VAR for v, _ in m) for m in p)


def _dense_q(p):
    """Laurent dict in q -> (dense Fraction list ascending, exponent offset)."""
    if not p:
        return [], 0
    exps = [m[0][1] if m else 0 for m in p]
    lo, hi = min(exps), max(exps)
    out = [Fraction(0)] * (hi - lo + 1)
    for m, c in p.items():
        e = m[0][1] if m else 0
        out[e - lo] = c
    return out, lo


def _from_dense_q(dense, off):
    out = {}
    for i, c in enumerate(dense):
        if c:
            e = i + off
            out[((Q_VAR, e),) if e else ()] = c
    return out


def _gcd_dense_frac(a, b):
    a = [x for x in a]
    b = [x for x in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    while b:
        _, r = _poly_divmod_frac(a, b)
        while r and not r[-1]:
            r.pop()
        a, b = b, r
        if a:
            lead = a[-1]
            if lead != 1:
                a = [c / lead for c in a]
    return a


class ScalarValue:
    """An exact rational function num/den over the coefficient field.

    Zero iff the numerator is zero; equality is decided by cross
    multiplication.  The denominator is normalized so its lexicographically
    least term has coefficient one; common monomial content is stripped, and
    pure-q values are reduced by a univariate gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = {(): _one_like(num)}
        if _normalized:
            self.num = num
            self.den = den
            return
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num = {}
            self.den = {(): _one_like(den)}
            return
        num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({}, {(): _ONE}, _normalized=True)

    @classmethod
    def from_int(cls, k):
        if k == 0:
            return cls.zero()
        return cls({(): Fraction(k)}, {(): _ONE}, _normalized=True)

    @classmethod
    def monomial(cls, coeff, mono):
        if not coeff:
            return cls({}, {(): _one_like_coeff(coeff)}, _normalized=True)
        return cls({tuple(mono): coeff}, {(): _one_like_coeff(coeff)}, _normalized=True)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == self.den

    def __eq__(self, other):
        if isinstance(other, int):
            other = ScalarValue.from_int(other)
        if not isinstance(other, ScalarValue):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return poly_mul(self.num, other.den) == poly_mul(other.num, self.den)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = ScalarValue.from_int(other)
        if not isinstance(other, ScalarValue):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return ScalarValue(poly_add(self.num, other.num), dict(self.den))
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return ScalarValue(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return ScalarValue(poly_neg(self.num), dict(self.den), _normalized=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = ScalarValue.from_int(other)
        if not isinstance(other, ScalarValue):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _is_trivial_den(self):
        return len(self.den) == 1 and () in self.den

    def __mul__(self, other):
        if isinstance(other, int):
            other = ScalarValue.from_int(other)
        if not isinstance(other, ScalarValue):
            return NotImplemented
        if not self.num or not other.num:
            return ScalarValue({}, {(): _one_like(self.den)}, _normalized=True)
        # single-term factors with trivial denominator shift monomials in place
        if other._is_trivial_den() and len(other.num) == 1:
            (m, c), = other.num.items()
            return ScalarValue(poly_mono_scale(self.num, m, c), self.den, _normalized=True)
        if self._is_trivial_den() and len(self.num) == 1:
            (m, c), = self.num.items()
            return ScalarValue(poly_mono_scale(other.num, m, c), other.den, _normalized=True)
        return ScalarValue(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero scalar")
        return ScalarValue(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = ScalarValue.from_int(other)
        if not isinstance(other, ScalarValue):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if k == 0:
            one = _one_like(self.den)
            return ScalarValue({(): one}, {(): one}, _normalized=True)
        if k < 0:
            return self.inverse() ** (-k)
        out = None
        base = self
        while True:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if not k:
                return out
            base = base * base

    def mono_scaled(self, mono, coeff):
        """self * coeff * mono; hot path for delta-mode materialization."""
        if not coeff:
            return ScalarValue({}, {(): _one_like(self.den)})
        return ScalarValue(poly_mono_scale(self.num, tuple(mono), coeff), dict(self.den))

    # -- serialization ------------------------------------------------

    def _sorted_terms(self, p):
        return sorted(p.items(), key=lambda kv: kv[0])

    def text(self):
        """Deterministic sum-of-signed-terms rendering, e.g. '1*q^2 + -1*u1^-1'."""
        if not self.num:
            return "0"
        num = _poly_text(self.num)
        if self.den == {(): _one_like(self.den)}:
            return num
        return f"({num}) / ({_poly_text(self.den)})"

    def __repr__(self):
        return f"ScalarValue[{self.text()}]"

    def to_json(self):
        return {"num": _poly_json(self.num), "den": _poly_json(self.den)}

    @classmethod
    def from_json(cls, data):
        return cls(_poly_from_json(data["num"]), _poly_from_json(data["den"]))


_CYCLO_ONES = {}


def _one_like(poly):
    for c in poly.values():
        if isinstance(c, Fraction):
            return _ONE
        one = _CYCLO_ONES.get(c.order)
        if one is None:
            one = CyclotomicElement.one(c.order)
            _CYCLO_ONES[c.order] = one
        return one
    return _ONE


def _one_like_coeff(coeff):
    if isinstance(coeff, CyclotomicElement):
        return _one_like({(): coeff})
    return _ONE


def _normalize(num, den):
    # strip common monomial content of the denominator (shift both sides)
    content = poly_content(den)
    if content:
        inv = mono_pow(content, -1)
        den = {mono_mul(m, inv): c for m, c in den.items()}
        num = {mono_mul(m, inv): c for m, c in num.items()}
    # univariate reduction when everything is a rational function of q alone
    if len(den) > 1:
        some = next(iter(num.values()))
        if isinstance(some, Fraction) and _is_pure_q(num) and _is_pure_q(den):
            num, den = _reduce_pure_q(num, den)
    # a bare monomial ratio divides out exactly
    if len(den) == 1 and len(num) == 1:
        (dm, dc), = den.items()
        (nm, nc), = num.items()
        return {mono_mul(nm, mono_pow(dm, -1)): nc / dc}, {(): _one_like(den)}
    # make the lexicographically least denominator term have coefficient one
    lead = den[min(den)]
    one = _one_like(den)
    if lead != one:
        den = poly_scale(den, one / lead)
        num = poly_scale(num, one / lead) if num else num
    # representation-level cancellations that need no gcd machinery
    if len(num) == len(den):
        if num == den:
            return {(): one}, {(): one}
        if all(den.get(m) == -c for m, c in num.items()):
            return {(): -one}, {(): one}
    return num, den


def _reduce_pure_q(num, den):
    nd, noff = _dense_q(num)
    dd, doff = _dense_q(den)
    g = _gcd_dense_frac(nd, dd)
    if len(g) > 1:
        nd = [c for c in _poly_divmod_frac(nd, g)[0]]
        dd = [c for c in _poly_divmod_frac(dd, g)[0]]
    num = _from_dense_q(nd, noff)
    den = _from_dense_q(dd, doff)
    content = poly_content(den)
    if content:
        inv = mono_pow(content, -1)
        den = {mono_mul(m, inv): c for m, c in den.items()}
        num = {mono_mul(m, inv): c for m, c in num.items()}
    return num, den


def _var_name(v):
    return "q" if v == Q_VAR else f"u{v}"


def _coeff_text(c):
    if isinstance(c, CyclotomicElement):
        return c.text()
    return str(c)


def _poly_text(p):
    parts = []
    for mono, coeff in sorted(p.items(), key=lambda kv: kv[0]):
        factors = [_coeff_text(coeff)]
        for v, e in mono:
            factors.append(f"{_var_name(v)}^{e}" if e != 1 else _var_name(v))
        parts.append("*".join(factors))
    return " + ".join(parts)


def _coeff_json(c):
    if isinstance(c, CyclotomicElement):
        return c.to_json()
    return str(c)


def _coeff_from_json(data):
    if isinstance(data, dict):
        return CyclotomicElement.from_json(data)
    return Fraction(data)


def _poly_json(p):
    return [
        [_coeff_json(c), [[v, e] for v, e in m]]
        for m, c in sorted(p.items(), key=lambda kv: kv[0])
    ]


def _poly_from_json(data):
    out = {}
    for coeff, mono in data:
        out[tuple((v, e) for v, e in mono)] = _coeff_from_json(coeff)
    return out


# ---------------------------------------------------------------------------
# coefficient fields


class ScalarField:
    """Factory for scalars; generic (symbolic q) or cyclotomic (q = eps)."""

    def __init__(self, root_order=None):
        self.root_order = root_order
        self._psi_cache = {}
        self._pow_cache = {}
        self._one = None
        self._zero = None
        self._qm1 = None

    @property
    def is_cyclotomic(self):
        return self.root_order is not None

    def _coeff_one(self):
        if self.root_order is None:
            return _ONE
        return CyclotomicElement.one(self.root_order)

    def one(self):
        if self._one is None:
            c = self._coeff_one()
            self._one = ScalarValue({(): c}, {(): c}, _normalized=True)
        return self._one

    def zero(self):
        if self._zero is None:
            self._zero = ScalarValue({}, {(): self._coeff_one()}, _normalized=True)
        return self._zero

    def from_int(self, k):
        if k == 0:
            return self.zero()
        c = self._coeff_one()
        return ScalarValue({(): c * k}, {(): c}, _normalized=True)

    def q_power(self, k):
        """q^k (generic) or eps^k (cyclotomic) as a scalar."""
        if self.root_order is None:
            if k == 0:
                return self.one()
            return ScalarValue({((Q_VAR, k),): _ONE}, {(): _ONE}, _normalized=True)
        c = CyclotomicElement.root_power(self.root_order, k)
        one = self._coeff_one()
        return ScalarValue({(): c}, {(): one}, _normalized=True)

    def qm1(self):
        """q - q^{-1}."""
        return self.q_power(1) - self.q_power(-1)

    def reduce_param(self, param):
        """Canonical form of a spectral parameter: exponents mod m at a root of unity."""
        if self.root_order is None:
            return param
        return type(param)(param.symbol, param.qexp % self.root_order)

    def symbol_power(self, symbol, r):
        """u_{symbol+1}^r for a parameter symbol id."""
        if r == 0:
            return self.one()
        c = self._coeff_one()
        return ScalarValue({((symbol + 1, r),): c}, {(): c}, _normalized=True)

    def param_power(self, param, r):
        """(a q^e)^r for param = (symbol a, exponent e)."""
        if r == 0:
            return self.one()
        sym, e = param
        if self.root_order is None:
            mono = []
            if e * r:
                mono.append((Q_VAR, e * r))
            mono.append((sym + 1, r))
            mono.sort()
            return ScalarValue({tuple(mono): _ONE}, {(): _ONE}, _normalized=True)
        c = CyclotomicElement.root_power(self.root_order, e * r)
        one = self._coeff_one()
        return ScalarValue({((sym + 1, r),): c}, {(): one}, _normalized=True)

    # -- the structure function psi(z) = (q - q^{-1} z)/(1 - z) --------

    def psi_qpower(self, e, invert):
        """psi(q^e), or its reciprocal; the reciprocal at e=0 is zero by convention."""
        key = ("q", e if self.root_order is None else e % self.root_order, invert)
        hit = self._psi_cache.get(key)
        if hit is not None:
            return hit
        if self.root_order is not None:
            e %= self.root_order
        if e == 0:
            if not invert:
                raise PoleError("1")
            value = self.zero()
        else:
            num = self.q_power(1) - self.q_power(e - 1)
            den = self.one() - self.q_power(e)
            if self.root_order is not None and den.is_zero():
                raise PoleAtRootOfUnity(f"1 - eps^{e} vanishes")
            if invert:
                if num.is_zero():
                    raise PoleError(f"q^{e}", f"reciprocal pole: psi(q^{e}) = 0")
                value = den / num
            else:
                value = num / den
        self._psi_cache[key] = value
        return value

    def psi_cross(self, sym_num, sym_den, e, invert):
        """psi(u_a/u_b q^e) for distinct symbols a, b; never zero nor a pole."""
        key = ("x", sym_num, sym_den, e if self.root_order is None else e % self.root_order, invert)
        hit = self._psi_cache.get(key)
        if hit is not None:
            return hit
        ratio = lambda k: self.symbol_power(sym_num, 1) * self.symbol_power(sym_den, -1) * self.q_power(k)
        num = self.q_power(1) - ratio(e - 1)
        den = self.one() - ratio(e)
        value = den / num if invert else num / den
        self._psi_cache[key] = value
        return value


GENERIC_FIELD = ScalarField()


# ---------------------------------------------------------------------------
# q-integers


def quantum_integer(l, field=GENERIC_FIELD):
    """[l]_q = (q^l - q^{-l})/(q - q^{-1}), expanded exactly."""
    if l == 0:
        return field.zero()
    n = abs(l)
    out = field.zero()
    for e in range(n - 1, -n - 1, -2):
        out = out + field.q_power(e)
    return out if l > 0 else -out


def quantum_factorial(r, field=GENERIC_FIELD):
    """[r]_q! = [r]_q [r-1]_q ... [1]_q."""
    if r < 0:
        raise ValueError("factorial of a negative integer")
    out = field.one()
    for i in range(2, r + 1):
        out = out * quantum_integer(i, field)
    return out


def quantum_binomial(m, mp, field=GENERIC_FIELD):
    """The q-binomial [m choose m']_q."""
    if not (m >= mp >= 0):
        raise ValueError("need m >= m' >= 0")
    num = quantum_factorial(m, field)
    den = quantum_factorial(m - mp, field) * quantum_factorial(mp, field)
    return num / den


# ---------------------------------------------------------------------------
# specialization of q at a root of unity


def _specialize_poly(p, m):
    """Map a Fraction-coefficient Laurent dict through q -> eps (order m)."""
    out = {}
    for mono, coeff in p.items():
        qexp = 0
        rest = []
        for v, e in mono:
            if v == Q_VAR:
                qexp = e
            else:
                rest.append((v, e))
        c = CyclotomicElement.root_power(m, qexp) * coeff
        key = tuple(rest)
        acc = out.get(key)
        if acc is None:
            if c:
                out[key] = c
        else:
            acc = acc + c
            if acc:
                out[key] = acc
            else:
                del out[key]
    return out


def specialize_scalar(v, m):
    """Specialize q at a primitive m-th root of unity, keeping parameter symbols.

    Raises PoleAtRootOfUnity when the denominator collapses to zero.
    """
    num = _specialize_poly(v.num, m)
    den = _specialize_poly(v.den, m)
    if not den:
        raise PoleAtRootOfUnity(f"denominator vanishes at a primitive {m}-th root of unity")
    return ScalarValue(num, den)


def specialize_q(v, m):
    """Evaluate a pure-q scalar at a primitive m-th root; exact in Q(eps)."""
    if not (_is_pure_q(v.num) and _is_pure_q(v.den)):
        raise SymbolicParameterPresent("scalar contains parameter symbols")
    value = specialize_scalar(v, m)
    num = value.num.get((), CyclotomicElement.zero(m))
    den = value.den.get((), CyclotomicElement.zero(m))
    if value.num and () not in value.num:
        raise SymbolicParameterPresent("scalar contains parameter symbols")
    return num / den

"""Type-A toroidal index arithmetic, spectral parameters and l-weights.

The node set is Z/(n+1)Z with the cyclic Cartan matrix of an (n+1)-cycle.
A spectral parameter a*q^e is a pair (symbol id, integer exponent); ratios
of parameters decide every genericity predicate by pure integer arithmetic.
"""

from typing import NamedTuple

from .errors import PoleError
from .scalars import GENERIC_FIELD, ScalarField, ScalarValue


class Parameter(NamedTuple):
    """A formal nonzero spectral parameter a * q^qexp."""

    symbol: int
    qexp: int

    def shifted(self, k):
        return Parameter(self.symbol, self.qexp + k)

    def to_json(self):
        return {"symbol": self.symbol, "qexp": self.qexp}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["symbol"]), int(data["qexp"]))


class AlgebraContext:
    """The rank datum: node set {0..n} on a cycle, n >= 2."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("rank parameter n must be at least 2")
        self.n = n

    @property
    def nodes(self):
        return range(self.n + 1)

    def bar(self, j):
        """Residue of j in {0..n}."""
        return j % (self.n + 1)

    def cartan(self, i, j):
        if i == j:
            return 2
        if self.distance(i, j) == 1:
            return -1
        return 0

    def distance(self, i, j):
        """Graph distance on the (n+1)-cycle."""
        r = abs(i - j) % (self.n + 1)
        return min(r, self.n + 1 - r)

    def weight_zero(self):
        return (0,) * (self.n + 1)

    def alpha(self, i):
        """The simple root as a classical weight vector (a row of the Cartan matrix)."""
        return tuple(self.cartan(j, i) for j in self.nodes)

    def fundamental(self, i):
        return tuple(1 if j == i else 0 for j in self.nodes)


def weight_add(w1, w2):
    return tuple(a + b for a, b in zip(w1, w2))


def weight_sub(w1, w2):
    return tuple(a - b for a, b in zip(w1, w2))


def weight_level(w):
    """Pairing with the central element c = h_0 + ... + h_n."""
    return sum(w)


# ---------------------------------------------------------------------------
# genericity predicates; all are exact integer computations on parameters


def pair_tensor_defined(a, b, ctx):
    """Whether the two-factor box tensor action exists: a/b not in q^{(n+1)Z}."""
    if a.symbol != b.symbol:
        return True
    return (a.qexp - b.qexp) % (ctx.n + 1) != 0


def generic_family_ok(params, ctx):
    """a_i/a_j outside q^{(n+1)Z} and q^{+-2 + (n+1)Z} for all i < j."""
    m = ctx.n + 1
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            if params[i].symbol != params[j].symbol:
                continue
            d = (params[i].qexp - params[j].qexp) % m
            if d == 0 or d == 2 % m or d == (-2) % m:
                return False
    return True


def condition_E(n, k):
    """Length bound for a q-segment family to act on the full tensor."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if n % 2 == 0:
        return k <= n + 1
    return k <= (n + 1) // 2


def condition_C(n, ell):
    """Nodes admitting an extremal vector in the highest/lowest tensor."""
    if not 1 <= ell <= n:
        raise ValueError("need 1 <= ell <= n")
    if n % 2 == 0:
        return ell in (1, n)
    r = (n - 1) // 2
    return ell in (1, r + 1, n)


def hl_tensor_defined(a, b, ell, ctx):
    """Whether the highest-lowest tensor exists: a/b not in q^{-2-d-N}, d = d(0, ell)."""
    if a.symbol != b.symbol:
        return True
    return a.qexp - b.qexp > -2 - ctx.distance(0, ell)


def column_tensor_defined(a, b):
    """Whether a two-factor column-module tensor exists: a/b not in q^{2Z}."""
    if a.symbol != b.symbol:
        return True
    return (a.qexp - b.qexp) % 2 != 0


# ---------------------------------------------------------------------------
# psi at a parameter ratio


def psi_of_ratio(field, cnum, cden, shift, invert=False):
    """psi((cnum/cden) * q^shift) or its reciprocal, as an exact scalar.

    Same-symbol ratios reduce to pure q-powers; distinct symbols stay
    symbolic (such values are never zero and never a pole).  The reciprocal
    at ratio one is zero; PoleError signals the genuine poles.
    """
    if cnum.symbol == cden.symbol:
        return field.psi_qpower(cnum.qexp - cden.qexp + shift, invert)
    return field.psi_cross(cnum.symbol, cden.symbol, cnum.qexp - cden.qexp + shift, invert)


# ---------------------------------------------------------------------------
# l-weight monomials


class YMonomial:
    """A finitely supported exponent map (node, Parameter) -> Z plus a weight.

    Invariant: for every node i the exponents over all parameters sum to the
    weight pairing at i.
    """

    __slots__ = ("factors", "weight")

    def __init__(self, factors, weight):
        cleaned = {k: e for k, e in dict(factors).items() if e}
        self.factors = tuple(sorted(cleaned.items()))
        self.weight = tuple(weight)

    @classmethod
    def identity(cls, ctx):
        return cls({}, ctx.weight_zero())

    @classmethod
    def single(cls, ctx, node, param, exp=1):
        w = list(ctx.weight_zero())
        w[node] += exp
        return cls({(node, param): exp}, w)

    def __mul__(self, other):
        merged = dict(self.factors)
        for k, e in other.factors:
            merged[k] = merged.get(k, 0) + e
        return YMonomial(merged, weight_add(self.weight, other.weight))

    def inverse(self):
        return YMonomial({k: -e for k, e in self.factors}, tuple(-x for x in self.weight))

    def check_invariant(self):
        sums = {}
        for (node, _), e in self.factors:
            sums[node] = sums.get(node, 0) + e
        return all(self.weight[i] == sums.get(i, 0) for i in range(len(self.weight)))

    def node_factors(self, i):
        return [(param, e) for (node, param), e in self.factors if node == i]

    def __eq__(self, other):
        if not isinstance(other, YMonomial):
            return NotImplemented
        return self.factors == other.factors and self.weight == other.weight

    def __hash__(self):
        return hash((self.factors, self.weight))

    def __repr__(self):
        if not self.factors:
            return "Y[1]"
        bits = []
        for (node, param), e in self.factors:
            s = f"Y({node};{param.symbol},{param.qexp})"
            bits.append(s if e == 1 else f"{s}^{e}")
        return "Y[" + " ".join(bits) + "]"

    def to_json(self):
        return {
            "weight": list(self.weight),
            "factors": [
                {"node": node, "symbol": param.symbol, "qexp": param.qexp, "exp": e}
                for (node, param), e in self.factors
            ],
        }

    @classmethod
    def from_json(cls, data):
        factors = {
            (f["node"], Parameter(f["symbol"], f["qexp"])): f["exp"]
            for f in data["factors"]
        }
        return cls(factors, tuple(data["weight"]))


# ---------------------------------------------------------------------------
# mode coefficients of the psi current and of phi eigenvalue series


def psi_series_coeff(field, c, m, sign, invert=False):
    """Mode-m coefficient of the expansion of psi(c z)^{+-1}.

    sign '+' expands in nonnegative powers of z (m >= 0), sign '-' in
    nonpositive powers (m <= 0).  Closed forms:
      psi(cz)      in +:  q at m=0,      (q - q^-1) c^m          for m >= 1
      psi(cz)      in -:  q^-1 at m=0,   (q^-1 - q) c^m          for m <= -1
      psi(cz)^-1   in +:  q^-1 at m=0,  -(q - q^-1) q^-2m c^m    for m >= 1
      psi(cz)^-1   in -:  q at m=0,      (q - q^-1) q^-2m c^m    for m <= -1
    """
    if sign == "+":
        if m < 0:
            raise ValueError("plus series has nonnegative modes")
        if m == 0:
            return field.q_power(-1) if invert else field.q_power(1)
        base = field.qm1() * field.param_power(c, m)
        if invert:
            return -(base * field.q_power(-2 * m))
        return base
    if m > 0:
        raise ValueError("minus series has nonpositive modes")
    if m == 0:
        return field.q_power(1) if invert else field.q_power(-1)
    base = field.qm1() * field.param_power(c, m)
    if invert:
        return base * field.q_power(-2 * m)
    return -base


def psi_series(field, c, sign, upto, invert=False):
    """Coefficients [|m|=0 .. upto] of psi(c z)^{+-1} in the given direction."""
    out = []
    for k in range(upto + 1):
        m = k if sign == "+" else -k
        out.append(psi_series_coeff(field, c, m, sign, invert))
    return out


def series_convolve(field, series_list, upto):
    """Truncated product of series given as coefficient lists [0..upto]."""
    acc = [field.one()] + [field.zero()] * upto
    for s in series_list:
        nxt = [field.zero()] * (upto + 1)
        for i in range(upto + 1):
            ai = acc[i]
            if ai.is_zero():
                continue
            for j in range(upto + 1 - i):
                b = s[j]
                if b.is_zero():
                    continue
                nxt[i + j] = nxt[i + j] + ai * b
        acc = nxt
    return acc


def phi_eigenvalue_series(field, monomial, i, sign, upto):
    """Coefficients [0..upto] of the phi_i^{sign} eigenvalue series of an l-weight.

    The eigenvalue of phi_i^{+-}(z) on an l-weight vector is the product over
    the monomial's node-i entries Y_{i,a}^{e} of psi(a q z)^{e}, expanded in
    the direction fixed by sign.
    """
    factors = []
    for param, e in monomial.node_factors(i):
        series = psi_series(field, param.shifted(1), sign, upto, invert=e < 0)
        factors.extend([series] * abs(e))
    if not factors:
        return [field.one()] + [field.zero()] * upto
    return series_convolve(field, factors, upto)


def phi_mode_eigenvalue(monomial, i, sign, mode, field=GENERIC_FIELD):
    """The z^mode (sign +) or z^-|mode| (sign -) coefficient of the phi eigenvalue."""
    if sign == "+" and mode < 0:
        raise ValueError("plus modes are nonnegative")
    if sign == "-" and mode > 0:
        raise ValueError("minus modes are nonpositive")
    series = phi_eigenvalue_series(field, monomial, i, sign, abs(mode))
    return series[abs(mode)]


def phi_value_at_point(field, monomial, i, point):
    """The rational value of the phi_i series of an l-weight at z = 1/point.

    This is the structure constant picked up by a delta(point * z) term that
    crosses a factor of l-weight `monomial` in a Drinfeld tensor product.
    Raises PoleError at a genuine pole (the undefined-action scenario); every
    factor is evaluated before a zero is honored, so poles are never masked
    by a vanishing companion factor.
    """
    values = [
        (psi_of_ratio(field, param.shifted(1), point, 0, invert=e < 0), abs(e))
        for param, e in monomial.node_factors(i)
    ]
    out = field.one()
    for value, mult in values:
        if value.is_zero():
            return field.zero()
        for _ in range(mult):
            out = out * value
    return out

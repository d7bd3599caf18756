"""The vector representation: basis boxes indexed by Z, delta-function currents.

The action on the box basis is
    x_i^+(z) . [j] = delta_{i, bar(j-1)} delta(a q^{j-1} z) . [j-1]
    x_i^-(z) . [j] = delta_{i, bar(j)}   delta(a q^{j} z)   . [j+1]
    phi_i^{+-}(z) . [j] = psi(a q^j z)        . [j]   if i = bar(j)
                          psi(a q^{j+1} z)^-1 . [j]   if i = bar(j-1)
                          [j]                          otherwise
and every box [j] has the l-weight Y_{bar(j), a q^{j-1}} Y_{bar(j-1), a q^j}^{-1}.
"""

from typing import NamedTuple

from .core import Parameter, YMonomial, psi_of_ratio, psi_series_coeff
from .scalars import GENERIC_FIELD


class Box(NamedTuple):
    j: int
    a: Parameter

    def to_json(self):
        return {"j": self.j, "symbol": self.a.symbol, "qexp": self.a.qexp}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["j"]), Parameter(int(data["symbol"]), int(data["qexp"])))


class ActionTerm(NamedTuple):
    """One delta(c z)-structured summand: mode r carries coefficient c^r * base."""

    target: object
    base: object  # nonzero ScalarValue
    spectral: Parameter


def box_weight(ctx, j):
    """Pairing vector: +1 at bar(j), -1 at bar(j-1), level zero."""
    w = [0] * (ctx.n + 1)
    w[ctx.bar(j)] += 1
    w[ctx.bar(j - 1)] -= 1
    return tuple(w)


def box_lweight(ctx, j, a):
    """The box dictionary [j]_a = Y_{bar(j), a q^{j-1}} Y_{bar(j-1), a q^j}^{-1}."""
    up = YMonomial.single(ctx, ctx.bar(j), a.shifted(j - 1), 1)
    down = YMonomial.single(ctx, ctx.bar(j - 1), a.shifted(j), -1)
    return up * down


class VectorRep:
    """Handle for a vector representation with spectral parameter a."""

    kind = "vector"

    def __init__(self, ctx, a, field=GENERIC_FIELD):
        self.ctx = ctx
        self.a = a
        self.field = field

    # basis keys are plain integers j

    def basis_window(self, window):
        return list(range(-window.J, window.J + 1))

    def contains(self, j):
        return True

    def x_delta(self, i, sign, j):
        """Delta-structured action of x_i^{sign}(z) on box j."""
        ctx = self.ctx
        if sign == "-":
            if ctx.bar(j) != i:
                return []
            return [ActionTerm(j + 1, self.field.one(), self.a.shifted(j))]
        if ctx.bar(j - 1) != i:
            return []
        return [ActionTerm(j - 1, self.field.one(), self.a.shifted(j - 1))]

    def phi_mode(self, i, sign, m, j):
        """Eigenvalue of the phi_{i}^{sign} mode m on box j."""
        ctx = self.ctx
        if ctx.bar(j) == i:
            return psi_series_coeff(self.field, self.a.shifted(j), m, sign)
        if ctx.bar(j - 1) == i:
            return psi_series_coeff(self.field, self.a.shifted(j + 1), m, sign, invert=True)
        if m == 0:
            return self.field.one()
        return self.field.zero()

    def phi_series(self, i, sign, upto, j):
        return [
            self.phi_mode(i, sign, m if sign == "+" else -m, j) for m in range(upto + 1)
        ]

    def phi_point(self, i, point, j):
        """Rational value of the phi_i series on box j at z = 1/point."""
        ctx = self.ctx
        if ctx.bar(j) == i:
            return psi_of_ratio(self.field, self.a.shifted(j), point, 0)
        if ctx.bar(j - 1) == i:
            return psi_of_ratio(self.field, self.a.shifted(j + 1), point, 0, invert=True)
        return self.field.one()

    def weight(self, j):
        return box_weight(self.ctx, j)

    def lweight(self, j):
        return box_lweight(self.ctx, j, self.a)

    def vector_json(self, j):
        return Box(j, self.a).to_json()

    def vector_from_json(self, data):
        box = Box.from_json(data)
        return box.j

    def describe(self):
        return {"kind": "vector", "n": self.ctx.n, "params": [self.a.to_json()]}

"""Column modules: one-column Young tableaux with an integer shift.

For odd n = 2r+1 the column subquotient of the q-segment tensor has basis
indexed by pairs (T, s) where T = (1 <= t_1 < ... < t_{r+1} <= n+1) is a
one-column tableau and s an integer shift; the pair stands for the strictly
increasing integer sequence (i_1 < ... < i_{r+1}) with i_{r+1} - i_1 <= n
under a total bijection.  The action is written directly on (T, s) through
affine crystal operators; it is implemented here independently of the tensor
engine so the two routes can be checked against each other.
"""

from itertools import combinations

from .core import Parameter, YMonomial, psi_of_ratio, psi_series, series_convolve
from .errors import ConditionViolated, PoleError
from .scalars import GENERIC_FIELD
from .vector_rep import ActionTerm


def _check_tableau(T, ctx):
    r1 = (ctx.n + 1) // 2
    if len(T) != r1:
        raise ConditionViolated("column_length", f"tableau must have {r1} entries")
    if not all(1 <= t <= ctx.n + 1 for t in T):
        raise ConditionViolated("entry_range", "entries must lie in [1, n+1]")
    if not all(a < b for a, b in zip(T, T[1:])):
        raise ConditionViolated("strictly_increasing", "entries must strictly increase")


def seq_to_shifted(seq, ctx):
    """Map a strictly increasing sequence with span <= n to (shift, tableau).

    The block index k is the least one with i_1 <= k(n+1) and the boundary
    convention (k-1)(n+1) < i_1 keeps all tableau entries inside [1, n+1];
    t counts the entries in the k-th block and s = -t + k(r+1).
    """
    n = ctx.n
    r1 = (n + 1) // 2
    if len(seq) != r1:
        raise ConditionViolated("column_length", f"sequence must have {r1} entries")
    if not all(a < b for a, b in zip(seq, seq[1:])):
        raise ConditionViolated("strictly_increasing", "sequence must strictly increase")
    if seq[-1] - seq[0] > n:
        raise ConditionViolated("column_span", "sequence span exceeds n")
    k = -((-seq[0]) // (n + 1))  # ceil(i_1 / (n+1))
    t = sum(1 for x in seq if x <= k * (n + 1))
    s = -t + k * r1
    T = tuple(x - k * (n + 1) for x in seq[t:]) + tuple(x - (k - 1) * (n + 1) for x in seq[:t])
    return s, T


def shifted_to_seq(s, T, ctx):
    """Inverse of seq_to_shifted; round-trips identically both ways."""
    n = ctx.n
    r1 = (n + 1) // 2
    _check_tableau(T, ctx)
    k = s // r1 + 1
    t = k * r1 - s
    if not 1 <= t <= r1:
        raise ConditionViolated("shift_range", "shift does not match any block split")
    lower = tuple(x + (k - 1) * (n + 1) for x in T[r1 - t :])
    upper = tuple(x + k * (n + 1) for x in T[: r1 - t])
    return lower + upper


def crystal_e(i, T, ctx):
    """Raising crystal operator on one-column tableaux; None when zero."""
    _check_tableau(T, ctx)
    n = ctx.n
    if i == 0:
        if T[0] != 1 or T[-1] == n + 1:
            return None
        return tuple(T[1:]) + (n + 1,)
    if (i + 1) not in T or i in T:
        return None
    return tuple(sorted(x if x != i + 1 else i for x in T))


def crystal_f(i, T, ctx):
    """Lowering crystal operator on one-column tableaux; None when zero."""
    _check_tableau(T, ctx)
    n = ctx.n
    if i == 0:
        if T[0] == 1 or T[-1] != n + 1:
            return None
        return (1,) + tuple(T[:-1])
    if i not in T or (i + 1) in T:
        return None
    return tuple(sorted(x if x != i else i + 1 for x in T))


class ColumnModule:
    """The column module attached to odd n = 2r+1 and a base parameter a.

    Basis keys are pairs (T, s).  Writing b = a q^{2s}, the action is
        x_i^+(z) . (T, s) = delta(b q^{t_p - 2p + 1} z) . (e_i T, s - [i=0])
                                         at the unique p with t_p = i+1,
        x_i^-(z) . (T, s) = delta(b q^{t_p - 2p + 2} z) . (f_i T, s + [i=0])
                                         at the unique p with t_p = i (n+1 for i=0),
        phi_i(z) . (T, s) = prod_{t_p = i mod n+1, t_{p+1} != t_p + 1} psi(b q^{t_p - 2p + 2} z)
                            prod_{t_p = i+1, t_{p-1} != i} psi(b q^{t_p - 2p + 3} z)^{-1} . (T, s),
    positions p being 1-based.
    """

    kind = "column"

    def __init__(self, ctx, a, field=GENERIC_FIELD, shift_modulus=None):
        if ctx.n % 2 == 0:
            raise ConditionViolated("n_odd", "column modules need odd n")
        self.ctx = ctx
        self.a = a
        self.field = field
        self.shift_modulus = shift_modulus  # reduce s mod L at a root of unity
        self.r1 = (ctx.n + 1) // 2

    # -- basis -------------------------------------------------------------

    def _key(self, T, s):
        if self.shift_modulus:
            s %= self.shift_modulus
        return (tuple(T), s)

    def contains(self, key):
        T, _ = key
        _check_tableau(T, self.ctx)
        return True

    def basis_window(self, window):
        n = self.ctx.n
        if self.shift_modulus:
            out = []
            for T in combinations(range(1, n + 2), self.r1):
                for s in range(self.shift_modulus):
                    out.append((T, s))
            return out
        out = []
        for i1 in range(-window.J, window.J + 1):
            for rest in combinations(range(i1 + 1, i1 + n + 1), self.r1 - 1):
                out.append(seq_to_shifted((i1,) + rest, self.ctx))
        return [(T, s) for s, T in out]

    # -- action -------------------------------------------------------------

    def x_delta(self, i, sign, key):
        T, s = key
        n = self.ctx.n
        if sign == "-":
            entry = i if i >= 1 else n + 1
            if entry not in T:
                return []
            Tn = crystal_f(i, T, self.ctx)
            if Tn is None:
                return []
            p = T.index(entry) + 1
            point = self.field.reduce_param(self.a.shifted(2 * s + entry - 2 * p + 2))
            target = self._key(Tn, s + (1 if i == 0 else 0))
        else:
            entry = i + 1
            if entry not in T:
                return []
            Tn = crystal_e(i, T, self.ctx)
            if Tn is None:
                return []
            p = T.index(entry) + 1
            point = self.field.reduce_param(self.a.shifted(2 * s + entry - 2 * p + 1))
            target = self._key(Tn, s - (1 if i == 0 else 0))
        return [ActionTerm(target, self.field.one(), point)]

    def _phi_factors(self, i, key):
        """The surviving psi factors of phi_i on (T, s): list of (point, invert)."""
        T, s = key
        n = self.ctx.n
        out = []
        entry = i if i >= 1 else n + 1
        reduce = self.field.reduce_param
        for p0, t in enumerate(T):
            p = p0 + 1
            if t == entry and (p0 + 1 >= len(T) or T[p0 + 1] != t + 1):
                out.append((reduce(self.a.shifted(2 * s + t - 2 * p + 2)), False))
            if t == i + 1 and (p0 == 0 or T[p0 - 1] != i):
                out.append((reduce(self.a.shifted(2 * s + t - 2 * p + 3)), True))
        return out

    def phi_series(self, i, sign, upto, key):
        field = self.field
        factors = [
            psi_series(field, point, sign, upto, invert)
            for point, invert in self._phi_factors(i, key)
        ]
        if not factors:
            return [field.one()] + [field.zero()] * upto
        return series_convolve(field, factors, upto)

    def phi_mode(self, i, sign, mode, key):
        return self.phi_series(i, sign, abs(mode), key)[abs(mode)]

    def phi_point(self, i, point, key):
        values = [
            psi_of_ratio(self.field, c, point, 0, invert)
            for c, invert in self._phi_factors(i, key)
        ]
        out = self.field.one()
        for value in values:
            if value.is_zero():
                return self.field.zero()
            out = out * value
        return out

    # -- weights -------------------------------------------------------------

    def weight(self, key):
        w = [0] * (self.ctx.n + 1)
        for i in self.ctx.nodes:
            for _, invert in self._phi_factors(i, key):
                w[i] += -1 if invert else 1
        return tuple(w)

    def lweight(self, key):
        out = YMonomial.identity(self.ctx)
        reduce = self.field.root_order
        for i in self.ctx.nodes:
            for point, invert in self._phi_factors(i, key):
                param = point.shifted(-1)
                if reduce:
                    param = Parameter(param.symbol, param.qexp % reduce)
                out = out * YMonomial.single(self.ctx, i, param, -1 if invert else 1)
        return out

    # -- serialization ---------------------------------------------------

    def vector_json(self, key):
        T, s = key
        return {"entries": list(T), "s": s, "symbol": self.a.symbol, "qexp": self.a.qexp}

    def vector_from_json(self, data):
        if Parameter(int(data["symbol"]), int(data["qexp"])) != self.a:
            raise ConditionViolated("parameter_mismatch")
        return self._key(tuple(int(x) for x in data["entries"]), int(data["s"]))

    def describe(self):
        return {
            "kind": "column",
            "n": self.ctx.n,
            "params": [self.a.to_json()],
            "shift_modulus": self.shift_modulus,
        }

    def tensor_key(self, key):
        """The box-tensor basis vector this (T, s) pair stands for."""
        T, s = key
        return shifted_to_seq(s, T, self.ctx)

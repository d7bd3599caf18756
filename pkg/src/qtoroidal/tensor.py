"""Drinfeld-coproduct action on tensor products of thin modules.

The coproduct
    x^+(z) -> x^+(z) (x) 1  +  phi^-(z) (x) x^+(z)
    x^-(z) -> x^-(z) (x) phi^+(z)  +  1 (x) x^-(z)
    phi^{+-}(z) -> phi^{+-}(z) (x) phi^{+-}(z)
acts on a basis vector through delta-structured terms: when the operator hits
factor u with delta point c, every factor crossed by a phi current contributes
the rational value of its phi_i series at z = 1/c.  For box factors this is
the closed coefficient
    A_u = prod_{s>u, bar(j_s)=i} psi(a_s/a_u q^{j_s-j_u})
          prod_{s>u, bar(j_s)=i+1} psi(a_s/a_u q^{j_s-j_u+1})^{-1}
for x^-(z), and its left-sided mirror
    B_u = prod_{s<u, bar(j_s)=i} psi(a_s/a_u q^{j_s-j_u+1})
          prod_{s<u, bar(j_s)=i+1} psi(a_s/a_u q^{j_s-j_u+2})^{-1}
for x^+(z).

Variants carve out the submodule/quotient structure of box tensors:
submodule variants assert closure (nonzero terms never leave), quotient
variants act by projection (terms leaving the subspace are dropped).
"""

from itertools import combinations, combinations_with_replacement, product

from .core import Parameter, condition_E, pair_tensor_defined, weight_add
from .errors import ActionUndefined, ConditionViolated, PoleError, QuotientViolation
from .scalars import GENERIC_FIELD, quantum_factorial
from .vector_rep import ActionTerm, Box, VectorRep


class LinearCombination:
    """A finite combination of basis vectors with nonzero exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for target, coeff in terms:
                self.add_term(target, coeff)

    def add_term(self, target, coeff):
        if coeff.is_zero():
            return
        acc = self.terms.get(target)
        if acc is None:
            self.terms[target] = coeff
        else:
            acc = acc + coeff
            if acc.is_zero():
                del self.terms[target]
            else:
                self.terms[target] = acc

    def add(self, other):
        out = LinearCombination()
        out.terms = dict(self.terms)
        for t, c in other.terms.items():
            out.add_term(t, c)
        return out

    def scaled(self, coeff):
        out = LinearCombination()
        if not coeff.is_zero():
            out.terms = {t: c * coeff for t, c in self.terms.items()}
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[t] for t, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "LinearCombination[0]"
        bits = [f"{c.text()} . {t}" for t, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]
        return "LinearCombination[" + " + ".join(bits) + "]"

    def to_json(self, module):
        return [
            {"target": module.vector_json(t), "coeff": c.to_json(), "text": c.text()}
            for t, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))
        ]


def x_mode_apply(module, i, sign, r, vector):
    """Materialize the mode-r operator x_{i,r}^{sign} on a basis vector."""
    out = LinearCombination()
    field = module.field
    for term in module.x_delta(i, sign, vector):
        coeff = term.base if r == 0 else term.base * field.param_power(term.spectral, r)
        out.add_term(term.target, coeff)
    return out


def x_mode_apply_comb(module, i, sign, r, comb):
    out = LinearCombination()
    for v, c in comb.terms.items():
        out = out.add(x_mode_apply(module, i, sign, r, v).scaled(c))
    return out


def divided_power_apply(module, i, sign, p, vector_or_comb):
    """(x_{i,0}^{sign})^p / [p]_q! applied exactly."""
    if isinstance(vector_or_comb, LinearCombination):
        comb = vector_or_comb
    else:
        comb = LinearCombination([(vector_or_comb, module.field.one())])
    for _ in range(p):
        comb = x_mode_apply_comb(module, i, sign, 0, comb)
        if comb.is_zero():
            return comb
    return comb.scaled(quantum_factorial(p, module.field).inverse())


class DrinfeldTensor:
    """Tensor product of thin factor modules under the Drinfeld coproduct.

    Basis keys are tuples of factor keys.  Subclasses may restrict the basis
    (submodule/quotient variants) by overriding `contains` and the drop rule.
    """

    kind = "tensor"

    def __init__(self, ctx, factors, field=GENERIC_FIELD):
        self.ctx = ctx
        self.factors = tuple(factors)
        self.k = len(self.factors)
        self.field = field

    # -- membership ------------------------------------------------------

    def contains(self, v):
        return True

    def _is_submodule(self):
        return False

    def basis_window(self, window):
        per_factor = [f.basis_window(window) for f in self.factors]
        return [v for v in product(*per_factor) if self.contains(v)]

    # -- the coproduct action ---------------------------------------------

    def x_delta_raw(self, i, sign, v):
        """Action on the ambient full tensor, ignoring any variant."""
        out = []
        for u in range(self.k):
            for term in self.factors[u].x_delta(i, sign, v[u]):
                base = term.base
                point = term.spectral
                crossed = range(u + 1, self.k) if sign == "-" else range(u)
                try:
                    values = [self.factors[s].phi_point(i, point, v[s]) for s in crossed]
                except PoleError as exc:
                    raise ActionUndefined(exc.argument) from exc
                for value in values:
                    base = base * value
                    if base.is_zero():
                        break
                if base.is_zero():
                    continue
                target = v[:u] + (term.target,) + v[u + 1 :]
                out.append(ActionTerm(target, base, point))
        return out

    def x_delta(self, i, sign, v):
        terms = self.x_delta_raw(i, sign, v)
        if type(self).contains is DrinfeldTensor.contains:
            return terms
        kept = []
        for term in terms:
            if self.contains(term.target):
                kept.append(term)
            elif self._is_submodule():
                raise QuotientViolation(
                    f"submodule closure violated: {v} -> {term.target} "
                    f"with coefficient {term.base.text()}"
                )
            # quotient variants project: terms leaving the subspace are dropped
        return kept

    # -- Cartan currents ----------------------------------------------------

    def phi_mode(self, i, sign, mode, v):
        return self.phi_series(i, sign, abs(mode), v)[abs(mode)]

    def phi_series(self, i, sign, upto, v):
        """Coefficients [0..upto] of the product of the factors' phi series."""
        field = self.field
        acc = [field.one()] + [field.zero()] * upto
        for s in range(self.k):
            fac = self.factors[s]
            coeffs = [
                fac.phi_mode(i, sign, m if sign == "+" else -m, v[s])
                for m in range(upto + 1)
            ]
            nxt = [field.zero()] * (upto + 1)
            for a in range(upto + 1):
                if acc[a].is_zero():
                    continue
                for b in range(upto + 1 - a):
                    if coeffs[b].is_zero():
                        continue
                    nxt[a + b] = nxt[a + b] + acc[a] * coeffs[b]
            acc = nxt
        return acc

    def phi_point(self, i, point, v):
        out = self.field.one()
        for s in range(self.k):
            out = out * self.factors[s].phi_point(i, point, v[s])
        return out

    # -- weights ------------------------------------------------------------

    def weight(self, v):
        w = self.ctx.weight_zero()
        for s in range(self.k):
            w = weight_add(w, self.factors[s].weight(v[s]))
        return w

    def lweight(self, v):
        out = self.factors[0].lweight(v[0])
        for s in range(1, self.k):
            out = out * self.factors[s].lweight(v[s])
        return out

    # -- serialization --------------------------------------------------

    def vector_json(self, v):
        return [f.vector_json(x) for f, x in zip(self.factors, v)]

    def vector_from_json(self, data):
        return tuple(f.vector_from_json(d) for f, d in zip(self.factors, data))

    def describe(self):
        return {"kind": self.kind, "n": self.ctx.n, "k": self.k}


class TensorModule(DrinfeldTensor):
    """Tensor power of vector representations, with submodule/quotient variants.

    Basis keys are integer tuples (j_1, ..., j_k); slot s carries params[s].
    """

    SUBMODULE_VARIANTS = ("subleq", "sublt", "strictincr")
    QUOTIENT_VARIANTS = ("weakdecr", "column")
    ALL_VARIANTS = ("full",) + SUBMODULE_VARIANTS + QUOTIENT_VARIANTS

    def __init__(self, ctx, params, variant="full", m=0, field=GENERIC_FIELD):
        self.params = tuple(params)
        self.variant = variant
        self.m = m
        super().__init__(ctx, [VectorRep(ctx, a, field) for a in self.params], field)

    def contains(self, v):
        variant = self.variant
        if variant == "full":
            return True
        if variant == "subleq":
            return v[0] <= v[1] + self.m * (self.ctx.n + 1)
        if variant == "sublt":
            return v[0] < v[1] + self.m * (self.ctx.n + 1)
        if variant == "strictincr":
            return all(a < b for a, b in zip(v, v[1:]))
        if variant == "weakdecr":
            return all(a >= b for a, b in zip(v, v[1:]))
        if variant == "column":
            return all(a < b for a, b in zip(v, v[1:])) and v[-1] - v[0] <= self.ctx.n
        raise ValueError(f"unknown variant {variant}")

    def _is_submodule(self):
        return self.variant in self.SUBMODULE_VARIANTS

    def basis_window(self, window):
        J = window.J
        rng = range(-J, J + 1)
        if self.variant == "strictincr":
            return [tuple(c) for c in combinations(rng, self.k)]
        if self.variant == "weakdecr":
            return [tuple(reversed(c)) for c in combinations_with_replacement(rng, self.k)]
        if self.variant == "column":
            return [tuple(c) for c in combinations(rng, self.k) if c[-1] - c[0] <= self.ctx.n]
        return [v for v in product(rng, repeat=self.k) if self.contains(v)]

    def vector_json(self, v):
        return [Box(j, a).to_json() for j, a in zip(v, self.params)]

    def vector_from_json(self, data):
        boxes = [Box.from_json(d) for d in data]
        if tuple(b.a for b in boxes) != self.params:
            raise ConditionViolated(
                "parameter_mismatch", "vector parameters do not match the module"
            )
        return tuple(b.j for b in boxes)

    def describe(self):
        return {
            "kind": "tensor",
            "n": self.ctx.n,
            "variant": self.variant,
            "m": self.m,
            "params": [a.to_json() for a in self.params],
        }


def is_q_segment(params):
    """Whether the parameters form a segment a, aq^-2, ..., aq^{-2(k-1)}."""
    head = params[0]
    return all(
        p.symbol == head.symbol and p.qexp == head.qexp - 2 * s
        for s, p in enumerate(params)
    )


def build_tensor(ctx, params, variant="full", m=0, field=GENERIC_FIELD):
    """Validate the hypotheses of a tensor variant and build the module.

    Raises ConditionViolated naming the violated predicate.
    """
    params = tuple(Parameter(*p) for p in params)
    k = len(params)
    if k < 1:
        raise ConditionViolated("nonempty_parameters")
    if variant not in TensorModule.ALL_VARIANTS:
        raise ConditionViolated("known_variant", f"unknown variant {variant!r}")
    segment = is_q_segment(params)
    if variant in ("full", "strictincr"):
        for r in range(k):
            for s in range(r + 1, k):
                if not pair_tensor_defined(params[r], params[s], ctx):
                    name = "condition_E" if segment else "pair_tensor_defined"
                    detail = (
                        f"condition (E) fails for k={k}, n={ctx.n}"
                        if segment
                        else f"pair ({r},{s}) has ratio in q^((n+1)Z)"
                    )
                    raise ConditionViolated(name, f"{name}: {detail}")
        if variant == "strictincr":
            if not segment:
                raise ConditionViolated("q_segment", "strictly-increasing variant needs a q-segment")
            if not condition_E(ctx.n, k):
                raise ConditionViolated("condition_E")
    elif variant == "weakdecr":
        if not segment:
            raise ConditionViolated("q_segment", "weakly-decreasing variant needs a q-segment")
    elif variant in ("subleq", "sublt"):
        if k != 2:
            raise ConditionViolated("two_factors", f"{variant} needs exactly two factors")
        a, b = params
        if a.symbol != b.symbol:
            raise ConditionViolated("ratio_q_power", f"{variant} needs a same-symbol ratio")
        want = (-2 if variant == "subleq" else 2) + m * (ctx.n + 1)
        if a.qexp - b.qexp != want:
            raise ConditionViolated(
                "ratio_exponent", f"{variant}(m={m}) needs ratio q^{want}"
            )
    elif variant == "column":
        if ctx.n % 2 == 0:
            raise ConditionViolated("n_odd", "column variant needs odd n")
        if k != (ctx.n + 1) // 2:
            raise ConditionViolated(
                "column_length", f"column variant needs k = {(ctx.n + 1) // 2}"
            )
        if not segment:
            raise ConditionViolated("q_segment", "column variant needs a q-segment")
    return TensorModule(ctx, params, variant, m, field)

"""Pure-Python kernels for sparse multivariate Laurent polynomials.

A monomial is a tuple of (variable, exponent) pairs, sorted by variable,
with no zero exponents; the empty tuple is the constant monomial.
A polynomial is a dict mapping monomials to nonzero coefficients.
Coefficients are any exact field elements supporting +, -, *, == and
truthiness (Fraction, cyclotomic elements, ...).

A compiled twin of this module lives in _poly_cy.pyx; the active backend
is chosen at import time in _kernel.py.
"""


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            e = e1 + e2
            if e:
                out.append((v1, e))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_pow(m, k):
    if k == 0 or not m:
        return ()
    return tuple((v, e * k) for v, e in m)


def poly_add(p, q):
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for m, c in q.items():
        acc = out.get(m)
        if acc is None:
            out[m] = c
        else:
            acc = acc + c
            if acc:
                out[m] = acc
            else:
                del out[m]
    return out


def poly_neg(p):
    return {m: -c for m, c in p.items()}


def poly_scale(p, c):
    if not c:
        return {}
    return {m: cc * c for m, cc in p.items()}


def poly_mono_scale(p, mono, c):
    """p * c*mono, the hot path when materializing mode coefficients."""
    if not c:
        return {}
    if not mono:
        return {m: cc * c for m, cc in p.items()}
    return {mono_mul(m, mono): cc * c for m, cc in p.items()}


def poly_mul(p, q):
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            c = c1 * c2
            acc = out.get(m)
            if acc is None:
                if c:
                    out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
    return out


def poly_content(p):
    """Monomial of per-variable minimum exponents over all terms.

    Dividing num and den by their joint content strips common monomial
    factors without changing the represented rational function.
    """
    lo = None
    for m in p:
        cur = dict(m)
        if lo is None:
            lo = cur
            continue
        for v in set(lo) | set(cur):
            a = lo.get(v, 0)
            b = cur.get(v, 0)
            mn = a if a < b else b
            if mn:
                lo[v] = mn
            elif v in lo:
                del lo[v]
    if not lo:
        return ()
    return tuple(sorted(lo.items()))

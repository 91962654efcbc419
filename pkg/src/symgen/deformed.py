"""Deformed inner products and the families they orthogonalize.

The t-inner product scales the power-sum norms by prod 1/(1-t^{lam_i}); the
(q,t) version multiplies by prod (1-q^{lam_i}).  Hall-Littlewood P/Q, big
Schur, Macdonald P/J and the q-Whittaker functions are all built here, along
with the exact closed forms of their pairings against p_n.

Construction of P (both t and q,t): Gram-Schmidt on the monomial basis along
any linear extension of dominance order, subtracting corrections only for
strictly dominance-smaller indices.  The result is the unique m-unitriangular
orthogonal family, independent of the extension chosen.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactalg import (
    P_ONE,
    P_ZERO,
    Poly,
    RF_ONE,
    RF_ZERO,
    RING_Q,
    RING_QQT,
    RING_QT,
    RatFunc,
    cyclo_ring,
    specialize_root_of_unity,
)
from .partitions import EMPTY, Partition, partitions_of, stats
from .symfunc import (
    SymFunc,
    dominance_lt,
    multiply,
    p_expansion,
    sym,
)
from .tabloids import SizeMismatch


def phi_factorial(r: int) -> Poly:
    """phi_r(t) = (1-t)(1-t^2)...(1-t^r); phi_0 = 1."""
    out = P_ONE
    for j in range(1, r + 1):
        out = out * (P_ONE - Poly.t(j))
    return out


@lru_cache(maxsize=None)
def _p_norm_weight(nu: Partition, kind: str) -> RatFunc:
    """<p_nu, p_nu>_* / z_nu: prod 1/(1-t^i) or prod (1-q^i)/(1-t^i).

    The internal kind "q0" is the (q,t) form at t = 0 (weights prod (1-q^i)),
    the form the q-Whittaker family is orthogonal under.
    """
    num, den = P_ONE, P_ONE
    for part in nu:
        if kind != "q0":
            den = den * (P_ONE - Poly.t(part))
        if kind in ("qt", "q0"):
            num = num * (P_ONE - Poly.q(part))
    return RatFunc.make(num, den)


def deformed_inner(x: SymFunc, y: SymFunc, kind: str = "t") -> RatFunc:
    """Bilinear form with <p_lam, p_mu>_* = delta * z_lam * weight(lam)."""
    if kind not in ("t", "qt"):
        raise ValueError("kind must be 't' or 'qt'")
    return _pexp_inner(p_expansion(x), p_expansion(y), kind)


# ---------------------------------------------------------------------------
# Gram-Schmidt families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gs_family(n: int, kind: str) -> tuple:
    """Orthogonal m-unitriangular family at degree n for the chosen form.

    Returns ((lam, m_coeffs, p_coeffs, norm), ...) in increasing processing
    order; coefficient maps are dicts Partition -> RatFunc.
    """
    ring = RING_QQT if kind == "qt" else RING_QT
    done: list = []
    for lam in reversed(partitions_of(n)):
        m_row = dict(p_expansion(sym("m", lam, ring)))
        m_coeffs = {lam: RF_ONE}
        p_coeffs = dict(m_row)
        for mu, mu_m, mu_p, mu_norm in done:
            if not dominance_lt(mu, lam):
                continue
            cross = _pexp_inner(m_row, mu_p, kind)
            if cross.is_zero():
                continue
            coef = cross / mu_norm
            for key, val in mu_m.items():
                m_coeffs[key] = m_coeffs.get(key, RF_ZERO) - coef * val
            for key, val in mu_p.items():
                p_coeffs[key] = p_coeffs.get(key, RF_ZERO) - coef * val
        m_coeffs = {k: v for k, v in m_coeffs.items() if not v.is_zero()}
        p_coeffs = {k: v for k, v in p_coeffs.items() if not v.is_zero()}
        norm = _pexp_inner(p_coeffs, p_coeffs, kind)
        done.append((lam, m_coeffs, p_coeffs, norm))
    return tuple(done)


def _pexp_inner(xp: dict, yp: dict, kind: str) -> RatFunc:
    """Dot product of two p-expansions under the deformed form.

    Accumulated lazily over a running common denominator so that only one
    reduction happens at the end (and none at all for a zero result).
    """
    num_acc, den_acc = P_ZERO, P_ONE
    for nu, cx in xp.items():
        cy = yp.get(nu)
        if cy is None:
            continue
        cx = cx if isinstance(cx, RatFunc) else RatFunc.from_fraction(cx)
        cy = cy if isinstance(cy, RatFunc) else RatFunc.from_fraction(cy)
        if cx.is_zero() or cy.is_zero():
            continue
        weight = _p_norm_weight(nu, kind)
        scalar = cx.scale * cy.scale * weight.scale * stats(nu).z
        term_num = cx.num * cy.num * weight.num * scalar
        term_den = cx.den * cy.den * weight.den
        num_acc = num_acc * term_den + term_num * den_acc
        den_acc = den_acc * term_den
    if num_acc.is_zero():
        return RF_ZERO
    return RatFunc.make(num_acc, den_acc)


def _family_entry(lam: Partition, kind: str):
    for entry in _gs_family(lam.size, kind):
        if entry[0] == lam:
            return entry
    raise KeyError(lam)


def hl_P(lam) -> SymFunc:
    """Hall-Littlewood P: m-unitriangular, orthogonal for the t-form."""
    lam = Partition(lam)
    return SymFunc("m", _family_entry(lam, "t")[1], RING_QT)


def hl_Q(lam) -> SymFunc:
    """Q = prod_i phi_{m_i(lam)}(t) * P."""
    lam = Partition(lam)
    factor = P_ONE
    for m in lam.multiplicities().values():
        factor = factor * phi_factorial(m)
    return hl_P(lam).scaled(RatFunc.make(factor))


def qn(n: int) -> SymFunc:
    """The one-row Q, the generators of the big Schur determinant."""
    if n == 0:
        return SymFunc("m", {EMPTY: RF_ONE}, RING_QT)
    return hl_Q((n,))


def mac_P(lam) -> SymFunc:
    """Macdonald P: m-unitriangular, orthogonal for the (q,t)-form."""
    lam = Partition(lam)
    return SymFunc("m", _family_entry(lam, "qt")[1], RING_QQT)


def arm_leg_product(lam) -> Poly:
    """c_lam(q,t) = prod over cells (1 - q^arm t^(leg+1))."""
    lam = Partition(lam)
    conj = lam.conjugate()
    out = P_ONE
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = conj[j - 1] - i
            out = out * (P_ONE - Poly({(arm, leg + 1): Fraction(1)}))
    return out


def mac_J(lam) -> SymFunc:
    """Integral form J = c_lam(q,t) * P."""
    lam = Partition(lam)
    return mac_P(lam).scaled(RatFunc.make(arm_leg_product(lam)))


def whittaker(lam) -> SymFunc:
    """q-Whittaker W: the Macdonald P with t set to 0.

    Constructed directly as the m-unitriangular family orthogonal under the
    t=0 form (polynomial weights prod (1-q^i)); coefficientwise agreement
    with the substituted Macdonald P is part of the acceptance checks.
    """
    lam = Partition(lam)
    return SymFunc("m", _family_entry(lam, "q0")[1], RING_QT)


# ---------------------------------------------------------------------------
# closed-form pairings against p_n
# ---------------------------------------------------------------------------

def _require_size(lam: Partition, n: int):
    if lam.size != n:
        raise SizeMismatch(f"|{lam}| = {lam.size} != n = {n}")


def hl_Q_pn_closed(lam, n: int) -> RatFunc:
    """<Q_lam, p_n>_t = t^{n(lam)} phi_{l-1}(t^{-1}), cleared of t^{-1} powers."""
    lam = Partition(lam)
    _require_size(lam, n)
    st = stats(lam)
    length = st.length
    # t^a * phi_r(1/t) = (-1)^r * t^(a - r(r+1)/2) * phi_r(t), a >= r(r+1)/2 here
    r = max(length - 1, 0)
    shift = st.n_lambda - r * (r + 1) // 2
    num = Poly({(0, shift): Fraction((-1) ** r)}) * phi_factorial(r)
    return RatFunc.make(num)


def hl_P_pn_closed(lam, n: int) -> RatFunc:
    """<P_lam, p_n> = (1-t^n) t^{n(lam)} phi_{l-1}(t^{-1}) / prod phi_{m_i}(t)."""
    lam = Partition(lam)
    _require_size(lam, n)
    den = P_ONE
    for m in lam.multiplicities().values():
        den = den * phi_factorial(m)
    num_rf = hl_Q_pn_closed(lam, n) * RatFunc.make(P_ONE - Poly.t(n))
    return num_rf / RatFunc.make(den)


def big_schur(lam) -> SymFunc:
    """S_lam(x;t) = det(q_{lam_i - i + j}) over the one-row Q generators."""
    lam = Partition(lam)
    size = len(lam)
    if size == 0:
        return SymFunc("m", {EMPTY: RF_ONE}, RING_QT)

    rows = []
    for i in range(1, size + 1):
        rows.append([lam[i - 1] - i + j for j in range(1, size + 1)])

    zero = SymFunc("p", {}, RING_QT)

    def det(rows_left: tuple, cols: tuple) -> SymFunc:
        if not rows_left:
            return SymFunc("p", {EMPTY: RF_ONE}, RING_QT)
        i = rows_left[0]
        total = zero
        for pos, j in enumerate(cols):
            k = rows[i][j]
            if k < 0:
                continue
            sub = det(rows_left[1:], cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = multiply(qn(k), sub) if k > 0 else sub
            total = total + (term if pos % 2 == 0 else term.scaled(-RF_ONE))
        return total

    return det(tuple(range(size)), tuple(range(size)))


def big_schur_pn_closed(lam, n: int) -> RatFunc:
    """(-1)^(n - lam_1) (1 - t^n) for hooks, 0 otherwise."""
    lam = Partition(lam)
    _require_size(lam, n)
    from .partitions import is_hook

    if not is_hook(lam):
        return RF_ZERO
    sign = (-1) ** (n - lam[0])
    return RatFunc.make(Poly.const(sign) * (P_ONE - Poly.t(n)))


def excess_cell_product(lam) -> Poly:
    """X_n^lam(q,t) = prod over cells except (1,1) of (t^(i-1) - q^(j-1))."""
    lam = Partition(lam)
    out = P_ONE
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            if (i, j) == (1, 1):
                continue
            out = out * (Poly.t(i - 1) - Poly.q(j - 1))
    return out


def mac_P_pn_closed(lam, n: int) -> RatFunc:
    """<P_lam(q,t), p_n> = (1-t^n) X_n^lam / c_lam."""
    lam = Partition(lam)
    _require_size(lam, n)
    num = (P_ONE - Poly.t(n)) * excess_cell_product(lam)
    return RatFunc.make(num, arm_leg_product(lam))


def mac_J_pn_closed(lam, n: int) -> RatFunc:
    """<J_lam(q,t), p_n> = (1-t^n) X_n^lam."""
    lam = Partition(lam)
    _require_size(lam, n)
    return RatFunc.make((P_ONE - Poly.t(n)) * excess_cell_product(lam))


def whittaker_pn_closed(lam, n: int) -> RatFunc:
    """<W_lam(q), p_n> = (-1)^(n-lam_1) q^(n(lam') - C(lam_1,2)) prod_{i<lam_1}(1-q^i)."""
    lam = Partition(lam)
    _require_size(lam, n)
    st = stats(lam)
    head = lam[0] if lam else 0
    shift = st.n_lambda_conj - head * (head - 1) // 2
    out = Poly({(shift, 0): Fraction((-1) ** (n - head))})
    for i in range(1, head):
        out = out * (P_ONE - Poly.q(i))
    return RatFunc.make(out)


# ---------------------------------------------------------------------------
# skew Hall-Littlewood
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gram_inverse_t(n: int) -> tuple:
    """Inverse of the Gram matrix <P_rho, P_nu>_t at degree n."""
    family = _gs_family(n, "t")
    order = [entry[0] for entry in family]
    size = len(order)
    gram = [
        [_pexp_inner(family[i][2], family[j][2], "t") for j in range(size)]
        for i in range(size)
    ]
    # Gauss-Jordan over the field of rational functions
    aug = [
        row + [RF_ONE if i == j else RF_ZERO for j in range(size)]
        for i, row in enumerate(gram)
    ]
    for col in range(size):
        pivot = next(r for r in range(col, size) if not aug[r][col].is_zero())
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = RF_ONE / aug[col][col]
        aug[col] = [v * inv_p for v in aug[col]]
        for r in range(size):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(order), tuple(tuple(row[size:]) for row in aug)


def skew_hl_P(lam, mu) -> SymFunc:
    """P_{lam/mu}, defined by <P_{lam/mu}, P_nu>_t = <P_lam, P_mu P_nu>_t.

    Reconstructed against the t-dual family of {P_nu} (inverse Gram matrix);
    |lam| < |mu| gives the zero element.  At t=0 this is the skew Schur
    function.
    """
    lam, mu = Partition(lam), Partition(mu)
    d = lam.size - mu.size
    if d < 0:
        return SymFunc("m", {}, RING_QT)
    p_lam = hl_P(lam)
    p_mu_p = p_expansion(hl_P(mu))
    order, gram_inv = _gram_inverse_t(d)
    family = {entry[0]: entry for entry in _gs_family(d, "t")}
    values = []
    for nu in order:
        prod_p = _pexp_mul(p_mu_p, family[nu][2])
        values.append(_pexp_inner(p_expansion(p_lam), prod_p, "t"))
    coeffs: dict = {}
    for i, rho in enumerate(order):
        c = RF_ZERO
        for j in range(len(order)):
            if not values[j].is_zero() and not gram_inv[i][j].is_zero():
                c = c + gram_inv[i][j] * values[j]
        if c.is_zero():
            continue
        for key, val in family[rho][1].items():
            cur = coeffs.get(key, RF_ZERO) + c * val
            if cur.is_zero():
                coeffs.pop(key, None)
            else:
                coeffs[key] = cur
    return SymFunc("m", coeffs, RING_QT)


def _pexp_mul(a: dict, b: dict) -> dict:
    from .partitions import union

    out: dict = {}
    for la, ca in a.items():
        ca = ca if isinstance(ca, RatFunc) else RatFunc.from_fraction(ca)
        for lb, cb in b.items():
            cb = cb if isinstance(cb, RatFunc) else RatFunc.from_fraction(cb)
            key = union(la, lb)
            s = out.get(key, RF_ZERO) + ca * cb
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


# ---------------------------------------------------------------------------
# coefficient specialization of whole elements
# ---------------------------------------------------------------------------

def specialize_coeffs(x: SymFunc, *, q=None, t=None) -> SymFunc:
    """Substitute rational values into RatFunc coefficients.

    Fully specialized elements come back over Q; partially specialized ones
    stay over the univariate function field.
    """
    out = {}
    full = (q is not None or not _uses_q(x)) and t is not None
    for lam, c in x.coeffs.items():
        val = c.subs(q=q, t=t)
        out[lam] = val.as_fraction() if full else val
    return SymFunc(x.basis, out, RING_Q if full else RING_QT)


def _uses_q(x: SymFunc) -> bool:
    return any(
        not c.num.is_univariate_t() or not c.den.is_univariate_t()
        for c in x.coeffs.values()
    )


def specialize_coeffs_root(x: SymFunc, k: int) -> SymFunc:
    """Substitute a primitive k-th root of unity for t in every coefficient."""
    ring = cyclo_ring(k)
    out = {}
    for lam, c in x.coeffs.items():
        val = specialize_root_of_unity(c, k)
        if not val.is_zero():
            out[lam] = val
    return SymFunc(x.basis, out, ring)


def subs_q_to_t(x: SymFunc) -> SymFunc:
    """Identify q with t in every coefficient (for the q=t degeneration)."""
    return SymFunc(
        x.basis, {lam: c.subs_q_to_t() for lam, c in x.coeffs.items()}, RING_QT
    )

"""Exact coefficient arithmetic: sparse rational polynomials in q and t,
reduced rational functions, and cyclotomic residue rings for evaluating at
roots of unity.

Canonical forms
---------------
* ``Poly`` terms map an exponent pair ``(deg_q, deg_t)`` to a nonzero
  ``Fraction``; monomials are ordered graded-lex with t > q, i.e. by
  ``(deg_q + deg_t, deg_t)``.
* ``RatFunc`` is ``scale * num / den`` with ``num``/``den`` coprime primitive
  integer polynomials whose graded-lex leading coefficients are positive and
  with the whole rational content in ``scale``.  Equality of rational
  functions is structural equality of this form.
* ``CycloElem`` is a residue mod the k-th cyclotomic polynomial, stored as a
  vector of phi(k) rationals.

Rendering grammar (golden files depend on it)
---------------------------------------------
``Poly``: terms in graded-lex t>q descending order, joined by `` + ``/`` - ``;
a term is ``c``, ``c*q^a*t^b``, ``q``, ``t^2``, ... with unit coefficients
omitted except on constants (e.g. ``-q*t + t - q + 1``).
``RatFunc``: ``(N)`` or ``(N)/(D)`` where N is scale*num expanded (rational
coefficients allowed) and D is den (integer, positive leading coefficient).
``CycloElem``: a plain rational for k <= 2, otherwise ``(P) mod Phi_k`` with
P the residue polynomial in t.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd


class ZeroDenominator(ZeroDivisionError):
    """Denominator polynomial is identically zero."""


class ZeroPolynomial(ValueError):
    """Operation undefined for the zero polynomial."""


class PoleAtRootOfUnity(ZeroDivisionError):
    """The rational function has a genuine pole at the requested root of unity."""


def _term_order(term):
    dq, dt = term
    return (dq + dt, dt)


def _render_monomial(dq: int, dt: int) -> str:
    parts = []
    if dq:
        parts.append("q" if dq == 1 else f"q^{dq}")
    if dt:
        parts.append("t" if dt == 1 else f"t^{dt}")
    return "*".join(parts)


class Poly:
    """Sparse polynomial in q and t with Fraction coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (dq, dt), c in terms.items():
                # integral coefficients are stored as plain ints: Python's
                # int/Fraction interoperate exactly and int arithmetic is far
                # faster in the gcd kernels (check int first, it is cheap)
                if type(c) is not int:
                    if isinstance(c, Fraction):
                        c = c.numerator if c.denominator == 1 else c
                    elif isinstance(c, int):
                        c = int(c)
                    else:
                        c = Fraction(c)
                if c != 0:
                    if dq < 0 or dt < 0:
                        raise ValueError("negative exponent in Poly")
                    clean[(int(dq), int(dt))] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def const(c) -> "Poly":
        return Poly({(0, 0): Fraction(c)})

    @staticmethod
    def t(power: int = 1) -> "Poly":
        return Poly({(0, power): Fraction(1)})

    @staticmethod
    def q(power: int = 1) -> "Poly":
        return Poly({(power, 0): Fraction(1)})

    # -- basic queries -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or self.terms.keys() == {(0, 0)}

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms[(0, 0)]

    def is_univariate_t(self) -> bool:
        return all(dq == 0 for dq, _ in self.terms)

    def is_univariate_q(self) -> bool:
        return all(dt == 0 for _, dt in self.terms)

    def deg_t(self) -> int:
        return max((dt for _, dt in self.terms), default=0)

    def deg_q(self) -> int:
        return max((dq for dq, _ in self.terms), default=0)

    def leading(self):
        """((deg_q, deg_t), coeff) of the graded-lex t>q leading term."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        term = max(self.terms, key=_term_order)
        return term, self.terms[term]

    def min_degs(self) -> tuple[int, int]:
        return (
            min(dq for dq, _ in self.terms),
            min(dt for _, dt in self.terms),
        )

    # -- arithmetic --------------------------------------------------------
    def _coerced(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for term, c in other.terms.items():
            s = out.get(term, 0) + c
            if s:
                out[term] = s
            else:
                out.pop(term, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({term: -c for term, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (aq, at), ca in self.terms.items():
            for (bq, bt), cb in other.terms.items():
                term = (aq + bq, at + bt)
                s = out.get(term, 0) + ca * cb
                if s:
                    out[term] = s
                else:
                    del out[term]
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of Poly")
        result = P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash(tuple(sorted(self.terms.items())))
            )
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- substitution ------------------------------------------------------
    def subs(self, q=None, t=None) -> "Poly":
        """Substitute rational values for q and/or t (None leaves a variable)."""
        out: dict = {}
        for (dq, dt), c in self.terms.items():
            if q is not None:
                c *= Fraction(q) ** dq
                dq = 0
            if t is not None:
                c *= Fraction(t) ** dt
                dt = 0
            if not c:
                continue
            term = (dq, dt)
            s = out.get(term, 0) + c
            if s:
                out[term] = s
            else:
                out.pop(term, None)
        return Poly(out)

    def swap_vars(self) -> "Poly":
        """Exchange the roles of q and t."""
        return Poly({(dt, dq): c for (dq, dt), c in self.terms.items()})

    def subs_q_to_t(self) -> "Poly":
        """Identify q with t (for q=t degenerations)."""
        out: dict = {}
        for (dq, dt), c in self.terms.items():
            term = (0, dq + dt)
            s = out.get(term, 0) + c
            if s:
                out[term] = s
            else:
                out.pop(term, None)
        return Poly(out)

    # -- normal forms ------------------------------------------------------
    def split_content(self):
        """Write self = scale * prim with prim integer, content 1, leading > 0."""
        if not self.terms:
            return Fraction(0), P_ZERO
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = int_gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
        scale = Fraction(num_gcd, den_lcm)
        _, lead = self.leading()
        if lead < 0:
            scale = -scale
        prim = Poly({term: c / scale for term, c in self.terms.items()})
        return scale, prim

    def primitive(self) -> "Poly":
        return self.split_content()[1]

    # -- rendering ---------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for term in sorted(self.terms, key=_term_order, reverse=True):
            c = self.terms[term]
            mono = _render_monomial(*term)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self.render()})"


P_ZERO = Poly()
P_ONE = Poly.const(1)
T = Poly.t()
Q = Poly.q()


# ---------------------------------------------------------------------------
# division and gcd
# ---------------------------------------------------------------------------

def _coeff_div(a, b):
    """Exact field division of coefficients (never int floor/float)."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def try_exact_div(a: Poly, b: Poly):
    """Return a/b when b divides a exactly, else None."""
    if b.is_zero():
        raise ZeroDenominator("division by zero polynomial")
    if a.is_zero():
        return P_ZERO
    (bq, bt), blead = b.leading()
    quo: dict = {}
    rem = a
    while not rem.is_zero():
        (rq, rt), rlead = rem.leading()
        dq, dt = rq - bq, rt - bt
        if dq < 0 or dt < 0:
            return None
        c = _coeff_div(rlead, blead)
        quo[(dq, dt)] = quo.get((dq, dt), 0) + c
        rem = rem - Poly({(dq, dt): c}) * b
    return Poly(quo)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    out = try_exact_div(a, b)
    if out is None:
        raise ValueError("polynomial division is not exact")
    return out


def _dense_uni(p: Poly, var: str) -> list:
    deg = p.deg_t() if var == "t" else p.deg_q()
    out = [0] * (deg + 1)
    for (dq, dt), c in p.terms.items():
        out[dt if var == "t" else dq] += c
    return out


def _from_dense_uni(coeffs, var: str) -> Poly:
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[(0, i) if var == "t" else (i, 0)] = Fraction(c)
    return Poly(terms)


def _strip_trailing(v: list) -> list:
    while v and v[-1] == 0:
        v.pop()
    return v


def _int_primitive(v: list) -> list:
    """Strip integer content (sign-normalized to positive leading)."""
    v = _strip_trailing(v)
    if not v:
        return v
    g = 0
    for c in v:
        g = int_gcd(g, c)
    if v[-1] < 0:
        g = -g
    return [c // g for c in v]


def _int_prem(fa: list, fb: list) -> list:
    """Integer remainder sequence step for fa by fb (dense, little-endian).

    The result agrees with the pseudo-remainder up to integer content, which
    is all the primitive PRS needs; content is stripped every step to keep
    the integers small.
    """
    r = list(fa)
    lb = fb[-1]
    width = len(fb)
    while True:
        r = _strip_trailing(r)
        if len(r) < width:
            return r
        lead = r[-1]
        g = int_gcd(lb, lead)
        scale_r, scale_b = lb // g, lead // g
        if scale_r != 1:
            r = [c * scale_r for c in r]
        shift = len(r) - width
        for i, c in enumerate(fb):
            r[i + shift] -= scale_b * c
        del r[-1]  # the top coefficient cancels exactly
        cont = 0
        for c in r:
            cont = int_gcd(cont, c)
            if cont == 1:
                break
        if cont > 1:
            r = [c // cont for c in r]


def _dense_int_uni(p: Poly, var: str) -> list:
    """Dense integer coefficients (denominators cleared)."""
    dense = _dense_uni(p, var)
    lcm = 1
    for c in dense:
        d = c.denominator
        lcm = lcm * d // int_gcd(lcm, d)
    return [int(c * lcm) for c in dense]


def _uni_gcd(a: Poly, b: Poly, var: str) -> Poly:
    """Primitive positive-leading gcd of two univariate polynomials,
    by the integer primitive polynomial-remainder sequence."""
    fa = _int_primitive(_dense_int_uni(a, var))
    fb = _int_primitive(_dense_int_uni(b, var))
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _int_primitive(_int_prem(fa, fb))
    return _from_dense_uni(fa, var)


def _as_t_coeffs(p: Poly) -> dict[int, Poly]:
    """View p as a polynomial in t with q-polynomial coefficients."""
    out: dict[int, dict] = {}
    for (dq, dt), c in p.terms.items():
        out.setdefault(dt, {})[(dq, 0)] = c
    return {dt: Poly(terms) for dt, terms in out.items()}


def _from_t_coeffs(coeffs: dict[int, Poly]) -> Poly:
    terms = {}
    for dt, cp in coeffs.items():
        for (dq, _), c in cp.terms.items():
            terms[(dq, dt)] = c
    return Poly(terms)


def _t_content(coeffs: dict[int, Poly]) -> Poly:
    cont = P_ZERO
    for cp in coeffs.values():
        cont = _uni_gcd(cont, cp, "q") if not cont.is_zero() else cp.primitive()
        if cont.is_const() and not cont.is_zero():
            return P_ONE
    return cont if not cont.is_zero() else P_ONE

def _t_primitive(coeffs: dict[int, Poly]) -> dict[int, Poly]:
    cont = _t_content(coeffs)
    if cont == P_ONE:
        return coeffs
    return {dt: poly_exact_div(cp, cont) for dt, cp in coeffs.items()}


def _t_prem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of a by b in the main variable t."""
    da, db = max(a), max(b)
    lead_b = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lead_r = r[dr]
        shift = dr - db
        new: dict[int, Poly] = {}
        for dt, cp in r.items():
            new[dt] = cp * lead_b
        for dt, cp in b.items():
            cur = new.get(dt + shift, P_ZERO) - cp * lead_r
            if cur.is_zero():
                new.pop(dt + shift, None)
            else:
                new[dt + shift] = cur
        r = {dt: cp for dt, cp in new.items() if not cp.is_zero()}
        if max(r, default=-1) == dr:
            raise AssertionError("pseudo-division failed to lower degree")
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """GCD of the primitive parts, returned primitive with positive leading."""
    if a.is_zero() and b.is_zero():
        return P_ZERO
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    return _poly_gcd_prim(a.primitive(), b.primitive())


def _lead_coeff_poly(p: Poly, main: str) -> Poly:
    """Leading coefficient of p as a polynomial in the main variable."""
    deg = p.deg_t() if main == "t" else p.deg_q()
    terms = {}
    for (dq, dt), c in p.terms.items():
        if (dt if main == "t" else dq) == deg:
            terms[(dq, 0) if main == "t" else (0, dt)] = c
    return Poly(terms)


def _certified_coprime(a: Poly, b: Poly) -> bool:
    """True only with proof that gcd(a, b) = 1.

    If an evaluation point r keeps the leading t-coefficient of a nonzero,
    then deg_t gcd(a,b) <= deg_t gcd(a(r,t), b(r,t)) (the leading coefficient
    of any divisor divides that of a, so its image keeps full degree).  A
    constant univariate gcd in each variable therefore certifies coprimality.
    """
    for main, other in (("t", "q"), ("q", "t")):
        lead = _lead_coeff_poly(a, main)
        point = None
        for r in (1, -1, 2, 3, 5, -2, 7, -3):
            if not lead.subs(q=r, t=r).is_zero():
                point = r
                break
        if point is None:
            return False
        image_a = a.subs(**{other: Fraction(point)})
        image_b = b.subs(**{other: Fraction(point)})
        if image_a.is_zero() or image_b.is_zero():
            return False
        g = _uni_gcd(image_a, image_b, main)
        if not g.is_const():
            return False
    return True


@lru_cache(maxsize=None)
def _poly_gcd_prim(a: Poly, b: Poly) -> Poly:
    if a == b:
        return a
    # common monomial factor
    amq, amt = a.min_degs()
    bmq, bmt = b.min_degs()
    mq, mt = min(amq, bmq), min(amt, bmt)
    if amq or amt:
        a = Poly({(dq - amq, dt - amt): c for (dq, dt), c in a.terms.items()})
    if bmq or bmt:
        b = Poly({(dq - bmq, dt - bmt): c for (dq, dt), c in b.terms.items()})
    mono = Poly({(mq, mt): Fraction(1)})
    if a == P_ONE or b == P_ONE or a.is_const() or b.is_const():
        core = P_ONE
    elif a.is_univariate_t() and b.is_univariate_t():
        core = _uni_gcd(a, b, "t")
    elif a.is_univariate_q() and b.is_univariate_q():
        core = _uni_gcd(a, b, "q")
    elif a.is_univariate_t() and b.is_univariate_q():
        core = P_ONE
    elif a.is_univariate_q() and b.is_univariate_t():
        core = P_ONE
    else:
        ta, tb = _as_t_coeffs(a), _as_t_coeffs(b)
        if max(ta) == 0 or max(tb) == 0:
            # one argument is free of t: gcd sits in the q-content
            ca = _t_content(ta) if max(ta) else list(ta.values())[0].primitive()
            cb = _t_content(tb) if max(tb) else list(tb.values())[0].primitive()
            core = _uni_gcd(ca, cb, "q")
        elif _certified_coprime(a, b):
            core = P_ONE
        else:
            cont = _uni_gcd(_t_content(ta), _t_content(tb), "q")
            fa, fb = _t_primitive(ta), _t_primitive(tb)
            if max(fa) < max(fb):
                fa, fb = fb, fa
            while fb:
                r = _t_prem(fa, fb)
                fa, fb = fb, (_t_primitive(r) if r else {})
            core = (_from_t_coeffs(_t_primitive(fa)) * cont).primitive()
    return (mono * core).primitive()


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> Poly:
    """The k-th cyclotomic polynomial Phi_k(t)."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return T - 1
    p = Poly.t(k) - 1
    for d in range(1, k):
        if k % d == 0:
            p = poly_exact_div(p, cyclotomic_poly(d))
    return p


@lru_cache(maxsize=None)
def euler_phi(k: int) -> int:
    return cyclotomic_poly(k).deg_t()


def cyclotomic_multiplicity(p: Poly, k: int) -> int:
    """Exponent of Phi_k(t) in the factorization of a univariate-in-t poly."""
    if p.is_zero():
        raise ZeroPolynomial("cyclotomic multiplicity of the zero polynomial")
    if not p.is_univariate_t():
        raise ValueError("polynomial must be univariate in t")
    phi_k = cyclotomic_poly(k)
    count = 0
    while True:
        quo = try_exact_div(p, phi_k)
        if quo is None:
            return count
        p = quo
        count += 1


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced rational function scale*num/den in canonical form."""

    __slots__ = ("scale", "num", "den")

    def __init__(self, scale: Fraction, num: Poly, den: Poly, _raw: bool = False):
        if not _raw:
            raise TypeError("use RatFunc.make / ratfunc_reduce")
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def make(num, den=P_ONE, scale=Fraction(1)) -> "RatFunc":
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        scale = Fraction(scale)
        if num.is_zero() or scale == 0:
            return RF_ZERO
        cn, pn = num.split_content()
        cd, pd = den.split_content()
        scale = scale * cn / cd
        g = poly_gcd(pn, pd)
        if g != P_ONE:
            pn = poly_exact_div(pn, g)
            pd = poly_exact_div(pd, g)
            # quotients of primitives by their primitive gcd stay primitive;
            # re-fix signs in case the leading term moved
            sn, pn = pn.split_content()
            sd, pd = pd.split_content()
            scale = scale * sn / sd
        return RatFunc(scale, pn, pd, _raw=True)

    @staticmethod
    def from_fraction(fr) -> "RatFunc":
        fr = Fraction(fr)
        if fr == 0:
            return RF_ZERO
        return RatFunc(fr, P_ONE, P_ONE, _raw=True)

    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc.make(p)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.scale == 0

    def __bool__(self):
        return self.scale != 0

    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def is_constant(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        if self.is_zero():
            return Fraction(0)
        return self.scale * self.num.as_fraction() / self.den.as_fraction()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return Poly({term: self.scale * c for term, c in self.num.terms.items()})

    def is_univariate_t(self) -> bool:
        return self.num.is_univariate_t() and self.den.is_univariate_t()

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_fraction(x)
        if isinstance(x, Poly):
            return RatFunc.make(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            num = self.scale * self.num + other.scale * other.num
            return RatFunc.make(num, self.den)
        num = self.scale * self.num * other.den + other.scale * other.num * self.den
        return RatFunc.make(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return RatFunc(-self.scale, self.num, self.den, _raw=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        # cross-cancel before multiplying; the four parts are then pairwise
        # coprime, so the product needs no further gcd
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1 == P_ONE else poly_exact_div(self.num, g1)
        d2 = other.den if g1 == P_ONE else poly_exact_div(other.den, g1)
        n2 = other.num if g2 == P_ONE else poly_exact_div(other.num, g2)
        d1 = self.den if g2 == P_ONE else poly_exact_div(self.den, g2)
        return RatFunc._make_coprime(n1 * n2, d1 * d2, self.scale * other.scale)

    @staticmethod
    def _make_coprime(num: Poly, den: Poly, scale: Fraction) -> "RatFunc":
        """Canonicalize when num and den are already known to be coprime."""
        if num.is_zero() or scale == 0:
            return RF_ZERO
        cn, pn = num.split_content()
        cd, pd = den.split_content()
        return RatFunc(scale * cn / cd, pn, pd, _raw=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("division by zero rational function")
        inv = RatFunc(1 / other.scale, other.den, other.num, _raw=True)
        return self * inv

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDenominator("negative power of zero")
            return (RF_ONE / self) ** (-n)
        out = RF_ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.scale == other.scale
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.scale, self.num, self.den))

    # -- substitution ------------------------------------------------------
    def subs(self, q=None, t=None) -> "RatFunc":
        """Substitute rational values; raises ZeroDenominator on a pole."""
        if self.is_zero():
            return self
        num = self.num.subs(q=q, t=t)
        den = self.den.subs(q=q, t=t)
        return RatFunc.make(num, den, self.scale)

    def swap_vars(self) -> "RatFunc":
        if self.is_zero():
            return self
        return RatFunc.make(self.num.swap_vars(), self.den.swap_vars(), self.scale)

    def subs_q_to_t(self) -> "RatFunc":
        if self.is_zero():
            return self
        return RatFunc.make(
            self.num.subs_q_to_t(), self.den.subs_q_to_t(), self.scale
        )

    def eval_rational(self, q=None, t=None) -> Fraction:
        return self.subs(q=q, t=t).as_fraction()

    # -- rendering ---------------------------------------------------------
    def render(self) -> str:
        if self.is_zero():
            return "(0)"
        shown = Poly({term: self.scale * c for term, c in self.num.terms.items()})
        if self.den == P_ONE:
            return f"({shown.render()})"
        return f"({shown.render()})/({self.den.render()})"

    def __repr__(self):
        return f"RatFunc({self.render()})"


RF_ZERO = RatFunc(Fraction(0), P_ZERO, P_ONE, _raw=True)
RF_ONE = RatFunc(Fraction(1), P_ONE, P_ONE, _raw=True)


def ratfunc_reduce(num: Poly, den: Poly) -> RatFunc:
    """Canonical reduced form of num/den (ZeroDenominator if den = 0)."""
    return RatFunc.make(num, den)


# ---------------------------------------------------------------------------
# cyclotomic residues
# ---------------------------------------------------------------------------

def _phi_dense(k: int) -> list[Fraction]:
    return _dense_uni(cyclotomic_poly(k), "t")


def _poly_mod_phi(coeffs: list[Fraction], k: int) -> list[Fraction]:
    phi = _phi_dense(k)
    d = len(phi) - 1
    r = list(coeffs)
    while len(r) > d:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - d
            for i, c in enumerate(phi):
                r[i + shift] -= lead * c
        r.pop()
    return r + [Fraction(0)] * (d - len(r))


class CycloElem:
    """An element of Q[t]/Phi_k(t): the exact value of t at a primitive
    k-th root of unity."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs):
        if k < 1:
            raise ValueError("k must be positive")
        d = euler_phi(k)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != d:
            raise ValueError(f"residue vector must have length {d}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @staticmethod
    def zero(k: int) -> "CycloElem":
        return CycloElem(k, [Fraction(0)] * euler_phi(k))

    @staticmethod
    def one(k: int) -> "CycloElem":
        c = [Fraction(0)] * euler_phi(k)
        c[0] = Fraction(1)
        return CycloElem(k, c)

    @staticmethod
    def from_fraction(fr, k: int) -> "CycloElem":
        c = [Fraction(0)] * euler_phi(k)
        c[0] = Fraction(fr)
        return CycloElem(k, c)

    @staticmethod
    def from_poly(p: Poly, k: int) -> "CycloElem":
        if not p.is_univariate_t():
            raise ValueError("polynomial must be univariate in t")
        return CycloElem(k, _poly_mod_phi(_dense_uni(p, "t"), k))

    def root_power(self) -> "CycloElem":
        """Multiply by t (the root itself)."""
        return self * CycloElem.from_poly(T, self.k)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.k != self.k:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_fraction(other, self.k)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloElem(self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.k, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.k, _poly_mod_phi(prod, self.k))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        """Inverse modulo Phi_k via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")

        def strip(v):
            v = list(v)
            while v and v[-1] == 0:
                v.pop()
            return v

        def poly_sub_scaled(a, b, factor, shift):
            out = list(a) + [Fraction(0)] * max(0, len(b) + shift - len(a))
            for i, c in enumerate(b):
                out[i + shift] -= factor * c
            return strip(out)

        r0, r1 = strip(_phi_dense(self.k)), strip(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while r1:
            # full polynomial division r0 = q*r1 + r
            r, s = list(r0), list(s0)
            while len(r) >= len(r1) and strip(r):
                shift = len(strip(r)) - len(r1)
                factor = _coeff_div(strip(r)[-1], r1[-1])
                r = poly_sub_scaled(strip(r), r1, factor, shift)
                s = poly_sub_scaled(
                    s + [Fraction(0)] * max(0, len(s1) + shift - len(s)),
                    s1,
                    factor,
                    shift,
                )
            r0, r1, s0, s1 = r1, strip(r), s1, s
        # r0 is a nonzero constant gcd (Phi_k is irreducible over Q)
        g = r0[0]
        inv = [_coeff_div(c, g) for c in s0]
        return CycloElem(self.k, _poly_mod_phi(inv, self.k))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.k, self.coeffs))

    def as_fraction(self) -> Fraction:
        """Plain rational value; only for k <= 2 (t = 1 or t = -1)."""
        if len(self.coeffs) != 1:
            raise ValueError("not a rational cyclotomic element")
        return self.coeffs[0]

    def render(self) -> str:
        if len(self.coeffs) == 1:
            return str(self.coeffs[0])
        p = Poly({(0, i): c for i, c in enumerate(self.coeffs) if c})
        return f"({p.render()}) mod Phi_{self.k}"

    def __repr__(self):
        return f"CycloElem({self.render()})"


def specialize_root_of_unity(f: RatFunc, k: int) -> CycloElem:
    """Exact value of a univariate-in-t rational function at a primitive k-th
    root of unity; cancels common Phi_k powers, detects genuine poles."""
    if not isinstance(f, RatFunc):
        coerced = RatFunc._coerce(f)
        if coerced is None:
            raise TypeError(f"cannot specialize {type(f).__name__}")
        f = coerced
    if f.is_zero():
        return CycloElem.zero(k)
    if not f.is_univariate_t():
        raise ValueError("specialization requires a univariate-in-t function")
    phi_k = cyclotomic_poly(k)
    num, den = f.num, f.den
    m_num = cyclotomic_multiplicity(num, k)
    m_den = cyclotomic_multiplicity(den, k)
    if m_num > m_den:
        return CycloElem.zero(k)
    if m_num < m_den:
        raise PoleAtRootOfUnity(
            f"pole of order {m_den - m_num} at a primitive {k}-th root of unity"
        )
    for _ in range(m_num):
        num = poly_exact_div(num, phi_k)
        den = poly_exact_div(den, phi_k)
    num_res = CycloElem.from_poly(num, k)
    den_res = CycloElem.from_poly(den, k)
    return CycloElem.from_fraction(f.scale, k) * num_res / den_res


# ---------------------------------------------------------------------------
# coefficient-ring tags
# ---------------------------------------------------------------------------

class CoeffRing:
    """A coefficient field: exact arithmetic, exact equality, a renderer.

    Ring values are plain Fraction / RatFunc / CycloElem objects; this tag
    only supplies constructors, zero tests and rendering so the symmetric
    function layer can stay generic.
    """

    def __init__(self, name, zero, one, from_fraction, render):
        self.name = name
        self.zero = zero
        self.one = one
        self.from_fraction = from_fraction
        self._render = render

    def from_int(self, n: int):
        return self.from_fraction(Fraction(n))

    @staticmethod
    def is_zero(x) -> bool:
        return not x

    def render(self, x) -> str:
        return self._render(x)

    def __repr__(self):
        return f"CoeffRing({self.name})"


RING_Q = CoeffRing("Q", Fraction(0), Fraction(1), Fraction, str)
RING_QT = CoeffRing(
    "Qt", RF_ZERO, RF_ONE, RatFunc.from_fraction, lambda v: v.render()
)
RING_QQT = CoeffRing(
    "Qqt", RF_ZERO, RF_ONE, RatFunc.from_fraction, lambda v: v.render()
)


@lru_cache(maxsize=None)
def cyclo_ring(k: int) -> CoeffRing:
    return CoeffRing(
        f"C{k}",
        CycloElem.zero(k),
        CycloElem.one(k),
        lambda fr, k=k: CycloElem.from_fraction(fr, k),
        lambda v: v.render(),
    )

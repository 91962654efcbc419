"""Symmetric functions over a pluggable coefficient field.

The power-sum basis is the computational hub: products are index unions and
the Hall inner product is diagonal there.  Conversions route every basis
through p:

* ``m`` uses the domino-tabloid expansion of a monomial into power sums,
* ``h`` uses the Newton recurrence ``n*h_n = sum_{r} p_r h_{n-r}``,
* ``e`` is the single-column monomial ``e_n = m_{(1^n)}``,
* ``s`` expands the Jacobi-Trudi determinant into ``h`` products,
* ``f`` (forgotten) is the image of ``m`` under the involution omega,

and the reverse direction inverts the per-degree transition matrix, which is
computed once over Q and cached.

Text format: ``-1*m[3] + 3*m[2,1]`` (coefficient always explicit, terms in
ascending canonical order: by degree, then reversed enumeration order).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import RING_Q, CoeffRing
from .partitions import (
    EMPTY,
    Partition,
    eps_of,
    format_partition,
    partitions_of,
    stats,
    union,
)
from .tabloids import SizeMismatch, w

BASES = ("m", "h", "e", "p", "s", "f")


class SymFunc:
    """A finite linear combination of basis elements of one classical basis."""

    __slots__ = ("basis", "ring", "coeffs")

    def __init__(self, basis: str, coeffs: dict, ring: CoeffRing = RING_Q):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, c in coeffs.items():
            if not CoeffRing.is_zero(c):
                clean[Partition(lam)] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", clean)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((lam.size for lam in self.coeffs), default=0)

    def homogeneous_component(self, n: int) -> "SymFunc":
        return SymFunc(
            self.basis,
            {lam: c for lam, c in self.coeffs.items() if lam.size == n},
            self.ring,
        )

    def map_coefficients(self, fn, ring: CoeffRing | None = None) -> "SymFunc":
        return SymFunc(
            self.basis,
            {lam: fn(c) for lam, c in self.coeffs.items()},
            ring or self.ring,
        )

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis or other.ring is not self.ring:
            raise ValueError("mixed bases or rings in SymFunc addition")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, self.ring.zero) + c
            if CoeffRing.is_zero(s):
                out.pop(lam, None)
            else:
                out[lam] = s
        return SymFunc(self.basis, out, self.ring)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + other.scaled(self.ring.from_int(-1))

    def scaled(self, c) -> "SymFunc":
        if CoeffRing.is_zero(c):
            return SymFunc(self.basis, {}, self.ring)
        return SymFunc(
            self.basis, {lam: v * c for lam, v in self.coeffs.items()}, self.ring
        )

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.ring.name == other.ring.name
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"SymFunc({render_symfunc(self)})"


def sym(basis: str, lam, ring: CoeffRing = RING_Q, coeff=None) -> SymFunc:
    """A single basis element (optionally scaled)."""
    return SymFunc(basis, {Partition(lam): coeff if coeff is not None else ring.one}, ring)


def sym_one(ring: CoeffRing = RING_Q) -> SymFunc:
    return SymFunc("p", {EMPTY: ring.one}, ring)


# ---------------------------------------------------------------------------
# transitions into the power-sum basis (exact, over Q, cached)
# ---------------------------------------------------------------------------

def _p_convolve(a: dict, b: dict) -> dict:
    out: dict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = union(la, lb)
            s = out.get(key, 0) + ca * cb
            if s:
                out[key] = s
            else:
                del out[key]
    return out


@lru_cache(maxsize=None)
def _m_to_p(lam: Partition) -> tuple:
    """m_lam = sum over nu of eps_nu eps_lam w(nu, lam)/z_nu * p_nu."""
    el = eps_of(lam)
    out = []
    for nu in partitions_of(lam.size):
        weight = w(nu, lam)
        if weight:
            st = stats(nu)
            out.append((nu, Fraction(st.eps * el * weight, st.z)))
    return tuple(out)


@lru_cache(maxsize=None)
def _h_to_p(n: int) -> tuple:
    if n == 0:
        return ((EMPTY, Fraction(1)),)
    out: dict = {}
    for r in range(1, n + 1):
        for lam, c in _h_to_p(n - r):
            key = union(lam, (r,))
            out[key] = out.get(key, Fraction(0)) + Fraction(c, n)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _prod_row(rows: tuple) -> dict:
    out = {EMPTY: Fraction(1)}
    for row in rows:
        out = _p_convolve(out, dict(row))
    return out


@lru_cache(maxsize=None)
def _jacobi_trudi_h_terms(lam: Partition) -> tuple:
    """Expansion of det(h_{lam_i - i + j}) as h-index partitions with signs."""
    size = len(lam)
    if size == 0:
        return ((EMPTY, 1),)
    acc: dict[Partition, int] = {}

    def expand(i: int, used: int, sign: int, parts: tuple):
        if i == size:
            key = Partition(sorted(parts, reverse=True))
            acc[key] = acc.get(key, 0) + sign
            return
        for j in range(size):
            bit = 1 << j
            if used & bit:
                continue
            k = lam[i] - (i + 1) + (j + 1)
            if k < 0:
                continue
            inversions = bin(used >> (j + 1)).count("1")
            expand(
                i + 1,
                used | bit,
                sign * (-1 if inversions % 2 else 1),
                parts + ((k,) if k else ()),
            )

    expand(0, 0, 1, ())
    return tuple((key, c) for key, c in acc.items() if c)


@lru_cache(maxsize=None)
def _basis_to_p(basis: str, lam: Partition) -> tuple:
    """Power-sum expansion of one basis element, as ((nu, Fraction), ...)."""
    if basis == "p":
        return ((lam, Fraction(1)),)
    if basis == "m":
        return _m_to_p(lam)
    if basis == "f":
        return tuple((nu, stats(nu).eps * c) for nu, c in _m_to_p(lam))
    if basis == "h":
        return tuple(sorted(_prod_row(tuple(_h_to_p(part) for part in lam)).items()))
    if basis == "e":
        rows = tuple(_m_to_p(Partition([1] * part)) for part in lam)
        return tuple(sorted(_prod_row(rows).items()))
    if basis == "s":
        out: dict = {}
        for hkey, c in _jacobi_trudi_h_terms(lam):
            for nu, cc in _basis_to_p("h", hkey):
                s = out.get(nu, Fraction(0)) + c * cc
                if s:
                    out[nu] = s
                else:
                    del out[nu]
        return tuple(sorted(out.items()))
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _basis_matrix_inverse(basis: str, n: int) -> tuple:
    """Inverse of the (basis -> p) matrix at degree n, over Q.

    Entry [j][i] is the coefficient of basis_{mu_j} in p_{nu_i}, with both
    indices in canonical (reverse-lex) order.
    """
    order = partitions_of(n)
    idx = {lam: i for i, lam in enumerate(order)}
    size = len(order)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(order):
        for nu, c in _basis_to_p(basis, mu):
            mat[idx[nu]][j] = c
    inv = _invert_fraction_matrix(mat)
    return tuple(tuple(row) for row in inv)


def _invert_fraction_matrix(mat):
    size = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular transition matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [v * inv_p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


# ---------------------------------------------------------------------------
# the public operations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransitionMatrix:
    """Change-of-basis matrix at one degree, canonical partition order.

    ``entries[i][j]`` is the coefficient of ``to_basis``-element mu_i in the
    expansion of ``from_basis``-element lam_j; invertible for every pair of
    genuine bases at every degree.
    """

    from_basis: str
    to_basis: str
    degree: int
    entries: tuple


def transition_matrix(src: str, dst: str, degree: int) -> TransitionMatrix:
    order = partitions_of(degree)
    index = {lam: i for i, lam in enumerate(order)}
    size = len(order)
    cols = []
    for lam in order:
        expansion = to_basis(sym(src, lam), dst).coeffs
        col = [Fraction(0)] * size
        for mu, c in expansion.items():
            col[index[mu]] = c
        cols.append(col)
    entries = tuple(
        tuple(cols[j][i] for j in range(size)) for i in range(size)
    )
    return TransitionMatrix(src, dst, degree, entries)


def p_expansion(x: SymFunc) -> dict:
    """Coefficients of x on the power-sum basis, as ring values."""
    ring = x.ring
    if x.basis == "p":
        return dict(x.coeffs)
    out: dict = {}
    for lam, c in x.coeffs.items():
        for nu, fr in _basis_to_p(x.basis, lam):
            s = out.get(nu, ring.zero) + c * ring.from_fraction(fr)
            if CoeffRing.is_zero(s):
                out.pop(nu, None)
            else:
                out[nu] = s
    return out


def from_p_expansion(coeffs: dict, ring: CoeffRing) -> SymFunc:
    return SymFunc("p", coeffs, ring)


def to_basis(x: SymFunc, target: str) -> SymFunc:
    """Re-express x in another classical basis (exact, round-trip stable)."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == x.basis:
        return x
    ring = x.ring
    pexp = p_expansion(x)
    if target == "p":
        return SymFunc("p", pexp, ring)
    degrees = sorted({lam.size for lam in pexp})
    out: dict = {}
    for n in degrees:
        order = partitions_of(n)
        inv = _basis_matrix_inverse(target, n)
        vec = [pexp.get(lam, ring.zero) for lam in order]
        for j, mu in enumerate(order):
            c = ring.zero
            for i, v in enumerate(vec):
                if not CoeffRing.is_zero(v) and inv[j][i]:
                    c = c + v * ring.from_fraction(inv[j][i])
            if not CoeffRing.is_zero(c):
                out[mu] = c
    return SymFunc(target, out, ring)


def multiply(x: SymFunc, y: SymFunc) -> SymFunc:
    """Product, computed on the power-sum basis (index unions)."""
    ring = x.ring
    if ring.name != y.ring.name:
        raise ValueError("mixed coefficient rings in multiply")
    xp, yp = p_expansion(x), p_expansion(y)
    out: dict = {}
    for la, ca in xp.items():
        for lb, cb in yp.items():
            key = union(la, lb)
            s = out.get(key, ring.zero) + ca * cb
            if CoeffRing.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return SymFunc("p", out, ring)


def hall_inner(x: SymFunc, y: SymFunc):
    """The Hall inner product <h_lam, m_mu> = delta, i.e. <p_lam, p_mu> = z delta."""
    ring = x.ring
    xp, yp = p_expansion(x), p_expansion(y)
    if len(yp) < len(xp):
        xp, yp = yp, xp
    total = ring.zero
    for lam, cx in xp.items():
        cy = yp.get(lam)
        if cy is not None:
            total = total + ring.from_int(stats(lam).z) * cx * cy
    return total


def omega(x: SymFunc) -> SymFunc:
    """The involution with p_n -> (-1)^(n-1) p_n (so h <-> e, m <-> f)."""
    ring = x.ring
    out = {}
    for lam, c in p_expansion(x).items():
        out[lam] = c * ring.from_int(stats(lam).eps)
    return SymFunc("p", out, ring)


def pn_perp(x: SymFunc, n: int) -> SymFunc:
    """Adjoint of multiplication by p_n: sum_j h_j d/dh_{n+j} on the h-basis."""
    if n < 1:
        raise ValueError("n must be positive")
    ring = x.ring
    xh = to_basis(x, "h")
    out: dict = {}
    for lam, c in xh.coeffs.items():
        for v, m in lam.multiplicities().items():
            if v < n:
                continue
            rest = list(lam)
            rest.remove(v)
            j = v - n
            key = union(rest, (j,) if j else ())
            s = out.get(key, ring.zero) + c * ring.from_int(m)
            if CoeffRing.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return SymFunc("h", out, ring)


def skew(family: str, lam, mu, ring: CoeffRing = RING_Q) -> SymFunc:
    """The skew element u_{lam/mu} defined by <u_{lam/mu}, f> = <u_lam, u_mu f>.

    Reconstructed on the h-basis as sum_nu <u_lam, u_mu m_nu> h_nu; pairs with
    |lam| < |mu| give the zero element.
    """
    if family not in ("m", "h", "e", "s", "f"):
        raise ValueError(f"no skew family for basis {family!r}")
    lam, mu = Partition(lam), Partition(mu)
    d = lam.size - mu.size
    if d < 0:
        return SymFunc("h", {}, ring)
    u_lam = sym(family, lam, ring)
    u_mu = sym(family, mu, ring)
    coeffs = {}
    for nu in partitions_of(d):
        c = hall_inner(u_lam, multiply(u_mu, sym("m", nu, ring)))
        if not CoeffRing.is_zero(c):
            coeffs[nu] = c
    return SymFunc("h", coeffs, ring)


def skew_monomial_weight_sum(lam, mu, n: int) -> Fraction:
    """The z-weighted tabloid sum sum_xi w(xi,mu) w(xi+(n),lam) / z_xi.

    A priori rational; provably a nonnegative integer.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size + n:
        raise SizeMismatch(f"|{lam}| != |{mu}| + {n}")
    total = Fraction(0)
    for xi in partitions_of(mu.size):
        w1 = w(xi, mu)
        if not w1:
            continue
        w2 = w(union(xi, (n,)), lam)
        if w2:
            total += Fraction(w1 * w2, stats(xi).z)
    return total


def skew_monomial_pn_inner(lam, mu, n: int) -> Fraction:
    """Closed form for <m_{lam/mu}, p_n> from domino tabloids."""
    lam, mu = Partition(lam), Partition(mu)
    sign = (-1) ** (n - 1) * eps_of(mu) * eps_of(lam)
    return sign * skew_monomial_weight_sum(lam, mu, n)


def dominance_leq(mu, lam) -> bool:
    """Dominance order on partitions of the same size."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return False
    acc_m = acc_l = 0
    for i in range(max(len(mu), len(lam))):
        acc_m += mu[i] if i < len(mu) else 0
        acc_l += lam[i] if i < len(lam) else 0
        if acc_m > acc_l:
            return False
    return True


def dominance_lt(mu, lam) -> bool:
    return tuple(mu) != tuple(lam) and dominance_leq(mu, lam)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _term_sort_key(lam: Partition):
    order = partitions_of(lam.size)
    return (lam.size, -order.index(lam))


def render_symfunc(x: SymFunc) -> str:
    """Render as "-1*m[3] + 3*m[2,1]": ascending canonical term order."""
    if not x.coeffs:
        return "0"
    pieces = []
    for lam in sorted(x.coeffs, key=_term_sort_key):
        body = f"{x.ring.render(x.coeffs[lam])}*{x.basis}{format_partition(lam)}"
        if not pieces:
            pieces.append(body)
        elif body.startswith("-"):
            pieces.append(" - " + body[1:])
        else:
            pieces.append(" + " + body)
    return "".join(pieces)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?P<basis>[mhepsf])\s*\[(?P<parts>[\d,\s]*)\]"
)


def parse_symfunc(text: str, ring: CoeffRing = RING_Q) -> SymFunc:
    """Parse the rendering grammar (integer or fractional coefficients)."""
    pos = 0
    basis = None
    coeffs: dict = {}
    stripped = text.strip()
    if stripped == "0":
        return SymFunc("p", {}, ring)
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ValueError(f"cannot parse symmetric function near {text[pos:]!r}")
            break
        if basis is None:
            basis = match.group("basis")
        elif basis != match.group("basis"):
            raise ValueError("mixed bases in one expression")
        sign = -1 if match.group("sign") == "-" else 1
        coeff_form = match.group("coeff")
        fr = Fraction(coeff_form) if coeff_form else Fraction(1)
        lam = Partition(
            int(tok) for tok in match.group("parts").split(",") if tok.strip()
        )
        c = ring.from_fraction(sign * fr)
        prev = coeffs.get(lam, ring.zero)
        coeffs[lam] = prev + c
        pos = match.end()
    if basis is None:
        raise ValueError(f"empty symmetric function expression: {text!r}")
    return SymFunc(basis, coeffs, ring)

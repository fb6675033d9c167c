"""Exact arithmetic in rings of cyclotomic integers Z[zeta_d].

Elements are stored as integer coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(d)-1), reduced modulo the d-th cyclotomic
polynomial.  Everything is exact; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

# d for which Z[zeta_d] is a principal ideal domain: d = 2 mod 4, or one
# of this list (Masley-Montgomery).
_PID_LIST = frozenset({1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20,
                       21, 24, 25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48,
                       60, 84})

# d where coefficient-wise nearest-integer rounding gives a Euclidean
# division for the field norm; exact gcds are guaranteed only here.
NORM_EUCLIDEAN = frozenset({1, 2, 3, 4, 6})


def is_pid(d: int) -> bool:
    return d % 4 == 2 or d in _PID_LIST


def _poly_divmod_z(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials, valid when it is exact or den is monic."""
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    dlead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % dlead != 0:
            raise ArithmeticError("non-exact polynomial division")
        f = c // dlead
        q[i] = f
        if f:
            for j, dc in enumerate(den):
                num[i + j] -= f * dc
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the d-th cyclotomic polynomial."""
    if d == 1:
        return (-1, 1)
    num = [0] * (d + 1)
    num[0], num[d] = -1, 1
    for e in range(1, d):
        if d % e == 0:
            num, rem = _poly_divmod_z(num, list(cyclotomic_polynomial(e)))
            assert rem == [0]
    return tuple(num)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


class CyclotomicRing:
    """The ring Z[zeta_d], with cached power-basis reduction tables."""

    _cache: dict[int, "CyclotomicRing"] = {}

    def __new__(cls, d: int):
        if d in cls._cache:
            return cls._cache[d]
        self = super().__new__(cls)
        cls._cache[d] = self
        return self

    def __init__(self, d: int):
        if getattr(self, "_ready", False):
            return
        if d < 1:
            raise ValueError("torsion order must be >= 1")
        self.d = d
        self.phi = cyclotomic_polynomial(d)
        self.degree = len(self.phi) - 1
        # zeta^k in the power basis, for k up to 2*degree (covers products)
        self._powers: list[tuple[int, ...]] = []
        n = self.degree
        for k in range(max(2 * n - 1, d + 1)):
            if k < n:
                vec = [0] * n
                vec[k] = 1
            else:
                prev = self._powers[k - 1]
                shifted = [0] + list(prev)
                lead = shifted[n]
                vec = [shifted[i] - lead * self.phi[i] for i in range(n)]
            self._powers.append(tuple(vec))
        self._ready = True

    def __repr__(self):
        return f"CyclotomicRing(d={self.d})"

    # -- element constructors ------------------------------------------

    def zero(self) -> "Cyc":
        return Cyc(self, (0,) * self.degree)

    def one(self) -> "Cyc":
        return self.from_int(1)

    def from_int(self, n: int) -> "Cyc":
        vec = [0] * self.degree
        vec[0] = n
        return Cyc(self, tuple(vec))

    def zeta_pow(self, k: int) -> "Cyc":
        return Cyc(self, self._powers[k % self.d])

    def from_vec(self, vec) -> "Cyc":
        vec = list(vec)
        if len(vec) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        return Cyc(self, tuple(int(c) for c in vec))

    def root_units(self) -> list["Cyc"]:
        """The 2d units +-zeta^h (all units for d in {1,2,3,4,6})."""
        out = []
        for h in range(self.d):
            z = self.zeta_pow(h)
            out.append(z)
            out.append(-z)
        # dedupe (e.g. d=1,2 where -1 is a power of zeta)
        seen, uniq = set(), []
        for u in out:
            if u.vec not in seen:
                seen.add(u.vec)
                uniq.append(u)
        return uniq

    # -- internal arithmetic on raw tuples ------------------------------

    def _mul_vecs(self, a, b):
        n = self.degree
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = [0] * n
        for k, c in enumerate(conv):
            if c:
                pk = self._powers[k]
                for i in range(n):
                    out[i] += c * pk[i]
        return tuple(out)


class Cyc:
    """An element of Z[zeta_d] in the power basis."""

    __slots__ = ("ring", "vec")

    def __init__(self, ring: CyclotomicRing, vec: tuple[int, ...]):
        self.ring = ring
        self.vec = vec

    # -- helpers --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.ring is not self.ring:
                raise ValueError("mixed cyclotomic rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.vec)

    def is_one(self) -> bool:
        return self == self.ring.one()

    def is_rational_integer(self) -> bool:
        return all(c == 0 for c in self.vec[1:])

    def as_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.vec[0]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a + b for a, b in zip(self.vec, o.vec)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.ring, tuple(-a for a in self.vec))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a - b for a, b in zip(self.vec, o.vec)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, self.ring._mul_vecs(self.vec, o.vec))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return isinstance(other, Cyc) and other.ring is self.ring and other.vec == self.vec

    def __hash__(self):
        return hash((self.ring.d, self.vec))

    def __repr__(self):
        return f"Cyc(d={self.ring.d}, {format_cyc(self)})"

    # -- norm / division ---------------------------------------------------

    def norm(self) -> int:
        """Field norm down to Q, as the resultant of Phi_d and this element."""
        n = self.ring.degree
        f = list(self.vec)
        while len(f) > 1 and f[-1] == 0:
            f.pop()
        if f == [0]:
            return 0
        if len(f) == 1:
            return f[0] ** n
        return _resultant(list(self.ring.phi), f)

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse_rational(self) -> list[Fraction]:
        """Inverse in Q(zeta) as a Fraction vector; element must be nonzero."""
        inv = _invert_mod_phi([Fraction(c) for c in self.vec],
                              [Fraction(c) for c in self.ring.phi])
        return inv

    def divexact(self, other: "Cyc") -> "Cyc | None":
        """self / other if the quotient lies in Z[zeta], else None."""
        o = self._coerce(other)
        if o.is_zero():
            return None
        inv = o.inverse_rational()
        prod = _mul_frac_mod_phi([Fraction(c) for c in self.vec], inv,
                                 self.ring)
        out = []
        for c in prod:
            if c.denominator != 1:
                return None
            out.append(int(c))
        return Cyc(self.ring, tuple(out))


# -- polynomial utilities over Q ------------------------------------------

def _invert_mod_phi(f: list[Fraction], phi: list[Fraction]) -> list[Fraction]:
    """Extended Euclid in Q[x]: g with f*g = 1 mod phi."""
    def trim(p):
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    def divmod_q(a, b):
        a = list(a)
        q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
        while len(trim(a)) >= len(b) and any(a):
            a = trim(a)
            if len(a) < len(b):
                break
            c = a[-1] / b[-1]
            k = len(a) - len(b)
            q[k] += c
            for j, bc in enumerate(b):
                a[k + j] -= c * bc
            a = trim(a)
        return q, trim(a)

    r0, r1 = list(phi), trim(list(f))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1 != [Fraction(0)]:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        # s = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                prod[i + j] += qc * sc
        new_s = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new_s[i] += c
        for i, c in enumerate(prod):
            new_s[i] -= c
        s0, s1 = s1, trim(new_s)
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible mod Phi_d")
    lead = r0[0]
    return [c / lead for c in s0]


def _mul_frac_mod_phi(a: list[Fraction], b: list[Fraction], ring: CyclotomicRing):
    n = ring.degree
    conv = [Fraction(0)] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b[:n] + [Fraction(0)] * (n - len(b))):
                if j < n and bj:
                    conv[i + j] += ai * bj
    out = [Fraction(0)] * n
    for k, c in enumerate(conv):
        if c:
            pk = ring._powers[k]
            for i in range(n):
                out[i] += c * pk[i]
    return out


def _resultant(f: list[int], g: list[int]) -> int:
    """Resultant of integer polynomials via a Sylvester-matrix determinant."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    mat = [[0] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(reversed(f)):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(reversed(g)):
            mat[n + i][i + j] = c
    return _int_det(mat)


def _int_det(mat: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- gcd ---------------------------------------------------------------------

def cyc_gcd(a: Cyc, b: Cyc) -> Cyc:
    """gcd in Z[zeta_d]; exact for norm-Euclidean d, raises otherwise."""
    ring = a.ring
    if ring.d not in NORM_EUCLIDEAN:
        raise ArithmeticError(
            f"exact gcd in Z[zeta_{ring.d}] is not implemented (not norm-Euclidean)")
    while not b.is_zero():
        q = _nearest_quotient(a, b)
        a, b = b, a - q * b
        assert b.is_zero() or abs(b.norm()) < abs(a.norm())
    return canonical_associate(a)


def _nearest_quotient(a: Cyc, b: Cyc) -> Cyc:
    inv = b.inverse_rational()
    prod = _mul_frac_mod_phi([Fraction(c) for c in a.vec], inv, a.ring)
    rounded = []
    for c in prod:
        # round half toward even is fine; only |remainder| <= 1/2 matters
        fl = c.numerator // c.denominator
        frac = c - fl
        rounded.append(fl + 1 if frac > Fraction(1, 2) else fl)
    return Cyc(a.ring, tuple(rounded))


def canonical_associate(a: Cyc) -> Cyc:
    """Deterministic representative of a's orbit under +-zeta^h scaling."""
    if a.is_zero():
        return a
    best = None
    for u in a.ring.root_units():
        cand = a * u
        key = cand.vec
        if best is None or key > best.vec:
            best = cand
    return best


def format_cyc(a: Cyc) -> str:
    """Render as a polynomial in z = zeta_d, e.g. ``1-2*z^2``."""
    if a.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(a.vec):
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}z" + (f"^{k}" if k > 1 else "")
        parts.append(("-" if c < 0 else "+", term))
    sign0, term0 = parts[0]
    out = ("-" if sign0 == "-" else "") + term0
    for sign, term in parts[1:]:
        out += sign + term
    return out


def parse_cyc(text: str, ring: CyclotomicRing) -> Cyc:
    """Inverse of format_cyc (restricted grammar, used by the poly parser)."""
    text = text.strip().replace(" ", "")
    if text == "0":
        return ring.zero()
    vec = [0] * ring.degree
    token = ""
    chunks = []
    for ch in text:
        if ch in "+-" and token:
            chunks.append(token)
            token = ch
        else:
            token += ch
    chunks.append(token)
    for chunk in chunks:
        sign = 1
        body = chunk
        if body.startswith("+"):
            body = body[1:]
        elif body.startswith("-"):
            sign, body = -1, body[1:]
        if "z" not in body:
            vec[0] += sign * int(body)
            continue
        coeff_part, _, pow_part = body.partition("z")
        coeff = int(coeff_part.rstrip("*")) if coeff_part.rstrip("*") else 1
        k = int(pow_part[1:]) if pow_part.startswith("^") else (1 if "z" in body else 0)
        zk = ring.zeta_pow(k)
        add = ring.from_int(sign * coeff) * zk
        vec = [v + w for v, w in zip(vec, add.vec)]
    return ring.from_vec(vec)

"""Multivariate Laurent polynomials over Z[zeta_d], with exact gcds.

A polynomial knows its variable count nvars and carries coefficients in a
fixed CyclotomicRing.  Exponent vectors may be negative.  Results of gcd
and determinant are exact; gcd output is defined up to associates and is
returned in a deterministic canonical form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclotomic import (Cyc, CyclotomicRing, NORM_EUCLIDEAN, canonical_associate,
                         cyc_gcd, format_cyc, parse_cyc)


class LaurentPoly:
    """Finite map from integer exponent vectors to nonzero Cyc coefficients."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: CyclotomicRing, nvars: int, terms=None):
        self.ring = ring
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in (terms.items() if isinstance(terms, dict) else terms):
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars:
                    raise ValueError("exponent vector has wrong length")
                if isinstance(c, int):
                    c = ring.from_int(c)
                if not c.is_zero():
                    prev = clean.get(exp)
                    c = c + prev if prev is not None else c
                    if c.is_zero():
                        del clean[exp]
                    else:
                        clean[exp] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars):
        return cls(ring, nvars, {})

    @classmethod
    def constant(cls, ring, nvars, c):
        if isinstance(c, int):
            c = ring.from_int(c)
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, ring, nvars, exp, c=1):
        if isinstance(c, int):
            c = ring.from_int(c)
        return cls(ring, nvars, {tuple(exp): c})

    @classmethod
    def variable(cls, ring, nvars, i, power=1):
        exp = [0] * nvars
        exp[i] = power
        return cls.monomial(ring, nvars, exp)

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and other.ring is self.ring
                and other.nvars == self.nvars and other.terms == self.terms)

    def __hash__(self):
        return hash((self.ring.d, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)})"

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Cyc)):
                return LaurentPoly.constant(self.ring, self.nvars, other)
            return NotImplemented
        if other.ring is not self.ring or other.nvars != self.nvars:
            raise ValueError("mixed polynomial rings")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            s = terms.get(exp, self.ring.zero()) + c
            if s.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = s
        return LaurentPoly(self.ring, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, self.nvars,
                           {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = terms.get(exp)
                s = prod if s is None else s + prod
                if s.is_zero():
                    terms.pop(exp, None)
                else:
                    terms[exp] = s
        return LaurentPoly(self.ring, self.nvars, terms)

    __rmul__ = __mul__

    def shift(self, delta):
        """Multiply by the monomial with exponent vector delta."""
        delta = tuple(delta)
        return LaurentPoly(self.ring, self.nvars,
                           {tuple(a + b for a, b in zip(e, delta)): c
                            for e, c in self.terms.items()})

    def invert_variables(self):
        """Substitute t_i -> t_i^-1 for every variable."""
        return LaurentPoly(self.ring, self.nvars,
                           {tuple(-x for x in e): c for e, c in self.terms.items()})

    def substitute_monomials(self, images: list["LaurentPoly"]):
        """Map t_i to images[i]; each image must be an invertible monomial."""
        out = LaurentPoly.zero(images[0].ring if images else self.ring,
                               images[0].nvars if images else self.nvars)
        ring = out.ring
        nv = out.nvars
        for exp, c in self.terms.items():
            term = LaurentPoly.constant(ring, nv, c)
            for i, e in enumerate(exp):
                if e:
                    img = images[i]
                    ((mexp, mc),) = img.terms.items()
                    mono = LaurentPoly.monomial(ring, nv,
                                                tuple(x * e for x in mexp),
                                                _cyc_pow(mc, e))
                    term = term * mono
            out = out + term
        return out

    def collapse_to_one_variable(self):
        """Send every variable to the single variable t."""
        terms: dict = {}
        for exp, c in self.terms.items():
            k = (sum(exp),)
            s = terms.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = s
        return LaurentPoly(self.ring, 1, terms)

    def evaluate(self, point: list[Cyc]) -> Cyc:
        """Exact substitution; point entries must be units of Z[zeta]."""
        total = self.ring.zero()
        for exp, c in self.terms.items():
            val = c
            for x, e in zip(point, exp):
                val = val * _cyc_pow(x, e)
            total = total + val
        return total

    # -- structure --------------------------------------------------------

    def min_exponents(self):
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def normalized_shift(self):
        """Shift so every variable's minimum exponent is zero."""
        if self.is_zero():
            return self
        return self.shift(tuple(-m for m in self.min_exponents()))

    def leading(self):
        """(exponent, coefficient) of the lex-largest exponent vector."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def content(self) -> Cyc:
        """gcd of all coefficients (exact only for norm-Euclidean d)."""
        it = iter(self.terms.values())
        g = next(it)
        for c in it:
            g = cyc_gcd(g, c)
            if g.is_unit():
                break
        return canonical_associate(g)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """self / other when exact, else None.  Associates-safe."""
        o = self._check(other)
        if o.is_zero():
            return None
        if self.is_zero():
            return LaurentPoly.zero(self.ring, self.nvars)
        a = self.normalized_shift()
        b = o.normalized_shift()
        quot: dict = {}
        while a.terms:
            ea, ca = a.leading()
            eb, cb = b.leading()
            dexp = tuple(x - y for x, y in zip(ea, eb))
            if any(d < 0 for d in dexp):
                return None
            dc = ca.divexact(cb)
            if dc is None:
                return None
            quot[dexp] = dc
            a = a - LaurentPoly.monomial(self.ring, self.nvars, dexp, dc) * b
        q = LaurentPoly(self.ring, self.nvars, quot)
        shift = tuple(x - y for x, y in
                      zip(self.min_exponents(), o.min_exponents()))
        return q.shift(shift)


def _cyc_pow(c: Cyc, e: int) -> Cyc:
    if e >= 0:
        out = c.ring.one()
        for _ in range(e):
            out = out * c
        return out
    inv = c.ring.one().divexact(c)
    if inv is None:
        raise ArithmeticError("negative power of a non-unit coefficient")
    return _cyc_pow(inv, -e)


# -- gcd ----------------------------------------------------------------------


def laurent_gcd(polys: list[LaurentPoly]) -> LaurentPoly:
    """gcd of Laurent polynomials, up to associates, canonical form.

    Exact content normalization requires norm-Euclidean d; for other PID d
    the result is correct up to a rational scalar and callers should treat
    it accordingly (see invariants.report flags).
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        ring = CyclotomicRing(1)
        return LaurentPoly.zero(ring, 0)
    g = polys[0].normalized_shift()
    for p in polys[1:]:
        g = _gcd2(g, p.normalized_shift())
        if g.is_monomial() and g.terms[next(iter(g.terms))].is_unit():
            break
    return canonical_form(g)


def _gcd2(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    f = f.normalized_shift()
    g = g.normalized_shift()
    if f.nvars == 0:
        return LaurentPoly.constant(f.ring, 0, cyc_gcd(f.terms[()], g.terms[()]))
    # pick the variable of lowest combined degree that actually appears
    degs = []
    for i in range(f.nvars):
        df = max(e[i] for e in f.terms)
        dg = max(e[i] for e in g.terms)
        degs.append((df + dg if (df or dg) else -1, i))
    active = [x for x in degs if x[0] >= 0 and
              (max(e[x[1]] for e in f.terms) > 0 or max(e[x[1]] for e in g.terms) > 0)]
    main = min(active)[1] if active else None
    if main is None:
        return LaurentPoly.constant(
            f.ring, f.nvars,
            cyc_gcd(f.terms[(0,) * f.nvars], g.terms[(0,) * g.nvars]))
    fu = _to_univariate(f, main)
    gu = _to_univariate(g, main)
    hu = _uni_gcd(fu, gu, f.ring, f.nvars - 1)
    return _from_univariate(hu, main, f.ring, f.nvars)


def _to_univariate(p: LaurentPoly, main: int):
    """Represent p as dense list of LaurentPoly coefficients in variable main."""
    rest = p.nvars - 1
    deg = max(e[main] for e in p.terms)
    coeffs = [LaurentPoly.zero(p.ring, rest) for _ in range(deg + 1)]
    for exp, c in p.terms.items():
        rem = exp[:main] + exp[main + 1:]
        coeffs[exp[main]] = coeffs[exp[main]] + LaurentPoly.monomial(p.ring, rest, rem, c)
    return coeffs


def _from_univariate(coeffs, main: int, ring, nvars: int) -> LaurentPoly:
    out = LaurentPoly.zero(ring, nvars)
    for k, c in enumerate(coeffs):
        for exp, cc in c.terms.items():
            full = exp[:main] + (k,) + exp[main:]
            out = out + LaurentPoly.monomial(ring, nvars, full, cc)
    return out


def _uni_trim(p):
    while p and p[-1].is_zero():
        p.pop()
    return p


def _uni_content(p, ring, rest):
    polys = [c for c in p if not c.is_zero()]
    g = polys[0]
    for c in polys[1:]:
        g = _gcd2(g, c)
    return g


def _uni_gcd(f, g, ring, rest):
    """Primitive-PRS gcd of dense univariate polys with LaurentPoly coefficients."""
    f = _uni_trim(list(f))
    g = _uni_trim(list(g))
    if not f:
        return g
    if not g:
        return f
    cf = _uni_content(f, ring, rest)
    cg = _uni_content(g, ring, rest)
    cont = _gcd2(cf, cg)
    f = [c.divexact(cf) for c in f]
    g = [c.divexact(cg) for c in g]
    while True:
        if len(f) < len(g):
            f, g = g, f
        r = _pseudo_rem(f, g, ring, rest)
        r = _uni_trim(r)
        if not r:
            break
        rc = _uni_content(r, ring, rest)
        f, g = g, [c.divexact(rc) for c in r]
    gc = _uni_content(g, ring, rest)
    g = [c.divexact(gc) for c in g]
    return [cont * c for c in g]


def _pseudo_rem(f, g, ring, rest):
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g."""
    f = list(f)
    lg = g[-1]
    k = len(f) - len(g) + 1
    for _ in range(k):
        if _uni_trim(list(f)) == [] or len(f) < len(g):
            break
        lead = f[-1]
        f = [c * lg for c in f[:-1]]
        shift = len(f) - (len(g) - 1)
        for j, gc in enumerate(g[:-1]):
            f[shift + j] = f[shift + j] - lead * gc
        f = _uni_trim(f)
        if not f:
            break
    return f


# -- canonical form and associate testing -------------------------------------


def canonical_form(p: LaurentPoly) -> LaurentPoly:
    """Deterministic representative of p up to +-zeta^h * monomial scaling."""
    if p.is_zero():
        return p
    p = p.normalized_shift()
    best = None
    best_key = None
    for u in p.ring.root_units():
        cand = LaurentPoly(p.ring, p.nvars,
                           {e: c * u for e, c in p.terms.items()})
        lead = cand.leading()[1]
        key = (lead.vec, tuple(sorted((e, c.vec) for e, c in cand.terms.items())))
        if best_key is None or key > best_key:
            best, best_key = cand, key
    return best


def associate_equal(f: LaurentPoly, g: LaurentPoly) -> bool:
    """True iff f = unit * monomial * g over Z[zeta_d]."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    q = f.divexact(g)
    if q is None or not q.is_monomial():
        return False
    r = g.divexact(f)
    if r is None or not r.is_monomial():
        return False
    ((_, c),) = q.terms.items()
    return c.is_unit()


# -- determinants --------------------------------------------------------------


def determinant(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Negative exponents are cleared by a global monomial rescale per row,
    then a fraction-free Bareiss elimination runs over the polynomial ring;
    the result is rescaled back.
    """
    n = len(rows)
    if n == 0:
        ring = CyclotomicRing(1)
        return LaurentPoly.constant(ring, 0, 1)
    ring = rows[0][0].ring
    nvars = rows[0][0].nvars
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    shift_total = [0] * nvars
    mat = []
    for r in rows:
        mins = [0] * nvars
        for p in r:
            if not p.is_zero():
                pm = p.min_exponents()
                mins = [min(a, b) for a, b in zip(mins, pm)]
        shift_total = [a + b for a, b in zip(shift_total, mins)]
        mat.append([p.shift(tuple(-m for m in mins)) for p in r])
    det = _bareiss(mat, ring, nvars)
    return det.shift(tuple(shift_total))


def determinant_cofactor(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Cofactor-expansion determinant; independent oracle for tests."""
    n = len(rows)
    if n == 0:
        ring = CyclotomicRing(1)
        return LaurentPoly.constant(ring, 0, 1)
    ring = rows[0][0].ring
    nvars = rows[0][0].nvars
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero(ring, nvars)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * determinant_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss(mat, ring, nvars):
    n = len(mat)
    sign = 1
    prev = LaurentPoly.constant(ring, nvars, 1)
    a = [row[:] for row in mat]
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(ring, nvars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q = num.divexact(prev)
                assert q is not None, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    out = a[n - 1][n - 1]
    return -out if sign < 0 else out


# -- text form ------------------------------------------------------------------


def _var_name(i: int, nvars: int) -> str:
    return "t" if nvars == 1 else f"t{i + 1}"


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form, e.g. ``(1+z)*t1^-2*t2 + 4``."""
    if p.is_zero():
        return "0"
    parts = []
    for exp in sorted(p.terms, reverse=True):
        c = p.terms[exp]
        factors = []
        cs = format_cyc(c)
        for i, e in enumerate(exp):
            if e == 0:
                continue
            v = _var_name(i, p.nvars)
            factors.append(v if e == 1 else f"{v}^{e}")
        if not factors:
            body = cs if ("+" not in cs[1:] and "-" not in cs[1:]) else f"({cs})"
        else:
            if cs == "1":
                body = "*".join(factors)
            elif cs == "-1":
                body = "-" + "*".join(factors)
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                body = f"({cs})*" + "*".join(factors)
            else:
                body = f"{cs}*" + "*".join(factors)
        parts.append(body)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def parse_poly(text: str, ring: CyclotomicRing, nvars: int) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(ring, nvars)
    chunks = []
    depth = 0
    cur = ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text[i:i + 3] in (" + ", " - "):
            chunks.append((cur, 1 if text[i + 1] == "+" else -1))
            cur = ""
            i += 3
            continue
        cur += ch
        i += 1
    chunks.append((cur, 1))
    # the stored sign applies to the NEXT chunk
    out = LaurentPoly.zero(ring, nvars)
    sign = 1
    for body, next_sign in chunks:
        out = out + _parse_term(body, ring, nvars, sign)
        sign = next_sign
    return out


def _parse_term(body: str, ring, nvars, sign) -> LaurentPoly:
    body = body.strip()
    neg = sign < 0
    if body.startswith("-"):
        neg = not neg
        body = body[1:]
    factors = _split_factors(body)
    coeff = ring.one()
    exp = [0] * nvars
    for f in factors:
        f = f.strip()
        if f.startswith("("):
            coeff = coeff * parse_cyc(f[1:-1], ring)
        elif f.startswith("t"):
            name, _, power = f.partition("^")
            idx = 0 if name == "t" else int(name[1:]) - 1
            exp[idx] += int(power) if power else 1
        else:
            coeff = coeff * parse_cyc(f, ring)
    if neg:
        coeff = -coeff
    return LaurentPoly.monomial(ring, nvars, tuple(exp), coeff)


def _split_factors(body: str) -> list[str]:
    out, cur, depth = [], "", 0
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


class RationalFunction:
    """Reduced quotient of Laurent polynomials (denominator nonzero)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, reduce=True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = laurent_gcd([num, den])
            if not g.is_zero():
                num = num.divexact(g)
                den = den.divexact(g)
        if num.is_zero():
            den = LaurentPoly.constant(den.ring, den.nvars, 1)
        num, den = _normalize_sign(num, den)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.num.divexact(self.den) is not None

    def as_polynomial(self) -> LaurentPoly:
        q = self.num.divexact(self.den)
        if q is None:
            raise ValueError("not a polynomial")
        return q

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def associate_equal(self, other: "RationalFunction") -> bool:
        return associate_equal(self.num * other.den, other.num * self.den)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __repr__(self):
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def _normalize_sign(num, den):
    """Scale so the denominator is in canonical form."""
    if den.is_zero():
        return num, den
    cden = canonical_form(den)
    q = den.divexact(cden)
    if q is not None and q.is_monomial():
        ((qe, qc),) = q.terms.items()
        inv = qc.ring.one().divexact(qc)
        if inv is not None:
            num = num.shift(tuple(-x for x in qe))
            num = LaurentPoly(num.ring, num.nvars,
                              {e: c * inv for e, c in num.terms.items()})
            return num, cden
    return num, den

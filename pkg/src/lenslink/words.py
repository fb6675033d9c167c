"""Free-group words and Fox free-differential calculus.

A word is a tuple of (generator index, exponent) letters with exponents
in {+1, -1}.  Formal sums over the free group are dicts mapping reduced
words to integer coefficients.
"""

from __future__ import annotations

Letter = tuple[int, int]
Word = tuple[Letter, ...]
FreeSum = dict[Word, int]


def word(*letters) -> Word:
    """Build a word from (gen, exp) pairs, expanding |exp| > 1."""
    out = []
    for g, e in letters:
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            out.append((g, step))
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def concat(*ws: Word) -> Word:
    out = []
    for w in ws:
        out.extend(w)
    return tuple(out)


def free_reduce(w: Word) -> Word:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def power(g: int, k: int) -> Word:
    return word((g, k))


def exponent_sums(w: Word, ngens: int) -> list[int]:
    out = [0] * ngens
    for g, e in w:
        out[g] += e
    return out


def cyclically_reduce(w: Word) -> Word:
    w = free_reduce(w)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = free_reduce(w[1:-1])
    return w


def _add_term(s: FreeSum, w: Word, c: int):
    w = free_reduce(w)
    nc = s.get(w, 0) + c
    if nc:
        s[w] = nc
    else:
        s.pop(w, None)


def sum_mul_word(s: FreeSum, w: Word) -> FreeSum:
    out: FreeSum = {}
    for u, c in s.items():
        _add_term(out, concat(u, w), c)
    return out


def sum_mul(a: FreeSum, b: FreeSum) -> FreeSum:
    out: FreeSum = {}
    for u, cu in a.items():
        for v, cv in b.items():
            _add_term(out, concat(u, v), cu * cv)
    return out


def sum_add(a: FreeSum, b: FreeSum) -> FreeSum:
    out = dict(a)
    for w, c in b.items():
        _add_term(out, w, c)
    return out


def fox_derivative(w: Word, gen: int) -> FreeSum:
    """Fox derivative d(w)/d(x_gen) in the integral free group ring.

    Rules: d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(uv) = du + u * dv.
    """
    out: FreeSum = {}
    prefix: Word = ()
    for g, e in w:
        if g == gen:
            if e == 1:
                _add_term(out, prefix, 1)
            else:
                _add_term(out, concat(prefix, ((g, -1),)), -1)
        prefix = concat(prefix, ((g, e),))
    return out


def format_word(w: Word, names: list[str]) -> str:
    """Render with collapsed runs, e.g. ``a1 f^-2``."""
    if not w:
        return "1"
    runs: list[tuple[int, int]] = []
    for g, e in w:
        if runs and runs[-1][0] == g and (runs[-1][1] > 0) == (e > 0):
            runs[-1] = (g, runs[-1][1] + e)
        else:
            runs.append((g, e))
    parts = []
    for g, e in runs:
        parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
    return " ".join(parts)

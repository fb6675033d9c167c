import random

from hypothesis import given, strategies as st

from lenslink.words import (concat, cyclically_reduce, exponent_sums,
                            fox_derivative, format_word, free_reduce, inverse,
                            power, sum_add, sum_mul, sum_mul_word, word)


def test_free_reduce():
    w = word((0, 1), (1, 1), (1, -1), (0, -1))
    assert free_reduce(w) == ()
    assert free_reduce(word((0, 1), (1, 1))) == ((0, 1), (1, 1))


def test_power_expansion():
    assert word((2, 3)) == ((2, 1), (2, 1), (2, 1))
    assert word((2, -2)) == ((2, -1), (2, -1))


def test_fox_basic_rules():
    # d(x)/dx = 1
    assert fox_derivative(word((0, 1)), 0) == {(): 1}
    # d(x^-1)/dx = -x^-1
    assert fox_derivative(word((0, -1)), 0) == {((0, -1),): -1}
    # d(y)/dx = 0
    assert fox_derivative(word((1, 1)), 0) == {}


def test_fox_f_power():
    # d(f^p)/df = 1 + f + ... + f^(p-1)
    p = 4
    d = fox_derivative(power(0, p), 0)
    assert d == {(): 1, ((0, 1),): 1, ((0, 1), (0, 1)): 1, ((0, 1),) * 3: 1}


def test_fox_conjugate():
    # d(aba^-1)/da = 1 - aba^-1
    w = word((0, 1), (1, 1), (0, -1))
    d = fox_derivative(w, 0)
    assert d == {(): 1, w: -1}


@given(st.integers(0, 10 ** 6))
def test_fox_product_rule(seed):
    rng = random.Random(seed)

    def rand_word(k):
        return word(*[(rng.randint(0, 2), rng.choice((1, -1))) for _ in range(k)])

    u = rand_word(rng.randint(0, 4))
    v = rand_word(rng.randint(0, 4))
    x = rng.randint(0, 2)
    lhs = fox_derivative(free_reduce(concat(u, v)), x)
    # d(uv) = du + u*dv, computed on the unreduced concatenation
    direct = fox_derivative(concat(u, v), x)
    rhs = sum_add(fox_derivative(u, x), sum_mul_word({u: 1}, ()) and
                  {free_reduce(concat(u, w)): c for w, c in fox_derivative(v, x).items()})
    merged = {}
    for part in (fox_derivative(u, x), rhs if False else {}):
        pass
    expect = dict(fox_derivative(u, x))
    for w, c in fox_derivative(v, x).items():
        key = free_reduce(concat(u, w))
        expect[key] = expect.get(key, 0) + c
        if expect[key] == 0:
            del expect[key]
    assert direct == expect
    assert lhs == direct  # free reduction does not change the derivative


def test_fox_fundamental_identity():
    # sum_j d(w)/dx_j * (x_j - 1) = w - 1 in the group ring
    rng = random.Random(3)
    for _ in range(20):
        w = word(*[(rng.randint(0, 2), rng.choice((1, -1))) for _ in range(6)])
        total = {}
        for j in range(3):
            d = fox_derivative(w, j)
            for u, c in d.items():
                for v, cc in ((concat(u, ((j, 1),)), c), (u, -c)):
                    key = free_reduce(v)
                    total[key] = total.get(key, 0) + cc
                    if total[key] == 0:
                        del total[key]
        expect = {}
        rw = free_reduce(w)
        expect[rw] = expect.get(rw, 0) + 1
        expect[()] = expect.get((), 0) - 1
        expect = {k: v for k, v in expect.items() if v}
        assert total == expect


def test_cyclic_reduce_and_format():
    w = word((0, -1), (1, 1), (2, 1), (0, 1))
    assert cyclically_reduce(w) == word((1, 1), (2, 1))
    assert format_word(word((0, 1), (0, 1), (1, -2)), ["a1", "f"]) == "a1^2 f^-2"
    assert format_word((), ["a1"]) == "1"
    assert exponent_sums(word((0, 2), (1, -1)), 2) == [2, -1]

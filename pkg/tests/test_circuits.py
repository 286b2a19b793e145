from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from pivotlab.circuits import CircuitBuilder, evaluate_word


def _word_inputs(b: CircuitBuilder, lo: int, width: int):
    return [b.input(lo + i) for i in range(width)]


def _pack(a: int, c: int, w: int) -> int:
    # inputs 0..w-1 hold a (least significant first), inputs w..2w-1 hold c; input 0 is the top bit of x
    n = 2 * w
    x = 0
    for i in range(w):
        if a >> i & 1:
            x |= 1 << (n - 1 - i)
        if c >> i & 1:
            x |= 1 << (n - 1 - (w + i))
    return x


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_add_sub_mul(w, data):
    b = CircuitBuilder(2 * w)
    A, C = _word_inputs(b, 0, w), _word_inputs(b, w, w)
    total = b.add(A, C)
    k = data.draw(st.integers(0, 9))
    prod = b.mul_const(A, k)
    diff = b.sub(b.add(A, C), C)
    pc = b.popcount(A + C)
    inst = b.build(total)
    a = data.draw(st.integers(0, 2 ** w - 1))
    c = data.draw(st.integers(0, 2 ** w - 1))
    x = _pack(a, c, w)
    assert evaluate_word(inst, total, x) == a + c
    assert evaluate_word(inst, prod, x) == a * k
    assert evaluate_word(inst, diff, x) == a
    assert evaluate_word(inst, pc, x) == bin(a).count("1") + bin(c).count("1")


def test_equals_pattern_and_select():
    b = CircuitBuilder(2)
    eq = b.equals_pattern([b.input(0), b.input(1)], [1, 0])
    neq = b.not_(eq)
    word = b.select([(eq, b.const_word(5)), (neq, b.const_word(2))])
    inst = b.build(word)
    for x in range(4):
        expected = 5 if x == 0b10 else 2
        assert evaluate_word(inst, word, x) == expected
        assert inst.objective(x) == expected


def test_constant_folding_keeps_gate_count_small():
    b = CircuitBuilder(1)
    one = b.const(1)
    assert b.and_(b.input(0), one) == b.input(0)
    assert b.or_(b.input(0), one) == one
    assert b.const(1) == one

"""A small gate-level builder for arithmetic over Boolean circuits.

Words are lists of gate ids, least significant bit first.  Everything is
unsigned; subtraction assumes a nonnegative result.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .problems import AND, CONST, INPUT, NOT, OR, CircuitInstance, Gate, max_circuit_weights  # noqa: F401

Word = list[int]


class CircuitBuilder:
    def __init__(self, n_inputs: int):
        self.gates: list[Gate] = [Gate(INPUT, (i,)) for i in range(n_inputs)]
        self.n_inputs = n_inputs
        self._consts: dict[int, int] = {}
        self._memo: dict[tuple, int] = {}

    def _add(self, kind: str, args: tuple[int, ...]) -> int:
        key = (kind, args)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self.gates.append(Gate(kind, args))
        self._memo[key] = len(self.gates) - 1
        return len(self.gates) - 1

    def input(self, i: int) -> int:
        return i

    def const(self, b: int) -> int:
        b = 1 if b else 0
        if b not in self._consts:
            self._consts[b] = self._add(CONST, (b,))
        return self._consts[b]

    def is_const(self, g: int, b: int) -> bool:
        return self._consts.get(1 if b else 0) == g

    def not_(self, a: int) -> int:
        if self.is_const(a, 0):
            return self.const(1)
        if self.is_const(a, 1):
            return self.const(0)
        gate = self.gates[a]
        if gate.kind == NOT:
            return gate.args[0]
        return self._add(NOT, (a,))

    def and_(self, *xs: int) -> int:
        args = []
        for x in xs:
            if self.is_const(x, 0):
                return self.const(0)
            if self.is_const(x, 1):
                continue
            args.append(x)
        args = tuple(sorted(set(args)))
        if not args:
            return self.const(1)
        if len(args) == 1:
            return args[0]
        return self._add(AND, args)

    def or_(self, *xs: int) -> int:
        args = []
        for x in xs:
            if self.is_const(x, 1):
                return self.const(1)
            if self.is_const(x, 0):
                continue
            args.append(x)
        args = tuple(sorted(set(args)))
        if not args:
            return self.const(0)
        if len(args) == 1:
            return args[0]
        return self._add(OR, args)

    def xor(self, a: int, b: int) -> int:
        return self.or_(self.and_(a, self.not_(b)), self.and_(self.not_(a), b))

    def xnor(self, a: int, b: int) -> int:
        return self.not_(self.xor(a, b))

    def literal(self, g: int, positive: bool) -> int:
        return g if positive else self.not_(g)

    # word arithmetic
    def const_word(self, value: int, width: int | None = None) -> Word:
        if value < 0:
            raise ValueError("words are unsigned")
        width = max(value.bit_length(), 1) if width is None else width
        return [self.const(value >> i & 1) for i in range(width)]

    def gate_word(self, value: int, enable: int) -> Word:
        """``value`` when ``enable`` is 1, else zero."""
        return [enable if value >> i & 1 else self.const(0) for i in range(max(value.bit_length(), 1))]

    def add(self, a: Word, b: Word) -> Word:
        width = max(len(a), len(b))
        zero = self.const(0)
        a = a + [zero] * (width - len(a))
        b = b + [zero] * (width - len(b))
        out, carry = [], zero
        for x, y in zip(a, b):
            out.append(self.xor(self.xor(x, y), carry))
            carry = self.or_(self.and_(x, y), self.and_(carry, self.xor(x, y)))
        out.append(carry)
        return self.trim(out)

    def add_many(self, words: Sequence[Word]) -> Word:
        words = [w for w in words if w]
        if not words:
            return [self.const(0)]
        while len(words) > 1:
            nxt = [self.add(words[i], words[i + 1]) for i in range(0, len(words) - 1, 2)]
            if len(words) % 2:
                nxt.append(words[-1])
            words = nxt
        return words[0]

    def trim(self, w: Word) -> Word:
        while len(w) > 1 and self.is_const(w[-1], 0):
            w = w[:-1]
        return w

    def shift(self, w: Word, k: int) -> Word:
        return [self.const(0)] * k + w

    def mul_const(self, w: Word, k: int) -> Word:
        if k < 0:
            raise ValueError("constant multiplier must be nonnegative")
        parts = [self.shift(w, i) for i in range(k.bit_length()) if k >> i & 1]
        return self.add_many(parts) if parts else [self.const(0)]

    def popcount(self, bits: Iterable[int]) -> Word:
        return self.add_many([[b] for b in bits])

    def sub(self, a: Word, b: Word) -> Word:
        """a - b for a >= b, as two's complement addition truncated to a's width."""
        width = max(len(a), len(b)) + 1
        zero = self.const(0)
        a = a + [zero] * (width - len(a))
        b = b + [zero] * (width - len(b))
        nb = [self.not_(x) for x in b]
        out, carry = [], self.const(1)
        for x, y in zip(a, nb):
            out.append(self.xor(self.xor(x, y), carry))
            carry = self.or_(self.and_(x, y), self.and_(carry, self.xor(x, y)))
        return self.trim(out[:width - 1])

    def equals_pattern(self, bits: Sequence[int], pattern: Sequence[int]) -> int:
        return self.and_(*(self.literal(b, bool(p)) for b, p in zip(bits, pattern)))

    def select(self, cases: Sequence[tuple[int, Word]]) -> Word:
        """OR-of-AND multiplexer; selectors must be mutually exclusive."""
        width = max(len(w) for _, w in cases)
        out = []
        for i in range(width):
            terms = [self.and_(sel, w[i]) for sel, w in cases if i < len(w)]
            out.append(self.or_(*terms))
        return out

    def build(self, outputs: Word, weights: Sequence[Fraction] | None = None) -> CircuitInstance:
        """Circuit whose outputs are ``outputs`` (y_1 first)."""
        w = max_circuit_weights(len(outputs)) if weights is None else tuple(weights)
        return CircuitInstance(tuple(self.gates), tuple(outputs), w)


def evaluate_word(inst: CircuitInstance, word: Sequence[int], x: int) -> int:
    """Value of an internal word on one input; a testing aid."""
    n = inst.n_inputs
    vals = inst._run([x >> (n - 1 - i) & 1 for i in range(n)], 1)
    return sum(vals[g] << i for i, g in enumerate(word))

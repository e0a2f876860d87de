"""
Words in a free group.

A word is a tuple of nonzero ints: ``i + 1`` stands for generator ``i``
and ``-(i + 1)`` for its inverse. Words are kept freely reduced.

The text syntax used in files and on the command line:

* a lowercase letter is a generator, the uppercase letter its inverse;
* ``[u,v]`` is the commutator ``u v U V``;
* ``(u)^n`` and ``x^n`` are powers, ``n`` may be negative;
* ``1`` or the empty string is the identity.
"""
from __future__ import annotations

from ..errors import ParseError


def reduce(word):
    """Freely reduce a sequence of letters."""
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word):
    w = reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(word):
    return tuple(-x for x in reversed(word))


def multiply(*words):
    out = []
    for w in words:
        out.extend(w)
    return reduce(out)


def power(word, n):
    if n < 0:
        word, n = inverse(word), -n
    return reduce(tuple(word) * n)


def commutator(u, v):
    return multiply(u, v, inverse(u), inverse(v))


def conjugate(word, by):
    return multiply(by, word, inverse(by))


def exponent_sums(word, ngens):
    row = [0] * ngens
    for x in word:
        row[abs(x) - 1] += 1 if x > 0 else -1
    return row


class _Parser:
    def __init__(self, text, names):
        self.text = text.replace(" ", "")
        self.pos = 0
        self.index = {name: i for i, name in enumerate(names)}

    def error(self, msg):
        raise ParseError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        w = self.product(closers="")
        if self.pos != len(self.text):
            self.error("unexpected character")
        return w

    def product(self, closers):
        out = []
        while self.peek() and self.peek() not in closers:
            out.extend(self.factor())
        return reduce(out)

    def factor(self):
        c = self.peek()
        if c == "[":
            self.pos += 1
            u = self.product(closers=",")
            if self.peek() != ",":
                self.error("expected ','")
            self.pos += 1
            v = self.product(closers="]")
            if self.peek() != "]":
                self.error("expected ']'")
            self.pos += 1
            base = commutator(u, v)
        elif c == "(":
            self.pos += 1
            base = self.product(closers=")")
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        elif c == "1":
            self.pos += 1
            base = ()
        elif c.isalpha():
            self.pos += 1
            if c in self.index:
                base = (self.index[c] + 1,)
            elif c.lower() in self.index and c.isupper():
                base = (-(self.index[c.lower()] + 1),)
            else:
                self.error(f"unknown generator {c!r}")
        else:
            self.error("unexpected character")
        if self.peek() == "^":
            self.pos += 1
            start = self.pos
            if self.peek() in "+-":
                self.pos += 1
            while self.peek().isdigit():
                self.pos += 1
            try:
                n = int(self.text[start:self.pos])
            except ValueError:
                self.error("bad exponent")
            base = power(base, n)
        return base


def parse_word(text, names):
    """Parse ``text`` over single-letter lowercase generator ``names``."""
    for name in names:
        if len(name) != 1 or not name.islower():
            raise ParseError(f"generator names must be single lowercase letters: {name!r}")
    return _Parser(text, names).parse()


def format_word(word, names):
    if not word:
        return "1"
    return "".join(
        names[x - 1] if x > 0 else names[-x - 1].upper() for x in word
    )

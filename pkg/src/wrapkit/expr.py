"""Parser for exact input numbers such as ``2+sqrt(3)`` or ``1/2+1/2*sqrt(5)``.

Grammar (whitespace ignored)::

    expr     := term (('+' | '-') term)*
    term     := ['-'] (rational ['*' radical] | radical)
    radical  := 'sqrt' '(' integer ')'
    rational := integer ['/' positive-integer]

The textual form printed by QuadExt (``"2/1 + -1/1*sqrt(3)"``) parses back to
the same value.
"""
import re
from fractions import Fraction

from .errors import ExpressionSyntaxError, IncompatibleRadicands, MixedRadicands
from .exact_field import QuadExt, normalize_radical

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([-+*/()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {text[pos:].lstrip()[:1]!r}",
                                        len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("sqrt", "sqrt", start))
        else:
            tokens.append((m.group(3), m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExpressionSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            op, _, pos = self.tokens[self.i]
            self.i += 1
            rhs = self.term()
            try:
                value = value + rhs if op == "+" else value - rhs
            except IncompatibleRadicands as exc:
                raise MixedRadicands(f"{exc} at position {pos}") from None
        self.take("end")
        return value

    def term(self):
        negate = False
        if self.peek()[0] == "-":
            negate = True
            self.i += 1
        if self.peek()[0] == "sqrt":
            value = self.radical(Fraction(1))
        else:
            q = self.rational()
            if self.peek()[0] == "*":
                self.i += 1
                value = self.radical(q)
            else:
                value = QuadExt(q)
        return -value if negate else value

    def rational(self):
        num = self.take("int")[1]
        if self.peek()[0] == "/":
            self.i += 1
            _, den, pos = self.take("int")
            if den == 0:
                raise ExpressionSyntaxError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def radical(self, coeff):
        self.take("sqrt")
        self.take("(")
        radicand = self.take("int")[1]
        self.take(")")
        return normalize_radical(coeff, radicand)


def parse_b(text):
    """Exact QuadExt value of ``text``; radicands come back squarefree."""
    return _Parser(text).expr()


def parse_length(text, b=None):
    """Like parse_b, but a trailing ``b`` multiplies by the envelope width."""
    text = text.strip()
    if text.endswith("b"):
        if b is None:
            raise ExpressionSyntaxError("'b' needs a known envelope width", len(text) - 1)
        head = text[:-1].strip()
        return b * (parse_b(head) if head else QuadExt(1))
    return parse_b(text)

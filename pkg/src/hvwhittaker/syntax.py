"""Text syntax for algebra and module elements.

Grammar (whitespace is ignored)::

    element := ['-'] term { ('+' | '-') term }
    term    := [coeff '*'] factor { '*' factor } | coeff
    factor  := gen ['^' nat] | 'w'
    gen     := 'L[' int ']' | 'I[' int ']' | 'z0' | 'z1' | 'z2' | 'z3'
    coeff   := nat ['/' nat]

A term containing ``w`` denotes a module vector; ``w`` must close the term.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import Generator, LieElement
from .modules import BasisIndex, ModuleSpec, ModuleVector, act_word
from .uea import PBWMonomial, UEAElement, normal_form


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line, self.column = line, col


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    word: tuple  # tuple[Generator, ...]
    has_w: bool


class WordSum(list):
    """Linear combination of unordered words, as parsed."""

    def to_uea(self) -> UEAElement:
        out = UEAElement()
        for t in self:
            out = out + normal_form(t.word) * t.coeff
        return out

    def to_lie(self) -> LieElement:
        out = LieElement()
        for t in self:
            if len(t.word) != 1:
                raise ValueError("a Lie element is a combination of single generators")
            out = out + LieElement.of(t.word[0], t.coeff)
        return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        sign = -1 if self.eat("-") else 1
        return sign * self.nat()

    def element(self) -> list[Term]:
        if not self.peek():
            self.error("empty expression")
        sign = -1 if self.eat("-") else 1
        terms = [self.term(sign)]
        while True:
            if self.eat("+"):
                terms.append(self.term(1))
            elif self.eat("-"):
                terms.append(self.term(-1))
            elif self.peek():
                self.error(f"unexpected {self.peek()!r}")
            else:
                return terms

    def term(self, sign: int) -> Term:
        coeff = Fraction(sign)
        word: list[Generator] = []
        has_w = False
        if self.peek().isdigit():
            num = self.nat()
            den = 1
            if self.eat("/"):
                den = self.nat()
                if den == 0:
                    self.error("zero denominator")
            coeff *= Fraction(num, den)
            if not self.eat("*"):
                return Term(coeff, (), False)
        while True:
            start = self.pos
            if has_w:
                self.error("'w' must be the last factor", start)
            if self.eat("w"):
                has_w = True
            else:
                g = self.gen()
                power = self.nat() if self.eat("^") else 1
                word.extend([g] * power)
            if not self.eat("*"):
                return Term(coeff, tuple(word), has_w)

    def gen(self) -> Generator:
        self.skip()
        start = self.pos
        for kind in ("L", "I"):
            if self.eat(kind + "["):
                k = self.integer()
                self.expect("]")
                return Generator(kind, k)
        if self.eat("z"):
            if self.peek() in ("0", "1", "2", "3") and self.peek():
                i = int(self.text[self.pos])
                self.pos += 1
                return Generator("I", 0) if i == 0 else Generator("Z", i)
            self.error("expected z0, z1, z2 or z3", start)
        self.error("expected a generator, 'w' or a coefficient", start)


def parse_terms(text: str) -> list[Term]:
    return _Parser(text).element()


def parse_element(text: str, spec: ModuleSpec | None = None) -> Union[WordSum, ModuleVector]:
    """Parse ``text`` into a module vector (if it mentions ``w``) or a word sum."""
    terms = parse_terms(text)
    kinds = {t.has_w for t in terms}
    if len(kinds) > 1:
        raise ParseError("mixed module and algebra terms", text, 0)
    if spec is not None and all(not t.word and not t.coeff and not t.has_w for t in terms):
        return ModuleVector.zero(spec)  # "0" is the zero vector of any module
    if True in kinds:
        if spec is None:
            raise ValueError("a module element needs a module (psi, xi) to live in")
        out = ModuleVector.zero(spec)
        for t in terms:
            out = out + act_word(t.word, ModuleVector.cyclic(spec)) * t.coeff
        return out
    return WordSum(terms)


def parse_generator(text: str) -> Generator:
    terms = parse_terms(text)
    if len(terms) != 1 or terms[0].coeff != 1 or len(terms[0].word) != 1 or terms[0].has_w:
        raise ParseError("expected a single generator", text, 0)
    return terms[0].word[0]


def parse_lie(text: str) -> LieElement:
    parsed = parse_element(text)
    if isinstance(parsed, ModuleVector):
        raise ParseError("expected a Lie element, got a module vector", text, 0)
    return parsed.to_lie()


# -- printing ---------------------------------------------------------------

def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _gen_name(g: Generator) -> str:
    return f"z{g.index}" if g.kind == "Z" else f"{g.kind}[{g.index}]"


def monomial_text(m: PBWMonomial) -> str:
    parts = [_power(f"z{i}", e) for i, e in enumerate(m.t) if e]
    parts += [_power(f"L[{k}]", e) for k, e in m.l]
    parts += [_power(f"I[{k}]", e) for k, e in m.i]
    return "*".join(parts)


def index_text(idx: BasisIndex) -> str:
    return repr(idx)


def _lie_print_key(g: Generator):
    if g.kind == "L":
        return (0, g.index)
    if g.kind == "I" and g.index:
        return (1, g.index)
    return (2, 0 if g.kind == "I" else g.index)


def _join(pairs: list[tuple[Fraction, str]]) -> str:
    if not pairs:
        return "0"
    out = []
    for n, (c, body) in enumerate(pairs):
        neg = c < 0
        a = -c if neg else c
        if not body:
            text = format_rational(a)
        elif a == 1:
            text = body
        else:
            text = f"{format_rational(a)}*{body}"
        if n == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


def format_element(x) -> str:
    """Canonical text for Lie elements, UEA elements and module vectors."""
    if isinstance(x, Generator):
        return _gen_name(x)
    if isinstance(x, LieElement):
        return _join([(c, _gen_name(g)) for g, c in sorted(x.terms.items(), key=lambda gc: _lie_print_key(gc[0]))])
    if isinstance(x, UEAElement):
        return _join([(c, monomial_text(m)) for m, c in x.items()])
    if isinstance(x, ModuleVector):
        return _join([(c, index_text(idx)) for idx, c in x.items()])
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    raise TypeError(f"cannot format {type(x).__name__}")


def describe_index(idx: BasisIndex) -> dict:
    return {
        "t": list(idx.t),
        "lambda": [list(p) for p in idx.lam.mult],
        "mu": [list(p) for p in idx.mu.mult],
        "text": index_text(idx),
    }


def describe_terms(x) -> list:
    """Machine-readable ``[coefficient, index]`` pairs in canonical order."""
    if isinstance(x, ModuleVector):
        return [[format_rational(c), describe_index(idx)] for idx, c in x.items()]
    if isinstance(x, UEAElement):
        return [[format_rational(c), {"t": list(m.t), "L": [list(p) for p in m.l],
                                      "I": [list(p) for p in m.i], "text": monomial_text(m) or "1"}]
                for m, c in x.items()]
    if isinstance(x, LieElement):
        return [[format_rational(c), _gen_name(g)]
                for g, c in sorted(x.terms.items(), key=lambda gc: _lie_print_key(gc[0]))]
    raise TypeError(f"cannot describe {type(x).__name__}")

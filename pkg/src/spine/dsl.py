"""Text syntax for models, grades, spine points, matrices and coset expressions.

Every ``parse_*`` function accepts surrounding whitespace and rejects
trailing input.  The matching ``format_*`` functions emit the canonical
spelling, so ``parse(format(x)) == x`` and ``format(parse(s)) == s`` for
canonical ``s``.

Examples of canonical spellings::

    R^3    Z^2    Q    Q_5    axb    minWAP    compact
    span[[1,0,0],[0,1,0]]    span[]    ap    realline    {R,2}    TOP
    (L=span[[1,0]], v=[1/2,3])    (g=realline, v=[2,0])    (g=full, v=e)
    (2Z) \\ (4Z)    1+3Z    [1,0]+[[2,0],[0,2]]Z
"""

from __future__ import annotations

from fractions import Fraction

from .cosets import CosetExpr, Difference, Intersection, Leaf, Union
from .errors import DomainError, DslSyntaxError, SemanticError
from .models import AxbGrade, Grade, ModelSpec, QGrade, TwoPointGrade, VectorGrade, format_grade
from .padic import is_prime
from .semigroup import SpineElement
from .subspace import RationalSubspace

COSET_OPS = {"|": Union, "&": Intersection, "\\": Difference}
OP_SYMBOL = {Union: "|", Intersection: "&", Difference: "\\"}


class _Parser:
    def __init__(self, text: str):
        if not isinstance(text, str):
            raise DslSyntaxError("expected text", "", 0)
        self.text = text
        self.pos = 0

    # scanning ---------------------------------------------------------------

    def error(self, msg: str, pos: int | None = None) -> DslSyntaxError:
        return DslSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.peek() or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")

    def end(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        start = self.pos
        num = self.integer()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise self.error("expected a denominator")
            den = self.integer()
            if den == 0:
                raise SemanticError(f"rational at column {start + 1} has a zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    # structures -------------------------------------------------------------

    def vector(self, item=None) -> list:
        item = item or self.rational
        self.expect("[")
        out = []
        if self.accept("]"):
            return out
        while True:
            out.append(item())
            if self.accept("]"):
                return out
            self.expect(",")

    def matrix(self) -> list[list[Fraction]]:
        rows = self.vector(self.vector)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise SemanticError("matrix rows have different lengths")
        return rows

    def model(self) -> ModelSpec:
        start = self.pos
        name = self.word()
        try:
            if name in ("R", "Z") and self.accept("^"):
                n = self.integer()
                if n < 1:
                    raise SemanticError(f"dimension must be at least 1, got {n}")
                return ModelSpec(name + "n", n)
            if name.startswith("Q_"):
                try:
                    p = int(name[2:])
                except ValueError:
                    raise self.error("expected a prime after Q_", start + 2) from None
                if not is_prime(p):
                    raise SemanticError(f"Q_p needs a prime, got {p}")
                return ModelSpec("Qp", p=p)
            if name in ("compact", "R", "Z", "Q", "axb", "minWAP"):
                return ModelSpec(name)
        except DomainError as exc:
            raise SemanticError(str(exc)) from None
        raise self.error(f"unknown model {name!r}", start)

    def subspace(self, n: int) -> RationalSubspace:
        start = self.pos
        if self.word() != "span":
            raise self.error("expected span[...]", start)
        rows = self.matrix()
        if any(len(r) != n for r in rows):
            raise SemanticError(f"span vectors must have length {n}")
        return RationalSubspace(n, tuple(tuple(r) for r in rows))

    def grade(self, model: ModelSpec) -> Grade:
        self.skip()
        start = self.pos
        if model.is_vector:
            if self.text.startswith("span", self.pos):
                return VectorGrade(self.subspace(model.n))
            alias = self.word()
            if alias == "ap":
                return model.unit()
            if alias == "full":
                return model.top()
            raise self.error("expected a span[...] grade", start)
        if model.family == "Q":
            if self.accept("{"):
                gens = []
                if not self.accept("}"):
                    while True:
                        self.skip()
                        at = self.pos
                        if self.accept("R"):
                            gens.append("R")
                        else:
                            p = self.integer()
                            if not is_prime(p):
                                raise SemanticError(f"{p} at column {at + 1} is not a prime")
                            gens.append(p)
                        if self.accept("}"):
                            break
                        self.expect(",")
                return QGrade(tuple(gens))
            w = self.word()
            if w in ("TOP", "full"):
                return QGrade(top=True)
            if w == "ap":
                return QGrade()
            raise self.error("expected {...} or TOP", start)
        w = self.word()
        try:
            g = AxbGrade(w) if model.family == "axb" else TwoPointGrade(w)
            return model.check_grade(g)
        except DomainError:
            if not w:
                raise self.error(f"expected a grade of {model}", start) from None
            raise SemanticError(f"{w!r} is not a grade of {model}") from None

    def rep(self, model: ModelSpec):
        if model.family in ("compact", "minWAP"):
            start = self.pos
            if self.word() != "e":
                raise self.error("this model only has the identity representative 'e'", start)
            return None
        if model.is_vector or model.family == "axb":
            return tuple(self.vector())
        return self.rational()

    def spine(self, model: ModelSpec) -> SpineElement:
        self.expect("(")
        self.skip()
        start = self.pos
        key = self.word()
        if key not in ("L", "g"):
            raise self.error("expected L= or g=", start)
        self.expect("=")
        g = self.grade(model)
        self.expect(",")
        self.skip()
        start = self.pos
        if self.word() != "v":
            raise self.error("expected v=", start)
        self.expect("=")
        rep = self.rep(model)
        self.expect(")")
        try:
            return SpineElement(model, g, rep)
        except DomainError as exc:
            raise SemanticError(str(exc)) from None

    def coset(self) -> CosetExpr:
        left = self.coset_atom()
        while self.peek() in COSET_OPS:
            op = COSET_OPS[self.peek()]
            self.pos += 1
            right = self.coset_atom()
            try:
                left = op(left, right)
            except DomainError as exc:
                raise SemanticError(str(exc)) from None
        return left

    def coset_atom(self) -> CosetExpr:
        if self.accept("("):
            e = self.coset()
            self.expect(")")
            return e
        try:
            if self.peek() == "[":
                first = self.pos
                head = self.vector(lambda: self.vector() if self.peek() == "[" else self.rational())
                if head and all(isinstance(r, list) for r in head):
                    offset, gens = None, head
                else:
                    if any(isinstance(r, list) for r in head):
                        raise self.error("mixed vector and matrix", first)
                    offset = head
                    self.expect("+")
                    gens = self.matrix()
                self.expect("Z")
                if offset is None:
                    offset = [0] * len(gens)
                return Leaf(tuple(_as_int(x) for x in offset), tuple(tuple(_as_int(x) for x in r) for r in gens))
            if self.peek() == "Z":
                self.pos += 1
                return Leaf((0,), ((1,),))
            a = self.integer()
            if self.accept("+"):
                d = 1 if self.peek() == "Z" else self.integer()
                self.expect("Z")
                return Leaf((a,), ((d,),))
            self.expect("Z")
            return Leaf((0,), ((a,),))
        except DomainError as exc:
            raise SemanticError(str(exc)) from None


def _as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise SemanticError(f"coset data must be integers, got {x}")
    return int(x)


def _run(text: str, fn):
    p = _Parser(text)
    out = fn(p)
    p.end()
    return out


# public parse functions ------------------------------------------------------


def parse_model(text: str) -> ModelSpec:
    return _run(text, lambda p: p.model())


def parse_rational(text: str) -> Fraction:
    return _run(text, lambda p: p.rational())


def parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_run(text, lambda p: p.vector()))


def parse_matrix(text: str) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in _run(text, lambda p: p.matrix()))


def parse_subspace(text: str, n: int | None = None) -> RationalSubspace:
    if n is None:
        p = _Parser(text)
        if p.word() != "span":
            raise p.error("expected span[...]", 0)
        rows = p.matrix()
        p.end()
        if not rows or not rows[0]:
            raise SemanticError("cannot infer the ambient dimension of an empty span")
        return RationalSubspace(len(rows[0]), tuple(tuple(r) for r in rows))
    return _run(text, lambda p: p.subspace(n))


def parse_grade(model: ModelSpec, text: str) -> Grade:
    return _run(text, lambda p: p.grade(model))


def parse_spine(model: ModelSpec, text: str) -> SpineElement:
    return _run(text, lambda p: p.spine(model))


def parse_coset(text: str) -> CosetExpr:
    return _run(text, lambda p: p.coset())


# printers ---------------------------------------------------------------


def format_model(model: ModelSpec) -> str:
    return str(model)


def format_vector(v) -> str:
    return "[" + ",".join(str(Fraction(x)) for x in v) + "]"


def format_matrix(rows) -> str:
    return "[" + ",".join(format_vector(r) for r in rows) + "]"


def format_spine(s: SpineElement) -> str:
    return str(s)


def format_coset(expr: CosetExpr) -> str:
    if isinstance(expr, Leaf):
        if expr.dim == 1:
            d = expr.generators[0][0]
            t = expr.offset[0]
            return f"{d}Z" if t == 0 else f"{t}+{d}Z"
        gens = format_matrix(expr.generators) + "Z"
        if not any(expr.offset):
            return gens
        return format_vector(expr.offset) + "+" + gens
    return f"({format_coset(expr.left)}) {OP_SYMBOL[type(expr)]} ({format_coset(expr.right)})"

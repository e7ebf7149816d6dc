"""Text format for polynomial systems.

    file      := header? poly_line+
    header    := "vars:" name+
    poly_line := name "=" expr
    expr      := ("+"|"-")? term (("+"|"-") term)*
    term      := coeff ("*"? factor)* | factor ("*"? factor)*
    factor    := name ("^" nat)?
    coeff     := integer | integer "/" integer

Blank lines and "#" comments are ignored. Without a header, variables are
ordered by first appearance. Declaration order fixes every basis order
downstream.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import InputError
from .poly import HPoly, Monomial, PolyMap

_TOKEN = re.compile(
    r"(?P<ws>[ \t]+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^=:])"
)


class ParseError(InputError):
    """Syntax or semantic error; line and column are 1-based."""

    def __init__(self, message, line, column, token=""):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.token = token


@dataclass
class _Tok:
    kind: str
    text: str
    col: int  # 1-based


def _tokenize(line: str, lineno: int) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1, line[pos])
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos + 1))
        pos = m.end()
    return toks


@dataclass
class SystemDocument:
    variables: List[str]
    names: List[str]
    polynomials: List[HPoly]
    lines: List[int]

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> Optional[int]:
        return self.polynomials[0].degree if self.polynomials else None

    def to_map(self) -> PolyMap:
        if len(self.polynomials) != self.n:
            raise InputError(
                f"square system required: {len(self.polynomials)} polynomials in {self.n} variables"
            )
        return PolyMap(tuple(self.polynomials))


class _LineParser:
    def __init__(self, toks: List[_Tok], lineno: int, line: str):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.line = line
        self.factor_toks: Dict[str, _Tok] = {}

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, message, tok: Optional[_Tok] = None):
        if tok is None:
            tok = self.peek()
        if tok is None:
            col = max(1, len(self.line.rstrip()))
            raise ParseError(message + " (end of line)", self.lineno, col, "")
        raise ParseError(message, self.lineno, tok.col, tok.text)

    def take(self, kind=None, text=None) -> _Tok:
        tok = self.peek()
        if tok is None or (kind and tok.kind != kind) or (text and tok.text != text):
            want = text or kind
            self.error(f"expected {want}")
        self.i += 1
        return tok

    def at(self, kind=None, text=None) -> bool:
        tok = self.peek()
        return tok is not None and (kind is None or tok.kind == kind) and (text is None or tok.text == text)

    def expr(self):
        """List of (coefficient, {var: exp}, first token) terms."""
        terms = []
        sign = 1
        if self.at("op", "-") or self.at("op", "+"):
            sign = -1 if self.take().text == "-" else 1
        terms.append(self.term(sign))
        while self.peek() is not None:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.i += 1
                terms.append(self.term(-1 if tok.text == "-" else 1))
            else:
                self.error("expected '+', '-' or end of line")
        return terms

    def term(self, sign):
        first = self.peek()
        coeff = Fraction(sign)
        powers: Dict[str, int] = {}
        if self.at("int"):
            num = int(self.take().text)
            if self.at("op", "/"):
                self.take()
                den_tok = self.take("int")
                den = int(den_tok.text)
                if den == 0:
                    self.error("zero denominator", den_tok)
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        else:
            self.factor(powers)
        while True:
            if self.at("op", "*"):
                self.take()
                self.factor(powers)
            elif self.at("name"):
                self.factor(powers)
            else:
                break
        return coeff, powers, first

    def factor(self, powers):
        tok = self.take("name")
        exp = 1
        if self.at("op", "^"):
            self.take()
            exp = int(self.take("int").text)
        powers[tok.text] = powers.get(tok.text, 0) + exp
        self.factor_toks.setdefault(tok.text, tok)


def parse_system(text: str) -> SystemDocument:
    """Parse and validate a system; raises ParseError with 1-based positions."""
    variables: Optional[List[str]] = None
    raw = []  # (lineno, line, name, terms, parser)
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _tokenize(body, lineno)
        lp = _LineParser(toks, lineno, body)
        if toks[0].kind == "name" and toks[0].text == "vars" and len(toks) > 1 and toks[1].text == ":":
            if variables is not None or raw:
                lp.error("the vars header must come first and only once", toks[0])
            lp.i = 2
            variables = []
            if lp.peek() is None:
                lp.error("expected variable names")
            while lp.peek() is not None:
                tok = lp.take("name")
                if tok.text in variables:
                    lp.error(f"duplicate variable {tok.text!r}", tok)
                variables.append(tok.text)
            continue
        name = lp.take("name")
        lp.take("op", "=")
        if lp.peek() is None:
            lp.error("expected an expression")
        terms = lp.expr()
        raw.append((lineno, body, name, terms, lp))
    if not raw:
        raise ParseError("no polynomial lines", 1, 1)
    if variables is None:
        variables = []
        for _, _, _, terms, _ in raw:
            for _, powers, _ in terms:
                for v in powers:
                    if v not in variables:
                        variables.append(v)
    index = {v: k for k, v in enumerate(variables)}
    n = len(variables)
    names, polys, lines = [], [], []
    degrees: List[Tuple[int, int]] = []
    for lineno, body, name, terms, lp in raw:
        if name.text in names:
            raise ParseError(f"duplicate polynomial name {name.text!r}", lineno, name.col, name.text)
        collected: Dict[Monomial, Fraction] = {}
        deg = None
        for coeff, powers, tok in terms:
            for v in powers:
                if v not in index:
                    vt = lp.factor_toks[v]
                    raise ParseError(f"unknown variable {v!r}", lineno, vt.col, v)
            exps = [0] * n
            for v, e in powers.items():
                exps[index[v]] += e
            mono = Monomial(exps)
            # a bare 0 says nothing about the degree; 0*x^2 does
            if coeff == 0 and not powers:
                continue
            if deg is None:
                deg = mono.degree
            elif mono.degree != deg:
                raise ParseError(
                    f"inhomogeneous polynomial {name.text!r}: term degrees {deg} and {mono.degree}",
                    lineno, tok.col, tok.text,
                )
            if coeff:
                collected[mono] = collected.get(mono, Fraction(0)) + coeff
        degrees.append((lineno, deg))
        names.append(name.text)
        lines.append(lineno)
        polys.append(collected)
    known = [d for _, d in degrees if d is not None]
    common = known[0] if known else 0
    for lineno, d in degrees:
        if d is not None and d != common:
            raise ParseError(
                f"inhomogeneous system: polynomial degrees {common} and {d}", lineno, 1
            )
    hpolys = [HPoly(n, common, terms) for terms in polys]
    return SystemDocument(variables, names, hpolys, lines)


def format_system(doc: SystemDocument) -> str:
    """Canonical text: header plus one line per polynomial, terms in graded-lex order."""
    out = ["vars: " + " ".join(doc.variables)]
    for name, p in zip(doc.names, doc.polynomials):
        if p.is_zero() and p.degree > 0:
            # keep the degree visible so the text parses back to the same system
            body = "0*" + Monomial.var(p.n, 0, p.degree).format(doc.variables)
        else:
            body = p.format(doc.variables)
        out.append(f"{name} = {body}")
    return "\n".join(out) + "\n"


def document_from_map(f: PolyMap, variables=None, names=None) -> SystemDocument:
    n = f.n
    variables = list(variables or [f"x{i + 1}" for i in range(n)])
    names = list(names or [f"f{i + 1}" for i in range(n)])
    return SystemDocument(variables, names, list(f.polys), list(range(2, n + 2)))

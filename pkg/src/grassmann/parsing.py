"""Text formats: multivector expressions, words, matrices and morphism files.

Expression grammar (whitespace is insignificant)::

    expr    := term (("+" | "-") term)*
    term    := factor ("^" factor)*
    factor  := "-" factor | scalar "*" factor | scalar | generator | "(" expr ")"
    scalar  := int ("/" posint)?
    generator := "e" digits

``^`` is the wedge product and binds tighter than ``+``/``-``; ``*`` (scalar
multiplication) binds tightest.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .exterior import AlgebraSignature, Multivector, wedge
from .scalars import FieldSpec
from .tensor import FreeWord

__all__ = [
    "parse_expr",
    "format_canonical",
    "parse_word",
    "parse_matrix",
    "read_matrix_file",
    "morphism_to_dict",
    "morphism_from_dict",
    "load_morphism",
    "signature_to_dict",
    "multivector_to_json",
]

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>e\d+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: AlgebraSignature):
        self.tokens = _tokenize(text)
        self.i = 0
        self.sig = sig

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Multivector:
        x = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return x

    def expr(self) -> Multivector:
        x = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self) -> Multivector:
        x = self.factor()
        while self.peek()[1] == "^":
            self.take()
            x = wedge(x, self.factor())
        return x

    def factor(self) -> Multivector:
        kind, v, pos = self.peek()
        if v == "-":
            self.take()
            return -self.factor()
        if v == "(":
            self.take()
            x = self.expr()
            self.expect(")")
            return x
        if kind == "gen":
            self.take()
            idx = int(v[1:])
            if not 1 <= idx <= self.sig.n:
                raise ParseError(f"generator {v} out of range [e1, e{self.sig.n}]", pos)
            return self.sig.gen(idx)
        if kind == "int":
            c = self.scalar()
            if self.peek()[1] == "*":
                self.take()
                return self.factor().scale(c)
            return self.sig.scalar(c)
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)

    def scalar(self):
        _, num, pos = self.take()
        den = "1"
        if self.peek()[1] == "/":
            self.take()
            kind, den, dpos = self.take()
            if kind != "int":
                raise ParseError("expected a positive integer denominator", dpos)
        try:
            return self.sig.field.parse(f"{num}/{den}")
        except ParseError as exc:
            raise ParseError(str(exc), pos) from None


def parse_expr(text: str, sig: AlgebraSignature) -> Multivector:
    """Evaluate an expression such as ``"3*e1^e2 - 1/2*e3"``."""
    return _Parser(text, sig).parse()


def _blade_text(blade) -> str:
    return "^".join(f"e{i}" for i in blade)


def format_canonical(x: Multivector) -> str:
    """Canonical text: grade-major then lexicographic, re-parses to ``x``."""
    parts = []
    for blade, c in x.items():
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        body = str(mag) if not blade else f"{mag}*{_blade_text(blade)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts) if parts else "0"


_WORD_RE = re.compile(r"\s*(?:(?P<coef>-?\d+(?:\s*/\s*\d+)?)\s*\*)?(?P<letters>(?:\s*e\d+)*)\s*$")


def parse_word(text: str, sig: AlgebraSignature) -> FreeWord:
    """Parse a free-algebra word such as ``"3*e2 e1 e2"`` (empty word allowed)."""
    m = _WORD_RE.match(text)
    if m is None:
        raise ParseError(f"invalid word literal {text!r}")
    coef = sig.field.parse(m.group("coef")) if m.group("coef") else sig.field.one
    letters = tuple(int(t) for t in re.findall(r"e(\d+)", m.group("letters")))
    for i in letters:
        if not 1 <= i <= sig.n:
            raise ParseError(f"generator e{i} out of range [e1, e{sig.n}]")
    return FreeWord(coef, letters)


def parse_matrix(text: str, field: FieldSpec, row_sep: str | None = None):
    """Rows separated by newlines (or ``row_sep``), entries by whitespace or commas."""
    from .determinant import SquareMatrix

    chunks = text.split(row_sep) if row_sep else text.splitlines()
    rows = []
    for chunk in chunks:
        chunk = chunk.split("#", 1)[0].strip()
        if not chunk:
            continue
        rows.append([field.parse(tok) for tok in re.split(r"[\s,]+", chunk) if tok])
    if not rows:
        raise ParseError("empty matrix")
    try:
        return SquareMatrix.from_rows(rows, field)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_matrix_file(path, field: FieldSpec):
    return parse_matrix(Path(path).read_text(), field)


def signature_to_dict(sig: AlgebraSignature) -> dict:
    return {"n": sig.n, "field": sig.field.label}


def multivector_to_json(x: Multivector) -> dict:
    return {
        "signature": signature_to_dict(x.signature),
        "result": format_canonical(x),
        "terms": [{"blade": list(b), "coeff": str(c)} for b, c in x.items()],
    }


def morphism_to_dict(f) -> dict:
    out = {"signature": signature_to_dict(f.signature)}
    for i, img in enumerate(f.images, 1):
        out[f"e{i}"] = format_canonical(img)
    return out


def morphism_from_dict(data: dict):
    """Build a validated morphism; generators missing from ``data`` map to themselves."""
    from .morphisms import morphism_from_images

    try:
        sig_block = data["signature"]
        sig = AlgebraSignature(int(sig_block["n"]), FieldSpec.from_label(str(sig_block.get("field", "q"))))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad signature block: {exc}") from None
    unknown = [k for k in data if k != "signature" and not re.fullmatch(r"e\d+", k)]
    if unknown:
        raise ParseError(f"unknown keys in morphism file: {unknown}")
    images = []
    for i in range(1, sig.n + 1):
        text = data.get(f"e{i}")
        images.append(sig.gen(i) if text is None else parse_expr(str(text), sig))
    extra = [k for k in data if k != "signature" and not 1 <= int(k[1:]) <= sig.n]
    if extra:
        raise ParseError(f"generators {extra} out of range for n={sig.n}")
    return morphism_from_images(images, sig)


def load_morphism(path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None
    return morphism_from_dict(data)

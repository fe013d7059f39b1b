import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from termcode.exceptions import ParseError, SourceSpan
from termcode.ir.System import Constraint, FuncSymbol, SortDecl, System, VarDecl
from termcode.ir.terms import App, Term, Var
from termcode.ir.validation import validate_system
from termcode.utilities.system import read_text

KEYWORDS = ("sort", "fun", "var", "eq", "neq", "out")

_TOKEN_PATTERN = re.compile(
    r"(?P<ARROW>->)|(?P<NEQ>!=)|(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<LPAREN>\()|(?P<RPAREN>\))|(?P<COMMA>,)|(?P<COLON>:)|(?P<EQUALS>=)"
    r"|(?P<SPACE>[ \t\r]+)"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan


@dataclass(frozen=True)
class RawTerm:
    """A term before identifiers are resolved to variables or constants"""

    name: str
    args: Optional[Tuple["RawTerm", ...]]
    span: SourceSpan


def tokenize_line(line: str, line_number: int) -> List[Token]:
    """
    Splits one line into tokens, dropping whitespace and any # comment
    """
    line = line.split("#", 1)[0]
    tokens = []
    position = 0
    while position < len(line):
        match = _TOKEN_PATTERN.match(line, position)
        if match is None:
            raise ParseError(
                f"Unexpected character '{line[position]}'",
                SourceSpan(line_number, position + 1, 1),
            )
        kind = match.lastgroup
        text = match.group()
        if kind != "SPACE":
            tokens.append(
                Token(kind, text, SourceSpan(line_number, position + 1, len(text)))
            )
        position = match.end()

    return tokens


class TokenStream:
    """
    Cursor over the tokens of one line
    """

    def __init__(self, tokens: List[Token], line_number: int, line_length: int):
        self.tokens = tokens
        self.index = 0
        self._end_span = SourceSpan(line_number, max(line_length, 0) + 1, 1)

    @property
    def exhausted(self) -> bool:
        return self.index >= len(self.tokens)

    def peek(self) -> Optional[Token]:
        return None if self.exhausted else self.tokens[self.index]

    def next(self, kind: str, description: str) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(f"Expected {description} but the line ended", self._end_span)
        if token.kind != kind:
            raise ParseError(f"Expected {description}, found '{token.text}'", token.span)
        self.index += 1
        return token

    def accept(self, kind: str) -> Optional[Token]:
        token = self.peek()
        if token is not None and token.kind == kind:
            self.index += 1
            return token
        return None

    def expect_end(self):
        token = self.peek()
        if token is not None:
            raise ParseError(f"Unexpected '{token.text}'", token.span)


def parse_raw_term(stream: TokenStream) -> RawTerm:
    """
    term := IDENT | IDENT "(" term ("," term)* ")"
    """
    name = stream.next("IDENT", "an identifier")
    open_paren = stream.accept("LPAREN")
    if open_paren is None:
        return RawTerm(name.text, None, name.span)

    args = [parse_raw_term(stream)]
    while stream.accept("COMMA"):
        args.append(parse_raw_term(stream))
    if stream.exhausted:
        raise ParseError("Unclosed parenthesis", open_paren.span)
    stream.next("RPAREN", "',' or ')'")

    return RawTerm(name.text, tuple(args), name.span)


class _SystemBuilder:
    def __init__(self):
        self.sorts: List[SortDecl] = []
        self.funcs: List[FuncSymbol] = []
        self.vars: List[VarDecl] = []
        self.equations: List[Tuple[RawTerm, RawTerm]] = []
        self.disequalities: List[Tuple[RawTerm, RawTerm]] = []
        self.outputs: List[RawTerm] = []

    def add_line(self, stream: TokenStream):
        keyword = stream.next("IDENT", "a declaration keyword")
        if keyword.text not in KEYWORDS:
            raise ParseError(
                f"Unknown declaration '{keyword.text}', expected one of {', '.join(KEYWORDS)}",
                keyword.span,
            )
        getattr(self, f"_parse_{keyword.text}")(stream)
        stream.expect_end()

    def _parse_sort(self, stream: TokenStream):
        self.sorts.append(SortDecl(stream.next("IDENT", "a sort name").text))

    def _parse_fun(self, stream: TokenStream):
        name = stream.next("IDENT", "a function name").text
        stream.next("COLON", "':'")
        arg_sorts = []
        while stream.peek() is not None and stream.peek().kind == "IDENT":
            arg_sorts.append(stream.next("IDENT", "a sort name").text)
        stream.next("ARROW", "'->'")
        result = stream.next("IDENT", "a result sort").text
        self.funcs.append(FuncSymbol(name, tuple(arg_sorts), result))

    def _parse_var(self, stream: TokenStream):
        names = [stream.next("IDENT", "a variable name").text]
        while stream.peek() is not None and stream.peek().kind == "IDENT":
            names.append(stream.next("IDENT", "a variable name").text)
        stream.next("COLON", "':'")
        sort = stream.next("IDENT", "a sort name").text
        self.vars.extend(VarDecl(name, sort) for name in names)

    def _parse_eq(self, stream: TokenStream):
        lhs = parse_raw_term(stream)
        stream.next("EQUALS", "'='")
        self.equations.append((lhs, parse_raw_term(stream)))

    def _parse_neq(self, stream: TokenStream):
        lhs = parse_raw_term(stream)
        stream.next("NEQ", "'!='")
        self.disequalities.append((lhs, parse_raw_term(stream)))

    def _parse_out(self, stream: TokenStream):
        self.outputs.append(parse_raw_term(stream))
        while not stream.exhausted:
            stream.accept("COMMA")
            self.outputs.append(parse_raw_term(stream))

    def resolve(self, raw: RawTerm) -> Term:
        """Turns identifiers into variables or constants, now that all declarations are known"""
        variables = {var.name for var in self.vars}
        functions = {func.name for func in self.funcs}
        if raw.args is None:
            if raw.name in variables:
                return Var(raw.name)
            if raw.name in functions:
                return App(raw.name, ())
            raise ParseError(f"Unknown identifier '{raw.name}'", raw.span)

        if raw.name not in functions:
            raise ParseError(f"Unknown function symbol '{raw.name}'", raw.span)
        return App(raw.name, tuple(self.resolve(arg) for arg in raw.args))

    def build(self) -> System:
        return System(
            sorts=tuple(self.sorts),
            funcs=tuple(self.funcs),
            vars=tuple(self.vars),
            equations=tuple(
                Constraint.eq(self.resolve(lhs), self.resolve(rhs))
                for lhs, rhs in self.equations
            ),
            disequalities=tuple(
                Constraint.neq(self.resolve(lhs), self.resolve(rhs))
                for lhs, rhs in self.disequalities
            ),
            outputs=tuple(self.resolve(term) for term in self.outputs),
        )


def parse(text: str, validate: bool = True) -> System:
    """
    Parses the .tc system format.

    Parameters
    ----------
    text
        Source text. One declaration per line, # starts a comment, CR characters are ignored.

    validate
        Whether to type-check the result. Ill-typed systems raise ValidationError.

    Returns
    -------
    The parsed system
    """
    builder = _SystemBuilder()
    for line_number, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        tokens = tokenize_line(line, line_number)
        if tokens:
            builder.add_line(TokenStream(tokens, line_number, len(line)))

    system = builder.build()
    if validate:
        validate_system(system).raise_for_issues()

    return system


def parse_file(path: str, validate: bool = True) -> System:
    return parse(read_text(path), validate=validate)

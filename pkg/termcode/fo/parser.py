import re
from typing import Dict, List, Optional

from termcode.dsl.parser import SourceSpan, Token
from termcode.exceptions import ParseError
from termcode.fo.formulas import (
    And,
    Equals,
    Exists,
    FOProblem,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Pred,
    Signature,
    conjunction,
)
from termcode.ir.System import FuncSymbol
from termcode.ir.terms import App, Term, Var
from termcode.utilities.system import read_text

DECLARATIONS = ("sort", "rel", "fun", "sentence")
QUANTIFIERS = ("forall", "exists")

_TOKEN_PATTERN = re.compile(
    r"(?P<ARROW>->)|(?P<NEQ>!=)|(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<LPAREN>\()|(?P<RPAREN>\))|(?P<COMMA>,)|(?P<COLON>:)|(?P<DOT>\.)"
    r"|(?P<EQUALS>=)|(?P<NOT>~)|(?P<AND>&)|(?P<OR>\|)|(?P<SPACE>[ \t\r]+)"
)


def tokenize(text: str) -> List[Token]:
    """Tokens of a whole .fo file; # starts a comment running to the end of the line"""
    tokens = []
    for line_number, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0]
        position = 0
        while position < len(line):
            match = _TOKEN_PATTERN.match(line, position)
            if match is None:
                raise ParseError(
                    f"Unexpected character '{line[position]}'",
                    SourceSpan(line_number, position + 1, 1),
                )
            if match.lastgroup != "SPACE":
                tokens.append(
                    Token(
                        match.lastgroup,
                        match.group(),
                        SourceSpan(line_number, position + 1, len(match.group())),
                    )
                )
            position = match.end()
    return tokens


class _FormulaParser:
    """
    Recursive descent over the token list.

    formula     := implication
    implication := disjunction ("->" implication)?
    disjunction := conjunction ("|" conjunction)*
    conjunction := unary ("&" unary)*
    unary       := "~" unary | quantifier | "(" formula ")" | atom
    quantifier  := ("forall" | "exists") IDENT ":" IDENT "." formula
    atom        := term ("=" | "!=") term | IDENT ("(" term ("," term)* ")")?
    """

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0
        self.signature = Signature()
        self.sentences: List[Formula] = []
        self._scope: List[str] = []

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        token = self.peek()
        if token is not None and token.kind == kind and (text is None or token.text == text):
            self.index += 1
            return token
        return None

    def next(self, kind: str, description: str) -> Token:
        token = self.peek()
        if token is None:
            end = self.tokens[-1].span if self.tokens else SourceSpan(1, 1)
            raise ParseError(f"Expected {description} but the input ended", end)
        if token.kind != kind:
            raise ParseError(f"Expected {description}, found '{token.text}'", token.span)
        self.index += 1
        return token

    def at_declaration(self) -> bool:
        token = self.peek()
        return token is None or (token.kind == "IDENT" and token.text in DECLARATIONS)

    def parse(self) -> FOProblem:
        while self.peek() is not None:
            keyword = self.next("IDENT", "a declaration keyword")
            if keyword.text not in DECLARATIONS:
                raise ParseError(
                    f"Unknown declaration '{keyword.text}', expected one of {', '.join(DECLARATIONS)}",
                    keyword.span,
                )
            getattr(self, f"_parse_{keyword.text}")(keyword)

        if not self.sentences:
            raise ParseError("No sentence declared", SourceSpan(1, 1))
        return FOProblem(self.signature, conjunction(self.sentences))

    def _sort_names(self) -> List[str]:
        names = []
        while not self.at_declaration() and self.peek().kind == "IDENT":
            names.append(self.next("IDENT", "a sort name").text)
        return names

    def _declare(self, token: Token):
        if token.text in self.signature.names() or token.text in QUANTIFIERS:
            raise ParseError(f"'{token.text}' is already declared", token.span)

    def _parse_sort(self, keyword: Token):
        names = []
        while not self.at_declaration() and self.peek().kind == "IDENT":
            names.append(self.next("IDENT", "a sort name"))
        if not names:
            raise ParseError("Expected a sort name", keyword.span)
        for token in names:
            self._declare(token)
            self.signature.sorts.append(token.text)

    def _parse_rel(self, keyword: Token):
        name = self.next("IDENT", "a relation name")
        self._declare(name)
        self.next("COLON", "':'")
        self.signature.relations[name.text] = tuple(self._sort_names())

    def _parse_fun(self, keyword: Token):
        name = self.next("IDENT", "a function name")
        self._declare(name)
        self.next("COLON", "':'")
        arg_sorts = self._sort_names()
        self.next("ARROW", "'->'")
        result = self.next("IDENT", "a result sort").text
        self.signature.functions[name.text] = FuncSymbol(name.text, tuple(arg_sorts), result)

    def _parse_sentence(self, keyword: Token):
        self.sentences.append(self.formula())
        if not self.at_declaration():
            token = self.peek()
            raise ParseError(f"Unexpected '{token.text}'", token.span)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("ARROW"):
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        result = self.conjunction()
        while self.accept("OR"):
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> Formula:
        result = self.unary()
        while self.accept("AND"):
            result = And(result, self.unary())
        return result

    def unary(self) -> Formula:
        if self.accept("NOT"):
            return Not(self.unary())
        if self.accept("LPAREN"):
            inner = self.formula()
            self.next("RPAREN", "')'")
            return inner
        for quantifier, build in (("forall", Forall), ("exists", Exists)):
            if self.accept("IDENT", quantifier):
                var = self.next("IDENT", "a variable name").text
                self.next("COLON", "':'")
                sort = self.next("IDENT", "a sort name").text
                self.next("DOT", "'.'")
                self._scope.append(var)
                body = self.formula()
                self._scope.pop()
                return build(var, sort, body)
        return self.atom()

    def atom(self) -> Formula:
        start = self.peek()
        if start is not None and start.kind == "IDENT" and start.text in self.signature.relations:
            self.index += 1
            args = self._arguments() if self.accept("LPAREN") else ()
            return Pred(start.text, args)

        lhs = self.term()
        if self.accept("EQUALS"):
            return Equals(lhs, self.term())
        if self.accept("NEQ"):
            return Not(Equals(lhs, self.term()))
        token = self.peek()
        if token is None:
            raise ParseError("Expected '=' after a term", start.span)
        raise ParseError(f"Expected '=' after a term, found '{token.text}'", token.span)

    def _arguments(self) -> tuple:
        args = [self.term()]
        while self.accept("COMMA"):
            args.append(self.term())
        self.next("RPAREN", "',' or ')'")
        return tuple(args)

    def term(self) -> Term:
        name = self.next("IDENT", "a term")
        if self.accept("LPAREN"):
            if name.text not in self.signature.functions:
                raise ParseError(f"Unknown function symbol '{name.text}'", name.span)
            return App(name.text, self._arguments())
        if name.text in self._scope:
            return Var(name.text)
        if name.text in self.signature.functions:
            return App(name.text, ())
        raise ParseError(f"Unknown identifier '{name.text}'", name.span)


def parse_fo(text: str) -> FOProblem:
    """
    Parses the .fo sentence format: sort, rel and fun declarations followed by one or more
    sentence declarations, which are conjoined
    """
    return _FormulaParser(tokenize(text)).parse()


def parse_fo_file(path: str) -> FOProblem:
    return parse_fo(read_text(path))


def parse_formula(text: str, signature: Signature) -> Formula:
    """Parses a single formula against an existing signature, for tests and generators"""
    parser = _FormulaParser(tokenize(text))
    parser.signature = signature
    formula = parser.formula()
    token = parser.peek()
    if token is not None:
        raise ParseError(f"Unexpected '{token.text}'", token.span)
    return formula


def signature_from(
    sorts: List[str],
    relations: Optional[Dict[str, tuple]] = None,
    functions: Optional[List[FuncSymbol]] = None,
) -> Signature:
    return Signature(
        list(sorts),
        {name: tuple(args) for name, args in (relations or {}).items()},
        {func.name: func for func in functions or []},
    )

"""Subcategory expressions

    expression := call | name | interval
    call       := name "(" [expression ("," expression)*] ")"
    interval   := "[" int "," int "]" | int ("/" int)*

Functions: add, oplus, inter, rperp, lperp, all, proj, inj, zero. Bare names refer to the other
definitions of the same pairs file.
"""
import re
from collections import namedtuple
from logging import getLogger

from ..exception import ExpressionError
from ..serialcat import parse_interval
from .ast import Call, IntervalLiteral, Name, iter_names
from .subcategory import Subcategory, add, everything, injectives, left_perp, projectives, right_perp, zero

logger = getLogger(__name__)


Token = namedtuple("Token", "kind text position")

_token_pattern = re.compile(r"""
    (?P<interval>\[\s*\d+\s*,\s*\d+\s*\])
  | (?P<stacked>\d+(?:\s*/\s*\d+)*)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<open>\()
  | (?P<close>\))
  | (?P<comma>,)
  | (?P<space>\s+)
""", re.VERBOSE)


def tokenize(text):
    position = 0
    while position < len(text):
        match = _token_pattern.match(text, position)
        if match is None:
            raise ExpressionError("Unexpected character {!r} at position {} in {!r}".format(
                text[position], position, text))

        if match.lastgroup != "space":
            yield Token(match.lastgroup, match.group(), position)

        position = match.end()


class _Parser:

    def __init__(self, text):
        self.text = text
        self.tokens = list(tokenize(text))
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]

        return None

    def expect(self, kind):
        token = self.peek()
        if token is None or token.kind != kind:
            found = "end of input" if token is None else repr(token.text)
            raise ExpressionError("Expected {} but found {} in {!r}".format(kind, found, self.text))

        self.index += 1
        return token

    def parse(self):
        node = self.expression()
        if self.peek() is not None:
            raise ExpressionError("Trailing input {!r} in {!r}".format(self.peek().text, self.text))

        return node

    def expression(self):
        token = self.peek()
        if token is None:
            raise ExpressionError("Unexpected end of expression {!r}".format(self.text))

        if token.kind in ("interval", "stacked"):
            self.index += 1
            return IntervalLiteral(parse_interval(token.text))

        name = self.expect("name").text
        next_token = self.peek()
        if next_token is None or next_token.kind != "open":
            return Name(name)

        self.index += 1
        arguments = []
        if self.peek() is not None and self.peek().kind == "close":
            self.index += 1
            return Call(name, tuple(arguments))

        arguments.append(self.expression())
        while self.peek() is not None and self.peek().kind == "comma":
            self.index += 1
            arguments.append(self.expression())

        self.expect("close")
        return Call(name, tuple(arguments))


def parse_expression(text):
    if not isinstance(text, str):
        raise ExpressionError("Require a string expression, not {!r}".format(text))

    return _Parser(text).parse()


_nullary = {"all": everything, "proj": projectives, "inj": injectives, "zero": zero}
_unary = {"rperp": right_perp, "lperp": left_perp}


class Evaluator:
    """Evaluate named definitions against a category, resolving references between them"""

    def __init__(self, ctx, definitions):
        self.ctx = ctx
        self.definitions = dict(definitions)
        self.values = {}
        self._resolving = []

    def resolve(self, name):
        try:
            return self.values[name]

        except KeyError:
            pass

        if name not in self.definitions:
            raise ExpressionError("Unknown subcategory name {!r}".format(name))

        if name in self._resolving:
            cycle = " -> ".join(self._resolving[self._resolving.index(name):] + [name])
            raise ExpressionError("Cyclic subcategory definitions: {}".format(cycle))

        self._resolving.append(name)
        try:
            definition = self.definitions[name]
            if isinstance(definition, str):
                value = self.evaluate(parse_expression(definition))
                provenance = definition

            else:
                value = add(self.ctx, [self.ctx.check(parse_interval(item)) for item in definition])
                provenance = "literal"

        finally:
            self._resolving.pop()

        value = Subcategory(self.ctx, value.ids, name, provenance)
        self.values[name] = value
        logger.debug("Resolved %s to %s", name, value.to_list())
        return value

    def evaluate(self, node):
        if isinstance(node, IntervalLiteral):
            return add(self.ctx, [self.ctx.check(node.interval)])

        if isinstance(node, Name):
            if node.name in _nullary and node.name not in self.definitions:
                return _nullary[node.name](self.ctx)

            return self.resolve(node.name)

        function, arguments = node.function, node.arguments
        values = [self.evaluate(argument) for argument in arguments]

        if function in _nullary:
            self._check_arity(function, values, 0)
            return _nullary[function](self.ctx)

        if function in _unary:
            self._check_arity(function, values, 1)
            return _unary[function](values[0])

        if function == "inter":
            self._check_arity(function, values, 2)
            return values[0].intersection(values[1])

        if function in ("add", "oplus"):
            result = zero(self.ctx)
            for value in values:
                result = result.union(value)

            return result

        raise ExpressionError("Unknown function {!r}".format(function))

    @staticmethod
    def _check_arity(function, values, count):
        if len(values) != count:
            raise ExpressionError("{}() takes {} argument(s), got {}".format(function, count, len(values)))

    def evaluate_all(self):
        return {name: self.resolve(name) for name in self.definitions}


def define_subcategories(ctx, definitions):
    """Resolve a mapping of names to interval lists or expression strings"""
    return Evaluator(ctx, definitions).evaluate_all()


def referenced_names(text):
    return sorted(set(iter_names(parse_expression(text))))

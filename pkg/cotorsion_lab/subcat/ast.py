from collections import namedtuple


class Node:
    pass


class IntervalLiteral(Node, namedtuple("IntervalLiteral", "interval")):
    pass


class Name(Node, namedtuple("Name", "name")):
    pass


class Call(Node, namedtuple("Call", "function arguments")):
    pass


def iter_names(node):
    """Names referenced anywhere below node"""
    if isinstance(node, Name):
        yield node.name

    elif isinstance(node, Call):
        for argument in node.arguments:
            yield from iter_names(argument)

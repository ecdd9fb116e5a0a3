# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/text.py


"""Line-oriented text files held as node trees.

A parser turns numbered lines into nodes; an editor loads, edits,
renders and dumps the tree. Comment and blank lines are kept, so a
file that is only read renders back unchanged.

    Root:               Lines
    Lines:              (CommentLine | BlankLine | Line) ...
    Line(String):       <value>
"""


import io


class ParsingError(Exception):
    pass


class Node:
    """Base node."""

    def render(self):
        """Return the text form of the node."""

        raise NotImplementedError()


class StringNode(Node):
    """Leaf rendering its value as a string."""

    def __init__(self, value):
        self.value = value

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} value ({self.value!r})>"

    def render(self):
        return f"{self.value}"


class BlankLineNode(StringNode):
    def __init__(self):
        super().__init__("")


class CommentLineNode(StringNode):
    pass


class ContainerNode(Node):
    """Node with children, rendered joined by separator."""

    separator = " "

    def __init__(self, children=None):
        self.children = list(children) if children else []

    def add(self, node):
        self.children.append(node)

    def nodes_of(self, cls):
        """Return the children which are instances of cls."""

        return [node for node in self.children if isinstance(node, cls)]

    def render(self):
        return self.separator.join(node.render() for node in self.children)


class RecordNode(ContainerNode):
    """Whitespace separated fields."""

    pass


class LinesNode(ContainerNode):
    """One child per line; renders with a final newline."""

    separator = "\n"

    def render(self):
        text = super().render()
        return text + "\n" if self.children else text


class LineParser:
    """Base for a line parser.

    self.line holds the current stripped line (None at the end of
    input) and self.lineno its 1-based number. A parse_* method that
    consumes self.line calls next() before returning.
    """

    comment_prefix = "#"

    def __init__(self, f):
        if isinstance(f, str):
            f = io.StringIO(f)
        self.lines = enumerate(f, start=1)
        self.line = None
        self.lineno = 0
        self.next()

    def error(self, msg):
        """Return a ParsingError located at the current line."""

        return ParsingError(f"line ({self.lineno}): {msg}")

    def next(self):
        try:
            self.lineno, line = next(self.lines)
            self.line = line.strip()
        except StopIteration:
            self.line = None
        return self.line

    def new_root(self):
        return LinesNode()

    def parse(self):
        root = self.new_root()
        while self.line != None:
            if self.line.startswith(self.comment_prefix):
                root.add(CommentLineNode(self.line))
                self.next()
            elif self.line == "":
                root.add(BlankLineNode())
                self.next()
            else:
                root.add(self.parse_line())
        return root

    def parse_line(self):
        node = StringNode(self.line)
        self.next()
        return node


class LineEditor:
    """Load, render and dump a line-oriented file. Subclasses add
    accessors for their format.
    """

    DEFAULT_PARSER_CLASS = LineParser

    def __init__(self, parsercls=None):
        self.parsercls = parsercls or self.DEFAULT_PARSER_CLASS
        self.root = None

    def dump(self, path):
        """Write the rendered tree to path."""

        with open(path, "wt", encoding="utf-8") as f:
            f.write(self.render())

    def load(self, path):
        """Parse the UTF-8 file at path."""

        with open(path, "rt", encoding="utf-8") as f:
            try:
                self.root = self.parse(f)
            except UnicodeDecodeError as e:
                raise ParsingError(f"({path}) is not UTF-8 text: {e.reason}")

    def loads(self, text):
        """Parse text."""

        self.root = self.parse(text)

    def parse(self, f):
        return self.parsercls(f).parse()

    def render(self):
        return self.root.render()

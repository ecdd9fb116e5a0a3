# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/sites.py


"""Site set text files.

    # comment
    <kind> <d> <N_s> [<G>]
    <x_1> ... <x_d> [<t_s>]
    ...

kind is voronoi, johnson-mehl or laguerre; timed kinds carry G in the
header and a trailing birth time per record. A "spheres" header
describes Laguerre spheres with a trailing radius per record; their
optional G (default 1) maps radii to birth times t_s = -r_s^2 / G.
"""


import numpy as np

from ..geometry import GROWTH_KINDS, KIND_VORONOI, KINDS
from ..sites import LaguerreSpheres, SiteSet, spheres_to_timed_sites
from .text import CommentLineNode, LineEditor, LineParser, LinesNode, ParsingError, RecordNode, StringNode


SPHERES = "spheres"
HEADER_KINDS = KINDS + [SPHERES]
DEFAULT_SPHERES_GROWTH = 1.0

# simple class definitions
HeaderNode = type("HeaderNode", (RecordNode,), {})
RootNode = type("RootNode", (LinesNode,), {})
SiteRecordNode = type("SiteRecordNode", (RecordNode,), {})
ValueNode = type("ValueNode", (StringNode,), {})


class SiteFileParser(LineParser):
    """Site file parser.

    Root(Lines):        (CommentLine | BlankLine)* Header (CommentLine | BlankLine | SiteRecord)*
    Header:             Value Value Value [Value]
    SiteRecord:         Value+
    Value(String):      <value>
    """

    def __init__(self, f):
        self.header = None
        self.kind = None
        self.d = None
        self.n_sites = None
        super().__init__(f)

    def new_root(self):
        return RootNode()

    def parse(self):
        root = super().parse()
        if self.header == None:
            raise ParsingError("missing header line")
        n_records = len(root.nodes_of(SiteRecordNode))
        if n_records != self.n_sites:
            raise ParsingError(f"header announces ({self.n_sites}) sites, found ({n_records})")
        return root

    def parse_line(self):
        fields = self.line.split()
        if self.header == None:
            node = self.header = self._parse_header(fields)
        else:
            node = self._parse_record(fields)
        self.next()
        return node

    def _float(self, s):
        try:
            x = float(s)
        except ValueError:
            raise self.error(f"bad number ({s})")
        if not np.isfinite(x):
            raise self.error(f"non-finite number ({s})")
        return x

    def _int(self, s):
        try:
            return int(s)
        except ValueError:
            raise self.error(f"bad integer ({s})")

    def _parse_header(self, fields):
        if len(fields) not in (3, 4):
            raise self.error("header needs 'kind d N_s [G]'")
        kind = fields[0]
        if kind not in HEADER_KINDS:
            raise self.error(f"unknown kind ({kind})")
        d = self._int(fields[1])
        n_sites = self._int(fields[2])
        if d < 1 or n_sites < 1:
            raise self.error(f"d ({d}) and N_s ({n_sites}) must be positive")
        if kind in GROWTH_KINDS and len(fields) != 4:
            raise self.error(f"kind ({kind}) needs a growth rate")
        if len(fields) == 4 and not self._float(fields[3]) > 0:
            raise self.error(f"growth rate ({fields[3]}) must be positive")

        self.kind, self.d, self.n_sites = kind, d, n_sites
        return HeaderNode(ValueNode(field) for field in fields)

    def _parse_record(self, fields):
        width = self.d if self.kind == KIND_VORONOI else self.d + 1
        if len(fields) != width:
            raise self.error(f"expected ({width}) values, got ({len(fields)})")
        for field in fields:
            self._float(field)
        return SiteRecordNode(ValueNode(field) for field in fields)


class SiteFileEditor(LineEditor):
    """Site file editor."""

    DEFAULT_PARSER_CLASS = SiteFileParser

    def _header(self):
        headers = self.root.nodes_of(HeaderNode)
        if not headers:
            raise ParsingError("missing header line")
        return [child.value for child in headers[0].children]

    def _table(self):
        rows = [[float(child.value) for child in node.children] for node in self.root.nodes_of(SiteRecordNode)]
        return np.array(rows, dtype=np.float64)

    @property
    def kind(self):
        return self._header()[0]

    def get_sites(self):
        """Return the SiteSet described; spheres become timed Laguerre
        sites.
        """

        header = self._header()
        kind, d = header[0], int(header[1])
        table = self._table()
        if kind == SPHERES:
            growth = float(header[3]) if len(header) == 4 else DEFAULT_SPHERES_GROWTH
            return spheres_to_timed_sites(self.get_spheres(), growth)
        if kind == KIND_VORONOI:
            return SiteSet(kind, table[:, :d])
        return SiteSet(kind, table[:, :d], table[:, d], float(header[3]))

    def get_spheres(self):
        """Return LaguerreSpheres of a spheres file."""

        header = self._header()
        if header[0] != SPHERES:
            raise ParsingError(f"file holds ({header[0]}) sites, not spheres")
        d = int(header[1])
        table = self._table()
        return LaguerreSpheres(table[:, :d], table[:, d])

    def set_sites(self, sites, comments=None):
        """Replace contents with a SiteSet or LaguerreSpheres.

        Args:
            sites: SiteSet or LaguerreSpheres.
            comments: Optional lines written as # comments first.
        """

        root = RootNode()
        for comment in comments or []:
            root.add(CommentLineNode(f"# {comment}"))

        if isinstance(sites, LaguerreSpheres):
            fields = [SPHERES, sites.d, len(sites)]
            table = np.column_stack([sites.positions, sites.radii])
        elif sites.kind == KIND_VORONOI:
            fields = [sites.kind, sites.d, sites.n_sites]
            table = sites.positions
        else:
            fields = [sites.kind, sites.d, sites.n_sites, repr(sites.growth)]
            table = np.column_stack([sites.positions, sites.births])

        root.add(HeaderNode(children=[ValueNode(f"{field}") for field in fields]))
        for row in table:
            root.add(SiteRecordNode(children=[ValueNode(repr(float(x))) for x in row]))
        self.root = root


def read_site_file(path):
    """Return the SiteSet stored at path."""

    editor = SiteFileEditor()
    editor.load(path)
    return editor.get_sites()


def write_site_file(path, sites, comments=None):
    """Write a SiteSet or LaguerreSpheres to path."""

    editor = SiteFileEditor()
    editor.set_sites(sites, comments)
    editor.dump(path)

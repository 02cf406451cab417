"""Compact text descriptors for graphs.

Grammar, innermost first:

  base:   p<n>  c<n>  star<l>  k<n>  q<d>  theta122  grid<a>x<b>
          or anything else, read as a graph file path
  ^2:     optional suffix, take the square
  ~<v>:   optional suffix (repeatable), delete vertex v after everything else

Examples: ``p7``, ``c5``, ``q3``, ``grid2x3``, ``p8^2~7``, ``mygraph.txt^2``.
Descriptors make serialized certificates self-contained: whoever reads one
can rebuild the exact board and pebble graphs from the descriptor alone.
"""

from __future__ import annotations

import os
import re

from . import graphs as _g

_BUILTIN = re.compile(
    r"^(?:p(?P<p>\d+)|c(?P<c>\d+)|star(?P<star>\d+)|k(?P<k>\d+)"
    r"|q(?P<q>\d+)|theta122|grid(?P<ga>\d+)x(?P<gb>\d+))$"
)


def graph_from_desc(desc, allow_files=True):
    """Build the graph a descriptor names.  Raises ValueError on a
    malformed descriptor or an unreadable file."""
    desc = desc.strip()
    deletions = []
    while True:
        m = re.search(r"~(\d+)$", desc)
        if not m:
            break
        deletions.append(int(m.group(1)))
        desc = desc[: m.start()]
    take_square = desc.endswith("^2")
    if take_square:
        desc = desc[:-2]
    m = _BUILTIN.match(desc)
    if m:
        if m.group("p"):
            g = _g.path(int(m.group("p")))
        elif m.group("c"):
            g = _g.cycle(int(m.group("c")))
        elif m.group("star"):
            g = _g.star(int(m.group("star")))
        elif m.group("k"):
            g = _g.complete(int(m.group("k")))
        elif m.group("q"):
            g = _g.hypercube(int(m.group("q")))
        elif m.group("ga"):
            g, _ = _g.cartesian_product(
                _g.path(int(m.group("ga"))), _g.path(int(m.group("gb")))
            )
        else:
            g = _g.theta_122()
    elif allow_files:
        if not os.path.exists(desc):
            raise ValueError(
                f"{desc!r} is not a builtin graph name and no such file exists"
            )
        with open(desc) as fh:
            g = _g.parse_graph(fh.read())
    else:
        raise ValueError(f"unknown graph descriptor {desc!r}")
    if take_square:
        g = _g.square(g)
    for v in reversed(deletions):
        if not g.has_vertex(v):
            raise ValueError(f"descriptor deletes missing vertex {v}")
        g = g.induced(set(g.vertices) - {v})
    return g

"""Document-level parsing: a file holds named digraph and cover/configuration
blocks; covers reference digraphs defined earlier in the same document."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import Configuration, config_from_cover_block
from .cover import Cover, parse_cover_block
from .digraph import Digraph, parse_digraph_block
from .errors import FormatError


@dataclass
class Document:
    digraphs: dict[str, Digraph] = field(default_factory=dict)
    covers: dict[str, Cover] = field(default_factory=dict)
    configs: dict[str, Configuration] = field(default_factory=dict)

    def sole_config(self) -> Configuration:
        if len(self.configs) != 1:
            raise FormatError(f"expected exactly one configuration, found {len(self.configs)}")
        return next(iter(self.configs.values()))

    def sole_digraph(self) -> Digraph:
        if len(self.digraphs) != 1:
            raise FormatError(f"expected exactly one digraph, found {len(self.digraphs)}")
        return next(iter(self.digraphs.values()))


def parse_document(text: str) -> Document:
    doc = Document()
    lines = []
    for raw in text.splitlines():
        ln = raw.split("#", 1)[0].strip()
        if ln:
            lines.append(ln)
    i = 0
    while i < len(lines):
        head = lines[i].split()[0]
        j = i
        while j < len(lines) and lines[j] != "end":
            j += 1
        if j == len(lines):
            raise FormatError(f"block starting at {lines[i]!r} has no 'end'")
        block = lines[i:j + 1]
        if head == "digraph":
            name, d = parse_digraph_block(block)
            if name in doc.digraphs:
                raise FormatError(f"duplicate digraph {name!r}")
            doc.digraphs[name] = d
        elif head == "cover":
            name, cov, f_lines = parse_cover_block(block, doc.digraphs)
            if name in doc.covers or name in doc.configs:
                raise FormatError(f"duplicate cover {name!r}")
            if f_lines:
                doc.configs[name] = config_from_cover_block(cov, f_lines)
            else:
                doc.covers[name] = cov
        else:
            raise FormatError(f"unknown block keyword {head!r}")
        i = j + 1
    return doc


def load_document(path: str) -> Document:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())

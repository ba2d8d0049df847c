"""digraph6 and edge-list text formats."""

from __future__ import annotations

from .core import Digraph, build

D6_MAX_ORDER = 62


def encode_digraph6(G: Digraph) -> str:
    """'&', chr(p + 63), then the full p x p matrix in 6-bit groups, each + 63."""
    p = G.order
    if p > D6_MAX_ORDER:
        raise ValueError(f"digraph6 encoding supports order <= {D6_MAX_ORDER}, got {p}")
    flags = [1 if G.has_arc(u, v) else 0 for u in range(p) for v in range(p)]
    flags += [0] * (-len(flags) % 6)
    chars = ["&", chr(p + 63)]
    for i in range(0, len(flags), 6):
        group = 0
        for b in flags[i : i + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return "".join(chars)


def decode_digraph6(text: str) -> Digraph:
    s = text.strip()
    if not s.startswith("&"):
        raise ValueError("digraph6 text must start with '&'")
    if len(s) < 2:
        raise ValueError("digraph6 text is missing the order")
    p = ord(s[1]) - 63
    if not 0 <= p <= D6_MAX_ORDER:
        raise ValueError(f"digraph6 order character {s[1]!r} is out of range")
    if p == 0:
        raise ValueError("digraphs need at least one vertex")
    nbits = p * p
    body = s[2:]
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"digraph6 body for order {p} needs {(nbits + 5) // 6} characters, got {len(body)}")
    flags: list[int] = []
    for ch in body:
        g = ord(ch) - 63
        if not 0 <= g < 64:
            raise ValueError(f"invalid digraph6 character {ch!r}")
        flags.extend(g >> (5 - j) & 1 for j in range(6))
    if any(flags[nbits:]):
        raise ValueError("digraph6 padding bits must be zero")
    arcs = []
    for u in range(p):
        for v in range(p):
            if flags[u * p + v]:
                if u == v:
                    raise ValueError(f"digraph6 text has a loop at vertex {u}")
                arcs.append((u, v))
    return build(p, arcs)


def encode_edges(G: Digraph) -> str:
    lines = [f"p {G.order}"] + [f"{u} {v}" for u, v in sorted(G.arcs())]
    return "\n".join(lines) + "\n"


def decode_edges(text: str) -> Digraph:
    order = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "p":
                raise ValueError(f"line {lineno}: expected 'p <order>' header")
            order = _int(parts[1], lineno)
            if order < 1:
                raise ValueError(f"line {lineno}: order must be positive")
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        arcs.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    if order is None:
        raise ValueError("edge list has no 'p <order>' header")
    try:
        return build(order, arcs)
    except ValueError as e:
        raise ValueError(f"edge list: {e}") from None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"line {lineno}: {tok!r} is not an integer") from None


def read_digraph(text: str) -> Digraph:
    """Decode either format; digraph6 is recognized by its leading '&'."""
    s = text.strip()
    if not s:
        raise ValueError("empty input")
    if s.startswith("&"):
        if "\n" in s:
            raise ValueError("expected a single digraph6 line")
        return decode_digraph6(s)
    return decode_edges(text)


def write_digraph(G: Digraph, fmt: str = "d6") -> str:
    if fmt == "d6":
        return encode_digraph6(G) + "\n"
    if fmt == "edges":
        return encode_edges(G)
    raise ValueError(f"unknown format {fmt!r}")

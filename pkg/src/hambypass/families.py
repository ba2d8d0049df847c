"""Named digraph families: generators, recognizers and the Phi^m_p test.

Canonical labelings produced by :func:`generate`:

* ``Dpk(p,k)``: K*_{p-k} on 0..p-k-1 and K*_{k+1} on p-k-1..p-1, sharing p-k-1.
* ``D0(p,B)``: independent A = 0..(p-1)/2, B on the remaining (p-1)/2 vertices
  carrying the given B-subdigraph, and every arc between A and B.
* ``T5``: z1..z4 = 0..3 and y = 4.
* ``CompleteBipartite(a,b)``: parts 0..a-1 and a..a+b-1.
* ``CompleteBipartiteMinusArc(a)``: K*_{a,a} without the arc a->0.
* ``BypassPattern(p,n)``: x_1..x_n = 0..n-1, y_1..y_{p-n} = n..p-1.
* ``CycleC(p)``: 0->1->...->p-1->0.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass, field

from .conditions import meyniel_deficiency
from .core import CANONICAL_MAX_ORDER, Digraph, bits, build, complete, find_isomorphism, induced, relabel
from .search import cycle_spectrum

T5_ARCS = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4), (4, 1), (4, 3), (0, 2), (1, 3)]


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()
    b_digraph: Digraph | None = field(default=None, compare=True)

    def __str__(self):
        names = {
            "dpk": "Dpk",
            "t5": "T5",
            "c3": "C3",
            "kstar": "CompleteK",
            "kbip": "CompleteBipartite",
            "kbipminus": "CompleteBipartiteMinusArc",
            "bypass": "BypassPattern",
            "cycle": "CycleC",
            "phi": "Phi",
        }
        if self.tag == "d0":
            return f"D0({self.params[0]},{encode_b_bits(self.b_digraph, self.params[0])})"
        name = names[self.tag]
        if not self.params:
            return name
        return f"{name}({','.join(map(str, self.params))})"

    def text(self) -> str:
        """The CLI spelling of this spec."""
        if self.tag == "d0":
            return f"d0:{self.params[0]}:{encode_b_bits(self.b_digraph, self.params[0])}"
        if not self.params:
            return self.tag
        return f"{self.tag}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class FamilyLabel:
    """A family match; ``mapping[v]`` is the family-labeling image of input vertex v."""

    spec: FamilySpec
    mapping: tuple[int, ...]

    def __str__(self):
        return str(self.spec)


# ---------------------------------------------------------------------------
# B-subdigraph encoding for D0 specs


def encode_b_bits(B: Digraph | None, p: int) -> str:
    b = (p - 1) // 2
    if B is None or b <= 1:
        flags = [0] * (b * (b - 1))
    else:
        flags = [1 if B.has_arc(u, v) else 0 for u in range(b) for v in range(b) if u != v]
    if not flags:
        return ""
    padded = flags + [0] * (-len(flags) % 8)
    raw = bytes(int("".join(map(str, padded[i : i + 8])), 2) for i in range(0, len(padded), 8))
    return base64.b64encode(raw).decode("ascii")


def decode_b_bits(text: str, p: int) -> Digraph:
    b = (p - 1) // 2
    nbits = b * (b - 1)
    raw = base64.b64decode(text.encode("ascii"), validate=True) if text else b""
    if len(raw) != (nbits + 7) // 8:
        raise ValueError(f"B-bits for order {p} need {nbits} bits")
    flags = "".join(format(x, "08b") for x in raw)
    if "1" in flags[nbits:]:
        raise ValueError("nonzero padding in B-bits")
    arcs = []
    it = iter(flags[:nbits])
    for u in range(b):
        for v in range(b):
            if u != v and next(it) == "1":
                arcs.append((u, v))
    return build(max(b, 1), arcs)


# ---------------------------------------------------------------------------
# generators


def dpk(p: int, k: int) -> FamilySpec:
    return FamilySpec("dpk", (p, k))


def d0(p: int, B: Digraph | None = None) -> FamilySpec:
    b = (p - 1) // 2
    if B is None and b >= 1:
        B = build(b, [])
    return FamilySpec("d0", (p,), B)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def generate(spec: FamilySpec) -> Digraph:
    tag, prm = spec.tag, spec.params
    if tag == "dpk":
        p, k = prm
        _need(p >= 3, "Dpk needs p >= 3")
        _need(1 <= k <= p - 2, f"Dpk needs 1 <= k <= p-2 = {p - 2}")
        shared = p - k - 1
        first = range(0, shared + 1)
        second = range(shared, p)
        arcs = [(u, v) for u in first for v in first if u != v]
        arcs += [(u, v) for u in second for v in second if u != v]
        return build(p, arcs)
    if tag == "d0":
        (p,) = prm
        _need(p >= 3 and p % 2 == 1, "D0 needs odd p >= 3")
        a, b = (p + 1) // 2, (p - 1) // 2
        B = spec.b_digraph
        _need(B is not None and B.order == b, f"D0 needs a B-subdigraph of order {b}")
        arcs = [(u, v) for u in range(a) for v in range(a, p)]
        arcs += [(v, u) for u, v in arcs]
        arcs += [(a + u, a + v) for u, v in B.arcs()]
        return build(p, arcs)
    if tag == "t5":
        return build(5, T5_ARCS)
    if tag == "c3":
        return build(3, [(0, 1), (1, 2), (2, 0)])
    if tag == "cycle":
        (p,) = prm
        _need(p >= 2, "CycleC needs p >= 2")
        return build(p, [(i, (i + 1) % p) for i in range(p)])
    if tag == "kstar":
        (p,) = prm
        _need(p >= 1, "CompleteK needs p >= 1")
        return complete(p)
    if tag in ("kbip", "kbipminus"):
        if tag == "kbip":
            a, b = prm
        else:
            (a,) = prm
            b = a
        _need(a >= 1 and b >= 1, "CompleteBipartite needs both parts nonempty")
        arcs = [(u, v) for u in range(a) for v in range(a, a + b)]
        arcs += [(v, u) for u, v in arcs]
        if tag == "kbipminus":
            arcs.remove((a, 0))
        return build(a + b, arcs)
    if tag == "bypass":
        p, n = prm
        _need(n >= 2, "BypassPattern needs n >= 2")
        _need(n <= p - 1, f"BypassPattern needs n <= p-1 = {p - 1}")
        xs = list(range(n))
        ys = list(range(n, p))
        arcs = list(zip(xs, xs[1:])) + list(zip(ys, ys[1:]))
        arcs += [(xs[0], ys[0]), (ys[-1], xs[-1])]
        return build(p, arcs)
    if tag == "phi":
        raise ValueError("Phi^m_p is a family tested by membership; it has no single generator")
    raise ValueError(f"unknown family tag {tag!r}")


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI spelling: dpk:p,k d0:p:<b64> t5 c3 kstar:p kbip:a,b kbipminus:a bypass:p,n cycle:p."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.lower()

    def ints(s: str, count: int) -> tuple[int, ...]:
        try:
            vals = tuple(int(x) for x in s.split(","))
        except ValueError:
            raise ValueError(f"bad parameters in family spec {text!r}") from None
        if len(vals) != count:
            raise ValueError(f"family spec {text!r} needs {count} parameter(s)")
        return vals

    if head in ("t5", "c3"):
        if rest:
            raise ValueError(f"{head} takes no parameters")
        spec = FamilySpec(head)
    elif head == "d0":
        ptxt, sep, btxt = rest.partition(":")
        (p,) = ints(ptxt, 1)
        _need(p >= 3 and p % 2 == 1, "D0 needs odd p >= 3")
        # without a B-bits part, B has no arcs
        spec = d0(p, decode_b_bits(btxt, p) if sep else None)
    elif head in ("dpk", "kbip", "bypass"):
        spec = FamilySpec(head, ints(rest, 2))
    elif head in ("kstar", "cycle", "kbipminus"):
        spec = FamilySpec(head, ints(rest, 1))
    else:
        raise ValueError(f"unknown family {head!r}")
    generate(spec)  # validates parameters
    return spec


# ---------------------------------------------------------------------------
# recognizers


def _check_bound(G: Digraph) -> None:
    if G.order > CANONICAL_MAX_ORDER:
        raise ValueError(f"recognition supports order <= {CANONICAL_MAX_ORDER}, got {G.order}")


def _verified(G: Digraph, spec: FamilySpec, mapping: list[int]) -> FamilyLabel | None:
    if relabel(G, mapping) != generate(spec):
        return None
    return FamilyLabel(spec, tuple(mapping))


def recognize_as(G: Digraph, spec: FamilySpec) -> FamilyLabel | None:
    """Match G against the single digraph generated by ``spec``."""
    target = generate(spec)
    m = find_isomorphism(G, target)
    return None if m is None else FamilyLabel(spec, tuple(m))


def recognize_dpk(G: Digraph) -> FamilyLabel | None:
    p = G.order
    if p < 3:
        return None
    full = G.all_vertices
    for c in range(p):
        others = full & ~(1 << c)
        if G.out[c] != others or G.inn[c] != others:
            continue
        blocks = []
        left = others
        while left:
            v = (left & -left).bit_length() - 1
            block = (G.out[v] & G.inn[v] & others) | (1 << v)
            blocks.append(block)
            left &= ~block
        if len(blocks) != 2:
            continue
        big, small = sorted(blocks, key=lambda b: (-len(bits(b)), b))
        k = len(bits(small))
        mapping = [0] * p
        for i, v in enumerate(bits(big)):
            mapping[v] = i
        mapping[c] = p - k - 1
        for i, v in enumerate(bits(small)):
            mapping[v] = p - k + i
        label = _verified(G, dpk(p, k), mapping)
        if label is not None:
            return label
    return None


def recognize_d0(G: Digraph) -> FamilyLabel | None:
    """Match any member of D0: independent A of size (p+1)/2 fully joined both ways to B."""
    p = G.order
    if p < 3 or p % 2 == 0:
        return None
    half = (p - 1) // 2
    full = G.all_vertices
    for a in range(p):
        B = G.out[a]
        if B != G.inn[a] or len(bits(B)) != half:
            continue
        A = full & ~B
        if any((G.out[u] | G.inn[u]) & A for u in bits(A)):
            continue
        if any(G.out[u] & B != B or G.inn[u] & B != B for u in bits(A)):
            continue
        mapping = [0] * p
        for i, v in enumerate(bits(A) + bits(B)):
            mapping[v] = i
        return _verified(G, d0(p, induced(G, B)), mapping)
    return None


def recognize_exception(G: Digraph) -> FamilyLabel | None:
    """First match among C3, T5, Dpk, D0 (in that order), or None."""
    _check_bound(G)
    if G.order == 3:
        label = recognize_as(G, FamilySpec("c3"))
        if label:
            return label
    if G.order == 5:
        label = recognize_as(G, FamilySpec("t5"))
        if label:
            return label
    return recognize_dpk(G) or recognize_d0(G)


def _phi_range(p: int) -> range:
    return range((p + 1) // 2 + 1, p)  # integers m with (p+1)/2 < m <= p-1


def is_phi_member(G: Digraph, m: int) -> list[int] | None:
    """A labeling x_1..x_p (as a vertex list) witnessing G in Phi^m_p, or None.

    Backward arcs x_j -> x_i with j >= i+2 are forbidden; x_{i+1} -> x_i and
    x_1 -> x_p are required; x_i and x_{i+m-1} must be non-adjacent. The arc
    x_1 -> x_p runs forward and is therefore untouched by the backward-arc ban.
    """
    p = G.order
    if p < 4:
        raise ValueError("Phi^m_p needs p >= 4")
    if m not in _phi_range(p):
        raise ValueError(f"m must satisfy (p+1)/2 < m <= p-1, got m={m} for p={p}")
    _check_bound(G)
    if meyniel_deficiency(G) < 1:
        return None
    lab = [0] * (p + 1)  # lab[i] = x_i, 1-based

    def ok(i: int) -> bool:
        xi = lab[i]
        for j in range(i + 1, p + 1):
            xj = lab[j]
            if j >= i + 2 and G.has_arc(xj, xi):
                return False
            if j == i + m - 1 and (G.has_arc(xi, xj) or G.has_arc(xj, xi)):
                return False
        return True

    def rec(i: int, used: int) -> bool:
        # place x_i; x_{i+1} -> x_i must be an arc
        if i == 0:
            return G.has_arc(lab[1], lab[p])
        for v in bits(G.out[lab[i + 1]] & ~used):
            lab[i] = v
            if ok(i) and rec(i - 1, used | (1 << v)):
                return True
        return False

    for start in range(p):
        lab[p] = start
        if rec(p - 1, 1 << start):
            return lab[1:]
    return None


def phi_label(G: Digraph) -> FamilyLabel | None:
    p = G.order
    if p < 4:
        return None
    for m in _phi_range(p):
        labeling = is_phi_member(G, m)
        if labeling is not None:
            mapping = [0] * p
            for i, v in enumerate(labeling):
                mapping[v] = i
            return FamilyLabel(FamilySpec("phi", (p, m)), tuple(mapping))
    return None


def phi_spectrum_check(G: Digraph, m: int) -> bool:
    if is_phi_member(G, m) is None:
        raise ValueError("digraph is not a member of Phi^m_p")
    return cycle_spectrum(G) == set(range(2, G.order + 1)) - {m}


def recognize_all(G: Digraph) -> list[FamilyLabel]:
    """Every family label that applies to G (exceptions first)."""
    _check_bound(G)
    p = G.order
    found: list[FamilyLabel] = []
    exc = recognize_exception(G)
    if exc:
        found.append(exc)
    if exc is None or exc.spec.tag != "d0":
        lab = recognize_d0(G)
        if lab:
            found.append(lab)
    candidates = [FamilySpec("kstar", (p,))]
    if p >= 2:
        candidates.append(FamilySpec("cycle", (p,)))
    candidates += [FamilySpec("kbip", (a, p - a)) for a in range(1, p // 2 + 1)]
    if p % 2 == 0 and p >= 2:
        candidates.append(FamilySpec("kbipminus", (p // 2,)))
    for spec in candidates:
        if p == 3 and spec.tag == "cycle" and exc and exc.spec.tag == "c3":
            continue
        lab = recognize_as(G, spec)
        if lab:
            found.append(lab)
    lab = phi_label(G)
    if lab:
        found.append(lab)
    return found

"""
Plain-text formats for matrices, Lagrangian subspaces, set systems and
ribbon graphs.

Labels made only of digits are read as ints, everything else as strings.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from typing import Hashable

from .deltamatroid import SetSystem
from .gf2 import BitMatrix
from .ribbon import Edge, RibbonGraph
from .symplectic import GroundSet, LagrangianSubspace, make_lagrangian


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def parse_label(tok: str) -> Hashable:
    return int(tok) if tok.isdigit() else tok


def _label_order(label):
    return (0, label, "") if isinstance(label, int) else (1, 0, label)


def _lines(text: str):
    """``(line_number, stripped)`` for non-comment lines, blanks included."""
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s.startswith("#"):
            yield k, s


# -- matrices ---------------------------------------------------------------


def parse_matrix(text: str) -> BitMatrix:
    """``rows cols`` header, then one line of 0/1 characters per row."""
    lines = [(k, s) for k, s in _lines(text) if s]
    if not lines:
        raise FormatError("empty matrix file", 1)
    k0, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError("expected header 'rows cols'", k0)
    nr, nc = map(int, parts)
    body = lines[1:]
    if len(body) != nr:
        raise FormatError(f"expected {nr} rows, found {len(body)}", body[-1][0] if body else k0)
    entries = []
    for k, s in body:
        if len(s) != nc or set(s) - {"0", "1"}:
            raise FormatError(f"row must be {nc} characters of 0/1", k)
        entries.append([int(c) for c in s])
    return BitMatrix.from_lists(entries, ncols=nc)


def format_matrix(m: BitMatrix) -> str:
    body = "".join("".join(map(str, row)) + "\n" for row in m.to_lists())
    return f"{m.nrows} {m.ncols}\n{body}"


# -- Lagrangian subspaces -----------------------------------------------------


def format_vector(ground: GroundSet, v: int) -> str:
    n = len(ground)
    toks = [str(lab) for i, lab in enumerate(ground.labels) if (v >> i) & 1]
    toks += [f"{lab}^" for i, lab in enumerate(ground.labels) if (v >> (n + i)) & 1]
    return "+".join(toks) or "0"


def _parse_tokens(s: str, k: int) -> list[tuple[Hashable, bool]]:
    out = []
    for tok in s.split("+"):
        tok = tok.strip()
        if not tok:
            raise FormatError("empty token in vector", k)
        is_dual = tok.endswith("^")
        name = tok[:-1] if is_dual else tok
        if not name or "^" in name or " " in name:
            raise FormatError(f"bad token {tok!r}", k)
        out.append((parse_label(name), is_dual))
    return out


def parse_lagrangian(text: str) -> LagrangianSubspace:
    """One basis vector per line, e.g. ``1^+2+2^``.

    The ground set is every label that occurs, ints before strings, unless a
    ``ground: a b c`` line fixes the order.
    """
    ground = None
    vectors = []
    for k, s in _lines(text):
        if not s:
            continue
        if s.startswith("ground:"):
            if ground is not None or vectors:
                raise FormatError("'ground:' must come first", k)
            ground = GroundSet(parse_label(t) for t in s[len("ground:") :].split())
            continue
        vectors.append((k, _parse_tokens(s, k)))
    if ground is None:
        labels = {lab for _, toks in vectors for lab, _ in toks}
        ground = GroundSet(sorted(labels, key=_label_order))
    n = len(ground)
    rows = []
    for k, toks in vectors:
        v = 0
        for lab, is_dual in toks:
            if lab not in ground:
                raise FormatError(f"label {lab!r} not in ground set", k)
            v ^= 1 << (ground.index(lab) + (n if is_dual else 0))
        rows.append(v)
    try:
        return make_lagrangian(ground, rows)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_lagrangian(l: LagrangianSubspace) -> str:
    out = []
    if list(l.ground.labels) != sorted(l.ground.labels, key=_label_order):
        out.append("ground: " + " ".join(map(str, l.ground.labels)))
    out += [format_vector(l.ground, v) for v in l.basis]
    return "".join(line + "\n" for line in out)


def format_lagrangian_inline(l: LagrangianSubspace) -> str:
    return " ".join(format_vector(l.ground, v) for v in l.basis) or "0"


# -- set systems ----------------------------------------------------------------


def parse_setsystem(text: str) -> SetSystem:
    """Ground labels on line 1; one feasible set per line, ``-`` for the empty set."""
    lines = list(_lines(text))
    if not lines:
        raise FormatError("missing ground-set line", 1)
    k0, head = lines[0]
    ground = GroundSet(parse_label(t) for t in head.split())
    masks = []
    for k, s in lines[1:]:
        if not s:
            continue
        if s == "-":
            masks.append(0)
            continue
        m = 0
        for tok in s.split(","):
            tok = tok.strip()
            lab = parse_label(tok)
            if not tok or lab not in ground:
                raise FormatError(f"unknown element {tok!r}", k)
            m |= 1 << ground.index(lab)
        masks.append(m)
    return SetSystem(ground, tuple(masks))


def format_set(ground: GroundSet, mask: int, empty: str = "-") -> str:
    labs = [str(ground.labels[i]) for i in range(len(ground)) if (mask >> i) & 1]
    return ",".join(labs) if labs else empty


def format_setsystem(s: SetSystem) -> str:
    out = [" ".join(map(str, s.ground.labels))]
    out += [format_set(s.ground, f) for f in _display_order(s)]
    return "".join(line + "\n" for line in out)


def _display_order(s: SetSystem):
    return sorted(s.feasible, key=lambda f: (bin(f).count("1"), [i for i in range(s.n) if (f >> i) & 1]))


def format_family(s: SetSystem) -> str:
    """Compact one-line family, e.g. ``{1} {2} {1,2}``."""
    return " ".join("{" + format_set(s.ground, f, "") + "}" for f in _display_order(s))


# -- ribbon graphs ----------------------------------------------------------------


def parse_ribbon(text: str) -> RibbonGraph:
    """``vertices edges``; a rotation line per vertex (``-`` if empty); ``label a b twist`` per edge."""
    lines = [(k, s) for k, s in _lines(text) if s]
    if not lines:
        raise FormatError("empty ribbon graph file", 1)
    k0, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError("expected header 'vertices edges'", k0)
    nv, ne = map(int, parts)
    if len(lines) != 1 + nv + ne:
        raise FormatError(f"expected {nv} vertex lines and {ne} edge lines", lines[-1][0])
    rotations = []
    for k, s in lines[1 : 1 + nv]:
        if s == "-":
            rotations.append([])
            continue
        if not all(t.isdigit() for t in s.split()):
            raise FormatError("rotation must list half-edge ids", k)
        rotations.append([int(t) for t in s.split()])
    edges = []
    for k, s in lines[1 + nv :]:
        parts = s.split()
        if len(parts) != 4 or not all(p.isdigit() for p in parts[1:]) or parts[3] not in ("0", "1"):
            raise FormatError("edge line must be 'label halfedge halfedge twist'", k)
        edges.append(Edge(parse_label(parts[0]), int(parts[1]), int(parts[2]), int(parts[3])))
    try:
        return RibbonGraph(rotations, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_ribbon(g: RibbonGraph) -> str:
    out = [f"{g.num_vertices} {g.num_edges}"]
    out += [" ".join(map(str, r)) if r else "-" for r in g.rotations]
    out += [f"{e.label} {e.a} {e.b} {e.twisted}" for e in g.edges]
    return "".join(line + "\n" for line in out)

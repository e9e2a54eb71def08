"""Text format for algebras, pairings and gradings.

An algebra file is line oriented; '#' starts a comment.  Layout:

    group free=<r> torsion=<m1,m2,...>
    scalars N=<cyclotomic order>          # optional
    epsilon                               # optional section
    pair g<i> g<j> = <scalar literal>
    algebra                               # header optional
    dim <n>
    deg e<i> = (c1,...,ck)
    bracket e<i> e<j> = <scalar>*e<k> [+ ...]
    grading                               # optional section
    group free=<r'> torsion=...           # grading group; defaults to the
    gdeg e<i> = (c1,...,ck)               # algebra's group

Omitted brackets are zero; an omitted epsilon section means the trivial
commutation factor.  Unspecified pairing values default to 1 and no
symmetric completion is implied: commutation factors must list both (i,j)
and (j,i) when they are not 1.

Sigma files reuse the same syntax with a `sigma` section of pair lines.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .abgroup import GroupElement, GroupSpec
from .color import ColorAlgebra
from .cyclo import CycloScalar, format_scalar, parse_scalar
from .errors import ParseError, ValidationError
from .gradings import Grading
from .pairings import Bicharacter, Cocycle, CommutationFactor

_GROUP_RE = re.compile(r"group\s+free=(\d+)\s+torsion=([\d,\s]*)$")
_BASIS_RE = re.compile(r"\be(\d+)\b")


@dataclass
class AlgebraFile:
    algebra: ColorAlgebra
    grading: Grading | None


def default_order(group: GroupSpec) -> int:
    """2 * lcm of the invariant factors; guarantees -1 and all torsion
    values exist in Q(zeta_N)."""
    l = 1
    for m in group.invariant_factors:
        l = math.lcm(l, m)
    return 2 * l


def _parse_group_line(line: str, lineno: int) -> GroupSpec:
    m = _GROUP_RE.match(line.strip())
    if not m:
        raise ParseError(f"malformed group line: {line.strip()!r}", lineno)
    free = int(m.group(1))
    torsion = tuple(int(t) for t in m.group(2).replace(" ", "").split(",") if t)
    return GroupSpec(free, torsion)


def _parse_element(text: str, group: GroupSpec, lineno: int) -> GroupElement:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"expected (c1,...,ck), got {text!r}", lineno)
    inner = text[1:-1].strip()
    coords = [int(c) for c in inner.split(",")] if inner else []
    if len(coords) != group.ngens:
        raise ParseError(
            f"element has {len(coords)} coordinates, group needs {group.ngens}",
            lineno)
    return group.element(coords)


def parse_combo(text: str, dim: int, order: int, lineno: int = 0) -> dict:
    """Parse `<scalar>*e<k> [+ ...]`; bare e<k> means coefficient 1."""
    combo: dict = {}
    pos = 0
    matches = list(_BASIS_RE.finditer(text))
    if not matches:
        raise ParseError(f"no basis element in {text!r}", lineno)
    for m in matches:
        chunk = text[pos:m.start()].strip()
        pos = m.end()
        if chunk.endswith("*"):
            chunk = chunk[:-1].strip()
        if chunk in ("", "+"):
            coeff = CycloScalar.one(order)
        elif chunk == "-":
            coeff = -CycloScalar.one(order)
        else:
            try:
                coeff = parse_scalar(chunk, order)
            except ParseError as exc:
                raise ParseError(f"bad coefficient {chunk!r}: {exc}", lineno)
        k = int(m.group(1))
        if not 1 <= k <= dim:
            raise ParseError(f"basis index e{k} out of range 1..{dim}", lineno)
        key = k - 1
        combo[key] = combo.get(key, CycloScalar.zero(order)) + coeff
    if text[pos:].strip():
        raise ParseError(f"trailing junk {text[pos:].strip()!r}", lineno)
    return {k: c for k, c in combo.items() if c}


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_algebra_file(text: str) -> AlgebraFile:
    group = None
    order = None
    eps_pairs: dict = {}
    dim = None
    degrees: dict = {}
    brackets: dict = {}
    grading_group = None
    gdegrees: dict = {}
    section = "algebra"
    saw_grading = False

    for lineno, line in _meaningful_lines(text):
        word = line.split()[0]
        if word == "group":
            g = _parse_group_line(line, lineno)
            if section == "grading":
                grading_group = g
            elif group is None:
                group = g
            else:
                raise ParseError("duplicate group line", lineno)
        elif word == "scalars":
            m = re.match(r"scalars\s+N=(\d+)$", line)
            if not m:
                raise ParseError(f"malformed scalars line: {line!r}", lineno)
            order = int(m.group(1))
        elif line in ("epsilon", "algebra", "grading"):
            section = line
            if line == "grading":
                saw_grading = True
        elif word == "pair":
            if section != "epsilon":
                raise ParseError("pair line outside an epsilon section", lineno)
            m = re.match(r"pair\s+g(\d+)\s+g(\d+)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"malformed pair line: {line!r}", lineno)
            eps_pairs[(int(m.group(1)), int(m.group(2)))] = (m.group(3), lineno)
        elif word == "dim":
            m = re.match(r"dim\s+(\d+)$", line)
            if not m:
                raise ParseError(f"malformed dim line: {line!r}", lineno)
            dim = int(m.group(1))
        elif word == "deg":
            m = re.match(r"deg\s+e(\d+)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"malformed deg line: {line!r}", lineno)
            degrees[int(m.group(1))] = (m.group(2), lineno)
        elif word == "bracket":
            m = re.match(r"bracket\s+e(\d+)\s+e(\d+)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"malformed bracket line: {line!r}", lineno)
            brackets[(int(m.group(1)), int(m.group(2)))] = (m.group(3), lineno)
        elif word == "gdeg":
            if section != "grading":
                raise ParseError("gdeg line outside a grading section", lineno)
            m = re.match(r"gdeg\s+e(\d+)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"malformed gdeg line: {line!r}", lineno)
            gdegrees[int(m.group(1))] = (m.group(2), lineno)
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)

    if group is None:
        raise ParseError("missing group line")
    if dim is None:
        raise ParseError("missing dim line")
    if order is None:
        order = default_order(group)
    _check_order(group, order)

    deg_list = []
    for i in range(1, dim + 1):
        if i not in degrees:
            if group.ngens == 0:
                deg_list.append(group.zero())
                continue
            raise ParseError(f"missing degree for e{i}")
        text_i, lineno = degrees[i]
        deg_list.append(_parse_element(text_i, group, lineno))
    for i in degrees:
        if not 1 <= i <= dim:
            raise ParseError(f"degree given for e{i} outside dim {dim}",
                             degrees[i][1])

    epsilon = _build_pairing(CommutationFactor, group, order, eps_pairs)

    table = {}
    for (i, j), (rhs, lineno) in brackets.items():
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"bracket index e{i}/e{j} out of range 1..{dim}",
                             lineno)
        table[(i - 1, j - 1)] = parse_combo(rhs, dim, order, lineno)

    try:
        algebra = ColorAlgebra(group, order, dim, deg_list, table, epsilon)
    except ValidationError as exc:
        raise ParseError(str(exc))

    grading = None
    if saw_grading or gdegrees:
        ggroup = grading_group or group
        glist = []
        for i in range(1, dim + 1):
            if i not in gdegrees:
                raise ParseError(f"missing grading degree for e{i}")
            text_i, lineno = gdegrees[i]
            glist.append(_parse_element(text_i, ggroup, lineno))
        grading = Grading(algebra, ggroup, tuple(glist))
    return AlgebraFile(algebra, grading)


def _check_order(group: GroupSpec, order: int):
    if order < 1:
        raise ParseError("cyclotomic order must be positive")
    if group.invariant_factors:
        need = default_order(group)
        if order % need:
            raise ParseError(
                f"cyclotomic order {order} must be divisible by {need} "
                "(= 2 * lcm of the invariant factors)")
    elif order % 2:
        raise ParseError(f"cyclotomic order {order} must be even (so -1 exists)")


def _build_pairing(cls, group: GroupSpec, order: int, pairs: dict):
    entries = {}
    for (i, j), (text, lineno) in pairs.items():
        if not (1 <= i <= group.ngens and 1 <= j <= group.ngens):
            raise ParseError(
                f"pair index g{i}/g{j} out of range 1..{group.ngens}", lineno)
        entries[(i - 1, j - 1)] = parse_scalar(text, order)
    try:
        base = Bicharacter.from_values(group, order, entries)
        return cls(group, order, base.values)
    except ValidationError as exc:
        raise ParseError(str(exc))


def parse_pairing_file(text: str, group: GroupSpec, order: int) -> Cocycle:
    """A sigma file: optional group/scalars lines (validated against the
    algebra's) and a `sigma` section of pair lines."""
    pairs: dict = {}
    section = None
    for lineno, line in _meaningful_lines(text):
        word = line.split()[0]
        if word == "group":
            g = _parse_group_line(line, lineno)
            if g != group:
                raise ParseError("sigma file group differs from the algebra's",
                                 lineno)
        elif word == "scalars":
            m = re.match(r"scalars\s+N=(\d+)$", line)
            if not m or int(m.group(1)) != order:
                raise ParseError(
                    "sigma file scalar order differs from the algebra's", lineno)
        elif line in ("sigma", "epsilon"):
            section = line
        elif word == "pair":
            if section is None:
                raise ParseError("pair line outside a sigma section", lineno)
            m = re.match(r"pair\s+g(\d+)\s+g(\d+)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"malformed pair line: {line!r}", lineno)
            pairs[(int(m.group(1)), int(m.group(2)))] = (m.group(3), lineno)
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
    return _build_pairing(Cocycle, group, order, pairs)


# ---------------------------------------------------------------------------
# emission


def format_combo(combo: dict) -> str:
    parts = []
    for k in sorted(combo):
        c = combo[k]
        s = format_scalar(c)
        if s == "1":
            term = f"e{k + 1}"
        elif s == "-1":
            term = f"-e{k + 1}"
        else:
            term = f"{s}*e{k + 1}"
        if not parts:
            parts.append(term)
        else:
            parts.append(f"+ {term}" if not term.startswith("-") else term)
    return " ".join(parts) if parts else "0"


def emit_algebra_file(algebra: ColorAlgebra, grading: Grading | None = None) -> str:
    lines = [str(algebra.group), f"scalars N={algebra.order}"]
    one = CycloScalar.one(algebra.order)
    eps_lines = []
    n = algebra.group.ngens
    for i in range(n):
        for j in range(n):
            v = algebra.epsilon.values[i][j]
            if v != one:
                eps_lines.append(f"pair g{i + 1} g{j + 1} = {format_scalar(v)}")
    if eps_lines:
        lines.append("epsilon")
        lines.extend(eps_lines)
    lines.append("algebra")
    lines.append(f"dim {algebra.dim}")
    for i, d in enumerate(algebra.degrees):
        lines.append(f"deg e{i + 1} = {d}")
    for (i, j) in sorted(algebra.brackets):
        lines.append(f"bracket e{i + 1} e{j + 1} = "
                     f"{format_combo(algebra.brackets[(i, j)])}")
    if grading is not None:
        lines.append("grading")
        if grading.group != algebra.group:
            lines.append(str(grading.group))
        for i, d in enumerate(grading.degrees):
            lines.append(f"gdeg e{i + 1} = {d}")
    return "\n".join(lines) + "\n"


def emit_pairing_file(sigma: Cocycle, section: str = "sigma") -> str:
    lines = [str(sigma.group), f"scalars N={sigma.order}", section]
    one = CycloScalar.one(sigma.order)
    n = sigma.group.ngens
    for i in range(n):
        for j in range(n):
            v = sigma.values[i][j]
            if v != one:
                lines.append(f"pair g{i + 1} g{j + 1} = {format_scalar(v)}")
    return "\n".join(lines) + "\n"

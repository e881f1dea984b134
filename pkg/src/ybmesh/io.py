"""Text formats: solution tables (.lqt), meshes (.mesh) and catalogs (.cat).

Solution file::

    n 4
    0 1 2 3
    ...
    bullet          # optional
    ...

Mesh file::

    orbits 2
    group 0 2
    group 1 2
    const 0 0 1
    ...

Catalog: one record per line, ``n=<n>;key=<hex>;kind=<kind>;prov=<text>``.
"""

from dataclasses import dataclass

from .algebra import Property, check_property, lq_from_table
from .birack import birack_from_cycle_set, birack_from_tables, check_braid
from .canon import key_to_table
from .enumerate import CatalogEntry, Kind
from .errors import InvalidInput, InvalidMesh
from .mesh import TrivialAffineMesh, validate_mesh


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


@dataclass(frozen=True)
class SolutionFile:
    circ: tuple
    bullet: tuple = None

    @property
    def n(self):
        return len(self.circ)


def parse_solution(text):
    lines = list(_content_lines(text))
    if not lines:
        raise InvalidInput("empty solution file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise InvalidInput(f"expected header 'n <size>', got {lines[0]!r}")
    n = int(head[1])
    if n < 1:
        raise InvalidInput("size must be positive")

    def rows(start):
        block = lines[start:start + n]
        if len(block) != n:
            raise InvalidInput(f"expected {n} table rows")
        out = []
        for line in block:
            try:
                row = tuple(int(v) for v in line.split())
            except ValueError:
                raise InvalidInput(f"non-integer entry in row {line!r}") from None
            if len(row) != n:
                raise InvalidInput(f"row {line!r} has {len(row)} entries, expected {n}")
            out.append(row)
        return tuple(out)

    circ = rows(1)
    rest = lines[1 + n:]
    bullet = None
    if rest:
        if rest[0] != "bullet":
            raise InvalidInput(f"unexpected line {rest[0]!r}")
        bullet = rows(2 + n)
        if len(lines) > 2 + 2 * n:
            raise InvalidInput("trailing content after bullet table")
    return SolutionFile(circ, bullet)


def format_solution(sf):
    out = [f"n {sf.n}"]
    out.extend(" ".join(map(str, row)) for row in sf.circ)
    if sf.bullet is not None:
        out.append("bullet")
        out.extend(" ".join(map(str, row)) for row in sf.bullet)
    return "\n".join(out) + "\n"


def solution_lq(sf):
    return lq_from_table(sf.circ)


def solution_birack(sf):
    """Validated birack; the bullet table is derived when absent."""
    if sf.bullet is None:
        return birack_from_cycle_set(lq_from_table(sf.circ))
    return birack_from_tables(sf.circ, sf.bullet)


def birack_file(b, with_bullet=True):
    return SolutionFile(b.circ.table, b.bullet if with_bullet else None)


def read_solution(path):
    with open(path) as fh:
        return parse_solution(fh.read())


def write_text(text, path=None):
    if path is None:
        print(text, end="")
    else:
        with open(path, "w") as fh:
            fh.write(text)


# -- meshes ---------------------------------------------------------------


def parse_mesh(text):
    lines = list(_content_lines(text))
    if not lines:
        raise InvalidInput("empty mesh file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "orbits" or not head[1].isdigit():
        raise InvalidInput(f"expected 'orbits <k>', got {lines[0]!r}")
    k = int(head[1])
    if k < 1:
        raise InvalidInput("a mesh needs at least one orbit")
    groups = [None] * k
    consts = [[None] * k for _ in range(k)]
    for line in lines[1:]:
        parts = line.split()
        try:
            nums = [int(v) for v in parts[1:]]
        except ValueError:
            raise InvalidInput(f"non-integer value in {line!r}") from None
        if parts[0] == "group":
            if not nums or not 0 <= nums[0] < k:
                raise InvalidInput(f"bad group line {line!r}")
            if groups[nums[0]] is not None:
                raise InvalidInput(f"group {nums[0]} given twice")
            groups[nums[0]] = tuple(nums[1:])
        elif parts[0] == "const":
            if len(nums) < 2 or not (0 <= nums[0] < k and 0 <= nums[1] < k):
                raise InvalidInput(f"bad const line {line!r}")
            i, j = nums[0], nums[1]
            if consts[i][j] is not None:
                raise InvalidInput(f"constant ({i},{j}) given twice")
            consts[i][j] = tuple(nums[2:])
        else:
            raise InvalidInput(f"unexpected line {line!r}")
    if any(g is None for g in groups):
        raise InvalidInput("missing group line")
    for i in range(k):
        for j in range(k):
            c = consts[i][j]
            if c is None:
                raise InvalidInput(f"missing constant ({i},{j})")
            if len(c) != len(groups[j]):
                raise InvalidInput(f"constant ({i},{j}) does not match the factors of group {j}")
    m = TrivialAffineMesh(tuple(groups), tuple(tuple(r) for r in consts))
    if not validate_mesh(m):
        raise InvalidMesh("constants do not generate every group")
    return m


def format_mesh(m):
    out = [f"orbits {m.k}"]
    for i, g in enumerate(m.groups):
        out.append(" ".join(["group", str(i), *map(str, g.factors)]))
    for i in range(m.k):
        for j in range(m.k):
            out.append(" ".join(["const", str(i), str(j), *map(str, m.constants[i][j])]))
    return "\n".join(out) + "\n"


def read_mesh(path):
    with open(path) as fh:
        return parse_mesh(fh.read())


# -- catalogs -------------------------------------------------------------


def format_record(entry):
    return f"n={entry.n};key={entry.canonical_key};kind={entry.kind.value};prov={entry.provenance}"


def parse_record(line):
    fields = {}
    for part in line.strip().split(";", 3):
        name, sep, value = part.partition("=")
        if not sep:
            raise InvalidInput(f"malformed catalog field {part!r}")
        fields[name] = value
    try:
        n = int(fields["n"])
        key = fields["key"]
        kind = Kind(fields["kind"])
        prov = fields["prov"]
    except (KeyError, ValueError) as exc:
        raise InvalidInput(f"malformed catalog record {line.strip()!r}") from exc
    try:
        table = key_to_table(key, n)
    except ValueError as exc:
        raise InvalidInput(f"bad key in record {line.strip()!r}") from exc
    lq = lq_from_table(table)
    if kind is Kind.RACK:
        if not check_property(lq, Property.LEFT_DISTRIBUTIVE):
            raise InvalidInput("catalog rack is not left distributive")
        return CatalogEntry(lq.table, kind, prov, key)
    b = birack_from_cycle_set(lq)
    if not check_braid(b):
        raise InvalidInput("catalog solution fails the braid relation")
    return CatalogEntry(lq.table, kind, prov, key, b)


def catalog_write(entries, path):
    with open(path, "w") as fh:
        for entry in entries:
            fh.write(format_record(entry) + "\n")


def catalog_read(path):
    with open(path) as fh:
        return [parse_record(line) for line in fh if line.strip()]


"""Loaders for the packaged permutation group catalog and reference tables.

The catalog format is line based.  Each group starts with a header

    group <name> degree <n> order <order>

followed by one generator per line in cycle notation and a blank line.  The
order field is a checksum: loading rebuilds a stabilizer chain and refuses
the file if the generated group has any other order.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .permgroup import Permutation, StrongGenSet, parse_cycles, schreier_sims


class CatalogError(ValueError):
    """A data file is malformed or fails its checksum."""


def _data_text(filename: str) -> str:
    return (resources.files("setorbits") / "data" / filename).read_text()


def _read(path: str | Path | None, default_name: str) -> tuple[str, str]:
    if path is None:
        return _data_text(default_name), default_name
    p = Path(path)
    return p.read_text(), str(p)


@dataclass(frozen=True)
class GroupRecord:
    name: str
    degree: int
    order: int
    generators: tuple[Permutation, ...]
    group: StrongGenSet


def load_catalog(path: str | Path | None = None) -> dict[str, GroupRecord]:
    """Parse and checksum a catalog file, defaulting to the packaged one.

    Returns records keyed by name, in file order.
    """
    text, source = _read(path, "groups.cat")
    records: dict[str, GroupRecord] = {}
    header: tuple[str, int, int] | None = None
    header_line = 0
    gens: list[Permutation] = []

    def flush() -> None:
        if header is None:
            return
        name, degree, order = header
        if not gens:
            raise CatalogError(f"{source}:{header_line}: group {name} has no generators")
        sgs = schreier_sims(gens)
        if sgs.order() != order:
            raise CatalogError(
                f"{source}:{header_line}: group {name} has order {sgs.order()}, "
                f"header claims {order}")
        records[name] = GroupRecord(name, degree, order, tuple(gens), sgs)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            flush()
            header = None
            gens = []
            continue
        if line.startswith("group "):
            flush()
            fields = line.split()
            if len(fields) != 6 or fields[2] != "degree" or fields[4] != "order":
                raise CatalogError(f"{source}:{lineno}: bad header {line!r}")
            name = fields[1]
            if name in records:
                raise CatalogError(f"{source}:{lineno}: duplicate group {name}")
            try:
                header = (name, int(fields[3]), int(fields[5]))
            except ValueError:
                raise CatalogError(f"{source}:{lineno}: bad header {line!r}") from None
            header_line = lineno
            gens = []
            continue
        if header is None:
            raise CatalogError(f"{source}:{lineno}: generator outside any group block")
        try:
            gens.append(parse_cycles(line, header[1]))
        except ValueError as exc:
            raise CatalogError(f"{source}:{lineno}: {exc}") from None
    flush()
    return records


@dataclass(frozen=True)
class OrderTable:
    """Largest orders of primitive groups other than the full symmetric and
    alternating ones, by degree.  Degrees where no such group exists map to
    None; a degree may also carry a second-largest order."""

    largest: dict[int, int | None]
    second: dict[int, int]

    @property
    def degrees(self) -> range:
        return range(min(self.largest), max(self.largest) + 1)


def load_order_table(path: str | Path | None = None) -> OrderTable:
    text, source = _read(path, "primitive_orders.txt")
    largest: dict[int, int | None] = {}
    second: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "order" or len(fields) not in (3, 4):
            raise CatalogError(f"{source}:{lineno}: bad row {line!r}")
        try:
            degree = int(fields[1])
            if degree in largest:
                raise CatalogError(f"{source}:{lineno}: duplicate degree {degree}")
            largest[degree] = None if fields[2] == "N/A" else int(fields[2])
            if len(fields) == 4:
                if largest[degree] is None:
                    raise CatalogError(
                        f"{source}:{lineno}: second order listed for empty degree")
                second[degree] = int(fields[3])
        except ValueError:
            raise CatalogError(f"{source}:{lineno}: bad row {line!r}") from None
    if not largest:
        raise CatalogError(f"{source}: no rows")
    missing = [d for d in range(min(largest), max(largest) + 1) if d not in largest]
    if missing:
        raise CatalogError(f"{source}: missing degrees {missing}")
    return OrderTable(largest, second)


def required_group_names() -> tuple[str, ...]:
    """The minimum catalog for a full verification run: the nine primitive
    witnesses whose exact counts anchor the degree table, the two Mathieu
    wreath components, their runner-up groups at degrees 23, 24 and 32, the
    symmetric groups through degree 8, and the small groups the oracle tests
    lean on."""
    return ("PGL(2,13)", "PSL(4,2)", "AGL(4,2)", "PGammaL(2,16)",
            "PGammaL(3,4)", "M22", "M22.2", "M23", "M24", "ASL(5,2)",
            "M11", "M12",
            "AGL(1,23)", "PGL(2,23)", "PGL(2,31)",
            "S2", "S3", "S4", "S5", "S6", "S7", "S8",
            "C2", "C3", "C4", "D4", "A4", "A5")


def load_pattern_fixtures(path: str | Path | None = None) -> dict[tuple[int, ...], int]:
    """Read reference orbit counts keyed by multiplicity partition."""
    text, source = _read(path, "m12_pattern_orbits.txt")
    fixtures: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "N" or len(fields) != 3:
            raise CatalogError(f"{source}:{lineno}: bad row {line!r}")
        try:
            parts = tuple(int(x) for x in fields[1].split(","))
            count = int(fields[2])
        except ValueError:
            raise CatalogError(f"{source}:{lineno}: bad row {line!r}") from None
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise CatalogError(f"{source}:{lineno}: parts must be a sorted partition")
        if parts in fixtures:
            raise CatalogError(f"{source}:{lineno}: duplicate partition {parts}")
        fixtures[parts] = count
    return fixtures

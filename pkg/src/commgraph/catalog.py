"""Small-group catalog files: parsing, validation, round-tripping.

Format (UTF-8 text, whitespace-insensitive between tokens):

    # comment
    #coverage <order> complete|partial
    <order> <index> <degree> | <perm>, <perm>, ...

where each ``<perm>`` is a cycle expression over the points 1..degree,
e.g. ``(1 2)(3 4)``, and ``()`` is the identity. Every entry is validated
on load: the generators must generate a group of exactly the declared
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DuplicateID, OrderMismatch, OrderValidationFailed, ParseError
from .groups import GeneratorSpec, cycle_notation, group_from_generators, parse_cycles


@dataclass(frozen=True)
class CatalogEntry:
    """One group: (order, index) ID plus permutation generators."""

    order: int
    index: int
    degree: int
    generators: tuple          # tuple of image tuples (0-based)
    name: Optional[str] = None

    @property
    def gid(self):
        return (self.order, self.index)

    def generator_spec(self):
        return GeneratorSpec.from_images(self.degree, self.generators)

    def build(self, validate=True):
        """Closure-enumerate the group; validates the declared order."""
        try:
            grp = group_from_generators(
                self.generator_spec(),
                order_hint=self.order if validate else None,
                label=f"[{self.order},{self.index}]")
        except OrderMismatch as exc:
            raise OrderValidationFailed(self.order, self.index, exc.actual) from exc
        return grp


@dataclass
class Catalog:
    entries: list
    coverage: dict = field(default_factory=dict)  # order -> "complete"|"partial"

    def by_order(self, order):
        return [e for e in self.entries if e.order == order]

    def get(self, order, index):
        for e in self.entries:
            if e.order == order and e.index == index:
                return e
        raise KeyError(f"no catalog entry [{order},{index}]")

    def orders(self):
        return sorted({e.order for e in self.entries})

    def is_complete(self, order):
        return self.coverage.get(order) == "complete"


def parse_catalog_text(text):
    """Parse catalog text into (entries, coverage); no order validation."""
    entries = []
    coverage = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#coverage"):
            toks = line.split()
            if len(toks) != 3 or toks[2] not in ("complete", "partial"):
                raise ParseError(lineno, f"bad coverage line: {raw!r}")
            try:
                coverage[int(toks[1])] = toks[2]
            except ValueError:
                raise ParseError(lineno, f"bad coverage order: {raw!r}") from None
            continue
        if not line or line.startswith("#"):
            continue
        if "|" not in line:
            raise ParseError(lineno, f"missing '|' separator: {raw!r}")
        head, _, tail = line.partition("|")
        toks = head.split()
        if len(toks) != 3:
            raise ParseError(lineno, f"expected 'order index degree |': {raw!r}")
        try:
            order, index, degree = (int(t) for t in toks)
        except ValueError:
            raise ParseError(lineno, f"non-integer header field: {raw!r}") from None
        if order < 1 or index < 1 or degree < 1:
            raise ParseError(lineno, f"fields must be positive: {raw!r}")
        gens = []
        for chunk in tail.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                gens.append(parse_cycles(chunk, degree))
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        entries.append(CatalogEntry(order=order, index=index, degree=degree,
                                    generators=tuple(gens)))
    return entries, coverage


def serialize_catalog(catalog):
    """Canonical text form: coverage headers then entries sorted by ID."""
    lines = []
    for order in sorted(catalog.coverage):
        lines.append(f"#coverage {order} {catalog.coverage[order]}")
    for e in sorted(catalog.entries, key=lambda e: (e.order, e.index)):
        perms = ", ".join(cycle_notation(g) for g in e.generators)
        lines.append(f"{e.order} {e.index} {e.degree} | {perms}")
    return "\n".join(lines) + "\n"


def load_catalog(path, validate=True):
    """Load and validate a catalog file.

    Every entry's generators are closure-enumerated and must produce the
    declared order; IDs must be unique. Entries come back sorted by ID.
    """
    text = Path(path).read_text(encoding="utf-8")
    return load_catalog_text(text, validate=validate)


def load_catalog_text(text, validate=True):
    entries, coverage = parse_catalog_text(text)
    seen = set()
    for e in entries:
        if e.gid in seen:
            raise DuplicateID(f"duplicate catalog ID [{e.order},{e.index}]")
        seen.add(e.gid)
    if validate:
        for e in entries:
            e.build(validate=True)
    entries.sort(key=lambda e: (e.order, e.index))
    return Catalog(entries=entries, coverage=coverage)


def bundled_catalog_path(name="smallgroups.cat"):
    """Path of a catalog file shipped inside the package."""
    from importlib import resources

    return resources.files("commgraph.data").joinpath(name)


def load_bundled_catalog(validate=True):
    text = bundled_catalog_path().read_text(encoding="utf-8")
    return load_catalog_text(text, validate=validate)

"""Classification report: both verification routes and their comparison.

The JSON layout is described by ``report.schema.json`` next to this module.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources

from .diophantine import enumerate_xyz, xyz_to_sides
from .search import DEFAULT_WINDOW, SearchWindow, enumerate_equable_classes, realize_sides
from .triangle import CongruenceKey

SCOPE_NOTE = (
    "The lattice search is exhaustive only for side norms |CA|^2, |CB|^2 <= window; "
    "completeness beyond it rests on the Diophantine reduction."
)


@dataclass
class Realization:
    sides: list[int]
    vertices: list[list[list[int]]]  # one [[a1, a2], [b1, b2], [c1, c2]] per triangle


@dataclass
class ClassificationReport:
    xyz_solutions: list[list[int]]
    side_triples: list[list[int]]
    realizations: list[Realization]
    diophantine_keys: list[list[int]]
    oracle_keys: list[list[int]]
    oracle_window: int
    agreement: bool
    note: str = field(default=SCOPE_NOTE)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> ClassificationReport:
        data = dict(data)
        data["realizations"] = [Realization(**r) for r in data["realizations"]]
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> ClassificationReport:
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text(encoding="utf-8"))


def key_of_sides(ns) -> CongruenceKey:
    return CongruenceKey.from_norms(3 * n * n for n in ns)


def classify(window: int = DEFAULT_WINDOW, workers: int = 1, method: str = "exact") -> ClassificationReport:
    xyz = enumerate_xyz()
    triples = [[s.n for s in xyz_to_sides(sol)] for sol in xyz]
    realizations = [
        Realization(
            sides=ns,
            vertices=[[[v.c1, v.cw] for v in T.vertices] for T in realize_sides(tuple(ns))],
        )
        for ns in triples
    ]
    diophantine_keys = sorted({key_of_sides(ns) for ns in triples})
    oracle_keys = sorted(enumerate_equable_classes(SearchWindow(window), workers=workers, method=method))
    return ClassificationReport(
        xyz_solutions=[list(s) for s in xyz],
        side_triples=triples,
        realizations=realizations,
        diophantine_keys=[list(k) for k in diophantine_keys],
        oracle_keys=[list(k) for k in oracle_keys],
        oracle_window=window,
        agreement=diophantine_keys == oracle_keys,
    )

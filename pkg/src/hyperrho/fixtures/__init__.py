"""Bundled certificate fixtures: one labeled hypergraph per shipped figure.

Each JSON file carries a hypergraph, a target alpha, the nontrivial
weights (leaf entries are implicitly 1), and the claim the labeling is
supposed to witness: kind in {"normal", "strictly-subnormal",
"strictly-supernormal"} plus the expected cycle-consistency flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..hypergraph import Hypergraph
from ..labeling import (
    Weight,
    WeightedIncidence,
    check_consistent,
    check_normal,
    incidence_from_json_obj,
)


@dataclass
class Fixture:
    name: str
    description: str
    graph: Hypergraph
    alpha: Weight
    incidence: WeightedIncidence
    claim_kind: str
    claim_consistent: bool

    def verify(self) -> tuple[bool, str]:
        """Check the claim exactly; returns (ok, observed summary)."""
        report = check_normal(self.graph, self.incidence, self.alpha)
        consistent = check_consistent(self.graph, self.incidence)
        observed = f"{report.kind}, consistent={consistent}"
        ok = report.kind == self.claim_kind and consistent == self.claim_consistent
        return ok, observed


def fixture_names() -> list[str]:
    root = resources.files(__package__)
    return sorted(
        p.name[: -len(".json")]
        for p in root.iterdir()
        if p.name.endswith(".json")
    )


def load_fixture(name: str) -> Fixture:
    root = resources.files(__package__)
    obj = json.loads(root.joinpath(f"{name}.json").read_text())
    alpha, incidence = incidence_from_json_obj(obj)
    return Fixture(
        name=obj["name"],
        description=obj.get("description", ""),
        graph=Hypergraph.from_json_obj(obj["graph"]),
        alpha=alpha,
        incidence=incidence,
        claim_kind=obj["claim"]["kind"],
        claim_consistent=bool(obj["claim"]["consistent"]),
    )


def load_all() -> list[Fixture]:
    return [load_fixture(name) for name in fixture_names()]

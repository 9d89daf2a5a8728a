"""Runtime limits shared by the network builders and the CLI."""

import os
from dataclasses import dataclass
from typing import Optional

DEFAULT_NODE_BUDGET = 10**6
NODE_BUDGET_ENV = "PARTNET_NODE_BUDGET"

# e_vector keeps two int64 vectors of length t(n) alive at once
DEFAULT_EVECTOR_BUDGET = 50_000_000


def node_budget_from_env(default: int = DEFAULT_NODE_BUDGET) -> int:
    raw = os.environ.get(NODE_BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{NODE_BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass
class Config:
    node_budget: int = DEFAULT_NODE_BUDGET
    verify_max: int = 60
    output_path: Optional[str] = None
    format: str = "text"

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.verify_max < 1:
            raise ValueError("verify_max must be positive")
        if self.format not in ("dot", "json", "text"):
            raise ValueError(f"unknown format {self.format!r}")

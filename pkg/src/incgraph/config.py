from __future__ import annotations

import os
from dataclasses import dataclass, replace

ORDER_CAP_ENV = "INCL_ORDER_CAP"


@dataclass(frozen=True)
class Config:
    order_cap: int = 400
    planarity_vertex_limit: int = 512
    iso_vertex_limit: int = 64
    chromatic_exact_limit: int = 64
    claw_bruteforce_limit: int = 40

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)


def get_config(**overrides) -> Config:
    """Default config, with ``INCL_ORDER_CAP`` applied if set."""
    cfg = Config()
    env = os.environ.get(ORDER_CAP_ENV)
    if env:
        cfg = cfg.with_(order_cap=int(env))
    if overrides:
        cfg = cfg.with_(**overrides)
    return cfg

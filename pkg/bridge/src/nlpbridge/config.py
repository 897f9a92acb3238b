"""Run configuration shared by the bridge operations."""

from __future__ import annotations

from dataclasses import dataclass, field


class BridgeConfigError(ValueError):
    pass


DEFAULT_RELATIONS = (
    "AtLocation", "MadeOf", "CapableOf", "HasA", "UsedFor", "PartOf", "DefinedAs",
)


@dataclass
class BridgeConfig:
    paraphrase_cap: int = 10
    neighbor_k: int = 10
    sts_threshold: float = 0.75
    conceptnet_relations: tuple[str, ...] = DEFAULT_RELATIONS
    epochs: int = 5
    batch_size: int = 32
    learning_rate: float = 2e-5
    hash_dim: int = 4096
    seed: int = 13

    def __post_init__(self):
        if self.paraphrase_cap <= 0:
            raise BridgeConfigError(f"paraphrase_cap must be positive, got {self.paraphrase_cap}")
        if self.neighbor_k < 0:
            raise BridgeConfigError(f"neighbor_k must be >= 0, got {self.neighbor_k}")
        if not 0.0 <= self.sts_threshold <= 1.0:
            raise BridgeConfigError(f"sts_threshold must be in [0,1], got {self.sts_threshold}")
        if self.epochs <= 0 or self.batch_size <= 0 or self.hash_dim <= 0:
            raise BridgeConfigError("epochs, batch_size, and hash_dim must be positive")
        if self.learning_rate <= 0:
            raise BridgeConfigError(f"learning_rate must be positive, got {self.learning_rate}")

import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

load_dotenv()


class Settings(BaseModel):
    '''Runtime knobs for the searches and the command line'''
    model_config = ConfigDict(frozen=True)

    node_cap: int | None = Field(None, ge=1, description="Node-expansion cap for Berge cycle searches")
    graph_cycle_cap: int | None = Field(200_000, ge=1, description="Cap for graph cycle searches in the extraction engine")
    prune_every: int = Field(1, ge=1, description="Run Hall-feasibility pruning every d extensions")
    seed: int = Field(0, description="Default seed for sweeps")
    log_level: str = Field("WARNING", description="Root logging level name")


def _optional_cap(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    # zero means unlimited
    return int(raw) or None


def load_settings() -> Settings:
    try:
        return Settings(
            node_cap=_optional_cap("BERGE_NODE_CAP", None),
            graph_cycle_cap=_optional_cap("BERGE_GRAPH_CYCLE_CAP", 200_000),
            prune_every=int(os.environ.get("BERGE_PRUNE_EVERY", "1")),
            seed=int(os.environ.get("BERGE_SEED", "0")),
            log_level=os.environ.get("BERGE_LOG_LEVEL", "WARNING").upper(),
        )
    except (ValueError, ValidationError) as exc:
        raise RuntimeError(f"invalid BERGE_* environment setting: {exc}") from exc


settings = load_settings()

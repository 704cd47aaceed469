import logging
from pathlib import Path

from core.hypergraph import Hypergraph

logger = logging.getLogger(__name__)


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.m} {H.r}"]
    lines.extend(" ".join(map(str, H.edge_set(j))) for j in range(H.m))
    return "\n".join(lines) + "\n"


def write_hypergraph(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hypergraph(H))
    logger.info("wrote %s: n=%d m=%d r=%d", path, H.n, H.m, H.r)

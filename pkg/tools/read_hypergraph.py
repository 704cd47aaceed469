import logging
from pathlib import Path

from core.errors import HypergraphParseError
from core.hypergraph import Hypergraph, make_hypergraph

logger = logging.getLogger(__name__)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise HypergraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_hypergraph(text: str) -> Hypergraph:
    '''
        Parse the text format: a header line `n m r`, then one line per edge
        holding r increasing vertex indices. Lines starting with # are comments.
    '''
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise HypergraphParseError("missing header line `n m r`")

    lineno, header = rows[0]
    if len(header) != 3:
        raise HypergraphParseError("header must be `n m r`", lineno)
    n, m, r = _ints(header, lineno)
    if min(n, m + 1, r) < 1:
        raise HypergraphParseError(f"bad header values n={n} m={m} r={r}", lineno)

    body = rows[1:]
    if len(body) != m:
        raise HypergraphParseError(f"header announces {m} edges, found {len(body)}", lineno)

    edges = []
    for lineno, tokens in body:
        edge = _ints(tokens, lineno)
        if len(edge) != r:
            raise HypergraphParseError(f"edge has {len(edge)} indices, expected {r}", lineno)
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise HypergraphParseError("edge indices must be strictly increasing", lineno)
        if edge[0] < 0 or edge[-1] >= n:
            raise HypergraphParseError(f"edge index outside 0..{n - 1}", lineno)
        edges.append(edge)

    return make_hypergraph(n, r, edges)


def read_hypergraph(path: str | Path) -> Hypergraph:
    H = parse_hypergraph(Path(path).read_text())
    logger.info("read %s: n=%d m=%d r=%d", path, H.n, H.m, H.r)
    return H

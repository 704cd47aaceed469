import argparse
import logging
import sys
from pathlib import Path

from config.config import settings
from constructions.generators import ConstructionKind, ConstructionSpec
from constructive.extract import extract_all
from core.errors import BadParameters, PreconditionViolated
from oracle.berge import SearchStatus
from oracle.frame import find_hamiltonian_frame, search_hamiltonian_frame
from oracle.spectrum import spectrum
from tools.read_hypergraph import read_hypergraph
from tools.write_hypergraph import format_hypergraph
from cli.sweep import SweepConfig, SweepMode, format_sweep, run_sweep

logger = logging.getLogger(__name__)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _bound(token: str, n: int) -> int:
    token = token.strip()
    if token == "n":
        return n
    try:
        return int(token)
    except ValueError:
        raise BadParameters(f"bad length {token!r}") from None


def parse_lengths(text: str, n: int) -> list[int]:
    '''`2..n`, `3,5,7` or a mix; `n` stands for the vertex count'''
    lengths = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            lengths.extend(range(_bound(lo, n), _bound(hi, n) + 1))
        else:
            lengths.append(_bound(part, n))
    if not lengths:
        raise BadParameters(f"no lengths in {text!r}")
    return lengths


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_gen(args) -> int:
    spec = ConstructionSpec(kind=args.kind, n=args.n, r=args.r, k=args.k, bridge=args.bridge, extra=args.extra)
    H = spec.build()
    _emit(format_hypergraph(H), args.out)
    return 0


def cmd_spectrum(args) -> int:
    H = read_hypergraph(args.file)
    lo = args.lo if args.lo is not None else 2
    hi = args.hi if args.hi is not None else H.n
    report = spectrum(H, lo, hi, args.cap)
    _emit(report.format(), args.out)
    return 0


def cmd_check(args) -> int:
    H = read_hypergraph(args.file)
    status, frame, nodes = search_hamiltonian_frame(H, args.cap)
    if frame is not None:
        line = f"HAMILTONIAN {frame.to_input(frame.cycle()).format()}"
    elif status is SearchStatus.ABSENT:
        line = "NOT_HAMILTONIAN"
    else:
        line = "UNKNOWN"
    logger.info("check: %s after %d nodes", status, nodes)
    _emit(line + "\n", args.out)
    return 0


def cmd_extract(args) -> int:
    H = read_hypergraph(args.file)
    frame = find_hamiltonian_frame(H, args.cap)
    if frame is None:
        raise PreconditionViolated("the input has no hamiltonian Berge cycle to extract from")
    lengths = parse_lengths(args.lengths, H.n) if args.lengths else None
    trace = extract_all(frame, lengths, args.allow_fallback, args.cap)
    if args.allow_fallback:
        print(f"fallback used on {trace.fallback_fraction():.1%} of lengths", file=sys.stderr)
    _emit(trace.relabeled(frame.labels).format(), args.out)
    return 0


def cmd_sweep(args) -> int:
    try:
        config = SweepConfig(
            n_lo=args.n_lo, n_hi=args.n_hi, r_offset=args.r_offset, offsets=args.offsets,
            samples=args.samples, mode=args.mode, seed=args.seed, cap=args.cap,
        )
    except ValueError as exc:
        raise BadParameters(str(exc)) from exc
    _emit(format_sweep(run_sweep(config)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="berge", description="Berge cycles in uniform hypergraphs")
    parser.add_argument("--log-level", default=settings.log_level, help="logging level name")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="hypergraph in the `n m r` text format")
        p.add_argument("--cap", type=int, default=settings.node_cap, help="node-expansion cap per search")
        p.add_argument("--out", default=None, help="write here instead of stdout")

    gen = sub.add_parser("gen", help="write an extremal or separating hypergraph")
    gen.add_argument("kind", choices=[kind.value for kind in ConstructionKind])
    gen.add_argument("--n", type=int)
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--k", type=int)
    gen.add_argument("--bridge", action="store_true", help="c1, n even: add the edge joining the cliques")
    gen.add_argument("--extra", action="store_true", help="c2, n even: add one edge with two V_2 vertices")
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    spec = sub.add_parser("spectrum", help="exact cycle spectrum")
    common(spec)
    spec.add_argument("--lo", type=int)
    spec.add_argument("--hi", type=int)
    spec.set_defaults(func=cmd_spectrum)

    check = sub.add_parser("check", help="hamiltonicity only")
    common(check)
    check.set_defaults(func=cmd_check)

    ext = sub.add_parser("extract", help="constructive cycles along a hamiltonian frame")
    common(ext)
    ext.add_argument("--lengths", default=None, help="e.g. 2..n or 3,5,7 (default 2..n)")
    ext.add_argument("--allow-fallback", action="store_true", help="use the exact search where no branch fires")
    ext.set_defaults(func=cmd_extract)

    sweep = sub.add_parser("sweep", help="pancyclicity around the degree threshold")
    common(sweep, needs_file=False)
    sweep.add_argument("--n-lo", type=int, required=True)
    sweep.add_argument("--n-hi", type=int, required=True)
    sweep.add_argument("--r-offset", type=int, default=0)
    sweep.add_argument("--offsets", type=_int_list, default=(0,))
    sweep.add_argument("--samples", type=int, default=10)
    sweep.add_argument("--mode", choices=[mode.value for mode in SweepMode], default=SweepMode.DEGREE.value)
    sweep.add_argument("--seed", type=int, default=settings.seed)
    sweep.set_defaults(func=cmd_sweep)

    return parser

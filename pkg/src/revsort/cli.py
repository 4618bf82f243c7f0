"""Command-line interface.

Scripts are printed one reversal per line as ``a b``: 1-based inclusive
positions in the permutation as it stands when that reversal is applied.

Exit codes: 0 ok, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional, Sequence

from . import oracle
from .driver import sort
from .perm import InvalidInput, frame

DEFAULT_SEED = 42


def parse_perm(text: str) -> list[int]:
    try:
        raw = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise InvalidInput(f"not a list of integers: {text.strip()!r}") from exc
    frame(raw)  # validates
    return raw


def random_perm(n: int, seed: int) -> list[int]:
    """Fisher-Yates shuffle of 1..n, then one fair sign bit per element.

    Uses ``random.Random(seed)`` (Mersenne Twister), so a given ``(n, seed)``
    always yields the same permutation.
    """
    if n < 1:
        raise InvalidInput("n must be at least 1")
    rng = random.Random(seed)
    mags = list(range(1, n + 1))
    rng.shuffle(mags)
    return [-m if rng.getrandbits(1) else m for m in mags]


def _read_line(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def cmd_sort(args) -> int:
    raw = parse_perm(_read_line(args.input))
    script = sort(raw)
    if args.verify and not oracle.verify_script(raw, script):
        print("verification failed", file=sys.stderr)
        return 2
    if args.json:
        doc = {"n": len(raw), "distance": len(script),
               "reversals": [[a, b] for a, b in script]}
        print(json.dumps(doc))
    else:
        for a, b in script:
            print(a, b)
    return 0


def cmd_gen(args) -> int:
    print(" ".join(map(str, random_perm(args.n, args.seed))))
    return 0


def cmd_bench(args) -> int:
    millis = []
    print("n,seed,millis,reversals")
    for n in args.sizes:
        raw = random_perm(n, args.seed)
        t0 = time.perf_counter()
        script = sort(raw)
        ms = (time.perf_counter() - t0) * 1000.0
        millis.append(ms)
        print(f"{n},{args.seed},{ms:.1f},{len(script)}", flush=True)
    if args.figure:
        from .plotting import scaling_figure

        scaling_figure(args.sizes, millis, args.figure)
    return 0


def cmd_oracle(args) -> int:
    raw = parse_perm(args.perm)
    if args.what == "distance":
        if len(raw) > oracle.MAX_BFS_N:
            raise InvalidInput(f"distance oracle limited to n <= {oracle.MAX_BFS_N}")
        print(oracle.bfs_distance(frame(raw)))
        return 0
    script = []
    for line in _read_line(args.script).splitlines():
        if line.strip():
            try:
                script.append([int(tok) for tok in line.split()])
            except ValueError as exc:
                raise InvalidInput(f"bad script line {line!r}") from exc
    ok = oracle.verify_script(raw, script)
    print("ok" if ok else "fail")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revsort", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="print a shortest reversal script")
    p.add_argument("input", nargs="?", help="file with one permutation line (default stdin)")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    p.add_argument("--verify", action="store_true", help="replay the script before printing")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("gen", help="print a random signed permutation")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time sorts of random inputs, CSV to stdout")
    p.add_argument("sizes", type=int, nargs="+")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--figure", metavar="PNG", help="also write a log-log scaling plot")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force checks for small inputs")
    p.add_argument("what", choices=("distance", "check"))
    p.add_argument("perm", help='permutation line, quoted, e.g. "2 -1"')
    p.add_argument("script", nargs="?", help="script file for 'check' (default stdin)")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

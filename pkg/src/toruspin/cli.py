"""Command line entry points: the attack simulator and the auth service."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import attack
from .board import BoardSpec


def _board_from_args(args) -> BoardSpec:
    n = args.rows * args.cols
    fixed = tuple(str((i + 1) % 10) if n <= 10 else f"k{i+1}" for i in range(n))
    cursor = tuple(
        chr(ord("A") + i) if n <= 26 else f"c{i+1}" for i in range(n)
    )
    return BoardSpec(args.rows, args.cols, fixed, cursor)


def cmd_attack(args) -> int:
    spec = _board_from_args(args)
    l = args.l if args.l else None
    dist = attack.sessions_to_break(
        spec,
        args.k,
        trials=args.trials,
        seed=args.seed,
        display_l=l,
        max_sessions=args.sessions,
    )
    per_step = l if l else spec.n
    summary = dist.summary()
    summary["single_session_count"] = per_step ** args.k
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "sessions_to_break.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "sessions_needed"])
        for i, c in enumerate(dist.counts):
            writer.writerow([i, "" if c is None else c])
    json_path = out / "summary.json"
    json_path.write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary, indent=2))
    print(f"wrote {csv_path} and {json_path}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import UserStore, create_app

    store = UserStore(args.store)
    app = create_app(
        store,
        lockout_threshold=args.lockout,
        seed=args.seed,
        display_l=args.display_l,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def cmd_bench(args) -> int:
    from benchmarks import bench_kernels  # type: ignore

    bench_kernels.main()
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="toruspin")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("attack", help="Monte Carlo observer attack simulation")
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("-k", type=int, default=4, help="password length")
    p.add_argument("-l", type=int, default=0, help="partial display size (0 = full)")
    p.add_argument("--sessions", type=int, default=64, help="session cap per trial")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default="attack-out", help="output directory")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("serve", help="run the HTTP auth service")
    p.add_argument("--host", default=os.environ.get("TORUSPIN_HOST", "127.0.0.1"))
    p.add_argument(
        "--port", type=int, default=int(os.environ.get("TORUSPIN_PORT", "8000"))
    )
    p.add_argument(
        "--store", default=os.environ.get("TORUSPIN_STORE", "users.jsonl")
    )
    p.add_argument("--lockout", type=int, default=5)
    p.add_argument("--display-l", type=int, default=None)
    p.add_argument(
        "--seed", type=int, default=None,
        help="deterministic session seed (test mode only)",
    )
    p.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

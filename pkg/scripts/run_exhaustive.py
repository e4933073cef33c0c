"""Run the exhaustive claim checks and write a report.

    python3 scripts/run_exhaustive.py --max 14 --claims all --threads 4 --out report.txt
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from gttrees.enumeration import exhaustive_check


@dataclass
class ExhaustiveConfig:
    n_min: int = 1
    n_max: int = 12
    claims: str = "all"
    threads: int = 1
    out: str | None = None
    json: bool = False


def run(cfg: ExhaustiveConfig) -> bool:
    start = time.perf_counter()
    report = exhaustive_check(cfg.n_max, cfg.claims, n_min=cfg.n_min, threads=cfg.threads)
    elapsed = time.perf_counter() - start
    if cfg.json:
        text = json.dumps({"config": asdict(cfg), "wall_seconds": elapsed, **report.as_dict()}, indent=2) + "\n"
    else:
        text = report.format() + f"wall_seconds {elapsed:.2f}\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    print(text, end="")
    return report.passed


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min", dest="n_min", type=int, default=1)
    p.add_argument("--max", dest="n_max", type=int, default=12)
    p.add_argument("--claims", default="all")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    cfg = ExhaustiveConfig(**vars(p.parse_args()))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()

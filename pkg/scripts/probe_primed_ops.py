"""Probe whether the relaxed operations O1'-O3' keep gamma_t == tau.

Applies every relaxed operation at every valid vertex of every tree with
gamma_t == tau up to the given order and lists the applications that break
the equality. Also counts the trees reachable from P4 by random relaxed walks
that have no (gamma_t-tau)-set.
"""
import argparse
from dataclasses import dataclass

from gttrees import oracle
from gttrees.enumeration import exhaustive_check
from gttrees.family import random_s_member


@dataclass
class ProbeConfig:
    n_max: int = 12
    walks: int = 200
    walk_order: int = 16
    seed: int = 0
    out: str | None = None


def run(cfg: ProbeConfig) -> str:
    report = exhaustive_check(cfg.n_max, "primed_ops_preserve_equality")
    lines = report.format().splitlines()
    unequal = outside = 0
    for i in range(cfg.walks):
        m = random_s_member(cfg.walk_order, cfg.seed + i)
        if m.tau != m.gamma_t:
            unequal += 1
        elif m.tree.n <= oracle.ORACLE_CAP and not oracle.has_gtt_set(m.tree):
            outside += 1
    lines.append(f"walks {cfg.walks} order {cfg.walk_order} unequal {unequal} no_gtt_set {outside}")
    text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    return text


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max", dest="n_max", type=int, default=12)
    p.add_argument("--walks", type=int, default=200)
    p.add_argument("--walk-order", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    print(run(ProbeConfig(**vars(p.parse_args()))), end="")


if __name__ == "__main__":
    main()

"""Tabulate tau and gamma_t on the two gap families with the linear-time DPs."""
import argparse
from dataclasses import dataclass

from gttrees.operations import gap_tree_tk, gap_tree_tpk
from gttrees.tree_dp import gamma_t_tree, tau_tree


@dataclass
class GapConfig:
    k_max: int = 10


def run(cfg: GapConfig) -> None:
    print("family k n tau gamma_t")
    for name, build in (("tk", gap_tree_tk), ("tpk", gap_tree_tpk)):
        for k in range(1, cfg.k_max + 1):
            T = build(k)
            print(name, k, T.n, tau_tree(T), gamma_t_tree(T))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=10)
    run(GapConfig(**vars(p.parse_args())))

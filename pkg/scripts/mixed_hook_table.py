"""Tabulate the mixed hook ratio h_{lambda mu}(t) for all pairs with
|lambda| + |mu| <= N, next to the ratio of eigenvalues of J measured on
explicit eigenvectors at a few rational values of t.

    python scripts/mixed_hook_table.py --n 4 --t 3 --t 5
"""

import argparse
from dataclasses import dataclass, field

from heckefusion import intertwiner as IT
from heckefusion.combinatorics import mixed_hook_ratio, partitions_of


@dataclass
class TableConfig:
    n: int = 4
    ts: list = field(default_factory=lambda: [3, 5])
    measure: bool = True


def measured_ratio(lam, mu, t):
    setup = IT.induced_setup(lam, mu, z=1, w=t)
    iseq = tuple(range(1, len(lam) + 1))
    jseq = tuple(range(1, lam[1] + 1))
    r_xi = IT.measured_eigenvalue(IT.eigenvector_D(lam, mu, iseq), setup)
    vec, Lam, M = IT.eigenvector_eta(lam, mu, jseq)
    r_eta = IT.measured_eigenvalue(vec, IT.InducedSetup(lam, mu, Lam, M, setup.z, setup.w))
    return r_xi / r_eta


def main(cfg: TableConfig) -> None:
    for total in range(2, cfg.n + 1):
        for l in range(1, total):
            for lam in partitions_of(l):
                for mu in partitions_of(total - l):
                    print(f"lambda={lam}  mu={mu}")
                    for t in cfg.ts:
                        closed = mixed_hook_ratio(lam, mu, t)
                        line = f"  t={t}: {closed}"
                        if cfg.measure:
                            agree = measured_ratio(lam, mu, t) == closed
                            line += f"   measured {'agrees' if agree else 'DIFFERS'}"
                        print(line)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--t", type=int, action="append")
    p.add_argument("--no-measure", action="store_true")
    a = p.parse_args()
    main(TableConfig(a.n, a.t or [3, 5], not a.no_measure))

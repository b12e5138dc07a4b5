"""Time the three constructions of F_Lambda (line limit, transport chain,
and the full eps-field product) for every standard tableau up to a size,
and confirm they agree.

    python scripts/fusion_timings.py --n 5 --tower-max 3
"""

import argparse
import time
from dataclasses import dataclass

from heckefusion import fusion as FU
from heckefusion.combinatorics import partitions_of, standard_tableaux


@dataclass
class TimingConfig:
    n: int = 5
    tower_max: int = 3


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


def line_limit(tab):
    # bypass the cache so the time is the real cost of the limit
    return FU._limit_with_retry(tab, lambda betas: FU._f_factors(tab, betas), FU.DEFAULT)


def main(cfg: TimingConfig) -> None:
    print(f"{'tableau':<22}{'terms':>6}{'line':>9}{'chain':>9}{'tower':>9}  agree")
    for size in range(1, cfg.n + 1):
        for lam in partitions_of(size):
            for tab in standard_tableaux(lam):
                F, t_line = timed(line_limit, tab)
                chain, t_chain = timed(FU.chain_F, tab)
                agree = chain == F
                tower = "-"
                if size <= cfg.tower_max:
                    T, t_tower = timed(FU.fuse_F_via_tower, tab)
                    agree = agree and T == F
                    tower = f"{t_tower:8.3f}s"
                print(f"{str(tab):<22}{len(F):>6}{t_line:8.3f}s{t_chain:8.3f}s{tower:>9}  {agree}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--tower-max", type=int, default=3)
    a = p.parse_args()
    main(TimingConfig(a.n, a.tower_max))

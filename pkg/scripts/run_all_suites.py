"""Run every verification suite and write a JSON report.

    python scripts/run_all_suites.py --jobs 4 --out report.json
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from heckefusion.verify import SUITES, run_suites


@dataclass
class SuitesConfig:
    suites: tuple = SUITES
    lmax: int | None = None
    jobs: int = 1
    out: str | None = None
    timings: bool = True


def main(cfg: SuitesConfig) -> int:
    t0 = time.perf_counter()
    reports = run_suites(cfg.suites, cfg.lmax, cfg.jobs)
    for r in reports:
        print(r.to_text())
    ok = all(r.ok for r in reports)
    print(f"\n{'all suites pass' if ok else 'FAILURES'} in {time.perf_counter() - t0:.1f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"ok": ok, "suites": [r.to_json(cfg.timings) for r in reports]}, fh, indent=2, sort_keys=True)
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suite", action="append", choices=SUITES)
    p.add_argument("--lmax", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    a = p.parse_args()
    sys.exit(main(SuitesConfig(tuple(a.suite) if a.suite else SUITES, a.lmax, a.jobs, a.out)))

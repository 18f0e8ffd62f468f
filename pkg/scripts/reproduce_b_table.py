"""Recompute the b-coefficient table and compare with the closed-form rows."""

import argparse
import time
from dataclasses import dataclass

from flagbundle.diagrams import all_diagrams
from flagbundle.reference import reference_b
from flagbundle.rootsys import b_coefficients


@dataclass
class Config:
    max_rank: int = 8


def main(cfg: Config) -> int:
    start = time.perf_counter()
    bad = 0
    for d in all_diagrams(cfg.max_rank, connected_only=True):
        got, want = b_coefficients(d), reference_b(d)
        mark = "ok" if got == want else "MISMATCH"
        bad += got != want
        print(f"{d.spec:4} {mark:8} {','.join(map(str, got))}")
    print(f"# {time.perf_counter() - start:.2f}s, {bad} mismatches")
    return int(bad > 0)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    raise SystemExit(main(Config(p.parse_args().max_rank)))

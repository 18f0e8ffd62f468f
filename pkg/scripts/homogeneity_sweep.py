"""For every connected diagram and nonempty I, print b - c, dim G/P and the unsplit tags."""

import argparse
import itertools
from dataclasses import dataclass

from flagbundle import bundle
from flagbundle.diagrams import all_diagrams


@dataclass
class Config:
    max_rank: int = 4
    only_with_solutions: bool = False


def main(cfg: Config) -> int:
    failures = 0
    for d in all_diagrams(cfg.max_rank, connected_only=True):
        for size in range(1, d.rank + 1):
            for I in itertools.combinations(range(1, d.rank + 1), size):
                ok = bundle.homogeneity_inequality_1(d, I) and bundle.homogeneity_inequality_2(d, I)
                failures += not ok
                sols = bundle.unsplit_tag_solutions(d, I)
                if cfg.only_with_solutions and not sols:
                    continue
                bc = bundle.rel_canonical_decomposition(d, I)
                print(f"{d.spec}\tI={','.join(map(str, I))}\tb-c={bc}\tdim={bundle.dim_GP(d, I)}"
                      f"\tineq={'ok' if ok else 'FAIL'}\tunsplit={sols}")
    return int(failures > 0)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    p.add_argument("--only-with-solutions", action="store_true")
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_rank, a.only_with_solutions)))

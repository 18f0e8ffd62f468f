"""Flip every low bit of every Cartan entry and report which check catches it."""

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from flagbundle.diagrams import all_diagrams, cartan_matrix
from flagbundle.verify import CHECKS, VerifyConfig, corrupt


@dataclass
class Config:
    max_rank: int = 4
    bits: int = 3


def main(cfg: Config) -> int:
    caught: Counter = Counter()
    missed = []
    for d in all_diagrams(cfg.max_rank, connected_only=True):
        c = cartan_matrix(d)
        for i, j, bit in itertools.product(range(d.rank), range(d.rank), range(cfg.bits)):
            vc = VerifyConfig(rank_max=cfg.max_rank, only=(d.spec,), cartan_overrides={d.spec: corrupt(c, i, j, bit)})
            hit = next((chk.__name__ for chk in CHECKS if not chk(vc).passed), None)
            if hit is None:
                missed.append((d.spec, i + 1, j + 1, bit))
            caught[hit] += 1
    for name, n in caught.most_common():
        print(f"{name}\t{n}")
    print(f"# missed: {missed}")
    return int(bool(missed))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    p.add_argument("--bits", type=int, default=Config.bits)
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_rank, a.bits)))

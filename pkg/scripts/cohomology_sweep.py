"""Tabulate line-bundle cohomology over a box of classes and check its consistency."""

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from flagbundle.cohom import cohomology
from flagbundle.diagrams import parse_diagram
from flagbundle.rootsys import generate
from flagbundle.verify import cohomology_consistent


@dataclass
class Config:
    diagram: str = "A2"
    bound: int = 4
    verbose: bool = False


def main(cfg: Config) -> int:
    rs = generate(parse_diagram(cfg.diagram))
    degrees: Counter = Counter()
    bad = 0
    for lam in itertools.product(range(-cfg.bound, cfg.bound + 1), repeat=rs.rank):
        r = cohomology(rs, lam)
        degrees["vanishing" if r.all_zero else f"h^{r.degree}"] += 1
        msg = cohomology_consistent(rs, lam)
        bad += msg is not None
        if cfg.verbose or msg:
            print(lam, r.to_dict(), msg or "")
    for key in sorted(degrees):
        print(f"{key}\t{degrees[key]}")
    print(f"# {bad} inconsistent classes")
    return int(bad > 0)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("diagram", nargs="?", default=Config.diagram)
    p.add_argument("--bound", type=int, default=Config.bound)
    p.add_argument("--verbose", action="store_true")
    a = p.parse_args()
    raise SystemExit(main(Config(a.diagram, a.bound, a.verbose)))

"""Singularity census table: elimination against closed forms."""
import argparse
import math
import time
from dataclasses import dataclass

from hypocycloids.census import CensusConfig, full_census, predicted
from hypocycloids.curve import CurveSpec


@dataclass
class Config:
    kmax: int = 5
    elimination_max_k: int = 6


def main(cfg: Config) -> None:
    print(f"{'(k,l)':>7} {'deg':>4} {'cusps':>5} {'real':>5} {'nonreal':>7} {'inf':>7} {'alpha':>5}  check   secs")
    for k in range(2, cfg.kmax + 1):
        for l in range(1, k):
            if math.gcd(k, l) != 1:
                continue
            spec = CurveSpec(k, l)
            t = time.perf_counter()
            if k <= cfg.elimination_max_k:
                c = full_census(spec, CensusConfig(max_k=cfg.elimination_max_k))
                check = "ok" if c == predicted(spec) else "MISMATCH"
            else:
                c, check = predicted(spec), "closed"
            inf = f"({c.infinity_type.p},{c.infinity_type.q})"
            print(f"{f'({k},{l})':>7} {c.degree:>4} {c.cusps:>5} {c.nodes_real:>5} {c.nodes_nonreal:>7} "
                  f"{inf:>7} {c.alpha:>5}  {check:8s}{time.perf_counter() - t:5.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=Config.kmax)
    ap.add_argument("--elimination-max-k", type=int, default=Config.elimination_max_k)
    a = ap.parse_args()
    main(Config(a.kmax, a.elimination_max_k))

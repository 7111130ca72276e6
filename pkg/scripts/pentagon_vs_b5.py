"""Low-index subgroup counts of the pentagon Artin group against B5."""
import argparse
import time
from dataclasses import dataclass

from hypocycloids.groups import ArtinGraph, artin_presentation, first_difference, low_index_subgroups


@dataclass
class Config:
    max_index: int = 6


def main(cfg: Config) -> None:
    counts = {}
    for label, graph in [("pentagon", ArtinGraph.cycle(5)), ("B5", ArtinGraph.path(5))]:
        t = time.perf_counter()
        counts[label] = low_index_subgroups(artin_presentation(graph), cfg.max_index)
        print(f"{label:9s} {counts[label]}  ({time.perf_counter() - t:.1f}s)")
    diff = first_difference(counts["pentagon"], counts["B5"])
    print(f"first difference at index {diff}" if diff else "no difference up to this index")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", "--max-index", type=int, default=Config.max_index)
    main(Config(ap.parse_args().max_index))

"""SVG pictures of the real hypocycloids of the case studies."""
import argparse
from dataclasses import dataclass, field
from pathlib import Path

from hypocycloids.curve import CurveSpec, plot_svg


@dataclass
class Config:
    specs: list[tuple[int, int, str]] = field(
        default_factory=lambda: [(2, 1, "plain"), (3, 1, "tilde"), (3, 2, "plain"), (5, 3, "tilde")])
    outdir: Path = Path("results/plots")
    samples: int = 1024


def main(cfg: Config) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for k, l, v in cfg.specs:
        path = cfg.outdir / f"C_{k}_{l}_{v}.svg"
        path.write_text(plot_svg(CurveSpec(k, l, v), cfg.samples))
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", type=Path, default=Config.outdir)
    ap.add_argument("--samples", type=int, default=Config.samples)
    a = ap.parse_args()
    main(Config(outdir=a.outdir, samples=a.samples))

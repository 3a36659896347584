"""Random Reidemeister walk looking for an almost positive diagram of type P2.

Starts from a PD file (default: the bundled P1 diagram of 10_145) and
applies random R1/R2/R3 moves until a diagram with exactly one negative
crossing appears whose negative crossing shares its pair of Seifert circles
with a positive crossing.  With the default seed this reproduces the bundled
``10_145_p2.pd``.

    python3 scripts/walk_search.py [--seed 1] [--start FILE] [--steps N]
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from lagfill.diagram import DiagramError, Positivity, classify, diagram_from_text, seifert_decompose
from lagfill.homflypt import homfly
from lagfill.moves import random_move

DATA = Path(__file__).resolve().parents[1] / "src" / "lagfill" / "data"


def walk(start_text: str, seed: int, steps: int, max_crossings: int = 13):
    rng = random.Random(seed)
    d0 = diagram_from_text(start_text)
    d = d0
    for step in range(steps):
        if rng.random() < 0.001:
            d = d0
        try:
            _, d = random_move(d, rng, max_crossings=max_crossings)
        except DiagramError:
            d = d0
            continue
        if d.c_minus == 1 and classify(d).kind is Positivity.P2:
            return step, d
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--start", type=Path, default=DATA / "10_145_p1.pd")
    ap.add_argument("--steps", type=int, default=2_000_000)
    args = ap.parse_args()
    text = args.start.read_text()
    found = walk(text, args.seed, args.steps)
    if found is None:
        raise SystemExit("no P2 diagram found")
    step, d = found
    same = homfly(d) == homfly(diagram_from_text(text))
    print(f"step {step}: {d.c} crossings, {seifert_decompose(d).s} Seifert circles, HOMFLYPT unchanged: {same}")
    print(d.pd)


if __name__ == "__main__":
    main()

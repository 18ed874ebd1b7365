#!/usr/bin/env python3
"""Regenerate the bundled reference-front CSVs from their closed forms.

Run from the repository root:

    python scripts/make_reference_fronts.py
"""

from pathlib import Path

from fcpso.io import write_front_csv
from fcpso.problems import theoretical_front

OUT = Path(__file__).resolve().parent.parent / "src" / "fcpso" / "data" / "fronts"

FRONTS = [
    ("zdt1", 2),
    ("zdt2", 2),
    ("zdt3", 2),
    ("zdt4", 2),
    ("zdt6", 2),
    ("dtlz1", 3),
    ("dtlz2", 3),
    ("dtlz3", 3),
    ("dtlz4", 3),
    ("dtlz5", 3),
    ("dtlz6", 3),
    ("dtlz7", 3),
]


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, m in FRONTS:
        front = theoretical_front(name, m, n_points=1000)
        path = OUT / f"{name}_{m}.csv"
        write_front_csv(path, front)
        print(f"{path}  ({front.shape[0]} points)")


if __name__ == "__main__":
    main()

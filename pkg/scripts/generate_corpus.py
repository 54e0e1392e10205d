import json
import os
import random
import sys

# --- Adjust path to import from root ---
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(PROJECT_ROOT)
# --- End Path Adjust ---

from src.matroid.constructors import random_integer_matrix, random_multiplicity, random_rank_table
from src.utils.config_loader import get_settings

GRAPHS = {
    "triangle": (3, [[0, 1], [1, 2], [2, 0]]),
    "k4": (4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]),
    "path_two_doubled": (3, [[0, 1], [0, 1], [1, 2], [1, 2]]),
    "path_three_doubled": (4, [[0, 1], [0, 1], [1, 2], [1, 2], [2, 3], [2, 3]]),
    "four_cycle_one_doubled": (4, [[0, 1], [0, 1], [1, 2], [2, 3], [3, 0]]),
    "four_cycle_all_doubled": (4, [[0, 1], [0, 1], [1, 2], [1, 2], [2, 3], [2, 3], [3, 0], [3, 0]]),
    "triangle_with_loop": (3, [[0, 1], [1, 2], [2, 0], [1, 1]]),
}


def uniform_specs():
    """Every U_{r,n} with n <= 7."""
    for n in range(8):
        for r in range(n + 1):
            yield f"uniform_{r}_{n}", {"matroid": {"type": "uniform", "r": r, "n": n}}


def graph_specs():
    for name, (vertices, edges) in GRAPHS.items():
        yield f"graphic_{name}", {"matroid": {"type": "graphic", "vertices": vertices, "edges": edges}}
        yield f"bond_{name}", {"matroid": {"type": "bond", "vertices": vertices, "edges": edges}}


def matrix_specs(rng, count):
    for index in range(count):
        d, n = rng.randint(1, 4), rng.randint(1, 8)
        spec = random_integer_matrix(d, n, rng)
        rows = [[str(v) for v in row] for row in spec.rows]
        yield f"matrix_{index:03d}", {"matroid": {"type": "integer_matrix", "matrix": rows}}


def rank_table_specs(rng, count):
    """Each random rank table appears twice: trivial and random multiplicity."""
    for index in range(count):
        matroid = random_rank_table(rng.randint(1, 6), rng)
        description = {"type": "rank_table", "n": matroid.n, "rank": list(matroid.rank_table)}
        yield f"rank_table_{index:03d}_trivial", {"matroid": description}
        weighted = random_multiplicity(matroid, rng)
        yield f"rank_table_{index:03d}_weighted", {
            "matroid": description,
            "multiplicity": {"type": "table", "values": [str(v) for v in weighted.table]},
        }


def main():
    """Writes the verification corpus as one spec file per instance."""
    print("\n--- Generating Verification Corpus ---")
    settings = get_settings()
    rng = random.Random(settings.random_seed)
    os.makedirs(settings.corpus_dir, exist_ok=True)
    written = 0
    try:
        families = [
            uniform_specs(),
            graph_specs(),
            matrix_specs(rng, settings.corpus_random_matrices),
            rank_table_specs(rng, settings.corpus_random_rank_tables),
        ]
        for family in families:
            for name, spec in family:
                with open(os.path.join(settings.corpus_dir, f"{name}.json"), "w", encoding="utf-8") as handle:
                    json.dump(spec, handle, indent=2)
                written += 1
        print(f"✅ Wrote {written} spec files to '{settings.corpus_dir}'.")
    except OSError as e:
        print(f"❌ Could not write the corpus: {e}")
        sys.exit(1)


if __name__ == '__main__':
    main()

# Builds the acceptance corpus: all uniform matroids up to 7 elements, a handful of
# small graphs with doubled edges (and their bond matroids), random integer matrices
# with entries in [-5, 5], and random rank tables with trivial and random multiplicities.
# The seed comes from config.ini, so the corpus is identical on every run.

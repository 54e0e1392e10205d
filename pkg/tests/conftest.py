import os
import random
import sys

import pytest

# --- Adjust path to import from root ---
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(PROJECT_ROOT)
# --- End Path Adjust ---

from src.matroid.constructors import (
    IntegerMatrixSpec, MultigraphSpec, direct_sum, from_integer_matrix, graphic, random_integer_matrix,
    random_multiplicity, random_rank_table, uniform,
)
from src.matroid.multiplicity import MultiplicityMatroid, trivial_multiplicity
from src.utils.guards import set_max_n_override

FOUR_CYCLE_ONE_DOUBLED = MultigraphSpec(4, ((0, 1), (0, 1), (1, 2), (2, 3), (3, 0)))
TRIANGLE = MultigraphSpec(3, ((0, 1), (1, 2), (2, 0)))
K4 = MultigraphSpec(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def columns_two_three():
    """Columns (2) and (3) in Z^1."""
    return from_integer_matrix(IntegerMatrixSpec(((2, 3),)))


def columns_square():
    """Columns (1,0) and (2,2) in Z^2."""
    return from_integer_matrix(IntegerMatrixSpec(((1, 2), (0, 2))))


def u12_heavy_top():
    """U_{1,2} with m(X) = 5 and every other value 1."""
    return MultiplicityMatroid(uniform(1, 2), [1, 1, 1, 5])


def two_parallel_pairs():
    return direct_sum(uniform(1, 2), uniform(1, 2))


def build_small_corpus(seed=7):
    """Named multiplicity matroids with n <= 6 covering loops, coloops and nontrivial m."""
    rng = random.Random(seed)
    corpus = []
    for n in range(6):
        for r in range(n + 1):
            corpus.append((f"U_{r},{n}", trivial_multiplicity(uniform(r, n))))
    corpus.append(("triangle", trivial_multiplicity(graphic(TRIANGLE))))
    corpus.append(("k4", trivial_multiplicity(graphic(K4))))
    corpus.append(("four_cycle_one_doubled", trivial_multiplicity(graphic(FOUR_CYCLE_ONE_DOUBLED))))
    corpus.append(("two_parallel_pairs", trivial_multiplicity(two_parallel_pairs())))
    corpus.append(("columns_two_three", columns_two_three()))
    corpus.append(("columns_square", columns_square()))
    corpus.append(("u12_heavy_top", u12_heavy_top()))
    for index in range(8):
        spec = random_integer_matrix(rng.randint(1, 3), rng.randint(1, 5), rng)
        corpus.append((f"matrix_{index}", from_integer_matrix(spec)))
    for index in range(8):
        matroid = random_rank_table(rng.randint(1, 5), rng)
        corpus.append((f"rank_table_{index}", random_multiplicity(matroid, rng)))
    return corpus


SMALL_CORPUS = build_small_corpus()


@pytest.fixture
def small_corpus():
    return SMALL_CORPUS


@pytest.fixture(autouse=True)
def reset_guard_override():
    yield
    set_max_n_override(None)

"""Builders for matroids and multiplicity matroids from user-level descriptions."""

import itertools
import logging
from dataclasses import dataclass

import networkx as nx
from networkx.utils import UnionFind

from src.matroid import subsets
from src.matroid.core import Matroid, validate_rank_axioms
from src.matroid.integer_matrix import bareiss_rank, column_submatrix, minor_gcd, snf_multiplicity
from src.matroid.multiplicity import MultiplicityMatroid
from src.utils.errors import InputError, RankAxiomError
from src.utils.guards import check_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultigraphSpec:
    """Vertex count plus an edge list; edge index is element index. Loops and parallel edges allowed."""
    vertices: int
    edges: tuple

    def __post_init__(self):
        for index, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise InputError(f"edge {index} = ({u}, {v}) has an endpoint outside 0..{self.vertices - 1}")

    def to_networkx(self, mask=None):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertices))
        chosen = range(len(self.edges)) if mask is None else subsets.elements(mask)
        graph.add_edges_from((self.edges[e][0], self.edges[e][1], e) for e in chosen)
        return graph


@dataclass(frozen=True)
class IntegerMatrixSpec:
    """d rows by n columns of integers; column index is element index."""
    rows: tuple

    def __post_init__(self):
        if not self.rows:
            raise InputError("an integer matrix needs at least one row")
        widths = {len(row) for row in self.rows}
        if len(widths) != 1:
            raise InputError(f"matrix rows have differing lengths {sorted(widths)}")

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])


def uniform(r, n):
    if not 0 <= r <= n:
        raise InputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    check_size(n, 'max_n', 'uniform')
    return Matroid(n, [min(subsets.size(a), r) for a in range(1 << n)])


def _forest_rank(edges, mask):
    forest = UnionFind()
    rank = 0
    for e in subsets.elements(mask):
        u, v = edges[e]
        if forest[u] != forest[v]:
            forest.union(u, v)
            rank += 1
    return rank


def graphic(graph):
    """Cycle matroid: rank(A) = |V| - #components of (V, A)."""
    check_size(len(graph.edges), 'max_n', 'graphic')
    edges = graph.edges
    return Matroid(len(edges), [_forest_rank(edges, a) for a in range(1 << len(edges))])


def bond(graph):
    return graphic(graph).dual()


def from_rank_table(n, table):
    table = [int(v) for v in table]
    violations = validate_rank_axioms(n, table)
    if violations:
        raise RankAxiomError(violations)
    return Matroid(n, table)


def direct_sum(first, second):
    low = first.ground
    ranks = [first.rank_table[a & low] + second.rank_table[a >> first.n] for a in range(1 << (first.n + second.n))]
    return Matroid(first.n + second.n, ranks)


def from_integer_matrix(spec, multiplicity_method="snf"):
    """Rank over Q and gcd-of-maximal-minors multiplicity for every column subset."""
    rows = [[int(v) for v in row] for row in spec.rows]
    d, n = len(rows), len(rows[0])
    check_size(n, 'matrix_max_columns', 'from_integer_matrix')
    check_size(d, 'matrix_max_rows', 'from_integer_matrix')
    ranks, multiplicities = [], []
    for mask in range(1 << n):
        sub = column_submatrix(rows, list(subsets.elements(mask)))
        r = bareiss_rank(sub) if mask else 0
        ranks.append(r)
        if mask == 0:
            multiplicities.append(1)
        elif multiplicity_method == "snf":
            multiplicities.append(snf_multiplicity(sub))
        elif multiplicity_method == "minors":
            multiplicities.append(minor_gcd(sub, r))
        else:
            raise InputError(f"unknown multiplicity method {multiplicity_method!r}")
    logger.debug("built %dx%d matrix matroid of rank %d", d, n, ranks[-1])
    return MultiplicityMatroid(Matroid(n, ranks), multiplicities)


# --- random instances for the verification corpus ---

def random_rank_table(n, rng, max_attempts=10000):
    """Rejection-samples a rank table satisfying the local rank axioms."""
    for _ in range(max_attempts):
        table = [0] * (1 << n)
        feasible = True
        for a in range(1, 1 << n):
            below = [a ^ 1 << e for e in subsets.elements(a)]
            low = max(table[b] for b in below)
            high = min(table[b] for b in below) + 1
            for e, f in itertools.combinations(list(subsets.elements(a)), 2):
                high = min(high, table[a ^ 1 << e] + table[a ^ 1 << f] - table[a ^ 1 << e ^ 1 << f])
            if high < low:
                feasible = False
                break
            table[a] = rng.randint(low, high)
        if feasible and not validate_rank_axioms(n, table):
            return Matroid(n, table)
    raise InputError(f"no valid rank table on n={n} after {max_attempts} attempts")


def random_integer_matrix(d, n, rng, low=-5, high=5):
    return IntegerMatrixSpec(tuple(tuple(rng.randint(low, high) for _ in range(n)) for _ in range(d)))


def random_multiplicity(matroid, rng, low=1, high=9):
    return MultiplicityMatroid(matroid, [rng.randint(low, high) for _ in range(1 << matroid.n)])

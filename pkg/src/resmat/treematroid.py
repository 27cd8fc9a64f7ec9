"""Tree structure analysis and the enumeration-free tree independence oracle.

A branch path (leg) at a vertex v of degree >= 3 is a maximal hanging path:
internal vertices of degree 2, ending in a leaf, not containing v. Vertices
of degree >= 3 owning at least one leg are the exterior major vertices. A
set is independent exactly when it picks at most one vertex per leg and, at
every exterior major, leaves at least one leg untouched; everything off the
legs is a loop.
"""

from dataclasses import dataclass

from .errors import NotATreeError, PathGraphError
from .graph import Graph, classify
from .setfamily import SetFamily, mask_of

CLASS_EXTERIOR_MAJOR = "exterior major"
CLASS_MAJOR_NOT_EXTERIOR = "major not exterior"
CLASS_LEG = "branch path vertex"
CLASS_CONNECTOR = "internal connector"


@dataclass(frozen=True)
class TreeDecomposition:
    """Exterior major vertices with their branch paths, as bitmasks."""

    graph: Graph
    exterior_majors: tuple          # vertex indices, ascending
    branch_paths: tuple             # tuple of tuples of leg masks, parallel to exterior_majors
    leg_mask: int                   # union of all legs
    degrees: tuple

    @property
    def non_leg_mask(self) -> int:
        return ((1 << self.graph.n) - 1) & ~self.leg_mask

    def legs_at(self, v):
        return self.branch_paths[self.exterior_majors.index(v)]


def decompose_tree(g: Graph) -> TreeDecomposition:
    """Walk from each leaf toward the first vertex of degree >= 3.

    The walked vertices form one leg of that vertex. A walk that crosses the
    whole tree without meeting such a vertex means the tree is a path, which
    is rejected along with all trees on fewer than 4 vertices.
    """
    flags = classify(g)
    if not flags.is_tree:
        raise NotATreeError("input graph is not a tree")
    if flags.is_path:
        raise PathGraphError(
            "paths are rejected: their minimal resolving sets do not share "
            "one cardinality, so the independence system is not a matroid")
    if g.n < 4:
        raise NotATreeError("trees on fewer than 4 vertices are out of scope")

    adj = g.adjacency()
    deg = tuple(len(a) for a in adj)
    legs_by_major = {}
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, adj[leaf][0]
        while deg[cur] == 2:
            walk.append(cur)
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        # deg[cur] == 1 would mean a path, excluded above
        legs_by_major.setdefault(cur, []).append(mask_of(walk))

    majors = tuple(sorted(legs_by_major))
    paths = tuple(tuple(sorted(legs_by_major[v])) for v in majors)
    leg_mask = 0
    for group in paths:
        for leg in group:
            leg_mask |= leg
    return TreeDecomposition(graph=g, exterior_majors=majors, branch_paths=paths,
                             leg_mask=leg_mask, degrees=deg)


def tree_is_independent(td: TreeDecomposition, mask: int) -> bool:
    """Constant-size bit tests per leg; no enumeration of resolving sets."""
    if mask & td.non_leg_mask:
        return False
    for group in td.branch_paths:
        occupied = 0
        for leg in group:
            hit = (mask & leg).bit_count()
            if hit > 1:
                return False
            occupied += hit
        if occupied >= len(group) and len(group) > 0:
            # all legs of this major occupied: one must stay empty
            if occupied == len(group):
                return False
    return True


def tree_rank(td: TreeDecomposition) -> int:
    """Sum over exterior majors of (leg count - 1)."""
    return sum(len(group) - 1 for group in td.branch_paths)


def tree_loops(td: TreeDecomposition) -> int:
    """Every vertex off the legs is a singleton dependent set."""
    return td.non_leg_mask


def tree_hyperplanes(td: TreeDecomposition) -> SetFamily:
    """One hyperplane per unordered pair of legs at the same exterior major:
    the complement of the two legs' union."""
    full = (1 << td.graph.n) - 1
    masks = []
    for group in td.branch_paths:
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                masks.append(full & ~(group[i] | group[j]))
    return SetFamily(masks, td.graph.labels)


def tree_dual_circuits(td: TreeDecomposition) -> SetFamily:
    """Complements of the hyperplanes: unions of two legs at one major."""
    masks = []
    for group in td.branch_paths:
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                masks.append(group[i] | group[j])
    return SetFamily(masks, td.graph.labels)


def classification_table(td: TreeDecomposition):
    """Per-vertex rows (label, classification, number of branch paths)."""
    g = td.graph
    rows = []
    leg_count = {v: len(td.legs_at(v)) for v in td.exterior_majors}
    for v in range(g.n):
        if v in leg_count:
            rows.append((g.labels[v], CLASS_EXTERIOR_MAJOR, leg_count[v]))
        elif td.degrees[v] >= 3:
            rows.append((g.labels[v], CLASS_MAJOR_NOT_EXTERIOR, 0))
        elif td.leg_mask >> v & 1:
            rows.append((g.labels[v], CLASS_LEG, 0))
        else:
            rows.append((g.labels[v], CLASS_CONNECTOR, 0))
    return rows

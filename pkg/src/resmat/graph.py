"""Simple undirected graphs: parsing, family generators, BFS distances.

Vertices are dense integer indices internally; string labels exist only at
the I/O boundary. Edge sets are kept as sorted index pairs so that emitted
edge lists are deterministic.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import GraphParseError


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with labeled vertices.

    Safe to share across threads once constructed.
    """

    n: int
    labels: tuple
    edges: frozenset  # frozenset of (i, j) pairs with i < j

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("vertex count must be positive")
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise ValueError("labels must be distinct and one per vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v})")

    @property
    def m(self):
        return len(self.edges)

    def adjacency(self):
        """Adjacency lists, sorted for determinism."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self):
        return sorted(self.edges)

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex label {label!r}") from None


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path distances.

    Disconnected pairs hold the sentinel value ``n``, which is strictly
    larger than any real distance and keeps the matrix integral.
    """

    n: int
    rows: tuple  # tuple of n tuples of n ints

    @property
    def infinity(self):
        return self.n

    def __getitem__(self, pair):
        u, v = pair
        return self.rows[u][v]

    @property
    def connected(self) -> bool:
        return all(d < self.n for row in self.rows for d in row)


def graph_from_edges(n, edge_list, labels=None):
    """Build a Graph from 0-based index pairs, validating simplicity."""
    if labels is None:
        labels = tuple(f"v{i + 1}" for i in range(n))
    edges = set()
    for u, v in edge_list:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise ValueError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n=n, labels=tuple(labels), edges=frozenset(edges))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Line 1 is ``n m``; an optional ``labels: l1 ... ln`` line may follow;
    then m lines ``label_u label_v``. Labels are auto-registered in
    first-appearance order when no labels line is given; leftover isolated
    vertices get default names v1..vn. ``#`` starts a comment.
    """
    lines = text.splitlines()
    content = []  # (lineno, stripped) with comments/blanks removed
    for i, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            content.append((i, stripped))
    if not content:
        raise GraphParseError("empty graph file")

    lineno, header = content[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError("expected header 'n m'", line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError("non-integer header 'n m'", line=lineno) from None
    if n <= 0 or m < 0:
        raise GraphParseError("need n > 0 and m >= 0", line=lineno)

    body = content[1:]
    fixed_labels = None
    if body and body[0][1].startswith("labels:"):
        lineno, lab_line = body[0]
        fixed_labels = lab_line[len("labels:"):].split()
        if len(fixed_labels) != n or len(set(fixed_labels)) != n:
            raise GraphParseError(f"labels line must name {n} distinct vertices",
                                  line=lineno)
        body = body[1:]

    if len(body) != m:
        raise GraphParseError(f"declared {m} edges but found {len(body)} edge lines")

    index = {}
    if fixed_labels is not None:
        index = {lab: i for i, lab in enumerate(fixed_labels)}

    edges = set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError("expected 'label_u label_v'", line=lineno)
        endpoint = []
        for lab in parts:
            if lab not in index:
                if fixed_labels is not None:
                    raise GraphParseError(f"unknown label {lab!r}", line=lineno)
                if len(index) >= n:
                    raise GraphParseError(
                        f"label {lab!r} would exceed the declared {n} vertices",
                        line=lineno)
                index[lab] = len(index)
            endpoint.append(index[lab])
        u, v = endpoint
        if u == v:
            raise GraphParseError(f"self-loop at {parts[0]!r}", line=lineno)
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise GraphParseError(f"duplicate edge {parts[0]} {parts[1]}", line=lineno)
        edges.add(e)

    if fixed_labels is not None:
        labels = fixed_labels
    else:
        labels = [None] * n
        for lab, i in index.items():
            labels[i] = lab
        used = set(index)
        k = 1
        for i in range(n):
            if labels[i] is None:
                while f"v{k}" in used:
                    k += 1
                labels[i] = f"v{k}"
                used.add(f"v{k}")
    return Graph(n=n, labels=tuple(labels), edges=frozenset(edges))


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph, with a labels line and canonical edge order."""
    out = [f"{g.n} {g.m}", "labels: " + " ".join(g.labels)]
    for u, v in g.sorted_edges():
        out.append(f"{g.labels[u]} {g.labels[v]}")
    return "\n".join(out) + "\n"


def gen_family(kind: str, *params: int) -> Graph:
    """Canonical labeled instances of the standard families.

    Wheels put the rim at indices 0..n-1 labeled v1..vn and the hub last,
    labeled "v", matching the usual distance-table layout.
    """
    if kind == "path":
        (n,) = params
        if n < 1:
            raise ValueError("path needs n >= 1")
        return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "wheel":
        (n,) = params
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
        labels = tuple(f"v{i + 1}" for i in range(n)) + ("v",)
        return graph_from_edges(n + 1, edges, labels=labels)
    if kind == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete_bipartite needs m, n >= 1")
        labels = tuple(f"u{i + 1}" for i in range(m)) + tuple(f"w{j + 1}" for j in range(n))
        edges = [(i, m + j) for i in range(m) for j in range(n)]
        return graph_from_edges(m + n, edges, labels=labels)
    if kind == "star":
        (n,) = params
        if n < 1:
            raise ValueError("star needs n >= 1 leaves")
        labels = ("c",) + tuple(f"v{i + 1}" for i in range(n))
        return graph_from_edges(n + 1, [(0, i + 1) for i in range(n)], labels=labels)
    raise ValueError(f"unknown family kind {kind!r}")


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; sentinel n for unreachable pairs."""
    adj = g.adjacency()
    inf = g.n
    rows = []
    for s in range(g.n):
        dist = [inf] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(n=g.n, rows=tuple(rows))


@dataclass(frozen=True)
class GraphClass:
    is_connected: bool
    is_tree: bool
    is_path: bool


def classify(g: Graph) -> GraphClass:
    """Connectivity / tree / path flags.

    A tree is a connected graph with n-1 edges; a path is a tree whose
    maximum degree is at most 2.
    """
    dm = distance_matrix(g)
    connected = dm.connected
    is_tree = connected and g.m == g.n - 1
    degrees = [0] * g.n
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    is_path = is_tree and max(degrees, default=0) <= 2
    return GraphClass(is_connected=connected, is_tree=is_tree, is_path=is_path)

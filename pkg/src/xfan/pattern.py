"""Mutation-tree traversal carrying tropical and polynomial seed data.

Each node of the n-regular tree holds the mutated exchange matrix B_t, the
c-matrix C_t of the pattern whose initial matrix is -B^T (the one whose rows
cut out the cones downstream), the g-matrix G_t of the pattern for B itself,
and the coefficient polynomials F_t. One traversal carries both dual
patterns: mutation commutes with (B -> -B^T), so the companion c-matrix
for B (which drives the polynomial and g recurrences) rides along in the
same node.

Two independent routes compute every G_t: the inverse transpose of C_t,
and a direct column recurrence. They must agree, and every c-matrix column
must be sign coherent; violations raise immediately since the supporting
theory guarantees both.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor

from .errors import (
    DualityViolation,
    ExhaustionCapExceeded,
    IndexOutOfRange,
    SignCoherenceViolation,
)
from .intmat import IntMatrix
from .laurent import LaurentPolynomial, divide_exact
from .seed import ExchangeMatrix, mutate

DEFAULT_DEPTH = 12


class PatternNode:
    """One vertex of the mutation tree.

    Fields: ``B_t`` (ExchangeMatrix), ``C_t`` (c-matrix, initial -B^T
    pattern), ``G_t`` (g-matrix, initial B pattern), ``F_t`` (tuple of
    LaurentPolynomials, or None when polynomial tracking was disabled),
    ``history`` (1-based directions from the root), and ``companion_c``
    (c-matrix of the B pattern; equals C_t when B is skew-symmetric).
    """

    __slots__ = ("B_t", "C_t", "G_t", "F_t", "history", "companion_c")

    def __init__(self, B_t, C_t, G_t, F_t, history, companion_c):
        object.__setattr__(self, "B_t", B_t)
        object.__setattr__(self, "C_t", C_t)
        object.__setattr__(self, "G_t", G_t)
        object.__setattr__(self, "F_t", F_t)
        object.__setattr__(self, "history", tuple(history))
        object.__setattr__(self, "companion_c", companion_c)

    def __setattr__(self, name, value):
        raise AttributeError("PatternNode is immutable")

    def key(self):
        """Dedup key: the pair (B_t, C_t) verbatim."""
        return (self.B_t.B.entries, self.C_t.entries)

    def __repr__(self):
        return f"PatternNode(history={self.history})"


class PatternCatalog:
    """All visited nodes of one bounded traversal, in BFS order."""

    __slots__ = ("root", "nodes", "depth", "complete", "_index")

    def __init__(self, root, nodes, depth, complete):
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "nodes", tuple(nodes))
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "complete", complete)
        object.__setattr__(self, "_index", {n.key(): i for i, n in enumerate(nodes)})

    def __setattr__(self, name, value):
        raise AttributeError("PatternCatalog is immutable")

    def __len__(self):
        return len(self.nodes)

    def find(self, key):
        i = self._index.get(key)
        return None if i is None else self.nodes[i]

    def seed_class_count(self):
        """Seeds up to simultaneous relabeling.

        Two nodes describe the same unlabelled seed when a permutation P of
        the directions turns one into the other: B -> P^T.B.P together with
        C -> C.P (columns are attached to directions, rows live in the fixed
        root basis). Counts orbits of the visited node set.
        """
        n = self.root.n
        perms = list(itertools.permutations(range(n)))
        all_keys = set(self._index)
        seen = set()
        count = 0
        for node in self.nodes:
            if node.key() in seen:
                continue
            count += 1
            b = node.B_t.B.entries
            c = node.C_t.entries
            for p in perms:
                bp = tuple(tuple(b[p[i]][p[j]] for j in range(n)) for i in range(n))
                cp = tuple(tuple(c[i][p[j]] for j in range(n)) for i in range(n))
                if (bp, cp) in all_keys:
                    seen.add((bp, cp))
        return count


def initial_node(em, with_polynomials=True):
    """The root: C = G = identity, every F = 1, empty history."""
    n = em.n
    ident = IntMatrix.identity(n)
    polys = tuple(LaurentPolynomial.one(n) for _ in range(n)) if with_polynomials else None
    return PatternNode(em, ident, ident, polys, (), ident)


def mutate_node(node, k):
    """Mutate every field of a node in direction k (1-based).

    Raises SignCoherenceViolation or DualityViolation when the mutated data
    breaks an invariant; both indicate an implementation bug, not bad input.
    """
    n = node.B_t.n
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"direction {k} outside 1..{n}")
    kk = k - 1
    b = node.B_t.B.entries
    new_em = mutate(node.B_t, k)
    # c-matrix recurrence: the coefficient column k flips, every other
    # column picks up a rectified multiple of column k. The exchange entries
    # belong to the same pattern as the c-matrix, so C_t (initial -B^T) uses
    # the entries of -B_t^T and the companion (initial B) uses B_t itself.
    new_c = _mutate_c(node.C_t, lambda r, c_: -b[c_][r], kk, n)
    new_cb = _mutate_c(node.companion_c, lambda r, c_: b[r][c_], kk, n)
    _check_coherent(new_c)
    _check_coherent(new_cb)
    new_g = _mutate_g(node.G_t, b, node.companion_c, kk, n)
    dual = new_c.transpose().inverse()
    if not dual.is_integral() or dual.to_int_matrix() != new_g:
        raise DualityViolation(
            f"g-matrix disagrees with the inverse transposed c-matrix at history {node.history + (k,)}"
        )
    new_f = None
    if node.F_t is not None:
        new_f = _mutate_f(node.F_t, b, node.companion_c, kk, n)
    return PatternNode(new_em, new_c, new_g, new_f, node.history + (k,), new_cb)


def _mutate_c(cmat, exchange_entry, kk, n):
    e = cmat.entries
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        cik = e[i][kk]
        s = 1 if cik > 0 else (-1 if cik < 0 else 0)
        for j in range(n):
            if j == kk:
                out[i][j] = -cik
            else:
                out[i][j] = e[i][j] + s * max(cik * exchange_entry(kk, j), 0)
    return IntMatrix(out)


def _column_sign(cmat, kk, n):
    pos = any(cmat.entries[i][kk] > 0 for i in range(n))
    neg = any(cmat.entries[i][kk] < 0 for i in range(n))
    if pos and neg or not (pos or neg):
        raise SignCoherenceViolation(f"column {kk + 1} has mixed signs")
    return 1 if pos else -1


def _mutate_g(gmat, b, companion_c, kk, n):
    # independent route: right-multiply by the elementary matrix whose k-th
    # column rectifies -eps * B column k, eps being the sign of the
    # companion c-matrix column k
    eps = _column_sign(companion_c, kk, n)
    g = gmat.entries
    out = [list(row) for row in g]
    for i in range(n):
        acc = -g[i][kk]
        for j in range(n):
            if j != kk:
                acc += g[i][j] * max(0, -eps * b[j][kk])
        out[i][kk] = acc
    return IntMatrix(out)


def _mutate_f(polys, b, companion_c, kk, n):
    pos = LaurentPolynomial.monomial(
        n, tuple(max(companion_c.entries[i][kk], 0) for i in range(n))
    )
    neg = LaurentPolynomial.monomial(
        n, tuple(max(-companion_c.entries[i][kk], 0) for i in range(n))
    )
    for i in range(n):
        bik = b[i][kk]
        if bik > 0:
            pos = pos * polys[i] ** bik
        elif bik < 0:
            neg = neg * polys[i] ** (-bik)
    exchanged = divide_exact(pos + neg, polys[kk])
    if exchanged.constant_term() != 1:
        raise DualityViolation("mutated coefficient polynomial lost its constant term 1")
    return tuple(
        exchanged if i == kk else polys[i] for i in range(n)
    )


def _check_coherent(cmat):
    for j in range(cmat.cols):
        col = cmat.col(j)
        pos = any(x > 0 for x in col)
        neg = any(x < 0 for x in col)
        if (pos and neg) or not (pos or neg):
            raise SignCoherenceViolation(f"c-matrix column {j + 1} has mixed signs")


def enumerate_pattern(
    em,
    max_depth=DEFAULT_DEPTH,
    with_polynomials=True,
    threads=1,
    node_cap=None,
):
    """BFS over the mutation tree with verbatim (B_t, C_t) deduplication.

    Immediate back-mutation is skipped; ties among directions break by
    ascending index, so the catalog order is deterministic. ``max_depth``
    of None removes the depth bound (pair it with ``node_cap``; the cap
    raises ExhaustionCapExceeded if the frontier is still alive when it
    trips). ``threads`` > 1 expands each BFS round in a thread pool; rounds
    are merged in frontier order, so the catalog does not depend on the
    thread count.

    Returns a PatternCatalog whose ``complete`` flag is set only when a
    frontier emptied before the depth bound, meaning every seed was seen.
    """
    if not isinstance(em, ExchangeMatrix):
        raise ValueError("enumerate_pattern wants a validated ExchangeMatrix")
    if max_depth is not None and max_depth < 0:
        raise ValueError("max_depth must be nonnegative or None")
    root = initial_node(em, with_polynomials=with_polynomials)
    nodes = [root]
    seen = {root.key()}
    frontier = [root]
    depth = 0
    complete = False
    n = em.n
    pool = ThreadPoolExecutor(max_workers=threads) if threads and threads > 1 else None
    try:
        while frontier:
            if max_depth is not None and depth >= max_depth:
                break
            depth += 1

            def expand(parent):
                children = []
                last = parent.history[-1] if parent.history else 0
                for k in range(1, n + 1):
                    if k == last:
                        continue
                    children.append(mutate_node(parent, k))
                return children

            if pool is not None:
                batches = list(pool.map(expand, frontier))
            else:
                batches = [expand(parent) for parent in frontier]
            next_frontier = []
            for batch in batches:
                for child in batch:
                    key = child.key()
                    if key in seen:
                        continue
                    seen.add(key)
                    nodes.append(child)
                    next_frontier.append(child)
            if node_cap is not None and len(nodes) > node_cap:
                raise ExhaustionCapExceeded(
                    f"more than {node_cap} seeds before the frontier emptied"
                )
            frontier = next_frontier
            if not frontier:
                complete = True
    finally:
        if pool is not None:
            pool.shutdown(wait=False)
    return PatternCatalog(em, nodes, depth, complete)


def positive_c_vectors(catalog):
    """All distinct c-matrix columns with every entry nonnegative.

    Returned sorted. Meaningful as the full positive-root list only when the
    catalog is complete; on a truncated catalog it is just the visited part.
    """
    found = set()
    for node in catalog.nodes:
        for j in range(node.C_t.cols):
            col = node.C_t.col(j)
            if all(x >= 0 for x in col):
                found.add(col)
    return tuple(sorted(found))

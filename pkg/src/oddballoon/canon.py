"""Canonical keys and isomorphism tests.

Two routes share the key space via a leading tag byte: forests get a
center-rooted subtree code (linear time, exact), everything else goes
through partition refinement with individualization and takes the
lexicographically least adjacency bit-matrix over the refined orderings.
A forest is never isomorphic to a graph with a cycle, so the tag keeps
the equal-iff-isomorphic contract across both routes.
"""
from __future__ import annotations

from functools import lru_cache

from .graphs import (
    CapacityError,
    Graph,
    bit_indices,
    connected_components,
    induced,
    is_forest,
    iter_bits,
    relabel,
)

CANON_VERTEX_CAP = 16


def _tree_centers(rows: list[int], comp: list[int]) -> list[int]:
    """Centers of a tree given as local adjacency rows over comp indices."""
    n = len(comp)
    if n == 1:
        return [0]
    deg = [rows[i].bit_count() for i in range(n)]
    remaining = n
    layer = [i for i in range(n) if deg[i] <= 1]
    alive = [True] * n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for u in iter_bits(rows[v]):
                if alive[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [i for i in range(n) if alive[i]]


def _rooted_code(rows: list[int], root: int, parent: int) -> bytes:
    kids = sorted(
        _rooted_code(rows, u, root) for u in iter_bits(rows[root]) if u != parent
    )
    return b"(" + b"".join(kids) + b")"


def _forest_key(g: Graph) -> bytes:
    comps = connected_components(g)
    codes = []
    for comp_mask in comps:
        verts = bit_indices(comp_mask)
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            for u in iter_bits(g.rows[v] & comp_mask):
                rows[pos[v]] |= 1 << pos[u]
        centers = _tree_centers(rows, verts)
        codes.append(min(_rooted_code(rows, c, -1) for c in centers))
    codes.sort()
    return b"T" + g.n.to_bytes(2, "big") + b"|".join(codes)


def _pack_bits(bits: list[int]) -> bytes:
    out = bytearray()
    acc = 0
    k = 0
    for b in bits:
        acc = (acc << 1) | b
        k += 1
        if k == 8:
            out.append(acc)
            acc = 0
            k = 0
    if k:
        out.append(acc << (8 - k))
    return bytes(out)


def _matrix_key(g: Graph, order: list[int]) -> bytes:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    bits = []
    for i in range(g.n):
        row = g.rows[order[i]]
        for j in range(i + 1, g.n):
            bits.append(row >> order[j] & 1)
    return _pack_bits(bits)


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement: split cells by neighbor counts into each cell,
    fragments ordered by count.  Deterministic and isomorphism-equivariant."""
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            new_cells: list[int] = []
            for cell in cells:
                if cell & (cell - 1) == 0:  # singleton
                    new_cells.append(cell)
                    continue
                buckets: dict[int, int] = {}
                m = cell
                while m:
                    b = m & -m
                    m ^= b
                    cnt = (rows[b.bit_length() - 1] & splitter).bit_count()
                    buckets[cnt] = buckets.get(cnt, 0) | b
                if len(buckets) == 1:
                    new_cells.append(cell)
                else:
                    new_cells.extend(mask for _, mask in sorted(buckets.items()))
                    changed = True
            cells = new_cells
            if changed:
                break
    return cells


def _ir_search(g: Graph) -> tuple[bytes, list[int]]:
    """Minimum adjacency-matrix key over refined orderings, with the order."""
    n = g.n
    if n == 0:
        return b"", []
    degs: dict[int, int] = {}
    for v in range(n):
        d = g.rows[v].bit_count()
        degs[d] = degs.get(d, 0) | (1 << v)
    cells = [mask for _, mask in sorted(degs.items())]
    best: list[tuple[bytes, list[int]] | None] = [None]

    def descend(cells: list[int]) -> None:
        cells = _refine(g.rows, cells)
        target = -1
        for i, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = i
                break
        if target == -1:
            order = [cell.bit_length() - 1 for cell in cells]
            key = _matrix_key(g, order)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, order)
            return
        cell = cells[target]
        for v in bit_indices(cell):
            descend(cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1 :])

    descend(cells)
    assert best[0] is not None
    return best[0]


def _ir_key(g: Graph) -> bytes:
    key, _ = _ir_search(g)
    return b"G" + g.n.to_bytes(2, "big") + key


@lru_cache(maxsize=1 << 18)
def canonical_key_any(g: Graph) -> bytes:
    """Canonical key without the public vertex cap (internal use).

    Cached: enumeration workloads rebuild the same components constantly.
    """
    if is_forest(g):
        return _forest_key(g)
    return _ir_key(g)


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 16)."""
    if g.n > CANON_VERTEX_CAP:
        raise CapacityError(f"canonical_key supports n <= {CANON_VERTEX_CAP}")
    return canonical_key_any(g)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > CANON_VERTEX_CAP:
        raise CapacityError(f"is_isomorphic supports n <= {CANON_VERTEX_CAP}")
    return canonical_key_any(g) == canonical_key_any(h)


def component_key(g: Graph) -> bytes:
    """Iso-invariant key built per component; valid for any vertex count as
    long as each component fits the canonical machinery."""
    comps = connected_components(g)
    keys = sorted(canonical_key_any(induced(g, mask)) for mask in comps)
    return g.n.to_bytes(2, "big") + b"/".join(keys)


def _forest_order(g: Graph) -> list[int]:
    """Canonical vertex order for a forest: components sorted by code, each
    traversed from its best center with children in sorted-code order.
    Equal-coded siblings are interchangeable, so the relabelled graph is a
    function of the isomorphism class alone."""
    comps = []
    for comp_mask in connected_components(g):
        verts = bit_indices(comp_mask)
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            for u in iter_bits(g.rows[v] & comp_mask):
                rows[pos[v]] |= 1 << pos[u]
        centers = _tree_centers(rows, verts)
        root = min(centers, key=lambda c: _rooted_code(rows, c, -1))
        code = _rooted_code(rows, root, -1)

        order_local: list[int] = []

        def visit(v: int, parent: int) -> None:
            order_local.append(verts[v])
            kids = sorted(
                (u for u in iter_bits(rows[v]) if u != parent),
                key=lambda u: _rooted_code(rows, u, v),
            )
            for u in kids:
                visit(u, v)

        visit(root, -1)
        comps.append((code, order_local))
    comps.sort(key=lambda t: t[0])
    out: list[int] = []
    for _, order_local in comps:
        out.extend(order_local)
    return out


def canonical_form(g: Graph) -> Graph:
    """Canonically labelled copy: isomorphic inputs yield identical outputs.

    Disconnected graphs are handled per component (sorted by key) so unions
    of symmetric pieces never hit the refinement worst case.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        from .graphs import disjoint_union

        pieces = sorted(
            (canonical_key_any(induced(g, mask)), mask) for mask in comps
        )
        out = induced(g, 0)
        for _, mask in pieces:
            out = disjoint_union(out, canonical_form(induced(g, mask)))
        return out
    if is_forest(g):
        return relabel(g, _forest_order(g))
    _, order = _ir_search(g)
    return relabel(g, order)

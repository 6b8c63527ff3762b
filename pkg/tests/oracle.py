"""Brute-force reference implementations, independent of the package."""

import itertools

OFFSETS = {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}


def tone(u, v):
    return (7 * u + 4 * v) % 12


def scan(pc, w):
    return [(u, v) for u in range(-w, w + 1) for v in range(-w, w + 1) if tone(u, v) == pc]


def edges(points):
    return sum(
        (a[0] - b[0], a[1] - b[1]) in OFFSETS for a, b in itertools.combinations(points, 2)
    )


def exhaustive_optima(pcs, w=3):
    """(max edges, set of optimal placements as sorted (pc, (u, v)) tuples).

    Sa is pinned at the origin; every other pitch class ranges over all of its
    window points. Only for sets containing Sa.
    """
    pcs = sorted(set(pcs))
    assert pcs[0] == 0
    rest = pcs[1:]
    best, found = -1, set()
    for combo in itertools.product(*(scan(pc, w) for pc in rest)):
        pts = [(0, 0), *combo]
        e = edges(pts)
        if e > best:
            best, found = e, set()
        if e == best:
            found.add(tuple(zip(pcs, pts)))
    return best, found

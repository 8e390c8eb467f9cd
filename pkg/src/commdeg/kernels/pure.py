"""Pure-Python counting kernels.

Fallback used when the compiled extension is unavailable (or forced via
COMMDEG_KERNELS=pure). Same contracts as ``_ctables``; plain loops over
nested lists, so expect a large constant-factor gap on big tables — see
benchmarks/bench_kernels.py.
"""

BACKEND = "pure"


def _rows(mult):
    # tolist() once: list-of-list indexing is much faster than ndarray
    # element access in the interpreter loop below.
    return mult.tolist() if hasattr(mult, "tolist") else [list(r) for r in mult]


def count_commuting_pairs(mult):
    """Number of ordered pairs (x, y) with mult[x][y] == mult[y][x]."""
    rows = _rows(mult)
    n = len(rows)
    total = n  # diagonal always commutes
    for x in range(n):
        rx = rows[x]
        for y in range(x + 1, n):
            if rx[y] == rows[y][x]:
                total += 2
    return total


def count_commuting_pairs_mn(mult, pm, pn):
    """Number of ordered pairs (x, y) with pm[x] and pn[y] commuting."""
    rows = _rows(mult)
    pm = list(pm)
    pn = list(pn)
    total = 0
    for x in range(len(rows)):
        u = pm[x]
        ru = rows[u]
        for v in pn:
            if ru[v] == rows[v][u]:
                total += 1
    return total


def centralizer_sizes(mult):
    """List of |Z(g, G)| for every element g."""
    rows = _rows(mult)
    n = len(rows)
    cols = [[rows[h][g] for h in range(n)] for g in range(n)]
    sizes = []
    for g in range(n):
        rg = rows[g]
        cg = cols[g]
        sizes.append(sum(1 for h in range(n) if rg[h] == cg[h]))
    return sizes

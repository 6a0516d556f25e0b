"""Brute-force 3D pile enumeration via height maps, for frozen test fixtures.

A pile of at most N boxes fits over an N x N base, described by a matrix of
heights weakly decreasing along rows and columns.  This enumerates those
matrices directly, cell by cell, sharing no code with the package, and then
tallies colours straight from box coordinates.

Run:  python3 tools/oracles/enum_heightmap.py
"""


def heightmaps(N):
    """Yield height matrices (tuple of N-tuples) with total at most N."""

    def rec(rows, row, left):
        i = len(rows)
        j = len(row)
        if j == N:
            rows = rows + [tuple(row)]
            if i + 1 == N or rows[-1][0] == 0:
                yield tuple(rows)
            else:
                yield from rec(rows, [], left)
            return
        cap_up = rows[i - 1][j] if i else left
        cap_left = row[j - 1] if j else left
        for h in range(min(cap_up, cap_left, left) + 1):
            yield from rec(rows, row + [h], left - h)

    yield from rec([], [], N)


def boxes_of(hm):
    out = []
    for x, row in enumerate(hm):
        for y, h in enumerate(row):
            for z in range(h):
                out.append((x, y, z))
    return out


def colour(kind, n, x, y, z):
    if kind == "zn":
        return (x - y) % n
    if kind == "klein":
        return (x % 2) * 1 ^ (y % 2) * 2 ^ (z % 2) * 3
    if kind == "z3diag":
        return (x + y + z) % 3
    raise ValueError(kind)


def tally(kind, n, nvars, N):
    counts = {}
    for hm in heightmaps(N):
        exps = [0] * nvars
        for x, y, z in boxes_of(hm):
            exps[colour(kind, n, x, y, z)] += 1
        key = tuple(exps)
        counts[key] = counts.get(key, 0) + 1
    return counts


def dump(tag, d):
    items = sorted(d.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    print(f"{tag} = {{")
    for e, c in items:
        print(f"    {e}: {c},")
    print("}")


if __name__ == "__main__":
    by_volume = {}
    for hm in heightmaps(8):
        v = sum(map(sum, hm))
        by_volume[v] = by_volume.get(v, 0) + 1
    print("VOLUME_COUNTS_8 =", [by_volume.get(k, 0) for k in range(9)])
    print()
    dump("ZN2_COLOURS_6", tally("zn", 2, 2, 6))
    print()
    dump("ZN3_COLOURS_6", tally("zn", 3, 3, 6))
    print()
    dump("KLEIN_COLOURS_6", tally("klein", 4, 4, 6))
    print()
    dump("Z3DIAG_COLOURS_5", tally("z3diag", 3, 3, 5))

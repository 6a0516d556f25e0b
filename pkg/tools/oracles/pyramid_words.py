"""Brute-force pyramid pile fixtures from the word model.

Bricks are the positions reachable from the apex by alternating moves
(v-steps out of even layers, w-steps out of odd layers); a pile is a set of
bricks closed under removing the last move of some word for each brick.
Piles are enumerated as frozensets grown one maximal brick at a time with
global deduplication, which is slow but has nothing in common with the
package's canonical-order walk.

Run:  python3 tools/oracles/pyramid_words.py
"""

V1, V2, W1, W2 = (-1, 1, 0), (1, 1, 0), (0, 1, -1), (0, 1, 1)


def bricks_up_to(layers):
    cur = {(0, 0, 0)}
    out = set(cur)
    for y in range(1, layers):
        steps = (V1, V2) if y % 2 == 1 else (W1, W2)
        cur = {(b[0] + s[0], b[1] + s[1], b[2] + s[2]) for b in cur for s in steps}
        out |= cur
    return out


def parent_map(bricks):
    pm = {}
    for b in bricks:
        x, y, z = b
        steps = (V1, V2) if y % 2 == 1 else (W1, W2)
        pm[b] = [p for p in ((x - s[0], y - s[1], z - s[2]) for s in steps) if p in bricks]
    return pm


def all_piles(max_bricks):
    bricks = bricks_up_to(max_bricks)
    pm = parent_map(bricks)
    children = {}
    for b, ps in pm.items():
        for p in ps:
            children.setdefault(p, set()).add(b)
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for pile in frontier:
            if len(pile) == max_bricks:
                continue
            if not pile:
                cands = {(0, 0, 0)}
            else:
                cands = set()
                for b in pile:
                    for c in children.get(b, ()):
                        if c not in pile and all(p in pile for p in pm[c]):
                            cands.add(c)
            for c in cands:
                grown = pile | {c}
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return seen


def colour(b):
    # slice index x - z mod 4 -> variable index in (q0, qa, qb, qc)
    return (0, 2, 3, 1)[(b[0] - b[2]) % 4]


if __name__ == "__main__":
    piles = all_piles(8)
    by_volume = {}
    for p in piles:
        by_volume[len(p)] = by_volume.get(len(p), 0) + 1
    print("PYRAMID_COUNTS_8 =", [by_volume.get(k, 0) for k in range(9)])
    print()
    tallies = {}
    for p in piles:
        if len(p) > 7:
            continue
        exps = [0, 0, 0, 0]
        for b in p:
            exps[colour(b)] += 1
        key = tuple(exps)
        tallies[key] = tallies.get(key, 0) + 1
    items = sorted(tallies.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    print("PYRAMID_COLOURS_7 = {")
    for e, c in items:
        print(f"    {e}: {c},")
    print("}")

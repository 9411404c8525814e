"""Brute-force reference implementations, written without the package's algorithms."""

from collections import deque
from fractions import Fraction
from itertools import product as cartesian
from math import floor, gcd


def farey_neighbours(a: Fraction, b: Fraction) -> bool:
    return abs(a.numerator * b.denominator - a.denominator * b.numerator) == 1


def monotone_distance(target: Fraction, den_limit: int) -> int:
    """Fewest edges of an increasing Farey path from floor(target) to target.

    Searches every rational in the interval with denominator up to den_limit.
    """
    lo = floor(target)
    nodes = sorted(
        {Fraction(n, d) for d in range(1, den_limit + 1) for n in range(lo * d, int(target * d) + 1)
         if gcd(n, d) == 1 and lo <= Fraction(n, d) <= target}
    )
    start = Fraction(lo)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == target:
            return dist[v]
        for w in nodes:
            if w > v and w not in dist and farey_neighbours(v, w):
                dist[w] = dist[v] + 1
                queue.append(w)
    raise AssertionError("target unreachable")


def _vec(s):
    return (s.num, s.den)


def shuffle_orbit_count(vertices, unsigned_first: bool = False) -> int:
    """Sign assignments up to swapping neighbouring signs inside a continued fraction block.

    Two consecutive edges v_i v_(i+1) v_(i+2) lie in one block when
    |det(v_i, v_(i+2))| == 2.
    """
    vecs = [_vec(v) for v in vertices]
    edges = len(vecs) - 1
    same_block = []
    for i in range(edges - 1):
        (a, b), (c, d) = vecs[i], vecs[i + 2]
        same_block.append(abs(a * d - b * c) == 2)
    signed = list(range(1 if unsigned_first else 0, edges))
    seen = set()
    orbits = 0
    for assignment in cartesian((1, -1), repeat=len(signed)):
        if assignment in seen:
            continue
        orbits += 1
        stack = [assignment]
        seen.add(assignment)
        while stack:
            cur = stack.pop()
            for pos in range(len(signed) - 1):
                e = signed[pos]
                if not same_block[e]:
                    continue
                nxt = list(cur)
                nxt[pos], nxt[pos + 1] = nxt[pos + 1], nxt[pos]
                nxt = tuple(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return orbits


def stabilization_classes(gens, rules, rot, tb, depth_limit=40):
    """Isotopy classes at (rot, tb) generated by explicit stabilized copies of each rule.

    ``gens`` maps id -> (tb, rot); ``rules`` are tuples (a, ka, la, b, kb, lb).
    """
    present = {}
    for gid, (gtb, grot) in gens.items():
        depth, shift = gtb - tb, rot - grot
        if depth >= 0 and (depth + shift) % 2 == 0 and abs(shift) <= depth:
            present[gid] = ((depth + shift) // 2, (depth - shift) // 2)
    parent = {g: g for g in present}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, ka, la, b, kb, lb in rules:
        if a not in present or b not in present:
            continue
        for x in range(depth_limit):
            for y in range(depth_limit):
                if present[a] == (ka + x, la + y) and present[b] == (kb + x, lb + y):
                    parent[find(a)] = find(b)
    groups = {}
    for g in present:
        groups.setdefault(find(g), set()).add(g)
    return sorted(groups.values(), key=lambda s: sorted(s))

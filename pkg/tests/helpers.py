import random
from math import gcd

from legcable.atlas import Generator, LegendrianAtlas, MergeRule
from legcable.farey import slope
from legcable.llc import LargeCable
from legcable.paths import MINUS, PLUS, DecoratedPath, FareyPath, balanced_block, shortest_path


def random_atlas(rng: random.Random, max_gens: int = 4, max_rules: int = 4) -> LegendrianAtlas:
    """A random valid atlas; every rule relates two classes with equal invariants."""
    gens = []
    for i in range(rng.randint(1, max_gens)):
        tb = rng.randint(-6, 0)
        rot = rng.randrange(-3, 4)
        if (tb + rot) % 2 == 0:
            rot += 1
        gens.append(Generator(f"g{i}", tb, rot))
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        a, b = rng.sample(gens, 2) if len(gens) > 1 else (gens[0], gens[0])
        if a is b:
            break
        low = min(a.tb, b.tb) - rng.randint(0, 4)
        choices = []
        for rot in range(-12, 13):
            ka_d, kb_d = a.tb - low, b.tb - low
            sa, sb = rot - a.rot, rot - b.rot
            if abs(sa) <= ka_d and abs(sb) <= kb_d and (ka_d + sa) % 2 == 0 and (kb_d + sb) % 2 == 0:
                choices.append(rot)
        if not choices:
            continue
        rot = rng.choice(choices)
        da, sa = a.tb - low, rot - a.rot
        db, sb = b.tb - low, rot - b.rot
        rules.append(MergeRule(a.id, (da + sa) // 2, (da - sa) // 2, b.id, (db + sb) // 2, (db - sb) // 2))
    return LegendrianAtlas("random", tuple(gens), tuple(rules))


def admissible_q(atlas: LegendrianAtlas, p: int, rng: random.Random) -> int:
    gate = atlas.ceil_width if atlas.ceil_width is not None else atlas.max_tb + 1
    while True:
        q = p * gate + rng.randint(1, 4 * p)
        if q % p and gcd(p, q) == 1:
            return q


def prefix_below(p, q, below, length):
    """Integers floor(q/p) - below .. floor(q/p), then ``length`` further vertices of the minimal path to q/p."""
    verts = shortest_path(slope(q, p)).vertices
    start = verts[0].num
    ints = tuple(slope(start - j) for j in range(below, 0, -1))
    return FareyPath(ints + verts[: length + 1])


def random_large_cable(rng: random.Random, m: int) -> LargeCable:
    """A large cable for the (n, -1) cable, n > m, whose block sits at the end of the path to -1/n."""
    n = rng.randint(m + 1, m + 4)
    center = slope(-1, n)
    signs = [PLUS] * m + [MINUS] * m
    rng.shuffle(signs)
    block = balanced_block(center, m, signs)
    verts = shortest_path(center).vertices
    below_verts = verts[: len(verts) - m]
    below_signs = tuple(rng.choice((PLUS, MINUS)) for _ in range(len(below_verts) - 1))
    return LargeCable(n, -1, block, rng.randint(-3, 3), DecoratedPath(FareyPath(below_verts), below_signs))

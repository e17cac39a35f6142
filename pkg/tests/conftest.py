"""Shared test helpers: random words and the independent strand-tracking oracle."""

from __future__ import annotations

import random

from braidnil.core import BraidWord


def random_word(rng: random.Random, n: int, max_len: int = 40) -> BraidWord:
    length = rng.randint(0, max_len)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def strand_tracking_normal_form(word: BraidWord):
    """Independent level-1 oracle: permutation and pure exponents by direct strand tracking.

    Walks the diagram once, recording the signed crossing count between each
    pair of strands (labelled by their starting positions).  The word equals
    section(perm) * pure-part, the section contributes exactly one positive
    crossing to each pair it inverts, and a unit pure exponent contributes two
    crossings; solving for the exponents gives the expected pure part.
    """
    n = word.n
    line = list(range(1, n + 1))  # strand id occupying each position
    cross: dict[tuple[int, int], int] = {}
    for k, eps in word.letters:
        u, v = line[k - 1], line[k]
        key = (u, v) if u < v else (v, u)
        cross[key] = cross.get(key, 0) + eps
        line[k - 1], line[k] = v, u
    final_pos = {strand: pos + 1 for pos, strand in enumerate(line)}
    perm_image = tuple(final_pos[i] for i in range(1, n + 1))
    inv_of = {v: i + 1 for i, v in enumerate(perm_image)}
    pure: dict[tuple[int, int], int] = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            i, j = inv_of[a], inv_of[b]
            c = cross.get((min(i, j), max(i, j)), 0)
            if i > j:
                c -= 1  # the positive section crossing on an inverted pair
            assert c % 2 == 0, "crossing parity must match the section"
            if c:
                pure[(a, b)] = c // 2
    return perm_image, pure

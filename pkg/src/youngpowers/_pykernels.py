"""Pure-Python versions of the hot loops in ``_ckernels``.

Every function here mirrors the compiled one argument for argument and
returns identical arrays; ``kernels`` picks whichever is importable.
"""

import numpy as np


def rank_words(words, counts):
    """Lexicographic rank of each row of ``words`` among arrangements with ``counts``."""
    words = np.asarray(words, dtype=np.int64)
    counts = [int(c) for c in counts]
    ranks = np.empty(words.shape[0], dtype=np.int64)
    length = words.shape[1]
    total = _arrangements(counts)
    for row in range(words.shape[0]):
        remaining = list(counts)
        block = total
        rank = 0
        for position in range(length):
            left = length - position
            letter = int(words[row, position])
            for smaller in range(letter):
                if remaining[smaller]:
                    rank += block * remaining[smaller] // left
            block = block * remaining[letter] // left
            remaining[letter] -= 1
        ranks[row] = rank
    return ranks


def _arrangements(counts):
    total = 1
    placed = 0
    for c in counts:
        for k in range(1, c + 1):
            placed += 1
            total = total * placed // k
    return total


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _union(parent, a, b):
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra != rb:
        # keep the smaller index as root so labels are orbit minima
        if ra < rb:
            parent[rb] = ra
        else:
            parent[ra] = rb


def orbit_labels(actions):
    """Label each point by the smallest point of its orbit under ``actions``."""
    actions = np.asarray(actions, dtype=np.int64)
    size = actions.shape[1]
    parent = list(range(size))
    for images in actions.tolist():
        for x, y in enumerate(images):
            _union(parent, x, y)
    return np.array([_find(parent, x) for x in range(size)], dtype=np.int64)


def pair_index(u, v, size, distinct):
    if distinct:
        return u * (2 * size - u - 1) // 2 + (v - u - 1)
    return u * (2 * size - u + 1) // 2 + (v - u)


def pair_orbit_labels(actions, distinct):
    """Orbit labels of unordered pairs ``u <= v`` (``u < v`` when ``distinct``)."""
    actions = np.asarray(actions, dtype=np.int64)
    size = actions.shape[1]
    offset = 1 if distinct else 0
    count = size * (size - 1) // 2 if distinct else size * (size + 1) // 2
    parent = list(range(count))
    for images in actions.tolist():
        index = 0
        for u in range(size):
            gu = images[u]
            for v in range(u + offset, size):
                gv = images[v]
                if gu <= gv:
                    target = pair_index(gu, gv, size, distinct)
                else:
                    target = pair_index(gv, gu, size, distinct)
                _union(parent, index, target)
                index += 1
    return np.array([_find(parent, x) for x in range(count)], dtype=np.int64)

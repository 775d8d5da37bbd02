# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the reference."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def rank_words(words, counts):
    cdef i64[:, :] w = np.ascontiguousarray(words, dtype=np.int64)
    cdef i64[:] c = np.ascontiguousarray(counts, dtype=np.int64)
    cdef Py_ssize_t rows = w.shape[0], length = w.shape[1], letters = c.shape[0]
    cdef i64[:] remaining = np.empty(letters, dtype=np.int64)
    out = np.empty(rows, dtype=np.int64)
    cdef i64[:] ranks = out
    cdef i64 total = 1, placed = 0, block, rank, left
    cdef Py_ssize_t row, position, letter, smaller, k
    for letter in range(letters):
        for k in range(1, c[letter] + 1):
            placed += 1
            total = total * placed // k
    for row in range(rows):
        for letter in range(letters):
            remaining[letter] = c[letter]
        block = total
        rank = 0
        for position in range(length):
            left = length - position
            letter = w[row, position]
            for smaller in range(letter):
                if remaining[smaller]:
                    rank += block * remaining[smaller] // left
            block = block * remaining[letter] // left
            remaining[letter] -= 1
        ranks[row] = rank
    return out


cdef inline i64 _find(i64* parent, i64 x) nogil:
    cdef i64 root = x, step
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        step = parent[x]
        parent[x] = root
        x = step
    return root


cdef inline void _union(i64* parent, i64 a, i64 b) nogil:
    cdef i64 ra = _find(parent, a), rb = _find(parent, b)
    if ra < rb:
        parent[rb] = ra
    elif rb < ra:
        parent[ra] = rb


def orbit_labels(actions):
    cdef i64[:, :] act = np.ascontiguousarray(actions, dtype=np.int64)
    cdef Py_ssize_t gens = act.shape[0], size = act.shape[1], g, x
    out = np.arange(size, dtype=np.int64)
    if size == 0:
        return out
    cdef i64[:] view = out
    cdef i64* parent = &view[0]
    for g in range(gens):
        for x in range(size):
            _union(parent, x, act[g, x])
    for x in range(size):
        parent[x] = _find(parent, x)
    return out


cdef inline i64 _pair_index(i64 u, i64 v, i64 size, bint distinct):
    if distinct:
        return u * (2 * size - u - 1) // 2 + (v - u - 1)
    return u * (2 * size - u + 1) // 2 + (v - u)


def pair_index(u, v, size, distinct):
    return _pair_index(u, v, size, distinct)


def pair_orbit_labels(actions, distinct):
    cdef i64[:, :] act = np.ascontiguousarray(actions, dtype=np.int64)
    cdef bint flag = bool(distinct)
    cdef i64 size = act.shape[1]
    cdef i64 offset = 1 if flag else 0
    cdef i64 count = size * (size - 1) // 2 if flag else size * (size + 1) // 2
    out = np.arange(count, dtype=np.int64)
    if count == 0:
        return out
    cdef i64[:] view = out
    cdef i64* parent = &view[0]
    cdef Py_ssize_t g, gens = act.shape[0]
    cdef i64 u, v, gu, gv, index, target
    for g in range(gens):
        index = 0
        for u in range(size):
            gu = act[g, u]
            for v in range(u + offset, size):
                gv = act[g, v]
                if gu <= gv:
                    target = _pair_index(gu, gv, size, flag)
                else:
                    target = _pair_index(gv, gu, size, flag)
                _union(parent, index, target)
                index += 1
    for index in range(count):
        parent[index] = _find(parent, index)
    return out

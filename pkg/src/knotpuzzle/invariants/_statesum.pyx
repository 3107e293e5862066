# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel; see ``statesum_py`` for the reference version."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline int _union(int* parent, int x, int y) noexcept nogil:
    cdef int rx = _find(parent, x)
    cdef int ry = _find(parent, y)
    if rx == ry:
        return 0
    parent[rx] = ry
    return 1


def bracket_histogram(int[:, ::1] cross, int n_labels, long long start, long long stop):
    cdef int n = cross.shape[0]
    hist_arr = np.zeros((n + 1, n_labels + 1), dtype=np.int64)
    cdef long long[:, ::1] hist = hist_arr
    parent_arr = np.empty(max(n_labels, 1), dtype=np.intc)
    cdef int[::1] parent_view = parent_arr
    cdef int* parent = &parent_view[0]
    cdef long long mask
    cdef int i, k, unions, acount
    with nogil:
        mask = start
        while mask < stop:
            for k in range(n_labels):
                parent[k] = k
            unions = 0
            acount = 0
            for i in range(n):
                if (mask >> i) & 1:
                    acount += 1
                    unions += _union(parent, cross[i, 0], cross[i, 1])
                    unions += _union(parent, cross[i, 2], cross[i, 3])
                else:
                    unions += _union(parent, cross[i, 0], cross[i, 3])
                    unions += _union(parent, cross[i, 1], cross[i, 2])
            hist[acount, n_labels - unions] += 1
            mask += 1
    return hist_arr

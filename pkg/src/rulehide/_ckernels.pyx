# cython: language_level=3
"""Cython vertical bitset index over ``uint64`` words.

Same interface as :mod:`rulehide._pykernels`; row ``i`` of ``bits`` holds
the tid-set of item ``i`` packed 64 transactions per word.
"""
import numpy as np
cimport numpy as cnp

from libc.stdint cimport uint64_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef class BitIndex:
    cdef public Py_ssize_t n
    cdef public Py_ssize_t m
    cdef Py_ssize_t words
    cdef uint64_t[:, ::1] bits
    cdef object _array

    def __init__(self, rows, Py_ssize_t m):
        cdef Py_ssize_t pos, item
        self.n = len(rows)
        self.m = m
        self.words = (self.n + 63) // 64
        self._array = np.zeros((m, max(self.words, 1)), dtype=np.uint64)
        self.bits = self._array
        for pos, row in enumerate(rows):
            for item in row:
                self.bits[item, pos >> 6] |= (<uint64_t>1) << (pos & 63)

    cdef inline uint64_t _word(self, const Py_ssize_t[::1] items, Py_ssize_t w) noexcept nogil:
        cdef uint64_t acc = 0xFFFFFFFFFFFFFFFF
        cdef Py_ssize_t j
        for j in range(items.shape[0]):
            acc &= self.bits[items[j], w]
            if acc == 0:
                break
        if w == self.words - 1 and (self.n & 63):
            # the empty itemset starts from all ones
            acc &= ((<uint64_t>1) << (self.n & 63)) - 1
        return acc

    def count(self, candidates):
        """Support counts for a batch of itemsets."""
        cdef Py_ssize_t c, w, j, k, total
        cdef uint64_t acc
        out = []
        if len(candidates) == 0:
            return out
        sizes = {len(cand) for cand in candidates}
        if len(sizes) != 1:
            # mixed sizes: count one at a time
            return [self.count([cand])[0] for cand in candidates]
        k = sizes.pop()
        if k == 0:
            return [self.n] * len(candidates)
        cdef Py_ssize_t[:, ::1] cands = np.ascontiguousarray(candidates, dtype=np.intp)
        cdef Py_ssize_t ncand = cands.shape[0]
        cdef cnp.int64_t[::1] res = np.zeros(ncand, dtype=np.int64)
        cdef uint64_t[:, ::1] bits = self.bits
        cdef Py_ssize_t words = self.words
        cdef Py_ssize_t first
        with nogil:
            for c in range(ncand):
                total = 0
                first = cands[c, 0]
                for w in range(words):
                    acc = bits[first, w]
                    # branchless: an early exit on acc == 0 mispredicts badly
                    for j in range(1, k):
                        acc &= bits[cands[c, j], w]
                    total += __builtin_popcountll(acc)
                res[c] = total
        return np.asarray(res).tolist()

    def tids(self, itemset):
        """Ascending 1-based tids of transactions containing ``itemset``."""
        cdef Py_ssize_t w
        cdef uint64_t acc
        cdef const Py_ssize_t[::1] items = np.ascontiguousarray(itemset, dtype=np.intp)
        out = []
        for w in range(self.words):
            acc = self._word(items, w)
            while acc:
                out.append(w * 64 + __builtin_ctzll(acc) + 1)
                acc &= acc - 1
        return out

    def discard(self, Py_ssize_t item, Py_ssize_t tid):
        cdef Py_ssize_t pos = tid - 1
        self.bits[item, pos >> 6] &= ~((<uint64_t>1) << (pos & 63))

    def copy(self):
        cdef BitIndex new = BitIndex.__new__(BitIndex)
        new.n = self.n
        new.m = self.m
        new.words = self.words
        new._array = self._array.copy()
        new.bits = new._array
        return new

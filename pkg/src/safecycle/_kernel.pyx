# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled backtracking kernel for proper-colouring extension search.

Same contract as safecycle._kernel_py.search_extension; selected at
import time by safecycle.enumeration when the build produced it.
"""


def search_extension(int base, int n_internal, int k,
                     int[::1] colours, int[::1] offsets, int[::1] targets):
    """Backtracking over internal vertices base..base+n_internal-1.

    ``colours`` holds 1..k for pre-coloured vertices and 0 for internal
    ones; internal vertex j has neighbour ids targets[offsets[j]:offsets[j+1]].
    Colours are tried in ascending order.  Mutates ``colours`` in place and
    returns True when a proper completion exists.
    """
    cdef int pos = 0
    cdef int v, c, i, ok, found
    if n_internal == 0:
        return True
    while True:
        v = base + pos
        c = colours[v] + 1
        found = 0
        while c <= k:
            ok = 1
            for i in range(offsets[pos], offsets[pos + 1]):
                if colours[targets[i]] == c:
                    ok = 0
                    break
            if ok:
                found = 1
                break
            c += 1
        if found:
            colours[v] = c
            pos += 1
            if pos == n_internal:
                return True
        else:
            colours[v] = 0
            pos -= 1
            if pos < 0:
                return False

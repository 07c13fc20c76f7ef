"""Pure-Python backtracking kernel; import-time fallback for the compiled one."""

from __future__ import annotations


def search_extension(base, n_internal, k, colours, offsets, targets):
    """See safecycle._kernel.search_extension; identical contract."""
    if n_internal == 0:
        return True
    pos = 0
    while True:
        v = base + pos
        c = colours[v] + 1
        found = False
        while c <= k:
            ok = True
            for i in range(offsets[pos], offsets[pos + 1]):
                if colours[targets[i]] == c:
                    ok = False
                    break
            if ok:
                found = True
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

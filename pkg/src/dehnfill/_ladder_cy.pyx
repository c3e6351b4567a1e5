# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled ladder kernel; mirrors dehnfill._ladder_py exactly (same state
encoding, same traversal order, same outputs)."""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


cdef struct Succ:
    int n
    int s0
    int s1


cdef class _Tables:
    cdef int n_levels, n_sw, n_rungs, n_line_states
    cdef int *offsets
    cdef int *sw_rung
    cdef int *sw_end
    cdef int *rung_level
    cdef int *cusp_lo
    cdef int *cusp_hi
    cdef int *lo_idx
    cdef int *hi_idx

    def __cinit__(self, offsets, sw_rung, sw_end, rung_level,
                  cusp_lo, cusp_hi, lo_idx, hi_idx):
        cdef int i
        self.n_levels = len(offsets) - 1
        self.n_sw = offsets[len(offsets) - 1]
        self.n_rungs = len(rung_level)
        self.n_line_states = 2 * (self.n_sw + self.n_levels)
        self.offsets = <int *> malloc(sizeof(int) * (self.n_levels + 1))
        self.sw_rung = <int *> malloc(sizeof(int) * max(1, self.n_sw))
        self.sw_end = <int *> malloc(sizeof(int) * max(1, self.n_sw))
        self.rung_level = <int *> malloc(sizeof(int) * max(1, self.n_rungs))
        self.cusp_lo = <int *> malloc(sizeof(int) * max(1, self.n_rungs))
        self.cusp_hi = <int *> malloc(sizeof(int) * max(1, self.n_rungs))
        self.lo_idx = <int *> malloc(sizeof(int) * max(1, self.n_rungs))
        self.hi_idx = <int *> malloc(sizeof(int) * max(1, self.n_rungs))
        for i in range(self.n_levels + 1):
            self.offsets[i] = offsets[i]
        for i in range(self.n_sw):
            self.sw_rung[i] = sw_rung[i]
            self.sw_end[i] = sw_end[i]
        for i in range(self.n_rungs):
            self.rung_level[i] = rung_level[i]
            self.cusp_lo[i] = cusp_lo[i]
            self.cusp_hi[i] = cusp_hi[i]
            self.lo_idx[i] = lo_idx[i]
            self.hi_idx[i] = hi_idx[i]

    def __dealloc__(self):
        free(self.offsets)
        free(self.sw_rung)
        free(self.sw_end)
        free(self.rung_level)
        free(self.cusp_lo)
        free(self.cusp_hi)
        free(self.lo_idx)
        free(self.hi_idx)

    cdef int line_state(self, int level, int seg, bint forward):
        return 2 * (self.offsets[level] + level + seg) + (1 if forward else 0)

    cdef int level_of_line(self, int state):
        cdef int idx = state >> 1
        cdef int level = 0
        cdef int k
        for k in range(self.n_levels):
            if self.offsets[k] + k <= idx:
                level = k
        return level

    cdef Succ successors(self, int state):
        cdef Succ out
        cdef int idx, level, seg, d, k, n_here, cusp, sw, r
        cdef bint fwd, up
        out.n = 0
        out.s0 = 0
        out.s1 = 0
        if state < self.n_line_states:
            fwd = state & 1
            level = self.level_of_line(state)
            seg = (state >> 1) - self.offsets[level] - level
            d = 1 if fwd else -1
            n_here = self.offsets[level + 1] - self.offsets[level]
            k = seg if d > 0 else seg - 1
            if k < 0 or k >= n_here:
                return out
            sw = self.offsets[level] + k
            r = self.sw_rung[sw]
            cusp = self.cusp_lo[r] if self.sw_end[sw] == 0 else self.cusp_hi[r]
            out.s0 = self.line_state(level, seg + d, d > 0)
            out.n = 1
            if d != cusp:
                up = self.sw_end[sw] == 0
                out.s1 = self.n_line_states + 2 * r + (1 if up else 0)
                out.n = 2
            return out
        idx = (state - self.n_line_states) >> 1
        if state & 1:  # heading to the upper end
            level = self.rung_level[idx] + 1
            k = self.hi_idx[idx]
            cusp = self.cusp_hi[idx]
        else:
            level = self.rung_level[idx]
            k = self.lo_idx[idx]
            cusp = self.cusp_lo[idx]
        seg = k + 1 if cusp > 0 else k
        out.s0 = self.line_state(level, seg, cusp > 0)
        out.n = 1
        return out

    cdef bint violates(self, int *path, int n, int forward_dir):
        cdef int j, state, d, level, tag
        cdef int first_dir = 0
        cdef int even_seen = -1, odd_seen = -1
        cdef int last_tag = -1, pattern_len = 0
        cdef bint pattern_bad = False
        cdef bint backward
        for j in range(n):
            state = path[j]
            if state < self.n_line_states:
                d = 1 if (state & 1) else -1
                if first_dir == 0:
                    first_dir = d
                elif d != first_dir:
                    return True
        if first_dir == 0:
            return False
        backward = first_dir == -forward_dir
        for j in range(n):
            state = path[n - 1 - j] if backward else path[j]
            if state >= self.n_line_states:
                continue
            level = self.level_of_line(state)
            if level % 2 == 0:
                if even_seen == -1:
                    even_seen = level
                elif level != even_seen:
                    return True
            else:
                if odd_seen == -1:
                    odd_seen = level
                elif level != odd_seen:
                    return True
            tag = level % 2
            if tag != last_tag:
                pattern_len += 1
                if pattern_len == 2 and not (last_tag == 1 and tag == 0):
                    pattern_bad = True
                if pattern_len > 2:
                    pattern_bad = True
                last_tag = tag
        return pattern_bad


cdef _path_tuple(int *states, int n):
    cdef int j
    out = []
    for j in range(n):
        out.append(states[j])
    return tuple(out)


def scan_ladder(offsets, sw_rung, sw_end, rung_level, cusp_lo, cusp_hi,
                lo_idx, hi_idx, int forward_dir, int step_bound, bint collect):
    """Same contract as dehnfill._ladder_py.scan_ladder."""
    cdef _Tables t = _Tables(offsets, sw_rung, sw_end, rung_level,
                             cusp_lo, cusp_hi, lo_idx, hi_idx)
    cdef int n_paths = 0, n_violations = 0, n_truncated = 0, max_len = 0
    cdef int depth, level, n_here, state, side, j, a, b
    cdef bint emit, repeat
    cdef Succ sc
    cdef int cap = step_bound + 2
    cdef int *st_state = <int *> malloc(sizeof(int) * cap)
    cdef int *st_iter = <int *> malloc(sizeof(int) * cap)
    cdef int *st_n = <int *> malloc(sizeof(int) * cap)
    cdef int *st_s0 = <int *> malloc(sizeof(int) * cap)
    cdef int *st_s1 = <int *> malloc(sizeof(int) * cap)
    cdef int *st_trunc = <int *> malloc(sizeof(int) * cap)

    paths = [] if collect else None
    witness = None

    try:
        for level in range(t.n_levels):
            n_here = t.offsets[level + 1] - t.offsets[level]
            for side in range(2):
                depth = 0
                st_state[0] = (
                    t.line_state(level, 0, True)
                    if side == 0
                    else t.line_state(level, n_here, False)
                )
                st_iter[0] = -1
                while depth >= 0:
                    if st_iter[depth] == -1:
                        repeat = False
                        if depth + 1 >= step_bound:
                            repeat = True
                        else:
                            for j in range(depth):
                                if st_state[j] == st_state[depth]:
                                    repeat = True
                                    break
                        if repeat:
                            st_n[depth] = 0
                            st_trunc[depth] = 1
                        else:
                            sc = t.successors(st_state[depth])
                            st_n[depth] = sc.n
                            st_s0[depth] = sc.s0
                            st_s1[depth] = sc.s1
                            st_trunc[depth] = 0
                        st_iter[depth] = 0
                        if st_n[depth] == 0:
                            emit = True
                            for j in range(depth + 1):
                                a = st_state[j]
                                b = st_state[depth - j] ^ 1
                                if a != b:
                                    emit = a < b
                                    break
                            if emit:
                                n_paths += 1
                                if st_trunc[depth]:
                                    n_truncated += 1
                                if depth + 1 > max_len:
                                    max_len = depth + 1
                                if t.violates(st_state, depth + 1, forward_dir):
                                    n_violations += 1
                                    if witness is None:
                                        witness = _path_tuple(st_state, depth + 1)
                                if collect:
                                    paths.append(
                                        (
                                            _path_tuple(st_state, depth + 1),
                                            bool(st_trunc[depth]),
                                        )
                                    )
                            depth -= 1
                            continue
                    if st_iter[depth] < st_n[depth]:
                        state = st_s0[depth] if st_iter[depth] == 0 else st_s1[depth]
                        st_iter[depth] += 1
                        depth += 1
                        st_state[depth] = state
                        st_iter[depth] = -1
                    else:
                        depth -= 1
    finally:
        free(st_state)
        free(st_iter)
        free(st_n)
        free(st_s0)
        free(st_s1)
        free(st_trunc)
    return paths, n_paths, n_violations, n_truncated, max_len, witness

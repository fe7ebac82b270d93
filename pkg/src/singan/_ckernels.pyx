# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef inline long long _max0(long long x) nogil:
    return x if x > 0 else 0


def scan_box(Py_ssize_t n, long long[::1] mat, long long[::1] k, long long[::1] z,
             long long[::1] lo, long long[::1] hi, Py_ssize_t limit):
    cdef Py_ssize_t i, j, r
    cdef long long *zp = <long long *> malloc(8 * n * sizeof(long long))
    if zp == NULL:
        raise MemoryError()
    cdef long long *p = zp + n
    cdef long long *m = zp + 2 * n
    cdef long long *v = zp + 3 * n
    cdef long long *mp = zp + 4 * n
    cdef long long *mn = zp + 5 * n
    cdef long long *u = zp + 6 * n
    cdef long long qq = 0, pp = 0, nn = 0, pn = 0, up = 0, un = 0, kz = 0, qz = 0
    cdef long long q, rhs, qmin = 0, c, new, dz, newp, newm, dp, dm, mjj
    cdef long long explored = 0, n_min = 0, n_below = 0, n_tie = 0, id_fail = 0
    cdef Py_ssize_t npos = 0
    cdef bint have_min = False
    minimizers = []
    first_below = None
    first_tie = None
    try:
        for j in range(n):
            zp[j] = lo[j]
            p[j] = _max0(zp[j] - z[j])
            m[j] = _max0(z[j] - zp[j])
            if p[j] > 0:
                npos += 1
        for j in range(n):
            v[j] = 0
            mp[j] = 0
            mn[j] = 0
            u[j] = k[j]
            for i in range(n):
                c = mat[j * n + i]
                v[j] += c * zp[i]
                mp[j] += c * p[i]
                mn[j] += c * m[i]
                u[j] += c * z[i]
                qz -= z[j] * c * z[i]
            qz -= 2 * k[j] * z[j]
        for j in range(n):
            qq += zp[j] * v[j]
            pp += p[j] * mp[j]
            nn += m[j] * mn[j]
            pn += p[j] * mn[j]
            up += u[j] * p[j]
            un += u[j] * m[j]
            kz += k[j] * zp[j]

        while True:
            explored += 1
            q = -qq - 2 * kz
            rhs = -pp - 2 * up - nn + 2 * un + 2 * pn
            if q - qz != rhs:
                id_fail += 1
            if not have_min or q < qmin:
                have_min = True
                qmin = q
                n_min = 1
                minimizers = [tuple([zp[r] for r in range(n)])]
            elif q == qmin:
                n_min += 1
                if len(minimizers) < limit:
                    minimizers.append(tuple([zp[r] for r in range(n)]))
            if q < qz:
                n_below += 1
                if first_below is None:
                    first_below = tuple([zp[r] for r in range(n)])
            elif q == qz and npos > 0:
                n_tie += 1
                if first_tie is None:
                    first_tie = tuple([zp[r] for r in range(n)])

            i = 0
            while i < n and zp[i] >= hi[i]:
                i += 1
            if i == n:
                break
            for j in range(i + 1):
                if j < i:
                    new = lo[j]
                else:
                    new = zp[j] + 1
                dz = new - zp[j]
                if dz == 0:
                    continue
                newp = _max0(new - z[j])
                newm = _max0(z[j] - new)
                dp = newp - p[j]
                dm = newm - m[j]
                mjj = mat[j * n + j]
                qq += 2 * dz * v[j] + dz * dz * mjj
                pn += dp * mn[j] + dm * mp[j] + dp * dm * mjj
                pp += 2 * dp * mp[j] + dp * dp * mjj
                nn += 2 * dm * mn[j] + dm * dm * mjj
                for r in range(n):
                    c = mat[j * n + r]
                    if c:
                        v[r] += dz * c
                        mp[r] += dp * c
                        mn[r] += dm * c
                up += dp * u[j]
                un += dm * u[j]
                kz += dz * k[j]
                if p[j] > 0 and newp == 0:
                    npos -= 1
                elif p[j] == 0 and newp > 0:
                    npos += 1
                p[j] = newp
                m[j] = newm
                zp[j] = new
    finally:
        free(zp)
    return (explored, qz, qmin, n_min, minimizers, n_below, first_below, n_tie, first_tie, id_fail)


def scan_antinef(Py_ssize_t n, long long[::1] mat, long long[::1] z, long long cap,
                 long long[::1] order, long long[::1] checks, long long[::1] check_ptr):
    cdef long long *zp = <long long *> malloc(3 * n * sizeof(long long))
    if zp == NULL:
        raise MemoryError()
    cdef long long *v = zp + n
    cdef long long *val = zp + 2 * n
    cdef long long *meet = NULL
    cdef Py_ssize_t depth, j, r, t
    cdef long long d, new, c
    cdef long long visited = 0, n_sol = 0
    cdef bint ok, nonzero, below, is_z, have_meet = False, contains_z = False
    first_bad = None
    meet = <long long *> malloc(n * sizeof(long long))
    if meet == NULL:
        free(zp)
        raise MemoryError()
    try:
        for r in range(n):
            zp[r] = 0
            v[r] = 0
            val[r] = -1
        depth = 0
        while depth >= 0:
            j = order[depth]
            if val[depth] >= cap:
                d = -zp[j]
                if d:
                    for r in range(n):
                        c = mat[j * n + r]
                        if c:
                            v[r] += d * c
                    zp[j] = 0
                val[depth] = -1
                depth -= 1
                continue
            val[depth] += 1
            new = val[depth]
            d = new - zp[j]
            for r in range(n):
                c = mat[j * n + r]
                if c:
                    v[r] += d * c
            zp[j] = new
            visited += 1
            ok = True
            for t in range(check_ptr[depth], check_ptr[depth + 1]):
                if v[checks[t]] > 0:
                    ok = False
                    break
            if not ok:
                continue
            if depth == n - 1:
                nonzero = False
                below = False
                is_z = True
                for r in range(n):
                    if zp[r]:
                        nonzero = True
                    if zp[r] < z[r]:
                        below = True
                    if zp[r] != z[r]:
                        is_z = False
                if nonzero:
                    n_sol += 1
                    if not have_meet:
                        have_meet = True
                        for r in range(n):
                            meet[r] = zp[r]
                    else:
                        for r in range(n):
                            if zp[r] < meet[r]:
                                meet[r] = zp[r]
                    if below and first_bad is None:
                        first_bad = tuple([zp[r] for r in range(n)])
                    if is_z:
                        contains_z = True
            else:
                depth += 1
        meet_t = tuple([meet[r] for r in range(n)]) if have_meet else None
    finally:
        free(zp)
        free(meet)
    return (visited, n_sol, meet_t, first_bad, contains_z)

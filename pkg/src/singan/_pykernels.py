"""Pure-Python enumeration kernels.

Reference implementation of the compiled ``_ckernels`` module; both must
return identical results. All arithmetic is on small integers: for an
integral cycle ``Z'`` the quantity ``q(Z') = -Z'^2 - 2 K.Z'`` differs from
``-(Z' - Delta)^2`` by the constant ``-Delta^2``.
"""

BACKEND = "python"


def scan_box(n, mat, k, z, lo, hi, limit):
    """Visit every integral cycle with ``lo <= Z' <= hi``.

    ``mat`` is the row-major intersection matrix. Returns a tuple
    ``(explored, qz, qmin, n_min, minimizers, n_below, first_below,
    n_tie_not_le, first_tie_not_le, identity_failures)``.
    """
    mat = list(mat)
    k = list(k)
    z = list(z)
    lo = list(lo)
    hi = list(hi)
    M = [mat[i * n:(i + 1) * n] for i in range(n)]
    u = [sum(M[j][i] * z[i] for i in range(n)) + k[j] for j in range(n)]

    zp = list(lo)
    p = [max(zp[i] - z[i], 0) for i in range(n)]
    m = [max(z[i] - zp[i], 0) for i in range(n)]
    v = [sum(M[j][i] * zp[i] for i in range(n)) for j in range(n)]
    mp = [sum(M[j][i] * p[i] for i in range(n)) for j in range(n)]
    mn = [sum(M[j][i] * m[i] for i in range(n)) for j in range(n)]
    qq = sum(zp[j] * v[j] for j in range(n))
    pp = sum(p[j] * mp[j] for j in range(n))
    nn = sum(m[j] * mn[j] for j in range(n))
    pn = sum(p[j] * mn[j] for j in range(n))
    up = sum(u[j] * p[j] for j in range(n))
    un = sum(u[j] * m[j] for j in range(n))
    kz = sum(k[j] * zp[j] for j in range(n))
    npos = sum(1 for x in p if x > 0)

    qz = -sum(z[i] * M[i][j] * z[j] for i in range(n) for j in range(n)) - 2 * sum(
        k[j] * z[j] for j in range(n)
    )

    explored = 0
    qmin = None
    n_min = 0
    minimizers = []
    n_below = 0
    first_below = None
    n_tie = 0
    first_tie = None
    id_fail = 0

    while True:
        explored += 1
        q = -qq - 2 * kz
        rhs = -pp - 2 * up - nn + 2 * un + 2 * pn
        if q - qz != rhs:
            id_fail += 1
        if qmin is None or q < qmin:
            qmin = q
            n_min = 1
            minimizers = [tuple(zp)]
        elif q == qmin:
            n_min += 1
            if len(minimizers) < limit:
                minimizers.append(tuple(zp))
        if q < qz:
            n_below += 1
            if first_below is None:
                first_below = tuple(zp)
        elif q == qz and npos > 0:
            n_tie += 1
            if first_tie is None:
                first_tie = tuple(zp)

        # odometer step
        i = 0
        while i < n and zp[i] >= hi[i]:
            i += 1
        if i == n:
            break
        for j in range(i + 1):
            new = lo[j] if j < i else zp[j] + 1
            dz = new - zp[j]
            if dz == 0:
                continue
            newp = max(new - z[j], 0)
            newm = max(z[j] - new, 0)
            dp = newp - p[j]
            dm = newm - m[j]
            mjj = M[j][j]
            row = M[j]
            qq += 2 * dz * v[j] + dz * dz * mjj
            pn += dp * mn[j] + dm * mp[j] + dp * dm * mjj
            pp += 2 * dp * mp[j] + dp * dp * mjj
            nn += 2 * dm * mn[j] + dm * dm * mjj
            for r in range(n):
                c = row[r]
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

    return (explored, qz, qmin, n_min, minimizers, n_below, first_below, n_tie, first_tie, id_fail)


def scan_antinef(n, mat, z, cap, order, checks, check_ptr):
    """Enumerate integral ``0 <= Z' <= cap``, ``Z' != 0`` with ``Z'.F_j <= 0`` for all ``j``.

    Vertices are assigned in ``order``; after assigning position ``d`` the
    vertices ``checks[check_ptr[d]:check_ptr[d + 1]]`` have their whole
    closed neighbourhood fixed and are tested, pruning the subtree. Returns
    ``(visited, n_solutions, meet, first_not_above, contains_z)``.
    """
    mat = list(mat)
    M = [mat[i * n:(i + 1) * n] for i in range(n)]
    z = list(z)
    order = list(order)
    checks = list(checks)
    check_ptr = list(check_ptr)
    zp = [0] * n
    v = [0] * n
    meet = None
    visited = 0
    n_sol = 0
    first_bad = None
    contains_z = False

    # iterative DFS: value at each depth runs 0..cap
    depth = 0
    val = [-1] * n
    while depth >= 0:
        j = order[depth]
        if val[depth] >= cap:
            # retreat: undo this coordinate
            d = -zp[j]
            if d:
                row = M[j]
                for r in range(n):
                    if row[r]:
                        v[r] += d * row[r]
                zp[j] = 0
            val[depth] = -1
            depth -= 1
            continue
        val[depth] += 1
        new = val[depth]
        d = new - zp[j]
        row = M[j]
        for r in range(n):
            if row[r]:
                v[r] += d * row[r]
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
            if any(zp):
                n_sol += 1
                if meet is None:
                    meet = list(zp)
                else:
                    for r in range(n):
                        if zp[r] < meet[r]:
                            meet[r] = zp[r]
                if first_bad is None and any(zp[r] < z[r] for r in range(n)):
                    first_bad = tuple(zp)
                if zp == z:
                    contains_z = True
        else:
            depth += 1
    return (visited, n_sol, tuple(meet) if meet else None, first_bad, contains_z)

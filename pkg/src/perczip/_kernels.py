"""Numba kernels for the hot loops: lattice walks, the slit-map zipper,
preimage evolution, trace generation, free-space reachability and disc
union areas.

Everything here is deterministic, allocation-light and branch-exact so
reflection/scaling symmetries hold to floating round-off.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U64 = np.uint64
_GAMMA = U64(0x9E3779B97F4A7C15)
_M1 = U64(0xBF58476D1CE4E5B9)
_M2 = U64(0x94D049BB133111EB)

WALK_OK = 0
WALK_WALL = 1
WALK_OVERRUN = 2

ZIP_OK = 0
ZIP_LEFT_PLANE = 1
ZIP_OVERFLOW = 2


@njit(cache=True, inline="always")
def _mix64(x):
    x = x + _GAMMA
    z = x
    z = (z ^ (z >> U64(30))) * _M1
    z = (z ^ (z >> U64(27))) * _M2
    return z ^ (z >> U64(31))


@njit(cache=True, inline="always")
def _cell_bit(seed, i, j):
    key = (U64(i & 0xFFFFFFFF) << U64(32)) | U64(j & 0xFFFFFFFF)
    return np.int64(_mix64(U64(seed) ^ key) >> U64(63))


# ---------------------------------------------------------------------------
# Square-lattice exploration walk (corridor following over hashed diagonals)
# ---------------------------------------------------------------------------
# Squares indexed (i, j); diagonal orientation slash=1 means the SE-NW
# diagonal, slash=0 the SW-NE one.  Entering a square moving in direction
# d (0=N, 1=E, 2=S, 3=W) exits in _ROUTE[slash][d].

_ROUTE_SLASH = np.array([3, 2, 1, 0], dtype=np.int64)
_ROUTE_BACK = np.array([1, 0, 3, 2], dtype=np.int64)
_DI = np.array([0, 1, 0, -1], dtype=np.int64)
_DJ = np.array([1, 0, -1, 0], dtype=np.int64)


@njit(cache=True, inline="always")
def _sq_orientation(seed, i, j, wall_j):
    # Bottom-row squares are forced: E-diagonals left of the start, dual
    # diagonals right of it.  E joins even-parity corners, so the E
    # orientation in square (i, j) is slash iff (i + j) is odd.
    if j == 0:
        if i < 0:
            return (i + j) & 1
        return (i + j + 1) & 1
    return _cell_bit(seed, i, j)


@njit(cache=True)
def sqp_walk_halfplane(seed, j_stop, i_wall, j_wall, max_steps, out_ij):
    """Trace the square-lattice exploration path in a truncated half-plane.

    Starts in square (0, 0) moving north and records visited square
    indices until the path reaches row j_stop.  Returns (n, status).
    """
    i = np.int64(0)
    j = np.int64(0)
    d = np.int64(0)
    n = 0
    for _ in range(max_steps):
        if n >= out_ij.shape[0]:
            return n, WALK_OVERRUN
        out_ij[n, 0] = i
        out_ij[n, 1] = j
        n += 1
        if j >= j_stop:
            return n, WALK_OK
        if i <= -i_wall or i >= i_wall or j >= j_wall:
            return n, WALK_WALL
        slash = _sq_orientation(seed, i, j, j_wall)
        if slash == 1:
            d = _ROUTE_SLASH[d]
        else:
            d = _ROUTE_BACK[d]
        i += _DI[d]
        j += _DJ[d]
        if j < 0:
            # Exiting through the bottom wall means the forced boundary
            # diagonals were violated; cannot happen for valid forcing.
            return n, WALK_WALL
    return n, WALK_OVERRUN


# ---------------------------------------------------------------------------
# Hexagonal-lattice interface walk
# ---------------------------------------------------------------------------
# Honeycomb vertices are (q, m): line m, x-index q.  x = q*(w/2),
# up-type (vertical edge to line m+1) iff q+m even, y = 1.5m + 1 for
# up-type and 1.5m + 0.5 for down-type (units of delta, w = sqrt(3)).


@njit(cache=True, inline="always")
def _hex_color(seed, hk, hi):
    # Row 0 is the forced boundary arc: color 0 left of the start, 1 right.
    if hk == 0:
        if hi <= 0:
            return np.int64(0)
        return np.int64(1)
    return _cell_bit(seed, hi, hk)


@njit(cache=True, inline="always")
def _vx(q):
    return q * 0.8660254037844386  # w/2 with w = sqrt(3)


@njit(cache=True, inline="always")
def _vy(q, m):
    if ((q + m) & 1) == 0:
        return 1.5 * m + 1.0
    return 1.5 * m + 0.5


@njit(cache=True)
def hex_walk_halfplane(seed, q_start, m_stop, q_wall, m_wall, max_steps, out_qm):
    """Trace the hexagonal interface upward from the boundary vertex
    (q_start, 0), with row-0 hexagon colors forced into two arcs.

    Records honeycomb vertices until a vertex on line m_stop is reached.
    """
    # Virtual incoming edge: arrived at the down-type start moving up
    # through the wall below it.
    qu = q_start
    mu = -1  # previous vertex (virtual, below the boundary line)
    qv = q_start
    mv = np.int64(0)
    prev_vertical = True
    n = 0
    for _ in range(max_steps):
        if n >= out_qm.shape[0]:
            return n, WALK_OVERRUN
        out_qm[n, 0] = qv
        out_qm[n, 1] = mv
        n += 1
        if mv >= m_stop:
            return n, WALK_OK
        if qv <= -q_wall or qv >= q_wall or mv >= m_wall:
            return n, WALK_WALL
        up = ((qv + mv) & 1) == 0
        # Identify the hexagon ahead (adjacent to both candidate edges).
        if up:
            if prev_vertical:
                # came down from line mv+1; ahead is the hexagon below
                hk = mv
                hi = (qv - (mv & 1)) >> 1
            elif qu < qv:
                # in from slant-left; ahead is above-right
                hk = mv + 1
                hi = (qv + 1 - ((mv + 1) & 1)) >> 1
            else:
                hk = mv + 1
                hi = (qv - 1 - ((mv + 1) & 1)) >> 1
        else:
            if prev_vertical:
                # came up from line mv-1; ahead is the hexagon above
                hk = mv + 1
                hi = (qv - ((mv + 1) & 1)) >> 1
            elif qu < qv:
                # in from slant-left; ahead is the row-(mv) hexagon right
                # of the wall below v
                hk = mv
                hi = (qv + 1 - (mv & 1)) >> 1
            else:
                hk = mv
                hi = (qv - 1 - (mv & 1)) >> 1
        color = _hex_color(seed, hk, hi)
        # Candidate continuations: the two edges other than the incoming.
        # color 0 must stay on the left of the walk, so color 0 ahead
        # forces a right turn.
        ivx = _vx(qv) - _vx(qu)
        ivy = _vy(qv, mv) - _vy(qu, mu)
        best_q = qv
        best_m = mv
        found = False
        for c in range(3):
            if c == 0:
                qw, mw = qv - 1, mv
            elif c == 1:
                qw, mw = qv + 1, mv
            else:
                if up:
                    qw, mw = qv, mv + 1
                else:
                    qw, mw = qv, mv - 1
            if qw == qu and mw == mu:
                continue
            if mw < 0:
                continue
            ovx = _vx(qw) - _vx(qv)
            ovy = _vy(qw, mw) - _vy(qv, mv)
            cross = ivx * ovy - ivy * ovx
            if color == 0:
                take = cross < 0.0  # right turn
            else:
                take = cross > 0.0
            if take:
                best_q, best_m = qw, mw
                found = True
        if not found:
            return n, WALK_WALL
        prev_vertical = best_q == qv
        qu, mu = qv, mv
        qv, mv = best_q, best_m
    return n, WALK_OVERRUN


# ---------------------------------------------------------------------------
# Loewner zipper: driving extraction by vertical-slit composition
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _apply_step(u, v, x, y):
    # One vertical-slit map u + sqrt((z - u)^2 + v^2), branch Im >= 0.
    a = x - u
    re = a * a - y * y + v * v
    im = 2.0 * a * y
    r = np.hypot(re, im)
    p = np.sqrt(0.5 * (r + re))
    q = np.sqrt(0.5 * max(r - re, 0.0))
    if im < 0.0:
        p = -p
    return u + p, q


@njit(cache=True)
def apply_chain(us, vs, m0, m1, x, y):
    """Push one point through chain steps [m0, m1)."""
    for j in range(m0, m1):
        x, y = _apply_step(us[j], vs[j], x, y)
    return x, y


@njit(cache=True)
def zip_path(px, py, cap_t, h_cap, min_sub, neg_tol, us, vs, dts,
             vert_t, vert_xi, vert_step, stack):
    """Absorb the polyline (px, py) by vertical-slit maps.

    h_cap > 0 bisects edges until each capacity increment is at most
    h_cap.  Returns (n_steps, n_vertices_done, t_end, xi_end, status).
    Vertex k is "done" when its point has been absorbed; vert_* arrays
    then hold its capacity time, driving value and chain position.
    """
    n = px.shape[0]
    max_steps = us.shape[0]
    m = 0
    t = 0.0
    tip = 0.0
    srcx = px[0]
    srcy = py[0]
    vert_t[0] = 0.0
    vert_xi[0] = 0.0
    vert_step[0] = 0
    done = 1
    for k in range(1, n):
        # stack of pending targets along the edge src -> p[k]
        sp = 0
        stack[sp, 0] = px[k]
        stack[sp, 1] = py[k]
        sp += 1
        while sp > 0:
            qx = stack[sp - 1, 0]
            qy = stack[sp - 1, 1]
            wx, wy = apply_chain(us, vs, 0, m, qx, qy)
            if wy < -neg_tol:
                return m, done, t, tip, ZIP_LEFT_PLANE
            if wy < 0.0:
                wy = 0.0
            seg = np.hypot(qx - srcx, qy - srcy)
            if h_cap > 0.0 and wy * wy * 0.25 > h_cap and seg > min_sub:
                if sp >= stack.shape[0]:
                    return m, done, t, tip, ZIP_OVERFLOW
                stack[sp, 0] = 0.5 * (srcx + qx)
                stack[sp, 1] = 0.5 * (srcy + qy)
                sp += 1
                continue
            sp -= 1
            if wy > 0.0:
                if m >= max_steps:
                    return m, done, t, tip, ZIP_OVERFLOW
                us[m] = wx
                vs[m] = wy
                dts[m] = wy * wy * 0.25
                t += dts[m]
                m += 1
            tip = wx
            srcx = qx
            srcy = qy
            if t >= cap_t:
                return m, done, t, tip, ZIP_OK
        vert_t[done] = t
        vert_xi[done] = tip
        vert_step[done] = m
        done += 1
    return m, done, t, tip, ZIP_OK


@njit(cache=True, inline="always")
def _map_real(u, v, x, side, guard):
    # Real boundary point under one slit map; `side` resolves the two
    # prime ends when x sits at the slit base.
    d = x - u
    if d > guard:
        return u + np.sqrt(d * d + v * v)
    if d < -guard:
        return u - np.sqrt(d * d + v * v)
    return u + side * np.sqrt(d * d + v * v)


@njit(cache=True)
def evolve_pairs(us, vs, create_step, query_step, guard, out_a, out_b):
    """Evolve boundary preimage pairs through the slit chain.

    Pair k is created coincident at the tip when the chain has
    create_step[k] maps; the first later map splits it across the new
    slit base (the curve continues from the old tip, so the pair
    brackets the next slit).  out_a/out_b[k, q] hold values after
    query_step[q] maps, NaN where the pair does not exist yet.
    """
    npair = create_step.shape[0]
    nq = query_step.shape[0]
    m = us.shape[0]
    for k in range(npair):
        s0 = create_step[k]
        a = np.nan
        b = np.nan
        qi = 0
        while qi < nq and query_step[qi] < s0:
            out_a[k, qi] = np.nan
            out_b[k, qi] = np.nan
            qi += 1
        # creation value: driving at the moment of absorption
        if s0 > 0:
            a = us[s0 - 1]
            b = a
        else:
            a = 0.0
            b = 0.0
        while qi < nq and query_step[qi] == s0:
            out_a[k, qi] = a
            out_b[k, qi] = b
            qi += 1
        for j in range(s0, m):
            if j == s0:
                a = us[j] + vs[j]
                b = us[j] - vs[j]
            else:
                a = _map_real(us[j], vs[j], a, 1.0, guard)
                b = _map_real(us[j], vs[j], b, -1.0, guard)
            while qi < nq and query_step[qi] == j + 1:
                out_a[k, qi] = a
                out_b[k, qi] = b
                qi += 1
        while qi < nq:
            out_a[k, qi] = a
            out_b[k, qi] = b
            qi += 1
    return 0


@njit(cache=True)
def trace_from_chain(us, vs, out_x, out_y):
    """Tip positions of the Loewner chain: gamma(t_k) = f_1 ... f_k(xi_k)."""
    n = us.shape[0]
    for k in range(n):
        x = us[k]
        y = 0.0
        for j in range(k, -1, -1):
            # inverse slit map u + sqrt((w-u)^2 - v^2), branch Im >= 0
            a = x - us[j]
            re = a * a - y * y - vs[j] * vs[j]
            im = 2.0 * a * y
            r = np.hypot(re, im)
            p = np.sqrt(0.5 * (r + re))
            q = np.sqrt(0.5 * max(r - re, 0.0))
            if im < 0.0:
                p = -p
            x = us[j] + p
            y = q
        out_x[k] = x
        out_y[k] = y
    return 0


# ---------------------------------------------------------------------------
# Free-space diagram decision for the curve metric
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _free_interval(ax, ay, bx, by, cx, cy, eps):
    # {s in [0,1] : |A + s(B-A) - C| <= eps}; returns (lo, hi), empty if lo>hi.
    dx = bx - ax
    dy = by - ay
    ex = ax - cx
    ey = ay - cy
    a = dx * dx + dy * dy
    b = 2.0 * (dx * ex + dy * ey)
    c = ex * ex + ey * ey - eps * eps
    if a == 0.0:
        if c <= 0.0:
            return 0.0, 1.0
        return 1.0, 0.0
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return 1.0, 0.0
    sd = np.sqrt(disc)
    lo = (-b - sd) / (2.0 * a)
    hi = (-b + sd) / (2.0 * a)
    if lo < 0.0:
        lo = 0.0
    if hi > 1.0:
        hi = 1.0
    return lo, hi


@njit(cache=True)
def frechet_decision(px, py, qx, qy, eps):
    """Alt-Godau reachability: is the Frechet distance <= eps?

    Free-space cells are convex, so a cell entered anywhere on its left
    or bottom edge reaches any dominating point of its top/right edges.
    """
    n = px.shape[0]
    m = qx.shape[0]
    if np.hypot(px[0] - qx[0], py[0] - qy[0]) > eps:
        return False
    if np.hypot(px[n - 1] - qx[m - 1], py[n - 1] - qy[m - 1]) > eps:
        return False
    if n == 1 or m == 1:
        if n == 1:
            for j in range(m - 1):
                lo, hi = _free_interval(qx[j], qy[j], qx[j + 1], qy[j + 1],
                                        px[0], py[0], eps)
                if not (lo == 0.0 and hi == 1.0):
                    return False
            return True
        for i in range(n - 1):
            lo, hi = _free_interval(px[i], py[i], px[i + 1], py[i + 1],
                                    qx[0], qy[0], eps)
            if not (lo == 0.0 and hi == 1.0):
                return False
        return True
    nc = n - 1
    mc = m - 1
    # reachable intervals on the bottom edges of the current cell row
    rb_lo = np.empty(nc, dtype=np.float64)
    rb_hi = np.empty(nc, dtype=np.float64)
    walk_ok = True  # can still walk along the bottom boundary
    for i in range(nc):
        lo, hi = _free_interval(px[i], py[i], px[i + 1], py[i + 1],
                                qx[0], qy[0], eps)
        if walk_ok and lo == 0.0:
            rb_lo[i] = lo
            rb_hi[i] = hi
            if hi < 1.0:
                walk_ok = False
        else:
            rb_lo[i] = 1.0
            rb_hi[i] = 0.0
            walk_ok = False
    left_ok = True  # can still climb the left boundary
    reached = False
    for j in range(mc):
        lo, hi = _free_interval(qx[j], qy[j], qx[j + 1], qy[j + 1],
                                px[0], py[0], eps)
        if left_ok and lo == 0.0:
            rl_lo, rl_hi = lo, hi
            if hi < 1.0:
                left_ok = False
        else:
            rl_lo, rl_hi = 1.0, 0.0
            left_ok = False
        for i in range(nc):
            bl = rb_lo[i]
            bh = rb_hi[i]
            b_reach = bl <= bh
            l_reach = rl_lo <= rl_hi
            if i == nc - 1 and j == mc - 1:
                reached = b_reach or l_reach
            # right edge of this cell
            lo, hi = _free_interval(qx[j], qy[j], qx[j + 1], qy[j + 1],
                                    px[i + 1], py[i + 1], eps)
            if b_reach:
                nl_lo, nl_hi = lo, hi
            elif l_reach:
                nl_lo = max(lo, rl_lo)
                nl_hi = hi
            else:
                nl_lo, nl_hi = 1.0, 0.0
            # top edge of this cell
            lo, hi = _free_interval(px[i], py[i], px[i + 1], py[i + 1],
                                    qx[j + 1], qy[j + 1], eps)
            if l_reach:
                nb_lo, nb_hi = lo, hi
            elif b_reach:
                nb_lo = max(lo, bl)
                nb_hi = hi
            else:
                nb_lo, nb_hi = 1.0, 0.0
            rb_lo[i] = nb_lo
            rb_hi[i] = nb_hi
            rl_lo, rl_hi = nl_lo, nl_hi
    return reached


# ---------------------------------------------------------------------------
# Disc-union area (hsiz)
# ---------------------------------------------------------------------------


@njit(cache=True)
def hsiz_columns(pxs, pys, x_lo, dx, nx, lo_buf, hi_buf):
    """Area of the union of discs tangent to R centred at (px, py).

    Column quadrature in x with exact interval-union measure in y.
    """
    n = pxs.shape[0]
    area = 0.0
    for c in range(nx):
        x = x_lo + (c + 0.5) * dx
        cnt = 0
        for k in range(n):
            r = pys[k]
            if r <= 0.0:
                continue
            d = x - pxs[k]
            if d > -r and d < r:
                s = np.sqrt(r * r - d * d)
                lo_buf[cnt] = r - s
                hi_buf[cnt] = r + s
                cnt += 1
        if cnt == 0:
            continue
        order = np.argsort(lo_buf[:cnt])
        total = 0.0
        cur_lo = lo_buf[order[0]]
        cur_hi = hi_buf[order[0]]
        for ii in range(1, cnt):
            k = order[ii]
            if lo_buf[k] > cur_hi:
                total += cur_hi - cur_lo
                cur_lo = lo_buf[k]
                cur_hi = hi_buf[k]
            elif hi_buf[k] > cur_hi:
                cur_hi = hi_buf[k]
        total += cur_hi - cur_lo
        area += total * dx
    return area

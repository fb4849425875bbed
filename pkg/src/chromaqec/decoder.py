"""Most-likely-error decoding for triangular 4.8.8 codes.

2D decoding (one perfect syndrome) minimizes data-error weight subject to
H x = s over GF(2).  3D decoding (d noisy rounds) minimizes total fault
weight over per-round data errors x_t and syndrome errors r_t subject to
H x_t + r_t + r_{t-1} = delta_s_t.  Both return certified optima.

The production path precomputes a per-syndrome table (min weight, one
witness, parity) by breadth-first enumeration over error weights; the 3D
problem is solved exactly as a shortest path over (round, syndrome-error)
states whose edge costs come from that table.
"""
from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass

import numpy as np
from numba import njit

from .gf2 import pack_rows
from .lattice import ColorCode

_TABLE_MAGIC = b"CHTB"
_TABLE_VERSION = 2


@dataclass
class DecodeResult:
    data_correction: np.ndarray          # (n,) for 2D, (rounds, n) for 3D
    syndrome_error_assignment: np.ndarray | None
    weight: int
    optimal: bool = True

    @property
    def parity(self) -> int:
        return int(self.data_correction.sum()) % 2


@dataclass(frozen=True)
class DecodeProblem2D:
    code: ColorCode
    s: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=np.uint8)
        if s.shape != (self.code.m,):
            raise ValueError(f"syndrome length {s.shape} != m={self.code.m}")
        object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class DecodeProblem3D:
    code: ColorCode
    rounds: int
    delta_s: np.ndarray

    def __post_init__(self):
        ds = np.asarray(self.delta_s, dtype=np.uint8)
        if ds.shape != (self.rounds, self.code.m):
            raise ValueError(
                f"delta_s shape {ds.shape} != ({self.rounds}, {self.code.m})")
        object.__setattr__(self, "delta_s", ds)


@njit(cache=True)
def _bfs_fill(cols, n, max_weight, minw, witness, parity):
    """Fill per-syndrome min weight by enumerating patterns weight-by-weight."""
    total = minw.shape[0]
    filled = 1
    minw[0] = 0
    witness[0] = 0
    parity[0] = 0
    idx = np.zeros(max_weight + 1, dtype=np.int64)
    for w in range(1, max_weight + 1):
        if filled == total:
            break
        for k in range(w):
            idx[k] = k
        while True:
            s = 0
            mask = np.uint64(0)
            for k in range(w):
                s ^= cols[idx[k]]
                mask |= np.uint64(1) << np.uint64(idx[k])
            if minw[s] == 255:
                minw[s] = w
                witness[s] = mask
                parity[s] = w & 1
                filled += 1
                if filled == total:
                    return filled
            pos = w - 1
            while pos >= 0 and idx[pos] == n - w + pos:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for k in range(pos + 1, w):
                idx[k] = idx[k - 1] + 1
    return filled


class LookupTable:
    """Per-syndrome minimum-weight data, witness mask and parity."""

    def __init__(self, code: ColorCode, minw, witness, parity):
        self.code = code
        self.minw = minw
        self.witness = witness
        self.parity = parity

    @property
    def size(self) -> int:
        return self.minw.shape[0]


def table_memory_estimate(code: ColorCode) -> int:
    return (1 << code.m) * 10


def build_lookup_table(code: ColorCode, allow_large: bool = False) -> LookupTable:
    """Solve the 2D decoding problem for every one of the 2^m syndromes.

    Guarded to d <= 7 unless allow_large (d=9 takes a while and 160 MiB).
    """
    if code.m > 24 or (code.distance > 7 and not allow_large):
        raise MemoryError(
            f"lookup table for d={code.distance} needs about "
            f"{table_memory_estimate(code)} bytes and a long enumeration; "
            "pass allow_large=True to force (d<=9)")
    cols = pack_syndrome_columns(code)
    total = 1 << code.m
    minw = np.full(total, 255, dtype=np.uint8)
    witness = np.zeros(total, dtype=np.uint64)
    parity = np.zeros(total, dtype=np.uint8)
    filled = _bfs_fill(cols.astype(np.int64), code.n, code.n,
                       minw, witness, parity)
    if filled != total:
        raise AssertionError("syndrome map not surjective; H lost rank?")
    return LookupTable(code, minw, witness, parity)


def pack_syndrome_columns(code: ColorCode) -> np.ndarray:
    """Column syndromes of H packed as integers (bit f = face f)."""
    return pack_rows(code.check_matrix.T).astype(np.uint32)


def syndrome_index(s: np.ndarray) -> int:
    bits = np.asarray(s, dtype=np.uint64)
    return int((bits << np.arange(bits.shape[0], dtype=np.uint64)).sum())


def _mask_to_bits(mask: int, n: int) -> np.ndarray:
    return ((int(mask) >> np.arange(n)) & 1).astype(np.uint8)


def decode_2d(problem: DecodeProblem2D,
              table: LookupTable | None = None) -> DecodeResult:
    """Minimum-weight correction for one perfect syndrome, certified."""
    code = problem.code
    if table is not None:
        si = syndrome_index(problem.s)
        x = _mask_to_bits(int(table.witness[si]), code.n)
        return DecodeResult(x, None, int(table.minw[si]))
    x, w = _coset_minimum(code, problem.s)
    return DecodeResult(x, None, w)


def _coset_minimum(code: ColorCode, s: np.ndarray) -> tuple[np.ndarray, int]:
    """Exhaust the syndrome coset via a Gray-code walk (n <= 64)."""
    from .gf2 import nullspace, solve

    if code.n > 64:
        raise NotImplementedError("coset enumeration supports n <= 64")
    x0 = solve(code.check_matrix, s)
    if x0 is None:
        raise ValueError("infeasible syndrome (rank-deficient H?)")
    basis = nullspace(code.check_matrix)
    k = basis.shape[0]
    if k > 26:
        raise NotImplementedError(
            f"coset too large to exhaust (2^{k}); use the lookup table")
    x0p = np.uint64(int(pack_rows(x0.reshape(1, -1))[0]))
    bp = pack_rows(basis).astype(np.uint64)
    best_mask, best_w = _coset_min_kernel(x0p, bp, k)
    return _mask_to_bits(int(best_mask), code.n), int(best_w)


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + \
        ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _coset_min_kernel(x0, basis, k):
    best_mask = x0
    best_w = _popcount64(x0)
    cur = x0
    g_prev = np.uint64(0)
    for t in range(1, 1 << k):
        g = np.uint64(t ^ (t >> 1))
        diff = g ^ g_prev
        b = 0
        while not (diff >> np.uint64(b)) & np.uint64(1):
            b += 1
        cur = cur ^ basis[b]
        g_prev = g
        w = _popcount64(cur)
        if w < best_w or (w == best_w and cur < best_mask):
            best_w = w
            best_mask = cur
    return best_mask, best_w


# -- 3D shortest path ---------------------------------------------------------

@njit(cache=True)
def _heap_push(hc, ht, hr, hk, hp, hu, size, c, t, r, k, pr, pu):
    i = size
    hc[i] = c
    ht[i] = t
    hr[i] = r
    hk[i] = k
    hp[i] = pr
    hu[i] = pu
    while i > 0:
        par = (i - 1) >> 1
        if hc[par] <= hc[i]:
            break
        hc[par], hc[i] = hc[i], hc[par]
        ht[par], ht[i] = ht[i], ht[par]
        hr[par], hr[i] = hr[i], hr[par]
        hk[par], hk[i] = hk[i], hk[par]
        hp[par], hp[i] = hp[i], hp[par]
        hu[par], hu[i] = hu[i], hu[par]
        i = par
    return size + 1


@njit(cache=True)
def _heap_pop(hc, ht, hr, hk, hp, hu, size):
    size -= 1
    hc[0], hc[size] = hc[size], hc[0]
    ht[0], ht[size] = ht[size], ht[0]
    hr[0], hr[size] = hr[size], hr[0]
    hk[0], hk[size] = hk[size], hk[0]
    hp[0], hp[size] = hp[size], hp[0]
    hu[0], hu[size] = hu[size], hu[0]
    i = 0
    while True:
        l = 2 * i + 1
        rgt = l + 1
        sm = i
        if l < size and hc[l] < hc[sm]:
            sm = l
        if rgt < size and hc[rgt] < hc[sm]:
            sm = rgt
        if sm == i:
            break
        hc[sm], hc[i] = hc[i], hc[sm]
        ht[sm], ht[i] = ht[i], ht[sm]
        hr[sm], hr[i] = hr[i], hr[sm]
        hk[sm], hk[i] = hk[i], hk[sm]
        hp[sm], hp[i] = hp[i], hp[sm]
        hu[sm], hu[i] = hu[i], hu[sm]
        i = sm
    return size


@njit(cache=True)
def _dijkstra_3d(ds_idx, minw, order, T, m_bits, dist, prev_u, prev_r, cap):
    """Exact min-cost path over (round, syndrome-error) states.

    Returns the terminal syndrome-error index, or -1 on heap overflow
    (caller retries with a larger capacity), or -2 if unreachable.
    """
    nsynd = 1 << m_bits
    hc = np.empty(cap, dtype=np.int64)
    ht = np.empty(cap, dtype=np.int32)
    hr = np.empty(cap, dtype=np.int32)
    hk = np.empty(cap, dtype=np.int32)
    hp = np.empty(cap, dtype=np.int32)
    hu = np.empty(cap, dtype=np.int32)
    size = 0
    size = _heap_push(hc, ht, hr, hk, hp, hu, size, 0, 0, 0, -1, -1, -1)
    while size > 0:
        c = hc[0]
        t = ht[0]
        r = hr[0]
        k = hk[0]
        pr = hp[0]
        pu = hu[0]
        size = _heap_pop(hc, ht, hr, hk, hp, hu, size)
        sid = (t << m_bits) | r
        if k < 0:
            if dist[sid] <= c:
                continue
            dist[sid] = c
            prev_u[sid] = pu
            prev_r[sid] = pr
            if t == T:
                return r
            if size + 1 > cap:
                return -1
            u0 = order[0]
            size = _heap_push(hc, ht, hr, hk, hp, hu, size,
                              c + minw[u0], t, r, 0, -1, -1)
        else:
            base = dist[sid]
            u = order[k]
            r_next = r ^ ds_idx[t] ^ u
            pc = 0
            x = r_next
            while x:
                pc += x & 1
                x >>= 1
            c_claim = base + minw[u] + pc
            nsid = ((t + 1) << m_bits) | r_next
            if size + 2 > cap:
                return -1
            if dist[nsid] > c_claim:
                size = _heap_push(hc, ht, hr, hk, hp, hu, size,
                                  c_claim, t + 1, r_next, -1, r, u)
            if k + 1 < nsynd:
                u1 = order[k + 1]
                size = _heap_push(hc, ht, hr, hk, hp, hu, size,
                                  base + minw[u1], t, r, k + 1, -1, -1)
    return -2


def decode_3d(problem: DecodeProblem3D,
              table: LookupTable | None = None) -> DecodeResult:
    """Certified minimum-weight explanation of a syndrome-difference history.

    Objective: total ones in all per-round data corrections plus all
    per-round syndrome-error assignments (r_0 := 0, r_rounds free).
    """
    code = problem.code
    T = problem.rounds
    if T < 1:
        raise ValueError("rounds must be >= 1")
    if table is None:
        table = build_lookup_table(code)
    m = code.m
    ds_idx = np.array([syndrome_index(problem.delta_s[t]) for t in range(T)],
                      dtype=np.int64)
    order = np.argsort(table.minw, kind="stable").astype(np.int64)
    nstates = (T + 1) << m
    cap = 1 << 16
    while True:
        dist = np.full(nstates, 1 << 60, dtype=np.int64)
        prev_u = np.full(nstates, -1, dtype=np.int64)
        prev_r = np.full(nstates, -1, dtype=np.int64)
        terminal = _dijkstra_3d(ds_idx, table.minw.astype(np.int64), order,
                                T, m, dist, prev_u, prev_r, cap)
        if terminal == -1:
            cap *= 4
            if cap > 1 << 26:
                raise MemoryError("3D decode frontier exceeded capacity")
            continue
        break
    if terminal < 0:
        raise AssertionError("3D decoding found no terminal state")
    xs = np.zeros((T, code.n), dtype=np.uint8)
    rs = np.zeros((T, m), dtype=np.uint8)
    r = int(terminal)
    for t in range(T, 0, -1):
        sid = (t << m) | r
        u = int(prev_u[sid])
        rp = int(prev_r[sid])
        xs[t - 1] = _mask_to_bits(int(table.witness[u]), code.n)
        rs[t - 1] = _mask_to_bits(r, m)
        r = rp
    weight = int(dist[(T << m) | int(terminal)])
    return DecodeResult(xs, rs, weight)


# -- slack-variable binary IP cross-check (real arithmetic) ------------------

def slack_ip_decode_2d(problem: DecodeProblem2D) -> DecodeResult:
    """Real-arithmetic slack formulation: min 1.x s.t. [H|-2I|-4I|-8I]y = s."""
    from scipy.optimize import Bounds, LinearConstraint, milp

    code = problem.code
    H = code.check_matrix.astype(float)
    m, n = H.shape
    A = np.concatenate([H, -2 * np.eye(m), -4 * np.eye(m), -8 * np.eye(m)],
                       axis=1)
    c = np.concatenate([np.ones(n), np.zeros(3 * m)])
    res = milp(
        c=c,
        constraints=LinearConstraint(A, problem.s.astype(float),
                                     problem.s.astype(float)),
        integrality=np.ones(A.shape[1]),
        bounds=Bounds(0, 1),
    )
    if not res.success:
        raise RuntimeError(f"slack IP failed: {res.message}")
    x = np.rint(res.x[:n]).astype(np.uint8)
    return DecodeResult(x, None, int(round(res.fun)))


def slack_ip_decode_3d(problem: DecodeProblem3D) -> DecodeResult:
    """Block slack formulation over rounds; practical for small codes only."""
    from scipy.optimize import Bounds, LinearConstraint, milp

    code = problem.code
    H = code.check_matrix.astype(float)
    m, n = H.shape
    T = problem.rounds
    nx, nr = n * T, m * T
    A = np.zeros((m * T, nx + nr + 3 * m * T))
    for t in range(T):
        A[t * m:(t + 1) * m, t * n:(t + 1) * n] = H
        A[t * m:(t + 1) * m, nx + t * m:nx + (t + 1) * m] = np.eye(m)
        if t > 0:
            A[t * m:(t + 1) * m, nx + (t - 1) * m:nx + t * m] = np.eye(m)
        base = nx + nr
        for k, coef in enumerate((-2.0, -4.0, -8.0)):
            A[t * m:(t + 1) * m,
              base + k * m * T + t * m:base + k * m * T + (t + 1) * m] = \
                coef * np.eye(m)
    c = np.concatenate([np.ones(nx + nr), np.zeros(3 * m * T)])
    rhs = problem.delta_s.reshape(-1).astype(float)
    res = milp(
        c=c,
        constraints=LinearConstraint(A, rhs, rhs),
        integrality=np.ones(A.shape[1]),
        bounds=Bounds(0, 1),
    )
    if not res.success:
        raise RuntimeError(f"slack IP failed: {res.message}")
    xs = np.rint(res.x[:nx]).astype(np.uint8).reshape(T, n)
    rs = np.rint(res.x[nx:nx + nr]).astype(np.uint8).reshape(T, m)
    return DecodeResult(xs, rs, int(round(res.fun)))


# -- table cache file ---------------------------------------------------------

def save_table(table: LookupTable, path) -> None:
    code = table.code
    header = struct.pack("<4sIIII", _TABLE_MAGIC, _TABLE_VERSION,
                         code.distance, code.n, code.m)
    payload = table.minw.tobytes() + table.witness.tobytes() + \
        np.packbits(table.parity).tobytes()
    digest = hashlib.sha256(header + payload).digest()[:8]
    with open(path, "wb") as fh:
        fh.write(header + digest + payload)


def load_table(code: ColorCode, path) -> LookupTable:
    with open(path, "rb") as fh:
        blob = fh.read()
    header, digest, payload = blob[:20], blob[20:28], blob[28:]
    magic, version, d, n, m = struct.unpack("<4sIIII", header)
    if magic != _TABLE_MAGIC or version != _TABLE_VERSION:
        raise ValueError("not a chromaqec table cache (or stale version)")
    if (d, n, m) != (code.distance, code.n, code.m):
        raise ValueError("table cache does not match this code")
    if hashlib.sha256(header + payload).digest()[:8] != digest:
        raise ValueError("table cache checksum mismatch")
    total = 1 << m
    minw = np.frombuffer(payload[:total], dtype=np.uint8).copy()
    witness = np.frombuffer(payload[total:total + 8 * total],
                            dtype=np.uint64).copy()
    packed = np.frombuffer(payload[total + 8 * total:], dtype=np.uint8)
    parity = np.unpackbits(packed)[:total].astype(np.uint8)
    return LookupTable(code, minw, witness, parity)

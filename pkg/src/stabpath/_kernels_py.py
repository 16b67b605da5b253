"""Pure-Python implementations of the hot kernels.

Every function here has a drop-in compiled twin in ``_kernels.pyx``; the
active one is chosen in :mod:`stabpath.core`. All bit masks are passed as
``numpy.uint64`` arrays, so qubit and generator-slot counts are limited to
64 on either backend.

Masks come in two flavours:

* qubit masks -- bit q set means the operator acts non-trivially on qubit q
  (for x/z component arrays, bit q is that qubit's symplectic component),
* combination masks -- bit s set means generator slot s is in the product.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def find_trivial_batch(cand_combos, cand_x, cand_z, pool_combos, pool_x, pool_z, pool_cand_idx):
    """Batch triviality test.

    Candidates and pool must be sorted by ascending combination size; the
    pool must contain every non-trivial stabilizer of the state. For each
    candidate c the scan visits pool members b with b a proper subset of c
    and |b| <= |c|//2, smallest first, and flags c as trivial on the first
    b whose value has support disjoint from S_b * S_c. Pool members that
    are themselves candidates already flagged trivial are skipped as
    witnesses (they can never be the only witness).

    pool_cand_idx[j] is the candidate index of pool member j, or -1.

    Returns (flags uint8 array, witness uint64 array) over candidates.
    """
    cc = [int(v) for v in cand_combos]
    cx = [int(v) for v in cand_x]
    cz = [int(v) for v in cand_z]
    pc = [int(v) for v in pool_combos]
    px = [int(v) for v in pool_x]
    pz = [int(v) for v in pool_z]
    pidx = [int(v) for v in pool_cand_idx]
    n_pool = len(pc)

    flags = np.zeros(len(cc), dtype=np.uint8)
    witness = np.zeros(len(cc), dtype=np.uint64)
    for i, c in enumerate(cc):
        size = c.bit_count()
        if size < 2:
            continue
        half = size >> 1
        xi = cx[i]
        zi = cz[i]
        for j in range(n_pool):
            b = pc[j]
            if b.bit_count() > half:
                break
            if b & ~c or b == c:
                continue
            k = pidx[j]
            if k >= 0 and flags[k]:
                continue
            supp_b = px[j] | pz[j]
            if supp_b & ((xi ^ px[j]) | (zi ^ pz[j])) == 0:
                flags[i] = 1
                witness[i] = b
                break
    return flags, witness


def single_shot_witness(combo, slot_x, slot_z):
    """Exhaustive triviality test for one combination.

    Enumerates the smaller halves of all bipartitions of ``combo`` in
    ascending cardinality (lexicographic within a cardinality) and returns
    the first half whose product has support disjoint from the rest, or 0
    when the combination is non-trivial. ``slot_x``/``slot_z`` are indexed
    by generator slot.
    """
    combo = int(combo)
    sx = [int(v) for v in slot_x]
    sz = [int(v) for v in slot_z]
    slots = [s for s in range(combo.bit_length()) if combo >> s & 1]
    size = len(slots)
    if size < 2:
        return 0
    total_x = 0
    total_z = 0
    for s in slots:
        total_x ^= sx[s]
        total_z ^= sz[s]
    for k in range(1, size // 2 + 1):
        for half in combinations(slots, k):
            bx = 0
            bz = 0
            for s in half:
                bx ^= sx[s]
                bz ^= sz[s]
            if (bx | bz) & ((total_x ^ bx) | (total_z ^ bz)) == 0:
                mask = 0
                for s in half:
                    mask |= 1 << s
                return mask
    return 0


def scan_pairs_disjoint_overlap(a_combos, a_old, a_new, b_combos, b_old, b_new, same):
    """Find pairs with disjoint combinations and supports that were disjoint
    before an update but overlap after it.

    Emits index pairs (i into A, j into B). With ``same`` true, A and B are
    the same sequence and only i < j is emitted.
    """
    ac = np.asarray(a_combos, dtype=np.uint64)
    bc = np.asarray(b_combos, dtype=np.uint64)
    a_old = np.asarray(a_old, dtype=np.uint64)
    a_new = np.asarray(a_new, dtype=np.uint64)
    b_old = np.asarray(b_old, dtype=np.uint64)
    b_new = np.asarray(b_new, dtype=np.uint64)
    out_i = []
    out_j = []
    for i in range(len(ac)):
        hit = ((ac[i] & bc) == 0) & ((a_old[i] & b_old) == 0) & ((a_new[i] & b_new) != 0)
        if same:
            hit[: i + 1] = False
        js = np.nonzero(hit)[0]
        out_i.extend([i] * len(js))
        out_j.extend(js.tolist())
    return np.array(out_i, dtype=np.int64), np.array(out_j, dtype=np.int64)


def scan_pattern_pairs(a_x, a_z, b_x, b_z, o_mask, same):
    """Find operator pairs that anticommute exactly at the output qubit.

    The per-qubit anticommutation mask of two Paulis is
    (x1 & z2) ^ (z1 & x2); a valid teleportation pair has that mask equal
    to the output-qubit mask: anticommuting there, commuting everywhere
    else. Returns index pairs (i into A, j into B); with ``same`` true only
    i < j is emitted.
    """
    ax = np.asarray(a_x, dtype=np.uint64)
    az = np.asarray(a_z, dtype=np.uint64)
    bx = np.asarray(b_x, dtype=np.uint64)
    bz = np.asarray(b_z, dtype=np.uint64)
    o_mask = np.uint64(o_mask)
    out_i = []
    out_j = []
    for i in range(len(ax)):
        hit = ((ax[i] & bz) ^ (az[i] & bx)) == o_mask
        if same:
            hit[: i + 1] = False
        js = np.nonzero(hit)[0]
        out_i.extend([i] * len(js))
        out_j.extend(js.tolist())
    return np.array(out_i, dtype=np.int64), np.array(out_j, dtype=np.int64)


def heralded_success_count(lost_masks, pattern_masks):
    """Count trials whose lost-qubit mask avoids some pattern entirely."""
    lost = np.asarray(lost_masks, dtype=np.uint64)
    pats = np.asarray(pattern_masks, dtype=np.uint64)
    if len(pats) == 0:
        return 0
    count = 0
    chunk = max(1, (1 << 22) // max(1, len(pats)))
    for start in range(0, len(lost), chunk):
        block = lost[start : start + chunk]
        ok = (block[:, None] & pats[None, :]) == 0
        count += int(ok.any(axis=1).sum())
    return count

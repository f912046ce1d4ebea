"""numpy-accelerated bulk products for large composition tables.

For a fixed right factor V the product is the same bit gather
(U o V).bits[A] = U.bits[t_V[A]] for every U, so a whole table column is one
fancy-index over a packed bit matrix. Only used for carriers up to 6 (vectors
fit in one uint64); the pure-Python path in structure.py is the reference.
"""

from __future__ import annotations

import numpy as np

from .groupoids import Groupoid
from .hyperspaces import Hyperspace
from .products import product_transform

BATCH_THRESHOLD = 2_000_000  # m * m * 2^n entries before the batch path pays off


def _bit_matrix(n: int, bits_list: list[int]) -> np.ndarray:
    nsub = 1 << n
    rows = [np.frombuffer(format(b, f"0{nsub}b")[::-1].encode(), dtype=np.uint8) - ord("0")
            for b in bits_list]
    return np.array(rows, dtype=np.uint8)


def _pack(rows: np.ndarray) -> np.ndarray:
    if rows.shape[1] < 64:
        pad = np.zeros((rows.shape[0], 64 - rows.shape[1]), dtype=np.uint8)
        rows = np.concatenate([rows, pad], axis=1)
    packed = np.packbits(rows, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).ravel()


def build_table(g: Groupoid, elements: list[Hyperspace]):
    """Composition table over `elements`; entry -1 marks an escaping product.

    Returns (table, first_escape) where first_escape is None or
    (i, j, product_hyperspace) for the first row-major escaping entry.
    """
    n = g.n
    if n > 6:
        raise ValueError("batch table path supports carriers up to 6")
    m = len(elements)
    bits_list = [h.bits for h in elements]
    M = _bit_matrix(n, bits_list)
    packed = _pack(M)
    order = np.argsort(packed, kind="stable")
    sorted_packed = packed[order]

    table = np.empty((m, m), dtype=np.int64)
    escape = None
    for j, v in enumerate(elements):
        t = np.array(product_transform(g, v), dtype=np.int64)
        col = _pack(M[:, t])
        pos = np.searchsorted(sorted_packed, col)
        pos = np.clip(pos, 0, m - 1)
        ok = sorted_packed[pos] == col
        idx = np.where(ok, order[pos], -1)
        table[:, j] = idx
        if escape is None and not ok.all():
            i = int(np.argmin(ok))
            prod_bits = int(col[i])
            escape = (i, j, Hyperspace._raw(n, prod_bits))
    return [[int(x) for x in row] for row in table], escape

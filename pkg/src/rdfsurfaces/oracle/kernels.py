"""Bit-parallel evaluation of a ground circuit over every relation assignment.

A circuit over ``n`` atoms is a straight-line program; instruction ``i``
computes register ``i``.  Each register holds a truth table with one bit per
assignment of the ``n`` atoms, packed into ``2**n / 64`` uint64 words.  Atom
``i < 6`` varies inside a word and uses a fixed mask; atom ``i >= 6`` is
constant across a word and follows bit ``i - 6`` of the word index.

Two interchangeable kernels are provided: a numba ``@njit`` loop and a pure
numpy fallback.  Set ``RDFSURFACES_NUMBA=0`` to force numpy.
"""

from __future__ import annotations

import os

import numpy as np

OP_FALSE, OP_TRUE, OP_ATOM, OP_NOT, OP_AND, OP_OR = range(6)

ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
LOW_MASKS = np.array(
    [
        0xAAAAAAAAAAAAAAAA,
        0xCCCCCCCCCCCCCCCC,
        0xF0F0F0F0F0F0F0F0,
        0xFF00FF00FF00FF00,
        0xFFFF0000FFFF0000,
        0xFFFFFFFF00000000,
    ],
    dtype=np.uint64,
)


def n_words(n_atoms: int) -> int:
    return 1 << max(0, n_atoms - 6)


def valid_mask(n_atoms: int) -> np.uint64:
    if n_atoms >= 6:
        return ALL
    return np.uint64((1 << (1 << n_atoms)) - 1)


# numpy kernel


def _np_chunk(ops, arg_a, arg_b, start: int, size: int) -> np.ndarray:
    words = np.arange(start, start + size, dtype=np.uint64)
    regs: list[np.ndarray] = []
    zeros = np.zeros(size, dtype=np.uint64)
    ones = np.full(size, ALL, dtype=np.uint64)
    for op, a, b in zip(ops.tolist(), arg_a.tolist(), arg_b.tolist()):
        if op == OP_ATOM:
            if a < 6:
                r = np.full(size, LOW_MASKS[a], dtype=np.uint64)
            else:
                bit = (words >> np.uint64(a - 6)) & np.uint64(1)
                r = np.where(bit == 1, ones, zeros)
        elif op == OP_NOT:
            r = ~regs[a]
        elif op == OP_AND:
            r = regs[a] & regs[b]
        elif op == OP_OR:
            r = regs[a] | regs[b]
        elif op == OP_TRUE:
            r = ones
        else:
            r = zeros
        regs.append(r)
    return regs[-1]


def first_true_numpy(ops, arg_a, arg_b, n_atoms: int, chunk: int = 4096) -> int:
    total = n_words(n_atoms)
    mask = valid_mask(n_atoms)
    for start in range(0, total, chunk):
        size = min(chunk, total - start)
        out = _np_chunk(ops, arg_a, arg_b, start, size) & mask
        hits = np.flatnonzero(out)
        if hits.size:
            w = int(hits[0])
            word = int(out[w])
            bit = (word & -word).bit_length() - 1
            return (start + w) * 64 + bit
    return -1


def table_numpy(ops, arg_a, arg_b, n_atoms: int, chunk: int = 4096) -> np.ndarray:
    total = n_words(n_atoms)
    out = np.empty(total, dtype=np.uint64)
    for start in range(0, total, chunk):
        size = min(chunk, total - start)
        out[start : start + size] = _np_chunk(ops, arg_a, arg_b, start, size)
    out &= valid_mask(n_atoms)
    return out


# numba kernel

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _nb_chunk(ops, arg_a, arg_b, masks, start, size, regs):
        n = ops.shape[0]
        full = np.uint64(0xFFFFFFFFFFFFFFFF)
        zero = np.uint64(0)
        one = np.uint64(1)
        for i in range(n):
            op = ops[i]
            a = arg_a[i]
            b = arg_b[i]
            if op == 2:
                if a < 6:
                    m = masks[a]
                    for j in range(size):
                        regs[i, j] = m
                else:
                    sh = np.uint64(a - 6)
                    for j in range(size):
                        w = np.uint64(start + j)
                        regs[i, j] = full if (w >> sh) & one else zero
            elif op == 3:
                for j in range(size):
                    regs[i, j] = ~regs[a, j]
            elif op == 4:
                for j in range(size):
                    regs[i, j] = regs[a, j] & regs[b, j]
            elif op == 5:
                for j in range(size):
                    regs[i, j] = regs[a, j] | regs[b, j]
            elif op == 1:
                for j in range(size):
                    regs[i, j] = full
            else:
                for j in range(size):
                    regs[i, j] = zero

    @numba.njit(cache=True)
    def _nb_first_true(ops, arg_a, arg_b, masks, total, mask, chunk):
        n = ops.shape[0]
        regs = np.empty((n, chunk), dtype=np.uint64)
        for start in range(0, total, chunk):
            size = min(chunk, total - start)
            _nb_chunk(ops, arg_a, arg_b, masks, start, size, regs)
            for j in range(size):
                word = regs[n - 1, j] & mask
                if word != 0:
                    bit = 0
                    while (word >> np.uint64(bit)) & np.uint64(1) == 0:
                        bit += 1
                    return (start + j) * 64 + bit
        return -1

    @numba.njit(cache=True)
    def _nb_table(ops, arg_a, arg_b, masks, total, mask, chunk, out):
        n = ops.shape[0]
        regs = np.empty((n, chunk), dtype=np.uint64)
        for start in range(0, total, chunk):
            size = min(chunk, total - start)
            _nb_chunk(ops, arg_a, arg_b, masks, start, size, regs)
            for j in range(size):
                out[start + j] = regs[n - 1, j] & mask


def first_true_numba(ops, arg_a, arg_b, n_atoms: int, chunk: int = 256) -> int:
    total = n_words(n_atoms)
    return int(_nb_first_true(ops, arg_a, arg_b, LOW_MASKS, total, valid_mask(n_atoms), min(chunk, total)))


def table_numba(ops, arg_a, arg_b, n_atoms: int, chunk: int = 256) -> np.ndarray:
    total = n_words(n_atoms)
    out = np.empty(total, dtype=np.uint64)
    _nb_table(ops, arg_a, arg_b, LOW_MASKS, total, valid_mask(n_atoms), min(chunk, total), out)
    return out


def use_numba() -> bool:
    flag = os.environ.get("RDFSURFACES_NUMBA", "1").strip().lower()
    return _HAVE_NUMBA and flag not in ("0", "false", "no", "off")


def first_true(ops, arg_a, arg_b, n_atoms: int) -> int:
    """Index of the first satisfying assignment, or -1."""
    if use_numba():
        return first_true_numba(ops, arg_a, arg_b, n_atoms)
    return first_true_numpy(ops, arg_a, arg_b, n_atoms)


def truth_table(ops, arg_a, arg_b, n_atoms: int) -> np.ndarray:
    if use_numba():
        return table_numba(ops, arg_a, arg_b, n_atoms)
    return table_numpy(ops, arg_a, arg_b, n_atoms)

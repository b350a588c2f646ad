"""GF(2) linear algebra on integer bitmask rows.

Rows are Python ints; bit i is column i. Everything here is small
(n <= 31 columns), so dense Gaussian elimination is plenty.
"""

from __future__ import annotations


def rank(rows: list[int]) -> int:
    """Rank of the matrix whose rows are the given bitmasks."""
    r = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            r += 1
    return r


def rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column per row), with pivot columns
    strictly increasing.
    """
    reduced: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for r, p in zip(reduced, pivots):
            if (row >> p) & 1:
                row ^= r
        if row == 0:
            continue
        p = (row & -row).bit_length() - 1
        for i, r in enumerate(reduced):
            if (r >> p) & 1:
                reduced[i] = r ^ row
        reduced.append(row)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], [pivots[i] for i in order]


def in_span(reduced: list[int], pivots: list[int], v: int) -> bool:
    """Whether v lies in the row span (rows must be in rref form)."""
    for r, p in zip(reduced, pivots):
        if (v >> p) & 1:
            v ^= r
    return v == 0


def nullspace(rows: list[int], width: int) -> list[int]:
    """Basis of {x : parity(row & x) = 0 for every row}."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for r, p in zip(reduced, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def parity(x: int) -> int:
    return x.bit_count() & 1


def css_logical_pairs(
    x_supports: list[int], z_supports: list[int], n: int
) -> tuple[list[int], list[int]]:
    """Paired logical X/Z supports for a CSS code.

    x_supports / z_supports are the X- and Z-generator supports. Returns
    (logical_x, logical_z) supports with logical_x[i] anticommuting with
    logical_z[i] only. Representatives are reduced to low weight greedily.
    """
    k = n - len(x_supports) - len(z_supports)
    # Logical X candidates commute with every Z generator but are not
    # products of X generators (and dually for logical Z).
    lx_pool = _coset_basis(nullspace(z_supports, n), x_supports)
    lz_pool = _coset_basis(nullspace(x_supports, n), z_supports)
    if len(lx_pool) != k or len(lz_pool) != k:
        raise ValueError("inconsistent CSS generator matrices")
    logical_x: list[int] = []
    logical_z: list[int] = []
    lx_pool = list(lx_pool)
    lz_pool = list(lz_pool)
    while lx_pool:
        x = lx_pool.pop(0)
        try:
            j = next(i for i, z in enumerate(lz_pool) if parity(x & z))
        except StopIteration:
            raise ValueError("could not pair logical operators") from None
        z = lz_pool.pop(j)
        # Strip this pair's anticommutation from the remaining candidates.
        lx_pool = [v ^ x if parity(v & z) else v for v in lx_pool]
        lz_pool = [v ^ z if parity(v & x) else v for v in lz_pool]
        logical_x.append(x)
        logical_z.append(z)
    return logical_x, logical_z


def _coset_basis(space: list[int], subspace_rows: list[int]) -> list[int]:
    """Vectors extending rowspan(subspace_rows) to span(space + subspace)."""
    reduced, pivots = rref(subspace_rows)
    out = []
    for v in space:
        w = v
        for r, p in zip(reduced, pivots):
            if (w >> p) & 1:
                w ^= r
        if w:
            reduced, pivots = rref(reduced + [w])
            out.append(v)
    return out

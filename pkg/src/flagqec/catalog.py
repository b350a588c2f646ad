"""Constructors for every code in the workbench.

Explicit generator data for the 5-qubit, Steane and the two distance-5
color codes, plus the constructive families: rotated surface codes,
quantum Reed-Muller codes QRM(m) and the [[15,7,3]] Hamming code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf2
from .pauli import PauliOperator, StabilizerCode

# Generator supports, 1-indexed as tabulated. The color codes are self-dual
# CSS: X and Z generators share supports. The [[17,1,5]] table prints one
# X generator as X5 X6 Z9 Z10; symmetry (and commutation) wants X5 X6 X9 X10,
# which is what we use.
_FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]

_STEANE_SUPPORTS = [(4, 5, 6, 7), (2, 3, 6, 7), (1, 3, 5, 7)]

_COLOR19_SUPPORTS = [
    (1, 2, 3, 4),
    (1, 3, 5, 7),
    (12, 13, 14, 15),
    (1, 2, 5, 6, 8, 9),
    (6, 9, 16, 19),
    (16, 17, 18, 19),
    (10, 11, 12, 15),
    (8, 9, 10, 11, 16, 17),
    (5, 7, 8, 11, 12, 13),
]

_COLOR17_SUPPORTS = [
    (1, 2, 3, 4),
    (1, 3, 5, 6),
    (5, 6, 9, 10),
    (7, 8, 11, 12),
    (9, 10, 13, 14),
    (11, 12, 15, 16),
    (8, 12, 16, 17),
    (3, 4, 6, 7, 10, 11, 14, 15),
]

FAMILIES = (
    "five_qubit",
    "steane",
    "color19",
    "color17",
    "rotated_surface",
    "qrm",
    "hamming15",
)


@dataclass(frozen=True)
class CodeSpec:
    """family plus its parameter (surface distance d, or QRM m)."""

    family: str
    parameter: int | None = None

    @staticmethod
    def parse(text: str) -> "CodeSpec":
        """Parse e.g. 'steane', 'rotated_surface(5)', 'surface5', 'qrm4'."""
        text = text.strip().lower()
        if "(" in text:
            fam, arg = text.rstrip(")").split("(")
            return CodeSpec(fam, int(arg))
        for fam in ("rotated_surface", "surface", "qrm"):
            if text.startswith(fam) and text[len(fam):].isdigit():
                family = "rotated_surface" if fam.startswith("s") or fam.startswith("r") else "qrm"
                return CodeSpec(family, int(text[len(fam):]))
        return CodeSpec(text)


def _mask(support_1based) -> int:
    m = 0
    for q in support_1based:
        m |= 1 << (q - 1)
    return m


def _css_code(name: str, n: int, supports_1based, d: int | None) -> StabilizerCode:
    """Self-dual CSS code: Z then X generators on the same supports, with
    full-weight logical representatives."""
    masks = [_mask(s) for s in supports_1based]
    gens = [PauliOperator(n, 0, m) for m in masks] + [PauliOperator(n, m, 0) for m in masks]
    full = (1 << n) - 1
    return StabilizerCode(
        name, n, gens, [PauliOperator(n, full, 0)], [PauliOperator(n, 0, full)], d=d
    )


def build_code(spec: CodeSpec | str) -> StabilizerCode:
    if isinstance(spec, str):
        spec = CodeSpec.parse(spec)
    fam = spec.family
    if fam == "five_qubit":
        gens = [PauliOperator.from_string(s) for s in _FIVE_QUBIT]
        return StabilizerCode(
            "five_qubit",
            5,
            gens,
            [PauliOperator(5, 0b11111, 0)],
            [PauliOperator(5, 0, 0b11111)],
            d=3,
        )
    if fam == "steane":
        return _css_code("steane", 7, _STEANE_SUPPORTS, d=3)
    if fam == "color19":
        return _css_code("color19", 19, _COLOR19_SUPPORTS, d=5)
    if fam == "color17":
        return _css_code("color17", 17, _COLOR17_SUPPORTS, d=5)
    if fam == "rotated_surface":
        d = spec.parameter
        if d is None or d < 3 or d % 2 == 0:
            raise ValueError("rotated_surface needs odd d >= 3")
        return _rotated_surface(d)
    if fam == "qrm":
        m = spec.parameter
        if m is None or m < 3:
            raise ValueError("qrm needs m >= 3")
        return _qrm(m)
    if fam == "hamming15":
        return _hamming15()
    raise ValueError(f"unknown code family {fam!r}")


# -- rotated surface code -----------------------------------------------------
#
# Data qubits on a d x d grid, qubit index = row*d + col. Faces sit between
# grid points; the face with corner (i, j) covers (i,j),(i,j+1),(i+1,j),
# (i+1,j+1) clipped to the grid. Interior faces alternate X/Z by (i+j)
# parity; two-qubit X faces live on the top/bottom edges and two-qubit
# Z faces on the left/right edges, so every Z face touches exactly two rows
# and every X face exactly two columns. Logical X runs down column 0,
# logical Z along row 0.


def surface_faces(d: int) -> list[tuple[str, tuple[int, ...]]]:
    """(kind, data-qubit tuple) per face, Z faces first then X faces."""
    faces = []
    for i in range(-1, d):
        for j in range(-1, d):
            corners = tuple(
                r * d + c
                for r, c in ((i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1))
                if 0 <= r < d and 0 <= c < d
            )
            kind = "X" if (i + j) % 2 == 0 else "Z"
            if len(corners) == 4:
                faces.append((kind, corners))
            elif len(corners) == 2:
                on_lr = j in (-1, d - 1)
                if kind == "Z" and on_lr:
                    faces.append((kind, corners))
                elif kind == "X" and not on_lr:
                    faces.append((kind, corners))
    faces.sort(key=lambda f: (f[0] != "Z", f[1]))
    return faces


def _rotated_surface(d: int) -> StabilizerCode:
    n = d * d
    gens = []
    for kind, qubits in surface_faces(d):
        m = 0
        for q in qubits:
            m |= 1 << q
        gens.append(PauliOperator(n, m, 0) if kind == "X" else PauliOperator(n, 0, m))
    col0 = 0
    for r in range(d):
        col0 |= 1 << (r * d)
    row0 = (1 << d) - 1
    return StabilizerCode(
        f"rotated_surface({d})",
        n,
        gens,
        [PauliOperator(n, col0, 0)],
        [PauliOperator(n, 0, row0)],
        d=d,
    )


# -- quantum Reed-Muller codes ------------------------------------------------


def _rm_generator(r: int, m: int) -> list[int]:
    """Generator rows (bitmasks over 2^m columns) of the order-r Reed-Muller
    code, by the Plotkin doubling recursion."""
    if r <= 0:
        return [(1 << (1 << m)) - 1]
    if m == 1:
        return [0b11, 0b10]  # rows (1 1) and (0 1), column 0 = bit 0
    top = _rm_generator(r, m - 1)
    bot = _rm_generator(r - 1, m - 1)
    half = 1 << (m - 1)
    return [row | (row << half) for row in top] + [row << half for row in bot]


def _shorten(rows: list[int]) -> list[int]:
    """Drop the all-ones first row and delete the first column."""
    return [row >> 1 for row in rows[1:]]


def qrm_generators(m: int) -> tuple[list[int], list[int]]:
    """(X-generator rows, Z-generator rows) of QRM(m) as bitmasks over
    n = 2^m - 1 qubits, from the shortened RM(1, m) / RM(m-2, m) codes."""
    if m < 3:
        raise ValueError("qrm needs m >= 3")
    x_rows = _shorten(_rm_generator(1, m))
    z_rows = _shorten(_rm_generator(m - 2, m))
    return x_rows, z_rows


def _qrm(m: int) -> StabilizerCode:
    n = (1 << m) - 1
    x_rows, z_rows = qrm_generators(m)
    gens = [PauliOperator(n, 0, z) for z in z_rows] + [PauliOperator(n, x, 0) for x in x_rows]
    full = (1 << n) - 1
    return StabilizerCode(
        f"qrm({m})", n, gens, [PauliOperator(n, full, 0)], [PauliOperator(n, 0, full)], d=3
    )


def _hamming15() -> StabilizerCode:
    n = 15
    checks = []
    for bit in range(4):
        mask = 0
        for q in range(1, 16):
            if (q >> bit) & 1:
                mask |= 1 << (q - 1)
        checks.append(mask)
    gens = [PauliOperator(n, 0, m) for m in checks] + [PauliOperator(n, m, 0) for m in checks]
    lx, lz = gf2.css_logical_pairs(checks, checks, n)
    return StabilizerCode(
        "hamming15",
        n,
        gens,
        [PauliOperator(n, m, 0) for m in lx],
        [PauliOperator(n, 0, m) for m in lz],
        d=3,
    )


# -- validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    code: str
    failures: list[str]
    distance_found: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_code(
    code: StabilizerCode, check_distance: bool = True, css_bound: int = 25, general_bound: int = 13
) -> ValidationReport:
    """Commutation, independence, logical pairing, and (where feasible)
    brute-force distance. Returns a failure list instead of raising."""
    fails: list[str] = []
    gens = code.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].commutes_with(gens[j]):
                fails.append(f"generators {i} and {j} anticommute")
    rows = [g.x | (g.z << code.n) for g in gens]
    if gf2.rank(rows) != len(gens):
        fails.append("generators are linearly dependent")
    for i in range(code.k):
        for g in gens:
            if not code.logical_x[i].commutes_with(g):
                fails.append(f"logical_x[{i}] anticommutes with a generator")
                break
        for g in gens:
            if not code.logical_z[i].commutes_with(g):
                fails.append(f"logical_z[{i}] anticommutes with a generator")
                break
        for j in range(code.k):
            want = i == j
            got = not code.logical_x[i].commutes_with(code.logical_z[j])
            if got != want:
                fails.append(f"logical pairing broken at ({i},{j})")
    dist = None
    if check_distance and not fails:
        if code.is_css and code.n <= css_bound:
            dist = _css_distance(code)
        elif code.n <= general_bound:
            dist = _general_distance(code)
        if dist is not None and code.d is not None and dist != code.d:
            fails.append(f"distance {dist} != declared {code.d}")
    return ValidationReport(code.name, fails, dist)


def _css_distance(code: StabilizerCode) -> int:
    x_rows = [code.generators[i].x for i in code.x_generator_indices]
    z_rows = [code.generators[i].z for i in code.z_generator_indices]
    best = code.n
    for err_rows, stab_rows in ((z_rows, x_rows), (x_rows, z_rows)):
        # Z-type logicals commute with X checks; dually for X-type.
        reduced, pivots = gf2.rref(err_rows)
        for w in range(1, best + 1):
            found = False
            for qubits in itertools.combinations(range(code.n), w):
                v = 0
                for q in qubits:
                    v |= 1 << q
                if any(gf2.parity(v & h) for h in stab_rows):
                    continue
                if not gf2.in_span(reduced, pivots, v):
                    best = min(best, w)
                    found = True
                    break
            if found:
                break
    return best


def _general_distance(code: StabilizerCode) -> int:
    from .pauli import _MASKS

    for w in range(1, code.n + 1):
        for qubits in itertools.combinations(range(code.n), w):
            for combo in itertools.product("XYZ", repeat=w):
                x = z = 0
                for q, c in zip(qubits, combo):
                    xb, zb = _MASKS[c]
                    x |= xb << q
                    z |= zb << q
                e = PauliOperator(code.n, x, z)
                if code.syndrome(e) == 0 and code.logical_bits(e) != 0:
                    return w
    return code.n

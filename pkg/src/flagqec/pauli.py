"""Binary-symplectic Pauli algebra and stabilizer-code bookkeeping.

Paulis are phaseless: an n-qubit operator is a pair of bitmasks (x, z) with
bit i giving the X / Z component on qubit i. Y on qubit i sets both bits.
Multiplication is XOR of the masks, so every operator squares to identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from . import gf2

_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_MASKS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class PauliOperator:
    """Phaseless n-qubit Pauli as an X/Z bitmask pair."""

    n: int
    x: int = 0
    z: int = 0

    @staticmethod
    def from_string(s: str) -> "PauliOperator":
        x = z = 0
        for i, c in enumerate(s):
            xb, zb = _MASKS[c]
            x |= xb << i
            z |= zb << i
        return PauliOperator(len(s), x, z)

    @staticmethod
    def from_support(n: int, kind: str, qubits) -> "PauliOperator":
        """Single-letter Pauli ('X', 'Y' or 'Z') on the given qubits."""
        mask = 0
        for q in qubits:
            mask |= 1 << q
        xb, zb = _MASKS[kind]
        return PauliOperator(n, mask if xb else 0, mask if zb else 0)

    @staticmethod
    def identity(n: int) -> "PauliOperator":
        return PauliOperator(n, 0, 0)

    def to_string(self) -> str:
        return "".join(
            _LETTER[(self.x >> i) & 1, (self.z >> i) & 1] for i in range(self.n)
        )

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(i for i in range(self.n) if (m >> i) & 1)

    def is_identity(self) -> bool:
        return not (self.x | self.z)

    def commutes_with(self, other: "PauliOperator") -> bool:
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise ValueError(f"qubit count mismatch: {self.n} != {other.n}")
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z)

    def __repr__(self) -> str:
        return f"Pauli({self.to_string()})"


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Phaseless product (XOR of supports)."""
    return a * b


def _sort_key(p: PauliOperator) -> tuple[int, str]:
    return (p.weight, p.to_string())


def canonical_rep(e: PauliOperator, group: list[PauliOperator]) -> PauliOperator:
    """Minimum-weight representative of e modulo the span of `group`.

    Ties break lexicographically on the Pauli string (so supports sitting on
    higher-numbered qubits win, matching how flag error sets are tabulated).
    Intended for small groups (the measured stabilizer of one or two gadgets).
    """
    best = e
    best_key = _sort_key(e)
    r = len(group)
    for bits in range(1, 1 << r):
        cand = e
        for i in range(r):
            if (bits >> i) & 1:
                cand = cand * group[i]
        key = _sort_key(cand)
        if key < best_key:
            best, best_key = cand, key
    return best


class StabilizerCode:
    """Stabilizer code: generators, logical operators, syndrome machinery."""

    def __init__(
        self,
        name: str,
        n: int,
        generators: list[PauliOperator],
        logical_x: list[PauliOperator],
        logical_z: list[PauliOperator],
        d: int | None = None,
    ):
        self.name = name
        self.n = n
        self.generators = list(generators)
        self.logical_x = list(logical_x)
        self.logical_z = list(logical_z)
        self.k = n - len(generators)
        self.d = d
        if len(logical_x) != self.k or len(logical_z) != self.k:
            raise ValueError("logical operator count must equal k")
        for g in generators:
            if g.n != n:
                raise ValueError("generator length mismatch")

    @cached_property
    def is_css(self) -> bool:
        return all(g.x == 0 or g.z == 0 for g in self.generators)

    @cached_property
    def z_generator_indices(self) -> tuple[int, ...]:
        """Indices of pure Z-type generators (detect X errors)."""
        return tuple(i for i, g in enumerate(self.generators) if g.x == 0 and g.z)

    @cached_property
    def x_generator_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.generators) if g.z == 0 and g.x)

    def syndrome(self, e: PauliOperator) -> int:
        """Bit i set iff e anticommutes with generator i."""
        if e.n != self.n:
            raise ValueError("operator length mismatch")
        s = 0
        for i, g in enumerate(self.generators):
            s |= (((e.x & g.z).bit_count() + (e.z & g.x).bit_count()) & 1) << i
        return s

    def syndrome_bits(self, ex: int, ez: int) -> int:
        """Syndrome of the frame (ex, ez) without building a PauliOperator."""
        s = 0
        for i, g in enumerate(self.generators):
            s |= (((ex & g.z).bit_count() + (ez & g.x).bit_count()) & 1) << i
        return s

    def logical_bits(self, e: PauliOperator) -> int:
        """Anticommutation pattern with the logical operators.

        Bit 2i flags logical-X content (anticommutes with logical_z[i]),
        bit 2i+1 logical-Z content. Additive under multiplication, and two
        equal-syndrome errors are logically equivalent iff their bits agree.
        """
        b = 0
        for i in range(self.k):
            lz = self.logical_z[i]
            lx = self.logical_x[i]
            b |= (((e.x & lz.z).bit_count() + (e.z & lz.x).bit_count()) & 1) << (2 * i)
            b |= (((e.x & lx.z).bit_count() + (e.z & lx.x).bit_count()) & 1) << (2 * i + 1)
        return b

    def logical_class(self, e: PauliOperator) -> tuple[int, int]:
        """Coset label: (syndrome, logical bits of e * E_min(syndrome)).

        For syndrome-0 operators the second entry labels the coset of e in
        N(S)/S; 0 means e is a stabilizer.
        """
        s = self.syndrome(e)
        res = self.logical_bits(e)
        if s:
            res ^= self.logical_bits(self.min_weight_table().correction(s))
        return (s, res)

    def min_weight_table(self) -> "MinWeightTable":
        if getattr(self, "_mw_full", None) is None:
            self._mw_full = build_min_weight_table(self)
        return self._mw_full

    def css_z_table(self) -> "MinWeightTable":
        """Min-weight Z corrections keyed by the X-generator half-syndrome."""
        if getattr(self, "_mw_z", None) is None:
            self._mw_z = build_min_weight_table(self, kind="z")
        return self._mw_z

    def css_x_table(self) -> "MinWeightTable":
        if getattr(self, "_mw_x", None) is None:
            self._mw_x = build_min_weight_table(self, kind="x")
        return self._mw_x

    def ideal_correction(self, e: PauliOperator) -> PauliOperator:
        """Noiseless minimum-weight decode (per CSS half when applicable)."""
        if self.is_css:
            zc = self.css_z_table().correction(self.half_syndrome(e, "z"))
            xc = self.css_x_table().correction(self.half_syndrome(e, "x"))
            return zc * xc
        return self.min_weight_table().correction(self.syndrome(e))

    def half_syndrome(self, e: PauliOperator, kind: str) -> int:
        """Compressed syndrome over X-type generators (kind='z', detects the
        Z part of e) or Z-type generators (kind='x')."""
        idx = self.x_generator_indices if kind == "z" else self.z_generator_indices
        s = 0
        for j, i in enumerate(idx):
            g = self.generators[i]
            s |= (((e.x & g.z).bit_count() + (e.z & g.x).bit_count()) & 1) << j
        return s

    def is_stabilizer(self, e: PauliOperator) -> bool:
        return self.syndrome(e) == 0 and self.logical_bits(e) == 0

    def is_logical(self, e: PauliOperator) -> bool:
        return self.syndrome(e) == 0 and self.logical_bits(e) != 0

    # -- plain-text serialization ------------------------------------------

    def to_text(self) -> str:
        lines = [f"# {self.name} [[{self.n},{self.k},{self.d}]]", "generators:"]
        lines += [g.to_string() for g in self.generators]
        lines.append("logical_x:")
        lines += [l.to_string() for l in self.logical_x]
        lines.append("logical_z:")
        lines += [l.to_string() for l in self.logical_z]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "StabilizerCode":
        name, d = "code", None
        section = None
        parts: dict[str, list[PauliOperator]] = {
            "generators": [],
            "logical_x": [],
            "logical_z": [],
        }
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                toks = line[1:].split()
                if toks:
                    name = toks[0]
                    if len(toks) > 1 and toks[1].startswith("[["):
                        d_str = toks[1].strip("[]").split(",")[2]
                        d = None if d_str == "None" else int(d_str)
                continue
            if line.endswith(":"):
                section = line[:-1]
                continue
            parts[section].append(PauliOperator.from_string(line))
        n = parts["generators"][0].n
        return StabilizerCode(
            name, n, parts["generators"], parts["logical_x"], parts["logical_z"], d=d
        )


def syndrome(code: StabilizerCode, e: PauliOperator) -> int:
    return code.syndrome(e)


def logical_class(code: StabilizerCode, e: PauliOperator) -> tuple[int, int]:
    return code.logical_class(e)


@dataclass
class MinWeightTable:
    """Complete syndrome -> fixed minimum-weight correction map."""

    kind: str  # 'full', 'z' (Z-type errors) or 'x'
    n_bits: int
    entries: dict[int, PauliOperator] = field(default_factory=dict)

    def correction(self, s: int) -> PauliOperator:
        return self.entries[s]

    def max_stored_weight(self) -> int:
        return max(e.weight for e in self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)


def build_min_weight_table(
    code: StabilizerCode, kind: str = "full", max_n: int = 25
) -> MinWeightTable:
    """Breadth-first table build: errors enumerated by increasing weight,
    lexicographically within each weight, first found wins.

    kind='z' / 'x' builds the CSS half-table (Z-type / X-type errors keyed
    by the opposite-type generator half-syndrome).
    """
    n = code.n
    if n > max_n:
        raise ValueError(f"enumeration bound exceeded: n={n} > {max_n}")
    if kind == "full":
        idx = list(range(len(code.generators)))
        letters = ("X", "Y", "Z")
    elif kind == "z":
        idx = list(code.x_generator_indices)
        letters = ("Z",)
    elif kind == "x":
        idx = list(code.z_generator_indices)
        letters = ("X",)
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    gens = [code.generators[i] for i in idx]
    total = 1 << len(gens)
    table = MinWeightTable(kind, len(gens))

    def syn(e: PauliOperator) -> int:
        s = 0
        for i, g in enumerate(gens):
            s |= (((e.x & g.z).bit_count() + (e.z & g.x).bit_count()) & 1) << i
        return s

    for w in range(n + 1):
        for qubits in itertools.combinations(range(n), w):
            for combo in itertools.product(letters, repeat=w):
                x = z = 0
                for q, c in zip(qubits, combo):
                    xb, zb = _MASKS[c]
                    x |= xb << q
                    z |= zb << q
                e = PauliOperator(n, x, z)
                s = syn(e)
                if s not in table.entries:
                    table.entries[s] = e
                    if len(table.entries) == total:
                        return table
    raise ValueError("syndrome space not covered; generators dependent?")

"""Time-stepped Clifford measurement gadgets and fault propagation.

A gadget measures one (or, for the compact Steane circuit, several) Pauli
operators using a measurement ancilla per operator plus flag ancillas.
Qubits 0..n_data-1 are data; ancillas follow. Every gate, preparation,
measurement and materialized idle slot is a fault location.

Conjugation rules used by the frame propagator (phaseless):
  CNOT(c,t): X_c -> X_c X_t,  Z_t -> Z_c Z_t
  XNOT(c,t): Z_c -> Z_c X_t,  Z_t -> X_c Z_t   (XNOT = H_c CNOT H_c)
  CZ(a,b):   X_a -> X_a Z_b,  X_b -> Z_a X_b
Faults act after their gate; preparation faults flip the prepared state;
measurement faults flip the classical outcome only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .pauli import PauliOperator

OP_CNOT = 0
OP_XNOT = 1
OP_CZ = 2
OP_PREP_Z = 3
OP_PREP_X = 4
OP_MEAS_Z = 5
OP_MEAS_X = 6
OP_IDLE = 7

_OP_NAMES = ["CNOT", "XNOT", "CZ", "PREP_Z", "PREP_X", "MEAS_Z", "MEAS_X", "IDLE"]
_OP_CODES = {name: i for i, name in enumerate(_OP_NAMES)}

KIND_GATE = "two_qubit_gate"
KIND_PREP = "prep"
KIND_MEAS = "measure"
KIND_IDLE = "idle"

_KIND_OF = {
    OP_CNOT: KIND_GATE,
    OP_XNOT: KIND_GATE,
    OP_CZ: KIND_GATE,
    OP_PREP_Z: KIND_PREP,
    OP_PREP_X: KIND_PREP,
    OP_MEAS_Z: KIND_MEAS,
    OP_MEAS_X: KIND_MEAS,
    OP_IDLE: KIND_IDLE,
}


@dataclass(frozen=True)
class FaultLocation:
    index: int
    kind: str
    opcode: int
    qubits: tuple[int, ...]
    timestep: int


@dataclass
class PropagationResult:
    data_x: int
    data_z: int
    outcomes: tuple[int, ...]  # one bit per measurement qubit, gadget order
    flag_pattern: int  # bit j = flag ancilla j measured -1

    @property
    def flagged(self) -> bool:
        return self.flag_pattern != 0

    def data_error(self, n_data: int) -> PauliOperator:
        return PauliOperator(n_data, self.data_x, self.data_z)


class Circuit:
    """A measurement gadget: explicit timesteps over data + ancilla qubits.

    measured_paulis[i] is read out on measure_qubits[i]; flag_qubits are the
    remaining ancillas. Construction materializes an idle location for every
    data qubit in every timestep it is not gated, and for every ancilla
    between its preparation and measurement.
    """

    def __init__(
        self,
        name: str,
        n_data: int,
        n_anc: int,
        timesteps: list[list[tuple]],
        measured_paulis: list[PauliOperator],
        measure_qubits: list[int],
        flag_qubits: list[int],
    ):
        self.name = name
        self.n_data = n_data
        self.n_anc = n_anc
        self.n_qubits = n_data + n_anc
        self.measured_paulis = measured_paulis
        self.measure_qubits = measure_qubits
        self.flag_qubits = flag_qubits
        self.timesteps = self._insert_idles(timesteps)
        self._compile()

    # -- construction helpers ------------------------------------------------

    def _insert_idles(self, timesteps: list[list[tuple]]) -> list[list[tuple]]:
        n_steps = len(timesteps)
        first = {q: n_steps for q in range(self.n_qubits)}
        last = {q: -1 for q in range(self.n_qubits)}
        for t, ops in enumerate(timesteps):
            for op in ops:
                for q in op[1:]:
                    first[q] = min(first[q], t)
                    last[q] = max(last[q], t)
        out = []
        for t, ops in enumerate(timesteps):
            busy = {q for op in ops for q in op[1:]}
            row = list(ops)
            for q in range(self.n_data):
                if q not in busy:
                    row.append((OP_IDLE, q))
            for q in range(self.n_data, self.n_qubits):
                if q not in busy and first[q] <= t <= last[q]:
                    row.append((OP_IDLE, q))
            out.append(row)
        return out

    def _compile(self) -> None:
        self.locations: list[FaultLocation] = []
        self.ops: list[tuple] = []  # (opcode, a, b, loc_index)
        for t, row in enumerate(self.timesteps):
            for op in row:
                idx = len(self.locations)
                qubits = tuple(op[1:])
                self.locations.append(
                    FaultLocation(idx, _KIND_OF[op[0]], op[0], qubits, t)
                )
                a = op[1]
                b = op[2] if len(op) > 2 else -1
                self.ops.append((op[0], a, b, idx))
        self.cnot_locations = [l.index for l in self.locations if l.kind == KIND_GATE]
        self.prep_locations = [l.index for l in self.locations if l.kind == KIND_PREP]
        self.meas_locations = [l.index for l in self.locations if l.kind == KIND_MEAS]
        self.idle_locations = [l.index for l in self.locations if l.kind == KIND_IDLE]
        self._meas_order = {}
        order = 0
        for op in self.ops:
            if op[0] in (OP_MEAS_Z, OP_MEAS_X):
                self._meas_order[op[1]] = order
                order += 1

    @property
    def n_timesteps(self) -> int:
        return len(self.timesteps)

    def location_counts(self) -> dict[str, int]:
        return {
            KIND_GATE: len(self.cnot_locations),
            KIND_PREP: len(self.prep_locations),
            KIND_MEAS: len(self.meas_locations),
            KIND_IDLE: len(self.idle_locations),
        }

    # -- text round-trip -------------------------------------------------------

    def dump(self) -> str:
        head = (
            f"# {self.name} data={self.n_data} anc={self.n_anc} "
            f"measure={','.join(map(str, self.measure_qubits))} "
            f"flags={','.join(map(str, self.flag_qubits)) or '-'}\n"
        )
        head += "".join(f"P {p.to_string()}\n" for p in self.measured_paulis)
        lines = []
        for row in self.timesteps:
            lines.append(
                "; ".join(
                    " ".join([_OP_NAMES[op[0]]] + [str(q) for q in op[1:]])
                    for op in row
                    if op[0] != OP_IDLE
                )
            )
        return head + "\n".join(lines) + "\n"

    @staticmethod
    def load(text: str) -> "Circuit":
        lines = [l for l in text.splitlines() if l.strip()]
        header = lines[0].lstrip("# ").split()
        name = header[0]
        meta = dict(tok.split("=") for tok in header[1:])
        n_data = int(meta["data"])
        n_anc = int(meta["anc"])
        measure = [int(x) for x in meta["measure"].split(",")]
        flags = [] if meta["flags"] == "-" else [int(x) for x in meta["flags"].split(",")]
        paulis = []
        rows = []
        for line in lines[1:]:
            if line.startswith("P "):
                paulis.append(PauliOperator.from_string(line[2:].strip()))
                continue
            row = []
            for part in line.split(";"):
                toks = part.split()
                if toks:
                    row.append(tuple([_OP_CODES[toks[0]]] + [int(q) for q in toks[1:]]))
            rows.append(row)
        return Circuit(name, n_data, n_anc, rows, paulis, measure, flags)


def propagate(circuit: Circuit, faults: dict | None, ex: int = 0, ez: int = 0) -> PropagationResult:
    """Run the gadget on an incoming data Pauli frame with injected faults.

    faults maps location index -> (fx_mask, fz_mask, outcome_flip) in the
    circuit's qubit numbering. Returns the outgoing data error, the
    measurement-qubit outcome bits and the flag pattern.
    """
    fx, fz = ex, ez
    outcomes = [0] * len(circuit.measure_qubits)
    flag_pattern = 0
    meas_index = {q: i for i, q in enumerate(circuit.measure_qubits)}
    flag_index = {q: i for i, q in enumerate(circuit.flag_qubits)}
    get = faults.get if faults else None
    for opcode, a, b, loc in circuit.ops:
        if opcode == OP_CNOT:
            fx ^= ((fx >> a) & 1) << b
            fz ^= ((fz >> b) & 1) << a
        elif opcode == OP_XNOT:
            fx ^= ((fz >> a) & 1) << b
            fx ^= ((fz >> b) & 1) << a
        elif opcode == OP_CZ:
            fz ^= ((fx >> a) & 1) << b
            fz ^= ((fx >> b) & 1) << a
        elif opcode in (OP_PREP_Z, OP_PREP_X):
            mask = ~(1 << a)
            fx &= mask
            fz &= mask
        elif opcode == OP_MEAS_Z:
            bit = (fx >> a) & 1
            if get:
                f = get(loc)
                if f:
                    bit ^= f[2]
            if a in meas_index:
                outcomes[meas_index[a]] = bit
            mask = ~(1 << a)
            fx &= mask
            fz &= mask
            continue
        elif opcode == OP_MEAS_X:
            bit = (fz >> a) & 1
            if get:
                f = get(loc)
                if f:
                    bit ^= f[2]
            if a in flag_index:
                flag_pattern |= bit << flag_index[a]
            elif a in meas_index:
                outcomes[meas_index[a]] = bit
            mask = ~(1 << a)
            fx &= mask
            fz &= mask
            continue
        if get:
            f = get(loc)
            if f:
                fx ^= f[0]
                fz ^= f[1]
    data_mask = (1 << circuit.n_data) - 1
    return PropagationResult(fx & data_mask, fz & data_mask, tuple(outcomes), flag_pattern)


# -- gadget builders -----------------------------------------------------------


def _coupling_gates(p: PauliOperator) -> list[tuple[int, int]]:
    """(opcode, data qubit) couplings in ascending qubit order. Y factors
    couple twice, CNOT then XNOT, avoiding extra single-qubit gates."""
    gates = []
    for q in p.support:
        xb = (p.x >> q) & 1
        zb = (p.z >> q) & 1
        if zb:
            gates.append((OP_CNOT, q))
        if xb:
            gates.append((OP_XNOT, q))
    return gates


def _assemble(
    name: str,
    p: PauliOperator,
    schedule: list[tuple],
    n_flags: int,
    packed: bool = True,
    extra_flag_cycles: dict[int, list[int]] | None = None,
) -> Circuit:
    """Build a one-generator gadget from a schedule of couplings.

    schedule entries: ('dm', opcode, data_qubit) or ('fm', flag_id).
    The measurement ancilla is qubit n, flags n+1 .. n+n_flags. With
    packed=True all preparations share the first timestep and all
    measurements the last; otherwise each ancilla gets its own prep/meas
    step, staggered just-in-time around its first/last coupling.
    extra_flag_cycles inserts a mid-circuit measure+re-prepare of a flag
    before the given schedule positions (flag reuse).
    """
    n = p.n
    m = n
    flag_q = [n + 1 + j for j in range(n_flags)]
    steps: list[list[tuple]] = []
    if packed:
        steps.append([(OP_PREP_Z, m)] + [(OP_PREP_X, f) for f in flag_q])
        for pos, entry in enumerate(schedule):
            if extra_flag_cycles and pos in extra_flag_cycles:
                for fid in extra_flag_cycles[pos]:
                    steps.append([(OP_MEAS_X, flag_q[fid])])
                    steps.append([(OP_PREP_X, flag_q[fid])])
            if entry[0] == "dm":
                steps.append([(entry[1], entry[2], m)])
            else:
                steps.append([(OP_CNOT, flag_q[entry[1]], m)])
        steps.append([(OP_MEAS_Z, m)] + [(OP_MEAS_X, f) for f in flag_q])
    else:
        first_use = {}
        last_use = {}
        for pos, entry in enumerate(schedule):
            if entry[0] == "fm":
                first_use.setdefault(entry[1], pos)
                last_use[entry[1]] = pos
        steps.append([(OP_PREP_Z, m)])
        for fid in sorted(first_use, key=lambda f: first_use[f]):
            steps.append([(OP_PREP_X, flag_q[fid])])
        closed = set()
        for pos, entry in enumerate(schedule):
            if entry[0] == "dm":
                steps.append([(entry[1], entry[2], m)])
            else:
                steps.append([(OP_CNOT, flag_q[entry[1]], m)])
                if last_use[entry[1]] == pos:
                    closed.add(entry[1])
                    steps.append([(OP_MEAS_X, flag_q[entry[1]])])
        steps.append([(OP_MEAS_Z, m)])
    return Circuit(name, n, 1 + n_flags, steps, [p], [m], flag_q)


def build_nonflag_circuit(p: PauliOperator) -> Circuit:
    """Bare measurement gadget: one ancilla, one coupling per Pauli factor."""
    if p.weight < 2:
        raise ValueError("measured Pauli must have weight >= 2")
    schedule = [("dm", op, q) for op, q in _coupling_gates(p)]
    return _assemble(f"nonflag[{p.to_string()}]", p, schedule, 0)


def build_1flag_circuit(p: PauliOperator) -> Circuit:
    """One flag qubit, its coupling pair placed after the first and before
    the last data coupling."""
    if p.weight < 2:
        raise ValueError("measured Pauli must have weight >= 2")
    gates = _coupling_gates(p)
    schedule: list[tuple] = [("dm", *gates[0]), ("fm", 0)]
    for g in gates[1:-1]:
        schedule.append(("dm", *g))
    schedule.append(("fm", 0))
    schedule.append(("dm", *gates[-1]))
    return _assemble(f"1flag[{p.to_string()}]", p, schedule, 1)


def _two_flag_pairs(k: int) -> list[tuple[int, int]]:
    """Flag-pair placement for a k-coupling stabilizer measurement.

    Pair positions are (open_after, close_before) in coupling indices
    (1-based couplings; a pair (a, b) opens right after coupling a and
    closes right before coupling b). Pair 1 spans couplings 1..k-1, pair 2
    spans 2..k, and the remaining pairs open after every second coupling
    and close three couplings later.
    """
    if k == 4:
        return [(1, 4)]
    pairs = [(1, k - 1), (2, k)]
    n_pairs = (k + 1) // 2 - 1
    opener = 2
    for _ in range(n_pairs - 2):
        opener += 2
        pairs.append((opener, min(opener + 4, k)))  # close right after opener+3
    return pairs


def build_2flag_circuit(p: PauliOperator, reuse: bool = False, allow_odd: bool = False) -> Circuit:
    """General 2-flag gadget: w/2 - 1 flag-coupling pairs (w even).

    With reuse=True flag qubits are measured and re-prepared so at most
    four are live at a time. allow_odd=True extends the pair placement to
    odd weights (used when measuring odd-weight logical operators during
    state preparation); the extension is verified empirically in tests.
    """
    w = p.weight
    gates = _coupling_gates(p)
    k = len(gates)
    if w < 4 or k != w or (w % 2 and not allow_odd):
        raise ValueError("2-flag construction needs even weight >= 4, X/Z factors only")
    pairs = _two_flag_pairs(k)
    schedule = _interleave_pairs(gates, pairs)
    if not reuse or len(pairs) <= 4:
        return _assemble(f"2flag[{p.to_string()}]", p, schedule, len(pairs))
    # Greedy wire reuse: a pair takes the lowest flag freed before it opens.
    open_pos = {}
    close_pos = {}
    for pos, entry in enumerate(schedule):
        if entry[0] == "fm":
            if entry[1] in open_pos:
                close_pos[entry[1]] = pos
            else:
                open_pos[entry[1]] = pos
    assign: dict[int, int] = {}
    free_at: list[int] = []
    order = sorted(open_pos, key=lambda j: open_pos[j])
    cycles: dict[int, list[int]] = {}
    for j in order:
        slot = next((i for i, t in enumerate(free_at) if t < open_pos[j]), None)
        if slot is None:
            free_at.append(close_pos[j])
            assign[j] = len(free_at) - 1
        else:
            assign[j] = slot
            free_at[slot] = close_pos[j]
            cycles.setdefault(open_pos[j], []).append(slot)
    schedule = [("fm", assign[e[1]]) if e[0] == "fm" else e for e in schedule]
    return _assemble(
        f"2flag[{p.to_string()},reuse]", p, schedule, len(free_at), extra_flag_cycles=cycles
    )


def _interleave_pairs(gates, pairs) -> list[tuple]:
    """Merge coupling gates with flag pairs given as (open_after,
    close_before) coupling positions; openers precede closers in a gap."""
    schedule: list[tuple] = []
    for pos in range(1, len(gates) + 2):
        if pos <= len(gates):
            for j, (_, close) in enumerate(pairs):
                if close == pos:
                    schedule.append(("fm", j))
            schedule.append(("dm", *gates[pos - 1]))
        for j, (op, _) in enumerate(pairs):
            if op == pos:
                schedule.append(("fm", j))
    return schedule


def build_wflag_candidate(w: int) -> Circuit:
    """Candidate w-flag gadget for Z^w: w-1 flag qubits, 7w-8 timesteps.

    Two pair families. Family one opens before the first data coupling
    (openers nested, innermost last) and closes right after coupling i on
    flag i; family two opens right after that closer (reusing the flag
    freed one coupling earlier, plus one fresh flag) and closes in the gap
    before the last coupling, in ascending flag order. Flags carry two
    coupling pairs without re-preparation. Verified empirically: exhaustive
    to two faults, randomized for deeper fault sets (see tests).
    """
    if w < 6 or w % 2:
        raise ValueError("w-flag candidate needs even w >= 6")
    p = PauliOperator(w, 0, (1 << w) - 1)
    gates = _coupling_gates(p)
    n_mid = w - 2
    fam1_flag = {i: i for i in range(1, n_mid + 1)}
    fam2_flag = {1: 0, **{i: i - 1 for i in range(2, n_mid + 1)}}
    schedule: list[tuple] = []
    for i in range(n_mid, 0, -1):
        schedule.append(("fm", fam1_flag[i]))
    for i, g in enumerate(gates[:n_mid], start=1):
        schedule.append(("dm", *g))
        schedule.append(("fm", fam1_flag[i]))
        schedule.append(("fm", fam2_flag[i]))
    schedule.append(("dm", *gates[w - 2]))
    for i in sorted(range(1, n_mid + 1), key=lambda i: fam2_flag[i]):
        schedule.append(("fm", fam2_flag[i]))
    schedule.append(("dm", *gates[w - 1]))
    return _assemble(f"wflag[{w}]", p, schedule, w - 1, packed=False)


# Flag-pair staircase for the three-flag-qubit w=6 gadget, found by
# deterministic search over pair placements and verified exhaustively up to
# six faults (restricted fault set); 12 couplings, 14 timesteps.
SIX_FLAG_W6_PAIRS = [(1, 4), (2, 5), (3, 6)]


def build_fixed_circuit(which: str) -> Circuit:
    if which == "two_flag_w6":
        return build_2flag_circuit(PauliOperator(6, 0, 0b111111))
    if which == "six_flag_w6":
        p = PauliOperator(6, 0, 0b111111)
        schedule = _interleave_pairs(_coupling_gates(p), SIX_FLAG_W6_PAIRS)
        return _assemble("six_flag_w6", p, schedule, 3)
    if which == "three_flag_w8":
        # three flag qubits measuring Z^8; the w=8 instance of the general
        # two-flag construction
        return build_2flag_circuit(PauliOperator(8, 0, 0b11111111))
    if which == "compact_steane_z":
        return _compact_steane("Z")
    if which == "compact_steane_x":
        return _compact_steane("X")
    raise ValueError(f"unknown fixed circuit {which!r}")


# Per-generator data-coupling orders for the compact Steane gadget, found by
# deterministic search so that every flagged single-fault error keeps a
# unique syndrome across the union of the three sub-gadgets (see tests).
COMPACT_STEANE_ORDERS: list[tuple[int, ...]] | None = None  # set below


def _compact_steane(kind: str) -> Circuit:
    """All three Steane Z (or X) generators in one gadget: three measurement
    ancillas sharing a single flag qubit, one flag pair per sub-gadget."""
    from .catalog import build_code

    code = build_code("steane")
    idx = code.z_generator_indices if kind == "Z" else code.x_generator_indices
    gens = [code.generators[i] for i in idx]
    n = 7
    m_q = [n, n + 1, n + 2]
    f_q = n + 3
    steps: list[list[tuple]] = [
        [(OP_PREP_Z, m_q[0]), (OP_PREP_Z, m_q[1]), (OP_PREP_Z, m_q[2]), (OP_PREP_X, f_q)]
    ]
    opcode = OP_CNOT if kind == "Z" else OP_XNOT
    for gi, g in enumerate(gens):
        order = COMPACT_STEANE_ORDERS[gi]
        qubits = [sorted(g.support)[j] for j in order]
        m = m_q[gi]
        steps.append([(opcode, qubits[0], m)])
        steps.append([(OP_CNOT, f_q, m)])
        steps.append([(opcode, qubits[1], m)])
        steps.append([(opcode, qubits[2], m)])
        steps.append([(OP_CNOT, f_q, m)])
        steps.append([(opcode, qubits[3], m)])
    steps.append([(OP_MEAS_Z, q) for q in m_q] + [(OP_MEAS_X, f_q)])
    return Circuit(f"compact_steane_{kind.lower()}", n, 4, steps, gens, m_q, [f_q])


# -- t-flag verification -------------------------------------------------------


def fault_atoms(circuit: Circuit, restricted: bool = True) -> dict[int, list[tuple]]:
    """Allowed fault Paulis per two-qubit-gate location.

    restricted=True uses the sufficient set for t-flag checking: Z-type
    faults on flag couplings and {anticommuting-data-Pauli x (I or Z_m)}
    on data couplings. restricted=False yields all 15 two-qubit Paulis.
    """
    flag_set = set(circuit.flag_qubits)
    atoms: dict[int, list[tuple]] = {}
    for li in circuit.cnot_locations:
        loc = circuit.locations[li]
        a, b = loc.qubits
        if restricted:
            if a in flag_set:
                # {ZI, IZ, ZZ} on (flag, measurement)
                atoms[li] = [
                    (0, 1 << a, 0),
                    (0, 1 << b, 0),
                    (0, (1 << a) | (1 << b), 0),
                ]
            else:
                # data coupling: D_c and D_c Z_m with D anticommuting with
                # the measured factor (X for CNOT, Z for XNOT)
                if loc.opcode == OP_CNOT:
                    d = (1 << a, 0)
                else:
                    d = (0, 1 << a)
                atoms[li] = [
                    (d[0], d[1], 0),
                    (d[0], d[1] | (1 << b), 0),
                ]
        else:
            atoms[li] = [
                (xa << a | xb << b, za << a | zb << b, 0)
                for xa, za in ((0, 0), (1, 0), (1, 1), (0, 1))
                for xb, zb in ((0, 0), (1, 0), (1, 1), (0, 1))
                if (xa, za, xb, zb) != (0, 0, 0, 0)
            ]
    return atoms


@dataclass
class TFlagReport:
    circuit: str
    t: int
    mode: str
    combos_checked: int
    counterexample: list[tuple[int, tuple]] | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _combo_violates(circuit: Circuit, combo: list[tuple[int, tuple]]) -> bool:
    faults = {li: atom for li, atom in combo}
    res = propagate(circuit, faults)
    if res.flagged:
        return False
    p = circuit.measured_paulis[0]
    ew = (res.data_x | res.data_z).bit_count()
    q = PauliOperator(p.n, res.data_x ^ p.x, res.data_z ^ p.z)
    return min(ew, q.weight) > len(combo)


def verify_t_flag(
    circuit: Circuit,
    t: int,
    mode: str = "exhaustive",
    samples: int = 10**6,
    cap: int = 5 * 10**7,
    seed: int = 2024,
) -> TFlagReport:
    """Check the t-flag property: any v <= t faults whose data error has
    weight > v both before and after multiplying by the measured Pauli must
    raise a flag. Faults range over two-qubit gates with the restricted
    Pauli set, which is sufficient for these gadgets.
    """
    if len(circuit.measured_paulis) != 1:
        raise ValueError("t-flag verification applies to single-Pauli gadgets")
    atoms = fault_atoms(circuit, restricted=True)
    locs = sorted(atoms)
    if mode == "exhaustive":
        total = 0
        for v in range(1, t + 1):
            for subset in itertools.combinations(locs, v):
                count = 1
                for li in subset:
                    count *= len(atoms[li])
                total += count
        if total > cap:
            raise ValueError(f"exhaustive combination count {total} exceeds cap {cap}")
        checked = 0
        for v in range(1, t + 1):
            for subset in itertools.combinations(locs, v):
                for choice in itertools.product(*(atoms[li] for li in subset)):
                    combo = list(zip(subset, choice))
                    checked += 1
                    if _combo_violates(circuit, combo):
                        return TFlagReport(circuit.name, t, mode, checked, combo)
        return TFlagReport(circuit.name, t, mode, checked)
    if mode == "sampled":
        rng = random.Random(seed)
        for i in range(samples):
            v = rng.randint(1, t)
            subset = rng.sample(locs, min(v, len(locs)))
            combo = [(li, rng.choice(atoms[li])) for li in subset]
            if _combo_violates(circuit, combo):
                return TFlagReport(circuit.name, t, mode, i + 1, combo)
        return TFlagReport(circuit.name, t, mode, samples)
    raise ValueError(f"unknown mode {mode!r}")


def projective_measurement_ok(circuit: Circuit, trials: int = 200, seed: int = 7) -> bool:
    """Fault-free contract: outcome equals the commutation bit of the input
    frame with each measured Pauli, no flags, data frame unchanged."""
    rng = random.Random(seed)
    n = circuit.n_data
    for _ in range(trials):
        ex = rng.getrandbits(n)
        ez = rng.getrandbits(n)
        res = propagate(circuit, None, ex, ez)
        if res.flag_pattern or res.data_x != ex or res.data_z != ez:
            return False
        for i, p in enumerate(circuit.measured_paulis):
            want = ((ex & p.z).bit_count() + (ez & p.x).bit_count()) & 1
            if res.outcomes[i] != want:
                return False
    return True

"""A fleet of commuting endomorphism families used as evaluation fixtures.

Families are built over 1-, 2- and 3-dimensional charts and cover: zero and
scaled-identity families, constant generalized almost complex structures and
metrics, nilpotent form/vector-valued endomorphisms (some with entries linear
in the coordinates, to exercise nonconstant derivatives), and diagonal
vector-to-vector families with prescribed eigenvalues.

The JSON wire schema for a family is
``{"name": ..., "dim": n, "signature": [1, -1, ...],
   "matrices": [[...4n^2 poly strings, row-major], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .chart import Chart, CommutingFamily, Endomorphism, validate_family
from .parse import parse_polynomial, render_polynomial
from .poly import Polynomial
from .xyz import Signature


@dataclass(frozen=True)
class FleetFamily:
    name: str
    family: CommutingFamily


def _mat(chart: Chart, rows) -> Endomorphism:
    ring = chart.ring
    out = []
    for row in rows:
        out.append(
            tuple(e if isinstance(e, Polynomial) else ring.const(e) for e in row)
        )
    return Endomorphism(chart, out)


def _diag_vv(chart: Chart, diag, sym: bool) -> Endomorphism:
    """[[D, 0], [0, +-D]] for diagonal D: symmetric with +, skew with -."""
    n = chart.dim
    z = chart.ring.zero
    rows = []
    for i in range(n):
        row = [z] * 2 * n
        row[i] = chart.ring.const(diag[i])
        rows.append(row)
    for i in range(n):
        row = [z] * 2 * n
        row[n + i] = chart.ring.const(diag[i] if sym else -diag[i])
        rows.append(row)
    return Endomorphism(chart, rows)


def _form_valued(chart: Chart, c_matrix) -> Endomorphism:
    """[[0, 0], [C, 0]]: symmetric iff C is, skew iff C is."""
    n = chart.dim
    z = chart.ring.zero
    rows = [[z] * 2 * n for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            rows[n + i][j] = c_matrix[i][j]
    return Endomorphism(chart, rows)


def _vector_valued(chart: Chart, b_matrix) -> Endomorphism:
    """[[0, B], [0, 0]]: symmetric iff B is, skew iff B is."""
    n = chart.dim
    z = chart.ring.zero
    rows = [[z] * 2 * n for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            rows[i][n + j] = b_matrix[i][j]
    return Endomorphism(chart, rows)


def _metric(chart: Chart, diag) -> Endomorphism:
    """[[0, g^-1], [g, 0]] for a diagonal (pseudo-)metric g."""
    n = chart.dim
    z = chart.ring.zero
    rows = [[z] * 2 * n for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = chart.ring.const(Fraction(1, 1) / Fraction(diag[i]))
        rows[n + i][i] = chart.ring.const(diag[i])
    return Endomorphism(chart, rows)


def _kahler_structures(chart: Chart) -> tuple[Endomorphism, Endomorphism, Endomorphism]:
    """The flat Kaehler triple on a 2-dim chart: J_complex, J_symplectic, G."""
    assert chart.dim == 2
    o = chart.ring.one
    z = chart.ring.zero
    j0 = [[z, -o], [o, z]]
    jc = Endomorphism.from_blocks(chart, j0, [[z, z], [z, z]], [[z, z], [z, z]], j0)
    jw = Endomorphism.from_blocks(chart, [[z, z], [z, z]], j0, j0, [[z, z], [z, z]])
    return jc, jw, jc.compose(jw)


def build_fleet() -> list[FleetFamily]:
    """The shipped fixture fleet (>= 20 validated commuting families)."""
    out: list[FleetFamily] = []

    def add(name: str, members, sig_text: str):
        out.append(FleetFamily(name, validate_family(members, Signature.parse(sig_text))))

    c1, c2, c3 = Chart(1), Chart(2), Chart(3)
    u1 = c1.coordinate(1)

    # zero and identity-scaled families
    add("zero-sym-n1", [Endomorphism.zero(c1)], "+")
    add("zero-skew-n1", [Endomorphism.zero(c1)], "-")
    add("scaled-id-n1", [Endomorphism.identity(c1).scale(2), Endomorphism.identity(c1).scale(-3)], "++")
    add("scaled-id-n2", [Endomorphism.identity(c2).scale(Fraction(1, 2))], "+")

    # n = 1: vector/form scaling (skew) and nilpotent form-valued endos
    d_skew = _diag_vv(c1, [1], sym=False)
    add("diag-skew-n1", [d_skew], "-")
    add("diag-mixed-n1", [_diag_vv(c1, [2], sym=True), d_skew], "+-")
    add("form-valued-linear-n1", [_form_valued(c1, [[u1]]), _form_valued(c1, [[c1.scalar(3)]])], "++")
    add("vector-valued-n1", [_vector_valued(c1, [[c1.scalar(1)]]), _vector_valued(c1, [[u1]])], "++")
    add(
        "form-valued-quadratic-n1",
        [_form_valued(c1, [[u1 * u1]]), _diag_vv(c1, [5], sym=True)],
        "++",
    )

    # n = 2: constant generalized almost complex structures and metrics
    jc, jw, g = _kahler_structures(c2)
    add("gacs-complex-n2", [jc], "-")
    add("gacs-symplectic-n2", [jw], "-")
    add("kahler-pair-n2", [jc, jw], "--")
    add("kahler-metric-n2", [jc, g], "-+")
    add("kahler-triple-n2", [jc, jw, g], "--+")
    add("metric-pair-n2", [_metric(c2, [1, 1]), _metric(c2, [1, -1])], "++")
    u1_2 = c2.coordinate(1)
    skew_c = [[c2.ring.zero, u1_2], [-u1_2, c2.ring.zero]]
    add(
        "form-valued-skew-n2",
        [_form_valued(c2, [[c2.ring.zero, c2.scalar(1)], [c2.scalar(-1), c2.ring.zero]]), _form_valued(c2, skew_c)],
        "--",
    )
    sym_c = [[u1_2, c2.coordinate(2)], [c2.coordinate(2), c2.ring.zero]]
    add("form-valued-sym-n2", [_form_valued(c2, sym_c), Endomorphism.identity(c2).scale(4)], "++")
    add("diag-vv-sym-n2", [_diag_vv(c2, [1, 2], sym=True), _diag_vv(c2, [3, 5], sym=True)], "++")
    add("diag-vv-skew-n2", [_diag_vv(c2, [1, -1], sym=False), _diag_vv(c2, [2, 3], sym=False)], "--")
    add(
        "diag-mixed-n2",
        [
            _diag_vv(c2, [1, 4], sym=True),
            _diag_vv(c2, [2, -1], sym=False),
            _diag_vv(c2, [0, 3], sym=True),
        ],
        "+-+",
    )

    # generic non-integrable structures (nonzero torsion/quadratic tensors)
    z2, o2 = c2.ring.zero, c2.ring.one
    u2_2 = c2.coordinate(2)
    generic_skew = _mat(
        c2,
        [
            [u1_2, z2, z2, u2_2],
            [z2, z2, -u2_2, z2],
            [z2, o2, -u1_2, z2],
            [-o2, z2, z2, z2],
        ],
    )
    add("generic-skew-n2", [generic_skew], "-")
    generic_sym = _mat(
        c2,
        [
            [u2_2, z2, o2, z2],
            [z2, z2, z2, o2],
            [u1_2, z2, u2_2, z2],
            [z2, z2, z2, z2],
        ],
    )
    add("generic-sym-n2", [generic_sym], "+")
    add("generic-sym-pair-n2", [generic_sym, generic_sym.compose(generic_sym)], "++")
    add("generic-mixed-n2", [generic_skew, generic_skew.compose(generic_skew)], "-+")

    # n = 3 charts
    add("metric-n3", [_metric(c3, [1, 2, 3])], "+")
    add(
        "diag-vv-sym-n3",
        [_diag_vv(c3, [1, 2, 3], sym=True), _diag_vv(c3, [0, 1, 4], sym=True)],
        "++",
    )
    add(
        "diag-vv-skew-n3",
        [
            _diag_vv(c3, [1, 0, -1], sym=False),
            _diag_vv(c3, [2, 1, 1], sym=False),
            _diag_vv(c3, [0, 0, 3], sym=False),
        ],
        "---",
    )
    return out


# -- JSON wire format -----------------------------------------------------------


def family_to_dict(entry: FleetFamily) -> dict:
    fam = entry.family
    return {
        "name": entry.name,
        "dim": fam.chart.dim,
        "signature": list(fam.signature.entries),
        "matrices": [
            [render_polynomial(e) for row in member.rows for e in row]
            for member in fam.members
        ],
    }


def family_from_dict(data: dict) -> FleetFamily:
    chart = Chart(int(data["dim"]))
    size = 2 * chart.dim
    sig = Signature(tuple(int(e) for e in data["signature"]))
    members = []
    for flat in data["matrices"]:
        if len(flat) != size * size:
            raise ValueError(f"expected {size * size} entries, got {len(flat)}")
        entries = [parse_polynomial(s, chart.ring) for s in flat]
        rows = [entries[r * size : (r + 1) * size] for r in range(size)]
        members.append(Endomorphism(chart, rows))
    return FleetFamily(str(data["name"]), validate_family(members, sig))


def dump_fleet(entries: list[FleetFamily]) -> str:
    return json.dumps([family_to_dict(e) for e in entries], indent=2)


def load_fleet(text: str) -> list[FleetFamily]:
    return [family_from_dict(d) for d in json.loads(text)]

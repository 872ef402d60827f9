"""The ideal zoo: axis ideals, cubic/quadratic generators, and oracles.

For a signature eps the three axis ideals are

    I^x = <y_i - eps_i z_i>,   I^y = <z_i - eps_i x_i>,   I^z = <x_i - eps_i y_i>

and the universally tensorial ideal is their intersection.  Membership in it
has two independent oracles besides Groebner membership: a linear system on
the coefficient tensor, and vanishing on the three linear subvarieties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .groebner import (
    GroebnerBasis,
    IdealPresentation,
    StepBudget,
    buchberger,
    eliminate,
    reduce_basis,
)
from .poly import MonomialOrder, Polynomial, PolyRing
from .xyz import Signature, uses_t, xyz_ring


@dataclass(frozen=True)
class AxisIdealTriple:
    i_x: IdealPresentation
    i_y: IdealPresentation
    i_z: IdealPresentation
    signature: Signature

    def pair(self, letters: tuple[str, str]) -> tuple[IdealPresentation, IdealPresentation]:
        by_letter = {"x": self.i_x, "y": self.i_y, "z": self.i_z}
        return by_letter[letters[0]], by_letter[letters[1]]


def axis_generator(letter: str, i: int, sig: Signature, ring: PolyRing) -> Polynomial:
    e = sig[i]
    if letter == "x":
        return ring.var(f"y{i}") - ring.monomial({f"z{i}": 1}, e)
    if letter == "y":
        return ring.var(f"z{i}") - ring.monomial({f"x{i}": 1}, e)
    if letter == "z":
        return ring.var(f"x{i}") - ring.monomial({f"y{i}": 1}, e)
    raise ValueError(f"bad axis letter {letter!r}")


def build_axis_ideals(sig: Signature, order: MonomialOrder, ring: PolyRing | None = None) -> AxisIdealTriple:
    """The three axis ideals, generators listed by index ascending."""
    ring = ring if ring is not None else xyz_ring(sig.n)
    gens = {
        letter: tuple(axis_generator(letter, i, sig, ring) for i in range(1, sig.n + 1))
        for letter in "xyz"
    }
    return AxisIdealTriple(
        IdealPresentation(gens["x"], order),
        IdealPresentation(gens["y"], order),
        IdealPresentation(gens["z"], order),
        sig,
    )


def generator_T(i: int, j: int, k: int, sig: Signature, ring: PolyRing | None = None) -> Polynomial:
    """The cubic generator (x_i - e_i y_i)(y_j - e_j z_j)(z_k - e_k x_k)."""
    n = sig.n
    for idx in (i, j, k):
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} out of range 1..{n}")
    ring = ring if ring is not None else xyz_ring(n)
    fx = ring.var(f"x{i}") - ring.monomial({f"y{i}": 1}, sig[i])
    fy = ring.var(f"y{j}") - ring.monomial({f"z{j}": 1}, sig[j])
    fz = ring.var(f"z{k}") - ring.monomial({f"x{k}": 1}, sig[k])
    return fx * fy * fz


def generator_P(i: int, j: int, sig: Signature, ring: PolyRing | None = None) -> Polynomial:
    """The quadratic generator (z_i-x_i)(x_j-y_j) - (z_j-x_j)(x_i-y_i).

    Only defined for symmetric index pairs; antisymmetric in (i, j), so the
    diagonal vanishes identically.
    """
    n = sig.n
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} out of range 1..{n}")
        if sig[idx] != 1:
            raise ValueError(f"index {idx} is skew (signature -1); P is undefined")
    ring = ring if ring is not None else xyz_ring(n)

    def g(idx):
        return ring.var(f"z{idx}") - ring.var(f"x{idx}")

    def h(idx):
        return ring.var(f"x{idx}") - ring.var(f"y{idx}")

    return g(i) * h(j) - g(j) * h(i)


@dataclass(frozen=True)
class CandidateBasis:
    """All N^3 cubic generators plus the quadratics for symmetric pairs i<j."""

    torsion_gens: tuple[Polynomial, ...]
    quadratic_gens: tuple[Polynomial, ...]
    signature: Signature

    @property
    def members(self) -> tuple[Polynomial, ...]:
        return self.torsion_gens + self.quadratic_gens


def candidate_basis(sig: Signature, ring: PolyRing | None = None) -> CandidateBasis:
    n = sig.n
    ring = ring if ring is not None else xyz_ring(n)
    torsions = tuple(
        generator_T(i, j, k, sig, ring)
        for i, j, k in itertools.product(range(1, n + 1), repeat=3)
    )
    quadratics = tuple(
        generator_P(i, j, sig, ring)
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if sig[i] == 1 and sig[j] == 1
    )
    return CandidateBasis(torsions, quadratics, sig)


# -- the two non-Groebner oracles ----------------------------------------------


def coefficient_tensor(f: Polynomial) -> dict[tuple, Fraction]:
    """a_{I,J,K} keyed by the exponent triple (I, J, K) of x^I y^J z^K."""
    if uses_t(f):
        raise ValueError("coefficient tensor undefined for t-dependent polynomials")
    from .xyz import ring_size

    n = ring_size(f.ring)
    ring = f.ring
    xs = [ring.index(f"x{i}") for i in range(1, n + 1)]
    ys = [ring.index(f"y{i}") for i in range(1, n + 1)]
    zs = [ring.index(f"z{i}") for i in range(1, n + 1)]
    out = {}
    for m, c in f.terms():
        key = (
            tuple(m[p] for p in xs),
            tuple(m[p] for p in ys),
            tuple(m[p] for p in zs),
        )
        out[key] = c
    return out


def is_universally_tensorial_linear(f: Polynomial, sig: Signature) -> bool:
    """Check the three families of linear equations on the coefficient tensor:

    sum_J eps^J a_{I,J,T-J} = 0,  sum_J eps^J a_{J,T-J,I} = 0,
    sum_J eps^J a_{T-J,I,J} = 0   for all (I, T).
    """
    tensor = coefficient_tensor(f)
    buckets: dict[tuple, Fraction] = {}
    for (I, J, K), a in tensor.items():
        t_jk = tuple(p + q for p, q in zip(J, K))
        t_ij = tuple(p + q for p, q in zip(I, J))
        t_ik = tuple(p + q for p, q in zip(I, K))
        for key, coeff in (
            ((0, I, t_jk), sig.power(J) * a),  # a_{I, J, T-J} with J = J
            ((1, K, t_ij), sig.power(I) * a),  # a_{J, T-J, I}: J = I, I = K
            ((2, J, t_ik), sig.power(K) * a),  # a_{T-J, I, J}: J = K, I = J
        ):
            s = buckets.get(key, Fraction(0)) + coeff
            if s:
                buckets[key] = s
            else:
                buckets.pop(key, None)
    return not buckets


def variety_substitutions(sig: Signature, ring: PolyRing) -> list[dict[str, Polynomial]]:
    """The three substitutions y=diag(eps)z, z=diag(eps)x, x=diag(eps)y."""
    n = sig.n
    subs = []
    for src, dst in (("y", "z"), ("z", "x"), ("x", "y")):
        subs.append(
            {
                f"{src}{i}": ring.monomial({f"{dst}{i}": 1}, sig[i])
                for i in range(1, n + 1)
            }
        )
    return subs


def vanishes_on_variety(f: Polynomial, sig: Signature) -> bool:
    """True iff all three linear-component substitutions send f to zero."""
    if uses_t(f):
        raise ValueError("variety test undefined for t-dependent polynomials")
    return all(
        f.substitute(sub, ring=f.ring).is_zero()
        for sub in variety_substitutions(sig, f.ring)
    )


# -- intersections and products -------------------------------------------------


def scale_into_t_ring(
    i_pres: IdealPresentation, j_pres: IdealPresentation, elim_order: MonomialOrder
) -> IdealPresentation:
    """Generators of tI + (1-t)J in the t-extended ring, I's first."""
    ring = i_pres.ring
    from .xyz import ring_size

    t_ring = xyz_ring(ring_size(ring), with_t=True)
    t = t_ring.var("t")
    one_minus_t = t_ring.one - t
    gens = [t * g.map_ring(t_ring) for g in i_pres.generators]
    gens += [one_minus_t * g.map_ring(t_ring) for g in j_pres.generators]
    return IdealPresentation(tuple(gens), elim_order)


def intersect_pair(
    i_pres: IdealPresentation,
    j_pres: IdealPresentation,
    elim_order: MonomialOrder,
    step_budget: StepBudget | None = None,
) -> GroebnerBasis:
    """I intersect J by elimination: reduced basis of tI + (1-t)J, t dropped.

    The result is the reduced Groebner basis of the intersection under the
    elimination order restricted to the original variables.
    """
    if elim_order.eliminates != "t":
        raise ValueError("intersection needs an order eliminating t")
    budget = step_budget or StepBudget()
    combined = scale_into_t_ring(i_pres, j_pres, elim_order)
    basis = reduce_basis(buchberger(combined, budget), budget)
    return eliminate(basis, "t")


def product_ideal(i_pres: IdealPresentation, j_pres: IdealPresentation) -> IdealPresentation:
    """All pairwise generator products, ordered by (i, j) generator positions."""
    gens = tuple(
        g * h
        for g in i_pres.generators
        for h in j_pres.generators
        if not (g * h).is_zero()
    )
    return IdealPresentation(gens, i_pres.order)


def knutson_F(sig: Signature, ring: PolyRing | None = None) -> Polynomial:
    """The splitting polynomial prod (x_i - e_i y_i)(y_i - e_i z_i) z_i."""
    ring = ring if ring is not None else xyz_ring(sig.n)
    f = ring.one
    for i in range(1, sig.n + 1):
        f = f * (ring.var(f"x{i}") - ring.monomial({f"y{i}": 1}, sig[i]))
        f = f * (ring.var(f"y{i}") - ring.monomial({f"z{i}": 1}, sig[i]))
        f = f * ring.var(f"z{i}")
    return f


def ideal_contains(
    basis: GroebnerBasis, polys, step_budget: StepBudget | None = None
) -> tuple[bool, Polynomial | None]:
    """Do all the polynomials reduce to zero?  Returns a witness otherwise."""
    from .groebner import membership

    for f in polys:
        if not membership(f.map_ring(basis.ring), basis, step_budget):
            return False, f
    return True, None


def ideals_equal(
    a: GroebnerBasis, b: GroebnerBasis, step_budget: StepBudget | None = None
) -> tuple[bool, Polynomial | None]:
    """Mutual membership of the two bases' elements."""
    ok, witness = ideal_contains(b, a.elements, step_budget)
    if not ok:
        return False, witness
    return ideal_contains(a, b.elements, step_budget)

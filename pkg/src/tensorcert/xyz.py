"""The 3N-variable ring R[x_1..x_N, y_1..y_N, z_1..z_N] and its symmetries.

Variables are named ``x1 .. xN, y1 .. yN, zN`` plus the auxiliary ``t`` used
by elimination; ``t`` is an ordinary variable that happens to outrank the rest
in elimination orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .poly import MonomialOrder, Polynomial, PolyRing

LETTERS = ("x", "y", "z")

_ring_cache: dict[tuple[int, bool], PolyRing] = {}


def xyz_ring(n_indices: int, with_t: bool = False) -> PolyRing:
    """Ring on {x_i, y_i, z_i : i <= N}, optionally with the elimination t."""
    if n_indices < 1:
        raise ValueError("need at least one index")
    key = (n_indices, with_t)
    ring = _ring_cache.get(key)
    if ring is None:
        names = (["t"] if with_t else []) + [
            f"{w}{i}" for w in LETTERS for i in range(1, n_indices + 1)
        ]
        ring = PolyRing(names)
        _ring_cache[key] = ring
    return ring


def ring_size(ring: PolyRing) -> int:
    """N of an xyz ring."""
    n, rem = divmod(ring.nvars - (1 if "t" in ring else 0), 3)
    if rem:
        raise ValueError(f"{ring!r} is not an xyz ring")
    return n


def split_name(name: str) -> tuple[str, int]:
    """'x12' -> ('x', 12); 't' -> ('t', 0)."""
    if name == "t":
        return ("t", 0)
    return name[0], int(name[1:])


def indices_of(f: Polynomial) -> set[int]:
    """Indices i with some x_i, y_i or z_i in the support (t ignored)."""
    out = set()
    for v in f.support_vars():
        letter, i = split_name(v)
        if letter != "t":
            out.add(i)
    return out


def uses_t(f: Polynomial) -> bool:
    return "t" in f.support_vars()


# -- signatures ---------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """Entry +1 marks a symmetric endomorphism, -1 a skew one."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("signature must have length >= 1")
        if any(e not in (1, -1) for e in self.entries):
            raise ValueError("signature entries must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        """1-based lookup, matching the mathematical subscripts."""
        return self.entries[i - 1]

    def __str__(self) -> str:
        return "".join("+" if e == 1 else "-" for e in self.entries)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        mapping = {"+": 1, "-": -1}
        try:
            return cls(tuple(mapping[ch] for ch in text))
        except KeyError:
            raise ValueError(f"bad signature string {text!r}; use e.g. '+-+'") from None

    @classmethod
    def sweep(cls, n: int) -> list["Signature"]:
        """All signatures of length n, lexicographic with +1 before -1."""
        return [cls(s) for s in itertools.product((1, -1), repeat=n)]

    def power(self, exponents: Iterable[int]) -> int:
        """eps^J = prod eps_i^(J_i)."""
        out = 1
        for e, j in zip(self.entries, exponents):
            if j % 2 and e == -1:
                out = -out
        return out


# -- the named monomial orders ------------------------------------------------


def elimination_order(n: int) -> MonomialOrder:
    """t > x_N > y_N > z_N > x_(N-1) > ... > x_1 > y_1 > z_1."""
    rk = ["t"]
    for i in range(n, 0, -1):
        rk += [f"x{i}", f"y{i}", f"z{i}"]
    return MonomialOrder(tuple(rk), eliminates="t")


def index_desc_order(n: int, letters: tuple[str, str, str] = LETTERS) -> MonomialOrder:
    """x_N > y_N > z_N > ... > x_1 > y_1 > z_1 (letters may be rotated)."""
    rk = []
    for i in range(n, 0, -1):
        rk += [f"{w}{i}" for w in letters]
    return MonomialOrder(tuple(rk))


def letter_block_order(n: int) -> MonomialOrder:
    """x_1 > x_2 > ... > x_N > y_1 > ... > y_N > z_1 > ... > z_N."""
    rk = [f"{w}{i}" for w in LETTERS for i in range(1, n + 1)]
    return MonomialOrder(tuple(rk))


def pair_order(pair: tuple[str, str], n: int) -> MonomialOrder:
    """Cyclic rotation of the index-descending order matched to an axis pair.

    The identity "product = intersection" for the (x,z) pair is proved under
    x_N > y_N > z_N > ...; the other two pairs follow by the cyclic shift
    x -> y -> z -> x, which also rotates the order.
    """
    rotations = {
        frozenset(("x", "z")): ("x", "y", "z"),
        frozenset(("x", "y")): ("y", "z", "x"),
        frozenset(("y", "z")): ("z", "x", "y"),
    }
    return index_desc_order(n, rotations[frozenset(pair)])


def order_from_spec(spec: str, n: int) -> MonomialOrder:
    """CLI order specs: 'elim', 'desc', 'block', or an explicit comma list."""
    if spec == "elim":
        return elimination_order(n)
    if spec == "desc":
        return index_desc_order(n)
    if spec == "block":
        return letter_block_order(n)
    if "," in spec:
        names = tuple(s.strip() for s in spec.split(","))
        elim = "t" if names and names[0] == "t" else None
        return MonomialOrder(names, eliminates=elim)
    raise ValueError(f"unknown order spec {spec!r}")


# -- multigrading -------------------------------------------------------------


def multidegree(ring: PolyRing, mono) -> tuple[int, ...]:
    """Componentwise I+J+K of a monomial x^I y^J z^K."""
    n = ring_size(ring)
    deg = [0] * n
    for name, e in zip(ring.variables, mono):
        if not e:
            continue
        letter, i = split_name(name)
        if letter == "t":
            raise ValueError("monomial involves t; multidegree undefined")
        deg[i - 1] += e
    return tuple(deg)


def multidegree_components(f: Polynomial) -> dict[tuple[int, ...], Polynomial]:
    """Split f into its multi-homogeneous components; rejects t in the support."""
    if uses_t(f):
        raise ValueError("multidegree components undefined for t-dependent polynomials")
    buckets: dict[tuple[int, ...], dict] = {}
    for m, c in f.terms():
        buckets.setdefault(multidegree(f.ring, m), {})[m] = c
    return {d: f.ring.from_terms(t) for d, t in sorted(buckets.items())}


# -- S3 and index actions -----------------------------------------------------

S3_PERMUTATIONS: dict[str, dict[str, str]] = {
    "e": {"x": "x", "y": "y", "z": "z"},
    "(12)": {"x": "y", "y": "x", "z": "z"},
    "(13)": {"x": "z", "y": "y", "z": "x"},
    "(23)": {"x": "x", "y": "z", "z": "y"},
    "(123)": {"x": "y", "y": "z", "z": "x"},
    "(132)": {"x": "z", "y": "x", "z": "y"},
}


def compose_s3(first: Mapping[str, str], then: Mapping[str, str]) -> dict[str, str]:
    """Apply ``first``, then ``then``."""
    return {w: then[first[w]] for w in LETTERS}


def apply_s3(f: Polynomial, sigma: Mapping[str, str]) -> Polynomial:
    """Letter-wise renaming x_i -> sigma(x)_i for every index i."""
    if uses_t(f):
        raise ValueError("S3 action undefined on t-dependent polynomials")
    if sorted(sigma.values()) != list(LETTERS):
        raise ValueError("sigma must permute x, y, z")
    mapping = {}
    n = ring_size(f.ring)
    for w in LETTERS:
        for i in range(1, n + 1):
            mapping[f"{w}{i}"] = f"{sigma[w]}{i}"
    return f.rename(mapping)


def apply_index_map(
    f: Polynomial, rho: Mapping[int, int], target_ring: PolyRing | None = None
) -> Polynomial:
    """Rename (x_i, y_i, z_i) -> (x_rho(i), y_rho(i), z_rho(i)) simultaneously."""
    if len(set(rho.values())) != len(rho):
        raise ValueError("index map must be injective")
    used = indices_of(f)
    missing = used - set(rho)
    if missing:
        raise ValueError(f"indices {sorted(missing)} not in the map's domain")
    target = target_ring if target_ring is not None else f.ring
    mapping = {}
    for i, j in rho.items():
        for w in LETTERS:
            mapping[f"{w}{i}"] = f"{w}{j}"
    return f.rename({k: v for k, v in mapping.items()}, ring=target)


def transport_signature(sig: Signature, rho: Mapping[int, int], n_target: int) -> Signature:
    """Signature with entry rho(i) equal to sig's entry i (+1 elsewhere)."""
    entries = [1] * n_target
    for i, j in rho.items():
        entries[j - 1] = sig[i]
    return Signature(tuple(entries))

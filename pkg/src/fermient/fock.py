"""Slater determinants as spin-resolved bitsets, with sector enumeration and
fermionic operator application under an explicit sign convention.

A determinant holds one occupation bitset per spin; bit ``p`` set in ``up``
means the spin-up spin orbital built on spatial orbital ``p`` is occupied.
Kets are defined relative to the reference operator ordering

    |up, down> = c+(p1,up) ... c+(pk,up) c+(q1,dn) ... c+(qm,dn) |0>

with ascending spatial indices inside each spin block and the whole up block
to the left of the down block.  Every phase produced here is relative to that
ordering: acting with an up operator on orbital k costs (-1)^(occupied up
orbitals below k); a down operator additionally hops over the full up block,
contributing (-1)^(current number of up electrons).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainError

UP = "up"
DOWN = "down"
CREATE = "create"
ANNIHILATE = "annihilate"


def _below(bits: int, k: int) -> int:
    """Number of set bits strictly below position k."""
    return (bits & ((1 << k) - 1)).bit_count()


def _bits_to_orbitals(bits: int) -> tuple:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


@dataclass(frozen=True)
class Determinant:
    """Occupation bitsets (one per spin) of a single Slater determinant."""

    up: int
    down: int

    @property
    def n_up(self) -> int:
        return self.up.bit_count()

    @property
    def n_down(self) -> int:
        return self.down.bit_count()

    def occupied(self, spin=UP) -> tuple:
        """Ascending spatial indices occupied for the given spin."""
        return _bits_to_orbitals(self.up if spin == UP else self.down)


def apply_ops(det: Determinant, ops, n_spatial: int):
    """Apply a product of creation/annihilation operators to a determinant.

    ``ops`` is a sequence of ``(kind, orbital, spin)`` triples written in
    operator-product order, so the *last* entry acts first (the product
    c+_k c_i is passed as ``[(CREATE, k, s), (ANNIHILATE, i, s)]``).

    Returns ``(phase, Determinant)`` or ``None`` when the product annihilates
    the state (creating an occupied orbital / annihilating an empty one).
    """
    up, down = det.up, det.down
    sign = 1
    for kind, orb, spin in reversed(ops):
        if not 0 <= orb < n_spatial:
            raise DomainError(f"orbital index {orb} outside 0..{n_spatial - 1}")
        mask = 1 << orb
        if spin == UP:
            parity = _below(up, orb)
            if kind == CREATE:
                if up & mask:
                    return None
                up |= mask
            elif kind == ANNIHILATE:
                if not up & mask:
                    return None
                up &= ~mask
            else:
                raise DomainError(f"unknown operator kind {kind!r}")
        elif spin == DOWN:
            parity = up.bit_count() + _below(down, orb)
            if kind == CREATE:
                if down & mask:
                    return None
                down |= mask
            elif kind == ANNIHILATE:
                if not down & mask:
                    return None
                down &= ~mask
            else:
                raise DomainError(f"unknown operator kind {kind!r}")
        else:
            raise DomainError(f"unknown spin {spin!r}")
        if parity & 1:
            sign = -sign
    return sign, Determinant(up, down)


@dataclass(frozen=True, eq=False)
class SectorBasis:
    """All determinants with fixed (n_up, n_down) over n_spatial orbitals.

    Strings are ordered by ascending bitset value; the global index of a
    determinant is ``up_index * len(down_strings) + down_index``.  That
    row-major layout is also the coefficient-tensor layout assumed by the
    up/down reshape in the solver and measures modules.
    """

    n_spatial: int
    n_up: int
    n_down: int
    up_strings: tuple
    down_strings: tuple
    _up_index: dict = field(repr=False)
    _down_index: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.up_strings) * len(self.down_strings)

    @property
    def shape(self) -> tuple:
        """(number of up strings, number of down strings)."""
        return len(self.up_strings), len(self.down_strings)

    def index_of(self, det: Determinant) -> int:
        try:
            return (self._up_index[det.up] * len(self.down_strings)
                    + self._down_index[det.down])
        except KeyError:
            raise DomainError(f"determinant {det} not in sector "
                              f"({self.n_up},{self.n_down})") from None

    def det_at(self, index: int) -> Determinant:
        n_dn = len(self.down_strings)
        return Determinant(self.up_strings[index // n_dn],
                           self.down_strings[index % n_dn])

    def determinants(self):
        """All determinants in global-index order."""
        for u in self.up_strings:
            for d in self.down_strings:
                yield Determinant(u, d)

    def same_sector(self, other: "SectorBasis") -> bool:
        return (self.n_spatial, self.n_up, self.n_down) == \
               (other.n_spatial, other.n_up, other.n_down)


def enumerate_sector(n_spatial: int, n_up: int, n_down: int) -> SectorBasis:
    """Enumerate the complete fixed-(n_up, n_down) determinant basis."""
    if n_spatial < 0:
        raise DomainError(f"n_spatial must be >= 0, got {n_spatial}")
    if not (0 <= n_up <= n_spatial and 0 <= n_down <= n_spatial):
        raise DomainError(f"occupancy ({n_up},{n_down}) exceeds "
                          f"{n_spatial} spatial orbitals")

    def strings(k):
        combos = itertools.combinations(range(n_spatial), k)
        return tuple(sorted(sum(1 << i for i in c) for c in combos))

    ups = strings(n_up)
    downs = strings(n_down)
    return SectorBasis(n_spatial, n_up, n_down, ups, downs,
                       {b: i for i, b in enumerate(ups)},
                       {b: i for i, b in enumerate(downs)})


@dataclass(frozen=True)
class Excitation:
    """Particle-hole description of the move between two determinants.

    ``phase`` is the product of apply_ops phases realizing ``b`` from ``a``
    by moving hole k to particle k (pairs sorted ascending within each spin,
    up moves before down moves); unset for degree > 2.
    """

    degree: int
    holes_up: tuple = ()
    parts_up: tuple = ()
    holes_down: tuple = ()
    parts_down: tuple = ()
    phase: int | None = None


def _move_phase(bits: int, hole: int, part: int) -> int:
    lo, hi = (hole, part) if hole < part else (part, hole)
    between = bits & (((1 << hi) - 1) & ~((1 << (lo + 1)) - 1))
    return -1 if between.bit_count() & 1 else 1


def _spin_moves(a_bits: int, b_bits: int):
    diff = a_bits ^ b_bits
    holes = _bits_to_orbitals(a_bits & diff)
    parts = _bits_to_orbitals(b_bits & diff)
    return holes, parts


def excitation_info(a: Determinant, b: Determinant) -> Excitation:
    """Classify the excitation connecting two same-sector determinants."""
    if (a.n_up, a.n_down) != (b.n_up, b.n_down):
        raise DomainError(f"sector mismatch: ({a.n_up},{a.n_down}) vs "
                          f"({b.n_up},{b.n_down})")
    hu, pu = _spin_moves(a.up, b.up)
    hd, pd = _spin_moves(a.down, b.down)
    degree = len(hu) + len(hd)
    if degree > 2:
        return Excitation(degree)
    phase = 1
    bits = a.up
    for h, p in zip(hu, pu):
        phase *= _move_phase(bits, h, p)
        bits = (bits & ~(1 << h)) | (1 << p)
    bits = a.down
    for h, p in zip(hd, pd):
        phase *= _move_phase(bits, h, p)
        bits = (bits & ~(1 << h)) | (1 << p)
    return Excitation(degree, hu, pu, hd, pd, phase)

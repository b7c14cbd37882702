"""Molecular integral tables: FCIDUMP I/O and synthetic test Hamiltonians.

Two-electron integrals are kept in chemists' notation (pq|rs) with full
8-fold permutation symmetry, stored once per canonical index (p>=q, r>=s,
pq>=rs).  The electronic Hamiltonian they define is, for spins s and t,

    H = sum_{pq,s} h_pq c+(p,s) c(q,s)
        + 1/2 sum_{pqrs,st} (pq|rs) c+(p,s) c+(r,t) c(s,t) c(q,s)

with spin-independent spatial integrals (spin enters only through the
deltas enforced by the operators).  FCIDUMP indices are 1-based on file
and 0-based in memory.
"""

from __future__ import annotations

import io
import re
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParseError

_DUPLICATE_TOL = 1e-10


def _npair(n: int) -> int:
    return n * (n + 1) // 2


def _pair(i: int, j: int) -> int:
    """Canonical compound index over an unordered pair."""
    if i < j:
        i, j = j, i
    return i * (i + 1) // 2 + j


@dataclass(eq=False)
class IntegralTable:
    """One- and two-electron integrals over spatial orbitals plus core energy."""

    n_spatial: int
    h: np.ndarray                 # (n, n) symmetric, Hartree
    eri: np.ndarray               # canonical 1-D store, len npair*(npair+1)/2
    e_core: float = 0.0
    n_electrons: int = 0
    ms2: int = 0
    _dense: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def empty(cls, n_spatial, n_electrons=0, ms2=0, e_core=0.0):
        if n_spatial < 1:
            raise DomainError(f"n_spatial must be >= 1, got {n_spatial}")
        npair = _npair(n_spatial)
        return cls(n_spatial, np.zeros((n_spatial, n_spatial)),
                   np.zeros(_npair(npair)), e_core, n_electrons, ms2)

    def eri_index(self, p, q, r, s) -> int:
        return _pair(_pair(p, q), _pair(r, s))

    def eri_value(self, p, q, r, s) -> float:
        """(pq|rs), any of the 8 symmetry-equivalent index orders."""
        return float(self.eri[self.eri_index(p, q, r, s)])

    def set_eri(self, p, q, r, s, value):
        self.eri[self.eri_index(p, q, r, s)] = value
        self._dense = None

    def eri_dense(self) -> np.ndarray:
        """Full (n,n,n,n) chemists'-notation view, cached."""
        if self._dense is None:
            n = self.n_spatial
            out = np.empty((n, n, n, n))
            for p in range(n):
                for q in range(p + 1):
                    for r in range(n):
                        for s in range(r + 1):
                            v = self.eri[self.eri_index(p, q, r, s)]
                            out[p, q, r, s] = out[q, p, r, s] = v
                            out[p, q, s, r] = out[q, p, s, r] = v
                            out[r, s, p, q] = out[s, r, p, q] = v
                            out[r, s, q, p] = out[s, r, q, p] = v
            self._dense = out
        return self._dense

    def validate(self):
        """Check the structural invariants; raises DomainError on failure."""
        if self.n_spatial < 1:
            raise DomainError("n_spatial must be >= 1")
        if not 0 <= self.n_electrons <= 2 * self.n_spatial:
            raise DomainError(f"n_electrons {self.n_electrons} outside "
                              f"[0, {2 * self.n_spatial}]")
        if self.h.shape != (self.n_spatial, self.n_spatial):
            raise DomainError("one-electron matrix has wrong shape")
        if not np.allclose(self.h, self.h.T, atol=1e-12, rtol=0.0):
            raise DomainError("one-electron matrix is not symmetric")
        if len(self.eri) != _npair(_npair(self.n_spatial)):
            raise DomainError("canonical eri store has wrong length")
        return self


def parse_fcidump(source) -> IntegralTable:
    """Parse FCIDUMP text (string or readable file object) into a table.

    Duplicate entries for the same canonical integral keep the last value; a
    warning is emitted when it disagrees with an earlier occurrence of any
    symmetry partner by more than 1e-10.  ORBSYM/ISYM and other unknown
    header keys are accepted and ignored.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    lines = io.StringIO(text).read().splitlines()

    header_tokens = []
    header_start = None
    body = []                     # (1-based lineno, text) pairs after the header
    in_header = True
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if not in_header:
            body.append((lineno, stripped))
            continue
        if header_start is None:
            if not stripped.upper().startswith("&FCI"):
                raise ParseError("expected &FCI namelist header", lineno)
            header_start = lineno
            stripped = stripped[4:]
        end = re.search(r"&END|/", stripped, flags=re.IGNORECASE)
        if end:
            header_tokens.append(stripped[:end.start()])
            rest = stripped[end.end():].strip()
            if rest:
                body.append((lineno, rest))
            in_header = False
        else:
            header_tokens.append(stripped)
    if in_header:
        raise ParseError("namelist header never terminated by &END or /",
                         header_start or max(len(lines), 1))

    keys = {}
    blob = " ".join(header_tokens)
    for match in re.finditer(r"([A-Za-z][A-Za-z0-9_]*)\s*=\s*([^=]*?)(?=[A-Za-z][A-Za-z0-9_]*\s*=|$)",
                             blob):
        keys[match.group(1).upper()] = match.group(2).strip().rstrip(",").strip()

    def int_key(name, default=None):
        if name not in keys:
            if default is None:
                raise ParseError(f"header is missing {name}", header_start)
            return default
        try:
            return int(keys[name].split(",")[0])
        except ValueError:
            raise ParseError(f"non-integer header value {name}={keys[name]!r}",
                             header_start) from None

    norb = int_key("NORB")
    nelec = int_key("NELEC")
    ms2 = int_key("MS2", default=0)
    if norb < 1:
        raise ParseError(f"NORB must be >= 1, got {norb}", header_start)
    table = IntegralTable.empty(norb, nelec, ms2)

    seen_eri = {}
    seen_h = {}
    for lineno, stripped in body:
        parts = stripped.split()
        if len(parts) != 5:
            raise ParseError(f"expected 'value i j k l', got {stripped!r}",
                             lineno)
        try:
            value = float(parts[0].replace("D", "E").replace("d", "e"))
            i, j, k, l = (int(x) for x in parts[1:])
        except ValueError:
            raise ParseError(f"non-numeric field in {stripped!r}",
                             lineno) from None
        for idx in (i, j, k, l):
            if not 0 <= idx <= norb:
                raise ParseError(f"orbital index {idx} outside [0, {norb}]",
                                 lineno)
        if i == j == k == l == 0:
            table.e_core = value
        elif i > 0 and j > 0 and k > 0 and l > 0:
            cidx = table.eri_index(i - 1, j - 1, k - 1, l - 1)
            prev = seen_eri.get(cidx)
            if prev is not None and abs(prev - value) > _DUPLICATE_TOL:
                warnings.warn(f"line {lineno}: integral ({i} {j}|{k} {l}) "
                              f"redefines a symmetry partner: {prev!r} -> {value!r}")
            seen_eri[cidx] = value
            table.eri[cidx] = value
        elif i > 0 and j > 0 and k == 0 and l == 0:
            key = _pair(i - 1, j - 1)
            prev = seen_h.get(key)
            if prev is not None and abs(prev - value) > _DUPLICATE_TOL:
                warnings.warn(f"line {lineno}: h({i},{j}) redefines a "
                              f"symmetry partner: {prev!r} -> {value!r}")
            seen_h[key] = value
            table.h[i - 1, j - 1] = value
            table.h[j - 1, i - 1] = value
        else:
            raise ParseError(f"unsupported index pattern in {stripped!r}",
                             lineno)
    table._dense = None
    return table.validate()


def write_fcidump(table: IntegralTable) -> str:
    """Serialize a table to FCIDUMP text (round-trips through parse_fcidump)."""
    n = table.n_spatial
    out = [f" &FCI NORB={n:3d},NELEC={table.n_electrons:3d},MS2={table.ms2:d},",
           "  ORBSYM=" + "1," * n,
           "  ISYM=1,",
           " &END"]
    fmt = " {0: .16E} {1:4d} {2:4d} {3:4d} {4:4d}"
    for p in range(n):
        for q in range(p + 1):
            for r in range(p + 1):
                smax = q if r == p else r
                for s in range(smax + 1):
                    v = table.eri_value(p, q, r, s)
                    if v != 0.0:
                        out.append(fmt.format(v, p + 1, q + 1, r + 1, s + 1))
    for p in range(n):
        for q in range(p + 1):
            if table.h[p, q] != 0.0:
                out.append(fmt.format(table.h[p, q], p + 1, q + 1, 0, 0))
    out.append(fmt.format(table.e_core, 0, 0, 0, 0))
    return "\n".join(out) + "\n"


def model_table(kind: str, n_spatial: int, seed: int = 0, *,
                hopping: float = 1.0, u: float = 4.0) -> IntegralTable:
    """Build a synthetic integral table for tests.

    kinds:
      diagonal          h_pp = p, no interaction (FCI ground state is a SD)
      hubbard_like      nearest-neighbor hopping -`hopping`, on-site (pp|pp)=`u`
      random_symmetric  seeded uniform h and eri, full 8-fold symmetry
    """
    if n_spatial < 1:
        raise DomainError(f"n_spatial must be >= 1, got {n_spatial}")
    nelec = n_spatial - (n_spatial % 2)
    table = IntegralTable.empty(n_spatial, n_electrons=nelec, ms2=0)
    if kind == "diagonal":
        table.h[:] = np.diag(np.arange(n_spatial, dtype=float))
    elif kind == "hubbard_like":
        for p in range(n_spatial - 1):
            table.h[p, p + 1] = table.h[p + 1, p] = -hopping
        for p in range(n_spatial):
            table.set_eri(p, p, p, p, u)
    elif kind == "random_symmetric":
        rng = np.random.default_rng(seed)
        h = rng.uniform(-1.0, 1.0, (n_spatial, n_spatial))
        table.h[:] = (h + h.T) / 2.0
        table.eri[:] = rng.uniform(-1.0, 1.0, len(table.eri))
        table.e_core = float(rng.uniform(-1.0, 1.0))
    else:
        raise DomainError(f"unknown model kind {kind!r}")
    table._dense = None
    return table.validate()

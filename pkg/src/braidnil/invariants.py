"""
Closed-form invariants: graded ranks, dimensions, and holonomy matrices.

The rank of the level-q graded piece of the pure-strand lattice is the
necklace-style Moebius sum (1/q) * sum_{d | q*} mu(d) * S_{q/d}(n), where q*
is the radical of q and S_r(n) = 1^r + ... + (n-1)^r.  The division is always
exact and is asserted.  Power sums are evaluated by direct big-integer
summation; no closed-form polynomials are transcribed.

The Hirsch length of the class-(k-1) quotient, which is the dimension of the
ambient almost-crystallographic group, is the sum of the first k-1 ranks.

Holonomy matrices record the conjugation action of an element on the two
graded lattices: an unsigned permutation matrix on pair coordinates and a
signed permutation matrix on triple coordinates.  Determinant +1 on every
generator of a finite quotient group is the orientability criterion for the
corresponding infra-nilmanifold.  Bases are lexicographic unless an explicit
order is passed (the 3-strand regression uses the ordering of the source
matrices).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DomainError,
    NilElement,
    Pair,
    Triple,
    comm_conjugation_map,
    pairs,
    pure_conjugation_map,
    triples,
)
from .orbits import OrbitBasis, orbit_partition, standard_transversal  # re-exported

__all__ = [
    "lcs_rank",
    "hirsch_length",
    "RankTable",
    "dimension_table",
    "HolonomyMatrix",
    "holonomy_matrix",
    "combined_matrix",
    "orientability_check",
    "orbit_partition",
    "standard_transversal",
    "OrbitBasis",
]


# ---------------------------------------------------------------------------
# Graded ranks and dimensions
# ---------------------------------------------------------------------------

def power_sum(r: int, n: int) -> int:
    """S_r(n) = sum of j^r for 1 <= j <= n-1."""
    return sum(j ** r for j in range(1, n))


def _squarefree_divisors_with_mu(q: int) -> list[tuple[int, int]]:
    """Pairs (d, mu(d)) over the divisors of the radical of q."""
    primes = []
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.append(m)
    out = [(1, 1)]
    for p in primes:
        out += [(d * p, -mu) for d, mu in out]
    return out


def lcs_rank(n: int, q: int) -> int:
    """Rank of the level-q graded piece of the pure lattice on n strands.

    (1/q) * sum over squarefree d dividing q of mu(d) * S_{q/d}(n); the sum is
    always divisible by q, and non-integrality raises.
    """
    if n < 2 or q < 1:
        raise DomainError(f"need n >= 2 and q >= 1, got n={n}, q={q}")
    total = sum(mu * power_sum(q // d, n) for d, mu in _squarefree_divisors_with_mu(q))
    quotient, remainder = divmod(total, q)
    if remainder:
        raise DomainError(f"Moebius sum {total} not divisible by {q} at n={n}")
    return quotient


def hirsch_length(n: int, k: int) -> int:
    """Dimension of the class-(k-1) quotient: the sum of the first k-1 ranks.

    For k = 3 this is C(n,2) + C(n,3); for k = 4 add 2*C(n+1,4).
    """
    if n < 2 or k < 2:
        raise DomainError(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    return sum(lcs_rank(n, q) for q in range(1, k))


@dataclass(frozen=True)
class RankTable:
    """Grid of dimensions indexed by (n, k)."""

    entries: tuple[tuple[int, int, int], ...]  # (n, k, dim), sorted by (n, k)

    def entry(self, n: int, k: int) -> int:
        for en, ek, d in self.entries:
            if (en, ek) == (n, k):
                return d
        raise DomainError(f"no entry for (n={n}, k={k})")

    def to_rows(self) -> list[dict]:
        return [{"n": n, "k": k, "dim": d} for n, k, d in self.entries]

    def render_text(self) -> str:
        """Aligned grid, k down the side and n across the top."""
        ns = sorted({n for n, _, _ in self.entries})
        ks = sorted({k for _, k, _ in self.entries})
        grid = {(n, k): d for n, k, d in self.entries}
        width = max(len(str(d)) for d in grid.values())
        width = max(width, max(len(str(n)) for n in ns))
        head = "k\\n " + " ".join(f"{n:>{width}}" for n in ns)
        lines = [head]
        for k in ks:
            lines.append(f"{k:<4}" + " ".join(f"{grid[(n, k)]:>{width}}" for n in ns))
        return "\n".join(lines)


def dimension_table(n_max: int, k_max: int) -> RankTable:
    """Dimensions for 3 <= n <= n_max and 2 <= k <= k_max."""
    if n_max < 3 or k_max < 2:
        raise DomainError("table bounds must be at least n=3, k=2")
    return RankTable(tuple(
        (n, k, hirsch_length(n, k))
        for n in range(3, n_max + 1)
        for k in range(2, k_max + 1)
    ))


# ---------------------------------------------------------------------------
# Holonomy matrices and orientability
# ---------------------------------------------------------------------------

def _permutation_parity(perm_of_indices: list[int]) -> int:
    """Sign of a permutation given as an image list on 0..m-1."""
    seen = [False] * len(perm_of_indices)
    sign = 1
    for i in range(len(perm_of_indices)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm_of_indices[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class HolonomyMatrix:
    """Graded conjugation action of one element, in column-is-image convention.

    block1 is the unsigned permutation matrix on the pair basis and block2 the
    signed permutation matrix on the triple basis; det is the product of the
    two block determinants, always +1 or -1.
    """

    n: int
    pair_basis: tuple[Pair, ...]
    triple_basis: tuple[Triple, ...]
    block1: tuple[tuple[int, ...], ...]
    block2: tuple[tuple[int, ...], ...]
    det: int


def holonomy_matrix(g: NilElement,
                    pair_basis: tuple[Pair, ...] | None = None,
                    triple_basis: tuple[Triple, ...] | None = None) -> HolonomyMatrix:
    """The graded conjugation action of g, which only depends on its permutation."""
    n = g.n
    pair_basis = tuple(pairs(n)) if pair_basis is None else tuple(pair_basis)
    triple_basis = tuple(triples(n)) if triple_basis is None else tuple(triple_basis)
    pidx = {p: i for i, p in enumerate(pair_basis)}
    tidx = {t: i for i, t in enumerate(triple_basis)}
    if len(pidx) != math.comb(n, 2) or len(tidx) != math.comb(n, 3):
        raise DomainError("basis orders must enumerate every pair / triple exactly once")

    pmap = pure_conjugation_map(g.perm)
    m1 = [[0] * len(pair_basis) for _ in pair_basis]
    perm1 = [0] * len(pair_basis)
    for p, col in pidx.items():
        row = pidx[pmap[p]]
        m1[row][col] = 1
        perm1[col] = row

    cmap = comm_conjugation_map(g.perm)
    m2 = [[0] * len(triple_basis) for _ in triple_basis]
    perm2 = [0] * len(triple_basis)
    sign_product = 1
    for t, col in tidx.items():
        st = cmap[t]
        row = tidx[st.triple]
        m2[row][col] = st.sign
        perm2[col] = row
        sign_product *= st.sign

    det = _permutation_parity(perm1) * _permutation_parity(perm2) * sign_product
    return HolonomyMatrix(
        n,
        pair_basis,
        triple_basis,
        tuple(tuple(r) for r in m1),
        tuple(tuple(r) for r in m2),
        det,
    )


def combined_matrix(h: HolonomyMatrix) -> tuple[tuple[int, ...], ...]:
    """Block-diagonal matrix on pair coordinates followed by triple coordinates."""
    p, t = len(h.pair_basis), len(h.triple_basis)
    out = [[0] * (p + t) for _ in range(p + t)]
    for i in range(p):
        for j in range(p):
            out[i][j] = h.block1[i][j]
    for i in range(t):
        for j in range(t):
            out[p + i][p + j] = h.block2[i][j]
    return tuple(tuple(r) for r in out)


def orientability_check(n: int, generators: list[NilElement]) -> bool:
    """Whether every generator acts with determinant +1 on the graded lattice."""
    for g in generators:
        if g.n != n:
            raise DomainError("generator strand count mismatch")
        if holonomy_matrix(g).det != 1:
            return False
    return True

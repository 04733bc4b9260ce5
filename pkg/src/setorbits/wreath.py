"""Set-orbit counts of imprimitive wreath products and the derived tower.

For H of degree d with s = s(H) set-orbits and a transitive top group T on m
points, a subset of the d*m points is determined up to the base group by the
tuple of orbit labels of its block sections, so

    s(H wr T) = #orbits of T on label functions = (1/|T|) sum_t s^{c(t)},

with c(t) the number of cycles of t.  Grouping label functions by their
content partition pi instead gives the equivalent sum over partitions

    s(H wr T) = sum_pi N(pi) * falling(s, B(pi)) / F(pi)

where N(pi) counts T-orbits on arrangements with multiplicity pattern pi,
B(pi) is the number of parts and F(pi) the product of factorials of the part
multiplicities.  Both forms are implemented and must agree bit for bit.

The tower recurrence s_{k+1} = C(s_k + 3, 4) tracks repeated wreathing by the
full symmetric group on 4 blocks; a_k = log2(s_k) / n_k is its rate at degree
n_k = 288 * 4^k.  Rates and the limiting constant are returned as certified
enclosures, never floats.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from gmpy2 import mpz

from . import enclosure as enc
from .counting import CycleIndex, exact_div, multiset_orbit_count, partitions_of
from .enclosure import Enclosure
from .permgroup import Permutation

BASE_DEGREE = 288  # degree of the tower's ground floor (24 * 12)
TOWER_ARITY = 4    # each further level wreathes by the symmetric group on 4 blocks


def wreath_set_orbits(s: int, top: CycleIndex) -> int:
    """Exact s(H wr T) from s = s(H) and the cycle census of T."""
    if s < 1:
        raise ValueError(f"base set-orbit count must be positive, got {s}")
    total = sum(count * s ** len(ctype) for ctype, count in top.terms.items())
    return exact_div(total, top.group_order, f"wreath sum over {top.group_order} elements")


def falling_factorial(s: int, b: int) -> int:
    out = 1
    for i in range(b):
        out *= s - i
    return out


def symmetry_factor(parts: Sequence[int]) -> int:
    out = 1
    for m in Counter(parts).values():
        out *= math.factorial(m)
    return out


def pattern_orbit_table(top: CycleIndex) -> dict[tuple[int, ...], int]:
    """N(pi) for every partition pi of the top degree."""
    return {rec.parts: multiset_orbit_count(top, rec.parts)
            for rec in partitions_of(top.degree)}


def wreath_set_orbits_partitionwise(s: int, degree: int,
                                    n_table: Mapping[tuple[int, ...], int]) -> int:
    """The same count as wreath_set_orbits, summed partition by partition.

    Every partition of the degree must be present in the table; each term
    N(pi) * falling(s, B) / F(pi) must divide exactly.
    """
    if s < 1:
        raise ValueError(f"base set-orbit count must be positive, got {s}")
    total = 0
    for rec in partitions_of(degree):
        if rec.parts not in n_table:
            raise ValueError(f"orbit table is missing partition {rec.parts}")
        term = n_table[rec.parts] * falling_factorial(s, rec.block_count)
        total += exact_div(term, symmetry_factor(rec.parts), f"partition term {rec.parts}")
    return total


def wreath_generators(base_gens: Sequence[Permutation], base_degree: int,
                      top_gens: Sequence[Permutation], top_degree: int) -> list[Permutation]:
    """Generators of H wr T acting imprimitively on base_degree * top_degree
    points, blocks laid out consecutively.  T must be transitive, otherwise
    the copy of H reaches only the blocks in the orbit of block 0.
    """
    n = base_degree * top_degree
    gens = []
    for g in base_gens:
        images = list(range(n))
        for x in range(base_degree):
            images[x] = g(x)
        gens.append(Permutation(images))
    for t in top_gens:
        gens.append(Permutation([t(i // base_degree) * base_degree + (i % base_degree)
                                 for i in range(n)]))
    return gens


@dataclass(frozen=True)
class SequenceTerm:
    k: int
    s_k: int
    n_k: int
    a_k: Enclosure


def _tower_step(s):
    # mpz keeps deep levels tractable: s_k has ~16 * 4^k digits and GMP
    # multiplies such operands with FFT, where native ints would crawl.
    return exact_div((s + 3) * (s + 2) * (s + 1) * s, 24, "binomial C(s+3, 4)")


def tower_count(k: int, s0: int) -> int:
    """s_k by the exact recurrence s_{j+1} = C(s_j + 3, 4)."""
    if k < 0:
        raise ValueError(f"tower index must be nonnegative, got {k}")
    s = mpz(s0)
    for _ in range(k):
        s = _tower_step(s)
    return int(s)


def sequence_terms(k_max: int, s0: int, *,
                   precision_bits: int = enc.DEFAULT_PRECISION) -> list[SequenceTerm]:
    """Terms (k, s_k, n_k, a_k) for 0 <= k <= k_max, rates enclosed."""
    terms = []
    s = mpz(s0)
    for k in range(k_max + 1):
        n_k = BASE_DEGREE * TOWER_ARITY ** k
        a_k = enc.div_exact(enc.log2_of(s, precision_bits), n_k)
        terms.append(SequenceTerm(k, int(s), n_k, a_k))
        s = _tower_step(s)
    return terms


def limit_enclosure(k: int, s0: int, *,
                    precision_bits: int = enc.DEFAULT_PRECISION) -> Enclosure:
    """Two-sided bracket of lim a_k from the level-k term.

    Lower: s_{j+1} >= s_j^4 / 24 folds to a_j - log2(24)/(3 n_j) increasing,
    so the limit is at least log2(s_k)/n_k - log2(24)/(3 n_k).
    Upper: s_{j+1} + 3 <= (s_j + 3)^4 / 24 folds the same way from s_k + 3.
    Width is log2(1 + 3/s_k)/n_k, already ~1e-240 at k = 2.
    """
    if k < 0:
        raise ValueError(f"tower index must be nonnegative, got {k}")
    s_k = mpz(s0)
    for _ in range(k):
        s_k = _tower_step(s_k)
    n_k = BASE_DEGREE * TOWER_ARITY ** k
    tail = enc.div_exact(enc.log2_of(24, precision_bits), 3 * n_k)
    lo_part = enc.div_exact(enc.log2_of(s_k, precision_bits), n_k)
    hi_part = enc.div_exact(enc.log2_of(s_k + 3, precision_bits), n_k)
    lo = enc.sub(lo_part, tail)
    hi = enc.sub(hi_part, tail)
    return Enclosure(lo.lo, hi.hi)

"""Permutations on 0-based points and stabilizer chains built from generators.

Composition convention: ``(p * q)(i) == p(q(i))``, i.e. the right factor acts
first.  All internal points are 0-based; the 1-based disjoint-cycle notation
appears only in :func:`parse_cycles` / :func:`format_cycles`, which handle
catalog I/O.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator


class Permutation:
    """Immutable permutation stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        object.__setattr__(self, "images", imgs)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        """Build from disjoint cycles of 0-based points."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            cyc = list(cycle)
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: ``(p * q)(i) == p(q(i))`` (apply ``q`` first)."""
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in composition")
        s = self.images
        return Permutation(s[i] for i in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in descending order, fixed points included; sums to degree."""
        lengths = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            n = 0
            j = start
            while not seen[j]:
                seen[j] = True
                n += 1
                j = self.images[j]
            lengths.append(n)
        lengths.sort(reverse=True)
        return tuple(lengths)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation like ``(1,2,3)(4,5)``; ``()`` is the identity."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise ValueError("empty permutation string")
    body = re.findall(r"\(([^()]*)\)", stripped)
    if "".join(f"({b})" for b in body) != stripped:
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for part in body:
        if not part:
            continue
        try:
            pts = [int(tok) for tok in part.split(",")]
        except ValueError:
            raise ValueError(f"non-integer point in cycle: ({part})") from None
        for pt in pts:
            if not 1 <= pt <= degree:
                raise ValueError(f"point {pt} outside 1..{degree}")
        cycles.append([pt - 1 for pt in pts])
    return Permutation.from_cycles(cycles, degree)


def format_cycles(perm: Permutation) -> str:
    """Render in 1-based disjoint-cycle notation; identity renders as ``()``."""
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycles)


class StrongGenSet:
    """Stabilizer chain: base points, per-level transversals, strong generators.

    ``transversals[i]`` maps each point in the orbit of ``base[i]`` under the
    level-``i`` stabilizer to a representative taking ``base[i]`` there.  The
    group order is the product of orbit sizes; membership is decided by
    sifting.  Instances are built by :func:`schreier_sims` and treated as
    immutable afterwards.
    """

    def __init__(self, degree: int, base: tuple[int, ...],
                 transversals: tuple[dict[int, Permutation], ...],
                 strong_generators: tuple[Permutation, ...]):
        self.degree = degree
        self.base = base
        self.transversals = transversals
        self.strong_generators = strong_generators
        # sorted orbits fix the element enumeration order independently of
        # construction history
        self._orbits = tuple(tuple(sorted(t)) for t in transversals)

    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def sift(self, perm: Permutation) -> Permutation:
        """Factor out transversal representatives; identity residue means membership."""
        if perm.degree != self.degree:
            raise ValueError("degree mismatch in sift")
        h = perm
        for b, t in zip(self.base, self.transversals):
            p = h(b)
            rep = t.get(p)
            if rep is None:
                return h
            h = rep.inverse() * h
        return h

    def __contains__(self, perm: Permutation) -> bool:
        return self.sift(perm).is_identity()

    def elements(self) -> Iterator[Permutation]:
        """Every group element exactly once, by depth-first transversal products.

        The traversal visits orbit points in ascending order at each level and
        performs one composition per visited node, so the cost is one
        composition per element, amortized.
        """
        n_levels = len(self.base)

        def rec(level: int, prefix: Permutation) -> Iterator[Permutation]:
            if level == n_levels:
                yield prefix
                return
            t = self.transversals[level]
            for p in self._orbits[level]:
                yield from rec(level + 1, prefix * t[p])

        yield from rec(0, Permutation.identity(self.degree))

    def coset_elements(self, top_point: int) -> Iterator[Permutation]:
        """Elements whose top-level representative sends ``base[0]`` to ``top_point``.

        The cosets for the points of the top orbit partition the group, so
        workers can split enumeration by top point and merge privately
        accumulated results.
        """
        t = self.transversals[0][top_point]
        n_levels = len(self.base)

        def rec(level: int, prefix: Permutation) -> Iterator[Permutation]:
            if level == n_levels:
                yield prefix
                return
            tr = self.transversals[level]
            for p in self._orbits[level]:
                yield from rec(level + 1, prefix * tr[p])

        yield from rec(1, t)

    def stabilizer_generators(self, n_points: int) -> list[Permutation]:
        """Strong generators fixing the first ``n_points`` base points pointwise."""
        fixed = self.base[:n_points]
        return [g for g in self.strong_generators
                if all(g(b) == b for b in fixed)]


def schreier_sims(generators: Iterable[Permutation], *,
                  base_hint: Iterable[int] = ()) -> StrongGenSet:
    """Deterministic Schreier-Sims: build a verified stabilizer chain.

    Every Schreier generator of every level is sifted through the chain below
    it, so the resulting order is exact, not probabilistic.  ``base_hint``
    seeds the base with chosen points first, which makes the level-1 strong
    generators generate the stabilizer of those points.
    """
    gens = [g for g in generators if not g.is_identity()]
    if not gens:
        raise ValueError("need at least one non-identity generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")

    base: list[int] = []
    for b in base_hint:
        if not 0 <= b < degree:
            raise ValueError(f"base point {b} outside degree {degree}")
        if b not in base:
            base.append(b)
    strong: list[Permutation] = []
    # levels[i] = (gens, orbit_order, transversal) for the chain group fixing
    # base[:i]; rebuilt whenever its generator list changes
    level_gens: list[list[Permutation]] = []
    transversals: list[dict[int, Permutation]] = []
    orbit_orders: list[list[int]] = []

    def ensure_moves_base(g: Permutation) -> None:
        if all(g(b) == b for b in base):
            base.append(min(g.moved_points()))

    def rebuild_level(i: int) -> None:
        gens_i = [g for g in strong if all(g(b) == b for b in base[:i])]
        b = base[i]
        transversal = {b: Permutation.identity(degree)}
        order = [b]
        queue = [b]
        while queue:
            p = queue.pop(0)
            rep = transversal[p]
            for s in gens_i:
                q = s(p)
                if q not in transversal:
                    transversal[q] = s * rep
                    order.append(q)
                    queue.append(q)
        while len(level_gens) <= i:
            level_gens.append([])
            transversals.append({})
            orbit_orders.append([])
        level_gens[i] = gens_i
        transversals[i] = transversal
        orbit_orders[i] = order

    def strip(h: Permutation, start: int) -> tuple[Permutation, int]:
        for j in range(start, len(base)):
            p = h(base[j])
            rep = transversals[j].get(p)
            if rep is None:
                return h, j
            h = rep.inverse() * h
        return h, len(base)

    for g in gens:
        ensure_moves_base(g)
        strong.append(g)
    for i in range(len(base)):
        rebuild_level(i)

    # Verify levels bottom-up so that sifting always runs through an already
    # verified chain.  A residue that fails to sift is installed as a strong
    # generator at the deepest level it belongs to, and verification restarts
    # there.  Each restart strictly grows the chain order, so this terminates.
    i = len(base) - 1
    while i >= 0:
        restart = False
        for p in orbit_orders[i]:
            rep = transversals[i][p]
            for s in level_gens[i]:
                schreier = transversals[i][s(p)].inverse() * (s * rep)
                if schreier.is_identity():
                    continue
                residue, j = strip(schreier, i + 1)
                if residue.is_identity():
                    continue
                if j == len(base):
                    base.append(min(residue.moved_points()))
                strong.append(residue)
                for k in range(i + 1, j + 1):
                    rebuild_level(k)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1

    # Drop trailing base points with trivial orbits and no deeper content.
    while base and len(transversals[len(base) - 1]) == 1 and len(base) > 1:
        base.pop()
        transversals.pop()
        level_gens.pop()
        orbit_orders.pop()

    return StrongGenSet(degree, tuple(base),
                        tuple(transversals[:len(base)]),
                        tuple(strong))

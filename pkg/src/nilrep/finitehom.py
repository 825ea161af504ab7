"""Finite quotients and connectivity of representation spaces.

Homomorphisms from a finitely presented nilpotent group into a finite
group are enumerated by depth-first search over generator images with
relator pruning.  A homomorphism whose image is a non-abelian subgroup
of the target certifies that the representation variety and the
character variety are both disconnected; the other connectivity rules
implemented here are the torus computation, the torsion obstruction, the
non-abelian free nilpotent / Heisenberg rule, and the classical facts
about commuting tuples.  One verdict covers both spaces, since the
identity component of the quotient is the quotient of the identity
component.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import totient
from .errors import TooLarge, UnsupportedGroup, UnsupportedQuotient
from .groups import (DirectProduct, FiniteAbelian, FreeAbelian, FreeNilpotent,
                     GroupSpec, Heisenberg, Presentation, Presented, Word,
                     abelianize, finite_abelian_presentation,
                     free_abelian_presentation,
                     free_nilpotent_class2_presentation,
                     heisenberg_presentation, is_abelian,
                     is_nonabelian_free_family, merge_presentations)
from .rootdata import ReductiveSpec

GENERATOR_LIMIT = 6
SEARCH_LIMIT = 10**8


# ---------------------------------------------------------------------------
# finite groups as multiplication tables


class FiniteGroup:
    """A finite group given by its multiplication table on 0..order-1.

    Construction verifies the identity and inverse laws always, and full
    associativity for orders up to 24 (the sizes used here).
    """

    def __init__(self, table, labels=None, name="group"):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.name = name
        if any(len(row) != self.order for row in self.table):
            raise ValueError("table must be square")
        if any(not 0 <= e < self.order for row in self.table for e in row):
            raise ValueError("table entries must be element indices")
        self.labels = tuple(labels) if labels else tuple(
            "e%d" % i for i in range(self.order))
        if len(self.labels) != self.order:
            raise ValueError("need one label per element")
        self.identity = self._find_identity()
        self.inverse = tuple(self._find_inverse(g) for g in range(self.order))
        if self.order <= 24:
            for a, b, c in product(range(self.order), repeat=3):
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                    raise ValueError("table is not associative")

    def _find_identity(self):
        for e in range(self.order):
            if all(self.table[e][g] == g == self.table[g][e]
                   for g in range(self.order)):
                return e
        raise ValueError("table has no identity element")

    def _find_inverse(self, g):
        for h in range(self.order):
            if self.table[g][h] == self.identity == self.table[h][g]:
                return h
        raise ValueError("element %d has no inverse" % g)

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, g, e):
        if e < 0:
            g, e = self.inverse[g], -e
        out = self.identity
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def commutator(self, a, b):
        """[a, b] = a^-1 b^-1 a b."""
        out = self.mul(self.inverse[a], self.inverse[b])
        return self.mul(self.mul(out, a), b)

    def closure(self, generators) -> frozenset:
        # right multiplication by generators suffices: in a finite group
        # every inverse is a positive power
        seen = {self.identity, *generators}
        frontier = list(seen)
        while frontier:
            fresh = []
            for g in frontier:
                for h in generators:
                    p = self.mul(g, h)
                    if p not in seen:
                        seen.add(p)
                        fresh.append(p)
            frontier = fresh
        return frozenset(seen)

    def is_abelian_subset(self, elems) -> bool:
        elems = list(elems)
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in elems for b in elems)

    def centralizer_size(self, g) -> int:
        return sum(1 for h in range(self.order)
                   if self.mul(g, h) == self.mul(h, g))

    def nilpotency_class(self):
        """Length of the lower central series, or None if not nilpotent."""
        everything = list(range(self.order))
        layer = frozenset(everything)
        depth = 0
        while True:
            depth += 1
            commutators = {self.commutator(g, h)
                           for g in everything for h in layer}
            nxt = self.closure(commutators)
            if nxt == frozenset({self.identity}):
                return depth
            if nxt == layer:
                return None
            layer = nxt

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)


# ---------------------------------------------------------------------------
# built-in targets


def _gauss_mat_mul(a, b):
    # 2x2 matrices over Z[i]; entries are (re, im) pairs
    def cmul(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def cadd(x, y):
        return (x[0] + y[0], x[1] + y[1])

    return tuple(tuple(cadd(cmul(a[i][0], b[0][j]), cmul(a[i][1], b[1][j]))
                       for j in range(2)) for i in range(2))


def q8() -> FiniteGroup:
    """The quaternion group of order 8, generated inside SL_2(C) by
    diag(i, -i) and the rotation [[0, 1], [-1, 0]], multiplied exactly
    over the Gaussian integers."""
    gen_i = (((0, 1), (0, 0)), ((0, 0), (0, -1)))
    gen_j = (((0, 0), (1, 0)), ((-1, 0), (0, 0)))
    one = (((1, 0), (0, 0)), ((0, 0), (1, 0)))
    elems = {one}
    frontier = [one]
    while frontier:
        fresh = []
        for m in frontier:
            for g in (gen_i, gen_j):
                p = _gauss_mat_mul(m, g)
                if p not in elems:
                    elems.add(p)
                    fresh.append(p)
        frontier = fresh
    assert len(elems) == 8

    def neg(m):
        return tuple(tuple((-re, -im) for re, im in row) for row in m)

    gen_k = _gauss_mat_mul(gen_i, gen_j)
    ordered = [one, neg(one), gen_i, neg(gen_i), gen_j, neg(gen_j),
               gen_k, neg(gen_k)]
    assert set(ordered) == elems
    index = {m: i for i, m in enumerate(ordered)}
    table = [[index[_gauss_mat_mul(a, b)] for b in ordered] for a in ordered]
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return FiniteGroup(table, labels, name="Q8")


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1"] + ["g^%d" % a if a > 1 else "g" for a in range(1, n)]
    return FiniteGroup(table, labels, name="C%d" % n)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: elements (rotation, flip)."""
    elems = [(rot, flip) for flip in (0, 1) for rot in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        # (r1, f1) * (r2, f2): the flip conjugates rotations to inverses
        r1, f1 = a
        r2, f2 = b
        return ((r1 + (n - r2 if f1 else r2)) % n, f1 ^ f2)

    table = [[index[mul(a, b)] for b in elems] for a in elems]
    labels = []
    for r, f in elems:
        rot = "r^%d" % r if r else ""
        labels.append(("s" + rot) if f else (rot or "1"))
    return FiniteGroup(table, labels, name="D%d" % n)


# ---------------------------------------------------------------------------
# homomorphism enumeration


@dataclass(frozen=True)
class HomSearchResult:
    """Counts from a full enumeration of Hom(group, target).

    witness is the first generator-image tuple (in depth-first order by
    element index) whose image subgroup is non-abelian, if any; it is a
    surjection onto that subgroup.  presentation records which generators
    the indices refer to.
    """

    total: int
    surjective: int
    witness: tuple[int, ...] | None
    presentation: Presentation


def presentation_for_homs(g, target: FiniteGroup) -> Presentation:
    """A finite presentation suitable for counting maps into target.

    Free nilpotent groups of class >= 3 have no finite presentation in
    this catalog; when the target's nilpotency class is at most 2 the
    class-2 quotient receives exactly the same homomorphisms, so that
    presentation is used.  Otherwise UnsupportedGroup is raised.
    """
    if isinstance(g, Presentation):
        return g
    if isinstance(g, Presented):
        return g.presentation
    if isinstance(g, Heisenberg):
        return heisenberg_presentation()
    if isinstance(g, FreeAbelian):
        return free_abelian_presentation(g.n)
    if isinstance(g, FiniteAbelian):
        return finite_abelian_presentation(g.divisors)
    if isinstance(g, FreeNilpotent):
        if g.c == 1:
            return free_abelian_presentation(g.n)
        if g.c == 2:
            return free_nilpotent_class2_presentation(g.n)
        target_class = target.nilpotency_class()
        if target_class is None or target_class > 2:
            raise UnsupportedGroup(
                "no finite presentation of %s is available at the class "
                "of the target group" % g)
        return free_nilpotent_class2_presentation(g.n)
    if isinstance(g, DirectProduct):
        return merge_presentations(
            presentation_for_homs(f, target) for f in g.factors)
    raise TypeError("not a group spec or presentation: %r" % (g,))


def _evaluate(word: Word, images, target: FiniteGroup) -> int:
    out = target.identity
    for g, e in word.letters:
        out = target.mul(out, target.power(images[g], e))
    return out


def enumerate_homs(g, target: FiniteGroup) -> HomSearchResult:
    """Exact count of homomorphisms by DFS over generator images.

    Relators are checked as soon as all their generators have images, so
    dead branches are pruned early; generator images are tried in element
    index order, which makes the reported witness deterministic.
    """
    pres = presentation_for_homs(g, target)
    gens = pres.generator_count
    if gens > GENERATOR_LIMIT:
        raise TooLarge("presentation has %d generators (limit %d)"
                       % (gens, GENERATOR_LIMIT))
    if target.order ** gens > SEARCH_LIMIT:
        raise TooLarge("search space %d^%d exceeds the limit"
                       % (target.order, gens))
    by_depth: list[list[Word]] = [[] for _ in range(gens)]
    for w in pres.relators:
        top = w.max_generator()
        if top >= 0:
            by_depth[top].append(w)
        elif w.letters:
            by_depth[0].append(w)

    images = [target.identity] * gens
    counts = {"total": 0, "surjective": 0}
    found: list[tuple[int, ...] | None] = [None]

    def dfs(depth):
        if depth == gens:
            counts["total"] += 1
            image = target.closure(images)
            if len(image) == target.order:
                counts["surjective"] += 1
            if found[0] is None and not target.is_abelian_subset(image):
                found[0] = tuple(images)
            return
        for candidate in range(target.order):
            images[depth] = candidate
            if all(_evaluate(w, images, target) == target.identity
                   for w in by_depth[depth]):
                dfs(depth + 1)
        images[depth] = target.identity

    dfs(0)
    return HomSearchResult(counts["total"], counts["surjective"],
                           found[0], pres)


def surjection_witness(g, target: FiniteGroup):
    """First DFS-discovered map whose image is a non-abelian subgroup of
    the target, or None.  Such a map realizes a surjection of the group
    onto a finite non-abelian subgroup."""
    return enumerate_homs(g, target).witness


def central_image_order_bound(m: int) -> int:
    """Explicit bound on the order of the top lower-central image of a
    nilpotent subgroup of SU_m.

    The top layer acts by roots of unity of order at most m on each
    eigenspace, so it fits inside the diagonal matrices with such
    entries; there are (sum_{k<=m} phi(k))^m of those.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(totient(k) for k in range(1, m + 1)) ** m


# ---------------------------------------------------------------------------
# connectivity verdicts


CONNECTED = "Connected"
DISCONNECTED = "Disconnected"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """Connectivity verdict for Hom(group, G) and, by the quotient
    transfer, for the character variety as well."""

    status: str
    reason_code: str
    reason: str
    witness: tuple[int, ...] | None = None

    def __str__(self):
        return "%s (%s)" % (self.status, self.reason)


def _q8_embeds(spec: ReductiveSpec) -> bool:
    # recorded embeddings only: the quaternion group sits inside SL_2 and
    # hence in SL_n, GL_{n>=2}, Sp_{2n} and Spin_n; for PGL_n and SO_n the
    # question is isogeny-sensitive and deliberately left undecided
    for f in spec.factors:
        if f.family in ("SL", "Sp", "Spin"):
            return True
        if f.family == "GL" and f.param >= 2:
            return True
    return False


def connectivity_verdict(g: GroupSpec, spec: ReductiveSpec) -> Verdict:
    """Decide connectivity of Hom(group, G) where the implemented theory
    can, and say Unknown where it cannot.

    The decision ladder: torus targets are settled by character theory;
    a surjection onto a quaternion subgroup of G forces disconnection;
    torsion in H_1 forces disconnection into any of the catalog targets;
    non-abelian free nilpotent and Heisenberg groups are disconnected in
    every non-torus target; abelian groups fall back on the classical
    connectivity facts for commuting tuples.
    """
    ab = abelianize(g)
    r = ab.rank

    if spec.is_torus():
        if not ab.torsion:
            return Verdict(CONNECTED, "torus_target",
                           "the target is an algebraic torus and H_1 is "
                           "torsion-free, so the space is a torus power T^%d"
                           % r)
        return Verdict(DISCONNECTED, "torus_target_torsion",
                       "the torsion part of H_1 maps to a torus in more than "
                       "one way, and each choice is isolated; %s admits %s"
                       % (spec, ab))

    witness = None
    if not is_abelian(g):
        try:
            witness = surjection_witness(g, q8())
        except (TooLarge, UnsupportedGroup, UnsupportedQuotient):
            witness = None
    if witness is not None and _q8_embeds(spec):
        return Verdict(DISCONNECTED, "finite_nonabelian_quotient",
                       "the group surjects onto a quaternion subgroup of the "
                       "target, so no path connects that representation to "
                       "the trivial one", witness=witness)

    if ab.torsion:
        return Verdict(DISCONNECTED, "torsion_obstruction",
                       "H_1 has torsion %s; its finite-order characters into "
                       "a maximal torus cannot deform to the trivial "
                       "representation" % (list(ab.torsion),))

    if is_nonabelian_free_family(g):
        return Verdict(DISCONNECTED, "nonabelian_free_family",
                       "a non-abelian free nilpotent or Heisenberg group has "
                       "disconnected representation and character spaces for "
                       "every reductive target that is not a torus")

    if is_abelian(g):
        if r == 0:
            return Verdict(CONNECTED, "trivial_group",
                           "the trivial group has a single representation")
        if r == 1:
            return Verdict(CONNECTED, "single_generator",
                           "Hom(Z, G) = G, which is connected")
        families = spec.families()
        if families <= {"SL", "Sp", "GL", "T"}:
            return Verdict(CONNECTED, "commuting_tuples_diagonalizable",
                           "commuting tuples in the compact forms of these "
                           "factors are simultaneously diagonalizable, so "
                           "Hom(Z^%d, G) is connected for every %d" % (r, r))
        if families & {"PGL", "SO"}:
            return Verdict(DISCONNECTED, "not_simply_connected",
                           "the target has a non-simply-connected simple "
                           "factor, and commuting %d-tuples in it do not all "
                           "lie on one component" % r)
        if r == 2:
            return Verdict(CONNECTED, "commuting_pairs_irreducible",
                           "commuting pairs in a connected semisimple group "
                           "form an irreducible, hence connected, variety")
        return Verdict(UNKNOWN, "higher_commuting_tuples",
                       "connectivity of commuting %d-tuples in this isogeny "
                       "type is not settled by the implemented criteria" % r)

    return Verdict(UNKNOWN, "outside_catalog",
                   "no implemented criterion decides this group/target pair")

"""Gamma-modules: Γ-closed subsets S ⊆ Γ of finite colength, and Δ-sets.

A module of colength r is determined by its gap sequence G(S) = Γ∖S,
an r-element subset of Γ that is downward closed under Γ-subtraction
(an order ideal in the poset (Γ, ≤_Γ) with a ≤_Γ b iff b − a ∈ Γ).
"""

from .errors import CardinalityMismatch, MalformedDelta, ShiftUnderflow


class GammaModule:
    """A Γ-module S ⊆ Γ with ♯(Γ∖S) = colength, stored via its gap set."""

    __slots__ = ("ambient", "gap_set", "colength", "conductor", "min_generators", "_absent")

    def __init__(self, ambient, gap_set):
        gaps = tuple(sorted(set(int(g) for g in gap_set)))
        for g in gaps:
            if g not in ambient:
                raise MalformedDelta("gap %d is not in the ambient semigroup" % g)
        absent = set(gaps)
        # Downward closure under Γ-subtraction (checked on generator steps,
        # which suffices when verified for every element).
        for g in gaps:
            for a in ambient.gens:
                u = g - a
                if u in ambient and u not in absent:
                    raise MalformedDelta(
                        "gap set %r not Γ-closed: %d - %d = %d escapes" % (gaps, g, a, u)
                    )
        self.ambient = ambient
        self.gap_set = gaps
        self._absent = absent
        self.colength = len(gaps)
        self.conductor = gaps[-1] + 1 if gaps else 0
        self.min_generators = tuple(self._minimal_generators())

    def __contains__(self, n):
        return n in self.ambient and n not in self._absent

    def __eq__(self, other):
        if not isinstance(other, GammaModule):
            return NotImplemented
        return self.ambient.gens == other.ambient.gens and self.gap_set == other.gap_set

    def __hash__(self):
        return hash((self.ambient.gens, self.gap_set))

    def __repr__(self):
        gens = ",".join(str(g) for g in self.min_generators)
        return "GammaModule<%s>" % gens

    def _minimal_generators(self):
        # s is a generator iff s - a ∉ S for every generator a of Γ; any
        # s ≥ max(conductor_S, conductor_Γ) + multiplicity splits off one
        # multiplicity step inside S, so the scan below is complete.
        sg = self.ambient
        limit = max(self.conductor, sg.conductor) + sg.multiplicity
        out = []
        for s in range(limit):
            if s not in self:
                continue
            if any((s - a) in self for a in sg.gens):
                continue
            out.append(s)
        return out

    def members_below(self, bound):
        return [n for n in range(bound) if n in self]

    def delta_set(self, r=None):
        return delta_set(self, self.colength if r is None else r)


class DeltaSet:
    """δ-element subset of [0, 2δ) whose union with [2δ, ∞) is Γ-closed."""

    __slots__ = ("elements", "module", "r")

    def __init__(self, elements, module, r):
        self.elements = tuple(sorted(elements))
        self.module = module
        self.r = r

    def __eq__(self, other):
        if isinstance(other, DeltaSet):
            return self.elements == other.elements
        if isinstance(other, (tuple, list, set, frozenset)):
            return self.elements == tuple(sorted(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "DeltaSet{%s}" % ",".join(str(e) for e in self.elements)


def delta_set(module, r):
    """Δ = {s − r | s ∈ S, s − r < 2δ}, the shifted order set below 2δ."""
    sg = module.ambient
    if module.colength != r:
        raise CardinalityMismatch(
            "module has colength %d, expected r=%d" % (module.colength, r)
        )
    dd = 2 * sg.delta
    members = module.members_below(r + dd)
    if members and members[0] < r:
        raise ShiftUnderflow(
            "min(S) = %d < r = %d; shift by -r not defined" % (members[0], r)
        )
    elements = tuple(s - r for s in members if s >= r)
    if len(elements) != sg.delta:
        raise CardinalityMismatch(
            "Δ-set %r has %d elements, expected δ=%d" % (elements, len(elements), sg.delta)
        )
    elem_set = set(elements)
    for e in elements:
        for a in sg.gens:
            if e + a < dd and (e + a) not in elem_set:
                raise MalformedDelta(
                    "Δ %r not Γ-closed: %d + %d escapes" % (elements, e, a)
                )
    return DeltaSet(elements, module, r)


def minimal_generators(module):
    """Unique minimal generating set of S as a Γ-module."""
    return module.min_generators


def enumeration_bound(sg, r):
    # Descending by the multiplicity from any gap stays inside the gap set
    # until dropping below conductor + multiplicity, so a colength-r gap
    # set lives below conductor + r*multiplicity.
    return sg.conductor + r * sg.multiplicity


def enumerate_colength(sg, r, bound=None):
    """All Γ-modules S ⊆ Γ with ♯(Γ∖S) = r, sorted lexicographically by gap set.

    Gap sets are grown as sorted prefixes: a sorted prefix of an order
    ideal is itself an order ideal, and a candidate t may extend a prefix
    iff t − a lands in the prefix for every generator a with t − a ∈ Γ.
    """
    if r < 0:
        raise ValueError("colength must be >= 0, got %d" % r)
    if r == 0:
        return [GammaModule(sg, ())]
    if bound is None:
        bound = enumeration_bound(sg, r)
    pool = sg.members_below(bound)
    out = []
    prefix = []
    chosen = set()

    def extend(start):
        if len(prefix) == r:
            out.append(GammaModule(sg, tuple(prefix)))
            return
        remaining = r - len(prefix)
        for idx in range(start, len(pool) - remaining + 1):
            t = pool[idx]
            ok = True
            for a in sg.gens:
                u = t - a
                if u in sg and u not in chosen:
                    ok = False
                    break
            if not ok:
                continue
            prefix.append(t)
            chosen.add(t)
            extend(idx + 1)
            prefix.pop()
            chosen.discard(t)

    extend(0)
    return out

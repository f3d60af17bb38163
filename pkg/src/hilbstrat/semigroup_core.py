"""Numerical semigroups: membership, gaps, conductor, minimal generators."""

from math import gcd

from .errors import EmptyGenerators, NonCoprime


class NumericalSemigroup:
    """Additive submonoid of the nonnegative integers with finite complement.

    Built from any generating set with gcd 1.  The stored ``gens`` are the
    minimal generators, which may be a proper subset of the input.
    """

    __slots__ = ("gens", "multiplicity", "conductor", "gaps", "delta", "_sieve")

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyGenerators("need at least one generator")
        if gens[0] <= 0:
            raise ValueError("generators must be positive, got %d" % gens[0])
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise NonCoprime("generators %r have gcd %d" % (gens, g))

        bound = 4 * gens[-1] + 2
        sieve = [False] * bound
        sieve[0] = True
        for n in range(bound):
            if not sieve[n]:
                continue
            for a in gens:
                if n + a < bound:
                    sieve[n + a] = True
        self._sieve = sieve
        self.multiplicity = gens[0]

        # Conductor: start of the first run of `multiplicity` consecutive
        # members; from there on every residue class is reached.
        run = 0
        conductor = None
        for n in range(bound):
            run = run + 1 if sieve[n] else 0
            if run == self.multiplicity:
                conductor = n - self.multiplicity + 1
                break
        if conductor is None:  # pragma: no cover - bound is provably large enough
            raise AssertionError("sieve bound too small for %r" % gens)
        self.conductor = conductor
        self.gaps = tuple(n for n in range(conductor) if not sieve[n])
        self.delta = len(self.gaps)
        self.gens = tuple(self._minimal_generators())

    def __contains__(self, n):
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self._sieve[n]

    def __repr__(self):
        return "NumericalSemigroup<%s>" % ",".join(str(g) for g in self.gens)

    def _minimal_generators(self):
        # Every generator lies below conductor + multiplicity: anything
        # larger splits off one multiplicity step and stays in the semigroup.
        out = []
        limit = max(self.conductor + self.multiplicity, self.multiplicity + 1)
        members = [n for n in range(1, limit) if n in self]
        member_set = set(members)
        for g in members:
            if any(g - a in member_set for a in members if a < g):
                continue
            out.append(g)
        return out

    def members_below(self, bound):
        """Sorted members of the semigroup in [0, bound)."""
        return [n for n in range(bound) if n in self]

    def to_dict(self):
        return {
            "gens": list(self.gens),
            "gaps": list(self.gaps),
            "delta": self.delta,
            "conductor": self.conductor,
        }

"""Canonical parametrized ideal families (affine cells) and Plücker points.

Each cell is the set of ideals I ⊆ k[[Γ]] whose order set is a prescribed
Γ-module S.  It is presented by monic generators

    f_i = t^{g_i} + Σ λ_{i,c} t^c,

one per minimal generator g_i of S, with c running over the gaps of S
(elements of Γ∖S) above g_i.  Coefficient relations forced by the module
structure are eliminated symbolically; the survivors are free coordinates
on the cell.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import (
    CardinalityMismatch,
    NonTriangularRelation,
    PivotLoss,
    TruncationTooSmall,
)
from .symcalc import ParamPoly, TruncSeries

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _param_name(gen_index, exponent):
    # zero-padded so that string order equals (generator, exponent) order
    return "q%02dx%03d" % (gen_index, exponent)


def default_truncation(module, margin=0):
    sg = module.ambient
    return module.conductor + sg.conductor + 2 * sg.delta + 1 + margin


class CanonicalFamily:
    """The affine cell J(S): parametrized generators plus elimination data.

    ``generators`` is the displayed family: the minimal-generator series
    together with any derived normal forms carrying a coefficient that is
    neither zero nor a bare free parameter (these are the informative
    redundant generators the case analyses print, e.g. t^6 - a^2 t^8).
    """

    __slots__ = (
        "module",
        "truncation",
        "seeds",
        "generators",
        "generator_orders",
        "params",
        "free_params",
        "eliminated",
        "dimension",
        "normal_forms",
        "display_names",
    )

    def __init__(self, module, truncation, seeds, normal_forms, params, free_params, eliminated):
        self.module = module
        self.truncation = truncation
        self.seeds = seeds
        self.normal_forms = normal_forms
        self.params = params
        self.free_params = free_params
        self.eliminated = eliminated
        self.dimension = len(free_params)
        self.display_names = {
            name: (_LETTERS[i] if i < len(_LETTERS) else "x%d" % i)
            for i, name in enumerate(free_params)
        }
        self.generator_orders = self._displayed_orders()
        self.generators = [normal_forms[s] for s in self.generator_orders]

    def _displayed_orders(self):
        module = self.module
        free = set(self.free_params)
        min_gens = set(module.min_generators)
        max_gap = module.gap_set[-1] if module.gap_set else -1
        orders = []
        for s in sorted(self.normal_forms):
            if s in min_gens:
                orders.append(s)
                continue
            if s > max_gap:
                continue
            informative = False
            for e, p in self.normal_forms[s].coeffs.items():
                if e == s:
                    continue
                if len(p.terms) == 1:
                    ((key, c),) = p.terms.items()
                    if c == 1 and len(key) == 1 and key[0][1] == 1 and key[0][0] in free:
                        continue  # bare free parameter, carries no relation
                informative = True
                break
            if informative:
                orders.append(s)
        return orders

    def format_generators(self):
        return [g.format(rename=self.display_names) for g in self.generators]

    def eliminated_display(self):
        out = []
        for name in sorted(self.eliminated):
            i = int(name[1:3])
            c = int(name[4:])
            out.append(
                {
                    "generator": i,
                    "exponent": c,
                    "expression": self.eliminated[name].format(rename=self.display_names),
                }
            )
        return out


def _build_seeds(module, truncation, eliminated):
    seeds = []
    for i, g in enumerate(module.min_generators):
        coeffs = {g: ParamPoly.one()}
        for c in module.gap_set:
            if g < c < truncation:
                name = _param_name(i, c)
                p = eliminated.get(name)
                if p is None:
                    p = ParamPoly.variable(name)
                if not p.is_zero():
                    coeffs[c] = p
        seeds.append(TruncSeries(truncation, coeffs))
    return seeds


def _primaries(module, seeds, truncation):
    """Monic element of each order s ∈ S ∩ [0, N), taken from the first
    minimal generator that reaches s."""
    gens = module.min_generators
    prim = {}
    owners = {}
    for s in range(truncation):
        if s not in module:
            continue
        for i, g in enumerate(gens):
            if (s - g) in module.ambient:
                prim[s] = seeds[i].shift(s - g, trunc=truncation)
                owners[s] = i
                break
        else:  # pragma: no cover - every s ∈ S is g_i + γ for some i
            raise PivotLoss("no generator reaches order %d" % s)
    return prim, owners


def _scan_relations(module, seeds, primaries, owners, truncation):
    """Reduce every leading-term-cancelling pair; collect forced relations.

    Returns a list of (forbidden_order, ParamPoly) for combinations whose
    reduced generic order falls in Γ∖S.  An empty list means the current
    parameter set is consistent.
    """
    gens = module.min_generators
    found = []
    for s in sorted(primaries):
        for j, g in enumerate(gens):
            if j == owners[s] or (s - g) not in module.ambient:
                continue
            d = primaries[s] - seeds[j].shift(s - g, trunc=truncation)
            while not d.is_zero():
                o = d.generic_order()
                if o in module:
                    d = d - primaries[o].scale(d.coeff(o))
                else:
                    found.append((o, d.coeff(o)))
                    break
    return found


def _solve_relation(poly):
    """Pick the lexicographically latest parameter that occurs linearly with
    a constant coefficient and express it through the others."""
    candidates = []
    for name in poly.variables():
        if poly.degree_in(name) != 1:
            continue
        c = poly.coeff_of(name, 1)
        if c.is_constant() and not c.is_zero():
            candidates.append(name)
    if not candidates:
        raise NonTriangularRelation("relation %s is not linear in any parameter" % poly.format())
    name = max(candidates)
    c = poly.coeff_of(name, 1).constant_value()
    rest = poly.coeff_of(name, 0)
    return name, rest * (Fraction(-1) / c)


def canonical_family(sg, module, truncation=None, margin=0):
    """Construct the affine cell J(S) over Γ = sg.

    Seeds unknowns at every gap of S above each minimal generator, closes
    under the Γ-action, cancels leading terms pairwise, and eliminates any
    coefficient whose survival would put a forbidden order into the ideal.
    Repeats to a fixpoint; remaining parameters are free coordinates.
    """
    if module.ambient is not sg and module.ambient.gens != sg.gens:
        raise CardinalityMismatch("module does not live over the given semigroup")
    if truncation is None:
        truncation = default_truncation(module, margin)
    if module.gap_set and module.gap_set[-1] >= truncation:
        raise TruncationTooSmall(
            "truncation %d does not cover forbidden order %d"
            % (truncation, module.gap_set[-1])
        )

    eliminated = {}
    while True:
        seeds = _build_seeds(module, truncation, eliminated)
        primaries, owners = _primaries(module, seeds, truncation)
        relations = _scan_relations(module, seeds, primaries, owners, truncation)
        if not relations:
            break
        relations.sort(key=lambda item: item[0])
        _, poly = relations[0]
        name, expr = _solve_relation(poly)
        eliminated = {k: v.subs({name: expr}) for k, v in eliminated.items()}
        eliminated[name] = expr

    params = [
        _param_name(i, c)
        for i, g in enumerate(module.min_generators)
        for c in module.gap_set
        if g < c < truncation
    ]
    free = [p for p in params if p not in eliminated]

    normal_forms = {}
    for s in sorted(primaries, reverse=True):
        d = primaries[s]
        while True:
            inside = [e for e in d.support() if e > s and e in module]
            if not inside:
                break
            e = min(inside)
            d = d - normal_forms[e].scale(d.coeff(e))
        if d.coeff(s) != ParamPoly.one():
            raise PivotLoss("normal form at order %d lost its unit leading term" % s)
        normal_forms[s] = d

    return CanonicalFamily(module, truncation, seeds, normal_forms, params, free, eliminated)


def cell_dimension(sg, module):
    return canonical_family(sg, module).dimension


@lru_cache(maxsize=None)
def minor_column_sets(space_dim, rank):
    """All rank-subsets of columns in lexicographic order, plus an index map."""
    sets = list(combinations(range(space_dim), rank))
    index = {cols: i for i, cols in enumerate(sets)}
    return sets, index


def det(matrix):
    """Determinant by first-row expansion; entries are ParamPoly."""
    n = len(matrix)
    if n == 0:
        return ParamPoly.one()
    if n == 1:
        return matrix[0][0]
    total = ParamPoly.zero()
    for j, a in enumerate(matrix[0]):
        if a.is_zero():
            continue
        sub = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = a * det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def cell_matrix(family, r):
    """Reduced unit-pivot echelon basis of t^{-r}·I modulo t^{2δ}.

    Rows are the normal forms of orders in S ∩ [r, r+2δ), shifted down by
    r; pivots sit exactly at the Δ-set columns.
    """
    module = family.module
    sg = module.ambient
    dd = 2 * sg.delta
    orders = [s for s in range(r, r + dd) if s in module]
    if len(orders) != sg.delta:
        raise CardinalityMismatch(
            "window [%d, %d) holds %d orders, expected δ=%d"
            % (r, r + dd, len(orders), sg.delta)
        )
    if r + dd > family.truncation:
        raise TruncationTooSmall(
            "truncation %d below Plücker window end %d" % (family.truncation, r + dd)
        )
    rows = []
    for s in orders:
        shifted = family.normal_forms[s].shift(-r)
        rows.append([shifted.coeff(e) for e in range(dd)])
    pivots = [s - r for s in orders]
    one = ParamPoly.one()
    for i, p in enumerate(pivots):
        if rows[i][p] != one:
            raise PivotLoss("row %d has no unit pivot at column %d" % (i, p))
        for e in range(p):
            if not rows[i][e].is_zero():
                raise PivotLoss("row %d has support below its pivot" % i)
        for k in range(len(pivots)):
            if k != i and not rows[k][p].is_zero():
                raise PivotLoss("pivot column %d not reduced" % p)
    return rows, pivots


def plucker_point(family, r):
    """All δ×δ minors of the cell matrix, in lexicographic column order."""
    sg = family.module.ambient
    rows, _ = cell_matrix(family, r)
    dd = 2 * sg.delta
    sets, _ = minor_column_sets(dd, sg.delta)
    return tuple(det([[row[c] for c in cols] for row in rows]) for cols in sets)


def reduce_against(rows, pivots, vector):
    """Reduce a coordinate vector by a reduced unit-pivot echelon basis."""
    out = list(vector)
    for i, p in enumerate(pivots):
        c = out[p]
        if not c.is_zero():
            row = rows[i]
            out = [out[k] - c * row[k] for k in range(len(out))]
    return out


def is_good_subspace(rows, pivots, sg):
    """Check the 𝒪-submodule condition: each t^{a_j} maps the span into itself."""
    dd = len(rows[0])
    zero = ParamPoly.zero()
    for a in sg.gens:
        for row in rows:
            shifted = [zero] * dd
            for e in range(dd - a):
                shifted[e + a] = row[e]
            rem = reduce_against(rows, pivots, shifted)
            if any(not q.is_zero() for q in rem):
                return False
    return True

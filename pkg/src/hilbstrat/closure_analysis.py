"""Closure containments between cells of one stratum, and components of M_r.

Containment of a cell C' in the closure of C is certified by a
one-parameter degeneration: each coordinate of C is sent to mu_j * s^{e_j}
for a bounded integer exponent vector e, the projective limit s -> 0 of
the Plücker vector is computed exactly, and the limit is matched against
the symbolic Plücker point of C'.  A match plus a full-rank Jacobian at a
rational witness point proves the limits sweep out a dense subset of C'.

Non-containment is decided by three closed obstructions: the Schubert
incidence condition, dimension comparison, and an identically vanishing
Plücker coordinate at the target's pivot minor.
"""

import random
from fractions import Fraction

from .gamma_modules import delta_set
from .ideal_cells import canonical_family, cell_matrix, minor_column_sets, plucker_point
from .schubert import closure_leq, schubert_index
from .symcalc import ParamPoly, limit_s_to_zero

CONTAINED = "contained"
NOT_CONTAINED = "not_contained"
UNKNOWN = "unknown"


class ClosureVerdict:
    __slots__ = ("status", "reason", "certificate")

    def __init__(self, status, reason=None, certificate=None):
        self.status = status
        self.reason = reason
        self.certificate = certificate

    def __repr__(self):
        return "ClosureVerdict(%s, %s)" % (self.status, self.reason)

    def to_dict(self):
        out = {"status": self.status, "reason": self.reason}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


class StratCell:
    """One cell of a stratum M_r with its Grassmannian data precomputed."""

    __slots__ = (
        "index",
        "label",
        "r",
        "module",
        "family",
        "delta",
        "schubert",
        "rows",
        "pivots",
        "plucker",
        "dim",
        "pivot_minor_index",
        "entry_minors",
        "plucker_degree",
        "forced_zero",
        "systems_cache",
    )

    def __repr__(self):
        return "StratCell(r=%d, S=%r)" % (self.r, self.module)


def build_cell(sg, module, r, index=0, label=None, margin=0):
    cell = StratCell.__new__(StratCell)
    cell.index = index
    cell.label = label
    cell.r = r
    cell.module = module
    cell.family = canonical_family(sg, module, margin=margin)
    cell.delta = delta_set(module, r)
    cell.schubert = schubert_index(cell.delta)
    cell.rows, cell.pivots = cell_matrix(cell.family, r)
    cell.plucker = plucker_point(cell.family, r)
    cell.dim = cell.family.dimension
    _sets, idx = minor_column_sets(2 * sg.delta, sg.delta)
    cell.pivot_minor_index = idx[tuple(cell.pivots)]
    cell.entry_minors = _entry_minors(cell, idx)
    cell.plucker_degree = max(1, max(p.total_degree() for p in cell.plucker))
    cell.forced_zero = tuple(k for k, p in enumerate(cell.plucker) if p.is_zero())
    cell.systems_cache = None
    return cell


def _entry_minors(cell, index_map):
    """For each free parameter, the single-swap minor exposing it.

    A free parameter appears as a bare matrix entry in the row of the
    minimal generator it was seeded on; swapping that row's pivot column
    for the entry's column isolates it: the minor equals +/- the entry.
    """
    module = cell.module
    out = {}
    for name in cell.family.free_params:
        gi = int(name[1:3])
        c = int(name[4:])
        g = module.min_generators[gi]
        ri = cell.pivots.index(g - cell.r)
        col = c - cell.r
        entry = cell.rows[ri][col]
        if entry != ParamPoly.variable(name):  # pragma: no cover - seed rows are unreduced
            raise AssertionError("expected bare %s at row %d col %d" % (name, ri, col))
        cols = tuple(sorted([p for k, p in enumerate(cell.pivots) if k != ri] + [col]))
        sign = 1 if (ri + cols.index(col)) % 2 == 0 else -1
        out[name] = (index_map[cols], sign)
    return out


class CoordSystem:
    """A polynomial reparametrization of the source cell used for searching.

    ``replacements`` substitutes selected free parameters by derived
    displayed coefficients (e.g. B = b - a^2); the remaining parameters
    keep their identity.  Any polynomial map into the cell's parameter
    space yields valid source points, so soundness never depends on the
    replacement being invertible.
    """

    __slots__ = ("replacements", "coords", "plucker", "uvars", "arrays", "uniq_exps")

    def describe(self, family):
        rename = family.display_names
        out = []
        for param, expr, wname in self.replacements:
            out.append(
                {
                    "parameter": rename.get(param, param),
                    "coordinate": wname,
                    "expression": expr.format(rename),
                }
            )
        return out


def _compose_replacements(pairs):
    mapping = {}
    for param, expr, wname in sorted(pairs, key=lambda t: t[0], reverse=True):
        e = expr.subs(mapping)
        if e.degree_in(param) != 1:
            return None
        c = e.coeff_of(param, 1)
        if c.is_zero() or len(c.terms) != 1:
            return None
        rest = e.coeff_of(param, 0)
        # c is a (Laurent) monomial, so it is invertible; the solved
        # parameter may pick up negative powers of other parameters,
        # which restricts the reparametrized chart to a dense open set
        mapping[param] = (ParamPoly.variable(wname) - rest) * c ** (-1)
    replaced = set(mapping)
    try:
        for _ in range(len(mapping) + 1):
            dirty = False
            for p, v in list(mapping.items()):
                if any(nm in replaced for nm in v.variables()):
                    mapping[p] = v.subs(mapping)
                    dirty = True
            if not dirty:
                return mapping
    except ValueError:
        # a substituted parameter sits under a negative power and its
        # replacement is not a monomial; this combination has no chart
        return None
    return None


def _primitive_part(p):
    """Strip the common monomial factor and normalize the leading coefficient."""
    content = {}
    for nm in p.variables():
        e = min(dict(key).get(nm, 0) for key in p.terms)
        if e > 0:
            content[nm] = -e
    if content:
        p = p * ParamPoly({tuple(sorted(content.items())): Fraction(1)})
    lead = p.terms[min(p.terms)]
    if lead != 1:
        p = p * (Fraction(1) / lead)
    return p


def _solvable_params(p, free_set):
    """Parameters of degree one in p whose coefficient is a monomial."""
    out = []
    for nm in p.variables():
        if nm not in free_set or p.degree_in(nm) != 1:
            continue
        c = p.coeff_of(nm, 1)
        if len(c.terms) == 1:
            out.append(nm)
    return out


def _candidate_replacements(src):
    """Derived coordinates worth trying instead of raw parameters.

    Two sources: non-bare displayed coefficients of the family's normal
    forms, and non-monomial Plücker coordinates of the cell.  Either kind
    is adopted by solving for one parameter of degree one.
    """
    free = src.family.free_params
    free_set = set(free)
    position = {p: i for i, p in enumerate(free)}
    cands = []
    seen = set()

    def consider(p):
        if p.is_zero() or len(p.terms) == 1:
            return
        p = _primitive_part(p)
        if p.is_constant() or len(p.terms) == 1:
            return
        solvable = _solvable_params(p, free_set)
        if not solvable:
            return
        target = max(solvable)
        sig = (target, tuple(sorted(p.terms.items())))
        if sig in seen:
            return
        seen.add(sig)
        cands.append((target, p, "w%02d" % position[target]))

    for s in src.family.generator_orders:
        nf = src.family.normal_forms[s]
        for e in sorted(nf.coeffs):
            if e != s:
                consider(nf.coeffs[e])
    for p in src.plucker:
        consider(p)
    return cands


def _coordinate_systems(src, max_systems=16):
    """Yield the canonical coordinates first, then adapted variants."""
    free = src.family.free_params
    systems = [[]]
    cands = _candidate_replacements(src)
    from itertools import combinations as _comb

    for size in range(1, len(cands) + 1):
        for subset in _comb(range(len(cands)), size):
            chosen = [cands[i] for i in subset]
            if len(set(t[0] for t in chosen)) != len(chosen):
                continue
            systems.append(chosen)
            if len(systems) >= max_systems:
                break
        if len(systems) >= max_systems:
            break

    for pairs in systems:
        mapping = _compose_replacements(pairs) if pairs else {}
        if mapping is None:
            continue
        sysm = CoordSystem.__new__(CoordSystem)
        sysm.replacements = pairs
        replaced = {param: wname for param, _, wname in pairs}
        sysm.coords = [replaced.get(p, p) for p in free]
        sysm.uvars = ["u%02d" % j for j in range(len(free))]
        to_u = {c: ParamPoly.variable(u) for c, u in zip(sysm.coords, sysm.uvars)}
        plucker = []
        for p in src.plucker:
            q = p.subs(mapping) if mapping else p
            plucker.append(q.subs(to_u))
        sysm.plucker = plucker
        sysm.arrays, sysm.uniq_exps = _term_arrays(plucker, sysm.uvars)
        yield sysm


def _term_arrays(plucker, uvars):
    pos = {u: j for j, u in enumerate(uvars)}
    k = len(uvars)
    uniq = []
    uniq_idx = {}
    arrays = []
    for p in plucker:
        items = []
        for key, c in p.terms.items():
            vec = [0] * k
            for nm, e in key:
                vec[pos[nm]] = e
            vec = tuple(vec)
            j = uniq_idx.get(vec)
            if j is None:
                j = len(uniq)
                uniq_idx[vec] = j
                uniq.append(vec)
            items.append((key, c, j))
        arrays.append(items)
    return arrays, uniq


def _fixed_norm_vectors(k, window, total):
    if k == 0:
        if total == 0:
            yield ()
        return
    if total > k * window:
        return
    bound = min(window, total)
    for v in range(-bound, bound + 1):
        rest = total - abs(v)
        if rest > (k - 1) * window:
            continue
        for tail in _fixed_norm_vectors(k - 1, window, rest):
            yield (v,) + tail


def _exponent_vectors(k, window, budget):
    """All of [-window, window]^k ordered by L1 norm, then lexicographically."""
    if k == 0:
        yield ()
        return
    emitted = 0
    for total in range(0, k * window + 1):
        for vec in _fixed_norm_vectors(k, window, total):
            yield vec
            emitted += 1
            if emitted >= budget:
                return


def _rank(matrix):
    m = [row[:] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _match_target(limit_vec, dst):
    """Identify the limit with a parametrized point of the target cell.

    Solves the target's free coefficients through single-swap minors and
    verifies every Plücker coordinate matches after clearing the pivot
    denominator; exact polynomial identities throughout.
    """
    q = limit_vec[dst.pivot_minor_index]
    if q.is_zero():
        return None
    n = {}
    for name, (midx, sign) in dst.entry_minors.items():
        val = limit_vec[midx]
        n[name] = val if sign == 1 else -val
    D = dst.plucker_degree
    powers = {0: ParamPoly.one(), 1: q}

    def qp(e):
        if e not in powers:
            powers[e] = qp(e - 1) * q
        return powers[e]

    lhs_factor = qp(D - 1)
    for kk, pk in enumerate(dst.plucker):
        h = ParamPoly.zero()
        for key, cf in pk.terms.items():
            deg = sum(x for _, x in key)
            term = qp(D - deg) * cf
            for nm, ex in key:
                term = term * n[nm] ** ex
            h = h + term
        if limit_vec[kk] * lhs_factor != h:
            return None
    return n, q


def _dominance_witness(n_map, q, dst, uvars, seed_str):
    """Rational point where the induced map onto the target cell has full rank."""
    if dst.dim == 0:
        return {}
    names = dst.family.free_params
    grad = []
    for nm in names:
        nk = n_map[nm]
        grad.append([nk.derivative(u) * q - nk * q.derivative(u) for u in uvars])
    rng = random.Random(seed_str)
    for _ in range(8):
        point = {u: Fraction(rng.choice((-1, 1)) * rng.randint(1, 40), rng.randint(1, 9)) for u in uvars}
        try:
            if q.evaluate(point) == 0:
                continue
            mat = [[g.evaluate(point) for g in row] for row in grad]
        except ZeroDivisionError:
            continue
        if _rank(mat) == dst.dim:
            return {u: str(point[u]) for u in uvars}
    return None


def _search_system(src, dst, system, window, seed, sys_idx, budget, only_exponents=None):
    k = len(system.coords)
    arrays = system.arrays
    uniq = system.uniq_exps
    pivot_terms = arrays[dst.pivot_minor_index]
    if not pivot_terms:
        return None
    pivot_refs = sorted(set(j for _, _, j in pivot_terms))
    forced_refs = []
    for kk in dst.forced_zero:
        refs = sorted(set(j for _, _, j in arrays[kk]))
        if refs:
            forced_refs.append(refs)

    if only_exponents is not None:
        candidates = [tuple(only_exponents)]
    else:
        candidates = _exponent_vectors(k, window, budget)

    for evec in candidates:
        dots = [sum(e * a for e, a in zip(evec, alpha)) for alpha in uniq]
        mp = min(dots[j] for j in pivot_refs)
        if any(d < mp for d in dots):
            continue
        bad = False
        for refs in forced_refs:
            if min(dots[j] for j in refs) == mp:
                bad = True
                break
        if bad:
            continue
        limit_vec = []
        for items in arrays:
            terms = {}
            for key, c, j in items:
                if dots[j] == mp:
                    terms[key] = c
            limit_vec.append(ParamPoly(terms))
        matched = _match_target(limit_vec, dst)
        if matched is None:
            continue
        n_map, q = matched
        seed_str = "%s:%d:%d:%d:%s" % (seed, src.index, dst.index, sys_idx, evec)
        witness = _dominance_witness(n_map, q, dst, system.uvars, seed_str)
        if witness is None:
            continue
        rename = src.family.display_names
        subst = {}
        for coord, u, e in zip(system.coords, system.uvars, evec):
            shown = rename.get(coord, coord)
            subst[shown] = "%s*s^%d" % (u, e) if e else u
        cert = {
            "system": sys_idx,
            "replacements": system.describe(src.family),
            "exponents": list(evec),
            "substitution": subst,
            "target_pivots": list(dst.pivots),
            "witness": witness,
        }
        return ClosureVerdict(CONTAINED, "degeneration", cert)
    return None


DEFAULT_WINDOW = 5


def cell_closure_contains(src, dst, window=DEFAULT_WINDOW, seed=42, budget=50000):
    """Decide whether the target cell lies in the closure of the source cell."""
    same = src.module.gap_set == dst.module.gap_set
    if not same and dst.dim >= src.dim:
        # closures of distinct cells add only strictly smaller strata
        return ClosureVerdict(NOT_CONTAINED, "dimension")
    if not closure_leq(src.schubert, dst.schubert):
        return ClosureVerdict(NOT_CONTAINED, "schubert")
    if src.plucker[dst.pivot_minor_index].is_zero():
        # that Plücker coordinate vanishes on the whole source cell, hence
        # on its closure, but is the unit pivot minor on the target cell
        return ClosureVerdict(NOT_CONTAINED, "pivot_coordinate")
    if src.systems_cache is None:
        src.systems_cache = list(_coordinate_systems(src))
    for sys_idx, system in enumerate(src.systems_cache):
        verdict = _search_system(src, dst, system, window, seed, sys_idx, budget)
        if verdict is not None:
            return verdict
    return ClosureVerdict(UNKNOWN, "no degeneration found in window %d" % window)


def replay_certificate(src, dst, certificate, seed=42):
    """Re-run the recorded degeneration; True iff it certifies again."""
    want = certificate["system"]
    for sys_idx, system in enumerate(_coordinate_systems(src)):
        if sys_idx != want:
            continue
        verdict = _search_system(
            src,
            dst,
            system,
            window=max((abs(e) for e in certificate["exponents"]), default=0),
            seed=seed,
            sys_idx=sys_idx,
            budget=1,
            only_exponents=certificate["exponents"],
        )
        return verdict is not None and verdict.status == CONTAINED
    return False


def degeneration_limit(src, system_index, exponents):
    """The projective limit vector of a recorded degeneration (for checks)."""
    for sys_idx, system in enumerate(_coordinate_systems(src)):
        if sys_idx != system_index:
            continue
        svar = ParamPoly.variable("s")
        subs = {}
        for coord, u, e in zip(system.coords, system.uvars, exponents):
            subs[u] = ParamPoly.variable(u) * svar ** e
        vec = [p.subs(subs) for p in system.plucker]
        return limit_s_to_zero(vec)
    raise ValueError("no coordinate system with index %d" % system_index)


class ComponentAnalysis:
    __slots__ = ("components", "incomplete", "residual_unknowns", "unassigned", "singular_candidates")


def components(cells, verdicts):
    """Irreducible components of the stratum from pairwise closure verdicts.

    The Contained relation is closed transitively (a chain of closures is a
    closure); tops are the cells contained in no other cell's closure, and
    each component collects the cells certified inside its top's closure.
    """
    n = len(cells)
    cont = [[i == j for j in range(n)] for i in range(n)]
    unknown_pairs = []
    for (i, j), v in verdicts.items():
        if v.status == CONTAINED:
            cont[i][j] = True
        elif v.status == UNKNOWN:
            unknown_pairs.append((i, j))
    for k in range(n):
        for i in range(n):
            if cont[i][k]:
                row = cont[i]
                rowk = cont[k]
                for j in range(n):
                    if rowk[j]:
                        row[j] = True
    residual = [(i, j) for (i, j) in unknown_pairs if not cont[i][j]]
    tops = [i for i in range(n) if not any(j != i and cont[j][i] for j in range(n))]
    comps = []
    for t in tops:
        members = [j for j in range(n) if cont[t][j]]
        comps.append(
            {
                "top": t,
                "members": members,
                "pd_pattern": pd_pattern([cells[j] for j in members], cont, members),
            }
        )
    assigned = set()
    for c in comps:
        assigned.update(c["members"])
    out = ComponentAnalysis.__new__(ComponentAnalysis)
    out.components = comps
    out.residual_unknowns = residual
    out.unassigned = [i for i in range(n) if i not in assigned]
    out.incomplete = bool(residual)
    membership = {i: sum(i in c["members"] for c in comps) for i in range(n)}
    out.singular_candidates = [i for i in range(n) if membership[i] >= 2]
    return out


def pd_pattern(member_cells, cont=None, indices=None):
    """True iff the cells look like the affine stratification of P^d:
    dimensions are exactly 0..d once each and closures form a chain."""
    dims = sorted(c.dim for c in member_cells)
    if dims != list(range(len(member_cells))):
        return False
    if cont is None or indices is None:
        return True
    for pa, a in enumerate(indices):
        for pb, b in enumerate(indices):
            if member_cells[pa].dim > member_cells[pb].dim and not cont[a][b]:
                return False
    return True

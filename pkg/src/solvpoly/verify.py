"""Decision procedures for graded/filtered structure and weight discovery.

A presentation is of graded type for a weight vector when every relation
tail term has degree exactly m_i + m_j, of filtered type when every tail
term has degree at most m_i + m_j, and neither otherwise.  Weight
discovery searches for a positive integer weight vector realizing the
requested type: the equality system is reduced by rational row reduction
and the inequality system is screened by Fourier-Motzkin elimination
before a bounded ordered search picks the minimal integer solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .degrees import DegreeFunction, deg_poly, leading_homogeneous
from .errors import ZeroPolynomialError
from .poly import Monomial, Polynomial, random_polynomial
from .presentation import AlgebraPresentation


class TypeVerdict(Enum):
    GRADED = "graded"
    FILTERED_ONLY = "filtered-only"
    NEITHER = "neither"


@dataclass(frozen=True)
class TypeWitness:
    """A relation tail term whose degree misses the pair degree."""

    i: int
    j: int
    monomial: Monomial
    degree: int
    required: int


@dataclass(frozen=True)
class TypeReport:
    verdict: TypeVerdict
    witnesses: tuple = ()

    def __str__(self):
        if self.verdict is TypeVerdict.GRADED:
            return "verdict: graded"
        lines = [f"verdict: {self.verdict.value}"]
        for w in self.witnesses:
            rel = "exceeds" if w.degree > w.required else "misses"
            lines.append(
                f"  pair ({w.i}, {w.j}): term {w.monomial} has degree "
                f"{w.degree}, {rel} required {w.required}")
        return "\n".join(lines)


def _classify(pres: AlgebraPresentation, dfun: DegreeFunction) -> TypeReport:
    witnesses = []
    exceeded = False
    for (i, j) in pres.pairs():
        _, tail = pres.relation(i, j)
        required = dfun.weights[i] + dfun.weights[j]
        for mono in tail.support():
            d = dfun.of_monomial(mono)
            if d != required:
                witnesses.append(TypeWitness(i, j, mono, d, required))
                if d > required:
                    exceeded = True
    if exceeded:
        verdict = TypeVerdict.NEITHER
    elif witnesses:
        verdict = TypeVerdict.FILTERED_ONLY
    else:
        verdict = TypeVerdict.GRADED
    witnesses.sort(key=lambda w: (w.i, w.j, w.monomial))
    return TypeReport(verdict=verdict, witnesses=tuple(witnesses))


def check_graded_type(pres: AlgebraPresentation,
                      dfun: DegreeFunction) -> TypeReport:
    """Graded iff every tail term sits exactly at the pair degree.

    Falls through to the filtered classification otherwise, so the report
    always carries the strongest verdict.
    """
    return _classify(pres, dfun)


def check_filtered_type(pres: AlgebraPresentation,
                        dfun: DegreeFunction) -> TypeReport:
    """Filtered (or better) iff no tail term exceeds the pair degree."""
    return _classify(pres, dfun)


# ---------------------------------------------------------------------------
# weight discovery
# ---------------------------------------------------------------------------

def _constraint_rows(pres: AlgebraPresentation) -> list:
    """One vector per tail term: exponents minus the pair's unit vectors.

    Row r and weight vector m satisfy r . m == 0 exactly when the term
    degree equals m_i + m_j, and r . m <= 0 when it stays below.
    """
    rows = []
    n = pres.n
    for (i, j) in pres.pairs():
        _, tail = pres.relation(i, j)
        for mono in tail.support():
            row = list(mono)
            row[i] -= 1
            row[j] -= 1
            rows.append(tuple(row))
    seen = set()
    unique = []
    for r in rows:
        if r not in seen and any(r):
            seen.add(r)
            unique.append(r)
    return unique


def _rational_rref(rows, n):
    """Reduced row echelon form over the rationals; returns (rows, pivots)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((k for k in range(r, len(mat)) if mat[k][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col] != 0:
                factor = mat[k][col]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _fourier_motzkin_feasible(ineqs, n) -> bool:
    """Rational feasibility of {c . m <= k} by variable elimination."""
    rows = [([Fraction(x) for x in c], Fraction(k)) for c, k in ineqs]
    for var in range(n):
        pos, neg, rest = [], [], []
        for c, k in rows:
            if c[var] > 0:
                pos.append((c, k))
            elif c[var] < 0:
                neg.append((c, k))
            else:
                rest.append((c, k))
        combined = {}
        for cp, kp in pos:
            for cn, kn in neg:
                a = -cn[var]
                b = cp[var]
                c = tuple(a * x + b * y for x, y in zip(cp, cn))
                k = a * kp + b * kn
                combined[c] = min(combined.get(c, k), k)
        rows = rest + [(list(c), k) for c, k in combined.items()]
    return all(k >= 0 for _, k in rows)


def _graded_candidates(rows, n, bound):
    """Positive integer points of the equality system's solution space.

    Row reduction splits coordinates into pivots and frees; free
    coordinates absent from every reduced row are fixed at 1 (they are
    unconstrained, and 1 is minimal), the coupled ones are enumerated.
    """
    rref, pivots = _rational_rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    coupled = [c for c in free
               if any(row[c] != 0 for row in rref)]
    for assign in product(range(1, bound + 1), repeat=len(coupled)):
        values = {c: Fraction(v) for c, v in zip(coupled, assign)}
        for c in free:
            values.setdefault(c, Fraction(1))
        ok = True
        for row, pcol in zip(rref, pivots):
            v = -sum(row[c] * values[c] for c in free)
            if v.denominator != 1 or not (1 <= v <= bound):
                ok = False
                break
            values[pcol] = v
        if ok:
            yield tuple(int(values[c]) for c in range(n))


def _filtered_search(rows, n, bound):
    """Smallest (sum, lex) integer point with every row . m <= 0.

    Depth-first over coordinates in order, total sum ascending, pruning a
    prefix when interval arithmetic already forces some row positive.
    """
    def dfs(prefix, remaining_sum):
        depth = len(prefix)
        rest = n - depth
        if rest == 0:
            return tuple(prefix) if all(
                sum(c * m for c, m in zip(row, prefix)) <= 0 for row in rows) else None
        for row in rows:
            low = sum(c * m for c, m in zip(row, prefix))
            low += sum(c if c >= 0 else c * bound for c in row[depth:])
            if low > 0:
                return None
        lo = max(1, remaining_sum - (rest - 1) * bound)
        hi = min(bound, remaining_sum - (rest - 1))
        for v in range(lo, hi + 1):
            hit = dfs(prefix + [v], remaining_sum - v)
            if hit is not None:
                return hit
        return None

    for total in range(n, n * bound + 1):
        hit = dfs([], total)
        if hit is not None:
            return hit
    return None


def find_weights(pres: AlgebraPresentation, mode: str = "graded",
                 bound: int = 16) -> DegreeFunction | None:
    """Search for a positive weight vector of the requested type.

    Returns the feasible vector minimizing total weight, ties broken
    lexicographically, with every entry at most ``bound``; ``None`` when
    no such vector exists.
    """
    if mode not in ("graded", "filtered"):
        raise ValueError(f"mode must be 'graded' or 'filtered', got {mode!r}")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    n = pres.n
    rows = _constraint_rows(pres)
    if not rows:
        return DegreeFunction((1,) * n)

    if mode == "graded":
        best = None
        for cand in _graded_candidates(rows, n, bound):
            key = (sum(cand), cand)
            if best is None or key < best:
                best = key
        return DegreeFunction(best[1]) if best else None

    ineqs = [(row, 0) for row in rows]
    ineqs += [(tuple(-1 if c == i else 0 for c in range(n)), -1)
              for i in range(n)]
    ineqs += [(tuple(1 if c == i else 0 for c in range(n)), bound)
              for i in range(n)]
    if not _fourier_motzkin_feasible(ineqs, n):
        return None
    hit = _filtered_search(rows, n, bound)
    return DegreeFunction(hit) if hit is not None else None


# ---------------------------------------------------------------------------
# degree laws
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeLawReport:
    ok: bool
    law: str | None = None       # "additivity", "middle-factor", "monotonicity"
    witness: tuple | None = None
    detail: str = ""

    def __str__(self):
        if self.ok:
            return "PASS: degree laws hold on the box"
        return f"FAIL [{self.law}] at {self.witness}: {self.detail}"


def verify_degree_laws(pres: AlgebraPresentation, ordering, dfun: DegreeFunction,
                       box: int = 2, *, samples: int = 0,
                       rng=None) -> DegreeLawReport:
    """Exhaustive degree-law check over the exponent box, plus sampling.

    Verifies, for ordered monomials with all exponents <= box:

    - additivity: deg(a^u * a^v) == deg(a^u) + deg(a^v);
    - middle-factor: a nonconstant triple product strictly dominates the
      degree of its middle factor unless it IS that factor;
    - monotonicity: raising the middle factor's degree raises the triple
      product's degree, products being nonconstant.

    With ``samples`` > 0 additionally checks additivity on random
    polynomial pairs whose leading-part product is nonzero.
    """
    mult = pres.multiplier(ordering)
    field = pres.field
    n = pres.n
    monos = [tuple(m) for m in product(range(box + 1), repeat=n)]
    mdeg = {m: dfun.of_monomial(m) for m in monos}
    one_poly = Polynomial.one(field, n)

    pair_prod = {}
    for a in monos:
        for b in monos:
            p = mult.mul_monomials(a, b)
            pair_prod[(a, b)] = p
            if p.is_zero():
                return DegreeLawReport(
                    ok=False, law="additivity", witness=(a, b),
                    detail="monomial product vanished")
            if deg_poly(dfun, p) != mdeg[a] + mdeg[b]:
                return DegreeLawReport(
                    ok=False, law="additivity", witness=(a, b),
                    detail=f"deg {deg_poly(dfun, p)} != {mdeg[a]} + {mdeg[b]}")

    # triple products (u, v, w), left bracketing; associativity is checked
    # elsewhere so the bracketing does not matter here
    tdeg = {}
    tconst = {}
    for u in monos:
        for v in monos:
            base = pair_prod[(u, v)]
            for w in monos:
                t = mult.mul(base, Polynomial.monomial(field, w))
                if t.is_zero():
                    return DegreeLawReport(
                        ok=False, law="middle-factor", witness=(u, v, w),
                        detail="triple product vanished")
                key = (u, v, w)
                tdeg[key] = deg_poly(dfun, t)
                tconst[key] = t == one_poly
                lh = leading_homogeneous(dfun, t)
                if lh == one_poly or lh == Polynomial.monomial(field, v):
                    continue
                if mdeg[v] >= tdeg[key]:
                    return DegreeLawReport(
                        ok=False, law="middle-factor", witness=(u, v, w),
                        detail=f"middle degree {mdeg[v]} not below "
                               f"{tdeg[key]}")

    for u in monos:
        for w in monos:
            for a in monos:
                da = mdeg[a]
                dta = tdeg[(u, a, w)]
                for b in monos:
                    if da < mdeg[b] and not tconst[(u, b, w)]:
                        if dta >= tdeg[(u, b, w)]:
                            return DegreeLawReport(
                                ok=False, law="monotonicity",
                                witness=(u, a, b, w),
                                detail=f"{dta} not below {tdeg[(u, b, w)]}")

    if samples and rng is not None:
        for _ in range(samples):
            f = random_polynomial(rng, field, n, max_exp=box + 1)
            g = random_polynomial(rng, field, n, max_exp=box + 1)
            lead = mult.mul(leading_homogeneous(dfun, f),
                            leading_homogeneous(dfun, g))
            if lead.is_zero():
                continue
            try:
                total = deg_poly(dfun, mult.mul(f, g))
            except ZeroPolynomialError:
                return DegreeLawReport(
                    ok=False, law="additivity", witness=(f, g),
                    detail="product vanished with nonzero leading parts")
            if total != deg_poly(dfun, f) + deg_poly(dfun, g):
                return DegreeLawReport(
                    ok=False, law="additivity", witness=(f, g),
                    detail="sampled polynomial pair broke additivity")

    return DegreeLawReport(ok=True)

"""Pure-Python rewriting engine: the fallback twin of the compiled kernel.

Keep this module behaviorally identical to ``_kernel_cy.pyx``; the two are
selected at import time by :mod:`solvpoly.kernel` and benchmarked against
each other in ``benchmarks/``.

Normalization runs in two layers.  The bottom layer rewrites raw words:
an adjacent out-of-order generator pair a_j a_i (j > i) becomes
lam_ji a_i a_j plus the spilled relation tail, the pair whose monomial
a_i a_j is largest in the active ordering going first (leftmost on ties).
The top layer normalizes a^alpha * a^beta by splitting off the highest
generator block of alpha and the lowest of beta, rewriting that two-block
word with the bottom layer, and recombining the spilled terms through the
memoized product cache.  Recombination only reorders legitimate rewrite
steps, so results agree with one-pass word rewriting exactly on every
presentation with unique normal forms, which is what the confluence check
certifies.  A step budget caps every top-level normalization so malformed
presentations fail loudly instead of looping.
"""

from __future__ import annotations

from .errors import BudgetExceededError

BACKEND_NAME = "python"


class Engine:
    """Product normalizer over a fixed relation table.

    Parameters mirror the compiled twin:

    - ``n``: generator count.
    - ``lam``: flat list of length n*n; ``lam[j*n+i]`` is the swap scalar
      for j > i.
    - ``tails``: flat list; ``tails[j*n+i]`` is a tuple of
      ``(letters, coeff)`` pairs, where ``letters`` is the spilled
      monomial expanded into a tuple of generator indices.
    - ``rank``: flat list of ints ranking each pair monomial a_i a_j in
      the active ordering (larger rank = larger monomial).
    - ``cadd``/``cmul``: field addition and multiplication on raw scalars.
    - ``one``: the field's multiplicative identity.
    - ``budget``: rewrite-step cap per top-level normalization.

    Results are cached per exponent-tuple pair; cached dicts are shared
    and must not be mutated by callers.
    """

    def __init__(self, n, lam, tails, rank, cadd, cmul, one, budget):
        self.n = n
        self.lam = list(lam)
        self.tails = list(tails)
        self.rank = list(rank)
        self.cadd = cadd
        self.cmul = cmul
        self.one = one
        self.budget = budget
        self.cache = {}
        self.pair_cache = {}
        self.steps = 0

    def product(self, alpha, beta):
        """Normal form of a^alpha * a^beta as a dict {exponents: coeff}."""
        hit = self.cache.get((alpha, beta))
        if hit is None:
            self.steps = 0
            hit = self._mul(alpha, beta)
        return hit

    def _mul(self, alpha, beta):
        key = (alpha, beta)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(self.steps)

        n = self.n
        j = -1
        for g in range(n - 1, -1, -1):
            if alpha[g]:
                j = g
                break
        i = -1
        for g in range(n):
            if beta[g]:
                i = g
                break

        if j < 0 or i < 0 or j <= i:
            # one factor is 1, or the concatenated word is already sorted
            out = {tuple(a + b for a, b in zip(alpha, beta)): self.one}
            self.cache[key] = out
            return out

        s = alpha[j]
        t = beta[i]
        pre = list(alpha)
        pre[j] = 0
        pre = tuple(pre)
        post = list(beta)
        post[i] = 0
        post = tuple(post)

        cadd = self.cadd
        cmul = self.cmul
        out = {}
        for m, c in self._pairpow(j, s, i, t).items():
            for m2, c2 in self._mul(m, post).items():
                c12 = cmul(c, c2)
                for m3, c3 in self._mul(pre, m2).items():
                    v = cmul(c12, c3)
                    cur = out.get(m3)
                    if cur is None:
                        out[m3] = v
                    else:
                        acc = cadd(cur, v)
                        if acc:
                            out[m3] = acc
                        else:
                            del out[m3]
        self.cache[key] = out
        return out

    def _pairpow(self, j, s, i, t):
        """Raw normal form of the two-block word a_j^s a_i^t (j > i)."""
        key = (j, s, i, t)
        hit = self.pair_cache.get(key)
        if hit is None:
            hit = self._normalize_word([j] * s + [i] * t)
            self.pair_cache[key] = hit
        return hit

    def _normalize_word(self, word):
        """Worklist rewriting of one word into PBW normal form."""
        n = self.n
        lam = self.lam
        tails = self.tails
        rank = self.rank
        cadd = self.cadd
        cmul = self.cmul
        budget = self.budget

        out = {}
        stack = [(self.one, word)]
        while stack:
            coeff, w = stack.pop()
            while True:
                best = -1
                best_rank = -1
                for k in range(len(w) - 1):
                    a = w[k]
                    b = w[k + 1]
                    if a > b:
                        r = rank[a * n + b]
                        if r > best_rank:
                            best_rank = r
                            best = k
                if best < 0:
                    break
                self.steps += 1
                if self.steps > budget:
                    raise BudgetExceededError(self.steps)
                j = w[best]
                i = w[best + 1]
                tail = tails[j * n + i]
                if tail:
                    u = w[:best]
                    v = w[best + 2:]
                    for letters, c in tail:
                        stack.append((cmul(coeff, c), u + list(letters) + v))
                w[best] = i
                w[best + 1] = j
                coeff = cmul(coeff, lam[j * n + i])
            exps = [0] * n
            for g in w:
                exps[g] += 1
            mono = tuple(exps)
            cur = out.get(mono)
            if cur is None:
                out[mono] = coeff
            else:
                acc = cadd(cur, coeff)
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return out

    def associativity_counterexample(self, monos):
        """First (a, b, c) with (a*b)*c != a*(b*c), or None.

        Bulk sweep used by the exhaustive checks and the benchmark; kept
        inside the engine so the compiled twin can run it at full speed.
        """
        cadd = self.cadd
        cmul = self.cmul
        product = self.product
        for a in monos:
            for b in monos:
                ab = product(a, b)
                for c in monos:
                    left = {}
                    for m, x in ab.items():
                        for mm, y in product(m, c).items():
                            v = cmul(x, y)
                            cur = left.get(mm)
                            if cur is None:
                                left[mm] = v
                            else:
                                s = cadd(cur, v)
                                if s:
                                    left[mm] = s
                                else:
                                    del left[mm]
                    right = {}
                    for m, x in product(b, c).items():
                        for mm, y in product(a, m).items():
                            v = cmul(x, y)
                            cur = right.get(mm)
                            if cur is None:
                                right[mm] = v
                            else:
                                s = cadd(cur, v)
                                if s:
                                    right[mm] = s
                                else:
                                    del right[mm]
                    if left != right:
                        return (a, b, c)
        return None

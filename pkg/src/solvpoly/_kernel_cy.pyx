# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled rewriting engine: the hot twin of ``_kernel_py``.

Same two-layer normalization and same constructor signature as the
pure-Python engine; only the loop machinery is typed.  Coefficients stay
Python objects so the engine is generic over the exact ground field.
"""

import array

from cpython cimport array

from .errors import BudgetExceededError

BACKEND_NAME = "cython"


cdef class Engine:
    cdef public int n
    cdef list lam
    cdef list tails
    cdef array.array _rank
    cdef int[:] rank
    cdef object cadd
    cdef object cmul
    cdef object one
    cdef public long budget
    cdef public dict cache
    cdef public dict pair_cache
    cdef public long steps

    def __init__(self, n, lam, tails, rank, cadd, cmul, one, budget):
        self.n = n
        self.lam = list(lam)
        self.tails = list(tails)
        self._rank = array.array("i", rank)
        self.rank = self._rank
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

    cdef dict _mul(self, tuple alpha, tuple beta):
        cdef tuple key = (alpha, beta)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(self.steps)

        cdef int n = self.n
        cdef int g, i, j, s, t
        cdef dict out
        cdef list pre_l, post_l

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
        pre_l = list(alpha)
        pre_l[j] = 0
        cdef tuple pre = tuple(pre_l)
        post_l = list(beta)
        post_l[i] = 0
        cdef tuple post = tuple(post_l)

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

    cdef dict _pairpow(self, int j, int s, int i, int t):
        """Raw normal form of the two-block word a_j^s a_i^t (j > i)."""
        cdef tuple key = (j, s, i, t)
        hit = self.pair_cache.get(key)
        if hit is None:
            hit = self._normalize_word([j] * s + [i] * t)
            self.pair_cache[key] = hit
        return hit

    cdef dict _normalize_word(self, list word):
        """Worklist rewriting of one word into PBW normal form."""
        cdef int n = self.n
        cdef int k, a, b, g, best, best_rank, r, i, j, wl
        cdef long budget = self.budget
        cdef list w, u, v, exps
        cdef dict out = {}
        cdef list stack
        cdef tuple tail, letters

        stack = [(self.one, word)]
        while stack:
            coeff, w = stack.pop()
            while True:
                best = -1
                best_rank = -1
                wl = len(w)
                for k in range(wl - 1):
                    a = w[k]
                    b = w[k + 1]
                    if a > b:
                        r = self.rank[a * n + b]
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
                tail = self.tails[j * n + i]
                if tail:
                    u = w[:best]
                    v = w[best + 2:]
                    for letters, c in tail:
                        stack.append((self.cmul(coeff, c), u + list(letters) + v))
                w[best] = i
                w[best + 1] = j
                coeff = self.cmul(coeff, self.lam[j * n + i])
            exps = [0] * n
            for g in w:
                exps[g] += 1
            mono = tuple(exps)
            cur = out.get(mono)
            if cur is None:
                out[mono] = coeff
            else:
                acc = self.cadd(cur, coeff)
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return out

    def associativity_counterexample(self, monos):
        """First (a, b, c) with (a*b)*c != a*(b*c), or None."""
        cdef dict ab, bc, left, right
        cdef list mono_list = list(monos)
        cadd = self.cadd
        cmul = self.cmul
        for a in mono_list:
            for b in mono_list:
                ab = self.product(a, b)
                for c in mono_list:
                    left = {}
                    for m, x in ab.items():
                        for mm, y in self.product(m, c).items():
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
                    bc = self.product(b, c)
                    for m, x in bc.items():
                        for mm, y in self.product(a, m).items():
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

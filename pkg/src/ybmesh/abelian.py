"""Finite abelian groups in invariant-factor form.

Elements are coordinate tuples ``(a_1, ..., a_r)`` with ``0 <= a_i < d_i``
and addition is componentwise.  Elements are also addressed by a mixed-radix
index (first coordinate most significant), which is what the mesh sum uses
to lay out the carrier.
"""

from collections import Counter
from functools import lru_cache
from itertools import product
from math import gcd, prod

from sympy import factorint
from sympy.utilities.iterables import partitions

from .errors import InvalidInput


class FiniteAbelianGroup:
    __slots__ = ("factors", "order", "_elements", "_index")

    def __init__(self, factors=()):
        factors = tuple(int(d) for d in factors)
        for d in factors:
            if d < 2:
                raise InvalidInput(f"invariant factor {d} must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise InvalidInput(f"invariant factors must divide each other: {factors}")
        self.factors = factors
        self.order = prod(factors)
        self._elements = None
        self._index = None

    @classmethod
    def cyclic(cls, n):
        return cls(() if n == 1 else (n,))

    @property
    def rank(self):
        return len(self.factors)

    @property
    def zero(self):
        return (0,) * len(self.factors)

    def elements(self):
        """All elements in lexicographic (= index) order."""
        if self._elements is None:
            self._elements = [tuple(e) for e in product(*(range(d) for d in self.factors))]
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self._elements

    def index(self, element):
        self.elements()
        return self._index[tuple(element)]

    def element(self, index):
        return self.elements()[index]

    def contains(self, element):
        element = tuple(element)
        return len(element) == len(self.factors) and all(
            0 <= a < d for a, d in zip(element, self.factors)
        )

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a):
        return tuple(-x % d for x, d in zip(a, self.factors))

    def sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, k, a):
        return tuple(k * x % d for x, d in zip(a, self.factors))

    def element_order(self, a):
        result = 1
        for x, d in zip(a, self.factors):
            o = d // gcd(x, d)
            result = result * o // gcd(result, o)
        return result

    def generated_subgroup(self, gens):
        """The subgroup generated by ``gens`` as a frozenset of elements."""
        seen = {self.zero}
        frontier = [self.zero]
        gens = [tuple(g) for g in gens]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.add(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def generates(self, gens):
        return len(self.generated_subgroup(gens)) == self.order

    def automorphisms(self):
        """All automorphisms, each as a tuple mapping element index -> index."""
        return _automorphisms(self.factors)

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.order, self.factors)

    def __repr__(self):
        if not self.factors:
            return "Z_1"
        return " x ".join(f"Z_{d}" for d in self.factors)


@lru_cache(maxsize=None)
def _automorphisms(factors):
    group = FiniteAbelianGroup(factors)
    elements = group.elements()
    if not factors:
        return ((0,),)
    # candidate images of the i-th standard generator: order divides d_i
    candidates = [[e for e in elements if d % group.element_order(e) == 0] for d in factors]
    auts = []
    for images in product(*candidates):
        mapping = []
        for e in elements:
            acc = group.zero
            for coeff, img in zip(e, images):
                acc = group.add(acc, group.scale(coeff, img))
            mapping.append(group.index(acc))
        if len(set(mapping)) == len(elements):
            auts.append(tuple(mapping))
    return tuple(auts)


def abelian_groups_of_order(n):
    """Every abelian group of order ``n`` once: cyclic first, then by rank and factors."""
    if n < 1:
        raise InvalidInput("order must be positive")
    if n == 1:
        return [FiniteAbelianGroup(())]
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        options = []
        for part in partitions(e):
            exps = sorted(Counter(part).elements(), reverse=True)
            options.append([p**k for k in exps])
        per_prime.append(options)
    groups = []
    for choice in product(*per_prime):
        rank = max(len(c) for c in choice)
        factors = [1] * rank
        for powers in choice:
            # largest prime powers go into the largest invariant factors
            for i, q in enumerate(powers):
                factors[rank - 1 - i] *= q
        groups.append(FiniteAbelianGroup(factors))
    groups.sort(key=lambda g: (len(g.factors), g.factors))
    return groups


def abelian_groups_up_to(n):
    return [g for k in range(1, n + 1) for g in abelian_groups_of_order(k)]


def invariant_factors_from_orders(orders):
    """Invariant factors of a finite abelian group from the multiset of element orders.

    For each prime ``p`` the number of elements killed by ``p^k`` equals
    ``p^(sum_i min(e_i, k))``; differencing recovers the exponents ``e_i``.
    """
    orders = list(orders)
    size = len(orders)
    if size == 1:
        return []
    exponents = {}
    for p, top in factorint(size).items():
        # f(k) = log_p #{g : g^(p^k) = 1}
        f = [0]
        k = 0
        while f[-1] < top:
            k += 1
            count = sum(1 for o in orders if (p**k) % o == 0)
            f.append(_exact_log(count, p))
        # number of cyclic p-factors of exponent >= k is f(k) - f(k-1)
        at_least = [f[i] - f[i - 1] for i in range(1, len(f))]
        exps = []
        for k in range(1, len(at_least) + 1):
            nxt = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (at_least[k - 1] - nxt))
        exponents[p] = sorted(exps, reverse=True)
    rank = max(len(v) for v in exponents.values())
    factors = [1] * rank
    for p, exps in exponents.items():
        for i, e in enumerate(exps):
            factors[rank - 1 - i] *= p**e
    return factors


def _exact_log(count, p):
    k = 0
    while count > 1:
        if count % p:
            raise InvalidInput("element orders are not those of an abelian group")
        count //= p
        k += 1
    return k

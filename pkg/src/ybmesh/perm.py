"""Permutations of {0, ..., n-1} stored as image tuples.

``p[i]`` is the image of ``i``.  Products follow the usual functional
convention: ``(p * q)(i) == p[q[i]]``, i.e. ``q`` is applied first, which is
how translations compose (``L_x L_y (z) = x o (y o z)``).
"""

from .errors import InvalidInput


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise InvalidInput(f"not a permutation of 0..{n - 1}: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n):
        return tuple.__new__(cls, range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        """Build from cycle notation, e.g. ``from_cycles(4, [(0, 2), (1, 3)])``."""
        images = list(range(n))
        for cycle in cycles:
            cycle = list(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self)

    def __call__(self, i):
        return self[i]

    def __mul__(self, other):
        if len(self) != len(other):
            raise InvalidInput("degree mismatch in product")
        return tuple.__new__(Permutation, [self[i] for i in other])

    def inverse(self):
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v] = i
        return tuple.__new__(Permutation, inv)

    def is_identity(self):
        return all(i == v for i, v in enumerate(self))

    def cycles(self):
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self[i]
            out.append(tuple(cycle))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self):
        from math import lcm

        result = 1
        for c in self.cycles():
            result = lcm(result, len(c))
        return result

    def cycle_string(self):
        parts = ["(" + "".join(str(i) for i in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "id"

    def __repr__(self):
        return f"Permutation({list(self)})"


def compose(p, q):
    return p * q


def inverse(p):
    return p.inverse()


def cycle_type(images):
    """Cycle type of a plain image sequence (no validation)."""
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)

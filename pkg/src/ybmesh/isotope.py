"""Single-permutation isotopes ``x * y = x o pi(y)`` and the conditions around them."""

import enum
from dataclasses import dataclass

from .algebra import LeftQuasigroup, Property, check_property, right_cyclic_witness, t_map
from .birack import InvolutiveBirack, _from_cycle_set_unchecked
from .errors import (
    DegreeMismatch,
    InvalidInput,
    IsotopeNotRightCyclic,
    NotAutomorphism,
    NotNonDegenerate,
    NotTwoPermutational,
)
from .perm import Permutation


def _as_perm(pi, n):
    pi = pi if isinstance(pi, Permutation) else Permutation(pi)
    if len(pi) != n:
        raise DegreeMismatch(n, len(pi))
    return pi


def lq_isotope(lq, pi):
    """Permute the columns of the table: ``t[x][y] = x o pi(y)``."""
    pi = _as_perm(pi, lq.n)
    return LeftQuasigroup([[row[p] for p in pi] for row in lq.table])


def check_sigma(lq, rho):
    """``rho(y) o rho(x o z) = rho(x) o rho(y o z)`` for all x, y, z."""
    rho = _as_perm(rho, lq.n)
    t, n = lq.table, lq.n
    for x in range(n):
        rx, tx = t[rho[x]], t[x]
        for y in range(n):
            ry, ty = t[rho[y]], t[y]
            for z in range(n):
                if ry[rho[tx[z]]] != rx[rho[ty[z]]]:
                    return False
    return True


class IsoCondition(enum.Enum):
    ISOPER1 = "isoper1"  # L_{L_x pi(y)} = L_y
    ISOPER2 = "isoper2"  # L_x pi L_y = L_y pi L_x
    ISOPER3 = "isoper3"  # L_{L_x pi(z)} = L_{L_y pi(z)}
    ISOPER4 = "isoper4"  # L_{L_x pi(y)} pi L_x = L_x pi L_y


def check_iso_condition(lq, pi, which):
    pi = _as_perm(pi, lq.n)
    t, n = lq.table, lq.n
    if which is IsoCondition.ISOPER1:
        return all(t[t[x][pi[y]]] == t[y] for x in range(n) for y in range(n))
    if which is IsoCondition.ISOPER2:
        return all(
            t[x][pi[t[y][z]]] == t[y][pi[t[x][z]]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )
    if which is IsoCondition.ISOPER3:
        return all(
            t[t[x][pi[z]]] == t[t[0][pi[z]]] for x in range(n) for z in range(n)
        )
    if which is IsoCondition.ISOPER4:
        return all(
            t[t[x][pi[y]]][pi[t[x][z]]] == t[x][pi[t[y][z]]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )
    raise InvalidInput(f"unknown isotope condition {which!r}")


@dataclass(frozen=True)
class IsotopeWitness:
    base: InvolutiveBirack
    pi: Permutation
    result: InvolutiveBirack


def birack_isotope(b, pi):
    """The birack whose left quasigroup is the ``pi``-isotope of ``b.circ``."""
    pi = _as_perm(pi, b.n)
    lq = lq_isotope(b.circ, pi)
    witness = right_cyclic_witness(lq)
    if witness is not None:
        raise IsotopeNotRightCyclic(witness)
    if not t_map(lq)[1]:
        raise NotNonDegenerate()
    return IsotopeWitness(b, pi, _from_cycle_set_unchecked(lq))


def to_distributive(b, e):
    """The ``L_e^{-1}``-isotope of a 2-permutational birack; it is distributive."""
    if not 0 <= e < b.n:
        raise InvalidInput(f"element {e} out of range 0..{b.n - 1}")
    if not check_property(b.circ, Property.M_PERMUTATIONAL, 2):
        raise NotTwoPermutational()
    return birack_isotope(b, b.circ.translation(e).inverse())


def is_automorphism(lq, h):
    t, n = lq.table, lq.n
    return all(h[t[x][y]] == t[h[x]][h[y]] for x in range(n) for y in range(n))


def isotope_isomorphism_by_automorphism(b, h, alpha, beta):
    """Whether ``alpha = h^-1 beta h``; then ``h`` maps the alpha-isotope onto the beta-isotope."""
    h = _as_perm(h, b.n)
    alpha = _as_perm(alpha, b.n)
    beta = _as_perm(beta, b.n)
    if not is_automorphism(b.circ, h):
        raise NotAutomorphism()
    return alpha == h.inverse() * beta * h

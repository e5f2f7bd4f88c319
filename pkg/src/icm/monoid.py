"""The monoid of integrally closed monomial ideals under I*J = closure(IJ).

Divisor searches exploit two facts: any star factor J of I satisfies
J >= I (as ideals) with minimal generators inside the generator box of I,
and ord is additive, so factor searches are finite.  All searches carry an
explicit budget; running out raises BudgetExceededError rather than
returning a wrong negative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, NotStarMultipleError
from .ideals import (MonomialIdeal, box_points, colon, contains, dominates,
                     generator_box, minimalize, ord_valuation, product)
from .newton import integral_closure, is_integrally_closed

DEFAULT_BUDGET = 500_000


class SearchBudget:
    """Counts candidate ideals examined across one search."""

    def __init__(self, limit):
        self.limit = limit
        self.examined = 0

    def spend(self, n=1):
        self.examined += n
        if self.limit is not None and self.examined > self.limit:
            raise BudgetExceededError(
                f"search budget of {self.limit} candidates exceeded",
                examined=self.examined)


def _as_budget(budget):
    return budget if isinstance(budget, SearchBudget) else SearchBudget(budget)


def star(I, J):
    """The monoid operation: integral closure of the product."""
    return integral_closure(product(I, J))


def star_power(I, n):
    result = MonomialIdeal(I.dim, ((0,) * I.dim,))
    for _ in range(n):
        result = star(result, I)
    return result


def quotient_cancel(S, K):
    """Recover H from S = star(H, K), constructively via the colon ideal."""
    H = colon(S, K)
    if star(H, K) != S:
        raise NotStarMultipleError("ideal is not a star multiple of the divisor")
    return H


def closed_supersets(I, budget=None):
    """All integrally closed J >= I with minimal generators in box(I).

    Such J correspond to up-sets of the box containing the exponent set of
    I; the excluded region is a down-set of the box complement of I, which
    is enumerated by its antichain of maximal elements.
    """
    budget = _as_budget(budget)
    box = generator_box(I)
    pts = list(box_points(box))
    complement = sorted((p for p in pts if not contains(I, p)),
                        key=lambda p: (sum(p), p))
    all_pts = set(pts)
    dim = I.dim

    def incomparable(a, b):
        return not dominates(a, b) and not dominates(b, a)

    def emit(excluded_antichain):
        down = {p for p in complement
                if any(dominates(a, p) for a in excluded_antichain)}
        up = all_pts - down
        # minimal elements of an up-set: no immediate predecessor inside
        mins = []
        for u in up:
            for k in range(dim):
                if u[k] > 0:
                    pred = u[:k] + (u[k] - 1,) + u[k + 1:]
                    if pred in up:
                        break
            else:
                mins.append(u)
        return MonomialIdeal(dim, tuple(sorted(mins)))

    def rec(start, chosen):
        budget.spend()
        J = emit(chosen)
        if is_integrally_closed(J):
            yield J
        for i in range(start, len(complement)):
            p = complement[i]
            if all(incomparable(p, c) for c in chosen):
                yield from rec(i + 1, chosen + [p])

    yield from rec(0, [])


def _divisor_pairs(I, budget, ord_lo, ord_hi):
    """(J, K) with star(J, K) == I and ord_lo <= ord(J) <= ord_hi."""
    for J in closed_supersets(I, budget):
        if not ord_lo <= ord_valuation(J) <= ord_hi:
            continue
        K = colon(I, J)
        if star(J, K) == I:
            yield J, K


def divides(I, J, budget=DEFAULT_BUDGET):
    """The unique K with star(I, K) == J, or None.

    The colon candidate is always correct when I does divide J (closure(HK)
    colon K recovers closure(H)); the exhaustive fallback is defensive only.
    """
    K = colon(J, I)
    if star(I, K) == J:
        return K
    budget = _as_budget(budget)
    for cand in closed_supersets(J, budget):
        if star(I, cand) == J:
            return cand
    return None


_irreducible_cache = {}


def is_star_irreducible(I, budget=DEFAULT_BUDGET):
    """No pair of non-unit closed ideals star-multiplies to I.

    Exhaustive over the finite divisor search space; ord(I) == 1 is an
    immediate yes since ord is additive and only the unit has ord 0.
    """
    if I.is_unit:
        raise ValueError("the unit ideal is neither an atom nor composite")
    o = ord_valuation(I)
    if o == 1:
        return True
    if I in _irreducible_cache:
        return _irreducible_cache[I]
    budget = _as_budget(budget)
    result = True
    for J, K in _divisor_pairs(I, budget, 1, o - 1):
        result = False
        break
    _irreducible_cache[I] = result
    return result


_atom_divisor_cache = {}


def _atom_divisors(I, budget):
    """All (atom A, cofactor K) with star(A, K) == I, A possibly I itself."""
    if I in _atom_divisor_cache:
        return _atom_divisor_cache[I]
    o = ord_valuation(I)
    pairs = [(J, K) for J, K in _divisor_pairs(I, budget, 1, o)
             if is_star_irreducible(J, budget)]
    _atom_divisor_cache[I] = pairs
    return pairs


@dataclass(frozen=True)
class Factorization:
    base: MonomialIdeal
    atoms: tuple  # canonically sorted by generator list

    def __len__(self):
        return len(self.atoms)


def factor_atoms(I, budget=DEFAULT_BUDGET):
    """One factorization of I into star-irreducible ideals.

    Deterministic: each split takes the valid factor with the
    lexicographically smallest sorted generator list.
    """
    if I.is_unit:
        raise ValueError("the unit ideal has no atomic factorization")
    budget = _as_budget(budget)

    def rec(current):
        o = ord_valuation(current)
        splits = sorted(_divisor_pairs(current, budget, 1, o - 1),
                        key=lambda jk: jk[0].gens) if o > 1 else []
        if not splits:
            return [current]  # an atom
        J, K = splits[0]
        return rec(J) + rec(K)

    atoms = sorted(rec(I), key=lambda a: a.gens)
    return Factorization(base=I, atoms=tuple(atoms))


def all_factorizations(I, budget=DEFAULT_BUDGET):
    """Every multiset of atoms whose star product is I, up to reordering."""
    if I.is_unit:
        raise ValueError("the unit ideal has no atomic factorization")
    budget = _as_budget(budget)
    results = set()

    def rec(current, chosen, min_key):
        if current.is_unit:
            results.add(tuple(chosen))
            return
        for A, K in _atom_divisors(current, budget):
            if A.gens >= min_key:
                rec(K, chosen + [A], A.gens)

    rec(I, [], ((),))
    return results

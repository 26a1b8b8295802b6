"""Exact word-problem oracle via Garside left normal form.

Every braid has a unique expression Delta^p A_1 ... A_m where Delta is the
half twist, each factor A_t is a permutation braid (a positive braid in
which any two strands cross at most once, so factors are stored as plain
permutations), no factor is trivial or Delta, and adjacent factors are
left-weighted: the starting set of A_{t+1} is contained in the finishing
set of A_t. Two words are equal in the braid group exactly when these
normal forms coincide, which gives a decision procedure that is completely
independent of the homological route.

Permutation-braid bookkeeping, in the left-to-right composition convention
of words.Permutation:

* starting set  S(x) = {i : x = sigma_i * (positive)}  = descents of x
* finishing set F(x) = {i : x = (positive) * sigma_i}  = descents of x^-1
* sigma_i^-1 = Delta^-1 * lift(Delta * s_i^-1), pushing all Delta^-1
  powers to the front conjugates later factors by Delta, which on
  permutations is conjugation by the order reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, Permutation

__all__ = ["NormalForm", "left_normal_form", "words_equal", "is_left_weighted"]


@dataclass(frozen=True)
class NormalForm:
    """Left normal form Delta^infimum * factors, on a fixed strand count."""

    strands: int
    infimum: int
    factors: tuple[Permutation, ...]

    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.infimum == 0 and not self.factors

    def permutation(self) -> Permutation:
        """Underlying permutation, a consistency hook for tests."""
        acc = Permutation.longest(self.strands) if self.infimum % 2 else Permutation.identity(self.strands)
        for f in self.factors:
            acc = acc * f
        return acc


def _append_transposition(p: Permutation, i: int) -> Permutation:
    # p * s_i in apply-then order swaps the values i and i+1
    images = list(p.images)
    for pos, v in enumerate(images):
        if v == i:
            images[pos] = i + 1
        elif v == i + 1:
            images[pos] = i
    return Permutation(tuple(images))


def _strip_transposition(p: Permutation, i: int) -> Permutation:
    # s_i * p in apply-then order swaps the entries at positions i and i+1
    images = list(p.images)
    images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def _left_complement(p: Permutation, delta: Permutation) -> Permutation:
    # the permutation braid C with C * p = Delta, i.e. Delta * p^-1
    return delta * p.inverse()


def _normalize(n: int, factors: list[Permutation]) -> tuple[int, tuple[Permutation, ...]]:
    """Left-weight a sequence of permutation-braid factors.

    Repeated local moves: whenever some sigma_s starts the right factor of
    an adjacent pair but does not finish the left one, slide it across.
    Each move shifts one crossing strictly leftward so the sweep
    terminates; half twists pile up at the front and are absorbed into the
    Delta power, trivial factors are dropped.
    """
    delta = Permutation.longest(n)
    fs = [f for f in factors if not f.is_identity()]
    changed = True
    while changed:
        changed = False
        for t in range(len(fs) - 1):
            x, y = fs[t], fs[t + 1]
            moved = False
            extra = y.descents() - x.inverse().descents()
            while extra:
                s = min(extra)
                x = _append_transposition(x, s)
                y = _strip_transposition(y, s)
                moved = True
                if y.is_identity():
                    break
                extra = y.descents() - x.inverse().descents()
            if moved:
                fs[t], fs[t + 1] = x, y
                changed = True
        if changed:
            fs = [f for f in fs if not f.is_identity()]
    p = 0
    while fs and fs[0] == delta:
        fs.pop(0)
        p += 1
    return p, tuple(fs)


def left_normal_form(w: BraidWord) -> NormalForm:
    n = w.strands
    if n == 1:
        return NormalForm(1, 0, ())
    delta = Permutation.longest(n)
    factors: list[Permutation] = []
    powers: list[int] = []
    for g in w.letters:
        s = Permutation.transposition(n, abs(g) - 1)
        if g > 0:
            factors.append(s)
            powers.append(0)
        else:
            factors.append(_left_complement(s, delta))
            powers.append(-1)
    # push the Delta^-1 powers to the front; tau = conjugation by Delta has
    # order two on permutations, so only the parity of the exponent matters
    exponent = 0
    for idx in range(len(factors) - 1, -1, -1):
        if exponent % 2:
            factors[idx] = delta * factors[idx] * delta
        exponent += powers[idx]
    extra, fs = _normalize(n, factors)
    return NormalForm(n, exponent + extra, fs)


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Group-theoretic equality test: the normal form of w1 w2^-1 is trivial."""
    if w1.strands != w2.strands:
        raise ValueError("words live on different strand counts")
    return left_normal_form(w1.concat(w2.inverse())).is_trivial()


def is_left_weighted(nf: NormalForm) -> bool:
    """Validity of a normal form: no trivial or Delta factor, adjacency condition."""
    delta = Permutation.longest(nf.strands)
    for f in nf.factors:
        if f.is_identity() or f == delta:
            return False
    for x, y in zip(nf.factors, nf.factors[1:]):
        if not y.descents() <= x.inverse().descents():
            return False
    return True

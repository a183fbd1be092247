"""Integer polynomials in x1, x2, ... plus slide and quasisymmetric bases.

Exponent vectors are tuples with trailing zeros stripped, so a monomial
means the same thing in any number of variables.  Coefficients are exact
Python ints.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from functools import lru_cache
from itertools import zip_longest

from ._limits import CACHE_SIZE as _CACHE_SIZE
from ._limits import charge
from .words import VIRTUAL, Composition, _Virtual

SLIDE_TERM_CAP = 10**6


class NonExpandableError(RuntimeError):
    """A positional-basis elimination failed to make progress."""


def _strip(exp: Sequence[int]) -> tuple[int, ...]:
    e = tuple(exp)
    n = len(e)
    while n > 0 and e[n - 1] == 0:
        n -= 1
    return e[:n]


class Polynomial:
    """Sparse polynomial: a map from exponent tuples to nonzero ints."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, c in terms.items():
                if not c:
                    continue
                e = _strip(exp)
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e!r}")
                c2 = clean.get(e, 0) + c
                if c2:
                    clean[e] = c2
                else:
                    del clean[e]
        self.terms = clean

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exp): coeff})

    @classmethod
    def _raw(cls, clean: dict[tuple[int, ...], int]) -> Polynomial:
        # Internal: keys already stripped, values already nonzero.
        p = cls.__new__(cls)
        p.terms = clean
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = c2
            else:
                del out[e]
        return Polynomial._raw(out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: int | Polynomial) -> Polynomial:
        if isinstance(other, int):
            if not other:
                return Polynomial._raw({})
            return Polynomial._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                # Sums of stripped keys are stripped: the last slot of the
                # longer key (or of both, at equal length) is nonzero.
                e = tuple(a + b for a, b in zip_longest(e1, e2, fillvalue=0))
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    del out[e]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def max_variable(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms ordered by decreasing exponent tuple (padded lexicographic)."""
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_term_str(e, c) for e, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"


def _term_str(exp: tuple[int, ...], coeff: int) -> str:
    factors = [
        f"x{i}" + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(exp, 1)
        if e > 0
    ]
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def substitute_zero(p: Polynomial, k: int) -> Polynomial:
    """Set x_{k+1} = x_{k+2} = ... = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Polynomial._raw({e: c for e, c in p.terms.items() if len(e) <= k})


def flatten(comp: Sequence[int]) -> Composition:
    """Drop zero parts.

    >>> flatten((0, 3, 1, 0, 1))
    (3, 1, 1)
    """
    return tuple(x for x in comp if x)


def refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """Whether consecutive parts of fine group together into coarse.

    >>> refines((2, 1, 1), (3, 1))
    True
    >>> refines((1, 3), (3, 1))
    False
    """
    if any(x < 1 for x in fine) or any(x < 1 for x in coarse):
        raise ValueError("refinement is defined for positive parts")
    i = 0
    for part in coarse:
        acc = 0
        while acc < part:
            if i >= len(fine):
                return False
            acc += fine[i]
            i += 1
        if acc != part:
            return False
    return i == len(fine)


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """Whether every prefix sum of b is at least the matching one of a.

    >>> dominates((3, 1, 1), (3, 1, 0, 1))
    True
    """
    sb = sa = 0
    for x, y in zip_longest(b, a, fillvalue=0):
        sb += x
        sa += y
        if sb < sa:
            return False
    return True


@lru_cache(maxsize=_CACHE_SIZE)
def _placements(
    parts: tuple[int, ...],
    npos: int,
    floor: tuple[int, ...] | None,
    cap: int,
) -> tuple[tuple[int, ...], ...]:
    # Exponent vectors within npos positions whose nonzero entries split
    # the given parts in order; floor (when set) lower-bounds prefix sums.
    if not parts:
        return ((),) if floor is None or not any(floor) else ()
    out: list[tuple[int, ...]] = []
    exp: list[int] = []

    def place(j: int, t: int, rem: int, psum: int) -> None:
        if t == len(parts):
            if len(out) >= cap:
                raise ValueError(f"more than {cap} monomials; raise the cap")
            out.append(_strip(exp))
            return
        if npos - j < len(parts) - t:
            return
        lo = 0 if floor is None else floor[j] - psum
        if lo <= 0:
            exp.append(0)
            place(j + 1, t, rem, psum)
            exp.pop()
        for v in range(max(lo, 1), rem + 1):
            exp.append(v)
            if v == rem:
                place(j + 1, t + 1, parts[t + 1] if t + 1 < len(parts) else 0, psum + v)
            else:
                place(j + 1, t, rem - v, psum + v)
            exp.pop()

    place(0, 0, parts[0], 0)
    return tuple(out)


def slide_polynomial(a: Sequence[int] | _Virtual, *, max_terms: int | None = None) -> Polynomial:
    """Sum of x^b over b dominating a whose nonzero parts refine those of a.

    The index a is a weak composition; trailing zeros do not change the
    result, and VIRTUAL gives the zero polynomial.  The monomial x^a
    itself is the unique smallest term.

    >>> str(slide_polynomial((1, 2)))
    'x1*x2^2'
    >>> str(slide_polynomial((0, 2)))
    'x1^2 + x1*x2 + x2^2'
    """
    if a is VIRTUAL:
        return Polynomial._raw({})
    aa = _strip(a)
    if any(x < 0 for x in aa):
        raise ValueError(f"weak composition needed, got {tuple(a)!r}")
    cap = SLIDE_TERM_CAP if max_terms is None else max_terms
    floor = []
    s = 0
    for x in aa:
        s += x
        floor.append(s)
    exps = _placements(flatten(aa), len(aa), tuple(floor), cap)
    charge(len(exps))
    return Polynomial._raw({e: 1 for e in exps})


def fundamental_quasisym(
    alpha: Sequence[int], k: int, *, max_terms: int | None = None
) -> Polynomial:
    """Sum over x^b in k variables whose nonzero parts refine alpha.

    >>> str(fundamental_quasisym((2,), 2))
    'x1^2 + x1*x2 + x2^2'
    >>> str(fundamental_quasisym((1, 1), 2))
    'x1*x2'
    """
    al = tuple(alpha)
    if any(x < 1 for x in al):
        raise ValueError(f"composition parts must be positive: {al!r}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    cap = SLIDE_TERM_CAP if max_terms is None else max_terms
    exps = _placements(al, k, None, cap)
    charge(len(exps))
    return Polynomial._raw({e: 1 for e in exps})


def slide_expand(p: Polynomial) -> dict[Composition, int]:
    """Write p as an integer combination of slide polynomials.

    Works by repeatedly clearing the smallest remaining monomial, which
    each slide polynomial attains exactly once; the pivot sequence is
    strictly increasing, so this terminates.

    >>> slide_expand(Polynomial({(1, 1): 1, (2,): -1}))
    {(1, 1): 1, (2,): -1}
    """
    work = dict(p.terms)
    out: dict[Composition, int] = {}
    while work:
        m = min(work)
        c = work.pop(m)
        out[m] = c
        for e, ce in slide_polynomial(m).terms.items():
            if e == m:
                continue
            c2 = work.get(e, 0) - c * ce
            if c2:
                work[e] = c2
            else:
                work.pop(e, None)
        if work and min(work) <= m:
            raise NonExpandableError(f"pivot {m} did not clear the minimum")
    return out

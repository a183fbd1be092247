"""Monk multiplication, last-descent truncation, and product expansion.

Multiplying a Schubert polynomial by a Schur polynomial s_lam(x1..xk) is
done without ever touching monomials: cross the permutation with the
grassmannian permutation of lam, then repeatedly truncate at the last
descent until every term's last descent is at most k.  Each truncation
replaces w by length-preserving chains w-hat (a_1, k)(a_2, k+1) ... and
the chains concatenate into saturated transposition chains that witness
the structure constants.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from ._limits import CACHE_SIZE as _CACHE_SIZE
from ._limits import charge
from .perm import (
    Perm,
    Transposition,
    apply_transposition,
    canonical,
    check_partition,
    cross,
    grassmannian,
    is_covering,
    last_descent,
)
from .poly import Polynomial, substitute_zero
from .schubert import schubert, stanley


@dataclass(frozen=True)
class Chain:
    """A walk in Bruhat order: steps[i] moves the length by directions[i].

    Construction validates every step, so a Chain that exists is a real
    saturated chain from its base.
    """

    base: Perm
    steps: tuple[Transposition, ...]
    directions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", canonical(self.base))
        object.__setattr__(self, "steps", tuple(tuple(t) for t in self.steps))
        object.__setattr__(self, "directions", tuple(self.directions))
        if len(self.steps) != len(self.directions):
            raise ValueError("steps and directions must pair up")
        if any(d not in (-1, 1) for d in self.directions):
            raise ValueError("directions must be +1 or -1")
        w = self.base
        for t, d in zip(self.steps, self.directions):
            nxt = apply_transposition(w, t)
            # A transposition can shift length by any odd amount; covering
            # from below is the exact test for a move of one.
            ok = is_covering(w, t) if d == 1 else is_covering(nxt, t)
            if not ok:
                raise ValueError(f"step {t} is not a covering in direction {d}")
            w = nxt
        object.__setattr__(self, "_end", w)

    @property
    def endpoint(self) -> Perm:
        return self._end

    def walk(self) -> tuple[Perm, ...]:
        out = [self.base]
        for t in self.steps:
            out.append(apply_transposition(out[-1], t))
        return tuple(out)

    def __str__(self) -> str:
        return format_chain(self.steps)


def format_chain(steps: Sequence[Sequence[int]]) -> str:
    return "".join(f"({a},{b})" for a, b in steps)


def monk_multiply(w: Sequence[int], k: int) -> dict[Perm, int]:
    """Expansion of the product with x1 + ... + xk in the Schubert basis.

    >>> monk_multiply((), 1)
    {(2, 1): 1}
    """
    w = canonical(w)
    if k < 1:
        raise ValueError("k must be positive")
    n = max(len(w), k)
    out: dict[Perm, int] = {}
    for a in range(1, k + 1):
        for b in range(k + 1, n + 2):
            if is_covering(w, (a, b)):
                u = apply_transposition(w, (a, b))
                assert u not in out, "covers of distinct transpositions differ"
                out[u] = 1
    return out


def _descent_data(w: Perm) -> tuple[int, int]:
    """Last descent k of w and the width m with w_k > w_{k+m} maximal."""
    k = last_descent(w)
    if k is None:
        raise ValueError("the identity has no descent to truncate")
    km = max(i + 1 for i, v in enumerate(w) if v < w[k - 1])
    return k, km - k


def truncation_start(w: Sequence[int]) -> Perm:
    """Cycle the last-descent value just past the values it exceeds.

    >>> truncation_start((5, 1, 7, 3, 8, 2, 4, 6))
    (5, 1, 7, 3, 2, 4, 6)
    """
    w = canonical(w)
    k, m = _descent_data(w)
    what = w[: k - 1] + w[k : k + m] + (w[k - 1],) + w[k + m :]
    if __debug__:
        check = w
        for j in range(m, 0, -1):
            check = apply_transposition(check, (k, k + j))
        assert canonical(what) == check
    return canonical(what)


def truncation_paths(w: Sequence[int]) -> tuple[tuple[Perm, tuple[int, ...]], ...]:
    """Length-preserving completions of the truncation, with their columns.

    Each result pairs an endpoint what(a_1, k)...(a_m, k+m-1) with the
    tuple (a_1, ..., a_m); every a_i is below k and every step is a
    covering.  Columns are explored largest-first.

    >>> truncation_paths((1, 4, 2, 3))
    (((3, 1, 2), (1, 1)),)
    """
    w = canonical(w)
    k, m = _descent_data(w)
    what = truncation_start(w)
    out: list[tuple[Perm, tuple[int, ...]]] = []

    def go(p: Perm, j: int, acc: tuple[int, ...]) -> None:
        if j == m:
            charge()
            assert last_descent(p) is None or last_descent(p) < k
            out.append((p, acc))
            return
        for a in range(k - 1, 0, -1):
            if is_covering(p, (a, k + j)):
                go(apply_transposition(p, (a, k + j)), j + 1, acc + (a,))

    go(what, 0, ())
    return tuple(out)


def truncate_last_descent(w: Sequence[int]) -> dict[Perm, int]:
    """Schubert expansion of w's polynomial with its last variable killed.

    Setting x_k = 0 in the polynomial of w, where k is w's last descent,
    leaves a sum of Schubert polynomials indexed by the endpoints of
    truncation_paths, each appearing exactly once.
    """
    out: dict[Perm, int] = {}
    for p, _ in truncation_paths(w):
        if p in out:
            raise RuntimeError(f"duplicate truncation endpoint {p}")
        out[p] = 1
    return out


def _product_preconditions(u: Perm, lam: tuple[int, ...], k: int) -> None:
    if k < 1:
        raise ValueError("k must be positive")
    if len(lam) > k:
        raise ValueError(f"partition has {len(lam)} rows, more than k={k}")
    ld = last_descent(u)
    if ld is not None and ld > k:
        raise ValueError(f"last descent of u is {ld}, beyond k={k}")


def _product_seed(u: Perm, lam: tuple[int, ...], k: int) -> Perm:
    n = max(k, len(u))
    return cross(u, grassmannian(lam, len(lam)), n)


def schubert_times_schur(
    u: Sequence[int], lam: Sequence[int], k: int
) -> dict[Perm, int]:
    """Schubert expansion of the product with s_lam(x1..xk).

    Requires the last descent of u to be at most k and lam to have at
    most k rows; the expansion is then finite, positive, and supported on
    permutations with last descent at most k.

    >>> schubert_times_schur((), (2, 1), 2)
    {(2, 4, 1, 3): 1}
    """
    u = canonical(u)
    lam = check_partition(lam)
    _product_preconditions(u, lam, k)
    if not lam:
        return {u: 1}
    pending: dict[Perm, int] = {_product_seed(u, lam, k): 1}
    done: dict[Perm, int] = {}
    while pending:
        w = max(pending)
        c = pending.pop(w)
        ld = last_descent(w)
        if ld is None or ld <= k:
            done[w] = done.get(w, 0) + c
            continue
        charge()
        for p, _ in truncation_paths(w):
            pending[p] = pending.get(p, 0) + c
    return dict(sorted(done.items()))


def lr_coefficient(
    u: Sequence[int], lam: Sequence[int], k: int, w: Sequence[int]
) -> int:
    """Coefficient of one Schubert polynomial in the product expansion."""
    return schubert_times_schur(u, lam, k).get(canonical(w), 0)


def _conj(d: Transposition, t: Transposition) -> Transposition:
    table = {d[0]: d[1], d[1]: d[0]}
    a, b = (table.get(x, x) for x in t)
    return (a, b) if a < b else (b, a)


def _push_downs_left(
    items: Sequence[tuple[Transposition, bool]]
) -> tuple[list[Transposition], list[Transposition]]:
    """Rewrite a mixed word so all down-steps precede all up-steps.

    Moving a down-step t left across an up-step s rewrites s t as
    t (t s t); an up-step equal to t cancels against it.  The group
    element is unchanged.
    """
    downs: list[Transposition] = []
    ups: list[Transposition] = []
    for t, is_down in items:
        if not is_down:
            ups.append(t)
            continue
        cancelled = False
        for i in range(len(ups) - 1, -1, -1):
            if ups[i] == t:
                del ups[i]
                cancelled = True
                break
            ups[i] = _conj(t, ups[i])
        if not cancelled:
            downs.append(t)
    return downs, ups


def _reverse_ups(ups: Sequence[Transposition]) -> list[Transposition]:
    """Reverse a transposition word by sinking heads: t R = (t R t) t."""
    rest = list(ups)
    out: list[Transposition] = []
    while rest:
        head = rest.pop(0)
        rest = [_conj(head, t) for t in rest]
        out.insert(0, head)
    return out


def normalize_chain(chain: Chain) -> Chain:
    """Rewrite an alternating down/up chain into staircase form.

    The input steps alternate (k, b_1)(a_1, k)(k, b_2)(a_2, k)... from a
    base w whose last descent is k, with b_1 > b_2 > ... and b_1 maximal
    such that w_k > w_{b_1}.  The output chain from the same base does
    all m = b_1 - k down-steps (k, k+m)...(k, k+1) first, then m up-steps
    in column order (a'_1, k)(a'_2, k+1)..., and reaches the same
    endpoint.  Padding pairs (k,j)(k,j) are inserted at the skipped
    columns, then down-steps commute left past up-steps by conjugation.

    >>> c = Chain((1, 4, 2, 3), ((2, 4), (1, 2)), (-1, 1))
    >>> str(normalize_chain(c))
    '(2,4)(2,3)(1,2)(1,3)'
    """
    w = chain.base
    steps = list(chain.steps)
    if not steps:
        return chain
    if len(steps) % 2 or chain.directions != (-1, 1) * (len(steps) // 2):
        raise ValueError("chain must alternate down,up pairs")
    k, m = _descent_data(w)
    pairs = list(zip(steps[0::2], steps[1::2]))
    bs = []
    for down, up in pairs:
        if down[0] != k or down[1] <= k:
            raise ValueError(f"down-step {down} does not lower column {k}")
        if up[1] != k or not 1 <= up[0] < k:
            raise ValueError(f"up-step {up} does not raise column {k}")
        bs.append(down[1])
    if bs[0] != k + m:
        raise ValueError(f"first down-step must reach {k + m}, got {bs[0]}")
    if any(x <= y for x, y in zip(bs, bs[1:])):
        raise ValueError(f"down-steps must strictly descend, got {bs}")

    items: list[tuple[Transposition, bool]] = []
    for i, (down, up) in enumerate(pairs):
        items.append((down, True))
        items.append((up, False))
        stop = bs[i + 1] if i + 1 < len(pairs) else k
        for j in range(bs[i] - 1, stop, -1):
            items.append(((k, j), True))
            items.append(((k, j), False))
    downs, ups = _push_downs_left(items)
    assert downs == [(k, k + m - i) for i in range(m)]
    ups = _reverse_ups(ups)
    assert [b for _, b in ups] == list(range(k, k + m))
    assert all(a < k for a, _ in ups)
    out = Chain(w, tuple(downs + ups), (-1,) * m + (1,) * m)
    assert out.endpoint == chain.endpoint
    return out


def lr_chains(
    u: Sequence[int], lam: Sequence[int], k: int
) -> dict[Perm, tuple[Chain, ...]]:
    """Saturated chains from u witnessing each product coefficient.

    Every chain uses |lam| up-steps (a, b) with a <= k < b; the number of
    chains ending at w is the coefficient of w in schubert_times_schur.

    >>> {w: [str(c) for c in cs] for w, cs in lr_chains((), (2, 1), 2).items()}
    {(2, 4, 1, 3): ['(2,3)(1,3)(2,4)']}
    """
    u = canonical(u)
    lam = check_partition(lam)
    _product_preconditions(u, lam, k)
    if not lam:
        return {u: (Chain(u, (), ()),)}
    w0 = _product_seed(u, lam, k)
    out: dict[Perm, list[Chain]] = {}

    def go(w: Perm, raw: list[tuple[Transposition, bool]]) -> None:
        ld = last_descent(w)
        if ld is None or ld <= k:
            downs, ups = _push_downs_left(raw)
            base = w0
            for t in downs:
                base = apply_transposition(base, t)
            assert base == u, "down-steps must consume the crossed factor"
            assert len(ups) == sum(lam)
            assert all(a <= k < b for a, b in ups)
            chain = Chain(u, tuple(ups), (1,) * len(ups))
            assert chain.endpoint == w
            out.setdefault(w, []).append(chain)
            return
        kk, m = _descent_data(w)
        stage = [((kk, kk + m - i), True) for i in range(m)]
        for p, cols in truncation_paths(w):
            lifted = [((a, kk + j), False) for j, a in enumerate(cols)]
            go(p, raw + stage + lifted)

    go(w0, [])
    return {w: tuple(cs) for w, cs in sorted(out.items())}


def cross_identity_check(
    u: Sequence[int], v: Sequence[int], k: int, n: int
) -> bool:
    """Whether splicing v above position n factors after killing x_{k+1}...

    Compares the crossed Schubert polynomial, truncated to k variables,
    with the product of u's Schubert polynomial and v's Stanley
    polynomial in those variables.  Needs u inside S_k and k <= n.
    """
    u = canonical(u)
    v = canonical(v)
    if len(u) > k:
        raise ValueError(f"u moves position {len(u)}, beyond k={k}")
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    lhs = substitute_zero(schubert(cross(u, v, n)), k)
    rhs = schubert(u) * stanley(v, k)
    return lhs == rhs


@lru_cache(maxsize=_CACHE_SIZE)
def _product_poly(u: Perm, lam: tuple[int, ...], k: int) -> Polynomial:
    total = Polynomial()
    for w, c in schubert_times_schur(u, lam, k).items():
        total = total + schubert(w) * c
    return total

"""Permutations in one-line notation.

A permutation is a tuple of distinct positive integers whose entry at
index i-1 is the image of i.  The canonical form strips trailing fixed
points, so the identity is the empty tuple and S_n embeds in S_{n+1}.
All functions accept non-canonical input and return canonical output;
positions and values are 1-based throughout.
"""

from __future__ import annotations

from collections.abc import Sequence

Perm = tuple[int, ...]
Transposition = tuple[int, int]


def canonical(values: Sequence[int]) -> Perm:
    """Validate one-line notation and strip trailing fixed points.

    >>> canonical([4, 2, 1, 5, 3])
    (4, 2, 1, 5, 3)
    >>> canonical([2, 1, 3, 4])
    (2, 1)
    >>> canonical([1, 2])
    ()
    """
    w = tuple(values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    n = len(w)
    while n > 0 and w[n - 1] == n:
        n -= 1
    return w[:n]


def pad(w: Sequence[int], n: int) -> Perm:
    """Extend with fixed points so the word has length at least n."""
    w = tuple(w)
    return w + tuple(range(len(w) + 1, n + 1))


def length(w: Sequence[int]) -> int:
    """Coxeter length, i.e. the number of inversions.

    >>> length((4, 2, 1, 5, 3))
    5
    """
    w = canonical(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descent_set(w: Sequence[int]) -> set[int]:
    """Positions i with w_i > w_{i+1}.

    >>> sorted(descent_set((4, 2, 1, 5, 3)))
    [1, 2, 4]
    """
    w = canonical(w)
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def last_descent(w: Sequence[int]) -> int | None:
    """Largest descent position, or None for the identity."""
    d = descent_set(w)
    return max(d) if d else None


def code(w: Sequence[int]) -> tuple[int, ...]:
    """Lehmer code: entry i counts the j > i with w_j < w_i.

    Trailing zeros are stripped, matching the canonical form of w.

    >>> code((4, 2, 1, 5, 3))
    (3, 1, 0, 1)
    """
    w = canonical(w)
    c = [sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def from_code(c: Sequence[int]) -> Perm:
    """Inverse of code.

    >>> from_code((3, 1, 0, 1))
    (4, 2, 1, 5, 3)
    """
    c = tuple(c)
    if any(x < 0 for x in c):
        raise ValueError(f"code entries must be nonnegative: {c!r}")
    n = len(c) + (max(c) if c else 0)
    avail = list(range(1, n + 1))
    w = [avail.pop(x) for x in c]
    return canonical(w + avail)


def inverse(w: Sequence[int]) -> Perm:
    w = canonical(w)
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def _check_transposition(t: Sequence[int]) -> Transposition:
    a, b = t
    if not (1 <= a < b):
        raise ValueError(f"transposition needs 1 <= a < b, got {tuple(t)!r}")
    return (a, b)


def apply_transposition(w: Sequence[int], t: Sequence[int]) -> Perm:
    """Right multiplication by (a, b): swap the values in positions a and b."""
    a, b = _check_transposition(t)
    ww = list(pad(canonical(w), b))
    ww[a - 1], ww[b - 1] = ww[b - 1], ww[a - 1]
    return canonical(ww)


def is_covering(w: Sequence[int], t: Sequence[int]) -> bool:
    """Test length(w (a,b)) == length(w) + 1 without recomputing lengths.

    Holds exactly when w_a < w_b and no position strictly between carries
    a value strictly between w_a and w_b.
    """
    a, b = _check_transposition(t)
    ww = pad(canonical(w), b)
    if ww[a - 1] > ww[b - 1]:
        return False
    return not any(ww[a - 1] < ww[c] < ww[b - 1] for c in range(a, b - 1))


def shift(w: Sequence[int], m: int) -> Perm:
    """Prepend m fixed points: 1^m x w.

    >>> shift((2, 1), 2)
    (1, 2, 4, 3)
    """
    if m < 0:
        raise ValueError("shift amount must be nonnegative")
    w = canonical(w)
    return tuple(range(1, m + 1)) + tuple(v + m for v in w)


def cross(u: Sequence[int], v: Sequence[int], m: int) -> Perm:
    """Concatenation u x_m v: u on positions 1..m, v shifted above m.

    Requires every position beyond m to be a fixed point of u.

    >>> cross((4, 2, 1, 5, 3), (2, 4, 1, 3), 5)
    (4, 2, 1, 5, 3, 7, 9, 6, 8)
    """
    u = canonical(u)
    v = canonical(v)
    if len(u) > m:
        raise ValueError(f"u moves position {len(u)} beyond m={m}")
    return canonical(pad(u, m) + tuple(x + m for x in v))


def check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(not isinstance(x, int) or x < 1 for x in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise ValueError(f"not a partition: {lam!r}")
    return lam


def grassmannian(lam: Sequence[int], k: int) -> Perm:
    """The permutation with code lambda reversed into positions 1..k.

    Its value at i <= k is i + lam_{k-i+1} (parts beyond len(lam) read as
    zero); the remaining values fill positions k+1, ... in increasing
    order.  The result has a unique descent, at k, unless lam is empty.

    >>> grassmannian((2, 1), 2)
    (2, 4, 1, 3)
    """
    lam = check_partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition has {len(lam)} parts, more than k={k}")
    full = lam + (0,) * (k - len(lam))
    front = tuple(i + full[k - i] for i in range(1, k + 1))
    n = k + (lam[0] if lam else 0)
    rest = sorted(set(range(1, n + 1)) - set(front))
    return canonical(front + tuple(rest))


def to_partition(v: Sequence[int], k: int) -> tuple[int, ...]:
    """Recover lam from grassmannian(lam, k); rejects other input."""
    v = canonical(v)
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = descent_set(v)
    if d and d != {k}:
        raise ValueError(f"{v!r} is not grassmannian with descent at {k}")
    vv = pad(v, k)
    lam = [vv[k - j] - (k - j + 1) for j in range(1, k + 1)]
    while lam and lam[-1] == 0:
        lam.pop()
    return check_partition(lam)


def parse_perm(text: str) -> Perm:
    """Read one-line notation: concatenated digits, or comma-separated."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    try:
        if "," in text:
            values = [int(part) for part in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"cannot read permutation from {text!r}") from None
    return canonical(values)


def format_perm(w: Sequence[int]) -> str:
    """Inverse of parse_perm; the identity prints as "1"."""
    w = canonical(w)
    if not w:
        return "1"
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)

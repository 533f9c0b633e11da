"""Permutations of rim radii and the combinatorics around them.

A permutation ``sigma`` of ``(1, ..., L)`` labels one simplex sector of the
radial integration: ``sigma[0]`` is the rim vertex with the largest radius,
``sigma[-1]`` the one with the smallest.  The reference vertex 0 (radius 1)
sits above all of them and is never part of ``sigma``.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, InvariantError, UsageError

Permutation = tuple[int, ...]

MAX_ENUMERATION_L = 20


def as_permutation(seq: Iterable[int]) -> Permutation:
    """Validate ``seq`` as a permutation of ``1..L`` with ``L >= 2``."""
    sigma = tuple(int(v) for v in seq)
    if len(sigma) < 2:
        raise DomainError("a sector permutation needs L >= 2 entries")
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise DomainError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def enumerate_permutations(L: int, max_L: int = MAX_ENUMERATION_L) -> Iterator[Permutation]:
    """Yield all ``L!`` permutations of ``1..L`` in lexicographic order."""
    if not 2 <= L <= max_L:
        raise UsageError(f"L must satisfy 2 <= L <= {max_L}, got {L}")
    return itertools.permutations(range(1, L + 1))


def block_prefixes(L: int, depth: int = 1) -> list[Permutation]:
    """Prefixes cutting ``S_L`` into contiguous lexicographic blocks."""
    depth = max(0, min(depth, L - 1))
    return list(itertools.permutations(range(1, L + 1), depth))


def enumerate_block(L: int, prefix: Sequence[int]) -> Iterator[Permutation]:
    """Permutations of ``1..L`` that start with ``prefix``, in lexicographic order."""
    prefix = tuple(prefix)
    rest = [v for v in range(1, L + 1) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield prefix + tail


def contains_forbidden_pattern(sigma: Sequence[int]) -> bool:
    """True if ``sigma`` has positions p < q < r with ``sigma[r] < sigma[p] < sigma[q]``.

    Permutations for which this is False are the "allowed" ones; there are
    ``catalan(L)`` of them.  Runs in linear time with the stack-sorting
    criterion: once a value has been popped by a larger successor, any later
    value below it completes the pattern.
    """
    stack: list[int] = []
    floor = 0
    for v in sigma:
        if v < floor:
            return True
        while stack and stack[-1] < v:
            floor = stack.pop()
        stack.append(v)
    return False


def catalan(L: int) -> int:
    if L < 0:
        raise DomainError("Catalan numbers are defined for L >= 0")
    return math.comb(2 * L, L) // (L + 1)


def reflect(sigma: Sequence[int]) -> Permutation:
    """Entry-wise ``k -> L + 1 - k``; an involution on ``S_L``."""
    n = len(sigma) + 1
    return tuple(n - v for v in sigma)


def s1_generate(L: int) -> frozenset[Permutation]:
    """Recursive family of ``2**(L-1)`` sectors sharing the identity's value.

    Seeded at ``L = 2`` by both orderings.  Each step shifts the previous
    members up by one, prepends 1, and closes the result under :func:`reflect`.
    """
    if L < 2:
        raise DomainError("s1_generate needs L >= 2")
    family = {(1, 2), (2, 1)}
    for size in range(3, L + 1):
        lifted = {(1,) + tuple(v + 1 for v in sigma) for sigma in family}
        family = lifted | {reflect(sigma) for sigma in lifted}
        if len(family) != 2 ** (size - 1):
            raise InvariantError(
                f"s1 construction produced {len(family)} members at L={size}"
            )
    return frozenset(family)


def min_class_representative(L: int) -> Permutation:
    """Evens ascending followed by odds ascending, e.g. ``(2, 4, 1, 3, 5)``."""
    if L < 4:
        raise DomainError("the minimal-value representative is defined for L >= 4")
    return tuple(range(2, L + 1, 2)) + tuple(range(1, L + 1, 2))

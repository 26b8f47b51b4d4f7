"""Permutation signs and Koszul signs for graded arguments.

A permutation is a tuple ``sigma`` of images: vertex (or slot) ``i`` is sent
to ``sigma[i]``.  A degree vector holds one parity bit per slot.
"""

from __future__ import annotations

from typing import Sequence


def check_permutation(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError(f"not a permutation of 0..{len(sigma) - 1}: {tuple(sigma)}")


def _inversion_parity(values: Sequence[int]) -> int:
    parity = 0
    for a in range(len(values)):
        va = values[a]
        for b in range(a + 1, len(values)):
            if va > values[b]:
                parity ^= 1
    return parity


def sign_eps(sigma: Sequence[int]) -> int:
    """Ordinary signature of ``sigma``."""
    check_permutation(sigma)
    return -1 if _inversion_parity(sigma) else 1


def sign_eps_graded(arrangement: Sequence[int], parities: Sequence[int]) -> int:
    """Koszul sign of the arrangement ``(v[a[0]], v[a[1]], ...)``.

    This is the signature of the permutation induced on the odd entries;
    ``parities`` are indexed by the original slots.
    """
    if len(arrangement) != len(parities):
        raise ValueError("arrangement and degree vector differ in length")
    check_permutation(arrangement)
    odd = [a for a in arrangement if parities[a] & 1]
    return -1 if _inversion_parity(odd) else 1


def relabel_sign(sigma: Sequence[int], parities: Sequence[int]) -> int:
    """Koszul sign of the relabeling ``i -> sigma[i]`` of graded slots.

    Relabeling by ``sigma`` is the arrangement ``sigma^-1``; the sign counts
    the pairs of odd slots whose relative order ``sigma`` reverses.
    """
    if len(sigma) != len(parities):
        raise ValueError("permutation and degree vector differ in length")
    check_permutation(sigma)
    odd_images = [sigma[i] for i in range(len(sigma)) if parities[i] & 1]
    return -1 if _inversion_parity(odd_images) else 1


def front_insertion_sign(j: int, parities: Sequence[int]) -> int:
    """Sign of the arrangement ``(j, 0, ..., j-1, j+1, ..., n)``."""
    if not 0 <= j < len(parities):
        raise IndexError(f"slot {j} out of range for {len(parities)} slots")
    if not parities[j] & 1:
        return 1
    odd_before = sum(1 for p in parities[:j] if p & 1)
    return -1 if odd_before & 1 else 1


def front_pair_sign(i: int, j: int, parities: Sequence[int]) -> int:
    """Sign of the arrangement ``(i, j, rest in order)``."""
    n = len(parities)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise IndexError("need two distinct slots in range")
    rest = [k for k in range(n) if k != i and k != j]
    return sign_eps_graded([i, j, *rest], parities)


def back_insertion_sign(i: int, parities: Sequence[int]) -> int:
    """Sign of the arrangement ``(0, ..., i-1, i+1, ..., n, i)``."""
    if not 0 <= i < len(parities):
        raise IndexError(f"slot {i} out of range for {len(parities)} slots")
    if not parities[i] & 1:
        return 1
    odd_after = sum(1 for p in parities[i + 1:] if p & 1)
    return -1 if odd_after & 1 else 1


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """The relabeling ``sigma o tau`` (apply ``tau`` first)."""
    return tuple(sigma[t] for t in tau)


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)

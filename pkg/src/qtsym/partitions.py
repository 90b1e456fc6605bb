"""Integer partitions: generation, conjugation, and combinatorial statistics."""

from math import factorial

Partition = tuple


def is_partition(parts) -> bool:
    """True for a weakly decreasing tuple of nonnegative integers."""
    return all(
        isinstance(p, int) and p >= 0 for p in parts
    ) and all(a >= b for a, b in zip(parts, parts[1:]))


def trim(parts) -> Partition:
    """Drop trailing zero parts."""
    parts = tuple(parts)
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def pad(parts, length: int) -> Partition:
    parts = tuple(parts)
    if len(parts) > length:
        raise ValueError(f"cannot pad {parts} down to length {length}")
    return parts + (0,) * (length - len(parts))


def check_partition(parts) -> Partition:
    """Normalize to a trimmed partition, rejecting invalid input."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return trim(parts)


def weight(parts) -> int:
    return sum(parts)


def length(parts) -> int:
    return len(trim(parts))


def multiplicities(parts) -> dict:
    """Map each positive part size to its multiplicity."""
    out = {}
    for p in trim(parts):
        out[p] = out.get(p, 0) + 1
    return out


def conjugate(parts) -> Partition:
    parts = trim(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def z_factor(parts) -> int:
    """Order of the centralizer of a permutation with this cycle type."""
    out = 1
    for size, mult in multiplicities(parts).items():
        out *= size ** mult * factorial(mult)
    return out


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None):
    """Yield the partitions of n in decreasing lexicographic order.

    Decreasing lex refines reverse dominance: whenever mu dominates lam,
    mu is yielded before lam.
    """
    if n < 0:
        return
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    if max_length is not None and max_length <= 0:
        return
    rem_length = None if max_length is None else max_length - 1
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, rem_length, first):
            yield (first,) + rest


def dominance_leq(lam, mu) -> bool:
    """True when the first argument is dominated by the second.

    Both orders only compare partitions of equal weight; unequal weights
    give False.
    """
    lam, mu = trim(lam), trim(mu)
    if sum(lam) != sum(mu):
        return False
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def contains(lam, mu) -> bool:
    """True when the diagram of the second argument fits inside the first."""
    lam, mu = trim(lam), trim(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def add_row_vector(lam, theta) -> tuple:
    """Componentwise sum of a partition and a nonnegative integer vector.

    The result is a plain tuple; it need not be a partition.
    """
    n = max(len(lam), len(theta))
    return tuple(
        (lam[i] if i < len(lam) else 0) + (theta[i] if i < len(theta) else 0)
        for i in range(n)
    )


def decrement_part(lam, k: int) -> tuple:
    """Reduce the k-th part (1-indexed) by one; result may not be a partition."""
    lam = tuple(lam)
    if not 1 <= k <= len(lam):
        raise ValueError(f"part index {k} out of range for {lam}")
    return lam[: k - 1] + (lam[k - 1] - 1,) + lam[k:]


def compositions_bounded(bounds) -> "iter":
    """Yield all integer vectors 0 <= v[i] <= bounds[i], lexicographically."""
    if not bounds:
        yield ()
        return
    for head in range(bounds[0] + 1):
        for tail in compositions_bounded(bounds[1:]):
            yield (head,) + tail


def vectors_with_sum_at_most(n: int, total: int):
    """Yield all length-n nonnegative integer vectors with sum <= total."""
    if n == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in vectors_with_sum_at_most(n - 1, total - head):
            yield (head,) + tail

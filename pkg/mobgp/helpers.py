from typing import Iterable, List, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    """Convert vertex ids to a bitmask

    Args:
        vertices (Iterable[int]): the vertex ids

    Returns:
        int: the bitmask with bit v set for every vertex v
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> List[int]:
    """Convert a bitmask to the ascending list of its vertex ids"""
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def single_bit(mask: int) -> int:
    """Vertex id of a bitmask with exactly one bit set"""
    return mask.bit_length() - 1


def permute_mask(mask: int, permutation: Sequence[int]) -> int:
    result = 0
    while mask:
        low = mask & -mask
        result |= 1 << permutation[low.bit_length() - 1]
        mask ^= low
    return result


def inverse_permutation(permutation: Sequence[int]) -> List[int]:
    result = [0] * len(permutation)
    for i, p in enumerate(permutation):
        result[p] = i
    return result


def ceil_half(n: int) -> int:
    return (n + 1) // 2

"""Bitmask encoding of subsets of the ground set {0, ..., n-1}.

Element e contributes bit 2**e. Every set-valued function in the package is a
table indexed by these masks.
"""

from src.utils.errors import InvalidSubsetError


def full_mask(n):
    return (1 << n) - 1


def size(mask):
    return mask.bit_count()


def elements(mask):
    """Yields the element indices of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_elements(items):
    mask = 0
    for e in items:
        mask |= 1 << e
    return mask


def submasks(mask):
    """Yields every submask of `mask`, from `mask` itself down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask, keep):
    """Maps the bits of `mask` lying in `keep` onto dense positions 0..|keep|-1."""
    out = 0
    for position, e in enumerate(elements(keep)):
        if mask >> e & 1:
            out |= 1 << position
    return out


def expand(dense, keep):
    """Inverse of compress: position i of `dense` becomes the i-th element of `keep`."""
    out = 0
    for position, e in enumerate(elements(keep)):
        if dense >> position & 1:
            out |= 1 << e
    return out


def expansion_table(keep):
    """expand(s, keep) for every s, computed incrementally over the lowest set bit."""
    positions = list(elements(keep))
    table = [0] * (1 << len(positions))
    for dense in range(1, len(table)):
        low = dense & -dense
        table[dense] = table[dense ^ low] | (1 << positions[low.bit_length() - 1])
    return table


def check_subset(mask, n):
    if mask < 0 or mask >> n:
        raise InvalidSubsetError(mask, n)
    return mask


def format_subset(mask):
    return "{" + ",".join(str(e) for e in elements(mask)) + "}"

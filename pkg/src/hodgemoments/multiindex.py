"""Multi-index helpers shared by the counting and chain modules.

A multi-index is a tuple of nonnegative integers (I_0, ..., I_{m-1}); its
weight is sum_i i * I_i.
"""

MultiIndex = tuple[int, ...]


def weak_compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`, in
    ascending lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in weak_compositions(total - head, parts - 1):
            yield (head,) + tail


def weight(index: MultiIndex) -> int:
    return sum(i * e for i, e in enumerate(index))


def rotate(index: MultiIndex) -> MultiIndex:
    """One step of the cyclic shift sending slot j to slot j+1."""
    return (index[-1],) + index[:-1]


def orbit(index: MultiIndex) -> list[MultiIndex]:
    """The full cyclic-shift orbit, starting from `index`."""
    out = [index]
    cur = rotate(index)
    while cur != index:
        out.append(cur)
        cur = rotate(cur)
    return out


def canonical_rotation(index: MultiIndex) -> MultiIndex:
    return min(orbit(index))

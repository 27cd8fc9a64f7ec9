"""Bitmask vertex sets and canonically ordered families of them.

A vertex subset of a fixed n-vertex graph is a plain int bitmask; helper
functions here convert between masks, index tuples, and label lists. The
canonical order on sets is (cardinality, bitmask value), ascending.
"""


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def labels_of(mask: int, labels):
    return [labels[i] for i in indices_of(mask)]


def canonical_key(mask: int):
    return (mask.bit_count(), mask)


def submasks(mask: int):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SetFamily:
    """Duplicate-free collection of masks in canonical order."""

    __slots__ = ("masks", "labels")

    def __init__(self, masks, labels):
        self.masks = tuple(sorted(set(masks), key=canonical_key))
        self.labels = tuple(labels)

    def __iter__(self):
        return iter(self.masks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, mask):
        return mask in set(self.masks)

    def __eq__(self, other):
        return isinstance(other, SetFamily) and self.masks == other.masks

    def __repr__(self):
        return f"SetFamily({[labels_of(m, self.labels) for m in self.masks]})"

    def as_label_lists(self):
        return [labels_of(m, self.labels) for m in self.masks]

    def to_text(self) -> str:
        """One set per line, labels comma-separated, canonical order."""
        return "\n".join(",".join(labels_of(m, self.labels)) for m in self.masks) + "\n"

    @classmethod
    def from_label_lists(cls, lists, labels):
        index = {lab: i for i, lab in enumerate(labels)}
        return cls((mask_of(index[lab] for lab in one) for one in lists), labels)

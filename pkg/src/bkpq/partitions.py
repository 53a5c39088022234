"""Strict and ordinary integer partitions.

Strict partitions (distinct parts) index every term of the BKP series;
ordinary partitions appear on the KP side and as doubles of strict ones.
"""

from fractions import Fraction


class StrictPartition:
    """A strictly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError("parts must be positive: %r" % (parts,))
            if i + 1 < len(parts) and parts[i + 1] >= p:
                raise ValueError("parts must be strictly decreasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("StrictPartition is immutable")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, StrictPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(("DP", self.parts))

    def __lt__(self, other):
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __repr__(self):
        return "StrictPartition(%r)" % (list(self.parts),)

    def to_json(self):
        return list(self.parts)


class Partition:
    """An ordinary partition: non-increasing positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError("parts must be positive: %r" % (parts,))
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise ValueError("parts must be non-increasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("P", self.parts))

    def __lt__(self, other):
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __repr__(self):
        return "Partition(%r)" % (list(self.parts),)

    def to_json(self):
        return list(self.parts)

    def cells(self):
        """Iterate over the nodes (i, j) of the Young diagram, 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)


ZERO_STRICT = StrictPartition(())
ZERO_PARTITION = Partition(())


def enumerate_strict(max_weight):
    """All strict partitions with 0 < weight <= max_weight.

    Order is graded by weight, then lexicographically descending on parts,
    so golden files stay stable.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be >= 0")
    out = []
    for w in range(1, max_weight + 1):
        out.extend(StrictPartition(p) for p in _strict_of_weight(w))
    return out


def _strict_of_weight(w, cap=None):
    if cap is None:
        cap = w
    if w == 0:
        yield ()
        return
    for first in range(min(w, cap), 0, -1):
        for rest in _strict_of_weight(w - first, first - 1):
            yield (first,) + rest


def enumerate_partitions(max_weight):
    """All ordinary partitions with 0 < weight <= max_weight, graded order."""
    out = []
    for w in range(1, max_weight + 1):
        out.extend(Partition(p) for p in _parts_of_weight(w))
    return out


def _parts_of_weight(w, cap=None):
    if cap is None:
        cap = w
    if w == 0:
        yield ()
        return
    for first in range(min(w, cap), 0, -1):
        for rest in _parts_of_weight(w - first, first):
            yield (first,) + rest


def conjugate(mu):
    """Transpose of the Young diagram."""
    parts = mu.parts
    if not parts:
        return ZERO_PARTITION
    return Partition(tuple(sum(1 for p in parts if p > j) for j in range(parts[0])))


def frobenius(mu):
    """Frobenius coordinates (alpha, beta) of an ordinary partition."""
    parts = mu.parts
    conj = conjugate(mu).parts
    alpha, beta = [], []
    for i in range(len(parts)):
        if parts[i] >= i + 1:
            alpha.append(parts[i] - (i + 1))
            beta.append(conj[i] - (i + 1))
        else:
            break
    return tuple(alpha), tuple(beta)


def from_frobenius(alpha, beta):
    """Reconstruct the partition with given Frobenius arms and legs."""
    r = len(alpha)
    if r != len(beta):
        raise ValueError("arm and leg lists must have equal length")
    if r == 0:
        return ZERO_PARTITION
    rows = [alpha[i] + (i + 1) for i in range(r)]
    # column j has length beta_j + j; rows below the diagonal read off from that
    max_len = beta[0] + 1
    parts = list(rows)
    for i in range(r, max_len):
        parts.append(sum(1 for b in range(r) if beta[b] + b >= i))
    return Partition(tuple(p for p in parts if p > 0))


def double(lam):
    """The double of a strict partition: Frobenius arms n_i, legs n_i - 1."""
    if lam.length == 0:
        raise ValueError("the zero partition has no double")
    alpha = lam.parts
    beta = tuple(n - 1 for n in lam.parts)
    return from_frobenius(alpha, beta)


SHIFTED_SYT_BOUND = 10


def shifted_cells(lam):
    """Cells of the shifted diagram: row i occupies columns i..i+n_i-1 (1-based)."""
    out = []
    for i, p in enumerate(lam.parts, start=1):
        for j in range(i, i + p):
            out.append((i, j))
    return out


def count_shifted_syt(lam, bound=SHIFTED_SYT_BOUND):
    """Number of standard fillings of the shifted diagram of lam.

    Brute force over all fillings, rows and columns strictly increasing.
    Used as an independent oracle against the shifted hook product.
    """
    n = lam.weight
    if n > bound:
        raise ValueError("weight %d above brute-force bound %d" % (n, bound))
    if n == 0:
        return 1
    cells = shifted_cells(lam)
    pos = {c: k for k, c in enumerate(cells)}
    # predecessors that must hold a smaller entry
    preds = []
    for (i, j) in cells:
        ps = []
        if (i, j - 1) in pos:
            ps.append(pos[(i, j - 1)])
        if (i - 1, j) in pos:
            ps.append(pos[(i - 1, j)])
        preds.append(ps)

    count = 0
    filling = [0] * n

    def place(value):
        nonlocal count
        if value > n:
            count += 1
            return
        for k in range(n):
            if filling[k] == 0 and all(filling[p] != 0 for p in preds[k]):
                filling[k] = value
                place(value + 1)
                filling[k] = 0

    place(1)
    return count


def count_distinct_part_partitions(max_weight):
    """Number of partitions of weight <= max_weight into distinct parts.

    Independent generating-function count: expand prod (1 + q^k).
    """
    coeffs = [Fraction(0)] * (max_weight + 1)
    coeffs[0] = Fraction(1)
    for k in range(1, max_weight + 1):
        for w in range(max_weight, k - 1, -1):
            coeffs[w] += coeffs[w - k]
    return int(sum(coeffs[1:]))

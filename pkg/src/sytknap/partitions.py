"""Integer partitions, Young-diagram geometry, and the partition families
that degree-sum identities range over.

Partitions are plain tuples of ints, weakly decreasing, with no trailing
zeros.  All functions here are pure and return deterministic (lexicographic
descending) orderings so downstream reports are byte-stable.
"""

Partition = tuple[int, ...]


def make_partition(parts) -> Partition:
    """Canonicalize a weakly decreasing integer sequence into a partition.

    Trailing zeros are trimmed; the empty tuple is the partition of 0.
    Raises ValueError on negative entries or out-of-order parts.
    """
    seq = list(parts)
    for p in seq:
        if not isinstance(p, int):
            raise ValueError(f"partition parts must be integers, got {p!r}")
        if p < 0:
            raise ValueError(f"partition parts must be nonnegative, got {p}")
    while seq and seq[-1] == 0:
        seq.pop()
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"parts are not weakly decreasing: {list(parts)!r}")
    return tuple(seq)


def pad(p: Partition, length: int) -> tuple[int, ...]:
    """Right-pad a partition with zeros (display helper)."""
    if length < len(p):
        raise ValueError(f"cannot pad {p} to {length} entries")
    return p + (0,) * (length - len(p))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row.

    The hook at (i, j) counts the cell itself plus the cells to its right
    and below: parts[i] + conj[j] - i - j - 1 with 0-based indices.
    """
    if not p:
        raise ValueError("hook lengths are defined for nonempty partitions")
    conj = conjugate(p)
    return [[p[i] + conj[j] - i - j - 1 for j in range(p[i])] for i in range(len(p))]


def branching_children(p: Partition) -> list[Partition]:
    """All partitions obtained by removing one removable corner cell.

    There is one child per distinct part value.  Sorted lex descending.
    """
    if not p:
        raise ValueError("the empty partition has no boxes to remove")
    children = []
    for i in range(len(p)):
        if i + 1 == len(p) or p[i] > p[i + 1]:
            child = list(p)
            child[i] -= 1
            if child[-1] == 0:
                child.pop()
            children.append(tuple(child))
    children.sort(reverse=True)
    return children


def add_rim_hooks(p: Partition, size: int) -> list[tuple[int, Partition]]:
    """All ways to add one connected rim hook of `size` cells, with sign.

    Works on first-column hook lengths (beta numbers): adding a rim hook of
    `size` cells increments exactly one beta number by `size`, and the sign
    (-1)**(rows spanned - 1) equals parity of the number of beta values
    jumped over.  Sorted lex descending by resulting partition.
    """
    if size < 1:
        raise ValueError("rim hook size must be positive")
    rows = len(p) + size
    beta = [(p[i] if i < len(p) else 0) + (rows - 1 - i) for i in range(rows)]
    beta_set = set(beta)
    out = []
    for b in beta:
        nb = b + size
        if nb in beta_set:
            continue
        jumped = sum(1 for c in beta if b < c < nb)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        shape = tuple(v - (rows - 1 - i) for i, v in enumerate(new_beta))
        out.append(((-1) ** jumped, make_partition(shape)))
    out.sort(key=lambda signed: signed[1], reverse=True)
    return out


def partitions(n: int, max_rows: int | None = None):
    """Yield the partitions of n (optionally with at most `max_rows` parts),
    in lexicographic descending order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    rows = n if max_rows is None else max_rows

    def rec(remaining, largest, rows_left):
        if remaining == 0:
            yield ()
            return
        if rows_left <= 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    yield from rec(n, n, rows)


def second_part_family(n: int, k: int, same_parity: bool = True) -> list[Partition]:
    """Three-part partitions of n whose second part is exactly k, filtered by
    whether the third part has the same parity as k.

    Zero third parts are allowed (stored canonically without the zero).
    Sorted by decreasing first part.  Empty when no such partition exists.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = []
    top = min(k, n - 2 * k)
    for third in range(0, top + 1):
        if (third % 2 == k % 2) == same_parity:
            out.append(make_partition((n - k - third, k, third)))
    return out


def fat_hook(a: int, b: int, t: int) -> Partition | None:
    """The shape (a, b, 1^t) as a partition, or None when it is not one."""
    if t < 0 or a < b or b < 0:
        return None
    if t == 0:
        return make_partition((a, b))
    if b < 1:
        return None
    return (a, b) + (1,) * t


def three_row(r: int, s: int, t: int) -> Partition | None:
    """The shape (r, s, t) as a partition, or None when it is not one."""
    if r >= s >= t >= 0:
        return make_partition((r, s, t))
    return None


def square_two_tail_partitions(n: int) -> list[Partition]:
    """The partitions (k, k, 2^(m-k)) of n = 2m with k in 2..m, lex descending.

    These are exactly the partitions of n fitting the 2x2 hook whose diagram
    is a k x 2 rectangle glued under a two-row top."""
    if n % 2:
        raise ValueError("the two-column square-tail family needs an even size")
    m = n // 2
    return [(k, k) + (2,) * (m - k) for k in range(m, 1, -1)]


def format_shape(p) -> str:
    """Render a shape compactly: runs of 1 as 1^t, longer runs as v^c.

    Zeros (from display padding) are printed verbatim; the empty partition
    renders as ().
    """
    parts = tuple(p)
    if not parts:
        return "()"
    pieces = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        v = parts[i]
        if v == 1 and run >= 2 or v >= 2 and run >= 3:
            pieces.append(f"{v}^{run}")
        else:
            pieces.extend([str(v)] * run)
        i = j
    return ",".join(pieces)


def parse_shape(text: str) -> Partition:
    """Parse comma-separated parts with optional ^ repetition, e.g. 5,5,1^10."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return ()
    parts: list[int] = []
    for token in stripped.split(","):
        token = token.strip()
        if "^" in token:
            base, _, rep = token.partition("^")
            count = int(rep)
            if count < 0:
                raise ValueError(f"negative repetition in shape: {text!r}")
            parts.extend([int(base)] * count)
        else:
            parts.append(int(token))
    return make_partition(parts)

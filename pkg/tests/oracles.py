"""Independent brute-force references used by the tests.

Nothing here imports the package's correlation or search code; sequences
are plain tuples of ints.
"""

import itertools


def pcf_ref(x, y, s):
    n = len(x)
    total = 0
    for k in range(n):
        total += x[k] * y[(k + s) % n]
    return total


def paf_ref(x, s):
    return pcf_ref(x, x, s)


def symmetric_ref(x):
    n = len(x)
    return all(x[k] == x[n - k] for k in range(1, n))


def williamson_ref(quad):
    n = len(quad[0])
    if not all(symmetric_ref(x) for x in quad):
        return False
    return all(sum(paf_ref(x, s) for x in quad) == 0 for s in range(1, n // 2 + 1))


def symmetric_tuples(n):
    """All symmetric sign tuples of length n, found by filtering all 2**n."""
    return [x for x in itertools.product((1, -1), repeat=n) if symmetric_ref(x)]


def brute_force_quads(n):
    """Every ordered symmetric quad of order n that satisfies the PAF criterion."""
    seqs = symmetric_tuples(n)
    return [q for q in itertools.product(seqs, repeat=4) if williamson_ref(q)]


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def circulant_ref(x):
    n = len(x)
    # each row is the previous row shifted right by one
    rows = [list(x)]
    for _ in range(n - 1):
        prev = rows[-1]
        rows.append([prev[-1]] + prev[:-1])
    return rows


def rows_orthogonal(m):
    size = len(m)
    for i in range(size):
        for j in range(size):
            dot = sum(m[i][k] * m[j][k] for k in range(size))
            if dot != (size if i == j else 0):
                return False
    return True


def to_str(x):
    return "".join("+" if v > 0 else "-" for v in x)

"""Independent reference implementations used only by the tests.

Each one is deliberately naive and shares no code with the package.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def naive_reduce(letters):
    """Free reduction by repeatedly deleting the first cancelling pair."""
    w = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                del w[i : i + 2]
                changed = True
                break
    return tuple(w)


def _det(m):
    """Exact determinant by Gaussian elimination over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] -= f * a[c][j]
    return int(det)


def determinantal_invariants(m):
    """Invariant factors as quotients of gcds of k x k minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, abs(_det([[m[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        divisors.append(g)
    inv = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    return inv + [0] * (min(rows, cols) - len(inv))


def naive_snf(m):
    """Smith normal form diagonal by elementary row and column operations.

    Moves the entry of smallest absolute value to the corner, clears its row
    and column by Euclidean steps, and fixes divisibility by adding rows.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                for j in range(t, cols):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                for i in range(t, rows):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                    None,
                )
                if bad is not None:
                    for j in range(t, cols):
                        a[t][j] += a[bad[0]][j]
                    done = False
        diag.append(abs(a[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


def perm_compose(p, q):
    return tuple(q[i] for i in p)


def perm_inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_eval(letters, images, degree):
    out = tuple(range(degree))
    for name, sign in letters:
        x = images[name]
        out = perm_compose(out, x if sign > 0 else perm_inverse(x))
    return out


def all_reduced_words(gens, max_len):
    """Every freely reduced word of length <= max_len, as letter tuples."""
    letters = [(g, s) for g in gens for s in (1, -1)]
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1][0] == x[0] and w[-1][1] == -x[1]:
                    continue
                nxt.append(w + (x,))
        out.extend(nxt)
        frontier = nxt
    return out

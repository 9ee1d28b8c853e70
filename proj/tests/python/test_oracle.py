"""Cross-language oracle: a small pure-python Smith normal form checked
against the extension on random matrices and random graph presentations."""

import random

import lpakit


def smith_diagonal(rows):
    """Invariant factors of an integer matrix, pure python."""
    m = [list(map(int, r)) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    out = []
    t = 0
    while t < nr and t < nc:
        # find the smallest nonzero entry of the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for r in m:
            r[t], r[j] = r[j], r[t]
        while True:
            changed = False
            for i in range(t + 1, nr):
                q = m[i][t] // m[t][t]
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                if m[i][t]:
                    m[t], m[i] = m[i], m[t]
                    changed = True
            if changed:
                continue
            for j in range(t + 1, nc):
                q = m[t][j] // m[t][t]
                if q:
                    for r in m:
                        r[j] -= q * r[t]
                if m[t][j]:
                    for r in m:
                        r[t], r[j] = r[j], r[t]
                    changed = True
            if changed:
                continue
            fixed = False
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if m[i][j] % m[t][t]:
                        m[t] = [a + b for a, b in zip(m[t], m[i])]
                        fixed = True
                        break
                if fixed:
                    break
            if not fixed:
                break
        out.append(abs(m[t][t]))
        t += 1
    return out


def factors_from_diagonal(diag, rows):
    nontrivial = [d for d in diag if d > 1]
    rank = rows - len([d for d in diag if d != 0])
    return rank, nontrivial


def test_snf_against_pure_python():
    rng = random.Random(20260811)
    for _ in range(300):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        d, u, v = lpakit.snf(rows)
        mine = [d[i][i] for i in range(min(nr, nc)) if d[i][i] != 0]
        theirs = [x for x in smith_diagonal(rows) if x != 0]
        assert mine == theirs
        grp = lpakit.cokernel(rows)
        rank, factors = factors_from_diagonal(smith_diagonal(rows), nr)
        assert grp["rank"] == rank
        assert grp["factors"] == [f for f in factors if f > 1]


def random_graph(rng, max_v, max_e):
    n = rng.randint(1, max_v)
    verts = [f"v{i}" for i in range(n)]
    edges = [
        (f"e{k}", rng.choice(verts), rng.choice(verts))
        for k in range(rng.randint(0, max_e))
    ]
    return lpakit.Graph(verts, edges)


def test_bf_against_pure_python():
    rng = random.Random(7)
    for _ in range(120):
        g = random_graph(rng, 5, 10)
        bfm = g.bf_matrix()
        grp = lpakit.bf(g)
        if not bfm or not bfm[0]:
            diag = []
        else:
            diag = smith_diagonal(bfm)
        rank, factors = factors_from_diagonal(diag, len(bfm))
        assert grp["rank"] == rank
        assert grp["factors"] == factors
        # the twisted group through the double cover, independently
        cover = g.double_cover()
        tw = lpakit.bf_twisted(g)
        cov = lpakit.bf(cover)
        assert tw["rank"] == cov["rank"]
        assert tw["factors"] == cov["factors"]

"""Brute-force reference values for corpus.json.

Independent of the Rust code: ranks by plain Gaussian elimination, every
invariant by enumerating all subsets. Run from this directory:

    python3 oracle.py > corpus.json
"""

import json
from collections import defaultdict, deque
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb


def parse_field(name):
    return None if name == "Q" else int(name[3:-1])


def rank_of_columns(matrix, cols, p):
    rows = [[Fraction(matrix[i][j]) if p is None else matrix[i][j] % p for j in cols] for i in range(len(matrix))]
    rank = 0
    width = len(cols)
    for c in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][c] if p is None else pow(rows[rank][c], p - 2, p)
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] * inv
                rows[r] = [a - f * b if p is None else (a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def graph_rank(edges, subset):
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            v = parent[v]
        return v

    r = 0
    for e in subset:
        a, b = find(edges[e][0]), find(edges[e][1])
        if a != b:
            parent[a] = b
            r += 1
    return r


def rank_function(desc):
    kind = desc["type"]
    if kind == "uniform":
        return desc["n"], lambda s: min(len(s), desc["r"])
    if kind == "graphic":
        edges = desc["edges"]
        return len(edges), lambda s: graph_rank(edges, s)
    if kind == "linear":
        p = parse_field(desc["field"])
        matrix = [[Fraction(x) for x in row] for row in desc["matrix"]]
        if p is not None:
            matrix = [[int(x) for x in row] for row in matrix]
        return len(matrix[0]), lambda s: rank_of_columns(matrix, sorted(s), p)
    raise ValueError(kind)


class M:
    def __init__(self, desc):
        self.n, rk = rank_function(desc)
        self.rank = {}
        for k in range(self.n + 1):
            for s in combinations(range(self.n), k):
                self.rank[frozenset(s)] = rk(s)
        self.r = self.rank[frozenset(range(self.n))]

    def subsets(self):
        return self.rank.items()

    def bases(self):
        return sorted(
            (tuple(sorted(s)) for s, v in self.subsets() if len(s) == self.r and v == self.r),
        )

    def circuits(self):
        out = []
        for s, v in self.subsets():
            if v == len(s) - 1 and all(self.rank[s - {e}] == len(s) - 1 for e in s):
                out.append(s)
        return out


def bi_json(poly):
    terms = sorted(((i, j, c) for (i, j), c in poly.items() if c != 0), reverse=True)
    return {"terms": [{"x": i, "y": j, "c": str(c)} for i, j, c in terms]}


def uni_json(poly):
    terms = sorted(((k, c) for k, c in poly.items() if c != 0), reverse=True)
    return {"terms": [{"x": k, "c": str(c)} for k, c in terms]}


def tutte(m):
    t = defaultdict(int)
    for s, v in m.subsets():
        t[(m.r - v, len(s) - v)] += 1
    # sum (x-1)^{r-rkA} (y-1)^{|A|-rkA}
    out = defaultdict(int)
    for (a, b), c in t.items():
        for i in range(a + 1):
            for j in range(b + 1):
                out[(i, j)] += c * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
    return dict(out)


def char_poly(m):
    chi = defaultdict(int)
    for s, v in m.subsets():
        chi[m.r - v] += (-1) ** len(s)
    return dict(chi)


def reduced(chi):
    # synthetic division by (u - 1)
    deg = max(k for k, c in chi.items() if c != 0)
    coeffs = [chi.get(k, 0) for k in range(deg + 1)]
    q = [0] * deg
    carry = 0
    for k in range(deg, 0, -1):
        carry = coeffs[k] + carry
        q[k - 1] = carry
    assert carry + coeffs[0] == 0
    return {k: c for k, c in enumerate(q)}


def h_poly(m):
    h = defaultdict(int)
    for s, v in m.subsets():
        h[(m.r - v, m.n - len(s) - (m.r - v))] += 1
    return dict(h)


def nbc_counts(m):
    circuits = m.circuits()
    broken = [c - {min(c)} for c in circuits]
    counts = [0] * (m.r + 1)
    sets = defaultdict(list)
    for s, v in m.subsets():
        if v == len(s) and not any(b <= s for b in broken):
            counts[len(s)] += 1
            sets[len(s)].append(tuple(sorted(s)))
    return counts, sets


def reduced_nbc(m):
    _, sets = nbc_counts(m)
    out = []
    for k in range(1, m.r):
        out.append(sorted(tuple(x for x in s if x != 0) for s in sets[k + 1] if 0 in s))
    return out


def white_connected(m, d):
    bases = [frozenset(b) for b in m.bases()]
    is_basis = set(bases)
    fibers = defaultdict(list)
    for ms in combinations_with_replacement(range(len(bases)), d):
        deg = [0] * m.n
        for i in ms:
            for e in bases[i]:
                deg[e] += 1
        fibers[tuple(deg)].append(ms)
    index = {b: i for i, b in enumerate(bases)}
    for members in fibers.values():
        seen = {members[0]}
        queue = deque([members[0]])
        while queue:
            v = queue.popleft()
            for i, j in combinations(range(d), 2):
                b1, b2 = bases[v[i]], bases[v[j]]
                for x in b1 - b2:
                    for y in b2 - b1:
                        c1, c2 = (b1 - {x}) | {y}, (b2 - {y}) | {x}
                        if c1 in is_basis and c2 in is_basis:
                            w = list(v)
                            w[i], w[j] = index[c1], index[c2]
                            w = tuple(sorted(w))
                            if w not in seen:
                                seen.add(w)
                                queue.append(w)
        if len(seen) != len(members):
            return False
    return True


def table(h, r, n):
    return [[str(h.get((p, q), 0)) for q in range(n - r + 1)] for p in range(r + 1)]


FANO = [[1, 0, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 1, 1, 0, 1]]
K4 = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
GENERIC_3X6 = [[1, 0, 0, 1, 1, "1/2"], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, -1, 5]]


def pg1(q):
    return [[1] * q + [0], list(range(q)) + [1]]


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def entry(name, desc, summary, extra=()):
    return {"name": name, "summary": summary, "descriptor": desc, "extras": list(extra)}


def build():
    entries = []
    for n in range(1, 5):
        entries.append(entry(f"boolean-{n}", {"type": "linear", "field": "Q", "matrix": identity(n + 1)},
                             f"coordinate arrangement in k^{n + 1}", ["boolean", "euler"]))
    entries += [
        entry("U12", {"type": "uniform", "r": 1, "n": 2}, "two parallel elements", ["euler"]),
        entry("U23", {"type": "uniform", "r": 2, "n": 3}, "three points on a line", ["euler"]),
        entry("U24", {"type": "uniform", "r": 2, "n": 4}, "four points on a line", ["euler", "white"]),
        entry("U36", {"type": "uniform", "r": 3, "n": 6}, "six generic points in the plane", []),
        entry("K4", {"type": "graphic", "edges": K4}, "cycle matroid of the complete graph on four vertices", ["white"]),
        entry("fano", {"type": "linear", "field": "GF(2)", "matrix": FANO}, "Fano plane over GF(2)",
              ["euler", "white", "fano"]),
        entry("PG(1,2)", {"type": "linear", "field": "GF(2)", "matrix": pg1(2)}, "points of the projective line over GF(2)", ["pg1"]),
        entry("PG(1,3)", {"type": "linear", "field": "GF(3)", "matrix": pg1(3)}, "points of the projective line over GF(3)", ["pg1"]),
        entry("PG(1,4)", {"type": "uniform", "r": 2, "n": 5}, "points of the projective line over GF(4), as U_{2,5}", ["pg1"]),
        entry("generic-3x5", {"type": "linear", "field": "Q", "matrix": [row[:5] for row in GENERIC_3X6]},
              "generic rational 3x5 matrix", ["euler"]),
        entry("generic-3x6", {"type": "linear", "field": "Q", "matrix": GENERIC_3X6},
              "generic rational 3x6 matrix", ["euler"]),
    ]
    out = []
    for e in entries:
        m = M(e["descriptor"])
        t = tutte(m)
        chi = char_poly(m)
        h = h_poly(m)
        nbc, _ = nbc_counts(m)
        red = reduced(chi)
        red_dims = [abs(red.get(m.r - 1 - k, 0)) for k in range(m.r)]
        extras = e["extras"]
        trivial_tutte = "boolean" in extras or e["name"] == "U12"
        expected = [
            {"quantity": "bases", "value": len(m.bases()), "provenance": "DERIVED", "note": "brute-force subset enumeration"},
            {"quantity": "tutte", "value": bi_json(t), "provenance": "TRIVIAL" if trivial_tutte else "DERIVED",
             "note": "corank-nullity subset sum"},
            {"quantity": "char_poly", "value": uni_json(chi), "provenance": "DERIVED", "note": "Whitney subset sum"},
            {"quantity": "reduced_char_poly", "value": uni_json(red), "provenance": "DERIVED", "note": "synthetic division by u - 1"},
            {"quantity": "h_polynomial", "value": bi_json(h), "provenance": "DERIVED", "note": "subset sum"},
            {"quantity": "os_dims", "value": nbc, "provenance": "DERIVED", "note": "nbc sets from brute-force circuits"},
        ]
        if "boolean" in extras:
            expected.append({"quantity": "reduced_os_dims", "value": [comb(m.n - 1, k) for k in range(m.r)],
                             "provenance": "PAPER", "note": "exterior algebra on the reduced lattice"})
            assert red_dims == [comb(m.n - 1, k) for k in range(m.r)]
        elif "pg1" in extras:
            expected.append({"quantity": "reduced_os_dims", "value": red_dims, "provenance": "PAPER",
                             "note": "degree one has dimension q"})
            assert red_dims[1] == m.n - 1
        elif "fano" in extras:
            expected.append({"quantity": "reduced_os_dims", "value": red_dims, "provenance": "PAPER",
                             "note": "reduced nbc monomials 1, 6, 8"})
            assert red_dims == [1, 6, 8]
            expected.append({"quantity": "reduced_nbc_sets",
                             "value": [[list(s) for s in level] for level in reduced_nbc(m)],
                             "provenance": "PAPER", "note": "S with S + 0 an nbc set, degree by degree"})
        else:
            expected.append({"quantity": "reduced_os_dims", "value": red_dims, "provenance": "DERIVED",
                             "note": "reduced characteristic polynomial"})
        if "euler" in extras:
            expected.append({"quantity": "euler_table", "value": table(h, m.r, m.n), "provenance": "DERIVED",
                             "note": "coefficient matrix of the subset-sum h polynomial"})
        if "white" in extras:
            expected.append({"quantity": "white_degree_3", "value": white_connected(m, 3), "provenance": "DERIVED",
                             "note": "breadth-first search over every fiber"})
        out.append({"name": e["name"], "summary": e["summary"], "descriptor": e["descriptor"], "expected": expected})
    return {"entries": out}


if __name__ == "__main__":
    print(json.dumps(build(), indent=1))

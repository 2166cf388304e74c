"""Finitely presented group machinery: free words, HLT coset enumeration
with coincidence merging, Smith normal form, abelianization, and
Reidemeister-Schreier subgroup presentations.

Words are tuples of nonzero signed 1-based generator indices; +k is the
k-th generator, -k its inverse.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

Word = tuple[int, ...]

DEFAULT_MAX_COSETS = 10**6


def free_reduce(w) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for g in w:
        if g == 0:
            raise ValueError("0 is not a generator letter")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def invert_word(w: Word) -> Word:
    return tuple(-g for g in reversed(w))


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relators: tuple[Word, ...]
    gen_names: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        relators = tuple(free_reduce(r) for r in self.relators)
        if any(not r for r in relators):
            raise ValueError("relators must be nonempty after free reduction")
        if any(abs(g) > self.ngens for r in relators for g in r):
            raise ValueError("relator uses an out-of-range generator")
        object.__setattr__(self, "relators", relators)
        if self.gen_names is not None and len(self.gen_names) != self.ngens:
            raise ValueError("gen_names length mismatch")

    def names(self) -> tuple[str, ...]:
        if self.gen_names is not None:
            return self.gen_names
        return tuple(chr(ord("a") + i) for i in range(self.ngens))


def quotient_by_normal_gens(p: Presentation, extra) -> Presentation:
    """Append the given words as relators (kill their normal closure)."""
    extra = tuple(free_reduce(w) for w in extra)
    if any(abs(g) > p.ngens for w in extra for g in w):
        raise ValueError("extra relator uses an out-of-range generator")
    return Presentation(p.ngens, p.relators + tuple(w for w in extra if w),
                        p.gen_names, p.name)


# -- word text format ------------------------------------------------------
#
# A word is written as juxtaposed factors, each a generator name optionally
# followed by ^exponent, or a parenthesized word with an exponent, e.g.
# "P^2 (R Q^2)^2 P^-2". Round-trips through format_word/parse_word.

_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_']*)|(\()|(\))|(\^-?\d+)|(\*|·))")


def parse_word(text: str, names) -> Word:
    index = {n: i + 1 for i, n in enumerate(names)}
    pos = 0

    def parse_seq(depth: int):
        nonlocal pos
        out: list[int] = []
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"cannot tokenize {text[pos:]!r}")
                break
            pos = m.end()
            name, lpar, rpar, caret, _dot = m.groups()
            if name:
                if name not in index:
                    raise ValueError(f"unknown generator {name!r} in {text!r}")
                out.extend(_with_exponent([index[name]]))
            elif lpar:
                inner = parse_seq(depth + 1)
                out.extend(_with_exponent(inner))
            elif rpar:
                if depth == 0:
                    raise ValueError(f"unbalanced ')' in {text!r}")
                return out
            elif caret:
                raise ValueError(f"dangling exponent in {text!r}")
        if depth != 0:
            raise ValueError(f"unbalanced '(' in {text!r}")
        return out

    def _with_exponent(base: list[int]) -> list[int]:
        nonlocal pos
        m = _TOKEN_RE.match(text, pos)
        if m and m.group(4):
            pos = m.end()
            e = int(m.group(4)[1:])
        else:
            e = 1
        if e < 0:
            base = [-g for g in reversed(base)]
            e = -e
        return base * e

    return free_reduce(parse_seq(0))


def format_word(w: Word, names) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        g = w[i]
        j = i
        while j < len(w) and w[j] == g:
            j += 1
        e = (j - i) if g > 0 else -(j - i)
        name = names[abs(g) - 1]
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(parts)


# -- Todd-Coxeter ----------------------------------------------------------

class _Overflow(Exception):
    pass


@dataclass
class CosetTable:
    """Standardized coset table; row 0 is the subgroup coset.

    ``table[alpha][col(g)]`` is the coset alpha.g; columns alternate
    generator / inverse: col(+k) = 2(k-1), col(-k) = 2(k-1)+1.
    """

    ngens: int
    table: list[list[int]] = field(default_factory=list)
    status: str = "complete"

    @property
    def index(self) -> int:
        return len(self.table)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def act(self, alpha: int, g: int) -> int:
        return self.table[alpha][_col(g)]

    def act_word(self, alpha: int, w: Word) -> int:
        for g in w:
            alpha = self.act(alpha, g)
        return alpha


def _col(g: int) -> int:
    return 2 * (abs(g) - 1) + (0 if g > 0 else 1)


def todd_coxeter(p: Presentation, subgens=(), max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """HLT coset enumeration of the subgroup generated by ``subgens``.

    Returns a complete standardized table, or a table with status
    "overflowed" once ``max_cosets`` cosets have been defined. Overflow is
    a status, not an error.
    """
    if max_cosets <= 0:
        raise ValueError("max_cosets must be positive")
    ncols = 2 * p.ngens
    table: list[list[int | None]] = [[None] * ncols]
    parent = [0]

    def rep(k: int) -> int:
        r = k
        while parent[r] != r:
            r = parent[r]
        while parent[k] != r:
            parent[k], k = r, parent[k]
        return r

    def define(alpha: int, c: int) -> int:
        if len(table) >= max_cosets:
            raise _Overflow
        beta = len(table)
        table.append([None] * ncols)
        parent.append(beta)
        table[alpha][c] = beta
        table[beta][c ^ 1] = alpha
        return beta

    def coincidence(a: int, b: int) -> None:
        q: deque[int] = deque()

        def merge(x: int, y: int) -> None:
            x, y = rep(x), rep(y)
            if x != y:
                x, y = min(x, y), max(x, y)
                parent[y] = x
                q.append(y)

        merge(a, b)
        while q:
            gamma = q.popleft()
            row = table[gamma]
            for c in range(ncols):
                delta = row[c]
                if delta is None:
                    continue
                row[c] = None
                table[delta][c ^ 1] = None
                mu, nu = rep(gamma), rep(delta)
                if table[mu][c] is not None:
                    merge(nu, table[mu][c])
                elif table[nu][c ^ 1] is not None:
                    merge(mu, table[nu][c ^ 1])
                else:
                    table[mu][c] = nu
                    table[nu][c ^ 1] = mu

    def scan_and_fill(alpha: int, w: Word) -> None:
        cols = [_col(g) for g in w]
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and table[f][cols[i]] is not None:
                f = table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][cols[j] ^ 1] is not None:
                b = table[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][cols[i]] = b
                table[b][cols[i] ^ 1] = f
                return
            f = define(f, cols[i])
            i += 1

    try:
        for w in subgens:
            scan_and_fill(rep(0), free_reduce(w))
        alpha = 0
        while alpha < len(table):
            if rep(alpha) == alpha:
                for r in p.relators:
                    scan_and_fill(alpha, r)
                    if rep(alpha) != alpha:
                        break
                if rep(alpha) == alpha:
                    for c in range(ncols):
                        if table[alpha][c] is None:
                            define(alpha, c)
            alpha += 1
    except _Overflow:
        return CosetTable(p.ngens, [], "overflowed")

    return _standardize(p.ngens, table, parent, rep)


def _standardize(ngens: int, table, parent, rep) -> CosetTable:
    """Renumber live cosets in breadth-first discovery order."""
    ncols = 2 * ngens
    start = rep(0)
    number = {start: 0}
    order = [start]
    qi = 0
    while qi < len(order):
        alpha = order[qi]
        qi += 1
        for c in range(ncols):
            beta = table[alpha][c]
            assert beta is not None, "incomplete row in completed table"
            beta = rep(beta)
            if beta not in number:
                number[beta] = len(order)
                order.append(beta)
    new_table = [[number[rep(table[alpha][c])] for c in range(ncols)] for alpha in order]
    return CosetTable(ngens, new_table, "complete")


# -- Smith normal form and abelianization ---------------------------------

def smith_normal_form(a):
    """Return (D, L, R) with L*a*R = D diagonal, divisibility chain,
    L and R unimodular. Input is a list of rows of ints (possibly empty).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    if any(len(row) != n for row in d):
        raise ValueError("ragged matrix")
    lmat = [[int(i == j) for j in range(m)] for i in range(m)]
    rmat = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        lmat[i] = [x - q * y for x, y in zip(lmat[i], lmat[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in d:
            row[i] -= q * row[j]
        for row in rmat:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        lmat[i], lmat[j] = lmat[j], lmat[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in rmat:
            row[i], row[j] = row[j], row[i]

    t = 0
    while True:
        # locate a pivot in the trailing submatrix
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        # clear row and column t; restart whenever a smaller remainder appears
        dirty = False
        for i in range(t + 1, m):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                row_op(i, t, q)
                if d[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                col_op(j, t, q)
                if d[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining submatrix by the pivot
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # fold the offending row into row t
            continue
        if d[t][t] < 0:
            row_op(t, t, 2)  # negate row t
        t += 1

    return d, lmat, rmat


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion divisors d1 | d2 | ... (all >= 2)."""

    rank: int
    torsion: tuple[int, ...]

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts) if parts else "trivial"


def exponent_matrix(p: Presentation):
    rows = []
    for r in p.relators:
        row = [0] * p.ngens
        for g in r:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class AbelianStructure:
    """SNF data for Z^ngens / rowspace(exponent matrix)."""

    ngens: int
    invariants: AbelianInvariants
    divisors: tuple[int, ...]   # per transformed coordinate; 0 means free
    rmat: tuple[tuple[int, ...], ...]

    def image(self, w: Word) -> tuple[int, ...]:
        v = [0] * self.ngens
        for g in w:
            v[abs(g) - 1] += 1 if g > 0 else -1
        coords = [sum(v[i] * self.rmat[i][j] for i in range(self.ngens))
                  for j in range(self.ngens)]
        return tuple(c % dv if dv else c for c, dv in zip(coords, self.divisors))


def derived_subgroup_table(p: Presentation) -> CosetTable:
    """Coset table of the commutator subgroup of ``p``.

    Built from the regular action of the abelianization rather than by
    enumeration: a word stabilizes the identity coset exactly when its
    exponent vector dies in the abelianization, i.e. exactly when it lies
    in the derived subgroup. Requires a finite abelianization.
    """
    struct = abelian_structure(p)
    if not struct.invariants.is_finite:
        raise ValueError("infinite abelianization: derived subgroup has infinite index")
    gen_imgs = [struct.image((g,)) for g in range(1, p.ngens + 1)]
    divisors = struct.divisors

    def step(a, b, sign):
        return tuple((x + sign * y) % dv
                     for x, y, dv in zip(a, b, divisors))

    zero = tuple(0 for _ in divisors)
    number = {zero: 0}
    order = [zero]
    table: list[list[int]] = []
    qi = 0
    while qi < len(order):
        a = order[qi]
        qi += 1
        row = []
        for k in range(p.ngens):
            for sign in (1, -1):
                b = step(a, gen_imgs[k], sign)
                if b not in number:
                    number[b] = len(order)
                    order.append(b)
                row.append(number[b])
        table.append(row)
    return CosetTable(p.ngens, table, "complete")


def abelian_structure(p: Presentation) -> AbelianStructure:
    a = exponent_matrix(p)
    if not a:
        a = [[0] * p.ngens]
    d, _l, r = smith_normal_form(a)
    diag = [d[i][i] for i in range(min(len(d), p.ngens))]
    divisors = tuple(diag + [0] * (p.ngens - len(diag)))
    rank = sum(1 for dv in divisors if dv == 0)
    torsion = tuple(dv for dv in divisors if dv >= 2)
    return AbelianStructure(
        p.ngens,
        AbelianInvariants(rank, torsion),
        divisors,
        tuple(tuple(row) for row in r),
    )


def abelianization(p: Presentation) -> AbelianInvariants:
    return abelian_structure(p).invariants


def abelian_image(w: Word, p: Presentation) -> tuple[int, ...]:
    """Image of w in the abelianization; all-zero iff w dies there."""
    return abelian_structure(p).image(free_reduce(w))


# -- Reidemeister-Schreier -------------------------------------------------

def reidemeister_schreier(p: Presentation, table: CosetTable) -> Presentation:
    """Presentation of the subgroup enumerated by ``table`` on Schreier
    generators, with tree generators eliminated."""
    if not table.complete:
        raise ValueError("coset table is not complete")
    index = table.index
    # BFS Schreier tree; tree edges give trivial Schreier generators
    seen = [False] * index
    seen[0] = True
    tree: set[tuple[int, int]] = set()   # (coset, positive generator)
    queue = deque([0])
    while queue:
        alpha = queue.popleft()
        for g in range(1, p.ngens + 1):
            for signed in (g, -g):
                beta = table.act(alpha, signed)
                if not seen[beta]:
                    seen[beta] = True
                    tree.add((alpha, g) if signed > 0 else (beta, g))
                    queue.append(beta)

    gen_index: dict[tuple[int, int], int] = {}
    for alpha in range(index):
        for g in range(1, p.ngens + 1):
            if (alpha, g) not in tree:
                gen_index[(alpha, g)] = len(gen_index) + 1

    def rewrite(alpha: int, w: Word) -> Word:
        out = []
        c = alpha
        for g in w:
            if g > 0:
                key = (c, g)
                c = table.act(c, g)
                if key in gen_index:
                    out.append(gen_index[key])
            else:
                c = table.act(c, g)
                key = (c, -g)
                if key in gen_index:
                    out.append(-gen_index[key])
        return free_reduce(out)

    relators = []
    seen_rel = set()
    for alpha in range(index):
        for r in p.relators:
            w = rewrite(alpha, r)
            if w and w not in seen_rel:
                seen_rel.add(w)
                relators.append(w)
    return Presentation(len(gen_index), tuple(relators))

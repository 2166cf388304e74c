"""Bounded bidirectional search expressing a target projective isometry as
a word in given generator matrices.

States are deduplicated by the canonical projective representative's exact
entry key, so two words meet iff they evaluate to the same element of
PU(2,1). Every returned word is re-verified by evaluation before return.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cxhyp import Mat, ProjIsom, canonical_rep, proj_eq
from .fpgroups import Word, free_reduce, invert_word


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int = 10
    max_coeff_bits: int = 512
    bidirectional: bool = True

    def __post_init__(self):
        if self.max_depth < 0 or self.max_coeff_bits <= 0:
            raise ValueError("search bounds must be positive")


@dataclass(frozen=True)
class SearchResult:
    word: Word | None
    depth_searched: int
    pruned_by_height: bool

    @property
    def found(self) -> bool:
        return self.word is not None


def evaluate(word: Word, gens: list[Mat]) -> Mat:
    d = gens[0].d
    m = Mat.identity(d, 3)
    for g in word:
        gen = gens[abs(g) - 1]
        m = m * (gen if g > 0 else gen.inverse())
    return m


def find_word(target: Mat | ProjIsom, gens: list[Mat], cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Minimal-length word over gens (and inverses) projectively equal to
    the target, within the depth and coefficient-height bounds."""
    if not gens:
        raise ValueError("generator list is empty")
    tmat = target.rep if isinstance(target, ProjIsom) else target
    if any(g.d != tmat.d for g in gens):
        raise ValueError("generators and target live over different rings")
    d = tmat.d

    moves: list[tuple[int, Mat]] = []
    for i, g in enumerate(gens, start=1):
        moves.append((i, g))
        moves.append((-i, g.inverse()))

    ident = Mat.identity(d, 3)
    target_key = canonical_rep(tmat).key()
    if canonical_rep(ident).key() == target_key:
        return SearchResult((), 0, False)

    # forward states: key(eval(w)) -> (w, matrix)
    fwd = {canonical_rep(ident).key(): ((), ident)}
    # backward states: key(target * eval(w)^-1) -> (w, matrix); the suffix w
    # grows by prepending letters, i.e. right-multiplying by a move inverse
    bwd = {target_key: ((), tmat)}

    pruned = False
    fwd_depth = bwd_depth = 0

    def expand(frontier: dict, forward: bool):
        nonlocal pruned
        new: dict = {}
        # insertion order of dicts plus sorted moves gives the lexicographic
        # tie-break among equal-length words
        for _key, (w, m) in sorted(frontier.items(), key=lambda kv: kv[1][0]):
            for g, gm in moves:
                if forward:
                    nm = m * gm
                    nw = w + (g,)
                    if nw != free_reduce(nw):
                        continue
                else:
                    nm = m * _inv_cache(gens, g)
                    nw = (g,) + w
                    if nw != free_reduce(nw):
                        continue
                if nm.max_coeff_bits() > cfg.max_coeff_bits:
                    pruned = True
                    continue
                key = canonical_rep(nm).key()
                if key not in new:
                    new[key] = (nw, nm)
        return new

    frontier_fwd, frontier_bwd = dict(fwd), dict(bwd)
    while fwd_depth + bwd_depth < cfg.max_depth:
        meet = _best_meet(fwd, bwd)
        if meet is not None:
            return _verified(meet, gens, tmat, fwd_depth + bwd_depth, pruned)
        if not cfg.bidirectional or (fwd_depth <= bwd_depth and frontier_fwd) or not frontier_bwd:
            frontier_fwd = expand(frontier_fwd, forward=True)
            fwd_depth += 1
            for k, v in frontier_fwd.items():
                fwd.setdefault(k, v)
        else:
            frontier_bwd = expand(frontier_bwd, forward=False)
            bwd_depth += 1
            for k, v in frontier_bwd.items():
                bwd.setdefault(k, v)
        if not frontier_fwd and not frontier_bwd:
            break

    meet = _best_meet(fwd, bwd)
    if meet is not None:
        return _verified(meet, gens, tmat, fwd_depth + bwd_depth, pruned)
    return SearchResult(None, fwd_depth + bwd_depth, pruned)


def _inv_cache(gens, g: int) -> Mat:
    # inverse of the move letter g, for backward extension
    m = gens[abs(g) - 1]
    return m.inverse() if g > 0 else m


def _best_meet(fwd: dict, bwd: dict) -> Word | None:
    """Shortest (then lexicographically least) joined word over all meets."""
    best: Word | None = None
    small, large, fwd_is_small = (fwd, bwd, True) if len(fwd) <= len(bwd) else (bwd, fwd, False)
    for key, (w, _m) in small.items():
        other = large.get(key)
        if other is None:
            continue
        word = free_reduce((w + other[0]) if fwd_is_small else (other[0] + w))
        if best is None or (len(word), word) < (len(best), best):
            best = word
    return best


def _verified(word: Word, gens, tmat: Mat, depth: int, pruned: bool) -> SearchResult:
    assert proj_eq(evaluate(word, gens), tmat), "search returned an unsound word"
    return SearchResult(word, depth, pruned)


def conjugate_membership(g: Mat, h: Mat, subgens: list[Mat], cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Word w over subgens with eval(w) projectively equal to g^-1 h g."""
    return find_word(g.inverse() * h * g, subgens, cfg)

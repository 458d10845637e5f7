"""Quasiconvex minimax programs in a few dimensions.

A program asks for ``min_x max_i f_i(x)`` over a box, where every ``f_i`` is a
*capped convex* function ``min(cap_i, g_i(x))``.  Such functions are
quasiconvex, and the problem is LP-type with combinatorial dimension at most
``2d + 1``.  Three solvers are provided:

* :func:`solve_small` solves a short explicit list directly with a deep-cut
  ellipsoid method, followed by lexicographic refinement so that ties among
  optimal points resolve to a canonical choice;
* :func:`solve_explicit` runs randomized incremental passes that re-solve a
  basis plus one violated constraint at a time;
* :func:`solve_implicit` handles constraint families generated from a ground
  set.  It solves a growing working set explicitly and uses a decision oracle
  plus a splitter to find violated constraints, descending only into parts
  the current solution violates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

import numpy as np

from . import _pure
from ._backend import kernels
from .geometry import TAU_ABS, tol

ACTIVE_REL = 1e-7  # constraints this close to y count as active
LEX_REL = 1e-10
XTOL_REL = 1e-11
MAX_PASSES = 64


class ContractViolationError(ValueError):
    """A user-supplied splitter or generator broke its contract."""


class QcConstraint:
    """Capped convex constraint ``f(x) = min(cap, g(x))``.

    ``g`` must be convex; ``subgradient`` returns one of its subgradients and is
    approximated by central differences when omitted.  ``tag`` identifies the
    constraint for de-duplication (defaults to object identity).
    """

    __slots__ = ("g", "_sub", "cap", "tag")

    def __init__(self, g: Callable, subgradient: Callable | None = None,
                 cap: float = math.inf, tag: Hashable | None = None):
        self.g = g
        self._sub = subgradient
        self.cap = float(cap)
        self.tag = tag

    @property
    def key(self):
        return self.tag if self.tag is not None else id(self)

    def convex(self, x) -> float:
        return float(self.g(x))

    def value(self, x) -> float:
        return min(self.cap, self.convex(x))

    def subgradient(self, x) -> list[float]:
        if self._sub is not None:
            return [float(v) for v in self._sub(x)]
        x = [float(v) for v in x]
        out = []
        for j in range(len(x)):
            h = 1e-7 * (1.0 + abs(x[j]))
            xp, xm = x[:], x[:]
            xp[j] += h
            xm[j] -= h
            out.append((self.convex(xp) - self.convex(xm)) / (2.0 * h))
        return out

    def __repr__(self):
        return f"{type(self).__name__}(tag={self.tag!r}, cap={self.cap})"


class NormSumConstraint(QcConstraint):
    """``min(cap, sum_t w_t * |M_t x + c_t|)`` with 2-row matrices ``M_t``.

    Every travel-time constraint in this package has this form, which lets
    the solvers evaluate many of them at once and hand them to the compiled
    kernel.
    """

    __slots__ = ("weights", "mats", "offsets")

    def __init__(self, weights, mats, offsets, cap: float = math.inf, tag: Hashable | None = None):
        self.weights = np.asarray(weights, dtype=float).reshape(-1)
        self.mats = np.asarray(mats, dtype=float).reshape(len(self.weights), 2, -1)
        self.offsets = np.asarray(offsets, dtype=float).reshape(len(self.weights), 2)
        if np.any(self.weights < 0):
            raise ValueError("norm-sum weights must be nonnegative")
        super().__init__(self._g, self._grad, cap, tag)

    @property
    def dim(self) -> int:
        return self.mats.shape[2]

    def _g(self, x):
        r = self.mats @ np.asarray(x, dtype=float) + self.offsets
        return float(self.weights @ np.hypot(r[:, 0], r[:, 1]))

    def _grad(self, x):
        r = self.mats @ np.asarray(x, dtype=float) + self.offsets
        nr = np.hypot(r[:, 0], r[:, 1])
        safe = np.where(nr > 0, nr, 1.0)
        coef = np.where(nr > 0, self.weights / safe, 0.0)
        return np.einsum("t,tk,tkj->j", coef, r, self.mats)


@dataclass(frozen=True)
class QcProgram:
    constraints: Sequence[QcConstraint]
    dim: int
    box: tuple[Sequence[float], Sequence[float]]


@dataclass(frozen=True)
class ImplicitQcProgram:
    """Constraints given implicitly by a ground set.

    ``generator(subset)`` lists the constraints of a subset, ``decision(subset,
    x, y)`` tells whether all of them are at most ``y`` at ``x`` and
    ``splitter(subset)`` returns parts each holding at most ``ceil(alpha *
    |subset|)`` items (and strictly fewer than the subset).  Every constraint
    of a subset must be a constraint of some part.
    """

    ground: Sequence[Any]
    generator: Callable
    decision: Callable
    splitter: Callable
    dim: int
    box: tuple[Sequence[float], Sequence[float]]
    alpha: float = 2.0 / 3.0
    base_size: int = 6


@dataclass(frozen=True)
class SolveResult:
    x: tuple[float, ...]
    y: float
    basis: tuple[QcConstraint, ...]
    stats: dict = field(default_factory=dict, compare=False)


# -- helpers -----------------------------------------------------------------


def _box(box, dim):
    lo = [float(v) for v in box[0]]
    hi = [float(v) for v in box[1]]
    if len(lo) != dim or len(hi) != dim:
        raise ValueError(f"box must have {dim} lower and upper bounds")
    for l, h in zip(lo, hi):
        if not (math.isfinite(l) and math.isfinite(h)) or l > h:
            raise ValueError("box bounds must be finite with lo <= hi")
    return lo, hi


def _xtol(lo, hi):
    return XTOL_REL * max(max((h - l for l, h in zip(lo, hi)), default=0.0), 1e-300)


class _Packed:
    """Norm-sum constraints stacked into padded arrays."""

    def __init__(self, cons: Sequence[NormSumConstraint]):
        K = len(cons)
        T = max(len(c.weights) for c in cons)
        d = cons[0].dim
        self.W = np.zeros((K, T))
        self.M = np.zeros((K, T, 2, d))
        self.C = np.zeros((K, T, 2))
        self.CAP = np.empty(K)
        for k, c in enumerate(cons):
            t = len(c.weights)
            self.W[k, :t] = c.weights
            self.M[k, :t] = c.mats
            self.C[k, :t] = c.offsets
            self.CAP[k] = c.cap

    def values(self, x) -> np.ndarray:
        r = self.M @ np.asarray(x, dtype=float) + self.C
        g = np.einsum("kt,kt->k", self.W, np.hypot(r[..., 0], r[..., 1]))
        return np.minimum(self.CAP, g)


def _packable(cons, dim) -> bool:
    return bool(cons) and all(isinstance(c, NormSumConstraint) and c.dim == dim for c in cons)


def _evaluator(cons, dim):
    if _packable(cons, dim):
        return _Packed(cons).values
    return lambda x: np.array([c.value(x) for c in cons])


def _generic_probe(cons):
    def probe(x):
        vals = [c.value(x) for c in cons]
        i = int(np.argmax(vals))
        return vals[i], cons[i].convex(x), cons[i].subgradient(x)

    return probe


def _minimax(cons, dim, lo, hi, lex):
    xtol = _xtol(lo, hi)
    if _packable(cons, dim):
        p = _Packed(cons)
        x, y = kernels.minimax_normsum(p.W, p.M, p.C, p.CAP, np.asarray(lo), np.asarray(hi),
                                       xtol, lex, LEX_REL, 0)
        return [float(v) for v in x], float(y)
    x, y = _pure.ellipsoid_minimax(_generic_probe(cons), lo, hi, xtol, lex, LEX_REL, 0)
    return x, float(y)


def _active_tol(y):
    return max(TAU_ABS, ACTIVE_REL * abs(y))


def solve_small(constraints: Sequence[QcConstraint], dim: int, box, lexicographic: bool = True,
                prune: bool = True) -> SolveResult:
    """Solve a short explicit program directly.

    The basis returned is a subset of the constraints with the same optimum
    (value and, when ``lexicographic``, point).  The active constraints are
    tried first; a capped constraint sitting at its cap can owe its value to
    constraints that are not active, so the active set is only accepted after
    re-solving it.  With no constraints the lexicographically smallest box
    corner is returned with ``y = 0``.
    """
    lo, hi = _box(box, dim)
    cons = list(constraints)
    if not cons:
        return SolveResult(tuple(lo), 0.0, ())
    x, y = _minimax(cons, dim, lo, hi, lexicographic)
    vals = _evaluator(cons, dim)(x)
    y = float(vals.max())
    basis = cons
    if prune:
        basis = _basis(cons, vals, dim, lo, hi, x, y, lexicographic)
    return SolveResult(tuple(x), y, tuple(basis))


def _basis(cons, vals, dim, lo, hi, x, y, lex):
    at = _active_tol(y)
    xeps = 1e-6 * max(h - l for l, h in zip(lo, hi)) if lex else math.inf

    def same(trial):
        xt, yt = _minimax(trial, dim, lo, hi, lex)
        return yt >= y - at and max(abs(a - b) for a, b in zip(xt, x)) <= xeps

    order = np.argsort(-vals, kind="stable")
    active = [cons[i] for i in order if vals[i] >= y - at]
    if len(active) == len(cons):
        keep = active
    elif same(active):
        keep = active
    else:
        # drop inactive constraints one at a time, least binding first
        keep = [cons[i] for i in order]
        for c in [cons[i] for i in order[::-1] if vals[i] < y - at]:
            trial = [k for k in keep if k is not c]
            if same(trial):
                keep = trial
    if len(keep) > 2 * dim + 1:
        for c in list(keep)[::-1]:
            if len(keep) <= 2 * dim + 1:
                break
            trial = [k for k in keep if k is not c]
            if same(trial):
                keep = trial
    return keep


def _dedupe(cons):
    seen, out = set(), []
    for c in cons:
        k = c.key
        if k not in seen:
            seen.add(k)
            out.append(c)
    return out


def _incremental(cons, dim, lo, hi, rng, stats, start=()):
    """Passes of "add the first violated constraint and re-solve" until stable."""
    cons = _dedupe(cons)
    if not cons:
        return SolveResult(tuple(lo), 0.0, ())
    values = _evaluator(cons, dim)
    index = {c.key: i for i, c in enumerate(cons)}
    order = rng.permutation(len(cons))
    seed_set = [c for c in start if c.key in index] or [cons[order[0]]]
    res = solve_small(seed_set, dim, (lo, hi))
    stats["base_solves"] = stats.get("base_solves", 0) + 1
    for _ in range(MAX_PASSES):
        changed = False
        vals = values(res.x)
        pos = 0
        while pos < len(order):
            bad = np.flatnonzero(vals[order[pos:]] > res.y + tol(res.y))
            if not len(bad):
                break
            k = pos + int(bad[0])
            h = cons[order[k]]
            res = solve_small(list(res.basis) + [h], dim, (lo, hi))
            stats["base_solves"] = stats.get("base_solves", 0) + 1
            vals = values(res.x)
            changed = True
            pos = k + 1
        if not changed:
            break
    y = float(values(res.x).max())
    return SolveResult(res.x, max(res.y, y), res.basis)


def _greedy(cons, dim, lo, hi, start, stats, max_iter=200):
    """Pivot on the most violated constraints of ``cons``, starting from ``start``."""
    values = _evaluator(cons, dim)
    cur = _dedupe(start)
    for _ in range(max_iter):
        res = solve_small(cur, dim, (lo, hi))
        stats["base_solves"] = stats.get("base_solves", 0) + 1
        vals = values(res.x)
        bad = np.flatnonzero(vals > res.y + tol(res.y))
        if not len(bad):
            return SolveResult(res.x, max(res.y, float(vals.max())), res.basis)
        top = bad[np.argsort(-vals[bad], kind="stable")][:dim + 1]
        cur = _dedupe(list(res.basis) + [cons[i] for i in top])
    return None


def solve_explicit(program: QcProgram, seed: int = 0) -> SolveResult:
    """Randomized incremental solve of an explicitly listed program."""
    lo, hi = _box(program.box, program.dim)
    stats: dict = {}
    rng = np.random.default_rng(seed)
    res = _incremental(list(program.constraints), program.dim, lo, hi, rng, stats)
    return SolveResult(res.x, res.y, res.basis, stats)


def solve_implicit(program: ImplicitQcProgram, seed: int = 0) -> SolveResult:
    """Solve a program whose constraints are generated from a ground set.

    Constraints are never enumerated wholesale.  The solver keeps a working
    set, solves it explicitly, and asks the decision oracle whether the
    result is feasible for the whole ground set.  If not, it descends through
    violated parts of the splitter (in random order) down to a base-size part
    and adds that part's violated constraints to the working set.  Each round
    adds at least one new constraint and raises the optimum, so the loop
    ends; a round costs a constant number of decision calls on geometrically
    shrinking parts.  Random choices use streams derived from
    ``(seed, round, descent path)``.
    """
    dim = program.dim
    lo, hi = _box(program.box, dim)
    stats: dict = {"base_solves": 0, "decisions": 0, "rounds": 0, "max_depth": 0}
    ground = list(program.ground)
    if not ground:
        return SolveResult(tuple(lo), 0.0, (), stats)
    alpha = program.alpha
    cap = 2 * dim + 1

    def parts_of(items):
        parts = [list(p) for p in program.splitter(list(items))]
        limit = math.ceil(alpha * len(items))
        for part in parts:
            if len(part) > limit or len(part) >= len(items):
                raise ContractViolationError(
                    f"splitter returned a part of size {len(part)} for {len(items)} items "
                    f"(limit {limit})")
        return parts

    def feasible(items, res):
        stats["decisions"] += 1
        return bool(program.decision(items, res.x, res.y + tol(res.y)))

    def violators(items, res, path):
        stats["max_depth"] = max(stats["max_depth"], len(path) - 1)
        if len(items) <= program.base_size:
            cons = list(program.generator(list(items)))
            if not cons:
                return []
            vals = _evaluator(cons, dim)(res.x)
            bad = np.flatnonzero(vals > res.y + tol(res.y))
            bad = bad[np.argsort(-vals[bad], kind="stable")][:cap]
            return [cons[i] for i in bad]
        parts = parts_of(items)
        rng = np.random.default_rng([seed, *path])
        for k in rng.permutation(len(parts)).tolist():
            if not feasible(parts[k], res):
                found = violators(parts[k], res, path + [k])
                if found:
                    return found
        return []

    rng = np.random.default_rng([seed])
    take = rng.permutation(len(ground))[:program.base_size]
    work = _dedupe(program.generator([ground[i] for i in sorted(take.tolist())]))
    res = _incremental(work, dim, lo, hi, rng, stats)
    for rnd in range(1, 1 << 20):
        if feasible(ground, res):
            break
        stats["rounds"] = rnd
        found = violators(ground, res, [rnd])
        keys = {c.key for c in work}
        found = [c for c in found if c.key not in keys]
        if not found:
            stats["unresolved"] = True  # oracle and explicit check disagree at tolerance level
            break
        work = work + found
        start = list(res.basis) + found
        res = (_greedy(work, dim, lo, hi, start, stats)
               or _incremental(work, dim, lo, hi, np.random.default_rng([seed, rnd]), stats, start))
    return SolveResult(res.x, res.y, res.basis, stats)

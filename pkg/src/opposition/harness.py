"""Exhaustive model checking over all small class-C structures.

Labelled partial orders on ``n`` points are grown one element at a time:
the new element is inserted with a down-closed set below it and an up-closed
set above it.  Each poset is crossed with every involution of the carrier and
filtered for the antitone law and a nonempty zero set (vectorised in numpy).
"""
from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .core import ClassCStructure, RawStructure, zero_indices
from .diagrams import (
    FORWARD,
    Claim,
    Hypothesis,
    Shape,
    admissible_points,
    expected_claims,
    relation_holds,
)
from .statements import abs_max, compound_reduction_equivalent, truth_with

__all__ = [
    "MAX_SIZE",
    "ClaimAggregate",
    "EnumerationConfig",
    "PropertyAggregate",
    "SweepReport",
    "Witness",
    "canonical_form",
    "enumerate_structures",
    "involutions",
    "labeled_posets",
    "sample_check_instance",
    "structures_of_size",
    "sweep_theorems",
]

MAX_SIZE = 6


@dataclass(frozen=True)
class EnumerationConfig:
    max_size: int
    up_to_isomorphism: bool = False
    hypothesis: Hypothesis = FORWARD
    shapes: tuple[Shape, ...] = (Shape.SQUARE,)
    abs_form: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if self.max_size > MAX_SIZE:
            raise ValueError(f"refusing to enumerate beyond n={MAX_SIZE}")
        object.__setattr__(self, "shapes", tuple(Shape(s) for s in self.shapes))


# ------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _poset_masks(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Labelled posets on n points as (down-masks, up-masks); bit j of down[i] means j <= i."""
    if n == 0:
        return (((), ()),)
    out = []
    for down, up in _poset_masks(n - 1):
        m = n - 1
        subsets = range(1 << m)
        members = [[i for i in range(m) if s >> i & 1] for s in subsets]
        downsets = [s for s in subsets if all(down[i] | s == s for i in members[s])]
        upsets = [s for s in subsets if all(up[i] | s == s for i in members[s])]
        bit = 1 << m
        for d in downsets:
            for u in upsets:
                if d & u or any(down[i] & d != d for i in members[u]):
                    continue
                new_down = tuple(down[i] | (bit if u >> i & 1 else 0) for i in range(m)) + (d | bit,)
                new_up = tuple(up[i] | (bit if d >> i & 1 else 0) for i in range(m)) + (u | bit,)
                out.append((new_down, new_up))
    return tuple(out)


def labeled_posets(n: int) -> np.ndarray:
    """All labelled partial orders on n points, shape (count, n, n), bool."""
    masks = _poset_masks(n)
    arr = np.zeros((len(masks), n, n), dtype=bool)
    for k, (down, _) in enumerate(masks):
        for j in range(n):
            for i in range(n):
                arr[k, i, j] = bool(down[j] >> i & 1)
    return arr


@lru_cache(maxsize=None)
def involutions(n: int) -> tuple[tuple[int, ...], ...]:
    """All self-inverse permutations of range(n), lexicographically sorted."""
    out = [p for p in itertools.permutations(range(n)) if all(p[p[i]] == i for i in range(n))]
    return tuple(out)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    inv = np.argsort(perms, axis=1)
    return perms, inv


def canonical_form(leq: np.ndarray, neg: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Lexicographically least (leq bits, neg) encoding over all relabellings.

    Returns the integer key and the permutation ``pi`` realising it: the
    canonical element ``a`` is the original element ``pi[a]``.
    """
    n = len(neg)
    perms, inv = _perm_tables(n)
    leq = np.asarray(leq, dtype=np.int64)
    neg = np.asarray(neg, dtype=np.int64)
    lp = leq[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    negp = np.take_along_axis(inv, neg[perms], axis=1)
    leq_weights = 1 << np.arange(n * n - 1, -1, -1, dtype=np.int64)
    neg_weights = 8 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = ((lp @ leq_weights) << (3 * n)) | (negp @ neg_weights)
    k = int(np.argmin(keys))
    return int(keys[k]), tuple(int(v) for v in perms[k])


def _labeled_tables(n: int) -> Iterator[tuple[np.ndarray, tuple[int, ...]]]:
    posets = labeled_posets(n)
    invs = involutions(n)
    idx = np.arange(n)
    ok = np.zeros((len(posets), len(invs)), dtype=bool)
    for j, sigma in enumerate(invs):
        s = np.array(sigma)
        swapped = posets[:, s][:, :, s].transpose(0, 2, 1)
        antitone = (posets == swapped).all(axis=(1, 2))
        has_zero = posets[:, s, idx].any(axis=1)
        ok[:, j] = antitone & has_zero
    for k, j in zip(*np.nonzero(ok)):
        yield posets[k], invs[j]


def _make(leq: np.ndarray, neg: Sequence[int], name: str) -> ClassCStructure:
    n = len(neg)
    raw = RawStructure(
        tuple(str(i + 1) for i in range(n)),
        tuple(tuple(bool(v) for v in row) for row in leq),
        tuple(int(v) for v in neg),
        name,
    )
    return ClassCStructure(raw.labels, raw.leq, raw.neg, name, zeros=zero_indices(raw))


def structures_of_size(n: int, up_to_isomorphism: bool = False) -> Iterator[ClassCStructure]:
    if not 1 <= n <= MAX_SIZE:
        raise ValueError(f"size must be between 1 and {MAX_SIZE}")
    if not up_to_isomorphism:
        for k, (leq, neg) in enumerate(_labeled_tables(n)):
            yield _make(leq, neg, f"n{n}-{k:06d}")
        return
    seen: set[int] = set()
    k = 0
    for leq, neg in _labeled_tables(n):
        key, pi = canonical_form(leq, neg)
        if key in seen:
            continue
        seen.add(key)
        pi_a = np.array(pi)
        inv = np.argsort(pi_a)
        cleq = leq[pi_a][:, pi_a]
        cneg = [int(inv[neg[pi[a]]]) for a in range(n)]
        yield _make(cleq, cneg, f"iso{n}-{k:05d}")
        k += 1


def enumerate_structures(cfg: EnumerationConfig) -> Iterator[ClassCStructure]:
    """Every class-C structure on 1..max_size points, size by size."""
    for n in range(1, cfg.max_size + 1):
        yield from structures_of_size(n, cfg.up_to_isomorphism)


# ------------------------------------------------------------------ sweeps


@dataclass(frozen=True)
class Witness:
    structure: ClassCStructure = field(compare=False)
    name: str
    point: tuple

    def label(self) -> str:
        s = self.structure
        if s is None:
            return f"{self.name}:{self.point}"
        p, q = self.point
        return f"{self.name}:P={s.labels[p]},Q={s.labels[q]}"


@dataclass
class ClaimAggregate:
    shape: str
    claim: Claim
    structures: int = 0
    nonvacuous: int = 0
    admissible_points: int = 0
    violating_points: int = 0
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def key(self) -> str:
        return f"{self.shape}:{self.claim}"


@dataclass
class PropertyAggregate:
    name: str
    checked: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)


@dataclass
class SweepReport:
    title: str
    counts: dict[int, int] = field(default_factory=dict)
    claims: list[ClaimAggregate] = field(default_factory=list)
    properties: dict[str, PropertyAggregate] = field(default_factory=dict)
    metrics: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def violations(self) -> int:
        return sum(c.violating_points for c in self.claims)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and all(p.failures == 0 for p in self.properties.values())

    def claim(self, key: str) -> ClaimAggregate:
        for c in self.claims:
            if c.key == key or str(c.claim) == key:
                return c
        raise KeyError(key)

    def summary(self) -> dict:
        """Machine-readable summary; excludes wall time so reruns compare equal."""
        return {
            "title": self.title,
            "counts": {str(k): v for k, v in self.counts.items()},
            "claims": [
                {
                    "shape": c.shape,
                    "claim": str(c.claim),
                    "structures": c.structures,
                    "nonvacuous": c.nonvacuous,
                    "admissible_points": c.admissible_points,
                    "violating_points": c.violating_points,
                    "witnesses": [w.label() for w in c.witnesses[:20]],
                }
                for c in self.claims
            ],
            "properties": {
                k: {"checked": p.checked, "failures": p.failures, "witnesses": [str(w) for w in p.witnesses[:20]]}
                for k, p in self.properties.items()
            },
            "metrics": self.metrics,
            "notes": self.notes,
            "violations": self.violations,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True) + "\n"

    def to_text(self, include_timing: bool = False) -> str:
        lines = [f"# {self.title}"]
        for n, c in self.counts.items():
            lines.append(f"COUNT size={n} structures={c}")
        for c in self.claims:
            first = c.witnesses[0].label() if c.witnesses else "-"
            verdict = "violated" if c.violating_points else ("holds" if c.admissible_points else "vacuous")
            lines.append(
                f"SWEEP shape={c.shape} claim={c.claim} structures={c.structures} nonvacuous={c.nonvacuous} "
                f"points={c.admissible_points} violations={c.violating_points} "
                f"violating_structures={len(c.witnesses)} verdict={verdict} first_witness={first}"
            )
        for name, p in self.properties.items():
            first = str(p.witnesses[0]) if p.witnesses else "-"
            lines.append(f"PROPERTY {name} checked={p.checked} failures={p.failures} first_witness={first}")
        for k, v in sorted(self.metrics.items()):
            lines.append(f"METRIC {k}={v:.3e}")
        for note in self.notes:
            lines.append(f"NOTE {note}")
        lines.append(f"# total violations={self.violations} ok={self.ok}")
        if include_timing:
            lines.append(f"# wall_time={self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"


def _selected_claims(cfg: EnumerationConfig) -> list[tuple[str, Claim]]:
    out = []
    for shape in cfg.shapes:
        out += [(str(shape), c) for c in expected_claims(shape, cfg.hypothesis, cfg.abs_form)]
    return out


def _check_structure(s: ClassCStructure, claims: list[tuple[str, Claim]], h: Hypothesis):
    """Per-structure results: (points, violating list) per claim, plus |Q| property checks."""
    pts = admissible_points(s, h)
    abs_pts = [pt for pt in pts if abs_max(s, pt[1]) is not None]
    per_claim = []
    for _, claim in claims:
        use = abs_pts if claim.needs_abs else pts
        bad = [pt for pt in use if not claim.holds_at(s, *pt)]
        per_claim.append((len(use), bad))
    lemma_bad, reduction_bad, lemma_checked, reduction_checked = [], [], 0, 0
    n = len(s)
    for q in range(n):
        nq = s.neg[q]
        if not s.comparable(q, nq):
            continue
        lemma_checked += 1
        r = abs_max(s, q)
        # r is the unique upper bound inside {q, nq}; neg(r) is the lower one
        uppers = [x for x in {q, nq} if s.le(q, x) and s.le(nq, x)]
        if r is None or uppers != [r] or s.neg[r] not in (q, nq) or not (s.le(s.neg[r], q) and s.le(s.neg[r], nq)):
            lemma_bad.append(q)
        for p in range(n):
            reduction_checked += 1
            if not compound_reduction_equivalent(s, p, q):
                reduction_bad.append((p, q))
    return per_claim, (lemma_checked, lemma_bad), (reduction_checked, reduction_bad)


def _check_chunk(args):
    structures, claims, h = args
    return [_check_structure(s, claims, h) for s in structures]


def sweep_theorems(cfg: EnumerationConfig) -> SweepReport:
    start = time.perf_counter()
    claims = _selected_claims(cfg)
    mode = "isomorphism classes" if cfg.up_to_isomorphism else "labelled structures"
    shapes = ",".join(str(s) for s in cfg.shapes)
    title = (
        f"sweep max_size={cfg.max_size} ({mode}) shapes={shapes} hypothesis={cfg.hypothesis.flags()}"
        f"{' abs' if cfg.abs_form else ''}"
    )
    report = SweepReport(title)
    report.claims = [ClaimAggregate(shape, c) for shape, c in claims]
    lemma = report.properties["abs_lemma"] = PropertyAggregate("abs_lemma")
    reduction = report.properties["u_y_reduction"] = PropertyAggregate("u_y_reduction")
    structures = list(enumerate_structures(cfg))
    for s in structures:
        report.counts[len(s)] = report.counts.get(len(s), 0) + 1

    if cfg.workers > 1 and len(structures) > 1:
        size = math.ceil(len(structures) / (cfg.workers * 4))
        chunks = [structures[i : i + size] for i in range(0, len(structures), size)]
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = [r for part in pool.map(_check_chunk, [(c, claims, cfg.hypothesis) for c in chunks]) for r in part]
    else:
        results = _check_chunk((structures, claims, cfg.hypothesis))

    # merge in enumeration order so witnesses do not depend on partitioning
    for s, (per_claim, (lc, lb), (rc, rb)) in zip(structures, results):
        for agg, (npts, bad) in zip(report.claims, per_claim):
            agg.structures += 1
            agg.nonvacuous += npts > 0
            agg.admissible_points += npts
            agg.violating_points += len(bad)
            if bad:
                agg.witnesses.append(Witness(s, s.name, bad[0]))
        lemma.checked += lc
        lemma.failures += len(lb)
        lemma.witnesses += [f"{s.name}:Q={s.labels[q]}" for q in lb]
        reduction.checked += rc
        reduction.failures += len(rb)
        reduction.witnesses += [f"{s.name}:P={s.labels[p]},Q={s.labels[q]}" for p, q in rb]
    report.wall_time = time.perf_counter() - start
    return report


# ------------------------------------------------- sampled infinite instances


def _sample_claims(report: SweepReport, le, neg, points, label) -> None:
    """Evaluate the square claims at explicit sample points (already admissible)."""
    for claim in expected_claims(Shape.SQUARE):
        agg = ClaimAggregate("square", claim, structures=1, nonvacuous=int(bool(points)))
        for pt in points:
            s1, s2 = claim.pair
            agg.admissible_points += 1
            ok = relation_holds(claim.kind, truth_with(le, neg, s1, *pt), truth_with(le, neg, s2, *pt))
            if not ok:
                agg.violating_points += 1
                if not agg.witnesses:
                    agg.witnesses.append(Witness(None, label, pt))
        report.claims.append(agg)


def _prop(report: SweepReport, name: str) -> PropertyAggregate:
    return report.properties.setdefault(name, PropertyAggregate(name))


def _record(agg: PropertyAggregate, ok: bool, witness) -> None:
    agg.checked += 1
    if not ok:
        agg.failures += 1
        if len(agg.witnesses) < 20:
            agg.witnesses.append(witness)


def _matrix_sample(samples: int, seed: int, dim: int) -> SweepReport:
    from .instances.matrix import (
        MatrixOrderConfig,
        antisymmetry_witness,
        matrix_leq,
        matrix_neg,
        zero_discrepancy,
    )

    rng = np.random.default_rng(seed)
    cfg = MatrixOrderConfig(dim)
    report = SweepReport(f"sample matrix dim={dim} samples={samples} seed={seed}")

    def rand():
        return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))

    def above(a):
        # a + X with Hermitian part of X positive semidefinite
        g, k = rand(), rand()
        return a + (g @ g.conj().T) / 2 + (k - k.conj().T) / 2

    le = lambda x, y: matrix_leq(x, y, cfg)  # noqa: E731
    refl, trans, anti = _prop(report, "reflexive"), _prop(report, "transitive"), _prop(report, "antitone")
    points = []
    for t in range(samples):
        a = rand()
        _record(refl, le(a, a), f"sample {t}")
        b = above(a)
        c = above(b)
        _record(trans, le(a, b) and le(b, c) and le(a, c), f"sample {t}")
        x = rand() if t % 2 else b
        _record(anti, le(a, x) == le(matrix_neg(x), matrix_neg(a)), f"sample {t}")
        # forward import at the zero matrix: P above 0 and nonzero
        p = above(np.zeros((dim, dim)))
        q = rand() if t % 3 else (above(p) if t % 2 else -above(p))
        points.append((p, q))
    _sample_claims(report, le, matrix_neg, points, f"matrix dim={dim}")

    wa, wb = antisymmetry_witness(dim, rng)
    found = le(wa, wb) and le(wb, wa) and not np.allclose(wa, wb)
    asym = _prop(report, "antisymmetry_witness_found")
    asym.checked = 1
    if not found:
        asym.failures = 1
    diff = wb - wa
    report.metrics["witness_skew_residual"] = float(np.abs(diff + diff.conj().T).max())
    report.notes.append("matrix order is a preorder: A<=B and B<=A whenever B-A is nonzero skew-Hermitian")
    one = MatrixOrderConfig(1)
    disc = zero_discrepancy(np.array([[1.0]]), one)
    if disc is not None:
        report.notes.append(
            "zero set: A=[[1]] satisfies neg(A)<=A (A+A^H=2 psd) but not A+A^H=0; following the former"
        )
    skew = 1j * np.eye(dim)
    zero = np.zeros((dim, dim))
    if le(skew, zero) and le(skew, matrix_neg(zero)) and le(zero, skew) and not np.allclose(skew, zero):
        report.notes.append(
            "P=iI is above the zero matrix yet P<=Q and P<=neg(Q) both hold at Q=0: the square needs antisymmetry"
        )
    return report


def _negation_sample(samples: int, seed: int, generator) -> SweepReport:
    from .instances.negation import NegationGenerator, fixed_point, strong_negation

    g = generator or NegationGenerator.power(2.0)
    rng = np.random.default_rng(seed)
    report = SweepReport(f"sample negation {g.name} grid={samples} seed={seed}")
    grid = np.linspace(0.0, 1.0, samples)
    nx = strong_negation(g, grid)
    nnx = strong_negation(g, nx)
    err = np.abs(nnx - grid)
    report.metrics["max_involution_error"] = float(err.max())
    inv = _prop(report, "involution")
    inv.checked = samples
    bad = np.nonzero(err > g.tolerance)[0]
    inv.failures = len(bad)
    inv.witnesses = [f"x={grid[i]:.6g}" for i in bad[:20]]
    bnd = _prop(report, "boundary")
    _record(bnd, strong_negation(g, 0.0) == 1.0, "neg(0) != 1")
    _record(bnd, strong_negation(g, 1.0) == 0.0, "neg(1) != 0")
    dec = _prop(report, "strictly_decreasing")
    dec.checked = samples - 1
    d_bad = np.nonzero(np.diff(nx) >= 0)[0]
    dec.failures = len(d_bad)
    dec.witnesses = [f"x={grid[i]:.6g}" for i in d_bad[:20]]
    xstar = fixed_point(g)
    report.metrics["fixed_point"] = xstar
    zer = _prop(report, "zero_set")
    zer.checked = samples
    z_bad = np.nonzero((nx <= grid) != (grid >= xstar))[0]
    zer.failures = len(z_bad)
    zer.witnesses = [f"x={grid[i]:.6g}" for i in z_bad[:20]]
    if np.array_equal(g.phi(grid), grid):
        report.metrics["max_deviation_from_1_minus_x"] = float(np.abs(nx - (1.0 - grid)).max())

    neg = lambda x: strong_negation(g, x)  # noqa: E731
    le = lambda x, y: x <= y  # noqa: E731
    ps = rng.uniform(xstar, 1.0, size=min(samples, 2000))
    ps = ps[ps > xstar]
    qs = rng.uniform(0.0, 1.0, size=len(ps))
    _sample_claims(report, le, neg, list(zip(ps.tolist(), qs.tolist())), g.name)
    return report


def sample_check_instance(instance: str, samples: int = 1000, seed: int = 0, **options) -> SweepReport:
    """Seeded sampled verification for the matrix and strong-negation carriers."""
    start = time.perf_counter()
    if instance == "matrix":
        report = _matrix_sample(samples, seed, options.get("dim", 2))
    elif instance == "negation":
        report = _negation_sample(samples, seed, options.get("generator"))
    else:
        raise ValueError(f"unknown instance {instance!r}; expected 'matrix' or 'negation'")
    report.wall_time = time.perf_counter() - start
    return report

"""Invariant sweeps shared by ``flagbundle verify`` and the acceptance tests.

Every check is exact. Root systems can be built from overridden Cartan
matrices so that a corrupted matrix can be fed through the same sweeps
(mutation smoke test).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from . import bottsam, bundle, cohom, lattice, reference, weyl
from .diagrams import DynkinDiagram, Matrix, all_diagrams, canonical_diagram, cartan_matrix, check_cartan, classify_cartan
from .errors import FlagBundleError
from .rootsys import RootSystem, b_coefficients, from_cartan, generate, highest_root, root_coroot_pairing


@dataclass
class VerifyConfig:
    rank_max: int = 4
    cohom_rank_max: int = 3
    cohom_bound: int = 2
    word_length_max: int = 4
    section_group_max: int = 1152
    enum_limit: int = 10**6
    cartan_overrides: dict[str, Matrix] = field(default_factory=dict)
    only: tuple[str, ...] | None = None

    def diagrams(self, max_rank: int | None = None) -> list[DynkinDiagram]:
        top = self.rank_max if max_rank is None else min(max_rank, self.rank_max)
        ds = all_diagrams(top, connected_only=True)
        if self.only is not None:
            ds = [d for d in ds if d.spec in self.only]
        return ds

    def cartan(self, d: DynkinDiagram) -> Matrix:
        return self.cartan_overrides.get(d.spec, cartan_matrix(d))

    def root_system(self, d: DynkinDiagram) -> RootSystem:
        if d.spec in self.cartan_overrides:
            return from_cartan(self.cartan_overrides[d.spec], d)
        return generate(d)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.failures) < 5:
            self.failures.append(msg)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}


def _guarded(res: CheckResult, label: str, fn: Callable[[], bool | None]) -> None:
    res.checked += 1
    try:
        ok = fn()
    except (FlagBundleError, ArithmeticError, AssertionError, ValueError) as exc:
        res.fail(f"{label}: {type(exc).__name__}: {exc}")
        return
    if ok is False:
        res.fail(label)


def check_cartan_invariants(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("cartan_invariants")
    for d in cfg.diagrams():
        def one(d=d):
            m = check_cartan(cfg.cartan(d))
            found, perm = classify_cartan(m)
            if found != canonical_diagram(d):
                return False
            c = cartan_matrix(found)
            return all(m[perm[i]][perm[j]] == c[i][j] for i in range(d.rank) for j in range(d.rank))
        _guarded(res, f"{d}", one)
    return res


def check_table1(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("table1_b_coefficients")
    for d in cfg.diagrams():
        _guarded(res, f"{d}", lambda d=d: b_coefficients(cfg.root_system(d)) == reference.reference_b(d))
    return res


def check_root_system(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("root_system")
    for d in cfg.diagrams():
        def one(d=d):
            rs = cfg.root_system(d)
            if rs.n_positive != reference.n_positive_roots(d):
                return False
            w0, _ = weyl.longest_element(rs, range(1, d.rank + 1))
            if w0.length != rs.n_positive:
                return False
            top = highest_root(d) if d.spec not in cfg.cartan_overrides else max(rs.positive_roots, key=sum)
            if not all(x >= 1 for x in top):
                return False
            return all(
                root_coroot_pairing(rs, ei, ej) == rs.cartan[i][j]
                for i, ei in enumerate(rs.positive_roots[: d.rank])
                for j, ej in enumerate(rs.positive_coroots[: d.rank])
            )
        _guarded(res, f"{d}", one)
    return res


def check_admissibility(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("admissibility_index")
    for d in cfg.diagrams():
        def one(d=d):
            adj = lattice.adjoint(d)
            sc = lattice.IsogenyLattice(d, cfg.cartan(d), lattice.SIMPLY_CONNECTED)
            return lattice.admissible_index(adj) == 1 and lattice.admissible_index(sc) == reference.cartan_determinant(d)
        _guarded(res, f"{d}", one)
    return res


def nonempty_subsets(k: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, k + 1):
        yield from itertools.combinations(range(1, k + 1), size)


def check_homogeneity(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("homogeneity_sweep")
    for d in cfg.diagrams():
        for I in nonempty_subsets(d.rank):
            def one(d=d, I=I):
                ok1 = bundle.homogeneity_inequality_1(d, I)
                ok2 = bundle.homogeneity_inequality_2(d, I)
                sols = bundle.unsplit_tag_solutions(d, I)
                return ok1 and ok2 and all(bundle.restricted_trivial(t, I) for t in sols)
            _guarded(res, f"{d} I={list(I)}", one)
    return res


def cohomology_consistent(rs: RootSystem, lam: tuple[int, ...]) -> str | None:
    """None when every Borel-Weil-Bott consistency property holds at ``lam``."""
    r = cohom.cohomology(rs, lam)
    chi = cohom.euler_characteristic(rs, lam)
    alt = 0 if r.all_zero else (-1) ** r.degree * r.dimension
    if alt != chi:
        return f"alternating sum {alt} != chi {chi}"
    if not r.all_zero and r.dimension <= 0:
        return "nonzero degree with nonpositive dimension"
    dual = cohom.cohomology(rs, cohom.serre_partner(lam))
    if r.all_zero != dual.all_zero:
        return "Serre duality breaks vanishing"
    if not r.all_zero and (dual.degree != rs.n_positive - r.degree or dual.dimension != r.dimension):
        return f"Serre duality: {r} vs {dual}"
    if not r.all_zero:
        for strategy in (cohom.last_negative, cohom.most_negative):
            other = cohom.cohomology(rs, lam, strategy)
            if other != r:
                return f"path dependence: {r} vs {other} ({strategy.__name__})"
    return None


def check_cohomology(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("cohomology")
    b = cfg.cohom_bound
    for d in cfg.diagrams(cfg.cohom_rank_max):
        rs = generate(d)
        for lam in itertools.product(range(-b, b + 1), repeat=d.rank):
            msg = cohomology_consistent(rs, lam)
            res.checked += 1
            if msg:
                res.fail(f"{d} {lam}: {msg}")
    return res


def check_weyl(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("weyl_longest_element")
    for d in cfg.diagrams():
        if reference.weyl_order(d) > cfg.enum_limit:
            continue

        def one(d=d):
            rs = cfg.root_system(d)
            dist = weyl.length_distribution(rs, cfg.enum_limit)
            if sum(dist) != reference.weyl_order(d) or len(dist) - 1 != rs.n_positive:
                return False
            w0, _ = weyl.longest_element(rs, range(1, d.rank + 1))
            return weyl.act_on_weight(w0, (2,) * d.rank) == (-2,) * d.rank
        _guarded(res, f"{d}", one)
    return res


def check_bott_samelson(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("bott_samelson")
    for d in cfg.diagrams(3):
        rs = generate(d)
        for n in range(cfg.word_length_max + 1):
            for word in itertools.product(range(1, d.rank + 1), repeat=n):
                dim = bottsam.image_dimension(rs, word)
                res.checked += 1
                if dim > n or (dim == n) != weyl.is_reduced(rs, word):
                    res.fail(f"{d} {word}")
    return res


def check_sections(cfg: VerifyConfig) -> CheckResult:
    res = CheckResult("fundamental_sections")
    for d in cfg.diagrams():
        if reference.weyl_order(d) > cfg.section_group_max:
            continue

        def one(d=d):
            model = bundle.FlagBundleModel(d, lattice.adjoint(d), tuple(range(1, d.rank + 1)))
            return section_properties(model) is None
        _guarded(res, f"{d}", one)
    return res


def section_properties(model: bundle.FlagBundleModel) -> str | None:
    """Count, antisymmetry and (for strictly dominant theta) uniqueness of the minimal section."""
    d = model.diagram
    rs = generate(d)
    elements = weyl.enumerate_elements(rs)
    if len(elements) != reference.weyl_order(d) or len(set(elements)) != len(elements):
        return "section count differs from |W|"
    index = {w: n for n, w in enumerate(elements)}
    degrees = [bundle.fundamental_section_degrees(model, w).degrees for w in elements]
    simple = [weyl.simple_reflection(rs, t) for t in range(1, d.rank + 1)]
    for n, w in enumerate(elements):
        for t in range(d.rank):
            partner = index[weyl.multiply(rs, w, simple[t])]
            if degrees[partner][t] != -degrees[n][t]:
                return f"antisymmetry fails at {w.word}, t={t + 1}"
    if all(x > 0 for x in model.theta):
        minimal = [elements[n] for n, deg in enumerate(degrees) if all(x >= 0 for x in deg)]
        if len(minimal) != 1 or minimal[0].length != 0:
            return f"{len(minimal)} minimal sections for strictly dominant theta"
    return None


CHECKS = (
    check_cartan_invariants,
    check_table1,
    check_root_system,
    check_admissibility,
    check_homogeneity,
    check_cohomology,
    check_weyl,
    check_bott_samelson,
    check_sections,
)


def run_checks(cfg: VerifyConfig) -> list[CheckResult]:
    return [check(cfg) for check in CHECKS]


def corrupt(m: Matrix, i: int, j: int, bit: int) -> Matrix:
    """Flip one bit (two's complement) of entry ``(i, j)``, 0-based."""
    rows = [list(r) for r in m]
    rows[i][j] ^= 1 << bit
    return tuple(tuple(r) for r in rows)


def seeded_corruption(seed: int, rank_max: int, bits: int = 3) -> tuple[str, Matrix]:
    rng = random.Random(seed)
    d = rng.choice(all_diagrams(rank_max, connected_only=True))
    i, j = rng.randrange(d.rank), rng.randrange(d.rank)
    return d.spec, corrupt(cartan_matrix(d), i, j, rng.randrange(bits))

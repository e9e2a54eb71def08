"""Acceptance suite: ten criteria, each printing one PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every check is exact (no tolerances); the stated runtime bounds are
asserted with time.monotonic.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from colorlie import lie
from colorlie.abgroup import GroupSpec
from colorlie.color import ColorAlgebra
from colorlie.cyclo import CycloScalar
from colorlie.errors import ValidationError
from colorlie.fileformat import emit_algebra_file
from colorlie.gradings import (Grading, induce_grading, is_coarsening,
                               standard_grading, validate_grading)
from colorlie.pairings import Cocycle, CommutationFactor, scheunert_sigma
from colorlie.pbw import check_scheunert_iso
from colorlie.pipeline import diamond_color_pipeline, lie_to_color

from conftest import DATA, load_algebra
from test_pairings import commutation_factor_family


@contextmanager
def criterion(number, label, budget):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        elapsed = time.monotonic() - start
        print(f"[criterion {number:2d}] {label}: FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.monotonic() - start
    verdict = "PASS" if elapsed < budget else "FAIL"
    print(f"[criterion {number:2d}] {label}: {verdict} "
          f"({elapsed:.2f}s, budget {budget}s)")
    assert elapsed < budget, f"runtime {elapsed:.2f}s exceeds {budget}s"


CATALOG = (["L5", "L6", "heisenberg(3)", "n(4)", "two_block(2,2)"]
           + [f"filiform({n})" for n in range(3, 9)])


def test_criterion_1_axiom_suite():
    with criterion(1, "axiom suite", 1.0):
        for name in CATALOG:
            assert lie_to_color(lie.catalog(name)).validate().ok, name
        colorh = load_algebra("color_heisenberg.alg").algebra
        assert colorh.validate().ok

        # five corrupted mutants, each failing with the right witness kind
        def rebuild(degrees=None, table=None, epsilon=None):
            return ColorAlgebra(colorh.group, colorh.order, colorh.dim,
                                degrees or colorh.degrees,
                                table if table is not None else colorh.table,
                                epsilon or colorh.epsilon)

        one = CycloScalar.one(colorh.order)

        # 1: break the grading
        degs = list(colorh.degrees)
        degs[2] = colorh.group.zero()
        rep = rebuild(degrees=tuple(degs)).validate()
        assert not rep.ok and any("degree" in v for v in rep.violations)

        # 2: break skew symmetry by negating one side of a pair
        t = {k: dict(v) for k, v in colorh.table.items()}
        (i, j) = next(iter(t))
        t[(i, j)] = {k: -c for k, c in t[(i, j)].items()}
        rep = rebuild(table=t).validate()
        assert not rep.ok and any("skew" in v for v in rep.violations)

        # 3: break Jacobi on L5: [e1, e3] = e3 makes [[e1,e2],e3] = 0 but
        # [e1,[e2,e3]] - [e2,[e1,e3]] = -e5
        g5 = lie_to_color(lie.l5())
        one5 = CycloScalar.one(g5.order)
        t5 = {k: dict(v) for k, v in g5.table.items()}
        t5[(0, 2)] = {2: one5}
        t5[(2, 0)] = {2: -one5}
        rep = ColorAlgebra(g5.group, g5.order, 5, g5.degrees, t5,
                           g5.epsilon).validate()
        assert not rep.ok and any("Jacobi" in v for v in rep.violations)

        # 4: wrong commutation factor for the same table
        eps_bad = CommutationFactor.trivial(colorh.group, colorh.order)
        rep = rebuild(epsilon=eps_bad).validate()
        assert not rep.ok

        # 5: drop a skew partner entirely
        t = {k: dict(v) for k, v in colorh.table.items()}
        (i, j) = next(k for k in t if (k[1], k[0]) in t)
        del t[(j, i)]
        rep = rebuild(table=t).validate()
        assert not rep.ok and any("skew" in v for v in rep.violations)


def test_criterion_2_scheunert_construction():
    with criterion(2, "Scheunert construction", 5.0):
        cases = [(GroupSpec(0, (2,)), 4), (GroupSpec(0, (2, 2)), 4),
                 (GroupSpec(0, (2, 3)), 12), (GroupSpec(1, (2,)), 4)]
        rng = random.Random(2)
        from colorlie.pairings import generator_closed_sample
        for group, N in cases:
            if group.is_finite():
                samples = list(group.elements())
                assert len(samples) <= 36
            else:
                samples = generator_closed_sample(group, rng, extra=12)
            for eps in commutation_factor_family(group, N):
                sigma = scheunert_sigma(eps)
                got = eps.product(sigma.delta())
                eps0 = eps.epsilon0()
                for a in samples:
                    for b in samples:
                        assert got(a, b) == eps0(a, b)


def test_criterion_3_scheunert_isomorphism():
    with criterion(3, "Scheunert isomorphism (Lemma 4)", 60.0):
        for name in ("color_heisenberg.alg", "super_odd.alg",
                     "super_heisenberg.alg"):
            L = load_algebra(name).algebra
            sigma = scheunert_sigma(L.epsilon)
            rep = check_scheunert_iso(L, sigma, 4)
            assert rep.ok, (name, rep.mismatch)

        # x . x = (1/2)[x, x] in U for the odd generator
        from colorlie.pbw import EnvelopingEngine, PBWElement
        sup = load_algebra("super_odd.alg").algebra
        eng = EnvelopingEngine(sup)
        x = PBWElement.generator(2, sup.order, 0)
        z = PBWElement.generator(2, sup.order, 1)
        half = CycloScalar.from_rational(sup.order, 1) / \
            CycloScalar.from_rational(sup.order, 2)
        assert eng.multiply(x, x) == z.scale(half)

        # 5-dimensional color algebra at degree 3
        c5 = load_algebra("color_l5.alg").algebra
        rep = check_scheunert_iso(c5, scheunert_sigma(c5.epsilon), 3)
        assert rep.ok, rep.mismatch


def test_criterion_4_twist_identities():
    with criterion(4, "twist identities", 30.0):
        from test_color import group_algebra_z2z2, regular_module
        G = GroupSpec(0, (2, 2))
        N = 4
        sigma = Cocycle.from_values(G, N, {(1, 0): -CycloScalar.one(N)})

        A = group_algebra_z2z2()
        assert A.twist(sigma).twist(sigma.inverse()).table == A.table
        assert A.twist(sigma).validate().ok  # twisted associativity

        M = regular_module(A)
        assert M.twist(sigma).twist(sigma.inverse()).same_tables(M)
        assert M.twist(sigma).validate().ok  # twisted module axiom

        g = G.element([1, 1])
        assert M.suspend(g).twist(sigma).isomorphic_by_degree_scaling(
            M.twist(sigma).suspend(g), lambda d: sigma(g, d))

        L = load_algebra("color_heisenberg.alg").algebra
        back = L.twist(sigma).twist(sigma.inverse())
        assert back.table == L.table
        assert back.epsilon.values == L.epsilon.values


def test_criterion_5_nilpotency_transfer():
    with criterion(5, "nilpotency transfer (Lemma 3)", 30.0):
        from test_color import test_nilpotency_transfer_corpus_pairs
        test_nilpotency_transfer_corpus_pairs()


def test_criterion_6_index_values():
    with criterion(6, "index values", 5.0):
        oracle = {"L5": 3, "L6": 4, "heisenberg(3)": 1, "n(4)": 2}
        oracle.update({f"filiform({n})": n - 2 for n in range(3, 9)})
        for name, want in oracle.items():
            g = lie.catalog(name)
            for seed in (1, 20210, 777):
                rep = lie.lie_index(g, seed=seed)
                assert rep.index == want, name
                assert all(r == rep.generic_rank
                           for r in rep.evaluation_ranks)


def test_criterion_7_diamond_decisions():
    with criterion(7, "diamond decisions (Thm 6 (iv))", 10.0):
        holds = (["L5", "L6", "two_block(2,2)"]
                 + [f"filiform({n})" for n in range(3, 9)])
        for name in holds:
            base = lie.catalog(name)
            for extra in range(4):
                g = base.direct_sum(lie.abelian(extra)) if extra else base
                v = lie.diamond_check(g)
                assert v.holds and v.routes_agree, (name, extra)
        for g in (lie.catalog("n(4)"),
                  lie.catalog("n(4)").direct_sum(lie.abelian(2))):
            v = lie.diamond_check(g)
            assert not v.holds and v.routes_agree


def test_criterion_8_color_pipeline():
    with criterion(8, "end-to-end color pipeline", 5.0):
        colorh = load_algebra("color_heisenberg.alg").algebra
        res = diamond_color_pipeline(colorh)
        assert res.verdict.holds
        assert res.even_part.descending_central_series().dims == (3, 1, 0)
        assert res.even_part.descending_central_series().dims == \
            lie.standard_filiform(3).descending_central_series().dims

        colorn4 = load_algebra("color_n4.alg").algebra
        res = diamond_color_pipeline(colorn4)
        assert not res.verdict.holds
        assert res.even_part.dim == 6


def test_criterion_9_gradings():
    with criterion(9, "gradings", 2.0):
        assert validate_grading(standard_grading("L6")).ok
        for n in range(3, 9):
            assert validate_grading(standard_grading(f"filiform({n})")).ok
        assert validate_grading(standard_grading("L5")).ok
        # the literal repeated degree list is incompatible
        G = GroupSpec(2)
        literal = [(0, 1), (0, 1), (1, 1), (2, 1), (1, 2)]
        bad = Grading(lie.l5(), G, tuple(G.element(d) for d in literal))
        rep = validate_grading(bad)
        assert not rep.ok
        assert any("b3" in v for v in rep.violations)

        from test_gradings import random_hom
        rng = random.Random(19)
        targets = [GroupSpec(1), GroupSpec(0, (2,)), GroupSpec(0, (2, 2)),
                   GroupSpec(1, (3,))]
        fine = standard_grading("L6")
        for _ in range(50):
            hom = random_hom(rng, fine.group, rng.choice(targets))
            coarse = induce_grading(fine, hom)
            assert is_coarsening(coarse, fine)


def test_criterion_10_determinism(tmp_path):
    with criterion(10, "deterministic JSON reports", 60.0):
        cmds = [
            ["--json", "--seed", "7", "diamond",
             f"{DATA}/color_heisenberg.alg"],
            ["--json", "--seed", "7", "diamond", f"{DATA}/color_n4.alg"],
            ["--json", "--seed", "7", "index", f"{DATA}/l6.alg"],
            ["--json", "--seed", "7", "pbw-check", f"{DATA}/super_odd.alg",
             "--max-degree", "3"],
            ["--json", "--seed", "7", "verify", f"{DATA}/color_l5.alg"],
        ]
        outputs = []
        for _ in range(2):
            chunks = []
            for cmd in cmds:
                proc = subprocess.run(
                    [sys.executable, "-m", "colorlie.cli"] + cmd,
                    capture_output=True, text=True)
                assert proc.returncode in (0, 1), proc.stderr
                json.loads(proc.stdout)  # must be valid JSON
                chunks.append(proc.stdout)
            outputs.append("".join(chunks))
        assert outputs[0] == outputs[1]

"""End-to-end acceptance gate.

Each criterion prints one machine-readable line

    ACCEPTANCE <n>: PASS|FAIL - <detail>

directly to the terminal (bypassing capture) before asserting, so every
criterion reports its verdict even when another one is red.

Known red: criterion 2 requires the rank-2 operator formula to match the
brute-force enumerator for all regular weights, and G2 genuinely fails
whenever the first label is positive.  The failure is in the formula being
tested, not in the enumerator; see /root/notes/decisions.md for the
analysis.  The assert is kept strict on purpose.
"""

import time
from functools import lru_cache
from itertools import product
from random import Random

from polychar import (
    DEFAULT_SEED,
    FormalSum,
    apply_D_simple,
    apply_d_root,
    apply_r_simple,
    apply_word,
    build_root_system,
    character_demazure,
    character_demazure_sum,
    character_freudenthal,
    longest_element_via_gammas,
    numeric_formula_check,
    polytope_expansion,
    polytope_sum_a3,
    polytope_sum_oracle,
    polytope_sum_rank2,
    weyl_dimension,
    weyl_group,
)

_RANK2 = ("A2", "B2", "G2")


def _report(capsys, n: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    with capsys.disabled():
        print(line, flush=True)


@lru_cache(maxsize=None)
def _rs(name):
    return build_root_system(name)


@lru_cache(maxsize=None)
def _rank2_sweep():
    """(algebra, labels) -> (oracle PolytopeSum, formula FormalSum), timed."""
    t0 = time.perf_counter()
    table = {}
    for name in _RANK2:
        rs = _rs(name)
        for labels in product(range(5), repeat=2):
            table[(name, labels)] = (
                polytope_sum_oracle(rs, labels),
                polytope_sum_rank2(rs, labels),
            )
    return table, time.perf_counter() - t0


@lru_cache(maxsize=None)
def _a3_sweep():
    t0 = time.perf_counter()
    rs = _rs("A3")
    table = {
        labels: (polytope_sum_oracle(rs, labels), polytope_sum_a3(rs, labels))
        for labels in product(range(4), repeat=3)
    }
    return table, time.perf_counter() - t0


def test_acceptance_1_rank_one_identity(capsys):
    t0 = time.perf_counter()
    rs = _rs("A1")
    alpha = rs.simple_roots[0]
    bad = []
    for n in range(21):
        start = FormalSum.exp((n,))
        oracle = polytope_sum_oracle(rs, (n,)).sum
        if apply_D_simple(rs, 1, start) != oracle:
            bad.append((n, "D"))
        if apply_d_root(rs, alpha, start).add(start) != oracle:
            bad.append((n, "d+1"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    _report(capsys, 1, ok, f"A1 n=0..20 both operator routes vs enumerator, {elapsed:.2f}s")
    assert not bad, f"rank-1 identity mismatches: {bad}"
    assert elapsed < 1.0


def test_acceptance_2_rank_two_formula(capsys):
    table, elapsed = _rank2_sweep()
    per = dict.fromkeys(_RANK2, 0)
    regular_bad = []
    nonregular_bad = []
    for (name, labels), (oracle, formula) in sorted(table.items()):
        if (formula - oracle.sum).is_zero():
            per[name] += 1
        elif 0 in labels:
            nonregular_bad.append((name, labels))
        else:
            regular_bad.append((name, labels))
    counts = ", ".join(f"{name} {per[name]}/25" for name in _RANK2)
    ok = not regular_bad and elapsed < 10.0
    detail = f"{counts}, {elapsed:.2f}s"
    if regular_bad:
        detail += f"; {len(regular_bad)} regular mismatches (all G2, first label >= 1)"
    if nonregular_bad:
        detail += f"; {len(nonregular_bad)} non-regular mismatches recorded: {nonregular_bad}"
    _report(capsys, 2, ok, detail)
    assert not regular_bad, (
        "the rank-2 operator formula must match the enumerator on every "
        f"regular weight, but differs on {regular_bad}. The G2 formula "
        "undercounts interior strings along the long-root edge whenever the "
        "first label is positive (the enumerator is certified independently "
        "by numeric vertex-cone checks and Weyl invariance). Full evidence: "
        "/root/notes/decisions.md"
    )
    assert elapsed < 10.0


def test_acceptance_3_a3_formula(capsys):
    table, elapsed = _a3_sweep()
    bad = [
        labels
        for labels, (oracle, formula) in sorted(table.items())
        if not (formula - oracle.sum).is_zero()
    ]
    ok = not bad and (1, 2, 3) in table and elapsed < 60.0
    _report(capsys, 3, ok, f"A3 64/64 labels in [0..3]^3 incl (1,2,3), {elapsed:.2f}s")
    assert not bad, f"A3 formula mismatches: {bad}"
    assert (1, 2, 3) in table
    assert elapsed < 60.0


def _alternating(first: int, second: int, m: int) -> tuple:
    return tuple(first if k % 2 == 0 else second for k in range(m))


def test_acceptance_4_braid_relations(capsys):
    t0 = time.perf_counter()
    bad = []
    for name, m in (("A2", 3), ("B2", 4), ("G2", 6)):
        rs = _rs(name)
        left = _alternating(1, 2, m)
        right = _alternating(2, 1, m)
        for labels in product(range(-3, 4), repeat=2):
            s = FormalSum.exp(labels)
            for flavor in ("D", "d"):
                if apply_word(rs, left, s, flavor) != apply_word(rs, right, s, flavor):
                    bad.append((name, labels, flavor))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5.0
    _report(capsys, 4, ok, f"A2/B2/G2 x 49 weights x 2 flavors, {elapsed:.2f}s")
    assert not bad, f"braid relation mismatches: {bad}"
    assert elapsed < 5.0


def test_acceptance_5_character_cross_validation(capsys):
    t0 = time.perf_counter()
    cases = 0
    bad = []
    for name in ("A1", "A2", "B2", "G2", "A3"):
        rs = _rs(name)
        for labels in product(range(4), repeat=rs.rank):
            cases += 1
            ch = character_demazure(rs, labels)
            if ch != character_demazure_sum(rs, labels):
                bad.append((name, labels, "group-sum route"))
            if ch != character_freudenthal(rs, labels):
                bad.append((name, labels, "multiplicity route"))
            if ch.coefficient_sum() != weyl_dimension(rs, labels):
                bad.append((name, labels, "dimension"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    _report(capsys, 5, ok, f"{cases} cases x 3 equalities on 5 algebras, {elapsed:.2f}s")
    assert not bad, f"character cross-validation mismatches: {bad}"
    assert elapsed < 30.0


def test_acceptance_6_numeric_rational_checks(capsys):
    t0 = time.perf_counter()
    cases = [
        ("A2", (1, 0)),
        ("A2", (1, 1)),
        ("A2", (2, 1)),
        ("G2", (1, 1)),
        ("A3", (1, 1, 1)),
    ]
    worst = 0.0
    bad = []
    for name, lam in cases:
        result = numeric_formula_check(_rs(name), lam, sigma_count=20, seed=DEFAULT_SEED)
        worst = max(worst, result["brion_max_rel_err"], result["weyl_max_rel_err"])
        if not result["pass"]:
            bad.append((name, lam))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5.0
    _report(
        capsys, 6, ok,
        f"5 cases x 20 seeded sigmas, max rel err {worst:.2e} < 1e-09, {elapsed:.2f}s",
    )
    assert not bad, f"numeric checks over tolerance: {bad}"
    assert elapsed < 5.0


def test_acceptance_7_polytope_expansion(capsys):
    t0 = time.perf_counter()
    cases = 0
    bad = []
    for name in ("A2", "B2", "G2", "A3"):
        rs = _rs(name)
        for labels in product(range(4), repeat=rs.rank):
            cases += 1
            coeffs = polytope_expansion(rs, labels).coefficients
            if coeffs.get(labels) != 1:
                bad.append((name, labels, "leading coefficient"))
                continue
            rebuilt = FormalSum.zero(rs.rank)
            for mu, c in coeffs.items():
                block = polytope_sum_oracle(rs, mu).sum
                rebuilt = rebuilt.add(
                    FormalSum(rs.rank, {w: c * v for w, v in block.terms.items()})
                )
            if rebuilt != character_demazure(rs, labels):
                bad.append((name, labels, "reconstruction"))
    a2_pair = polytope_expansion(_rs("A2"), (1, 1)).coefficients
    if dict(a2_pair) != {(1, 1): 1, (0, 0): 1}:
        bad.append(("A2", (1, 1), "explicit two-term expansion"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    _report(capsys, 7, ok, f"{cases} reconstructions on 4 algebras, {elapsed:.2f}s")
    assert not bad, f"expansion failures: {bad}"
    assert elapsed < 30.0


def test_acceptance_8_longest_element_factorization(capsys):
    t0 = time.perf_counter()
    rng = Random(DEFAULT_SEED)
    mismatches = 0
    for name in ("A2", "B2", "G2", "A3"):
        rs = _rs(name)
        composite = longest_element_via_gammas(rs)
        longest = weyl_group(rs).longest
        for _ in range(50):
            w = tuple(rng.randint(-9, 9) for _ in range(rs.rank))
            if composite(w) != longest.apply(w):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0
    _report(
        capsys, 8, ok,
        f"4 algebras x 50 seeded weights, {mismatches} mismatches, {elapsed:.2f}s",
    )
    assert mismatches == 0


def test_acceptance_9_weyl_invariance_of_polytope_sums(capsys):
    t0 = time.perf_counter()
    rank2_table, _ = _rank2_sweep()
    a3_table, _ = _a3_sweep()
    checked = 0
    bad = []
    for (name, labels), (oracle, _formula) in sorted(rank2_table.items()):
        rs = _rs(name)
        checked += 1
        for i in range(1, 3):
            if apply_r_simple(rs, i, oracle.sum) != oracle.sum:
                bad.append((name, labels, i))
    rs = _rs("A3")
    for labels, (oracle, _formula) in sorted(a3_table.items()):
        checked += 1
        for i in range(1, 4):
            if apply_r_simple(rs, i, oracle.sum) != oracle.sum:
                bad.append(("A3", labels, i))
    elapsed = time.perf_counter() - t0
    ok = not bad
    _report(
        capsys, 9, ok,
        f"{checked} lattice sums fixed by every simple reflection, {elapsed:.2f}s",
    )
    assert not bad, f"Weyl invariance failures: {bad}"

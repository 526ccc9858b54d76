"""Named verification suites: each runs a batch of property checks at a
given (p, r) and returns (check name, passed, detail) triples. The CLI's
verify command is a thin wrapper over these.
"""

from __future__ import annotations

import random

from .complexity import (
    berlekamp_massey,
    check_poly_p_lemma,
    check_root_group_lemmas,
    kerror_profile,
    lc_via_gcd,
    two_is_primitive_root_mod_p2,
)
from .fieldarith import PrimeField, multiplicative_order
from .quotients import PrimePowerModulus, new_quotient_h, verify_congruence_qrs
from .sequences import PeriodicSequence, binary_class_sequence, level_sequence

CheckResult = tuple[str, bool, str]


def suite_theorem_hh(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """Shift law H(v + k p^r) == H(v) - k v^{p-2} mod p, exhaustively."""
    m = PrimePowerModulus(p, r)
    failures = 0
    for v in range(m.modulus):
        if v % p == 0:
            continue
        hv = new_quotient_h(m, v)
        for k in range(p):
            lhs = new_quotient_h(m, v + k * m.modulus)
            if lhs != (hv - k * pow(v, p - 2, p)) % p:
                failures += 1
    return [
        (
            f"shift law at (p={p}, r={r})",
            failures == 0,
            "all units checked" if failures == 0 else f"{failures} violations",
        )
    ]


def suite_hh_period(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """Least period of the top-digit sequence is exactly p^{r+1}."""
    m = PrimePowerModulus(p, r)
    seq = level_sequence(m, r - 1)
    lp = seq.least_period()
    return [
        (
            f"least period at (p={p}, r={r})",
            lp == m.sequence_period,
            f"measured {lp}, expected {m.sequence_period}",
        )
    ]


def suite_qrs(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """Congruence Q_r == Q_s mod p^s for all u in one period, all 0 < s < r."""
    if r < 2:
        return [(f"q-r-s at (p={p}, r={r})", True, "vacuous for r < 2")]
    m = PrimePowerModulus(p, r)
    ok = all(
        verify_congruence_qrs(m, s, u)
        for s in range(1, r)
        for u in range(m.sequence_period)
    )
    return [(f"q-r-s at (p={p}, r={r})", ok, f"u < {m.sequence_period}, s < {r}")]


def suite_lc_p(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """Linear complexity of the highest-level sequence equals p^r + p - 1."""
    m = PrimePowerModulus(p, r)
    seq = level_sequence(m, r - 1)
    fp = PrimeField(p)
    expected = p**r + p - 1
    bm = berlekamp_massey(seq, fp)
    gcd_lc = lc_via_gcd(seq, fp)
    return [
        (f"BM LC at (p={p}, r={r})", bm == expected, f"{bm} vs {expected}"),
        (f"gcd LC at (p={p}, r={r})", gcd_lc == expected, f"{gcd_lc} vs {expected}"),
    ]


def suite_lemmas(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """Class-polynomial divisibility lemmas and the G(X) uniqueness lemma."""
    results: list[CheckResult] = []
    if r >= 2:
        m = PrimePowerModulus(p, r)
        ok = check_root_group_lemmas(m)
        results.append((f"root-group lemmas at (p={p}, r={r})", ok, ""))
    else:
        results.append((f"root-group lemmas at (p={p}, r={r})", True, "vacuous for r < 2"))
    if multiplicative_order(2, p) == p - 1:
        ok = check_poly_p_lemma(p)
        results.append((f"G(X) uniqueness at p={p}", ok, ""))
    else:
        results.append(
            (
                f"G(X) uniqueness at p={p}",
                True,
                f"refused: 2 is not a primitive root modulo {p}",
            )
        )
    return results


def suite_klc(p: int, r: int, seed: int = 0) -> list[CheckResult]:
    """k-error profile of the I={0} class sequence against brute force."""
    if not two_is_primitive_root_mod_p2(p):
        order = multiplicative_order(2, p * p)
        return [
            (
                f"klc at (p={p}, r={r})",
                True,
                f"refused: 2 is not a primitive root modulo {p}^2 "
                f"(order {order}); no profile asserted",
            )
        ]
    m = PrimePowerModulus(p, r)
    seq = binary_class_sequence(m, {0})
    weight = seq.weight
    try:
        report = kerror_profile(seq, m, {0}, k_max=weight)
    except RuntimeError as exc:
        return [(f"klc at (p={p}, r={r})", False, str(exc))]
    exact = sum(1 for _, _, e in report.kerror_profile if e)
    return [
        (
            f"klc at (p={p}, r={r})",
            True,
            f"profile for k <= {weight} matches "
            f"({exact}/{len(report.kerror_profile)} entries brute-force exact)",
        )
    ]


def suite_oracles(p: int, r: int, seed: int = 0, trials: int = 100) -> list[CheckResult]:
    """Berlekamp-Massey agrees with the gcd formula on random sequences."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        char = rng.choice([2, 3])
        period = rng.randint(1, 200)
        seq = PeriodicSequence(
            char, period, tuple(rng.randrange(char) for _ in range(period))
        )
        fp = PrimeField(char)
        if berlekamp_massey(seq, fp) != lc_via_gcd(seq, fp):
            failures += 1
    return [
        (
            f"oracle equivalence ({trials} random sequences, seed={seed})",
            failures == 0,
            "all agree" if failures == 0 else f"{failures} disagreements",
        )
    ]


SUITES = {
    "theorem-hh": suite_theorem_hh,
    "hh-period": suite_hh_period,
    "q-r-s": suite_qrs,
    "lc-p": suite_lc_p,
    "lemmas": suite_lemmas,
    "klc": suite_klc,
    "oracles": suite_oracles,
}

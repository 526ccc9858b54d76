"""Linear complexity and k-error linear complexity engines.

Two independent linear-complexity implementations are provided and
cross-checked: Berlekamp-Massey (performance path) and the gcd formula
LC = T - deg gcd(X^T - 1, S(X)) on dense polynomials (audited reference).
k-error linear complexity over F_2 is computed exactly by exhaustive error
pattern search under a pattern budget, using bitmask F_2[X] arithmetic
internally, and compared against the piecewise-constant profile predicted
for binary class sequences when 2 is a primitive root modulo p^2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .fieldarith import PrimeField, Polynomial, multiplicative_order, poly_gcd
from .quotients import PrimePowerModulus
from .sequences import PeriodicSequence, binary_class_sequence, class_partition, validate_index_set


class PatternBudgetExceeded(RuntimeError):
    """Raised when an exhaustive error-pattern search would exceed its budget."""


DEFAULT_PATTERN_BUDGET = 10**7


# --- linear complexity ----------------------------------------------------

def berlekamp_massey(seq: PeriodicSequence, fieldp: PrimeField) -> int:
    """Linear complexity over F_p via Berlekamp-Massey.

    Runs on two concatenated periods, which guarantees convergence to the
    least recurrence order of the periodic extension.
    """
    if seq.alphabet_size != fieldp.p:
        raise ValueError(
            f"alphabet size {seq.alphabet_size} does not match field F_{fieldp.p}"
        )
    p = fieldp.p
    s = seq.symbols * 2
    c = [1]
    b = [1]
    L = 0
    gap = 1
    last_disc = 1
    for n in range(len(s)):
        d = 0
        for i in range(L + 1):
            d += c[i] * s[n - i]
        d %= p
        if d == 0:
            gap += 1
            continue
        coef = d * pow(last_disc, -1, p) % p
        if len(c) < len(b) + gap:
            c.extend([0] * (len(b) + gap - len(c)))
        if 2 * L <= n:
            prev = c.copy()
            for i, bi in enumerate(b):
                c[i + gap] = (c[i + gap] - coef * bi) % p
            L = n + 1 - L
            b = prev
            last_disc = d
            gap = 1
        else:
            for i, bi in enumerate(b):
                c[i + gap] = (c[i + gap] - coef * bi) % p
            gap += 1
    return L


def lc_via_gcd(seq: PeriodicSequence, fieldp: PrimeField) -> int:
    """Linear complexity as T - deg gcd(X^T - 1, S(X)); 0 for the zero sequence."""
    if seq.alphabet_size != fieldp.p:
        raise ValueError(
            f"alphabet size {seq.alphabet_size} does not match field F_{fieldp.p}"
        )
    if all(x == 0 for x in seq.symbols):
        return 0
    T = seq.period
    s_poly = Polynomial(fieldp, seq.symbols)
    xt1 = Polynomial(fieldp, (fieldp.p - 1,) + (0,) * (T - 1) + (1,))
    return T - poly_gcd(xt1, s_poly).degree


# --- bitmask F_2[X] helpers (performance path for brute force / lemmas) ---

def _bdeg(a: int) -> int:
    return a.bit_length() - 1


def _bmod(a: int, b: int) -> int:
    """Remainder of a modulo b in F_2[X], masks as bit vectors."""
    db = _bdeg(b)
    while a and _bdeg(a) >= db:
        a ^= b << (_bdeg(a) - db)
    return a


def _bgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _bmod(a, b)
    return a


def lc_binary(mask: int, period: int) -> int:
    """Linear complexity over F_2 of the period given as a bitmask."""
    if mask == 0:
        return 0
    return period - _bdeg(_bgcd((1 << period) | 1, mask))


def _seq_mask(seq: PeriodicSequence) -> int:
    if seq.alphabet_size != 2:
        raise ValueError("binary sequence required")
    mask = 0
    for i, s in enumerate(seq.symbols):
        mask |= s << i
    return mask


# --- k-error linear complexity -------------------------------------------

def _pattern_count(period: int, k: int) -> int:
    return sum(math.comb(period, w) for w in range(k + 1))


def _min_lc_at_weight(mask: int, period: int, w: int, floor: int = 0) -> int:
    """Minimum LC over all error patterns of weight exactly w."""
    best = None
    for positions in itertools.combinations(range(period), w):
        e = 0
        for q in positions:
            e |= 1 << q
        lc = lc_binary(mask ^ e, period)
        if best is None or lc < best:
            best = lc
            if best <= floor:
                break
    return best


def kerror_lc_bruteforce(
    seq: PeriodicSequence, k: int, budget: int = DEFAULT_PATTERN_BUDGET
) -> int:
    """Exact k-error linear complexity of a binary sequence by exhaustion.

    Minimizes LC over every error pattern of weight at most k. Raises
    PatternBudgetExceeded when the pattern count would exceed the budget.
    """
    if not 0 <= k <= seq.period:
        raise ValueError(f"k must lie in [0, {seq.period}], got {k}")
    total = _pattern_count(seq.period, k)
    if total > budget:
        raise PatternBudgetExceeded(
            f"{total} patterns for k={k}, period={seq.period} exceeds budget {budget}"
        )
    mask = _seq_mask(seq)
    best = lc_binary(mask, seq.period)
    for w in range(1, k + 1):
        if best == 0:
            break
        best = min(best, _min_lc_at_weight(mask, seq.period, w))
    return best


@dataclass(frozen=True)
class ErrorPattern:
    """Positions to flip in one period of a binary sequence."""

    period: int
    positions: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(sorted(set(p % self.period for p in self.positions)))
        if len(pos) != len(self.positions):
            raise ValueError("error positions must be distinct modulo the period")
        object.__setattr__(self, "positions", pos)

    @property
    def weight(self) -> int:
        return len(self.positions)

    def apply(self, seq: PeriodicSequence) -> PeriodicSequence:
        if seq.period != self.period:
            raise ValueError(f"pattern period {self.period} != sequence period {seq.period}")
        return seq.flip(self.positions)


def constructive_error_pattern(m: PrimePowerModulus, kind: str) -> ErrorPattern:
    """Theorem-derived error patterns achieving the k-error LC drops.

    kind="lambda": multiples of p below p^r (weight p^{r-1}); flipping these
    drops the LC of an odd-|I| class sequence to p^{r+1} - p^r + 1.
    kind="lambda_times_full": units below p^r congruent to 1..p-1 modulo p
    paired with every multiple-of-p offset (weight p^{r-1}(p-1)); flipping
    drops the LC to p^{r+1} - p^r.
    """
    if m.r < 2:
        raise ValueError(f"constructive patterns need r >= 2, got r={m.r}")
    period = m.sequence_period
    if kind == "lambda":
        positions = tuple(b * m.p for b in range(m.p ** (m.r - 1)))
    elif kind == "lambda_times_full":
        positions = tuple(
            a + b * m.p
            for b in range(m.p ** (m.r - 1))
            for a in range(1, m.p)
        )
    else:
        raise ValueError(f"unknown pattern kind {kind!r}")
    return ErrorPattern(period=period, positions=positions)


# --- theorem profile for binary class sequences ---------------------------

def two_is_primitive_root_mod_p2(p: int) -> bool:
    return multiplicative_order(2, p * p) == p * (p - 1)


def theorem_kerror_lc(m: PrimePowerModulus, index_size: int, k: int) -> int:
    """Predicted k-error LC of the binary class sequence, |I| = index_size.

    Valid when 2 is a primitive root modulo p^2, r >= 2 and
    1 <= |I| <= (p-1)/2. The zero branch starts at the sequence weight
    p^{r-1}(p-1)|I| (the theorem display's "(p-1)|I|" threshold disagrees
    with its proof; the proof's threshold is used).
    """
    p, r = m.p, m.r
    weight = p ** (r - 1) * (p - 1) * index_size
    if k >= weight:
        return 0
    if index_size % 2 == 0:
        return p ** (r + 1) - p**r
    if k < p ** (r - 1):
        return p ** (r + 1) - p**r + p - 1
    if k < p ** (r - 1) * (p - 1):
        return p ** (r + 1) - p**r + 1
    return p ** (r + 1) - p**r


@dataclass
class ComplexityReport:
    """Linear complexity result with an optional k-error profile.

    kerror_profile entries are (k, lc_k, exact); exact means confirmed by
    exhaustive search, otherwise lc_k is a theorem/constructive value.
    """

    sequence_id: dict
    lc: int
    method: str
    kerror_profile: list[tuple[int, int, bool]] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "sequence": self.sequence_id,
            "lc": self.lc,
            "method": self.method,
            "kerror": [
                {"k": k, "lc": lc, "exact": exact}
                for k, lc, exact in self.kerror_profile
            ],
        }


def kerror_profile(
    seq: PeriodicSequence,
    m: PrimePowerModulus,
    levels,
    k_max: int,
    budget: int = DEFAULT_PATTERN_BUDGET,
) -> ComplexityReport:
    """k-error LC profile of a binary class sequence, theorem plus brute force.

    Requires 2 primitive modulo p^2, r >= 2 and 1 <= |I| <= (p-1)/2. Each
    profile entry carries the theorem value; entries whose exhaustive
    confirmation fits the pattern budget are marked exact. A disagreement
    between brute force and the theorem raises RuntimeError.
    """
    members = validate_index_set(m.p, levels, enforce_half=True)
    if m.r < 2:
        raise ValueError(f"theorem profile needs r >= 2, got r={m.r}")
    if not two_is_primitive_root_mod_p2(m.p):
        order = multiplicative_order(2, m.p * m.p)
        raise ValueError(
            f"2 is not a primitive root modulo {m.p}^2 "
            f"(order {order} != {m.p * (m.p - 1)}); no profile asserted"
        )
    expected = binary_class_sequence(m, members)
    if seq.symbols != expected.symbols:
        raise ValueError("sequence is not the binary class sequence for (p, r, I)")

    lc0 = lc_via_gcd(seq, PrimeField(2))
    if lc0 != theorem_kerror_lc(m, len(members), 0):
        raise RuntimeError(
            f"LC {lc0} contradicts predicted {theorem_kerror_lc(m, len(members), 0)}"
        )

    mask = _seq_mask(seq)
    profile: list[tuple[int, int, bool]] = []
    running_min = lc0
    consumed = 1
    exhausted = False
    for k in range(k_max + 1):
        predicted = theorem_kerror_lc(m, len(members), k)
        if k > 0 and not exhausted:
            cost = math.comb(seq.period, k)
            if consumed + cost > budget:
                exhausted = True
            else:
                consumed += cost
                if running_min > 0:
                    running_min = min(
                        running_min, _min_lc_at_weight(mask, seq.period, k)
                    )
        if exhausted:
            profile.append((k, predicted, False))
        else:
            if running_min != predicted:
                raise RuntimeError(
                    f"brute force LC_{k} = {running_min} contradicts "
                    f"predicted {predicted} at (p={m.p}, r={m.r}, I={sorted(members)})"
                )
            profile.append((k, predicted, True))
    return ComplexityReport(
        sequence_id={
            "p": m.p,
            "r": m.r,
            "kind": "class",
            "I": sorted(members),
        },
        lc=lc0,
        method="gcd_formula",
        kerror_profile=profile,
    )


# --- lemma-level divisibility checks over F_2 -----------------------------

def check_root_group_lemmas(m: PrimePowerModulus) -> bool:
    """Divisibility form of the class-polynomial root statements, r >= 2.

    For every class polynomial D_l(X) = sum_{u in D_l} X^u over F_2:
    (a) (X^{p^r}-1)/(X^p-1) divides D_l(X) mod (X^{p^r}-1);
    (b) D_l(X) == 1 modulo (X^p-1)/(X-1);
    (c) D_l(1) = 0, i.e. |D_l| is even.
    """
    if m.r < 2:
        raise ValueError(f"root-group lemmas need r >= 2, got r={m.r}")
    p, r = m.p, m.r
    pr = p**r
    xn1 = (1 << pr) | 1
    lam = 0
    for b in range(p ** (r - 1)):
        lam |= 1 << (b * p)
    cyclo_p = (1 << p) - 1  # 1 + X + ... + X^{p-1}
    partition = class_partition(m)
    for d_class in partition.classes:
        d_mask = 0
        for u in d_class:
            d_mask |= 1 << u
        if _bmod(_bmod(d_mask, xn1), lam) != 0:
            return False
        if _bmod(d_mask ^ 1, cyclo_p) != 0:
            return False
        if len(d_class) % 2 != 0:
            return False
    return True


def check_poly_p_lemma(p: int) -> bool:
    """Uniqueness of G with 1 <= deg G < p and G == 1 mod (X^p-1)/(X-1).

    Requires 2 primitive modulo p, making 1 + X + ... + X^{p-1} irreducible
    over F_2; the unique such G must be X + X^2 + ... + X^{p-1}. Verified by
    exhaustive search over all nonconstant candidates for p <= 13, by direct
    congruence check otherwise.
    """
    if multiplicative_order(2, p) != p - 1:
        raise ValueError(f"2 is not a primitive root modulo {p}")
    cyclo_p = (1 << p) - 1
    target = (1 << p) - 2  # X + X^2 + ... + X^{p-1}
    if p <= 13:
        matches = [
            g
            for g in range(2, 1 << p)
            if _bdeg(g) >= 1 and _bmod(g ^ 1, cyclo_p) == 0
        ]
        return matches == [target]
    return _bmod(target ^ 1, cyclo_p) == 0

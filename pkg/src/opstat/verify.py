"""Identity-verification harness: each check builds both sides of a
distribution identity exactly (enumeration on one side, closed form on the
other) and compares them term by term; bijective claims are additionally
checked pointwise, reporting the first violating object in enumeration
order.

Known checks (the id strings are the command-line interface):

========  ===================================================================
id        claim
========  ===================================================================
thm3.1    sum over the sigma-class of p^(maf+bInv) q^cinvLSB equals
          q^(k(k-1)) (p/q)^(inv sigma) S_{p,q}(n,k) for maf in {mak, mak'},
          and the conjugated diagram involution swaps mak and mak' pointwise
thm3.2    the same sum over all ordered partitions equals
          q^C(k,2) [k]_{p,q}! S_{p,q}(n,k)
thm3.3    per partition type, the bMaj-based statistic triple is
          equidistributed with the bInv-based one; the encoding swap map
          carries one to the other pointwise
thm3.4    thm3.2 with bInv/cinvLSB replaced by bMaj/cmajLSB
thm3.5    INV and MAJ are equidistributed over the rearrangement class of
          any partition, with generating function [k]_q!
eq1.1     inv and maj are equidistributed over a rearrangement class of
          words, with the q-multinomial as generating function
eq2.3     sum over standard partitions of p^rcb q^lsb is S_{p,q}(n,k)
eq5.8     sum over ordered partitions of p^(cls+rsb_TC) q^(sb-rsb_TC)
          t^(mah sigma) is [k]_t! S_{p,q}(n,k), for mah = inv and maj;
          likewise with opb in place of cls
eq9.2     the same with t^MAJ in place of t^(mah sigma)
zezh      [k]_q! S_q(n,k) = sum_m q^(k(k-m)) C_q(n-m,n-k) A_q(n,m-1)
doubleton the rearrangement class of the doubleton partition of a
          composition factors its INV/MAJ distributions through the word
          class and the per-letter classes
========  ===================================================================
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .core import (
    OrderedSetPartition,
    Permutation,
    decompose_doubleton,
    doubleton_partition,
    inversion_number,
    major_index,
)
from .families import (
    beta,
    beta_inv,
    ordered_set_partitions,
    rearrangements,
    set_partitions,
    sigma_partitions,
    subdiagonal_vectors,
    words,
)
from .paths import upsilon, xi_map
from .qpoly import (
    LaurentPolynomial,
    gauss_binomial,
    pq_factorial,
    q_factorial,
    stirling_pq,
    verify_zezh,
)
from .statistics import aggregate_profile, six_composites, stat, stat_restricted

__all__ = ["VerificationReport", "verify", "THEOREM_IDS", "run_task"]


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    params: dict
    passed: bool
    lhs: LaurentPolynomial | None = None
    rhs: LaurentPolynomial | None = None
    counterexample: str | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "params": {key: str(value) for key, value in self.params.items()},
            "pass": self.passed,
            "lhs": self.lhs.to_text() if self.lhs is not None else None,
            "rhs": self.rhs.to_text() if self.rhs is not None else None,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        bits = [f"{self.theorem} {self.params}: {status}"]
        if self.detail:
            bits.append(self.detail)
        if self.counterexample:
            bits.append(f"counterexample: {self.counterexample}")
        return " | ".join(bits)


def _bump(counts: dict, key: tuple[int, int, int, int]) -> None:
    counts[key] = counts.get(key, 0) + 1


def _as_permutation(sigma: Union[Permutation, str, Sequence[int]]) -> Permutation:
    if isinstance(sigma, Permutation):
        return sigma
    if isinstance(sigma, str):
        return Permutation.parse(sigma)
    return Permutation(tuple(sigma))


def _as_partition(pi: Union[OrderedSetPartition, str]) -> OrderedSetPartition:
    if isinstance(pi, OrderedSetPartition):
        return pi
    return OrderedSetPartition.parse(pi)


# ---------------------------------------------------------------------------
# Euler-Mahonian sums over all ordered partitions (thm3.2 / thm3.4)
# ---------------------------------------------------------------------------

def _em_distributions(n: int, k: int, allow_large: bool) -> list[LaurentPolynomial]:
    """(mak+bInv, cinvLSB), (mak'+bInv, cinvLSB), (mak+bMaj, cmajLSB),
    (mak'+bMaj, cmajLSB) distributions over all ordered partitions."""
    acc: list[dict] = [{}, {}, {}, {}]
    for pi in ordered_set_partitions(n, k, allow_large=allow_large):
        a, b, ci, c, d, cm = six_composites(pi)
        _bump(acc[0], (a, ci, 0, 0))
        _bump(acc[1], (b, ci, 0, 0))
        _bump(acc[2], (c, cm, 0, 0))
        _bump(acc[3], (d, cm, 0, 0))
    return [LaurentPolynomial(a) for a in acc]


def _verify_em(theorem: str, n: int, k: int, use_maj: bool, allow_large: bool) -> VerificationReport:
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    dists = _em_distributions(n, k, allow_large)
    lhs_a, lhs_b = (dists[2], dists[3]) if use_maj else (dists[0], dists[1])
    rhs = (
        LaurentPolynomial.variable("q", comb(k, 2)) * pq_factorial(k) * stirling_pq(n, k)
    )
    passed = lhs_a == rhs and lhs_b == rhs
    return VerificationReport(
        theorem, {"n": n, "k": k}, passed, lhs_a, rhs, None,
        "" if passed else "distribution mismatch",
    )


# ---------------------------------------------------------------------------
# thm3.1: sigma-classes with the (p/q)^inv factor, plus the xi transport
# ---------------------------------------------------------------------------

def _xi_violation(pi: OrderedSetPartition, sigma: Permutation | None = None) -> str | None:
    """The conjugated involution must swap mak+bInv with mak'+bInv, fix
    cinvLSB and rsb_TC, and stay inside the sigma-class."""
    image = xi_map(pi)
    a, b, ci, *_ = six_composites(pi)
    a2, b2, ci2, *_ = six_composites(image)
    if (a2, b2, ci2) != (b, a, ci):
        return f"triple swap fails: {pi} -> {image}"
    if stat_restricted(pi, "rsb", "TC") != stat_restricted(image, "rsb", "TC"):
        return f"rsb_TC changes: {pi} -> {image}"
    if sigma is not None and image.standard_form()[1] != sigma:
        return f"image leaves the sigma-class: {pi} -> {image}"
    if xi_map(image) != pi:
        return f"not an involution at {pi}"
    return None


def _verify_thm31(n: int, k: int, sigma, allow_large: bool) -> VerificationReport:
    sigma = _as_permutation(sigma)
    if sigma.size != k:
        raise ValueError(f"sigma must act on k={k} blocks")
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    acc_mak: dict = {}
    acc_makp: dict = {}
    counterexample = None
    for pi in sigma_partitions(n, k, sigma):
        a, b, ci, *_ = six_composites(pi)
        _bump(acc_mak, (a, ci, 0, 0))
        _bump(acc_makp, (b, ci, 0, 0))
        if counterexample is None:
            counterexample = _xi_violation(pi, sigma)
    lhs_a, lhs_b = LaurentPolynomial(acc_mak), LaurentPolynomial(acc_makp)
    inv = sigma.inversion_number()
    rhs = LaurentPolynomial.monomial(1, ep=inv, eq=k * (k - 1) - inv) * stirling_pq(n, k)
    passed = lhs_a == rhs and lhs_b == rhs and counterexample is None
    return VerificationReport(
        "thm3.1",
        {"n": n, "k": k, "sigma": sigma.one_line()},
        passed,
        lhs_a,
        rhs,
        counterexample,
        "" if passed else "identity or transport failure",
    )


# ---------------------------------------------------------------------------
# thm3.3: per-type equidistribution plus the upsilon transport
# ---------------------------------------------------------------------------

def _upsilon_violation(pi: OrderedSetPartition) -> str | None:
    """The encoding swap must preserve the type and rsb_TC and carry the
    bInv-based triple to the bMaj-based one."""
    image = upsilon(pi)
    a, b, ci, *_ = six_composites(pi)
    *_, c2, d2, cm2 = six_composites(image)
    if (c2, d2, cm2) != (a, b, ci):
        return f"triple transport fails: {pi} -> {image}"
    if image.partition_type() != pi.partition_type():
        return f"type changes: {pi} -> {image}"
    if stat_restricted(pi, "rsb", "TC") != stat_restricted(image, "rsb", "TC"):
        return f"rsb_TC changes: {pi} -> {image}"
    return None


def _verify_thm33(n: int, k: int, allow_large: bool) -> VerificationReport:
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    by_type_inv: dict = {}
    by_type_maj: dict = {}
    counterexample = None
    for pi in ordered_set_partitions(n, k, allow_large=allow_large):
        lam = pi.partition_type()
        a, b, ci, c, d, cm = six_composites(pi)
        _bump(by_type_inv.setdefault(lam, {}), (a, b, ci, 0))
        _bump(by_type_maj.setdefault(lam, {}), (c, d, cm, 0))
        if counterexample is None:
            counterexample = _upsilon_violation(pi)
    bad_type = None
    for lam, counts in by_type_inv.items():
        if counts != by_type_maj.get(lam):
            bad_type = lam
            break
    if bad_type is not None and counterexample is None:
        counterexample = f"type {bad_type}"
    passed = bad_type is None and counterexample is None
    total_maj: dict = {}
    total_inv: dict = {}
    for buckets, total in ((by_type_maj, total_maj), (by_type_inv, total_inv)):
        for counts in buckets.values():
            for exps, count in counts.items():
                total[exps] = total.get(exps, 0) + count
    lhs = LaurentPolynomial(total_maj)
    rhs = LaurentPolynomial(total_inv)
    return VerificationReport(
        "thm3.3",
        {"n": n, "k": k},
        passed,
        lhs,
        rhs,
        counterexample,
        "" if passed else "per-type mismatch or transport failure",
    )


# ---------------------------------------------------------------------------
# thm3.5: rearrangement classes of a partition
# ---------------------------------------------------------------------------

def _verify_thm35(pi) -> VerificationReport:
    pi0 = _as_partition(pi).standard_form()[0]
    k = pi0.k
    acc_inv: dict = {}
    acc_maj: dict = {}
    seen = set()
    for rho in rearrangements(pi0):
        _bump(acc_inv, (0, stat(rho, "inv"), 0, 0))
        _bump(acc_maj, (0, stat(rho, "maj"), 0, 0))
        seen.add(rho)
    lhs, rhs = LaurentPolynomial(acc_maj), q_factorial(k)
    counterexample = None
    image = set()
    for c in subdiagonal_vectors(k):
        rho = beta(pi0, c)
        image.add(rho)
        if stat(rho, "maj") != sum(c):
            counterexample = f"MAJ(beta({c})) != {sum(c)} at {rho}"
            break
        if beta_inv(rho) != c:
            counterexample = f"beta_inv round-trip fails at c={c}"
            break
    if counterexample is None and image != seen:
        counterexample = "beta image differs from the rearrangement class"
    passed = lhs == rhs and LaurentPolynomial(acc_inv) == rhs and counterexample is None
    return VerificationReport(
        "thm3.5",
        {"pi": pi0.to_text()},
        passed,
        lhs,
        rhs,
        counterexample,
        "" if passed else "distribution or bijection failure",
    )


# ---------------------------------------------------------------------------
# Word-level MacMahon and the doubleton factorization
# ---------------------------------------------------------------------------

def _q_multinomial(parts: Sequence[int]) -> LaurentPolynomial:
    total = 0
    result = LaurentPolynomial.constant(1)
    for p in parts:
        total += p
        result = result * gauss_binomial(total, p)
    return result


def _verify_eq11(parts) -> VerificationReport:
    parts = tuple(int(p) for p in parts)
    acc_inv: dict = {}
    acc_maj: dict = {}
    for w in words(parts):
        _bump(acc_inv, (0, inversion_number(w), 0, 0))
        _bump(acc_maj, (0, major_index(w), 0, 0))
    lhs_inv, lhs_maj = LaurentPolynomial(acc_inv), LaurentPolynomial(acc_maj)
    rhs = _q_multinomial(parts)
    passed = lhs_inv == rhs and lhs_maj == rhs
    return VerificationReport(
        "eq1.1", {"parts": parts}, passed, lhs_inv, rhs, None,
        "" if passed else "word distribution mismatch",
    )


def _verify_doubleton(parts) -> VerificationReport:
    parts = tuple(int(p) for p in parts)
    big = doubleton_partition(parts)
    acc_inv: dict = {}
    acc_maj: dict = {}
    counterexample = None
    for rho in rearrangements(big):
        _bump(acc_inv, (0, stat(rho, "inv"), 0, 0))
        _bump(acc_maj, (0, stat(rho, "maj"), 0, 0))
        if counterexample is None:
            w, components = decompose_doubleton(rho, parts)
            if stat(rho, "binv") != inversion_number(w) or stat(rho, "bmaj") != major_index(w):
                counterexample = f"block stats differ from word stats at {rho}"
            elif stat_restricted(rho, "rsb", "OS") != sum(
                stat_restricted(comp, "rsb", "OS") for comp in components if comp.n
            ):
                counterexample = f"rsb_OS does not split at {rho}"
    factor = LaurentPolynomial.constant(1)
    for p in parts:
        counts: dict = {}
        for rho in rearrangements(doubleton_partition((p,))):
            _bump(counts, (0, stat_restricted(rho, "rsb", "OS"), 0, 0))
        class_dist = LaurentPolynomial(counts)
        if class_dist != q_factorial(p):
            counterexample = counterexample or f"class factor for part {p} is not [{p}]_q!"
        factor = factor * class_dist
    word_inv: dict = {}
    word_maj: dict = {}
    for w in words(parts):
        _bump(word_inv, (0, inversion_number(w), 0, 0))
        _bump(word_maj, (0, major_index(w), 0, 0))
    lhs = LaurentPolynomial(acc_maj)
    rhs = LaurentPolynomial(word_maj) * factor
    passed = (
        lhs == rhs
        and LaurentPolynomial(acc_inv) == LaurentPolynomial(word_inv) * factor
        and counterexample is None
    )
    return VerificationReport(
        "doubleton", {"parts": parts}, passed, lhs, rhs, counterexample,
        "" if passed else "factorization failure",
    )


# ---------------------------------------------------------------------------
# Remaining polynomial identities
# ---------------------------------------------------------------------------

def _verify_eq23(n: int, k: int) -> VerificationReport:
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    counts: dict = {}
    for pi in set_partitions(n, k):
        _bump(counts, (stat(pi, "rcb"), stat(pi, "lsb"), 0, 0))
    lhs, rhs = LaurentPolynomial(counts), stirling_pq(n, k)
    passed = lhs == rhs
    return VerificationReport(
        "eq2.3", {"n": n, "k": k}, passed, lhs, rhs, None,
        "" if passed else "distribution mismatch",
    )


def _verify_trefinement(theorem: str, n: int, k: int, use_big_maj: bool, allow_large: bool) -> VerificationReport:
    """eq5.8 (t marks inv/maj of the class permutation) and eq9.2 (t marks
    MAJ): both p-weights cls+rsb_TC and opb+rsb_TC against [k]_t! S_{p,q}."""
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    t_stats = ["maj"] if use_big_maj else ["invsigma", "majsigma"]
    accs: dict[tuple[str, str], dict] = {
        (p_stat, t_stat): {} for p_stat in ("cls", "opb") for t_stat in t_stats
    }
    for pi in ordered_set_partitions(n, k, allow_large=allow_large):
        prof = aggregate_profile(pi)
        cls_w = prof["cls"] + prof["rsb_tc"]
        opb_w = prof["opb"] + prof["rsb_tc"]
        eq = prof["sb"] - prof["rsb_tc"]
        for t_stat in t_stats:
            tv = prof["maj"] if t_stat == "maj" else stat(pi, t_stat)
            _bump(accs[("cls", t_stat)], (cls_w, eq, tv, 0))
            _bump(accs[("opb", t_stat)], (opb_w, eq, tv, 0))
    rhs = q_factorial(k, "t") * stirling_pq(n, k)
    lhs_polys = {key: LaurentPolynomial(acc) for key, acc in accs.items()}
    passed = all(poly == rhs for poly in lhs_polys.values())
    first = next(iter(lhs_polys.values()))
    return VerificationReport(
        theorem, {"n": n, "k": k}, passed, first, rhs, None,
        "" if passed else "t-refined distribution mismatch",
    )


def _verify_zezh_id(n: int, k: int) -> VerificationReport:
    passed, lhs, rhs = verify_zezh(n, k)
    return VerificationReport(
        "zezh", {"n": n, "k": k}, passed, lhs, rhs, None,
        "" if passed else "q-Stirling/Eulerian identity mismatch",
    )


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

THEOREM_IDS = (
    "thm3.1",
    "thm3.2",
    "thm3.3",
    "thm3.4",
    "thm3.5",
    "eq1.1",
    "eq2.3",
    "eq5.8",
    "eq9.2",
    "zezh",
    "doubleton",
)


def verify(theorem: str, allow_large: bool = False, **params) -> VerificationReport:
    """Run one verification; see the module docstring for the id table.

    Parameters by id: thm3.1 takes n, k, sigma; thm3.5 takes pi; eq1.1 and
    doubleton take parts; all others take n, k.
    """
    theorem = theorem.lower()
    if theorem == "thm3.1":
        return _verify_thm31(params["n"], params["k"], params["sigma"], allow_large)
    if theorem == "thm3.2":
        return _verify_em("thm3.2", params["n"], params["k"], False, allow_large)
    if theorem == "thm3.3":
        return _verify_thm33(params["n"], params["k"], allow_large)
    if theorem == "thm3.4":
        return _verify_em("thm3.4", params["n"], params["k"], True, allow_large)
    if theorem == "thm3.5":
        return _verify_thm35(params["pi"])
    if theorem == "eq1.1":
        return _verify_eq11(params["parts"])
    if theorem == "eq2.3":
        return _verify_eq23(params["n"], params["k"])
    if theorem == "eq5.8":
        return _verify_trefinement("eq5.8", params["n"], params["k"], False, allow_large)
    if theorem == "eq9.2":
        return _verify_trefinement("eq9.2", params["n"], params["k"], True, allow_large)
    if theorem == "zezh":
        return _verify_zezh_id(params["n"], params["k"])
    if theorem == "doubleton":
        return _verify_doubleton(params["parts"])
    raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREM_IDS)}")


def run_task(task: tuple[str, dict]) -> VerificationReport:
    """Picklable entry point for parallel verification."""
    theorem, params = task
    return verify(theorem, **params)

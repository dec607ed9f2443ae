"""Exhaustive enumeration of alpha-perfect numbers below a limit.

Two independent routes. ``brute_scan`` sieves divisor sums over fixed-size
blocks with paired-divisor accumulation and tests sigma(n)/n = alpha
directly; it is the oracle. ``chain_search`` enumerates signature chains
(p1, e1, ..., es): after the free choice of p1 and each exponent, the next
prime is forced, so walking all exponent ladders visits every primitive
alpha-perfect number up to the limit while exploring a bounded tree.
Every number either route reports is re-verified by an exact sigma
computation on its factorization.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .arithmetic import (
    FactoredInteger,
    factored_sigma_prime_power,
    factorize,
    FactorizationExhausted,
    nth_odd_prime,
    prime_count_upto,
    primes_upto,
    sigma,
)
from .bounds import (
    absolute_count_bound,
    multiperfect_count_bound,
    omega_floor,
    primitive_count_bound,
)
from .classify import is_primitive

DEFAULT_BLOCK_SIZE = 1 << 20

PRUNE_RULES = (
    "product_exceeds_limit",
    "abundancy_exceeded",
    "p1_bound",
    "chain_broken",
    "depth_cap",
    "nonminimal_start",
    "omega_floor",
)


@dataclass(frozen=True)
class SearchParams:
    """Target alpha, omega cap r, limit x, parity, and worker settings."""

    alpha: Fraction
    max_omega: int
    limit: int
    parity: str = "any"
    omega_floor_pruning: bool = False
    worker_count: int = 1

    def __post_init__(self) -> None:
        if self.alpha <= 1:
            raise ValueError("alpha must exceed 1")
        if self.max_omega < 1:
            raise ValueError("max_omega must be >= 1")
        if self.limit < 1:
            raise ValueError("limit must be >= 1")
        if self.parity not in ("any", "odd_only"):
            raise ValueError(f"unknown parity {self.parity!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass(frozen=True)
class FoundRecord:
    number: FactoredInteger
    primitive: bool


@dataclass(frozen=True)
class BoundCheck:
    description: str
    count: int
    bound_text: str
    passed: bool


@dataclass
class SearchReport:
    params: SearchParams
    found: tuple[FoundRecord, ...]
    count_by_omega: dict[int, int]
    nodes_explored: int
    pruned_by: dict[str, int]
    bound_checks: list[BoundCheck] = field(default_factory=list)
    exhaustive: bool = True
    incomplete_branches: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Blocked divisor-sum sieve (the oracle route)
# ---------------------------------------------------------------------------

def _sigma_block(lo: int, hi: int) -> np.ndarray:
    """sigma(n) for all n in [lo, hi) by paired-divisor accumulation.

    For each d <= sqrt(hi-1), every multiple n = d*j with j >= d gains the
    divisor pair d + j; the square n = d*d gains d twice and is corrected.
    """
    sig = np.zeros(hi - lo, dtype=np.int64)
    for d in range(1, isqrt(hi - 1) + 1):
        j0 = max(d, -(-lo // d))
        j1 = (hi - 1) // d
        if j0 > j1:
            continue
        count = j1 - j0 + 1
        view = sig[d * j0 - lo :: d][:count]
        view += np.arange(j0 + d, j1 + d + 1, dtype=np.int64)
        if j0 <= d <= j1:
            sig[d * d - lo] -= d
    return sig


def _scan_block(task) -> list[int]:
    lo, hi, num, den, integer_mode = task
    sig = _sigma_block(lo, hi)
    n_vals = np.arange(lo, hi, dtype=np.int64)
    if integer_mode:
        hits = np.nonzero((sig % n_vals == 0) & (sig >= 2 * n_vals))[0]
    else:
        hits = np.nonzero(den * sig == num * n_vals)[0]
    return [int(n) for n in n_vals[hits]]


def _run_blocks(
    limit: int,
    num: int,
    den: int,
    integer_mode: bool,
    worker_count: int,
    block_size: int,
) -> list[int]:
    if num * limit >= 1 << 62 or den * 7 * limit >= 1 << 62:
        raise ValueError("alpha times limit exceeds the exact range of the sieve")
    tasks = [
        (lo, min(lo + block_size, limit + 1), num, den, integer_mode)
        for lo in range(1, limit + 1, block_size)
    ]
    if worker_count > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=worker_count) as pool:
            chunks = pool.map(_scan_block, tasks, chunksize=1)
            candidates = [n for chunk in chunks for n in chunk]
    else:
        candidates = [n for task in tasks for n in _scan_block(task)]
    return candidates


def brute_scan(
    alpha: Fraction,
    limit: int,
    parity: str = "any",
    *,
    worker_count: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> list[FactoredInteger]:
    """All n <= limit of the requested parity with sigma(n)/n = alpha.

    Sieve candidates are re-verified one by one through an independent
    sigma computation on the factorization before being reported.
    """
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise ValueError("alpha must exceed 1")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if parity not in ("any", "odd_only"):
        raise ValueError(f"unknown parity {parity!r}")
    candidates = _run_blocks(
        limit, alpha.numerator, alpha.denominator, False, worker_count, block_size
    )
    out = []
    for n in sorted(candidates):
        if parity == "odd_only" and n % 2 == 0:
            continue
        fi = factorize(n)
        if sigma(fi) * alpha.denominator != alpha.numerator * n:
            raise AssertionError(f"sieve candidate {n} failed sigma re-verification")
        out.append(fi)
    return out


def multiperfect_scan(
    limit: int,
    *,
    worker_count: int = 1,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> list[FactoredInteger]:
    """All n <= limit whose abundancy sigma(n)/n is an integer >= 2."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    candidates = _run_blocks(limit, 1, 1, True, worker_count, block_size)
    out = []
    for n in sorted(candidates):
        fi = factorize(n)
        s = sigma(fi)
        if s % n != 0 or s < 2 * n:
            raise AssertionError(f"sieve candidate {n} failed sigma re-verification")
        out.append(fi)
    return out


# ---------------------------------------------------------------------------
# Signature-chain search (the counting route)
# ---------------------------------------------------------------------------

def _p1_cap(alpha: Fraction, s: int) -> int:
    """floor(alpha*s/(alpha-1)), the cap on the smallest prime of odd n."""
    v = alpha * s / (alpha - 1)
    return v.numerator // v.denominator


class _ChainState:
    __slots__ = ("found", "nodes", "prunes")

    def __init__(self):
        self.found: list[tuple[int, tuple[tuple[int, int], ...]]] = []
        self.nodes = 0
        self.prunes = dict.fromkeys(PRUNE_RULES, 0)


def _derive_next(
    sigma_exp: dict[int, int],
    used: set[int],
    nu_alpha: dict[int, int],
    den_primes: tuple[int, ...],
) -> int | None:
    # Smallest unused prime whose valuation in the sigma product exceeds its
    # valuation in alpha; only sigma-product and denominator primes qualify.
    best = None
    for p in sigma_exp:
        if p not in used and sigma_exp[p] > nu_alpha.get(p, 0):
            if best is None or p < best:
                best = p
    for p in den_primes:
        if p not in used and sigma_exp.get(p, 0) > nu_alpha[p]:
            if best is None or p < best:
                best = p
    return best


def _dfs(
    chain: list[tuple[int, int]],
    product: int,
    sigma_prod: int,
    sigma_exp: dict[int, int],
    used: set[int],
    s_target: int,
    ctx: tuple,
    state: _ChainState,
) -> None:
    num, den, nu_alpha, den_primes, limit = ctx
    state.nodes += 1
    lhs = den * sigma_prod
    rhs = num * product
    if lhs == rhs:
        state.found.append((product, tuple(sorted(chain))))
        return
    if lhs > rhs:
        state.prunes["abundancy_exceeded"] += 1
        return
    nxt = _derive_next(sigma_exp, used, nu_alpha, den_primes)
    if nxt is None:
        state.prunes["chain_broken"] += 1
        return
    if len(chain) == s_target:
        state.prunes["depth_cap"] += 1
        return
    if nxt < chain[0][0]:
        # The product's smallest prime would no longer be p1; the same
        # number is enumerated under the branch rooted at that smaller
        # prime, and no odd target survives a derived factor of 2.
        state.prunes["nonminimal_start"] += 1
        return
    used.add(nxt)
    power = nxt
    e = 1
    while product * power <= limit:
        child_exp = dict(sigma_exp)
        for q, k in factored_sigma_prime_power(nxt, e):
            child_exp[q] = child_exp.get(q, 0) + k
        chain.append((nxt, e))
        _dfs(
            chain,
            product * power,
            sigma_prod * ((power * nxt - 1) // (nxt - 1)),
            child_exp,
            used,
            s_target,
            ctx,
            state,
        )
        chain.pop()
        e += 1
        power *= nxt
    used.discard(nxt)
    state.prunes["product_exceeds_limit"] += 1


def _chain_task(args):
    (num, den, nu_alpha_items, den_primes, limit, s_target, p1, e1) = args
    state = _ChainState()
    nu_alpha = dict(nu_alpha_items)
    ctx = (num, den, nu_alpha, den_primes, limit)
    incomplete: list[str] = []
    sigma_exp: dict[int, int] = {}
    try:
        for q, k in factored_sigma_prime_power(p1, e1):
            sigma_exp[q] = sigma_exp.get(q, 0) + k
        _dfs(
            [(p1, e1)],
            p1**e1,
            (p1 ** (e1 + 1) - 1) // (p1 - 1),
            sigma_exp,
            {p1},
            s_target,
            ctx,
            state,
        )
    except FactorizationExhausted as exc:
        incomplete.append(f"s={s_target} p1={p1} e1={e1}: {exc}")
    except RecursionError:
        incomplete.append(f"s={s_target} p1={p1} e1={e1}: recursion limit")
    return state.found, state.nodes, state.prunes, incomplete


def chain_search(params: SearchParams) -> SearchReport:
    """Enumerate signature chains; complete for primitive alpha-perfect n.

    For each target omega s = 1..max_omega, the free choices are p1 (odd
    primes capped by floor(alpha*s/(alpha-1)), plus 2 unless odd_only) and
    the exponent at each level; all later primes are derived. Every state
    is tested for sigma(d) = alpha*d exactly, so reported numbers need no
    chain to close early. A branch that hits the factorization budget is
    recorded and flips the exhaustive flag instead of aborting the search.
    """
    alpha = params.alpha
    num, den = alpha.numerator, alpha.denominator
    nu_alpha: dict[int, int] = {}
    for p, e in factorize(num).factors:
        nu_alpha[p] = e
    den_primes = []
    for p, e in factorize(den).factors:
        nu_alpha[p] = nu_alpha.get(p, 0) - e
        den_primes.append(p)
    den_primes = tuple(den_primes)

    prunes = dict.fromkeys(PRUNE_RULES, 0)
    integer_alpha = den == 1
    floor_s = omega_floor(num) if integer_alpha and num >= 2 else 0

    global_cap = _p1_cap(alpha, params.max_omega)
    odd_candidates = [p for p in primes_upto(max(global_cap, 2)) if p > 2]

    tasks = []
    for s in range(1, params.max_omega + 1):
        if (
            params.omega_floor_pruning
            and params.parity == "odd_only"
            and integer_alpha
            and s < floor_s
        ):
            prunes["omega_floor"] += 1
            continue
        cap = _p1_cap(alpha, s)
        starts = [] if params.parity == "odd_only" else [2]
        for p in odd_candidates:
            if p > cap:
                prunes["p1_bound"] += 1
            else:
                starts.append(p)
        for p1 in starts:
            power = p1
            e1 = 1
            while power <= params.limit:
                tasks.append(
                    (
                        num,
                        den,
                        tuple(nu_alpha.items()),
                        den_primes,
                        params.limit,
                        s,
                        p1,
                        e1,
                    )
                )
                e1 += 1
                power *= p1
            prunes["product_exceeds_limit"] += 1

    if params.worker_count > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=params.worker_count) as pool:
            results = list(pool.map(_chain_task, tasks, chunksize=8))
    else:
        results = [_chain_task(t) for t in tasks]

    nodes = 0
    incomplete: list[str] = []
    by_value: dict[int, tuple[tuple[int, int], ...]] = {}
    for found, task_nodes, task_prunes, task_incomplete in results:
        nodes += task_nodes
        for rule, count in task_prunes.items():
            prunes[rule] += count
        incomplete.extend(task_incomplete)
        for value, factors in found:
            by_value[value] = factors

    records = []
    count_by_omega: dict[int, int] = {}
    for value in sorted(by_value):
        fi = FactoredInteger(value, by_value[value])
        if sigma(fi) * den != num * value:
            raise AssertionError(f"chain result {value} failed sigma re-verification")
        records.append(FoundRecord(fi, is_primitive(fi)))
        count_by_omega[fi.omega] = count_by_omega.get(fi.omega, 0) + 1

    return SearchReport(
        params=params,
        found=tuple(records),
        count_by_omega=count_by_omega,
        nodes_explored=nodes,
        pruned_by=prunes,
        exhaustive=not incomplete,
        incomplete_branches=tuple(sorted(incomplete)),
    )


def chain_count_majorant(alpha: Fraction, r: int, x: int) -> int:
    """Exact evaluation of the counting expression that caps the tree size.

    sum over s of pi(floor(alpha*s/(alpha-1))) * prod_i max{e : q_i^e <= x},
    with q_i the i-th odd prime. chain_search never explores more states.
    """
    total = 0
    for s in range(1, r + 1):
        count = prime_count_upto(_p1_cap(Fraction(alpha), s))
        prod = 1
        for i in range(1, s + 1):
            q = nth_odd_prime(i)
            e = 0
            power = q
            while power <= x:
                e += 1
                power *= q
            prod *= e
        total += count * prod
    return total


def verify_counts(params: SearchParams, report: SearchReport) -> list[BoundCheck]:
    """Compare observed counts against the rigorous bound values.

    A check passes only when the count is at most the lower endpoint of the
    bound interval (or the exact integer bound), so a pass is never owed to
    rounding.
    """
    checks: list[BoundCheck] = []
    if params.limit < 3:
        return checks
    alpha = params.alpha
    integer_alpha = alpha.denominator == 1
    odd_primitive = sum(
        1 for f in report.found if f.number.value % 2 == 1 and f.primitive
    )
    b = primitive_count_bound(
        alpha, params.max_omega, params.limit, integer_alpha=integer_alpha
    )
    label = "0.05*(ln x)^r" if integer_alpha else "1.31*a/(a-1)*(ln x)^r"
    checks.append(
        BoundCheck(
            f"odd primitive count <= {label}",
            odd_primitive,
            str(b),
            odd_primitive <= b.lower,
        )
    )
    if integer_alpha:
        k = alpha.numerator
        odd_total = sum(1 for f in report.found if f.number.value % 2 == 1)
        b4 = multiperfect_count_bound(k, params.max_omega, params.limit)
        checks.append(
            BoundCheck(
                "odd count <= k*(ln x)^((r^2+8r)/9)",
                odd_total,
                str(b4),
                odd_total <= b4.lower,
            )
        )
        if params.max_omega <= 20:
            t1 = absolute_count_bound(k, params.max_omega)
            checks.append(
                BoundCheck(
                    "odd count <= k*4^(r^3) (limit-free form)",
                    odd_total,
                    f"{k}*4^{params.max_omega**3}",
                    odd_total <= t1,
                )
            )
    return checks

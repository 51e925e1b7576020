"""Empirical checks of return-word bounds, power index, periodicity and complexity.

Every constant reported here (``K``, ``L``, ``M``, ``N``, ``Q``, ``r``, ``R``)
is an observation over the scanned range, not a certified value.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import InputError, ResourceError, WindowTooSmall
from .induced import induced_substitution
from .returns import PARTIAL, ReturnWordIndex, extract
from .sequences import FixedPointOracle, SequenceOracle
from .substitution import growth_stats, is_primitive
from .words import factors, max_power_index, probe_period

DEFAULT_WINDOW = 4096
POWER_WINDOW = 2048


def return_index(o: SequenceOracle, u: str, window: int | None = None) -> ReturnWordIndex:
    """Certified index via the closure for fixed points, brute force otherwise."""
    if isinstance(o, FixedPointOracle):
        return induced_substitution(o.substitution, u, o).index
    return extract(o, u, window or DEFAULT_WINDOW)


@dataclass
class BoundsRow:
    prefix_len: int
    card: int
    min_return: int
    max_return: int
    status: str

    @property
    def min_ratio(self) -> float:
        return self.min_return / self.prefix_len

    @property
    def max_ratio(self) -> float:
        return self.max_return / self.prefix_len


@dataclass
class BoundsReport:
    rows: list[BoundsRow]
    skipped: list[int]
    max_power_index: int
    power_window: int
    growth_ratios: list[float]
    complexity: Complexity | None
    r: int | None
    R: int | None

    @property
    def K(self) -> int:
        return max(row.card for row in self.rows)

    @property
    def L(self) -> float:
        return min(row.min_ratio for row in self.rows)

    @property
    def M(self) -> float:
        return max(row.max_ratio for row in self.rows)

    @property
    def Q(self) -> float | None:
        return max(self.growth_ratios) if self.growth_ratios else None

    @property
    def m(self) -> list[int]:
        """Minimal return-word length per analysed prefix length."""
        return [row.min_return for row in self.rows]

    @property
    def cards(self) -> list[int]:
        return [row.card for row in self.rows]

    @property
    def power_bound_ok(self) -> bool:
        """``min |v| >= |u| / N`` on every row, with ``N`` the observed power index."""
        n = self.max_power_index
        return all(row.min_return * n >= row.prefix_len for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "rows": [dict(asdict(r), min_ratio=r.min_ratio, max_ratio=r.max_ratio)
                     for r in self.rows],
            "skipped_partial": self.skipped,
            "K": self.K, "L": self.L, "M": self.M, "Q": self.Q,
            "m": self.m,
            "max_power_index": self.max_power_index,
            "power_window": self.power_window,
            "power_bound_ok": self.power_bound_ok,
            "growth_ratios": self.growth_ratios,
            "complexity": self.complexity.to_dict() if self.complexity else None,
            "r": self.r, "R": self.R,
        }


@dataclass
class Complexity:
    counts: list[int]
    window: int

    @property
    def differences(self) -> list[int]:
        c = self.counts
        return [b - a for a, b in zip(c, c[1:])]

    def to_dict(self) -> dict:
        return {"p": self.counts, "differences": self.differences, "window": self.window}


@dataclass(frozen=True)
class Verdict:
    kind: str  # "periodic" | "aperiodic-evidence" | "inconclusive"
    period: int | None = None
    m: list[int] = field(default_factory=list, compare=False)

    def __str__(self):
        return f"periodic({self.period})" if self.kind == "periodic" else self.kind


def bounds_report(o: SequenceOracle, n_max: int, window: int | None = None,
                  power_window: int = POWER_WINDOW, complexity_n: int = 20,
                  growth_n: int = 30) -> BoundsReport:
    """Return-word statistics for the prefixes of length ``1..n_max``.

    Brute-force indexes that did not stabilise within the window are left
    out of the table and listed in ``skipped``.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    rows, skipped = [], []
    for n in range(1, n_max + 1):
        u = o.prefix(n)
        idx = return_index(o, u, window)
        if idx.status == PARTIAL:
            skipped.append(n)
            continue
        lengths = idx.lengths
        rows.append(BoundsRow(n, idx.card, min(lengths), max(lengths), idx.status))
    if not rows:
        raise WindowTooSmall("no prefix length produced a stabilized index")

    x = o.prefix(min(power_window, o.max_prefix))
    growth = []
    if isinstance(o, FixedPointOracle):
        growth = [g.ratio for g in growth_stats(o.substitution, growth_n)]
    complexity = None
    if complexity_n:
        complexity = factor_complexity(o, complexity_n, max(window or 0, 4 * complexity_n, 1024))
    r, R = _two_factor_recurrence(o.prefix(min(max(window or 0, DEFAULT_WINDOW), o.max_prefix)))
    return BoundsReport(rows, skipped, max_power_index(x), len(x), growth, complexity, r, R)


def _two_factor_recurrence(x: str):
    """``(r, R)`` on a window.

    ``R`` is the largest gap between successive occurrences of a length-2
    factor; ``r`` the smallest length such that every window factor of that
    length (with all successors inside the window) contains every 2-factor.
    """
    if len(x) < 3:
        return None, None
    occ: dict[str, list[int]] = {}
    for i in range(len(x) - 1):
        occ.setdefault(x[i:i + 2], []).append(i)
    R = max((b - a for ps in occ.values() for a, b in zip(ps, ps[1:])), default=None)
    # next occurrence of each factor at or after i, scanning from the right
    nxt = {f: None for f in occ}
    r = None
    for i in range(len(x) - 2, -1, -1):
        nxt[x[i:i + 2]] = i
        if any(p is None for p in nxt.values()):
            continue
        need = max(nxt.values()) + 2 - i
        r = need if r is None else max(r, need)
    return r, R


def detect_periodicity(o: SequenceOracle, n_max: int, window: int | None = None) -> Verdict:
    """Periodic if some prefix has a single return word whose length is a
    confirmed period; aperiodic evidence if the minimal return length grew
    over the scan; inconclusive otherwise."""
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    window = window or DEFAULT_WINDOW
    m = []
    for n in range(1, n_max + 1):
        try:
            idx = return_index(o, o.prefix(n), window)
        except (WindowTooSmall, ResourceError):
            break
        m.append(min(idx.lengths))
        if idx.card == 1:
            x = o.prefix(min(window, o.max_prefix))
            p = len(idx.words[0])
            if 2 * p <= len(x):
                q = probe_period(x, p)
                if q is not None:
                    return Verdict("periodic", q, m)
    if len(m) >= 2 and m[-1] > m[0]:
        return Verdict("aperiodic-evidence", None, m)
    return Verdict("inconclusive", None, m)


def factor_complexity(o: SequenceOracle, n_max: int, window: int) -> Complexity:
    """Number of distinct factors of each length ``1..n_max`` in a window.

    For fixed points of primitive substitutions the window is doubled until
    the count for ``n_max`` stops changing.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    if window < 4 * n_max:
        raise WindowTooSmall(f"window {window} below 4 * n_max = {4 * n_max}")
    window = min(window, o.max_prefix)
    if window < 4 * n_max:
        raise WindowTooSmall("sequence shorter than 4 * n_max")
    grow = isinstance(o, FixedPointOracle) and is_primitive(o.substitution)[0]
    count = len(factors(o.prefix(window), n_max))
    while grow and 2 * window <= o.max_prefix:
        bigger = len(factors(o.prefix(2 * window), n_max))
        window *= 2
        if bigger == count:
            break
        count = bigger
    x = o.prefix(window)
    return Complexity([len(factors(x, n)) for n in range(1, n_max + 1)], window)

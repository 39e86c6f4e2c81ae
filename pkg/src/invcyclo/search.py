"""Enumeration over family triples, flat sets S(p, q) and the q = tp + 1 construction."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .exceptions import DomainError, NoFamilyFoundError, NotPrimeError, OrderingError
from .heightflat import height_formula, is_flat
from .numtheory import FamilyTriple, decompose_r, is_prime, make_family_triple
from .polyoracle import height_of, inverse_cyclotomic

CSV_FIELDS = (
    "p", "q", "r", "alpha", "beta", "p_prime", "q_prime", "C_formula", "C_oracle",
    "flat", "cond_a", "cond_b", "cond_c", "cond_d", "ratio_num", "ratio_den",
)


@dataclass(frozen=True)
class SearchRecord:
    p: int
    q: int
    r: int
    alpha: int
    beta: int
    p_prime: int
    q_prime: int
    C_formula: int
    C_oracle: int | None
    flat: bool
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool
    ratio_num: int
    ratio_den: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.ratio_num, self.ratio_den)

    @property
    def key(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r


def make_record(t: FamilyTriple, oracle: bool = False) -> SearchRecord:
    v = is_flat(t)
    return SearchRecord(
        t.p, t.q, t.r, t.alpha, t.beta, t.p_prime, t.q_prime,
        height_formula(t),
        height_of(inverse_cyclotomic(t.n)) if oracle else None,
        v.flat, v.cond_a, v.cond_b, v.cond_c, v.cond_d,
        t.r, t.phi_pq,
    )


def _check_pair(p: int, q: int) -> None:
    for name, x in (("p", p), ("q", q)):
        if not is_prime(x):
            raise NotPrimeError(f"{name}={x} is not prime")
    if not 3 <= p < q:
        raise OrderingError(f"need odd primes 3 <= p < q, got ({p}, {q})")


def family_members(p: int, q: int, r_max: int | None = None) -> list[tuple[int, int, int]]:
    """All primes r <= phi(pq) with r = alpha*p + beta*q, alpha, beta > 0, ascending.

    ``r_max`` optionally truncates the scan.
    """
    _check_pair(p, q)
    top = (p - 1) * (q - 1)
    if r_max is not None:
        top = min(top, r_max)
    out = []
    for r in range(q + 2, top + 1, 2):
        if is_prime(r):
            rep = decompose_r(p, q, r)
            if rep is not None:
                out.append((r, *rep))
    return out


def family_records(p: int, q: int, oracle: bool = False) -> list[SearchRecord]:
    return [make_record(make_family_triple(p, q, r), oracle) for r, _, _ in family_members(p, q)]


def flat_set(p: int, q: int, oracle: bool = False) -> list[SearchRecord]:
    """S(p, q) as records, ascending by r."""
    return [rec for rec in family_records(p, q, oracle) if rec.flat]


def family_triples(max_pqr: int) -> Iterator[FamilyTriple]:
    """Every family triple with pqr <= max_pqr, in ascending (p, q, r) order."""
    p = 3
    while p * (p + 2) * (p + 4) <= max_pqr:
        if is_prime(p):
            q = p + 2
            while p * q * (q + 2) <= max_pqr:
                if is_prime(q):
                    for r, _, _ in family_members(p, q, max_pqr // (p * q)):
                        yield make_family_triple(p, q, r)
                q += 2
        p += 2


def trivial_triples(max_pqr: int) -> Iterator[tuple[int, int, int]]:
    """Prime triples p < q < r with r > phi(pq) and pqr <= max_pqr."""
    p = 3
    while p * (p + 2) * (p + 4) <= max_pqr:
        if is_prime(p):
            q = p + 2
            while p * q * (q + 2) <= max_pqr:
                if is_prime(q):
                    for r in range(max(q + 1, (p - 1) * (q - 1) + 1), max_pqr // (p * q) + 1):
                        if is_prime(r):
                            yield p, q, r
                q += 2
        p += 2


@dataclass(frozen=True)
class TpFamily:
    """Triples (p, tp + 1, r) with r = 1 (mod p) in [2tp + 1, phi(pq)]; all flat."""

    p: int
    t: int

    @property
    def q(self) -> int:
        return self.t * self.p + 1

    @property
    def progression_start(self) -> int:
        return 2 * self.t * self.p + 1

    @property
    def step(self) -> int:
        return self.p

    @property
    def limit(self) -> int:
        return (self.p - 1) * (self.q - 1)

    def progression(self) -> range:
        return range(self.progression_start, self.limit + 1, self.step)

    def primes(self) -> list[int]:
        return [r for r in self.progression() if is_prime(r)]

    def triples(self) -> list[FamilyTriple]:
        return [make_family_triple(self.p, self.q, r) for r in self.primes()]


def tp_family(p: int, t: int) -> TpFamily:
    if not is_prime(p) or p < 3:
        raise NotPrimeError(f"p={p} is not an odd prime")
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    fam = TpFamily(p, t)
    if not is_prime(fam.q):
        raise NotPrimeError(f"q = {t}*{p} + 1 = {fam.q} is not prime")
    return fam


@dataclass(frozen=True)
class RatioExperiment:
    p: int
    t_max: int
    best: SearchRecord
    candidates: tuple[SearchRecord, ...]

    @property
    def bound(self) -> Fraction:
        return Fraction(5, self.p)

    @property
    def achieved(self) -> bool:
        return self.best.ratio < self.bound


def min_ratio_experiment(p: int, t_max: int) -> RatioExperiment:
    """Smallest r/phi(pq) over S(p, q) for q = tp + 1 prime, t <= t_max.

    ``candidates`` holds the minimiser of each scanned q.
    """
    if not is_prime(p) or p <= 5:
        raise DomainError(f"p must be a prime > 5, got {p}")
    candidates = []
    for t in range(1, t_max + 1):
        q = t * p + 1
        if not is_prime(q):
            continue
        flats = flat_set(p, q)
        if flats:
            candidates.append(min(flats, key=lambda rec: (rec.ratio, rec.r)))
    if not candidates:
        raise NoFamilyFoundError(f"no family found for p={p}, t <= {t_max}")
    best = min(candidates, key=lambda rec: (rec.ratio, rec.key))
    return RatioExperiment(p, t_max, best, tuple(candidates))


def _sweep_one(args: tuple[int, int, bool]) -> list[SearchRecord]:
    p, q, oracle = args
    return family_records(p, q, oracle)


def sweep(pairs: Iterable[tuple[int, int]], oracle: bool = False, jobs: int = 1) -> list[SearchRecord]:
    """Records for every family triple of the given (p, q) pairs, sorted by (p, q, r)."""
    work = [(p, q, oracle) for p, q in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_one, work))
    else:
        chunks = [_sweep_one(w) for w in work]
    return sorted((rec for chunk in chunks for rec in chunk), key=lambda rec: rec.key)


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(int(v))
    return str(v)


def write_csv(records: Iterable[SearchRecord], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in sorted(records, key=lambda rec: rec.key):
        row = asdict(rec)
        writer.writerow([_csv_value(row[f]) for f in CSV_FIELDS])


def write_json(records: Iterable[SearchRecord], fh: TextIO) -> None:
    rows = [asdict(rec) for rec in sorted(records, key=lambda rec: rec.key)]
    json.dump(rows, fh, indent=2)
    fh.write("\n")


def read_json(fh: TextIO) -> list[SearchRecord]:
    return [SearchRecord(**{f: row[f] for f in CSV_FIELDS}) for row in json.load(fh)]


def read_csv(fh: TextIO) -> list[SearchRecord]:
    out = []
    for row in csv.DictReader(fh):
        vals = {}
        for f in CSV_FIELDS:
            s = row[f]
            if f == "flat" or f.startswith("cond_"):
                vals[f] = s == "1"
            elif f == "C_oracle":
                vals[f] = int(s) if s else None
            else:
                vals[f] = int(s)
        out.append(SearchRecord(**vals))
    return out


def export(records: Iterable[SearchRecord], fmt: str = "csv", destination: str | os.PathLike | TextIO | None = None) -> str:
    """Serialise records as CSV or JSON; returns the text and writes it to ``destination`` if given."""
    writers = {"csv": write_csv, "json": write_json}
    if fmt not in writers:
        raise DomainError(f"unknown export format {fmt!r}")
    buf = io.StringIO()
    writers[fmt](records, buf)
    text = buf.getvalue()
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
        return text
    path = Path(destination)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {fmt} export to {path}: {exc}") from exc
    return text

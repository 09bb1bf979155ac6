"""Command-line front end: classify, audit, search, dual, tables.

Every command streams one JSON object per line (or CSV with ``--format
csv``).  Records carry no wall-clock data unless ``--timing`` is given, so a
fixed job and seed reproduce the output byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Iterator

from .code import DEFAULT_MAX_WORK, classify, dual, is_self_dual
from .errors import SubGRSError, SpecValidation
from .family import EvalConfig, build, sub_egrs, sub_grs, subcode_degrees
from .field import FieldElement, FieldSpec, parse_field
from .matrix import row_space_equal
from .syminv import (
    SymContext,
    cyclic_subgroup_points,
    deleted_moment_closed_form,
    deleted_moments,
    lagrange_u,
    moment_closed_form,
    moments,
)
from . import theory as th

SOURCES = ("explicit", "all-subsets", "cyclic-subgroup", "random")
FAMILY_CHOICES = ("grs", "egrs", "sub_grs", "sub_egrs", "plus_tgrs")


# parsing ----------------------------------------------------------------------

def parse_range(text: str | None) -> list[int] | None:
    """``"5"``, ``"4..7"`` or ``"4,6,8"`` (pieces may be mixed)."""
    if text is None:
        return None
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    return sorted(set(out))


def parse_element(field: FieldSpec, token: str) -> FieldElement:
    """An integer encoding, ``c0:c1:...`` coefficients, or ``g^e``."""
    token = token.strip()
    if token.startswith("g^"):
        return field.primitive_element() ** int(token[2:])
    if ":" in token:
        return field([int(c) for c in token.split(":")])
    v = int(token)
    if v < 0:
        return -field.from_int(-v)
    return field.from_int(v)


def parse_elements(field: FieldSpec, text: str) -> list[FieldElement]:
    return [parse_element(field, t) for t in text.split(",") if t.strip()]


# job spec ---------------------------------------------------------------------

@dataclass
class JobSpec:
    command: str
    field: FieldSpec
    n: list[int] | None = None
    k: list[int] | None = None
    r: list[int] | None = None
    source: str = "explicit"
    points: list[FieldElement] | None = None
    factors: str = "ones"
    factor_list: list[FieldElement] | None = None
    eta: FieldElement | None = None
    family: str = "sub_grs"
    theorems: list[str] = dc_field(default_factory=list)
    seed: int | None = None
    count: int = 100
    trials: int = 1000
    limit: int | None = None
    max_work: int = DEFAULT_MAX_WORK
    require_cases: list[int] = dc_field(default_factory=list)

    def validate(self) -> None:
        if self.source not in SOURCES:
            raise SpecValidation(f"unknown source {self.source!r}")
        if self.source == "explicit":
            if not self.points:
                raise SpecValidation("--source explicit needs --points")
            self.n = [len(self.points)]
        elif self.n is None:
            raise SpecValidation(f"--source {self.source} needs --n")
        if self.source == "random" and self.seed is None:
            raise SpecValidation("--source random needs an explicit --seed")
        if self.factors == "random" and self.seed is None:
            raise SpecValidation("--factors random needs an explicit --seed")
        if self.factor_list is not None and self.source != "explicit":
            raise SpecValidation("explicit --factors only combine with --source explicit")
        if self.factor_list is not None and len(self.factor_list) != len(self.points or []):
            raise SpecValidation("--factors and --points differ in length")
        if any(x > self.field.q for x in self.n or []):
            raise SpecValidation(f"n exceeds q = {self.field.q}")
        if self.family not in FAMILY_CHOICES:
            raise SpecValidation(f"unknown family {self.family!r}")
        if self.family == "plus_tgrs" and self.command == "classify" and (self.eta is None or self.eta == 0):
            raise SpecValidation("plus_tgrs needs a nonzero --eta")

    def echo(self) -> dict:
        return {
            "command": self.command,
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "source": self.source,
            "factors": self.factors,
            "family": self.family,
            "theorems": self.theorems,
            "seed": self.seed,
        }


def iter_point_sets(spec: JobSpec) -> Iterator[list[FieldElement]]:
    field = spec.field
    for n in spec.n or []:
        if spec.source == "explicit":
            yield list(spec.points)
        elif spec.source == "all-subsets":
            for combo in itertools.combinations(range(field.q), n):
                yield [FieldElement(field, x) for x in combo]
        elif spec.source == "cyclic-subgroup":
            if (field.q - 1) % n == 0:
                yield cyclic_subgroup_points(field, n)
        else:
            rng = random.Random(spec.seed * 1_000_003 + n)
            for _ in range(spec.count):
                yield [FieldElement(field, x) for x in sorted(rng.sample(range(field.q), n))]


def _factors_for(spec: JobSpec, index: int, n: int) -> list[FieldElement]:
    field = spec.field
    if spec.factor_list is not None:
        return list(spec.factor_list)
    if spec.factors == "random":
        rng = random.Random(spec.seed * 7_919 + index)
        return [FieldElement(field, rng.randrange(1, field.q)) for _ in range(n)]
    return [field.one] * n


def _pick(requested: list[int] | None, valid: Iterable[int]) -> list[int]:
    valid = list(valid)
    return valid if requested is None else [x for x in valid if x in set(requested)]


def _js(xs) -> list:
    return [x.to_json() for x in xs]


# per-instance workers ------------------------------------------------------------

@dataclass
class Task:
    index: int
    spec: JobSpec
    points: list[FieldElement]
    factors: list[FieldElement]


def _valid_kr(family: str, n: int, spec: JobSpec) -> list[tuple[int, int | None]]:
    if family == "grs":
        return [(k, None) for k in _pick(spec.k, range(1, n + 1))]
    if family == "egrs":
        return [(k, None) for k in _pick(spec.k, range(1, n + 2))]
    if family == "plus_tgrs":
        return [(k, None) for k in _pick(spec.k, range(1, n))]
    out = []
    for k in _pick(spec.k, range(2, n)):
        for r in _pick(spec.r, range(1, k)):
            out.append((k, r))
    return out


def _classify_task(task: Task) -> list[dict]:
    spec, a = task.spec, task.points
    n = len(a)
    cfg = EvalConfig.of(spec.field, a, task.factors)
    out = []
    for k, r in _valid_kr(spec.family, n, spec):
        code = build(spec.family, cfg, k, r, spec.eta)
        prof = classify(code, max_work=spec.max_work)
        rec = {
            "family": spec.family,
            "n": n,
            "k": k,
            "r": r,
            "points": _js(a),
            "factors": _js(task.factors),
            **prof.to_json(),
        }
        preds: dict = {}
        agree = True
        if spec.family in ("grs", "egrs"):
            preds["mds"] = True
            agree = prof.category == "MDS"
        elif spec.family == "plus_tgrs":
            v = th.plus_tgrs_is_mds(a, k, spec.eta)
            preds["mds"] = v.to_json()
            agree = v.is_mds == (prof.category == "MDS")
        else:
            ext = spec.family == "sub_egrs"
            v = (th.sub_egrs_is_mds if ext else th.sub_grs_is_mds)(a, k, r)
            preds["mds"] = v.to_json()
            agree = v.is_mds == (prof.category == "MDS")
            if r >= 2:
                cert = (th.sub_egrs_dual_dist_ge_k if ext else th.sub_grs_dual_dist_ge_k)(a, k, r)
                preds["dual_distance_ge_k"] = cert.to_json()
                agree = agree and cert.dual_distance_ge_k == (prof.d_dual >= k)
        rec["predicates"] = preds
        rec["oracle_agrees"] = agree
        out.append(rec)
    return out


def _audit_record(theorem: str, params: dict, verdict, agrees: bool, witness=None) -> dict:
    return {
        "theorem": theorem,
        "params": params,
        "verdict": verdict,
        "witness": witness,
        "oracle_agrees": bool(agrees),
    }


def _audit_moments(task: Task) -> list[dict]:
    a = task.points
    n = len(a)
    if n < 2:
        return []
    ctx = SymContext.of(a, check=False)
    ok = all(
        moments(ctx, ell) == moment_closed_form(ctx, ell)
        and deleted_moments(ctx, ell) == deleted_moment_closed_form(ctx, ell)
        for ell in range(n + 2)
    )
    return [_audit_record("moments", {"n": n, "points": _js(a)}, ok, ok)]


def _audit_mds(task: Task) -> list[dict]:
    a = task.points
    n = len(a)
    out = []
    cfg = EvalConfig.of(task.spec.field, a, task.factors)
    for k in _pick(task.spec.k, range(2, n)):
        for r in _pick(task.spec.r, range(1, k)):
            for name, fam, pred in (
                ("mds-sub-grs", sub_grs, th.sub_grs_is_mds),
                ("mds-sub-egrs", sub_egrs, th.sub_egrs_is_mds),
            ):
                prof = classify(fam(cfg, k, r), max_work=task.spec.max_work)
                v = pred(a, k, r)
                params = {"n": n, "k": k, "r": r, "points": _js(a), "category": prof.category}
                out.append(_audit_record(name, params, v.is_mds, v.is_mds == (prof.category == "MDS"), _js(v.witness or ())))
    return out


def _audit_nmds(task: Task) -> list[dict]:
    a = task.points
    n = len(a)
    out = []
    cfg = EvalConfig.of(task.spec.field, a, task.factors)
    for k in _pick(task.spec.k, range(3, n)):
        for r in _pick(task.spec.r, range(2, k)):
            for name, fam, pred in (
                ("nmds-sub-grs", sub_grs, th.sub_grs_dual_dist_ge_k),
                ("nmds-sub-egrs", sub_egrs, th.sub_egrs_dual_dist_ge_k),
            ):
                prof = classify(fam(cfg, k, r), max_work=task.spec.max_work)
                cert = pred(a, k, r)
                agree = cert.dual_distance_ge_k == (prof.d_dual >= k)
                if r == k - 1:
                    agree = agree and prof.category in ("NMDS", "MDS")
                params = {"n": n, "k": k, "r": r, "points": _js(a), "category": prof.category, "d_dual": prof.d_dual}
                out.append(_audit_record(name, params, cert.dual_distance_ge_k, agree, _js(cert.violating_subset or ())))
    return out


def _selfdual_setup(name: str, n: int):
    """(predicate, k, degrees, extension degree) or None when n does not fit."""
    if name == "selfdual-egrs-k1":
        if n % 2 == 0 or n < 3:
            return None
        k = (n + 1) // 2
        return th.sub_egrs_k1_selfdual_exists, k, subcode_degrees(k, k - 1), k
    if n % 2:
        return None
    k = n // 2
    if name == "selfdual-grs":
        return th.grs_selfdual_exists, k, list(range(k)), None
    if n < 4:
        return None
    if name == "selfdual-1":
        return th.sub1_selfdual_exists, k, subcode_degrees(k, 1), None
    return th.subk1_selfdual_exists, k, subcode_degrees(k, k - 1), None


def _witness_code(name: str, field: FieldSpec, a, witness, k: int):
    cfg = EvalConfig.of(field, a, witness)
    if name == "selfdual-grs":
        return build("grs", cfg, k)
    if name == "selfdual-1":
        return sub_grs(cfg, k, 1)
    if name == "selfdual-k1":
        return sub_grs(cfg, k, k - 1)
    return sub_egrs(cfg, k, k - 1)


def _audit_selfdual(name: str) -> Callable[[Task], list[dict]]:
    def run(task: Task) -> list[dict]:
        field, a = task.spec.field, task.points
        setup = _selfdual_setup(name, len(a))
        if setup is None:
            return []
        pred, k, degs, ext = setup
        verdict = pred(a)
        oracle = th.selfdual_factors_by_kernel(a, degs, ext, task.spec.max_work)
        agree = verdict.exists == (oracle is not None)
        if verdict.exists:
            agree = agree and is_self_dual(_witness_code(name, field, a, verdict.witness_factors, k))
        params = {"n": len(a), "k": k, "points": _js(a), "in_hypothesis": verdict.in_hypothesis}
        return [_audit_record(name, params, verdict.exists, agree, _js(verdict.witness_factors or ()))]

    return run


def _gram_zero_sq(field: FieldSpec, a_vals, x, sums, ext_sum) -> bool:
    """Whether sum_i x_i a_i^s (plus 1 at ``ext_sum``) vanishes for all s."""
    power, add, mul = field.power, field.add, field.mul
    for s in sums:
        acc = 1 if s == ext_sum else 0
        for ai, xi in zip(a_vals, x):
            acc = add(acc, mul(xi, power(ai, s)))
        if acc:
            return False
    return True


def _audit_midrange(task: Task) -> list[dict]:
    spec, a = task.spec, task.points
    field, n = spec.field, len(a)
    out = []
    for extended in (False, True):
        if (n + int(extended)) % 2:
            continue
        k = (n + int(extended)) // 2
        for r in _pick(spec.r, range(2, k - 1)):
            cert = th.midrange_never_selfdual(a, k, r, extended)
            rng = random.Random((spec.seed or 0) * 104_729 + task.index * 31 + r * 2 + int(extended))
            cfg_code = sub_egrs if extended else sub_grs
            hits = 0
            for _ in range(spec.trials):
                v = [FieldElement(field, rng.randrange(1, field.q)) for _ in range(n)]
                if is_self_dual(cfg_code(EvalConfig.of(field, a, v), k, r)):
                    hits += 1
            params = {"n": n, "k": k, "r": r, "extended": extended, "points": _js(a), **cert.to_json(), "trials": spec.trials}
            out.append(_audit_record("midrange", params, cert.full_rank, cert.full_rank and hits == 0))
    return out


def _closed_dual_records(task: Task) -> list[dict]:
    spec, a = task.spec, task.points
    field, n = spec.field, len(a)
    v = task.factors
    cfg = EvalConfig.of(field, a, v)
    want = set(spec.theorems) | ({"dual-1", "dual-k1", "dual-2", "parity-1", "parity-2", "parity-k1"} if "all" in spec.theorems else set())
    ctx = SymContext.of(a)
    tn1_zero = ctx.t[n - 1] == 0
    out = []
    base = {"n": n, "points": _js(a), "factors": _js(v)}
    if "dual-1" in want:
        for k in _pick(spec.k, range(2, n - 1)):
            ok = row_space_equal(th.dual_of_sub1(a, k, v).generator, dual(sub_grs(cfg, k, 1)).generator)
            out.append(_audit_record("dual-1", {**base, "k": k, "t1_zero": ctx.t[1] == 0}, ok, ok))
    if "dual-k1" in want and tn1_zero:
        for k in _pick(spec.k, range(3, n - 1)):
            ok = row_space_equal(th.dual_of_sub_k1(a, k, v).generator, dual(sub_grs(cfg, k, k - 1)).generator)
            out.append(_audit_record("dual-k1", {**base, "k": k}, ok, ok))
    if "dual-2" in want:
        for k in _pick(spec.k, range(3, n - 1)):
            ok = row_space_equal(th.dual_of_sub2(a, k, v).generator, dual(sub_grs(cfg, k, 2)).generator)
            out.append(_audit_record("dual-2", {**base, "k": k, "case": th.sub2_dual_case(a)}, ok, ok))
    parity = (
        ("parity-1", th.parity_of_sub_egrs_1, 1, range(2, n)),
        ("parity-2", th.parity_of_sub_egrs_2, 2, range(3, n - 1)),
        ("parity-k1", th.parity_of_sub_egrs_k1, None, range(3, n - 1)),
    )
    for name, fn, r_fixed, ks in parity:
        if name not in want or (name == "parity-k1" and not tn1_zero):
            continue
        for k in _pick(spec.k, ks):
            r = k - 1 if r_fixed is None else r_fixed
            h = fn(a, k, v)
            g = sub_egrs(cfg, k, r).generator
            ok = (h @ g.T).is_zero() and h.rank() == n + 1 - k
            extra = {"t1_zero": ctx.t[1] == 0} if name == "parity-2" else {}
            out.append(_audit_record(name, {**base, "k": k, **extra}, ok, ok))
    return out


def _audit_shift(task: Task) -> list[dict]:
    field, a = task.spec.field, task.points
    n = len(a)
    if n % field.p == 0:
        return []
    b = th.shift_points(a)
    s1_zero = sum(b, field.zero) == 0
    same_u = lagrange_u(b) == lagrange_u(a)
    implication = True
    if n % 2 == 0 and n >= 4 and field.p != 2:
        implication = (not th.grs_selfdual_exists(a).exists) or th.sub1_selfdual_exists(b).exists
    ok = s1_zero and same_u and implication
    return [_audit_record("shift", {"n": n, "points": _js(a), "shifted": _js(b)}, ok, ok)]


AUDITS: dict[str, Callable[[Task], list[dict]]] = {
    "moments": _audit_moments,
    "mds": _audit_mds,
    "nmds": _audit_nmds,
    "selfdual-grs": _audit_selfdual("selfdual-grs"),
    "selfdual-1": _audit_selfdual("selfdual-1"),
    "selfdual-k1": _audit_selfdual("selfdual-k1"),
    "selfdual-egrs-k1": _audit_selfdual("selfdual-egrs-k1"),
    "midrange": _audit_midrange,
    "shift": _audit_shift,
}
DUAL_THEOREMS = ("dual-1", "dual-k1", "dual-2", "parity-1", "parity-2", "parity-k1")
THEOREMS = tuple(AUDITS) + DUAL_THEOREMS


def _audit_task(task: Task) -> list[dict]:
    names = list(THEOREMS) if "all" in task.spec.theorems else task.spec.theorems
    out = []
    for name in names:
        if name in AUDITS:
            out.extend(AUDITS[name](task))
    if any(name in DUAL_THEOREMS for name in names):
        out.extend(_closed_dual_records(task))
    return out


def _search_task(task: Task) -> list[dict]:
    field, a = task.spec.field, task.points
    out = []
    for name in task.spec.theorems:
        if name == "midrange":
            n = len(a)
            for extended in (False, True):
                if (n + int(extended)) % 2:
                    continue
                k = (n + int(extended)) // 2
                for r in _pick(task.spec.r, range(2, k - 1)):
                    w = th.selfdual_factors_by_kernel(a, subcode_degrees(k, r), k if extended else None, task.spec.max_work)
                    if w is not None:
                        out.append({"theorem": name, "n": n, "k": k, "r": r, "extended": extended, "points": _js(a), "witness": _js(w), "self_dual": True})
            continue
        setup = _selfdual_setup(name, len(a))
        if setup is None:
            continue
        pred, k, _, _ = setup
        verdict = pred(a)
        if not verdict.exists:
            continue
        code = _witness_code(name, field, a, verdict.witness_factors, k)
        prof = classify(code, max_work=task.spec.max_work)
        out.append({
            "theorem": name,
            "n": len(a),
            "k": k,
            "points": _js(a),
            "witness": _js(verdict.witness_factors),
            "self_dual": is_self_dual(code),
            "in_hypothesis": verdict.in_hypothesis,
            **prof.to_json(),
        })
    return out


def _run_task(args: tuple[str, Task]) -> tuple[list[dict], float]:
    kind, task = args
    start = time.perf_counter()
    fn = {"classify": _classify_task, "audit": _audit_task, "search": _search_task, "tables": _classify_task}[kind]
    recs = fn(task)
    return recs, time.perf_counter() - start


def _tasks(spec: JobSpec) -> Iterator[Task]:
    for i, a in enumerate(iter_point_sets(spec)):
        if spec.limit is not None and i >= spec.limit:
            return
        yield Task(i, spec, a, _factors_for(spec, i, len(a)))


def run_stream(spec: JobSpec, workers: int = 1, timing: bool = False) -> Iterator[dict]:
    """Records of ``spec`` in instance order, regardless of ``workers``."""
    jobs = ((spec.command, t) for t in _tasks(spec))
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run_task, jobs, chunksize=8)
    else:
        pool = None
        results = map(_run_task, jobs)
    try:
        for index, (recs, elapsed) in enumerate(results):
            for rec in recs:
                rec = {"index": index, **rec}
                if timing:
                    rec["elapsed_s"] = round(elapsed, 6)
                yield rec
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


# commands ----------------------------------------------------------------------

class _Writer:
    def __init__(self, stream, fmt: str):
        self.stream, self.fmt = stream, fmt
        self.rows: list[dict] = []

    def write(self, rec: dict) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            self.rows.append(rec)

    def close(self) -> None:
        if self.fmt != "csv" or not self.rows:
            return
        keys: list[str] = []
        for rec in self.rows:
            keys.extend(k for k in rec if k not in keys)
        w = csv.DictWriter(self.stream, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for rec in self.rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in rec.items()})


def cmd_classify(spec: JobSpec, out: _Writer, workers: int = 1, timing: bool = False) -> int:
    bad = 0
    for rec in run_stream(spec, workers, timing):
        bad += not rec["oracle_agrees"]
        out.write(rec)
    return 2 if bad else 0


def cmd_audit(spec: JobSpec, out: _Writer, workers: int = 1, timing: bool = False) -> int:
    counts: dict[str, list[int]] = {}
    cases: set[int] = set()
    for rec in run_stream(spec, workers, timing):
        c = counts.setdefault(rec["theorem"], [0, 0])
        c[0] += 1
        c[1] += not rec["oracle_agrees"]
        if rec["theorem"] == "dual-2":
            cases.add(rec["params"]["case"])
        out.write(rec)
    missing = sorted(set(spec.require_cases) - cases)
    bad = sum(c[1] for c in counts.values())
    summary = {
        "summary": True,
        "job": spec.echo(),
        "checked": {k: v[0] for k, v in sorted(counts.items())},
        "disagreements": {k: v[1] for k, v in sorted(counts.items())},
        "dual2_cases": sorted(cases),
        "missing_cases": missing,
    }
    out.write(summary)
    return 2 if bad or missing else 0


def cmd_search(spec: JobSpec, out: _Writer, workers: int = 1, timing: bool = False) -> int:
    bad = 0
    for rec in run_stream(spec, workers, timing):
        bad += not rec["self_dual"]
        out.write(rec)
    return 2 if bad else 0


def cmd_tables(spec: JobSpec, out: _Writer, workers: int = 1, timing: bool = False) -> int:
    table: dict[tuple, dict] = {}
    bad = 0
    for rec in run_stream(spec, workers, False):
        key = (rec["n"], rec["k"], rec["r"] if rec["r"] is not None else -1)
        row = table.setdefault(key, {"family": spec.family, "n": rec["n"], "k": rec["k"], "r": rec["r"],
                                     "MDS": 0, "NMDS": 0, "AMDS": 0, "OTHER": 0, "disagreements": 0})
        row[rec["category"]] += 1
        row["disagreements"] += not rec["oracle_agrees"]
        bad += not rec["oracle_agrees"]
    for key in sorted(table):
        out.write(table[key])
    return 2 if bad else 0


def cmd_dual(spec: JobSpec, out: _Writer, workers: int = 1, timing: bool = False) -> int:
    if spec.source != "explicit" or not spec.k or len(spec.k) != 1:
        raise SpecValidation("dual needs --source explicit, --points and a single --k")
    field, a = spec.field, spec.points
    n, k = len(a), spec.k[0]
    r = spec.r[0] if spec.r else None
    v = _factors_for(spec, 0, n)
    cfg = EvalConfig.of(field, a, v)
    code = build(spec.family, cfg, k, r, spec.eta)
    d = dual(code)
    rec: dict = {
        "family": spec.family, "n": n, "k": k, "r": r,
        "points": _js(a), "factors": _js(v),
        "dual_generator": d.generator.to_json(),
    }
    closed = None
    try:
        if spec.family == "sub_grs" and r == 1:
            closed = th.dual_of_sub1(a, k, v).generator
            rec["theorem"] = "dual-1"
        elif spec.family == "sub_grs" and r == 2:
            closed = th.dual_of_sub2(a, k, v).generator
            rec["theorem"] = "dual-2"
            rec["case"] = th.sub2_dual_case(a)
        elif spec.family == "sub_grs" and r == k - 1:
            closed = th.dual_of_sub_k1(a, k, v).generator
            rec["theorem"] = "dual-k1"
        elif spec.family == "sub_egrs" and r in (1, 2, k - 1):
            label = {1: "1", 2: "2"}.get(r, "k1")
            fn = {"1": th.parity_of_sub_egrs_1, "2": th.parity_of_sub_egrs_2, "k1": th.parity_of_sub_egrs_k1}[label]
            closed = fn(a, k, v)
            rec["theorem"] = f"parity-{label}"
    except SubGRSError:
        closed = None
        rec.pop("theorem", None)
        rec.pop("case", None)
    if closed is not None:
        rec["closed_form"] = closed.to_json()
        rec["equal"] = row_space_equal(closed, d.generator)
    out.write(rec)
    return 2 if closed is not None and not rec["equal"] else 0


COMMANDS = {
    "classify": cmd_classify,
    "audit": cmd_audit,
    "search": cmd_search,
    "dual": cmd_dual,
    "tables": cmd_tables,
}


# argparse -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subgrs", description="Subcodes of (extended) GRS codes: classification and theorem audits.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--field", required=True, help='field order, e.g. "7", "9" or "3^2"')
        s.add_argument("--modulus", help="modulus coefficients low-to-high, comma separated")
        s.add_argument("--n", help='length range, e.g. "6" or "4..7"')
        s.add_argument("--k", help="dimension range")
        s.add_argument("--r", help="removed-degree offset range")
        s.add_argument("--points", help='comma-separated elements: ints, "c0:c1", or "g^e"')
        s.add_argument("--factors", default="ones", help='"ones", "random", or an explicit element list')
        s.add_argument("--eta", help="twist coefficient for plus_tgrs")
        s.add_argument("--source", choices=SOURCES, default=None)
        s.add_argument("--seed", type=int)
        s.add_argument("--count", type=int, default=100, help="point sets per n for --source random")
        s.add_argument("--limit", type=int, help="stop after this many point sets")
        s.add_argument("--family", choices=FAMILY_CHOICES, default="sub_grs")
        s.add_argument("--theorem", default="all", help=f"comma-separated subset of: all, {', '.join(THEOREMS)}")
        s.add_argument("--trials", type=int, default=1000, help="random factor trials for midrange audits")
        s.add_argument("--require-cases", default="", help="dual-2 case labels that must appear")
        s.add_argument("--format", choices=("json", "csv"), default="json")
        s.add_argument("--out", help="output path (default stdout)")
        s.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK)
        s.add_argument("--workers", type=int, default=1)
        s.add_argument("--timing", action="store_true", help="add per-instance elapsed seconds (breaks byte reproducibility)")
    return p


def spec_from_args(ns: argparse.Namespace) -> JobSpec:
    modulus = [int(c) for c in ns.modulus.split(",")] if ns.modulus else None
    try:
        field = parse_field(ns.field, modulus)
    except (ValueError, SubGRSError) as exc:
        raise SpecValidation(str(exc)) from exc
    points = parse_elements(field, ns.points) if ns.points else None
    factor_mode, factor_list = ns.factors, None
    if ns.factors not in ("ones", "random"):
        factor_mode, factor_list = "explicit", parse_elements(field, ns.factors)
    theorems = [t.strip() for t in ns.theorem.split(",") if t.strip()]
    unknown = [t for t in theorems if t != "all" and t not in THEOREMS]
    if unknown:
        raise SpecValidation(f"unknown theorem(s): {', '.join(unknown)}")
    if ns.command == "search" and ("all" in theorems):
        theorems = ["selfdual-grs", "selfdual-1", "selfdual-k1", "selfdual-egrs-k1"]
    source = ns.source or ("explicit" if points else "all-subsets")
    spec = JobSpec(
        command=ns.command,
        field=field,
        n=parse_range(ns.n),
        k=parse_range(ns.k),
        r=parse_range(ns.r),
        source=source,
        points=points,
        factors=factor_mode,
        factor_list=factor_list,
        eta=parse_element(field, ns.eta) if ns.eta else None,
        family=ns.family,
        theorems=theorems,
        seed=ns.seed,
        count=ns.count,
        trials=ns.trials,
        limit=ns.limit,
        max_work=ns.max_work,
        require_cases=parse_range(ns.require_cases) or [],
    )
    spec.validate()
    return spec


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        spec = spec_from_args(ns)
    except (SubGRSError, ValueError) as exc:
        print(f"subgrs: error: {exc}", file=sys.stderr)
        return 1
    stream = open(ns.out, "w", encoding="utf-8", newline="") if ns.out else sys.stdout
    writer = _Writer(stream, ns.format)
    try:
        return COMMANDS[ns.command](spec, writer, ns.workers, ns.timing)
    except SubGRSError as exc:
        print(f"subgrs: error: {exc}", file=sys.stderr)
        return 1
    finally:
        writer.close()
        if ns.out:
            stream.close()
        else:
            stream.flush()


if __name__ == "__main__":
    sys.exit(main())

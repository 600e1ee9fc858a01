"""Named verification suites shared by the command line, the tests and the scripts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from .jack import jack_character, jack_polynomial, jack_verify, specialize_alpha, young_oracle
from .ribbon import ch_in_moments, expansion_identity_check, moments_round_trip
from .spectral import alpha_boolean, ns_boolean
from .stanley import (
    commutator_suite,
    feray_top_degree_check,
    lassalle_check,
    multirect_invariance_check,
    shifted_symmetry_check,
    tau_intertwining_check,
    tau_series,
    theta_via_F,
    vanishing_check,
)
from .symfun import partitions


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures}


def _parts(n: int):
    return [lam for k in range(n + 1) for lam in partitions(k)]


def suite_jack(max_size: int = 6) -> SuiteResult:
    res = SuiteResult("jack")
    for lam in _parts(max_size):
        rep = jack_verify(lam)
        res.record(rep.all_ok, f"{list(lam)}: {rep}")
    return res


def suite_young(max_size: int = 5) -> SuiteResult:
    res = SuiteResult("young")
    for lam in _parts(max_size):
        res.record(specialize_alpha(jack_polynomial(lam), 1) == young_oracle(lam), str(list(lam)))
    return res


def suite_characters(max_size: int = 4) -> SuiteResult:
    res = SuiteResult("characters")
    for mu in _parts(max_size):
        for lam in _parts(max_size):
            theta = jack_character(mu, lam)
            res.record(theta_via_F(mu, lam) == theta, f"mu={list(mu)} lam={list(lam)}")
            if sum(lam) < sum(mu):
                res.record(theta == 0, f"nonzero below size: mu={list(mu)} lam={list(lam)}")
    return res


def suite_vanishing(max_size: int = 4) -> SuiteResult:
    res = SuiteResult("vanishing")
    for lam in _parts(max_size):
        for m in range(sum(lam) + 1, sum(lam) + 3):
            res.record(vanishing_check(lam, m), f"lam={list(lam)} m={m}")
    return res


def suite_lassalle(max_size: int = 5, max_rects: int = 2) -> SuiteResult:
    res = SuiteResult("lassalle")
    for k in range(max_rects + 1):
        for mu in _parts(max_size):
            rep = lassalle_check(mu, k)
            res.record(rep.passed, f"mu={list(mu)} k={k}: {list(rep.witnesses)}")
    return res


def suite_symmetry(max_size: int = 4, max_rects: int = 3) -> SuiteResult:
    res = SuiteResult("symmetry")
    for k in range(1, max_rects + 1):
        for mu in _parts(max_size):
            res.record(shifted_symmetry_check(mu, k), f"mu={list(mu)} k={k}")
            if len(mu) <= k:
                res.record(feray_top_degree_check(mu, k), f"top degree mu={list(mu)} k={k}")
    return res


def suite_multirect(max_size: int = 5) -> SuiteResult:
    res = SuiteResult("multirect")
    cases = (
        ((2, 2), ((2,), (2,)), ((2, 2), (1, 1))),
        ((2, 2), ((2,), (2,)), ((2, 5), (2, 0))),
        ((3, 1, 1), ((3, 1), (1, 2)), ((3, 1, 1), (1, 1, 1))),
        ((3, 1, 1), ((3, 1), (1, 2)), ((3, 1, 4), (1, 2, 0))),
    )
    for lam, a, b in cases:
        if sum(lam) <= max_size:
            res.record(multirect_invariance_check(lam, a, b), f"lam={list(lam)} {a} vs {b}")
    return res


def suite_ns(max_size: int = 5, max_ell: int = 4) -> SuiteResult:
    res = SuiteResult("ns")
    for lam in _parts(max_size):
        for ell in range(max_ell + 1):
            label = f"lam={list(lam)} ell={ell}"
            try:
                ok = ns_boolean(lam, ell) == alpha_boolean(lam, ell + 2)
            except ArithmeticError as exc:
                ok, label = False, f"{label}: {exc}"
            res.record(ok, label)
    return res


def ribbon_length_tuples(total: int, max_sites: int = 2) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def rec(prefix: Tuple[int, ...], left: int) -> None:
        if prefix:
            out.append(prefix)
        if len(prefix) == max_sites:
            return
        for x in range(2, left + 1):
            rec(prefix + (x,), left - x)

    rec((), total)
    return out


def suite_ribbon(max_size: int = 7, max_sites: int = 2) -> SuiteResult:
    res = SuiteResult("ribbon")
    for lengths in ribbon_length_tuples(max_size, max_sites):
        for mode in ("boolean", "moment"):
            for lam in _parts(sum(lengths)):
                res.record(expansion_identity_check(lengths, mode, lam), f"{mode} {list(lengths)} lam={list(lam)}")
    return res


def suite_integrality(max_size: int = 5) -> SuiteResult:
    res = SuiteResult("integrality")
    for mu in _parts(max_size):
        if not mu:
            continue
        try:
            exp = ch_in_moments(mu)
            ok = all(c.is_integral() for c in exp.values()) and moments_round_trip(mu)
        except ArithmeticError:
            ok = False
        res.record(ok, str(list(mu)))
    return res


def suite_commutation(max_size: int = 4, max_total: int = 7) -> SuiteResult:
    res = SuiteResult("commutation")
    for ell in range(1, max_total):
        for m in range(ell + 1, max_total - ell + 1):
            res.record(commutator_suite("B", ell, m, 0, max_size), f"B {ell},{m}")
    for ell in range(0, max_total):
        for m in range(ell + 1, max_total + 1):
            if ell and ell + m > max_total:
                continue
            res.record(commutator_suite("C", ell, m, max_total, max_size), f"C {ell},{m}")
    return res


def suite_tau(max_size: int = 4) -> SuiteResult:
    res = SuiteResult("tau")
    a, b = tau_series(max_size)
    for n in range(max_size + 1):
        res.record(a[n] == b[n], f"t^{n}")
    res.record(tau_intertwining_check(b), "intertwining")
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "jack": suite_jack,
    "young": suite_young,
    "characters": suite_characters,
    "vanishing": suite_vanishing,
    "lassalle": suite_lassalle,
    "symmetry": suite_symmetry,
    "multirect": suite_multirect,
    "ns": suite_ns,
    "ribbon": suite_ribbon,
    "integrality": suite_integrality,
    "commutation": suite_commutation,
    "tau": suite_tau,
}

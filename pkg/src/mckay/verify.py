"""The invariant suite behind ``mckay verify``.

Checks are HARD (proved statements; any failure gives a nonzero exit) or
REPORTED (the Adams conjecture, the cup normalization, and known misprints
in the published tables), which are listed but never fail the run.
"""

from dataclasses import dataclass, field

from .heisenberg import commutator_holds, expand_named, omega_hat
from .linalg import LinOperator, graded_component
from .macdonald import (
    Specialization,
    bott_identity_check,
    duality_matrix,
    eigen_relation_holds,
    kostka_nonnegative,
    normalization_report,
)
from .operators import (
    FixedPointWeights,
    macdonald_basis,
    op_D,
    op_E,
    op_Gamma,
    pi_matrix,
    transport,
)
from .product import (
    a_independent,
    adams_conjecture_check,
    calibrate_cup,
    gamma_transfer_check,
    odot_table,
    ring_axiom_failures,
)
from .reference_tables import reference_table
from .symfunc import SymFunc

# Cells of the published p-basis tables that contradict the published Schur
# tables (and the filtration bound); the value implied by the Schur table is
# used instead and the discrepancy is reported.
ERRATA = {
    (4, "p", (2, 2), (2, 2)): ("8p_4", "0"),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    hard: bool = True


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail="", hard=True):
        self.checks.append(Check(name, bool(passed), detail, hard))

    @property
    def ok(self):
        return all(c.passed for c in self.checks if c.hard)

    def to_json(self):
        return {
            "ok": self.ok,
            "hard": [vars(c) for c in self.checks if c.hard],
            "reported": [vars(c) for c in self.checks if not c.hard],
        }


def pipeline_matches_E(n):
    spec = Specialization.default(n)
    mb = macdonald_basis(n, spec)
    return transport(FixedPointWeights.tautological(n, spec), mb).to_basis("p") == op_E(n)


def omega_convention_agrees(n):
    spec = Specialization.default(n)
    mb = macdonald_basis(n, spec)
    w = FixedPointWeights.tautological(n, spec)
    return transport(w, mb, "signed") == transport(w, mb, "classical")


def identity_failures(n):
    bad = []
    D, E, G, P = op_D(n), op_E(n), op_Gamma(n), pi_matrix(n)
    if P @ E != D @ P:
        bad.append("Pi E = D Pi")
    if G @ E != D @ G:
        bad.append("Gamma E = D Gamma")
    ident = LinOperator.identity(n, "p")
    if graded_component(E, 0) != ident * n or graded_component(D, 0) != ident * n:
        bad.append("E_0 = D_0 = n Id")
    if graded_component(G, 0) != P * (-1) ** n:
        bad.append("Gamma_0 = (-1)^n Pi")
    for name, op in (("D", D), ("E", E), ("Gamma", G)):
        if any(not graded_component(op, k).is_zero() for k in range(-(n - 1), 0)):
            bad.append(f"{name} age-lower-triangular")
    hD, hE = expand_named("D", n), expand_named("E", n)
    if hD.matrix(n) != D or hE.matrix(n) != E:
        bad.append("Heisenberg expansions")
    if omega_hat(hD) != hE:
        bad.append("Omega-hat(D) = E termwise")
    if not all(commutator_holds(a, n) for a in range(1, n + 1)):
        bad.append("[b_a, b_-a] = a")
    return bad


def macdonald_failures(n):
    spec = Specialization.default(n)
    bad = []
    if not eigen_relation_holds(n, spec):
        bad.append("eigen-relation")
    norm = normalization_report(n, spec)
    bad += [k for k, v in norm.items() if not v]
    gram = duality_matrix(n, spec)
    size = len(gram)
    if any(bool(gram[i][j]) != (i == j) for i in range(size) for j in range(size)):
        bad.append("duality pattern")
    if not kostka_nonnegative(n, spec):
        bad.append("Kostka nonnegativity")
    return bad


def table_mismatches_with_errata(n, basis):
    table = odot_table(n, basis)
    ref = reference_table(n, basis)
    bad, errata = [], []
    for (lam, mu), want in ref.items():
        got = table[lam, mu]
        key = (n, basis, tuple(lam), tuple(mu))
        if key in ERRATA:
            errata.append(f"{basis}{list(lam)}*{basis}{list(mu)}: printed {ERRATA[key][0]}, computed {got}")
            # must still agree with the value implied by the Schur table
            if got != _implied(n, lam, mu, basis):
                bad.append((lam, mu))
        elif got != want:
            bad.append((lam, mu))
    return bad, errata


def _implied(n, lam, mu, basis):
    """Product read off the published Schur table by bilinearity."""
    ref = reference_table(n, "s")
    x = SymFunc.basis_element(basis, lam).to_basis("s")
    y = SymFunc.basis_element(basis, mu).to_basis("s")
    out = SymFunc.zero(n, "s")
    for a, c in x.coeffs.items():
        for b, d in y.coeffs.items():
            out = out + ref[(a, b)] * (c * d)
    return out


def run(max_n=4, seed=0):
    rep = Report()
    for n in range(2, min(max_n, 4) + 1):
        for basis in ("p", "s"):
            bad, errata = table_mismatches_with_errata(n, basis)
            rep.add(f"table n={n} basis={basis}", not bad, "; ".join(map(str, bad)))
            for e in errata:
                rep.add(f"published table misprint n={n}", True, e, hard=False)
    for n in range(1, min(max_n, 5) + 1):
        rep.add(f"pipeline = E, n={n}", pipeline_matches_E(n))
        rep.add(f"omega convention guard, n={n}", omega_convention_agrees(n))
    for n in range(1, min(max_n, 6) + 1):
        bad = identity_failures(n)
        rep.add(f"identities n={n}", not bad, ", ".join(bad))
    for n in range(1, min(max_n, 5) + 1):
        bad = macdonald_failures(n)
        rep.add(f"Macdonald n={n}", not bad, ", ".join(bad))
    for n in range(1, min(max_n, 4) + 1):
        rep.add(f"Bott/McMahon n={n}", bott_identity_check(n, Specialization.default(n)))
    for n in range(1, min(max_n, 4) + 1):
        bad = ring_axiom_failures(n)
        rep.add(f"ring axioms n={n}", not bad, str(bad[:3]) if bad else "")
    if max_n >= 5:
        bad = ring_axiom_failures(5, triples=100, seed=seed)
        rep.add("ring axioms n=5 (100 random triples)", not bad, str(bad[:3]) if bad else "")
    for n in range(1, min(max_n, 3) + 1):
        rep.add(f"A-independence n={n}", a_independent(n))

    for row in adams_conjecture_check(min(max_n, 4), 4):
        verdict = "EQUAL" if row["equal"] else "NOT EQUAL"
        rep.add(f"Adams n={row['n']} j={row['j']}", row["equal"], f"{verdict} {row['note']}".strip(), hard=False)
    cal = calibrate_cup()
    detail = f"{cal['status']}: chosen {cal['chosen']}; survivors {cal['validated']}"
    rep.add("cup calibration (fit n=2,3, validate n=4,5)", cal["status"] == "resolved", detail, hard=False)
    if cal["status"] == "resolved":
        for n in range(2, max(min(max_n, 4), 2) + 1):
            g = gamma_transfer_check(n)
            rep.add(f"Gamma transfer n={n}", g["graded"], f"graded={g['graded']} full={g['full']}", hard=False)
    return rep

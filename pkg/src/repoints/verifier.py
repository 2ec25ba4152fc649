"""Exact verification of all defining identities of a quantum symmetric
conjugacy class: reflection equation, orthogonality condition, minimal
polynomial with eigenvalue multiplicities, q-trace values, classical limit,
and the stabilizer suite.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import coideal
from .natrep import CheckRecord, build_natural_rep, q_trace
from .points import (
    PointParams,
    QuantumPoint,
    default_params,
    gauss_grid,
    pm_exponents,
    quantum_point,
    validate_params,
)
from .qmatrix import QMatrix
from .rmatrix import build_rmatrix_data, epsilon_for
from .rootdata import ClassSpec, RootSystem, build_root_system
from . import linalg
from .scalar import I_UNIT, QScalar, eval_at_one, q_integer, render_scalar


@dataclass
class VerificationReport:
    case_id: str
    param_digest: str
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "params": self.param_digest,
            "checks": [
                {"name": c.name, "pass": c.passed}
                | ({"detail": c.detail} if c.detail else {})
                for c in self.checks
            ],
            "timings": self.timings,
        }


def _mismatch_detail(diff) -> str | None:
    if diff is None:
        return None
    i, j, a, b = diff
    return f"first mismatch at ({i}, {j}): {render_scalar(a)} vs {render_scalar(b)}"


def _record_equal(name: str, left: QMatrix, right: QMatrix) -> CheckRecord:
    diff = left.first_difference(right)
    return CheckRecord(name, diff is None, _mismatch_detail(diff))


def embed_second(A: QMatrix, N: int) -> QMatrix:
    """A acting on the second tensor factor: I x A."""
    return QMatrix.identity(N).kron(A)


def check_reflection(A: QMatrix, S: QMatrix) -> CheckRecord:
    """S A2 S A2 = A2 S A2 S with A2 = I x A."""
    N = A.dim
    if S.dim != N * N:
        raise ValueError("dimension mismatch between A and S")
    A2 = embed_second(A, N)
    SA = S * A2
    return _record_equal("reflection", SA * SA, A2 * SA * S)


def check_oc(A: QMatrix, S: QMatrix, varpi: QMatrix, eps: int) -> list:
    """A2 S A2 varpi = eps q^(-N+eps) varpi, and the same with varpi on the left."""
    N = A.dim
    A2 = embed_second(A, N)
    M = A2 * S * A2
    mu = QScalar.q_power(-N + eps)
    if eps < 0:
        mu = -mu
    scaled = varpi.scale(mu)
    return [
        _record_equal("oc.right", M * varpi, scaled),
        _record_equal("oc.left", varpi * M, scaled),
    ]


def check_varpi_structure(S: QMatrix, varpi: QMatrix, ls) -> list:
    eps = epsilon_for(ls)
    mu = QScalar.q_power(eps - ls.dim)
    if eps < 0:
        mu = -mu
    return [
        _record_equal("varpi.idempotent", varpi * varpi, varpi),
        CheckRecord("varpi.rank_one", varpi.rank() == 1,
                    None if varpi.rank() == 1 else f"rank {varpi.rank()}"),
        _record_equal("varpi.eigen", S * varpi, varpi.scale(mu)),
    ]


def check_min_poly(A: QMatrix, spec: ClassSpec) -> list:
    N = spec.N
    records = []
    if spec.family == "t2":
        P, M = pm_exponents(spec)
        left = A.add_scalar_diag(QScalar.q_power(-P))
        right = A.add_scalar_diag(-QScalar.q_power(-M))
        records.append(_record_equal("min_poly", left * right, QMatrix.zeros(N)))
        rk = right.rank()
        records.append(CheckRecord("mult.plus", rk == M,
                                   None if rk == M else f"rank {rk}, expected {M}"))
        rk = left.rank()
        records.append(CheckRecord("mult.minus", rk == P,
                                   None if rk == P else f"rank {rk}, expected {P}"))
    else:
        eps = epsilon_for(spec.series)
        val = I_UNIT * QScalar.q_power(-N // 2 + eps)
        left = A.add_scalar_diag(-val)
        right = A.add_scalar_diag(val)
        records.append(_record_equal("min_poly", left * right, QMatrix.zeros(N)))
        for name, mat in (("mult.plus", left), ("mult.minus", right)):
            rk = mat.rank()
            records.append(CheckRecord(name, rk == N // 2,
                                       None if rk == N // 2 else f"rank {rk}, expected {N // 2}"))
    return records


def expected_q_trace(spec: ClassSpec) -> QScalar:
    if spec.family == "t4":
        return QScalar(0)
    P, M = pm_exponents(spec)
    series = spec.series.series
    if series == "A":
        return q_integer(P) - q_integer(M)
    if series == "C":
        return q_integer(P + 1) - q_integer(M + 1)
    return q_integer(P - 1) - q_integer(M - 1)


def check_q_trace(A: QMatrix, spec: ClassSpec, rs: RootSystem) -> CheckRecord:
    got = q_trace(A, rs)
    want = expected_q_trace(spec)
    ok = got == want
    detail = None if ok else f"got {render_scalar(got)}, expected {render_scalar(want)}"
    return CheckRecord("q_trace", ok, detail)


def check_classical_involution(point: QuantumPoint) -> list:
    N = point.spec.N
    sq = point.A0 * point.A0
    unit = QMatrix.identity(N)
    if point.spec.family == "t4":
        unit = -unit
    records = [_record_equal("classical.square", sq, unit)]
    det = linalg.determinant(gauss_grid(point.A0))
    # the determinant is reported, not constrained
    records.append(CheckRecord(
        "classical.det", True, f"det(A0) = {render_scalar(QScalar.from_gauss(det))}"))
    return records


def full_report(spec: ClassSpec, params: PointParams | None = None) -> VerificationReport:
    if params is None:
        params = default_params(spec)
    report = VerificationReport(spec.case_id, "")
    t0 = time.perf_counter()

    problems = validate_params(spec, params)
    for p in problems:
        report.checks.append(CheckRecord("params", False, p))
    if problems:
        return report

    point = quantum_point(spec, params)
    report.param_digest = point.param_digest()
    rmd = build_rmatrix_data(spec.series)
    rs = build_root_system(spec.series)
    report.timings["build"] = round(time.perf_counter() - t0, 6)

    t = time.perf_counter()
    report.checks.append(check_reflection(point.A, rmd.S))
    report.timings["reflection"] = round(time.perf_counter() - t, 6)

    if rmd.varpi is not None:
        t = time.perf_counter()
        report.checks.extend(check_oc(point.A, rmd.S, rmd.varpi, rmd.epsilon))
        report.checks.extend(check_varpi_structure(rmd.S, rmd.varpi, spec.series))
        report.timings["oc"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    report.checks.extend(check_min_poly(point.A, spec))
    report.checks.append(check_q_trace(point.A, spec, rs))
    report.timings["invariants"] = round(time.perf_counter() - t, 6)

    # the classical limit is recomputed from the limiting parameters, so this
    # cross-checks the two construction paths
    t = time.perf_counter()
    limit = QMatrix(spec.N)
    for i, j, v in point.A.nonzero_items():
        limit.put(i, j, QScalar.from_gauss(eval_at_one(v)))
    report.checks.append(_record_equal("classical.limit", limit, point.A0))
    report.checks.extend(check_classical_involution(point))
    report.timings["classical"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    rep = build_natural_rep(spec.series)
    ss = coideal.build_stabilizer(rep, spec, params, point.A)
    report.checks.extend(coideal.check_stabilizer(ss, point.A))
    report.timings["stabilizer"] = round(time.perf_counter() - t, 6)
    report.timings["total"] = round(time.perf_counter() - t0, 6)
    return report

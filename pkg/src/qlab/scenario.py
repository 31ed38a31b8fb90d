"""Scenario files (JSON schema ``v1``), built-in fixtures and command execution.

A scenario file looks like::

    {
      "schema": "v1",
      "name": "example",
      "signature": [1, 1, 1, -1],
      "state": [[0.79, 0.0], 0.35, 0.61, 0.35],
      "eigenvalue_matrix": [[-1, -1], [-1, 1], [1, -1], [1, 1]],
      "isometry": null,
      "observable": null,
      "options": {"tol": 1e-9, "norm_cap": 2.0, "constraints": "none", "steps": 1000},
      "notes": []
    }

Complex entries are ``[re, im]`` pairs; plain numbers are read as reals.
``isometry`` defaults to the identity.  ``observable`` is the hermitian matrix
used by ``evolve``; it defaults to the metric-folded matrix of the first column.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from . import bell as bell_mod
from .errors import DimensionError, GeometryError, QlabError
from .evolution import evolve
from .geometry import GeometricSpace, Isometry, StateVector, is_state, metric_defect, quadric_norm
from .linalg import is_hermitian, is_unitary, max_norm, spectral_decompose
from .measurement import (
    Instrument,
    eigenvalue_matrix,
    jointly_observable_hilbert,
    marginal,
    measure,
    observable_matrix,
    reinterpret,
)

SCHEMA_VERSION = "v1"
COMMANDS = ("measure", "bell", "search", "evolve", "spectral", "verify-paper")


class ScenarioError(QlabError, ValueError):
    """Invalid scenario input.  ``code`` is one of syntax, schema, shape, signature, non-isometry, non-state."""

    def __init__(self, code: str, message: str, line: int | None = None, column: int | None = None):
        self.code = code
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"[{code}]{where}: {message}")


@dataclass(frozen=True)
class Options:
    tol: float = 1e-9
    norm_cap: float = 2.0
    constraints: str = "none"
    steps: int = 1000
    window: int = 100
    conv_tol: float = 1e-6
    group_tol: float = 0.0


@dataclass(frozen=True, eq=False)
class Scenario:
    space: GeometricSpace
    state: StateVector
    w: np.ndarray
    isometry: Isometry
    observable: np.ndarray | None = None
    options: Options = field(default_factory=Options)
    name: str = ""
    notes: tuple[str, ...] = ()

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (
            self.space == other.space
            and np.array_equal(self.state.coords, other.state.coords)
            and np.array_equal(self.w, other.w)
            and np.array_equal(self.isometry.matrix, other.isometry.matrix)
            and (
                (self.observable is None and other.observable is None)
                or (
                    self.observable is not None
                    and other.observable is not None
                    and np.array_equal(self.observable, other.observable)
                )
            )
            and self.options == other.options
            and self.name == other.name
            and self.notes == other.notes
        )

    @property
    def instrument(self) -> Instrument:
        return Instrument(self.w, self.isometry)


# --- encoding ----------------------------------------------------------------


def _encode_complex(z) -> list[float]:
    return [float(z.real), float(z.imag)]


def _encode_matrix(m) -> list:
    return [[_encode_complex(v) for v in row] for row in np.asarray(m, dtype=complex)]


def to_dict(sc: Scenario) -> dict:
    identity = np.array_equal(sc.isometry.matrix, np.eye(sc.space.n))
    return {
        "schema": SCHEMA_VERSION,
        "name": sc.name,
        "signature": list(sc.space.signature),
        "state": [_encode_complex(v) for v in sc.state.coords],
        "eigenvalue_matrix": sc.w.tolist(),
        "isometry": None if identity else _encode_matrix(sc.isometry.matrix),
        "observable": None if sc.observable is None else _encode_matrix(sc.observable),
        "options": asdict(sc.options),
        "notes": list(sc.notes),
    }


def serialize(sc: Scenario) -> str:
    return json.dumps(to_dict(sc), indent=2)


def _decode_complex(v, where: str) -> complex:
    if isinstance(v, bool):
        raise ScenarioError("schema", f"{where}: booleans are not numbers")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in v):
        return complex(v[0], v[1])
    raise ScenarioError("schema", f"{where}: expected a number or an [re, im] pair, got {v!r}")


def _decode_matrix(rows, n: int, where: str) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ScenarioError("shape", f"{where} must be a {n}x{n} matrix")
    return np.array([[_decode_complex(v, where) for v in row] for row in rows])


def from_dict(data: dict, tol: float | None = None) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioError("schema", "top level must be a JSON object")
    if data.get("schema") != SCHEMA_VERSION:
        raise ScenarioError("schema", f"'schema' must be {SCHEMA_VERSION!r}, got {data.get('schema')!r}")
    for key in ("signature", "state", "eigenvalue_matrix"):
        if key not in data:
            raise ScenarioError("schema", f"missing required field {key!r}")

    raw_opts = data.get("options") or {}
    if not isinstance(raw_opts, dict):
        raise ScenarioError("schema", "'options' must be an object")
    known = Options.__dataclass_fields__
    unknown = set(raw_opts) - set(known)
    if unknown:
        raise ScenarioError("schema", f"unknown options {sorted(unknown)}")
    try:
        opts = Options(**{k: type(getattr(Options(), k))(v) for k, v in raw_opts.items()})
    except (TypeError, ValueError) as exc:
        raise ScenarioError("schema", f"bad option value: {exc}") from None
    if tol is not None:
        opts = replace(opts, tol=tol)
    if opts.constraints not in bell_mod.CONSTRAINT_SETS:
        raise ScenarioError("schema", f"constraints must be one of {bell_mod.CONSTRAINT_SETS}")

    sig = data["signature"]
    if not isinstance(sig, list) or not sig or any(v not in (1, -1) or isinstance(v, bool) for v in sig):
        raise ScenarioError("signature", "signature must be a non-empty list of +1/-1 entries")
    try:
        space = GeometricSpace(tuple(sig))
    except GeometryError as exc:
        raise ScenarioError("signature", str(exc)) from None
    n = space.n

    state = data["state"]
    if not isinstance(state, list) or len(state) != n:
        raise ScenarioError("shape", f"state must have {n} entries")
    x = StateVector([_decode_complex(v, "state") for v in state], space)

    w_raw = data["eigenvalue_matrix"]
    if (
        not isinstance(w_raw, list)
        or len(w_raw) != n
        or any(not isinstance(r, list) or not r for r in w_raw)
        or len({len(r) for r in w_raw}) != 1
    ):
        raise ScenarioError("shape", f"eigenvalue_matrix must be {n} rows of equal, nonzero length")
    if any(isinstance(v, bool) or not isinstance(v, (int, float)) for r in w_raw for v in r):
        raise ScenarioError("schema", "eigenvalue_matrix entries must be real numbers")
    try:
        w = eigenvalue_matrix(w_raw, n)
    except (DimensionError, ValueError) as exc:
        raise ScenarioError("shape", str(exc)) from None

    if data.get("isometry") is None:
        t_mat = np.eye(n, dtype=complex)
    else:
        t_mat = _decode_matrix(data["isometry"], n, "isometry")
    defect = metric_defect(t_mat, space)
    if defect > opts.tol:
        raise ScenarioError("non-isometry", f"isometry changes the metric by {defect:.3g} > tol {opts.tol:g}")
    iso = Isometry(t_mat, space, tol=opts.tol)

    observable = None
    if data.get("observable") is not None:
        observable = _decode_matrix(data["observable"], n, "observable")
        if not is_hermitian(observable, opts.tol):
            raise ScenarioError("schema", "observable must be hermitian")
        observable.setflags(write=False)

    if not is_state(x, opts.tol):
        raise ScenarioError("non-state", f"state has quadric norm {quadric_norm(x):.12g}, expected 1")

    notes = data.get("notes") or []
    if not isinstance(notes, list) or not all(isinstance(s, str) for s in notes):
        raise ScenarioError("schema", "'notes' must be a list of strings")
    name = data.get("name") or ""
    if not isinstance(name, str):
        raise ScenarioError("schema", "'name' must be a string")
    return Scenario(space, x, w, iso, observable, opts, name, tuple(notes))


def parse_scenario(text: str, tol: float | None = None) -> Scenario:
    """Parse and validate scenario JSON text.  Raises ``ScenarioError``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError("syntax", exc.msg, exc.lineno, exc.colno) from None
    return from_dict(data, tol)


# --- fixtures ----------------------------------------------------------------

_FEYNMAN_STATE = [math.sqrt(5 / 8), math.sqrt(1 / 8), math.sqrt(3 / 8), math.sqrt(1 / 8)]
_M5_W = [[-1, -1, -1], [1, 1, -1], [1, -1, -1], [1, -1, 1], [1, 1, 1]]


def _fixture_dicts() -> dict[str, dict]:
    m5_state = [math.sqrt(3) / 3] * 5
    return {
        "feynman": {
            "schema": SCHEMA_VERSION,
            "name": "feynman",
            "signature": [1, 1, 1, -1],
            "state": _FEYNMAN_STATE,
            "eigenvalue_matrix": [[-1, -1], [-1, 1], [1, -1], [1, 1]],
            "notes": [
                "Four ground states; X and Y are spin returns along two axes (table-faithful eigenvalue matrix).",
                "State (sqrt(5/8), sqrt(1/8), sqrt(3/8), sqrt(1/8)) in 4-dimensional Minkowski space.",
                "Published claim: joint measurement is positive semidefinite; derived joint weight at (+1,+1) is -1/8, "
                "only the marginals are nonnegative.",
            ],
        },
        "feynman-displayed": {
            "schema": SCHEMA_VERSION,
            "name": "feynman-displayed",
            "signature": [1, 1, 1, -1],
            "state": _FEYNMAN_STATE,
            "eigenvalue_matrix": [[-1, -1], [-1, 1], [-1, -1], [1, 1]],
            "notes": [
                "Eigenvalue matrix as displayed in print; its third row (-1,-1) disagrees with the X/Y table (+1,-1).",
            ],
        },
        "m5-bell": {
            "schema": SCHEMA_VERSION,
            "name": "m5-bell",
            "signature": [1, 1, 1, 1, -1],
            "state": m5_state,
            "eigenvalue_matrix": _M5_W,
            "notes": [
                "Columns A=diag(-1,+1,+1,+1,+1), B=diag(-1,+1,-1,-1,+1), C=diag(-1,-1,-1,+1,+1); state (sqrt(3)/3)(1,1,1,1,1).",
                "Erratum: published E(XZ)=+1 and E(YZ)=-1 do not reproduce; direct summation gives -1/3 for every pair.",
                "Erratum: the (B,C) pair carries weight -1/3 at (+1,+1), so not every pair is positive semidefinite.",
                "Erratum: published rescaled expectations 25/9 do not reproduce; direct summation gives 5/9.",
            ],
        },
        "m3-witness": {
            "schema": SCHEMA_VERSION,
            "name": "m3-witness",
            "signature": [1, 1, -1],
            "state": [1.0, math.sqrt(0.5), math.sqrt(0.5)],
            "eigenvalue_matrix": [[1, 1, 1], [1, 1, 1], [1, 1, -1]],
            "notes": ["Minkowski Bell violation witness: weights (1, 1/2, 1/2), lhs 3 against bound 1."],
        },
    }


FIXTURES = tuple(_fixture_dicts())


def load_fixture(name: str, tol: float | None = None) -> Scenario:
    table = _fixture_dicts()
    if name not in table:
        raise ScenarioError("schema", f"unknown fixture {name!r}; available: {', '.join(table)}")
    return from_dict(table[name], tol)


# --- commands ----------------------------------------------------------------


def _density_block(d) -> dict:
    return {"support": [list(v) for v in d.support], "weights": list(d.weights)}


def _measure(sc: Scenario) -> dict:
    inst = sc.instrument
    tol = sc.options.tol
    joint = inst.density(sc.state, sc.options.group_tol)
    y = inst.t(sc.state)
    re = reinterpret(inst.w, y)
    measured = measure(inst, sc.state)
    marginals = [marginal(joint, j) for j in range(inst.k)]
    block = {
        "density": _density_block(joint),
        "density_total": joint.total,
        "quadric_norm": quadric_norm(sc.state),
        "measured": measured.tolist(),
        "marginals": [_density_block(m) for m in marginals],
        "psd": {
            "joint": joint.is_nonnegative(tol),
            "marginals": [m.is_nonnegative(tol) for m in marginals],
        },
        "reinterpretation": {
            "w_x": re.w_x.tolist(),
            "p": re.p.tolist(),
            "hilbert_norm_sq": y.hilbert_norm_sq,
            "identity_residual": float(np.max(np.abs(re.expectation() - measured))),
        },
    }
    if inst.k == 3:
        block["bell"] = bell_mod.bell_check(inst.w, sc.state, inst.t, tol=tol).as_dict()
    return block


def _bell(sc: Scenario) -> dict:
    inst = sc.instrument
    if inst.k != 3:
        raise ScenarioError("shape", f"bell needs an eigenvalue matrix with 3 columns, got {inst.k}")
    tol = sc.options.tol
    y = inst.t(sc.state)
    return {
        "bell": bell_mod.bell_check(inst.w, sc.state, inst.t, tol=tol).as_dict(),
        "hilbert_rescaled": bell_mod.hilbert_rescaled_check(inst.w, y, tol=tol).as_dict(),
        "hilbert_norm_sq": y.hilbert_norm_sq,
    }


def _search(sc: Scenario) -> dict:
    found = bell_mod.violation_search(sc.space, sc.options.norm_cap, sc.options.constraints)
    return {
        "norm_cap": sc.options.norm_cap,
        "constraints": sc.options.constraints,
        "count": len(found),
        "witnesses": [w.as_dict() for w in found],
    }


def _evolve(sc: Scenario) -> dict:
    a = sc.observable if sc.observable is not None else observable_matrix(sc.instrument, 0)
    o = sc.options
    trace = evolve(a, sc.isometry, sc.state, o.steps, o.window, o.conv_tol, heisenberg_check=True)
    return {
        "steps": o.steps,
        "window": o.window,
        "conv_tol": o.conv_tol,
        "converged": trace.converged,
        "diverged": trace.diverged,
        "limit_estimate": trace.limit_estimate,
        "heisenberg_residual": trace.heisenberg_residual,
        "values_head": trace.values[:10].tolist(),
        "values_tail": trace.values[-10:].tolist(),
        "cesaro_tail": trace.cesaro[-10:].tolist(),
    }


def _spectral(sc: Scenario) -> dict:
    inst = sc.instrument
    mats = [observable_matrix(inst, j) for j in range(inst.k)]
    if sc.observable is not None:
        mats.append(np.asarray(sc.observable))
    out = []
    for m in mats:
        dec = spectral_decompose(m)
        out.append(
            {
                "eigenvalues": dec.eigenvalues.tolist(),
                "residual": dec.residual(m),
                "unitary_defect": max_norm(dec.eigenvectors.conj().T @ dec.eigenvectors - np.eye(len(m))),
                "unitary": is_unitary(dec.eigenvectors),
            }
        )
    return {"matrices": out, "pairwise_commute": jointly_observable_hilbert(mats)}


_RUNNERS = {"measure": _measure, "bell": _bell, "search": _search, "evolve": _evolve, "spectral": _spectral}


def run(scenario: Scenario | None, command: str) -> dict:
    """Execute ``command`` and return a JSON-ready report."""
    if command not in COMMANDS:
        raise ScenarioError("schema", f"unknown command {command!r}; choose from {COMMANDS}")
    if command == "verify-paper":
        from .reproduce import verify_paper

        rows = verify_paper()
        return {"command": command, "checks": rows, "passed": all(r["status"] != "FAIL" for r in rows)}
    if scenario is None:
        raise ScenarioError("schema", f"command {command!r} needs a scenario")
    report = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "scenario": to_dict(scenario),
        command: _RUNNERS[command](scenario),
        "diagnostics": {"tol": scenario.options.tol, "group_tol": scenario.options.group_tol},
    }
    if scenario.notes:
        report["notes"] = list(scenario.notes)
    return report

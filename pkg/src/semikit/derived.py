"""Function spaces carrying their own semimodule structure: finite
semi-metrics, metric-preserving candidates, semi-norms, semi-inner
products, and sublinear functionals.

Objects here evaluate at signed rational arguments (the underlying
carriers are ordinary vector spaces); what is nonnegative is the scalar
action on the function space itself. Functionals are finitely described
and exactly evaluable, so the closure and category audits are exact
pointwise identities on their samples. Semi-metric and semi-norm drop
the definiteness direction of the classical axioms; semi-inner products
are audited as symmetric bilinear forms with nonnegative diagonal.
"""

from __future__ import annotations

import random

from ._backend import RAT, signed_rat
from .errors import (
    CarrierMismatch,
    DimensionMismatch,
    DomainTooSmall,
    IntervalMismatch,
    NonComposableChain,
)
from .geometry import PiecewiseLinearFn
from .scalar import NonnegScalar, ZERO

__all__ = [
    "Functional",
    "BilinearForm",
    "LinearMapQ",
    "FiniteSemiMetric",
    "CandidatePreserver",
    "BUNDLED_METRICS",
    "space_closure_audit",
    "preserver_falsify",
    "pullback_seminorm",
    "pullback_closure_audit",
    "category_laws_audit",
    "pullback_inner",
    "weighted_l1",
    "weighted_max_abs",
    "abs_linear",
    "max_linear",
    "gram_form",
    "random_semimetric",
    "random_seminorm",
    "random_inner",
    "random_sublinear",
    "random_signed_vector",
]

_Z = RAT(0)


def _q(x):
    """Signed rational from ints, literals (optional leading -), scalars."""
    if isinstance(x, NonnegScalar):
        return x._q
    return signed_rat(x)


def _absq(x):
    return x if x >= 0 else -x


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vscale(lam, v):
    return tuple(lam * a for a in v)


def random_signed_vector(rng: random.Random, dim: int, max_num=40, max_den=8):
    return tuple(
        RAT(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        for _ in range(dim)
    )


def _random_q(rng, max_num=40, max_den=8, signed=False):
    lo = -max_num if signed else 0
    return RAT(rng.randint(lo, max_num), rng.randint(1, max_den))


class Functional:
    """Exactly evaluable functional on signed rational coordinate tuples.

    Instances combine pointwise: f + g and lam * f (lam >= 0) stay in the
    same family extensionally; the audits re-validate the axioms rather
    than trusting the syntax.
    """

    __slots__ = ("dim", "_fn", "label")

    def __init__(self, dim, fn, label):
        self.dim = dim
        self._fn = fn
        self.label = label

    def __call__(self, v):
        return self._fn(v)

    def __add__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        if self.dim != other.dim:
            raise CarrierMismatch("functionals on different spaces")
        f, g = self._fn, other._fn
        return Functional(self.dim, lambda v: f(v) + g(v), f"({self.label}+{other.label})")

    def scale(self, lam) -> "Functional":
        lam_q = NonnegScalar(lam)._q
        f = self._fn
        return Functional(self.dim, lambda v: lam_q * f(v), f"({lam_q}*{self.label})")

    def __repr__(self):
        return f"Functional({self.label}, dim={self.dim})"


def weighted_l1(weights) -> Functional:
    w = tuple(NonnegScalar(x)._q for x in weights)
    return Functional(
        len(w),
        lambda v: sum((wi * _absq(vi) for wi, vi in zip(w, v)), _Z),
        "w_l1",
    )


def weighted_max_abs(weights) -> Functional:
    w = tuple(NonnegScalar(x)._q for x in weights)
    return Functional(
        len(w),
        lambda v: max(wi * _absq(vi) for wi, vi in zip(w, v)),
        "w_maxabs",
    )


def abs_linear(coeffs) -> Functional:
    c = tuple(_q(x) for x in coeffs)
    return Functional(
        len(c),
        lambda v: _absq(sum((ci * vi for ci, vi in zip(c, v)), _Z)),
        "abs_lin",
    )


def max_linear(rows) -> Functional:
    mat = tuple(tuple(_q(x) for x in row) for row in rows)
    dim = len(mat[0])
    return Functional(
        dim,
        lambda v: max(sum((ci * vi for ci, vi in zip(row, v)), _Z) for row in mat),
        "max_lin",
    )


class BilinearForm:
    """Exactly evaluable form on pairs of signed rational tuples."""

    __slots__ = ("dim", "_fn", "label")

    def __init__(self, dim, fn, label):
        self.dim = dim
        self._fn = fn
        self.label = label

    def __call__(self, u, v):
        return self._fn(u, v)

    def __add__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        if self.dim != other.dim:
            raise CarrierMismatch("forms on different spaces")
        f, g = self._fn, other._fn
        return BilinearForm(self.dim, lambda u, v: f(u, v) + g(u, v), "sum")

    def scale(self, lam) -> "BilinearForm":
        lam_q = NonnegScalar(lam)._q
        f = self._fn
        return BilinearForm(self.dim, lambda u, v: lam_q * f(u, v), "scaled")


def gram_form(rows) -> BilinearForm:
    """(u, v) -> (M u) . (M v); positive semidefinite by construction."""
    mat = tuple(tuple(_q(x) for x in row) for row in rows)
    dim = len(mat[0])

    def apply(v):
        return tuple(sum((c * x for c, x in zip(row, v)), _Z) for row in mat)

    return BilinearForm(
        dim,
        lambda u, v: sum((a * b for a, b in zip(apply(u), apply(v))), _Z),
        "gram",
    )


class LinearMapQ:
    """Plain signed-rational linear map used by the pullback machinery."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_q(x) for x in row) for row in rows)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def out_dim(self):
        return len(self.rows)

    @property
    def in_dim(self):
        return len(self.rows[0])

    def apply(self, v):
        if len(v) != self.in_dim:
            raise DimensionMismatch("vector does not match map domain")
        return tuple(sum((c * x for c, x in zip(row, v)), _Z) for row in self.rows)

    def compose(self, inner: "LinearMapQ") -> "LinearMapQ":
        if inner.out_dim != self.in_dim:
            raise NonComposableChain("maps do not chain")
        cols = list(zip(*inner.rows))
        return LinearMapQ(
            [
                [sum((a * b for a, b in zip(row, col)), _Z) for col in cols]
                for row in self.rows
            ]
        )


class FiniteSemiMetric:
    """Semi-metric on a finite carrier: symmetric nonnegative table, zero
    diagonal, triangle inequality checked exhaustively at construction.
    Distinct points at distance zero are allowed (no definiteness)."""

    __slots__ = ("table",)

    def __init__(self, table):
        rows = tuple(tuple(NonnegScalar(e) for e in row) for row in table)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise CarrierMismatch("table must be square")
        bad = semimetric_violations(rows)
        if bad:
            raise ValueError(f"not a semi-metric: {bad[0]}")
        self.table = rows

    @property
    def size(self):
        return len(self.table)

    def entry(self, i, j) -> NonnegScalar:
        return self.table[i][j]

    @property
    def max_entry(self) -> NonnegScalar:
        return max(e for row in self.table for e in row)

    def __add__(self, other):
        if not isinstance(other, FiniteSemiMetric):
            return NotImplemented
        if self.size != other.size:
            raise CarrierMismatch("different carrier sizes")
        return FiniteSemiMetric(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.table, other.table)
            ]
        )

    def scale(self, lam) -> "FiniteSemiMetric":
        lam = NonnegScalar(lam)
        return FiniteSemiMetric([[lam * e for e in row] for row in self.table])

    def __eq__(self, other):
        if not isinstance(other, FiniteSemiMetric):
            return NotImplemented
        return self.table == other.table

    def __repr__(self):
        return f"FiniteSemiMetric(n={self.size})"


def semimetric_violations(rows):
    """All semi-metric axiom violations of a square scalar table."""
    n = len(rows)
    out = []
    for i in range(n):
        if not rows[i][i].is_zero:
            out.append({"axiom": "zero_diagonal", "i": i})
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                out.append({"axiom": "symmetry", "i": i, "j": j})
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[i][k] > rows[i][j] + rows[j][k]:
                    out.append(
                        {
                            "axiom": "triangle",
                            "triple": (i, j, k),
                            "lhs": rows[i][k],
                            "rhs": rows[i][j] + rows[j][k],
                        }
                    )
    return out


class CandidatePreserver:
    """Piecewise-linear candidate f on [0, M] with f(0) = 0; composing it
    with a semi-metric either survives the exhaustive re-check or yields
    a concrete counterexample triple."""

    __slots__ = ("fn",)

    def __init__(self, fn: PiecewiseLinearFn):
        if not fn.a.is_zero:
            raise IntervalMismatch("preserver domain must start at 0")
        if not fn.evaluate(ZERO).is_zero:
            raise ValueError("preserver must satisfy f(0) = 0")
        self.fn = fn

    def __call__(self, t: NonnegScalar) -> NonnegScalar:
        return self.fn.evaluate(t)

    def __add__(self, other):
        if not isinstance(other, CandidatePreserver):
            return NotImplemented
        return CandidatePreserver(self.fn + other.fn)

    def scale(self, lam) -> "CandidatePreserver":
        return CandidatePreserver(self.fn.scale(lam))

    @property
    def domain_end(self) -> NonnegScalar:
        return self.fn.b


def _line_metric():
    two = NonnegScalar(2)
    one = NonnegScalar(1)
    return FiniteSemiMetric(
        [[ZERO, one, two], [one, ZERO, one], [two, one, ZERO]]
    )


def _discrete_metric(n=4):
    one = NonnegScalar(1)
    return FiniteSemiMetric(
        [[ZERO if i == j else one for j in range(n)] for i in range(n)]
    )


def _path_metric():
    h = NonnegScalar(1, 2)
    one = NonnegScalar(1)
    threehalf = NonnegScalar(3, 2)
    return FiniteSemiMetric(
        [
            [ZERO, h, one, threehalf],
            [h, ZERO, h, one],
            [one, h, ZERO, h],
            [threehalf, one, h, ZERO],
        ]
    )


BUNDLED_METRICS = (_line_metric(), _discrete_metric(), _path_metric())


def preserver_falsify(candidate: CandidatePreserver, metrics=None, closure_scalars=("1/2", "3")) -> dict:
    """Compose the candidate with each metric and re-check the semi-metric
    axioms exhaustively.

    Verdict is "falsified" with the first counterexample triple, or
    "not_falsified" (which is evidence, not a proof of preservation). For
    surviving candidates the closure of the preserver space is spot-checked:
    the candidate's double and its scalings are re-audited on the same set.
    """
    metrics = BUNDLED_METRICS if metrics is None else tuple(metrics)
    for idx, m in enumerate(metrics):
        if m.max_entry > candidate.domain_end:
            raise DomainTooSmall(
                f"metric {idx} has entries beyond the candidate domain"
            )

    def falsify(cand):
        for idx, m in enumerate(metrics):
            table = [[cand(e) for e in row] for row in m.table]
            bad = semimetric_violations(table)
            if bad:
                return {"metric_index": idx, **bad[0]}
        return None

    witness = falsify(candidate)
    report = {
        "metrics": len(metrics),
        "verdict": "falsified" if witness else "not_falsified",
        "witness": witness,
        "closure": [],
    }
    if witness is None:
        for label, cand in (
            ("sum", candidate + candidate),
            *((f"scale:{s}", candidate.scale(s)) for s in closure_scalars),
        ):
            w = falsify(cand)
            report["closure"].append(
                {"combination": label, "verdict": "falsified" if w else "not_falsified", "witness": w}
            )
    return report


# ---------------------------------------------------------------------------
# Axiom validators (exact on sampled probes).

def validate_seminorm(f: Functional, samples=48, seed=0) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        u = random_signed_vector(rng, f.dim)
        v = random_signed_vector(rng, f.dim)
        alpha = _random_q(rng, signed=True)
        if f(u) < 0:
            failures.append({"axiom": "nonnegative", "u": u})
        if f(_vscale(alpha, u)) != _absq(alpha) * f(u):
            failures.append({"axiom": "absolute_homogeneity", "u": u, "alpha": alpha})
        if f(_vadd(u, v)) > f(u) + f(v):
            failures.append({"axiom": "triangle", "u": u, "v": v})
    return {"ok": not failures, "failures": failures, "samples": samples}


def validate_inner(p: BilinearForm, samples=48, seed=0) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        u = random_signed_vector(rng, p.dim)
        u2 = random_signed_vector(rng, p.dim)
        v = random_signed_vector(rng, p.dim)
        alpha = _random_q(rng, signed=True)
        if p(u, v) != p(v, u):
            failures.append({"axiom": "symmetry", "u": u, "v": v})
        if p(_vadd(u, u2), v) != p(u, v) + p(u2, v):
            failures.append({"axiom": "additive_first_slot", "u": u, "u2": u2, "v": v})
        if p(u, _vadd(v, u2)) != p(u, v) + p(u, u2):
            failures.append({"axiom": "additive_second_slot", "u": u, "v": v})
        if p(_vscale(alpha, u), v) != alpha * p(u, v):
            failures.append({"axiom": "homogeneous_first_slot", "alpha": alpha})
        if p(u, _vscale(alpha, v)) != alpha * p(u, v):
            failures.append({"axiom": "homogeneous_second_slot", "alpha": alpha})
        if p(u, u) < 0:
            failures.append({"axiom": "nonnegative_diagonal", "u": u})
    return {"ok": not failures, "failures": failures, "samples": samples}


def validate_sublinear(f: Functional, samples=48, seed=0) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        u = random_signed_vector(rng, f.dim)
        v = random_signed_vector(rng, f.dim)
        alpha = _random_q(rng, signed=False)
        if f(_vadd(u, v)) > f(u) + f(v):
            failures.append({"axiom": "subadditive", "u": u, "v": v})
        if f(_vscale(alpha, u)) != alpha * f(u):
            failures.append({"axiom": "positively_homogeneous", "u": u, "alpha": alpha})
    return {"ok": not failures, "failures": failures, "samples": samples}


_VALIDATORS = {
    "seminorm": validate_seminorm,
    "sublinear": validate_sublinear,
}


def space_closure_audit(family: str, a, b, lam, samples=48, seed=0) -> dict:
    """Build a + b and lam * a pointwise and re-validate the family's
    defining axioms (exhaustively for finite semi-metrics, on exact
    sampled probes for functionals)."""
    lam = NonnegScalar(lam)
    if family == "semimetric":
        if not isinstance(a, FiniteSemiMetric) or not isinstance(b, FiniteSemiMetric):
            raise CarrierMismatch("semimetric family expects FiniteSemiMetric objects")
        results = {}
        for label, builder in (("sum", lambda: a + b), ("scaled", lambda: a.scale(lam))):
            try:
                builder()
                results[label] = {"ok": True, "failures": []}
            except ValueError as exc:
                results[label] = {"ok": False, "failures": [str(exc)]}
        return {
            "family": family,
            "lambda": lam,
            "exhaustive": True,
            "sum": results["sum"],
            "scaled": results["scaled"],
            "ok": results["sum"]["ok"] and results["scaled"]["ok"],
        }
    if family == "semiinner":
        if not isinstance(a, BilinearForm) or not isinstance(b, BilinearForm):
            raise CarrierMismatch("semiinner family expects BilinearForm objects")
        s = validate_inner(a + b, samples, seed)
        c = validate_inner(a.scale(lam), samples, seed + 1)
        return {
            "family": family, "lambda": lam, "exhaustive": False,
            "sum": s, "scaled": c, "ok": s["ok"] and c["ok"],
        }
    if family in _VALIDATORS:
        if not isinstance(a, Functional) or not isinstance(b, Functional):
            raise CarrierMismatch(f"{family} family expects Functional objects")
        if a.dim != b.dim:
            raise CarrierMismatch("functionals on different spaces")
        validator = _VALIDATORS[family]
        s = validator(a + b, samples, seed)
        c = validator(a.scale(lam), samples, seed + 1)
        return {
            "family": family, "lambda": lam, "exhaustive": False,
            "sum": s, "scaled": c, "ok": s["ok"] and c["ok"],
        }
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Pullbacks and the category audit.

def pullback_seminorm(n: Functional, t: LinearMapQ, samples=48, seed=0, injective_certificate=False):
    """N o T plus its axiom audit. With an injectivity certificate for T
    the audit additionally samples definiteness (N(Tv) = 0 only at v = 0)."""
    if n.dim != t.out_dim:
        raise DimensionMismatch("functional does not match map codomain")
    pulled = Functional(t.in_dim, lambda v: n(t.apply(v)), f"{n.label}∘T")
    report = validate_seminorm(pulled, samples, seed)
    if injective_certificate:
        rng = random.Random(seed + 1)
        definite_failures = []
        for _ in range(samples):
            v = random_signed_vector(rng, pulled.dim)
            if any(x != 0 for x in v) and pulled(v) == 0:
                definite_failures.append({"axiom": "definiteness", "v": v})
        report["definiteness_ok"] = not definite_failures
        report["failures"].extend(definite_failures)
        report["ok"] = report["ok"] and not definite_failures
    return pulled, report


def pullback_closure_audit(t: LinearMapQ, norms, lam, samples=48, seed=0) -> dict:
    """Exact pointwise identities (N1 o T) + (N2 o T) = (N1 + N2) o T and
    lam (N o T) = (lam N) o T on sampled probes."""
    if len(norms) < 2:
        raise DimensionMismatch("need at least two functionals")
    n1, n2 = norms[0], norms[1]
    if n1.dim != t.out_dim or n2.dim != t.out_dim:
        raise DimensionMismatch("functionals do not match map codomain")
    lam = NonnegScalar(lam)
    rng = random.Random(seed)
    pb = lambda n: Functional(t.in_dim, lambda v: n(t.apply(v)), "pb")
    lhs_sum = pb(n1) + pb(n2)
    rhs_sum = pb(n1 + n2)
    lhs_scale = pb(n1).scale(lam)
    rhs_scale = pb(n1.scale(lam))
    failures = []
    for _ in range(samples):
        v = random_signed_vector(rng, t.in_dim)
        if lhs_sum(v) != rhs_sum(v):
            failures.append({"law": "sum_commutes_with_pullback", "v": v})
        if lhs_scale(v) != rhs_scale(v):
            failures.append({"law": "scale_commutes_with_pullback", "v": v})
    return {"samples": samples, "ok": not failures, "failures": failures}


def category_laws_audit(t1: LinearMapQ, t2: LinearMapQ, t3: LinearMapQ, norms, samples=100, seed=0) -> dict:
    """Category audit over the chain of pullback functors induced by
    t1: V -> U, t2: W -> V, t3: X -> W, acting on functionals over U.

    Checks, as exact pointwise identities on sampled probe vectors:
    identity laws, associativity of the composed pullbacks, semi-linearity
    of the functor (sums and nonnegative scalings), and the collapsed
    composite formula N o (t1 t2 t3).
    """
    if t1.in_dim != t2.out_dim or t2.in_dim != t3.out_dim:
        raise NonComposableChain(
            f"chain dims do not match: {t1.in_dim} vs {t2.out_dim}, {t2.in_dim} vs {t3.out_dim}"
        )
    if any(n.dim != t1.out_dim for n in norms):
        raise DimensionMismatch("functionals must live over the chain top")
    rng = random.Random(seed)

    def pull(n, t):
        return Functional(t.in_dim, lambda v: n(t.apply(v)), "pb")

    id_u = LinearMapQ.identity(t1.out_dim)
    id_v = LinearMapQ.identity(t1.in_dim)
    lam = NonnegScalar(rng.randint(0, 9), rng.randint(1, 5))
    failures = []
    checks = {"identity": 0, "associativity": 0, "semilinearity": 0, "composite": 0}
    composed_all = t1.compose(t2).compose(t3)
    left_group = t1.compose(t2)   # then pull through t3
    right_group = t2.compose(t3)  # pulled after t1

    for n in norms:
        n_sum = norms[0] + n
        for _ in range(samples):
            u_probe = random_signed_vector(rng, t1.out_dim)
            v_probe = random_signed_vector(rng, t1.in_dim)
            x_probe = random_signed_vector(rng, t3.in_dim)

            checks["identity"] += 1
            if pull(n, id_u)(u_probe) != n(u_probe):
                failures.append({"law": "identity_on_top", "v": u_probe})
            if pull(pull(n, t1), id_v)(v_probe) != pull(n, t1)(v_probe):
                failures.append({"law": "identity_after_pullback", "v": v_probe})

            checks["associativity"] += 1
            lhs = pull(pull(n, left_group), t3)(x_probe)
            rhs = pull(pull(n, t1), right_group)(x_probe)
            if lhs != rhs:
                failures.append({"law": "associativity", "v": x_probe})

            checks["semilinearity"] += 1
            if pull(n_sum, t1)(v_probe) != pull(norms[0], t1)(v_probe) + pull(n, t1)(v_probe):
                failures.append({"law": "functor_additive", "v": v_probe})
            if pull(n.scale(lam), t1)(v_probe) != lam._q * pull(n, t1)(v_probe):
                failures.append({"law": "functor_homogeneous", "v": v_probe})

            checks["composite"] += 1
            step = pull(pull(pull(n, t1), t2), t3)(x_probe)
            collapsed = pull(n, composed_all)(x_probe)
            if step != collapsed:
                failures.append({"law": "composite_formula", "v": x_probe})

    return {
        "samples_per_norm": samples,
        "norms": len(norms),
        "lambda": lam,
        "checks": checks,
        "ok": not failures,
        "failures": failures,
    }


def pullback_inner(p: BilinearForm, t1: LinearMapQ, t2: LinearMapQ, samples=48, seed=0):
    """(u, v) -> P(T1 u, T2 v) plus the axiom audit. With distinct maps the
    symmetry axiom can fail; the audit reports exactly what holds."""
    if p.dim != t1.out_dim or p.dim != t2.out_dim:
        raise DimensionMismatch("form does not match map codomains")
    if t1.in_dim != t2.in_dim:
        raise DimensionMismatch("maps have different domains")
    pulled = BilinearForm(
        t1.in_dim, lambda u, v: p(t1.apply(u), t2.apply(v)), "pb_inner"
    )
    return pulled, validate_inner(pulled, samples, seed)


# ---------------------------------------------------------------------------
# Random object generators (shared by tests and the CLI audit command).

def random_semimetric(rng: random.Random, size: int) -> FiniteSemiMetric:
    """Metric completion (min-plus closure) of a random symmetric table."""
    raw = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            e = NonnegScalar(rng.randint(0, 20), rng.randint(1, 4))
            raw[i][j] = raw[j][i] = e
    for k in range(size):
        for i in range(size):
            for j in range(size):
                via = raw[i][k] + raw[k][j]
                if via < raw[i][j]:
                    raw[i][j] = via
    return FiniteSemiMetric(raw)


def random_seminorm(rng: random.Random, dim: int) -> Functional:
    atoms = []
    for _ in range(rng.randint(1, 3)):
        pick = rng.randrange(3)
        if pick == 0:
            atoms.append(weighted_l1([_random_q(rng) for _ in range(dim)]))
        elif pick == 1:
            atoms.append(weighted_max_abs([_random_q(rng) for _ in range(dim)]))
        else:
            atoms.append(abs_linear(random_signed_vector(rng, dim)))
    out = atoms[0]
    for a in atoms[1:]:
        out = out + a
    return out


def random_inner(rng: random.Random, dim: int) -> BilinearForm:
    k = rng.randint(1, dim + 1)
    return gram_form([random_signed_vector(rng, dim) for _ in range(k)])


def random_sublinear(rng: random.Random, dim: int) -> Functional:
    k = rng.randint(1, 4)
    return max_linear([random_signed_vector(rng, dim) for _ in range(k)])

"""Coordinate semimodules over the nonnegative rationals.

SemiVector, SemiMatrix and SemiPolynomial are the concrete carriers; all
three support + and nonnegative scaling and satisfy the same axiom set,
which axiom_audit exercises on seeded random samples. SemiBasis plus
coords give exact nonnegative coordinates with a uniqueness certificate,
and subspace_check audits finitely generated cones with an exact
membership oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _signed
from ._caps import exact_dim_cap
from .errors import (
    DimensionCap,
    DimensionMismatch,
    NonUnique,
    NotRepresentable,
)
from .scalar import ONE, ZERO, NonnegScalar

__all__ = [
    "SemiVector",
    "SemiMatrix",
    "SemiPolynomial",
    "SemiBasis",
    "Coordinates",
    "vec_add",
    "vec_scale",
    "is_symmetrizable",
    "is_simple_space",
    "subspace_check",
    "coords",
    "axiom_audit",
    "random_scalar",
]


def _to_scalar(x) -> NonnegScalar:
    return x if isinstance(x, NonnegScalar) else NonnegScalar(x)


class SemiVector:
    """Dense vector with nonnegative rational coordinates, length >= 1."""

    __slots__ = ("_coords",)

    def __init__(self, coords):
        items = tuple(_to_scalar(c) for c in coords)
        if not items:
            raise DimensionMismatch("a vector needs at least one coordinate")
        self._coords = items

    @classmethod
    def _wrap(cls, items):
        obj = object.__new__(cls)
        obj._coords = items
        return obj

    @classmethod
    def zero(cls, n: int) -> "SemiVector":
        return cls._wrap(tuple([ZERO] * n))

    @classmethod
    def unit(cls, n: int, i: int) -> "SemiVector":
        """Standard basis vector e_i (0-based index)."""
        items = [ZERO] * n
        items[i] = ONE
        return cls._wrap(tuple(items))

    @property
    def dim(self) -> int:
        return len(self._coords)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coords)

    def __len__(self):
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, i):
        return self._coords[i]

    def __add__(self, other):
        if not isinstance(other, SemiVector):
            return NotImplemented
        if len(self._coords) != len(other._coords):
            raise DimensionMismatch(
                f"vector lengths differ: {len(self._coords)} vs {len(other._coords)}"
            )
        return SemiVector._wrap(
            tuple(a + b for a, b in zip(self._coords, other._coords))
        )

    def scale(self, lam) -> "SemiVector":
        lam = _to_scalar(lam)
        return SemiVector._wrap(tuple(lam * c for c in self._coords))

    def __rmul__(self, lam):
        if isinstance(lam, (NonnegScalar, int, str)):
            return self.scale(lam)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SemiVector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __repr__(self):
        inner = ", ".join(c.literal for c in self._coords)
        return f"SemiVector([{inner}])"


class SemiMatrix:
    """Dense n x m matrix of nonnegative rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        packed = tuple(tuple(_to_scalar(e) for e in row) for row in rows)
        if not packed or not packed[0]:
            raise DimensionMismatch("matrix dimensions must be positive")
        width = len(packed[0])
        if any(len(r) != width for r in packed):
            raise DimensionMismatch("ragged rows in matrix")
        self._rows = packed

    @classmethod
    def _wrap(cls, rows):
        obj = object.__new__(cls)
        obj._rows = rows
        return obj

    @classmethod
    def zero(cls, n: int, m: int) -> "SemiMatrix":
        return cls._wrap(tuple(tuple([ZERO] * m) for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SemiMatrix":
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def entry(self, i, j) -> NonnegScalar:
        return self._rows[i][j]

    def rows(self):
        return self._rows

    def transpose(self) -> "SemiMatrix":
        return SemiMatrix._wrap(tuple(zip(*self._rows)))

    def __add__(self, other):
        if not isinstance(other, SemiMatrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("matrix shapes differ")
        return SemiMatrix._wrap(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self._rows, other._rows)
            )
        )

    def scale(self, lam) -> "SemiMatrix":
        lam = _to_scalar(lam)
        return SemiMatrix._wrap(
            tuple(tuple(lam * e for e in row) for row in self._rows)
        )

    def __rmul__(self, lam):
        if isinstance(lam, (NonnegScalar, int, str)):
            return self.scale(lam)
        return NotImplemented

    def __matmul__(self, other):
        if not isinstance(other, SemiMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = other.transpose()._rows
        out = []
        for row in self._rows:
            out.append(
                tuple(
                    sum((a * b for a, b in zip(row, col)), ZERO)
                    for col in cols
                )
            )
        return SemiMatrix._wrap(tuple(out))

    def apply(self, v: SemiVector) -> SemiVector:
        if v.dim != self.ncols:
            raise DimensionMismatch(
                f"matrix has {self.ncols} columns, vector has {v.dim}"
            )
        return SemiVector._wrap(
            tuple(
                sum((a * b for a, b in zip(row, v)), ZERO)
                for row in self._rows
            )
        )

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self._rows for e in row)

    def __eq__(self, other):
        if not isinstance(other, SemiMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SemiMatrix({self.nrows}x{self.ncols})"


class SemiPolynomial:
    """Polynomial with nonnegative rational coefficients, indexed by degree.

    The zero polynomial is the empty coefficient tuple; otherwise trailing
    zeros are stripped so the degree is explicit.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients):
        items = [_to_scalar(c) for c in coefficients]
        while items and items[-1].is_zero:
            items.pop()
        self._coeffs = tuple(items)

    @classmethod
    def zero(cls) -> "SemiPolynomial":
        return cls(())

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> NonnegScalar:
        return self._coeffs[k] if k < len(self._coeffs) else ZERO

    def coefficients(self):
        return self._coeffs

    def evaluate(self, x: NonnegScalar) -> NonnegScalar:
        acc = ZERO
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, SemiPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return SemiPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    def scale(self, lam) -> "SemiPolynomial":
        lam = _to_scalar(lam)
        return SemiPolynomial(tuple(lam * c for c in self._coeffs))

    def __rmul__(self, lam):
        if isinstance(lam, (NonnegScalar, int, str)):
            return self.scale(lam)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SemiPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return "SemiPolynomial(0)"
        return f"SemiPolynomial(degree={self.degree})"


class SemiBasis:
    """A candidate coordinate family: pairwise distinct vectors sharing an
    ambient dimension. Whether it actually is a semi-basis for a given
    vector is decided by coords."""

    __slots__ = ("_elements", "_ambient")

    def __init__(self, elements, ambient_dim=None):
        elems = tuple(
            e if isinstance(e, SemiVector) else SemiVector(e) for e in elements
        )
        if elems:
            ambient = elems[0].dim
            if any(e.dim != ambient for e in elems):
                raise DimensionMismatch("basis elements have mixed dimensions")
            if ambient_dim is not None and ambient_dim != ambient:
                raise DimensionMismatch("ambient_dim disagrees with elements")
        else:
            if ambient_dim is None:
                raise DimensionMismatch("empty basis needs an explicit ambient_dim")
            ambient = ambient_dim
        if len(set(elems)) != len(elems):
            raise DimensionMismatch("basis elements must be pairwise distinct")
        self._elements = elems
        self._ambient = ambient

    @classmethod
    def standard(cls, n: int) -> "SemiBasis":
        return cls(tuple(SemiVector.unit(n, i) for i in range(n)))

    @property
    def ambient_dim(self) -> int:
        return self._ambient

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __getitem__(self, i):
        return self._elements[i]

    def __eq__(self, other):
        if not isinstance(other, SemiBasis):
            return NotImplemented
        return self._elements == other._elements and self._ambient == other._ambient

    def __repr__(self):
        return f"SemiBasis({len(self._elements)} elements in dim {self._ambient})"


def vec_add(u: SemiVector, v: SemiVector) -> SemiVector:
    return u + v


def vec_scale(lam, v: SemiVector) -> SemiVector:
    return v.scale(lam)


def is_symmetrizable(v: SemiVector) -> bool:
    """True iff some u satisfies u + v = 0. Componentwise nonnegative sums
    vanish only when both sides vanish, so only the zero vector qualifies."""
    return v.is_zero


def is_simple_space(n: int) -> bool:
    """Coordinate spaces over the nonnegative rationals are always simple:
    the componentwise argument leaves the zero vector as the only
    symmetrizable element, whatever the dimension."""
    if n < 1:
        raise DimensionMismatch("dimension must be >= 1")
    return True


def random_scalar(rng: random.Random, max_num=60, max_den=12, allow_zero=True) -> NonnegScalar:
    num = rng.randint(0 if allow_zero else 1, max_num)
    den = rng.randint(1, max_den)
    return NonnegScalar(num, den)


def random_vector(rng: random.Random, n: int, **kw) -> SemiVector:
    return SemiVector._wrap(tuple(random_scalar(rng, **kw) for _ in range(n)))


def _cone_member(generators, w: SemiVector):
    """Exact membership of w in the cone generated by `generators`.
    Returns a coefficient list (NonnegScalar) or None."""
    k = len(generators)
    cap = exact_dim_cap()
    if k > cap:
        raise DimensionCap(f"{k} generators exceed the exact-procedure cap {cap}")
    rows = [
        [generators[j][r]._q for j in range(k)]
        for r in range(w.dim)
    ]
    rhs = [w[r]._q for r in range(w.dim)]
    sol = _signed.solve_nonneg(rows, rhs)
    if sol is None:
        return None
    coeffs = [NonnegScalar(q) for q in sol]
    rebuilt = SemiVector.zero(w.dim)
    for c, g in zip(coeffs, generators):
        rebuilt = rebuilt + g.scale(c)
    if rebuilt != w:
        raise AssertionError("internal: witness failed nonnegative re-verification")
    return coeffs


def subspace_check(generators, samples: int = 50, seed: int = 0, probes=None) -> dict:
    """Audit the cone generated by `generators` as a semi-subspace.

    Randomized members are combined and rescaled; each result is re-decided
    by the exact membership oracle. Optional probe vectors are reported
    with their membership verdicts and witnesses.
    """
    gens = [g if isinstance(g, SemiVector) else SemiVector(g) for g in generators]
    if not gens:
        raise DimensionMismatch("at least one generator required")
    n = gens[0].dim
    if any(g.dim != n for g in gens):
        raise DimensionMismatch("generators have mixed dimensions")
    rng = random.Random(seed)
    failures = []

    def member(w):
        return _cone_member(gens, w) is not None

    zero_ok = member(SemiVector.zero(n))

    def random_member():
        v = SemiVector.zero(n)
        for g in gens:
            v = v + g.scale(random_scalar(rng))
        return v

    add_checked = scale_checked = 0
    for _ in range(samples):
        u, v = random_member(), random_member()
        if not member(u + v):
            failures.append({"law": "addition", "u": u, "v": v})
        add_checked += 1
        lam = random_scalar(rng)
        if not member(u.scale(lam)):
            failures.append({"law": "scaling", "u": u, "lambda": lam})
        scale_checked += 1

    probe_results = []
    for p in probes or ():
        p = p if isinstance(p, SemiVector) else SemiVector(p)
        witness = _cone_member(gens, p)
        probe_results.append(
            {"vector": p, "member": witness is not None, "witness": witness}
        )

    return {
        "generators": len(gens),
        "dimension": n,
        "seed": seed,
        "zero_vector_member": zero_ok,
        "addition_checks": add_checked,
        "scaling_checks": scale_checked,
        "closed": zero_ok and not failures,
        "failures": failures,
        "probes": probe_results,
    }


@dataclass(frozen=True)
class Coordinates:
    """Result of coords: strictly positive coefficients on the support,
    1-based basis indices, plus the uniqueness certificate."""

    support: tuple
    certificate: dict

    def dense(self, basis_size: int):
        out = [ZERO] * basis_size
        for idx, c in self.support:
            out[idx - 1] = c
        return tuple(out)


def coords(v: SemiVector, basis: SemiBasis) -> Coordinates:
    """Unique nonnegative coordinates of v in `basis`.

    The decision runs in the sealed signed oracle (exact elimination plus
    Fourier-Motzkin); the returned family is re-verified in nonnegative
    arithmetic. Raises NotRepresentable when no nonnegative solution
    exists and NonUnique (with two witnesses attached) when the family is
    not unique.
    """
    if len(basis) == 0:
        raise NotRepresentable("empty basis represents only nothing")
    if v.dim != basis.ambient_dim:
        raise DimensionMismatch("vector and basis have different ambient dimensions")
    cap = exact_dim_cap()
    if v.dim > cap or len(basis) > cap:
        raise DimensionCap(
            f"dimensions ({v.dim}, {len(basis)}) exceed the exact-procedure cap {cap}"
        )
    rows = [
        [basis[j][r]._q for j in range(len(basis))]
        for r in range(v.dim)
    ]
    rhs = [v[r]._q for r in range(v.dim)]
    kind, payload = _signed.nonneg_solution_kind(rows, rhs)
    if kind == "infeasible":
        raise NotRepresentable("no nonnegative coordinate family exists")
    if kind == "multiple":
        x1, x2 = payload
        err = NonUnique("two distinct nonnegative coordinate families exist")
        err.witnesses = (
            tuple(NonnegScalar(q) for q in x1),
            tuple(NonnegScalar(q) for q in x2),
        )
        raise err
    coeffs = [NonnegScalar(q) for q in payload]
    rebuilt = SemiVector.zero(v.dim)
    for c, b in zip(coeffs, basis):
        rebuilt = rebuilt + b.scale(c)
    if rebuilt != v:
        raise AssertionError("internal: coordinates failed nonnegative re-verification")
    support = tuple((j + 1, c) for j, c in enumerate(coeffs) if not c.is_zero)
    cert = {"unique": True, "reverified": True, "basis_size": len(basis)}
    return Coordinates(support=support, certificate=cert)


# ---------------------------------------------------------------------------
# Axiom audit shared by the test suite and the CLI `axioms` command.

_LAW_NAMES = (
    "add_associative",
    "add_commutative",
    "zero_identity",
    "scalar_distributes_over_vector_sum",
    "scalar_sum_distributes",
    "scalar_mul_associative",
    "one_identity",
    "zero_scalar_annihilates",
)


def _zero_like(x):
    if isinstance(x, SemiVector):
        return SemiVector.zero(x.dim)
    if isinstance(x, SemiMatrix):
        return SemiMatrix.zero(x.nrows, x.ncols)
    return SemiPolynomial.zero()


def check_svs_laws(u, v, w, alpha: NonnegScalar, beta: NonnegScalar):
    """Evaluate the vector-space law set on one triple; returns the names
    of violated laws (empty tuple when all hold)."""
    zero = _zero_like(u)
    bad = []
    if (u + v) + w != u + (v + w):
        bad.append("add_associative")
    if u + v != v + u:
        bad.append("add_commutative")
    if v + zero != v:
        bad.append("zero_identity")
    if (u + v).scale(alpha) != u.scale(alpha) + v.scale(alpha):
        bad.append("scalar_distributes_over_vector_sum")
    if v.scale(alpha + beta) != v.scale(alpha) + v.scale(beta):
        bad.append("scalar_sum_distributes")
    if v.scale(alpha * beta) != v.scale(beta).scale(alpha):
        bad.append("scalar_mul_associative")
    if v.scale(ONE) != v:
        bad.append("one_identity")
    if not v.scale(ZERO) == zero:
        bad.append("zero_scalar_annihilates")
    return tuple(bad)


def check_cancellation(u, v, w):
    """Additive cancellation as a biconditional: u+v = u+w iff v = w."""
    return (u + v == u + w) == (v == w)


def axiom_audit(space: str = "rn", dim: int = 3, samples: int = 1000, seed: int = 0) -> dict:
    """Run the vector-space law set plus cancellation on seeded random
    triples drawn from one of the bundled carriers.

    space: "rn" (vectors of length dim), "matrices" (dim x dim+1), or
    "polynomials" (degree <= dim).
    """
    rng = random.Random(seed)

    if space == "rn":
        def sample():
            return random_vector(rng, dim)
    elif space == "matrices":
        def sample():
            return SemiMatrix(
                [[random_scalar(rng) for _ in range(dim + 1)] for _ in range(dim)]
            )
    elif space == "polynomials":
        def sample():
            return SemiPolynomial([random_scalar(rng) for _ in range(dim + 1)])
    else:
        raise ValueError(f"unknown space {space!r}")

    law_failures = {name: 0 for name in _LAW_NAMES}
    cancellation_failures = 0
    witnesses = []
    for _ in range(samples):
        u, v, w = sample(), sample(), sample()
        alpha, beta = random_scalar(rng), random_scalar(rng)
        bad = check_svs_laws(u, v, w, alpha, beta)
        for name in bad:
            law_failures[name] += 1
            if len(witnesses) < 5:
                witnesses.append({"law": name, "u": u, "v": v, "w": w})
        if not check_cancellation(u, v, w):
            cancellation_failures += 1
            if len(witnesses) < 5:
                witnesses.append({"law": "cancellation", "u": u, "v": v, "w": w})

    total = sum(law_failures.values()) + cancellation_failures
    return {
        "space": space,
        "dim": dim,
        "samples": samples,
        "seed": seed,
        "laws": {name: {"failures": count} for name, count in law_failures.items()},
        "cancellation_failures": cancellation_failures,
        "all_hold": total == 0,
        "witnesses": witnesses,
    }

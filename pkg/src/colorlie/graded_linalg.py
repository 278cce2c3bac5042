"""Exact linear algebra over finite-dimensional graded vector spaces.

Grading group is the free abelian group Z^r; a degree is an integer
vector of length r.  Spaces carry an ordered, uniquely labelled
homogeneous basis.  Morphisms are degree-preserving linear maps stored
as sparse column lists of exact scalars.  Everything is immutable and
every operation is a pure function, so values can be shared freely.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .fields import Field, Scalar

Degree = tuple[int, ...]

TENSOR_SEP = "⊗"  # joins labels of tensor basis vectors


class LinalgError(ValueError):
    """Shape, rank, degree or label violation."""


def degree_add(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def zero_degree(rank: int) -> Degree:
    return (0,) * rank


@dataclass(frozen=True)
class GradedSpace:
    """Ordered homogeneous basis: unique labels plus their degrees."""

    rank: int
    labels: tuple[str, ...]
    degrees: tuple[Degree, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.degrees):
            raise LinalgError("label/degree length mismatch")
        if len(set(self.labels)) != len(self.labels):
            raise LinalgError(f"duplicate basis labels in {self.labels}")
        for d in self.degrees:
            if len(d) != self.rank:
                raise LinalgError(f"degree {d} has wrong rank (expected {self.rank})")

    @staticmethod
    def build(rank: int, basis: Iterable[tuple[str, Sequence[int]]]) -> "GradedSpace":
        items = list(basis)
        return GradedSpace(
            rank,
            tuple(label for label, _ in items),
            tuple(tuple(int(x) for x in deg) for _, deg in items),
        )

    @staticmethod
    def unit(rank: int) -> "GradedSpace":
        """The one-dimensional space at degree zero."""
        return GradedSpace(rank, ("1",), (zero_degree(rank),))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LinalgError(f"no basis vector labelled {label!r}") from None

    def basis(self) -> Iterator[tuple[str, Degree]]:
        return iter(zip(self.labels, self.degrees))

    def __repr__(self) -> str:
        body = ", ".join(f"{l}:{d}" for l, d in zip(self.labels, self.degrees))
        return f"GradedSpace[{body}]"


@lru_cache(maxsize=None)
def tensor_space(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    """Tensor product with row-major basis (v_i (x) w_j) and added degrees.

    Flat label joining makes iterated products strictly associative:
    (a(x)b)(x)c and a(x)(b(x)c) yield identical basis lists.
    """
    if v.rank != w.rank:
        raise LinalgError(f"rank mismatch {v.rank} vs {w.rank}")
    labels = tuple(
        f"{lv}{TENSOR_SEP}{lw}" for lv in v.labels for lw in w.labels
    )
    degrees = tuple(
        degree_add(dv, dw) for dv in v.degrees for dw in w.degrees
    )
    return GradedSpace(v.rank, labels, degrees)


def tensor_spaces(spaces: Sequence[GradedSpace], rank: int | None = None) -> GradedSpace:
    """Iterated tensor product; the empty product is the unit object."""
    if not spaces:
        if rank is None:
            raise LinalgError("empty tensor product needs an explicit rank")
        return GradedSpace.unit(rank)
    out = spaces[0]
    for s in spaces[1:]:
        out = tensor_space(out, s)
    return out


def direct_sum(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    if v.rank != w.rank:
        raise LinalgError(f"rank mismatch {v.rank} vs {w.rank}")
    if set(v.labels) & set(w.labels):
        raise LinalgError("direct summands share basis labels")
    return GradedSpace(v.rank, v.labels + w.labels, v.degrees + w.degrees)


Entry = tuple[int, Scalar]


@dataclass(frozen=True)
class Morphism:
    """Degree-preserving linear map as sparse columns of exact scalars.

    ``cols[j]`` lists the nonzero entries of the image of the j-th source
    basis vector as (target index, coefficient) pairs sorted by index.
    An entry is legal only between basis vectors of equal degree.
    """

    field: Field
    source: GradedSpace
    target: GradedSpace
    cols: tuple[tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cols) != self.source.dim:
            raise LinalgError("column count does not match source dimension")
        for j, col in enumerate(self.cols):
            prev = -1
            for i, v in col:
                if not 0 <= i < self.target.dim:
                    raise LinalgError(f"target index {i} out of range")
                if i <= prev:
                    raise LinalgError("column entries not strictly sorted")
                prev = i
                if not self.field.contains(v):
                    raise LinalgError(f"scalar {v!r} not in {self.field.describe()}")
                if v == 0:
                    raise LinalgError("explicit zero entry")
                if self.target.degrees[i] != self.source.degrees[j]:
                    raise LinalgError(
                        f"entry ({self.target.labels[i]}, {self.source.labels[j]}) "
                        f"violates degree preservation"
                    )

    # -- construction -------------------------------------------------

    @staticmethod
    def build(
        field: Field,
        source: GradedSpace,
        target: GradedSpace,
        entries: Mapping[tuple[int, int], Scalar] | Iterable[tuple[int, int, Scalar]],
    ) -> "Morphism":
        """Canonicalize an entry collection keyed by (target, source) index."""
        cols: list[dict[int, Scalar]] = [dict() for _ in range(source.dim)]
        if isinstance(entries, Mapping):
            items = [(i, j, v) for (i, j), v in entries.items()]
        else:
            items = list(entries)
        for i, j, v in items:
            if not 0 <= j < source.dim:
                raise LinalgError(f"source index {j} out of range")
            v = field.of(v)
            if v == 0:
                continue
            acc = cols[j].get(i)
            acc = v if acc is None else acc + v
            if acc == 0:
                cols[j].pop(i, None)
            else:
                cols[j][i] = acc
        return Morphism(field, source, target, _freeze_cols(cols))

    @staticmethod
    def zero(field: Field, source: GradedSpace, target: GradedSpace) -> "Morphism":
        return Morphism(field, source, target, tuple(() for _ in range(source.dim)))

    @staticmethod
    @lru_cache(maxsize=None)
    def identity(field: Field, space: GradedSpace) -> "Morphism":
        cols = tuple(((j, field.one),) for j in range(space.dim))
        return Morphism(field, space, space, cols)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        for j, col in enumerate(self.cols):
            for i, v in col:
                yield i, j, v

    def column(self, j: int) -> tuple[Entry, ...]:
        return self.cols[j]

    def column_by_label(self, label: str) -> dict[str, Scalar]:
        """Image of the named source basis vector, keyed by target labels."""
        j = self.source.index(label)
        return {self.target.labels[i]: v for i, v in self.cols[j]}

    def same_matrix(self, other: "Morphism") -> bool:
        """Equality up to basis labels: same degrees and the same entries."""
        return (
            self.field == other.field
            and self.source.degrees == other.source.degrees
            and self.target.degrees == other.target.degrees
            and self.cols == other.cols
        )

    # -- algebra -------------------------------------------------------

    def _require_parallel(self, other: "Morphism") -> None:
        if self.field != other.field:
            raise LinalgError("field mismatch")
        if self.source != other.source or self.target != other.target:
            raise LinalgError("shape mismatch: sources/targets differ")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._require_parallel(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            if not b:
                cols.append(a)
                continue
            acc = dict(a)
            for i, v in b:
                s = acc.get(i)
                s = v if s is None else s + v
                if s == 0:
                    acc.pop(i, None)
                else:
                    acc[i] = s
            cols.append(tuple(sorted(acc.items())))
        return _unchecked(self.field, self.source, self.target, tuple(cols))

    def __neg__(self) -> "Morphism":
        cols = tuple(tuple((i, -v) for i, v in col) for col in self.cols)
        return _unchecked(self.field, self.source, self.target, cols)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, scalar) -> "Morphism":
        scalar = self.field.of(scalar)
        if scalar == 0:
            return Morphism.zero(self.field, self.source, self.target)
        cols = tuple(tuple((i, scalar * v) for i, v in col) for col in self.cols)
        return _unchecked(self.field, self.source, self.target, cols)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition self after other."""
        if self.field != other.field:
            raise LinalgError("field mismatch")
        if self.source != other.target:
            raise LinalgError(
                "composition undefined: inner spaces are not the same basis list"
            )
        one = self.field.one
        mine = self.cols
        cols = []
        for col in other.cols:
            if len(col) == 1:
                # single-entry columns are overwhelmingly common
                k, c = col[0]
                if c is one:
                    cols.append(mine[k])
                    continue
                cols.append(tuple((i, a * c) for i, a in mine[k]))
                continue
            acc: dict[int, Scalar] = {}
            for k, c in col:
                for i, a in mine[k]:
                    s = acc.get(i)
                    p = a if c is one else a * c
                    s = p if s is None else s + p
                    if s == 0:
                        acc.pop(i, None)
                    else:
                        acc[i] = s
            cols.append(tuple(sorted(acc.items())))
        return _unchecked(self.field, other.source, self.target, tuple(cols))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.target.labels[i]}<-{self.source.labels[j]}:{v}"
            for i, j, v in self.entries()
        )
        return f"Morphism({body or '0'})"


def _freeze_cols(cols: Sequence[Mapping[int, Scalar] | dict[int, Scalar]]):
    return tuple(tuple(sorted(col.items())) for col in cols)


def _unchecked(
    field: Field,
    source: GradedSpace,
    target: GradedSpace,
    cols: tuple[tuple[Entry, ...], ...],
) -> Morphism:
    # for results of the algebra ops, whose invariants hold by construction
    out = object.__new__(Morphism)
    object.__setattr__(out, "field", field)
    object.__setattr__(out, "source", source)
    object.__setattr__(out, "target", target)
    object.__setattr__(out, "cols", cols)
    return out


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f after g."""
    return f @ g


def tensor_morphism(f: Morphism, g: Morphism) -> Morphism:
    """(f (x) g)(v (x) w) = f(v) (x) g(w); the Kronecker product on entries."""
    if f.field != g.field:
        raise LinalgError("field mismatch")
    if f.source.rank != g.source.rank:
        raise LinalgError("rank mismatch")
    source = tensor_space(f.source, g.source)
    target = tensor_space(f.target, g.target)
    t2 = g.target.dim
    one = f.field.one
    cols = []
    for colf in f.cols:
        for colg in g.cols:
            cols.append(
                tuple(
                    (
                        i1 * t2 + i2,
                        b if a is one else (a if b is one else a * b),
                    )
                    for i1, a in colf
                    for i2, b in colg
                )
            )
    return _unchecked(f.field, source, target, tuple(cols))


def tensor_morphisms(ms: Sequence[Morphism]) -> Morphism:
    if not ms:
        raise LinalgError("empty tensor product of morphisms")
    out = ms[0]
    for m in ms[1:]:
        out = tensor_morphism(out, m)
    return out


def leg(f: Morphism, position: int, ambient: Sequence[GradedSpace]) -> Morphism:
    """Place f into slot ``position`` (1-based) of an ambient tensor product.

    The source of f must match a run of consecutive ambient factors
    starting at that slot; identities fill the remaining slots.
    """
    n = len(ambient)
    if not 1 <= position <= n + 1:
        raise LinalgError(f"position {position} out of range for {n} factors")
    rank = f.source.rank
    start = position - 1
    span = None
    for k in range(0, n - start + 1):
        if tensor_spaces(list(ambient[start : start + k]), rank) == f.source:
            span = k
            break
    if span is None:
        raise LinalgError("morphism source does not fit the ambient slot")
    out = f
    right = list(ambient[start + span :])
    if right:
        out = tensor_morphism(out, Morphism.identity(f.field, tensor_spaces(right, rank)))
    left = list(ambient[:start])
    if left:
        out = tensor_morphism(Morphism.identity(f.field, tensor_spaces(left, rank)), out)
    return out


# -- exact elimination ------------------------------------------------


def _dense(f: Morphism) -> list[list[Scalar]]:
    zero = f.field.zero
    mat = [[zero] * f.source.dim for _ in range(f.target.dim)]
    for i, j, v in f.entries():
        mat[i][j] = v
    return mat


def _rref(mat: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form in place; returns (matrix, pivot columns)."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((k for k in range(r, rows) if mat[k][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for k in range(rows):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat, pivots


def morphism_rank(f: Morphism) -> int:
    if f.target.dim == 0 or f.source.dim == 0:
        return 0
    _, pivots = _rref(_dense(f))
    return len(pivots)


def _nullspace(mat: list[list[Scalar]], ncols: int, field: Field) -> list[list[Scalar]]:
    """Nullspace basis vectors, one per free column, in ascending column order."""
    if not mat:
        return [
            [field.one if c == fc else field.zero for c in range(ncols)]
            for fc in range(ncols)
        ]
    red, pivots = _rref([row[:] for row in mat])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            if red[r][fc] != 0:
                vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def kernel(f: Morphism) -> tuple[GradedSpace, Morphism]:
    """Kernel space and its inclusion, computed block-wise per degree.

    Basis labels are synthesized as ker0, ker1, ... in the order the
    source degrees first occur, so equal inputs give identical output.
    """
    field = f.field
    blocks: dict[Degree, list[int]] = {}
    for j, d in enumerate(f.source.degrees):
        blocks.setdefault(d, []).append(j)
    rows_by_degree: dict[Degree, list[int]] = {}
    for i, d in enumerate(f.target.degrees):
        rows_by_degree.setdefault(d, []).append(i)
    dense = _dense(f)

    labels: list[str] = []
    degrees: list[Degree] = []
    kappa_entries: list[tuple[int, int, Scalar]] = []
    n = 0
    for d, src_cols in blocks.items():
        rows = rows_by_degree.get(d, [])
        block = [[dense[i][j] for j in src_cols] for i in rows]
        for vec in _nullspace(block, len(src_cols), field):
            labels.append(f"ker{n}")
            degrees.append(d)
            for local, coeff in enumerate(vec):
                if coeff != 0:
                    kappa_entries.append((src_cols[local], n, coeff))
            n += 1
    space = GradedSpace(f.source.rank, tuple(labels), tuple(degrees))
    kappa = Morphism.build(field, space, f.source, kappa_entries)
    if not (f @ kappa).is_zero():
        raise AssertionError("kernel postcondition violated: f after kappa != 0")
    if morphism_rank(kappa) + morphism_rank(f) != f.source.dim:
        raise AssertionError("kernel postcondition violated: rank deficit")
    return space, kappa


def solve_injective(a: Morphism, b: Morphism) -> Morphism:
    """Unique exact solution X of a @ X = b for injective a.

    Raises if a is not injective or the system is inconsistent.
    """
    if a.field != b.field or a.target != b.target:
        raise LinalgError("shape mismatch in solve")
    field = a.field
    na, nb = a.source.dim, b.source.dim
    aug = [row_a + row_b for row_a, row_b in zip(_dense(a), _dense(b))]
    if not aug:
        if any(col for col in b.cols):
            raise LinalgError("inconsistent system")
        return Morphism.zero(field, b.source, a.source)
    red, pivots = _rref(aug)
    if any(p >= na for p in pivots):
        raise LinalgError("inconsistent system: right-hand side not in the image")
    if len(pivots) != na:
        raise LinalgError("left factor is not injective")
    entries = []
    for r, pc in enumerate(pivots):
        for j in range(nb):
            v = red[r][na + j]
            if v != 0:
                entries.append((pc, j, v))
    return Morphism.build(field, b.source, a.source, entries)


def biproduct_maps(
    field: Field, left: GradedSpace, right: GradedSpace
) -> tuple[Morphism, Morphism, Morphism, Morphism]:
    """Injections and projections of ``direct_sum(left, right)``.

    Returns (iota_left, iota_right, proj_left, proj_right).
    """
    total = direct_sum(left, right)
    one = field.one
    iota_l = Morphism.build(field, left, total, [(j, j, one) for j in range(left.dim)])
    iota_r = Morphism.build(
        field, right, total, [(left.dim + j, j, one) for j in range(right.dim)]
    )
    proj_l = Morphism.build(field, total, left, [(j, j, one) for j in range(left.dim)])
    proj_r = Morphism.build(
        field, total, right, [(j, left.dim + j, one) for j in range(right.dim)]
    )
    return iota_l, iota_r, proj_l, proj_r

"""Space expressions with canonical ordered bases, linear maps between them,
and the multiplicative/additive structure: duals, tensor, par, products,
coproducts, internal hom, currying and the double-dual isomorphism.

Basis conventions (index = position in the canonical order):

* ``Base(d)``: ``0 .. d-1``.
* ``Dual(S)``: the dual basis, same labels and order as ``S``.
* ``Tensor``, ``Par``, ``Hom``: pairs ``(i, j)`` of child indices, ordered
  lexicographically, index ``i * dim(right) + j``. For ``Hom(S, T)`` the pair
  ``(t, u)`` is the matrix unit sending basis vector ``t`` of ``S`` to basis
  vector ``u`` of ``T``.
* ``Prod``, ``Coprod``: ``(0, i)`` for the left summand, then ``(1, j)``.
* ``SymPow(S, n)``: non-decreasing tuples of child indices, in
  ``itertools.combinations_with_replacement`` order. The tuple ``b`` stands
  for the symmetric tensor monomial ``e^b`` (the product of the ``e_i``).
* ``Bang(S, D)``: pairs ``(n, b)`` with ``b`` a basis tuple of ``SymPow(S, n)``,
  grade-major for ``n = 0 .. D``. ``BangNonUnit`` is the same without grade 0.
* ``FilteredTensor(L, R, D, low)``: pairs ``(i, j)`` of graded child indices
  whose grades sum to a value in ``[low, D]``; ordered by total grade, then
  lexicographically. Its own elements are graded by that total.

Ranks of multisets are computed in closed form, so index lookups never
enumerate a basis; very large iterated exponentials stay addressable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from .errors import DimensionError, ShapeError
from .exact_linalg import ONE, ZERO, Matrix, scalar


@lru_cache(maxsize=None)
def multichoose(d: int, n: int) -> int:
    """Number of multisets of size ``n`` drawn from ``d`` symbols."""
    if n == 0:
        return 1
    if d <= 0:
        return 0
    return comb(d + n - 1, n)


def multiset_rank(ms: Sequence[int], d: int) -> int:
    n = len(ms)
    r = 0
    prev = 0
    for t, v in enumerate(ms):
        rest = n - t - 1
        for u in range(prev, v):
            r += multichoose(d - u, rest)
        prev = v
    return r


def multiset_unrank(r: int, d: int, n: int) -> tuple:
    out = []
    u = 0
    for t in range(n):
        rest = n - t - 1
        while True:
            block = multichoose(d - u, rest)
            if r < block:
                break
            r -= block
            u += 1
        out.append(u)
    return tuple(out)


class Space:
    """Common interface of all space expressions."""

    def basis(self) -> Iterator:
        for i in range(self.dim):
            yield self.label(i)

    def _check_index(self, i: int):
        if not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range for {self} (dim {self.dim})")

    @property
    def graded(self) -> bool:
        return False

    def label_strings(self) -> list:
        return [self.label_str(i) for i in range(self.dim)]


class _Graded:
    """Mixin for spaces whose basis is sorted by a grade ``0 .. degree``."""

    @property
    def graded(self) -> bool:
        return True

    @cached_property
    def grade_starts(self) -> tuple:
        starts = [0]
        for c in self.grade_counts:
            starts.append(starts[-1] + c)
        return tuple(starts)

    @property
    def dim(self) -> int:
        return self.grade_starts[-1]

    def grade_of(self, i: int) -> int:
        self._check_index(i)
        starts = self.grade_starts
        g = 0
        while starts[g + 1] <= i:
            g += 1
        return g

    def grade_range(self, g: int) -> range:
        if g < 0 or g >= len(self.grade_counts):
            return range(0)
        return range(self.grade_starts[g], self.grade_starts[g + 1])


@dataclass(frozen=True)
class Base(Space):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"base dimension must be a non-negative integer, got {self.n!r}")

    @property
    def dim(self) -> int:
        return self.n

    def index(self, label) -> int:
        self._check_index(label)
        return label

    def label(self, i: int):
        self._check_index(i)
        return i

    def label_str(self, i: int) -> str:
        return f"e{self.label(i)}"

    def __str__(self):
        return f"base {self.n}"

    def to_json(self) -> dict:
        return {"kind": "base", "dim": self.n}


@dataclass(frozen=True)
class Dual(Space):
    of: Space

    @property
    def dim(self) -> int:
        return self.of.dim

    def index(self, label) -> int:
        return self.of.index(label)

    def label(self, i: int):
        return self.of.label(i)

    def label_str(self, i: int) -> str:
        return f"{self.of.label_str(i)}'"

    def __str__(self):
        return f"dual({self.of})"

    def to_json(self) -> dict:
        return {"kind": "dual", "of": self.of.to_json()}


class _Pair(Space):
    """Lexicographic pairs of child indices."""

    _sep = "?"

    @cached_property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    def index(self, label) -> int:
        i, j = label
        if not (0 <= i < self.left.dim and 0 <= j < self.right.dim):
            raise IndexError(f"label {label} out of range for {self}")
        return i * self.right.dim + j

    def label(self, k: int):
        self._check_index(k)
        return divmod(k, self.right.dim)

    def label_str(self, k: int) -> str:
        i, j = self.label(k)
        return f"({self.left.label_str(i)}{self._sep}{self.right.label_str(j)})"

    def __str__(self):
        return f"{self._kind}({self.left}, {self.right})"

    def to_json(self) -> dict:
        return {"kind": self._kind, "left": self.left.to_json(), "right": self.right.to_json()}


@dataclass(frozen=True)
class Tensor(_Pair):
    left: Space
    right: Space
    _kind = "tensor"
    _sep = "*"


@dataclass(frozen=True)
class Par(_Pair):
    left: Space
    right: Space
    _kind = "par"
    _sep = "|"


@dataclass(frozen=True)
class Hom(_Pair):
    left: Space
    right: Space
    _kind = "hom"
    _sep = "->"

    @property
    def source(self) -> Space:
        return self.left

    @property
    def target(self) -> Space:
        return self.right


class _Sum(Space):
    _tags = ("?", "?")

    @cached_property
    def dim(self) -> int:
        return self.left.dim + self.right.dim

    def index(self, label) -> int:
        side, i = label
        part = self.right if side else self.left
        if side not in (0, 1) or not 0 <= i < part.dim:
            raise IndexError(f"label {label} out of range for {self}")
        return i + (self.left.dim if side else 0)

    def label(self, k: int):
        self._check_index(k)
        n = self.left.dim
        return (0, k) if k < n else (1, k - n)

    def label_str(self, k: int) -> str:
        side, i = self.label(k)
        part = self.right if side else self.left
        return f"{self._tags[side]}({part.label_str(i)})"

    def __str__(self):
        return f"{self._kind}({self.left}, {self.right})"

    def to_json(self) -> dict:
        return {"kind": self._kind, "left": self.left.to_json(), "right": self.right.to_json()}


@dataclass(frozen=True)
class Prod(_Sum):
    left: Space
    right: Space
    _kind = "prod"
    _tags = ("fst", "snd")


@dataclass(frozen=True)
class Coprod(_Sum):
    left: Space
    right: Space
    _kind = "coprod"
    _tags = ("inl", "inr")


def _mono_str(space: Space, ms: tuple) -> str:
    if not ms:
        return "1"
    return ".".join(space.label_str(i) for i in ms)


@dataclass(frozen=True)
class SymPow(Space):
    of: Space
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("symmetric power needs n >= 0")

    @cached_property
    def dim(self) -> int:
        return multichoose(self.of.dim, self.n)

    def index(self, label) -> int:
        ms = tuple(label)
        d = self.of.dim
        if len(ms) != self.n or any(not 0 <= v < d for v in ms) or list(ms) != sorted(ms):
            raise IndexError(f"{label} is not a basis multiset of {self}")
        return multiset_rank(ms, d)

    def label(self, k: int) -> tuple:
        self._check_index(k)
        return multiset_unrank(k, self.of.dim, self.n)

    def basis(self):
        return combinations_with_replacement(range(self.of.dim), self.n)

    def label_str(self, k: int) -> str:
        return f"[{_mono_str(self.of, self.label(k))}]"

    def __str__(self):
        return f"sympow({self.of}, {self.n})"

    def to_json(self) -> dict:
        return {"kind": "sympow", "of": self.of.to_json(), "n": self.n}


class _BangLike(_Graded, Space):
    min_grade = 0

    @cached_property
    def grade_counts(self) -> tuple:
        d = self.of.dim
        return tuple(0 if n < self.min_grade else multichoose(d, n) for n in range(self.degree + 1))

    def sympow(self, n: int) -> SymPow:
        return SymPow(self.of, n)

    def index(self, label) -> int:
        n, ms = label
        if not self.min_grade <= n <= self.degree:
            raise IndexError(f"grade {n} outside {self}")
        return self.grade_starts[n] + SymPow(self.of, n).index(ms)

    def label(self, k: int) -> tuple:
        n = self.grade_of(k)
        return (n, multiset_unrank(k - self.grade_starts[n], self.of.dim, n))

    def basis(self):
        for n in range(self.min_grade, self.degree + 1):
            for ms in combinations_with_replacement(range(self.of.dim), n):
                yield (n, ms)

    def label_str(self, k: int) -> str:
        n, ms = self.label(k)
        return f"<{_mono_str(self.of, ms)}>"

    def __str__(self):
        return f"{self._kind}({self.of}, {self.degree})"

    def to_json(self) -> dict:
        return {"kind": self._kind, "of": self.of.to_json(), "degree": self.degree}


@dataclass(frozen=True)
class Bang(_BangLike):
    of: Space
    degree: int
    _kind = "bang"

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("truncation degree must be >= 0")


@dataclass(frozen=True)
class BangNonUnit(_BangLike):
    of: Space
    degree: int
    _kind = "bang1"
    min_grade = 1

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("truncation degree must be >= 0")


@dataclass(frozen=True)
class FilteredTensor(_Graded, Space):
    left: Space
    right: Space
    degree: int
    low: int = 0

    def __post_init__(self):
        for side in (self.left, self.right):
            if not side.graded:
                raise ShapeError(f"filtered tensor needs graded factors, got {side}")

    def _count(self, side: Space, g: int) -> int:
        counts = side.grade_counts
        return counts[g] if 0 <= g < len(counts) else 0

    @cached_property
    def grade_counts(self) -> tuple:
        out = []
        for g in range(self.degree + 1):
            if g < self.low:
                out.append(0)
                continue
            out.append(sum(self._count(self.left, a) * self._count(self.right, g - a) for a in range(g + 1)))
        return tuple(out)

    def index(self, label) -> int:
        i, j = label
        a = self.left.grade_of(i)
        b = self.right.grade_of(j)
        g = a + b
        if not self.low <= g <= self.degree:
            raise IndexError(f"pair {label} has grade {g}, outside [{self.low}, {self.degree}]")
        k = self.grade_starts[g]
        for a2 in range(a):
            k += self._count(self.left, a2) * self._count(self.right, g - a2)
        nb = self._count(self.right, b)
        return k + (i - self.left.grade_starts[a]) * nb + (j - self.right.grade_starts[b])

    def label(self, k: int) -> tuple:
        g = self.grade_of(k)
        r = k - self.grade_starts[g]
        for a in range(g + 1):
            na, nb = self._count(self.left, a), self._count(self.right, g - a)
            if r < na * nb:
                q, s = divmod(r, nb)
                return (self.left.grade_starts[a] + q, self.right.grade_starts[g - a] + s)
            r -= na * nb
        raise AssertionError("unreachable")

    def basis(self):
        for g in range(self.low, self.degree + 1):
            for a in range(g + 1):
                for i in self.left.grade_range(a):
                    for j in self.right.grade_range(g - a):
                        yield (i, j)

    def label_str(self, k: int) -> str:
        i, j = self.label(k)
        return f"({self.left.label_str(i)}*{self.right.label_str(j)})"

    def __str__(self):
        tail = f", {self.low}" if self.low else ""
        return f"ftensor({self.left}, {self.right}, {self.degree}{tail})"

    def to_json(self) -> dict:
        return {"kind": "ftensor", "left": self.left.to_json(), "right": self.right.to_json(),
                "degree": self.degree, "low": self.low}


def space_from_json(obj: dict) -> Space:
    kind = obj["kind"]
    if kind == "base":
        return Base(obj["dim"])
    if kind == "dual":
        return Dual(space_from_json(obj["of"]))
    pairs = {"tensor": Tensor, "par": Par, "hom": Hom, "prod": Prod, "coprod": Coprod}
    if kind in pairs:
        return pairs[kind](space_from_json(obj["left"]), space_from_json(obj["right"]))
    if kind == "sympow":
        return SymPow(space_from_json(obj["of"]), obj["n"])
    if kind == "bang":
        return Bang(space_from_json(obj["of"]), obj["degree"])
    if kind == "bang1":
        return BangNonUnit(space_from_json(obj["of"]), obj["degree"])
    if kind == "ftensor":
        return FilteredTensor(space_from_json(obj["left"]), space_from_json(obj["right"]),
                              obj["degree"], obj.get("low", 0))
    raise ValueError(f"unknown space kind {kind!r}")


UNIT = Base(1)


# ---------------------------------------------------------------- linear maps

class LinMap:
    """A linear map ``dom -> cod`` with matrix of shape ``dim(cod) x dim(dom)``."""

    __slots__ = ("dom", "cod", "matrix")

    def __init__(self, dom: Space, cod: Space, matrix: Matrix):
        if matrix.shape != (cod.dim, dom.dim):
            raise DimensionError(
                f"matrix {matrix.rows}x{matrix.cols} does not fit {dom} -> {cod} "
                f"({cod.dim}x{dom.dim})")
        self.dom = dom
        self.cod = cod
        self.matrix = matrix

    @classmethod
    def identity(cls, s: Space) -> LinMap:
        return cls(s, s, Matrix.identity(s.dim))

    @classmethod
    def zero(cls, dom: Space, cod: Space) -> LinMap:
        return cls(dom, cod, Matrix.zeros(cod.dim, dom.dim))

    @classmethod
    def from_rows(cls, dom: Space, cod: Space, rows) -> LinMap:
        return cls(dom, cod, Matrix.from_rows(rows, dom.dim))

    @classmethod
    def from_columns(cls, dom: Space, cod: Space, columns) -> LinMap:
        """Build from one sparse ``{cod_index: value}`` dict per domain index."""
        return cls(dom, cod, Matrix.from_sparse_columns(cod.dim, dom.dim, dict(enumerate(columns))))

    def __repr__(self):
        return f"LinMap({self.dom} -> {self.cod}, {self.matrix!r})"

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.dom, self.cod, self.matrix))

    def compose(self, other: LinMap) -> LinMap:
        """``self`` after ``other``."""
        if other.cod != self.dom:
            raise ShapeError(f"cannot compose: inner codomain {other.cod} vs outer domain {self.dom}")
        return LinMap(other.dom, self.cod, self.matrix @ other.matrix)

    def __matmul__(self, other):
        if isinstance(other, LinMap):
            return self.compose(other)
        return NotImplemented

    def __call__(self, vector: Sequence) -> list:
        if len(vector) != self.dom.dim:
            raise DimensionError(f"vector of length {len(vector)} given to a map on {self.dom}")
        return self.matrix.apply(vector)

    def _same_type(self, other: LinMap):
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise ShapeError(f"maps {self.dom} -> {self.cod} and {other.dom} -> {other.cod} differ in type")

    def __add__(self, other: LinMap) -> LinMap:
        self._same_type(other)
        return LinMap(self.dom, self.cod, self.matrix + other.matrix)

    def __sub__(self, other: LinMap) -> LinMap:
        self._same_type(other)
        return LinMap(self.dom, self.cod, self.matrix - other.matrix)

    def scale(self, c) -> LinMap:
        return LinMap(self.dom, self.cod, self.matrix.scale(c))

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()

    def inverse(self) -> LinMap:
        return LinMap(self.cod, self.dom, self.matrix.inverse())

    def column(self, j: int) -> dict:
        return self.matrix.sparse_column(j)

    def apply_sparse(self, vec: dict) -> dict:
        out: dict = {}
        m = self.matrix
        for j, c in vec.items():
            for i, v in m.sparse_column(j).items():
                out[i] = out.get(i, ZERO) + c * v
        return {i: v for i, v in out.items() if v}

    def retype(self, dom: Space, cod: Space) -> LinMap:
        """The same matrix viewed between two other spaces of equal dimensions."""
        return LinMap(dom, cod, self.matrix)


def _check_map(f, name="map"):
    if not isinstance(f, LinMap):
        raise TypeError(f"{name} must be a LinMap, got {type(f).__name__}")


def _permutation(dom: Space, cod: Space, target_of) -> LinMap:
    """Map sending basis vector ``k`` of ``dom`` to basis vector ``target_of(k)``."""
    return LinMap.from_columns(dom, cod, [{target_of(k): ONE} for k in range(dom.dim)])


# ----------------------------------------------------------------- duality

def dual_space(s: Space) -> Dual:
    return Dual(s)


def transpose(f: LinMap) -> LinMap:
    _check_map(f)
    return LinMap(Dual(f.cod), Dual(f.dom), f.matrix.T)


def double_dual_ev(s: Space) -> LinMap:
    """``x |-> (l |-> l(x))``; the identity matrix on canonical bases."""
    return LinMap(s, Dual(Dual(s)), Matrix.identity(s.dim))


# ---------------------------------------------------------------- tensor/par

def tensor_space(s: Space, t: Space) -> Tensor:
    return Tensor(s, t)


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    _check_map(f)
    _check_map(g)
    return LinMap(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), f.matrix.kron(g.matrix))


def associator(s: Space, t: Space, u: Space) -> LinMap:
    """``(s (x) t) (x) u -> s (x) (t (x) u)``."""
    dom = Tensor(Tensor(s, t), u)
    cod = Tensor(s, Tensor(t, u))
    dt, du = t.dim, u.dim

    def target(k):
        st, c = divmod(k, du)
        a, b = divmod(st, dt)
        return a * (dt * du) + b * du + c
    return _permutation(dom, cod, target)


def symmetry(s: Space, t: Space) -> LinMap:
    """``s (x) t -> t (x) s``."""
    ds, dt = s.dim, t.dim
    return _permutation(Tensor(s, t), Tensor(t, s), lambda k: (k % dt) * ds + k // dt)


def left_unitor(s: Space) -> LinMap:
    return LinMap(Tensor(UNIT, s), s, Matrix.identity(s.dim))


def right_unitor(s: Space) -> LinMap:
    return LinMap(Tensor(s, UNIT), s, Matrix.identity(s.dim))


def par_space(s: Space, t: Space) -> Par:
    return Par(s, t)


def par_to_tensor(s: Space, t: Space) -> LinMap:
    """The basis element ``(i, j)`` of the par is the bilinear form on the duals
    evaluating at ``(e_i*, e_j*)``: exactly ``e_i (x) e_j``."""
    return LinMap(Par(s, t), Tensor(s, t), Matrix.identity(s.dim * t.dim))


def par_map(f: LinMap, g: LinMap) -> LinMap:
    _check_map(f)
    _check_map(g)
    return LinMap(Par(f.dom, g.dom), Par(f.cod, g.cod), f.matrix.kron(g.matrix))


# ------------------------------------------------------- products/coproducts

def prod_space(s: Space, t: Space) -> Prod:
    return Prod(s, t)


def coprod_space(s: Space, t: Space) -> Coprod:
    return Coprod(s, t)


def _sum_type(kind):
    return {"prod": Prod, "coprod": Coprod}[kind]


def injection(s: Space, t: Space, side: int, kind: str = "coprod") -> LinMap:
    total = _sum_type(kind)(s, t)
    part = t if side else s
    off = s.dim if side else 0
    return _permutation(part, total, lambda k: k + off)


def projection(s: Space, t: Space, side: int, kind: str = "prod") -> LinMap:
    total = _sum_type(kind)(s, t)
    part = t if side else s
    off = s.dim if side else 0
    cols = [{} for _ in range(total.dim)]
    for k in range(part.dim):
        cols[k + off] = {k: ONE}
    return LinMap.from_columns(total, part, cols)


def pairing(f: LinMap, g: LinMap) -> LinMap:
    """``<f, g> : A -> B x C``."""
    if f.dom != g.dom:
        raise ShapeError(f"pairing needs a common domain, got {f.dom} and {g.dom}")
    rows = f.matrix.to_rows() + g.matrix.to_rows()
    return LinMap(f.dom, Prod(f.cod, g.cod), Matrix.from_rows(rows, f.dom.dim))


def copairing(f: LinMap, g: LinMap) -> LinMap:
    """``[f, g] : A + B -> C``."""
    if f.cod != g.cod:
        raise ShapeError(f"copairing needs a common codomain, got {f.cod} and {g.cod}")
    cols = [f.column(j) for j in range(f.dom.dim)] + [g.column(j) for j in range(g.dom.dim)]
    return LinMap.from_columns(Coprod(f.dom, g.dom), f.cod, cols)


def prod_map(f: LinMap, g: LinMap) -> LinMap:
    cols = [f.column(j) for j in range(f.dom.dim)]
    off = f.cod.dim
    cols += [{i + off: v for i, v in g.column(j).items()} for j in range(g.dom.dim)]
    return LinMap.from_columns(Prod(f.dom, g.dom), Prod(f.cod, g.cod), cols)


def diagonal(s: Space) -> LinMap:
    return pairing(LinMap.identity(s), LinMap.identity(s))


def dual_of_prod(s: Space, t: Space) -> LinMap:
    """``(s x t)' -> s' + t'``: a form restricts to its two components."""
    return LinMap(Dual(Prod(s, t)), Coprod(Dual(s), Dual(t)), Matrix.identity(s.dim + t.dim))


def dual_of_coprod(s: Space, t: Space) -> LinMap:
    return LinMap(Dual(Coprod(s, t)), Prod(Dual(s), Dual(t)), Matrix.identity(s.dim + t.dim))


# ----------------------------------------------------------------- closure

def hom_space(s: Space, t: Space) -> Hom:
    return Hom(s, t)


def map_to_vector(f: LinMap) -> list:
    """Coordinates of ``f`` in ``Hom(dom, cod)``."""
    du = f.cod.dim
    return [f.matrix[u, t] for t in range(f.dom.dim) for u in range(du)]


def vector_to_map(h: Hom, v: Sequence) -> LinMap:
    ds, dt = h.left.dim, h.right.dim
    if len(v) != ds * dt:
        raise DimensionError(f"vector of length {len(v)} for {h}")
    return LinMap(h.left, h.right, Matrix(dt, ds, [v[t * dt + u] for u in range(dt) for t in range(ds)]))


def curry(f: LinMap) -> LinMap:
    """``f : s (x) t -> u`` becomes ``s -> Hom(t, u)``."""
    _check_map(f)
    if not isinstance(f.dom, Tensor):
        raise ShapeError(f"curry needs a map out of a tensor, got domain {f.dom}")
    s, t, u = f.dom.left, f.dom.right, f.cod
    dt, du = t.dim, u.dim
    m = f.matrix
    rows = [[m[uu, ss * dt + tt] for ss in range(s.dim)] for tt in range(dt) for uu in range(du)]
    return LinMap(s, Hom(t, u), Matrix(dt * du, s.dim, [x for r in rows for x in r]))


def uncurry(g: LinMap) -> LinMap:
    """``g : s -> Hom(t, u)`` becomes ``s (x) t -> u``."""
    _check_map(g)
    if not isinstance(g.cod, Hom):
        raise ShapeError(f"uncurry needs a map into a hom space, got codomain {g.cod}")
    s, t, u = g.dom, g.cod.left, g.cod.right
    dt, du = t.dim, u.dim
    m = g.matrix
    entries = [m[tt * du + uu, ss] for uu in range(du) for ss in range(s.dim) for tt in range(dt)]
    return LinMap(Tensor(s, t), u, Matrix(du, s.dim * dt, entries))


def evaluation(s: Space, t: Space) -> LinMap:
    """``Hom(s, t) (x) s -> t``."""
    return uncurry(LinMap.identity(Hom(s, t)))


def hom_dual_decompose(phi: Sequence, s: Space, t: Space) -> list:
    """Write a functional on ``Hom(s, t)`` as ``sum_i l_i(f(x_i))``.

    Returns pairs ``(x_i, l_i)`` with ``x_i`` in ``s`` and ``l_i`` a functional
    on ``t``; at most ``min(dim s, dim t)`` terms (a rank factorisation).
    """
    ds, dt = s.dim, t.dim
    if len(phi) != ds * dt:
        raise DimensionError(f"functional of length {len(phi)} on {Hom(s, t)}")
    coef = Matrix(ds, dt, phi)
    rows, pivots = coef.rref()
    return [(coef.column(p), list(r)) for r, p in zip(rows, pivots)]


def hom_dual_reconstruct(pairs: list, f: LinMap) -> object:
    """Evaluate ``sum_i l_i(f(x_i))``."""
    total = ZERO
    for x, l in pairs:
        fx = f(x)
        total += sum((a * b for a, b in zip(l, fx)), ZERO)
    return total


def bidual_map(s: Space) -> LinMap:
    """``s -> Hom(Hom(s, 1), 1)``, curried from evaluation after symmetry."""
    ev = evaluation(s, UNIT)
    return curry(ev @ symmetry(s, Hom(s, UNIT)))


def star_autonomy_check(s: Space) -> bool:
    return bidual_map(s).is_invertible() and double_dual_ev(s).is_invertible()


def as_vector(values: Sequence, s: Space) -> list:
    if len(values) != s.dim:
        raise DimensionError(f"vector of length {len(values)} for {s} (dim {s.dim})")
    return [scalar(v) for v in values]

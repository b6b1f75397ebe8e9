"""Cartan data and root systems for the simple Lie algebra families A-D and G2.

Weights are plain tuples of Dynkin labels (integer coordinates with respect
to the fundamental weights).  Each root additionally carries its coordinates
over the simple-root basis, so root-lattice membership, dominance gaps and
reflection strings reduce to integer checks.  Lattice data stays in integer
arithmetic and the quadratic form on weight space is exact
(`fractions.Fraction`); no floating point originates in this module.

Fixed conventions, asserted throughout the test suite:

* ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
  simple coroot, so the Dynkin labels of ``alpha_j`` form column ``j``.
* Long roots are normalized to squared length 2.
* B puts its short simple root last (B2: ``<alpha_1, alpha_2^vee> = -2``),
  C puts its long simple root last, and G2 leads with the long root
  (``<alpha_1, alpha_2^vee> = -3``).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Weight = tuple[int, ...]

_RANK_CAP = 8
_FAMILIES = ("A", "B", "C", "D", "G")


@dataclass(frozen=True)
class AlgebraId:
    """Family letter plus rank, e.g. A2 or G2."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(
                f"unsupported family {self.family!r}: expected one of {', '.join(_FAMILIES)}"
            )
        if not isinstance(self.rank, int) or isinstance(self.rank, bool) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.rank > _RANK_CAP:
            raise ValueError(f"rank {self.rank} exceeds the desk-scale cap of {_RANK_CAP}")
        if self.family == "G" and self.rank != 2:
            raise ValueError("the G family only exists at rank 2")
        if self.family in ("B", "C") and self.rank < 2:
            raise ValueError(f"family {self.family} starts at rank 2")
        if self.family == "D" and self.rank < 3:
            raise ValueError("family D starts at rank 3")

    @classmethod
    def parse(cls, name: str) -> "AlgebraId":
        text = str(name).strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse algebra name {name!r}; expected e.g. 'A2' or 'g2'")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root in both coordinate systems: Dynkin labels and simple-root basis."""

    weight_coords: Weight
    root_coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.root_coords)


@dataclass(frozen=True)
class GammaSequence:
    """Positive roots in the angular order walked by the polytope formulas."""

    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


@dataclass(frozen=True)
class RootSystem:
    """Static data of one simple Lie algebra.

    Fields
    ------
    id : AlgebraId
    cartan : rank x rank integer matrix, cartan[i][j] = <alpha_j, alpha_i^vee>
    positive_roots : all positive roots, sorted by height then by coordinates
        (the first ``rank`` entries are the simple roots alpha_1..alpha_r)
    quadratic_form : exact Gram matrix of the fundamental weights
    root_lengths_sq : squared length of each simple root
    weyl_vector : rho = (1, ..., 1)
    """

    id: AlgebraId
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    quadratic_form: tuple[tuple[Fraction, ...], ...]
    root_lengths_sq: tuple[Fraction, ...]
    weyl_vector: Weight

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def name(self) -> str:
        return str(self.id)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @cached_property
    def _root_by_coords(self) -> dict:
        return {root.root_coords: root for root in self.positive_roots}

    @cached_property
    def _inverse_and_det(self):
        return _invert(self.cartan)

    @cached_property
    def cartan_det(self) -> int:
        det = self._inverse_and_det[1]
        if det.denominator != 1 or det <= 0:
            raise AssertionError("Cartan determinant must be a positive integer")
        return int(det)

    @cached_property
    def _cartan_adjugate(self) -> tuple[tuple[int, ...], ...]:
        # integer adjugate keeps coset and dominance checks out of Fraction land
        inverse = self._inverse_and_det[0]
        det = self.cartan_det
        rows = []
        for row in inverse:
            ints = []
            for x in row:
                v = x * det
                if v.denominator != 1:
                    raise AssertionError("adjugate entry is not integral")
                ints.append(int(v))
            rows.append(tuple(ints))
        return tuple(rows)

    @cached_property
    def _gram_float(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(float(x) for x in row) for row in self.quadratic_form)

    @cached_property
    def _coroot_cache(self) -> dict:
        return {}

    def root(self, root_coords) -> Root:
        """The positive root with the given simple-root coordinates."""
        try:
            return self._root_by_coords[tuple(root_coords)]
        except KeyError:
            raise ValueError(
                f"{tuple(root_coords)} is not a positive root of {self.name}"
            ) from None

    def is_root(self, root: Root) -> bool:
        """True when ``root`` (or its negative) matches a stored positive root."""
        pairs = (
            (root.root_coords, root.weight_coords),
            (tuple(-c for c in root.root_coords), tuple(-x for x in root.weight_coords)),
        )
        for coords, wc in pairs:
            stored = self._root_by_coords.get(coords)
            if stored is not None and stored.weight_coords == tuple(wc):
                return True
        return False

    def weight_of_root_coords(self, coords) -> Weight:
        A = self.cartan
        r = self.rank
        return tuple(sum(A[i][j] * coords[j] for j in range(r)) for i in range(r))

    def root_coords_of_weight(self, weight):
        """Simple-root coordinates of a weight-lattice vector, or None when the
        vector is not in the root lattice."""
        det = self.cartan_det
        adj = self._cartan_adjugate
        r = self.rank
        out = []
        for i in range(r):
            v = sum(adj[i][j] * weight[j] for j in range(r))
            if v % det:
                return None
            out.append(v // det)
        return tuple(out)

    def inner(self, mu, nu) -> Fraction:
        """Exact inner product of two vectors given in Dynkin labels."""
        r = self.rank
        if len(mu) != r or len(nu) != r:
            raise ValueError("weight length mismatch")
        G = self.quadratic_form
        total = Fraction(0)
        for i in range(r):
            mi = mu[i]
            if mi:
                row = G[i]
                acc = Fraction(0)
                for j in range(r):
                    if nu[j]:
                        acc += row[j] * nu[j]
                total += mi * acc
        return total

    def inner_float(self, mu, nu) -> float:
        r = self.rank
        G = self._gram_float
        total = 0.0
        for i in range(r):
            mi = mu[i]
            if mi:
                row = G[i]
                acc = 0.0
                for j in range(r):
                    acc += row[j] * nu[j]
                total += mi * acc
        return total

    def coroot_labels(self, root: Root) -> tuple[int, ...]:
        """Pairings <Lambda^j, root^vee> for j = 1..rank; requires a positive root."""
        cached = self._coroot_cache.get(root.root_coords)
        if cached is not None:
            stored = self._root_by_coords[root.root_coords]
            if stored != root:
                raise ValueError(f"inconsistent root data for {root}")
            return cached
        stored = self.root(root.root_coords)
        if stored != root:
            raise ValueError(f"inconsistent root data for {root}")
        den = self.inner(root.weight_coords, root.weight_coords)
        labels = []
        for j in range(self.rank):
            unit = tuple(int(k == j) for k in range(self.rank))
            val = 2 * self.inner(unit, root.weight_coords) / den
            if val.denominator != 1:
                raise AssertionError("coroot pairing must be integral")
            labels.append(int(val))
        out = tuple(labels)
        self._coroot_cache[root.root_coords] = out
        return out


def _invert(matrix):
    """Exact inverse and determinant of a small integer matrix."""
    n = len(matrix)
    work = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            det = -det
        scale = work[col][col]
        det *= scale
        work[col] = [x / scale for x in work[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv), det


def _cartan_matrix(aid: AlgebraId) -> tuple[tuple[int, ...], ...]:
    r = aid.rank
    A = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    if aid.family == "A":
        for i in range(r - 1):
            A[i][i + 1] = A[i + 1][i] = -1
    elif aid.family == "B":
        for i in range(r - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[r - 1][r - 2] = -2
        A[r - 2][r - 1] = -1
    elif aid.family == "C":
        for i in range(r - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[r - 1][r - 2] = -1
        A[r - 2][r - 1] = -2
    elif aid.family == "D":
        for i in range(r - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[r - 3][r - 1] = A[r - 1][r - 3] = -1
    else:  # G2
        A[0][1] = -1
        A[1][0] = -3
    return tuple(tuple(row) for row in A)


def _half_norms(aid: AlgebraId) -> tuple[Fraction, ...]:
    """(alpha_i, alpha_i) / 2 per simple root, long roots normalized to 2."""
    r = aid.rank
    one = Fraction(1)
    if aid.family in ("A", "D"):
        return (one,) * r
    if aid.family == "B":
        return (one,) * (r - 1) + (Fraction(1, 2),)
    if aid.family == "C":
        return (Fraction(1, 2),) * (r - 1) + (one,)
    return (one, Fraction(1, 3))


def _positive_roots(cartan) -> tuple[Root, ...]:
    """Root-string closure upward from the simple roots."""
    rank = len(cartan)

    def labels_of(c):
        return tuple(sum(cartan[i][j] * c[j] for j in range(rank)) for i in range(rank))

    units = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    known = set(units)
    level = list(units)
    while level:
        nxt = []
        for c in level:
            labels = labels_of(c)
            for j in range(rank):
                if c == units[j]:
                    continue
                p = 0
                probe = tuple(x - int(k == j) for k, x in enumerate(c))
                while probe in known:
                    p += 1
                    probe = tuple(x - int(k == j) for k, x in enumerate(probe))
                if p - labels[j] >= 1:
                    up = tuple(x + int(k == j) for k, x in enumerate(c))
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        level = nxt
    ordered = sorted(known, key=lambda c: (sum(c), tuple(-x for x in c)))
    return tuple(Root(labels_of(c), c) for c in ordered)


def build_root_system(algebra) -> RootSystem:
    """All static data of a simple Lie algebra.

    ``algebra`` may be an :class:`AlgebraId` or a name such as ``"A2"``
    (case-insensitive).  Positive roots come from root-string closure over
    the simple roots; the quadratic form solves G * cartan = diag of the
    half squared lengths, which pins (Lambda^i, Lambda^j) exactly.
    """
    aid = algebra if isinstance(algebra, AlgebraId) else AlgebraId.parse(algebra)
    cartan = _cartan_matrix(aid)
    halves = _half_norms(aid)
    r = aid.rank
    for i in range(r):
        for j in range(r):
            if halves[i] * cartan[i][j] != halves[j] * cartan[j][i]:
                raise AssertionError("length table inconsistent with the Cartan matrix")
    inverse, _det = _invert(cartan)
    gram = tuple(tuple(halves[i] * inverse[i][j] for j in range(r)) for i in range(r))
    for i in range(r):
        for j in range(i):
            if gram[i][j] != gram[j][i]:
                raise AssertionError("quadratic form is not symmetric")
    return RootSystem(
        id=aid,
        cartan=cartan,
        positive_roots=_positive_roots(cartan),
        quadratic_form=gram,
        root_lengths_sq=tuple(2 * h for h in halves),
        weyl_vector=(1,) * r,
    )


def pairing(rs: RootSystem, weight, root: Root) -> int:
    """Integer coroot pairing of a weight against a root: twice their inner
    product divided by the root's squared length."""
    if len(weight) != rs.rank:
        raise ValueError(f"weight {tuple(weight)} has wrong length for {rs.name}")
    if not rs.is_root(root):
        raise ValueError(f"{root} is not a root of {rs.name}")
    num = rs.inner(weight, root.weight_coords)
    den = rs.inner(root.weight_coords, root.weight_coords)
    val = 2 * num / den
    if val.denominator != 1:
        raise AssertionError("coroot pairing must be integral on the weight lattice")
    return int(val)


# Angular orderings of the positive roots, in simple-root coordinates.
_GAMMA_COORDS = {
    ("A", 1): ((1,),),
    ("A", 2): ((1, 0), (1, 1), (0, 1)),
    ("B", 2): ((1, 0), (1, 1), (1, 2), (0, 1)),
    ("G", 2): ((1, 0), (1, 1), (2, 3), (1, 2), (1, 3), (0, 1)),
    ("A", 3): ((1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1)),
}


def gamma_sequence(rs: RootSystem) -> GammaSequence:
    """The ordered walk of all positive roots used by the polytope-sum
    operator formulas; defined for A1, A2, B2, G2 and A3."""
    coords = _GAMMA_COORDS.get((rs.id.family, rs.rank))
    if coords is None:
        raise ValueError(
            f"no gamma sequence defined for {rs.name} (available: A1, A2, B2, G2, A3)"
        )
    roots = tuple(rs.root(c) for c in coords)
    if len(roots) != len(rs.positive_roots):
        raise AssertionError("gamma sequence must enumerate all positive roots")
    return GammaSequence(roots)

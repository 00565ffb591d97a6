"""Groups, root data, Weyl groups, and orbit classification.

Conventions. Points of the dual Cartan are written in weight coordinates
(vectors c of length n for SU(n)/Sp(n), m for SO(2m)/SO(2m+1)); the chamber
pairing of a weight against a root is the euclidean dot product of their
coordinate vectors. On matrices this equals ``scale * Re Tr(A B)`` with the
per-family scale stored on the RootDatum (for SU the initial-point map and
the root map carry opposite signs, which is what makes the simple-root
matrices diag(i,-i,0), diag(0,i,-i) pair positively against dominant
initial points).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ._families import Family, get_family
from .errors import AllWeightsZero, UnsupportedGroup
from .quaternion import QuaternionMatrix

WALL_TOL = 1e-12


@dataclass(frozen=True)
class GroupSpec:
    """A compact classical group SU(n), Sp(n), or SO(n) (n in {3,4})."""

    family: str
    n: int
    rank: int

    @property
    def name(self) -> str:
        pretty = {"su": "SU", "sp": "Sp", "so": "SO"}[self.family]
        return f"{pretty}({self.n})"

    @property
    def adapter(self) -> Family:
        return get_family(self.family, self.n)


def build_group(family: str, n: int) -> GroupSpec:
    """Validate (family, n) and return the group descriptor.

    Raises UnsupportedGroup for SO(n) outside {3, 4} or any n < 2.
    """
    fam = get_family(family, int(n))
    return GroupSpec(fam.family, fam.n, fam.rank)


@dataclass(frozen=True)
class RootDatum:
    """Simple/positive roots, root vectors and Cartan vectors of a group.

    Root matrices live in the dual Cartan of the working realization
    (anti-hermitian diagonals for SU, real antisymmetric blocks for SO,
    split-embedded diagonals for Sp). Root vectors are given in the matrix
    realization in which charts are triangular (the defining basis for SU,
    the vector basis for SO, the complex 2n-dim split embedding for Sp).
    """

    spec: GroupSpec
    simple_roots: tuple
    simple_root_labels: tuple
    positive_roots: tuple
    positive_root_labels: tuple
    simple_root_vectors: tuple      # coordinate vectors, one per simple root
    positive_root_vectors: tuple
    root_vectors_plus: tuple        # X_alpha per positive root
    root_vectors_minus: tuple       # X_{-alpha}
    cartan_vectors: tuple           # H_alpha = [X_alpha, X_{-alpha}]
    bilinear_form_scale: float

    def pairing(self, a, b) -> float:
        """Chamber bilinear form on dual-Cartan matrices."""
        return float(self.bilinear_form_scale
                     * np.trace(np.asarray(a) @ np.asarray(b)).real)


def _root_vector_minus(fam: Family, beta: np.ndarray) -> np.ndarray:
    """Lowering generator of root ``beta`` in the split realization."""
    w = fam.slot_weights
    s = fam.slots
    positions = [(p, q) for p in range(s) for q in range(s)
                 if p != q and np.allclose(w[p] - w[q], -beta)]
    if not positions:
        raise ValueError(f"no root space for {beta}")
    lead = min(positions)
    x = np.zeros((s, s), dtype=complex)
    x[lead] = 1.0
    if len(positions) == 1:
        return x
    mirror = [pq for pq in positions if pq != lead][0]
    if fam.family == "sp":
        return fam._sp_project(x + 0.0, lead)
    if fam.family == "so":
        x[mirror] = -1.0
        return x
    return x


def root_datum(spec: GroupSpec) -> RootDatum:
    """Root system data for the group: matrices, vectors, Cartan elements."""
    fam = spec.adapter
    simple_m, plus, minus, cartan, pos_m = [], [], [], [], []
    for info in fam.simple_roots:
        simple_m.append(fam.root_matrix(info.as_array()))
    for info in fam.positive_roots:
        pos_m.append(fam.root_matrix(info.as_array()))
        xm = _root_vector_minus(fam, info.as_array())
        xp = xm.conj().T
        if fam.family == "so":
            xm = fam.working_from_split(xm)
            xp = fam.working_from_split(xp)
        plus.append(xp)
        minus.append(xm)
        cartan.append(xp @ xm - xm @ xp)
    return RootDatum(
        spec=spec,
        simple_roots=tuple(simple_m),
        simple_root_labels=tuple(i.label for i in fam.simple_roots),
        positive_roots=tuple(pos_m),
        positive_root_labels=tuple(i.label for i in fam.positive_roots),
        simple_root_vectors=tuple(i.as_array() for i in fam.simple_roots),
        positive_root_vectors=tuple(i.as_array() for i in fam.positive_roots),
        root_vectors_plus=tuple(plus),
        root_vectors_minus=tuple(minus),
        cartan_vectors=tuple(cartan),
        bilinear_form_scale=fam.pairing_scale,
    )


# ---------------------------------------------------------------------------
# Weyl groups


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word, matrix representative, action."""

    word: tuple
    matrix: object                 # ndarray, or QuaternionMatrix for Sp
    action: np.ndarray             # matrix acting on weight coordinates
    length: int

    def action_key(self):
        return _action_key(self.action)


def _action_key(action: np.ndarray):
    return tuple(np.round(np.asarray(action), 6).ravel().tolist())


@dataclass(frozen=True)
class WeylGroup:
    spec: GroupSpec
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def find(self, action: np.ndarray) -> WeylElement:
        key = _action_key(action)
        for el in self.elements:
            if el.action_key() == key:
                return el
        raise KeyError("action is not a Weyl element")

    def element_by_word(self, word) -> WeylElement:
        fam = self.spec.adapter
        act = np.eye(fam.rankdim)
        for k in word:
            act = self.generators[k].action @ act
        return self.find(act)


def weyl_group(spec: GroupSpec) -> WeylGroup:
    """Enumerate the Weyl group by closure over the simple reflections."""
    fam = spec.adapter
    gen_m = fam.weyl_generators()
    gens = []
    for k, gm in enumerate(gen_m):
        gens.append(WeylElement(word=(k,), matrix=gm,
                                action=fam.weyl_action_on_coords(gm),
                                length=1))
    ident_mat = (QuaternionMatrix.eye(fam.n) if fam.quaternionic
                 else np.eye(fam.n, dtype=complex))
    ident = WeylElement(word=(), matrix=ident_mat,
                        action=np.eye(fam.rankdim), length=0)
    seen = {ident.action_key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for el in frontier:
            for k, g in enumerate(gens):
                act = g.action @ el.action
                key = _action_key(act)
                if key in seen:
                    continue
                mat = el.matrix @ g.matrix
                new = WeylElement(word=el.word + (k,), matrix=mat,
                                  action=act, length=el.length + 1)
                seen[key] = new
                nxt.append(new)
        frontier = nxt
    elements = tuple(sorted(seen.values(), key=lambda e: (e.length, e.word)))
    return WeylGroup(spec=spec, elements=elements, generators=tuple(gens))


# ---------------------------------------------------------------------------
# initial points and classification


@dataclass(frozen=True)
class InitialPoint:
    """A dominant weight: chamber weights and the matrix it pins down."""

    spec: GroupSpec
    weights: tuple
    coords: tuple = field(default=())

    def __post_init__(self):
        fam = self.spec.adapter
        if len(self.weights) != fam.rank:
            raise ValueError(
                f"{self.spec.name} needs {fam.rank} weights, "
                f"got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative "
                             "(closed positive Weyl chamber)")
        object.__setattr__(self, "coords",
                           tuple(fam.initial_coords(self.weights)))

    @property
    def matrix(self):
        """mu0 in the working realization (anti-hermitian, correct form)."""
        return self.spec.adapter.initial_matrix(self.weights)

    @property
    def matrix_native(self):
        """For Sp: the quaternionic i*diag(c) realization of mu0."""
        fam = self.spec.adapter
        if fam.quaternionic:
            return fam.weight_matrix_native(np.asarray(self.coords))
        return self.matrix


def initial_point(spec: GroupSpec, weights) -> InitialPoint:
    return InitialPoint(spec, tuple(float(w) for w in weights))


class OrbitKind(str, Enum):
    GENERIC = "generic"
    DEGENERATE = "degenerate"
    MAXIMAL_DEGENERATE = "maximal-degenerate"


@dataclass(frozen=True)
class OrbitClass:
    kind: OrbitKind
    vanishing_walls: tuple          # labels of simple roots on which mu0 sits
    real_dimension: int
    stabilizer: str

    @property
    def is_generic(self) -> bool:
        return self.kind is OrbitKind.GENERIC


def classify_initial_point(spec: GroupSpec, point: InitialPoint) -> OrbitClass:
    """Chamber position of mu0: kind, walls, orbit dimension, stabilizer.

    Emits GENERIC or DEGENERATE; whether a degenerate orbit is maximally so
    (no intermediate subgroup, hence no bundle structure) is decided by
    ``orbit.fibration``, which raises MaximalDegenerate in that case.
    """
    fam = spec.adapter
    weights = np.asarray(point.weights, dtype=float)
    if np.all(np.abs(weights) < WALL_TOL):
        raise AllWeightsZero("all weights vanish; the orbit is a point")
    walls = tuple(info.label for info, w in zip(fam.simple_roots, weights)
                  if abs(w) < WALL_TOL)
    c = np.asarray(point.coords)
    nonzero = sum(1 for info in fam.positive_roots
                  if abs(float(c @ info.as_array())) >= WALL_TOL)
    kind = OrbitKind.GENERIC if not walls else OrbitKind.DEGENERATE
    return OrbitClass(
        kind=kind,
        vanishing_walls=walls,
        real_dimension=2 * nonzero,
        stabilizer=fam.stabilizer_description(c),
    )

"""Per-family Lie data: root systems, split bases, charts, Weyl generators.

Each compact family (SU(n), Sp(n), SO(3), SO(4)) is described by an adapter
that fixes, in one place, the conventions the numerical layer relies on:

* weight coordinates: elements of the dual Cartan are vectors c in R^rankdim;
  ``weight_matrix`` maps them to matrices, roots have integer coordinate
  vectors and their own ``root_matrix`` map. The chamber pairing is the
  euclidean dot product of the coordinate vectors, which matches the
  per-family trace form on the stored matrices.
* a "split" matrix realization in which the Borel subgroup is upper
  triangular, charts Z are lower unitriangular, and the Iwasawa A-part is a
  positive diagonal. For SU this is the defining representation; for SO it
  is an isotropic basis reached by a fixed unitary T; for Sp it is the
  complex 2n-dimensional embedding of quaternionic matrices.
* chart coordinates in a fixed order (one complex coordinate per positive
  root; for Sp the two complex components of each subdiagonal quaternion
  carry the short roots and the long roots come last).
* the potential functionals: linear maps on log of the Iwasawa A-diagonal
  whose values restrict to ln(1+|t|^2) exactly on the matching simple-root
  two-cycle and to 0 on the others. They are calibrated at build time from
  the one-parameter cycle charts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._linalg import udu_factor
from .errors import UnsupportedGroup
from .quaternion import QuaternionMatrix

_LN2 = float(np.log(2.0))


@dataclass(frozen=True)
class RootInfo:
    """A positive root: its coordinate vector and a printable label."""
    vec: tuple
    label: str

    def as_array(self):
        return np.asarray(self.vec, dtype=float)


class Family:
    """Base adapter; concrete families fill in the tables in __init__."""

    family: str
    n: int
    rank: int
    rankdim: int          # length of weight-coordinate vectors
    slots: int            # size of the split matrix realization
    quaternionic = False

    # filled by subclasses ------------------------------------------------
    simple_roots: list    # list[RootInfo]
    positive_roots: list  # list[RootInfo], aligned with chart coordinates
    slot_weights: np.ndarray      # (slots, rankdim) label vectors
    dual_weights: np.ndarray      # (rank, rankdim): rows h_k, h_k . a_j = delta
    pairing_scale: float          # B(A, B) = scale * Re Tr(A B)

    # --- coordinates <-> matrices ---------------------------------------

    def weight_matrix(self, c):
        raise NotImplementedError

    def root_matrix(self, a):
        raise NotImplementedError

    def weight_coords(self, m):
        """Inverse of weight_matrix."""
        raise NotImplementedError

    def initial_matrix(self, weights):
        """The initial point mu0 = sum_k xi_k h_k as a working-basis matrix."""
        c = np.asarray(weights, dtype=float) @ self.dual_weights
        return self.weight_matrix(c)

    def initial_coords(self, weights):
        return np.asarray(weights, dtype=float) @ self.dual_weights

    def spectrum(self, m) -> np.ndarray:
        """Eigenvalues of a working-basis matrix (embedded for Sp)."""
        if isinstance(m, QuaternionMatrix):
            return np.linalg.eigvals(m.embed())
        return np.linalg.eigvals(np.asarray(m, dtype=complex))

    # --- charts -----------------------------------------------------------

    @property
    def chart_dim(self) -> int:
        return len(self.chart_roots)

    def chart_split(self, coords):
        """Split-basis matrices for a batch of chart coordinates (N, dim)."""
        raise NotImplementedError

    def chart_working(self, coords):
        """Single chart matrix in the family's working basis."""
        raise NotImplementedError

    def coords_from_zeta_split(self, zeta):
        """Chart coordinates of a split-basis lower-unitriangular element."""
        raise NotImplementedError

    def split_from_working(self, g):
        return np.asarray(g, dtype=complex)

    def working_from_split(self, g):
        return np.asarray(g, dtype=complex)

    # --- cycles and potentials ---------------------------------------------

    def cycle_chart(self, k: int, t):
        """Split chart of the k-th simple-root two-cycle at coordinates t."""
        x = self._cycle_generators()[k]
        t = np.asarray(t, dtype=complex)
        out = np.broadcast_to(np.eye(self.slots, dtype=complex),
                              t.shape + (self.slots, self.slots)).copy()
        term = np.eye(self.slots, dtype=complex)
        tk = np.ones_like(t)
        for p in range(1, self.slots):
            term = term @ x / p
            if not term.any():
                break
            tk = tk * t
            out += tk[..., None, None] * term
        return out

    def _cycle_generators(self):
        """Calibrated lowering generators, one per simple root."""
        raise NotImplementedError

    def log_a(self, z_split):
        """log of the Iwasawa A-diagonal for a batch of split matrices."""
        zs = np.asarray(z_split, dtype=complex)
        m = zs @ np.conj(np.swapaxes(zs, -1, -2))
        _, d = udu_factor(m)
        return np.log(d)

    @property
    def potential_weights(self) -> np.ndarray:
        """Rows W_k with Phi_k = W_k . log a; dual to the simple-root cycles."""
        w = self.__dict__.get("_potential_weights")
        if w is None:
            rows = []
            for k in range(self.rank):
                z = self.cycle_chart(k, np.array([1.0 + 0.0j]))
                rows.append(self.log_a(z)[0] / _LN2)
            v = np.asarray(rows)
            w = np.linalg.solve(v @ v.T, v)
            self.__dict__["_potential_weights"] = w
        return w

    def potentials(self, z_split) -> np.ndarray:
        """All rank basis potentials Phi_k at a batch of split matrices."""
        return self.log_a(z_split) @ self.potential_weights.T

    # --- torus ------------------------------------------------------------

    def torus_coords(self, d_diag_split) -> np.ndarray:
        """Coordinates (d_1..d_l) of a complexified-torus split diagonal."""
        raise NotImplementedError

    def a_parameters(self, log_a) -> np.ndarray:
        """Family torus parameters of an A-element from its split log-diagonal."""
        raise NotImplementedError

    # --- Weyl -------------------------------------------------------------

    def weyl_generators(self):
        """Matrix representatives of the simple reflections (working basis)."""
        raise NotImplementedError

    def weyl_action_on_coords(self, wmat) -> np.ndarray:
        """Matrix of c -> coords(w* M(c) w) acting on weight coordinates."""
        if isinstance(wmat, QuaternionMatrix):
            wmat = wmat.embed("split")
        cols = []
        for k in range(self.rankdim):
            e = np.zeros(self.rankdim)
            e[k] = 1.0
            m = self.weight_matrix(e)
            m2 = wmat.conj().T @ m @ wmat
            cols.append(self.weight_coords(m2))
        return np.array(cols).T

    # --- misc ---------------------------------------------------------------

    def stabilizer_description(self, coords) -> str:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# SU(n)


class SUFamily(Family):
    """SU(n): split basis = defining basis, charts are lower unitriangular."""

    family = "su"
    quaternionic = False

    def __init__(self, n: int):
        if n < 2:
            raise UnsupportedGroup(f"SU({n}) is not supported (need n >= 2)")
        self.n = n
        self.rank = n - 1
        self.rankdim = n
        self.slots = n
        self.pairing_scale = 1.0

        def e(i):
            v = np.zeros(n)
            v[i] = 1.0
            return v

        simple = [RootInfo(tuple(e(k) - e(k + 1)), f"e{k + 1}-e{k + 2}")
                  for k in range(n - 1)]
        others = []
        # level order: subdiagonal distance 1 first, then 2, ...
        positions = []
        for lvl in range(1, n):
            for i in range(n - lvl):
                positions.append((i + lvl, i))       # matrix position (row, col)
        for (r, c) in positions[n - 1:]:
            others.append(RootInfo(tuple(e(c) - e(r)), f"e{c + 1}-e{r + 1}"))
        self.simple_roots = simple
        self.positive_roots = simple + others
        self.chart_roots = self.positive_roots
        self._positions = positions
        self.slot_weights = np.eye(n)
        # dual basis: fundamental weight vectors
        dual = np.zeros((n - 1, n))
        for k in range(1, n):
            dual[k - 1, :k] = 1.0 - k / n
            dual[k - 1, k:] = -k / n
        self.dual_weights = dual

    # matrices ------------------------------------------------------------

    def weight_matrix(self, c):
        return -1j * np.diag(np.asarray(c, dtype=float))

    def root_matrix(self, a):
        return 1j * np.diag(np.asarray(a, dtype=float))

    def weight_coords(self, m):
        return np.real(1j * np.diagonal(np.asarray(m)))

    # charts ---------------------------------------------------------------

    def chart_split(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=complex))
        nb = coords.shape[0]
        z = np.broadcast_to(np.eye(self.n, dtype=complex),
                            (nb, self.n, self.n)).copy()
        for idx, (r, c) in enumerate(self._positions):
            z[:, r, c] = coords[:, idx]
        return z

    def chart_working(self, coords):
        return self.chart_split([coords])[0]

    def coords_from_zeta_split(self, zeta):
        return np.array([zeta[r, c] for (r, c) in self._positions])

    def _cycle_generators(self):
        gens = []
        for k in range(self.rank):
            x = np.zeros((self.n, self.n), dtype=complex)
            x[k + 1, k] = 1.0
            gens.append(x)
        return gens

    # torus ------------------------------------------------------------------

    def torus_coords(self, d_diag):
        d = np.asarray(d_diag, dtype=complex)
        return 1.0 / np.cumprod(d)[: self.rank]

    def a_parameters(self, log_a):
        # r_k from a = diag(1/r1, r1/r2, ..., r_{n-1})
        return np.exp(-np.cumsum(log_a)[: self.rank])

    # Weyl ---------------------------------------------------------------------

    def weyl_generators(self):
        if self.n == 3:
            w1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, -1]], dtype=complex)
            w2 = np.array([[-1, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex)
            return [w1, w2]
        gens = []
        for k in range(self.n - 1):
            w = np.eye(self.n, dtype=complex)
            w[k, k] = w[k + 1, k + 1] = 0.0
            w[k, k + 1] = 1.0
            w[k + 1, k] = -1.0
            gens.append(w)
        return gens

    def stabilizer_description(self, coords):
        blocks = _equal_blocks(coords)
        if all(b == 1 for b in blocks):
            return "x".join(["U(1)"] * self.rank)
        big = [b for b in blocks if b > 1]
        if len(big) == 1:
            parts = [f"SU({big[0]})"] + ["U(1)"] * (len(blocks) - 1)
            return "x".join(parts)
        return "S(" + "x".join(f"U({b})" for b in blocks) + ")"


# ---------------------------------------------------------------------------
# Sp(n)


class SpFamily(Family):
    """Sp(n): quaternionic charts natively, C_n root data in the split embedding.

    Split slot order is (a_1..a_n, b_n..b_1) with slot weights
    (e_1..e_n, -e_n..-e_1); quaternionic lower unitriangular matrices carry
    the short-root chart coordinates, the long roots 2e_k live on the
    j-components of the diagonal and are reachable only through the embedded
    cycle charts.
    """

    family = "sp"
    quaternionic = True

    def __init__(self, n: int):
        if n < 2:
            raise UnsupportedGroup(f"Sp({n}) is not supported (need n >= 2)")
        self.n = n
        self.rank = n
        self.rankdim = n
        self.slots = 2 * n
        self.pairing_scale = -0.5

        def e(i):
            v = np.zeros(n)
            v[i] = 1.0
            return v

        simple = [RootInfo(tuple(e(k) - e(k + 1)), f"e{k + 1}-e{k + 2}")
                  for k in range(n - 1)]
        simple.append(RootInfo(tuple(2 * e(n - 1)), f"2e{n}"))
        shorts = []
        qpos = []
        for lvl in range(1, n):
            for i in range(n - lvl):
                r, c = i + lvl, i
                qpos.append((r, c))
                shorts.append(RootInfo(tuple(e(c) - e(r)), f"e{c + 1}-e{r + 1}"))
                shorts.append(RootInfo(tuple(e(c) + e(r)), f"e{c + 1}+e{r + 1}"))
        longs = [RootInfo(tuple(2 * e(k)), f"2e{k + 1}")
                 for k in range(n - 1, -1, -1)]
        self.simple_roots = simple
        self.positive_roots = shorts + longs
        self.chart_roots = shorts + longs
        self._qpos = qpos
        w = np.zeros((2 * n, n))
        for k in range(n):
            w[k, k] = 1.0
            w[2 * n - 1 - k, k] = -1.0
        self.slot_weights = w
        dual = np.zeros((n, n))
        for k in range(n - 1):
            dual[k, : k + 1] = 1.0
        dual[n - 1, :] = 0.5
        self.dual_weights = dual
        self._omega = self._build_omega()

    def _build_omega(self):
        n = self.n
        om = np.zeros((2 * n, 2 * n))
        for k in range(n):
            om[k, 2 * n - 1 - k] = 1.0
            om[2 * n - 1 - k, k] = -1.0
        return om

    # matrices -------------------------------------------------------------

    def _split_diag(self, c):
        c = np.asarray(c, dtype=float)
        return np.concatenate([c, -c[::-1]])

    def weight_matrix(self, c):
        return 1j * np.diag(self._split_diag(c))

    def root_matrix(self, a):
        return self.weight_matrix(a)

    def weight_coords(self, m):
        d = np.diagonal(np.asarray(m))
        return np.imag(d[: self.n])

    def weight_matrix_native(self, c) -> QuaternionMatrix:
        return QuaternionMatrix(1j * np.diag(np.asarray(c, dtype=float)))

    # charts -----------------------------------------------------------------

    def split_coords(self, coords):
        """(shorts z/w pairs, longs) split of a flat coordinate vector."""
        coords = np.asarray(coords, dtype=complex)
        nshort = self.n * (self.n - 1)
        return coords[..., :nshort], coords[..., nshort:]

    def chart_quaternion(self, coords) -> QuaternionMatrix:
        """Native quaternionic chart matrix; requires long coordinates zero."""
        shorts, longs = self.split_coords(coords)
        if np.any(np.abs(longs) > 0):
            raise ValueError(
                "quaternionic charts carry only the short-root coordinates; "
                "long-root coordinates must vanish")
        q = QuaternionMatrix.eye(self.n)
        for idx, (r, c) in enumerate(self._qpos):
            q.z1[r, c] = shorts[2 * idx]
            q.z2[r, c] = shorts[2 * idx + 1]
        return q

    def chart_split(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=complex))
        nb, s = coords.shape[0], self.slots
        n = self.n
        z = np.broadcast_to(np.eye(s, dtype=complex), (nb, s, s)).copy()
        shorts, longs = self.split_coords(coords)
        # embedded quaternion entries: q = z + w j at position (r, c)
        for idx, (r, c) in enumerate(self._qpos):
            zz = shorts[:, 2 * idx]
            ww = shorts[:, 2 * idx + 1]
            z[:, r, c] = zz                                # a_r <- a_c
            z[:, 2 * n - 1 - r, 2 * n - 1 - c] = zz.conj()  # b_r <- b_c
            z[:, 2 * n - 1 - r, c] = ww.conj()             # b_r <- a_c
            z[:, r, 2 * n - 1 - c] = -ww                   # a_r <- b_c
        for j, val in enumerate(longs.T):
            k = n - 1 - j                                  # root 2e_{k+1}
            z[:, 2 * n - 1 - k, k] = z[:, 2 * n - 1 - k, k] + val
        return z

    def chart_working(self, coords):
        return self.chart_quaternion(coords)

    def coords_from_zeta_split(self, zeta):
        # assumes zeta carries the embedded-quaternionic lower pattern
        n = self.n
        out = []
        for (r, c) in self._qpos:
            out.append(zeta[r, c])
            out.append(np.conj(zeta[2 * n - 1 - r, c]))
        for j in range(n):
            k = n - 1 - j
            out.append(zeta[2 * n - 1 - k, k])
        return np.array(out)

    def coords_from_zeta_quaternion(self, zeta: QuaternionMatrix):
        out = []
        for (r, c) in self._qpos:
            q = zeta[r, c]
            out.extend([q.z1, q.z2])
        out.extend([0.0] * self.n)
        return np.array(out, dtype=complex)

    def _cycle_generators(self):
        gens = []
        n = self.n
        for k in range(n - 1):   # short simple roots e_k - e_{k+1}
            x = np.zeros((2 * n, 2 * n), dtype=complex)
            x[k + 1, k] = 1.0
            x[2 * n - 1 - k, 2 * n - 2 - k] = 1.0
            x = self._sp_project(x, (k + 1, k))
            gens.append(x)
        x = np.zeros((2 * n, 2 * n), dtype=complex)
        x[n, n - 1] = 1.0        # long root 2e_n
        gens.append(x)
        return gens

    def _sp_project(self, x, lead):
        """Fix the mirror coefficient so that x^T Omega + Omega x = 0."""
        om = self._omega
        n = self.n
        (r, c) = lead
        x = x.copy()
        x[2 * n - 1 - c, 2 * n - 1 - r] = 0.0
        base = np.zeros_like(x)
        base[r, c] = 1.0
        mirror = np.zeros_like(x)
        mirror[2 * n - 1 - c, 2 * n - 1 - r] = 1.0
        c0 = base.T @ om + om @ base
        c1 = mirror.T @ om + om @ mirror
        nz = np.argwhere(np.abs(c1) > 0.5)
        i, j = nz[0]
        sigma = -c0[i, j] / c1[i, j]
        return base + sigma * mirror

    # torus ---------------------------------------------------------------------

    def torus_coords(self, d_diag):
        return np.asarray(d_diag, dtype=complex)[: self.n]

    def a_parameters(self, log_a):
        # native quaternionic Iwasawa parameters (r_1..r_n), product 1
        return np.exp(np.asarray(log_a)[: self.n])

    # Weyl --------------------------------------------------------------------

    def weyl_generators(self):
        gens = []
        for k in range(self.n - 1):
            w = QuaternionMatrix.eye(self.n)
            w.z1[k, k] = w.z1[k + 1, k + 1] = 0.0
            w.z1[k, k + 1] = 1.0
            w.z1[k + 1, k] = 1.0
            gens.append(w)
        w = QuaternionMatrix.eye(self.n)
        w.z1[self.n - 1, self.n - 1] = 0.0
        w.z2[self.n - 1, self.n - 1] = 1.0   # quaternion j flips the last angle
        gens.append(w)
        return gens

    def stabilizer_description(self, coords):
        c = np.asarray(coords, dtype=float)
        zero = int(np.sum(np.abs(c) < 1e-12))
        blocks = _equal_blocks(c[np.abs(c) >= 1e-12])
        parts = [f"U({b})" if b > 1 else "U(1)" for b in blocks]
        if zero:
            parts.append(f"Sp({zero})")
        return "x".join(parts) if parts else "Sp(0)"


# ---------------------------------------------------------------------------
# SO(3), SO(4)


class SOFamily(Family):
    """SO(3) and SO(4) with rotation-block Cartan conventions.

    Working basis: real antisymmetric matrices, Cartan spanned by rotation
    blocks L(1,2) (and L(3,4)). The split basis orders isotropic vectors as
    (ubar_1, [ubar_2, u_2,] e_odd, u_1) so charts are lower unitriangular
    and A is diagonal.
    """

    family = "so"
    quaternionic = False

    def __init__(self, n: int):
        if n not in (3, 4):
            raise UnsupportedGroup(
                f"SO({n}) is not supported; the chart structure is explicit "
                "only for n in {3, 4}")
        self.n = n
        m = n // 2
        self.rank = m
        self.rankdim = m
        self.slots = n
        self.pairing_scale = -0.5

        if n == 3:
            self.simple_roots = [RootInfo((1.0,), "e1")]
            self.positive_roots = list(self.simple_roots)
            self.slot_weights = np.array([[1.0], [0.0], [-1.0]])
            self.dual_weights = np.array([[1.0]])
            t = np.zeros((3, 3), dtype=complex)
            rt = 1.0 / np.sqrt(2.0)
            t[:, 0] = [rt, -1j * rt, 0.0]     # ubar_1
            t[:, 1] = [0.0, 0.0, 1.0]         # e_3
            t[:, 2] = [rt, 1j * rt, 0.0]      # u_1
            self._t = t
        else:
            self.simple_roots = [RootInfo((1.0, -1.0), "e1-e2"),
                                 RootInfo((1.0, 1.0), "e1+e2")]
            self.positive_roots = list(self.simple_roots)
            self.slot_weights = np.array([[1.0, 0.0], [0.0, 1.0],
                                          [0.0, -1.0], [-1.0, 0.0]])
            self.dual_weights = np.array([[0.5, -0.5], [0.5, 0.5]])
            t = np.zeros((4, 4), dtype=complex)
            rt = 1.0 / np.sqrt(2.0)
            t[:, 0] = [rt, -1j * rt, 0.0, 0.0]    # ubar_1
            t[:, 1] = [0.0, 0.0, rt, -1j * rt]    # ubar_2
            t[:, 2] = [0.0, 0.0, rt, 1j * rt]     # u_2
            t[:, 3] = [rt, 1j * rt, 0.0, 0.0]     # u_1
            self._t = t
        self.chart_roots = list(self.simple_roots)

    # matrices ----------------------------------------------------------------

    def weight_matrix(self, c):
        c = np.asarray(c, dtype=float)
        m = np.zeros((self.n, self.n), dtype=complex)
        for k in range(self.rank):
            m[2 * k, 2 * k + 1] = c[k]
            m[2 * k + 1, 2 * k] = -c[k]
        return m

    def root_matrix(self, a):
        return self.weight_matrix(a)

    def weight_coords(self, m):
        m = np.asarray(m)
        return np.real(np.array([m[2 * k, 2 * k + 1] for k in range(self.rank)]))

    # charts ---------------------------------------------------------------------

    def split_from_working(self, g):
        return self._t.conj().T @ np.asarray(g, dtype=complex) @ self._t

    def working_from_split(self, g):
        return self._t @ np.asarray(g, dtype=complex) @ self._t.conj().T

    def chart_split(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=complex))
        nb = coords.shape[0]
        if self.n == 3:
            z = np.broadcast_to(np.eye(3, dtype=complex), (nb, 3, 3)).copy()
            rt2 = np.sqrt(2.0)
            z[:, 1, 0] = rt2 * coords[:, 0]
            z[:, 2, 1] = -rt2 * coords[:, 0]
            z[:, 2, 0] = -coords[:, 0] ** 2
            return z
        z = np.broadcast_to(np.eye(4, dtype=complex), (nb, 4, 4)).copy()
        z1, z2 = coords[:, 0], coords[:, 1]
        z[:, 1, 0] = z1
        z[:, 3, 2] = -z1
        z[:, 2, 0] = z2
        z[:, 3, 1] = -z2
        z[:, 3, 0] = -z1 * z2
        return z

    def chart_working(self, coords):
        return self.working_from_split(self.chart_split([coords])[0])

    def coords_from_zeta_split(self, zeta):
        if self.n == 3:
            return np.array([zeta[1, 0] / np.sqrt(2.0)])
        return np.array([zeta[1, 0], zeta[2, 0]])

    def _cycle_generators(self):
        if self.n == 3:
            x = np.zeros((3, 3), dtype=complex)
            x[1, 0] = np.sqrt(2.0)
            x[2, 1] = -np.sqrt(2.0)
            return [x]
        x1 = np.zeros((4, 4), dtype=complex)
        x1[1, 0] = 1.0
        x1[3, 2] = -1.0
        x2 = np.zeros((4, 4), dtype=complex)
        x2[2, 0] = 1.0
        x2[3, 1] = -1.0
        return [x1, x2]

    # torus -------------------------------------------------------------------

    def torus_coords(self, d_diag):
        d = np.asarray(d_diag, dtype=complex)
        # u_k sits at slot (slots - k), k = 1..rank
        return np.array([d[self.slots - 1 - k] for k in range(self.rank)])

    def a_parameters(self, log_a):
        v = np.asarray(log_a)
        return np.array([v[self.slots - 1 - k] for k in range(self.rank)])

    # Weyl -----------------------------------------------------------------------

    def weyl_generators(self):
        if self.n == 3:
            return [np.diag([1.0, -1.0, -1.0]).astype(complex)]
        w1 = np.zeros((4, 4), dtype=complex)
        w1[0, 2] = w1[1, 3] = w1[2, 0] = w1[3, 1] = 1.0
        w2 = np.zeros((4, 4), dtype=complex)
        w2[0, 2] = w2[2, 0] = 1.0
        w2[1, 3] = w2[3, 1] = -1.0
        return [w1, w2]

    def stabilizer_description(self, coords):
        if self.n == 3:
            return "SO(2)"
        c = np.asarray(coords, dtype=float)
        if abs(abs(c[0]) - abs(c[1])) < 1e-12:
            return "U(2)"
        return "SO(2)xSO(2)"


def _equal_blocks(values, tol: float = 1e-12):
    """Multiplicities of equal consecutive entries of a sorted-ish vector."""
    vals = list(np.asarray(values, dtype=float))
    if not vals:
        return []
    vals = sorted(vals, reverse=True)
    blocks = [1]
    for prev, cur in zip(vals, vals[1:]):
        if abs(prev - cur) < tol:
            blocks[-1] += 1
        else:
            blocks.append(1)
    return blocks


@lru_cache(maxsize=32)
def get_family(family: str, n: int) -> Family:
    family = family.lower()
    if family == "su":
        return SUFamily(n)
    if family == "sp":
        return SpFamily(n)
    if family == "so":
        return SOFamily(n)
    raise UnsupportedGroup(f"unknown family {family!r}")

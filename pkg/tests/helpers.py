"""Shared test utilities."""

import numpy as np

from coadjoint import chart_point
from coadjoint.orbit import required_zero_mask
from coadjoint.quaternion import QuaternionMatrix


def spectral_mismatch(a, b):
    """Max multiset distance of two spectra (sorted by imaginary part)."""
    a = np.asarray(a)
    b = np.asarray(b)
    a = a[np.lexsort((a.real, a.imag))]
    b = b[np.lexsort((b.real, b.imag))]
    return float(np.max(np.abs(a - b)))


def haar_su(n, rng):
    """Haar-ish random SU(n) element via QR of a complex Gaussian."""
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(m)
    q = q @ np.diag(np.exp(-1j * np.angle(np.diag(r))))
    return q / np.linalg.det(q) ** (1.0 / n)


def random_chart(spec, rng, scale=1.0, point=None):
    """Random chart point; respects degeneracy of ``point`` when given."""
    fam = spec.adapter
    z = scale * (rng.standard_normal(fam.chart_dim)
                 + 1j * rng.standard_normal(fam.chart_dim))
    if fam.family == "sp":
        z[fam.n * (fam.n - 1):] = 0.0     # quaternionic chart: no long coords
    if point is not None:
        z[required_zero_mask(spec, point)] = 0.0
    return chart_point(spec, z)


def mat_max(x):
    """Max entry magnitude for ndarray or QuaternionMatrix."""
    if isinstance(x, QuaternionMatrix):
        return x.norm_max()
    return float(np.max(np.abs(np.asarray(x))))


def identity_like(spec, x):
    if isinstance(x, QuaternionMatrix):
        return QuaternionMatrix.eye(x.shape[0])
    return np.eye(np.asarray(x).shape[0], dtype=complex)

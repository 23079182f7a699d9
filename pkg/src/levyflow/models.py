"""Pure-jump Levy noise models of stable type.

Every shipped class is a pure-jump Levy process (no Gaussian part, no drift)
described by a spherical-radial decomposition of its jump measure

    nu(A) = int_0^R q(s) ds  int_S 1_A(s*xi) mu(d xi),

with ``mu`` a finite measure on the unit sphere (either exactly uniform or a
finite weighted direction set) and ``q`` a radial profile: ``s**(-1-alpha)``
for the stable family, possibly truncated at a finite radius, exponentially
tempered, or the Bessel-type profile of the relativistic process.  Symbols
(characteristic exponents) come in closed form where one exists and by radial
quadrature otherwise.

The module also houses the machine-checkable surrogates for the two standing
assumptions on the noise: empirical sector bounds ``c1*|y|**a <= Re psi(y)
<= c2*|y|**a`` for large ``|y|``, finiteness of small-jump moments
``int_{|x|<=1} |x|**sigma nu(dx)`` for ``sigma > alpha``, and pointwise
domination of the truncated reference measure.
"""

from __future__ import annotations

import json
import math

import numpy as np
from scipy import special

from .quadrature import (
    graded_integral_to_zero,
    integral_to_infinity,
    gauss_panel,
)
from .streams import as_generator

_UNIT_NORM_TOL = 1e-12


def surface_area(d):
    """Surface measure of the unit sphere in R^d (2 points for d=1)."""
    if d == 1:
        return 2.0
    return 2.0 * math.pi ** (d / 2.0) / special.gamma(d / 2.0)


def frac_laplacian_constant(alpha, d):
    """Density constant c(alpha, d) with symbol of c/|z|^(d+alpha) dz equal to |u|^alpha."""
    return (
        alpha
        * 2.0 ** (alpha - 1.0)
        * special.gamma((alpha + d) / 2.0)
        / (math.pi ** (d / 2.0) * special.gamma(1.0 - alpha / 2.0))
    )


def sphere_cos_average(d, r):
    """E[cos(r * xi_1)] for xi uniform on the unit sphere of R^d, vectorized in r."""
    r = np.asarray(r, dtype=float)
    if d == 1:
        return np.cos(r)
    if d == 2:
        return special.j0(r)
    order = d / 2.0 - 1.0
    out = np.empty_like(r)
    small = np.abs(r) < 1e-6
    rs = r[small]
    out[small] = 1.0 - rs**2 / (2.0 * d) + rs**4 / (8.0 * d * (d + 2.0))
    rl = r[~small]
    out[~small] = special.gamma(d / 2.0) * (2.0 / rl) ** order * special.jv(order, rl)
    return out


class SphericalMeasure:
    """Finite weighted set of unit directions approximating a sphere measure."""

    def __init__(self, directions, weights):
        directions = np.atleast_2d(np.asarray(directions, dtype=float))
        weights = np.asarray(weights, dtype=float)
        if directions.shape[0] != weights.shape[0]:
            raise ValueError("directions and weights must have matching length")
        if np.any(weights <= 0.0):
            raise ValueError("all spherical weights must be positive")
        norms = np.linalg.norm(directions, axis=1)
        if np.any(np.abs(norms - 1.0) > _UNIT_NORM_TOL):
            raise ValueError("all directions must lie on the unit sphere")
        self.directions = directions
        self.weights = weights

    @property
    def total(self):
        return float(self.weights.sum())

    @property
    def dimension(self):
        return self.directions.shape[1]

    def rank(self):
        return int(np.linalg.matrix_rank(self.directions, tol=1e-10))

    def is_nondegenerate(self):
        """The support must span R^d (not contained in a proper subspace)."""
        return self.rank() == self.dimension

    def is_symmetric(self, tol=1e-10):
        """True when every direction is paired with its antipode at equal weight."""
        for xi, w in zip(self.directions, self.weights):
            diff = np.linalg.norm(self.directions + xi[None, :], axis=1)
            j = int(np.argmin(diff))
            if diff[j] > 1e-9 or abs(self.weights[j] - w) > tol * max(1.0, w):
                return False
        return True

    @classmethod
    def quasi_uniform(cls, d, n_directions, total=1.0):
        """Antipodally symmetric quasi-uniform design with given total mass.

        d=1 uses {+1,-1}; d=2 equispaced angles; d=3 a symmetrized Fibonacci
        lattice.  Weights are equal.
        """
        if d == 1:
            dirs = np.array([[1.0], [-1.0]])
        elif d == 2:
            m = max(2, n_directions // 2)
            ang = (np.arange(m) + 0.5) * math.pi / m
            half = np.stack([np.cos(ang), np.sin(ang)], axis=1)
            dirs = np.concatenate([half, -half], axis=0)
        elif d == 3:
            m = max(3, n_directions // 2)
            i = np.arange(m) + 0.5
            phi = math.pi * (3.0 - math.sqrt(5.0)) * i
            z = 1.0 - i / m
            rho = np.sqrt(np.clip(1.0 - z**2, 0.0, 1.0))
            half = np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=1)
            half /= np.linalg.norm(half, axis=1, keepdims=True)
            dirs = np.concatenate([half, -half], axis=0)
        else:
            raise ValueError("quasi-uniform designs are shipped for d <= 3")
        w = np.full(dirs.shape[0], total / dirs.shape[0])
        return cls(dirs, w)

    def to_dict(self):
        return {
            "directions": self.directions.tolist(),
            "weights": self.weights.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(np.asarray(data["directions"]), np.asarray(data["weights"]))


class LevyModel:
    """Base class: spherical-radial jump measure plus symbol evaluation.

    Subclasses set ``dimension``, ``alpha``, the spherical part (``spherical``
    a :class:`SphericalMeasure` or ``None`` for an exactly uniform measure of
    mass ``spherical_total``), the radial profile and its cutoff.
    """

    class_tag = "abstract"

    dimension: int
    alpha: float

    def __init__(self, dimension, alpha, check_nondegenerate=True):
        if not 0.0 < alpha < 2.0:
            raise ValueError(f"alpha must lie strictly in (0, 2), got {alpha}")
        if dimension < 1:
            raise ValueError("dimension must be a positive integer")
        self.dimension = int(dimension)
        self.alpha = float(alpha)
        self._check_nondegenerate = bool(check_nondegenerate)

    # -- spherical part -------------------------------------------------
    spherical: SphericalMeasure | None = None

    def spherical_total(self):
        raise NotImplementedError

    def validate(self):
        if self.spherical is not None:
            if self._check_nondegenerate and not self.spherical.is_nondegenerate():
                raise ValueError(
                    "degenerate spherical measure: directions do not span R^d"
                )

    # -- radial part ----------------------------------------------------
    radial_cutoff: float = math.inf
    has_radial_profile = True

    def radial_density(self, s):
        """Radial profile q(s) per unit spherical mass, zero beyond the cutoff."""
        raise NotImplementedError

    def radial_mass(self, a, b):
        """Per-unit-mass integral of q over [a, b] (a > 0)."""
        a = max(float(a), 0.0)
        b = min(float(b), self.radial_cutoff)
        if b <= a:
            return 0.0
        if b == math.inf:
            return integral_to_infinity(self.radial_density, a)
        return gauss_panel(self.radial_density, a, b)

    def radial_moment(self, p, a, b, tol=1e-10):
        """Per-unit-mass integral of s**p * q(s) over [a, b]; a may be 0 if p > alpha."""
        b = min(float(b), self.radial_cutoff)
        a = float(a)
        if b <= a:
            return 0.0
        fn = lambda s: s**p * self.radial_density(s)
        if a == 0.0:
            if p <= self.alpha:
                return math.inf
            head = graded_integral_to_zero(fn, min(b, 1.0), tol=tol)
            if b > 1.0:
                head += self.radial_mass_weighted(fn, 1.0, b)
            return head
        return self.radial_mass_weighted(fn, a, b)

    def radial_mass_weighted(self, fn, a, b):
        if b == math.inf:
            return integral_to_infinity(fn, a)
        return gauss_panel(fn, a, b)

    # -- measure-level quantities ---------------------------------------
    def tail_mass(self, eps):
        """nu({|z| > eps})."""
        return self.spherical_total() * self.radial_mass(eps, math.inf)

    def small_jump_covariance(self, eps):
        """int_{|z| <= eps} z z^T nu(dz) as a (d, d) matrix."""
        m2 = self.radial_moment(2.0, 0.0, eps)
        d = self.dimension
        if self.spherical is None:
            return self.spherical_total() * m2 / d * np.eye(d)
        outer = np.einsum(
            "k,ki,kj->ij", self.spherical.weights, self.spherical.directions,
            self.spherical.directions,
        )
        return m2 * outer

    def compensation_drift(self, eps):
        """-int_{eps < |z| <= 1} z nu(dz); identically zero for symmetric measures."""
        d = self.dimension
        if self.spherical is None or self.spherical.is_symmetric():
            return np.zeros(d)
        m1 = self.radial_moment(1.0, eps, 1.0)
        mean_dir = self.spherical.weights @ self.spherical.directions
        return -m1 * mean_dir

    # -- symbol -----------------------------------------------------------
    def symbol(self, u):
        """Levy-Khintchine exponent psi(u) with E exp(i<u, L_t>) = exp(-t psi(u))."""
        return self._symbol_quadrature(np.asarray(u, dtype=float))

    def _symbol_quadrature(self, u, tol=1e-9):
        norm_u = float(np.linalg.norm(u))
        if norm_u == 0.0 or not np.all(np.isfinite(u)):
            if norm_u == 0.0:
                return 0.0 + 0.0j
            raise ValueError("symbol argument must be finite")
        cutoff = self.radial_cutoff
        if self.spherical is None:
            d = self.dimension
            fn = lambda s: (1.0 - sphere_cos_average(d, s * norm_u)) * self.radial_density(s)
            re = self.spherical_total() * self._radial_split(fn, cutoff, norm_u, tol)
            return complex(re, 0.0)
        re = 0.0
        for xi, w in zip(self.spherical.directions, self.spherical.weights):
            t = float(np.dot(u, xi))
            if t == 0.0:
                continue
            fn = lambda s: (1.0 - np.cos(s * t)) * self.radial_density(s)
            re += w * self._radial_split(fn, cutoff, abs(t), tol)
        im = 0.0
        if not self.spherical.is_symmetric():
            for xi, w in zip(self.spherical.directions, self.spherical.weights):
                t = float(np.dot(u, xi))
                if t == 0.0:
                    continue
                fn = lambda s: (np.sin(s * t) - s * t * (s <= 1.0)) * self.radial_density(s)
                im -= w * self._radial_split(fn, cutoff, abs(t), tol)
        return complex(re, im)

    def _radial_split(self, fn, cutoff, freq, tol):
        osc = 2.0 * math.pi / freq if freq > 0.0 else None
        inner = min(cutoff, 1.0)
        val = graded_integral_to_zero(fn, inner, tol=tol, oscillation=osc)
        if cutoff > 1.0:
            if cutoff == math.inf:
                val += integral_to_infinity(fn, inner, tol=tol, oscillation=osc)
            else:
                val += gauss_panel(fn, inner, cutoff, oscillation=osc)
        return val

    # -- serialization ----------------------------------------------------
    def to_dict(self):
        raise NotImplementedError

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        fields = ", ".join(f"{k}={v}" for k, v in self.to_dict().items() if k != "class")
        return f"{type(self).__name__}({fields})"


class IsotropicStable(LevyModel):
    """Rotationally invariant stable noise, defined through its symbol c*|u|^alpha.

    The jump density is c * c(alpha,d) / |z|^(d+alpha); the dimensional
    constant is absorbed so that the symbol is exactly ``scale * |u|**alpha``.
    """

    class_tag = "isotropic_stable"

    def __init__(self, dimension, alpha, scale=1.0):
        super().__init__(dimension, alpha)
        if scale <= 0.0:
            raise ValueError("scale must be positive")
        self.scale = float(scale)
        self.spherical = None
        self.radial_cutoff = math.inf
        self.validate()

    def spherical_total(self):
        return (
            self.scale
            * frac_laplacian_constant(self.alpha, self.dimension)
            * surface_area(self.dimension)
        )

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return s ** (-1.0 - self.alpha)

    def radial_mass(self, a, b):
        a = max(float(a), 0.0)
        b = min(float(b), self.radial_cutoff)
        if b <= a:
            return 0.0
        al = self.alpha
        if a <= 0.0:
            return math.inf
        hi = 0.0 if b == math.inf else b ** (-al)
        return (a ** (-al) - hi) / al

    def symbol(self, u):
        u = np.asarray(u, dtype=float)
        return complex(self.scale * np.linalg.norm(u, axis=-1) ** self.alpha, 0.0)

    def to_dict(self):
        return {
            "class": self.class_tag,
            "dimension": self.dimension,
            "alpha": self.alpha,
            "scale": self.scale,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["dimension"], data["alpha"], data.get("scale", 1.0))


class AxisStable(LevyModel):
    """Independent one-dimensional symmetric stable components.

    Symbol sum_k c_k |u_k|^alpha; the jump measure is concentrated on the
    coordinate axes.
    """

    class_tag = "axis_stable"

    def __init__(self, alpha, scales):
        scales = np.atleast_1d(np.asarray(scales, dtype=float))
        super().__init__(scales.shape[0], alpha)
        if np.any(scales <= 0.0):
            raise ValueError("all per-axis scales must be positive")
        self.scales = scales
        d = self.dimension
        c1 = frac_laplacian_constant(alpha, 1)
        dirs = np.concatenate([np.eye(d), -np.eye(d)], axis=0)
        weights = np.concatenate([scales * c1, scales * c1])
        self.spherical = SphericalMeasure(dirs, weights)
        self.radial_cutoff = math.inf
        self.validate()

    def spherical_total(self):
        return self.spherical.total

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return s ** (-1.0 - self.alpha)

    def radial_mass(self, a, b):
        return IsotropicStable.radial_mass(self, a, b)

    def symbol(self, u):
        u = np.asarray(u, dtype=float)
        return complex(np.sum(self.scales * np.abs(u) ** self.alpha), 0.0)

    def to_dict(self):
        return {
            "class": self.class_tag,
            "alpha": self.alpha,
            "scales": self.scales.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["alpha"], np.asarray(data["scales"]))


class TruncatedStable(LevyModel):
    """Stable-type measure truncated at a finite jump radius.

    nu(A) = int_0^r s^(-1-alpha) ds int_S 1_A(s xi) mu(d xi) with mu uniform of
    total mass ``scale`` (or an explicit direction set).
    """

    class_tag = "truncated_stable"

    def __init__(self, dimension, alpha, scale=1.0, truncation_radius=1.0,
                 spherical_measure=None):
        super().__init__(dimension, alpha)
        if truncation_radius <= 0.0:
            raise ValueError("truncation radius must be positive")
        if scale <= 0.0:
            raise ValueError("scale must be positive")
        self.scale = float(scale)
        self.radial_cutoff = float(truncation_radius)
        self.spherical = spherical_measure
        self.validate()

    @property
    def truncation_radius(self):
        return self.radial_cutoff

    def spherical_total(self):
        if self.spherical is not None:
            return self.spherical.total
        return self.scale

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return np.where(s <= self.radial_cutoff, s ** (-1.0 - self.alpha), 0.0)

    def radial_mass(self, a, b):
        b = min(float(b), self.radial_cutoff)
        a = float(a)
        if b <= a:
            return 0.0
        if a <= 0.0:
            return math.inf
        return (a ** (-self.alpha) - b ** (-self.alpha)) / self.alpha

    def to_dict(self):
        out = {
            "class": self.class_tag,
            "dimension": self.dimension,
            "alpha": self.alpha,
            "scale": self.scale,
            "truncation_radius": self.radial_cutoff,
        }
        if self.spherical is not None:
            out["spherical_measure"] = self.spherical.to_dict()
        return out

    @classmethod
    def from_dict(cls, data):
        sm = data.get("spherical_measure")
        return cls(
            data["dimension"],
            data["alpha"],
            data.get("scale", 1.0),
            data.get("truncation_radius", 1.0),
            SphericalMeasure.from_dict(sm) if sm else None,
        )


class TemperedStableSpecial(LevyModel):
    """Exponentially tempered radial profile e^{-s} s^{-1-alpha} on (0, inf)."""

    class_tag = "tempered_stable_special"

    def __init__(self, dimension, alpha, spherical_measure=None, scale=1.0):
        super().__init__(dimension, alpha)
        if scale <= 0.0:
            raise ValueError("scale must be positive")
        self.scale = float(scale)
        self.spherical = spherical_measure
        self.radial_cutoff = math.inf
        self.validate()

    def spherical_total(self):
        if self.spherical is not None:
            return self.scale * self.spherical.total
        return self.scale

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return np.exp(-s) * s ** (-1.0 - self.alpha)

    def small_jump_covariance(self, eps):
        if self.spherical is None:
            return LevyModel.small_jump_covariance(self, eps)
        m2 = self.radial_moment(2.0, 0.0, eps)
        outer = np.einsum(
            "k,ki,kj->ij", self.spherical.weights, self.spherical.directions,
            self.spherical.directions,
        )
        return self.scale * m2 * outer

    def to_dict(self):
        out = {
            "class": self.class_tag,
            "dimension": self.dimension,
            "alpha": self.alpha,
            "scale": self.scale,
        }
        if self.spherical is not None:
            out["spherical_measure"] = self.spherical.to_dict()
        return out

    @classmethod
    def from_dict(cls, data):
        sm = data.get("spherical_measure")
        return cls(
            data["dimension"],
            data["alpha"],
            SphericalMeasure.from_dict(sm) if sm else None,
            data.get("scale", 1.0),
        )


class RelativisticStable(LevyModel):
    """Relativistic stable noise, symbol (|u|^2 + m^(2/alpha))^(alpha/2) - m.

    The jump density follows from Brownian subordination by a tempered
    (alpha/2)-stable subordinator and is expressed through a Bessel-K kernel;
    it matches the pure stable density c(alpha,d)|z|^{-d-alpha} as z -> 0.
    """

    class_tag = "relativistic_stable"

    def __init__(self, dimension, alpha, mass, scale=1.0):
        super().__init__(dimension, alpha)
        if mass <= 0.0:
            raise ValueError("mass must be positive")
        if scale <= 0.0:
            raise ValueError("scale must be positive")
        self.mass = float(mass)
        self.scale = float(scale)
        self.spherical = None
        self.radial_cutoff = math.inf
        self.validate()

    @property
    def _theta(self):
        return self.mass ** (2.0 / self.alpha)

    def spherical_total(self):
        return self.scale * surface_area(self.dimension)

    def jump_density(self, s):
        """Radial Lebesgue density j(|z|) of the unit-scale jump measure."""
        s = np.asarray(s, dtype=float)
        a = self.alpha / 2.0
        d = self.dimension
        order = (d + self.alpha) / 2.0
        theta = self._theta
        const = (
            (a / special.gamma(1.0 - a))
            * (4.0 * math.pi) ** (-d / 2.0)
            * 2.0
            * (4.0 * theta) ** (order / 2.0)
        )
        return const * s ** (-order) * special.kv(order, s * math.sqrt(theta))

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return self.jump_density(s) * s ** (self.dimension - 1.0)

    def symbol(self, u):
        u = np.asarray(u, dtype=float)
        r2 = np.sum(u * u, axis=-1)
        theta = self._theta
        return complex(
            self.scale * ((r2 + theta) ** (self.alpha / 2.0) - self.mass), 0.0
        )

    def to_dict(self):
        return {
            "class": self.class_tag,
            "dimension": self.dimension,
            "alpha": self.alpha,
            "mass": self.mass,
            "scale": self.scale,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["dimension"], data["alpha"], data["mass"], data.get("scale", 1.0))


class SphericalRadial(LevyModel):
    """Generic stable-profile measure with an explicit spherical direction set."""

    class_tag = "spherical_radial"

    def __init__(self, dimension, alpha, spherical_measure, truncation_radius=math.inf,
                 check_nondegenerate=True):
        super().__init__(dimension, alpha, check_nondegenerate=check_nondegenerate)
        if spherical_measure.dimension != dimension:
            raise ValueError("spherical measure dimension mismatch")
        self.spherical = spherical_measure
        self.radial_cutoff = float(truncation_radius)
        self.validate()

    def spherical_total(self):
        return self.spherical.total

    def radial_density(self, s):
        s = np.asarray(s, dtype=float)
        return np.where(s <= self.radial_cutoff, s ** (-1.0 - self.alpha), 0.0)

    def radial_mass(self, a, b):
        return TruncatedStable.radial_mass(self, a, b)

    def to_dict(self):
        return {
            "class": self.class_tag,
            "dimension": self.dimension,
            "alpha": self.alpha,
            "truncation_radius": self.radial_cutoff,
            "spherical_measure": self.spherical.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["dimension"],
            data["alpha"],
            SphericalMeasure.from_dict(data["spherical_measure"]),
            data.get("truncation_radius", math.inf),
        )


_MODEL_CLASSES = {
    cls.class_tag: cls
    for cls in (
        IsotropicStable,
        AxisStable,
        TruncatedStable,
        TemperedStableSpecial,
        RelativisticStable,
        SphericalRadial,
    )
}


def model_from_dict(data):
    """Inverse of ``to_dict`` across all shipped classes."""
    tag = data.get("class")
    if tag not in _MODEL_CLASSES:
        raise ValueError(f"unknown model class {tag!r}")
    return _MODEL_CLASSES[tag].from_dict(data)


def model_from_json(text):
    return model_from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def symbol(model, u):
    """psi(u) for the model; complex (imaginary part ~ 0 for symmetric measures)."""
    return model.symbol(u)


def check_sector_bounds(model, M, n_probes=200, rng=0):
    """Empirical sector constants for Re psi(y) / |y|^alpha on |y| in (M, 100M].

    Probes directions and radii (radii log-uniform), returns the tightest
    empirical constants and a pass flag: the machine-checkable surrogate for
    the gradient-estimate hypothesis via the symbol criterion.
    """
    if M <= 0.0:
        raise ValueError("M must be positive")
    if n_probes < 100:
        raise ValueError("need at least 100 probes")
    rng = as_generator(rng)
    d = model.dimension
    radii = np.exp(rng.uniform(np.log(M), np.log(100.0 * M), n_probes))
    dirs = rng.standard_normal((n_probes, d))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    # Make sure the coordinate axes are always probed.
    for k in range(min(d, n_probes)):
        dirs[k] = 0.0
        dirs[k, k] = 1.0
    ratios = np.empty(n_probes)
    for i in range(n_probes):
        y = radii[i] * dirs[i]
        ratios[i] = model.symbol(y).real / radii[i] ** model.alpha
    c1 = float(ratios.min())
    c2 = float(ratios.max())
    ok = np.isfinite(c2) and c1 > 1e-9 * max(c2, 1.0)
    return {"c1": c1, "c2": c2, "pass": bool(ok)}


def small_jump_moment(model, sigma):
    """int_{|x| <= 1} |x|^sigma nu(dx); +inf flags divergence when sigma <= alpha."""
    if sigma <= model.alpha:
        return math.inf
    per_unit = model.radial_moment(float(sigma), 0.0, 1.0)
    return model.spherical_total() * per_unit


class DominationResult(dict):
    """Dict with an ``applicable`` flag for classes without a radial comparison."""

    @property
    def applicable(self):
        return self.get("applicable", True)


def dominates_truncated(model, n_grid=512):
    """Check pointwise radial domination of the truncated reference profile.

    Compares the per-unit-mass radial density q(s) against the reference
    s^(-1-alpha) on (0, 1].  Returns the largest constant c0 <= 1 with
    q >= c0 * q_ref on the grid; a positive c0 certifies the gradient
    hypothesis through measure comparison.
    """
    if isinstance(model, AxisStable):
        return DominationResult(
            applicable=False,
            pass_=None,
            reason="jump measure concentrated on the axes has no full-sphere "
                   "radial comparison",
        )
    grid = np.geomspace(1e-6, 1.0, n_grid)
    q = np.asarray(model.radial_density(grid), dtype=float)
    q_ref = grid ** (-1.0 - model.alpha)
    ratio = q / q_ref
    c0 = float(min(1.0, ratio.min()))
    margin = float(np.min(q - c0 * q_ref))
    return DominationResult(
        applicable=True,
        pass_=bool(c0 > 1e-12),
        c0=c0,
        margin=margin,
    )

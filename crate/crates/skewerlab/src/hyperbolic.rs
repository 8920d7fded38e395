//! Lines in hyperbolic 3-space as complex binary quadratic forms.
//!
//! A line is determined by its two endpoints on the sphere at infinity
//! (the Riemann sphere), and the unordered endpoint pair is encoded as the
//! projective class of the quadratic form vanishing there. Incidence at
//! right angle is orthogonality for the polarized discriminant, and the
//! skewer of two lines is their Poisson bracket.

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{self, C};

/// Relative discriminant size below which a form no longer represents a
/// usable line (its two boundary roots have merged).
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq, Clone, Copy)]
pub enum FormError {
    /// The two boundary points coincide projectively.
    #[error("equal endpoints do not span a line")]
    EqualEndpoints,
    /// `|Δ|/‖f‖²` is below [`DEGENERACY_THRESHOLD`]: double root.
    #[error("degenerate form (vanishing discriminant)")]
    DegenerateForm,
}

/// A point of the boundary sphere at infinity, as a homogeneous pair
/// `(p : q)` of complex scalars; `∞ = (1 : 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub p: Complex64,
    pub q: Complex64,
}

impl BoundaryPoint {
    /// Builds a boundary point from a homogeneous pair, rescaled to unit
    /// magnitude. Panics if both entries are zero.
    pub fn new(p: Complex64, q: Complex64) -> Self {
        let n = (p.norm_sqr() + q.norm_sqr()).sqrt();
        assert!(n > 0.0, "(0:0) is not a boundary point");
        Self { p: p / n, q: q / n }
    }

    /// The finite point `z = (z : 1)`.
    pub fn finite(z: Complex64) -> Self {
        Self::new(z, C::new(1.0, 0.0))
    }

    pub fn infinity() -> Self {
        Self::new(C::new(1.0, 0.0), C::new(0.0, 0.0))
    }

    /// The affine value `p/q` (infinite when `q = 0`).
    pub fn to_complex(&self) -> Complex64 {
        self.p / self.q
    }

    /// `p₁q₂ − p₂q₁`, the homogeneous "difference" of two points; zero iff
    /// the points coincide projectively.
    pub fn cross(&self, other: &BoundaryPoint) -> Complex64 {
        self.p * other.q - other.p * self.q
    }

    /// Chordal distance on the Riemann sphere, in `[0, 1]` for unit
    /// representatives.
    pub fn chordal_distance(&self, other: &BoundaryPoint) -> f64 {
        self.cross(other).norm()
    }
}

/// A complex binary quadratic form `f = a x² + 2b xy + c y²`, representing
/// a line of `H³` by its root pair on the boundary. Projective: nonzero
/// complex rescalings describe the same line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QForm {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl QForm {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Self {
        Self { a, b, c }
    }

    pub fn from_reals(a: f64, b: f64, c: f64) -> Self {
        Self::new(C::new(a, 0.0), C::new(b, 0.0), C::new(c, 0.0))
    }

    /// Discriminant `Δ = ac − b²`; nonzero exactly for genuine lines.
    pub fn discriminant(&self) -> Complex64 {
        self.a * self.c - self.b * self.b
    }

    /// Euclidean norm of the coefficient 3-vector.
    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr()).sqrt()
    }

    /// Scale-invariant measure of how far the form is from a double root;
    /// forms below [`DEGENERACY_THRESHOLD`] are unusable as lines.
    pub fn degeneracy(&self) -> f64 {
        let n2 = self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr();
        if n2 == 0.0 {
            0.0
        } else {
            self.discriminant().norm() / n2
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.degeneracy() < DEGENERACY_THRESHOLD
    }

    /// Canonical representative: rescaled so the largest-modulus coefficient
    /// becomes exactly `1`.
    pub fn normalized(&self) -> QForm {
        let coeffs = [self.a, self.b, self.c];
        let (mut best, mut best_n) = (self.a, self.a.norm_sqr());
        for &z in &coeffs[1..] {
            if z.norm_sqr() > best_n {
                best = z;
                best_n = z.norm_sqr();
            }
        }
        assert!(best_n > 0.0, "cannot normalize the zero form");
        QForm::new(self.a / best, self.b / best, self.c / best)
    }

    pub fn scaled(&self, lambda: Complex64) -> QForm {
        QForm::new(self.a * lambda, self.b * lambda, self.c * lambda)
    }

    /// Coefficient 3-vector rescaled to unit Euclidean norm.
    pub fn unit_coefficients(&self) -> [Complex64; 3] {
        let n = self.norm();
        [self.a / n, self.b / n, self.c / n]
    }
}

/// Polarization of the discriminant: `⟨f₁,f₂⟩ = a₁c₂ + a₂c₁ − 2b₁b₂`.
/// Symmetric, bilinear, and `⟨f,f⟩ = 2Δ(f)`. Vanishes exactly when the two
/// lines meet at right angle.
pub fn delta_pairing(f1: &QForm, f2: &QForm) -> Complex64 {
    f1.a * f2.c + f2.a * f1.c - 2.0 * f1.b * f2.b
}

/// Poisson bracket of two forms, i.e. their Jacobian divided by 4, read in
/// the `(a, 2b, c)` coefficient convention. The bracket of two lines is
/// their skewer; a (near-)degenerate output means the skewer construction
/// broke down and the caller must test [`QForm::is_degenerate`].
pub fn poisson_bracket(f1: &QForm, f2: &QForm) -> QForm {
    QForm::new(
        f1.a * f2.b - f2.a * f1.b,
        (f1.a * f2.c - f2.a * f1.c) / 2.0,
        f1.b * f2.c - f2.b * f1.c,
    )
}

/// The form vanishing exactly at the two given boundary points.
pub fn form_from_endpoints(e1: &BoundaryPoint, e2: &BoundaryPoint) -> Result<QForm, FormError> {
    if e1.chordal_distance(e2) < DEGENERACY_THRESHOLD {
        return Err(FormError::EqualEndpoints);
    }
    Ok(QForm::new(
        e1.q * e2.q,
        -(e1.p * e2.q + e2.p * e1.q) / 2.0,
        e1.p * e2.p,
    ))
}

/// The two projective roots of a form, as an unordered boundary pair.
///
/// Uses the cancellation-free homogeneous quadratic formula: with
/// `s = √(b²−ac)` on the branch aligned with `b`, the roots are
/// `(−(b+s) : a)` and `(c : −(b+s))`.
pub fn endpoints_from_form(f: &QForm) -> Result<(BoundaryPoint, BoundaryPoint), FormError> {
    if f.is_degenerate() {
        return Err(FormError::DegenerateForm);
    }
    let mut s = (f.b * f.b - f.a * f.c).sqrt();
    if (f.b.conj() * s).re < 0.0 {
        s = -s;
    }
    let t = f.b + s;
    Ok((BoundaryPoint::new(-t, f.a), BoundaryPoint::new(f.c, -t)))
}

/// `|⟨f₁,f₂⟩| / (‖f₁‖·‖f₂‖)`: zero iff the two lines meet at right angle;
/// invariant under rescaling either form.
pub fn right_angle_residual(f1: &QForm, f2: &QForm) -> f64 {
    delta_pairing(f1, f2).norm() / (f1.norm() * f2.norm())
}

/// Smallest singular value of the 3×3 matrix of unit-normalized coefficient
/// vectors; zero iff the three lines share a skewer.
pub fn common_skewer_residual(f1: &QForm, f2: &QForm, f3: &QForm) -> f64 {
    linalg::smallest_singular_value_c3(
        f1.unit_coefficients(),
        f2.unit_coefficients(),
        f3.unit_coefficients(),
    )
}

/// Determinant of the 3×3 coefficient matrix of three forms. Equal to
/// `⟨{f₁,f₂}, f₃⟩` as polynomials in the coefficients.
pub fn coefficient_determinant(f1: &QForm, f2: &QForm, f3: &QForm) -> Complex64 {
    f1.a * (f2.b * f3.c - f3.b * f2.c) - f1.b * (f2.a * f3.c - f3.a * f2.c)
        + f1.c * (f2.a * f3.b - f3.a * f2.b)
}

/// Scale-invariant alignment defect of two forms: zero iff they are complex
/// multiples of each other (the same line). Equals the sine of the Hermitian
/// angle between the coefficient vectors.
pub fn same_line_residual(f1: &QForm, f2: &QForm) -> f64 {
    let u = f1.unit_coefficients();
    let v = f2.unit_coefficients();
    let mut dot = C::new(0.0, 0.0);
    for k in 0..3 {
        dot += u[k].conj() * v[k];
    }
    (1.0 - dot.norm_sqr()).max(0.0).sqrt()
}

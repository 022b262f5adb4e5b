//! 2×2 symmetric stress tensors and their invariants.
//!
//! Only the three independent components are stored, so symmetry holds by
//! construction. Eigenvalues are always reported sorted, `λ1 ≤ λ2`, and the
//! eigen-angle is the orientation of the λ2-eigenvector in `(−π/2, π/2]`
//! (ties return 0) so that laminate direction searches get a deterministic
//! principal frame.

/// Symmetric 2D stress tensor `[[sxx, sxy], [sxy, syy]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressTensor {
    pub sxx: f64,
    pub syy: f64,
    pub sxy: f64,
}

impl StressTensor {
    pub const ZERO: StressTensor = StressTensor {
        sxx: 0.0,
        syy: 0.0,
        sxy: 0.0,
    };

    pub fn new(sxx: f64, syy: f64, sxy: f64) -> Self {
        Self { sxx, syy, sxy }
    }

    pub fn diag(a: f64, b: f64) -> Self {
        Self::new(a, b, 0.0)
    }

    /// Isotropic tensor `s·I`.
    pub fn isotropic(s: f64) -> Self {
        Self::new(s, s, 0.0)
    }

    /// Isotropic tensor of scalar intensity `s`, i.e. `(s/√2)·I` with
    /// `Tr σ² = s²`. This is the map between the envelope's scalar energy
    /// convention and the tensor convention.
    pub fn from_intensity(s: f64) -> Self {
        Self::isotropic(s / std::f64::consts::SQRT_2)
    }

    pub fn trace(&self) -> f64 {
        self.sxx + self.syy
    }

    pub fn det(&self) -> f64 {
        self.sxx * self.syy - self.sxy * self.sxy
    }

    /// Squared Frobenius norm `Tr(σ²) = sxx² + syy² + 2·sxy²`.
    pub fn frob2(&self) -> f64 {
        self.sxx * self.sxx + self.syy * self.syy + 2.0 * self.sxy * self.sxy
    }

    pub fn norm(&self) -> f64 {
        self.frob2().sqrt()
    }

    /// Sorted eigenvalues `(λ1, λ2)`, `λ1 ≤ λ2`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mid = 0.5 * self.trace();
        let half_diff = 0.5 * (self.sxx - self.syy);
        let r = (half_diff * half_diff + self.sxy * self.sxy).sqrt();
        (mid - r, mid + r)
    }

    /// Eigen-decomposition `(λ1, λ2, angle)` with `λ1 ≤ λ2` and `angle` the
    /// orientation of the λ2-eigenvector in `(−π/2, π/2]`; degenerate pairs
    /// (λ1 = λ2) return angle 0.
    pub fn eigen(&self) -> (f64, f64, f64) {
        let (l1, l2) = self.eigenvalues();
        if l2 - l1 == 0.0 {
            return (l1, l2, 0.0);
        }
        // λ2-eigenvector direction of [[sxx, sxy], [sxy, syy]].
        let mut angle = 0.5 * (2.0 * self.sxy).atan2(self.sxx - self.syy);
        // atan2 yields (−π/2, π/2]; fold the boundary case −π/2 onto +π/2.
        if angle <= -std::f64::consts::FRAC_PI_2 {
            angle += std::f64::consts::PI;
        }
        (l1, l2, angle)
    }

    /// Rebuild a tensor from eigenvalues and the λ2-eigenvector angle.
    pub fn from_eigen(l1: f64, l2: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        // λ2 on axis (c, s), λ1 on (−s, c).
        Self::new(
            l2 * c * c + l1 * s * s,
            l2 * s * s + l1 * c * c,
            (l2 - l1) * s * c,
        )
    }

    /// σ' = Q σ Qᵀ with Q the rotation by `angle`.
    pub fn rotate(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let (p, q, r) = (self.sxx, self.syy, self.sxy);
        Self::new(
            c * c * p + s * s * q - 2.0 * c * s * r,
            s * s * p + c * c * q + 2.0 * c * s * r,
            c * s * (p - q) + (c * c - s * s) * r,
        )
    }

    /// Mirror about the x-axis: (sxx, syy, −sxy).
    pub fn mirror_y(&self) -> Self {
        Self::new(self.sxx, self.syy, -self.sxy)
    }
}

impl std::ops::Add for StressTensor {
    type Output = StressTensor;
    fn add(self, rhs: StressTensor) -> StressTensor {
        StressTensor::new(self.sxx + rhs.sxx, self.syy + rhs.syy, self.sxy + rhs.sxy)
    }
}

impl std::ops::Sub for StressTensor {
    type Output = StressTensor;
    fn sub(self, rhs: StressTensor) -> StressTensor {
        StressTensor::new(self.sxx - rhs.sxx, self.syy - rhs.syy, self.sxy - rhs.sxy)
    }
}

impl std::ops::Mul<f64> for StressTensor {
    type Output = StressTensor;
    fn mul(self, k: f64) -> StressTensor {
        StressTensor::new(self.sxx * k, self.syy * k, self.sxy * k)
    }
}

/// `(trace, det, frob2)` of σ.
pub fn invariants(sigma: &StressTensor) -> (f64, f64, f64) {
    (sigma.trace(), sigma.det(), sigma.frob2())
}

/// `det(a − b)`: zero iff `a` and `b` are rank-one connected (or equal).
pub fn rank_one_gap(a: &StressTensor, b: &StressTensor) -> f64 {
    (*a - *b).det()
}

/// Polarized determinant: `det(A + uB) = det A + u·det_mix(A,B) + u²·det B`.
pub fn det_mix(a: &StressTensor, b: &StressTensor) -> f64 {
    a.sxx * b.syy + a.syy * b.sxx - 2.0 * a.sxy * b.sxy
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn invariants_identity() {
        let i = StressTensor::isotropic(1.0);
        assert_eq!(invariants(&i), (2.0, 1.0, 2.0));
    }

    #[test]
    fn invariants_diagonal() {
        let s = StressTensor::diag(2.0, 0.5);
        assert_eq!(invariants(&s), (2.5, 1.0, 4.25));
    }

    #[test]
    fn invariants_rank_one() {
        let s = StressTensor::new(1.0, 1.0, 1.0);
        assert_eq!(invariants(&s), (2.0, 0.0, 4.0));
    }

    #[test]
    fn eigen_diagonal() {
        let (l1, l2, angle) = StressTensor::diag(3.0, 1.0).eigen();
        assert_eq!((l1, l2), (1.0, 3.0));
        assert_eq!(angle, 0.0);
    }

    #[test]
    fn eigen_degenerate_pair() {
        let (l1, l2, angle) = StressTensor::isotropic(0.7).eigen();
        assert_eq!((l1, l2), (0.7, 0.7));
        assert!(angle.is_finite());
        assert_eq!(angle, 0.0);
    }

    #[test]
    fn eigen_pure_shear() {
        let (l1, l2, angle) = StressTensor::new(0.0, 0.0, 1.0).eigen();
        assert_relative_eq!(l1, -1.0, max_relative = 1e-12);
        assert_relative_eq!(l2, 1.0, max_relative = 1e-12);
        assert_relative_eq!(angle, std::f64::consts::FRAC_PI_4, max_relative = 1e-12);
    }

    #[test]
    fn rank_one_gap_cases() {
        let a = StressTensor::diag(1.0, 1.0);
        assert_eq!(rank_one_gap(&a, &a), 0.0);
        assert_eq!(rank_one_gap(&a, &StressTensor::diag(0.0, 1.0)), 0.0);
        assert_eq!(
            rank_one_gap(&StressTensor::diag(2.0, 1.0), &StressTensor::diag(1.0, 2.0)),
            -1.0
        );
    }

    fn arb_tensor() -> impl Strategy<Value = StressTensor> {
        (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64)
            .prop_map(|(a, b, c)| StressTensor::new(a, b, c))
    }

    proptest! {
        #[test]
        fn eigen_reconstruct_roundtrip(t in arb_tensor()) {
            let (l1, l2, angle) = t.eigen();
            prop_assert!(l1 <= l2);
            let r = StressTensor::from_eigen(l1, l2, angle);
            let scale = 1.0 + t.norm();
            prop_assert!((r.sxx - t.sxx).abs() <= 1e-12 * scale);
            prop_assert!((r.syy - t.syy).abs() <= 1e-12 * scale);
            prop_assert!((r.sxy - t.sxy).abs() <= 1e-12 * scale);
        }

        #[test]
        fn eigen_consistent_with_trace_det(t in arb_tensor()) {
            let (l1, l2) = t.eigenvalues();
            let scale = 1.0 + t.norm() * t.norm();
            prop_assert!((l1 * l2 - t.det()).abs() <= 1e-12 * scale);
            prop_assert!((l1 + l2 - t.trace()).abs() <= 1e-12 * scale);
        }

        #[test]
        fn invariants_rotation_invariant(t in arb_tensor(), theta in -3.2..3.2f64) {
            let r = t.rotate(theta);
            let scale = 1.0 + t.norm() * t.norm();
            prop_assert!((r.trace() - t.trace()).abs() <= 1e-12 * scale);
            prop_assert!((r.det() - t.det()).abs() <= 1e-12 * scale);
            prop_assert!((r.frob2() - t.frob2()).abs() <= 1e-12 * scale);
        }
    }
}

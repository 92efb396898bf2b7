//! ULA steering vectors, fixed surface phase profiles, and pattern gains.
//!
//! Each surface is a uniform linear array of unit-amplitude phase-shifting
//! elements with centered indexing (`m_bar = m - (N-1)/2`), so the surface
//! center is the phase reference. A profile is designed once, at a single
//! wavenumber; swept across a wide chirp the fixed phases steer different
//! directions at different frequencies (beam squint), which is what
//! decorrelates the sensing-matrix columns downstream.
//!
//! Convention: `steering_vector` element `m` is `exp(-j k m_bar d cos(theta))`.
//! `pattern_gain(.., theta_in, theta_out)` composes `a(theta_out)^H Psi
//! a(theta_in)`; callers modeling physical reflection pass the *arrival*
//! direction of the incoming wave as `theta_in` (the supplement of the bearing
//! of the source), which is what makes the composed gain match explicit
//! per-element propagation.

use alloc::vec::Vec;
use libm::{cos, sincos};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArrayError {
    #[error("profile length {profile} does not match array size {elements}")]
    LengthMismatch { profile: usize, elements: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Uniform linear array layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UlaSpec {
    n_elements: usize,
    spacing: f64,
}

impl UlaSpec {
    pub fn new(n_elements: usize, spacing: f64) -> Result<Self, ArrayError> {
        if n_elements < 1 {
            return Err(ArrayError::InvalidParameter("need at least one element"));
        }
        if !(spacing > 0.0 && spacing.is_finite()) {
            return Err(ArrayError::InvalidParameter("spacing must be > 0"));
        }
        Ok(Self {
            n_elements,
            spacing,
        })
    }

    /// Standard half-wavelength spacing at the design wavenumber.
    pub fn half_wavelength(n_elements: usize, k_design: f64) -> Result<Self, ArrayError> {
        if !(k_design > 0.0) {
            return Err(ArrayError::InvalidParameter("wavenumber must be > 0"));
        }
        Self::new(n_elements, core::f64::consts::PI / k_design)
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Centered element offset `m_bar * spacing` of element `m`.
    pub fn element_offset(&self, m: usize) -> f64 {
        (m as f64 - (self.n_elements as f64 - 1.0) / 2.0) * self.spacing
    }
}

/// Fixed per-element phase response of one surface (the diagonal of Psi).
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseProfile {
    phases: Vec<f64>,
    steer_angle: f64,
    design_wavenumber: f64,
}

impl PhaseProfile {
    /// A profile from raw phases (radians). Amplitude is always unity.
    pub fn from_phases(phases: Vec<f64>, steer_angle: f64, design_wavenumber: f64) -> Self {
        Self {
            phases,
            steer_angle,
            design_wavenumber,
        }
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn steer_angle(&self) -> f64 {
        self.steer_angle
    }

    pub fn design_wavenumber(&self) -> f64 {
        self.design_wavenumber
    }

    /// Unit-modulus phasor of element `m`.
    pub fn phasor(&self, m: usize) -> Complex64 {
        let (s, c) = sincos(self.phases[m]);
        Complex64::new(c, s)
    }
}

/// Plane-wave response vector: element `m` is `exp(-j k m_bar d cos(theta))`.
pub fn steering_vector(ula: &UlaSpec, k: f64, theta: f64) -> Vec<Complex64> {
    let ct = cos(theta);
    (0..ula.n_elements)
        .map(|m| {
            let (s, c) = sincos(-k * ula.element_offset(m) * ct);
            Complex64::new(c, s)
        })
        .collect()
}

/// Fixed profile steering the broadside-illuminated surface toward `steer` at
/// `k_design`: element phases are those of the steering vector itself,
/// `-k_design * m_bar * spacing * cos(steer)`, so the composed gain at
/// (k_design, broadside-in, steer-out) is exactly N.
pub fn beamform_profile(ula: &UlaSpec, k_design: f64, steer: f64) -> PhaseProfile {
    let ct = cos(steer);
    let phases = (0..ula.n_elements)
        .map(|m| -k_design * ula.element_offset(m) * ct)
        .collect();
    PhaseProfile::from_phases(phases, steer, k_design)
}

/// Surface response to an incoming plane wave: `Psi * a(theta_in)`,
/// element-wise product of the profile phasors with the steering vector.
pub fn effective_response(
    profile: &PhaseProfile,
    ula: &UlaSpec,
    k: f64,
    theta_in: f64,
) -> Result<Vec<Complex64>, ArrayError> {
    if profile.len() != ula.n_elements {
        return Err(ArrayError::LengthMismatch {
            profile: profile.len(),
            elements: ula.n_elements,
        });
    }
    let mut v = steering_vector(ula, k, theta_in);
    for (m, z) in v.iter_mut().enumerate() {
        *z *= profile.phasor(m);
    }
    Ok(v)
}

/// Composed surface gain `a(theta_out)^H Psi a(theta_in)`.
///
/// Evaluated as a single fused phase sum per element; magnitude is bounded by
/// N with equality when all element phases align.
pub fn pattern_gain(
    profile: &PhaseProfile,
    ula: &UlaSpec,
    k: f64,
    theta_in: f64,
    theta_out: f64,
) -> Result<Complex64, ArrayError> {
    if profile.len() != ula.n_elements {
        return Err(ArrayError::LengthMismatch {
            profile: profile.len(),
            elements: ula.n_elements,
        });
    }
    let u = k * (cos(theta_out) - cos(theta_in));
    let mut acc = Complex64::ZERO;
    for m in 0..ula.n_elements {
        let (s, c) = sincos(profile.phases[m] + u * ula.element_offset(m));
        acc += Complex64::new(c, s);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cdot;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use core::f64::consts::PI;
    use std::vec;

    const K240: f64 = 2.0 * PI * 240e9 / crate::SPEED_OF_LIGHT;

    #[test]
    fn broadside_steering_is_all_ones() {
        let ula = UlaSpec::new(8, 0.01).unwrap();
        for z in steering_vector(&ula, 5000.0, PI / 2.0) {
            assert_abs_diff_eq!(z.re, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(z.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn two_element_endfire_hand_value() {
        // N = 2, half-wavelength spacing, theta = 0: offsets are -/+ lambda/4,
        // so the entries are exp(+/- j pi/2) and differ by pi in phase.
        let k = 2.0 * PI / 0.00125; // lambda = 1.25 mm
        let ula = UlaSpec::new(2, 0.00125 / 2.0).unwrap();
        let v = steering_vector(&ula, k, 0.0);
        assert_abs_diff_eq!(v[0].re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[0].im, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1].re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1].im, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn mirror_angle_conjugates() {
        let ula = UlaSpec::new(5, 0.0007).unwrap();
        let a = steering_vector(&ula, K240, 1.1);
        let b = steering_vector(&ula, K240, PI - 1.1);
        for (x, y) in a.iter().zip(&b) {
            assert_abs_diff_eq!(x.re, y.re, epsilon = 1e-12);
            assert_abs_diff_eq!(x.im, -y.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn steering_entries_unit_modulus() {
        let ula = UlaSpec::new(257, 0.000624).unwrap();
        for &theta in &[0.3, 1.0, 2.6] {
            for z in steering_vector(&ula, K240, theta) {
                assert_abs_diff_eq!(z.norm(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn broadside_profile_is_zero_phase() {
        let ula = UlaSpec::new(16, 0.0006).unwrap();
        let p = beamform_profile(&ula, K240, PI / 2.0);
        for &phi in p.phases() {
            assert_abs_diff_eq!(phi, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn identity_profile_preserves_steering_vector() {
        let ula = UlaSpec::new(9, 0.0006).unwrap();
        let identity = PhaseProfile::from_phases(vec![0.0; 9], PI / 2.0, K240);
        let a = steering_vector(&ula, K240, 0.8);
        let eff = effective_response(&identity, &ula, K240, 0.8).unwrap();
        for (x, y) in a.iter().zip(&eff) {
            assert_abs_diff_eq!((x - y).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn effective_response_rejects_length_mismatch() {
        let ula = UlaSpec::new(4, 0.0006).unwrap();
        let p = PhaseProfile::from_phases(vec![0.0; 5], 0.3, K240);
        assert!(matches!(
            effective_response(&p, &ula, K240, 1.0),
            Err(ArrayError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn effective_response_unit_modulus() {
        let ula = UlaSpec::half_wavelength(64, K240).unwrap();
        let p = beamform_profile(&ula, K240, 15.0_f64.to_radians());
        for &theta in &[0.2, 1.3, 2.9] {
            for z in effective_response(&p, &ula, K240 * 1.04, theta).unwrap() {
                assert_abs_diff_eq!(z.norm(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn design_point_identities() {
        let ula = UlaSpec::half_wavelength(32, K240).unwrap();
        let steer = 15.0_f64.to_radians();
        let p = beamform_profile(&ula, K240, steer);
        // Incidence from the mirror of the steer direction cancels the
        // profile exactly.
        let eff = effective_response(&p, &ula, K240, PI - steer).unwrap();
        for z in eff {
            assert_abs_diff_eq!((z - Complex64::ONE).norm(), 0.0, epsilon = 1e-10);
        }
        // Broadside illumination reaches gain N at the steer angle.
        let g = pattern_gain(&p, &ula, K240, PI / 2.0, steer).unwrap();
        assert_relative_eq!(g.re, 32.0, epsilon = 1e-9);
        assert_abs_diff_eq!(g.im, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn gain_matches_composed_ops_and_bound() {
        let ula = UlaSpec::half_wavelength(24, K240).unwrap();
        let p = beamform_profile(&ula, K240, 1.3);
        for &(k, ti, to) in &[(K240, 0.8, 0.4), (1.1 * K240, 2.0, 1.3), (0.9 * K240, 1.5, 2.8)] {
            let fused = pattern_gain(&p, &ula, k, ti, to).unwrap();
            let eff = effective_response(&p, &ula, k, ti).unwrap();
            let composed = cdot(&steering_vector(&ula, k, to), &eff);
            assert_abs_diff_eq!((fused - composed).norm(), 0.0, epsilon = 1e-9);
            assert!(fused.norm() <= 24.0 + 1e-9);
        }
    }

    #[test]
    fn single_element_gain_is_unit() {
        let ula = UlaSpec::new(1, 0.0006).unwrap();
        let p = beamform_profile(&ula, K240, 0.7);
        for &(k, ti, to) in &[(K240, 0.3, 2.1), (1.2 * K240, 1.0, 1.0)] {
            let g = pattern_gain(&p, &ula, k, ti, to).unwrap();
            assert_abs_diff_eq!(g.norm(), 1.0, epsilon = 1e-12);
        }
    }

    fn argmax_gain(
        ula: &UlaSpec,
        p: &PhaseProfile,
        k: f64,
        grid_step_deg: f64,
        window_deg: (f64, f64),
    ) -> f64 {
        let mut best = (0.0, -1.0);
        let steps = ((window_deg.1 - window_deg.0) / grid_step_deg) as usize;
        for i in 0..=steps {
            let theta = (window_deg.0 + i as f64 * grid_step_deg).to_radians();
            if theta >= PI {
                break;
            }
            let g = pattern_gain(p, ula, k, PI / 2.0, theta).unwrap().norm();
            if g > best.1 {
                best = (theta, g);
            }
        }
        best.0
    }

    #[test]
    fn steered_peak_sits_at_design_angle() {
        // 256 elements steered to 15 deg at 240 GHz: argmax on a 0.1 deg grid.
        let ula = UlaSpec::half_wavelength(256, K240).unwrap();
        let p = beamform_profile(&ula, K240, 15.0_f64.to_radians());
        let peak = argmax_gain(&ula, &p, K240, 0.1, (5.0, 175.0));
        assert_abs_diff_eq!(peak.to_degrees(), 15.0, epsilon = 0.051);
    }

    #[test]
    fn squint_follows_cosine_scaling() {
        // cos(peak) * k = cos(steer) * k_design within one 0.05 deg grid step,
        // for k within +-12.5% of the design wavenumber (the 60 GHz band at
        // 240 GHz carrier). The main lobe is tracked in a +-8 deg window
        // around its predicted trajectory: sweeping k with lambda/2-at-design
        // spacing pulls a full-amplitude grating lobe into visible space near
        // endfire, and a 15 deg steer squints invisible for
        // k < cos(15 deg) * k_design, so the down-shift side is checked at the
        // 75 deg steer where the predicted peak stays real.
        let ula = UlaSpec::half_wavelength(256, K240).unwrap();
        for &(steer_deg, rels) in &[
            (15.0, &[1.0, 1.05, 1.125][..]),
            (75.0, &[0.875, 0.95, 1.0, 1.05, 1.125][..]),
        ] {
            let steer = (steer_deg as f64).to_radians();
            let p = beamform_profile(&ula, K240, steer);
            let mut prev_peak = 0.0;
            for &rel in rels {
                let k = rel * K240;
                let predicted = libm::acos(cos(steer) / rel);
                let window = (predicted.to_degrees() - 8.0, predicted.to_degrees() + 8.0);
                let peak = argmax_gain(&ula, &p, k, 0.05, window);
                assert_abs_diff_eq!(peak, predicted, epsilon = 0.1_f64.to_radians());
                // The peak moves monotonically away from the axis as k grows.
                assert!(peak > prev_peak);
                prev_peak = peak;
            }
        }
    }
}

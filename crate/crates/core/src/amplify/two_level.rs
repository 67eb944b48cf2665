// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact two-level reduction.
//!
//! Both iteration operators leave `span{|t>, |s_perp>}` invariant. In that
//! basis `|s> = (alpha, sqrt(1 - alpha^2))` and every operator is a 2x2
//! matrix.

use nalgebra::{Matrix2, Vector2};

use super::Algorithm;
use crate::error::{Error, Result};
use crate::qcore::{overlap, StateVector, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct TwoLevelModel {
    alpha: f64,
    phi: f64,
    varphi: f64,
    /// Amplitudes on `(|t>, |s_perp>)`.
    state: Vector2<C64>,
}

impl TwoLevelModel {
    /// Model prepared in `|s>`.
    pub fn new(alpha: f64, phi: f64, varphi: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::DegenerateOverlap { alpha });
        }
        if !(phi.is_finite() && varphi.is_finite()) {
            return Err(Error::InvalidConfig("phases must be finite".into()));
        }
        Ok(Self {
            alpha,
            phi,
            varphi,
            state: Self::source_amplitudes(alpha),
        })
    }

    fn source_amplitudes(alpha: f64) -> Vector2<C64> {
        Vector2::new(C64::new(alpha, 0.0), C64::new((1.0 - alpha * alpha).sqrt(), 0.0))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn varphi(&self) -> f64 {
        self.varphi
    }

    /// `(a_t, a_perp)`.
    pub fn amplitudes(&self) -> [C64; 2] {
        [self.state[0], self.state[1]]
    }

    pub fn target_probability(&self) -> f64 {
        self.state[0].norm_sqr()
    }

    /// Applies a 2x2 operator in the `(|t>, |s_perp>)` basis.
    pub fn apply(&mut self, op: &Matrix2<C64>) {
        self.state = op * self.state;
    }

    fn selective_source(&self, omega: f64) -> Matrix2<C64> {
        let s = Self::source_amplitudes(self.alpha);
        let factor = C64::new(1.0, 0.0) - C64::from_polar(1.0, omega);
        Matrix2::identity() - (s * s.transpose()) * factor
    }

    fn selective_target(omega: f64) -> Matrix2<C64> {
        Matrix2::from_diagonal(&Vector2::new(C64::from_polar(1.0, omega), C64::new(1.0, 0.0)))
    }

    /// The 2x2 restriction of `G` or `T`.
    pub fn operator(&self, algorithm: Algorithm) -> Matrix2<C64> {
        let g = |phi: f64, varphi: f64| self.selective_source(phi) * Self::selective_target(varphi);
        match algorithm {
            Algorithm::Original => g(self.phi, self.varphi),
            Algorithm::Modified => g(-self.phi, -self.varphi) * g(self.phi, self.varphi),
        }
    }

    /// Lifts the two amplitudes back into the full space spanned by `source`
    /// and the basis state `target`.
    pub fn embed(&self, source: &StateVector, target: usize) -> Result<StateVector> {
        let t = StateVector::basis(source.dim(), target)?;
        let ts = overlap(&t, source)?;
        let alpha = ts.norm();
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::DegenerateOverlap { alpha });
        }
        let chi = ts / alpha;
        let beta = (1.0 - alpha * alpha).sqrt();
        let amps = source
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let perp = if i == target { C64::new(0.0, 0.0) } else { a / beta };
                let along = if i == target {
                    self.state[0] * chi
                } else {
                    C64::new(0.0, 0.0)
                };
                along + self.state[1] * perp
            })
            .collect();
        StateVector::new(amps)
    }
}

/// Advances the model by one application of `G` or `T`.
pub fn two_level_step(m: &TwoLevelModel, algorithm: Algorithm) -> TwoLevelModel {
    TwoLevelModel {
        state: m.operator(algorithm) * m.state,
        ..m.clone()
    }
}

/// `(q, P_target)` for `q = 0..=steps` starting from `|s>`.
pub fn two_level_schedule(
    alpha: f64,
    phi: f64,
    varphi: f64,
    algorithm: Algorithm,
    steps: usize,
) -> Result<Vec<(usize, f64)>> {
    let mut m = TwoLevelModel::new(alpha, phi, varphi)?;
    let op = m.operator(algorithm);
    let mut out = Vec::with_capacity(steps + 1);
    out.push((0, m.target_probability()));
    for q in 1..=steps {
        m.state = op * m.state;
        out.push((q, m.target_probability()));
    }
    Ok(out)
}

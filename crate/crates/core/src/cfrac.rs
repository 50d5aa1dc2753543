//! Finite-depth evaluation of weighted Dyck-path continued fractions.
//!
//! Up-steps weigh 1; a down-step from height `j` weighs `lambdas[j-1]` unless it
//! follows a peak, in which case it weighs `mus[j-1]`. The generating function
//! of all weighted paths is
//!
//! ```text
//! 1 / (1 - (mu_1 - lambda_1) - lambda_1 / (1 - (mu_2 - lambda_2) - lambda_2 / ...))
//! ```
//!
//! evaluated here bottom-up for a fixed number of levels, with a tail value
//! standing in for everything below the last one.

use alloc::vec;
use alloc::vec::Vec;

use crate::chebyshev::r_series;
use crate::series::{catalan_series, BivarSeries, Series};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    pub lambdas: Vec<BivarSeries>,
    pub mus: Vec<BivarSeries>,
    pub depth: usize,
    pub tail: BivarSeries,
}

impl WeightSpec {
    /// Every level weighted `weight` for both step kinds.
    pub fn uniform(weight: BivarSeries, depth: usize, tail: BivarSeries) -> Self {
        WeightSpec {
            lambdas: vec![weight.clone(); depth],
            mus: vec![weight; depth],
            depth,
            tail,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (what, have) in [("lambda", self.lambdas.len()), ("mu", self.mus.len())] {
            if have < self.depth {
                return Err(Error::ShortWeights { what, have, depth: self.depth });
            }
        }
        Ok(())
    }
}

/// Evaluates `spec` truncated at `x^order` and `z^z_order`.
///
/// When every lambda has no constant term in `x` and `depth > order`, the
/// result does not depend on the tail.
pub fn rv_cfrac(spec: &WeightSpec, order: usize, z_order: usize) -> Result<BivarSeries> {
    spec.validate()?;
    let one = BivarSeries::one(z_order, order);
    let mut value = spec.tail.truncate(z_order, order);
    for level in (1..=spec.depth).rev() {
        let lambda = spec.lambdas[level - 1].truncate(z_order, order);
        let mu = spec.mus[level - 1].truncate(z_order, order);
        let denom = &(&(&one - &mu) + &lambda) - &(&lambda * &value);
        value = denom
            .reciprocal()
            .map_err(|_| Error::FractionLevelNotInvertible { level })?;
    }
    Ok(value)
}

/// The uniform fraction with every weight `x`; equals `C(x)` once
/// `depth > order`.
pub fn catalan_cfrac(depth: usize, order: usize) -> Series {
    let x = BivarSeries::from_series(&Series::x(order), 0);
    let spec = WeightSpec::uniform(x, depth, BivarSeries::one(0, order));
    rv_cfrac(&spec, order, 0)
        .expect("uniform weights have invertible levels")
        .slice(0)
}

/// How the marked peak down-step at height `k` is weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeakMark {
    /// `mu_k = x z`: the `z^r` slice counts by semilength.
    Semilength,
    /// `mu_k = z`: the marked down-steps carry no `x`, so the `z^r` slice is
    /// the semilength slice divided by `x^r`.
    Literal,
}

/// Marks peaks at height `k >= 1` with `z`: a `k`-level fraction of `x`
/// weights whose last level is `1 - xz - x^2 C^2`. The `z^r` slice is the
/// generating function for paths with exactly `r` peaks at height `k`.
pub fn peak_bivar_cfrac(k: usize, order: usize, z_order: usize) -> Result<BivarSeries> {
    peak_bivar_cfrac_marked(k, order, z_order, PeakMark::Semilength)
}

pub fn peak_bivar_cfrac_marked(
    k: usize,
    order: usize,
    z_order: usize,
    mark: PeakMark,
) -> Result<BivarSeries> {
    if k == 0 {
        return Err(Error::HeightTooSmall { k, min: 1 });
    }
    let c = catalan_series(order);
    let x2c2 = (&c * &c).shift(2);
    let mark_weight = match mark {
        PeakMark::Semilength => Series::x(order),
        PeakMark::Literal => Series::one(order),
    };
    let last = &(&BivarSeries::one(z_order, order) - &BivarSeries::z_monomial(&mark_weight, 1, z_order))
        - &BivarSeries::from_series(&x2c2, z_order);
    let tail = last
        .reciprocal()
        .map_err(|_| Error::FractionLevelNotInvertible { level: k })?;
    let x = BivarSeries::from_series(&Series::x(order), z_order);
    rv_cfrac(&WeightSpec::uniform(x, k - 1, tail), order, z_order)
}

/// `R_k (1 - z R_{k-1} - x A R_{k-1}) / (1 - z R_k - x A R_k)` for `k >= 1`.
pub fn lemma_rhs(k: usize, a: &Series, order: usize, z_order: usize) -> Result<BivarSeries> {
    if k == 0 {
        return Err(Error::HeightTooSmall { k, min: 1 });
    }
    let one = BivarSeries::one(z_order, order);
    let z = BivarSeries::z_monomial(&Series::one(order), 1, z_order);
    let xa = BivarSeries::from_series(&a.truncate(order).shift(1), z_order);
    let part = |r: &Series| {
        let r = BivarSeries::from_series(r, z_order);
        &(&one - &(&z * &r)) - &(&xa * &r)
    };
    let r_k = r_series(k, order);
    let r_prev = r_series(k - 1, order);
    let denom = part(&r_k).reciprocal()?;
    Ok((&part(&r_prev) * &denom).mul_series(&r_k))
}

/// The `k`-level fraction `1/(1 - x/(1 - x/ ... /(1 - z - xA)))`, evaluated
/// directly from the bottom.
pub fn iterated_fraction(k: usize, a: &Series, order: usize, z_order: usize) -> Result<BivarSeries> {
    if k == 0 {
        return Err(Error::HeightTooSmall { k, min: 1 });
    }
    let one = BivarSeries::one(z_order, order);
    let z = BivarSeries::z_monomial(&Series::one(order), 1, z_order);
    let xa = BivarSeries::from_series(&a.truncate(order).shift(1), z_order);
    let mut value = (&(&one - &z) - &xa)
        .reciprocal()
        .map_err(|_| Error::FractionLevelNotInvertible { level: k })?;
    let x = BivarSeries::from_series(&Series::x(order), z_order);
    for level in (1..k).rev() {
        value = (&one - &(&x * &value))
            .reciprocal()
            .map_err(|_| Error::FractionLevelNotInvertible { level })?;
    }
    Ok(value)
}

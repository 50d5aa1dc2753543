//! Closed-form generating functions for peaks and valleys at a fixed height.
//!
//! All functions return a [`Series`] whose `x^n` coefficient is a count of
//! Dyck paths of semilength `n`.

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebyshev::{r_series, u_inv_sq_series};
use crate::series::{catalan_series, Series};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatKind {
    Peak,
    Valley,
}

impl StatKind {
    pub const ALL: [StatKind; 2] = [StatKind::Peak, StatKind::Valley];

    pub fn as_str(self) -> &'static str {
        match self {
            StatKind::Peak => "peak",
            StatKind::Valley => "valley",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which generating function to compute: `kind` at height `k`, exactly `r`
/// occurrences, truncated at `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfQuery {
    pub kind: StatKind,
    pub k: usize,
    pub r: usize,
    pub order: usize,
}

impl GfQuery {
    pub fn evaluate(&self) -> Series {
        stat_gf(self.kind, self.k, self.r, self.order)
    }
}

pub fn stat_gf(kind: StatKind, k: usize, r: usize, order: usize) -> Series {
    match kind {
        StatKind::Peak => peak_gf(k, r, order),
        StatKind::Valley => valley_gf(k, r, order),
    }
}

fn exponent(r: usize) -> u32 {
    u32::try_from(r).expect("occurrence count fits in u32")
}

/// `1 / (1 - x (R_{k+1} - 1) C)`, the geometric sum over dips below level `k + 1`.
fn dip_factor(k: usize, c: &Series, order: usize) -> Series {
    let one = Series::one(order);
    let r_minus_one = &r_series(k + 1, order) - &one;
    (&one - &(&r_minus_one * c).shift(1))
        .reciprocal()
        .expect("constant term is 1")
}

/// Paths with exactly `r` valleys at height `k`:
/// `delta_{r,0} R_{k+1} + x^r C^{r+1} (x^{k+1}/q_{k+1}^2) / (1 - x(R_{k+1}-1)C)^{r+1}`.
pub fn valley_gf(k: usize, r: usize, order: usize) -> Series {
    let c = catalan_series(order);
    let blocks = &c * &dip_factor(k, &c, order);
    let crossing = &blocks.pow(exponent(r + 1)) * &u_inv_sq_series(k + 1, order);
    let mut gf = crossing.shift(r);
    if r == 0 {
        gf = &gf + &r_series(k + 1, order);
    }
    gf
}

/// `1 / (1 - x^2 C^2)`, the Fine-number series.
fn fine_series(c: &Series, order: usize) -> Series {
    let x2c2 = (c * c).shift(2);
    (&Series::one(order) - &x2c2).reciprocal().expect("constant term is 1")
}

/// Paths with exactly `r` peaks at height `k`.
///
/// Height 0 never carries a peak. At height 1 the path splits around its `r`
/// low arches `UD` into `r + 1` possibly empty blocks with no peak at height 1,
/// giving `x^r / (1 - x^2 C^2)^{r+1}`. Heights `k >= 2` reduce to valleys at
/// `k - 2`.
pub fn peak_gf(k: usize, r: usize, order: usize) -> Series {
    match k {
        0 if r == 0 => catalan_series(order),
        0 => Series::zero(order),
        1 => {
            let c = catalan_series(order);
            fine_series(&c, order).pow(exponent(r + 1)).shift(r)
        }
        _ => valley_gf(k - 2, r, order),
    }
}

/// The height-1 form with numerator `x^{3r+2} C^{2r+2}`, which requires every
/// block between low arches to be nonempty. Agrees with [`peak_gf`] only at
/// `r = 0`; kept so the difference can be reported.
pub fn peak1_printed_gf(r: usize, order: usize) -> Series {
    let c = catalan_series(order);
    let numer = c.pow(exponent(2 * r + 2)).shift(3 * r + 2);
    let mut gf = &numer * &fine_series(&c, order).pow(exponent(r + 1));
    if r == 0 {
        gf = &gf + &Series::one(order);
    }
    gf
}

/// Excursions above level `k + 1` (measured from that level) with no valley at
/// height `k`: `C / (1 - x (R_{k+1} - 1) C)`.
pub fn no_valley_band_gf(k: usize, order: usize) -> Series {
    let c = catalan_series(order);
    &c * &dip_factor(k, &c, order)
}

/// Paths of semilength `n` with exactly `r` valleys at height 0, taken as the
/// coefficient of `x^{n-r-1}` in `C^{r+1}`.
pub fn valley0_closed_count(n: usize, r: usize) -> BigUint {
    if n == 0 {
        return if r == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if n <= r {
        return BigUint::zero();
    }
    let m = n - r - 1;
    let coeff = catalan_series(m).pow(exponent(r + 1)).coeffs()[m].to_integer();
    coeff.to_biguint().expect("Catalan powers are nonnegative")
}

fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `(r+1)/n * binom(2n-r-1, n+1)` taken literally; `None` at `n = 0`.
pub fn valley0_binomial_literal(n: usize, r: usize) -> Option<BigRational> {
    if n == 0 {
        return None;
    }
    let (n, r) = (n as i64, r as i64);
    let b = binomial_i(2 * n - r - 1, n + 1);
    Some(BigRational::new(BigInt::from(r + 1) * b, BigInt::from(n)))
}

/// The ballot form `(r+1)/(2n-r-1) * binom(2n-r-1, n)`; `None` when the
/// denominator vanishes or is negative.
pub fn valley0_binomial_ballot(n: usize, r: usize) -> Option<BigRational> {
    let top = 2 * n as i64 - r as i64 - 1;
    if top <= 0 {
        return None;
    }
    let b = binomial_i(top, n as i64);
    Some(BigRational::new(BigInt::from(r as i64 + 1) * b, BigInt::from(top)))
}

/// No peaks at height `k >= 2` from the standalone formula
/// `R_{k-1} + C (x^{k-1}/q_{k-1}^2) / (1 - x(R_{k-1}-1)C)`.
pub fn peak_k0_via_remark(k: usize, order: usize) -> Result<Series> {
    if k < 2 {
        return Err(Error::HeightTooSmall { k, min: 2 });
    }
    let c = catalan_series(order);
    let one = Series::one(order);
    let r = r_series(k - 1, order);
    let denom = &one - &(&(&r - &one) * &c).shift(1);
    let tail = &(&c * &u_inv_sq_series(k - 1, order)) * &denom.reciprocal()?;
    Ok(&r + &tail)
}

/// `[x^m] C(x)^j = j/(2m+j) * binom(2m+j, m)`, for `j >= 1`.
pub fn catalan_power_coefficient(m: usize, j: usize) -> BigUint {
    assert!(j >= 1, "power must be positive");
    let top = 2 * m + j;
    let b: BigUint = binomial(BigUint::from(top), BigUint::from(m));
    b * BigUint::from(j) / BigUint::from(top)
}

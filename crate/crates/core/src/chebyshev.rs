//! Chebyshev-derived rational functions without radicals.
//!
//! With `q_k(x) = x^{k/2} U_k(1/(2 sqrt x))` the second-kind recurrence
//! becomes `q_0 = q_1 = 1`, `q_{k+1} = q_k - x q_{k-1}`, an integer polynomial
//! with constant term 1. Then
//!
//! * `R_k = q_{k-1} / q_k` (with `R_0 = 0`),
//! * `1 / U_k(1/(2 sqrt x))^2 = x^k / q_k^2`,
//! * the corridor function `F_k` in the step variable `t` is `t^k / q_{k+1}(t^2)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::series::Series;

/// Integer polynomial in `x`; `coeffs[i]` multiplies `x^i`. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Multiplication by `x^p`.
    pub fn shift(&self, p: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); p];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    /// Substitutes `x -> x^stride`, e.g. `x -> t^2`.
    pub fn spread(&self, stride: usize) -> IntPoly {
        if self.is_zero() || stride == 0 {
            return IntPoly::new(vec![self.coeffs.iter().sum()]);
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn to_series(&self, order: usize) -> Series {
        Series::from_integers(self.coeffs.iter().cloned(), order)
    }

    /// Human-readable form such as `1 - 3x + x^2`.
    pub fn to_expression(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if i == 0 || !mag.is_one() {
                let _ = write!(out, "{mag}");
            }
            match i {
                0 => {}
                1 => out.push('x'),
                _ => {
                    let _ = write!(out, "x^{i}");
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expression())
    }
}

/// `q_k`, the renormalized second-kind Chebyshev polynomial.
pub fn q_poly(k: usize) -> IntPoly {
    let (mut prev, mut cur) = (IntPoly::one(), IntPoly::one());
    for _ in 1..k {
        let next = cur.sub(&prev.shift(1));
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `R_k = q_{k-1} / q_k` kept as a polynomial ratio.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RkRational {
    pub k: usize,
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

impl RkRational {
    pub fn new(k: usize) -> Self {
        let numerator = if k == 0 { IntPoly::zero() } else { q_poly(k - 1) };
        RkRational { k, numerator, denominator: q_poly(k) }
    }

    pub fn to_series(&self, order: usize) -> Series {
        let inv = self
            .denominator
            .to_series(order)
            .reciprocal()
            .expect("q_k has constant term 1");
        &self.numerator.to_series(order) * &inv
    }
}

/// Series of `R_k` by polynomial division. Its `x^n` coefficient counts Dyck
/// paths of semilength `n` with maximum height at most `k - 1`.
pub fn r_series(k: usize, order: usize) -> Series {
    RkRational::new(k).to_series(order)
}

/// Series of `R_k` by iterating `R_{m+1} = 1 / (1 - x R_m)` from `R_0 = 0`.
pub fn r_series_iterated(k: usize, order: usize) -> Series {
    let one = Series::one(order);
    let mut r = Series::zero(order);
    for _ in 0..k {
        r = (&one - &r.shift(1)).reciprocal().expect("constant term is 1");
    }
    r
}

/// `x^k / q_k^2`, the series of `1 / U_k(1/(2 sqrt x))^2`.
pub fn u_inv_sq_series(k: usize, order: usize) -> Series {
    let q = q_poly(k);
    let q2 = q.mul(&q).to_series(order);
    q2.reciprocal().expect("q_k has constant term 1").shift(k)
}

/// `t^k / q_{k+1}(t^2)`: paths of `n` unit steps from height 0 to height `k`
/// that stay inside the band `[0, k]`, counted by the `t^n` coefficient.
pub fn f_series_t(k: usize, order: usize) -> Series {
    let denom = q_poly(k + 1).spread(2).to_series(order);
    denom.reciprocal().expect("q_k has constant term 1").shift(k)
}

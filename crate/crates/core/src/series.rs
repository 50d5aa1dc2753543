//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of order `N` keeps the coefficients of `x^0 ..= x^N`. Binary
//! operations on operands of different orders truncate to the smaller one.
//! [`BivarSeries`] adds a second variable `z`, truncated independently, whose
//! coefficients are themselves series in `x`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^power`, or zero when `power > order`.
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `x` itself.
    pub fn x(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    /// Builds a series from explicit coefficients; the order is `len - 1`.
    ///
    /// An empty vector yields the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Series { coeffs }
    }

    /// Integer coefficients, zero-padded or cut to fit `order`.
    pub fn from_integers<I, T>(values: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, v) in s.coeffs.iter_mut().zip(values) {
            *slot = BigRational::from_integer(v.into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient_of(&self, n: usize) -> Result<&BigRational> {
        self.coeffs
            .get(n)
            .ok_or(Error::CoefficientOutOfRange { index: n, order: self.order() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Orders never grow.
    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order()) + 1;
        Series { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `x^p`; the order is preserved.
    pub fn shift(&self, p: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for i in p..=order {
            out.coeffs[i] = self.coeffs[i - p].clone();
        }
        out
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn reciprocal(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let order = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[n - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// `self^m` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, mut m: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                result = &result * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients as integers; fails on the first non-integral one.
    pub fn as_integer_sequence(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral { index })
                }
            })
            .collect()
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: self.coeffs[..=order]
                .iter()
                .zip(&other.coeffs[..=order])
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for Series {
    /// Comma-separated coefficients, `1,0,1,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    /// Truncated Cauchy product.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Series, Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

/// Catalan numbers `C_0 ..= C_order` from the convolution recurrence
/// `C_n = sum_{i<n} C_i C_{n-1-i}`.
pub fn catalan_series(order: usize) -> Series {
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    c.push(BigInt::one());
    for n in 1..=order {
        let next = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
        c.push(next);
    }
    Series::from_integers(c, order)
}

/// A polynomial in `z` truncated at `z_order`, with [`Series`] coefficients
/// sharing one `x_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarSeries {
    entries: Vec<Series>,
}

impl BivarSeries {
    /// Entries are truncated to their common minimum `x` order.
    pub fn new(entries: Vec<Series>) -> Self {
        if entries.is_empty() {
            return Self::zero(0, 0);
        }
        let x_order = entries.iter().map(Series::order).min().unwrap_or(0);
        BivarSeries { entries: entries.iter().map(|s| s.truncate(x_order)).collect() }
    }

    pub fn zero(z_order: usize, x_order: usize) -> Self {
        BivarSeries { entries: vec![Series::zero(x_order); z_order + 1] }
    }

    pub fn one(z_order: usize, x_order: usize) -> Self {
        Self::from_series(&Series::one(x_order), z_order)
    }

    /// `s` as the `z^0` coefficient.
    pub fn from_series(s: &Series, z_order: usize) -> Self {
        Self::z_monomial(s, 0, z_order)
    }

    /// `s * z^power`, or zero when `power > z_order`.
    pub fn z_monomial(s: &Series, power: usize, z_order: usize) -> Self {
        let mut out = Self::zero(z_order, s.order());
        if power <= z_order {
            out.entries[power] = s.clone();
        }
        out
    }

    pub fn z_order(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn x_order(&self) -> usize {
        self.entries[0].order()
    }

    pub fn entries(&self) -> &[Series] {
        &self.entries
    }

    /// Coefficient of `z^j`; zero beyond the `z` truncation.
    pub fn slice(&self, j: usize) -> Series {
        self.entries.get(j).cloned().unwrap_or_else(|| Series::zero(self.x_order()))
    }

    pub fn truncate(&self, z_order: usize, x_order: usize) -> BivarSeries {
        let keep = z_order.min(self.z_order()) + 1;
        BivarSeries { entries: self.entries[..keep].iter().map(|s| s.truncate(x_order)).collect() }
    }

    /// Substitutes `z = 1`, summing every retained slice.
    pub fn at_z_one(&self) -> Series {
        self.entries
            .iter()
            .fold(Series::zero(self.x_order()), |acc, s| &acc + s)
    }

    pub fn mul_series(&self, s: &Series) -> BivarSeries {
        BivarSeries::new(self.entries.iter().map(|e| e * s).collect())
    }

    pub fn reciprocal(&self) -> Result<BivarSeries> {
        let inv0 = self.entries[0].reciprocal()?;
        let z_order = self.z_order();
        let mut out: Vec<Series> = Vec::with_capacity(z_order + 1);
        out.push(inv0.clone());
        for j in 1..=z_order {
            let mut acc = Series::zero(self.x_order());
            for i in 1..=j {
                if !self.entries[i].is_zero() {
                    acc = &acc + &(&self.entries[i] * &out[j - i]);
                }
            }
            out.push(-(&acc * &inv0));
        }
        Ok(BivarSeries { entries: out })
    }

    fn zip_with(&self, other: &BivarSeries, f: impl Fn(&Series, &Series) -> Series) -> BivarSeries {
        let z_order = self.z_order().min(other.z_order());
        BivarSeries::new(
            self.entries[..=z_order]
                .iter()
                .zip(&other.entries[..=z_order])
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }
}

impl fmt::Display for BivarSeries {
    /// One line per `z` power: `z^0: 1,0,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, s) in self.entries.iter().enumerate() {
            if j > 0 {
                f.write_str("\n")?;
            }
            write!(f, "z^{j}: {s}")?;
        }
        Ok(())
    }
}

impl Add for &BivarSeries {
    type Output = BivarSeries;
    fn add(self, rhs: &BivarSeries) -> BivarSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BivarSeries {
    type Output = BivarSeries;
    fn sub(self, rhs: &BivarSeries) -> BivarSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &BivarSeries {
    type Output = BivarSeries;
    fn mul(self, rhs: &BivarSeries) -> BivarSeries {
        let z_order = self.z_order().min(rhs.z_order());
        let x_order = self.x_order().min(rhs.x_order());
        let mut out = BivarSeries::zero(z_order, x_order);
        for (i, a) in self.entries[..=z_order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.entries[..=z_order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.entries[i + j] = &out.entries[i + j] + &(a * b);
                }
            }
        }
        out
    }
}

impl Neg for &BivarSeries {
    type Output = BivarSeries;
    fn neg(self) -> BivarSeries {
        BivarSeries { entries: self.entries.iter().map(|s| -s).collect() }
    }
}

forward_owned!(BivarSeries, Add add, Sub sub, Mul mul);

impl Neg for BivarSeries {
    type Output = BivarSeries;
    fn neg(self) -> BivarSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.as_integer_sequence()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn poly(values: &[i64], order: usize) -> Series {
        Series::from_integers(values.iter().copied(), order)
    }

    #[test]
    fn difference_of_squares() {
        let p = poly(&[1, 1], 2) * poly(&[1, -1], 2);
        assert_eq!(ints(&p), [1, 0, -1]);
    }

    #[test]
    fn adding_zero_is_identity() {
        let c = catalan_series(6);
        assert_eq!(&c + &Series::zero(6), c);
    }

    #[test]
    fn catalan_squared() {
        let c = catalan_series(4);
        assert_eq!(ints(&(&c * &c)), [1, 2, 5, 14, 42]);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let s = &catalan_series(8) + &Series::one(3);
        assert_eq!(s.order(), 3);
        let p = &catalan_series(2) * &catalan_series(9);
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn reciprocals() {
        assert_eq!(ints(&poly(&[1, -1], 4).reciprocal().unwrap()), [1, 1, 1, 1, 1]);
        assert_eq!(ints(&Series::one(0).reciprocal().unwrap()), [1]);
        assert_eq!(
            ints(&poly(&[1, -1, -1], 5).reciprocal().unwrap()),
            [1, 1, 2, 3, 5, 8]
        );
        assert_eq!(Series::x(3).reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn powers() {
        assert_eq!(ints(&poly(&[1, 1], 2).pow(2)), [1, 2, 1]);
        assert_eq!(ints(&catalan_series(5).pow(0)), [1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&catalan_series(2).pow(3))[2], 9);
    }

    #[test]
    fn shifts() {
        assert_eq!(ints(&Series::one(2).shift(2)), [0, 0, 1]);
        let c = catalan_series(4);
        assert_eq!(c.shift(0), c);
        assert_eq!(ints(&c.shift(1)), [0, 1, 1, 2, 5]);
        assert_eq!(Series::one(2).shift(5), Series::zero(2));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(ints(&catalan_series(4)), [1, 1, 2, 5, 14]);
        assert_eq!(ints(&catalan_series(0)), [1]);
        let c10 = catalan_series(10);
        assert_eq!(c10.coefficient_of(10).unwrap(), &BigRational::from_integer(16796.into()));
        // C_36 does not fit in i64.
        let c36 = catalan_series(36).as_integer_sequence().unwrap();
        assert!(i64::try_from(&c36[36]).is_err());
    }

    #[test]
    fn coefficient_access() {
        let c = catalan_series(5);
        assert_eq!(c.coefficient_of(3).unwrap(), &BigRational::from_integer(5.into()));
        assert_eq!(Series::one(0).coefficient_of(0).unwrap(), &BigRational::one());
        let xc2 = (&c * &c).shift(1);
        assert_eq!(xc2.coefficient_of(4).unwrap(), &BigRational::from_integer(14.into()));
        assert_eq!(
            c.coefficient_of(6),
            Err(Error::CoefficientOutOfRange { index: 6, order: 5 })
        );
    }

    #[test]
    fn integrality_check() {
        assert_eq!(ints(&poly(&[1, 2], 1)), [1, 2]);
        assert_eq!(ints(&catalan_series(5)), [1, 1, 2, 5, 14, 42]);
        let half = Series::monomial(BigRational::new(1.into(), 2.into()), 1, 1);
        assert_eq!(half.as_integer_sequence(), Err(Error::NonIntegral { index: 1 }));
    }

    #[test]
    fn catalan_functional_equation_to_order_100() {
        let c = catalan_series(100);
        let lhs = (&c * &c).shift(1);
        let rhs = &c - &Series::one(100);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn catalan_coefficients_positive() {
        let seq = catalan_series(60).as_integer_sequence().unwrap();
        assert!(seq.iter().all(|c| c > &BigInt::zero()));
    }

    #[test]
    fn bivar_geometric() {
        let one_minus_z = BivarSeries::one(3, 4) - BivarSeries::z_monomial(&Series::one(4), 1, 3);
        let inv = one_minus_z.reciprocal().unwrap();
        for j in 0..=3 {
            assert_eq!(inv.slice(j), Series::one(4));
        }
        let one_plus_z = BivarSeries::one(3, 4) + BivarSeries::z_monomial(&Series::one(4), 1, 3);
        let prod = &one_plus_z * &one_minus_z;
        let expected = BivarSeries::one(3, 4) - BivarSeries::z_monomial(&Series::one(4), 2, 3);
        assert_eq!(prod, expected);
    }

    #[test]
    fn bivar_fine_slice() {
        let n = 6;
        let c = catalan_series(n);
        let x2c2 = (&c * &c).shift(2);
        let denom = BivarSeries::one(2, n)
            - BivarSeries::z_monomial(&Series::one(n), 1, 2)
            - BivarSeries::from_series(&x2c2, 2);
        let inv = denom.reciprocal().unwrap();
        assert_eq!(ints(&inv.slice(0)), [1, 0, 1, 2, 6, 18, 57]);
    }

    #[test]
    fn bivar_not_invertible() {
        let z = BivarSeries::z_monomial(&Series::one(3), 1, 2);
        assert_eq!(z.reciprocal(), Err(Error::NotInvertible));
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec(-9i64..=9, order + 1).prop_map(move |v| poly(&v, order))
    }

    fn invertible_series(order: usize) -> impl Strategy<Value = Series> {
        (prop_oneof![-5i64..=-1, 1i64..=5], prop::collection::vec(-9i64..=9, order)).prop_map(
            move |(c0, rest)| {
                let mut v = vec![c0];
                v.extend(rest);
                poly(&v, order)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reciprocal_is_inverse(a in invertible_series(50)) {
            let inv = a.reciprocal().unwrap();
            prop_assert_eq!(&a * &inv, Series::one(50));
        }

        #[test]
        fn multiplication_commutes_and_associates(
            a in small_series(12), b in small_series(12), c in small_series(12)
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn bivar_reciprocal_matches_univariate(a in invertible_series(15)) {
            let b = BivarSeries::from_series(&a, 0).reciprocal().unwrap();
            prop_assert_eq!(b.slice(0), a.reciprocal().unwrap());
        }
    }
}

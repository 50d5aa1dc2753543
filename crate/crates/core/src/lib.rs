//! Exact counting of Dyck paths by the number of peaks or valleys at a fixed
//! height.
//!
//! Every generating function here is a truncated power series over exact
//! rationals ([`Series`]). The Chebyshev-derived rational functions are built
//! from the integer polynomials `q_k(x) = x^{k/2} U_k(1/(2 sqrt x))`, so no
//! radicals or floating point ever appear. The [`paths`] module carries the
//! ground truth: explicit paths, exhaustive enumeration, a dynamic-programming
//! counter, and the peak/valley exchange bijection.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cfrac;
pub mod chebyshev;
mod error;
pub mod gfcount;
pub mod paths;
pub mod series;

pub use cfrac::{
    catalan_cfrac, iterated_fraction, lemma_rhs, peak_bivar_cfrac, peak_bivar_cfrac_marked,
    rv_cfrac, PeakMark, WeightSpec,
};
pub use chebyshev::{f_series_t, q_poly, r_series, r_series_iterated, u_inv_sq_series, IntPoly, RkRational};
pub use error::{Error, PathErrorKind};
pub use gfcount::{
    catalan_power_coefficient, no_valley_band_gf, peak1_printed_gf, peak_gf, peak_k0_via_remark,
    stat_gf, valley0_binomial_ballot, valley0_binomial_literal, valley0_closed_count, valley_gf,
    GfQuery, StatKind,
};
pub use paths::{
    bounded_height_count, build_table, count_distribution_dp, count_exact_dp, enumerate,
    enumerate_with_guard, exchange_sites, parse_path, psi, statistics, theta_forward, theta_inverse, CountMethod,
    CountTable, DyckPath, DyckPaths, StatProfile, Step, TableKey, DEFAULT_ENUMERATION_GUARD,
};
pub use series::{catalan_series, BivarSeries, Series};

pub type Result<T, E = Error> = core::result::Result<T, E>;

//! Dense square-free products of linear factors.
//!
//! A square-free polynomial in `n` variables has at most `2^n` monomials, one
//! per subset of the variables, so it fits in a flat array indexed by
//! bitmask. Multiplying by `1 + sum_i w_i z_i` and dropping squares is then
//!
//! ```text
//! new[S] = old[S] + sum_{i in S} w_i * old[S \ {i}]
//! ```
//!
//! which is the same truncated product that
//! [`MultiPoly::mul_multilinear_truncated`] computes, without hashing.
//! Coefficients are held in `i128` and promoted to `BigInt` on the first
//! overflow.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, MultiPoly};
use crate::exec::Execution;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest variable count accepted; `2^24` coefficients is already far past
/// anything the product routes need.
pub const MAX_MULTILINEAR_VARS: usize = 24;

#[cfg(feature = "parallel")]
const PAR_MIN_LEN: usize = 1 << 12;

#[derive(Clone, Debug)]
enum Coeffs {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// Running product `prod (1 + w . z)` truncated to square-free monomials.
#[derive(Clone, Debug)]
pub struct MultilinearProduct {
    nvars: usize,
    coeffs: Coeffs,
    exec: Execution,
}

impl MultilinearProduct {
    pub fn new(nvars: usize, exec: Execution) -> Self {
        assert!(
            nvars <= MAX_MULTILINEAR_VARS,
            "too many variables for a dense multilinear product"
        );
        let mut v = vec![0i128; 1 << nvars];
        v[0] = 1;
        MultilinearProduct {
            nvars,
            coeffs: Coeffs::Small(v),
            exec,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Multiplies by `1 + sum_i weight[i] z_i`.
    pub fn mul_linear(&mut self, weight: &[i64]) {
        assert_eq!(weight.len(), self.nvars, "weight has wrong length");
        if let Coeffs::Small(old) = &self.coeffs {
            match step_small(old, weight, self.exec) {
                Some(new) => {
                    self.coeffs = Coeffs::Small(new);
                    return;
                }
                None => {
                    self.coeffs = Coeffs::Big(old.iter().map(|&c| BigInt::from(c)).collect());
                }
            }
        }
        if let Coeffs::Big(old) = &self.coeffs {
            self.coeffs = Coeffs::Big(step_big(old, weight, self.exec));
        }
    }

    /// Coefficient of `z_1 ... z_n`.
    pub fn top_coefficient(&self) -> BigInt {
        self.coefficient(self.full_mask())
    }

    /// Coefficient of the square-free monomial whose variables are the set
    /// bits of `mask`.
    pub fn coefficient(&self, mask: usize) -> BigInt {
        match &self.coeffs {
            Coeffs::Small(v) => BigInt::from(v[mask]),
            Coeffs::Big(v) => v[mask].clone(),
        }
    }

    pub fn is_promoted(&self) -> bool {
        matches!(self.coeffs, Coeffs::Big(_))
    }

    fn full_mask(&self) -> usize {
        (1usize << self.nvars) - 1
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        let n = self.nvars;
        let terms = (0..=self.full_mask()).filter_map(|mask| {
            let c = self.coefficient(mask);
            if c.is_zero() {
                return None;
            }
            let m = Monomial::from_exponents((0..n).map(|i| ((mask >> i) & 1) as u32));
            Some((m, c))
        });
        MultiPoly::from_terms(n, terms)
    }
}

fn update_big(mask: usize, old: &[BigInt], weight: &[i64]) -> BigInt {
    let mut acc = old[mask].clone();
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let w = weight[i];
        if w != 0 {
            acc += &old[mask & !(1 << i)] * w;
        }
    }
    acc
}

/// One factor on `i128` coefficients, or `None` if the result might not fit.
///
/// `|new| <= |old|_max * (1 + sum |w_i|)`, so a single bound check up front
/// makes every operation in the sweep safe. The sweep adds `w_i * old[S \ i]`
/// into `new[S]` one variable at a time, walking contiguous half-blocks.
fn step_small(old: &[i128], weight: &[i64], exec: Execution) -> Option<Vec<i128>> {
    let max_old = old.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
    let growth = weight
        .iter()
        .try_fold(1u128, |acc, w| acc.checked_add(w.unsigned_abs() as u128))?;
    let bound = max_old.checked_mul(growth)?;
    if bound > i128::MAX as u128 {
        return None;
    }
    let mut new = old.to_vec();
    for (i, &w) in weight.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let half = 1usize << i;
        let w = w as i128;
        let sweep = move |hi: &mut [i128], lo: &[i128]| match w {
            1 => hi.iter_mut().zip(lo).for_each(|(h, &l)| *h += l),
            -1 => hi.iter_mut().zip(lo).for_each(|(h, &l)| *h -= l),
            _ => hi.iter_mut().zip(lo).for_each(|(h, &l)| *h += w * l),
        };
        let blocks = move |new: &mut [i128], old: &[i128]| {
            for (n, o) in new.chunks_mut(2 * half).zip(old.chunks(2 * half)) {
                sweep(&mut n[half..], &o[..half]);
            }
        };
        #[cfg(feature = "parallel")]
        if exec.is_parallel() && old.len() >= PAR_MIN_LEN {
            if 2 * half <= PAR_MIN_LEN {
                new.par_chunks_mut(PAR_MIN_LEN)
                    .zip(old.par_chunks(PAR_MIN_LEN))
                    .for_each(|(n, o)| blocks(n, o));
            } else {
                for (n, o) in new.chunks_mut(2 * half).zip(old.chunks(2 * half)) {
                    n[half..]
                        .par_chunks_mut(PAR_MIN_LEN)
                        .zip(o[..half].par_chunks(PAR_MIN_LEN))
                        .for_each(|(h, l)| sweep(h, l));
                }
            }
            continue;
        }
        blocks(&mut new, old);
    }
    let _ = exec;
    Some(new)
}

fn step_big(old: &[BigInt], weight: &[i64], exec: Execution) -> Vec<BigInt> {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && old.len() >= PAR_MIN_LEN {
        return (0..old.len())
            .into_par_iter()
            .map(|mask| update_big(mask, old, weight))
            .collect();
    }
    let _ = exec;
    (0..old.len())
        .map(|mask| update_big(mask, old, weight))
        .collect()
}

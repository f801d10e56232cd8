//! Torus-level model of the pushforward along the isotropic flag bundle.
//!
//! For a polynomial `f` in `z_1..z_n`,
//!
//! ```text
//! p_*(f) = ( sum_{sigma in S_n} sum_{eps even} sgn(sigma) (sigma . eps)(f) ) / Delta,
//! Delta  = prod_{i<j} (z_j^2 - z_i^2).
//! ```
//!
//! The numerator is anti-invariant under W(D_n), so the division is always
//! exact. The hyperplane classes are modeled by `h_j -> z_j` and the top
//! Chern class of the tautological isotropic subbundle by `z_1 ... z_n`; with
//! the sign of `Delta` above, the Edidin-Graham class pushes forward to
//! `+2^{n-1} z_1 ... z_n`.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::group::{even_sign_masks, permutation_sign, permutations, MAX_ENUMERATION_RANK};
use super::{is_invariant, WeylError};
use crate::exec::Execution;
use crate::poly::{Monomial, MultiPoly, PolyError};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardResult {
    pub value: MultiPoly,
    /// Degree of `Delta`, `n^2 - n`: homogeneous inputs lose exactly this
    /// much degree.
    pub fiber_degree_drop: u32,
}

/// `prod_{i<j} (z_j^2 - z_i^2)`.
pub fn type_d_vandermonde(n: usize) -> MultiPoly {
    let mut out = MultiPoly::one(n);
    for j in 0..n {
        for i in 0..j {
            let zj2 = MultiPoly::term(Monomial::variable(n, j).pow(2), 1);
            let zi2 = MultiPoly::term(Monomial::variable(n, i).pow(2), 1);
            out = &out * &(&zj2 - &zi2);
        }
    }
    out
}

/// `z_1 z_2^3 z_3^5 ... z_n^{2n-1}`: the torus representative of
/// `h_2^2 ... h_n^{2n-2} c_n(V')`.
pub fn eg_class_input(n: usize) -> MultiPoly {
    MultiPoly::term(
        Monomial::from_exponents((0..n as u32).map(|i| 2 * i + 1)),
        1,
    )
}

/// `prod_{j=2}^n z_j^{2j-2}`, the class `s` of the projection formula.
pub fn projection_class(n: usize) -> MultiPoly {
    MultiPoly::term(Monomial::from_exponents((0..n as u32).map(|i| 2 * i)), 1)
}

pub fn pushforward_flag(f: &MultiPoly, n: usize) -> Result<PushforwardResult, WeylError> {
    pushforward_flag_with(f, n, Execution::default())
}

pub fn pushforward_flag_with(
    f: &MultiPoly,
    n: usize,
    exec: Execution,
) -> Result<PushforwardResult, WeylError> {
    if !(2..=MAX_ENUMERATION_RANK).contains(&n) {
        return Err(WeylError::RankOutOfRange {
            n,
            min: 2,
            max: MAX_ENUMERATION_RANK,
        });
    }
    if f.nvars() != n {
        return Err(WeylError::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    let numerator = alternating_sum(f, n, exec);
    let value = numerator
        .exact_div(&type_d_vandermonde(n))
        .map_err(|e| match e {
            PolyError::NotDivisible { remainder } => WeylError::NonDivisible { remainder },
            other => unreachable!("Delta is a nonzero polynomial in n variables: {other}"),
        })?;
    if !is_invariant(&value, n) {
        return Err(WeylError::InvariantViolation);
    }
    Ok(PushforwardResult {
        value,
        fiber_degree_drop: (n * n - n) as u32,
    })
}

/// `sum_w sgn(w) w(f)` over W(D_n), summed element by element.
///
/// For a fixed permutation all `2^{n-1}` sign vectors send a monomial to the
/// same monomial, so their contributions are tallied as a signed count before
/// touching the coefficient.
pub fn alternating_sum(f: &MultiPoly, n: usize, exec: Execution) -> MultiPoly {
    let terms: Vec<(&Monomial, &BigInt, u32)> = f
        .terms()
        .map(|(m, c)| {
            let odd = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e % 2 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << (n - 1 - i));
            (m, c, odd)
        })
        .collect();
    let masks: Vec<u32> = even_sign_masks(n).collect();
    let perms = permutations(n);

    let contribute = |mut acc: HashMap<Monomial, BigInt>, perm: &Vec<usize>| {
        let sgn = permutation_sign(perm);
        for &(m, c, odd) in &terms {
            let tally: i64 = masks
                .iter()
                .map(|&mask| {
                    if (mask & odd).count_ones() % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            if tally == 0 {
                continue;
            }
            let mut image = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                image.set_exponent(perm[i], e);
            }
            *acc.entry(image).or_default() += c * (tally * sgn as i64);
        }
        acc
    };

    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        let acc = perms
            .par_iter()
            .fold(HashMap::new, contribute)
            .reduce(HashMap::new, merge);
        return MultiPoly::from_accumulator(n, acc);
    }
    let _ = exec;
    let acc = perms.iter().fold(HashMap::new(), contribute);
    MultiPoly::from_accumulator(n, acc)
}

#[cfg(feature = "parallel")]
fn merge(
    mut a: HashMap<Monomial, BigInt>,
    b: HashMap<Monomial, BigInt>,
) -> HashMap<Monomial, BigInt> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (m, c) in b {
        *a.entry(m).or_default() += c;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn rank_two_examples() {
        let r = pushforward_flag(&p("z2^2", 2), 2).unwrap();
        assert_eq!(r.value, p("2", 2));
        assert_eq!(r.fiber_degree_drop, 2);
        assert_eq!(
            pushforward_flag(&p("z1*z2^3", 2), 2).unwrap().value,
            p("2*z1*z2", 2)
        );
        assert!(pushforward_flag(&p("1", 2), 2).unwrap().value.is_zero());
    }

    #[test]
    fn eg_inputs() {
        assert_eq!(eg_class_input(2), p("z1*z2^3", 2));
        assert_eq!(eg_class_input(3), p("z1*z2^3*z3^5", 3));
        let r = pushforward_flag(&eg_class_input(3), 3).unwrap();
        assert_eq!(r.value, p("4*z1*z2*z3", 3));
    }

    #[test]
    fn delta_degree() {
        for n in 2..=4 {
            let d = type_d_vandermonde(n);
            assert!(d.is_homogeneous());
            assert_eq!(d.degree(), Some((n * n - n) as u32));
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            pushforward_flag(&p("z1", 1), 1),
            Err(WeylError::RankOutOfRange { n: 1, .. })
        ));
        assert!(matches!(
            pushforward_flag(&p("z1", 3), 2),
            Err(WeylError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(pushforward_flag(&p("z1", 9), 9).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f = p("3*z1^5*z2 - z2^4*z3^2 + 7*z1*z2^3*z3^5 + z3^6", 3);
        let a = pushforward_flag_with(&f, 3, Execution::Sequential).unwrap();
        let b = pushforward_flag_with(&f, 3, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

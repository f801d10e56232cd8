//! Three routes to the coefficient `d_n` of `z_1 ... z_n` in
//! `c(D_n^+) = prod (1 + e . z)`, the product over sign vectors with an even
//! number of `+1` entries:
//!
//! 1. expand the product, dropping non-square-free terms as they appear;
//! 2. Kutin's reduction: fix the factor supplying `z_n`, multiply by the
//!    `2^{n-1}` equivalent choices and expand the smaller product `g`;
//! 3. the closed form `2^{n-1} (n-1)! = |W(D_n)| / n`.
//!
//! Under the even-number-of-`+1` convention the first two routes give
//! `-2^{n-1} (n-1)!`.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::system::{dplus_sign_vectors, linear_factor, sign_vector};
use super::WeightError;
use crate::exec::Execution;
use crate::poly::{Monomial, MultiPoly, MultilinearProduct};

/// Largest rank accepted by the product routes.
pub const MAX_PRODUCT_RANK: usize = 16;

fn check_product_rank(n: usize) -> Result<(), WeightError> {
    if !(2..=MAX_PRODUCT_RANK).contains(&n) {
        return Err(WeightError::RankOutOfRange {
            n,
            min: 2,
            max: MAX_PRODUCT_RANK,
        });
    }
    Ok(())
}

pub fn euler_coefficient_product(n: usize) -> Result<BigInt, WeightError> {
    euler_coefficient_product_with(n, Execution::default())
}

/// Coefficient of `z_1 ... z_n` in the truncated product over the `D_n^+`
/// extreme weights.
pub fn euler_coefficient_product_with(n: usize, exec: Execution) -> Result<BigInt, WeightError> {
    check_product_rank(n)?;
    let mut acc = MultilinearProduct::new(n, exec);
    for w in dplus_sign_vectors(n) {
        acc.mul_linear(&w);
    }
    Ok(acc.top_coefficient())
}

/// The same coefficient through the sparse polynomial type, one
/// [`MultiPoly::mul_multilinear_truncated`] per factor. Slower than
/// [`euler_coefficient_product`]; kept as an independent implementation of
/// the same expansion.
pub fn euler_coefficient_product_sparse(n: usize) -> Result<BigInt, WeightError> {
    check_product_rank(n)?;
    let acc = dplus_sign_vectors(n)
        .iter()
        .fold(MultiPoly::one(n), |acc, w| {
            acc.mul_multilinear_truncated(&linear_factor(w))
                .expect("factors share the ambient space")
        });
    Ok(acc.coefficient_of(&Monomial::from_exponents(vec![1; n])))
}

/// `2^{n-1} (n-1)!`.
pub fn euler_coefficient_closed(n: usize) -> Result<BigInt, WeightError> {
    if n == 0 {
        return Err(WeightError::RankOutOfRange {
            n,
            min: 1,
            max: usize::MAX,
        });
    }
    let fact: BigInt = (1..n).map(BigInt::from).product();
    Ok(fact << (n - 1))
}

/// Sign vectors indexing the factors of `g`: every vector in `{+1,-1}^{n-1}`
/// except the all-minus one.
fn kutin_sign_vectors(n: usize) -> Vec<Vec<i64>> {
    let m = n - 1;
    let all_minus = (1u64 << m) - 1;
    (0..1u64 << m)
        .filter(|&mask| mask != all_minus)
        .map(|mask| sign_vector(m, mask))
        .collect()
}

/// `g(z_1..z_{n-1}) = prod (1 + sum_{i<n} e_i z_i)` over all sign vectors on
/// `n-1` variables except `1 - sum z_i`.
pub fn kutin_g(n: usize) -> Result<MultiPoly, WeightError> {
    if n < 2 {
        return Err(WeightError::RankOutOfRange {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    Ok(kutin_sign_vectors(n)
        .iter()
        .fold(MultiPoly::one(n - 1), |acc, w| &acc * &linear_factor(w)))
}

pub fn euler_coefficient_kutin(n: usize) -> Result<BigInt, WeightError> {
    euler_coefficient_kutin_with(n, Execution::default())
}

/// `-2^{n-1}` times the coefficient of `z_1 ... z_{n-1}` in `g`.
pub fn euler_coefficient_kutin_with(n: usize, exec: Execution) -> Result<BigInt, WeightError> {
    check_product_rank(n)?;
    let mut acc = MultilinearProduct::new(n - 1, exec);
    for w in kutin_sign_vectors(n) {
        acc.mul_linear(&w);
    }
    Ok(-(acc.top_coefficient() << (n - 1)))
}

/// The factor of `g` picked to supply `z_j` at stage `j`: `+1` in the first
/// `j` coordinates, `-1` after. `j = 0` is the all-minus vector removed from
/// `g` at the start.
pub fn kutin_chosen_factor(n: usize, j: usize) -> Vec<i64> {
    (0..n - 1).map(|k| if k < j { 1 } else { -1 }).collect()
}

/// Factors of `g` still available at stage `i` whose partner under flipping
/// the sign of `z_i` is gone. Only these can supply a lone `z_i`.
pub fn kutin_unpaired_factors(n: usize, i: usize) -> Result<Vec<Vec<i64>>, WeightError> {
    if n < 2 || !(1..n).contains(&i) {
        return Err(WeightError::StageOutOfRange { n, i });
    }
    let consumed: HashSet<Vec<i64>> = (1..i).map(|j| kutin_chosen_factor(n, j)).collect();
    let remaining: HashSet<Vec<i64>> = kutin_sign_vectors(n)
        .into_iter()
        .filter(|e| !consumed.contains(e))
        .collect();
    let mut unpaired: Vec<Vec<i64>> = remaining
        .iter()
        .filter(|e| {
            let mut partner = (*e).clone();
            partner[i - 1] = -partner[i - 1];
            !remaining.contains(&partner)
        })
        .cloned()
        .collect();
    unpaired.sort_by(|a, b| b.cmp(a));
    Ok(unpaired)
}

/// Number of unpaired factors at stage `i`; the combinatorial argument needs
/// this to be exactly `i`.
pub fn kutin_pairing_audit(n: usize, i: usize) -> Result<usize, WeightError> {
    Ok(kutin_unpaired_factors(n, i)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn product_route_small() {
        assert_eq!(euler_coefficient_product(2).unwrap(), BigInt::from(-2));
        assert_eq!(euler_coefficient_product(3).unwrap(), BigInt::from(-8));
        assert_eq!(euler_coefficient_product(4).unwrap(), BigInt::from(-48));
        assert!(euler_coefficient_product(1).is_err());
        assert!(euler_coefficient_product(17).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(euler_coefficient_closed(1).unwrap(), BigInt::from(1));
        assert_eq!(euler_coefficient_closed(2).unwrap(), BigInt::from(2));
        assert_eq!(euler_coefficient_closed(5).unwrap(), BigInt::from(384));
        assert_eq!(
            euler_coefficient_closed(10).unwrap(),
            BigInt::from(185_794_560u64)
        );
        assert!(euler_coefficient_closed(0).is_err());
    }

    #[test]
    fn kutin_g_small() {
        assert_eq!(kutin_g(2).unwrap(), parse_poly("1+z1", 1).unwrap());
        let g3 = kutin_g(3).unwrap();
        assert_eq!(g3, parse_poly("(1+z1+z2)*(1+z1-z2)*(1-z1+z2)", 2).unwrap());
        assert_eq!(
            g3.coefficient_of(&Monomial::from_exponents([1, 1])),
            BigInt::from(2)
        );
        assert!(kutin_g(1).is_err());
    }

    #[test]
    fn kutin_route_small() {
        assert_eq!(euler_coefficient_kutin(2).unwrap(), BigInt::from(-2));
        assert_eq!(euler_coefficient_kutin(3).unwrap(), BigInt::from(-8));
        for n in 2..=8 {
            assert_eq!(
                euler_coefficient_kutin(n).unwrap(),
                euler_coefficient_product(n).unwrap()
            );
        }
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        for n in 2..=7 {
            assert_eq!(
                euler_coefficient_product_sparse(n).unwrap(),
                euler_coefficient_product(n).unwrap()
            );
        }
    }

    #[test]
    fn audit_examples() {
        assert_eq!(kutin_pairing_audit(3, 1).unwrap(), 1);
        assert_eq!(kutin_pairing_audit(3, 2).unwrap(), 2);
        assert_eq!(kutin_pairing_audit(5, 4).unwrap(), 4);
        assert!(kutin_pairing_audit(3, 0).is_err());
        assert!(kutin_pairing_audit(3, 3).is_err());
    }

    #[test]
    fn audit_first_stage_has_the_expected_lone_factor() {
        // only 1 + z1 - z2 - ... - z_{n-1} lacks a partner
        for n in 2..=6 {
            let lone = kutin_unpaired_factors(n, 1).unwrap();
            let mut expected = vec![-1; n - 1];
            expected[0] = 1;
            assert_eq!(lone, vec![expected]);
        }
    }

    #[test]
    fn audit_matches_listed_factors() {
        // at stage i the lone factors are 1 + z1 + .. + z_i - ..., then
        // with the minus sign walking left through z_{i-1}, ..., z_1
        for n in 2..=7 {
            for i in 1..n {
                let mut expected: Vec<Vec<i64>> = (0..i)
                    .map(|j| {
                        let mut e = kutin_chosen_factor(n, j);
                        e[i - 1] = 1;
                        e
                    })
                    .collect();
                expected.sort_by(|a, b| b.cmp(a));
                assert_eq!(kutin_unpaired_factors(n, i).unwrap(), expected);
                assert_eq!(expected[0], kutin_chosen_factor(n, i));
            }
        }
    }
}

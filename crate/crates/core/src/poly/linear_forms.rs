//! Full (untruncated) products of affine linear forms `1 + w . z`.
//!
//! Exponent vectors of up to eight variables are packed into a `u64`, eight
//! bits per variable, and coefficients are held in `i128`. Inputs that do not
//! fit, or products whose coefficients overflow, go through the generic
//! sparse multiplication instead.

use rustc_hash::FxHashMap as HashMap;

use num_bigint::BigInt;

use super::{Monomial, MultiPoly};

const MAX_PACKED_VARS: usize = 8;
const MAX_PACKED_DEGREE: usize = u8::MAX as usize;

/// `prod_w (1 + sum_i w_i z_i)` over `forms`, each of length `nvars`.
pub fn product_of_linear_forms(nvars: usize, forms: &[Vec<i64>]) -> MultiPoly {
    for w in forms {
        assert_eq!(w.len(), nvars, "linear form has wrong variable count");
    }
    let max_exponent = (0..nvars)
        .map(|i| forms.iter().filter(|w| w[i] != 0).count())
        .max()
        .unwrap_or(0);
    if nvars <= MAX_PACKED_VARS && max_exponent <= MAX_PACKED_DEGREE {
        if let Some(p) = packed_product(nvars, forms) {
            return p;
        }
    }
    forms
        .iter()
        .fold(MultiPoly::one(nvars), |acc, w| &acc * &affine(w))
}

fn affine(w: &[i64]) -> MultiPoly {
    let n = w.len();
    let terms = std::iter::once((Monomial::one(n), BigInt::from(1))).chain(
        w.iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::variable(n, i), BigInt::from(c))),
    );
    MultiPoly::from_terms(n, terms)
}

fn packed_product(nvars: usize, forms: &[Vec<i64>]) -> Option<MultiPoly> {
    let mut acc: HashMap<u64, i128> = HashMap::default();
    acc.insert(0, 1);
    for w in forms {
        let nonzero: Vec<(u64, i128)> = w
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (1u64 << (8 * i), c as i128))
            .collect();
        if nonzero.is_empty() {
            continue;
        }
        let mut next: HashMap<u64, i128> =
            HashMap::with_capacity_and_hasher(acc.len() * 2, Default::default());
        for (&key, &c) in &acc {
            let slot = next.entry(key).or_insert(0);
            *slot = slot.checked_add(c)?;
            for &(bump, wi) in &nonzero {
                let slot = next.entry(key + bump).or_insert(0);
                *slot = slot.checked_add(c.checked_mul(wi)?)?;
            }
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    let terms = acc.into_iter().map(|(key, c)| {
        let exps = (0..nvars).map(|i| ((key >> (8 * i)) & 0xff) as u32);
        (Monomial::from_exponents(exps), BigInt::from(c))
    });
    Some(MultiPoly::from_terms(nvars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn small_products() {
        let p = product_of_linear_forms(2, &[vec![1, 1], vec![1, -1]]);
        assert_eq!(p, parse_poly("(1+z1+z2)*(1+z1-z2)", 2).unwrap());
        assert_eq!(product_of_linear_forms(3, &[]), MultiPoly::one(3));
        assert_eq!(product_of_linear_forms(2, &[vec![0, 0]]), MultiPoly::one(2));
    }

    #[test]
    fn overflow_falls_back() {
        let forms = vec![vec![1i64 << 40]; 4];
        let p = product_of_linear_forms(1, &forms);
        let want = parse_poly("1 + 1099511627776*z1", 1).unwrap().pow(4);
        assert_eq!(p, want);
    }

    #[test]
    fn matches_generic_multiplication() {
        let forms: Vec<Vec<i64>> = vec![
            vec![1, -2, 0],
            vec![3, 1, -1],
            vec![-1, -1, -1],
            vec![2, 0, 5],
        ];
        let generic = forms
            .iter()
            .fold(MultiPoly::one(3), |acc, w| &acc * &affine(w));
        assert_eq!(product_of_linear_forms(3, &forms), generic);
    }
}

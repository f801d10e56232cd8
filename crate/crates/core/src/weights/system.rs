use num_bigint::BigInt;

use super::WeightError;
use crate::poly::{product_of_linear_forms, Monomial, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightLabel {
    Standard,
    Lambda(usize),
    DPlusExtreme,
    Custom,
}

/// Weights of a torus representation: a multiset of integer linear forms in
/// `z_1..z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    rank: usize,
    weights: Vec<Vec<i64>>,
    label: WeightLabel,
}

impl WeightSystem {
    pub fn custom(rank: usize, weights: Vec<Vec<i64>>) -> Result<Self, WeightError> {
        if let Some(w) = weights.iter().find(|w| w.len() != rank) {
            return Err(WeightError::WrongLength {
                expected: rank,
                found: w.len(),
            });
        }
        Ok(WeightSystem {
            rank,
            weights,
            label: WeightLabel::Custom,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> WeightLabel {
        self.label
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `prod_w (1 + w)`, the total Chern class restricted to the torus.
    pub fn total_chern(&self) -> MultiPoly {
        product_of_linear_forms(self.rank, &self.weights)
    }
}

/// `1 + sum_i w_i z_i`.
pub fn linear_factor(w: &[i64]) -> MultiPoly {
    let n = w.len();
    let terms = std::iter::once((Monomial::one(n), BigInt::from(1))).chain(
        w.iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::variable(n, i), BigInt::from(c))),
    );
    MultiPoly::from_terms(n, terms)
}

/// `{ +z_i, -z_i }`, the standard `2n`-dimensional representation.
pub fn weights_standard(n: usize) -> WeightSystem {
    let mut weights = Vec::with_capacity(2 * n);
    for i in 0..n {
        for s in [1, -1] {
            let mut w = vec![0; n];
            w[i] = s;
            weights.push(w);
        }
    }
    WeightSystem {
        rank: n,
        weights,
        label: WeightLabel::Standard,
    }
}

/// Weights of the k-th exterior power of the standard representation: all
/// sums of `k` distinct standard weights, zero weights included.
pub fn weights_lambda(n: usize, k: usize) -> Result<WeightSystem, WeightError> {
    if k > 2 * n {
        return Err(WeightError::ExteriorDegreeOutOfRange { k, max: 2 * n });
    }
    let standard = weights_standard(n).weights;
    let mut weights = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    subsets(&standard, k, 0, &mut chosen, &mut weights, n);
    Ok(WeightSystem {
        rank: n,
        weights,
        label: WeightLabel::Lambda(k),
    })
}

fn subsets(
    pool: &[Vec<i64>],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<i64>>,
    n: usize,
) {
    if chosen.len() == k {
        let mut sum = vec![0; n];
        for &i in chosen.iter() {
            for (s, c) in sum.iter_mut().zip(&pool[i]) {
                *s += c;
            }
        }
        out.push(sum);
        return;
    }
    for i in start..pool.len() {
        chosen.push(i);
        subsets(pool, k, i + 1, chosen, out, n);
        chosen.pop();
    }
}

/// The `2^{n-1}` vectors in `{+1,-1}^n` with an even number of `+1` entries.
pub fn weights_dplus_extreme(n: usize) -> WeightSystem {
    WeightSystem {
        rank: n,
        weights: dplus_sign_vectors(n),
        label: WeightLabel::DPlusExtreme,
    }
}

pub(crate) fn dplus_sign_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..1u64 << n)
        .filter(|mask| (n as u32 - mask.count_ones()).is_multiple_of(2))
        .map(|mask| sign_vector(n, mask))
        .collect()
}

/// Entry `i` is `-1` when bit `n-1-i` of `mask` is set, else `+1`.
pub(crate) fn sign_vector(n: usize, mask: u64) -> Vec<i64> {
    (0..n)
        .map(|i| {
            if (mask >> (n - 1 - i)) & 1 == 1 {
                -1
            } else {
                1
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        v.sort();
        v
    }

    #[test]
    fn standard_weights() {
        assert_eq!(sorted(weights_standard(1).weights), vec![vec![-1], vec![1]]);
        assert_eq!(
            sorted(weights_standard(2).weights),
            sorted(vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])
        );
        assert_eq!(weights_standard(5).len(), 10);
    }

    #[test]
    fn exterior_power_weights() {
        let l = weights_lambda(2, 2).unwrap();
        assert_eq!(l.label(), WeightLabel::Lambda(2));
        assert_eq!(
            sorted(l.weights),
            sorted(vec![
                vec![1, 1],
                vec![1, -1],
                vec![-1, 1],
                vec![-1, -1],
                vec![0, 0],
                vec![0, 0]
            ])
        );
        assert_eq!(weights_lambda(4, 0).unwrap().weights, vec![vec![0; 4]]);
        assert_eq!(weights_lambda(3, 3).unwrap().len(), 20);
        assert!(weights_lambda(2, 5).is_err());
    }

    #[test]
    fn dplus_weights() {
        assert_eq!(
            sorted(weights_dplus_extreme(2).weights),
            sorted(vec![vec![1, 1], vec![-1, -1]])
        );
        assert_eq!(
            sorted(weights_dplus_extreme(3).weights),
            sorted(vec![
                vec![1, 1, -1],
                vec![1, -1, 1],
                vec![-1, 1, 1],
                vec![-1, -1, -1]
            ])
        );
        let six = weights_dplus_extreme(6);
        assert_eq!(six.len(), 32);
        assert!(six
            .weights()
            .iter()
            .all(|w| w.iter().filter(|&&c| c == 1).count() % 2 == 0));
    }

    #[test]
    fn total_chern_examples() {
        assert_eq!(
            weights_standard(2).total_chern(),
            parse_poly("(1-z1^2)*(1-z2^2)", 2).unwrap()
        );
        assert_eq!(
            weights_dplus_extreme(2).total_chern(),
            parse_poly("1-(z1+z2)^2", 2).unwrap()
        );
        let zeros = WeightSystem::custom(2, vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(zeros.total_chern(), MultiPoly::one(2));
        assert!(WeightSystem::custom(2, vec![vec![1]]).is_err());
    }
}

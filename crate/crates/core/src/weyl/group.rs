use num_bigint::BigInt;

use super::WeylError;
use crate::poly::{Monomial, MultiPoly};

/// Largest rank for which the full group W(D_n) is enumerated.
pub const MAX_ENUMERATION_RANK: usize = 8;

/// A signed permutation acting by `z_i -> signs[i] * z_{perm[i]}` (0-based).
///
/// Ordered lexicographically by `(perm, signs)` with `+1` before `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, WeylError> {
        let n = perm.len();
        if signs.len() != n {
            return Err(WeylError::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(WeylError::NotABijection);
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(WeylError::BadSign);
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Sign of the underlying permutation.
    pub fn permutation_sign(&self) -> i8 {
        permutation_sign(&self.perm)
    }

    /// True when the number of sign changes is even, i.e. the element lies
    /// in W(D_n).
    pub fn is_type_d(&self) -> bool {
        self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0
    }

    /// The element whose action is `act(self, act(inner, f))`.
    pub fn compose(&self, inner: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), inner.rank());
        let perm = inner.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = inner
            .perm
            .iter()
            .zip(&inner.signs)
            .map(|(&j, &s)| s * self.signs[j])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn act_monomial(&self, m: &Monomial) -> (Monomial, i8) {
        let mut out = Monomial::one(m.nvars());
        let mut sign = 1i8;
        for (i, &e) in m.exponents().iter().enumerate() {
            out.set_exponent(self.perm[i], e);
            if self.signs[i] < 0 && e % 2 == 1 {
                sign = -sign;
            }
        }
        (out, sign)
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let negs = |w: &SignedPermutation| w.signs.iter().map(|&s| s < 0).collect::<Vec<_>>();
        self.perm
            .cmp(&other.perm)
            .then_with(|| negs(self).cmp(&negs(other)))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Substitutes `z_i -> signs[i] * z_{perm[i]}` into `f`.
pub fn act(w: &SignedPermutation, f: &MultiPoly) -> Result<MultiPoly, WeylError> {
    if f.nvars() != w.rank() {
        return Err(WeylError::DimensionMismatch {
            expected: w.rank(),
            found: f.nvars(),
        });
    }
    Ok(MultiPoly::from_terms(
        f.nvars(),
        f.terms().map(|(m, c)| {
            let (m2, s) = w.act_monomial(m);
            (m2, if s < 0 { -c } else { c.clone() })
        }),
    ))
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i8 {
    let mut sign = 1i8;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Sign vectors with an even number of `-1` entries, lexicographic with
/// `+1 < -1`. Bit `n-1-i` of the mask set means entry `i` is negative.
pub(crate) fn even_sign_masks(n: usize) -> impl Iterator<Item = u32> {
    (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0)
}

pub(crate) fn signs_from_mask(n: usize, mask: u32) -> Vec<i8> {
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

pub fn weyl_d_order(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    fact << (n - 1)
}

/// Lazily walks W(D_n) in lexicographic `(perm, signs)` order.
pub fn weyl_d_iter(n: usize) -> Result<impl Iterator<Item = SignedPermutation>, WeylError> {
    if !(1..=MAX_ENUMERATION_RANK).contains(&n) {
        return Err(WeylError::RankOutOfRange {
            n,
            min: 1,
            max: MAX_ENUMERATION_RANK,
        });
    }
    Ok(permutations(n).into_iter().flat_map(move |perm| {
        even_sign_masks(n).map(move |mask| SignedPermutation {
            perm: perm.clone(),
            signs: signs_from_mask(n, mask),
        })
    }))
}

/// Every element of W(D_n), `2^{n-1} n!` of them.
pub fn enumerate_weyl_d(n: usize) -> Result<Vec<SignedPermutation>, WeylError> {
    Ok(weyl_d_iter(n)?.collect())
}

/// Generators of W(D_n): adjacent transpositions plus the transposition of
/// the first two coordinates with both signs flipped.
pub fn weyl_d_generators(n: usize) -> Vec<SignedPermutation> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(SignedPermutation {
            perm,
            signs: vec![1; n],
        });
    }
    if n >= 2 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, 1);
        let mut signs = vec![1; n];
        signs[0] = -1;
        signs[1] = -1;
        gens.push(SignedPermutation { perm, signs });
    }
    gens
}

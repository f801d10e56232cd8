use std::cmp::Ordering;

use smallvec::SmallVec;

/// A monomial `z_1^{a_1} ... z_n^{a_n}` stored as a dense exponent vector of
/// length `n`. Zero exponents are simply absent variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    /// The monomial `z_{index+1}`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn set_exponent(&mut self, index: usize, exp: u32) {
        self.exps[index] = exp;
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True when no variable occurs to a power above one.
    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }
}

/// Graded order: total degree first, then within a degree the
/// lexicographically *larger* exponent vector sorts first, so `z1^2` precedes
/// `z1*z2` precedes `z2^2`. This is a monomial order (it reverses lex inside
/// each finite homogeneous block), and the last element of a sorted map is the
/// leading term used by division.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_then_reverse_lex() {
        let a = Monomial::from_exponents([2, 0]);
        let b = Monomial::from_exponents([1, 1]);
        let c = Monomial::from_exponents([0, 2]);
        let d = Monomial::from_exponents([3, 0]);
        let mut v = vec![d.clone(), c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
    }

    #[test]
    fn order_is_multiplicative() {
        let a = Monomial::from_exponents([2, 0, 1]);
        let b = Monomial::from_exponents([1, 1, 1]);
        let m = Monomial::from_exponents([0, 3, 2]);
        assert_eq!(a.cmp(&b), a.mul(&m).cmp(&b.mul(&m)));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exponents([1, 2]);
        let b = Monomial::from_exponents([1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents([0, 1]));
    }
}

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Alphabet, Monomial, PolyError};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in a sorted map with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// `z_{index+1}`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::variable(nvars, index), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let nvars = m.nvars();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms. Panics if a monomial has the wrong number of variables.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            *acc.entry(m).or_default() += c;
        }
        Self::from_accumulator(nvars, acc)
    }

    pub(crate) fn from_accumulator(nvars: usize, acc: HashMap<Monomial, BigInt>) -> Self {
        MultiPoly {
            nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Terms in ascending monomial order (the printing order).
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> MultiPoly {
        self.filter_terms(|m, _| m.degree() == degree)
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial, &BigInt) -> bool) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, c)| keep(m, c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_same_space(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one(), &Monomial::one(self.nvars));
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one(), &Monomial::one(self.nvars));
        Ok(out)
    }

    /// `self += c * m * other`, in place.
    fn add_assign_scaled(&mut self, other: &MultiPoly, c: &BigInt, m: &Monomial) {
        for (om, oc) in &other.terms {
            let key = if m.is_one() { om.clone() } else { om.mul(m) };
            let delta = oc * c;
            match self.terms.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_space(other)?;
        Ok(self.mul_unchecked(other, |_| true))
    }

    fn mul_unchecked(&self, other: &MultiPoly, keep: impl Fn(&Monomial) -> bool) -> MultiPoly {
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 20));
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                let m = am.mul(bm);
                if keep(&m) {
                    *acc.entry(m).or_default() += ac * bc;
                }
            }
        }
        Self::from_accumulator(self.nvars, acc)
    }

    /// Product with every non-square-free monomial dropped. When both inputs
    /// are already square-free this equals `truncate_multilinear(a * b)`
    /// without ever materializing the discarded terms.
    pub fn mul_multilinear_truncated(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_space(other)?;
        Ok(self.mul_unchecked(other, Monomial::is_square_free))
    }

    pub fn truncate_multilinear(&self) -> MultiPoly {
        self.filter_terms(|m, _| m.is_square_free())
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        assert_eq!(m.nvars(), self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut out = MultiPoly::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Exact quotient `self / divisor`. Runs multivariate division against the
    /// graded order; if anything is left over the remainder is returned as
    /// the error witness.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_same_space(divisor)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = MultiPoly::zero(self.nvars);
        let mut remainder = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rest.terms.pop_last() {
            if lead_m.divides(&m) {
                let (q, r) = c.div_rem(lead_c);
                if r.is_zero() {
                    let qm = lead_m.quotient_of(&m);
                    // the leading term cancels against (m, c) which is already popped
                    for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                        let key = dm.mul(&qm);
                        let delta = -(dc * &q);
                        match rest.terms.entry(key) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(delta);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() += delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                    quotient.terms.insert(qm, q);
                    continue;
                }
            }
            remainder.terms.insert(m, c);
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::NotDivisible {
                remainder: Box::new(remainder),
            })
        }
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// variable count, which becomes the variable count of the result.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => {
                return Ok(self.clone());
            }
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::VariableCountMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(target), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            out.add_assign_scaled(&t, &BigInt::one(), &Monomial::one(target));
        }
        Ok(out)
    }

    /// Renders the polynomial with the given variable names.
    pub fn display_with<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWith {
            poly: self,
            alphabet,
        }
    }
}

struct DisplayWith<'a> {
    poly: &'a MultiPoly,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut first = true;
            if m.is_one() || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.alphabet.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = Alphabet::z(self.nvars);
        let shown = self.display_with(&alphabet);
        write!(f, "{shown}")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs)
            .expect("polynomials live in different spaces")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs)
            .expect("polynomials live in different spaces")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs)
            .expect("polynomials live in different spaces")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str, n: usize) -> MultiPoly {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&p("z1", 1) + &p("-z1", 1)).is_zero());
        assert_eq!(&p("1+z1", 1) + &p("1-z1", 1), p("2", 1));
        assert_eq!(&p("z1*z2^3", 2) + &p("z1*z2^3", 2), p("2*z1*z2^3", 2));
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let err = p("z1", 1).checked_add(&p("z1", 2)).unwrap_err();
        assert!(matches!(
            err,
            PolyError::VariableCountMismatch { left: 1, right: 2 }
        ));
        assert!(p("z1", 1).checked_mul(&p("z1", 2)).is_err());
        assert!(p("z1", 1).mul_multilinear_truncated(&p("z1", 2)).is_err());
    }

    #[test]
    fn mul_examples() {
        let prod = &p("1+z1+z2", 2) * &p("1-z1-z2", 2);
        assert_eq!(prod, p("1 - z1^2 - 2*z1*z2 - z2^2", 2));
        assert_eq!(prod.to_string(), "1 - z1^2 - 2*z1*z2 - z2^2");
        assert_eq!(&p("1+z1", 1) * &p("1-z1", 1), p("1-z1^2", 1));
        assert!((&p("3*z1^4+z2", 2) * &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn truncated_mul_examples() {
        let a = p("1+z1", 1);
        assert_eq!(a.mul_multilinear_truncated(&a).unwrap(), p("1+2*z1", 1));
        let b = p("1+z1+z2", 2)
            .mul_multilinear_truncated(&p("1-z1-z2", 2))
            .unwrap();
        assert_eq!(b, p("1 - 2*z1*z2", 2));
        let m = p("1 + 3*z1*z2 - z3", 3);
        assert_eq!(m.mul_multilinear_truncated(&MultiPoly::one(3)).unwrap(), m);
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(
            p("z1^2-z2^2", 2).exact_div(&p("z1-z2", 2)).unwrap(),
            p("z1+z2", 2)
        );
        let num = p("2*z1*z2*(z2^2-z1^2)", 2);
        assert_eq!(num.exact_div(&p("z2^2-z1^2", 2)).unwrap(), p("2*z1*z2", 2));
        match p("z1", 2).exact_div(&p("z2", 2)) {
            Err(PolyError::NotDivisible { remainder }) => assert_eq!(*remainder, p("z1", 2)),
            other => panic!("expected non-divisibility, got {other:?}"),
        }
        assert!(matches!(
            p("z1", 1).exact_div(&MultiPoly::zero(1)),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn exact_div_rejects_non_integral_quotient() {
        assert!(p("3*z1", 1).exact_div(&p("2", 1)).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let prod = p("1 - z1^2 - 2*z1*z2 - z2^2", 2);
        let z1z2 = Monomial::from_exponents([1, 1]);
        assert_eq!(prod.coefficient_of(&z1z2), BigInt::from(-2));
        assert_eq!(
            p("1+z1", 1).coefficient_of(&Monomial::variable(1, 0)),
            BigInt::from(1)
        );
        let g = p("(1+z1+z2)*(1+z1-z2)*(1-z1+z2)", 2);
        assert_eq!(g.coefficient_of(&z1z2), BigInt::from(2));
        assert_eq!(
            g.coefficient_of(&Monomial::from_exponents([5, 5])),
            BigInt::from(0)
        );
    }

    #[test]
    fn compose_substitutes() {
        // z1 -> z1 + z2, z2 -> z1*z2
        let f = p("z1^2 - z2", 2);
        let out = f.compose(&[p("z1+z2", 2), p("z1*z2", 2)]).unwrap();
        assert_eq!(out, p("z1^2 + z1*z2 + z2^2", 2));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = p("1 - z1 + 2*z2", 2);
        assert_eq!(f.pow(0), MultiPoly::one(2));
        assert_eq!(f.pow(3), &(&f * &f) * &f);
    }

    #[test]
    fn homogeneous_helpers() {
        let f = p("1 + z1 + z1*z2", 2);
        assert!(!f.is_homogeneous());
        assert_eq!(f.homogeneous_part(2), p("z1*z2", 2));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(MultiPoly::zero(2).degree(), None);
    }
}

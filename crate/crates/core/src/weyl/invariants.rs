//! Invariants of W(D_n) and their decomposition into generators.
//!
//! The invariant ring is `Z[p_1, ..., p_n] + e Z[p_1, ..., p_n]` with
//! `p_j = e_j(z_1^2, ..., z_n^2)` and `e = z_1 ... z_n`. An invariant
//! polynomial only has monomials whose exponents are all even (the `A` part)
//! or all odd (the `e B` part); after halving exponents each part is a
//! symmetric polynomial in the squares and is peeled apart against products
//! of elementary symmetric polynomials, lex-leading term first.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::group::{act, weyl_d_generators};
use super::WeylError;
use crate::poly::{Monomial, MultiPoly};

/// True iff `f` is fixed by every element of W(D_n). Checked on a
/// generating set, which is equivalent.
pub fn is_invariant(f: &MultiPoly, n: usize) -> bool {
    f.nvars() == n
        && weyl_d_generators(n)
            .iter()
            .all(|g| act(g, f).is_ok_and(|h| &h == f))
}

/// `e_j(x_1, ..., x_n)` for `j = 0..=n`.
pub fn elementary_symmetric(n: usize) -> Vec<MultiPoly> {
    // coefficients of prod (1 + x_i t)
    let mut es = vec![MultiPoly::one(n)];
    es.extend((0..n).map(|_| MultiPoly::zero(n)));
    for i in 0..n {
        let xi = MultiPoly::variable(n, i);
        for j in (1..=i + 1).rev() {
            es[j] = &es[j] + &(&es[j - 1] * &xi);
        }
    }
    es
}

/// `p_j = e_j(z_1^2, ..., z_n^2)` for `j = 1..=n` (index 0 holds `p_1`).
pub fn squared_elementary(n: usize) -> Vec<MultiPoly> {
    let squares: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::term(Monomial::variable(n, i).pow(2), 1))
        .collect();
    elementary_symmetric(n)[1..]
        .iter()
        .map(|e| e.compose(&squares).expect("n images for n variables"))
        .collect()
}

/// `z_1 ... z_n`.
pub fn euler_monomial(n: usize) -> MultiPoly {
    MultiPoly::term(Monomial::from_exponents(vec![1; n]), 1)
}

/// Writes a W(D_n)-invariant `f` as `A(p_1..p_n) + e * B(p_1..p_n)`.
///
/// `A` and `B` live in an `n`-variable space read as `p_1..p_n`.
pub fn decompose_invariant(f: &MultiPoly, n: usize) -> Result<(MultiPoly, MultiPoly), WeylError> {
    if f.nvars() != n {
        return Err(WeylError::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    if !is_invariant(f, n) {
        return Err(WeylError::NotInvariant);
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (m, c) in f.terms() {
        let exps = m.exponents();
        if exps.iter().all(|e| e % 2 == 0) {
            even.push((
                Monomial::from_exponents(exps.iter().map(|e| e / 2)),
                c.clone(),
            ));
        } else if exps.iter().all(|e| e % 2 == 1) {
            odd.push((
                Monomial::from_exponents(exps.iter().map(|e| e / 2)),
                c.clone(),
            ));
        } else {
            return Err(WeylError::NotInvariant);
        }
    }
    let mut expander = ElementaryExpander::new(n);
    let a = expander.expand(MultiPoly::from_terms(n, even))?;
    let b = expander.expand(MultiPoly::from_terms(n, odd))?;

    let p = squared_elementary(n);
    let rebuilt = &a.compose(&p).expect("n images")
        + &(&euler_monomial(n) * &b.compose(&p).expect("n images"));
    if &rebuilt != f {
        return Err(WeylError::ReconstructionFailed);
    }
    Ok((a, b))
}

/// Rewrites symmetric polynomials in `x_1..x_n` as polynomials in the
/// elementary symmetric functions, caching the products it builds.
struct ElementaryExpander {
    n: usize,
    elementary: Vec<MultiPoly>,
    products: HashMap<Monomial, MultiPoly>,
}

impl ElementaryExpander {
    fn new(n: usize) -> Self {
        ElementaryExpander {
            n,
            elementary: elementary_symmetric(n),
            products: HashMap::new(),
        }
    }

    fn product(&mut self, k: &Monomial) -> MultiPoly {
        if let Some(p) = self.products.get(k) {
            return p.clone();
        }
        let mut out = MultiPoly::one(self.n);
        for (j, &e) in k.exponents().iter().enumerate() {
            if e > 0 {
                out = &out * &self.elementary[j + 1].pow(e);
            }
        }
        self.products.insert(k.clone(), out.clone());
        out
    }

    fn expand(&mut self, mut h: MultiPoly) -> Result<MultiPoly, WeylError> {
        let n = self.n;
        let mut out = MultiPoly::zero(n);
        while !h.is_zero() {
            let (lead, c) = h
                .terms()
                .max_by(|a, b| a.0.exponents().cmp(b.0.exponents()))
                .map(|(m, c)| (m.clone(), c.clone()))
                .expect("nonzero");
            let lam = lead.exponents();
            if lam.windows(2).any(|w| w[0] < w[1]) {
                return Err(WeylError::NotInvariant);
            }
            let k = Monomial::from_exponents(
                (0..n).map(|j| lam[j] - if j + 1 < n { lam[j + 1] } else { 0 }),
            );
            let prod = self.product(&k);
            h = &h - &prod.scale(&c);
            out = &out + &MultiPoly::term(k, c);
        }
        Ok(out)
    }
}

/// A random invariant `A(p) + e B(p)` of total z-degree at most `max_degree`,
/// with small integer coefficients.
pub fn random_invariant<R: Rng + ?Sized>(n: usize, max_degree: u32, rng: &mut R) -> MultiPoly {
    let p = squared_elementary(n);
    let e = euler_monomial(n);
    let mut out = MultiPoly::zero(n);
    let nterms = rng.gen_range(1..=5);
    for _ in 0..nterms {
        let with_e = n as u32 <= max_degree && rng.gen_bool(0.4);
        let mut budget = max_degree - if with_e { n as u32 } else { 0 };
        let mut t = if with_e { e.clone() } else { MultiPoly::one(n) };
        // random product of p_j's within the degree budget
        loop {
            let affordable: Vec<usize> = (1..=n).filter(|&j| 2 * j as u32 <= budget).collect();
            if affordable.is_empty() || rng.gen_bool(0.35) {
                break;
            }
            let j = affordable[rng.gen_range(0..affordable.len())];
            t = &t * &p[j - 1];
            budget -= 2 * j as u32;
        }
        let c = BigInt::from(rng.gen_range(-6i64..=6));
        if !c.is_zero() {
            out = &out + &t.scale(&c);
        }
    }
    out
}

//! Rewriting machinery shared by the Chow ring and the cohomology subring.
//!
//! Both rings are quotients of `Z[c_2, ..., c_{2n}, t]` where `t` is `y`
//! (Chow) or `e` (cohomology). Generator `c_i` is variable `i - 2`, and `t`
//! is the last variable, `2n - 1`. The rules are
//!
//! - `t^2 -> K c_{2n}`,
//! - `t * c_odd -> 0` (Chow only),
//! - a coefficient on a monomial containing some `c_odd` is reduced mod 2.
//!
//! Every rule strictly decreases the `t`-degree, deletes a term or fixes a
//! coefficient into `{0, 1}`, and the left-hand sides only overlap in ways
//! that rejoin, so any rewrite order reaches the same normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

use crate::poly::{Alphabet, Monomial, MultiPoly};

/// Which square relation the top generator obeys.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum E2Sign {
    /// `e^2 = (-1)^n c_{2n}` and `y^2 = (-1)^n 2^{2n-2} c_{2n}`; the only
    /// choice under which the class map and torus restriction are both ring
    /// maps.
    #[default]
    Consistent,
    /// `e^2 = c_{2n}` and `y^2 = 2^{2n-2} c_{2n}`, with no sign.
    Paper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Kind {
    Chow,
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Presentation {
    pub n: usize,
    pub sign: E2Sign,
    pub kind: Kind,
}

impl Presentation {
    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn top(&self) -> usize {
        2 * self.n - 1
    }

    pub fn c_var(&self, i: usize) -> usize {
        debug_assert!((2..=2 * self.n).contains(&i));
        i - 2
    }

    pub fn top_name(&self) -> &'static str {
        match self.kind {
            Kind::Chow => "y",
            Kind::Cohomology => "e",
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        let mut names: Vec<String> = (2..=2 * self.n).map(|i| format!("c{i}")).collect();
        names.push(self.top_name().to_string());
        Alphabet::new(names)
    }

    /// Generator `c_i` for odd `i` sits at an odd variable index below the top.
    pub fn has_odd_chern(&self, m: &Monomial) -> bool {
        m.exponents()[..self.top()]
            .iter()
            .enumerate()
            .any(|(idx, &e)| e > 0 && idx % 2 == 1)
    }

    /// `K` in `t^2 -> K c_{2n}`.
    pub fn square_coefficient(&self) -> BigInt {
        let magnitude = match self.kind {
            Kind::Chow => BigInt::one() << (2 * self.n - 2),
            Kind::Cohomology => BigInt::one(),
        };
        match self.sign {
            E2Sign::Consistent if self.n % 2 == 1 => -magnitude,
            _ => magnitude,
        }
    }

    fn kills_top_times_odd(&self) -> bool {
        self.kind == Kind::Chow
    }

    /// Degree with `deg c_i = i` and `deg t = n`.
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        let top = self.top();
        m.exponents()
            .iter()
            .enumerate()
            .map(|(idx, &e)| {
                e * if idx == top {
                    self.n as u32
                } else {
                    idx as u32 + 2
                }
            })
            .sum()
    }

    pub fn is_normal(&self, body: &MultiPoly) -> bool {
        body.nvars() == self.nvars()
            && body.terms().all(|(m, c)| {
                let t = m.exponent(self.top());
                let odd = self.has_odd_chern(m);
                t <= 1 && !(odd && t == 1 && self.kills_top_times_odd()) && (!odd || c.is_one())
            })
    }

    /// Normal form, applying the rules in a fixed order.
    pub fn normalize(&self, raw: &MultiPoly) -> MultiPoly {
        assert_eq!(
            raw.nvars(),
            self.nvars(),
            "element lives in a different ring"
        );
        let top = self.top();
        let cn = self.c_var(2 * self.n);
        let k = self.square_coefficient();
        let reduced = raw.terms().filter_map(|(m, c)| {
            let t = m.exponent(top);
            let mut m = m.clone();
            let mut c = c.clone();
            if t >= 2 {
                let q = t / 2;
                m.set_exponent(top, t % 2);
                m.set_exponent(cn, m.exponent(cn) + q);
                c *= num_traits::pow(k.clone(), q as usize);
            }
            if self.kills_top_times_odd() && m.exponent(top) == 1 && self.has_odd_chern(&m) {
                return None;
            }
            Some((m, c))
        });
        let merged = MultiPoly::from_terms(self.nvars(), reduced);
        self.reduce_torsion(&merged)
    }

    fn reduce_torsion(&self, body: &MultiPoly) -> MultiPoly {
        let two = BigInt::from(2);
        MultiPoly::from_terms(
            self.nvars(),
            body.terms().map(|(m, c)| {
                if self.has_odd_chern(m) {
                    (m.clone(), c.mod_floor(&two))
                } else {
                    (m.clone(), c.clone())
                }
            }),
        )
    }

    /// Normal form reached by applying one randomly chosen rewrite at a time
    /// until none applies.
    pub fn normalize_randomized<R: Rng + ?Sized>(&self, raw: &MultiPoly, rng: &mut R) -> MultiPoly {
        assert_eq!(
            raw.nvars(),
            self.nvars(),
            "element lives in a different ring"
        );
        let top = self.top();
        let cn = self.c_var(2 * self.n);
        let k = self.square_coefficient();
        let mut state = raw.clone();
        loop {
            let mut redexes: Vec<(Monomial, Rule)> = Vec::new();
            for (m, c) in state.terms() {
                let t = m.exponent(top);
                let odd = self.has_odd_chern(m);
                if t >= 2 {
                    redexes.push((m.clone(), Rule::SquareTop));
                }
                if t >= 1 && odd && self.kills_top_times_odd() {
                    redexes.push((m.clone(), Rule::KillTopOdd));
                }
                if odd && !c.is_one() {
                    redexes.push((m.clone(), Rule::Torsion));
                }
            }
            if redexes.is_empty() {
                return state;
            }
            let (m, rule) = redexes.swap_remove(rng.gen_range(0..redexes.len()));
            let c = state.coefficient_of(&m);
            let old = MultiPoly::term(m.clone(), c.clone());
            let new = match rule {
                Rule::SquareTop => {
                    let mut m2 = m.clone();
                    m2.set_exponent(top, m.exponent(top) - 2);
                    m2.set_exponent(cn, m.exponent(cn) + 1);
                    MultiPoly::term(m2, &c * &k)
                }
                Rule::KillTopOdd => MultiPoly::zero(self.nvars()),
                Rule::Torsion => MultiPoly::term(m, c.mod_floor(&BigInt::from(2))),
            };
            state = &(&state - &old) + &new;
        }
    }

    /// Normal monomials of the given weighted degree, ascending.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        self.basis_rec(0, degree, &mut exps, &mut out);
        out.retain(|m| {
            !(self.kills_top_times_odd() && m.exponent(self.top()) == 1 && self.has_odd_chern(m))
        });
        out.sort();
        out
    }

    fn basis_rec(&self, var: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == self.nvars() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps.iter().copied()));
            }
            return;
        }
        let weight = if var == self.top() {
            self.n as u32
        } else {
            var as u32 + 2
        };
        let cap = if var == self.top() { 1 } else { left / weight };
        for e in 0..=cap.min(left / weight) {
            exps[var] = e;
            self.basis_rec(var + 1, left - e * weight, exps, out);
        }
        exps[var] = 0;
    }

    /// A random raw element: a few monomials with top exponent up to 3 and
    /// small coefficients, of weighted degree at most `max_degree`.
    pub fn random_raw<R: Rng + ?Sized>(&self, max_degree: u32, rng: &mut R) -> MultiPoly {
        let nterms = rng.gen_range(1..=6);
        let terms = (0..nterms).map(|_| {
            let mut exps = vec![0u32; self.nvars()];
            let mut budget = rng.gen_range(0..=max_degree);
            if rng.gen_bool(0.5) {
                let t = rng.gen_range(0..=3u32).min(budget / self.n as u32);
                exps[self.top()] = t;
                budget -= t * self.n as u32;
            }
            while budget >= 2 && rng.gen_bool(0.8) {
                let i = rng.gen_range(2..=(2 * self.n).min(budget as usize));
                exps[self.c_var(i)] += 1;
                budget -= i as u32;
            }
            let c = BigInt::from(rng.gen_range(-7i64..=7));
            (Monomial::from_exponents(exps), c)
        });
        MultiPoly::from_terms(self.nvars(), terms)
    }

    /// Raw element `c_i`.
    pub fn generator(&self, i: usize) -> MultiPoly {
        MultiPoly::variable(self.nvars(), self.c_var(i))
    }

    pub fn top_generator(&self) -> MultiPoly {
        MultiPoly::variable(self.nvars(), self.top())
    }
}

#[derive(Clone, Copy, Debug)]
enum Rule {
    SquareTop,
    KillTopOdd,
    Torsion,
}

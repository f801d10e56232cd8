use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use super::presentation::{E2Sign, Kind, Presentation};
use super::RingError;
use crate::poly::{parse_with, Alphabet, Monomial, MultiPoly};

macro_rules! presented_ring {
    ($ring:ident, $elem:ident, $kind:expr, $top_doc:literal) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub struct $ring {
            pres: Presentation,
        }

        impl $ring {
            pub fn new(n: usize) -> Result<Self, RingError> {
                Self::with_sign(n, E2Sign::default())
            }

            pub fn with_sign(n: usize, sign: E2Sign) -> Result<Self, RingError> {
                if n < 1 {
                    return Err(RingError::RankOutOfRange {
                        n,
                        min: 1,
                        max: usize::MAX,
                    });
                }
                Ok($ring {
                    pres: Presentation {
                        n,
                        sign,
                        kind: $kind,
                    },
                })
            }

            pub fn rank(&self) -> usize {
                self.pres.n
            }

            pub fn sign(&self) -> E2Sign {
                self.pres.sign
            }

            /// Number of polynomial variables: `c_2..c_{2n}` plus the top generator.
            pub fn nvars(&self) -> usize {
                self.pres.nvars()
            }

            pub fn alphabet(&self) -> Alphabet {
                self.pres.alphabet()
            }

            /// `K` in the rule `t^2 -> K c_{2n}`.
            pub fn square_coefficient(&self) -> BigInt {
                self.pres.square_coefficient()
            }

            pub fn weighted_degree(&self, m: &Monomial) -> u32 {
                self.pres.weighted_degree(m)
            }

            /// Normal monomials of weighted degree `degree`.
            pub fn basis(&self, degree: u32) -> Vec<Monomial> {
                self.pres.basis(degree)
            }

            pub fn normalize(&self, raw: &MultiPoly) -> Result<$elem, RingError> {
                self.check_raw(raw)?;
                Ok($elem {
                    ring: *self,
                    body: self.pres.normalize(raw),
                })
            }

            /// Normalizes by firing one randomly chosen applicable rewrite at
            /// a time. Always agrees with [`Self::normalize`].
            pub fn normalize_randomized<R: Rng + ?Sized>(
                &self,
                raw: &MultiPoly,
                rng: &mut R,
            ) -> Result<$elem, RingError> {
                self.check_raw(raw)?;
                Ok($elem {
                    ring: *self,
                    body: self.pres.normalize_randomized(raw, rng),
                })
            }

            fn check_raw(&self, raw: &MultiPoly) -> Result<(), RingError> {
                if raw.nvars() != self.nvars() {
                    return Err(RingError::WrongSpace {
                        expected: self.nvars(),
                        found: raw.nvars(),
                    });
                }
                Ok(())
            }

            pub fn is_normal(&self, body: &MultiPoly) -> bool {
                self.pres.is_normal(body)
            }

            pub fn parse(&self, text: &str) -> Result<$elem, RingError> {
                let raw = parse_with(text, &self.alphabet())?;
                self.normalize(&raw)
            }

            pub fn zero(&self) -> $elem {
                $elem {
                    ring: *self,
                    body: MultiPoly::zero(self.nvars()),
                }
            }

            pub fn one(&self) -> $elem {
                self.constant(1)
            }

            pub fn constant(&self, c: impl Into<BigInt>) -> $elem {
                $elem {
                    ring: *self,
                    body: MultiPoly::constant(self.nvars(), c),
                }
            }

            /// The Chern class `c_i`, `2 <= i <= 2n`.
            pub fn c(&self, i: usize) -> Result<$elem, RingError> {
                if !(2..=2 * self.pres.n).contains(&i) {
                    return Err(RingError::NoSuchGenerator { i, n: self.pres.n });
                }
                self.normalize(&self.pres.generator(i))
            }

            #[doc = $top_doc]
            pub fn top(&self) -> $elem {
                $elem {
                    ring: *self,
                    body: self.pres.top_generator(),
                }
            }

            /// Random raw element of weighted degree at most `max_degree`.
            pub fn random_raw<R: Rng + ?Sized>(&self, max_degree: u32, rng: &mut R) -> MultiPoly {
                self.pres.random_raw(max_degree, rng)
            }

            pub fn random_element<R: Rng + ?Sized>(&self, max_degree: u32, rng: &mut R) -> $elem {
                let raw = self.random_raw(max_degree, rng);
                $elem {
                    ring: *self,
                    body: self.pres.normalize(&raw),
                }
            }
        }

        /// An element in normal form.
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $elem {
            ring: $ring,
            body: MultiPoly,
        }

        impl $elem {
            pub fn ring(&self) -> $ring {
                self.ring
            }

            /// The canonical polynomial in `c_2..c_{2n}` and the top generator.
            pub fn body(&self) -> &MultiPoly {
                &self.body
            }

            pub fn is_zero(&self) -> bool {
                self.body.is_zero()
            }

            fn same_ring(&self, other: &$elem) -> Result<(), RingError> {
                if self.ring != other.ring {
                    return Err(RingError::RankMismatch {
                        left: self.ring.rank(),
                        right: other.ring.rank(),
                    });
                }
                Ok(())
            }

            pub fn add(&self, other: &$elem) -> Result<$elem, RingError> {
                self.same_ring(other)?;
                self.ring.normalize(&(&self.body + &other.body))
            }

            pub fn sub(&self, other: &$elem) -> Result<$elem, RingError> {
                self.same_ring(other)?;
                self.ring.normalize(&(&self.body - &other.body))
            }

            pub fn mul(&self, other: &$elem) -> Result<$elem, RingError> {
                self.same_ring(other)?;
                self.ring.normalize(&(&self.body * &other.body))
            }

            pub fn neg(&self) -> $elem {
                $elem {
                    ring: self.ring,
                    body: self.ring.pres.normalize(&-&self.body),
                }
            }

            pub fn scale(&self, c: &BigInt) -> $elem {
                $elem {
                    ring: self.ring,
                    body: self.ring.pres.normalize(&self.body.scale(c)),
                }
            }

            pub fn pow(&self, k: u32) -> $elem {
                let mut out = self.ring.one();
                for _ in 0..k {
                    out = out.mul(self).expect("same ring");
                }
                out
            }

            pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
                self.body.coefficient_of(m)
            }
        }

        impl fmt::Display for $elem {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let alphabet = self.ring.alphabet();
                let shown = self.body.display_with(&alphabet);
                write!(f, "{shown}")
            }
        }
    };
}

presented_ring!(
    ChowRing,
    ChowElement,
    Kind::Chow,
    "The Edidin-Graham class `y`."
);
presented_ring!(
    CohRing,
    CohElement,
    Kind::Cohomology,
    "The Euler class `e`."
);

impl ChowRing {
    pub fn y(&self) -> ChowElement {
        self.top()
    }

    /// The raw generators of the relation ideal: `2 c_odd` for each odd
    /// index, `y c_odd` for each odd index, and `y^2 - K c_{2n}`.
    pub fn relations(&self) -> Vec<(String, MultiPoly)> {
        let p = &self.pres;
        let mut out = Vec::new();
        for i in (3..2 * p.n).step_by(2) {
            out.push((format!("2*c{i}"), p.generator(i).scale(&BigInt::from(2))));
        }
        for i in (3..2 * p.n).step_by(2) {
            out.push((format!("y*c{i}"), &p.top_generator() * &p.generator(i)));
        }
        let square = &p.top_generator() * &p.top_generator();
        let rhs = p.generator(2 * p.n).scale(&p.square_coefficient());
        out.push((
            format!("y^2 - ({})*c{}", p.square_coefficient(), 2 * p.n),
            &square - &rhs,
        ));
        out
    }

    /// Solves `2 x == target` inside the weighted-degree block of `target`
    /// by running through every normal monomial of that degree. Returns
    /// `None` when no solution exists.
    pub fn halve(&self, target: &ChowElement) -> Result<Option<ChowElement>, RingError> {
        if target.ring != *self {
            return Err(RingError::RankMismatch {
                left: self.rank(),
                right: target.ring.rank(),
            });
        }
        let degrees: std::collections::BTreeSet<u32> = target
            .body
            .terms()
            .map(|(m, _)| self.weighted_degree(m))
            .collect();
        let two = BigInt::from(2);
        let mut solution = MultiPoly::zero(self.nvars());
        for d in degrees {
            // images of the basis under doubling; each is 0 or a multiple of
            // a single normal monomial, so the system is diagonal
            let mut pivot: std::collections::HashMap<Monomial, (Monomial, BigInt)> =
                std::collections::HashMap::new();
            for b in self.basis(d) {
                let image = self
                    .pres
                    .normalize(&MultiPoly::term(b.clone(), two.clone()));
                match image.len() {
                    0 => {}
                    1 => {
                        let (m, k) = image.terms().next().expect("one term");
                        if pivot.insert(m.clone(), (b.clone(), k.clone())).is_some() {
                            return Err(RingError::NonDiagonalDoubling);
                        }
                    }
                    _ => return Err(RingError::NonDiagonalDoubling),
                }
            }
            for (m, c) in target
                .body
                .terms()
                .filter(|(m, _)| self.weighted_degree(m) == d)
            {
                let Some((b, k)) = pivot.get(m) else {
                    return Ok(None);
                };
                if (c % k) != BigInt::from(0) {
                    return Ok(None);
                }
                solution = &solution + &MultiPoly::term(b.clone(), c / k);
            }
        }
        let x = self.normalize(&solution)?;
        debug_assert_eq!(x.scale(&two), *target);
        Ok(Some(x))
    }
}

impl CohRing {
    pub fn e(&self) -> CohElement {
        self.top()
    }
}

pub(crate) fn coh_presentation(ring: &CohRing) -> &Presentation {
    &ring.pres
}

use num_bigint::BigInt;
use num_traits::One;

use super::elements::coh_presentation;
use super::{ChowElement, ChowRing, CohElement, CohRing, RingError};
use crate::poly::MultiPoly;
use crate::weights::weights_dplus_extreme;
use crate::weyl::{decompose_invariant, euler_monomial, squared_elementary};

/// Cohomology ring receiving the class map from `ring`.
pub fn target_ring(ring: &ChowRing) -> CohRing {
    CohRing::with_sign(ring.rank(), ring.sign()).expect("rank already validated")
}

/// The class map `c_i -> c_i`, `y -> 2^{n-1} e`, on an element in normal
/// form.
pub fn class_map(x: &ChowElement) -> CohElement {
    class_map_raw(&x.ring(), x.body()).expect("body lives in the ring's space")
}

/// The class map applied to an arbitrary polynomial in the Chow generators,
/// then normalized in cohomology.
pub fn class_map_raw(ring: &ChowRing, raw: &MultiPoly) -> Result<CohElement, RingError> {
    let target = target_ring(ring);
    if raw.nvars() != ring.nvars() {
        return Err(RingError::WrongSpace {
            expected: ring.nvars(),
            found: raw.nvars(),
        });
    }
    let n = ring.rank();
    let nvars = ring.nvars();
    let mut images: Vec<MultiPoly> = (0..nvars - 1)
        .map(|i| MultiPoly::variable(nvars, i))
        .collect();
    images.push(MultiPoly::variable(nvars, nvars - 1).scale(&(BigInt::one() << (n - 1))));
    let mapped = raw.compose(&images)?;
    target.normalize(&mapped)
}

/// Restriction to the maximal torus: `c_{2j} -> (-1)^j e_j(z_1^2..z_n^2)`,
/// `c_odd -> 0`, `e -> z_1 ... z_n`. Odd Chern classes are 2-torsion and
/// die.
pub fn torus_restriction(x: &CohElement) -> MultiPoly {
    let ring = x.ring();
    let n = ring.rank();
    let p = squared_elementary(n);
    let mut images = Vec::with_capacity(ring.nvars());
    for i in 2..=2 * n {
        if i % 2 == 1 {
            images.push(MultiPoly::zero(n));
        } else {
            let j = i / 2;
            let pj = &p[j - 1];
            images.push(if j % 2 == 1 { -pj } else { pj.clone() });
        }
    }
    images.push(euler_monomial(n));
    x.body().compose(&images).expect("one image per generator")
}

/// Writes a W(D_n)-invariant polynomial in `z_1..z_n` in terms of
/// `c_2, c_4, ..., c_{2n}` and `e`.
pub fn express_in_generators(f: &MultiPoly, ring: &CohRing) -> Result<CohElement, RingError> {
    let n = ring.rank();
    let (a, b) = decompose_invariant(f, n)?;
    let nvars = ring.nvars();
    let pres = coh_presentation(ring);
    // p_j = (-1)^j c_{2j}
    let images: Vec<MultiPoly> = (1..=n)
        .map(|j| {
            let c = pres.generator(2 * j);
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let e = MultiPoly::variable(nvars, nvars - 1);
    let raw = &a.compose(&images)? + &(&e * &b.compose(&images)?);
    let out = ring.normalize(&raw)?;
    if &torus_restriction(&out) != f {
        return Err(RingError::RestrictionMismatch);
    }
    Ok(out)
}

/// `c_n(D_n^+) = d_n e + p` with `p` free of `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub n: usize,
    pub d_n: BigInt,
    pub p: CohElement,
    /// The degree-`n` part of the torus-level total Chern class.
    pub torus_part: MultiPoly,
}

pub const MAX_THEOREM3_RANK: usize = 5;

pub fn theorem3_report(n: usize) -> Result<Theorem3Report, RingError> {
    if !(2..=MAX_THEOREM3_RANK).contains(&n) {
        return Err(RingError::RankOutOfRange {
            n,
            min: 2,
            max: MAX_THEOREM3_RANK,
        });
    }
    let ring = CohRing::new(n)?;
    let torus_part = weights_dplus_extreme(n)
        .total_chern()
        .homogeneous_part(n as u32);
    let cn = express_in_generators(&torus_part, &ring)?;
    let e = ring.e();
    let d_n = cn.coefficient_of(e.body().terms().next().expect("e is a monomial").0);
    let p = cn.sub(&e.scale(&d_n))?;
    Ok(Theorem3Report {
        n,
        d_n,
        p,
        torus_part,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::weights::weights_standard;

    #[test]
    fn class_map_examples() {
        let r3 = ChowRing::new(3).unwrap();
        assert_eq!(class_map(&r3.y()).to_string(), "4*e");
        assert_eq!(class_map(&r3.c(3).unwrap()).to_string(), "c3");
        for n in 2..=4 {
            let r = ChowRing::new(n).unwrap();
            let y2 = class_map(&r.y().mul(&r.y()).unwrap());
            let rhs = class_map(&r.c(2 * n).unwrap().scale(&r.square_coefficient()));
            assert!(y2.sub(&rhs).unwrap().is_zero());
        }
    }

    #[test]
    fn torus_restriction_examples() {
        let h2 = CohRing::new(2).unwrap();
        assert_eq!(
            torus_restriction(&h2.c(2).unwrap()),
            parse_poly("-(z1^2+z2^2)", 2).unwrap()
        );
        assert_eq!(
            torus_restriction(&h2.c(4).unwrap()),
            parse_poly("z1^2*z2^2", 2).unwrap()
        );
        let total = h2.parse("1 + c2 + c3 + c4").unwrap();
        assert_eq!(torus_restriction(&total), weights_standard(2).total_chern());
        let h3 = CohRing::new(3).unwrap();
        assert!(torus_restriction(&h3.c(3).unwrap()).is_zero());
        for n in 2..=5 {
            let h = CohRing::new(n).unwrap();
            let e2 = h.e().mul(&h.e()).unwrap();
            let e = euler_monomial(n);
            assert_eq!(torus_restriction(&e2), &e * &e);
        }
    }

    #[test]
    fn express_examples() {
        let h2 = CohRing::new(2).unwrap();
        let f = weights_dplus_extreme(2).total_chern();
        assert_eq!(
            express_in_generators(&f, &h2).unwrap().to_string(),
            "1 + c2 - 2*e"
        );
        let g = parse_poly("z1^2*z2^2", 2).unwrap();
        assert_eq!(express_in_generators(&g, &h2).unwrap().to_string(), "c4");
        for n in 2..=4 {
            let h = CohRing::new(n).unwrap();
            assert_eq!(
                express_in_generators(&euler_monomial(n), &h).unwrap(),
                h.e()
            );
        }
        assert!(matches!(
            express_in_generators(&parse_poly("z1", 2).unwrap(), &h2),
            Err(RingError::Weyl(_))
        ));
    }

    #[test]
    fn theorem3_small() {
        let r = theorem3_report(2).unwrap();
        assert_eq!(r.d_n, BigInt::from(-2));
        assert_eq!(r.p.to_string(), "c2");
        assert_eq!(theorem3_report(3).unwrap().d_n, BigInt::from(-8));
        assert_eq!(theorem3_report(4).unwrap().d_n, BigInt::from(-48));
        assert!(theorem3_report(1).is_err());
        assert!(theorem3_report(6).is_err());
    }
}

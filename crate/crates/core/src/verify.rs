//! Per-rank verification suite.
//!
//! [`verify`] runs every check that applies at rank `n` and returns a report
//! with one line per check. Random inputs come from a ChaCha8 stream seeded
//! by `n` and the check, so reports are reproducible byte for byte.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::poly::MultiPoly;
use crate::ring::{
    class_map, class_map_raw, theorem3_report, torus_restriction, ChowRing, CohRing, E2Sign,
};
use crate::weights::{
    euler_coefficient_closed, euler_coefficient_kutin_with, euler_coefficient_product_with,
    kutin_pairing_audit, weights_dplus_extreme, weights_standard,
};
use crate::weyl::{
    act, eg_class_input, euler_monomial, projection_class, pushforward_flag_with, random_invariant,
    weyl_d_order, SignedPermutation,
};

pub const MIN_VERIFY_RANK: usize = 2;
pub const MAX_VERIFY_RANK: usize = 6;

pub const PROJECTION_SAMPLES: usize = 20;
pub const MULTIPLICATIVITY_PAIRS: usize = 100;
pub const CONFLUENCE_TRIALS: usize = 500;
pub const SIGN_VECTOR_SAMPLES: usize = 50;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("rank {n} outside the supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

/// Names of the checks that apply at rank `n`, in report order.
pub fn checks_for(n: usize) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|(_, ranks, _)| ranks.contains(&n))
        .map(|(name, _, _)| *name)
        .collect()
}

type CheckFn = fn(&Ctx) -> Result<String, String>;

struct Ctx {
    n: usize,
    sign: E2Sign,
    exec: Execution,
}

impl Ctx {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(((self.n as u64) << 32) | salt)
    }
}

const CHECKS: &[(&str, RangeInclusive<usize>, CheckFn)] = &[
    ("d_n_routes", 2..=10, check_d_n_routes),
    ("edidin_graham", 2..=6, check_edidin_graham),
    ("projection_formula", 2..=5, check_projection_formula),
    ("relations_vanish", 2..=6, check_relations_vanish),
    (
        "class_map_multiplicative",
        2..=6,
        check_class_map_multiplicative,
    ),
    ("confluence", 2..=6, check_confluence),
    ("theorem3", 2..=4, check_theorem3),
    ("odd_chern_vanishing", 2..=8, check_odd_chern_vanishing),
    ("kutin_audit", 2..=8, check_kutin_audit),
    ("even_sign_symmetry", 2..=6, check_even_sign_symmetry),
    ("y_not_divisible", 2..=5, check_y_not_divisible),
];

pub fn verify(n: usize, sign: E2Sign, exec: Execution) -> Result<VerifyReport, VerifyError> {
    check_rank(n)?;
    let ctx = Ctx { n, sign, exec };
    let checks = CHECKS
        .iter()
        .filter(|(_, ranks, _)| ranks.contains(&n))
        .map(|(name, _, run)| {
            let (status, witness) = match run(&ctx) {
                Ok(w) => (Status::Pass, w),
                Err(w) => (Status::Fail, w),
            };
            Check {
                name,
                status,
                witness,
            }
        })
        .collect();
    Ok(VerifyReport { n, checks })
}

/// Reports for `2..=upto`, in ascending `n`. Ranks run concurrently under
/// [`Execution::Parallel`].
pub fn verify_upto(
    upto: usize,
    sign: E2Sign,
    exec: Execution,
) -> Result<Vec<VerifyReport>, VerifyError> {
    check_rank(upto)?;
    let ranks: Vec<usize> = (MIN_VERIFY_RANK..=upto).collect();
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return ranks
            .into_par_iter()
            .map(|n| verify(n, sign, exec))
            .collect();
    }
    ranks.into_iter().map(|n| verify(n, sign, exec)).collect()
}

fn check_rank(n: usize) -> Result<(), VerifyError> {
    if !(MIN_VERIFY_RANK..=MAX_VERIFY_RANK).contains(&n) {
        return Err(VerifyError::RankOutOfRange {
            n,
            min: MIN_VERIFY_RANK,
            max: MAX_VERIFY_RANK,
        });
    }
    Ok(())
}

fn ensure(ok: bool, witness: String) -> Result<String, String> {
    if ok {
        Ok(witness)
    } else {
        Err(witness)
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

fn two_pow(k: usize) -> BigInt {
    BigInt::one() << k
}

fn check_d_n_routes(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let product = euler_coefficient_product_with(n, ctx.exec).map_err(err)?;
    let kutin = euler_coefficient_kutin_with(n, ctx.exec).map_err(err)?;
    let closed = euler_coefficient_closed(n).map_err(err)?;
    let order = weyl_d_order(n);
    let witness =
        format!("product {product}, kutin {kutin}, closed {closed}, |W| = {closed}*{n} = {order}");
    ensure(
        product == kutin && product == -&closed && &closed * BigInt::from(n) == order,
        witness,
    )
}

fn check_edidin_graham(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let got = pushforward_flag_with(&eg_class_input(n), n, ctx.exec)
        .map_err(err)?
        .value;
    let want = euler_monomial(n).scale(&two_pow(n - 1));
    ensure(got == want, format!("p_*(EG input) = {got}"))
}

fn check_projection_formula(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let mut rng = ctx.rng(3);
    let s = projection_class(n);
    let scale = two_pow(n - 1);
    for trial in 0..PROJECTION_SAMPLES {
        let g = random_invariant(n, 2 * n as u32, &mut rng);
        let got = pushforward_flag_with(&(&s * &g), n, ctx.exec)
            .map_err(err)?
            .value;
        if got != g.scale(&scale) {
            return Err(format!("trial {trial}: g = {g}, p_*(s g) = {got}"));
        }
    }
    Ok(format!("{PROJECTION_SAMPLES} random invariants"))
}

fn check_relations_vanish(ctx: &Ctx) -> Result<String, String> {
    let ring = ChowRing::with_sign(ctx.n, ctx.sign).map_err(err)?;
    let relations = ring.relations();
    for (name, raw) in &relations {
        let image = class_map_raw(&ring, raw).map_err(err)?;
        if !image.is_zero() {
            return Err(format!("{name} maps to {image}"));
        }
    }
    Ok(format!("{} relations map to 0", relations.len()))
}

fn check_class_map_multiplicative(ctx: &Ctx) -> Result<String, String> {
    let ring = ChowRing::with_sign(ctx.n, ctx.sign).map_err(err)?;
    let mut rng = ctx.rng(5);
    let max_degree = 2 * ctx.n as u32;
    for trial in 0..MULTIPLICATIVITY_PAIRS {
        let a = ring.random_element(max_degree, &mut rng);
        let b = ring.random_element(max_degree, &mut rng);
        let lhs = class_map(&a.mul(&b).map_err(err)?);
        let rhs = class_map(&a).mul(&class_map(&b)).map_err(err)?;
        if lhs != rhs {
            return Err(format!("trial {trial}: a = {a}, b = {b}"));
        }
    }
    Ok(format!("{MULTIPLICATIVITY_PAIRS} random pairs"))
}

fn check_confluence(ctx: &Ctx) -> Result<String, String> {
    let chow = ChowRing::with_sign(ctx.n, ctx.sign).map_err(err)?;
    let coh = CohRing::with_sign(ctx.n, ctx.sign).map_err(err)?;
    let mut rng = ctx.rng(6);
    let max_degree = 3 * ctx.n as u32;
    for trial in 0..CONFLUENCE_TRIALS {
        let (fixed, random, raw) = if rng.gen_bool(0.5) {
            let raw = chow.random_raw(max_degree, &mut rng);
            let a = chow.normalize(&raw).map_err(err)?;
            let b = chow.normalize_randomized(&raw, &mut rng).map_err(err)?;
            (a.to_string(), b.to_string(), raw)
        } else {
            let raw = coh.random_raw(max_degree, &mut rng);
            let a = coh.normalize(&raw).map_err(err)?;
            let b = coh.normalize_randomized(&raw, &mut rng).map_err(err)?;
            (a.to_string(), b.to_string(), raw)
        };
        if fixed != random {
            return Err(format!(
                "trial {trial}: raw {raw} gives {fixed} and {random}"
            ));
        }
    }
    Ok(format!("{CONFLUENCE_TRIALS} randomized rewrite orders"))
}

fn check_theorem3(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let report = theorem3_report(n).map_err(err)?;
    let ring = report.p.ring();
    let lifted = ring.e().scale(&report.d_n).add(&report.p).map_err(err)?;
    let restricted = torus_restriction(&lifted);
    let product = euler_coefficient_product_with(n, ctx.exec).map_err(err)?;
    let witness = format!("d_{n} = {}, p = {}", report.d_n, report.p);
    let mut ok = restricted == report.torus_part && report.d_n == product;
    if n == 2 {
        ok &= report.d_n == BigInt::from(-2) && report.p == ring.c(2).map_err(err)?;
    }
    ensure(ok, witness)
}

fn check_odd_chern_vanishing(ctx: &Ctx) -> Result<String, String> {
    let total = weights_standard(ctx.n).total_chern();
    let odd = total.filter_terms(|m, _| m.degree() % 2 == 1);
    match odd.leading_term() {
        Some((m, c)) => Err(format!(
            "odd-degree term {}",
            MultiPoly::term(m.clone(), c.clone())
        )),
        None => Ok(format!("{} terms, all of even degree", total.len())),
    }
}

fn check_kutin_audit(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let counts: Vec<usize> = (1..n)
        .map(|i| kutin_pairing_audit(n, i))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let witness = format!("unpaired counts {counts:?}");
    ensure(counts.iter().enumerate().all(|(k, &c)| c == k + 1), witness)
}

fn check_even_sign_symmetry(ctx: &Ctx) -> Result<String, String> {
    let n = ctx.n;
    let total = weights_dplus_extreme(n).total_chern();
    let mut rng = ctx.rng(10);
    for trial in 0..SIGN_VECTOR_SAMPLES {
        let mut signs: Vec<i8> = (0..n)
            .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        if signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
            signs[n - 1] = -signs[n - 1];
        }
        let w = SignedPermutation::new((0..n).collect(), signs.clone()).map_err(err)?;
        if act(&w, &total).map_err(err)? != total {
            return Err(format!(
                "trial {trial}: sign vector {signs:?} moves the product"
            ));
        }
    }
    Ok(format!(
        "{SIGN_VECTOR_SAMPLES} even sign vectors fix a product with {} terms",
        total.len()
    ))
}

fn check_y_not_divisible(ctx: &Ctx) -> Result<String, String> {
    let ring = ChowRing::with_sign(ctx.n, ctx.sign).map_err(err)?;
    let basis = ring.basis(ctx.n as u32).len();
    match ring.halve(&ring.y()).map_err(err)? {
        Some(x) => Err(format!("2*({x}) = y")),
        None => Ok(format!("no half of y among {basis} basis monomials")),
    }
}

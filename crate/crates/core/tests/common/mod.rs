//! Deterministic random instances shared by the integration suites.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratgen_core::{Polynomial, RationalGF, VariableId};

pub const SEED: u64 = 0x5eed_2026;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn var(name: &str) -> Polynomial {
    Polynomial::var(VariableId::new(name).unwrap())
}

/// Up to three terms, each an integer in [-5, 5] times a monomial of degree ≤ 2 in `vars`.
pub fn random_coefficient(rng: &mut impl Rng, vars: &[&str]) -> Polynomial {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let c = BigInt::from(rng.gen_range(-5i64..=5));
            let mut mono = Polynomial::one();
            for _ in 0..rng.gen_range(0..=2) {
                let pick = rng.gen_range(0..=vars.len());
                if pick < vars.len() {
                    mono = &mono * &var(vars[pick]);
                }
            }
            mono.scale(&c)
        })
        .sum()
}

/// An admissible generating function with ≤3 variables, m ≤ 3, n ≤ 4, h ∈ {1, 2}.
pub fn random_gf(rng: &mut impl Rng) -> RationalGF {
    let all = ["x", "y", "z"];
    let vars = &all[..rng.gen_range(0..=3)];
    let m = rng.gen_range(0..=3);
    let n = rng.gen_range(0..=4);
    let h = rng.gen_range(1..=2);
    let num = (0..=m).map(|_| random_coefficient(rng, vars)).collect();
    let mut den: Vec<Polynomial> = (0..n).map(|_| random_coefficient(rng, vars)).collect();
    den.insert(0, Polynomial::one());
    RationalGF::new(num, den, h).unwrap()
}

pub fn instances(count: usize) -> Vec<RationalGF> {
    let mut rng = rng();
    (0..count).map(|_| random_gf(&mut rng)).collect()
}

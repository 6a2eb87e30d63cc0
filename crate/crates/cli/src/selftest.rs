//! Seeded randomized checks exposed as the `selftest` subcommand.

use functorlab::canonical::{decompose, Block, BlockForm};
use functorlab::solver::{brute_force_oracle, solve, SearchConfig};
use functorlab::zmatrix::{Permutation, RelationPoly};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub cases: usize,
    pub decompose_roundtrips: usize,
    pub solver_oracle_agreements: usize,
    pub failures: Vec<String>,
}

pub fn run(seed: u64, cases: usize) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        SelftestReport { seed, cases, decompose_roundtrips: 0, solver_oracle_agreements: 0, failures: vec![] };
    for case in 0..cases {
        let form = random_block_form(&mut rng);
        let m = form.recompose();
        match decompose(&m, &form.k) {
            Ok(f) if f.recompose() == m => report.decompose_roundtrips += 1,
            Ok(_) => report.failures.push(format!("case {case}: {m} does not recompose")),
            Err(e) => report.failures.push(format!("case {case}: decompose({m}, {}) failed: {e}", form.k)),
        }

        let rel = random_relation(&mut rng);
        let cfg =
            SearchConfig::new(rng.gen_range(1..=2), rng.gen_range(0..=2)).symmetric(rng.gen()).up_to_iso(rng.gen());
        match (solve(&rel, &cfg), brute_force_oracle(&rel, &cfg)) {
            (Ok(a), Ok(b)) if a == b => report.solver_oracle_agreements += 1,
            (a, b) => report
                .failures
                .push(format!("case {case}: solver and oracle differ on {rel} with {cfg:?}: {a:?} vs {b:?}")),
        }
    }
    report
}

fn random_block_form(rng: &mut ChaCha8Rng) -> BlockForm {
    loop {
        let n = rng.gen_range(1..=10);
        let k: u64 = rng.gen_range(0..=36);
        let root = (k as f64).sqrt().round() as u64;
        let square = root * root == k;
        let divisors: Vec<u64> = (1..=k).filter(|d| k % d == 0).collect();
        let mut blocks = Vec::new();
        let mut size = 0;
        while size < n {
            let room_for_two = n - size >= 2 && !divisors.is_empty();
            if square && (!room_for_two || rng.gen_bool(0.5)) {
                blocks.push(Block::One(BigUint::from(root)));
                size += 1;
            } else if room_for_two {
                let a = *divisors.choose(rng).expect("nonempty");
                blocks.push(Block::Two(BigUint::from(a), BigUint::from(k / a)));
                size += 2;
            } else {
                break;
            }
        }
        if size != n {
            continue;
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        let perm = Permutation::from_images(images).expect("shuffled identity");
        return BlockForm::new(perm, blocks, BigUint::from(k)).expect("blocks built for k");
    }
}

fn random_relation(rng: &mut ChaCha8Rng) -> RelationPoly {
    loop {
        let mut side = || (0..=3).map(|_| rng.gen_range(0..=2u64)).collect::<Vec<_>>();
        let (g, h) = (side(), side());
        if let Ok(r) = RelationPoly::from_u64(&g, &h) {
            return r;
        }
    }
}

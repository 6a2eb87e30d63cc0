//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Every check is exact integer arithmetic; the only tolerances are
//! the wall-clock budgets printed next to each line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use functorlab::canonical::{classify_selfadjoint_sqrt, decompose, Block, BlockForm};
use functorlab::classify::{classify_cyclic, CyclicClassification};
use functorlab::formats::{to_json, SolutionSetDoc};
use functorlab::restrict::{
    cartan_check, invariant_subsets, is_invariant_subset, preserves_add, relation_descends, CartanInstance,
    CartanVerdict, Subset,
};
use functorlab::solver::{brute_force_oracle, solve, solve_parallel, SearchConfig};
use functorlab::zmatrix::{NatMatrix, Permutation, RelationPoly};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed_2026;

fn nat(v: u64) -> BigUint {
    BigUint::from(v)
}

fn mat(n: usize, vals: &[u64]) -> NatMatrix {
    NatMatrix::from_entries(n, vals.iter().map(|&v| nat(v)).collect()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every permutation of `0..n` as an image array.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_order(images: &[usize]) -> u32 {
    let mut cur: Vec<usize> = images.to_vec();
    let mut order = 1;
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| images[x]).collect();
        order += 1;
    }
    order
}

/// The image array of a 0/1 matrix with exactly one 1 in every row and
/// column, reading the 1 in column `i` as `i ↦ row`.
fn permutation_of(m: &NatMatrix) -> Option<Vec<usize>> {
    let n = m.n();
    let mut images = vec![usize::MAX; n];
    for col in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&r| !m.get(r, col).is_zero()).collect();
        match ones.as_slice() {
            [r] if m.get(*r, col).is_one() => images[col] = *r,
            _ => return None,
        }
    }
    let mut seen = images.clone();
    seen.sort_unstable();
    (seen == (0..n).collect::<Vec<_>>()).then_some(images)
}

fn involution_count(n: usize) -> usize {
    all_permutations(n).iter().filter(|p| p.iter().enumerate().all(|(i, &x)| p[x] == i)).count()
}

fn criterion_1() -> Outcome {
    let mut summary = Vec::new();
    for k in [2u64, 3, 5, 6, 7, 8] {
        for n in 1..=3 {
            let set = solve(&RelationPoly::power_equals_constant(2, k), &SearchConfig::new(n, k).symmetric(true))
                .map_err(|e| e.to_string())?;
            ensure(set.is_empty(), || format!("k={k}, n={n}: found {}", set.solutions[0]))?;
        }
    }
    summary.push("k in {2,3,5,6,7,8}: no solutions".to_string());
    for (k, root) in [(1u64, 1u64), (4, 2), (9, 3)] {
        for n in 1..=3 {
            let set = solve(&RelationPoly::power_equals_constant(2, k), &SearchConfig::new(n, k).symmetric(true))
                .map_err(|e| e.to_string())?;
            ensure(set.len() == involution_count(n), || {
                format!("k={k}, n={n}: {} solutions, expected {}", set.len(), involution_count(n))
            })?;
            for m in &set.solutions {
                let c = classify_selfadjoint_sqrt(m, &nat(k)).map_err(|e| format!("{m}: {e}"))?;
                ensure(c.matrix() == *m && c.m == nat(root), || format!("{m}: classification does not reproduce"))?;
                ensure(m.entries().iter().all(|e| e.is_zero() || *e == nat(root)), || format!("{m}: stray entry"))?;
                let p = NatMatrix::from_entries(n, m.entries().iter().map(|e| e / nat(root)).collect()).unwrap();
                let images = permutation_of(&p).ok_or_else(|| format!("{m}: not root times a permutation"))?;
                ensure(perm_order(&images) <= 2 && p.is_symmetric(), || format!("{m}: permutation not symmetric"))?;
            }
        }
    }
    summary.push("k in {1,4,9}: sqrt(k) times each involution, counts 1,2,4".into());
    Ok(summary.join("; "))
}

fn random_block_form(rng: &mut ChaCha8Rng) -> BlockForm {
    loop {
        let n = rng.gen_range(1..=10usize);
        let k: u64 = rng.gen_range(0..=36);
        let root = (0..=6u64).find(|r| r * r == k);
        let divisors: Vec<u64> = (1..=k).filter(|d| k % d == 0).collect();
        let mut blocks = Vec::new();
        let mut size = 0;
        while size < n {
            let two_fits = n - size >= 2 && !divisors.is_empty();
            match root {
                Some(r) if !two_fits || rng.gen_bool(0.4) => {
                    blocks.push(Block::One(nat(r)));
                    size += 1;
                }
                _ if two_fits => {
                    let a = *divisors.choose(rng).unwrap();
                    blocks.push(Block::Two(nat(a), nat(k / a)));
                    size += 2;
                }
                _ => break,
            }
        }
        if size != n {
            continue;
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        return BlockForm::new(Permutation::from_images(images).unwrap(), blocks, nat(k)).unwrap();
    }
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut max_n = 0;
    for case in 0..1000 {
        let form = random_block_form(&mut rng);
        let m = form.recompose();
        max_n = max_n.max(m.n());
        ensure(m.mul(&m).unwrap() == NatMatrix::scalar(m.n(), form.k.clone()), || format!("case {case}: bad sample"))?;
        let got = decompose(&m, &form.k).map_err(|e| format!("case {case}: {m}, k={}: {e}", form.k))?;
        ensure(got.recompose() == m, || format!("case {case}: {m} does not recompose"))?;
    }
    Ok(format!("1000 cases, n up to {max_n}, k <= 36, seed {SEED:#x}"))
}

fn criterion_3() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let set = solve(&RelationPoly::power_equals_power(2, 1), &SearchConfig::new(n, 2).symmetric(true))
            .map_err(|e| e.to_string())?;
        for m in &set.solutions {
            let diagonal_01 = (0..n)
                .all(|i| (0..n).all(|j| if i == j { *m.get(i, i) <= BigUint::one() } else { m.get(i, j).is_zero() }));
            ensure(diagonal_01, || format!("{m} is not a diagonal 0/1 matrix"))?;
        }
        ensure(set.len() == 1 << n, || format!("n={n}: {} solutions", set.len()))?;
        counts.push(set.len().to_string());
    }
    Ok(format!("counts {}", counts.join(", ")))
}

fn criterion_4() -> Outcome {
    for j in 1..=3 {
        for n in 1..=3 {
            let set = solve(&RelationPoly::power_equals_constant(j, 0), &SearchConfig::new(n, 2).symmetric(true))
                .map_err(|e| e.to_string())?;
            ensure(set.solutions == vec![NatMatrix::zeros(n)], || format!("X^{j}=0, n={n}: {:?}", set.solutions))?;
        }
    }
    Ok("j = 1..3, n = 1..3: only the zero matrix".into())
}

fn is_partial_involution(m: &NatMatrix) -> bool {
    let n = m.n();
    m.is_symmetric()
        && m.entries().iter().all(|e| *e <= BigUint::one())
        && (0..n).all(|i| (0..n).filter(|&j| !m.get(i, j).is_zero()).count() <= 1)
}

fn criterion_5() -> Outcome {
    let mut totals = [0, 0];
    for n in 1..=2 {
        let cfg = SearchConfig::new(n, 2).symmetric(true);
        for m in solve(&RelationPoly::power_equals_power(3, 2), &cfg).map_err(|e| e.to_string())?.solutions {
            ensure(m.pow(2) == m, || format!("{m}: X^3 = X^2 but X^2 != X"))?;
            ensure(matches!(classify_cyclic(&m, 3, 2), Ok(CyclicClassification::Idempotent { .. })), || {
                format!("{m}: classify_cyclic disagrees")
            })?;
            totals[0] += 1;
        }
        for m in solve(&RelationPoly::power_equals_power(3, 1), &cfg).map_err(|e| e.to_string())?.solutions {
            ensure(is_partial_involution(&m), || format!("{m}: X^3 = X but not a partial involution"))?;
            ensure(classify_cyclic(&m, 3, 1).is_ok(), || format!("{m}: classify_cyclic failed"))?;
            totals[1] += 1;
        }
    }
    Ok(format!("{} solutions of X^3=X^2, {} of X^3=X", totals[0], totals[1]))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for e in 1..=4u32 {
        for n in 1..=3 {
            let set = solve(&RelationPoly::power_equals_constant(e as usize, 1), &SearchConfig::new(n, 2))
                .map_err(|e| e.to_string())?;
            let expected = all_permutations(n).iter().filter(|p| e % perm_order(p) == 0).count();
            ensure(set.len() == expected, || format!("X^{e}=I, n={n}: {} solutions, expected {expected}", set.len()))?;
            for m in &set.solutions {
                let images = permutation_of(m).ok_or_else(|| format!("{m} is not a permutation matrix"))?;
                let order = perm_order(&images);
                ensure(e % order == 0, || format!("{m}: order {order} does not divide {e}"))?;
                ensure(m.is_symmetric() == (order <= 2), || format!("{m}: symmetry vs order {order}"))?;
            }
            total += set.len();
        }
    }
    Ok(format!("{total} solutions over e = 1..4, n = 1..3"))
}

/// Every coefficient list of degree at most 3 with coefficients in 0..=2.
fn small_polys() -> Vec<Vec<u64>> {
    (0..81u64)
        .map(|mut code| {
            (0..4)
                .map(|_| {
                    let d = code % 3;
                    code /= 3;
                    d
                })
                .collect()
        })
        .collect()
}

struct Sweep {
    relations: usize,
    runs: usize,
    /// `(relation, solution)` with the solution from a plain search.
    pairs: Vec<(RelationPoly, NatMatrix)>,
    symmetric: Vec<(RelationPoly, NatMatrix)>,
}

fn criterion_7(sweep: &mut Sweep) -> Outcome {
    let polys = small_polys();
    for g in &polys {
        for h in &polys {
            if g == h {
                continue;
            }
            let rel = RelationPoly::from_u64(g, h).map_err(|e| e.to_string())?;
            sweep.relations += 1;
            for n in 1..=2 {
                for bound in 0..=2 {
                    for (sym, iso) in [(false, false), (false, true), (true, false), (true, true)] {
                        let cfg = SearchConfig::new(n, bound).symmetric(sym).up_to_iso(iso);
                        let a = solve(&rel, &cfg).map_err(|e| e.to_string())?;
                        let b = brute_force_oracle(&rel, &cfg).map_err(|e| e.to_string())?;
                        ensure(a == b, || format!("{rel} with {cfg:?}: {:?} vs {:?}", a.solutions, b.solutions))?;
                        sweep.runs += 1;
                        if bound == 2 && !iso {
                            let dst = if sym { &mut sweep.symmetric } else { &mut sweep.pairs };
                            dst.extend(a.solutions.into_iter().map(|m| (rel.clone(), m)));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{} relations, {} identical solver/oracle runs", sweep.relations, sweep.runs))
}

fn criterion_8(sweep: &Sweep) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let pool = &sweep.pairs;
    ensure(!pool.is_empty(), || "criterion 7 produced no solutions".into())?;
    let mut checks = 0;
    for _ in 0..200 {
        let (rel, m) = &pool[rng.gen_range(0..pool.len())];
        ensure(m.satisfies(rel), || format!("{m} does not satisfy {rel}"))?;
        let partners: Vec<&NatMatrix> = pool.iter().filter(|(r, _)| r == rel).map(|(_, x)| x).collect();
        let other = partners[rng.gen_range(0..partners.len())];
        let sum = m.direct_sum(other);
        ensure(sum.satisfies(rel), || format!("{m} (+) {other} breaks {rel}"))?;
        for b in 1..=3 {
            let t = m.external_tensor(b).map_err(|e| e.to_string())?;
            ensure(t.satisfies(rel), || format!("{m} tensor I_{b} breaks {rel}"))?;
        }
        checks += 4;
    }
    Ok(format!("200 sampled pairs, {checks} constructions preserved their relation"))
}

fn criterion_9(sweep: &Sweep) -> Outcome {
    let mut descents = 0;
    for (rel, m) in &sweep.symmetric {
        for s in invariant_subsets(m).map_err(|e| e.to_string())? {
            let report = relation_descends(m, &s, rel).map_err(|e| format!("{m}, {s:?}: {e}"))?;
            ensure(report.is_consistent(), || format!("{m}, {s:?}, {rel}: restriction fails"))?;
            descents += 1;
        }
    }
    let mut equivalences = 0;
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..3u64.pow(cells as u32) {
            let mut c = code;
            let vals: Vec<u64> = (0..cells)
                .map(|_| {
                    let d = c % 3;
                    c /= 3;
                    d
                })
                .collect();
            let m = mat(n, &vals);
            for mask in 0..1u32 << n {
                let s = Subset::new(n, (0..n).filter(|&i| mask >> i & 1 == 1).collect()).unwrap();
                let lhs = preserves_add(&m, &s).unwrap();
                let rhs = is_invariant_subset(&m, &s.complement()).unwrap();
                ensure(lhs == rhs, || format!("{m}, {:?}: preserves_add {lhs}, invariance {rhs}", s.to_one_based()))?;
                equivalences += 1;
            }
        }
    }
    Ok(format!("{descents} descents consistent; {equivalences} (m, S) pairs agree"))
}

fn criterion_10() -> Outcome {
    let swap = mat(2, &[0, 1, 1, 0]);
    let e11 = mat(2, &[1, 0, 0, 0]);
    let two = NatMatrix::scalar(2, nat(2));
    let cases = [
        (two.clone(), vec![swap.clone(), e11]),
        (mat(2, &[2, 0, 0, 1]), vec![swap.clone()]),
        (two.clone(), vec![swap]),
    ];
    let verdicts: Vec<CartanVerdict> =
        cases.into_iter().map(|(c, f)| cartan_check(&CartanInstance::new(c, f).unwrap())).collect();
    match &verdicts[..] {
        [CartanVerdict::Pass { c }, CartanVerdict::FailCommutation { functor: 0, row: 0, col: 1 }, CartanVerdict::Reducible { basis, .. }]
            if *c == nat(2) && NatMatrix::scalar(2, c.clone()) == two && basis.len() == 1 =>
        {
            Ok("Pass(2), FailCommutation at (1,2), Reducible on span{(1,1)}".into())
        }
        other => Err(format!("{other:?}")),
    }
}

fn criterion_11() -> Outcome {
    let mut bytes = 0;
    for k in 1..=9u64 {
        for n in 1..=3 {
            let rel = RelationPoly::power_equals_constant(2, k);
            let cfg = SearchConfig::new(n, k).symmetric(true);
            let one = to_json(&SolutionSetDoc::from(&solve_parallel(&rel, &cfg, 1).map_err(|e| e.to_string())?));
            let four = to_json(&SolutionSetDoc::from(&solve_parallel(&rel, &cfg, 4).map_err(|e| e.to_string())?));
            ensure(one == four, || format!("k={k}, n={n}: outputs differ"))?;
            bytes += one.len();
        }
    }
    Ok(format!("k = 1..9, n = 1..3: {bytes} bytes identical"))
}

fn report(id: u32, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let in_budget = took <= budget;
    let (status, detail) = match (&outcome, in_budget) {
        (Ok(d), true) => ("PASS", d.clone()),
        (Ok(d), false) => ("FAIL", format!("{d}; over budget")),
        (Err(e), _) => ("FAIL", e.clone()),
    };
    println!("{status} criterion {id:>2} [{:.2}s / budget {}s] {detail}", took.as_secs_f64(), budget.as_secs());
    outcome.is_ok() && in_budget
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut sweep = Sweep { relations: 0, runs: 0, pairs: vec![], symmetric: vec![] };
    let results = [
        report(1, secs(60), criterion_1),
        report(2, secs(10), criterion_2),
        report(3, secs(5), criterion_3),
        report(4, secs(5), criterion_4),
        report(5, secs(5), criterion_5),
        report(6, secs(10), criterion_6),
        report(7, secs(120), || criterion_7(&mut sweep)),
        report(8, secs(10), || criterion_8(&sweep)),
        report(9, secs(30), || criterion_9(&sweep)),
        report(10, secs(1), criterion_10),
        report(11, secs(60), criterion_11),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

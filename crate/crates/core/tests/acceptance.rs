//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hooktrace::partitions::{partitions_of, partitions_up_to, Cell, Partition};
use hooktrace::superalgebra::{
    cycle_trace_product, permutation_matrix, super_trace_of_product, tensor_map, EvenSuperMap,
    SuperSpace,
};
use hooktrace::symgroup::{
    all_permutations, central_idempotent, centralizer_order, character, GroupAlgebraElement,
};
use hooktrace::tracepoly::{p_polynomial_with, SumMode};
use hooktrace::verify::{run_sweep, Record, Suite, SweepConfig};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 20240601;

fn sweep(suite: Suite, max_size: usize, trials: usize) -> Result<Vec<Record>, String> {
    let mut cfg = SweepConfig::new(suite);
    cfg.max_size = max_size;
    cfg.max_d = 2;
    cfg.trials = trials;
    cfg.seed = SEED;
    run_sweep(&cfg).map_err(|e| e.to_string())
}

fn all_pass(records: &[Record], ok: impl Fn(&Record) -> bool) -> Outcome {
    match records.iter().find(|r| !ok(r)) {
        Some(bad) => Err(format!("counterexample: {bad}")),
        None if records.is_empty() => Err("no cases".into()),
        None => Ok(format!("{} cases", records.len())),
    }
}

fn prop32_factorization() -> Outcome {
    let recs = sweep(Suite::Prop32, 9, 0)?;
    all_pass(&recs, |r| r.equal)
}

fn cor33_nonvanishing() -> Outcome {
    let recs = sweep(Suite::Cor33, 9, 0)?;
    all_pass(&recs, |r| r.nonzero)
}

/// Checked per permutation, with the tensor-power matrix built once per
/// tuple and reused across `Σ_r`.
fn cycle_expansion_oracle() -> Outcome {
    let mut checks = 0usize;
    for (d0, d1) in [(1, 1), (2, 1), (1, 2)] {
        let space = SuperSpace::new(d0, d1);
        for r in 1..=5 {
            let perms: Vec<_> = all_permutations(r).collect();
            let mats = perms
                .iter()
                .map(|s| permutation_matrix(s, space))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ ((d0 * 10 + d1) * 10 + r) as u64);
            for trial in 0..20 {
                let fs: Vec<EvenSuperMap> = (0..r)
                    .map(|_| EvenSuperMap::random(space, &mut rng))
                    .collect();
                let t = tensor_map(&fs).map_err(|e| e.to_string())?;
                for (sigma, p) in perms.iter().zip(&mats) {
                    let lhs = super_trace_of_product(p, &t).map_err(|e| e.to_string())?;
                    let rhs = cycle_trace_product(sigma, &fs).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(format!(
                            "σ = {sigma} on {space}, trial {trial}: {lhs} vs {rhs}"
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} permutation/tuple checks"))
}

fn deligne_vanishing() -> Outcome {
    let recs = sweep(Suite::Vanishing, 5, 0)?;
    all_pass(&recs, |r| {
        let killed = r.delta.contains_cell(Cell::new(r.d0 + 1, r.d1 + 1));
        r.equal && (r.lhs == "0") == killed
    })
}

fn razmyslov_vanishing() -> Outcome {
    let recs = sweep(Suite::Razmyslov, 6, 20)?;
    all_pass(&recs, |r| r.lhs == "0")
}

fn graded_image_dimension() -> Outcome {
    let recs = sweep(Suite::Deligne, 5, 0)?;
    all_pass(&recs, |r| r.equal)
}

fn content_specialization() -> Outcome {
    let recs = sweep(Suite::Content, 9, 0)?;
    all_pass(&recs, |r| r.equal)
}

/// Standard tableaux counted by removing corners.
fn syt_count(shape: &Partition, memo: &mut BTreeMap<Partition, BigInt>) -> BigInt {
    if shape.is_empty() {
        return BigInt::from(1);
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let parts = shape.parts();
    let mut total = BigInt::zero();
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i + 1] < parts[i] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += syt_count(&Partition::from_unsorted(smaller), memo);
        }
    }
    memo.insert(shape.clone(), total.clone());
    total
}

fn character_infrastructure() -> Outcome {
    let mut memo = BTreeMap::new();
    for n in 1..=8 {
        let parts = partitions_of(n);
        let one = Partition::new(vec![1; n]).map_err(|e| e.to_string())?;
        let mut table = Vec::new();
        for lambda in &parts {
            let row: Vec<BigInt> = parts
                .iter()
                .map(|rho| character(lambda, rho))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let degree = character(lambda, &one).map_err(|e| e.to_string())?;
            if degree != lambda.dim_irrep() || degree != syt_count(lambda, &mut memo) {
                return Err(format!("degree mismatch for {lambda}"));
            }
            table.push(row);
        }
        for (a, rho) in parts.iter().enumerate() {
            for (b, _) in parts.iter().enumerate() {
                let s: BigInt = table.iter().map(|row| &row[a] * &row[b]).sum();
                let expected = if a == b {
                    centralizer_order(rho)
                } else {
                    BigInt::zero()
                };
                if s != expected {
                    return Err(format!("column orthogonality fails at n = {n}"));
                }
            }
        }
    }
    for n in 1..=5 {
        let es: Vec<GroupAlgebraElement> = partitions_of(n)
            .iter()
            .map(central_idempotent)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let mut sum = GroupAlgebraElement::zero(n);
        for (i, e) in es.iter().enumerate() {
            for (j, f) in es.iter().enumerate() {
                let prod = e.multiply(f).map_err(|e| e.to_string())?;
                let ok = if i == j { &prod == e } else { prod.is_zero() };
                if !ok {
                    return Err(format!("idempotent relation fails at n = {n}"));
                }
            }
            sum = sum.add(e).map_err(|e| e.to_string())?;
        }
        if sum != GroupAlgebraElement::identity(n) {
            return Err(format!("idempotents do not sum to 1 at n = {n}"));
        }
    }
    Ok("n ≤ 8 characters, n ≤ 5 idempotents".into())
}

fn bridge_identity() -> Outcome {
    let recs = sweep(Suite::Bridge, 5, 50)?;
    all_pass(&recs, |r| r.equal)
}

fn aggregation() -> Outcome {
    for delta in partitions_up_to(0, 6) {
        let agg = p_polynomial_with(&delta, SumMode::Aggregated).map_err(|e| e.to_string())?;
        let naive = p_polynomial_with(&delta, SumMode::Naive).map_err(|e| e.to_string())?;
        if agg != naive {
            return Err(format!("δ = {delta}: aggregated and naive sums differ"));
        }
    }
    let delta: Partition = "4,3,2"
        .parse()
        .map_err(|e: hooktrace::Error| e.to_string())?;
    let time = |mode| -> Result<(Duration, _), String> {
        let start = Instant::now();
        let p = p_polynomial_with(&delta, mode).map_err(|e| e.to_string())?;
        Ok((start.elapsed(), p))
    };
    let (t_agg, agg) = time(SumMode::Aggregated)?;
    let (t_naive, naive) = time(SumMode::Naive)?;
    if agg != naive {
        return Err(format!("δ = {delta}: aggregated and naive sums differ"));
    }
    if agg.is_zero() {
        return Err("zero benchmark polynomial".into());
    }
    let verdict = if t_agg < t_naive {
        "faster"
    } else {
        "NOT faster"
    };
    Ok(format!(
        "|δ| ≤ 6 equal; at δ = {delta} aggregated {:.2?} vs naive {:.2?} ({verdict})",
        t_agg, t_naive
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "factorization of the specialized trace polynomial, |δ| ≤ 9",
            prop32_factorization,
        ),
        (
            "specialized trace polynomial nonzero on the skew hook, |δ| ≤ 9",
            cor33_nonvanishing,
        ),
        (
            "cycle expansion vs. tensor-power supertrace, r ≤ 5",
            cycle_expansion_oracle,
        ),
        (
            "Schur functor vanishing criterion and rank, |λ| ≤ 5, d ≤ 2",
            deligne_vanishing,
        ),
        (
            "y vanishes when (d0+1, d1+1) ∈ δ, |δ| ≤ 6",
            razmyslov_vanishing,
        ),
        (
            "y(π0 - π1) equals graded image dimension, |δ| ≤ 5",
            graded_image_dimension,
        ),
        ("content specialization, |δ| ≤ 9", content_specialization),
        (
            "characters and central idempotents",
            character_infrastructure,
        ),
        (
            "bridge identity at 50 rational points, |δ| ≤ 5",
            bridge_identity,
        ),
        ("cycle-type aggregation vs. naive sum", aggregation),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

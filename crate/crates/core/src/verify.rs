//! Verification sweeps.
//!
//! Each suite expands its bounds into an ordered list of cases, evaluates
//! them in parallel and returns one [`Record`] per check in case order, so
//! output never depends on scheduling.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{from_bigint, rat, render_rational, MultiPoly, Rational};
use crate::hookschur::count_hook_tableaux;
use crate::partitions::{partitions_up_to, Cell, Partition};
use crate::rng::{small_rational, stream};
use crate::superalgebra::{
    evaluate_algebra_element, schur_rank, super_trace_of_product, tensor_map, EvenSuperMap,
    SuperSpace,
};
use crate::symgroup::central_idempotent;
use crate::tracepoly::{
    content_specialization_check, deligne_specialization_check, p_polynomial, prop32_rhs,
    random_maps, y_equal_maps, y_function,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Factorization of the specialized trace polynomial.
    Prop32,
    /// Non-vanishing of the specialized trace polynomial.
    Cor33,
    /// `y ≡ 0` on random maps when `(d0+1, d1+1) ∈ δ`.
    Razmyslov,
    /// Schur functor rank vs. the hook criterion and tableau count.
    Vanishing,
    /// Cycle expansion of `y` vs. explicit tensor-power matrices.
    Oracle,
    /// `P(δ; 1, 0; t0, ·)` vs. the scaled content polynomial.
    Content,
    /// `y(δ; a0 π0 + a1 π1)` vs. evaluating `P` at `(a0, a1, d0, -d1)`.
    Bridge,
    /// `y(δ; π0 - π1)` vs. graded image dimensions.
    Deligne,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Prop32,
        Suite::Cor33,
        Suite::Razmyslov,
        Suite::Vanishing,
        Suite::Oracle,
        Suite::Content,
        Suite::Bridge,
        Suite::Deligne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop32 => "prop32",
            Suite::Cor33 => "cor33",
            Suite::Razmyslov => "razmyslov",
            Suite::Vanishing => "vanishing",
            Suite::Oracle => "oracle",
            Suite::Content => "content",
            Suite::Bridge => "bridge",
            Suite::Deligne => "deligne",
        }
    }

    /// Default bound on `|δ|`.
    pub fn default_max_size(self) -> usize {
        match self {
            Suite::Prop32 | Suite::Cor33 | Suite::Content => 9,
            Suite::Razmyslov => 6,
            Suite::Vanishing | Suite::Bridge | Suite::Deligne => 5,
            Suite::Oracle => 4,
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Bridge => 50,
            _ => 20,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub suite: Suite,
    pub max_size: usize,
    /// Bound on `d0` and `d1` (on `d0 + d1` for the razmyslov suite).
    pub max_d: usize,
    /// Restricts the sweep to one partition (and, with `d0`/`d1`, one space).
    pub delta: Option<Partition>,
    pub d0: Option<usize>,
    pub d1: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Corrupts the right-hand side of one seeded case; for exercising the
    /// failure path.
    pub inject_fault: bool,
}

impl SweepConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            max_size: suite.default_max_size(),
            max_d: 2,
            delta: None,
            d0: None,
            d1: None,
            trials: suite.default_trials(),
            seed: 0,
            inject_fault: false,
        }
    }
}

/// One check. `lhs`/`rhs` are rendered exactly (`p/q` rationals, polynomials
/// in `a0, a1, t0, t1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub delta: Partition,
    pub d0: usize,
    pub d1: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub nonzero: bool,
    pub pass: bool,
    pub seed: u64,
    pub trial: Option<u64>,
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} delta={} d0={} d1={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.delta,
            self.d0,
            self.d1
        )?;
        if let Some(t) = self.trial {
            write!(f, " trial={t}")?;
        }
        write!(
            f,
            " equal={} nonzero={} lhs={} rhs={}",
            self.equal, self.nonzero, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub suite: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
}

impl Summary {
    pub fn of(suite: Suite, seed: u64, records: &[Record]) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        Self {
            suite: suite.name(),
            cases: records.len(),
            passed,
            failed: records.len() - passed,
            seed,
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "summary: suite={} cases={} passed={} failed={} seed={}",
            self.suite, self.cases, self.passed, self.failed, self.seed
        )
    }
}

#[derive(Debug, Clone)]
struct Case {
    delta: Partition,
    d0: usize,
    d1: usize,
}

fn deltas(cfg: &SweepConfig, min_size: usize) -> Vec<Partition> {
    match &cfg.delta {
        Some(d) => vec![d.clone()],
        None => partitions_up_to(min_size, cfg.max_size),
    }
}

fn spaces(cfg: &SweepConfig, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for d0 in 0..=cfg.max_d {
        for d1 in 0..=cfg.max_d {
            if cfg.d0.is_some_and(|x| x != d0) || cfg.d1.is_some_and(|x| x != d1) {
                continue;
            }
            if keep(d0, d1) {
                out.push((d0, d1));
            }
        }
    }
    if let (Some(d0), Some(d1)) = (cfg.d0, cfg.d1) {
        if !out.contains(&(d0, d1)) && keep(d0, d1) {
            out.push((d0, d1));
        }
    }
    out
}

fn cases(cfg: &SweepConfig) -> Vec<Case> {
    let mut out = Vec::new();
    match cfg.suite {
        Suite::Prop32 | Suite::Cor33 => {
            for delta in deltas(cfg, 1) {
                for c in delta.max_skew_hook() {
                    if cfg.d0.is_some_and(|x| x != c.row) || cfg.d1.is_some_and(|x| x != c.col) {
                        continue;
                    }
                    out.push(Case {
                        delta: delta.clone(),
                        d0: c.row,
                        d1: c.col,
                    });
                }
            }
        }
        Suite::Razmyslov => {
            let explicit = cfg.d0.is_some() && cfg.d1.is_some();
            for delta in deltas(cfg, 1) {
                for (d0, d1) in spaces(cfg, |d0, d1| explicit || d0 + d1 <= cfg.max_d) {
                    if delta.contains_cell(Cell::new(d0 + 1, d1 + 1)) {
                        out.push(Case {
                            delta: delta.clone(),
                            d0,
                            d1,
                        });
                    }
                }
            }
        }
        Suite::Content => {
            for delta in deltas(cfg, 0) {
                out.push(Case {
                    delta,
                    d0: 0,
                    d1: 0,
                });
            }
        }
        Suite::Vanishing | Suite::Deligne | Suite::Oracle | Suite::Bridge => {
            let min = if cfg.suite == Suite::Vanishing || cfg.suite == Suite::Deligne {
                0
            } else {
                1
            };
            for delta in deltas(cfg, min) {
                for (d0, d1) in spaces(cfg, |_, _| true) {
                    out.push(Case {
                        delta: delta.clone(),
                        d0,
                        d1,
                    });
                }
            }
        }
    }
    out
}

fn bump_poly(p: MultiPoly, corrupt: bool) -> MultiPoly {
    if corrupt {
        &p + &MultiPoly::one()
    } else {
        p
    }
}

fn bump(q: Rational, corrupt: bool) -> Rational {
    if corrupt {
        q + Rational::one()
    } else {
        q
    }
}

impl Case {
    fn record(&self, cfg: &SweepConfig, trial: Option<u64>) -> Record {
        Record {
            suite: cfg.suite.name(),
            delta: self.delta.clone(),
            d0: self.d0,
            d1: self.d1,
            lhs: String::new(),
            rhs: String::new(),
            equal: false,
            nonzero: false,
            pass: false,
            seed: cfg.seed,
            trial,
        }
    }

    fn rational_record(
        &self,
        cfg: &SweepConfig,
        trial: Option<u64>,
        lhs: &Rational,
        rhs: &Rational,
    ) -> Record {
        let equal = lhs == rhs;
        Record {
            lhs: render_rational(lhs),
            rhs: render_rational(rhs),
            equal,
            nonzero: !lhs.is_zero(),
            pass: equal,
            ..self.record(cfg, trial)
        }
    }

    fn run(&self, cfg: &SweepConfig, corrupt: bool) -> Result<Vec<Record>> {
        let (d0, d1) = (self.d0, self.d1);
        let space = SuperSpace::new(d0, d1);
        let delta = &self.delta;
        match cfg.suite {
            Suite::Prop32 | Suite::Cor33 => {
                let lhs = p_polynomial(delta)?.substitute_pair(&rat(d0 as i64), &rat(-(d1 as i64)));
                let rhs = bump_poly(prop32_rhs(delta, d0, d1)?, corrupt);
                let equal = lhs == rhs;
                let nonzero = !lhs.is_zero();
                let pass = if cfg.suite == Suite::Prop32 {
                    equal && nonzero
                } else {
                    nonzero
                };
                Ok(vec![Record {
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    equal,
                    nonzero,
                    pass,
                    ..self.record(cfg, None)
                }])
            }
            Suite::Razmyslov => (0..cfg.trials as u64)
                .map(|t| {
                    let y = y_function(delta, &random_maps(space, delta.size(), cfg.seed, t))?;
                    Ok(self.rational_record(cfg, Some(t), &y, &bump(Rational::zero(), corrupt)))
                })
                .collect(),
            Suite::Vanishing => {
                let rank = schur_rank(delta, space)?;
                let lhs = rat(rank.total as i64);
                let count = count_hook_tableaux(delta, d0, d1);
                let rhs = bump(from_bigint(delta.dim_irrep()) * rat(count as i64), corrupt);
                let killed = delta.contains_cell(Cell::new(d0 + 1, d1 + 1));
                let mut rec = self.rational_record(cfg, None, &lhs, &rhs);
                rec.pass = rec.equal && (rank.total == 0) == killed;
                Ok(vec![rec])
            }
            Suite::Oracle => {
                let d = evaluate_algebra_element(&central_idempotent(delta)?, space)?;
                (0..cfg.trials as u64)
                    .map(|t| {
                        let fs = random_maps(space, delta.size(), cfg.seed, t);
                        let lhs = y_function(delta, &fs)?;
                        let rhs = bump(super_trace_of_product(&d, &tensor_map(&fs)?)?, corrupt);
                        Ok(self.rational_record(cfg, Some(t), &lhs, &rhs))
                    })
                    .collect()
            }
            Suite::Content => {
                let report = content_specialization_check(delta)?;
                let rhs = bump_poly(report.rhs, corrupt);
                let equal = report.lhs == rhs;
                Ok(vec![Record {
                    lhs: report.lhs.to_string(),
                    rhs: rhs.to_string(),
                    equal,
                    nonzero: !report.lhs.is_zero(),
                    pass: equal,
                    ..self.record(cfg, None)
                }])
            }
            Suite::Bridge => {
                let poly = p_polynomial(delta)?;
                let mut rng = stream(cfg.seed, 0);
                (0..cfg.trials as u64)
                    .map(|t| {
                        let (a0, a1) = (small_rational(&mut rng), small_rational(&mut rng));
                        let g = EvenSuperMap::graded_scalar(space, &a0, &a1);
                        let lhs = y_equal_maps(delta, &g)?;
                        let at = [a0, a1, rat(d0 as i64), rat(-(d1 as i64))];
                        let rhs = bump(poly.eval(&at), corrupt);
                        Ok(self.rational_record(cfg, Some(t), &lhs, &rhs))
                    })
                    .collect()
            }
            Suite::Deligne => {
                let report = deligne_specialization_check(delta, d0, d1)?;
                let rhs = bump(rat((report.even_dim + report.odd_dim) as i64), corrupt);
                Ok(vec![self.rational_record(cfg, None, &report.lhs, &rhs)])
            }
        }
    }
}

/// Runs a suite and returns its records in deterministic case order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<Record>> {
    let cases = cases(cfg);
    let fault = (cfg.inject_fault && !cases.is_empty())
        .then(|| stream(cfg.seed, u64::MAX).gen_range(0..cases.len()));
    let per_case = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| case.run(cfg, fault == Some(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_case.into_iter().flatten().collect())
}

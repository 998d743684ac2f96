//! Repeated timing of the KEM operations with fresh seeds per iteration,
//! labeled component spans, and wall-clock plus cycle-counter statistics.

use hqc::kem;
use hqc::oracle::baseline;
use hqc::perf::{self, Component};
use hqc::shake::{DomainTag, Prng};
use hqc::{get_params, ParamName, ParamSet};
use serde::Serialize;
use std::time::{Duration, Instant};

pub const WARMUP_ITERS: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Keygen,
    Encaps,
    Decaps,
}

impl Op {
    pub fn label(self) -> &'static str {
        match self {
            Op::Keygen => "keygen",
            Op::Encaps => "encaps",
            Op::Decaps => "decaps",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Optimized,
    Baseline,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::Optimized => "optimized",
            Variant::Baseline => "baseline-oracle",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentRow {
    pub component: String,
    pub total_ns: u128,
    pub mean_ns: f64,
    pub percent: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OpReport {
    pub param: String,
    pub op: String,
    pub variant: String,
    pub iterations: u64,
    pub wall_mean_ns: f64,
    pub wall_median_ns: u128,
    pub wall_min_ns: u128,
    /// Cycle-counter reading per operation where the platform exposes one.
    pub cycles_mean: Option<f64>,
    pub components: Vec<ComponentRow>,
}

#[cfg(target_arch = "x86_64")]
fn read_cycle_counter() -> Option<u64> {
    // SAFETY: rdtsc has no memory effects.
    Some(unsafe { core::arch::x86_64::_rdtsc() })
}

#[cfg(not(target_arch = "x86_64"))]
fn read_cycle_counter() -> Option<u64> {
    None
}

fn fresh_seed(seeder: &mut Prng) -> [u8; 32] {
    let mut out = [0u8; 32];
    seeder.fill(&mut out);
    out
}

/// One timed execution: returns (wall time, cycles, recording).
fn timed<F: FnOnce()>(f: F) -> (Duration, Option<u64>, perf::Recording) {
    let c0 = read_cycle_counter();
    let t0 = Instant::now();
    let ((), recording) = perf::record(false, f);
    let wall = t0.elapsed();
    let cycles = match (c0, read_cycle_counter()) {
        (Some(a), Some(b)) => Some(b.wrapping_sub(a)),
        _ => None,
    };
    (wall, cycles, recording)
}

struct OpRunner {
    params: &'static ParamSet,
    variant: Variant,
    pk: kem::PublicKey,
    sk: kem::SecretKey,
}

impl OpRunner {
    fn new(params: &'static ParamSet, variant: Variant, seeder: &mut Prng) -> Self {
        let seed = fresh_seed(seeder);
        // setup uses the optimized path; the flows are differentially equal
        let (pk, sk) = kem::keygen(&seed, params);
        OpRunner { params, variant, pk, sk }
    }

    /// Runs one iteration, timing only the operation under measurement.
    fn run_once(&self, op: Op, seeder: &mut Prng) -> (Duration, Option<u64>, perf::Recording) {
        match (op, self.variant) {
            (Op::Keygen, Variant::Optimized) => {
                let seed = fresh_seed(seeder);
                timed(|| {
                    let _ = kem::keygen(&seed, self.params);
                })
            }
            (Op::Keygen, Variant::Baseline) => {
                let seed = fresh_seed(seeder);
                timed(|| {
                    let _ = baseline::keygen(&seed, self.params);
                })
            }
            (Op::Encaps, Variant::Optimized) => {
                let coins = fresh_seed(seeder);
                timed(|| {
                    let _ = kem::encap(&self.pk, &coins);
                })
            }
            (Op::Encaps, Variant::Baseline) => {
                let coins = fresh_seed(seeder);
                timed(|| {
                    let _ = baseline::encap(&self.pk, &coins);
                })
            }
            (Op::Decaps, Variant::Optimized) => {
                let coins = fresh_seed(seeder);
                let (ct, _) = kem::encap(&self.pk, &coins);
                timed(|| {
                    let _ = kem::decap(&self.sk, &ct);
                })
            }
            (Op::Decaps, Variant::Baseline) => {
                let coins = fresh_seed(seeder);
                let (ct, _) = kem::encap(&self.pk, &coins);
                timed(|| {
                    let _ = baseline::decap(&self.sk, &ct);
                })
            }
        }
    }
}

fn summarize(
    param: ParamName,
    op: Op,
    variant: Variant,
    walls: &[Duration],
    cycles: &[Option<u64>],
    recordings: &[perf::Recording],
) -> OpReport {
    let iterations = walls.len() as u64;
    let total_wall: Duration = walls.iter().sum();
    let mut sorted: Vec<u128> = walls.iter().map(|d| d.as_nanos()).collect();
    sorted.sort_unstable();
    let wall_median_ns = sorted[sorted.len() / 2];
    let wall_min_ns = sorted[0];
    let wall_mean_ns = total_wall.as_nanos() as f64 / iterations as f64;

    let cycle_values: Vec<u64> = cycles.iter().flatten().copied().collect();
    let cycles_mean = if cycle_values.len() == walls.len() {
        Some(cycle_values.iter().sum::<u64>() as f64 / iterations as f64)
    } else {
        None
    };

    // component totals across all iterations
    let mut totals = [Duration::ZERO; 8];
    for rec in recordings {
        for (slot, (_, dur)) in totals.iter_mut().zip(rec.component_totals()) {
            *slot += dur;
        }
    }
    let labeled: Duration = totals
        .iter()
        .zip(Component::ALL)
        .filter(|(_, c)| *c != Component::Other)
        .map(|(d, _)| *d)
        .sum();
    // residual time not under any labeled span
    let other = total_wall.saturating_sub(labeled);
    let other_slot = Component::ALL.iter().position(|&c| c == Component::Other).unwrap();
    totals[other_slot] += other;
    let denom: Duration = totals.iter().sum();
    let denom_ns = denom.as_nanos().max(1) as f64;

    let components = Component::ALL
        .iter()
        .zip(&totals)
        .map(|(c, total)| ComponentRow {
            component: c.label().to_string(),
            total_ns: total.as_nanos(),
            mean_ns: total.as_nanos() as f64 / iterations as f64,
            percent: 100.0 * total.as_nanos() as f64 / denom_ns,
        })
        .collect();

    OpReport {
        param: param.as_str().to_string(),
        op: op.label().to_string(),
        variant: variant.label().to_string(),
        iterations,
        wall_mean_ns,
        wall_median_ns,
        wall_min_ns,
        cycles_mean,
        components,
    }
}

/// Executes the requested (param, op) grid and collects reports.
pub fn run(
    names: &[ParamName],
    ops: &[Op],
    iters: u64,
    variant: Variant,
    run_seed: &[u8; 32],
) -> Vec<OpReport> {
    let mut reports = Vec::new();
    for &name in names {
        let params = get_params(name);
        let mut seeder = Prng::new(run_seed, DomainTag::Prng);
        let runner = OpRunner::new(params, variant, &mut seeder);
        for &op in ops {
            for _ in 0..WARMUP_ITERS {
                let _ = runner.run_once(op, &mut seeder);
            }
            let mut walls = Vec::with_capacity(iters as usize);
            let mut cycles = Vec::with_capacity(iters as usize);
            let mut recordings = Vec::with_capacity(iters as usize);
            for _ in 0..iters {
                let (wall, cyc, rec) = runner.run_once(op, &mut seeder);
                walls.push(wall);
                cycles.push(cyc);
                recordings.push(rec);
            }
            reports.push(summarize(name, op, variant, &walls, &cycles, &recordings));
        }
    }
    reports
}

pub fn format_table(reports: &[OpReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{} {} ({}) - {} iterations\n",
            r.param, r.op, r.variant, r.iterations
        ));
        out.push_str(&format!(
            "  wall: mean {:.1} us, median {:.1} us, min {:.1} us",
            r.wall_mean_ns / 1e3,
            r.wall_median_ns as f64 / 1e3,
            r.wall_min_ns as f64 / 1e3
        ));
        if let Some(c) = r.cycles_mean {
            out.push_str(&format!(", cycles mean {c:.0}"));
        }
        out.push('\n');
        out.push_str("  component        mean_us    percent\n");
        for row in &r.components {
            out.push_str(&format!(
                "  {:<15} {:>9.1} {:>9.2}%\n",
                row.component,
                row.mean_ns / 1e3,
                row.percent
            ));
        }
        out.push('\n');
    }
    out
}

pub fn format_csv(reports: &[OpReport]) -> String {
    let mut out = String::from("param,op,variant,component,mean_ns,percent\n");
    for r in reports {
        for row in &r.components {
            out.push_str(&format!(
                "{},{},{},{},{:.1},{:.3}\n",
                r.param, r.op, r.variant, row.component, row.mean_ns, row.percent
            ));
        }
    }
    out
}

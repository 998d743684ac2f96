//! Sparsity-threshold sweep: times the routed multiplication at
//! representative weights under each candidate threshold, checks that
//! routing never changes the product, and reports the empirical cross-over
//! between the sparse and dense kernels.

use hqc::ring;
use hqc::shake::{sample_dense, sample_fixed_weight, DomainTag, Prng};
use hqc::{get_params, ParamName};
use serde::Serialize;
use std::time::Instant;

/// Weights covering the standardized secret and randomness weights.
const SWEEP_WEIGHTS: [usize; 6] = [66, 75, 100, 114, 131, 149];

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub param: String,
    pub threshold: usize,
    pub weight: usize,
    pub route: String,
    pub mean_ns: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub iterations: u64,
    pub rows: Vec<SweepRow>,
    /// Mean dense-kernel time per parameter set, the sparse route's
    /// comparison point.
    pub dense_baseline_ns: Vec<(String, f64)>,
    /// Lowest sampled weight whose sparse-route time exceeds the dense
    /// kernel, if any; the calibrated threshold belongs near this weight.
    pub crossover_weight: Vec<(String, Option<usize>)>,
    pub outputs_identical: bool,
}

pub fn run(
    names: &[ParamName],
    thresholds: &[usize],
    iters: u64,
    run_seed: &[u8; 32],
) -> SweepReport {
    let mut rows = Vec::new();
    let mut dense_baseline_ns = Vec::new();
    let mut crossover_weight = Vec::new();
    let mut outputs_identical = true;

    for &name in names {
        let params = get_params(name);
        let mut prng = Prng::new(run_seed, DomainTag::Prng);
        let dense_operand = sample_dense(&mut prng, params);

        // dense-kernel reference time at this ring size
        let dense_probe = sample_dense(&mut prng, params);
        let t0 = Instant::now();
        for _ in 0..iters {
            let _ = ring::dense_mul(&dense_probe, &dense_operand);
        }
        let dense_ns = t0.elapsed().as_nanos() as f64 / iters as f64;
        dense_baseline_ns.push((name.as_str().to_string(), dense_ns));

        let mut sparse_times: Vec<(usize, f64)> = Vec::new();
        for &weight in SWEEP_WEIGHTS.iter().filter(|&&w| w < params.n) {
            let support = sample_fixed_weight(&mut prng, weight, params);
            let operand = ring::to_dense(&support);

            let mut reference: Option<ring::RingElement> = None;
            for &threshold in thresholds {
                // warm-up and correctness check
                let product = ring::mul(&operand, &dense_operand, threshold);
                match &reference {
                    None => reference = Some(product),
                    Some(r) => outputs_identical &= *r == product,
                }

                let t0 = Instant::now();
                for _ in 0..iters {
                    let _ = ring::mul(&operand, &dense_operand, threshold);
                }
                let mean_ns = t0.elapsed().as_nanos() as f64 / iters as f64;
                let route = if weight < threshold { "sparse" } else { "dense" };
                rows.push(SweepRow {
                    param: name.as_str().to_string(),
                    threshold,
                    weight,
                    route: route.to_string(),
                    mean_ns,
                });
                if route == "sparse" {
                    sparse_times.push((weight, mean_ns));
                }
            }
        }

        // first sampled weight where the sparse route stops paying off
        let crossover = sparse_times
            .iter()
            .find(|&&(_, t)| t > dense_ns)
            .map(|&(w, _)| w);
        crossover_weight.push((name.as_str().to_string(), crossover));
    }

    SweepReport { iterations: iters, rows, dense_baseline_ns, crossover_weight, outputs_identical }
}

pub fn format_table(report: &SweepReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "threshold sweep - {} iterations per point, outputs identical: {}\n",
        report.iterations,
        if report.outputs_identical { "yes" } else { "NO" }
    ));
    out.push_str("  param  threshold  weight  route   mean_us\n");
    for row in &report.rows {
        out.push_str(&format!(
            "  {:<6} {:>9} {:>7}  {:<6} {:>9.2}\n",
            row.param,
            row.threshold,
            row.weight,
            row.route,
            row.mean_ns / 1e3
        ));
    }
    for ((param, dense), (_, cross)) in
        report.dense_baseline_ns.iter().zip(&report.crossover_weight)
    {
        let cross = match cross {
            Some(w) => format!("sparse route falls behind at weight {w}"),
            None => "sparse route faster at every sampled weight".to_string(),
        };
        out.push_str(&format!(
            "  {param}: dense kernel {:.2} us; {cross}\n",
            dense / 1e3
        ));
    }
    out
}

pub fn format_csv(report: &SweepReport) -> String {
    let mut out = String::from("param,threshold,weight,route,mean_ns\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{:.1}\n",
            row.param, row.threshold, row.weight, row.route, row.mean_ns
        ));
    }
    out
}

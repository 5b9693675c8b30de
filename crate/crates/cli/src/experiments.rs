use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use seplab_core::bounds::{
    kappa, rkhs_upper_bound_explicit, sigma_d_grid, sigma_d_sine, three_layer_lower_formula,
    upper_bound_2l_explicit,
};
use seplab_core::distributions::{GridPairSpec, SinePairSpec};
use seplab_core::networks::ActivationSpec;
use seplab_core::numerics::{QuadratureConfig, RngStream, SearchConfig};
use seplab_core::witness::{
    grid_witness_exact, grid_witness_fourier, mmd_estimate, sec4_two_layer_lower,
    three_layer_certificate, two_layer_ipm_search, PairRef,
};

use crate::config::{Experiment, ExperimentConfig};
use crate::report::{Cell, Format, Metadata, Report};

const DEFAULT_EPS: f64 = 0.125;
const DEFAULT_X0: f64 = 0.125;
/// Largest dimension for which the exact-enumeration cross-check stays at
/// desk scale.
const VERIFY_FOURIER_CAP: usize = 8;

fn metadata(cfg: &ExperimentConfig) -> Metadata {
    Metadata {
        tool: "seplab".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        experiment: cfg.experiment.to_string(),
        seed: cfg.seed,
        config_sha256: cfg.hash(),
    }
}

fn worker_count(rows: usize) -> usize {
    let cap = std::env::var("SEPLAB_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    cap.min(rows).max(1)
}

/// Evaluate `row_fn` for every dimension on a bounded worker pool; results
/// come back sorted by `d` so reports are order-stable.
fn pooled_rows(
    ds: &[usize],
    row_fn: impl Fn(usize) -> Result<Vec<Cell>, String> + Sync,
) -> Result<Vec<Vec<Cell>>, String> {
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<(usize, Result<Vec<Cell>, String>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..worker_count(ds.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&d) = ds.get(i) else { break };
                let row = row_fn(d);
                out.lock().unwrap().push((d, row));
            });
        }
    });
    let mut rows = out.into_inner().unwrap();
    rows.sort_by_key(|(d, _)| *d);
    rows.into_iter().map(|(d, r)| r.map_err(|e| format!("d={d}: {e}"))).collect()
}

fn grid_sigma(cfg: &ExperimentConfig, d: usize) -> Result<f64, String> {
    match cfg.overrides.sigma {
        Some(s) => Ok(s),
        None => {
            let eps = cfg.overrides.eps.unwrap_or(DEFAULT_EPS);
            let x0 = cfg.overrides.x0.unwrap_or(DEFAULT_X0);
            sigma_d_grid(d, eps, x0).map_err(|e| e.to_string())
        }
    }
}

fn grid_spec(cfg: &ExperimentConfig, d: usize) -> Result<GridPairSpec, String> {
    GridPairSpec::new(
        d,
        grid_sigma(cfg, d)?,
        cfg.overrides.x0.unwrap_or(DEFAULT_X0),
        cfg.overrides.eps.unwrap_or(DEFAULT_EPS),
    )
    .map_err(|e| e.to_string())
}

fn sine_spec(cfg: &ExperimentConfig, d: usize) -> Result<SinePairSpec, String> {
    let ell = cfg.overrides.ell.unwrap_or_else(|| (d as f64).sqrt());
    let sigma = match cfg.overrides.sigma {
        Some(s) => s,
        None => sigma_d_sine(d).map_err(|e| e.to_string())?,
    };
    SinePairSpec::new(d, sigma, ell).map_err(|e| e.to_string())
}

/// Run the configured experiment and return its report.
pub fn run(cfg: &ExperimentConfig) -> Result<Report, String> {
    cfg.validate()?;
    if matches!(cfg.experiment, Experiment::Sep3v2 | Experiment::BoundsTable) && cfg.d_lo < 2 {
        return Err(format!("{} requires d >= 2", cfg.experiment));
    }
    // The closed-form two-layer witness of the sine construction is only
    // defined for d >= 4.
    if cfg.experiment == Experiment::Sep2vrkhs && cfg.d_lo < 4 {
        return Err(format!("{} requires d >= 4", cfg.experiment));
    }
    let md = metadata(cfg);
    let ds: Vec<usize> = cfg.d_range().collect();
    match cfg.experiment {
        Experiment::Kappa => {
            let mut rep = Report::new(md, &["kappa", "maximizer"]);
            let (k, x) = kappa();
            rep.push(vec![Cell::Float(k), Cell::Float(x)]);
            Ok(rep)
        }
        Experiment::SigmaTable => {
            let mut rep = Report::new(md, &["d", "sigma_grid", "sigma_sine"]);
            let eps = cfg.overrides.eps.unwrap_or(DEFAULT_EPS);
            let x0 = cfg.overrides.x0.unwrap_or(DEFAULT_X0);
            for &d in &ds {
                rep.push(vec![
                    Cell::Int(d as i64),
                    Cell::Float(sigma_d_grid(d, eps, x0).map_err(|e| e.to_string())?),
                    Cell::Float(sigma_d_sine(d).map_err(|e| e.to_string())?),
                ]);
            }
            Ok(rep)
        }
        Experiment::VerifyFourier => {
            if cfg.d_hi > VERIFY_FOURIER_CAP {
                return Err(format!(
                    "verify-fourier cross-checks the exact route, available for d <= {VERIFY_FOURIER_CAP}"
                ));
            }
            let rows = pooled_rows(&ds, |d| verify_fourier_row(cfg, d))?;
            let mut rep =
                Report::new(md, &["d", "n_checks", "max_abs_err", "max_rel_err", "pass"]);
            rows.into_iter().for_each(|r| rep.push(r));
            Ok(rep)
        }
        Experiment::Sep3v2 => {
            let rows = pooled_rows(&ds, |d| sep3v2_row(cfg, d))?;
            let mut rep = Report::new(
                md,
                &["d", "d2L_search", "d2L_bound", "d3L_mc", "d3L_ci_low", "d3L_formula", "pass"],
            );
            rows.into_iter().for_each(|r| rep.push(r));
            Ok(rep)
        }
        Experiment::Sep2vrkhs => {
            let rows = pooled_rows(&ds, |d| sep2vrkhs_row(cfg, d))?;
            let mut rep =
                Report::new(md, &["d", "witness_2l", "mmd_est", "mmd_se", "rkhs_bound", "pass"]);
            rows.into_iter().for_each(|r| rep.push(r));
            Ok(rep)
        }
        Experiment::BoundsTable => {
            let rows = pooled_rows(&ds, |d| bounds_table_row(cfg, d))?;
            let mut rep = Report::new(
                md,
                &["d", "sigma_grid", "two_layer_bound", "sigma_sine", "rkhs_bound", "three_layer_formula"],
            );
            rows.into_iter().for_each(|r| rep.push(r));
            Ok(rep)
        }
    }
}

fn verify_fourier_row(cfg: &ExperimentConfig, d: usize) -> Result<Vec<Cell>, String> {
    use rand::Rng;
    let spec = grid_spec(cfg, d)?;
    let act = ActivationSpec::relu();
    let qc = QuadratureConfig::default();
    let mut rng = RngStream::new(cfg.seed, d as u64).rng();
    let n_checks = 20usize;
    let mut max_abs = 0.0f64;
    let mut max_rel = 0.0f64;
    for _ in 0..n_checks {
        let theta = seplab_core::numerics::sample_sphere(d, &mut rng);
        let b_max = d as f64 + (d as f64).sqrt();
        let b = rng.gen_range(-b_max..b_max);
        let exact = grid_witness_exact(&spec, &theta, b, &act).map_err(|e| e.to_string())?;
        let fourier =
            grid_witness_fourier(&spec, &theta, b, &act, &qc).map_err(|e| e.to_string())?;
        let err = (exact - fourier).abs();
        max_abs = max_abs.max(err);
        if exact.abs() > 1e-12 {
            max_rel = max_rel.max(err / exact.abs());
        }
    }
    let pass = max_abs <= 1e-6 || max_rel <= 1e-4;
    Ok(vec![
        Cell::Int(d as i64),
        Cell::Int(n_checks as i64),
        Cell::Float(max_abs),
        Cell::Float(max_rel),
        Cell::Bool(pass),
    ])
}

fn sep3v2_row(cfg: &ExperimentConfig, d: usize) -> Result<Vec<Cell>, String> {
    let spec = grid_spec(cfg, d)?;
    let search_cfg = SearchConfig { n_starts: 8, max_iters: 60, ..Default::default() };
    let est = two_layer_ipm_search(
        PairRef::Grid(&spec),
        &ActivationSpec::relu(),
        &search_cfg,
        &QuadratureConfig::default(),
        RngStream::new(cfg.seed, 1_000 + d as u64),
    )
    .map_err(|e| e.to_string())?;
    let bound = upper_bound_2l_explicit(d, spec.sigma).map_err(|e| e.to_string())?;
    let cert = three_layer_certificate(&spec, cfg.mc_samples, RngStream::new(cfg.seed, d as u64))
        .map_err(|e| e.to_string())?;
    let formula = three_layer_lower_formula(d);
    let pass = est.value <= bound.total && cert.passes;
    Ok(vec![
        Cell::Int(d as i64),
        Cell::Float(est.value),
        Cell::Float(bound.total),
        Cell::Float(cert.estimate.value),
        Cell::Float(cert.certified_lower),
        Cell::Float(formula),
        Cell::Bool(pass),
    ])
}

fn sep2vrkhs_row(cfg: &ExperimentConfig, d: usize) -> Result<Vec<Cell>, String> {
    let spec = sine_spec(cfg, d)?;
    let act = ActivationSpec::relu();
    let witness_2l = sec4_two_layer_lower(&spec).map_err(|e| e.to_string())?;
    let mmd = mmd_estimate(
        PairRef::Sine(&spec),
        &act,
        cfg.features,
        &QuadratureConfig::default(),
        RngStream::new(cfg.seed, d as u64),
    )
    .map_err(|e| e.to_string())?;
    let bound = rkhs_upper_bound_explicit(&spec, &act).map_err(|e| e.to_string())?;
    let pass = witness_2l > 0.0 && mmd.value <= bound.total + 3.0 * mmd.std_error;
    Ok(vec![
        Cell::Int(d as i64),
        Cell::Float(witness_2l),
        Cell::Float(mmd.value),
        Cell::Float(mmd.std_error),
        Cell::Float(bound.total),
        Cell::Bool(pass),
    ])
}

fn bounds_table_row(cfg: &ExperimentConfig, d: usize) -> Result<Vec<Cell>, String> {
    let sg = grid_sigma(cfg, d)?;
    let two_layer = upper_bound_2l_explicit(d, sg).map_err(|e| e.to_string())?;
    let ss = match cfg.overrides.sigma {
        Some(s) => s,
        None => sigma_d_sine(d).map_err(|e| e.to_string())?,
    };
    let sine = SinePairSpec::new(d, ss, cfg.overrides.ell.unwrap_or_else(|| (d as f64).sqrt()))
        .map_err(|e| e.to_string())?;
    let rkhs = rkhs_upper_bound_explicit(&sine, &ActivationSpec::relu())
        .map_err(|e| e.to_string())?;
    Ok(vec![
        Cell::Int(d as i64),
        Cell::Float(sg),
        Cell::Float(two_layer.total),
        Cell::Float(ss),
        Cell::Float(rkhs.total),
        Cell::Float(three_layer_lower_formula(d)),
    ])
}

/// Emit `report` and return the process exit code contract: `Ok(path)` when
/// all pass flags are true, otherwise the list of failing row indices.
pub fn emit_and_check(
    report: &Report,
    dir: &std::path::Path,
    format: Format,
) -> Result<(std::path::PathBuf, Vec<usize>), String> {
    let path = report.emit(dir, format).map_err(|e| e.to_string())?;
    Ok((path, report.failing_rows()))
}

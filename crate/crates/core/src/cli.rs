//! Batch front-end behind the `vqubit` binary.
//!
//! Each mode reads an optional JSON input (or draws seeded samples), runs the
//! identity checks, and writes a CSV (`fermion-report`) or JSON report. The
//! exit status is 0 when every check is within tolerance, 1 when a check
//! fails, and 2 for configuration or parse errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::amplitudes::{
    amp_compton_pair, amp_ee_mumu_direct, amp_ee_mumu_operator, fit_global_phase, ComptonConfig, ScatteringConfig,
    COMPTON_PHASE, EE_MUMU_PHASE,
};
use crate::dirac::LorentzVector;
use crate::entanglement::{ppt_report, transverse_concurrence, PptVerdict};
use crate::error::Error;
use crate::fermion::{eigenvalues_closed, purity, r_param, rho, validity, Validity, VALIDITY_TOL};
use crate::kinematics::{random_compton, random_fermion_point, random_scattering, random_vector, sample_rng};
use crate::linalg::{hermitian_eigenvalues, max_diff, rel_dev, C64};
use crate::pair_loop::{expectation_form, loop_trace_identity, negative_eigenvalue_census, norm_sum_closed, photon_kets, CensusRecord, GridSpec};
use crate::photon::{gauge_basis, photon_operator, psd_gauge_check, BasisFile, PolarizationBasis, PsdVerdict};
use crate::renorm::{renorm_fermion_mass, renorm_photon, renormalized_photon_operator, renormalized_rho, RenormParams, SelfEnergyForm};
use crate::sweep::{map_indices, map_slice, Execution};
use crate::thermal::thermal_decomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    FermionReport,
    PhotonReport,
    AmpCheck,
    LoopCheck,
    Census,
    RenormCheck,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "vqubit", version, about = "Qubit operators of virtual QED particles: reports and identity checks")]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// JSON input; seeded samples are drawn when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Report destination; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of generated samples when no input is given.
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_rel: f64,
    /// Evaluate samples in order on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

/// Report text plus the verdict of the checks it contains.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn config<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

fn read_input<T: for<'de> Deserialize<'de>>(cfg: &RunConfig) -> Result<Option<T>, CliError> {
    match &cfg.input {
        None => Ok(None),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| config(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map(Some).map_err(|e| config(format!("{}: {e}", path.display())))
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report is serializable");
    s.push('\n');
    s
}

/// 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if !(cfg.tol_abs > 0.0) || !(cfg.tol_rel > 0.0) {
        return Err(config("tolerances must be positive"));
    }
    let exec = if cfg.sequential { Execution::Sequential } else { Execution::Parallel };
    match cfg.mode {
        Mode::FermionReport => fermion_report(cfg, exec),
        Mode::PhotonReport => photon_report(cfg, exec),
        Mode::AmpCheck => amp_check(cfg, exec),
        Mode::LoopCheck => loop_check(cfg, exec),
        Mode::Census => census(cfg, exec),
        Mode::RenormCheck => renorm_check(cfg, exec),
    }
}

/// Runs and writes the report; returns the process exit code.
pub fn run_and_write(cfg: &RunConfig) -> u8 {
    match run(cfg) {
        Ok(outcome) => {
            let written = match &cfg.output {
                Some(path) => fs::write(path, &outcome.report),
                None => std::io::stdout().write_all(outcome.report.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("vqubit: cannot write report: {e}");
                return 2;
            }
            for f in &outcome.failures {
                eprintln!("vqubit: check failed: {f}");
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("vqubit: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FermionPoint {
    pub k: [f64; 4],
    pub m: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FermionInput {
    pub points: Vec<FermionPoint>,
}

pub const FERMION_HEADER: &str =
    "k0,k1,k2,k3,m,status,r,lambda_plus,lambda_minus,purity,validity,beta_re,beta_im,concurrence,ppt";

fn fermion_row(p: &FermionPoint, tol: f64) -> (String, Option<String>) {
    let k = LorentzVector::from_real(p.k);
    let lead = format!("{},{},{},{},{}", num(p.k[0]), num(p.k[1]), num(p.k[2]), num(p.k[3]), num(p.m));
    let body = (|| -> crate::error::Result<(String, Option<String>)> {
        let r = r_param(&k, p.m)?;
        let (lp, lm) = eigenvalues_closed(&k, p.m)?;
        let pur = purity(&k, p.m)?;
        let v = validity(&k, p.m)?;
        let ev = hermitian_eigenvalues(&rho(&k, p.m)?.matrix);
        let (br, bi) = match thermal_decomposition(&k, p.m) {
            Ok(t) => (num(t.beta.re), num(t.beta.im)),
            Err(Error::OnShellLimit(_) | Error::MaximallyMixed(_)) => (String::new(), String::new()),
            Err(e) => return Err(e),
        };
        let conc = transverse_concurrence(&k)?;
        let ppt = ppt_report(&k, p.m)?.verdict;
        let mut failure = None;
        let spectrum_ok = ev.iter().zip([lm, lm, lp, lp]).all(|(a, b)| (a - b).abs() <= tol);
        let flag_ok = (v.tag == Validity::StateValid) == (ev[0] >= -VALIDITY_TOL);
        if !spectrum_ok || !flag_ok || ppt == PptVerdict::Entangled {
            failure = Some(format!("k = {:?}, m = {}: spectrum {spectrum_ok}, validity {flag_ok}, ppt {ppt:?}", p.k, p.m));
        }
        let tag = match v.tag {
            Validity::StateValid => "StateValid",
            Validity::OperatorOnly => "OperatorOnly",
        };
        let ppt = match ppt {
            PptVerdict::Separable => "Separable",
            PptVerdict::Entangled => "Entangled",
            PptVerdict::NotAState => "NotAState",
        };
        Ok((
            format!("ok,{},{},{},{},{tag},{br},{bi},{},{ppt}", num(r), num(lp), num(lm), num(pur), num(conc)),
            failure,
        ))
    })();
    match body {
        Ok((rest, failure)) => (format!("{lead},{rest}"), failure),
        Err(e) => (format!("{lead},skipped: {},,,,,,,,,", e.to_string().replace(',', ";")), None),
    }
}

fn fermion_report(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let points = match read_input::<FermionInput>(cfg)? {
        Some(input) => input.points,
        None => map_indices(cfg.samples, exec, |i| {
            let (k, m) = random_fermion_point(&mut sample_rng(cfg.seed, i));
            FermionPoint { k: k.real_parts(), m }
        }),
    };
    if points.is_empty() {
        return Err(config(Error::EmptyGrid));
    }
    let rows = map_slice(&points, exec, |p| fermion_row(p, cfg.tol_abs));
    let mut report = String::from(FERMION_HEADER);
    report.push('\n');
    let mut failures = vec![];
    for (row, failure) in rows {
        report.push_str(&row);
        report.push('\n');
        failures.extend(failure);
    }
    Ok(Outcome { report, passed: failures.is_empty(), failures })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhotonInput {
    pub bases: Vec<BasisFile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhotonRecord {
    pub index: usize,
    pub xi: f64,
    pub completeness_residual: f64,
    pub trace: f64,
    /// `16 Σ η_i |ε_i^0|²`.
    pub trace_closed: f64,
    /// `|Σ_i ε_i^0|²`, reported for comparison.
    pub trace_sum_form: f64,
    pub verdict: PsdVerdict,
    pub sufficient_condition: bool,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// Real bases with positive norm signs plus gauge scans at a few momenta.
fn generated_bases(cfg: &RunConfig) -> Vec<PolarizationBasis> {
    let mut out: Vec<PolarizationBasis> = (0..cfg.samples)
        .map(|i| {
            let mut rng = sample_rng(cfg.seed, i);
            let k = random_vector(&mut rng, 3.0);
            let vs = std::array::from_fn(|_| {
                if rng.random_bool(0.5) {
                    // time-dominated vector
                    let s = random_vector(&mut rng, 1.0);
                    let [_, a, b, c] = s.real_parts();
                    LorentzVector::momentum((a * a + b * b + c * c).sqrt() + rng.random_range(0.01..1.0), a, b, c)
                } else {
                    random_vector(&mut rng, 1.0)
                }
            });
            PolarizationBasis::new(vs, 1.0, k)
        })
        .collect();
    for k in [LorentzVector::momentum(1.0, 0.0, 0.0, 1.0), LorentzVector::momentum(2.0, 0.0, 0.0, 1.0), LorentzVector::momentum(0.5, 1.0, 0.3, 0.0)] {
        for xi in [0.0, 1.0, 3.0] {
            if let Ok(b) = gauge_basis(&k, xi) {
                out.push(b);
            }
        }
    }
    out
}

fn photon_report(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let bases: Vec<PolarizationBasis> = match read_input::<PhotonInput>(cfg)? {
        Some(input) => input.bases.iter().map(BasisFile::to_basis).collect(),
        None => generated_bases(cfg),
    };
    if bases.is_empty() {
        return Err(config("no polarization bases supplied"));
    }
    let records = map_slice(&bases, exec, |b| {
        let d = photon_operator(b);
        let psd = psd_gauge_check(b);
        PhotonRecord {
            index: 0,
            xi: b.xi,
            completeness_residual: b.completeness_residual(),
            trace: d.matrix.trace().re,
            trace_closed: d.trace_closed(),
            trace_sum_form: b.time_component_sum().norm_sqr(),
            verdict: psd.verdict,
            sufficient_condition: psd.sufficient_condition,
            min_eigenvalue: psd.min_eigenvalue,
            max_eigenvalue: psd.max_eigenvalue,
        }
    });
    let mut failures = vec![];
    let records: Vec<_> = records
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.index = i;
            if (r.trace - r.trace_closed).abs() > cfg.tol_abs * r.trace_closed.abs().max(1.0) {
                failures.push(format!("basis {i}: trace {} vs closed form {}", r.trace, r.trace_closed));
            }
            if r.sufficient_condition && r.verdict != PsdVerdict::PositiveDefinite {
                failures.push(format!("basis {i}: sufficient condition holds but verdict is {:?}", r.verdict));
            }
            r
        })
        .collect();
    Ok(Outcome { report: to_json(&records), passed: failures.is_empty(), failures })
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct AmpInput {
    #[serde(default)]
    pub configs: Vec<ScatteringConfig>,
    #[serde(default)]
    pub compton: Vec<ComptonConfig>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmpRecord {
    pub index: usize,
    pub direct: C64,
    pub operator: C64,
    pub rel_dev: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AmpSummary {
    pub n: usize,
    pub max_rel_dev: f64,
    pub max_gauge_dev: f64,
    pub fitted_phase: C64,
    pub n_compton: usize,
    pub max_rel_dev_compton: f64,
    pub max_r_compton: f64,
    pub skipped: Vec<String>,
    pub records: Vec<AmpRecord>,
}

fn amp_check(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let input = read_input::<AmpInput>(cfg)?.unwrap_or_else(|| {
        let n = cfg.samples;
        AmpInput {
            configs: map_indices(n, exec, |i| {
                let mut rng = sample_rng(cfg.seed, i);
                let xi = [0.0, 1.0, 3.0][rng.random_range(0..3)];
                random_scattering(&mut rng, 0.7).with_xi(xi)
            }),
            compton: map_indices(n, exec, |i| {
                let mut rng = sample_rng(cfg.seed, n + i);
                let m = rng.random_range(0.1..2.0);
                random_compton(&mut rng, m)
            }),
        }
    });
    if input.configs.is_empty() && input.compton.is_empty() {
        return Err(config("no scattering configurations supplied"));
    }
    let mut skipped = vec![];
    let ee = map_slice(&input.configs, exec, |c| -> crate::error::Result<(C64, C64, f64)> {
        let d = amp_ee_mumu_direct(c)?;
        let o = amp_ee_mumu_operator(c)?;
        let gauge = [0.0, 1.0, 3.0]
            .iter()
            .map(|&xi| amp_ee_mumu_direct(&c.with_xi(xi)).map(|a| rel_dev(a, d, 1e-300)))
            .try_fold(0.0f64, |m, x| x.map(|x| m.max(x)))?;
        Ok((d, o, gauge))
    });
    let mut records = vec![];
    let mut max_gauge_dev = 0.0f64;
    for (i, r) in ee.into_iter().enumerate() {
        match r {
            Ok((d, o, g)) => {
                max_gauge_dev = max_gauge_dev.max(g);
                records.push(AmpRecord { index: i, direct: d, operator: o, rel_dev: rel_dev(d, o * EE_MUMU_PHASE, 1e-300) });
            }
            Err(e) => skipped.push(format!("ee-mumu {i}: {e}")),
        }
    }
    let fitted_phase = fit_global_phase(&records.iter().map(|r| (r.direct, r.operator)).collect::<Vec<_>>());
    let compton = map_slice(&input.compton, exec, amp_compton_pair);
    let (mut n_compton, mut max_c, mut max_r) = (0usize, 0.0f64, 0.0f64);
    for (i, r) in compton.into_iter().enumerate() {
        match r {
            Ok(p) => {
                n_compton += 1;
                max_c = max_c.max(rel_dev(p.direct, p.operator * COMPTON_PHASE, 1e-300));
                max_r = max_r.max(p.r_k.abs());
            }
            Err(e) => skipped.push(format!("compton {i}: {e}")),
        }
    }
    let max_rel_dev = records.iter().map(|r| r.rel_dev).fold(0.0, f64::max);
    let mut failures = vec![];
    if max_rel_dev >= cfg.tol_rel {
        failures.push(format!("ee-mumu max relative deviation {max_rel_dev}"));
    }
    if max_gauge_dev >= cfg.tol_rel {
        failures.push(format!("gauge dependence {max_gauge_dev}"));
    }
    if max_c >= cfg.tol_rel {
        failures.push(format!("compton max relative deviation {max_c}"));
    }
    if max_r > 1.0 {
        failures.push(format!("compton virtual electron has |r| = {max_r} > 1"));
    }
    if !records.is_empty() && (fitted_phase - EE_MUMU_PHASE).norm() > cfg.tol_rel {
        failures.push(format!("fitted phase {fitted_phase} differs from the frozen constant"));
    }
    let summary = AmpSummary {
        n: records.len(),
        max_rel_dev,
        max_gauge_dev,
        fitted_phase,
        n_compton,
        max_rel_dev_compton: max_c,
        max_r_compton: max_r,
        skipped,
        records,
    };
    Ok(Outcome { report: to_json(&summary), passed: failures.is_empty(), failures })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoopSample {
    pub p: [f64; 4],
    pub k: [f64; 4],
    pub m: f64,
    pub eps: LorentzVector,
    #[serde(default = "unit_coupling")]
    pub e: f64,
}

fn unit_coupling() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoopInput {
    pub samples: Vec<LoopSample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopSummary {
    pub n: usize,
    pub max_rel_dev_trace: f64,
    pub max_rel_dev_expectation: f64,
    pub max_norm_dev: f64,
    pub skipped: Vec<String>,
}

fn random_loop_sample(seed: u64, i: u64) -> LoopSample {
    let mut rng = sample_rng(seed, i);
    let p = random_vector(&mut rng, 4.0).real_parts();
    let k = random_vector(&mut rng, 4.0).real_parts();
    let m = if i.is_multiple_of(10) { 0.0 } else { rng.random_range(0.0..2.0) };
    let eps = if i.is_multiple_of(2) {
        random_vector(&mut rng, 1.0)
    } else {
        LorentzVector(std::array::from_fn(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))))
    };
    LoopSample { p, k, m, eps, e: 0.3 }
}

fn loop_check(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let samples = match read_input::<LoopInput>(cfg)? {
        Some(input) => input.samples,
        None => map_indices(cfg.samples, exec, |i| random_loop_sample(cfg.seed, i)),
    };
    if samples.is_empty() {
        return Err(config("no loop samples supplied"));
    }
    let results = map_slice(&samples, exec, |s| -> crate::error::Result<(f64, f64, f64)> {
        let (p, k) = (LorentzVector::from_real(s.p), LorentzVector::from_real(s.k));
        let id = loop_trace_identity(&p, &k, s.m, &s.eps, s.e)?;
        let ex = expectation_form(&p, &k, s.m, &s.eps, s.e)?;
        let kets = photon_kets(&s.eps)?;
        let want = norm_sum_closed(&s.eps);
        let norm_dev = (kets.norm_sum() - want).norm() / want.norm().max(1.0);
        Ok((id.deviation, rel_dev(ex, id.operator, 1e-300), norm_dev))
    });
    let mut summary = LoopSummary { n: 0, max_rel_dev_trace: 0.0, max_rel_dev_expectation: 0.0, max_norm_dev: 0.0, skipped: vec![] };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok((a, b, c)) => {
                summary.n += 1;
                summary.max_rel_dev_trace = summary.max_rel_dev_trace.max(a);
                summary.max_rel_dev_expectation = summary.max_rel_dev_expectation.max(b);
                summary.max_norm_dev = summary.max_norm_dev.max(c);
            }
            Err(e) => summary.skipped.push(format!("sample {i}: {e}")),
        }
    }
    let mut failures = vec![];
    if summary.max_rel_dev_trace >= cfg.tol_rel || summary.max_rel_dev_expectation >= cfg.tol_rel {
        failures.push(format!(
            "integrand identity deviations {} / {}",
            summary.max_rel_dev_trace, summary.max_rel_dev_expectation
        ));
    }
    if summary.max_norm_dev >= cfg.tol_abs {
        failures.push(format!("norm identity deviation {}", summary.max_norm_dev));
    }
    Ok(Outcome { report: to_json(&summary), passed: failures.is_empty(), failures })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusInput {
    pub p: [f64; 4],
    pub m: f64,
    pub grids: Vec<GridSpec>,
}

/// Symmetric grids around `p/2` with both factors valid for `p = (4,0,0,0)`, `m = 1`.
fn generated_census(cfg: &RunConfig) -> CensusInput {
    let p = LorentzVector::momentum(4.0, 0.0, 0.0, 0.0);
    let grids = (0..cfg.samples.clamp(1, 20))
        .map(|g| {
            let mut rng = sample_rng(cfg.seed, g);
            let n = rng.random_range(1..6);
            let ks: Vec<_> = (0..n)
                .map(|_| (p * 0.5 + random_vector(&mut rng, 0.4), rng.random_range(0.1..1.0)))
                .collect();
            GridSpec::symmetric(format!("grid-{g}"), &p, &ks)
        })
        .collect();
    CensusInput { p: p.real_parts(), m: 1.0, grids }
}

fn census(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let input = read_input::<CensusInput>(cfg)?.unwrap_or_else(|| generated_census(cfg));
    if input.grids.is_empty() {
        return Err(config(Error::EmptyGrid));
    }
    let p = LorentzVector::from_real(input.p);
    let results = map_slice(&input.grids, exec, |g| negative_eigenvalue_census(&p, g, input.m));
    let mut records: Vec<CensusRecord> = vec![];
    for r in results {
        records.push(r.map_err(config)?);
    }
    let mut failures = vec![];
    for r in &records {
        if r.n_neg < 1 || !r.sylvester_agrees || r.hermiticity_residual > cfg.tol_abs {
            failures.push(format!("{}: n_neg {} sylvester {} herm {}", r.grid_id, r.n_neg, r.sylvester_agrees, r.hermiticity_residual));
        }
    }
    Ok(Outcome { report: to_json(&records), passed: failures.is_empty(), failures })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RenormInput {
    pub m: f64,
    pub params: RenormParams,
    #[serde(default = "unit_coupling")]
    pub xi: f64,
    #[serde(default)]
    pub momenta: Vec<[f64; 4]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RenormSummary {
    pub m: f64,
    pub m_prime: f64,
    pub params: RenormParams,
    pub n: usize,
    pub max_matrix_dev: f64,
    pub photon_scale: f64,
    pub xi_prime: f64,
    pub photon_completeness_residual: f64,
    pub skipped: Vec<String>,
}

fn renorm_check(cfg: &RunConfig, exec: Execution) -> Result<Outcome, CliError> {
    let input = read_input::<RenormInput>(cfg)?.unwrap_or_else(|| {
        let mut rng = sample_rng(cfg.seed, 0);
        RenormInput {
            m: 1.0,
            params: RenormParams { a1: rng.random_range(-0.4..0.4), a2: rng.random_range(-0.4..0.4), c1: rng.random_range(-0.4..0.4) },
            xi: 1.0,
            momenta: vec![],
        }
    });
    let m_prime = renorm_fermion_mass(input.m, input.params.a1, input.params.a2).map_err(config)?;
    let (photon_scale, xi_prime) = renorm_photon(input.xi, input.params.c1).map_err(config)?;
    let momenta: Vec<[f64; 4]> = if input.momenta.is_empty() {
        map_indices(cfg.samples, exec, |i| random_fermion_point(&mut sample_rng(cfg.seed, i + 1)).0.real_parts())
    } else {
        input.momenta.clone()
    };
    let devs = map_slice(&momenta, exec, |k| -> crate::error::Result<f64> {
        let k = LorentzVector::from_real(*k);
        let got = renormalized_rho(&k, input.m, &input.params, SelfEnergyForm::MassMap)?;
        Ok(max_diff(&got, &rho(&k, m_prime)?.matrix))
    });
    let mut skipped = vec![];
    let mut max_dev = 0.0f64;
    let mut n = 0;
    for (i, d) in devs.into_iter().enumerate() {
        match d {
            Ok(d) => {
                n += 1;
                max_dev = max_dev.max(d);
            }
            Err(e) => skipped.push(format!("momentum {i}: {e}")),
        }
    }
    let k_ref = LorentzVector::momentum(2.0, 0.3, 0.0, 1.1);
    let op = renormalized_photon_operator(&k_ref, input.xi, input.params.c1).map_err(config)?;
    let summary = RenormSummary {
        m: input.m,
        m_prime,
        params: input.params,
        n,
        max_matrix_dev: max_dev,
        photon_scale,
        xi_prime,
        photon_completeness_residual: op.basis.completeness_residual(),
        skipped,
    };
    let mut failures = vec![];
    if max_dev >= cfg.tol_abs {
        failures.push(format!("renormalized recipe deviates by {max_dev}"));
    }
    if summary.photon_completeness_residual >= cfg.tol_abs {
        failures.push(format!("renormalized basis residual {}", summary.photon_completeness_residual));
    }
    Ok(Outcome { report: to_json(&summary), passed: failures.is_empty(), failures })
}

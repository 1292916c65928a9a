//! Executes a validated experiment and writes its artefacts.
//!
//! Files are written to a temporary sibling and renamed into place. CSV
//! files start with a `#` provenance line; JSON files carry a `provenance`
//! object.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::cantor::verify_cantor_ids;
use crate::config::{parse_config_with, Command, ExperimentConfig, FieldError, Overrides};
use crate::error::GapError;
use crate::gaps::{check_gap_stability, label_gaps, large_coupling_sweep};
use crate::interval::IntervalUnion;
use crate::obstruction::{poly_of_label_expression, representable_up_to, Representability};
use crate::rational::{self, Rational};
use crate::sampling::SamplingFunction;
use crate::shift::enumerate_labels;
use crate::spectrum::{diagonal_spectrum, spectrum_union_periodic};
use crate::tridiag::{build_truncation, ids_curve};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum RunError {
    Validation(Vec<FieldError>),
    Resolution(String),
    Io(String),
}

impl RunError {
    /// 2 for invalid input, 3 when the requested resolution is insufficient.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Validation(_) => 2,
            RunError::Resolution(_) => 3,
            RunError::Io(_) => 1,
        }
    }

    pub fn diagnostic(&self) -> Value {
        match self {
            RunError::Validation(errors) => json!({
                "error": "validation",
                "fields": errors.iter().map(|e| json!({"path": e.path, "message": e.message})).collect::<Vec<_>>(),
            }),
            RunError::Resolution(msg) => json!({"error": "resolution", "message": msg}),
            RunError::Io(msg) => json!({"error": "io", "message": msg}),
        }
    }
}

impl From<GapError> for RunError {
    fn from(e: GapError) -> Self {
        match e {
            GapError::Resolution(msg) => RunError::Resolution(msg),
            other => RunError::Validation(vec![FieldError { path: "$".into(), message: other.to_string() }]),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e.to_string())
    }
}

/// Reads, validates and runs the configuration at `path`.
pub fn run_file(path: &Path, out_dir: &Path, overrides: &Overrides) -> Result<Vec<PathBuf>, RunError> {
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
    let cfg = parse_config_with(&text, overrides).map_err(RunError::Validation)?;
    run(&cfg, out_dir)
}

/// Runs `cfg` and returns the paths written.
pub fn run(cfg: &ExperimentConfig, out_dir: &Path) -> Result<Vec<PathBuf>, RunError> {
    std::fs::create_dir_all(out_dir)?;
    let out = Output { cfg, dir: out_dir };
    match cfg.command {
        Command::Spectrum => out.json("spectrum.json", json!({ "spectrum": spectrum_of(cfg)? })),
        Command::IdsCurve => ids_curve_cmd(&out),
        Command::Gaps => gaps_cmd(&out),
        Command::Labels => {
            let set = enumerate_labels(&cfg.alphabet, cfg.window_bound)?;
            let labels: Vec<String> = set.labels.iter().map(rational::fmt).collect();
            out.json("labels.json", json!({ "window_bound": cfg.window_bound, "labels": labels }))
        }
        Command::Sweep => sweep_cmd(&out),
        Command::Cantor => cantor_cmd(&out),
        Command::Obstruction => obstruction_cmd(&out),
        Command::Stability => stability_cmd(&out),
    }
}

struct Output<'a> {
    cfg: &'a ExperimentConfig,
    dir: &'a Path,
}

impl Output<'_> {
    fn provenance(&self) -> Value {
        json!({
            "tool": "gaplab",
            "version": VERSION,
            "command": self.cfg.command.name(),
            "config_sha256": self.cfg.config_hash,
            "seed": self.cfg.seed(),
        })
    }

    fn json(&self, name: &str, mut body: Value) -> Result<Vec<PathBuf>, RunError> {
        body["provenance"] = self.provenance();
        let mut text = serde_json::to_string_pretty(&body).expect("json");
        text.push('\n');
        Ok(vec![self.write(name, &text)?])
    }

    fn csv(&self, name: &str, header: &str, rows: &str) -> Result<PathBuf, RunError> {
        let mut text = format!("# gaplab {VERSION} command={} config_sha256={}", self.cfg.command.name(), self.cfg.config_hash);
        if let Some(seed) = self.cfg.seed() {
            let _ = write!(text, " seed={seed}");
        }
        let _ = write!(text, "\n{header}\n{rows}");
        self.write(name, &text)
    }

    fn write(&self, name: &str, contents: &str) -> Result<PathBuf, RunError> {
        let target = self.dir.join(name);
        let mut tmp = tempfile::NamedTempFile::new_in(self.dir)?;
        tmp.write_all(contents.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|e| RunError::Io(e.to_string()))?;
        Ok(target)
    }
}

fn required<'a>(v: Option<&'a SamplingFunction>, field: &str) -> Result<&'a SamplingFunction, RunError> {
    v.ok_or_else(|| RunError::Validation(vec![FieldError { path: field.into(), message: "missing".into() }]))
}

fn sequence(cfg: &ExperimentConfig) -> Result<crate::shift::SequenceSource, RunError> {
    cfg.sequence_source().ok_or_else(|| {
        RunError::Validation(vec![FieldError { path: "sequence".into(), message: "no sequence configured".into() }])
    })
}

fn spectrum_of(cfg: &ExperimentConfig) -> Result<IntervalUnion, RunError> {
    let q = required(cfg.q.as_ref(), "q")?;
    match cfg.p.as_constant().map(rational::to_f64) {
        Some(c) if c == 0.0 => Ok(diagonal_spectrum(q)),
        Some(c) if c == 1.0 => Ok(spectrum_union_periodic(q, cfg.max_period)),
        _ => Err(RunError::Validation(vec![FieldError {
            path: "p".into(),
            message: "spectrum needs p ≡ 1 or p ≡ 0".into(),
        }])),
    }
}

fn split(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn label_cell(l: &Option<Rational>) -> String {
    l.as_ref().map(rational::fmt).unwrap_or_default()
}

fn ids_curve_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let q = required(cfg.q.as_ref(), "q")?;
    let t = build_truncation(q, &cfg.p, &sequence(cfg)?, cfg.n)?;
    let mut rows = String::new();
    for s in ids_curve(&t, &cfg.energies) {
        let _ = writeln!(rows, "{},{},{},{},{}", s.energy, s.count, s.size, s.ids_string(), s.ids_f64());
    }
    Ok(vec![out.csv("ids_curve.csv", "energy,count,N,ids_rational,ids_float", &rows)?])
}

fn gaps_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let q = required(cfg.q.as_ref(), "q")?;
    let spectrum = spectrum_of(cfg)?;
    let labels = enumerate_labels(&cfg.alphabet, cfg.window_bound.max(q.window_length()))?;
    let gaps = label_gaps(q, &cfg.p, &sequence(cfg)?, &spectrum, cfg.n, &labels, cfg.label_tolerance)?;
    let mut rows = String::new();
    for g in &gaps {
        let (num, den) = split(&g.ids_value());
        let _ = writeln!(
            rows,
            "{},{},{num},{den},{},{},{}",
            g.gap.lo,
            g.gap.hi,
            g.ids.ids_f64(),
            label_cell(&g.matched_label),
            g.label_tolerance
        );
    }
    let mut paths = vec![out.csv(
        "gaps.csv",
        "gap_left,gap_right,ids_num,ids_den,ids_float,matched_label,label_tolerance",
        &rows,
    )?];
    paths.extend(out.json("spectrum.json", json!({ "spectrum": spectrum }))?);
    Ok(paths)
}

fn sweep_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let q = required(cfg.q.as_ref(), "q")?;
    let reports = large_coupling_sweep(
        q,
        &cfg.alphabet,
        &cfg.lambdas,
        &sequence(cfg)?,
        cfg.n,
        cfg.max_period,
        cfg.label_tolerance,
    )?;
    let mut rows = String::new();
    for r in &reports {
        let lambda = rational::fmt(&r.lambda);
        let threshold = rational::fmt(&r.threshold);
        if r.gaps.is_empty() {
            let _ = writeln!(rows, "{lambda},{threshold},,,,,,,{}", r.threshold_passed());
        }
        for g in &r.gaps {
            let (num, den) = split(&g.ids_value());
            let _ = writeln!(
                rows,
                "{lambda},{threshold},{},{},{num},{den},{},{},{}",
                g.gap.lo,
                g.gap.hi,
                g.ids.ids_f64(),
                label_cell(&g.matched_label),
                r.threshold_passed()
            );
        }
    }
    let csv = out.csv(
        "sweep.csv",
        "lambda,threshold,gap_left,gap_right,ids_num,ids_den,ids_float,matched_label,threshold_passed",
        &rows,
    )?;
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "lambda": rational::fmt(&r.lambda),
                "threshold": rational::fmt(&r.threshold),
                "threshold_passed": r.threshold_passed(),
                "open_labels": r.open_labels.iter().map(rational::fmt).collect::<Vec<_>>(),
                "all_open": r.all_open,
                "spectrum": r.spectrum,
            })
        })
        .collect();
    let mut paths = vec![csv];
    paths.extend(out.json("sweep.json", json!({ "reports": summary }))?);
    Ok(paths)
}

fn cantor_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let seed = cfg.seed().ok_or_else(|| {
        RunError::Validation(vec![FieldError { path: "sequence".into(), message: "cantor uses a random sequence".into() }])
    })?;
    let m = cfg.alphabet.size();
    let report = verify_cantor_ids(m, cfg.depth, cfg.n, cfg.max_level, seed)?;
    let mut rows = String::new();
    for c in &report.checks {
        let (gn, gd) = split(&c.g_infinity);
        let (inum, iden) = split(&c.ids.ids());
        let _ = writeln!(
            rows,
            "{},{},{},{gn},{gd},{inum},{iden},{}",
            c.level,
            rational::fmt(&c.gap.lo),
            rational::fmt(&c.gap.hi),
            c.pass
        );
    }
    Ok(vec![out.csv(
        "cantor.csv",
        "level,gap_left,gap_right,g_infinity_num,g_infinity_den,ids_num,ids_den,pass",
        &rows,
    )?])
}

fn obstruction_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let expr = cfg.expr.as_deref().unwrap_or_default();
    let p = poly_of_label_expression(expr)
        .map_err(|e| RunError::Validation(vec![FieldError { path: "expr".into(), message: e.to_string() }]))?;
    let verdict = representable_up_to(&p, cfg.n_max.max(p.degree()))?;
    let mut body = json!({ "expression": expr, "polynomial": p.to_string() });
    match verdict {
        Representability::Certificate { witness_degree, certificate } => {
            body["verdict"] = json!("certificate");
            body["witness_degree"] = json!(witness_degree);
            body["counts"] = serde_json::to_value(&certificate).expect("json")["counts"].take();
        }
        Representability::Rejected { rejection_reason } => {
            body["verdict"] = json!("rejected");
            body["rejection_reason"] = json!(rejection_reason);
        }
        Representability::Unknown { max_degree } => {
            body["verdict"] = json!("unknown");
            body["max_degree"] = json!(max_degree);
        }
    }
    out.json("obstruction.json", body)
}

fn stability_cmd(out: &Output) -> Result<Vec<PathBuf>, RunError> {
    let cfg = out.cfg;
    let q = required(cfg.q.as_ref(), "q")?;
    let q2 = required(cfg.q2.as_ref(), "q2")?;
    let p2 = cfg.p2.clone().unwrap_or_else(|| cfg.p.clone());
    let gap = cfg.gap.ok_or_else(|| {
        RunError::Validation(vec![FieldError { path: "gap".into(), message: "missing".into() }])
    })?;
    let verdict = check_gap_stability(q, &cfg.p, q2, &p2, &gap)?;
    let q_distance = q.sup_distance(q2)?;
    let p_distance = cfg.p.sup_distance(&p2)?;
    out.json(
        "stability.json",
        json!({
            "verdict": verdict,
            "gap": [gap.lo, gap.hi],
            "q_distance": rational::fmt(&q_distance),
            "p_distance": rational::fmt(&p_distance),
        }),
    )
}

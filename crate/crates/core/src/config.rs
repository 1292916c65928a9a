//! Experiment configuration: JSON ingestion and validation.
//!
//! Every violated field is reported with its JSON path; parsing never stops
//! at the first problem.

use std::fmt;

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::interval::Gap;
use crate::rational::{self, Rational};
use crate::sampling::{cantor_function, make_locally_constant, scale, Hopping, SamplingFunction};
use crate::shift::{periodic_sequence, random_sequence, Alphabet, SequenceSource, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    IdsCurve,
    Gaps,
    Labels,
    Sweep,
    Cantor,
    Obstruction,
    Stability,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Spectrum,
        Command::IdsCurve,
        Command::Gaps,
        Command::Labels,
        Command::Sweep,
        Command::Cantor,
        Command::Obstruction,
        Command::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::IdsCurve => "ids-curve",
            Command::Gaps => "gaps",
            Command::Labels => "labels",
            Command::Sweep => "sweep",
            Command::Cantor => "cantor",
            Command::Obstruction => "obstruction",
            Command::Stability => "stability",
        }
    }

    pub fn parse(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }

    fn uses_sequence(self) -> bool {
        matches!(self, Command::IdsCurve | Command::Gaps | Command::Sweep | Command::Cantor)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SequenceSpec {
    Random { seed: u64 },
    Periodic { word: Word },
}

/// Validated experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub alphabet: Alphabet,
    pub q: Option<SamplingFunction>,
    pub p: Hopping,
    pub q2: Option<SamplingFunction>,
    pub p2: Option<Hopping>,
    pub sequence: Option<SequenceSpec>,
    pub n: usize,
    pub max_period: usize,
    pub window_bound: usize,
    pub depth: usize,
    pub max_level: usize,
    pub lambdas: Vec<Rational>,
    pub energies: Vec<f64>,
    pub gap: Option<Gap>,
    pub expr: Option<String>,
    pub n_max: usize,
    pub label_tolerance: f64,
    /// SHA-256 of the effective configuration (after overrides), hex.
    pub config_hash: String,
}

impl ExperimentConfig {
    pub fn sequence_source(&self) -> Option<SequenceSource> {
        match self.sequence.as_ref()? {
            SequenceSpec::Random { seed } => Some(random_sequence(&self.alphabet, *seed)),
            SequenceSpec::Periodic { word } => periodic_sequence(word).ok(),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self.sequence.as_ref()? {
            SequenceSpec::Random { seed } => Some(*seed),
            SequenceSpec::Periodic { .. } => None,
        }
    }
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub command: Option<String>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub max_period: Option<usize>,
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig, Vec<FieldError>> {
    parse_config_with(text, &Overrides::default())
}

pub fn parse_config_with(text: &str, overrides: &Overrides) -> Result<ExperimentConfig, Vec<FieldError>> {
    let mut root: Value = serde_json::from_str(text).map_err(|e| {
        vec![FieldError { path: "$".into(), message: format!("invalid JSON: {e}") }]
    })?;
    let Some(obj) = root.as_object_mut() else {
        return Err(vec![FieldError { path: "$".into(), message: "expected a JSON object".into() }]);
    };
    if let Some(c) = &overrides.command {
        obj.insert("command".into(), Value::from(c.clone()));
    }
    if let Some(seed) = overrides.seed {
        obj.insert("seed".into(), Value::from(seed));
    }
    if let Some(n) = overrides.n {
        obj.insert("n".into(), Value::from(n));
    }
    if let Some(l) = overrides.max_period {
        obj.insert("max_period".into(), Value::from(l));
    }
    let hash = hex(&Sha256::digest(serde_json::to_vec(&root).expect("value serializes")));
    let mut ctx = Ctx::default();
    let cfg = ctx.config(root.as_object().expect("object"), hash);
    match cfg {
        Some(cfg) if ctx.errors.is_empty() => Ok(cfg),
        _ => Err(ctx.errors),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses the alphabet object found at `path`.
pub fn parse_alphabet(v: &Value, path: &str) -> Result<Alphabet, Vec<FieldError>> {
    let mut ctx = Ctx::default();
    match ctx.alphabet(v, path) {
        Some(a) if ctx.errors.is_empty() => Ok(a),
        _ => Err(ctx.errors),
    }
}

#[derive(Default)]
struct Ctx {
    errors: Vec<FieldError>,
}

const KNOWN_FIELDS: &[&str] = &[
    "command", "alphabet", "q", "p", "q2", "p2", "sequence", "seed", "n", "max_period", "window_bound",
    "depth", "max_level", "lambdas", "energies", "gap", "expr", "n_max", "label_tolerance",
];

impl Ctx {
    fn err(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.errors.push(FieldError { path: path.into(), message: message.into() });
    }

    fn config(&mut self, obj: &Map<String, Value>, config_hash: String) -> Option<ExperimentConfig> {
        for key in obj.keys() {
            if !KNOWN_FIELDS.contains(&key.as_str()) {
                self.err(key.clone(), "unknown field");
            }
        }
        let command = match obj.get("command") {
            Some(Value::String(s)) => Command::parse(s).or_else(|| {
                let names: Vec<_> = Command::ALL.iter().map(|c| c.name()).collect();
                self.err("command", format!("unknown command `{s}` (expected one of {})", names.join(", ")));
                None
            }),
            Some(_) => {
                self.err("command", "expected a string");
                None
            }
            None => {
                self.err("command", "missing");
                None
            }
        };

        let alphabet = match obj.get("alphabet") {
            Some(v) => self.alphabet(v, "alphabet"),
            None => Some(Alphabet::uniform(2).expect("uniform")),
        };

        let n = self.size(obj, "n", 10_000);
        let max_period = self.size(obj, "max_period", 6);
        let window_bound = self.count(obj, "window_bound", 1);
        let depth = self.size(obj, "depth", 8);
        let max_level = self.size(obj, "max_level", 4);
        let n_max = self.count(obj, "n_max", crate::obstruction::DEFAULT_MAX_DEGREE);
        let label_tolerance = match obj.get("label_tolerance") {
            None => crate::gaps::DEFAULT_LABEL_TOL,
            Some(v) => match v.as_f64() {
                Some(x) if x >= 0.0 => x,
                _ => {
                    self.err("label_tolerance", "expected a nonnegative number");
                    0.0
                }
            },
        };

        let (q, p, q2, p2) = match &alphabet {
            Some(a) => (
                obj.get("q").and_then(|v| self.function(v, "q", a)),
                obj.get("p").map(|v| self.hopping(v, "p", a)).unwrap_or(Some(Hopping::schrodinger())),
                obj.get("q2").and_then(|v| self.function(v, "q2", a)),
                obj.get("p2").and_then(|v| self.hopping(v, "p2", a)),
            ),
            None => (None, Some(Hopping::schrodinger()), None, None),
        };
        if let Some(p) = &p {
            if rational::to_f64(&p.min_value()) < 0.0 {
                self.err("p", "off-diagonal values must be nonnegative");
            }
        }

        let seed = match obj.get("seed") {
            None => None,
            Some(v) => match v.as_u64() {
                Some(s) => Some(s),
                None => {
                    self.err("seed", "expected an unsigned integer");
                    None
                }
            },
        };
        let sequence = self.sequence(obj.get("sequence"), seed, command, alphabet.as_ref());

        let lambdas = match obj.get("lambdas") {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .filter_map(|(i, v)| {
                    let path = format!("lambdas[{i}]");
                    let r = self.number(v, &path)?;
                    if r <= Rational::from_integer(0.into()) {
                        self.err(path, "coupling must be positive");
                        return None;
                    }
                    Some(r)
                })
                .collect(),
            Some(_) => {
                self.err("lambdas", "expected an array");
                Vec::new()
            }
        };

        let energies = self.energies(obj.get("energies"));
        let gap = obj.get("gap").and_then(|v| self.gap(v));
        let expr = match obj.get("expr") {
            None => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => {
                self.err("expr", "expected a string");
                None
            }
        };

        let command = command?;
        match command {
            Command::Spectrum | Command::IdsCurve | Command::Gaps | Command::Sweep | Command::Stability => {
                if !obj.contains_key("q") {
                    self.err("q", format!("required by `{}`", command.name()));
                }
            }
            _ => {}
        }
        match command {
            Command::Spectrum | Command::Gaps => {
                if let Some(p) = &p {
                    if !matches!(p.as_constant(), Some(c) if rational::to_f64(c) == 0.0 || rational::to_f64(c) == 1.0) {
                        self.err("p", format!("`{}` supports p ≡ 1 (Schrödinger) or p ≡ 0 (diagonal)", command.name()));
                    }
                }
            }
            Command::IdsCurve if energies.is_empty() => self.err("energies", "required by `ids-curve`"),
            Command::Sweep if lambdas.is_empty() => self.err("lambdas", "required by `sweep`"),
            Command::Sweep => {
                if let Some(c) = p.as_ref().and_then(Hopping::as_constant) {
                    if rational::to_f64(c) != 1.0 {
                        self.err("p", "sweep uses Schrödinger operators (p ≡ 1)");
                    }
                }
            }
            Command::Cantor => {
                if alphabet.as_ref().is_some_and(|a| a.size() < 2) {
                    self.err("alphabet", "cantor needs at least two letters");
                }
            }
            Command::Obstruction if expr.is_none() => self.err("expr", "required by `obstruction`"),
            Command::Stability => {
                if !obj.contains_key("q2") {
                    self.err("q2", "required by `stability`");
                }
                if gap.is_none() && !obj.contains_key("gap") {
                    self.err("gap", "required by `stability`");
                }
            }
            _ => {}
        }

        Some(ExperimentConfig {
            command,
            alphabet: alphabet?,
            q,
            p: p?,
            q2,
            p2,
            sequence,
            n: n?,
            max_period: max_period?,
            window_bound: window_bound?,
            depth: depth?,
            max_level: max_level?,
            lambdas,
            energies,
            gap,
            expr,
            n_max: n_max?,
            label_tolerance,
            config_hash,
        })
    }

    fn size(&mut self, obj: &Map<String, Value>, key: &str, default: usize) -> Option<usize> {
        match obj.get(key) {
            None => Some(default),
            Some(v) => match v.as_u64() {
                Some(0) | None => {
                    self.err(key, "expected a positive integer");
                    None
                }
                Some(x) => Some(x as usize),
            },
        }
    }

    fn count(&mut self, obj: &Map<String, Value>, key: &str, default: usize) -> Option<usize> {
        match obj.get(key) {
            None => Some(default),
            Some(v) => match v.as_u64() {
                Some(x) => Some(x as usize),
                None => {
                    self.err(key, "expected a nonnegative integer");
                    None
                }
            },
        }
    }

    /// Exact value from a JSON number or a rational/decimal string.
    fn number(&mut self, v: &Value, path: &str) -> Option<Rational> {
        let text = match v {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            _ => {
                self.err(path, "expected a number or rational string");
                return None;
            }
        };
        match rational::parse_decimal_or_fraction(&text) {
            Ok(r) => Some(r),
            Err(e) => {
                self.err(path, e.to_string());
                None
            }
        }
    }

    fn alphabet(&mut self, v: &Value, path: &str) -> Option<Alphabet> {
        let Some(obj) = v.as_object() else {
            self.err(path, "expected an object with `letters` and `weights`");
            return None;
        };
        let before = self.errors.len();
        let letters: Vec<Option<Rational>> = match obj.get("letters") {
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .map(|(i, x)| self.number(x, &format!("{path}.letters[{i}]")))
                .collect(),
            _ => {
                self.err(format!("{path}.letters"), "expected an array");
                Vec::new()
            }
        };
        let weights: Vec<Option<Rational>> = match obj.get("weights") {
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let p = format!("{path}.weights[{i}]");
                    match x {
                        Value::String(s) => match rational::parse_fraction(s) {
                            Ok(r) => Some(r),
                            Err(_) => {
                                self.err(p, format!("`{s}` is not an exact rational; write weights as \"p/q\""));
                                None
                            }
                        },
                        _ => {
                            self.err(p, "weights must be rational strings such as \"1/3\"");
                            None
                        }
                    }
                })
                .collect(),
            _ => {
                self.err(format!("{path}.weights"), "expected an array");
                Vec::new()
            }
        };
        if self.errors.len() > before {
            return None;
        }
        let letters: Vec<Rational> = letters.into_iter().flatten().collect();
        let weights: Vec<Rational> = weights.into_iter().flatten().collect();
        let mut ok = true;
        if letters.is_empty() {
            self.err(format!("{path}.letters"), "alphabet must have at least one letter");
            ok = false;
        }
        if letters.len() != weights.len() {
            self.err(format!("{path}.weights"), format!("expected {} weights, got {}", letters.len(), weights.len()));
            ok = false;
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            self.err(format!("{path}.letters"), "letters must be distinct and sorted ascending");
            ok = false;
        }
        for (i, w) in weights.iter().enumerate() {
            if *w <= Rational::from_integer(0.into()) {
                self.err(format!("{path}.weights[{i}]"), "weight must be positive");
                ok = false;
            }
        }
        let total: Rational = weights.iter().sum();
        if total != Rational::from_integer(1.into()) {
            self.err(
                format!("{path}.weights"),
                format!("weights must sum to 1 (got {})", rational::fmt(&total)),
            );
            ok = false;
        }
        if !ok {
            return None;
        }
        Alphabet::new(letters, weights).map_err(|e| self.err(path, e.to_string())).ok()
    }

    fn function(&mut self, v: &Value, path: &str, a: &Alphabet) -> Option<SamplingFunction> {
        let m = a.size();
        let (f, factor) = match v {
            Value::String(s) if s == "anderson" => (Some(SamplingFunction::anderson(a)), None),
            Value::Number(_) | Value::String(_) => {
                (self.number(v, path).map(|c| SamplingFunction::constant(m, c)), None)
            }
            Value::Object(obj) => {
                let factor = obj.get("scale").and_then(|s| self.number(s, &format!("{path}.scale")));
                let kind = obj.get("kind").and_then(Value::as_str).unwrap_or(if obj.contains_key("table") {
                    "table"
                } else {
                    ""
                });
                let f = match kind {
                    "anderson" => Some(SamplingFunction::anderson(a)),
                    "constant" => match obj.get("value") {
                        Some(c) => self.number(c, &format!("{path}.value")).map(|c| SamplingFunction::constant(m, c)),
                        None => {
                            self.err(format!("{path}.value"), "missing");
                            None
                        }
                    },
                    "cantor" => {
                        let depth = obj.get("depth").and_then(Value::as_u64).unwrap_or(0) as usize;
                        match cantor_function(m, depth) {
                            Ok(f) => Some(f),
                            Err(e) => {
                                self.err(format!("{path}.depth"), e.to_string());
                                None
                            }
                        }
                    }
                    "table" => self.table(obj, path, a),
                    other => {
                        self.err(
                            format!("{path}.kind"),
                            format!("unknown function kind `{other}` (anderson, constant, cantor, table)"),
                        );
                        None
                    }
                };
                (f, factor)
            }
            _ => {
                self.err(path, "expected a function description");
                (None, None)
            }
        };
        match (f, factor) {
            (Some(f), Some(c)) => Some(scale(&f, &c)),
            (f, _) => f,
        }
    }

    fn table(&mut self, obj: &Map<String, Value>, path: &str, a: &Alphabet) -> Option<SamplingFunction> {
        let window_start = match obj.get("window_start") {
            None => 0,
            Some(v) => match v.as_i64() {
                Some(s) => s,
                None => {
                    self.err(format!("{path}.window_start"), "expected an integer");
                    return None;
                }
            },
        };
        let Some(Value::Object(table)) = obj.get("table") else {
            self.err(format!("{path}.table"), "expected an object mapping words to values");
            return None;
        };
        let mut entries = Vec::new();
        let mut width = None;
        for (key, value) in table {
            let p = format!("{path}.table.{key}");
            let word = match Word::parse(key, window_start) {
                Ok(w) => w,
                Err(e) => {
                    self.err(p, e.to_string());
                    continue;
                }
            };
            if *width.get_or_insert(word.len()) != word.len() {
                self.err(p, "all table keys must have the same length");
                continue;
            }
            if let Some(v) = self.number(value, &p) {
                entries.push((word, v));
            }
        }
        let Some(width) = width else {
            self.err(format!("{path}.table"), "table is empty");
            return None;
        };
        make_locally_constant(window_start, width, entries, a)
            .map_err(|e| self.err(format!("{path}.table"), e.to_string()))
            .ok()
    }

    fn hopping(&mut self, v: &Value, path: &str, a: &Alphabet) -> Option<Hopping> {
        match v {
            Value::Number(_) | Value::String(_) => self.number(v, path).map(Hopping::Constant),
            _ => self.function(v, path, a).map(Hopping::Function),
        }
    }

    fn sequence(
        &mut self,
        v: Option<&Value>,
        seed: Option<u64>,
        command: Option<Command>,
        a: Option<&Alphabet>,
    ) -> Option<SequenceSpec> {
        let needed = command.is_some_and(Command::uses_sequence);
        let kind = match v {
            None => "random",
            Some(Value::Object(obj)) => obj.get("kind").and_then(Value::as_str).unwrap_or("random"),
            Some(Value::String(s)) => s.as_str(),
            Some(_) => {
                self.err("sequence", "expected an object");
                return None;
            }
        };
        match kind {
            "random" => match seed {
                Some(seed) => Some(SequenceSpec::Random { seed }),
                None if needed => {
                    self.err("seed", "a seed is required for random sequences");
                    None
                }
                None => None,
            },
            "periodic" => {
                let word = v.and_then(|v| v.get("word")).and_then(Value::as_str);
                let Some(word) = word else {
                    self.err("sequence.word", "periodic sequences need a word");
                    return None;
                };
                match Word::parse(word, 0) {
                    Ok(w) if w.is_empty() => {
                        self.err("sequence.word", "word must be nonempty");
                        None
                    }
                    Ok(w) => {
                        if let Some(a) = a {
                            if let Err(e) = w.validate(a.size()) {
                                self.err("sequence.word", e.to_string());
                                return None;
                            }
                        }
                        Some(SequenceSpec::Periodic { word: w })
                    }
                    Err(e) => {
                        self.err("sequence.word", e.to_string());
                        None
                    }
                }
            }
            other => {
                self.err("sequence.kind", format!("unknown sequence kind `{other}` (random, periodic)"));
                None
            }
        }
    }

    fn energies(&mut self, v: Option<&Value>) -> Vec<f64> {
        match v {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .filter_map(|(i, x)| {
                    let r = x.as_f64();
                    if r.is_none() {
                        self.err(format!("energies[{i}]"), "expected a number");
                    }
                    r
                })
                .collect(),
            Some(Value::Object(obj)) => {
                let lo = obj.get("min").and_then(Value::as_f64);
                let hi = obj.get("max").and_then(Value::as_f64);
                let points = obj.get("points").and_then(Value::as_u64);
                match (lo, hi, points) {
                    (Some(lo), Some(hi), Some(points)) if points >= 2 && lo < hi => {
                        let step = (hi - lo) / (points - 1) as f64;
                        (0..points).map(|i| lo + step * i as f64).collect()
                    }
                    (Some(x), Some(y), Some(1)) if x == y => vec![x],
                    _ => {
                        self.err("energies", "expected {min, max, points} with min < max and points ≥ 2");
                        Vec::new()
                    }
                }
            }
            Some(_) => {
                self.err("energies", "expected an array or {min, max, points}");
                Vec::new()
            }
        }
    }

    fn gap(&mut self, v: &Value) -> Option<Gap> {
        let pair = v.as_array().filter(|a| a.len() == 2);
        let bounds = pair.and_then(|a| Some((a[0].as_f64()?, a[1].as_f64()?)));
        match bounds.map(|(lo, hi)| Gap::new(lo, hi)) {
            Some(Ok(g)) => Some(g),
            Some(Err(e)) => {
                self.err("gap", e.to_string());
                None
            }
            None => {
                self.err("gap", "expected [left, right]");
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paths(r: Result<ExperimentConfig, Vec<FieldError>>) -> Vec<String> {
        r.unwrap_err().into_iter().map(|e| e.path).collect()
    }

    #[test]
    fn minimal_spectrum_config() {
        let cfg = parse_config(
            r#"{"command":"spectrum","alphabet":{"letters":[0,1],"weights":["1/2","1/2"]},"q":"anderson","max_period":6}"#,
        )
        .unwrap();
        assert_eq!(cfg.command, Command::Spectrum);
        assert_eq!(cfg.max_period, 6);
        assert_eq!(cfg.config_hash.len(), 64);
    }

    #[test]
    fn decimal_weight_is_rejected_with_path() {
        let r = parse_config(r#"{"command":"labels","alphabet":{"letters":[0,1],"weights":["0.5","1/2"]}}"#);
        assert_eq!(paths(r), vec!["alphabet.weights[0]"]);
    }

    #[test]
    fn weights_must_sum_to_one() {
        let r = parse_config(r#"{"command":"labels","alphabet":{"letters":[0,1],"weights":["1/2","1/3"]}}"#);
        let errs = r.unwrap_err();
        assert_eq!(errs.len(), 1);
        assert!(errs[0].message.contains("weights must sum to 1"), "{errs:?}");
    }

    #[test]
    fn every_violation_is_listed() {
        let r = parse_config(r#"{"command":"frobnicate","n":-3,"max_period":0,"bogus":1}"#);
        let mut p = paths(r);
        p.sort();
        assert_eq!(p, vec!["bogus", "command", "max_period", "n"]);
    }

    #[test]
    fn seed_required_for_random_sequences() {
        let r = parse_config(r#"{"command":"gaps","q":"anderson"}"#);
        assert_eq!(paths(r), vec!["seed"]);
        let ok = parse_config_with(
            r#"{"command":"gaps","q":"anderson"}"#,
            &Overrides { seed: Some(3), ..Default::default() },
        )
        .unwrap();
        assert_eq!(ok.seed(), Some(3));
    }

    #[test]
    fn overrides_change_the_hash() {
        let text = r#"{"command":"sweep","q":"anderson","lambdas":[4,20],"seed":1}"#;
        let a = parse_config(text).unwrap();
        let b = parse_config_with(text, &Overrides { n: Some(500), ..Default::default() }).unwrap();
        assert_eq!(b.n, 500);
        assert_ne!(a.config_hash, b.config_hash);
        assert_eq!(a.config_hash, parse_config(text).unwrap().config_hash);
    }

    #[test]
    fn function_forms() {
        let cfg = parse_config(
            r#"{"command":"stability","q":{"kind":"anderson","scale":"20"},"q2":{"window_start":0,"table":{"0":"0.5","1":"41/2"}},"gap":[2,18]}"#,
        )
        .unwrap();
        let q = cfg.q.unwrap();
        assert_eq!(q.table(), &[rational::int(0), rational::int(20)]);
        assert_eq!(cfg.q2.unwrap().table(), &[rational::ratio(1, 2), rational::ratio(41, 2)]);
        let cfg = parse_config(r#"{"command":"spectrum","q":{"kind":"cantor","depth":2},"p":0}"#).unwrap();
        assert_eq!(cfg.q.unwrap().window_length(), 2);
        let r = parse_config(r#"{"command":"spectrum","q":{"table":{"0":"1"}}}"#);
        assert_eq!(paths(r), vec!["q.table"]);
    }
}

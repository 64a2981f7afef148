use std::fmt::Write as _;
use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrollsec::algebra::{parse_polynomial, Field, Fp, Monomial, Rational, Ring};
use scrollsec::geometry::{
    chart_ideal, rnc_ideal, scroll_ideal, singular_scroll_ideal, tangent_cone_ideal, GeometryError, ScrollSpec,
};
use scrollsec::gitcheck::{GitError, HyperplaneClass, SpanCoordinates};
use scrollsec::groebner::{
    buchberger, hilbert_data, read_ideal_file, write_ideal_file, GroebnerConfig, GroebnerError, Ideal,
};
use scrollsec::invariants::{self, InvariantsError, SmoothnessKind, VerificationReport};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{Cli, Command, IdealKind, OutputFormat, PrimeChoice, SmoothKind};
use crate::suite;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Budget(String),
}

impl From<InvariantsError> for CliError {
    fn from(e: InvariantsError) -> Self {
        if e.is_budget() {
            return CliError::Budget(e.to_string());
        }
        match e {
            InvariantsError::Precondition(_) => CliError::Usage(e.to_string()),
            InvariantsError::Geometry(GeometryError::Groebner(_) | GeometryError::Algebra(_)) => {
                CliError::Failed(e.to_string())
            }
            InvariantsError::Geometry(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        InvariantsError::from(e).into()
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        InvariantsError::from(e).into()
    }
}

impl From<GitError> for CliError {
    fn from(e: GitError) -> Self {
        match e {
            GitError::Geometry(g) => g.into(),
            GitError::CoefficientCount { .. } | GitError::ZeroHyperplane => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

/// What a command produced.
#[derive(Default)]
pub struct Output {
    pub reports: Vec<VerificationReport>,
    pub failures: Vec<CliError>,
    batch: bool,
    value: Option<Value>,
    text: Option<String>,
}

impl Output {
    fn reports(reports: Vec<VerificationReport>) -> Self {
        Output { reports, ..Default::default() }
    }

    pub fn render(&self, format: OutputFormat, deterministic: bool) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        if let Some(value) = &self.value {
            return match format {
                OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("json value")),
                OutputFormat::Pretty => pretty_value(value),
            };
        }
        let reports: Vec<VerificationReport> = self
            .reports
            .iter()
            .cloned()
            .map(|mut r| {
                if deterministic {
                    r.elapsed_ms = 0;
                }
                r
            })
            .collect();
        match format {
            OutputFormat::Json if self.batch || reports.len() != 1 => {
                format!("{}\n", serde_json::to_string_pretty(&reports).expect("reports serialize"))
            }
            OutputFormat::Json => {
                format!("{}\n", serde_json::to_string_pretty(&reports[0]).expect("report serializes"))
            }
            OutputFormat::Pretty => reports.iter().map(|r| format!("{}\n", pretty_report(r))).collect(),
        }
    }
}

fn pretty_value(value: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            let shown = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
            let _ = writeln!(out, "{k:>18}: {shown}");
        }
    }
    out
}

fn params_text(r: &VerificationReport) -> String {
    r.params.iter().filter(|(_, v)| v.is_number()).map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn pretty_report(r: &VerificationReport) -> String {
    format!(
        "{:<5} {:<13} {:<40} computed {:?} expected {:?}  ({} ms)",
        if r.matches { "ok" } else { "FAIL" },
        r.claim,
        params_text(r),
        r.computed,
        r.expected,
        r.elapsed_ms
    )
}

/// One line naming a report, for standard error.
pub fn describe(r: &VerificationReport) -> String {
    format!("{} {} computed {:?} expected {:?} seed {}", r.claim, params_text(r), r.computed, r.expected, r.seed)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let seed = cli.seed.unwrap_or_else(rand::random);
    let config = GroebnerConfig { max_pairs: cli.budget };
    match cli.prime {
        PrimeChoice::Rational => run_in::<Rational>(cli, seed, &(), &config),
        PrimeChoice::Prime(p) => run_in::<Fp>(cli, seed, &p, &config),
    }
}

fn spec(a: usize, b: usize) -> Result<ScrollSpec, CliError> {
    Ok(ScrollSpec::new(a, b)?)
}

fn required(value: Option<usize>, flag: &str, command: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{command} needs --{flag}")))
}

fn run_in<F: Field>(cli: &Cli, seed: u64, domain: &F::Domain, config: &GroebnerConfig) -> Result<Output, CliError> {
    let one =
        |r: Result<VerificationReport, InvariantsError>| -> Result<Output, CliError> { Ok(Output::reports(vec![r?])) };
    match &cli.command {
        Command::Degree { a, b } => one(invariants::degree_secant_fourfold::<F>(spec(*a, *b)?, seed, domain, config)),
        Command::Veronese { d } => one(invariants::degree_veronese::<F>(*d, seed, domain, config)),
        Command::Adp { a, b } => one(invariants::apparent_double_points::<F>(spec(*a, *b)?, seed, domain, config)),
        Command::Components { a, b } => one(invariants::component_degrees::<F>(spec(*a, *b)?, seed, domain, config)),
        Command::Span { a, b } => one(invariants::span_dimension::<F>(spec(*a, *b)?, seed, domain)),
        Command::TangentCone { r, samples } => {
            one(invariants::tangent_cone_invariants::<F>(*r, *samples, seed, domain, config))
        }
        Command::Chart { a, b } => one(invariants::verify_chart::<F>(spec(*a, *b)?, seed, domain, config)),
        Command::Smooth { kind, a, b, r, samples } => {
            let kind = match kind {
                SmoothKind::Scroll => {
                    SmoothnessKind::Scroll(spec(required(*a, "a", "smooth")?, required(*b, "b", "smooth")?)?)
                }
                SmoothKind::TangentCone => SmoothnessKind::TangentCone(required(*r, "r", "smooth")?),
            };
            one(invariants::smoothness_sample::<F>(kind, *samples, seed, domain))
        }
        Command::Blowup { a } => one(invariants::blowup_intersection(*a)),
        Command::ConicSystem { a } => one(invariants::conic_linear_system::<F>(*a, domain)),
        Command::LemmaSec { a, b, trials } => {
            one(invariants::lemma_sec_check::<F>(spec(*a, *b)?, *trials, seed, domain))
        }
        Command::GitCheck { coeffs, random } => git_check::<F>(coeffs.as_deref(), *random, seed, domain),
        Command::EmitIdeal { kind, a, b, r, d, ideal_in, ideal_out } => {
            let text = if let Some(path) = ideal_in {
                let input = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let (ring, gens) = read_ideal_file::<F>(&input, domain).map_err(|e| CliError::Usage(e.to_string()))?;
                let gb = buchberger(&Ideal::new(gens.clone(), Default::default())?, config)?;
                let h = hilbert_data(&gb)?;
                if let Some(out) = ideal_out {
                    write_file(out, &write_ideal_file(&ring, gb.basis()))?;
                }
                let value = json!({
                    "vars": ring.vars(),
                    "generators": gens.len(),
                    "basis_size": gb.len(),
                    "dimension": h.dimension,
                    "degree": h.degree,
                });
                return Ok(Output { value: Some(value), ..Default::default() });
            } else {
                let kind = kind.ok_or_else(|| CliError::Usage("emit-ideal needs --kind or --ideal-in".into()))?;
                let ideal = build_ideal::<F>(kind, *a, *b, *r, *d, domain)?;
                write_ideal_file(ideal.ring(), ideal.generators())
            };
            match ideal_out {
                Some(out) => {
                    write_file(out, &text)?;
                    Ok(Output::default())
                }
                None => Ok(Output { text: Some(text), ..Default::default() }),
            }
        }
        Command::VerifyAll { max_r } => {
            if *max_r < 2 {
                return Err(CliError::Usage(format!("--max-r must be at least 2, got {max_r}")));
            }
            let (reports, failures) = suite::run_suite::<F>(*max_r, seed, domain, config);
            Ok(Output { reports, failures, batch: true, ..Default::default() })
        }
    }
}

fn write_file(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn build_ideal<F: Field>(
    kind: IdealKind,
    a: Option<usize>,
    b: Option<usize>,
    r: Option<usize>,
    d: Option<usize>,
    domain: &F::Domain,
) -> Result<Ideal<F>, CliError> {
    let ab =
        || -> Result<ScrollSpec, CliError> { spec(required(a, "a", "emit-ideal")?, required(b, "b", "emit-ideal")?) };
    Ok(match kind {
        IdealKind::Scroll => scroll_ideal::<F>(ab()?, domain)?,
        IdealKind::Chart => chart_ideal::<F>(ab()?, domain)?,
        IdealKind::Rnc => rnc_ideal::<F>(required(d, "d", "emit-ideal")?, domain)?,
        IdealKind::TangentCone => tangent_cone_ideal::<F>(required(r, "r", "emit-ideal")?, domain)?,
        IdealKind::SingularScroll => singular_scroll_ideal::<F>(required(r, "r", "emit-ideal")?, domain)?.ideal,
    })
}

fn parse_scalar<F: Field>(text: &str, domain: &F::Domain) -> Result<F, CliError> {
    let ring = Ring::<F>::new(Vec::<String>::new(), domain.clone());
    let bad = || CliError::Usage(format!("not a rational number: {text}"));
    let p = parse_polynomial(&ring, text.trim()).map_err(|_| bad())?;
    if !p.is_constant() {
        return Err(bad());
    }
    Ok(p.coefficient(&Monomial::one(0)))
}

fn git_check<F: Field>(
    coeffs: Option<&[String]>,
    random: bool,
    seed: u64,
    domain: &F::Domain,
) -> Result<Output, CliError> {
    let coords = SpanCoordinates::<F>::new(domain)?;
    let h = match (coeffs, random) {
        (Some(c), _) => {
            HyperplaneClass::new(c.iter().map(|t| parse_scalar::<F>(t, domain)).collect::<Result<_, _>>()?)?
        }
        (None, true) => HyperplaneClass::random(domain, &mut ChaCha8Rng::seed_from_u64(seed)),
        (None, false) => return Err(CliError::Usage("git-check needs --coeffs or --random".into())),
    };
    let report = coords.certificate(&h);
    let mut value = serde_json::to_value(&report).expect("git report serializes");
    if random {
        value["seed"] = json!(seed);
    }
    Ok(Output { value: Some(value), ..Default::default() })
}

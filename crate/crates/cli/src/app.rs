//! Command dispatch: argument parsing, input resolution, and rendering.
//!
//! Exit codes: 0 = success, 1 = mathematical rejection (the input is
//! well-formed but the requested object does not exist — non-isolated
//! singularity, non-Gorenstein quotient, unsupported shape, …),
//! 2 = usage error (bad flags, syntax errors, unknown identifiers).
//! `verify-paper` exits 0 only when every criterion passes.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use socle_core::algebra::{
    hilbert_function, ideal_filtration, milnor_algebra, milnor_algebra_weighted,
    quotient_algebra, quotient_algebra_weighted, socle, QuotientAlgebra,
};
use socle_core::error::CoreError;
use socle_core::invariants::{associated_form, binary_discriminant, ternary_cubic_invariants};
use socle_core::nilpoly::{
    inverse_system_r, inverse_system_s, nil_polynomial, InverseSystem, InverseSystemSource,
    NilPolynomialData,
};
use socle_core::poly::{Polynomial, Rat};
use socle_core::rational::{format_rational, parse_rational};
use socle_core::verify::run_all;

use crate::parser::{parse_polynomial, scan_identifiers};
use crate::report::{poly_node, rat_value, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "socle",
    version,
    about = "Exact analysis of Artinian Gorenstein quotients: nil-polynomials, \
             Macaulay inverse systems, associated forms, and invariants",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print the JSON report on stdout instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON report to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone, Default)]
struct InputArgs {
    /// A single form Q as an expression, e.g. "z1^3+z2^3+z3^3+t*z1*z2*z3".
    #[arg(long, value_name = "EXPR")]
    form: Option<String>,

    /// Semicolon-separated ideal generators, e.g. "2*x1^3+t*x1*x2^3; ...".
    #[arg(long, value_name = "EXPRS")]
    gens: Option<String>,

    /// Ordered comma-separated variable list (inferred in natural order
    /// from the expressions when omitted).
    #[arg(long, value_name = "NAMES", value_delimiter = ',')]
    vars: Option<Vec<String>>,

    /// Parameter substitution NAME=VALUE (repeatable), e.g. --param t=3
    /// or --param t=-1/2.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,

    /// Quasihomogeneous weights, comma-separated positive integers.
    #[arg(long, value_name = "W1,W2,...", value_delimiter = ',')]
    weights: Option<Vec<u64>>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Milnor algebra of an isolated hypersurface singularity.
    Milnor {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Artinian local quotient algebra of an explicit ideal.
    Quotient {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Nil-polynomial of a Gorenstein quotient (with homogeneous components).
    Nilpoly {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Macaulay inverse system (restriction construction by default).
    InverseSystem {
        #[command(flatten)]
        input: InputArgs,
        /// Use the generalized exp-expansion construction instead of the
        /// restriction of the nil-polynomial.
        #[arg(long)]
        generalized: bool,
    },
    /// Associated form of a nondegenerate homogeneous form.
    AssociatedForm {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Classical invariants: I4/I6/Delta/j for a ternary cubic of shape
    /// a*z1^3+b*z2^3+c*z3^3+6d*z1*z2*z3, or the discriminant of a binary form.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Re-run the two worked examples as an acceptance suite.
    VerifyPaper,
    /// Run a command over an integer parameter sample.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        /// Which command to run at each sample point.
        #[arg(long, value_enum, value_name = "CMD")]
        command: SweepCmd,
        /// Parameter to sweep.
        #[arg(long, value_name = "NAME", default_value = "t")]
        over: String,
        /// First sample value (inclusive).
        #[arg(long, allow_hyphen_values = true, value_name = "INT")]
        from: i64,
        /// Last sample value (inclusive, must be >= from).
        #[arg(long, allow_hyphen_values = true, value_name = "INT")]
        to: i64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SweepCmd {
    Milnor,
    AssociatedForm,
    Invariants,
}

/// A terminal failure with its exit-code class.
#[derive(Debug)]
pub enum Failure {
    /// Exit 2: the invocation itself is wrong.
    Usage(String),
    /// Exit 1: the input is well-formed but mathematically rejected.
    Math(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Math(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Math(_) => "mathematical",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) => m,
            Failure::Math(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<crate::parser::ParseError> for Failure {
    fn from(e: crate::parser::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// The result of a successful dispatch, before rendering.
struct Outcome {
    command: &'static str,
    inputs: Value,
    results: Value,
    human: String,
    /// `false` forces exit code 1 after printing (verify-paper failures).
    ok: bool,
}

/// Resolved expression inputs shared by most subcommands.
struct Resolved {
    form: Option<Polynomial>,
    gens: Vec<Polynomial>,
    weights: Option<Vec<u64>>,
    inputs_echo: Value,
}

fn parse_params(specs: &[String]) -> Result<BTreeMap<String, Rat>, Failure> {
    let mut out = BTreeMap::new();
    for spec in specs {
        let (name, value) = spec.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("--param expects NAME=VALUE, got `{spec}`"))
        })?;
        let name = name.trim();
        if name.is_empty()
            || !name.chars().next().unwrap().is_ascii_lowercase()
            || !name.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
        {
            return Err(Failure::Usage(format!(
                "parameter name `{name}` must match [a-z][a-z0-9]*"
            )));
        }
        let rat = parse_rational(value)
            .map_err(|e| Failure::Usage(format!("bad value for parameter `{name}`: {e}")))?;
        if out.insert(name.to_string(), rat).is_some() {
            return Err(Failure::Usage(format!("parameter `{name}` given twice")));
        }
    }
    Ok(out)
}

fn resolve(input: &InputArgs, need: Need) -> Result<Resolved, Failure> {
    let parameters = parse_params(&input.params)?;

    let form_text = input.form.as_deref().map(str::trim);
    let gens_text: Vec<String> = match input.gens.as_deref() {
        Some(g) => g
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect(),
        None => Vec::new(),
    };

    match need {
        Need::Form => {
            if form_text.is_none() {
                return Err(Failure::Usage("this command requires --form".into()));
            }
            if !gens_text.is_empty() {
                return Err(Failure::Usage("this command takes --form, not --gens".into()));
            }
        }
        Need::Gens => {
            if gens_text.is_empty() {
                return Err(Failure::Usage(
                    "this command requires --gens with at least one generator".into(),
                ));
            }
            if form_text.is_some() {
                return Err(Failure::Usage("this command takes --gens, not --form".into()));
            }
        }
        Need::Either => {
            if form_text.is_some() == gens_text.is_empty() {
                // exactly one source present — fine
            } else {
                return Err(Failure::Usage(
                    "give exactly one of --form or --gens".into(),
                ));
            }
        }
    }

    let mut texts: Vec<&str> = Vec::new();
    if let Some(f) = form_text {
        texts.push(f);
    }
    for g in &gens_text {
        texts.push(g);
    }

    let variables = match &input.vars {
        Some(v) => {
            if v.iter().any(|name| name.trim().is_empty()) {
                return Err(Failure::Usage("--vars contains an empty name".into()));
            }
            v.iter().map(|s| s.trim().to_string()).collect::<Vec<_>>()
        }
        None => {
            let mut seen: Vec<String> = Vec::new();
            for t in &texts {
                for id in scan_identifiers(t).map_err(Failure::from)? {
                    if !parameters.contains_key(&id) && !seen.contains(&id) {
                        seen.push(id);
                    }
                }
            }
            seen.sort_by_key(|n| natural_key(n));
            if seen.is_empty() {
                return Err(Failure::Usage(
                    "no variables found; declare them with --vars".into(),
                ));
            }
            seen
        }
    };

    let form = match form_text {
        Some(t) => Some(parse_polynomial(t, &variables, &parameters)?),
        None => None,
    };
    let gens: Vec<Polynomial> = gens_text
        .iter()
        .map(|t| parse_polynomial(t, &variables, &parameters))
        .collect::<Result<_, _>>()?;

    if let Some(w) = &input.weights {
        if w.len() != variables.len() {
            return Err(Failure::Usage(format!(
                "--weights has {} entries for {} variables",
                w.len(),
                variables.len()
            )));
        }
        if w.iter().any(|&x| x == 0) {
            return Err(Failure::Usage("--weights entries must be positive".into()));
        }
    }

    let mut echo = serde_json::Map::new();
    if let Some(f) = form_text {
        echo.insert("form".into(), json!(f));
    }
    if !gens_text.is_empty() {
        echo.insert("gens".into(), json!(gens_text));
    }
    echo.insert("vars".into(), json!(variables));
    if !parameters.is_empty() {
        let params: BTreeMap<&str, String> = parameters
            .iter()
            .map(|(k, v)| (k.as_str(), format_rational(v)))
            .collect();
        echo.insert("params".into(), json!(params));
    }
    if let Some(w) = &input.weights {
        echo.insert("weights".into(), json!(w));
    }

    Ok(Resolved {
        form,
        gens,
        weights: input.weights.clone(),
        inputs_echo: Value::Object(echo),
    })
}

fn natural_key(name: &str) -> (String, u64, String) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, digits) = name.split_at(split);
    (prefix.to_string(), digits.parse().unwrap_or(0), name.to_string())
}

enum Need {
    Form,
    Gens,
    Either,
}

fn y_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("y{i}")).collect()
}

fn w_names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("w{i}")).collect()
}

fn refs(names: &[String]) -> Vec<&str> {
    names.iter().map(|s| s.as_str()).collect()
}

fn align(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn algebra_results(a: &QuotientAlgebra) -> Value {
    let sd = socle(a);
    let nu = ideal_filtration(a).nil_index();
    let basis: Vec<Vec<u32>> = a.basis().iter().map(|m| m.exponents().to_vec()).collect();
    json!({
        "dimension": a.dim(),
        "nil_index": nu,
        "gorenstein": sd.is_gorenstein(),
        "socle_dimension": sd.dimension(),
        "hilbert_function": hilbert_function(a),
        "standard_monomials": basis,
    })
}

fn algebra_human(a: &QuotientAlgebra) -> String {
    let sd = socle(a);
    let nu = ideal_filtration(a).nil_index();
    let hf: Vec<String> = hilbert_function(a).iter().map(usize::to_string).collect();
    align(&[
        ("dimension".into(), a.dim().to_string()),
        ("nil-index".into(), nu.to_string()),
        ("Gorenstein".into(), if sd.is_gorenstein() { "true".into() } else { "false".into() }),
        ("socle dimension".into(), sd.dimension().to_string()),
        ("Hilbert function".into(), hf.join(" ")),
    ])
}

fn build_algebra(r: &Resolved) -> Result<QuotientAlgebra, Failure> {
    match (&r.form, &r.weights) {
        (Some(q), Some(w)) => Ok(milnor_algebra_weighted(q, w)?),
        (Some(q), None) => Ok(milnor_algebra(q)?),
        (None, Some(w)) => Ok(quotient_algebra_weighted(&r.gens, w)?),
        (None, None) => Ok(quotient_algebra(&r.gens)?),
    }
}

fn nilpoly_results(npd: &NilPolynomialData) -> Value {
    let k = npd.algebra().dim() - 2;
    let names = y_names(k);
    let names = refs(&names);
    let components: Vec<Value> = npd
        .components()
        .iter()
        .map(|(s, p)| json!({"degree": s, "form": poly_node(p, &names)}))
        .collect();
    json!({
        "dimension": npd.algebra().dim(),
        "nil_index": npd.nil_index(),
        "pi_dimension": k,
        "nil_polynomial": poly_node(npd.poly(), &names),
        "components": components,
    })
}

fn inverse_results(inv: &InverseSystem) -> Value {
    let names = y_names(inv.g().nvars());
    let names = refs(&names);
    let source = match inv.source() {
        InverseSystemSource::RestrictionR => "restriction",
        InverseSystemSource::GeneralizedS => "generalized",
        InverseSystemSource::Homogeneous => "homogeneous",
    };
    let rep = inv.report();
    json!({
        "inverse_system": poly_node(inv.g(), &names),
        "source": source,
        "annihilator_check": {
            "pass": rep.pass,
            "generators_annihilate": rep.generators_annihilate,
            "failing_generator": rep.failing_generator,
            "span_dimension": rep.span_dimension,
            "expected_dimension": rep.expected_dimension,
        },
    })
}

fn invariants_results(q: &Polynomial) -> Result<(Value, String), Failure> {
    match q.nvars() {
        3 => {
            let t = ternary_cubic_invariants(q)?;
            let sixty_four = Rat::from_integer(BigInt::from(64));
            let i4_cubed = t.i4.pow(3);
            let j_reciprocal = if i4_cubed.is_zero() {
                None
            } else {
                Some(&t.delta / (&sixty_four * &i4_cubed))
            };
            let results = json!({
                "catalog": "ternary_cubic",
                "i4": rat_value(&t.i4),
                "i6": rat_value(&t.i6),
                "delta": rat_value(&t.delta),
                "j": t.j.as_ref().map(rat_value),
                "j_reciprocal": j_reciprocal.as_ref().map(rat_value),
            });
            let human = align(&[
                ("I4".into(), format_rational(&t.i4)),
                ("I6".into(), format_rational(&t.i6)),
                ("Delta".into(), format_rational(&t.delta)),
                (
                    "j".into(),
                    t.j.as_ref().map_or("undefined (Delta = 0)".into(), format_rational),
                ),
                (
                    "1/j".into(),
                    j_reciprocal
                        .as_ref()
                        .map_or("undefined (I4 = 0)".into(), format_rational),
                ),
            ]);
            Ok((results, human))
        }
        2 => {
            let d = binary_discriminant(q)?;
            let results = json!({
                "catalog": "binary_form",
                "discriminant": rat_value(&d),
                "vanishes": d.is_zero(),
            });
            let human = align(&[
                ("discriminant".into(), format_rational(&d)),
                ("vanishes".into(), d.is_zero().to_string()),
            ]);
            Ok((results, human))
        }
        n => Err(Failure::Math(format!(
            "no invariant catalog for forms in {n} variables (supported: ternary cubics of \
             shape a*z1^3+b*z2^3+c*z3^3+6d*z1*z2*z3, binary forms)"
        ))),
    }
}

fn dispatch(cmd: &Cmd) -> Result<Outcome, Failure> {
    match cmd {
        Cmd::Milnor { input } => {
            let r = resolve(input, Need::Form)?;
            let a = build_algebra(&r)?;
            Ok(Outcome {
                command: "milnor",
                inputs: r.inputs_echo,
                results: algebra_results(&a),
                human: algebra_human(&a),
                ok: true,
            })
        }
        Cmd::Quotient { input } => {
            let r = resolve(input, Need::Gens)?;
            let a = build_algebra(&r)?;
            Ok(Outcome {
                command: "quotient",
                inputs: r.inputs_echo,
                results: algebra_results(&a),
                human: algebra_human(&a),
                ok: true,
            })
        }
        Cmd::Nilpoly { input } => {
            let r = resolve(input, Need::Either)?;
            let a = build_algebra(&r)?;
            let npd = nil_polynomial(&a)?;
            let names = y_names(a.dim() - 2);
            let human = format!(
                "{}\nP = {}\n",
                algebra_human(&a).trim_end(),
                npd.poly().to_string_with(&refs(&names)),
            );
            Ok(Outcome {
                command: "nilpoly",
                inputs: r.inputs_echo,
                results: nilpoly_results(&npd),
                human,
                ok: true,
            })
        }
        Cmd::InverseSystem { input, generalized } => {
            let r = resolve(input, Need::Either)?;
            let a = build_algebra(&r)?;
            let system = if *generalized {
                let gens: Vec<Polynomial> = match &r.form {
                    Some(q) => (0..q.nvars()).map(|i| q.partial_derivative(i)).collect(),
                    None => r.gens.clone(),
                };
                inverse_system_s(&gens)?
            } else {
                inverse_system_r(&nil_polynomial(&a)?)?
            };
            let names = y_names(system.g().nvars());
            let rep = system.report();
            let human = format!(
                "g = {}\n{}",
                system.g().to_string_with(&refs(&names)),
                align(&[
                    ("annihilator check".into(), if rep.pass { "pass".into() } else { "fail".into() }),
                    (
                        "derivative span".into(),
                        format!("{} (expected {})", rep.span_dimension, rep.expected_dimension),
                    ),
                ]),
            );
            Ok(Outcome {
                command: "inverse-system",
                inputs: r.inputs_echo,
                results: inverse_results(&system),
                human,
                ok: true,
            })
        }
        Cmd::AssociatedForm { input } => {
            let r = resolve(input, Need::Form)?;
            if r.weights.is_some() {
                return Err(Failure::Usage(
                    "associated-form takes no --weights (the form must be homogeneous)".into(),
                ));
            }
            let q = r.form.as_ref().expect("Need::Form guarantees a form");
            let af = associated_form(q)?;
            let n = q.nvars();
            let names = w_names(n);
            let names_ref = refs(&names);
            let mu: Vec<Value> = af
                .mu()
                .iter()
                .map(|(m, c)| json!({"exponents": m.exponents(), "value": format_rational(c)}))
                .collect();
            let degree = af.form().total_degree().unwrap_or(0);
            let human = format!(
                "A(Q) = {}\ndegree {}\n",
                af.form().to_string_with(&names_ref),
                degree,
            );
            Ok(Outcome {
                command: "associated-form",
                inputs: r.inputs_echo,
                results: json!({
                    "degree": degree,
                    "mu": mu,
                    "form": poly_node(af.form(), &names_ref),
                }),
                human,
                ok: true,
            })
        }
        Cmd::Invariants { input } => {
            let r = resolve(input, Need::Form)?;
            let q = r.form.as_ref().expect("Need::Form guarantees a form");
            let (results, human) = invariants_results(q)?;
            Ok(Outcome {
                command: "invariants",
                inputs: r.inputs_echo,
                results,
                human,
                ok: true,
            })
        }
        Cmd::VerifyPaper => {
            let results = run_all();
            let all_pass = results.iter().all(|c| c.pass);
            let mut human = String::new();
            for c in &results {
                human.push_str(&format!(
                    "criterion {}: {} - {} - {}\n",
                    c.index,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            human.push_str(if all_pass {
                "all criteria PASS\n"
            } else {
                "FAILURES PRESENT\n"
            });
            let nodes: Vec<Value> = results
                .iter()
                .map(|c| {
                    json!({
                        "index": c.index,
                        "name": c.name,
                        "pass": c.pass,
                        "detail": c.detail,
                    })
                })
                .collect();
            Ok(Outcome {
                command: "verify-paper",
                inputs: json!({}),
                results: json!({"criteria": nodes, "all_pass": all_pass}),
                human,
                ok: all_pass,
            })
        }
        Cmd::Sweep { input, command, over, from, to } => sweep(input, *command, over, *from, *to),
    }
}

fn sweep(
    input: &InputArgs,
    command: SweepCmd,
    over: &str,
    from: i64,
    to: i64,
) -> Result<Outcome, Failure> {
    if from > to {
        return Err(Failure::Usage(format!(
            "--from {from} exceeds --to {to}"
        )));
    }
    if input.params.iter().any(|s| {
        s.split_once('=')
            .map(|(n, _)| n.trim() == over)
            .unwrap_or(false)
    }) {
        return Err(Failure::Usage(format!(
            "`{over}` is the sweep parameter; do not also bind it with --param"
        )));
    }

    let mut points: Vec<Value> = Vec::new();
    let mut inputs_echo = Value::Null;
    for v in from..=to {
        let mut point_input = input.clone();
        point_input.params.push(format!("{over}={v}"));
        let point_cmd = match command {
            SweepCmd::Milnor => Cmd::Milnor { input: point_input },
            SweepCmd::AssociatedForm => Cmd::AssociatedForm { input: point_input },
            SweepCmd::Invariants => Cmd::Invariants { input: point_input },
        };
        match dispatch(&point_cmd) {
            Ok(outcome) => {
                if inputs_echo == Value::Null {
                    // The echo of the first point, minus its parameter
                    // binding, describes the whole sweep.
                    inputs_echo = outcome.inputs.clone();
                    if let Value::Object(m) = &mut inputs_echo {
                        m.remove("params");
                    }
                }
                let mut point = serde_json::Map::new();
                point.insert(over.to_string(), json!(v));
                point.insert("status".into(), json!("ok"));
                point.insert("results".into(), outcome.results);
                points.push(Value::Object(point));
            }
            Err(Failure::Math(msg)) => {
                let mut point = serde_json::Map::new();
                point.insert(over.to_string(), json!(v));
                point.insert("status".into(), json!("rejected"));
                point.insert("error".into(), json!(msg));
                points.push(Value::Object(point));
            }
            Err(u @ Failure::Usage(_)) => return Err(u),
        }
    }

    let total = points.len();
    let rejected = points
        .iter()
        .filter(|p| p["status"] == json!("rejected"))
        .count();
    let command_name = match command {
        SweepCmd::Milnor => "milnor",
        SweepCmd::AssociatedForm => "associated-form",
        SweepCmd::Invariants => "invariants",
    };
    let mut human = format!(
        "sweep {command_name} over {over} = {from}..{to}: {} ok, {rejected} rejected\n",
        total - rejected,
    );
    for p in &points {
        let status = p["status"].as_str().unwrap_or("?");
        human.push_str(&format!("  {over} = {}: {status}\n", p[over]));
    }

    if inputs_echo == Value::Null {
        inputs_echo = json!({});
    }
    if let Value::Object(m) = &mut inputs_echo {
        m.insert("sweep".into(), json!({
            "command": command_name,
            "over": over,
            "from": from,
            "to": to,
        }));
    }

    Ok(Outcome {
        command: "sweep",
        inputs: inputs_echo,
        results: json!({"points": points}),
        human,
        ok: true,
    })
}

/// Entry point: parse argv, run, print, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version on stdout (exit 0) and usage errors
            // on stderr (exit 2).
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 2 };
        }
    };

    let started = Instant::now();
    match dispatch(&cli.cmd) {
        Ok(outcome) => {
            let timing_ms = started.elapsed().as_millis() as u64;
            let report = RunReport::new(outcome.command, outcome.inputs, outcome.results, timing_ms);
            let rendered = report.to_json_string();
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if cli.json {
                print!("{rendered}");
            } else {
                print!("{}", outcome.human);
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(failure) => {
            if cli.json {
                let err = json!({
                    "schema_version": crate::report::SCHEMA_VERSION,
                    "error": {
                        "kind": failure.kind(),
                        "message": failure.message(),
                    },
                });
                println!("{}", serde_json::to_string_pretty(&err).expect("error serializes"));
            }
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

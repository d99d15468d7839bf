use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde_json::{json, Value};

use locsparse::acceptance;
use locsparse::bounds::{sparse_iset, turan_iset};
use locsparse::coloring::{
    bknp_condition_check, dkps_condition_check, dkps_ell, heuristic_color, random_cover, solve_exact,
    uniform_lists, BknpParams, CorrespondenceCover, Outcome, Twist,
};
use locsparse::embedding::min_degree_boost;
use locsparse::gen::{families, gnm, gnp, random_locally_sparse, random_triangle_free};
use locsparse::hardcore::{
    glauber_sample, independence_polynomial, occupancy_fraction, occupancy_fraction_exact, MAX_POLY_VERTICES,
};
use locsparse::io::{read_graph, write_graph, Format};
use locsparse::occupancy::{
    auto_certify, certified_bound, check_certificate, tight_beta, AutoInputs, Mode, OccupancyCertificate,
};
use locsparse::sparsity::certify_uniform;
use locsparse::{Error, Graph};

use crate::{Command, ConditionMode, GraphArg, IsetMethod, Suite, TwistArg};

#[derive(Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON in {what}: {source}")]
    Json { what: String, source: serde_json::Error },
}

impl CliError {
    pub fn is_input_error(&self) -> bool {
        match self {
            CliError::Core(e) => e.is_input_error() || matches!(e, Error::Io(_) | Error::Json(_)),
            CliError::Usage(_) | CliError::Read { .. } | CliError::Json { .. } => true,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

/// Writes to stdout, treating a closed pipe as the reader having had enough.
fn write_stdout(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn emit(value: &Value) {
    write_stdout(&(serde_json::to_string_pretty(value).expect("serializable") + "\n"));
}

fn load_graph(input: &GraphArg) -> Result<Graph> {
    Ok(read_graph(&input.graph, input.format.map(Format::from))?)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read_text(path)?).map_err(|source| CliError::Json {
        what: path.display().to_string(),
        source,
    })
}

fn load_cover(g: &Graph, path: &Path) -> Result<CorrespondenceCover> {
    CorrespondenceCover::from_json(g, &read_json(path)?).map_err(|e| match e {
        Error::Json(source) => CliError::Json {
            what: path.display().to_string(),
            source,
        },
        other => other.into(),
    })
}

fn extension(f: Format) -> &'static str {
    match f {
        Format::EdgeList => "edges",
        Format::Dimacs => "col",
        Format::Json => "json",
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

pub fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::Analyze { input, k, r } => analyze(&load_graph(&input)?, k, r),
        Command::Polynomial { input } => polynomial(&load_graph(&input)?),
        Command::Occupancy {
            input,
            lambda,
            glauber_steps,
            seed,
        } => occupancy(&load_graph(&input)?, lambda, glauber_steps.zip(seed)),
        Command::Certify {
            input,
            lambda,
            strong,
            auto,
            sigma,
            k,
            r,
            cert,
            beta,
            gamma,
        } => {
            let g = load_graph(&input)?;
            let mode = if strong { Mode::Strong } else { Mode::Induced };
            let source = if auto {
                CertSource::Auto {
                    sigma: sigma.expect("clap enforces --sigma"),
                    k,
                    r,
                }
            } else if let Some(path) = cert {
                CertSource::File(path)
            } else if let Some(gamma) = gamma {
                CertSource::Uniform { beta, gamma }
            } else {
                return usage("certify needs --auto, --cert or --gamma");
            };
            certify(&g, lambda, mode, source)
        }
        Command::Iset { input, k, r, method } => iset(&load_graph(&input)?, k, r, method),
        Command::Color {
            input,
            cover,
            uniform,
            exact: _,
            heuristic,
            seed,
            max_iters,
        } => {
            let g = load_graph(&input)?;
            let cover = match (cover, uniform) {
                (Some(path), _) => load_cover(&g, &path)?,
                (None, Some(q)) => uniform_lists(&g, q)?,
                (None, None) => return usage("color needs --cover or --uniform"),
            };
            let heuristic = if heuristic { seed.map(|s| (s, max_iters)) } else { None };
            color(&g, &cover, heuristic)
        }
        Command::Conditions {
            input,
            cover,
            mode,
            params,
        } => {
            let g = load_graph(&input)?;
            let cover = load_cover(&g, &cover)?;
            let params = if params.trim_start().starts_with('{') {
                serde_json::from_str(&params).map_err(|source| CliError::Json {
                    what: "--params".into(),
                    source,
                })?
            } else {
                read_json(Path::new(&params))?
            };
            conditions(&g, &cover, mode, &params)
        }
        Command::Embed {
            input,
            delta,
            k,
            r,
            out,
            out_format,
        } => embed(&load_graph(&input)?, delta, k, r, out.as_deref(), out_format.into()),
        Command::Gen {
            family,
            params,
            seed,
            out,
            out_format,
        } => {
            let g = generate(&family, &parse_params(&params)?, seed)?;
            let text = write_graph(&g, out_format.into());
            match out {
                Some(path) => write_file(&path, &text)?,
                None => write_stdout(&text),
            }
            Ok(Verdict::Pass)
        }
        Command::Cover {
            input,
            fold,
            twist,
            keep,
            seed,
        } => {
            let g = load_graph(&input)?;
            let cover = match twist {
                TwistArg::Identity => uniform_lists(&g, fold as u32)?,
                TwistArg::Full => random_cover(&g, fold, seed.expect("clap enforces --seed"), Twist::Full)?,
                TwistArg::Partial => random_cover(&g, fold, seed.expect("clap enforces --seed"), Twist::Partial(keep))?,
            };
            emit(&cover.to_json());
            Ok(Verdict::Pass)
        }
        Command::Bench { suite, criterion, json } => bench(suite, criterion, json),
    }
}

fn analyze(g: &Graph, k: f64, r: usize) -> Result<Verdict> {
    let cert = certify_uniform(g, k, r)?;
    let mut out = cert.to_json();
    out["n"] = json!(g.n());
    out["m"] = json!(g.m());
    out["k"] = json!(k);
    out["r"] = json!(r);
    out["counts"] = json!(cert.counts);
    emit(&out);
    Ok(cert.passes().into())
}

fn polynomial(g: &Graph) -> Result<Verdict> {
    let poly = independence_polynomial(g)?;
    emit(&json!({
        "n": g.n(),
        "alpha": poly.alpha(),
        "coefficients": poly.to_json(),
        "total": poly.total().to_string(),
        "median_independence_number": poly.median_independence_number(),
    }));
    Ok(Verdict::Pass)
}

/// Exact occupancy as a reduced fraction, for graphs small enough that the
/// rational arithmetic stays cheap.
fn exact_occupancy(g: &Graph, lambda: f64) -> Result<Option<String>> {
    if g.n() == 0 || g.n() > MAX_POLY_VERTICES {
        return Ok(None);
    }
    let poly = independence_polynomial(g)?;
    let lambda = BigRational::from_float(lambda).ok_or_else(|| Error::Domain(format!("λ = {lambda}")))?;
    Ok(Some(occupancy_fraction_exact(&poly, &lambda)?.to_string()))
}

fn occupancy(g: &Graph, lambda: f64, glauber: Option<(u64, u64)>) -> Result<Verdict> {
    let poly = independence_polynomial(g)?;
    let mut out = json!({
        "n": g.n(),
        "lambda": lambda,
        "occupancy": occupancy_fraction(&poly, lambda)?,
    });
    if let Some(exact) = exact_occupancy(g, lambda)? {
        out["occupancy_exact"] = json!(exact);
    }
    if let Some((steps, seed)) = glauber {
        out["glauber"] = serde_json::to_value(glauber_sample(g, lambda, steps, seed)?).expect("serializable");
    }
    emit(&out);
    Ok(Verdict::Pass)
}

enum CertSource {
    Auto { sigma: f64, k: f64, r: usize },
    File(PathBuf),
    Uniform { beta: Option<f64>, gamma: f64 },
}

fn certify(g: &Graph, lambda: f64, mode: Mode, source: CertSource) -> Result<Verdict> {
    let n = g.n();
    let (cert, verdict) = match source {
        CertSource::Auto { sigma, k, r } => auto_certify(
            g,
            &AutoInputs {
                lambda,
                sigma,
                d: None,
                r: vec![r; n],
                k: vec![k; n],
                mode,
            },
        )?,
        CertSource::File(path) => {
            let mut cert = OccupancyCertificate::from_json(&read_json(&path)?, n)?;
            if cert.lambda != lambda {
                return usage(format!("certificate is for λ = {}, not {lambda}", cert.lambda));
            }
            if mode == Mode::Strong {
                cert.mode = Mode::Strong;
            }
            let verdict = check_certificate(g, &cert)?;
            (cert, verdict)
        }
        CertSource::Uniform { beta, gamma } => {
            let beta = match beta {
                Some(b) => b,
                None => tight_beta(g, lambda, gamma, 0.0)?,
            };
            let cert = OccupancyCertificate::uniform(n, lambda, mode, beta, gamma)?;
            let verdict = check_certificate(g, &cert)?;
            (cert, verdict)
        }
    };
    let delta = g.max_degree();
    let mut out = json!({
        "certificate": cert.to_json(),
        "verdict": verdict.to_json(),
        "max_degree": delta,
        "certified_bound": certified_bound(&cert, delta),
    });
    if n > 0 && n <= MAX_POLY_VERTICES {
        let exact = occupancy_fraction(&independence_polynomial(g)?, lambda)?;
        out["exact_occupancy"] = json!(exact);
    }
    emit(&out);
    Ok(verdict.pass.into())
}

fn iset(g: &Graph, k: f64, r: usize, method: IsetMethod) -> Result<Verdict> {
    let w = match method {
        IsetMethod::Sparse => sparse_iset(g, k, r)?,
        IsetMethod::Turan => turan_iset(g)?,
    };
    let mut out = w.to_json();
    out["n"] = json!(g.n());
    emit(&out);
    Ok(Verdict::Pass)
}

fn color(g: &Graph, cover: &CorrespondenceCover, heuristic: Option<(u64, u64)>) -> Result<Verdict> {
    let (method, found) = match heuristic {
        Some((seed, iters)) => ("heuristic", heuristic_color(g, cover, seed, iters).map(Some)),
        None => (
            "exact",
            match solve_exact(g, cover)? {
                Outcome::Sat(phi) => Some(Some(phi)),
                Outcome::Unsat => Some(None),
            },
        ),
    };
    let (verdict, phi) = match found {
        Some(Some(phi)) => ("SAT", Some(phi)),
        Some(None) => ("UNSAT", None),
        None => ("GIVE_UP", None),
    };
    let mut out = json!({ "method": method, "verdict": verdict, "fold": cover.fold() });
    if let Some(phi) = &phi {
        out["coloring"] = phi.to_json()["phi"].clone();
    }
    emit(&out);
    Ok(phi.is_some().into())
}

fn param_f64(params: &Value, key: &str) -> Result<Option<f64>> {
    match params.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_f64()
            .map(Some)
            .ok_or_else(|| CliError::Usage(format!("params.{key} must be a number"))),
    }
}

fn conditions(g: &Graph, cover: &CorrespondenceCover, mode: ConditionMode, params: &Value) -> Result<Verdict> {
    match mode {
        ConditionMode::Dkps => {
            let cert = match params.get("certificate") {
                Some(c) => OccupancyCertificate::from_json(c, g.n())?,
                None => {
                    let get = |key| param_f64(params, key)?.ok_or_else(|| CliError::Usage(format!("params.{key} is required")));
                    OccupancyCertificate::uniform(g.n(), get("lambda")?, Mode::Induced, get("beta")?, get("gamma")?)?
                }
            };
            let ell = match param_f64(params, "ell")? {
                Some(ell) => ell,
                None => {
                    let k = param_f64(params, "k")?.unwrap_or(1.0);
                    let r = param_f64(params, "r")?.unwrap_or(3.0) as usize;
                    dkps_ell(k, r, g.max_degree() as f64, cert.lambda)?
                }
            };
            let report = dkps_condition_check(g, cover, &cert, ell)?;
            emit(&report.to_json());
            Ok(report.hypotheses_verified.into())
        }
        ConditionMode::Bknp => {
            let bknp = match param_f64(params, "gamma")? {
                Some(gamma) if params.get("ell").is_none() => {
                    let mut p = BknpParams::instantiate(g, gamma);
                    if let Some(eps) = param_f64(params, "eps")? {
                        p.eps = eps;
                    }
                    p
                }
                _ => serde_json::from_value(params.clone()).map_err(|source| CliError::Json {
                    what: "--params".into(),
                    source,
                })?,
            };
            let report = bknp_condition_check(g, cover, &bknp)?;
            emit(&report.to_json());
            Ok(report.hypotheses_verified.into())
        }
    }
}

fn embed(g: &Graph, delta: usize, k: f64, r: usize, out: Option<&Path>, format: Format) -> Result<Verdict> {
    let res = min_degree_boost(g, delta, &vec![k; g.n()], &vec![r; g.n()])?;
    let text = write_graph(&res.graph, format);
    match out {
        None => write_stdout(&text),
        Some(prefix) => {
            let graph_file = prefix.with_extension(extension(format));
            let homs_file = prefix.with_extension("homs.json");
            write_file(&graph_file, &text)?;
            write_file(
                &homs_file,
                &(serde_json::to_string_pretty(&res.to_json()).expect("serializable") + "\n"),
            )?;
            emit(&json!({
                "rounds": res.rounds,
                "n": res.graph.n(),
                "m": res.graph.m(),
                "min_degree": res.graph.min_degree(),
                "max_degree": res.graph.max_degree(),
                "graph_file": graph_file.display().to_string(),
                "homs_file": homs_file.display().to_string(),
            }));
        }
    }
    Ok(Verdict::Pass)
}

fn parse_params(text: &str) -> Result<HashMap<String, String>> {
    let mut out = HashMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((k, v)) = item.split_once('=') else {
            return usage(format!("parameter {item:?} is not key=value"));
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn param<T: std::str::FromStr>(params: &HashMap<String, String>, key: &str) -> Result<T> {
    let raw = params
        .get(key)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {key}")))?;
    raw.parse()
        .map_err(|_| CliError::Usage(format!("parameter {key} = {raw:?} does not parse")))
}

const MAX_KNESER_GROUND: usize = 24;

fn generate(family: &str, params: &HashMap<String, String>, seed: Option<u64>) -> Result<Graph> {
    let seeded = || seed.ok_or_else(|| CliError::Usage(format!("family {family} is random and needs --seed")));
    let g = match family {
        "gnp" => gnp(param(params, "n")?, param(params, "p")?, seeded()?)?,
        "gnm" => gnm(param(params, "n")?, param(params, "m")?, seeded()?)?,
        "triangle-free" => random_triangle_free(param(params, "n")?, param(params, "m")?, seeded()?)?,
        "locally-sparse" => random_locally_sparse(
            param(params, "n")?,
            param(params, "delta")?,
            param(params, "k")?,
            param(params, "r")?,
            seeded()?,
        )?,
        "path" => families::path(param(params, "n")?),
        "cycle" => {
            let n: usize = param(params, "n")?;
            if n < 3 {
                return usage("cycle needs n >= 3");
            }
            families::cycle(n)
        }
        "complete" => families::complete(param(params, "n")?),
        "star" => families::star(param(params, "leaves")?),
        "petersen" => families::petersen(),
        "kneser" => {
            let (n, k): (usize, usize) = (param(params, "n")?, param(params, "k")?);
            if n > MAX_KNESER_GROUND || k > n {
                return usage(format!("kneser needs k <= n <= {MAX_KNESER_GROUND}"));
            }
            families::kneser(n, k)
        }
        "multipartite" => {
            let parts: String = param(params, "parts")?;
            let parts = parts
                .split(':')
                .map(|s| s.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage("parts must look like 2:2:3".into()))?;
            families::complete_multipartite(&parts)
        }
        other => return usage(format!("unknown family {other:?}")),
    };
    Ok(g)
}

fn bench(suite: Suite, criterion: Option<u8>, as_json: bool) -> Result<Verdict> {
    let Suite::Acceptance = suite;
    let results = match criterion {
        Some(id) => vec![acceptance::run_one(id).ok_or_else(|| CliError::Usage(format!("no criterion {id}")))?],
        None => acceptance::run_all(),
    };
    let passed = results.iter().filter(|r| r.pass).count();
    if as_json {
        emit(&json!({
            "suite": "acceptance",
            "passed": passed,
            "total": results.len(),
            "criteria": results,
        }));
    } else {
        for r in &results {
            write_stdout(&(r.line() + "\n"));
        }
        write_stdout(&format!("{passed} of {} criteria passed\n", results.len()));
    }
    Ok((passed == results.len()).into())
}

//! Command-line front end over JSON scenes.

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bimodule::Side;
use crate::coring::Coring;
use crate::demo::{self, Subring};
use crate::error::{Error, Result};
use crate::galois::{find_grouplikes, galois_assess, Grouplike, DEFAULT_GROUPLIKE_BUDGET};
use crate::linalg::PrimeField;
use crate::report::AxiomReport;
use crate::scene::{Loaded, Scene};
use crate::structure::{decompose_semisimple, is_semisimple_coring};

#[derive(Parser, Debug)]
#[command(name = "coringlab", version, about = "Exact computations with corings over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Scene file to load.
    #[arg(long, global = true)]
    pub scene: Option<PathBuf>,
    /// Seed for randomized procedures; overrides the scene's seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    pub json_out: Option<PathBuf>,
    /// Expected values `key=value` in the results; dots descend into objects.
    #[arg(long, global = true, num_args = 1..)]
    pub expect: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the axiom suite of one object, or of every object in the scene.
    Check {
        #[arg(long)]
        object: Option<String>,
    },
    /// Emit a scene holding a standard coring.
    Demo(DemoArgs),
    /// The dual ring of a coring on one side.
    Dual {
        #[arg(long)]
        coring: Option<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Semisimplicity certificate of a coring.
    Semisimple {
        #[arg(long)]
        coring: Option<String>,
    },
    /// Decomposition of a semisimple coring into simple subcorings.
    Decompose {
        #[arg(long)]
        coring: Option<String>,
    },
    /// Enumerate grouplike elements.
    Grouplikes {
        #[arg(long)]
        coring: Option<String>,
        #[arg(long, default_value_t = DEFAULT_GROUPLIKE_BUDGET)]
        budget: u64,
    },
    /// Coinvariants and the canonical map for a grouplike.
    Galois {
        #[arg(long)]
        coring: Option<String>,
        /// Comma-separated coordinates, or `auto` for the first grouplike found.
        #[arg(long, default_value = "auto")]
        grouplike: String,
    },
}

#[derive(Args, Debug)]
pub struct DemoArgs {
    #[arg(value_enum)]
    pub kind: DemoKind,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub p: u64,
    #[arg(long, default_value = "diag")]
    pub subring: String,
    #[arg(long, default_value = "field")]
    pub algebra: String,
    #[arg(long, default_value = "field")]
    pub r: String,
    #[arg(long, default_value_t = 0)]
    pub instance: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    Sweedler,
    Triangular,
    Entwining,
    Trivial,
    DirectSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

/// Outcome of a command: JSON output plus whether every check passed.
pub struct Outcome {
    pub output: Value,
    pub passed: bool,
}

pub fn demo_scene(args: &DemoArgs) -> Result<Scene> {
    let f = PrimeField::new(args.p)?;
    let c = match args.kind {
        DemoKind::Sweedler => demo::sweedler(args.n, f, args.subring.parse::<Subring>()?)?,
        DemoKind::Trivial => demo::trivial(&args.algebra, args.n, f)?,
        DemoKind::Triangular => demo::triangular(&args.r, f)?,
        DemoKind::Entwining => demo::entwined(args.instance, f)?,
        DemoKind::DirectSum => demo::two_simple_sum(f)?,
    };
    let mut scene = Scene::new(f);
    scene.add_coring("C", &c);
    Ok(scene)
}

fn report_json(r: &AxiomReport) -> Value {
    json!({
        "valid": r.is_ok(),
        "failed": r.axioms(),
        "failures": r.failures,
    })
}

fn pick<'a, T>(map: &'a std::collections::BTreeMap<String, T>, name: &Option<String>, kind: &str) -> Result<(String, &'a T)> {
    match name {
        Some(n) => map.get(n).map(|x| (n.clone(), x)).ok_or_else(|| Error::Scene(format!("unknown {kind} '{n}'"))),
        None if map.len() == 1 => {
            let (n, x) = map.iter().next().expect("one entry");
            Ok((n.clone(), x))
        }
        None => Err(Error::Scene(format!("the scene has {} {kind}s; name one", map.len()))),
    }
}

fn valid_coring(loaded: &Loaded, name: &Option<String>) -> Result<(String, Arc<Coring>)> {
    let (n, c) = pick(&loaded.corings, name, "coring")?;
    let report = c.check();
    if !report.is_ok() {
        return Err(Error::InvalidCoring(format!("'{n}': {report}")));
    }
    Ok((n, c.clone()))
}

fn cmd_check(loaded: &Loaded, object: &Option<String>) -> Result<Outcome> {
    let mut results = serde_json::Map::new();
    let mut passed = true;
    let mut record = |name: &str, kind: &str, r: Value, ok: bool| {
        passed &= ok;
        results.insert(name.to_string(), json!({ "kind": kind, "result": r }));
    };
    let wanted = |n: &str| object.as_deref().is_none_or(|o| o == n);
    for (n, a) in loaded.algebras.iter().filter(|(n, _)| wanted(n)) {
        let r = a.check();
        record(n, "algebra", report_json(&r), r.is_ok());
    }
    for (n, m) in loaded.bimodules.iter().filter(|(n, _)| wanted(n)) {
        let r = m.check();
        record(n, "bimodule", report_json(&r), r.is_ok());
    }
    for (n, c) in loaded.corings.iter().filter(|(n, _)| wanted(n)) {
        let r = c.check();
        record(n, "coring", report_json(&r), r.is_ok());
    }
    for (n, m) in loaded.comodules.iter().filter(|(n, _)| wanted(n)) {
        let r = m.check();
        record(n, "comodule", report_json(&r), r.is_ok());
    }
    for (n, b) in loaded.bicomodules.iter().filter(|(n, _)| wanted(n)) {
        let r = b.check()?;
        let ok = r.verdict()?;
        let v = json!({
            "valid": ok,
            "direct": report_json(&r.direct),
            "dual": r.dual.as_ref().map(report_json),
        });
        record(n, "bicomodule", v, ok);
    }
    if let Some(o) = object {
        if results.is_empty() {
            return Err(Error::Scene(format!("unknown object '{o}'")));
        }
    }
    let valid = passed;
    results.insert("valid".into(), Value::Bool(valid));
    Ok(Outcome { output: Value::Object(results), passed })
}

fn cmd_dual(loaded: &Loaded, coring: &Option<String>, side: Side) -> Result<Outcome> {
    let (name, c) = valid_coring(loaded, coring)?;
    let d = c.dual(side)?;
    let alg = d.algebra();
    let r = alg.check();
    let f = alg.field();
    let emb = d.embedding().matrix();
    Ok(Outcome {
        passed: r.is_ok(),
        output: json!({
            "coring": name,
            "side": match side { Side::Left => "left", Side::Right => "right" },
            "dim": d.dim(),
            "algebra": report_json(&r),
            "unit_is_counit": d.coordinates(c.counit()).as_deref() == Some(alg.unit()),
            "embedding_injective": emb.rank() == emb.cols(),
            "commutative": alg.is_commutative(),
            "semisimple": alg.is_semisimple(),
            "p": f.p(),
        }),
    })
}

fn cmd_semisimple(loaded: &Loaded, coring: &Option<String>) -> Result<Outcome> {
    let (name, c) = valid_coring(loaded, coring)?;
    let cert = is_semisimple_coring(&c)?;
    let components = if cert.semisimple {
        let dec = decompose_semisimple(&c)?;
        Some(dec.components.iter().map(|k| json!({ "label": k.label, "dim": k.subspace.dim() })).collect::<Vec<_>>())
    } else {
        None
    };
    let clauses: serde_json::Map<String, Value> =
        cert.clauses.iter().map(|k| (k.name.clone(), Value::Bool(k.value))).collect();
    Ok(Outcome {
        passed: true,
        output: json!({
            "coring": name,
            "semisimple": cert.semisimple,
            "clauses": clauses,
            "left_projective": cert.left_projective,
            "right_projective": cert.right_projective,
            "components": components.as_ref().map(Vec::len),
            "component_list": components,
        }),
    })
}

fn cmd_decompose(loaded: &Loaded, coring: &Option<String>) -> Result<Outcome> {
    let (name, c) = valid_coring(loaded, coring)?;
    let dec = decompose_semisimple(&c)?;
    let comps: Vec<Value> = dec
        .components
        .iter()
        .map(|k| json!({ "label": k.label, "dim": k.subspace.dim(), "basis": k.subspace.basis_vectors() }))
        .collect();
    Ok(Outcome {
        passed: true,
        output: json!({ "coring": name, "semisimple": true, "components": comps.len(), "component_list": comps }),
    })
}

fn cmd_grouplikes(loaded: &Loaded, coring: &Option<String>, budget: u64) -> Result<Outcome> {
    let (name, c) = valid_coring(loaded, coring)?;
    let s = find_grouplikes(&c, budget)?;
    let vectors: Vec<&Vec<u64>> = s.grouplikes.iter().map(|g| &g.vector).collect();
    Ok(Outcome {
        passed: true,
        output: json!({
            "coring": name,
            "count": vectors.len(),
            "complete": s.complete,
            "candidates": s.candidates,
            "grouplikes": vectors,
        }),
    })
}

fn cmd_galois(loaded: &Loaded, coring: &Option<String>, grouplike: &str) -> Result<Outcome> {
    let (name, c) = valid_coring(loaded, coring)?;
    let g = if grouplike == "auto" {
        find_grouplikes(&c, DEFAULT_GROUPLIKE_BUDGET)?
            .grouplikes
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidGrouplike("the coring has no grouplike element".into()))?
    } else {
        let coords: Vec<u64> = grouplike
            .split(',')
            .map(|x| x.trim().parse::<i64>().map(|v| v.rem_euclid(c.algebra().p() as i64) as u64))
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Scene(format!("bad grouplike coordinates: {e}")))?;
        Grouplike::new(&c, coords)?
    };
    let r = galois_assess(&c, &g)?;
    let clauses: serde_json::Map<String, Value> =
        r.clauses.iter().map(|k| (k.name.clone(), Value::Bool(k.value))).collect();
    Ok(Outcome {
        passed: r.equivalent,
        output: json!({
            "coring": name,
            "grouplike": g.vector,
            "coinvariants_dim": r.coinvariants.subspace.dim(),
            "coinvariants_simple_artinian": r.coinvariants.algebra.is_simple_artinian(),
            "bijective": r.bijective,
            "morphism": report_json(&r.morphism),
            "clauses": clauses,
            "equivalent": r.equivalent,
        }),
    })
}

fn lookup_path<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, key| cur.get(key))
}

/// Keys whose values differ from the expectations.
pub fn expectation_mismatches(results: &Value, expect: &[String]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for e in expect {
        let (k, v) = e.split_once('=').ok_or_else(|| Error::Scene(format!("expectation '{e}' is not key=value")))?;
        let want: Value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
        match lookup_path(results, k) {
            Some(got) if *got == want => {}
            Some(got) => bad.push(format!("{k}: expected {want}, got {got}")),
            None => bad.push(format!("{k}: missing")),
        }
    }
    Ok(bad)
}

fn load_scene(cli: &Cli) -> Result<Loaded> {
    let path = cli.scene.as_ref().ok_or_else(|| Error::Scene("--scene is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Error::Scene(format!("{}: {e}", path.display())))?;
    let mut loaded = Scene::from_json(&text)?.load()?;
    if let Some(s) = cli.seed {
        loaded.seed = s;
    }
    Ok(loaded)
}

/// Runs a command and produces the JSON document to emit.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    if let Command::Demo(args) = &cli.command {
        let mut scene = demo_scene(args)?;
        if let Some(s) = cli.seed {
            scene.seed = s;
        }
        let output = serde_json::to_value(&scene).map_err(|e| Error::Scene(e.to_string()))?;
        return Ok(Outcome { output, passed: true });
    }
    let loaded = load_scene(cli)?;
    let outcome = match &cli.command {
        Command::Check { object } => cmd_check(&loaded, object)?,
        Command::Dual { coring, side } => cmd_dual(&loaded, coring, (*side).into())?,
        Command::Semisimple { coring } => cmd_semisimple(&loaded, coring)?,
        Command::Decompose { coring } => cmd_decompose(&loaded, coring)?,
        Command::Grouplikes { coring, budget } => cmd_grouplikes(&loaded, coring, *budget)?,
        Command::Galois { coring, grouplike } => cmd_galois(&loaded, coring, grouplike)?,
        Command::Demo(_) => unreachable!("handled above"),
    };
    let command = match &cli.command {
        Command::Check { .. } => "check",
        Command::Dual { .. } => "dual",
        Command::Semisimple { .. } => "semisimple",
        Command::Decompose { .. } => "decompose",
        Command::Grouplikes { .. } => "grouplikes",
        Command::Galois { .. } => "galois",
        Command::Demo(_) => "demo",
    };
    Ok(Outcome {
        passed: outcome.passed,
        output: json!({
            "command": command,
            "version": env!("CARGO_PKG_VERSION"),
            "seed": loaded.seed,
            "results": outcome.output,
        }),
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Scene(_) | Error::DimensionMismatch(_) | Error::NotPrime(_) | Error::AlgebraMismatch(_) => 2,
        _ => 1,
    }
}

/// Exit code: 0 when everything passes, 1 on axiom failures or unmet
/// expectations, 2 on malformed input.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let results = outcome.output.get("results").unwrap_or(&outcome.output);
    let mismatches = match expectation_mismatches(results, &cli.expect) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = serde_json::to_string_pretty(&outcome.output).expect("report serializes");
    match &cli.json_out {
        Some(path) => {
            if let Err(e) = fs::write(path, format!("{text}\n")) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
        }
    }
    for m in &mismatches {
        eprintln!("expectation failed: {m}");
    }
    if !outcome.passed || !mismatches.is_empty() {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("coringlab").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn demo_and_expectations() {
        let cli = parse(&["demo", "sweedler", "--n", "2", "--p", "3", "--subring", "diag"]);
        let out = execute(&cli).unwrap();
        let scene: Scene = serde_json::from_value(out.output).unwrap();
        let loaded = scene.load().unwrap();
        assert_eq!(loaded.corings["C"].dim(), 8);
        let v = json!({ "a": { "b": true }, "n": 2 });
        assert!(expectation_mismatches(&v, &["a.b=true".into(), "n=2".into()]).unwrap().is_empty());
        assert_eq!(expectation_mismatches(&v, &["n=3".into(), "c=1".into()]).unwrap().len(), 2);
    }
}

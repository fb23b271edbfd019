use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use ramsey_forge::bigramsey::{
    degree_upper_bound, g_cycle_audit, g_truncation, phi, transport_check, transport_random,
    transport_sweep,
};
use ramsey_forge::completion::{complete, cycle_has_completion, hypothesis_audit, CompletionReport, PRNG_ID};
use ramsey_forge::paramwords::{enumerate_types, minimal_envelope, monochromatic_search, parse_word, render_word};
use ramsey_forge::relstruct::io::{to_dot, StructureJson};
use ramsey_forge::relstruct::{induced_cycles, SymbolDef};
use ramsey_forge::{CompletionResult, GContext, Obstruction, ParamWord};

use crate::cli::Command;
use crate::error::{CliError, CliResult};
use crate::load;

/// What a command produced: the report body, an optional DOT rendering and
/// the exit status of a successful run (0, or 1 for an obstruction, or 4
/// for a failed audit).
pub struct Outcome {
    pub result: Value,
    pub dot: Option<String>,
    pub status: i32,
    pub seed: Option<u64>,
}

impl Outcome {
    fn ok(result: impl Serialize) -> CliResult<Self> {
        Ok(Outcome { result: to_value(result)?, dot: None, status: 0, seed: None })
    }

    fn status(mut self, status: i32) -> Self {
        self.status = status;
        self
    }

    fn dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn to_value(v: impl Serialize) -> CliResult<Value> {
    serde_json::to_value(v).map_err(|e| CliError::Core(e.into()))
}

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Complete { .. } => "complete",
        Command::Cycles { .. } => "cycles",
        Command::Envelope { .. } => "envelope",
        Command::Types { .. } => "types",
        Command::Gbuild { .. } => "gbuild",
        Command::Gaudit { .. } => "gaudit",
        Command::Phi { .. } => "phi",
        Command::Transport { .. } => "transport",
        Command::DegreeBound { .. } => "degree-bound",
        Command::HjSearch { .. } => "hj-search",
        Command::AuditSpec { .. } => "audit-spec",
        Command::Irreducibilize { .. } => "irreducibilize",
    }
}

pub fn run(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Complete { spec, input } => {
            let spec = load::spec(&spec.spec)?;
            let a = load::structure(input, Some(&spec))?;
            let r = complete(&a, &spec)?;
            let out = Outcome::ok(CompletionReport::new(&a, &r))?;
            Ok(match &r {
                CompletionResult::Completed { structure, .. } => out.dot(to_dot(structure)),
                CompletionResult::Obstructed(Obstruction::SearchExhausted) => out.status(4),
                CompletionResult::Obstructed(_) => out.status(1),
            })
        }
        Command::Cycles { spec, input, lmax } => {
            let spec = spec.as_deref().map(load::spec).transpose()?;
            let a = load::structure(input, spec.as_ref())?;
            let mut rows = Vec::new();
            let mut blocked = false;
            for c in induced_cycles(&a, *lmax)? {
                let mut row = json!({
                    "vertices": c.vertices.iter().map(|&v| a.name(v)).collect::<Vec<_>>(),
                    "length": c.len(),
                });
                if let Some(spec) = &spec {
                    let ok = cycle_has_completion(&c, spec)?;
                    blocked |= !ok;
                    row["completable"] = json!(ok);
                }
                rows.push(row);
            }
            let out = Outcome::ok(json!({ "lmax": lmax, "count": rows.len(), "cycles": rows }))?;
            Ok(if blocked { out.status(1) } else { out })
        }
        Command::Envelope { words, letters } => envelope(words, letters.as_deref()),
        Command::Types { alphabet, k, bound, rename } => {
            let cat = match enumerate_types(*alphabet, *k, *bound, *rename) {
                Ok(c) => c,
                Err(ramsey_forge::Error::CatalogCapacity { reason, partial }) => {
                    eprintln!("capacity exceeded: {reason}; reporting the partial catalogue");
                    return Ok(Outcome::ok(catalog_report(&partial))?.status(3));
                }
                Err(e) => return Err(e.into()),
            };
            Outcome::ok(catalog_report(&cat))
        }
        Command::Gbuild { spec, n } => {
            let ctx = GContext::new(load::spec(&spec.spec)?)?;
            let t = g_truncation(&ctx, *n)?;
            let words: Vec<String> = t.words.iter().map(|w| ctx.render(w)).collect();
            let out = Outcome::ok(json!({
                "n": n,
                "alphabet": ctx.letter_names(),
                "vertices": t.len(),
                "words": words,
                "structure": t.to_json(),
            }))?;
            Ok(out.dot(t.to_dot(&ctx)))
        }
        Command::Gaudit { spec, n, lmax } => {
            let ctx = GContext::new(load::spec(&spec.spec)?)?;
            let r = g_cycle_audit(&ctx, *n, *lmax)?;
            let failed = !r.failures.is_empty();
            let out = Outcome::ok(r)?;
            Ok(if failed { out.status(4) } else { out })
        }
        Command::Phi { spec, input } => {
            let spec = load::spec(&spec.spec)?;
            let k = load::structure(input, Some(&spec))?;
            let ctx = GContext::new(spec)?;
            let m = phi(&ctx, &k)?;
            let report = m.report(&ctx);
            let verified = report.verified;
            let out = Outcome::ok(report)?.dot(to_dot(&m.k_prime));
            Ok(if verified { out } else { out.status(4) })
        }
        Command::Transport { spec, n, w, bound, trials, seed } => {
            let ctx = GContext::new(load::spec(&spec.spec)?)?;
            let mut reports = Vec::new();
            match w {
                Some(text) => {
                    let w = ParamWord::parse(text, &[])?;
                    reports.push(transport_check(&ctx, &w, *n, *trials, *seed)?);
                }
                None => {
                    reports.push(transport_sweep(&ctx, *bound, *n)?);
                    if *trials > 0 {
                        reports.push(transport_random(&ctx, *trials, *seed, *n, (*bound).max(*n))?);
                    }
                }
            }
            let failed = reports.iter().any(|r| !r.violations.is_empty());
            let out = Outcome::ok(json!({ "n": n, "reports": reports }))?;
            let out = if *trials > 0 { out.seeded(*seed) } else { out };
            Ok(if failed { out.status(4) } else { out })
        }
        Command::DegreeBound { spec, input, n } => {
            let spec = load::spec(&spec.spec)?;
            let a = load::structure(input, Some(&spec))?;
            let ctx = GContext::new(spec)?;
            Outcome::ok(degree_upper_bound(&ctx, &a, *n)?)
        }
        Command::HjSearch { alphabet, k, m, colours, n } => {
            Outcome::ok(monochromatic_search(*alphabet, *k, m.unwrap_or(k + 1), *colours, *n)?)
        }
        Command::AuditSpec { spec, trials, seed, n } => {
            let spec = load::spec(&spec.spec)?;
            let mut r = hypothesis_audit(&spec, *trials, *n, *seed)?;
            // Per-trial records of passing trials are summarized by the counts.
            r.records.retain(|t| t.witness.is_some());
            let failed = r.failures > 0;
            let out = Outcome::ok(r)?.seeded(*seed);
            Ok(if failed { out.status(4) } else { out })
        }
        Command::Irreducibilize { input, symbol } => irreducibilize(input, symbol),
    }
}

fn catalog_report(cat: &ramsey_forge::TypeCatalog) -> Value {
    let names: Vec<String> = (0..cat.alphabet_size).map(ramsey_forge::paramwords::letter_name).collect();
    let types: Vec<Value> = cat
        .types
        .iter()
        .map(|t| {
            json!({
                "words": t.iter().map(|w| render_word(w, &names)).collect::<Vec<_>>(),
                "d": t.iter().map(Vec::len).max().unwrap_or(0),
            })
        })
        .collect();
    json!({
        "alphabet": names,
        "k": cat.k,
        "bound": cat.bound,
        "renamed": cat.renamed,
        "count": cat.count(),
        "counts": cat.counts,
        "max_d": cat.max_d,
        "stabilized": cat.stabilized,
        "types": types,
    })
}

fn envelope(words: &[String], letters: Option<&str>) -> CliResult<Outcome> {
    let alphabet: Vec<String> = match letters {
        Some(l) => l.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
        None => {
            let spaced = words.iter().any(|w| w.trim().contains(char::is_whitespace));
            let tokens: BTreeSet<String> = words
                .iter()
                .flat_map(|w| -> Vec<String> {
                    if spaced {
                        w.split_whitespace().map(String::from).collect()
                    } else {
                        w.trim().chars().map(String::from).collect()
                    }
                })
                .collect();
            tokens.into_iter().collect()
        }
    };
    let parsed = words.iter().map(|w| parse_word(w, &alphabet)).collect::<Result<Vec<_>, _>>()?;
    let r = minimal_envelope(&parsed)?;
    Outcome::ok(json!({
        "alphabet": alphabet,
        "words": parsed.iter().map(|w| render_word(w, &alphabet)).collect::<Vec<_>>(),
        "envelope": r.envelope.render(&alphabet),
        "d": r.d,
        "tau": r.tau.iter().map(|w| render_word(w, &alphabet)).collect::<Vec<_>>(),
    }))
}

fn irreducibilize(input: &std::path::Path, symbol: &str) -> CliResult<Outcome> {
    let a = load::structure(input, None)?;
    let mut j = StructureJson::from_structure(&a);
    match j.language.iter().find(|s| s.name == symbol) {
        Some(s) if s.arity != 2 => {
            return Err(CliError::Usage(format!("`{symbol}` is not a binary symbol")));
        }
        Some(_) => {}
        None => j.language.push(SymbolDef::binary(symbol)),
    }
    let tuples = j.relations.entry(symbol.to_string()).or_default();
    let mut added = 0;
    for (u, v) in a.non_adjacent_pairs() {
        tuples.push(vec![a.name(u).to_string(), a.name(v).to_string()]);
        tuples.push(vec![a.name(v).to_string(), a.name(u).to_string()]);
        added += 1;
    }
    let b = j.to_structure(None)?;
    Ok(Outcome::ok(json!({ "added_pairs": added, "structure": StructureJson::from_structure(&b) }))?.dot(to_dot(&b)))
}

/// The report written for every successful run; field order is fixed.
#[derive(Serialize)]
pub struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    prng: Option<&'static str>,
    seed: Option<u64>,
    status: i32,
    result: &'a Value,
}

pub fn header<'a>(command: &'a str, outcome: &'a Outcome) -> Report<'a> {
    Report {
        tool: "ramsey-forge",
        version: env!("CARGO_PKG_VERSION"),
        command,
        prng: outcome.seed.map(|_| PRNG_ID),
        seed: outcome.seed,
        status: outcome.status,
        result: &outcome.result,
    }
}

use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use plotkin_core::families::{random_code, random_pairs};
use plotkin_core::format::{
    parse_code_file_with, parse_gen_file_with, write_code_file, write_gen_file,
};
use plotkin_core::oracle::{cross_check, OracleCheck};
use plotkin_core::{
    invariants, plotkin_construct, summarize, verify_plotkin, Code, CorpusSpec, FamilySpec, Limits,
    PlotkinParams, PlotkinReport,
};
use serde::Serialize;

use crate::{Command, Output};

pub fn run(command: Command) -> Result<ExitCode> {
    let limits = Limits::from_env();
    match command {
        Command::Info { file, json } => {
            let code = load(&file, &limits)?;
            let s = summarize(&code);
            if json {
                println!("{}", serde_json::to_string(&s)?);
            } else {
                println!("{s}");
                let d = s.distance.map_or_else(|| "-".into(), |d| d.to_string());
                for (k, v) in [
                    ("n", s.n.to_string()),
                    ("size", s.size.to_string()),
                    ("distance", d),
                    ("rank", s.rank.to_string()),
                    ("ker_dim", s.ker_dim.to_string()),
                    ("linear", yes_no(s.is_linear).into()),
                    ("has_zero", yes_no(s.contains_zero).into()),
                ] {
                    println!("{k:<10}{v}");
                }
            }
        }
        Command::Plotkin {
            file_a,
            file_b,
            out,
        } => {
            let (a, b) = (load(&file_a, &limits)?, load(&file_b, &limits)?);
            let c = plotkin_construct(&a, &b)?;
            emit(&out, &write_code_file(&c))?;
        }
        Command::Kernel { file, out } => {
            let code = load(&file, &limits)?;
            let k = invariants::kernel(&code);
            if !code.contains_zero() {
                eprintln!("note: code lacks the zero word; its kernel is not a subcode");
            }
            emit(&out, &write_code_file(&k.words))?;
        }
        Command::Span {
            file,
            basis_only,
            out,
        } => {
            let code = load(&file, &limits)?;
            let basis = invariants::span_basis(&code);
            let mut text = write_gen_file(&basis);
            if !basis_only {
                match basis.enumerate(limits.max_enum_dim) {
                    Ok(span) => text.push_str(&write_code_file(&span)),
                    Err(e) => eprintln!("note: span words not listed: {e}"),
                }
            }
            emit(&out, &text)?;
        }
        Command::Verify {
            file_a,
            file_b,
            oracle,
            json,
            strict,
            bundle,
        } => {
            let (a, b) = (load(&file_a, &limits)?, load(&file_b, &limits)?);
            let mode = Mode { oracle, strict };
            return verify(&a, &b, mode, json, &bundle, &limits);
        }
        Command::Family { kind, params, out } => {
            let code = family(&kind, &params, &limits)?;
            emit(&out, &write_code_file(&code))?;
        }
        Command::Random {
            n,
            size,
            seed,
            zero,
            out,
        } => {
            let code = random_code(n, size, seed, zero)?;
            emit(&out, &write_code_file(&code))?;
        }
        Command::Corpus {
            pairs,
            seed,
            max_n,
            max_size,
            no_zero,
            oracle,
            json,
        } => {
            let spec = CorpusSpec {
                max_size,
                include_zero: !no_zero,
                ..CorpusSpec::new(pairs, seed, max_n)
            };
            return corpus(&spec, oracle, json, &limits);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Reads a code file, or a generator file when the extension is `.gen`.
fn load(path: &Path, limits: &Limits) -> Result<Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = if path.extension().is_some_and(|e| e == "gen") {
        parse_gen_file_with(&text, limits)
    } else {
        parse_code_file_with(&text, limits)
    }
    .with_context(|| path.display().to_string())?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.code)
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn family(kind: &str, params: &[String], limits: &Limits) -> Result<Code> {
    if matches!(kind, "from-generator" | "generator" | "gen") {
        let [path] = params else {
            bail!("{kind} takes one generator file");
        };
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return Ok(parse_gen_file_with(&text, limits)
            .with_context(|| path.clone())?
            .code);
    }
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    Ok(FamilySpec::parse(kind, &params)?.build(limits)?)
}

/// One JSON line per verified pair: the report's fields plus the oracle verdict.
#[derive(Serialize)]
struct JsonReport<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(flatten)]
    report: &'a PlotkinReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a OracleCheck>,
    passed: bool,
}

#[derive(Debug, Clone, Copy, Default)]
struct Mode {
    oracle: bool,
    strict: bool,
}

struct Outcome {
    report: PlotkinReport,
    oracle: Option<OracleCheck>,
    oracle_note: Option<String>,
    strict: bool,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failure().is_none()
    }

    fn report_passes(&self) -> bool {
        if self.strict {
            self.report.all_hold()
        } else {
            self.report.passes()
        }
    }

    fn failure(&self) -> Option<String> {
        if let Some(o) = &self.oracle {
            if !o.agrees_with(&self.report) {
                return Some("brute-force oracle disagrees with the fast route".into());
            }
        }
        if self.report_passes() {
            None
        } else {
            self.report.first_failure().map(str::to_owned)
        }
    }
}

fn check_pair(a: &Code, b: &Code, mode: Mode, limits: &Limits) -> Result<Outcome> {
    let report = verify_plotkin(a, b)?;
    let (check, note) = if mode.oracle {
        match cross_check(a, b, &report, limits) {
            Ok(c) => (Some(c), None),
            Err(e) => (None, Some(format!("skipped ({e})"))),
        }
    } else {
        (None, None)
    };
    Ok(Outcome {
        report,
        oracle: check,
        oracle_note: note,
        strict: mode.strict,
    })
}

fn params(p: &PlotkinParams) -> String {
    let d = p.distance.map_or_else(|| "-".into(), |d| d.to_string());
    format!(
        "({}, {}, {}) rank={} ker={}",
        p.length, p.size, d, p.rank, p.ker_dim
    )
}

fn verify(
    a: &Code,
    b: &Code,
    mode: Mode,
    json: bool,
    bundle: &Path,
    limits: &Limits,
) -> Result<ExitCode> {
    let outcome = check_pair(a, b, mode, limits)?;
    let r = &outcome.report;
    if json {
        let line = JsonReport {
            index: None,
            report: r,
            oracle: outcome.oracle.as_ref(),
            passed: outcome.passed(),
        };
        println!("{}", serde_json::to_string(&line)?);
    } else {
        println!("input A    {}", r.input_a);
        println!("input B    {}", r.input_b);
        println!("predicted  {}", params(&r.predicted));
        println!("observed   {}", params(&r.observed));
        let kernel: Vec<String> = r.kernel.iter().map(ToString::to_string).collect();
        println!("kernel     {{{}}}", kernel.join(", "));
        println!("zero in A and B: {}", yes_no(r.hypothesis_ok));
        for (name, ok) in [
            ("kernel identity", r.theorem_i_holds),
            ("span identity", r.theorem_ii_holds),
            ("kernel dim sum", r.corollary_i_holds),
            ("rank sum", r.corollary_ii_holds),
            ("parameters", r.params_hold),
        ] {
            println!("  {name:<16}{}", if ok { "ok" } else { "FAILED" });
        }
        match (&outcome.oracle, &outcome.oracle_note) {
            (Some(o), _) => println!(
                "  {:<16}{}",
                "oracle",
                if o.agrees_with(r) {
                    "agrees"
                } else {
                    "DISAGREES"
                }
            ),
            (None, Some(note)) => println!("  {:<16}{note}", "oracle"),
            (None, None) => {}
        }
        if !r.hypothesis_ok && !mode.strict {
            println!("note: an input lacks the zero word; failed checks are informational");
        }
    }

    match outcome.failure() {
        None => Ok(ExitCode::SUCCESS),
        Some(clause) => {
            eprintln!("FAIL: {clause}");
            write_bundle(bundle, a, b, &outcome)?;
            eprintln!("counterexample written to {}", bundle.display());
            Ok(ExitCode::from(1))
        }
    }
}

fn write_bundle(dir: &Path, a: &Code, b: &Code, outcome: &Outcome) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    fs::write(dir.join("a.code"), write_code_file(a))?;
    fs::write(dir.join("b.code"), write_code_file(b))?;
    fs::write(
        dir.join("constructed.code"),
        write_code_file(&plotkin_construct(a, b)?),
    )?;
    let json = JsonReport {
        index: None,
        report: &outcome.report,
        oracle: outcome.oracle.as_ref(),
        passed: false,
    };
    fs::write(
        dir.join("report.json"),
        serde_json::to_string_pretty(&json)?,
    )?;
    Ok(())
}

fn corpus(spec: &CorpusSpec, oracle: bool, json: bool, limits: &Limits) -> Result<ExitCode> {
    let pairs = random_pairs(spec)?;
    let mut failed = Vec::new();
    let mut outside = 0;
    if !json {
        println!(
            "{:>5} {:>3} {:>4} {:>4}  {:<28} status",
            "pair", "n", "|A|", "|B|", "observed"
        );
    }
    for (i, (a, b)) in pairs.iter().enumerate() {
        let mode = Mode {
            oracle,
            strict: false,
        };
        let outcome = check_pair(a, b, mode, limits)?;
        let r = &outcome.report;
        if !r.hypothesis_ok {
            outside += 1;
        }
        if !outcome.passed() {
            failed.push(i);
        }
        if json {
            let line = JsonReport {
                index: Some(i),
                report: r,
                oracle: outcome.oracle.as_ref(),
                passed: outcome.passed(),
            };
            println!("{}", serde_json::to_string(&line)?);
        } else {
            let status = match outcome.failure() {
                Some(clause) => format!("FAIL: {clause}"),
                None if !r.all_hold() => "informational (no zero word)".into(),
                None if outcome.oracle.is_some() => "ok, oracle agrees".into(),
                None => "ok".into(),
            };
            println!(
                "{:>5} {:>3} {:>4} {:>4}  {:<28} {}",
                i,
                r.n_in,
                a.len(),
                b.len(),
                params(&r.observed),
                status
            );
        }
    }
    if !json {
        println!(
            "{} pairs (seed {}): {} passed, {} failed, {} outside the zero-word hypothesis",
            pairs.len(),
            spec.seed,
            pairs.len() - failed.len(),
            failed.len(),
            outside
        );
    }
    Ok(if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

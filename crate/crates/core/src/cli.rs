//! The `neucode` command line.
//!
//! [`run_from`] does all the work and returns the text it would print, so
//! tests can drive the tool without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{cone_minus_apex, AnalysisConfig, Analyzer};
use crate::code::Code;
use crate::collapse::{free_pairs, Engine};
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::face::Face;
use crate::format::{emit_code, emit_complex, parse_code, parse_complex};
use crate::homology::{reduced_betti, DEFAULT_PRIMES};
use crate::instances;
use crate::realization::{good_cover_check, realized_code_from_closures, realized_code_from_u};
use crate::report::{describe_evidence, describe_status, render_text, ClassifyReport, Timings, SCHEMA_VERSION};
use crate::status::{TriStatus, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Debug, Parser)]
#[command(name = "neucode", version, about = "Local obstructions for combinatorial neural codes")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Node limit for each exhaustive collapse search.
    #[arg(long, global = true, default_value_t = crate::collapse::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Primes used for homology, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = DEFAULT_PRIMES.to_vec())]
    pub primes: Vec<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Single-threaded, stable certificates, no timings.
    #[arg(long, global = true)]
    pub deterministic: bool,
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit 1 on a No verdict and 2 on an Unknown one.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Step family for collapse searches.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Strict)]
    pub engine: EngineArg,
    /// Ambient size, overriding any `n = ...` line in the input.
    #[arg(short = 'n', long = "neurons", global = true)]
    pub neurons: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Strict,
    Collapse,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Strict => Engine::Strict,
            EngineArg::Collapse => Engine::Collapse,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: locally good, locally great, mandatory codewords.
    Classify { file: PathBuf },
    /// Mandatory codewords among the facet intersections.
    Mandatory { file: PathBuf },
    /// The link of one face of the code's complex and its contractibility.
    Links {
        file: PathBuf,
        /// Face such as `24`, `2,4` or `{2,4}`.
        #[arg(long)]
        face: String,
    },
    /// Collapsibility of a complex given by facets.
    Collapse { file: PathBuf },
    /// Reduced Betti numbers of a complex given by facets.
    Homology { file: PathBuf },
    /// Compare a code with the code read off its arrangement realization.
    RealizeVerify {
        file: Option<PathBuf>,
        /// Check every code on N neurons (N <= 4) instead of a file.
        #[arg(long, value_name = "N", conflicts_with = "file")]
        exhaustive: Option<u32>,
        /// Also read off the closed sets.
        #[arg(long)]
        closed: bool,
    },
    /// Good-cover check on the arrangement realization.
    Goodcover { file: PathBuf },
    /// Print a named instance in the file format.
    Generate {
        #[arg(value_enum)]
        name: Instance,
        /// `N` for c-n, a complex file for cone-minus-apex.
        arg: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Instance {
    IntroCode,
    Counterexample,
    #[value(name = "c-n")]
    CN,
    ConeMinusApex,
    DunceHat,
    Rp2,
    ConnectedNotGoodcover,
    LocallyGoodExample,
    NotLocallyGoodExample,
    ClosedVariant,
    TriangleBoundary,
    TetrahedronBoundary,
}

/// What the process should print and return.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(exit_code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            exit_code,
            stdout: String::new(),
            stderr: format!("neucode: {message}\n"),
        }
    }
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn failure_outcome(f: Failure) -> Outcome {
    match f {
        Failure::Io(p, e) => Outcome::failure(EXIT_NO_INPUT, format!("{}: {e}", p.display())),
        Failure::Usage(m) => Outcome::failure(EXIT_USAGE, m),
        Failure::Lib(e @ Error::Inconsistent(_)) => Outcome::failure(EXIT_SOFTWARE, e),
        Failure::Lib(e) => Outcome::failure(EXIT_DATA, e),
    }
}

/// Parses arguments (the first item is the program name) and runs.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    exit_code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut cx = Context::new(&cli.global);
    match cx.dispatch(&cli.command) {
        Ok(verdicts) => Outcome {
            exit_code: if cli.global.strict { strict_exit(&verdicts) } else { EXIT_OK },
            stdout: cx.out,
            stderr: String::new(),
        },
        Err(f) => failure_outcome(f),
    }
}

/// A `No` outranks an `Unknown`: it is a definite refutation.
pub fn strict_exit(verdicts: &[Verdict]) -> i32 {
    if verdicts.contains(&Verdict::No) {
        EXIT_NO
    } else if verdicts.contains(&Verdict::Unknown) {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

struct Context<'a> {
    global: &'a GlobalArgs,
    out: String,
    started: Instant,
}

fn read(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::Io(path.to_path_buf(), e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Parses a face argument such as `24`, `2,4`, `{2 4}` or `0`.
pub fn parse_face_arg(text: &str, n: u32) -> crate::error::Result<Face> {
    let code = parse_code(&format!("n = {n}\n{text}\n"), None)?;
    Ok(*code.words().iter().next().expect("one word"))
}

impl<'a> Context<'a> {
    fn new(global: &'a GlobalArgs) -> Self {
        Context {
            global,
            out: String::new(),
            started: Instant::now(),
        }
    }

    fn analyzer(&self) -> Result<Analyzer, Failure> {
        Ok(Analyzer::new(AnalysisConfig {
            budget: self.global.budget,
            primes: self.global.primes.clone(),
            seed: self.global.seed,
            deterministic: self.global.deterministic,
            engine: self.global.engine.into(),
            ..AnalysisConfig::default()
        })?)
    }

    fn code(&self, path: &Path) -> Result<Code, Failure> {
        Ok(parse_code(&read(path)?, self.global.neurons)?)
    }

    fn complex(&self, path: &Path) -> Result<SimplicialComplex, Failure> {
        Ok(parse_complex(&read(path)?, self.global.neurons)?)
    }

    fn timings(&self) -> Option<Timings> {
        (!self.global.deterministic).then(|| Timings {
            total_ms: self.started.elapsed().as_secs_f64() * 1e3,
        })
    }

    fn dispatch(&mut self, command: &Command) -> Result<Vec<Verdict>, Failure> {
        match command {
            Command::Classify { file } => self.classify(file),
            Command::Mandatory { file } => self.mandatory(file),
            Command::Links { file, face } => self.links(file, face),
            Command::Collapse { file } => self.collapse(file),
            Command::Homology { file } => self.homology(file),
            Command::RealizeVerify {
                file,
                exhaustive,
                closed,
            } => self.realize_verify(file.as_deref(), *exhaustive, *closed),
            Command::Goodcover { file } => self.goodcover(file),
            Command::Generate { name, arg, output } => {
                self.generate(*name, arg.as_deref(), output.as_deref())
            }
        }
    }

    fn classify(&mut self, file: &Path) -> Result<Vec<Verdict>, Failure> {
        let code = self.code(file)?;
        let report = self.analyzer()?.classify(&code)?;
        let report = ClassifyReport::new(&report, self.timings());
        if self.global.json {
            self.out.push_str(&report.to_json());
            self.out.push('\n');
        } else {
            self.out.push_str(&render_text(&report));
        }
        Ok(vec![report.locally_good.value, report.locally_great.value])
    }

    fn mandatory(&mut self, file: &Path) -> Result<Vec<Verdict>, Failure> {
        let code = self.code(file)?;
        let m = self.analyzer()?.mandatory_codewords(&code)?;
        let missing: Vec<Face> = m.found.iter().copied().filter(|f| !code.contains(*f)).collect();
        if self.global.json {
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "mandatory",
                "found": m.found,
                "unknown": m.unknown,
                "missing_from_code": missing,
            })));
        } else {
            let list = |v: &[Face]| v.iter().map(Face::to_string).collect::<Vec<_>>().join(", ");
            let _ = writeln!(self.out, "mandatory: {}", list(&m.found));
            let _ = writeln!(self.out, "undecided: {}", list(&m.unknown));
            let _ = writeln!(self.out, "mandatory but missing from the code: {}", list(&missing));
        }
        let mut verdicts = Vec::new();
        if !missing.is_empty() {
            verdicts.push(Verdict::No);
        }
        if !m.unknown.is_empty() {
            verdicts.push(Verdict::Unknown);
        }
        Ok(verdicts)
    }

    fn links(&mut self, file: &Path, face: &str) -> Result<Vec<Verdict>, Failure> {
        let code = self.code(file)?;
        let sigma = parse_face_arg(face, code.ambient_n())?;
        let link = code.closure().link(sigma)?;
        let analyzer = self.analyzer()?;
        let contractible = analyzer.contractibility_status(&link)?;
        let collapsible = analyzer.collapsibility_status(&link)?;
        if self.global.json {
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "links",
                "face": sigma,
                "in_code": code.contains(sigma),
                "link_facets": link.facets(),
                "contractible": contractible,
                "collapsible": collapsible,
            })));
        } else {
            let _ = writeln!(
                self.out,
                "link of {sigma} ({}): {link}",
                if code.contains(sigma) { "a codeword" } else { "missing from the code" }
            );
            self.out.push_str(&describe_status("contractible", &contractible));
            self.out.push_str(&describe_status("collapsible", &collapsible));
        }
        Ok(vec![contractible.value])
    }

    fn collapse(&mut self, file: &Path) -> Result<Vec<Verdict>, Failure> {
        let complex = self.complex(file)?;
        let analyzer = self.analyzer()?;
        let outcome = analyzer.collapser().is_collapsible(&complex)?;
        let legal = free_pairs(&complex, outcome.mode).len();
        if self.global.json {
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "collapse",
                "complex": complex.facets(),
                "legal_first_steps": legal,
                "outcome": outcome,
            })));
        } else {
            let _ = writeln!(self.out, "complex: {complex}");
            let _ = writeln!(self.out, "legal first steps: {legal}");
            let _ = writeln!(self.out, "collapsible: {}", outcome.status);
            if let Some(steps) = &outcome.certificate {
                for (i, s) in steps.iter().enumerate() {
                    let _ = writeln!(self.out, "  {:>3}. {s}", i + 1);
                }
            }
            let _ = writeln!(
                self.out,
                "nodes explored: {}{}",
                outcome.nodes_explored,
                if outcome.budget_exhausted { " (budget exhausted)" } else { "" }
            );
        }
        Ok(vec![outcome.status])
    }

    fn homology(&mut self, file: &Path) -> Result<Vec<Verdict>, Failure> {
        let complex = self.complex(file)?;
        let mut bettis = Vec::new();
        for &p in &self.global.primes {
            bettis.push(reduced_betti(&complex, p)?);
        }
        if self.global.json {
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "homology",
                "f_vector": complex.f_vector(),
                "betti": bettis,
            })));
        } else {
            let _ = writeln!(self.out, "f-vector: {:?}", complex.f_vector());
            for b in &bettis {
                let mut line = describe_evidence(&crate::status::Evidence::Betti(b.clone()));
                if b.reduced_betti_minus_one > 0 {
                    line.push_str(" (the complex {∅})");
                }
                let _ = writeln!(self.out, "{line}");
            }
        }
        Ok(Vec::new())
    }

    fn realize_verify(
        &mut self,
        file: Option<&Path>,
        exhaustive: Option<u32>,
        closed: bool,
    ) -> Result<Vec<Verdict>, Failure> {
        let codes: Vec<Code> = match (file, exhaustive) {
            (Some(f), None) => vec![self.code(f)?],
            (None, Some(n)) if (1..=4).contains(&n) => instances::all_codes(n).collect(),
            (None, Some(n)) => return Err(Failure::Usage(format!("--exhaustive takes 1..=4, got {n}"))),
            _ => return Err(Failure::Usage("give a code file or --exhaustive N".into())),
        };
        let mut rows = Vec::with_capacity(codes.len());
        let mut mismatches = 0usize;
        for code in &codes {
            let expected = code.without_empty();
            let realized = realized_code_from_u(code)?;
            let matched = realized == expected;
            mismatches += usize::from(!matched);
            let closed_words = if closed {
                let c = realized_code_from_closures(code)?;
                Some(c.words().difference(expected.words()).copied().collect::<Vec<Face>>())
            } else {
                None
            };
            rows.push((code, realized, matched, closed_words));
        }
        if self.global.json {
            let results: Vec<_> = rows
                .iter()
                .map(|(code, realized, matched, extra)| {
                    let mut v = json!({
                        "code": code.nonempty_words(),
                        "realized": realized.nonempty_words(),
                        "match": matched,
                    });
                    if let Some(extra) = extra {
                        v["closed_extra_words"] = json!(extra);
                    }
                    v
                })
                .collect();
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "realize-verify",
                "total": rows.len(),
                "mismatches": mismatches,
                "results": results,
            })));
        } else {
            for (code, realized, matched, extra) in &rows {
                if *matched {
                    let _ = writeln!(self.out, "{code}: match");
                } else {
                    let _ = writeln!(self.out, "{code}: MISMATCH, realized {realized}");
                }
                if let Some(extra) = extra {
                    let words: Vec<String> = extra.iter().map(Face::to_string).collect();
                    let _ = writeln!(
                        self.out,
                        "  closed sets add: {}",
                        if words.is_empty() { "nothing".to_string() } else { words.join(", ") }
                    );
                }
            }
            let _ = writeln!(self.out, "{} of {} match", rows.len() - mismatches, rows.len());
        }
        Ok(if mismatches > 0 { vec![Verdict::No] } else { Vec::new() })
    }

    fn goodcover(&mut self, file: &Path) -> Result<Vec<Verdict>, Failure> {
        let code = self.code(file)?;
        let status: TriStatus = good_cover_check(&code, &self.analyzer()?)?;
        if self.global.json {
            self.out.push_str(&pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "goodcover",
                "good_cover": status,
            })));
        } else {
            self.out.push_str(&describe_status("good cover", &status));
        }
        Ok(vec![status.value])
    }

    fn generate(
        &mut self,
        name: Instance,
        arg: Option<&str>,
        output: Option<&Path>,
    ) -> Result<Vec<Verdict>, Failure> {
        let text = match name {
            Instance::IntroCode => emit_code(&instances::intro_code()),
            Instance::Counterexample => emit_code(&instances::counterexample()),
            Instance::LocallyGoodExample => emit_code(&instances::locally_good_example()),
            Instance::NotLocallyGoodExample => emit_code(&instances::not_locally_good_example()),
            Instance::ConnectedNotGoodcover => emit_code(&instances::connected_not_goodcover()),
            Instance::ClosedVariant => emit_code(&instances::closed_variant_code()),
            Instance::CN => {
                let n: u32 = arg
                    .ok_or_else(|| Failure::Usage("c-n needs N".into()))?
                    .parse()
                    .map_err(|_| Failure::Usage("c-n needs an integer N".into()))?;
                if !(1..=16).contains(&n) {
                    return Err(Failure::Usage(format!("c-n takes 1..=16, got {n}")));
                }
                emit_code(&instances::proper_subsets_code(n))
            }
            Instance::ConeMinusApex => {
                let path = arg.ok_or_else(|| Failure::Usage("cone-minus-apex needs a complex file".into()))?;
                let complex = self.complex(Path::new(path))?;
                emit_code(&cone_minus_apex(&complex)?.0)
            }
            Instance::DunceHat => emit_complex(&instances::dunce_hat()),
            Instance::Rp2 => emit_complex(&instances::rp2()),
            Instance::TriangleBoundary => emit_complex(&instances::triangle_boundary()),
            Instance::TetrahedronBoundary => emit_complex(&instances::tetrahedron_boundary()),
        };
        match output {
            Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))?,
            None => self.out.push_str(&text),
        }
        Ok(Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_from(std::iter::once("neucode").chain(args.iter().copied()))
    }

    #[test]
    fn generate_and_classify() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.code");
        let p = path.to_str().unwrap();
        assert_eq!(run(&["generate", "counterexample", "-o", p]).exit_code, 0);
        let out = run(&["--strict", "classify", p]);
        assert_eq!(out.exit_code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("locally good: Yes"));
        assert!(out.stdout.contains("locally great: Yes"));
    }

    #[test]
    fn strict_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.code");
        std::fs::write(&path, "124\n134\n234\n14\n24\n34\n0\n").unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(run(&["classify", p]).exit_code, EXIT_OK);
        let out = run(&["--strict", "--json", "classify", p]);
        assert_eq!(out.exit_code, EXIT_NO);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["locally_good"]["witness"], json!([4]));
        assert_eq!(strict_exit(&[Verdict::Unknown, Verdict::Yes]), EXIT_UNKNOWN);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(run(&["classify"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["classify", "/nonexistent/x.code"]).exit_code, EXIT_NO_INPUT);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.code");
        std::fs::write(&path, "1100\n1 2\n").unwrap();
        let out = run(&["classify", path.to_str().unwrap()]);
        assert_eq!(out.exit_code, EXIT_DATA);
        assert!(out.stderr.contains("line 2"), "{}", out.stderr);
        assert_eq!(run(&["--primes", "4", "generate", "rp2"]).exit_code, EXIT_OK);
    }

    #[test]
    fn face_arguments() {
        assert_eq!(parse_face_arg("24", 5).unwrap(), Face::digits("24"));
        assert_eq!(parse_face_arg("{2,4}", 5).unwrap(), Face::digits("24"));
        assert_eq!(parse_face_arg("0", 5).unwrap(), Face::EMPTY);
        assert!(parse_face_arg("9", 5).is_err());
    }
}

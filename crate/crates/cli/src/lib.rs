//! Batch front end: W-sets, Schubert polynomials, product formulas,
//! equivariant classes, Schubert expansions and verification reports.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubfact::cohomology::{
    class_orthogonal_equivariant, class_symplectic_equivariant, rhs_orthogonal_factored, rhs_symplectic_factored,
    LinearProduct,
};
use schubfact::schubert::{expand_in_schubert_basis, SchubertExpansion};
use schubfact::verifier::{self, IdentityReport};
use schubfact::{Composition, Error, Family, Permutation, Polynomial, SchubertCache, WSet};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "schubfact", version, about = "Schubert polynomials, W-sets and factored orbit classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest flag size accepted.
    #[arg(long = "max-n", default_value_t = 9, global = true)]
    pub max_n: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Composition, comma-separated (e.g. 3,4).
    #[arg(long, value_parser = parse_composition)]
    pub mu: Composition,
    /// orthogonal (o) or symplectic (sp).
    #[arg(long, default_value = "orthogonal", value_parser = parse_family)]
    pub family: Family,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the W-set of a composition.
    Wset {
        #[command(flatten)]
        target: Target,
        /// Emit a DOT graph with one isolated vertex per member.
        #[arg(long)]
        dot: bool,
    },
    /// Print a Schubert polynomial.
    Schubert {
        /// Permutation in one-line notation.
        #[arg(long)]
        perm: String,
        /// Expected size of the permutation.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the product-of-linear-forms side of the identity.
    Formula {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        expand: bool,
    },
    /// Print the torus-equivariant class.
    Equivariant {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        expand: bool,
        /// Also run the localization and specialization checks.
        #[arg(long)]
        check: bool,
    },
    /// Expand a polynomial in the Schubert basis of S_n: either the product
    /// formula of --mu/--family or an explicit --poly with --n.
    Expand {
        #[arg(long, value_parser = parse_composition, conflicts_with = "poly")]
        mu: Option<Composition>,
        #[arg(long, default_value = "orthogonal", value_parser = parse_family)]
        family: Family,
        #[arg(long, requires = "n")]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Verify sum of Schubert polynomials = product for one composition.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Include wall-clock milliseconds in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Verify every composition of n.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "orthogonal", value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        timing: bool,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn guard(n: usize, max_n: usize) -> Result<(), Failure> {
    if n > max_n {
        return Err(Failure::Usage(format!("size {n} exceeds --max-n {max_n}")));
    }
    Ok(())
}

fn check_target(target: &Target, max_n: usize) -> Result<(), Failure> {
    guard(target.mu.total(), max_n)?;
    if target.family == Family::Symplectic && !target.mu.all_even() {
        return Err(Error::OddPart(target.mu.parts().to_vec()).into());
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization is infallible")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let cache = SchubertCache::global();
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Wset { target, dot } => {
            check_target(target, cli.max_n)?;
            let wset = WSet::build(target.family, &target.mu)?;
            if *dot {
                writeln!(out, "graph wset {{")?;
                writeln!(out, "  label=\"{} {}\";", target.family, target.mu)?;
                for w in wset.members() {
                    writeln!(out, "  \"{w}\";")?;
                }
                writeln!(out, "}}")?;
            } else if json {
                writeln!(out, "{}", to_json(&wset))?;
            } else {
                let words: Vec<String> = wset.members().iter().map(ToString::to_string).collect();
                writeln!(out, "{}", words.join(" "))?;
            }
        }
        Command::Schubert { perm, n } => {
            let w: Permutation = perm.parse()?;
            if let Some(n) = n {
                if *n != w.size() {
                    return Err(Error::SizeMismatch { left: *n, right: w.size() }.into());
                }
            }
            guard(w.size(), cli.max_n)?;
            let poly = cache.get(&w);
            if json {
                writeln!(out, "{}", poly.to_json())?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::Formula { target, expand } => {
            check_target(target, cli.max_n)?;
            let product = match target.family {
                Family::Orthogonal => rhs_orthogonal_factored(&target.mu),
                Family::Symplectic => rhs_symplectic_factored(&target.mu)?,
            };
            write_product(out, target, &product, *expand, json)?;
        }
        Command::Equivariant { target, expand, check } => {
            check_target(target, cli.max_n)?;
            let product = match target.family {
                Family::Orthogonal => class_orthogonal_equivariant(&target.mu),
                Family::Symplectic => class_symplectic_equivariant(&target.mu)?,
            };
            if !*check {
                write_product(out, target, &product, *expand, json)?;
                return Ok(EXIT_OK);
            }
            let report = verifier::verify_equivariant_suite(&target.mu, target.family)?.without_timing();
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write_product(out, target, &product, *expand, false)?;
                write_report(out, "equivariant", &report)?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Expand { mu, family, poly, n } => {
            let expansion = match (mu, poly) {
                (Some(mu), None) => {
                    let target = Target { mu: mu.clone(), family: *family };
                    check_target(&target, cli.max_n)?;
                    let rhs = match family {
                        Family::Orthogonal => rhs_orthogonal_factored(mu),
                        Family::Symplectic => rhs_symplectic_factored(mu)?,
                    };
                    let f = rhs.expand().reembed(&cache.space(mu.total()))?;
                    expand_in_schubert_basis(&f, mu.total(), cache)?
                }
                (None, Some(text)) => {
                    let n = n.expect("clap enforces --n with --poly");
                    guard(n, cli.max_n)?;
                    let f = Polynomial::parse(&cache.space(n), text)?;
                    expand_in_schubert_basis(&f, n, cache)?
                }
                _ => return Err(Failure::Usage("expand needs --mu or --poly".into())),
            };
            write_expansion(out, &expansion, json)?;
        }
        Command::Verify { target, timing } => {
            check_target(target, cli.max_n)?;
            let mut report = verifier::verify_identity(&target.mu, target.family, cache)?;
            if !*timing {
                report = report.without_timing();
            }
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write_report(out, "verify", &report)?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Sweep { n, family, timing } => {
            guard(*n, cli.max_n)?;
            let mut reports = verifier::sweep(*n, *family, cache)?;
            if !*timing {
                reports = reports.into_iter().map(IdentityReport::without_timing).collect();
            }
            let summary = verifier::summary(&reports);
            if json {
                writeln!(out, "{}", to_json(&json!({ "reports": reports, "summary": summary })))?;
            } else {
                for r in &reports {
                    let ms = r.ms.map(|ms| format!(" ({ms} ms)")).unwrap_or_default();
                    writeln!(out, "{} {}: {}{ms}", r.family, r.mu, verdict_word(r))?;
                }
                writeln!(out, "{} of {} passed", summary.passed, summary.total)?;
            }
            return Ok(if summary.failed.is_empty() { EXIT_OK } else { EXIT_FAIL });
        }
    }
    Ok(EXIT_OK)
}

fn verdict_word(r: &IdentityReport) -> &'static str {
    if r.passed() {
        "pass"
    } else {
        "fail"
    }
}

fn write_product(
    out: &mut dyn Write,
    target: &Target,
    product: &LinearProduct,
    expand: bool,
    json: bool,
) -> std::io::Result<()> {
    if json {
        let poly = product.expand();
        let value = json!({
            "family": target.family,
            "mu": target.mu,
            "factored": product.to_string(),
            "polynomial": poly,
        });
        writeln!(out, "{}", to_json(&value))
    } else if expand {
        writeln!(out, "{}", product.expand())
    } else {
        writeln!(out, "{product}")
    }
}

fn write_expansion(out: &mut dyn Write, e: &SchubertExpansion, json: bool) -> std::io::Result<()> {
    if json {
        return writeln!(out, "{}", to_json(e));
    }
    if e.is_empty() {
        return writeln!(out, "0");
    }
    for (w, c) in e.iter() {
        writeln!(out, "{c} S_{w}")?;
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, kind: &str, r: &IdentityReport) -> std::io::Result<()> {
    writeln!(out, "{kind} {} {}: {}", r.family, r.mu, verdict_word(r))?;
    writeln!(out, "  degree {}, support {}", r.degree, r.support)?;
    for c in &r.checks {
        let mark = if c.passed { "ok" } else { "FAIL" };
        writeln!(out, "  [{mark}] {}: {}", c.name, c.detail)?;
    }
    if let Some(w) = &r.witness {
        writeln!(out, "  witness {}: lhs {}, rhs {}", w.monomial, w.lhs, w.rhs)?;
    }
    for flag in &r.flags {
        writeln!(out, "  note: {flag}")?;
    }
    if let Some(ms) = r.ms {
        writeln!(out, "  {ms} ms")?;
    }
    Ok(())
}

//! The `qforms` command line. [`run`] parses an argument vector and returns
//! the exit code with everything that would be printed, so it can be tested
//! without spawning a process.

use crate::arith::seq::{character, ArithSeq};
use crate::arith::{
    a_nu, a_nu_closed, c_nu, h_a, lambda_nu, liouville, moebius, mu_nu, mu_star_nu, sigma_nu, totient, x_nu, y_nu,
    y_nu_closed,
};
use crate::identities::{self, IdentityReport};
use crate::rational::{rat, rational_json, Rational};
use crate::repcount::{brute_force_count, d3_fn, r2_jacobi, r3_signed, r5, r_plus3, s_nu_fn, sigma_star, FormSpec};
use crate::residues::{self, LemmaOutcome};
use crate::series::{lambert, product_expand, theta_series, LaurentSeries};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write as _;

const SERIES_HELP: &str = "\
Series names:
  theta2         Σ_{n∈ℤ} q^{n²+n}, θ₂ without its q^{1/4} prefactor
  theta3         Σ_{n∈ℤ} q^{n²}
  theta4         Σ_{n∈ℤ} (−1)ⁿ q^{n²}
  phi_nu         Σ_{n≥1} q^{n^ν} (set ν with --nu)
  partition      ∏ 1/(1−qⁿ)
  eta            ∏ (1−qⁿ), without the q^{1/24} prefactor
  product:<chi>  ∏ (1−qⁿ)^{χ(n)}, e.g. product:jacobi:5
  lambert:<chi>  Σ χ(n) qⁿ/(1−qⁿ), e.g. lambert:lambda:3
Characters: one, const:<r>, mu, abs_mu, liouville, id, alt, jacobi:<k>,
class:<r>:<m>, square, lambda:<ν>, mu_nu:<ν>, mu_star:<ν>.";

const TABLE_HELP: &str = "\
Functions: mu, liouville, lambda, mu_nu, mu_star, x_nu, c_nu, y_nu, y_nu_closed,
a_nu, a_nu_closed, sigma (σ_ν), h (Σ_{d|n} d^ν μ(n/d)), totient, chi, r2,
r3_plus, r3, r5, d3, sigma_star (σ*_ν), s_nu.
--chi selects χ for chi, y_nu, y_nu_closed, a_nu and a_nu_closed.";

#[derive(Parser, Debug)]
#[command(name = "qforms", version, about = "Exact q-series, representation counts and product identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of a named series.
    #[command(after_help = SERIES_HELP)]
    Coeffs {
        #[arg(long)]
        series: String,
        /// Exponents below this bound are printed.
        #[arg(long, default_value_t = 48)]
        order: i64,
        #[arg(long, default_value_t = 2)]
        nu: u32,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate an arithmetic function.
    #[command(after_help = TABLE_HELP)]
    Table {
        #[arg(long = "fn")]
        func: String,
        #[arg(long, default_value_t = 2)]
        nu: i32,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, default_value_t = 48)]
        to: u64,
        #[arg(long, default_value = "one")]
        chi: String,
        #[arg(long)]
        json: bool,
    },
    /// Count representations of n by a form, by enumeration.
    Rep {
        /// A form such as "x^2+y^2", "x^3+2*y^3+1" or "x^2*y^3".
        #[arg(long)]
        form: String,
        #[arg(long)]
        n: i64,
        /// Domains such as x=Z,y=N1 (N1 positive, N0 nonnegative); default Z.
        #[arg(long, default_value = "")]
        domain: String,
        #[arg(long)]
        witnesses: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check one catalog identity coefficientwise.
    Verify {
        #[arg(long)]
        id: String,
        /// Parameter override, repeatable: --param nu=3.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Defaults to the entry's own order.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Check every catalog identity, or those whose id starts with --filter.
    Suite {
        #[arg(long)]
        filter: Option<String>,
        /// Defaults to each entry's own order.
        #[arg(long)]
        order: Option<i64>,
        /// List the catalog instead of running it.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Quadratic residues and the binary-form classification.
    Residues {
        #[command(subcommand)]
        command: ResidueCommand,
    },
}

#[derive(Subcommand, Debug)]
enum ResidueCommand {
    /// Split 1..t by the symbol (−t|n) and by solvability of x² + ty² = n.
    Classify {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        json: bool,
    },
    /// Count x in [0, n) with x² ≡ a (mod n).
    Res {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Count solutions of x² + py² ≡ 0 (mod q) with y ≠ 0 against 2c(p,q)(q−1).
    Th75(PrimePair),
    /// Search ax² + by² = n when (−ab|n) = −1.
    Lemma {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct PrimePair {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    json: bool,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Runs the command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Coeffs { series, order, nu, json } => coeffs(&series, order, nu, json),
        Command::Table { func, nu, from, to, chi, json } => table(&func, nu, from, to, &chi, json),
        Command::Rep { form, n, domain, witnesses, json } => rep(&form, n, &domain, witnesses, json),
        Command::Verify { id, params, order, json } => verify(&id, &params, order, json),
        Command::Suite { filter, order, list, json } => {
            if list {
                list_catalog(filter.as_deref(), json)
            } else {
                suite(filter.as_deref(), order, json)
            }
        }
        Command::Residues { command } => residue_command(command),
    }
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn named_series(name: &str, order: i64, nu: u32) -> Result<LaurentSeries, String> {
    let chi = |id: &str| character(id).map_err(|e| e.to_string());
    let series = match name {
        "theta2" => theta_series(&rat(1), &rat(1), false, order),
        "theta3" => theta_series(&rat(1), &rat(0), false, order),
        "theta4" => theta_series(&rat(1), &rat(0), true, order),
        "phi_nu" => {
            if nu < 1 {
                return Err("phi_nu needs --nu >= 1".into());
            }
            let powers = ArithSeq::new("powers", move |n| {
                let hit = n >= 1 && x_nu(n as u64, nu) == 1;
                rat(i64::from(hit))
            });
            LaurentSeries::from_fn(0, order.max(1), |e| powers.at(e))
        }
        "partition" => Ok(product_expand(&ArithSeq::constant(rat(-1)), order)),
        "eta" => Ok(product_expand(&ArithSeq::constant(rat(1)), order)),
        _ => {
            if let Some(id) = name.strip_prefix("product:") {
                Ok(product_expand(&chi(id)?, order))
            } else if let Some(id) = name.strip_prefix("lambert:") {
                Ok(lambert(&chi(id)?, order))
            } else {
                return Err(format!("unknown series `{name}`; see `qforms coeffs --help`"));
            }
        }
    };
    series.map_err(|e| e.to_string())
}

fn coeffs(name: &str, order: i64, nu: u32, json: bool) -> Outcome {
    if order < 1 {
        return Outcome::usage("--order must be at least 1");
    }
    let s = match named_series(name, order, nu) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    if json {
        let terms: Vec<Value> =
            s.terms().map(|(e, c)| json!({"exp": e, "value": rational_json(c)})).collect();
        let window = json!([s.offset().min(0), s.prec()]);
        Outcome::ok(json_line(&json!({"series": name, "order": order, "window": window, "terms": terms})))
    } else {
        Outcome::ok(format!("{s}\n"))
    }
}

fn table_value(func: &str, n: u64, nu: i32, chi: &ArithSeq) -> Result<Rational, String> {
    let unu = || u32::try_from(nu).map_err(|_| format!("{func} needs --nu >= 0"));
    let power_nu = || {
        let v = unu()?;
        if v < 2 {
            return Err(format!("{func} needs --nu >= 2"));
        }
        Ok(v)
    };
    let int = |v: i64| Ok(rat(v));
    match func {
        "mu" => int(moebius(n)),
        "liouville" => int(liouville(n)),
        "lambda" => int(lambda_nu(n, power_nu()?)),
        "mu_nu" => int(mu_nu(n, power_nu()?)),
        "mu_star" => int(mu_star_nu(n, power_nu()?)),
        "x_nu" => int(i64::from(x_nu(n, unu()?.max(1)))),
        "c_nu" => Ok(c_nu(n, power_nu()?)),
        "y_nu" => Ok(y_nu(n, power_nu()?, chi)),
        "y_nu_closed" => Ok(y_nu_closed(n, power_nu()?, chi)),
        "a_nu" => Ok(a_nu(n, power_nu()?, chi)),
        "a_nu_closed" => Ok(a_nu_closed(n, power_nu()?, chi)),
        "sigma" => Ok(sigma_nu(n, nu)),
        "h" => Ok(h_a(n, nu)),
        "totient" => int(totient(n) as i64),
        "chi" => Ok(chi.at(n as i64)),
        "r2" => int(r2_jacobi(n) as i64),
        "r3_plus" => int(r_plus3(n) as i64),
        "r3" => int(r3_signed(n) as i64),
        "r5" => int(r5(n) as i64),
        "d3" => int(d3_fn(n) as i64),
        "sigma_star" => Ok(sigma_star(n, nu)),
        "s_nu" => Ok(Rational::from_integer(s_nu_fn(n, unu()?))),
        _ => Err(format!("unknown function `{func}`; see `qforms table --help`")),
    }
}

fn table(func: &str, nu: i32, from: u64, to: u64, chi_id: &str, json: bool) -> Outcome {
    if from < 1 || to < from {
        return Outcome::usage("need 1 <= --from <= --to");
    }
    let chi = match character(chi_id) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let mut rows = Vec::new();
    for n in from..=to {
        match table_value(func, n, nu, &chi) {
            Ok(v) => rows.push((n, v)),
            Err(e) => return Outcome::usage(e),
        }
    }
    if json {
        let rows: Vec<Value> = rows.iter().map(|(n, v)| json!({"n": n, "value": rational_json(v)})).collect();
        Outcome::ok(json_line(&Value::Array(rows)))
    } else {
        let mut out = String::new();
        for (n, v) in rows {
            let _ = writeln!(out, "{n} {}", crate::rational::fmt_rational(&v));
        }
        Outcome::ok(out)
    }
}

fn rep(form: &str, n: i64, domain: &str, witnesses: bool, json: bool) -> Outcome {
    let spec = match FormSpec::parse(form).and_then(|f| f.with_domains(domain)) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e),
    };
    let result = match brute_force_count(&spec, n, witnesses) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    if json {
        let mut v = json!({"form": form, "n": n, "count": result.count});
        if let Some(w) = &result.witnesses {
            v["witnesses"] = json!(w);
        }
        return Outcome::ok(json_line(&v));
    }
    let mut out = format!("count={}\n", result.count);
    for w in result.witnesses.iter().flatten() {
        let parts: Vec<String> = w.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "({})", parts.join(", "));
    }
    Outcome::ok(out)
}

fn parse_params(raw: &[String]) -> Result<Vec<(String, String)>, String> {
    raw.iter()
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| format!("--param expects K=V, got `{p}`"))
        })
        .collect()
}

fn verify(id: &str, raw: &[String], order: Option<i64>, json: bool) -> Outcome {
    let params = match parse_params(raw) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    match identities::verify(id, &params, order) {
        Ok(report) => {
            let code = if report.equal { 0 } else { 1 };
            let text = if json { json_line(&report.to_json()) } else { format!("{report}\n") };
            Outcome::with_code(code, text)
        }
        Err(e) => Outcome::usage(e),
    }
}

fn suite(filter: Option<&str>, order: Option<i64>, json: bool) -> Outcome {
    let reports: Vec<IdentityReport> = identities::run_suite(filter, order);
    let passed = reports.iter().filter(|r| r.equal).count();
    let failed = reports.len() - passed;
    let code = if failed == 0 { 0 } else { 1 };
    if json {
        let all: Vec<Value> = reports.iter().map(IdentityReport::to_json).collect();
        return Outcome::with_code(code, json_line(&json!({"reports": all, "passed": passed, "failed": failed})));
    }
    let mut out = String::new();
    for r in &reports {
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "passed {passed}/{} failed {failed}", reports.len());
    Outcome::with_code(code, out)
}

fn list_catalog(filter: Option<&str>, json: bool) -> Outcome {
    let entries: Vec<_> =
        identities::catalog().iter().filter(|e| filter.map_or(true, |f| e.id.starts_with(f))).collect();
    if json {
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "statement": e.statement,
                    "default_order": e.default_order,
                    "experimental": e.experimental,
                    "negative_control": e.negative_control,
                })
            })
            .collect();
        return Outcome::ok(json_line(&Value::Array(rows)));
    }
    let mut out = String::new();
    for e in entries {
        let tag = if e.experimental {
            " (experimental)"
        } else if e.negative_control {
            " (negative control)"
        } else {
            ""
        };
        let _ = writeln!(out, "{} order={}{tag}: {}", e.id, e.default_order, e.statement);
    }
    Outcome::ok(out)
}

fn fmt_list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn residue_command(cmd: ResidueCommand) -> Outcome {
    match cmd {
        ResidueCommand::Classify { t, json } => match residues::th78_classify(t) {
            Ok(c) => {
                if json {
                    Outcome::ok(json_line(&serde_json::to_value(&c).expect("plain data")))
                } else {
                    let mut out = format!("t={}\n", c.t);
                    for (name, set) in [("S1", &c.s1), ("Sm1", &c.sm1), ("S0", &c.s0), ("S11", &c.s11), ("S12", &c.s12)] {
                        let _ = writeln!(out, "{name}={}", fmt_list(set));
                    }
                    Outcome::ok(out)
                }
            }
            Err(e) => Outcome::usage(e),
        },
        ResidueCommand::Res { a, n, json } => {
            if n < 2 {
                return Outcome::usage("--n must be at least 2");
            }
            let count = residues::res_count(a, n);
            let consistent = residues::rule_consistent(a, n);
            let code = if consistent == Some(false) { 1 } else { 0 };
            if json {
                let v = json!({"a": a, "n": n, "count": count, "rule": residues::residue_rule(n), "consistent": consistent});
                return Outcome::with_code(code, json_line(&v));
            }
            let rule = match consistent {
                Some(true) => "rule=agrees".to_string(),
                Some(false) => format!("rule=disagrees expected={}", residues::residue_rule(n)),
                None => "rule=not_applicable".to_string(),
            };
            Outcome::with_code(code, format!("count={count} {rule}\n"))
        }
        ResidueCommand::Th75(PrimePair { p, q, json }) => {
            let (count, rule) = match (residues::th75_count(p, q), residues::th75_rule(p, q)) {
                (Ok(c), Ok(r)) => (c, r),
                (Err(e), _) | (_, Err(e)) => return Outcome::usage(e),
            };
            let code = if count == rule { 0 } else { 1 };
            let text = if json {
                json_line(&json!({"p": p, "q": q, "count": count, "rule": rule, "agrees": count == rule}))
            } else {
                format!("count={count} rule={rule}\n")
            };
            Outcome::with_code(code, text)
        }
        ResidueCommand::Lemma { a, b, n, json } => match residues::impossibility_check(a, b, n) {
            Ok(outcome) => {
                let code = if outcome == LemmaOutcome::ConsistentWithLemma { 0 } else { 1 };
                let text = if json {
                    json_line(&serde_json::to_value(&outcome).expect("plain data"))
                } else {
                    match outcome {
                        LemmaOutcome::ConsistentWithLemma => "consistent_with_lemma\n".to_string(),
                        LemmaOutcome::Counterexample { x, y } => format!("counterexample x={x} y={y}\n"),
                    }
                };
                Outcome::with_code(code, text)
            }
            Err(e) => Outcome::usage(e),
        },
    }
}

//! Command-line front end. [`run_command`] does all the work and returns the
//! captured output so the binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cyclotomic::{
    cyclotomic_poly, elementary_symmetric, inverse_totient, reciprocal_vanishing_check, reduce_mod_prime,
    Scalar, SymmetricVector,
};
use crate::error::{Error, Result};
use crate::exact::{is_prime_u64, rational_to_string, Coeff, Rat, MAX_FIELD_PRIME};
use crate::factor_engine::{canonical_factorization, divisors_in_algebra, CanonicalFactorization, DEFAULT_SUBSET_LIMIT};
use crate::monoid::PuiseuxMonoid;
use crate::parser::{format_monoid, format_poly, parse_monoid, parse_poly, parse_rat};
use crate::poly::PuiseuxPoly;

/// Outcome class of one invocation; each maps to one exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    MathDomainError,
    ParseError,
    ResourceLimit,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::MathDomainError => 1,
            Status::ParseError => 2,
            Status::ResourceLimit => 3,
        }
    }
}

impl From<&Error> for Status {
    fn from(e: &Error) -> Status {
        match e {
            Error::Domain(_) => Status::MathDomainError,
            Error::Parse { .. } | Error::Semantic { .. } => Status::ParseError,
            Error::ResourceLimit(_) => Status::ResourceLimit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    /// Text for stdout (the result document).
    pub payload: String,
    /// Text for stderr (error or usage message).
    pub message: String,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

#[derive(Parser, Debug)]
#[command(name = "puiseux", version, about = "Exact factorization and divisor enumeration in Puiseux algebras Q[S]")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on candidate sub-multisets during divisor enumeration.
    #[arg(long, global = true, env = "PUISEUX_LIMIT", default_value_t = DEFAULT_SUBSET_LIMIT)]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InMonoid {
    /// Element of Q[Q_+], e.g. "X^(1/2) - 1".
    #[arg(allow_hyphen_values = true)]
    poly: String,
    /// Monoid literal such as "<2, 3>". Defaults to <1/m>, m the lcm of the
    /// exponent denominators of the element.
    #[arg(long)]
    monoid: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical factorization c * X^r * prod Φ_n(X^(1/m))^e * prod q(X^(1/m))^l.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Non-associate divisors inside Q[S].
    Divisors(InMonoid),
    /// Whether the element is an atom of Q[S].
    Atom(InMonoid),
    /// Number of non-associate divisors inside Q[S].
    Count(InMonoid),
    /// Whether the support is symmetric about (ord + deg) / 2.
    Symsupp {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The n-th cyclotomic polynomial.
    Cyclotomic { n: u64 },
    /// All n with φ(n) = d.
    TotientInv { d: u64 },
    /// Elementary symmetric values of the roots and the check that e_k = 0 forces e_(n-k) = 0.
    Lemma21 {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// "Q" or "F<p>" for a prime p.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Atoms of a Puiseux monoid.
    MonoidAtoms { monoid: String },
    /// Divisors of an element inside a Puiseux monoid.
    MonoidDivisors {
        value: String,
        #[arg(long)]
        monoid: String,
    },
    /// Exponent substitution X -> X^r.
    Substitute {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        by: String,
    },
}

/// Parses `argv` (program name first) and runs one command.
pub fn run_command<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    status: Status::Ok,
                    payload: text,
                    message: String::new(),
                },
                _ => CommandResult {
                    status: Status::ParseError,
                    payload: String::new(),
                    message: text,
                },
            };
        }
    };
    match dispatch(&cli) {
        Ok(mut payload) => {
            if !payload.ends_with('\n') {
                payload.push('\n');
            }
            CommandResult {
                status: Status::Ok,
                payload,
                message: String::new(),
            }
        }
        Err(e) => {
            let status = Status::from(&e);
            let message = if cli.json {
                let doc = serde_json::json!({ "status": status_name(status), "error": e.to_string() });
                format!("{doc}\n")
            } else {
                format!("error: {e}\n")
            };
            CommandResult {
                status,
                payload: String::new(),
                message,
            }
        }
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::MathDomainError => "math-domain-error",
        Status::ParseError => "parse-error",
        Status::ResourceLimit => "resource-limit",
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn q(c: &Coeff) -> String {
    rational_to_string(c)
}

fn monoid_or_default(text: Option<&str>, f: &PuiseuxPoly) -> Result<PuiseuxMonoid> {
    match text {
        Some(t) => parse_monoid(t),
        None => {
            let m = if f.is_zero() { 1 } else { f.clear_denominators()?.0 };
            PuiseuxMonoid::new(vec![Rat::new(1u64, m)?])
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    let json = cli.json;
    match &cli.command {
        Command::Factor { poly } => {
            let f = parse_poly(poly)?;
            let cf = canonical_factorization(&f)?;
            Ok(if json { factorization_json(&f, &cf) } else { factor_text(&cf) })
        }
        Command::Divisors(a) | Command::Atom(a) | Command::Count(a) => {
            let f = parse_poly(&a.poly)?;
            let s = monoid_or_default(a.monoid.as_deref(), &f)?;
            if matches!(cli.command, Command::Atom(_)) && f.is_constant() {
                return Err(Error::domain(format!("{f} is a unit or zero")));
            }
            let set = divisors_in_algebra(&f, &s, cli.limit)?;
            let divisors: Vec<String> = set.divisors.iter().map(format_poly).collect();
            let element = format_poly(&f);
            let monoid = format_monoid(&s);
            Ok(match (&cli.command, json) {
                (Command::Divisors(_), true) => to_json(&DivisorDoc {
                    element,
                    monoid,
                    count: divisors.len(),
                    divisors,
                }),
                (Command::Divisors(_), false) => divisors.join("\n"),
                (Command::Atom(_), _) => {
                    let atom = set.len() == 2;
                    if json {
                        to_json(&serde_json::json!({ "element": element, "monoid": monoid, "atom": atom }))
                    } else {
                        atom.to_string()
                    }
                }
                (_, true) => to_json(&serde_json::json!({ "element": element, "monoid": monoid, "count": set.len() })),
                (_, false) => set.len().to_string(),
            })
        }
        Command::Symsupp { poly } => {
            let f = parse_poly(poly)?;
            let sym = f.is_symmetric_support()?;
            Ok(if json {
                let ods = f.ord_deg_supp()?;
                to_json(&serde_json::json!({
                    "element": format_poly(&f),
                    "ord": ods.ord.to_string(),
                    "deg": ods.deg.to_string(),
                    "supp": ods.supp.iter().map(Rat::to_string).collect::<Vec<_>>(),
                    "symmetric": sym,
                }))
            } else {
                sym.to_string()
            })
        }
        Command::Cyclotomic { n } => {
            let p = cyclotomic_poly(*n)?;
            Ok(if json {
                to_json(&serde_json::json!({
                    "n": n.to_string(),
                    "poly": p.to_string(),
                    "coeffs": p.coeffs().iter().map(q).collect::<Vec<_>>(),
                }))
            } else {
                p.to_string()
            })
        }
        Command::TotientInv { d } => {
            let ns: Vec<String> = inverse_totient(*d).iter().map(u64::to_string).collect();
            Ok(if json {
                to_json(&serde_json::json!({ "d": d.to_string(), "n": ns }))
            } else {
                ns.join(" ")
            })
        }
        Command::Lemma21 { poly, field } => lemma21(poly, field, json),
        Command::MonoidAtoms { monoid } => {
            let s = parse_monoid(monoid)?;
            let atoms: Vec<String> = s.atoms()?.iter().map(Rat::to_string).collect();
            Ok(if json {
                to_json(&serde_json::json!({ "monoid": format_monoid(&s), "atoms": atoms }))
            } else {
                atoms.join(", ")
            })
        }
        Command::MonoidDivisors { value, monoid } => {
            let s = parse_monoid(monoid)?;
            let v = parse_rat(value)?;
            let ds: Vec<String> = s.divisors_in_monoid(&v)?.iter().map(Rat::to_string).collect();
            Ok(if json {
                to_json(&serde_json::json!({ "monoid": format_monoid(&s), "element": v.to_string(), "divisors": ds }))
            } else {
                ds.join(", ")
            })
        }
        Command::Substitute { poly, by } => {
            let f = parse_poly(poly)?;
            let r = parse_rat(by)?;
            let g = f.substitute(&r)?;
            Ok(if json {
                to_json(&serde_json::json!({ "element": format_poly(&f), "by": r.to_string(), "result": format_poly(&g) }))
            } else {
                format_poly(&g)
            })
        }
    }
}

/// The JSON document printed by `factor --json`.
pub fn factorization_json(f: &PuiseuxPoly, cf: &CanonicalFactorization) -> String {
    to_json(&FactorDoc::new(f, cf))
}

#[derive(Serialize)]
struct DivisorDoc {
    element: String,
    monoid: String,
    count: usize,
    divisors: Vec<String>,
}

#[derive(Serialize)]
struct CyclotomicEntry {
    n: String,
    multiplicity: usize,
}

#[derive(Serialize)]
struct PrimeEntry {
    /// Polynomial in `X` standing for `X^(1/m)`.
    poly: String,
    multiplicity: usize,
}

/// JSON mirror of [`CanonicalFactorization`].
#[derive(Serialize)]
struct FactorDoc {
    element: String,
    constant: String,
    clearing_denominator: String,
    monomial_exponent: String,
    cyclotomic: Vec<CyclotomicEntry>,
    primes: Vec<PrimeEntry>,
}

impl FactorDoc {
    fn new(f: &PuiseuxPoly, cf: &CanonicalFactorization) -> FactorDoc {
        FactorDoc {
            element: format_poly(f),
            constant: q(&cf.constant),
            clearing_denominator: cf.clearing_denominator.to_string(),
            monomial_exponent: cf.monomial_exponent.to_string(),
            cyclotomic: cf
                .cyclotomic
                .iter()
                .map(|&(n, e)| CyclotomicEntry {
                    n: n.to_string(),
                    multiplicity: e,
                })
                .collect(),
            primes: cf
                .primes
                .iter()
                .map(|(p, e)| PrimeEntry {
                    poly: p.to_string(),
                    multiplicity: *e,
                })
                .collect(),
        }
    }
}

fn factor_text(cf: &CanonicalFactorization) -> String {
    let m = cf.clearing_denominator;
    let var = if m == 1 { "X".to_string() } else { format!("X^(1/{m})") };
    let pow = |e: usize| if e == 1 { String::new() } else { format!("^{e}") };
    let mut out = String::new();
    writeln!(out, "constant: {}", q(&cf.constant)).unwrap();
    writeln!(out, "clearing denominator: {m}").unwrap();
    writeln!(out, "monomial: X^({})", cf.monomial_exponent).unwrap();
    for &(n, e) in &cf.cyclotomic {
        writeln!(out, "cyclotomic: Φ_{n}({var}){}", pow(e)).unwrap();
    }
    for (p, e) in &cf.primes {
        writeln!(out, "prime: ({p}){} in {var}", pow(*e)).unwrap();
    }
    out
}

enum Field {
    Rationals,
    Prime(u64),
}

fn parse_field(s: &str) -> Result<Field> {
    let bad = || Error::Semantic {
        offset: 0,
        message: format!("field must be Q or F<p> with p prime, got {s:?}"),
    };
    match s.trim() {
        "Q" | "q" => Ok(Field::Rationals),
        t => {
            let p: u64 = t
                .strip_prefix('F')
                .or_else(|| t.strip_prefix('f'))
                .and_then(|d| d.parse().ok())
                .ok_or_else(bad)?;
            if p < MAX_FIELD_PRIME && is_prime_u64(p) {
                Ok(Field::Prime(p))
            } else {
                Err(bad())
            }
        }
    }
}

fn lemma21(poly: &str, field: &str, json: bool) -> Result<String> {
    let field = parse_field(field)?;
    let f = parse_poly(poly)?;
    let (m, dense) = f.clear_denominators()?;
    if m != 1 {
        return Err(Error::domain(format!("{f} is not a polynomial in X")));
    }
    match field {
        Field::Rationals => report(dense.coeffs(), "Q", json),
        Field::Prime(p) => report(&reduce_mod_prime(&dense, p)?, &format!("F{p}"), json),
    }
}

fn report<T: Scalar>(coeffs: &[T], field: &str, json: bool) -> Result<String> {
    let e: SymmetricVector<T> = elementary_symmetric(coeffs)?;
    let check = reciprocal_vanishing_check(coeffs)?;
    let n = e.degree();
    let values: Vec<String> = e.values().iter().map(|v| v.to_string()).collect();
    if json {
        return Ok(to_json(&serde_json::json!({
            "field": field,
            "degree": n,
            "e": values,
            "holds": check.holds,
            "witnesses": check.witnesses,
        })));
    }
    let mut out = format!("e = ({})\n", values.join(", "));
    if check.holds {
        out.push_str("holds\n");
    }
    for k in &check.witnesses {
        writeln!(out, "violation at k={k} (e_{k} = 0, e_{} = {})", n - k, values[n - k]).unwrap();
    }
    Ok(out)
}

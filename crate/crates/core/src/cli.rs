//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 on usage errors, 2 when a verification finds a mismatch.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::closed_form::{correspondence_table, minor_closed};
use crate::cluster::build_btilde;
use crate::factorization::{phi, psi, random_assignment, verify_factorization};
use crate::laurent::LaurentPoly;
use crate::minors_oracle::{minor_g, minor_l_dp, minor_l_oracle, TorusExponents};
use crate::paths::{enumerate_params, minor_by_paths, path_label, to_dot, PathParams};
use crate::weyl_word::CWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "spgm", version, about = "Generalized minors on double Bruhat cells of Sp(2r)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct WordArgs {
    #[arg(long)]
    pub rank: u32,
    #[arg(long)]
    pub cycles: u32,
    #[arg(long)]
    pub last: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closed,
    Path,
    Oracle,
    Dp,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print Δ^L(k;i), optionally with the t-exponent of Δ^G.
    Minor {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Torus exponents a1,...,ar.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        torus: Option<Vec<i64>>,
    },
    /// List the weighted paths for position k.
    Paths {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        k: usize,
        /// Emit Graphviz instead of a list.
        #[arg(long)]
        dot: bool,
    },
    /// Tableau to monomial correspondence for position k.
    Tableaux {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        k: usize,
    },
    /// Exchange matrix as JSON.
    Btilde {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Apply a mutation sequence to the exchange matrix.
    Mutate {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seq: Vec<i64>,
    },
    /// Check the factorization identity and the inverse map at random points.
    FactorCheck {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check every method on all words up to the given rank.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_rank: u32,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}

fn word_of(a: &WordArgs) -> Result<CWord, Failure> {
    Ok(CWord::new(a.rank, a.cycles, a.last)?)
}

fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Minor { word, k, method, format, torus } => minor_cmd(word, *k, *method, *format, torus.as_deref()),
        Command::Paths { word, k, dot } => paths_cmd(word, *k, *dot),
        Command::Tableaux { word, k } => {
            let w = word_of(word)?;
            Ok(correspondence_table(&w, *k)?)
        }
        Command::Btilde { word } => {
            let w = word_of(word)?;
            let b = build_btilde(&w);
            Ok(format!("{}\n", serde_json::to_string_pretty(&b.to_json())?))
        }
        Command::Mutate { word, seq } => {
            let w = word_of(word)?;
            let b = build_btilde(&w).mutate_seq(seq)?;
            Ok(format!("{}\n", serde_json::to_string_pretty(&b.to_json())?))
        }
        Command::FactorCheck { word, trials, seed } => factor_cmd(word, *trials, *seed),
        Command::Verify { max_rank } => verify_cmd(*max_rank),
    }
}

/// Every method's value for position `k`, in the order closed, path, oracle, dp.
fn all_methods(w: &CWord, k: usize) -> Result<Vec<(&'static str, LaurentPoly)>, Failure> {
    Ok(vec![
        ("closed", minor_closed(w, k)?),
        ("path", minor_by_paths(w, k)?),
        ("oracle", minor_l_oracle(w, k)?),
        ("dp", minor_l_dp(w, k)?),
    ])
}

fn agree(w: &CWord, k: usize, vals: &[(&'static str, LaurentPoly)]) -> Result<(), Failure> {
    let (name0, p0) = &vals[0];
    for (name, p) in &vals[1..] {
        if p != p0 {
            return Err(Failure::Mismatch(format!("word {w}, k={k}: {name0} = {p0} but {name} = {p}")));
        }
    }
    Ok(())
}

fn minor_cmd(word: &WordArgs, k: usize, method: Method, format: Format, torus: Option<&[i64]>) -> Outcome {
    let w = word_of(word)?;
    let (mp, d) = w.locate(k)?;
    let poly = match method {
        Method::Closed => minor_closed(&w, k)?,
        Method::Path => minor_by_paths(&w, k)?,
        Method::Oracle => minor_l_oracle(&w, k)?,
        Method::Dp => minor_l_dp(&w, k)?,
        Method::All => {
            let vals = all_methods(&w, k)?;
            agree(&w, k, &vals)?;
            vals[0].1.clone()
        }
    };
    let exponent = match torus {
        Some(a) => Some(minor_g(&w, k, &TorusExponents::new(a.to_vec()))?.torus_exponent),
        None => None,
    };
    Ok(match format {
        Format::Text => match exponent {
            Some(e) => format!("t^{e} * ({})\n", poly.canonical_string()),
            None => format!("{}\n", poly.canonical_string()),
        },
        Format::Json => {
            let mut v = json!({
                "r": w.rank(), "m": w.cycles(), "last": w.last(), "k": k, "m_prime": mp, "d": d,
                "polynomial": poly.to_json_value(),
                "canonical": poly.canonical_string(),
            });
            if let Some(e) = exponent {
                v["torus_exponent"] = json!(e);
            }
            format!("{}\n", serde_json::to_string(&v)?)
        }
    })
}

fn paths_cmd(word: &WordArgs, k: usize, dot: bool) -> Outcome {
    let w = word_of(word)?;
    let p = PathParams::for_position(&w, k)?;
    let paths = enumerate_params(&p);
    if dot {
        return Ok(to_dot(p.r, p.m, &paths)?);
    }
    let mut out = String::new();
    for (n, path) in paths.iter().enumerate() {
        let q = LaurentPoly::from(path_label(p.r, p.m, path)?);
        out.push_str(&format!("p{}: {}  Q = {}\n", n + 1, path, q));
    }
    Ok(out)
}

fn factor_cmd(word: &WordArgs, trials: usize, seed: u64) -> Outcome {
    let w = word_of(word)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let v = random_assignment(&w, &mut rng, 12);
        if !verify_factorization(&w, &v)? {
            return Err(Failure::Mismatch(format!("factorization fails on trial {t} for word {w}")));
        }
        if psi(&w, &phi(&w, &v)?)? != v || phi(&w, &psi(&w, &v)?)? != v {
            return Err(Failure::Mismatch(format!("psi is not inverse to phi on trial {t} for word {w}")));
        }
    }
    Ok(format!("factor-check ok: word {w}, {trials} trials, seed {seed}\n"))
}

fn verify_cmd(max_rank: u32) -> Outcome {
    let mut cases = 0usize;
    for r in 1..=max_rank {
        for m in 1..=r {
            for last in 1..=r {
                let w = CWord::new(r, m, last)?;
                for k in 1..=w.len() {
                    let vals = all_methods(&w, k)?;
                    agree(&w, k, &vals)?;
                    if !vals[0].1.all_coefficients_positive() {
                        return Err(Failure::Mismatch(format!("word {w}, k={k}: non-positive coefficient")));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("verified {cases} cases up to rank {max_rank}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["spgm"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn minor_all_methods() {
        let (code, out, _) = call(&["minor", "--rank", "3", "--cycles", "3", "--last", "2", "--k", "5", "--method", "all"]);
        assert_eq!(code, 0);
        assert!(out.contains("2*Y[1,2]*Y[2,2]^-1"));
        assert_eq!(out.split(" + ").count(), 11);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["minor", "--rank", "3", "--cycles", "3", "--last", "2", "--k", "99"]).0, 1);
        assert_eq!(call(&["minor", "--rank", "3", "--cycles", "4", "--last", "2", "--k", "1"]).0, 1);
        assert_eq!(call(&["bogus"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn json_and_torus() {
        let (code, out, _) = call(&[
            "minor", "--rank", "3", "--cycles", "3", "--last", "2", "--k", "5", "--format", "json", "--torus", "1,-2,5",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["m_prime"], 2);
        assert_eq!(v["torus_exponent"], 5 + 2 - 1);
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["paths", "--rank", "3", "--cycles", "3", "--last", "2", "--k", "5", "--dot"]);
        let b = call(&["paths", "--rank", "3", "--cycles", "3", "--last", "2", "--k", "5", "--dot"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }

    #[test]
    fn disagreement_is_a_mismatch() {
        let w = CWord::new(1, 1, 1).unwrap();
        let vals = vec![("closed", LaurentPoly::one()), ("path", LaurentPoly::one() + LaurentPoly::one())];
        assert!(matches!(agree(&w, 1, &vals), Err(Failure::Mismatch(_))));
        assert!(agree(&w, 1, &vals[..1]).is_ok());
    }

    #[test]
    fn small_sweeps() {
        assert_eq!(call(&["verify", "--max-rank", "2"]).0, 0);
        let (code, out, _) = call(&["factor-check", "--rank", "2", "--cycles", "2", "--last", "1", "--trials", "5"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(call(&["mutate", "--rank", "2", "--cycles", "2", "--last", "2", "--seq", "-1,1"]).0, 0);
        assert_eq!(call(&["mutate", "--rank", "2", "--cycles", "2", "--last", "2", "--seq", "4"]).0, 1);
    }
}

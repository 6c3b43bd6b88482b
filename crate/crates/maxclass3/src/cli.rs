//! Argument parsing and command dispatch. Exit codes: 0 success, 1 usage
//! or input error, 2 failed verification, 3 internal inconsistency.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use maxclass3_core::automorphism::{
    count_automorphisms, is_automorphism_congruence, is_automorphism_oracle, valid_triples,
    Congruences, OracleVerdict,
};
use maxclass3_core::fusion::{classify, order3_congruence};
use maxclass3_core::{Group, GroupParams};
use serde::Serialize;
use serde_json::json;

use crate::report::{ClassifyDoc, Proof, Status};
use crate::verify::{self, Suite, DEFAULT_SEED};
use crate::word::{parse_element, parse_theta};
use crate::tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "maxclass3", version, about = "Exact arithmetic in the maximal class 3-groups B(r;b,g,d)")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print human-readable text (default).
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Summarize a group: order, canonical status, automorphisms, order-3 cosets.
    Info {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
    },
    /// Normal form of an element word.
    Eval {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
        word: String,
    },
    /// Order of an element.
    Order {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
        word: String,
    },
    /// Commutator [x,y] = x^-1 y^-1 x y.
    Comm {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
        x: String,
        y: String,
    },
    /// Decide whether theta(e,d,f; v; w) is an automorphism, both ways.
    AutCheck {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
        theta: String,
    },
    /// |Aut(S)| for a canonical group.
    AutCount {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
    },
    /// Order-3 coset table and candidate table.
    Tables {
        /// Rank of the left-hand column group; the other column uses rank + 1.
        #[arg(long, default_value_t = 5)]
        rank: usize,
    },
    /// Fusion-system classification report.
    Classify {
        #[arg(long, value_parser = parse_group)]
        group: GroupParams,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Vec<SuiteArg>,
        #[arg(long, default_value_t = 5)]
        rmin: usize,
        #[arg(long, default_value_t = 6)]
        rmax: usize,
        /// Seed for the sampled claims.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Core,
    Structure,
    Aut,
    Fusion,
    All,
}

/// Parses `r,b,g,d`.
pub fn parse_group(s: &str) -> Result<GroupParams, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [r, b, g, d] = parts[..] else {
        return Err(format!("expected r,b,g,d, got '{s}'"));
    };
    let num = |t: &str| t.parse::<u8>().map_err(|_| format!("'{t}' is not a small integer"));
    let r = r.parse::<usize>().map_err(|_| format!("'{r}' is not a rank"))?;
    GroupParams::new(r, num(b)?, num(g)?, num(d)?).map_err(|e| e.to_string())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn emit(&mut self, value: &impl Serialize, text: impl FnOnce() -> String) -> std::io::Result<()> {
        if self.json {
            let s = serde_json::to_string_pretty(value).expect("report serializes");
            writeln!(self.out, "{s}")
        } else {
            write!(self.out, "{}", text())
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { out, err, json: cli.json };
    match dispatch(cli.cmd, &mut io) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Inconsistent(msg)) => {
            let _ = writeln!(io.err, "internal inconsistency: {msg}");
            EXIT_INCONSISTENT
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Inconsistent(String),
    Io(std::io::Error),
}

impl From<maxclass3_core::Error> for CliError {
    fn from(e: maxclass3_core::Error) -> Self {
        match e {
            maxclass3_core::Error::Inconsistency(msg) => CliError::Inconsistent(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<crate::word::ParseError> for CliError {
    fn from(e: crate::word::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn group(io: &mut Io, p: GroupParams) -> Result<Group, CliError> {
    if !p.is_canonical() {
        writeln!(io.err, "warning: {p} is not a canonical parameter triple for its rank")?;
    }
    Ok(Group::new(p)?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cmd: Cmd, io: &mut Io) -> Result<i32, CliError> {
    match cmd {
        Cmd::Info { group: p } => {
            let g = group(io, p)?;
            let triples = valid_triples(&p);
            let count = count_automorphisms(&p).ok();
            let order3: Vec<bool> = (0..3).map(|d| order3_congruence(&p, d)).collect();
            let value = json!({
                "group": p.to_string(),
                "order": g.order(),
                "canonical": p.is_canonical(),
                "valid_triples": triples,
                "aut_order": count.map(|n| n.to_string()),
                "order3": order3,
            });
            io.emit(&value, || {
                let mut s = format!("{p}: order 3^{} = {}\n", p.r, g.order());
                s += &format!("canonical: {}\n", yes(p.is_canonical()));
                s += &format!("valid (e,d,f): {triples:?}\n");
                if let Some(n) = count {
                    s += &format!("|Aut(S)| = {n}\n");
                }
                s += &format!(
                    "order 3: s {}, s*s1 {}, s*s1^2 {}\n",
                    yes(order3[0]),
                    yes(order3[1]),
                    yes(order3[2])
                );
                s
            })?;
        }
        Cmd::Eval { group: p, word } => {
            let g = group(io, p)?;
            let x = parse_element(&g, &word)?;
            io.emit(&json!({"group": p.to_string(), "word": word, "element": x.to_string()}), || {
                format!("{x}\n")
            })?;
        }
        Cmd::Order { group: p, word } => {
            let g = group(io, p)?;
            let x = parse_element(&g, &word)?;
            let n = g.element_order(&x);
            io.emit(&json!({"group": p.to_string(), "element": x.to_string(), "order": n}), || {
                format!("{n}\n")
            })?;
        }
        Cmd::Comm { group: p, x, y } => {
            let g = group(io, p)?;
            let (a, b) = (parse_element(&g, &x)?, parse_element(&g, &y)?);
            let c = g.commutator(&a, &b);
            io.emit(
                &json!({"group": p.to_string(), "x": a.to_string(), "y": b.to_string(), "commutator": c.to_string()}),
                || format!("{c}\n"),
            )?;
        }
        Cmd::AutCheck { group: p, theta } => {
            let g = group(io, p)?;
            let map = parse_theta(&g, &theta)?;
            let cong = Congruences::evaluate(&p, map.e(), map.d(), map.f());
            let by_congruence = is_automorphism_congruence(&p, &map);
            let verdict = is_automorphism_oracle(&g, &map);
            let oracle_text = match verdict {
                OracleVerdict::Automorphism => "automorphism".to_string(),
                OracleVerdict::RelationFails(rel) => format!("relation fails: {rel}"),
                OracleVerdict::NotSurjective { image_order: Some(n) } => {
                    format!("not surjective: image has order {n}")
                }
                OracleVerdict::NotSurjective { image_order: None } => {
                    "not surjective: images do not span S/Phi(S)".to_string()
                }
            };
            let consistent = by_congruence == verdict.is_automorphism();
            let value = json!({
                "group": p.to_string(),
                "theta": map.to_string(),
                "congruences": {
                    "commutator": cong.commutator,
                    "s1_cube": cong.s1_cube,
                    "s_cube": cong.s_cube,
                },
                "congruence_valid": by_congruence,
                "oracle": oracle_text,
                "consistent": consistent,
            });
            io.emit(&value, || {
                format!(
                    "{map}\ncongruences: commutator {}, s1 cube {}, s cube {} => {}\noracle: {oracle_text}\n",
                    yes(cong.commutator),
                    yes(cong.s1_cube),
                    yes(cong.s_cube),
                    if by_congruence { "automorphism" } else { "not an automorphism" },
                )
            })?;
            if !consistent {
                return Err(CliError::Inconsistent(format!(
                    "{map}: congruences and oracle disagree"
                )));
            }
        }
        Cmd::AutCount { group: p } => {
            let n = count_automorphisms(&p)?;
            io.emit(
                &json!({"group": p.to_string(), "valid_triples": valid_triples(&p), "count": n.to_string()}),
                || format!("{n}\n"),
            )?;
        }
        Cmd::Tables { rank } => {
            if !(5..verify::MAX_VERIFY_RANK).contains(&rank) {
                return Err(CliError::Input(format!(
                    "rank must be between 5 and {}",
                    verify::MAX_VERIFY_RANK - 1
                )));
            }
            let (even, odd) = if rank % 2 == 0 { (rank, rank + 1) } else { (rank + 1, rank) };
            let t = tables::compute(even, odd)?;
            io.emit(&t, || tables::render(&t))?;
        }
        Cmd::Classify { group: p } => {
            let g = Group::new(p)?;
            let rep = classify(&g)?;
            let doc = ClassifyDoc::from(&rep);
            io.emit(&doc, || classify_text(&doc))?;
        }
        Cmd::Verify { suite, rmin, rmax, seed } => {
            if rmin < 5 || rmax < rmin {
                return Err(CliError::Input(format!("need 5 <= rmin <= rmax, got {rmin}..{rmax}")));
            }
            let suites: Vec<Suite> = if suite.contains(&SuiteArg::All) {
                Suite::ALL.to_vec()
            } else {
                suite
                    .iter()
                    .map(|s| match s {
                        SuiteArg::Core => Suite::Core,
                        SuiteArg::Structure => Suite::Structure,
                        SuiteArg::Aut => Suite::Aut,
                        _ => Suite::Fusion,
                    })
                    .collect()
            };
            let claims = verify::run(&verify::Options { suites, rmin, rmax, seed })?;
            let doc = verify::summary(&claims);
            io.emit(&doc, || {
                let mut s = String::new();
                for c in &doc.results {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Inconsistent => "INCONSISTENT",
                    };
                    s += &format!("{tag:<5} {:<9} {:<11} {}\n", c.suite, c.group, c.claim);
                    if let Some(w) = &c.witness {
                        s += &format!("      witness: {w}\n");
                    }
                }
                s += &format!("{} claims, {} not passed\n", doc.claims, doc.failures.len());
                s
            })?;
            if doc.failures.iter().any(|c| c.status == Status::Inconsistent) {
                return Ok(EXIT_INCONSISTENT);
            }
            if !doc.passed {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn classify_text(doc: &ClassifyDoc) -> String {
    let mut s = format!("{}: {}\n", doc.group, doc.outcome);
    let cosets: Vec<String> =
        doc.table1.iter().map(|c| format!("{} {}", c.coset, yes(c.order3))).collect();
    s += &format!("order 3: {}\n", cosets.join(", "));
    let cands = if doc.candidates.is_empty() { "none".to_string() } else { doc.candidates.join(" ") };
    s += &format!("candidates: {cands}\n");
    s += &format!("gamma(1) essential possible: {}\n", yes(doc.gamma1_essential_possible));
    s += &format!("valid (e,d,f): {:?}; |Out_F(S)| divides {}\n", doc.valid_triples, doc.out_f_s_order);
    for p in &doc.proofs {
        match p {
            Proof::Inverting { target, theta: Some(t), theta_order, involution } => {
                s += &format!(
                    "inverting {target}: {t} (order {}), involution {}\n",
                    theta_order.unwrap_or(0),
                    involution.as_deref().unwrap_or("-")
                );
            }
            Proof::Inverting { target, theta: None, .. } => {
                s += &format!("inverting {target}: none\n");
            }
            Proof::CosetSwap { holds, maps_checked, .. } => {
                s += &format!("coset swap over {maps_checked} maps: {}\n", yes(*holds));
            }
            Proof::Subgroup { .. } => {}
        }
    }
    for (i, v) in doc.verdicts.iter().enumerate() {
        s += &format!(
            "fusion system {} [{}]: essential {}; Out_F(E) contains {}; |Out_F(S)| = {}; reduced: {}\n",
            i + 1,
            v.case,
            v.essential_classes.join(", "),
            v.aut_on_essential,
            v.out_s_order,
            yes(v.reduced)
        );
        for n in &v.notes {
            s += &format!("  note: {n}\n");
        }
    }
    s
}

//! Command-line front end. `run` parses arguments, dispatches to the
//! library, and writes JSON, TSV or DOT output.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{
    character_window, euler_limit, simple_char_multiplicity, witness_check, witness_weights,
    EulerConfig, WitnessStatus,
};
use crate::check::{run_all, run_one, CriterionReport};
use crate::error::{HypermatError, Result};
use crate::homology::{ih_cone_oracle, ih_dims, local_cohomology, lyubeznik, Support};
use crate::notation::{parse_range, parse_triple, parse_weight};
use crate::orbits::{hasse_dot, hasse_edges, orbit_catalog, Orbit, SimpleLabel};
use crate::quiver::{build_quiver, check_symmetries, components, path_space};
use crate::schur::{
    localization_multiplicity, plethysm_2x2, semi_invariant_weight, sym_multiplicity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "hypermat",
    about = "Invariants of 2x2xn hypermatrices",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit catalog and Hasse diagram.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Quiver with relations.
    Quiver {
        #[arg(long)]
        n: usize,
    },
    /// Basis of the path space between two vertices modulo relations.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Character of a simple: a single weight or a box scan.
    Character {
        #[arg(long)]
        simple: String,
        #[arg(long)]
        n: usize,
        /// Inclusive entry bounds `lo..hi` for a box scan.
        #[arg(long = "box", conflicts_with = "weight", allow_hyphen_values = true)]
        bounds: Option<String>,
        /// A single weight `αxβxγ`.
        #[arg(long)]
        weight: Option<String>,
    },
    /// Witness weights and their verdicts.
    Witness {
        #[arg(long)]
        n: usize,
        /// Include every simple's verdict, not only the status.
        #[arg(long)]
        all: bool,
        /// Largest `t` for families indexed by `t > 0`.
        #[arg(long, default_value_t = 3)]
        t_max: i64,
    },
    /// Stabilized Euler characteristic of a desingularization.
    Euler {
        #[arg(long)]
        config: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: String,
    },
    /// Decomposition of `S_γ(A⊗B)`.
    Plethysm {
        #[arg(long)]
        gamma: String,
    },
    /// Multiplicity of a weight in the polynomial ring.
    Symmult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: String,
    },
    /// Multiplicity of a weight in the localization at the semi-invariant (n = 3).
    Locmult {
        #[arg(long)]
        weight: String,
    },
    /// Local cohomology ledger with support in an orbit closure or orbit.
    Localcoh {
        #[arg(long)]
        support: String,
        #[arg(long)]
        n: usize,
    },
    /// Lyubeznik numbers of an orbit closure.
    Lyubeznik {
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        n: usize,
    },
    /// Intersection cohomology of an orbit closure.
    Ih {
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        n: usize,
    },
    /// Verification sweep.
    Check {
        /// Run every criterion.
        #[arg(long, conflicts_with = "criterion")]
        all: bool,
        /// Run one criterion (1-9).
        #[arg(long)]
        criterion: Option<u8>,
        /// A value of `n` or an inclusive range `a..b`.
        #[arg(long, default_value = "3..6")]
        n: String,
    },
}

/// Rendered output of a verb, and whether its verification succeeded.
struct Output {
    json: Value,
    tsv: Option<String>,
    dot: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value) -> Self {
        Output {
            json,
            tsv: None,
            dot: None,
            ok: true,
        }
    }

    fn tsv(mut self, s: String) -> Self {
        self.tsv = Some(s);
        self
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn tsv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = header.join("\t");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join("\t"));
        s.push('\n');
    }
    s
}

fn orbit_arg(s: &str) -> Result<Orbit> {
    s.parse()
}

/// A quiver vertex: `3`, `6'`, or a simple label such as `D3`.
fn vertex_arg(s: &str) -> Result<SimpleLabel> {
    let t = s.trim();
    if t.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        SimpleLabel::parse(&format!("D{t}"))
    } else {
        SimpleLabel::parse(t)
    }
}

fn usage_error(e: &HypermatError) -> bool {
    matches!(
        e,
        HypermatError::Parse(_)
            | HypermatError::UnknownLabel(_)
            | HypermatError::BadN(_)
            | HypermatError::RankMismatch(_)
            | HypermatError::NotDominant(_)
            | HypermatError::TooManyParts(_)
    )
}

fn check_ns(s: &str) -> Result<Vec<usize>> {
    let (a, b) = parse_range(s)?;
    if a < 3 {
        return Err(HypermatError::BadN(a.max(0) as usize));
    }
    Ok((a as usize..=b as usize).collect())
}

fn check_output(reports: Vec<CriterionReport>) -> Output {
    let ok = reports.iter().all(|r| r.passed);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.title.to_string(),
                if r.passed { "pass" } else { "fail" }.to_string(),
                r.checks.to_string(),
            ]
        })
        .collect();
    let mut out = Output::new(json!({
        "passed": ok,
        "criteria": to_value(&reports),
        "provenance": "acceptance-sweep",
    }))
    .tsv(tsv_rows(&["criterion", "title", "result", "checks"], rows));
    out.ok = ok;
    out
}

fn dispatch(cmd: &Command) -> Result<Output> {
    Ok(match cmd {
        Command::Orbits { n } => {
            let cat = orbit_catalog(*n)?;
            let edges: Vec<(String, String)> = hasse_edges(*n)
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
            let rows = cat.iter().map(|e| {
                vec![
                    e.label.to_string(),
                    e.dim.to_string(),
                    e.codim.to_string(),
                    e.representative.to_string(),
                ]
            });
            let mut out = Output::new(json!({
                "n": n,
                "orbits": to_value(&cat),
                "hasse_edges": edges,
                "provenance": "orbit-catalog",
            }))
            .tsv(tsv_rows(&["orbit", "dim", "codim", "representative"], rows));
            out.dot = Some(hasse_dot(*n)?);
            out
        }
        Command::Quiver { n } => {
            let q = build_quiver(*n)?;
            let syms = check_symmetries(&q)?;
            let ok = syms.iter().all(|c| c.holds);
            let rows = q
                .arrows
                .iter()
                .map(|a| vec![a.name.clone(), a.source.to_string(), a.target.to_string()]);
            let relations: Vec<Vec<(i64, Vec<String>)>> = q
                .relations
                .iter()
                .map(|r| r.terms.iter().map(|(c, p)| (*c, q.path_names(p))).collect())
                .collect();
            let mut out = Output::new(json!({
                "n": n,
                "vertices": to_value(&q.vertices),
                "arrows": to_value(&q.arrows),
                "relations": relations,
                "components": to_value(&components(&q)),
                "symmetries": to_value(&syms),
                "provenance": q.provenance,
            }))
            .tsv(tsv_rows(&["arrow", "source", "target"], rows));
            out.dot = Some(q.to_dot());
            out.ok = ok;
            out
        }
        Command::Paths { n, from, to } => {
            let q = build_quiver(*n)?;
            let (i, j) = (vertex_arg(from)?, vertex_arg(to)?);
            let ps = path_space(&q, i, j)?;
            let rows = ps.basis.iter().map(|p| {
                vec![if p.is_empty() {
                    "e".to_string()
                } else {
                    p.join(" ")
                }]
            });
            let tsv = tsv_rows(&["path"], rows);
            Output::new(to_value(&ps)).tsv(tsv)
        }
        Command::Character {
            simple,
            n,
            bounds,
            weight,
        } => {
            let s = SimpleLabel::parse(simple)?;
            match (bounds, weight) {
                (_, Some(w)) => {
                    let t = parse_triple(w, *n)?;
                    let v = simple_char_multiplicity(s, &t)?;
                    let row = vec![vec![
                        t.to_string(),
                        v.multiplicity
                            .map_or("undetermined".into(), |m| m.to_string()),
                        v.provenance.clone(),
                    ]];
                    let mut json = to_value(&v);
                    json["simple"] = json!(s.to_string());
                    json["weight"] = to_value(&t);
                    Output::new(json).tsv(tsv_rows(&["weight", "multiplicity", "provenance"], row))
                }
                (b, None) => {
                    let (lo, hi) = parse_range(b.as_deref().unwrap_or("-4..0"))?;
                    let w = character_window(s, *n, lo, hi)?;
                    let rows = w
                        .entries
                        .iter()
                        .map(|(t, m)| vec![t.to_string(), m.to_string()])
                        .chain(
                            w.undetermined
                                .iter()
                                .map(|t| vec![t.to_string(), "undetermined".into()]),
                        );
                    let tsv = tsv_rows(&["weight", "multiplicity"], rows);
                    Output::new(to_value(&w)).tsv(tsv)
                }
            }
        }
        Command::Witness { n, all, t_max } => {
            let mut reports = Vec::new();
            for (s, t) in witness_weights(*n, *t_max)? {
                reports.push(witness_check(s, &t)?);
            }
            let ok = reports.iter().all(|r| r.status != WitnessStatus::Failed);
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.simple.to_string(),
                        r.weight.to_string(),
                        to_value(&r.status).as_str().unwrap_or("").to_string(),
                    ]
                })
                .collect();
            let body: Value = if *all {
                to_value(&reports)
            } else {
                reports
                    .iter()
                    .map(|r| json!({"simple": r.simple.to_string(), "weight": to_value(&r.weight), "status": to_value(&r.status)}))
                    .collect()
            };
            let mut out =
                Output::new(json!({"n": n, "witnesses": body, "provenance": "witness-weights"}))
                    .tsv(tsv_rows(&["simple", "weight", "status"], rows));
            out.ok = ok;
            out
        }
        Command::Euler { config, n, weight } => {
            let cfg = EulerConfig::parse(config)?;
            let t = parse_triple(weight, *n)?;
            let v = euler_limit(cfg, &t)?;
            Output::new(json!({
                "config": cfg.name(),
                "weight": to_value(&t),
                "limit": v,
                "provenance": format!("euler-{}", cfg.name()),
            }))
            .tsv(tsv_rows(
                &["config", "weight", "limit"],
                [vec![cfg.name().to_string(), t.to_string(), v.to_string()]],
            ))
        }
        Command::Plethysm { gamma } => {
            let g = parse_weight(gamma, 4)?;
            let d = plethysm_2x2(&g)?;
            let rows = d
                .terms
                .iter()
                .map(|((a, b), m)| vec![a.to_string(), b.to_string(), m.to_string()]);
            let tsv = tsv_rows(&["alpha", "beta", "multiplicity"], rows);
            Output::new(json!({"gamma": to_value(&g), "terms": to_value(&d), "provenance": "character-division-plethysm"}))
                .tsv(tsv)
        }
        Command::Symmult { n, weight } => {
            let t = parse_triple(weight, *n)?;
            let m = sym_multiplicity(&t);
            Output::new(
                json!({"weight": to_value(&t), "multiplicity": m, "provenance": "cauchy-formula"}),
            )
            .tsv(tsv_rows(
                &["weight", "multiplicity"],
                [vec![t.to_string(), m.to_string()]],
            ))
        }
        Command::Locmult { weight } => {
            let t = parse_triple(weight, 3)?;
            let m = localization_multiplicity(&t, &semi_invariant_weight())?;
            Output::new(json!({"weight": to_value(&t), "multiplicity": m, "provenance": "semi-invariant-localization"}))
                .tsv(tsv_rows(&["weight", "multiplicity"], [vec![t.to_string(), m.to_string()]]))
        }
        Command::Localcoh { support, n } => {
            let z: Support = support.parse()?;
            let l = local_cohomology(z, *n)?;
            let rows = l.entries.iter().map(|(j, pieces)| {
                vec![
                    j.to_string(),
                    pieces
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" + "),
                ]
            });
            let tsv = tsv_rows(&["degree", "composition factors"], rows);
            Output::new(to_value(&l)).tsv(tsv)
        }
        Command::Lyubeznik { orbit, n } => {
            let t = lyubeznik(orbit_arg(orbit)?, *n)?;
            Output::new(to_value(&t)).tsv(t.to_tsv())
        }
        Command::Ih { orbit, n } => {
            let o = orbit_arg(orbit)?;
            let dims = ih_dims(o, *n)?;
            let oracle = ih_cone_oracle(o, *n);
            let ok = oracle.as_ref().is_none_or(|x| *x == dims);
            let rows = dims.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]);
            let mut out = Output::new(json!({
                "orbit": o.to_string(),
                "n": n,
                "dims": to_value(&dims),
                "cone_oracle": to_value(&oracle),
                "provenance": "intersection-cohomology-from-local-cohomology",
            }))
            .tsv(tsv_rows(&["degree", "dim"], rows));
            out.ok = ok;
            out
        }
        Command::Check { all, criterion, n } => {
            let ns = check_ns(n)?;
            match (all, criterion) {
                (_, Some(id)) => check_output(vec![run_one(*id, &ns)?]),
                _ => check_output(run_all(&ns)),
            }
        }
    })
}

/// Run the command line `args` (including the program name). Returns the
/// exit code: 0 on success, 1 on a verification failure, 2 on a usage
/// error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let output = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if usage_error(&e) { 2 } else { 1 };
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&output.json).expect("json") + "\n",
        Format::Tsv => match output.tsv {
            Some(s) => s,
            None => {
                let _ = writeln!(err, "error: TSV output is not available for this verb");
                return 2;
            }
        },
        Format::Dot => match output.dot {
            Some(s) => s,
            None => {
                let _ = writeln!(
                    err,
                    "error: DOT output is available for orbits and quiver only"
                );
                return 2;
            }
        },
    };
    let _ = out.write_all(text.as_bytes());
    if output.ok {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hypermat").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn lyubeznik_tsv_has_three_rows() {
        let (code, s) = call(&["lyubeznik", "--orbit", "O1", "--n", "3", "--format", "tsv"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = s.lines().skip(1).collect();
        assert_eq!(rows, vec!["0\t3\t2", "3\t5\t2", "5\t5\t1"]);
    }

    #[test]
    fn hasse_dot_has_ten_nodes_at_n7() {
        let (code, s) = call(&["orbits", "--n", "7", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(s.lines().filter(|l| l.contains("[label=")).count(), 10);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(
            call(&["symmult", "--n", "3", "--weight", "(1,0)x(1,0"]).0,
            2
        );
        assert_eq!(
            call(&["paths", "--n", "3", "--from", "0", "--to", "Z"]).0,
            2
        );
        assert_eq!(
            call(&["plethysm", "--gamma", "(2)", "--format", "dot"]).0,
            2
        );
    }

    #[test]
    fn json_carries_provenance() {
        for args in [
            vec!["orbits", "--n", "4"],
            vec!["quiver", "--n", "4"],
            vec!["paths", "--n", "3", "--from", "0", "--to", "8"],
            vec!["character", "--simple", "D5", "--n", "4", "--box", "-4..0"],
            vec![
                "character",
                "--simple",
                "D5",
                "--n",
                "3",
                "--weight",
                "(-1,-3)x(-2,-2)x(-2^3)",
            ],
            vec!["witness", "--n", "5"],
            vec![
                "euler",
                "--config",
                "y111",
                "--n",
                "3",
                "--weight",
                "(-5,-7)x(-5,-7)x(-4^3)",
            ],
            vec!["plethysm", "--gamma", "(2)"],
            vec!["symmult", "--n", "3", "--weight", "(1,0)x(1,0)x(1,0,0)"],
            vec!["locmult", "--weight", "(-1,-3)x(-1,-3)x(-1,-1,-2)"],
            vec!["localcoh", "--support", "O5", "--n", "5"],
            vec!["lyubeznik", "--orbit", "O7", "--n", "4"],
            vec!["ih", "--orbit", "O1", "--n", "5"],
            vec!["check", "--criterion", "8", "--n", "3..5"],
        ] {
            let (code, s) = call(&args);
            assert_eq!(code, 0, "{args:?}");
            let v: Value = serde_json::from_str(&s).unwrap();
            assert!(v.get("provenance").is_some(), "{args:?}");
        }
    }

    #[test]
    fn output_is_deterministic() {
        let a = call(&["witness", "--n", "4", "--all"]);
        let b = call(&["witness", "--n", "4", "--all"]);
        assert_eq!(a, b);
    }
}

//! `nsgap`: gap sets of numerical semigroups and their distribution modulo m.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsgap::criteria::{
    classify_family, ed_all_moduli, ed_apery_criterion, ed_closed_form, ed_direct, ed_polynomial,
    gen_arith_generators, EdModuli,
};
use nsgap::verify::{self, SweepReport};
use nsgap::{Error, Execution, NumericalSemigroup};
use serde_json::{json, Map, Value};

use render::{join, Format, Output};

#[derive(Parser)]
#[command(
    name = "nsgap",
    version,
    about = "Evenly distributed gap sets of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

/// Exactly one way of naming the semigroup.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Generators, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "N,...")]
    gens: Option<Vec<u64>>,
    /// Two generators a,b.
    #[arg(long, value_name = "A,B", value_parser = fixed::<2>)]
    two: Option<[u64; 2]>,
    /// a,h,d for the semigroup generated by a and ha + id, 1 <= i < a.
    #[arg(long, value_name = "A,H,D", value_parser = fixed::<3>)]
    genarith: Option<[u64; 3]>,
    /// a,d for the semigroup generated by a, a + d, ..., a + (a-1)d.
    #[arg(long, value_name = "A,D", value_parser = fixed::<2>)]
    arith: Option<[u64; 2]>,
}

fn fixed<const N: usize>(arg: &str) -> Result<[u64; N], String> {
    let parts: Vec<u64> = arg
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|p: Vec<u64>| format!("expected {N} comma-separated integers, got {}", p.len()))
}

impl Source {
    fn generators(&self) -> Result<Vec<u64>, Error> {
        let overflow = || Error::Overflow("family generators");
        if let Some(g) = &self.gens {
            Ok(g.clone())
        } else if let Some(g) = self.two {
            Ok(g.to_vec())
        } else if let Some(p) = self.genarith {
            gen_arith_generators(p[0], p[1], p[2]).ok_or_else(overflow)
        } else {
            let p = self.arith.expect("clap enforces one source");
            gen_arith_generators(p[0], 1, p[1]).ok_or_else(overflow)
        }
    }

    fn semigroup(&self) -> Result<NumericalSemigroup, Error> {
        NumericalSemigroup::from_generators(&self.generators()?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    /// Closed form when the Apery set of the multiplicity is arithmetic, else direct.
    Auto,
    Direct,
    Apery,
    Polynomial,
    ClosedForm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sweep {
    Emb2,
    Genarith,
    Equiv,
    Mult2,
    Mult3,
    Parity,
    Tuenter,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, multiplicity, Frobenius number and genus.
    Info {
        #[command(flatten)]
        source: Source,
    },
    /// Apery set relative to a nonzero element.
    Apery {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rel: u64,
    },
    /// The gaps, increasing.
    Gaps {
        #[command(flatten)]
        source: Source,
        /// Maximum number of gaps to list.
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Whether the gaps are evenly distributed modulo m.
    Ed {
        #[command(flatten)]
        source: Source,
        #[arg(long = "mod", value_name = "M", value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_enum, default_value = "auto")]
        route: RouteArg,
    },
    /// Every modulus for which the gaps are evenly distributed.
    EdAll {
        #[command(flatten)]
        source: Source,
    },
    /// Explicit family and its closed-form condition.
    Classify {
        #[command(flatten)]
        source: Source,
    },
    /// Cross-check closed forms against brute force.
    Verify {
        #[arg(value_enum)]
        sweep: Sweep,
        #[arg(long, default_value_t = 40)]
        max_b: u64,
        #[arg(long, default_value_t = 12)]
        max_a: u64,
        #[arg(long, default_value_t = 10)]
        max_hd: u64,
        #[arg(long, default_value_t = 60)]
        max_c: u64,
        #[arg(long, default_value_t = 30)]
        max_m: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 100)]
        pairs: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Domain(Error),
    Mismatches(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn info(s: &NumericalSemigroup) -> Output {
    let med = s.is_maximal_embedding_dimension();
    Output::single(
        json!({
            "generators": s.generators(),
            "multiplicity": s.multiplicity(),
            "embedding_dimension": s.embedding_dimension(),
            "frobenius": s.frobenius(),
            "genus": s.genus(),
            "maximal_embedding_dimension": med,
        }),
        vec![
            "generators",
            "multiplicity",
            "embedding_dimension",
            "frobenius",
            "genus",
            "maximal_embedding_dimension",
        ],
        vec![
            join(s.generators()),
            s.multiplicity().to_string(),
            s.embedding_dimension().to_string(),
            s.frobenius().to_string(),
            s.genus().to_string(),
            med.to_string(),
        ],
    )
}

fn apery(s: &NumericalSemigroup, rel: u64) -> Result<Output, Error> {
    let ap = s.apery_set(rel)?;
    let sorted = ap.sorted();
    Ok(Output {
        json: json!({
            "relative_to": rel,
            "elements": sorted,
            "frobenius": ap.frobenius(),
        }),
        header: vec!["element", "residue"],
        rows: sorted
            .iter()
            .map(|&n| vec![n.to_string(), (n % rel).to_string()])
            .collect(),
    })
}

fn gaps(s: &NumericalSemigroup, limit: usize) -> Output {
    let shown = &s.gaps()[..s.gaps().len().min(limit)];
    let truncated = shown.len() < s.gaps().len();
    let mut rows: Vec<Vec<String>> = shown.iter().map(|g| vec![g.to_string()]).collect();
    if truncated {
        rows.push(vec!["...".into()]);
    }
    Output {
        json: json!({
            "genus": s.genus(),
            "frobenius": s.frobenius(),
            "gaps": shown,
            "truncated": truncated,
        }),
        header: vec!["gap"],
        rows,
    }
}

fn ed(s: &NumericalSemigroup, m: u64, route: RouteArg) -> Result<Output, Error> {
    let report = match route {
        RouteArg::Auto => ed_closed_form(s, m).unwrap_or_else(|| ed_direct(s, m)),
        RouteArg::Direct => ed_direct(s, m),
        RouteArg::Apery => ed_apery_criterion(s, m),
        RouteArg::Polynomial => ed_polynomial(s, m),
        RouteArg::ClosedForm => ed_closed_form(s, m).ok_or_else(|| {
            Error::BadParameters(
                "the Apery set of the multiplicity is not an arithmetic sequence".into(),
            )
        })?,
    };
    Ok(render::ed_report(&report))
}

fn ed_all(s: &NumericalSemigroup) -> Output {
    match ed_all_moduli(s) {
        EdModuli::All => Output::single(json!({ "all_m": true }), vec!["m"], vec!["all".into()]),
        EdModuli::Moduli(ms) => Output {
            json: json!({ "all_m": false, "moduli": ms }),
            header: vec!["m"],
            rows: ms.iter().map(|m| vec![m.to_string()]).collect(),
        },
    }
}

fn classify(s: &NumericalSemigroup) -> Output {
    let family = classify_family(s);
    let params: Map<String, Value> = family
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let condition = family.condition();
    Output::single(
        json!({
            "family": family.tag(),
            "params": params,
            "condition": condition,
        }),
        vec!["family", "params", "condition"],
        vec![
            family.tag().to_string(),
            family
                .params()
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(","),
            condition.unwrap_or_default(),
        ],
    )
}

fn sweep_output(r: &SweepReport) -> Output {
    let mismatches: Vec<Value> = r
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "params": m.params,
                "check": m.check,
                "expected": m.expected,
                "got": m.got,
            })
        })
        .collect();
    Output::single(
        json!({
            "sweep": r.sweep_name,
            "instances_checked": r.instances_checked,
            "passed": r.passed(),
            "mismatches": mismatches,
        }),
        vec!["sweep", "instances_checked", "mismatches", "passed"],
        vec![
            r.sweep_name.clone(),
            r.instances_checked.to_string(),
            r.mismatches.len().to_string(),
            r.passed().to_string(),
        ],
    )
}

fn run(command: &Command, format: Format) -> Result<Output, Failure> {
    Ok(match command {
        Command::Info { source } => info(&source.semigroup()?),
        Command::Apery { source, rel } => apery(&source.semigroup()?, *rel)?,
        Command::Gaps { source, limit } => gaps(&source.semigroup()?, *limit),
        Command::Ed { source, m, route } => ed(&source.semigroup()?, *m, *route)?,
        Command::EdAll { source } => ed_all(&source.semigroup()?),
        Command::Classify { source } => classify(&source.semigroup()?),
        Command::Verify {
            sweep,
            max_b,
            max_a,
            max_hd,
            max_c,
            max_m,
            trials,
            pairs,
            seed,
            sequential,
        } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let report = match sweep {
                Sweep::Emb2 => verify::sweep_embdim2(*max_b, exec),
                Sweep::Genarith => verify::sweep_gen_arith(*max_a, *max_hd, exec),
                Sweep::Equiv => verify::sweep_equivalences(*trials, *seed, exec),
                Sweep::Mult2 => verify::sweep_mult2(*max_b, exec),
                Sweep::Mult3 => verify::sweep_mult3(*max_c, *max_m, exec),
                Sweep::Parity => verify::sweep_parity(*max_b, exec),
                Sweep::Tuenter => verify::sweep_tuenter(*pairs, *seed, exec),
            };
            eprintln!("{report} in {} ms", report.elapsed_ms);
            if format == Format::Tsv {
                for m in &report.mismatches {
                    eprintln!("mismatch: {m}");
                }
            }
            let out = sweep_output(&report);
            if !report.passed() {
                return Err(Failure::Mismatches(out));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli.command, cli.format) {
        Ok(out) => (out, ExitCode::SUCCESS),
        Err(Failure::Mismatches(out)) => (out, ExitCode::from(3)),
        Err(Failure::Domain(e)) => {
            eprintln!("nsgap: {e}");
            return ExitCode::from(1);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.render(cli.format).as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    code
}

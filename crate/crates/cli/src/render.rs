use nsgap::criteria::{EdReport, Witness};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// A command's result, kept in both shapes so either format can be printed.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn single(json: Value, header: Vec<&'static str>, row: Vec<String>) -> Self {
        Self {
            json,
            header,
            rows: vec![row],
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Tsv => {
                let mut out = self.header.join("\t");
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
                out
            }
        }
    }
}

pub fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Balanced => json!({ "kind": "balanced" }),
        Witness::UnequalCounts { residues, counts } => json!({
            "kind": "unequal_counts",
            "residues": [residues.0, residues.1],
            "counts": [counts.0, counts.1],
        }),
        Witness::AperyCongruent { base } => json!({ "kind": "apery_congruent", "base": base }),
        Witness::AperyMismatch {
            base,
            residue,
            apery_count,
            interval_count,
        } => json!({
            "kind": "apery_mismatch",
            "base": base,
            "residue": residue,
            "apery_count": apery_count,
            "interval_count": interval_count,
        }),
        Witness::CasesFired(cases) => json!({
            "kind": "cases_fired",
            "cases": cases.iter().map(|c| c.number()).collect::<Vec<_>>(),
        }),
        Witness::NoCase { gcd } => json!({ "kind": "no_case", "gcd": gcd }),
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Balanced => "balanced".into(),
        Witness::UnequalCounts { residues, counts } => format!(
            "unequal_counts residues={},{} counts={},{}",
            residues.0, residues.1, counts.0, counts.1
        ),
        Witness::AperyCongruent { base } => format!("apery_congruent base={base}"),
        Witness::AperyMismatch {
            base,
            residue,
            apery_count,
            interval_count,
        } => format!(
            "apery_mismatch base={base} residue={residue} apery_count={apery_count} \
             interval_count={interval_count}"
        ),
        Witness::CasesFired(cases) => {
            let n: Vec<u8> = cases.iter().map(|c| c.number()).collect();
            format!("cases_fired cases={}", join(&n))
        }
        Witness::NoCase { gcd } => format!("no_case gcd={gcd}"),
    }
}

pub fn ed_report(r: &EdReport) -> Output {
    Output::single(
        json!({
            "m": r.modulus,
            "evenly_distributed": r.evenly_distributed,
            "route": r.route.as_str(),
            "witness": witness_json(&r.witness),
        }),
        vec!["m", "evenly_distributed", "route", "witness"],
        vec![
            r.modulus.to_string(),
            r.evenly_distributed.to_string(),
            r.route.as_str().to_string(),
            witness_text(&r.witness),
        ],
    )
}

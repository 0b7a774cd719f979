use std::fmt::Write;

use rank2_fusion::fusion::cache::TableFile;
use rank2_fusion::FusionTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub fn table(t: &FusionTable, format: Format) -> String {
    match format {
        Format::Json => TableFile::from_table(t).to_json(),
        Format::Csv => csv(t),
        Format::Pretty => pretty(t),
    }
}

/// Dense tensor, one row per index triple in lexicographic order.
fn csv(t: &FusionTable) -> String {
    let n = t.len();
    let mut out = String::from("lambda,mu,nu,N\n");
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                writeln!(out, "{i},{j},{l},{}", t.get(i, j, l)).unwrap();
            }
        }
    }
    out
}

fn pretty(t: &FusionTable) -> String {
    let n = t.len();
    let labels: Vec<String> = t.alcove().weights().iter().map(|w| w.pretty()).collect();
    let mut out = String::new();
    writeln!(out, "{} level {}: {} basis elements", t.algebra(), t.level(), n).unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  [{i}] {l}").unwrap();
    }
    for i in 0..n {
        for j in i..n {
            let terms: Vec<String> = (0..n)
                .filter(|&l| t.get(i, j, l) != 0)
                .map(|l| match t.get(i, j, l) {
                    1 => format!("[{}]", labels[l]),
                    c => format!("{c}·[{}]", labels[l]),
                })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(out, "[{}] ⊗ [{}] = {rhs}", labels[i], labels[j]).unwrap();
        }
    }
    out
}

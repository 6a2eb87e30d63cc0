use functorlab::formats::matrices_to_csv;
use functorlab::zmatrix::NatMatrix;
use functorlab::{Error, Result};

use crate::args::Format;
use crate::commands::Outcome;

pub fn render(out: &Outcome, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(out.json.clone()),
        Format::Csv => match &out.matrices {
            Some(ms) => Ok(matrices_to_csv(ms)),
            None => Err(Error::InvalidArgument("csv output is only available for matrix results".into())),
        },
        Format::Text => Ok(text(out)),
    }
}

fn text(out: &Outcome) -> String {
    let value: serde_json::Value = serde_json::from_str(&out.json).expect("documents are valid JSON");
    let mut s = String::new();
    match &out.matrices {
        Some(ms) if ms.len() == 1 && value.get("rows").is_some() => s.push_str(&table(&ms[0])),
        Some(ms) => {
            s.push_str(&format!("{} matrices\n", ms.len()));
            for (i, m) in ms.iter().enumerate() {
                s.push_str(&format!("\n#{}\n{}", i + 1, table(m)));
            }
        }
        None => {
            s.push_str(&serde_json::to_string_pretty(&value).expect("valid JSON"));
            s.push('\n');
        }
    }
    s
}

fn table(m: &NatMatrix) -> String {
    let cells: Vec<String> = m.entries().iter().map(ToString::to_string).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for row in cells.chunks(m.n()) {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        s.push_str(line.join(" ").trim_end());
        s.push('\n');
    }
    s
}

use crate::zmatrix::NatMatrix;

/// One line per matrix: its 1-based position in the list, `n`, then the
/// entries in row-major order. The header names columns up to the largest
/// `n` present.
pub fn matrices_to_csv<'a>(matrices: impl IntoIterator<Item = &'a NatMatrix>) -> String {
    let matrices: Vec<&NatMatrix> = matrices.into_iter().collect();
    let width = matrices.iter().map(|m| m.n()).max().unwrap_or(0);
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    let mut header = vec!["matrix".to_string(), "n".to_string()];
    for i in 1..=width {
        for j in 1..=width {
            header.push(format!("m{i}_{j}"));
        }
    }
    w.write_record(&header).expect("writing to memory");
    for (idx, m) in matrices.iter().enumerate() {
        let mut record = vec![(idx + 1).to_string(), m.n().to_string()];
        record.extend(m.entries().iter().map(ToString::to_string));
        w.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is ASCII")
}

pub fn matrix_to_csv(m: &NatMatrix) -> String {
    matrices_to_csv([m])
}

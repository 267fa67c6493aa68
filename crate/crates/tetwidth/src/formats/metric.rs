use tetwidth_core::hypbounds::FiniteMetric;

use super::FormatError;

/// A square distance matrix, one row per record, no header.
pub fn read_metric(text: &str) -> Result<FiniteMetric, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .map(|cell| {
                cell.parse::<f64>()
                    .map_err(|_| FormatError::Invalid(format!("row {}: {cell:?} is not a number", i + 1)))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        rows.push(row);
    }
    Ok(FiniteMetric::new(rows)?)
}

pub fn write_metric(metric: &FiniteMetric) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in metric.rows() {
        w.write_record(row.iter().map(f64::to_string)).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("CSV of numbers is UTF-8")
}

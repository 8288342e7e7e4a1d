//! Character tables as CSV: header `i,j0,...,jd`, then one line per row
//! `i, p_i(0), ..., p_i(d)` with every value printed to 17 significant digits.

use tritab::CharacterTable;

use crate::error::CliError;
use crate::report::format_float;

pub fn to_csv(table: &CharacterTable) -> String {
    let d = table.d();
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once("i".to_string())
        .chain((0..=d).map(|j| format!("j{j}")))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (i, row) in table.rows().iter().enumerate() {
        let record: Vec<String> = std::iter::once(i.to_string())
            .chain(row.iter().map(|v| format_float(*v)))
            .collect();
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV output is ASCII")
}

pub fn parse(text: &str) -> Result<CharacterTable, CliError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let width = reader.headers()?.len();
    if width < 2 {
        return Err(CliError::invalid(
            "character table CSV has no value columns",
        ));
    }
    let mut rows = Vec::with_capacity(width - 1);
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let label = record.get(0).unwrap_or_default();
        if label.trim() != i.to_string() {
            return Err(CliError::invalid(format!("row {i} is labelled `{label}`")));
        }
        let row = record
            .iter()
            .skip(1)
            .map(|field| {
                field
                    .trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| {
                        CliError::invalid(format!("`{field}` in row {i} is not a finite number"))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(CharacterTable::new(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tritab::ClassTwo;

    #[test]
    fn class_two_table_text() {
        let t = ClassTwo::new(2, 1.0, 1.0).unwrap().characters();
        let text = to_csv(&t);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("i,j0,j1,j2"));
        assert_eq!(
            lines.next(),
            Some("0,1.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0")
        );
        assert_eq!(parse(&text).unwrap(), t);
    }

    #[test]
    fn parse_rejects_malformed_tables() {
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n1,2,0,-2\n").is_err());
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n2,2,0,-2\n2,2,-2,2\n").is_err());
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n1,2,zero,-2\n2,2,-2,2\n").is_err());
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n1,2,0\n2,2,-2,2\n").is_err());
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n1,2,0,inf\n2,2,-2,2\n").is_err());
        assert!(parse("i,j0,j1,j2\n0,1,1,1\n1,2,0,-2\n2,2,-2,2\n").is_ok());
    }
}

//! Record rendering: the stable jsonl schema, tsv and aligned-table
//! formats, and the human-readable identity string.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use revpow::{to_digits, Solution};

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Aligned columns for reading at a terminal.
    #[default]
    Table,
    /// Tab-separated values with a header row.
    Tsv,
    /// One JSON object per line; schema: eq, base, n, n_radix, rev, sign, root.
    Jsonl,
}

/// One solution as it appears on the command line.
///
/// Numeric fields are decimal strings so that values never lose precision
/// passing through JSON; `n_radix` is the bare digit expansion of `n` in
/// the working base (identical to `n` when the base is 10). The serialized
/// field names are a stable schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub eq: u8,
    pub base: u32,
    pub n: String,
    pub n_radix: String,
    pub rev: String,
    pub sign: String,
    pub root: String,
}

impl OutputRecord {
    pub fn from_solution(solution: &Solution) -> Self {
        OutputRecord {
            eq: solution.equation.index(),
            base: solution.radix.get(),
            n: solution.n_value.to_string(),
            n_radix: to_digits(solution.n_value, solution.radix).to_string(),
            rev: solution.reversed.to_string(),
            sign: solution.sign.glyph().to_string(),
            root: solution.root.to_string(),
        }
    }

    /// The equation instance in decimal, e.g. `528^2-528·825=-396^2`.
    /// Negative right-hand sides carry a leading minus; positive ones are
    /// bare.
    pub fn identity(&self) -> String {
        let (p, q) = exponents(self.eq);
        let sign = if self.sign == "-" { "-" } else { "" };
        format!(
            "{n}^{p}-{n}·{rev}={sign}{root}^{q}",
            n = self.n,
            rev = self.rev,
            root = self.root
        )
    }

    /// `n_radix` with an explicit base marker when the base is not 10,
    /// e.g. `11202_b3`. Used by the table format.
    pub fn annotated_radix(&self) -> String {
        if self.base == 10 {
            self.n_radix.clone()
        } else {
            format!("{}_b{}", self.n_radix, self.base)
        }
    }
}

/// `(p, q)` for an equation tag.
pub fn exponents(eq: u8) -> (u32, u32) {
    match eq {
        1 => (2, 2),
        2 => (2, 3),
        _ => (3, 2),
    }
}

pub const TSV_HEADER: &str = "eq\tbase\tn\tn_radix\trev\tsign\troot\tidentity";

pub fn tsv_line(record: &OutputRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        record.eq,
        record.base,
        record.n,
        record.n_radix,
        record.rev,
        record.sign,
        record.root,
        record.identity()
    )
}

pub fn json_line(record: &OutputRecord) -> String {
    serde_json::to_string(record).expect("record serialization cannot fail")
}

/// Renders records as aligned columns with a header.
pub fn render_table(records: &[OutputRecord]) -> String {
    let header = ["eq", "base", "n", "n(base)", "rev", "sign", "root", "identity"];
    let rows: Vec<[String; 8]> = records
        .iter()
        .map(|r| {
            [
                r.eq.to_string(),
                r.base.to_string(),
                r.n.clone(),
                r.annotated_radix(),
                r.rev.clone(),
                r.sign.clone(),
                r.root.clone(),
                r.identity(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String]| -> String {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            // pad all but the last column
            if i + 1 < cells.len() {
                for _ in cell.chars().count()..widths[i] {
                    line.push(' ');
                }
            }
        }
        line.push('\n');
        line
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    out.push_str(&fmt_row(&header_cells));
    for row in &rows {
        out.push_str(&fmt_row(&row.to_vec()));
    }
    out
}

/// Streaming sink over one of the three formats. `table` buffers until
/// [`Sink::finish`]; the other two print immediately.
pub struct Sink {
    format: Format,
    buffered: Vec<OutputRecord>,
    header_done: bool,
    pub emitted: u64,
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Sink {
            format,
            buffered: Vec::new(),
            header_done: false,
            emitted: 0,
        }
    }

    pub fn push(&mut self, record: OutputRecord) {
        self.emitted += 1;
        match self.format {
            Format::Table => self.buffered.push(record),
            Format::Tsv => {
                if !self.header_done {
                    println!("{TSV_HEADER}");
                    self.header_done = true;
                }
                println!("{}", tsv_line(&record));
            }
            Format::Jsonl => println!("{}", json_line(&record)),
        }
    }

    pub fn finish(self) {
        match self.format {
            Format::Table => {
                if self.buffered.is_empty() {
                    println!("(no solutions)");
                } else {
                    print!("{}", render_table(&self.buffered));
                }
            }
            Format::Tsv => {
                if !self.header_done {
                    println!("{TSV_HEADER}");
                }
            }
            Format::Jsonl => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use revpow::{classify, EquationId, Radix};

    fn record(n: i128, eq: EquationId) -> OutputRecord {
        OutputRecord::from_solution(&classify(n, Radix::DECIMAL, eq).unwrap().unwrap())
    }

    #[test]
    fn identity_rendering() {
        assert_eq!(record(528, EquationId::E1).identity(), "528^2-528·825=-396^2");
        assert_eq!(record(825, EquationId::E1).identity(), "825^2-825·528=495^2");
        assert_eq!(record(48, EquationId::E2).identity(), "48^2-48·84=-12^3");
        assert_eq!(record(101, EquationId::E3).identity(), "101^3-101·101=1010^2");
    }

    #[test]
    fn radix_annotation() {
        let s = classify(128, Radix::new(3).unwrap(), EquationId::E3)
            .unwrap()
            .unwrap();
        let r = OutputRecord::from_solution(&s);
        assert_eq!(r.n, "128");
        assert_eq!(r.n_radix, "11202");
        assert_eq!(r.annotated_radix(), "11202_b3");
        assert_eq!(r.rev, "184");
        // identity stays decimal regardless of base
        assert_eq!(r.identity(), "128^3-128·184=1440^2");
    }

    #[test]
    fn jsonl_schema_is_stable() {
        let line = json_line(&record(528, EquationId::E1));
        assert_eq!(
            line,
            r#"{"eq":1,"base":10,"n":"528","n_radix":"528","rev":"825","sign":"-","root":"396"}"#
        );
    }

    #[test]
    fn jsonl_round_trips() {
        let original = record(5632, EquationId::E2);
        let reparsed: OutputRecord = serde_json::from_str(&json_line(&original)).unwrap();
        assert_eq!(reparsed, original);
    }

    #[test]
    fn table_alignment_contains_all_fields() {
        let rendered = render_table(&[record(528, EquationId::E1), record(825, EquationId::E1)]);
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("eq"));
        assert!(lines[1].contains("528") && lines[1].contains("-396^2"));
        assert!(lines[2].contains("825") && lines[2].contains("495^2"));
    }
}

//! Report rendering: TSV by default (machine diffable), aligned columns
//! with --pretty. Reruns of the same command produce byte-identical text.

pub struct ReportTable {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl ReportTable {
    pub fn new(headers: &[&str]) -> ReportTable {
        ReportTable {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Two-column table without a header line, for key/value reports.
    pub fn keyed() -> ReportTable {
        ReportTable {
            headers: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        if !self.headers.is_empty() {
            assert_eq!(row.len(), self.headers.len(), "ragged report row");
        }
        self.rows.push(row);
    }

    pub fn pair(&mut self, key: &str, value: impl ToString) {
        self.push(vec![key.to_string(), value.to_string()]);
    }

    pub fn render(&self, pretty: bool) -> String {
        let mut lines: Vec<&[String]> = Vec::new();
        if !self.headers.is_empty() {
            lines.push(&self.headers);
        }
        for row in &self.rows {
            lines.push(row);
        }
        let mut out = String::new();
        if pretty {
            let columns = lines.iter().map(|l| l.len()).max().unwrap_or(0);
            let mut widths = vec![0usize; columns];
            for line in &lines {
                for (i, cell) in line.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            for line in &lines {
                let mut rendered = String::new();
                for (i, cell) in line.iter().enumerate() {
                    if i > 0 {
                        rendered.push_str("  ");
                    }
                    rendered.push_str(cell);
                    if i + 1 < line.len() {
                        rendered.push_str(&" ".repeat(widths[i] - cell.len()));
                    }
                }
                out.push_str(rendered.trim_end());
                out.push('\n');
            }
        } else {
            for line in &lines {
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        out
    }
}

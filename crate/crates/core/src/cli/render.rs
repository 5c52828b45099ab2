//! Tables rendered as Markdown, CSV or JSON.

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::rat::{fmt_common_denominator, fmt_rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Ints(Vec<i64>),
    /// Shown over a common denominator in Markdown, in lowest terms elsewhere.
    Rats(Vec<Rat>),
    Flag(Option<bool>),
    Empty,
}

impl Cell {
    fn plain(&self, common_denominator: bool) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Ints(v) => join(v.iter().map(ToString::to_string)),
            Cell::Rats(v) if common_denominator => fmt_common_denominator(v).join(" "),
            Cell::Rats(v) => join(v.iter().map(fmt_rat)),
            Cell::Flag(Some(true)) => "yes".into(),
            Cell::Flag(Some(false)) => "no".into(),
            Cell::Flag(None) | Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Int(n) => Value::from(*n),
            Cell::Ints(v) => Value::from(v.clone()),
            Cell::Rats(v) => Value::from(v.iter().map(fmt_rat).collect::<Vec<_>>()),
            Cell::Flag(b) => b.map_or(Value::Null, Value::from),
            Cell::Empty => Value::Null,
        }
    }
}

fn join(it: impl Iterator<Item = String>) -> String {
    it.collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Markdown => Ok(self.markdown()),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = format!("| {} |\n", self.headers.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.plain(true)).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Argument(e.to_string());
        w.write_record(&self.headers).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.plain(false))).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Argument(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Argument(e.to_string()))
    }

    fn json(&self) -> Result<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).map_err(|e| Error::Argument(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sample() -> Table {
        let mut t = Table::new(&["type", "gamma", "good"]);
        t.push(vec![
            Cell::Text("E6".into()),
            Cell::Rats(vec![rat(3, 8), rat(1, 4)]),
            Cell::Flag(Some(true)),
        ]);
        t
    }

    #[test]
    fn markdown_uses_common_denominator() {
        let s = sample().render(Format::Markdown).unwrap();
        assert_eq!(s, "| type | gamma | good |\n|---|---|---|\n| E6 | 3/8 2/8 | yes |\n");
    }

    #[test]
    fn csv_and_json_use_lowest_terms() {
        let t = sample();
        assert_eq!(t.render(Format::Csv).unwrap(), "type,gamma,good\nE6,3/8 1/4,yes\n");
        let v: Value = serde_json::from_str(&t.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v[0]["gamma"][1], "1/4");
        assert_eq!(v[0]["good"], true);
    }
}

//! Rendering of command results in the four output formats.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use springer_core::{IntPolynomial, RowStrictTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Latex,
}

/// Presentation-independent content of a result.
pub enum Body {
    /// Labelled scalar facts.
    Record(Vec<(String, String)>),
    /// A Betti table.
    Poly(IntPolynomial),
    Grid {
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

/// One command's result: the canonical JSON value plus a human view.
pub struct Doc {
    /// Compact JSON in field declaration order.
    pub json: String,
    pub body: Body,
    pub latex: Option<String>,
}

impl Doc {
    pub fn new<T: Serialize>(value: &T, body: Body) -> Self {
        Doc {
            json: serde_json::to_string(value).expect("result types serialize"),
            body,
            latex: None,
        }
    }

    pub fn with_latex(mut self, latex: String) -> Self {
        self.latex = Some(latex);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Table => self.table(),
            Format::Csv => self.csv(),
            Format::Latex => match &self.latex {
                Some(l) => format!("{l}\n"),
                None => self.latex_tabular(),
            },
        }
    }

    fn grid(&self) -> (Vec<String>, Vec<Vec<String>>) {
        match &self.body {
            Body::Record(pairs) => (
                vec!["field".into(), "value".into()],
                pairs.iter().map(|(k, v)| vec![k.clone(), v.clone()]).collect(),
            ),
            Body::Poly(p) => (
                vec!["degree".into(), "coefficient".into()],
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| vec![j.to_string(), c.to_string()])
                    .collect(),
            ),
            Body::Grid { header, rows } => (header.clone(), rows.clone()),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Record(pairs) => {
                let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                for (k, v) in pairs {
                    let _ = writeln!(out, "{k:<width$}  {v}");
                }
            }
            Body::Poly(p) => {
                let _ = writeln!(out, "{p}");
                out.push_str(&aligned(&self.grid().0, &self.grid().1));
            }
            Body::Grid { header, rows } => out.push_str(&aligned(header, rows)),
        }
        out
    }

    fn csv(&self) -> String {
        let (header, rows) = self.grid();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory write");
        for row in &rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    fn latex_tabular(&self) -> String {
        let (header, rows) = self.grid();
        let mut out = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(header.len()));
        let line = |cells: &[String]| format!("{} \\\\\n", cells.join(" & "));
        out.push_str(&line(&header));
        out.push_str("\\hline\n");
        for row in &rows {
            out.push_str(&line(row));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header);
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

pub fn ytableau(sigma: &RowStrictTableau) -> String {
    let rows: Vec<String> = sigma
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{ytableau}}\n{}\n\\end{{ytableau}}", rows.join(" \\\\\n"))
}

pub fn list<T: ToString>(xs: &[T]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn pairs(ps: &[(usize, usize)]) -> String {
    let inner: Vec<String> = ps.iter().map(|(i, j)| format!("({i},{j})")).collect();
    format!("{{{}}}", inner.join(","))
}

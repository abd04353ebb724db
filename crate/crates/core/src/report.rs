//! Tabular output shared by the CLI and the acceptance suite.
//!
//! CSV has a header row, quotes only where needed and ends lines with `\n`.
//! JSON is an array of objects whose keys follow column order. Arbitrary
//! precision integers are always JSON strings; fixed-point reals are written
//! as bare numbers with a fixed number of decimals.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::ser::SerializeMap;
use serde::Serializer;

use crate::decomposer::{GrowthSeries, TiltingDecomposition};
use crate::error::{Error, Result};
use crate::sl2_tilting::tilting_dimension;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::domain(format!("unknown format {s:?}, expected csv or json"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Big(BigUint),
    /// A real printed with the given number of decimals.
    Fixed(f64, usize),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    pub fn big(x: &BigUint) -> Self {
        Cell::Big(x.clone())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    /// Six decimals; exact ties round half to even.
    pub fn six(x: f64) -> Self {
        Cell::Fixed(x, 6)
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Big(x) => x.to_string(),
            Cell::Fixed(x, d) => fixed(*x, *d),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Big(x) => format!("\"{x}\""),
            Cell::Fixed(x, d) if x.is_finite() => fixed(*x, *d),
            Cell::Fixed(x, _) => serde_json::to_string(&x.to_string()).expect("string serializes"),
            Cell::Text(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => "null".into(),
        }
    }
}

fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    // Avoid "-0.000000".
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        i64::try_from(x).map_or_else(|_| Cell::Big(BigUint::from(x)), Cell::Int)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::from(x as u64)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<u128> for Cell {
    fn from(x: u128) -> Self {
        i64::try_from(x).map_or_else(|_| Cell::Big(BigUint::from(x)), Cell::Int)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Homogeneous rows under a fixed header.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::internal(format!("row has {} cells, header has {}", row.len(), self.columns.len())));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::internal(e.to_string()))
    }

    fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .quote_style(csv::QuoteStyle::Necessary)
            .from_writer(out);
        w.write_record(&self.columns).map_err(io_error)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::plain)).map_err(io_error)?;
        }
        w.flush().map_err(|e| Error::resource(format!("write failed: {e}")))
    }

    fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        let keys: Vec<String> =
            self.columns.iter().map(|c| serde_json::to_string(c).expect("string serializes")).collect();
        let mut s = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            s.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
            for (j, (k, cell)) in keys.iter().zip(row).enumerate() {
                if j > 0 {
                    s.push_str(", ");
                }
                s.push_str(k);
                s.push_str(": ");
                s.push_str(&cell.json());
            }
            s.push('}');
        }
        s.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
        out.write_all(s.as_bytes()).and_then(|_| out.flush()).map_err(|e| Error::resource(format!("write failed: {e}")))
    }
}

fn io_error(e: csv::Error) -> Error {
    Error::resource(format!("write failed: {e}"))
}

/// `n, b_n, nth_root` for every term of a series.
pub fn bn_table(series: &GrowthSeries) -> Table {
    let mut t = Table::new(["n", "b_n", "nth_root"]);
    for (n, b) in series.values.iter().enumerate() {
        t.rows.push(vec![Cell::from(n), Cell::big(b), Cell::six(series.nth_root(n))]);
    }
    t
}

/// `m, mult, dim` for each summand `T(m)`.
pub fn decomposition_table(d: &TiltingDecomposition) -> Result<Table> {
    let mut t = Table::new(["m", "mult", "dim"]);
    for (&m, mult) in &d.multiplicities {
        t.rows.push(vec![Cell::from(m), Cell::big(mult), Cell::from(tilting_dimension(m, d.mc)?)]);
    }
    Ok(t)
}

pub fn serialize_biguint<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn serialize_biguint_map<S: Serializer>(
    map: &BTreeMap<u64, BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        m.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    m.end()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::MixedCharacteristic;
    use crate::decomposer::{b_closed_form_sl2_char0, b_sequence_sl2, decompose_tensor_power};

    fn sample() -> Table {
        let mut t = Table::new(["n", "b_n", "label"]);
        t.push(vec![Cell::Int(0), Cell::big(&BigUint::from(1u32)), Cell::text("plain")]).unwrap();
        t.push(vec![Cell::Int(1), Cell::big(&BigUint::from(2u32)), Cell::text("a,\"b\"")]).unwrap();
        t
    }

    #[test]
    fn empty_tables() {
        let t = Table::new(["n", "b_n"]);
        assert_eq!(t.render(Format::Csv).unwrap(), "n,b_n\n");
        assert_eq!(t.render(Format::Json).unwrap(), "[]\n");
    }

    #[test]
    fn csv_quoting_and_line_endings() {
        let s = sample().render(Format::Csv).unwrap();
        assert_eq!(s, "n,b_n,label\n0,1,plain\n1,2,\"a,\"\"b\"\"\"\n");
        assert!(!s.contains('\r'));
    }

    #[test]
    fn json_objects_keep_column_order() {
        let s = sample().render(Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v[1]["label"], "a,\"b\"");
        assert_eq!(v[0]["b_n"], "1");
        assert!(s.find("\"n\"").unwrap() < s.find("\"b_n\"").unwrap());
    }

    #[test]
    fn big_integers_round_trip() {
        let b = b_closed_form_sl2_char0(1000);
        assert!(b.to_string().len() > 290);
        let mut t = Table::new(["b_n"]);
        t.push(vec![Cell::big(&b)]).unwrap();
        let json: serde_json::Value = serde_json::from_str(&t.render(Format::Json).unwrap()).unwrap();
        assert_eq!(json[0]["b_n"].as_str().unwrap().parse::<BigUint>().unwrap(), b);
        let csv = t.render(Format::Csv).unwrap();
        assert_eq!(csv.lines().nth(1).unwrap().parse::<BigUint>().unwrap(), b);
    }

    #[test]
    fn six_decimal_rounding() {
        assert_eq!(Cell::six(1.0).plain(), "1.000000");
        // Exactly representable ties go to the even neighbour.
        assert_eq!(Cell::Fixed(0.125, 2).plain(), "0.12");
        assert_eq!(Cell::Fixed(0.375, 2).plain(), "0.38");
        assert_eq!(Cell::six(2.5e-7).plain(), "0.000000");
        assert_eq!(Cell::six(-1e-9).plain(), "0.000000");
        assert_eq!(Cell::six(1.99265).json(), "1.992650");
    }

    #[test]
    fn wide_integers_become_big_cells() {
        assert_eq!(Cell::from(u64::MAX), Cell::Big(BigUint::from(u64::MAX)));
        assert_eq!(Cell::from(5u64), Cell::Int(5));
        assert_eq!(Cell::from(u64::MAX).json(), format!("\"{}\"", u64::MAX));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let mut t = Table::new(["a"]);
        assert!(t.push(vec![]).is_err());
    }

    #[test]
    fn format_parsing() {
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn bn_table_golden_rows() {
        let s = b_sequence_sl2(10, MixedCharacteristic::char_zero()).unwrap();
        let csv = bn_table(&s).render(Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], "n,b_n,nth_root");
        assert_eq!(lines[1], "0,1,1.000000");
        assert_eq!(lines[2], "1,1,1.000000");
        assert_eq!(lines[11], format!("10,252,{:.6}", 252f64.powf(0.1)));
    }

    #[test]
    fn decomposition_rows() {
        let d = decompose_tensor_power(3, MixedCharacteristic::classical(2).unwrap()).unwrap();
        let csv = decomposition_table(&d).unwrap().render(Format::Csv).unwrap();
        assert_eq!(csv, "m,mult,dim\n1,2,2\n3,1,4\n");
    }
}

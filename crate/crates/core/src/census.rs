//! Census rows and their table, JSON and CSV renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counts::{main_count, CountBreakdown, Status, Total};
use crate::error::{Error, Result};
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: i64,
    pub r: Slope,
    pub status: Status,
    pub psi_family: u64,
    pub phi_family: u64,
    pub total: Total,
    pub stein_fillable: bool,
    pub vot_lower: u64,
}

pub const CSV_HEADER: [&str; 8] =
    ["n", "r", "status", "psi_family", "phi_family", "total", "stein_fillable", "vot_lower"];

impl CensusRow {
    pub fn new(n: i64, r: Slope, b: &CountBreakdown) -> CensusRow {
        CensusRow {
            n,
            r,
            status: b.status,
            psi_family: b.psi_family,
            phi_family: b.phi_family,
            total: b.total,
            stein_fillable: b.stein_fillable,
            vot_lower: b.vot_lower,
        }
    }

    pub fn compute(n: i64, r: Slope) -> Result<CensusRow> {
        Ok(CensusRow::new(n, r, &main_count(n, r)?))
    }

    fn fields(&self) -> [String; 8] {
        [
            self.n.to_string(),
            self.r.to_string(),
            self.status.to_string(),
            self.psi_family.to_string(),
            self.phi_family.to_string(),
            self.total.to_string(),
            self.stein_fillable.to_string(),
            self.vot_lower.to_string(),
        ]
    }

    fn from_fields(f: &[&str]) -> Result<CensusRow> {
        let bad = |s: &str| Error::Parse(s.to_string());
        if f.len() != 8 {
            return Err(Error::Parse(f.join(",")));
        }
        Ok(CensusRow {
            n: f[0].parse().map_err(|_| bad(f[0]))?,
            r: f[1].parse()?,
            status: f[2].parse()?,
            psi_family: f[3].parse().map_err(|_| bad(f[3]))?,
            phi_family: f[4].parse().map_err(|_| bad(f[4]))?,
            total: f[5].parse()?,
            stein_fillable: f[6].parse().map_err(|_| bad(f[6]))?,
            vot_lower: f[7].parse().map_err(|_| bad(f[7]))?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

pub fn row_to_json(row: &CensusRow) -> String {
    serde_json::to_string(row).expect("rows serialize")
}

pub fn rows_to_json(rows: &[CensusRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn rows_from_json(s: &str) -> Result<Vec<CensusRow>> {
    let trimmed = s.trim_start();
    let parsed = if trimmed.starts_with('[') {
        serde_json::from_str(s)
    } else {
        serde_json::from_str(s).map(|r| vec![r])
    };
    parsed.map_err(|e| Error::Parse(e.to_string()))
}

pub fn rows_to_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for row in rows {
        w.write_record(row.fields()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn rows_from_csv(s: &str) -> Result<Vec<CensusRow>> {
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let header = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
    }
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            CensusRow::from_fields(&rec.iter().collect::<Vec<_>>())
        })
        .collect()
}

pub fn rows_to_table(rows: &[CensusRow]) -> String {
    let cells: Vec<[String; 8]> = rows.iter().map(CensusRow::fields).collect();
    let widths: Vec<usize> = (0..8)
        .map(|i| cells.iter().map(|c| c[i].chars().count()).chain([CSV_HEADER[i].len()]).max().unwrap())
        .collect();
    let mut out = String::new();
    let mut line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(CSV_HEADER.to_vec());
    for c in &cells {
        line(c.iter().map(String::as_str).collect());
    }
    out
}

pub fn render(rows: &[CensusRow], format: Format) -> String {
    match format {
        Format::Table => rows_to_table(rows),
        Format::Json => rows_to_json(rows) + "\n",
        Format::Csv => rows_to_csv(rows),
    }
}

/// `5`, `5..8` (inclusive), `5..=8`, or a comma list of those.
pub fn parse_n_range(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Parse(s.to_string());
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

pub fn parse_r_list(s: &str) -> Result<Vec<Slope>> {
    s.split(',').map(|p| p.trim().parse()).collect()
}

/// One row per `(n, r)`, ordered by `n` and then by `r`. Fails on the first
/// domain error without producing rows.
pub fn census(ns: &[i64], rs: &[Slope], parallel: bool) -> Result<Vec<CensusRow>> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rs = rs.to_vec();
    rs.sort();
    rs.dedup();
    let grid: Vec<(i64, Slope)> = ns.iter().flat_map(|&n| rs.iter().map(move |&r| (n, r))).collect();
    if parallel {
        grid.par_iter().map(|&(n, r)| CensusRow::compute(n, r)).collect()
    } else {
        grid.iter().map(|&(n, r)| CensusRow::compute(n, r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Slope {
        lit.parse().unwrap()
    }

    #[test]
    fn json_shape() {
        let row = CensusRow::compute(5, s("5/2")).unwrap();
        assert_eq!(
            row_to_json(&row),
            r#"{"n":5,"r":"5/2","status":"classified","psi_family":3,"phi_family":4,"total":7,"stein_fillable":true,"vot_lower":1}"#
        );
        let inf = CensusRow::compute(5, s("0")).unwrap();
        assert!(row_to_json(&inf).contains(r#""total":"inf""#));
    }

    #[test]
    fn round_trips() {
        let rows = census(&[5, 6], &[s("-3"), s("0"), s("5/2"), s("1")], false).unwrap();
        assert_eq!(rows_from_json(&rows_to_json(&rows)).unwrap(), rows);
        assert_eq!(rows_from_csv(&rows_to_csv(&rows)).unwrap(), rows);
        assert_eq!(rows_from_json(&row_to_json(&rows[0])).unwrap(), vec![rows[0]]);
    }

    #[test]
    fn csv_header() {
        let csv = rows_to_csv(&census(&[5], &[s("2")], false).unwrap());
        assert_eq!(
            csv,
            "n,r,status,psi_family,phi_family,total,stein_fillable,vot_lower\n5,2,classified,1,2,3,true,0\n"
        );
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_n_range("5..7").unwrap(), vec![5, 6, 7]);
        assert_eq!(parse_n_range("5..=6").unwrap(), vec![5, 6]);
        assert_eq!(parse_n_range("5,8").unwrap(), vec![5, 8]);
        assert!(parse_n_range("7..5").is_err());
        assert!(parse_n_range("x").is_err());
        assert_eq!(parse_r_list("3, -1/2,inf").unwrap(), vec![s("3"), s("-1/2"), s("inf")]);
    }

    #[test]
    fn ordering_and_parallel() {
        let rows = census(&[6, 5], &[s("7"), s("3"), s("-2")], false).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.n, r.r)).collect();
        assert_eq!(keys[0], (5, s("-2")));
        assert_eq!(keys[5], (6, s("7")));
        assert_eq!(census(&[6, 5], &[s("7"), s("3"), s("-2")], true).unwrap(), rows);
        assert!(census(&[5], &[s("inf")], false).is_err());
    }
}

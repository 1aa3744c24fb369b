//! CSV and JSON emission (and re-parsing) of search results.
//!
//! Every number is written as a plain decimal string. CSV uses a header row
//! and LF line endings.

use std::fmt::Display;

use serde::{Deserialize, Serialize, Serializer};

use crate::brute::Hit;
use crate::certificates::Certificate;
use crate::error::{Error, Result};
use crate::hybrid::{classify_gcd, verify_hybrid};
use crate::numeric::{parse_int, Int};

pub(crate) fn as_decimal<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn as_decimal_seq<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// One certificate row: `p,a,b,m,n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub p: String,
    pub a: String,
    pub b: String,
    pub m: String,
    pub n: u32,
}

impl From<&Certificate> for CertificateRow {
    fn from(c: &Certificate) -> Self {
        CertificateRow {
            p: c.p.to_string(),
            a: c.a.to_string(),
            b: c.b.to_string(),
            m: c.m.to_string(),
            n: c.n,
        }
    }
}

impl CertificateRow {
    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(Certificate {
            p: parse_int(&self.p)?,
            a: parse_int(&self.a)?,
            b: parse_int(&self.b)?,
            m: parse_int(&self.m)?,
            n: self.n,
        })
    }
}

/// One brute-search row: `A,B,C,D,n,gcd,p,k`; `p` and `k` are empty unless
/// the gcd is a prime power.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRow {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
    pub n: u32,
    pub gcd: String,
    pub p: Option<String>,
    pub k: Option<u32>,
}

impl From<&Hit> for HitRow {
    fn from(h: &Hit) -> Self {
        let s = &h.solution;
        let (p, k) = match h.gcd.prime_power() {
            Some((p, k)) => (Some(p.to_string()), Some(k)),
            None => (None, None),
        };
        HitRow {
            a: s.a.to_string(),
            b: s.b.to_string(),
            c: s.c.to_string(),
            d: s.d.to_string(),
            n: s.n,
            gcd: h.gcd.g.to_string(),
            p,
            k,
        }
    }
}

impl HitRow {
    /// Re-checks the tuple and its gcd columns from scratch.
    pub fn verify(&self) -> Result<bool> {
        let [a, b, c, d]: [Int; 4] = [
            parse_int(&self.a)?,
            parse_int(&self.b)?,
            parse_int(&self.c)?,
            parse_int(&self.d)?,
        ];
        if !verify_hybrid(&a, &b, &c, &d, &Int::from(self.n)) {
            return Ok(false);
        }
        let class = classify_gcd(&a, &b, &c)?;
        let expected = class.prime_power().map(|(p, k)| (p.to_string(), k));
        Ok(class.g.to_string() == self.gcd && expected == self.p.clone().zip(self.k))
    }
}

fn csv_error(e: impl Display) -> Error {
    Error::InvalidInput(format!("csv: {e}"))
}

fn write_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

fn read_csv<R: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(csv_error))
        .collect()
}

pub fn certificates_csv(certs: &[Certificate]) -> Result<String> {
    let rows: Vec<CertificateRow> = certs.iter().map(CertificateRow::from).collect();
    if rows.is_empty() {
        return Ok("p,a,b,m,n\n".into());
    }
    write_csv(rows)
}

pub fn certificates_json(certs: &[Certificate]) -> Result<String> {
    let rows: Vec<CertificateRow> = certs.iter().map(CertificateRow::from).collect();
    serde_json::to_string_pretty(&rows).map_err(|e| Error::InvalidInput(e.to_string()))
}

pub fn parse_certificates_csv(text: &str) -> Result<Vec<CertificateRow>> {
    read_csv(text)
}

pub fn hits_csv(hits: &[Hit]) -> Result<String> {
    let rows: Vec<HitRow> = hits.iter().map(HitRow::from).collect();
    if rows.is_empty() {
        return Ok("A,B,C,D,n,gcd,p,k\n".into());
    }
    write_csv(rows)
}

pub fn hits_json(hits: &[Hit]) -> Result<String> {
    let rows: Vec<HitRow> = hits.iter().map(HitRow::from).collect();
    serde_json::to_string_pretty(&rows).map_err(|e| Error::InvalidInput(e.to_string()))
}

pub fn parse_hits_csv(text: &str) -> Result<Vec<HitRow>> {
    read_csv(text)
}

use std::io::Write;

use serde::Serialize;

use super::CampaignError;
use crate::bounds::BoundReport;
use crate::equality::{CertificateKind, EqualityCertificate};

/// Fixed column order of per-graph CSV output.
pub const CSV_COLUMNS: [&str; 15] = [
    "id",
    "n",
    "m",
    "rho",
    "phi_min",
    "pivot",
    "phi_n",
    "hong_shu_fang",
    "hong",
    "stanley",
    "brualdi_hoffman",
    "max_degree",
    "cert_kind",
    "cert_t",
    "slack_min",
];

/// One graph's bounds and certificate, keyed by its graph6 encoding.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphRecord {
    pub index: usize,
    pub id: String,
    pub report: BoundReport<f64>,
    pub certificate: Option<EqualityCertificate>,
}

impl GraphRecord {
    pub fn new(index: usize, id: String, report: BoundReport<f64>, certificate: Option<EqualityCertificate>) -> Self {
        Self { index, id, report, certificate }
    }

    pub fn csv_row(&self) -> Vec<String> {
        let r = &self.report;
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        let (kind, t) = match &self.certificate {
            Some(c) => (c.kind.to_string(), c.t().map(|t| t.to_string()).unwrap_or_default()),
            None => (String::new(), String::new()),
        };
        vec![
            self.id.clone(),
            r.n.to_string(),
            r.m.to_string(),
            opt(r.rho),
            r.phi_min.to_string(),
            r.pivot.map(|p| p.to_string()).unwrap_or_default(),
            r.phi_at.last().unwrap().to_string(),
            r.hong_shu_fang.to_string(),
            opt(r.hong),
            r.stanley.to_string(),
            r.brualdi_hoffman.to_string(),
            r.max_degree.to_string(),
            kind,
            t,
            opt(r.slack_min),
        ]
    }

    pub fn kind(&self) -> Option<CertificateKind> {
        self.certificate.as_ref().map(|c| c.kind)
    }
}

/// Streaming CSV writer; the header goes out on construction.
pub struct CsvWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> CsvWriter<W> {
    pub fn new(out: W) -> Result<Self, CampaignError> {
        let mut inner = csv::Writer::from_writer(out);
        inner.write_record(CSV_COLUMNS).map_err(|e| CampaignError::Output(e.to_string()))?;
        Ok(Self { inner })
    }

    pub fn write(&mut self, record: &GraphRecord) -> Result<(), CampaignError> {
        self.inner.write_record(record.csv_row()).map_err(|e| CampaignError::Output(e.to_string()))
    }

    pub fn finish(mut self) -> Result<(), CampaignError> {
        self.inner.flush().map_err(|e| CampaignError::Output(e.to_string()))
    }
}

/// Writes the header followed by one row per record.
pub fn write_csv<'a, W: Write>(out: W, records: impl IntoIterator<Item = &'a GraphRecord>) -> Result<(), CampaignError> {
    let mut writer = CsvWriter::new(out)?;
    for record in records {
        writer.write(record)?;
    }
    writer.finish()
}

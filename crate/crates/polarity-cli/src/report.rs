//! JSON/text result bundles printed by the CLI.
//!
//! Absent fields are omitted from the JSON, never emitted as null, and the
//! key order is fixed by the struct layout so reports diff cleanly.

use serde::Serialize;

use polarity::blocks::CactusCensus;

#[derive(Debug, Serialize)]
pub struct PolarityReport {
    pub n: usize,
    pub m: usize,
    pub is_cactus: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wp_formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wp_oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wiener_index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method_agreement: Option<bool>,
}

impl PolarityReport {
    pub fn new(n: usize, m: usize, is_cactus: bool) -> Self {
        PolarityReport {
            n,
            m,
            is_cactus,
            wp_formula: None,
            wp_oracle: None,
            wiener_index: None,
            census: None,
            method_agreement: None,
        }
    }

    pub fn print_text(&self) {
        println!("n = {}", self.n);
        println!("m = {}", self.m);
        println!("is_cactus = {}", self.is_cactus);
        if let Some(wp) = self.wp_formula {
            println!("wp_formula = {wp}");
        }
        if let Some(wp) = self.wp_oracle {
            println!("wp_oracle = {wp}");
        }
        if let Some(w) = self.wiener_index {
            println!("wiener_index = {w}");
        }
        if let Some(census) = &self.census {
            census.print_text();
        }
        if let Some(agree) = self.method_agreement {
            println!("method_agreement = {agree}");
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).unwrap());
        } else {
            self.print_text();
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub c3: u64,
    pub c4: u64,
    pub c5: u64,
    pub c6: u64,
    pub b1: u64,
    pub b2: u64,
    pub degree_term: u64,
}

impl CensusReport {
    pub fn print_text(&self) {
        println!(
            "census: c3={} c4={} c5={} c6={} b1={} b2={} degree_term={}",
            self.c3, self.c4, self.c5, self.c6, self.b1, self.b2, self.degree_term
        );
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(self).unwrap());
        } else {
            self.print_text();
        }
    }
}

impl From<&CactusCensus> for CensusReport {
    fn from(census: &CactusCensus) -> Self {
        CensusReport {
            c3: census.c3,
            c4: census.c4,
            c5: census.c5,
            c6: census.c6,
            b1: census.b1,
            b2: census.b2,
            degree_term: census.degree_term,
        }
    }
}

//! Flat, serializable view of a stability report.

use horofano::{ExactReport, Rational, Verdict};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::nodes::weight_label;

/// One table row. Field order is the column order of every output format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub id: String,
    pub family: String,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub dynkin: String,
    pub omega_y: String,
    pub omega_z: String,
    pub dim_y: u64,
    pub c1_y: u64,
    pub dim_z: u64,
    /// The Fano index when `Z` has Picard rank one, otherwise the full
    /// anticanonical weight (`2w1.1+5w2.1`).
    pub c1_z: String,
    pub dim_x: u64,
    pub r_x: u64,
    pub codim_z: u64,
    pub rank_ey: Option<u64>,
    pub c1_ey: Option<i64>,
    pub rank_f: u64,
    pub c1_f: u64,
    pub mu_f: String,
    pub mu_theta: String,
    pub verdict: String,
}

pub const FIELDS: [&str; 21] = [
    "id", "family", "n", "k", "dynkin", "omega_y", "omega_z", "dim_y", "c1_y", "dim_z", "c1_z",
    "dim_x", "r_x", "codim_z", "rank_ey", "c1_ey", "rank_f", "c1_f", "mu_f", "mu_theta", "verdict",
];

/// `n/d` in lowest terms; zero is `0/1`.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_fraction(s: &str) -> Result<Rational> {
    let bad = || CliError::Usage(format!("cannot parse fraction `{s}`"));
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl From<&ExactReport> for ReportRecord {
    fn from(r: &ExactReport) -> Self {
        let t = &r.triple;
        let dynkin = t.dynkin();
        let marking = |m: &horofano::ParabolicMarking| {
            let mut coords = vec![0i64; dynkin.rank()];
            for &i in m.nodes() {
                coords[i] = 1;
            }
            weight_label(&dynkin, &coords, "w", "+")
        };
        let v = &r.variety;
        let c1_z = match v.c1_z_index() {
            Some(index) => index.to_string(),
            None => weight_label(
                &dynkin,
                &v.c1_z.to_i64s().expect("anticanonical weights are small integers"),
                "w",
                "+",
            ),
        };
        ReportRecord {
            id: t.id(),
            family: t.kind().name().to_string(),
            n: t.n(),
            k: t.k(),
            dynkin: dynkin.to_string(),
            omega_y: marking(&t.marking_y()),
            omega_z: marking(&t.marking_z()),
            dim_y: v.dim_y,
            c1_y: v.c1_y,
            dim_z: v.dim_z,
            c1_z,
            dim_x: v.dim_x,
            r_x: v.r_x,
            codim_z: v.codim_z,
            rank_ey: r.foliation.rank_ey,
            c1_ey: r.foliation.c1_ey,
            rank_f: r.foliation.rank_f,
            c1_f: r.foliation.c1_f,
            mu_f: fraction(&r.mu_f),
            mu_theta: fraction(&r.mu_theta),
            verdict: r.verdict.to_string(),
        }
    }
}

impl ReportRecord {
    /// Cell texts in `FIELDS` order; absent values are empty.
    pub fn values(&self) -> Vec<String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        vec![
            self.id.clone(),
            self.family.clone(),
            opt(&self.n),
            opt(&self.k),
            self.dynkin.clone(),
            self.omega_y.clone(),
            self.omega_z.clone(),
            self.dim_y.to_string(),
            self.c1_y.to_string(),
            self.dim_z.to_string(),
            self.c1_z.clone(),
            self.dim_x.to_string(),
            self.r_x.to_string(),
            self.codim_z.to_string(),
            opt(&self.rank_ey),
            opt(&self.c1_ey),
            self.rank_f.to_string(),
            self.c1_f.to_string(),
            self.mu_f.clone(),
            self.mu_theta.clone(),
            self.verdict.clone(),
        ]
    }

    pub fn slopes(&self) -> Result<(Rational, Rational)> {
        Ok((parse_fraction(&self.mu_f)?, parse_fraction(&self.mu_theta)?))
    }

    pub fn parsed_verdict(&self) -> Result<Verdict> {
        Ok(self.verdict.parse()?)
    }
}

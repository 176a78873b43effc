use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use super::invariants::{foliation_from_variety, FoliationInvariants, TypeData, VarietyInvariants};
use super::triple::{enumerate_triples, TripleSpec};
use crate::error::{Error, Result};
use crate::rootsys::DynkinType;
use crate::scalar::{self, Scalar};

/// Outcome of comparing `mu(F)` with `mu(T_X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `mu(F) > mu(T_X)`: the tangent bundle is not semistable.
    Unstable,
    /// `mu(F) = mu(T_X)`: semistable but not stable.
    StrictlySemistableBoundary,
    /// `mu(F) < mu(T_X)`.
    Stable,
}

impl Verdict {
    pub fn from_slopes<T: Scalar>(mu_f: &Ratio<T>, mu_theta: &Ratio<T>) -> Self {
        match mu_f.cmp(mu_theta) {
            Ordering::Greater => Verdict::Unstable,
            Ordering::Equal => Verdict::StrictlySemistableBoundary,
            Ordering::Less => Verdict::Stable,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Unstable => "Unstable",
            Verdict::StrictlySemistableBoundary => "StrictlySemistableBoundary",
            Verdict::Stable => "Stable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Unstable" => Ok(Verdict::Unstable),
            "StrictlySemistableBoundary" => Ok(Verdict::StrictlySemistableBoundary),
            "Stable" => Ok(Verdict::Stable),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport<T: Scalar> {
    pub triple: TripleSpec,
    pub variety: VarietyInvariants<T>,
    pub foliation: FoliationInvariants,
    /// `c1(F) / rank F`.
    pub mu_f: Ratio<T>,
    /// `r_X / dim X`.
    pub mu_theta: Ratio<T>,
    pub verdict: Verdict,
}

impl<T: Scalar> StabilityReport<T> {
    fn assemble(triple: TripleSpec, variety: VarietyInvariants<T>) -> Result<Self> {
        let foliation = foliation_from_variety(&triple, &variety);
        let mu_f = scalar::ratio(foliation.c1_f as i64, foliation.rank_f as i64)?;
        let mu_theta = scalar::ratio(variety.r_x as i64, variety.dim_x as i64)?;
        let verdict = Verdict::from_slopes(&mu_f, &mu_theta);
        Ok(StabilityReport {
            triple,
            variety,
            foliation,
            mu_f,
            mu_theta,
            verdict,
        })
    }
}

pub fn stability_verdict<T: Scalar>(triple: &TripleSpec) -> Result<StabilityReport<T>> {
    let data = TypeData::for_triple(triple)?;
    StabilityReport::assemble(*triple, data.variety_invariants(triple)?)
}

/// Reports for many triples, building each root system once. Output order
/// matches `triples`.
pub fn stability_reports<T: Scalar>(triples: &[TripleSpec]) -> Result<Vec<StabilityReport<T>>> {
    let mut groups: Vec<(DynkinType, Vec<usize>)> = Vec::new();
    let mut group_of: HashMap<DynkinType, usize> = HashMap::new();
    for (i, t) in triples.iter().enumerate() {
        let dynkin = t.dynkin();
        let g = *group_of.entry(dynkin.clone()).or_insert_with(|| {
            groups.push((dynkin, Vec::new()));
            groups.len() - 1
        });
        groups[g].1.push(i);
    }

    let mut out: Vec<Option<StabilityReport<T>>> = vec![None; triples.len()];
    for (_, members) in &groups {
        let data = TypeData::for_triple(&triples[members[0]])?;
        for &i in members {
            let t = triples[i];
            out[i] = Some(StabilityReport::assemble(t, data.variety_invariants(&t)?)?);
        }
    }
    Ok(out.into_iter().map(|r| r.expect("every triple grouped")).collect())
}

/// Reports for the whole catalog up to rank `max_n`.
pub fn catalog_reports<T: Scalar>(max_n: u32) -> Result<Vec<StabilityReport<T>>> {
    stability_reports(&enumerate_triples(max_n)?)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn report(id: &str) -> StabilityReport<BigInt> {
        stability_verdict(&id.parse().unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(n.into(), d.into())
    }

    #[test]
    fn verdict_examples() {
        let r = report("F4horo");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(1, 3), q(6, 23), Verdict::Unstable));
        let r = report("Bn:n=3");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(1, 2), q(5, 9), Verdict::Stable));
        let r = report("PasA1G2");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(0, 1), q(6, 8), Verdict::Stable));
        let r = report("Bn:n=4");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(1, 2), q(6, 14), Verdict::Unstable));
        let r = report("G2horo");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(1, 2), q(4, 7), Verdict::Stable));
        let r = report("PasF4");
        assert_eq!((r.mu_f, r.mu_theta, r.verdict), (q(0, 1), q(8, 23), Verdict::Stable));
    }

    #[test]
    fn ties_get_their_own_verdict() {
        let half = q(1, 2);
        assert_eq!(
            Verdict::from_slopes(&half, &q(2, 4)),
            Verdict::StrictlySemistableBoundary
        );
        for v in [Verdict::Unstable, Verdict::StrictlySemistableBoundary, Verdict::Stable] {
            assert_eq!(v.name().parse::<Verdict>(), Ok(v));
        }
    }

    #[test]
    fn batched_reports_match_single_reports() {
        let triples = enumerate_triples(6).unwrap();
        let batch = stability_reports::<BigInt>(&triples).unwrap();
        for (t, r) in triples.iter().zip(&batch) {
            assert_eq!(&stability_verdict::<BigInt>(t).unwrap(), r);
        }
    }

    #[test]
    fn fixed_width_and_big_scalars_agree() {
        let small = catalog_reports::<i64>(8).unwrap();
        let big = catalog_reports::<BigInt>(8).unwrap();
        for (s, b) in small.iter().zip(&big) {
            assert_eq!(s.verdict, b.verdict);
            assert_eq!(s.mu_theta.numer().to_string(), b.mu_theta.numer().to_string());
            assert_eq!(s.mu_theta.denom().to_string(), b.mu_theta.denom().to_string());
            assert_eq!(s.variety.c1_z.to_i64s(), b.variety.c1_z.to_i64s());
        }
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flagvar::ParabolicMarking;
use crate::rootsys::{DynkinType, SimpleFactor};

/// A variety of the catalog, identified by its family and parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(B_n, w_{n-1}, w_n)`, `n >= 3`.
    BnSpinor { n: u32 },
    /// `(B_3, w_1, w_3)`.
    B3Special,
    /// `(C_n, w_k, w_{k-1})`, `2 <= k <= n`.
    Cn { n: u32, k: u32 },
    /// `(F_4, w_2, w_3)`.
    F4Horo,
    /// `(G_2, w_long, w_short)`.
    G2Horo,
    /// The non-horospherical `F_4` variety, `(F_4, w_1, w_3)`.
    PasF4,
    /// The non-horospherical `A_1 x G_2` variety, `(A_1 x G_2, w_long, w_0 + w_short)`.
    PasA1G2,
}

/// [`Family`] without its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    BnSpinor,
    B3Special,
    Cn,
    F4Horo,
    G2Horo,
    PasF4,
    PasA1G2,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::BnSpinor,
        FamilyKind::B3Special,
        FamilyKind::Cn,
        FamilyKind::F4Horo,
        FamilyKind::G2Horo,
        FamilyKind::PasF4,
        FamilyKind::PasA1G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::BnSpinor => "BnSpinor",
            FamilyKind::B3Special => "B3Special",
            FamilyKind::Cn => "Cn",
            FamilyKind::F4Horo => "F4Horo",
            FamilyKind::G2Horo => "G2Horo",
            FamilyKind::PasF4 => "PasF4",
            FamilyKind::PasA1G2 => "PasA1G2",
        }
    }

    pub fn is_horospherical(self) -> bool {
        !matches!(self, FamilyKind::PasF4 | FamilyKind::PasA1G2)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::BnSpinor { .. } => FamilyKind::BnSpinor,
            Family::B3Special => FamilyKind::B3Special,
            Family::Cn { .. } => FamilyKind::Cn,
            Family::F4Horo => FamilyKind::F4Horo,
            Family::G2Horo => FamilyKind::G2Horo,
            Family::PasF4 => FamilyKind::PasF4,
            Family::PasA1G2 => FamilyKind::PasA1G2,
        }
    }
}

/// A validated catalog entry together with its associated triple
/// `(D, w_Y, w_Z)`, with weights given as markings in Bourbaki numbering
/// (0-based global nodes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleSpec {
    family: Family,
}

impl TripleSpec {
    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::BnSpinor { n } if n < 3 => {
                Err(Error::InvalidTriple(format!("Bn needs n >= 3, got n={n}")))
            }
            Family::Cn { n, k } if n < 2 || k < 2 || k > n => Err(Error::InvalidTriple(format!(
                "Cn needs 2 <= k <= n, got n={n}, k={k}"
            ))),
            _ => Ok(TripleSpec { family }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn kind(&self) -> FamilyKind {
        self.family.kind()
    }

    pub fn is_horospherical(&self) -> bool {
        self.kind().is_horospherical()
    }

    /// The rank parameter `n`, for the parametric families.
    pub fn n(&self) -> Option<u32> {
        match self.family {
            Family::BnSpinor { n } | Family::Cn { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<u32> {
        match self.family {
            Family::Cn { k, .. } => Some(k),
            _ => None,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        let factors = match self.family {
            Family::BnSpinor { n } => vec![SimpleFactor::B(n as usize)],
            Family::B3Special => vec![SimpleFactor::B(3)],
            Family::Cn { n, .. } => vec![SimpleFactor::C(n as usize)],
            Family::F4Horo | Family::PasF4 => vec![SimpleFactor::F4],
            Family::G2Horo => vec![SimpleFactor::G2],
            Family::PasA1G2 => vec![SimpleFactor::A(1), SimpleFactor::G2],
        };
        DynkinType::new(factors).expect("catalog types are valid")
    }

    /// Marking of `w_Y` (always a single node).
    pub fn marking_y(&self) -> ParabolicMarking {
        ParabolicMarking::single(match self.family {
            Family::BnSpinor { n } => n as usize - 2,
            Family::B3Special => 0,
            Family::Cn { k, .. } => k as usize - 1,
            Family::F4Horo => 1,
            // Long node of G2.
            Family::G2Horo => 1,
            Family::PasF4 => 0,
            // Long node of the G2 factor (global node 2).
            Family::PasA1G2 => 2,
        })
    }

    /// Marking of `w_Z`; two nodes for `PasA1G2`, one otherwise.
    pub fn marking_z(&self) -> ParabolicMarking {
        match self.family {
            Family::BnSpinor { n } => ParabolicMarking::single(n as usize - 1),
            Family::B3Special => ParabolicMarking::single(2),
            Family::Cn { k, .. } => ParabolicMarking::single(k as usize - 2),
            Family::F4Horo => ParabolicMarking::single(2),
            Family::G2Horo => ParabolicMarking::single(0),
            Family::PasF4 => ParabolicMarking::single(2),
            // A1 node plus the short node of G2.
            Family::PasA1G2 => ParabolicMarking::new([0, 1]).expect("nonempty"),
        }
    }

    /// Identifier in the CLI grammar, e.g. `Cn:n=4:k=3`.
    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TripleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::BnSpinor { n } => write!(f, "Bn:n={n}"),
            Family::B3Special => f.write_str("B3special"),
            Family::Cn { n, k } => write!(f, "Cn:n={n}:k={k}"),
            Family::F4Horo => f.write_str("F4horo"),
            Family::G2Horo => f.write_str("G2horo"),
            Family::PasF4 => f.write_str("PasF4"),
            Family::PasA1G2 => f.write_str("PasA1G2"),
        }
    }
}

fn parse_param(part: Option<&str>, key: &str, id: &str) -> Result<u32> {
    part.and_then(|p| p.strip_prefix(key))
        .and_then(|p| p.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse(id.to_string()))
}

impl FromStr for TripleSpec {
    type Err = Error;

    fn from_str(id: &str) -> Result<Self> {
        let mut parts = id.trim().split(':');
        let head = parts.next().unwrap_or_default();
        let family = match head.to_ascii_lowercase().as_str() {
            "bn" => Family::BnSpinor {
                n: parse_param(parts.next(), "n", id)?,
            },
            "cn" => Family::Cn {
                n: parse_param(parts.next(), "n", id)?,
                k: parse_param(parts.next(), "k", id)?,
            },
            "b3special" => Family::B3Special,
            "f4horo" => Family::F4Horo,
            "g2horo" => Family::G2Horo,
            "pasf4" => Family::PasF4,
            "pasa1g2" => Family::PasA1G2,
            _ => return Err(Error::Parse(id.to_string())),
        };
        if parts.next().is_some() {
            return Err(Error::Parse(id.to_string()));
        }
        TripleSpec::new(family)
    }
}

/// The catalog up to rank `max_n`, in catalog order with parameters
/// ascending.
pub fn enumerate_triples(max_n: u32) -> Result<Vec<TripleSpec>> {
    if max_n < 3 {
        return Err(Error::CatalogBound(max_n));
    }
    let mut out = Vec::new();
    out.extend((3..=max_n).map(|n| Family::BnSpinor { n }));
    out.push(Family::B3Special);
    for n in 2..=max_n {
        out.extend((2..=n).map(|k| Family::Cn { n, k }));
    }
    out.extend([
        Family::F4Horo,
        Family::G2Horo,
        Family::PasF4,
        Family::PasA1G2,
    ]);
    out.into_iter().map(TripleSpec::new).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn catalog_sizes() {
        let three = enumerate_triples(3).unwrap();
        let ids: Vec<String> = three.iter().map(|t| t.id()).collect();
        assert_eq!(
            ids,
            [
                "Bn:n=3",
                "B3special",
                "Cn:n=2:k=2",
                "Cn:n=3:k=2",
                "Cn:n=3:k=3",
                "F4horo",
                "G2horo",
                "PasF4",
                "PasA1G2"
            ]
        );
        assert_eq!(enumerate_triples(4).unwrap().len(), 13);
        assert_eq!(enumerate_triples(2), Err(Error::CatalogBound(2)));
        let big = enumerate_triples(30).unwrap();
        let unique: HashSet<_> = big.iter().collect();
        assert_eq!(unique.len(), big.len());
    }

    #[test]
    fn ids_round_trip() {
        for t in enumerate_triples(6).unwrap() {
            assert_eq!(t.id().parse::<TripleSpec>().unwrap(), t);
        }
        assert!("Cn:n=4:k=5".parse::<TripleSpec>().is_err());
        assert!("Bn:n=2".parse::<TripleSpec>().is_err());
        assert!("Bn".parse::<TripleSpec>().is_err());
        assert!("E8horo".parse::<TripleSpec>().is_err());
        assert!("PasF4:n=3".parse::<TripleSpec>().is_err());
    }

    #[test]
    fn markings() {
        for t in enumerate_triples(5).unwrap() {
            let rank = t.dynkin().rank();
            assert!(t.marking_y().is_maximal());
            assert_eq!(t.marking_z().is_maximal(), t.kind() != FamilyKind::PasA1G2);
            assert!(t.marking_y().nodes().iter().all(|&i| i < rank));
            assert!(t.marking_z().nodes().iter().all(|&i| i < rank));
        }
    }
}

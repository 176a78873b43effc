use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A connected Dynkin diagram of a supported type.
///
/// Nodes follow the Bourbaki numbering; every supported diagram is a chain
/// `1 - 2 - ... - n`, and only the root lengths distinguish the types:
///
/// * `B(n)`: node `n` is the short end,
/// * `C(n)`: node `n` is the long end,
/// * `F4`: nodes 1, 2 long, nodes 3, 4 short,
/// * `G2`: node 1 short, node 2 long.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleFactor {
    A(usize),
    B(usize),
    C(usize),
    F4,
    G2,
}

impl SimpleFactor {
    pub fn rank(&self) -> usize {
        match *self {
            SimpleFactor::A(n) | SimpleFactor::B(n) | SimpleFactor::C(n) => n,
            SimpleFactor::F4 => 4,
            SimpleFactor::G2 => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (family, rank, min) = match *self {
            SimpleFactor::A(n) => ('A', n, 1),
            SimpleFactor::B(n) => ('B', n, 2),
            SimpleFactor::C(n) => ('C', n, 2),
            SimpleFactor::F4 | SimpleFactor::G2 => return Ok(()),
        };
        if rank < min {
            return Err(Error::InvalidRank { family, rank, min });
        }
        Ok(())
    }

    /// Half squared lengths `(a_i, a_i) / 2` of the simple roots, with long
    /// roots normalized to squared length 2.
    pub fn half_squared_lengths(&self) -> Vec<Ratio<i64>> {
        let one = Ratio::from_integer(1);
        let half = Ratio::new(1, 2);
        match *self {
            SimpleFactor::A(n) => vec![one; n],
            SimpleFactor::B(n) => {
                let mut d = vec![one; n];
                d[n - 1] = half;
                d
            }
            SimpleFactor::C(n) => {
                let mut d = vec![half; n];
                d[n - 1] = one;
                d
            }
            SimpleFactor::F4 => vec![one, one, half, half],
            SimpleFactor::G2 => vec![Ratio::new(1, 3), one],
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleFactor::A(n) => write!(f, "A{n}"),
            SimpleFactor::B(n) => write!(f, "B{n}"),
            SimpleFactor::C(n) => write!(f, "C{n}"),
            SimpleFactor::F4 => f.write_str("F4"),
            SimpleFactor::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for SimpleFactor {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        let mut chars = token.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse(token.to_string()))?
            .to_ascii_uppercase();
        let digits = chars.as_str();
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(token.to_string()))?;
        let factor = match (letter, rank) {
            ('A', n) => SimpleFactor::A(n),
            ('B', n) => SimpleFactor::B(n),
            ('C', n) => SimpleFactor::C(n),
            ('F', 4) => SimpleFactor::F4,
            ('G', 2) => SimpleFactor::G2,
            _ => return Err(Error::UnsupportedType(token.to_string())),
        };
        factor.validate()?;
        Ok(factor)
    }
}

/// An ordered product of simple factors. Global node `g` belongs to the
/// factor whose node range contains it; ranges are concatenated in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    factors: Vec<SimpleFactor>,
}

impl DynkinType {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyType);
        }
        for factor in &factors {
            factor.validate()?;
        }
        Ok(DynkinType { factors })
    }

    pub fn simple(factor: SimpleFactor) -> Result<Self> {
        Self::new(vec![factor])
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(SimpleFactor::rank).sum()
    }

    /// First global node of each factor.
    pub fn offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, f| {
                let start = *acc;
                *acc += f.rank();
                Some(start)
            })
            .collect()
    }

    /// Maps a global node to `(factor position, local node)`, both 0-based.
    pub fn locate(&self, node: usize) -> Option<(usize, usize)> {
        let mut start = 0;
        for (pos, factor) in self.factors.iter().enumerate() {
            if node < start + factor.rank() {
                return Some((pos, node - start));
            }
            start += factor.rank();
        }
        None
    }

    /// Inverse of [`locate`](Self::locate).
    pub fn global(&self, factor: usize, local: usize) -> Option<usize> {
        let f = self.factors.get(factor)?;
        (local < f.rank()).then(|| self.offsets()[factor] + local)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Parses `"B4"`, `"A1xG2"`, ... Factors are joined by `x` (or `×`).
    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Err(Error::EmptyType);
        }
        let factors = spec
            .split(['x', 'X', '×'])
            .map(str::parse)
            .collect::<Result<Vec<SimpleFactor>>>()?;
        Self::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products() {
        let d: DynkinType = "A1xG2".parse().unwrap();
        assert_eq!(d.factors(), &[SimpleFactor::A(1), SimpleFactor::G2]);
        assert_eq!(d.rank(), 3);
        assert_eq!(d.offsets(), vec![0, 1]);
        assert_eq!(d.locate(2), Some((1, 1)));
        assert_eq!(d.global(1, 0), Some(1));
        assert_eq!(d.to_string(), "A1xG2");
    }

    #[test]
    fn rejects_unsupported_and_bad_ranks() {
        assert_eq!(
            "E8".parse::<DynkinType>(),
            Err(Error::UnsupportedType("E8".into()))
        );
        assert_eq!(
            "A1xD4".parse::<DynkinType>(),
            Err(Error::UnsupportedType("D4".into()))
        );
        assert!(matches!(
            "B1".parse::<DynkinType>(),
            Err(Error::InvalidRank { family: 'B', .. })
        ));
        assert!(matches!("Q".parse::<DynkinType>(), Err(Error::Parse(_))));
        assert_eq!("".parse::<DynkinType>(), Err(Error::EmptyType));
        assert_eq!(DynkinType::new(vec![]), Err(Error::EmptyType));
    }
}

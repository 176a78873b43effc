use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A weight in the fundamental-weight basis, with exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight<T: Scalar> {
    coeffs: Vec<Ratio<T>>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(coeffs: Vec<Ratio<T>>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![Ratio::zero(); rank],
        }
    }

    /// The fundamental weight of `node`.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coeffs[node] = Ratio::from_integer(T::one());
        w
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|&c| scalar::int(c).map(Ratio::from_integer))
            .collect::<Result<_>>()?;
        Ok(Weight { coeffs })
    }

    pub fn coeffs(&self) -> &[Ratio<T>] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Ratio::is_integer)
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Nodes with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| scalar::add(a, b))
            .collect::<Result<_>>()?;
        Ok(Weight { coeffs })
    }

    pub fn scaled(&self, factor: &Ratio<T>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| scalar::mul(c, factor))
            .collect::<Result<_>>()?;
        Ok(Weight { coeffs })
    }

    /// Integer coefficients as `i64`, if every coefficient is an integer
    /// that fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(scalar::ratio_to_i64).collect()
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

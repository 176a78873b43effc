//! Generalized flag varieties `G/P`.
//!
//! A parabolic is given by its marked nodes (simple roots outside the Levi
//! factor). The nilradical roots are the positive roots whose support meets
//! the marking: their number is `dim G/P` and their sum is `-K_{G/P}`.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicMarking {
    nodes: Vec<usize>,
}

impl ParabolicMarking {
    pub fn new(nodes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if nodes.is_empty() {
            return Err(Error::EmptyMarking);
        }
        Ok(ParabolicMarking {
            nodes: nodes.into_iter().collect(),
        })
    }

    pub fn single(node: usize) -> Self {
        ParabolicMarking { nodes: vec![node] }
    }

    /// The Borel subgroup: every node marked.
    pub fn complete(rank: usize) -> Result<Self> {
        Self::new(0..rank)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    pub fn union(&self, other: &Self) -> Self {
        let nodes: BTreeSet<usize> = self.nodes.iter().chain(&other.nodes).copied().collect();
        ParabolicMarking {
            nodes: nodes.into_iter().collect(),
        }
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        let count = rs.rank();
        match self.nodes.last() {
            Some(&node) if node >= count => Err(Error::NodeOutOfRange { node, count }),
            Some(_) => Ok(()),
            None => Err(Error::EmptyMarking),
        }
    }

    /// Whether `root` lies in the nilradical of this parabolic.
    pub fn meets(&self, root: &Root) -> bool {
        let coeffs = root.coeffs();
        self.nodes.iter().any(|&i| coeffs[i] != 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagInvariants<T: Scalar> {
    pub dimension: u64,
    pub picard_rank: usize,
    pub anticanonical: Weight<T>,
    /// Present exactly for maximal parabolics.
    pub index: Option<u64>,
}

fn nilradical<'a>(
    rs: &'a RootSystem,
    marking: &'a ParabolicMarking,
) -> impl Iterator<Item = &'a Root> + 'a {
    rs.positive_roots().iter().filter(|r| marking.meets(r))
}

pub fn flag_dimension(rs: &RootSystem, marking: &ParabolicMarking) -> Result<u64> {
    marking.check(rs)?;
    Ok(nilradical(rs, marking).count() as u64)
}

/// `-K_{G/P}` in the fundamental-weight basis.
pub fn anticanonical_weight<T: Scalar>(
    rs: &RootSystem,
    marking: &ParabolicMarking,
) -> Result<Weight<T>> {
    marking.check(rs)?;
    let mut sum = vec![0i64; rs.rank()];
    for root in nilradical(rs, marking) {
        for (acc, &c) in sum.iter_mut().zip(root.coeffs()) {
            *acc += c as i64;
        }
    }
    Weight::from_integers(&rs.to_weight_coords(&sum))
}

/// Fano index of `G/P` for a maximal parabolic: the coefficient of
/// `-K_{G/P}` on the marked node.
pub fn fano_index(rs: &RootSystem, marking: &ParabolicMarking) -> Result<u64> {
    marking.check(rs)?;
    if !marking.is_maximal() {
        return Err(Error::NotMaximal(marking.len()));
    }
    let node = marking.nodes()[0];
    let coeff: i64 = nilradical(rs, marking)
        .map(|root| rs.simple_coroot_pairing(root.coeffs(), node))
        .sum();
    u64::try_from(coeff).map_err(|_| Error::Overflow)
}

pub fn flag_invariants<T: Scalar>(
    rs: &RootSystem,
    marking: &ParabolicMarking,
) -> Result<FlagInvariants<T>> {
    let anticanonical = anticanonical_weight(rs, marking)?;
    let index = if marking.is_maximal() {
        let coeff = &anticanonical.coeffs()[marking.nodes()[0]];
        let value = scalar::ratio_to_i64(coeff).ok_or(Error::Overflow)?;
        Some(u64::try_from(value).map_err(|_| Error::Overflow)?)
    } else {
        None
    };
    Ok(FlagInvariants {
        dimension: flag_dimension(rs, marking)?,
        picard_rank: marking.len(),
        anticanonical,
        index,
    })
}

/// Dimension and anticanonical weight of `G/P_i` for every maximal
/// parabolic `P_i` at once, plus `dim G/P_{i,j}` for every pair of nodes.
///
/// Root supports are intervals of the chain, so a root meets the marking
/// `{m}` exactly for `m` in its support span: contributions are added to
/// a whole range of rows through difference arrays.
#[derive(Clone, Debug)]
pub struct MaximalFlags {
    dimensions: Vec<u64>,
    anticanonical: Vec<Vec<i64>>,
    /// `covering[a][b]`, `a <= b`: roots whose support contains `a` and `b`.
    covering: Vec<Vec<u64>>,
}

impl MaximalFlags {
    pub fn new(rs: &RootSystem) -> Self {
        let rank = rs.rank();
        let mut dim_diff = vec![0i64; rank + 1];
        let mut diff = vec![vec![0i64; rank]; rank + 1];
        let mut spans = vec![vec![0u64; rank]; rank];
        for idx in 0..rs.positive_roots().len() {
            let (lo, hi) = rs.support_span(idx);
            dim_diff[lo] += 1;
            dim_diff[hi + 1] -= 1;
            spans[lo][hi] += 1;
            for &(i, value) in rs.root_weight(idx) {
                diff[lo][i] += value;
                diff[hi + 1][i] -= value;
            }
        }

        let mut dimensions = Vec::with_capacity(rank);
        let mut anticanonical = Vec::with_capacity(rank);
        let mut dim = 0i64;
        let mut row = vec![0i64; rank];
        for m in 0..rank {
            dim += dim_diff[m];
            for (acc, d) in row.iter_mut().zip(&diff[m]) {
                *acc += d;
            }
            dimensions.push(dim as u64);
            anticanonical.push(row.clone());
        }

        // covering[a][b] = sum over lo <= a, hi >= b of spans[lo][hi]
        for lo_row in spans.iter_mut() {
            for hi in (0..rank.saturating_sub(1)).rev() {
                lo_row[hi] += lo_row[hi + 1];
            }
        }
        for a in 1..rank {
            let (done, rest) = spans.split_at_mut(a);
            for (acc, prev) in rest[0].iter_mut().zip(&done[a - 1]) {
                *acc += prev;
            }
        }

        MaximalFlags {
            dimensions,
            anticanonical,
            covering: spans,
        }
    }

    pub fn dimension(&self, node: usize) -> u64 {
        self.dimensions[node]
    }

    /// `dim G/P_{a,b}` by inclusion-exclusion.
    pub fn pair_dimension(&self, a: usize, b: usize) -> u64 {
        let (lo, hi) = (a.min(b), a.max(b));
        if lo == hi {
            return self.dimensions[lo];
        }
        self.dimensions[lo] + self.dimensions[hi] - self.covering[lo][hi]
    }

    pub fn fano_index(&self, node: usize) -> u64 {
        self.anticanonical[node][node] as u64
    }

    pub fn anticanonical_coords(&self, node: usize) -> &[i64] {
        &self.anticanonical[node]
    }

    pub fn anticanonical<T: Scalar>(&self, node: usize) -> Result<Weight<T>> {
        Weight::from_integers(&self.anticanonical[node])
    }
}

/// `2 rho` as a weight, the anticanonical class of the complete flag.
pub fn two_rho<T: Scalar>(rs: &RootSystem) -> Result<Weight<T>> {
    rs.rho::<T>().scaled(&Ratio::from_integer(scalar::int(2)?))
}

use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::{DynkinType, Root, SimpleFactor, Weight};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Positive roots and Cartan data of a (possibly product) Dynkin type.
///
/// `cartan[i][j] = <a_j, a_i^v>`, so `D * A` is symmetric for the diagonal
/// symmetrizer `D = diag(d_i)`, `d_i = (a_i, a_i) / 2`. Long roots have
/// squared length 2 in each factor.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<Ratio<i64>>,
    neighbors: Vec<Vec<usize>>,
    positive_roots: Vec<Root>,
    /// First and last node of each positive root's support. Supports are
    /// connected, and every supported diagram is a chain, so this is the
    /// whole support.
    spans: Vec<(usize, usize)>,
    /// Nonzero fundamental-weight coordinates of each positive root.
    weights: Vec<(usize, i64)>,
    weight_offsets: Vec<usize>,
    index: OnceLock<FxHashMap<Root, usize>>,
}

impl RootSystem {
    /// Builds the root system of `dynkin`. Positive roots are grouped by
    /// factor and ordered by height within a factor.
    pub fn new(dynkin: DynkinType) -> Result<Self> {
        for factor in dynkin.factors() {
            factor.validate()?;
        }
        let rank = dynkin.rank();
        let mut cartan = vec![vec![0; rank]; rank];
        let mut symmetrizer = Vec::with_capacity(rank);
        let mut neighbors = vec![Vec::new(); rank];
        let mut positive_roots = Vec::new();
        let mut spans = Vec::new();
        let mut weights = Vec::new();
        let mut weight_offsets = vec![0];

        for (&factor, offset) in dynkin.factors().iter().zip(dynkin.offsets()) {
            let local = FactorData::new(factor);
            for i in 0..local.rank() {
                for j in 0..local.rank() {
                    cartan[offset + i][offset + j] = local.cartan[i][j];
                }
                neighbors[offset + i] = local.neighbors[i].iter().map(|j| offset + j).collect();
            }
            symmetrizer.extend(local.half_lengths.iter().copied());
            let closure = local.positive_roots();
            let width = local.rank();
            for (coeffs, &(lo, hi)) in closure.coeffs.chunks_exact(width).zip(&closure.spans) {
                let mut global = vec![0i8; rank];
                global[offset..offset + width].copy_from_slice(coeffs);
                positive_roots.push(Root::new(global));
                spans.push((offset + lo, offset + hi));
            }
            weights.extend(closure.weights.iter().map(|&(i, v)| (offset + i, v)));
            let base = weight_offsets.last().copied().unwrap_or(0);
            weight_offsets.extend(closure.weight_offsets[1..].iter().map(|o| base + o));
        }

        Ok(RootSystem {
            dynkin,
            cartan,
            symmetrizer,
            neighbors,
            positive_roots,
            spans,
            weights,
            weight_offsets,
            index: OnceLock::new(),
        })
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Ratio<i64>] {
        &self.symmetrizer
    }

    /// Nodes joined to `node` by an edge of the diagram.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.neighbors[node]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// First and last node of the support of `positive_roots()[i]`.
    pub fn support_span(&self, i: usize) -> (usize, usize) {
        self.spans[i]
    }

    /// Nonzero fundamental-weight coordinates of `positive_roots()[i]`,
    /// as `(node, <a, a_node^v>)` sorted by node.
    pub fn root_weight(&self, i: usize) -> &[(usize, i64)] {
        &self.weights[self.weight_offsets[i]..self.weight_offsets[i + 1]]
    }

    pub fn simple_root(&self, node: usize) -> Root {
        Root::simple(self.rank(), node)
    }

    /// Whether `root` is a (positive or negative) root of this system.
    pub fn contains(&self, root: &Root) -> bool {
        if root.rank() != self.rank() {
            return false;
        }
        let index = self.index.get_or_init(|| {
            self.positive_roots
                .iter()
                .enumerate()
                .map(|(i, r)| (r.clone(), i))
                .collect()
        });
        if root.is_positive() {
            index.contains_key(root)
        } else {
            index.contains_key(&-root)
        }
    }

    /// `(a_i, a_j)` for simple roots.
    pub fn inner_product_simple(&self, i: usize, j: usize) -> Ratio<i64> {
        self.symmetrizer[i] * Ratio::from_integer(self.cartan[i][j] as i64)
    }

    /// `(a, a) / 2` for an arbitrary vector in the root lattice.
    pub fn half_norm(&self, coeffs: &[i8]) -> Ratio<i64> {
        let mut total = Ratio::zero();
        for (i, &ci) in coeffs.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            let ci = ci as i64;
            total += self.symmetrizer[i] * Ratio::from_integer(2 * ci * ci);
            for &j in &self.neighbors[i] {
                let cj = coeffs[j] as i64;
                if cj != 0 {
                    total += self.inner_product_simple(i, j) * Ratio::from_integer(ci * cj);
                }
            }
        }
        total / 2
    }

    /// `<a, a_node^v>` for `a` in simple-root coordinates.
    pub fn simple_coroot_pairing<C: Copy + Into<i64>>(&self, coeffs: &[C], node: usize) -> i64 {
        let row = &self.cartan[node];
        let mut total = 2 * coeffs[node].into();
        for &j in &self.neighbors[node] {
            total += row[j] as i64 * coeffs[j].into();
        }
        total
    }

    /// Converts a root-lattice vector to fundamental-weight coordinates by
    /// pairing it against every simple coroot.
    pub fn to_weight_coords<C: Copy + Into<i64>>(&self, coeffs: &[C]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| self.simple_coroot_pairing(coeffs, i))
            .collect()
    }

    /// Coefficients of the coroot `a^v` in the basis of simple coroots.
    /// These are integers for every root.
    pub fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        let half_norm = self.half_norm(root.coeffs());
        root.coeffs()
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&c, d)| {
                let k = Ratio::from_integer(c as i64) * d / half_norm;
                debug_assert!(k.is_integer());
                k.to_integer()
            })
            .collect()
    }

    /// `<lambda, a^v> = 2 (lambda, a) / (a, a)`.
    pub fn coroot_pairing<T: Scalar>(&self, weight: &Weight<T>, root: &Root) -> Result<Ratio<T>> {
        self.check_weight(weight)?;
        if !self.contains(root) {
            return Err(Error::NotARoot(root.coeffs().to_vec()));
        }
        pair_coroot(weight, &self.coroot_coords(root))
    }

    /// Half the sum of positive roots: every fundamental coefficient is 1.
    pub fn rho<T: Scalar>(&self) -> Weight<T> {
        Weight::new(vec![Ratio::one(); self.rank()])
    }

    /// Dimension of the irreducible representation with highest weight
    /// `weight`, by the Weyl dimension formula.
    pub fn weyl_dim<T: Scalar>(&self, weight: &Weight<T>) -> Result<T> {
        self.check_weight(weight)?;
        if !weight.is_integral() || !weight.is_dominant() {
            return Err(Error::NotDominantIntegral);
        }
        let rho = self.rho::<T>();
        let shifted = weight.checked_add(&rho)?;
        let mut numer = Ratio::one();
        let mut denom = Ratio::one();
        for root in &self.positive_roots {
            let coroot = self.coroot_coords(root);
            numer = scalar::mul(&numer, &pair_coroot(&shifted, &coroot)?)?;
            denom = scalar::mul(&denom, &pair_coroot(&rho, &coroot)?)?;
        }
        let quotient = numer / denom;
        debug_assert!(quotient.is_integer());
        Ok(quotient.to_integer())
    }

    fn check_weight<T: Scalar>(&self, weight: &Weight<T>) -> Result<()> {
        if weight.rank() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: weight.rank(),
            });
        }
        Ok(())
    }
}

fn pair_coroot<T: Scalar>(weight: &Weight<T>, coroot: &[i64]) -> Result<Ratio<T>> {
    let mut total = Ratio::zero();
    for (c, &k) in weight.coeffs().iter().zip(coroot) {
        if k != 0 {
            let term = scalar::mul(c, &Ratio::from_integer(scalar::int(k)?))?;
            total = scalar::add(&total, &term)?;
        }
    }
    Ok(total)
}

/// Cartan data of one simple factor in local coordinates.
struct FactorData {
    cartan: Vec<Vec<i32>>,
    half_lengths: Vec<Ratio<i64>>,
    neighbors: Vec<Vec<usize>>,
}

impl FactorData {
    fn new(factor: SimpleFactor) -> Self {
        let half_lengths = factor.half_squared_lengths();
        let rank = half_lengths.len();
        let mut cartan = vec![vec![0; rank]; rank];
        let mut neighbors = vec![Vec::new(); rank];
        for i in 0..rank {
            cartan[i][i] = 2;
            // Every supported diagram is a chain.
            for j in [i.wrapping_sub(1), i + 1] {
                if j < rank {
                    neighbors[i].push(j);
                    // (a_i, a_j) = -max(d_i, d_j) for joined nodes.
                    let bond = -half_lengths[i].max(half_lengths[j]) / half_lengths[i];
                    debug_assert!(bond.is_integer());
                    cartan[i][j] = bond.to_integer() as i32;
                }
            }
        }
        FactorData {
            cartan,
            half_lengths,
            neighbors,
        }
    }

    fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `a_i` in fundamental-weight coordinates: column `i` of the Cartan
    /// matrix, as sorted sparse entries.
    fn column(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let mut nodes: Vec<usize> = self.neighbors[i].iter().copied().chain([i]).collect();
        nodes.sort_unstable();
        nodes.into_iter().map(move |j| (j, self.cartan[j][i] as i64))
    }

    /// Closure of the simple roots under root strings, level by level in
    /// height. For each root of the current level we know `p_i`, the
    /// length of the descending `a_i`-string through it; `a + a_i` is a
    /// root exactly when `<a, a_i^v> - p_i < 0`. Both terms are sparse, so
    /// the candidates are read off the nonzero weight coordinates and the
    /// recorded strings instead of scanning every node.
    ///
    /// Roots of a level are deduplicated by an additive hash, so that the
    /// hash of `a + a_i` costs O(1).
    fn positive_roots(&self) -> Closure {
        let rank = self.rank();
        let keys: Vec<u64> = (0..rank as u64).map(splitmix).collect();
        let mut out = Closure {
            coeffs: vec![0i8; rank * rank],
            spans: (0..rank).map(|i| (i, i)).collect(),
            weights: Vec::new(),
            weight_offsets: vec![0],
        };
        for i in 0..rank {
            out.coeffs[i * rank + i] = 1;
            out.weights.extend(self.column(i));
            out.weight_offsets.push(out.weights.len());
        }
        let columns: Vec<Vec<(usize, i64)>> = (0..rank).map(|i| self.column(i).collect()).collect();
        let mut hashes = keys.clone();
        // (root, node, p) for every nonzero string length of the level,
        // sorted by root.
        let mut strings: Vec<(usize, usize, u8)> = Vec::new();
        let mut level = 0..rank;
        let mut weight = Vec::new();
        let mut candidates = Vec::new();

        while !level.is_empty() {
            let start = out.spans.len();
            let mut next_strings = Vec::new();
            let mut seen: FxHashMap<u64, usize> = FxHashMap::default();
            let mut cursor = 0;
            for a in level.clone() {
                let from = cursor;
                while cursor < strings.len() && strings[cursor].0 == a {
                    cursor += 1;
                }
                let ps = &strings[from..cursor];
                weight.clear();
                weight.extend_from_slice(out.weight(a));

                candidates.clear();
                for &(i, w) in &weight {
                    let p = ps.iter().find(|s| s.1 == i).map_or(0, |s| s.2);
                    if w - (p as i64) < 0 {
                        candidates.push((i, p));
                    }
                }
                for &(_, i, p) in ps {
                    let w = weight.iter().find(|e| e.0 == i).map_or(0, |e| e.1);
                    if w >= 0 && w - (p as i64) < 0 {
                        candidates.push((i, p));
                    }
                }
                candidates.sort_unstable();

                let (lo, hi) = out.spans[a];
                for &(i, p) in &candidates {
                    let span = (lo.min(i), hi.max(i));
                    let row_a = a * rank;
                    let same = |b: usize| {
                        let row_b = b * rank;
                        out.spans[b] == span
                            && out.coeffs[row_b + i] == out.coeffs[row_a + i] + 1
                            && out.coeffs[row_b + span.0..row_b + i]
                                == out.coeffs[row_a + span.0..row_a + i]
                            && out.coeffs[row_b + i + 1..=row_b + span.1]
                                == out.coeffs[row_a + i + 1..=row_a + span.1]
                    };
                    let mut key = hashes[a].wrapping_add(keys[i]);
                    let found = loop {
                        match seen.get(&key) {
                            Some(&b) if same(b) => break Some(b),
                            Some(_) => key = key.wrapping_add(PROBE),
                            None => break None,
                        }
                    };
                    let b = found.unwrap_or_else(|| {
                        let b = out.spans.len();
                        out.coeffs.extend_from_within(row_a..row_a + rank);
                        out.coeffs[b * rank + i] += 1;
                        out.spans.push(span);
                        out.push_weight_sum(&weight, &columns[i]);
                        hashes.push(hashes[a].wrapping_add(keys[i]));
                        seen.insert(key, b);
                        b
                    });
                    next_strings.push((b, i, p + 1));
                }
            }
            next_strings.sort_unstable();
            strings = next_strings;
            level = start..out.spans.len();
        }
        out
    }
}

/// Positive roots of one factor, stored row by row, with their sparse
/// fundamental-weight coordinates.
struct Closure {
    coeffs: Vec<i8>,
    spans: Vec<(usize, usize)>,
    weights: Vec<(usize, i64)>,
    weight_offsets: Vec<usize>,
}

impl Closure {
    fn weight(&self, root: usize) -> &[(usize, i64)] {
        &self.weights[self.weight_offsets[root]..self.weight_offsets[root + 1]]
    }

    /// Appends the sum of two sorted sparse vectors, dropping zeros.
    fn push_weight_sum(&mut self, x: &[(usize, i64)], y: &[(usize, i64)]) {
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let entry = match (x.get(i), y.get(j)) {
                (Some(&(n, v)), Some(&(m, _))) if n < m => {
                    i += 1;
                    (n, v)
                }
                (Some(&(n, v)), Some(&(m, w))) if n == m => {
                    i += 1;
                    j += 1;
                    (n, v + w)
                }
                (_, Some(&(m, w))) => {
                    j += 1;
                    (m, w)
                }
                (Some(&(n, v)), None) => {
                    i += 1;
                    (n, v)
                }
                (None, None) => unreachable!(),
            };
            if entry.1 != 0 {
                self.weights.push(entry);
            }
        }
        self.weight_offsets.push(self.weights.len());
    }
}

const PROBE: u64 = 0x9e37_79b9_7f4a_7c15;

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(1).wrapping_mul(PROBE);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn system(spec: &str) -> RootSystem {
        RootSystem::new(spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn stored_root_weights_match_pairings() {
        for spec in ["B5", "C4", "F4", "G2", "A3xC2", "G2xA1"] {
            let rs = system(spec);
            for (i, root) in rs.positive_roots().iter().enumerate() {
                let dense = rs.to_weight_coords(root.coeffs());
                let sparse: Vec<(usize, i64)> = dense
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v != 0)
                    .collect();
                assert_eq!(rs.root_weight(i), &sparse[..], "{spec} {root}");
                let (lo, hi) = rs.support_span(i);
                let support: Vec<usize> = root.support().collect();
                assert_eq!(support, (lo..=hi).collect::<Vec<_>>(), "{spec} {root}");
            }
        }
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(system("G2").positive_roots().len(), 6);
        assert_eq!(system("B3").positive_roots().len(), 9);
        let a1 = system("A1");
        assert_eq!(a1.positive_roots(), &[Root::new(vec![1])]);
    }

    #[test]
    fn product_roots_never_mix_factors() {
        let rs = system("A1xG2");
        assert_eq!(rs.positive_roots().len(), 7);
        for root in rs.positive_roots() {
            let c = root.coeffs();
            assert!(c[0] == 0 || (c[1] == 0 && c[2] == 0), "{root}");
        }
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(system("B2").cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(system("C2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(system("G2").cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(
            system("F4").cartan(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn fundamental_weights_are_dual_to_simple_coroots() {
        let rs = system("F4");
        for i in 0..4 {
            let w = Weight::<i64>::fundamental(4, i);
            for j in 0..4 {
                let expected = Ratio::from_integer(i64::from(i == j));
                assert_eq!(rs.coroot_pairing(&w, &rs.simple_root(j)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        let rs = system("A1xG2");
        let rho = rs.rho::<BigInt>();
        assert_eq!(rho.to_i64s().unwrap(), vec![1, 1, 1]);
        for j in 0..3 {
            assert!(rs.coroot_pairing(&rho, &rs.simple_root(j)).unwrap().is_one());
        }
        assert_eq!(system("F4").rho::<i64>().to_i64s().unwrap(), vec![1; 4]);
    }

    #[test]
    fn negative_roots_pair_with_opposite_sign() {
        let rs = system("B3");
        let w = Weight::<i64>::from_integers(&[1, 2, 3]).unwrap();
        for root in rs.positive_roots() {
            let pos = rs.coroot_pairing(&w, root).unwrap();
            let neg = rs.coroot_pairing(&w, &-root).unwrap();
            assert_eq!(pos, -neg);
        }
    }

    #[test]
    fn pairing_rejects_non_roots() {
        let rs = system("G2");
        let w = Weight::<i64>::zero(2);
        assert_eq!(
            rs.coroot_pairing(&w, &Root::new(vec![2, 0])),
            Err(Error::NotARoot(vec![2, 0]))
        );
        assert_eq!(
            rs.coroot_pairing(&w, &Root::new(vec![1, 0, 0])),
            Err(Error::NotARoot(vec![1, 0, 0]))
        );
        assert!(matches!(
            rs.coroot_pairing(&Weight::<i64>::zero(3), &rs.simple_root(0)),
            Err(Error::WeightLength { .. })
        ));
    }

    #[test]
    fn weyl_dimensions() {
        let dim = |spec: &str, w: &[i64]| {
            let rs = system(spec);
            rs.weyl_dim(&Weight::<BigInt>::from_integers(w).unwrap())
                .unwrap()
        };
        assert_eq!(dim("C3", &[1, 0, 0]), BigInt::from(6));
        assert_eq!(dim("G2", &[1, 0]), BigInt::from(7));
        assert_eq!(dim("G2", &[0, 1]), BigInt::from(14));
        assert_eq!(dim("B3", &[0, 0, 1]), BigInt::from(8));
        assert_eq!(dim("B3", &[0, 1, 0]), BigInt::from(21));
        assert_eq!(dim("F4", &[0, 0, 0, 0]), BigInt::from(1));
    }

    #[test]
    fn weyl_dim_domain_errors() {
        let rs = system("G2");
        let neg = Weight::<i64>::from_integers(&[-1, 0]).unwrap();
        assert_eq!(rs.weyl_dim(&neg), Err(Error::NotDominantIntegral));
        let half = Weight::<i64>::new(vec![Ratio::new(1, 2), Ratio::zero()]);
        assert_eq!(rs.weyl_dim(&half), Err(Error::NotDominantIntegral));
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let rs = system("C12");
        let big = Weight::<i64>::from_integers(&[1_000_000; 12]).unwrap();
        assert_eq!(rs.weyl_dim(&big), Err(Error::Overflow));
        let big = Weight::<BigInt>::from_integers(&[1_000_000; 12]).unwrap();
        assert!(rs.weyl_dim(&big).unwrap() > BigInt::from(i64::MAX));
    }
}

//! Independent reference data for testing: every supported simple factor
//! rebuilt in Euclidean coordinates from its textbook root list, with
//! exact rationals, and module dimensions by enumerating weights with
//! Freudenthal's multiplicity formula.
//!
//! Nothing here uses Cartan-matrix closure or the Weyl dimension formula.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational64 = Ratio<i64>;

/// A simple factor, Bourbaki-labeled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    A(usize),
    B(usize),
    C(usize),
    F4,
    G2,
}

impl Factor {
    pub fn rank(self) -> usize {
        match self {
            Factor::A(n) | Factor::B(n) | Factor::C(n) => n,
            Factor::F4 => 4,
            Factor::G2 => 2,
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(self) -> usize {
        match self {
            Factor::A(n) => n * (n + 1) / 2,
            Factor::B(n) | Factor::C(n) => n * n,
            Factor::F4 => 24,
            Factor::G2 => 6,
        }
    }
}

pub type Vector = Vec<Rational64>;

fn q(n: i64, d: i64) -> Rational64 {
    Ratio::new(n, d)
}

pub fn dot(a: &[Rational64], b: &[Rational64]) -> Rational64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn axpy(k: Rational64, a: &[Rational64], b: &[Rational64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x * k + y).collect()
}

fn unit(dim: usize, i: usize, scale: Rational64) -> Vector {
    let mut v = vec![Rational64::zero(); dim];
    v[i] = scale;
    v
}

fn ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Ratio::from_integer(x)).collect()
}

fn halves(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x, 2)).collect()
}

/// Simple roots, fundamental weights and all roots of a factor.
pub struct Model {
    pub simple: Vec<Vector>,
    pub fundamental: Vec<Vector>,
    pub roots: Vec<Vector>,
}

/// `e_i - e_j` type vectors with arbitrary signs.
fn pm(dim: usize, i: usize, si: i64, j: usize, sj: i64) -> Vector {
    let mut v = vec![Rational64::zero(); dim];
    v[i] = Ratio::from_integer(si);
    v[j] = Ratio::from_integer(sj);
    v
}

pub fn model(factor: Factor) -> Model {
    match factor {
        Factor::A(n) => {
            let d = n + 1;
            let simple = (0..n).map(|i| pm(d, i, 1, i + 1, -1)).collect();
            let fundamental = (1..=n)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let top = if j < i { 1 } else { 0 };
                            q(top * d as i64 - i as i64, d as i64)
                        })
                        .collect()
                })
                .collect();
            let mut roots = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.push(pm(d, i, 1, j, -1));
                    }
                }
            }
            Model { simple, fundamental, roots }
        }
        Factor::B(n) | Factor::C(n) => {
            let is_b = matches!(factor, Factor::B(_));
            let short = if is_b { q(1, 1) } else { q(2, 1) };
            let mut simple: Vec<Vector> = (0..n - 1).map(|i| pm(n, i, 1, i + 1, -1)).collect();
            simple.push(unit(n, n - 1, short));
            let fundamental = (1..=n)
                .map(|i| {
                    let c = if is_b && i == n { q(1, 2) } else { q(1, 1) };
                    (0..n).map(|j| if j < i { c } else { Rational64::zero() }).collect()
                })
                .collect();
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(pm(n, i, si, j, sj));
                    }
                }
                roots.push(unit(n, i, short));
                roots.push(unit(n, i, -short));
            }
            Model { simple, fundamental, roots }
        }
        Factor::F4 => {
            let simple = vec![
                ints(&[0, 1, -1, 0]),
                ints(&[0, 0, 1, -1]),
                ints(&[0, 0, 0, 1]),
                halves(&[1, -1, -1, -1]),
            ];
            let fundamental = vec![
                ints(&[1, 1, 0, 0]),
                ints(&[2, 1, 1, 0]),
                halves(&[3, 1, 1, 1]),
                ints(&[1, 0, 0, 0]),
            ];
            let mut roots = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(pm(4, i, si, j, sj));
                    }
                }
                roots.push(unit(4, i, q(1, 1)));
                roots.push(unit(4, i, q(-1, 1)));
            }
            for signs in 0..16 {
                let v: Vec<i64> = (0..4).map(|b| if signs >> b & 1 == 1 { -1 } else { 1 }).collect();
                roots.push(halves(&v));
            }
            Model { simple, fundamental, roots }
        }
        Factor::G2 => {
            let simple = vec![ints(&[1, -1, 0]), ints(&[-2, 1, 1])];
            let fundamental = vec![ints(&[0, -1, 1]), ints(&[-1, -1, 2])];
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    roots.push(pm(3, i, 1, j, -1));
                    let mut long = vec![Rational64::from_integer(-1); 3];
                    long[i] = q(2, 1);
                    if j == (i + 1) % 3 {
                        roots.push(long.iter().map(|x| -x).collect());
                        roots.push(long);
                    }
                }
            }
            Model { simple, fundamental, roots }
        }
    }
}

/// Coefficients of `v` in the basis `basis` (exact Gaussian elimination on
/// a consistent, possibly overdetermined system).
pub fn expand(basis: &[Vector], v: &[Rational64]) -> Option<Vector> {
    let rows = v.len();
    let cols = basis.len();
    let mut m: Vec<Vector> = (0..rows)
        .map(|r| {
            let mut row: Vector = basis.iter().map(|b| b[r]).collect();
            row.push(v[r]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r] = m[r].iter().map(|x| x * inv).collect();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let k = -m[i][c];
                m[i] = axpy(k, &m[r].clone(), &m[i]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut out = vec![Rational64::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][cols];
    }
    Some(out)
}

/// Positive roots in simple-root coordinates. Panics if some root has a
/// non-integral or mixed-sign expansion.
pub fn positive_roots(m: &Model) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for root in &m.roots {
        let c = expand(&m.simple, root).expect("roots lie in the span of the simple roots");
        assert!(c.iter().all(Ratio::is_integer), "non-integral expansion {c:?}");
        let pos = c.iter().all(|x| !x.is_negative());
        let neg = c.iter().all(|x| !x.is_positive());
        assert!(pos ^ neg, "root with mixed signs {c:?}");
        if pos {
            out.insert(c.iter().map(|x| x.to_integer()).collect());
        }
    }
    out
}

/// Dimension of the irreducible module with highest weight
/// `sum lambda_i w_i`, by enumerating its weights with Freudenthal's
/// multiplicity formula.
pub fn freudenthal_dim(f: Factor, lambda: &[i64]) -> i64 {
    let m = model(f);
    let dim = m.simple[0].len();
    let positive: Vec<Vector> = m
        .roots
        .iter()
        .filter(|r| {
            expand(&m.simple, r)
                .unwrap()
                .iter()
                .all(|x| !x.is_negative())
        })
        .cloned()
        .collect();
    let zero = vec![Rational64::zero(); dim];
    let rho = m.fundamental.iter().fold(zero.clone(), |acc, w| axpy(q(1, 1), w, &acc));
    let top = lambda
        .iter()
        .zip(&m.fundamental)
        .fold(zero, |acc, (&c, w)| axpy(Ratio::from_integer(c), w, &acc));
    let shifted = |v: &Vector| {
        let s = axpy(q(1, 1), v, &rho);
        dot(&s, &s)
    };
    let norm_top = shifted(&top);

    let mut mult: HashMap<Vector, i64> = HashMap::new();
    mult.insert(top.clone(), 1);
    let mut level = vec![top];
    let mut total = 1;
    while !level.is_empty() {
        let mut candidates: BTreeSet<Vector> = BTreeSet::new();
        for mu in &level {
            for a in &m.simple {
                candidates.insert(axpy(q(-1, 1), a, mu));
            }
        }
        let mut next = Vec::new();
        for mu in candidates {
            let mut sum = Rational64::zero();
            for a in &positive {
                let mut k = 1;
                loop {
                    let up = axpy(Ratio::from_integer(k), a, &mu);
                    match mult.get(&up) {
                        Some(&c) => sum += Ratio::from_integer(c) * dot(&up, a),
                        None => break,
                    }
                    k += 1;
                }
            }
            if sum.is_zero() {
                continue;
            }
            let value = q(2, 1) * sum / (norm_top - shifted(&mu));
            assert!(value.is_integer() && value.is_positive(), "{f:?} {lambda:?}: {value}");
            let c = value.to_integer();
            total += c;
            mult.insert(mu.clone(), c);
            next.push(mu);
        }
        level = next;
    }
    total
}


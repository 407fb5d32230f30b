//! Root systems of semisimple simply connected groups.
//!
//! Simple roots follow Bourbaki labeling within each simple factor, and the
//! factors are concatenated in the order given. Indices are 0-based
//! internally. The invariant form is normalized so that short roots of
//! every factor have squared length 2.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSysError {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("unknown root system family {0:?}")]
    UnknownFamily(String),
    #[error("support requires non-negative coordinates, got {0:?}")]
    NegativeRootCoordinate(Vec<i64>),
    #[error("empty Cartan type")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            "F" | "f" => Family::F,
            "G" | "g" => Family::G,
            other => return Err(RootSysError::UnknownFamily(other.to_string())),
        })
    }
}

impl Family {
    fn rank_ok(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    /// Number of positive roots of the simple type of rank `n`.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

/// A product of simple Cartan types.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self, RootSysError> {
        if factors.is_empty() {
            return Err(RootSysError::Empty);
        }
        for &(family, rank) in &factors {
            if !family.rank_ok(rank) {
                return Err(RootSysError::InvalidType { family, rank });
            }
        }
        Ok(Self { factors })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self, RootSysError> {
        Self::new(vec![(family, rank)])
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(fam, n)| format!("{fam}{n}"))
            .collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Parses strings like `"A5"` or `"B3xA1"`.
impl FromStr for CartanType {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        for part in s.split(['x', '×', '+']) {
            let part = part.trim();
            let (fam, rank) = part.split_at(part.chars().next().map_or(0, char::len_utf8));
            let family: Family = fam.parse()?;
            let rank = rank
                .parse()
                .map_err(|_| RootSysError::UnknownFamily(part.to_string()))?;
            factors.push((family, rank));
        }
        Self::new(factors)
    }
}

/// Coordinates in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

/// Coordinates in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<i64>);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|x| -x).collect())
    }
}

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> WeightVec {
        WeightVec(self.0.iter().map(|x| x * k).collect())
    }
}

/// `Supp β`: indices of strictly positive root coordinates.
pub fn supp(r: &RootVec) -> Result<BTreeSet<usize>, RootSysError> {
    if r.0.iter().any(|&x| x < 0) {
        return Err(RootSysError::NegativeRootCoordinate(r.0.clone()));
    }
    Ok(r.0
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, _)| i)
        .collect())
}

/// `supp λ`: indices of strictly positive weight coordinates.
pub fn wsupp(w: &WeightVec) -> BTreeSet<usize> {
    w.0.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, _)| i)
        .collect()
}

pub fn is_dominant(w: &WeightVec) -> bool {
    w.0.iter().all(|&x| x >= 0)
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    /// `gram[i][j] = (α_i, α_j)`.
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<BigRational>>,
    pos_roots: Vec<RootVec>,
    index: HashMap<Vec<i64>, usize>,
}

#[allow(clippy::needless_range_loop)]
fn factor_gram(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

#[allow(clippy::needless_range_loop)]
fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let r = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<BigRational> = row.iter().map(|&x| r(x)).collect();
            v.extend((0..n).map(|j| r(i64::from(i == j))));
            v
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..2 * n {
                    let v = &f * &a[col][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        let n = ctype.rank();
        let mut gram = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for &(family, rank) in ctype.factors() {
            let g = factor_gram(family, rank);
            for i in 0..rank {
                for j in 0..rank {
                    gram[offset + i][offset + j] = g[i][j];
                }
            }
            offset += rank;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let cartan_inv = rational_inverse(&cartan);

        let mut rs = RootSystem {
            ctype,
            gram,
            cartan,
            cartan_inv,
            pos_roots: Vec::new(),
            index: HashMap::new(),
        };
        rs.generate_roots();
        rs
    }

    pub fn from_type(s: &str) -> Result<Self, RootSysError> {
        Ok(Self::new(s.parse()?))
    }

    /// Closure under root strings, one height level at a time.
    fn generate_roots(&mut self) {
        let n = self.rank();
        let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut all = Vec::new();
        while !level.is_empty() {
            known.extend(level.iter().cloned());
            let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
            for beta in &level {
                let pairing = self.cartan_times(beta);
                for i in 0..n {
                    // p = how far the α_i-string extends below β
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing[i] > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            let mut sorted = level;
            sorted.sort_by(|a, b| b.cmp(a));
            all.extend(sorted);
            level = next.into_iter().collect();
        }
        self.index = all
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        self.pos_roots = all.into_iter().map(RootVec).collect();
    }

    fn cartan_times(&self, r: &[i64]) -> Vec<i64> {
        self.cartan
            .iter()
            .map(|row| row.iter().zip(r).map(|(c, x)| c * x).sum())
            .collect()
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ctype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `C[i][j] = 2(α_i, α_j)/(α_i, α_i)`; column `j` is `α_j` in weight coordinates.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Diagonal symmetrizer `d_i = (α_i, α_i)/2`, so that `d_i C[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.gram[i][i] / 2).collect()
    }

    /// `(α_i, α_j)`.
    pub fn gram(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    /// Positive roots ordered by height, then by descending coordinates.
    pub fn pos_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    pub fn num_pos_roots(&self) -> usize {
        self.pos_roots.len()
    }

    /// Position of a positive root in [`Self::pos_roots`].
    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        if self.index.contains_key(r) {
            return true;
        }
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        RootVec(v)
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn root_to_weight(&self, r: &RootVec) -> WeightVec {
        WeightVec(self.cartan_times(&r.0))
    }

    /// Root coordinates of a weight, exact.
    pub fn weight_to_root(&self, w: &WeightVec) -> Vec<BigRational> {
        self.cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&w.0)
                    .fold(BigRational::zero(), |acc, (c, &x)| {
                        acc + c * BigInt::from(x)
                    })
            })
            .collect()
    }

    /// Root coordinates of a weight when they are all integral.
    pub fn weight_to_root_integral(&self, w: &WeightVec) -> Option<RootVec> {
        self.weight_to_root(w)
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    i64::try_from(q.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(RootVec)
    }

    /// Invariant inner product of two weights.
    pub fn inner(&self, a: &WeightVec, b: &WeightVec) -> BigRational {
        // (ϖ_i, α_j) = δ_ij d_j, so (a, b) = Σ_j (C⁻¹a)_j d_j b_j.
        let ra = self.weight_to_root(a);
        let d = self.symmetrizer();
        ra.iter()
            .zip(&b.0)
            .zip(&d)
            .fold(BigRational::zero(), |acc, ((x, &y), &dj)| {
                acc + x * BigInt::from(y * dj)
            })
    }

    /// Inner product of two elements of the root lattice.
    pub fn inner_roots(&self, a: &RootVec, b: &RootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * self.gram[i][j] * b.0[j];
            }
        }
        s
    }

    /// Inner product of a root-lattice element with a weight.
    pub fn inner_root_weight(&self, a: &RootVec, w: &WeightVec) -> i64 {
        let d = self.symmetrizer();
        a.0.iter()
            .zip(&w.0)
            .zip(&d)
            .map(|((x, y), dj)| x * y * dj)
            .sum()
    }

    /// `⟨β, α_i∨⟩` for every simple root.
    pub fn pairings(&self, r: &RootVec) -> Vec<i64> {
        self.cartan_times(&r.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::from_type("A2").unwrap();
        let roots: Vec<Vec<i64>> = rs.pos_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn b2_roots() {
        let rs = RootSystem::from_type("B2").unwrap();
        let roots: Vec<Vec<i64>> = rs.pos_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn b3_simple_roots_in_weight_coordinates() {
        let rs = RootSystem::from_type("B3").unwrap();
        assert_eq!(rs.root_to_weight(&RootVec(vec![0, 0, 1])).0, vec![0, -1, 2]);
        assert_eq!(
            rs.root_to_weight(&RootVec(vec![1, 0, -1])).0,
            vec![2, 0, -2]
        );
        assert_eq!(rs.gram(2, 2), 2);
        assert_eq!(rs.gram(1, 1), 4);
    }

    #[test]
    fn a2_weight_to_root() {
        let rs = RootSystem::from_type("A2").unwrap();
        assert_eq!(
            rs.weight_to_root(&WeightVec(vec![1, 0])),
            vec![q(2, 3), q(1, 3)]
        );
        assert_eq!(
            rs.weight_to_root(&WeightVec(vec![1, 1])),
            vec![q(1, 1), q(1, 1)]
        );
        assert_eq!(
            rs.inner(&WeightVec(vec![2, -1]), &WeightVec(vec![-1, 2])),
            q(-1, 1)
        );
    }

    #[test]
    fn support_and_dominance() {
        assert_eq!(supp(&RootVec(vec![1, 1])).unwrap(), BTreeSet::from([0, 1]));
        assert!(supp(&RootVec(vec![1, -1])).is_err());
        assert_eq!(
            wsupp(&WeightVec(vec![1, 0, 1, 0, 1])),
            BTreeSet::from([0, 2, 4])
        );
        assert!(!is_dominant(&WeightVec(vec![-1, 2])));
    }

    #[test]
    fn invalid_types() {
        assert!(CartanType::simple(Family::E, 5).is_err());
        assert!(CartanType::simple(Family::D, 2).is_err());
        assert!("Q3".parse::<CartanType>().is_err());
        assert_eq!("B3xA1".parse::<CartanType>().unwrap().rank(), 4);
    }

    #[test]
    fn exceptional_counts() {
        for (t, n) in [("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)] {
            assert_eq!(RootSystem::from_type(t).unwrap().num_pos_roots(), n, "{t}");
        }
    }
}

//! Chevalley bases of semisimple Lie algebras.
//!
//! Basis layout: indices `0..N` are `e_β` for the positive roots in
//! [`RootSystem::pos_roots`] order, `N..2N` are the matching `e_{-β}`, and
//! `2N..2N+n` are the Cartan elements `h_i = h_{α_i}`.
//!
//! Signs are fixed by declaring `N_{α,β} = +(p+1)` on every extraspecial
//! pair, where the extraspecial pair of a non-simple positive root `ξ` is the
//! decomposition `ξ = α + β` with `α` earliest in root order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rootsys::{RootSystem, RootVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChevalleyError {
    #[error("generator {index} does not lie in the ambient subspace")]
    GeneratorsOutsideAmbient { index: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("Cartan index {0} out of range")]
    BadCartanIndex(usize),
}

/// Sparse vector over the Chevalley basis with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgVec {
    coeffs: BTreeMap<usize, BigRational>,
}

impl AlgVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.coeffs.insert(i, BigRational::one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut v = Self::zero();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, i: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &AlgVec) -> AlgVec {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> AlgVec {
        if k.is_zero() {
            return AlgVec::zero();
        }
        AlgVec {
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * k)).collect(),
        }
    }

    fn leading(&self) -> Option<(usize, &BigRational)> {
        self.coeffs.iter().next().map(|(&i, c)| (i, c))
    }
}

impl fmt::Debug for AlgVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("{c}*b{i}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A subspace kept as a reduced row-echelon basis keyed by pivot index.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: BTreeMap<usize, AlgVec>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn span<'a>(vectors: impl IntoIterator<Item = &'a AlgVec>) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<AlgVec> {
        self.rows.values().cloned().collect()
    }

    fn reduce(&self, v: &AlgVec) -> AlgVec {
        let mut r = v.clone();
        for (&p, row) in &self.rows {
            let c = r.coeff(p);
            if !c.is_zero() {
                r = r.add(&row.scale(&-c));
            }
        }
        r
    }

    pub fn contains(&self, v: &AlgVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &AlgVec) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.recip());
        for row in self.rows.values_mut() {
            let c = row.coeff(p);
            if !c.is_zero() {
                *row = row.add(&r.scale(&-c));
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.values().all(|v| other.contains(v))
    }
}

/// Whether every vector of `sub` lies in the span of `space`.
pub fn is_contained(sub: &[AlgVec], space: &[AlgVec]) -> bool {
    let s = Subspace::span(space);
    sub.iter().all(|v| s.contains(v))
}

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    n_pos: usize,
    /// Signed root coordinates per root id (`0..2N`).
    coords: Vec<Vec<i64>>,
    ids: HashMap<Vec<i64>, usize>,
    /// `N_{x,y}` for root ids with `x + y` a root.
    constants: HashMap<(usize, usize), i64>,
    /// `(β, β)` per root id.
    norms: Vec<i64>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Self {
        let n_pos = rs.num_pos_roots();
        let mut coords: Vec<Vec<i64>> = rs.pos_roots().iter().map(|r| r.0.clone()).collect();
        coords.extend(rs.pos_roots().iter().map(|r| r.neg().0));
        let ids = coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();
        let norms = coords
            .iter()
            .map(|c| rs.inner_roots(&RootVec(c.clone()), &RootVec(c.clone())))
            .collect();
        let mut alg = Self {
            rs,
            n_pos,
            coords,
            ids,
            constants: HashMap::new(),
            norms,
        };
        alg.fill_positive();
        alg.fill_mixed();
        alg
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        2 * self.n_pos + self.rs.rank()
    }

    pub fn num_pos_roots(&self) -> usize {
        self.n_pos
    }

    fn neg_id(&self, x: usize) -> usize {
        if x < self.n_pos {
            x + self.n_pos
        } else {
            x - self.n_pos
        }
    }

    fn sum_id(&self, x: usize, y: usize) -> Option<usize> {
        let s: Vec<i64> = self.coords[x]
            .iter()
            .zip(&self.coords[y])
            .map(|(a, b)| a + b)
            .collect();
        self.ids.get(&s).copied()
    }

    fn diff_id(&self, x: usize, y: usize) -> Option<usize> {
        let s: Vec<i64> = self.coords[x]
            .iter()
            .zip(&self.coords[y])
            .map(|(a, b)| a - b)
            .collect();
        self.ids.get(&s).copied()
    }

    /// Largest `p` with `y - p x` a root.
    fn string_below(&self, x: usize, y: usize) -> i64 {
        let mut p = 0;
        let mut cur = self.coords[y].clone();
        loop {
            for (c, d) in cur.iter_mut().zip(&self.coords[x]) {
                *c -= d;
            }
            if self.ids.contains_key(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{x,-y}` for positive ids `x != y`, from positive entries of lower height.
    fn mixed_from_positive(&self, x: usize, y: usize) -> Option<BigRational> {
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let g = self.diff_id(x, y)?;
        if g < self.n_pos {
            // x - y = γ > 0: N_{x,-y} = -(γ,γ)/(x,x) N_{y,γ}
            let n = *self.constants.get(&(y, g))?;
            Some(-q(self.norms[g] * n, self.norms[x]))
        } else {
            // y - x = γ > 0: N_{x,-y} = (γ,γ)/(y,y) N_{γ,x}
            let gamma = self.neg_id(g);
            let n = *self.constants.get(&(gamma, x))?;
            Some(q(self.norms[gamma] * n, self.norms[y]))
        }
    }

    fn fill_positive(&mut self) {
        let q = |a: i64| BigRational::from_integer(BigInt::from(a));
        for xi in 0..self.n_pos {
            let mut pairs: Vec<(usize, usize)> = (0..xi)
                .filter_map(|a| {
                    let b = self.diff_id(xi, a)?;
                    (b < self.n_pos && a < b).then_some((a, b))
                })
                .collect();
            pairs.sort();
            let Some(&(a0, b0)) = pairs.first() else {
                continue;
            };
            let n0 = self.string_below(a0, b0) + 1;
            self.constants.insert((a0, b0), n0);
            self.constants.insert((b0, a0), -n0);
            for &(g, d) in &pairs[1..] {
                // Four-root relation with g + d - a0 - b0 = 0.
                let mut sum = BigRational::zero();
                if self.diff_id(d, a0).is_some() && self.diff_id(g, b0).is_some() {
                    let t1 = self.mixed_from_positive(d, a0).expect("lower height");
                    let t2 = self.mixed_from_positive(g, b0).expect("lower height");
                    let w = self.norms[self.diff_id(d, a0).unwrap()];
                    sum += t1 * t2 / q(w);
                }
                if self.diff_id(g, a0).is_some() && self.diff_id(d, b0).is_some() {
                    // N_{-a0,g} = -N_{g,-a0}
                    let t1 = -self.mixed_from_positive(g, a0).expect("lower height");
                    let t2 = self.mixed_from_positive(d, b0).expect("lower height");
                    let w = self.norms[self.diff_id(g, a0).unwrap()];
                    sum += t1 * t2 / q(w);
                }
                let n = sum * q(self.norms[xi]) / q(n0);
                assert!(n.is_integer(), "non-integral structure constant");
                let n = i64::try_from(n.to_integer()).expect("small constant");
                self.constants.insert((g, d), n);
                self.constants.insert((d, g), -n);
            }
        }
    }

    fn fill_mixed(&mut self) {
        let mut extra = Vec::new();
        for x in 0..self.n_pos {
            for y in 0..self.n_pos {
                if self.sum_id(x, y).is_some() {
                    let n = self.constants[&(x, y)];
                    extra.push(((self.neg_id(x), self.neg_id(y)), -n));
                }
                if x == y {
                    continue;
                }
                if let Some(n) = self.mixed_from_positive(x, y) {
                    assert!(n.is_integer(), "non-integral structure constant");
                    let n = i64::try_from(n.to_integer()).expect("small constant");
                    extra.push(((x, self.neg_id(y)), n));
                    extra.push(((self.neg_id(y), x), -n));
                }
            }
        }
        self.constants.extend(extra);
    }

    /// Root id of signed root coordinates.
    pub fn root_id(&self, coords: &[i64]) -> Option<usize> {
        self.ids.get(coords).copied()
    }

    pub fn root_coords(&self, id: usize) -> &[i64] {
        &self.coords[id]
    }

    /// `e_β` for a (positive or negative) root.
    pub fn e(&self, coords: &[i64]) -> Result<AlgVec, ChevalleyError> {
        self.root_id(coords)
            .map(AlgVec::basis)
            .ok_or_else(|| ChevalleyError::NotARoot(coords.to_vec()))
    }

    /// `h_i` for a simple root index.
    pub fn h(&self, i: usize) -> Result<AlgVec, ChevalleyError> {
        if i >= self.rs.rank() {
            return Err(ChevalleyError::BadCartanIndex(i));
        }
        Ok(AlgVec::basis(2 * self.n_pos + i))
    }

    /// `N_{x,y}` for root ids, zero when `x + y` is not a root.
    pub fn structure_constant(&self, x: usize, y: usize) -> i64 {
        self.constants.get(&(x, y)).copied().unwrap_or(0)
    }

    /// Coroot `h_β = Σ k_i (α_i,α_i)/(β,β) h_i` of a positive root.
    fn coroot(&self, pos: usize) -> Vec<(usize, i64)> {
        let beta = &self.coords[pos];
        let nb = self.norms[pos];
        beta.iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| (2 * self.n_pos + i, k * self.rs.gram(i, i) / nb))
            .collect()
    }

    fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let two_n = 2 * self.n_pos;
        match (i < two_n, j < two_n) {
            (true, true) => {
                if let Some(s) = self.sum_id(i, j) {
                    vec![(s, self.constants[&(i, j)])]
                } else if self.neg_id(i) == j {
                    if i < self.n_pos {
                        self.coroot(i)
                    } else {
                        self.coroot(j).into_iter().map(|(k, c)| (k, -c)).collect()
                    }
                } else {
                    Vec::new()
                }
            }
            (false, true) => {
                let p = self.rs.pairings(&RootVec(self.coords[j].clone()))[i - two_n];
                vec![(j, p)]
            }
            (true, false) => {
                let p = self.rs.pairings(&RootVec(self.coords[i].clone()))[j - two_n];
                vec![(i, -p)]
            }
            (false, false) => Vec::new(),
        }
    }

    pub fn bracket(&self, x: &AlgVec, y: &AlgVec) -> AlgVec {
        let mut out = AlgVec::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out.add_term(k, &ab * BigInt::from(c));
                }
            }
        }
        out
    }

    pub fn commutes_with_all(&self, x: &AlgVec, gens: &[AlgVec]) -> bool {
        gens.iter().all(|g| self.bracket(x, g).is_zero())
    }

    /// Smallest subspace containing `generators` and stable under bracketing
    /// with every vector of `ambient`.
    pub fn ideal_closure(
        &self,
        generators: &[AlgVec],
        ambient: &[AlgVec],
    ) -> Result<Subspace, ChevalleyError> {
        let amb = Subspace::span(ambient);
        if let Some(index) = generators.iter().position(|g| !amb.contains(g)) {
            return Err(ChevalleyError::GeneratorsOutsideAmbient { index });
        }
        let amb_basis = amb.basis();
        let mut closure = Subspace::new();
        let mut queue: Vec<AlgVec> = Vec::new();
        for g in generators {
            if closure.insert(g) {
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for a in &amb_basis {
                let w = self.bracket(a, &v);
                if closure.insert(&w) {
                    queue.push(w);
                }
            }
        }
        Ok(closure)
    }

    /// Basis of `𝔭_u` for the parabolic containing the negative Borel with
    /// Levi simple roots `pi_l`: all `e_{-β}` with `Supp β ⊄ Π_L`.
    pub fn nilradical_basis(&self, pi_l: &[usize]) -> Vec<AlgVec> {
        (0..self.n_pos)
            .filter(|&b| {
                self.coords[b]
                    .iter()
                    .enumerate()
                    .any(|(i, &k)| k > 0 && !pi_l.contains(&i))
            })
            .map(|b| AlgVec::basis(self.neg_id(b)))
            .collect()
    }

    /// Human-readable name of a basis index.
    pub fn basis_name(&self, i: usize) -> String {
        if i >= 2 * self.n_pos {
            return format!("h{}", i - 2 * self.n_pos + 1);
        }
        let c = &self.coords[i];
        let sign = if i < self.n_pos { "" } else { "-" };
        let parts: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(j, &k)| {
                let k = k.abs();
                if k == 1 {
                    format!("α{}", j + 1)
                } else {
                    format!("{k}α{}", j + 1)
                }
            })
            .collect();
        if parts.len() == 1 {
            format!("e{sign}{}", parts[0])
        } else {
            format!("e{sign}({})", parts.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(RootSystem::from_type(t).unwrap())
    }

    fn int(k: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(k))
    }

    #[test]
    fn sl2_relations() {
        let g = alg("A1");
        let e = g.e(&[1]).unwrap();
        let f = g.e(&[-1]).unwrap();
        let h = g.h(0).unwrap();
        assert_eq!(g.bracket(&e, &f), h);
        assert_eq!(g.bracket(&h, &e), e.scale(&int(2)));
        assert_eq!(g.bracket(&h, &f), f.scale(&int(-2)));
    }

    #[test]
    fn a2_extraspecial_sign() {
        let g = alg("A2");
        let x = g.bracket(&g.e(&[1, 0]).unwrap(), &g.e(&[0, 1]).unwrap());
        assert_eq!(x, g.e(&[1, 1]).unwrap());
    }

    #[test]
    fn b2_long_string() {
        let g = alg("B2");
        let x = g.bracket(&g.e(&[0, 1]).unwrap(), &g.e(&[1, 1]).unwrap());
        assert_eq!(x.terms().count(), 1);
        let (i, c) = x.terms().next().unwrap();
        assert_eq!(g.root_coords(i), &[1, 2]);
        assert!(*c == int(2) || *c == int(-2));
    }

    #[test]
    fn bracket_is_alternating() {
        let g = alg("B3");
        for i in 0..g.dim() {
            let x = AlgVec::basis(i);
            assert!(g.bracket(&x, &x).is_zero());
        }
    }

    #[test]
    fn sl3_ideal_in_borel_nilradical() {
        let g = alg("A2");
        let pu = g.nilradical_basis(&[]);
        let gen = g.e(&[-1, 0]).unwrap();
        let ideal = g.ideal_closure(&[gen], &pu).unwrap();
        assert_eq!(ideal.dim(), 2);
        assert!(ideal.contains(&g.e(&[-1, -1]).unwrap()));
        assert!(!ideal.contains(&g.e(&[0, -1]).unwrap()));
    }

    #[test]
    fn ideal_rejects_outside_generators() {
        let g = alg("A2");
        let pu = g.nilradical_basis(&[0]);
        let err = g.ideal_closure(&[g.e(&[-1, 0]).unwrap()], &pu).unwrap_err();
        assert_eq!(err, ChevalleyError::GeneratorsOutsideAmbient { index: 0 });
    }

    #[test]
    fn commutes_with_empty_set() {
        let g = alg("A2");
        assert!(g.commutes_with_all(&g.e(&[-1, 0]).unwrap(), &[]));
    }

    #[test]
    fn basis_names() {
        let g = alg("B3");
        let id = g.root_id(&[0, -1, -2]).unwrap();
        assert_eq!(g.basis_name(id), "e-(α2+2α3)");
        assert_eq!(g.basis_name(g.dim() - 1), "h3");
    }
}

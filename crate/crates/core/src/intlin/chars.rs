use num_bigint::BigInt;

use super::{in_sublattice_mod, smith_normal_form, to_big, IntLinError, IntMatrix};

/// Coordinates of an element of a [`CharSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharVec(pub Vec<i64>);

impl CharVec {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// A finitely generated abelian group given by generators and relations.
///
/// Coordinates `0..free_rank` are free; the next `moduli.len()` coordinates
/// are cyclic of the given orders and are kept reduced into `[0, m)`.
/// Optional extra `relations` (integer vectors over all coordinates) present
/// groups that are not in diagonal form; with relations present, elements
/// are compared with [`CharSpace::equivalent`] rather than `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSpace {
    free_rank: usize,
    moduli: Vec<i64>,
    names: Vec<String>,
    relations: Vec<Vec<i64>>,
}

impl CharSpace {
    pub fn new(free_rank: usize, moduli: Vec<i64>) -> Result<Self, IntLinError> {
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(IntLinError::InvalidModulus(m));
        }
        let dim = free_rank + moduli.len();
        let names = (1..=dim).map(|i| format!("x{i}")).collect();
        Ok(Self {
            free_rank,
            moduli,
            names,
            relations: Vec::new(),
        })
    }

    /// Free abelian group of rank `n`.
    pub fn free(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("no moduli")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, IntLinError> {
        if names.len() != self.dim() {
            return Err(IntLinError::NameCount {
                count: names.len(),
                dim: self.dim(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_relations(mut self, relations: Vec<Vec<i64>>) -> Result<Self, IntLinError> {
        for r in &relations {
            self.check_len(r.len())?;
        }
        self.relations = relations
            .into_iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.free_rank + self.moduli.len()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Vec<i64>] {
        &self.relations
    }

    /// Per-coordinate moduli (0 for free coordinates).
    pub fn coordinate_moduli(&self) -> Vec<i64> {
        let mut m = vec![0; self.free_rank];
        m.extend(&self.moduli);
        m
    }

    /// All relations as matrix columns: torsion orders first, then extras.
    pub fn relation_matrix(&self) -> IntMatrix {
        let dim = self.dim();
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for (t, &m) in self.moduli.iter().enumerate() {
            let mut c = vec![BigInt::from(0); dim];
            c[self.free_rank + t] = BigInt::from(m);
            cols.push(c);
        }
        cols.extend(self.relations.iter().map(|r| to_big(r)));
        IntMatrix::from_columns(dim, &cols)
    }

    fn check_len(&self, len: usize) -> Result<(), IntLinError> {
        if len != self.dim() {
            return Err(IntLinError::DimensionMismatch {
                expected: self.dim(),
                found: len,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> CharVec {
        CharVec(vec![0; self.dim()])
    }

    /// Validates the length and reduces torsion coordinates.
    pub fn vec(&self, coords: Vec<i64>) -> Result<CharVec, IntLinError> {
        self.check_len(coords.len())?;
        Ok(self.reduce(coords))
    }

    /// The `i`-th generator.
    pub fn basis(&self, i: usize) -> CharVec {
        let mut c = vec![0; self.dim()];
        c[i] = 1;
        self.reduce(c)
    }

    fn reduce(&self, mut coords: Vec<i64>) -> CharVec {
        for (t, &m) in self.moduli.iter().enumerate() {
            let x = &mut coords[self.free_rank + t];
            *x = x.rem_euclid(m);
        }
        CharVec(coords)
    }

    pub fn add(&self, a: &CharVec, b: &CharVec) -> CharVec {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &CharVec, b: &CharVec) -> CharVec {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &CharVec) -> CharVec {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &CharVec, k: i64) -> CharVec {
        self.reduce(a.0.iter().map(|x| x * k).collect())
    }

    /// Equality in the group, accounting for extra relations.
    pub fn equivalent(&self, a: &CharVec, b: &CharVec) -> bool {
        let d = self.sub(a, b);
        if d.is_zero() {
            return true;
        }
        if self.relations.is_empty() {
            return false;
        }
        in_sublattice_mod(&to_big(&d.0), &[], &self.relation_matrix())
    }

    /// Structure of the group as `(rank, torsion invariant factors > 1)`.
    pub fn structure(&self) -> (usize, Vec<BigInt>) {
        let s = smith_normal_form(&self.relation_matrix());
        let one = BigInt::from(1);
        let torsion = s
            .invariant_factors()
            .into_iter()
            .filter(|d| *d > one)
            .collect();
        (self.dim() - s.rank, torsion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_coordinates_reduce() {
        let c = CharSpace::new(2, vec![2]).unwrap();
        let v = c.vec(vec![1, -1, 3]).unwrap();
        assert_eq!(v.coords(), &[1, -1, 1]);
        assert!(c.add(&v, &v).coords()[2] == 0);
    }

    #[test]
    fn extra_relations_identify_elements() {
        let c = CharSpace::free(2)
            .with_relations(vec![vec![2, -2]])
            .unwrap();
        let a = c.vec(vec![1, 0]).unwrap();
        let b = c.vec(vec![-1, 2]).unwrap();
        assert!(c.equivalent(&a, &b));
        assert!(!c.equivalent(&a, &c.zero()));
        assert_eq!(c.structure(), (1, vec![BigInt::from(2)]));
    }

    #[test]
    fn invalid_moduli_rejected() {
        assert_eq!(
            CharSpace::new(0, vec![1]),
            Err(IntLinError::InvalidModulus(1))
        );
        assert!(CharSpace::free(2).with_names(vec!["a".into()]).is_err());
    }
}

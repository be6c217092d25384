//! Exact sparse linear algebra over [`Scalar`].
//!
//! The workhorse is [`SpanSolver`], an incremental row-echelon basis of the
//! span of a growing list of generator vectors. It answers membership,
//! expresses a target as a combination of the generators, and yields a basis
//! of the relations among them (the kernel of the generator matrix).

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse vector indexed by coordinate number.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `v += c * w`, dropping cancelled entries.
pub fn axpy(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in w {
        let delta = c * x;
        match v.get_mut(&k) {
            Some(e) => {
                *e += &delta;
                if e.is_zero() {
                    v.remove(&k);
                }
            }
            None => {
                v.insert(k, delta);
            }
        }
    }
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    v.iter().map(|(&k, x)| (k, x * c)).collect()
}

/// Assigns dense coordinate numbers to arbitrary keys, in first-seen order.
#[derive(Debug, Clone)]
pub struct Coordinates<K> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
}

impl<K: Hash + Eq + Clone> Coordinates<K> {
    pub fn new() -> Self {
        Coordinates { index: HashMap::new(), keys: Vec::new() }
    }

    pub fn index_of(&mut self, key: K) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let i = self.keys.len();
        self.index.insert(key.clone(), i);
        self.keys.push(key);
        i
    }

    pub fn get(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

impl<K: Hash + Eq + Clone> Default for Coordinates<K> {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone)]
struct PivotRow {
    vector: SparseVec,
    combination: Option<SparseVec>,
}

/// Incremental echelon basis of the span of generator vectors.
///
/// Pivot rows are normalised to leading coefficient one. When combination
/// tracking is enabled each pivot row also records which combination of the
/// generators produced it; that is what [`SpanSolver::express`] and
/// [`SpanSolver::relations`] need. Membership alone does not.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    rows: BTreeMap<usize, PivotRow>,
    track: bool,
    generators: usize,
    relations: Vec<SparseVec>,
}

impl SpanSolver {
    /// Solver that tracks combinations of the generators.
    pub fn new() -> Self {
        SpanSolver { rows: BTreeMap::new(), track: true, generators: 0, relations: Vec::new() }
    }

    /// Membership-only solver.
    pub fn membership_only() -> Self {
        SpanSolver { track: false, ..Self::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.generators
    }

    /// Reduce `v` (and its combination) against the pivot rows until either it
    /// vanishes or its leading coordinate has no pivot.
    fn reduce(&self, v: &mut SparseVec, mut comb: Option<&mut SparseVec>) {
        loop {
            let Some((&lead, c)) = v.iter().next() else { return };
            let Some(row) = self.rows.get(&lead) else { return };
            let factor = -c.clone();
            axpy(v, &factor, &row.vector);
            if let (Some(comb), Some(rc)) = (comb.as_deref_mut(), row.combination.as_ref()) {
                axpy(comb, &factor, rc);
            }
        }
    }

    /// Append a generator. Returns true when it enlarged the span.
    pub fn push(&mut self, mut v: SparseVec) -> bool {
        let id = self.generators;
        self.generators += 1;
        let mut comb = self.track.then(|| SparseVec::from([(id, Scalar::one())]));
        self.reduce(&mut v, comb.as_mut());
        let Some((&lead, c)) = v.iter().next() else {
            if let Some(comb) = comb {
                self.relations.push(comb);
            }
            return false;
        };
        let inv = c.inverse().expect("leading entry is nonzero");
        let vector = scale(&v, &inv);
        let combination = comb.map(|cb| scale(&cb, &inv));
        self.rows.insert(lead, PivotRow { vector, combination });
        true
    }

    pub fn contains(&self, target: &SparseVec) -> bool {
        let mut v = target.clone();
        self.reduce(&mut v, None);
        v.is_empty()
    }

    /// Coefficients `x` with `sum_g x_g * generator_g = target`, if any.
    /// Panics if combination tracking is disabled.
    pub fn express(&self, target: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "express requires combination tracking");
        let mut v = target.clone();
        let mut comb = SparseVec::new();
        self.reduce(&mut v, Some(&mut comb));
        // target - sum(comb rows) reduced to v; target is in the span iff v = 0,
        // and then target = -comb in terms of generators.
        v.is_empty().then(|| comb.into_iter().map(|(k, x)| (k, -x)).collect())
    }

    /// Basis of the linear relations among the generators pushed so far, one
    /// per generator that was dependent on its predecessors.
    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }
}

impl Default for SpanSolver {
    fn default() -> Self {
        Self::new()
    }
}

/// Solve `columns * x = target`, where `columns[g]` is the g-th column.
/// Returns one solution if the system is consistent.
pub fn solve_columns(columns: &[SparseVec], target: &SparseVec) -> Option<Vec<Scalar>> {
    let mut solver = SpanSolver::new();
    for c in columns {
        solver.push(c.clone());
    }
    let x = solver.express(target)?;
    Some((0..columns.len()).map(|g| x.get(&g).cloned().unwrap_or_else(Scalar::zero)).collect())
}

/// Determinant of a dense square matrix by Gaussian elimination.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = &det * &pivot;
        let inv = pivot.inverse().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let (upper, lower) = a.split_at_mut(r);
            for (dst, src) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *dst -= &(&f * src);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, x)| (k, Scalar::from_int(x))).collect()
    }

    #[test]
    fn span_membership_and_relations() {
        let mut s = SpanSolver::new();
        assert!(s.push(v(&[(0, 1), (1, 1)])));
        assert!(s.push(v(&[(1, 1), (2, 1)])));
        assert!(!s.push(v(&[(0, 1), (2, -1)])));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.relations().len(), 1);
        let rel = &s.relations()[0];
        // g2 = g0 - g1
        assert_eq!(rel, &v(&[(0, -1), (1, 1), (2, 1)]));
        assert!(s.contains(&v(&[(0, 2), (1, 3), (2, 1)])));
        assert!(!s.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn express_reconstructs_target() {
        let cols = vec![v(&[(0, 2), (1, 1)]), v(&[(0, 1), (1, 3)])];
        let target = v(&[(0, 1), (1, 7)]);
        let x = solve_columns(&cols, &target).unwrap();
        let mut back = SparseVec::new();
        for (c, xi) in cols.iter().zip(&x) {
            axpy(&mut back, xi, c);
        }
        assert_eq!(back, target);
        assert!(solve_columns(&cols[..1], &target).is_none());
    }

    #[test]
    fn determinants() {
        let m = |r: &[&[i64]]| -> Vec<Vec<Scalar>> {
            r.iter().map(|row| row.iter().map(|&x| Scalar::from_int(x)).collect()).collect()
        };
        assert_eq!(determinant(&m(&[&[2, 1], &[1, 3]])), Scalar::from_int(5));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), Scalar::from_int(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), Scalar::zero());
        assert_eq!(determinant(&m(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]])), Scalar::one());
        assert_eq!(determinant(&[]), Scalar::one());
    }
}

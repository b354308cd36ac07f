//! Incremental sparse row echelon form.

use std::collections::BTreeMap;

use crate::Scalar;

pub type SparseVec = BTreeMap<usize, Scalar>;

/// Rows kept monic at their pivot; a column index lower than another is eliminated first.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// The stored rows, each monic at its pivot, ordered by pivot.
    pub fn basis(&self) -> impl Iterator<Item = &[(usize, Scalar)]> + '_ {
        self.rows.values().map(Vec::as_slice)
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Unique normal form of `v` modulo the row span: it has no entry in a pivot column.
    pub fn reduce(&self, v: &mut SparseVec) {
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, x)) = next else { break };
            for (j, r) in &self.rows[&c] {
                let e = v.entry(*j).or_default();
                *e -= &(&x * r);
                if e.is_zero() {
                    v.remove(j);
                }
            }
            cursor = c + 1;
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, x| !x.is_zero());
        self.reduce(&mut v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        debug_assert!(p < self.ncols, "column out of range");
        let inv = lead.inv().expect("nonzero lead");
        let row: Vec<(usize, Scalar)> = v.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        w.retain(|_, x| !x.is_zero());
        self.reduce(&mut w);
        w.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[(usize, i64)]) -> SparseVec {
        e.iter().map(|&(j, x)| (j, Scalar::int(x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new(4);
        assert!(e.insert(sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(sv(&[(1, 1), (3, 1)])));
        assert!(!e.insert(sv(&[(0, 2), (1, 5), (3, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&sv(&[(0, 1), (1, 3), (3, 1)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
        assert_eq!(e.free_columns(), vec![2, 3]);
    }

    #[test]
    fn normal_form_avoids_pivots() {
        let mut e = SparseEchelon::new(3);
        e.insert(sv(&[(0, 1), (2, -1)]));
        let mut v = sv(&[(0, 3), (1, 1)]);
        e.reduce(&mut v);
        assert_eq!(v, sv(&[(1, 1), (2, 3)]));
    }
}

use super::EdgeVector;
use crate::error::{Error, Result};

/// Outcome of [`Gf2Basis::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InsertOutcome {
    /// The reduced residual was nonzero and became a new row.
    Extended { pivot: usize },
    /// The vector was already in the span.
    Absorbed,
}

/// Incremental row-echelon basis.
///
/// Every row's pivot is its lowest set bit and pivots are pairwise
/// distinct. Reducing by the row owning the current lowest bit strictly
/// raises that lowest bit, so reduction terminates after at most `rank`
/// XORs.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    m: usize,
    rows: Vec<EdgeVector>,
    // pivot column -> row index, usize::MAX when free
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new(m: usize) -> Self {
        Gf2Basis { m, rows: Vec::new(), pivots: vec![usize::MAX; m] }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a EdgeVector>>(m: usize, vs: I) -> Result<Self> {
        let mut b = Self::new(m);
        for v in vs {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn host_m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[EdgeVector] {
        &self.rows
    }

    pub fn pivot_of(&self, row: usize) -> usize {
        self.rows[row].lowest_one().expect("rows are nonzero")
    }

    fn check(&self, v: &EdgeVector) -> Result<()> {
        if v.host_m() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: v.host_m() });
        }
        Ok(())
    }

    /// Reduces `v` against the rows; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &EdgeVector) -> Result<EdgeVector> {
        self.check(v)?;
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        Ok(r)
    }

    fn reduce_in_place(&self, r: &mut EdgeVector) {
        while let Some(low) = r.lowest_one() {
            match self.pivots[low] {
                usize::MAX => break,
                row => r.xor_unchecked(&self.rows[row]),
            }
        }
    }

    pub fn insert(&mut self, v: &EdgeVector) -> Result<InsertOutcome> {
        self.check(v)?;
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        Ok(match r.lowest_one() {
            None => InsertOutcome::Absorbed,
            Some(pivot) => {
                self.pivots[pivot] = self.rows.len();
                self.rows.push(r);
                InsertOutcome::Extended { pivot }
            }
        })
    }

    pub fn in_span(&self, v: &EdgeVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Basis of `{x : <x, row> = 0 for every row}` inside the edge space.
    ///
    /// Computed from the fully reduced echelon form: one basis vector per
    /// non-pivot coordinate.
    pub fn orthogonal_complement(&self) -> Vec<EdgeVector> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.lowest_one());
        let pivots: Vec<usize> = rows.iter().map(|r| r.lowest_one().unwrap()).collect();
        // clear each pivot column from every other row
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                if i != j && rows[j].get(pivots[i]) {
                    let (a, b) = if i < j {
                        let (lo, hi) = rows.split_at_mut(j);
                        (&lo[i], &mut hi[0])
                    } else {
                        let (lo, hi) = rows.split_at_mut(i);
                        (&hi[0], &mut lo[j])
                    };
                    b.xor_unchecked(a);
                }
            }
        }
        let mut is_pivot = vec![false; self.m];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.m)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = EdgeVector::zeros(self.m);
                x.set(f, true);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.get(f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_absorb() {
        let mut b = Gf2Basis::new(5);
        let v = EdgeVector::from_ids(5, [1, 3]);
        assert_eq!(b.insert(&v).unwrap(), InsertOutcome::Extended { pivot: 1 });
        assert_eq!(b.insert(&v).unwrap(), InsertOutcome::Absorbed);
        assert_eq!(b.rank(), 1);
        assert!(b.in_span(&EdgeVector::zeros(5)).unwrap());
        assert!(b.insert(&EdgeVector::zeros(6)).is_err());
        assert!(b.in_span(&EdgeVector::zeros(4)).is_err());
    }

    #[test]
    fn pivots_stay_distinct() {
        let mut b = Gf2Basis::new(8);
        for ids in [vec![0, 1], vec![0, 2], vec![1, 2], vec![3], vec![0, 3, 7]] {
            b.insert(&EdgeVector::from_ids(8, ids)).unwrap();
        }
        let mut pivots: Vec<_> = (0..b.rank()).map(|i| b.pivot_of(i)).collect();
        pivots.sort();
        pivots.dedup();
        assert_eq!(pivots.len(), b.rank());
        assert_eq!(b.rank(), 4);
    }

    #[test]
    fn complement_is_orthogonal_and_complete() {
        let mut b = Gf2Basis::new(7);
        for ids in [vec![0, 1, 4], vec![1, 2, 6], vec![0, 2, 3, 5]] {
            b.insert(&EdgeVector::from_ids(7, ids)).unwrap();
        }
        let perp = b.orthogonal_complement();
        assert_eq!(perp.len(), 7 - b.rank());
        for x in &perp {
            for r in b.rows() {
                assert!(!x.intersection_parity(r).unwrap());
            }
        }
        let pb = Gf2Basis::from_vectors(7, &perp).unwrap();
        assert_eq!(pb.rank(), perp.len());
    }
}

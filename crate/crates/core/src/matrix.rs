use std::fmt::Write as _;

use crate::weight::{ExtDist, Weight};

/// Dense all-pairs distance table, row `u` holding distances from `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix<W> {
    n: usize,
    data: Vec<ExtDist<W>>,
}

impl<W: Weight> DistMatrix<W> {
    /// Zero diagonal, `+inf` elsewhere.
    pub fn new(n: usize) -> Self {
        let mut data = vec![ExtDist::inf(); n * n];
        for u in 0..n {
            data[u * n + u] = ExtDist::zero();
        }
        DistMatrix { n, data }
    }

    pub fn from_rows(n: usize, data: Vec<ExtDist<W>>) -> Self {
        assert_eq!(data.len(), n * n);
        DistMatrix { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> ExtDist<W> {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, d: ExtDist<W>) {
        self.data[u * self.n + v] = d;
    }

    /// Lowers `(u, v)` to `d` if that is smaller.
    #[inline]
    pub fn improve(&mut self, u: usize, v: usize, d: ExtDist<W>) {
        let cell = &mut self.data[u * self.n + v];
        if d < *cell {
            *cell = d;
        }
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[ExtDist<W>] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    #[inline]
    pub fn row_mut(&mut self, u: usize) -> &mut [ExtDist<W>] {
        &mut self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn transposed(&self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for u in 0..n {
            data.extend((0..n).map(|v| self.data[v * n + u]));
        }
        DistMatrix { n, data }
    }

    /// `src,dst,dist` rows for every ordered pair, `inf` for unreachable.
    pub fn to_csv(&self) -> String {
        let mut s = String::with_capacity(12 * self.n * self.n + 16);
        s.push_str("src,dst,dist\n");
        for u in 0..self.n {
            for v in 0..self.n {
                let _ = writeln!(s, "{u},{v},{}", self.get(u, v));
            }
        }
        s
    }

    /// First pair where the two tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.n, i % self.n))
    }
}

impl<W: Weight> std::fmt::Debug for DistMatrix<W> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "DistMatrix({})", self.n)?;
        for u in 0..self.n {
            f.debug_list().entries(self.row(u)).finish()?;
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut m = DistMatrix::<i64>::new(2);
        m.set(0, 1, ExtDist::finite(-3));
        assert_eq!(m.to_csv(), "src,dst,dist\n0,0,0\n0,1,-3\n1,0,inf\n1,1,0\n");
        assert_eq!(m.transposed().get(1, 0), ExtDist::finite(-3));
        assert_eq!(m.first_difference(&m.transposed()), Some((0, 1)));
        assert_eq!(m.first_difference(&m), None);
    }

    #[test]
    fn improve_only_lowers() {
        let mut m = DistMatrix::<i32>::new(2);
        m.improve(0, 1, ExtDist::finite(5));
        m.improve(0, 1, ExtDist::finite(7));
        assert_eq!(m.get(0, 1).value(), Some(5));
    }
}

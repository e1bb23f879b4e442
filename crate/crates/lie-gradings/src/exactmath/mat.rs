//! Dense rational matrices with deterministic Gaussian elimination.

use super::poly::Poly;
use super::rat::{rat, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<Rat>>) -> Self {
        Mat::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn neg(&self) -> Mat {
        self.scale(&rat(-1))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = rat(0);
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Reduce to reduced row echelon form in place; returns the pivot columns.
    /// Pivot choice is the first row with a nonzero entry, so the result is
    /// deterministic.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = rat(1) / self.at(r, c);
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j) - &f * self.at(r, j);
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Deterministic basis of `{x : self * x = 0}`: reduced row echelon
    /// back-substitution with free variables taken in ascending index order.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![rat(0); self.cols];
            x[free] = rat(1);
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = -m.at(r, free).clone();
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `self * x = b` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![rat(0); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = rat(1);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(r, &c)| r != c) {
            return None;
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = rat(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return rat(0);
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.at(c, c);
            let inv = rat(1) / m.at(c, c);
            for i in c + 1..n {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c) * &inv;
                    for j in c..n {
                        let v = m.at(i, j) - &f * m.at(c, j);
                        *m.at_mut(i, j) = v;
                    }
                }
            }
        }
        det
    }

    /// Minimal polynomial by iterated Krylov spans with seed vectors
    /// `e1, e2, ...`; stops once the accumulated annihilator has the seeds'
    /// joint span equal to the whole space.
    pub fn min_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut result = Poly::one();
        for seed in 0..n {
            let mut v = vec![rat(0); n];
            v[seed] = rat(1);
            // skip seeds already annihilated by the current candidate
            let image = apply_poly_vec(&result, self, &v);
            if image.iter().all(|c| c.is_zero()) {
                continue;
            }
            let ann = krylov_annihilator(self, &v);
            result = result.lcm(&ann);
            if result.degree() == Some(n) {
                break;
            }
        }
        result
    }
}

/// Evaluate `p(m) * v` without forming `p(m)`.
fn apply_poly_vec(p: &Poly, m: &Mat, v: &[Rat]) -> Vec<Rat> {
    let mut acc = vec![rat(0); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = m.mul_vec(&acc);
        for (a, b) in acc.iter_mut().zip(v.iter()) {
            *a += c * b;
        }
    }
    acc
}

/// Monic annihilator polynomial of the Krylov sequence `v, m v, m^2 v, ...`.
fn krylov_annihilator(m: &Mat, v: &[Rat]) -> Poly {
    let n = v.len();
    let mut vectors: Vec<Vec<Rat>> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(vectors.last().unwrap());
        // does `next` lie in the span of `vectors`?
        let mut sys = Mat::zero(n, vectors.len());
        for (j, w) in vectors.iter().enumerate() {
            for i in 0..n {
                *sys.at_mut(i, j) = w[i].clone();
            }
        }
        if let Some(coeffs) = sys.solve(&next) {
            if sys.mul_vec(&coeffs) == next {
                // m^d v = sum coeffs_i m^i v  =>  x^d - sum coeffs_i x^i
                let d = vectors.len();
                let mut poly = vec![rat(0); d + 1];
                poly[d] = rat(1);
                for (i, c) in coeffs.iter().enumerate() {
                    poly[i] = -c.clone();
                }
                return Poly::new(poly);
            }
        }
        vectors.push(next);
        assert!(vectors.len() <= n + 1, "Krylov sequence failed to close");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_basics() {
        // identity 3x3 -> empty
        assert!(Mat::identity(3).nullspace().is_empty());
        // [[1, 1]] -> basis {(-1, 1)}
        let ns = m(&[&[1, 1]]).nullspace();
        assert_eq!(ns, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn nullspace_rank_nullity() {
        let a = m(&[
            &[1, 2, 0, -1, 3, 0],
            &[0, 0, 1, 4, -2, 1],
            &[1, 2, 1, 3, 1, 1],
            &[2, 4, 1, 2, 4, 1],
        ]);
        let ns = a.nullspace();
        assert_eq!(a.rank() + ns.len(), a.cols());
        for x in &ns {
            assert!(a.mul_vec(x).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert_eq!(a.det(), rat(1));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn min_poly_of_projector_and_nilpotent() {
        // projector diag(1, 1, 0): min poly x^2 - x
        let p = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(p.min_poly(), Poly::new(vec![rat(0), rat(-1), rat(1)]));
        // nilpotent single Jordan block: x^2
        let nilp = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(nilp.min_poly(), Poly::monomial(rat(1), 2));
        // companion of x^2 - x - 1
        let c = m(&[&[0, 1], &[1, 1]]);
        assert_eq!(
            c.min_poly(),
            Poly::new(vec![rat(-1), rat(-1), rat(1)]),
        );
    }

    #[test]
    fn min_poly_annihilates() {
        let a = m(&[&[3, 1, 0], &[0, 3, 0], &[0, 0, 5]]);
        let mu = a.min_poly();
        assert!(mu.eval_mat(&a).is_zero());
        assert_eq!(mu.degree(), Some(3)); // (x-3)^2 (x-5)
        let half = Mat::identity(2).scale(&ratio(1, 2));
        assert_eq!(half.min_poly(), Poly::new(vec![ratio(-1, 2), rat(1)]));
    }
}

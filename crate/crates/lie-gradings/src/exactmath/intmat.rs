//! Integer matrices with exact Hermite and Smith normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
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

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            *self.at_mut(r, j) = v;
        }
    }

    /// row a += f * row b
    fn add_multiple_of_row(&mut self, a: usize, b: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.at(a, j) + f * self.at(b, j);
            *self.at_mut(a, j) = v;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, c).clone();
            *self.at_mut(i, c) = v;
        }
    }

    /// col a += f * col b
    fn add_multiple_of_col(&mut self, a: usize, b: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.at(i, a) + f * self.at(i, b);
            *self.at_mut(i, a) = v;
        }
    }

    /// Canonical row-style Hermite Normal Form. Returns `(h, u)` with
    /// `h = u * self`, `u` unimodular, pivots positive, entries above each
    /// pivot reduced into `[0, pivot)`, zero rows at the bottom. The nonzero
    /// rows are the unique canonical basis of the row lattice.
    pub fn hnf(&self) -> (IntMat, IntMat) {
        let mut h = self.clone();
        let mut u = IntMat::identity(self.rows);
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // gcd-reduce column c on rows r..
            loop {
                let mut pivot: Option<usize> = None;
                for i in r..self.rows {
                    if !h.at(i, c).is_zero() {
                        pivot = match pivot {
                            None => Some(i),
                            Some(p) => {
                                if h.at(i, c).abs() < h.at(p, c).abs() {
                                    Some(i)
                                } else {
                                    Some(p)
                                }
                            }
                        };
                    }
                }
                let Some(p) = pivot else { break };
                h.swap_rows(r, p);
                u.swap_rows(r, p);
                let mut done = true;
                for i in r + 1..self.rows {
                    if !h.at(i, c).is_zero() {
                        let q = -(h.at(i, c).div_floor(h.at(r, c)));
                        h.add_multiple_of_row(i, r, &q);
                        u.add_multiple_of_row(i, r, &q);
                        if !h.at(i, c).is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h.at(r, c).is_zero() {
                continue;
            }
            if h.at(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            for i in 0..r {
                let q = -(h.at(i, c).div_floor(h.at(r, c)));
                h.add_multiple_of_row(i, r, &q);
                u.add_multiple_of_row(i, r, &q);
            }
            r += 1;
        }
        (h, u)
    }

    /// Nonzero rows of the canonical HNF: the canonical basis of the row lattice.
    pub fn row_lattice_basis(&self) -> IntMat {
        let (h, _) = self.hnf();
        let rows: Vec<Vec<BigInt>> = (0..h.rows)
            .map(|i| h.row(i))
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        if rows.is_empty() {
            IntMat::zero(0, self.cols)
        } else {
            IntMat::from_rows(rows)
        }
    }

    /// Smith Normal Form: `(s, u, v)` with `s = u * self * v`, `u`, `v`
    /// unimodular, `s` diagonal with nonnegative entries in a divisibility
    /// chain `d_1 | d_2 | ...`.
    pub fn snf(&self) -> Snf {
        let mut s = self.clone();
        let mut u = IntMat::identity(self.rows);
        let mut v = IntMat::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            // find minimal nonzero |entry| in the trailing submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if !s.at(i, j).is_zero() {
                        pivot = match pivot {
                            None => Some((i, j)),
                            Some((pi, pj)) => {
                                if s.at(i, j).abs() < s.at(pi, pj).abs() {
                                    Some((i, j))
                                } else {
                                    Some((pi, pj))
                                }
                            }
                        };
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // clear row t and column t
            let mut clean = true;
            for i in t + 1..self.rows {
                if !s.at(i, t).is_zero() {
                    let q = -(s.at(i, t).div_floor(s.at(t, t)));
                    s.add_multiple_of_row(i, t, &q);
                    u.add_multiple_of_row(i, t, &q);
                    if !s.at(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..self.cols {
                if !s.at(t, j).is_zero() {
                    let q = -(s.at(t, j).div_floor(s.at(t, t)));
                    s.add_multiple_of_col(j, t, &q);
                    v.add_multiple_of_col(j, t, &q);
                    if !s.at(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // ensure the pivot divides every remaining entry
            let mut fixed = true;
            'outer: for i in t + 1..self.rows {
                for j in t + 1..self.cols {
                    if !(s.at(i, j) % s.at(t, t)).is_zero() {
                        s.add_multiple_of_row(t, i, &BigInt::one());
                        u.add_multiple_of_row(t, i, &BigInt::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if !fixed {
                continue;
            }
            if s.at(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        Snf { s, u, v }
    }

    /// Invariant factors of the Smith form `d_1 | d_2 | ...` (nonzero ones).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let snf = self.snf();
        let n = self.rows.min(self.cols);
        (0..n)
            .map(|i| snf.s.at(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    /// The row lattice is saturated iff all invariant factors are 1, i.e. the
    /// quotient of the ambient `Z^cols` by the lattice is torsion-free.
    pub fn is_saturated(&self) -> bool {
        self.invariant_factors().iter().all(|d| d.is_one())
    }

    /// One integer solution of `self * x = b`, or `None`.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(self.rows, b.len());
        let snf = self.snf();
        let ub = snf.u.mul_vec(b);
        let n = self.rows.min(self.cols);
        let mut y = vec![BigInt::zero(); self.cols];
        for i in 0..self.rows {
            let d = if i < n {
                snf.s.at(i, i).clone()
            } else {
                BigInt::zero()
            };
            if d.is_zero() {
                if !ub[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = ub[i].div_rem(&d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        Some(snf.v.mul_vec(&y))
    }
}

/// Smith Normal Form `s = u * m * v` with unimodular transforms.
#[derive(Debug, Clone)]
pub struct Snf {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_identity_and_gcd() {
        let id = IntMat::identity(3);
        let (h, u) = id.hnf();
        assert_eq!(h, id);
        assert_eq!(u, id);

        // rows (2) and (3) generate Z: single nonzero row [1]
        let m = IntMat::from_i64(&[&[2], &[3]]);
        let (h, u) = m.hnf();
        assert_eq!(h.at(0, 0), &BigInt::one());
        assert!(h.at(1, 0).is_zero());
        assert_eq!(u.mul(&m), h);
    }

    #[test]
    fn hnf_same_lattice_same_form() {
        let a = IntMat::from_i64(&[&[1, -1, 0], &[0, 1, -1]]);
        let b = IntMat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]);
        assert_eq!(a.row_lattice_basis(), b.row_lattice_basis());
    }

    #[test]
    fn snf_examples() {
        let id = IntMat::identity(2);
        let snf = id.snf();
        assert_eq!(snf.s, id);
        assert_eq!(snf.u, id);
        assert_eq!(snf.v, id);

        let z = IntMat::from_i64(&[&[0]]);
        assert!(z.snf().s.at(0, 0).is_zero());

        let m = IntMat::from_i64(&[&[2, 4], &[6, 8]]);
        let snf = m.snf();
        assert_eq!(snf.s.at(0, 0), &BigInt::from(2));
        assert_eq!(snf.s.at(1, 1), &BigInt::from(4));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
    }

    #[test]
    fn saturation() {
        assert!(IntMat::from_i64(&[&[1, -1, 0], &[1, 1, -1]]).is_saturated());
        assert!(!IntMat::from_i64(&[&[2, 0, -1], &[0, 2, -1]]).is_saturated());
        assert!(!IntMat::from_i64(&[&[2, 0]]).is_saturated());
        assert!(IntMat::from_i64(&[&[2, 1]]).is_saturated());
    }

    #[test]
    fn integer_solve() {
        let a = IntMat::from_i64(&[&[2, 1], &[1, 1]]);
        let x = a.solve_integer(&[BigInt::from(3), BigInt::from(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![BigInt::from(3), BigInt::from(2)]);
        // 2x = 1 has no integer solution
        let b = IntMat::from_i64(&[&[2]]);
        assert!(b.solve_integer(&[BigInt::one()]).is_none());
    }
}

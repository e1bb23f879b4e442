//! Exact rational linear programming: two-phase primal simplex with Bland's
//! rule, so every run is deterministic and cycle-free.

use super::rat::{rat, Rat};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// A linear program with optional per-variable bounds.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Rat>,
    pub constraints: Vec<(Vec<Rat>, Rel, Rat)>,
    pub bounds: Vec<(Option<Rat>, Option<Rat>)>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<Rat>) -> Self {
        let n = objective.len();
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
            bounds: vec![(None, None); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push_constraint(&mut self, row: Vec<Rat>, rel: Rel, rhs: Rat) {
        assert_eq!(row.len(), self.num_vars());
        self.constraints.push((row, rel, rhs));
    }

    pub fn set_bounds(&mut self, var: usize, lo: Option<Rat>, hi: Option<Rat>) {
        self.bounds[var] = (lo, hi);
    }

    /// Exact feasibility check of a point against constraints and bounds.
    pub fn is_feasible(&self, x: &[Rat]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        for (j, (lo, hi)) in self.bounds.iter().enumerate() {
            if let Some(lo) = lo {
                if &x[j] < lo {
                    return false;
                }
            }
            if let Some(hi) = hi {
                if &x[j] > hi {
                    return false;
                }
            }
        }
        for (row, rel, rhs) in &self.constraints {
            let lhs: Rat = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
            let ok = match rel {
                Rel::Le => &lhs <= rhs,
                Rel::Eq => &lhs == rhs,
                Rel::Ge => &lhs >= rhs,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn objective_at(&self, x: &[Rat]) -> Rat {
        self.objective.iter().zip(x.iter()).map(|(a, b)| a * b).sum()
    }
}

/// Final basis and reduced costs of the minimization standard form. At an
/// optimum every reduced cost is nonnegative.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub basis: Vec<usize>,
    pub reduced_costs: Vec<Rat>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.reduced_costs.iter().all(|c| !c.is_negative())
    }
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Optimal {
        value: Rat,
        point: Vec<Rat>,
        certificate: Certificate,
    },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rat, Vec<Rat>)> {
        match self {
            LpOutcome::Optimal { value, point, .. } => Some((value, point)),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }
}

// How an original variable maps into the nonnegative standard form.
#[derive(Debug, Clone)]
enum VarMap {
    Shifted { col: usize, lo: Rat },
    Mirrored { col: usize, hi: Rat },
    Split { pos: usize, neg: usize },
}

struct StandardForm {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    c: Vec<Rat>,
    c0: Rat,
    maps: Vec<VarMap>,
    n_std: usize,
}

fn to_standard_form(lp: &LinearProgram) -> StandardForm {
    let n = lp.num_vars();
    let mut maps = Vec::with_capacity(n);
    let mut n_std = 0;
    for j in 0..n {
        let (lo, hi) = &lp.bounds[j];
        match (lo, hi) {
            (Some(lo), _) => {
                maps.push(VarMap::Shifted {
                    col: n_std,
                    lo: lo.clone(),
                });
                n_std += 1;
            }
            (None, Some(hi)) => {
                maps.push(VarMap::Mirrored {
                    col: n_std,
                    hi: hi.clone(),
                });
                n_std += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split {
                    pos: n_std,
                    neg: n_std + 1,
                });
                n_std += 2;
            }
        }
    }

    let substitute = |row: &[Rat]| -> (Vec<Rat>, Rat) {
        let mut out = vec![rat(0); n_std];
        let mut shift = rat(0);
        for (j, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shifted { col, lo } => {
                    out[*col] += coeff;
                    shift += coeff * lo;
                }
                VarMap::Mirrored { col, hi } => {
                    out[*col] -= coeff;
                    shift += coeff * hi;
                }
                VarMap::Split { pos, neg } => {
                    out[*pos] += coeff;
                    out[*neg] -= coeff;
                }
            }
        }
        (out, shift)
    };

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut rels = Vec::new();
    for (row, rel, rhs) in &lp.constraints {
        let (srow, shift) = substitute(row);
        a.push(srow);
        b.push(rhs - shift);
        rels.push(*rel);
    }
    // upper bounds of two-sided variables become rows
    for j in 0..n {
        if let (Some(lo), Some(hi)) = (&lp.bounds[j].0, &lp.bounds[j].1) {
            if let VarMap::Shifted { col, .. } = &maps[j] {
                let mut row = vec![rat(0); n_std];
                row[*col] = rat(1);
                a.push(row);
                b.push(hi - lo);
                rels.push(Rel::Le);
            }
        }
    }

    let (mut c, cshift) = substitute(&lp.objective);
    let mut c0 = cshift;
    if lp.sense == Sense::Maximize {
        for v in c.iter_mut() {
            *v = -v.clone();
        }
        c0 = -c0;
    }

    // orient rows so that b >= 0, then add slack / surplus columns
    let m = a.len();
    for i in 0..m {
        if b[i].is_negative() {
            for v in a[i].iter_mut() {
                *v = -v.clone();
            }
            b[i] = -b[i].clone();
            rels[i] = match rels[i] {
                Rel::Le => Rel::Ge,
                Rel::Eq => Rel::Eq,
                Rel::Ge => Rel::Le,
            };
        }
    }
    let mut extra = 0;
    for rel in &rels {
        if *rel != Rel::Eq {
            extra += 1;
        }
    }
    let total = n_std + extra;
    let mut col = n_std;
    for (i, rel) in rels.iter().enumerate() {
        a[i].resize(total, rat(0));
        match rel {
            Rel::Le => {
                a[i][col] = rat(1);
                col += 1;
            }
            Rel::Ge => {
                a[i][col] = rat(-1);
                col += 1;
            }
            Rel::Eq => {}
        }
    }
    for row in a.iter_mut() {
        row.resize(total, rat(0));
    }
    c.resize(total, rat(0));

    StandardForm {
        a,
        b,
        c,
        c0,
        maps,
        n_std: total,
    }
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // m x (cols + 1), last entry is b
    cost: Vec<Rat>,      // cols + 1, last entry is -value
    basis: Vec<usize>,
    cols: usize,
    allowed: usize, // columns >= allowed may not enter (artificials in phase 2)
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = rat(1) / &self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let f = self.rows[i][c].clone();
                for j in 0..=self.cols {
                    let v = &self.rows[i][j] - &f * &self.rows[r][j];
                    self.rows[i][j] = v;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for j in 0..=self.cols {
                let v = &self.cost[j] - &f * &self.rows[r][j];
                self.cost[j] = v;
            }
        }
        self.basis[r] = c;
    }

    /// Reset the cost row for the objective `c` (length cols), value offset 0.
    fn load_costs(&mut self, c: &[Rat]) {
        self.cost = c.to_vec();
        self.cost.push(rat(0));
        for r in 0..self.rows.len() {
            let j = self.basis[r];
            if !self.cost[j].is_zero() {
                let f = self.cost[j].clone();
                for k in 0..=self.cols {
                    let v = &self.cost[k] - &f * &self.rows[r][k];
                    self.cost[k] = v;
                }
            }
        }
    }

    /// Bland's rule primal simplex on the current cost row.
    /// Returns false on unboundedness.
    fn run(&mut self) -> bool {
        loop {
            let entering = (0..self.allowed).find(|&j| self.cost[j].is_negative());
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(l) => {
                            let ratio_i = &self.rows[i][self.cols] / &self.rows[i][c];
                            let ratio_l = &self.rows[l][self.cols] / &self.rows[l][c];
                            match ratio_i.cmp(&ratio_l) {
                                std::cmp::Ordering::Less => true,
                                std::cmp::Ordering::Greater => false,
                                std::cmp::Ordering::Equal => self.basis[i] < self.basis[l],
                            }
                        }
                    };
                    if better {
                        leave = Some(i);
                    }
                }
            }
            let Some(r) = leave else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

/// Solve exactly. Infeasible and Unbounded are results, not failures.
pub fn simplex_solve(lp: &LinearProgram) -> LpOutcome {
    let sf = to_standard_form(lp);
    let m = sf.a.len();
    let n = sf.n_std;

    // artificial columns, one per row; slack columns reused where possible
    // would be an optimization, but plain artificials keep the code small.
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = sf.a[i].clone();
        row.resize(cols, rat(0));
        row[n + i] = rat(1);
        row.push(sf.b[i].clone());
        rows.push(row);
    }
    let basis: Vec<usize> = (0..m).map(|i| n + i).collect();
    let mut t = Tableau {
        rows,
        cost: vec![],
        basis,
        cols,
        allowed: cols,
    };

    // phase 1: minimize the sum of artificials
    let mut phase1 = vec![rat(0); cols];
    for j in n..cols {
        phase1[j] = rat(1);
    }
    t.load_costs(&phase1);
    if !t.run() {
        // the phase-1 objective is bounded below by zero
        unreachable!("phase 1 cannot be unbounded");
    }
    if t.cost[t.cols].is_negative() {
        return LpOutcome::Infeasible;
    }

    // drive remaining artificials out of the basis
    let mut drop_rows = Vec::new();
    for r in 0..t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => drop_rows.push(r),
            }
        }
    }
    for &r in drop_rows.iter().rev() {
        t.rows.remove(r);
        t.basis.remove(r);
    }
    t.allowed = n;

    // phase 2
    let mut phase2 = sf.c.clone();
    phase2.resize(cols, rat(0));
    t.load_costs(&phase2);
    if !t.run() {
        return LpOutcome::Unbounded;
    }

    // read off the standard-form solution
    let mut xstd = vec![rat(0); n];
    for (r, &j) in t.basis.iter().enumerate() {
        if j < n {
            xstd[j] = t.rows[r][t.cols].clone();
        }
    }
    let mut point = Vec::with_capacity(lp.num_vars());
    for map in &sf.maps {
        let v = match map {
            VarMap::Shifted { col, lo } => lo + &xstd[*col],
            VarMap::Mirrored { col, hi } => hi - &xstd[*col],
            VarMap::Split { pos, neg } => &xstd[*pos] - &xstd[*neg],
        };
        point.push(v);
    }

    let value = lp.objective_at(&point);
    let internal = -t.cost[t.cols].clone();
    debug_assert_eq!(
        value,
        match lp.sense {
            Sense::Maximize => -(sf.c0.clone() + internal),
            Sense::Minimize => sf.c0.clone() + internal,
        },
        "tableau value disagrees with the solution point"
    );

    let certificate = Certificate {
        basis: t.basis.clone(),
        reduced_costs: t.cost[..n].to_vec(),
    };
    LpOutcome::Optimal {
        value,
        point,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn maximize_single_variable() {
        // maximize x s.t. x <= 3
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(1)]);
        lp.push_constraint(vec![rat(1)], Rel::Le, rat(3));
        let (value, point) = simplex_solve(&lp).optimal().unwrap();
        assert_eq!(value, rat(3));
        assert_eq!(point, vec![rat(3)]);
    }

    #[test]
    fn infeasible_program() {
        // maximize x s.t. x <= -1, x >= 0
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(1)]);
        lp.push_constraint(vec![rat(1)], Rel::Le, rat(-1));
        lp.set_bounds(0, Some(rat(0)), None);
        assert!(simplex_solve(&lp).is_infeasible());
    }

    #[test]
    fn unbounded_program() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(1)]);
        lp.push_constraint(vec![rat(-1)], Rel::Le, rat(0));
        assert!(matches!(simplex_solve(&lp), LpOutcome::Unbounded));
    }

    #[test]
    fn equality_and_free_variables() {
        // maximize x - y s.t. x + y = 1, x <= 3/4, y free
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(1), rat(-1)]);
        lp.push_constraint(vec![rat(1), rat(1)], Rel::Eq, rat(1));
        lp.push_constraint(vec![rat(1), rat(0)], Rel::Le, ratio(3, 4));
        let (value, point) = simplex_solve(&lp).optimal().unwrap();
        assert_eq!(point, vec![ratio(3, 4), ratio(1, 4)]);
        assert_eq!(value, ratio(1, 2));
    }

    #[test]
    fn two_sided_bounds() {
        // minimize x + y with x in [-2, 5], y in [1, 4]
        let mut lp = LinearProgram::new(Sense::Minimize, vec![rat(1), rat(1)]);
        lp.set_bounds(0, Some(rat(-2)), Some(rat(5)));
        lp.set_bounds(1, Some(rat(1)), Some(rat(4)));
        let (value, point) = simplex_solve(&lp).optimal().unwrap();
        assert_eq!(value, rat(-1));
        assert_eq!(point, vec![rat(-2), rat(1)]);
    }

    #[test]
    fn optimal_point_is_feasible_with_valid_certificate() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(2), rat(3)]);
        lp.push_constraint(vec![rat(1), rat(2)], Rel::Le, rat(14));
        lp.push_constraint(vec![rat(3), rat(-1)], Rel::Ge, rat(0));
        lp.push_constraint(vec![rat(1), rat(-1)], Rel::Le, rat(2));
        lp.set_bounds(0, Some(rat(0)), None);
        lp.set_bounds(1, Some(rat(0)), None);
        match simplex_solve(&lp) {
            LpOutcome::Optimal {
                value,
                point,
                certificate,
            } => {
                assert!(lp.is_feasible(&point));
                assert_eq!(lp.objective_at(&point), value);
                assert!(certificate.is_valid());
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }
}

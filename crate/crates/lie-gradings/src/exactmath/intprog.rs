//! Branch-and-bound integer programming over the exact LP relaxation.

use super::linprog::{simplex_solve, LinearProgram, LpOutcome, Sense};
use super::rat::{rat, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// A linear program with integrality flags. Binary variables are integral
/// with bounds clamped to `[0, 1]`.
#[derive(Debug, Clone)]
pub struct IntegerProgram {
    pub lp: LinearProgram,
    pub integral: Vec<bool>,
    pub binary: Vec<bool>,
}

impl IntegerProgram {
    /// All variables integral; binary flags default to false.
    pub fn all_integral(lp: LinearProgram) -> Self {
        let n = lp.num_vars();
        IntegerProgram {
            lp,
            integral: vec![true; n],
            binary: vec![false; n],
        }
    }

    pub fn mark_binary(&mut self, var: usize) {
        self.binary[var] = true;
        self.integral[var] = true;
        self.lp.set_bounds(var, Some(rat(0)), Some(rat(1)));
    }
}

#[derive(Debug, Clone)]
pub enum IlpOutcome {
    Optimal { value: Rat, point: Vec<BigInt> },
    Infeasible,
}

impl IlpOutcome {
    pub fn optimal(self) -> Option<(Rat, Vec<BigInt>)> {
        match self {
            IlpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

/// Deterministic branch-and-bound: depth first, branching on the
/// lowest-index fractional variable, floor branch explored first. Every
/// integral variable must carry finite box bounds.
pub fn ilp_solve(ip: &IntegerProgram) -> Result<IlpOutcome> {
    let n = ip.lp.num_vars();
    assert_eq!(ip.integral.len(), n);
    for j in 0..n {
        if ip.integral[j] {
            let (lo, hi) = &ip.lp.bounds[j];
            if lo.is_none() || hi.is_none() {
                return Err(Error::UnboundedIntegerVariable(j));
            }
        }
    }

    // work internally with minimization
    let minimize = ip.lp.sense == Sense::Minimize;
    let mut incumbent: Option<(Rat, Vec<Rat>)> = None;

    // each node overrides the variable bounds
    let mut stack = vec![ip.lp.bounds.clone()];
    while let Some(bounds) = stack.pop() {
        let mut lp = ip.lp.clone();
        lp.bounds = bounds;
        let outcome = simplex_solve(&lp);
        let (value, point) = match outcome {
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => {
                return Err(Error::Internal(
                    "unbounded LP relaxation in branch and bound",
                ))
            }
            LpOutcome::Optimal { value, point, .. } => (value, point),
        };
        if let Some((best, _)) = &incumbent {
            let worse = if minimize { &value >= best } else { &value <= best };
            if worse {
                continue;
            }
        }
        // find the first fractional integral variable
        let fractional = (0..n).find(|&j| ip.integral[j] && !point[j].denom().is_one());
        match fractional {
            None => {
                incumbent = Some((value, point));
            }
            Some(j) => {
                let floor = point[j].floor();
                let mut lo_branch = lp.bounds.clone();
                let mut hi_branch = lp.bounds.clone();
                lo_branch[j].1 = Some(floor.clone());
                hi_branch[j].0 = Some(&floor + rat(1));
                // LIFO stack: push the ceiling branch first so the floor
                // branch is explored first
                stack.push(hi_branch);
                stack.push(lo_branch);
            }
        }
    }

    match incumbent {
        None => Ok(IlpOutcome::Infeasible),
        Some((value, point)) => {
            let ints = point
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    if ip.integral[j] {
                        debug_assert!(v.denom().is_one());
                        v.numer().clone()
                    } else {
                        // callers of this solver flag every variable integral
                        v.round().numer().clone()
                    }
                })
                .collect();
            Ok(IlpOutcome::Optimal { value, point: ints })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Rel, Sense};

    #[test]
    fn chained_lower_bounds() {
        // minimize z s.t. z >= w, w >= 1, both integral
        let mut lp = LinearProgram::new(Sense::Minimize, vec![rat(1), rat(0)]);
        lp.push_constraint(vec![rat(1), rat(-1)], Rel::Ge, rat(0));
        lp.push_constraint(vec![rat(0), rat(1)], Rel::Ge, rat(1));
        lp.set_bounds(0, Some(rat(-10)), Some(rat(10)));
        lp.set_bounds(1, Some(rat(-10)), Some(rat(10)));
        let ip = IntegerProgram::all_integral(lp);
        let (value, point) = ilp_solve(&ip).unwrap().optimal().unwrap();
        assert_eq!(value, rat(1));
        assert_eq!(point[0], BigInt::one());
    }

    #[test]
    fn zero_row_is_infeasible() {
        // <w, 0> >= 1 can never hold
        let mut lp = LinearProgram::new(Sense::Minimize, vec![rat(1)]);
        lp.push_constraint(vec![rat(0)], Rel::Ge, rat(1));
        lp.set_bounds(0, Some(rat(-5)), Some(rat(5)));
        let ip = IntegerProgram::all_integral(lp);
        assert!(matches!(ilp_solve(&ip).unwrap(), IlpOutcome::Infeasible));
    }

    #[test]
    fn fractional_relaxation_rounds_up() {
        // minimize x s.t. 2x >= 3, x integral in [0, 10]: relaxation 3/2, answer 2
        let mut lp = LinearProgram::new(Sense::Minimize, vec![rat(1)]);
        lp.push_constraint(vec![rat(2)], Rel::Ge, rat(3));
        lp.set_bounds(0, Some(rat(0)), Some(rat(10)));
        let ip = IntegerProgram::all_integral(lp);
        let (value, point) = ilp_solve(&ip).unwrap().optimal().unwrap();
        assert_eq!(value, rat(2));
        assert_eq!(point, vec![BigInt::from(2)]);
    }

    #[test]
    fn unbounded_integer_variable_is_an_error() {
        let lp = LinearProgram::new(Sense::Minimize, vec![rat(1)]);
        let ip = IntegerProgram::all_integral(lp);
        assert!(matches!(
            ilp_solve(&ip),
            Err(Error::UnboundedIntegerVariable(0))
        ));
    }

    #[test]
    fn binary_knapsack() {
        // maximize 5a + 4b + 3c s.t. 2a + 3b + c <= 3, binary
        let mut lp = LinearProgram::new(Sense::Maximize, vec![rat(5), rat(4), rat(3)]);
        lp.push_constraint(vec![rat(2), rat(3), rat(1)], Rel::Le, rat(3));
        let mut ip = IntegerProgram::all_integral(lp);
        for v in 0..3 {
            ip.mark_binary(v);
        }
        let (value, point) = ilp_solve(&ip).unwrap().optimal().unwrap();
        assert_eq!(value, rat(8));
        assert_eq!(point, vec![BigInt::one(), BigInt::from(0), BigInt::one()]);
    }
}

//! Univariate polynomials over the rationals, coefficients lowest degree first.

use super::mat::Mat;
use super::rat::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Build from coefficients, lowest degree first; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![rat(0), rat(1)])
    }

    /// The monomial `c x^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![rat(0); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) + other.coeff(d));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) - other.coeff(d));
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg && !rem.is_empty() {
            let rdeg = rem.len() - 1;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                let shift = rdeg - ddeg;
                quot[shift] = factor.clone();
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] = &rem[shift + k] - &factor * c;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= ddeg {
                break;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, modulus: &Poly) -> Poly {
        self.div_rem(modulus).1
    }

    /// Divide exactly; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * rat(d as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate on a square matrix by Horner's rule.
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let n = m.rows();
        let mut acc = Mat::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Mat::identity(n).scale(c));
        }
        acc
    }

    /// Scale to leading coefficient 1; zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(rat(1) / l)),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        match r0.leading() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = rat(1) / l;
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }

    /// The square-free part `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || d == 0;
            if show_coeff {
                write!(f, "{}", super::rat::rat_to_string(&mag))?;
            }
            match d {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, d)?,
            }
        }
        Ok(())
    }
}

/// Positive divisors of `n != 0` by trial division, ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Rational roots with multiplicity, plus the root-free residual factor.
///
/// The factorization `p = residual * prod (x - r_i)^{m_i}` is exact; the
/// residual has no rational roots. Candidates come from the rational root
/// theorem applied to the primitive integer form of `p`.
pub fn rational_roots(p: &Poly) -> (Vec<Rat>, Poly) {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut rem = p.clone();

    // roots at zero
    while rem.degree().map_or(false, |d| d >= 1) && rem.coeff(0).is_zero() {
        roots.push(rat(0));
        rem = rem.div_exact(&Poly::x());
    }
    if rem.is_constant() {
        return (roots, rem);
    }

    // primitive integer form: clear denominators, drop content
    let scale = super::rat::lcm_denominators(rem.coeffs().iter());
    let ints: Vec<BigInt> = rem
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let content = ints
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::zero(), |acc, v| num_integer::gcd(acc, v.abs()));
    let ints: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();

    let mut candidates: Vec<Rat> = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            let c = Rat::new(num.clone(), den.clone());
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    }
    candidates.sort();
    let mut signed = Vec::with_capacity(candidates.len() * 2);
    for c in candidates {
        signed.push(-c.clone());
        signed.push(c);
    }
    signed.sort();

    for c in signed {
        while !rem.is_constant() && rem.eval(&c).is_zero() {
            roots.push(c.clone());
            let linear = Poly::new(vec![-c.clone(), rat(1)]);
            rem = rem.div_exact(&linear);
        }
    }
    roots.sort();
    (roots, rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn poly(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = poly(&[-1, 0, 1]);
        let d = poly(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[1, 1]));
        assert_eq!(p.gcd(&d), d.monic());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = poly(&[2, 0, 1]); // x^2 + 2
        let b = poly(&[1, 1]); // x + 1
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert!(g.is_constant());
    }

    #[test]
    fn roots_of_quadratics() {
        // x^2 - 1 -> {-1, 1}, residual 1
        let (roots, residual) = rational_roots(&poly(&[-1, 0, 1]));
        assert_eq!(roots, vec![rat(-1), rat(1)]);
        assert!(residual.is_constant());

        // x^2 - 2 -> no roots, residual itself
        let p = poly(&[-2, 0, 1]);
        let (roots, residual) = rational_roots(&p);
        assert!(roots.is_empty());
        assert_eq!(residual, p);
    }

    #[test]
    fn cubic_with_three_roots() {
        // x^3 - 2x^2 - x + 2 = (x-1)(x+1)(x-2)
        let p = poly(&[2, -1, -2, 1]);
        let (roots, residual) = rational_roots(&p);
        assert_eq!(roots, vec![rat(-1), rat(1), rat(2)]);
        assert!(residual.is_constant());
    }

    #[test]
    fn refactoring_reproduces_input() {
        // (2x - 1)^2 (x + 3) x
        let p = Poly::new(vec![rat(-1), rat(2)])
            .mul(&Poly::new(vec![rat(-1), rat(2)]))
            .mul(&poly(&[3, 1]))
            .mul(&Poly::x());
        let (roots, residual) = rational_roots(&p);
        assert_eq!(roots, vec![rat(-3), rat(0), ratio(1, 2), ratio(1, 2)]);
        let mut rebuilt = residual;
        for r in &roots {
            rebuilt = rebuilt.mul(&Poly::new(vec![-r.clone(), rat(1)]));
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[1, 1]));
        assert_eq!(p.squarefree_part(), poly(&[-1, 0, 1]).monic());
        assert!(!p.is_squarefree());
        assert!(poly(&[-1, 0, 1]).is_squarefree());
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(poly(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(poly(&[0, 2]).to_string(), "2*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}

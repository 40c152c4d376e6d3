//! Exact arithmetic in the cyclotomic field `Q(zeta_N)`, `zeta_N = exp(2*pi*i/N)`.
//!
//! Used to evaluate trace polynomials at the algebraic numbers `2cos(k*pi/q)`
//! without floating-point zero tests.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{rational_to_f64, Rational};

#[derive(Clone, Debug)]
pub struct CycloField {
    order: usize,
    /// Monic minimal polynomial of `zeta_N`, ascending coefficients.
    phi: Vec<BigInt>,
}

/// Element of a [`CycloField`] in the power basis `1, zeta, ..., zeta^(deg-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    coeffs: Vec<Rational>,
}

fn cyclotomic_poly(n: usize) -> Vec<BigInt> {
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_divide(&num, &cyclotomic_poly(d));
    }
    num
}

fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl CycloField {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        Self { order, phi: cyclotomic_poly(order) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut c: Vec<Rational>) -> CycloElem {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = c.len() - d;
            for (j, pc) in self.phi[..d].iter().enumerate() {
                c[base + j] -= &top * Rational::from_integer(pc.clone());
            }
        }
        c.resize(d, Rational::zero());
        CycloElem { coeffs: c }
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem { coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn from_rational(&self, r: &Rational) -> CycloElem {
        let mut out = self.zero();
        out.coeffs[0] = r.clone();
        out
    }

    /// `zeta^e` for any integer exponent.
    pub fn zeta_pow(&self, e: i64) -> CycloElem {
        let e = e.rem_euclid(self.order as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        self.reduce(c)
    }

    /// `zeta^e + zeta^-e`, i.e. `2cos(2*pi*e/N)`.
    pub fn two_cos(&self, e: i64) -> CycloElem {
        self.add(&self.zeta_pow(e), &self.zeta_pow(-e))
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let d = self.degree();
        let mut c = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        self.reduce(c)
    }

    pub fn to_complex(&self, a: &CycloElem) -> Complex64 {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / self.order as f64);
        a.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| zeta.powu(i as u32) * rational_to_f64(c))
            .sum()
    }
}

impl CycloElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| v.into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(CycloField::new(264).degree(), 80);
    }

    #[test]
    fn two_cos_values() {
        let f = CycloField::new(12);
        // 2cos(2*pi*2/12) = 1, 2cos(pi/2) = 0
        assert_eq!(f.two_cos(2).as_rational(), Some(&rat(1)));
        assert!(f.two_cos(3).is_zero());
        let c = f.to_complex(&f.two_cos(1));
        assert!((c.re - 3f64.sqrt()).abs() < 1e-12 && c.im.abs() < 1e-12);
    }

    #[test]
    fn multiplication_matches_complex() {
        let f = CycloField::new(30);
        let a = f.add(&f.two_cos(7), &f.from_rational(&rat(3)));
        let b = f.sub(&f.zeta_pow(11), &f.two_cos(4));
        let exact = f.to_complex(&f.mul(&a, &b));
        let approx = f.to_complex(&a) * f.to_complex(&b);
        assert!((exact - approx).norm() < 1e-10);
    }
}

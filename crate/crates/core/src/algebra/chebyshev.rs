use num_traits::One;

use super::{Coefficient, Rational, UniPoly, Var};
#[cfg(test)]
use super::rat;

/// `T_n` with `T_n(t + 1/t) = t^n + t^-n`, in the variable `s`.
pub fn chebyshev(n: usize) -> UniPoly<Rational> {
    chebyshev_in(n, Var::S)
}

pub(crate) fn chebyshev_in<C: Coefficient>(n: usize, var: Var) -> UniPoly<C> {
    let two = UniPoly::constant(var, C::from_i64(2));
    let s = UniPoly::variable(var);
    let mut prev = two.clone();
    if n == 0 {
        return prev;
    }
    let mut cur = s.clone();
    for _ in 1..n {
        let next = &(&s * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Second-kind `U_n` with `U_0 = 1`, `U_1 = s`; the coefficients of `1/(1 - s*x + x^2)`.
pub fn chebyshev_second_kind(n: usize) -> UniPoly<Rational> {
    let s = UniPoly::variable(Var::S);
    let mut prev = UniPoly::constant(Var::S, Rational::one());
    if n == 0 {
        return prev;
    }
    let mut cur = s.clone();
    for _ in 1..n {
        let next = &(&s * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

//! Traces `tr(u^i v^j)` as polynomials in `x = tr u`, `y = tr v`, `z = tr uv`.
//!
//! Three independent routes are provided: the Cayley-Hamilton recursion
//! ([`trace_word`]), the double power series of the generating function
//! ([`series_g`]) and explicit 2x2 matrices on an irreducible line
//! ([`numeric_rep`]).

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::algebra::PolyXYZ;
use crate::charvar::{AdmissiblePair, TorusKnotConfig};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceWordIndex {
    pub i: u32,
    pub j: u32,
}

fn memo() -> &'static RwLock<HashMap<(u32, u32), PolyXYZ>> {
    static MEMO: OnceLock<RwLock<HashMap<(u32, u32), PolyXYZ>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `tr(u^i v^j)`, memoized across threads.
pub fn trace_word(i: u32, j: u32) -> PolyXYZ {
    if let Some(f) = memo().read().unwrap().get(&(i, j)) {
        return f.clone();
    }
    let value = match (i, j) {
        (0, 0) => PolyXYZ::int(2),
        (0, 1) => PolyXYZ::y(),
        (1, 0) => PolyXYZ::x(),
        (1, 1) => PolyXYZ::z(),
        // v^2 = y v - 1
        (0 | 1, _) => &(&PolyXYZ::y() * &trace_word(i, j - 1)) - &trace_word(i, j - 2),
        // u^2 = x u - 1
        _ => &(&PolyXYZ::x() * &trace_word(i - 1, j)) - &trace_word(i - 2, j),
    };
    memo().write().unwrap().insert((i, j), value.clone());
    value
}

/// Which variable the numerator of the generating function pairs with `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumeratorPairing {
    /// `2 - s*x - t*y + s*t*z`, matching `G = sum tr(u^i v^j) s^i t^j`.
    Consistent,
    /// `2 - t*x - s*y + s*t*z`, the swapped reading.
    Swapped,
}

/// Expands `N(s,t) / ((1 - s*x + s^2)(1 - t*y + t^2))` as a power series and
/// returns the coefficients of `s^i t^j` for `i <= max_i`, `j <= max_j`.
pub fn series_g(max_i: usize, max_j: usize, pairing: NumeratorPairing) -> Vec<Vec<PolyXYZ>> {
    let mut num = vec![vec![PolyXYZ::zero(); max_j + 1]; max_i + 1];
    let set = |t: &mut Vec<Vec<PolyXYZ>>, i: usize, j: usize, f: PolyXYZ| {
        if i <= max_i && j <= max_j {
            t[i][j] = f;
        }
    };
    set(&mut num, 0, 0, PolyXYZ::int(2));
    let (s_coeff, t_coeff) = match pairing {
        NumeratorPairing::Consistent => (PolyXYZ::x(), PolyXYZ::y()),
        NumeratorPairing::Swapped => (PolyXYZ::y(), PolyXYZ::x()),
    };
    set(&mut num, 1, 0, -s_coeff);
    set(&mut num, 0, 1, -t_coeff);
    set(&mut num, 1, 1, PolyXYZ::z());

    // denominator D(s,t) = (1 - s x + s^2)(1 - t y + t^2), as (i, j, coeff)
    let ds = [(0, PolyXYZ::int(1)), (1, -PolyXYZ::x()), (2, PolyXYZ::int(1))];
    let dt = [(0, PolyXYZ::int(1)), (1, -PolyXYZ::y()), (2, PolyXYZ::int(1))];
    let den: Vec<(usize, usize, PolyXYZ)> = ds
        .iter()
        .flat_map(|(a, fa)| dt.iter().map(move |(b, fb)| (*a, *b, fa * fb)))
        .filter(|(a, b, _)| (*a, *b) != (0, 0))
        .collect();

    let mut g = vec![vec![PolyXYZ::zero(); max_j + 1]; max_i + 1];
    for i in 0..=max_i {
        for j in 0..=max_j {
            let mut acc = num[i][j].clone();
            for (a, b, d) in &den {
                if *a <= i && *b <= j {
                    acc = &acc - &(d * &g[i - a][j - b]);
                }
            }
            g[i][j] = acc;
        }
    }
    g
}

/// Leading `z`-coefficient of `tr(u^i v^j)` on the line of `pair`:
/// `sin(i*a) sin(j*b) / (sin a sin b)` with `a = k*pi/q`, `b = l*pi/p`.
pub fn leading_z_coeff(idx: TraceWordIndex, pair: &AdmissiblePair, cfg: &TorusKnotConfig) -> f64 {
    let (a, b) = (pair.theta_u(cfg), pair.theta_v(cfg));
    (idx.i as f64 * a).sin() * (idx.j as f64 * b).sin() / (a.sin() * b.sin())
}

pub type Mat2 = Matrix2<Complex64>;

/// Explicit `SL2(C)` matrices for a point `(x_c, y_c, z)` of an irreducible line.
#[derive(Clone, Debug)]
pub struct NumericRep {
    pub u: Mat2,
    pub v: Mat2,
    pub pair: AdmissiblePair,
    pub z_param: Complex64,
}

/// `U = diag(xi, 1/xi)` and `V` with trace `2cos(l*pi/p)`, determinant one and `tr(UV) = z`.
///
/// Writing `V = [[a, b], [c, d]]`, the trace conditions fix `a` and `d`
/// linearly; `b = 1` and `c = ad - 1` then fix the determinant.
pub fn numeric_rep(pair: &AdmissiblePair, z: Complex64, cfg: &TorusKnotConfig) -> Result<NumericRep> {
    let xi = Complex64::from_polar(1.0, pair.theta_u(cfg));
    let xi_inv = xi.inv();
    let yc = Complex64::new(pair.y_value(cfg), 0.0);
    let gap = xi - xi_inv;
    if gap.norm() < 1e-12 {
        return Err(Error::Degenerate(format!("u eigenvalues coincide for {pair:?}")));
    }
    let a = (z - xi_inv * yc) / gap;
    let d = yc - a;
    let one = Complex64::new(1.0, 0.0);
    let u = Mat2::new(xi, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), xi_inv);
    let v = Mat2::new(a, one, a * d - one, d);
    Ok(NumericRep { u, v, pair: *pair, z_param: z })
}

pub fn mat_pow(m: &Mat2, n: u32) -> Mat2 {
    (0..n).fold(Mat2::identity(), |acc, _| acc * m)
}

impl NumericRep {
    pub fn trace_word(&self, i: u32, j: u32) -> Complex64 {
        (mat_pow(&self.u, i) * mat_pow(&self.v, j)).trace()
    }

    /// Whether `U` and `V` share an eigenvector (the character is reducible).
    pub fn is_reducible(&self, tol: f64) -> bool {
        // U is diagonal, so a common eigenvector is e1 or e2
        self.v[(1, 0)].norm() < tol || self.v[(0, 1)].norm() < tol
    }
}

/// Evaluates a trace polynomial at a complex point.
pub fn eval_complex(f: &PolyXYZ, x: Complex64, y: Complex64, z: Complex64) -> Complex64 {
    f.eval_with(&x, &y, &z, |c| Complex64::new(crate::algebra::rational_to_f64(c), 0.0))
}

//! The SL2 character variety of the torus knot group `G = <u, v | u^q = v^p>`.
//!
//! Coordinates are `x = tr(u)`, `y = tr(v)`, `z = tr(uv)`. The variety is the
//! abelian curve `s -> (T_p(s), T_q(s), T_{p+q}(s))` together with one affine
//! line `{(x_c, y_c)} x C` per admissible pair.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{chebyshev, substitute, CycloElem, CycloField, PolyXYZ, Rational, UniPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusKnotConfig {
    pub p: u32,
    pub q: u32,
}

impl TorusKnotConfig {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidConfig { p, q, reason: "p and q must be at least 2" });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidConfig { p, q, reason: "p and q must be coprime" });
        }
        Ok(Self { p, q })
    }

    /// Number of irreducible components, `(p-1)(q-1)/2`.
    pub fn num_irreducible(&self) -> usize {
        ((self.p - 1) * (self.q - 1) / 2) as usize
    }
}

/// Eigenvalue labels of an irreducible representation: `rho(u)` has eigenvalue
/// `e^{i k pi/q}` and `rho(v)` has `e^{i l pi/p}`, with `k = l (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissiblePair {
    pub k: u32,
    pub l: u32,
}

impl AdmissiblePair {
    pub fn new(k: u32, l: u32, cfg: &TorusKnotConfig) -> Result<Self> {
        if !(1..cfg.q).contains(&k) || !(1..cfg.p).contains(&l) || !(k + l).is_multiple_of(2) {
            return Err(Error::IndexOutOfRange(format!("({k},{l}) is not admissible for T({},{})", cfg.p, cfg.q)));
        }
        Ok(Self { k, l })
    }

    /// Angle of the `u` eigenvalue, `k*pi/q`.
    pub fn theta_u(&self, cfg: &TorusKnotConfig) -> f64 {
        self.k as f64 * PI / cfg.q as f64
    }

    /// Angle of the `v` eigenvalue, `l*pi/p`.
    pub fn theta_v(&self, cfg: &TorusKnotConfig) -> f64 {
        self.l as f64 * PI / cfg.p as f64
    }

    pub fn x_value(&self, cfg: &TorusKnotConfig) -> f64 {
        2.0 * self.theta_u(cfg).cos()
    }

    pub fn y_value(&self, cfg: &TorusKnotConfig) -> f64 {
        2.0 * self.theta_v(cfg).cos()
    }
}

/// All admissible pairs in lexicographic order.
pub fn admissible_pairs(cfg: &TorusKnotConfig) -> Vec<AdmissiblePair> {
    (1..cfg.q)
        .flat_map(|k| (1..cfg.p).map(move |l| (k, l)))
        .filter(|(k, l)| (k + l) % 2 == 0)
        .map(|(k, l)| AdmissiblePair { k, l })
        .collect()
}

/// `(T_p, T_q, T_{p+q})` in the variable `s = t + 1/t`.
pub fn abelian_parametrization(cfg: &TorusKnotConfig) -> (UniPoly<Rational>, UniPoly<Rational>, UniPoly<Rational>) {
    let (p, q) = (cfg.p as usize, cfg.q as usize);
    (chebyshev(p), chebyshev(q), chebyshev(p + q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Abelian,
    Irreducible(AdmissiblePair),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub kind: String,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub x_c: Option<f64>,
    pub y_c: Option<f64>,
}

#[derive(Clone, Debug)]
pub enum Restriction {
    /// Coefficients of `z^0, z^1, ...` on an irreducible line, exact.
    Irreducible { pair: AdmissiblePair, z_coeffs: Vec<CycloElem> },
    /// Polynomial in the abelian parameter `s`.
    Abelian(UniPoly<Rational>),
}

impl Restriction {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Restriction::Irreducible { z_coeffs, .. } => z_coeffs.iter().rposition(|c| !c.is_zero()),
            Restriction::Abelian(f) => f.degree(),
        }
    }
}

/// The character variety of one torus knot group, with the exact field
/// `Q(zeta_{2pq})` containing every component constant.
#[derive(Clone, Debug)]
pub struct CharacterVariety {
    cfg: TorusKnotConfig,
    field: CycloField,
    pairs: Vec<AdmissiblePair>,
}

impl CharacterVariety {
    pub fn new(cfg: TorusKnotConfig) -> Self {
        let field = CycloField::new(2 * (cfg.p * cfg.q) as usize);
        Self { cfg, field, pairs: admissible_pairs(&cfg) }
    }

    pub fn config(&self) -> &TorusKnotConfig {
        &self.cfg
    }

    pub fn pairs(&self) -> &[AdmissiblePair] {
        &self.pairs
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    /// Abelian component first, then irreducible lines in pair order.
    pub fn components(&self) -> Vec<ComponentKind> {
        std::iter::once(ComponentKind::Abelian)
            .chain(self.pairs.iter().copied().map(ComponentKind::Irreducible))
            .collect()
    }

    pub fn component_records(&self) -> Vec<ComponentRecord> {
        self.components()
            .into_iter()
            .map(|c| match c {
                ComponentKind::Abelian => {
                    ComponentRecord { kind: "abelian".into(), k: None, l: None, x_c: None, y_c: None }
                }
                ComponentKind::Irreducible(pair) => ComponentRecord {
                    kind: "irreducible".into(),
                    k: Some(pair.k),
                    l: Some(pair.l),
                    x_c: Some(pair.x_value(&self.cfg)),
                    y_c: Some(pair.y_value(&self.cfg)),
                },
            })
            .collect()
    }

    /// Exact `x_c = 2cos(k*pi/q)` as an element of `Q(zeta_{2pq})`.
    pub fn x_exact(&self, pair: &AdmissiblePair) -> CycloElem {
        self.field.two_cos((pair.k * self.cfg.p) as i64)
    }

    /// Exact `y_c = 2cos(l*pi/p)`.
    pub fn y_exact(&self, pair: &AdmissiblePair) -> CycloElem {
        self.field.two_cos((pair.l * self.cfg.q) as i64)
    }

    fn eval_xy(&self, f: &PolyXYZ, x: &CycloElem, y: &CycloElem) -> CycloElem {
        let fl = &self.field;
        let max_x = f.degree_x().unwrap_or(0) as usize;
        let max_y = f.degree_y().unwrap_or(0) as usize;
        let mut xp = vec![fl.from_rational(&crate::algebra::rat(1))];
        for _ in 0..max_x {
            xp.push(fl.mul(xp.last().unwrap(), x));
        }
        let mut yp = vec![fl.from_rational(&crate::algebra::rat(1))];
        for _ in 0..max_y {
            yp.push(fl.mul(yp.last().unwrap(), y));
        }
        f.terms().fold(fl.zero(), |acc, (e, c)| {
            let mono = fl.mul(&xp[e.0 as usize], &yp[e.1 as usize]);
            fl.add(&acc, &fl.mul(&mono, &fl.from_rational(c)))
        })
    }

    pub fn restrict(&self, f: &PolyXYZ, component: ComponentKind) -> Restriction {
        match component {
            ComponentKind::Abelian => {
                let (sx, sy, sz) = abelian_parametrization(&self.cfg);
                Restriction::Abelian(substitute(f, &sx, &sy, &sz).expect("shared variable s"))
            }
            ComponentKind::Irreducible(pair) => {
                let (x, y) = (self.x_exact(&pair), self.y_exact(&pair));
                let z_coeffs = f.z_coefficients().iter().map(|c| self.eval_xy(c, &x, &y)).collect();
                Restriction::Irreducible { pair, z_coeffs }
            }
        }
    }

    /// The `z`-coefficients of `f` on the line of `pair`, computed exactly and
    /// then converted, so no cancellation happens in floating point.
    pub fn line_coefficients(&self, f: &PolyXYZ, pair: &AdmissiblePair) -> Vec<Complex64> {
        match self.restrict(f, ComponentKind::Irreducible(*pair)) {
            Restriction::Irreducible { z_coeffs, .. } => z_coeffs.iter().map(|c| self.field.to_complex(c)).collect(),
            Restriction::Abelian(_) => unreachable!(),
        }
    }

    /// Value of `f` at the point `z` of the line of `pair`.
    pub fn eval_on_line(&self, f: &PolyXYZ, pair: &AdmissiblePair, z: Complex64) -> Complex64 {
        horner(&self.line_coefficients(f, pair), z)
    }

    /// Maximal `z`-degree over the irreducible lines; `degree(0) = 0`.
    pub fn degree(&self, f: &PolyXYZ) -> usize {
        self.pairs
            .iter()
            .filter_map(|p| self.restrict(f, ComponentKind::Irreducible(*p)).degree())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `z^d` of the restriction to each irreducible line.
    pub fn leading_coeff_vector(&self, f: &PolyXYZ, d: usize) -> Vec<f64> {
        self.leading_coeff_exact(f, d).iter().map(|c| self.field.to_complex(c).re).collect()
    }

    pub fn leading_coeff_exact(&self, f: &PolyXYZ, d: usize) -> Vec<CycloElem> {
        self.pairs
            .iter()
            .map(|p| match self.restrict(f, ComponentKind::Irreducible(*p)) {
                Restriction::Irreducible { z_coeffs, .. } => {
                    z_coeffs.get(d).cloned().unwrap_or_else(|| self.field.zero())
                }
                Restriction::Abelian(_) => unreachable!(),
            })
            .collect()
    }
}

/// Evaluates `c[0] + c[1] z + ...`.
pub fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// The two reducible characters on the line of `pair`: `z = 2cos(k*pi/q +- l*pi/p)`.
pub fn abelian_meeting_points(pair: &AdmissiblePair, cfg: &TorusKnotConfig) -> (f64, f64) {
    let (a, b) = (pair.theta_u(cfg), pair.theta_v(cfg));
    (2.0 * (a + b).cos(), 2.0 * (a - b).cos())
}

/// Parameters `t = e^{i*pi*m/(pq)}`, `0 <= m < 2pq`, one per class under
/// `t -> 1/t`, whose abelian character has `x = x_c` and `y = y_c`; returned
/// with their `z` coordinate.
pub fn abelian_preimages(pair: &AdmissiblePair, cfg: &TorusKnotConfig, tol: f64) -> Vec<(u32, f64)> {
    let n = cfg.p * cfg.q;
    let (xc, yc) = (pair.x_value(cfg), pair.y_value(cfg));
    (0..=n)
        .filter_map(|m| {
            let phase = PI * m as f64 / n as f64;
            let x = 2.0 * (cfg.p as f64 * phase).cos();
            let y = 2.0 * (cfg.q as f64 * phase).cos();
            ((x - xc).abs() < tol && (y - yc).abs() < tol)
                .then(|| (m, 2.0 * ((cfg.p + cfg.q) as f64 * phase).cos()))
        })
        .collect()
}

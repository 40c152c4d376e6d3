//! The bases `e^0_j` of `S(T, 0)` and `e^k_j` of `S'(T, 2k)`.

use num_traits::Zero;

use super::multicurve::{Multicurve, SkeinElement};
use super::quotient::{mat_pow, mat_vec, identity_matrix, z_diagram, LaurentMatrix, QuotientSpace};
use super::resolve::resolve;
use super::tangle::{AnnularTangle, Slice};
use super::tau::wrap;
use crate::algebra::{LaurentA, UniPoly, Var};
use crate::{Error, Result};

/// The pattern for `e^k_j`: `k - 1` arcs around the hole and one arc that
/// winds `j` times, before normalization.
pub fn make_ekj(k: usize, j: usize, p: usize) -> Result<AnnularTangle> {
    if k == 0 || j == 0 || j >= p {
        return Err(Error::IndexOutOfRange(format!("e^{k}_{j} needs k >= 1 and 1 <= j < p = {p}")));
    }
    let mut tg = wrap(&z_diagram(k, 0).to_tangle(), j)?;
    tg.meta.insert("basis".into(), format!("e^{k}_{j}").into());
    tg.meta.insert("p".into(), p.into());
    Ok(tg)
}

/// The framing curve of slope `p` pushed into the solid torus, as a closed diagram.
pub fn framing_curve(p: usize) -> Result<AnnularTangle> {
    if p == 0 {
        return Err(Error::IndexOutOfRange("framing slope must be positive".into()));
    }
    let mut slices = vec![Slice::cup(0)];
    for _ in 1..p {
        slices.extend([Slice::cup(3), Slice::cap(0), Slice::crossing(0, 1)]);
    }
    slices.extend([Slice::cup(1), Slice::crossing(0, -1), Slice::cap(1), Slice::cap(1)]);
    Ok(AnnularTangle::new(0, slices))
}

fn core_poly(coeffs: Vec<LaurentA>) -> UniPoly<LaurentA> {
    UniPoly::new(Var::Y, coeffs)
}

/// The framing curve `l` of slope `p` as a polynomial in the core curve `y`.
pub fn expand_l(p: usize) -> Result<UniPoly<LaurentA>> {
    Ok(core_poly(resolve(&framing_curve(p)?)?.as_core_polynomial()?))
}

/// `e^0_j = l^n y^m` with `j = pn + m`, `m < p`.
pub fn make_e0j(j: usize, p: usize) -> Result<SkeinElement> {
    if p == 0 {
        return Err(Error::IndexOutOfRange("framing slope must be positive".into()));
    }
    let (n, m) = (j / p, j % p);
    let poly = &expand_l(p)?.pow(n as u32) * &UniPoly::monomial(Var::Y, LaurentA::from(1), m);
    let mut out = SkeinElement::zero();
    for (d, c) in poly.coeffs().iter().enumerate() {
        out.add_term(Multicurve::core(d as u32), c.clone());
    }
    Ok(out)
}

/// The elements `e^k_j` in `S'(T, 2k)` with their behaviour under `tau`.
pub struct EkBasis {
    pub k: usize,
    pub p: usize,
    /// Matrix of `tau` on the basis `w^m`.
    pub tau: LaurentMatrix,
    /// Row `j - 1` holds the coordinates of the unnormalized `e^k_j`.
    pub raw: Vec<Vec<LaurentA>>,
    /// `tau e^k_j = sign_j A^{u_j} e^k_{p-j}`, stored as `(sign_j, u_j)`.
    pub exponents: Vec<(i32, i32)>,
    /// Unit scalars turning `raw` into the normalized elements.
    pub normalization: Vec<LaurentA>,
}

impl EkBasis {
    pub fn compute(k: usize, p: usize) -> Result<Self> {
        let quotient = QuotientSpace::new(k, p)?;
        let tau = quotient.tau_matrix()?;
        let raw = (1..p)
            .map(|j| quotient.project(&resolve(&make_ekj(k, j, p)?)?))
            .collect::<Result<Vec<_>>>()?;
        let mut exponents = Vec::with_capacity(p - 1);
        for j in 1..p {
            let image = mat_vec(&tau, &raw[j - 1]);
            let target = &raw[p - j - 1];
            let lead = target[p - j - 1]
                .unit_inverse()
                .ok_or_else(|| Error::NonUnitLeading(format!("e^{k}_{} diagonal {}", p - j, target[p - j - 1])))?;
            let c = &image[p - j - 1] * &lead;
            let unit = c.as_unit().filter(|_| image.iter().zip(target).all(|(a, b)| *a == b * &c));
            let unit = unit.ok_or_else(|| {
                Error::Degenerate(format!("tau e^{k}_{j} is not a unit multiple of e^{k}_{}", p - j))
            })?;
            exponents.push(unit);
        }
        let mut normalization = vec![LaurentA::from(1); p - 1];
        for j in 1..p {
            if 2 * j > p {
                let (sign, u) = exponents[p - j - 1];
                normalization[j - 1] = LaurentA::monomial(sign, u);
            }
        }
        Ok(Self { k, p, tau, raw, exponents, normalization })
    }

    /// Coordinates of the normalized `e^k_j` in the basis `w^m`.
    pub fn normalized(&self, j: usize) -> Vec<LaurentA> {
        self.raw[j - 1].iter().map(|c| c * &self.normalization[j - 1]).collect()
    }

    /// Whether `e^k_j` has a unit coefficient on `w^{j-1}` and none above.
    pub fn is_triangular(&self) -> bool {
        self.raw.iter().enumerate().all(|(i, row)| {
            row[i].as_unit().is_some() && row[i + 1..].iter().all(Zero::is_zero)
        })
    }

    /// Whether `tau^{2k}` is the identity on the quotient.
    pub fn tau_has_order_2k(&self) -> bool {
        mat_pow(&self.tau, 2 * self.k as u32) == identity_matrix(self.p - 1)
    }

    /// Whether `u_{p-j} = -u_j` with matching signs.
    pub fn exponents_antisymmetric(&self) -> bool {
        (1..self.p).all(|j| {
            let (s1, u1) = self.exponents[j - 1];
            let (s2, u2) = self.exponents[self.p - j - 1];
            s1 * s2 == 1 && u1 == -u2
        })
    }

    /// Whether the normalized elements satisfy `tau e^k_j = e^k_{p-j}` exactly.
    pub fn tau_swaps_normalized(&self) -> bool {
        (1..self.p).all(|j| mat_vec(&self.tau, &self.normalized(j)) == self.normalized(self.p - j))
    }
}

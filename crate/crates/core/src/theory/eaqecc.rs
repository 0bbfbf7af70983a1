//! Entanglement-assisted quantum code parameters from hulls.

use std::fmt;

use serde::Serialize;

use super::{aligned_certificate, find_certificate, mismatch};
use crate::codes::{goppa_parity, tensor_goppa, LinearCode};
use crate::error::{Error, Result};
use crate::gf::FieldTower;
use crate::gfla::Distance;
use crate::poly::{CartesianSet, ProductPoly};

/// `[[n, k, d; c]]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EaqeccParams {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub c: usize,
    pub q: u32,
    /// `n + c − k = 2(d − 1)`. When `d` is only a lower bound, equality
    /// still forces the true distance to equal it, by the Singleton bound.
    pub mds: bool,
}

impl EaqeccParams {
    fn new(n: usize, k: usize, d: Distance, c: usize, q: u32) -> EaqeccParams {
        let mds = d.value >= 1 && n + c == k + 2 * (d.value - 1);
        EaqeccParams { n, k, d, c, q, mds }
    }
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}, {}; {}]]_{}", self.n, self.k, self.d, self.c, self.q)
    }
}

/// Whether `p` meets the Singleton bound `n + c − k ≥ 2(d − 1)` with
/// equality. Fails for `d = 0`.
pub fn is_mds_eaqecc(p: &EaqeccParams) -> Result<bool> {
    if p.d.value == 0 {
        return Err(Error::DegenerateCode);
    }
    Ok(p.n + p.c == p.k + 2 * (p.d.value - 1))
}

/// The two codes `[[n, k−h, d; n−k−h]]` and `[[n, n−k−h, d(C^⊥); k−h]]`
/// with `h = dim Hull(C)`.
pub fn eaqecc_from_code(c: &LinearCode, d: Distance, d_dual: Distance) -> Result<(EaqeccParams, EaqeccParams)> {
    let (n, k) = (c.n(), c.k());
    if k == 0 || k == n {
        return Err(Error::DegenerateCode);
    }
    let h = c.hull().k();
    let q = c.field().order();
    Ok((
        EaqeccParams::new(n, k - h, d, n - k - h, q),
        EaqeccParams::new(n, n - k - h, d_dual, k - h, q),
    ))
}

/// Exact parameter pair derived from `T(S, g)` and its partner `f`.
#[derive(Clone, Debug, Serialize)]
pub struct TensorEaqecc {
    pub j_star: usize,
    pub hull_dim: usize,
    pub pair: (EaqeccParams, EaqeccParams),
}

/// `[[n, deg g − deg gcd, deg f_{j*} + 1; deg f − deg gcd]]` and its mirror,
/// with degrees of product-form polynomials taken as `Π_j deg`.
///
/// The closed form is checked against the hull-based construction with the
/// tensor distance formula `Π (n_j − k_j + 1)`.
pub fn eaqecc_tensor(s: &CartesianSet, g: &ProductPoly, f: &ProductPoly) -> Result<TensorEaqecc> {
    let cert = aligned_certificate(s, g, f)?;
    let j = cert.j_star;
    let gcd = f.gcd(g)?;
    let (n, dg, df, dgcd) = (s.len(), g.degree(), f.degree(), gcd.degree());
    let q = s.field().order();
    let exact = |v| Distance { value: v, exact: true };
    let pair = (
        EaqeccParams::new(n, dg - dgcd, exact(f.degrees()[j] + 1), df - dgcd, q),
        EaqeccParams::new(n, df - dgcd, exact(g.degrees()[j] + 1), dg - dgcd, q),
    );
    let code = tensor_goppa(s, g)?;
    let tensor_distance = |p: &ProductPoly| {
        exact(p.degrees().iter().zip(s.sizes()).map(|(&d, n)| n - d + 1).product())
    };
    let lemma = eaqecc_from_code(&code, tensor_distance(g), tensor_distance(f))?;
    if lemma != pair {
        return Err(mismatch(format!(
            "closed form {} / {} differs from hull construction {} / {}",
            pair.0, pair.1, lemma.0, lemma.1
        )));
    }
    Ok(TensorEaqecc { j_star: j, hull_dim: code.hull().k(), pair })
}

/// Bounds `[[n, ≤ k, ≥ d; ≤ c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EaqeccBound {
    pub n: usize,
    pub k_max: usize,
    pub d_min: usize,
    pub c_max: usize,
}

impl EaqeccBound {
    fn admits(&self, p: &EaqeccParams) -> bool {
        p.n == self.n && p.k <= self.k_max && p.c <= self.c_max
    }

    fn attained_by(&self, p: &EaqeccParams) -> bool {
        p.k == self.k_max && p.c == self.c_max
    }
}

impl fmt::Display for EaqeccBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, <={}, >={}; <={}]]", self.n, self.k_max, self.d_min, self.c_max)
    }
}

/// Parameters obtained from `Γ(S, g)` next to the closed-form bounds.
#[derive(Clone, Debug, Serialize)]
pub struct GoppaEaqecc {
    pub t: usize,
    pub dim: usize,
    pub hull_dim: usize,
    /// From the hull of `Γ(S, g)`: `[[n, k−h, d(Γ); n−k−h]]` and
    /// `[[n, n−k−h, d(Γ^⊥); k−h]]`.
    pub computed: (EaqeccParams, EaqeccParams),
    /// `[[n, ≤ t(deg lcm + deg g) − n, ≥ deg f_{j*}+1; ≤ t deg lcm − deg g]]`
    /// and `[[n, ≤ t deg lcm − deg g, ≥ deg g_{j*}+1; ≤ t(deg lcm + deg g) − n]]`.
    /// The first bounds `computed.1`, the second bounds `computed.0`.
    pub bounds: (EaqeccBound, EaqeccBound),
}

/// `Π_j min(deg h_j, n_j)`, the number of parity conditions `h` imposes.
fn effective_degree(s: &CartesianSet, h: &ProductPoly) -> usize {
    h.degrees().iter().zip(s.sizes()).map(|(&d, n)| d.min(n)).product()
}

/// Computes the quantum parameters of `Γ(S, g)` and checks them against the
/// closed-form bounds; they must be attained when `t = 1` and `f_j ~ g_j`
/// off `j*`. Distances come
/// from [`LinearCode::min_distance`] with `cap`, so they may be lower bounds.
pub fn eaqecc_goppa(
    tower: &FieldTower,
    s: &CartesianSet,
    g: &ProductPoly,
    f: &ProductPoly,
    cap: Option<usize>,
) -> Result<GoppaEaqecc> {
    let cert = find_certificate(s, g, f)?;
    let j = cert.j_star;
    let t = tower.degree();
    let n = s.len();
    let lcm = f.lcm(g)?;
    let (dl, dg) = (effective_degree(s, &lcm), effective_degree(s, g));
    let wide = (t * (dl + dg)).saturating_sub(n);
    let narrow = (t * dl).saturating_sub(dg);
    let bounds = (
        EaqeccBound { n, k_max: wide, d_min: f.degrees()[j] + 1, c_max: narrow },
        EaqeccBound { n, k_max: narrow, d_min: g.degrees()[j] + 1, c_max: wide },
    );
    let gamma = goppa_parity(tower, s, g)?;
    if gamma.k() == 0 || gamma.k() == n {
        return Err(Error::DegenerateCode);
    }
    let d = gamma.min_distance(cap).expect("nonzero");
    let d_dual = gamma.dual().min_distance(cap).expect("proper");
    let computed = eaqecc_from_code(&gamma, d, d_dual)?;
    if !bounds.1.admits(&computed.0) || !bounds.0.admits(&computed.1) {
        return Err(mismatch(format!(
            "{} / {} exceed the bounds {} / {}",
            computed.0, computed.1, bounds.1, bounds.0
        )));
    }
    if t == 1 && cert.aligned && !(bounds.1.attained_by(&computed.0) && bounds.0.attained_by(&computed.1)) {
        return Err(mismatch(format!(
            "t = 1 but {} / {} do not attain {} / {}",
            computed.0, computed.1, bounds.1, bounds.0
        )));
    }
    Ok(GoppaEaqecc { t, dim: gamma.k(), hull_dim: gamma.hull().k(), computed, bounds })
}

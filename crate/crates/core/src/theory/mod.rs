//! Identities between tensor-GRS, augmented Cartesian and multivariate Goppa
//! codes: subcodes, intersections, dual partners and hulls.
//!
//! Each operation builds both sides of its identity independently and fails
//! with [`Error::MismatchDetected`] if they disagree.

mod eaqecc;
mod search;

pub use eaqecc::{
    eaqecc_from_code, eaqecc_goppa, eaqecc_tensor, is_mds_eaqecc, EaqeccBound, EaqeccParams, GoppaEaqecc,
    TensorEaqecc,
};
pub use search::{family_search, CoordOneCandidate, CoordTwoCandidate, FamilyKind, SearchConfig, SearchResult, Witness};

use std::fmt;

use crate::codes::{acar_g, goppa_parity, tensor_goppa, tensor_grs, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldTower};
use crate::poly::{big_l, ratio_representative, CartesianSet, MultiPoly, Polynomial, ProductPoly, UniPoly};

fn mismatch(what: impl Into<String>) -> Error {
    Error::MismatchDetected(what.into())
}

/// Fails with [`Error::HypothesisViolated`] unless `deg(g_j g′_j) ≤ n_j`.
fn check_degree_hypothesis(s: &CartesianSet, g: &ProductPoly, h: &ProductPoly) -> Result<()> {
    for (j, ((a, b), n)) in g.degrees().iter().zip(h.degrees()).zip(s.sizes()).enumerate() {
        if a + b > n {
            return Err(Error::HypothesisViolated(format!(
                "deg(g_{0} g'_{0}) = {1} exceeds n_{0} = {n}",
                j + 1,
                a + b
            )));
        }
    }
    Ok(())
}

/// Outcome of the three containments between codes of `g` and `g·g′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SubcodeReport {
    /// `T(S, g) ⊆ T(S, g·g′)`.
    pub tensor: bool,
    /// `Γ(S, g·g′) ⊆ Γ(S, g)`.
    pub goppa: bool,
    /// `ACar(S, g·g′) ⊆ ACar(S, g)`.
    pub acar: bool,
}

impl SubcodeReport {
    pub fn all(&self) -> bool {
        self.tensor && self.goppa && self.acar
    }
}

pub fn check_subcode_relations(
    tower: &FieldTower,
    s: &CartesianSet,
    g: &ProductPoly,
    h: &ProductPoly,
) -> Result<SubcodeReport> {
    g.check_nonvanishing(s)?;
    h.check_nonvanishing(s)?;
    check_degree_hypothesis(s, g, h)?;
    let gh = g.mul(h)?;
    Ok(SubcodeReport {
        tensor: tensor_goppa(s, &gh)?.contains(&tensor_goppa(s, g)?)?,
        goppa: goppa_parity(tower, s, g)?.contains(&goppa_parity(tower, s, &gh)?)?,
        acar: acar_g(s, g)?.contains(&acar_g(s, &gh)?)?,
    })
}

/// `T(S, g) ∩ T(S, g′) = T(S, gcd(g, g′))`.
pub fn intersect_tensor(s: &CartesianSet, g: &ProductPoly, h: &ProductPoly) -> Result<LinearCode> {
    check_degree_hypothesis(s, g, h)?;
    let lhs = tensor_goppa(s, g)?.intersect(&tensor_goppa(s, h)?)?;
    let rhs = tensor_goppa(s, &g.gcd(h)?)?;
    if lhs != rhs {
        return Err(mismatch(format!(
            "T(S,g) ∩ T(S,g') has dimension {} but T(S,gcd) has dimension {}",
            lhs.k(),
            rhs.k()
        )));
    }
    Ok(rhs)
}

/// `Γ(S, g) ∩ Γ(S, g′) = Γ(S, lcm(g, g′))`.
///
/// The intersection is the base-field part of `(T(S,g) + T(S,g′))^⊥`, so the
/// identity needs `T(S,g) + T(S,g′) = T(S,lcm)`. With several variables this
/// is an extra condition: `Π deg g_j + Π deg g′_j − Π deg gcd_j = Π deg lcm_j`,
/// which holds for instance when the factors agree off one coordinate.
/// Outside it the operation refuses with [`Error::HypothesisViolated`].
pub fn intersect_goppa(tower: &FieldTower, s: &CartesianSet, g: &ProductPoly, h: &ProductPoly) -> Result<LinearCode> {
    check_degree_hypothesis(s, g, h)?;
    g.check_nonvanishing(s)?;
    h.check_nonvanishing(s)?;
    let (gcd, lcm) = (g.gcd(h)?, g.lcm(h)?);
    if g.degree() + h.degree() != gcd.degree() + lcm.degree() {
        return Err(Error::HypothesisViolated(format!(
            "T(S,g) + T(S,g') has dimension {} but T(S,lcm) has dimension {}",
            g.degree() + h.degree() - gcd.degree(),
            lcm.degree()
        )));
    }
    let lhs = goppa_parity(tower, s, g)?.intersect(&goppa_parity(tower, s, h)?)?;
    let rhs = goppa_parity(tower, s, &lcm)?;
    if lhs != rhs {
        return Err(mismatch(format!(
            "Γ(S,g) ∩ Γ(S,g') has dimension {} but Γ(S,lcm) has dimension {}",
            lhs.k(),
            rhs.k()
        )));
    }
    Ok(rhs)
}

/// Whether `T(S, k, f) = T(S, k, F)` for `k = (n_1, …, k_{j*}, …, n_m)`,
/// decided by `deg_{x_{j*}}(F/f) = 0` and confirmed on the codes.
pub fn check_scalar_equivalence(
    s: &CartesianSet,
    kvec: &[usize],
    j_star: usize,
    f: &ProductPoly,
    big_f: &ProductPoly,
) -> Result<bool> {
    let sizes = s.sizes();
    if j_star >= s.m() {
        return Err(Error::BadIndex { index: j_star, m: s.m() });
    }
    if kvec.len() != s.m()
        || (0..s.m()).any(|j| j != j_star && kvec[j] != sizes[j])
        || kvec[j_star] == 0
        || kvec[j_star] >= sizes[j_star]
    {
        return Err(Error::PreconditionViolated(format!(
            "dimensions {kvec:?} must equal n_j off coordinate {} and lie in [1, n) on it",
            j_star + 1
        )));
    }
    f.check_nonvanishing(s)?;
    big_f.check_nonvanishing(s)?;
    let ratio = ratio_representative(big_f, f, s)?;
    let predicted = ratio.degree_in(j_star)? == Some(0);
    let actual = tensor_grs(s, kvec, f)? == tensor_grs(s, kvec, big_f)?;
    if predicted != actual {
        return Err(mismatch(format!(
            "deg_x{}(F/f) = 0 is {predicted} but code equality is {actual}",
            j_star + 1
        )));
    }
    Ok(actual)
}

/// Evaluation of the dual-partner conditions for `(S, g, f, j*)`.
#[derive(Clone, Debug)]
pub struct DualPartnerCertificate {
    /// 0-based distinguished coordinate.
    pub j_star: usize,
    pub f: ProductPoly,
    /// Reduced representative of `fg/L`.
    pub p: MultiPoly,
    /// `deg(f_{j*} g_{j*}) = n_{j*}`.
    pub degree_sum: bool,
    /// `deg f_j = deg g_j = n_j` for `j ≠ j*`.
    pub full_degrees: bool,
    /// `deg_{x_{j*}}(fg/L) = 0`.
    pub constant_ratio: bool,
    /// `gcd(f_j, g_j)` has degree `n_j` for `j ≠ j*`, i.e. `f_j` and `g_j`
    /// are associates. Needed for the hull and EAQECC formulas, which
    /// collapse to the zero code otherwise.
    pub aligned: bool,
    /// `T(S, g)^⊥ = T(S, f)`, computed directly.
    pub dual_equal: bool,
}

impl DualPartnerCertificate {
    pub fn passes(&self) -> bool {
        self.degree_sum && self.full_degrees && self.constant_ratio
    }
}

impl fmt::Display for DualPartnerCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        write!(
            f,
            "j*={} (i) {} (ii) {} (iii) {} dual {}",
            self.j_star + 1,
            mark(self.degree_sum),
            mark(self.full_degrees),
            mark(self.constant_ratio),
            mark(self.dual_equal)
        )
    }
}

pub fn dual_partner_check(
    s: &CartesianSet,
    g: &ProductPoly,
    f: &ProductPoly,
    j_star: usize,
) -> Result<DualPartnerCertificate> {
    if j_star >= s.m() {
        return Err(Error::BadIndex { index: j_star, m: s.m() });
    }
    g.check_nonvanishing(s)?;
    f.check_nonvanishing(s)?;
    let sizes = s.sizes();
    let (dg, df) = (g.degrees(), f.degrees());
    let degree_sum = df[j_star] + dg[j_star] == sizes[j_star];
    let others = || (0..s.m()).filter(|&j| j != j_star);
    let full_degrees = others().all(|j| df[j] == sizes[j] && dg[j] == sizes[j]);
    let fg = MultiPoly::from_product(&f.mul(g)?);
    let p = ratio_representative(&fg, &big_l(s), s)?;
    let constant_ratio = p.degree_in(j_star)? == Some(0);
    let aligned = others().all(|j| f.factor(j).is_associate(g.factor(j)));
    let fits = df.iter().zip(&sizes).all(|(d, n)| d <= n);
    let dual_equal = fits && tensor_goppa(s, g)?.dual() == tensor_goppa(s, f)?;
    let cert = DualPartnerCertificate {
        j_star,
        f: f.clone(),
        p,
        degree_sum,
        full_degrees,
        constant_ratio,
        aligned,
        dual_equal,
    };
    if cert.passes() && !dual_equal {
        return Err(mismatch(format!("certificate passes but T(S,g)^⊥ ≠ T(S,f): {cert}")));
    }
    Ok(cert)
}

/// The first coordinate `j*` at which `(S, g, f)` passes, as a certificate.
pub fn find_certificate(s: &CartesianSet, g: &ProductPoly, f: &ProductPoly) -> Result<DualPartnerCertificate> {
    let mut last = None;
    for j in 0..s.m() {
        let cert = dual_partner_check(s, g, f, j)?;
        if cert.passes() {
            return Ok(cert);
        }
        last = Some(cert);
    }
    Err(Error::CertificateInvalid(last.map(|c| c.to_string()).unwrap_or_default()))
}

/// Certificate that also satisfies the alignment needed by the hull formula.
fn aligned_certificate(s: &CartesianSet, g: &ProductPoly, f: &ProductPoly) -> Result<DualPartnerCertificate> {
    let cert = find_certificate(s, g, f)?;
    if !cert.aligned {
        return Err(Error::HypothesisViolated(format!(
            "f_j and g_j must be associates off coordinate {} for the hull identity",
            cert.j_star + 1
        )));
    }
    Ok(cert)
}

/// Every dual partner `f` of `g` with distinguished coordinate `j*`, one
/// per associate class of `f_{j*}`; `f_j = g_j` elsewhere.
///
/// `f_{j*}` ranges over the quotients `(λL′_{j*} + βL_{j*}) / g_{j*}` with
/// `λ ≠ 0`; `β = 0` never meets the degree condition.
pub fn dual_partners(s: &CartesianSet, g: &ProductPoly, j_star: usize) -> Result<Vec<ProductPoly>> {
    if j_star >= s.m() {
        return Err(Error::BadIndex { index: j_star, m: s.m() });
    }
    let sizes = s.sizes();
    let dg = g.degrees();
    if (0..s.m()).any(|j| j != j_star && dg[j] != sizes[j]) || dg[j_star] >= sizes[j_star] {
        return Err(Error::PreconditionViolated(format!(
            "need deg g_j = n_j off coordinate {0} and deg g_{0} < n_{0}; got degrees {dg:?} for sizes {sizes:?}",
            j_star + 1
        )));
    }
    g.check_nonvanishing(s)?;
    let field = s.field();
    let l = &s.vanishing_polys()[j_star];
    let dl = l.derivative();
    let gj = g.factor(j_star);
    let mut found: Vec<UniPoly> = Vec::new();
    for lambda in field.units() {
        for beta in field.units() {
            let target = &dl.scale(lambda) + &l.scale(beta);
            if let Some(q) = target.exact_div(gj)? {
                if !found.iter().any(|x| x.is_associate(&q)) {
                    found.push(q);
                }
            }
        }
    }
    found
        .into_iter()
        .map(|fj| {
            let mut factors = g.factors().to_vec();
            factors[j_star] = fj;
            let f = ProductPoly::new(factors)?;
            let cert = dual_partner_check(s, g, &f, j_star)?;
            if !cert.passes() {
                return Err(mismatch(format!("constructed partner fails its certificate: {cert}")));
            }
            Ok(f)
        })
        .collect()
}

pub fn find_dual_partner(s: &CartesianSet, g: &ProductPoly, j_star: usize) -> Result<Option<ProductPoly>> {
    Ok(dual_partners(s, g, j_star)?.into_iter().next())
}

/// `Hull(T(S, g)) = T(S, gcd(f, g)) = Hull(ACar(S, g))`.
pub fn hull_tensor(s: &CartesianSet, g: &ProductPoly, f: &ProductPoly) -> Result<LinearCode> {
    aligned_certificate(s, g, f)?;
    let rhs = tensor_goppa(s, &f.gcd(g)?)?;
    let hull_t = tensor_goppa(s, g)?.hull();
    if hull_t != rhs {
        return Err(mismatch(format!(
            "Hull(T(S,g)) has dimension {} but T(S,gcd(f,g)) has dimension {}",
            hull_t.k(),
            rhs.k()
        )));
    }
    let hull_a = acar_g(s, g)?.hull();
    if hull_a != rhs {
        return Err(mismatch(format!("Hull(ACar(S,g)) has dimension {}", hull_a.k())));
    }
    Ok(rhs)
}

/// Both sides of `Γ(S, lcm(f, g)) ⊆ Hull(Γ(S, g))`.
///
/// Containment is asserted for every certified pair. Equality is asserted
/// when `t = 1` and `f_j ~ g_j` off `j*`; without the alignment the hull can
/// be strictly larger even over the base field.
#[derive(Clone, Debug)]
pub struct GoppaHull {
    pub subcode: LinearCode,
    pub hull: LinearCode,
    pub equal: bool,
}

pub fn hull_goppa_bound(tower: &FieldTower, s: &CartesianSet, g: &ProductPoly, f: &ProductPoly) -> Result<GoppaHull> {
    let cert = find_certificate(s, g, f)?;
    let subcode = goppa_parity(tower, s, &f.lcm(g)?)?;
    let hull = goppa_parity(tower, s, g)?.hull();
    if !hull.contains(&subcode)? {
        return Err(mismatch("Γ(S,lcm(f,g)) is not contained in Hull(Γ(S,g))"));
    }
    let equal = hull == subcode;
    if tower.degree() == 1 && cert.aligned && !equal {
        return Err(mismatch(format!(
            "t = 1 but Hull(Γ(S,g)) has dimension {} and Γ(S,lcm) has dimension {}",
            hull.k(),
            subcode.k()
        )));
    }
    Ok(GoppaHull { subcode, hull, equal })
}

/// Hull-based classification of a linear code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Lcd,
    SelfOrthogonal,
    SelfDual,
    None,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Lcd => "LCD",
            Classification::SelfOrthogonal => "self-orthogonal",
            Classification::SelfDual => "self-dual",
            Classification::None => "none",
        })
    }
}

/// Self-dual takes precedence over self-orthogonal, and both over LCD (the
/// zero code is LCD and self-orthogonal; it is reported as LCD).
pub fn classify(c: &LinearCode) -> Classification {
    let h = c.hull().k();
    if c.k() > 0 && h == c.k() {
        if 2 * c.k() == c.n() {
            Classification::SelfDual
        } else {
            Classification::SelfOrthogonal
        }
    } else if h == 0 {
        Classification::Lcd
    } else {
        Classification::None
    }
}

/// `g_1(x_1)·g_2(x_2)···g_2(x_m)` on `S_1 × S_2^{m−1}`: the family layout of
/// the search witnesses.
pub fn family_member(
    s1: &[Elem],
    g1: &UniPoly,
    s2: &[Elem],
    g2: &UniPoly,
    copies: usize,
) -> Result<(CartesianSet, ProductPoly)> {
    let field = g1.field();
    let mut comps = vec![s1.to_vec()];
    let mut factors = vec![g1.clone()];
    for _ in 0..copies {
        comps.push(s2.to_vec());
        factors.push(g2.clone());
    }
    Ok((CartesianSet::new(field, comps)?, ProductPoly::new(factors)?))
}

//! Search for two-coordinate families of LCD, self-orthogonal and self-dual
//! tensor codes.
//!
//! Coordinate 1 is the distinguished one: `f_1 g_1 = λ_1 L_1′ + β_1 L_1`.
//! Coordinate 2 uses `f_2 = g_2` with `g_2² = λ_2 L_2′ + p L_2`, `deg p = n_2`,
//! so it can be repeated any number of times.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{classify, dual_partner_check, family_member, mismatch, Classification};
use crate::codes::{code_params, tensor_goppa, CodeParams};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{interpolate, vanishing_poly, ProductPoly, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Lcd,
    SelfOrthogonal,
    SelfDual,
}

impl FamilyKind {
    pub fn classification(self) -> Classification {
        match self {
            FamilyKind::Lcd => Classification::Lcd,
            FamilyKind::SelfOrthogonal => Classification::SelfOrthogonal,
            FamilyKind::SelfDual => Classification::SelfDual,
        }
    }

    /// The condition on the distinguished coordinate; the other coordinate
    /// always has `f_2 = g_2`.
    fn admits(self, f1: &UniPoly, g1: &UniPoly) -> bool {
        match self {
            FamilyKind::Lcd => f1.gcd(g1).map(|d| d.is_unit()).unwrap_or(false),
            FamilyKind::SelfOrthogonal => g1.divides(f1).unwrap_or(false) && !f1.is_associate(g1),
            FamilyKind::SelfDual => f1.is_associate(g1),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.classification().fmt(f)
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        match s.to_ascii_lowercase().as_str() {
            "lcd" => Ok(FamilyKind::Lcd),
            "so" | "self-orthogonal" => Ok(FamilyKind::SelfOrthogonal),
            "sd" | "self-dual" => Ok(FamilyKind::SelfDual),
            other => Err(Error::parse(0, format!("unknown family kind '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub field: Field,
    pub n1: usize,
    pub n2: usize,
    pub kind: FamilyKind,
    /// Maximum number of witnesses returned.
    pub budget: usize,
    /// Restrict to this `S_1` instead of enumerating subsets.
    pub s1: Option<Vec<Elem>>,
    /// Restrict to this `S_2` instead of enumerating subsets.
    pub s2: Option<Vec<Elem>>,
    /// Enumerate only sets `S_1` containing `0` and `1`. Every set of size at
    /// least two is mapped onto one of these by some `x ↦ ux + v`, which
    /// carries `T(S, g)` to `T(uS + v, g(u^{-1}(x − v)))` column for column.
    pub affine_reps: bool,
}

impl SearchConfig {
    pub fn new(field: &Field, n1: usize, n2: usize, kind: FamilyKind) -> SearchConfig {
        SearchConfig { field: field.clone(), n1, n2, kind, budget: 64, s1: None, s2: None, affine_reps: false }
    }
}

/// A factorization `f_1 g_1 = λ_1 L_1′ + β_1 L_1` on `S_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordOneCandidate {
    pub s1: Vec<Elem>,
    pub lambda: Elem,
    pub beta: Elem,
    pub f1: UniPoly,
    pub g1: UniPoly,
}

/// `g_2² = λ_2 L_2′ + p L_2` on `S_2`, with `g_2` monic of degree `n_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordTwoCandidate {
    pub s2: Vec<Elem>,
    pub lambda: Elem,
    pub g2: UniPoly,
    pub p: UniPoly,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub one: CoordOneCandidate,
    pub two: CoordTwoCandidate,
    pub classification: Classification,
    /// `T(S_1, g_1)` and `T(S_1 × S_2, g_1 g_2)`.
    pub params: [CodeParams; 2],
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub witnesses: Vec<Witness>,
    /// Set when the budget stopped the search before it was exhausted.
    pub truncated: bool,
}

/// All `k`-subsets of `items`, lexicographic in positions.
fn subsets(items: &[Elem], k: usize) -> Vec<Vec<Elem>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn coordinate_one(field: &Field, s1: &[Elem], kind: FamilyKind) -> Vec<CoordOneCandidate> {
    let n = s1.len();
    let l = vanishing_poly(field, s1).expect("distinct points");
    let dl = l.derivative();
    let mut out = Vec::new();
    // (λ, β) and (cλ, cβ) give the same divisors up to scalars, so λ = 1
    for beta in field.units() {
        let target = &dl + &l.scale(beta);
        for g1 in target.monic_divisors() {
            let dg = g1.deg0();
            if dg == 0 || dg >= n {
                continue;
            }
            let f1 = target.exact_div(&g1).expect("nonzero").expect("divisor");
            if kind.admits(&f1, &g1) {
                out.push(CoordOneCandidate { s1: s1.to_vec(), lambda: 1, beta, f1, g1 });
            }
        }
    }
    out
}

/// Square roots of `x` in the field (zero, one or two of them).
fn square_roots(field: &Field, x: Elem) -> Vec<Elem> {
    if x == 0 {
        return vec![0];
    }
    let mut r: Vec<Elem> = field.units().filter(|&y| field.mul(y, y) == x).collect();
    r.sort_unstable();
    r
}

fn coordinate_two(field: &Field, s2: &[Elem]) -> Vec<CoordTwoCandidate> {
    let l = vanishing_poly(field, s2).expect("distinct points");
    let dl = l.derivative();
    let mut out = Vec::new();
    for lambda in field.units() {
        // g_2(s)² = λ L_2′(s) on S_2 and g_2 = L_2 + (interpolant of those values)
        let roots: Vec<Vec<Elem>> = s2.iter().map(|&s| square_roots(field, field.mul(lambda, dl.eval(s)))).collect();
        if roots.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choice = vec![0usize; s2.len()];
        loop {
            let values: Vec<Elem> = choice.iter().zip(&roots).map(|(&i, r)| r[i]).collect();
            let g2 = &l + &interpolate(field, s2, &values);
            let rhs = &(&g2 * &g2) - &dl.scale(lambda);
            let (p, r) = rhs.div_rem(&l).expect("nonzero");
            debug_assert!(r.is_zero());
            if r.is_zero() {
                out.push(CoordTwoCandidate { s2: s2.to_vec(), lambda, g2, p });
            }
            let Some(i) = (0..choice.len()).find(|&i| choice[i] + 1 < roots[i].len()) else {
                break;
            };
            choice[i] += 1;
            for c in choice.iter_mut().take(i) {
                *c = 0;
            }
        }
    }
    out
}

fn verify(kind: FamilyKind, one: &CoordOneCandidate, two: &CoordTwoCandidate) -> Result<Witness> {
    let mut params = Vec::with_capacity(2);
    for copies in 0..2 {
        let (s, g) = family_member(&one.s1, &one.g1, &two.s2, &two.g2, copies)?;
        let mut ff = vec![one.f1.clone()];
        ff.extend(std::iter::repeat(two.g2.clone()).take(copies));
        let f = ProductPoly::new(ff)?;
        let cert = dual_partner_check(&s, &g, &f, 0)?;
        if !cert.passes() {
            return Err(mismatch(format!("search witness fails its certificate: {cert}")));
        }
        let code = tensor_goppa(&s, &g)?;
        let found = classify(&code);
        if found != kind.classification() {
            return Err(mismatch(format!("expected a {kind} code, classified {found}")));
        }
        params.push(code_params(&code, None));
    }
    Ok(Witness {
        one: one.clone(),
        two: two.clone(),
        classification: kind.classification(),
        params: [params[0], params[1]],
    })
}

/// Enumerates `(S_1, f_1, g_1)` and `(S_2, g_2, p)` meeting the family
/// conditions and pairs them, verifying every witness by classifying
/// `T(S, g_1 g_2^{⊗m})` for `m = 0, 1`. Output order is deterministic: `S_1`
/// subsets lexicographically, then `β_1`, divisors, `S_2`, `λ_2`, roots.
pub fn family_search(cfg: &SearchConfig) -> Result<SearchResult> {
    let field = &cfg.field;
    let q = field.order() as usize;
    let empty = SearchResult { witnesses: Vec::new(), truncated: false };
    if cfg.n1 < 2 || cfg.n2 < 1 || cfg.n1 > q || cfg.n2 > q || cfg.budget == 0 {
        return Ok(empty);
    }
    let all: Vec<Elem> = field.elements().collect();
    let fixed = |given: &Option<Vec<Elem>>, n: usize| -> Result<Option<Vec<Vec<Elem>>>> {
        match given {
            None => Ok(None),
            Some(s) if s.len() != n => Err(Error::PreconditionViolated(format!(
                "fixed point set has {} elements, expected {n}",
                s.len()
            ))),
            Some(s) => {
                vanishing_poly(field, s)?;
                Ok(Some(vec![s.clone()]))
            }
        }
    };
    let s1_sets = match fixed(&cfg.s1, cfg.n1)? {
        Some(v) => v,
        None if cfg.affine_reps => subsets(&all[2..], cfg.n1 - 2)
            .into_iter()
            .map(|mut rest| {
                rest.splice(0..0, [0, 1]);
                rest
            })
            .collect(),
        None => subsets(&all, cfg.n1),
    };
    let s2_sets = fixed(&cfg.s2, cfg.n2)?.unwrap_or_else(|| subsets(&all, cfg.n2));

    let twos: Vec<CoordTwoCandidate> = s2_sets.par_iter().map(|s| coordinate_two(field, s)).flatten_iter().collect();
    if twos.is_empty() {
        return Ok(empty);
    }
    let mut witnesses = Vec::new();
    const CHUNK: usize = 64;
    for chunk in s1_sets.chunks(CHUNK) {
        let ones: Vec<CoordOneCandidate> =
            chunk.par_iter().map(|s| coordinate_one(field, s, cfg.kind)).flatten_iter().collect();
        let room = cfg.budget - witnesses.len();
        if room == 0 {
            if ones.is_empty() {
                continue;
            }
            return Ok(SearchResult { witnesses, truncated: true });
        }
        let pairs: Vec<(&CoordOneCandidate, &CoordTwoCandidate)> =
            ones.iter().flat_map(|a| twos.iter().map(move |b| (a, b))).collect();
        let batch: Vec<Witness> = pairs
            .par_iter()
            .take(room)
            .map(|(a, b)| verify(cfg.kind, a, b))
            .collect::<Result<_>>()?;
        witnesses.extend(batch);
        if pairs.len() > room {
            return Ok(SearchResult { witnesses, truncated: true });
        }
    }
    Ok(SearchResult { witnesses, truncated: false })
}

//! One randomized instance per call for each identity. A check returns
//! `Ok(true)` when an instance was generated and verified, `Ok(false)` when
//! the generator could not produce an admissible instance, and `Err` with a
//! description on a counterexample.

use super::*;
use mvgoppa::codes::{
    acar, acar_g, goppa_parity, goppa_subfield, subfield_subcode, tensor_goppa, tensor_grs, trace_code,
};
use mvgoppa::gf::FieldTower;
use mvgoppa::poly::{big_l, ratio_representative, CartesianSet};
use mvgoppa::theory::{
    check_subcode_relations, classify, eaqecc_goppa, eaqecc_tensor, find_certificate, hull_goppa_bound, hull_tensor,
    family_member, family_search, intersect_goppa, intersect_tensor, is_mds_eaqecc, EaqeccParams, FamilyKind,
    SearchConfig,
};
use rand::Rng;

pub type CheckResult = Result<bool, String>;

fn fail(what: impl std::fmt::Display) -> CheckResult {
    Err(what.to_string())
}

fn err(e: mvgoppa::Error) -> String {
    e.to_string()
}

fn base_field(r: &mut TestRng) -> Field {
    pick(r, &small_fields()).clone()
}

fn any_tower(r: &mut TestRng) -> FieldTower {
    pick(r, &small_towers()).clone()
}

fn grid_m(r: &mut TestRng, f: &Field, min_size: usize) -> CartesianSet {
    let m = r.gen_range(1..=2);
    grid(r, f, m, min_size, 12)
}

/// `T(S, k, g)^⊥ = ACar(S, n − k, L/g)`, and `T(S, g)^⊥ = ACar(S, g)`.
pub fn dual_tensor_is_acar(r: &mut TestRng) -> CheckResult {
    let f = base_field(r);
    let s = grid_m(r, &f, 1);
    let sizes = s.sizes();
    let kvec: Vec<usize> = sizes.iter().map(|&n| r.gen_range(0..=n)).collect();
    let degs = degrees(r, &s, |n| n);
    let Some(g) = product(r, &s, &degs) else { return Ok(false) };
    let lhs = tensor_grs(&s, &kvec, &g).map_err(err)?.dual();
    let weight = ratio_representative(&big_l(&s), &g, &s).map_err(err)?;
    let co: Vec<usize> = sizes.iter().zip(&kvec).map(|(n, k)| n - k).collect();
    let rhs = acar(&s, &co, &weight).map_err(err)?;
    if lhs != rhs {
        return fail(format!("kvec {kvec:?} on {sizes:?}: dims {} vs {}", lhs.k(), rhs.k()));
    }
    if tensor_goppa(&s, &g).map_err(err)?.dual() != acar_g(&s, &g).map_err(err)? {
        return fail("T(S,g)^⊥ ≠ ACar(S,g)");
    }
    Ok(true)
}

/// Parity-check and subfield-subcode constructions of `Γ(S, g)` agree.
pub fn goppa_constructions_agree(r: &mut TestRng) -> CheckResult {
    let tower = any_tower(r);
    let s = grid_m(r, tower.ext(), 1);
    let degs = degrees(r, &s, |n| n);
    let Some(g) = product(r, &s, &degs) else { return Ok(false) };
    let a = goppa_parity(&tower, &s, &g).map_err(err)?;
    let b = goppa_subfield(&tower, &s, &g).map_err(err)?;
    if a != b {
        return fail(format!("degrees {degs:?}: dims {} vs {}", a.k(), b.k()));
    }
    Ok(true)
}

/// `(C_q)^⊥ = tr(C^⊥)`, with `C_q` checked against enumeration of `F_q^n`.
pub fn delsarte(r: &mut TestRng) -> CheckResult {
    let tower = pick(r, &proper_towers()).clone();
    let n = r.gen_range(1..=8);
    let k = r.gen_range(0..=n);
    let c = random_code(r, tower.ext(), n, k);
    let sub = subfield_subcode(&tower, &c).map_err(err)?;
    if sub != brute_subfield_subcode(&tower, &c) {
        return fail(format!("[{n},{k}]: subfield subcode differs from enumeration"));
    }
    let tr = trace_code(&tower, &c.dual()).map_err(err)?;
    if sub.dual() != tr {
        return fail(format!("[{n},{k}]: dims {} vs {}", sub.dual().k(), tr.k()));
    }
    Ok(true)
}

/// Outcome of one intersection instance under `deg g_j + deg g′_j ≤ n_j`.
pub struct IntersectionFacts {
    pub m: usize,
    pub t: usize,
    pub tensor_equal: bool,
    /// `Γ(lcm) ⊆ Γ(g) ∩ Γ(g′)`.
    pub goppa_contained: bool,
    /// `Γ(g) ∩ Γ(g′) = Γ(lcm)`.
    pub goppa_equal: bool,
    /// `T(g) + T(g′) = T(lcm)`, by dimension count.
    pub additive: bool,
    /// What `intersect_goppa` did: `Some(true)` ok, `Some(false)` refused.
    pub library: Option<bool>,
    pub subcode_chain: bool,
}

pub fn intersection_facts(r: &mut TestRng) -> Result<Option<IntersectionFacts>, String> {
    let tower = any_tower(r);
    let s = grid_m(r, tower.ext(), 1);
    let a = degrees(r, &s, |n| n);
    let b: Vec<usize> = a.iter().zip(s.sizes()).map(|(&d, n)| r.gen_range(0..=n - d)).collect();
    let (Some(g), Some(h)) = (product(r, &s, &a), product(r, &s, &b)) else { return Ok(None) };
    let (gcd, lcm) = (g.gcd(&h).map_err(err)?, g.lcm(&h).map_err(err)?);
    let tensor_equal = match intersect_tensor(&s, &g, &h) {
        Ok(_) => true,
        Err(mvgoppa::Error::MismatchDetected(_)) => false,
        Err(e) => return Err(e.to_string()),
    };
    let meet = goppa_parity(&tower, &s, &g)
        .and_then(|x| x.intersect(&goppa_parity(&tower, &s, &h)?))
        .map_err(err)?;
    let gl = goppa_parity(&tower, &s, &lcm).map_err(err)?;
    let library = match intersect_goppa(&tower, &s, &g, &h) {
        Ok(_) => Some(true),
        Err(mvgoppa::Error::HypothesisViolated(_)) => Some(false),
        Err(mvgoppa::Error::MismatchDetected(_)) => None,
        Err(e) => return Err(e.to_string()),
    };
    let chain = check_subcode_relations(&tower, &s, &g, &h).map_err(err)?.all();
    Ok(Some(IntersectionFacts {
        m: s.m(),
        t: tower.degree(),
        tensor_equal,
        goppa_contained: meet.contains(&gl).map_err(err)?,
        goppa_equal: meet == gl,
        additive: g.degree() + h.degree() == gcd.degree() + lcm.degree(),
        library,
        subcode_chain: chain,
    }))
}

/// `T ∩ T = T(gcd)` always; `Γ(lcm) ⊆ Γ ∩ Γ` always, with equality when
/// `T(g) + T(g′) = T(lcm)`; `intersect_goppa` succeeds exactly then.
pub fn intersections(r: &mut TestRng) -> CheckResult {
    let Some(x) = intersection_facts(r)? else { return Ok(false) };
    if !x.tensor_equal || !x.goppa_contained || !x.subcode_chain {
        return fail(format!("tensor {} contained {} chain {}", x.tensor_equal, x.goppa_contained, x.subcode_chain));
    }
    if x.additive && !x.goppa_equal {
        return fail("additive pair without Γ ∩ Γ = Γ(lcm)");
    }
    if x.library != Some(x.additive) {
        return fail(format!("intersect_goppa returned {:?} for additive = {}", x.library, x.additive));
    }
    if x.m == 1 && !x.additive {
        return fail("one variable but not additive");
    }
    Ok(true)
}

/// Outcome of one certified dual-partner instance.
pub struct HullFacts {
    pub m: usize,
    pub t: usize,
    pub aligned: bool,
    pub dual_equal: bool,
    /// `Hull(T(S,g)) = T(S, gcd(f,g))`.
    pub hull_is_gcd_code: bool,
    /// `Hull(ACar(S,g)) = Hull(T(S,g))`.
    pub acar_hull_agrees: bool,
    /// `dim Hull(T) = Π_j dim(GRS(g_j) ∩ GRS(f_j))`, the tensor prediction.
    pub hull_dim_predicted: bool,
    pub goppa_contained: bool,
    pub goppa_equal: bool,
}

pub fn hull_facts(r: &mut TestRng, aligned: bool) -> Result<Option<HullFacts>, String> {
    let tower = any_tower(r);
    let s = grid_m(r, tower.ext(), 1);
    let Some((g, f, _)) = partner_triple(r, &s, aligned) else { return Ok(None) };
    let cert = find_certificate(&s, &g, &f).map_err(err)?;
    let code = tensor_goppa(&s, &g).map_err(err)?;
    let hull = code.hull();
    let predicted: usize = (0..s.m())
        .map(|j| {
            let sj = CartesianSet::new(s.field(), vec![s.component(j).to_vec()]).unwrap();
            let one = |p: &mvgoppa::poly::UniPoly| tensor_goppa(&sj, &mvgoppa::poly::ProductPoly::new(vec![p.clone()]).unwrap());
            one(g.factor(j)).and_then(|a| a.intersect(&one(f.factor(j))?)).map(|c| c.k())
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?
        .iter()
        .product();
    let gcd_code = tensor_goppa(&s, &f.gcd(&g).map_err(err)?).map_err(err)?;
    let library = hull_tensor(&s, &g, &f);
    match (&library, cert.aligned) {
        (Ok(_), true) | (Err(mvgoppa::Error::HypothesisViolated(_)), false) => {}
        (other, _) => return Err(format!("hull_tensor returned {other:?} for aligned = {}", cert.aligned)),
    }
    let gh = hull_goppa_bound(&tower, &s, &g, &f).map_err(err)?;
    Ok(Some(HullFacts {
        m: s.m(),
        t: tower.degree(),
        aligned: cert.aligned,
        dual_equal: cert.dual_equal,
        hull_is_gcd_code: hull == gcd_code,
        acar_hull_agrees: acar_g(&s, &g).map_err(err)?.hull() == hull,
        hull_dim_predicted: hull.k() == predicted,
        goppa_contained: gh.hull.contains(&gh.subcode).map_err(err)?,
        goppa_equal: gh.equal,
    }))
}

/// Certified partners always give duality, the tensor hull prediction and
/// `Γ(lcm) ⊆ Hull(Γ)`; aligned ones also `Hull(T) = T(gcd) = Hull(ACar)` and
/// equality at `t = 1`, where the tensor and Goppa parameter pairs coincide
/// as mirror images.
pub fn hulls(r: &mut TestRng) -> CheckResult {
    let aligned = r.gen_bool(0.5);
    let Some(x) = hull_facts(r, aligned)? else { return Ok(false) };
    if !x.dual_equal || !x.hull_dim_predicted || !x.goppa_contained || !x.acar_hull_agrees {
        return fail(format!(
            "dual {} predicted {} contained {} acar {}",
            x.dual_equal, x.hull_dim_predicted, x.goppa_contained, x.acar_hull_agrees
        ));
    }
    if x.aligned && (!x.hull_is_gcd_code || (x.t == 1 && !x.goppa_equal)) {
        return fail(format!("aligned: hull = T(gcd) {} Goppa equality {}", x.hull_is_gcd_code, x.goppa_equal));
    }
    if aligned {
        tensor_goppa_mirror(r)?;
    }
    Ok(true)
}

fn tensor_goppa_mirror(r: &mut TestRng) -> CheckResult {
    let f = base_field(r);
    let tower = FieldTower::trivial(f.clone());
    let s = grid_m(r, &f, 1);
    let Some((g, h, _)) = partner_triple(r, &s, true) else { return Ok(false) };
    let (n, k) = (s.len(), g.degree());
    if k == 0 || k == n {
        return Ok(false);
    }
    let te = eaqecc_tensor(&s, &g, &h).map_err(err)?;
    let ge = eaqecc_goppa(&tower, &s, &g, &h, None).map_err(err)?;
    if (te.pair.0, te.pair.1) != (ge.computed.1, ge.computed.0) {
        return fail(format!("tensor {} / {} vs Goppa {} / {}", te.pair.0, te.pair.1, ge.computed.0, ge.computed.1));
    }
    Ok(true)
}

fn pow_fits(q: u32, k: usize, limit: u64) -> bool {
    (q as u64).checked_pow(k as u32).is_some_and(|x| x <= limit)
}

/// `[n, Π k_j, Π (n_j − k_j + 1)]` for `T(S, k, g)` and
/// `[n, n − Π (n_j − k_j), min_{k_j > 0} (n_j − k_j + 1)]` for ACar, against
/// exhaustive enumeration when `q^k ≤ 2^18`.
pub fn parameter_formulas(r: &mut TestRng) -> CheckResult {
    let f = base_field(r);
    let s = grid_m(r, &f, 1);
    let sizes = s.sizes();
    let n = s.len();
    let kvec: Vec<usize> = sizes.iter().map(|&n| r.gen_range(0..=n)).collect();
    let degs = degrees(r, &s, |n| n);
    let Some(g) = product(r, &s, &degs) else { return Ok(false) };
    let q = f.order();
    let limit = 1 << 18;
    let t = tensor_grs(&s, &kvec, &g).map_err(err)?;
    let kt: usize = kvec.iter().product();
    if t.k() != kt {
        return fail(format!("T dimension {} vs {kt}", t.k()));
    }
    let mut checked = false;
    if kt > 0 && pow_fits(q, kt, limit) {
        let dt: usize = sizes.iter().zip(&kvec).map(|(n, k)| n - k + 1).product();
        if brute_distance(&t) != Some(dt) {
            return fail(format!("T({kvec:?}) on {sizes:?}: distance {:?} vs {dt}", brute_distance(&t)));
        }
        checked = true;
    }
    let weight = ratio_representative(&big_l(&s), &g, &s).map_err(err)?;
    let a = acar(&s, &kvec, &weight).map_err(err)?;
    let ka = n - sizes.iter().zip(&kvec).map(|(n, k)| n - k).product::<usize>();
    if a.k() != ka {
        return fail(format!("ACar dimension {} vs {ka}", a.k()));
    }
    if ka > 0 && pow_fits(q, ka, limit) {
        let da = sizes.iter().zip(&kvec).filter(|(_, &k)| k > 0).map(|(n, k)| n - k + 1).min().unwrap();
        if brute_distance(&a) != Some(da) {
            return fail(format!("ACar({kvec:?}) on {sizes:?}: distance {:?} vs {da}", brute_distance(&a)));
        }
        checked = true;
    }
    Ok(checked)
}

/// `n − t·deg g ≤ k ≤ n − deg g` and `d ≥ min_j deg g_j + 1` for `Γ(S, g)`.
pub fn goppa_bounds(r: &mut TestRng) -> CheckResult {
    let tower = any_tower(r);
    let s = grid_m(r, tower.ext(), 1);
    let degs = degrees(r, &s, |n| n);
    let Some(g) = product(r, &s, &degs) else { return Ok(false) };
    let gamma = goppa_parity(&tower, &s, &g).map_err(err)?;
    let (n, t, dg) = (s.len(), tower.degree(), g.degree());
    let k = gamma.k();
    if k + t * dg < n || k + dg > n {
        return fail(format!("k = {k} outside [{}, {}] (t = {t}, deg = {dg})", n.saturating_sub(t * dg), n - dg));
    }
    if let Some(d) = gamma.min_distance(None) {
        let bound = degs.iter().min().unwrap() + 1;
        // the ACar distance only involves coordinates with deg g_j < n_j
        let sharp = degs.iter().zip(s.sizes()).filter(|(&d, n)| d < *n).map(|(&d, _)| d + 1).min();
        if !d.exact || d.value < bound || sharp.is_some_and(|b| d.value < b) {
            return fail(format!("d = {d} below {bound} (sharp {sharp:?}) for degrees {degs:?}"));
        }
    }
    Ok(true)
}

/// Outcome of one EAQECC instance at `t = 1`.
pub struct MdsInstance {
    pub m: usize,
    pub others: usize,
    pub deg_f_star: usize,
    pub deg_g_star: usize,
    pub pair: (EaqeccParams, EaqeccParams),
    pub mds: (bool, bool),
}

/// An aligned certified triple over a base field with `m ∈ {1, 2}`, and the
/// MDS status of both tensor-derived EAQECCs.
pub fn eaqecc_mds_instance(r: &mut TestRng) -> Result<Option<MdsInstance>, String> {
    let f = base_field(r);
    let m = r.gen_range(1..=2);
    let s = grid(r, &f, m, 2, 12);
    let Some((g, h, _)) = partner_triple(r, &s, true) else { return Ok(None) };
    let (k, n) = (g.degree(), s.len());
    if k == 0 || k == n {
        return Ok(None);
    }
    let te = eaqecc_tensor(&s, &g, &h).map_err(err)?;
    let j = te.j_star;
    let mds = (is_mds_eaqecc(&te.pair.0).map_err(err)?, is_mds_eaqecc(&te.pair.1).map_err(err)?);
    let others = s.sizes().iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &n)| n).product();
    Ok(Some(MdsInstance { m, others, deg_f_star: h.degrees()[j], deg_g_star: g.degrees()[j], pair: te.pair, mds }))
}

/// Over a proper tower the computed quantum parameters of `Γ(S, g)` respect
/// the closed-form bounds.
pub fn goppa_eaqecc_bounds(r: &mut TestRng) -> CheckResult {
    goppa_eaqecc_bounds_over(r, &proper_towers())
}

/// As [`goppa_eaqecc_bounds`], over quadratic towers only.
pub fn goppa_eaqecc_bounds_quadratic(r: &mut TestRng) -> CheckResult {
    let towers: Vec<FieldTower> = proper_towers().into_iter().filter(|t| t.degree() == 2).collect();
    goppa_eaqecc_bounds_over(r, &towers)
}

fn goppa_eaqecc_bounds_over(r: &mut TestRng, towers: &[FieldTower]) -> CheckResult {
    let tower = pick(r, towers).clone();
    let s = grid_m(r, tower.ext(), 2);
    let Some((g, h, _)) = partner_triple(r, &s, true) else { return Ok(false) };
    match eaqecc_goppa(&tower, &s, &g, &h, None) {
        Ok(_) => Ok(true),
        Err(mvgoppa::Error::DegenerateCode) => Ok(false),
        Err(e) => Err(e.to_string()),
    }
}

/// `classify` does not depend on the column order.
pub fn classify_permutation_invariant(r: &mut TestRng) -> CheckResult {
    use rand::seq::SliceRandom;
    let f = base_field(r);
    let s = grid_m(r, &f, 1);
    let c = match partner_triple(r, &s, true) {
        Some((g, _, _)) if r.gen_bool(0.5) => tensor_goppa(&s, &g).map_err(err)?,
        _ => {
            let n = s.len();
            let k = r.gen_range(0..=n);
            random_code(r, &f, n, k)
        }
    };
    let mut perm: Vec<usize> = (0..c.n()).collect();
    perm.shuffle(r);
    let before = classify(&c);
    let after = classify(&c.permute(&perm));
    if before != after {
        return fail(format!("{before} became {after}"));
    }
    Ok(true)
}

/// `eaqecc_from_code` against `dim Hull(C) = k − rank(G Gᵀ)` and enumerated
/// distances of `C` and `C^⊥`.
pub fn eaqecc_lemma(r: &mut TestRng) -> CheckResult {
    let f = base_field(r);
    let n = r.gen_range(2..=7);
    let k = r.gen_range(1..n);
    let c = random_code(r, &f, n, k);
    let (k, q) = (c.k(), f.order());
    if k == 0 || k == n || !pow_fits(q, k.max(n - k), 1 << 16) {
        return Ok(false);
    }
    let g = c.generator();
    let h = k - g.mul(&g.transpose()).map_err(err)?.rank();
    let d = brute_distance(&c).unwrap();
    let dd = brute_distance(&c.dual()).unwrap();
    let exact = |v| mvgoppa::Distance { value: v, exact: true };
    let (a, b) = mvgoppa::theory::eaqecc_from_code(&c, exact(d), exact(dd)).map_err(err)?;
    let want = [(n, k - h, d, n - k - h), (n, n - k - h, dd, k - h)];
    let got = [(a.n, a.k, a.d.value, a.c), (b.n, b.k, b.d.value, b.c)];
    if got != want {
        return fail(format!("{a} / {b}, expected {want:?}"));
    }
    for p in [a, b] {
        if p.mds != (p.n + p.c == p.k + 2 * (p.d.value - 1)) {
            return fail(format!("{p}: MDS flag {}", p.mds));
        }
    }
    Ok(true)
}

fn search_field(r: &mut TestRng) -> Field {
    pick(r, &[field(5, 1), field(7, 1), field(2, 3), f9()]).clone()
}

fn random_kind(r: &mut TestRng) -> FamilyKind {
    *pick(r, &[FamilyKind::Lcd, FamilyKind::SelfOrthogonal, FamilyKind::SelfDual])
}

/// Witnesses found with `m ∈ {0, 1}` keep their classification at `m = 2`,
/// with `[n_1 n_2^m, k_1 n_2^m]`.
pub fn family_extension(r: &mut TestRng) -> CheckResult {
    let f = search_field(r);
    let q = f.order() as usize;
    let (n1, n2) = (r.gen_range(2..=q.min(6)), r.gen_range(1..=3));
    let mut cfg = SearchConfig::new(&f, n1, n2, random_kind(r));
    cfg.s1 = Some(points(r, &f, n1));
    cfg.s2 = Some(points(r, &f, n2));
    cfg.budget = 3;
    let found = family_search(&cfg).map_err(err)?;
    for w in &found.witnesses {
        let k1 = w.params[0].k;
        for m in 0..=2 {
            let (s, g) = family_member(&w.one.s1, &w.one.g1, &w.two.s2, &w.two.g2, m).map_err(err)?;
            let code = tensor_goppa(&s, &g).map_err(err)?;
            let scale = n2.pow(m as u32);
            if (code.n(), code.k()) != (n1 * scale, k1 * scale) || classify(&code) != w.classification {
                return fail(format!("m = {m}: [{}, {}] {}", code.n(), code.k(), classify(&code)));
            }
        }
    }
    Ok(!found.witnesses.is_empty())
}

/// Searching on `uS_1 + v` instead of `S_1` gives the same number of
/// witnesses with the same classifications and parameters.
pub fn affine_invariance(r: &mut TestRng) -> CheckResult {
    let f = search_field(r);
    let q = f.order() as usize;
    let (n1, n2) = (r.gen_range(2..=q.min(6)), r.gen_range(1..=3));
    let kind = random_kind(r);
    let s1 = points(r, &f, n1);
    let (u, v) = (unit(r, &f), elem(r, &f));
    let moved: Vec<_> = s1.iter().map(|&x| f.add(f.mul(u, x), v)).collect();
    let s2 = points(r, &f, n2);
    let run = |s: &[mvgoppa::Elem]| {
        let mut cfg = SearchConfig::new(&f, n1, n2, kind);
        cfg.s1 = Some(s.to_vec());
        cfg.s2 = Some(s2.clone());
        cfg.budget = usize::MAX;
        family_search(&cfg).map(|x| {
            let mut sig: Vec<_> = x.witnesses.iter().map(|w| (w.classification, w.params[0].k, w.params[1].k)).collect();
            sig.sort_by_key(|&(c, a, b)| (c.to_string(), a, b));
            sig
        })
    };
    let (a, b) = (run(&s1).map_err(err)?, run(&moved).map_err(err)?);
    if a != b {
        return fail(format!("{} witnesses on S_1, {} on u S_1 + v", a.len(), b.len()));
    }
    Ok(!a.is_empty())
}

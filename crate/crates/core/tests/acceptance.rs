//! Acceptance criteria. Each prints one `PASS`/`FAIL` line.
//!
//! Arithmetic is exact, so every tolerance is zero. Randomized criteria run
//! from fixed seeds until the pinned number of instances has been verified.
//! A criterion whose identity fails on some instances is reported `FAIL`
//! with counts; the test itself only aborts on failures that are not one of
//! the characterised counterexample classes checked below.

mod common;

use std::time::{Duration, Instant};

use common::checks::{self, CheckResult};
use common::examples::*;
use common::{f9, rng, TestRng};
use mvgoppa::codes::{acar, goppa_parity, tensor_goppa};
use mvgoppa::gf::{make_field, Elem, FieldTower};
use mvgoppa::poly::{CartesianSet, MultiPoly, ProductPoly};
use mvgoppa::theory::{classify, family_member, Classification};

const SUITE_INSTANCES: usize = 200;
const MDS_INSTANCES: usize = 100;
const EAQECC_BOUND_INSTANCES: usize = 100;
const GOPPA_BOUND_INSTANCES: usize = 500;
const ATTEMPTS_PER_INSTANCE: usize = 20;

const EXAMPLE_LIMIT: Duration = Duration::from_secs(120);
const FAMILY_LIMIT: Duration = Duration::from_secs(30);
const ACAR_LIMIT: Duration = Duration::from_secs(10);
const SUITE_LIMIT: Duration = Duration::from_secs(600);

enum Outcome {
    Pass,
    /// The identity fails in a characterised way.
    Explained,
    Unexplained(String),
}

#[derive(Default)]
struct Tally {
    instances: usize,
    explained: usize,
    unexplained: Vec<String>,
}

impl Tally {
    fn passed(&self, target: usize) -> bool {
        self.instances >= target && self.explained == 0 && self.unexplained.is_empty()
    }

    fn summary(&self, target: usize) -> String {
        let mut s = format!("{} instances (need {target}), {} failures", self.instances, self.explained + self.unexplained.len());
        if self.explained > 0 {
            s += &format!(", {} in the known counterexample class", self.explained);
        }
        if let Some(first) = self.unexplained.first() {
            s += &format!(", unexplained: {first}");
        }
        s
    }
}

/// Draws instances from `seed` until `target` have been produced.
fn sample(seed: u64, target: usize, mut one: impl FnMut(&mut TestRng) -> Option<Outcome>) -> Tally {
    let mut r = rng(seed);
    let mut t = Tally::default();
    for _ in 0..target * ATTEMPTS_PER_INSTANCE {
        if t.instances >= target {
            break;
        }
        match one(&mut r) {
            None => {}
            Some(o) => {
                t.instances += 1;
                match o {
                    Outcome::Pass => {}
                    Outcome::Explained => t.explained += 1,
                    Outcome::Unexplained(e) => t.unexplained.push(e),
                }
            }
        }
    }
    t
}

fn from_check(check: fn(&mut TestRng) -> CheckResult) -> impl FnMut(&mut TestRng) -> Option<Outcome> {
    move |r| match check(r) {
        Ok(true) => Some(Outcome::Pass),
        Ok(false) => None,
        Err(e) => Some(Outcome::Unexplained(e)),
    }
}

struct Report {
    lines: Vec<(String, bool, String)>,
    unexplained: Vec<String>,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        println!("criterion {id:<4} {}  {detail}", if ok { "PASS" } else { "FAIL" });
        self.lines.push((id.to_string(), ok, detail));
    }

    fn fixed(&mut self, id: &str, limit: Duration, run: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        match result {
            Ok(what) => self.line(id, took <= limit, format!("{what} in {took:.2?} (limit {limit:?})")),
            Err(e) => {
                self.unexplained.push(format!("{id}: {e}"));
                self.line(id, false, e);
            }
        }
    }

    fn tally(&mut self, id: &str, what: &str, target: usize, t: Tally) {
        for e in &t.unexplained {
            self.unexplained.push(format!("{id}: {e}"));
        }
        if t.instances < target {
            self.unexplained.push(format!("{id}: only {} instances generated", t.instances));
        }
        self.line(id, t.passed(target), format!("{what}: {}", t.summary(target)));
    }
}

fn criterion_1() -> Result<String, String> {
    let f = f9();
    let tower = FieldTower::with_subfield(f.clone(), 2).map_err(|e| e.to_string())?;
    let pts: Vec<Elem> = (1..=8).map(|k| a(&f, k)).collect();
    let s = CartesianSet::new(&f, vec![pts.clone(), pts]).unwrap();
    let g = ProductPoly::repeated(&up(&f, vec![a(&f, 1), 0, 1]), 2);
    let gamma = goppa_parity(&tower, &s, &g).map_err(|e| e.to_string())?;
    let d = gamma.min_distance(None).ok_or("zero code")?;
    let got = (gamma.n(), gamma.k(), d.value, d.exact);
    if got != (64, 56, 4, true) {
        return Err(format!("got {got:?}"));
    }
    Ok("[64, 56, 4] over F_3, distance exact".into())
}

fn family(w: &Witness, kind: Classification, ms: &[usize], n1: usize, k1: usize) -> Result<String, String> {
    let f = f9();
    if !identities_hold(&f, w) {
        return Err("witness identities fail under x^2 + 2x + 2".into());
    }
    let (s2, g2, _) = coordinate_two(&f);
    let weight = if kind == Classification::Lcd { &w.f1 } else { &w.g1 };
    let mut seen = Vec::new();
    for &m in ms {
        let (s, g) = family_member(&w.s1, weight, &s2, &g2, m).map_err(|e| e.to_string())?;
        let code = tensor_goppa(&s, &g).map_err(|e| e.to_string())?;
        let scale = 3usize.pow(m as u32);
        let got = (code.n(), code.k(), classify(&code));
        if got != (n1 * scale, k1 * scale, kind) {
            return Err(format!("m = {m}: got {got:?}"));
        }
        seen.push(format!("[{}, {}]", code.n(), code.k()));
    }
    Ok(format!("identities hold; {kind} {}", seen.join(" ")))
}

fn criterion_5() -> Result<String, String> {
    let f = make_field(17, 1, None).unwrap();
    let s = CartesianSet::new(&f, vec![(0..6).collect(), (0..7).collect()]).unwrap();
    let c = acar(&s, &[2, 2], &MultiPoly::constant(&f, 2, 1)).map_err(|e| e.to_string())?;
    let d = c.min_distance(None).ok_or("zero code")?;
    let got = (c.n(), c.k(), c.generator().rank(), d.value, d.exact);
    if got != (42, 22, 22, 5, true) {
        return Err(format!("got {got:?}"));
    }
    Ok("[42, 22, 5] over F_17, rank 22, distance exact".into())
}

/// `T ∩ T = T(gcd)` and `Γ ∩ Γ = Γ(lcm)`. The Goppa identity may only fail
/// when `T(g) + T(g′) ≠ T(lcm)`, and then `Γ(lcm)` must be a proper subcode.
fn intersection(r: &mut TestRng) -> Option<Outcome> {
    let x = match checks::intersection_facts(r) {
        Ok(Some(x)) => x,
        Ok(None) => return None,
        Err(e) => return Some(Outcome::Unexplained(e)),
    };
    Some(if x.tensor_equal && x.goppa_equal {
        Outcome::Pass
    } else if x.tensor_equal && !x.additive && x.goppa_contained && x.library == Some(false) {
        Outcome::Explained
    } else {
        Outcome::Unexplained(format!("m = {}, t = {}, additive = {}", x.m, x.t, x.additive))
    })
}

/// `Hull(T) = T(gcd) = Hull(ACar)` and `Γ(lcm) ⊆ Hull(Γ)`, equal at `t = 1`,
/// over certificate-passing triples with and without `f_j ~ g_j` off `j*`.
/// Failures must be unaligned and match the coordinatewise hull dimension.
fn hull(r: &mut TestRng) -> Option<Outcome> {
    use rand::Rng;
    let aligned = r.gen_bool(0.5);
    let x = match checks::hull_facts(r, aligned) {
        Ok(Some(x)) => x,
        Ok(None) => return None,
        Err(e) => return Some(Outcome::Unexplained(e)),
    };
    let holds = x.hull_is_gcd_code && x.acar_hull_agrees && x.goppa_contained && (x.t > 1 || x.goppa_equal);
    Some(if holds && x.dual_equal {
        Outcome::Pass
    } else if !x.aligned && x.dual_equal && x.hull_dim_predicted && x.acar_hull_agrees && x.goppa_contained {
        Outcome::Explained
    } else {
        Outcome::Unexplained(format!("m = {}, t = {}, aligned = {}", x.m, x.t, x.aligned))
    })
}

/// Both tensor EAQECCs are MDS. A non-MDS instance must have
/// `N = Π_{j≠j*} n_j > 1` and excess `2 deg f_{j*} (N − 1)`, resp. with `g`.
fn mds(r: &mut TestRng) -> Option<Outcome> {
    let x = match checks::eaqecc_mds_instance(r) {
        Ok(Some(x)) => x,
        Ok(None) => return None,
        Err(e) => return Some(Outcome::Unexplained(e)),
    };
    if x.mds.0 && x.mds.1 {
        return Some(Outcome::Pass);
    }
    let excess = |p: &mvgoppa::theory::EaqeccParams| (p.n + p.c) as i64 - p.k as i64 - 2 * (p.d.value as i64 - 1);
    let expected = |deg: usize| 2 * deg as i64 * (x.others as i64 - 1);
    Some(
        if x.others > 1 && excess(&x.pair.0) == expected(x.deg_f_star) && excess(&x.pair.1) == expected(x.deg_g_star) {
            Outcome::Explained
        } else {
            Outcome::Unexplained(format!("{} / {} with N = {}", x.pair.0, x.pair.1, x.others))
        },
    )
}

#[test]
fn acceptance() {
    let suite_start = Instant::now();
    let mut rep = Report { lines: Vec::new(), unexplained: Vec::new() };

    rep.fixed("1", EXAMPLE_LIMIT, criterion_1);
    let f = f9();
    rep.fixed("2", FAMILY_LIMIT, || family(&lcd_witness(&f), Classification::Lcd, &[0, 1, 2], 4, 1));
    rep.fixed("3", FAMILY_LIMIT, || family(&so_witness(&f), Classification::SelfOrthogonal, &[0, 1, 2], 4, 1));
    rep.fixed("4", FAMILY_LIMIT, || family(&sd_witness(&f), Classification::SelfDual, &[0, 1], 6, 3));
    rep.fixed("5", ACAR_LIMIT, criterion_5);

    let n = SUITE_INSTANCES;
    let items = [
        ("6.1", "dual(T(S,k,g)) = ACar(S, n-k, L/g)", sample(601, n, from_check(checks::dual_tensor_is_acar))),
        ("6.2", "goppa_parity = goppa_subfield", sample(602, n, from_check(checks::goppa_constructions_agree))),
        ("6.3", "dual(C_q) = tr(C^perp), enumeration oracle", sample(603, n, from_check(checks::delsarte))),
        ("6.4", "T cap T = T(gcd), Gamma cap Gamma = Gamma(lcm)", sample(604, n, intersection)),
        ("6.5", "Hull(T) = T(gcd) = Hull(ACar); Gamma(lcm) in Hull(Gamma)", sample(605, n, hull)),
        ("6.6", "parameter formulas vs enumeration", sample(606, n, from_check(checks::parameter_formulas))),
    ];
    let all6 = items.iter().all(|(_, _, t)| t.passed(n));
    rep.line("6", all6, format!("{} property suites", items.len()));
    for (id, what, t) in items {
        rep.tally(id, what, n, t);
    }

    let t1 = sample(701, MDS_INSTANCES, mds);
    let t2 = sample(702, EAQECC_BOUND_INSTANCES, from_check(checks::goppa_eaqecc_bounds_quadratic));
    let ok7 = t1.passed(MDS_INSTANCES) && t2.passed(EAQECC_BOUND_INSTANCES);
    rep.line("7", ok7, format!("t = 1 MDS: {}; t = 2 bounds: {}", t1.summary(MDS_INSTANCES), t2.summary(EAQECC_BOUND_INSTANCES)));
    for (t, target) in [(t1, MDS_INSTANCES), (t2, EAQECC_BOUND_INSTANCES)] {
        rep.unexplained.extend(t.unexplained.iter().map(|e| format!("7: {e}")));
        if t.instances < target {
            rep.unexplained.push(format!("7: only {} instances generated", t.instances));
        }
    }

    rep.tally("8", "n - t deg g <= k <= n - deg g, d >= min deg g_j + 1", GOPPA_BOUND_INSTANCES, sample(801, GOPPA_BOUND_INSTANCES, from_check(checks::goppa_bounds)));

    let took = suite_start.elapsed();
    println!("suite time {took:.2?} (limit {SUITE_LIMIT:?})");
    let failed: Vec<&str> = rep.lines.iter().filter(|l| !l.1).map(|l| l.0.as_str()).collect();
    println!("failing criteria: {}", if failed.is_empty() { "none".to_string() } else { failed.join(", ") });
    assert!(rep.unexplained.is_empty(), "unexplained failures:\n{}", rep.unexplained.join("\n"));
    assert!(took <= SUITE_LIMIT);
}

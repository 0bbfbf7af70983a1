#![allow(dead_code)]

pub mod checks;
pub mod examples;

use mvgoppa::codes::LinearCode;
use mvgoppa::gf::{make_field, Elem, Field, FieldTower};
use mvgoppa::gfla::Matrix;
use mvgoppa::poly::{interpolate, vanishing_poly, CartesianSet, ProductPoly, UniPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u32, e: u32) -> Field {
    make_field(p, e, None).unwrap()
}

/// The F_9 used for the worked examples: modulus x^2 + 2x + 2.
pub fn f9() -> Field {
    make_field(3, 2, Some(&[2, 2, 1])).unwrap()
}

/// Every field of order at most 9.
pub fn small_fields() -> Vec<Field> {
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)].iter().map(|&(p, e)| field(p, e)).collect()
}

/// Towers `F_{q^t} / F_q` with `q^t ≤ 9`, including the trivial ones.
pub fn small_towers() -> Vec<FieldTower> {
    let mut out: Vec<FieldTower> = small_fields().into_iter().map(FieldTower::trivial).collect();
    out.push(FieldTower::with_subfield(field(2, 2), 2).unwrap());
    out.push(FieldTower::with_subfield(field(2, 3), 3).unwrap());
    out.push(FieldTower::with_subfield(f9(), 2).unwrap());
    out
}

/// Proper towers only (`t ≥ 2`).
pub fn proper_towers() -> Vec<FieldTower> {
    small_towers().into_iter().filter(|t| t.degree() > 1).collect()
}

pub fn pick<'a, T>(rng: &mut TestRng, xs: &'a [T]) -> &'a T {
    xs.choose(rng).expect("nonempty")
}

pub fn unit(rng: &mut TestRng, f: &Field) -> Elem {
    rng.gen_range(1..f.order())
}

pub fn elem(rng: &mut TestRng, f: &Field) -> Elem {
    rng.gen_range(0..f.order())
}

/// `n` distinct points of `f`.
pub fn points(rng: &mut TestRng, f: &Field, n: usize) -> Vec<Elem> {
    let mut all: Vec<Elem> = f.elements().collect();
    all.shuffle(rng);
    all.truncate(n);
    all
}

/// A random grid with `m` coordinates, `n_j ≥ min_size` and `n ≤ max_len`.
pub fn grid(rng: &mut TestRng, f: &Field, m: usize, min_size: usize, max_len: usize) -> CartesianSet {
    let q = f.order() as usize;
    loop {
        let sizes: Vec<usize> = (0..m).map(|_| rng.gen_range(min_size.max(1)..=q)).collect();
        if sizes.iter().product::<usize>() <= max_len {
            let comps = sizes.iter().map(|&n| points(rng, f, n)).collect();
            return CartesianSet::new(f, comps).unwrap();
        }
    }
}

pub fn poly(rng: &mut TestRng, f: &Field, deg: usize) -> UniPoly {
    let mut c: Vec<Elem> = (0..deg).map(|_| elem(rng, f)).collect();
    c.push(unit(rng, f));
    UniPoly::new(f, c).unwrap()
}

/// A polynomial of degree `deg` with no root in `pts`: `c·L + r` where `r`
/// interpolates nonzero values, reduced to degree `deg` when `deg < |pts|`
/// by rejection.
pub fn nonvanishing(rng: &mut TestRng, f: &Field, pts: &[Elem], deg: usize) -> Option<UniPoly> {
    if deg >= pts.len() {
        let l = vanishing_poly(f, pts).unwrap();
        let values: Vec<Elem> = pts.iter().map(|_| unit(rng, f)).collect();
        let r = interpolate(f, pts, &values);
        let extra = poly(rng, f, deg - pts.len());
        return Some(&(&l * &extra) + &r);
    }
    (0..64).map(|_| poly(rng, f, deg)).find(|p| pts.iter().all(|&s| p.eval(s) != 0))
}

/// Random product weight with `deg g_j = degs[j]`, nonvanishing on `s`.
pub fn product(rng: &mut TestRng, s: &CartesianSet, degs: &[usize]) -> Option<ProductPoly> {
    let factors = degs
        .iter()
        .enumerate()
        .map(|(j, &d)| nonvanishing(rng, s.field(), s.component(j), d))
        .collect::<Option<Vec<_>>>()?;
    Some(ProductPoly::new(factors).unwrap())
}

/// Random degrees `≤ n_j`.
pub fn degrees(rng: &mut TestRng, s: &CartesianSet, at_most: impl Fn(usize) -> usize) -> Vec<usize> {
    s.sizes().iter().map(|&n| rng.gen_range(0..=at_most(n))).collect()
}

/// A dual-partner triple `(g, f, j*)`: `f_{j*} g_{j*} = λL′ + βL` and
/// `f_j = g_j` of degree `n_j` elsewhere (or an independent polynomial when
/// `aligned` is false).
pub fn partner_triple(
    rng: &mut TestRng,
    s: &CartesianSet,
    aligned: bool,
) -> Option<(ProductPoly, ProductPoly, usize)> {
    let field = s.field();
    let m = s.m();
    let j_star = rng.gen_range(0..m);
    let l = &s.vanishing_polys()[j_star];
    let target = &l.derivative().scale(unit(rng, field)) + &l.scale(unit(rng, field));
    let divisors = target.monic_divisors();
    let g_star = pick(rng, &divisors).scale(unit(rng, field));
    let f_star = target.exact_div(&g_star).unwrap()?;
    let mut gs = Vec::with_capacity(m);
    let mut fs = Vec::with_capacity(m);
    for j in 0..m {
        if j == j_star {
            gs.push(g_star.clone());
            fs.push(f_star.clone());
            continue;
        }
        let pts = s.component(j);
        let g = nonvanishing(rng, field, pts, pts.len())?;
        let f = if aligned { g.scale(unit(rng, field)) } else { nonvanishing(rng, field, pts, pts.len())? };
        gs.push(g);
        fs.push(f);
    }
    Some((ProductPoly::new(gs).unwrap(), ProductPoly::new(fs).unwrap(), j_star))
}

pub fn random_code(rng: &mut TestRng, f: &Field, n: usize, k: usize) -> LinearCode {
    let data = (0..k * n).map(|_| elem(rng, f)).collect();
    LinearCode::from_generator(&Matrix::new(f, k, n, data).unwrap())
}

/// Every word of `F_q^n` lying in `c`, as the subcode they span.
pub fn brute_subfield_subcode(tower: &FieldTower, c: &LinearCode) -> LinearCode {
    let base = tower.base();
    let q = base.order() as usize;
    let n = c.n();
    let ext = tower.ext();
    let h = c.parity_check();
    let mut rows = Vec::new();
    let mut word = vec![0 as Elem; n];
    for _ in 0..q.pow(n as u32) {
        let lifted: Vec<Elem> = word.iter().map(|&x| tower.embed(x)).collect();
        let in_code = (0..h.rows())
            .all(|r| h.row(r).iter().zip(&lifted).fold(0, |acc, (&a, &b)| ext.add(acc, ext.mul(a, b))) == 0);
        if in_code {
            rows.push(word.clone());
        }
        for x in word.iter_mut() {
            *x += 1;
            if (*x as usize) < q {
                break;
            }
            *x = 0;
        }
    }
    LinearCode::from_generator(&Matrix::from_rows(base, n, rows).unwrap())
}

/// Minimum weight over all nonzero codewords by enumeration.
pub fn brute_distance(c: &LinearCode) -> Option<usize> {
    let f = c.field();
    let q = f.order() as usize;
    let (n, k) = (c.n(), c.k());
    if k == 0 {
        return None;
    }
    let g = c.generator();
    let mut msg = vec![0 as Elem; k];
    let mut best = n;
    for _ in 1..q.pow(k as u32) {
        for x in msg.iter_mut() {
            *x += 1;
            if (*x as usize) < q {
                break;
            }
            *x = 0;
        }
        let w = (0..n)
            .filter(|&col| {
                (0..k).fold(0, |acc, r| f.add(acc, f.mul(msg[r], g.get(r, col)))) != 0
            })
            .count();
        best = best.min(w);
    }
    Some(best)
}

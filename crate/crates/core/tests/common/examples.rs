//! The F_9 example families: witnesses for the distinguished coordinate and
//! the shared second coordinate, written in powers of the pinned generator.

use mvgoppa::gf::{Elem, Field};
use mvgoppa::poly::{vanishing_poly, UniPoly};

pub fn up(f: &Field, c: Vec<Elem>) -> UniPoly {
    UniPoly::new(f, c).unwrap()
}

pub fn a(f: &Field, k: u64) -> Elem {
    f.gen_pow(k)
}

pub struct Witness {
    pub s1: Vec<Elem>,
    pub f1: UniPoly,
    pub g1: UniPoly,
    pub lambda1: Elem,
    pub beta1: Elem,
}

/// `S_2 = {1, a^5, a^7}`, `g_2 = x^3 + a x^2 + 2x`, `p = x^3 + a^5 x^2 + a^2 x + a^6`.
pub fn coordinate_two(f: &Field) -> (Vec<Elem>, UniPoly, UniPoly) {
    let s2 = vec![1, a(f, 5), a(f, 7)];
    let g2 = up(f, vec![0, 2, a(f, 1), 1]);
    let p = up(f, vec![a(f, 6), a(f, 2), a(f, 5), 1]);
    (s2, g2, p)
}

pub fn lcd_witness(f: &Field) -> Witness {
    Witness {
        s1: vec![0, 1, a(f, 1), a(f, 7)],
        f1: up(f, vec![1, 1]),
        g1: up(f, vec![1, a(f, 5), a(f, 5), 2]),
        lambda1: 2,
        beta1: 2,
    }
}

pub fn so_witness(f: &Field) -> Witness {
    Witness {
        s1: vec![0, 1, 2, a(f, 1)],
        f1: up(f, vec![a(f, 1), a(f, 7), 2, a(f, 1)]),
        g1: up(f, vec![1, a(f, 2)]),
        lambda1: 1,
        beta1: a(f, 3),
    }
}

pub fn sd_witness(f: &Field) -> Witness {
    let g = up(f, vec![2, 2, 0, 1]);
    Witness {
        s1: [1, 2, 3, 5, 6, 7].iter().map(|&k| a(f, k)).collect(),
        f1: g.clone(),
        g1: g,
        lambda1: 1,
        beta1: 1,
    }
}

pub fn identities_hold(f: &Field, w: &Witness) -> bool {
    let (s2, g2, p) = coordinate_two(f);
    let l1 = vanishing_poly(f, &w.s1).unwrap();
    let l2 = vanishing_poly(f, &s2).unwrap();
    let one = &w.f1 * &w.g1 == &l1.derivative().scale(w.lambda1) + &l1.scale(w.beta1);
    let two = &g2 * &g2 == &l2.derivative().scale(a(f, 2)) + &(&p * &l2);
    one && two
}

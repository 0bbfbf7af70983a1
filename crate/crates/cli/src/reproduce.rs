//! Worked examples, rebuilt from scratch with a checklist of asserted facts.
//!
//! F_9 is taken with modulus x^2 + 2x + 2: it is the one primitive quadratic
//! under which the identities of all three families hold.

use clap::{Args, ValueEnum};
use mvgoppa::codes::{acar, goppa_parity, goppa_subfield, tensor_goppa};
use mvgoppa::notation::{format_list, format_poly, parse_element, parse_element_list, parse_field, parse_poly};
use mvgoppa::poly::{vanishing_poly, CartesianSet, MultiPoly, ProductPoly, UniPoly};
use mvgoppa::theory::{classify, dual_partner_check, family_member, Classification};
use mvgoppa::{Elem, Error, Field, FieldTower};

use crate::error::{CliError, CliResult};

pub const F9: &str = "3^2:2,2,1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    #[value(name = "goppa-64-56-4")]
    Goppa64,
    #[value(name = "acar-f17")]
    AcarF17,
    #[value(name = "lcd-family")]
    LcdFamily,
    #[value(name = "so-family")]
    SoFamily,
    #[value(name = "sd-family")]
    SdFamily,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub name: Example,
    /// Copies of the second coordinate; every listed member when absent.
    #[arg(long)]
    pub m: Option<usize>,
}

/// Prints one line per fact and turns the first false one into an error.
struct Checklist {
    failed: Option<String>,
}

impl Checklist {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        println!("[{}] {what}", if ok { "ok" } else { "FAIL" });
        if !ok && self.failed.is_none() {
            self.failed = Some(what);
        }
    }

    fn finish(self, name: &str) -> CliResult<()> {
        match self.failed {
            None => {
                println!("{name}: all checks passed");
                Ok(())
            }
            Some(what) => Err(Error::MismatchDetected(format!("{name}: {what}")).into()),
        }
    }
}

fn el(f: &Field, s: &str) -> Elem {
    parse_element(f, s).expect("built-in element")
}

fn poly(f: &Field, s: &str) -> UniPoly {
    parse_poly(f, s).expect("built-in polynomial")
}

fn list(f: &Field, s: &str) -> Vec<Elem> {
    parse_element_list(f, s).expect("built-in point set")
}

struct FamilyData {
    kind: Classification,
    s1: &'static str,
    f1: &'static str,
    g1: &'static str,
    lambda: &'static str,
    beta: &'static str,
    /// `[n_1, k_1]` at `m = 0`.
    base: (usize, usize),
    members: &'static [usize],
}

const LCD: FamilyData = FamilyData {
    kind: Classification::Lcd,
    s1: "0,1,a,a^7",
    f1: "1,1",
    g1: "1,a^5,a^5,2",
    lambda: "2",
    beta: "2",
    base: (4, 1),
    members: &[0, 1, 2],
};

const SO: FamilyData = FamilyData {
    kind: Classification::SelfOrthogonal,
    s1: "0,1,2,a",
    f1: "a,a^7,2,a",
    g1: "1,a^2",
    lambda: "1",
    beta: "a^3",
    base: (4, 1),
    members: &[0, 1, 2],
};

const SD: FamilyData = FamilyData {
    kind: Classification::SelfDual,
    s1: "a,a^2,a^3,a^5,a^6,a^7",
    f1: "2,2,0,1",
    g1: "2,2,0,1",
    lambda: "1",
    beta: "1",
    base: (6, 3),
    members: &[0, 1],
};

/// The shared second coordinate `g_2^2 = a^2 L_2' + p L_2`.
const S2: &str = "1,a^5,a^7";
const G2: &str = "0,2,a,1";
const P2: &str = "a^6,a^2,a^5,1";

fn family(name: &str, data: &FamilyData, m: Option<usize>) -> CliResult<()> {
    let f = parse_field(F9)?;
    let mut c = Checklist { failed: None };
    let (s1, f1, g1) = (list(&f, data.s1), poly(&f, data.f1), poly(&f, data.g1));
    let (lambda, beta) = (el(&f, data.lambda), el(&f, data.beta));
    let (s2, g2, p) = (list(&f, S2), poly(&f, G2), poly(&f, P2));
    println!("field GF(9), a root of x^2 + 2x + 2");
    println!("S1 = {{{}}}, f1 = {}, g1 = {}", format_list(&f, &s1), format_poly(&f1), format_poly(&g1));
    println!("S2 = {{{}}}, f2 = g2 = {}, p = {}", format_list(&f, &s2), format_poly(&g2), format_poly(&p));

    let l1 = vanishing_poly(&f, &s1)?;
    let l2 = vanishing_poly(&f, &s2)?;
    c.check(
        &f1 * &g1 == &l1.derivative().scale(lambda) + &l1.scale(beta),
        format!("f1 g1 = {} L1' + {} L1", data.lambda, data.beta),
    );
    c.check(&g2 * &g2 == &l2.derivative().scale(el(&f, "a^2")) + &(&p * &l2), "f2 g2 = a^2 L2' + p L2");

    // the LCD family takes weight f_1, the others g_1
    let (weight, partner) = if data.kind == Classification::Lcd { (&f1, &g1) } else { (&g1, &f1) };
    let members: Vec<usize> = match m {
        Some(m) => vec![m],
        None => data.members.to_vec(),
    };
    for m in members {
        let (s, g) = family_member(&s1, weight, &s2, &g2, m)?;
        let mut factors = vec![partner.clone()];
        factors.extend(std::iter::repeat(g2.clone()).take(m));
        let cert = dual_partner_check(&s, &g, &ProductPoly::new(factors)?, 0)?;
        c.check(cert.passes(), format!("m = {m}: dual partner certificate {cert}"));
        let code = tensor_goppa(&s, &g)?;
        let scale = 3usize.pow(m as u32);
        let (n, k) = (data.base.0 * scale, data.base.1 * scale);
        c.check((code.n(), code.k()) == (n, k), format!("m = {m}: T(S, g) is [{}, {}], expected [{n}, {k}]", code.n(), code.k()));
        let class = classify(&code);
        c.check(class == data.kind, format!("m = {m}: classified {class}, expected {}", data.kind));
    }
    c.finish(name)
}

fn goppa_64() -> CliResult<()> {
    let f = parse_field(F9)?;
    let mut c = Checklist { failed: None };
    let tower = FieldTower::with_subfield(f.clone(), 2)?;
    let pts = list(&f, "a,a^2,a^3,a^4,a^5,a^6,a^7,a^8");
    let s = CartesianSet::new(&f, vec![pts.clone(), pts])?;
    let g = ProductPoly::repeated(&poly(&f, "a,0,1"), 2);
    println!("field GF(9) over GF(3), S1 = S2 = F_9^*, g1 = g2 = x^2 + a");
    let gamma = goppa_parity(&tower, &s, &g)?;
    c.check((gamma.n(), gamma.k()) == (64, 56), format!("Gamma(S, g) has n = {}, k = {}", gamma.n(), gamma.k()));
    c.check(gamma == goppa_subfield(&tower, &s, &g)?, "parity-check and subfield-subcode constructions agree");
    let d = gamma.min_distance(None).ok_or(Error::ZeroCode)?;
    c.check(d.exact && d.value == 4, format!("minimum distance {d}"));
    c.finish("goppa-64-56-4")
}

fn acar_f17() -> CliResult<()> {
    let f = parse_field("17")?;
    let mut c = Checklist { failed: None };
    let s = CartesianSet::new(&f, vec![(0..6).collect(), (0..7).collect()])?;
    println!("field GF(17), S = {{0..5}} x {{0..6}}, k = (2, 2), h = 1");
    let code = acar(&s, &[2, 2], &MultiPoly::constant(&f, 2, 1))?;
    c.check(code.k() == 42 - 4 * 5, format!("dimension {} = 42 - 4*5", code.k()));
    c.check(code.generator().rank() == 22, "generator rank 22");
    let d = code.min_distance(None).ok_or(Error::ZeroCode)?;
    c.check(d.exact && d.value == 5, format!("minimum distance {d} = min(5, 6)"));
    c.finish("acar-f17")
}

pub fn reproduce(a: &ReproduceArgs) -> CliResult<()> {
    let families = [Example::LcdFamily, Example::SoFamily, Example::SdFamily];
    if a.m.is_some() && !families.contains(&a.name) {
        return Err(CliError::Usage("--m applies to the family examples only".into()));
    }
    match a.name {
        Example::Goppa64 => goppa_64(),
        Example::AcarF17 => acar_f17(),
        Example::LcdFamily => family("lcd-family", &LCD, a.m),
        Example::SoFamily => family("so-family", &SO, a.m),
        Example::SdFamily => family("sd-family", &SD, a.m),
    }
}

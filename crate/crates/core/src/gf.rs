//! Finite fields GF(p^e) and subfield towers F_q ⊂ F_{q^t}.
//!
//! Elements are `u32` codes: the polynomial `c_0 + c_1 x + … + c_{e-1} x^{e-1}`
//! (reduced modulo the field's modulus) is stored as `Σ c_i p^i`. In particular
//! the prime subfield occupies the codes `0..p` in every field of
//! characteristic `p`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element code.
pub type Elem = u32;

const TABLE_LIMIT: u64 = 1 << 16;
const MAX_ORDER: u64 = 1 << 22;
const NO_LOG: u32 = u32::MAX;

enum Arith {
    /// `e == 1`: native modular arithmetic.
    Prime,
    /// Log/antilog tables with Zech logarithms for addition (odd `p`).
    Tables { exp: Vec<u32>, log: Vec<u32>, zech: Vec<u32> },
    /// Digit-wise addition, schoolbook multiplication with reduction.
    Schoolbook,
}

struct FieldInner {
    p: u32,
    e: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: Elem,
    arith: Arith,
}

/// The finite field GF(p^e). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p(), self.e(), self.modulus())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.e())
        }
    }
}

/// Serialized form of a field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
    pub generator: Elem,
}

/// Builds GF(p^e).
///
/// Without an explicit modulus the default is used: for `e = 1` the modulus
/// is `x - g` with `g` the least primitive root mod `p`; for `e > 1` it is the
/// first monic irreducible polynomial with a primitive root when candidates
/// are scanned lexicographically by coefficient list `(c_0, c_1, …)`.
///
/// With an explicit modulus the generator is the modulus root when that root
/// is primitive, and otherwise the primitive element with the smallest code.
pub fn make_field(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
    Field::build(p, e, modulus, false, true)
}

/// As [`make_field`], but fails with [`Error::NonPrimitiveModulusRoot`] when
/// the root of the given modulus does not generate the multiplicative group.
pub fn make_primitive_field(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
    Field::build(p, e, modulus, true, true)
}

/// All monic irreducible polynomials of degree `e` over GF(p), as
/// coefficient lists low-to-high, in the default scan order.
pub fn irreducible_moduli(p: u32, e: u32) -> Result<Vec<Vec<u32>>> {
    check_prime(p)?;
    if e == 0 {
        return Err(Error::InvalidDegree(e));
    }
    Ok(modulus_candidates(p, e)
        .filter(|m| fp::is_irreducible(m, p))
        .collect())
}

fn modulus_candidates(p: u32, e: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(e);
    (0..count).map(move |mut idx| {
        let mut m = vec![0u32; e as usize + 1];
        for i in (0..e as usize).rev() {
            m[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        m[e as usize] = 1;
        m
    })
}

fn check_prime(p: u32) -> Result<()> {
    if p < 2 || (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).any(|d| p % d == 0) {
        return Err(Error::NotPrime(p as u64));
    }
    Ok(())
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldInner {
    fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.arith {
            Arith::Prime => {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            _ if self.p == 2 => x ^ y,
            Arith::Tables { exp, log, zech } => {
                if x == 0 {
                    return y;
                }
                if y == 0 {
                    return x;
                }
                let q1 = self.order - 1;
                let (lx, ly) = (log[x as usize], log[y as usize]);
                let d = if ly >= lx { ly - lx } else { ly + q1 - lx };
                let z = zech[d as usize];
                if z == NO_LOG {
                    0
                } else {
                    exp[(lx + z) as usize]
                }
            }
            Arith::Schoolbook => self.add_digits(x, y),
        }
    }

    fn add_digits(&self, mut x: Elem, mut y: Elem) -> Elem {
        let p = self.p;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn neg(&self, x: Elem) -> Elem {
        if self.p == 2 || x == 0 {
            return x;
        }
        let p = self.p;
        let mut x = x;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            let d = x % p;
            out += ((p - d) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.arith {
            Arith::Prime => ((x as u64 * y as u64) % self.p as u64) as u32,
            Arith::Tables { exp, log, .. } => {
                if x == 0 || y == 0 {
                    0
                } else {
                    exp[(log[x as usize] + log[y as usize]) as usize]
                }
            }
            Arith::Schoolbook => self.mul_schoolbook(x, y),
        }
    }

    fn mul_schoolbook(&self, x: Elem, y: Elem) -> Elem {
        let (p, e) = (self.p as u64, self.e as usize);
        let dx = self.digits(x);
        let dy = self.digits(y);
        let mut prod = vec![0u64; 2 * e];
        for (i, &a) in dx.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in dy.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u64 * b as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for top in (e..2 * e).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let idx = top - e + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let mut out = 0u32;
        for i in (0..e).rev() {
            out = out * self.p + prod[i] as u32;
        }
        out
    }

    fn digits(&self, mut x: Elem) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            d.push(x % self.p);
            x /= self.p;
        }
        d
    }

    fn pow(&self, x: Elem, mut k: u64) -> Elem {
        if let Arith::Tables { exp, log, .. } = &self.arith {
            if x == 0 {
                return if k == 0 { 1 } else { 0 };
            }
            let q1 = (self.order - 1) as u64;
            return exp[((log[x as usize] as u64 * (k % q1)) % q1) as usize];
        }
        let mut base = x;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn is_primitive_with(&self, x: Elem, factors: &[u64]) -> bool {
        if x == 0 {
            return false;
        }
        let q1 = (self.order - 1) as u64;
        self.pow(x, q1) == 1 && factors.iter().all(|&r| self.pow(x, q1 / r) != 1)
    }
}

impl Field {
    fn build(
        p: u32,
        e: u32,
        modulus: Option<&[u32]>,
        require_primitive: bool,
        allow_tables: bool,
    ) -> Result<Field> {
        check_prime(p)?;
        if e == 0 {
            return Err(Error::InvalidDegree(e));
        }
        let order = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER);
        let order = order.ok_or(Error::FieldTooLarge { p, e })?;
        let factors = prime_factors(order - 1);
        let raw = |m: Vec<u32>| FieldInner {
            p,
            e,
            order: order as u32,
            modulus: m,
            generator: 0,
            arith: if e == 1 { Arith::Prime } else { Arith::Schoolbook },
        };
        let root_of = |m: &[u32]| if e == 1 { (p - m[0]) % p } else { p };

        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        e + 1,
                        m.len()
                    )));
                }
                if m[e as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficient {c} is not in GF({p})")));
                }
                if !fp::is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m.to_vec()
            }
            None if e == 1 => {
                let probe = raw(vec![0, 1]);
                let g = (1..p)
                    .find(|&g| probe.is_primitive_with(g, &factors))
                    .expect("GF(p)* is cyclic");
                vec![(p - g) % p, 1]
            }
            None => modulus_candidates(p, e)
                .filter(|m| m[0] != 0 && fp::is_irreducible(m, p))
                .find(|m| raw(m.clone()).is_primitive_with(p, &factors))
                .expect("a primitive polynomial exists for every degree"),
        };

        let mut inner = raw(modulus);
        let root = root_of(&inner.modulus);
        inner.generator = if inner.is_primitive_with(root, &factors) {
            root
        } else if require_primitive {
            return Err(Error::NonPrimitiveModulusRoot);
        } else {
            (1..inner.order)
                .find(|&x| inner.is_primitive_with(x, &factors))
                .expect("GF(q)* is cyclic")
        };

        if e > 1 && allow_tables && order <= TABLE_LIMIT {
            inner.arith = build_tables(&inner);
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    /// Rebuilds this field with table-free arithmetic. The result compares
    /// equal to `self`; it exists so the two arithmetic paths can be checked
    /// against each other.
    #[doc(hidden)]
    pub fn schoolbook_twin(&self) -> Field {
        Field::build(self.p(), self.e(), Some(self.modulus()), false, false)
            .expect("modulus already validated")
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    /// Number of elements `p^e`.
    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The designated primitive element `a`.
    pub fn generator(&self) -> Elem {
        self.inner.generator
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p(),
            e: self.e(),
            modulus: self.modulus().to_vec(),
            generator: self.generator(),
        }
    }

    /// Rebuilds a field from its serialized form, checking the stored
    /// generator against the one this library derives.
    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        let f = make_field(spec.p, spec.e, Some(&spec.modulus))?;
        if f.generator() != spec.generator {
            return Err(Error::InvalidModulus(format!(
                "generator {} does not match derived generator {}",
                spec.generator,
                f.generator()
            )));
        }
        Ok(f)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.inner.order
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::InvalidElement(x as u64))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.order
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> {
        1..self.inner.order
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.inner.add(x, y)
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.inner.neg(x)
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.inner.add(x, self.inner.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.inner.mul(x, y)
    }

    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        self.inner.pow(x, k)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn try_inv(&self, x: Elem) -> Option<Elem> {
        if x == 0 {
            return None;
        }
        Some(match &self.inner.arith {
            Arith::Tables { exp, log, .. } => {
                let q1 = self.inner.order - 1;
                exp[((q1 - log[x as usize]) % q1) as usize]
            }
            _ => self.inner.pow(x, self.inner.order as u64 - 2),
        })
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics if `x` is zero.
    pub fn inv(&self, x: Elem) -> Elem {
        self.try_inv(x).expect("inverse of zero")
    }

    pub fn div(&self, x: Elem, y: Elem) -> Elem {
        self.mul(x, self.inv(y))
    }

    /// `a^k` for the designated generator `a`.
    pub fn gen_pow(&self, k: u64) -> Elem {
        self.pow(self.generator(), k)
    }

    /// Discrete logarithm to base `a`; `None` for zero.
    pub fn log(&self, x: Elem) -> Option<u32> {
        if x == 0 || !self.contains(x) {
            return None;
        }
        if let Arith::Tables { log, .. } = &self.inner.arith {
            return Some(log[x as usize]);
        }
        let a = self.generator();
        let mut acc = 1;
        for k in 0..self.order() - 1 {
            if acc == x {
                return Some(k);
            }
            acc = self.mul(acc, a);
        }
        None
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: Elem) -> Option<u64> {
        if x == 0 {
            return None;
        }
        let q1 = self.order() as u64 - 1;
        let mut ord = q1;
        for r in prime_factors(q1) {
            while ord % r == 0 && self.pow(x, ord / r) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    pub fn is_primitive(&self, x: Elem) -> bool {
        self.mult_order(x) == Some(self.order() as u64 - 1)
    }

    /// Embeds a prime-field integer.
    pub fn from_int(&self, n: u64) -> Elem {
        (n % self.p() as u64) as Elem
    }
}

fn build_tables(inner: &FieldInner) -> Arith {
    let q = inner.order as usize;
    let q1 = q - 1;
    let mut exp = vec![0u32; 2 * q1];
    let mut log = vec![NO_LOG; q];
    let mut acc = 1u32;
    for k in 0..q1 {
        exp[k] = acc;
        exp[k + q1] = acc;
        log[acc as usize] = k as u32;
        acc = inner.mul_schoolbook(acc, inner.generator);
    }
    let mut zech = vec![NO_LOG; q1];
    if inner.p != 2 {
        for (d, z) in zech.iter_mut().enumerate() {
            let s = inner.add_digits(1, exp[d]);
            if s != 0 {
                *z = log[s as usize];
            }
        }
    }
    Arith::Tables { exp, log, zech }
}

/// Polynomials over GF(p) as coefficient vectors, used for modulus checks.
pub(crate) mod fp {
    fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn inv(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut k = p - 2;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            k >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        trim(&mut a);
        let mut m = m.to_vec();
        trim(&mut m);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p) as u64;
        while a.len() > dm {
            let top = a.len() - 1;
            let c = a[top] as u64 * lead_inv % p as u64;
            for i in 0..=dm {
                let idx = top - dm + i;
                a[idx] = ((a[idx] as u64 + (p as u64 - c) * m[i] as u64) % p as u64) as u32;
            }
            trim(&mut a);
        }
        a
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        rem(&prod, m, p)
    }

    fn powmod(base: &[u32], mut k: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(base, m, p);
        while k > 0 {
            if k & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            k >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's test: `m` of degree `e` is irreducible iff `x^{p^e} ≡ x` and
    /// `gcd(x^{p^{e/r}} - x, m) = 1` for every prime `r | e`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let e = m.len() - 1;
        if e == 0 {
            return false;
        }
        if e == 1 {
            return true;
        }
        // x^{p^i} mod m for i = 0..=e
        let mut frob = vec![vec![0, 1]];
        for i in 0..e {
            let next = powmod(&frob[i], p as u64, m, p);
            frob.push(next);
        }
        let x_minus = |v: &[u32]| {
            let mut d = v.to_vec();
            d.resize(d.len().max(2), 0);
            d[1] = (d[1] + p - 1) % p;
            trim(&mut d);
            d
        };
        if !x_minus(&frob[e]).is_empty() {
            return false;
        }
        let mut r = 2;
        let mut n = e;
        let mut primes = Vec::new();
        while r * r <= n {
            if n % r == 0 {
                primes.push(r);
                while n % r == 0 {
                    n /= r;
                }
            }
            r += 1;
        }
        if n > 1 {
            primes.push(n);
        }
        primes.iter().all(|&r| gcd(&x_minus(&frob[e / r]), m, p).len() == 1)
    }
}

/// The subfield pair F_q ⊂ F_{q^t}, with the embedding of F_q and the
/// polynomial basis `(1, A, …, A^{t-1})` of F_{q^t} over F_q, where `A` is the
/// extension field's generator.
#[derive(Clone)]
pub struct FieldTower {
    inner: Arc<TowerInner>,
}

struct TowerInner {
    base: Field,
    ext: Field,
    t: usize,
    embed: Vec<Elem>,
    restrict: Vec<Elem>,
    basis: Vec<Elem>,
    expansion: Vec<Elem>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTower({:?} ⊂ {:?})", self.base(), self.ext())
    }
}

impl FieldTower {
    /// Builds the tower `base ⊂ ext`. Both fields must share the
    /// characteristic and `base.e()` must divide `ext.e()`.
    pub fn new(base: Field, ext: Field) -> Result<FieldTower> {
        if base.p() != ext.p() || ext.e() % base.e() != 0 {
            return Err(Error::FieldMismatch);
        }
        let t = (ext.e() / base.e()) as usize;
        let embed: Vec<Elem> = if base == ext {
            base.elements().collect()
        } else {
            // any root of the base modulus in ext realizes the embedding
            let m = base.modulus();
            let root = ext
                .elements()
                .find(|&r| {
                    m.iter().rev().fold(0, |acc, &c| ext.add(ext.mul(acc, r), c)) == 0
                })
                .ok_or(Error::FieldMismatch)?;
            base.elements()
                .map(|c| {
                    let digits = (0..base.e()).map(|i| (c / base.p().pow(i)) % base.p());
                    let mut acc = 0;
                    let mut rp = 1;
                    for d in digits {
                        acc = ext.add(acc, ext.mul(d, rp));
                        rp = ext.mul(rp, root);
                    }
                    acc
                })
                .collect()
        };
        let mut restrict = vec![u32::MAX; ext.order() as usize];
        for (c, &x) in embed.iter().enumerate() {
            restrict[x as usize] = c as Elem;
        }
        let a = ext.generator();
        let basis: Vec<Elem> = (0..t).map(|i| ext.pow(a, i as u64)).collect();

        let q = base.order() as usize;
        let mut expansion = vec![0; ext.order() as usize * t];
        let mut coords = vec![0usize; t];
        let total = ext.order() as usize;
        for _ in 0..total {
            let x = coords
                .iter()
                .zip(&basis)
                .fold(0, |acc, (&c, &b)| ext.add(acc, ext.mul(embed[c], b)));
            for (i, &c) in coords.iter().enumerate() {
                expansion[x as usize * t + i] = c as Elem;
            }
            for c in coords.iter_mut() {
                *c += 1;
                if *c < q {
                    break;
                }
                *c = 0;
            }
        }
        Ok(FieldTower {
            inner: Arc::new(TowerInner { base, ext, t, embed, restrict, basis, expansion }),
        })
    }

    /// The degree-`t` extension of `base`, using the default modulus.
    pub fn over(base: Field, t: u32) -> Result<FieldTower> {
        if t == 0 {
            return Err(Error::InvalidDegree(t));
        }
        let ext = if t == 1 { base.clone() } else { make_field(base.p(), base.e() * t, None)? };
        FieldTower::new(base, ext)
    }

    /// The tower whose extension is `ext` and whose base is the subfield of
    /// index `t` (with its default modulus).
    pub fn with_subfield(ext: Field, t: u32) -> Result<FieldTower> {
        if t == 0 || ext.e() % t != 0 {
            return Err(Error::InvalidDegree(t));
        }
        let base = if t == 1 { ext.clone() } else { make_field(ext.p(), ext.e() / t, None)? };
        FieldTower::new(base, ext)
    }

    /// The trivial tower F_q ⊂ F_q.
    pub fn trivial(field: Field) -> FieldTower {
        FieldTower::new(field.clone(), field).expect("trivial tower")
    }

    pub fn base(&self) -> &Field {
        &self.inner.base
    }

    pub fn ext(&self) -> &Field {
        &self.inner.ext
    }

    /// Tower degree `t`.
    pub fn degree(&self) -> usize {
        self.inner.t
    }

    pub fn embed(&self, c: Elem) -> Elem {
        self.inner.embed[c as usize]
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn restrict(&self, x: Elem) -> Option<Elem> {
        self.inner.restrict.get(x as usize).copied().filter(|&c| c != u32::MAX)
    }

    /// `x^q = x`.
    pub fn is_in_subfield(&self, x: Elem) -> bool {
        self.ext().pow(x, self.base().order() as u64) == x
    }

    /// `tr(x) = Σ_{i<t} x^{q^i}`, returned as a base-field element.
    pub fn trace(&self, x: Elem) -> Elem {
        let ext = self.ext();
        let q = self.base().order() as u64;
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.degree() {
            acc = ext.add(acc, y);
            y = ext.pow(y, q);
        }
        self.restrict(acc).expect("trace lies in the base field")
    }

    pub fn basis(&self) -> &[Elem] {
        &self.inner.basis
    }

    /// Coordinates of `x` in the F_q-basis.
    pub fn basis_expand(&self, x: Elem) -> &[Elem] {
        let t = self.degree();
        &self.inner.expansion[x as usize * t..(x as usize + 1) * t]
    }

    pub fn basis_combine(&self, coords: &[Elem]) -> Elem {
        let ext = self.ext();
        coords
            .iter()
            .zip(self.basis())
            .fold(0, |acc, (&c, &b)| ext.add(acc, ext.mul(self.embed(c), b)))
    }
}

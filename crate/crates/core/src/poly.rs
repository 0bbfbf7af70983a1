//! Polynomials over a finite field: univariate, product-form multivariate
//! (`g = g_1(x_1)···g_m(x_m)`), and dense multivariate representatives
//! reduced modulo the vanishing ideal of a Cartesian grid.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Univariate polynomial, coefficients low-to-high with trailing zeros
/// stripped. The zero polynomial has degree `None` (−∞).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl UniPoly {
    /// Builds a polynomial from coefficient codes, low-to-high.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<UniPoly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub(crate) fn from_coeffs(field: &Field, mut coeffs: Vec<Elem>) -> UniPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> UniPoly {
        Self::constant(field, 1)
    }

    pub fn constant(field: &Field, c: Elem) -> UniPoly {
        Self::from_coeffs(field, vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> UniPoly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::from_coeffs(field, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: Elem) -> UniPoly {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check_field(&self, other: &UniPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn combine(&self, other: &UniPoly, op: impl Fn(Elem, Elem) -> Elem) -> UniPoly {
        assert!(self.field == other.field, "polynomials over different fields");
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| op(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(&self.field, v)
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `Some(q)` when `divisor · q = self`.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &UniPoly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm.
    pub fn lcm(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(&self.field));
        }
        let g = self.gcd(other)?;
        let (q, _) = (self * other).div_rem(&g)?;
        Ok(q.monic())
    }

    /// Term-by-term formal derivative in characteristic `p`.
    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as u64), c))
            .collect();
        Self::from_coeffs(f, v)
    }

    /// Same polynomial up to a nonzero scalar.
    pub fn is_associate(&self, other: &UniPoly) -> bool {
        self.field == other.field && self.monic() == other.monic()
    }

    /// Monic irreducible factorization by trial division, factors with
    /// multiplicity in increasing degree. Meant for the small degrees that
    /// occur in code constructions.
    pub fn factor(&self) -> Vec<(UniPoly, usize)> {
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while 2 * d <= rest.deg0() {
            for cand in monic_of_degree(&self.field, d) {
                let mut mult = 0;
                while let Ok(Some(q)) = rest.exact_div(&cand) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
                if 2 * d > rest.deg0() {
                    break;
                }
            }
            d += 1;
        }
        if rest.deg0() > 0 {
            out.push((rest, 1));
        }
        out
    }

    /// All monic divisors, ordered by degree and then coefficients.
    pub fn monic_divisors(&self) -> Vec<UniPoly> {
        let mut out = vec![UniPoly::one(&self.field)];
        for (f, mult) in self.factor() {
            let mut next = Vec::with_capacity(out.len() * (mult + 1));
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..mult {
                    acc = &acc * &f;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        out.sort_by(|a, b| (a.deg0(), a.coeffs()).cmp(&(b.deg0(), b.coeffs())));
        out
    }
}

/// Monic polynomials of degree exactly `d`, in coefficient order.
pub fn monic_of_degree(field: &Field, d: usize) -> impl Iterator<Item = UniPoly> + '_ {
    let q = field.order() as u64;
    (0..q.pow(d as u32)).map(move |mut i| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push((i % q) as Elem);
            i /= q;
        }
        c.push(1);
        UniPoly::from_coeffs(field, c)
    })
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let f = self.field.clone();
        self.combine(rhs, |a, b| f.add(a, b))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let f = self.field.clone();
        self.combine(rhs, |a, b| f.sub(a, b))
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        let mut v = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        UniPoly::from_coeffs(f, v)
    }
}

/// `L_j(x) = Π_{s ∈ S_j} (x − s)`.
pub fn vanishing_poly(field: &Field, points: &[Elem]) -> Result<UniPoly> {
    let mut seen = vec![false; field.order() as usize];
    let mut acc = UniPoly::one(field);
    for &s in points {
        field.check(s)?;
        if std::mem::replace(&mut seen[s as usize], true) {
            return Err(Error::DuplicatePoints(s));
        }
        acc = &acc * &UniPoly::from_coeffs(field, vec![field.neg(s), 1]);
    }
    Ok(acc)
}

/// Polynomial of degree `< points.len()` taking `values[i]` at `points[i]`.
pub fn interpolate(field: &Field, points: &[Elem], values: &[Elem]) -> UniPoly {
    let basis = lagrange_basis(field, points);
    combine_basis(field, &basis, values)
}

fn lagrange_basis(field: &Field, points: &[Elem]) -> Vec<Vec<Elem>> {
    let l = vanishing_poly(field, points).expect("distinct points");
    let dl = l.derivative();
    points
        .iter()
        .map(|&s| {
            let lin = UniPoly::from_coeffs(field, vec![field.neg(s), 1]);
            let (q, _) = l.div_rem(&lin).expect("nonzero divisor");
            let w = field.inv(dl.eval(s));
            let mut c = q.scale(w).coeffs;
            c.resize(points.len(), 0);
            c
        })
        .collect()
}

fn combine_basis(field: &Field, basis: &[Vec<Elem>], values: &[Elem]) -> UniPoly {
    let n = basis.len();
    let mut out = vec![0; n];
    for (row, &v) in basis.iter().zip(values) {
        if v == 0 {
            continue;
        }
        for (o, &b) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(v, b));
        }
    }
    UniPoly::from_coeffs(field, out)
}

/// Ordered Cartesian grid `S = S_1 × ··· × S_m`.
///
/// Points are enumerated lexicographically: the first coordinate varies
/// slowest, and each `S_j` keeps the order it was given in. Every matrix
/// column index in this crate refers to this enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianSet {
    field: Field,
    components: Vec<Vec<Elem>>,
}

impl CartesianSet {
    pub fn new(field: &Field, components: Vec<Vec<Elem>>) -> Result<CartesianSet> {
        if components.is_empty() {
            return Err(Error::EmptyComponent(0));
        }
        for (j, c) in components.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyComponent(j));
            }
            vanishing_poly(field, c)?;
        }
        Ok(CartesianSet { field: field.clone(), components })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, j: usize) -> &[Elem] {
        &self.components[j]
    }

    pub fn components(&self) -> &[Vec<Elem>] {
        &self.components
    }

    /// `(n_1, …, n_m)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// `n = Π n_j`.
    pub fn len(&self) -> usize {
        self.components.iter().map(Vec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index tuple of the `i`-th point.
    pub fn index_tuple(&self, mut i: usize) -> Vec<usize> {
        let mut idx = vec![0; self.m()];
        for j in (0..self.m()).rev() {
            let nj = self.components[j].len();
            idx[j] = i % nj;
            i /= nj;
        }
        idx
    }

    pub fn point(&self, i: usize) -> Vec<Elem> {
        self.index_tuple(i)
            .iter()
            .enumerate()
            .map(|(j, &k)| self.components[j][k])
            .collect()
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    /// `L_j` for every coordinate.
    pub fn vanishing_polys(&self) -> Vec<UniPoly> {
        self.components
            .iter()
            .map(|c| vanishing_poly(&self.field, c).expect("validated"))
            .collect()
    }

    fn check_field(&self, field: &Field) -> Result<()> {
        if &self.field == field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn check_arity(&self, m: usize) -> Result<()> {
        if m == self.m() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "polynomial in {m} variables on a grid of dimension {}",
                self.m()
            )))
        }
    }
}

/// A function on F^m given by a polynomial.
pub trait Polynomial {
    fn field(&self) -> &Field;
    fn num_vars(&self) -> usize;
    fn eval_at(&self, point: &[Elem]) -> Elem;
    /// `deg_{x_j}`, `None` for the zero polynomial. `j` is 0-based.
    fn degree_in(&self, j: usize) -> Result<Option<usize>>;
}

/// `deg_{x_j}(f)` with a range check on `j` (0-based).
pub fn degree_in_variable(f: &dyn Polynomial, j: usize) -> Result<Option<usize>> {
    f.degree_in(j)
}

/// Product-form polynomial `g = g_1(x_1)···g_m(x_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPoly {
    factors: Vec<UniPoly>,
}

impl ProductPoly {
    pub fn new(factors: Vec<UniPoly>) -> Result<ProductPoly> {
        let first = factors.first().ok_or(Error::EmptyComponent(0))?;
        if factors.iter().any(|f| f.field() != first.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(ProductPoly { factors })
    }

    /// `p(x_1)···p(x_m)`.
    pub fn repeated(p: &UniPoly, m: usize) -> ProductPoly {
        ProductPoly { factors: vec![p.clone(); m.max(1)] }
    }

    pub fn one(field: &Field, m: usize) -> ProductPoly {
        Self::repeated(&UniPoly::one(field), m)
    }

    pub fn factors(&self) -> &[UniPoly] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &UniPoly {
        &self.factors[j]
    }

    pub fn m(&self) -> usize {
        self.factors.len()
    }

    /// Per-variable degrees, zero factors counted as 0.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(UniPoly::deg0).collect()
    }

    /// `Π_j deg(g_j)`: the dimension of `T(S, g)` and the quantity written
    /// `deg(g)` in the dimension bounds for multivariate Goppa codes.
    pub fn degree(&self) -> usize {
        self.degrees().iter().product()
    }

    /// `Σ_j deg(g_j)`, the total degree of the product.
    pub fn total_degree(&self) -> usize {
        self.degrees().iter().sum()
    }

    fn zip_with(
        &self,
        other: &ProductPoly,
        op: impl Fn(&UniPoly, &UniPoly) -> Result<UniPoly>,
    ) -> Result<ProductPoly> {
        if self.m() != other.m() {
            return Err(Error::ShapeMismatch(format!("{} vs {} factors", self.m(), other.m())));
        }
        let factors = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductPoly { factors })
    }

    /// Factorwise product `g·g′`.
    pub fn mul(&self, other: &ProductPoly) -> Result<ProductPoly> {
        self.zip_with(other, |a, b| {
            a.check_field(b)?;
            Ok(a * b)
        })
    }

    /// Factorwise monic gcd.
    pub fn gcd(&self, other: &ProductPoly) -> Result<ProductPoly> {
        self.zip_with(other, UniPoly::gcd)
    }

    /// Factorwise monic lcm.
    pub fn lcm(&self, other: &ProductPoly) -> Result<ProductPoly> {
        self.zip_with(other, UniPoly::lcm)
    }

    /// First point of `S` where `g` vanishes, if any.
    pub fn find_zero_on(&self, s: &CartesianSet) -> Result<Option<Vec<Elem>>> {
        s.check_field(self.field())?;
        s.check_arity(self.m())?;
        for (j, (g, pts)) in self.factors.iter().zip(s.components()).enumerate() {
            if let Some(&z) = pts.iter().find(|&&x| g.eval(x) == 0) {
                // a zero of one factor gives a zero of g at every point
                // sharing that coordinate; report the first such point
                let mut p: Vec<Elem> = s.components().iter().map(|c| c[0]).collect();
                p[j] = z;
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Fails with [`Error::GeneratorVanishes`] if `g` has a zero on `S`.
    pub fn check_nonvanishing(&self, s: &CartesianSet) -> Result<()> {
        match self.find_zero_on(s)? {
            Some(p) => Err(Error::GeneratorVanishes(p)),
            None => Ok(()),
        }
    }
}

impl Polynomial for ProductPoly {
    fn field(&self) -> &Field {
        self.factors[0].field()
    }

    fn num_vars(&self) -> usize {
        self.m()
    }

    fn eval_at(&self, point: &[Elem]) -> Elem {
        let f = self.field();
        self.factors.iter().zip(point).fold(1, |acc, (g, &x)| f.mul(acc, g.eval(x)))
    }

    fn degree_in(&self, j: usize) -> Result<Option<usize>> {
        if j >= self.m() {
            return Err(Error::BadIndex { index: j, m: self.m() });
        }
        if self.factors.iter().any(UniPoly::is_zero) {
            return Ok(None);
        }
        Ok(self.factors[j].degree())
    }
}

/// `L(x) = Π_j L_j′(x_j)`.
pub fn big_l(s: &CartesianSet) -> ProductPoly {
    ProductPoly {
        factors: s.vanishing_polys().iter().map(UniPoly::derivative).collect(),
    }
}

/// Dense multivariate polynomial. Coefficient `(a_1, …, a_m)` with
/// `a_j < shape[j]` is stored row-major (first variable slowest).
#[derive(Clone, Debug)]
pub struct MultiPoly {
    field: Field,
    shape: Vec<usize>,
    coeffs: Vec<Elem>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.shape.len() != other.shape.len() {
            return false;
        }
        let shape: Vec<usize> =
            self.shape.iter().zip(&other.shape).map(|(a, b)| *a.max(b)).collect();
        let total: usize = shape.iter().product();
        (0..total).all(|i| {
            let a = unflatten(i, &shape);
            self.coeff(&a) == other.coeff(&a)
        })
    }
}

impl Eq for MultiPoly {}

fn unflatten(mut i: usize, shape: &[usize]) -> Vec<usize> {
    let mut a = vec![0; shape.len()];
    for j in (0..shape.len()).rev() {
        a[j] = i % shape[j];
        i /= shape[j];
    }
    a
}

fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for j in (0..shape.len().saturating_sub(1)).rev() {
        s[j] = s[j + 1] * shape[j + 1];
    }
    s
}

impl MultiPoly {
    /// `shape[j]` bounds the exponent of `x_j` (exclusive).
    pub fn new(field: &Field, shape: Vec<usize>, coeffs: Vec<Elem>) -> Result<MultiPoly> {
        let total: usize = shape.iter().product();
        if shape.is_empty() || total != coeffs.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for shape {shape:?}",
                coeffs.len()
            )));
        }
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(MultiPoly { field: field.clone(), shape, coeffs })
    }

    pub fn zero(field: &Field, m: usize) -> MultiPoly {
        MultiPoly { field: field.clone(), shape: vec![1; m], coeffs: vec![0] }
    }

    pub fn constant(field: &Field, m: usize, c: Elem) -> MultiPoly {
        MultiPoly { field: field.clone(), shape: vec![1; m], coeffs: vec![c] }
    }

    /// `c · x^a`.
    pub fn monomial(field: &Field, c: Elem, a: &[usize]) -> MultiPoly {
        let shape: Vec<usize> = a.iter().map(|&k| k + 1).collect();
        let mut p = MultiPoly {
            field: field.clone(),
            coeffs: vec![0; shape.iter().product()],
            shape,
        };
        p.set(a, c);
        p
    }

    /// Expands a product-form polynomial.
    pub fn from_product(g: &ProductPoly) -> MultiPoly {
        let field = g.field().clone();
        let mut out = MultiPoly::constant(&field, 0, 1);
        out.shape.clear();
        for factor in g.factors() {
            let c = if factor.is_zero() { vec![0] } else { factor.coeffs().to_vec() };
            let mut coeffs = Vec::with_capacity(out.coeffs.len() * c.len());
            for &a in &out.coeffs {
                coeffs.extend(c.iter().map(|&b| field.mul(a, b)));
            }
            out.shape.push(c.len());
            out.coeffs = coeffs;
        }
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn m(&self) -> usize {
        self.shape.len()
    }

    pub fn coeff(&self, a: &[usize]) -> Elem {
        if a.iter().zip(&self.shape).any(|(x, s)| x >= s) {
            return 0;
        }
        let st = strides(&self.shape);
        self.coeffs[a.iter().zip(&st).map(|(x, s)| x * s).sum::<usize>()]
    }

    fn set(&mut self, a: &[usize], c: Elem) {
        let st = strides(&self.shape);
        let i: usize = a.iter().zip(&st).map(|(x, s)| x * s).sum();
        self.coeffs[i] = c;
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, Elem)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (unflatten(i, &self.shape), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Elem> {
        let mut terms = self.terms();
        match terms.next() {
            None => Some(0),
            Some((a, c)) if a.iter().all(|&x| x == 0) => terms.next().is_none().then_some(c),
            _ => None,
        }
    }

    fn binary(&self, other: &MultiPoly, op: impl Fn(Elem, Elem) -> Elem) -> Result<MultiPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.m() != other.m() {
            return Err(Error::ShapeMismatch("different number of variables".into()));
        }
        let shape: Vec<usize> =
            self.shape.iter().zip(&other.shape).map(|(a, b)| *a.max(b)).collect();
        let total: usize = shape.iter().product();
        let coeffs = (0..total)
            .map(|i| {
                let a = unflatten(i, &shape);
                op(self.coeff(&a), other.coeff(&a))
            })
            .collect();
        Ok(MultiPoly { field: self.field.clone(), shape, coeffs })
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let f = self.field.clone();
        self.binary(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let f = self.field.clone();
        self.binary(other, |a, b| f.sub(a, b))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.m() != other.m() {
            return Err(Error::ShapeMismatch("different number of variables".into()));
        }
        let f = &self.field;
        let shape: Vec<usize> = self.shape.iter().zip(&other.shape).map(|(a, b)| a + b - 1).collect();
        let mut out = MultiPoly {
            field: f.clone(),
            coeffs: vec![0; shape.iter().product()],
            shape,
        };
        let st = strides(&out.shape);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let i: usize = a.iter().zip(&b).zip(&st).map(|((x, y), s)| (x + y) * s).sum();
                out.coeffs[i] = f.add(out.coeffs[i], f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Reduces every fiber along axis `j` modulo `modulus` (a univariate
    /// polynomial in `x_j`).
    fn reduce_axis(&self, j: usize, modulus: &UniPoly) -> MultiPoly {
        let nj = modulus.deg0();
        if self.shape[j] <= nj {
            return self.clone();
        }
        let mut shape = self.shape.clone();
        shape[j] = nj.max(1);
        let mut out = MultiPoly {
            field: self.field.clone(),
            coeffs: vec![0; shape.iter().product()],
            shape,
        };
        let mut outer_shape = self.shape.clone();
        outer_shape[j] = 1;
        let outer: usize = outer_shape.iter().product();
        for o in 0..outer {
            let mut a = unflatten(o, &outer_shape);
            let fiber: Vec<Elem> = (0..self.shape[j])
                .map(|k| {
                    a[j] = k;
                    self.coeff(&a)
                })
                .collect();
            let r = UniPoly::from_coeffs(&self.field, fiber).rem(modulus).expect("nonzero modulus");
            for (k, &c) in r.coeffs().iter().enumerate() {
                a[j] = k;
                out.set(&a, c);
            }
        }
        out
    }

    /// Evaluation of all points of `S`, in enumeration order.
    pub fn values_on(&self, s: &CartesianSet) -> Vec<Elem> {
        s.points().map(|p| self.eval_at(&p)).collect()
    }
}

impl Polynomial for MultiPoly {
    fn field(&self) -> &Field {
        &self.field
    }

    fn num_vars(&self) -> usize {
        self.m()
    }

    fn eval_at(&self, point: &[Elem]) -> Elem {
        let f = &self.field;
        let powers: Vec<Vec<Elem>> = self
            .shape
            .iter()
            .zip(point)
            .map(|(&n, &x)| {
                let mut v = Vec::with_capacity(n);
                let mut acc = 1;
                for _ in 0..n {
                    v.push(acc);
                    acc = f.mul(acc, x);
                }
                v
            })
            .collect();
        self.coeffs.iter().enumerate().fold(0, |acc, (i, &c)| {
            if c == 0 {
                return acc;
            }
            let a = unflatten(i, &self.shape);
            let mono = a.iter().enumerate().fold(c, |m, (j, &k)| f.mul(m, powers[j][k]));
            f.add(acc, mono)
        })
    }

    fn degree_in(&self, j: usize) -> Result<Option<usize>> {
        if j >= self.m() {
            return Err(Error::BadIndex { index: j, m: self.m() });
        }
        Ok(self.terms().map(|(a, _)| a[j]).max())
    }
}

/// The unique representative of `f` modulo `I(S) = (L_1, …, L_m)` with
/// `deg_{x_j} < n_j`, reducing variables in the order `0, 1, …, m−1`.
pub fn reduce_mod_ideal(f: &MultiPoly, s: &CartesianSet) -> Result<MultiPoly> {
    let order: Vec<usize> = (0..s.m()).collect();
    reduce_mod_ideal_in_order(f, s, &order)
}

/// As [`reduce_mod_ideal`] with an explicit variable order. Since the `L_j`
/// form a Gröbner basis the result does not depend on the order.
pub fn reduce_mod_ideal_in_order(
    f: &MultiPoly,
    s: &CartesianSet,
    order: &[usize],
) -> Result<MultiPoly> {
    s.check_field(f.field())?;
    s.check_arity(f.m())?;
    let ls = s.vanishing_polys();
    let mut out = f.clone();
    for &j in order {
        if j >= s.m() {
            return Err(Error::BadIndex { index: j, m: s.m() });
        }
        out = out.reduce_axis(j, &ls[j]);
    }
    Ok(out)
}

/// The reduced polynomial (`deg_{x_j} < n_j`) taking the given values on
/// the points of `S` in enumeration order. Interpolation is separable on a
/// grid, so it runs one univariate Lagrange pass per axis.
pub fn interpolate_on_grid(s: &CartesianSet, values: &[Elem]) -> Result<MultiPoly> {
    if values.len() != s.len() {
        return Err(Error::ShapeMismatch(format!("{} values for {} points", values.len(), s.len())));
    }
    let field = s.field();
    let shape = s.sizes();
    let mut data = values.to_vec();
    let st = strides(&shape);
    for j in 0..s.m() {
        let basis = lagrange_basis(field, s.component(j));
        let mut outer_shape = shape.clone();
        outer_shape[j] = 1;
        let outer: usize = outer_shape.iter().product();
        for o in 0..outer {
            let a = unflatten(o, &outer_shape);
            let base: usize = a.iter().zip(&st).map(|(x, s)| x * s).sum();
            let fiber: Vec<Elem> = (0..shape[j]).map(|k| data[base + k * st[j]]).collect();
            let c = combine_basis(field, &basis, &fiber);
            for k in 0..shape[j] {
                data[base + k * st[j]] = c.coeff(k);
            }
        }
    }
    MultiPoly::new(field, shape, data)
}

/// The unique reduced polynomial `r` with `r(s) = f1(s)/f2(s)` on `S`.
pub fn ratio_representative(
    f1: &dyn Polynomial,
    f2: &dyn Polynomial,
    s: &CartesianSet,
) -> Result<MultiPoly> {
    s.check_field(f1.field())?;
    s.check_field(f2.field())?;
    s.check_arity(f1.num_vars())?;
    s.check_arity(f2.num_vars())?;
    let field = s.field();
    let mut values = Vec::with_capacity(s.len());
    for p in s.points() {
        let d = f2.eval_at(&p);
        if d == 0 {
            return Err(Error::DenominatorVanishes(p));
        }
        values.push(field.div(f1.eval_at(&p), d));
    }
    interpolate_on_grid(s, &values)
}

//! Code families over a Cartesian grid: generalized Reed-Solomon codes and
//! their tensor products, monomial-Cartesian and augmented Cartesian codes,
//! multivariate Goppa codes, and the dual, hull, subfield-subcode and trace
//! operations relating them.
//!
//! Columns always follow the enumeration order of the [`CartesianSet`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldTower};
use crate::gfla::{min_distance, Distance, Matrix};
use crate::poly::{big_l, ratio_representative, vanishing_poly, CartesianSet, Polynomial, ProductPoly, UniPoly};

/// A linear code stored by its canonical generator: the reduced row echelon
/// form of any spanning set. Two codes are equal iff their generators are.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over {}", self.n(), self.k(), self.field())
    }
}

impl LinearCode {
    /// The row space of `m`.
    pub fn from_generator(m: &Matrix) -> LinearCode {
        LinearCode { gen: m.rref().0 }
    }

    /// The kernel of `h`.
    pub fn from_parity_check(h: &Matrix) -> LinearCode {
        LinearCode { gen: h.kernel().rref().0 }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { gen: Matrix::zeros(field, 0, n) }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode { gen: Matrix::identity(field, n) }
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (RREF) generator matrix, `k × n`.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity_check(&self) -> Matrix {
        self.gen.kernel()
    }

    pub fn is_zero(&self) -> bool {
        self.k() == 0
    }

    pub fn is_full(&self) -> bool {
        self.k() == self.n()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(&self.gen.kernel())
    }

    pub fn hull(&self) -> LinearCode {
        self.intersect(&self.dual()).expect("same shape")
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(LinearCode { gen: self.gen.rowspace_intersect(&other.gen)? })
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.gen.rowspace_contains(&other.gen)
    }

    pub fn contains_word(&self, w: &[Elem]) -> Result<bool> {
        let m = Matrix::from_rows(self.field(), self.n(), vec![w.to_vec()])?;
        self.gen.rowspace_contains(&m)
    }

    /// Minimum distance (see [`min_distance`]); `None` for the zero code.
    pub fn min_distance(&self, cap: Option<usize>) -> Option<Distance> {
        (!self.is_zero()).then(|| min_distance(&self.gen, cap).expect("nonzero code"))
    }

    /// The same code with columns permuted: column `i` of the result is
    /// column `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        LinearCode::from_generator(&self.gen.select_columns(perm))
    }
}

/// `(n, k, d)` with `d = None` for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<Distance>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{}, {}, {}]", self.n, self.k, d),
            None => write!(f, "[{}, {}]", self.n, self.k),
        }
    }
}

pub fn code_params(c: &LinearCode, cap: Option<usize>) -> CodeParams {
    CodeParams { n: c.n(), k: c.k(), d: c.min_distance(cap) }
}

/// A set of exponent tuples inside the box `Π {0, …, n_j − 1}`, kept in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSet {
    shape: Vec<usize>,
    members: Vec<Vec<usize>>,
}

fn box_tuples(lo: &[usize], hi: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (&l, &h) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|t| {
                (l..h).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

impl ExponentSet {
    pub fn new(shape: Vec<usize>, mut members: Vec<Vec<usize>>) -> Result<ExponentSet> {
        for a in &members {
            if a.len() != shape.len() || a.iter().zip(&shape).any(|(x, n)| x >= n) {
                return Err(Error::ExponentOutOfFootprint(a.clone()));
            }
        }
        members.sort();
        members.dedup();
        Ok(ExponentSet { shape, members })
    }

    /// Every tuple of the footprint.
    pub fn full(shape: &[usize]) -> ExponentSet {
        ExponentSet { shape: shape.to_vec(), members: box_tuples(&vec![0; shape.len()], shape) }
    }

    /// `Π {0, …, k_j − 1}`.
    pub fn lower_box(shape: &[usize], kvec: &[usize]) -> Result<ExponentSet> {
        check_kvec(shape, kvec)?;
        Ok(ExponentSet { shape: shape.to_vec(), members: box_tuples(&vec![0; shape.len()], kvec) })
    }

    /// The footprint minus its top corner `Π {k_j, …, n_j − 1}`.
    pub fn augmented_cartesian(shape: &[usize], kvec: &[usize]) -> Result<ExponentSet> {
        check_kvec(shape, kvec)?;
        let members = box_tuples(&vec![0; shape.len()], shape)
            .into_iter()
            .filter(|a| a.iter().zip(kvec).any(|(x, k)| x < k))
            .collect();
        Ok(ExponentSet { shape: shape.to_vec(), members })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn check_kvec(shape: &[usize], kvec: &[usize]) -> Result<()> {
    if shape.len() != kvec.len() {
        return Err(Error::BadDimension(format!("{} dimensions for {} coordinates", kvec.len(), shape.len())));
    }
    if let Some(j) = (0..shape.len()).find(|&j| kvec[j] > shape[j]) {
        return Err(Error::BadDimension(format!("k_{} = {} exceeds n_{} = {}", j + 1, kvec[j], j + 1, shape[j])));
    }
    Ok(())
}

/// Generator rows `(g(s)^{-1} s^a)_s` for `a < k`, not reduced.
fn grs_matrix(field: &Field, points: &[Elem], k: usize, g: &UniPoly) -> Result<Matrix> {
    if g.field() != field {
        return Err(Error::FieldMismatch);
    }
    vanishing_poly(field, points)?;
    let n = points.len();
    if k > n {
        return Err(Error::BadDimension(format!("k = {k} exceeds n = {n}")));
    }
    let mut weights = Vec::with_capacity(n);
    for &s in points {
        let v = g.eval(s);
        if v == 0 {
            return Err(Error::GeneratorVanishes(vec![s]));
        }
        weights.push(field.inv(v));
    }
    let mut data = Vec::with_capacity(k * n);
    let mut row = weights;
    for _ in 0..k {
        data.extend_from_slice(&row);
        for (x, &s) in row.iter_mut().zip(points) {
            *x = field.mul(*x, s);
        }
    }
    Ok(Matrix::from_raw(field, k, n, data))
}

/// `GRS(S_j, k, g_j)`.
pub fn grs(field: &Field, points: &[Elem], k: usize, g: &UniPoly) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&grs_matrix(field, points, k, g)?))
}

fn check_product(s: &CartesianSet, g: &ProductPoly) -> Result<()> {
    if g.field() != s.field() {
        return Err(Error::FieldMismatch);
    }
    if g.m() != s.m() {
        return Err(Error::ShapeMismatch(format!("{} factors for {} coordinates", g.m(), s.m())));
    }
    g.check_nonvanishing(s)
}

/// Kronecker product of the factor GRS generators.
pub fn tensor_grs_matrix(s: &CartesianSet, kvec: &[usize], g: &ProductPoly) -> Result<Matrix> {
    check_product(s, g)?;
    check_kvec(&s.sizes(), kvec)?;
    let field = s.field();
    let mut acc = Matrix::identity(field, 1);
    for j in 0..s.m() {
        acc = acc.kronecker(&grs_matrix(field, s.component(j), kvec[j], g.factor(j))?)?;
    }
    Ok(acc)
}

/// `T(S, k, g)`, the tensor product of `GRS(S_j, k_j, g_j)`.
pub fn tensor_grs(s: &CartesianSet, kvec: &[usize], g: &ProductPoly) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&tensor_grs_matrix(s, kvec, g)?))
}

/// `T(S, g) = T(S, (deg g_1, …, deg g_m), g)`.
pub fn tensor_goppa(s: &CartesianSet, g: &ProductPoly) -> Result<LinearCode> {
    tensor_grs(s, &g.degrees(), g)
}

/// `C(S, A, h)`: rows `(h(s)^{-1} s^a)_s` for `a ∈ A`.
pub fn monomial_cartesian(s: &CartesianSet, a: &ExponentSet, h: &dyn Polynomial) -> Result<LinearCode> {
    if h.field() != s.field() {
        return Err(Error::FieldMismatch);
    }
    if h.num_vars() != s.m() {
        return Err(Error::ShapeMismatch(format!("{} variables for {} coordinates", h.num_vars(), s.m())));
    }
    if a.shape() != s.sizes() {
        return Err(Error::ShapeMismatch(format!("exponent box {:?} for grid {:?}", a.shape(), s.sizes())));
    }
    let field = s.field();
    let n = s.len();
    let mut weights = Vec::with_capacity(n);
    for p in s.points() {
        let v = h.eval_at(&p);
        if v == 0 {
            return Err(Error::DenominatorVanishes(p));
        }
        weights.push(field.inv(v));
    }
    // powers[j][i][a] = S_j[i]^a
    let powers: Vec<Vec<Vec<Elem>>> = s
        .components()
        .iter()
        .map(|c| {
            c.iter()
                .map(|&x| (0..c.len()).scan(1, |acc, _| {
                    let v = *acc;
                    *acc = field.mul(*acc, x);
                    Some(v)
                }).collect())
                .collect()
        })
        .collect();
    let idx: Vec<Vec<usize>> = (0..n).map(|i| s.index_tuple(i)).collect();
    let mut data = Vec::with_capacity(a.len() * n);
    for e in a.members() {
        for (i, t) in idx.iter().enumerate() {
            let v = t.iter().enumerate().fold(weights[i], |acc, (j, &ti)| field.mul(acc, powers[j][ti][e[j]]));
            data.push(v);
        }
    }
    Ok(LinearCode::from_generator(&Matrix::from_raw(field, a.len(), n, data)))
}

/// `ACar(S, k, h)`, the monomial-Cartesian code of the footprint minus the
/// corner `Π {k_j, …, n_j − 1}`.
pub fn acar(s: &CartesianSet, kvec: &[usize], h: &dyn Polynomial) -> Result<LinearCode> {
    let a = ExponentSet::augmented_cartesian(&s.sizes(), kvec)?;
    monomial_cartesian(s, &a, h)
}

/// `ACar(S, g) = ACar(S, (n_j − deg g_j), L/g)`.
pub fn acar_g(s: &CartesianSet, g: &ProductPoly) -> Result<LinearCode> {
    check_product(s, g)?;
    let sizes = s.sizes();
    let deg = g.degrees();
    let mut kvec = Vec::with_capacity(s.m());
    for j in 0..s.m() {
        if deg[j] > sizes[j] {
            return Err(Error::BadDimension(format!("deg g_{} = {} exceeds n_{} = {}", j + 1, deg[j], j + 1, sizes[j])));
        }
        kvec.push(sizes[j] - deg[j]);
    }
    let weight = ratio_representative(&big_l(s), g, s)?;
    acar(s, &kvec, &weight)
}

fn check_tower(tower: &FieldTower, field: &Field) -> Result<()> {
    if tower.ext() == field {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

/// Replaces every row of a matrix over `F_{q^t}` by its `t` coordinate rows
/// over `F_q`.
fn expand_rows(tower: &FieldTower, m: &Matrix) -> Matrix {
    let t = tower.degree();
    let n = m.cols();
    let mut data = vec![0; m.rows() * t * n];
    for r in 0..m.rows() {
        for (c, &x) in m.row(r).iter().enumerate() {
            for (l, &y) in tower.basis_expand(x).iter().enumerate() {
                data[(r * t + l) * n + c] = y;
            }
        }
    }
    Matrix::from_raw(tower.base(), m.rows() * t, n, data)
}

/// `Γ(S, g) = {c ∈ F_q^n : T cᵀ = 0}` with `T` a generator of `T(S, g)`.
///
/// A factor with `deg g_j > n_j` contributes the full space `F^{n_j}`, so
/// that products and lcms of admissible weights stay usable.
pub fn goppa_parity(tower: &FieldTower, s: &CartesianSet, g: &ProductPoly) -> Result<LinearCode> {
    check_tower(tower, s.field())?;
    let kvec: Vec<usize> = g.degrees().iter().zip(s.sizes()).map(|(&d, n)| d.min(n)).collect();
    let t = tensor_grs_matrix(s, &kvec, g)?;
    Ok(LinearCode::from_parity_check(&expand_rows(tower, &t)))
}

/// `Γ(S, g)` built as the subfield subcode of `ACar(S, g)`.
pub fn goppa_subfield(tower: &FieldTower, s: &CartesianSet, g: &ProductPoly) -> Result<LinearCode> {
    subfield_subcode(tower, &acar_g(s, g)?)
}

/// `C_q = C ∩ F_q^n`, via the base-field expansion of a parity check.
pub fn subfield_subcode(tower: &FieldTower, c: &LinearCode) -> Result<LinearCode> {
    check_tower(tower, c.field())?;
    Ok(LinearCode::from_parity_check(&expand_rows(tower, &c.parity_check())))
}

/// `tr(C)`: the `F_q`-span of `tr(b · c)` over generator rows `c` and basis
/// elements `b`.
pub fn trace_code(tower: &FieldTower, c: &LinearCode) -> Result<LinearCode> {
    check_tower(tower, c.field())?;
    let ext = tower.ext();
    let n = c.n();
    let mut data = Vec::with_capacity(c.k() * tower.degree() * n);
    for r in 0..c.k() {
        for &b in tower.basis() {
            data.extend(c.generator().row(r).iter().map(|&x| tower.trace(ext.mul(b, x))));
        }
    }
    let rows = data.len() / n.max(1);
    Ok(LinearCode::from_generator(&Matrix::from_raw(tower.base(), rows, n, data)))
}

/// The code over `F_{q^t}` spanned by a code over `F_q`.
pub fn extend_scalars(tower: &FieldTower, c: &LinearCode) -> Result<LinearCode> {
    if tower.base() != c.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(LinearCode::from_generator(&c.generator().map(tower.ext(), |x| tower.embed(x))))
}

//! Dense linear algebra over finite fields and minimum-distance search.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Above this many codewords exhaustive enumeration is never attempted.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 22;

/// Column-subset count at which the dependency search hands over to
/// enumeration (when enumeration is affordable) or gives up with a bound.
const SUBSET_LIMIT: u128 = 1 << 26;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn shape_err(what: &str, a: (usize, usize), b: (usize, usize)) -> Error {
    Error::ShapeMismatch(format!("{what}: {}x{} vs {}x{}", a.0, a.1, b.0, b.1))
}

/// `dst += c·src`.
fn axpy(field: &Field, dst: &mut [Elem], src: &[Elem], c: Elem) {
    if c == 0 {
        return;
    }
    if field.p() == 2 && c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = field.add(*d, field.mul(c, s));
        }
    }
}

fn scale_in_place(field: &Field, v: &mut [Elem], c: Elem) {
    if c != 1 {
        for x in v.iter_mut() {
            *x = field.mul(*x, c);
        }
    }
}

pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &x in &data {
            field.check(x)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("row of length {} in a {cols}-column matrix", bad.len())));
        }
        let r = rows.len();
        Matrix::new(field, r, cols, rows.concat())
    }

    pub(crate) fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix::from_raw(field, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Applies `f` entrywise, producing a matrix over `field`.
    pub fn map(&self, field: &Field, f: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix::from_raw(field, self.rows, self.cols, self.data.iter().map(|&x| f(x)).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(shape_err("product", (self.rows, self.cols), (other.rows, other.cols)));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                axpy(&self.field, dst, other.row(k), self.get(r, k));
            }
        }
        Ok(out)
    }

    /// `A ⊗ B`, block `(i, j)` equal to `a_ij · B`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] =
                            self.field.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(shape_err("vstack", (self.rows, self.cols), (other.rows, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix::from_raw(&self.field, self.rows + other.rows, self.cols, data))
    }

    /// Columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix::from_raw(&self.field, self.rows, cols.len(), data)
    }

    /// Reduced row echelon form with zero rows removed, and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let n = self.cols;
        let mut rows: Vec<Vec<Elem>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..n {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(top, p);
            let inv = f.inv(rows[top][c]);
            scale_in_place(f, &mut rows[top], inv);
            let pivot_row = std::mem::take(&mut rows[top]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r != top && row[c] != 0 {
                    let coef = f.neg(row[c]);
                    axpy(f, row, &pivot_row, coef);
                }
            }
            rows[top] = pivot_row;
            pivots.push(c);
            top += 1;
        }
        rows.truncate(top);
        let data = rows.concat();
        (Matrix::from_raw(f, top, n, data), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : M xᵀ = 0}`.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut data = vec![0; free.len() * n];
        for (i, &fc) in free.iter().enumerate() {
            let v = &mut data[i * n..(i + 1) * n];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(ri, fc));
            }
        }
        Matrix::from_raw(f, free.len(), n, data)
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(shape_err("row spaces", (self.rows, self.cols), (other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn rowspace_equal(&self, other: &Matrix) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.rref().0 == other.rref().0)
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn rowspace_contains(&self, other: &Matrix) -> Result<bool> {
        self.check_compatible(other)?;
        let k = self.rank();
        Ok(self.vstack(other)?.rank() == k)
    }

    /// Basis of `rowspace(A) ∩ rowspace(B)`, computed as the kernel of the
    /// stacked parity checks.
    pub fn rowspace_intersect(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let stacked = self.kernel().vstack(&other.kernel())?;
        Ok(stacked.kernel().rref().0)
    }

    pub fn rowspace_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.vstack(other)?.rref().0)
    }

    /// `v · M`.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![0; self.cols];
        for (r, &c) in v.iter().enumerate() {
            axpy(&self.field, &mut out, self.row(r), c);
        }
        out
    }
}

/// A minimum distance, or a verified lower bound when `exact` is false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Distance {
    pub value: usize,
    pub exact: bool,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            write!(f, ">={}", self.value)
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn codeword_count(field: &Field, k: usize) -> Option<u64> {
    (field.order() as u64).checked_pow(k as u32)
}

/// Minimum weight of a nonzero word in the row space of `g`.
///
/// Searches `w = 1, 2, …` for `w` linearly dependent columns of a parity
/// check matrix. When the number of column subsets grows too large the
/// search switches to codeword enumeration if `q^k ≤ 2^22`, and otherwise
/// stops with the lower bound reached so far. With `cap = Some(c)` the
/// search stops after weight `c` and reports `c + 1` as a bound.
pub fn min_distance(g: &Matrix, cap: Option<usize>) -> Result<Distance> {
    let (gen, _) = g.rref();
    let k = gen.rows();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let n = gen.cols();
    let h = gen.kernel();
    let r = h.rows();
    let columns: Vec<Vec<Elem>> = h.transpose().row_vecs();
    let capped = |d: usize| match cap {
        Some(c) if d > c => Distance { value: c + 1, exact: false },
        _ => Distance { value: d, exact: true },
    };
    // every r + 1 columns of H are dependent (Singleton)
    for w in 1..=r + 1 {
        if cap.is_some_and(|c| w > c) {
            return Ok(Distance { value: w, exact: false });
        }
        if binomial(n, w) > SUBSET_LIMIT {
            if codeword_count(g.field(), k).is_some_and(|c| c <= EXHAUSTIVE_LIMIT) {
                return Ok(capped(enumerate_min_weight(&gen)));
            }
            return Ok(Distance { value: w, exact: false });
        }
        if has_dependent_subset(h.field(), &columns, r, w) {
            return Ok(Distance { value: w, exact: true });
        }
    }
    unreachable!("r + 1 columns of an r-row matrix are always dependent")
}

/// Minimum distance by enumerating every codeword. Fails with
/// [`Error::PreconditionViolated`] when `q^k > 2^22`.
pub fn min_distance_exhaustive(g: &Matrix) -> Result<usize> {
    let (gen, _) = g.rref();
    if gen.rows() == 0 {
        return Err(Error::ZeroCode);
    }
    match codeword_count(g.field(), gen.rows()) {
        Some(c) if c <= EXHAUSTIVE_LIMIT => Ok(enumerate_min_weight(&gen)),
        _ => Err(Error::PreconditionViolated(format!(
            "{}^{} codewords is too many to enumerate",
            g.field().order(),
            gen.rows()
        ))),
    }
}

/// Echelon basis grown one column at a time.
struct Echelon<'a> {
    field: &'a Field,
    basis: Vec<(usize, Vec<Elem>)>,
}

impl<'a> Echelon<'a> {
    /// Adds `v`; returns false (leaving the basis unchanged) if `v` is in
    /// the span.
    fn push(&mut self, v: &[Elem]) -> bool {
        let mut v = v.to_vec();
        for (piv, b) in &self.basis {
            let c = v[*piv];
            if c != 0 {
                axpy(self.field, &mut v, b, self.field.neg(c));
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let inv = self.field.inv(v[piv]);
                scale_in_place(self.field, &mut v, inv);
                self.basis.push((piv, v));
                true
            }
        }
    }

    fn pop(&mut self) {
        self.basis.pop();
    }
}

/// Whether some `w` of the columns are linearly dependent, given that every
/// `w − 1` of them are independent.
fn has_dependent_subset(field: &Field, columns: &[Vec<Elem>], r: usize, w: usize) -> bool {
    let n = columns.len();
    if w == 1 {
        return columns.iter().any(|c| c.iter().all(|&x| x == 0));
    }
    if w > r {
        return n >= w;
    }
    let found = AtomicBool::new(false);
    (0..n).into_par_iter().for_each(|first| {
        if found.load(Ordering::Relaxed) {
            return;
        }
        let mut ech = Echelon { field, basis: Vec::with_capacity(w) };
        if ech.push(&columns[first]) && dfs(&mut ech, columns, first + 1, w - 1, &found) {
            found.store(true, Ordering::Relaxed);
        }
    });
    found.into_inner()
}

/// Extends the independent set held by `ech` by `remaining` more columns
/// from `start..`; true if the last one can be chosen dependent.
fn dfs(ech: &mut Echelon<'_>, columns: &[Vec<Elem>], start: usize, remaining: usize, found: &AtomicBool) -> bool {
    let n = columns.len();
    if remaining == 1 {
        return (start..n).any(|c| {
            let dependent = !ech.push(&columns[c]);
            if !dependent {
                ech.pop();
            }
            dependent
        });
    }
    for c in start..=n.saturating_sub(remaining) {
        if found.load(Ordering::Relaxed) {
            return false;
        }
        // all smaller subsets are independent, so this push succeeds
        if ech.push(&columns[c]) {
            let hit = dfs(ech, columns, c + 1, remaining - 1, found);
            ech.pop();
            if hit {
                return true;
            }
        }
    }
    false
}

/// Enumerates the F_p-span of `{β_l · row_i}` with a p-ary odometer so each
/// step costs one vector addition. The top digits are split across workers.
fn enumerate_min_weight(gen: &Matrix) -> usize {
    let field = gen.field();
    let p = field.p();
    let n = gen.cols();
    let mut gens: Vec<Vec<Elem>> = Vec::new();
    for r in 0..gen.rows() {
        let mut beta = 1;
        for _ in 0..field.e() {
            gens.push(gen.row(r).iter().map(|&x| field.mul(x, beta)).collect());
            beta *= p;
        }
    }
    let digits = gens.len();
    let mut split = 0;
    while split < digits && (p as u64).pow(split as u32 + 1) <= 4096 {
        split += 1;
    }
    let (low, high) = gens.split_at(digits - split);
    let chunks = (p as usize).pow(split as u32);
    let best = AtomicUsize::new(n);
    (0..chunks).into_par_iter().for_each(|chunk| {
        let mut word = vec![0; n];
        let mut c = chunk;
        for h in high {
            axpy(field, &mut word, h, field.from_int((c % p as usize) as u64));
            c /= p as usize;
        }
        let mut local = best.load(Ordering::Relaxed);
        if chunk != 0 {
            local = local.min(weight(&word));
        }
        let mut odo = vec![0u32; low.len()];
        'outer: loop {
            let mut i = 0;
            loop {
                if i == low.len() {
                    break 'outer;
                }
                axpy(field, &mut word, &low[i], 1);
                odo[i] += 1;
                if odo[i] < p {
                    break;
                }
                odo[i] = 0;
                i += 1;
            }
            let w = weight(&word);
            if w < local && w > 0 {
                local = w;
                if local == 1 {
                    break;
                }
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    best.into_inner()
}

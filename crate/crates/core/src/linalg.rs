//! Exact linear algebra over the rationals: sparse vectors and matrices, incrementally grown
//! subspaces in semi-echelon form, and dense kernels for small blocks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

pub fn axpy(y: &mut SparseVec, a: &Q, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (&i, v) in x {
        let e = y.entry(i).or_insert_with(Q::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(&i);
        }
    }
}

pub fn unit(i: usize) -> SparseVec {
    SparseVec::from([(i, Q::one())])
}

/// Column-major sparse matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, columns: (0..n).map(unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.keys().all(|&i| i < rows)));
        Self { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        if v.is_zero() {
            self.columns[j].remove(&i);
        } else {
            self.columns[j].insert(i, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.columns[j].get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_empty)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, a) in v {
            axpy(&mut out, a, &self.columns[j]);
        }
        out
    }

    /// `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        Self { rows: self.rows, columns: other.columns.iter().map(|c| self.apply(c)).collect() }
    }

    /// `self + a * other`.
    pub fn add_scaled(&self, a: &Q, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "dimension mismatch");
        let mut out = self.clone();
        for (c, o) in out.columns.iter_mut().zip(&other.columns) {
            axpy(c, a, o);
        }
        out
    }

    /// Kronecker product; basis vector `(i, j)` of the result has index `i * other.cols() + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut columns = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.columns {
            for b in &other.columns {
                let mut c = SparseVec::new();
                for (&i, x) in a {
                    for (&j, y) in b {
                        c.insert(i * other.rows + j, x * y);
                    }
                }
                columns.push(c);
            }
        }
        Self { rows: self.rows * other.rows, columns }
    }

    /// Dense block with the given rows and columns.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j)).collect())
            .collect()
    }
}

/// A subspace spanned by rows in semi-echelon form: each row is normalized to 1 at its
/// pivot, which is its smallest index, and all pivots are distinct.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: Vec<SparseVec>,
    by_pivot: BTreeMap<usize, usize>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Rows in insertion order.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_pivot.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.by_pivot.contains_key(&i)
    }

    /// Reduces `v` modulo the subspace, returning the residue (zero on every pivot) and the
    /// coefficients subtracted, indexed by row.
    pub fn reduce_with_coords(&self, v: &SparseVec) -> (SparseVec, BTreeMap<usize, Q>) {
        let mut r = v.clone();
        let mut coords = BTreeMap::new();
        for (&p, &row) in &self.by_pivot {
            if let Some(c) = r.get(&p).cloned() {
                axpy(&mut r, &-c.clone(), &self.rows[row]);
                coords.insert(row, c);
            }
        }
        (r, coords)
    }

    /// Canonical representative of `v` modulo the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_with_coords(v).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the row basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<BTreeMap<usize, Q>> {
        let (r, c) = self.reduce_with_coords(v);
        r.is_empty().then_some(c)
    }

    /// Adds `v` to the span. Returns the new normalized row, or `None` if `v` was dependent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let mut r = self.reduce(v);
        let (&pivot, lead) = r.iter().next()?;
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        self.by_pivot.insert(pivot, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }
}

/// Basis of the kernel of a dense matrix with `cols` columns, one vector per free column,
/// each normalized to 1 at its free column.
pub fn kernel(matrix: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = matrix.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(found) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, found);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[row].clone();
        for (r, target) in a.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let f = target[col].clone();
                for (x, p) in target.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivot_cols.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(matrix: &[Vec<Q>], cols: usize) -> usize {
    cols - kernel(matrix, cols).len()
}

/// Renders a rational as `a` or `a/b`.
pub fn q_to_string(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// `c * label` terms joined into a readable linear combination.
pub fn render_combination<'a>(terms: impl IntoIterator<Item = (&'a Q, &'a str)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&q_to_string(&mag));
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

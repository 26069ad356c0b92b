//! Exact dense linear algebra over big rationals and big integers.
//!
//! Matrices in this crate are tiny (posets of interest have at most a dozen
//! points), so the implementation favors exactness and clarity over
//! asymptotics: plain Gauss-Jordan elimination, canonical reduced bases, no
//! fraction-free tricks. Floating point never appears here; every strict
//! comparison downstream rests on exact signs computed from these types.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Exact rational scalar used by the explicit subspace model.
pub type Rat = BigRational;
/// Exact integer scalar used by incidence matrices and bilinear forms.
pub type Int = BigInt;

/// Rational from a machine integer, for fixtures and small constructions.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Integer scalar from a machine integer.
pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.at(i, j) + a * rhs.at(k, j);
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            let Some(pivot_row) = (lead..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pivot_row);
            let inv = self.at(lead, col).clone();
            for j in col..self.cols {
                let v = self.at(lead, j) / &inv;
                *self.at_mut(lead, j) = v;
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = self.at(r, j) - &factor * self.at(lead, j);
                        *self.at_mut(r, j) = v;
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Solves self . x = b exactly; None when inconsistent. Free variables
    /// are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RatMat::zero(self.rows, self.cols + 1);
        for (i, bv) in b.iter().enumerate() {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = bv.clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of { v : self * v = 0 }, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                vec[c] = -m.at(r, free).clone();
            }
            basis.push(vec);
        }
        basis
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "{:?}",
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            )?;
        }
        Ok(())
    }
}

/// A linear subspace of k^ambient, stored as a reduced row-echelon basis.
///
/// The basis is canonical, so `==` decides subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RatMat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMat::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMat::identity(ambient),
        }
    }

    /// Span of the given vectors inside k^ambient.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length mismatch"
        );
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = RatMat::from_rows(vectors.to_vec());
        let pivots = m.rref();
        let rank = pivots.len();
        if rank == 0 {
            return Subspace::zero(ambient);
        }
        let mut rows = Vec::with_capacity(rank);
        for r in 0..rank {
            rows.push(m.row(r).to_vec());
        }
        Subspace {
            ambient,
            basis: RatMat::from_rows(rows),
        }
    }

    pub fn span_ints(ambient: usize, vectors: &[Vec<i64>]) -> Self {
        let vecs: Vec<Vec<Rat>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| rat(x)).collect())
            .collect();
        Subspace::span(ambient, &vecs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.dim())
            .map(|r| self.basis.row(r).to_vec())
            .collect()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        let mut m = RatMat::from_rows(rows);
        m.rref().len() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.basis_rows().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(self.ambient, &rows)
    }

    /// Intersection via the kernel of [Aᵀ | −Bᵀ]: solutions x,y with Aᵀx = Bᵀy
    /// parameterize common vectors.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut stacked = RatMat::zero(self.ambient, a + b);
        for (r, row) in self.basis_rows().iter().enumerate() {
            for (d, val) in row.iter().enumerate() {
                *stacked.at_mut(d, r) = val.clone();
            }
        }
        for (r, row) in other.basis_rows().iter().enumerate() {
            for (d, val) in row.iter().enumerate() {
                *stacked.at_mut(d, a + r) = -val.clone();
            }
        }
        let kernel = stacked.kernel_basis();
        let vectors: Vec<Vec<Rat>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (r, row) in self.basis_rows().iter().enumerate() {
                    if k[r].is_zero() {
                        continue;
                    }
                    for d in 0..self.ambient {
                        v[d] += &k[r] * &row[d];
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Image under the coordinate projection that keeps `keep` and zeroes the
    /// rest; the ambient space is unchanged.
    pub fn project_zeroing(&self, keep: &[bool]) -> Subspace {
        assert_eq!(keep.len(), self.ambient);
        let vectors: Vec<Vec<Rat>> = self
            .basis_rows()
            .iter()
            .map(|row| {
                row.iter()
                    .zip(keep)
                    .map(|(v, &k)| if k { v.clone() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// True when every basis vector is zero outside `allowed`.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        assert_eq!(allowed.len(), self.ambient);
        self.basis_rows()
            .iter()
            .all(|row| row.iter().zip(allowed).all(|(v, &ok)| ok || v.is_zero()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of k^{})", self.dim(), self.ambient)
    }
}

/// Dense row-major matrix over arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&v| int(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.at(i, j) + a * rhs.at(k, j);
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.at(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Exact inverse of an upper-unitriangular matrix by back-substitution.
    ///
    /// Column k of the inverse solves U v = e_k top-down from row k; the unit
    /// diagonal keeps every intermediate value an integer.
    pub fn invert_upper_unitriangular(&self) -> IntMat {
        assert_eq!(self.rows, self.cols, "square required");
        let n = self.rows;
        for i in 0..n {
            assert!(self.at(i, i).is_one(), "unit diagonal required");
            for j in 0..i {
                assert!(self.at(i, j).is_zero(), "upper triangular required");
            }
        }
        let mut inv = IntMat::zero(n, n);
        for k in 0..n {
            *inv.at_mut(k, k) = Int::one();
            for i in (0..k).rev() {
                let mut acc = Int::zero();
                for j in i + 1..=k {
                    acc += self.at(i, j) * inv.at(j, k);
                }
                *inv.at_mut(i, k) = -acc;
            }
        }
        inv
    }

    /// Exact a · M · bᵀ for integer row vectors.
    pub fn apply_bilinear(&self, a: &[i64], b: &[i64]) -> Int {
        assert_eq!(a.len(), self.rows);
        assert_eq!(b.len(), self.cols);
        let mut acc = Int::zero();
        for (i, &av) in a.iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (j, &bv) in b.iter().enumerate() {
                if bv == 0 {
                    continue;
                }
                acc += int(av) * self.at(i, j) * int(bv);
            }
        }
        acc
    }

    pub fn row_i64(&self, i: usize) -> Vec<i64> {
        (0..self.cols)
            .map(|j| i64::try_from(self.at(i, j)).expect("entry fits in i64"))
            .collect()
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

//! Labelled exact matrices over `Z` and `Z[G]`.
//!
//! Row and column labels travel with every operation. Products require the
//! inner label lists to agree, so a Kronecker product's `(vertex, element)`
//! labels can only be multiplied against matrices indexed the same way.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::label::Label;
use crate::poly::ReciprocalCharPoly;
use crate::ring::GroupRingElement;

/// Coefficient domain of a [`Matrix`]. `Ctx` carries whatever is needed to
/// build a zero or a one (nothing for `Z`, the group for `Z[G]`).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn is_nonneg_entry(&self) -> bool;
    fn belongs_to(&self, ctx: &Self::Ctx) -> bool;
}

impl Scalar for BigInt {
    type Ctx = ();

    fn zero_in(_: &()) -> Self {
        BigInt::zero()
    }
    fn one_in(_: &()) -> Self {
        BigInt::one()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_entry(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_nonneg_entry(&self) -> bool {
        !self.is_negative()
    }
    fn belongs_to(&self, _: &()) -> bool {
        true
    }
}

impl Scalar for GroupRingElement {
    type Ctx = FiniteGroup;

    fn zero_in(ctx: &FiniteGroup) -> Self {
        GroupRingElement::zero(ctx)
    }
    fn one_in(ctx: &FiniteGroup) -> Self {
        GroupRingElement::one(ctx)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.add_assign_unchecked(rhs);
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_unchecked(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn is_zero_entry(&self) -> bool {
        GroupRingElement::is_zero(self)
    }
    fn is_nonneg_entry(&self) -> bool {
        GroupRingElement::is_nonnegative(self)
    }
    fn belongs_to(&self, ctx: &FiniteGroup) -> bool {
        self.group() == ctx
    }
}

/// A dense row-major matrix with labelled rows and columns.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    ctx: T::Ctx,
    rows: Vec<Label>,
    cols: Vec<Label>,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type GroupRingMatrix = Matrix<GroupRingElement>;

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows(), self.ncols())?;
        for i in 0..self.nrows() {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}: [{}]", self.rows[i], row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn from_parts(ctx: T::Ctx, rows: Vec<Label>, cols: Vec<Label>, data: Vec<T>) -> Result<Self> {
        if data.len() != rows.len() * cols.len() {
            return Err(Error::LabelMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows.len(),
                cols.len()
            )));
        }
        if data.iter().any(|x| !x.belongs_to(&ctx)) {
            return Err(Error::GroupMismatch);
        }
        Ok(Matrix { ctx, rows, cols, data })
    }

    pub fn zeros_in(ctx: &T::Ctx, rows: Vec<Label>, cols: Vec<Label>) -> Self {
        let data = vec![T::zero_in(ctx); rows.len() * cols.len()];
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn identity_in(ctx: &T::Ctx, labels: Vec<Label>) -> Self {
        let n = labels.len();
        let mut m = Self::zeros_in(ctx, labels.clone(), labels);
        for i in 0..n {
            m.data[i * n + i] = T::one_in(ctx);
        }
        m
    }

    /// Builds a matrix from a closure on indices.
    pub fn from_fn(
        ctx: &T::Ctx,
        rows: Vec<Label>,
        cols: Vec<Label>,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let (m, n) = (rows.len(), cols.len());
        let data = (0..m * n).map(|k| f(k / n, k % n)).collect();
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols() && self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<()> {
        if self.nrows() != self.ncols() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        if self.rows != self.cols {
            return Err(Error::LabelMismatch("row and column labels differ".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.ncols() + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let n = self.ncols();
        self.data[i * n + j] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        let n = self.ncols();
        &mut self.data[i * n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.ncols();
        &self.data[i * n..(i + 1) * n]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(Scalar::is_nonneg_entry)
    }

    /// First negative entry in row-major order.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        let n = self.ncols();
        self.data
            .iter()
            .position(|x| !x.is_nonneg_entry())
            .map(|k| (k / n, k % n))
    }

    pub fn require_nonnegative(&self) -> Result<()> {
        match self.first_negative() {
            None => Ok(()),
            Some((row, col)) => Err(Error::NegativeEntry { row, col }),
        }
    }

    pub fn map<U: Scalar>(&self, ctx: &U::Ctx, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            ctx: ctx.clone(),
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn with_labels(mut self, rows: Vec<Label>, cols: Vec<Label>) -> Result<Self> {
        if rows.len() != self.nrows() || cols.len() != self.ncols() {
            return Err(Error::LabelMismatch("relabelling changes the shape".into()));
        }
        self.rows = rows;
        self.cols = cols;
        Ok(self)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols.clone(), self.rows.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.ctx != rhs.ctx {
            return Err(Error::GroupMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::LabelMismatch(format!(
                "cannot multiply {}x{} by {}x{}: inner labels differ",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let (m, k, n) = (self.nrows(), self.ncols(), rhs.ncols());
        let mut out = Self::zeros_in(&self.ctx, self.rows.clone(), rhs.cols.clone());
        for i in 0..m {
            for l in 0..k {
                let a = self.get(i, l);
                if a.is_zero_entry() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(l, j);
                    if b.is_zero_entry() {
                        continue;
                    }
                    out.data[i * n + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            a.add_assign_ref(&b.neg_ref());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map(&self.ctx, Scalar::neg_ref)
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.ctx != rhs.ctx {
            return Err(Error::GroupMismatch);
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::LabelMismatch("operands have different labels".into()));
        }
        Ok(())
    }

    pub fn identity_like(&self) -> Self {
        Self::identity_in(&self.ctx, self.rows.clone())
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut result = self.identity_like();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        let mut t = T::zero_in(&self.ctx);
        for i in 0..self.nrows() {
            t.add_assign_ref(self.get(i, i));
        }
        Ok(t)
    }

    pub fn is_identity(&self) -> bool {
        let one = T::one_in(&self.ctx);
        let zero = T::zero_in(&self.ctx);
        self.nrows() == self.ncols()
            && (0..self.nrows())
                .all(|i| (0..self.ncols()).all(|j| *self.get(i, j) == if i == j { one.clone() } else { zero.clone() }))
    }

    /// Entrywise equality ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.nrows() == other.nrows() && self.ncols() == other.ncols() && self.data == other.data
    }

    /// True iff `other[perm[i]][perm[j]] == self[i][j]` for all `i, j`, where
    /// `perm` maps indices of `self` to indices of `other`. Labels are ignored.
    pub fn equal_up_to_relabeling(&self, other: &Self, perm: &[usize]) -> bool {
        let n = self.nrows();
        if self.ncols() != n || other.nrows() != n || other.ncols() != n || perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == other.get(perm[i], perm[j])))
    }

    /// Support-based structure flags: an entry counts iff it is non-zero.
    pub fn structure_flags(&self) -> StructureFlags {
        let n = self.nrows();
        if self.ncols() != n {
            return StructureFlags::default();
        }
        let support: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| !self.get(i, j).is_zero_entry()).collect())
            .collect();
        structure_from_support(&support)
    }
}

impl<T: Scalar> Matrix<T> {
    /// Kronecker product; labels become `(row of self, row of rhs)` pairs in
    /// lexicographic order.
    pub fn kronecker(&self, rhs: &Self) -> Result<Self> {
        if self.ctx != rhs.ctx {
            return Err(Error::GroupMismatch);
        }
        let pairs = |a: &[Label], b: &[Label]| -> Vec<Label> {
            a.iter()
                .flat_map(|x| b.iter().map(move |y| Label::pair(x.clone(), y.clone())))
                .collect()
        };
        let rows = pairs(&self.rows, &rhs.rows);
        let cols = pairs(&self.cols, &rhs.cols);
        let (p, q) = (rhs.nrows(), rhs.ncols());
        Ok(Self::from_fn(&self.ctx, rows, cols, |r, c| {
            self.get(r / p, c / q).mul_ref(rhs.get(r % p, c % q))
        }))
    }
}

impl IntMatrix {
    pub fn zeros(rows: Vec<Label>, cols: Vec<Label>) -> Self {
        Self::zeros_in(&(), rows, cols)
    }

    pub fn identity(labels: Vec<Label>) -> Self {
        Self::identity_in(&(), labels)
    }

    pub fn from_rows(rows: Vec<Label>, cols: Vec<Label>, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::LabelMismatch("entry grid does not match labels".into()));
        }
        Self::from_parts((), rows, cols, entries.into_iter().flatten().collect())
    }

    /// Square matrix with index labels `0..n`. Panics on ragged input; meant
    /// for literals in code and tests.
    pub fn from_i64(entries: &[&[i64]]) -> Self {
        let m = entries.len();
        let n = entries.first().map_or(0, |r| r.len());
        assert!(entries.iter().all(|r| r.len() == n), "ragged matrix literal");
        Self::from_fn(&(), Label::indices(m), Label::indices(n), |i, j| {
            BigInt::from(entries[i][j])
        })
    }

    /// All-ones matrix.
    pub fn ones(rows: Vec<Label>, cols: Vec<Label>) -> Self {
        Self::from_fn(&(), rows, cols, |_, _| BigInt::one())
    }

    /// Entries as `i64`, panicking when one does not fit. Test helper.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.nrows())
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        self.map(&(), |x| x * k)
    }

    /// Exact division of every entry by `k`, or `None` if some entry is not
    /// divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            *x = q;
        }
        Some(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.nrows() != self.ncols() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        let n = self.nrows();
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!((&num % &prev).is_zero());
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// `det(I - tA)` via Faddeev–LeVerrier over the integers. Every division in
    /// the recurrence is exact for integer input; that is checked.
    pub fn reciprocal_charpoly(&self) -> Result<ReciprocalCharPoly> {
        if self.nrows() != self.ncols() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        let n = self.nrows();
        // Drop labels so this also works on rectangular-labelled squares.
        let a = Self::from_fn(&(), Label::indices(n), Label::indices(n), |i, j| {
            self.get(i, j).clone()
        });
        let identity = Self::identity(Label::indices(n));
        // coeffs[k] is the coefficient of t^k in det(I - tA), which equals the
        // coefficient of lambda^(n-k) in det(lambda I - A).
        let mut coeffs = vec![BigInt::one()];
        let mut m = Self::zeros(Label::indices(n), Label::indices(n));
        for k in 1..=n {
            m = a.mul(&m)?.add(&identity.scale(&coeffs[k - 1]))?;
            let tr = a.mul(&m)?.trace()?;
            let (q, r) = tr.div_rem(&BigInt::from(k));
            if !r.is_zero() {
                return Err(Error::Invariant(format!(
                    "Faddeev-LeVerrier division by {k} is inexact"
                )));
            }
            coeffs.push(-q);
        }
        Ok(ReciprocalCharPoly::from_coeffs(coeffs))
    }

    /// Primitivity through Wielandt's bound: a non-negative `n x n` matrix is
    /// primitive iff its `(n-1)^2 + 1`-th boolean power is strictly positive.
    pub fn primitive_by_wielandt(&self) -> bool {
        let n = self.nrows();
        if n == 0 || self.ncols() != n {
            return false;
        }
        let base: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| !self.get(i, j).is_zero_entry()).collect())
            .collect();
        let bool_mul = |x: &Vec<Vec<bool>>, y: &Vec<Vec<bool>>| -> Vec<Vec<bool>> {
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).any(|l| x[i][l] && y[l][j])).collect())
                .collect()
        };
        let mut e = (n - 1) * (n - 1) + 1;
        let mut result: Option<Vec<Vec<bool>>> = None;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => b.clone(),
                    Some(r) => bool_mul(&r, &b),
                });
            }
            e >>= 1;
            if e > 0 {
                b = bool_mul(&b, &b);
            }
        }
        result.is_some_and(|r| r.iter().all(|row| row.iter().all(|&x| x)))
    }
}

impl GroupRingMatrix {
    pub fn group(&self) -> &FiniteGroup {
        self.ctx()
    }

    /// Integer matrix embedded as multiples of `1_G`.
    pub fn from_int(group: &FiniteGroup, m: &IntMatrix) -> Self {
        m.map(group, |x| GroupRingElement::scalar(group, x.clone()))
    }

    /// `u_G * M` for an integer matrix `M`.
    pub fn u_times(group: &FiniteGroup, m: &IntMatrix) -> Self {
        let u = GroupRingElement::u_element(group);
        m.map(group, |x| u.scale(x))
    }

    /// Entrywise `pi_h`.
    pub fn project(&self, h: usize) -> IntMatrix {
        self.map(&(), |x| x.coeff(h).clone())
    }

    /// Multiplies every entry on the left by the group element `g`.
    pub fn left_shift(&self, g: usize) -> Self {
        self.map(self.ctx(), |x| x.left_shift(g))
    }

    /// Multiplies every entry on the right by the group element `g`.
    pub fn right_shift(&self, g: usize) -> Self {
        self.map(self.ctx(), |x| x.right_shift(g))
    }

    /// `g M g^-1`, entrywise.
    pub fn conjugate(&self, g: usize) -> Self {
        self.map(self.ctx(), |x| x.conjugate_idx(g))
    }

    /// Group-ring matrix from nested `i64` coefficient vectors, index labels.
    pub fn from_coeffs(group: &FiniteGroup, entries: &[Vec<Vec<i64>>]) -> Result<Self> {
        let m = entries.len();
        let n = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::LabelMismatch("ragged matrix".into()));
        }
        let data = entries
            .iter()
            .flatten()
            .map(|c| GroupRingElement::from_i64s(group, c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(group.clone(), Label::indices(m), Label::indices(n), data)
    }
}

/// Essential / irreducible / primitive, in the sense of non-negative matrices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StructureFlags {
    pub essential: bool,
    pub irreducible: bool,
    pub primitive: bool,
}

fn structure_from_support(support: &[Vec<usize>]) -> StructureFlags {
    let n = support.len();
    if n == 0 {
        return StructureFlags::default();
    }
    let mut has_in = vec![false; n];
    for row in support {
        for &j in row {
            has_in[j] = true;
        }
    }
    let essential = support.iter().all(|r| !r.is_empty()) && has_in.iter().all(|&x| x);

    // Irreducible iff every vertex reaches every vertex by a non-empty path.
    let reach_from = |s: usize| -> Vec<bool> {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = support[s].clone();
        while let Some(v) = stack.pop() {
            if !seen[v] {
                seen[v] = true;
                stack.extend(support[v].iter().copied());
            }
        }
        seen
    };
    let irreducible = (0..n).all(|s| reach_from(s).iter().all(|&x| x));

    let primitive = irreducible && period(support) == 1;
    StructureFlags {
        essential,
        irreducible,
        primitive,
    }
}

/// Period (gcd of cycle lengths) of a strongly connected support graph, from
/// BFS levels: the gcd of `level(u) + 1 - level(v)` over all edges `u -> v`.
fn period(support: &[Vec<usize>]) -> u64 {
    let n = support.len();
    let mut level: Vec<Option<i64>> = vec![None; n];
    level[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let lu = level[u].expect("queued vertices have levels");
        for &v in &support[u] {
            if level[v].is_none() {
                level[v] = Some(lu + 1);
                queue.push_back(v);
            }
        }
    }
    let mut g: u64 = 0;
    for (u, row) in support.iter().enumerate() {
        for &v in row {
            if let (Some(lu), Some(lv)) = (level[u], level[v]) {
                g = g.gcd(&(lu + 1 - lv).unsigned_abs());
            }
        }
    }
    g
}

/// Searches all permutations for `p` with `b[p[i]][p[j]] == a[i][j]`.
/// Exhaustive, so only for small matrices (at most 8 rows).
pub fn find_permutation_similarity<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Vec<usize>> {
    let n = a.nrows();
    if n > 8 || a.ncols() != n || b.nrows() != n || b.ncols() != n {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    if a.equal_up_to_relabeling(b, &perm) {
        return Some(perm);
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if a.equal_up_to_relabeling(b, &perm) {
                return Some(perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use proptest::prelude::*;

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    #[test]
    fn two_vertex_b_squared() {
        // B = [[g, e], [g, 0]] over Z/2Z
        let g = z2();
        let b = GroupRingMatrix::from_coeffs(&g, &[vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![0, 0]]]).unwrap();
        let b2 = b.pow(2).unwrap();
        let expect = GroupRingMatrix::from_coeffs(&g, &[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert_eq!(b2, expect);
    }

    #[test]
    fn golden_mean_square() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        assert_eq!(a.pow(2).unwrap().to_i64_rows(), vec![vec![2, 1], vec![1, 1]]);
        assert!(a.pow(0).unwrap().is_identity());
        assert_eq!(a.mul(&a.identity_like()).unwrap(), a);
    }

    #[test]
    fn label_mismatch_is_reported() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        let b = IntMatrix::from_i64(&[&[1, 1, 1]]);
        assert!(matches!(a.mul(&b), Err(Error::LabelMismatch(_))));
        let r = IntMatrix::from_i64(&[&[1, 2]]);
        assert!(matches!(r.pow(2), Err(Error::NotSquare { .. })));
        assert!(matches!(r.determinant(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn kronecker_reproduces_extension_of_example() {
        let p_e = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let p_g = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let pi_e = IntMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let pi_g = IntMatrix::from_i64(&[&[1, 0], &[1, 0]]);
        let e = pi_e.kronecker(&p_e).unwrap().add(&pi_g.kronecker(&p_g).unwrap()).unwrap();
        assert_eq!(
            e.to_i64_rows(),
            vec![vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![1, 0, 0, 0]]
        );
        assert_eq!(e.row_labels()[1], Label::pair(Label::Index(0), Label::Index(1)));
        let one = IntMatrix::from_i64(&[&[1]]);
        assert!(p_g.kronecker(&one).unwrap().same_entries(&p_g));
    }

    #[test]
    fn determinants() {
        let y = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(y.determinant().unwrap().magnitude(), &num_bigint::BigUint::one());
        assert_eq!(IntMatrix::identity(Label::indices(5)).determinant().unwrap(), BigInt::one());
        assert_eq!(IntMatrix::from_i64(&[&[1, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(IntMatrix::from_i64(&[&[0, 1], &[0, 1]]).determinant().unwrap(), BigInt::zero());
        // needs a pivot swap
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]).determinant().unwrap(),
            BigInt::from(-3)
        );
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(IntMatrix::from_i64(&[&[2]]).reciprocal_charpoly().unwrap().coeffs_i64(), vec![1, -2]);
        assert_eq!(
            IntMatrix::from_i64(&[&[1, 1], &[1, 0]]).reciprocal_charpoly().unwrap().coeffs_i64(),
            vec![1, -1, -1]
        );
    }

    /// Traces of powers straight from repeated multiplication.
    fn power_traces(a: &IntMatrix, upto: usize) -> Vec<BigInt> {
        let mut p = a.clone();
        let mut out = Vec::new();
        for _ in 0..upto {
            out.push(p.trace().unwrap());
            p = p.mul(a).unwrap();
        }
        out
    }

    #[test]
    fn charpoly_log_derivative_matches_traces_for_y() {
        let y = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 0]]);
        let p = y.reciprocal_charpoly().unwrap();
        assert_eq!(p.degree(), 4);
        let traces = power_traces(&y, 8);
        assert_eq!(p.log_derivative_traces(8), traces);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(n).collect();
            IntMatrix::from_i64(&rows)
        })
    }

    fn sized_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=4).prop_flat_map(small_matrix)
    }

    proptest! {
        #[test]
        fn pow_is_additive(a in sized_matrix(), j in 0u32..4, k in 0u32..4) {
            prop_assert_eq!(a.pow(j + k).unwrap(), a.pow(j).unwrap().mul(&a.pow(k).unwrap()).unwrap());
        }

        #[test]
        fn kronecker_mixed_product(
            (a, c) in (1usize..=3).prop_flat_map(|n| (small_matrix(n), small_matrix(n))),
            (b, d) in (1usize..=3).prop_flat_map(|n| (small_matrix(n), small_matrix(n))),
        ) {
            let lhs = a.kronecker(&b).unwrap().mul(&c.kronecker(&d).unwrap()).unwrap();
            let rhs = a.mul(&c).unwrap().kronecker(&b.mul(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kronecker_trace(a in small_matrix(3), b in small_matrix(3)) {
            prop_assert_eq!(a.kronecker(&b).unwrap().trace().unwrap(), a.trace().unwrap() * b.trace().unwrap());
        }

        #[test]
        fn charpoly_matches_power_traces(a in sized_matrix()) {
            let p = a.reciprocal_charpoly().unwrap();
            prop_assert_eq!(p.coeffs()[0].clone(), BigInt::one());
            prop_assert!(p.degree() <= a.nrows());
            prop_assert_eq!(p.log_derivative_traces(8), power_traces(&a, 8));
        }

        /// t^n det(I - A/t) = det(tI - A): the reversed reciprocal polynomial is
        /// the characteristic polynomial, checked against a cofactor expansion
        /// of det(tI - A) over Z[t].
        #[test]
        fn reversal_is_characteristic_polynomial(a in sized_matrix()) {
            let n = a.nrows();
            let p = a.reciprocal_charpoly().unwrap();
            let mut padded = p.coeffs().to_vec();
            padded.resize(n + 1, BigInt::zero());
            padded.reverse();
            let grid: Vec<Vec<IntPoly>> = (0..n)
                .map(|i| (0..n).map(|j| {
                    let c = -a.get(i, j).clone();
                    if i == j { IntPoly::new(vec![c, BigInt::one()]) } else { IntPoly::new(vec![c]) }
                }).collect())
                .collect();
            prop_assert_eq!(IntPoly::new(padded), cofactor_det(&grid));
        }

        #[test]
        fn determinant_matches_charpoly(a in sized_matrix()) {
            // det(A) = (-1)^n * constant term of det(tI - A) = top coefficient of det(I - tA) times (-1)^n
            let n = a.nrows();
            let p = a.reciprocal_charpoly().unwrap();
            let top = p.coeffs().get(n).cloned().unwrap_or_default();
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(a.determinant().unwrap(), sign * top);
        }

        #[test]
        fn wielandt_agrees_with_period(v in proptest::collection::vec(0i64..=1, 1..=16)) {
            let n = (v.len() as f64).sqrt() as usize;
            let rows: Vec<&[i64]> = v[..n * n].chunks(n).collect();
            let a = IntMatrix::from_i64(&rows);
            let f = a.structure_flags();
            prop_assert_eq!(f.primitive, a.primitive_by_wielandt());
            if f.primitive { prop_assert!(f.irreducible); }
        }
    }

    fn cofactor_det(m: &[Vec<IntPoly>]) -> IntPoly {
        let n = m.len();
        if n == 0 {
            return IntPoly::new(vec![BigInt::one()]);
        }
        let mut acc = IntPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<IntPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = m[0][j].mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn structure_flag_examples() {
        let f = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]).structure_flags();
        assert!(f.essential && f.irreducible && f.primitive);
        let f = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).structure_flags();
        assert!(f.essential && f.irreducible && !f.primitive);
        let f = IntMatrix::from_i64(&[&[1, 0], &[0, 0]]).structure_flags();
        assert!(!f.essential && !f.irreducible);
        assert!(!IntMatrix::from_i64(&[&[0]]).structure_flags().irreducible);
    }

    #[test]
    fn group_ring_irreducibility_uses_nonzero_entries() {
        let g = z2();
        let b = GroupRingMatrix::from_coeffs(&g, &[vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![0, 0]]]).unwrap();
        let f = b.structure_flags();
        assert!(f.essential && f.irreducible && f.primitive);
    }

    #[test]
    fn relabeling_comparator() {
        let a = IntMatrix::from_i64(&[&[0, 1], &[1, 1]]);
        let b = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        assert!(!a.equal_up_to_relabeling(&b, &[0, 1]));
        assert!(a.equal_up_to_relabeling(&b, &[1, 0]));
        assert!(!a.equal_up_to_relabeling(&b, &[1, 1]));
        assert_eq!(find_permutation_similarity(&a, &b), Some(vec![1, 0]));
        let c = IntMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(find_permutation_similarity(&a, &c), None);
    }
}

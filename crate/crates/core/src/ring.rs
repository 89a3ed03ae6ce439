//! The integral group ring `Z[G]` and its positive cone.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Subgroup};

/// A formal integer combination of group elements. Coefficients are indexed
/// by element index. `Z_+[G]` is not a separate type; see
/// [`GroupRingElement::is_nonnegative`].
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: FiniteGroup,
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*g{g}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl GroupRingElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    /// `n * 1_G`.
    pub fn scalar(group: &FiniteGroup, n: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = n.into();
        x
    }

    pub fn one(group: &FiniteGroup) -> Self {
        Self::scalar(group, 1)
    }

    /// The basis element `g` with coefficient 1, by index.
    pub fn basis(group: &FiniteGroup, g: usize) -> Result<Self> {
        group.check_index(g)?;
        let mut x = Self::zero(group);
        x.coeffs[g] = BigInt::one();
        Ok(x)
    }

    /// `u_G`, the sum of all group elements.
    pub fn u_element(group: &FiniteGroup) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: vec![BigInt::one(); group.order()],
        }
    }

    pub fn from_coeffs(group: &FiniteGroup, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Parse(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(GroupRingElement {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn from_i64s(group: &FiniteGroup, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient by element index, panicking on out-of-range indices.
    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn coeff_mut(&mut self, g: usize) -> &mut BigInt {
        &mut self.coeffs[g]
    }

    /// `pi_h(x)`.
    pub fn project(&self, h: &GroupElement) -> Result<BigInt> {
        if h.group() != &self.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.coeffs[h.index()].clone())
    }

    /// The augmentation, i.e. the coefficient sum.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True iff all coefficients are equal, i.e. `x` lies in `u_G * Z`.
    pub fn is_multiple_of_u(&self) -> bool {
        self.coeffs.iter().all(|c| *c == self.coeffs[0])
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, _)| g)
    }

    pub fn supported_in(&self, h: &Subgroup) -> bool {
        self.support().all(|g| h.contains(g))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, g: &GroupElement) -> Result<Self> {
        if g.group() != &self.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.conjugate_idx(g.index()))
    }

    pub(crate) fn conjugate_idx(&self, g: usize) -> Self {
        let mut out = Self::zero(&self.group);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.conjugate(g, k)] = c.clone();
        }
        out
    }

    /// `g * x`.
    pub(crate) fn left_shift(&self, g: usize) -> Self {
        let mut out = Self::zero(&self.group);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.op(g, k)] = c.clone();
        }
        out
    }

    /// `x * g`.
    pub(crate) fn right_shift(&self, g: usize) -> Self {
        let mut out = Self::zero(&self.group);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.op(k, g)] = c.clone();
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// Convolution: the coefficient of `k` is the sum of `x_g y_h` over `gh = k`.
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.group);
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[self.group.op(g, h)] += a * b;
            }
        }
        out
    }

    pub(crate) fn neg(&self) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `u_G` for the given group.
pub fn u_element(group: &FiniteGroup) -> GroupRingElement {
    GroupRingElement::u_element(group)
}

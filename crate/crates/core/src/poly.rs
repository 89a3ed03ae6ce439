//! Integer polynomials, just enough for reciprocal characteristic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Dense polynomial over `Z`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) + rhs.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - rhs.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient `self / divisor` in `Z[t]`, or `None` when `divisor`
    /// does not divide `self` there.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let d = divisor.degree();
        let lead = &divisor.0[d];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + d].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }
}

/// `det(I - tA)`: constant term 1, degree at most the matrix size. For an
/// edge shift this is the reciprocal of the zeta function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocalCharPoly(IntPoly);

impl ReciprocalCharPoly {
    pub(crate) fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.first().is_some_and(One::is_one));
        ReciprocalCharPoly(IntPoly::new(coeffs))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("coefficient fits in i64"))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn divides(&self, other: &ReciprocalCharPoly) -> bool {
        self.0.divides(&other.0)
    }

    /// `tr(A^k)` for `k = 1..=order`, via Newton's identities applied to
    /// `-t P'(t) / P(t) = sum_k tr(A^k) t^k`.
    pub fn log_derivative_traces(&self, order: usize) -> Vec<BigInt> {
        let c = |i: usize| self.coeffs().get(i).cloned().unwrap_or_default();
        let mut s: Vec<BigInt> = Vec::with_capacity(order);
        for k in 1..=order {
            let mut v = -(BigInt::from(k) * c(k));
            for i in 1..k {
                v -= c(i) * &s[k - i - 1];
            }
            s.push(v);
        }
        s
    }

    /// Coefficients `t^0..=t^order` of the zeta function `1 / P(t)`.
    pub fn zeta_series(&self, order: usize) -> Vec<BigInt> {
        let c = |i: usize| self.coeffs().get(i).cloned().unwrap_or_default();
        let mut z: Vec<BigInt> = Vec::with_capacity(order + 1);
        z.push(BigInt::one());
        for k in 1..=order {
            let mut v = BigInt::zero();
            for i in 1..=k {
                v -= c(i) * &z[k - i];
            }
            z.push(v);
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn division() {
        let a = IntPoly::from_i64(&[1, -1, -1]);
        let b = IntPoly::from_i64(&[1, 1]);
        let ab = a.mul(&b);
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert!(a.divides(&ab));
        assert_eq!(a.div_exact(&b), None);
        // 2t does not divide t over Z
        assert_eq!(IntPoly::from_i64(&[0, 1]).div_exact(&IntPoly::from_i64(&[0, 2])), None);
        assert_eq!(IntPoly::zero().div_exact(&a), Some(IntPoly::zero()));
    }

    /// exp(sum_k tr_k / k t^k) by the recurrence z_n = (1/n) sum_k tr_k z_{n-k},
    /// in exact rationals.
    fn exp_oracle(traces: &[BigInt], order: usize) -> Vec<BigRational> {
        let mut z = vec![BigRational::one()];
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += BigRational::from(traces[k - 1].clone()) * &z[n - k];
            }
            z.push(acc / BigRational::from(BigInt::from(n)));
        }
        z
    }

    #[test]
    fn zeta_series_matches_exponential() {
        // golden mean: det(I - tA) = 1 - t - t^2, traces are Lucas numbers
        let p = ReciprocalCharPoly::from_coeffs(vec![1.into(), (-1).into(), (-1).into()]);
        let traces = p.log_derivative_traces(10);
        let lucas: Vec<BigInt> = [1, 3, 4, 7, 11, 18, 29, 47, 76, 123].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(traces, lucas);
        let z = p.zeta_series(10);
        let oracle = exp_oracle(&traces, 10);
        for (a, b) in z.iter().zip(&oracle) {
            assert_eq!(BigRational::from(a.clone()), *b);
        }
    }
}

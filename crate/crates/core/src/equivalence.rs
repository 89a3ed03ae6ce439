//! Shift-equivalence witnesses over `Z_+` and `Z_+[G]`.
//!
//! A witness `(R, S, lag)` for the ordered pair `(A, B)` satisfies
//! `A^lag = RS`, `B^lag = SR`, `AR = RB`, `SA = BS` with `R`, `S`
//! non-negative. Lag 1 is an elementary strong shift equivalence. The
//! constructors here follow explicit recipes and verify their output before
//! returning it; no search is performed.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{is_normal, FiniteGroup, Subgroup};
use crate::gsft::{augmentation_matrix, extension_matrix, is_inert, InertnessWitness};
use crate::matrix::{GroupRingMatrix, IntMatrix, Matrix, Scalar};
use crate::ring::GroupRingElement;

/// Coefficient domain tag of a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Non-negative integers.
    NonNegInt,
    /// Non-negative cone of the group ring.
    NonNegGroupRing,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::NonNegInt => "Z+",
            Domain::NonNegGroupRing => "Z+[G]",
        }
    }
}

pub trait WitnessScalar: Scalar {
    const DOMAIN: Domain;
}

impl WitnessScalar for BigInt {
    const DOMAIN: Domain = Domain::NonNegInt;
}

impl WitnessScalar for GroupRingElement {
    const DOMAIN: Domain = Domain::NonNegGroupRing;
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeWitness<T: Scalar> {
    pub r: Matrix<T>,
    pub s: Matrix<T>,
    pub lag: u32,
}

pub type IntWitness = SeWitness<BigInt>;
pub type GroupRingWitness = SeWitness<GroupRingElement>;

impl<T: WitnessScalar> SeWitness<T> {
    pub fn domain(&self) -> Domain {
        T::DOMAIN
    }

    /// The witness for the swapped pair `(B, A)`.
    pub fn reversed(&self) -> Self {
        SeWitness {
            r: self.s.clone(),
            s: self.r.clone(),
            lag: self.lag,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationCheck {
    pub name: &'static str,
    pub holds: bool,
    /// First differing entry in row-major order.
    pub first_mismatch: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeReport {
    pub domain: Domain,
    pub lag: u32,
    pub equations: Vec<EquationCheck>,
    /// `("R" | "S", row, col)` of the first negative entry, if any.
    pub negative_entry: Option<(&'static str, usize, usize)>,
}

impl SeReport {
    pub fn is_valid(&self) -> bool {
        self.negative_entry.is_none() && self.equations.iter().all(|e| e.holds)
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some((m, i, j)) = self.negative_entry {
            return Some(format!("{m} has a negative entry at ({i}, {j})"));
        }
        self.equations.iter().find(|e| !e.holds).map(|e| match e.first_mismatch {
            Some((i, j)) => format!("{} fails at ({i}, {j})", e.name),
            None => format!("{} fails", e.name),
        })
    }

    fn into_result(self) -> Result<SeReport> {
        match self.first_failure() {
            None => Ok(self),
            Some(msg) => Err(Error::InvalidWitness(msg)),
        }
    }
}

fn compare<T: Scalar>(name: &'static str, lhs: &Matrix<T>, rhs: &Matrix<T>) -> EquationCheck {
    let first_mismatch = if lhs.nrows() != rhs.nrows() || lhs.ncols() != rhs.ncols() {
        Some((0, 0))
    } else {
        let n = lhs.ncols().max(1);
        lhs.entries()
            .iter()
            .zip(rhs.entries())
            .position(|(x, y)| x != y)
            .map(|k| (k / n, k % n))
    };
    EquationCheck {
        name,
        holds: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// Checks a witness against `(A, B)`. Shape, label and domain problems are
/// errors; failing equations are reported.
pub fn verify_se<T: WitnessScalar>(a: &Matrix<T>, b: &Matrix<T>, w: &SeWitness<T>) -> Result<SeReport> {
    a.require_square()?;
    b.require_square()?;
    if w.lag == 0 {
        return Err(Error::Hypothesis("lag must be at least 1".into()));
    }
    for m in [b, &w.r, &w.s] {
        if m.ctx() != a.ctx() {
            return Err(Error::GroupMismatch);
        }
    }
    if w.r.row_labels() != a.row_labels() || w.r.col_labels() != b.row_labels() {
        return Err(Error::LabelMismatch("R must be indexed by rows of A and rows of B".into()));
    }
    if w.s.row_labels() != b.row_labels() || w.s.col_labels() != a.row_labels() {
        return Err(Error::LabelMismatch("S must be indexed by rows of B and rows of A".into()));
    }
    let negative_entry = w
        .r
        .first_negative()
        .map(|(i, j)| ("R", i, j))
        .or_else(|| w.s.first_negative().map(|(i, j)| ("S", i, j)));
    let equations = vec![
        compare("A^lag = RS", &a.pow(w.lag)?, &w.r.mul(&w.s)?),
        compare("B^lag = SR", &b.pow(w.lag)?, &w.s.mul(&w.r)?),
        compare("AR = RB", &a.mul(&w.r)?, &w.r.mul(b)?),
        compare("SA = BS", &w.s.mul(a)?, &b.mul(&w.s)?),
    ];
    Ok(SeReport {
        domain: T::DOMAIN,
        lag: w.lag,
        equations,
        negative_entry,
    })
}

/// Verifies a chain `C_0 ~ C_1 ~ ... ~ C_n` of elementary (lag-1) links.
pub fn verify_sse_chain<T: WitnessScalar>(
    matrices: &[Matrix<T>],
    links: &[SeWitness<T>],
) -> Result<Vec<SeReport>> {
    if matrices.len() != links.len() + 1 {
        return Err(Error::Hypothesis(format!(
            "{} matrices need {} links, got {}",
            matrices.len(),
            matrices.len().saturating_sub(1),
            links.len()
        )));
    }
    links
        .iter()
        .enumerate()
        .map(|(k, w)| {
            if w.lag != 1 {
                return Err(Error::Hypothesis(format!("link {k} has lag {} instead of 1", w.lag)));
            }
            verify_se(&matrices[k], &matrices[k + 1], w)
        })
        .collect()
}

/// Raises the lag by `j`, replacing `S` by `S A^j`.
pub fn increase_lag<T: WitnessScalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    w: &SeWitness<T>,
    j: u32,
) -> Result<SeWitness<T>> {
    verify_se(a, b, w)?.into_result()?;
    let out = SeWitness {
        r: w.r.clone(),
        s: w.s.mul(&a.pow(j)?)?,
        lag: w.lag + j,
    };
    ensure_valid(a, b, &out, "increase_lag")?;
    Ok(out)
}

fn ensure_valid<T: WitnessScalar>(a: &Matrix<T>, b: &Matrix<T>, w: &SeWitness<T>, what: &str) -> Result<()> {
    let report = verify_se(a, b, w)?;
    match report.first_failure() {
        None => Ok(()),
        Some(msg) => Err(Error::Invariant(format!("{what} produced an invalid witness: {msg}"))),
    }
}

fn not_inert(cert: &crate::gsft::InertnessCertificate) -> Error {
    match cert.witness {
        InertnessWitness::NotInert { g, i, j } => Error::NotInert {
            exponent: cert.exponent,
            g,
            i,
            j,
        },
        InertnessWitness::Inert { .. } => Error::Invariant("expected a non-inert certificate".into()),
    }
}

/// For inert `B`, the lag-`l` witness `R = I (x) 1^T`, `S = pi_1(B^l) (x) 1`
/// between `A(B)` and `E(B)`, where `l` is the certificate exponent.
pub fn se_between_augmentation_and_extension(b: &GroupRingMatrix) -> Result<IntWitness> {
    let cert = is_inert(b)?;
    let InertnessWitness::Inert { m } = &cert.witness else {
        return Err(not_inert(&cert));
    };
    let aug = augmentation_matrix(b);
    let ext = extension_matrix(b)?.matrix;
    let order = b.group().order();
    let n = b.nrows();

    let r = IntMatrix::from_fn(&(), aug.row_labels().to_vec(), ext.row_labels().to_vec(), |i, k| {
        BigInt::from(u8::from(k / order == i))
    });
    let s = IntMatrix::from_fn(&(), ext.row_labels().to_vec(), aug.row_labels().to_vec(), |k, j| {
        m.get(k / order, j).clone()
    });
    debug_assert_eq!(r.nrows(), n);
    let w = SeWitness {
        r,
        s,
        lag: cert.exponent,
    };
    ensure_valid(&aug, &ext, &w, "se_between_augmentation_and_extension")?;
    Ok(w)
}

/// Lifts a `Z_+` witness between `A(B)` and `A(C)` to a `Z_+[G]` witness
/// between inert `B` and `C`: after raising the lag to `k` with `B^k`, `C^k`
/// in `u_G Z_+`, the pair `(u_G R, A(C^k) S / |G|)` has lag `2k`. When that
/// pair fails (C not a multiple of `u_G`), returns `(B^m R, C^m S)` instead.
pub fn lift_se(b: &GroupRingMatrix, c: &GroupRingMatrix, w: &IntWitness) -> Result<GroupRingWitness> {
    if b.group() != c.group() {
        return Err(Error::GroupMismatch);
    }
    let group = b.group();
    let cert_b = is_inert(b)?;
    if !cert_b.is_inert() {
        return Err(not_inert(&cert_b));
    }
    let cert_c = is_inert(c)?;
    if !cert_c.is_inert() {
        return Err(not_inert(&cert_c));
    }
    let aug_b = augmentation_matrix(b);
    let aug_c = augmentation_matrix(c);
    verify_se(&aug_b, &aug_c, w)?.into_result()?;

    let k = w.lag.max(cert_b.exponent).max(cert_c.exponent);
    let bumped = increase_lag(&aug_b, &aug_c, w, k - w.lag)?;
    let order = BigInt::from(group.order());
    let ck = augmentation_matrix(&c.pow(k)?);
    let ck_over_g = ck.div_exact(&order).ok_or_else(|| {
        Error::Invariant("augmentation of C^k is not divisible by |G|".into())
    })?;

    let lifted = SeWitness {
        r: GroupRingMatrix::u_times(group, &bumped.r),
        s: GroupRingMatrix::from_int(group, &ck_over_g.mul(&bumped.s)?),
        lag: 2 * k,
    };
    if verify_se(b, c, &lifted)?.is_valid() {
        return Ok(lifted);
    }

    // (u_G R, A(C^k)/|G| S) needs S'B = CS', which only holds when C itself
    // is a multiple of u_G. (B^m R, C^m S) with B^m, C^m in u_G Z_+ always
    // works, at lag 2m + l.
    let m = cert_b.exponent.max(cert_c.exponent);
    let lifted = SeWitness {
        r: b.pow(m)?.mul(&GroupRingMatrix::from_int(group, &w.r))?,
        s: c.pow(m)?.mul(&GroupRingMatrix::from_int(group, &w.s))?,
        lag: 2 * m + w.lag,
    };
    ensure_valid(b, c, &lifted, "lift_se")?;
    Ok(lifted)
}

/// Two inert matrices whose augmentations are shift equivalent over `Z_+`
/// are shift equivalent over `Z_+[G]`; this builds the witness.
pub fn se_from_inert_pair(
    b: &GroupRingMatrix,
    c: &GroupRingMatrix,
    w_aug: &IntWitness,
) -> Result<GroupRingWitness> {
    b.require_square()?;
    c.require_square()?;
    b.require_nonnegative()?;
    c.require_nonnegative()?;
    lift_se(b, c, w_aug)
}

/// Output of [`descend_se_to_subgroup`].
#[derive(Debug, Clone)]
pub struct Descent {
    /// The conjugating element `g` (ambient index).
    pub conjugator: usize,
    /// `H` as a standalone group.
    pub subgroup: FiniteGroup,
    /// `embedding[local] = ambient index`.
    pub embedding: Vec<usize>,
    /// `A` rewritten over `Z[H]`.
    pub a: GroupRingMatrix,
    /// `g B g^-1` rewritten over `Z[H]`.
    pub b: GroupRingMatrix,
    /// `(R g^-1, g S)` over `Z_+[H]`.
    pub witness: GroupRingWitness,
}

fn restrict(m: &GroupRingMatrix, h: &FiniteGroup, embedding: &[usize]) -> GroupRingMatrix {
    m.map(h, |x| {
        GroupRingElement::from_coeffs(h, embedding.iter().map(|&g| x.coeff(g).clone()).collect())
            .expect("embedding has the subgroup's order")
    })
}

fn require_supported(m: &GroupRingMatrix, h: &Subgroup, what: &str) -> Result<()> {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if let Some(g) = m.get(i, j).support().find(|&g| !h.contains(g)) {
                return Err(Error::Hypothesis(format!(
                    "{what}[{i}][{j}] has coefficient on {g}, outside the subgroup"
                )));
            }
        }
    }
    Ok(())
}

/// Given irreducible `A`, `B` over `Z_+[H]` with `H` normal in `G` and a
/// witness over `Z_+[G]`, finds `g` with `A` and `g B g^-1` shift equivalent
/// over `Z_+[H]` via `(R g^-1, g S)`. `g` is the first non-zero coefficient
/// of `R` (row-major, then group index); `H = G` returns the identity.
pub fn descend_se_to_subgroup(
    a: &GroupRingMatrix,
    b: &GroupRingMatrix,
    h: &Subgroup,
    w: &GroupRingWitness,
) -> Result<Descent> {
    let group = a.group();
    for m in [b, &w.r, &w.s] {
        if m.group() != group {
            return Err(Error::GroupMismatch);
        }
    }
    // Revalidate in case the subgroup was built for another group.
    let h = Subgroup::new(group, h.elements())?;
    if !is_normal(group, &h) {
        return Err(Error::Hypothesis("subgroup is not normal".into()));
    }
    for (m, name) in [(a, "A"), (b, "B")] {
        let flags = m.structure_flags();
        if !flags.irreducible || !flags.essential {
            return Err(Error::Hypothesis(format!("{name} is not irreducible and essential")));
        }
        require_supported(m, &h, name)?;
    }
    verify_se(a, b, w)?.into_result()?;

    let conjugator = if h.len() == group.order() {
        0
    } else {
        w.r.entries()
            .iter()
            .find_map(|x| x.support().next())
            .ok_or_else(|| Error::Hypothesis("R is zero".into()))?
    };
    let g = conjugator;
    let r = w.r.right_shift(group.inv(g));
    let s = w.s.left_shift(g);
    let b_conj = b.conjugate(g);
    require_supported(&r, &h, "R g^-1")?;
    require_supported(&s, &h, "g S")?;
    require_supported(&b_conj, &h, "g B g^-1")?;
    let ambient = SeWitness { r, s, lag: w.lag };
    ensure_valid(a, &b_conj, &ambient, "descend_se_to_subgroup")?;

    let (subgroup, embedding) = h.as_group(group)?;
    let a_h = restrict(a, &subgroup, &embedding);
    let b_h = restrict(&b_conj, &subgroup, &embedding);
    let witness = SeWitness {
        r: restrict(&ambient.r, &subgroup, &embedding),
        s: restrict(&ambient.s, &subgroup, &embedding),
        lag: w.lag,
    };
    ensure_valid(&a_h, &b_h, &witness, "descend_se_to_subgroup")?;
    Ok(Descent {
        conjugator,
        subgroup,
        embedding,
        a: a_h,
        b: b_h,
        witness,
    })
}

//! Weight groups of irreducible group-ring matrices and elementary positive
//! moves on `(I - A)`.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{are_conjugate_subgroups, FiniteGroup, Subgroup};
use crate::matrix::GroupRingMatrix;
use crate::ring::GroupRingElement;

/// `(core)_oo`: a square matrix over `Z[G]` padded by an implicit identity.
/// Only the core is stored.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizedMatrix {
    core: GroupRingMatrix,
}

impl StabilizedMatrix {
    pub fn new(core: GroupRingMatrix) -> Result<Self> {
        core.require_square()?;
        Ok(StabilizedMatrix { core })
    }

    /// `(I - A)_oo`.
    pub fn identity_minus(a: &GroupRingMatrix) -> Result<Self> {
        Self::new(a.identity_like().sub(a)?)
    }

    /// `E_{i,j}(g)`: identity plus `g` at `(i, j)`, on a core of size `n`.
    pub fn elementary(like: &GroupRingMatrix, i: usize, j: usize, g: usize) -> Result<Self> {
        like.require_square()?;
        let group = like.group();
        let mut core = like.identity_like();
        core.set(i, j, GroupRingElement::basis(group, g)?);
        Self::new(core)
    }

    pub fn core(&self) -> &GroupRingMatrix {
        &self.core
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.core.mul(&rhs.core)?)
    }
}

/// A weight group `W_i(A)` with the vertex it was computed at; its conjugacy
/// class is the weight class of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClass {
    pub subgroup: Subgroup,
    pub base: usize,
}

fn require_irreducible(a: &GroupRingMatrix) -> Result<()> {
    a.require_square()?;
    a.require_nonnegative()?;
    if !a.structure_flags().irreducible {
        return Err(Error::Hypothesis("matrix is not irreducible".into()));
    }
    Ok(())
}

/// Group elements carried by cycles at `i`, by reachability on `V x G`.
fn cycle_weights(a: &GroupRingMatrix, i: usize) -> Vec<usize> {
    let group = a.group();
    let order = group.order();
    let n = a.nrows();
    let mut seen = vec![false; n * order];
    let mut queue = VecDeque::new();
    let push_successors = |v: usize, g: usize, seen: &mut Vec<bool>, queue: &mut VecDeque<(usize, usize)>| {
        for w in 0..n {
            for h in a.get(v, w).support() {
                let next = (w, group.op(g, h));
                if !seen[next.0 * order + next.1] {
                    seen[next.0 * order + next.1] = true;
                    queue.push_back(next);
                }
            }
        }
    };
    // Paths must be non-empty, so (i, 1) is not seen until reached again.
    push_successors(i, group.identity(), &mut seen, &mut queue);
    while let Some((v, g)) = queue.pop_front() {
        push_successors(v, g, &mut seen, &mut queue);
    }
    (0..order).filter(|&g| seen[i * order + g]).collect()
}

/// `W_i(A) = {g : pi_g((A^n)_{ii}) > 0 for some n >= 1}` for irreducible `A`.
pub fn weight_group(a: &GroupRingMatrix, i: usize) -> Result<WeightClass> {
    require_irreducible(a)?;
    if i >= a.nrows() {
        return Err(Error::Hypothesis(format!("vertex {i} out of range for size {}", a.nrows())));
    }
    let group = a.group();
    let mut groups = Vec::with_capacity(a.nrows());
    for v in 0..a.nrows() {
        let weights = cycle_weights(a, v);
        let sub = Subgroup::new(group, &weights)
            .map_err(|_| Error::Invariant(format!("cycle weights at {v} do not form a subgroup")))?;
        groups.push(sub);
    }
    for (v, sub) in groups.iter().enumerate() {
        if are_conjugate_subgroups(group, &groups[i], sub).is_none() {
            return Err(Error::Invariant(format!("weight groups at {i} and {v} are not conjugate")));
        }
    }
    Ok(WeightClass {
        subgroup: groups.swap_remove(i),
        base: i,
    })
}

/// Compares weight classes; `Some(g)` means `g W(A) g^-1 = W(B)`.
pub fn weight_class_equal(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<Option<usize>> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let wa = weight_group(a, 0)?;
    let wb = weight_group(b, 0)?;
    Ok(are_conjugate_subgroups(a.group(), &wa.subgroup, &wb.subgroup))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `(I - B) = E_{i,j}(g) (I - A)`.
    Left,
    /// `(I - B) = (I - A) E_{i,j}(g)`.
    Right,
}

/// Applies an elementary positive move, requiring `i != j` inside the core
/// and `pi_g(A_{ij}) > 0`. The result is checked against the stabilized
/// identity before it is returned.
pub fn apply_positive_move(a: &GroupRingMatrix, side: Side, i: usize, j: usize, g: usize) -> Result<GroupRingMatrix> {
    a.require_square()?;
    a.require_nonnegative()?;
    let group: &FiniteGroup = a.group();
    let n = a.nrows();
    if i >= n || j >= n {
        return Err(Error::Hypothesis(format!("indices ({i}, {j}) outside the {n}x{n} core")));
    }
    if i == j {
        return Err(Error::Hypothesis("positive moves need i != j".into()));
    }
    group.check_index(g)?;
    if a.get(i, j).coeff(g).is_zero() {
        return Err(Error::Hypothesis(format!("coefficient of {g} in A[{i}][{j}] is zero")));
    }

    let mut b = a.clone();
    match side {
        Side::Left => {
            for k in 0..n {
                let add = a.get(j, k).left_shift(g);
                b.get_mut(i, k).add_assign_unchecked(&add);
            }
            *b.get_mut(i, j).coeff_mut(g) -= 1;
        }
        Side::Right => {
            for k in 0..n {
                let add = a.get(k, i).right_shift(g);
                b.get_mut(k, j).add_assign_unchecked(&add);
            }
            *b.get_mut(i, j).coeff_mut(g) -= 1;
        }
    }
    if let Some((r, c)) = b.first_negative() {
        return Err(Error::Invariant(format!("positive move produced a negative entry at ({r}, {c})")));
    }

    let e = StabilizedMatrix::elementary(a, i, j, g)?;
    let ia = StabilizedMatrix::identity_minus(a)?;
    let expected = match side {
        Side::Left => e.mul(&ia)?,
        Side::Right => ia.mul(&e)?,
    };
    if StabilizedMatrix::identity_minus(&b)? != expected {
        return Err(Error::Invariant("positive move does not reconstruct (I - B)".into()));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::s3;
    use crate::gsft::tests::two_vertex_b;
    use crate::matrix::IntMatrix;
    use proptest::prelude::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn example_weight_group_is_everything() {
        let w = weight_group(&two_vertex_b(), 0).unwrap();
        assert_eq!(w.subgroup.elements(), &[0, 1]);
        assert_eq!(weight_group(&two_vertex_b(), 1).unwrap().subgroup.elements(), &[0, 1]);
    }

    #[test]
    fn identity_labels_give_trivial_weights() {
        let b = GroupRingMatrix::from_int(&z(2), &IntMatrix::from_i64(&[&[1, 1], &[1, 0]]));
        assert_eq!(weight_group(&b, 0).unwrap().subgroup.elements(), &[0]);
        assert_eq!(weight_class_equal(&two_vertex_b(), &b).unwrap(), None);
        assert_eq!(weight_class_equal(&b, &b).unwrap(), Some(0));
        let t = GroupRingMatrix::from_int(&z(1), &IntMatrix::from_i64(&[&[2]]));
        assert_eq!(weight_group(&t, 0).unwrap().subgroup.elements(), &[0]);
    }

    #[test]
    fn reducible_is_rejected() {
        let b = GroupRingMatrix::from_int(&z(2), &IntMatrix::from_i64(&[&[1, 1], &[0, 1]]));
        assert!(matches!(weight_group(&b, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn s3_weights_are_conjugate_across_vertices() {
        let g = s3();
        // cycle 0 -> 1 -> 0 with labels (r) then (t): weight r t, a transposition
        let mut e = vec![vec![vec![0i64; 6]; 2]; 2];
        e[0][1][1] = 1;
        e[1][0][3] = 1;
        let a = GroupRingMatrix::from_coeffs(&g, &e).unwrap();
        let w0 = weight_group(&a, 0).unwrap();
        let w1 = weight_group(&a, 1).unwrap();
        assert_eq!(w0.subgroup.len(), 2);
        assert!(are_conjugate_subgroups(&g, &w0.subgroup, &w1.subgroup).is_some());
        assert_ne!(w0.subgroup, w1.subgroup);
    }

    #[test]
    fn left_move_example() {
        let g = z(2);
        let a = GroupRingMatrix::from_coeffs(&g, &[vec![vec![0, 0], vec![1, 0]], vec![vec![1, 0], vec![0, 0]]]).unwrap();
        let b = apply_positive_move(&a, Side::Left, 0, 1, 0).unwrap();
        let expected = GroupRingMatrix::from_coeffs(&g, &[vec![vec![1, 0], vec![0, 0]], vec![vec![1, 0], vec![0, 0]]]).unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn move_preconditions() {
        let g = z(2);
        let a = GroupRingMatrix::from_coeffs(&g, &[vec![vec![0, 0], vec![1, 0]], vec![vec![1, 0], vec![0, 0]]]).unwrap();
        assert!(matches!(apply_positive_move(&a, Side::Left, 0, 1, 1), Err(Error::Hypothesis(_))));
        assert!(matches!(apply_positive_move(&a, Side::Right, 0, 0, 0), Err(Error::Hypothesis(_))));
        assert!(matches!(apply_positive_move(&a, Side::Right, 0, 2, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn elementary_inverse() {
        let g = z(3);
        let a = GroupRingMatrix::from_int(&g, &IntMatrix::from_i64(&[&[1, 1], &[1, 1]]));
        let e = StabilizedMatrix::elementary(&a, 0, 1, 1).unwrap();
        let mut inv = e.core().clone();
        *inv.get_mut(0, 1) = inv.get(0, 1).neg();
        assert!(e.core().mul(&inv).unwrap().is_identity());
    }

    fn irreducible_over(n_group: usize) -> impl Strategy<Value = GroupRingMatrix> {
        (1usize..=3)
            .prop_flat_map(move |n| proptest::collection::vec(proptest::collection::vec(0i64..=1, n_group), n * n).prop_map(move |v| (n, v)))
            .prop_map(move |(n, v)| {
                let rows: Vec<Vec<Vec<i64>>> = v.chunks(n).map(<[_]>::to_vec).collect();
                GroupRingMatrix::from_coeffs(&z(n_group), &rows).unwrap()
            })
            .prop_filter("irreducible", |m| m.structure_flags().irreducible)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn conjugation_preserves_weight_class(a in irreducible_over(4), g in 0usize..4) {
            let b = a.conjugate(g);
            prop_assert!(weight_class_equal(&a, &b).unwrap().is_some());
        }

        #[test]
        fn positive_moves_reconstruct(a in irreducible_over(3), left in any::<bool>(), seed in any::<u64>()) {
            let n = a.nrows();
            let mut candidates = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        candidates.extend(a.get(i, j).support().map(|g| (i, j, g)));
                    }
                }
            }
            prop_assume!(!candidates.is_empty());
            let (i, j, g) = candidates[(seed % candidates.len() as u64) as usize];
            let side = if left { Side::Left } else { Side::Right };
            let b = apply_positive_move(&a, side, i, j, g).unwrap();
            prop_assert!(b.is_nonnegative());
            if b.structure_flags().irreducible {
                prop_assert!(weight_class_equal(&a, &b).unwrap().is_some());
            }
        }
    }
}

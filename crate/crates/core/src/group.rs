//! Finite groups given by explicit multiplication tables.
//!
//! Element `0` is always the identity. Every constructor validates the group
//! axioms exhaustively, which is affordable because orders are capped.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::matrix::IntMatrix;

/// Default cap on group order. All algorithms in this crate are exhaustive.
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, PartialEq, Eq)]
struct GroupData {
    order: usize,
    /// Row-major `order * order` table, `table[a * order + b] = a * b`.
    table: Vec<usize>,
    inverses: Vec<usize>,
}

/// A validated finite group. Cloning is cheap; clones compare equal, and two
/// independently built groups compare equal iff their tables coincide.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order())
    }
}

/// How to build a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Table(Vec<Vec<usize>>),
    /// Direct product, folded left to right. Element `(a, b)` of `G x H` has
    /// index `a * |H| + b`.
    Product(Vec<GroupSpec>),
}

pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    make_group_with_cap(spec, DEFAULT_MAX_ORDER)
}

pub fn make_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => FiniteGroup::cyclic_with_cap(*n, cap),
        GroupSpec::Table(rows) => FiniteGroup::from_table_with_cap(rows, cap),
        GroupSpec::Product(factors) => {
            let (first, rest) = factors
                .split_first()
                .ok_or_else(|| Error::GroupAxiom("product with no factors".into()))?;
            let mut acc = make_group_with_cap(first, cap)?;
            for f in rest {
                let next = make_group_with_cap(f, cap)?;
                acc = FiniteGroup::direct_product_with_cap(&acc, &next, cap)?;
            }
            Ok(acc)
        }
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_cap(n, DEFAULT_MAX_ORDER)
    }

    fn cyclic_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::GroupAxiom("cyclic group of order 0".into()));
        }
        if n > cap {
            return Err(Error::GroupTooLarge { order: n, cap });
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup(Arc::new(GroupData {
            order: n,
            table,
            inverses,
        })))
    }

    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_cap(rows, DEFAULT_MAX_ORDER)
    }

    fn from_table_with_cap(rows: &[Vec<usize>], cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::GroupAxiom("empty multiplication table".into()));
        }
        if n > cap {
            return Err(Error::GroupTooLarge { order: n, cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!(
                    "row {a} has length {} instead of {n}",
                    row.len()
                )));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::GroupAxiom(format!(
                        "row {a} contains {c}, outside 0..{n}"
                    )));
                }
            }
            table.extend_from_slice(row);
        }
        Self::validated(n, table)
    }

    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::direct_product_with_cap(g, h, DEFAULT_MAX_ORDER)
    }

    fn direct_product_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<Self> {
        let (m, k) = (g.order(), h.order());
        let n = m
            .checked_mul(k)
            .filter(|&n| n <= cap)
            .ok_or(Error::GroupTooLarge {
                order: m.saturating_mul(k),
                cap,
            })?;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x / k, x % k);
                let (a2, b2) = (y / k, y % k);
                table.push(g.op(a1, a2) * k + h.op(b1, b2));
            }
        }
        Self::validated(n, table)
    }

    fn validated(n: usize, table: Vec<usize>) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * n + b];
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::GroupAxiom(format!(
                    "element 0 is not the identity (fails at {g})"
                )));
            }
        }
        // Latin square: every row and column is a permutation.
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = at(a, b);
                let c = at(b, a);
                if row_seen[r] {
                    return Err(Error::GroupAxiom(format!("row {a} repeats {r}")));
                }
                if col_seen[c] {
                    return Err(Error::GroupAxiom(format!("column {a} repeats {c}")));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::GroupAxiom(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| at(a, b) == 0).expect("latin square"))
            .collect();
        Ok(FiniteGroup(Arc::new(GroupData {
            order: n,
            table,
            inverses,
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Product of element indices `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.0.table.chunks(self.0.order).map(<[_]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        self.check_index(index)?;
        Ok(GroupElement {
            group: self.clone(),
            index,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|index| GroupElement {
            group: self.clone(),
            index,
        })
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order(),
            })
        }
    }

    /// `g * x * g^-1` on indices.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }
}

/// An element of a specific group.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    group: FiniteGroup,
    index: usize,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.index)
    }
}

impl GroupElement {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        self.group.element(self.group.op(self.index, other.index))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            index: self.group.inv(self.index),
        }
    }
}

/// The right-regular permutation matrix: `(P_g)[h][k] = 1` iff `k = h * g`.
/// Rows and columns are labelled by element indices.
pub fn regular_permutation_matrix(group: &FiniteGroup, g: &GroupElement) -> Result<IntMatrix> {
    if g.group() != group {
        return Err(Error::GroupMismatch);
    }
    let n = group.order();
    let labels: Vec<Label> = (0..n).map(Label::Index).collect();
    let mut m = IntMatrix::zeros(labels.clone(), labels);
    for h in 0..n {
        m.set(h, group.op(h, g.index()), BigInt::from(1));
    }
    Ok(m)
}

/// A subgroup as a sorted list of element indices. Always contains `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates that `elements` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        for &a in &set {
            group.check_index(a)?;
        }
        if !set.contains(&0) {
            return Err(Error::Hypothesis("subgroup must contain the identity".into()));
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(Error::Hypothesis(format!("subgroup is missing the inverse of {a}")));
            }
            for &b in &set {
                if !set.contains(&group.op(a, b)) {
                    return Err(Error::Hypothesis(format!(
                        "subgroup is not closed: {a} * {b} missing"
                    )));
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup {
            elements: (0..group.order()).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `g H g^-1`.
    pub fn conjugated_by(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| group.conjugate(g, h)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Re-index the subgroup as a standalone group. Returns the group and the
    /// embedding `local index -> ambient index`.
    pub fn as_group(&self, ambient: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let embed = self.elements.clone();
        let local = |g: usize| self.elements.binary_search(&g).expect("closed subgroup");
        let table: Vec<Vec<usize>> = embed
            .iter()
            .map(|&a| embed.iter().map(|&b| local(ambient.op(a, b))).collect())
            .collect();
        Ok((FiniteGroup::from_table(&table)?, embed))
    }
}

/// The subgroup generated by `generators`.
pub fn generate_subgroup(group: &FiniteGroup, generators: &[usize]) -> Result<Subgroup> {
    for &g in generators {
        group.check_index(g)?;
    }
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &s in generators {
            let y = group.op(x, s);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    // In a finite group, closure under right multiplication by generators
    // already gives inverses.
    Ok(Subgroup {
        elements: (0..group.order()).filter(|&g| seen[g]).collect(),
    })
}

pub fn is_normal(group: &FiniteGroup, h: &Subgroup) -> bool {
    (0..group.order()).all(|g| h.conjugated_by(group, g) == *h)
}

/// The first `g` (by index) with `g H1 g^-1 = H2`.
pub fn are_conjugate_subgroups(group: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> Option<usize> {
    if h1.len() != h2.len() {
        return None;
    }
    (0..group.order()).find(|&g| h1.conjugated_by(group, g) == *h2)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// S3 with elements 0 = id, 1 = r, 2 = r^2, 3 = s, 4 = s r, 5 = s r^2,
    /// built from permutations of {0, 1, 2}.
    pub(crate) fn s3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&table).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn cyclic_two_table() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(g.table(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn klein_four_is_self_inverse() {
        let spec = GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]);
        let g = make_group(&spec).unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).all(|a| g.inv(a) == a));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::cyclic(0).is_err());
        // identity not at index 0
        assert!(FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).is_err());
        // not latin
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).is_err());
        // out of range
        assert!(FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]).is_err());
        // ragged
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 with identity 0 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(&t) {
            Err(Error::GroupAxiom(msg)) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FiniteGroup::cyclic(65),
            Err(Error::GroupTooLarge { order: 65, cap: 64 })
        ));
        let spec = GroupSpec::Product(vec![GroupSpec::Cyclic(16), GroupSpec::Cyclic(8)]);
        assert!(matches!(make_group(&spec), Err(Error::GroupTooLarge { .. })));
        assert!(make_group_with_cap(&spec, 128).is_ok());
    }

    #[test]
    fn regular_permutation_matrices() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let e = regular_permutation_matrix(&z2, &z2.element(0).unwrap()).unwrap();
        assert_eq!(e.to_i64_rows(), vec![vec![1, 0], vec![0, 1]]);
        let g = regular_permutation_matrix(&z2, &z2.element(1).unwrap()).unwrap();
        assert_eq!(g.to_i64_rows(), vec![vec![0, 1], vec![1, 0]]);

        let z3 = FiniteGroup::cyclic(3).unwrap();
        let p1 = regular_permutation_matrix(&z3, &z3.element(1).unwrap()).unwrap();
        let p2 = regular_permutation_matrix(&z3, &z3.element(2).unwrap()).unwrap();
        assert_eq!(p1.to_i64_rows(), vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(p1.mul(&p1).unwrap(), p2);
    }

    #[test]
    fn regular_representation_is_a_homomorphism() {
        let groups = vec![
            FiniteGroup::cyclic(5).unwrap(),
            s3(),
            make_group(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)])).unwrap(),
            make_group(&GroupSpec::Product(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::Cyclic(2),
                GroupSpec::Cyclic(2),
            ]))
            .unwrap(),
        ];
        for grp in groups {
            let mats: Vec<_> = grp
                .elements()
                .map(|g| regular_permutation_matrix(&grp, &g).unwrap())
                .collect();
            assert!(mats[0].is_identity());
            for g in 0..grp.order() {
                for h in 0..grp.order() {
                    assert_eq!(mats[g].mul(&mats[h]).unwrap(), mats[grp.op(g, h)]);
                }
            }
        }
    }

    #[test]
    fn foreign_element_is_rejected() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let g = z3.element(1).unwrap();
        assert_eq!(regular_permutation_matrix(&z2, &g), Err(Error::GroupMismatch));
        assert!(z2.element(2).is_err());
    }

    #[test]
    fn subgroup_generation() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(generate_subgroup(&z2, &[1]).unwrap().elements(), &[0, 1]);

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = generate_subgroup(&z4, &[2]).unwrap();
        assert_eq!(h.elements(), &[0, 2]);
        assert!(is_normal(&z4, &h));
        assert!(generate_subgroup(&z4, &[7]).is_err());
    }

    #[test]
    fn distinct_klein_subgroups_are_not_conjugate() {
        let v4 = make_group(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
        // (1,0) has index 2, (0,1) has index 1.
        let h1 = Subgroup::new(&v4, &[0, 2]).unwrap();
        let h2 = Subgroup::new(&v4, &[0, 1]).unwrap();
        assert_eq!(are_conjugate_subgroups(&v4, &h1, &h2), None);
        assert_eq!(are_conjugate_subgroups(&v4, &h1, &h1), Some(0));
    }

    #[test]
    fn s3_subgroups() {
        let g = s3();
        assert!(!g.is_abelian());
        let a3 = generate_subgroup(&g, &[1]).unwrap();
        assert_eq!(a3.elements(), &[0, 1, 2]);
        assert!(is_normal(&g, &a3));
        let t1 = generate_subgroup(&g, &[3]).unwrap();
        let t2 = generate_subgroup(&g, &[4]).unwrap();
        assert!(!is_normal(&g, &t1));
        let c = are_conjugate_subgroups(&g, &t1, &t2).expect("transpositions are conjugate");
        assert_eq!(t1.conjugated_by(&g, c), t2);
        let (local, embed) = a3.as_group(&g).unwrap();
        assert_eq!(local.order(), 3);
        assert_eq!(embed, vec![0, 1, 2]);
        assert!(Subgroup::new(&g, &[0, 3, 4]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn generated_subgroup_is_smallest_closed_set(
            n in 1usize..=8,
            gens in proptest::collection::vec(0usize..8, 0..3),
        ) {
            let g = FiniteGroup::cyclic(n).unwrap();
            let gens: Vec<usize> = gens.into_iter().map(|x| x % n).collect();
            let h = generate_subgroup(&g, &gens).unwrap();
            // closed
            proptest::prop_assert!(Subgroup::new(&g, h.elements()).is_ok());
            // minimal: every closed superset of gens ∪ {0} contains it.
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if !gens.iter().all(|x| set.contains(x)) {
                    continue;
                }
                if let Ok(k) = Subgroup::new(&g, &set) {
                    proptest::prop_assert!(h.elements().iter().all(|&x| k.contains(x)));
                }
            }
        }
    }
}

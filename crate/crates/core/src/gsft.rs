//! Free G-SFTs presented by square matrices over `Z_+[G]`.
//!
//! For `B` over `Z_+[G]` with vertex set `V`:
//!
//! * the augmentation `A(B)` sums the coefficients of every entry and presents
//!   the orbit space;
//! * the extension `E(B)` lives on `V x G` with
//!   `E(B)[(i,g),(j,h)] = pi_{g^-1 h}(B[i][j])`, and `G` acts on it by
//!   `r . (i, h) = (i, r h)`.
//!
//! `B` is inert iff some power of `B` has every entry in `u_G * Z_+`, and one
//! exponent, `n (|G| - 1)`, always decides the question.

use crate::error::{Error, Result};
use crate::group::{regular_permutation_matrix, FiniteGroup};
use crate::label::Label;
use crate::matrix::{GroupRingMatrix, IntMatrix};

/// Entrywise coefficient sum `A(B) = sum_g pi_g(B)`. Labels are kept.
pub fn augmentation_matrix(b: &GroupRingMatrix) -> IntMatrix {
    b.map(&(), |x| x.augmentation())
}

/// The covering matrix `E(B)` together with its canonical free `G`-action.
#[derive(Debug, Clone)]
pub struct Extension {
    pub matrix: IntMatrix,
    pub action: GraphAction,
}

/// Builds `E(B)` as `sum_g pi_g(B) (x) P_g` and checks it entrywise against the
/// defining formula.
pub fn extension_matrix(b: &GroupRingMatrix) -> Result<Extension> {
    b.require_square()?;
    b.require_nonnegative()?;
    let group = b.group();
    let order = group.order();
    let n = b.nrows();

    let mut sum: Option<IntMatrix> = None;
    for g in group.elements() {
        let term = b.project(g.index()).kronecker(&regular_permutation_matrix(group, &g)?)?;
        sum = Some(match sum {
            None => term,
            Some(s) => s.add(&term)?,
        });
    }
    let matrix = sum.expect("groups are non-empty");

    for i in 0..n {
        for g in 0..order {
            for j in 0..n {
                for h in 0..order {
                    let direct = b.get(i, j).coeff(group.op(group.inv(g), h));
                    if matrix.get(i * order + g, j * order + h) != direct {
                        return Err(Error::Invariant(format!(
                            "Kronecker and entrywise extension formulas disagree at (({i},{g}),({j},{h}))"
                        )));
                    }
                }
            }
        }
    }

    let vertex_action: Vec<Vec<usize>> = (0..order)
        .map(|r| {
            (0..n * order)
                .map(|v| (v / order) * order + group.op(r, v % order))
                .collect()
        })
        .collect();
    let action = GraphAction::new(matrix.clone(), group.clone(), vertex_action, None)?;
    Ok(Extension { matrix, action })
}

/// The exponent `max(1, n (|G| - 1))` at which inertness is decided.
pub fn inertness_bound(b: &GroupRingMatrix) -> u32 {
    let n = b.nrows() as u64;
    let g = b.group().order() as u64;
    u32::try_from((n * (g - 1)).max(1)).unwrap_or(u32::MAX)
}

#[derive(Debug, Clone, PartialEq)]
pub enum InertnessWitness {
    /// `B^exponent = u_G * M`.
    Inert { m: IntMatrix },
    /// `pi_g(B^exponent[i][j]) != pi_1(B^exponent[i][j])`.
    NotInert { g: usize, i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct InertnessCertificate {
    pub exponent: u32,
    pub witness: InertnessWitness,
}

impl InertnessCertificate {
    pub fn is_inert(&self) -> bool {
        matches!(self.witness, InertnessWitness::Inert { .. })
    }

    /// Re-derives the stated (in)equation from `b`.
    pub fn check(&self, b: &GroupRingMatrix) -> Result<bool> {
        if self.exponent > inertness_bound(b) {
            return Ok(false);
        }
        let p = b.pow(self.exponent)?;
        Ok(match &self.witness {
            InertnessWitness::Inert { m } => p == GroupRingMatrix::u_times(b.group(), m),
            InertnessWitness::NotInert { g, i, j } => {
                *g < b.group().order()
                    && *i < p.nrows()
                    && *j < p.ncols()
                    && p.get(*i, *j).coeff(*g) != p.get(*i, *j).coeff(0)
            }
        })
    }
}

/// Decides inertness of a non-negative square `B`. The least exponent
/// `l <= bound` with `B^l` in `u_G Z_+` is reported for inert matrices; a
/// violating coefficient of `B^bound` otherwise.
pub fn is_inert(b: &GroupRingMatrix) -> Result<InertnessCertificate> {
    b.require_square()?;
    b.require_nonnegative()?;
    let bound = inertness_bound(b);
    let mut power = b.clone();
    for exponent in 1..=bound {
        if exponent > 1 {
            power = power.mul(b)?;
        }
        if power.entries().iter().all(|x| x.is_multiple_of_u()) {
            let m = power.project(0);
            return Ok(InertnessCertificate {
                exponent,
                witness: InertnessWitness::Inert { m },
            });
        }
    }
    let (i, j, g) = first_non_constant(&power)
        .ok_or_else(|| Error::Invariant("power left u_G Z_+ without a witness".into()))?;
    Ok(InertnessCertificate {
        exponent: bound,
        witness: InertnessWitness::NotInert { g, i, j },
    })
}

fn first_non_constant(p: &GroupRingMatrix) -> Option<(usize, usize, usize)> {
    for i in 0..p.nrows() {
        for j in 0..p.ncols() {
            let x = p.get(i, j);
            if let Some(g) = (1..p.group().order()).find(|&g| x.coeff(g) != x.coeff(0)) {
                return Some((i, j, g));
            }
        }
    }
    None
}

/// True iff `det(I - t E(B)) = det(I - t A(B))`, i.e. the zeta functions of
/// the extension and of the orbit space agree.
pub fn zeta_equal(b: &GroupRingMatrix) -> Result<bool> {
    let ext = extension_matrix(b)?;
    let aug = augmentation_matrix(b);
    Ok(ext.matrix.reciprocal_charpoly()? == aug.reciprocal_charpoly()?)
}

/// An edge `(source, target, multiplicity index)`.
pub type Edge = (usize, usize, usize);

/// Upper bound on the number of edges materialized for an action.
pub const MAX_EDGES: usize = 1 << 16;

/// A finite multigraph with a free left action of `G` by graph automorphisms.
/// `vertex_action[g][v]` is `g . v`. Edges are only materialized when an
/// explicit edge action is given; otherwise the canonical lift is implied.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphAction {
    adjacency: IntMatrix,
    group: FiniteGroup,
    vertex_action: Vec<Vec<usize>>,
    /// `edge_action[g][e]` on [`GraphAction::edges`], when explicit.
    edge_action: Option<Vec<Vec<usize>>>,
}

fn enumerate_edges(adjacency: &IntMatrix) -> Result<Vec<Edge>> {
    let n = adjacency.nrows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let count = usize::try_from(adjacency.get(i, j))
                .ok()
                .filter(|&c| edges.len() + c <= MAX_EDGES)
                .ok_or_else(|| Error::InvalidAction(format!("more than {MAX_EDGES} edges")))?;
            edges.extend((0..count).map(|k| (i, j, k)));
        }
    }
    Ok(edges)
}

fn check_permutation(p: &[usize], n: usize, what: &str) -> Result<()> {
    if p.len() != n {
        return Err(Error::InvalidAction(format!(
            "{what} has length {} instead of {n}",
            p.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return Err(Error::InvalidAction(format!("{what} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

fn check_homomorphism(group: &FiniteGroup, perms: &[Vec<usize>], what: &str) -> Result<()> {
    if perms[0].iter().enumerate().any(|(v, &w)| v != w) {
        return Err(Error::InvalidAction(format!("identity moves a {what}")));
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let gh = group.op(g, h);
            if (0..perms[g].len()).any(|v| perms[gh][v] != perms[g][perms[h][v]]) {
                return Err(Error::InvalidAction(format!(
                    "{what} action is not a homomorphism at ({g}, {h})"
                )));
            }
        }
    }
    Ok(())
}

/// Extends permutations given on generators to the whole group, checking
/// that the assignment is consistent.
pub fn extend_from_generators(
    group: &FiniteGroup,
    size: usize,
    generators: &[(usize, Vec<usize>)],
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    for (g, p) in generators {
        group.check_index(*g)?;
        check_permutation(p, size, what)?;
    }
    let mut perms: Vec<Option<Vec<usize>>> = vec![None; group.order()];
    perms[0] = Some((0..size).collect());
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let px = perms[x].clone().expect("visited");
        for (s, ps) in generators {
            let y = group.op(x, *s);
            let py: Vec<usize> = (0..size).map(|v| px[ps[v]]).collect();
            match &perms[y] {
                Some(existing) if *existing != py => {
                    return Err(Error::InvalidAction(format!(
                        "{what} generators do not define a group action (conflict at element {y})"
                    )));
                }
                Some(_) => {}
                None => {
                    perms[y] = Some(py);
                    stack.push(y);
                }
            }
        }
    }
    perms
        .into_iter()
        .enumerate()
        .map(|(g, p)| {
            p.ok_or_else(|| Error::InvalidAction(format!("generators do not reach element {g}")))
        })
        .collect()
}

impl GraphAction {
    /// Validates a full action table. `edge_action = None` selects the
    /// canonical lift that sends the `k`-th edge `i -> j` to the `k`-th edge
    /// `g i -> g j`.
    pub fn new(
        adjacency: IntMatrix,
        group: FiniteGroup,
        vertex_action: Vec<Vec<usize>>,
        edge_action: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        adjacency.require_square()?;
        adjacency.require_nonnegative()?;
        let n = adjacency.nrows();
        let order = group.order();
        if vertex_action.len() != order {
            return Err(Error::InvalidAction(format!(
                "{} vertex permutations for a group of order {order}",
                vertex_action.len()
            )));
        }
        for p in &vertex_action {
            check_permutation(p, n, "vertex permutation")?;
        }
        check_homomorphism(&group, &vertex_action, "vertex")?;
        for (g, p) in vertex_action.iter().enumerate().skip(1) {
            if let Some(v) = (0..n).find(|&v| p[v] == v) {
                return Err(Error::NotFree { g, v });
            }
        }
        for (g, p) in vertex_action.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if adjacency.get(p[i], p[j]) != adjacency.get(i, j) {
                        return Err(Error::NotEquivariant { g, i, j });
                    }
                }
            }
        }

        let edge_action = match edge_action {
            None => None,
            Some(ea) => {
                if ea.len() != order {
                    return Err(Error::InvalidAction(format!(
                        "{} edge permutations for a group of order {order}",
                        ea.len()
                    )));
                }
                let edges = enumerate_edges(&adjacency)?;
                for (g, p) in ea.iter().enumerate() {
                    check_permutation(p, edges.len(), "edge permutation")?;
                    for (e, &(i, j, _)) in edges.iter().enumerate() {
                        let (s, t, _) = edges[p[e]];
                        if s != vertex_action[g][i] || t != vertex_action[g][j] {
                            return Err(Error::InvalidAction(format!(
                                "edge action of {g} does not cover the vertex action on edge {e}"
                            )));
                        }
                    }
                }
                check_homomorphism(&group, &ea, "edge")?;
                Some(ea)
            }
        };

        Ok(GraphAction {
            adjacency,
            group,
            vertex_action,
            edge_action,
        })
    }

    /// Builds the action from permutations of a generating set.
    pub fn from_generators(
        adjacency: IntMatrix,
        group: FiniteGroup,
        vertex_generators: &[(usize, Vec<usize>)],
        edge_generators: Option<&[(usize, Vec<usize>)]>,
    ) -> Result<Self> {
        let n = adjacency.nrows();
        let vertex_action = extend_from_generators(&group, n, vertex_generators, "vertex")?;
        let edge_action = match edge_generators {
            None => None,
            Some(gens) => {
                let m = enumerate_edges(&adjacency)?.len();
                Some(extend_from_generators(&group, m, gens, "edge")?)
            }
        };
        Self::new(adjacency, group, vertex_action, edge_action)
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex_action(&self) -> &[Vec<usize>] {
        &self.vertex_action
    }

    /// Edges in row-major order of `(source, target)`, then multiplicity.
    pub fn edges(&self) -> Result<Vec<Edge>> {
        enumerate_edges(&self.adjacency)
    }

    /// True when the edge action was supplied rather than implied.
    pub fn has_explicit_edge_action(&self) -> bool {
        self.edge_action.is_some()
    }

    /// The full edge action table; the canonical lift sends the `k`-th edge
    /// `i -> j` to the `k`-th edge `g i -> g j`.
    pub fn edge_action(&self) -> Result<Vec<Vec<usize>>> {
        if let Some(ea) = &self.edge_action {
            return Ok(ea.clone());
        }
        let edges = self.edges()?;
        let n = self.adjacency.nrows();
        let mut offsets = vec![0usize; n * n + 1];
        for &(i, j, _) in &edges {
            offsets[i * n + j + 1] += 1;
        }
        for k in 0..n * n {
            offsets[k + 1] += offsets[k];
        }
        Ok(self
            .vertex_action
            .iter()
            .map(|p| edges.iter().map(|&(i, j, k)| offsets[p[i] * n + p[j]] + k).collect())
            .collect())
    }

    /// `g . v`.
    pub fn act(&self, g: usize, v: usize) -> usize {
        self.vertex_action[g][v]
    }
}

/// Result of quotienting a free graph action.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub matrix: GroupRingMatrix,
    /// Orbit representatives (input vertex indices), one per row of `matrix`.
    pub representatives: Vec<usize>,
    /// `relabeling[v] = (i, g)` with `v = g . representatives[i]`.
    pub relabeling: Vec<(usize, usize)>,
}

/// Recovers `B` over `Z_+[G]` with `E(B)` equal to the input adjacency after
/// relabelling. The representative of each orbit is its smallest vertex, and
/// `pi_g(B[i][j])` counts edges from `v_i` to `g . v_j`.
pub fn quotient_presentation(action: &GraphAction) -> Result<Quotient> {
    let a = action.adjacency();
    let group = action.group();
    let n = a.nrows();
    let order = group.order();

    let mut relabeling: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut representatives = Vec::new();
    for v in 0..n {
        if relabeling[v].is_some() {
            continue;
        }
        let i = representatives.len();
        representatives.push(v);
        for g in 0..order {
            relabeling[action.act(g, v)] = Some((i, g));
        }
    }
    let relabeling: Vec<(usize, usize)> = relabeling
        .into_iter()
        .map(|x| x.expect("every vertex lies in an orbit"))
        .collect();

    let labels: Vec<Label> = representatives
        .iter()
        .map(|&v| a.row_labels()[v].clone())
        .collect();
    let m = representatives.len();
    let matrix = GroupRingMatrix::from_fn(group, labels.clone(), labels, |i, j| {
        let mut x = crate::ring::GroupRingElement::zero(group);
        for g in 0..order {
            *x.coeff_mut(g) = a
                .get(representatives[i], action.act(g, representatives[j]))
                .clone();
        }
        x
    });

    // E(B) must reproduce the adjacency under (i, g) -> g . v_i, and theta_B
    // must correspond to the input vertex action.
    let ext = extension_matrix(&matrix)?;
    let perm: Vec<usize> = (0..m * order)
        .map(|k| action.act(k % order, representatives[k / order]))
        .collect();
    if !ext.matrix.equal_up_to_relabeling(a, &perm) {
        return Err(Error::Invariant(
            "extension of the quotient does not reproduce the adjacency".into(),
        ));
    }
    for r in 0..order {
        for k in 0..m * order {
            if perm[ext.action.act(r, k)] != action.act(r, perm[k]) {
                return Err(Error::Invariant(
                    "quotient relabelling does not intertwine the actions".into(),
                ));
            }
        }
    }
    Ok(Quotient {
        matrix,
        representatives,
        relabeling,
    })
}

/// Inertness of a free graph action, decided on its quotient presentation
/// and cross-checked against `(A^l)[i][j] = (A^l)[i][g j]` on the input graph.
#[derive(Debug, Clone)]
pub struct GraphInertness {
    pub quotient: Quotient,
    /// Indices in the witness refer to the quotient matrix.
    pub certificate: InertnessCertificate,
}

pub fn graph_action_is_inert(action: &GraphAction) -> Result<GraphInertness> {
    let quotient = quotient_presentation(action)?;
    let certificate = is_inert(&quotient.matrix)?;
    let power = action.adjacency().pow(certificate.exponent)?;
    let n = power.nrows();
    let identity_holds = (0..action.group().order()).all(|g| {
        (0..n).all(|i| (0..n).all(|j| power.get(i, j) == power.get(i, action.act(g, j))))
    });
    if identity_holds != certificate.is_inert() {
        return Err(Error::Invariant(format!(
            "graph-level inertness test disagrees with the quotient at exponent {}",
            certificate.exponent
        )));
    }
    Ok(GraphInertness {
        quotient,
        certificate,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::group::{make_group, GroupSpec};
    use crate::matrix::find_permutation_similarity;
    use crate::ring::GroupRingElement;
    use proptest::prelude::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    pub(crate) fn two_vertex_b() -> GroupRingMatrix {
        GroupRingMatrix::from_coeffs(&z(2), &[vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![0, 0]]]).unwrap()
    }

    fn u_matrix(g: &FiniteGroup) -> GroupRingMatrix {
        GroupRingMatrix::from_parts(
            g.clone(),
            Label::indices(1),
            Label::indices(1),
            vec![GroupRingElement::u_element(g)],
        )
        .unwrap()
    }

    #[test]
    fn augmentation_of_example() {
        assert_eq!(augmentation_matrix(&two_vertex_b()).to_i64_rows(), vec![vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn augmentation_over_trivial_group() {
        let g = z(1);
        let b = GroupRingMatrix::from_coeffs(&g, &[vec![vec![3], vec![0]], vec![vec![2], vec![5]]]).unwrap();
        assert_eq!(augmentation_matrix(&b), b.project(0));
    }

    #[test]
    fn extension_of_example() {
        let ext = extension_matrix(&two_vertex_b()).unwrap();
        assert_eq!(
            ext.matrix.to_i64_rows(),
            vec![vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![1, 0, 0, 0]]
        );
        assert_eq!(ext.action.vertex_action()[1], vec![1, 0, 3, 2]);
    }

    #[test]
    fn extension_of_u() {
        let ext = extension_matrix(&u_matrix(&z(2))).unwrap();
        assert_eq!(ext.matrix.to_i64_rows(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn extension_over_trivial_group() {
        let g = z(1);
        let b = GroupRingMatrix::from_coeffs(&g, &[vec![vec![1], vec![2]], vec![vec![0], vec![1]]]).unwrap();
        let ext = extension_matrix(&b).unwrap();
        assert!(ext.matrix.same_entries(&b.project(0)));
        assert_eq!(ext.matrix.row_labels()[1], Label::pair(Label::Index(1), Label::Index(0)));
    }

    #[test]
    fn extension_rejects_negative_entries() {
        let b = GroupRingMatrix::from_coeffs(&z(2), &[vec![vec![0, -1]]]).unwrap();
        assert_eq!(extension_matrix(&b).unwrap_err(), Error::NegativeEntry { row: 0, col: 0 });
    }

    #[test]
    fn bounds() {
        assert_eq!(inertness_bound(&two_vertex_b()), 2);
        assert_eq!(inertness_bound(&u_matrix(&z(1))), 1);
        let v4 = make_group(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
        let b = GroupRingMatrix::zeros_in(&v4, Label::indices(3), Label::indices(3));
        assert_eq!(inertness_bound(&b), 9);
    }

    #[test]
    fn inert_examples() {
        for n in 1..=4 {
            let cert = is_inert(&u_matrix(&z(n))).unwrap();
            assert_eq!(cert.exponent, 1);
            assert_eq!(cert.witness, InertnessWitness::Inert { m: IntMatrix::from_i64(&[&[1]]) });
            assert!(zeta_equal(&u_matrix(&z(n))).unwrap());
        }
        let cert = is_inert(&two_vertex_b()).unwrap();
        assert!(!cert.is_inert());
        assert_eq!(cert.exponent, 2);
        assert!(cert.check(&two_vertex_b()).unwrap());
        // B^2 = [[u, g], [e, g]]: the first failing entry is (0, 1).
        assert_eq!(cert.witness, InertnessWitness::NotInert { g: 1, i: 0, j: 1 });
        assert!(!zeta_equal(&two_vertex_b()).unwrap());
    }

    #[test]
    fn least_exponent_is_reported() {
        // C = [[e, g], [e, g]] is not in u_G Z_+ but C^2 = u_G [[1,1],[1,1]].
        let c = GroupRingMatrix::from_coeffs(&z(2), &[vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 1]]]).unwrap();
        let cert = is_inert(&c).unwrap();
        assert_eq!(cert.exponent, 2);
        assert_eq!(cert.witness, InertnessWitness::Inert { m: IntMatrix::from_i64(&[&[1, 1], &[1, 1]]) });
        assert!(cert.check(&c).unwrap());
    }

    #[test]
    fn trivial_group_is_always_inert() {
        let g = z(1);
        let b = GroupRingMatrix::from_coeffs(&g, &[vec![vec![1], vec![1]], vec![vec![1], vec![0]]]).unwrap();
        assert!(is_inert(&b).unwrap().is_inert());
        assert!(zeta_equal(&b).unwrap());
    }

    fn swap_action() -> GraphAction {
        GraphAction::from_generators(IntMatrix::from_i64(&[&[1, 1], &[1, 1]]), z(2), &[(1, vec![1, 0])], None).unwrap()
    }

    pub(crate) fn four_vertex_action() -> GraphAction {
        let names = ["00", "01", "10", "11"];
        let labels: Vec<Label> = names.iter().map(|&s| Label::name(s)).collect();
        let a = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 0]])
            .with_labels(labels.clone(), labels)
            .unwrap();
        GraphAction::from_generators(a, z(2), &[(1, vec![3, 2, 1, 0])], None).unwrap()
    }

    #[test]
    fn quotient_of_full_two_shift() {
        let q = quotient_presentation(&swap_action()).unwrap();
        assert_eq!(q.matrix, u_matrix(&z(2)));
        assert_eq!(augmentation_matrix(&q.matrix).to_i64_rows(), vec![vec![2]]);
        assert_eq!(q.relabeling, vec![(0, 0), (0, 1)]);
        let r = graph_action_is_inert(&swap_action()).unwrap();
        assert!(r.certificate.is_inert());
    }

    #[test]
    fn quotient_of_four_vertex() {
        let action = four_vertex_action();
        let q = quotient_presentation(&action).unwrap();
        assert_eq!(q.representatives, vec![0, 1]);
        // B = [[0, e], [g, g]]
        let expect = GroupRingMatrix::from_coeffs(&z(2), &[vec![vec![0, 0], vec![1, 0]], vec![vec![0, 1], vec![0, 1]]])
            .unwrap()
            .with_labels(vec![Label::name("00"), Label::name("01")], vec![Label::name("00"), Label::name("01")])
            .unwrap();
        assert_eq!(q.matrix, expect);
        let aug = augmentation_matrix(&q.matrix);
        assert!(find_permutation_similarity(&aug, &IntMatrix::from_i64(&[&[1, 1], &[1, 0]])).is_some());
        let r = graph_action_is_inert(&action).unwrap();
        assert!(!r.certificate.is_inert());
    }

    #[test]
    fn trivial_group_quotient() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[1, 0]]);
        let action = GraphAction::from_generators(a.clone(), z(1), &[], None).unwrap();
        let q = quotient_presentation(&action).unwrap();
        assert_eq!(q.matrix.project(0), a);
        assert!(graph_action_is_inert(&action).unwrap().certificate.is_inert());
    }

    #[test]
    fn action_validation_errors() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        // not free
        assert_eq!(
            GraphAction::from_generators(a.clone(), z(2), &[(1, vec![0, 1])], None).unwrap_err(),
            Error::NotFree { g: 1, v: 0 }
        );
        // not equivariant
        let b = IntMatrix::from_i64(&[&[1, 0], &[1, 1]]);
        assert!(matches!(
            GraphAction::from_generators(b, z(2), &[(1, vec![1, 0])], None),
            Err(Error::NotEquivariant { g: 1, .. })
        ));
        // generator of order 2 cannot represent an element of order 3
        assert!(matches!(
            GraphAction::from_generators(IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]), z(3), &[(1, vec![1, 0, 2])], None),
            Err(Error::InvalidAction(_))
        ));
        // bad edge action: identity on edges while vertices swap
        let m = 4;
        assert!(matches!(
            GraphAction::from_generators(a, z(2), &[(1, vec![1, 0])], Some(&[(1, (0..m).collect())])),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn multigraph_edge_override() {
        // two parallel loops at each vertex; g swaps vertices and the loop index
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 2]]);
        // edges: (0,0,0)=0, (0,0,1)=1, (1,1,0)=2, (1,1,1)=3
        let act = GraphAction::from_generators(a, z(2), &[(1, vec![1, 0])], Some(&[(1, vec![3, 2, 1, 0])])).unwrap();
        assert_eq!(act.edge_action().unwrap()[1], vec![3, 2, 1, 0]);
        let q = quotient_presentation(&act).unwrap();
        assert_eq!(augmentation_matrix(&q.matrix).to_i64_rows(), vec![vec![2]]);
    }

    fn random_b() -> impl Strategy<Value = GroupRingMatrix> {
        (prop_oneof![Just(2usize), Just(3), Just(4)], 1usize..=3).prop_flat_map(|(order, n)| {
            proptest::collection::vec(0i64..=2, n * n * order).prop_map(move |v| {
                let g = z(order);
                let entries: Vec<Vec<Vec<i64>>> = v
                    .chunks(n * order)
                    .map(|row| row.chunks(order).map(<[i64]>::to_vec).collect())
                    .collect();
                GroupRingMatrix::from_coeffs(&g, &entries).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn inertness_matches_zeta_criterion(b in random_b()) {
            let cert = is_inert(&b).unwrap();
            prop_assert!(cert.check(&b).unwrap());
            prop_assert_eq!(cert.is_inert(), zeta_equal(&b).unwrap());
            let pa = augmentation_matrix(&b).reciprocal_charpoly().unwrap();
            let pe = extension_matrix(&b).unwrap().matrix.reciprocal_charpoly().unwrap();
            prop_assert!(pa.divides(&pe));
        }

        #[test]
        fn functoriality(b in random_b(), k in 1u32..=4) {
            let bk = b.pow(k).unwrap();
            prop_assert_eq!(augmentation_matrix(&bk), augmentation_matrix(&b).pow(k).unwrap());
            prop_assert_eq!(extension_matrix(&bk).unwrap().matrix, extension_matrix(&b).unwrap().matrix.pow(k).unwrap());
        }

        #[test]
        fn quotient_round_trip(b in random_b()) {
            let ext = extension_matrix(&b).unwrap();
            let q = quotient_presentation(&ext.action).unwrap();
            // representatives are (i, 1_G), so no relabelling is needed
            let order = b.group().order();
            prop_assert_eq!(q.representatives, (0..b.nrows()).map(|i| i * order).collect::<Vec<_>>());
            prop_assert!(q.matrix.same_entries(&b));
        }

        #[test]
        fn inert_certificate_factorizes_extension(b in random_b()) {
            let cert = is_inert(&b).unwrap();
            if let InertnessWitness::Inert { m } = &cert.witness {
                let g = b.group();
                let ones = IntMatrix::ones(Label::indices(g.order()), Label::indices(g.order()));
                let lhs = extension_matrix(&b).unwrap().matrix.pow(cert.exponent).unwrap();
                let rhs = m.kronecker(&ones).unwrap();
                prop_assert!(lhs.same_entries(&rhs));
                prop_assert_eq!(b.pow(cert.exponent).unwrap(), GroupRingMatrix::u_times(g, m));
            }
        }

        #[test]
        fn u_multiples_are_inert_at_one(v in proptest::collection::vec(0i64..=3, 4), order in 2usize..=4) {
            let m = IntMatrix::from_i64(&[&v[0..2], &v[2..4]]);
            let b = GroupRingMatrix::u_times(&z(order), &m);
            let cert = is_inert(&b).unwrap();
            prop_assert_eq!(cert.exponent, 1);
            prop_assert_eq!(cert.witness, InertnessWitness::Inert { m });
        }
    }
}

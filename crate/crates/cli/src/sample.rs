//! Seeded random instances for the self-test battery and the acceptance
//! suite.

use gsft_core::equivalence::{GroupRingWitness, IntWitness, SeWitness};
use gsft_core::gsft::{augmentation_matrix, is_inert};
use gsft_core::{FiniteGroup, GroupRingElement, GroupRingMatrix, IntMatrix, Label, Subgroup};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, max: i64) -> IntMatrix {
    IntMatrix::from_fn(&(), Label::indices(rows), Label::indices(cols), |_, _| {
        BigInt::from(rng.gen_range(0..=max))
    })
}

/// Square matrix with an entry in every row and column.
pub fn essential_matrix<R: Rng>(rng: &mut R, max_n: usize, max: i64) -> IntMatrix {
    loop {
        let n = rng.gen_range(1..=max_n);
        let m = int_matrix(rng, n, n, max);
        if m.structure_flags().essential {
            return m;
        }
    }
}

pub fn primitive_matrix<R: Rng>(rng: &mut R, max_n: usize, max: i64) -> IntMatrix {
    loop {
        let m = essential_matrix(rng, max_n, max);
        if m.structure_flags().primitive {
            return m;
        }
    }
}

/// Entries supported on `support` (ambient element indices), coefficients
/// in `0..=max`.
pub fn group_ring_matrix_on<R: Rng>(
    rng: &mut R,
    group: &FiniteGroup,
    support: &[usize],
    rows: usize,
    cols: usize,
    max: i64,
) -> GroupRingMatrix {
    GroupRingMatrix::from_fn(group, Label::indices(rows), Label::indices(cols), |_, _| {
        let mut x = GroupRingElement::zero(group);
        for &g in support {
            *x.coeff_mut(g) = BigInt::from(rng.gen_range(0..=max));
        }
        x
    })
}

pub fn group_ring_matrix<R: Rng>(rng: &mut R, group: &FiniteGroup, n: usize, max: i64) -> GroupRingMatrix {
    let all: Vec<usize> = (0..group.order()).collect();
    group_ring_matrix_on(rng, group, &all, n, n, max)
}

/// `u_G * M` for random `M`.
pub fn inert_multiple<R: Rng>(rng: &mut R, group: &FiniteGroup, max_n: usize, max: i64) -> GroupRingMatrix {
    let n = rng.gen_range(1..=max_n);
    GroupRingMatrix::u_times(group, &int_matrix(rng, n, n, max))
}

/// An inert matrix that is not necessarily a multiple of `u_G`, found by
/// rejection sampling with a multiple of `u_G` as fallback.
pub fn inert_matrix<R: Rng>(rng: &mut R, group: &FiniteGroup, max_n: usize) -> GroupRingMatrix {
    for _ in 0..64 {
        let n = rng.gen_range(1..=max_n);
        let b = group_ring_matrix(rng, group, n, 1);
        if is_inert(&b).is_ok_and(|c| c.is_inert()) {
            return b;
        }
    }
    inert_multiple(rng, group, max_n, 2)
}

/// A pair of inert matrices with a `Z_+` witness between their augmentations.
pub struct InertPair {
    pub b: GroupRingMatrix,
    pub c: GroupRingMatrix,
    pub witness: IntWitness,
}

/// Alternates two constructions: `u_G R0 S0` against `u_G S0 R0`, and an
/// inert `B` against a simultaneous row/column permutation of itself.
pub fn inert_pair<R: Rng>(rng: &mut R, group: &FiniteGroup, max_n: usize) -> InertPair {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=max_n);
        let k = rng.gen_range(1..=max_n);
        let r0 = int_matrix(rng, n, k, 2);
        let s0 = int_matrix(rng, k, n, 2);
        let order = BigInt::from(group.order());
        let m = r0.mul(&s0).expect("shapes agree");
        let m2 = s0.mul(&r0).expect("shapes agree");
        InertPair {
            b: GroupRingMatrix::u_times(group, &m),
            c: GroupRingMatrix::u_times(group, &m2),
            witness: SeWitness {
                r: r0.scale(&order),
                s: s0,
                lag: 1,
            },
        }
    } else {
        let b = inert_matrix(rng, group, max_n);
        let n = b.nrows();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let c = GroupRingMatrix::from_fn(group, Label::indices(n), Label::indices(n), |i, j| {
            b.get(perm[i], perm[j]).clone()
        });
        // P[i][k] = 1 iff k = perm^-1(i), so that P^T A P permutes by perm.
        let p = IntMatrix::from_fn(&(), Label::indices(n), Label::indices(n), |i, k| {
            BigInt::from(u8::from(perm[k] == i))
        });
        let a = augmentation_matrix(&b);
        let s = p.transpose().mul(&a).expect("square");
        InertPair {
            b,
            c,
            witness: SeWitness { r: p, s, lag: 1 },
        }
    }
}

/// A descent instance: `A`, `B` over `Z_+[H]` and a `Z_+[G]` witness built
/// by conjugating an elementary `H`-witness by a random element.
pub struct DescentInstance {
    pub a: GroupRingMatrix,
    pub b: GroupRingMatrix,
    pub subgroup: Subgroup,
    pub witness: GroupRingWitness,
    pub conjugator: usize,
}

pub fn descent_instance<R: Rng>(rng: &mut R, group: &FiniteGroup, h: &Subgroup) -> DescentInstance {
    loop {
        let n = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=2);
        let r0 = group_ring_matrix_on(rng, group, h.elements(), n, k, 1);
        let s0 = group_ring_matrix_on(rng, group, h.elements(), k, n, 1);
        let a = r0.mul(&s0).expect("shapes agree");
        let a2 = s0.mul(&r0).expect("shapes agree");
        let ok = |m: &GroupRingMatrix| {
            let f = m.structure_flags();
            f.irreducible && f.essential
        };
        if !ok(&a) || !ok(&a2) {
            continue;
        }
        let g = rng.gen_range(0..group.order());
        let gi = group.inv(g);
        return DescentInstance {
            b: a2.conjugate(gi),
            witness: SeWitness {
                r: r0.right_shift(g),
                s: s0.left_shift(gi),
                lag: 1,
            },
            a,
            subgroup: h.clone(),
            conjugator: g,
        };
    }
}

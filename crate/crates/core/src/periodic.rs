//! Periodic-point censuses of edge shifts and the Kim–Roush arithmetic
//! condition for free inert `Z/p` extensions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Counts for `n = 1..=horizon`; index `n - 1` holds period `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCensus {
    pub horizon: usize,
    /// `tr(A^n)`, the number of points of period `n`.
    pub per_counts: Vec<BigInt>,
    /// `o_n`, points of least period `n`.
    pub least_period_points: Vec<BigInt>,
    /// `o_n / n`, orbits of least period `n`.
    pub least_period_orbits: Vec<BigInt>,
}

impl PeriodicCensus {
    /// Runs Möbius inversion on `tr(A^n)` and checks the census invariants.
    pub fn from_traces(per_counts: Vec<BigInt>) -> Result<Self> {
        let horizon = per_counts.len();
        let mut points = Vec::with_capacity(horizon);
        let mut orbits = Vec::with_capacity(horizon);
        for n in 1..=horizon {
            let mut o = BigInt::zero();
            for d in divisors(n) {
                match mobius(n / d) {
                    1 => o += &per_counts[d - 1],
                    -1 => o -= &per_counts[d - 1],
                    _ => {}
                }
            }
            if o.is_negative() {
                return Err(Error::Invariant(format!("negative count of least period {n}")));
            }
            let (q, r) = o.div_rem(&BigInt::from(n));
            if !r.is_zero() {
                return Err(Error::Invariant(format!("{n} does not divide o_{n} = {o}")));
            }
            points.push(o);
            orbits.push(q);
        }
        for n in 1..=horizon {
            let total: BigInt = divisors(n).into_iter().map(|d| &points[d - 1]).sum();
            if total != per_counts[n - 1] {
                return Err(Error::Invariant(format!("least periods do not sum to tr(A^{n})")));
            }
        }
        Ok(PeriodicCensus {
            horizon,
            per_counts,
            least_period_points: points,
            least_period_orbits: orbits,
        })
    }

    pub fn per(&self, n: usize) -> &BigInt {
        &self.per_counts[n - 1]
    }

    pub fn points(&self, n: usize) -> &BigInt {
        &self.least_period_points[n - 1]
    }

    pub fn orbits(&self, n: usize) -> &BigInt {
        &self.least_period_orbits[n - 1]
    }
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The Möbius function.
pub fn mobius(mut n: usize) -> i8 {
    assert!(n > 0, "mobius(0) is undefined");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn require_edge_shift(a: &IntMatrix) -> Result<()> {
    a.require_square()?;
    a.require_nonnegative()
}

/// Exact census up to `horizon` from traces of powers of `A`.
pub fn census(a: &IntMatrix, horizon: usize) -> Result<PeriodicCensus> {
    require_edge_shift(a)?;
    if !a.structure_flags().essential {
        return Err(Error::Hypothesis("matrix is not essential".into()));
    }
    let mut traces = Vec::with_capacity(horizon);
    let mut power = a.identity_like();
    for _ in 0..horizon {
        power = power.mul(a)?;
        traces.push(power.trace()?);
    }
    PeriodicCensus::from_traces(traces)
}

/// Census by enumerating closed edge sequences. `budget` caps the number of
/// search nodes visited.
pub fn brute_force_census(a: &IntMatrix, horizon: usize, budget: u64) -> Result<PeriodicCensus> {
    require_edge_shift(a)?;
    let n = a.nrows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mult = u64::try_from(a.get(i, j)).map_err(|_| Error::BudgetExceeded(budget))?;
            if mult > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            for _ in 0..mult {
                edges.push((i, j));
            }
        }
    }
    let mut out_edges = vec![Vec::new(); n];
    for (e, &(i, _)) in edges.iter().enumerate() {
        out_edges[i].push(e);
    }

    let mut per = vec![0u64; horizon];
    let mut least = vec![0u64; horizon];
    let mut visited = 0u64;
    let mut path = Vec::with_capacity(horizon);
    // Explicit stack of (depth, next edge) to avoid recursion.
    for start in 0..edges.len() {
        path.clear();
        path.push(start);
        let mut cursors = vec![0usize];
        while let Some(cursor) = cursors.last_mut() {
            let len = path.len();
            if *cursor == 0 {
                visited += 1;
                if visited > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                if edges[path[len - 1]].1 == edges[start].0 {
                    per[len - 1] += 1;
                    if minimal_rotation_period(&path) == len {
                        least[len - 1] += 1;
                    }
                }
            }
            let head = edges[path[len - 1]].1;
            if len == horizon || *cursor == out_edges[head].len() {
                cursors.pop();
                path.pop();
                continue;
            }
            let next = out_edges[head][*cursor];
            *cursor += 1;
            path.push(next);
            cursors.push(0);
        }
    }
    let census = PeriodicCensus::from_traces(per.into_iter().map(BigInt::from).collect())?;
    let direct: Vec<BigInt> = least.into_iter().map(BigInt::from).collect();
    if direct != census.least_period_points {
        return Err(Error::Invariant("enumerated least periods disagree with Möbius inversion".into()));
    }
    Ok(census)
}

fn minimal_rotation_period(word: &[usize]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&d| n.is_multiple_of(d) && (0..n).all(|i| word[i] == word[(i + d) % n]))
        .unwrap_or(n)
}

/// Which sequence enters the Kim–Roush sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KimRoushMode {
    /// Orbit counts `o_n / n`; the sum must be an integer in `{0, ..., o_n / n}`.
    #[default]
    Orbits,
    /// Point counts `o_n`; the sum must lie in the real interval `[0, o_n]`.
    Points,
}

impl KimRoushMode {
    pub fn as_str(self) -> &'static str {
        match self {
            KimRoushMode::Orbits => "orbits",
            KimRoushMode::Points => "points",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KimRoushCheck {
    pub n: usize,
    /// Largest `m` with `p^m | n`.
    pub m: u32,
    pub sum: BigRational,
    pub points: BigInt,
    pub orbits: BigInt,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KimRoushVerdict {
    pub pass: bool,
    pub mode: KimRoushMode,
    pub p: u64,
    pub horizon: usize,
    /// One entry per `n <= horizon` divisible by `p`.
    pub checks: Vec<KimRoushCheck>,
}

impl KimRoushVerdict {
    pub fn first_failure(&self) -> Option<&KimRoushCheck> {
        self.checks.iter().find(|c| !c.ok)
    }
}

/// Evaluates `sum_{k=1}^m (p-1)/p^k x_{n/p^k}` for every `n <= horizon`
/// divisible by `p`. Passing is a necessary condition up to the horizon only.
pub fn kim_roush_condition(a: &IntMatrix, p: u64, horizon: usize, mode: KimRoushMode) -> Result<KimRoushVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if horizon == 0 {
        return Err(Error::Hypothesis("horizon must be at least 1".into()));
    }
    require_edge_shift(a)?;
    if !a.structure_flags().primitive {
        return Err(Error::Hypothesis("matrix is not primitive".into()));
    }
    let c = census(a, horizon)?;
    let pz = usize::try_from(p).unwrap_or(usize::MAX);
    let mut checks = Vec::new();
    for n in (1..=horizon).filter(|n| n % pz == 0) {
        let mut sum = BigRational::zero();
        let mut m = 0u32;
        let mut q = n;
        let mut pk = BigInt::one();
        while q % pz == 0 {
            q /= pz;
            m += 1;
            pk *= p;
            let x = match mode {
                KimRoushMode::Orbits => c.orbits(q),
                KimRoushMode::Points => c.points(q),
            };
            sum += BigRational::new(BigInt::from(p - 1) * x, pk.clone());
        }
        let ok = match mode {
            KimRoushMode::Orbits => {
                sum.is_integer() && !sum.is_negative() && sum.to_integer() <= *c.orbits(n)
            }
            KimRoushMode::Points => !sum.is_negative() && sum <= BigRational::from(c.points(n).clone()),
        };
        checks.push(KimRoushCheck {
            n,
            m,
            sum,
            points: c.points(n).clone(),
            orbits: c.orbits(n).clone(),
            ok,
        });
    }
    Ok(KimRoushVerdict {
        pass: checks.iter().all(|c| c.ok),
        mode,
        p,
        horizon,
        checks,
    })
}

//! JSON interchange formats.
//!
//! * group: `{"type": "cyclic", "order": n}`, `{"type": "table", "table": [[..]]}`
//!   or `{"type": "product", "factors": [..]}`;
//! * integer: a JSON integer, or a decimal string when it does not fit `i64`;
//! * label: integer, string, or a two-element array `[a, b]`;
//! * group-ring element: sparse object `{"g": coeff}` keyed by element index;
//!   a dense coefficient array and a bare integer `n` (meaning `n * 1_G`) are
//!   accepted on input;
//! * matrix: `{"rows": [..], "cols": [..], "entries": [[..]]}`, labels optional
//!   on input; a bare array of rows is accepted too. Group-ring matrices carry
//!   a `"group"` field;
//! * graph action: `{"adjacency", "group", "vertex_action": {"g": perm},
//!   "edge_action"?}` with permutations given on generators;
//! * witness: `{"R", "S", "lag", "domain": "Z+" | "Z+[G]"}`, plus `"group"`
//!   for the group-ring domain.
//!
//! Every emitter's output parses back to an equal value. Parsers reject
//! oversized input instead of allocating for it.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::equivalence::{Domain, EquationCheck, GroupRingWitness, IntWitness, SeReport, SeWitness};
use crate::error::{Error, Result};
use crate::flow::WeightClass;
use crate::group::{make_group, FiniteGroup, GroupSpec};
use crate::gsft::{GraphAction, InertnessCertificate, InertnessWitness, Quotient};
use crate::label::Label;
use crate::matrix::{GroupRingMatrix, IntMatrix, Matrix, Scalar};
use crate::periodic::{KimRoushVerdict, PeriodicCensus};
use crate::poly::ReciprocalCharPoly;
use crate::ring::GroupRingElement;

/// Largest accepted row or column count.
pub const MAX_DIM: usize = 512;
/// Largest accepted number of matrix cells.
pub const MAX_CELLS: usize = 1 << 16;
/// Longest accepted decimal string for an integer.
pub const MAX_DIGITS: usize = 4096;
const MAX_LABEL_DEPTH: usize = 16;
const MAX_FACTORS: usize = 16;

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn index_key(key: &str, path: &str) -> Result<usize> {
    if key.is_empty() || key.len() > 20 || !key.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(path, format!("key \"{key}\" is not an element index")));
    }
    key.parse().map_err(|_| err(path, format!("key \"{key}\" is not an element index")))
}

// ---- integers ----

pub fn bigint_from_json(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(err(path, "expected an integer"))
            }
        }
        Value::String(s) => {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || digits.len() > MAX_DIGITS || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(path, "expected a decimal integer string"));
            }
            s.parse().map_err(|_| err(path, "expected a decimal integer string"))
        }
        _ => Err(err(path, "expected an integer")),
    }
}

pub fn bigint_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(x.to_string()),
    }
}

// ---- groups ----

pub fn group_spec_from_json(v: &Value) -> Result<GroupSpec> {
    group_spec_at(v, "group", 0)
}

fn group_spec_at(v: &Value, path: &str, depth: usize) -> Result<GroupSpec> {
    if depth > MAX_LABEL_DEPTH {
        return Err(err(path, "group specification nested too deeply"));
    }
    let kind = field(v, "type", path)?
        .as_str()
        .ok_or_else(|| err(path, "\"type\" must be a string"))?;
    match kind {
        "cyclic" => Ok(GroupSpec::Cyclic(as_usize(field(v, "order", path)?, &format!("{path}.order"))?)),
        "table" => {
            let rows = as_array(field(v, "table", path)?, &format!("{path}.table"))?;
            if rows.len() > crate::group::DEFAULT_MAX_ORDER {
                return Err(Error::GroupTooLarge {
                    order: rows.len(),
                    cap: crate::group::DEFAULT_MAX_ORDER,
                });
            }
            let table = rows
                .iter()
                .enumerate()
                .map(|(a, row)| {
                    let p = format!("{path}.table[{a}]");
                    let row = as_array(row, &p)?;
                    if row.len() > crate::group::DEFAULT_MAX_ORDER {
                        return Err(err(&p, "row too long"));
                    }
                    row.iter().map(|x| as_usize(x, &p)).collect()
                })
                .collect::<Result<_>>()?;
            Ok(GroupSpec::Table(table))
        }
        "product" => {
            let factors = as_array(field(v, "factors", path)?, &format!("{path}.factors"))?;
            if factors.len() > MAX_FACTORS {
                return Err(err(path, "too many factors"));
            }
            let specs = factors
                .iter()
                .enumerate()
                .map(|(k, f)| group_spec_at(f, &format!("{path}.factors[{k}]"), depth + 1))
                .collect::<Result<_>>()?;
            Ok(GroupSpec::Product(specs))
        }
        other => Err(err(path, format!("unknown group type \"{other}\""))),
    }
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup> {
    make_group(&group_spec_from_json(v)?)
}

/// Cyclic groups in their standard numbering are written compactly; anything
/// else is written as its table.
pub fn group_to_json(g: &FiniteGroup) -> Value {
    let n = g.order();
    if FiniteGroup::cyclic(n).is_ok_and(|c| c == *g) {
        json!({"type": "cyclic", "order": n})
    } else {
        json!({"type": "table", "table": g.table()})
    }
}

// ---- labels ----

pub fn label_from_json(v: &Value, path: &str) -> Result<Label> {
    label_at(v, path, 0)
}

fn label_at(v: &Value, path: &str, depth: usize) -> Result<Label> {
    if depth > MAX_LABEL_DEPTH {
        return Err(err(path, "label nested too deeply"));
    }
    match v {
        Value::Number(_) => Ok(Label::Index(as_usize(v, path)?)),
        Value::String(s) => Ok(Label::Name(s.clone())),
        Value::Array(a) if a.len() == 2 => Ok(Label::pair(label_at(&a[0], path, depth + 1)?, label_at(&a[1], path, depth + 1)?)),
        _ => Err(err(path, "a label is an integer, a string or a pair [a, b]")),
    }
}

pub fn label_to_json(l: &Label) -> Value {
    match l {
        Label::Index(i) => Value::from(*i),
        Label::Name(s) => Value::String(s.clone()),
        Label::Pair(a, b) => Value::Array(vec![label_to_json(a), label_to_json(b)]),
    }
}

fn labels_to_json(ls: &[Label]) -> Value {
    Value::Array(ls.iter().map(label_to_json).collect())
}

// ---- group-ring elements ----

pub fn element_from_json(v: &Value, group: &FiniteGroup, path: &str) -> Result<GroupRingElement> {
    let order = group.order();
    match v {
        Value::Object(map) => {
            let mut x = GroupRingElement::zero(group);
            for (k, c) in map {
                let g = index_key(k, path)?;
                if g >= order {
                    return Err(Error::ElementOutOfRange { index: g, order });
                }
                *x.coeff_mut(g) = bigint_from_json(c, &format!("{path}.{k}"))?;
            }
            Ok(x)
        }
        Value::Array(a) => {
            if a.len() != order {
                return Err(err(path, format!("dense element needs {order} coefficients, got {}", a.len())));
            }
            let coeffs = a
                .iter()
                .enumerate()
                .map(|(k, c)| bigint_from_json(c, &format!("{path}[{k}]")))
                .collect::<Result<_>>()?;
            GroupRingElement::from_coeffs(group, coeffs)
        }
        _ => Ok(GroupRingElement::scalar(group, bigint_from_json(v, path)?)),
    }
}

pub fn element_to_json(x: &GroupRingElement) -> Value {
    let mut map = Map::new();
    for g in x.support() {
        map.insert(g.to_string(), bigint_to_json(x.coeff(g)));
    }
    Value::Object(map)
}

// ---- matrices ----

fn matrix_from_json<T: Scalar>(
    v: &Value,
    ctx: &T::Ctx,
    path: &str,
    entry: impl Fn(&Value, &str) -> Result<T>,
) -> Result<Matrix<T>> {
    let (grid, rows, cols) = match v {
        Value::Array(_) => (v, None, None),
        Value::Object(_) => (field(v, "entries", path)?, v.get("rows"), v.get("cols")),
        _ => return Err(err(path, "expected a matrix object or an array of rows")),
    };
    let grid = as_array(grid, &format!("{path}.entries"))?;
    let m = grid.len();
    if m > MAX_DIM {
        return Err(err(path, format!("more than {MAX_DIM} rows")));
    }
    let mut data = Vec::new();
    let mut n = None;
    for (i, row) in grid.iter().enumerate() {
        let p = format!("{path}.entries[{i}]");
        let row = as_array(row, &p)?;
        if *n.get_or_insert(row.len()) != row.len() {
            return Err(err(&p, "rows have different lengths"));
        }
        if row.len() > MAX_DIM || data.len() + row.len() > MAX_CELLS {
            return Err(err(path, "matrix too large"));
        }
        for (j, x) in row.iter().enumerate() {
            data.push(entry(x, &format!("{p}[{j}]"))?);
        }
    }
    let n = match (n, cols) {
        (Some(n), _) => n,
        (None, Some(c)) => as_array(c, &format!("{path}.cols"))?.len(),
        (None, None) => 0,
    };
    let labels = |lv: Option<&Value>, len: usize, what: &str| -> Result<Vec<Label>> {
        match lv {
            None => Ok(Label::indices(len)),
            Some(lv) => {
                let p = format!("{path}.{what}");
                let a = as_array(lv, &p)?;
                if a.len() != len {
                    return Err(err(&p, format!("{} labels for {len} {what}", a.len())));
                }
                a.iter().map(|l| label_from_json(l, &p)).collect()
            }
        }
    };
    let rows = labels(rows, m, "rows")?;
    let cols = labels(cols, n, "cols")?;
    Matrix::from_parts(ctx.clone(), rows, cols, data)
}

fn matrix_to_json<T: Scalar>(m: &Matrix<T>, entry: impl Fn(&T) -> Value) -> Map<String, Value> {
    let entries: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array(m.row(i).iter().map(&entry).collect()))
        .collect();
    let mut map = Map::new();
    map.insert("rows".into(), labels_to_json(m.row_labels()));
    map.insert("cols".into(), labels_to_json(m.col_labels()));
    map.insert("entries".into(), Value::Array(entries));
    map
}

pub fn int_matrix_from_json(v: &Value) -> Result<IntMatrix> {
    int_matrix_at(v, "matrix")
}

fn int_matrix_at(v: &Value, path: &str) -> Result<IntMatrix> {
    matrix_from_json(v, &(), path, bigint_from_json)
}

pub fn int_matrix_to_json(m: &IntMatrix) -> Value {
    Value::Object(matrix_to_json(m, bigint_to_json))
}

/// Reads a group-ring matrix. The `"group"` field is required unless a group
/// is supplied; when both are present they must agree.
pub fn group_ring_matrix_in(v: &Value, group: Option<&FiniteGroup>, path: &str) -> Result<GroupRingMatrix> {
    let own = match v.get("group") {
        Some(g) => Some(group_from_json(g)?),
        None => None,
    };
    let group = match (own, group) {
        (Some(a), Some(b)) if a != *b => return Err(Error::GroupMismatch),
        (Some(a), _) => a,
        (None, Some(b)) => b.clone(),
        (None, None) => return Err(err(path, "missing field \"group\"")),
    };
    matrix_from_json(v, &group.clone(), path, |x, p| element_from_json(x, &group, p))
}

pub fn group_ring_matrix_from_json(v: &Value) -> Result<GroupRingMatrix> {
    group_ring_matrix_in(v, None, "matrix")
}

pub fn group_ring_matrix_to_json(m: &GroupRingMatrix) -> Value {
    let mut map = matrix_to_json(m, element_to_json);
    map.insert("group".into(), group_to_json(m.group()));
    Value::Object(map)
}

// ---- graph actions ----

fn permutations_from_json(v: &Value, path: &str) -> Result<Vec<(usize, Vec<usize>)>> {
    let map = v.as_object().ok_or_else(|| err(path, "expected an object keyed by element index"))?;
    map.iter()
        .map(|(k, p)| {
            let g = index_key(k, path)?;
            let pp = format!("{path}.{k}");
            let arr = as_array(p, &pp)?;
            if arr.len() > crate::gsft::MAX_EDGES {
                return Err(err(&pp, "permutation too long"));
            }
            Ok((g, arr.iter().map(|x| as_usize(x, &pp)).collect::<Result<_>>()?))
        })
        .collect()
}

pub fn graph_action_from_json(v: &Value) -> Result<GraphAction> {
    let adjacency = int_matrix_at(field(v, "adjacency", "action")?, "action.adjacency")?;
    let group = group_from_json(field(v, "group", "action")?)?;
    let vertex = permutations_from_json(field(v, "vertex_action", "action")?, "action.vertex_action")?;
    let edge = match v.get("edge_action") {
        None | Some(Value::Null) => None,
        Some(e) => Some(permutations_from_json(e, "action.edge_action")?),
    };
    GraphAction::from_generators(adjacency, group, &vertex, edge.as_deref())
}

fn permutations_to_json(perms: &[Vec<usize>]) -> Value {
    let mut map = Map::new();
    for (g, p) in perms.iter().enumerate().skip(1) {
        map.insert(g.to_string(), json!(p));
    }
    Value::Object(map)
}

/// Writes the full vertex action table, and the edge action table when it
/// was given explicitly.
pub fn graph_action_to_json(a: &GraphAction) -> Value {
    let mut v = json!({
        "adjacency": int_matrix_to_json(a.adjacency()),
        "group": group_to_json(a.group()),
        "vertex_action": permutations_to_json(a.vertex_action()),
    });
    if a.has_explicit_edge_action() {
        let table = a.edge_action().expect("explicit tables are stored");
        v["edge_action"] = permutations_to_json(&table);
    }
    v
}

// ---- witnesses ----

fn domain_of(v: &Value) -> Result<Domain> {
    match field(v, "domain", "witness")?.as_str() {
        Some("Z+") => Ok(Domain::NonNegInt),
        Some("Z+[G]") => Ok(Domain::NonNegGroupRing),
        _ => Err(err("witness.domain", "expected \"Z+\" or \"Z+[G]\"")),
    }
}

fn lag_of(v: &Value) -> Result<u32> {
    let lag = field(v, "lag", "witness")?
        .as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| err("witness.lag", "expected a non-negative integer"))?;
    if lag > 4096 {
        return Err(err("witness.lag", "lag too large"));
    }
    Ok(lag)
}

pub fn int_witness_from_json(v: &Value) -> Result<IntWitness> {
    if domain_of(v)? != Domain::NonNegInt {
        return Err(err("witness.domain", "expected \"Z+\""));
    }
    Ok(SeWitness {
        r: int_matrix_at(field(v, "R", "witness")?, "witness.R")?,
        s: int_matrix_at(field(v, "S", "witness")?, "witness.S")?,
        lag: lag_of(v)?,
    })
}

/// Reads a `Z+[G]` witness; the group comes from the witness, its matrices,
/// or `group`.
pub fn group_ring_witness_from_json(v: &Value, group: Option<&FiniteGroup>) -> Result<GroupRingWitness> {
    if domain_of(v)? != Domain::NonNegGroupRing {
        return Err(err("witness.domain", "expected \"Z+[G]\""));
    }
    let own = match v.get("group") {
        Some(g) => Some(group_from_json(g)?),
        None => None,
    };
    let group = match (own, group) {
        (Some(a), Some(b)) if a != *b => return Err(Error::GroupMismatch),
        (Some(a), _) => Some(a),
        (None, b) => b.cloned(),
    };
    let r = group_ring_matrix_in(field(v, "R", "witness")?, group.as_ref(), "witness.R")?;
    let s = group_ring_matrix_in(field(v, "S", "witness")?, Some(r.group()), "witness.S")?;
    Ok(SeWitness { r, s, lag: lag_of(v)? })
}

pub fn int_witness_to_json(w: &IntWitness) -> Value {
    json!({
        "R": int_matrix_to_json(&w.r),
        "S": int_matrix_to_json(&w.s),
        "lag": w.lag,
        "domain": Domain::NonNegInt.as_str(),
    })
}

pub fn group_ring_witness_to_json(w: &GroupRingWitness) -> Value {
    let strip = |m: &GroupRingMatrix| {
        let mut v = group_ring_matrix_to_json(m);
        v.as_object_mut().expect("object").remove("group");
        v
    };
    json!({
        "R": strip(&w.r),
        "S": strip(&w.s),
        "lag": w.lag,
        "domain": Domain::NonNegGroupRing.as_str(),
        "group": group_to_json(w.r.group()),
    })
}

// ---- reports (output only) ----

fn equation_to_json(e: &EquationCheck) -> Value {
    json!({
        "equation": e.name,
        "holds": e.holds,
        "first_mismatch": e.first_mismatch.map(|(i, j)| json!([i, j])),
    })
}

pub fn se_report_to_json(r: &SeReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "domain": r.domain.as_str(),
        "lag": r.lag,
        "equations": r.equations.iter().map(equation_to_json).collect::<Vec<_>>(),
        "negative_entry": r.negative_entry.map(|(m, i, j)| json!({"matrix": m, "row": i, "col": j})),
    })
}

pub fn certificate_to_json(c: &InertnessCertificate) -> Value {
    match &c.witness {
        InertnessWitness::Inert { m } => json!({
            "inert": true,
            "exponent": c.exponent,
            "M": int_matrix_to_json(m),
        }),
        InertnessWitness::NotInert { g, i, j } => json!({
            "inert": false,
            "exponent": c.exponent,
            "g": g,
            "i": i,
            "j": j,
        }),
    }
}

pub fn charpoly_to_json(p: &ReciprocalCharPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

pub fn quotient_to_json(q: &Quotient) -> Value {
    json!({
        "matrix": group_ring_matrix_to_json(&q.matrix),
        "representatives": q.representatives,
        "relabeling": q.relabeling.iter().map(|&(i, g)| json!([i, g])).collect::<Vec<_>>(),
    })
}

pub fn census_to_json(c: &PeriodicCensus) -> Value {
    let ints = |v: &[BigInt]| Value::Array(v.iter().map(bigint_to_json).collect());
    json!({
        "horizon": c.horizon,
        "per_counts": ints(&c.per_counts),
        "least_period_points": ints(&c.least_period_points),
        "least_period_orbits": ints(&c.least_period_orbits),
    })
}

/// `n,per,points,orbits` with a header line.
pub fn census_to_csv(c: &PeriodicCensus) -> String {
    let mut out = String::from("n,per,points,orbits\n");
    for n in 1..=c.horizon {
        out.push_str(&format!("{n},{},{},{}\n", c.per(n), c.points(n), c.orbits(n)));
    }
    out
}

pub fn kim_roush_to_json(v: &KimRoushVerdict) -> Value {
    let checks: Vec<Value> = v
        .checks
        .iter()
        .map(|c| {
            json!({
                "n": c.n,
                "m": c.m,
                "sum": c.sum.to_string(),
                "points": bigint_to_json(&c.points),
                "orbits": bigint_to_json(&c.orbits),
                "ok": c.ok,
            })
        })
        .collect();
    json!({
        "pass": v.pass,
        "mode": v.mode.as_str(),
        "p": v.p,
        "up_to": v.horizon,
        "first_failure": v.first_failure().map(|c| c.n),
        "checks": checks,
    })
}

pub fn weight_class_to_json(w: &WeightClass) -> Value {
    json!({"base": w.base, "subgroup": w.subgroup.elements()})
}

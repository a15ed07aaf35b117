//! Job input: command-line lists and the versioned JSON schema.
//!
//! ```json
//! {"schema_version": "1", "type": "numerical", "generators": ["3", "5", "7"],
//!  "params": {"right": ["7", "12"], "b": ["1", "1"], "a": ["1", "1"]}}
//! ```
//!
//! Integers are decimal strings; plain non-negative JSON integers are accepted
//! too. Affine generators are lists of equal length. Errors carry the JSON
//! pointer of the offending value.

use std::fmt;

use serde_json::{json, Map, Value};

use semiglue::monomial::NatVector;
use semiglue::semigroups::{AffineSemigroup, ExtensionSpec, GluingSpec, NumericalSemigroup};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pointer.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.pointer, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn err(pointer: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError { pointer: pointer.into(), message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semigroup {
    Numerical(Vec<u64>),
    Affine(Vec<Vec<u64>>),
}

/// Parameters shared by the commands; each command reads what it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    /// Right factor of a gluing (numerical) or a join (affine).
    pub right: Option<Semigroup>,
    pub b: Option<Vec<u64>>,
    pub a: Option<Vec<u64>>,
    /// Extension scale and witness coefficients.
    pub l: Option<u64>,
    pub u: Option<Vec<u64>>,
    pub gap_box: Option<Vec<u64>>,
    pub degree_bound: Option<Vec<u64>>,
    pub upto: Option<u64>,
    /// A printed generator list to compare a star gluing against.
    pub printed: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobInput {
    pub semigroup: Semigroup,
    pub params: Params,
}

fn parse_u64(v: &Value, ptr: &str) -> Result<u64, InputError> {
    match v {
        Value::String(s) => {
            if s.starts_with('-') {
                return Err(err(ptr, format!("negative entry {s}")));
            }
            s.parse::<u64>().map_err(|_| err(ptr, format!("expected a decimal integer, got {s:?}")))
        }
        Value::Number(n) => n.as_u64().ok_or_else(|| {
            if n.as_i64().is_some_and(|x| x < 0) {
                err(ptr, format!("negative entry {n}"))
            } else {
                err(ptr, format!("expected a non-negative integer, got {n}"))
            }
        }),
        other => Err(err(ptr, format!("expected a decimal string, got {}", kind(other)))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn parse_list(v: &Value, ptr: &str) -> Result<Vec<u64>, InputError> {
    let arr = v.as_array().ok_or_else(|| err(ptr, format!("expected an array, got {}", kind(v))))?;
    arr.iter().enumerate().map(|(i, x)| parse_u64(x, &format!("{ptr}/{i}"))).collect()
}

/// Numerical generators may be given flat (`["3","5"]`) or as one-element vectors.
fn parse_numerical(v: &Value, ptr: &str) -> Result<Vec<u64>, InputError> {
    let arr = v.as_array().ok_or_else(|| err(ptr, format!("expected an array, got {}", kind(v))))?;
    if arr.is_empty() {
        return Err(err(ptr, "no generators"));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{ptr}/{i}");
            match x {
                Value::Array(inner) if inner.len() == 1 => parse_u64(&inner[0], &format!("{p}/0")),
                Value::Array(inner) => Err(err(p, format!("numerical generator must have one entry, got {}", inner.len()))),
                _ => parse_u64(x, &p),
            }
        })
        .collect()
}

fn parse_affine(v: &Value, ptr: &str) -> Result<Vec<Vec<u64>>, InputError> {
    let arr = v.as_array().ok_or_else(|| err(ptr, format!("expected an array, got {}", kind(v))))?;
    if arr.is_empty() {
        return Err(err(ptr, "no generators"));
    }
    let rows: Vec<Vec<u64>> = arr.iter().enumerate().map(|(i, x)| parse_list(x, &format!("{ptr}/{i}"))).collect::<Result<_, _>>()?;
    let d = rows[0].len();
    if d == 0 {
        return Err(err(format!("{ptr}/0"), "empty generator"));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != d) {
        return Err(err(format!("{ptr}/{i}"), format!("expected {d} entries, got {}", rows[i].len())));
    }
    Ok(rows)
}

fn parse_semigroup(kind_name: &str, v: &Value, ptr: &str) -> Result<Semigroup, InputError> {
    match kind_name {
        "numerical" => parse_numerical(v, ptr).map(Semigroup::Numerical),
        "affine" => parse_affine(v, ptr).map(Semigroup::Affine),
        _ => unreachable!("type checked by the caller"),
    }
}

pub fn parse_input(text: &str) -> Result<JobInput, InputError> {
    let root: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
    let obj = root.as_object().ok_or_else(|| err("", "expected a JSON object"))?;
    if let Some(v) = obj.get("schema_version") {
        if v.as_str() != Some(SCHEMA_VERSION) {
            return Err(err("/schema_version", format!("unsupported schema version {v}, expected \"{SCHEMA_VERSION}\"")));
        }
    }
    let ty = obj.get("type").ok_or_else(|| err("/type", "missing"))?;
    let ty = match ty.as_str() {
        Some(t @ ("numerical" | "affine")) => t,
        _ => return Err(err("/type", format!("expected \"numerical\" or \"affine\", got {ty}"))),
    };
    let gens = obj.get("generators").ok_or_else(|| err("/generators", "missing"))?;
    let semigroup = parse_semigroup(ty, gens, "/generators")?;
    let params = match obj.get("params") {
        None | Some(Value::Null) => Params::default(),
        Some(Value::Object(p)) => parse_params(ty, p)?,
        Some(other) => return Err(err("/params", format!("expected an object, got {}", kind(other)))),
    };
    Ok(JobInput { semigroup, params })
}

fn parse_params(ty: &str, p: &Map<String, Value>) -> Result<Params, InputError> {
    let mut out = Params::default();
    for (key, v) in p {
        let ptr = format!("/params/{key}");
        match key.as_str() {
            "right" => out.right = Some(parse_semigroup(ty, v, &ptr)?),
            "b" => out.b = Some(parse_list(v, &ptr)?),
            "a" => out.a = Some(parse_list(v, &ptr)?),
            "l" => out.l = Some(parse_u64(v, &ptr)?),
            "u" => out.u = Some(parse_list(v, &ptr)?),
            "gap_box" => out.gap_box = Some(parse_list(v, &ptr)?),
            "degree_bound" => out.degree_bound = Some(parse_list(v, &ptr)?),
            "upto" => out.upto = Some(parse_u64(v, &ptr)?),
            "printed" => out.printed = Some(parse_list(v, &ptr)?),
            _ => return Err(err(ptr, "unknown parameter")),
        }
    }
    Ok(out)
}

/// `"3,5,7"`.
pub fn parse_csv(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| {
            if x.starts_with('-') {
                Err(format!("negative entry {x}"))
            } else {
                x.parse::<u64>().map_err(|_| format!("not a non-negative integer: {x:?}"))
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| if v.is_empty() { Err("empty list".into()) } else { Ok(v) })
}

/// `"3,0;5,0;0,1"`: one vector per `;`.
pub fn parse_vectors(s: &str) -> Result<Vec<Vec<u64>>, String> {
    let rows: Vec<Vec<u64>> = s.split(';').filter(|r| !r.trim().is_empty()).map(parse_csv).collect::<Result<_, _>>()?;
    let d = rows.first().ok_or("no vectors")?.len();
    if rows.iter().any(|r| r.len() != d) {
        return Err(format!("vectors of unequal length in {s:?}"));
    }
    Ok(rows)
}

fn strs(v: &[u64]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn semigroup_value(s: &Semigroup) -> Value {
    match s {
        Semigroup::Numerical(g) => strs(g),
        Semigroup::Affine(rows) => Value::Array(rows.iter().map(|r| strs(r)).collect()),
    }
}

impl JobInput {
    /// The input in the published schema; `parse_input` reads it back.
    pub fn to_json(&self) -> Value {
        let ty = match self.semigroup {
            Semigroup::Numerical(_) => "numerical",
            Semigroup::Affine(_) => "affine",
        };
        let mut params = Map::new();
        let p = &self.params;
        if let Some(r) = &p.right {
            params.insert("right".into(), semigroup_value(r));
        }
        for (k, v) in [("b", &p.b), ("a", &p.a), ("u", &p.u), ("gap_box", &p.gap_box), ("degree_bound", &p.degree_bound), ("printed", &p.printed)] {
            if let Some(v) = v {
                params.insert(k.into(), strs(v));
            }
        }
        for (k, v) in [("l", p.l), ("upto", p.upto)] {
            if let Some(v) = v {
                params.insert(k.into(), Value::String(v.to_string()));
            }
        }
        json!({
            "schema_version": SCHEMA_VERSION,
            "type": ty,
            "generators": semigroup_value(&self.semigroup),
            "params": Value::Object(params),
        })
    }
}

pub fn numerical(gens: &[u64]) -> Result<NumericalSemigroup, semiglue::Error> {
    NumericalSemigroup::new(gens.to_vec())
}

pub fn affine(rows: &[Vec<u64>]) -> Result<AffineSemigroup, semiglue::Error> {
    AffineSemigroup::new(rows.iter().map(|r| NatVector::new(r.clone())).collect())
}

impl Semigroup {
    /// Numerical semigroups become submonoids of `N^1`.
    pub fn to_affine(&self) -> Result<AffineSemigroup, semiglue::Error> {
        match self {
            Semigroup::Numerical(g) => Ok(numerical(g)?.to_affine()),
            Semigroup::Affine(rows) => affine(rows),
        }
    }
}

impl JobInput {
    pub fn gluing(&self) -> Result<GluingSpec, InputError> {
        let Semigroup::Numerical(left) = &self.semigroup else {
            return Err(err("/type", "a gluing needs numerical factors"));
        };
        let Some(Semigroup::Numerical(right)) = &self.params.right else {
            return Err(err("/params/right", "missing right factor"));
        };
        let b = self.params.b.clone().ok_or_else(|| err("/params/b", "missing"))?;
        let a = self.params.a.clone().ok_or_else(|| err("/params/a", "missing"))?;
        let l = numerical(left).map_err(|e| err("/generators", e.to_string()))?;
        let r = numerical(right).map_err(|e| err("/params/right", e.to_string()))?;
        Ok(GluingSpec::new(l, r, b, a))
    }

    pub fn extension(&self) -> Result<ExtensionSpec, InputError> {
        let base = self.semigroup.to_affine().map_err(|e| err("/generators", e.to_string()))?;
        let l = self.params.l.ok_or_else(|| err("/params/l", "missing"))?;
        let u = self.params.u.clone().ok_or_else(|| err("/params/u", "missing"))?;
        Ok(ExtensionSpec::new(base, l, u))
    }

    pub fn join_factors(&self) -> Result<(AffineSemigroup, AffineSemigroup), InputError> {
        let right = self.params.right.as_ref().ok_or_else(|| err("/params/right", "missing right factor"))?;
        match (&self.semigroup, right) {
            (Semigroup::Numerical(l), Semigroup::Numerical(r)) => {
                let l = numerical(l).map_err(|e| err("/generators", e.to_string()))?;
                let r = numerical(r).map_err(|e| err("/params/right", e.to_string()))?;
                let j = semiglue::semigroups::axis_join(&l, &r).map_err(|e| err("", e.to_string()))?;
                Ok((j.left, j.right))
            }
            (Semigroup::Affine(l), Semigroup::Affine(r)) => Ok((
                affine(l).map_err(|e| err("/generators", e.to_string()))?,
                affine(r).map_err(|e| err("/params/right", e.to_string()))?,
            )),
            _ => Err(err("/params/right", "factors must have the same type")),
        }
    }
}

//! JSON rendering. Integers are emitted as decimal strings, booleans as booleans.

use serde_json::{json, Value};

use semiglue::monomial::NatVector;
use semiglue::resolution::BettiTable;
use semiglue::theorems::{Fact, ReportStatus, TheoremReport};
use semiglue::verdicts::{CheckOutcome, Verdict};

pub fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| num(x.to_string())).collect())
}

pub fn vector(v: &NatVector) -> Value {
    nums(v.entries())
}

pub fn vectors(vs: &[NatVector]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn verdict(v: &Verdict) -> Value {
    let checks: Vec<Value> = v
        .cross_checks
        .iter()
        .map(|c| {
            let (outcome, value, reason) = match &c.outcome {
                CheckOutcome::Completed(b) => ("completed", Value::Bool(*b), Value::Null),
                CheckOutcome::Skipped(why) => ("skipped", Value::Null, Value::String(why.clone())),
            };
            json!({"method": c.method, "outcome": outcome, "value": value, "reason": reason, "detail": c.detail})
        })
        .collect();
    json!({
        "property": v.property,
        "holds": v.holds,
        "method": v.method,
        "witness": v.witness,
        "conflict": v.is_conflict(),
        "cross_checks": checks,
    })
}

pub fn betti(t: &BettiTable) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(|(d, m)| json!({"degree": vector(d), "multiplicity": num(m)})).collect()))
        .collect();
    json!({
        "totals": nums(&t.totals()),
        "projective_dimension": num(t.projective_dimension()),
        "degrees": rows,
    })
}

fn fact(f: &Fact) -> Value {
    match f {
        Fact::Bool(b) => Value::Bool(*b),
        Fact::Numbers(v) => nums(v),
        Fact::Vectors(v) => vectors(v),
        Fact::Table(rows) => Value::Array(rows.iter().map(|r| vectors(r)).collect()),
    }
}

pub fn status_id(s: ReportStatus) -> &'static str {
    match s {
        ReportStatus::Agree => "agree",
        ReportStatus::HypothesesFail => "hypotheses_fail",
        ReportStatus::Conflict => "conflict",
        ReportStatus::Discrepancy => "discrepancy",
    }
}

pub fn theorem(r: &TheoremReport) -> Value {
    let claims = |cs: &[semiglue::theorems::Claim]| -> Value {
        Value::Array(cs.iter().map(|c| json!({"name": c.name, "value": fact(&c.value)})).collect())
    };
    let hyps: Vec<Value> = r
        .hypotheses
        .iter()
        .map(|h| json!({"name": h.name, "holds": h.holds, "informational": h.informational, "detail": h.detail}))
        .collect();
    json!({
        "statement": r.statement.id(),
        "instance": r.instance,
        "status": status_id(r.status()),
        "agree": r.agree,
        "hypotheses": hyps,
        "predicted": claims(&r.predicted),
        "computed": claims(&r.computed),
        "notes": r.notes,
        "discrepancies": r.discrepancies,
        "internal_conflict": r.internal_conflict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiglue::semigroups::NumericalSemigroup;
    use semiglue::verdicts::gorenstein_numerical;

    #[test]
    fn integers_are_strings() {
        assert_eq!(nums(&[3u64, 5]), json!(["3", "5"]));
        assert_eq!(vector(&NatVector::new(vec![7, 2])), json!(["7", "2"]));
    }

    #[test]
    fn verdict_shape() {
        let v = gorenstein_numerical(&NumericalSemigroup::new(vec![3, 5]).unwrap());
        let j = verdict(&v);
        assert_eq!(j["holds"], json!(true));
        assert_eq!(j["conflict"], json!(false));
        assert!(j["cross_checks"].as_array().unwrap().iter().all(|c| c["outcome"] == "completed"));
    }
}

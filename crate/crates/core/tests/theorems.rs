use semiglue::monomial::NatVector;
use semiglue::population::{gluing_population, Bounds};
use semiglue::semigroups::{AffineSemigroup, GluingSpec, NumericalSemigroup};
use semiglue::theorems::*;
use semiglue::verdicts::VerdictOptions;
use semiglue::Deadline;

fn gluing(l: &[u64], r: &[u64], b: &[u64], a: &[u64]) -> GluingSpec {
    GluingSpec::new(
        NumericalSemigroup::new(l.to_vec()).unwrap(),
        NumericalSemigroup::new(r.to_vec()).unwrap(),
        b.to_vec(),
        a.to_vec(),
    )
}

fn run(statement: Statement, s: &GluingSpec) -> TheoremReport {
    let o = VerdictOptions::default();
    match statement {
        Statement::GluingBasis => verify_gluing_basis(s, Deadline::NONE),
        Statement::ClosureAcm => verify_closure_acm(s, &o),
        Statement::TangentCone => verify_tangent_glue(s, &o),
        Statement::ClosureGorenstein => verify_closure_gorenstein(s, &o),
        other => panic!("{other} takes no plain gluing"),
    }
    .unwrap()
}

const NEUTRAL: &str = "lcm(m,0)=m";
const ABSORBING: &str = "lcm(m,0)=0";

/// Hypotheses that gate a report when the lcm conditions are read with `reading`.
fn gating<'a>(r: &'a TheoremReport, reading: &str) -> Vec<&'a Hypothesis> {
    r.hypotheses
        .iter()
        .filter(|h| {
            if h.name.contains(NEUTRAL) || h.name.contains(ABSORBING) {
                h.name.contains(reading)
            } else {
                !h.informational
            }
        })
        .collect()
}

#[test]
fn worked_instances_statuses() {
    let reports = worked_instances(&VerdictOptions::default()).unwrap();
    let count = |st: Statement, status: ReportStatus| {
        reports.iter().filter(|r| r.statement == st && r.status() == status).count()
    };
    assert_eq!(count(Statement::DisplayedGluingBasis, ReportStatus::Discrepancy), 1);
    assert_eq!(count(Statement::StarGenerators, ReportStatus::Discrepancy), 1);
    assert_eq!(count(Statement::JoinSifr, ReportStatus::Agree), 3);
    assert_eq!(count(Statement::Extension, ReportStatus::Agree), 1);
    assert_eq!(count(Statement::Extension, ReportStatus::Discrepancy), 1);
    // with lcm(m,0)=m no worked gluing meets the lcm conditions
    for st in [Statement::GluingBasis, Statement::ClosureAcm, Statement::TangentCone, Statement::ClosureGorenstein] {
        assert!(reports.iter().filter(|r| r.statement == st).all(|r| r.status() == ReportStatus::HypothesesFail));
    }
    assert!(reports.iter().all(|r| r.status() != ReportStatus::Conflict), "a worked instance conflicts");
}

#[test]
fn closure_verdicts_on_worked_gluings() {
    let o = VerdictOptions::default();
    let expect = [
        (fixtures::small_gluing(), false),
        (fixtures::counterexample(), false),
        (fixtures::nice_left_largest(), false),
        (fixtures::nice_right_largest(), true),
    ];
    for (s, acm) in expect {
        let r = verify_closure_acm(&s, &o).unwrap();
        assert_eq!(r.computed[0].value, Fact::Bool(acm), "{r}");
        assert!(!r.internal_conflict);
    }
}

#[test]
fn matrix_extension_is_flagged_for_its_infinite_gap_set() {
    let r = verify_extension(&fixtures::matrix_extension(), None, &semiglue::semigroups::TermOrderNd::graded_lex(2), Deadline::NONE)
        .unwrap();
    assert!(r.hypotheses_hold());
    let get = |name: &str, side: &[Claim]| side.iter().find(|c| c.name == name).unwrap().value.clone();
    let pf = Fact::Vectors(vec![NatVector::new(vec![20, 13])]);
    assert_eq!(get("PF via Betti degrees", &r.computed), pf);
    assert_eq!(get("PF via Betti degrees", &r.predicted), pf);
    assert_eq!(get("Betti degrees", &r.computed), get("Betti degrees", &r.predicted));
    assert_eq!(get("extension is ≺-symmetric", &r.computed), Fact::Bool(false));
    assert!(r.discrepancies[0].contains("finite"), "{r}");
}

/// Each gating check, dropped, would let a curated counter-instance through:
/// the check is the only one failing and the prediction is wrong.
#[test]
fn hypotheses_are_load_bearing() {
    let cases: [(Statement, GluingSpec, &str, &str); 12] = [
        (Statement::GluingBasis, gluing(&[6, 11], &[5, 12], &[1, 2], &[1, 1]), "lcm condition on b", NEUTRAL),
        (Statement::ClosureAcm, gluing(&[6, 11], &[5, 12], &[1, 2], &[1, 1]), "lcm condition on b", NEUTRAL),
        (Statement::TangentCone, gluing(&[6, 11], &[5, 12], &[1, 2], &[1, 1]), "lcm condition on a", NEUTRAL),
        (Statement::ClosureGorenstein, gluing(&[6, 11], &[5, 12], &[1, 2], &[1, 1]), "lcm condition on b", NEUTRAL),
        // hypotheses masked by the lcm condition above become visible under the other reading
        (Statement::GluingBasis, gluing(&[5, 9], &[2, 7], &[1, 2], &[2, 3]), "generalized nice", ABSORBING),
        (Statement::ClosureAcm, gluing(&[5, 6], &[5, 7], &[1, 1], &[3, 3]), "generalized nice", ABSORBING),
        (Statement::ClosureAcm, gluing(&[4, 7, 10], &[3, 7], &[1, 3, 0], &[2, 1]), "lcm condition on b", ABSORBING),
        (Statement::ClosureAcm, gluing(&[4, 5], &[7, 11, 12], &[2, 3], &[2, 2, 0]), "right closure ACM", ABSORBING),
        (Statement::TangentCone, gluing(&[5, 9], &[2, 7], &[1, 2], &[2, 3]), "star gluing", ABSORBING),
        (Statement::TangentCone, gluing(&[7, 10, 11], &[4, 11], &[2, 2, 0], &[0, 3]), "lcm condition on a", ABSORBING),
        (Statement::ClosureGorenstein, gluing(&[5, 9], &[2, 7], &[1, 2], &[2, 3]), "generalized nice", ABSORBING),
        (Statement::ClosureGorenstein, gluing(&[6, 7, 8], &[5, 8, 11], &[3, 1, 1], &[1, 2, 1]), "right closure Gorenstein", ABSORBING),
    ];
    for (st, spec, check, reading) in cases {
        let r = run(st, &spec);
        let gate = gating(&r, reading);
        let failing: Vec<&str> = gate.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
        assert_eq!(failing.len(), 1, "{st}: {failing:?}\n{r}");
        assert!(failing[0].starts_with(check), "{st}: {failing:?}");
        assert!(!r.agree, "{st} agrees anyway on {}", r.instance);
    }
}

/// With `lcm(m,0)=0` every hypothesis holds on this gluing, yet all four
/// statements are contradicted; `lcm(m,0)=m` is the reading that keeps them.
#[test]
fn absorbing_lcm_reading_is_contradicted() {
    let s = gluing(&[6, 11], &[5, 12], &[1, 2], &[1, 1]);
    for st in [Statement::GluingBasis, Statement::ClosureAcm, Statement::TangentCone, Statement::ClosureGorenstein] {
        let r = run(st, &s);
        assert!(gating(&r, ABSORBING).iter().all(|h| h.holds), "{r}");
        assert!(!r.agree, "{r}");
        assert_eq!(r.status(), ReportStatus::HypothesesFail);
    }
}

#[test]
fn no_conflicts_on_a_gluing_population() {
    let o = VerdictOptions { betti_budget: 100_000, ..VerdictOptions::default() };
    let pop = gluing_population(11, 60, Bounds { max_generators: 3, max_generator: 12 }, 2, |_| true);
    assert!(pop.len() >= 50);
    for s in &pop {
        for r in [
            verify_gluing_basis(s, Deadline::NONE).unwrap(),
            verify_closure_acm(s, &o).unwrap(),
            verify_tangent_glue(s, &o).unwrap(),
            verify_closure_gorenstein(s, &o).unwrap(),
        ] {
            assert_ne!(r.status(), ReportStatus::Conflict, "{r}");
        }
    }
}

#[test]
fn two_generated_factors_without_the_inherited_condition() {
    let reports = two_generated_suite(3, &VerdictOptions::default()).unwrap();
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert_eq!(r.status(), ReportStatus::HypothesesFail, "{r}");
    }
    // <2,3> # <2,5> is ACM but its closure has three top syzygies
    let first = &reports[0];
    assert!(first.instance.ends_with("glued <14,21,16,40>"), "{first}");
    assert_eq!(first.computed[0].value, Fact::Bool(false));
    assert!(first.notes.iter().any(|n| n.contains("inherited")), "{first}");
}

#[test]
fn join_with_a_non_sifr_factor() {
    let r = verify_join_sifr(&fixtures::axis(&fixtures::non_sifr(), 0), &fixtures::axis(&[2, 3], 1), Deadline::NONE).unwrap();
    assert_eq!(r.computed[0].value, Fact::Bool(false));
    assert_eq!(r.status(), ReportStatus::Agree);
}

#[test]
fn join_of_planar_factors() {
    let left = AffineSemigroup::new(vec![NatVector::new(vec![2, 0, 0]), NatVector::new(vec![3, 0, 0])]).unwrap();
    let right = AffineSemigroup::new(vec![
        NatVector::new(vec![0, 2, 0]),
        NatVector::new(vec![0, 0, 2]),
        NatVector::new(vec![0, 1, 1]),
    ])
    .unwrap();
    let r = verify_join_sifr(&left, &right, Deadline::NONE).unwrap();
    assert_eq!(r.status(), ReportStatus::Agree, "{r}");
}

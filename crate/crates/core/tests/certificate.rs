//! Certificate content, canonical form, and tamper detection.

use hurwitz98::certificate::{reverify, Certificate, Outcome};
use hurwitz98::pipeline::run_construction;
use hurwitz98::verify::Status;

fn success(seed: u64) -> Certificate {
    let cert = run_construction(10007, seed, 10).unwrap();
    assert!(cert.is_success(), "seed {seed}: {}", cert.status);
    cert
}

#[test]
fn success_certificate_contents() {
    let cert = success(3);
    let v = cert.verdicts.as_ref().unwrap();
    assert_eq!(cert.points_p.len(), 12);
    assert_eq!(cert.points_r.len(), 5);
    assert_eq!(cert.pencil.len(), 2);
    assert_eq!(cert.coordinate_change.len(), 3);
    assert_eq!(v.nodes.nodes.len(), 12);
    assert!(v
        .nodes
        .nodes
        .iter()
        .all(|n| n.ordinary && n.discriminant != 0));
    assert_eq!(v.ramification.branch_form.len(), 33);
    assert_eq!(v.ramification.elimination_agrees, Some(true));
    assert_eq!(v.profile.generators, vec![0, 0, 0, 0, 3, 0, 0, 0, 0]);
    assert_eq!(v.profile.syzygies, vec![0, 0, 0, 0, 0, 0, 2, 0, 0]);
}

#[test]
fn round_trip_and_canonical_text() {
    let cert = success(4);
    let text = cert.to_json();
    assert!(text.ends_with("}\n"));
    let back = Certificate::from_json(&text).unwrap();
    assert_eq!(back, cert);
    assert_eq!(back.to_json(), text);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let n = cert.write(&path).unwrap();
    assert_eq!(n, text.len());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    assert_eq!(Certificate::read(&path).unwrap(), cert);
}

#[test]
fn untouched_certificates_reproduce() {
    for seed in [5, 6] {
        let report = reverify(&success(seed)).unwrap();
        assert_eq!(report.outcome, Outcome::Reproduced);
        assert!(report.mismatches().is_empty());
    }
}

#[test]
fn perturbed_octic_is_tampered() {
    let mut cert = success(1);
    // every recorded point has z != 0 in working coordinates, so changing the
    // z^8 coefficient moves g off all twelve nodes
    let octic = cert.octic.as_mut().unwrap();
    match octic.terms.iter_mut().find(|(e, _)| *e == [0, 0, 8]) {
        Some((_, c)) => *c = (*c + 1) % 10007,
        None => octic.terms.push(([0, 0, 8], 1)),
    }
    let report = reverify(&cert).unwrap();
    assert_eq!(report.outcome, Outcome::Tampered);
    assert!(report.mismatches().contains(&"nodes"));
    assert!(matches!(report.status, Status::Failed { .. }));
}

#[test]
fn flipped_verdict_is_tampered() {
    let mut cert = success(1);
    cert.verdicts.as_mut().unwrap().curve_meets_r = true;
    let report = reverify(&cert).unwrap();
    assert_eq!(report.outcome, Outcome::Tampered);
    assert_eq!(report.mismatches(), vec!["curve_meets_r"]);
    assert_eq!(report.status, Status::Success);
}

#[test]
fn flipped_status_is_tampered() {
    let mut cert = success(1);
    cert.status = Status::failed("verify_nodes", "made up");
    assert_eq!(reverify(&cert).unwrap().outcome, Outcome::Tampered);
}

#[test]
fn wrong_schema_version_is_rejected() {
    let text = success(1)
        .to_json()
        .replace("\"schema_version\": \"1\"", "\"schema_version\": \"2\"");
    assert!(Certificate::from_json(&text).is_err());
}

#[test]
fn exhausted_small_field_run_certifies_its_failure() {
    let cert = run_construction(7, 1, 1).unwrap();
    assert!(!cert.is_success());
    assert!(cert.run.exhausted);
    let back = Certificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(reverify(&back).unwrap().outcome, Outcome::Reproduced);
}

use bqarrow::fixtures::*;
use bqarrow::io::*;
use bqarrow_core::{compute_invariant, parse_gauss_code, AlgebraError};
use std::io::Write;

fn temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn biquandle_round_trip() {
    for b in [flip_biquandle(), tricolor_biquandle()] {
        let j = BiquandleJson::from_biquandle(&b);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<BiquandleJson>(&text).unwrap().build().unwrap(), b);
    }
    let j: BiquandleJson = serde_json::from_str(FLIP_BIQUANDLE).unwrap();
    assert_eq!(j.under, vec![vec![2, 2], vec![1, 1]]);
}

#[test]
fn weight_round_trip() {
    for w in [z8_weight(), w1_weight(), w2_weight(), tricolor_z3_weight()] {
        let text = serde_json::to_string(&WeightJson::from_weight(&w)).unwrap();
        assert_eq!(serde_json::from_str::<WeightJson>(&text).unwrap().build().unwrap(), w);
    }
    let j: WeightJson = serde_json::from_str(Z8_WEIGHT).unwrap();
    assert_eq!(j.tensor[0][0], vec![vec![0, 2], vec![6, 4]]);
}

#[test]
fn invariant_json_shape() {
    let d = parse_gauss_code("O1+O2-O3-O4+U3-U1+U4+U2-").unwrap();
    let v = compute_invariant(&d, &flip_biquandle(), &z8_weight()).unwrap();
    assert_eq!(serde_json::to_string(&InvariantJson::from(&v)).unwrap(), r#"{"m":8,"counts":{"4":2}}"#);
}

#[test]
fn load_errors_are_classified() {
    let f = temp(r#"{"n": 2, "under": [[1,1],[2,2]], "over": [[2,2],[1,1]]}"#);
    let e = load_biquandle(f.path()).unwrap_err();
    assert!(e.is_violation());
    assert!(matches!(e, LoadError::Algebra(AlgebraError::AxiomViolation { .. })));

    let f = temp(r#"{"n": 2, "under": [[1,1],[2,3]], "over": [[1,1],[2,2]]}"#);
    let e = load_biquandle(f.path()).unwrap_err();
    assert!(!e.is_violation());

    let f = temp(r#"{"n": 3, "under": [[1,1],[2,2]], "over": [[1,1],[2,2]]}"#);
    assert!(matches!(load_biquandle(f.path()), Err(LoadError::Algebra(AlgebraError::Shape))));

    let f = temp("{not json");
    assert!(matches!(load_biquandle(f.path()), Err(LoadError::Json { .. })));
    assert!(matches!(load_weight(std::path::Path::new("/nonexistent/w.json")), Err(LoadError::Io { .. })));

    let f = temp(r#"{"m": 8, "tensor": [[[[0, 9]]]]}"#);
    assert!(matches!(load_weight(f.path()), Err(LoadError::Weight(_))));
}

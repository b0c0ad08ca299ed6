use thompson_scl::extension::TnElement;
use thompson_scl::numeric::q;
use thompson_scl::plmap::{ElementFile, PlError};
use thompson_scl::sample::Sampler;
use thompson_scl::tree_pair::builtin;
use thompson_scl::word::GeneratorTable;

#[test]
fn element_file_round_trip() {
    let mut s = Sampler::new(11);
    for _ in 0..50 {
        let f = s.element();
        let text = serde_json::to_string(&ElementFile::from(f.lift())).unwrap();
        assert_eq!(ElementFile::from_json(&text).unwrap(), f);
    }
}

#[test]
fn element_file_names_the_violation() {
    let cases = [
        (r#"{"breakpoints": []}"#, "empty"),
        (r#"{"breakpoints": [["1/4", "0"]]}"#, "x = 0"),
        (r#"{"breakpoints": [["0", "0"], ["1/2", "0"]]}"#, "y-values"),
        (
            r#"{"breakpoints": [["0", "0"], ["1/2", "1/4"], ["1/4", "1/2"]]}"#,
            "x-coordinates",
        ),
        (r#"{"breakpoints": [["0", "3/2"]]}"#, "canonical"),
        (
            r#"{"breakpoints": [["0", "0"], ["1/2", "3/2"]]}"#,
            "homeomorphism",
        ),
        (r#"{"breakpoints": [["0", "0"]], "extra": 1}"#, "malformed"),
        (r#"{"breakpoints": [["0", "0.5"]]}"#, "malformed"),
    ];
    for (text, needle) in cases {
        let err = ElementFile::from_json(text).unwrap_err();
        assert!(err.to_string().contains(needle), "{text}: {err}");
    }
    assert!(matches!(
        ElementFile::from_json(r#"{"breakpoints": [["0", "1"]]}"#),
        Err(PlError::NotCanonical(_))
    ));
}

#[test]
fn tn_element_file_forms() {
    let a = builtin("A").unwrap();
    let from_tree = TnElement::from_json(r#"{"n": 12, "j": 3, "t": "10100|11000|0"}"#).unwrap();
    let from_word = TnElement::from_json(r#"{"n": 12, "j": "3", "t": "A"}"#).unwrap();
    let breakpoints = serde_json::to_string(&ElementFile::from(a.lift())).unwrap();
    let from_points =
        TnElement::from_json(&format!(r#"{{"n": 12, "j": 3, "t": {breakpoints}}}"#)).unwrap();
    let expected = TnElement::new(12, a, 3).unwrap();
    assert_eq!(from_tree, expected);
    assert_eq!(from_word, expected);
    assert_eq!(from_points, expected);

    let text = serde_json::to_string(&expected.to_file()).unwrap();
    assert_eq!(TnElement::from_json(&text).unwrap(), expected);
}

#[test]
fn tn_element_file_rejects_bad_input() {
    for text in [
        r#"{"n": 0, "j": 0, "t": "A"}"#,
        r#"{"n": 12, "j": 0.5, "t": "A"}"#,
        r#"{"n": 12, "j": 0}"#,
        r#"{"n": 12, "j": 0, "t": {"breakpoints": [["0", "0"], ["1/3", "1/2"]]}}"#,
    ] {
        assert!(TnElement::from_json(text).is_err(), "{text}");
    }
}

#[test]
fn big_central_coordinates_survive() {
    let text = r#"{"n": 12, "j": "123456789012345678901234567890", "t": "R"}"#;
    let g = TnElement::from_json(text).unwrap();
    let back = serde_json::to_string(&g.to_file()).unwrap();
    assert_eq!(TnElement::from_json(&back).unwrap(), g);
    let phi = g.phi(&Default::default()).unwrap();
    assert_eq!(phi, q("123456789012345678901234567896"));
}

#[test]
fn table_file_loads_and_checks() {
    let text = r#"{
        "n": 21,
        "generators": {
            "s": {"n": 21, "j": 1, "t": "0|0|0"},
            "r": {"n": 21, "j": 0, "t": "R"}
        },
        "relators": ["s r s^-1 r^-1", "r^2"]
    }"#;
    let table = GeneratorTable::from_json(text).unwrap();
    assert_eq!(table.level(), 21);
    // r^2 = (R^2, χ-correction) is central but not trivial
    assert_eq!(table.verify_relations().unwrap(), vec!["r^2".to_string()]);

    let mismatched = r#"{"n": 12, "generators": {"s": {"n": 21, "j": 1, "t": "A"}}}"#;
    assert!(GeneratorTable::from_json(mismatched).is_err());
}

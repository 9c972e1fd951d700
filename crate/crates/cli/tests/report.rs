use varwreath::Error;
use varwreath_cli::{Exit, Report};

#[test]
fn exit_codes_follow_error_class() {
    let syntax = Error::Syntax { position: 2, message: "unexpected `x`".into() };
    let r = Report::from_error(&syntax, Some(("--b1", "C_x")));
    assert_eq!(r.exit, Exit::Parse);
    assert!(r.text.ends_with("  C_x\n    ^\n"), "{}", r.text);
    assert_eq!(r.json["error"]["position"], 2);

    assert_eq!(Report::from_error(&Error::SpecMismatch("x".into()), None).code(), 4);
    assert_eq!(Report::from_error(&Error::NotNilpotent("x".into()), None).code(), 3);
    assert_eq!(Report::from_error(&Error::Trivial("active group"), None).code(), 3);
}

#[test]
fn json_and_text_renderings() {
    let r = Report::failure(Exit::Hypothesis, "hypothesis", "bad input");
    assert_eq!(r.rendered(false), "error: bad input\n");
    let v: serde_json::Value = serde_json::from_str(&r.rendered(true)).unwrap();
    assert_eq!(v["error"]["message"], "bad input");
}

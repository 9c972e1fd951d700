//! The worked examples, replayed through the same commands as the CLI.

use std::fmt::Write as _;

use serde_json::{json, Value};
use varwreath::parse_abelian;

use crate::commands;
use crate::report::{Exit, Report};
use crate::DecideArgs;

const EXAMPLE_2_1: &str = "C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^4 * C_{5^2}";

/// Alterations of the group above: `(expression, stays equivalent)`.
const EXAMPLE_2_2: [(&str, bool); 6] = [
    ("C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{3^2}^2 * C_3^7 * C_{5^3}^4 * C_{5^2}", true),
    ("C_{3^5}^6 * C_{3^3}^{aleph_1} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^4 * C_{5^2}", true),
    ("C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{5^3}^4 * C_{5^2}", true),
    ("C_{3^5}^7 * C_{3^3}^{aleph_0} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^4 * C_{5^2}", false),
    ("C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^5 * C_{5^2}", false),
    ("C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^4 * C_{5^2}^2", false),
];

struct Step {
    command: String,
    report: Report,
}

fn classify(passive: &str, active: &str) -> Step {
    Step {
        command: format!("classify --passive '{passive}' --active '{active}'"),
        report: commands::classify(passive, active),
    }
}

fn decide(a1: &str, a2: &str, b1: &str, b2: &str) -> Step {
    let args = DecideArgs {
        a1: a1.into(),
        a2: a2.into(),
        b1: b1.into(),
        b2: b2.into(),
        assert_var_equal: false,
    };
    Step {
        command: format!("decide --a1 '{a1}' --a2 '{a2}' --b1 '{b1}' --b2 '{b2}'"),
        report: commands::decide(&args),
    }
}

fn equivalences() -> Step {
    let base = parse_abelian(EXAMPLE_2_1).expect("example parses");
    let mut text = format!("B = {base}\n");
    let mut rows = Vec::new();
    let mut all_as_expected = true;
    for (expr, expected) in EXAMPLE_2_2 {
        let other = parse_abelian(expr).expect("example parses");
        let equivalent = base.equivalent(&other);
        all_as_expected &= equivalent == expected;
        let mark = if equivalent { "equivalent" } else { "NOT equivalent" };
        let _ = writeln!(text, "  {mark}: {other}");
        rows.push(json!({ "expression": other.to_string(), "equivalent": equivalent }));
    }
    let exit = if all_as_expected { Exit::Success } else { Exit::Mismatch };
    Step {
        command: "# equivalence of alterations of B".into(),
        report: Report::new(exit, json!({ "base": base.to_string(), "alterations": rows }), text),
    }
}

pub fn run() -> Report {
    let d4_q8_b1 = "C_{2^2}^3 * C_2";
    let d4_q8_b2 = "C_{2^2} * C_2^7";
    let a_43 = "D4 * Q8 * C_3 * C_5 * C_7^{aleph_1}";
    let examples: Vec<(&str, Vec<Step>)> = vec![
        (
            "Example 2.1: invariants of a primary decomposition",
            vec![Step {
                command: format!("parse '{EXAMPLE_2_1}'"),
                report: commands::parse(EXAMPLE_2_1),
            }],
        ),
        ("Example 2.2: admissible and forbidden alterations", vec![equivalences()]),
        (
            "Example 4.1: equal classes, distinct varieties",
            vec![
                classify("C_3", "C_{3^2}^2"),
                classify("C_3", "C_{3^2} * C_3^4"),
                decide("C_3", "C_3", "C_{3^2}^2", "C_{3^2} * C_3^4"),
            ],
        ),
        (
            "Example 4.2: dihedral and quaternion passive groups",
            vec![
                classify("D4", d4_q8_b1),
                classify("Q8", d4_q8_b2),
                decide("D4", "Q8", d4_q8_b1, d4_q8_b2),
            ],
        ),
        (
            "Example 4.3: groups that are not p-groups",
            vec![decide(
                a_43,
                a_43,
                "C_{2^5}^3 * C_{2^4}^{aleph_1} * C_2^8 * C_3^{aleph_1} * C_7^8",
                "C_{2^5}^3 * C_{2^4}^{aleph_0} * C_{2^3}^2 * C_2^9 * C_3^{aleph_0} * C_7^9",
            )],
        ),
        (
            "Example 4.4: infinite active groups",
            vec![
                classify("D4", "C_{2^2}^3 * C_2^{aleph_0}"),
                decide("D4", "Q8", "C_{2^2}^3 * C_2^{aleph_0}", "C_{2^2} * C_2^{aleph_0}"),
            ],
        ),
    ];

    let mut text = String::new();
    let mut sections = Vec::new();
    let mut exit = Exit::Success;
    for (title, steps) in examples {
        let _ = writeln!(text, "== {title} ==");
        let mut rendered: Vec<Value> = Vec::new();
        for step in steps {
            if step.command.starts_with('#') {
                let _ = writeln!(text, "{}", step.command);
            } else {
                let _ = writeln!(text, "$ varwreath {}", step.command);
            }
            text.push_str(&step.report.text);
            text.push('\n');
            if step.report.exit == Exit::Mismatch || step.report.exit == Exit::Parse {
                exit = step.report.exit;
            }
            rendered.push(json!({
                "command": step.command,
                "exit": step.report.code(),
                "result": step.report.json,
            }));
        }
        sections.push(json!({ "title": title, "steps": rendered }));
    }
    Report::new(exit, json!({ "examples": sections }), text)
}

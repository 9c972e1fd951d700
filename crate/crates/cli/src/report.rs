use serde_json::{json, Value};
use varwreath::Error;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Unequal = 1,
    Parse = 2,
    Hypothesis = 3,
    Mismatch = 4,
}

/// Outcome of one command, with both renderings.
#[derive(Clone, Debug)]
pub struct Report {
    pub exit: Exit,
    pub json: Value,
    pub text: String,
    /// Text goes to stderr rather than stdout.
    pub is_error: bool,
}

impl Report {
    pub fn new(exit: Exit, json: Value, text: String) -> Self {
        Report { exit, json, text, is_error: false }
    }

    pub fn failure(exit: Exit, kind: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        Report {
            exit,
            json: json!({ "error": { "kind": kind, "message": message } }),
            text: format!("error: {message}\n"),
            is_error: true,
        }
    }

    /// Maps a library error to an exit status. `source` names the argument
    /// and its text so that syntax errors can point at the offending column.
    pub fn from_error(err: &Error, source: Option<(&str, &str)>) -> Self {
        match err {
            Error::Syntax { position, message } => {
                let (arg, input) = source.unwrap_or(("input", ""));
                let mut text = format!("error: {arg}: {err}\n");
                if !input.is_empty() {
                    let col = input.chars().take(*position).count();
                    text.push_str(&format!("  {input}\n  {}^\n", " ".repeat(col)));
                }
                Report {
                    exit: Exit::Parse,
                    json: json!({ "error": {
                        "kind": "parse",
                        "argument": arg,
                        "input": input,
                        "position": position,
                        "message": message,
                    } }),
                    text,
                    is_error: true,
                }
            }
            Error::SpecMismatch(_) => Report::failure(Exit::Mismatch, "mismatch", err.to_string()),
            Error::NotNilpotent(_) => Report::failure(Exit::Hypothesis, "not_nilpotent", err.to_string()),
            _ => Report::failure(Exit::Hypothesis, "hypothesis", err.to_string()),
        }
    }

    pub fn code(&self) -> i32 {
        self.exit as i32
    }

    pub fn rendered(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

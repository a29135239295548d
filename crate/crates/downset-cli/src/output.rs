//! Result document assembly: one JSON shape for every subcommand, plus the
//! matching human-readable rendering.

use downset::{Antichain, Dyadic, Face, FaceCountVector, IntPolynomial, SetFamily};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

/// Accumulates the structured result and its human rendering side by side.
pub struct Document {
    command: String,
    n: Option<usize>,
    inputs: Vec<Value>,
    result: Map<String, Value>,
    diagnostics: Vec<String>,
    preamble: Vec<String>,
    human: Vec<String>,
    /// Render the preamble as `#` comments so the body can double as a
    /// family file.
    file_mode: bool,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document {
            command: command.to_string(),
            n: None,
            inputs: Vec::new(),
            result: Map::new(),
            diagnostics: Vec::new(),
            preamble: Vec::new(),
            human: Vec::new(),
            file_mode: false,
        }
    }

    pub fn set_file_mode(&mut self) {
        self.file_mode = true;
    }

    pub fn set_n(&mut self, n: usize) {
        self.n = Some(n);
        self.preamble.push(format!("n: {n}"));
    }

    pub fn add_input(&mut self, role: &str, path: &str, sha256: &str, family: &SetFamily) {
        self.inputs.push(json!({
            "role": role,
            "path": path,
            "sha256": sha256,
            "members": family_value(family),
        }));
        self.preamble.push(format!(
            "{role}: {} ({path})",
            render_members(family.members())
        ));
    }

    pub fn diagnostic(&mut self, message: String) {
        self.diagnostics.push(message);
    }

    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }

    /// Inserts a result field with an explicit human line (empty lines are
    /// suppressed in the human rendering).
    pub fn field(&mut self, key: &str, value: Value, human: String) {
        self.result.insert(key.to_string(), value);
        if !human.is_empty() {
            self.human.push(human);
        }
    }

    /// A human-only line with no JSON counterpart.
    pub fn human_line(&mut self, line: String) {
        self.human.push(line);
    }

    pub fn into_json(self) -> Value {
        json!({
            "command": self.command,
            "n": self.n,
            "inputs": self.inputs,
            "result": Value::Object(self.result),
            "diagnostics": self.diagnostics,
        })
    }

    pub fn into_human(self) -> String {
        let mut lines: Vec<String> = if self.file_mode {
            self.preamble.iter().map(|l| format!("# {l}")).collect()
        } else {
            self.preamble
        };
        lines.extend(self.human);
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Arbitrary-precision JSON number from an exact integer.
pub fn big_value(value: &BigInt) -> Value {
    let digits = value.to_string();
    let number: Number = digits
        .parse()
        .expect("decimal integer is a valid JSON number");
    Value::Number(number)
}

pub fn counts_value(fcv: &FaceCountVector) -> Value {
    Value::Array(fcv.counts().iter().map(big_value).collect())
}

pub fn render_counts(fcv: &FaceCountVector) -> String {
    let parts: Vec<String> = fcv.counts().iter().map(BigInt::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn poly_value(poly: &IntPolynomial) -> Value {
    json!({
        "coefficients": poly.coeffs().iter().map(big_value).collect::<Vec<_>>(),
        "text": poly.to_string(),
    })
}

pub fn dyadic_value(d: &Dyadic) -> Value {
    json!({
        "numerator": big_value(d.numerator()),
        "denominator": big_value(&d.denominator()),
        "text": d.to_string(),
    })
}

pub fn face_value(face: &Face) -> Value {
    Value::Array(
        face.iter()
            .map(|e| Value::Number(Number::from(e)))
            .collect(),
    )
}

pub fn family_value(family: &SetFamily) -> Value {
    Value::Array(family.members().iter().map(face_value).collect())
}

pub fn antichain_value(antichain: &Antichain) -> Value {
    Value::Array(antichain.members().iter().map(face_value).collect())
}

pub fn render_members(members: &[Face]) -> String {
    if members.is_empty() {
        return "(none)".to_string();
    }
    members
        .iter()
        .map(Face::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

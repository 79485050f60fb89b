//! Deterministic text output: numbers at 12 significant digits, a small
//! JSON tree with insertion-ordered keys, and CSV lines. Identical inputs
//! produce byte-identical output, so files written here can serve as
//! golden fixtures.

/// Formats a float with 12 significant digits, trimming trailing zeros.
/// Plain decimal notation for exponents between -4 and 14, exponential
/// otherwise.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sign = if x < 0.0 { "-" } else { "" };
    let s = format!("{:.11e}", x.abs());
    let (mantissa, exp) = s.split_once('e').expect("{:e} always contains an exponent");
    let exp: i32 = exp.parse().expect("float exponent parses");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if (0..=14).contains(&exp) {
        let point = exp as usize + 1;
        if point >= digits.len() {
            let mut t = digits;
            for _ in 0..point - t.len() {
                t.push('0');
            }
            t
        } else {
            join_decimal(&digits[..point], &digits[point..])
        }
    } else if (-4..0).contains(&exp) {
        let mut fraction = String::new();
        for _ in 0..(-exp - 1) {
            fraction.push('0');
        }
        fraction.push_str(&digits);
        join_decimal("0", &fraction)
    } else {
        format!("{}e{exp}", join_decimal(&digits[..1], &digits[1..]))
    };
    format!("{sign}{body}")
}

fn join_decimal(int_part: &str, fraction: &str) -> String {
    let trimmed = fraction.trim_end_matches('0');
    if trimmed.is_empty() {
        int_part.into()
    } else {
        format!("{int_part}.{trimmed}")
    }
}

/// JSON value with deterministic rendering: object keys keep insertion
/// order, numbers go through [`fmt_sig`], scalar-only arrays stay on one
/// line.
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.push(&mut out, 0);
        out.push('\n');
        out
    }

    pub fn nums(values: impl IntoIterator<Item = f64>) -> Json {
        Json::Arr(values.into_iter().map(Json::Num).collect())
    }

    fn is_scalar(&self) -> bool {
        !matches!(self, Json::Arr(_) | Json::Obj(_))
    }

    fn push(&self, out: &mut String, level: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Num(x) => out.push_str(&fmt_sig(*x)),
            Json::Str(s) => push_string(out, s),
            Json::Arr(items) if items.is_empty() => out.push_str("[]"),
            Json::Arr(items) if items.iter().all(Json::is_scalar) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    item.push(out, level);
                }
                out.push(']');
            }
            Json::Arr(items) => {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    indent(out, level + 1);
                    item.push(out, level + 1);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, level);
                out.push(']');
            }
            Json::Obj(pairs) if pairs.is_empty() => out.push_str("{}"),
            Json::Obj(pairs) => {
                out.push_str("{\n");
                for (i, (key, value)) in pairs.iter().enumerate() {
                    indent(out, level + 1);
                    push_string(out, key);
                    out.push_str(": ");
                    value.push(out, level + 1);
                    if i + 1 < pairs.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, level);
                out.push('}');
            }
        }
    }
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn push_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Joins one CSV row; numeric fields should already be through
/// [`fmt_sig`]. Fields here never contain commas or quotes, so no quoting
/// is applied.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

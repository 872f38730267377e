//! Plain-text rendering of report documents for `--pretty`.

use std::fmt::Write;

use serde_json::Value;

pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    object(&mut out, v, 0);
    out
}

fn object(out: &mut String, v: &Value, depth: usize) {
    let Value::Object(m) = v else {
        let _ = writeln!(out, "{}{}", indent(depth), scalar(v));
        return;
    };
    for (key, value) in m {
        let pad = indent(depth);
        match value {
            Value::Object(_) => {
                let _ = writeln!(out, "{pad}{key}:");
                object(out, value, depth + 1);
            }
            Value::Array(rows) if key == "table" => {
                let _ = writeln!(out, "{pad}{key}:");
                for row in rows {
                    let _ = writeln!(out, "{pad}  {}", row_of(row));
                }
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_array) => {
                let joined: Vec<String> = items.iter().map(set_of).collect();
                let _ = writeln!(out, "{pad}{key}: {}", joined.join(" "));
            }
            _ => {
                let _ = writeln!(out, "{pad}{key}: {}", scalar(value));
            }
        }
    }
}

fn indent(depth: usize) -> String {
    "  ".repeat(depth)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn items(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().map(scalar).collect())
        .unwrap_or_default()
}

fn set_of(v: &Value) -> String {
    format!("{{{}}}", items(v).join(","))
}

fn row_of(v: &Value) -> String {
    items(v)
        .iter()
        .map(|x| format!("{x:>3}"))
        .collect::<String>()
}

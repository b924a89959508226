//! Text rendering of a JSON report. Every scalar in the JSON appears in the
//! text with the same value.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| scalar(i).is_some()),
        _ => scalar(v).is_some(),
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")),
        _ => scalar(v).unwrap_or_default(),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", flat(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_value(out, val, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", flat(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_value(out, item, indent + 1);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", flat(other))),
    }
}

/// Indented `key: value` text for a report.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

use std::fmt::Write as _;

use serde_json::Value;

use crate::Command;

/// Flat scalars and arrays stay on one line; nested objects are indented.
fn write_value(s: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            let _ = writeln!(s, "{pad}{key}:");
            for (k, x) in o {
                write_value(s, k, x, depth + 1);
            }
        }
        Value::Array(a) if a.iter().any(Value::is_object) => {
            let _ = writeln!(s, "{pad}{key}:");
            for x in a {
                let _ = writeln!(s, "{pad}  - {}", inline(x));
            }
        }
        _ => {
            let _ = writeln!(s, "{pad}{key}: {}", inline(v));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Object(o) => {
            let parts: Vec<String> = o.iter().map(|(k, x)| format!("{k}={}", inline(x))).collect();
            parts.join(" ")
        }
        _ => v.to_string(),
    }
}

pub fn text(command: Command, out: &Value) -> String {
    let mut s = String::new();
    let Value::Object(o) = out else {
        return inline(out) + "\n";
    };
    for (k, v) in o {
        if command == Command::EssentialPairs && (k == "essential" || k == "total") {
            continue;
        }
        write_value(&mut s, k, v, 0);
    }
    if command == Command::EssentialPairs {
        let _ = writeln!(s, "essential: {} of {}", o["essential"], o["total"]);
    }
    s
}

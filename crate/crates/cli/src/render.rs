use serde_json::Value;

use crate::args::Format;

/// Result text, terminated by a newline.
pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Table => {
            let mut out = String::new();
            table(value, 0, &mut out);
            if out.is_empty() || !out.ends_with('\n') {
                out.push('\n');
            }
            out
        }
    }
}

fn scalar(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.is_empty() => Some("-".into()),
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => Some(
            items
                .iter()
                .map(|v| scalar(v).unwrap())
                .collect::<Vec<_>>()
                .join(" "),
        ),
        Value::Object(map) if map.contains_key("type") => Some(value.to_string()),
        Value::Object(map) => rational(map),
        _ => None,
    }
}

/// `{"num": a, "den": b}` prints as `a/b`.
fn rational(map: &serde_json::Map<String, Value>) -> Option<String> {
    if map.len() != 2 {
        return None;
    }
    let num = map.get("num")?.as_str()?;
    let den = map.get("den")?.as_str()?;
    Some(format!("{num}/{den}"))
}

fn table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(value) {
        out.push_str(&pad);
        out.push_str(&s);
        out.push('\n');
        return;
    }
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k:<width$}  {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}\n"));
                        table(v, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}[{i}] {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        table(v, indent + 1, out);
                    }
                }
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_compact() {
        assert_eq!(render(&json!({"verdict": "out"}), Format::Json), "{\"verdict\":\"out\"}\n");
    }

    #[test]
    fn table_layout() {
        let v = json!({
            "covered": true,
            "measure": {"num": "5", "den": "6"},
            "sets": [[1, 2], [3]],
            "plan": {"p": 2, "boundaries": [0, 3]},
            "group": {"type": "Cyclic", "m": 4},
            "side": []
        });
        assert_eq!(
            render(&v, Format::Table),
            "covered  true\nmeasure  5/6\nsets\n  [0] 1 2\n  [1] 3\nplan\n  p           2\n  boundaries  0 3\ngroup    {\"type\":\"Cyclic\",\"m\":4}\nside     -\n"
        );
    }
}

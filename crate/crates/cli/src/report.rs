//! A report is an ordered list of named fields, rendered either as the
//! plain-text layout or as one JSON object.
//!
//! Plain text: scalars and lists are `key v1 v2 ...` on one line; matrices are
//! a `matrix <name> <rows> <cols>` header followed by one line per row.

use resgraph::format_number;
use resgraph::linalg::Matrix;
use serde_json::{json, Map, Value};

pub enum Field {
    Text(String),
    Bool(bool),
    Int(u64),
    Num(f64),
    Nums(Vec<f64>),
    Ints(Vec<u64>),
    Words(Vec<String>),
    Matrix(Vec<Vec<f64>>),
    IntMatrix(Vec<Vec<u64>>),
    /// Rendered as `key <label> k=v ...` lines; a JSON array of objects.
    Records(Vec<(String, Vec<(String, Field)>)>),
    Absent,
}

#[derive(Default)]
pub struct Report {
    fields: Vec<(String, Field)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, f: Field) -> &mut Self {
        self.fields.push((key.to_string(), f));
        self
    }

    pub fn text(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.push(key, Field::Text(v.into()))
    }

    pub fn num(&mut self, key: &str, v: f64) -> &mut Self {
        self.push(key, Field::Num(v))
    }

    pub fn int(&mut self, key: &str, v: u64) -> &mut Self {
        self.push(key, Field::Int(v))
    }

    pub fn matrix(&mut self, key: &str, m: &Matrix) -> &mut Self {
        self.push(key, Field::Matrix(m.to_rows()))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (key, f) in &self.fields {
            render_field(&mut out, key, f);
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&to_object(&self.fields)).expect("serializable");
        s.push('\n');
        s
    }
}

fn scalar_text(f: &Field) -> String {
    match f {
        Field::Text(s) => s.clone(),
        Field::Bool(b) => b.to_string(),
        Field::Int(i) => i.to_string(),
        Field::Num(x) => format_number(*x),
        Field::Nums(v) => join(v.iter().map(|&x| format_number(x))),
        Field::Ints(v) => join(v.iter().map(|x| x.to_string())),
        Field::Words(v) => v.join(" "),
        Field::Absent => "none".into(),
        Field::Matrix(_) | Field::IntMatrix(_) | Field::Records(_) => unreachable!("not a scalar"),
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(" ")
}

fn render_field(out: &mut String, key: &str, f: &Field) {
    let line = |out: &mut String, s: String| {
        out.push_str(s.trim_end());
        out.push('\n');
    };
    match f {
        Field::Matrix(rows) => {
            let cols = rows.first().map_or(0, Vec::len);
            line(out, format!("matrix {key} {} {cols}", rows.len()));
            for r in rows {
                line(out, join(r.iter().map(|&x| format_number(x))));
            }
        }
        Field::IntMatrix(rows) => {
            let cols = rows.first().map_or(0, Vec::len);
            line(out, format!("matrix {key} {} {cols}", rows.len()));
            for r in rows {
                line(out, join(r.iter().map(|x| x.to_string())));
            }
        }
        Field::Records(records) => {
            for (label, fields) in records {
                let mut parts = vec![key.to_string(), label.clone()];
                for (k, v) in fields {
                    parts.push(k.clone());
                    parts.push(scalar_text(v));
                }
                line(out, parts.join(" "));
            }
        }
        other => line(out, format!("{key} {}", scalar_text(other))),
    }
}

fn to_object(fields: &[(String, Field)]) -> Value {
    let mut map = Map::new();
    for (k, f) in fields {
        map.insert(k.clone(), to_json(f));
    }
    Value::Object(map)
}

fn to_json(f: &Field) -> Value {
    match f {
        Field::Text(s) => json!(s),
        Field::Bool(b) => json!(b),
        Field::Int(i) => json!(i),
        Field::Num(x) => json!(x),
        Field::Nums(v) => json!(v),
        Field::Ints(v) => json!(v),
        Field::Words(v) => json!(v),
        Field::Matrix(rows) => json!(rows),
        Field::IntMatrix(rows) => json!(rows),
        Field::Records(records) => Value::Array(
            records
                .iter()
                .map(|(label, fields)| {
                    let mut map = Map::new();
                    map.insert("id".into(), json!(label));
                    for (k, f) in fields {
                        map.insert(k.clone(), to_json(f));
                    }
                    Value::Object(map)
                })
                .collect(),
        ),
        Field::Absent => Value::Null,
    }
}

//! Minimal JSON emitter with a fixed key order and 17-significant-digit
//! floats, so reports are diffable and round-trip exactly.

use crate::mtx::fmt_f64;

pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// JSON value fragments, already rendered.
pub fn string(s: &str) -> String {
    format!("\"{}\"", escape(s))
}

pub fn number(v: f64) -> String {
    if v.is_finite() {
        fmt_f64(v)
    } else {
        "null".into()
    }
}

pub fn boolean(v: bool) -> &'static str {
    if v {
        "true"
    } else {
        "false"
    }
}

/// Ordered JSON object builder.
pub struct Object {
    fields: Vec<(String, String)>,
}

impl Object {
    pub fn new() -> Self {
        Object { fields: Vec::new() }
    }

    pub fn raw(mut self, key: &str, value: impl Into<String>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn str_field(self, key: &str, value: &str) -> Self {
        let rendered = string(value);
        self.raw(key, rendered)
    }

    pub fn opt_str_field(self, key: &str, value: Option<&str>) -> Self {
        match value {
            Some(v) => self.str_field(key, v),
            None => self.raw(key, "null"),
        }
    }

    pub fn num_field(self, key: &str, value: f64) -> Self {
        let rendered = number(value);
        self.raw(key, rendered)
    }

    pub fn opt_num_field(self, key: &str, value: Option<f64>) -> Self {
        match value {
            Some(v) => self.num_field(key, v),
            None => self.raw(key, "null"),
        }
    }

    pub fn int_field(self, key: &str, value: u64) -> Self {
        self.raw(key, value.to_string())
    }

    pub fn bool_field(self, key: &str, value: bool) -> Self {
        self.raw(key, boolean(value))
    }

    pub fn opt_bool_field(self, key: &str, value: Option<bool>) -> Self {
        match value {
            Some(v) => self.bool_field(key, v),
            None => self.raw(key, "null"),
        }
    }

    pub fn finish(self) -> String {
        let mut out = String::from("{");
        for (i, (key, value)) in self.fields.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&string(key));
            out.push(':');
            out.push_str(value);
        }
        out.push('}');
        out
    }
}

pub fn array(items: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from("[");
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&item);
    }
    out.push(']');
    out
}

use angleworks::scalars::to_decimal;
use angleworks::PiNumber;
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Latex,
    Json,
}

/// One output row: an exact value or a float with its error bound.
pub struct Row {
    pub index: u32,
    pub exact: Option<PiNumber>,
    pub float: f64,
    pub abs_error: Option<f64>,
    pub tag: &'static str,
    /// extra exact column (the angle factor of a Reitzner constant)
    pub factor: Option<PiNumber>,
}

pub struct Table {
    pub command: &'static str,
    pub params: Vec<(&'static str, Value)>,
    pub index_name: &'static str,
    pub tag_name: &'static str,
    pub rows: Vec<Row>,
    /// print decimals in the first plain line instead of the exact text
    pub decimal_first: bool,
}

impl Row {
    pub fn text(&self, digits: usize) -> String {
        match &self.exact {
            Some(x) => x.to_string(),
            None => float_text(self.float, digits),
        }
    }

    pub fn decimal(&self, digits: usize) -> String {
        match &self.exact {
            Some(x) => to_decimal(x, digits).unwrap_or_else(|_| float_text(self.float, digits)),
            None => float_text(self.float, digits),
        }
    }
}

fn float_text(v: f64, digits: usize) -> String {
    format!("{v:.digits$}")
}

/// LaTeX for a canonical PiNumber: terms q * pi^(e/2).
pub fn latex(x: &PiNumber) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, q)) in x.terms().enumerate() {
        let numer = q.numer().to_string();
        let neg = numer.starts_with('-');
        let (num, den) = (numer.trim_start_matches('-').to_string(), q.denom().to_string());
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let pi = match e {
            0 => String::new(),
            2 => "\\pi".into(),
            e if e % 2 == 0 => format!("\\pi^{{{}}}", e / 2),
            e => format!("\\pi^{{{e}/2}}"),
        };
        let coeff = if den == "1" { num.clone() } else { format!("\\frac{{{num}}}{{{den}}}") };
        if pi.is_empty() {
            out.push_str(&coeff);
        } else if num == "1" && den == "1" {
            out.push_str(&pi);
        } else {
            out.push_str(&coeff);
            out.push_str(&pi);
        }
    }
    out
}

impl Table {
    pub fn render(&self, format: Format, digits: Option<usize>) -> String {
        let dg = digits.unwrap_or(15);
        match format {
            Format::Plain => self.plain(digits),
            Format::Csv => self.csv(dg),
            Format::Latex => self.latex(dg),
            Format::Json => self.json(dg),
        }
    }

    fn plain(&self, digits: Option<usize>) -> String {
        let dg = digits.unwrap_or(12);
        let first: Vec<String> = self
            .rows
            .iter()
            .map(|r| if self.decimal_first { r.decimal(dg) } else { r.text(dg) })
            .collect();
        let mut out = first.join(", ");
        out.push('\n');
        let tags: Vec<&str> = self.rows.iter().map(|r| r.tag).collect();
        out.push_str(&format!("# {}: {}\n", self.tag_name, tags.join(", ")));
        if self.rows.iter().any(|r| r.factor.is_some()) {
            let f: Vec<String> = self.rows.iter().map(|r| r.factor.as_ref().map_or("-".into(), |x| x.to_string())).collect();
            out.push_str(&format!("# angle factor: {}\n", f.join(", ")));
        }
        if self.decimal_first {
            let ex: Vec<String> = self.rows.iter().map(|r| r.exact.as_ref().map_or("-".into(), |x| x.to_string())).collect();
            if self.rows.iter().any(|r| r.exact.is_some()) {
                out.push_str(&format!("# exact: {}\n", ex.join(", ")));
            }
        } else if let Some(d) = digits {
            let dec: Vec<String> = self.rows.iter().map(|r| r.decimal(d)).collect();
            out.push_str(&format!("# decimal: {}\n", dec.join(", ")));
        }
        if self.rows.iter().any(|r| r.abs_error.is_some()) {
            let e: Vec<String> = self.rows.iter().map(|r| r.abs_error.map_or("0".into(), |e| format!("{e:.1e}"))).collect();
            out.push_str(&format!("# abs_error: {}\n", e.join(", ")));
        }
        out
    }

    fn has_factor(&self) -> bool {
        self.rows.iter().any(|r| r.factor.is_some())
    }

    fn csv(&self, dg: usize) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![self.index_name, "value", "decimal", self.tag_name];
        if self.has_factor() {
            header.push("angle_factor");
        }
        w.write_record(&header).expect("in-memory write");
        for r in &self.rows {
            let mut rec = vec![r.index.to_string(), r.text(dg), r.decimal(dg), r.tag.to_string()];
            if self.has_factor() {
                rec.push(r.factor.as_ref().map_or(String::new(), |x| x.to_string()));
            }
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn latex(&self, dg: usize) -> String {
        let cols = if self.has_factor() { "rllll" } else { "rlll" };
        let mut out = format!("\\begin{{tabular}}{{{cols}}}\n\\hline\n");
        let idx = if self.index_name == "l" { "\\ell" } else { self.index_name };
        out.push_str(&format!("${idx}$ & value & decimal & {}", self.tag_name));
        if self.has_factor() {
            out.push_str(" & angle factor");
        }
        out.push_str(" \\\\\n\\hline\n");
        for r in &self.rows {
            let v = match &r.exact {
                Some(x) => format!("${}$", latex(x)),
                None => format!("${}$", float_text(r.float, dg)),
            };
            out.push_str(&format!("{} & {v} & {} & {}", r.index, r.decimal(dg), r.tag.replace('_', "\\_")));
            if self.has_factor() {
                out.push_str(&format!(" & ${}$", r.factor.as_ref().map_or(String::new(), latex)));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }

    fn json(&self, dg: usize) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut o = json!({
                    self.index_name: r.index,
                    "value": r.exact.as_ref().map_or(Value::Null, |x| x.to_json()),
                    "text": r.text(dg),
                    "decimal": r.decimal(dg),
                    self.tag_name: r.tag,
                    "abs_error": r.abs_error,
                });
                if let Some(f) = &r.factor {
                    o["angle_factor"] = f.to_json();
                }
                o
            })
            .collect();
        let mut top = serde_json::Map::new();
        top.insert("command".into(), json!(self.command));
        for (k, v) in &self.params {
            top.insert((*k).into(), v.clone());
        }
        top.insert("entries".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
        s.push('\n');
        s
    }
}

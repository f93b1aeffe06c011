//! Table rendering: CSV with a commented config echo, or JSON with a `meta`
//! object. Both encodings are deterministic and lossless for floats.

use serde_json::{json, Map, Value};

use crate::config::{format_float, OutputFormat, RunConfig};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Float(v) => format_float(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(v) => json!(v),
            Cell::Int(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Text(v) => json!(v),
        }
    }
}

/// A rendered command result: column names plus data rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Renders the table in the configured format, echoing the full configuration
/// and any warnings for provenance.
pub fn render(config: &RunConfig, warnings: &[String], table: &Table) -> String {
    match config.output_format {
        OutputFormat::Csv => render_csv(config, warnings, table),
        OutputFormat::Json => render_json(config, warnings, table),
    }
}

fn render_csv(config: &RunConfig, warnings: &[String], table: &Table) -> String {
    let mut out = String::new();
    for line in config.to_config_text().lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for warning in warnings {
        out.push_str("# warning: ");
        out.push_str(warning);
        out.push('\n');
    }
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn config_meta(config: &RunConfig, warnings: &[String]) -> Value {
    let mut meta = Map::new();
    meta.insert("command".into(), json!(config.command.to_string()));
    meta.insert("beta".into(), json!(config.beta));
    meta.insert("y".into(), json!(config.y));
    meta.insert("g".into(), json!(config.g));
    meta.insert("b_star".into(), json!(config.b_star));
    meta.insert("pi_star".into(), json!(config.pi_star));
    meta.insert("q".into(), json!(config.q));
    if let Some(v) = config.q_pi {
        meta.insert("qpi".into(), json!(v));
    }
    if let Some(v) = config.q_b {
        meta.insert("qb".into(), json!(v));
    }
    if let Some(v) = config.mu_r {
        meta.insert("mur".into(), json!(v));
    }
    if let Some(v) = config.mu_s {
        meta.insert("mus".into(), json!(v));
    }
    if let Some(v) = config.f_pi {
        meta.insert("fpi".into(), json!(v));
    }
    if let Some(v) = config.g_b {
        meta.insert("gb".into(), json!(v));
    }
    meta.insert("sigma_r".into(), json!(config.sigma_r));
    meta.insert("sigma_s".into(), json!(config.sigma_s));
    meta.insert("rho_r".into(), json!(config.rho_r));
    meta.insert("rho_s".into(), json!(config.rho_s));
    if let Some(grid) = &config.mus_grid {
        meta.insert("mus_grid".into(), json!(grid));
    }
    if let Some(v) = config.f_min {
        meta.insert("f_min".into(), json!(v));
    }
    if let Some(v) = config.f_max {
        meta.insert("f_max".into(), json!(v));
    }
    if let Some(v) = config.g_min {
        meta.insert("g_min".into(), json!(v));
    }
    if let Some(v) = config.g_max {
        meta.insert("g_max".into(), json!(v));
    }
    if let Some(v) = config.n_f {
        meta.insert("n_f".into(), json!(v));
    }
    if let Some(v) = config.n_g {
        meta.insert("n_g".into(), json!(v));
    }
    meta.insert("policy".into(), json!(config.policy.to_string()));
    meta.insert("variant".into(), json!(config.variant.to_string()));
    meta.insert("horizon".into(), json!(config.horizon));
    meta.insert("b0_dev".into(), json!(config.b0_dev));
    meta.insert("seed".into(), json!(config.seed));
    meta.insert("tol".into(), json!(config.tol));
    meta.insert(
        "output_format".into(),
        json!(config.output_format.to_string()),
    );
    if let Some(path) = &config.output_path {
        meta.insert("output_path".into(), json!(path));
    }
    meta.insert("warnings".into(), json!(warnings));
    Value::Object(meta)
}

fn render_json(config: &RunConfig, warnings: &[String], table: &Table) -> String {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut object = Map::new();
            for (column, cell) in table.columns.iter().zip(row.iter()) {
                object.insert((*column).into(), cell.to_json());
            }
            Value::Object(object)
        })
        .collect();
    let document = json!({
        "meta": config_meta(config, warnings),
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&document).expect("tables are valid JSON");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    fn steady_config(format: &str) -> RunConfig {
        let text = format!("command = steady\nbeta = 0.99\noutput_format = {format}\n");
        parse_config(&text, &mut Vec::new()).unwrap()
    }

    fn sample_table() -> Table {
        let mut table = Table::new(vec!["x", "label", "flag"]);
        table.push(vec![
            Cell::Float(0.1),
            Cell::Text("ActiveMPassiveF".into()),
            Cell::Bool(false),
        ]);
        table
    }

    #[test]
    fn csv_echoes_the_config_before_the_header() {
        let out = render(&steady_config("csv"), &[], &sample_table());
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("# command = steady"));
        let header = lines.iter().position(|l| *l == "x,label,flag").unwrap();
        assert!(lines[..header].iter().all(|l| l.starts_with('#')));
        assert_eq!(
            lines[header + 1],
            "1.0000000000000001e-1,ActiveMPassiveF,false"
        );
    }

    #[test]
    fn csv_floats_round_trip_exactly() {
        let value = 0.1 + 0.2;
        let printed = format_float(value);
        assert_eq!(printed.parse::<f64>().unwrap(), value);
    }

    #[test]
    fn warnings_appear_as_comment_lines() {
        let out = render(
            &steady_config("csv"),
            &["duplicate key `beta`".to_string()],
            &sample_table(),
        );
        assert!(out.contains("# warning: duplicate key `beta`\n"));
    }

    #[test]
    fn json_structure_has_meta_and_rows() {
        let out = render(&steady_config("json"), &["w".to_string()], &sample_table());
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["meta"]["command"], "steady");
        assert_eq!(doc["meta"]["beta"], 0.99);
        assert_eq!(doc["meta"]["warnings"][0], "w");
        assert_eq!(doc["rows"][0]["x"], 0.1);
        assert_eq!(doc["rows"][0]["label"], "ActiveMPassiveF");
        assert_eq!(doc["rows"][0]["flag"], false);
    }

    #[test]
    fn rendering_is_deterministic() {
        let config = steady_config("json");
        let a = render(&config, &[], &sample_table());
        let b = render(&config, &[], &sample_table());
        assert_eq!(a, b);
    }
}

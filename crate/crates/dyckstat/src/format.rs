//! Plain, CSV and JSON renderings. JSON carries every count as a decimal
//! string so no precision is lost.

use anyhow::Result;
use clap::ValueEnum;
use dyckstat_core::{BivarSeries, CountTable, DyckPath, Series, StatProfile};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

fn coefficient_strings(s: &Series) -> Vec<String> {
    s.coeffs().iter().map(ToString::to_string).collect()
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// `meta` is copied into the JSON object alongside `coefficients`.
pub fn render_series(s: &Series, meta: Value, format: OutputFormat) -> Result<String> {
    let coeffs = coefficient_strings(s);
    Ok(match format {
        OutputFormat::Plain => format!("{}\n", coeffs.join(",")),
        OutputFormat::Csv => csv_text(
            &["n", "coefficient"],
            coeffs.into_iter().enumerate().map(|(n, c)| vec![n.to_string(), c]),
        )?,
        OutputFormat::Json => {
            let mut v = meta;
            v["coefficients"] = json!(coeffs);
            pretty(&v)
        }
    })
}

pub fn render_bivar(b: &BivarSeries, meta: Value, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Plain => format!("{b}\n"),
        OutputFormat::Csv => {
            let rows = b.entries().iter().enumerate().flat_map(|(j, s)| {
                coefficient_strings(s)
                    .into_iter()
                    .enumerate()
                    .map(move |(n, c)| vec![j.to_string(), n.to_string(), c])
            });
            csv_text(&["z_power", "n", "coefficient"], rows)?
        }
        OutputFormat::Json => {
            let mut v = meta;
            v["slices"] = json!(b.entries().iter().map(coefficient_strings).collect::<Vec<_>>());
            pretty(&v)
        }
    })
}

pub fn render_count(meta: Value, count: &str, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Plain => format!("{count}\n"),
        OutputFormat::Csv => {
            let obj = meta.as_object().expect("count metadata is an object");
            let mut header: Vec<&str> = obj.keys().map(String::as_str).collect();
            let mut row: Vec<String> = obj
                .values()
                .map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_owned))
                .collect();
            header.push("count");
            row.push(count.to_owned());
            csv_text(&header, [row])?
        }
        OutputFormat::Json => {
            let mut v = meta;
            v["count"] = json!(count);
            pretty(&v)
        }
    })
}

/// Columns `n,k,r,kind,count` in table order.
pub fn render_table(t: &CountTable, method: &str, format: OutputFormat) -> Result<String> {
    let rows = t.iter().map(|((n, k, r, kind), c)| {
        vec![n.to_string(), k.to_string(), r.to_string(), kind.to_string(), c.to_string()]
    });
    Ok(match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => csv_text(&["n", "k", "r", "kind", "count"], rows)?,
        OutputFormat::Json => {
            let entries: Vec<Value> = t
                .iter()
                .map(|((n, k, r, kind), c)| {
                    json!({"n": n, "k": k, "r": r, "kind": kind.as_str(), "count": c.to_string()})
                })
                .collect();
            pretty(&json!({
                "n_max": t.n_max,
                "k_max": t.k_max,
                "method": method,
                "entries": entries,
            }))
        }
    })
}

pub fn path_text(p: &DyckPath) -> String {
    if p.is_empty() {
        "(empty)".to_owned()
    } else {
        p.to_string()
    }
}

fn profile_json(p: &DyckPath, profile: &StatProfile) -> Value {
    let map = |m: &std::collections::BTreeMap<usize, usize>| {
        m.iter().map(|(h, c)| (h.to_string(), json!(c))).collect::<serde_json::Map<_, _>>()
    };
    json!({
        "path": p.to_string(),
        "peaks_by_height": map(&profile.peaks_by_height),
        "valleys_by_height": map(&profile.valleys_by_height),
        "max_height": profile.max_height,
    })
}

/// The image path on the first line, then both profiles.
pub fn render_bijection(
    map: &str,
    input: (&DyckPath, &StatProfile),
    image: Option<(&DyckPath, &StatProfile)>,
    format: OutputFormat,
) -> Result<String> {
    Ok(match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            match image {
                Some((p, prof)) => {
                    out.push_str(&format!("{}\n", path_text(p)));
                    out.push_str(&format!("input  {}  {}\n", path_text(input.0), input.1));
                    out.push_str(&format!("image  {}  {}\n", path_text(p), prof));
                }
                None => {
                    out.push_str("none\n");
                    out.push_str(&format!("input  {}  {}\n", path_text(input.0), input.1));
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![vec!["input".to_owned(), input.0.to_string(), input.1.to_string()]];
            if let Some((p, prof)) = image {
                rows.push(vec!["image".to_owned(), p.to_string(), prof.to_string()]);
            }
            csv_text(&["role", "path", "profile"], rows)?
        }
        OutputFormat::Json => pretty(&json!({
            "map": map,
            "input": profile_json(input.0, input.1),
            "image": image.map(|(p, prof)| profile_json(p, prof)),
        })),
    })
}

//! Point-set files and report serialization.
//!
//! Text format: one point per line as `x y`, coordinates either decimal
//! literals or rationals `p/q`; `#` starts a comment; a `mode:` header is
//! mandatory. The JSON form mirrors the in-memory point set including
//! label and metadata. Spectrum reports serialize to JSON and to CSV with
//! columns `squared_distance,multiplicity` (rationals as `p/q`, floats
//! with 17 significant digits for lossless round trips).

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hull::ConvexLayers;
use crate::point::{
    format_f64, format_rational, parse_rational, AnySet, ApproxPoint, ApproxSet, ExactPoint,
    ExactSet,
};
use crate::spectrum::AnySpectrum;

pub fn parse_point_set(text: &str) -> Result<AnySet> {
    let mut mode: Option<String> = None;
    let mut label: Option<String> = None;
    let mut rows: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("label:") {
                label = Some(rest.trim().to_string());
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("mode:") {
            mode = Some(rest.trim().to_string());
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(x), Some(y), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!(
                "line {}: expected `x y`, got `{line}`",
                lineno + 1
            )));
        };
        rows.push((x.to_string(), y.to_string()));
    }
    let mode = mode.ok_or_else(|| Error::Parse("missing mandatory `mode:` header".into()))?;
    let label = label.unwrap_or_else(|| "points".to_string());
    match mode.as_str() {
        "exact" => {
            let pts = rows
                .iter()
                .map(|(x, y)| Ok(ExactPoint::new(parse_rational(x)?, parse_rational(y)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnySet::Exact(ExactSet::new(pts, label)?))
        }
        "approx" => {
            let pts = rows
                .iter()
                .map(|(x, y)| {
                    let px: f64 = x
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad float `{x}`")))?;
                    let py: f64 = y
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad float `{y}`")))?;
                    Ok(ApproxPoint::new(px, py))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnySet::Approx(ApproxSet::new(pts, label)?))
        }
        other => Err(Error::Parse(format!("unknown mode `{other}`"))),
    }
}

pub fn format_point_set(set: &AnySet) -> String {
    let mut out = String::new();
    out.push_str(&format!("# label: {}\n", set.label()));
    out.push_str(&format!("mode: {}\n", set.mode_name()));
    match set {
        AnySet::Exact(s) => {
            for p in s.points() {
                out.push_str(&format!(
                    "{} {}\n",
                    format_rational(&p.x),
                    format_rational(&p.y)
                ));
            }
        }
        AnySet::Approx(s) => {
            for p in s.points() {
                out.push_str(&format!("{} {}\n", format_f64(p.x), format_f64(p.y)));
            }
        }
    }
    out
}

pub fn read_point_set(path: &Path) -> Result<AnySet> {
    parse_point_set(&std::fs::read_to_string(path)?)
}

pub fn write_point_set(set: &AnySet, path: &Path) -> Result<()> {
    std::fs::write(path, format_point_set(set))?;
    Ok(())
}

pub fn point_set_to_json(set: &AnySet) -> Value {
    let points: Vec<Value> = match set {
        AnySet::Exact(s) => s
            .points()
            .iter()
            .map(|p| json!([format_rational(&p.x), format_rational(&p.y)]))
            .collect(),
        AnySet::Approx(s) => s.points().iter().map(|p| json!([p.x, p.y])).collect(),
    };
    json!({
        "label": set.label(),
        "mode": set.mode_name(),
        "n": set.len(),
        "metadata": set.metadata(),
        "points": points,
    })
}

pub fn point_set_from_json(value: &Value) -> Result<AnySet> {
    let bad = |msg: &str| Error::Parse(format!("point-set json: {msg}"));
    let mode = value["mode"].as_str().ok_or_else(|| bad("missing mode"))?;
    let label = value["label"].as_str().unwrap_or("points").to_string();
    let points = value["points"]
        .as_array()
        .ok_or_else(|| bad("missing points"))?;
    let mut set = match mode {
        "exact" => {
            let pts = points
                .iter()
                .map(|pair| {
                    let x = pair[0].as_str().ok_or_else(|| bad("rational expected"))?;
                    let y = pair[1].as_str().ok_or_else(|| bad("rational expected"))?;
                    Ok(ExactPoint::new(parse_rational(x)?, parse_rational(y)?))
                })
                .collect::<Result<Vec<_>>>()?;
            AnySet::Exact(ExactSet::new(pts, label)?)
        }
        "approx" => {
            let pts = points
                .iter()
                .map(|pair| {
                    let x = pair[0].as_f64().ok_or_else(|| bad("number expected"))?;
                    let y = pair[1].as_f64().ok_or_else(|| bad("number expected"))?;
                    Ok(ApproxPoint::new(x, y))
                })
                .collect::<Result<Vec<_>>>()?;
            AnySet::Approx(ApproxSet::new(pts, label)?)
        }
        other => return Err(bad(&format!("unknown mode `{other}`"))),
    };
    if let Some(meta) = value["metadata"].as_object() {
        let map: BTreeMap<String, String> = meta
            .iter()
            .map(|(k, v)| {
                let text = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
                (k.clone(), text)
            })
            .collect();
        match &mut set {
            AnySet::Exact(s) => s.metadata = map,
            AnySet::Approx(s) => s.metadata = map,
        }
    }
    Ok(set)
}

pub fn spectrum_to_json(set: &AnySet, spectrum: &AnySpectrum) -> Value {
    let classes: Vec<Value> = spectrum
        .rows()
        .into_iter()
        .map(|(key, mult)| {
            json!({
                "squared_distance": key,
                "multiplicity": mult,
            })
        })
        .collect();
    json!({
        "label": set.label(),
        "mode": set.mode_name(),
        "n": spectrum.n(),
        "m": spectrum.class_count(),
        "multiplicities": spectrum.multiplicities(),
        "classes": classes,
        "audit": spectrum.audit().map(|a| json!({
            "max_intra_spread": a.max_intra_spread,
            "min_inter_gap": a.min_inter_gap,
            "reliable": a.reliable,
        })),
    })
}

pub fn spectrum_to_csv(spectrum: &AnySpectrum) -> String {
    let mut out = String::from("squared_distance,multiplicity\n");
    for (key, mult) in spectrum.rows() {
        out.push_str(&format!("{key},{mult}\n"));
    }
    out
}

pub fn spectrum_to_text(set: &AnySet, spectrum: &AnySpectrum) -> String {
    let mults: Vec<String> = spectrum
        .multiplicities()
        .iter()
        .map(u64::to_string)
        .collect();
    let mut out = format!(
        "{} [{} mode]: n = {}, m = {}\na(X) = ({})\n",
        set.label(),
        set.mode_name(),
        spectrum.n(),
        spectrum.class_count(),
        mults.join(", ")
    );
    for (key, mult) in spectrum.rows() {
        out.push_str(&format!("  d^2 = {key}: {mult}\n"));
    }
    if let Some(audit) = spectrum.audit() {
        out.push_str(&format!(
            "clustering audit: min inter-class gap {:.3e}, max intra-class spread {:.3e}, ratio {:.3e} ({})\n",
            audit.min_inter_gap,
            audit.max_intra_spread,
            audit.ratio(),
            if audit.reliable { "reliable" } else { "UNRELIABLE" },
        ));
    }
    out
}

pub fn layers_to_json(set: &AnySet, layers: &ConvexLayers) -> Value {
    json!({
        "label": set.label(),
        "n": set.len(),
        "layer_sizes": layers.layer_sizes(),
        "layers": layers.layers,
    })
}

pub fn layers_to_text(set: &AnySet, layers: &ConvexLayers) -> String {
    let mut out = format!(
        "{}: {} layers, sizes {:?}\n",
        set.label(),
        layers.layers.len(),
        layers.layer_sizes()
    );
    for (i, layer) in layers.layers.iter().enumerate() {
        out.push_str(&format!("  L{}: {:?}\n", i + 1, layer));
    }
    out
}

/// Text dump of a point set rounds through parse/format bit-exactly; used
/// by the generate subcommand.
pub fn expected_facts_to_json(facts: &[crate::constructions::ExpectedFact]) -> Value {
    serde_json::to_value(facts).expect("facts serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::spectrum::distance_spectrum;

    #[test]
    fn text_round_trip_exact() {
        let set = constructions::grid_section(4, 3).unwrap().set;
        let text = format_point_set(&set);
        let back = parse_point_set(&text).unwrap();
        assert_eq!(back.mode_name(), "exact");
        assert_eq!(back.len(), 12);
        let s1 = distance_spectrum(&set).unwrap();
        let s2 = distance_spectrum(&back).unwrap();
        assert_eq!(s1.rows(), s2.rows());
    }

    #[test]
    fn text_round_trip_approx() {
        let set = constructions::regular_ngon(9).unwrap().set;
        let text = format_point_set(&set);
        let back = parse_point_set(&text).unwrap();
        let s1 = distance_spectrum(&set).unwrap();
        let s2 = distance_spectrum(&back).unwrap();
        assert_eq!(s1.rows(), s2.rows());
    }

    #[test]
    fn header_is_mandatory() {
        assert!(parse_point_set("0 0\n1 1\n").is_err());
        assert!(parse_point_set("mode: weird\n0 0\n").is_err());
        let ok = parse_point_set("# comment\nmode: exact\n1/2 3\n-2 0.25\n").unwrap();
        assert_eq!(ok.len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let set = constructions::grid_section(3, 3).unwrap().set;
        let value = point_set_to_json(&set);
        let back = point_set_from_json(&value).unwrap();
        assert_eq!(back.len(), 9);
        assert_eq!(
            distance_spectrum(&set).unwrap().rows(),
            distance_spectrum(&back).unwrap().rows()
        );
    }

    #[test]
    fn csv_shape() {
        let set = constructions::grid_section(2, 2).unwrap().set;
        let s = distance_spectrum(&set).unwrap();
        let csv = spectrum_to_csv(&s);
        assert_eq!(csv, "squared_distance,multiplicity\n1,4\n2,2\n");
    }
}

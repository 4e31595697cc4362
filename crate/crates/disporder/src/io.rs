//! File formats: a JSON document per distribution and a `value,count` CSV
//! ingest format for raw frequency tables.
//!
//! JSON conventions: exact scalars appear as integers or `"num/den"`
//! strings, approx scalars as floats. A file declares its own `mode`; an
//! `exact` file containing float atoms is rejected with guidance rather
//! than silently degraded.

use serde::{Deserialize, Serialize};

use crate::dist::DiscreteDist;
use crate::scalar::{Scalar, Tol};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct DistJson {
    label: String,
    mode: String,
    atoms: Vec<(Scalar, Scalar)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    tail_defect: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    sample_size: Option<u64>,
}

/// Pretty-printed JSON for a distribution. Zero tail defects are omitted.
pub fn dist_to_json(d: &DiscreteDist) -> String {
    let doc = DistJson {
        label: d.label().to_string(),
        mode: if d.is_approx() { "approx" } else { "exact" }.to_string(),
        atoms: d.atoms(),
        tail_defect: if d.tail_defect().is_positive() {
            Some(d.tail_defect().clone())
        } else {
            None
        },
        sample_size: d.sample_size(),
    };
    serde_json::to_string_pretty(&doc).expect("distribution serializes")
}

/// The same document as [`dist_to_json`], as a JSON value for embedding in
/// larger reports.
pub fn dist_to_value(d: &DiscreteDist) -> serde_json::Value {
    serde_json::from_str(&dist_to_json(d)).expect("distribution serializes")
}

/// Parse a distribution document. The declared `mode` is enforced: exact
/// files must contain only integers and `"num/den"` strings; approx files
/// have every scalar converted to a float.
pub fn dist_from_json(text: &str, tol: Tol) -> Result<DiscreteDist> {
    let doc: DistJson =
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("json: {e}")))?;
    let atoms = match doc.mode.as_str() {
        "exact" => {
            if let Some((v, p)) = doc
                .atoms
                .iter()
                .find(|(v, p)| !v.is_exact() || !p.is_exact())
            {
                return Err(Error::ParseError(format!(
                    "exact-mode file contains float atom ({v}, {p}); \
                     write rationals as \"num/den\" strings or integers"
                )));
            }
            doc.atoms
        }
        "approx" => doc
            .atoms
            .into_iter()
            .map(|(v, p)| (v.to_approx(), p.to_approx()))
            .collect(),
        other => {
            return Err(Error::ParseError(format!(
                "mode must be \"exact\" or \"approx\", got \"{other}\""
            )))
        }
    };
    let mut d = DiscreteDist::from_pmf_with(&doc.label, atoms, tol)?;
    if let Some(defect) = doc.tail_defect {
        d = d.with_tail_defect(defect)?;
    }
    Ok(d.with_sample_size(doc.sample_size))
}

/// Parse a `value,count` CSV (header required, case-insensitive,
/// whitespace-trimmed). Values are parsed exactly (integers, decimals, or
/// `num/den`); counts must be non-negative integers. Zero-count rows are
/// kept here and dropped by [`DiscreteDist::from_samples`].
pub fn counts_from_csv(text: &str) -> Result<Vec<(Scalar, u64)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| Error::ParseError(format!("csv: {e}")))?
        .clone();
    let names: Vec<String> = headers
        .iter()
        .map(|s| s.trim().to_ascii_lowercase())
        .collect();
    if names != ["value", "count"] {
        return Err(Error::ParseError(format!(
            "expected header `value,count`, got `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let line = i + 2; // header is line 1
        let rec = rec.map_err(|e| Error::ParseError(format!("line {line}: {e}")))?;
        if rec.len() != 2 {
            return Err(Error::ParseError(format!(
                "line {line}: expected 2 fields, got {}",
                rec.len()
            )));
        }
        let value = Scalar::parse_exact(&rec[0]).map_err(|_| {
            Error::ParseError(format!(
                "line {line}: bad value `{}` (use an integer, decimal, or num/den)",
                &rec[0]
            ))
        })?;
        let count: i64 = rec[1]
            .parse()
            .map_err(|_| Error::ParseError(format!("line {line}: bad count `{}`", &rec[1])))?;
        if count < 0 {
            return Err(Error::ParseError(format!(
                "line {line}: negative count {count}"
            )));
        }
        out.push((value, count as u64));
    }
    Ok(out)
}

/// Build an empirical distribution straight from CSV text.
pub fn dist_from_csv(label: &str, text: &str, tol: Tol) -> Result<DiscreteDist> {
    DiscreteDist::from_samples_with(label, counts_from_csv(text)?, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_exact() {
        let d = DiscreteDist::geometric(Scalar::ratio(1, 2), Scalar::ratio(1, 8)).unwrap();
        let text = dist_to_json(&d);
        let back = dist_from_json(&text, Tol::default()).unwrap();
        assert_eq!(back.label(), d.label());
        assert_eq!(back.support(), d.support());
        assert_eq!(back.probs(), d.probs());
        assert_eq!(back.tail_defect(), d.tail_defect());
        assert!(!back.is_approx());
    }

    #[test]
    fn json_round_trip_approx_and_samples() {
        let d = DiscreteDist::poisson(Scalar::approx(2.0), Scalar::approx(1e-9)).unwrap();
        let back = dist_from_json(&dist_to_json(&d), Tol::default()).unwrap();
        assert!(back.is_approx());
        assert!(back.same_law(&d, Tol::default()));
        let s = DiscreteDist::from_samples(vec![(Scalar::int(0), 3), (Scalar::int(1), 5)]).unwrap();
        let back = dist_from_json(&dist_to_json(&s), Tol::default()).unwrap();
        assert_eq!(back.sample_size(), Some(8));
    }

    #[test]
    fn exact_mode_file_rejects_floats() {
        let text = r#"{"label":"x","mode":"exact","atoms":[[0,0.5],[1,"1/2"]]}"#;
        let err = dist_from_json(text, Tol::default()).unwrap_err();
        match err {
            Error::ParseError(msg) => assert!(msg.contains("num/den")),
            other => panic!("unexpected error {other}"),
        }
        let bad_mode = r#"{"label":"x","mode":"fast","atoms":[[0,"1/2"],[1,"1/2"]]}"#;
        assert!(matches!(
            dist_from_json(bad_mode, Tol::default()),
            Err(Error::ParseError(_))
        ));
    }

    #[test]
    fn approx_mode_converts_everything() {
        let text = r#"{"label":"x","mode":"approx","atoms":[[0,"1/2"],[1,"1/2"]]}"#;
        let d = dist_from_json(text, Tol::default()).unwrap();
        assert!(d.is_approx());
    }

    #[test]
    fn csv_parses_trims_and_reports_lines() {
        let text = "Value, Count\n0, 15\n0.5, 5\n3/2, 0\n2, 8\n";
        let counts = counts_from_csv(text).unwrap();
        assert_eq!(counts.len(), 4);
        assert_eq!(counts[1].0, Scalar::ratio(1, 2));
        assert_eq!(counts[2], (Scalar::ratio(3, 2), 0));
        let d = DiscreteDist::from_samples(counts).unwrap();
        assert_eq!(d.n(), 3); // zero-count row dropped
        assert_eq!(d.sample_size(), Some(28));

        let neg = counts_from_csv("value,count\n0,4\n1,-2\n").unwrap_err();
        match neg {
            Error::ParseError(msg) => assert!(msg.contains("line 3")),
            other => panic!("unexpected error {other}"),
        }
        assert!(counts_from_csv("val,count\n0,1\n").is_err());
        assert!(counts_from_csv("value,count\n1e-3,1\n").is_err());
    }
}

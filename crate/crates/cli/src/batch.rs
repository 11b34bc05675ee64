//! Order-preserving parallel batch driver. Records never abort the batch;
//! failures become error entries in the report.

use crate::input::PolytopeInput;
use crate::report::{BatchReport, ReportRecord};
use finetope_core::classify::{analyze_hollow, classify_with_id, is_hollow};
use finetope_core::lattice::normalize_affine_lattice;
use finetope_core::LatticePolytope;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BatchMode {
    Classify,
    Hollow,
}

fn build_polytope(input: &PolytopeInput) -> Result<LatticePolytope, String> {
    match (input.dim, &input.affine) {
        (3, _) => LatticePolytope::hull(&input.vertices).map_err(|e| e.to_string()),
        (4, Some(spec)) => {
            let (images, _) =
                normalize_affine_lattice(spec, &input.vertices).map_err(|e| e.to_string())?;
            LatticePolytope::hull(&images).map_err(|e| e.to_string())
        }
        (4, None) => Err("4-column input requires an affine-lattice description".into()),
        (d, _) => Err(format!("unsupported ambient dimension {d}")),
    }
}

fn process(input: &PolytopeInput, mode: BatchMode) -> ReportRecord {
    let id = input.id.clone();
    let p = match build_polytope(input) {
        Ok(p) => p,
        Err(e) => return ReportRecord::from_error(id, e),
    };
    match mode {
        BatchMode::Classify => match classify_with_id(&p, id.clone()) {
            Ok(rec) => ReportRecord::from_classification(&rec),
            Err(e) => ReportRecord::from_error(id, e.to_string()),
        },
        BatchMode::Hollow => {
            if !is_hollow(&p) {
                return ReportRecord::from_error(id, "polytope is not hollow".into());
            }
            match analyze_hollow(&p, None) {
                Ok(rec) => ReportRecord::from_hollow(id, &rec),
                Err(e) => ReportRecord::from_error(id, e.to_string()),
            }
        }
    }
}

/// Processes every input with the given parallelism; the output order
/// always equals the input order.
pub fn run_batch(inputs: &[PolytopeInput], jobs: usize, mode: BatchMode) -> BatchReport {
    let start = Instant::now();
    let records: Vec<ReportRecord> = if jobs == 1 {
        inputs.iter().map(|i| process(i, mode)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            inputs.par_iter().map(|i| process(i, mode)).collect()
        })
    };
    let mut summary: BTreeMap<String, usize> = BTreeMap::new();
    for r in &records {
        let key = if r.error.is_some() {
            "error".to_string()
        } else {
            match mode {
                BatchMode::Classify => r.regime.clone().unwrap_or_else(|| "unknown".into()),
                BatchMode::Hollow => {
                    if r.fi_dim == Some(-1) {
                        "empty".to_string()
                    } else {
                        "nonempty".to_string()
                    }
                }
            }
        };
        *summary.entry(key).or_insert(0) += 1;
    }
    BatchReport {
        records,
        summary,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_polytope_file;

    #[test]
    fn batch_preserves_order_and_captures_errors() {
        let text = "id a\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n\nid b\n0 0 0\n1 0 0\n\nid c\n2 3 8\n1 0 0\n0 1 0\n-1 -1 -1\n";
        let inputs = parse_polytope_file(text).unwrap();
        let report = run_batch(&inputs, 1, BatchMode::Classify);
        assert_eq!(report.records.len(), 3);
        assert_eq!(report.records[0].id.as_deref(), Some("a"));
        assert_eq!(report.records[0].regime.as_deref(), Some("K3"));
        assert!(report.records[1].error.is_some());
        assert_eq!(
            report.records[2].regime.as_deref(),
            Some("elliptic_asymmetric")
        );
        assert_eq!(report.summary.get("error"), Some(&1));
    }

    #[test]
    fn empty_batch() {
        let report = run_batch(&[], 1, BatchMode::Classify);
        assert!(report.records.is_empty());
        assert!(report.summary.is_empty());
    }

    #[test]
    fn parallel_output_is_identical() {
        let mut text = String::new();
        for f in finetope_core::fixtures::ASYM.iter() {
            text.push_str(&format!("id {}\n", f.id));
            for v in &f.vertices {
                text.push_str(&format!("{} {} {}\n", v[0], v[1], v[2]));
            }
            text.push('\n');
        }
        let inputs = parse_polytope_file(&text).unwrap();
        let seq = run_batch(&inputs, 1, BatchMode::Classify);
        let par = run_batch(&inputs, 4, BatchMode::Classify);
        let a = crate::report::emit_report(&seq, crate::report::Format::Json);
        let b = crate::report::emit_report(&par, crate::report::Format::Json);
        assert_eq!(a, b);
    }
}

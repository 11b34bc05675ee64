//! Runs the embedded corpus and diffs every computed record against the
//! expected values, printing one line per fixture.

use finetope_core::arith::rat;
use finetope_core::classify::{analyze_hollow, classify_with_id};
use finetope_core::fixtures::{self, to_vectors};
use finetope_core::{LatticeVector, RationalVector};

pub struct FixtureOutcome {
    pub name: String,
    pub failures: Vec<String>,
}

impl FixtureOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    field: &str,
    got: &T,
    want: &T,
) {
    if got != want {
        failures.push(format!("{field}: got {got:?}, want {want:?}"));
    }
}

fn sorted_lattice(mut v: Vec<LatticeVector>) -> Vec<LatticeVector> {
    v.sort();
    v
}

pub fn run_all() -> Vec<FixtureOutcome> {
    let mut out = Vec::new();
    for f in fixtures::ASYM.iter() {
        let mut failures = Vec::new();
        match classify_with_id(&f.polytope(), Some(f.id.to_string())) {
            Ok(r) => {
                let mut fi = r.fi_vertices.clone();
                fi.sort();
                check(&mut failures, "fi", &fi, &f.expected_fi());
                check(
                    &mut failures,
                    "v_delta",
                    &r.v_delta,
                    &Some(LatticeVector::from_i64(&f.v_delta)),
                );
                check(
                    &mut failures,
                    "lambda",
                    &r.lambda,
                    &Some(rat(f.lambda_.0, f.lambda_.1)),
                );
                check(
                    &mut failures,
                    "supp",
                    &r.supp,
                    &sorted_lattice(to_vectors(f.supp)),
                );
                let mut can = r.canonical_hull_vertices.clone();
                can.sort();
                check(&mut failures, "can", &can, &f.expected_can());
                check(
                    &mut failures,
                    "theta_plus",
                    &r.theta_plus_vertices.map(sorted_lattice),
                    &Some(sorted_lattice(to_vectors(&f.theta_plus))),
                );
                check(
                    &mut failures,
                    "regime",
                    &r.regime.label(),
                    &"elliptic_asymmetric",
                );
            }
            Err(e) => failures.push(format!("classify failed: {e}")),
        }
        out.push(FixtureOutcome {
            name: format!("asym {}", f.id),
            failures,
        });
    }
    for f in fixtures::SYM.iter() {
        let mut failures = Vec::new();
        match classify_with_id(&f.polytope(), Some(f.id.to_string())) {
            Ok(r) => {
                let mut fi = r.fi_vertices.clone();
                fi.sort();
                check(&mut failures, "fi", &fi, &f.expected_fi());
                let v = LatticeVector::from_i64(&f.v_delta);
                let got_v = r.v_delta.clone().unwrap_or_else(|| LatticeVector::zero(3));
                if got_v != v && got_v != v.neg() {
                    failures.push(format!("v_delta: got {got_v:?}, want ±{v:?}"));
                }
                check(
                    &mut failures,
                    "lambda",
                    &r.lambda,
                    &Some(rat(f.lambda_.0, f.lambda_.1)),
                );
                check(
                    &mut failures,
                    "supp",
                    &r.supp,
                    &sorted_lattice(to_vectors(f.supp)),
                );
                let own: Vec<RationalVector> = f
                    .polytope()
                    .vertices()
                    .iter()
                    .map(|x| x.to_rational())
                    .collect();
                let mut can = r.canonical_hull_vertices.clone();
                can.sort();
                check(&mut failures, "can=vertices", &can, &own);
                let expected_pi = finetope_core::Int::from(f.expected_pi1());
                check(&mut failures, "pi1", &r.pi1_order, &expected_pi);
                check(
                    &mut failures,
                    "regime",
                    &r.regime.label(),
                    &"elliptic_symmetric",
                );
                // the two reflexive facets, compared as an unordered pair
                let got_pair = [
                    r.theta_plus_vertices.clone().map(sorted_lattice),
                    r.theta_minus_vertices.clone().map(sorted_lattice),
                ];
                let want0 = Some(sorted_lattice(to_vectors(f.theta_pair[0])));
                let want1 = Some(sorted_lattice(to_vectors(f.theta_pair[1])));
                let direct = got_pair[0] == want0 && got_pair[1] == want1;
                let crossed = got_pair[0] == want1 && got_pair[1] == want0;
                if !(direct || crossed) {
                    failures.push(format!(
                        "theta pair mismatch: got {:?}",
                        got_pair
                    ));
                }
            }
            Err(e) => failures.push(format!("classify failed: {e}")),
        }
        out.push(FixtureOutcome {
            name: format!("sym {}", f.id),
            failures,
        });
    }
    for f in fixtures::DIM3.iter() {
        let mut failures = Vec::new();
        match classify_with_id(&f.polytope(), Some(f.id.to_string())) {
            Ok(r) => {
                let mut fi = r.fi_vertices.clone();
                fi.sort();
                check(&mut failures, "fi", &fi, &f.expected_fi());
                check(
                    &mut failures,
                    "supp",
                    &r.supp,
                    &sorted_lattice(to_vectors(f.supp)),
                );
                let mut can = r.canonical_hull_vertices.clone();
                can.sort();
                check(&mut failures, "can", &can, &f.expected_can());
                check(
                    &mut failures,
                    "pi1",
                    &r.pi1_order,
                    &finetope_core::Int::from(f.pi1),
                );
                check(&mut failures, "regime", &r.regime.label(), &"general_type");
            }
            Err(e) => failures.push(format!("classify failed: {e}")),
        }
        out.push(FixtureOutcome {
            name: format!("dim3 {}", f.id),
            failures,
        });
    }
    for f in fixtures::HOLLOW.iter() {
        let mut failures = Vec::new();
        match analyze_hollow(&f.polytope(), Some(f.index)) {
            Ok(r) => {
                check(&mut failures, "width", &r.width, &finetope_core::Int::from(f.width));
                check(&mut failures, "fi_dim", &r.fi_dim, &f.fi_dim);
                let mut fi = r.fi_vertices.clone();
                fi.sort();
                check(&mut failures, "fi", &fi, &f.expected_fi());
                if f.fi_dim >= 0 {
                    check(
                        &mut failures,
                        "supp",
                        &r.supp.map(|mut s| {
                            s.sort();
                            s
                        }),
                        &Some(sorted_lattice(to_vectors(f.supp))),
                    );
                    check(
                        &mut failures,
                        "pi1",
                        &r.pi1_order,
                        &Some(finetope_core::Int::from(f.pi1)),
                    );
                    let own: Vec<RationalVector> = f
                        .polytope()
                        .vertices()
                        .iter()
                        .map(|x| x.to_rational())
                        .collect();
                    check(
                        &mut failures,
                        "can=vertices",
                        &r.canonical_hull_vertices.map(|mut c| {
                            c.sort();
                            c
                        }),
                        &Some(own),
                    );
                }
            }
            Err(e) => failures.push(format!("analyze_hollow failed: {e}")),
        }
        out.push(FixtureOutcome {
            name: format!("hollow {}", f.index),
            failures,
        });
    }
    out
}

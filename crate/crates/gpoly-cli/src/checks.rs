//! The verification checks: each one sweeps the relevant faces (or face
//! pairs) of a polytope and reports pass/fail with exact residual data.

use gpoly_core::gpoly::GContext;
use gpoly_core::stress::{g1_geometric, g2_geometric};
use gpoly_core::{BitSet, FaceLattice, GPolynomial, Polytope};
use num_bigint::BigInt;

use crate::format::PolytopeFile;
use crate::report::{poly_coeffs, CheckOutcome, Status};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Stanley,
    Inversion,
    Decomposition,
    Kalai,
    Nonneg,
    RelNonneg,
    Thm5,
    JoinUnit,
}

pub const ALL_CHECKS: [CheckKind; 8] = [
    CheckKind::Stanley,
    CheckKind::Inversion,
    CheckKind::Decomposition,
    CheckKind::Kalai,
    CheckKind::Nonneg,
    CheckKind::RelNonneg,
    CheckKind::Thm5,
    CheckKind::JoinUnit,
];

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Stanley => "stanley",
            CheckKind::Inversion => "inversion",
            CheckKind::Decomposition => "decomposition",
            CheckKind::Kalai => "kalai",
            CheckKind::Nonneg => "nonneg",
            CheckKind::RelNonneg => "relnonneg",
            CheckKind::Thm5 => "thm5",
            CheckKind::JoinUnit => "joinunit",
        }
    }

    pub fn parse_list(text: &str) -> Result<Vec<CheckKind>, CliError> {
        if text.trim() == "all" {
            return Ok(ALL_CHECKS.to_vec());
        }
        text.split(',')
            .map(|part| {
                let part = part.trim();
                ALL_CHECKS
                    .into_iter()
                    .find(|k| k.name() == part)
                    .ok_or_else(|| CliError::Parse(format!("unknown check {:?}", part)))
            })
            .collect()
    }
}

fn face_label(lattice: &FaceLattice, f: gpoly_core::FaceId) -> String {
    format!(
        "face(dim {}, vertices {:?})",
        lattice.dim_of(f),
        lattice.vertex_set(f).to_vec()
    )
}

fn coeffs_or_display(p: &GPolynomial) -> String {
    match poly_coeffs(p) {
        Ok(c) => format!("{:?}", c),
        Err(_) => p.to_string(),
    }
}

/// Runs one check over the whole polytope; never fails, the outcome carries
/// the result.
pub fn run_check(
    kind: CheckKind,
    polytope: &Polytope,
    file: &PolytopeFile,
    memo_limit: Option<usize>,
) -> CheckOutcome {
    let lattice = polytope.face_lattice();
    let ctx = match memo_limit {
        Some(limit) => GContext::with_memo_limit(lattice, limit),
        None => GContext::new(lattice),
    };
    let mut failures = Vec::new();
    let mut cases = 0usize;
    let mut residual = None;
    let mut note = None;

    match kind {
        CheckKind::Stanley => {
            let r = ctx.stanley_residual();
            cases = 1;
            if !r.is_zero() {
                failures.push(format!("residual {}", coeffs_or_display(&r)));
            }
            residual = poly_coeffs(&r).ok();
        }
        CheckKind::Inversion => {
            for f in lattice.face_ids() {
                cases += 1;
                let direct = ctx.g_relative(f).expect("face of the lattice");
                let inverted = ctx.g_relative_by_inversion(f).expect("face of the lattice");
                if direct != inverted {
                    failures.push(format!(
                        "{}: recursion {} vs inversion {}",
                        face_label(lattice, f),
                        coeffs_or_display(&direct),
                        coeffs_or_display(&inverted)
                    ));
                }
            }
        }
        CheckKind::Decomposition => {
            for (fprime, f) in lattice.comparable_pairs() {
                cases += 1;
                let r = ctx
                    .decomposition_residual(fprime, f)
                    .expect("comparable faces");
                if !r.is_zero() {
                    failures.push(format!(
                        "{} below {}: residual {}",
                        face_label(lattice, fprime),
                        face_label(lattice, f),
                        coeffs_or_display(&r)
                    ));
                }
            }
        }
        CheckKind::Kalai => {
            for f in lattice.face_ids() {
                cases += 1;
                let deficit = ctx.kalai_deficit(f).expect("face of the lattice");
                if !deficit.coefficientwise_nonneg() {
                    failures.push(format!(
                        "{}: deficit {}",
                        face_label(lattice, f),
                        coeffs_or_display(&deficit)
                    ));
                }
            }
        }
        CheckKind::Nonneg => {
            for f in lattice.face_ids() {
                cases += 1;
                let g = ctx.g_interval(lattice.bottom(), f);
                if !g.coefficientwise_nonneg() {
                    failures.push(format!(
                        "{}: g {}",
                        face_label(lattice, f),
                        coeffs_or_display(&g)
                    ));
                }
            }
        }
        CheckKind::RelNonneg => {
            for f in lattice.face_ids() {
                cases += 1;
                let rel = ctx.g_relative(f).expect("face of the lattice");
                if !rel.coefficientwise_nonneg() {
                    failures.push(format!(
                        "{}: g(P, F) {}",
                        face_label(lattice, f),
                        coeffs_or_display(&rel)
                    ));
                }
            }
        }
        CheckKind::Thm5 => {
            for f in lattice.face_ids() {
                cases += 1;
                let rel = ctx.g_relative(f).expect("face of the lattice");
                let g1 = g1_geometric(polytope, f);
                let g2 = g2_geometric(polytope, f);
                if BigInt::from(g1) != rel.coeff(1) || BigInt::from(g2) != rel.coeff(2) {
                    failures.push(format!(
                        "{}: geometric ({}, {}) vs coefficients ({}, {})",
                        face_label(lattice, f),
                        g1,
                        g2,
                        rel.coeff(1),
                        rel.coeff(2)
                    ));
                }
            }
        }
        CheckKind::JoinUnit => {
            match file.join_faces.as_ref() {
                None => {
                    note = Some("no join faces recorded; check is vacuous".to_string());
                }
                Some(factors) => {
                    for indices in factors {
                        cases += 1;
                        let atoms: BitSet = indices.iter().copied().collect();
                        match lattice.face_by_vertex_set(&atoms) {
                            None => failures.push(format!(
                                "recorded join factor {:?} is not a face",
                                indices
                            )),
                            Some(f) => {
                                let rel = ctx.g_relative(f).expect("face of the lattice");
                                if !rel.is_one() {
                                    failures.push(format!(
                                        "{}: g(P, F) = {}, required [1]",
                                        face_label(lattice, f),
                                        coeffs_or_display(&rel)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    CheckOutcome {
        check: kind.name().to_string(),
        status: if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        cases,
        residual,
        failures,
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gpoly_core::geometry::{cube, pyramid};

    fn outcome(kind: CheckKind, p: &Polytope, file: &PolytopeFile) -> CheckOutcome {
        run_check(kind, p, file, None)
    }

    #[test]
    fn all_checks_pass_on_the_cube() {
        let p = cube(3);
        let file = PolytopeFile::from_polytope("cube3", &p, None);
        for kind in ALL_CHECKS {
            let out = outcome(kind, &p, &file);
            assert_eq!(out.status, Status::Pass, "{} failed", kind.name());
        }
    }

    #[test]
    fn stanley_reports_the_zero_residual() {
        let p = cube(3);
        let file = PolytopeFile::from_polytope("cube3", &p, None);
        let out = outcome(CheckKind::Stanley, &p, &file);
        assert_eq!(out.residual, Some(vec![]));
    }

    #[test]
    fn joinunit_fails_on_a_genuine_join() {
        // The recursion gives g(P, F) = 0 on proper join factors, so the
        // required value [1] cannot hold; the check must say so.
        let p = pyramid(&cube(2));
        let file = PolytopeFile::from_polytope(
            "pyramid",
            &p,
            Some(vec![vec![0], vec![1, 2, 3, 4]]),
        );
        let out = outcome(CheckKind::JoinUnit, &p, &file);
        assert_eq!(out.status, Status::Fail);
        assert_eq!(out.cases, 2);
        assert!(out.failures.iter().all(|f| f.contains("required [1]")));
    }

    #[test]
    fn check_list_parsing() {
        assert_eq!(CheckKind::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            CheckKind::parse_list("stanley, kalai").unwrap(),
            vec![CheckKind::Stanley, CheckKind::Kalai]
        );
        assert!(CheckKind::parse_list("bogus").is_err());
    }
}

//! Case definitions for each suite. Expected values come from closed-form
//! tables (σ, the rank table 1, p+1, p, 0, Steinberg ranks, generating
//! functions), never from the computation being checked.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::config::{Suite, SuiteConfig};
use crate::algebra::FieldSpec;
use crate::bar::{bar_report, gr_summary};
use crate::complex::{
    build_complex, cohomology, complex_dims, expected_top_rank, h2_cokernel_check,
    rank_generating_check, HomologyProfile, Specialization,
};
use crate::error::Result;
use crate::fm::{
    category_closure_check, divisor_sum, fm_matches_isogeny, fm_shape, ideal_membership_report,
    FiniteRingSpec, DEFAULT_CLOSURE_BUDGET, DEFAULT_MEMBERSHIP_BUDGET,
};
use crate::gamma::{
    associativity_check, basis_report, convergence_check, duality_check, normal_form_check,
    span_check, Precision,
};
use crate::isogeny::{relations_report, sigma, socle_report};
use crate::subgroups::{
    group_complex_report, order_complex_report, product_decomposition_check, AbelianPGroup,
};

/// Largest grade used by the Γ and bar suites.
pub const GAMMA_RMAX: u32 = 4;
/// Largest r for specialization sweeps and the subgroup complex.
pub const SWEEP_RMAX: u32 = 3;
/// Grade bound for the rank bookkeeping table.
pub const BOOKKEEPING_RMAX: u32 = 5;
/// Grade total up to which duality is also checked over k[x] without truncation.
pub const EXACT_DUALITY_TOTAL: usize = 2;
pub const ASSOCIATIVITY_TRIPLES: usize = 1000;

pub struct Outcome {
    pub dims: Vec<usize>,
    pub expected: Value,
    pub computed: Value,
    pub detail: Value,
}

impl Outcome {
    fn new(dims: Vec<usize>, expected: Value, computed: Value) -> Self {
        Outcome { dims, expected, computed, detail: Value::Null }
    }

    fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Case {
    pub suite: Suite,
    pub name: &'static str,
    pub params: Value,
    pub run: Runner,
}

fn case(suite: Suite, name: &'static str, params: Value, run: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Case {
    Case { suite, name, params, run: Box::new(run) }
}

/// The profile the main theorem predicts for K_{p^r}: rank table in degree r only.
fn expected_profile(p: u32, r: u32) -> HomologyProfile {
    HomologyProfile::from_pairs([(r as i32, expected_top_rank(p, r))])
}

fn profile_json(h: &HomologyProfile) -> Value {
    json!(h.ranks)
}

fn field(p: u32, degree: u32) -> Result<FieldSpec> {
    FieldSpec::new(p, degree)
}

pub fn cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let mut suites = config.suites.clone();
    suites.sort_unstable();
    suites.dedup();
    for suite in suites {
        match suite {
            Suite::Main => main_cases(config, &mut out),
            Suite::Gamma => gamma_cases(config, &mut out),
            Suite::Bar => bar_cases(config, &mut out),
            Suite::Groups => group_cases(config, &mut out),
            Suite::Appendix => appendix_cases(config, &mut out),
        }
    }
    out
}

fn main_cases(config: &SuiteConfig, out: &mut Vec<Case>) {
    let s = Suite::Main;
    for p in config.prime_list() {
        for r in 0..=config.r_max {
            out.push(case(s, "closed-point", json!({"p": p, "r": r}), move || {
                let cx = build_complex(p, r, Specialization::ClosedPoint, FieldSpec::prime(p)?)?;
                let h = cohomology(&cx)?;
                Ok(Outcome::new(cx.dims.clone(), profile_json(&expected_profile(p, r)), profile_json(&h)))
            }));
        }
        for degree in 1..=config.ext {
            for r in 0..=config.r_max.min(SWEEP_RMAX) {
                let params = json!({"p": p, "r": r, "field_degree": degree});
                out.push(case(s, "specialization", params, move || {
                    let k = field(p, degree)?;
                    let mut seen = BTreeSet::new();
                    let points = k.elements();
                    for &a in &points {
                        let cx = build_complex(p, r, Specialization::FieldPoint(a), k)?;
                        seen.insert(cohomology(&cx)?.ranks);
                    }
                    let computed: Vec<_> = seen.into_iter().collect();
                    Ok(Outcome::new(
                        complex_dims(p, r),
                        json!([expected_profile(p, r).ranks]),
                        json!(computed),
                    )
                    .with_detail(json!({"points": points.len()})))
                }));
            }
        }
        let rank_rmax = config.r_max;
        out.push(case(s, "rank-bookkeeping", json!({"p": p, "r_max": BOOKKEEPING_RMAX, "rank_r_max": rank_rmax}), move || {
            let rep = rank_generating_check(p, BOOKKEEPING_RMAX, rank_rmax)?;
            let expected = json!({
                "dims": rep.dims.iter().map(|d| (d.0, d.1, d.3)).collect::<Vec<_>>(),
                "top_ranks": rep.top_ranks.iter().map(|t| (t.0, t.2)).collect::<Vec<_>>(),
                "euler": rep.euler.iter().map(|e| (e.0, e.2)).collect::<Vec<_>>(),
                "concentrated": true,
            });
            let computed = json!({
                "dims": rep.dims.iter().map(|d| (d.0, d.1, d.2 as i64)).collect::<Vec<_>>(),
                "top_ranks": rep.top_ranks.iter().map(|t| (t.0, t.1 as i64)).collect::<Vec<_>>(),
                "euler": rep.euler.iter().map(|e| (e.0, e.1)).collect::<Vec<_>>(),
                "concentrated": rep.concentrated,
            });
            Ok(Outcome::new(complex_dims(p, BOOKKEEPING_RMAX), expected, computed))
        }));
        out.push(case(s, "cokernel", json!({"p": p}), move || {
            let rep = h2_cokernel_check(p)?;
            let pu = p as usize;
            Ok(Outcome::new(
                vec![],
                json!({"square_commutes": true, "well_defined": true, "dim_coker_u1": pu, "dim_coker_s": pu, "induced_rank": pu}),
                json!({"square_commutes": rep.square_commutes, "well_defined": rep.well_defined,
                       "dim_coker_u1": rep.dim_coker_u1, "dim_coker_s": rep.dim_coker_s, "induced_rank": rep.induced_rank}),
            ))
        }));
        for r in 1..=config.r_max.min(SWEEP_RMAX) {
            out.push(case(s, "socle", json!({"p": p, "r": r}), move || {
                let rep = socle_report(p, r)?;
                Ok(Outcome::new(
                    vec![rep.rows, rep.cols],
                    json!({"rank": sigma(p, r + 1)}),
                    json!({"rank": rep.rank}),
                ))
            }));
        }
        out.push(case(s, "relations", json!({"p": p}), move || {
            let rep = relations_report(p)?;
            let pu = p as usize;
            let s2 = sigma(p, 2);
            Ok(Outcome::new(
                vec![rep.dim_a11],
                json!({"square_commutes": true, "composite_zero": true, "rank_u1": s2,
                       "dim_coker_u1": pu, "dim_coker_s": pu, "rank_vbar": pu, "kernel_vbar": s2}),
                json!({"square_commutes": rep.square_commutes, "composite_zero": rep.composite_zero,
                       "rank_u1": rep.rank_u1, "dim_coker_u1": rep.dim_coker_u1, "dim_coker_s": rep.dim_coker_s,
                       "rank_vbar": rep.rank_vbar, "kernel_vbar": rep.dim_a11 - rep.rank_vbar}),
            ))
        }));
    }
}

fn gamma_cases(config: &SuiteConfig, out: &mut Vec<Case>) {
    let s = Suite::Gamma;
    let rmax = config.r_max.min(GAMMA_RMAX) as usize;
    let trunc = config.trunc;
    let seed = config.seed;
    for p in config.prime_list() {
        for degree in 1..=config.ext {
            for r in 0..=rmax {
                let params = json!({"p": p, "field_degree": degree, "r": r});
                out.push(case(s, "basis", params.clone(), move || {
                    let rep = basis_report(field(p, degree)?, r)?;
                    let sg = sigma(p, r as u32);
                    Ok(Outcome::new(
                        vec![rep.basis_size],
                        json!({"basis_size": sg, "pairing_rank": sg}),
                        json!({"basis_size": rep.basis_size, "pairing_rank": rep.pairing_rank}),
                    ))
                }));
                out.push(case(s, "span", params.clone(), move || {
                    let rep = span_check(field(p, degree)?, r)?;
                    Ok(Outcome::new(vec![], json!({"rank": sigma(p, r as u32)}), json!({"rank": rep.rank})))
                }));
                let precision = if r <= EXACT_DUALITY_TOTAL { Precision::Exact } else { Precision::Trunc(trunc) };
                let nf_params = json!({"p": p, "field_degree": degree, "r": r, "precision": precision});
                out.push(case(s, "normal-form", nf_params, move || {
                    let rep = normal_form_check(field(p, degree)?, r, precision)?;
                    Ok(Outcome::new(vec![rep.words], json!({"mismatches": 0}), json!({"mismatches": rep.mismatches}))
                        .with_detail(json!({"rewrites": rep.rewrites})))
                }));
            }
            for total in 0..=rmax {
                for r in 0..=total {
                    let r2 = total - r;
                    let mut precisions = vec![Precision::Trunc(trunc)];
                    if total <= EXACT_DUALITY_TOTAL {
                        precisions.insert(0, Precision::Exact);
                    }
                    for precision in precisions {
                        let params = json!({"p": p, "field_degree": degree, "r": r, "r2": r2, "precision": precision});
                        out.push(case(s, "duality", params, move || {
                            let rep = duality_check(field(p, degree)?, r, r2, precision)?;
                            Ok(Outcome::new(vec![], json!({"mismatches": 0}), json!({"mismatches": rep.mismatches}))
                                .with_detail(json!({"cases": rep.cases})))
                        }));
                    }
                }
            }
            let grade = rmax.max(1);
            let params = json!({"p": p, "field_degree": degree, "triples": ASSOCIATIVITY_TRIPLES, "max_grade": grade, "seed": seed});
            out.push(case(s, "associativity", params, move || {
                let rep = associativity_check(field(p, degree)?, ASSOCIATIVITY_TRIPLES, grade, seed)?;
                Ok(Outcome::new(
                    vec![],
                    json!({"triples": ASSOCIATIVITY_TRIPLES, "failures": 0}),
                    json!({"triples": rep.triples, "failures": rep.failures}),
                )
                .with_detail(json!({"rewrites": rep.rewrites, "order_checks": rep.order_checks})))
            }));
            out.push(case(s, "convergence", json!({"p": p, "field_degree": degree}), move || {
                Ok(Outcome::new(vec![], json!(true), json!(convergence_check(field(p, degree)?))))
            }));
        }
    }
}

fn bar_cases(config: &SuiteConfig, out: &mut Vec<Case>) {
    let s = Suite::Bar;
    for p in config.prime_list() {
        for r in 0..=config.r_max.min(GAMMA_RMAX) {
            out.push(case(s, "homology", json!({"p": p, "r": r}), move || {
                let rep = bar_report(FieldSpec::prime(p)?, r)?;
                Ok(Outcome::new(
                    rep.dims.clone(),
                    json!({"profile": expected_profile(p, r).ranks, "dims": rep.modular_dims}),
                    json!({"profile": rep.homology.ranks, "dims": rep.dims}),
                ))
            }));
            if r == 0 {
                continue;
            }
            out.push(case(s, "graded-pieces", json!({"p": p, "r": r}), move || {
                let rep = gr_summary(FieldSpec::prime(p)?, r)?;
                let total = expected_top_rank(p, r);
                Ok(Outcome::new(
                    vec![rep.pieces.len()],
                    json!({"filtration": true, "pieces_ok": true, "gr_rank_sum": total, "total_rank": total}),
                    json!({"filtration": rep.filtration_ok, "pieces_ok": rep.pieces.iter().all(|g| g.pass()),
                           "gr_rank_sum": rep.gr_rank_sum, "total_rank": rep.total_rank}),
                ))
            }));
        }
    }
}

fn group_cases(config: &SuiteConfig, out: &mut Vec<Case>) {
    let s = Suite::Groups;
    for p in config.prime_list() {
        let mut groups: Vec<Vec<u32>> = vec![vec![2], vec![3], vec![2, 1], vec![2, 2]];
        groups.extend((1..=3).map(|r| vec![1; r]));
        for exps in groups {
            out.push(case(s, "order-complex", json!({"p": p, "group": exps}), move || {
                let g = AbelianPGroup::new(p, exps.clone())?;
                let rep = order_complex_report(&g)?;
                // pG ≠ 0: contractible; (ℤ/p)^n: free of Steinberg rank in degree n−2
                let expected: Vec<(i32, usize, Vec<u64>)> = if g.is_elementary() {
                    let n = exps.len() as u32;
                    vec![(n as i32 - 2, (p as usize).pow(n * (n - 1) / 2), vec![])]
                } else {
                    vec![]
                };
                Ok(Outcome::new(rep.f_vector.clone(), json!(expected), json!(rep.homology.groups)))
            }));
        }
        for r in 1..=config.r_max.min(SWEEP_RMAX) {
            let m = config.torsion.unwrap_or(r);
            out.push(case(s, "group-complex", json!({"p": p, "r": r, "torsion": m}), move || {
                let rep = group_complex_report(p, r, m)?;
                Ok(Outcome::new(
                    rep.dims.clone(),
                    json!({"profile": expected_profile(p, r).ranks, "subgroups": sigma(p, r)}),
                    json!({"profile": rep.cohomology.ranks, "subgroups": rep.subgroup_count}),
                )
                .with_detail(json!({"coefficient_prime": rep.coefficient_prime, "elementary": rep.elementary_count})))
            }));
            out.push(case(s, "decomposition", json!({"p": p, "r": r, "torsion": m}), move || {
                let rep = product_decomposition_check(p, r, m)?;
                let elementary = rep.factors.iter().filter(|f| f.elementary).count();
                Ok(Outcome::new(
                    vec![rep.factors.len()],
                    json!({"dims_match": true, "differential_match": true, "type_match": true, "factors_ok": true, "factors": sigma(p, r)}),
                    json!({"dims_match": rep.dims_match, "differential_match": rep.differential_match,
                           "type_match": rep.type_match,
                           "factors_ok": rep.factors.iter().all(|f| f.matches_expectation),
                           "factors": rep.factors.len()}),
                )
                .with_detail(json!({"elementary_factors": elementary})))
            }));
        }
    }
}

/// ℤ/n for n ≤ 30, F_q for q ≤ 9, and F_2[t]/(t^3).
pub fn closure_rings() -> Vec<FiniteRingSpec> {
    let mut v: Vec<FiniteRingSpec> = (1..=30).map(FiniteRingSpec::IntegersMod).collect();
    for (p, degree) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        v.push(FiniteRingSpec::Field { p, degree });
    }
    v.push(FiniteRingSpec::Truncated { p: 2, degree: 1, e: 3 });
    v
}

fn appendix_cases(config: &SuiteConfig, out: &mut Vec<Case>) {
    let s = Suite::Appendix;
    let m_max = config.m_max;
    let bound = m_max * m_max;
    for m in 1..=bound {
        out.push(case(s, "fm-shape", json!({"m": m}), move || {
            let rep = fm_shape(m);
            let sg = divisor_sum(m);
            Ok(Outcome::new(
                vec![rep.degree_x as usize, rep.degree_y as usize],
                json!({"degree_x": sg, "degree_y": sg, "unit_leads": true}),
                json!({"degree_x": rep.degree_x, "degree_y": rep.degree_y,
                       "unit_leads": rep.lead_x.abs() == 1 && rep.lead_y.abs() == 1}),
            ))
        }));
    }
    for m in 1..=bound {
        for n in 1..=bound / m {
            out.push(case(s, "membership", json!({"m": m, "n": n}), move || {
                let rep = ideal_membership_report(m, n, DEFAULT_MEMBERSHIP_BUDGET)?;
                Ok(Outcome::new(vec![], json!(true), json!(rep.member))
                    .with_detail(json!({"remainder_terms": rep.remainder_terms})))
            }));
        }
    }
    for ring in closure_rings() {
        out.push(case(s, "closure", json!({"ring": ring.to_string(), "m_max": m_max}), move || {
            let rep = category_closure_check(ring, m_max, DEFAULT_CLOSURE_BUDGET)?;
            Ok(Outcome::new(
                vec![rep.size],
                json!({"counterexamples": 0, "identities": true}),
                json!({"counterexamples": rep.counterexample_count, "identities": rep.identities_ok}),
            )
            .with_detail(json!({"composable": rep.composable})))
        }));
    }
    for p in config.prime_list() {
        for r in 0..=config.r_max {
            out.push(case(s, "isogeny-consistency", json!({"p": p, "r": r}), move || {
                Ok(Outcome::new(vec![], json!(true), json!(fm_matches_isogeny(p, r))))
            }));
        }
    }
}

//! The integer polynomials F_m, the ideal-membership property, and the
//! category D(R) over small finite rings.

pub mod membership;
pub mod poly;
pub mod rings;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

pub use membership::{
    ideal_membership, ideal_membership_report, reduce_by_unit_leading, MembershipReport,
    DEFAULT_MEMBERSHIP_BUDGET,
};
pub use poly::{divisor_pairs, divisor_sum, f_m, IntBivarPoly, IntPoly, IntTrivarPoly};
pub use rings::{
    category_closure_check, irreducible_poly, ClosureReport, Counterexample, FiniteRing,
    FiniteRingSpec, DEFAULT_CLOSURE_BUDGET, MAX_RING_SIZE,
};

use crate::isogeny::f_poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FmShapeReport {
    pub m: u64,
    pub sigma: u64,
    pub degree_x: u32,
    pub degree_y: u32,
    pub lead_x: i64,
    pub lead_y: i64,
}

impl FmShapeReport {
    pub fn pass(&self) -> bool {
        let unit = |c: &i64| c.abs() == 1;
        self.degree_x as u64 == self.sigma
            && self.degree_y as u64 == self.sigma
            && unit(&self.lead_x)
            && unit(&self.lead_y)
    }
}

/// Degrees and leading coefficients of F_m in each variable.
pub fn fm_shape(m: u64) -> FmShapeReport {
    let f = f_m(m);
    let lead = |v: usize| {
        let l = f.leading_in(v);
        if l.len() == 1 { l.coeff(&[0, 0]).to_i64().unwrap_or(0) } else { 0 }
    };
    FmShapeReport {
        m,
        sigma: divisor_sum(m),
        degree_x: f.degree_in(0),
        degree_y: f.degree_in(1),
        lead_x: lead(0),
        lead_y: lead(1),
    }
}

/// F_{p^r} over ℤ reduced mod p agrees with the relation polynomial used by the isogeny rings.
pub fn fm_matches_isogeny(p: u32, r: u32) -> bool {
    let modulus = BigInt::from(p);
    let a = f_m((p as u64).pow(r)).reduce_mod(&modulus);
    let b = IntBivarPoly::from_terms(f_poly(p, r).terms.iter().map(|&(u, v, c)| ([u, v], BigInt::from(c))))
        .reduce_mod(&modulus);
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(terms: &[(u32, u32, i64)]) -> IntBivarPoly {
        IntBivarPoly::from_terms(terms.iter().map(|&(a, b, c)| ([a, b], BigInt::from(c))))
    }

    #[test]
    fn small_fm() {
        assert_eq!(f_m(1), poly(&[(1, 0, 1), (0, 1, -1)]));
        assert_eq!(f_m(2), poly(&[(3, 0, 1), (2, 2, -1), (1, 1, -1), (0, 3, 1)]));
        let factors = [(1, 4), (2, 2), (4, 1)]
            .iter()
            .fold(IntBivarPoly::one(), |acc, &(d, e)| acc.mul(&poly(&[(d, 0, 1), (0, e, -1)])));
        assert_eq!(f_m(4), factors);
    }

    #[test]
    fn shapes() {
        for m in 1..=16 {
            assert!(fm_shape(m).pass(), "{:?}", fm_shape(m));
        }
        assert_eq!(fm_shape(6).sigma, 12);
    }

    #[test]
    fn membership_up_to_16() {
        let r = ideal_membership_report(1, 1, DEFAULT_MEMBERSHIP_BUDGET).unwrap();
        assert!(r.member);
        for m in 1..=16u64 {
            for n in 1..=16 / m {
                assert!(ideal_membership(m, n).unwrap(), "m={m} n={n}");
            }
        }
        assert!(ideal_membership_report(4, 4, 10).is_err());
    }

    #[test]
    fn non_member_detected() {
        // F_3(x,z) is not in (F_2(x,y), F_1(y,z)) since x = z would force F_2(x,x) | F_3(x,x)
        let fmn: IntTrivarPoly = f_m(3).embed([0, 2]);
        let r1 = reduce_by_unit_leading(&fmn, &f_m(1).embed([1, 2]), 2).unwrap();
        let r2 = reduce_by_unit_leading(&r1, &f_m(2).embed([0, 1]), 1).unwrap();
        assert!(!r2.is_zero());
    }

    #[test]
    fn isogeny_consistency() {
        for (p, rmax) in [(2u32, 4u32), (3, 3), (5, 2)] {
            for r in 0..=rmax {
                assert!(fm_matches_isogeny(p, r), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn rings_and_evaluation() {
        let z4 = FiniteRing::new(FiniteRingSpec::IntegersMod(4)).unwrap();
        assert_eq!(z4.eval_f(2, 2, 2), 0);
        assert_eq!(z4.eval_f(4, 2, 2), 0);
        assert_eq!(irreducible_poly(2, 3), vec![1, 1, 0, 1]);
        let f8 = FiniteRing::new(FiniteRingSpec::Field { p: 2, degree: 3 }).unwrap();
        assert!(f8.is_domain());
        let f9 = FiniteRing::new(FiniteRingSpec::Field { p: 3, degree: 2 }).unwrap();
        assert!(f9.is_domain());
        let t = FiniteRing::new(FiniteRingSpec::Truncated { p: 2, degree: 1, e: 3 }).unwrap();
        assert_eq!(t.size(), 8);
        assert!(!t.is_domain());
        // t = index 2, t^3 = 0
        assert_eq!(t.pow(2, 3), 0);
        assert_ne!(t.pow(2, 2), 0);
        for ring in [&z4, &f8, &t] {
            for m in 1..=6 {
                let f = f_m(m);
                for a in 0..ring.size() as u32 {
                    for b in 0..ring.size() as u32 {
                        assert_eq!(ring.eval_f(m, a, b), ring.eval_poly(&f, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn closure() {
        let mut specs: Vec<FiniteRingSpec> = (1..=30).map(FiniteRingSpec::IntegersMod).collect();
        specs.extend([
            FiniteRingSpec::Field { p: 2, degree: 1 },
            FiniteRingSpec::Field { p: 2, degree: 2 },
            FiniteRingSpec::Field { p: 2, degree: 3 },
            FiniteRingSpec::Field { p: 3, degree: 2 },
            FiniteRingSpec::Field { p: 7, degree: 1 },
            FiniteRingSpec::Truncated { p: 2, degree: 1, e: 3 },
        ]);
        for s in specs {
            let rep = category_closure_check(s, 6, DEFAULT_CLOSURE_BUDGET).unwrap();
            assert!(rep.pass(), "{rep:?}");
            assert!(rep.composable > 0);
        }
        assert!(category_closure_check(FiniteRingSpec::IntegersMod(30), 6, 1000).is_err());
    }
}

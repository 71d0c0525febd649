//! Subgroup lattices of finite abelian p-groups, their order complexes, and the
//! chain complex built from subgroups of (ℤ/p^M)^2.

pub mod group;
pub mod group_complex;
pub mod simplicial;

pub use group::{count_elementary, AbelianPGroup, Subgroup, MAX_GROUP_ORDER, MAX_SUBGROUPS};
pub use group_complex::{
    build_group_complex, coefficient_prime, d_complex, group_complex_report, order_complex_report,
    product_decomposition_check, DecompositionReport, FactorReport, GroupComplex, GroupComplexReport,
    OrderComplexReport, MAX_CHAINS,
};
pub use simplicial::{
    chain_complex_of, order_complex, order_complex_below, reduced_homology, Coefficients,
    ReducedHomology, SimplicialComplexData, MAX_FACES,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    #[test]
    fn order_complex_examples() {
        let x = order_complex(&AbelianPGroup::new(3, vec![1]).unwrap()).unwrap();
        assert!(x.faces.is_empty());
        let h = reduced_homology(&x, Coefficients::Integers).unwrap();
        assert_eq!(h.groups, vec![(-1, 1, vec![])]);

        let v4 = order_complex(&AbelianPGroup::elementary(2, 2).unwrap()).unwrap();
        assert_eq!(v4.f_vector(), vec![3]);

        let e3 = order_complex(&AbelianPGroup::elementary(2, 3).unwrap()).unwrap();
        assert_eq!(e3.f_vector(), vec![14, 21]);
        let h = reduced_homology(&e3, Coefficients::Integers).unwrap();
        assert_eq!(h.groups, vec![(1, 8, vec![])]);
        let hf = reduced_homology(&e3, Coefficients::Field(FieldSpec::prime(3).unwrap())).unwrap();
        assert_eq!(hf.groups, vec![(1, 8, vec![])]);

        let c = order_complex(&AbelianPGroup::new(5, vec![2]).unwrap()).unwrap();
        assert_eq!(c.f_vector(), vec![1]);
        assert!(reduced_homology(&c, Coefficients::Integers).unwrap().is_zero());
    }

    #[test]
    fn contractible_and_building_cases() {
        for p in [2u32, 3] {
            for e in [vec![2], vec![3], vec![2, 1], vec![2, 2]] {
                let g = AbelianPGroup::new(p, e).unwrap();
                let rep = order_complex_report(&g).unwrap();
                assert!(rep.expected.is_none());
                assert!(rep.pass(), "{rep:?}");
            }
            for r in 1..=3 {
                let rep = order_complex_report(&AbelianPGroup::elementary(p, r).unwrap()).unwrap();
                assert_eq!(rep.expected, Some((r as i32 - 2, (p as usize).pow(r * (r - 1) / 2))));
                assert!(rep.pass(), "{rep:?}");
            }
        }
    }

    #[test]
    fn group_complex_examples() {
        let r1 = group_complex_report(2, 1, 1).unwrap();
        assert_eq!(r1.dims, vec![3]);
        assert_eq!(r1.cohomology.ranks, vec![(1, 3)]);
        assert!(r1.pass());

        let r2 = group_complex_report(2, 2, 2).unwrap();
        assert_eq!(r2.cohomology.ranks, vec![(2, 2)]);
        assert_eq!(r2.elementary_count, 1);
        assert!(r2.pass());

        let r3 = group_complex_report(2, 3, 3).unwrap();
        assert!(r3.cohomology.ranks.is_empty());
        assert_eq!(r3.expected_rank, 0);
        assert!(r3.pass());

        // the torsion level does not matter once M ≥ r
        let r2b = group_complex_report(2, 2, 3).unwrap();
        assert_eq!(r2b.dims, r2.dims);
        assert_eq!(r2b.cohomology, r2.cohomology);
        assert!(build_group_complex(2, 3, 2, FieldSpec::prime(3).unwrap()).is_err());
        assert!(build_group_complex(2, 1, 1, FieldSpec::prime(2).unwrap()).is_err());
    }

    #[test]
    fn group_complex_other_primes() {
        for (p, r) in [(3u32, 1u32), (3, 2), (3, 3), (5, 1), (5, 2)] {
            let rep = group_complex_report(p, r, r).unwrap();
            assert!(rep.pass(), "{rep:?}");
        }
    }

    #[test]
    fn product_decomposition() {
        let d = product_decomposition_check(2, 2, 2).unwrap();
        assert!(d.pass(), "{d:?}");
        assert_eq!(d.factors.len(), 7);
        assert_eq!(d.factors.iter().filter(|f| f.elementary).count(), 1);
        let el = d.factors.iter().find(|f| f.elementary).unwrap();
        assert_eq!(el.cohomology.ranks, vec![(2, 2)]);

        let d1 = product_decomposition_check(2, 1, 1).unwrap();
        assert!(d1.pass());
        assert_eq!(d1.factors.len(), 3);
        assert!(d1.factors.iter().all(|f| f.cohomology.ranks == vec![(1, 1)]));

        for (p, r) in [(3u32, 2u32), (2, 3), (3, 3)] {
            let d = product_decomposition_check(p, r, r).unwrap();
            assert!(d.pass(), "{d:?}");
        }
    }

    #[test]
    fn coefficient_primes() {
        assert_eq!(coefficient_prime(2), 3);
        assert_eq!(coefficient_prime(3), 2);
        assert_eq!(coefficient_prime(7), 2);
    }
}

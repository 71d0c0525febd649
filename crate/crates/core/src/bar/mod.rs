//! Bar complex of Γ at the closed fiber and its monomial filtration.

pub mod complex;
pub mod filtration;

pub use complex::{bar_basis, bar_complex, BarComplexOverK, BarTuple};
pub use filtration::{
    bar_homology, bar_report, face_model_dim, gr_piece_check, gr_summary, BarReport, GrPiece,
    GrSummary,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::gamma::Word;

    fn k(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn dims_examples() {
        assert_eq!(bar_complex(k(2), 2).unwrap().dims(), vec![7, 9]);
        assert_eq!(bar_complex(k(2), 3).unwrap().dims()[2], 27);
        let one = bar_complex(k(3), 1).unwrap();
        assert_eq!(one.dims(), vec![4]);
        assert!(one.complex.maps.is_empty());
    }

    #[test]
    fn homology_examples() {
        assert_eq!(bar_homology(k(2), 2).unwrap().ranks, vec![(2, 2)]);
        assert_eq!(bar_homology(k(3), 1).unwrap().ranks, vec![(1, 4)]);
        assert!(bar_homology(k(2), 4).unwrap().ranks.is_empty());
        assert_eq!(bar_homology(k(2), 0).unwrap().ranks, vec![(0, 1)]);
    }

    #[test]
    fn reports_pass_small() {
        for p in [2, 3] {
            for r in 0..=3 {
                let rep = bar_report(k(p), r).unwrap();
                assert!(rep.pass(), "{rep:?}");
            }
        }
    }

    #[test]
    fn face_model() {
        assert_eq!(face_model_dim(&Word::new(&[0, 0, 0]), 1), 1);
        assert_eq!(face_model_dim(&Word::new(&[0, 0, 0]), 2), 2);
        assert_eq!(face_model_dim(&Word::new(&[0, 0, 0]), 3), 1);
        // the descent at (1,0) must be cut
        assert_eq!(face_model_dim(&Word::new(&[1, 0, 2]), 1), 0);
        assert_eq!(face_model_dim(&Word::new(&[1, 0, 2]), 2), 1);
        assert_eq!(face_model_dim(&Word::new(&[1, 0, 2]), 3), 1);
    }

    #[test]
    fn gr_pieces() {
        let zero = gr_piece_check(k(2), &Word::new(&[0, 0, 0])).unwrap();
        assert_eq!(zero.dims, vec![1, 2, 1]);
        assert!(zero.homology.ranks.is_empty());
        let single = gr_piece_check(k(3), &Word::new(&[2])).unwrap();
        assert_eq!(single.homology.ranks, vec![(1, 1)]);
        let d = gr_piece_check(k(2), &Word::new(&[1, 0])).unwrap();
        assert_eq!(d.dims, vec![0, 1]);
        assert_eq!(d.homology.ranks, vec![(2, 1)]);
        for p in [2, 3] {
            for r in 1..=3 {
                let s = gr_summary(k(p), r).unwrap();
                assert!(s.pass(), "p={p} r={r}");
            }
        }
        assert!(gr_summary(k(2), 0).is_err());
    }
}

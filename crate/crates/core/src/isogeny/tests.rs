use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{BaseRing, FieldSpec, Fq, PointRing, PolyRing, SeriesRing};

fn f(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn poly_ring(p: u32, rs: &[u32]) -> IsogRing<PolyRing> {
    IsogRing::new(PolyRing::new(f(p)), ChainShape::new(p, rs.to_vec())).unwrap()
}

/// Builds Σ c·x^e from `(exps with x_0 first, integer coeff)`.
fn raw(k: &FieldSpec, terms: &[(&[u32], i64)]) -> Vec<(Vec<u32>, Fq)> {
    terms.iter().map(|(e, c)| (e.to_vec(), k.from_int(*c))).collect()
}

fn random_elem<R: BaseRing>(ring: &IsogRing<R>, rng: &mut ChaCha8Rng) -> IsogRingElement<R> {
    let base = ring.base();
    let k = *base.field();
    let elems = k.elements();
    let mut acc = ring.zero();
    for idx in 0..ring.dim() {
        if rng.gen_bool(0.5) {
            continue;
        }
        let coeff: Vec<Fq> = (0..3).map(|_| elems[rng.gen_range(0..elems.len())]).collect();
        let c = base.from_poly(&coeff);
        acc = ring.add(&acc, &ring.scale(&c, &ring.basis_element(idx))).unwrap();
    }
    acc
}

#[test]
fn x1_cubed_in_a1_over_f2() {
    let k = f(2);
    let a1 = poly_ring(2, &[1]);
    let got = a1.reduce(&raw(&k, &[(&[0, 3], 1)])).unwrap();
    let want = a1.reduce(&raw(&k, &[(&[3, 0], 1), (&[1, 1], 1), (&[2, 2], 1)])).unwrap();
    assert_eq!(got, want);
    // the x_0-powers land in the coefficients
    assert_eq!(got.coeffs()[0].degree(), Some(3));
}

#[test]
fn x1_power_p_plus_one_with_signs() {
    for p in [3u32, 5] {
        let k = f(p);
        let a1 = poly_ring(p, &[1]);
        let got = a1.reduce(&raw(&k, &[(&[0, p + 1], 1)])).unwrap();
        let want = a1
            .reduce(&raw(&k, &[(&[p + 1, 0], -1), (&[1, 1], 1), (&[p, p], 1)]))
            .unwrap();
        assert_eq!(got, want, "p = {p}");
    }
}

#[test]
fn reduced_monomials_are_fixed() {
    let a1 = poly_ring(2, &[1]);
    let m = a1.monomial(&[2]).unwrap();
    assert_eq!(m, a1.basis_element(2));
}

#[test]
fn x2_cubed_in_a11_over_f2() {
    let k = f(2);
    let a = poly_ring(2, &[1, 1]);
    let got = a.reduce(&raw(&k, &[(&[0, 0, 3], 1)])).unwrap();
    let want = a
        .reduce(&raw(
            &k,
            &[
                (&[3, 0, 0], 1),
                (&[1, 1, 0], 1),
                (&[2, 2, 0], 1),
                (&[0, 1, 1], 1),
                (&[0, 2, 2], 1),
            ],
        ))
        .unwrap();
    assert_eq!(got, want);
}

#[test]
fn defining_relations_vanish() {
    for p in [2u32, 3] {
        let k = f(p);
        for rs in [vec![1], vec![2], vec![1, 2], vec![2, 1, 1]] {
            let ring = poly_ring(p, &rs);
            for (j, &r) in rs.iter().enumerate() {
                let fp = f_poly(p, r);
                let terms: Vec<(Vec<u32>, Fq)> = fp
                    .terms
                    .iter()
                    .map(|&(a, b, c)| {
                        let mut e = vec![0; rs.len() + 1];
                        e[j] = a;
                        e[j + 1] = b;
                        (e, k.from_int(c))
                    })
                    .collect();
                assert!(ring.is_zero(&ring.reduce(&terms).unwrap()), "p={p} rs={rs:?} j={j}");
            }
        }
    }
}

#[test]
fn dimensions_are_sigma_products() {
    for p in [2u32, 3] {
        for rs in [vec![], vec![1], vec![3], vec![1, 1, 1, 1, 1], vec![2, 3], vec![4, 1]] {
            let ring = poly_ring(p, &rs);
            let want: usize = rs.iter().map(|&r| sigma(p, r)).product();
            assert_eq!(ring.dim(), want);
        }
    }
}

#[test]
fn mul_examples() {
    let a1 = poly_ring(2, &[1]);
    let x1 = a1.variable(1).unwrap();
    let one = a1.one();
    assert_eq!(a1.mul(&x1, &one).unwrap(), x1);
    let x1sq = a1.monomial(&[2]).unwrap();
    assert_eq!(a1.mul(&x1, &x1sq).unwrap(), a1.monomial(&[3]).unwrap());

    let a11 = poly_ring(2, &[1, 1]);
    let s = a11.add(&a11.variable(1).unwrap(), &a11.variable(2).unwrap()).unwrap();
    let want = a11.add(&a11.monomial(&[2, 0]).unwrap(), &a11.monomial(&[0, 2]).unwrap()).unwrap();
    assert_eq!(a11.mul(&s, &s).unwrap(), want);
}

#[test]
fn shape_mismatch_is_an_error() {
    let a1 = poly_ring(2, &[1]);
    let a2 = poly_ring(2, &[2]);
    assert!(a1.mul(&a1.one(), &a2.one()).is_err());
}

#[test]
fn ring_axioms_on_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [2u32, 3] {
        for rs in [vec![1], vec![1, 1], vec![2, 1]] {
            let ring = poly_ring(p, &rs);
            for _ in 0..5 {
                let a = random_elem(&ring, &mut rng);
                let b = random_elem(&ring, &mut rng);
                let c = random_elem(&ring, &mut rng);
                let ab = ring.mul(&a, &b).unwrap();
                assert_eq!(ab, ring.mul(&b, &a).unwrap());
                assert_eq!(ring.mul(&ab, &c).unwrap(), ring.mul(&a, &ring.mul(&b, &c).unwrap()).unwrap());
                let lhs = ring.mul(&a, &ring.add(&b, &c).unwrap()).unwrap();
                let rhs = ring.add(&ab, &ring.mul(&a, &c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn mul_by_var_matches_mul() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ring = poly_ring(3, &[1, 2]);
    for _ in 0..5 {
        let a = random_elem(&ring, &mut rng);
        for j in 0..=2 {
            let xj = ring.variable(j).unwrap();
            assert_eq!(ring.mul_by_var(&a, j).unwrap(), ring.mul(&a, &xj).unwrap());
        }
    }
}

fn incremental_matches_direct<R: BaseRing>(base: R, p: u32) {
    for target_rs in [vec![1, 1], vec![2, 1], vec![1, 2], vec![1, 1, 1], vec![2, 2]] {
        let target = IsogRing::new(base.clone(), ChainShape::new(p, target_rs.clone())).unwrap();
        for k in 1..target_rs.len() {
            let src_shape = target.shape().merged(k).unwrap();
            let source = IsogRing::new(base.clone(), src_shape).unwrap();
            let fast = u_basis_images(&source, &target, k).unwrap();
            for idx in 0..source.dim() {
                let direct = u_map(&source, &target, k, &source.basis_element(idx)).unwrap();
                assert_eq!(fast[idx], direct, "shape {target_rs:?}, k={k}, idx={idx}");
            }
        }
    }
}

#[test]
fn u_images_incremental_equals_direct() {
    incremental_matches_direct(PolyRing::new(f(2)), 2);
    incremental_matches_direct(SeriesRing::new(f(3), 8), 3);
    let k4 = FieldSpec::quadratic(2).unwrap();
    incremental_matches_direct(PointRing::new(k4, k4.generator()), 2);
}

#[test]
fn u_map_examples() {
    let a4 = poly_ring(2, &[2]);
    let a22 = poly_ring(2, &[1, 1]);
    assert_eq!(u_map(&a4, &a22, 1, &a4.one()).unwrap(), a22.one());
    let x1 = a4.variable(1).unwrap();
    assert_eq!(u_map(&a4, &a22, 1, &x1).unwrap(), a22.variable(2).unwrap());
    let x0 = a4.variable(0).unwrap();
    assert_eq!(u_map(&a4, &a22, 1, &x0).unwrap(), a22.variable(0).unwrap());
    assert!(u_map(&a4, &a22, 2, &x0).is_err());
    assert!(u_map(&a4, &a22, 0, &x0).is_err());
}

#[test]
fn u_maps_are_ring_homomorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [2u32, 3] {
        let target = poly_ring(p, &[1, 2]);
        let source = poly_ring(p, &[3]);
        for _ in 0..4 {
            let a = random_elem(&source, &mut rng);
            let b = random_elem(&source, &mut rng);
            let lhs = u_map(&source, &target, 1, &source.mul(&a, &b).unwrap()).unwrap();
            let rhs = target
                .mul(
                    &u_map(&source, &target, 1, &a).unwrap(),
                    &u_map(&source, &target, 1, &b).unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn simplicial_identities() {
    let base = PointRing::closed_point(f(2));
    for t in [vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 1, 1]] {
        let target = IsogRing::new(base, ChainShape::new(2, t.clone())).unwrap();
        let q = t.len();
        for i in 1..q {
            for j in i + 1..q {
                // path 1: u_j then u_i on the merged ring
                let mid_j = IsogRing::new(base, target.shape().merged(j).unwrap()).unwrap();
                let src = IsogRing::new(base, mid_j.shape().merged(i).unwrap()).unwrap();
                let mid_i = IsogRing::new(base, target.shape().merged(i).unwrap()).unwrap();
                assert_eq!(mid_i.shape().merged(j - 1).unwrap(), *src.shape());
                for idx in 0..src.dim() {
                    let e = src.basis_element(idx);
                    let a = u_map(&mid_j, &target, j, &u_map(&src, &mid_j, i, &e).unwrap()).unwrap();
                    let b =
                        u_map(&mid_i, &target, i, &u_map(&src, &mid_i, j - 1, &e).unwrap()).unwrap();
                    assert_eq!(a, b, "t={t:?} i={i} j={j} idx={idx}");
                }
            }
        }
    }
}

#[test]
fn s_map_examples() {
    let k = f(2);
    let a1 = poly_ring(2, &[1]);
    let fx = [Fq::ZERO, Fq::ONE];
    assert_eq!(s_map(&a1, 1, &fx).unwrap(), a1.variable(1).unwrap());
    assert_eq!(s_map(&a1, 0, &fx).unwrap(), a1.variable(0).unwrap());
    let g = [k.from_int(1), Fq::ZERO, k.from_int(1)];
    let s0 = s_map(&a1, 0, &g).unwrap();
    assert_eq!(s0.coeffs()[0], crate::algebra::Poly::from_coeffs(g.to_vec()));
    assert!(s_map(&a1, 2, &fx).is_err());

    let k4 = FieldSpec::quadratic(2).unwrap();
    let ring = IsogRing::new(PolyRing::new(k4), ChainShape::new(2, vec![1])).unwrap();
    let ux = [Fq::ZERO, k4.generator()];
    let got = s_map(&ring, 1, &ux).unwrap();
    let want = ring.scale(&PolyRing::new(k4).from_scalar(Fq::new(1, 1)), &ring.variable(1).unwrap());
    assert_eq!(got, want);
}

#[test]
fn socle_examples() {
    let r = socle_report(2, 1).unwrap();
    assert_eq!((r.rank, r.expected_rank), (7, 7));
    let r = socle_report(3, 1).unwrap();
    assert_eq!((r.rank, r.expected_rank), (13, 13));
    let r = socle_report(2, 2).unwrap();
    assert_eq!((r.rows, r.cols, r.rank), (21, 15, 15));
}

#[test]
fn relations_examples() {
    for p in [2u32, 3, 5] {
        let rep = relations_report(p).unwrap();
        assert!(rep.pass(), "{rep:?}");
        assert_eq!(rep.dim_coker_u1, p as usize);
    }
}

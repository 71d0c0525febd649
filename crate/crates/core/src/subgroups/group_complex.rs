//! The chain-indexed cochain complex of subgroups of (ℤ/p^M)^2 and its
//! decomposition by maximal subgroup.

use std::collections::HashMap;

use serde::Serialize;

use super::group::{count_elementary, AbelianPGroup, Subgroup};
use super::simplicial::{
    order_complex, order_complex_below, reduced_homology, Coefficients, ReducedHomology,
    SimplicialComplexData,
};
use crate::algebra::{is_prime, FieldSpec, MatrixFq};
use crate::complex::{cohomology, FieldComplex, HomologyProfile};
use crate::error::{Error, Result};
use crate::isogeny::sigma;

/// Cap on the dimension of any single degree of the group complex.
pub const MAX_CHAINS: usize = 20_000;

/// Smallest prime different from p.
pub fn coefficient_prime(p: u32) -> u32 {
    (2..).find(|&l| l != p && is_prime(l as u64)).expect("infinitely many primes")
}

#[derive(Clone, Debug)]
pub struct GroupComplex {
    pub p: u32,
    pub r: u32,
    pub torsion: u32,
    pub ambient: AbelianPGroup,
    /// Subgroups of order ≤ p^r, sorted.
    pub subgroups: Vec<Subgroup>,
    /// chains[q−1]: chains G_1 ⊊ ⋯ ⊊ G_q of nontrivial subgroups with |G_q| = p^r,
    /// as indices into `subgroups`.
    pub chains: Vec<Vec<Vec<usize>>>,
    pub complex: FieldComplex,
}

/// Degree q holds chains of q nontrivial subgroups ending in order p^r;
/// (δf)(G_1,…,G_{q+1}) = Σ_{k=1}^{q} (−1)^k f(…,Ĝ_k,…).
pub fn build_group_complex(p: u32, r: u32, torsion: u32, k: FieldSpec) -> Result<GroupComplex> {
    if torsion < r {
        return Err(Error::Config(format!("torsion level {torsion} must be at least r = {r}")));
    }
    if k.characteristic() == p {
        return Err(Error::Config("coefficients must have characteristic different from p".into()));
    }
    let ambient = AbelianPGroup::new(p, vec![torsion, torsion])?;
    let subgroups: Vec<Subgroup> = ambient
        .enumerate_subgroups(None)?
        .into_iter()
        .filter(|h| h.log_order <= r)
        .collect();
    let n = subgroups.len();
    // strict inclusions among nontrivial subgroups, downward
    let below: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| {
                    subgroups[i].log_order > 0
                        && subgroups[i].log_order < subgroups[j].log_order
                        && subgroups[i].is_subgroup_of(&subgroups[j])
                })
                .collect()
        })
        .collect();
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    if r >= 1 {
        // grow chains downward from the top element
        let mut current: Vec<Vec<usize>> =
            (0..n).filter(|&i| subgroups[i].log_order == r).map(|i| vec![i]).collect();
        while !current.is_empty() {
            if current.len() > MAX_CHAINS {
                return Err(Error::SizeCap {
                    what: "chains in one degree",
                    size: current.len() as u64,
                    cap: MAX_CHAINS as u64,
                });
            }
            let next: Vec<Vec<usize>> = current
                .iter()
                .flat_map(|c| {
                    below[c[0]].iter().map(move |&i| {
                        let mut d = Vec::with_capacity(c.len() + 1);
                        d.push(i);
                        d.extend_from_slice(c);
                        d
                    })
                })
                .collect();
            chains.push(sorted(current));
            current = next;
        }
    }
    let dims: Vec<usize> = chains.iter().map(Vec::len).collect();
    let mut complex = FieldComplex::new(k, 1, 1, dims);
    for q in 1..chains.len() {
        let mut m = MatrixFq::zeros(chains[q].len(), chains[q - 1].len());
        for (row, c) in chains[q].iter().enumerate() {
            // c has q+1 entries; omit positions k = 1..=q (1-based), never the last
            for pos in 0..q {
                let mut face = c.clone();
                face.remove(pos);
                let col = chains[q - 1].binary_search(&face).expect("face is a chain");
                let sign = if (pos + 1) % 2 == 0 { k.from_int(1) } else { k.from_int(-1) };
                m.set(row, col, k.add(m.get(row, col), sign));
            }
        }
        complex.set_map(q as i32, m)?;
    }
    complex.check_square_zero()?;
    Ok(GroupComplex { p, r, torsion, ambient, subgroups, chains, complex })
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupComplexReport {
    pub p: u32,
    pub r: u32,
    pub torsion: u32,
    pub coefficient_prime: u32,
    pub dims: Vec<usize>,
    pub cohomology: HomologyProfile,
    /// Number of order-p^r subgroups isomorphic to (ℤ/p)^r.
    pub elementary_count: usize,
    /// elementary_count · p^{r(r−1)/2}
    pub expected_rank: usize,
    pub subgroup_count: usize,
    pub sigma: usize,
}

impl GroupComplexReport {
    pub fn pass(&self) -> bool {
        let r = self.r as i32;
        self.cohomology.concentrated_in(r)
            && self.cohomology.rank(r) == self.expected_rank
            && self.subgroup_count == self.sigma
    }
}

pub fn group_complex_report(p: u32, r: u32, torsion: u32) -> Result<GroupComplexReport> {
    let ell = coefficient_prime(p);
    let gc = build_group_complex(p, r, torsion, FieldSpec::prime(ell)?)?;
    let cohomology = if r == 0 { HomologyProfile::default() } else { cohomology(&gc.complex)? };
    let elementary_count = count_elementary(&gc.ambient, r)?;
    let expected_rank = elementary_count * (p as usize).pow(r * r.saturating_sub(1) / 2);
    let subgroup_count = gc.subgroups.iter().filter(|h| h.log_order == r).count();
    Ok(GroupComplexReport {
        p,
        r,
        torsion,
        coefficient_prime: ell,
        dims: gc.complex.dims.clone(),
        cohomology,
        elementary_count,
        expected_rank,
        subgroup_count,
        sigma: sigma(p, r),
    })
}

/// One factor D•_G of the product decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub group_type: Vec<u32>,
    pub dims: Vec<usize>,
    pub cohomology: HomologyProfile,
    pub elementary: bool,
    /// H•(D_G) vanishes when pG ≠ 0 and sits in degree r with rank p^{r(r−1)/2} otherwise.
    pub matches_expectation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub p: u32,
    pub r: u32,
    pub torsion: u32,
    pub factors: Vec<FactorReport>,
    pub dims_match: bool,
    /// The group differential equals the block sum of −δ_D over factors.
    pub differential_match: bool,
    /// Each order complex below G has the f-vector and homology of P_G for G's type.
    pub type_match: bool,
}

impl DecompositionReport {
    pub fn pass(&self) -> bool {
        self.dims_match
            && self.differential_match
            && self.type_match
            && self.factors.iter().all(|f| f.matches_expectation)
    }
}

/// D^q_G = Hom(C̃_{q−2}(P_G), k) in degrees 1..=r with the dual of the reduced boundary.
pub fn d_complex(x: &SimplicialComplexData, r: u32, k: FieldSpec) -> Result<FieldComplex> {
    let dims: Vec<usize> = (1..=r as i32)
        .map(|q| match q - 2 {
            -1 => 1,
            d => x.faces.get(d as usize).map_or(0, Vec::len),
        })
        .collect();
    let mut cx = FieldComplex::new(k, 1, 1, dims);
    for q in 1..r as i32 {
        // δ: D^q → D^{q+1} is the transpose of ∂: C̃_{q−1} → C̃_{q−2}
        let b = x.boundary_fq(&k, q - 1);
        let mut t = MatrixFq::zeros(b.cols(), b.rows());
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                t.set(j, i, b.get(i, j));
            }
        }
        if t.rows() != cx.dim(q + 1) || t.cols() != cx.dim(q) {
            return Err(Error::MatrixShape { expected: (cx.dim(q + 1), cx.dim(q)), got: (t.rows(), t.cols()) });
        }
        cx.set_map(q, t)?;
    }
    cx.check_square_zero()?;
    Ok(cx)
}

pub fn product_decomposition_check(p: u32, r: u32, torsion: u32) -> Result<DecompositionReport> {
    if r == 0 {
        return Err(Error::Config("product decomposition needs r >= 1".into()));
    }
    let k = FieldSpec::prime(coefficient_prime(p))?;
    let gc = build_group_complex(p, r, torsion, k)?;
    let tops: Vec<usize> = (0..gc.subgroups.len()).filter(|&i| gc.subgroups[i].log_order == r).collect();
    let mut factors = Vec::new();
    let mut dims_sum = vec![0usize; r as usize];
    let mut differential_match = true;
    let mut type_match = true;
    let neg_one = k.from_int(-1);
    for &t in &tops {
        let top = &gc.subgroups[t];
        let x = order_complex_below(&gc.subgroups, top)?;
        let d = d_complex(&x, r, k)?;
        for (q, s) in dims_sum.iter_mut().enumerate() {
            *s += d.dim(q as i32 + 1);
        }
        // chain (G_1,…,G_{q−1},G) ↔ simplex (G_1,…,G_{q−1}) of P_G
        let vertex_of: HashMap<&Subgroup, usize> = x.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let cell_index = |chain: &[usize]| -> Option<(usize, usize)> {
            if *chain.last()? != t {
                return None;
            }
            let simplex: Vec<usize> = chain[..chain.len() - 1].iter().map(|&i| vertex_of[&gc.subgroups[i]]).collect();
            let q = chain.len();
            let idx = if q == 1 { 0 } else { x.faces[q - 2].iter().position(|f| *f == simplex)? };
            Some((q, idx))
        };
        for q in 1..r as usize {
            let (Some(gm), Some(dm)) = (gc.complex.maps.get(&(q as i32)), d.maps.get(&(q as i32))) else {
                continue;
            };
            for (col, src) in gc.chains[q - 1].iter().enumerate() {
                let Some((_, dcol)) = cell_index(src) else { continue };
                for (row, tgt) in gc.chains[q].iter().enumerate() {
                    let g = gm.get(row, col);
                    match cell_index(tgt) {
                        Some((_, drow)) => differential_match &= g == k.mul(neg_one, dm.get(drow, dcol)),
                        None => differential_match &= g.is_zero(),
                    }
                }
            }
        }
        let gtype = gc.ambient.subgroup_type(top)?;
        let abstract_x = order_complex(&gtype)?;
        let hx = reduced_homology(&x, Coefficients::Integers)?;
        let habs = reduced_homology(&abstract_x, Coefficients::Integers)?;
        type_match &= abstract_x.f_vector() == x.f_vector() && hx == habs;
        let cohomology = cohomology(&d)?;
        let elementary = gtype.is_elementary();
        let ri = r as i32;
        let matches_expectation = if elementary {
            cohomology.concentrated_in(ri) && cohomology.rank(ri) == (p as usize).pow(r * (r - 1) / 2)
        } else {
            cohomology.ranks.is_empty()
        };
        factors.push(FactorReport {
            group_type: gtype.exponents.clone(),
            dims: d.dims.clone(),
            cohomology,
            elementary,
            matches_expectation,
        });
    }
    Ok(DecompositionReport {
        p,
        r,
        torsion,
        factors,
        dims_match: dims_sum == gc.complex.dims,
        differential_match,
        type_match,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderComplexReport {
    pub group: AbelianPGroup,
    pub f_vector: Vec<usize>,
    pub homology: ReducedHomology,
    /// None when pG ≠ 0 (expect contractible); Some((degree, rank)) for (ℤ/p)^n.
    pub expected: Option<(i32, usize)>,
}

impl OrderComplexReport {
    pub fn pass(&self) -> bool {
        match self.expected {
            None => self.homology.is_zero(),
            Some((d, rank)) => self.homology.concentrated_free(d) && self.homology.rank(d) == rank,
        }
    }
}

/// Reduced integral homology of P_G against the contractible / Tits-building dichotomy.
pub fn order_complex_report(g: &AbelianPGroup) -> Result<OrderComplexReport> {
    let x = order_complex(g)?;
    let homology = reduced_homology(&x, Coefficients::Integers)?;
    let n = g.rank() as u32;
    let expected = if g.is_elementary() {
        Some((n as i32 - 2, (g.p as usize).pow(n * n.saturating_sub(1) / 2)))
    } else {
        None
    };
    Ok(OrderComplexReport { group: g.clone(), f_vector: x.f_vector(), homology, expected })
}

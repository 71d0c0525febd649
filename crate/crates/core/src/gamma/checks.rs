//! Structural checks on Γ: basis size, duality with A, associativity, generation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::pairing::PairingTable;
use super::ring::{GammaElement, GammaRing, RawGamma, RewriteStats};
use super::word::{admissible_basis, all_words, Word};
use crate::algebra::{
    BaseRing, FieldSpec, Fq, MatrixFq, PointRing, Poly, PolyRing, SeriesRing, TruncSeries,
};
use crate::error::Result;
use crate::isogeny::{s_map, sigma, u_map, ChainShape, IsogRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub p: u32,
    pub r: usize,
    pub basis_size: usize,
    pub sigma: usize,
    /// Rank over k of the (admissible word) × (monomial of A_r) pairing matrix at x = 0.
    pub pairing_rank: usize,
}

impl BasisReport {
    pub fn pass(&self) -> bool {
        self.basis_size == self.sigma && self.pairing_rank == self.sigma
    }
}

pub fn basis_report(k: FieldSpec, r: usize) -> Result<BasisReport> {
    let p = k.characteristic();
    let table = PairingTable::new(PointRing::new(k, Fq::ZERO), r)?;
    let basis = admissible_basis(p, r);
    let rows = basis
        .iter()
        .map(|w| table.word_row(w))
        .collect::<Result<Vec<Vec<Fq>>>>()?;
    let m = MatrixFq::from_rows(rows);
    Ok(BasisReport {
        p,
        r,
        basis_size: basis.len(),
        sigma: sigma(p, r as u32),
        pairing_rank: m.rank(&k),
    })
}

/// Coefficient ring for pairing computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Precision {
    /// k[x], no truncation.
    Exact,
    /// k⟦x⟧/(x^T).
    Trunc(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub p: u32,
    pub field_degree: u32,
    pub r: usize,
    pub r2: usize,
    pub precision: Precision,
    pub cases: usize,
    pub mismatches: usize,
}

impl DualityReport {
    pub fn pass(&self) -> bool {
        self.cases > 0 && self.mismatches == 0
    }
}

fn scaled(gamma: &GammaRing, w: &Word, c: Fq) -> GammaElement {
    let mut e = GammaElement::zero(w.len());
    e.terms.insert(w.clone(), Poly::constant(c));
    gamma.normalize(e.terms).expect("one grade")
}

/// ⟨φ·ψ, g⟩ = (φ⊗ψ)(u_1 g) over every admissible φ ∈ Γ_r, ψ ∈ Γ_{r2} and
/// monomial g ∈ A_{r+r2}. With r2 = 0 (or r = 0) the Γ_0 factor runs over
/// x^n, n ≤ p+1. Over F_{p^2} both factors carry the left scalar `generator`.
///
/// Truncated runs evaluate ψ to precision T·σ(p^r): in A_r the twist x ↦ x_1
/// only loses a factor σ(p^r) of x-adic precision since x_1^{σ(p^r)} ∈ (x).
pub fn duality_check(k: FieldSpec, r: usize, r2: usize, precision: Precision) -> Result<DualityReport> {
    let (cases, mismatches) = match precision {
        Precision::Exact => {
            let base = PolyRing::new(k);
            duality_in(base, base, |f: &Poly| f.coeffs().to_vec(), r, r2)?
        }
        Precision::Trunc(t) => {
            let wide = t * sigma(k.characteristic(), r as u32);
            duality_in(
                SeriesRing::new(k, t),
                SeriesRing::new(k, wide),
                |f: &TruncSeries| f.coeffs().to_vec(),
                r,
                r2,
            )?
        }
    };
    Ok(DualityReport {
        p: k.characteristic(),
        field_degree: k.degree(),
        r,
        r2,
        precision,
        cases,
        mismatches,
    })
}

fn duality_in<R: BaseRing, S: BaseRing>(
    base: R,
    right_base: S,
    right_coeffs: impl Fn(&S::Elem) -> Vec<Fq>,
    r: usize,
    r2: usize,
) -> Result<(usize, usize)> {
    let k = *base.field();
    let p = k.characteristic();
    let gamma = GammaRing::new(k);
    let c = if k.degree() == 2 { k.generator() } else { Fq::ONE };
    let big = PairingTable::new(base.clone(), r + r2)?;
    let mut cases = 0;
    let mut mismatches = 0;

    let phis = factor_elements(&gamma, k, r, c);
    let psis = factor_elements(&gamma, k, r2, c);
    let big_ring = big.ring();

    if r == 0 || r2 == 0 {
        for phi in &phis {
            for psi in &psis {
                let prod = gamma.gamma_mul(phi, psi)?;
                for gi in 0..big_ring.dim() {
                    let lhs = big.pair_basis(&prod.terms, gi)?;
                    let rhs = if r2 == 0 {
                        let f = psi.coeff(&Word::empty());
                        let g = big_ring.basis_element(gi);
                        let twisted = big_ring.mul(&g, &s_map(big_ring, big_ring.len(), f.coeffs())?)?;
                        big.pair(phi, &twisted)?
                    } else {
                        let f = big.coefficient(&phi.coeff(&Word::empty()));
                        base.mul(&f, &big.pair_basis(&psi.terms, gi)?)
                    };
                    cases += 1;
                    mismatches += usize::from(lhs != rhs);
                }
            }
        }
        return Ok((cases, mismatches));
    }

    let left = PairingTable::new(base.clone(), r)?;
    let right = PairingTable::new(right_base, r2)?;
    let split = IsogRing::new(base, ChainShape::new(p, vec![r as u32, r2 as u32]))?;
    let u1: Vec<_> = (0..big_ring.dim())
        .map(|i| u_map(big_ring, &split, 1, &big_ring.basis_element(i)))
        .collect::<Result<_>>()?;
    let a_r = left.ring();
    let x1_pows: Vec<_> = (0..a_r.dim()).map(|i| a_r.basis_element(i)).collect();

    for psi in &psis {
        // ψ(x_1^b), twisted into A_r
        let twisted: Vec<_> = (0..right.ring().dim())
            .map(|b| s_map(a_r, 1, &right_coeffs(&right.pair_basis(&psi.terms, b)?)))
            .collect::<Result<_>>()?;
        for phi in &phis {
            let prod = gamma.gamma_mul(phi, psi)?;
            // (φ⊗ψ)(x_1^a x_2^b) = φ(x_1^a · ψ(x_1^b)^{twist})
            let mut vals = Vec::with_capacity(x1_pows.len());
            for xa in &x1_pows {
                let row = twisted
                    .iter()
                    .map(|tw| left.pair(phi, &a_r.mul(xa, tw)?))
                    .collect::<Result<Vec<_>>>()?;
                vals.push(row);
            }
            for (gi, ug) in u1.iter().enumerate() {
                let lhs = big.pair_basis(&prod.terms, gi)?;
                let sb = split.base();
                let mut rhs = sb.zero();
                for (idx, coef) in ug.coeffs().iter().enumerate() {
                    if sb.is_zero(coef) {
                        continue;
                    }
                    let e = split.exponents(idx);
                    sb.add_assign(&mut rhs, &sb.mul(coef, &vals[e[0] as usize][e[1] as usize]));
                }
                cases += 1;
                mismatches += usize::from(lhs != rhs);
            }
        }
    }
    Ok((cases, mismatches))
}

/// Basis elements c·P_W of Γ_r, or c·x^n (n ≤ p+1) when r = 0.
fn factor_elements(gamma: &GammaRing, k: FieldSpec, r: usize, c: Fq) -> Vec<GammaElement> {
    if r == 0 {
        let p = k.characteristic() as usize;
        return (0..=p + 1).map(|n| gamma.scalar(Poly::monomial(c, n))).collect();
    }
    admissible_basis(k.characteristic(), r).iter().map(|w| scaled(gamma, w, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociativityReport {
    pub p: u32,
    pub seed: u64,
    pub triples: usize,
    pub failures: usize,
    pub rewrites: u64,
    pub order_checks: u64,
}

impl AssociativityReport {
    pub fn pass(&self) -> bool {
        self.failures == 0 && self.triples > 0
    }
}

fn random_element(rng: &mut ChaCha8Rng, k: &FieldSpec, basis: &[Word]) -> GammaElement {
    let grade = basis[0].len();
    let elems = k.elements();
    let mut raw = RawGamma::new();
    let n = rng.gen_range(1..=3.min(basis.len()));
    for w in basis.choose_multiple(rng, n) {
        let deg = rng.gen_range(0..=2);
        let coeffs: Vec<Fq> = (0..=deg).map(|_| *elems.choose(rng).expect("nonempty")).collect();
        let c = Poly::from_coeffs(coeffs);
        if !c.is_zero() {
            raw.insert(w.clone(), c);
        }
    }
    GammaElement { grade, terms: raw }
}

/// (ab)c = a(bc) on seeded random triples with total grade at most `max_grade`.
pub fn associativity_check(
    k: FieldSpec,
    triples: usize,
    max_grade: usize,
    seed: u64,
) -> Result<AssociativityReport> {
    let p = k.characteristic();
    let gamma = GammaRing::new(k);
    let bases: Vec<Vec<Word>> = (0..=max_grade).map(|r| admissible_basis(p, r)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = RewriteStats::default();
    let mut failures = 0;
    for _ in 0..triples {
        let total = rng.gen_range(0..=max_grade);
        let ga = rng.gen_range(0..=total);
        let gb = rng.gen_range(0..=total - ga);
        let gc = total - ga - gb;
        let a = random_element(&mut rng, &k, &bases[ga]);
        let b = random_element(&mut rng, &k, &bases[gb]);
        let c = random_element(&mut rng, &k, &bases[gc]);
        let mut step = |x: &GammaElement, y: &GammaElement| -> Result<GammaElement> {
            let (e, s) = gamma.gamma_mul_counted(x, y)?;
            stats.absorb(s);
            Ok(e)
        };
        let ab = step(&a, &b)?;
        let left = step(&ab, &c)?;
        let bc = step(&b, &c)?;
        let right = step(&a, &bc)?;
        failures += usize::from(left != right);
    }
    Ok(AssociativityReport {
        p,
        seed,
        triples,
        failures,
        rewrites: stats.rewrites,
        order_checks: stats.order_checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub p: u32,
    pub r: usize,
    pub rank: usize,
    pub expected: usize,
}

impl SpanReport {
    pub fn pass(&self) -> bool {
        self.rank == self.expected
    }
}

/// Products P_i·P_J (J admissible of length r−1) span Γ_r ⊗ k.
pub fn span_check(k: FieldSpec, r: usize) -> Result<SpanReport> {
    let p = k.characteristic();
    let gamma = GammaRing::new(k);
    let target = admissible_basis(p, r);
    let mut cols = Vec::new();
    if r >= 1 {
        for i in 0..=p as u8 {
            let gi = gamma.generator(i);
            for j in admissible_basis(p, r - 1) {
                let prod = gamma.gamma_mul(&gi, &gamma.word(&j))?;
                cols.push(target.iter().map(|w| prod.coeff(w).coeff(0)).collect::<Vec<_>>());
            }
        }
    }
    let rank = if r == 0 { 1 } else { MatrixFq::from_columns(target.len(), &cols).rank(&k) };
    Ok(SpanReport { p, r, rank, expected: sigma(p, r as u32) })
}

/// P_i x^{p+1} = x·Q_i: every coefficient vanishes at x = 0.
pub fn convergence_check(k: FieldSpec) -> bool {
    let gamma = GammaRing::new(k);
    let p = k.characteristic();
    let f = Poly::monomial(Fq::ONE, p as usize + 1);
    (0..=p as u8).all(|i| gamma.right_mult_gen(i, &f).iter().all(|c| c.coeff(0).is_zero()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormReport {
    pub p: u32,
    pub field_degree: u32,
    pub r: usize,
    pub words: usize,
    pub mismatches: usize,
    pub rewrites: u64,
}

impl NormalFormReport {
    pub fn pass(&self) -> bool {
        self.mismatches == 0
    }
}

/// Every word of length r (admissible or not), also times c·x^n on the right,
/// has the same pairing with A_r before and after normalization.
pub fn normal_form_check(k: FieldSpec, r: usize, precision: Precision) -> Result<NormalFormReport> {
    let (mismatches, rewrites) = match precision {
        Precision::Exact => normal_form_in(PolyRing::new(k), r)?,
        Precision::Trunc(t) => normal_form_in(SeriesRing::new(k, t), r)?,
    };
    Ok(NormalFormReport {
        p: k.characteristic(),
        field_degree: k.degree(),
        r,
        words: all_words(k.characteristic(), r).len(),
        mismatches,
        rewrites,
    })
}

fn normal_form_in<R: BaseRing>(base: R, r: usize) -> Result<(usize, u64)> {
    let k = *base.field();
    let p = k.characteristic();
    let gamma = GammaRing::new(k);
    let table = PairingTable::new(base, r)?;
    let ring = table.ring();
    let c = if k.degree() == 2 { k.generator() } else { Fq::ONE };
    let g_basis: Vec<_> = (0..ring.dim()).map(|i| ring.basis_element(i)).collect();
    let mut mismatches = 0;
    let mut stats = RewriteStats::default();
    for w in &all_words(p, r) {
        for n in 0..=p as usize + 1 {
            let f = Poly::monomial(c, n);
            let raw = gamma.right_mult_word(w, &f);
            let (normal, s) = gamma.normalize_counted(raw.clone())?;
            stats.absorb(s);
            let sf = if r == 0 {
                ring.from_base(table.coefficient(&f))
            } else {
                s_map(ring, 1, f.coeffs())?
            };
            for (gi, g) in g_basis.iter().enumerate() {
                let direct = table.pair_word(w, &ring.mul(g, &sf)?)?;
                let via_raw = table.pair_basis(&raw, gi)?;
                let via_normal = table.pair_basis(&normal.terms, gi)?;
                mismatches += usize::from(direct != via_raw || direct != via_normal);
            }
        }
    }
    Ok((mismatches, stats.rewrites))
}

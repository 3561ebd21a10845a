//! The dihedral groups `I2(p)`: closed-form construction of the three
//! factor matrices and of Ψ, for every `p ≥ 3`.
//!
//! The A matrix is derived from explicit Hecke-algebra representations
//! rather than transcribed: the one-dimensional representations send
//! `T_s, T_t` to `u` or `-1` in the four sign patterns, and the
//! two-dimensional representation `2_k` uses the generator matrices
//!
//! ```text
//! T_s = [ -1  1 ]      T_t = [  u    0 ]      γ_k = 2 + ζ^k + ζ^{-k}
//!       [  0  u ]            [ uγ_k -1 ]
//! ```
//!
//! for which `tr(T_s T_t) = u(ζ^k + ζ^{-k})` and `det(T_s T_t) = u²`, so
//! `(T_s T_t)^p = u^p·I` and the braid relation holds. Each trace is
//! multiplied by `(u-1)^{m(w)}`.
//!
//! The separately coded expansions of `AA′` and Ψ (geometric series per
//! column) serve as independent checks on the assembled product.

use crate::exact::{CycRat, PolyU, RatFnU};
use crate::meta::{dihedral_irreducibles, GroupType, IrrInfo};
use crate::strata::{
    a_double_prime_generic, assemble_psi, mul_poly_by_scalar_matrix, CharTable, ClassMeta,
    PsiMatrix, StrataError,
};

/// Conjugacy-class shape of a dihedral class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DihedralClassKind {
    /// `⟨c^j⟩`, `1 ≤ j ≤ p/2`.
    Rotation(u32),
    /// `⟨s⟩` (all reflections when p is odd).
    ReflectionS,
    /// `⟨t⟩` (p even only).
    ReflectionT,
    Identity,
}

#[derive(Clone, Debug)]
pub struct DihedralClass {
    pub meta: ClassMeta,
    pub kind: DihedralClassKind,
    pub size: u32,
}

/// Which explicit Hecke representation an irreducible uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DihedralIrrKind {
    /// `T_s, T_t ↦ u`.
    Trivial,
    /// The 2×2 representation with parameter `k`.
    TwoDim(u32),
    /// `T_s ↦ u, T_t ↦ -1` (p even).
    OnePrime,
    /// `T_s ↦ -1, T_t ↦ u` (p even).
    OneDoublePrime,
    /// `T_s, T_t ↦ -1`.
    Sign,
}

#[derive(Clone, Debug)]
pub struct DihedralIrr {
    pub info: IrrInfo,
    pub kind: DihedralIrrKind,
}

/// All per-`p` data: classes in the order `⟨c⟩, ⟨c²⟩, …, ⟨s⟩, [⟨t⟩,] ⟨1⟩`
/// and irreducibles in the order `1_0, 2_1, …, [1′, 1″,] 1_p`, matching
/// the order-preserving bijection σ.
pub struct Dihedral {
    p: u32,
    pub classes: Vec<DihedralClass>,
    pub irreps: Vec<DihedralIrr>,
}

impl Dihedral {
    pub fn new(p: u32) -> Self {
        assert!(p >= 3, "dihedral groups need p >= 3");
        let even = p % 2 == 0;
        let mut classes = Vec::new();
        for j in 1..=p / 2 {
            let label = if j == 1 { "<c>".to_string() } else { format!("<c^{j}>") };
            let size = if even && j == p / 2 { 1 } else { 2 };
            classes.push(DihedralClass {
                meta: ClassMeta::new(label, 2 * j as usize, 0),
                kind: DihedralClassKind::Rotation(j),
                size,
            });
        }
        classes.push(DihedralClass {
            meta: ClassMeta::new("<s>", 1, 1),
            kind: DihedralClassKind::ReflectionS,
            size: if even { p / 2 } else { p },
        });
        if even {
            classes.push(DihedralClass {
                meta: ClassMeta::new("<t>", 1, 1),
                kind: DihedralClassKind::ReflectionT,
                size: p / 2,
            });
        }
        classes.push(DihedralClass {
            meta: ClassMeta::new("<1>", 0, 2),
            kind: DihedralClassKind::Identity,
            size: 1,
        });

        let irreps = dihedral_irreducibles(p)
            .into_iter()
            .map(|info| {
                let kind = if info.label == "1_0" {
                    DihedralIrrKind::Trivial
                } else if info.label == "1'" {
                    DihedralIrrKind::OnePrime
                } else if info.label == "1''" {
                    DihedralIrrKind::OneDoublePrime
                } else if info.dim == 2 {
                    DihedralIrrKind::TwoDim(info.b)
                } else {
                    DihedralIrrKind::Sign
                };
                DihedralIrr { info, kind }
            })
            .collect();

        Dihedral { p, classes, irreps }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn group_type(&self) -> GroupType {
        GroupType::I2(self.p)
    }

    pub fn class_metas(&self) -> Vec<ClassMeta> {
        self.classes.iter().map(|c| c.meta.clone()).collect()
    }

    pub fn irr_infos(&self) -> Vec<IrrInfo> {
        self.irreps.iter().map(|e| e.info.clone()).collect()
    }

    /// `h = (u^p - 1)(u² - 1)`, the common denominator of A″.
    pub fn h(&self) -> PolyU {
        let up = &PolyU::unit_monomial(self.p as usize) - &PolyU::one();
        let u2 = &PolyU::unit_monomial(2) - &PolyU::one();
        &up * &u2
    }

    /// The generator images `(T_s, T_t)` of the representation `2_k`,
    /// row-major 2×2 with polynomial entries.
    pub fn hecke_rep_generators(&self, k: u32) -> ([PolyU; 4], [PolyU; 4]) {
        let u = PolyU::unit_monomial(1);
        let gamma = &(&CycRat::integer(2) + &CycRat::zeta_pow(self.p, k as i64))
            + &CycRat::zeta_pow(self.p, -(k as i64));
        let t_s = [
            PolyU::constant(CycRat::integer(-1)),
            PolyU::one(),
            PolyU::zero(),
            u.clone(),
        ];
        let t_t = [
            u.clone(),
            PolyU::zero(),
            u.scale(&gamma),
            PolyU::constant(CycRat::integer(-1)),
        ];
        (t_s, t_t)
    }

    /// Trace of `T_w` in the representation of `irr`, for the standard
    /// minimal-length word of the class.
    fn hecke_trace(&self, class: &DihedralClass, irr: &DihedralIrr) -> PolyU {
        let word: Vec<u8> = match class.kind {
            DihedralClassKind::Rotation(j) => {
                (0..j).flat_map(|_| [1u8, 2u8]).collect()
            }
            DihedralClassKind::ReflectionS => vec![1],
            DihedralClassKind::ReflectionT => vec![2],
            DihedralClassKind::Identity => vec![],
        };
        match irr.kind {
            DihedralIrrKind::TwoDim(k) => {
                let (t_s, t_t) = self.hecke_rep_generators(k);
                let mut m = [PolyU::one(), PolyU::zero(), PolyU::zero(), PolyU::one()];
                for &g in &word {
                    let f = if g == 1 { &t_s } else { &t_t };
                    m = mat2_mul(&m, f);
                }
                &m[0] + &m[3]
            }
            _ => {
                let (img_s, img_t) = match irr.kind {
                    DihedralIrrKind::Trivial => (one_u(), one_u()),
                    DihedralIrrKind::OnePrime => (one_u(), minus_one()),
                    DihedralIrrKind::OneDoublePrime => (minus_one(), one_u()),
                    DihedralIrrKind::Sign => (minus_one(), minus_one()),
                    DihedralIrrKind::TwoDim(_) => unreachable!(),
                };
                let mut acc = PolyU::one();
                for &g in &word {
                    acc = &acc * if g == 1 { &img_s } else { &img_t };
                }
                acc
            }
        }
    }

    /// The A matrix: `A_{C,E} = (u-1)^{m(C)} · tr(T_w, E)` at the
    /// minimal-length representative.
    pub fn a_matrix(&self) -> Vec<Vec<PolyU>> {
        let u_minus_1 = &PolyU::unit_monomial(1) - &PolyU::one();
        self.classes
            .iter()
            .map(|class| {
                let m = class.meta.invariants.unwrap().1;
                let mut factor = PolyU::one();
                for _ in 0..m {
                    factor = &factor * &u_minus_1;
                }
                self.irreps
                    .iter()
                    .map(|irr| &self.hecke_trace(class, irr) * &factor)
                    .collect()
            })
            .collect()
    }

    /// The A′ matrix (exotic Fourier pairing), nonzero exactly on:
    /// `(1_0,1_0) = (1_p,1_p) = 1`; `(2_j,2_k) = (2-ζ^{jk}-ζ^{-jk})/p`;
    /// and for even p `(2_j,1′) = (2_j,1″) = (1-(-1)^j)/p`,
    /// `(1′,1′) = (1″,1″) = (1-(-1)^{p/2}+p)/2p`,
    /// `(1′,1″) = (1″,1′) = (1-(-1)^{p/2}-p)/2p`.
    pub fn a_prime_matrix(&self) -> Vec<Vec<CycRat>> {
        let p = self.p;
        let inv_p = CycRat::from_ratio(1, p as i64);
        let sign_half = if (p / 2) % 2 == 0 { 1 } else { -1 };
        let n = self.irreps.len();
        let mut out = vec![vec![CycRat::zero(); n]; n];
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate() {
                use DihedralIrrKind::*;
                out[i][j] = match (a.kind, b.kind) {
                    (Trivial, Trivial) | (Sign, Sign) => CycRat::one(),
                    (TwoDim(x), TwoDim(y)) => {
                        let jk = (x as i64) * (y as i64);
                        let num = &(&CycRat::integer(2) - &CycRat::zeta_pow(p, jk))
                            - &CycRat::zeta_pow(p, -jk);
                        &num * &inv_p
                    }
                    (TwoDim(x), OnePrime | OneDoublePrime)
                    | (OnePrime | OneDoublePrime, TwoDim(x)) => {
                        let sign = if x % 2 == 0 { 1 } else { -1 };
                        CycRat::from_ratio(1 - sign, p as i64)
                    }
                    (OnePrime, OnePrime) | (OneDoublePrime, OneDoublePrime) => {
                        CycRat::from_ratio(1 - sign_half + p as i64, 2 * p as i64)
                    }
                    (OnePrime, OneDoublePrime) | (OneDoublePrime, OnePrime) => {
                        CycRat::from_ratio(1 - sign_half - p as i64, 2 * p as i64)
                    }
                    _ => CycRat::zero(),
                };
            }
        }
        out
    }

    /// The A″ matrix, every entry with denominator dividing
    /// `h = (u^p-1)(u²-1)`.
    pub fn a_double_prime_matrix(&self) -> Vec<Vec<RatFnU>> {
        let h = self.h();
        let numerators = self.a_double_prime_numerators();
        numerators
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|num| RatFnU::new(num, h.clone()).expect("h is nonzero"))
                    .collect()
            })
            .collect()
    }

    /// Numerators of A″ over the common denominator h, in terms of
    /// v-exponents (all even or paired so that entries live in `Z[u]`).
    pub fn a_double_prime_numerators(&self) -> Vec<Vec<PolyU>> {
        let p = self.p as usize;
        // v^{2a} = u^a; all exponents below are even.
        let v = |exps: &[usize]| -> PolyU {
            let mut acc = PolyU::zero();
            for &e in exps {
                assert!(e % 2 == 0, "v-exponent {e} is odd");
                acc = &acc + &PolyU::unit_monomial(e / 2);
            }
            acc
        };
        let n = self.irreps.len();
        let mut out = vec![vec![PolyU::zero(); n]; n];
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate() {
                use DihedralIrrKind::*;
                out[i][j] = match (a.kind, b.kind) {
                    (Trivial, Trivial) | (Sign, Sign) => v(&[2 * p]),
                    (Trivial, Sign) | (Sign, Trivial) => v(&[0]),
                    (Trivial, TwoDim(k)) | (TwoDim(k), Trivial) | (Sign, TwoDim(k))
                    | (TwoDim(k), Sign) => {
                        let k = k as usize;
                        v(&[2 * k, 2 * p - 2 * k])
                    }
                    (TwoDim(x), TwoDim(y)) => {
                        let (x, y) = (x as usize, y as usize);
                        let d = x.abs_diff(y);
                        v(&[2 * x + 2 * y, 2 * p - 2 * x - 2 * y, 2 * d, 2 * p - 2 * d])
                    }
                    (Trivial | Sign, OnePrime | OneDoublePrime)
                    | (OnePrime | OneDoublePrime, Trivial | Sign) => v(&[p]),
                    (TwoDim(k), OnePrime | OneDoublePrime)
                    | (OnePrime | OneDoublePrime, TwoDim(k)) => {
                        let k = k as usize;
                        v(&[2 * k + p, p - 2 * k])
                    }
                    (OnePrime, OnePrime) | (OneDoublePrime, OneDoublePrime) => v(&[2 * p]),
                    (OnePrime, OneDoublePrime) | (OneDoublePrime, OnePrime) => v(&[0]),
                };
            }
        }
        out
    }

    /// The assembled `AA′` product.
    pub fn aa_prime_matrix(&self) -> Vec<Vec<PolyU>> {
        mul_poly_by_scalar_matrix(&self.a_matrix(), &self.a_prime_matrix())
    }

    /// Ψ = A·A′·A″ with full validation (denominator cancellation,
    /// integer coefficients, sign column, identity row).
    pub fn psi(&self) -> Result<PsiMatrix, StrataError> {
        assemble_psi(
            self.group_type().to_string(),
            &self.a_matrix(),
            &self.a_prime_matrix(),
            &self.a_double_prime_matrix(),
            self.class_metas(),
            self.irr_infos(),
        )
    }

    /// The expected `AA′` matrix from the listed closed forms
    /// (the cells not covered by a listed formula are `None`).
    pub fn aa_prime_closed_form(&self) -> Vec<Vec<Option<PolyU>>> {
        let p = self.p;
        let even = p % 2 == 0;
        let u = PolyU::unit_monomial(1);
        let u_minus_1 = &u - &PolyU::one();
        let sq = &u_minus_1 * &u_minus_1;
        let n = self.irreps.len();
        let mut out = vec![vec![None; n]; self.classes.len()];
        for (ci, class) in self.classes.iter().enumerate() {
            for (ei, irr) in self.irreps.iter().enumerate() {
                use DihedralClassKind as C;
                use DihedralIrrKind as E;
                let val: Option<PolyU> = match (class.kind, irr.kind) {
                    (C::Identity, E::Trivial | E::Sign) => Some(sq.clone()),
                    (C::Identity, E::TwoDim(_)) => Some(&sq + &sq),
                    (C::ReflectionS, E::Trivial) | (C::ReflectionT, E::Trivial) => {
                        Some(&u * &u_minus_1)
                    }
                    (C::ReflectionS, E::Sign) | (C::ReflectionT, E::Sign) => {
                        Some(-&u_minus_1)
                    }
                    (C::ReflectionS, E::TwoDim(_)) | (C::ReflectionT, E::TwoDim(_)) => {
                        Some(sq.clone())
                    }
                    (C::ReflectionS, E::OnePrime) | (C::ReflectionT, E::OneDoublePrime) => {
                        Some(&u_minus_1 * &u)
                    }
                    (C::ReflectionS, E::OneDoublePrime) | (C::ReflectionT, E::OnePrime) => {
                        Some(-&u_minus_1)
                    }
                    (C::Rotation(j), E::Trivial) => Some(PolyU::unit_monomial(2 * j as usize)),
                    (C::Rotation(_), E::Sign) => Some(PolyU::one()),
                    (C::Rotation(j), E::TwoDim(k)) if !(even && j == p / 2) => {
                        Some(if j == k {
                            -&PolyU::unit_monomial(j as usize)
                        } else {
                            PolyU::zero()
                        })
                    }
                    (C::Rotation(j), E::TwoDim(_)) if even && j == p / 2 => {
                        Some(PolyU::zero())
                    }
                    (C::Rotation(j), E::OnePrime | E::OneDoublePrime) => {
                        Some(if j == p / 2 {
                            -&PolyU::unit_monomial(p as usize / 2)
                        } else {
                            PolyU::zero()
                        })
                    }
                    _ => None,
                };
                out[ci][ei] = val;
            }
        }
        out
    }

    /// The expected Ψ matrix from the per-row expansions:
    /// `Ψ_{⟨c^j⟩} = Σ_i u^i·1_0 (i even ≤ 2j-2) + Σ_k Σ u^e·2_k`, the
    /// reflection rows are indicator sums, and the identity row is the
    /// dimension vector.
    pub fn psi_closed_form(&self) -> Vec<Vec<PolyU>> {
        let n = self.irreps.len();
        let mut out = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            let mut row = vec![PolyU::zero(); n];
            match class.kind {
                DihedralClassKind::Rotation(j) => {
                    for (ei, irr) in self.irreps.iter().enumerate() {
                        use DihedralIrrKind::*;
                        row[ei] = match irr.kind {
                            Trivial => {
                                // v^{4j-4} + v^{4j-8} + … + v^4 + 1
                                geometric(0, 2 * j as usize - 2, 2)
                            }
                            TwoDim(k) if k < j => {
                                // v-exponents 2k … 4j-4-2k, step 4
                                geometric(k as usize, 2 * j as usize - 2 - k as usize, 2)
                            }
                            _ => PolyU::zero(),
                        };
                    }
                }
                DihedralClassKind::ReflectionS => {
                    for (ei, irr) in self.irreps.iter().enumerate() {
                        let excluded = matches!(irr.kind, DihedralIrrKind::Sign)
                            || matches!(irr.kind, DihedralIrrKind::OneDoublePrime);
                        row[ei] = if excluded { PolyU::zero() } else { PolyU::one() };
                    }
                }
                DihedralClassKind::ReflectionT => {
                    for (ei, irr) in self.irreps.iter().enumerate() {
                        let excluded = matches!(irr.kind, DihedralIrrKind::Sign)
                            || matches!(irr.kind, DihedralIrrKind::OnePrime);
                        row[ei] = if excluded { PolyU::zero() } else { PolyU::one() };
                    }
                }
                DihedralClassKind::Identity => {
                    for (ei, irr) in self.irreps.iter().enumerate() {
                        row[ei] = PolyU::constant(CycRat::integer(irr.info.dim as i64));
                    }
                }
            }
            out.push(row);
        }
        out
    }

    /// Exact W-character table (Hecke characters at u = 1).
    pub fn character_table(&self) -> CharTable {
        let p = self.p;
        let values = self
            .irreps
            .iter()
            .map(|irr| {
                self.classes
                    .iter()
                    .map(|class| {
                        use DihedralClassKind as C;
                        use DihedralIrrKind as E;
                        match (irr.kind, class.kind) {
                            (E::Trivial, _) => CycRat::one(),
                            (E::Sign, C::Rotation(_) | C::Identity) => CycRat::one(),
                            (E::Sign, _) => CycRat::integer(-1),
                            (E::OnePrime, C::Rotation(j)) | (E::OneDoublePrime, C::Rotation(j)) => {
                                CycRat::integer(if j % 2 == 0 { 1 } else { -1 })
                            }
                            (E::OnePrime, C::Identity) | (E::OneDoublePrime, C::Identity) => {
                                CycRat::one()
                            }
                            (E::OnePrime, C::ReflectionS) | (E::OneDoublePrime, C::ReflectionT) => {
                                CycRat::one()
                            }
                            (E::OnePrime, C::ReflectionT) | (E::OneDoublePrime, C::ReflectionS) => {
                                CycRat::integer(-1)
                            }
                            (E::TwoDim(_), C::Identity) => CycRat::integer(2),
                            (E::TwoDim(k), C::Rotation(j)) => {
                                let jk = (j as i64) * (k as i64);
                                &CycRat::zeta_pow(p, jk) + &CycRat::zeta_pow(p, -jk)
                            }
                            (E::TwoDim(_), _) => CycRat::zero(),
                        }
                    })
                    .collect()
            })
            .collect();
        CharTable {
            irr_labels: self.irreps.iter().map(|e| e.info.label.clone()).collect(),
            class_labels: self.classes.iter().map(|c| c.meta.label.clone()).collect(),
            class_sizes: self.classes.iter().map(|c| c.size as u64).collect(),
            values,
        }
    }

    /// The generic-degree polynomials Δ(E) solved from the closed-form
    /// A″: `Δ(1_0) = 1`, `Δ(2_k) = u^k + u^{p-k}`, `Δ(1′) = Δ(1″) =
    /// u^{p/2}`, `Δ(1_p) = u^p`.
    pub fn generic_degrees(&self) -> Vec<PolyU> {
        let p = self.p as usize;
        self.irreps
            .iter()
            .map(|irr| match irr.kind {
                DihedralIrrKind::Trivial => PolyU::one(),
                DihedralIrrKind::TwoDim(k) => {
                    &PolyU::unit_monomial(k as usize) + &PolyU::unit_monomial(p - k as usize)
                }
                DihedralIrrKind::OnePrime | DihedralIrrKind::OneDoublePrime => {
                    PolyU::unit_monomial(p / 2)
                }
                DihedralIrrKind::Sign => PolyU::unit_monomial(p),
            })
            .collect()
    }

    /// Reconstruct A″ through the data-driven formula from the character
    /// table and Δ; agreement with the closed form is a consistency test.
    pub fn a_double_prime_via_characters(&self) -> Result<Vec<Vec<RatFnU>>, StrataError> {
        let table = self.character_table();
        let sgn_row = self
            .irreps
            .iter()
            .position(|e| e.kind == DihedralIrrKind::Sign)
            .expect("sign representation");
        a_double_prime_generic(&table, sgn_row, &self.generic_degrees(), &self.h())
    }
}

/// `v^{2a} + v^{2a+4} + … + v^{2b}` as a polynomial in u: exponents
/// `a, a+step, …, b` in u.
fn geometric(a: usize, b: usize, step: usize) -> PolyU {
    let mut acc = PolyU::zero();
    let mut e = a;
    while e <= b {
        acc = &acc + &PolyU::unit_monomial(e);
        e += step;
    }
    acc
}

fn one_u() -> PolyU {
    PolyU::unit_monomial(1)
}

fn minus_one() -> PolyU {
    PolyU::constant(CycRat::integer(-1))
}

fn mat2_mul(a: &[PolyU; 4], b: &[PolyU; 4]) -> [PolyU; 4] {
    [
        &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
        &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
        &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
        &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyU {
        PolyU::from_int_coeffs(coeffs)
    }

    #[test]
    fn a_matrix_anchor_entries() {
        let d = Dihedral::new(7);
        let a = d.a_matrix();
        // A_{<s>,2_k} = (u-1)²; A_{<1>,2_k} = 2(u-1)²
        let s_row = d.classes.iter().position(|c| c.meta.label == "<s>").unwrap();
        let id_row = d.classes.iter().position(|c| c.meta.label == "<1>").unwrap();
        let two_col = d
            .irreps
            .iter()
            .position(|e| e.kind == DihedralIrrKind::TwoDim(1))
            .unwrap();
        assert_eq!(a[s_row][two_col], p(&[1, -2, 1]));
        assert_eq!(a[id_row][two_col], p(&[2, -4, 2]));
        // A_{<c^j>,1_0} = u^{2j}
        let c2 = d.classes.iter().position(|c| c.meta.label == "<c^2>").unwrap();
        assert_eq!(a[c2][0], PolyU::unit_monomial(4));
        // A_{<c^j>,2_k} = u^j (ζ^{jk} + ζ^{-jk}): trace of the explicit
        // matrix power must match the eigenvalue form
        let z = |e: i64| CycRat::zeta_pow(7, e);
        let expect = PolyU::unit_monomial(2).scale(&(&z(2) + &z(-2)));
        assert_eq!(a[c2][two_col], expect);
    }

    #[test]
    fn braid_relation_check() {
        // (T_s T_t)^p = u^p · I for every 2-dim representation
        for pp in [5u32, 6, 8] {
            let d = Dihedral::new(pp);
            for irr in &d.irreps {
                let DihedralIrrKind::TwoDim(k) = irr.kind else { continue };
                let (t_s, t_t) = d.hecke_rep_generators(k);
                let st = mat2_mul(&t_s, &t_t);
                // trace and determinant pin the eigenvalues
                let tr = &st[0] + &st[3];
                let gamma_minus_2 =
                    &CycRat::zeta_pow(pp, k as i64) + &CycRat::zeta_pow(pp, -(k as i64));
                assert_eq!(tr, PolyU::unit_monomial(1).scale(&gamma_minus_2));
                let det = &(&st[0] * &st[3]) - &(&st[1] * &st[2]);
                assert_eq!(det, PolyU::unit_monomial(2));
                let mut power = st.clone();
                for _ in 1..pp {
                    power = mat2_mul(&power, &st);
                }
                let up = PolyU::unit_monomial(pp as usize);
                assert_eq!(power[0], up);
                assert_eq!(power[3], up);
                assert!(power[1].is_zero() && power[2].is_zero());
            }
        }
    }

    #[test]
    fn a_prime_even_case_values() {
        // p = 6: A′_{1′,1″} = (1-(-1)³-6)/12 = -1/3
        let d = Dihedral::new(6);
        let ap = d.a_prime_matrix();
        let i1 = d.irreps.iter().position(|e| e.kind == DihedralIrrKind::OnePrime).unwrap();
        let i2 = d
            .irreps
            .iter()
            .position(|e| e.kind == DihedralIrrKind::OneDoublePrime)
            .unwrap();
        assert_eq!(ap[i1][i2], CycRat::from_ratio(-1, 3));
        assert_eq!(ap[0][0], CycRat::one());
        // symmetry
        for i in 0..ap.len() {
            for j in 0..ap.len() {
                assert_eq!(ap[i][j], ap[j][i]);
            }
        }
    }

    #[test]
    fn a_double_prime_anchors() {
        let d = Dihedral::new(7);
        let h = d.h();
        let m = d.a_double_prime_matrix();
        let sgn = d.irreps.len() - 1;
        // A″_{1_0,1_p} = 1/h
        assert_eq!(m[0][sgn], RatFnU::new(PolyU::one(), h.clone()).unwrap());
        // A″_{1_0,1_0} = u^p/h
        assert_eq!(m[0][0], RatFnU::new(PolyU::unit_monomial(7), h).unwrap());
    }

    #[test]
    fn psi_printed_p5() {
        let d = Dihedral::new(5);
        let psi = d.psi().unwrap();
        let rows: Vec<Vec<PolyU>> = vec![
            vec![p(&[1]), p(&[]), p(&[]), p(&[])],
            vec![p(&[1, 0, 1]), p(&[0, 1]), p(&[]), p(&[])],
            vec![p(&[1]), p(&[1]), p(&[1]), p(&[])],
            vec![p(&[1]), p(&[2]), p(&[2]), p(&[1])],
        ];
        for (r, row) in rows.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                assert_eq!(psi.entry(r, c), want, "cell ({r},{c})");
            }
        }
    }

    #[test]
    fn psi_matches_closed_form_small() {
        for pp in [3u32, 4, 5, 6, 8, 9] {
            let d = Dihedral::new(pp);
            let psi = d.psi().unwrap();
            let expect = d.psi_closed_form();
            for (r, row) in expect.iter().enumerate() {
                for (c, want) in row.iter().enumerate() {
                    assert_eq!(psi.entry(r, c), want, "p={pp} cell ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn aa_prime_matches_closed_forms() {
        for pp in [5u32, 7, 8, 12] {
            let d = Dihedral::new(pp);
            let got = d.aa_prime_matrix();
            let want = d.aa_prime_closed_form();
            for (r, row) in want.iter().enumerate() {
                for (c, cell) in row.iter().enumerate() {
                    if let Some(w) = cell {
                        assert_eq!(&got[r][c], w, "p={pp} cell ({r},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn a_double_prime_from_characters_agrees() {
        for pp in [5u32, 6] {
            let d = Dihedral::new(pp);
            let via_chars = d.a_double_prime_via_characters().unwrap();
            let closed = d.a_double_prime_matrix();
            for (r, row) in closed.iter().enumerate() {
                for (c, want) in row.iter().enumerate() {
                    assert_eq!(&via_chars[r][c], want, "p={pp} cell ({r},{c})");
                }
            }
        }
    }
}

//! The Ψ matrix and the extraction of the strata map σ.
//!
//! A [`PsiMatrix`] is a square classes × irreducibles matrix over `Z[v²]`
//! together with class metadata and representation metadata. Extraction
//! works in two modes:
//!
//! * Weyl mode: drop the representations with a negative leading
//!   coefficient somewhere in their column (`Irr_*`); in each row the
//!   survivors with maximal b-invariant must be a single representation,
//!   which is σ of that class.
//! * Noncrystallographic mode: additionally drop `Irr_**`, the
//!   representations that achieve a row maximum while still carrying a
//!   negative coefficient, then maximize b among the rest.
//!
//! In both modes the trivial representation must appear in every row's
//! candidate set, and σ is checked per class against the monomial
//! `v^{|C|+m(C)-m(1)}`, with the outcome recorded (it can fail for the
//! noncrystallographic types).

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{CycRat, ExactError, PolyU, RatFnU};
use crate::meta::IrrInfo;

#[derive(Debug, Error)]
pub enum StrataError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("Ψ validation failed: {0}")]
    Validation(String),
    #[error("class {class}: maximal-b set is not a singleton: {tied:?}")]
    NonSingletonMax { class: String, tied: Vec<String> },
    #[error("class {class}: trivial representation missing from candidate set")]
    TrivialMissing { class: String },
    #[error("Irr_** is nonempty in Weyl mode: {0:?}")]
    StarStarInWeylMode(Vec<String>),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Per-class metadata carried by a [`PsiMatrix`] row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMeta {
    pub label: String,
    /// `(|C|, m(C))` where known. Recomputed from the group for golden
    /// tables; absent for ingested tables of unknown types.
    pub invariants: Option<(usize, usize)>,
}

impl ClassMeta {
    pub fn new(label: impl Into<String>, min_length: usize, m: usize) -> Self {
        ClassMeta { label: label.into(), invariants: Some((min_length, m)) }
    }

    pub fn bare(label: impl Into<String>) -> Self {
        ClassMeta { label: label.into(), invariants: None }
    }
}

/// Square classes × irreducibles matrix of `Z[v²]` polynomials.
#[derive(Clone, Debug)]
pub struct PsiMatrix {
    group: String,
    classes: Vec<ClassMeta>,
    irreps: Vec<IrrInfo>,
    entries: Vec<Vec<PolyU>>,
}

impl PsiMatrix {
    /// Validates shape, coefficient integrality, the sign column
    /// (indicator of the identity class) and the identity row (dimension
    /// vector).
    pub fn new(
        group: impl Into<String>,
        classes: Vec<ClassMeta>,
        irreps: Vec<IrrInfo>,
        entries: Vec<Vec<PolyU>>,
    ) -> Result<Self, StrataError> {
        let group = group.into();
        if classes.len() != irreps.len() {
            return Err(StrataError::Dimension(format!(
                "{group}: {} classes vs {} irreducibles",
                classes.len(),
                irreps.len()
            )));
        }
        if entries.len() != classes.len() || entries.iter().any(|r| r.len() != irreps.len()) {
            return Err(StrataError::Dimension(format!("{group}: ragged entry matrix")));
        }
        let psi = PsiMatrix { group, classes, irreps, entries };
        for (r, row) in psi.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                e.to_integer_coeffs().map_err(|err| {
                    StrataError::Validation(format!(
                        "{}: non-integer entry at ({}, {}): {err}",
                        psi.group, psi.classes[r].label, psi.irreps[c].label
                    ))
                })?;
            }
        }
        psi.check_identity_row()?;
        psi.check_sgn_column()?;
        Ok(psi)
    }

    pub fn group(&self) -> &str {
        &self.group
    }

    pub fn classes(&self) -> &[ClassMeta] {
        &self.classes
    }

    pub fn irreps(&self) -> &[IrrInfo] {
        &self.irreps
    }

    pub fn entry(&self, class: usize, irr: usize) -> &PolyU {
        &self.entries[class][irr]
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn irr_index(&self, label: &str) -> Option<usize> {
        self.irreps.iter().position(|e| e.label == label)
    }

    /// The sign representation: dimension 1 with the largest b-invariant.
    pub fn sgn_index(&self) -> usize {
        self.irreps
            .iter()
            .enumerate()
            .filter(|(_, e)| e.dim == 1)
            .max_by_key(|(_, e)| e.b)
            .map(|(i, _)| i)
            .expect("at least one one-dimensional representation")
    }

    /// The trivial representation: dimension 1, b = 0.
    pub fn trivial_index(&self) -> usize {
        self.irreps
            .iter()
            .position(|e| e.dim == 1 && e.b == 0)
            .expect("trivial representation present")
    }

    /// Row index of the identity class: by invariants when present,
    /// otherwise the unique row equal to the dimension vector.
    pub fn identity_row(&self) -> Result<usize, StrataError> {
        if let Some(i) = self
            .classes
            .iter()
            .position(|c| matches!(c.invariants, Some((0, _))))
        {
            return Ok(i);
        }
        let dims: Vec<PolyU> = self
            .irreps
            .iter()
            .map(|e| PolyU::constant(CycRat::integer(e.dim as i64)))
            .collect();
        let hits: Vec<usize> =
            (0..self.entries.len()).filter(|&r| self.entries[r] == dims).collect();
        match hits.as_slice() {
            [r] => Ok(*r),
            _ => Err(StrataError::Validation(format!(
                "{}: cannot locate identity row ({} dimension-vector rows)",
                self.group,
                hits.len()
            ))),
        }
    }

    fn check_identity_row(&self) -> Result<(), StrataError> {
        let r = self.identity_row()?;
        for (c, e) in self.entries[r].iter().enumerate() {
            let want = PolyU::constant(CycRat::integer(self.irreps[c].dim as i64));
            if e != &want {
                return Err(StrataError::Validation(format!(
                    "{}: identity row at {} has {} ≠ dim {}",
                    self.group, self.irreps[c].label, e, self.irreps[c].dim
                )));
            }
        }
        Ok(())
    }

    fn check_sgn_column(&self) -> Result<(), StrataError> {
        let id = self.identity_row()?;
        let sgn = self.sgn_index();
        for (r, row) in self.entries.iter().enumerate() {
            let e = &row[sgn];
            let ok = if r == id { e == &PolyU::one() } else { e.is_zero() };
            if !ok {
                return Err(StrataError::Validation(format!(
                    "{}: sign column at class {} is {}, not the identity indicator",
                    self.group, self.classes[r].label, e
                )));
            }
        }
        Ok(())
    }

    /// `m(1)`, read off the identity-class metadata when available.
    pub fn rank(&self) -> Option<usize> {
        self.classes
            .iter()
            .find(|c| matches!(c.invariants, Some((0, _))))
            .and_then(|c| c.invariants.map(|(_, m)| m))
    }
}

/// Ψ assembly from the three factor matrices: Ψ = A·A′·A″.
///
/// Every denominator must cancel and every coefficient must reduce to a
/// rational integer; failures surface as errors rather than approximate
/// results.
pub fn assemble_psi(
    group: impl Into<String>,
    a: &[Vec<PolyU>],
    a_prime: &[Vec<CycRat>],
    a_double_prime: &[Vec<RatFnU>],
    classes: Vec<ClassMeta>,
    irreps: Vec<IrrInfo>,
) -> Result<PsiMatrix, StrataError> {
    let group = group.into();
    let n_classes = classes.len();
    let n_irr = irreps.len();
    let shape_ok = a.len() == n_classes
        && a.iter().all(|r| r.len() == n_irr)
        && a_prime.len() == n_irr
        && a_prime.iter().all(|r| r.len() == n_irr)
        && a_double_prime.len() == n_irr
        && a_double_prime.iter().all(|r| r.len() == n_irr);
    if !shape_ok {
        return Err(StrataError::Dimension(format!("{group}: factor matrices not conformable")));
    }

    // AA′ first: the cyclotomic parts cancel here.
    let aa_prime = mul_poly_by_scalar_matrix(a, a_prime);

    // Work over one common denominator (the lcm of all A″ denominators)
    // so the inner sums are pure polynomial arithmetic and each Ψ entry
    // needs exactly one exact division.
    let mut common = PolyU::one();
    for row in a_double_prime {
        for f in row {
            let g = common.gcd(f.den());
            common = &common * &f.den().exact_div(&g)?;
        }
    }
    let scaled: Vec<Vec<PolyU>> = a_double_prime
        .iter()
        .map(|row| {
            row.iter()
                .map(|f| Ok(f.num() * &common.exact_div(f.den())?))
                .collect::<Result<Vec<_>, ExactError>>()
        })
        .collect::<Result<_, _>>()?;

    let mut entries = Vec::with_capacity(n_classes);
    for row in &aa_prime {
        let mut out_row = Vec::with_capacity(n_irr);
        for e in 0..n_irr {
            let mut acc = PolyU::zero();
            for (k, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() && !scaled[k][e].is_zero() {
                    acc = &acc + &(coeff * &scaled[k][e]);
                }
            }
            out_row.push(acc.exact_div(&common)?);
        }
        entries.push(out_row);
    }
    PsiMatrix::new(group, classes, irreps, entries)
}

/// `A · A′` where A has polynomial entries and A′ scalar entries.
pub fn mul_poly_by_scalar_matrix(a: &[Vec<PolyU>], a_prime: &[Vec<CycRat>]) -> Vec<Vec<PolyU>> {
    let n_irr = a_prime.len();
    a.iter()
        .map(|row| {
            (0..n_irr)
                .map(|j| {
                    let mut acc = PolyU::zero();
                    for (k, p) in row.iter().enumerate() {
                        let s = &a_prime[k][j];
                        if !p.is_zero() && !s.is_zero() {
                            acc = &acc + &p.scale(s);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Extraction mode.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaMode {
    Weyl,
    Noncrystallographic,
}

/// Per-class extraction record.
#[derive(Clone, Debug)]
pub struct ClassExtraction {
    pub class: ClassMeta,
    /// Nonzero columns outside `Irr_*`.
    pub x: Vec<String>,
    /// b-maximal subset of `x`.
    pub x_max: Vec<String>,
    /// Noncrystallographic mode: nonzero columns outside `Irr_* ∪ Irr_**`
    /// and its b-maximal subset.
    pub x_primed: Option<Vec<String>>,
    pub x_primed_max: Option<Vec<String>>,
    pub sigma: String,
    pub psi: PolyU,
    /// Whether `Ψ_{C,σ(C)} = v^{|C|+m(C)-m(1)}` exactly (`None` when the
    /// class invariants are unknown).
    pub monomial_check: Option<bool>,
}

/// The full extraction report.
#[derive(Clone, Debug)]
pub struct StrataReport {
    pub group: String,
    pub mode: SigmaMode,
    pub irr_star: Vec<String>,
    pub irr_star_star: Vec<String>,
    pub rows: Vec<ClassExtraction>,
    /// Image of σ in column order.
    pub image: Vec<String>,
    /// `Irr − Irr_* − Irr_**` in column order.
    pub candidate_set: Vec<String>,
}

impl StrataReport {
    pub fn image_is_all_of_candidates(&self) -> bool {
        self.image == self.candidate_set
    }

    pub fn sigma_of(&self, class_label: &str) -> Option<&str> {
        self.rows
            .iter()
            .find(|r| r.class.label == class_label)
            .map(|r| r.sigma.as_str())
    }
}

/// Set-level classification of the image of σ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageReport {
    pub image: Vec<String>,
    pub candidate_set: Vec<String>,
    /// `true` = image equals candidate set; `false` = strict containment.
    pub equality: bool,
}

pub fn image_report(report: &StrataReport) -> ImageReport {
    ImageReport {
        image: report.image.clone(),
        candidate_set: report.candidate_set.clone(),
        equality: report.image_is_all_of_candidates(),
    }
}

/// The representations whose column somewhere has a negative leading
/// coefficient (`Irr_*`).
pub fn irr_star(psi: &PsiMatrix) -> Vec<String> {
    let n = psi.irreps().len();
    (0..n)
        .filter(|&e| {
            psi.entries.iter().any(|row| {
                let p = &row[e];
                !p.is_zero()
                    && p.leading()
                        .and_then(|l| l.to_rational().ok())
                        .map(|r| r < crate::exact::Rat::from_integer(0.into()))
                        .unwrap_or(false)
            })
        })
        .map(|e| psi.irreps[e].label.clone())
        .collect()
}

/// Extract σ from a validated Ψ matrix.
pub fn sigma_map(psi: &PsiMatrix, mode: SigmaMode) -> Result<StrataReport, StrataError> {
    let star_labels = irr_star(psi);
    let star: BTreeSet<usize> =
        star_labels.iter().filter_map(|l| psi.irr_index(l)).collect();
    let trivial = psi.trivial_index();
    let n = psi.irreps().len();

    // X_C and its b-maximal subset, per class.
    let mut x_sets: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut x_max_sets: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (r, row) in psi.entries.iter().enumerate() {
        let x: Vec<usize> =
            (0..n).filter(|e| !star.contains(e) && !row[*e].is_zero()).collect();
        if !x.contains(&trivial) {
            return Err(StrataError::TrivialMissing { class: psi.classes[r].label.clone() });
        }
        let bmax = x.iter().map(|&e| psi.irreps[e].b).max().unwrap();
        let x_max: Vec<usize> = x.iter().copied().filter(|&e| psi.irreps[e].b == bmax).collect();
        x_sets.push(x);
        x_max_sets.push(x_max);
    }

    // Irr_**: representations achieving a row maximum with a negative
    // coefficient in that row's entry.
    let mut star_star: BTreeSet<usize> = BTreeSet::new();
    for (r, x_max) in x_max_sets.iter().enumerate() {
        for &e in x_max {
            if psi.entries[r][e].has_negative_coeff() {
                star_star.insert(e);
            }
        }
    }
    if mode == SigmaMode::Weyl && !star_star.is_empty() {
        return Err(StrataError::StarStarInWeylMode(
            star_star.iter().map(|&e| psi.irreps[e].label.clone()).collect(),
        ));
    }

    let m1 = psi.rank();
    let mut rows = Vec::with_capacity(n);
    let mut image_set: BTreeSet<usize> = BTreeSet::new();
    for (r, row) in psi.entries.iter().enumerate() {
        let labels = |set: &[usize]| -> Vec<String> {
            set.iter().map(|&e| psi.irreps[e].label.clone()).collect()
        };
        let (selection, x_primed, x_primed_max) = match mode {
            SigmaMode::Weyl => (x_max_sets[r].clone(), None, None),
            SigmaMode::Noncrystallographic => {
                let xp: Vec<usize> = x_sets[r]
                    .iter()
                    .copied()
                    .filter(|e| !star_star.contains(e))
                    .collect();
                if !xp.contains(&trivial) {
                    return Err(StrataError::TrivialMissing {
                        class: psi.classes[r].label.clone(),
                    });
                }
                let bmax = xp.iter().map(|&e| psi.irreps[e].b).max().unwrap();
                let xp_max: Vec<usize> =
                    xp.iter().copied().filter(|&e| psi.irreps[e].b == bmax).collect();
                (xp_max.clone(), Some(labels(&xp)), Some(labels(&xp_max)))
            }
        };
        let &sigma = match selection.as_slice() {
            [single] => single,
            _ => {
                return Err(StrataError::NonSingletonMax {
                    class: psi.classes[r].label.clone(),
                    tied: labels(&selection),
                })
            }
        };
        image_set.insert(sigma);
        let psi_entry = row[sigma].clone();
        let monomial_check = match (psi.classes[r].invariants, m1) {
            (Some((len, m)), Some(m1)) => {
                let v_exp = len + m - m1;
                // entries live in Z[v²]; an odd exponent cannot be a match
                let expected = if v_exp % 2 == 0 {
                    PolyU::unit_monomial(v_exp / 2)
                } else {
                    PolyU::zero()
                };
                Some(!expected.is_zero() && psi_entry == expected)
            }
            _ => None,
        };
        rows.push(ClassExtraction {
            class: psi.classes[r].clone(),
            x: labels(&x_sets[r]),
            x_max: labels(&x_max_sets[r]),
            x_primed,
            x_primed_max,
            sigma: psi.irreps[sigma].label.clone(),
            psi: psi_entry,
            monomial_check,
        });
    }

    let candidate_set: Vec<String> = (0..n)
        .filter(|e| !star.contains(e) && !star_star.contains(e))
        .map(|e| psi.irreps[e].label.clone())
        .collect();
    let image: Vec<String> = (0..n)
        .filter(|e| image_set.contains(e))
        .map(|e| psi.irreps[e].label.clone())
        .collect();

    Ok(StrataReport {
        group: psi.group.clone(),
        mode,
        irr_star: star_labels,
        irr_star_star: star_star.iter().map(|&e| psi.irreps[e].label.clone()).collect(),
        rows,
        image,
        candidate_set,
    })
}

/// Exact character table data for the generic A″ formula.
pub struct CharTable {
    pub irr_labels: Vec<String>,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<u64>,
    /// `values[irr][class]`.
    pub values: Vec<Vec<CycRat>>,
}

impl CharTable {
    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }
}

/// The data-driven A″ matrix:
///
/// `A″_{E,E′} = Σ_ce (1/|W|) Σ_y tr(y,E) tr(y,E′) tr(y,ce⊗sgn) Δ(ce) / h`,
///
/// with the character table, the Δ polynomials and `h` supplied by the
/// caller. `sgn_row` indexes the sign character inside the table.
pub fn a_double_prime_generic(
    table: &CharTable,
    sgn_row: usize,
    deltas: &[PolyU],
    h: &PolyU,
) -> Result<Vec<Vec<RatFnU>>, StrataError> {
    let n = table.irr_labels.len();
    let nc = table.class_labels.len();
    if table.values.len() != n
        || table.values.iter().any(|r| r.len() != nc)
        || table.class_sizes.len() != nc
        || deltas.len() != n
        || sgn_row >= n
    {
        return Err(StrataError::Dimension("character table data not conformable".into()));
    }
    let order = CycRat::integer(table.group_order() as i64);
    let inv_order = order.inv()?;
    let mut out = Vec::with_capacity(n);
    for e1 in 0..n {
        let mut row = Vec::with_capacity(n);
        for e2 in 0..n {
            let mut num = PolyU::zero();
            for (ce, delta) in deltas.iter().enumerate() {
                if delta.is_zero() {
                    continue;
                }
                // multiplicity of ce⊗sgn in E₁⊗E₂
                let mut mult = CycRat::zero();
                for c in 0..nc {
                    let term = &(&table.values[e1][c] * &table.values[e2][c])
                        * &(&table.values[ce][c] * &table.values[sgn_row][c]);
                    mult = &mult + &term.try_mul(&CycRat::integer(table.class_sizes[c] as i64))?;
                }
                mult = &mult * &inv_order;
                if !mult.is_zero() {
                    num = &num + &delta.scale(&mult);
                }
            }
            row.push(RatFnU::new(num, h.clone())?);
        }
        out.push(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meta::GroupType;

    fn p(coeffs: &[i64]) -> PolyU {
        PolyU::from_int_coeffs(coeffs)
    }

    /// Hand-built 2×2 Ψ-like matrix for the rank-1 group: classes
    /// {1}, {s}; irreps 1_0, 1_1.
    fn tiny_psi() -> PsiMatrix {
        let classes = vec![ClassMeta::new("(-)", 0, 1), ClassMeta::new("c_1", 1, 0)];
        let irreps = GroupType::A1.irreducibles();
        let entries = vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[])]];
        PsiMatrix::new("A1", classes, irreps, entries).unwrap()
    }

    #[test]
    fn tiny_extraction() {
        let psi = tiny_psi();
        let rep = sigma_map(&psi, SigmaMode::Weyl).unwrap();
        assert!(rep.irr_star.is_empty());
        assert_eq!(rep.sigma_of("(-)"), Some("1_1"));
        assert_eq!(rep.sigma_of("c_1"), Some("1_0"));
        assert!(rep.image_is_all_of_candidates());
        for row in &rep.rows {
            assert_eq!(row.monomial_check, Some(true));
        }
    }

    #[test]
    fn validation_rejects_bad_sign_column() {
        let classes = vec![ClassMeta::new("(-)", 0, 1), ClassMeta::new("c_1", 1, 0)];
        let irreps = GroupType::A1.irreducibles();
        let entries = vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[1])]];
        let err = PsiMatrix::new("A1", classes, irreps, entries).unwrap_err();
        assert!(matches!(err, StrataError::Validation(_)));
    }

    #[test]
    fn validation_rejects_non_integer_entries() {
        let classes = vec![ClassMeta::new("(-)", 0, 1), ClassMeta::new("c_1", 1, 0)];
        let irreps = GroupType::A1.irreducibles();
        let half = PolyU::constant(CycRat::from_ratio(1, 2));
        let entries = vec![vec![p(&[1]), p(&[1])], vec![half, p(&[])]];
        assert!(PsiMatrix::new("A1", classes, irreps, entries).is_err());
    }

    #[test]
    fn tied_maximum_is_reported_not_chosen() {
        // two irreps share b = 0, and the identity row keeps both alive
        let classes = vec![ClassMeta::new("(-)", 0, 1), ClassMeta::new("c_1", 1, 0)];
        let irreps = vec![
            IrrInfo::new("1_0", 1, 0, None),
            IrrInfo::new("1'_0", 1, 0, None),
        ];
        let entries = vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[])]];
        let psi = PsiMatrix::new("tie", classes, irreps, entries).unwrap();
        let err = sigma_map(&psi, SigmaMode::Weyl).unwrap_err();
        match err {
            StrataError::NonSingletonMax { class, tied } => {
                assert_eq!(class, "(-)");
                assert_eq!(tied, vec!["1_0".to_string(), "1'_0".to_string()]);
            }
            other => panic!("expected a tie error, got {other}"),
        }
    }

    #[test]
    fn one_class_toy_a_double_prime() {
        // trivial W: one class, one irrep; all traces 1.
        let table = CharTable {
            irr_labels: vec!["1_0".into()],
            class_labels: vec!["(-)".into()],
            class_sizes: vec![1],
            values: vec![vec![CycRat::one()]],
        };
        let h = p(&[-1, 1]);
        let delta = p(&[0, 3]);
        let out = a_double_prime_generic(&table, 0, &[delta.clone()], &h).unwrap();
        assert_eq!(out[0][0], RatFnU::new(delta, h).unwrap());
        // degenerate check: all Δ = 0 gives the zero matrix
        let out =
            a_double_prime_generic(&table, 0, &[PolyU::zero()], &p(&[-1, 1])).unwrap();
        assert!(out[0][0].is_zero());
    }
}

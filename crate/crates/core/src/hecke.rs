//! Iwahori–Hecke algebra computations over `Z[v²]`.
//!
//! The only product the pipeline needs is multiplication by a generator,
//! driving the two-case recurrence for the coefficients `e_{y,w}` of
//! `(-v²)^{|w|} T_{w⁻¹}⁻¹ = Σ_y e_{y,w} T_y`: along a reduced word of
//! `w`, with `|sw| = |w| + 1`,
//!
//! ```text
//! e_{y,sw} = -v² e_{sy,w} + (v²-1) e_{y,w}   if |sy| > |y|
//! e_{y,sw} = -e_{sy,w}                       if |sy| < |y|
//! ```
//!
//! starting from `e_{y,1} = δ_{y,1}`. The coefficients are integer
//! polynomials in `u = v²`; they are computed in a dedicated dense
//! integer representation with checked arithmetic and converted to
//! [`PolyU`] at the boundary.

use std::collections::HashMap;

use crate::coxeter::{ConjClass, CoxGroup};
use crate::exact::{ExactError, PolyU};

/// Dense integer polynomial in `u`, ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly(pub Vec<i128>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(vec![])
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> i128 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<i128> {
        self.0.last().copied()
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    /// `-u·a + (u-1)·b`, the long branch of the recurrence.
    fn step_combine(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let n = (a.0.len() + 1).max(b.0.len() + 1);
        let mut v = vec![0i128; n];
        for (i, &c) in a.0.iter().enumerate() {
            v[i + 1] = v[i + 1].checked_sub(c).expect("coefficient overflow");
        }
        for (i, &c) in b.0.iter().enumerate() {
            v[i + 1] = v[i + 1].checked_add(c).expect("coefficient overflow");
            v[i] = v[i].checked_sub(c).expect("coefficient overflow");
        }
        IntPoly(v).trim()
    }

    fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|&c| -c).collect())
    }

    /// Exact division by `(u-1)`; `None` when the remainder is nonzero.
    fn div_u_minus_one(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // synthetic division at the root u = 1
        let d = self.0.len() - 1;
        let mut q = vec![0i128; d];
        let mut carry = 0i128;
        for i in (1..=d).rev() {
            carry = carry.checked_add(self.0[i]).expect("coefficient overflow");
            q[i - 1] = carry;
        }
        let rem = carry.checked_add(self.0[0]).expect("coefficient overflow");
        if rem != 0 {
            return None;
        }
        Some(IntPoly(q).trim())
    }

    pub fn to_poly_u(&self) -> PolyU {
        PolyU::from_coeffs(
            self.0
                .iter()
                .map(|&c| {
                    crate::exact::CycRat::rational(crate::exact::Rat::from_integer(c.into()))
                })
                .collect(),
        )
    }
}

enum Storage {
    /// Indexed by element id; empty polynomial = absent.
    Dense(Vec<IntPoly>),
    Sparse(HashMap<u32, IntPoly>),
}

/// A vector `Σ_y coeff(y)·T_y` with integer polynomial coefficients,
/// sparse in the sense that zero entries are never materialized
/// (dense backing storage is used for small groups).
pub struct TVector {
    storage: Storage,
}

const DENSE_LIMIT: usize = 240;

impl TVector {
    fn delta_identity(n: usize) -> TVector {
        if n <= DENSE_LIMIT {
            let mut v: Vec<IntPoly> = vec![IntPoly::zero(); n];
            v[0] = IntPoly::one();
            TVector { storage: Storage::Dense(v) }
        } else {
            let mut m = HashMap::new();
            m.insert(0u32, IntPoly::one());
            TVector { storage: Storage::Sparse(m) }
        }
    }

    pub fn get(&self, y: u32) -> IntPoly {
        match &self.storage {
            Storage::Dense(v) => v.get(y as usize).cloned().unwrap_or_default(),
            Storage::Sparse(m) => m.get(&y).cloned().unwrap_or_default(),
        }
    }

    /// Element ids with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<u32> {
        match &self.storage {
            Storage::Dense(v) => (0..v.len() as u32).filter(|&y| !v[y as usize].is_zero()).collect(),
            Storage::Sparse(m) => {
                let mut keys: Vec<u32> = m.keys().copied().collect();
                keys.sort_unstable();
                keys
            }
        }
    }

    pub fn coefficient(&self, y: u32) -> PolyU {
        self.get(y).to_poly_u()
    }

    fn apply_step(&self, g: &CoxGroup, s: usize) -> TVector {
        match &self.storage {
            Storage::Dense(v) => {
                let n = v.len();
                let mut out = vec![IntPoly::zero(); n];
                for (y, slot) in out.iter_mut().enumerate() {
                    let y = y as u32;
                    let sy = g.left_mul_gen(s, y);
                    let a = &v[sy as usize];
                    if g.length(sy) > g.length(y) {
                        let b = &v[y as usize];
                        if !a.is_zero() || !b.is_zero() {
                            *slot = IntPoly::step_combine(a, b);
                        }
                    } else if !a.is_zero() {
                        *slot = a.neg();
                    }
                }
                TVector { storage: Storage::Dense(out) }
            }
            Storage::Sparse(m) => {
                let mut candidates: Vec<u32> = Vec::with_capacity(2 * m.len());
                for &y in m.keys() {
                    candidates.push(y);
                    candidates.push(g.left_mul_gen(s, y));
                }
                candidates.sort_unstable();
                candidates.dedup();
                let empty = IntPoly::zero();
                let mut out = HashMap::with_capacity(candidates.len());
                for y in candidates {
                    let sy = g.left_mul_gen(s, y);
                    let a = m.get(&sy).unwrap_or(&empty);
                    let val = if g.length(sy) > g.length(y) {
                        let b = m.get(&y).unwrap_or(&empty);
                        IntPoly::step_combine(a, b)
                    } else {
                        a.neg()
                    };
                    if !val.is_zero() {
                        out.insert(y, val);
                    }
                }
                TVector { storage: Storage::Sparse(out) }
            }
        }
    }
}

/// The expansion coefficients of `(-v²)^{|w|} T_{w⁻¹}⁻¹` in the T-basis.
///
/// The result is independent of the reduced word used; the stored
/// ShortLex word of `w` drives the recurrence.
pub fn e_vector(g: &CoxGroup, w: u32) -> TVector {
    e_vector_along(g, g.word(w))
}

/// Same, along an explicit reduced word (used by the word-independence
/// checks).
pub fn e_vector_along(g: &CoxGroup, word: &[u8]) -> TVector {
    let mut ev = TVector::delta_identity(g.order());
    for &letter in word.iter().rev() {
        ev = ev.apply_step(g, letter as usize - 1);
    }
    if cfg!(debug_assertions) {
        let wlen = word.len();
        for y in ev.support() {
            debug_assert!(g.length(y) <= wlen, "support escapes the length bound");
        }
    }
    ev
}

/// The trivial-representation column of Ψ:
/// `Ψ_{C,1} = (v²-1)^{m(w)-m(1)} e_{1,w}` for a minimal-length `w ∈ C`,
/// computed as an exact division of `e_{1,w}` by `(u-1)^{m(1)-m(w)}`.
pub fn psi_trivial_column(g: &CoxGroup, class: &ConjClass) -> Result<PolyU, ExactError> {
    let ev = e_vector(g, class.rep);
    let mut e1 = ev.get(g.identity());
    let exponent = g.rank() - class.m;
    for _ in 0..exponent {
        e1 = e1.div_u_minus_one().ok_or_else(|| ExactError::InexactDivision {
            remainder: e1.to_poly_u(),
        })?;
    }
    Ok(e1.to_poly_u())
}

/// Whether the sign-representation column of the embedded golden Ψ table
/// is the indicator of the identity class, evaluated at one class:
/// `true` iff the golden entry at `(class, sgn)` is 1 for the identity
/// class and 0 otherwise.
pub fn sgn_column_check(
    g: &CoxGroup,
    class: &ConjClass,
) -> Result<bool, crate::golden::GoldenError> {
    let table = crate::golden::embedded_psi_table(g.group_type())?;
    let psi = table.to_psi_matrix(g)?;
    let sgn_col = psi.sgn_index();
    let row = psi
        .class_index(&class.label)
        .ok_or_else(|| crate::golden::GoldenError::UnknownLabel(class.label.clone()))?;
    let entry = psi.entry(row, sgn_col);
    let expected_one = class.min_length == 0;
    Ok(if expected_one { entry == &PolyU::one() } else { entry.is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxGroup;
    use crate::meta::GroupType;

    #[test]
    fn e_vector_of_identity_and_simple_reflection() {
        let g = CoxGroup::build(GroupType::A2).unwrap();
        let ev = e_vector(&g, g.identity());
        assert_eq!(ev.support(), vec![0]);
        assert_eq!(ev.get(0), IntPoly::one());

        // w = s: forced by the quadratic relation, e_{1,s} = u−1, e_{s,s} = −1
        let s = g.element_from_word(&[1]);
        let ev = e_vector(&g, s);
        assert_eq!(ev.support(), vec![0, s]);
        assert_eq!(ev.get(0), IntPoly(vec![-1, 1]));
        assert_eq!(ev.get(s), IntPoly(vec![-1]));
    }

    #[test]
    fn trivial_column_of_identity_class() {
        let g = CoxGroup::build(GroupType::B2).unwrap();
        let id_class = g.class_of(g.identity()).clone();
        assert_eq!(psi_trivial_column(&g, &id_class).unwrap(), PolyU::one());
    }

    #[test]
    fn b2_longest_element_divisibility() {
        // e_{1,w0} for w0 in B2 is exactly divisible by (u−1)²
        let g = CoxGroup::build(GroupType::B2).unwrap();
        let w0 = g.element_from_word(&[1, 2, 1, 2]);
        assert_eq!(g.length(w0), 4);
        let cls = g.class_of(w0).clone();
        assert_eq!(cls.m, 0);
        let col = psi_trivial_column(&g, &cls).unwrap();
        // leading v-degree 2(|C|+m−m(1)) = 2·2, leading coefficient 1,
        // constant term 1
        let (lead, vdeg, cst) = col.leading_and_constant().unwrap();
        assert_eq!(vdeg, 4);
        assert_eq!(lead, crate::exact::Rat::from_integer(1.into()));
        assert_eq!(cst, crate::exact::Rat::from_integer(1.into()));
    }

    #[test]
    fn dihedral_trivial_column_geometric_series() {
        // Ψ_{<c^j>,1} = 1 + u² + … + u^{2j-2}
        let g = CoxGroup::build(GroupType::I2(7)).unwrap();
        for j in 1..=3usize {
            let label = if j == 1 { "<c>".into() } else { format!("<c^{j}>") };
            let cls = g.resolve_label(&label).unwrap().clone();
            let col = psi_trivial_column(&g, &cls).unwrap();
            let mut coeffs = vec![0i64; 2 * j - 1];
            for i in (0..2 * j - 1).step_by(2) {
                coeffs[i] = 1;
            }
            assert_eq!(col, PolyU::from_int_coeffs(&coeffs), "j={j}");
        }
    }

    #[test]
    fn word_independence_small() {
        let g = CoxGroup::build(GroupType::B2).unwrap();
        for w in 0..g.order() as u32 {
            let words = g.reduced_words(w, 2);
            if words.len() < 2 {
                continue;
            }
            let a = e_vector_along(&g, &words[0]);
            let b = e_vector_along(&g, &words[1]);
            for y in 0..g.order() as u32 {
                assert_eq!(a.get(y), b.get(y), "w={w} y={y}");
            }
        }
    }
}

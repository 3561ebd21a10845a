//! Group types and representation metadata.
//!
//! Irreducible representations are identified by `d_b` labels (dimension
//! and b-invariant, with prime marks where one `(d, b)` pair is shared by
//! two representations). For the embedded types the label lists are fixed
//! data; for the dihedral series they are generated from `p`.

use std::fmt;

use serde::Serialize;

use crate::exact::ExactError;

/// A supported finite Coxeter group type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupType {
    A1,
    A2,
    A3,
    B2,
    B3,
    H3,
    H4,
    /// Dihedral of order `2p`, `p ≥ 3`.
    I2(u32),
}

impl GroupType {
    pub fn rank(&self) -> usize {
        match self {
            GroupType::A1 => 1,
            GroupType::A2 | GroupType::B2 | GroupType::I2(_) => 2,
            GroupType::A3 | GroupType::B3 | GroupType::H3 => 3,
            GroupType::H4 => 4,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GroupType::A1 => 2,
            GroupType::A2 => 6,
            GroupType::A3 => 24,
            GroupType::B2 => 8,
            GroupType::B3 => 48,
            GroupType::H3 => 120,
            GroupType::H4 => 14400,
            GroupType::I2(p) => 2 * *p as usize,
        }
    }

    /// Number of reflections, i.e. half the number of roots; also the
    /// b-invariant of the sign representation.
    pub fn num_reflections(&self) -> usize {
        match self {
            GroupType::A1 => 1,
            GroupType::A2 => 3,
            GroupType::A3 => 6,
            GroupType::B2 => 4,
            GroupType::B3 => 9,
            GroupType::H3 => 15,
            GroupType::H4 => 60,
            GroupType::I2(p) => *p as usize,
        }
    }

    /// Conductor of the cyclotomic field housing all scalars for this
    /// type: `p` for `I2(p)`, 5 for `H3`/`H4` (golden-ratio field),
    /// 1 (pure rationals) for the crystallographic types.
    pub fn conductor(&self) -> u32 {
        match self {
            GroupType::H3 | GroupType::H4 => 5,
            GroupType::I2(p) => *p,
            _ => 1,
        }
    }

    pub fn is_weyl(&self) -> bool {
        matches!(
            self,
            GroupType::A1 | GroupType::A2 | GroupType::A3 | GroupType::B2 | GroupType::B3
        )
    }

    /// Coxeter matrix `m_{ij}` (symmetric, `m_{ii} = 1`).
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        fn chain(rank: usize, bonds: &[u32]) -> Vec<Vec<u32>> {
            let mut m = vec![vec![2; rank]; rank];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for (i, &b) in bonds.iter().enumerate() {
                m[i][i + 1] = b;
                m[i + 1][i] = b;
            }
            m
        }
        match self {
            GroupType::A1 => chain(1, &[]),
            GroupType::A2 => chain(2, &[3]),
            GroupType::A3 => chain(3, &[3, 3]),
            GroupType::B2 => chain(2, &[4]),
            GroupType::B3 => chain(3, &[3, 4]),
            GroupType::H3 => chain(3, &[5, 3]),
            GroupType::H4 => chain(4, &[5, 3, 3]),
            GroupType::I2(p) => chain(2, &[*p]),
        }
    }

    /// Parse a type name as used by the CLI and table files: `B3`, `H4`,
    /// `I2(7)`.
    pub fn parse(s: &str) -> Result<GroupType, ExactError> {
        let s = s.trim();
        match s {
            "A1" => return Ok(GroupType::A1),
            "A2" => return Ok(GroupType::A2),
            "A3" => return Ok(GroupType::A3),
            "B2" => return Ok(GroupType::B2),
            "B3" => return Ok(GroupType::B3),
            "H3" => return Ok(GroupType::H3),
            "H4" => return Ok(GroupType::H4),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("I2(") {
            if let Some(p_str) = rest.strip_suffix(')') {
                let p: u32 = p_str
                    .trim()
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad dihedral order {s:?}")))?;
                if p < 3 {
                    return Err(ExactError::Parse("I2(p) requires p >= 3".into()));
                }
                return Ok(GroupType::I2(p));
            }
        }
        Err(ExactError::Parse(format!("unknown group type {s:?}")))
    }

    /// The irreducible representations in the fixed embedded order.
    pub fn irreducibles(&self) -> Vec<IrrInfo> {
        match self {
            GroupType::A1 => labels(&["1_0", "1_1"]),
            GroupType::A2 => labels(&["1_0", "2_1", "1_3"]),
            GroupType::A3 => labels(&["1_0", "3_1", "2_2", "3_3", "1_6"]),
            GroupType::B2 => dihedral_irreducibles(4),
            GroupType::B3 => labels(&[
                "1_0", "3_1", "2_2", "3_2", "1_3", "3_3", "3_4", "2_5", "1_6", "1_9",
            ]),
            GroupType::H3 => labels(&[
                "1_0", "3_1", "5_2", "3_3", "4_3", "4_4", "5_5", "3_6", "3_8", "1_15",
            ]),
            GroupType::H4 => labels(&[
                "1_0", "4_1", "9_2", "16_3", "25_4", "36_5", "16_6", "9_6", "24_6", "4_7",
                "24_7", "40_8", "48_9", "30_10", "30'_10", "18_10", "24_11", "16_11", "24_12",
                "10_12", "8_12", "6_12", "16_13", "8_13", "36_15", "25_16", "16_18", "6_20",
                "16_21", "9_22", "9_26", "4_31", "4_37", "1_60",
            ]),
            GroupType::I2(p) => dihedral_irreducibles(*p),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::I2(p) => write!(f, "I2({p})"),
            other => write!(f, "{other:?}"),
        }
    }
}

fn labels(ls: &[&str]) -> Vec<IrrInfo> {
    ls.iter().map(|l| IrrInfo::parse_label(l).expect("embedded label")).collect()
}

/// The dihedral list: `1_0, 2_1, …, 2_k, [1', 1'',] 1_p` with sign-twist
/// partners `1_0 ↔ 1_p`, `2_k ↔ 2_k`, `1' ↔ 1''`.
pub fn dihedral_irreducibles(p: u32) -> Vec<IrrInfo> {
    let mut out = Vec::new();
    let two_max = if p % 2 == 0 { (p - 2) / 2 } else { (p - 1) / 2 };
    out.push(IrrInfo::new("1_0", 1, 0, Some(format!("1_{p}"))));
    for k in 1..=two_max {
        let l = format!("2_{k}");
        out.push(IrrInfo::new(&l, 2, k, Some(l.clone())));
    }
    if p % 2 == 0 {
        out.push(IrrInfo::new("1'", 1, p / 2, Some("1''".into())));
        out.push(IrrInfo::new("1''", 1, p / 2, Some("1'".into())));
    }
    out.push(IrrInfo::new(&format!("1_{p}"), 1, p, Some("1_0".into())));
    out
}

/// Metadata for one irreducible representation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IrrInfo {
    pub label: String,
    pub dim: u32,
    pub b: u32,
    /// Label of the tensor-by-sign partner, where known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sgn_partner: Option<String>,
}

impl IrrInfo {
    pub fn new(label: &str, dim: u32, b: u32, sgn_partner: Option<String>) -> Self {
        IrrInfo { label: label.to_string(), dim, b, sgn_partner }
    }

    /// Parse a `d_b` label with optional prime marks after the dimension
    /// (e.g. `30'_10`).
    pub fn parse_label(label: &str) -> Result<IrrInfo, ExactError> {
        let (left, right) = label
            .split_once('_')
            .ok_or_else(|| ExactError::Parse(format!("bad representation label {label:?}")))?;
        let dim_part = left.trim_end_matches('\'');
        let bad = || ExactError::Parse(format!("bad representation label {label:?}"));
        let dim: u32 = dim_part.parse().map_err(|_| bad())?;
        let b: u32 = right.parse().map_err(|_| bad())?;
        if dim == 0 {
            return Err(bad());
        }
        Ok(IrrInfo { label: label.to_string(), dim, b, sgn_partner: None })
    }

    pub fn primes(&self) -> usize {
        let left = self.label.split('_').next().unwrap_or("");
        left.chars().filter(|&c| c == '\'').count()
    }
}

impl fmt::Display for IrrInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip_and_key_uniqueness() {
        for gt in [GroupType::B3, GroupType::H3, GroupType::H4] {
            let irr = gt.irreducibles();
            let mut keys = std::collections::HashSet::new();
            for e in &irr {
                let parsed = IrrInfo::parse_label(&e.label).unwrap();
                assert_eq!((parsed.dim, parsed.b), (e.dim, e.b));
                assert_eq!(parsed.label, e.label);
                assert!(keys.insert((e.dim, e.b, e.primes())), "duplicate key {}", e.label);
            }
        }
    }

    #[test]
    fn sum_of_squares_is_group_order() {
        let types = [
            GroupType::A1,
            GroupType::A2,
            GroupType::A3,
            GroupType::B2,
            GroupType::B3,
            GroupType::H3,
            GroupType::H4,
            GroupType::I2(5),
            GroupType::I2(8),
            GroupType::I2(13),
        ];
        for gt in types {
            let sum: usize = gt.irreducibles().iter().map(|e| (e.dim * e.dim) as usize).sum();
            assert_eq!(sum, gt.order(), "{gt}");
        }
    }

    #[test]
    fn dihedral_counts_match_parity() {
        for p in 3..=30u32 {
            let n = dihedral_irreducibles(p).len() as u32;
            if p % 2 == 1 {
                assert_eq!(2 * n, p + 3);
            } else {
                assert_eq!(2 * n, p + 6);
            }
        }
    }

    #[test]
    fn dihedral_b_values_increase() {
        for p in [5u32, 8, 9, 12] {
            let irr = dihedral_irreducibles(p);
            for w in irr.windows(2) {
                let equality_allowed = w[0].dim == 1 && w[1].dim == 1 && w[0].b == p / 2;
                if equality_allowed {
                    assert!(w[0].b <= w[1].b);
                } else {
                    assert!(w[0].b < w[1].b, "p={p}: {} !< {}", w[0].label, w[1].label);
                }
            }
        }
    }

    #[test]
    fn parse_type_names() {
        assert_eq!(GroupType::parse("B3").unwrap(), GroupType::B3);
        assert_eq!(GroupType::parse("I2(7)").unwrap(), GroupType::I2(7));
        assert!(GroupType::parse("I2(2)").is_err());
        assert!(GroupType::parse("E8").is_err());
        assert_eq!(GroupType::parse("H4").unwrap().to_string(), "H4");
        assert_eq!(GroupType::parse("I2(12)").unwrap().to_string(), "I2(12)");
    }

    #[test]
    fn sign_representation_b_is_reflection_count() {
        for gt in [GroupType::B3, GroupType::H3, GroupType::H4, GroupType::I2(9)] {
            let irr = gt.irreducibles();
            let sgn = irr.iter().filter(|e| e.dim == 1).max_by_key(|e| e.b).unwrap();
            assert_eq!(sgn.b as usize, gt.num_reflections());
        }
    }
}

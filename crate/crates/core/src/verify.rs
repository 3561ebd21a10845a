//! Named verification suites.
//!
//! Every check the project promises is implemented here, grouped into
//! suites (`dihedral`, `hecke`, `b3`, `h3`, `h4`, `crosssec`, `all`).
//! The CLI `verify` subcommand and the acceptance test both drive this
//! module, so there is a single source of truth for pass/fail.
//!
//! Checks that underpin one of the ten acceptance criteria carry its
//! number; the remaining checks are supporting invariants.

use num_traits::{One, Zero};

use crate::coxeter::CoxGroup;
use crate::crosssec::{tau_double_prime, tau_prime, FiberData};
use crate::dihedral::Dihedral;
use crate::exact::{PolyU, Rat};
use crate::golden::{embedded_psi_table, embedded_table};
use crate::hecke;
use crate::meta::GroupType;
use crate::strata::{sigma_map, SigmaMode, StrataReport};

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct Check {
    /// Acceptance criterion this check belongs to, if any.
    pub criterion: Option<u8>,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn run(
        criterion: Option<u8>,
        name: &str,
        body: impl FnOnce() -> Result<String, String>,
    ) -> Check {
        match body() {
            Ok(detail) => Check { criterion, name: name.into(), passed: true, detail },
            Err(detail) => Check { criterion, name: name.into(), passed: false, detail },
        }
    }
}

/// Short descriptions of the ten acceptance criteria, by number.
pub fn criteria() -> Vec<(u8, &'static str)> {
    vec![
        (1, "dihedral golden match: computed Psi equals the printed p=5,7,8 matrices"),
        (2, "dihedral closed forms: Psi and AA' expansions hold for p=3..=30"),
        (3, "integrality: every Psi coefficient is a rational integer for p=3..=30"),
        (4, "dihedral sigma: order-preserving bijection with monomial values, p=3..=30"),
        (5, "Hecke property suite: expansion lemmas, parity, and the inversion oracle"),
        (6, "trivial-column cross-computation: recurrence vs dihedral pipeline and golden columns"),
        (7, "B3 extraction: Weyl-mode sigma on the golden matrix"),
        (8, "H3 extraction: noncrystallographic sigma reproduces the published table"),
        (9, "H4 cross-sections from golden fibers with recomputed invariants"),
        (10, "H3 and dihedral cross-sections match the published image lists"),
    ]
}

pub fn suite_names() -> &'static [&'static str] {
    &["dihedral", "hecke", "b3", "h3", "h4", "crosssec", "all"]
}

/// Run a named suite; `all` concatenates every suite in order.
pub fn run_suite(name: &str) -> Option<Vec<Check>> {
    match name {
        "dihedral" => Some(suite_dihedral()),
        "hecke" => Some(suite_hecke()),
        "b3" => Some(suite_b3()),
        "h3" => Some(suite_h3()),
        "h4" => Some(suite_h4()),
        "crosssec" => Some(suite_crosssec()),
        "all" => {
            let mut out = suite_dihedral();
            out.extend(suite_hecke());
            out.extend(suite_b3());
            out.extend(suite_h3());
            out.extend(suite_h4());
            out.extend(suite_crosssec());
            Some(out)
        }
        _ => None,
    }
}

const P_RANGE: std::ops::RangeInclusive<u32> = 3..=30;

// ---------------------------------------------------------------- dihedral

fn suite_dihedral() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::run(Some(1), "psi printed matrices p=5,7,8", || {
        let mut notes = Vec::new();
        for p in [5u32, 7, 8] {
            let d = Dihedral::new(p);
            let psi = d.psi().map_err(|e| format!("p={p}: {e}"))?;
            let table = embedded_psi_table(GroupType::I2(p)).map_err(|e| e.to_string())?;
            let diff = table.diff(&psi).map_err(|e| e.to_string())?;
            if !diff.is_empty() {
                return Err(diff.summarize());
            }
            if !table.annotations.is_empty() {
                notes.push(format!("p={p}: {} adjudicated cells", table.annotations.len()));
            }
        }
        Ok(format!("exact match{}", if notes.is_empty() {
            String::new()
        } else {
            format!(" ({})", notes.join("; "))
        }))
    }));

    checks.push(Check::run(Some(2), "printed AA' matrices p=7,8", || {
        for (p, name) in [(7u32, "i2_7_aa_prime"), (8, "i2_8_aa_prime")] {
            let d = Dihedral::new(p);
            let aa = d.aa_prime_matrix();
            let table = embedded_table(name).map_err(|e| e.to_string())?;
            let rows: Vec<String> = d.classes.iter().map(|c| c.meta.label.clone()).collect();
            let cols: Vec<String> = d.irreps.iter().map(|e| e.info.label.clone()).collect();
            let diff = table
                .diff_cells(&rows, &cols, |r, c| aa[r][c].clone())
                .map_err(|e| e.to_string())?;
            if !diff.is_empty() {
                return Err(diff.summarize());
            }
        }
        Ok("exact match".into())
    }));

    checks.push(Check::run(Some(2), "printed A'' matrices p=7,8", || {
        for (p, name) in [(7u32, "i2_7_a_double_prime"), (8, "i2_8_a_double_prime")] {
            let d = Dihedral::new(p);
            let num = d.a_double_prime_numerators();
            let table = embedded_table(name).map_err(|e| e.to_string())?;
            // the bookkeeping row carries h itself
            let h_entry = table.entry("_h", "_h").map_err(|e| e.to_string())?;
            if h_entry != d.h() {
                return Err(format!("p={p}: stored h {} differs from (u^p-1)(u^2-1)", h_entry));
            }
            let labels: Vec<String> = d.irreps.iter().map(|e| e.info.label.clone()).collect();
            let diff = table
                .diff_cells(&labels, &labels, |r, c| num[r][c].clone())
                .map_err(|e| e.to_string())?;
            if !diff.is_empty() {
                return Err(diff.summarize());
            }
        }
        Ok("numerators over h match exactly".into())
    }));

    checks.push(Check::run(Some(2), "psi closed forms p=3..=30", || {
        for p in P_RANGE {
            let d = Dihedral::new(p);
            let psi = d.psi().map_err(|e| format!("p={p}: {e}"))?;
            let want = d.psi_closed_form();
            for (r, row) in want.iter().enumerate() {
                for (c, cell) in row.iter().enumerate() {
                    if psi.entry(r, c) != cell {
                        return Err(format!(
                            "p={p} ({}, {}): computed {} vs closed form {}",
                            d.classes[r].meta.label,
                            d.irreps[c].info.label,
                            psi.entry(r, c),
                            cell
                        ));
                    }
                }
            }
        }
        Ok("all rows match the per-class expansions".into())
    }));

    checks.push(Check::run(Some(2), "AA' closed forms p=3..=30", || {
        for p in P_RANGE {
            let d = Dihedral::new(p);
            let aa = d.aa_prime_matrix();
            let want = d.aa_prime_closed_form();
            for (r, row) in want.iter().enumerate() {
                for (c, cell) in row.iter().enumerate() {
                    if let Some(w) = cell {
                        if &aa[r][c] != w {
                            return Err(format!(
                                "p={p} ({}, {}): computed {} vs closed form {}",
                                d.classes[r].meta.label,
                                d.irreps[c].info.label,
                                aa[r][c],
                                w
                            ));
                        }
                    }
                }
            }
        }
        Ok("all listed cells match".into())
    }));

    checks.push(Check::run(Some(3), "integrality of psi p=3..=30", || {
        for p in P_RANGE {
            let d = Dihedral::new(p);
            let psi = d.psi().map_err(|e| format!("p={p}: {e}"))?;
            for (r, class) in d.classes.iter().enumerate() {
                for c in 0..d.irreps.len() {
                    psi.entry(r, c).to_integer_coeffs().map_err(|e| {
                        format!("p={p} row {}: {e}", class.meta.label)
                    })?;
                }
            }
        }
        Ok("every coefficient reduces to a rational integer".into())
    }));

    checks.push(Check::run(Some(4), "sigma bijection and monomial values p=3..=30", || {
        for p in P_RANGE {
            let report = dihedral_sigma_report(p).map_err(|e| format!("p={p}: {e}"))?;
            if !report.irr_star.is_empty() || !report.irr_star_star.is_empty() {
                return Err(format!(
                    "p={p}: exclusion sets not empty: {:?} {:?}",
                    report.irr_star, report.irr_star_star
                ));
            }
            let d = Dihedral::new(p);
            // order-preserving bijection: i-th class maps to i-th irrep
            for (i, class) in d.classes.iter().enumerate() {
                let sigma = report.sigma_of(&class.meta.label).unwrap();
                if sigma != d.irreps[i].info.label {
                    return Err(format!(
                        "p={p}: sigma({}) = {sigma}, expected {}",
                        class.meta.label, d.irreps[i].info.label
                    ));
                }
            }
            if !report.image_is_all_of_candidates() || report.image.len() != d.irreps.len() {
                return Err(format!("p={p}: sigma is not onto"));
            }
            for row in &report.rows {
                if row.monomial_check != Some(true) {
                    return Err(format!(
                        "p={p} class {}: psi value {} is not the expected monomial",
                        row.class.label, row.psi
                    ));
                }
            }
        }
        Ok("sigma is the order-preserving bijection with monomial values".into())
    }));

    checks.push(Check::run(None, "A' pairing identities p=3..=30", || {
        for p in P_RANGE {
            let d = Dihedral::new(p);
            let ap = d.a_prime_matrix();
            let n = d.irreps.len();
            let idx_of = |label: &str| d.irreps.iter().position(|e| e.info.label == label);
            for i in 0..n {
                for j in 0..n {
                    if ap[i][j] != ap[j][i] {
                        return Err(format!("p={p}: symmetry fails at ({i},{j})"));
                    }
                    // sign-twist identity via the recorded partners
                    let pi = idx_of(d.irreps[i].info.sgn_partner.as_ref().unwrap()).unwrap();
                    let pj = idx_of(d.irreps[j].info.sgn_partner.as_ref().unwrap()).unwrap();
                    if ap[i][pj] != ap[pi][j] {
                        return Err(format!("p={p}: sign-twist identity fails at ({i},{j})"));
                    }
                }
                // dimension identity: Σ_j A'_{i,j} dim(j) = dim(i)
                let mut sum = crate::exact::CycRat::zero();
                for (j, irr) in d.irreps.iter().enumerate() {
                    let t = ap[i][j]
                        .try_mul(&crate::exact::CycRat::integer(irr.info.dim as i64))
                        .map_err(|e| e.to_string())?;
                    sum = &sum + &t;
                }
                if sum != crate::exact::CycRat::integer(d.irreps[i].info.dim as i64) {
                    return Err(format!(
                        "p={p}: dimension identity fails at row {}",
                        d.irreps[i].info.label
                    ));
                }
            }
        }
        Ok("symmetry, sign-twist and dimension identities hold".into())
    }));

    checks.push(Check::run(None, "A'' via character-table formula p=3..=12", || {
        for p in 3..=12u32 {
            let d = Dihedral::new(p);
            let via = d.a_double_prime_via_characters().map_err(|e| format!("p={p}: {e}"))?;
            let closed = d.a_double_prime_matrix();
            for (r, row) in closed.iter().enumerate() {
                for (c, want) in row.iter().enumerate() {
                    if &via[r][c] != want {
                        return Err(format!("p={p}: generic formula differs at ({r},{c})"));
                    }
                }
            }
        }
        Ok("generic-degree formula reproduces the closed forms".into())
    }));

    checks
}

/// σ extraction for `I2(p)` from the computed Ψ.
pub fn dihedral_sigma_report(p: u32) -> Result<StrataReport, String> {
    let d = Dihedral::new(p);
    let psi = d.psi().map_err(|e| e.to_string())?;
    sigma_map(&psi, SigmaMode::Noncrystallographic).map_err(|e| e.to_string())
}

/// The per-`p` slice of the dihedral suite, for `psi --check`.
pub fn dihedral_single_p_checks(p: u32) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(Check::run(None, "psi closed forms", || {
        let d = Dihedral::new(p);
        let psi = d.psi().map_err(|e| e.to_string())?;
        let want = d.psi_closed_form();
        for (r, row) in want.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if psi.entry(r, c) != cell {
                    return Err(format!(
                        "({}, {}): computed {} vs closed form {}",
                        d.classes[r].meta.label,
                        d.irreps[c].info.label,
                        psi.entry(r, c),
                        cell
                    ));
                }
            }
        }
        Ok("match".into())
    }));
    checks.push(Check::run(None, "AA' closed forms", || {
        let d = Dihedral::new(p);
        let aa = d.aa_prime_matrix();
        let want = d.aa_prime_closed_form();
        for (r, row) in want.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if let Some(w) = cell {
                    if &aa[r][c] != w {
                        return Err(format!("listed cell ({r},{c}) differs"));
                    }
                }
            }
        }
        Ok("match".into())
    }));
    if matches!(p, 5 | 7 | 8) {
        checks.push(Check::run(None, "printed matrix", || {
            let d = Dihedral::new(p);
            let psi = d.psi().map_err(|e| e.to_string())?;
            let table = embedded_psi_table(GroupType::I2(p)).map_err(|e| e.to_string())?;
            let diff = table.diff(&psi).map_err(|e| e.to_string())?;
            if diff.is_empty() {
                Ok("exact match".into())
            } else {
                Err(diff.summarize())
            }
        }));
    }
    checks
}

/// Fibers of σ for any type with σ data: computed for the dihedral
/// series, extracted from the golden Ψ for B3 and H3, and loaded from
/// the golden fiber table (with invariants recomputed) for H4.
pub fn fiber_data_for(gt: GroupType) -> Result<FiberData, String> {
    let report = match gt {
        GroupType::I2(p) => dihedral_sigma_report(p)?,
        GroupType::B3 => b3_sigma_report()?,
        GroupType::H3 => h3_sigma_report()?,
        GroupType::H4 => {
            let g = CoxGroup::build(GroupType::H4).map_err(|e| e.to_string())?;
            let sigma = embedded_table("h4_sigma").map_err(|e| e.to_string())?;
            return FiberData::from_golden_sigma(&sigma, &g).map_err(|e| e.to_string());
        }
        other => return Err(format!("no strata-map data available for {other}")),
    };
    FiberData::from_report(&report).map_err(|e| e.to_string())
}

// ------------------------------------------------------------------- hecke

fn lemma_checks_for_element(g: &CoxGroup, w: u32) -> Result<(), String> {
    let ev = hecke::e_vector(g, w);
    let wlen = g.length(w);
    let sign = if wlen % 2 == 0 { 1 } else { -1 };
    let mut saw_identity = false;
    for y in ev.support() {
        let poly = ev.get(y);
        // constant term (-1)^{|w|} for every y in the support
        if poly.constant_term() != sign {
            return Err(format!(
                "constant-term lemma fails at w={w} y={y}: {:?}",
                poly.constant_term()
            ));
        }
        // degree bound |y| + deg e_{y,w} <= |w|
        let deg = poly.degree().unwrap();
        if g.length(y) + deg > wlen {
            return Err(format!("degree bound fails at w={w} y={y}"));
        }
        if y == g.identity() {
            saw_identity = true;
            if deg != wlen || poly.leading() != Some(1) {
                return Err(format!("e_{{1,w}} leading-term lemma fails at w={w}"));
            }
        }
    }
    if !saw_identity {
        return Err(format!("support of w={w} misses the identity"));
    }
    Ok(())
}

fn suite_hecke() -> Vec<Check> {
    let mut checks = Vec::new();
    let small_types = [
        GroupType::I2(5),
        GroupType::I2(6),
        GroupType::I2(7),
        GroupType::I2(8),
        GroupType::A2,
        GroupType::B2,
        GroupType::A3,
        GroupType::B3,
        GroupType::H3,
    ];

    checks.push(Check::run(Some(5), "expansion lemmas on all elements (small types)", || {
        let mut total = 0usize;
        for gt in small_types {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            for w in 0..g.order() as u32 {
                lemma_checks_for_element(&g, w).map_err(|e| format!("{gt}: {e}"))?;
                total += 1;
            }
        }
        Ok(format!("constant-term and leading-term lemmas hold for {total} elements"))
    }));

    checks.push(Check::run(Some(5), "expansion lemmas on the 34 H4 class representatives", || {
        let g = CoxGroup::build(GroupType::H4).map_err(|e| e.to_string())?;
        for class in g.classes() {
            lemma_checks_for_element(&g, class.rep)
                .map_err(|e| format!("H4 {}: {e}", class.label))?;
        }
        Ok("lemmas hold up to length 60".into())
    }));

    checks.push(Check::run(Some(5), "class parity and length bound", || {
        let mut types = vec![
            GroupType::A1,
            GroupType::A2,
            GroupType::A3,
            GroupType::B2,
            GroupType::B3,
            GroupType::H3,
            GroupType::H4,
        ];
        types.extend((3..=12).map(GroupType::I2));
        for gt in types {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            for class in g.classes() {
                let a = class.min_length + class.m;
                let b = g.rank();
                if a < b || (a - b) % 2 != 0 {
                    return Err(format!(
                        "{gt} class {}: |C|+m-m(1) = {} is negative or odd",
                        class.label,
                        a as i64 - b as i64
                    ));
                }
            }
        }
        Ok("|C| + m(C) - m(1) is even and nonnegative for every class".into())
    }));

    checks.push(Check::run(Some(5), "regular-representation inversion oracle", || {
        for gt in [
            GroupType::A2,
            GroupType::B2,
            GroupType::A3,
            GroupType::I2(5),
            GroupType::I2(6),
        ] {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            for class in g.classes() {
                oracle::compare_with_recurrence(&g, class.rep)
                    .map_err(|e| format!("{gt} {}: {e}", class.label))?;
            }
        }
        Ok("recurrence agrees with exact inversion of the regular representation".into())
    }));

    checks.push(Check::run(None, "reduced-word independence (length <= 8)", || {
        let mut compared = 0usize;
        for gt in [GroupType::B3, GroupType::H3] {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            for w in 0..g.order() as u32 {
                if g.length(w) > 8 {
                    continue;
                }
                let words = g.reduced_words(w, 2);
                if words.len() < 2 {
                    continue;
                }
                let a = hecke::e_vector_along(&g, &words[0]);
                let b = hecke::e_vector_along(&g, &words[1]);
                if a.support() != b.support()
                    || a.support().iter().any(|&y| a.get(y) != b.get(y))
                {
                    return Err(format!("{gt}: e-vector differs between words of w={w}"));
                }
                compared += 1;
            }
        }
        Ok(format!("{compared} elements agree along two distinct reduced words"))
    }));

    checks.push(Check::run(None, "trivial-column leading and constant terms", || {
        let mut types = vec![
            GroupType::A2,
            GroupType::B2,
            GroupType::A3,
            GroupType::B3,
            GroupType::H3,
            GroupType::H4,
        ];
        types.extend((5..=8).map(GroupType::I2));
        for gt in types {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            for class in g.classes() {
                let col = hecke::psi_trivial_column(&g, class)
                    .map_err(|e| format!("{gt} {}: {e}", class.label))?;
                let (lead, vdeg, cst) =
                    col.leading_and_constant().map_err(|e| e.to_string())?;
                let want = 2 * (class.min_length + class.m - g.rank());
                if vdeg != want || !lead.is_one() || !cst.is_one() {
                    return Err(format!(
                        "{gt} {}: column {} violates the leading/constant law",
                        class.label, col
                    ));
                }
            }
        }
        Ok("leading degree 2(|C|+m-m(1)), monic, constant term 1".into())
    }));

    checks.push(Check::run(Some(6), "trivial column vs dihedral pipeline p=3..=12", || {
        for p in 3..=12u32 {
            let d = Dihedral::new(p);
            let psi = d.psi().map_err(|e| format!("p={p}: {e}"))?;
            let g = CoxGroup::build(GroupType::I2(p)).map_err(|e| e.to_string())?;
            for (r, class) in d.classes.iter().enumerate() {
                let cls = g.resolve_label(&class.meta.label).map_err(|e| e.to_string())?;
                let col = hecke::psi_trivial_column(&g, cls).map_err(|e| e.to_string())?;
                if &col != psi.entry(r, 0) {
                    return Err(format!(
                        "p={p} {}: recurrence {} vs pipeline {}",
                        class.meta.label,
                        col,
                        psi.entry(r, 0)
                    ));
                }
            }
        }
        Ok("recurrence equals the assembled first column".into())
    }));

    for (criterion, gt, table_name) in
        [(6u8, GroupType::B3, "b3_psi"), (6, GroupType::H3, "h3_psi")]
    {
        let name = format!("trivial column vs golden matrix ({gt})");
        checks.push(Check::run(Some(criterion), &name, move || {
            let g = CoxGroup::build(gt).map_err(|e| e.to_string())?;
            let table = embedded_table(table_name).map_err(|e| e.to_string())?;
            let trivial_col = &table.cols[0];
            for row in &table.rows {
                let cls = g.resolve_label(row).map_err(|e| e.to_string())?;
                let col = hecke::psi_trivial_column(&g, cls).map_err(|e| e.to_string())?;
                let want = table.entry(row, trivial_col).map_err(|e| e.to_string())?;
                if col != want {
                    return Err(format!("{row}: recurrence {col} vs golden {want}"));
                }
            }
            Ok(format!("all {} rows match", table.rows.len()))
        }));
    }

    checks
}

// ---------------------------------------------------------- linear algebra

/// Independent oracle for the expansion coefficients: invert the regular
/// representation of `T_{w⁻¹}` at enough rational values of `u` and
/// interpolate. Shares nothing with the recurrence path.
mod oracle {
    use super::*;

    /// Left-multiplication matrix of `T_{w⁻¹}` on the T-basis at
    /// `u = q`, for `w` spelled by `word`: accumulating generator steps
    /// on the left reverses the word.
    fn t_matrix_of_inverse(g: &CoxGroup, word: &[u8], q: &Rat) -> Vec<Vec<Rat>> {
        let n = g.order();
        let mut m = identity(n);
        for &letter in word {
            let s = letter as usize - 1;
            let mut step = vec![vec![Rat::zero(); n]; n];
            for y in 0..n as u32 {
                let sy = g.left_mul_gen(s, y);
                if g.length(sy) > g.length(y) {
                    step[sy as usize][y as usize] = Rat::one();
                } else {
                    step[y as usize][y as usize] = q - Rat::one();
                    step[sy as usize][y as usize] = q.clone();
                }
            }
            m = mat_mul(&step, &m);
        }
        m
    }

    fn identity(n: usize) -> Vec<Vec<Rat>> {
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rat::one();
        }
        m
    }

    fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let n = a.len();
        let mut out = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[k][j].is_zero() {
                        let t = &a[i][k] * &b[k][j];
                        out[i][j] += t;
                    }
                }
            }
        }
        out
    }

    /// Exact Gauss-Jordan inverse.
    fn invert(mut m: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
        let n = m.len();
        let mut inv = identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let p = m[col][col].clone();
            for j in 0..n {
                m[col][j] /= p.clone();
                inv[col][j] /= p.clone();
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in 0..n {
                        let t = &f * &m[col][j];
                        m[r][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Lagrange interpolation through `(points[i], values[i])`.
    fn interpolate(points: &[Rat], values: &[Rat]) -> Vec<Rat> {
        let n = points.len();
        let mut acc = vec![Rat::zero(); n];
        for i in 0..n {
            // basis polynomial Π_{j≠i} (x - x_j) / (x_i - x_j)
            let mut basis = vec![Rat::one()];
            let mut denom = Rat::one();
            for j in 0..n {
                if i == j {
                    continue;
                }
                basis = poly_mul_linear(&basis, &points[j]);
                denom *= &points[i] - &points[j];
            }
            let scale = &values[i] / denom;
            for (a, b) in acc.iter_mut().zip(basis.iter()) {
                *a += b * &scale;
            }
        }
        while acc.last().map(|c| c.is_zero()).unwrap_or(false) {
            acc.pop();
        }
        acc
    }

    /// multiply by (x - r)
    fn poly_mul_linear(p: &[Rat], r: &Rat) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * r;
        }
        out
    }

    /// Compare the recurrence result for `w` against the inversion
    /// oracle, entry by entry over the whole group.
    pub fn compare_with_recurrence(g: &CoxGroup, w: u32) -> Result<(), String> {
        let n = g.order();
        let wlen = g.length(w);
        let points: Vec<Rat> =
            (0..=wlen).map(|k| Rat::from_integer(((k + 2) as i64).into())).collect();
        // values[y][sample]
        let mut values = vec![Vec::with_capacity(points.len()); n];
        for q in &points {
            let m = t_matrix_of_inverse(g, g.word(w), q);
            let inv = invert(m).ok_or("regular representation not invertible")?;
            let minus_q_pow = {
                let mut acc = Rat::one();
                for _ in 0..wlen {
                    acc *= -q.clone();
                }
                acc
            };
            for (y, vals) in values.iter_mut().enumerate() {
                vals.push(&inv[y][g.identity() as usize] * &minus_q_pow);
            }
        }
        let ev = hecke::e_vector(g, w);
        for (y, vals) in values.iter().enumerate() {
            let coeffs = interpolate(&points, vals);
            let oracle_poly = PolyU::from_coeffs(
                coeffs.into_iter().map(crate::exact::CycRat::rational).collect(),
            );
            let recurrence = ev.coefficient(y as u32);
            if oracle_poly != recurrence {
                return Err(format!(
                    "disagreement at y={y}: oracle {oracle_poly} vs recurrence {recurrence}"
                ));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------- B3

fn suite_b3() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::run(Some(7), "golden matrix validation (B3)", || {
        let g = CoxGroup::build(GroupType::B3).map_err(|e| e.to_string())?;
        let table = embedded_psi_table(GroupType::B3).map_err(|e| e.to_string())?;
        // construction runs the identity-row and sign-column checks
        table.to_psi_matrix(&g).map_err(|e| e.to_string())?;
        for class in g.classes() {
            if !hecke::sgn_column_check(&g, class).map_err(|e| e.to_string())? {
                return Err(format!("sign column fails at class {}", class.label));
            }
        }
        Ok("identity row equals dimensions; sign column is the identity indicator".into())
    }));

    checks.push(Check::run(Some(7), "Weyl-mode extraction (B3)", || {
        let report = b3_sigma_report()?;
        let star_golden = embedded_table("b3_irr_star").map_err(|e| e.to_string())?;
        if report.irr_star != star_golden.members() {
            return Err(format!("Irr_* = {:?}, expected {:?}", report.irr_star, star_golden.members()));
        }
        if !report.irr_star_star.is_empty() {
            return Err(format!("Irr_** = {:?}, expected empty", report.irr_star_star));
        }
        for row in &report.rows {
            if row.x_max.len() != 1 {
                return Err(format!("class {}: maximal set {:?}", row.class.label, row.x_max));
            }
            if row.monomial_check != Some(true) {
                return Err(format!(
                    "class {}: psi value {} is not the expected monomial",
                    row.class.label, row.psi
                ));
            }
        }
        if !report.image_is_all_of_candidates() {
            return Err("image differs from the candidate set".into());
        }
        Ok("all 10 maximal sets are singletons; monomial law holds; image is onto the candidates"
            .into())
    }));

    checks
}

/// Weyl-mode σ for B3, from the embedded golden Ψ.
pub fn b3_sigma_report() -> Result<StrataReport, String> {
    let g = CoxGroup::build(GroupType::B3).map_err(|e| e.to_string())?;
    let table = embedded_psi_table(GroupType::B3).map_err(|e| e.to_string())?;
    let psi = table.to_psi_matrix(&g).map_err(|e| e.to_string())?;
    sigma_map(&psi, SigmaMode::Weyl).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------- H3

/// Noncrystallographic σ for H3, from the embedded golden Ψ.
pub fn h3_sigma_report() -> Result<StrataReport, String> {
    let g = CoxGroup::build(GroupType::H3).map_err(|e| e.to_string())?;
    let table = embedded_psi_table(GroupType::H3).map_err(|e| e.to_string())?;
    let psi = table.to_psi_matrix(&g).map_err(|e| e.to_string())?;
    sigma_map(&psi, SigmaMode::Noncrystallographic).map_err(|e| e.to_string())
}

fn suite_h3() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::run(Some(8), "golden matrix validation (H3)", || {
        let g = CoxGroup::build(GroupType::H3).map_err(|e| e.to_string())?;
        let table = embedded_psi_table(GroupType::H3).map_err(|e| e.to_string())?;
        table.to_psi_matrix(&g).map_err(|e| e.to_string())?;
        for class in g.classes() {
            if !hecke::sgn_column_check(&g, class).map_err(|e| e.to_string())? {
                return Err(format!("sign column fails at class {}", class.label));
            }
        }
        Ok("identity row equals dimensions; sign column is the identity indicator".into())
    }));

    checks.push(Check::run(Some(8), "noncrystallographic extraction matches the table (H3)", || {
        let report = h3_sigma_report()?;
        let sigma_golden = embedded_table("h3_sigma").map_err(|e| e.to_string())?;
        for row in &report.rows {
            let want_col = sigma_golden
                .rows
                .iter()
                .position(|r| r == &row.class.label)
                .and_then(|ri| {
                    sigma_golden
                        .entries
                        .keys()
                        .find(|&&(r, _)| r == ri)
                        .map(|&(_, c)| sigma_golden.cols[c].clone())
                })
                .ok_or_else(|| format!("class {} missing from the table", row.class.label))?;
            if row.sigma != want_col {
                return Err(format!(
                    "sigma({}) = {}, table says {}",
                    row.class.label, row.sigma, want_col
                ));
            }
            let want_poly = sigma_golden
                .entry(&row.class.label, &want_col)
                .map_err(|e| e.to_string())?;
            if row.psi != want_poly {
                return Err(format!(
                    "psi({}, {}) = {}, table says {}",
                    row.class.label, row.sigma, row.psi, want_poly
                ));
            }
        }
        let star = embedded_table("h3_irr_star").map_err(|e| e.to_string())?;
        if report.irr_star != star.members() {
            return Err(format!("Irr_* = {:?}", report.irr_star));
        }
        let star2 = embedded_table("h3_irr_star_star").map_err(|e| e.to_string())?;
        if report.irr_star_star != star2.members() {
            return Err(format!("Irr_** = {:?}, expected empty", report.irr_star_star));
        }
        let image = embedded_table("h3_sigma_image").map_err(|e| e.to_string())?;
        if report.image != image.members() {
            return Err(format!("image = {:?}", report.image));
        }
        if report.image_is_all_of_candidates() {
            return Err("containment should be strict for H3".into());
        }
        // the monomial law fails exactly at c_15
        for row in &report.rows {
            let expected = row.class.label != "c_15";
            if row.monomial_check != Some(expected) {
                return Err(format!(
                    "monomial law at {}: got {:?}",
                    row.class.label, row.monomial_check
                ));
            }
        }
        Ok("map, recorded polynomials, exclusion sets and image all match".into())
    }));

    checks
}

// ---------------------------------------------------------------------- H4

fn suite_h4() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::run(Some(9), "golden fiber partition and set arithmetic (H4)", || {
        let g = CoxGroup::build(GroupType::H4).map_err(|e| e.to_string())?;
        let sigma = embedded_table("h4_sigma").map_err(|e| e.to_string())?;
        if sigma.rows.len() != 34 {
            return Err(format!("{} rows", sigma.rows.len()));
        }
        // every row carries exactly one recorded polynomial
        for (ri, row) in sigma.rows.iter().enumerate() {
            let hits = sigma.entries.keys().filter(|&&(r, _)| r == ri).count();
            if hits != 1 {
                return Err(format!("row {row} has {hits} entries"));
            }
        }
        // rows resolve to all 34 distinct classes
        let mut seen = std::collections::BTreeSet::new();
        for row in &sigma.rows {
            let cls = g.resolve_label(row).map_err(|e| e.to_string())?;
            if !seen.insert(cls.label.clone()) {
                return Err(format!("rows {row} duplicates a class"));
            }
        }
        if seen.len() != g.classes().len() {
            return Err("fibers do not cover every class".into());
        }
        // the recorded value at sigma(C) may not carry a negative
        // coefficient, otherwise its column would be excluded
        for (&(r, c), poly) in &sigma.entries {
            if poly.has_negative_coeff() {
                return Err(format!(
                    "recorded value at ({}, {}) has a negative coefficient",
                    sigma.rows[r], sigma.cols[c]
                ));
            }
        }
        // set arithmetic: 34 = 22 + 9 + 3, disjointly
        let star = embedded_table("h4_irr_star").map_err(|e| e.to_string())?;
        let star2 = embedded_table("h4_irr_star_star").map_err(|e| e.to_string())?;
        let image = embedded_table("h4_sigma_image").map_err(|e| e.to_string())?;
        let mut union: Vec<String> = Vec::new();
        union.extend(star.members().iter().cloned());
        union.extend(star2.members().iter().cloned());
        union.extend(image.members().iter().cloned());
        let all: std::collections::BTreeSet<String> =
            GroupType::H4.irreducibles().into_iter().map(|e| e.label).collect();
        let union_set: std::collections::BTreeSet<String> = union.iter().cloned().collect();
        if union.len() != 34 || union_set != all {
            return Err("exclusion sets and image do not partition the 34 representations".into());
        }
        // image = columns with nonempty fibers, in column order
        let fiber_cols: Vec<String> = sigma
            .cols
            .iter()
            .enumerate()
            .filter(|(ci, _)| sigma.entries.keys().any(|&(_, c)| c == *ci))
            .map(|(_, l)| l.clone())
            .collect();
        if fiber_cols != image.members() {
            return Err("fibered columns differ from the published image".into());
        }
        Ok("34 = 22 + 9 + 3; fibers partition the classes; recorded values consistent".into())
    }));

    checks.push(Check::run(Some(9), "cross-sections from golden fibers (H4)", || {
        let g = CoxGroup::build(GroupType::H4).map_err(|e| e.to_string())?;
        let sigma = embedded_table("h4_sigma").map_err(|e| e.to_string())?;
        let fibers = FiberData::from_golden_sigma(&sigma, &g).map_err(|e| e.to_string())?;
        let tp = tau_prime(&fibers).map_err(|e| e.to_string())?;
        let td = tau_double_prime(&fibers).map_err(|e| e.to_string())?;
        compare_image(&g, &tp, "h4_tau_prime_image")?;
        compare_image(&g, &td, "h4_tau_double_prime_image")?;
        // sections land in their fibers, so composing with σ is the identity
        for sel in tp.iter().chain(td.iter()) {
            let fiber = fibers.fiber_of(&sel.irr).unwrap();
            if !fiber.classes.iter().any(|c| c.label == sel.class.label) {
                return Err(format!("section leaves the fiber of {}", sel.irr));
            }
        }
        Ok("both 22-element image lists match; sections invert sigma".into())
    }));

    checks
}

/// Compare a cross-section's image with a golden list, as sets of
/// resolved classes.
fn compare_image(
    g: &CoxGroup,
    selections: &[crate::crosssec::Selection],
    golden_name: &str,
) -> Result<(), String> {
    let table = embedded_table(golden_name).map_err(|e| e.to_string())?;
    let mut got = std::collections::BTreeSet::new();
    for sel in selections {
        let cls = g.resolve_label(&sel.class.label).map_err(|e| e.to_string())?;
        got.insert(cls.rep);
    }
    let mut want = std::collections::BTreeSet::new();
    for label in table.members() {
        let cls = g.resolve_label(label).map_err(|e| e.to_string())?;
        want.insert(cls.rep);
    }
    if got != want {
        let got_labels: Vec<String> =
            selections.iter().map(|s| s.class.label.clone()).collect();
        return Err(format!(
            "{golden_name}: computed image {:?} differs from {:?}",
            got_labels,
            table.members()
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------- crosssec

fn suite_crosssec() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::run(Some(10), "cross-sections of the computed sigma (H3)", || {
        let g = CoxGroup::build(GroupType::H3).map_err(|e| e.to_string())?;
        let report = h3_sigma_report()?;
        let fibers = FiberData::from_report(&report).map_err(|e| e.to_string())?;
        let tp = tau_prime(&fibers).map_err(|e| e.to_string())?;
        let td = tau_double_prime(&fibers).map_err(|e| e.to_string())?;
        compare_image(&g, &tp, "h3_tau_prime_image")?;
        compare_image(&g, &td, "h3_tau_double_prime_image")?;
        let adjudicated = embedded_table("h3_tau_double_prime_image")
            .map_err(|e| e.to_string())?
            .annotations
            .len();
        Ok(format!(
            "both 8-element image lists match ({adjudicated} adjudicated member)"
        ))
    }));

    checks.push(Check::run(Some(10), "dihedral sections invert sigma p=3..=30", || {
        for p in P_RANGE {
            let report = dihedral_sigma_report(p).map_err(|e| format!("p={p}: {e}"))?;
            let fibers = FiberData::from_report(&report).map_err(|e| e.to_string())?;
            let tp = tau_prime(&fibers).map_err(|e| format!("p={p}: {e}"))?;
            let td = tau_double_prime(&fibers).map_err(|e| format!("p={p}: {e}"))?;
            for (a, b) in tp.iter().zip(td.iter()) {
                if a.class.label != b.class.label {
                    return Err(format!("p={p}: sections differ at {}", a.irr));
                }
                // the fiber is a singleton, so the section is σ⁻¹
                if report.sigma_of(&a.class.label) != Some(a.irr.as_str()) {
                    return Err(format!("p={p}: section does not invert sigma at {}", a.irr));
                }
            }
            if tp.len() != report.rows.len() {
                return Err(format!("p={p}: sections are not total"));
            }
        }
        Ok("both sections equal the inverse bijection".into())
    }));

    checks.push(Check::run(None, "Weyl fibers need no tie-breaks (B3)", || {
        let report = b3_sigma_report()?;
        let fibers = FiberData::from_report(&report).map_err(|e| e.to_string())?;
        for sel in tau_prime(&fibers).map_err(|e| e.to_string())? {
            if sel.m_filtered.len() != 1 {
                return Err(format!(
                    "fiber of {} has {} minimal-m classes",
                    sel.irr,
                    sel.m_filtered.len()
                ));
            }
        }
        for sel in tau_double_prime(&fibers).map_err(|e| e.to_string())? {
            if sel.m_filtered.len() != 1 {
                return Err(format!(
                    "fiber of {} has {} maximal-m classes",
                    sel.irr,
                    sel.m_filtered.len()
                ));
            }
        }
        Ok("every m-filtered fiber is already a singleton".into())
    }));

    checks.push(Check::run(None, "product groups", || {
        // dihedral square: sections are the inverse of the product bijection
        let d5 = FiberData::from_report(&dihedral_sigma_report(5)?).map_err(|e| e.to_string())?;
        let square = FiberData::product(&[d5.clone(), d5.clone()]);
        let tp = tau_prime(&square).map_err(|e| e.to_string())?;
        if tp.len() != 16 {
            return Err(format!("I2(5) x I2(5): image size {}", tp.len()));
        }
        let td = tau_double_prime(&square).map_err(|e| e.to_string())?;
        for (a, b) in tp.iter().zip(td.iter()) {
            if a.class.label != b.class.label {
                return Err("dihedral product: sections differ".into());
            }
        }

        // H3 x I2(7): image size 8 * 5
        let h3 = FiberData::from_report(&h3_sigma_report()?).map_err(|e| e.to_string())?;
        let d7 = FiberData::from_report(&dihedral_sigma_report(7)?).map_err(|e| e.to_string())?;
        let prod = FiberData::product(&[h3.clone(), d7.clone()]);
        if prod.fibers.len() != 40 {
            return Err(format!("H3 x I2(7): image size {}", prod.fibers.len()));
        }
        let tp = tau_prime(&prod).map_err(|e| e.to_string())?;
        // componentwise: each selection splits into the factor selections
        let tp_h3 = tau_prime(&h3).map_err(|e| e.to_string())?;
        let tp_d7 = tau_prime(&d7).map_err(|e| e.to_string())?;
        for sel in &tp {
            let (ea, eb) = sel.irr.split_once(", ").ok_or("bad tuple label")?;
            let ca = &tp_h3.iter().find(|s| s.irr == ea).unwrap().class;
            let cb = &tp_d7.iter().find(|s| s.irr == eb).unwrap().class;
            if sel.class.label != format!("{}, {}", ca.label, cb.label)
                || sel.class.m != ca.m + cb.m
                || sel.class.min_length != ca.min_length + cb.min_length
            {
                return Err(format!("H3 x I2(7): componentwise mismatch at {}", sel.irr));
            }
        }

        // a single-factor product is the plain map
        let b3 = FiberData::from_report(&b3_sigma_report()?).map_err(|e| e.to_string())?;
        let single = FiberData::product(std::slice::from_ref(&b3));
        let plain = tau_prime(&b3).map_err(|e| e.to_string())?;
        let wrapped = tau_prime(&single).map_err(|e| e.to_string())?;
        for (a, b) in plain.iter().zip(wrapped.iter()) {
            if a.class.label != b.class.label || a.irr != b.irr {
                return Err("single-factor product differs from the plain map".into());
            }
        }

        // three factors: sections stay inside fibers
        let d4 = FiberData::from_report(&dihedral_sigma_report(4)?).map_err(|e| e.to_string())?;
        let triple = FiberData::product(&[b3, h3, d4]);
        for sel in tau_double_prime(&triple).map_err(|e| e.to_string())? {
            let fiber = triple.fiber_of(&sel.irr).unwrap();
            if !fiber.classes.iter().any(|c| c.label == sel.class.label) {
                return Err(format!("triple product: section leaves the fiber of {}", sel.irr));
            }
        }
        Ok("dihedral square, H3 x I2(7), single factor and triple product all behave".into())
    }));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope").is_none());
        for name in suite_names() {
            if *name != "all" {
                // existence only; the heavy runs live in the acceptance test
                assert!(suite_names().contains(name));
            }
        }
    }

    #[test]
    fn oracle_agrees_on_a2() {
        let g = CoxGroup::build(GroupType::A2).unwrap();
        for class in g.classes() {
            oracle::compare_with_recurrence(&g, class.rep).unwrap();
        }
    }

    #[test]
    fn b3_suite_passes() {
        for check in suite_b3() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn h3_suite_passes() {
        for check in suite_h3() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}

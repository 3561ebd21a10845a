//! Cross-sections of the strata map.
//!
//! Given the fibers of σ with per-class invariants `(|C|, m)`, the two
//! cross-sections pick one class per fiber:
//!
//! * τ′ — restrict to the classes of minimal `m`, then take the class of
//!   maximal `|C|`;
//! * τ″ — restrict to the classes of maximal `m`, then take the class of
//!   minimal `|C|`.
//!
//! Both filters together must single out one class; a surviving tie is
//! an error, never a silent choice. For product groups, classes and
//! representations are tuples, `m` and `|C|` add componentwise, and the
//! same selection rule computed on product fibers agrees with the
//! componentwise computation.

use thiserror::Error;

use crate::coxeter::CoxGroup;
use crate::golden::{GoldenError, GoldenTable};
use crate::strata::StrataReport;

#[derive(Debug, Error)]
pub enum CrossSectionError {
    #[error("fiber of {irr} is empty")]
    EmptyFiber { irr: String },
    #[error("fiber of {irr}: tie after both filters between {survivors:?}")]
    NonUnique { irr: String, survivors: Vec<String> },
    #[error("class {0} has no recorded invariants")]
    MissingInvariants(String),
    #[error(transparent)]
    Golden(#[from] GoldenError),
}

/// One class inside a fiber, with the data the selection rule consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    pub label: String,
    pub min_length: usize,
    pub m: usize,
}

/// The fiber of σ over one representation in the image.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub irr: String,
    pub classes: Vec<FiberClass>,
}

/// Fibers of σ for one group (or product of groups), in image order.
#[derive(Clone, Debug)]
pub struct FiberData {
    pub group: String,
    pub fibers: Vec<Fiber>,
}

impl FiberData {
    /// Fibers of a computed extraction report. The report's class
    /// invariants must be populated.
    pub fn from_report(report: &StrataReport) -> Result<FiberData, CrossSectionError> {
        let mut fibers: Vec<Fiber> = report
            .image
            .iter()
            .map(|irr| Fiber { irr: irr.clone(), classes: vec![] })
            .collect();
        for row in &report.rows {
            let (min_length, m) = row
                .class
                .invariants
                .ok_or_else(|| CrossSectionError::MissingInvariants(row.class.label.clone()))?;
            let fiber = fibers
                .iter_mut()
                .find(|f| f.irr == row.sigma)
                .expect("sigma lands in the image");
            fiber.classes.push(FiberClass { label: row.class.label.clone(), min_length, m });
        }
        Ok(FiberData { group: report.group.clone(), fibers })
    }

    /// Fibers of a golden σ table: the fiber of a column is the set of
    /// rows with an entry in it. `(|C|, m)` are recomputed by resolving
    /// the row labels in the group, never read from the file.
    pub fn from_golden_sigma(
        table: &GoldenTable,
        g: &CoxGroup,
    ) -> Result<FiberData, CrossSectionError> {
        let mut fibers = Vec::new();
        for (ci, col) in table.cols.iter().enumerate() {
            let mut classes = Vec::new();
            for (ri, row) in table.rows.iter().enumerate() {
                if table.entries.contains_key(&(ri, ci)) {
                    let cls = g.resolve_label(row).map_err(GoldenError::from)?;
                    classes.push(FiberClass {
                        label: row.clone(),
                        min_length: cls.min_length,
                        m: cls.m,
                    });
                }
            }
            if !classes.is_empty() {
                fibers.push(Fiber { irr: col.clone(), classes });
            }
        }
        Ok(FiberData { group: table.group.clone(), fibers })
    }

    /// Product-group fibers: cartesian products per tuple of image
    /// representations, with `m` and `|C|` added componentwise.
    pub fn product(factors: &[FiberData]) -> FiberData {
        assert!(!factors.is_empty());
        let group = factors.iter().map(|f| f.group.clone()).collect::<Vec<_>>().join(" x ");
        let mut fibers = vec![Fiber { irr: String::new(), classes: vec![FiberClass {
            label: String::new(),
            min_length: 0,
            m: 0,
        }] }];
        for factor in factors {
            let mut next = Vec::with_capacity(fibers.len() * factor.fibers.len());
            for partial in &fibers {
                for f in &factor.fibers {
                    let irr = join_tuple(&partial.irr, &f.irr);
                    let mut classes = Vec::with_capacity(partial.classes.len() * f.classes.len());
                    for pc in &partial.classes {
                        for c in &f.classes {
                            classes.push(FiberClass {
                                label: join_tuple(&pc.label, &c.label),
                                min_length: pc.min_length + c.min_length,
                                m: pc.m + c.m,
                            });
                        }
                    }
                    next.push(Fiber { irr, classes });
                }
            }
            fibers = next;
        }
        FiberData { group, fibers }
    }

    pub fn fiber_of(&self, irr: &str) -> Option<&Fiber> {
        self.fibers.iter().find(|f| f.irr == irr)
    }
}

fn join_tuple(a: &str, b: &str) -> String {
    if a.is_empty() {
        b.to_string()
    } else {
        format!("{a}, {b}")
    }
}

/// One selected cross-section value with its audit trail.
#[derive(Clone, Debug)]
pub struct Selection {
    pub irr: String,
    pub class: FiberClass,
    /// The classes surviving the m-filter (before the length filter).
    pub m_filtered: Vec<FiberClass>,
}

fn select(
    fiber: &Fiber,
    m_max: bool,
    len_max: bool,
) -> Result<Selection, CrossSectionError> {
    if fiber.classes.is_empty() {
        return Err(CrossSectionError::EmptyFiber { irr: fiber.irr.clone() });
    }
    let extreme_m = fiber
        .classes
        .iter()
        .map(|c| c.m)
        .reduce(|a, b| if m_max { a.max(b) } else { a.min(b) })
        .unwrap();
    let m_filtered: Vec<FiberClass> =
        fiber.classes.iter().filter(|c| c.m == extreme_m).cloned().collect();
    let extreme_len = m_filtered
        .iter()
        .map(|c| c.min_length)
        .reduce(|a, b| if len_max { a.max(b) } else { a.min(b) })
        .unwrap();
    let survivors: Vec<FiberClass> =
        m_filtered.iter().filter(|c| c.min_length == extreme_len).cloned().collect();
    match survivors.as_slice() {
        [one] => Ok(Selection { irr: fiber.irr.clone(), class: one.clone(), m_filtered }),
        many => Err(CrossSectionError::NonUnique {
            irr: fiber.irr.clone(),
            survivors: many.iter().map(|c| c.label.clone()).collect(),
        }),
    }
}

/// τ′: minimal m, then maximal |C|.
pub fn tau_prime(f: &FiberData) -> Result<Vec<Selection>, CrossSectionError> {
    f.fibers.iter().map(|fiber| select(fiber, false, true)).collect()
}

/// τ″: maximal m, then minimal |C|.
pub fn tau_double_prime(f: &FiberData) -> Result<Vec<Selection>, CrossSectionError> {
    f.fibers.iter().map(|fiber| select(fiber, true, false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(label: &str, len: usize, m: usize) -> FiberClass {
        FiberClass { label: label.into(), min_length: len, m }
    }

    #[test]
    fn singleton_fiber_is_both_sections() {
        let f = FiberData {
            group: "T".into(),
            fibers: vec![Fiber { irr: "1_0".into(), classes: vec![fc("(-)", 0, 2)] }],
        };
        assert_eq!(tau_prime(&f).unwrap()[0].class.label, "(-)");
        assert_eq!(tau_double_prime(&f).unwrap()[0].class.label, "(-)");
    }

    #[test]
    fn two_stage_selection() {
        let f = FiberData {
            group: "T".into(),
            fibers: vec![Fiber {
                irr: "e".into(),
                classes: vec![fc("a", 16, 0), fc("b", 14, 0), fc("c", 3, 1)],
            }],
        };
        let tp = &tau_prime(&f).unwrap()[0];
        assert_eq!(tp.class.label, "a"); // min m = 0, then max length 16
        assert_eq!(tp.m_filtered.len(), 2);
        let td = &tau_double_prime(&f).unwrap()[0];
        assert_eq!(td.class.label, "c"); // max m = 1 is a singleton
    }

    #[test]
    fn surviving_tie_is_an_error() {
        let f = FiberData {
            group: "T".into(),
            fibers: vec![Fiber {
                irr: "e".into(),
                classes: vec![fc("a", 4, 1), fc("b", 4, 1)],
            }],
        };
        assert!(matches!(
            tau_prime(&f),
            Err(CrossSectionError::NonUnique { .. })
        ));
    }

    #[test]
    fn products_compose_componentwise() {
        let f1 = FiberData {
            group: "X".into(),
            fibers: vec![
                Fiber { irr: "p".into(), classes: vec![fc("x1", 2, 0), fc("x2", 1, 1)] },
                Fiber { irr: "q".into(), classes: vec![fc("x3", 5, 0)] },
            ],
        };
        let f2 = FiberData {
            group: "Y".into(),
            fibers: vec![Fiber { irr: "r".into(), classes: vec![fc("y1", 3, 2), fc("y2", 7, 2)] }],
        };
        let prod = FiberData::product(&[f1.clone(), f2.clone()]);
        assert_eq!(prod.fibers.len(), 2);
        let tp = tau_prime(&prod).unwrap();
        let tp1 = tau_prime(&f1).unwrap();
        let tp2 = tau_prime(&f2).unwrap();
        for sel in &tp {
            let (a, b) = sel.irr.split_once(", ").unwrap();
            let ca = &tp1.iter().find(|s| s.irr == a).unwrap().class;
            let cb = &tp2.iter().find(|s| s.irr == b).unwrap().class;
            assert_eq!(sel.class.label, join_tuple(&ca.label, &cb.label));
            assert_eq!(sel.class.min_length, ca.min_length + cb.min_length);
            assert_eq!(sel.class.m, ca.m + cb.m);
        }
    }
}

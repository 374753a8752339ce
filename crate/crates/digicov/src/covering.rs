//! The covering-type predicates: the original pseudocovering (equality of
//! the sheet union with the neighborhood preimage), the digital covering
//! (sheet restrictions are full isomorphisms), the revised pseudocovering
//! (equality weakened to an inclusion), and the supporting fiber/sheet
//! decomposition.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::lattice::{Neighborhood, Point};
use crate::morphism::{
    is_continuous, is_isomorphism, is_local_isomorphism, is_wl_isomorphism, restrict, DigitalMap,
    Verdict, Witness,
};

/// The fiber over a base point together with one sheet (radius-1
/// neighborhood) per fiber point, their union, and the preimage of the
/// base point's neighborhood.
#[derive(Debug, Clone)]
pub struct FiberDecomposition {
    pub base_point: Point,
    pub fiber: BTreeSet<Point>,
    pub sheets: Vec<Neighborhood>,
    pub union: BTreeSet<Point>,
    pub preimage_of_nbhd: BTreeSet<Point>,
}

/// Populate a [`FiberDecomposition`] at `b` by direct enumeration.
pub fn fiber_decomposition(p: &DigitalMap, b: &Point) -> Result<FiberDecomposition, DomainError> {
    if !p.target().contains(b) {
        return Err(DomainError::PointNotInImage(b.to_string()));
    }
    let fiber = p.fiber(b);
    let sheets: Vec<Neighborhood> = fiber
        .iter()
        .map(|e| p.source().neighborhood(e).expect("fiber point"))
        .collect();
    let union: BTreeSet<Point> = sheets
        .iter()
        .flat_map(|s| s.members().iter().cloned())
        .collect();
    let target_nb = p.target().neighborhood(b).expect("base point");
    let preimage_of_nbhd: BTreeSet<Point> = p
        .source()
        .points()
        .iter()
        .filter(|x| target_nb.contains(p.apply(x)))
        .cloned()
        .collect();
    Ok(FiberDecomposition {
        base_point: b.clone(),
        fiber,
        sheets,
        union,
        preimage_of_nbhd,
    })
}

fn condition1_verdict(fd: &FiberDecomposition) -> Verdict {
    if let Some(e) = fd.preimage_of_nbhd.difference(&fd.union).next() {
        return Verdict::fail(Witness::MissingPreimagePoint {
            b: fd.base_point.clone(),
            e: e.clone(),
        });
    }
    inclusion_verdict(fd)
}

// Union of sheets inside the preimage of N(b,1); a violation exhibits a
// sheet point mapping outside N(b,1), i.e. a discontinuity at the sheet
// center.
fn inclusion_verdict(fd: &FiberDecomposition) -> Verdict {
    for sheet in &fd.sheets {
        for x in sheet.members() {
            if !fd.preimage_of_nbhd.contains(x) {
                return Verdict::fail(Witness::CoveringFailure {
                    b: fd.base_point.clone(),
                    reason: Box::new(Witness::NonContinuousAt {
                        x: sheet.center().clone(),
                        x_adj: x.clone(),
                    }),
                });
            }
        }
    }
    Verdict::ok()
}

fn condition2_verdict(fd: &FiberDecomposition) -> Verdict {
    for (i, si) in fd.sheets.iter().enumerate() {
        for sj in fd.sheets.iter().skip(i + 1) {
            if si.members().intersection(sj.members()).next().is_some() {
                return Verdict::fail(Witness::OverlappingSheets {
                    b: fd.base_point.clone(),
                    e_i: si.center().clone(),
                    e_j: sj.center().clone(),
                });
            }
        }
    }
    Verdict::ok()
}

/// Which isomorphism the sheet restrictions must satisfy: the WL form
/// (onto their own image) of Definition 4(3), or the full form (onto all
/// of N(b,1)) of Definition 5(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition3Mode {
    Wl,
    Iso,
}

fn condition3_verdict(p: &DigitalMap, fd: &FiberDecomposition, mode: Condition3Mode) -> Verdict {
    let b = &fd.base_point;
    for sheet in &fd.sheets {
        let e = sheet.center();
        let verdict = match mode {
            Condition3Mode::Wl => {
                let image = p.image_of(sheet.members());
                let restricted =
                    restrict(p, sheet.members(), &image).expect("image is the codomain");
                is_isomorphism(&restricted)
            }
            Condition3Mode::Iso => {
                let target_nb = p.target().neighborhood(b).expect("base point");
                let mut escape = None;
                for x in sheet.members() {
                    if !target_nb.contains(p.apply(x)) {
                        escape = Some(x.clone());
                        break;
                    }
                }
                match escape {
                    Some(x_adj) => Verdict::fail(Witness::NonContinuousAt {
                        x: e.clone(),
                        x_adj,
                    }),
                    None => {
                        let restricted = restrict(p, sheet.members(), target_nb.members())
                            .expect("membership checked");
                        is_isomorphism(&restricted)
                    }
                }
            }
        };
        if let Some(w) = verdict.witness {
            return Verdict::fail(Witness::CoveringFailure {
                b: b.clone(),
                reason: Box::new(Witness::LocalFailure {
                    x: e.clone(),
                    reason: Box::new(w),
                }),
            });
        }
    }
    Verdict::ok()
}

/// Definition 4(1) at one base point: the sheet union equals the
/// preimage of N(b,1).
pub fn check_condition1_original(p: &DigitalMap, b: &Point) -> Result<Verdict, DomainError> {
    Ok(condition1_verdict(&fiber_decomposition(p, b)?))
}

/// Definition 4(2) at one base point: sheets over distinct fiber points
/// are pairwise disjoint.
pub fn check_condition2_disjoint(p: &DigitalMap, b: &Point) -> Result<Verdict, DomainError> {
    Ok(condition2_verdict(&fiber_decomposition(p, b)?))
}

/// Condition (3) at one base point, in either the Definition 4 (WL) or
/// Definition 5 (full isomorphism) reading.
pub fn check_condition3(
    p: &DigitalMap,
    b: &Point,
    mode: Condition3Mode,
) -> Result<Verdict, DomainError> {
    let fd = fiber_decomposition(p, b)?;
    Ok(condition3_verdict(p, &fd, mode))
}

/// Per-base-point outcome inside a [`PredicateReport`]. `cond1` is the
/// predicate's condition-(1) variant (equality for the original and the
/// digital covering, the inclusion for the revised version);
/// `equality38` records whether the exact equality happens to hold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseReport {
    pub b: Point,
    pub cond1: Option<bool>,
    pub cond2: Option<bool>,
    pub cond3: Option<bool>,
    pub equality38: Option<bool>,
}

/// Outcome of one covering-type predicate, with per-base-point
/// sub-verdicts retained even on success.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredicateReport {
    pub predicate: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub per_base: Vec<BaseReport>,
}

impl PredicateReport {
    fn new(predicate: &str) -> Self {
        PredicateReport {
            predicate: predicate.to_string(),
            holds: true,
            witness: None,
            per_base: Vec::new(),
        }
    }

    fn record_failure(&mut self, witness: Witness) {
        if self.holds {
            self.holds = false;
            self.witness = Some(witness);
        }
    }
}

fn equality38_holds(fd: &FiberDecomposition) -> bool {
    fd.union == fd.preimage_of_nbhd
}

/// Cap on fiber size in subset-search mode; 2^12 subsets per base point.
pub const SUBSET_SEARCH_FIBER_CAP: usize = 12;

/// The original pseudo-(k0,k1)-covering of Definition 4: a surjection
/// whose sheet union equals p^{-1}(N(b,1)), with pairwise disjoint
/// sheets, each restricting to a WL-isomorphism.
///
/// By default the index set M enumerates the whole fiber. With
/// `subset_search` the three conditions are existentially quantified
/// over nonempty subsets of the fiber instead (Definition 4 only says
/// "for some index set M").
pub fn check_original_pseudocovering(
    p: &DigitalMap,
    subset_search: bool,
) -> Result<PredicateReport, DomainError> {
    let mut report = PredicateReport::new("pseudo-original");
    if let Some(y) = p.surjectivity_gap() {
        report.record_failure(Witness::NotSurjective { y });
    }
    for b in p.target().points() {
        let fd = fiber_decomposition(p, b)?;
        if subset_search {
            if fd.fiber.len() > SUBSET_SEARCH_FIBER_CAP {
                return Err(DomainError::SearchSpaceExceeded {
                    estimate: 1u128 << fd.fiber.len(),
                    ceiling: 1u128 << SUBSET_SEARCH_FIBER_CAP,
                });
            }
            let fiber: Vec<&Point> = fd.fiber.iter().collect();
            let mut found = false;
            'subsets: for mask in 1u64..(1u64 << fiber.len()) {
                let chosen: BTreeSet<Point> = fiber
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, e)| (*e).clone())
                    .collect();
                let sub = FiberDecomposition {
                    base_point: b.clone(),
                    sheets: fd
                        .sheets
                        .iter()
                        .filter(|s| chosen.contains(s.center()))
                        .cloned()
                        .collect(),
                    union: fd
                        .sheets
                        .iter()
                        .filter(|s| chosen.contains(s.center()))
                        .flat_map(|s| s.members().iter().cloned())
                        .collect(),
                    fiber: chosen,
                    preimage_of_nbhd: fd.preimage_of_nbhd.clone(),
                };
                if condition1_verdict(&sub).holds
                    && condition2_verdict(&sub).holds
                    && condition3_verdict(p, &sub, Condition3Mode::Wl).holds
                {
                    found = true;
                    break 'subsets;
                }
            }
            report.per_base.push(BaseReport {
                b: b.clone(),
                cond1: Some(found),
                cond2: Some(found),
                cond3: Some(found),
                equality38: Some(equality38_holds(&fd)),
            });
            if !found {
                // Report the full-fiber failure as the witness.
                let w = condition1_verdict(&fd)
                    .witness
                    .or(condition2_verdict(&fd).witness)
                    .or(condition3_verdict(p, &fd, Condition3Mode::Wl).witness)
                    .unwrap_or(Witness::CoveringFailure {
                        b: b.clone(),
                        reason: Box::new(Witness::NotSurjective { y: b.clone() }),
                    });
                report.record_failure(w);
            }
        } else {
            let c1 = condition1_verdict(&fd);
            let c2 = condition2_verdict(&fd);
            let c3 = condition3_verdict(p, &fd, Condition3Mode::Wl);
            report.per_base.push(BaseReport {
                b: b.clone(),
                cond1: Some(c1.holds),
                cond2: Some(c2.holds),
                cond3: Some(c3.holds),
                equality38: Some(equality38_holds(&fd)),
            });
            for v in [c1, c2, c3] {
                if let Some(w) = v.witness {
                    report.record_failure(w);
                    break;
                }
            }
        }
    }
    Ok(report)
}

/// The digital (k0,k1)-covering of Definition 5: conditions (1) and (2)
/// of Definition 4 plus full-isomorphism sheet restrictions.
pub fn check_digital_covering(p: &DigitalMap) -> PredicateReport {
    let mut report = PredicateReport::new("covering");
    if let Some(y) = p.surjectivity_gap() {
        report.record_failure(Witness::NotSurjective { y });
    }
    for b in p.target().points() {
        let fd = fiber_decomposition(p, b).expect("base point");
        let c1 = condition1_verdict(&fd);
        let c2 = condition2_verdict(&fd);
        let c3 = condition3_verdict(p, &fd, Condition3Mode::Iso);
        report.per_base.push(BaseReport {
            b: b.clone(),
            cond1: Some(c1.holds),
            cond2: Some(c2.holds),
            cond3: Some(c3.holds),
            equality38: Some(equality38_holds(&fd)),
        });
        for v in [c1, c2, c3] {
            if let Some(w) = v.witness {
                report.record_failure(w);
                break;
            }
        }
    }
    report
}

/// The revised pseudocovering: condition (1) weakened to the inclusion
/// (sheet union inside the neighborhood preimage), with conditions (2)
/// and (3-WL) unchanged.
pub fn check_revised_pseudocovering(p: &DigitalMap) -> PredicateReport {
    let mut report = PredicateReport::new("pseudo-revised");
    if let Some(y) = p.surjectivity_gap() {
        report.record_failure(Witness::NotSurjective { y });
    }
    for b in p.target().points() {
        let fd = fiber_decomposition(p, b).expect("base point");
        let c1 = inclusion_verdict(&fd);
        let c2 = condition2_verdict(&fd);
        let c3 = condition3_verdict(p, &fd, Condition3Mode::Wl);
        report.per_base.push(BaseReport {
            b: b.clone(),
            cond1: Some(c1.holds),
            cond2: Some(c2.holds),
            cond3: Some(c3.holds),
            equality38: Some(equality38_holds(&fd)),
        });
        for v in [c1, c2, c3] {
            if let Some(w) = v.witness {
                report.record_failure(w);
                break;
            }
        }
    }
    report
}

/// A WL-(k0,k1)-isomorphic surjection.
pub fn check_wl_surjection(p: &DigitalMap) -> PredicateReport {
    let mut report = PredicateReport::new("wl-surjection");
    if let Some(y) = p.surjectivity_gap() {
        report.record_failure(Witness::NotSurjective { y });
        return report;
    }
    if let Some(w) = is_wl_isomorphism(p).witness {
        report.record_failure(w);
    }
    report
}

/// The corrected inclusion (3.9): at every base point the sheet union is
/// contained in p^{-1}(N(b,1)). `equality38` in each base report records
/// whether the stronger equality (3.8) happens to hold there.
pub fn check_inclusion_39(p: &DigitalMap) -> PredicateReport {
    let mut report = PredicateReport::new("inclusion-39");
    for b in p.target().points() {
        let fd = fiber_decomposition(p, b).expect("base point");
        let c1 = inclusion_verdict(&fd);
        report.per_base.push(BaseReport {
            b: b.clone(),
            cond1: Some(c1.holds),
            cond2: None,
            cond3: None,
            equality38: Some(equality38_holds(&fd)),
        });
        if let Some(w) = c1.witness {
            report.record_failure(w);
        }
    }
    report
}

/// All six predicate outcomes for one map.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Classification {
    pub continuous: Verdict,
    pub wl_surjection: PredicateReport,
    pub local_iso: Verdict,
    pub pseudo_original: PredicateReport,
    pub pseudo_revised: PredicateReport,
    pub covering: PredicateReport,
}

impl Classification {
    /// The six booleans in the order continuous, wl-surjection,
    /// local-iso, pseudo-original, pseudo-revised, covering.
    pub fn flags(&self) -> [bool; 6] {
        [
            self.continuous.holds,
            self.wl_surjection.holds,
            self.local_iso.holds,
            self.pseudo_original.holds,
            self.pseudo_revised.holds,
            self.covering.holds,
        ]
    }
}

/// Run every predicate on one map.
pub fn classify(p: &DigitalMap) -> Classification {
    Classification {
        continuous: is_continuous(p),
        wl_surjection: check_wl_surjection(p),
        local_iso: is_local_isomorphism(p),
        pseudo_original: check_original_pseudocovering(p, false).expect("no subset search"),
        pseudo_revised: check_revised_pseudocovering(p),
        covering: check_digital_covering(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_cover, scc_catalog, wrap_map};
    use crate::lattice::{pt, AdjacencyKind, DigitalImage};

    fn wrap_l4() -> DigitalMap {
        wrap_map(&scc_catalog("sc8-2-4").unwrap(), 12).unwrap()
    }

    fn double_cover() -> DigitalMap {
        cyclic_cover(
            &scc_catalog("sc8-2-8").unwrap(),
            &scc_catalog("sc8-2-4").unwrap(),
        )
        .unwrap()
    }

    fn collapse_to_point() -> DigitalMap {
        let kind = AdjacencyKind::new(1, 1).unwrap();
        let src = DigitalImage::new(kind, [pt(&[0]), pt(&[1]), pt(&[2])]).unwrap();
        let kind2 = AdjacencyKind::new(1, 1).unwrap();
        let tgt = DigitalImage::new(kind2, [pt(&[0])]).unwrap();
        DigitalMap::new(
            src,
            tgt,
            [
                (pt(&[0]), pt(&[0])),
                (pt(&[1]), pt(&[0])),
                (pt(&[2]), pt(&[0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fiber_decomposition_identity() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let id = DigitalMap::identity(curve.image().clone());
        let b = curve.point(0);
        let fd = fiber_decomposition(&id, b).unwrap();
        assert_eq!(fd.fiber, [b.clone()].into_iter().collect());
        assert_eq!(fd.sheets.len(), 1);
        assert_eq!(fd.union, fd.preimage_of_nbhd);
    }

    #[test]
    fn fiber_of_wrap_map() {
        let p = wrap_l4();
        let curve = scc_catalog("sc8-2-4").unwrap();
        let fd = fiber_decomposition(&p, curve.point(0)).unwrap();
        let want: BTreeSet<Point> = [pt(&[0]), pt(&[4]), pt(&[8]), pt(&[12])]
            .into_iter()
            .collect();
        assert_eq!(fd.fiber, want);
    }

    #[test]
    fn fiber_of_double_cover() {
        let p = double_cover();
        let big = scc_catalog("sc8-2-8").unwrap();
        let small = scc_catalog("sc8-2-4").unwrap();
        let fd = fiber_decomposition(&p, small.point(0)).unwrap();
        let want: BTreeSet<Point> = [big.point(0).clone(), big.point(4).clone()]
            .into_iter()
            .collect();
        assert_eq!(fd.fiber, want);
        assert_eq!(fd.sheets.len(), 2);
        assert!(fd.sheets.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn fiber_rejects_foreign_base() {
        let p = wrap_l4();
        assert!(fiber_decomposition(&p, &pt(&[9, 9])).is_err());
    }

    #[test]
    fn condition1_wrap_map() {
        let p = wrap_l4();
        let curve = scc_catalog("sc8-2-4").unwrap();
        // Fails at b = x_3 with e = 0.
        let v = check_condition1_original(&p, curve.point(3)).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::MissingPreimagePoint {
                b: curve.point(3).clone(),
                e: pt(&[0]),
            })
        );
        // Holds at b = x_2 (an interior base point).
        assert!(check_condition1_original(&p, curve.point(2)).unwrap().holds);
        // The right window edge creates a mirror failure at b = x_1:
        // p(12) = x_0 lies in N(x_1,1) but 12 is in no sheet over x_1.
        let v = check_condition1_original(&p, curve.point(1)).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::MissingPreimagePoint {
                b: curve.point(1).clone(),
                e: pt(&[12]),
            })
        );
    }

    #[test]
    fn condition2_examples() {
        let p = wrap_l4();
        let curve = scc_catalog("sc8-2-4").unwrap();
        for b in curve.order() {
            assert!(check_condition2_disjoint(&p, b).unwrap().holds);
        }

        let collapse = collapse_to_point();
        let v = check_condition2_disjoint(&collapse, &pt(&[0])).unwrap();
        assert!(matches!(v.witness, Some(Witness::OverlappingSheets { .. })));
    }

    #[test]
    fn condition3_modes_on_wrap_map() {
        let p = wrap_l4();
        let curve = scc_catalog("sc8-2-4").unwrap();
        let b = curve.point(0);
        assert!(check_condition3(&p, b, Condition3Mode::Wl).unwrap().holds);
        // Two-point sheet at e = 0 cannot map onto three points.
        let v = check_condition3(&p, b, Condition3Mode::Iso).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn condition3_iso_on_double_cover() {
        let p = double_cover();
        for b in p.target().points() {
            assert!(check_condition3(&p, b, Condition3Mode::Iso).unwrap().holds);
        }
    }

    #[test]
    fn pseudocovering_outcomes() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let id = DigitalMap::identity(curve.image().clone());
        assert!(check_original_pseudocovering(&id, false).unwrap().holds);

        let p = wrap_l4();
        let report = check_original_pseudocovering(&p, false).unwrap();
        assert!(!report.holds);
        assert_eq!(
            report.witness,
            Some(Witness::MissingPreimagePoint {
                b: curve.point(3).clone(),
                e: pt(&[0]),
            })
        );

        assert!(
            check_original_pseudocovering(&double_cover(), false)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn subset_search_does_not_rescue_wrap_map() {
        // No subset of the fiber can cover the preimage at x_3 without
        // the sheets being disjoint from 0's neighborhood.
        let p = wrap_l4();
        let report = check_original_pseudocovering(&p, true).unwrap();
        assert!(!report.holds);
    }

    #[test]
    fn digital_covering_outcomes() {
        assert!(check_digital_covering(&double_cover()).holds);
        assert!(!check_digital_covering(&wrap_l4()).holds);
        let curve = scc_catalog("sc8-2-4").unwrap();
        let id = DigitalMap::identity(curve.image().clone());
        assert!(check_digital_covering(&id).holds);
    }

    #[test]
    fn revised_pseudocovering_outcomes() {
        assert!(check_revised_pseudocovering(&wrap_l4()).holds);
        assert!(check_revised_pseudocovering(&double_cover()).holds);
        let v = check_revised_pseudocovering(&collapse_to_point());
        assert!(!v.holds);
    }

    #[test]
    fn wl_surjection_outcomes() {
        assert!(check_wl_surjection(&wrap_l4()).holds);
        assert!(check_wl_surjection(&double_cover()).holds);

        // Proper connected subset inclusion is not surjective.
        let curve = scc_catalog("sc8-2-4").unwrap();
        let kind = AdjacencyKind::new(2, 2).unwrap();
        let sub = DigitalImage::new(kind, [pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        let incl = DigitalMap::new(
            sub.clone(),
            curve.image().clone(),
            sub.points().iter().map(|x| (x.clone(), x.clone())),
        )
        .unwrap();
        let report = check_wl_surjection(&incl);
        assert!(matches!(
            report.witness,
            Some(Witness::NotSurjective { .. })
        ));
    }

    #[test]
    fn inclusion_39_outcomes() {
        let p = wrap_l4();
        let report = check_inclusion_39(&p);
        assert!(report.holds);
        let curve = scc_catalog("sc8-2-4").unwrap();
        // Strict at b = x_3 (point 0 uncovered) and at b = x_1 (window
        // endpoint 12 uncovered); equality elsewhere.
        for base in &report.per_base {
            let expect_equality = base.b != *curve.point(3) && base.b != *curve.point(1);
            assert_eq!(base.equality38, Some(expect_equality), "at {}", base.b);
        }

        let id = DigitalMap::identity(curve.image().clone());
        assert!(check_inclusion_39(&id)
            .per_base
            .iter()
            .all(|r| r.equality38 == Some(true)));
    }

    #[test]
    fn classify_wrap_and_cover() {
        let c = classify(&wrap_l4());
        assert_eq!(c.flags(), [true, true, false, false, true, false]);

        let c = classify(&double_cover());
        assert_eq!(c.flags(), [true, true, true, true, true, true]);
    }

    #[test]
    fn classify_constant_from_pair() {
        let kind = AdjacencyKind::new(1, 1).unwrap();
        let src = DigitalImage::new(kind, [pt(&[0]), pt(&[1])]).unwrap();
        let kind2 = AdjacencyKind::new(1, 1).unwrap();
        let tgt = DigitalImage::new(kind2, [pt(&[0])]).unwrap();
        let f = DigitalMap::new(src, tgt, [(pt(&[0]), pt(&[0])), (pt(&[1]), pt(&[0]))]).unwrap();
        let c = classify(&f);
        assert_eq!(c.flags(), [true, false, false, false, false, false]);
    }

    #[test]
    fn degenerate_single_point_target_identity() {
        let kind = AdjacencyKind::new(1, 1).unwrap();
        let one = DigitalImage::new(kind, [pt(&[0])]).unwrap();
        let id = DigitalMap::identity(one);
        let c = classify(&id);
        assert_eq!(c.flags(), [true, true, true, true, true, true]);
    }

    #[test]
    fn witnesses_recheck_against_raw_sets() {
        let p = wrap_l4();
        let report = check_original_pseudocovering(&p, false).unwrap();
        match report.witness {
            Some(Witness::MissingPreimagePoint { b, e }) => {
                let fd = fiber_decomposition(&p, &b).unwrap();
                assert!(fd.preimage_of_nbhd.contains(&e));
                assert!(!fd.union.contains(&e));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }
}

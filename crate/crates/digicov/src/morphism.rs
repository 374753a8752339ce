//! Digital maps and the continuity / isomorphism / local-isomorphism /
//! WL-isomorphism decision procedures. Every failing verdict carries a
//! witness that re-checks against the definitions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::lattice::{DigitalImage, Point};

/// A total point-to-point assignment between two digital images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitalMap {
    source: DigitalImage,
    target: DigitalImage,
    assignment: BTreeMap<Point, Point>,
}

impl DigitalMap {
    pub fn new(
        source: DigitalImage,
        target: DigitalImage,
        pairs: impl IntoIterator<Item = (Point, Point)>,
    ) -> Result<Self, DomainError> {
        let mut assignment = BTreeMap::new();
        for (x, y) in pairs {
            if !source.contains(&x) {
                return Err(DomainError::PointNotInImage(x.to_string()));
            }
            if !target.contains(&y) {
                return Err(DomainError::ValueNotInTarget(y.to_string()));
            }
            if assignment.insert(x.clone(), y).is_some() {
                return Err(DomainError::DuplicateAssignment(x.to_string()));
            }
        }
        for x in source.points() {
            if !assignment.contains_key(x) {
                return Err(DomainError::MissingAssignment(x.to_string()));
            }
        }
        Ok(DigitalMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(image: DigitalImage) -> Self {
        let assignment = image
            .points()
            .iter()
            .map(|p| (p.clone(), p.clone()))
            .collect();
        DigitalMap {
            source: image.clone(),
            target: image,
            assignment,
        }
    }

    pub fn source(&self) -> &DigitalImage {
        &self.source
    }

    pub fn target(&self) -> &DigitalImage {
        &self.target
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.assignment.iter()
    }

    /// Value at a source point. Panics if `x` is not a source point;
    /// the constructor guarantees totality over the source.
    pub fn apply(&self, x: &Point) -> &Point {
        &self.assignment[x]
    }

    pub fn get(&self, x: &Point) -> Option<&Point> {
        self.assignment.get(x)
    }

    pub fn image_of<'a>(&self, xs: impl IntoIterator<Item = &'a Point>) -> BTreeSet<Point> {
        xs.into_iter().map(|x| self.apply(x).clone()).collect()
    }

    /// First target point (in lex order) with empty fiber, if any.
    pub fn surjectivity_gap(&self) -> Option<Point> {
        let image: BTreeSet<&Point> = self.assignment.values().collect();
        self.target
            .points()
            .iter()
            .find(|y| !image.contains(y))
            .cloned()
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_gap().is_none()
    }

    /// First colliding pair (x1 < x2 with equal values), if any.
    pub fn injectivity_collision(&self) -> Option<(Point, Point)> {
        let mut seen: BTreeMap<&Point, &Point> = BTreeMap::new();
        for (x, y) in &self.assignment {
            if let Some(prev) = seen.insert(y, x) {
                return Some((prev.clone(), x.clone()));
            }
        }
        None
    }

    /// The inverse map, when the assignment is a bijection.
    pub fn inverse(&self) -> Option<DigitalMap> {
        if self.injectivity_collision().is_some() || !self.is_surjective() {
            return None;
        }
        let assignment = self
            .assignment
            .iter()
            .map(|(x, y)| (y.clone(), x.clone()))
            .collect();
        Some(DigitalMap {
            source: self.target.clone(),
            target: self.source.clone(),
            assignment,
        })
    }

    pub fn fiber(&self, b: &Point) -> BTreeSet<Point> {
        self.assignment
            .iter()
            .filter(|(_, y)| *y == b)
            .map(|(x, _)| x.clone())
            .collect()
    }
}

/// Structured certificate of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// x' in N(x,1) with f(x') outside N(f(x),1).
    NonContinuousAt {
        x: Point,
        x_adj: Point,
    },
    NotInjective {
        x1: Point,
        x2: Point,
    },
    NotSurjective {
        y: Point,
    },
    /// y' in N(y,1) with f^{-1}(y') outside N(f^{-1}(y),1).
    InverseNotContinuousAt {
        y: Point,
        y_adj: Point,
    },
    LocalFailure {
        x: Point,
        reason: Box<Witness>,
    },
    CoveringFailure {
        b: Point,
        reason: Box<Witness>,
    },
    /// e in p^{-1}(N(b,1)) missing from the union of the sheets over b.
    MissingPreimagePoint {
        b: Point,
        e: Point,
    },
    OverlappingSheets {
        b: Point,
        e_i: Point,
        e_j: Point,
    },
}

/// Boolean outcome plus witness; `holds` is true iff the witness is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn ok() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Proposition-1 continuity: f(N_{k0}(x,1)) is a subset of N_{k1}(f(x),1)
/// for every source point x. The witness is the lexicographically first
/// failing pair.
pub fn is_continuous(f: &DigitalMap) -> Verdict {
    for x in f.source().points() {
        let nb = f.source().neighborhood(x).expect("source point");
        let fx = f.apply(x);
        let target_nb = f.target().neighborhood(fx).expect("target point");
        for x_adj in nb.members() {
            if !target_nb.contains(f.apply(x_adj)) {
                return Verdict::fail(Witness::NonContinuousAt {
                    x: x.clone(),
                    x_adj: x_adj.clone(),
                });
            }
        }
    }
    Verdict::ok()
}

/// (k0,k1)-isomorphism: a continuous bijection whose inverse is continuous.
pub fn is_isomorphism(f: &DigitalMap) -> Verdict {
    if let Some((x1, x2)) = f.injectivity_collision() {
        return Verdict::fail(Witness::NotInjective { x1, x2 });
    }
    if let Some(y) = f.surjectivity_gap() {
        return Verdict::fail(Witness::NotSurjective { y });
    }
    let forward = is_continuous(f);
    if !forward.holds {
        return forward;
    }
    let inverse = f.inverse().expect("bijection");
    if let Verdict {
        holds: false,
        witness: Some(Witness::NonContinuousAt { x, x_adj }),
    } = is_continuous(&inverse)
    {
        return Verdict::fail(Witness::InverseNotContinuousAt { y: x, y_adj: x_adj });
    }
    Verdict::ok()
}

/// The restriction of f to S -> T, both carrying the induced sub-image
/// adjacency of their ambient images.
pub fn restrict(
    f: &DigitalMap,
    s: &BTreeSet<Point>,
    t: &BTreeSet<Point>,
) -> Result<DigitalMap, DomainError> {
    let sub_source = f.source().sub_image(s)?;
    let sub_target = f.target().sub_image(t)?;
    let mut pairs = Vec::with_capacity(s.len());
    for x in s {
        let y = f.apply(x);
        if !t.contains(y) {
            return Err(DomainError::RestrictionEscapes {
                x: x.to_string(),
                y: y.to_string(),
            });
        }
        pairs.push((x.clone(), y.clone()));
    }
    DigitalMap::new(sub_source, sub_target, pairs)
}

/// Local (k0,k1)-isomorphism: every N(x,1) maps isomorphically onto the
/// full N(h(x),1). The onto clause is checked as set equality first, so
/// the witness separates "not onto" from "restriction not an isomorphism".
pub fn is_local_isomorphism(h: &DigitalMap) -> Verdict {
    for x in h.source().points() {
        let nb = h.source().neighborhood(x).expect("source point");
        let target_nb = h.target().neighborhood(h.apply(x)).expect("target point");
        // Continuity at x; otherwise the restriction is not even a map
        // into N(h(x),1).
        for x_adj in nb.members() {
            if !target_nb.contains(h.apply(x_adj)) {
                return Verdict::fail(Witness::LocalFailure {
                    x: x.clone(),
                    reason: Box::new(Witness::NonContinuousAt {
                        x: x.clone(),
                        x_adj: x_adj.clone(),
                    }),
                });
            }
        }
        let image = h.image_of(nb.members());
        if let Some(y) = target_nb.members().iter().find(|y| !image.contains(y)) {
            return Verdict::fail(Witness::LocalFailure {
                x: x.clone(),
                reason: Box::new(Witness::NotSurjective { y: y.clone() }),
            });
        }
        let restricted =
            restrict(h, nb.members(), target_nb.members()).expect("membership checked");
        let verdict = is_isomorphism(&restricted);
        if let Some(w) = verdict.witness {
            return Verdict::fail(Witness::LocalFailure {
                x: x.clone(),
                reason: Box::new(w),
            });
        }
    }
    Verdict::ok()
}

/// Weakly local (k0,k1)-isomorphism: every N(x,1) maps isomorphically
/// onto its own image set h(N(x,1)) with the induced adjacency.
pub fn is_wl_isomorphism(h: &DigitalMap) -> Verdict {
    for x in h.source().points() {
        let nb = h.source().neighborhood(x).expect("source point");
        let image = h.image_of(nb.members());
        let restricted = restrict(h, nb.members(), &image).expect("image is the codomain");
        let verdict = is_isomorphism(&restricted);
        if let Some(w) = verdict.witness {
            return Verdict::fail(Witness::LocalFailure {
                x: x.clone(),
                reason: Box::new(w),
            });
        }
    }
    Verdict::ok()
}

/// Pointwise composition g after f.
pub fn compose(f: &DigitalMap, g: &DigitalMap) -> Result<DigitalMap, DomainError> {
    if f.target() != g.source() {
        return Err(DomainError::CompositionMismatch);
    }
    let pairs = f
        .pairs()
        .map(|(x, y)| (x.clone(), g.apply(y).clone()))
        .collect::<Vec<_>>();
    DigitalMap::new(f.source().clone(), g.target().clone(), pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{scc_catalog, wrap_map};
    use crate::lattice::{pt, AdjacencyKind};

    fn image(t: u32, n: u32, pts: &[&[i64]]) -> DigitalImage {
        let kind = AdjacencyKind::new(t, n).unwrap();
        DigitalImage::new(kind, pts.iter().map(|c| pt(c))).unwrap()
    }

    fn diamond() -> DigitalImage {
        image(2, 2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
    }

    #[test]
    fn identity_is_continuous_and_iso() {
        let id = DigitalMap::identity(diamond());
        assert!(is_continuous(&id).holds);
        assert!(is_isomorphism(&id).holds);
        assert!(is_local_isomorphism(&id).holds);
        assert!(is_wl_isomorphism(&id).holds);
    }

    #[test]
    fn constant_map_is_continuous() {
        let src = image(1, 1, &[&[0], &[1], &[2]]);
        let tgt = image(2, 2, &[&[0, 0]]);
        let f = DigitalMap::new(
            src.clone(),
            tgt.clone(),
            src.points().iter().map(|x| (x.clone(), pt(&[0, 0]))),
        )
        .unwrap();
        assert!(is_continuous(&f).holds);
    }

    #[test]
    fn wrap_map_is_continuous_not_injective() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let p = wrap_map(&curve, 12).unwrap();
        assert!(is_continuous(&p).holds);
        let v = is_isomorphism(&p);
        assert!(matches!(v.witness, Some(Witness::NotInjective { .. })));
    }

    #[test]
    fn adjacent_to_non_adjacent_images_fails() {
        // {0 -> y0, 1 -> y2} into the diamond: y0 and y2 are not adjacent.
        let src = image(1, 1, &[&[0], &[1]]);
        let f = DigitalMap::new(
            src,
            diamond(),
            [(pt(&[0]), pt(&[1, 0])), (pt(&[1]), pt(&[-1, 0]))],
        )
        .unwrap();
        let v = is_continuous(&f);
        assert_eq!(
            v.witness,
            Some(Witness::NonContinuousAt {
                x: pt(&[0]),
                x_adj: pt(&[1]),
            })
        );
    }

    #[test]
    fn bijection_between_pairs() {
        let src = image(1, 1, &[&[0], &[1]]);
        let tgt8 = image(2, 2, &[&[0, 0], &[1, 1]]);
        let f = DigitalMap::new(
            src.clone(),
            tgt8,
            [(pt(&[0]), pt(&[0, 0])), (pt(&[1]), pt(&[1, 1]))],
        )
        .unwrap();
        assert!(is_isomorphism(&f).holds);

        let tgt4 = image(1, 2, &[&[0, 0], &[1, 1]]);
        let g = DigitalMap::new(
            src,
            tgt4,
            [(pt(&[0]), pt(&[0, 0])), (pt(&[1]), pt(&[1, 1]))],
        )
        .unwrap();
        let v = is_isomorphism(&g);
        assert!(matches!(
            v.witness,
            Some(Witness::NonContinuousAt { .. }) | Some(Witness::InverseNotContinuousAt { .. })
        ));
    }

    #[test]
    fn restrict_requires_codomain_cover() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let p = wrap_map(&curve, 12).unwrap();
        let s: BTreeSet<Point> = [pt(&[0]), pt(&[1]), pt(&[2])].into_iter().collect();
        let nb = curve
            .image()
            .neighborhood(&curve.order()[1])
            .unwrap()
            .members()
            .clone();
        assert!(restrict(&p, &s, &nb).is_ok());

        let too_small: BTreeSet<Point> = [curve.order()[1].clone()].into_iter().collect();
        assert!(matches!(
            restrict(&p, &s, &too_small),
            Err(DomainError::RestrictionEscapes { .. })
        ));
    }

    #[test]
    fn restrict_identity() {
        let id = DigitalMap::identity(diamond());
        let s: BTreeSet<Point> = [pt(&[1, 0]), pt(&[0, 1])].into_iter().collect();
        let r = restrict(&id, &s, &s).unwrap();
        assert!(is_isomorphism(&r).holds);
        assert_eq!(r.source().points(), &s);
    }

    #[test]
    fn wrap_map_is_not_local_iso_but_is_wl() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let p = wrap_map(&curve, 12).unwrap();
        let v = is_local_isomorphism(&p);
        // Fails at x = 0: N_2(0,1) has 2 points, N_k(x_0,1) has 3.
        match v.witness {
            Some(Witness::LocalFailure { x, reason }) => {
                assert_eq!(x, pt(&[0]));
                assert!(matches!(*reason, Witness::NotSurjective { .. }));
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(is_wl_isomorphism(&p).holds);
    }

    #[test]
    fn double_cover_is_local_iso() {
        let big = scc_catalog("sc8-2-8").unwrap();
        let small = scc_catalog("sc8-2-4").unwrap();
        let p = crate::catalog::cyclic_cover(&big, &small).unwrap();
        assert!(is_local_isomorphism(&p).holds);
        assert!(is_wl_isomorphism(&p).holds);
    }

    #[test]
    fn collapsing_adjacent_points_fails_wl() {
        let src = image(1, 1, &[&[0], &[1]]);
        let tgt = image(1, 1, &[&[0]]);
        let f = DigitalMap::new(src, tgt, [(pt(&[0]), pt(&[0])), (pt(&[1]), pt(&[0]))]).unwrap();
        let v = is_wl_isomorphism(&f);
        match v.witness {
            Some(Witness::LocalFailure { x, reason }) => {
                assert_eq!(x, pt(&[0]));
                assert!(matches!(*reason, Witness::NotInjective { .. }));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn compose_identity_and_mismatch() {
        let curve = scc_catalog("sc8-2-4").unwrap();
        let p = wrap_map(&curve, 12).unwrap();
        let id = DigitalMap::identity(p.source().clone());
        let c = compose(&id, &p).unwrap();
        assert_eq!(&c, &p);

        let other = DigitalMap::identity(diamond());
        assert!(matches!(
            compose(&other, &p),
            Err(DomainError::CompositionMismatch)
        ));
    }

    #[test]
    fn witness_recheck_noncontinuous() {
        // Witness soundness: NonContinuousAt(x, x') certifies the failure.
        let src = image(1, 1, &[&[0], &[1]]);
        let f = DigitalMap::new(
            src.clone(),
            diamond(),
            [(pt(&[0]), pt(&[1, 0])), (pt(&[1]), pt(&[-1, 0]))],
        )
        .unwrap();
        if let Some(Witness::NonContinuousAt { x, x_adj }) = is_continuous(&f).witness {
            let nb = f.source().neighborhood(&x).unwrap();
            assert!(nb.contains(&x_adj));
            let tnb = f.target().neighborhood(f.apply(&x)).unwrap();
            assert!(!tnb.contains(f.apply(&x_adj)));
        } else {
            panic!("expected NonContinuousAt");
        }
    }
}

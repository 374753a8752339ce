//! Points of Z^n, k(t,n)-adjacency, digital images, neighborhoods and
//! k-connectivity.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DomainError;

/// A lattice point of Z^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<i64>> for Point {
    fn from(coords: Vec<i64>) -> Self {
        Point(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand for building a [`Point`] from a coordinate slice.
pub fn pt(coords: &[i64]) -> Point {
    Point(coords.to_vec())
}

/// Number of neighbors of a point of Z^n under k(t,n)-adjacency:
/// sum over i = 1..t of 2^i * C(n, i).
pub fn k_value(t: u32, n: u32) -> Result<u64, DomainError> {
    if t < 1 || t > n {
        return Err(DomainError::BadAdjacency { t, n });
    }
    let mut total: u64 = 0;
    for i in 1..=t {
        total += 2u64.pow(i) * binomial(n as u64, i as u64);
    }
    Ok(total)
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The pair (t, n) selecting a k(t,n)-adjacency on Z^n. The neighbor
/// count k is derived and cached; (t, n) is authoritative, so e.g.
/// k(2,2)=8 and k(1,4)=8 stay distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjacencyKind {
    t: u32,
    n: u32,
    k: u64,
}

impl AdjacencyKind {
    pub fn new(t: u32, n: u32) -> Result<Self, DomainError> {
        let k = k_value(t, n)?;
        Ok(AdjacencyKind { t, n, k })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    /// k(t,n)-adjacency: distinct points whose coordinates differ by at
    /// most 1 each, with between 1 and t nonzero differences.
    pub fn adjacent(&self, p: &Point, q: &Point) -> Result<bool, DomainError> {
        if p.dim() != self.dim() {
            return Err(DomainError::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        if q.dim() != self.dim() {
            return Err(DomainError::DimensionMismatch {
                expected: self.dim(),
                got: q.dim(),
            });
        }
        Ok(adjacent_raw(p, q, self.t))
    }
}

impl fmt::Display for AdjacencyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k({},{})={}", self.t, self.n, self.k)
    }
}

/// Adjacency test assuming dimensions already agree.
pub(crate) fn adjacent_raw(p: &Point, q: &Point, t: u32) -> bool {
    let mut nonzero = 0u32;
    for (a, b) in p.coords().iter().zip(q.coords()) {
        match a - b {
            0 => {}
            -1 | 1 => nonzero += 1,
            _ => return false,
        }
    }
    nonzero >= 1 && nonzero <= t
}

/// Free-function form of [`AdjacencyKind::adjacent`].
pub fn adjacent(p: &Point, q: &Point, kind: &AdjacencyKind) -> Result<bool, DomainError> {
    kind.adjacent(p, q)
}

/// A finite point set of Z^n together with a k(t,n)-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitalImage {
    kind: AdjacencyKind,
    points: BTreeSet<Point>,
}

impl DigitalImage {
    pub fn new(
        kind: AdjacencyKind,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self, DomainError> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.dim() != kind.dim() {
                return Err(DomainError::DimensionMismatch {
                    expected: kind.dim(),
                    got: p.dim(),
                });
            }
            set.insert(p);
        }
        Ok(DigitalImage { kind, points: set })
    }

    pub fn kind(&self) -> &AdjacencyKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    /// The sub-image on `subset` with the same adjacency kind.
    pub fn sub_image(&self, subset: &BTreeSet<Point>) -> Result<DigitalImage, DomainError> {
        for p in subset {
            if !self.points.contains(p) {
                return Err(DomainError::PointNotInImage(p.to_string()));
            }
        }
        Ok(DigitalImage {
            kind: self.kind,
            points: subset.clone(),
        })
    }

    /// N_k(x, 1): x together with every image point adjacent to x.
    pub fn neighborhood(&self, x: &Point) -> Result<Neighborhood, DomainError> {
        if !self.points.contains(x) {
            return Err(DomainError::PointNotInImage(x.to_string()));
        }
        let mut members = BTreeSet::new();
        members.insert(x.clone());
        for q in &self.points {
            if adjacent_raw(x, q, self.kind.t) {
                members.insert(q.clone());
            }
        }
        Ok(Neighborhood {
            center: x.clone(),
            members,
        })
    }

    /// True iff every pair of points is joined by a k-path inside the image.
    pub fn is_connected(&self) -> Result<bool, DomainError> {
        if self.points.is_empty() {
            return Err(DomainError::EmptyImage);
        }
        Ok(self.components().len() == 1)
    }

    /// Partition into maximal k-connected subsets, in order of their
    /// smallest points.
    pub fn components(&self) -> Vec<BTreeSet<Point>> {
        let mut remaining: BTreeSet<&Point> = self.points.iter().collect();
        let mut blocks = Vec::new();
        while let Some(seed) = remaining.iter().next().cloned() {
            let mut block = BTreeSet::new();
            let mut frontier = vec![seed];
            remaining.remove(seed);
            block.insert(seed.clone());
            while let Some(cur) = frontier.pop() {
                let next: Vec<&Point> = remaining
                    .iter()
                    .filter(|q| adjacent_raw(cur, q, self.kind.t))
                    .cloned()
                    .collect();
                for q in next {
                    remaining.remove(q);
                    block.insert(q.clone());
                    frontier.push(q);
                }
            }
            blocks.push(block);
        }
        blocks
    }
}

/// N_k(x, 1) of some image point, as a set value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhood {
    center: Point,
    members: BTreeSet<Point>,
}

impl Neighborhood {
    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn members(&self) -> &BTreeSet<Point> {
        &self.members
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.members.contains(p)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(t: u32, n: u32, pts: &[&[i64]]) -> DigitalImage {
        let kind = AdjacencyKind::new(t, n).unwrap();
        DigitalImage::new(kind, pts.iter().map(|c| pt(c))).unwrap()
    }

    #[test]
    fn k_value_named_table() {
        assert_eq!(k_value(1, 2).unwrap(), 4);
        assert_eq!(k_value(2, 2).unwrap(), 8);
        assert_eq!(k_value(4, 4).unwrap(), 80);
        assert_eq!(k_value(1, 1).unwrap(), 2);
    }

    #[test]
    fn k_value_rejects_out_of_range() {
        assert!(matches!(
            k_value(0, 2),
            Err(DomainError::BadAdjacency { .. })
        ));
        assert!(matches!(
            k_value(3, 2),
            Err(DomainError::BadAdjacency { .. })
        ));
    }

    #[test]
    fn adjacency_examples() {
        let k4 = AdjacencyKind::new(1, 2).unwrap();
        let k8 = AdjacencyKind::new(2, 2).unwrap();
        assert!(!k4.adjacent(&pt(&[0, 0]), &pt(&[1, 1])).unwrap());
        assert!(k8.adjacent(&pt(&[0, 0]), &pt(&[1, 1])).unwrap());
        assert!(!k8.adjacent(&pt(&[0, 0]), &pt(&[0, 0])).unwrap());
        assert!(!k4.adjacent(&pt(&[0, 0]), &pt(&[0, 0])).unwrap());
        assert!(!k8.adjacent(&pt(&[0, 0]), &pt(&[2, 0])).unwrap());
    }

    #[test]
    fn adjacency_dimension_mismatch() {
        let k8 = AdjacencyKind::new(2, 2).unwrap();
        assert!(k8.adjacent(&pt(&[0, 0]), &pt(&[0])).is_err());
    }

    #[test]
    fn neighborhood_window_end() {
        let x = image(1, 1, &[&[0], &[1], &[2], &[3]]);
        let nb = x.neighborhood(&pt(&[0])).unwrap();
        let want: BTreeSet<Point> = [pt(&[0]), pt(&[1])].into_iter().collect();
        assert_eq!(nb.members(), &want);
    }

    #[test]
    fn neighborhood_diamond_point() {
        // SC_8^{2,4} diamond; oracle: direct adjacency enumeration.
        let diamond = [&[1i64, 0][..], &[0, 1], &[-1, 0], &[0, -1]];
        let x = image(2, 2, &diamond);
        let center = pt(&[1, 0]);
        let mut want = BTreeSet::new();
        want.insert(center.clone());
        for q in x.points() {
            if adjacent_raw(&center, q, 2) {
                want.insert(q.clone());
            }
        }
        let expect: BTreeSet<Point> = [pt(&[1, 0]), pt(&[0, 1]), pt(&[0, -1])]
            .into_iter()
            .collect();
        assert_eq!(want, expect);
        assert_eq!(x.neighborhood(&center).unwrap().members(), &expect);
    }

    #[test]
    fn neighborhood_full_grid_center() {
        let pts: Vec<Point> = (0..3)
            .flat_map(|a| (0..3).map(move |b| pt(&[a, b])))
            .collect();
        let kind = AdjacencyKind::new(2, 2).unwrap();
        let x = DigitalImage::new(kind, pts).unwrap();
        let nb = x.neighborhood(&pt(&[1, 1])).unwrap();
        assert_eq!(nb.len(), 9);
    }

    #[test]
    fn neighborhood_requires_membership() {
        let x = image(1, 1, &[&[0], &[1]]);
        assert!(x.neighborhood(&pt(&[5])).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(image(1, 1, &[&[0], &[1], &[2]]).is_connected().unwrap());
        assert!(!image(1, 1, &[&[0], &[2]]).is_connected().unwrap());
        let kind = AdjacencyKind::new(1, 1).unwrap();
        let empty = DigitalImage::new(kind, []).unwrap();
        assert!(matches!(empty.is_connected(), Err(DomainError::EmptyImage)));
    }

    #[test]
    fn radius2_diamond_connected() {
        let pts = [
            &[2i64, 0][..],
            &[1, 1],
            &[0, 2],
            &[-1, 1],
            &[-2, 0],
            &[-1, -1],
            &[0, -2],
            &[1, -1],
        ];
        assert!(image(2, 2, &pts).is_connected().unwrap());
    }

    #[test]
    fn components_examples() {
        let x = image(1, 1, &[&[0], &[1], &[5], &[6]]);
        let blocks = x.components();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], [pt(&[0]), pt(&[1])].into_iter().collect());
        assert_eq!(blocks[1], [pt(&[5]), pt(&[6])].into_iter().collect());

        let kind = AdjacencyKind::new(1, 1).unwrap();
        let empty = DigitalImage::new(kind, []).unwrap();
        assert!(empty.components().is_empty());

        let single = image(1, 1, &[&[7]]);
        assert_eq!(single.components().len(), 1);
    }

    #[test]
    fn neighbor_count_matches_k_value() {
        // Brute force over offsets in {-1,0,1}^n, for all 1 <= t <= n <= 4.
        for n in 1u32..=4 {
            for t in 1..=n {
                let mut count = 0u64;
                let mut offsets = vec![vec![]];
                for _ in 0..n {
                    offsets = offsets
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            [-1i64, 0, 1].iter().map(move |d| {
                                let mut w = v.clone();
                                w.push(*d);
                                w
                            })
                        })
                        .collect();
                }
                let origin = pt(&vec![0; n as usize]);
                for off in &offsets {
                    let q = Point::new(off.clone());
                    if adjacent_raw(&origin, &q, t) {
                        count += 1;
                    }
                }
                assert_eq!(count, k_value(t, n).unwrap(), "t={t} n={n}");
            }
        }
    }
}

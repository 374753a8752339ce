//! Constructors and validators for the concrete objects the checkers are
//! exercised on: simple closed k-curves SC_k^{n,l}, integer intervals,
//! the wrap map t -> x_{t mod l}, and cyclic covers between curves.

use crate::error::DomainError;
use crate::lattice::{AdjacencyKind, DigitalImage, Point};
use crate::morphism::DigitalMap;

/// A simple closed k-curve: l >= 4 points, adjacent exactly at cyclically
/// consecutive indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleClosedCurve {
    image: DigitalImage,
    order: Vec<Point>,
}

impl SimpleClosedCurve {
    pub fn image(&self) -> &DigitalImage {
        &self.image
    }

    /// The cyclic order x_0, ..., x_{l-1}.
    pub fn order(&self) -> &[Point] {
        &self.order
    }

    pub fn l(&self) -> usize {
        self.order.len()
    }

    /// x_{i mod l}.
    pub fn point(&self, i: usize) -> &Point {
        &self.order[i % self.order.len()]
    }
}

/// Validate an ordered point list as an SC_k^{n,l}: x_i and x_j must be
/// adjacent iff |i - j| = +-1 (mod l). Both directions of the iff are
/// checked; the failure names the offending index pair.
pub fn validate_scc(
    points: Vec<Point>,
    kind: AdjacencyKind,
) -> Result<SimpleClosedCurve, DomainError> {
    let l = points.len();
    if l < 4 {
        return Err(DomainError::CurveTooShort(l));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(DomainError::DuplicateCurvePoint(i));
        }
    }
    for i in 0..l {
        for j in (i + 1)..l {
            let consecutive = j - i == 1 || j - i == l - 1;
            let adj = kind.adjacent(&points[i], &points[j])?;
            if consecutive && !adj {
                return Err(DomainError::ConsecutiveNotAdjacent { i, j });
            }
            if !consecutive && adj {
                return Err(DomainError::NonConsecutiveAdjacent { i, j });
            }
        }
    }
    let image = DigitalImage::new(kind, points.clone())?;
    Ok(SimpleClosedCurve {
        image,
        order: points,
    })
}

struct CatalogEntry {
    name: &'static str,
    t: u32,
    n: u32,
    points: &'static [&'static [i64]],
}

// Every entry is revalidated by validate_scc in tests.
const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "sc4-2-4",
        t: 1,
        n: 2,
        points: &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]],
    },
    CatalogEntry {
        name: "sc8-2-4",
        t: 2,
        n: 2,
        points: &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
    },
    // No SC_8^{2,5} exists; the 5-point curve lives in Z^3 with 26-adjacency.
    // Orientation of each cycle is chosen so that x_{l-1} precedes x_1
    // lexicographically, keeping the wrap-map fixture witness at x_{l-1}.
    CatalogEntry {
        name: "sc26-3-5",
        t: 3,
        n: 3,
        points: &[&[2, 2, 1], &[1, 2, 2], &[0, 1, 2], &[0, 0, 1], &[1, 1, 0]],
    },
    CatalogEntry {
        name: "sc8-2-6",
        t: 2,
        n: 2,
        points: &[&[3, 1], &[2, 2], &[1, 2], &[0, 1], &[1, 0], &[2, 0]],
    },
    CatalogEntry {
        name: "sc8-2-7",
        t: 2,
        n: 2,
        points: &[
            &[3, 2],
            &[2, 3],
            &[1, 3],
            &[0, 2],
            &[0, 1],
            &[1, 0],
            &[2, 1],
        ],
    },
    CatalogEntry {
        name: "sc8-2-8",
        t: 2,
        n: 2,
        points: &[
            &[2, 0],
            &[1, 1],
            &[0, 2],
            &[-1, 1],
            &[-2, 0],
            &[-1, -1],
            &[0, -2],
            &[1, -1],
        ],
    },
    CatalogEntry {
        name: "sc4-2-8",
        t: 1,
        n: 2,
        points: &[
            &[0, 0],
            &[1, 0],
            &[2, 0],
            &[2, 1],
            &[2, 2],
            &[1, 2],
            &[0, 2],
            &[0, 1],
        ],
    },
];

/// Names of the built-in curves, one per (k, n, l) the fixtures need.
pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

/// A built-in curve by its stable name, e.g. "sc8-2-4".
pub fn scc_catalog(name: &str) -> Result<SimpleClosedCurve, DomainError> {
    if let Some(entry) = CATALOG.iter().find(|e| e.name == name) {
        let kind = AdjacencyKind::new(entry.t, entry.n)?;
        let points = entry
            .points
            .iter()
            .map(|c| Point::new(c.to_vec()))
            .collect();
        return validate_scc(points, kind);
    }
    // A well-formed name with l < 4 gets the specific length error.
    if let Some(rest) = name.strip_prefix("sc") {
        let parts: Vec<&str> = rest.split('-').collect();
        if parts.len() == 3 {
            if let Ok(l) = parts[2].parse::<usize>() {
                if l < 4 {
                    return Err(DomainError::CurveTooShort(l));
                }
            }
        }
    }
    Err(DomainError::UnknownCatalogName(name.to_string()))
}

/// One catalog curve of each length 4..=8, for the wrap-map fixtures.
pub fn curve_of_length(l: usize) -> Option<SimpleClosedCurve> {
    let name = match l {
        4 => "sc8-2-4",
        5 => "sc26-3-5",
        6 => "sc8-2-6",
        7 => "sc8-2-7",
        8 => "sc8-2-8",
        _ => return None,
    };
    Some(scc_catalog(name).expect("catalog entries validate"))
}

/// The integer interval {a, ..., b} in Z with 2-adjacency.
pub fn interval_image(a: i64, b: i64) -> Result<DigitalImage, DomainError> {
    if a > b {
        return Err(DomainError::BadInterval { a, b });
    }
    let kind = AdjacencyKind::new(1, 1)?;
    DigitalImage::new(kind, (a..=b).map(|c| Point::new(vec![c])))
}

/// The wrap map p(t) = x_{t mod l} from the window [0, window_end] of Z
/// onto the curve. The window must cover at least one full period so the
/// map is surjective.
pub fn wrap_map(curve: &SimpleClosedCurve, window_end: i64) -> Result<DigitalMap, DomainError> {
    let l = curve.l();
    if window_end < l as i64 - 1 {
        return Err(DomainError::WindowTooShort { window_end, l });
    }
    let source = interval_image(0, window_end)?;
    let pairs: Vec<(Point, Point)> = (0..=window_end)
        .map(|t| (Point::new(vec![t]), curve.point(t as usize % l).clone()))
        .collect();
    DigitalMap::new(source, curve.image().clone(), pairs)
}

/// The index-folding map x_i -> y_{i mod small.l} between two curves;
/// with big.l = 2 * small.l this is the standard double cover.
pub fn cyclic_cover(
    big: &SimpleClosedCurve,
    small: &SimpleClosedCurve,
) -> Result<DigitalMap, DomainError> {
    if !big.l().is_multiple_of(small.l()) {
        return Err(DomainError::LengthNotMultiple {
            big: big.l(),
            small: small.l(),
        });
    }
    let pairs: Vec<(Point, Point)> = big
        .order()
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), small.point(i % small.l()).clone()))
        .collect();
    DigitalMap::new(big.image().clone(), small.image().clone(), pairs)
}

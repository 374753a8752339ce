//! From-scratch recomputation of every predicate by direct set
//! comprehension over raw coordinate vectors. Deliberately shares no
//! code with the morphism/covering checkers; used only to cross-check
//! them over enumerated instances.

use crate::morphism::DigitalMap;

type Pt = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveOutcomes {
    pub continuous: bool,
    pub wl_surjection: bool,
    pub local_iso: bool,
    pub pseudo_original: bool,
    pub pseudo_revised: bool,
    pub covering: bool,
}

struct Raw {
    src: Vec<Pt>,
    tgt: Vec<Pt>,
    pairs: Vec<(Pt, Pt)>,
    ts: u32,
    tt: u32,
}

fn adj(a: &[i64], b: &[i64], t: u32) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut nz = 0;
    for i in 0..a.len() {
        let d = a[i] - b[i];
        if !(-1..=1).contains(&d) {
            return false;
        }
        if d != 0 {
            nz += 1;
        }
    }
    nz >= 1 && nz <= t
}

impl Raw {
    fn value(&self, x: &[i64]) -> Pt {
        for (a, b) in &self.pairs {
            if a.as_slice() == x {
                return b.clone();
            }
        }
        unreachable!("total map")
    }

    fn nb_src(&self, x: &[i64]) -> Vec<Pt> {
        self.src
            .iter()
            .filter(|p| p.as_slice() == x || adj(p, x, self.ts))
            .cloned()
            .collect()
    }

    fn nb_tgt(&self, y: &[i64]) -> Vec<Pt> {
        self.tgt
            .iter()
            .filter(|q| q.as_slice() == y || adj(q, y, self.tt))
            .cloned()
            .collect()
    }

    fn surjective(&self) -> bool {
        self.tgt
            .iter()
            .all(|y| self.pairs.iter().any(|(_, b)| b == y))
    }

    fn continuous(&self) -> bool {
        self.src.iter().all(|x| {
            let fx = self.value(x);
            self.nb_src(x).iter().all(|x2| {
                let fx2 = self.value(x2);
                fx2 == fx || adj(&fx2, &fx, self.tt)
            })
        })
    }

    // The restriction of the map to `dom` is an isomorphism onto its
    // image: injective, and adjacency holds between images exactly when
    // it holds between arguments.
    fn restriction_iso_onto_image(&self, dom: &[Pt]) -> bool {
        for (i, a) in dom.iter().enumerate() {
            for b in dom.iter().skip(i + 1) {
                let fa = self.value(a);
                let fb = self.value(b);
                if fa == fb {
                    return false;
                }
                if adj(a, b, self.ts) != adj(&fa, &fb, self.tt) {
                    return false;
                }
            }
        }
        true
    }

    fn wl_at(&self, x: &[i64]) -> bool {
        self.restriction_iso_onto_image(&self.nb_src(x))
    }

    fn local_iso_at(&self, x: &[i64]) -> bool {
        let dom = self.nb_src(x);
        let image: Vec<Pt> = dom.iter().map(|a| self.value(a)).collect();
        let want = self.nb_tgt(&self.value(x));
        let onto = want.iter().all(|y| image.contains(y)) && image.iter().all(|y| want.contains(y));
        onto && self.restriction_iso_onto_image(&dom)
    }

    fn fiber(&self, b: &[i64]) -> Vec<Pt> {
        self.src
            .iter()
            .filter(|x| self.value(x).as_slice() == b)
            .cloned()
            .collect()
    }

    fn sheet_union(&self, fiber: &[Pt]) -> Vec<Pt> {
        let mut out: Vec<Pt> = Vec::new();
        for e in fiber {
            for p in self.nb_src(e) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    fn preimage_of_nbhd(&self, b: &[i64]) -> Vec<Pt> {
        let nb = self.nb_tgt(b);
        self.src
            .iter()
            .filter(|x| nb.contains(&self.value(x)))
            .cloned()
            .collect()
    }

    fn sheets_disjoint(&self, fiber: &[Pt]) -> bool {
        for (i, e1) in fiber.iter().enumerate() {
            for e2 in fiber.iter().skip(i + 1) {
                let s1 = self.nb_src(e1);
                let s2 = self.nb_src(e2);
                if s1.iter().any(|p| s2.contains(p)) {
                    return false;
                }
            }
        }
        true
    }

    fn union_equals_preimage(&self, b: &[i64]) -> bool {
        let fiber = self.fiber(b);
        let union = self.sheet_union(&fiber);
        let pre = self.preimage_of_nbhd(b);
        union.iter().all(|p| pre.contains(p)) && pre.iter().all(|p| union.contains(p))
    }

    fn union_inside_preimage(&self, b: &[i64]) -> bool {
        let fiber = self.fiber(b);
        let union = self.sheet_union(&fiber);
        let pre = self.preimage_of_nbhd(b);
        union.iter().all(|p| pre.contains(p))
    }

    fn sheets_wl(&self, fiber: &[Pt]) -> bool {
        fiber
            .iter()
            .all(|e| self.restriction_iso_onto_image(&self.nb_src(e)))
    }

    // Definition 5(3): each sheet maps isomorphically onto the whole
    // target neighborhood.
    fn sheets_full_iso(&self, b: &[i64], fiber: &[Pt]) -> bool {
        let want = self.nb_tgt(b);
        fiber.iter().all(|e| {
            let dom = self.nb_src(e);
            let image: Vec<Pt> = dom.iter().map(|a| self.value(a)).collect();
            let onto =
                want.iter().all(|y| image.contains(y)) && image.iter().all(|y| want.contains(y));
            onto && self.restriction_iso_onto_image(&dom)
        })
    }
}

pub fn naive_classify(p: &DigitalMap) -> NaiveOutcomes {
    let raw = Raw {
        src: p
            .source()
            .points()
            .iter()
            .map(|q| q.coords().to_vec())
            .collect(),
        tgt: p
            .target()
            .points()
            .iter()
            .map(|q| q.coords().to_vec())
            .collect(),
        pairs: p
            .pairs()
            .map(|(a, b)| (a.coords().to_vec(), b.coords().to_vec()))
            .collect(),
        ts: p.source().kind().t(),
        tt: p.target().kind().t(),
    };
    let surjective = raw.surjective();
    let continuous = raw.continuous();
    let wl_everywhere = raw.src.iter().all(|x| raw.wl_at(x));
    let local_everywhere = raw.src.iter().all(|x| raw.local_iso_at(x));

    let pseudo_original = surjective
        && raw.tgt.iter().all(|b| {
            let fiber = raw.fiber(b);
            raw.union_equals_preimage(b) && raw.sheets_disjoint(&fiber) && raw.sheets_wl(&fiber)
        });
    let pseudo_revised = surjective
        && raw.tgt.iter().all(|b| {
            let fiber = raw.fiber(b);
            raw.union_inside_preimage(b) && raw.sheets_disjoint(&fiber) && raw.sheets_wl(&fiber)
        });
    let covering = surjective
        && raw.tgt.iter().all(|b| {
            let fiber = raw.fiber(b);
            raw.union_equals_preimage(b)
                && raw.sheets_disjoint(&fiber)
                && raw.sheets_full_iso(b, &fiber)
        });

    NaiveOutcomes {
        continuous,
        wl_surjection: surjective && wl_everywhere,
        local_iso: local_everywhere,
        pseudo_original,
        pseudo_revised,
        covering,
    }
}

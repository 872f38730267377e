//! Quandles derived from a rack: the corresponding quandle on the atoms, and
//! the `ι`-twisted operation `a ▷^ι b = a ▷ ι(b)` with `ι(a) = f_a^{-1}(a)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, atom_partition};
use crate::rack::{is_homomorphism, MagmaTable, RackTable, Translation};
use crate::set::ElementSet;

/// The quandle of atoms `(R̄, *)` with `ā * b̄ = class(a ▷ b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondingQuandle {
    classes: Vec<Vec<usize>>,
    projection: Vec<usize>,
    quandle: RackTable,
}

/// Serialized form: `{"classes", "table", "trivial"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondingQuandleReport {
    pub classes: Vec<Vec<usize>>,
    pub table: Vec<Vec<usize>>,
    pub trivial: bool,
}

impl CorrespondingQuandle {
    /// Class list ordered by least representative.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `projection()[x]` is the class index of `x`.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn quandle(&self) -> &RackTable {
        &self.quandle
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// The class indices met by `set`.
    pub fn project_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.classes.len(), set.iter().map(|x| self.projection[x]))
    }

    pub fn report(&self) -> CorrespondingQuandleReport {
        CorrespondingQuandleReport {
            classes: self.classes.clone(),
            table: self.quandle.rows(),
            trivial: is_trivial_quandle(&self.quandle),
        }
    }
}

/// Builds `(R̄, *)`, checking exhaustively that `*` does not depend on the
/// chosen representatives and that the result is a quandle.
pub fn corresponding_quandle(r: &RackTable) -> Result<CorrespondingQuandle> {
    let (atoms, projection) = atom_partition(r);
    let classes: Vec<Vec<usize>> = atoms.iter().map(ElementSet::to_vec).collect();
    let m = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    for x in 0..r.n() {
        for y in 0..r.n() {
            let (a, b) = (reps[projection[x]], reps[projection[y]]);
            if projection[r.op(x, y)] != projection[r.op(a, b)] {
                return Err(Error::WellDefinednessViolation { a, b, x, y });
            }
        }
    }
    let quandle =
        RackTable::validate(&MagmaTable::from_fn(m, |i, j| projection[r.op(reps[i], reps[j])])?)?;
    if let Some(i) = (0..m).find(|&i| quandle.op(i, i) != i) {
        return Err(Error::NotAQuandle(i));
    }
    debug_assert!(is_homomorphism(&projection, r, &quandle).unwrap_or(false));
    Ok(CorrespondingQuandle {
        classes,
        projection,
        quandle,
    })
}

/// `a ▷ b = b` for all `a, b`.
pub fn is_trivial_quandle(q: &RackTable) -> bool {
    (0..q.n()).all(|a| (0..q.n()).all(|b| q.op(a, b) == b))
}

/// Distributivity of the subrack lattice, decided through the corresponding
/// quandle: the lattice is distributive exactly when that quandle is trivial.
pub fn distributive_via_quandle(r: &RackTable) -> Result<bool> {
    Ok(is_trivial_quandle(corresponding_quandle(r)?.quandle()))
}

/// The automorphism `ι(a) = f_a^{-1}(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IotaMap(Translation);

impl IotaMap {
    pub fn apply(&self, a: usize) -> usize {
        self.0.apply(a)
    }

    pub fn as_translation(&self) -> &Translation {
        &self.0
    }

    /// Bijective and `ι(a ▷ b) = a ▷ ι(b) = ι(a) ▷ ι(b)` for all `a, b`.
    pub fn is_automorphism_of(&self, r: &RackTable) -> bool {
        let i = &self.0;
        (0..r.n()).all(|a| {
            (0..r.n()).all(|b| {
                let lhs = i.apply(r.op(a, b));
                lhs == r.op(a, i.apply(b)) && lhs == r.op(i.apply(a), i.apply(b))
            })
        })
    }
}

pub fn iota(r: &RackTable) -> IotaMap {
    let images = (0..r.n()).map(|a| r.left_div(a, a)).collect();
    let map = IotaMap(Translation::from_images(images).expect("ι is a bijection on a rack"));
    debug_assert!(map.is_automorphism_of(r));
    map
}

/// The quandle `(R, ▷^ι)` with `a ▷^ι b = a ▷ ι(b)`.
pub fn iota_quandle(r: &RackTable) -> Result<RackTable> {
    let i = iota(r);
    let q = RackTable::validate(&MagmaTable::from_fn(r.n(), |a, b| r.op(a, i.apply(b)))?)?;
    match (0..q.n()).find(|&a| q.op(a, a) != a) {
        Some(a) => Err(Error::NotAQuandle(a)),
        None => Ok(q),
    }
}

/// Comparison of the subrack families of `(R, ▷)` and `(R, ▷^ι)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    /// Every `▷`-subrack is a `▷^ι`-subrack.
    pub included: bool,
    /// Some `▷^ι`-subrack is not a `▷`-subrack.
    pub strict: bool,
    pub rack_subracks: usize,
    pub iota_subracks: usize,
    /// `▷^ι`-subracks that are not `▷`-subracks, in canonical order.
    pub strict_witnesses: Vec<Vec<usize>>,
    /// `▷`-subracks that fail to be `▷^ι`-subracks; nonempty only on a broken rack.
    pub missing: Vec<Vec<usize>>,
}

pub fn subrack_inclusion_report(r: &RackTable, cap: usize) -> Result<InclusionReport> {
    let q = iota_quandle(r)?;
    let lr = lattice::enumerate_subracks(r, cap)?;
    let lq = lattice::enumerate_subracks(&q, cap)?;
    let missing: Vec<Vec<usize>> = lr
        .sets()
        .iter()
        .filter(|s| lq.index_of(s).is_none())
        .map(ElementSet::to_vec)
        .collect();
    let strict_witnesses: Vec<Vec<usize>> = lq
        .sets()
        .iter()
        .filter(|s| lr.index_of(s).is_none())
        .map(ElementSet::to_vec)
        .collect();
    Ok(InclusionReport {
        included: missing.is_empty(),
        strict: !strict_witnesses.is_empty(),
        rack_subracks: lr.len(),
        iota_subracks: lq.len(),
        strict_witnesses,
        missing,
    })
}

/// Outcome of comparing the subrack lattices of a rack and its corresponding quandle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub isomorphic: bool,
    pub rack_subracks: usize,
    pub quandle_subracks: usize,
}

/// Checks that `Q ↦ Q̄` is a bijection between the enumerated lattices of `r`
/// and of its corresponding quandle, preserving and reflecting inclusion.
pub fn lattice_isomorphism_check(r: &RackTable, cap: usize) -> Result<IsomorphismReport> {
    let cq = corresponding_quandle(r)?;
    let lr = lattice::enumerate_subracks(r, cap)?;
    let lq = lattice::enumerate_subracks(cq.quandle(), cap)?;
    let mut hit = vec![false; lq.len()];
    let mut image = Vec::with_capacity(lr.len());
    let mut isomorphic = lr.len() == lq.len();
    for s in lr.sets() {
        match lq.index_of(&cq.project_set(s)) {
            Some(j) if !hit[j] => {
                hit[j] = true;
                image.push(j);
            }
            _ => {
                isomorphic = false;
                break;
            }
        }
    }
    if isomorphic {
        let (rs, qs) = (lr.sets(), lq.sets());
        isomorphic = (0..rs.len()).all(|i| {
            (0..rs.len()).all(|k| rs[i].is_subset(&rs[k]) == qs[image[i]].is_subset(&qs[image[k]]))
        });
    }
    Ok(IsomorphismReport {
        isomorphic,
        rack_subracks: lr.len(),
        quandle_subracks: lq.len(),
    })
}

//! Oriented knot diagrams and their quandle colorings.
//!
//! A crossing is stored as `(sign, over, under_in, under_out)`. A coloring
//! assigns a quandle element to every arc so that at each crossing
//! `color(under_out) = f_x^{sign}(color(under_in))` with `x = color(over)`:
//! `▷` at positive crossings, `▷^{-1}` at negative ones.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rack::RackTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        })
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(serde::de::Error::custom(format!(
                "crossing sign must be 1 or -1, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

#[derive(Debug, Deserialize)]
struct RawDiagram {
    arcs: usize,
    crossings: Vec<Crossing>,
}

/// A validated single-component diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotDiagram {
    arcs: usize,
    crossings: Vec<Crossing>,
}

impl KnotDiagram {
    /// Validates arc ranges and the knot arc pattern: every arc ends at exactly
    /// one under-pass and starts at exactly one, and following under-passes
    /// visits every arc in a single cycle.
    pub fn new(arcs: usize, crossings: Vec<Crossing>) -> Result<Self> {
        let violation = |arc: usize, reason: &str| Error::ArcConsistencyViolation {
            arc,
            reason: reason.to_string(),
        };
        if crossings.is_empty() {
            return if arcs == 1 {
                Ok(Self { arcs, crossings })
            } else {
                Err(Error::MalformedInput(format!(
                    "a diagram without crossings has one arc, not {arcs}"
                )))
            };
        }
        if arcs != crossings.len() {
            return Err(Error::MalformedInput(format!(
                "{arcs} arcs but {} crossings",
                crossings.len()
            )));
        }
        for c in &crossings {
            for arc in [c.over, c.under_in, c.under_out] {
                if arc >= arcs {
                    return Err(violation(arc, "index out of range"));
                }
            }
        }
        // next[a] is the arc that continues `a` through its terminal under-pass.
        let mut next = vec![usize::MAX; arcs];
        let mut starts = vec![false; arcs];
        for c in &crossings {
            if next[c.under_in] != usize::MAX {
                return Err(violation(c.under_in, "ends at more than one under-pass"));
            }
            next[c.under_in] = c.under_out;
            if std::mem::replace(&mut starts[c.under_out], true) {
                return Err(violation(c.under_out, "starts at more than one under-pass"));
            }
        }
        let mut arc = 0;
        for step in 1..=arcs {
            arc = next[arc];
            if arc == 0 && step < arcs {
                return Err(violation(0, "diagram has more than one component"));
            }
        }
        Ok(Self { arcs, crossings })
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Same diagram with every crossing sign reversed and under-strand
    /// direction swapped.
    pub fn reversed_constraints(&self) -> Self {
        Self {
            arcs: self.arcs,
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign.flip(),
                    over: c.over,
                    under_in: c.under_out,
                    under_out: c.under_in,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::json!({
            "arcs": self.arcs,
            "crossings": self.crossings,
        }))
        .expect("diagram serializes")
    }
}

/// Parses `{"arcs": int, "crossings": [{"sign", "over", "under_in", "under_out"}]}`.
pub fn parse_diagram(text: &str) -> Result<KnotDiagram> {
    let raw: RawDiagram = serde_json::from_str(text)?;
    KnotDiagram::new(raw.arcs, raw.crossings)
}

fn require_quandle(q: &RackTable) -> Result<()> {
    match (0..q.n()).find(|&a| q.op(a, a) != a) {
        Some(a) => Err(Error::NotAQuandle(a)),
        None => Ok(()),
    }
}

fn step(q: &RackTable, sign: Sign, x: usize, y: usize) -> usize {
    match sign {
        Sign::Positive => q.op(x, y),
        Sign::Negative => q.left_div(x, y),
    }
}

fn step_back(q: &RackTable, sign: Sign, x: usize, y: usize) -> usize {
    step(q, sign.flip(), x, y)
}

fn satisfies(d: &KnotDiagram, q: &RackTable, colors: &[usize]) -> bool {
    d.crossings
        .iter()
        .all(|c| colors[c.under_out] == step(q, c.sign, colors[c.over], colors[c.under_in]))
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    d: &'a KnotDiagram,
    q: &'a RackTable,
    /// crossings touching each arc
    incident: Vec<Vec<usize>>,
    colors: Vec<usize>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(d: &'a KnotDiagram, q: &'a RackTable) -> Self {
        let mut incident = vec![Vec::new(); d.arcs];
        for (i, c) in d.crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if !incident[arc].contains(&i) {
                    incident[arc].push(i);
                }
            }
        }
        Self {
            d,
            q,
            incident,
            colors: vec![UNSET; d.arcs],
            trail: Vec::new(),
        }
    }

    fn assign(&mut self, arc: usize, color: usize, pending: &mut Vec<usize>) {
        self.colors[arc] = color;
        self.trail.push(arc);
        pending.push(arc);
    }

    /// Colors `arc` and propagates forced colors; false on a conflict.
    fn set_and_propagate(&mut self, arc: usize, color: usize) -> bool {
        let mut pending = Vec::new();
        self.assign(arc, color, &mut pending);
        while let Some(a) = pending.pop() {
            for k in 0..self.incident[a].len() {
                let c = self.d.crossings[self.incident[a][k]];
                let (x, i, o) = (
                    self.colors[c.over],
                    self.colors[c.under_in],
                    self.colors[c.under_out],
                );
                if x == UNSET {
                    continue;
                }
                match (i == UNSET, o == UNSET) {
                    (false, false) => {
                        if step(self.q, c.sign, x, i) != o {
                            return false;
                        }
                    }
                    (false, true) => {
                        let v = step(self.q, c.sign, x, i);
                        self.assign(c.under_out, v, &mut pending);
                    }
                    (true, false) => {
                        let v = step_back(self.q, c.sign, x, o);
                        self.assign(c.under_in, v, &mut pending);
                    }
                    (true, true) => {}
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let arc = self.trail.pop().unwrap();
            self.colors[arc] = UNSET;
        }
    }

    fn count(&mut self) -> u64 {
        let Some(arc) = self.colors.iter().position(|&c| c == UNSET) else {
            debug_assert!(satisfies(self.d, self.q, &self.colors));
            return 1;
        };
        let mut total = 0;
        for color in 0..self.q.n() {
            let mark = self.trail.len();
            if self.set_and_propagate(arc, color) {
                total += self.count();
            }
            self.undo_to(mark);
        }
        total
    }
}

/// Number of colorings of `d` by the quandle `q`.
///
/// Backtracks over arc colors in index order, starting from arc 0; each
/// assignment propagates through every crossing whose over-arc and one
/// under-arc are known.
pub fn count_colorings(d: &KnotDiagram, q: &RackTable) -> Result<u64> {
    require_quandle(q)?;
    Ok(Search::new(d, q).count())
}

/// Reference count: tries all `|q|^arcs` assignments.
pub fn count_colorings_exhaustive(d: &KnotDiagram, q: &RackTable) -> Result<u64> {
    require_quandle(q)?;
    let m = q.n();
    let mut colors = vec![0; d.arcs];
    let mut total = 0;
    loop {
        if satisfies(d, q, &colors) {
            total += 1;
        }
        let mut i = 0;
        loop {
            if i == d.arcs {
                return Ok(total);
            }
            colors[i] += 1;
            if colors[i] < m {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Serialized coloring summary `{"count", "constant", "nontrivial"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub count: u64,
    pub constant: u64,
    pub nontrivial: bool,
}

pub fn coloring_report(d: &KnotDiagram, q: &RackTable) -> Result<ColoringReport> {
    let count = count_colorings(d, q)?;
    let constant = q.n() as u64;
    Ok(ColoringReport {
        count,
        constant,
        nontrivial: count > constant,
    })
}

/// Whether some coloring uses at least two colors. Constant colorings always
/// exist for a quandle, so this is `count > |q|`.
pub fn has_nontrivial_coloring(d: &KnotDiagram, q: &RackTable) -> Result<bool> {
    Ok(coloring_report(d, q)?.nontrivial)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Distinguished,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Distinction {
    pub verdict: Verdict,
    pub count1: u64,
    pub count2: u64,
}

/// Different coloring counts prove the diagrams are different knots; equal
/// counts prove nothing.
pub fn distinguish(d1: &KnotDiagram, d2: &KnotDiagram, q: &RackTable) -> Result<Distinction> {
    let count1 = count_colorings(d1, q)?;
    let count2 = count_colorings(d2, q)?;
    Ok(Distinction {
        verdict: if count1 != count2 {
            Verdict::Distinguished
        } else {
            Verdict::Inconclusive
        },
        count1,
        count2,
    })
}

/// Built-in diagrams.
pub mod fixtures {
    use super::{parse_diagram, KnotDiagram};

    pub const UNKNOT: &str = include_str!("../fixtures/unknot.json");
    pub const TREFOIL: &str = include_str!("../fixtures/trefoil.json");
    /// Trefoil with a Reidemeister I kink on arc 0.
    pub const TREFOIL_R1: &str = include_str!("../fixtures/trefoil_r1.json");
    /// Trefoil with arc 1 pushed under arc 2 by a Reidemeister II move.
    pub const TREFOIL_R2: &str = include_str!("../fixtures/trefoil_r2.json");
    pub const KNOT_5_1: &str = include_str!("../fixtures/knot_5_1.json");
    pub const KNOT_5_2: &str = include_str!("../fixtures/knot_5_2.json");

    fn load(text: &str) -> KnotDiagram {
        parse_diagram(text).expect("bundled fixture is valid")
    }

    pub fn unknot() -> KnotDiagram {
        load(UNKNOT)
    }
    pub fn trefoil() -> KnotDiagram {
        load(TREFOIL)
    }
    pub fn trefoil_r1() -> KnotDiagram {
        load(TREFOIL_R1)
    }
    pub fn trefoil_r2() -> KnotDiagram {
        load(TREFOIL_R2)
    }
    pub fn knot_5_1() -> KnotDiagram {
        load(KNOT_5_1)
    }
    pub fn knot_5_2() -> KnotDiagram {
        load(KNOT_5_2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_fixtures() {
        let u = parse_diagram(r#"{"arcs":1,"crossings":[]}"#).unwrap();
        assert_eq!(u.arc_count(), 1);
        assert_eq!(fixtures::trefoil().crossings().len(), 3);
        assert_eq!(fixtures::knot_5_1().arc_count(), 5);
        assert_eq!(fixtures::knot_5_2().arc_count(), 5);
        assert_eq!(fixtures::trefoil_r1().arc_count(), 4);
        assert_eq!(fixtures::trefoil_r2().arc_count(), 5);
    }

    #[test]
    fn rejects_inconsistent_arcs() {
        let twice_out = r#"{"arcs":3,"crossings":[
            {"sign":1,"over":0,"under_in":1,"under_out":2},
            {"sign":1,"over":1,"under_in":2,"under_out":2},
            {"sign":1,"over":2,"under_in":0,"under_out":1}]}"#;
        assert!(matches!(
            parse_diagram(twice_out),
            Err(Error::ArcConsistencyViolation { arc: 2, .. })
        ));
        let out_of_range = r#"{"arcs":1,"crossings":[{"sign":1,"over":3,"under_in":0,"under_out":0}]}"#;
        assert!(matches!(
            parse_diagram(out_of_range),
            Err(Error::ArcConsistencyViolation { arc: 3, .. })
        ));
        // Two separate components (a two-crossing link pattern).
        let link = r#"{"arcs":2,"crossings":[
            {"sign":1,"over":1,"under_in":0,"under_out":0},
            {"sign":1,"over":0,"under_in":1,"under_out":1}]}"#;
        assert!(matches!(
            parse_diagram(link),
            Err(Error::ArcConsistencyViolation { .. })
        ));
        assert!(matches!(parse_diagram("{"), Err(Error::MalformedInput(_))));
        assert!(matches!(
            parse_diagram(r#"{"arcs":1,"crossings":[{"sign":2,"over":0,"under_in":0,"under_out":0}]}"#),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            parse_diagram(r#"{"arcs":2,"crossings":[]}"#),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn trefoil_dihedral_three() {
        let d3 = families::dihedral(3).unwrap();
        let t = fixtures::trefoil();
        assert_eq!(count_colorings_exhaustive(&t, &d3).unwrap(), 9);
        assert_eq!(count_colorings(&t, &d3).unwrap(), 9);
        assert_eq!(count_colorings(&fixtures::unknot(), &d3).unwrap(), 3);
    }

    #[test]
    fn trivial_quandle_only_constant() {
        let t = families::trivial(4).unwrap();
        for d in [fixtures::trefoil(), fixtures::knot_5_1(), fixtures::knot_5_2()] {
            assert_eq!(count_colorings(&d, &t).unwrap(), 4);
        }
    }

    #[test]
    fn five_two_dihedral_five_is_constant_only() {
        let d5 = families::dihedral(5).unwrap();
        let k = fixtures::knot_5_2();
        assert_eq!(count_colorings_exhaustive(&k, &d5).unwrap(), 5);
        assert_eq!(count_colorings(&k, &d5).unwrap(), 5);
        assert!(!has_nontrivial_coloring(&k, &d5).unwrap());
        assert!(has_nontrivial_coloring(&fixtures::knot_5_1(), &d5).unwrap());
    }

    #[test]
    fn non_quandles_are_rejected() {
        let r = families::parity_shift(4).unwrap();
        assert!(matches!(
            count_colorings(&fixtures::trefoil(), &r),
            Err(Error::NotAQuandle(1))
        ));
    }

    #[test]
    fn distinguish_verdicts() {
        let d5 = families::dihedral(5).unwrap();
        let v = distinguish(&fixtures::knot_5_1(), &fixtures::knot_5_2(), &d5).unwrap();
        assert_eq!(v.verdict, Verdict::Distinguished);
        let t = fixtures::trefoil();
        let v = distinguish(&t, &t, &d5).unwrap();
        assert_eq!(v.verdict, Verdict::Inconclusive);
        let v = distinguish(&t, &fixtures::trefoil_r1(), &families::dihedral(3).unwrap()).unwrap();
        assert_eq!((v.verdict, v.count1, v.count2), (Verdict::Inconclusive, 9, 9));
        assert_eq!(
            serde_json::to_value(v.verdict).unwrap(),
            serde_json::json!("inconclusive")
        );
    }

    #[test]
    fn reversal_preserves_counts() {
        let q = families::alexander(7, 3).unwrap();
        for d in [fixtures::trefoil(), fixtures::knot_5_1(), fixtures::knot_5_2()] {
            let rev = d.reversed_constraints();
            assert_eq!(count_colorings(&d, &q).unwrap(), count_colorings(&rev, &q).unwrap());
        }
    }

    #[test]
    fn diagram_json_roundtrip() {
        let d = fixtures::knot_5_2();
        assert_eq!(parse_diagram(&d.to_json()).unwrap(), d);
    }
}

//! Validated finite racks and their left translations.
//!
//! A rack is stored as its full operation table on the carrier `0..n`:
//! `table[a][b] = a ▷ b`. Validation checks that every left translation
//! `f_a: b ↦ a ▷ b` is a permutation and that `▷` is left self-distributive.
//! The inverse table `f_a^{-1}(b)` is computed once, at validation time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unvalidated square operation table on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagmaTable {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl MagmaTable {
    /// Checks shape and entry range only.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: a,
                    len: row.len(),
                    n,
                });
            }
            if let Some((b, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::EntryOutOfRange { a, b, value, n });
            }
        }
        Ok(Self { n, table })
    }

    /// Builds the table of `op` on `0..n`; every value is reduced into range
    /// by the caller.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// A permutation of the carrier, used for left translations and their words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Translation(Vec<usize>);

impl Translation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Wraps `images` after checking it is a permutation of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::ParameterViolation(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Self(images))
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Nontrivial cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// A finite rack with a precomputed left-division table.
///
/// Immutable after construction; only [`RackTable::validate`] builds one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RackTable {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    is_quandle: bool,
}

impl RackTable {
    /// Checks row bijectivity, then self-distributivity, exhaustively.
    pub fn validate(m: &MagmaTable) -> Result<Self> {
        let n = m.n;
        let table: Vec<usize> = m.table.iter().flatten().copied().collect();
        let mut inverse = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in 0..n {
                let slot = &mut inverse[a * n + table[a * n + b]];
                if *slot != usize::MAX {
                    return Err(Error::RowNotBijective { a });
                }
                *slot = b;
            }
        }
        let op = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = op(a, b);
                for c in 0..n {
                    if op(a, op(b, c)) != op(ab, op(a, c)) {
                        return Err(Error::NotSelfDistributive { a, b, c });
                    }
                }
            }
        }
        let is_quandle = (0..n).all(|a| op(a, a) == a);
        Ok(Self {
            n,
            table,
            inverse,
            is_quandle,
        })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::validate(&MagmaTable::new(rows)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_quandle(&self) -> bool {
        self.is_quandle
    }

    /// `a ▷ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// `f_a^{-1}(b)`, the unique `c` with `a ▷ c = b`.
    #[inline]
    pub fn left_div(&self, a: usize, b: usize) -> usize {
        self.inverse[a * self.n + b]
    }

    /// `f_a^k(b)` for any integer `k`.
    pub fn translate_pow(&self, a: usize, k: i64, mut b: usize) -> usize {
        for _ in 0..k.unsigned_abs() {
            b = if k >= 0 { self.op(a, b) } else { self.left_div(a, b) };
        }
        b
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn inverse_rows(&self) -> Vec<Vec<usize>> {
        self.inverse.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn magma(&self) -> MagmaTable {
        MagmaTable {
            n: self.n,
            table: self.rows(),
        }
    }

    fn check(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                n: self.n,
            })
        }
    }

    /// The left translation `f_a`.
    pub fn translation(&self, a: usize) -> Result<Translation> {
        self.check(a)?;
        Ok(Translation(
            self.table[a * self.n..(a + 1) * self.n].to_vec(),
        ))
    }

    /// `f_a^{-1}`.
    pub fn inverse_translation(&self, a: usize) -> Result<Translation> {
        self.check(a)?;
        Ok(Translation(
            self.inverse[a * self.n..(a + 1) * self.n].to_vec(),
        ))
    }

    pub fn translations(&self) -> Vec<Translation> {
        (0..self.n)
            .map(|a| Translation(self.table[a * self.n..(a + 1) * self.n].to_vec()))
            .collect()
    }
}

/// Which half of the conjugation identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConjugationForm {
    /// `f_{f_a(b)} = f_a f_b f_a^{-1}`
    Forward,
    /// `f_{f_a^{-1}(b)} = f_a^{-1} f_b f_a`
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjugationViolation {
    pub a: usize,
    pub b: usize,
    pub form: ConjugationForm,
}

/// Checks `f_{f_a(b)} = f_a f_b f_a^{-1}` and `f_{f_a^{-1}(b)} = f_a^{-1} f_b f_a`
/// for every pair. Any violation means the input was not a rack.
pub fn conjugation_identity_check(r: &RackTable) -> Option<ConjugationViolation> {
    let fs = r.translations();
    let inv: Vec<Translation> = fs.iter().map(Translation::inverse).collect();
    for a in 0..r.n() {
        for b in 0..r.n() {
            let forward = fs[a].compose(&fs[b]).compose(&inv[a]);
            if fs[r.op(a, b)] != forward {
                return Some(ConjugationViolation {
                    a,
                    b,
                    form: ConjugationForm::Forward,
                });
            }
            let backward = inv[a].compose(&fs[b]).compose(&fs[a]);
            if fs[r.left_div(a, b)] != backward {
                return Some(ConjugationViolation {
                    a,
                    b,
                    form: ConjugationForm::Backward,
                });
            }
        }
    }
    None
}

/// Whether `map` satisfies `φ(a ▷ b) = φ(a) ▷' φ(b)` for all `a, b`.
pub fn is_homomorphism(map: &[usize], from: &RackTable, to: &RackTable) -> Result<bool> {
    if map.len() != from.n() {
        return Err(Error::MalformedInput(format!(
            "map has {} entries for a carrier of size {}",
            map.len(),
            from.n()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= to.n()) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            n: to.n(),
        });
    }
    Ok((0..from.n())
        .all(|a| (0..from.n()).all(|b| map[from.op(a, b)] == to.op(map[a], map[b]))))
}

//! Atoms, orbits, generated subracks and the lattice of all subracks.
//!
//! Subracks are subsets closed under `▷` and left division. The empty set is
//! a subrack and serves as the lattice bottom. Meets are intersections; the
//! join of two subracks is the subrack generated by their union.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rack::RackTable;
use crate::set::ElementSet;

pub const DEFAULT_CAP: usize = 100_000;

/// A subset of a rack's carrier closed under `▷` and left division.
#[derive(Debug, Clone)]
pub struct Subrack<'r> {
    rack: &'r RackTable,
    members: ElementSet,
}

impl PartialEq for Subrack<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.rack == other.rack && self.members == other.members
    }
}

impl Eq for Subrack<'_> {}

impl<'r> Subrack<'r> {
    /// Wraps `members` after checking closure.
    pub fn new(rack: &'r RackTable, members: ElementSet) -> Option<Self> {
        is_subrack(rack, &members).then_some(Self { rack, members })
    }

    pub fn rack(&self) -> &'r RackTable {
        self.rack
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    fn same_parent(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.rack, other.rack) || self.rack == other.rack {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Least subrack containing both.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        Ok(Self {
            rack: self.rack,
            members: generate(self.rack, &self.members.union(&other.members)),
        })
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        Ok(Self {
            rack: self.rack,
            members: self.members.intersection(&other.members),
        })
    }
}

/// Closure test: `a ▷ b` and `f_a^{-1}(b)` stay inside for all members `a, b`.
pub fn is_subrack(r: &RackTable, set: &ElementSet) -> bool {
    set.universe() == r.n()
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(r.op(a, b)) && set.contains(r.left_div(a, b))))
}

fn check_element(r: &RackTable, a: usize) -> Result<()> {
    if a < r.n() {
        Ok(())
    } else {
        Err(Error::ElementOutOfRange { element: a, n: r.n() })
    }
}

/// `{f_a^k(a) : k ≥ 0}`, iterating until the orbit closes. On a finite carrier
/// this is the whole cyclic orbit of `a` under `f_a`, the minimal subrack
/// containing `a`.
pub fn atom_set(r: &RackTable, a: usize) -> ElementSet {
    let mut set = ElementSet::empty(r.n());
    let mut x = a;
    while set.insert(x) {
        x = r.op(a, x);
    }
    set
}

pub fn atom_of(r: &RackTable, a: usize) -> Result<Subrack<'_>> {
    check_element(r, a)?;
    Ok(Subrack {
        rack: r,
        members: atom_set(r, a),
    })
}

/// `atom_index[x]` is the index of the atom containing `x` in `atoms(r)`.
pub(crate) fn atom_partition(r: &RackTable) -> (Vec<ElementSet>, Vec<usize>) {
    let mut atoms = Vec::new();
    let mut index = vec![usize::MAX; r.n()];
    for a in 0..r.n() {
        if index[a] != usize::MAX {
            continue;
        }
        let atom = atom_set(r, a);
        for x in atom.iter() {
            index[x] = atoms.len();
        }
        atoms.push(atom);
    }
    (atoms, index)
}

/// Distinct atoms, ordered by least element. They partition the carrier.
pub fn atoms(r: &RackTable) -> Vec<Subrack<'_>> {
    atom_partition(r)
        .0
        .into_iter()
        .map(|members| Subrack { rack: r, members })
        .collect()
}

/// Orbits of the inner group: components of the graph joining `b` and `a ▷ b`.
pub fn orbits(r: &RackTable) -> Vec<Subrack<'_>> {
    let n = r.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = ElementSet::empty(n);
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            orbit.insert(x);
            for a in 0..n {
                for y in [r.op(a, x), r.left_div(a, x)] {
                    if !std::mem::replace(&mut seen[y], true) {
                        queue.push_back(y);
                    }
                }
            }
        }
        debug_assert!(is_subrack(r, &orbit));
        out.push(Subrack {
            rack: r,
            members: orbit,
        });
    }
    out
}

/// The subrack generated by `seeds`: the orbit of `seeds` under the group
/// generated by `{f_s : s ∈ seeds}`.
pub fn generate(r: &RackTable, seeds: &ElementSet) -> ElementSet {
    let gens = seeds.to_vec();
    let mut out = seeds.clone();
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            for y in [r.op(g, x), r.left_div(g, x)] {
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

pub fn generate_subrack<'r>(r: &'r RackTable, seeds: &[usize]) -> Result<Subrack<'r>> {
    for &s in seeds {
        check_element(r, s)?;
    }
    Ok(Subrack {
        rack: r,
        members: generate(r, &ElementSet::from_elements(r.n(), seeds.iter().copied())),
    })
}

/// Every subrack of a rack, in canonical order (size, then lexicographic).
#[derive(Debug, Clone)]
pub struct SubrackLattice<'r> {
    rack: &'r RackTable,
    subracks: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    atoms: Vec<usize>,
}

/// Enumerates all subracks by closing `∅` under one-atom extensions:
/// each known subrack `Q` spawns `⟪Q ∪ A⟫` for every atom `A ⊄ Q`.
///
/// Every nonempty subrack `S` is reached: starting from a known `Q ⊊ S`, adding
/// any atom of `S \ Q` generates a subrack still inside `S`.
pub fn enumerate_subracks(r: &RackTable, cap: usize) -> Result<SubrackLattice<'_>> {
    let (atom_sets, _) = atom_partition(r);
    let bottom = ElementSet::empty(r.n());
    let mut known: HashSet<ElementSet> = HashSet::from([bottom.clone()]);
    let mut queue = VecDeque::from([bottom]);
    while let Some(q) = queue.pop_front() {
        for atom in &atom_sets {
            if atom.is_subset(&q) {
                continue;
            }
            let next = generate(r, &q.union(atom));
            if !known.contains(&next) {
                if known.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                known.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(SubrackLattice::from_sets(r, known.into_iter().collect()))
}

/// Reference enumeration: filters all `2^n` subsets with [`is_subrack`].
pub fn enumerate_subracks_exhaustive(r: &RackTable) -> SubrackLattice<'_> {
    let n = r.n();
    assert!(n < 31, "exhaustive enumeration is limited to small carriers");
    let sets = (0u64..1 << n)
        .map(|mask| ElementSet::from_elements(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
        .filter(|s| is_subrack(r, s))
        .collect();
    SubrackLattice::from_sets(r, sets)
}

/// Outcome of the atomicity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomicityReport {
    pub atomic: bool,
    /// Lattice indices of subracks that are not the union of the atoms below them.
    pub violations: Vec<usize>,
    /// Whether the lattice-theoretic atoms (minimal nonempty subracks) are
    /// exactly the atoms `⟪a⟫`.
    pub atoms_minimal: bool,
}

/// Outcome of the distributivity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributivityReport {
    pub distributive: bool,
    /// Lattice indices `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub witness: Option<[usize; 3]>,
}

/// Lattice report as serialized for external consumers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub atoms: Vec<Vec<usize>>,
    pub subracks: Vec<Vec<usize>>,
    pub atomic: bool,
    pub distributive: bool,
    pub witness: Option<[Vec<usize>; 3]>,
}

impl<'r> SubrackLattice<'r> {
    fn from_sets(rack: &'r RackTable, mut sets: Vec<ElementSet>) -> Self {
        sets.sort_by_cached_key(ElementSet::canonical_key);
        let index: HashMap<ElementSet, usize> =
            sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let atoms = atom_partition(rack)
            .0
            .iter()
            .filter_map(|a| index.get(a).copied())
            .collect();
        Self {
            rack,
            subracks: sets,
            index,
            atoms,
        }
    }

    pub fn rack(&self) -> &'r RackTable {
        self.rack
    }

    pub fn len(&self) -> usize {
        self.subracks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subracks.is_empty()
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.subracks
    }

    pub fn get(&self, i: usize) -> Subrack<'r> {
        Subrack {
            rack: self.rack,
            members: self.subracks[i].clone(),
        }
    }

    pub fn subracks(&self) -> impl Iterator<Item = Subrack<'r>> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Indices of the atoms `⟪a⟫`, ordered by least element.
    pub fn atom_indices(&self) -> &[usize] {
        &self.atoms
    }

    pub fn meet_index(&self, a: usize, b: usize) -> usize {
        let m = self.subracks[a].intersection(&self.subracks[b]);
        self.index[&m]
    }

    pub fn join_index(&self, a: usize, b: usize) -> usize {
        let j = generate(self.rack, &self.subracks[a].union(&self.subracks[b]));
        self.index[&j]
    }

    /// Checks that every subrack equals the union of the atoms of its elements,
    /// and that the minimal nonempty subracks are exactly the atoms.
    pub fn is_atomic(&self) -> AtomicityReport {
        let (atom_sets, atom_index) = atom_partition(self.rack);
        let violations: Vec<usize> = self
            .subracks
            .iter()
            .enumerate()
            .filter(|(_, q)| {
                let cover = q.iter().fold(ElementSet::empty(self.rack.n()), |acc, x| {
                    acc.union(&atom_sets[atom_index[x]])
                });
                &cover != *q
            })
            .map(|(i, _)| i)
            .collect();
        let minimal: Vec<&ElementSet> = self
            .subracks
            .iter()
            .filter(|q| !q.is_empty())
            .filter(|q| {
                !self
                    .subracks
                    .iter()
                    .any(|p| !p.is_empty() && p != *q && p.is_subset(q))
            })
            .collect();
        let atoms_minimal = minimal.len() == atom_sets.len()
            && atom_sets.iter().all(|a| minimal.contains(&a));
        AtomicityReport {
            atomic: violations.is_empty() && atoms_minimal,
            violations,
            atoms_minimal,
        }
    }

    /// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples,
    /// with `b ≤ c` by index since the identity is symmetric in `b, c`.
    pub fn is_distributive(&self) -> DistributivityReport {
        let n = self.len();
        let join: Vec<u32> = (0..n)
            .flat_map(|b| (0..n).map(move |c| (b, c)))
            .map(|(b, c)| {
                if c < b {
                    0
                } else {
                    self.join_index(b, c) as u32
                }
            })
            .collect();
        let join_at = |b: usize, c: usize| {
            let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
            join[lo * n + hi] as usize
        };
        let mut meet_a = vec![0usize; n];
        for a in 0..n {
            for (x, slot) in meet_a.iter_mut().enumerate() {
                *slot = self.meet_index(a, x);
            }
            for b in 0..n {
                let ab = meet_a[b];
                for c in b..n {
                    if meet_a[join_at(b, c)] != join_at(ab, meet_a[c]) {
                        return DistributivityReport {
                            distributive: false,
                            witness: Some([a, b, c]),
                        };
                    }
                }
            }
        }
        DistributivityReport {
            distributive: true,
            witness: None,
        }
    }

    pub fn report(&self) -> LatticeReport {
        let dist = self.is_distributive();
        LatticeReport {
            atoms: self.atoms.iter().map(|&i| self.subracks[i].to_vec()).collect(),
            subracks: self.subracks.iter().map(ElementSet::to_vec).collect(),
            atomic: self.is_atomic().atomic,
            distributive: dist.distributive,
            witness: dist
                .witness
                .map(|w| w.map(|i| self.subracks[i].to_vec())),
        }
    }
}

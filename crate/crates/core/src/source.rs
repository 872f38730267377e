//! JSON rack inputs: either an explicit table `{"n", "table"}` or a family
//! spec such as `{"family": "st_rack", "n": 20, "s": 2, "t": 9}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::families;
use crate::rack::RackTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    Trivial { n: usize },
    Permutation { perm: Vec<usize> },
    Dihedral { n: usize },
    Core { group_table: Vec<Vec<usize>>, inverse: Vec<usize> },
    Alexander { n: usize, t: i64 },
    StRack { n: usize, s: i64, t: i64 },
    ParityShift { n: usize },
    PartitionRack { blocks: Vec<Vec<usize>>, bijections: Vec<Vec<usize>> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<RackTable> {
        match self {
            FamilySpec::Trivial { n } => families::trivial(*n),
            FamilySpec::Permutation { perm } => families::permutation_rack(perm),
            FamilySpec::Dihedral { n } => families::dihedral(*n),
            FamilySpec::Core {
                group_table,
                inverse,
            } => families::core(group_table, inverse),
            FamilySpec::Alexander { n, t } => families::alexander(*n, *t),
            FamilySpec::StRack { n, s, t } => families::st_rack(*n, *s, *t),
            FamilySpec::ParityShift { n } => families::parity_shift(*n),
            FamilySpec::PartitionRack { blocks, bijections } => {
                families::partition_rack(blocks, bijections)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

impl TableSpec {
    pub fn of(r: &RackTable) -> Self {
        Self {
            n: r.n(),
            table: r.rows(),
        }
    }

    pub fn build(&self) -> Result<RackTable> {
        if self.table.len() != self.n {
            return Err(Error::MalformedInput(format!(
                "declared n = {} but the table has {} rows",
                self.n,
                self.table.len()
            )));
        }
        RackTable::from_rows(self.table.clone())
    }
}

/// Either input form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RackSource {
    Table(TableSpec),
    Family(FamilySpec),
}

impl RackSource {
    pub fn from_value(v: Value) -> Result<Self> {
        if v.get("family").is_some() {
            Ok(RackSource::Family(serde_json::from_value(v)?))
        } else {
            Ok(RackSource::Table(serde_json::from_value(v)?))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_value(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<RackTable> {
        match self {
            RackSource::Table(t) => t.build(),
            RackSource::Family(f) => f.build(),
        }
    }
}

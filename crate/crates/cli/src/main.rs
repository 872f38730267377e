//! `rack-lab`: batch front end for the racklab library.
//!
//! Every verb prints one JSON document on stdout (or a plain-text rendering
//! with `--pretty`). Exit status is 0 on success, 1 when an input fails
//! validation or a cross-check disagrees, and 2 on usage errors.

mod render;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};

use racklab::knot::{self, KnotDiagram};
use racklab::lattice::{self, DEFAULT_CAP};
use racklab::quandle;
use racklab::source::{FamilySpec, RackSource, TableSpec};
use racklab::st::{self, IntPoly, StAnalysis};
use racklab::{families, RackTable, STParams};

#[derive(Parser)]
#[command(name = "rack-lab", version, about = "Finite racks, subrack lattices and quandle colorings")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the rack axioms and report whether the table is a quandle.
    Validate(RackArgs),
    /// List the atoms ⟪a⟫.
    Atoms(RackArgs),
    /// List the orbits of the inner group.
    Orbits(RackArgs),
    /// Enumerate the subrack lattice and test atomicity and distributivity.
    Lattice {
        #[command(flatten)]
        rack: RackArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Compare against the exhaustive subset filter.
        #[arg(long)]
        oracle: bool,
    },
    /// Build the corresponding quandle on the atoms.
    Quandle(RackArgs),
    /// Report ι, the ▷^ι quandle and how the two subrack families compare.
    Iota {
        #[command(flatten)]
        rack: RackArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Closed-form analysis of an (s,t)-rack.
    StAnalyze {
        #[command(flatten)]
        rack: RackArgs,
        /// Also run randomized polynomial-identity trials from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1000, requires = "seed")]
        trials: usize,
    },
    /// Count colorings of a knot diagram by a quandle.
    Color {
        #[command(flatten)]
        rack: RackArgs,
        #[arg(long)]
        diagram: PathBuf,
        /// Compare against brute-force enumeration of all colorings.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare coloring counts of two diagrams.
    Distinguish {
        #[command(flatten)]
        rack: RackArgs,
        #[arg(long)]
        d1: PathBuf,
        #[arg(long)]
        d2: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args)]
struct RackArgs {
    /// Rack file: `{"n", "table"}` or a family spec.
    #[arg(long, visible_alias = "quandle", value_name = "FILE", conflicts_with = "family")]
    rack: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    /// Comma-separated images for the permutation family.
    #[arg(long, value_delimiter = ',')]
    perm: Option<Vec<usize>>,
    /// Analyse the corresponding quandle instead of the rack itself.
    #[arg(long)]
    corresponding: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Trivial,
    Permutation,
    Dihedral,
    /// Core of the cyclic group Z_n.
    Core,
    Alexander,
    #[value(name = "st_rack", alias = "st-rack")]
    StRack,
    #[value(name = "parity_shift", alias = "parity-shift")]
    ParityShift,
}

enum Failure {
    Usage(String),
    Invalid(String),
    /// Validation failure that still produces a report on stdout.
    Rejected(Value, String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Rejected(_, m) => f.write_str(m),
        }
    }
}

impl From<racklab::Error> for Failure {
    fn from(e: racklab::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

/// A resolved rack plus its echo for the output.
struct Loaded {
    echo: Value,
    rack: RackTable,
    classes: Option<Vec<Vec<usize>>>,
}

impl Loaded {
    fn wrap(&self, report: impl serde::Serialize) -> Value {
        let mut out = match serde_json::to_value(report).expect("reports serialize") {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        out.insert("rack".into(), self.echo.clone());
        if let Some(c) = &self.classes {
            out.insert("corresponding_classes".into(), json!(c));
        }
        Value::Object(out)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("family {family} needs --{flag}")))
}

impl RackArgs {
    fn family_spec(&self, family: Family) -> Result<FamilySpec, Failure> {
        let allowed: &[&str] = match family {
            Family::Permutation => &["perm"],
            Family::Alexander => &["n", "t"],
            Family::StRack => &["n", "s", "t"],
            _ => &["n"],
        };
        let given = [
            ("n", self.n.is_some()),
            ("s", self.s.is_some()),
            ("t", self.t.is_some()),
            ("perm", self.perm.is_some()),
        ];
        if let Some((flag, _)) = given.iter().find(|(f, g)| *g && !allowed.contains(f)) {
            return Err(Failure::Usage(format!("--{flag} does not apply to this family")));
        }
        let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Ok(match family {
            Family::Trivial => FamilySpec::Trivial { n: need(self.n, "n", &name)? },
            Family::Dihedral => FamilySpec::Dihedral { n: need(self.n, "n", &name)? },
            Family::ParityShift => FamilySpec::ParityShift { n: need(self.n, "n", &name)? },
            Family::Core => {
                let (group_table, inverse) = families::cyclic_group(need(self.n, "n", &name)?);
                FamilySpec::Core { group_table, inverse }
            }
            Family::Permutation => FamilySpec::Permutation {
                perm: self
                    .perm
                    .clone()
                    .ok_or_else(|| Failure::Usage("family permutation needs --perm".into()))?,
            },
            Family::Alexander => FamilySpec::Alexander {
                n: need(self.n, "n", &name)?,
                t: need(self.t, "t", &name)?,
            },
            Family::StRack => FamilySpec::StRack {
                n: need(self.n, "n", &name)?,
                s: need(self.s, "s", &name)?,
                t: need(self.t, "t", &name)?,
            },
        })
    }

    fn source(&self) -> Result<RackSource, Failure> {
        match (&self.rack, self.family) {
            (Some(path), _) => {
                if self.n.is_some() || self.s.is_some() || self.t.is_some() || self.perm.is_some() {
                    return Err(Failure::Usage(
                        "family parameters cannot be combined with --rack".into(),
                    ));
                }
                Ok(RackSource::parse(&read(path)?)?)
            }
            (None, Some(f)) => Ok(RackSource::Family(self.family_spec(f)?)),
            (None, None) => Err(Failure::Usage("give a rack with --rack FILE or --family".into())),
        }
    }

    fn load(&self) -> Result<Loaded, Failure> {
        let source = self.source()?;
        let rack = source.build()?;
        let mut echo = match &source {
            RackSource::Family(f) => serde_json::to_value(f).expect("family spec serializes"),
            RackSource::Table(_) => json!({}),
        };
        let table = serde_json::to_value(TableSpec::of(&rack)).expect("table serializes");
        if let (Value::Object(e), Value::Object(t)) = (&mut echo, table) {
            e.extend(t);
        }
        if !self.corresponding {
            return Ok(Loaded { echo, rack, classes: None });
        }
        let cq = quandle::corresponding_quandle(&rack)?;
        Ok(Loaded {
            echo,
            rack: cq.quandle().clone(),
            classes: Some(cq.classes().to_vec()),
        })
    }
}

fn load_diagram(path: &Path) -> Result<KnotDiagram, Failure> {
    knot::parse_diagram(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn sets(subracks: Vec<racklab::Subrack<'_>>) -> Vec<Vec<usize>> {
    subracks.iter().map(|s| s.to_vec()).collect()
}

fn lattice(args: &RackArgs, cap: usize, oracle: bool) -> Outcome {
    let l = args.load()?;
    let lat = lattice::enumerate_subracks(&l.rack, cap)?;
    let report = lat.report();
    let via_quandle = quandle::distributive_via_quandle(&l.rack)?;
    if report.distributive != via_quandle {
        return Err(Failure::Invalid(format!(
            "cross-check failed: lattice distributive = {}, corresponding quandle trivial = {via_quandle}",
            report.distributive
        )));
    }
    let mut out = l.wrap(&report);
    out["size"] = json!(lat.len());
    if oracle {
        if l.rack.n() > 24 {
            return Err(Failure::Usage("--oracle needs a carrier of at most 24 elements".into()));
        }
        let slow = lattice::enumerate_subracks_exhaustive(&l.rack);
        if slow.sets() != lat.sets() {
            return Err(Failure::Invalid(
                "cross-check failed: exhaustive subset filter finds a different lattice".into(),
            ));
        }
        out["oracle"] = json!("agrees");
    }
    Ok(out)
}

fn st_analyze(args: &RackArgs, seed: Option<u64>, trials: usize) -> Outcome {
    let (n, s, t) = match args.source() {
        Ok(RackSource::Family(FamilySpec::StRack { n, s, t })) => (n, s, t),
        Ok(_) => return Err(Failure::Usage("st-analyze needs an st_rack family".into())),
        Err(Failure::Usage(_)) if args.rack.is_none() && args.family.is_none() => (
            need(args.n, "n", "st_rack")?,
            need(args.s, "s", "st_rack")?,
            need(args.t, "t", "st_rack")?,
        ),
        Err(e) => return Err(e),
    };
    let echo = json!({"family": "st_rack", "n": n, "s": s, "t": t});
    let p = match STParams::new(n, s, t) {
        Ok(p) => p,
        Err(e) => {
            let mut out = serde_json::to_value(StAnalysis::invalid()).expect("serializes");
            out["rack"] = echo;
            out["violation"] = json!(e.to_string());
            return Err(Failure::Rejected(out, e.to_string()));
        }
    };
    let mut out = serde_json::to_value(StAnalysis::of(&p)).expect("serializes");
    out["rack"] = echo;
    let mut atoms: Vec<Vec<usize>> = (0..n as u64).map(|a| st::st_atom(&p, a)).collect();
    atoms.sort();
    atoms.dedup();
    out["atoms"] = json!(atoms);
    if let Some(seed) = seed {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut poly = || {
            let len = rng.gen_range(1..8);
            IntPoly((0..len).map(|_| rng.gen_range(-50..=50)).collect())
        };
        let failures = (0..trials)
            .filter(|_| {
                let (h, g) = (poly(), poly());
                !st::laurent_identity_check(&p, &h, &g)
            })
            .count();
        out["identity_trials"] = json!({"seed": seed, "trials": trials, "failures": failures});
        if failures > 0 {
            let msg = format!("{failures} polynomial identity trials failed");
            return Err(Failure::Rejected(out, msg));
        }
    }
    Ok(out)
}

fn counted(d: &KnotDiagram, q: &RackTable, oracle: bool) -> Result<u64, Failure> {
    let fast = knot::count_colorings(d, q)?;
    if oracle {
        let slow = knot::count_colorings_exhaustive(d, q)?;
        if slow != fast {
            return Err(Failure::Invalid(format!(
                "cross-check failed: search counts {fast}, brute force counts {slow}"
            )));
        }
    }
    Ok(fast)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate(args) => {
            let l = args.load().map_err(|e| match e {
                Failure::Invalid(m) => Failure::Rejected(json!({"valid": false, "violation": m}), m),
                other => other,
            })?;
            Ok(l.wrap(json!({"valid": true, "n": l.rack.n(), "quandle": l.rack.is_quandle()})))
        }
        Command::Atoms(args) => {
            let l = args.load()?;
            Ok(l.wrap(json!({"atoms": sets(lattice::atoms(&l.rack))})))
        }
        Command::Orbits(args) => {
            let l = args.load()?;
            Ok(l.wrap(json!({"orbits": sets(lattice::orbits(&l.rack))})))
        }
        Command::Lattice { rack, cap, oracle } => lattice(rack, *cap, *oracle),
        Command::Quandle(args) => {
            let l = args.load()?;
            let cq = quandle::corresponding_quandle(&l.rack)?;
            let mut out = l.wrap(cq.report());
            out["projection"] = json!(cq.projection());
            Ok(out)
        }
        Command::Iota { rack, cap } => {
            let l = rack.load()?;
            let i = quandle::iota(&l.rack);
            let q = quandle::iota_quandle(&l.rack)?;
            Ok(l.wrap(json!({
                "iota": i.as_translation().images(),
                "cycles": i.as_translation().cycles(),
                "automorphism": i.is_automorphism_of(&l.rack),
                "table": q.rows(),
                "inclusion": quandle::subrack_inclusion_report(&l.rack, *cap)?,
            })))
        }
        Command::StAnalyze { rack, seed, trials } => st_analyze(rack, *seed, *trials),
        Command::Color { rack, diagram, oracle } => {
            let l = rack.load()?;
            let d = load_diagram(diagram)?;
            let count = counted(&d, &l.rack, *oracle)?;
            let constant = l.rack.n() as u64;
            Ok(l.wrap(knot::ColoringReport {
                count,
                constant,
                nontrivial: count > constant,
            }))
        }
        Command::Distinguish { rack, d1, d2, oracle } => {
            let l = rack.load()?;
            let (a, b) = (load_diagram(d1)?, load_diagram(d2)?);
            let mut result = knot::distinguish(&a, &b, &l.rack)?;
            if *oracle {
                result.count1 = counted(&a, &l.rack, true)?;
                result.count2 = counted(&b, &l.rack, true)?;
            }
            Ok(l.wrap(result))
        }
    }
}

fn print(out: &Value, pretty: bool) {
    if pretty {
        print!("{}", render::pretty(out));
    } else {
        println!("{}", serde_json::to_string(out).expect("serializes"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print(&out, cli.pretty);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Failure::Rejected(out, _) = &e {
                print(out, cli.pretty);
            }
            eprintln!("rack-lab: {e}");
            ExitCode::from(match e {
                Failure::Usage(_) => 2,
                Failure::Invalid(_) | Failure::Rejected(..) => 1,
            })
        }
    }
}

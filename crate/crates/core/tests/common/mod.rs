#![allow(dead_code)]

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use racklab::{families, RackTable, STParams};

pub struct Named {
    pub name: String,
    pub rack: RackTable,
}

fn named(name: impl Into<String>, rack: RackTable) -> Named {
    Named {
        name: name.into(),
        rack,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Composition `f ∘ g`.
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Cyclic shift on the first `len` points, identity elsewhere.
fn cycle_perm(n: usize, len: usize) -> Vec<usize> {
    (0..n).map(|x| if x < len { (x + 1) % len } else { x }).collect()
}

/// Racks from every constructor family with `n ≤ max_n`.
pub fn family_corpus(max_n: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(named(format!("trivial({n})"), families::trivial(n).unwrap()));
        out.push(named(format!("dihedral({n})"), families::dihedral(n).unwrap()));
        let (g, inv) = families::cyclic_group(n);
        out.push(named(format!("core(Z_{n})"), families::core(&g, &inv).unwrap()));
        for len in 2..=n {
            let f = cycle_perm(n, len);
            out.push(named(
                format!("permutation({n}, {len}-cycle)"),
                families::permutation_rack(&f).unwrap(),
            ));
        }
        if n >= 4 {
            let f: Vec<usize> = (0..n).map(|x| if x < 4 { x ^ 1 } else { x }).collect();
            out.push(named(
                format!("permutation({n}, (01)(23))"),
                families::permutation_rack(&f).unwrap(),
            ));
        }
        for t in 1..n as i64 {
            if let Ok(r) = families::alexander(n, t) {
                out.push(named(format!("alexander({n}, {t})"), r));
            }
        }
        for p in STParams::all_for_modulus(n) {
            out.push(named(
                format!("st_rack({n}, {}, {})", p.s(), p.t()),
                p.rack().unwrap(),
            ));
        }
        if n % 2 == 0 {
            out.push(named(format!("parity_shift({n})"), families::parity_shift(n).unwrap()));
        }
    }
    let (s3, inv) = families::symmetric_group_3();
    out.push(named("core(S_3)", families::core(&s3, &inv).unwrap()));

    // Partition racks f_i = f^i on the blocks of f's cycles.
    for (n, f) in [
        (6, vec![1, 0, 3, 4, 2, 5]),
        (7, vec![1, 2, 0, 4, 3, 6, 5]),
        (9, vec![1, 2, 3, 0, 5, 4, 7, 8, 6]),
        (10, vec![1, 2, 3, 4, 0, 6, 5, 8, 7, 9]),
    ] {
        let blocks = cycle_blocks(&f);
        let mut power: Vec<usize> = (0..n).collect();
        let mut bijections = Vec::new();
        for _ in 0..blocks.len() {
            bijections.push(power.clone());
            power = compose(&f, &power);
        }
        out.push(named(
            format!("partition_rack({n}, f={f:?})"),
            families::partition_rack(&blocks, &bijections).unwrap(),
        ));
    }
    // Partition rack on two blocks acting by independent commuting shifts.
    out.push(named(
        "partition_rack(8, shifts)",
        families::partition_rack(
            &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]],
            &[vec![1, 2, 3, 0, 4, 5, 6, 7], vec![0, 1, 2, 3, 5, 4, 7, 6]],
        )
        .unwrap(),
    ));
    out
}

fn cycle_blocks(f: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; f.len()];
    let mut blocks = Vec::new();
    for s in 0..f.len() {
        if seen[s] {
            continue;
        }
        let mut b = vec![];
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            b.push(x);
            x = f[x];
        }
        b.sort();
        blocks.push(b);
    }
    blocks
}

/// Depth-first search for a rack on `0..n`: chooses `f_0, f_1, …` in random
/// order, pruning on `f_a f_b = f_{f_a(b)} f_a` whenever all three are chosen.
fn random_rack(rng: &mut StdRng, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn extend(
        k: usize,
        fs: &mut Vec<Vec<usize>>,
        perms: &[Vec<usize>],
        rng: &mut StdRng,
        budget: &mut usize,
    ) -> bool {
        let n = perms[0].len();
        if k == n {
            return true;
        }
        let mut order: Vec<usize> = (0..perms.len()).collect();
        order.shuffle(rng);
        for i in order {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            fs.push(perms[i].clone());
            let ok = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let ab = fs[a][b];
                    ab > k || (0..n).all(|c| fs[a][fs[b][c]] == fs[ab][fs[a][c]])
                })
            });
            if ok && extend(k + 1, fs, perms, rng, budget) {
                return true;
            }
            fs.pop();
        }
        false
    }
    loop {
        let mut fs = Vec::new();
        let mut budget = 20_000;
        if extend(0, &mut fs, perms, rng, &mut budget) {
            return fs;
        }
    }
}

/// At least `count` distinct valid racks with `2 ≤ n ≤ 5`, found by randomized
/// search over translation tuples.
pub fn random_racks(count: usize, seed: u64) -> Vec<Named> {
    let mut rng = StdRng::seed_from_u64(seed);
    let perms: Vec<Vec<Vec<usize>>> = (0..=5).map(permutations).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut n = 2;
    while out.len() < count {
        let fs = random_rack(&mut rng, &perms[n]);
        // table[a][b] = f_a(b)
        if seen.insert(fs.clone()) {
            let rack = RackTable::from_rows(fs).expect("search only returns racks");
            out.push(named(format!("random#{}(n={n})", out.len()), rack));
        }
        n = if n == 5 { 2 } else { n + 1 };
    }
    out
}

pub fn corpus() -> Vec<Named> {
    let mut all = family_corpus(10);
    all.extend(random_racks(120, 0x5eed));
    all
}

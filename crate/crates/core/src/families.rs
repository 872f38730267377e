//! Constructors for the standard rack families.
//!
//! Every constructor builds a raw table and sends it through
//! [`RackTable::validate`], so a returned rack has passed the full axiom check.

use crate::error::{Error, Result};
use crate::rack::{MagmaTable, RackTable, Translation};
use crate::st::{gcd, STParams};

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyCarrier)
    } else {
        Ok(())
    }
}

fn build(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<RackTable> {
    RackTable::validate(&MagmaTable::from_fn(n, op)?)
}

/// `a ▷ b = b`.
pub fn trivial(n: usize) -> Result<RackTable> {
    nonempty(n)?;
    build(n, |_, b| b)
}

/// `a ▷ b = f(b)` for a fixed permutation `f`.
pub fn permutation_rack(perm: &[usize]) -> Result<RackTable> {
    nonempty(perm.len())?;
    let f = Translation::from_images(perm.to_vec())?;
    build(perm.len(), |_, b| f.apply(b))
}

/// `a ▷ b = 2a − b` on `Z_n`.
pub fn dihedral(n: usize) -> Result<RackTable> {
    nonempty(n)?;
    build(n, |a, b| (2 * a + n - b) % n)
}

/// `a ▷ b = a b^{-1} a` on a group given by its multiplication table and
/// inverse column.
pub fn core(group_table: &[Vec<usize>], inverse: &[usize]) -> Result<RackTable> {
    let n = group_table.len();
    nonempty(n)?;
    let g = MagmaTable::new(group_table.to_vec())?;
    let mul = |a: usize, b: usize| g.rows()[a][b];
    if inverse.len() != n || inverse.iter().any(|&x| x >= n) {
        return Err(Error::ParameterViolation(
            "inverse column must list one element per group element".into(),
        ));
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
        .ok_or_else(|| Error::ParameterViolation("group table has no identity".into()))?;
    if let Some(x) = (0..n).find(|&x| mul(x, inverse[x]) != e || mul(inverse[x], x) != e) {
        return Err(Error::ParameterViolation(format!(
            "inverse column is wrong at {x}"
        )));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::ParameterViolation(format!(
                        "group table is not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    build(n, |a, b| mul(mul(a, inverse[b]), a))
}

/// Multiplication table and inverse column of the cyclic group `Z_n`.
pub fn cyclic_group(n: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let inverse = (0..n).map(|a| (n - a) % n).collect();
    (table, inverse)
}

/// Multiplication table and inverse column of the symmetric group `S_3`,
/// elements indexed by the permutations of `[0, 1, 2]` in lexicographic order.
pub fn symmetric_group_3() -> (Vec<Vec<usize>>, Vec<usize>) {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    let inverse = perms
        .iter()
        .map(|p| {
            let mut inv = [0; 3];
            for (i, &x) in p.iter().enumerate() {
                inv[x] = i;
            }
            index(inv)
        })
        .collect();
    (table, inverse)
}

/// `a ▷ b = (1 − t)a + tb` on `Z_n`; requires `gcd(t, n) = 1`.
pub fn alexander(n: usize, t: i64) -> Result<RackTable> {
    nonempty(n)?;
    let t_mod = t.rem_euclid(n as i64) as u64;
    if gcd(t_mod, n as u64) != 1 {
        return Err(Error::ParameterViolation(format!(
            "gcd(t, n) = gcd({t}, {n}) ≠ 1"
        )));
    }
    st_rack(n, 1 - t, t)
}

/// `a ▷ b = sa + tb` on `Z_n`; requires `gcd(t, n) = 1` and `s² ≡ s(1 − t)`.
pub fn st_rack(n: usize, s: i64, t: i64) -> Result<RackTable> {
    STParams::new(n, s, t)?.rack()
}

/// Finite analogue of the parity-shift rack on `Z_n`, `n` even:
/// `a ▷ b = b` for even `b`, `b + 2` for odd `b`.
pub fn parity_shift(n: usize) -> Result<RackTable> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::ParameterViolation(format!(
            "parity-shift rack needs a positive even modulus, got {n}"
        )));
    }
    build(n, |_, b| if b % 2 == 0 { b } else { (b + 2) % n })
}

/// `a ▷ b = f_i(b)` for `a` in block `i`. The blocks must partition `0..n`,
/// and the bijections must preserve every block and commute pairwise.
pub fn partition_rack(blocks: &[Vec<usize>], bijections: &[Vec<usize>]) -> Result<RackTable> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    nonempty(n)?;
    if bijections.len() != blocks.len() {
        return Err(Error::ParameterViolation(format!(
            "{} blocks but {} bijections",
            blocks.len(),
            bijections.len()
        )));
    }
    let mut block_of = vec![usize::MAX; n];
    for (i, block) in blocks.iter().enumerate() {
        for &x in block {
            if x >= n || block_of[x] != usize::MAX {
                return Err(Error::ParameterViolation(format!(
                    "blocks do not partition 0..{n} (element {x})"
                )));
            }
            block_of[x] = i;
        }
    }
    let fs = bijections
        .iter()
        .map(|f| {
            if f.len() != n {
                return Err(Error::ParameterViolation(format!(
                    "bijection has {} entries, expected {n}",
                    f.len()
                )));
            }
            Translation::from_images(f.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    for (i, f) in fs.iter().enumerate() {
        if let Some(x) = (0..n).find(|&x| block_of[f.apply(x)] != block_of[x]) {
            return Err(Error::ParameterViolation(format!(
                "bijection {i} moves {x} out of its block"
            )));
        }
        for (j, g) in fs.iter().enumerate().skip(i + 1) {
            if f.compose(g) != g.compose(f) {
                return Err(Error::ParameterViolation(format!(
                    "bijections {i} and {j} do not commute"
                )));
            }
        }
    }
    build(n, |a, b| fs[block_of[a]].apply(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn st_examples() {
        let r = st_rack(9, 3, 1).unwrap();
        assert!(!r.is_quandle());
        assert_eq!(r.op(1, 0), 3);

        let r = st_rack(20, 2, 9).unwrap();
        assert_eq!(r.op(1, 1), 11);

        let err = st_rack(9, 3, 2).unwrap_err();
        assert!(matches!(err, Error::ParameterViolation(ref m) if m.contains("s²")), "{err}");
        assert!(matches!(st_rack(10, 1, 2), Err(Error::ParameterViolation(_))));
    }

    #[test]
    fn alexander_matches_st_with_complementary_s() {
        for n in 1..=16usize {
            for t in 1..n as i64 {
                if gcd(t as u64, n as u64) != 1 {
                    assert!(alexander(n, t).is_err());
                    continue;
                }
                let a = alexander(n, t).unwrap();
                let st = st_rack(n, (1 - t).rem_euclid(n as i64), t).unwrap();
                assert_eq!(a, st);
                assert!(a.is_quandle());
            }
        }
    }

    #[test]
    fn parity_shift_is_a_non_quandle_rack() {
        let r = parity_shift(8).unwrap();
        assert!(!r.is_quandle());
        assert_eq!(r.op(0, 7), 1);
        assert!(parity_shift(7).is_err());
        assert!(parity_shift(0).is_err());
    }

    #[test]
    fn permutation_rack_rejects_non_permutations() {
        assert!(permutation_rack(&[1, 2, 0, 3]).is_ok());
        assert!(!permutation_rack(&[1, 2, 0, 3]).unwrap().is_quandle());
        assert!(permutation_rack(&[1, 1, 0]).is_err());
    }

    #[test]
    fn core_of_groups() {
        let (z4, inv) = cyclic_group(4);
        let c = core(&z4, &inv).unwrap();
        // a b^{-1} a = 2a − b in an abelian group.
        assert_eq!(c, dihedral(4).unwrap());

        let (s3, inv) = symmetric_group_3();
        let c = core(&s3, &inv).unwrap();
        assert!(c.is_quandle());

        let (z3, _) = cyclic_group(3);
        assert!(core(&z3, &[0, 1, 2]).is_err());
    }

    #[test]
    fn partition_rack_checks_preconditions() {
        // Power construction f_i = f^i with f = (0 1)(2 3).
        let f = vec![1, 0, 3, 2];
        let r = partition_rack(&[vec![0, 1], vec![2, 3]], &[vec![0, 1, 2, 3], f.clone()]).unwrap();
        assert_eq!(r.op(2, 0), 1);
        assert_eq!(r.op(0, 2), 2);

        // A bijection mixing blocks.
        assert!(partition_rack(&[vec![0, 1], vec![2, 3]], &[vec![2, 1, 0, 3], f.clone()]).is_err());
        // Non-commuting bijections preserving the single block.
        assert!(partition_rack(
            &[vec![0, 1, 2], vec![]],
            &[vec![1, 0, 2], vec![0, 2, 1]]
        )
        .is_err());
        assert!(partition_rack(&[vec![0, 1], vec![1, 2]], &[f.clone(), f]).is_err());
    }

    #[test]
    fn empty_carrier_rejected() {
        assert_eq!(trivial(0), Err(Error::EmptyCarrier));
        assert_eq!(dihedral(0), Err(Error::EmptyCarrier));
    }
}

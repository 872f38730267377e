//! Closed-form arithmetic for `(s,t)`-racks on `Z_n`, where `a ▷ b = sa + tb`,
//! `t` is a unit and `s² ≡ s(1 − t) (mod n)`.
//!
//! Everything here works directly with residues; the generic table-based
//! machinery in [`crate::lattice`] and [`crate::quandle`] is used only as a
//! cross-check in tests.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rack::{MagmaTable, RackTable};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` modulo `n`, if it exists.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_x, mut x) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
    }
    (old_r == 1 || n == 1).then(|| old_x.rem_euclid(n as i128) as u64)
}

/// Validated `(n, s, t)` with residues reduced into `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct STParams {
    n: u64,
    s: u64,
    t: u64,
}

impl STParams {
    pub fn new(n: usize, s: i64, t: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let m = n as i64;
        let (s_r, t_r) = (s.rem_euclid(m) as u64, t.rem_euclid(m) as u64);
        let n = n as u64;
        if gcd(t_r, n) != 1 {
            return Err(Error::ParameterViolation(format!(
                "gcd(t, n) = gcd({t}, {n}) ≠ 1"
            )));
        }
        let lhs = mul_mod(s_r, s_r, n);
        let rhs = mul_mod(s_r, (1 + n - t_r) % n, n);
        if lhs != rhs {
            return Err(Error::ParameterViolation(format!(
                "s² ≢ s(1 − t) mod {n}: {lhs} ≠ {rhs} for s={s}, t={t}"
            )));
        }
        Ok(Self { n, s: s_r, t: t_r })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    fn one_minus_s(&self) -> u64 {
        (1 + self.n - self.s) % self.n
    }

    fn t_inv(&self) -> u64 {
        inv_mod(self.t, self.n).expect("t is a unit by construction")
    }

    /// `a ▷ b = sa + tb mod n`.
    pub fn op(&self, a: u64, b: u64) -> u64 {
        (mul_mod(self.s, a, self.n) + mul_mod(self.t, b, self.n)) % self.n
    }

    pub fn rack(&self) -> Result<RackTable> {
        RackTable::validate(&MagmaTable::from_fn(self.n(), |a, b| {
            self.op(a as u64, b as u64) as usize
        })?)
    }

    /// Every valid parameter triple with modulus `n`.
    pub fn all_for_modulus(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for t in 0..n as i64 {
            for s in 0..n as i64 {
                if let Ok(p) = Self::new(n, s, t) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// A dense integer polynomial, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(pub Vec<i64>);

impl IntPoly {
    pub fn constant_term(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Horner evaluation at `x` modulo `n`.
    pub fn eval_mod(&self, x: u64, n: u64) -> u64 {
        self.0.iter().rev().fold(0, |acc, &c| {
            (mul_mod(acc, x, n) + c.rem_euclid(n as i64) as u64) % n
        })
    }
}

/// Evaluates both sides of `h(t)g(s) = h(1 − s)(g(s) − g₀) + g₀h(t)` in `Z_n`.
pub fn laurent_identity_check(p: &STParams, h: &IntPoly, g: &IntPoly) -> bool {
    let n = p.n;
    let g0 = g.constant_term().rem_euclid(n as i64) as u64;
    let gs = g.eval_mod(p.s, n);
    let lhs = mul_mod(h.eval_mod(p.t, n), gs, n);
    let rhs = (mul_mod(h.eval_mod(p.one_minus_s(), n), (gs + n - g0) % n, n)
        + mul_mod(g0, h.eval_mod(p.t, n), n))
        % n;
    lhs == rhs
}

/// `f_a^k(a)` by closed form: `(t^k + 1 − (1 − s)^k)a` for `k ≥ 0`, and
/// `(1 − s)^{|k|} t^{−|k|} a` for `k < 0`.
pub fn st_power(p: &STParams, a: u64, k: i64) -> u64 {
    let n = p.n;
    let a = a % n;
    let e = k.unsigned_abs();
    let coeff = if k >= 0 {
        (pow_mod(p.t, e, n) + 1 + n - pow_mod(p.one_minus_s(), e, n)) % n
    } else {
        mul_mod(pow_mod(p.one_minus_s(), e, n), pow_mod(p.t_inv(), e, n), n)
    };
    mul_mod(coeff, a, n)
}

/// Collects `coeff(k)·a` for `k = 0, 1, …` where the coefficient depends only on
/// the pair `(x^k, y^k)`; stops once that pair repeats.
fn power_pair_orbit(n: u64, x: u64, y: u64, coeff: impl Fn(u64, u64) -> u64, a: u64) -> Vec<usize> {
    let mut seen = HashSet::new();
    let mut out = BTreeSet::new();
    let (mut xk, mut yk) = (1 % n, 1 % n);
    while seen.insert((xk, yk)) {
        out.insert(mul_mod(coeff(xk, yk), a, n) as usize);
        xk = mul_mod(xk, x, n);
        yk = mul_mod(yk, y, n);
    }
    out.into_iter().collect()
}

/// The atom of `a`: `{(t^k + 1 − (1 − s)^k)a : k ≥ 0}`, sorted.
pub fn st_atom(p: &STParams, a: u64) -> Vec<usize> {
    let n = p.n;
    power_pair_orbit(n, p.t, p.one_minus_s(), |tk, sk| (tk + 1 + n - sk) % n, a % n)
}

/// The second description of the atom: `{(1 − s)^k t^{−k} a : k ≥ 0}`, sorted.
pub fn st_atom_inverse_form(p: &STParams, a: u64) -> Vec<usize> {
    let n = p.n;
    power_pair_orbit(n, p.t_inv(), p.one_minus_s(), |tk, sk| mul_mod(tk, sk, n), a % n)
}

/// Result of the criterion for the class `0̄` acting trivially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroClassIdentity {
    pub holds: bool,
    pub s2_zero: bool,
    /// Least `k ∈ 1..=n` with `t^{k+1} ≡ 1 − ks`, when `s² ≡ 0`.
    pub k_certificate: Option<u64>,
}

/// Decides whether `f_0̄ = id` in the corresponding quandle: `s² ≡ 0` and some
/// `k` has `t^{k+1} ≡ 1 − ks (mod n)`.
///
/// With `s² ≡ 0` the condition reads `t = u^k` for the unit `u = (1 − s)t^{-1}`,
/// so the solutions form a residue class modulo `ord(u) ≤ n` and some positive
/// solution lies in `1..=n` whenever any solution exists.
pub fn zero_class_identity(p: &STParams) -> ZeroClassIdentity {
    let n = p.n;
    let s2_zero = mul_mod(p.s, p.s, n) == 0;
    let k_certificate = s2_zero
        .then(|| {
            (1..=n).find(|&k| {
                pow_mod(p.t, k + 1, n) == (1 + n - mul_mod(k % n, p.s, n)) % n
            })
        })
        .flatten();
    ZeroClassIdentity {
        holds: k_certificate.is_some(),
        s2_zero,
        k_certificate,
    }
}

/// `s² ≡ 0`, `s ≢ 0` and the `k` condition: the corresponding quandle has a
/// trivially acting class and a nontrivially acting one, so it is not Alexander.
pub fn non_alexander_certificate(p: &STParams) -> bool {
    p.s != 0 && zero_class_identity(p).holds
}

/// `x̄ * ȳ` computed as the class of `sx + (1 − s)y`.
pub fn class_op_closed_form(p: &STParams, x: u64, y: u64) -> Vec<usize> {
    let n = p.n;
    let z = (mul_mod(p.s, x % n, n) + mul_mod(p.one_minus_s(), y % n, n)) % n;
    st_atom(p, z)
}

/// Summary report for a parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StAnalysis {
    pub valid: bool,
    pub s2_zero: bool,
    pub k_certificate: Option<u64>,
    pub non_alexander: bool,
}

impl StAnalysis {
    pub fn of(p: &STParams) -> Self {
        let z = zero_class_identity(p);
        Self {
            valid: true,
            s2_zero: z.s2_zero,
            k_certificate: z.k_certificate,
            non_alexander: p.s != 0 && z.holds,
        }
    }

    pub fn invalid() -> Self {
        Self {
            valid: false,
            s2_zero: false,
            k_certificate: None,
            non_alexander: false,
        }
    }
}

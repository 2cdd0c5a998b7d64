//! Canonical enumeration of `W_n` through the tower `W_n = X_K · W_{n-1}`.
//!
//! Coset representatives `x ∈ X_K` are ranked by length, which equals the
//! rank of `x(n)` in the order `n, n-1, ..., 1, -1, ..., -n`. The index of
//! `w = x u` is `rank(x) · |W_{n-1}| + index(u)`, so the identity has index 0.

use super::coset::{coset_decompose, k_rep, Parabolic};
use super::{SignedPerm, MAX_RANK};
use crate::error::{Error, Result};

/// Largest rank for which whole-group enumeration is supported
/// (645,120 elements, about 6 MB of windows).
pub const MAX_ENUM_RANK: usize = 7;

pub fn group_order(n: usize) -> usize {
    (1..=n).product::<usize>() << n
}

#[inline]
fn rep_rank(n: usize, k: i8) -> usize {
    if k > 0 {
        n - k as usize
    } else {
        n - 1 + (-k) as usize
    }
}

#[inline]
fn rep_value(n: usize, r: usize) -> i8 {
    if r < n {
        (n - r) as i8
    } else {
        -((r + 1 - n) as i8)
    }
}

/// Position of `w` in the canonical order of `W_n`.
pub fn index_of(w: &SignedPerm) -> usize {
    let mut cur = *w;
    let mut idx = 0usize;
    for m in (1..=w.rank()).rev() {
        let k = cur.at(m);
        let d = coset_decompose(&cur, Parabolic::K);
        idx += rep_rank(m, k) * group_order(m - 1);
        cur = d.part.restrict_to(m - 1);
    }
    idx
}

/// Inverse of [`index_of`].
pub fn element_at(n: usize, index: usize) -> SignedPerm {
    debug_assert!(index < group_order(n));
    let mut w = SignedPerm::identity(0);
    let mut rest = index;
    let mut digits = [0usize; MAX_RANK + 1];
    for m in (1..=n).rev() {
        let ord = group_order(m - 1);
        digits[m] = rest / ord;
        rest %= ord;
    }
    for (m, &digit) in digits.iter().enumerate().take(n + 1).skip(1) {
        let x = k_rep(m, rep_value(m, digit));
        w = x.mul(&w.extend_to(m));
    }
    w
}

/// All `2^n · n!` elements in canonical order.
pub fn enumerate(n: usize) -> Result<Vec<SignedPerm>> {
    if n == 0 || n > MAX_ENUM_RANK {
        return Err(Error::InvalidRank(n, "1..=7"));
    }
    // Built level by level: level m is X_K(m) × level m-1.
    let mut level = vec![SignedPerm::identity(0)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(level.len() * 2 * m);
        for r in 0..2 * m {
            let x = k_rep(m, rep_value(m, r));
            next.extend(level.iter().map(|u| x.mul(&u.extend_to(m))));
        }
        level = next;
    }
    Ok(level)
}

use std::collections::{HashSet, VecDeque};

use super::{Gen, SignedPerm};

/// Bruhat order by the lifting property: for a left descent `s` of `w`,
/// `y ≤ w` iff `sy ≤ sw` (when `sy < y`) or `y ≤ sw` (when `sy > y`).
pub fn bruhat_leq(y: &SignedPerm, w: &SignedPerm) -> bool {
    let (ly, lw) = (y.length(), w.length());
    if ly > lw {
        return false;
    }
    if ly == lw {
        return y == w;
    }
    if ly == 0 {
        return true;
    }
    let s = Gen::all(w.rank()).find(|&g| w.is_left_descent(g)).expect("w ≠ e has a left descent");
    let sw = w.mul_gen_left(s);
    if y.is_left_descent(s) {
        bruhat_leq(&y.mul_gen_left(s), &sw)
    } else {
        bruhat_leq(y, &sw)
    }
}

/// `y ≤_e w`: `y` is a suffix of `w`, i.e. `ℓ(w) = ℓ(w y⁻¹) + ℓ(y)`.
///
/// Walks down `y` one right descent at a time; each stripped letter has to be
/// a right descent of the current `w` as well.
pub fn is_suffix(y: &SignedPerm, w: &SignedPerm) -> bool {
    let (mut y, mut w) = (*y, *w);
    loop {
        let Some(s) = Gen::all(y.rank()).find(|&g| y.is_right_descent(g)) else {
            return true;
        };
        if !w.is_right_descent(s) {
            return false;
        }
        y = y.mul_gen_right(s);
        w = w.mul_gen_right(s);
    }
}

/// All suffixes of `w`, sorted by length then window.
pub fn suffixes(w: &SignedPerm) -> Vec<SignedPerm> {
    let mut seen = HashSet::from([*w]);
    let mut queue = VecDeque::from([*w]);
    while let Some(z) = queue.pop_front() {
        for g in Gen::all(z.rank()) {
            if z.is_left_descent(g) {
                let x = z.mul_gen_left(g);
                if seen.insert(x) {
                    queue.push_back(x);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|x| (x.length(), *x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, GenWord};

    /// Every reduced word of `w`, by recursion on right descents.
    fn reduced_words(w: &SignedPerm) -> Vec<GenWord> {
        if w.is_identity() {
            return vec![GenWord::default()];
        }
        let mut out = Vec::new();
        for g in Gen::all(w.rank()) {
            if w.is_right_descent(g) {
                for mut rw in reduced_words(&w.mul_gen_right(g)) {
                    rw.0.push(g);
                    out.push(rw);
                }
            }
        }
        out
    }

    fn subword_leq(y: &SignedPerm, w: &SignedPerm) -> bool {
        let rw = w.reduced_word();
        let k = rw.len();
        (0u32..1 << k).any(|mask| {
            let sub = GenWord((0..k).filter(|i| mask & (1 << i) != 0).map(|i| rw.0[i]).collect());
            sub.evaluate(w.rank()).unwrap() == *y
        })
    }

    #[test]
    fn bruhat_matches_subword_criterion() {
        for n in 1..=3 {
            let all = enumerate(n).unwrap();
            for y in &all {
                for w in &all {
                    assert_eq!(bruhat_leq(y, w), subword_leq(y, w), "{y:?} ≤ {w:?}");
                }
            }
        }
    }

    #[test]
    fn bruhat_extremes() {
        let all = enumerate(3).unwrap();
        let e = SignedPerm::identity(3);
        let w0 = SignedPerm::longest(3);
        for w in &all {
            assert!(bruhat_leq(&e, w));
            assert_eq!(bruhat_leq(&w0, w), *w == w0);
        }
    }

    #[test]
    fn suffix_walk_matches_length_identity_and_trailing_segments() {
        for n in 1..=3 {
            let all = enumerate(n).unwrap();
            for w in &all {
                let rws = reduced_words(w);
                for y in &all {
                    let by_len = w.length() == w.mul(&y.inverse()).length() + y.length();
                    let by_words = reduced_words(y)
                        .iter()
                        .any(|ry| rws.iter().any(|rw| rw.0.ends_with(&ry.0)));
                    assert_eq!(is_suffix(y, w), by_len);
                    assert_eq!(by_len, by_words);
                }
            }
        }
    }

    #[test]
    fn suffix_sets() {
        for w in enumerate(4).unwrap() {
            let sufs = suffixes(&w);
            assert!(sufs[0].is_identity());
            assert_eq!(*sufs.last().unwrap(), w);
            for y in &sufs {
                assert!(is_suffix(y, &w));
            }
            let count = enumerate(4).unwrap().iter().filter(|y| is_suffix(y, &w)).count();
            assert_eq!(count, sufs.len());
        }
    }
}

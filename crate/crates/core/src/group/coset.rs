use std::fmt;

use super::SignedPerm;

/// The two maximal parabolic subgroups used throughout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parabolic {
    /// `J = {s_1, ..., s_{n-1}}`, so `W_J` is the symmetric group.
    J,
    /// `K = {t, s_1, ..., s_{n-2}}`, so `W_K = W_{n-1}` (the stabiliser of `n`).
    K,
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parabolic::J => "J",
            Parabolic::K => "K",
        })
    }
}

/// `w = rep · part` with `rep` the distinguished left coset representative.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CosetDecomposition {
    pub rep: SignedPerm,
    pub part: SignedPerm,
    pub subset: Parabolic,
}

impl CosetDecomposition {
    pub fn recompose(&self) -> SignedPerm {
        self.rep.mul(&self.part)
    }
}

pub fn coset_decompose(w: &SignedPerm, subset: Parabolic) -> CosetDecomposition {
    match subset {
        Parabolic::J => decompose_j(w),
        Parabolic::K => decompose_k(w),
    }
}

/// Representative for `K` with `rep(n) = k`:
/// `(1, ..., |k|-1, |k|+1, ..., n, k)`.
pub(crate) fn k_rep(n: usize, k: i8) -> SignedPerm {
    let a = k.unsigned_abs() as usize;
    let mut win = [0i8; super::MAX_RANK];
    for (i, x) in win.iter_mut().enumerate().take(n - 1) {
        let pos = i + 1;
        *x = if pos < a { pos as i8 } else { pos as i8 + 1 };
    }
    win[n - 1] = k;
    SignedPerm::from_window_unchecked(&win[..n])
}

fn decompose_k(w: &SignedPerm) -> CosetDecomposition {
    let n = w.rank();
    let k = w.at(n);
    let a = k.abs();
    let mut part = *w;
    for i in 1..n {
        let x = w.at(i);
        let v = if x.abs() < a { x } else { x - x.signum() };
        part.w[i - 1] = v;
    }
    part.w[n - 1] = n as i8;
    CosetDecomposition { rep: k_rep(n, k), part, subset: Parabolic::K }
}

fn decompose_j(w: &SignedPerm) -> CosetDecomposition {
    let n = w.rank();
    let mut neg: Vec<i8> = w.window().iter().copied().filter(|&x| x < 0).collect();
    let mut pos: Vec<i8> = w.window().iter().copied().filter(|&x| x > 0).collect();
    neg.sort_unstable();
    pos.sort_unstable();
    neg.extend_from_slice(&pos);
    let rep = SignedPerm::from_window_unchecked(&neg[..n]);
    let part = rep.inverse().mul(w);
    CosetDecomposition { rep, part, subset: Parabolic::J }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, Gen};

    fn in_parabolic(u: &SignedPerm, subset: Parabolic) -> bool {
        match subset {
            Parabolic::J => u.window().iter().all(|&x| x > 0),
            Parabolic::K => u.at(u.rank()) == u.rank() as i8,
        }
    }

    fn parabolic_elements(n: usize, subset: Parabolic) -> Vec<SignedPerm> {
        enumerate(n).unwrap().into_iter().filter(|u| in_parabolic(u, subset)).collect()
    }

    #[test]
    fn decomposition_is_length_additive_and_round_trips() {
        for n in 1..=5 {
            for subset in [Parabolic::J, Parabolic::K] {
                for w in enumerate(n).unwrap() {
                    let d = coset_decompose(&w, subset);
                    assert_eq!(d.recompose(), w);
                    assert!(in_parabolic(&d.part, subset));
                    assert_eq!(w.length(), d.rep.length() + d.part.length(), "{w:?} {subset}");
                }
            }
        }
    }

    #[test]
    fn representatives_are_minimal_in_their_cosets() {
        for n in 1..=3 {
            for subset in [Parabolic::J, Parabolic::K] {
                let sub = parabolic_elements(n, subset);
                for w in enumerate(n).unwrap() {
                    let rep = coset_decompose(&w, subset).rep;
                    for u in &sub {
                        assert_eq!(rep.mul(u).length(), rep.length() + u.length());
                    }
                }
            }
        }
    }

    #[test]
    fn elements_of_the_subgroup_have_trivial_rep() {
        for n in 1..=4 {
            for subset in [Parabolic::J, Parabolic::K] {
                for u in parabolic_elements(n, subset) {
                    let d = coset_decompose(&u, subset);
                    assert!(d.rep.is_identity());
                    assert_eq!(d.part, u);
                }
            }
        }
    }

    #[test]
    fn tn_commutes_with_wk_and_is_its_own_rep() {
        for n in 2..=4 {
            let tn = SignedPerm::reflection_t(n, n);
            for u in parabolic_elements(n, Parabolic::K) {
                assert_eq!(tn.mul(&u), u.mul(&tn));
                let d = coset_decompose(&tn.mul(&u), Parabolic::K);
                assert_eq!(d.rep, tn);
                assert_eq!(d.part, u);
            }
        }
    }

    #[test]
    fn k_representatives_are_suffixes_of_tn() {
        for n in 1..=5 {
            let tn = SignedPerm::reflection_t(n, n);
            let sufs = crate::group::suffixes(&tn);
            assert_eq!(sufs.len(), 2 * n);
            for x in sufs {
                assert_eq!(k_rep(n, x.at(n)), x);
            }
        }
    }

    #[test]
    fn parabolic_descents() {
        // Representatives have no right descents inside the parabolic subset.
        for w in enumerate(4).unwrap() {
            let rk = coset_decompose(&w, Parabolic::K).rep;
            assert!((0..3).all(|i| !rk.is_right_descent(Gen(i))));
            let rj = coset_decompose(&w, Parabolic::J).rep;
            assert!((1..4).all(|i| !rj.is_right_descent(Gen(i))));
        }
    }
}

use std::collections::{HashMap, VecDeque};

use super::{index_of, Gen, SignedPerm};

/// Multiplication tables for a finite Coxeter group generated by a subset of
/// the generators of `W_n`. Elements are stored in length order.
#[derive(Clone, Debug)]
pub struct CoxeterTables {
    rank: usize,
    gens: Vec<Gen>,
    elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, u32>,
    length: Vec<u32>,
    /// `lmul[k][i]` is the index of `gens[k] · elements[i]`.
    lmul: Vec<Vec<u32>>,
    rmul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

impl CoxeterTables {
    /// The whole of `W_n`.
    pub fn full(n: usize) -> Self {
        Self::generated_by(n, &Gen::all(n).collect::<Vec<_>>())
    }

    /// The parabolic subgroup of `W_n` generated by `gens`.
    pub fn generated_by(n: usize, gens: &[Gen]) -> Self {
        let e = SignedPerm::identity(n);
        let mut elements = vec![e];
        let mut seen = HashMap::from([(e, ())]);
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for &g in gens {
                let x = w.mul_gen_right(g);
                if seen.insert(x, ()).is_none() {
                    elements.push(x);
                    queue.push_back(x);
                }
            }
        }
        elements.sort_by_key(|w| (w.length(), index_of(w)));
        let index: HashMap<SignedPerm, u32> =
            elements.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect();
        let length = elements.iter().map(|w| w.length() as u32).collect();
        let lmul = gens
            .iter()
            .map(|&g| elements.iter().map(|w| index[&w.mul_gen_left(g)]).collect())
            .collect();
        let rmul = gens
            .iter()
            .map(|&g| elements.iter().map(|w| index[&w.mul_gen_right(g)]).collect())
            .collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        CoxeterTables { rank: n, gens: gens.to_vec(), elements, index, length, lmul, rmul, inverse }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &SignedPerm {
        &self.elements[i as usize]
    }

    pub fn index(&self, w: &SignedPerm) -> Option<u32> {
        self.index.get(w).copied()
    }

    #[inline]
    pub fn length(&self, i: u32) -> u32 {
        self.length[i as usize]
    }

    /// `gens[k] · w`.
    #[inline]
    pub fn lmul(&self, k: usize, i: u32) -> u32 {
        self.lmul[k][i as usize]
    }

    #[inline]
    pub fn rmul(&self, k: usize, i: u32) -> u32 {
        self.rmul[k][i as usize]
    }

    #[inline]
    pub fn inverse(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    /// Whether `gens[k] · w < w`.
    #[inline]
    pub fn is_left_descent(&self, k: usize, i: u32) -> bool {
        self.length(self.lmul(k, i)) < self.length(i)
    }
}

//! The cellular maps `ε` on `W_J = S_n` and `ψ` on `W_K = W_{n-1}`, their
//! left extensions to `W_n`, the orbits of the group they generate, and the
//! Vogan classes obtained by refining the `R^Ξ` fibers.
//!
//! Both maps cycle the left cells inside each two-sided cell of the
//! parabolic subgroup while staying in the same right cell: an element with
//! insertion tableau `P` and recording tableau `Q` is sent to the element
//! with insertion tableau `P` and the next recording tableau of that shape.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use crate::area::in_area_reduced;
use crate::descent::rxi_partition;
use crate::error::{Error, Result};
use crate::graph::union_find_labels;
use crate::group::{
    coset_decompose, enumerate, index_of, CoxeterTables, Gen, Parabolic, SignedPerm, WeightFunction,
};
use crate::kl::{DescentPolicy, KLTable};
use crate::partition::GroupPartition;
use crate::tableau::{
    canonical_element, lehmer_rank, lehmer_unrank, rs_classic, rs_classic_inverse, rs_generalized,
    rs_generalized_inverse, shape, Bitableau, StandardTableau,
};

/// How the left cells inside a two-sided cell are ordered before cycling.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum OrderPolicy {
    /// Lexicographic on the row reading word (rows bottom to top) of the recording tableau.
    #[default]
    RowReading,
    /// Lexicographic on the column reading word (columns left to right, each bottom to top).
    ColumnReading,
    /// The row reading order, reversed.
    ReverseRowReading,
}

fn row_reading(t: &StandardTableau) -> Vec<u8> {
    t.rows().iter().rev().flatten().copied().collect()
}

fn column_reading(t: &StandardTableau) -> Vec<u8> {
    let rows = t.rows();
    let width = rows.first().map_or(0, Vec::len);
    (0..width).flat_map(|j| rows.iter().rev().filter_map(move |r| r.get(j).copied())).collect()
}

fn reading_key(policy: OrderPolicy, parts: &[&StandardTableau]) -> Vec<u8> {
    let mut out = Vec::new();
    for t in parts {
        out.extend(match policy {
            OrderPolicy::ColumnReading => column_reading(t),
            _ => row_reading(t),
        });
        out.push(0);
    }
    out
}

/// Sends each recording tableau to the next one of the same shape.
fn successor_map<R, S, K>(
    recordings: impl IntoIterator<Item = R>,
    shape_of: impl Fn(&R) -> S,
    key: impl Fn(&R) -> K,
    reverse: bool,
) -> HashMap<R, R>
where
    R: Clone + Eq + Hash,
    S: Eq + Hash,
    K: Ord,
{
    let mut by_shape: HashMap<S, Vec<R>> = HashMap::new();
    for r in recordings {
        by_shape.entry(shape_of(&r)).or_default().push(r);
    }
    let mut next = HashMap::new();
    for mut list in by_shape.into_values() {
        list.sort_by_key(|r| key(r));
        list.dedup();
        if reverse {
            list.reverse();
        }
        for (i, r) in list.iter().enumerate() {
            next.insert(r.clone(), list[(i + 1) % list.len()].clone());
        }
    }
    next
}

/// A bijection `δ: W_I → W_I` stored over the parabolic's own indices:
/// Lehmer rank for `J`, the canonical index of `W_{n-1}` for `K`.
#[derive(Clone, Debug)]
pub struct CellularMap {
    subset: Parabolic,
    n: usize,
    policy: OrderPolicy,
    elements: Vec<SignedPerm>,
    mapping: Vec<u32>,
}

impl CellularMap {
    pub fn subset(&self) -> Parabolic {
        self.subset
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> OrderPolicy {
        self.policy
    }

    /// Elements of `W_I` as elements of `W_n`, by local index.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn mapping(&self) -> &[u32] {
        &self.mapping
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn local_index(&self, u: &SignedPerm) -> usize {
        match self.subset {
            Parabolic::J => lehmer_rank(&unsigned_window(u)),
            Parabolic::K => index_of(&u.restrict_to(self.n - 1)),
        }
    }

    pub fn apply(&self, u: &SignedPerm) -> SignedPerm {
        self.elements[self.mapping[self.local_index(u)] as usize]
    }

    /// Generators of `I` inside `W_n`.
    pub fn generators(&self) -> Vec<Gen> {
        match self.subset {
            Parabolic::J => (1..self.n).map(Gen::s).collect(),
            Parabolic::K => (0..self.n - 1).map(|i| Gen(i as u8)).collect(),
        }
    }
}

fn unsigned_window(u: &SignedPerm) -> Vec<u8> {
    u.window().iter().map(|&x| x as u8).collect()
}

fn check_rank(n: usize) -> Result<()> {
    if !(2..=crate::group::MAX_ENUM_RANK).contains(&n) {
        return Err(Error::InvalidRank(n, "2..=7"));
    }
    Ok(())
}

/// `ψ` is only well defined when the weight restricted to `W_{n-1}` is asymptotic.
pub fn check_regime(n: usize, weight: WeightFunction) -> Result<()> {
    if !weight.slope_exceeds(n as i64 - 2) {
        return Err(Error::Regime(format!(
            "the maps need b/a > n-2; got {weight} for n = {n} ({} regime)",
            weight.regime(n)
        )));
    }
    Ok(())
}

/// `(J, ε)`: cycles the `Q`-fibers of each shape, keeping `P`.
pub fn build_epsilon(n: usize, policy: OrderPolicy) -> Result<CellularMap> {
    check_rank(n)?;
    let count: usize = (1..=n).product();
    let perms: Vec<Vec<u8>> = (0..count).map(|r| lehmer_unrank(n, r)).collect();
    let pairs: Vec<(StandardTableau, StandardTableau)> = perms.par_iter().map(|u| rs_classic(u)).collect();
    let next = successor_map(
        pairs.iter().map(|(_, q)| q.clone()),
        StandardTableau::shape,
        |q| reading_key(policy, &[q]),
        policy == OrderPolicy::ReverseRowReading,
    );
    let mapping = pairs
        .par_iter()
        .map(|(p, q)| rs_classic_inverse(p, &next[q]).map(|u| lehmer_rank(&u) as u32))
        .collect::<Result<Vec<_>>>()?;
    let elements = perms
        .iter()
        .map(|u| SignedPerm::from_window(&u.iter().map(|&x| x as i8).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    finish(CellularMap { subset: Parabolic::J, n, policy, elements, mapping })
}

/// `(K, ψ)`: cycles the `B_{n-1}`-fibers of each bishape, keeping `A_{n-1}`.
pub fn build_psi(n: usize, weight: WeightFunction, policy: OrderPolicy) -> Result<CellularMap> {
    check_rank(n)?;
    check_regime(n, weight)?;
    let small = enumerate(n - 1)?;
    let pairs: Vec<(Bitableau, Bitableau)> = small.par_iter().map(rs_generalized).collect();
    let next = successor_map(
        pairs.iter().map(|(_, b)| b.clone()),
        Bitableau::shape,
        |b| reading_key(policy, &[&b.plus, &b.minus]),
        policy == OrderPolicy::ReverseRowReading,
    );
    let mapping = pairs
        .par_iter()
        .map(|(a, b)| rs_generalized_inverse(a, &next[b]).map(|u| index_of(&u) as u32))
        .collect::<Result<Vec<_>>>()?;
    let elements = small.iter().map(|u| u.extend_to(n)).collect();
    finish(CellularMap { subset: Parabolic::K, n, policy, elements, mapping })
}

fn finish(map: CellularMap) -> Result<CellularMap> {
    let mut hit = vec![false; map.mapping.len()];
    for &j in &map.mapping {
        if std::mem::replace(&mut hit[j as usize], true) {
            return Err(Error::InvariantViolation(format!("the {} map is not a bijection", map.subset)));
        }
    }
    Ok(map)
}

/// `δ^L(xu) = x δ(u)`; the coset representative is preserved.
pub fn left_extend(map: &CellularMap, w: &SignedPerm) -> SignedPerm {
    let d = coset_decompose(w, map.subset);
    let out = d.rep.mul(&map.apply(&d.part));
    assert_eq!(coset_decompose(&out, map.subset).rep, d.rep, "left extension moved the coset of {w}");
    out
}

/// Left and right cells of `W_I`, over the map's local indices.
#[derive(Clone, Debug)]
pub struct CellOracle {
    pub left: GroupPartition,
    pub right: GroupPartition,
}

impl CellOracle {
    /// Cells read off (generalised) Robinson–Schensted: left cells are the
    /// recording fibers, right cells the insertion fibers.
    pub fn from_rs(map: &CellularMap) -> Self {
        match map.subset {
            Parabolic::J => {
                let pq: Vec<_> = map.elements.iter().map(|u| rs_classic(&unsigned_window(u))).collect();
                let left: Vec<_> = pq.iter().map(|(_, q)| q.clone()).collect();
                let right: Vec<_> = pq.iter().map(|(p, _)| p.clone()).collect();
                CellOracle { left: GroupPartition::from_labels(map.n, &left), right: GroupPartition::from_labels(map.n, &right) }
            }
            Parabolic::K => {
                let ab: Vec<_> = map.elements.iter().map(|u| rs_generalized(&u.restrict_to(map.n - 1))).collect();
                let left: Vec<_> = ab.iter().map(|(_, b)| b.clone()).collect();
                let right: Vec<_> = ab.iter().map(|(a, _)| a.clone()).collect();
                CellOracle { left: GroupPartition::from_labels(map.n, &left), right: GroupPartition::from_labels(map.n, &right) }
            }
        }
    }

    /// Cells computed in the Hecke algebra of `W_I` with the restricted weight.
    pub fn from_kl(map: &CellularMap, weight: WeightFunction) -> Result<Self> {
        let tables = CoxeterTables::generated_by(map.n, &map.generators());
        if tables.len() != map.len() {
            return Err(Error::InvariantViolation("parabolic subgroup has the wrong order".into()));
        }
        let kl = KLTable::compute(tables, weight, DescentPolicy::default())?;
        let mut left = vec![0u32; map.len()];
        let mut right = vec![0u32; map.len()];
        let (l, r) = (kl.left_cell_labels(), kl.right_cell_labels());
        for (i, u) in kl.tables().elements().iter().enumerate() {
            let j = map.local_index(u);
            left[j] = l[i];
            right[j] = r[i];
        }
        Ok(CellOracle { left: GroupPartition::from_labels(map.n, &left), right: GroupPartition::from_labels(map.n, &right) })
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AdmissibilityReport {
    pub violations: Vec<String>,
}

impl AdmissibilityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks (A1) left cells map onto left cells, (A3) `u` and `δ(u)` share a
/// right cell, and (A4) each right cell is a single `δ`-cycle.
pub fn verify_admissible(map: &CellularMap, oracle: &CellOracle) -> AdmissibilityReport {
    let mut violations = Vec::new();
    let name = map.subset;
    let image_class = |u: usize| oracle.left.class_of(map.mapping[u] as usize);
    let sizes = oracle.left.sizes();
    for cell in oracle.left.classes() {
        let target = image_class(cell[0] as usize);
        if cell.iter().any(|&u| image_class(u as usize) != target) || sizes[target as usize] != cell.len() {
            violations.push(format!("A1 ({name}): the image of the left cell of {} is not a left cell", map.elements[cell[0] as usize]));
        }
    }
    for (u, &v) in map.mapping.iter().enumerate() {
        if oracle.right.class_of(u) != oracle.right.class_of(v as usize) {
            violations.push(format!("A3 ({name}): {} and its image lie in different right cells", map.elements[u]));
        }
    }
    let right_sizes = oracle.right.sizes();
    for cell in oracle.right.classes() {
        let start = cell[0] as usize;
        let mut cycle = 1;
        let mut at = map.mapping[start] as usize;
        while at != start {
            at = map.mapping[at] as usize;
            cycle += 1;
        }
        if cycle != right_sizes[oracle.right.class_of(start) as usize] {
            violations.push(format!("A4 ({name}): the cycle of {} does not exhaust its right cell", map.elements[start]));
        }
    }
    AdmissibilityReport { violations }
}

/// `ε^L` and `ψ^L` as permutations of the canonical indices of `W_n`.
#[derive(Clone, Debug)]
pub struct XiMaps {
    n: usize,
    weight: WeightFunction,
    pub eps: Vec<u32>,
    pub psi: Vec<u32>,
}

impl XiMaps {
    pub fn new(n: usize, weight: WeightFunction, policy: OrderPolicy) -> Result<Self> {
        let epsilon = build_epsilon(n, policy)?;
        let psi = build_psi(n, weight, policy)?;
        let elements = enumerate(n)?;
        let extend = |map: &CellularMap| -> Vec<u32> {
            elements.par_iter().map(|w| index_of(&left_extend(map, w)) as u32).collect()
        };
        Ok(XiMaps { n, weight, eps: extend(&epsilon), psi: extend(&psi) })
    }

    /// The maps do not depend on the weight inside the valid regime.
    pub fn reweighted(&self, weight: WeightFunction) -> Result<Self> {
        check_regime(self.n, weight)?;
        Ok(XiMaps { weight, ..self.clone() })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> WeightFunction {
        self.weight
    }
}

/// Orbits of the group generated by the given permutations of `0..len`.
pub fn orbits(n: usize, maps: &[&[u32]]) -> GroupPartition {
    let len = maps.first().map_or(0, |m| m.len());
    let pairs = maps.iter().flat_map(|m| m.iter().enumerate().map(|(i, &j)| (i as u32, j)));
    GroupPartition::from_labels(n, &union_find_labels(len, pairs))
}

/// `orb^L(w) = {y : y⁻¹ ∈ orb^R(w⁻¹)}`, from the right orbits.
pub fn inverse_partition(n: usize, right: &GroupPartition) -> Result<GroupPartition> {
    let labels: Vec<u32> =
        enumerate(n)?.iter().map(|w| right.class_of(index_of(&w.inverse()))).collect();
    Ok(GroupPartition::from_labels(n, &labels))
}

#[derive(Clone, Debug)]
pub struct XiOrbits {
    /// `orb^R_Ξ`.
    pub right: GroupPartition,
    /// `orb^L_Ξ`.
    pub left: GroupPartition,
}

pub fn xi_orbits_from(maps: &XiMaps) -> Result<XiOrbits> {
    let right = orbits(maps.n, &[&maps.eps, &maps.psi]);
    let left = inverse_partition(maps.n, &right)?;
    Ok(XiOrbits { right, left })
}

pub fn xi_orbits(n: usize, weight: WeightFunction) -> Result<XiOrbits> {
    xi_orbits_from(&XiMaps::new(n, weight, OrderPolicy::default())?)
}

#[derive(Clone, Debug)]
pub struct VoganRun {
    pub n: usize,
    pub weight: WeightFunction,
    /// `≈_0, ≈_1, ...`; the last entry equals `final_classes`.
    pub rounds: Vec<GroupPartition>,
    pub final_classes: GroupPartition,
}

#[derive(Serialize)]
pub struct VoganSummary {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub num_classes: usize,
    pub round_count: usize,
}

impl VoganRun {
    pub fn summary(&self) -> VoganSummary {
        VoganSummary {
            n: self.n,
            a: self.weight.a,
            b: self.weight.b,
            num_classes: self.final_classes.num_classes(),
            round_count: self.rounds.len(),
        }
    }
}

/// Splits every class by the classes of the images under all maps at once,
/// until nothing changes.
pub fn refine(n: usize, start: GroupPartition, maps: &[&[u32]]) -> Vec<GroupPartition> {
    let mut rounds = vec![start];
    loop {
        let cur = rounds.last().unwrap();
        let keys: Vec<Vec<u32>> = (0..cur.len())
            .into_par_iter()
            .map(|i| {
                let mut k = Vec::with_capacity(maps.len() + 1);
                k.push(cur.class_of(i));
                k.extend(maps.iter().map(|m| cur.class_of(m[i] as usize)));
                k
            })
            .collect();
        let next = GroupPartition::from_labels(n, &keys);
        if next.num_classes() == cur.num_classes() {
            return rounds;
        }
        rounds.push(next);
    }
}

/// Refinement using one map per round, cycling through the maps until a
/// full pass changes nothing.
pub fn refine_alternating(n: usize, start: GroupPartition, maps: &[&[u32]]) -> GroupPartition {
    let mut cur = start;
    let mut stable = 0;
    let mut k = 0;
    while stable < maps.len() {
        let m = maps[k % maps.len()];
        let keys: Vec<(u32, u32)> = (0..cur.len()).map(|i| (cur.class_of(i), cur.class_of(m[i] as usize))).collect();
        let next = GroupPartition::from_labels(n, &keys);
        stable = if next.num_classes() == cur.num_classes() { stable + 1 } else { 0 };
        cur = next;
        k += 1;
    }
    cur
}

pub fn vogan_classes_from(maps: &XiMaps) -> Result<VoganRun> {
    let start = rxi_partition(maps.n, maps.weight)?;
    let rounds = refine(maps.n, start, &[&maps.eps, &maps.psi]);
    let final_classes = rounds.last().unwrap().clone();
    Ok(VoganRun { n: maps.n, weight: maps.weight, rounds, final_classes })
}

pub fn vogan_classes(n: usize, weight: WeightFunction) -> Result<VoganRun> {
    vogan_classes_from(&XiMaps::new(n, weight, OrderPolicy::default())?)
}

/// Class dump: one `window<TAB>class` line per element.
pub fn partition_tsv(n: usize, partition: &GroupPartition) -> Result<String> {
    let mut out = String::from("element\tclass\n");
    for (i, w) in enumerate(n)?.iter().enumerate() {
        out.push_str(&format!("{w}\t{}\n", partition.class_of(i)));
    }
    Ok(out)
}

/// Closed form of property (★): `w ∉ rArea_n`, or `w(n) > 0` and `w⁻¹(n) > 0`.
pub fn star_closed(w: &SignedPerm) -> bool {
    let n = w.rank();
    !in_area_reduced(w) || (w.at(n) > 0 && w.inverse().at(n) > 0)
}

/// Property (★) from its definition: the `Ξ`-orbit of `z` meets
/// `orb^L_Ξ(w_{sh(z)'})`. Returns one flag per element in canonical order.
pub fn star_by_definition(orbits: &XiOrbits) -> Result<Vec<bool>> {
    let n = orbits.right.rank();
    let elements = enumerate(n)?;
    // Which (right orbit, left orbit) pairs meet.
    let mut meets: HashMap<(u32, u32), ()> = HashMap::new();
    for i in 0..elements.len() {
        meets.insert((orbits.right.class_of(i), orbits.left.class_of(i)), ());
    }
    let mut cache: BTreeMap<crate::tableau::Bipartition, u32> = BTreeMap::new();
    Ok(elements
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let sh = shape(z);
            let target = *cache
                .entry(sh.clone())
                .or_insert_with(|| orbits.left.class_of(index_of(&canonical_element(&sh.conjugate()))));
            meets.contains_key(&(orbits.right.class_of(i), target))
        })
        .collect())
}

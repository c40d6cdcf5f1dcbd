//! The combinatorial R-matrix ι : B₁⊗B₂ → B₂⊗B₁ and its energy function,
//! plus the pass-through machinery moving one tensor factor leftward.
//!
//! For |b₁| ≥ |b₂| the isomorphism and energy come from the dot-pairing
//! rules: each dot of the second column is connected to a partner in the
//! first column, wrapping cyclically when none is available ("winding").
//! The energy is -(#windings) for the Column flavor and +(#windings) for
//! the Row flavor, normalized so that H = 0 on (1..k)⊗(1..l) and H = l on
//! 1^k⊗1^l (k ≥ l). For |b₁| < |b₂| both are obtained by propagating the
//! defining recursion over the connected affine crystal graph from the
//! anchor (1..k)⊗(1..l) ↦ (1..l)⊗(1..k).

use crate::crystal::{enumerate_basis, highest_element, CrystalElement, Flavor, TensorWord};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Image of b₁⊗b₂ under ι together with the energy H(b₁,b₂).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RResult {
    /// b₂′: the new left factor, of size |b₂|.
    pub out_left: CrystalElement,
    /// b₁′: the new right factor, of size |b₁|.
    pub out_right: CrystalElement,
    pub energy: i64,
}

struct Pairing {
    /// Letters of b₁ paired, in processing order of b₂'s dots.
    partners: Vec<u32>,
    /// Letters of b₁ left unpaired.
    unpaired: Vec<u32>,
    windings: usize,
}

/// Pair the dots of b₂ (processed in the order given by `order`, indices
/// into b₂'s entries) with dots of b₁. Requires |b₁| ≥ |b₂|.
fn pair_dots(b1: &CrystalElement, b2: &CrystalElement, order: &[usize]) -> Pairing {
    let left = b1.entries();
    let mut used = vec![false; left.len()];
    let mut partners = Vec::with_capacity(order.len());
    let mut windings = 0usize;
    for &t in order {
        let p = b2.entries()[t];
        let choice = match b1.flavor() {
            // partner: highest dot not higher than p, i.e. min letter >= p;
            // wrapping picks the highest dot overall
            Flavor::Column => {
                let direct = (0..left.len())
                    .filter(|&j| !used[j] && left[j] >= p)
                    .min_by_key(|&j| left[j]);
                match direct {
                    Some(j) => (j, false),
                    None => {
                        let j = (0..left.len())
                            .filter(|&j| !used[j])
                            .min_by_key(|&j| left[j])
                            .expect("b1 has spare dots");
                        (j, true)
                    }
                }
            }
            // partner: lowest dot strictly higher than p, i.e. max letter < p;
            // wrapping picks the lowest dot overall
            Flavor::Row => {
                let direct = (0..left.len())
                    .filter(|&j| !used[j] && left[j] < p)
                    .max_by_key(|&j| left[j]);
                match direct {
                    Some(j) => (j, false),
                    None => {
                        let j = (0..left.len())
                            .filter(|&j| !used[j])
                            .max_by_key(|&j| left[j])
                            .expect("b1 has spare dots");
                        (j, true)
                    }
                }
            }
        };
        used[choice.0] = true;
        partners.push(left[choice.0]);
        if choice.1 {
            windings += 1;
        }
    }
    let unpaired = (0..left.len()).filter(|&j| !used[j]).map(|j| left[j]).collect();
    Pairing { partners, unpaired, windings }
}

fn energy_of_windings(flavor: Flavor, windings: usize) -> i64 {
    match flavor {
        Flavor::Column => -(windings as i64),
        Flavor::Row => windings as i64,
    }
}

fn check_compatible(b1: &CrystalElement, b2: &CrystalElement) -> Result<()> {
    if b1.flavor() != b2.flavor() || b1.rank() != b2.rank() {
        return Err(Error::domain("R-matrix needs factors of equal flavor and rank"));
    }
    Ok(())
}

fn direct_r_map(b1: &CrystalElement, b2: &CrystalElement, order: &[usize]) -> Result<RResult> {
    let pairing = pair_dots(b1, b2, order);
    let mut left_entries = pairing.partners.clone();
    left_entries.sort_unstable();
    let mut right_entries = b2.entries().to_vec();
    right_entries.extend_from_slice(&pairing.unpaired);
    right_entries.sort_unstable();
    let out_left = CrystalElement::new(b1.flavor(), b1.rank(), left_entries)?;
    let out_right = CrystalElement::new(b1.flavor(), b1.rank(), right_entries)?;
    Ok(RResult {
        out_left,
        out_right,
        energy: energy_of_windings(b1.flavor(), pairing.windings),
    })
}

/// The unique crystal isomorphism image of b₁⊗b₂ and the energy, using the
/// direct pairing rule for |b₁| ≥ |b₂| and graph propagation otherwise.
pub fn r_map(b1: &CrystalElement, b2: &CrystalElement) -> Result<RResult> {
    check_compatible(b1, b2)?;
    if b1.size() >= b2.size() {
        let order: Vec<usize> = (0..b2.size()).collect();
        direct_r_map(b1, b2, &order)
    } else {
        let table = r_table(b1.flavor(), b1.rank(), b1.size(), b2.size())?;
        Ok(table
            .get(&(b1.clone(), b2.clone()))
            .expect("propagation covers the whole product")
            .clone())
    }
}

/// Rule-drawing hook with an explicit processing order of b₂'s dots
/// (a permutation of 0..|b₂|); the image and energy are order-independent,
/// which tests exercise with randomized orders. Requires |b₁| ≥ |b₂|.
pub fn r_map_ordered(
    b1: &CrystalElement,
    b2: &CrystalElement,
    order: &[usize],
) -> Result<RResult> {
    check_compatible(b1, b2)?;
    if b1.size() < b2.size() {
        return Err(Error::domain("ordered rule needs |b1| >= |b2|"));
    }
    let mut seen = vec![false; b2.size()];
    if order.len() != b2.size() || order.iter().any(|&t| t >= b2.size() || std::mem::replace(&mut seen[t], true)) {
        return Err(Error::domain("order must be a permutation of b2's dots"));
    }
    direct_r_map(b1, b2, order)
}

/// H(ẽ₀ x) - H(x) per the defining three-case recursion, where x has
/// components (x₁, x₂) and image components (g₁, g₂).
fn e0_delta(x1: &CrystalElement, x2: &CrystalElement, g1: &CrystalElement, g2: &CrystalElement) -> i64 {
    let src_left = x1.phi(0) >= x2.eps(0);
    let img_left = g1.phi(0) >= g2.eps(0);
    if src_left && img_left {
        1
    } else if !src_left && !img_left {
        -1
    } else {
        0
    }
}

fn apply2_f(a: &CrystalElement, b: &CrystalElement, i: u32) -> Option<(CrystalElement, CrystalElement)> {
    if a.phi(i) > b.eps(i) {
        a.apply_f(i).map(|x| (x, b.clone()))
    } else {
        b.apply_f(i).map(|x| (a.clone(), x))
    }
}

fn apply2_e(a: &CrystalElement, b: &CrystalElement, i: u32) -> Option<(CrystalElement, CrystalElement)> {
    if a.phi(i) >= b.eps(i) {
        a.apply_e(i).map(|x| (x, b.clone()))
    } else {
        b.apply_e(i).map(|x| (a.clone(), x))
    }
}

type Key = (CrystalElement, CrystalElement);

/// Isomorphism and energy on every pair of B(k)⊗B(l), computed by
/// breadth-first propagation of the energy recursion over the affine
/// crystal graph, anchored at (1..k)⊗(1..l) ↦ (1..l)⊗(1..k) with H = 0
/// (Column) resp. H = min(k,l) (Row). Works for all k, l and serves as the
/// independent oracle for the pairing rules when k ≥ l.
pub fn r_table(
    flavor: Flavor,
    rank: u32,
    k: usize,
    l: usize,
) -> Result<BTreeMap<Key, RResult>> {
    let b1 = enumerate_basis(flavor, rank, k)?;
    let b2 = enumerate_basis(flavor, rank, l)?;
    let total = b1.len() * b2.len();

    let anchor = (
        highest_element(flavor, rank, k),
        highest_element(flavor, rank, l),
    );
    let anchor_img = (
        highest_element(flavor, rank, l),
        highest_element(flavor, rank, k),
    );
    let anchor_h = match flavor {
        Flavor::Column => 0,
        Flavor::Row => k.min(l) as i64,
    };

    let mut table: HashMap<Key, RResult> = HashMap::with_capacity(total);
    table.insert(
        anchor.clone(),
        RResult { out_left: anchor_img.0, out_right: anchor_img.1, energy: anchor_h },
    );
    let mut queue = VecDeque::new();
    queue.push_back(anchor);

    while let Some(key) = queue.pop_front() {
        let cur = table.get(&key).expect("queued states are tabled").clone();
        let (x1, x2) = (&key.0, &key.1);
        let (g1, g2) = (&cur.out_left, &cur.out_right);
        for i in 0..rank {
            // ẽ_i edge
            let src_img = apply2_e(x1, x2, i);
            let dst_img = apply2_e(g1, g2, i);
            match (src_img, dst_img) {
                (Some((y1, y2)), Some((h1, h2))) => {
                    let dh = if i == 0 { e0_delta(x1, x2, g1, g2) } else { 0 };
                    let res = RResult { out_left: h1, out_right: h2, energy: cur.energy + dh };
                    insert_checked(&mut table, &mut queue, (y1, y2), res);
                }
                (None, None) => {}
                _ => panic!("ẽ_{i} defined on exactly one side of the isomorphism"),
            }
            // f̃_i edge: H(y) = H(x) - delta evaluated at y
            let src_img = apply2_f(x1, x2, i);
            let dst_img = apply2_f(g1, g2, i);
            match (src_img, dst_img) {
                (Some((y1, y2)), Some((h1, h2))) => {
                    let dh = if i == 0 { e0_delta(&y1, &y2, &h1, &h2) } else { 0 };
                    let res = RResult {
                        out_left: h1,
                        out_right: h2,
                        energy: cur.energy - dh,
                    };
                    insert_checked(&mut table, &mut queue, (y1, y2), res);
                }
                (None, None) => {}
                _ => panic!("f̃_{i} defined on exactly one side of the isomorphism"),
            }
        }
    }

    // the anchor must reach everything; anything else is a connectivity bug
    assert_eq!(table.len(), total, "tensor product not fully propagated");
    Ok(table.into_iter().collect())
}

fn insert_checked(
    table: &mut HashMap<Key, RResult>,
    queue: &mut VecDeque<Key>,
    key: Key,
    value: RResult,
) {
    match table.get(&key) {
        Some(existing) => assert_eq!(
            existing, &value,
            "energy recursion produced conflicting values"
        ),
        None => {
            table.insert(key.clone(), value);
            queue.push_back(key);
        }
    }
}

/// Energy values H(b₁,b₂) on every pair of B(k)⊗B(l), as a canonical map.
pub fn energy_table(
    flavor: Flavor,
    rank: u32,
    k: usize,
    l: usize,
) -> Result<BTreeMap<Key, i64>> {
    Ok(r_table(flavor, rank, k, l)?
        .into_iter()
        .map(|(key, res)| (key, res.energy))
        .collect())
}

/// Trace of moving factor i of a word leftward through factors i-1,..,1 by
/// successive R-maps.
#[derive(Debug, Clone)]
pub struct PassThroughDiagram {
    /// b_i^{(i)} = b_i, b_i^{(i-1)}, ..., b_i^{(1)} in that order.
    pub intermediates: Vec<CrystalElement>,
    /// b_1', ..., b_{i-1}'.
    pub outputs: Vec<CrystalElement>,
    /// h_1, ..., h_{i-1} with h_j = H(b_j, b_i^{(j+1)}).
    pub energies: Vec<i64>,
}

impl PassThroughDiagram {
    pub fn energy_sum(&self) -> i64 {
        self.energies.iter().sum()
    }
}

/// Move factor `i` (1-based) of the word to the front, recording all
/// intermediates and energies. i = 1 gives an empty diagram.
pub fn pass_through(word: &TensorWord, i: usize) -> Result<PassThroughDiagram> {
    if i == 0 || i > word.len() {
        return Err(Error::domain(format!(
            "component index {i} out of range 1..={}",
            word.len()
        )));
    }
    let factors = word.factors();
    let mut cur = factors[i - 1].clone();
    let mut intermediates = vec![cur.clone()];
    let mut outputs_rev = Vec::new();
    let mut energies_rev = Vec::new();
    for j in (0..i - 1).rev() {
        let res = r_map(&factors[j], &cur)?;
        energies_rev.push(res.energy);
        outputs_rev.push(res.out_right);
        cur = res.out_left;
        intermediates.push(cur.clone());
    }
    outputs_rev.reverse();
    energies_rev.reverse();
    Ok(PassThroughDiagram {
        intermediates,
        outputs: outputs_rev,
        energies: energies_rev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(n: u32, e: &[u32]) -> CrystalElement {
        CrystalElement::new(Flavor::Column, n, e.to_vec()).unwrap()
    }

    fn row(n: u32, e: &[u32]) -> CrystalElement {
        CrystalElement::new(Flavor::Row, n, e.to_vec()).unwrap()
    }

    #[test]
    fn column_r_map_examples() {
        // (135)⊗(23) -> (35)⊗(123), no winding
        let r = r_map(&col(5, &[1, 3, 5]), &col(5, &[2, 3])).unwrap();
        assert_eq!(r.out_left.entries(), &[3, 5]);
        assert_eq!(r.out_right.entries(), &[1, 2, 3]);
        assert_eq!(r.energy, 0);
        // (124)⊗(35) -> (14)⊗(235), one winding
        let r = r_map(&col(5, &[1, 2, 4]), &col(5, &[3, 5])).unwrap();
        assert_eq!(r.out_left.entries(), &[1, 4]);
        assert_eq!(r.out_right.entries(), &[2, 3, 5]);
        assert_eq!(r.energy, -1);
    }

    #[test]
    fn row_r_map_examples() {
        // (112)⊗(23) -> (12)⊗(123), no winding
        let r = r_map(&row(3, &[1, 1, 2]), &row(3, &[2, 3])).unwrap();
        assert_eq!(r.out_left.entries(), &[1, 2]);
        assert_eq!(r.out_right.entries(), &[1, 2, 3]);
        assert_eq!(r.energy, 0);
        // (223)⊗(12) -> (23)⊗(122), two windings
        let r = r_map(&row(3, &[2, 2, 3]), &row(3, &[1, 2])).unwrap();
        assert_eq!(r.out_left.entries(), &[2, 3]);
        assert_eq!(r.out_right.entries(), &[1, 2, 2]);
        assert_eq!(r.energy, 2);
    }

    #[test]
    fn normalization_anchors() {
        for (k, l) in [(2, 2), (3, 1), (3, 2)] {
            let r = r_map(&col(4, &(1..=k).collect::<Vec<_>>()), &col(4, &(1..=l).collect::<Vec<_>>())).unwrap();
            assert_eq!(r.energy, 0, "column anchor k={k} l={l}");
            let r = r_map(&row(4, &vec![1; k as usize]), &row(4, &vec![1; l as usize])).unwrap();
            assert_eq!(r.energy, l as i64, "row anchor k={k} l={l}");
        }
    }

    #[test]
    fn energy_table_small_column() {
        // B(1)⊗B(2) at rank 3: H = 1 exactly on (1)⊗(23)
        let t = energy_table(Flavor::Column, 3, 1, 2).unwrap();
        assert_eq!(t.len(), 9);
        for ((b1, b2), h) in &t {
            let special = b1.entries() == [1] && b2.entries() == [2, 3];
            assert_eq!(*h, i64::from(special), "H({b1},{b2})");
        }
    }

    #[test]
    fn table_matches_rule_when_defined() {
        // row flavor, k=3 >= l=2: all 60 pairs
        let t = r_table(Flavor::Row, 3, 3, 2).unwrap();
        assert_eq!(t.len(), 60);
        for ((b1, b2), res) in &t {
            let direct = r_map(b1, b2).unwrap();
            assert_eq!(&direct, res);
        }
    }

    #[test]
    fn involution() {
        for flavor in [Flavor::Column, Flavor::Row] {
            for (k, l) in [(1usize, 2usize), (2, 1), (2, 2), (2, 3)] {
                if flavor == Flavor::Column && (k > 3 || l > 3) {
                    continue;
                }
                let b1s = enumerate_basis(flavor, 3, k).unwrap();
                let b2s = enumerate_basis(flavor, 3, l).unwrap();
                for a in &b1s {
                    for b in &b2s {
                        let r = r_map(a, b).unwrap();
                        let back = r_map(&r.out_left, &r.out_right).unwrap();
                        assert_eq!(back.out_left, *a);
                        assert_eq!(back.out_right, *b);
                        assert_eq!(back.energy, r.energy);
                    }
                }
            }
        }
    }

    #[test]
    fn pass_through_golden() {
        // column word (123)(124)(13)(45)(2), moving factor 4 to the front
        let w = TensorWord::new(vec![
            col(5, &[1, 2, 3]),
            col(5, &[1, 2, 4]),
            col(5, &[1, 3]),
            col(5, &[4, 5]),
            col(5, &[2]),
        ])
        .unwrap();
        let d = pass_through(&w, 4).unwrap();
        let inter: Vec<&[u32]> = d.intermediates.iter().map(|c| c.entries()).collect();
        assert_eq!(inter, vec![&[4, 5][..], &[1, 3], &[1, 4], &[1, 2]]);
        let outs: Vec<&[u32]> = d.outputs.iter().map(|c| c.entries()).collect();
        assert_eq!(outs, vec![&[1, 3, 4][..], &[1, 2, 3], &[4, 5]]);
        assert_eq!(d.energies, vec![-1, 0, -2]);

        let empty = pass_through(&w, 1).unwrap();
        assert!(empty.energies.is_empty() && empty.outputs.is_empty());
        assert!(pass_through(&w, 6).is_err());
    }

    #[test]
    fn ordered_rule_validation() {
        let a = col(4, &[1, 2, 3]);
        let b = col(4, &[2, 4]);
        assert!(r_map_ordered(&a, &b, &[0, 1]).is_ok());
        assert!(r_map_ordered(&a, &b, &[1, 1]).is_err());
        assert!(r_map_ordered(&a, &b, &[0]).is_err());
        assert!(r_map_ordered(&b, &a, &[0, 1, 2]).is_err());
        let mismatched = row(4, &[1, 1]);
        assert!(r_map(&a, &mismatched).is_err());
    }
}

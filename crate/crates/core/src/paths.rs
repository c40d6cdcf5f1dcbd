//! Ground-state paths, one-dimensional configuration sums, the A_N
//! normalization, and finite-N approximations to branching functions.
//!
//! Paths follow the right-to-left convention b_L ⊗ ... ⊗ b_1: path
//! position j (1-based, from the right) lives at word index L - j. The
//! grading ω_N(b) = Σ_{j=1}^{L} j·(H(b_{j+1},b_j) - H(p_{j+1},p_j)) with
//! b_{L+1} = p_{L+1} measures energy relative to the ground-state path p.

use crate::crystal::{CrystalElement, Flavor, TensorWord};
use crate::error::{Error, Result};
use crate::kostka::{kostka_poly, KostkaMethod};
use crate::partition::{Partition, SkewShape};
use crate::poly::LaurentPoly;
use crate::rmatrix::r_map;
use crate::tableaux::{enumerate_tableaux, tableau_to_word};

/// Parameters of a finite path space: level-k row paths of length nN+i, or
/// level-1 column paths built from k-columns, of length nN.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSpec {
    pub flavor: Flavor,
    pub rank: u32,
    pub level: u32,
    pub residue: u32,
    pub periods: u32,
}

impl PathSpec {
    pub fn new(flavor: Flavor, rank: u32, level: u32, residue: u32, periods: u32) -> Result<Self> {
        if rank < 2 {
            return Err(Error::domain("rank must be >= 2"));
        }
        if level == 0 {
            return Err(Error::domain("level must be positive"));
        }
        match flavor {
            Flavor::Row => {
                if residue >= rank {
                    return Err(Error::domain(format!(
                        "residue {residue} out of range 0..{rank}"
                    )));
                }
            }
            Flavor::Column => {
                if level >= rank {
                    return Err(Error::domain(format!(
                        "column level {level} must satisfy 1 <= k <= n-1 = {}",
                        rank - 1
                    )));
                }
                if residue != 0 {
                    return Err(Error::domain("column paths have residue 0"));
                }
            }
        }
        Ok(PathSpec { flavor, rank, level, residue, periods })
    }

    /// Path length L = nN + i (row) or nN (column).
    pub fn length(&self) -> usize {
        (self.rank * self.periods + self.residue) as usize
    }
}

fn norm_letter(raw: i64, n: u32) -> u32 {
    let m = raw.rem_euclid(n as i64) as u32;
    if m == 0 {
        n
    } else {
        m
    }
}

/// The j-th ground-state factor (j ≥ 1): letter (i+1-j) mod n repeated k
/// times for the row flavor, the k-column with entries (n-j)k+1..(n-j+1)k
/// mod n for the column flavor.
pub fn ground_factor(spec: &PathSpec, j: u64) -> CrystalElement {
    let n = spec.rank;
    let k = spec.level as usize;
    let entries = match spec.flavor {
        Flavor::Row => {
            let letter = norm_letter(spec.residue as i64 + 1 - j as i64, n);
            vec![letter; k]
        }
        Flavor::Column => {
            let base = (n as i64 - j as i64) * spec.level as i64;
            let mut v: Vec<u32> = (1..=spec.level as i64)
                .map(|t| norm_letter(base + t, n))
                .collect();
            v.sort_unstable();
            v
        }
    };
    CrystalElement::new(spec.flavor, n, entries).expect("ground factor is valid")
}

/// Ground-state factors p_1..p_L.
pub fn ground_state_path(spec: &PathSpec) -> Vec<CrystalElement> {
    (1..=spec.length() as u64).map(|j| ground_factor(spec, j)).collect()
}

fn pair_energy(left: &CrystalElement, right: &CrystalElement) -> Result<i64> {
    Ok(r_map(left, right)?.energy)
}

/// Exact grading ω_N of a path, the word being stored left to right as
/// b_L ⊗ ... ⊗ b_1.
pub fn omega(spec: &PathSpec, word: &TensorWord) -> Result<i64> {
    let len = spec.length();
    if word.len() != len {
        return Err(Error::domain(format!(
            "word has {} factors, spec wants {len}",
            word.len()
        )));
    }
    if word.flavor() != spec.flavor || word.rank() != spec.rank {
        return Err(Error::domain("word flavor/rank does not match the spec"));
    }
    if word.factors().iter().any(|f| f.size() != spec.level as usize) {
        return Err(Error::domain("every factor must have size k"));
    }
    let factors = word.factors();
    let path = |j: usize| &factors[len - j]; // b_j, 1-based from the right
    let mut sum = 0i64;
    for j in 1..=len {
        let left_ground = ground_factor(spec, j as u64 + 1);
        let left = if j == len { &left_ground } else { path(j + 1) };
        let h_word = pair_energy(left, path(j))?;
        let h_ground = pair_energy(&left_ground, &ground_factor(spec, j as u64))?;
        sum += j as i64 * (h_word - h_ground);
    }
    Ok(sum)
}

/// A_N = Σ_{j=1}^{L-1} j·H(p_{j+1}, p_j). For row specs this equals the
/// closed form ½knN(N-1) + kNi, which is asserted.
pub fn a_norm(spec: &PathSpec) -> i64 {
    let len = spec.length() as u64;
    let mut sum = 0i64;
    for j in 1..len {
        let h = pair_energy(&ground_factor(spec, j + 1), &ground_factor(spec, j))
            .expect("ground factors are compatible");
        sum += j as i64 * h;
    }
    if spec.flavor == Flavor::Row {
        let (k, n, nn, i) = (
            spec.level as i64,
            spec.rank as i64,
            spec.periods as i64,
            spec.residue as i64,
        );
        let closed = k * n * nn * (nn - 1) / 2 + k * nn * i;
        assert_eq!(sum, closed, "row A_N disagrees with its closed form");
    }
    sum
}

/// The padded shape λ^{(N)} whose highest words the configuration sum runs
/// over; None when the padding would need negative parts (empty sum).
pub fn padded_shape(lambda: &Partition, spec: &PathSpec) -> Result<Option<Partition>> {
    let n = spec.rank as usize;
    let k = spec.level as i64;
    let nn = spec.periods as i64;
    match spec.flavor {
        Flavor::Row => {
            if lambda.len() > n {
                return Err(Error::domain(format!(
                    "λ has {} parts, rank is only {n}",
                    lambda.len()
                )));
            }
            let size = lambda.size() as i64;
            let ki = k * spec.residue as i64;
            if (size - ki).rem_euclid(spec.rank as i64) != 0 {
                return Err(Error::domain(format!(
                    "|λ| = {size} must be congruent to k·i = {ki} mod n = {}",
                    spec.rank
                )));
            }
            let shift = k * nn - (size - ki) / spec.rank as i64;
            let parts: Vec<i64> = (0..n).map(|t| lambda.part(t) as i64 + shift).collect();
            if parts.iter().any(|&p| p < 0) {
                return Ok(None);
            }
            Ok(Some(Partition::new(parts.iter().map(|&p| p as u32).collect())?))
        }
        Flavor::Column => {
            if lambda.part(0) > spec.rank {
                return Err(Error::domain(format!(
                    "λ₁ = {} must be at most n = {}",
                    lambda.part(0),
                    spec.rank
                )));
            }
            let size = lambda.size() as i64;
            if size.rem_euclid(spec.rank as i64) != 0 {
                return Err(Error::domain(format!(
                    "|λ| = {size} must be divisible by n = {}",
                    spec.rank
                )));
            }
            let m = k * nn - size / spec.rank as i64;
            if m < 0 {
                return Ok(None);
            }
            let mut parts = vec![spec.rank; m as usize];
            parts.extend_from_slice(lambda.parts());
            Ok(Some(Partition::new(parts)?))
        }
    }
}

/// One-dimensional configuration sum: Σ q^{ω_N(b)} over highest-weight
/// paths of content λ^{(N)} (row) resp. (λ^{(N)})' (column) in the
/// length-L tensor power.
pub fn one_dcs(lambda: &Partition, spec: &PathSpec) -> Result<LaurentPoly> {
    let shape = match padded_shape(lambda, spec)? {
        Some(s) => s,
        None => return Ok(LaurentPoly::zero()),
    };
    let len = spec.length();
    if len == 0 {
        return Ok(if shape.is_empty() {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        });
    }
    let mu = Partition::new(vec![spec.level; len])?;
    let mut poly = LaurentPoly::zero();
    for t in enumerate_tableaux(&SkewShape::straight(shape.clone()), &mu)? {
        let word = tableau_to_word(&t, spec.flavor, spec.rank)?;
        poly.add_term(omega(spec, &word)?, 1);
    }
    Ok(poly)
}

/// Coefficients of q^0..q^D of the normalized Kostka polynomial
/// q^{-A_N}·K_{λ^{(N)}μ^{(N)}}(q) (row) or q^{-A^k_N}·K(q^{-1}) (column),
/// the finite-N approximation to the branching function.
pub fn branching_coeffs(lambda: &Partition, spec: &PathSpec, deg: usize) -> Result<Vec<i64>> {
    let shape = match padded_shape(lambda, spec)? {
        Some(s) => s,
        None => return Ok(vec![0; deg + 1]),
    };
    let len = spec.length();
    let mu = Partition::new(vec![spec.level; len])?;
    let k = kostka_poly(&SkewShape::straight(shape), &mu, KostkaMethod::Charge)?;
    let normalized = match spec.flavor {
        Flavor::Row => k.shift(-a_norm(spec)),
        Flavor::Column => k.invert_q().shift(-a_norm(spec)),
    };
    Ok(normalized.coeff_range(deg))
}

/// Largest degree d such that the two coefficient vectors agree on
/// q^0..q^d; None if they already differ at q^0.
pub fn stable_upto(a: &[i64], b: &[i64]) -> Option<usize> {
    let mut last = None;
    for (d, (x, y)) in a.iter().zip(b).enumerate() {
        if x == y {
            last = Some(d);
        } else {
            break;
        }
    }
    last
}

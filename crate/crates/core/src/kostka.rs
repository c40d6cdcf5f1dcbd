//! (Skew) Kostka polynomials by three independent methods, and the
//! per-component index via energies.

use crate::crystal::{Flavor, TensorWord};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::poly::LaurentPoly;
use crate::rmatrix::pass_through;
use crate::tableaux::{charge, enumerate_tableaux, tableau_to_word, word_to_tableau, Tableau};
use std::fmt;
use std::str::FromStr;

/// Which of the three equal expressions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaMethod {
    /// Σ q^{c(T)} over semi-standard tableaux.
    Charge,
    /// Σ q^{-ΣΣ H} over column highest words.
    EnergyColumn,
    /// Σ q^{+ΣΣ H} over row highest words.
    EnergyRow,
}

impl fmt::Display for KostkaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KostkaMethod::Charge => "charge",
            KostkaMethod::EnergyColumn => "energy-col",
            KostkaMethod::EnergyRow => "energy-row",
        };
        write!(f, "{s}")
    }
}

impl FromStr for KostkaMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "charge" => Ok(KostkaMethod::Charge),
            "energy-col" | "energy-column" => Ok(KostkaMethod::EnergyColumn),
            "energy-row" => Ok(KostkaMethod::EnergyRow),
            other => Err(Error::domain(format!("unknown method '{other}'"))),
        }
    }
}

/// Total pass-through energy ΣᵢΣ_{j<i} H(b_j, b_i^{(j+1)}) of a word.
fn total_energy(word: &TensorWord) -> Result<i64> {
    let mut sum = 0i64;
    for i in 2..=word.len() {
        sum += pass_through(word, i)?.energy_sum();
    }
    Ok(sum)
}

/// Minimal legal rank for the word image of tableaux of this shape.
pub fn minimal_rank(shape: &SkewShape, flavor: Flavor) -> u32 {
    let needed = match flavor {
        Flavor::Row => shape.outer().len() as u32,
        Flavor::Column => shape.outer().part(0),
    };
    needed.max(2)
}

fn energy_exponent(t: &Tableau, flavor: Flavor, rank: u32) -> Result<i64> {
    if t.size() == 0 {
        return Ok(0);
    }
    let word = tableau_to_word(t, flavor, rank)?;
    let total = total_energy(&word)?;
    Ok(match flavor {
        Flavor::Column => -total,
        Flavor::Row => total,
    })
}

/// The (skew) Kostka polynomial K_{λ/ν,μ}(q) at an explicit word rank.
/// The result is rank-independent above the minimum; see
/// [`kostka_poly`] for the default.
pub fn kostka_poly_at_rank(
    shape: &SkewShape,
    mu: &Partition,
    method: KostkaMethod,
    rank: u32,
) -> Result<LaurentPoly> {
    if shape.size() != mu.size() {
        return Err(Error::domain(format!(
            "shape size {} != weight size {}",
            shape.size(),
            mu.size()
        )));
    }
    let mut poly = LaurentPoly::zero();
    for t in enumerate_tableaux(shape, mu)? {
        let exp = match method {
            KostkaMethod::Charge => charge(&t)?.0 as i64,
            KostkaMethod::EnergyColumn => energy_exponent(&t, Flavor::Column, rank)?,
            KostkaMethod::EnergyRow => energy_exponent(&t, Flavor::Row, rank)?,
        };
        poly.add_term(exp, 1);
    }
    Ok(poly)
}

/// The (skew) Kostka polynomial K_{λ/ν,μ}(q) by the requested method, with
/// the minimal legal rank for word-based methods.
pub fn kostka_poly(shape: &SkewShape, mu: &Partition, method: KostkaMethod) -> Result<LaurentPoly> {
    let rank = match method {
        KostkaMethod::Charge => 2,
        KostkaMethod::EnergyColumn => minimal_rank(shape, Flavor::Column),
        KostkaMethod::EnergyRow => minimal_rank(shape, Flavor::Row),
    };
    kostka_poly_at_rank(shape, mu, method, rank)
}

/// The Kostka number: |T(λ/ν, μ)| = K_{λ/ν,μ}(1).
pub fn kostka_number(shape: &SkewShape, mu: &Partition) -> Result<usize> {
    if shape.size() != mu.size() {
        return Err(Error::domain(format!(
            "shape size {} != weight size {}",
            shape.size(),
            mu.size()
        )));
    }
    Ok(enumerate_tableaux(shape, mu)?.len())
}

/// ind(i) of the tableau behind a highest word, read off the energies of
/// the pass-through diagram: -Σ h_j for column words, +Σ h_j for row words.
pub fn index_via_energy(word: &TensorWord, i: usize) -> Result<i64> {
    if !word.is_highest() {
        return Err(Error::domain("index via energy needs a highest word"));
    }
    let sizes: Vec<usize> = word.factors().iter().map(|f| f.size()).collect();
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::domain("factor sizes must weakly decrease"));
    }
    let sum = pass_through(word, i)?.energy_sum();
    Ok(match word.flavor() {
        Flavor::Column => -sum,
        Flavor::Row => sum,
    })
}

/// Convenience: the index vector of a highest word via energies.
pub fn index_vector_via_energy(word: &TensorWord) -> Result<Vec<i64>> {
    (1..=word.len()).map(|i| index_via_energy(word, i)).collect()
}

/// Round-trip helper used by verification: the LS index vector of the
/// tableau behind a highest word.
pub fn ls_index_of_word(word: &TensorWord) -> Result<Vec<u64>> {
    crate::tableaux::index_vector(&word_to_tableau(word)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::CrystalElement;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn straight(p: &[u32]) -> SkewShape {
        SkewShape::straight(part(p))
    }

    fn poly_of(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn small_golden_polynomials() {
        // K_{(2),(1,1)} = q
        let p = kostka_poly(&straight(&[2]), &part(&[1, 1]), KostkaMethod::Charge).unwrap();
        assert_eq!(p, poly_of(&[(1, 1)]));
        // K_{(2,1),(1,1,1)} = q + q^2
        let p = kostka_poly(&straight(&[2, 1]), &part(&[1, 1, 1]), KostkaMethod::Charge).unwrap();
        assert_eq!(p, poly_of(&[(1, 1), (2, 1)]));
        // K_{(2,2),(1^4)} = q^2 + q^4
        let p = kostka_poly(&straight(&[2, 2]), &part(&[1; 4]), KostkaMethod::Charge).unwrap();
        assert_eq!(p, poly_of(&[(2, 1), (4, 1)]));
        // K_{(3,3),(1^6)} = q^6 + q^8 + q^9 + q^10 + q^12
        let p = kostka_poly(&straight(&[3, 3]), &part(&[1; 6]), KostkaMethod::Charge).unwrap();
        assert_eq!(p, poly_of(&[(6, 1), (8, 1), (9, 1), (10, 1), (12, 1)]));
        // λ = μ gives 1
        let p = kostka_poly(&straight(&[3, 2]), &part(&[3, 2]), KostkaMethod::Charge).unwrap();
        assert_eq!(p, LaurentPoly::one());
    }

    #[test]
    fn running_example_coefficient() {
        let p = kostka_poly(
            &straight(&[5, 4, 2]),
            &part(&[3, 3, 2, 2, 1]),
            KostkaMethod::Charge,
        )
        .unwrap();
        assert!(p.coeff(6) >= 1, "the example tableau contributes q^6");
        assert_eq!(
            p.eval_one() as usize,
            kostka_number(&straight(&[5, 4, 2]), &part(&[3, 3, 2, 2, 1])).unwrap()
        );
    }

    #[test]
    fn methods_agree_on_samples() {
        let cases: Vec<(SkewShape, Partition)> = vec![
            (straight(&[2, 1]), part(&[1, 1, 1])),
            (straight(&[3, 2]), part(&[2, 2, 1])),
            (straight(&[5, 4, 2]), part(&[3, 3, 2, 2, 1])),
            (
                SkewShape::new(part(&[2, 1]), part(&[1])).unwrap(),
                part(&[1, 1]),
            ),
            (
                SkewShape::new(part(&[3, 2, 1]), part(&[1, 1])).unwrap(),
                part(&[2, 1, 1]),
            ),
        ];
        for (shape, mu) in cases {
            let a = kostka_poly(&shape, &mu, KostkaMethod::Charge).unwrap();
            let b = kostka_poly(&shape, &mu, KostkaMethod::EnergyColumn).unwrap();
            let c = kostka_poly(&shape, &mu, KostkaMethod::EnergyRow).unwrap();
            assert_eq!(a, b, "{shape} {mu}");
            assert_eq!(a, c, "{shape} {mu}");
        }
    }

    #[test]
    fn skew_golden() {
        // K_{(2,1)/(1),(1,1)} = 1 + q
        let shape = SkewShape::new(part(&[2, 1]), part(&[1])).unwrap();
        let p = kostka_poly(&shape, &part(&[1, 1]), KostkaMethod::EnergyColumn).unwrap();
        assert_eq!(p, poly_of(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn index_golden() {
        // the running example: column word, ind(4) = 3
        let w = TensorWord::new(vec![
            CrystalElement::new(Flavor::Column, 5, vec![1, 2, 3]).unwrap(),
            CrystalElement::new(Flavor::Column, 5, vec![1, 2, 4]).unwrap(),
            CrystalElement::new(Flavor::Column, 5, vec![1, 3]).unwrap(),
            CrystalElement::new(Flavor::Column, 5, vec![4, 5]).unwrap(),
            CrystalElement::new(Flavor::Column, 5, vec![2]).unwrap(),
        ])
        .unwrap();
        assert_eq!(index_via_energy(&w, 4).unwrap(), 3);
        assert_eq!(index_via_energy(&w, 1).unwrap(), 0);
        // row word of the same tableau: same value
        let rw = TensorWord::new(vec![
            CrystalElement::new(Flavor::Row, 4, vec![1, 1, 1]).unwrap(),
            CrystalElement::new(Flavor::Row, 4, vec![1, 2, 2]).unwrap(),
            CrystalElement::new(Flavor::Row, 4, vec![2, 3]).unwrap(),
            CrystalElement::new(Flavor::Row, 4, vec![1, 2]).unwrap(),
            CrystalElement::new(Flavor::Row, 4, vec![3]).unwrap(),
        ])
        .unwrap();
        assert_eq!(index_via_energy(&rw, 4).unwrap(), 3);
        // full vectors match the LS index (0,1,1,3,1)
        assert_eq!(index_vector_via_energy(&w).unwrap(), vec![0, 1, 1, 3, 1]);
        assert_eq!(index_vector_via_energy(&rw).unwrap(), vec![0, 1, 1, 3, 1]);
        // non-highest input is rejected
        let lowered = rw.apply_f(1).unwrap();
        assert!(index_via_energy(&lowered, 2).is_err());
    }

    #[test]
    fn rank_invariance() {
        for (shape, mu) in [
            (straight(&[3, 2]), part(&[2, 2, 1])),
            (straight(&[2, 2]), part(&[2, 1, 1])),
        ] {
            for method in [KostkaMethod::EnergyColumn, KostkaMethod::EnergyRow] {
                let flavor = if method == KostkaMethod::EnergyColumn {
                    Flavor::Column
                } else {
                    Flavor::Row
                };
                let base = minimal_rank(&shape, flavor);
                let p0 = kostka_poly_at_rank(&shape, &mu, method, base).unwrap();
                for extra in 1..=2 {
                    let p = kostka_poly_at_rank(&shape, &mu, method, base + extra).unwrap();
                    assert_eq!(p0, p, "{shape} {mu} {method} rank {}", base + extra);
                }
            }
        }
    }

    #[test]
    fn empty_shape() {
        let p = kostka_poly(&straight(&[]), &part(&[]), KostkaMethod::EnergyRow).unwrap();
        assert_eq!(p, LaurentPoly::one());
        assert_eq!(kostka_number(&straight(&[]), &part(&[])).unwrap(), 1);
    }
}

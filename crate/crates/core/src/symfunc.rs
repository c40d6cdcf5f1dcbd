//! Independent symmetric-function verification: Schur and Hall–Littlewood
//! expansions with exact rational arithmetic, and the defining identities
//! for Kostka data.
//!
//! Schur polynomials come from the bialternant a_{λ+δ}/a_δ with exact
//! multivariate division; Hall–Littlewood P_μ(x;t) from the symmetrization
//! formula P_μ = v_μ(t)^{-1} Σ_w sgn(w) w(x^μ Π_{i<j}(x_i - t x_j)) / a_δ.
//! Identities are certified at enough rational t-points to pin the
//! polynomial in q.

use crate::error::{Error, Result};
use crate::kostka::{kostka_poly, KostkaMethod};
use crate::partition::{partitions_of, Partition, SkewShape};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

type Exp = Vec<u32>;
type SparsePoly = BTreeMap<Exp, BigRational>;

fn poly_add_term(p: &mut SparsePoly, e: Exp, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let became_zero = {
        let entry = p.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        entry.is_zero()
    };
    if became_zero {
        p.remove(&e);
    }
}

fn poly_mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exp = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            poly_add_term(&mut out, e, ca * cb);
        }
    }
    out
}

fn poly_monomial(e: Exp) -> SparsePoly {
    let mut p = SparsePoly::new();
    p.insert(e, BigRational::one());
    p
}

/// Exact division of p by (x_i - x_j); panics if the division is not exact.
fn divide_by_linear(p: &SparsePoly, i: usize, j: usize) -> SparsePoly {
    // group by the x_i degree, zeroing slot i in the key
    let mut by_deg: BTreeMap<u32, SparsePoly> = BTreeMap::new();
    for (e, c) in p {
        let d = e[i];
        let mut rest = e.clone();
        rest[i] = 0;
        poly_add_term(by_deg.entry(d).or_default(), rest, c.clone());
    }
    let dmax = by_deg.keys().next_back().copied().unwrap_or(0);
    let mut quotient = SparsePoly::new();
    let mut carry = SparsePoly::new(); // q_d while descending
    for d in (0..=dmax).rev() {
        // q_{d-1} = c_d + x_j * q_d ; at d = 0 this is the remainder
        let mut next = SparsePoly::new();
        if let Some(cd) = by_deg.get(&d) {
            for (e, c) in cd {
                poly_add_term(&mut next, e.clone(), c.clone());
            }
        }
        for (e, c) in &carry {
            let mut shifted = e.clone();
            shifted[j] += 1;
            poly_add_term(&mut next, shifted, c.clone());
        }
        if d == 0 {
            assert!(next.is_empty(), "division by (x_{i} - x_{j}) not exact");
        } else {
            for (e, c) in &next {
                let mut full = e.clone();
                full[i] = d - 1;
                poly_add_term(&mut quotient, full, c.clone());
            }
        }
        carry = next;
    }
    quotient
}

fn divide_by_vandermonde(mut p: SparsePoly, n: usize) -> SparsePoly {
    for i in 0..n {
        for j in i + 1..n {
            p = divide_by_linear(&p, i, j);
        }
    }
    p
}

/// All permutations of 0..n with their signs.
fn permutations_signed(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            let mut inv = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if cur[a] > cur[b] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn apply_perm(e: &Exp, w: &[usize]) -> Exp {
    let mut out = vec![0u32; e.len()];
    for (t, &img) in w.iter().enumerate() {
        out[img] = e[t];
    }
    out
}

/// Monomial expansion of a symmetric polynomial in n variables: exact
/// rational coefficient per dominant (partition-sorted) exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialExpansion {
    nvars: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl MonomialExpansion {
    pub fn zero(nvars: usize) -> Self {
        MonomialExpansion { nvars, coeffs: BTreeMap::new() }
    }

    fn from_poly(p: &SparsePoly, nvars: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in p {
            if c.is_zero() {
                continue;
            }
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if &sorted == e {
                coeffs.insert(Partition::new(sorted).expect("sorted exponents"), c.clone());
            }
        }
        MonomialExpansion { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    pub fn add_scaled(&mut self, other: &MonomialExpansion, scalar: &BigRational) {
        assert_eq!(self.nvars, other.nvars);
        for (mu, c) in &other.coeffs {
            let entry = self
                .coeffs
                .entry(mu.clone())
                .or_insert_with(BigRational::zero);
            *entry += c * scalar;
        }
        self.coeffs.retain(|_, c| !c.is_zero());
    }
}

impl fmt::Display for MonomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(mu, c)| format!("{c}*m{mu}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn delta(n: usize) -> Exp {
    (0..n).map(|t| (n - 1 - t) as u32).collect()
}

fn alternant(exp: &Exp) -> SparsePoly {
    let n = exp.len();
    let mut p = SparsePoly::new();
    for (w, sign) in permutations_signed(n) {
        let e = apply_perm(exp, &w);
        poly_add_term(
            &mut p,
            e,
            BigRational::from_integer(BigInt::from(sign)),
        );
    }
    p
}

/// The Schur polynomial s_λ(x_1..x_n) as a monomial expansion, via the
/// bialternant a_{λ+δ}/a_δ. Coefficients are the Kostka numbers.
pub fn schur_expansion(lambda: &Partition, nvars: usize) -> Result<MonomialExpansion> {
    if lambda.len() > nvars {
        return Err(Error::domain(format!(
            "λ has {} parts but only {nvars} variables",
            lambda.len()
        )));
    }
    let mut exp = lambda.padded(nvars);
    let d = delta(nvars);
    for (e, dd) in exp.iter_mut().zip(&d) {
        *e += dd;
    }
    let a = alternant(&exp);
    let s = divide_by_vandermonde(a, nvars);
    Ok(MonomialExpansion::from_poly(&s, nvars))
}

/// s_λ with the convention s_λ = 0 when l(λ) > n.
pub fn schur_or_zero(lambda: &Partition, nvars: usize) -> MonomialExpansion {
    if lambda.len() > nvars {
        MonomialExpansion::zero(nvars)
    } else {
        schur_expansion(lambda, nvars).expect("length checked")
    }
}

/// v_μ(t) = Π_{v≥0} [m_v]_t! with multiplicities counted over all n slots,
/// zero parts included.
fn v_mu(mu: &Partition, nvars: usize, t: &BigRational) -> BigRational {
    let padded = mu.padded(nvars);
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for p in padded {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut acc = BigRational::one();
    for (_, m) in mult {
        for j in 1..=m {
            // [j]_t = 1 + t + ... + t^{j-1}
            let mut bracket = BigRational::zero();
            let mut pw = BigRational::one();
            for _ in 0..j {
                bracket += &pw;
                pw *= t;
            }
            acc *= bracket;
        }
    }
    acc
}

/// The Hall–Littlewood polynomial P_μ(x_1..x_n; t) at an exact rational t,
/// by symmetrization. At t = 1 this is the monomial symmetric function m_μ;
/// t-values where v_μ(t) = 0 (roots of unity) are rejected.
pub fn hall_littlewood_eval(
    mu: &Partition,
    nvars: usize,
    t: &BigRational,
) -> Result<MonomialExpansion> {
    if mu.len() > nvars {
        return Err(Error::domain(format!(
            "μ has {} parts but only {nvars} variables",
            mu.len()
        )));
    }
    let v = v_mu(mu, nvars, t);
    if v.is_zero() {
        return Err(Error::domain(format!(
            "v_μ({t}) = 0: degenerate normalization point"
        )));
    }
    // x^μ Π_{i<j}(x_i - t x_j)
    let mut base = poly_monomial(mu.padded(nvars));
    for i in 0..nvars {
        for j in i + 1..nvars {
            let mut factor = SparsePoly::new();
            let mut ei = vec![0u32; nvars];
            ei[i] = 1;
            factor.insert(ei, BigRational::one());
            let mut ej = vec![0u32; nvars];
            ej[j] = 1;
            factor.insert(ej, -t.clone());
            base = poly_mul(&base, &factor);
        }
    }
    let mut num = SparsePoly::new();
    for (w, sign) in permutations_signed(nvars) {
        let sgn = BigRational::from_integer(BigInt::from(sign));
        for (e, c) in &base {
            poly_add_term(&mut num, apply_perm(e, &w), c * &sgn);
        }
    }
    let mut p = divide_by_vandermonde(num, nvars);
    let inv = v.recip();
    for c in p.values_mut() {
        *c *= &inv;
    }
    Ok(MonomialExpansion::from_poly(&p, nvars))
}

fn h_single(m: u32, nvars: usize) -> SparsePoly {
    // all monomials of degree m
    let mut p = SparsePoly::new();
    let mut cur = vec![0u32; nvars];
    fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, p: &mut SparsePoly) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            p.insert(cur.clone(), BigRational::one());
            cur[slot] = 0;
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, p);
            cur[slot] = 0;
        }
    }
    if nvars == 0 {
        return p;
    }
    rec(0, m, &mut cur, &mut p);
    p
}

fn e_single(m: u32, nvars: usize) -> SparsePoly {
    let mut p = SparsePoly::new();
    if m as usize > nvars {
        return p; // zero
    }
    let mut cur = vec![0u32; nvars];
    fn rec(slot: usize, left: u32, nvars: usize, cur: &mut Vec<u32>, p: &mut SparsePoly) {
        if left == 0 {
            p.insert(cur.clone(), BigRational::one());
            return;
        }
        if slot >= nvars || (nvars - slot) < left as usize {
            return;
        }
        cur[slot] = 1;
        rec(slot + 1, left - 1, nvars, cur, p);
        cur[slot] = 0;
        rec(slot + 1, left, nvars, cur, p);
    }
    rec(0, m, nvars, &mut cur, &mut p);
    p
}

/// Complete symmetric function h_μ = Π h_{μ_i} as a monomial expansion.
pub fn h_expansion(mu: &Partition, nvars: usize) -> MonomialExpansion {
    let mut p = poly_monomial(vec![0; nvars]);
    for &m in mu.parts() {
        p = poly_mul(&p, &h_single(m, nvars));
    }
    MonomialExpansion::from_poly(&p, nvars)
}

/// Elementary symmetric function e_μ = Π e_{μ_i} as a monomial expansion.
pub fn e_expansion(mu: &Partition, nvars: usize) -> MonomialExpansion {
    let mut p = poly_monomial(vec![0; nvars]);
    for &m in mu.parts() {
        p = poly_mul(&p, &e_single(m, nvars));
        if p.is_empty() {
            break;
        }
    }
    MonomialExpansion::from_poly(&p, nvars)
}

/// Outcome of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Skipped(String),
    Violated(String),
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub identity: String,
    pub label: String,
    pub qpoint: Option<BigRational>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    pub entries: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn violations(&self) -> Vec<&IdentityCheck> {
        self.entries
            .iter()
            .filter(|e| matches!(e.status, CheckStatus::Violated(_)))
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.violations().is_empty()
    }
}

/// The maximal charge over tableaux of total size m, i.e. the q-degree
/// bound n((1^m)) = m(m-1)/2 used to size the certification point set.
pub fn max_charge(m: u32) -> u32 {
    m * (m - 1) / 2
}

/// max_charge(m)+1 integer points 1..=max_charge(m)+1; v_μ never vanishes
/// at positive integers, so no instance degenerates.
pub fn default_qpoints(m: u32) -> Vec<BigRational> {
    (1..=max_charge(m) + 1)
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

/// Verify, for every λ ⊢ m with l(λ) ≤ n and every q-point:
/// s_λ = Σ_μ K_{λμ}(q)·P_μ(x;q), plus the q-independent expansions
/// h_μ = Σ_λ K_{λμ} s_λ and e_μ = Σ_λ K_{λμ} s_{λ'}.
pub fn check_identities(
    m: u32,
    nvars: usize,
    qpoints: &[BigRational],
) -> Result<IdentityReport> {
    if nvars < 1 {
        return Err(Error::domain("need at least one variable"));
    }
    let lambdas: Vec<Partition> = partitions_of(m)
        .into_iter()
        .filter(|l| l.len() <= nvars)
        .collect();
    let mus_all = partitions_of(m);
    let mus_fit: Vec<Partition> = mus_all.iter().filter(|p| p.len() <= nvars).cloned().collect();

    // K_{λμ}(q) for all pairs, once
    let mut kost: BTreeMap<(Partition, Partition), crate::poly::LaurentPoly> = BTreeMap::new();
    for l in &lambdas {
        for u in &mus_all {
            let k = kostka_poly(&SkewShape::straight(l.clone()), u, KostkaMethod::Charge)?;
            kost.insert((l.clone(), u.clone()), k);
        }
    }

    let mut report = IdentityReport::default();

    for q0 in qpoints {
        // P_μ per point; a degenerate point skips the whole Schur identity
        let mut ps: BTreeMap<Partition, MonomialExpansion> = BTreeMap::new();
        let mut degenerate: Option<String> = None;
        for u in &mus_fit {
            match hall_littlewood_eval(u, nvars, q0) {
                Ok(p) => {
                    ps.insert(u.clone(), p);
                }
                Err(Error::Domain(msg)) => {
                    degenerate = Some(msg);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        for l in &lambdas {
            let status = if let Some(msg) = &degenerate {
                CheckStatus::Skipped(msg.clone())
            } else {
                let mut rhs = MonomialExpansion::zero(nvars);
                for u in &mus_fit {
                    let kq = kost[&(l.clone(), u.clone())].eval(q0)?;
                    rhs.add_scaled(&ps[u], &kq);
                }
                let lhs = schur_expansion(l, nvars)?;
                if lhs == rhs {
                    CheckStatus::Holds
                } else {
                    CheckStatus::Violated(format!("s{l} != Σ K·P at q={q0}"))
                }
            };
            report.entries.push(IdentityCheck {
                identity: "schur-hall-littlewood".into(),
                label: format!("{l}"),
                qpoint: Some(q0.clone()),
                status,
            });
        }
    }

    // h_μ = Σ_λ K_{λμ} s_λ and e_μ = Σ_λ K_{λμ} s_{λ'} (q-independent)
    for u in &mus_all {
        let mut rhs_h = MonomialExpansion::zero(nvars);
        let mut rhs_e = MonomialExpansion::zero(nvars);
        for l in partitions_of(m) {
            let k = kostka_poly(&SkewShape::straight(l.clone()), u, KostkaMethod::Charge)?;
            let kn = BigRational::from_integer(BigInt::from(k.eval_one()));
            if kn.is_zero() {
                continue;
            }
            if l.len() <= nvars {
                rhs_h.add_scaled(&schur_or_zero(&l, nvars), &kn);
            }
            rhs_e.add_scaled(&schur_or_zero(&l.conjugate(), nvars), &kn);
        }
        let lhs_h = h_expansion(u, nvars);
        report.entries.push(IdentityCheck {
            identity: "complete-expansion".into(),
            label: format!("{u}"),
            qpoint: None,
            status: if lhs_h == rhs_h {
                CheckStatus::Holds
            } else {
                CheckStatus::Violated(format!("h{u} != Σ K·s"))
            },
        });
        let lhs_e = e_expansion(u, nvars);
        report.entries.push(IdentityCheck {
            identity: "elementary-expansion".into(),
            label: format!("{u}"),
            qpoint: None,
            status: if lhs_e == rhs_e {
                CheckStatus::Holds
            } else {
                CheckStatus::Violated(format!("e{u} != Σ K·s'"))
            },
        });
    }

    Ok(report)
}

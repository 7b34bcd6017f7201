//! Resolution invariants: Eagon-Northcott style Betti counts for maximal
//! minors, linear-quotient Betti counts, graded-Betti convolution for tensor
//! resolutions, a Taylor-strand homology oracle for monomial ideals, Hilbert
//! series / dimension / multiplicity of monomial quotients, and the binomial
//! identity check.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::complex::{clique_decomposition, Clique, SimplicialComplex};
use crate::decompose::complex_is_closed;
use crate::error::{Error, Result};
use crate::minors::facet_ideal;
use crate::ring::{CoefficientField, Monomial, PolyRing, Scalar};

/// Graded Betti table of a quotient ring `R/I`: entry `(h, d)` is the rank
/// of the degree-`d` free summand in homological position `h`, with the
/// convention `(0, 0) = 1`. The ideal-indexed view is `beta_i(I) = (i+1, .)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u128>,
}

impl BettiTable {
    pub fn unit() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        BettiTable { entries }
    }

    /// Table of a principal ideal with a degree-`d` generator.
    pub fn principal(d: u32) -> Self {
        let mut t = BettiTable::unit();
        t.add(1, d, 1);
        t
    }

    pub fn add(&mut self, h: u32, d: u32, rank: u128) {
        if rank == 0 {
            return;
        }
        *self.entries.entry((h, d)).or_insert(0) += rank;
    }

    pub fn get(&self, h: u32, d: u32) -> u128 {
        self.entries.get(&(h, d)).copied().unwrap_or(0)
    }

    /// Ideal-indexed entry: rank in homological position `i` of the ideal's
    /// resolution at internal degree `d`.
    pub fn ideal_entry(&self, i: u32, d: u32) -> u128 {
        self.get(i + 1, d)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &u128)> {
        self.entries.iter()
    }

    pub fn max_homological(&self) -> u32 {
        self.entries.keys().map(|&(h, _)| h).max().unwrap_or(0)
    }

    /// Total rank in homological position `h`.
    pub fn rank_at(&self, h: u32) -> u128 {
        self.entries.iter().filter(|(&(hh, _), _)| hh == h).map(|(_, &r)| r).sum()
    }
}

/// Exact binomial coefficient in `u128`; desk-scale arguments only.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn big_binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Betti table of the ideal of maximal minors of a generic `m x n` matrix:
/// ideal-indexed `beta_i = C(n, m+i) * C(m+i-1, i)` at internal degree
/// `m + i`, for `i = 0..=n-m`. The resolution is linear.
pub fn en_betti(m: u16, n: u16) -> Result<BettiTable> {
    if m == 0 || m > n {
        return Err(Error::Argument(format!("need 1 <= m <= n, got {m} x {n}")));
    }
    let mut table = BettiTable::unit();
    for i in 0..=(n - m) as u64 {
        let rank = binom(n as u64, m as u64 + i) * binom(m as u64 + i - 1, i);
        table.add(i as u32 + 1, m as u32 + i as u32, rank);
    }
    Ok(table)
}

/// Outcome of the successive colon computation over an ordered monomial
/// generating list.
#[derive(Debug, Clone)]
pub enum LqOutcome {
    /// All colon ideals are variable-generated; per generator the variable
    /// ids of its set.
    Linear { sets: Vec<Vec<usize>> },
    /// First index whose colon ideal has a non-variable minimal generator.
    NotLinear { index: usize, colon_gens: Vec<Monomial> },
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Computes the minimal generators of `(m_1,...,m_{i-1}) : m_i` for each `i`
/// and reports whether every colon is generated by single variables.
pub fn linear_quotients(gens: &[Monomial]) -> Result<LqOutcome> {
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[..i] {
            if g == h {
                return Err(Error::Argument("duplicate generators".into()));
            }
        }
    }
    let mut sets = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let colon: Vec<Monomial> =
            gens[..i].iter().map(|g| gens[i].gcd(g).quotient_into(g)).collect();
        let colon = minimalize(colon);
        if colon.iter().all(|c| c.degree() == 1) {
            let mut vars: Vec<usize> =
                colon.iter().map(|c| c.support().next().unwrap()).collect();
            vars.sort_unstable();
            vars.dedup();
            sets.push(vars);
        } else {
            return Ok(LqOutcome::NotLinear { index: i, colon_gens: colon });
        }
    }
    Ok(LqOutcome::Linear { sets })
}

/// Ideal-indexed `beta_i = sum_u C(|set(u)|, i)`, each contribution at
/// internal degree `deg(u) + i`.
pub fn betti_from_linear_quotients(gens: &[Monomial], sets: &[Vec<usize>]) -> Result<BettiTable> {
    if gens.len() != sets.len() {
        return Err(Error::Argument("one set per generator expected".into()));
    }
    let mut table = BettiTable::unit();
    for (g, set) in gens.iter().zip(sets) {
        for i in 0..=set.len() as u64 {
            table.add(i as u32 + 1, g.degree() + i as u32, binom(set.len() as u64, i));
        }
    }
    Ok(table)
}

/// Entrywise convolution: entry `(k, j)` of the product is the sum over
/// `k_1+...+k_r = k`, `j_1+...+j_r = j` of the entry products.
pub fn betti_convolution(tables: &[BettiTable]) -> Result<BettiTable> {
    let first = tables
        .first()
        .ok_or_else(|| Error::EmptyInput("convolution of no tables".into()))?;
    let mut acc = first.clone();
    for t in &tables[1..] {
        let mut next = BettiTable { entries: BTreeMap::new() };
        for (&(h1, d1), &r1) in acc.entries() {
            for (&(h2, d2), &r2) in t.entries() {
                let e = next.entries.entry((h1 + h2, d1 + d2)).or_insert(0);
                *e += r1 * r2;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Graded and multigraded Betti numbers from Taylor-strand homology.
#[derive(Debug, Clone)]
pub struct TaylorBetti {
    pub graded: BettiTable,
    /// `(h, multidegree)` -> rank, for `h >= 1`.
    pub multigraded: BTreeMap<(u32, Vec<u16>), u128>,
}

/// Minimal graded Betti numbers of `R/I` for a monomial ideal `I`, computed
/// as homology ranks of the lcm-strands of the Taylor complex tensored with
/// the residue field.
///
/// Ranks are computed over the rationals and over the default prime field;
/// disagreement (a characteristic-dependent instance) is reported as an
/// error rather than silently picking a side.
pub fn taylor_strand_betti(gens: &[Monomial], cap: usize) -> Result<TaylorBetti> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return Err(Error::EmptyInput("Taylor oracle needs at least one generator".into()));
    }
    if gens.len() > cap {
        return Err(Error::Resource {
            what: format!("Taylor oracle over {} generators", gens.len()),
            limit: cap as u64,
        });
    }
    let k = gens.len();
    let nsubsets: usize = 1 << k;
    let nvars = gens[0].nvars();
    let mut lcms: Vec<Vec<u16>> = vec![vec![0; nvars]; nsubsets];
    for mask in 1..nsubsets {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut l = lcms[rest].clone();
        for (i, e) in gens[low].exps().iter().enumerate() {
            l[i] = l[i].max(*e);
        }
        lcms[mask] = l;
    }
    let mut buckets: HashMap<Vec<u16>, Vec<usize>> = HashMap::new();
    for mask in 1..nsubsets {
        buckets.entry(lcms[mask].clone()).or_default().push(mask);
    }

    let bucket_list: Vec<(Vec<u16>, Vec<usize>)> = buckets.into_iter().collect();
    let strand_results: Vec<Result<Vec<(u32, Vec<u16>, u128)>>> = bucket_list
        .par_iter()
        .map(|(alpha, masks)| strand_homology(alpha, masks, &lcms, k))
        .collect();

    let mut multigraded: BTreeMap<(u32, Vec<u16>), u128> = BTreeMap::new();
    let mut graded = BettiTable::unit();
    for res in strand_results {
        for (h, alpha, rank) in res? {
            let degree: u32 = alpha.iter().map(|&e| e as u32).sum();
            graded.add(h, degree, rank);
            *multigraded.entry((h, alpha)).or_insert(0) += rank;
        }
    }
    Ok(TaylorBetti { graded, multigraded })
}

fn strand_homology(
    alpha: &[u16],
    masks: &[usize],
    lcms: &[Vec<u16>],
    k: usize,
) -> Result<Vec<(u32, Vec<u16>, u128)>> {
    let mut by_size: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for &mask in masks {
        by_size.entry(mask.count_ones()).or_default().push(mask);
    }
    let max_h = *by_size.keys().max().unwrap();
    // boundary matrices between consecutive sizes inside the strand
    let mut ranks: BTreeMap<u32, usize> = BTreeMap::new();
    for h in 1..=max_h {
        let sources = match by_size.get(&h) {
            Some(s) => s,
            None => continue,
        };
        let targets = match by_size.get(&(h - 1)) {
            Some(t) => t,
            None => continue,
        };
        let index: HashMap<usize, usize> =
            targets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(sources.len());
        for &s in sources {
            let mut row = vec![0i64; targets.len()];
            let mut sign = 1i64;
            for g in 0..k {
                if s & (1 << g) == 0 {
                    continue;
                }
                let t = s & !(1 << g);
                if lcms[t] == *alpha {
                    if let Some(&col) = index.get(&t) {
                        row[col] += sign;
                    }
                }
                sign = -sign;
            }
            rows.push(row);
        }
        let r_rat = matrix_rank(&rows, &CoefficientField::Rational);
        let r_mod = matrix_rank(&rows, &CoefficientField::default_prime());
        if r_rat != r_mod {
            return Err(Error::Unsupported(format!(
                "Betti numbers at multidegree {alpha:?} depend on the coefficient field"
            )));
        }
        ranks.insert(h, r_rat);
    }
    let mut out = Vec::new();
    for (&h, sources) in &by_size {
        let dim = sources.len();
        let rank_out = ranks.get(&h).copied().unwrap_or(0);
        let rank_in = ranks.get(&(h + 1)).copied().unwrap_or(0);
        let betti = dim - rank_out - rank_in;
        if betti > 0 {
            out.push((h, alpha.to_vec(), betti as u128));
        }
    }
    Ok(out)
}

/// Gaussian-elimination rank of a small integer matrix over the field.
fn matrix_rank(rows: &[Vec<i64>], field: &CoefficientField) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut col = 0;
    while rank < nr && col < nc {
        let pivot = (rank..nr).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(&m[rank][col]).expect("nonzero pivot");
        for c in col..nc {
            m[rank][c] = field.mul(&m[rank][c], &inv);
        }
        for r in 0..nr {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..nc {
                    let sub = field.mul(&m[rank][c], &f);
                    m[r][c] = field.sub(&m[r][c], &sub);
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Hilbert-series data of a monomial quotient: cancelled numerator,
/// dimension, multiplicity, and height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSummary {
    /// Coefficients of the fully cancelled numerator `Q`, `Q(1) != 0`.
    pub numerator: Vec<i64>,
    pub dim: u32,
    pub multiplicity: i64,
    pub nvars: u32,
    pub height: u32,
}

fn poly1_trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly1_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly1_trim(out)
}

fn poly1_add_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len() + shift)];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (j, &y) in b.iter().enumerate() {
        out[j + shift] += y;
    }
    poly1_trim(out)
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut p = vec![0i64; d as usize + 1];
    p[0] = 1;
    p[d as usize] = -1;
    p
}

/// Uncancelled numerator of `H_{R/I}` over `(1-t)^N`; independent of `N`.
fn hilbert_numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Vec<u16>>, Vec<i64>>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.degree() == 0) {
        return vec![0];
    }
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = (0..gens.len())
        .all(|i| ((i + 1)..gens.len()).all(|j| gens[i].is_coprime_with(&gens[j])));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            acc = poly1_mul(&acc, &one_minus_t_pow(g.degree()));
        }
        return acc;
    }
    let key: Vec<Vec<u16>> = {
        let mut k: Vec<Vec<u16>> = gens.iter().map(|g| g.exps().to_vec()).collect();
        k.sort();
        k
    };
    if let Some(q) = memo.get(&key) {
        return q.clone();
    }
    let nvars = gens[0].nvars();
    let mut freq = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            freq[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| freq[v]).unwrap();

    // I + (x): generators free of x, plus x itself
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exps()[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::variable(nvars, pivot));
    // I : x: divide each generator by gcd with x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exps()[pivot] > 0 {
                let mut e = g.exps().to_vec();
                e[pivot] -= 1;
                Monomial::from_exps(e)
            } else {
                g.clone()
            }
        })
        .collect();
    let q_plus = hilbert_numerator(plus, memo);
    let q_colon = hilbert_numerator(colon, memo);
    let q = poly1_add_shifted(&q_plus, &q_colon, 1);
    memo.insert(key, q.clone());
    q
}

/// Hilbert series of `R/I` for a monomial ideal over `nvars` variables,
/// computed by pivot recursion and fully cancelled.
pub fn hilbert_series(gens: &[Monomial], nvars: u32) -> HilbertSummary {
    let mut memo = HashMap::new();
    let mut q = hilbert_numerator(gens.to_vec(), &mut memo);
    // cancel (1-t) factors
    let mut cancelled = 0u32;
    loop {
        let at_one: i64 = q.iter().sum();
        if at_one != 0 || q.iter().all(|&c| c == 0) {
            break;
        }
        // q = (1-t) * r  =>  r_k = q_k + r_{k-1}
        let mut r = vec![0i64; q.len() - 1];
        let mut carry = 0i64;
        for k in 0..q.len() - 1 {
            carry += q[k];
            r[k] = carry;
        }
        q = poly1_trim(r);
        cancelled += 1;
    }
    if q.iter().all(|&c| c == 0) {
        return HilbertSummary { numerator: vec![0], dim: 0, multiplicity: 0, nvars, height: nvars };
    }
    let e: i64 = q.iter().sum();
    HilbertSummary {
        numerator: q,
        dim: nvars - cancelled,
        multiplicity: e,
        nvars,
        height: cancelled,
    }
}

/// Outcome of the exact binomial identity sweep.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub holds: bool,
    pub cases: u64,
    pub counterexample: Option<(i64, i64, i64, String, String)>,
}

/// Verifies `sum_{k=0}^{n} C(k,i) C(k+a,a) = C(n+a+1, i+a+1) C(i+a, i)`
/// exactly for all `0 <= i <= n <= n_max` (plus `i > n` spot checks) and
/// `0 <= a <= a_max`.
pub fn binomial_identity_check(n_max: i64, a_max: i64) -> IdentityReport {
    let mut cases = 0u64;
    for n in 0..=n_max {
        for a in 0..=a_max {
            for i in 0..=(n_max + 2) {
                let mut lhs = BigInt::zero();
                for k in 0..=n {
                    lhs += big_binom(k, i) * big_binom(k + a, a);
                }
                let rhs = big_binom(n + a + 1, i + a + 1) * big_binom(i + a, i);
                cases += 1;
                if lhs != rhs {
                    return IdentityReport {
                        holds: false,
                        cases,
                        counterexample: Some((n, a, i, lhs.to_string(), rhs.to_string())),
                    };
                }
            }
        }
    }
    IdentityReport { holds: true, cases, counterexample: None }
}

/// Betti table of one clique's facet ideal, when the shape admits the linear
/// maximal-minor resolution: top-dimensional cliques (`dim = m-1`) or
/// single-facet cliques (`|W| = dim+1`, handled by transposing). Other
/// shapes are rejected.
pub fn clique_betti_table(m: u16, clique: &Clique) -> Result<BettiTable> {
    let n = clique.vertices.len() as u16;
    let k = clique.dim + 1;
    if clique.dim == m - 1 {
        en_betti(m, n)
    } else if n == k {
        en_betti(k, m)
    } else {
        Err(Error::Unsupported(format!(
            "unsupported clique shape: {} vertices of dimension {} with {m} rows",
            n, clique.dim
        )))
    }
}

#[derive(Debug, Clone)]
pub struct CliqueInvariants {
    pub vertices: Vec<u16>,
    pub dim: u16,
    pub height_formula: i64,
    pub height_computed: u32,
    pub agree: bool,
}

/// Formula-vs-computation report for a closed complex; disagreements are
/// emitted as data, never suppressed.
#[derive(Debug, Clone)]
pub struct InvariantsReport {
    pub height_formula: i64,
    pub height_computed: u32,
    pub heights_agree: bool,
    pub hilbert_product_numerator: Vec<i64>,
    pub hilbert_direct_numerator: Vec<i64>,
    pub hilbert_agree: bool,
    pub multiplicity_formula: i64,
    pub multiplicity_computed: i64,
    pub multiplicity_agree: bool,
    pub betti_formula: Option<BettiTable>,
    pub betti_formula_error: Option<String>,
    pub betti_oracle: Option<BettiTable>,
    pub betti_oracle_error: Option<String>,
    pub betti_agree: Option<bool>,
    pub per_clique: Vec<CliqueInvariants>,
    pub summary: HilbertSummary,
}

/// Leading monomials of the facet-ideal generators; for a closed complex
/// these generate the initial ideal.
pub fn initial_ideal_monomials(cx: &SimplicialComplex) -> Result<Vec<Monomial>> {
    let max_label = cx.vertices().last().copied().unwrap_or(1);
    let ring = PolyRing::natural(cx.rows(), max_label, CoefficientField::default_prime())?;
    let gens = facet_ideal(&ring, cx, None)?;
    Ok(minimalize(gens.leading_monomials()?))
}

/// Evaluates the closed-complex formulas (height, Hilbert product,
/// multiplicity, Betti) against direct computations on the initial ideal.
pub fn invariants_report(cx: &SimplicialComplex, taylor_cap: usize) -> Result<InvariantsReport> {
    if !complex_is_closed(cx) {
        return Err(Error::Structure(
            "invariants report needs a complex that is closed under its labeling".into(),
        ));
    }
    let m = cx.rows();
    let dec = clique_decomposition(cx);
    let max_label = cx.vertices().last().copied().unwrap_or(1);
    let nvars = (m as u32) * (max_label as u32);
    let ring = PolyRing::natural(m, max_label, CoefficientField::default_prime())?;

    let mut height_formula = 0i64;
    let mut multiplicity_formula = 1i64;
    let mut product_numerator = vec![1i64];
    let mut per_clique = Vec::new();
    for clique in &dec.cliques {
        let n_l = clique.vertices.len() as i64;
        let t_l = clique.dim as i64;
        height_formula += n_l - t_l;
        multiplicity_formula *= binom(n_l as u64, t_l as u64) as i64;
        let sub = SimplicialComplex::new(m, clique.facets())?;
        let sub_gens = facet_ideal(&ring, &sub, None)?;
        let sub_lt = minimalize(sub_gens.leading_monomials()?);
        let sub_summary = hilbert_series(&sub_lt, nvars);
        product_numerator = poly1_mul(&product_numerator, &sub_summary.numerator);
        per_clique.push(CliqueInvariants {
            vertices: clique.vertices.clone(),
            dim: clique.dim,
            height_formula: n_l - t_l,
            height_computed: sub_summary.height,
            agree: sub_summary.height as i64 == n_l - t_l,
        });
    }

    let initial = initial_ideal_monomials(cx)?;
    let summary = hilbert_series(&initial, nvars);
    let direct_numerator = summary.numerator.clone();

    let betti_formula = dec
        .cliques
        .iter()
        .map(|c| clique_betti_table(m, c))
        .collect::<Result<Vec<_>>>()
        .and_then(|tables| betti_convolution(&tables));
    let (betti_formula, betti_formula_error) = match betti_formula {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let (betti_oracle, betti_oracle_error) = match taylor_strand_betti(&initial, taylor_cap) {
        Ok(t) => (Some(t.graded), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let betti_agree = match (&betti_formula, &betti_oracle) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };

    Ok(InvariantsReport {
        height_formula,
        height_computed: summary.height,
        heights_agree: summary.height as i64 == height_formula,
        hilbert_agree: product_numerator == direct_numerator,
        hilbert_product_numerator: product_numerator,
        hilbert_direct_numerator: direct_numerator,
        multiplicity_formula,
        multiplicity_computed: summary.multiplicity,
        multiplicity_agree: summary.multiplicity == multiplicity_formula,
        betti_formula,
        betti_formula_error,
        betti_oracle,
        betti_oracle_error,
        betti_agree,
        per_clique,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableLayout;

    fn mono(nvars: usize, pairs: &[(usize, u16)]) -> Monomial {
        let mut exps = vec![0u16; nvars];
        for &(v, e) in pairs {
            exps[v] = e;
        }
        Monomial::from_exps(exps)
    }

    fn diag_monomials(m: u16, n: u16) -> Vec<Monomial> {
        // leading terms of the maximal minors: x[1,i1] x[2,i2] ... x[m,im]
        let layout = VariableLayout::new(m, n).unwrap();
        (1..=n)
            .combinations(m as usize)
            .map(|cols| {
                let mut exps = vec![0u16; layout.nvars()];
                for (row, col) in (1..=m).zip(cols) {
                    exps[layout.var_id(row, col).unwrap()] = 1;
                }
                Monomial::from_exps(exps)
            })
            .collect()
    }

    #[test]
    fn en_betti_small_tables() {
        let t34 = en_betti(3, 4).unwrap();
        assert_eq!(t34.ideal_entry(0, 3), 4);
        assert_eq!(t34.ideal_entry(1, 4), 3);
        let square = en_betti(3, 3).unwrap();
        assert_eq!(square.ideal_entry(0, 3), 1);
        assert_eq!(square.max_homological(), 1);
        let t23 = en_betti(2, 3).unwrap();
        assert_eq!(t23.ideal_entry(0, 2), 3);
        assert_eq!(t23.ideal_entry(1, 3), 2);
        assert!(en_betti(4, 3).is_err());
    }

    #[test]
    fn en_betti_alternating_sum_vanishes() {
        for (m, n) in [(2u16, 3u16), (2, 5), (3, 4), (3, 6), (4, 7)] {
            let t = en_betti(m, n).unwrap();
            let mut sum: i128 = 0;
            for (&(h, _), &r) in t.entries() {
                sum += if h % 2 == 0 { r as i128 } else { -(r as i128) };
            }
            assert_eq!(sum, 0, "alternating sum for {m}x{n}");
        }
    }

    #[test]
    fn linear_quotients_of_2x3_initial_ideal() {
        let gens = diag_monomials(2, 3);
        match linear_quotients(&gens).unwrap() {
            LqOutcome::Linear { sets } => {
                let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
                assert_eq!(sizes, vec![0, 1, 1]);
                let table = betti_from_linear_quotients(&gens, &sets).unwrap();
                assert_eq!(table, en_betti(2, 3).unwrap());
            }
            other => panic!("expected linear quotients, got {other:?}"),
        }
    }

    #[test]
    fn diagonal_set_sizes_match_column_offset() {
        // |set(u)| = i_m - m for u = x[1,i1]...x[m,im]
        let m = 3u16;
        let n = 6u16;
        let layout = VariableLayout::new(m, n).unwrap();
        let gens = diag_monomials(m, n);
        match linear_quotients(&gens).unwrap() {
            LqOutcome::Linear { sets } => {
                for (g, set) in gens.iter().zip(&sets) {
                    let last_col = (1..=n)
                        .filter(|&c| g.exps()[layout.var_id(m, c).unwrap()] == 1)
                        .next_back()
                        .unwrap();
                    assert_eq!(set.len() as i64, last_col as i64 - m as i64);
                }
            }
            other => panic!("expected linear quotients, got {other:?}"),
        }
    }

    #[test]
    fn single_generator_has_empty_set() {
        let gens = vec![mono(4, &[(0, 1), (3, 1)])];
        match linear_quotients(&gens).unwrap() {
            LqOutcome::Linear { sets } => assert_eq!(sets, vec![Vec::<usize>::new()]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonlinear_quotient_is_reported() {
        // (xy, zw): colon of zw is (xy), not variable-generated
        let gens = vec![mono(4, &[(0, 1), (1, 1)]), mono(4, &[(2, 1), (3, 1)])];
        match linear_quotients(&gens).unwrap() {
            LqOutcome::NotLinear { index, colon_gens } => {
                assert_eq!(index, 1);
                assert_eq!(colon_gens.len(), 1);
                assert_eq!(colon_gens[0].degree(), 2);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn convolution_identity_and_koszul() {
        let en = en_betti(3, 4).unwrap();
        assert_eq!(betti_convolution(&[en.clone(), BettiTable::unit()]).unwrap(), en);
        let k = betti_convolution(&[BettiTable::principal(2), BettiTable::principal(3)]).unwrap();
        assert_eq!(k.get(1, 2), 1);
        assert_eq!(k.get(1, 3), 1);
        assert_eq!(k.get(2, 5), 1);
    }

    #[test]
    fn convolution_reproduces_worked_resolution() {
        let tables = vec![
            en_betti(3, 4).unwrap(),
            BettiTable::principal(3),
            BettiTable::principal(3),
        ];
        let t = betti_convolution(&tables).unwrap();
        assert_eq!(t.get(1, 3), 6);
        assert_eq!(t.get(2, 4), 3);
        assert_eq!(t.get(2, 6), 9);
        assert_eq!(t.get(3, 7), 6);
        assert_eq!(t.get(3, 9), 4);
        assert_eq!(t.get(4, 10), 3);
        assert_eq!(t.max_homological(), 4);
    }

    #[test]
    fn taylor_principal_and_koszul() {
        let p = taylor_strand_betti(&[mono(3, &[(0, 2)])], 16).unwrap();
        assert_eq!(p.graded.ideal_entry(0, 2), 1);
        assert_eq!(p.graded.max_homological(), 1);

        let k = taylor_strand_betti(&[mono(2, &[(0, 1)]), mono(2, &[(1, 1)])], 16).unwrap();
        assert_eq!(k.graded.get(1, 1), 2);
        assert_eq!(k.graded.get(2, 2), 1);
    }

    #[test]
    fn taylor_matches_en_for_small_minors() {
        for (m, n) in [(2u16, 3u16), (2, 4), (3, 4), (3, 5)] {
            let gens = diag_monomials(m, n);
            let t = taylor_strand_betti(&gens, 16).unwrap();
            assert_eq!(t.graded, en_betti(m, n).unwrap(), "taylor vs formula at {m}x{n}");
        }
    }

    #[test]
    fn taylor_cap_is_enforced() {
        let gens = diag_monomials(3, 6); // 20 generators
        assert!(matches!(
            taylor_strand_betti(&gens, 16),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn taylor_invariant_under_reordering() {
        let mut gens = diag_monomials(2, 4);
        let a = taylor_strand_betti(&gens, 16).unwrap();
        gens.reverse();
        let b = taylor_strand_betti(&gens, 16).unwrap();
        assert_eq!(a.graded, b.graded);
        assert_eq!(a.multigraded, b.multigraded);
    }

    #[test]
    fn hilbert_zero_ideal() {
        let s = hilbert_series(&[], 5);
        assert_eq!(s.numerator, vec![1]);
        assert_eq!(s.dim, 5);
        assert_eq!(s.multiplicity, 1);
        assert_eq!(s.height, 0);
    }

    #[test]
    fn hilbert_multiplicity_of_2x3_minors() {
        let gens = diag_monomials(2, 3);
        let s = hilbert_series(&gens, 6);
        assert_eq!(s.multiplicity, 3);
        assert_eq!(s.height, 2);
        assert_eq!(s.dim, 4);
    }

    #[test]
    fn hilbert_multiplicative_on_disjoint_variables() {
        // x0 x1 and x2 x3 x4: numerator of the union is the product
        let a = vec![mono(5, &[(0, 1), (1, 1)])];
        let b = vec![mono(5, &[(2, 1), (3, 1), (4, 1)])];
        let both = vec![a[0].clone(), b[0].clone()];
        let qa = hilbert_series(&a, 5).numerator;
        let qb = hilbert_series(&b, 5).numerator;
        let qc = hilbert_series(&both, 5).numerator;
        assert_eq!(poly1_mul(&qa, &qb), qc);
    }

    #[test]
    fn binomial_identity_small_cases() {
        // n=1, a=0, i=0: both sides 2; n=2, a=1, i=1: both sides 8
        let r = binomial_identity_check(2, 1);
        assert!(r.holds, "counterexample: {:?}", r.counterexample);
        let mut lhs = BigInt::zero();
        for k in 0..=1i64 {
            lhs += big_binom(k, 0) * big_binom(k, 0);
        }
        assert_eq!(lhs, BigInt::from(2));
        let mut lhs2 = BigInt::zero();
        for k in 0..=2i64 {
            lhs2 += big_binom(k, 1) * big_binom(k + 1, 1);
        }
        assert_eq!(lhs2, BigInt::from(8));
        assert_eq!(big_binom(4, 3) * big_binom(2, 1), BigInt::from(8));
    }

    #[test]
    fn clique_shapes_for_betti() {
        // top-dimensional clique
        let c = Clique { vertices: vec![1, 2, 3, 4], dim: 2 };
        assert_eq!(clique_betti_table(3, &c).unwrap(), en_betti(3, 4).unwrap());
        // single edge facet with m = 3: transposed maximal minors
        let e = Clique { vertices: vec![7, 8], dim: 1 };
        assert_eq!(clique_betti_table(3, &e).unwrap(), en_betti(2, 3).unwrap());
        // 1-clique on three vertices with m = 3: not a maximal-minor shape
        let bad = Clique { vertices: vec![7, 8, 9], dim: 1 };
        assert!(matches!(clique_betti_table(3, &bad), Err(Error::Unsupported(_))));
    }

    #[test]
    fn invariants_report_full_1_skeleton() {
        // m=2, n=3: height formula 2 = computed, e formula 3 = computed
        let cx = SimplicialComplex::new(2, vec![vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let r = invariants_report(&cx, 16).unwrap();
        assert_eq!(r.height_formula, 2);
        assert_eq!(r.height_computed, 2);
        assert_eq!(r.multiplicity_formula, 3);
        assert_eq!(r.multiplicity_computed, 3);
        assert!(r.hilbert_agree);
        assert_eq!(r.betti_agree, Some(true));
    }

    #[test]
    fn invariants_report_exposes_low_dim_clique_discrepancy() {
        // the 1-clique on {7,8,9} with m=3: formula height 2, computed 4
        let cx = SimplicialComplex::new(
            3,
            vec![
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 4],
                vec![2, 3, 4],
                vec![3, 4, 5],
                vec![5, 6, 7],
                vec![7, 8],
                vec![8, 9],
                vec![7, 9],
            ],
        )
        .unwrap();
        let r = invariants_report(&cx, 16).unwrap();
        let odd = r
            .per_clique
            .iter()
            .find(|c| c.vertices == vec![7, 8, 9])
            .expect("1-clique present");
        assert_eq!(odd.height_formula, 2);
        assert_eq!(odd.height_computed, 4);
        assert!(!odd.agree);
        assert!(!r.heights_agree);
        assert!(r.betti_formula_error.is_some());
    }
}

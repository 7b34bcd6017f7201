//! Buchberger engine and ideal-level operations: normal form, basis
//! certification, membership, containment, equality, and intersection by
//! elimination.
//!
//! The S-pair queue uses the normal strategy (smallest lcm first under the
//! active order) and always applies Buchberger's coprimality criterion; the
//! chain criterion sits behind [`GbOptions::chain_criterion`].

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ring::{
    same_ring, CoefficientField, Monomial, PolyRing, Polynomial, Ring, Scalar, TermOrder,
    VariableLayout,
};

/// Knobs for a Buchberger run.
#[derive(Debug, Clone)]
pub struct GbOptions {
    /// Cap on single leading-term elimination steps across the whole run.
    pub step_limit: u64,
    /// Enables the chain (Buchberger second) criterion in addition to the
    /// always-on coprimality criterion.
    pub chain_criterion: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { step_limit: 1_000_000, chain_criterion: false }
    }
}

impl GbOptions {
    /// Settings used by the decomposition harness: chain criterion on and a
    /// budget sized for elimination runs.
    pub fn harness() -> Self {
        GbOptions { step_limit: 500_000_000, chain_criterion: true }
    }

    pub fn with_step_limit(mut self, limit: u64) -> Self {
        self.step_limit = limit;
        self
    }
}

/// Outcome of an S-pair sweep over a fixed generator set.
#[derive(Debug, Clone)]
pub struct GbReport {
    pub is_gb: bool,
    /// First S-pair with a nonzero remainder; present iff `is_gb` is false.
    pub witness: Option<GbWitness>,
    pub pairs_examined: u64,
    pub reduction_steps: u64,
}

#[derive(Debug, Clone)]
pub struct GbWitness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

/// A generator list with an optional certified reduced Groebner basis.
///
/// The basis cache fills on first demand and sticks; later calls reuse it
/// regardless of the options they pass.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Result<Vec<Polynomial>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(v) = self.gb.get() {
            let _ = gb.set(v.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl Ideal {
    /// Builds a presentation from generators; zero polynomials are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            same_ring(ring, g.ring())?;
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub(crate) fn with_certified_gb(ring: &Ring, gens: Vec<Polynomial>, gb: Vec<Polynomial>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Ok(gb));
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generator-list union of several ideals over one ring.
    pub fn sum(ideals: &[&Ideal]) -> Result<Ideal> {
        let first = ideals
            .first()
            .ok_or_else(|| Error::EmptyInput("sum of no ideals".into()))?;
        let mut gens = Vec::new();
        for ideal in ideals {
            same_ring(first.ring(), ideal.ring())?;
            for g in ideal.gens() {
                if !gens.contains(g) {
                    gens.push(g.clone());
                }
            }
        }
        Ideal::new(first.ring(), gens)
    }

    /// The certified reduced Groebner basis, computing it on first use.
    pub fn groebner_basis(&self, opts: &GbOptions) -> Result<&[Polynomial]> {
        let res = self
            .gb
            .get_or_init(|| compute_reduced_gb(&self.ring, &self.gens, opts));
        match res {
            Ok(v) => Ok(v.as_slice()),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn has_cached_gb(&self) -> bool {
        matches!(self.gb.get(), Some(Ok(_)))
    }

    /// Membership via normal form against the certified basis.
    pub fn member(&self, f: &Polynomial, opts: &GbOptions) -> Result<bool> {
        same_ring(&self.ring, f.ring())?;
        let gb = self.groebner_basis(opts)?;
        Ok(normal_form(f, gb)?.is_zero())
    }

    /// Whether every generator of `other` reduces to zero against `self`.
    pub fn contains(&self, other: &Ideal, opts: &GbOptions) -> Result<bool> {
        same_ring(&self.ring, &other.ring)?;
        let gb = self.groebner_basis(opts)?;
        for g in other.gens() {
            if !normal_form(g, gb)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Ideal, opts: &GbOptions) -> Result<bool> {
        Ok(self.contains(other, opts)? && other.contains(self, opts)?)
    }
}

fn support_mask(m: &Monomial) -> u128 {
    let mut mask = 0u128;
    for v in m.support() {
        if v < 128 {
            mask |= 1u128 << v;
        }
    }
    mask
}

/// Division of `f` by `basis`: remainder has no term divisible by any
/// leading monomial of the basis, and `f - remainder` lies in the ideal the
/// basis generates.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let mut steps = 0u64;
    reduce_full(f, basis, &mut steps, u64::MAX)
}

fn reduce_full(
    f: &Polynomial,
    basis: &[Polynomial],
    steps: &mut u64,
    limit: u64,
) -> Result<Polynomial> {
    for g in basis {
        same_ring(f.ring(), g.ring())?;
    }
    let ring = f.ring().clone();
    let field = ring.field();
    let reducers: Vec<(&Polynomial, &Scalar, &Monomial, u128)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (c, m) = g.leading_term().expect("nonzero");
            (g, c, m, support_mask(m))
        })
        .collect();

    let mut work = f.clone();
    let mut remainder: Vec<(Scalar, Monomial)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lc, lm) = {
            let (c, m) = work.leading_term().expect("nonzero");
            (c.clone(), m.clone())
        };
        let lm_mask = support_mask(&lm);
        for (g, gc, gm, gmask) in &reducers {
            if gmask & !lm_mask != 0 {
                continue;
            }
            if gm.divides(&lm) {
                *steps += 1;
                if *steps > limit {
                    return Err(Error::Resource { what: "reduction steps".into(), limit });
                }
                let factor = field.div(&lc, gc)?;
                let quot = gm.quotient_into(&lm);
                work = work.sub(&g.mul_term(&factor, &quot))?;
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.push((lc, lm));
        let head = Polynomial::from_terms(&ring, vec![remainder.last().unwrap().clone()]);
        work = work.sub(&head)?;
    }
    // popped monomials strictly decrease, so the remainder is already sorted
    Ok(Polynomial::from_terms(&ring, remainder))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let field = f.ring().field().clone();
    let (fc, fm) = f.leading_term()?;
    let (gc, gm) = g.leading_term()?;
    let lcm = fm.lcm(gm);
    let uf = fm.quotient_into(&lcm);
    let ug = gm.quotient_into(&lcm);
    let a = f.mul_term(&field.inv(fc)?, &uf);
    let b = g.mul_term(&field.inv(gc)?, &ug);
    a.sub(&b)
}

/// Sort key making the binary heap pop pairs by (lcm degree, lcm order, i, j).
#[derive(PartialEq, Eq)]
struct PairKey {
    degree: u32,
    lcm_key: Vec<u16>,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap is a max-heap and we want the smallest first
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| other.lcm_key.cmp(&self.lcm_key))
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn order_key(m: &Monomial, order: &TermOrder) -> Vec<u16> {
    order.perm().iter().map(|&v| m.exps()[v as usize]).collect()
}

struct PairQueue {
    heap: BinaryHeap<PairKey>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue { heap: BinaryHeap::new(), pending: HashSet::new() }
    }

    fn push(&mut self, i: usize, j: usize, lcm: &Monomial, order: &TermOrder) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.heap.push(PairKey { degree: lcm.degree(), lcm_key: order_key(lcm, order), i, j });
        self.pending.insert((i, j));
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let key = self.heap.pop()?;
        self.pending.remove(&(key.i, key.j));
        Some((key.i, key.j))
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pending.contains(&(i, j))
    }
}

fn chain_criterion_applies(
    basis: &[Polynomial],
    lms: &[Monomial],
    queue: &PairQueue,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    for k in 0..basis.len() {
        if k == i || k == j {
            continue;
        }
        if lms[k].divides(lcm) && !queue.is_pending(i, k) && !queue.is_pending(j, k) {
            return true;
        }
    }
    false
}

/// Runs Buchberger to completion and reduces the result: pairwise-minimal
/// leading terms, fully tail-reduced, monic, sorted descending.
pub fn compute_reduced_gb(
    ring: &Ring,
    gens: &[Polynomial],
    opts: &GbOptions,
) -> Result<Vec<Polynomial>> {
    if gens.is_empty() {
        return Err(Error::EmptyInput("Groebner basis of an empty generator list".into()));
    }
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        same_ring(ring, g.ring())?;
        if !g.is_zero() {
            let g = g.monic()?;
            if !basis.contains(&g) {
                basis.push(g);
            }
        }
    }
    if basis.is_empty() {
        return Err(Error::EmptyInput("all generators are zero".into()));
    }

    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    let mut queue = PairQueue::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !lms[i].is_coprime_with(&lms[j]) {
                queue.push(i, j, &lms[i].lcm(&lms[j]), &order);
            }
        }
    }

    let mut steps = 0u64;
    while let Some((i, j)) = queue.pop() {
        let lcm = lms[i].lcm(&lms[j]);
        if opts.chain_criterion && chain_criterion_applies(&basis, &lms, &queue, i, j, &lcm) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let rem = reduce_full(&s, &basis, &mut steps, opts.step_limit)?;
        if rem.is_zero() {
            continue;
        }
        let rem = rem.monic()?;
        let lm = rem.leading_monomial()?.clone();
        let idx = basis.len();
        for k in 0..idx {
            if !lms[k].is_coprime_with(&lm) {
                queue.push(k, idx, &lms[k].lcm(&lm), &order);
            }
        }
        basis.push(rem);
        lms.push(lm);
    }

    Ok(reduce_basis(ring, basis, &mut steps, opts.step_limit)?)
}

fn reduce_basis(
    ring: &Ring,
    basis: Vec<Polynomial>,
    steps: &mut u64,
    limit: u64,
) -> Result<Vec<Polynomial>> {
    // minimalize: drop elements whose leading monomial another one divides
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| {
        ring.order().cmp(
            basis[a].leading_monomial().expect("nonzero"),
            basis[b].leading_monomial().expect("nonzero"),
        )
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    for idx in order_idx {
        let lm = basis[idx].leading_monomial()?;
        if !kept
            .iter()
            .any(|k| k.leading_monomial().expect("nonzero").divides(lm))
        {
            kept.push(basis[idx].clone());
        }
    }
    // tail-reduce each element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let red = reduce_full(&kept[i], &others, steps, limit)?.monic()?;
            if red != kept[i] {
                kept[i] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| {
        ring.order().cmp(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    Ok(kept)
}

/// Certifies a generator list and returns a new presentation with the
/// reduced basis cached.
pub fn buchberger(ideal: &Ideal, opts: &GbOptions) -> Result<Ideal> {
    if ideal.gens().is_empty() {
        return Err(Error::EmptyInput("Groebner basis of an empty generator list".into()));
    }
    let gb = compute_reduced_gb(ideal.ring(), ideal.gens(), opts)?;
    Ok(Ideal::with_certified_gb(ideal.ring(), ideal.gens().to_vec(), gb))
}

/// S-pair sweep: is the generator set already a Groebner basis?
///
/// Pairs with coprime leading terms are skipped, exactly as Buchberger's
/// first criterion allows; everything else is reduced against the set itself.
pub fn is_groebner(gens: &[Polynomial], _order: &TermOrder) -> Result<GbReport> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::EmptyInput("empty generator set".into()));
    }
    let basis: Vec<Polynomial> = nonzero.iter().map(|g| (*g).clone()).collect();
    let mut pairs = 0u64;
    let mut steps = 0u64;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs += 1;
            let mi = basis[i].leading_monomial()?;
            let mj = basis[j].leading_monomial()?;
            if mi.is_coprime_with(mj) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j])?;
            let rem = reduce_full(&s, &basis, &mut steps, u64::MAX)?;
            if !rem.is_zero() {
                return Ok(GbReport {
                    is_gb: false,
                    witness: Some(GbWitness { i, j, remainder: rem }),
                    pairs_examined: pairs,
                    reduction_steps: steps,
                });
            }
        }
    }
    Ok(GbReport { is_gb: true, witness: None, pairs_examined: pairs, reduction_steps: steps })
}

/// Extends the layout of `ring` by one elimination variable ranked first.
fn elimination_ring(ring: &Ring) -> Result<Ring> {
    let layout = ring.layout();
    if layout.aux() != 0 {
        return Err(Error::Unsupported(
            "nested elimination over a ring that already has auxiliary variables".into(),
        ));
    }
    let ext = VariableLayout::with_aux(layout.rows(), layout.cols(), 1)?;
    let order = TermOrder::elimination(ring.order(), 1);
    PolyRing::new(ext, ring.field().clone(), order)
}

fn lift(poly: &Polynomial, target: &Ring) -> Polynomial {
    let terms = poly
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = m.exps().to_vec();
            exps.push(0);
            (c.clone(), Monomial::from_exps(exps))
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

fn project(poly: &Polynomial, base: &Ring) -> Polynomial {
    let terms = poly
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut exps = m.exps().to_vec();
            exps.pop();
            (c.clone(), Monomial::from_exps(exps))
        })
        .collect();
    Polynomial::from_terms(base, terms)
}

fn intersect_two(a: &Ideal, b: &Ideal, opts: &GbOptions) -> Result<Ideal> {
    same_ring(a.ring(), b.ring())?;
    let base = a.ring().clone();
    let ext = elimination_ring(&base)?;
    let t_id = ext.layout().aux_id(0)?;
    let t = Polynomial::from_terms(
        &ext,
        vec![(ext.field().one(), Monomial::variable(ext.nvars(), t_id))],
    );
    let one_minus_t = Polynomial::constant(&ext, 1).sub(&t)?;

    let mut gens = Vec::with_capacity(a.gens().len() + b.gens().len());
    for f in a.gens() {
        gens.push(t.mul(&lift(f, &ext))?);
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&lift(g, &ext))?);
    }
    let gb = compute_reduced_gb(&ext, &gens, opts)?;
    let aux_idx = ext.nvars() - 1;
    let kept: Vec<Polynomial> = gb
        .iter()
        .filter(|p| p.terms().iter().all(|(_, m)| m.exps()[aux_idx] == 0))
        .map(|p| project(p, &base))
        .collect();
    // the t-free part of a reduced lex basis is a reduced basis downstairs
    let gens_base: Vec<Polynomial> = kept.clone();
    Ok(Ideal::with_certified_gb(&base, gens_base, kept))
}

/// Set-theoretic ideal intersection by elimination; ideals are folded
/// pairwise starting from the smallest presentation.
pub fn ideal_intersect(ideals: &[Ideal], opts: &GbOptions) -> Result<Ideal> {
    if ideals.len() < 2 {
        return Err(Error::Argument("intersection needs at least two ideals".into()));
    }
    let mut by_size: Vec<&Ideal> = ideals.iter().collect();
    by_size.sort_by_key(|ideal| match ideal.gb.get() {
        Some(Ok(gb)) => gb.len(),
        _ => ideal.gens().len(),
    });
    let mut acc = intersect_two(by_size[0], by_size[1], opts)?;
    for next in &by_size[2..] {
        acc = intersect_two(&acc, next, opts)?;
    }
    Ok(acc)
}

//! Prime-sequence enumeration, decomposition assembly for block adjacent
//! complexes, unions, forests, and the composite (cycle/cactus) mode, plus
//! the Groebner-backed verification harness and the universal-basis probe.

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{
    block_structure, check_forest_conditions, clique_decomposition, forest_components,
    intersection_graph, is_closed, BlockStructure, ForestComponent, ForestConditionReport,
    IntersectionGraph, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::groebner::{ideal_intersect, is_groebner, GbOptions, Ideal};
use crate::minors::{facet_ideal, prime_sequence_ideal, GeneratorSet};
use crate::ring::{CoefficientField, PolyRing, Ring, TermOrder};

/// Position interval, 1-based inclusive.
pub type Interval = (u16, u16);

/// Per block component, a list of position intervals subject to the four
/// interval conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSequence {
    pub per_component: Vec<Vec<Interval>>,
}

/// Checks conditions (1)-(4) of a candidate sequence against a block
/// structure, naming the violated condition on failure.
pub fn validate_prime_sequence(seq: &PrimeSequence, bs: &BlockStructure) -> Result<()> {
    if seq.per_component.len() != bs.components.len() {
        return Err(Error::Argument(format!(
            "sequence covers {} components, structure has {}",
            seq.per_component.len(),
            bs.components.len()
        )));
    }
    let m = bs.rows as i32;
    for (ci, intervals) in seq.per_component.iter().enumerate() {
        let comp = &bs.components[ci];
        let n = comp.len() as i32;
        if intervals.is_empty() {
            return Err(Error::Argument(format!("component {ci}: empty interval list")));
        }
        let t = intervals.len();
        if intervals[0].0 != 1 || intervals[t - 1].1 as i32 != n {
            return Err(Error::Argument(format!(
                "component {ci}: condition (1) fails, intervals must span positions 1..{n}"
            )));
        }
        for w in intervals.windows(2) {
            if w[1].0 <= w[0].0 || w[1].1 <= w[0].1 {
                return Err(Error::Argument(format!(
                    "component {ci}: condition (1) fails, endpoints must strictly increase"
                )));
            }
        }
        for (idx, &(a, b)) in intervals.iter().enumerate() {
            if a == 0 || b as i32 > n || a > b {
                return Err(Error::Argument(format!(
                    "component {ci}: interval ({a},{b}) outside positions 1..{n}"
                )));
            }
            let width = b as i32 - a as i32;
            let needed = if idx == 0 || idx == t - 1 { m - 1 } else { m };
            if width < needed {
                return Err(Error::Argument(format!(
                    "component {ci}: condition (2) fails at interval ({a},{b}), width {width} < {needed}"
                )));
            }
        }
        for w in intervals.windows(2) {
            let gap = w[0].1 as i32 - w[1].0 as i32;
            if gap < 0 || gap > m - 2 {
                return Err(Error::Argument(format!(
                    "component {ci}: condition (3) fails between ({},{}) and ({},{})",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        for &(s, e) in &comp.blocks {
            if e as i32 - s as i32 + 1 > m
                && !intervals.iter().any(|&(a, b)| a <= s && e <= b)
            {
                return Err(Error::Argument(format!(
                    "component {ci}: condition (4) fails, sub-block positions {s}..{e} fit no interval"
                )));
            }
        }
    }
    Ok(())
}

/// Exhaustive enumeration of the interval lists satisfying (1)-(4) for one
/// block component, ordered by length then lexicographically on endpoints.
pub fn enumerate_prime_sequences(bs: &BlockStructure, comp: usize) -> Vec<Vec<Interval>> {
    let component = &bs.components[comp];
    let n = component.len();
    let m = bs.rows;
    let big_blocks: Vec<Interval> = component
        .blocks
        .iter()
        .copied()
        .filter(|&(s, e)| e - s + 1 > m)
        .collect();
    let mut out: Vec<Vec<Interval>> = Vec::new();
    if n < m {
        return out;
    }
    let mut stack: Vec<Interval> = Vec::new();
    // first interval: a = 1, width >= m-1
    for b in m..=n {
        stack.push((1, b));
        extend_sequence(n, m, &big_blocks, &mut stack, &mut out);
        stack.pop();
    }
    out.sort_by(|x, y| (x.len(), x.as_slice()).cmp(&(y.len(), y.as_slice())));
    out
}

fn extend_sequence(
    n: u16,
    m: u16,
    big_blocks: &[Interval],
    stack: &mut Vec<Interval>,
    out: &mut Vec<Vec<Interval>>,
) {
    let &(pa, pb) = stack.last().unwrap();
    if pb == n {
        if big_blocks.iter().all(|&(s, e)| stack.iter().any(|&(a, b)| a <= s && e <= b)) {
            out.push(stack.clone());
        }
        return;
    }
    // next interval: a in [pb-(m-2), pb] with a > pa, b > pb
    let lo = pb.saturating_sub(m - 2).max(pa + 1).max(1);
    for a in lo..=pb {
        for b in (pb + 1)..=n {
            let needed = if b == n { m - 1 } else { m };
            if b - a < needed {
                continue;
            }
            stack.push((a, b));
            extend_sequence(n, m, big_blocks, stack, out);
            stack.pop();
        }
    }
}

/// Requested or routed decomposition shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeMode {
    Auto,
    Block,
    Union,
    Forest,
    Composite,
}

impl DecomposeMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecomposeMode::Auto => "auto",
            DecomposeMode::Block => "block",
            DecomposeMode::Union => "union",
            DecomposeMode::Forest => "forest",
            DecomposeMode::Composite => "composite",
        }
    }
}

/// One candidate minimal prime: per top-level component a prime sequence,
/// plus the expanded generator family (their union).
#[derive(Debug, Clone)]
pub struct Candidate {
    pub sequences: Vec<PrimeSequence>,
    pub gens: GeneratorSet,
}

#[derive(Debug, Clone)]
pub struct PairwiseEntry {
    pub i: usize,
    pub j: usize,
    pub i_in_j: bool,
    pub j_in_i: bool,
}

/// Verification verdicts; `pass` needs containment, intersection equality,
/// and pairwise incomparability all true.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub containment: Vec<bool>,
    pub pairwise: Vec<PairwiseEntry>,
    pub pruned: Vec<usize>,
    pub intersection_equals: Option<bool>,
    pub error: Option<String>,
    pub pass: bool,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub mode_requested: DecomposeMode,
    pub mode_used: DecomposeMode,
    pub components: Vec<ForestComponent>,
    pub graph: Option<IntersectionGraph>,
    pub conditions: Option<ForestConditionReport>,
    pub candidates: Vec<Candidate>,
    pub verification: Option<VerificationReport>,
}

fn check_ring(ring: &Ring, cx: &SimplicialComplex) -> Result<()> {
    if ring.layout().rows() != cx.rows() {
        return Err(Error::Layout(format!(
            "ring has {} rows, complex expects {}",
            ring.layout().rows(),
            cx.rows()
        )));
    }
    let max_label = cx.vertices().last().copied().unwrap_or(0);
    if (ring.layout().cols() as u16) < max_label {
        return Err(Error::Layout(format!(
            "ring has {} columns, complex uses label {max_label}",
            ring.layout().cols()
        )));
    }
    Ok(())
}

/// Candidates for one union-of-block-adjacent structure: the Cartesian
/// product of the per-component sequence lists.
fn union_candidates(ring: &Ring, structure: &BlockStructure) -> Result<Vec<(PrimeSequence, GeneratorSet)>> {
    let per_comp: Vec<Vec<Vec<Interval>>> = (0..structure.components.len())
        .map(|ci| enumerate_prime_sequences(structure, ci))
        .collect();
    for (ci, list) in per_comp.iter().enumerate() {
        if list.is_empty() {
            return Err(Error::Structure(format!(
                "component {ci} admits no prime sequence (fewer than {} vertices?)",
                structure.rows
            )));
        }
    }
    let mut out = Vec::new();
    for combo in per_comp.into_iter().multi_cartesian_product() {
        let seq = PrimeSequence { per_component: combo };
        let gens = prime_sequence_ideal(ring, &seq, structure)?;
        out.push((seq, gens));
    }
    Ok(out)
}

/// Decomposition of a single block adjacent complex.
pub fn decompose_block_adjacent(ring: &Ring, cx: &SimplicialComplex) -> Result<DecompositionReport> {
    check_ring(ring, cx)?;
    let bs = block_structure(cx)?;
    if bs.components.len() != 1 {
        return Err(Error::Structure(format!(
            "complex splits into {} chained components; use union mode",
            bs.components.len()
        )));
    }
    let candidates = union_candidates(ring, &bs)?
        .into_iter()
        .map(|(seq, gens)| Candidate { sequences: vec![seq], gens })
        .collect();
    Ok(DecompositionReport {
        mode_requested: DecomposeMode::Block,
        mode_used: DecomposeMode::Block,
        components: vec![ForestComponent { complex: cx.clone(), structure: bs }],
        graph: None,
        conditions: None,
        candidates,
        verification: None,
    })
}

/// Decomposition of a union of block adjacent complexes.
pub fn decompose_union(ring: &Ring, cx: &SimplicialComplex) -> Result<DecompositionReport> {
    check_ring(ring, cx)?;
    let bs = block_structure(cx)?;
    let candidates = union_candidates(ring, &bs)?
        .into_iter()
        .map(|(seq, gens)| Candidate { sequences: vec![seq], gens })
        .collect();
    Ok(DecompositionReport {
        mode_requested: DecomposeMode::Union,
        mode_used: DecomposeMode::Union,
        components: vec![ForestComponent { complex: cx.clone(), structure: bs }],
        graph: None,
        conditions: None,
        candidates,
        verification: None,
    })
}

/// Splits the complex into union-of-block-adjacent components and takes the
/// Cartesian product of their candidate lists; candidate primes are
/// generator-set sums.
///
/// Forest mode enforces conditions (a), (b), (c) and routes non-forest
/// intersection graphs to the experimental composite mode. Composite mode
/// skips the enforcement and reports the conditions as data.
pub fn decompose_forest(
    ring: &Ring,
    cx: &SimplicialComplex,
    mode: DecomposeMode,
) -> Result<DecompositionReport> {
    check_ring(ring, cx)?;
    let comps = forest_components(cx)?;
    let complexes: Vec<SimplicialComplex> = comps.iter().map(|c| c.complex.clone()).collect();
    let graph = intersection_graph(&complexes);
    let conditions = check_forest_conditions(&comps);
    let mut used = mode;
    if mode == DecomposeMode::Forest {
        if !conditions.cond_a || !conditions.cond_b || !conditions.cond_c {
            let which = [
                ("(a) empty triple intersections", conditions.cond_a),
                ("(b) pairwise intersections of size at most one", conditions.cond_b),
                ("(c) shared vertices in admissible end positions", conditions.cond_c),
            ]
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .join("; ");
            return Err(Error::Structure(format!(
                "forest decomposition precondition failed: {which}"
            )));
        }
        if !graph.is_forest {
            used = DecomposeMode::Composite;
        }
    }

    let mut per_component: Vec<Vec<(PrimeSequence, GeneratorSet)>> = Vec::new();
    for fc in &comps {
        per_component.push(union_candidates(ring, &fc.structure)?);
    }
    let index_lists: Vec<Vec<usize>> =
        per_component.iter().map(|l| (0..l.len()).collect()).collect();
    let mut candidates = Vec::new();
    for combo in index_lists.into_iter().multi_cartesian_product() {
        let sequences: Vec<PrimeSequence> = combo
            .iter()
            .enumerate()
            .map(|(fc, &i)| per_component[fc][i].0.clone())
            .collect();
        let sets: Vec<&GeneratorSet> = combo
            .iter()
            .enumerate()
            .map(|(fc, &i)| &per_component[fc][i].1)
            .collect();
        let gens = GeneratorSet::merge(&sets)?;
        candidates.push(Candidate { sequences, gens });
    }

    Ok(DecompositionReport {
        mode_requested: mode,
        mode_used: used,
        components: comps,
        graph: Some(graph),
        conditions: Some(conditions),
        candidates,
        verification: None,
    })
}

/// Mode router; `Auto` picks the first structure that fits.
pub fn decompose(ring: &Ring, cx: &SimplicialComplex, mode: DecomposeMode) -> Result<DecompositionReport> {
    match mode {
        DecomposeMode::Block => decompose_block_adjacent(ring, cx),
        DecomposeMode::Union => decompose_union(ring, cx),
        DecomposeMode::Forest => decompose_forest(ring, cx, DecomposeMode::Forest),
        DecomposeMode::Composite => decompose_forest(ring, cx, DecomposeMode::Composite),
        DecomposeMode::Auto => {
            match block_structure(cx) {
                Ok(bs) if bs.components.len() == 1 => decompose_block_adjacent(ring, cx),
                Ok(_) => decompose_union(ring, cx),
                Err(_) => {
                    let report = decompose_forest(ring, cx, DecomposeMode::Composite)?;
                    let forest_fits = report.graph.as_ref().map(|g| g.is_forest).unwrap_or(false)
                        && report.conditions.as_ref().map(|c| c.all_hold()).unwrap_or(false);
                    if forest_fits {
                        decompose_forest(ring, cx, DecomposeMode::Forest)
                    } else {
                        Ok(report)
                    }
                }
            }
        }
    }
}

/// Certifies a candidate decomposition of `j`:
///
/// * containment: every generator of `j` reduces to zero against each prime,
/// * intersection: the intersection of the candidates is ideal-equal to `j`,
/// * minimality: no candidate is contained in another.
///
/// Candidates failing pairwise incomparability are pruned (the larger ideal
/// goes) before the intersection is formed; pruning cannot change the
/// intersection since only redundant supersets are dropped. Resource
/// failures are recorded in the report instead of discarding partial work.
pub fn verify_decomposition(
    j: &Ideal,
    primes: &[Ideal],
    opts: &GbOptions,
) -> Result<VerificationReport> {
    if primes.is_empty() {
        return Err(Error::EmptyInput("no candidate primes to verify".into()));
    }
    let start = Instant::now();

    // force all Groebner bases in parallel, then the cheap containments
    let basis_errors: Vec<Option<Error>> = primes
        .par_iter()
        .map(|p| p.groebner_basis(opts).err())
        .collect();
    if let Some(e) = basis_errors.iter().flatten().next() {
        return Ok(VerificationReport {
            containment: Vec::new(),
            pairwise: Vec::new(),
            pruned: Vec::new(),
            intersection_equals: None,
            error: Some(e.to_string()),
            pass: false,
            millis: start.elapsed().as_millis(),
        });
    }
    let containment: Vec<bool> = primes
        .par_iter()
        .map(|p| p.contains(j, opts).unwrap_or(false))
        .collect();

    let idx_pairs: Vec<(usize, usize)> = (0..primes.len())
        .flat_map(|i| ((i + 1)..primes.len()).map(move |k| (i, k)))
        .collect();
    let pairwise: Vec<PairwiseEntry> = idx_pairs
        .par_iter()
        .map(|&(i, k)| PairwiseEntry {
            i,
            j: k,
            i_in_j: primes[k].contains(&primes[i], opts).unwrap_or(false),
            j_in_i: primes[i].contains(&primes[k], opts).unwrap_or(false),
        })
        .collect();

    // prune strict supersets (and later duplicates): they are not minimal
    let mut pruned: BTreeSet<usize> = BTreeSet::new();
    for e in &pairwise {
        match (e.i_in_j, e.j_in_i) {
            (true, false) => {
                pruned.insert(e.j);
            }
            (false, true) => {
                pruned.insert(e.i);
            }
            (true, true) => {
                pruned.insert(e.j);
            }
            (false, false) => {}
        }
    }
    let survivors: Vec<&Ideal> = primes
        .iter()
        .enumerate()
        .filter(|(i, _)| !pruned.contains(i))
        .map(|(_, p)| p)
        .collect();

    let (intersection_equals, error) = if survivors.len() == 1 {
        match survivors[0].equal(j, opts) {
            Ok(eq) => (Some(eq), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        let owned: Vec<Ideal> = survivors.iter().map(|p| (*p).clone()).collect();
        match ideal_intersect(&owned, opts) {
            Ok(meet) => match meet.equal(j, opts) {
                Ok(eq) => (Some(eq), None),
                Err(e) => (None, Some(e.to_string())),
            },
            Err(e) => (None, Some(e.to_string())),
        }
    };

    let pass = containment.iter().all(|&c| c)
        && pruned.is_empty()
        && intersection_equals == Some(true)
        && error.is_none();
    Ok(VerificationReport {
        containment,
        pairwise,
        pruned: pruned.into_iter().collect(),
        intersection_equals,
        error,
        pass,
        millis: start.elapsed().as_millis(),
    })
}

/// Builds the facet ideal of the complex and verifies the report's
/// candidates against it, storing the verdicts in the report.
pub fn verify_report(
    ring: &Ring,
    cx: &SimplicialComplex,
    report: &mut DecompositionReport,
    opts: &GbOptions,
) -> Result<()> {
    let j = facet_ideal(ring, cx, None)?.ideal()?;
    let primes: Vec<Ideal> = report
        .candidates
        .iter()
        .map(|c| c.gens.ideal())
        .collect::<Result<_>>()?;
    report.verification = Some(verify_decomposition(&j, &primes, opts)?);
    Ok(())
}

/// A primality assertion backed purely by checked structural hypotheses; no
/// independent primality computation is made.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub covered: bool,
    pub prime: Option<bool>,
    pub hypotheses: Vec<(String, bool)>,
    pub statement: String,
}

/// Checks the clique-forest hypotheses: empty triple intersections, pairwise
/// intersections of size at most one, tree intersection graph on the
/// cliques, and all facet dimensions above one.
pub fn report_prime_by_theorem(cx: &SimplicialComplex) -> Result<TheoremReport> {
    let dec = clique_decomposition(cx);
    let clique_complexes: Vec<SimplicialComplex> = dec
        .cliques
        .iter()
        .map(|c| SimplicialComplex::new(cx.rows(), c.facets()))
        .collect::<Result<_>>()?;
    let graph = intersection_graph(&clique_complexes);

    let sets: Vec<Vec<u16>> = dec.cliques.iter().map(|c| c.vertices.clone()).collect();
    let n = sets.len();
    let mut triple_ok = true;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if sets[i]
                    .iter()
                    .any(|v| sets[j].contains(v) && sets[k].contains(v))
                {
                    triple_ok = false;
                }
            }
        }
    }
    let mut pair_ok = true;
    for i in 0..n {
        for j in (i + 1)..n {
            if sets[i].iter().filter(|v| sets[j].contains(v)).count() > 1 {
                pair_ok = false;
            }
        }
    }
    let dims_ok = cx.facets().iter().all(|f| f.len() > 2);

    let hypotheses = vec![
        ("all triple clique intersections empty".to_string(), triple_ok),
        ("pairwise clique intersections of size at most one".to_string(), pair_ok),
        ("clique intersection graph is a tree".to_string(), graph.is_forest),
        ("all facet dimensions greater than one".to_string(), dims_ok),
    ];
    let covered = hypotheses.iter().all(|(_, ok)| *ok);
    Ok(TheoremReport {
        covered,
        prime: if covered { Some(true) } else { None },
        hypotheses,
        statement: if covered {
            "facet ideal is prime: clique intersection graph is a tree with single-vertex overlaps"
                .to_string()
        } else {
            "not covered: hypotheses of the clique-forest primality statement fail".to_string()
        },
    })
}

/// Result of the randomized universal-basis probe.
#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub trials: u64,
    pub all_pass: bool,
    pub vacuous: bool,
    pub failing_trial: Option<u64>,
    pub failing_order: Option<Vec<u32>>,
}

/// Runs the S-pair sweep under `trials` random variable-permutation lex
/// orders (seeded); reports the first failing order if any.
pub fn universal_gb_probe(
    cx: &SimplicialComplex,
    field: &CoefficientField,
    cols: u16,
    trials: u64,
    seed: u64,
) -> Result<ProbeReport> {
    if !cx.is_pure() {
        return Err(Error::Structure("universal-basis probe needs a pure complex".into()));
    }
    if trials == 0 {
        return Ok(ProbeReport {
            trials: 0,
            all_pass: true,
            vacuous: true,
            failing_trial: None,
            failing_order: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = cx.rows() as usize * cols as usize;
    for trial in 0..trials {
        let mut perm: Vec<u32> = (0..nvars as u32).collect();
        perm.shuffle(&mut rng);
        let order = TermOrder::permuted(perm.clone())?;
        let layout = crate::ring::VariableLayout::new(cx.rows(), cols)?;
        let ring = PolyRing::new(layout, field.clone(), order)?;
        let gens = facet_ideal(&ring, cx, None)?;
        let report = is_groebner(&gens.polys(), ring.order())?;
        if !report.is_gb {
            return Ok(ProbeReport {
                trials,
                all_pass: false,
                vacuous: false,
                failing_trial: Some(trial),
                failing_order: Some(perm),
            });
        }
    }
    Ok(ProbeReport { trials, all_pass: true, vacuous: false, failing_trial: None, failing_order: None })
}

/// Convenience: whether the complex (with its clique decomposition) is
/// closed under its current labeling.
pub fn complex_is_closed(cx: &SimplicialComplex) -> bool {
    is_closed(cx, &clique_decomposition(cx)).closed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn cx(rows: u16, facets: &[&[u16]]) -> SimplicialComplex {
        SimplicialComplex::new(rows, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    fn seqs_for(c: &SimplicialComplex) -> Vec<Vec<Interval>> {
        let bs = block_structure(c).unwrap();
        assert_eq!(bs.components.len(), 1);
        enumerate_prime_sequences(&bs, 0)
    }

    #[test]
    fn enumeration_first_worked_example() {
        let c = cx(
            3,
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
                &[2, 3, 4],
                &[3, 4, 5],
                &[4, 5, 6],
                &[5, 6, 7],
            ],
        );
        let got: BTreeSet<Vec<Interval>> = seqs_for(&c).into_iter().collect();
        let expect: BTreeSet<Vec<Interval>> = [
            vec![(1, 7)],
            vec![(1, 6), (5, 7)],
            vec![(1, 5), (5, 7)],
            vec![(1, 5), (4, 7)],
            vec![(1, 4), (4, 7)],
            vec![(1, 4), (3, 7)],
            vec![(1, 4), (3, 6), (5, 7)],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn enumeration_single_simplex() {
        let c = cx(3, &[&[1, 2, 3]]);
        assert_eq!(seqs_for(&c), vec![vec![(1, 3)]]);
    }

    #[test]
    fn enumeration_is_sound() {
        let c = cx(
            3,
            &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6], &[5, 6, 7]],
        );
        let bs = block_structure(&c).unwrap();
        for seq in enumerate_prime_sequences(&bs, 0) {
            let ps = PrimeSequence { per_component: vec![seq] };
            validate_prime_sequence(&ps, &bs).unwrap();
        }
    }

    #[test]
    fn union_candidate_counts_for_ex1() {
        let ring = PolyRing::natural(3, 7, CoefficientField::default_prime()).unwrap();
        let c = cx(
            3,
            &[&[1, 2, 3], &[1, 3, 4], &[1, 2, 4], &[2, 3, 4], &[4, 5, 6], &[5, 6, 7]],
        );
        let report = decompose_union(&ring, &c).unwrap();
        assert_eq!(report.candidates.len(), 2);
    }

    #[test]
    fn forest_candidates_for_ex2() {
        let ring = PolyRing::natural(4, 11, CoefficientField::default_prime()).unwrap();
        let c = cx(
            4,
            &[
                &[1, 2, 3, 4],
                &[2, 3, 4, 5],
                &[4, 6, 7, 8],
                &[6, 7, 8, 9],
                &[5, 9, 10, 11],
            ],
        );
        let report = decompose_forest(&ring, &c, DecomposeMode::Forest).unwrap();
        assert_eq!(report.components.len(), 3);
        assert_eq!(report.candidates.len(), 4);
        // the literal intersection graph is a triangle, so the run is routed
        assert_eq!(report.mode_used, DecomposeMode::Composite);
    }

    #[test]
    fn theorem_report_covers_ex3() {
        let c = cx(
            4,
            &[
                &[1, 2, 3, 4],
                &[2, 5, 6],
                &[2, 6, 7],
                &[2, 5, 7],
                &[5, 6, 7],
                &[4, 8, 9],
            ],
        );
        let report = report_prime_by_theorem(&c).unwrap();
        assert!(report.covered, "hypotheses: {:?}", report.hypotheses);
        assert_eq!(report.prime, Some(true));
    }

    #[test]
    fn theorem_report_full_skeleton() {
        let c = cx(3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let report = report_prime_by_theorem(&c).unwrap();
        assert!(report.covered);
    }

    #[test]
    fn theorem_report_rejects_two_vertex_overlap() {
        let c = cx(
            3,
            &[&[1, 2, 3], &[2, 3, 4]],
        );
        let report = report_prime_by_theorem(&c).unwrap();
        assert!(!report.covered);
        assert_eq!(report.prime, None);
    }

    #[test]
    fn probe_vacuous_run() {
        let c = cx(2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        let report =
            universal_gb_probe(&c, &CoefficientField::default_prime(), 4, 0, 7).unwrap();
        assert!(report.all_pass);
        assert!(report.vacuous);
    }

    #[test]
    fn probe_full_skeleton_always_passes() {
        let c = cx(2, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        let report =
            universal_gb_probe(&c, &CoefficientField::default_prime(), 4, 25, 7).unwrap();
        assert!(report.all_pass);
        assert!(!report.vacuous);
    }

    #[test]
    fn probe_finds_failing_order_for_non_skeleton() {
        // pure closed complex that is not a full skeleton
        let c = cx(3, &[&[1, 2, 3], &[2, 3, 4]]);
        let report =
            universal_gb_probe(&c, &CoefficientField::default_prime(), 4, 60, 11).unwrap();
        assert!(!report.all_pass, "expected some permuted order to fail");
        assert!(report.failing_order.is_some());
    }

    #[test]
    fn probe_rejects_nonpure() {
        let c = cx(3, &[&[1, 2], &[2, 3, 4]]);
        assert!(universal_gb_probe(&c, &CoefficientField::default_prime(), 4, 5, 1).is_err());
    }
}

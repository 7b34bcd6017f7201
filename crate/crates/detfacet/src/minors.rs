//! Minors of the generic matrix and the generator families built from them:
//! facet ideals, prime-sequence ideals, mixed two-matrix families, and the
//! augmented ideal of a two-clique complex.

use std::collections::HashMap;

use itertools::Itertools;

use crate::complex::{clique_decomposition, BlockStructure, SimplicialComplex};
use crate::decompose::PrimeSequence;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Monomial, Polynomial, Ring, Scalar};

/// Row and column index sets of one minor, both sorted strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSpec {
    rows: Vec<u16>,
    cols: Vec<u16>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<u16>, mut cols: Vec<u16>) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::Argument(format!(
                "minor needs equally many rows and columns, got {rows:?} | {cols:?}"
            )));
        }
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.windows(2).any(|w| w[0] == w[1]) || cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Argument(format!(
                "minor has repeated indices: {rows:?} | {cols:?}"
            )));
        }
        Ok(MinorSpec { rows, cols })
    }

    /// All-rows minor `[b_1...b_m]` of an `m`-row matrix.
    pub fn maximal(m: u16, cols: Vec<u16>) -> Result<Self> {
        MinorSpec::new((1..=m).collect(), cols)
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    pub fn cols(&self) -> &[u16] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Bracket notation; the row part is omitted when the rows are `1..=m`.
    pub fn bracket(&self, m: u16) -> String {
        let all_rows = self.rows.len() == m as usize
            && self.rows.iter().zip(1..=m).all(|(&r, e)| r == e);
        let join = |v: &[u16]| -> String {
            if v.iter().all(|&x| x <= 9) {
                v.iter().map(|x| x.to_string()).collect()
            } else {
                v.iter().map(|x| x.to_string()).join(",")
            }
        };
        if all_rows {
            format!("[{}]", join(&self.cols))
        } else {
            format!("[{}|{}]", join(&self.rows), join(&self.cols))
        }
    }
}

/// Shared Laplace-expansion cache for one generator family.
pub struct MinorExpander<'a> {
    ring: &'a Ring,
    cache: HashMap<(Vec<u16>, Vec<u16>), Polynomial>,
}

impl<'a> MinorExpander<'a> {
    pub fn new(ring: &'a Ring) -> Self {
        MinorExpander { ring, cache: HashMap::new() }
    }

    pub fn expand(&mut self, spec: &MinorSpec) -> Result<Polynomial> {
        let layout = self.ring.layout();
        for &r in spec.rows() {
            if r == 0 || r > layout.rows() {
                return Err(Error::Layout(format!("row {r} outside the {}-row matrix", layout.rows())));
            }
        }
        for &c in spec.cols() {
            if c == 0 || c > layout.cols() {
                return Err(Error::Layout(format!(
                    "column {c} outside the {}-column matrix",
                    layout.cols()
                )));
            }
        }
        self.laplace(spec.rows(), spec.cols())
    }

    /// Expansion along the first row, memoized on (rows, cols).
    fn laplace(&mut self, rows: &[u16], cols: &[u16]) -> Result<Polynomial> {
        if rows.len() == 1 {
            return Polynomial::variable(self.ring, rows[0], cols[0]);
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let field = self.ring.field().clone();
        let mut acc = Polynomial::zero(self.ring);
        let sub_rows = &rows[1..];
        for (idx, &c) in cols.iter().enumerate() {
            let rest: Vec<u16> =
                cols.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, &x)| x).collect();
            let sub = self.laplace(sub_rows, &rest)?;
            let sign = if idx % 2 == 0 { 1 } else { -1 };
            let coeff = field.from_i64(sign);
            let id = self.ring.layout().var_id(rows[0], c)?;
            let entry = Monomial::variable(self.ring.nvars(), id);
            acc = acc.add(&sub.mul_term(&coeff, &entry))?;
        }
        self.cache.insert(key, acc.clone());
        Ok(acc)
    }
}

/// One-shot exact minor expansion.
///
/// Under the natural order the leading term is the diagonal
/// `x[a_1,b_1] x[a_2,b_2] ... x[a_k,b_k]`.
pub fn minor(ring: &Ring, spec: &MinorSpec) -> Result<Polynomial> {
    MinorExpander::new(ring).expand(spec)
}

/// Where a generator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSource {
    /// Facet of the complex plus a row choice.
    Facet,
    /// Item (i): maximal minor of an interval submatrix.
    IntervalMinor,
    /// Item (ii): maximal minor of an overlap submatrix.
    OverlapMinor,
    /// Member of a mixed two-matrix family.
    MixedFamily,
    /// Facet of the intersection of two cliques.
    CliqueIntersection,
}

#[derive(Debug, Clone)]
pub struct GenItem {
    pub spec: MinorSpec,
    pub poly: Polynomial,
    pub source: GenSource,
}

/// An expanded, deduplicated generator family.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    ring: Ring,
    items: Vec<GenItem>,
}

impl GeneratorSet {
    fn from_specs(ring: &Ring, specs: Vec<(MinorSpec, GenSource)>) -> Result<Self> {
        let mut expander = MinorExpander::new(ring);
        let mut seen: HashMap<MinorSpec, ()> = HashMap::new();
        let mut items = Vec::with_capacity(specs.len());
        for (spec, source) in specs {
            if seen.contains_key(&spec) {
                continue;
            }
            let poly = expander.expand(&spec)?;
            seen.insert(spec.clone(), ());
            items.push(GenItem { spec, poly, source });
        }
        Ok(GeneratorSet { ring: ring.clone(), items })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn items(&self) -> &[GenItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.items.iter().map(|i| i.poly.clone()).collect()
    }

    pub fn specs(&self) -> Vec<MinorSpec> {
        self.items.iter().map(|i| i.spec.clone()).collect()
    }

    pub fn brackets(&self) -> Vec<String> {
        let m = self.ring.layout().rows();
        self.items.iter().map(|i| i.spec.bracket(m)).collect()
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.polys())
    }

    /// Leading monomials of the items under the ring order.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        self.items.iter().map(|i| Ok(i.poly.leading_monomial()?.clone())).collect()
    }

    /// Generator-set union, deduplicating by minor spec.
    pub fn merge(sets: &[&GeneratorSet]) -> Result<GeneratorSet> {
        let ring = sets
            .first()
            .ok_or_else(|| Error::EmptyInput("merge of no generator sets".into()))?
            .ring
            .clone();
        let mut seen: HashMap<MinorSpec, ()> = HashMap::new();
        let mut items = Vec::new();
        for set in sets {
            crate::ring::same_ring(&ring, &set.ring)?;
            for item in &set.items {
                if !seen.contains_key(&item.spec) {
                    seen.insert(item.spec.clone(), ());
                    items.push(item.clone());
                }
            }
        }
        Ok(GeneratorSet { ring, items })
    }
}

/// `J_{Delta,S}`: one minor per (facet of size `k`, `k`-subset of the row set
/// `S`). `S` defaults to all rows.
pub fn facet_ideal(
    ring: &Ring,
    cx: &SimplicialComplex,
    row_set: Option<&[u16]>,
) -> Result<GeneratorSet> {
    let m = ring.layout().rows();
    let default_rows: Vec<u16> = (1..=m).collect();
    let rows: Vec<u16> = match row_set {
        Some(s) => {
            let mut s = s.to_vec();
            s.sort_unstable();
            s.dedup();
            for &r in &s {
                if r == 0 || r > m {
                    return Err(Error::Argument(format!("row {r} outside 1..={m}")));
                }
            }
            s
        }
        None => default_rows,
    };
    let mut specs = Vec::new();
    for facet in cx.facets() {
        let k = facet.len();
        if k > rows.len() {
            return Err(Error::Structure(format!(
                "facet {facet:?} larger than the row set {rows:?}"
            )));
        }
        for row_choice in rows.iter().copied().combinations(k) {
            specs.push((MinorSpec::new(row_choice, facet.clone())?, GenSource::Facet));
        }
    }
    GeneratorSet::from_specs(ring, specs)
}

/// `P_Gamma`: item (i) all `m x m` minors of each interval submatrix, item
/// (ii) all maximal minors of each overlap submatrix, positions mapped to
/// global labels through the block structure.
pub fn prime_sequence_ideal(
    ring: &Ring,
    seq: &PrimeSequence,
    bs: &BlockStructure,
) -> Result<GeneratorSet> {
    crate::decompose::validate_prime_sequence(seq, bs)?;
    let m = ring.layout().rows();
    let mut specs = Vec::new();
    for (ci, intervals) in seq.per_component.iter().enumerate() {
        let comp = &bs.components[ci];
        for iv in intervals {
            let cols = comp.labels(iv.0, iv.1);
            for choice in cols.iter().copied().combinations(m as usize) {
                specs.push((MinorSpec::maximal(m, choice)?, GenSource::IntervalMinor));
            }
        }
        for w in intervals.windows(2) {
            let (prev, next) = (w[0], w[1]);
            let k = prev.1 as i32 - next.0 as i32 + 1;
            debug_assert!(k >= 1 && k <= m as i32 - 1);
            let cols = comp.labels(next.0, prev.1);
            for row_choice in (1..=m).combinations(k as usize) {
                specs.push((MinorSpec::new(row_choice, cols.clone())?, GenSource::OverlapMinor));
            }
        }
    }
    GeneratorSet::from_specs(ring, specs)
}

/// Union of the maximal-minor families of `X_S[B]` and `X_{S'}[D]`.
///
/// Preconditions: `|D| < |B|` and `|D| <= |S'|`.
pub fn mixed_minor_ideal(
    ring: &Ring,
    s_rows: &[u16],
    b_cols: &[u16],
    s2_rows: &[u16],
    d_cols: &[u16],
) -> Result<GeneratorSet> {
    let norm = |v: &[u16]| -> Vec<u16> {
        let mut v = v.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (s, b, s2, d) = (norm(s_rows), norm(b_cols), norm(s2_rows), norm(d_cols));
    if d.len() >= b.len() {
        return Err(Error::Argument(format!(
            "second column set must be smaller: |D|={} vs |B|={}",
            d.len(),
            b.len()
        )));
    }
    if d.len() > s2.len() {
        return Err(Error::Argument(format!(
            "second family needs |D| <= |S'|: |D|={} vs |S'|={}",
            d.len(),
            s2.len()
        )));
    }
    let mut specs = Vec::new();
    let u = s.len().min(b.len());
    for rc in s.iter().copied().combinations(u) {
        for cc in b.iter().copied().combinations(u) {
            specs.push((MinorSpec::new(rc.clone(), cc)?, GenSource::MixedFamily));
        }
    }
    let k = d.len();
    for rc in s2.iter().copied().combinations(k) {
        specs.push((MinorSpec::new(rc, d.clone())?, GenSource::MixedFamily));
    }
    GeneratorSet::from_specs(ring, specs)
}

/// The augmented ideal `J_{D1} + J_{D2} + J_{D1 ^ D2}` of a complex whose
/// clique decomposition has exactly two cliques.
pub fn augmented_two_clique_ideal(ring: &Ring, cx: &SimplicialComplex) -> Result<GeneratorSet> {
    let dec = clique_decomposition(cx);
    if dec.cliques.len() != 2 {
        return Err(Error::Structure(format!(
            "augmented ideal needs exactly two cliques, found {}",
            dec.cliques.len()
        )));
    }
    let m = ring.layout().rows();
    let base = facet_ideal(ring, cx, None)?;

    let (c1, c2) = (&dec.cliques[0], &dec.cliques[1]);
    let shared: Vec<u16> =
        c1.vertices.iter().copied().filter(|v| c2.vertices.contains(v)).collect();
    let mut extra = Vec::new();
    if !shared.is_empty() {
        let s = (c1.facet_size()).min(c2.facet_size()).min(shared.len());
        for cols in shared.iter().copied().combinations(s) {
            for rows in (1..=m).combinations(s) {
                extra.push((MinorSpec::new(rows, cols.clone())?, GenSource::CliqueIntersection));
            }
        }
    }
    let extra_set = GeneratorSet::from_specs(ring, extra)?;
    GeneratorSet::merge(&[&base, &extra_set])
}

/// Independent reference implementations used by the test suites; kept apart
/// from the production expansion paths on purpose.
pub mod oracle {
    use super::*;

    /// Determinant as the signed permutation sum.
    pub fn leibniz_minor(ring: &Ring, spec: &MinorSpec) -> Result<Polynomial> {
        let k = spec.size();
        let field = ring.field().clone();
        let mut terms: Vec<(Scalar, Monomial)> = Vec::new();
        for perm in (0..k).permutations(k) {
            let mut inversions = 0;
            for i in 0..k {
                for j in (i + 1)..k {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let mut exps = vec![0u16; ring.nvars()];
            for (i, &p) in perm.iter().enumerate() {
                let id = ring.layout().var_id(spec.rows()[i], spec.cols()[p])?;
                exps[id] += 1;
            }
            terms.push((field.from_i64(sign), Monomial::from_exps(exps)));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoefficientField, PolyRing};

    fn ring(m: u16, n: u16) -> Ring {
        PolyRing::natural(m, n, CoefficientField::Rational).unwrap()
    }

    fn mono(r: &Ring, vars: &[(u16, u16)]) -> Monomial {
        let mut exps = vec![0u16; r.nvars()];
        for &(i, j) in vars {
            exps[r.layout().var_id(i, j).unwrap()] += 1;
        }
        Monomial::from_exps(exps)
    }

    #[test]
    fn single_entry_minor() {
        let r = ring(1, 5);
        let p = minor(&r, &MinorSpec::new(vec![1], vec![5]).unwrap()).unwrap();
        assert_eq!(p, Polynomial::variable(&r, 1, 5).unwrap());
    }

    #[test]
    fn two_by_two_minor() {
        let r = ring(2, 2);
        let p = minor(&r, &MinorSpec::new(vec![1, 2], vec![1, 2]).unwrap()).unwrap();
        let expect = Polynomial::from_terms(
            &r,
            vec![
                (r.field().from_i64(1), mono(&r, &[(1, 1), (2, 2)])),
                (r.field().from_i64(-1), mono(&r, &[(1, 2), (2, 1)])),
            ],
        );
        assert_eq!(p, expect);
        assert_eq!(p.leading_monomial().unwrap(), &mono(&r, &[(1, 1), (2, 2)]));
    }

    #[test]
    fn three_by_three_has_diagonal_leading_term() {
        let r = ring(3, 6);
        let p = minor(&r, &MinorSpec::new(vec![1, 2, 3], vec![4, 5, 6]).unwrap()).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.leading_monomial().unwrap(), &mono(&r, &[(1, 4), (2, 5), (3, 6)]));
    }

    #[test]
    fn laplace_matches_leibniz_up_to_4x4() {
        let r = ring(4, 6);
        let cases = [
            (vec![1u16, 2], vec![3u16, 5]),
            (vec![1, 2, 3], vec![1, 2, 3]),
            (vec![1, 2, 3], vec![2, 4, 6]),
            (vec![1, 2, 3, 4], vec![1, 3, 4, 6]),
        ];
        for (rows, cols) in cases {
            let spec = MinorSpec::new(rows, cols).unwrap();
            assert_eq!(
                minor(&r, &spec).unwrap(),
                oracle::leibniz_minor(&r, &spec).unwrap(),
                "mismatch at {spec:?}"
            );
        }
    }

    #[test]
    fn out_of_bounds_is_layout_error() {
        let r = ring(2, 3);
        let spec = MinorSpec::new(vec![1, 3], vec![1, 2]).unwrap();
        assert!(matches!(minor(&r, &spec), Err(Error::Layout(_))));
    }

    #[test]
    fn facet_ideal_of_ex1_complex() {
        let r = ring(3, 7);
        let cx = SimplicialComplex::new(
            3,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 4],
                vec![1, 2, 4],
                vec![2, 3, 4],
                vec![4, 5, 6],
                vec![5, 6, 7],
            ],
        )
        .unwrap();
        let gens = facet_ideal(&r, &cx, None).unwrap();
        let brackets = gens.brackets();
        assert_eq!(
            brackets,
            vec!["[123]", "[124]", "[134]", "[234]", "[456]", "[567]"]
        );
    }

    #[test]
    fn facet_ideal_enumerates_row_choices() {
        let r = ring(3, 8);
        let cx = SimplicialComplex::new(3, vec![vec![7, 8]]).unwrap();
        let gens = facet_ideal(&r, &cx, None).unwrap();
        assert_eq!(gens.brackets(), vec!["[12|78]", "[13|78]", "[23|78]"]);
    }

    #[test]
    fn facet_ideal_generator_count() {
        // sum over facets F of C(|S|, |F|)
        let r = ring(3, 7);
        let cx = SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap();
        let gens = facet_ideal(&r, &cx, None).unwrap();
        assert_eq!(gens.len(), 3 + 1 + 1);
    }

    #[test]
    fn facet_larger_than_rowset_errors() {
        let r = ring(3, 7);
        let cx = SimplicialComplex::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            facet_ideal(&r, &cx, Some(&[1, 2])),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn mixed_family_contains_worked_minors() {
        let r = ring(6, 6);
        let gens = mixed_minor_ideal(
            &r,
            &[1, 2, 3, 5, 6],
            &[1, 3, 4, 5, 6],
            &[1, 3, 4, 5],
            &[2, 4, 5, 6],
        )
        .unwrap();
        let brackets = gens.brackets();
        assert!(brackets.contains(&"[12356|13456]".to_string()));
        assert!(brackets.contains(&"[1345|2456]".to_string()));
    }

    #[test]
    fn mixed_family_rejects_equal_column_sets() {
        let r = ring(3, 6);
        assert!(mixed_minor_ideal(&r, &[1, 2, 3], &[1, 2, 3], &[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn augmented_ideal_shared_edge() {
        // cliques {1,2,3,4} and {3,4,5}: intersection contributes the 2-row
        // minors on columns {3,4}
        let r = ring(3, 5);
        let cx = SimplicialComplex::new(
            3,
            vec![
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 4],
                vec![2, 3, 4],
                vec![3, 4, 5],
            ],
        )
        .unwrap();
        let gens = augmented_two_clique_ideal(&r, &cx).unwrap();
        let brackets = gens.brackets();
        for b in ["[12|34]", "[13|34]", "[23|34]"] {
            assert!(brackets.contains(&b.to_string()), "missing {b}");
        }
    }

    #[test]
    fn augmented_ideal_shared_vertex_gives_variables() {
        let r = ring(3, 7);
        let cx = SimplicialComplex::new(3, vec![vec![2, 3, 4], vec![4, 5, 6]]).unwrap();
        let gens = augmented_two_clique_ideal(&r, &cx).unwrap();
        let brackets = gens.brackets();
        for b in ["[1|4]", "[2|4]", "[3|4]"] {
            assert!(brackets.contains(&b.to_string()), "missing {b}");
        }
    }

    #[test]
    fn augmented_ideal_disjoint_cliques() {
        let r = ring(3, 8);
        let cx = SimplicialComplex::new(3, vec![vec![1, 2, 3], vec![5, 6, 7]]).unwrap();
        let gens = augmented_two_clique_ideal(&r, &cx).unwrap();
        assert_eq!(gens.brackets(), vec!["[123]", "[567]"]);
    }

    #[test]
    fn bracket_rendering() {
        let spec = MinorSpec::new(vec![1, 2, 3], vec![2, 3, 4]).unwrap();
        assert_eq!(spec.bracket(3), "[234]");
        assert_eq!(spec.bracket(4), "[123|234]");
        let wide = MinorSpec::new(vec![1, 2, 3, 4], vec![5, 9, 10, 11]).unwrap();
        assert_eq!(wide.bracket(4), "[5,9,10,11]");
    }
}

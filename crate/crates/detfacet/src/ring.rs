//! Exact multivariate polynomial arithmetic over the entries of a generic
//! `m x n` matrix, with permuted-lexicographic term orders.
//!
//! Variables are the matrix entries `x[i,j]` flattened row-major, so the
//! default order ranks `x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[m,n]`.
//! A layout may carry auxiliary variables (used for elimination); these sit
//! after the matrix block in the id space and an elimination order ranks them
//! above every matrix variable.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shape of the generic matrix plus optional auxiliary variables.
///
/// `var_id(i, j) = (i-1)*cols + (j-1)` for `1 <= i <= rows`, `1 <= j <= cols`;
/// auxiliary variables get ids `rows*cols ..`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableLayout {
    rows: u16,
    cols: u16,
    aux: u16,
}

impl VariableLayout {
    pub fn new(rows: u16, cols: u16) -> Result<Self> {
        Self::with_aux(rows, cols, 0)
    }

    pub fn with_aux(rows: u16, cols: u16, aux: u16) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Argument("matrix must have positive dimensions".into()));
        }
        Ok(VariableLayout { rows, cols, aux })
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn cols(&self) -> u16 {
        self.cols
    }

    pub fn aux(&self) -> u16 {
        self.aux
    }

    pub fn nvars(&self) -> usize {
        self.rows as usize * self.cols as usize + self.aux as usize
    }

    /// Flat id of the entry `x[i,j]` (1-based indices).
    pub fn var_id(&self, i: u16, j: u16) -> Result<usize> {
        if i == 0 || i > self.rows || j == 0 || j > self.cols {
            return Err(Error::Layout(format!(
                "x[{i},{j}] outside a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok((i as usize - 1) * self.cols as usize + (j as usize - 1))
    }

    /// Id of the `k`-th auxiliary variable.
    pub fn aux_id(&self, k: u16) -> Result<usize> {
        if k >= self.aux {
            return Err(Error::Layout(format!("auxiliary variable {k} not allocated")));
        }
        Ok(self.rows as usize * self.cols as usize + k as usize)
    }

    /// Inverse of `var_id`; `None` for auxiliary ids.
    pub fn row_col(&self, id: usize) -> Option<(u16, u16)> {
        let mn = self.rows as usize * self.cols as usize;
        if id < mn {
            Some(((id / self.cols as usize) as u16 + 1, (id % self.cols as usize) as u16 + 1))
        } else {
            None
        }
    }

    pub fn var_name(&self, id: usize) -> String {
        match self.row_col(id) {
            Some((i, j)) => format!("x[{i},{j}]"),
            None => format!("t{}", id - self.rows as usize * self.cols as usize),
        }
    }
}

/// Exact coefficient field: arbitrary-precision rationals or `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl CoefficientField {
    pub const DEFAULT_PRIME: u64 = 32003;

    pub fn prime(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::Argument(format!("modulus {p} is not an odd prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Argument(format!("modulus {p} too large (must fit 31 bits)")));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn default_prime() -> Self {
        CoefficientField::Prime(Self::DEFAULT_PRIME)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoefficientField::Rational => Scalar::Rat(BigRational::zero()),
            CoefficientField::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoefficientField::Rational => Scalar::Rat(BigRational::one()),
            CoefficientField::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            CoefficientField::Rational => Scalar::Rat(BigRational::from(BigInt::from(v))),
            CoefficientField::Prime(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Mod(r)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientField::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (CoefficientField::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let mut s = x + y;
                if s >= *p {
                    s -= *p;
                }
                Scalar::Mod(s)
            }
            _ => unreachable!("scalar does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (CoefficientField::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            (CoefficientField::Prime(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => unreachable!("scalar does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientField::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (CoefficientField::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod((x * y) % p)
            }
            _ => unreachable!("scalar does not match field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (CoefficientField::Rational, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::Argument("division by zero".into()))
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (CoefficientField::Prime(p), Scalar::Mod(x)) => {
                if *x == 0 {
                    return Err(Error::Argument("division by zero".into()));
                }
                // extended Euclid on i128
                let (mut r0, mut r1) = (*p as i128, *x as i128);
                let (mut s0, mut s1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Ok(Scalar::Mod(s0.rem_euclid(*p as i128) as u64))
            }
            _ => unreachable!("scalar does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// One exact field element; the field itself lives on the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

/// Dense exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn variable(nvars: usize, id: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[id] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variable ids with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Lexicographic order reading exponents along a permutation of variable ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    perm: Vec<u32>,
}

impl TermOrder {
    /// The natural order: `x[1,1] > x[1,2] > ... > x[m,n]` (then aux last).
    pub fn natural(nvars: usize) -> Self {
        TermOrder { perm: (0..nvars as u32).collect() }
    }

    /// Lex order reading variables in the given significance order.
    pub fn permuted(perm: Vec<u32>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if (p as usize) >= n || seen[p as usize] {
                return Err(Error::Argument("order is not a permutation of the variables".into()));
            }
            seen[p as usize] = true;
        }
        Ok(TermOrder { perm })
    }

    /// Elimination order: `aux_count` trailing auxiliary variables ranked
    /// above all others, which keep their relative order from `base`.
    pub fn elimination(base: &TermOrder, aux_count: usize) -> Self {
        let n = base.perm.len();
        let mut perm = Vec::with_capacity(n + aux_count);
        perm.extend((n as u32..(n + aux_count) as u32).collect::<Vec<_>>());
        perm.extend_from_slice(&base.perm);
        TermOrder { perm }
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.perm.len());
        for &v in &self.perm {
            let (ea, eb) = (a.exps[v as usize], b.exps[v as usize]);
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        Ordering::Equal
    }
}

/// Total-order comparison of two monomials under an order.
///
/// Errors when the operands live over different variable counts.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: &TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() || a.nvars() != order.nvars() {
        return Err(Error::Layout(format!(
            "monomials over {} and {} variables compared under an order on {}",
            a.nvars(),
            b.nvars(),
            order.nvars()
        )));
    }
    Ok(order.cmp(a, b))
}

/// Shared context: layout + field + active term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    layout: VariableLayout,
    field: CoefficientField,
    order: TermOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new(layout: VariableLayout, field: CoefficientField, order: TermOrder) -> Result<Ring> {
        if order.nvars() != layout.nvars() {
            return Err(Error::Config(format!(
                "order on {} variables does not fit layout with {}",
                order.nvars(),
                layout.nvars()
            )));
        }
        Ok(Arc::new(PolyRing { layout, field, order }))
    }

    /// Ring with the natural order over the default modular field.
    pub fn natural(rows: u16, cols: u16, field: CoefficientField) -> Result<Ring> {
        let layout = VariableLayout::new(rows, cols)?;
        let order = TermOrder::natural(layout.nvars());
        PolyRing::new(layout, field, order)
    }

    pub fn layout(&self) -> &VariableLayout {
        &self.layout
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.layout.nvars()
    }
}

/// Checks two ring handles describe the same ring.
pub fn same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else if a.layout != b.layout {
        Err(Error::Layout("operands over different variable layouts".into()))
    } else {
        Err(Error::Config("operands over different field or term order".into()))
    }
}

pub type Term = (Scalar, Monomial);

/// Sparse polynomial: terms sorted strictly decreasing under the ring order,
/// no zero coefficients; zero is the empty term list.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, v: i64) -> Self {
        let c = ring.field().from_i64(v);
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, Monomial::one(ring.nvars()))] }
    }

    /// Single variable `x[i,j]`.
    pub fn variable(ring: &Ring, i: u16, j: u16) -> Result<Self> {
        let id = ring.layout().var_id(i, j)?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field().one(), Monomial::variable(ring.nvars(), id))],
        })
    }

    /// Builds from arbitrary terms: combines equal monomials, drops zeros,
    /// sorts descending under the ring order.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| ring.order().cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = ring.field().add(&last.0, &c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The order-greatest term; errors on the zero polynomial.
    pub fn leading_term(&self) -> Result<(&Scalar, &Monomial)> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or_else(|| Error::EmptyInput("leading term of the zero polynomial".into()))
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(self.leading_term()?.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        let ord = self.ring.order();
        let fld = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.cmp(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = fld.add(&self.terms[i].0, &other.terms[j].0);
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let fld = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (fld.neg(c), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        // accumulate into a map, then sort once
        let fld = self.ring.field();
        let mut acc: std::collections::HashMap<Monomial, Scalar> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = fld.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = fld.add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !c.is_zero() {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| self.ring.order().cmp(&b.1, &a.1));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Multiplies by `c * m` in place-order (returns a new polynomial).
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let fld = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (fld.mul(tc, c), tm.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let lc = self.terms[0].0.clone();
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = self.ring.field().inv(&lc)?;
        Ok(self.scale(&inv))
    }

    /// Re-tags the polynomial into `target`, which must share the layout and
    /// field; terms are re-sorted under the target order.
    pub fn with_order(&self, target: &Ring) -> Result<Polynomial> {
        if self.ring.layout() != target.layout() {
            return Err(Error::Layout("cannot re-order across layouts".into()));
        }
        if self.ring.field() != target.field() {
            return Err(Error::Config("cannot re-order across fields".into()));
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let layout = self.ring.layout();
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c {
                Scalar::Rat(x) => (x.is_negative(), Scalar::Rat(x.abs())),
                Scalar::Mod(x) => (false, Scalar::Mod(*x)),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(layout.var_name(v));
                } else if e > 1 {
                    factors.push(format!("{}^{}", layout.var_name(v), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring33() -> Ring {
        PolyRing::natural(3, 3, CoefficientField::Rational).unwrap()
    }

    fn mono(ring: &Ring, vars: &[(u16, u16)]) -> Monomial {
        let mut exps = vec![0u16; ring.nvars()];
        for &(i, j) in vars {
            exps[ring.layout().var_id(i, j).unwrap()] += 1;
        }
        Monomial::from_exps(exps)
    }

    #[test]
    fn natural_order_ranks_row_major() {
        let ring = ring33();
        let x11 = mono(&ring, &[(1, 1)]);
        let x12 = mono(&ring, &[(1, 2)]);
        let x21 = mono(&ring, &[(2, 1)]);
        let ord = ring.order();
        assert_eq!(compare_monomials(&x11, &x12, ord).unwrap(), Ordering::Greater);
        assert_eq!(compare_monomials(&x12, &x21, ord).unwrap(), Ordering::Greater);
        assert_eq!(compare_monomials(&x11, &x11, ord).unwrap(), Ordering::Equal);
    }

    #[test]
    fn permuted_order_flips_comparison() {
        // x[1,2] > x[1,1] > x[1,3] > ... as in the relabeling remark
        let ring = ring33();
        let n = ring.nvars();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.swap(0, 1);
        let order = TermOrder::permuted(perm).unwrap();
        let x11 = mono(&ring, &[(1, 1)]);
        let x12 = mono(&ring, &[(1, 2)]);
        assert_eq!(compare_monomials(&x11, &x12, &order).unwrap(), Ordering::Less);
    }

    #[test]
    fn layout_mismatch_is_reported() {
        let ring = ring33();
        let other = PolyRing::natural(2, 2, CoefficientField::Rational).unwrap();
        let a = mono(&ring, &[(1, 1)]);
        let b = mono(&other, &[(1, 1)]);
        assert!(matches!(
            compare_monomials(&a, &b, ring.order()),
            Err(Error::Layout(_))
        ));
    }

    #[test]
    fn add_cancels_inverse() {
        let ring = ring33();
        let f = Polynomial::from_terms(
            &ring,
            vec![
                (ring.field().from_i64(2), mono(&ring, &[(1, 1), (2, 2)])),
                (ring.field().from_i64(-1), mono(&ring, &[(1, 2), (2, 1)])),
            ],
        );
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn mul_by_one_is_identity() {
        let ring = ring33();
        let f = Polynomial::from_terms(
            &ring,
            vec![
                (ring.field().from_i64(1), mono(&ring, &[(1, 1), (2, 2)])),
                (ring.field().from_i64(-1), mono(&ring, &[(1, 2), (2, 1)])),
            ],
        );
        let one = Polynomial::constant(&ring, 1);
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn distributes_across_terms() {
        // (x11 x22 - x12 x21) * x13 = x11 x13 x22 - x12 x13 x21
        let ring = ring33();
        let det = Polynomial::from_terms(
            &ring,
            vec![
                (ring.field().from_i64(1), mono(&ring, &[(1, 1), (2, 2)])),
                (ring.field().from_i64(-1), mono(&ring, &[(1, 2), (2, 1)])),
            ],
        );
        let x13 = Polynomial::variable(&ring, 1, 3).unwrap();
        let expect = Polynomial::from_terms(
            &ring,
            vec![
                (ring.field().from_i64(1), mono(&ring, &[(1, 1), (1, 3), (2, 2)])),
                (ring.field().from_i64(-1), mono(&ring, &[(1, 2), (1, 3), (2, 1)])),
            ],
        );
        assert_eq!(det.mul(&x13).unwrap(), expect);
    }

    #[test]
    fn leading_term_of_zero_errors() {
        let ring = ring33();
        assert!(matches!(
            Polynomial::zero(&ring).leading_term(),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn single_term_leading() {
        let ring = ring33();
        let f = Polynomial::variable(&ring, 2, 3).unwrap();
        let (c, m) = f.leading_term().unwrap();
        assert!(c.is_one());
        assert_eq!(m, &mono(&ring, &[(2, 3)]));
    }

    #[test]
    fn modular_inverse_roundtrip() {
        let field = CoefficientField::default_prime();
        for v in [1i64, 2, 17, 32002, 12345] {
            let s = field.from_i64(v);
            let i = field.inv(&s).unwrap();
            assert!(field.mul(&s, &i).is_one(), "inverse failed for {v}");
        }
    }

    #[test]
    fn prime_validation() {
        assert!(CoefficientField::prime(32003).is_ok());
        assert!(CoefficientField::prime(4).is_err());
        assert!(CoefficientField::prime(2).is_err());
        assert!(CoefficientField::prime(1).is_err());
    }

    #[test]
    fn elimination_order_ranks_aux_first() {
        let layout = VariableLayout::with_aux(2, 2, 1).unwrap();
        let base = TermOrder::natural(4);
        let elim = TermOrder::elimination(&base, 1);
        let ring = PolyRing::new(layout, CoefficientField::Rational, elim).unwrap();
        let t = Monomial::variable(ring.nvars(), ring.layout().aux_id(0).unwrap());
        let x11 = Monomial::variable(ring.nvars(), 0);
        assert_eq!(ring.order().cmp(&t, &x11), Ordering::Greater);
    }
}

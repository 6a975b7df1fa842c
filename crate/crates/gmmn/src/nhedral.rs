//! Nhedral Hecke algebras at level e and at level infinity.
//!
//! Elements live in the KL basis {1} ∪ {C^m_i}; the Bott-Samelson basis {1} ∪ {b^k_i}
//! is used at level infinity and as the expansion device for products.

use crate::chebyshev::{DTable, EvalRing, MixedMat};
use crate::exactnum::{LaurentZ, MixedScalar};
use crate::fusion::cyc_order;
use crate::koornwinder::z_values;
use crate::weights::{alcove_size, fund_weights, Alcove, Weight};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NhedralError {
    #[error("weight {0} is not in the level-{1} alcove")]
    InvalidWeight(Weight, u32),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error("elements of different algebras")]
    Incompatible,
    #[error("{0}")]
    Check(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Bs,
    Kl,
}

/// Basis key: the unit, or (start color i, m) for C^m_i, resp. (i, k) for b^k_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Unit,
    Elt(usize, Weight),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElt {
    pub rank: usize,
    pub level: Option<u32>,
    pub basis: Basis,
    pub terms: BTreeMap<Key, LaurentZ>,
}

fn add_into(terms: &mut BTreeMap<Key, LaurentZ>, key: Key, c: LaurentZ) {
    if c.is_zero() {
        return;
    }
    match terms.remove(&key) {
        Some(old) => {
            let s = &old + &c;
            if !s.is_zero() {
                terms.insert(key, s);
            }
        }
        None => {
            terms.insert(key, c);
        }
    }
}

impl AlgElt {
    pub fn zero(rank: usize, level: Option<u32>, basis: Basis) -> AlgElt {
        AlgElt {
            rank,
            level,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: usize, level: Option<u32>, basis: Basis) -> AlgElt {
        let mut x = Self::zero(rank, level, basis);
        x.terms.insert(Key::Unit, LaurentZ::one());
        x
    }

    pub fn basis_elt(rank: usize, level: Option<u32>, basis: Basis, i: usize, m: Weight) -> AlgElt {
        let mut x = Self::zero(rank, level, basis);
        x.terms.insert(Key::Elt(i, m), LaurentZ::one());
        x
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

    pub fn coeff(&self, key: &Key) -> LaurentZ {
        self.terms.get(key).cloned().unwrap_or_else(LaurentZ::zero)
    }

    pub fn add_term(&mut self, key: Key, c: LaurentZ) {
        add_into(&mut self.terms, key, c);
    }

    pub fn add(&self, o: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentZ) -> AlgElt {
        let mut out = Self::zero(self.rank, self.level, self.basis);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.has_nonnegative_coeffs())
    }

    /// Parses `coeff*C[i;m1,..]` terms separated by `;` (outside brackets). A bare `1`
    /// is the unit, and `b[..]` is accepted for Bott-Samelson elements.
    pub fn parse(rank: usize, level: Option<u32>, s: &str) -> Result<AlgElt, NhedralError> {
        let err = || NhedralError::Parse(s.to_string());
        let mut pieces = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in s.chars() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                _ => {}
            }
            if ch == ';' && depth == 0 {
                pieces.push(std::mem::take(&mut cur));
            } else {
                cur.push(ch);
            }
        }
        pieces.push(cur);
        let mut basis = None;
        let mut out = Self::zero(rank, level, Basis::Kl);
        for p in pieces {
            let p: String = p.chars().filter(|c| !c.is_whitespace()).collect();
            if p.is_empty() {
                continue;
            }
            let (coef, body) = match p.rfind('*') {
                Some(pos) if p[pos + 1..].starts_with(['C', 'b', '1']) => (&p[..pos], &p[pos + 1..]),
                _ => ("1", p.as_str()),
            };
            let coef = coef.trim_start_matches('(').trim_end_matches(')');
            let c = LaurentZ::parse(coef).map_err(|_| err())?;
            let (b, key) = if body == "1" {
                (None, Key::Unit)
            } else {
                let b = match body.chars().next() {
                    Some('C') => Basis::Kl,
                    Some('b') => Basis::Bs,
                    _ => return Err(err()),
                };
                let inner = body[1..]
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(err)?;
                let (i, m) = inner.split_once(';').ok_or_else(err)?;
                let i: usize = i.parse().map_err(|_| err())?;
                let m = Weight::parse(m).map_err(|_| err())?;
                if i >= rank || m.rank() != rank || !m.is_dominant() {
                    return Err(err());
                }
                if b == Basis::Kl {
                    if let Some(e) = level {
                        if !m.in_alcove(e) {
                            return Err(NhedralError::InvalidWeight(m, e));
                        }
                    }
                }
                (Some(b), Key::Elt(i, m))
            };
            if let Some(b) = b {
                if basis.is_some_and(|x| x != b) {
                    return Err(err());
                }
                basis = Some(b);
            }
            out.add_term(key, c);
        }
        out.basis = basis.unwrap_or(Basis::Kl);
        Ok(out)
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = match self.basis {
            Basis::Kl => 'C',
            Basis::Bs => 'b',
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let body = match k {
                    Key::Unit => "1".to_string(),
                    Key::Elt(i, m) => {
                        let cs: Vec<String> = m.0.iter().map(|x| x.to_string()).collect();
                        format!("{letter}[{i};{}]", cs.join(","))
                    }
                };
                let cs = c.to_string();
                if cs == "1" {
                    body
                } else if cs.contains(['+', '-']) {
                    format!("({cs})*{body}")
                } else {
                    format!("{cs}*{body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Sum of j * k_j mod N: the color shift along a word with step counts k.
fn color_shift(rank: usize, k: &Weight) -> usize {
    k.color() as usize % rank
}

fn unit_vec(rank: usize, j: usize) -> Weight {
    let mut w = vec![0i64; rank - 1];
    w[j - 1] = 1;
    Weight(w)
}

/// The algebra T_e (level Some(e)) or T_infinity truncated to KL degree <= depth.
#[derive(Clone, Debug)]
pub struct Nhedral {
    pub rank: usize,
    pub level: Option<u32>,
    pub table: DTable,
    fws: Vec<Vec<Weight>>,
    /// [N-1]!
    pub kappa: LaurentZ,
    /// [N]!
    pub nfact: LaurentZ,
}

impl Nhedral {
    pub fn new(rank: usize, level: u32) -> Nhedral {
        Self::build(rank, Some(level), level + 1)
    }

    /// Level infinity; products are available while every KL degree stays <= depth.
    pub fn infinite(rank: usize, depth: u32) -> Nhedral {
        Self::build(rank, None, depth)
    }

    fn build(rank: usize, level: Option<u32>, depth: u32) -> Nhedral {
        assert!(rank >= 2);
        Nhedral {
            rank,
            level,
            table: DTable::new(rank, depth),
            fws: (1..rank).map(|r| fund_weights(rank, r)).collect(),
            kappa: LaurentZ::qfact(rank as u32 - 1),
            nfact: LaurentZ::qfact(rank as u32),
        }
    }

    pub fn zero(&self, basis: Basis) -> AlgElt {
        AlgElt::zero(self.rank, self.level, basis)
    }

    pub fn unit(&self) -> AlgElt {
        AlgElt::unit(self.rank, self.level, Basis::Kl)
    }

    pub fn c(&self, i: usize, m: Weight) -> AlgElt {
        AlgElt::basis_elt(self.rank, self.level, Basis::Kl, i, m)
    }

    pub fn b(&self, i: usize, k: Weight) -> AlgElt {
        AlgElt::basis_elt(self.rank, self.level, Basis::Bs, i, k)
    }

    fn keeps(&self, m: &Weight) -> bool {
        m.is_dominant() && self.level.is_none_or(|e| m.sum() <= e as i64)
    }

    fn depth_cap(&self) -> u32 {
        self.level.unwrap_or(self.table.depth)
    }

    /// KL basis: the unit, then C^m_i ordered by i and alcove order of m.
    pub fn kl_basis(&self) -> Vec<Key> {
        let mut out = vec![Key::Unit];
        let cap = self.depth_cap();
        for i in 0..self.rank {
            for m in &self.table.weights {
                if m.sum() <= cap as i64 {
                    out.push(Key::Elt(i, m.clone()));
                }
            }
        }
        out
    }

    /// Ending color of C^m_i (and of b^m_i).
    pub fn end_color(&self, i: usize, m: &Weight) -> usize {
        (i + color_shift(self.rank, m)) % self.rank
    }

    /// theta_j acting on the left of a KL element.
    pub fn theta_mult(&self, j: usize, x: &AlgElt) -> AlgElt {
        let n = self.rank;
        let mut out = self.zero(Basis::Kl);
        for (key, c) in &x.terms {
            match key {
                Key::Unit => out.add_term(Key::Elt(j % n, Weight::zero(n)), c.clone()),
                Key::Elt(i, m) => {
                    let r = (j + n - self.end_color(*i, m)) % n;
                    if r == 0 {
                        out.add_term(key.clone(), &self.nfact * c);
                        continue;
                    }
                    let kc = &self.kappa * c;
                    for w in &self.fws[r - 1] {
                        let t = m.add(w);
                        if self.keeps(&t) {
                            out.add_term(Key::Elt(*i, t), kc.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// theta_j acting on the left of a Bott-Samelson element: concatenation, with the
    /// contraction theta_j theta_j = [N]! theta_j when j is the ending color.
    pub fn theta_mult_bs(&self, j: usize, x: &AlgElt) -> AlgElt {
        let n = self.rank;
        let mut out = self.zero(Basis::Bs);
        for (key, c) in &x.terms {
            match key {
                Key::Unit => out.add_term(Key::Elt(j % n, Weight::zero(n)), c.clone()),
                Key::Elt(i, k) => {
                    let r = (j + n - self.end_color(*i, k)) % n;
                    if r == 0 {
                        out.add_term(key.clone(), &self.nfact * c);
                    } else {
                        out.add_term(Key::Elt(*i, k.add(&unit_vec(n, r))), c.clone());
                    }
                }
            }
        }
        out
    }

    /// b^k_i y, memoized over k for a fixed start color and a fixed y.
    fn word(
        &self,
        i: usize,
        k: &Weight,
        y: &AlgElt,
        memo: &mut HashMap<(usize, Weight), AlgElt>,
        bs: bool,
    ) -> AlgElt {
        if let Some(v) = memo.get(&(i, k.clone())) {
            return v.clone();
        }
        let act = |j: usize, z: &AlgElt| {
            if bs {
                self.theta_mult_bs(j, z)
            } else {
                self.theta_mult(j, z)
            }
        };
        let out = match k.0.iter().rposition(|&x| x > 0) {
            None => act(i, y),
            Some(p) => {
                let parent = k.sub(&unit_vec(self.rank, p + 1));
                let inner = self.word(i, &parent, y, memo, bs);
                act(self.end_color(i, k), &inner)
            }
        };
        memo.insert((i, k.clone()), out.clone());
        out
    }

    /// Product of KL elements: each C^m_i of x is expanded into Bott-Samelson words
    /// that act letter by letter on y; the kappa denominators are cleared exactly.
    pub fn multiply(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        assert!(x.basis == Basis::Kl && y.basis == Basis::Kl);
        let mut memo = HashMap::new();
        let mut out = self.zero(Basis::Kl);
        for (key, c) in &x.terms {
            let (i, m) = match key {
                Key::Unit => {
                    out = out.add(&y.scale(c));
                    continue;
                }
                Key::Elt(i, m) => (*i, m),
            };
            let s = m.sum() as u32;
            let mi = self
                .table
                .index_of(m)
                .unwrap_or_else(|| panic!("KL degree of {m} exceeds the table depth"));
            let mut acc = self.zero(Basis::Kl);
            for &(ki, dk) in &self.table.d[mi] {
                let k = &self.table.weights[ki];
                let w = self.word(i, k, y, &mut memo, false);
                let f = self.kappa.pow(s - k.sum() as u32).scale(&BigInt::from(dk));
                acc = acc.add(&w.scale(&f));
            }
            let den = self.kappa.pow(s);
            for (k2, v) in acc.terms {
                let q = v.div_exact(&den).expect("kappa power does not divide");
                out.add_term(k2, &q * c);
            }
        }
        out
    }

    /// Product of Bott-Samelson elements by concatenation.
    pub fn multiply_bs(&self, x: &AlgElt, y: &AlgElt) -> AlgElt {
        assert!(x.basis == Basis::Bs && y.basis == Basis::Bs);
        let mut memo = HashMap::new();
        let mut out = self.zero(Basis::Bs);
        for (key, c) in &x.terms {
            let w = match key {
                Key::Unit => y.clone(),
                Key::Elt(i, k) => self.word(*i, k, y, &mut memo, true),
            };
            out = out.add(&w.scale(c));
        }
        out
    }

    /// b^k_i = kappa^{sum k} sum_m mult(L_m in X^k) C^m_i, then the level quotient.
    pub fn bs_to_kl(&self, x: &AlgElt) -> AlgElt {
        let mut out = self.zero(Basis::Kl);
        for (key, c) in &x.terms {
            match key {
                Key::Unit => out.add_term(Key::Unit, c.clone()),
                Key::Elt(i, k) => {
                    let ki = self.table.index_of(k).expect("BS degree exceeds the table depth");
                    let f = &self.kappa.pow(k.sum() as u32) * c;
                    for &(mi, mult) in &self.table.mult[ki] {
                        let m = &self.table.weights[mi];
                        if self.keeps(m) {
                            out.add_term(Key::Elt(*i, m.clone()), f.scale(&BigInt::from(mult)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Checks every KL structure constant C_a C_b for nonnegativity; returns the
    /// number of products computed.
    pub fn positivity(&self) -> Result<usize, NhedralError> {
        let basis = self.kl_basis();
        let mut count = 0;
        for b in &basis {
            let mut y = self.zero(Basis::Kl);
            y.add_term(b.clone(), LaurentZ::one());
            for a in &basis {
                let mut x = self.zero(Basis::Kl);
                x.add_term(a.clone(), LaurentZ::one());
                let p = self.multiply(&x, &y);
                if !p.has_nonnegative_coeffs() {
                    return Err(NhedralError::Check(format!("negative structure constant in {p}")));
                }
                count += 1;
            }
        }
        Ok(count)
    }

    /// After multiplying by v^{N(N-1)/2}, at v = 0: theta_end C = C and every other
    /// theta_j C vanishes.
    pub fn v_zero_check(&self) -> Result<(), NhedralError> {
        let shift = (self.rank * (self.rank - 1) / 2) as i32;
        for key in self.kl_basis() {
            let Key::Elt(i, m) = &key else { continue };
            let c = self.c(*i, m.clone());
            for j in 0..self.rank {
                let p = self.theta_mult(j, &c);
                for (k2, v) in &p.terms {
                    let v = v.shift(shift);
                    let lo = v.min_exp().unwrap();
                    let ok = if j == self.end_color(*i, m) {
                        *k2 == key && lo == 0 && v.coeff(0) == BigInt::from(1)
                    } else {
                        lo > 0
                    };
                    if !ok {
                        return Err(NhedralError::Check(format!(
                            "theta_{j} C[{i};{m}] does not specialize correctly"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Left multiplication by every theta_j preserves the span of {C^m_i} for each i.
    pub fn cells_closed(&self) -> bool {
        self.kl_basis().iter().all(|key| {
            let Key::Elt(i, m) = key else { return true };
            (0..self.rank).all(|j| {
                self.theta_mult(j, &self.c(*i, m.clone()))
                    .terms
                    .keys()
                    .all(|k| matches!(k, Key::Elt(i2, _) if i2 == i))
            })
        })
    }
}

/// Size of the KL basis of T_e.
pub fn dim_check(rank: usize, level: u32) -> usize {
    Nhedral::new(rank, level).kl_basis().len()
}

/// 1 + N p_{N,e}.
pub fn dim_formula(rank: usize, level: u32) -> u64 {
    1 + rank as u64 * alcove_size(rank, level)
}

/// A representation given by the matrices of theta_i = kappa * theta'_i.
#[derive(Clone, Debug)]
pub struct RepMatrix {
    pub rank: usize,
    pub level: u32,
    pub dim: usize,
    /// Matrices of theta'_i = theta_i / kappa; the relations are homogeneous up to kappa.
    pub normalized: Vec<MixedMat>,
}

fn scalar_mat(m: &MixedMat, c: &MixedScalar) -> MixedMat {
    MixedMat {
        dim: m.dim,
        n: m.n,
        entries: m.entries.iter().map(|x| x.mul(c)).collect(),
    }
}

impl RepMatrix {
    fn n(&self) -> u32 {
        cyc_order(self.rank, self.level)
    }

    /// Exact matrix of theta_i.
    pub fn theta(&self, i: usize) -> MixedMat {
        let k = MixedScalar::from_laurent(self.n(), &LaurentZ::qfact(self.rank as u32 - 1));
        scalar_mat(&self.normalized[i], &k)
    }

    /// theta_i^2 = [N]! theta_i and the fundamental commutativity relations.
    pub fn check_relations(&self) -> Result<(), NhedralError> {
        let n = self.rank;
        let thetas: Vec<MixedMat> = (0..n).map(|i| self.theta(i)).collect();
        let nf = MixedScalar::from_laurent(self.n(), &LaurentZ::qfact(n as u32));
        for (i, t) in thetas.iter().enumerate() {
            if t.mul_r(t) != scalar_mat(t, &nf) {
                return Err(NhedralError::Check(format!("theta_{i}^2 != [N]! theta_{i}")));
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let a = thetas[(k + i + j) % n].mul_r(&thetas[(k + i) % n]).mul_r(&thetas[k]);
                    let b = thetas[(k + i + j) % n].mul_r(&thetas[(k + j) % n]).mul_r(&thetas[k]);
                    if a != b {
                        return Err(NhedralError::Check(format!(
                            "fundamental relation fails at (i,j,k) = ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every C^m_i with sum m = e+1 acts by zero.
    pub fn kills_ideal(&self, table: &DTable) -> Result<(), NhedralError> {
        let n = self.rank;
        let e1 = self.level as i64 + 1;
        let mut memo: HashMap<(usize, Weight), MixedMat> = HashMap::new();
        fn word(
            rep: &RepMatrix,
            i: usize,
            k: &Weight,
            memo: &mut HashMap<(usize, Weight), MixedMat>,
        ) -> MixedMat {
            if let Some(m) = memo.get(&(i, k.clone())) {
                return m.clone();
            }
            let n = rep.rank;
            let out = match k.0.iter().rposition(|&x| x > 0) {
                None => rep.normalized[i].clone(),
                Some(p) => {
                    let parent = k.sub(&unit_vec(n, p + 1));
                    let end = (i + color_shift(n, k)) % n;
                    rep.normalized[end].mul_r(&word(rep, i, &parent, memo))
                }
            };
            memo.insert((i, k.clone()), out.clone());
            out
        }
        for (mi, m) in table.weights.iter().enumerate() {
            if m.sum() != e1 {
                continue;
            }
            for i in 0..n {
                let mut acc = MixedMat::zeros(self.dim, self.n());
                for &(ki, dk) in &table.d[mi] {
                    let w = word(self, i, &table.weights[ki], &mut memo);
                    acc = acc.add_r(&w.scale_r(dk));
                }
                if !acc.is_zero_r() {
                    return Err(NhedralError::Check(format!("C[{i};{m}] does not act by zero")));
                }
            }
        }
        Ok(())
    }

    /// Dimension of the commutant at a generic numeric v.
    pub fn commutant_dim(&self, v: Complex64) -> usize {
        let d = self.dim;
        let mats: Vec<DMatrix<Complex64>> = self
            .normalized
            .iter()
            .map(|m| DMatrix::from_fn(d, d, |r, c| m.at(r, c).eval(v)))
            .collect();
        // Unknown X in row-major order; rows of the system encode A X - X A = 0.
        let mut sys = DMatrix::<Complex64>::zeros(mats.len() * d * d, d * d);
        for (t, a) in mats.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    let row = t * d * d + r * d + c;
                    for s in 0..d {
                        sys[(row, s * d + c)] += a[(r, s)];
                        sys[(row, r * d + s)] -= a[(s, c)];
                    }
                }
            }
        }
        let sv = sys.svd(false, false).singular_values;
        let top = sv.iter().cloned().fold(0.0, f64::max).max(1.0);
        let rank = sv.iter().filter(|&&x| x > 1e-9 * top).count();
        d * d - rank
    }
}

/// One-dimensional representation theta_i -> values[i].
#[derive(Clone, Debug, PartialEq)]
pub struct OneDim {
    pub values: Vec<LaurentZ>,
}

impl OneDim {
    pub fn label(&self) -> String {
        match self.values.iter().position(|v| !v.is_zero()) {
            None => "M_0".to_string(),
            Some(i) if self.values.iter().filter(|v| !v.is_zero()).count() == 1 => {
                format!("M_([N]!,{i})")
            }
            _ => {
                let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
                format!("M({})", v.join(","))
            }
        }
    }
}

/// All one-dimensional representations of T_e. Since theta_i^2 = [N]! theta_i, every
/// generator acts by 0 or [N]!, and each of the 2^N candidates is tested.
pub fn one_dim_reps(rank: usize, level: u32) -> Vec<OneDim> {
    let table = DTable::new(rank, level + 1);
    let n = cyc_order(rank, level);
    let qn = LaurentZ::qnum(rank as i64);
    let mut out = Vec::new();
    for mask in 0u32..(1 << rank) {
        let normalized = (0..rank)
            .map(|i| {
                let mut m = MixedMat::zeros(1, n);
                if mask >> i & 1 == 1 {
                    m.set(0, 0, MixedScalar::from_laurent(n, &qn));
                }
                m
            })
            .collect();
        let rep = RepMatrix {
            rank,
            level,
            dim: 1,
            normalized,
        };
        if rep.check_relations().is_ok() && rep.kills_ideal(&table).is_ok() {
            let nf = LaurentZ::qfact(rank as u32);
            out.push(OneDim {
                values: (0..rank)
                    .map(|i| if mask >> i & 1 == 1 { nf.clone() } else { LaurentZ::zero() })
                    .collect(),
            });
        }
    }
    out
}

/// 1 for M_0, plus N more when N divides e.
pub fn one_dim_count_formula(rank: usize, level: u32) -> usize {
    1 + if level as usize % rank == 0 { rank } else { 0 }
}

#[derive(Clone, Debug)]
pub struct SigmaRep {
    pub k: Weight,
    pub rep: RepMatrix,
    /// Stabilizer order m of the point under rotation.
    pub stab: usize,
    /// Dimensions of the simple summands: m copies of N/m.
    pub profile: Vec<usize>,
}

/// The N-dimensional representation M(sigma) at sigma = 2 pi (k + rho)/M.
pub fn sigma_rep(rank: usize, level: u32, k: &Weight) -> Result<SigmaRep, NhedralError> {
    if k.rank() != rank || !k.in_alcove(level) {
        return Err(NhedralError::InvalidWeight(k.clone(), level));
    }
    let order = rank as u32 + level;
    let n = cyc_order(rank, level);
    let pt = z_values(rank, order, k);
    let zed = |d: usize| -> MixedScalar {
        if d == 0 {
            MixedScalar::from_laurent(n, &LaurentZ::qnum(rank as i64))
        } else {
            MixedScalar::from_cyc(pt.z[d - 1].clone())
        }
    };
    let normalized = (0..rank)
        .map(|i| {
            let mut m = MixedMat::zeros(rank, n);
            for j in 0..rank {
                m.set(i, j, zed((j + rank - i) % rank));
            }
            m
        })
        .collect();
    let alcove = Alcove::new(rank, level);
    let idx = alcove.index_of(k).unwrap();
    let stab = alcove.stab[idx];
    Ok(SigmaRep {
        k: k.clone(),
        rep: RepMatrix {
            rank,
            level,
            dim: rank,
            normalized,
        },
        stab,
        profile: vec![rank / stab; stab],
    })
}

/// Sum over simples of dim^2: M_0 plus m (N/m)^2 for every rotation orbit of the alcove.
pub fn census(rank: usize, level: u32) -> u64 {
    let alcove = Alcove::new(rank, level);
    let orbits: u64 = alcove
        .orbits
        .iter()
        .map(|o| {
            let m = alcove.stab[o[0]] as u64;
            let d = rank as u64 / m;
            m * d * d
        })
        .sum();
    1 + orbits
}

/// A generic numeric v for commutant dimensions.
pub fn generic_v() -> Complex64 {
    Complex64::new(1.137, 0.241)
}

/// Convenience for printing exact representation matrices.
pub fn mat_to_strings(m: &MixedMat) -> Vec<Vec<String>> {
    (0..m.dim).map(|r| (0..m.dim).map(|c| m.at(r, c).to_string()).collect()).collect()
}

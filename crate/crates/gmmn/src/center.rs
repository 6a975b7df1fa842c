//! The asymptotic category at level e: rank numerology, and the modular data of its
//! Drinfeld center realized as the modular closure of (Rep ⊠ Rep^rev)_0.

use crate::exactnum::nt::{binomial, divisors, euler_phi, factorial, gcd, jordan3, mobius};
use crate::exactnum::{sum_all, BigRat, CycQ};
use crate::fusion::SlnModular;
use crate::weights::{alcove_size, Alcove, Weight};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use crate::par::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CenterError {
    #[error("S-matrix entries between split simples are not available for composite N={rank} (level {level}); {missing} entries left blank")]
    Unsupported {
        rank: usize,
        level: u32,
        missing: usize,
        partial: Box<CenterData>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CenterSimple {
    pub m: Weight,
    pub k: Weight,
    /// Split index in 0..stab.
    pub split: usize,
    /// gcd(stab m, stab k), the stabilizer of the pair under diagonal rotation.
    pub stab: usize,
}

impl CenterSimple {
    pub fn is_split(&self) -> bool {
        self.stab > 1
    }
}

fn graded_key(m: &Weight, k: &Weight) -> (i64, Vec<i64>, Vec<i64>) {
    (m.sum() + k.sum(), m.0.clone(), k.0.clone())
}

/// Diagonal-rotation orbits of color-matched pairs, as (representative indices, stabilizer).
fn pair_orbits(al: &Alcove) -> Vec<(usize, usize, usize)> {
    let len = al.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..len {
        for b in 0..len {
            if al.members[a].color() != al.members[b].color() || seen.contains(&(a, b)) {
                continue;
            }
            let mut orbit = vec![(a, b)];
            let (mut x, mut y) = (al.rot[a], al.rot[b]);
            while (x, y) != (a, b) {
                orbit.push((x, y));
                x = al.rot[x];
                y = al.rot[y];
            }
            let rep = *orbit
                .iter()
                .min_by_key(|(x, y)| graded_key(&al.members[*x], &al.members[*y]))
                .unwrap();
            seen.extend(orbit.iter().copied());
            out.push((rep.0, rep.1, al.rank / orbit.len()));
        }
    }
    out
}

fn simples_of(al: &Alcove) -> Vec<CenterSimple> {
    let mut free = Vec::new();
    let mut split = Vec::new();
    for (a, b, s) in pair_orbits(al) {
        for i in 0..s {
            let cs = CenterSimple {
                m: al.members[a].clone(),
                k: al.members[b].clone(),
                split: i,
                stab: s,
            };
            if s == 1 {
                free.push(cs);
            } else {
                split.push(cs);
            }
        }
    }
    let key = |c: &CenterSimple| (graded_key(&c.m, &c.k), c.split);
    free.sort_by_key(key);
    split.sort_by_key(key);
    free.extend(split);
    free
}

/// Simple objects of the center in canonical order: free first, split last.
pub fn center_simples(rank: usize, level: u32) -> Vec<CenterSimple> {
    simples_of(&Alcove::new(rank, level))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CenterRank {
    pub rank: usize,
    pub order: u32,
    pub formula: u64,
    pub enumerated: u64,
    /// Color-matched pairs, by the totient formula and by counting.
    pub degree_zero_formula: u64,
    pub degree_zero_counted: u64,
    /// stabilizer m -> number of pairs with that stabilizer (counted, formula)
    pub pair_stabilizers: BTreeMap<u64, (u64, u64)>,
}

impl CenterRank {
    pub fn agrees(&self) -> bool {
        self.formula == self.enumerated
            && self.degree_zero_formula == self.degree_zero_counted
            && self.pair_stabilizers.values().all(|(a, b)| a == b)
    }
}

fn exact_u64(q: BigRat) -> u64 {
    assert!(q.is_integer(), "non-integral count {q}");
    q.to_integer().to_u64().unwrap()
}

/// (1/M²) sum_{k | gcd(N,M)} J₃(k) C(M/k, N/k)².
pub fn center_rank_formula(rank: u64, order: u64) -> u64 {
    let s: BigInt = divisors(gcd(rank, order))
        .into_iter()
        .map(|k| {
            let c = binomial(order / k, rank / k);
            &c * &c * jordan3(k)
        })
        .sum();
    exact_u64(BigRat::new(s, (order * order).into()))
}

/// (N/M²) sum_{k | gcd(N,M)} φ(k) C(M/k, N/k)².
pub fn degree_zero_formula(rank: u64, order: u64) -> u64 {
    let s: BigInt = divisors(gcd(rank, order))
        .into_iter()
        .map(|k| {
            let c = binomial(order / k, rank / k);
            &c * &c * euler_phi(k)
        })
        .sum();
    exact_u64(BigRat::new(s * rank, (order * order).into()))
}

/// (mN/M²) sum_{k | gcd(N/m, M/m)} μ(k) C(M/mk, N/mk)², pairs with stabilizer m.
pub fn pair_stab_formula(rank: u64, order: u64, m: u64) -> u64 {
    if gcd(rank, order) % m != 0 {
        return 0;
    }
    let s: BigInt = divisors(gcd(rank / m, order / m))
        .into_iter()
        .map(|k| {
            let c = binomial(order / (m * k), rank / (m * k));
            &c * &c * mobius(k)
        })
        .sum();
    exact_u64(BigRat::new(s * (m * rank), (order * order).into()))
}

pub fn center_rank(rank: usize, order: u32) -> CenterRank {
    assert!(order as usize >= rank);
    let al = Alcove::new(rank, order - rank as u32);
    let (r, o) = (rank as u64, order as u64);
    let mut zero = 0u64;
    let mut counted: BTreeMap<u64, u64> = BTreeMap::new();
    for a in 0..al.len() {
        for b in 0..al.len() {
            if al.members[a].color() == al.members[b].color() {
                zero += 1;
                *counted.entry(gcd(al.stab[a] as u64, al.stab[b] as u64)).or_default() += 1;
            }
        }
    }
    let pair_stabilizers = divisors(gcd(r, o))
        .into_iter()
        .map(|m| (m, (counted.get(&m).copied().unwrap_or(0), pair_stab_formula(r, o, m))))
        .collect();
    CenterRank {
        rank,
        order,
        formula: center_rank_formula(r, o),
        enumerated: simples_of(&al).len() as u64,
        degree_zero_formula: degree_zero_formula(r, o),
        degree_zero_counted: zero,
        pair_stabilizers,
    }
}

/// rank / (M^{2N-2} / (N!)²); tends to 1 as M grows.
pub fn center_rank_asymptotic_ratio(rank: usize, order: u32) -> f64 {
    let f = factorial(rank as u64).to_f64().unwrap();
    let lead = (order as f64).powi(2 * rank as i32 - 2) / (f * f);
    center_rank_formula(rank as u64, order as u64) as f64 / lead
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterData {
    pub rank: usize,
    pub level: u32,
    /// Cyclotomic order of all entries.
    pub n: u32,
    pub simples: Vec<CenterSimple>,
    pub s: Vec<Vec<CycQ>>,
    pub t: Vec<CycQ>,
    /// Entries that could not be computed (left as zero).
    pub missing: Vec<(usize, usize)>,
    pub unitary: bool,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Modular data of the center, normalized so that the unit entry of S is 1.
pub fn center_modular(rank: usize, level: u32) -> Result<CenterData, CenterError> {
    let md = SlnModular::new(rank, level);
    center_modular_from(&md)
}

pub fn center_modular_from(md: &SlnModular) -> Result<CenterData, CenterError> {
    let al = &md.alcove;
    let rank = al.rank;
    let n = md.n;
    let simples = simples_of(al);
    let idx: Vec<(usize, usize)> = simples
        .iter()
        .map(|c| (al.index_of(&c.m).unwrap(), al.index_of(&c.k).unwrap()))
        .collect();
    let prime = is_prime(rank);
    let nn = BigInt::from(rank as u64);
    let inv_n2 = BigRat::new(BigInt::one(), &nn * &nn);
    let len = simples.len();
    let rows: Vec<(Vec<CycQ>, Vec<(usize, usize)>)> = (0..len)
        .into_par_iter()
        .map(|a| {
            let (ma, ka) = idx[a];
            let mut row = Vec::with_capacity(len);
            let mut miss = Vec::new();
            for b in 0..len {
                let (mb, kb) = idx[b];
                let base = &md.s[ma][mb] * &md.s[ka][kb].conj();
                let (s1, s2) = (simples[a].stab, simples[b].stab);
                if s1 > 1 && s2 > 1 {
                    if !prime {
                        miss.push((a, b));
                        row.push(CycQ::zero(n));
                        continue;
                    }
                    // the unique split pair (m, k) on both sides
                    let theta = &md.t[ma] * &md.t[ka].inv().unwrap();
                    let corr = &theta.pow(3) * &md.globaldim;
                    let v = if simples[a].split == simples[b].split {
                        &base + &corr.scale_int(&(&nn - 1))
                    } else {
                        &base - &corr
                    };
                    row.push(v.scale(&inv_n2));
                } else {
                    row.push(base.scale(&BigRat::new(BigInt::one(), BigInt::from(s1 * s2))));
                }
            }
            (row, miss)
        })
        .collect();
    let mut s = Vec::with_capacity(len);
    let mut missing = Vec::new();
    for (row, miss) in rows {
        s.push(row);
        missing.extend(miss);
    }
    let t = idx
        .iter()
        .map(|&(m, k)| &md.t[m].inv().unwrap() * &md.t[k])
        .collect();
    let data = CenterData {
        rank,
        level: al.level,
        n,
        simples,
        s,
        t,
        missing,
        unitary: false,
    };
    if data.missing.is_empty() {
        Ok(data)
    } else {
        Err(CenterError::Unsupported {
            rank,
            level: al.level,
            missing: data.missing.len(),
            partial: Box::new(data),
        })
    }
}

/// Positive square root of the global dimension of the center: dim(Rep) / N.
pub fn sqrt_center_dim(md: &SlnModular) -> CycQ {
    md.globaldim
        .scale(&BigRat::new(BigInt::one(), BigInt::from(md.rank() as u64)))
}

/// Same quantity as M^{N-1} |weyl denominator|^{-2}.
pub fn sqrt_center_dim_weyl(md: &SlnModular) -> CycQ {
    let m = md.alcove.order() as i64;
    let abs2 = &md.weyl_den * &md.weyl_den.conj();
    let num = CycQ::from_bigint(md.n, BigInt::from(m).pow(md.rank() as u32 - 1));
    num.div_ref(&abs2).unwrap()
}

impl CenterData {
    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    /// Divide S by the positive square root of the global dimension.
    pub fn to_unitary(&self, md: &SlnModular) -> CenterData {
        let inv = sqrt_center_dim(md).inv().unwrap();
        let mut out = self.clone();
        for row in &mut out.s {
            for x in row.iter_mut() {
                *x = &*x * &inv;
            }
        }
        out.unitary = true;
        out
    }

    pub fn unit_index(&self) -> usize {
        self.simples
            .iter()
            .position(|c| c.m.sum() == 0 && c.k.sum() == 0 && c.split == 0)
            .unwrap()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.s[i][j] == self.s[j][i]))
    }

    /// S conj(S) as an exact matrix.
    pub fn s_sbar(&self) -> Vec<Vec<CycQ>> {
        let len = self.len();
        (0..len)
            .into_par_iter()
            .map(|i| {
                (0..len)
                    .map(|j| sum_all(self.n, (0..len).map(|k| &self.s[i][k] * &self.s[j][k].conj())))
                    .collect()
            })
            .collect()
    }

    /// Ratios sum_i S_{(m,k,i),x} / (S_{m,m'} conj S_{k,k'}) grouped by (row stab, column stab).
    pub fn row_sum_ratios(&self, md: &SlnModular) -> BTreeMap<(usize, usize), Vec<BigRat>> {
        let al = &md.alcove;
        let mut out: BTreeMap<(usize, usize), Vec<BigRat>> = BTreeMap::new();
        let len = self.len();
        for a in 0..len {
            let ca = &self.simples[a];
            if ca.split != 0 {
                continue;
            }
            let (ma, ka) = (al.index_of(&ca.m).unwrap(), al.index_of(&ca.k).unwrap());
            let group: Vec<usize> = (0..len)
                .filter(|&x| self.simples[x].m == ca.m && self.simples[x].k == ca.k)
                .collect();
            for b in 0..len {
                let cb = &self.simples[b];
                let (mb, kb) = (al.index_of(&cb.m).unwrap(), al.index_of(&cb.k).unwrap());
                let base = &md.s[ma][mb] * &md.s[ka][kb].conj();
                if base.is_zero() {
                    continue;
                }
                let sum = sum_all(self.n, group.iter().map(|&x| self.s[x][b].clone()));
                if let Some(r) = sum.div_ref(&base).unwrap().as_rational() {
                    let v = out.entry((ca.stab, cb.stab)).or_default();
                    if !v.contains(&r) {
                        v.push(r);
                    }
                } else {
                    out.entry((ca.stab, cb.stab)).or_default().push(BigRat::zero() - BigRat::one());
                }
            }
        }
        out
    }
}

/// Permutation p with a[p[i]][p[j]] = b[i][j] for all i, j, found by backtracking.
pub fn match_up_to_permutation(a: &[Vec<CycQ>], b: &[Vec<CycQ>]) -> Option<Vec<usize>> {
    let len = a.len();
    if b.len() != len {
        return None;
    }
    let profile = |m: &[Vec<CycQ>], i: usize| {
        let mut r: Vec<String> = m[i].iter().map(|x| x.to_string()).collect();
        r.sort();
        (m[i][i].to_string(), r)
    };
    let pa: Vec<_> = (0..len).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..len).map(|i| profile(b, i)).collect();
    let mut p = vec![usize::MAX; len];
    let mut used = vec![false; len];
    fn go(
        i: usize,
        a: &[Vec<CycQ>],
        b: &[Vec<CycQ>],
        pa: &[(String, Vec<String>)],
        pb: &[(String, Vec<String>)],
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] || pa[c] != pb[i] {
                continue;
            }
            if (0..i).all(|j| a[c][p[j]] == b[i][j] && a[p[j]][c] == b[j][i]) {
                p[i] = c;
                used[c] = true;
                if go(i + 1, a, b, pa, pb, p, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    if go(0, a, b, &pa, &pb, &mut p, &mut used) {
        Some(p)
    } else {
        None
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Block {
    /// Stabilizer order m.
    pub m: u64,
    /// Matrix size N!/m in the big category (N/m in the small one).
    pub size_big: u64,
    pub size_small: u64,
    /// n_m from the closed formula.
    pub count: u64,
    /// n_m as m times the number of weight orbits with stabilizer m.
    pub count_weights: u64,
    /// n_m as m times the number of N-subsets of Z/M with stabilizer m under shifting.
    pub count_subsets: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CmNumerology {
    pub rank: usize,
    pub order: u32,
    /// Number of weights at level e.
    pub weights: u64,
    pub rk_small: u64,
    pub rk_big: u64,
    /// (N!)²/M C(M, N), also the Calogero-Moser cell size.
    pub rk_big_formula: u64,
    pub cm_cell_size: u64,
    pub blocks: Vec<Block>,
}

impl CmNumerology {
    pub fn consistent(&self) -> bool {
        let big: u64 = self.blocks.iter().map(|b| b.count * b.size_big * b.size_big).sum();
        let small: u64 = self.blocks.iter().map(|b| b.count * b.size_small * b.size_small).sum();
        self.rk_big == self.rk_big_formula
            && self.rk_big == big
            && self.rk_small == small
            && self
                .blocks
                .iter()
                .all(|b| b.count == b.count_weights && b.count == b.count_subsets)
    }
}

/// (m²/M) sum_{k | gcd(N/m, M/m)} μ(k) C(M/mk, N/mk).
pub fn block_count_formula(rank: u64, order: u64, m: u64) -> u64 {
    let s: BigInt = divisors(gcd(rank / m, order / m))
        .into_iter()
        .map(|k| binomial(order / (m * k), rank / (m * k)) * mobius(k))
        .sum();
    exact_u64(BigRat::new(s * (m * m), order.into()))
}

fn subset_stabilizers(rank: usize, order: usize) -> BTreeMap<u64, u64> {
    // orbits of N-subsets of Z/M under shifting, counted by stabilizer
    let mut out = BTreeMap::new();
    let full = (1u64 << order) - 1;
    let rot = |x: u64| ((x << 1) | (x >> (order - 1))) & full;
    for x in 0..=full {
        if x.count_ones() as usize != rank {
            continue;
        }
        let mut y = rot(x);
        let mut size = 1u64;
        let mut minimal = true;
        while y != x {
            minimal &= y > x;
            y = rot(y);
            size += 1;
        }
        if minimal {
            *out.entry(order as u64 / size).or_default() += 1;
        }
    }
    out
}

pub fn cm_numerology(rank: usize, order: u32) -> CmNumerology {
    assert!(order as usize >= rank && order <= 62);
    let level = order - rank as u32;
    let al = Alcove::new(rank, level);
    let (r, o) = (rank as u64, order as u64);
    let mut weight_orbits: BTreeMap<u64, u64> = BTreeMap::new();
    for orb in &al.orbits {
        *weight_orbits.entry(r / orb.len() as u64).or_default() += 1;
    }
    let subsets = subset_stabilizers(rank, order as usize);
    let nf = factorial(r).to_u64().unwrap();
    let blocks = divisors(gcd(r, o))
        .into_iter()
        .map(|m| Block {
            m,
            size_big: nf / m,
            size_small: r / m,
            count: block_count_formula(r, o, m),
            count_weights: m * weight_orbits.get(&m).copied().unwrap_or(0),
            count_subsets: m * subsets.get(&m).copied().unwrap_or(0),
        })
        .filter(|b| b.count + b.count_weights + b.count_subsets > 0)
        .collect();
    let p = alcove_size(rank, level);
    let fm1 = factorial(r - 1).to_u64().unwrap();
    let rk_big_formula = exact_u64(BigRat::new(
        binomial(o, r) * BigInt::from(nf * nf),
        o.into(),
    ));
    CmNumerology {
        rank,
        order,
        weights: p,
        rk_small: r * p,
        rk_big: fm1 * fm1 * r * p,
        rk_big_formula,
        cm_cell_size: rk_big_formula,
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn sl3_level3_simples() {
        let sim = center_simples(3, 3);
        assert_eq!(sim.len(), 14);
        assert_eq!(sim.iter().filter(|c| !c.is_split()).count(), 11);
        let split: Vec<_> = sim.iter().filter(|c| c.is_split()).collect();
        assert_eq!(split.len(), 3);
        for (i, c) in split.iter().enumerate() {
            assert_eq!((c.m.clone(), c.k.clone(), c.split, c.stab), (w(&[1, 1]), w(&[1, 1]), i, 3));
        }
        assert_eq!(sim[0].m, w(&[0, 0]));
        assert_eq!(sim[0].k, w(&[0, 0]));
    }

    #[test]
    fn level_zero_is_n_copies() {
        for n in 2..6 {
            let sim = center_simples(n, 0);
            assert_eq!(sim.len(), n);
            let data = center_modular(n, 0);
            if is_prime(n) {
                // the unit pair itself splits, so the raw diagonal is 1/N
                let md = SlnModular::new(n, 0);
                let raw = data.unwrap();
                let d = raw.to_unitary(&md);
                for i in 0..n {
                    assert!(d.t[i].is_one());
                    assert_eq!(raw.s[i][i], CycQ::from_rat(raw.n, &BigRat::new(1.into(), (n as u64).into())));
                    for j in 0..n {
                        let want = if i == j { 1 } else { 0 };
                        assert_eq!(d.s[i][j], CycQ::from_int(d.n, want));
                    }
                }
            } else {
                assert!(data.is_err());
            }
        }
    }

    #[test]
    fn rank_formula_values() {
        assert_eq!(center_rank_formula(3, 6), 14);
        assert_eq!(center_rank_formula(2, 4), 4);
        assert_eq!(center_rank_formula(4, 8), 84);
        assert_eq!(center_rank_formula(3, 4), 1);
        assert_eq!(degree_zero_formula(3, 6), 34);
    }

    #[test]
    fn rank_formula_matches_enumeration() {
        for n in 2..=4usize {
            for m in n as u32..=10 {
                let r = center_rank(n, m);
                assert!(r.agrees(), "{r:?}");
            }
        }
        let r = center_rank(4, 8);
        assert_eq!((r.formula, r.enumerated), (84, 84));
    }

    #[test]
    fn asymptotic_ratio_approaches_one() {
        let a = center_rank_asymptotic_ratio(2, 40);
        let b = center_rank_asymptotic_ratio(2, 400);
        assert!((b - 1.0).abs() < (a - 1.0).abs());
        assert!((b - 1.0).abs() < 0.01);
    }

    #[test]
    fn split_block_and_unit() {
        let d = center_modular(3, 3).unwrap();
        let u = d.unit_index();
        assert!(d.s[u][u].is_one());
        assert!(d.t[u].is_one());
        let last = d.len() - 3;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 9 } else { -3 };
                assert_eq!(d.s[last + i][last + j], CycQ::from_int(d.n, want));
            }
        }
    }

    #[test]
    fn modular_structure_prime_rank() {
        for (n, e) in [(2, 2), (2, 3), (3, 3), (3, 2), (5, 0)] {
            let md = SlnModular::new(n, e);
            let d = center_modular_from(&md).unwrap();
            assert!(d.is_symmetric());
            let dim = sqrt_center_dim(&md);
            assert_eq!(dim, sqrt_center_dim_weyl(&md), "N={n} e={e}");
            let ss = d.s_sbar();
            let want = &dim * &dim;
            for i in 0..d.len() {
                assert!(d.t[i].as_root().is_some());
                for j in 0..d.len() {
                    let w = if i == j { want.clone() } else { CycQ::zero(d.n) };
                    assert_eq!(ss[i][j], w, "N={n} e={e} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn unitary_normalization() {
        let md = SlnModular::new(3, 3);
        let d = center_modular_from(&md).unwrap().to_unitary(&md);
        assert_eq!(sqrt_center_dim(&md), CycQ::from_int(36, 12));
        let ss = d.s_sbar();
        for i in 0..d.len() {
            assert!(ss[i][i].is_one());
        }
    }

    #[test]
    fn row_sum_constant_is_inverse_column_stabilizer() {
        let md = SlnModular::new(3, 3);
        let d = center_modular_from(&md).unwrap();
        for ((_, s2), ratios) in d.row_sum_ratios(&md) {
            assert_eq!(ratios, vec![BigRat::new(1.into(), (s2 as u64).into())]);
        }
    }

    #[test]
    fn composite_rank_with_splitting_is_unsupported() {
        match center_modular(4, 4) {
            Err(CenterError::Unsupported { partial, missing, .. }) => {
                assert_eq!(missing, partial.missing.len());
                assert!(missing > 0);
            }
            _ => panic!("expected an unsupported configuration"),
        }
        assert!(center_modular(4, 1).is_ok());
    }

    #[test]
    fn permutation_matching() {
        let d = center_modular(3, 2).unwrap();
        let len = d.len();
        let perm: Vec<usize> = (0..len).rev().collect();
        let b: Vec<Vec<CycQ>> = (0..len)
            .map(|i| (0..len).map(|j| d.s[perm[i]][perm[j]].clone()).collect())
            .collect();
        let p = match_up_to_permutation(&d.s, &b).unwrap();
        for i in 0..len {
            for j in 0..len {
                assert_eq!(d.s[p[i]][p[j]], b[i][j]);
            }
        }
    }

    #[test]
    fn cm_numbers() {
        let c = cm_numerology(3, 6);
        assert_eq!((c.rk_small, c.rk_big, c.rk_big_formula), (30, 120, 120));
        assert!(c.consistent());
        let c = cm_numerology(2, 5);
        assert_eq!(c.cm_cell_size, 8);
        assert!(c.consistent());
        let c = cm_numerology(3, 3);
        assert_eq!(c.rk_small, 3);
        for n in 2..=5 {
            for m in n as u32..=12 {
                assert!(cm_numerology(n, m).consistent(), "N={n} M={m}");
            }
        }
    }
}

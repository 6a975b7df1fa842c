//! sl_N weights in fundamental coordinates, the level-e alcove and its Z/N rotation.

use crate::exactnum::nt::{binomial, divisors, gcd, mobius};
use crate::exactnum::BigRat;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("weight {0} is not in the level-{1} alcove")]
    OutOfAlcove(Weight, u32),
    #[error("cannot parse weight `{0}`")]
    Parse(String),
}

/// Coefficients on the fundamental weights omega_1..omega_{N-1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank - 1])
    }

    pub fn rho(rank: usize) -> Weight {
        Weight(vec![1; rank - 1])
    }

    /// omega_i, 1 <= i <= N-1.
    pub fn fund(rank: usize, i: usize) -> Weight {
        let mut c = vec![0; rank - 1];
        c[i - 1] = 1;
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len() + 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn in_alcove(&self, e: u32) -> bool {
        self.is_dominant() && self.sum() <= e as i64
    }

    pub fn transpose(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// epsilon-coordinates with a_1 = 0, a_{j+1} = a_j + m_j.
    pub fn to_eps(&self) -> Vec<i64> {
        let mut a = Vec::with_capacity(self.rank());
        a.push(0);
        for (j, &m) in self.0.iter().enumerate() {
            a.push(a[j] + m);
        }
        a
    }

    /// Inverse of `to_eps` (defined modulo the all-ones vector).
    pub fn from_eps(a: &[i64]) -> Weight {
        Weight(a.windows(2).map(|w| w[1] - w[0]).collect())
    }

    /// Central character m_1 + 2m_2 + ... + (N-1)m_{N-1} mod N.
    pub fn color(&self) -> u32 {
        let n = self.rank() as i64;
        let s: i64 = self.0.iter().enumerate().map(|(j, &m)| (j as i64 + 1) * m).sum();
        s.rem_euclid(n) as u32
    }

    /// m -> (e - sum m, m_1, ..., m_{N-2}).
    pub fn rotate(&self, e: u32) -> Result<Weight, WeightError> {
        if !self.in_alcove(e) {
            return Err(WeightError::OutOfAlcove(self.clone(), e));
        }
        let mut c = Vec::with_capacity(self.0.len());
        c.push(e as i64 - self.sum());
        c.extend_from_slice(&self.0[..self.0.len() - 1]);
        Ok(Weight(c))
    }

    pub fn parse(s: &str) -> Result<Weight, WeightError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let c: Result<Vec<i64>, _> = t.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match c {
            Ok(c) if !c.is_empty() => Ok(Weight(c)),
            _ => Err(WeightError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// N * <a, b>, always an integer. Gram matrix <omega_i, omega_j> = min(i,j) - ij/N.
pub fn n_inner(a: &Weight, b: &Weight) -> i64 {
    n_inner_eps(&a.to_eps(), &b.to_eps())
}

pub fn n_inner_eps(a: &[i64], b: &[i64]) -> i64 {
    let n = a.len() as i64;
    let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    n * dot - a.iter().sum::<i64>() * b.iter().sum::<i64>()
}

pub fn inner(a: &Weight, b: &Weight) -> Result<BigRat, WeightError> {
    if a.rank() != b.rank() {
        return Err(WeightError::RankMismatch(a.rank(), b.rank()));
    }
    Ok(BigRat::new(n_inner(a, b).into(), (a.rank() as i64).into()))
}

/// Weights of the fundamental representation L_{omega_i}, highest first.
pub fn fund_weights(rank: usize, i: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << rank) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let b: Vec<i64> = (0..rank).map(|j| ((mask >> j) & 1) as i64).collect();
        out.push(Weight((0..rank - 1).map(|j| b[j] - b[j + 1]).collect()));
    }
    let top = Weight::fund(rank, i);
    out.sort_by(|x, y| (*y == top).cmp(&(*x == top)).then_with(|| y.cmp(x)));
    out
}

/// Alcove sort key: coordinate sum ascending, then coordinates descending.
pub fn alcove_cmp(a: &Weight, b: &Weight) -> std::cmp::Ordering {
    a.sum().cmp(&b.sum()).then_with(|| b.0.cmp(&a.0))
}

/// All dominant weights of rank N with coordinate sum <= s, in alcove order.
pub fn dominant_upto(rank: usize, s: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank - 1];
    fn rec(pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if pos == cur.len() {
            out.push(Weight(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, s as i64, &mut cur, &mut out);
    out.sort_by(alcove_cmp);
    out
}

/// p_{N,e} = C(e+N-1, N-1).
pub fn alcove_size(rank: usize, e: u32) -> u64 {
    binomial(e as u64 + rank as u64 - 1, rank as u64 - 1).to_u64().unwrap()
}

#[derive(Clone, Debug)]
pub struct Alcove {
    pub rank: usize,
    pub level: u32,
    pub members: Vec<Weight>,
    index: HashMap<Weight, usize>,
    /// Index of the rotated weight.
    pub rot: Vec<usize>,
    /// Orbit id per member; orbits numbered by their minimal member.
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    pub stab: Vec<usize>,
}

impl Alcove {
    pub fn new(rank: usize, level: u32) -> Alcove {
        assert!(rank >= 2);
        let members = dominant_upto(rank, level);
        let index: HashMap<Weight, usize> =
            members.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let rot: Vec<usize> = members
            .iter()
            .map(|m| index[&m.rotate(level).unwrap()])
            .collect();
        let mut orbit_of = vec![usize::MAX; members.len()];
        let mut orbits = Vec::new();
        for start in 0..members.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut orb = vec![start];
            let mut x = rot[start];
            while x != start {
                orb.push(x);
                x = rot[x];
            }
            for &y in &orb {
                orbit_of[y] = orbits.len();
            }
            orbits.push(orb);
        }
        let stab = (0..members.len())
            .map(|i| rank / orbits[orbit_of[i]].len())
            .collect();
        Alcove {
            rank,
            level,
            members,
            index,
            rot,
            orbit_of,
            orbits,
            stab,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn order(&self) -> u32 {
        self.rank as u32 + self.level
    }

    /// Position of a member inside its rotation orbit.
    pub fn orbit_pos(&self, i: usize) -> usize {
        self.orbits[self.orbit_of[i]].iter().position(|&x| x == i).unwrap()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Census {
    pub rank: usize,
    pub level: u32,
    pub total: u64,
    /// stabilizer order -> number of weights (brute force)
    pub counted: BTreeMap<u64, u64>,
    /// stabilizer order -> closed-form count
    pub formula: BTreeMap<u64, u64>,
}

impl Census {
    pub fn agrees(&self) -> bool {
        self.counted == self.formula && self.total == alcove_size(self.rank, self.level)
    }
}

/// (N/M) sum_{k | gcd(N/m, M/m)} mu(k) C(M/mk, N/mk), the number of weights with stabilizer m.
pub fn stab_count_formula(rank: u64, order: u64, m: u64) -> BigRat {
    let g = gcd(rank / m, order / m);
    let s: BigInt = divisors(g)
        .into_iter()
        .map(|k| binomial(order / (m * k), rank / (m * k)) * mobius(k))
        .sum();
    BigRat::new(s * rank, order.into())
}

pub fn stab_census(rank: usize, level: u32) -> Census {
    let al = Alcove::new(rank, level);
    let mut counted = BTreeMap::new();
    for &s in &al.stab {
        *counted.entry(s as u64).or_insert(0) += 1;
    }
    let order = rank as u64 + level as u64;
    let mut formula = BTreeMap::new();
    for m in divisors(gcd(rank as u64, order)) {
        let v = stab_count_formula(rank as u64, order, m);
        assert!(v.is_integer(), "non-integral stabilizer count");
        let v = v.to_integer().to_u64().unwrap();
        if v > 0 {
            formula.insert(m, v);
        }
    }
    Census {
        rank,
        level,
        total: al.len() as u64,
        counted,
        formula,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn gram_matrix() {
        for n in 2..7 {
            for i in 1..n {
                for j in 1..n {
                    let want = BigRat::new(
                        (i.min(j) as i64 * n as i64 - (i * j) as i64).into(),
                        (n as i64).into(),
                    );
                    assert_eq!(inner(&Weight::fund(n, i), &Weight::fund(n, j)).unwrap(), want);
                }
            }
        }
        assert_eq!(inner(&w(&[1]), &w(&[1])).unwrap(), BigRat::new(1.into(), 2.into()));
        assert_eq!(inner(&w(&[1, 1]), &w(&[1, 0, 0])), Err(WeightError::RankMismatch(3, 4)));
    }

    #[test]
    fn twist_exponent_of_fixed_point() {
        let m = w(&[1, 1]);
        let rho2 = Weight::rho(3).scale(2);
        assert_eq!(n_inner(&m, &m.add(&rho2)), 3 * 6);
    }

    #[test]
    fn colors() {
        assert_eq!(w(&[0, 0, 0]).color(), 0);
        assert_eq!(w(&[1, 0, 1]).color(), 0);
        let cols: Vec<u32> = (1..4).map(|i| Weight::fund(4, i).color()).collect();
        assert_eq!(cols, vec![1, 2, 3]);
    }

    #[test]
    fn rotation() {
        assert_eq!(w(&[1, 1]).rotate(3).unwrap(), w(&[1, 1]));
        let mut x = w(&[2, 1, 1]);
        let mut chain = vec![];
        for _ in 0..4 {
            x = x.rotate(4).unwrap();
            chain.push(x.clone());
        }
        assert_eq!(chain, vec![w(&[0, 2, 1]), w(&[1, 0, 2]), w(&[1, 1, 0]), w(&[2, 1, 1])]);
        assert_eq!(w(&[0]).rotate(0).unwrap(), w(&[0]));
        assert!(w(&[3, 0]).rotate(2).is_err());
    }

    #[test]
    fn rotation_shifts_color_and_twist() {
        for n in 2..=5usize {
            for e in 0..=6u32 {
                let ew1 = Weight::fund(n, 1).scale(e as i64);
                let rho2 = Weight::rho(n).scale(2);
                let t = |x: &Weight| n_inner(x, &x.add(&rho2));
                for m in dominant_upto(n, e) {
                    let r = m.rotate(e).unwrap();
                    assert_eq!((r.color() as i64 - m.color() as i64 - e as i64).rem_euclid(n as i64), 0);
                    // eta^{(r, r+2rho) - (m, m+2rho) - (ew1, ew1+2rho)} = zeta^{-chi(m)}
                    let lhs = t(&r) - t(&m) - t(&ew1);
                    let big_m = n as i64 + e as i64;
                    let chi = m.color() as i64;
                    assert_eq!((lhs + 2 * big_m * chi).rem_euclid(2 * big_m * n as i64), 0, "N={n} e={e} m={m}");
                }
            }
        }
    }

    #[test]
    fn fundamental_weights() {
        assert_eq!(fund_weights(2, 1), vec![w(&[1]), w(&[-1])]);
        let mut f41 = fund_weights(4, 1);
        f41.sort();
        let mut want = vec![w(&[1, 0, 0]), w(&[-1, 1, 0]), w(&[0, -1, 1]), w(&[0, 0, -1])];
        want.sort();
        assert_eq!(f41, want);
        let f42 = fund_weights(4, 2);
        assert_eq!(f42.len(), 6);
        assert!(f42.contains(&w(&[0, 1, 0])) && f42.contains(&w(&[1, -1, 1])));
        for n in 2..=6 {
            for i in 1..n {
                let ws = fund_weights(n, i);
                assert_eq!(ws[0], Weight::fund(n, i));
                let total = ws.iter().fold(Weight::zero(n), |a, b| a.add(b));
                assert_eq!(total, Weight::zero(n));
                let mut neg: Vec<Weight> = ws.iter().map(|x| x.scale(-1)).collect();
                let mut dual = fund_weights(n, n - i);
                neg.sort();
                dual.sort();
                assert_eq!(neg, dual);
                let mut tr: Vec<Weight> = ws.iter().map(|x| x.scale(-1).transpose()).collect();
                let mut same = ws.clone();
                tr.sort();
                same.sort();
                assert_eq!(tr, same);
            }
        }
    }

    #[test]
    fn alcove_order_and_size() {
        let a = dominant_upto(4, 1);
        assert_eq!(a, vec![w(&[0, 0, 0]), w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])]);
        for n in 2..=5 {
            for e in 0..=6 {
                assert_eq!(Alcove::new(n, e).len() as u64, alcove_size(n, e));
            }
        }
        assert_eq!(alcove_size(6, 6), 462);
    }

    #[test]
    fn census() {
        let c = stab_census(4, 4);
        assert_eq!(c.counted, BTreeMap::from([(1, 32), (2, 2), (4, 1)]));
        assert!(c.agrees());
        let c = stab_census(3, 3);
        assert_eq!(c.counted, BTreeMap::from([(1, 9), (3, 1)]));
        assert_eq!(stab_census(6, 6).total, 462);
        for n in 2..=5 {
            for e in 0..=6 {
                assert!(stab_census(n, e).agrees(), "N={n} e={e}");
            }
        }
    }
}

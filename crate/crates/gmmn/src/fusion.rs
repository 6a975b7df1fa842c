//! Level-e fusion ring of Rep(sl_N) at eta = exp(i pi / M), and its modular data.

use crate::chebyshev::DTable;
use crate::exactnum::linalg::permute;
use crate::exactnum::{sum_all, CycQ};
use crate::weights::{fund_weights, n_inner, Alcove, Weight};
use nalgebra::DMatrix;
use num_complex::Complex64;
use crate::par::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("Verlinde value {value} at ({a},{b},{c}) is not within 0.1 of an integer")]
    Certification { a: usize, b: usize, c: usize, value: f64 },
}

/// L_{omega_i} (x) L_m at level e: shifts by the weights of omega_i that stay in the alcove.
pub fn fuse_fund(e: u32, i: usize, m: &Weight) -> Vec<Weight> {
    fund_weights(m.rank(), i)
        .iter()
        .map(|w| m.add(w))
        .filter(|t| t.in_alcove(e))
        .collect()
}

#[derive(Clone, Debug)]
pub struct FusionRing {
    pub alcove: Alcove,
    /// fund[i-1][(m, m')] = multiplicity of L_{m'} in L_{omega_i} (x) L_m.
    pub fund: Vec<DMatrix<i128>>,
}

impl FusionRing {
    pub fn new(rank: usize, level: u32) -> FusionRing {
        let alcove = Alcove::new(rank, level);
        let len = alcove.len();
        let fund = (1..rank)
            .map(|i| {
                let mut a = DMatrix::zeros(len, len);
                for (r, m) in alcove.members.iter().enumerate() {
                    for t in fuse_fund(level, i, m) {
                        a[(r, alcove.index_of(&t).unwrap())] += 1;
                    }
                }
                a
            })
            .collect();
        FusionRing { alcove, fund }
    }

    pub fn rank(&self) -> usize {
        self.alcove.rank
    }

    pub fn level(&self) -> u32 {
        self.alcove.level
    }

    /// Fusion matrices of every simple, as U_m evaluated at the fundamental matrices.
    pub fn all_matrices(&self) -> Vec<DMatrix<i128>> {
        let table = DTable::new(self.rank(), self.level());
        let monos = table.monomials(&self.fund);
        self.alcove
            .members
            .iter()
            .map(|m| table.eval_with(m, &monos))
            .collect()
    }

    /// N_{a,b}^c with a, b, c alcove indices.
    pub fn coefficient(all: &[DMatrix<i128>], a: usize, b: usize, c: usize) -> i128 {
        all[a][(b, c)]
    }
}

/// Weyl-type alternating sum sum_w sign(w) zeta_n^{2 N (a, w b)} for epsilon vectors a, b.
fn alternating_sum(n: u32, a: &[i64], b: &[i64]) -> CycQ {
    let rank = a.len();
    let mut wide = vec![0i128; n as usize];
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    let mut perm: Vec<usize> = (0..rank).collect();
    permute(&mut perm, 0, false, &mut |p, odd| {
        let dot: i64 = a.iter().zip(p).map(|(x, &j)| x * b[j]).sum();
        let k = 2 * (rank as i64 * dot - sa * sb);
        wide[k.rem_euclid(n as i64) as usize] += if odd { -1 } else { 1 };
    });
    CycQ::from_wide(n, &wide)
}

#[derive(Clone, Debug)]
pub struct SlnModular {
    pub alcove: Alcove,
    /// Cyclotomic order 2NM.
    pub n: u32,
    pub s: Vec<Vec<CycQ>>,
    pub t: Vec<CycQ>,
    pub qdims: Vec<CycQ>,
    pub globaldim: CycQ,
    /// sum_w sign(w) eta^{2(rho, w rho)}
    pub weyl_den: CycQ,
}

/// Session cyclotomic order n = 2NM.
pub fn cyc_order(rank: usize, level: u32) -> u32 {
    2 * rank as u32 * (rank as u32 + level)
}

/// eta^{(m, m+2rho)} as zeta_n^{N (m, m+2rho)}.
pub fn twist(n: u32, m: &Weight) -> CycQ {
    let rho2 = Weight::rho(m.rank()).scale(2);
    CycQ::root(n, n_inner(m, &m.add(&rho2)))
}

impl SlnModular {
    pub fn new(rank: usize, level: u32) -> SlnModular {
        let alcove = Alcove::new(rank, level);
        let n = cyc_order(rank, level);
        let rho = Weight::rho(rank);
        let shifted: Vec<Vec<i64>> =
            alcove.members.iter().map(|m| m.add(&rho).to_eps()).collect();
        let weyl_den = alternating_sum(n, &rho.to_eps(), &rho.to_eps());
        let inv = weyl_den.inv().expect("Weyl denominator vanishes");
        let len = alcove.len();
        let s: Vec<Vec<CycQ>> = (0..len)
            .into_par_iter()
            .map(|i| {
                (0..len)
                    .map(|j| &alternating_sum(n, &shifted[i], &shifted[j]) * &inv)
                    .collect()
            })
            .collect();
        let t = alcove.members.iter().map(|m| twist(n, m)).collect();
        let qdims: Vec<CycQ> = s[0].clone();
        let globaldim = sum_all(n, qdims.iter().map(|q| q * q));
        SlnModular {
            alcove,
            n,
            s,
            t,
            qdims,
            globaldim,
            weyl_den,
        }
    }

    pub fn rank(&self) -> usize {
        self.alcove.rank
    }

    pub fn len(&self) -> usize {
        self.alcove.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alcove.is_empty()
    }

    pub fn s_numeric(&self) -> Vec<Vec<Complex64>> {
        self.s.iter().map(|r| r.iter().map(|x| x.embed()).collect()).collect()
    }

    /// Fusion coefficients from the Verlinde formula, rounded and certified.
    /// Returns res[a][(b, c)] = N_{a,b}^c.
    pub fn verlinde(&self) -> Result<Vec<DMatrix<i128>>, FusionError> {
        let s = self.s_numeric();
        let d = self.globaldim.embed().re;
        let len = self.len();
        let mut out = Vec::with_capacity(len);
        for a in 0..len {
            let mut m = DMatrix::zeros(len, len);
            for b in 0..len {
                for c in 0..len {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for x in 0..len {
                        acc += s[a][x] * s[b][x] * s[c][x].conj() / s[0][x];
                    }
                    let v = acc.re / d;
                    let r = v.round();
                    if (v - r).abs() > 0.1 || (acc.im / d).abs() > 0.1 {
                        return Err(FusionError::Certification { a, b, c, value: v });
                    }
                    m[(b, c)] = r as i128;
                }
            }
            out.push(m);
        }
        Ok(out)
    }

    /// Index of the dual weight m^T.
    pub fn dual_perm(&self) -> Vec<usize> {
        self.alcove
            .members
            .iter()
            .map(|m| self.alcove.index_of(&m.transpose()).unwrap())
            .collect()
    }
}

/// sum_w sign(w) eta^{2(a, w b)} for dominant-shifted weights; exposed for other modules.
pub fn weyl_sum(n: u32, a: &Weight, b: &Weight) -> CycQ {
    alternating_sum(n, &a.to_eps(), &b.to_eps())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn fundamental_fusion() {
        assert_eq!(fuse_fund(3, 1, &w(&[0, 0])), vec![w(&[1, 0])]);
        let mut f = fuse_fund(4, 1, &w(&[1, 1, 1]));
        f.sort();
        let mut want = vec![w(&[2, 1, 1]), w(&[0, 2, 1]), w(&[1, 0, 2]), w(&[1, 1, 0])];
        want.sort();
        assert_eq!(f, want);
        assert_eq!(fuse_fund(1, 1, &w(&[1])), vec![w(&[0])]);
    }

    #[test]
    fn sl3_level3_data() {
        let md = SlnModular::new(3, 3);
        assert_eq!(md.n, 36);
        assert!(md.s[0][0].is_one());
        let mut q: Vec<i64> = md
            .qdims
            .iter()
            .map(|x| x.as_integer().unwrap().try_into().unwrap())
            .collect();
        q.sort();
        assert_eq!(q, vec![1, 1, 1, 2, 2, 2, 2, 2, 2, 3]);
        assert_eq!(md.globaldim, CycQ::from_int(36, 36));
        let fixed = md.alcove.index_of(&w(&[1, 1])).unwrap();
        assert_eq!(md.t[fixed], CycQ::from_int(36, -1));
        assert_eq!(md.s[fixed][fixed], CycQ::from_int(36, -3));
    }

    #[test]
    fn s_squared_is_duality() {
        for (n, e) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
            let md = SlnModular::new(n, e);
            let len = md.len();
            let dual = md.dual_perm();
            for i in 0..len {
                assert!(md.t[i].as_root().is_some());
                for j in 0..len {
                    assert_eq!(md.s[i][j], md.s[j][i]);
                    let sq = sum_all(md.n, (0..len).map(|k| &md.s[i][k] * &md.s[k][j]));
                    let want = if dual[i] == j { md.globaldim.clone() } else { CycQ::zero(md.n) };
                    assert_eq!(sq, want, "N={n} e={e}");
                }
            }
            for q in &md.qdims {
                let z = q.embed();
                assert!(z.re > 0.0 && z.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn fusion_ring_structure() {
        for (n, e) in [(2, 4), (3, 3), (4, 4), (5, 2)] {
            let fr = FusionRing::new(n, e);
            assert_eq!(fr.alcove.len() as u64, crate::weights::alcove_size(n, e));
            for i in 0..n - 1 {
                assert_eq!(fr.fund[i].transpose(), fr.fund[n - 2 - i]);
                for j in 0..n - 1 {
                    assert_eq!(&fr.fund[i] * &fr.fund[j], &fr.fund[j] * &fr.fund[i]);
                }
            }
            // L_{e omega_1} acts by rotation
            let all = fr.all_matrices();
            let ew1 = fr.alcove.index_of(&Weight::fund(n, 1).scale(e as i64)).unwrap();
            for r in 0..fr.alcove.len() {
                for c in 0..fr.alcove.len() {
                    assert_eq!(all[ew1][(r, c)], (fr.alcove.rot[r] == c) as i128);
                }
            }
        }
    }

    #[test]
    fn verlinde_matches_pieri() {
        for (n, e) in [(2, 5), (3, 3), (4, 2)] {
            let fr = FusionRing::new(n, e);
            let md = SlnModular::new(n, e);
            assert_eq!(md.verlinde().unwrap(), fr.all_matrices(), "N={n} e={e}");
        }
    }

    #[test]
    fn sl2_clebsch_gordan() {
        for e in 0..6u32 {
            let all = FusionRing::new(2, e).all_matrices();
            let len = e as usize + 1;
            for a in 0..len {
                for b in 0..len {
                    let mut want = BTreeMap::new();
                    let mut c = a.abs_diff(b);
                    while c <= (a + b).min(2 * e as usize - a - b) {
                        want.insert(c, 1i128);
                        c += 2;
                    }
                    for c in 0..len {
                        assert_eq!(all[a][(b, c)], *want.get(&c).unwrap_or(&0));
                    }
                }
            }
        }
    }
}

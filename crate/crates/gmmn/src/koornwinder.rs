//! Koornwinder Z-functions and the level-e variety as an exact point set.

use crate::chebyshev::DTable;
use crate::exactnum::CycQ;
use crate::fusion::cyc_order;
use crate::weights::{dominant_upto, fund_weights, n_inner, Alcove, Weight};
use num_complex::Complex64;
use crate::par::*;
use std::collections::{BTreeMap, HashSet};
use std::f64::consts::PI;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KoornwinderError {
    #[error("weight {0} is not in the level-{1} alcove")]
    InvalidWeight(Weight, u32),
    #[error("points for {0} and {1} coincide")]
    NotDistinct(Weight, Weight),
    #[error("U{m} does not vanish at the point of {k}")]
    NotVanishing { m: Weight, k: Weight },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub struct KPoint {
    pub k: Weight,
    /// Z_1, .., Z_{N-1}
    pub z: Vec<CycQ>,
}

impl KPoint {
    pub fn embed(&self) -> Vec<Complex64> {
        self.z.iter().map(|x| x.embed()).collect()
    }
}

/// Exponents a_j with exp(i(sigma, w_j)) = zeta_n^{a_j}, sigma = 2 pi (k+rho)/M, over the
/// weights of the vector representation.
fn vector_exponents(n: u32, k: &Weight) -> Vec<i64> {
    let kr = k.add(&Weight::rho(k.rank()));
    fund_weights(k.rank(), 1)
        .iter()
        .map(|w| (2 * n_inner(&kr, w)).rem_euclid(n as i64))
        .collect()
}

/// Z_i as the i-th elementary symmetric function of the N roots
/// exp(i sigma_1), exp(i(sigma_2 - sigma_1)), .., exp(-i sigma_{N-1}).
pub fn z_values(rank: usize, order: u32, k: &Weight) -> KPoint {
    let n = 2 * rank as u32 * order;
    let a = vector_exponents(n, k);
    let mut wide = vec![vec![0i128; n as usize]; rank + 1];
    for mask in 0u32..(1 << rank) {
        let i = mask.count_ones() as usize;
        let s: i64 = (0..rank).filter(|j| mask >> j & 1 == 1).map(|j| a[j]).sum();
        wide[i][(s % n as i64) as usize] += 1;
    }
    KPoint {
        k: k.clone(),
        z: (1..rank).map(|i| CycQ::from_wide(n, &wide[i])).collect(),
    }
}

/// Z_i as the character sum over the weights of L_{omega_i}.
pub fn z_values_character(rank: usize, order: u32, k: &Weight) -> KPoint {
    let n = 2 * rank as u32 * order;
    let kr = k.add(&Weight::rho(rank));
    let z = (1..rank)
        .map(|i| {
            CycQ::root_sum(
                n,
                fund_weights(rank, i).iter().map(|w| (2 * n_inner(&kr, w), 1)),
            )
        })
        .collect();
    KPoint { k: k.clone(), z }
}

#[derive(Clone, Debug)]
pub struct KVariety {
    pub alcove: Alcove,
    pub n: u32,
    pub points: Vec<KPoint>,
}

impl KVariety {
    pub fn new(rank: usize, level: u32) -> Result<KVariety, KoornwinderError> {
        let alcove = Alcove::new(rank, level);
        let order = rank as u32 + level;
        let points: Vec<KPoint> = alcove
            .members
            .par_iter()
            .map(|k| z_values(rank, order, k))
            .collect();
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.z.clone()) {
                let other = points.iter().find(|q| q.z == p.z).unwrap();
                return Err(KoornwinderError::NotDistinct(other.k.clone(), p.k.clone()));
            }
        }
        Ok(KVariety {
            n: cyc_order(rank, level),
            alcove,
            points,
        })
    }

    pub fn rank(&self) -> usize {
        self.alcove.rank
    }

    pub fn level(&self) -> u32 {
        self.alcove.level
    }

    pub fn point(&self, k: &Weight) -> Result<&KPoint, KoornwinderError> {
        self.alcove
            .index_of(k)
            .map(|i| &self.points[i])
            .ok_or_else(|| KoornwinderError::InvalidWeight(k.clone(), self.level()))
    }

    /// Every U_m with sum m = e+1 vanishes exactly at every point.
    pub fn check_vanishing(&self) -> Result<(), KoornwinderError> {
        let e = self.level();
        let table = DTable::new(self.rank(), e + 1);
        let top: Vec<Weight> = dominant_upto(self.rank(), e + 1)
            .into_iter()
            .filter(|m| m.sum() == e as i64 + 1)
            .collect();
        self.points.par_iter().try_for_each(|p| {
            let monos = table.monomials(&p.z);
            for m in &top {
                if !table.eval_with(m, &monos).is_zero() {
                    return Err(KoornwinderError::NotVanishing {
                        m: m.clone(),
                        k: p.k.clone(),
                    });
                }
            }
            Ok(())
        })
    }

    /// Orbit sizes of the rotation action, as stabilizer order -> number of points.
    pub fn stab_census(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &s in &self.alcove.stab {
            *out.entry(s as u64).or_insert(0) += 1;
        }
        out
    }

    /// Each coordinate rounded to 1e-9, with multiplicities.
    pub fn first_coordinate_clusters(&self) -> Vec<(Complex64, usize)> {
        let mut map: BTreeMap<(i64, i64), (Complex64, usize)> = BTreeMap::new();
        for p in &self.points {
            let z = p.z[0].embed();
            let key = ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64);
            map.entry(key).or_insert((z, 0)).1 += 1;
        }
        map.into_values().collect()
    }

    /// `k1,..,k_{N-1},re Z1,im Z1,..` rows with 15 decimals.
    pub fn to_csv(&self) -> String {
        let rank = self.rank();
        let mut s = format!("# cyclotomic-order {}\n", self.n);
        let mut head: Vec<String> = (1..rank).map(|i| format!("k{i}")).collect();
        for i in 1..rank {
            head.push(format!("re_Z{i}"));
            head.push(format!("im_Z{i}"));
        }
        s.push_str(&head.join(","));
        s.push('\n');
        for p in &self.points {
            let mut row: Vec<String> = p.k.0.iter().map(|c| c.to_string()).collect();
            for z in p.embed() {
                row.push(format!("{:.15}", clean(z.re)));
                row.push(format!("{:.15}", clean(z.im)));
            }
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }
}

fn clean(x: f64) -> f64 {
    if x.abs() < 5e-16 {
        0.0
    } else {
        x
    }
}

/// The N-cusped hypocycloid (N-1)e^{it} + e^{-i(N-1)t}.
pub fn hypocycloid(rank: usize, samples: usize) -> Vec<Complex64> {
    let a = (rank - 1) as f64;
    (0..samples)
        .map(|s| {
            let t = 2.0 * PI * s as f64 / samples as f64;
            Complex64::new(a * t.cos() + (a * t).cos(), a * t.sin() - (a * t).sin())
        })
        .collect()
}

/// Winding number of the closed polygon around z, and the distance from z to it.
pub fn winding_and_distance(poly: &[Complex64], z: Complex64) -> (i64, f64) {
    let mut angle = 0.0;
    let mut dist = f64::INFINITY;
    for i in 0..poly.len() {
        let a = poly[i] - z;
        let b = poly[(i + 1) % poly.len()] - z;
        angle += (b / a).arg();
        let d = poly[(i + 1) % poly.len()] - poly[i];
        let t = ((z - poly[i]) * d.conj()).re / d.norm_sqr();
        let p = poly[i] + d * t.clamp(0.0, 1.0);
        dist = dist.min((z - p).norm());
    }
    ((angle / (2.0 * PI)).round() as i64, dist)
}

/// SVG of the hypocycloid with the circle of radius N and an optional overlay of
/// first coordinates; marker radius grows with multiplicity.
pub fn hypocycloid_svg(rank: usize, overlay: Option<&[(Complex64, usize)]>) -> String {
    let r = rank as f64;
    let scale = 40.0;
    let size = 2.0 * (r + 0.5) * scale;
    let c = size / 2.0;
    let map = |z: Complex64| (c + z.re * scale, c - z.im * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="0" y1="{c:.2}" x2="{size:.2}" y2="{c:.2}" stroke="gray" stroke-width="0.5"/>"#
    );
    let _ = writeln!(
        s,
        r#"<line x1="{c:.2}" y1="0" x2="{c:.2}" y2="{size:.2}" stroke="gray" stroke-width="0.5"/>"#
    );
    let _ = writeln!(
        s,
        r#"<circle cx="{c:.2}" cy="{c:.2}" r="{:.2}" fill="none" stroke="black" stroke-width="1"/>"#,
        r * scale
    );
    let pts: Vec<String> = hypocycloid(rank, 720)
        .into_iter()
        .map(|z| {
            let (x, y) = map(z);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="red" stroke-width="2.5"/>"#,
        pts.join(" ")
    );
    for &(z, mult) in overlay.unwrap_or(&[]) {
        let (x, y) = map(z);
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.1}" fill="blue"/>"#,
            2.5 * (mult as f64).sqrt() + 0.5
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn sl2_points() {
        for order in 2..10u32 {
            for k in 0..=(order as i64 - 2) {
                let p = z_values(2, order, &w(&[k]));
                let want = 2.0 * (PI * (k + 1) as f64 / order as f64).cos();
                assert!((p.z[0].embed().re - want).abs() < 1e-12);
            }
        }
        assert!(z_values(2, 2, &w(&[0])).z[0].is_zero());
        let v = KVariety::new(2, 1).unwrap();
        let mut xs: Vec<i64> = v
            .points
            .iter()
            .map(|p| p.z[0].as_integer().unwrap().try_into().unwrap())
            .collect();
        xs.sort();
        assert_eq!(xs, vec![-1, 1]);
    }

    #[test]
    fn two_routes_agree() {
        for rank in 2..=5 {
            for e in 0..=4u32 {
                for k in dominant_upto(rank, e) {
                    let order = rank as u32 + e;
                    assert_eq!(z_values(rank, order, &k), z_values_character(rank, order, &k));
                }
            }
        }
    }

    #[test]
    fn rotation_and_conjugation() {
        for rank in 2..=5usize {
            for e in 0..=5u32 {
                let v = KVariety::new(rank, e).unwrap();
                let order = rank as u32 + e;
                let zeta = CycQ::root(v.n, 2 * order as i64);
                let set: HashSet<Vec<CycQ>> = v.points.iter().map(|p| p.z.clone()).collect();
                for (idx, p) in v.points.iter().enumerate() {
                    let q = &v.points[v.alcove.rot[idx]];
                    for i in 0..rank - 1 {
                        assert_eq!(q.z[i], &p.z[i] * &zeta.pow(i as u64 + 1).inv().unwrap());
                        assert_eq!(p.z[rank - 2 - i], p.z[i].conj());
                        assert!(p.z[0].embed().norm() < rank as f64);
                    }
                    let conj: Vec<CycQ> = p.z.iter().map(|x| x.conj()).collect();
                    assert!(set.contains(&conj));
                }
            }
        }
    }

    #[test]
    fn vanishing_small() {
        for (rank, e) in [(2, 4), (3, 3), (4, 2)] {
            KVariety::new(rank, e).unwrap().check_vanishing().unwrap();
        }
    }

    #[test]
    fn points_inside_hypocycloid() {
        for (rank, e) in [(3, 4), (4, 2), (5, 2)] {
            let poly = hypocycloid(rank, 20000);
            for p in &KVariety::new(rank, e).unwrap().points {
                let (wn, d) = winding_and_distance(&poly, p.z[0].embed());
                assert_ne!(wn, 0);
                assert!(d > 1e-9);
            }
        }
    }

    #[test]
    fn svg_and_csv() {
        let v = KVariety::new(4, 2).unwrap();
        let cl = v.first_coordinate_clusters();
        assert_eq!(cl.len(), 9);
        assert_eq!(cl.iter().filter(|c| c.1 == 2).count(), 1);
        let svg = hypocycloid_svg(4, Some(&cl));
        assert_eq!(svg.matches("fill=\"blue\"").count(), 9);
        let csv = v.to_csv();
        assert!(csv.starts_with("# cyclotomic-order 48\nk1,k2,k3,re_Z1"));
        assert_eq!(csv.lines().count(), 12);
    }
}

//! Fraction-free elimination over Q(zeta_n).

use super::CycQ;

/// Determinant by Bareiss elimination with row pivoting.
///
/// Each step divides by the previous pivot, which is exact. Only the final
/// pivot carries the determinant, so intermediate entries stay small.
pub fn det_bareiss(mat: &[Vec<CycQ>], n: u32) -> CycQ {
    let size = mat.len();
    if size == 0 {
        return CycQ::one(n);
    }
    let mut a: Vec<Vec<CycQ>> = mat.to_vec();
    let mut sign = false;
    let mut prev = CycQ::one(n);
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return CycQ::zero(n),
            }
        }
        let prev_inv = prev.inv().expect("nonzero pivot");
        for i in k + 1..size {
            for j in k + 1..size {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = &t * &prev_inv;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant by cofactor-free Leibniz expansion; for cross-checks on small sizes.
pub fn det_leibniz(mat: &[Vec<CycQ>], n: u32) -> CycQ {
    let size = mat.len();
    let mut perm: Vec<usize> = (0..size).collect();
    let mut acc = CycQ::zero(n);
    permute(&mut perm, 0, false, &mut |p, odd| {
        let mut t = CycQ::one(n);
        for (i, &j) in p.iter().enumerate() {
            t = &t * &mat[i][j];
        }
        acc = if odd { &acc - &t } else { &acc + &t };
    });
    acc
}

/// Heap-free recursive permutation walk tracking parity.
pub fn permute(p: &mut Vec<usize>, k: usize, odd: bool, f: &mut dyn FnMut(&[usize], bool)) {
    if k == p.len() {
        f(p, odd);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, odd ^ (i != k), f);
        p.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vandermonde() {
        // det(w^{ij}) = prod_{i<j} (w^j - w^i) for w a primitive m-th root
        for m in 2..=7u32 {
            let n = m;
            let mat: Vec<Vec<CycQ>> = (0..m as i64)
                .map(|i| (0..m as i64).map(|j| CycQ::root(n, i * j)).collect())
                .collect();
            let mut want = CycQ::one(n);
            for i in 0..m as i64 {
                for j in i + 1..m as i64 {
                    want = &want * &(CycQ::root(n, j) - CycQ::root(n, i));
                }
            }
            assert_eq!(det_bareiss(&mat, n), want, "m = {m}");
            assert_eq!(det_leibniz(&mat, n), want);
        }
    }

    #[test]
    fn pivoting_and_singular() {
        let n = 12;
        let c = |k: i64| CycQ::from_int(n, k);
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(det_bareiss(&m, n), c(-1));
        let s = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert!(det_bareiss(&s, n).is_zero());
    }
}

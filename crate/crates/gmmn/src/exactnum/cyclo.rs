//! Elements of Q(zeta_n) in the power basis 1, z, .., z^(phi(n)-1).

use super::nt::euler_phi;
use super::BigRat;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),
}

/// Per-order tables: Phi_n and the reduction of every power z^k, k < n.
pub struct CycField {
    pub n: u32,
    pub phi: usize,
    /// Coefficients of Phi_n, low degree first; monic.
    pub cyclo: Vec<i64>,
    /// reduce[k] = coefficients of z^k mod Phi_n.
    reduce: Vec<Vec<i64>>,
    max_reduce: i64,
    trig: Vec<Complex64>,
}

fn poly_mul_i(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    if r.len() <= dd {
        return vec![0];
    }
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                r[i + j] -= c * d;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d.
fn cyclotomic_poly(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut den = vec![1i64];
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_poly(d, cache);
            den = poly_mul_i(&den, &pd);
        }
    }
    let p = poly_div_monic(&num, &den);
    cache.insert(n, p.clone());
    p
}

impl CycField {
    fn build(n: u32) -> CycField {
        assert!(n >= 1);
        let mut cache = HashMap::new();
        let cyclo = cyclotomic_poly(n, &mut cache);
        let phi = euler_phi(n as u64) as usize;
        assert_eq!(cyclo.len(), phi + 1);
        let mut reduce = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            reduce.push(cur.clone());
            // multiply by z, then fold the top coefficient using Phi_n
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for (j, c) in next.iter_mut().enumerate() {
                    *c -= top * cyclo[j];
                }
            }
            cur = next;
        }
        let max_reduce = reduce
            .iter()
            .flat_map(|r| r.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(1)
            .max(1);
        let trig = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        CycField {
            n,
            phi,
            cyclo,
            reduce,
            max_reduce,
            trig,
        }
    }

    pub fn get(n: u32) -> Arc<CycField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
        let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().unwrap();
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(CycField::build(n)))
            .clone()
    }

    /// Reduce a vector indexed by exponents mod n into the power basis.
    fn reduce_wide(&self, wide: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.phi];
        for (k, c) in wide.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &r) in self.reduce[k].iter().enumerate() {
                if r != 0 {
                    out[j] += c * r;
                }
            }
        }
        out
    }

    fn reduce_wide_i128(&self, wide: &[i128]) -> Vec<BigInt> {
        let mut out = vec![0i128; self.phi];
        for (k, &c) in wide.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &r) in self.reduce[k].iter().enumerate() {
                out[j] += c * r as i128;
            }
        }
        out.into_iter().map(BigInt::from).collect()
    }
}

/// An element of Q(zeta_n), stored as integer numerators over a common
/// positive denominator, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycQ {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycQ {
    fn field(&self) -> Arc<CycField> {
        CycField::get(self.n)
    }

    fn from_parts(n: u32, mut num: Vec<BigInt>, mut den: BigInt) -> CycQ {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            den = BigInt::one();
        } else if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = den / g;
        }
        CycQ { n, num, den }
    }

    pub fn zero(n: u32) -> CycQ {
        let phi = euler_phi(n as u64) as usize;
        CycQ {
            n,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(n: u32) -> CycQ {
        CycQ::from_int(n, 1)
    }

    pub fn from_int(n: u32, k: i64) -> CycQ {
        let mut z = CycQ::zero(n);
        z.num[0] = BigInt::from(k);
        z
    }

    pub fn from_bigint(n: u32, k: BigInt) -> CycQ {
        let mut z = CycQ::zero(n);
        z.num[0] = k;
        z
    }

    pub fn from_rat(n: u32, q: &BigRat) -> CycQ {
        let mut num = vec![BigInt::zero(); euler_phi(n as u64) as usize];
        num[0] = q.numer().clone();
        CycQ::from_parts(n, num, q.denom().clone())
    }

    /// Build from rational coefficients of 1, z, z^2, .. (any length; reduced mod Phi_n).
    pub fn from_coeffs(n: u32, coeffs: &[BigRat]) -> CycQ {
        let f = CycField::get(n);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut wide = vec![BigInt::zero(); n as usize];
        for (k, c) in coeffs.iter().enumerate() {
            wide[k % n as usize] += c.numer() * (&den / c.denom());
        }
        CycQ::from_parts(n, f.reduce_wide(&wide), den)
    }

    /// zeta_n^k.
    pub fn root(n: u32, k: i64) -> CycQ {
        CycQ::root_sum(n, [(k, 1i64)])
    }

    /// Sum of c * zeta_n^k over the given (k, c) terms.
    pub fn root_sum<I: IntoIterator<Item = (i64, i64)>>(n: u32, terms: I) -> CycQ {
        let f = CycField::get(n);
        let mut wide = vec![0i128; n as usize];
        for (k, c) in terms {
            wide[k.rem_euclid(n as i64) as usize] += c as i128;
        }
        CycQ {
            n,
            num: f.reduce_wide_i128(&wide),
            den: BigInt::one(),
        }
    }

    /// Element given by integer coefficients on every power 0..n-1 (wide form).
    pub fn from_wide(n: u32, wide: &[i128]) -> CycQ {
        let f = CycField::get(n);
        assert_eq!(wide.len(), n as usize);
        CycQ {
            n,
            num: f.reduce_wide_i128(wide),
            den: BigInt::one(),
        }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> Vec<BigRat> {
        self.num
            .iter()
            .map(|c| BigRat::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) if the element is rational.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRat::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Reduction mod Phi_n of the stored form; a no-op on canonical values.
    pub fn reduce(&self) -> CycQ {
        let f = self.field();
        let mut wide = vec![BigInt::zero(); self.n as usize];
        for (k, c) in self.num.iter().enumerate() {
            wide[k] = c.clone();
        }
        CycQ::from_parts(self.n, f.reduce_wide(&wide), self.den.clone())
    }

    fn check(&self, o: &CycQ) {
        assert_eq!(self.n, o.n, "cyclotomic orders differ");
    }

    pub fn scale_int(&self, k: &BigInt) -> CycQ {
        if k.is_zero() {
            return CycQ::zero(self.n);
        }
        CycQ::from_parts(self.n, self.num.iter().map(|c| c * k).collect(), self.den.clone())
    }

    pub fn scale(&self, q: &BigRat) -> CycQ {
        CycQ::from_parts(
            self.n,
            self.num.iter().map(|c| c * q.numer()).collect(),
            &self.den * q.denom(),
        )
    }

    fn bits(v: &[BigInt]) -> u64 {
        v.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn mul_ref(&self, o: &CycQ) -> CycQ {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return CycQ::zero(self.n);
        }
        let f = self.field();
        let n = self.n as usize;
        let phi = f.phi;
        let log = |x: u64| 64 - x.leading_zeros() as u64;
        let budget = Self::bits(&self.num)
            + Self::bits(&o.num)
            + 2 * log(phi as u64 + 1)
            + log(f.max_reduce as u64 + 1)
            + 2;
        let num = if budget < 120 {
            let a: Vec<i128> = self.num.iter().map(|c| c.to_i128().unwrap()).collect();
            let b: Vec<i128> = o.num.iter().map(|c| c.to_i128().unwrap()).collect();
            let mut wide = vec![0i128; n];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    if y != 0 {
                        let k = (i + j) % n;
                        wide[k] += x * y;
                    }
                }
            }
            f.reduce_wide_i128(&wide)
        } else {
            let mut wide = vec![BigInt::zero(); n];
            for (i, x) in self.num.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in o.num.iter().enumerate() {
                    if !y.is_zero() {
                        wide[(i + j) % n] += x * y;
                    }
                }
            }
            f.reduce_wide(&wide)
        };
        CycQ::from_parts(self.n, num, &self.den * &o.den)
    }

    pub fn add_ref(&self, o: &CycQ) -> CycQ {
        self.check(o);
        if self.den == o.den {
            let num = self.num.iter().zip(&o.num).map(|(a, b)| a + b).collect();
            return CycQ::from_parts(self.n, num, self.den.clone());
        }
        let den = self.den.lcm(&o.den);
        let fa = &den / &self.den;
        let fb = &den / &o.den;
        let num = self
            .num
            .iter()
            .zip(&o.num)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        CycQ::from_parts(self.n, num, den)
    }

    pub fn sub_ref(&self, o: &CycQ) -> CycQ {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> CycQ {
        CycQ {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, mut k: u64) -> CycQ {
        let mut base = self.clone();
        let mut acc = CycQ::one(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            k >>= 1;
        }
        acc
    }

    /// Complex conjugation z -> z^-1.
    pub fn conj(&self) -> CycQ {
        let f = self.field();
        let n = self.n as usize;
        let mut wide = vec![BigInt::zero(); n];
        for (k, c) in self.num.iter().enumerate() {
            wide[(n - k) % n] += c;
        }
        CycQ::from_parts(self.n, f.reduce_wide(&wide), self.den.clone())
    }

    /// Galois automorphism z -> z^a, gcd(a, n) = 1.
    pub fn galois(&self, a: i64) -> CycQ {
        let f = self.field();
        let n = self.n as i64;
        let mut wide = vec![BigInt::zero(); n as usize];
        for (k, c) in self.num.iter().enumerate() {
            wide[(k as i64 * a).rem_euclid(n) as usize] += c;
        }
        CycQ::from_parts(self.n, f.reduce_wide(&wide), self.den.clone())
    }

    /// The same number in Q(zeta_m), where n divides m.
    pub fn lift(&self, m: u32) -> CycQ {
        assert!(m % self.n == 0, "cannot lift Q(zeta_{}) into Q(zeta_{})", self.n, m);
        let f = CycField::get(m);
        let step = (m / self.n) as usize;
        let mut wide = vec![BigInt::zero(); m as usize];
        for (k, c) in self.num.iter().enumerate() {
            wide[k * step] += c;
        }
        CycQ::from_parts(m, f.reduce_wide(&wide), self.den.clone())
    }

    pub fn inv(&self) -> Result<CycQ, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.n));
        }
        let f = self.field();
        // extended Euclid in Q[x]: find u with a*u = 1 mod Phi_n
        let a: Vec<BigRat> = self.coeffs();
        let m: Vec<BigRat> = f.cyclo.iter().map(|&c| BigRat::from_integer(c.into())).collect();
        let (g, u) = rat_ext_gcd(&m, &a);
        assert!(g.len() == 1, "Phi_n is irreducible, gcd must be constant");
        let g0 = g[0].clone();
        let coeffs: Vec<BigRat> = u.iter().map(|c| c / &g0).collect();
        let out = CycQ::from_coeffs(self.n, &coeffs);
        debug_assert!(out.mul_ref(self).is_one());
        Ok(out)
    }

    pub fn div_ref(&self, o: &CycQ) -> Result<CycQ, CycError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    /// Numeric value in C (double precision).
    pub fn embed(&self) -> Complex64 {
        let f = self.field();
        let den = self.den.to_f64().unwrap();
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                acc += f.trig[k] * c.to_f64().unwrap();
            }
        }
        acc / den
    }

    /// Degree-one exponent if the element is +-zeta_n^k.
    pub fn as_root(&self) -> Option<(i64, i64)> {
        (0..self.n as i64)
            .flat_map(|k| [(k, 1), (k, -1)])
            .find(|&(k, s)| CycQ::root_sum(self.n, [(k, s)]) == *self)
    }
}

/// Returns (g, u) with u*a = g mod m, g = gcd(m, a) (constant for coprime inputs).
fn rat_ext_gcd(m: &[BigRat], a: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let trim = |mut p: Vec<BigRat>| {
        while p.len() > 1 && p.last().unwrap().is_zero() {
            p.pop();
        }
        p
    };
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<BigRat> = vec![BigRat::zero()];
    let mut s1: Vec<BigRat> = vec![BigRat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = rat_divmod(&r0, &r1);
        let qs = rat_mul(&q, &s1);
        let s2 = trim(rat_sub(&s0, &qs));
        r0 = r1;
        r1 = trim(r);
        s0 = s1;
        s1 = s2;
    }
    (r0, s0)
}

fn rat_mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rat_sub(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRat::zero)
                - b.get(i).cloned().unwrap_or_else(BigRat::zero)
        })
        .collect()
}

fn rat_divmod(a: &[BigRat], b: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![BigRat::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRat::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (q, r)
}

impl serde::Serialize for CycQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for CycQ {
    /// `c0 + c1*z + c2*z^2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = if c.is_integer() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            };
            terms.push(match k {
                0 => cs,
                1 => format!("{}*z", cs),
                _ => format!("{}*z^{}", cs, k),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycQ[{}]({})", self.n, self)
    }
}

impl std::str::FromStr for CycQ {
    type Err = String;
    /// Parses the `Display` form; the order must be supplied as a prefix `n:`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, body) = s.split_once(':').ok_or("missing order prefix")?;
        let n: u32 = n.trim().parse().map_err(|_| "bad order")?;
        parse_cyc(n, body)
    }
}

/// Parse `c0 + c1*z + c2*z^2` text in Q(zeta_n).
pub fn parse_cyc(n: u32, body: &str) -> Result<CycQ, String> {
    let body = body.trim();
    if body == "0" {
        return Ok(CycQ::zero(n));
    }
    let mut coeffs: Vec<BigRat> = vec![BigRat::zero(); n as usize];
    for term in body.split(" + ") {
        let term = term.trim();
        let (c, k) = match term.split_once("*z") {
            None => (term, 0usize),
            Some((c, rest)) => {
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.trim_start_matches('^').parse().map_err(|_| format!("bad exponent in {term}"))?
                };
                (c, k)
            }
        };
        let q: BigRat = match c.split_once('/') {
            Some((a, b)) => BigRat::new(
                a.parse().map_err(|_| format!("bad numerator in {term}"))?,
                b.parse().map_err(|_| format!("bad denominator in {term}"))?,
            ),
            None => BigRat::from_integer(c.parse().map_err(|_| format!("bad coefficient in {term}"))?),
        };
        if k >= n as usize {
            return Err(format!("exponent {k} out of range"));
        }
        coeffs[k] += q;
    }
    Ok(CycQ::from_coeffs(n, &coeffs))
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&CycQ> for &CycQ {
            type Output = CycQ;
            fn $m(self, o: &CycQ) -> CycQ {
                self.$f(o)
            }
        }
        impl $tr<CycQ> for CycQ {
            type Output = CycQ;
            fn $m(self, o: CycQ) -> CycQ {
                self.$f(&o)
            }
        }
        impl $tr<&CycQ> for CycQ {
            type Output = CycQ;
            fn $m(self, o: &CycQ) -> CycQ {
                self.$f(o)
            }
        }
    };
}
forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        self.neg_ref()
    }
}

impl Neg for &CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        self.neg_ref()
    }
}

pub fn sum_all(n: u32, xs: impl IntoIterator<Item = CycQ>) -> CycQ {
    xs.into_iter().fold(CycQ::zero(n), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let mut c = HashMap::new();
        assert_eq!(cyclotomic_poly(1, &mut c), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4, &mut c), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6, &mut c), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12, &mut c), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of absolute value 2
        let p = cyclotomic_poly(105, &mut c);
        assert_eq!(p.len(), 49);
        assert_eq!(p.iter().map(|x| x.abs()).max(), Some(2));
    }

    #[test]
    fn roots() {
        let i = CycQ::root(4, 1);
        assert_eq!(&i * &i, CycQ::from_int(4, -1));
        assert_eq!(CycQ::root(12, 6), CycQ::from_int(12, -1));
        for n in [1u32, 2, 3, 5, 8, 12, 36, 72] {
            for k in -20..20 {
                assert!((CycQ::root(n, k) * CycQ::root(n, -k)).is_one());
            }
        }
    }

    #[test]
    fn inverse() {
        assert!(CycQ::one(7).inv().unwrap().is_one());
        assert_eq!(CycQ::root(9, 1).inv().unwrap(), CycQ::root(9, 8));
        let x = CycQ::root_sum(5, [(0, 1), (1, 1)]);
        assert!((x.inv().unwrap() * &x).is_one());
        assert_eq!(CycQ::zero(5).inv(), Err(CycError::DivisionByZero(5)));
    }

    #[test]
    fn embedding() {
        let x = CycQ::root_sum(8, [(1, 1), (-1, 1)]);
        let v = x.embed();
        assert!((v.re - 2f64.sqrt()).abs() < 1e-12 && v.im.abs() < 1e-12);
        assert_eq!(CycQ::one(10).embed(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn text_round_trip() {
        let x = CycQ::root_sum(36, [(3, 2), (7, -1), (0, 5)]).scale(&BigRat::new(1.into(), 3.into()));
        let s = x.to_string();
        assert_eq!(parse_cyc(36, &s).unwrap(), x);
        assert_eq!(format!("36:{s}").parse::<CycQ>().unwrap(), x);
    }

    #[test]
    fn lift_and_galois() {
        let x = CycQ::root(6, 1);
        let y = x.lift(36);
        assert_eq!(y, CycQ::root(36, 6));
        assert_eq!(CycQ::root(12, 1).galois(5), CycQ::root(12, 5));
        assert_eq!(CycQ::root(12, 1).galois(-1), CycQ::root(12, 1).conj());
    }
}
